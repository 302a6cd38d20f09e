//! Slow reference computations used to cross-check the main algorithms.
//!
//! Nothing here touches the echelon forms of [`crate::gf_space`]: subspaces
//! are handled as explicit sorted element lists, built with separate digit
//! arithmetic. Packing is shared (`v = sum c_i q^i`) so results can be
//! compared directly.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::gf_space::Subspace;
use crate::group_action::CyclicGroup;

fn digits(v: u64, q: u32, n: u32) -> Vec<u32> {
    let mut v = v;
    (0..n)
        .map(|_| {
            let d = (v % q as u64) as u32;
            v /= q as u64;
            d
        })
        .collect()
}

/// `a + c * b` coordinatewise mod `q`.
fn add_scaled(a: u64, c: u32, b: u64, q: u32, n: u32) -> u64 {
    let q = q as u64;
    let (mut a, mut b, mut place, mut out) = (a, b, 1u64, 0u64);
    for _ in 0..n {
        out += (a % q + c as u64 * (b % q)) % q * place;
        a /= q;
        b /= q;
        place *= q;
    }
    out
}

/// `{s + c v : s in set, c in F_q}`, sorted.
fn extend(set: &[u64], v: u64, q: u32, n: u32) -> Vec<u64> {
    let mut next = Vec::with_capacity(set.len() * q as usize);
    for &s in set {
        for c in 0..q {
            next.push(add_scaled(s, c, v, q, n));
        }
    }
    next.sort_unstable();
    next.dedup();
    next
}

/// Every vector of the span, sorted.
pub fn span_elements(vectors: &[u64], q: u32, n: u32) -> Vec<u64> {
    let mut set: Vec<u64> = vec![0];
    for &v in vectors {
        if set.binary_search(&v).is_ok() {
            continue;
        }
        set = extend(&set, v, q, n);
    }
    set
}

pub fn subspace_elements(s: &Subspace) -> Vec<u64> {
    let p = s.params();
    span_elements(s.rows(), p.q(), p.n())
}

/// Sorted-list inclusion.
fn is_subset(small: &[u64], big: &[u64]) -> bool {
    small.iter().all(|x| big.binary_search(x).is_ok())
}

/// The number of `k`-subspaces of `F_q^n`, found by growing subspaces one
/// vector at a time and deduplicating element sets.
pub fn count_subspaces(q: u32, n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let total = (q as u64).pow(n);
    let mut level: Vec<Vec<u64>> = vec![vec![0u64]];
    for _ in 0..k {
        let grown: Vec<Vec<u64>> = level
            .par_iter()
            .flat_map_iter(|s| {
                let mut seen = vec![false; total as usize];
                for &x in s {
                    seen[x as usize] = true;
                }
                let mut out = Vec::new();
                for v in 0..total {
                    if seen[v as usize] {
                        continue;
                    }
                    let e = extend(s, v, q, n);
                    for &x in &e {
                        seen[x as usize] = true;
                    }
                    out.push(e);
                }
                out
            })
            .collect();
        let unique: HashSet<Vec<u64>> = grown.into_iter().collect();
        level = unique.into_iter().collect();
    }
    level.len() as u64
}

/// `M v` for `M` given by packed columns.
fn mat_vec(cols: &[u64], v: u64, q: u32, n: u32) -> u64 {
    digits(v, q, n)
        .iter()
        .zip(cols)
        .fold(0u64, |acc, (&c, &col)| add_scaled(acc, c, col, q, n))
}

/// `|{K' in G(K) : T <= K'}|` by walking the whole group.
pub fn km_entry(t: &Subspace, k: &Subspace, group: &CyclicGroup) -> u64 {
    let p = k.params();
    let (q, n) = (p.q(), p.n());
    let cols = group.generator().columns();
    let t_elems = subspace_elements(t);
    let mut cur = subspace_elements(k);
    let mut orbit: HashSet<Vec<u64>> = HashSet::new();
    for _ in 0..group.order() {
        orbit.insert(cur.clone());
        let mut img: Vec<u64> = cur.iter().map(|&v| mat_vec(cols, v, q, n)).collect();
        img.sort_unstable();
        cur = img;
    }
    orbit.iter().filter(|e| is_subset(&t_elems, e)).count() as u64
}

/// For each `T` in `ts`, the number of blocks containing it, by testing
/// every pair.
pub fn coverage_scan(blocks: &[Subspace], ts: &[Subspace]) -> Vec<u64> {
    let block_elems: Vec<Vec<u64>> = blocks.par_iter().map(subspace_elements).collect();
    ts.par_iter()
        .map(|t| {
            let te = subspace_elements(t);
            block_elems.iter().filter(|b| is_subset(&te, b)).count() as u64
        })
        .collect()
}

/// Number of exact covers of `0..universe` by `options`, by trying every
/// subset. Only for small inputs (at most 24 options).
pub fn exact_cover_count(universe: usize, options: &[Vec<u32>]) -> usize {
    assert!(options.len() <= 24, "brute force only for tiny instances");
    (0u32..1 << options.len())
        .filter(|&mask| {
            let mut hits = vec![0u32; universe];
            for (o, items) in options.iter().enumerate() {
                if mask >> o & 1 == 1 {
                    for &i in items {
                        match hits.get_mut(i as usize) {
                            Some(h) => *h += 1,
                            None => return false,
                        }
                    }
                }
            }
            hits.iter().all(|&h| h == 1)
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(count_subspaces(2, 3, 1), 7);
        assert_eq!(count_subspaces(2, 4, 2), 35);
        assert_eq!(count_subspaces(3, 3, 1), 13);
        assert_eq!(count_subspaces(2, 2, 0), 1);
        assert_eq!(count_subspaces(2, 2, 3), 0);
    }

    #[test]
    fn span_in_f3() {
        assert_eq!(span_elements(&[1], 3, 2), vec![0, 1, 2]);
        assert_eq!(span_elements(&[1, 3], 3, 2).len(), 9);
    }

    #[test]
    fn brute_exact_cover() {
        let edges = vec![vec![0, 1], vec![2, 3], vec![0, 2], vec![1, 3]];
        assert_eq!(exact_cover_count(4, &edges), 2);
        assert_eq!(exact_cover_count(2, &[vec![0, 0]]), 0);
    }
}
