//! Matrix groups over `F_q` acting on subspaces, cyclic groups and orbit
//! partitions of a Grassmannian.

use std::fmt;

use rand::Rng;

use crate::error::{param, Error, Result};
use crate::gf_space::{FieldParams, Rows, Subspace, SubspaceIndex};

/// Columns of the Singer cycle generating the automorphism group of the
/// published `LS_2[3](2,3,8)`: column `j` is the image of `e_j`, bit `i` is
/// row `i`. This is the companion matrix of `x^8 + x^4 + x^3 + x^2 + 1`.
pub const SINGER_PAPER_COLUMNS: [u64; 8] = [2, 4, 8, 16, 32, 64, 128, 29];

/// An invertible `n x n` matrix over `F_q`, stored by columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    params: FieldParams,
    cols: Vec<u64>,
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement{:?}", self.cols)
    }
}

impl GroupElement {
    /// `cols[j]` is the packed image of the `j`-th unit vector.
    pub fn from_columns(params: FieldParams, cols: Vec<u64>) -> Result<Self> {
        if cols.len() != params.n() as usize {
            return param(format!(
                "matrix has {} columns, expected {}",
                cols.len(),
                params.n()
            ));
        }
        let s = Subspace::span(params, cols.iter().copied())?;
        if s.dim() != params.n() {
            return param("matrix is not invertible");
        }
        Ok(GroupElement { params, cols })
    }

    /// From row-major entries `rows[i][j]`.
    pub fn from_entries(params: FieldParams, rows: &[Vec<u32>]) -> Result<Self> {
        let n = params.n() as usize;
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return param(format!("matrix must be {n} x {n}"));
        }
        if rows.iter().flatten().any(|&e| e >= params.q()) {
            return param(format!("matrix entry outside F_{}", params.q()));
        }
        let q = params.q() as u64;
        let cols = (0..n)
            .map(|j| (0..n).rev().fold(0u64, |acc, i| acc * q + rows[i][j] as u64))
            .collect();
        Self::from_columns(params, cols)
    }

    pub fn identity(params: FieldParams) -> Self {
        let cols = Subspace::full(params).rows().to_vec();
        GroupElement { params, cols }
    }

    /// Uniformly random invertible matrix (rejection sampling).
    pub fn random<R: Rng + ?Sized>(params: FieldParams, rng: &mut R) -> Self {
        let count = params.vector_count();
        loop {
            let cols: Vec<u64> = (0..params.n()).map(|_| rng.random_range(0..count)).collect();
            if let Ok(g) = Self::from_columns(params, cols) {
                return g;
            }
        }
    }

    pub fn params(&self) -> FieldParams {
        self.params
    }

    pub fn columns(&self) -> &[u64] {
        &self.cols
    }

    /// Entry in row `i`, column `j`.
    pub fn entry(&self, i: u32, j: u32) -> u32 {
        self.params.digit(self.cols[j as usize], i)
    }

    /// Matrix-vector product on a packed vector.
    #[inline]
    pub fn apply(&self, v: u64) -> u64 {
        let p = self.params;
        if p.is_binary() {
            let mut acc = 0;
            let mut bits = v;
            while bits != 0 {
                acc ^= self.cols[bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
            return acc;
        }
        (0..p.n()).fold(0, |acc, j| p.axpy(acc, p.digit(v, j), self.cols[j as usize]))
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            params: self.params,
            cols: other.cols.iter().map(|&c| self.apply(c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> GroupElement {
        let mut result = GroupElement::identity(self.params);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        result
    }

    pub fn transpose(&self) -> GroupElement {
        let p = self.params;
        let n = p.n();
        let q = p.q() as u64;
        let cols = (0..n)
            .map(|j| (0..n).rev().fold(0u64, |acc, i| acc * q + self.entry(j, i) as u64))
            .collect();
        GroupElement { params: p, cols }
    }

    /// Gauss-Jordan on `[M | I]`.
    pub fn inverse(&self) -> GroupElement {
        let p = self.params;
        let n = p.n() as usize;
        let q = p.q();
        let mut m: Vec<Vec<u32>> = (0..n)
            .map(|i| (0..n).map(|j| self.entry(i as u32, j as u32)).collect())
            .collect();
        let mut inv: Vec<Vec<u32>> = (0..n)
            .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| m[r][col] != 0).expect("invertible matrix");
            m.swap(col, piv);
            inv.swap(col, piv);
            let s = mod_inverse(m[col][col], q);
            for j in 0..n {
                m[col][j] = m[col][j] * s % q;
                inv[col][j] = inv[col][j] * s % q;
            }
            for r in 0..n {
                let f = m[r][col];
                if r != col && f != 0 {
                    for j in 0..n {
                        m[r][j] = (m[r][j] + (q - f) * m[col][j]) % q;
                        inv[r][j] = (inv[r][j] + (q - f) * inv[col][j]) % q;
                    }
                }
            }
        }
        GroupElement::from_entries(p, &inv).expect("inverse is invertible")
    }

    pub fn is_identity(&self) -> bool {
        *self == GroupElement::identity(self.params)
    }
}

fn mod_inverse(a: u32, q: u32) -> u32 {
    let mut result = 1u64;
    let mut base = a as u64;
    let mut e = q - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % q as u64;
        }
        base = base * base % q as u64;
        e >>= 1;
    }
    result as u32
}

/// `g K = {g x : x in K}`, canonicalised.
#[inline]
pub fn act(g: &GroupElement, s: &Subspace) -> Subspace {
    assert_eq!(g.params, s.params(), "group element and subspace over different spaces");
    let rows: Rows = s.rows().iter().map(|&v| g.apply(v)).collect();
    Subspace::from_rows(s.params(), rows)
}

/// The Singer cycle of the published large set.
pub fn singer_paper_generator() -> GroupElement {
    GroupElement::from_columns(FieldParams::binary(8).unwrap(), SINGER_PAPER_COLUMNS.to_vec())
        .expect("built-in matrix is invertible")
}

/// Smallest `m >= 1` with `g^m = 1`.
pub fn element_order(g: &GroupElement) -> Result<u64> {
    let cap = g.params.vector_count() - 1;
    let mut power = g.clone();
    for m in 1..=cap.max(1) {
        if power.is_identity() {
            return Ok(m);
        }
        power = power.compose(g);
    }
    Err(Error::Consistency(format!(
        "element order exceeds q^n - 1 = {cap}; matrix cannot be invertible"
    )))
}

/// The cyclic group generated by one matrix.
///
/// Two groups compare equal when their generators are the same matrix.
#[derive(Clone)]
pub struct CyclicGroup {
    generator: GroupElement,
    order: u64,
    name: Option<String>,
}

impl fmt::Debug for CyclicGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicGroup({}, order {})", self.label(), self.order)
    }
}

impl PartialEq for CyclicGroup {
    fn eq(&self, other: &Self) -> bool {
        self.generator == other.generator
    }
}

impl Eq for CyclicGroup {}

impl CyclicGroup {
    pub fn new(generator: GroupElement) -> Result<Self> {
        let order = element_order(&generator)?;
        Ok(CyclicGroup { generator, order, name: None })
    }

    pub fn trivial(params: FieldParams) -> Self {
        CyclicGroup {
            generator: GroupElement::identity(params),
            order: 1,
            name: Some("trivial".into()),
        }
    }

    /// `<alpha>` for the built-in Singer matrix, of order 255.
    pub fn singer_paper() -> Self {
        let mut g = Self::new(singer_paper_generator()).expect("built-in generator");
        g.name = Some("singer-paper".into());
        g
    }

    /// A Singer cycle of `F_q^n`: the companion matrix of the first monic
    /// primitive polynomial of degree `n`, taking coefficient vectors in
    /// increasing packed order.
    pub fn singer(params: FieldParams) -> Result<Self> {
        let n = params.n();
        let q = params.q() as u64;
        let target = params.vector_count() - 1;
        for tail in 1..params.vector_count() {
            // tail packs -(c_0, ..., c_{n-1}); the last column of the companion matrix.
            let mut cols: Vec<u64> = (1..n).map(|j| q.pow(j)).collect();
            cols.push(tail);
            let Ok(g) = GroupElement::from_columns(params, cols) else {
                continue;
            };
            if element_order(&g)? == target {
                return Self::new(g);
            }
        }
        Err(Error::Consistency(format!("no primitive polynomial found for F_{q}^{n}")))
    }

    pub fn params(&self) -> FieldParams {
        self.generator.params
    }

    pub fn generator(&self) -> &GroupElement {
        &self.generator
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Built-in name, or `cols:` followed by the packed generator columns.
    pub fn label(&self) -> String {
        match &self.name {
            Some(name) => name.clone(),
            None => {
                let cols: Vec<String> =
                    self.generator.cols.iter().map(|c| c.to_string()).collect();
                format!("cols:{}", cols.join(","))
            }
        }
    }

    /// `generator^0, generator^1, ...`, computed lazily.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        let mut cur = GroupElement::identity(self.params());
        (0..self.order).map(move |_| {
            let out = cur.clone();
            cur = self.generator.compose(&cur);
            out
        })
    }
}

/// `G(K)` in generator order starting from `s`.
pub fn orbit(group: &CyclicGroup, s: &Subspace) -> Vec<Subspace> {
    let mut out = vec![s.clone()];
    let mut cur = act(&group.generator, s);
    while &cur != s {
        let next = act(&group.generator, &cur);
        out.push(cur);
        cur = next;
        debug_assert!(out.len() as u64 <= group.order);
    }
    out
}

/// Summary of one orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitInfo<'a> {
    pub id: u32,
    pub representative: &'a Subspace,
    pub size: usize,
}

/// The partition of all `k`-subspaces into orbits of a cyclic group.
///
/// Subspaces are numbered in enumeration order and orbits in order of their
/// least member, which is also the representative.
#[derive(Clone)]
pub struct OrbitPartition {
    group: CyclicGroup,
    index: SubspaceIndex,
    orbit_of: Vec<u32>,
    members: Vec<Vec<u32>>,
}

impl fmt::Debug for OrbitPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrbitPartition")
            .field("group", &self.group)
            .field("k", &self.index.k())
            .field("orbits", &self.members.len())
            .finish()
    }
}

impl PartialEq for OrbitPartition {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.index.k() == other.index.k()
    }
}

impl OrbitPartition {
    pub fn params(&self) -> FieldParams {
        self.index.params()
    }

    pub fn k(&self) -> u32 {
        self.index.k()
    }

    pub fn group(&self) -> &CyclicGroup {
        &self.group
    }

    pub fn index(&self) -> &SubspaceIndex {
        &self.index
    }

    pub fn orbit_count(&self) -> usize {
        self.members.len()
    }

    pub fn subspace_count(&self) -> usize {
        self.index.len()
    }

    pub fn representative(&self, orbit: u32) -> &Subspace {
        self.index.get(self.members[orbit as usize][0])
    }

    pub fn orbit_size(&self, orbit: u32) -> usize {
        self.members[orbit as usize].len()
    }

    /// Subspace ids of the members, representative first, then in generator order.
    pub fn members(&self, orbit: u32) -> &[u32] {
        &self.members[orbit as usize]
    }

    /// Orbit of the subspace with enumeration id `id`.
    pub fn orbit_of_id(&self, id: u32) -> u32 {
        self.orbit_of[id as usize]
    }

    pub fn orbit_of(&self, s: &Subspace) -> Option<u32> {
        self.index.position(s).map(|id| self.orbit_of_id(id))
    }

    pub fn orbits(&self) -> impl Iterator<Item = OrbitInfo<'_>> + '_ {
        (0..self.members.len() as u32).map(move |id| OrbitInfo {
            id,
            representative: self.representative(id),
            size: self.orbit_size(id),
        })
    }
}

/// Splits the `k`-subspaces of the group's space into orbits.
pub fn orbit_partition(group: &CyclicGroup, k: u32) -> Result<OrbitPartition> {
    let index = SubspaceIndex::new(group.params(), k)?;
    const UNSET: u32 = u32::MAX;
    let mut orbit_of = vec![UNSET; index.len()];
    let mut members: Vec<Vec<u32>> = Vec::new();
    for id in 0..index.len() as u32 {
        if orbit_of[id as usize] != UNSET {
            continue;
        }
        let orbit_id = members.len() as u32;
        let start = index.get(id);
        let mut list = vec![id];
        orbit_of[id as usize] = orbit_id;
        let mut cur = act(&group.generator, start);
        while &cur != start {
            let pos = index
                .position(&cur)
                .ok_or_else(|| Error::Consistency("image escaped the Grassmannian".into()))?;
            if orbit_of[pos as usize] != UNSET {
                return Err(Error::Consistency(format!(
                    "subspace {cur} reached from two orbits"
                )));
            }
            orbit_of[pos as usize] = orbit_id;
            list.push(pos);
            cur = act(&group.generator, &cur);
        }
        if !group.order.is_multiple_of(list.len() as u64) {
            return Err(Error::Consistency(format!(
                "orbit of size {} does not divide group order {}",
                list.len(),
                group.order
            )));
        }
        members.push(list);
    }
    Ok(OrbitPartition { group: group.clone(), index, orbit_of, members })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf_space::{decode_triple, enumerate_subspaces};
    use crate::qarith::q_binomial;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn paper_matrix_matches_printed_rows() {
        let rows: [[u32; 8]; 8] = [
            [0, 0, 0, 0, 0, 0, 0, 1],
            [1, 0, 0, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0, 0, 1],
            [0, 0, 1, 0, 0, 0, 0, 1],
            [0, 0, 0, 1, 0, 0, 0, 1],
            [0, 0, 0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 0, 0, 1, 0],
        ];
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
        let g = GroupElement::from_entries(FieldParams::binary(8).unwrap(), &rows).unwrap();
        assert_eq!(g, singer_paper_generator());
    }

    #[test]
    fn singer_paper_order_and_action() {
        let g = singer_paper_generator();
        assert_eq!(element_order(&g).unwrap(), 255);
        let p = g.params();
        assert_eq!(act(&g, &Subspace::span(p, [1]).unwrap()), Subspace::span(p, [2]).unwrap());
        let group = CyclicGroup::singer_paper();
        let points = orbit_partition(&group, 1).unwrap();
        assert_eq!(points.orbit_count(), 1);
        assert_eq!(points.orbit_size(0), 255);
    }

    #[test]
    fn element_orders() {
        let p = FieldParams::binary(4).unwrap();
        assert_eq!(element_order(&GroupElement::identity(p)).unwrap(), 1);
        let swap = GroupElement::from_columns(p, vec![2, 1, 4, 8]).unwrap();
        assert_eq!(element_order(&swap).unwrap(), 2);
    }

    #[test]
    fn non_invertible_matrix_is_rejected() {
        let p = FieldParams::binary(3).unwrap();
        assert!(GroupElement::from_columns(p, vec![1, 2, 3]).is_err());
        assert!(GroupElement::from_columns(p, vec![1, 2]).is_err());
    }

    #[test]
    fn inverse_transpose_and_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (q, n) in [(2, 6), (3, 4), (5, 3)] {
            let p = FieldParams::new(q, n).unwrap();
            for _ in 0..20 {
                let g = GroupElement::random(p, &mut rng);
                assert!(g.compose(&g.inverse()).is_identity());
                assert!(g.inverse().compose(&g).is_identity());
                assert_eq!(g.transpose().transpose(), g);
                assert_eq!(g.transpose().entry(1, 2), g.entry(2, 1));
                let s = Subspace::span(p, [1, 7]).unwrap();
                assert_eq!(act(&g, &act(&g.inverse(), &s)), s);
                assert_eq!(act(&GroupElement::identity(p), &s), s);
            }
        }
    }

    #[test]
    fn action_is_a_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 2..=6 {
            let p = FieldParams::binary(n).unwrap();
            let all: Vec<_> = (1..n).flat_map(|k| enumerate_subspaces(p, k).unwrap()).collect();
            for _ in 0..50 {
                let g = GroupElement::random(p, &mut rng);
                let h = GroupElement::random(p, &mut rng);
                let s = &all[rng.random_range(0..all.len())];
                let gh = act(&g.compose(&h), s);
                assert_eq!(gh, act(&g, &act(&h, s)));
                assert_eq!(gh.dim(), s.dim());
            }
        }
    }

    #[test]
    fn singer_search_finds_full_order() {
        for (q, n) in [(2, 1), (2, 3), (2, 5), (3, 3), (5, 2)] {
            let p = FieldParams::new(q, n).unwrap();
            let g = CyclicGroup::singer(p).unwrap();
            assert_eq!(g.order(), p.vector_count() - 1);
            assert_eq!(g.elements().count() as u64, g.order());
        }
    }

    #[test]
    fn orbits_of_three_subspaces_are_full_length() {
        let group = CyclicGroup::singer_paper();
        let s = decode_triple(1, 112, 128, group.params()).unwrap();
        assert_eq!(orbit(&group, &s).len(), 255);
        let part = orbit_partition(&group, 3).unwrap();
        assert_eq!(part.orbit_count(), 381);
        assert!(part.orbits().all(|o| o.size == 255));
    }

    #[test]
    fn line_orbits_sum_to_gaussian_binomial() {
        let group = CyclicGroup::singer_paper();
        let part = orbit_partition(&group, 2).unwrap();
        let sizes: Vec<usize> = part.orbits().map(|o| o.size).collect();
        assert_eq!(sizes.iter().sum::<usize>() as u64, q_binomial(8, 2, 2).unwrap());
        assert!(sizes.iter().all(|s| 255 % s == 0));
        assert!(sizes.iter().any(|&s| s < 255));
    }

    #[test]
    fn partition_properties_and_closure() {
        for (q, n, k) in [(2, 5, 2), (3, 3, 1), (2, 6, 3)] {
            let p = FieldParams::new(q, n).unwrap();
            let group = CyclicGroup::singer(p).unwrap();
            let part = orbit_partition(&group, k).unwrap();
            let mut seen = vec![false; part.subspace_count()];
            for o in part.orbits() {
                assert_eq!(group.order() as usize % o.size, 0);
                for &m in part.members(o.id) {
                    assert!(!seen[m as usize]);
                    seen[m as usize] = true;
                    assert!(part.index().get(m) >= o.representative);
                }
                let image = act(group.generator(), o.representative);
                assert_eq!(part.orbit_of(&image), Some(o.id));
            }
            assert!(seen.into_iter().all(|b| b));
        }
    }

    #[test]
    fn trivial_group_has_singleton_orbits() {
        let p = FieldParams::binary(4).unwrap();
        let part = orbit_partition(&CyclicGroup::trivial(p), 2).unwrap();
        assert_eq!(part.orbit_count(), 35);
        let s = part.representative(3).clone();
        assert_eq!(orbit(part.group(), &s), vec![s]);
        assert_eq!(part.group().label(), "trivial");
    }

    #[test]
    fn labels() {
        assert_eq!(CyclicGroup::singer_paper().label(), "singer-paper");
        let t = CyclicGroup::new(singer_paper_generator().transpose()).unwrap();
        assert_eq!(t.label(), "cols:128,1,130,132,136,16,32,64");
        assert_eq!(t.order(), 255);
    }
}
