//! Vectors and subspaces of `F_q^n` for prime `q`.
//!
//! A vector is packed into a single `u64` as `sum c_i q^i`, so coordinate `i`
//! is digit `i` in base `q`. Over `F_2` this is the bit convention of the
//! published triple encoding: bit `i` is coordinate `i`. Binary arithmetic
//! runs on the packed words directly; other primes unpack to digit arrays.
//!
//! Subspaces are stored by their reduced row echelon basis. The pivot of a
//! row is its lowest nonzero coordinate, pivots increase strictly down the
//! rows, pivot entries are 1 and pivot columns are zero in every other row.
//! The basis is therefore canonical and equality of [`Subspace`] values is
//! equality of subspaces.

use std::fmt;

use rustc_hash::FxHashMap;
use serde::Serialize;
use smallvec::SmallVec;

use crate::error::{param, Error, Result};
use crate::qarith::q_binomial;

/// Largest supported ambient dimension.
pub const MAX_DIMENSION: u32 = 31;

/// Largest Grassmannian that [`enumerate_subspaces`] will materialise.
pub const ENUMERATION_LIMIT: u64 = 20_000_000;

pub(crate) type Rows = SmallVec<[u64; 4]>;
type Digits = [u8; MAX_DIMENSION as usize];

/// Field order and ambient dimension of `V = F_q^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FieldParams {
    q: u32,
    n: u32,
}

impl FieldParams {
    /// `q` must be a prime below 256 and `q^n` must fit in a `u64`.
    pub fn new(q: u32, n: u32) -> Result<Self> {
        if !(2..256).contains(&q) || !is_prime(q) {
            return param(format!("field order q = {q} is not a supported prime"));
        }
        if n == 0 || n > MAX_DIMENSION {
            return param(format!("dimension n = {n} outside 1..={MAX_DIMENSION}"));
        }
        if (q as u64).checked_pow(n).is_none() {
            return param(format!("q^n = {q}^{n} does not fit 64 bits"));
        }
        Ok(FieldParams { q, n })
    }

    pub fn binary(n: u32) -> Result<Self> {
        Self::new(2, n)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `q^n`, the number of vectors of `V`.
    pub fn vector_count(&self) -> u64 {
        (self.q as u64).pow(self.n)
    }

    #[inline]
    pub(crate) fn is_binary(&self) -> bool {
        self.q == 2
    }

    #[inline]
    fn unpack(&self, mut v: u64) -> Digits {
        let mut d = [0u8; MAX_DIMENSION as usize];
        let q = self.q as u64;
        for slot in d.iter_mut().take(self.n as usize) {
            *slot = (v % q) as u8;
            v /= q;
        }
        d
    }

    #[inline]
    fn pack(&self, d: &Digits) -> u64 {
        let q = self.q as u64;
        d[..self.n as usize]
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * q + c as u64)
    }

    #[inline]
    fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u32 * b as u32) % self.q) as u8
    }

    #[inline]
    fn add(&self, a: u8, b: u8) -> u8 {
        ((a as u32 + b as u32) % self.q) as u8
    }

    #[inline]
    fn neg(&self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            (self.q - a as u32) as u8
        }
    }

    fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0);
        // a^(q-2) by square and multiply.
        let mut result = 1u8;
        let mut base = a;
        let mut e = self.q - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// `a + c * b`.
    #[inline]
    pub(crate) fn axpy(&self, a: u64, c: u32, b: u64) -> u64 {
        if self.is_binary() {
            return if c & 1 == 1 { a ^ b } else { a };
        }
        let c = (c % self.q) as u8;
        if c == 0 {
            return a;
        }
        let mut da = self.unpack(a);
        let db = self.unpack(b);
        for i in 0..self.n as usize {
            da[i] = self.add(da[i], self.mul(c, db[i]));
        }
        self.pack(&da)
    }

    /// Standard inner product `sum a_i b_i`.
    pub fn dot(&self, a: u64, b: u64) -> u32 {
        if self.is_binary() {
            return (a & b).count_ones() & 1;
        }
        let da = self.unpack(a);
        let db = self.unpack(b);
        (0..self.n as usize).fold(0u32, |acc, i| (acc + da[i] as u32 * db[i] as u32) % self.q)
    }

    /// Coordinate `i` of a packed vector.
    #[inline]
    pub(crate) fn digit(&self, v: u64, i: u32) -> u32 {
        if self.is_binary() {
            ((v >> i) & 1) as u32
        } else {
            ((v / (self.q as u64).pow(i)) % self.q as u64) as u32
        }
    }

    #[inline]
    fn unit(&self, i: u32) -> u64 {
        (self.q as u64).pow(i)
    }

    /// Reduces `rows` to RREF in place, dropping zero rows.
    pub(crate) fn rref(&self, rows: &mut Rows) {
        if self.is_binary() {
            rref_binary(rows, self.n);
        } else {
            self.rref_generic(rows);
        }
    }

    fn rref_generic(&self, rows: &mut Rows) {
        let mut m: SmallVec<[Digits; 4]> = rows.iter().map(|&r| self.unpack(r)).collect();
        let mut rank = 0;
        for col in 0..self.n as usize {
            let Some(p) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
                continue;
            };
            m.swap(rank, p);
            let s = self.inv(m[rank][col]);
            for c in 0..self.n as usize {
                m[rank][c] = self.mul(m[rank][c], s);
            }
            let pivot = m[rank];
            for (i, row) in m.iter_mut().enumerate() {
                let f = row[col];
                if i != rank && f != 0 {
                    let nf = self.neg(f);
                    for c in 0..self.n as usize {
                        row[c] = self.add(row[c], self.mul(nf, pivot[c]));
                    }
                }
            }
            rank += 1;
        }
        m.truncate(rank);
        rows.clear();
        rows.extend(m.iter().map(|d| self.pack(d)));
    }

    /// Lowest nonzero coordinate of `v`, with its value.
    #[inline]
    fn leading(&self, v: u64) -> Option<(u32, u32)> {
        if v == 0 {
            return None;
        }
        if self.is_binary() {
            return Some((v.trailing_zeros(), 1));
        }
        let q = self.q as u64;
        let mut v = v;
        let mut i = 0;
        while v.is_multiple_of(q) {
            v /= q;
            i += 1;
        }
        Some((i, (v % q) as u32))
    }

    /// Reduces `v` against RREF rows; zero iff `v` lies in their span.
    #[inline]
    fn reduce(&self, rows: &[u64], mut v: u64) -> u64 {
        for &r in rows {
            let (p, _) = self.leading(r).expect("RREF rows are nonzero");
            let c = self.digit(v, p);
            if c != 0 {
                v = self.axpy(v, self.q - c, r);
            }
        }
        v
    }
}

fn rref_binary(rows: &mut Rows, n: u32) {
    let mut rank = 0;
    for col in 0..n {
        let bit = 1u64 << col;
        let Some(p) = (rank..rows.len()).find(|&i| rows[i] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for (i, r) in rows.iter_mut().enumerate() {
            if i != rank && *r & bit != 0 {
                *r ^= pivot;
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
}

fn is_prime(q: u32) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// A vector of `F_q^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqVector {
    params: FieldParams,
    packed: u64,
}

impl FqVector {
    pub fn new(params: FieldParams, coords: &[u32]) -> Result<Self> {
        if coords.len() != params.n as usize {
            return param(format!(
                "vector has {} coordinates, expected {}",
                coords.len(),
                params.n
            ));
        }
        if let Some(c) = coords.iter().find(|&&c| c >= params.q) {
            return param(format!("coordinate {c} is not an element of F_{}", params.q));
        }
        let mut d = [0u8; MAX_DIMENSION as usize];
        for (slot, &c) in d.iter_mut().zip(coords) {
            *slot = c as u8;
        }
        Ok(FqVector { params, packed: params.pack(&d) })
    }

    /// From the packed integer `sum c_i q^i`.
    pub fn from_packed(params: FieldParams, packed: u64) -> Result<Self> {
        if packed >= params.vector_count() {
            return param(format!(
                "{packed} does not encode a vector of F_{}^{}",
                params.q, params.n
            ));
        }
        Ok(FqVector { params, packed })
    }

    pub fn params(&self) -> FieldParams {
        self.params
    }

    pub fn packed(&self) -> u64 {
        self.packed
    }

    pub fn coords(&self) -> Vec<u32> {
        (0..self.params.n).map(|i| self.params.digit(self.packed, i)).collect()
    }
}

/// A subspace of `F_q^n` held in canonical RREF form.
///
/// Ordering is lexicographic on the packed basis rows, which is the
/// enumeration order used throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    params: FieldParams,
    rows: Rows,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace{:?}", self.rows.as_slice())
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

impl Subspace {
    pub fn zero(params: FieldParams) -> Self {
        Subspace { params, rows: Rows::new() }
    }

    pub fn full(params: FieldParams) -> Self {
        Subspace { params, rows: (0..params.n).map(|i| params.unit(i)).collect() }
    }

    /// Span of packed vectors; each must encode a vector of `V`.
    pub fn span<I: IntoIterator<Item = u64>>(params: FieldParams, vectors: I) -> Result<Self> {
        let count = params.vector_count();
        let mut rows = Rows::new();
        for v in vectors {
            if v >= count {
                return param(format!(
                    "{v} does not encode a vector of F_{}^{}",
                    params.q, params.n
                ));
            }
            rows.push(v);
        }
        Ok(Self::from_rows(params, rows))
    }

    #[inline]
    pub(crate) fn from_rows(params: FieldParams, mut rows: Rows) -> Self {
        params.rref(&mut rows);
        Subspace { params, rows }
    }

    pub fn params(&self) -> FieldParams {
        self.params
    }

    pub fn dim(&self) -> u32 {
        self.rows.len() as u32
    }

    /// The packed RREF basis rows, ordered by pivot column.
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<u32> {
        self.rows
            .iter()
            .map(|&r| self.params.leading(r).expect("RREF rows are nonzero").0)
            .collect()
    }

    pub fn basis(&self) -> Vec<FqVector> {
        self.rows
            .iter()
            .map(|&packed| FqVector { params: self.params, packed })
            .collect()
    }

    pub fn contains_vector(&self, v: u64) -> bool {
        self.params.reduce(&self.rows, v) == 0
    }

    /// True iff `inner` is a subspace of `self`.
    pub fn contains(&self, inner: &Subspace) -> bool {
        self.params == inner.params
            && inner.dim() <= self.dim()
            && inner.rows.iter().all(|&v| self.contains_vector(v))
    }

    /// `{x : <x, y> = 0 for all y in self}` under the standard inner product.
    pub fn orthogonal_complement(&self) -> Subspace {
        let p = self.params;
        let pivots = self.pivots();
        let mut rows = Rows::new();
        for free in (0..p.n).filter(|c| !pivots.contains(c)) {
            let mut x = p.unit(free);
            for (&r, &piv) in self.rows.iter().zip(&pivots) {
                let c = p.digit(r, free);
                if c != 0 {
                    x = p.axpy(x, p.q - c, p.unit(piv));
                }
            }
            rows.push(x);
        }
        Subspace::from_rows(p, rows)
    }

    /// Image of `x` under the coordinate map `F_q^k -> self` defined by
    /// the basis rows: `sum x_j row_j`.
    #[inline]
    pub(crate) fn combine(&self, coeffs: u64) -> u64 {
        let p = self.params;
        if p.is_binary() {
            let mut acc = 0;
            let mut bits = coeffs;
            while bits != 0 {
                acc ^= self.rows[bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
            return acc;
        }
        let mut acc = 0;
        let mut c = coeffs;
        for &r in &self.rows {
            acc = p.axpy(acc, (c % p.q as u64) as u32, r);
            c /= p.q as u64;
        }
        acc
    }
}

/// RREF of the span of `vectors`.
pub fn rref_canonicalize(params: FieldParams, vectors: &[FqVector]) -> Result<Subspace> {
    if let Some(v) = vectors.iter().find(|v| v.params != params) {
        return param(format!(
            "vector over F_{}^{} mixed into F_{}^{}",
            v.params.q, v.params.n, params.q, params.n
        ));
    }
    Ok(Subspace::from_rows(params, vectors.iter().map(|v| v.packed).collect()))
}

/// Decodes packed rows that must span a subspace of exactly `dim`
/// dimensions.
pub fn decode_rows(params: FieldParams, rows: &[u64], dim: u32) -> Result<Subspace> {
    let s = Subspace::span(params, rows.iter().copied())?;
    if s.dim() != dim {
        return Err(Error::DataIntegrity(format!(
            "{rows:?} spans a {}-subspace, expected dimension {dim}",
            s.dim()
        )));
    }
    Ok(s)
}

/// Decodes the integer triple `[X, Y, Z]` (bit `i` = coordinate `i`) into
/// the 3-subspace of `F_2^n` it spans.
pub fn decode_triple(x: u64, y: u64, z: u64, params: FieldParams) -> Result<Subspace> {
    if !params.is_binary() {
        return param("the triple encoding is defined over F_2 only");
    }
    decode_rows(params, &[x, y, z], 3)
}

/// Encodes a 3-subspace of `F_2^n` as the triple of its RREF rows.
pub fn encode_subspace(s: &Subspace) -> Result<[u64; 3]> {
    if !s.params.is_binary() {
        return param("the triple encoding is defined over F_2 only");
    }
    match *s.rows.as_slice() {
        [a, b, c] => Ok([a, b, c]),
        _ => param(format!("triple encoding needs a 3-subspace, got dimension {}", s.dim())),
    }
}

pub fn contains(outer: &Subspace, inner: &Subspace) -> bool {
    outer.contains(inner)
}

pub fn orthogonal_complement(s: &Subspace) -> Subspace {
    s.orthogonal_complement()
}

/// All `k`-subspaces of `F_q^n` in ascending order.
pub fn enumerate_subspaces(params: FieldParams, k: u32) -> Result<std::vec::IntoIter<Subspace>> {
    Ok(all_subspaces(params, k)?.into_iter())
}

fn all_subspaces(params: FieldParams, k: u32) -> Result<Vec<Subspace>> {
    if k > params.n {
        return param(format!("subspace dimension {k} exceeds n = {}", params.n));
    }
    let count = q_binomial(params.n, k, params.q)?;
    if count > ENUMERATION_LIMIT {
        return Err(Error::Resource(format!(
            "[{} {k}]_{} = {count} subspaces exceeds the enumeration limit {ENUMERATION_LIMIT}",
            params.n, params.q
        )));
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut pivots: Vec<u32> = (0..k).collect();
    loop {
        push_schubert_cell(params, &pivots, &mut out);
        if !next_combination(&mut pivots, params.n) {
            break;
        }
    }
    out.sort_unstable();
    debug_assert_eq!(out.len() as u64, count);
    Ok(out)
}

/// Every RREF matrix with the given pivot columns.
fn push_schubert_cell(params: FieldParams, pivots: &[u32], out: &mut Vec<Subspace>) {
    // Free positions: in row i, any non-pivot column after pivot i.
    let free: Vec<(usize, u32)> = pivots
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| {
            ((p + 1)..params.n)
                .filter(|c| !pivots.contains(c))
                .map(move |c| (i, c))
        })
        .collect();
    let base: Rows = pivots.iter().map(|&p| params.unit(p)).collect();
    let mut counter = vec![0u32; free.len()];
    loop {
        let mut rows = base.clone();
        for (&(i, c), &v) in free.iter().zip(&counter) {
            rows[i] += v as u64 * params.unit(c);
        }
        out.push(Subspace { params, rows });
        let mut pos = 0;
        loop {
            if pos == counter.len() {
                return;
            }
            counter[pos] += 1;
            if counter[pos] < params.q {
                break;
            }
            counter[pos] = 0;
            pos += 1;
        }
    }
}

fn next_combination(c: &mut [u32], n: u32) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - (k - i) as u32 {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// All `k`-subspaces of `V` in enumeration order, with O(1) position lookup.
#[derive(Clone)]
pub struct SubspaceIndex {
    params: FieldParams,
    k: u32,
    subspaces: Vec<Subspace>,
    lookup: FxHashMap<Subspace, u32>,
}

impl SubspaceIndex {
    pub fn new(params: FieldParams, k: u32) -> Result<Self> {
        let subspaces = all_subspaces(params, k)?;
        let lookup = subspaces
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i as u32))
            .collect();
        Ok(SubspaceIndex { params, k, subspaces, lookup })
    }

    pub fn params(&self) -> FieldParams {
        self.params
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.subspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subspaces.is_empty()
    }

    pub fn get(&self, i: u32) -> &Subspace {
        &self.subspaces[i as usize]
    }

    pub fn position(&self, s: &Subspace) -> Option<u32> {
        self.lookup.get(s).copied()
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }
}

/// The `t`-subspaces of `F_q^k`, as coefficient patterns that can be pushed
/// into any `k`-subspace through its basis.
#[derive(Clone, Debug)]
pub struct SubspacePatterns {
    k: u32,
    t: u32,
    patterns: Vec<Subspace>,
}

impl SubspacePatterns {
    pub fn new(q: u32, k: u32, t: u32) -> Result<Self> {
        if t > k {
            return param(format!("t = {t} exceeds k = {k}"));
        }
        let patterns = if k == 0 {
            vec![Subspace::zero(FieldParams { q, n: 1 })]
        } else {
            all_subspaces(FieldParams::new(q, k)?, t)?
        };
        Ok(SubspacePatterns { k, t, patterns })
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// Calls `f` once for every `t`-subspace of `block`.
    #[inline]
    pub fn for_each_in(&self, block: &Subspace, mut f: impl FnMut(Subspace)) {
        debug_assert_eq!(block.dim(), self.k);
        let p = block.params;
        for pat in &self.patterns {
            let rows: Rows = pat.rows.iter().map(|&c| block.combine(c)).collect();
            f(Subspace::from_rows(p, rows));
        }
    }

    pub fn t(&self) -> u32 {
        self.t
    }
}
