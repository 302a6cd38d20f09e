//! Gaussian binomials and the parameter arithmetic of designs and large sets.
//!
//! Everything is exact: products are carried in `u128` and every result is
//! checked to fit a `u64`.

use serde::Serialize;

use crate::error::{param, Error, Result};

/// `[n k]_q`, the number of `k`-subspaces of `F_q^n`.
pub fn q_binomial(n: u32, k: u32, q: u32) -> Result<u64> {
    if k > n {
        return param(format!("q_binomial needs k <= n, got k = {k}, n = {n}"));
    }
    if q < 2 {
        return param(format!("q_binomial needs q >= 2, got {q}"));
    }
    let k = k.min(n - k);
    let overflow = || Error::Resource(format!("[{n} {k}]_{q} does not fit 64 bits"));
    // prod_{i<k} (q^(n-i) - 1) / (q^(i+1) - 1). The partial product after
    // step i is [n i+1]_q, so each division is exact.
    let mut acc: u128 = 1;
    for i in 0..k {
        let num = (q as u128)
            .checked_pow(n - i)
            .ok_or_else(overflow)?
            - 1;
        let den = (q as u128).pow(i + 1) - 1;
        acc = acc.checked_mul(num).ok_or_else(overflow)?;
        debug_assert_eq!(acc % den, 0);
        acc /= den;
        // Partial values increase with i for k <= n/2, so stop early.
        if acc > u64::MAX as u128 {
            return Err(overflow());
        }
    }
    u64::try_from(acc).map_err(|_| overflow())
}

/// Index of the trivial design: `[n-t k-t]_q`.
pub fn lambda_max(t: u32, n: u32, k: u32, q: u32) -> Result<u64> {
    if t > k || k > n {
        return param(format!("lambda_max needs t <= k <= n, got t = {t}, k = {k}, n = {n}"));
    }
    q_binomial(n - t, k - t, q)
}

/// Parameters `t-(n, k, lambda; q)` of a design.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DesignParams {
    pub t: u32,
    pub n: u32,
    pub k: u32,
    pub lambda: u64,
    pub q: u32,
}

impl DesignParams {
    pub fn new(t: u32, n: u32, k: u32, lambda: u64, q: u32) -> Result<Self> {
        let max = lambda_max(t, n, k, q)?;
        if lambda == 0 || lambda > max {
            return param(format!(
                "lambda = {lambda} outside 1..={max} for a {t}-({n},{k},lambda;{q}) design"
            ));
        }
        Ok(DesignParams { t, n, k, lambda, q })
    }

    pub fn lambda_max(&self) -> u64 {
        lambda_max(self.t, self.n, self.k, self.q).expect("validated at construction")
    }
}

/// Shape of a large set `LS_q[N](t, k, n)`.
///
/// The index `lambda = lambda_max / N` is derived, and may fail to be an
/// integer; [`check_large_set_admissible`] reports that case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LargeSetParams {
    pub designs: u64,
    pub t: u32,
    pub n: u32,
    pub k: u32,
    pub q: u32,
}

impl LargeSetParams {
    pub fn new(designs: u64, t: u32, n: u32, k: u32, q: u32) -> Result<Self> {
        if designs == 0 {
            return param("a large set needs N >= 1 designs");
        }
        lambda_max(t, n, k, q)?;
        Ok(LargeSetParams { designs, t, n, k, q })
    }

    /// `lambda_max / N` when it is an integer.
    pub fn lambda(&self) -> Option<u64> {
        let max = lambda_max(self.t, self.n, self.k, self.q).ok()?;
        (max % self.designs == 0).then(|| max / self.designs)
    }

    /// Parameters shared by every member design.
    pub fn design_params(&self) -> Result<DesignParams> {
        let lambda = self.lambda().ok_or_else(|| {
            Error::Param(format!(
                "N = {} does not divide lambda_max for LS_{}[{}]({},{},{})",
                self.designs, self.q, self.designs, self.t, self.k, self.n
            ))
        })?;
        DesignParams::new(self.t, self.n, self.k, lambda, self.q)
    }
}

/// One divisibility condition `N | [n-i k-i]_q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisibilityCondition {
    pub i: u32,
    pub value: u64,
    pub divisible: bool,
}

/// Outcome of the necessary conditions for a large set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    pub params: LargeSetParams,
    pub lambda_max: u64,
    /// `lambda_max / N` if integral.
    pub lambda: Option<u64>,
    pub conditions: Vec<DivisibilityCondition>,
    pub admissible: bool,
}

impl AdmissibilityReport {
    /// Human-readable reasons the parameters fail, empty when admissible.
    pub fn failures(&self) -> Vec<String> {
        let p = &self.params;
        let mut out = Vec::new();
        if self.lambda.is_none() {
            out.push(format!(
                "lambda * N = lambda_max fails: {} is not divisible by N = {}",
                self.lambda_max, p.designs
            ));
        }
        for c in self.conditions.iter().filter(|c| !c.divisible) {
            out.push(format!(
                "N = {} does not divide [{} {}]_{} = {} (i = {})",
                p.designs,
                p.n - c.i,
                p.k - c.i,
                p.q,
                c.value,
                c.i
            ));
        }
        out
    }
}

/// Checks `lambda * N = lambda_max` and `N | [n-i k-i]_q` for `0 <= i <= t`.
pub fn check_large_set_admissible(p: &LargeSetParams) -> Result<AdmissibilityReport> {
    let lambda_max = lambda_max(p.t, p.n, p.k, p.q)?;
    let conditions = (0..=p.t)
        .map(|i| {
            let value = q_binomial(p.n - i, p.k - i, p.q)?;
            Ok(DivisibilityCondition { i, value, divisible: value % p.designs == 0 })
        })
        .collect::<Result<Vec<_>>>()?;
    let lambda = p.lambda();
    let admissible = lambda.is_some() && conditions.iter().all(|c| c.divisible);
    Ok(AdmissibilityReport { params: *p, lambda_max, lambda, conditions, admissible })
}

/// Index of the complementary design:
/// `lambda * [n-t k]_q / [n-t k-t]_q`.
pub fn dual_lambda(p: &DesignParams) -> Result<u64> {
    if p.k + p.t > p.n {
        return param(format!(
            "the complementary {}-design needs n - k >= t, got n = {}, k = {}",
            p.t, p.n, p.k
        ));
    }
    let num = q_binomial(p.n - p.t, p.k, p.q)? as u128 * p.lambda as u128;
    let den = q_binomial(p.n - p.t, p.k - p.t, p.q)? as u128;
    if !num.is_multiple_of(den) {
        return Err(Error::Consistency(format!(
            "complementary index {num}/{den} is not integral"
        )));
    }
    u64::try_from(num / den).map_err(|_| Error::Resource("complementary index overflows".into()))
}

/// Parameters of the complementary `t-(n, n-k, lambda_perp; q)` design.
pub fn dual_params(p: &DesignParams) -> Result<DesignParams> {
    DesignParams::new(p.t, p.n, p.n - p.k, dual_lambda(p)?, p.q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_binomial_values() {
        assert_eq!(q_binomial(7, 0, 2).unwrap(), 1);
        assert_eq!(q_binomial(4, 2, 2).unwrap(), 35);
        assert_eq!(q_binomial(8, 3, 2).unwrap(), 97155);
        assert_eq!(q_binomial(8, 2, 2).unwrap(), 10795);
        assert_eq!(q_binomial(6, 3, 2).unwrap(), 1395);
        assert_eq!(q_binomial(6, 1, 2).unwrap(), 63);
        assert_eq!(q_binomial(7, 2, 2).unwrap(), 2667);
        assert!(q_binomial(3, 4, 2).is_err());
    }

    #[test]
    fn q_binomial_overflow_is_resource_error() {
        assert!(matches!(q_binomial(64, 32, 2), Err(Error::Resource(_))));
        assert!(matches!(q_binomial(31, 15, 2), Err(Error::Resource(_))));
        assert_eq!(q_binomial(31, 1, 2).unwrap(), (1 << 31) - 1);
    }

    #[test]
    fn symmetry_and_pascal_recurrence() {
        // Ranges chosen so every value fits 64 bits.
        for (q, max_n) in [(2u32, 14u32), (3, 10), (5, 9)] {
            for n in 0..=max_n {
                for k in 0..=n {
                    let v = q_binomial(n, k, q).unwrap();
                    assert_eq!(v, q_binomial(n, n - k, q).unwrap());
                    if n > 0 && k > 0 && k < n {
                        let a = q_binomial(n - 1, k - 1, q).unwrap();
                        let b = q_binomial(n - 1, k, q).unwrap();
                        assert_eq!(v, a + (q as u64).pow(k) * b, "n={n} k={k} q={q}");
                    }
                }
            }
        }
    }

    #[test]
    fn lambda_max_values() {
        assert_eq!(lambda_max(3, 8, 3, 2).unwrap(), 1);
        assert_eq!(lambda_max(2, 8, 3, 2).unwrap(), 63);
        assert_eq!(lambda_max(2, 8, 3, 2).unwrap(), 21 * 3);
        assert_eq!(lambda_max(2, 8, 5, 2).unwrap(), 1395);
        assert!(lambda_max(4, 8, 3, 2).is_err());
    }

    #[test]
    fn design_params_validation() {
        assert!(DesignParams::new(2, 8, 3, 21, 2).is_ok());
        assert!(DesignParams::new(2, 8, 3, 0, 2).is_err());
        assert!(DesignParams::new(2, 8, 3, 64, 2).is_err());
        assert!(LargeSetParams::new(0, 2, 8, 3, 2).is_err());
    }

    #[test]
    fn admissibility_examples() {
        let r = check_large_set_admissible(&LargeSetParams::new(3, 2, 8, 3, 2).unwrap()).unwrap();
        assert!(r.admissible);
        assert_eq!(r.lambda, Some(21));
        let values: Vec<u64> = r.conditions.iter().map(|c| c.value).collect();
        assert_eq!(values, vec![97155, 2667, 63]);

        let r = check_large_set_admissible(&LargeSetParams::new(2, 2, 8, 3, 2).unwrap()).unwrap();
        assert!(!r.admissible);
        assert_eq!(r.lambda, None);
        assert!(r.failures()[0].contains("lambda * N"));

        let r = check_large_set_admissible(&LargeSetParams::new(7, 1, 4, 2, 2).unwrap()).unwrap();
        assert!(r.admissible);
        assert_eq!(r.lambda, Some(1));
        let values: Vec<u64> = r.conditions.iter().map(|c| c.value).collect();
        assert_eq!(values, vec![35, 7]);
    }

    #[test]
    fn divisibility_failure_is_named() {
        // LS_2[5](1,2,4): 5 | 35 but 5 does not divide 7.
        let r = check_large_set_admissible(&LargeSetParams::new(5, 1, 4, 2, 2).unwrap()).unwrap();
        assert!(!r.admissible);
        assert!(r.conditions[0].divisible);
        assert!(!r.conditions[1].divisible);
        assert!(r.failures().iter().any(|f| f.contains("[3 1]_2 = 7")));
    }

    #[test]
    fn dual_lambda_values() {
        let p = DesignParams::new(2, 8, 3, 21, 2).unwrap();
        assert_eq!(dual_lambda(&p).unwrap(), 465);
        let d = dual_params(&p).unwrap();
        assert_eq!((d.k, d.lambda), (5, 465));
        assert_eq!(dual_lambda(&d).unwrap(), 21);
        // t = k: denominator [n-t 0]_q = 1.
        let p = DesignParams::new(2, 6, 2, 1, 2).unwrap();
        assert_eq!(dual_lambda(&p).unwrap(), q_binomial(4, 2, 2).unwrap());
    }

    #[test]
    fn dual_lambda_non_integral_is_consistency_error() {
        // 1-(5,2,1;2) would need [4 2]_2 / [4 1]_2 = 35 / 15.
        let p = DesignParams { t: 1, n: 5, k: 2, lambda: 1, q: 2 };
        assert!(matches!(dual_lambda(&p), Err(Error::Consistency(_))));
    }

    #[test]
    fn dual_involution_on_parameter_grid() {
        for q in [2u32, 3] {
            for n in 2..=9u32 {
                for k in 1..n {
                    for t in 1..=k.min(n - k) {
                        let max = lambda_max(t, n, k, q).unwrap();
                        for lambda in [1, max] {
                            let p = DesignParams::new(t, n, k, lambda, q).unwrap();
                            if let Ok(l) = dual_lambda(&p) {
                                let d = DesignParams::new(t, n, n - k, l, q).unwrap();
                                assert_eq!(dual_lambda(&d).unwrap(), lambda);
                            }
                        }
                    }
                }
            }
        }
    }
}
