//! Quantum code parameters from improved codes: CSS, Steane enlargement,
//! and classification against the Gilbert-Varshamov and quantum Singleton
//! bounds.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::footprint::{self, FootprintError, ProductSpec};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuantumError {
    #[error(transparent)]
    Footprint(#[from] FootprintError),
    #[error("L({0}) is empty, so the classical code has dimension 0")]
    EmptyCode(u64),
    #[error("C(L({0})) does not contain its Euclidean dual")]
    NotDualContaining(u64),
    #[error("enlargement needs delta >= 3, got {0}")]
    DeltaTooSmall(u64),
    #[error("tau({s}) = {increase}: enlargement needs at least 2 extra monomials")]
    EnlargementTooSmall { s: u64, increase: u64 },
    #[error("n = {n} and k = {k} have different parity")]
    ParityViolation { n: u64, k: u64 },
    #[error("bound needs n > k >= 2 and d >= 2, got n={n} k={k} d={d}")]
    BadRange { n: u64, k: u64, d: u64 },
    #[error("classification needs k >= 2, got {0}")]
    KTooSmall(u64),
}

/// `[n, k, d]` of `C(L(delta))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalParams {
    pub n: u64,
    pub k: u64,
    pub d: u64,
    /// `d` is the true minimum distance, not only a designed one.
    pub d_exact: bool,
}

impl fmt::Display for ClassicalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.n, self.k, self.d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    Css,
    Steane,
}

/// `[[n, k, d]]_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumParams {
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub d_is_lower_bound: bool,
    pub q: u64,
    pub construction: Construction,
}

impl fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ge = if self.d_is_lower_bound { ">=" } else { "" };
        write!(f, "[[{},{},{}{}]]", self.n, self.k, ge, self.d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GvVerdict {
    Exceeds,
    Meets,
    Neither,
}

impl GvVerdict {
    /// Table marker: `!` exceeds, `*` meets, empty otherwise.
    pub fn marker(self) -> &'static str {
        match self {
            GvVerdict::Exceeds => "!",
            GvVerdict::Meets => "*",
            GvVerdict::Neither => "",
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GvVerdict::Exceeds => "exceeds",
            GvVerdict::Meets => "meets",
            GvVerdict::Neither => "neither",
        }
    }
}

impl fmt::Display for GvVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GvClass {
    pub verdict: GvVerdict,
    /// `k`, or `k - 1` when `n - k` is odd.
    pub applied_k: u64,
}

/// Result of enlarging `C(L(delta))` with `C(L(delta - 1))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SteaneOutcome {
    pub params: QuantumParams,
    /// `tau(delta - 1)`.
    pub increase: u64,
    /// The edge-monomial guarantee covers this `delta`.
    pub prop4_applies: bool,
}

pub fn classical_params(spec: &ProductSpec, delta: u64) -> Result<ClassicalParams, QuantumError> {
    spec.check_delta(delta)?;
    let k = footprint::improved_dimension(spec, delta)?;
    let d = footprint::min_sigma_at_least(spec, delta)?.ok_or(QuantumError::EmptyCode(delta))?;
    Ok(ClassicalParams {
        n: spec.n(),
        k,
        d,
        d_exact: true,
    })
}

fn ambient_q(spec: &ProductSpec) -> Result<u64, QuantumError> {
    Ok(spec.q()?)
}

/// `[[n, 2k - n, d]]_q` from a dual-containing `C(L(delta))`.
pub fn css_params(spec: &ProductSpec, delta: u64) -> Result<QuantumParams, QuantumError> {
    spec.check_delta(delta)?;
    if !footprint::is_dual_containing(spec, delta)? {
        return Err(QuantumError::NotDualContaining(delta));
    }
    let c = classical_params(spec, delta)?;
    Ok(QuantumParams {
        n: c.n,
        // dual containment gives n - k <= k
        k: 2 * c.k - c.n,
        d: c.d,
        d_is_lower_bound: false,
        q: ambient_q(spec)?,
        construction: Construction::Css,
    })
}

/// The edge-monomial count `K` when `2 < delta <= p^{r_2} + 1`, else `None`.
pub fn enlarge_guarantee(spec: &ProductSpec, delta: u64) -> Option<u64> {
    let sizes = spec.sizes();
    if sizes.len() < 2 || delta <= 2 || delta > sizes[1] + 1 {
        return None;
    }
    Some(footprint::edge_count(spec, delta - 1))
}

/// `min{delta, ceil((1 + 1/q)(delta - 1))}`.
pub fn enlarged_distance(delta: u64, q: u64) -> u64 {
    let (s, q) = ((delta - 1) as u128, q as u128);
    delta.min((s * (q + 1)).div_ceil(q) as u64)
}

/// Enlarges the CSS code of `C(L(delta))` with `C(L(delta - 1))`.
pub fn steane_params(spec: &ProductSpec, delta: u64) -> Result<SteaneOutcome, QuantumError> {
    let css = css_params(spec, delta)?;
    if delta < 3 {
        return Err(QuantumError::DeltaTooSmall(delta));
    }
    let increase = footprint::tau(spec, delta - 1);
    if increase < 2 {
        return Err(QuantumError::EnlargementTooSmall { s: delta - 1, increase });
    }
    Ok(SteaneOutcome {
        params: QuantumParams {
            k: css.k + increase,
            d: enlarged_distance(delta, css.q),
            d_is_lower_bound: true,
            construction: Construction::Steane,
            ..css
        },
        increase,
        prop4_applies: enlarge_guarantee(spec, delta).is_some(),
    })
}

/// Exact check of `sum_{i=1}^{d-1} (q^2-1)^i C(n,i) < q^{n-k+2} - 1`.
pub fn gv_satisfied(n: u64, k: u64, d: u64, q: u64) -> Result<bool, QuantumError> {
    if !(n > k && k >= 2 && d >= 2) {
        return Err(QuantumError::BadRange { n, k, d });
    }
    if (n - k) % 2 != 0 {
        return Err(QuantumError::ParityViolation { n, k });
    }
    let q = BigUint::from(q);
    let rhs = q.pow((n - k + 2) as u32) - BigUint::one();
    let base = &q * &q - BigUint::one();
    let mut term_pow = BigUint::one();
    let mut binom = BigUint::one();
    let mut sum = BigUint::zero();
    for i in 1..d {
        if i > n {
            break;
        }
        term_pow *= &base;
        binom = binom * (n - i + 1) / i;
        sum += &term_pow * &binom;
        if sum >= rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn gv_classify(params: &QuantumParams) -> Result<GvClass, QuantumError> {
    let QuantumParams { n, k, d, q, .. } = *params;
    if k < 2 {
        return Err(QuantumError::KTooSmall(k));
    }
    let applied_k = if (n - k) % 2 == 0 { k } else { k - 1 };
    let verdict = if !gv_satisfied(n, applied_k, d, q)? {
        GvVerdict::Exceeds
    } else if !gv_satisfied(n, applied_k, d + 1, q)? {
        GvVerdict::Meets
    } else {
        GvVerdict::Neither
    };
    Ok(GvClass { verdict, applied_k })
}

/// `(n - k + 2) - 2d`; zero for quantum MDS codes, negative only if the
/// parameters are impossible.
pub fn singleton_slack(params: &QuantumParams) -> i64 {
    (params.n as i64 - params.k as i64 + 2) - 2 * params.d as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec(p: u64, r: &[u32]) -> ProductSpec {
        ProductSpec::new(p, r).unwrap()
    }

    fn nkd(q: &QuantumParams) -> (u64, u64, u64) {
        (q.n, q.k, q.d)
    }

    #[test]
    fn classical_examples() {
        let s = spec(3, &[2, 2, 1]);
        let c = classical_params(&s, 4).unwrap();
        assert_eq!((c.n, c.k, c.d), (243, 236, 4));
        let c = classical_params(&s, 7).unwrap();
        assert_eq!((c.n, c.k, c.d), (243, 221, 7));
        let c = classical_params(&s, 1).unwrap();
        assert_eq!((c.n, c.k, c.d), (243, 243, 1));
        assert_eq!(classical_params(&s, 244), Err(QuantumError::EmptyCode(244)));
        assert!(matches!(classical_params(&s, 245), Err(QuantumError::Footprint(_))));
        // tau(17) = 0 for (4,4,2): the true distance jumps to 18
        let c = classical_params(&spec(2, &[4, 4, 2]), 17).unwrap();
        assert_eq!(c.d, 18);
    }

    #[test]
    fn css_examples() {
        assert_eq!(nkd(&css_params(&spec(3, &[2, 2, 1]), 4).unwrap()), (243, 229, 4));
        assert_eq!(nkd(&css_params(&spec(2, &[3, 3]), 5).unwrap()), (64, 48, 5));
        let c = css_params(&spec(2, &[4, 4, 2]), 13).unwrap();
        assert_eq!((nkd(&c), c.q), ((1024, 900, 13), 16));
        assert_eq!(css_params(&spec(2, &[1, 1]), 4), Err(QuantumError::NotDualContaining(4)));
        assert_eq!(css_params(&spec(2, &[1, 1]), 5), Err(QuantumError::NotDualContaining(5)));
    }

    #[test]
    fn steane_examples() {
        let s = spec(3, &[2, 2, 1]);
        let o = steane_params(&s, 4).unwrap();
        assert_eq!((nkd(&o.params), o.increase, o.prop4_applies), ((243, 232, 4), 3, true));
        assert!(o.params.d_is_lower_bound);
        assert_eq!(o.params.to_string(), "[[243,232,>=4]]");
        let o = steane_params(&s, 7).unwrap();
        assert_eq!((nkd(&o.params), o.increase), ((243, 207, 7), 8));
        let o = steane_params(&spec(2, &[4, 4, 2]), 9).unwrap();
        assert_eq!((nkd(&o.params), o.increase), ((1024, 965, 9), 9));

        let s = spec(3, &[2, 1]);
        assert_eq!(steane_params(&s, 6), Err(QuantumError::EnlargementTooSmall { s: 5, increase: 1 }));
        let o = steane_params(&s, 5).unwrap();
        assert_eq!((nkd(&o.params), o.increase, o.prop4_applies), ((27, 15, 5), 2, false));
        assert_eq!(steane_params(&spec(3, &[1, 1]), 2), Err(QuantumError::DeltaTooSmall(2)));
    }

    #[test]
    fn guarantee_range() {
        let s = spec(3, &[2, 2, 1]);
        assert_eq!(enlarge_guarantee(&s, 4), Some(3));
        assert_eq!(enlarge_guarantee(&s, 7), Some(2));
        assert_eq!(enlarge_guarantee(&s, 10), Some(2));
        assert_eq!(enlarge_guarantee(&s, 11), None);
        assert_eq!(enlarge_guarantee(&s, 2), None);
        assert_eq!(enlarge_guarantee(&spec(2, &[5]), 4), None);
    }

    #[test]
    fn gv_examples() {
        assert_eq!(gv_satisfied(64, 58, 3, 8), Ok(true));
        assert_eq!(gv_satisfied(64, 58, 4, 8), Ok(false));
        assert_eq!(gv_satisfied(64, 60, 3, 8), Ok(false));
        assert!(gv_satisfied(1024, 900, 13, 16).is_ok());
        assert_eq!(gv_satisfied(64, 57, 3, 8), Err(QuantumError::ParityViolation { n: 64, k: 57 }));
        assert!(matches!(gv_satisfied(64, 64, 3, 8), Err(QuantumError::BadRange { .. })));
        assert!(matches!(gv_satisfied(64, 58, 1, 8), Err(QuantumError::BadRange { .. })));
    }

    fn qp(n: u64, k: u64, d: u64, q: u64) -> QuantumParams {
        QuantumParams {
            n,
            k,
            d,
            d_is_lower_bound: false,
            q,
            construction: Construction::Css,
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(gv_classify(&qp(243, 229, 4, 9)).unwrap().verdict, GvVerdict::Meets);
        assert_eq!(gv_classify(&qp(27, 23, 3, 9)).unwrap().verdict, GvVerdict::Exceeds);
        assert_eq!(gv_classify(&qp(243, 199, 7, 9)).unwrap().verdict, GvVerdict::Neither);
        let c = gv_classify(&qp(64, 51, 5, 8)).unwrap();
        assert_eq!((c.applied_k, c.verdict), (50, GvVerdict::Meets));
        assert_eq!(gv_classify(&qp(64, 1, 5, 8)), Err(QuantumError::KTooSmall(1)));
    }

    #[test]
    fn singleton_examples() {
        assert_eq!(singleton_slack(&qp(27, 23, 3, 9)), 0);
        assert_eq!(singleton_slack(&qp(64, 60, 3, 8)), 0);
        assert_eq!(singleton_slack(&qp(243, 232, 4, 9)), 5);
    }

    #[test]
    fn ceiling_identity() {
        for q in 2..=64u64 {
            for delta in 3..=q + 1 {
                assert_eq!(enlarged_distance(delta, q), delta, "q={q} delta={delta}");
                assert_eq!(((delta - 1) * (q + 1)).div_ceil(q), delta);
            }
        }
    }

    proptest! {
        #[test]
        fn gv_monotone(n in 6u64..80, k in 2u64..60, d in 2u64..12, q in prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9])) {
            prop_assume!(k < n && (n - k) % 2 == 0);
            if !gv_satisfied(n, k, d, q).unwrap() {
                prop_assert!(!gv_satisfied(n, k, d + 1, q).unwrap());
                if k + 2 < n {
                    prop_assert!(!gv_satisfied(n, k + 2, d, q).unwrap());
                }
            }
        }

        #[test]
        fn steane_dimension_identity(p in prop::sample::select(vec![2u64, 3, 5]), r in prop::collection::vec(1u32..=3, 1..=3), delta in 3u64..40) {
            let mut r = r;
            r.sort_unstable_by(|a, b| b.cmp(a));
            let s = ProductSpec::new(p, &r).unwrap();
            prop_assume!(s.n() <= 4096 && delta <= s.n());
            if let Ok(o) = steane_params(&s, delta) {
                let css = css_params(&s, delta).unwrap();
                prop_assert_eq!(o.params.k, css.k + footprint::tau(&s, delta - 1));
                prop_assert!(css.n % 2 == css.k % 2);
                prop_assert!(singleton_slack(&css) >= 0);
                prop_assert!(singleton_slack(&o.params) >= 0);
                if delta - 1 <= css.q {
                    prop_assert!(o.params.d >= delta);
                }
            }
        }
    }
}
