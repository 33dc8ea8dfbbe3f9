//! Monomial combinatorics over `Delta(r) = { X^a : 0 <= a_i < p^{r_i} }`.
//!
//! Everything here is integer arithmetic on exponent vectors: the footprint
//! value `sigma(a) = prod (p^{r_i} - a_i)`, its dual `mu(a) = prod (a_i + 1)`,
//! the improved defining sets `L(delta) = { sigma >= delta }` and
//! `L_perp(delta) = { mu < delta }`, and the tuple-counting function `tau`
//! that gives the exact dimension gained by Steane enlargement.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::arith;

/// Largest grid [`sigma_grid`] will materialize.
pub const MAX_GRID_LEN: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FootprintError {
    #[error("characteristic {0} is not prime")]
    CompositeP(u64),
    #[error("the exponent vector r must be non-empty")]
    EmptyVector,
    #[error("every r_i must be positive")]
    ZeroExponent,
    #[error("r must be non-increasing, got {0:?}")]
    Unordered(Vec<u32>),
    #[error("r_i = {r_i} does not divide the ambient degree {ambient}")]
    IncompatibleAmbient { r_i: u32, ambient: u32 },
    #[error("parameters overflow 64-bit arithmetic")]
    Overflow,
    #[error("exponent {exponent:?} is outside Delta(r) with sizes {sizes:?}")]
    OutOfRange { exponent: Vec<u64>, sizes: Vec<u64> },
    #[error("delta = {delta} is outside [1, {max}]")]
    BadDelta { delta: u64, max: u64 },
    #[error("the bound needs 2 <= s <= p^(r_1) = {max}, got s = {s}")]
    BoundUndefined { s: u64, max: u64 },
    #[error("cannot render a grid with m = {0} > 3 coordinates")]
    RenderCap(usize),
    #[error("grid with {0} entries exceeds the render cap")]
    GridTooLarge(u64),
    #[error("monomial {0:?} appears twice")]
    Duplicate(Vec<u64>),
}

/// The data `(p, r_1 >= ... >= r_m)` defining the point set
/// `F_{p^{r_1}} x ... x F_{p^{r_m}}` inside `F_{p^r}^m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductSpec {
    p: u64,
    r_vec: Vec<u32>,
    ambient_r: u32,
    sizes: Vec<u64>,
    n: u64,
}

impl ProductSpec {
    /// Uses the least common multiple of the `r_i` as ambient degree.
    pub fn new(p: u64, r_vec: &[u32]) -> Result<ProductSpec, FootprintError> {
        if r_vec.contains(&0) {
            return Err(FootprintError::ZeroExponent);
        }
        let ambient = r_vec.iter().fold(1u32, |acc, &r| acc.lcm(&r));
        ProductSpec::with_ambient(p, r_vec, ambient)
    }

    pub fn with_ambient(p: u64, r_vec: &[u32], ambient_r: u32) -> Result<ProductSpec, FootprintError> {
        if !arith::is_prime(p) {
            return Err(FootprintError::CompositeP(p));
        }
        if r_vec.is_empty() {
            return Err(FootprintError::EmptyVector);
        }
        if r_vec.contains(&0) || ambient_r == 0 {
            return Err(FootprintError::ZeroExponent);
        }
        if r_vec.windows(2).any(|w| w[0] < w[1]) {
            return Err(FootprintError::Unordered(r_vec.to_vec()));
        }
        if let Some(&r_i) = r_vec.iter().find(|&&r| ambient_r % r != 0) {
            return Err(FootprintError::IncompatibleAmbient {
                r_i,
                ambient: ambient_r,
            });
        }
        let sizes = r_vec
            .iter()
            .map(|&r| arith::checked_pow(p, r).ok_or(FootprintError::Overflow))
            .collect::<Result<Vec<u64>, _>>()?;
        let n = sizes
            .iter()
            .try_fold(1u64, |acc, &s| acc.checked_mul(s))
            .ok_or(FootprintError::Overflow)?;
        Ok(ProductSpec {
            p,
            r_vec: r_vec.to_vec(),
            ambient_r,
            sizes,
            n,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r_vec(&self) -> &[u32] {
        &self.r_vec
    }

    pub fn ambient_r(&self) -> u32 {
        self.ambient_r
    }

    /// `p^{r_i}` for each coordinate.
    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn m(&self) -> usize {
        self.r_vec.len()
    }

    /// Code length `prod p^{r_i}`.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Ambient field order `p^r`.
    pub fn q(&self) -> Result<u64, FootprintError> {
        arith::checked_pow(self.p, self.ambient_r).ok_or(FootprintError::Overflow)
    }

    pub fn check_delta(&self, delta: u64) -> Result<(), FootprintError> {
        if delta == 0 || delta > self.n + 1 {
            return Err(FootprintError::BadDelta {
                delta,
                max: self.n + 1,
            });
        }
        Ok(())
    }

    /// All of `Delta(r)` in canonical (lexicographic) order.
    pub fn exponents(&self) -> Exponents<'_> {
        Exponents {
            sizes: &self.sizes,
            next: Some(vec![0; self.sizes.len()]),
        }
    }
}

impl fmt::Display for ProductSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r: Vec<String> = self.r_vec.iter().map(|r| r.to_string()).collect();
        write!(f, "p={} r=({}) ambient_r={}", self.p, r.join(","), self.ambient_r)
    }
}

/// Exponent vector of a monomial `X^a`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(Vec<u64>);

impl Exponent {
    pub fn new(a: Vec<u64>) -> Exponent {
        Exponent(a)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    /// Checks membership in `Delta(r)`.
    pub fn validate(&self, spec: &ProductSpec) -> Result<(), FootprintError> {
        if self.0.len() != spec.m() || self.0.iter().zip(spec.sizes()).any(|(&a, &s)| a >= s) {
            return Err(FootprintError::OutOfRange {
                exponent: self.0.clone(),
                sizes: spec.sizes().to_vec(),
            });
        }
        Ok(())
    }

    /// Coordinatewise `self <= other`.
    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `b_i = p^{r_i} - 1 - a_i`, which swaps `sigma` and `mu`.
    pub fn complement(&self, spec: &ProductSpec) -> Result<Exponent, FootprintError> {
        self.validate(spec)?;
        Ok(Exponent(
            self.0.iter().zip(spec.sizes()).map(|(&a, &s)| s - 1 - a).collect(),
        ))
    }
}

impl From<Vec<u64>> for Exponent {
    fn from(a: Vec<u64>) -> Self {
        Exponent(a)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Odometer over `Delta(r)`, last coordinate fastest.
pub struct Exponents<'a> {
    sizes: &'a [u64],
    next: Option<Vec<u64>>,
}

impl Iterator for Exponents<'_> {
    type Item = Exponent;

    fn next(&mut self) -> Option<Exponent> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        for i in (0..succ.len()).rev() {
            succ[i] += 1;
            if succ[i] < self.sizes[i] {
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(Exponent(cur))
    }
}

/// A set of monomials from `Delta(r)` kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningSet {
    spec: ProductSpec,
    members: Vec<Exponent>,
}

impl DefiningSet {
    /// Validates membership, rejects duplicates and sorts canonically.
    pub fn new(spec: &ProductSpec, mut members: Vec<Exponent>) -> Result<DefiningSet, FootprintError> {
        for a in &members {
            a.validate(spec)?;
        }
        members.sort();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(FootprintError::Duplicate(w[0].0.clone()));
        }
        Ok(DefiningSet {
            spec: spec.clone(),
            members,
        })
    }

    pub fn spec(&self) -> &ProductSpec {
        &self.spec
    }

    pub fn members(&self) -> &[Exponent] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: &Exponent) -> bool {
        self.members.binary_search(a).is_ok()
    }

    pub fn is_subset_of(&self, other: &DefiningSet) -> bool {
        self.members.iter().all(|a| other.contains(a))
    }

    /// Closed under coordinatewise decrease of exponents.
    pub fn is_decreasing(&self) -> bool {
        self.members.iter().all(|a| {
            (0..a.0.len()).all(|i| {
                a.0[i] == 0 || {
                    let mut b = a.0.clone();
                    b[i] -= 1;
                    self.contains(&Exponent(b))
                }
            })
        })
    }
}

/// `sigma(X^a) = prod (p^{r_j} - a_j)`.
pub fn sigma(spec: &ProductSpec, a: &Exponent) -> Result<u64, FootprintError> {
    a.validate(spec)?;
    Ok(sigma_unchecked(spec.sizes(), a.as_slice()))
}

/// `mu(X^a) = prod (a_j + 1)`.
pub fn mu(spec: &ProductSpec, a: &Exponent) -> Result<u64, FootprintError> {
    a.validate(spec)?;
    Ok(mu_unchecked(a.as_slice()))
}

pub(crate) fn sigma_unchecked(sizes: &[u64], a: &[u64]) -> u64 {
    sizes.iter().zip(a).map(|(&s, &x)| s - x).product()
}

pub(crate) fn mu_unchecked(a: &[u64]) -> u64 {
    a.iter().map(|&x| x + 1).product()
}

/// `L(delta) = { a : sigma(a) >= delta }`. Always a decreasing set.
pub fn improved_defining_set(spec: &ProductSpec, delta: u64) -> Result<DefiningSet, FootprintError> {
    spec.check_delta(delta)?;
    let members = spec
        .exponents()
        .filter(|a| sigma_unchecked(spec.sizes(), a.as_slice()) >= delta)
        .collect();
    Ok(DefiningSet {
        spec: spec.clone(),
        members,
    })
}

/// `L_perp(delta) = { a : mu(a) < delta }`, whose code is the dual of
/// `C(L(delta))`.
pub fn dual_defining_set(spec: &ProductSpec, delta: u64) -> Result<DefiningSet, FootprintError> {
    spec.check_delta(delta)?;
    let members = spec
        .exponents()
        .filter(|a| mu_unchecked(a.as_slice()) < delta)
        .collect();
    Ok(DefiningSet {
        spec: spec.clone(),
        members,
    })
}

/// Number of tuples `1 <= d_i <= limits[i]` with `prod d_i < bound`.
fn count_product_below(limits: &[u64], bound: u64) -> u64 {
    fn rec(limits: &[u64], partial: u64, bound: u64) -> u64 {
        let room = (bound - 1) / partial;
        match limits {
            [] => 1,
            [last] => (*last).min(room),
            [first, rest @ ..] => (1..=(*first).min(room)).map(|d| rec(rest, partial * d, bound)).sum(),
        }
    }
    if bound <= 1 {
        return 0;
    }
    rec(limits, 1, bound)
}

/// `|L(delta)|` without enumerating `Delta(r)`.
pub fn improved_dimension(spec: &ProductSpec, delta: u64) -> Result<u64, FootprintError> {
    spec.check_delta(delta)?;
    Ok(spec.n() - count_product_below(spec.sizes(), delta))
}

/// `|L_perp(delta)|`; the `mu` values are the same tuples as the `sigma`
/// values shifted, so this is `n - |L(delta)|`.
pub fn dual_dimension(spec: &ProductSpec, delta: u64) -> Result<u64, FootprintError> {
    spec.check_delta(delta)?;
    Ok(count_product_below(spec.sizes(), delta))
}

/// Smallest `sigma` value attained in `L(delta)`, i.e. the true minimum
/// distance of `C(L(delta))`. `None` when `L(delta)` is empty.
pub fn min_sigma_at_least(spec: &ProductSpec, delta: u64) -> Result<Option<u64>, FootprintError> {
    spec.check_delta(delta)?;
    Ok((delta.max(1)..=spec.n()).find(|&s| tau(spec, s) > 0))
}

/// True iff `L_perp(delta)` is contained in `L(delta)`, i.e. every `a` with
/// `mu(a) < delta` also has `sigma(a) >= delta`. Only the (few) monomials
/// with small `mu` are visited.
pub fn is_dual_containing(spec: &ProductSpec, delta: u64) -> Result<bool, FootprintError> {
    spec.check_delta(delta)?;
    fn rec(sizes: &[u64], a: &mut Vec<u64>, partial_mu: u64, delta: u64) -> bool {
        let i = a.len();
        if i == sizes.len() {
            return sigma_unchecked(sizes, a) >= delta;
        }
        let mut x = 0;
        while x < sizes[i] && partial_mu * (x + 1) < delta {
            a.push(x);
            let ok = rec(sizes, a, partial_mu * (x + 1), delta);
            a.pop();
            if !ok {
                return false;
            }
            x += 1;
        }
        true
    }
    Ok(rec(spec.sizes(), &mut Vec::with_capacity(spec.m()), 1, delta))
}

/// Whether `ev(X^a)` and `ev(X^b)` are Euclidean-orthogonal.
///
/// The dot product is nonzero exactly when, for every coordinate,
/// `a_i + b_i > 0` and `(p^{r_i} - 1) | (a_i + b_i)`.
pub fn monomials_orthogonal(spec: &ProductSpec, a: &Exponent, b: &Exponent) -> Result<bool, FootprintError> {
    a.validate(spec)?;
    b.validate(spec)?;
    let nonzero = a
        .as_slice()
        .iter()
        .zip(b.as_slice())
        .zip(spec.sizes())
        .all(|((&x, &y), &s)| x + y > 0 && (x + y) % (s - 1) == 0);
    Ok(!nonzero)
}

/// Number of tuples `(d_1, ..., d_m)` with `1 <= d_i <= p^{r_i}` and
/// `prod d_i = s`; equivalently the number of monomials with `sigma = s`.
pub fn tau(spec: &ProductSpec, s: u64) -> u64 {
    tau_with_calls(spec, s).0
}

/// [`tau`] plus the number of single-coordinate base cases reached by the
/// recursion. That count never exceeds `n / p^{r_m}`.
pub fn tau_with_calls(spec: &ProductSpec, s: u64) -> (u64, u64) {
    fn rec(sizes: &[u64], s: u64, calls: &mut u64) -> u64 {
        match sizes {
            [] => u64::from(s == 1),
            [last] => {
                *calls += 1;
                u64::from(s <= *last)
            }
            [first, rest @ ..] => {
                let mut c = 0;
                // divisors of s never exceed s
                for d in 1..=(*first).min(s) {
                    if s % d == 0 {
                        c += rec(rest, s / d, calls);
                    }
                }
                c
            }
        }
    }
    if s == 0 {
        return (0, 0);
    }
    let mut calls = 0;
    let v = rec(spec.sizes(), s, &mut calls);
    (v, calls)
}

/// `K`: the number of coordinates with `s <= p^{r_i}` (the largest such
/// index, since the sizes are non-increasing).
pub fn edge_count(spec: &ProductSpec, s: u64) -> u64 {
    spec.sizes().iter().filter(|&&size| s <= size).count() as u64
}

/// Closed-form lower bound on `tau(s)` from the edge monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TauBound {
    pub k: u64,
    pub bound: u64,
    /// The bound equals `tau(s)`; holds exactly when `s` is prime.
    pub exact: bool,
}

/// `K` for prime `s`, `K + C(K, 2)` for composite squares and `K^2`
/// otherwise.
pub fn tau_lower_bound(spec: &ProductSpec, s: u64) -> Result<TauBound, FootprintError> {
    let max = spec.sizes()[0];
    if s < 2 || s > max {
        return Err(FootprintError::BoundUndefined { s, max });
    }
    let k = edge_count(spec, s);
    let (bound, exact) = if arith::is_prime(s) {
        (k, true)
    } else if arith::is_square(s) {
        (k + arith::choose2(k), false)
    } else {
        (k * k, false)
    };
    Ok(TauBound { k, bound, exact })
}

/// Table of `sigma` over `Delta(r)` for `m <= 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaGrid {
    sizes: Vec<u64>,
    values: Vec<u64>,
}

impl SigmaGrid {
    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    /// Values in canonical exponent order (last coordinate fastest).
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn get(&self, a: &[u64]) -> u64 {
        let idx = a.iter().zip(&self.sizes).fold(0u64, |acc, (&x, &s)| acc * s + x);
        self.values[idx as usize]
    }

    /// Text layout: columns follow `a_1` left to right, rows follow `a_2`
    /// bottom to top (largest `a_2` first), and for
    /// `m = 3` one block per `a_3` separated by a `# a3=..` header.
    pub fn render(&self) -> String {
        let width = self.values.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        let s1 = self.sizes[0];
        let s2 = self.sizes.get(1).copied().unwrap_or(1);
        let s3 = self.sizes.get(2).copied().unwrap_or(1);
        let mut out = String::new();
        for a3 in 0..s3 {
            if self.sizes.len() == 3 {
                out.push_str(&format!("# a3={a3}\n"));
            }
            for a2 in (0..s2).rev() {
                let row: Vec<String> = (0..s1)
                    .map(|a1| {
                        let idx: Vec<u64> = [a1, a2, a3][..self.sizes.len()].to_vec();
                        format!("{:>width$}", self.get(&idx))
                    })
                    .collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
        }
        out
    }
}

pub fn sigma_grid(spec: &ProductSpec) -> Result<SigmaGrid, FootprintError> {
    if spec.m() > 3 {
        return Err(FootprintError::RenderCap(spec.m()));
    }
    if spec.n() > MAX_GRID_LEN {
        return Err(FootprintError::GridTooLarge(spec.n()));
    }
    let values = spec
        .exponents()
        .map(|a| sigma_unchecked(spec.sizes(), a.as_slice()))
        .collect();
    Ok(SigmaGrid {
        sizes: spec.sizes().to_vec(),
        values,
    })
}
