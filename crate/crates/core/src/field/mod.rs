//! Arithmetic in `F_{p^r}` and dense linear algebra over it.
//!
//! Elements are stored as their base-`p` coefficient encoding
//! `c_0 + c_1 p + ... + c_{r-1} p^{r-1}` with respect to a fixed monic
//! irreducible modulus. The encoding doubles as the canonical element order.
//! Multiplication goes through exp/log tables built from a primitive element
//! and odd-characteristic addition uses Zech logarithms, so every field
//! operation is a couple of table lookups.

mod matrix;
mod poly;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::arith;

pub use matrix::{EchelonBasis, Matrix};

/// Largest field order accepted by [`Field::new`].
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    CompositeP(u64),
    #[error("extension degree must be positive")]
    ZeroDegree,
    #[error("field order {p}^{r} exceeds the cap of {cap}")]
    TooLarge { p: u64, r: u32, cap: u64 },
    #[error("{s} does not divide the extension degree {r}")]
    NotADivisor { s: u32, r: u32 },
    #[error("vector lengths differ ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("matrix dimensions {0}x{1} and {2}x{3} are incompatible")]
    DimensionMismatch(usize, usize, usize, usize),
    #[error("value {value} is not an element of a field of order {q}")]
    NotAnElement { value: u64, q: u32 },
}

/// An element of `F_q`, encoded as a base-`p` integer of its coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// The base-`p` integer encoding.
    pub fn encoding(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub(crate) fn from_encoding(encoding: u32) -> FieldElement {
        FieldElement(encoding)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

const NO_LOG: u32 = u32::MAX;

#[derive(Debug)]
struct Tables {
    p: u32,
    r: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: u32,
    /// `exp[i] = g^i`, stored for `0 <= i < 2(q-1)` so sums of two logs
    /// never need a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `zech[k] = log(1 + g^k)`, or `NO_LOG` when `1 + g^k = 0`.
    zech: Vec<u32>,
}

/// The finite field `F_{p^r}` with its canonical modulus.
///
/// Cloning is cheap: the lookup tables are shared.
#[derive(Clone)]
pub struct Field {
    t: Arc<Tables>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.t.p)
            .field("r", &self.t.r)
            .field("modulus", &self.t.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.t.p == other.t.p && self.t.r == other.t.r && self.t.modulus == other.t.modulus
    }
}

impl Eq for Field {}

impl Field {
    /// Builds `F_{p^r}` using the lexicographically smallest monic
    /// irreducible polynomial of degree `r` as modulus. For `r = 1` the
    /// modulus is `X` and the field is `Z_p`.
    pub fn new(p: u64, r: u32) -> Result<Field, FieldError> {
        if !arith::is_prime(p) {
            return Err(FieldError::CompositeP(p));
        }
        if r == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = match arith::checked_pow(p, r) {
            Some(q) if q <= MAX_FIELD_ORDER => q,
            _ => {
                return Err(FieldError::TooLarge {
                    p,
                    r,
                    cap: MAX_FIELD_ORDER,
                })
            }
        };
        let p = p as u32;
        let q = q as u32;
        let modulus = if r == 1 {
            vec![0, 1]
        } else {
            canonical_modulus(p, r)
        };

        let slow = |a: u32, b: u32| poly::mul_encoded(a, b, p, &modulus);
        let generator = find_generator(q, &slow);
        let order = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * order.max(1)];
        let mut log = vec![NO_LOG; q as usize];
        let mut x = 1u32;
        for i in 0..order {
            exp[i] = x;
            exp[i + order] = x;
            log[x as usize] = i as u32;
            x = slow(x, generator);
        }
        debug_assert_eq!(x, 1, "generator order must be q - 1");

        let zech = if p == 2 {
            Vec::new()
        } else {
            (0..order)
                .map(|k| {
                    let x = exp[k];
                    let c0 = x % p;
                    let y = x - c0 + (c0 + 1) % p;
                    if y == 0 {
                        NO_LOG
                    } else {
                        log[y as usize]
                    }
                })
                .collect()
        };

        Ok(Field {
            t: Arc::new(Tables {
                p,
                r,
                q,
                modulus,
                generator,
                exp,
                log,
                zech,
            }),
        })
    }

    pub fn p(&self) -> u32 {
        self.t.p
    }

    pub fn r(&self) -> u32 {
        self.t.r
    }

    pub fn q(&self) -> u32 {
        self.t.q
    }

    /// Modulus coefficients, constant term first, including the leading 1.
    pub fn modulus(&self) -> &[u32] {
        &self.t.modulus
    }

    /// The primitive element used for the log tables.
    pub fn generator(&self) -> FieldElement {
        FieldElement(self.t.generator)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// Element from its base-`p` encoding.
    pub fn element(&self, encoding: u64) -> Result<FieldElement, FieldError> {
        if encoding < self.t.q as u64 {
            Ok(FieldElement(encoding as u32))
        } else {
            Err(FieldError::NotAnElement {
                value: encoding,
                q: self.t.q,
            })
        }
    }

    /// Element from a coefficient vector (constant term first). Missing
    /// high coefficients are zero; coefficients are reduced mod `p`.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement, FieldError> {
        if coeffs.len() > self.t.r as usize {
            return Err(FieldError::LengthMismatch {
                left: coeffs.len(),
                right: self.t.r as usize,
            });
        }
        let mut v = 0u32;
        for &c in coeffs.iter().rev() {
            v = v * self.t.p + c % self.t.p;
        }
        Ok(FieldElement(v))
    }

    /// Coefficient vector of length `r`, constant term first.
    pub fn coeffs(&self, x: FieldElement) -> Vec<u32> {
        let mut v = x.0;
        (0..self.t.r)
            .map(|_| {
                let c = v % self.t.p;
                v /= self.t.p;
                c
            })
            .collect()
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.t.q).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let t = &*self.t;
        if t.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let la = t.log[a.0 as usize];
        let lb = t.log[b.0 as usize];
        let order = t.q - 1;
        let k = if lb >= la { lb - la } else { lb + order - la };
        let z = t.zech[k as usize];
        if z == NO_LOG {
            FieldElement::ZERO
        } else {
            FieldElement(t.exp[(la + z) as usize])
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let t = &*self.t;
        if t.p == 2 || a.0 == 0 {
            return a;
        }
        // -1 = g^{(q-1)/2} in odd characteristic.
        let l = t.log[a.0 as usize] + (t.q - 1) / 2;
        FieldElement(t.exp[l as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let t = &*self.t;
        FieldElement(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a.0 == 0 {
            return None;
        }
        let t = &*self.t;
        let order = t.q - 1;
        let l = t.log[a.0 as usize];
        Some(FieldElement(t.exp[((order - l) % order.max(1)) as usize]))
    }

    /// `a^e` by square-and-multiply, with `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The subfield `F_{p^s}`: elements fixed by `x -> x^{p^s}`, in
    /// canonical order.
    pub fn subfield_elements(&self, s: u32) -> Result<Vec<FieldElement>, FieldError> {
        if s == 0 || self.t.r % s != 0 {
            return Err(FieldError::NotADivisor { s, r: self.t.r });
        }
        let frob = (self.t.p as u64).pow(s);
        let out: Vec<FieldElement> = self.elements().filter(|&x| self.pow(x, frob) == x).collect();
        debug_assert_eq!(out.len() as u64, frob);
        Ok(out)
    }

    /// Euclidean inner product `sum u_i v_i`.
    pub fn dot(&self, u: &[FieldElement], v: &[FieldElement]) -> Result<FieldElement, FieldError> {
        if u.len() != v.len() {
            return Err(FieldError::LengthMismatch {
                left: u.len(),
                right: v.len(),
            });
        }
        Ok(u
            .iter()
            .zip(v)
            .fold(FieldElement::ZERO, |acc, (&a, &b)| self.add(acc, self.mul(a, b))))
    }

    /// `dst <- dst - scale * src`, elementwise.
    #[inline]
    pub(crate) fn sub_scaled(&self, dst: &mut [FieldElement], src: &[FieldElement], scale: FieldElement) {
        if scale.is_zero() {
            return;
        }
        let s = self.neg(scale);
        for (d, &x) in dst.iter_mut().zip(src) {
            *d = self.add(*d, self.mul(s, x));
        }
    }

    /// `dst <- dst + scale * src`, elementwise.
    #[inline]
    pub(crate) fn add_scaled(&self, dst: &mut [FieldElement], src: &[FieldElement], scale: FieldElement) {
        if scale.is_zero() {
            return;
        }
        for (d, &x) in dst.iter_mut().zip(src) {
            *d = self.add(*d, self.mul(scale, x));
        }
    }
}

/// Free-function form of [`Field::dot`].
pub fn dot(f: &Field, u: &[FieldElement], v: &[FieldElement]) -> Result<FieldElement, FieldError> {
    f.dot(u, v)
}

/// First monic irreducible of degree `r` when coefficient vectors
/// `(c_0, ..., c_{r-1})` are compared lexicographically, `c_0` first.
fn canonical_modulus(p: u32, r: u32) -> Vec<u32> {
    let count = (p as u64).pow(r);
    for idx in 0..count {
        // Decode with c_0 as the most significant digit.
        let mut coeffs = vec![0u32; r as usize + 1];
        let mut v = idx;
        for i in (0..r as usize).rev() {
            coeffs[i] = (v % p as u64) as u32;
            v /= p as u64;
        }
        coeffs[r as usize] = 1;
        if poly::is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn find_generator(q: u32, mul: &dyn Fn(u32, u32) -> u32) -> u32 {
    if q == 2 {
        return 1;
    }
    let order = (q - 1) as u64;
    let cofactors: Vec<u64> = arith::prime_factors(order).iter().map(|l| order / l).collect();
    let pow = |mut base: u32, mut e: u64| {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        acc
    };
    (2..q)
        .find(|&g| cofactors.iter().all(|&c| pow(g, c) != 1))
        .expect("multiplicative group is cyclic")
}
