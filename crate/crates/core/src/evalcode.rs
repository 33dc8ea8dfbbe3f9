//! Explicit evaluation codes `C(L)` over the Cartesian point set and the
//! brute-force oracles used to certify the combinatorial claims: rank,
//! exhaustive minimum distance, minimum-weight witnesses and duality.

use std::io::{self, Write};

use thiserror::Error;

use crate::field::{EchelonBasis, Field, FieldElement, FieldError, Matrix};
use crate::footprint::{
    self, mu_unchecked, sigma_unchecked, DefiningSet, Exponent, FootprintError, ProductSpec,
};

/// Default cap on the code length for dense-matrix work.
pub const DEFAULT_MATRIX_CAP: u64 = 1 << 12;

/// Cap on `q^k` for exhaustive codeword enumeration.
pub const MAX_BRUTE_CODEWORDS: u64 = 1 << 22;

#[derive(Debug, Error)]
pub enum EvalError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Footprint(#[from] FootprintError),
    #[error("code length {n} exceeds the dense-matrix cap {cap}")]
    TooLarge { n: u64, cap: u64 },
    #[error("r_i = {r_i} does not divide the ambient degree {ambient}")]
    IncompatibleAmbient { r_i: u32, ambient: u32 },
    #[error("field characteristic {field} differs from p = {spec}")]
    CharacteristicMismatch { field: u32, spec: u64 },
    #[error("q^k = {q}^{k} codewords exceed the enumeration cap")]
    BruteForceTooLarge { q: u32, k: usize },
    #[error("the code has dimension 0")]
    EmptyCode,
    #[error("defining set belongs to a different product spec")]
    SpecMismatch,
    #[error("malformed matrix dump: {0}")]
    Dump(String),
}

/// The Cartesian product `S = F_{p^{r_1}} x ... x F_{p^{r_m}}` inside
/// `F_q^m`, ordered with the last coordinate varying fastest.
#[derive(Debug, Clone)]
pub struct PointSet {
    spec: ProductSpec,
    field: Field,
    coords: Vec<Vec<FieldElement>>,
}

impl PointSet {
    /// Builds the ambient field `F_{p^{ambient_r}}` of `spec` and the point set.
    pub fn new(spec: &ProductSpec) -> Result<PointSet, EvalError> {
        PointSet::with_cap(spec, DEFAULT_MATRIX_CAP)
    }

    pub fn with_cap(spec: &ProductSpec, cap: u64) -> Result<PointSet, EvalError> {
        if spec.n() > cap {
            return Err(EvalError::TooLarge { n: spec.n(), cap });
        }
        let field = Field::new(spec.p(), spec.ambient_r())?;
        PointSet::with_field(spec, &field, cap)
    }

    /// Uses an explicit ambient field; each `r_i` must divide its degree.
    pub fn with_field(spec: &ProductSpec, field: &Field, cap: u64) -> Result<PointSet, EvalError> {
        if spec.n() > cap {
            return Err(EvalError::TooLarge { n: spec.n(), cap });
        }
        if field.p() as u64 != spec.p() {
            return Err(EvalError::CharacteristicMismatch {
                field: field.p(),
                spec: spec.p(),
            });
        }
        if let Some(&r_i) = spec.r_vec().iter().find(|&&r| field.r() % r != 0) {
            return Err(EvalError::IncompatibleAmbient {
                r_i,
                ambient: field.r(),
            });
        }
        let coords = spec
            .r_vec()
            .iter()
            .map(|&r| field.subfield_elements(r))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PointSet {
            spec: spec.clone(),
            field: field.clone(),
            coords,
        })
    }

    pub fn spec(&self) -> &ProductSpec {
        &self.spec
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.spec.n() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Canonically ordered elements of `F_{p^{r_i}}`.
    pub fn coordinate_values(&self, i: usize) -> &[FieldElement] {
        &self.coords[i]
    }

    /// All points, in order.
    pub fn points(&self) -> Vec<Vec<FieldElement>> {
        self.tensor(|i| self.coords[i].iter().map(|&x| vec![x]).collect(), |mut a, b| {
            a.extend(b);
            a
        })
    }

    /// Outer product over coordinates with the last coordinate fastest.
    fn tensor<T: Clone>(&self, per_coord: impl Fn(usize) -> Vec<T>, combine: impl Fn(T, &T) -> T) -> Vec<T> {
        let mut acc = per_coord(0);
        for i in 1..self.spec.m() {
            let next = per_coord(i);
            acc = acc
                .into_iter()
                .flat_map(|x| next.iter().map(|y| combine(x.clone(), y)).collect::<Vec<_>>())
                .collect();
        }
        acc
    }

    fn product_vector(&self, factors: Vec<Vec<FieldElement>>) -> Vec<FieldElement> {
        let f = &self.field;
        self.tensor(|i| factors[i].clone(), |x, &y| f.mul(x, y))
    }

    /// `ev(X^a)`: the monomial evaluated at every point.
    pub fn evaluate_monomial(&self, a: &Exponent) -> Result<Vec<FieldElement>, EvalError> {
        a.validate(&self.spec)?;
        let f = &self.field;
        let factors = a
            .as_slice()
            .iter()
            .zip(&self.coords)
            .map(|(&e, vals)| vals.iter().map(|&x| f.pow(x, e)).collect())
            .collect();
        Ok(self.product_vector(factors))
    }

    /// Generator matrix with one row `ev(X^a)` per member of `l`.
    pub fn generator_matrix(&self, l: &DefiningSet) -> Result<Matrix, EvalError> {
        if l.spec().sizes() != self.spec.sizes() || l.spec().p() != self.spec.p() {
            return Err(EvalError::SpecMismatch);
        }
        let rows = l
            .members()
            .iter()
            .map(|a| self.evaluate_monomial(a))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_rows(rows, self.len())?)
    }
}

/// `C(L)` with its generator matrix.
#[derive(Debug, Clone)]
pub struct EvalCode {
    points: PointSet,
    defining_set: DefiningSet,
    gen: Matrix,
}

impl EvalCode {
    pub fn new(points: &PointSet, l: &DefiningSet) -> Result<EvalCode, EvalError> {
        let gen = points.generator_matrix(l)?;
        Ok(EvalCode {
            points: points.clone(),
            defining_set: l.clone(),
            gen,
        })
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn field(&self) -> &Field {
        &self.points.field
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.defining_set
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn length(&self) -> usize {
        self.gen.cols()
    }

    pub fn rank(&self) -> usize {
        self.gen.rank(self.field())
    }

    /// Row space of the generator, for membership tests.
    pub fn row_space(&self) -> EchelonBasis {
        EchelonBasis::from_matrix(self.field(), &self.gen)
    }
}

/// Builds `C(L)` inside `F_{p^{ambient_r}}`.
pub fn build_code(spec: &ProductSpec, l: &DefiningSet, ambient_r: u32) -> Result<EvalCode, EvalError> {
    if let Some(&r_i) = spec.r_vec().iter().find(|&&r| ambient_r == 0 || ambient_r % r != 0) {
        return Err(EvalError::IncompatibleAmbient {
            r_i,
            ambient: ambient_r,
        });
    }
    if spec.n() > DEFAULT_MATRIX_CAP {
        return Err(EvalError::TooLarge {
            n: spec.n(),
            cap: DEFAULT_MATRIX_CAP,
        });
    }
    let field = Field::new(spec.p(), ambient_r)?;
    let points = PointSet::with_field(spec, &field, DEFAULT_MATRIX_CAP)?;
    EvalCode::new(&points, l)
}

pub fn hamming_weight(v: &[FieldElement]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

fn weight_capped(v: &[FieldElement], cap: usize) -> usize {
    let mut w = 0;
    for x in v {
        if !x.is_zero() {
            w += 1;
            if w >= cap {
                return w;
            }
        }
    }
    w
}

/// Minimum Hamming weight over all nonzero codewords, by enumerating the
/// message space.
///
/// Only messages whose first nonzero coordinate is 1 are visited, since
/// scalar multiples share a weight.
pub fn brute_min_distance(code: &EvalCode) -> Result<u64, EvalError> {
    let k = code.gen.rows();
    if k == 0 {
        return Err(EvalError::EmptyCode);
    }
    let q = code.field().q();
    let total = (q as u64).checked_pow(k as u32);
    if total.is_none_or(|t| t > MAX_BRUTE_CODEWORDS) {
        return Err(EvalError::BruteForceTooLarge { q, k });
    }

    struct Search<'a> {
        field: &'a Field,
        gen: &'a Matrix,
        bufs: Vec<Vec<FieldElement>>,
        best: usize,
    }

    impl Search<'_> {
        fn run(&mut self, depth: usize, cur: usize, started: bool) {
            if depth == self.gen.rows() {
                if started {
                    let w = weight_capped(&self.bufs[cur], self.best);
                    self.best = self.best.min(w);
                }
                return;
            }
            self.run(depth + 1, cur, started);
            let scalars: Box<dyn Iterator<Item = FieldElement>> = if started {
                Box::new(self.field.elements().skip(1))
            } else {
                Box::new(std::iter::once(FieldElement::ONE))
            };
            for lambda in scalars {
                let (head, tail) = self.bufs.split_at_mut(depth + 1);
                let dst = &mut tail[0];
                dst.copy_from_slice(&head[cur]);
                self.field.add_scaled(dst, self.gen.row(depth), lambda);
                self.run(depth + 1, depth + 1, true);
                if self.best <= 1 {
                    return;
                }
            }
        }
    }

    let n = code.gen.cols();
    let mut search = Search {
        field: code.field(),
        gen: &code.gen,
        bufs: vec![vec![FieldElement::ZERO; n]; k + 1],
        best: n + 1,
    };
    search.run(0, 0, false);
    Ok(search.best as u64)
}

/// Evaluation of `f = prod_j prod_{i < a_j} (X_j - v_i^{(j)})`, where the
/// `v^{(j)}` are the first `a_j` elements of `F_{p^{r_j}}` in canonical
/// order. The word has weight exactly `sigma(a)`.
pub fn min_weight_witness(points: &PointSet, a: &Exponent) -> Result<Vec<FieldElement>, EvalError> {
    a.validate(points.spec())?;
    let f = points.field();
    let factors = a
        .as_slice()
        .iter()
        .zip(&points.coords)
        .map(|(&aj, vals)| {
            let roots = &vals[..aj as usize];
            vals.iter()
                .map(|&x| roots.iter().fold(FieldElement::ONE, |acc, &v| f.mul(acc, f.sub(x, v))))
                .collect()
        })
        .collect();
    Ok(points.product_vector(factors))
}

/// Monomial expansion of the witness polynomial: `(b, coefficient)` pairs
/// with nonzero coefficient. Every `b` satisfies `b <= a` coordinatewise.
pub fn witness_polynomial(points: &PointSet, a: &Exponent) -> Result<Vec<(Exponent, FieldElement)>, EvalError> {
    a.validate(points.spec())?;
    let f = points.field();
    // Univariate factors prod_{i < a_j} (X - v_i), coefficients low first.
    let univariate: Vec<Vec<FieldElement>> = a
        .as_slice()
        .iter()
        .zip(&points.coords)
        .map(|(&aj, vals)| {
            let mut c = vec![FieldElement::ONE];
            for &v in &vals[..aj as usize] {
                let mut next = vec![FieldElement::ZERO; c.len() + 1];
                for (i, &ci) in c.iter().enumerate() {
                    next[i + 1] = f.add(next[i + 1], ci);
                    next[i] = f.sub(next[i], f.mul(ci, v));
                }
                c = next;
            }
            c
        })
        .collect();
    let mut terms = vec![(Vec::<u64>::new(), FieldElement::ONE)];
    for coeffs in &univariate {
        terms = terms
            .into_iter()
            .flat_map(|(b, c)| {
                coeffs.iter().enumerate().map(move |(e, &x)| {
                    let mut b = b.clone();
                    b.push(e as u64);
                    (b, f.mul(c, x))
                })
            })
            .collect();
    }
    Ok(terms
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(b, c)| (Exponent::new(b), c))
        .collect())
}

/// Checks `C(L(delta))^perp = C(L_perp(delta))` with explicit matrices:
/// `G H^T = 0` and `rank G + rank H = n`.
pub fn verify_dual_identity(points: &PointSet, delta: u64) -> Result<bool, EvalError> {
    let spec = points.spec();
    let g = points.generator_matrix(&footprint::improved_defining_set(spec, delta)?)?;
    let h = points.generator_matrix(&footprint::dual_defining_set(spec, delta)?)?;
    let f = points.field();
    let orthogonal = g.mul_transpose(&h, f)?.is_zero();
    Ok(orthogonal && g.rank(f) + h.rank(f) == points.len())
}

/// Rank augmentation: every row of the `L_perp(delta)` generator lies in the
/// row space of the `L(delta)` generator.
pub fn dual_in_row_space(points: &PointSet, delta: u64) -> Result<bool, EvalError> {
    let spec = points.spec();
    let g = points.generator_matrix(&footprint::improved_defining_set(spec, delta)?)?;
    let h = points.generator_matrix(&footprint::dual_defining_set(spec, delta)?)?;
    let f = points.field();
    Ok(g.stack(&h)?.rank(f) == g.rank(f))
}

/// Matrix-level facts about one `delta`, produced by [`duality_sweep`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaCheck {
    pub delta: u64,
    pub l_size: usize,
    pub l_perp_size: usize,
    pub rank_g: usize,
    pub rank_h: usize,
    /// `G H^T = 0`.
    pub gh_zero: bool,
    /// `H H^T = 0`.
    pub hh_zero: bool,
}

impl DeltaCheck {
    /// `C(L(delta))^perp = C(L_perp(delta))` at the matrix level.
    pub fn dual_identity(&self, n: usize) -> bool {
        self.gh_zero && self.rank_g + self.rank_h == n
    }

    /// Rows of `H` lie in the row space of `G`. Once the dual identity holds
    /// the row space of `G` is the orthogonal complement of that of `H`, so
    /// this is exactly `H H^T = 0`.
    pub fn dual_contained(&self, n: usize) -> Option<bool> {
        self.dual_identity(n).then_some(self.hh_zero)
    }
}

/// All-`delta` matrix verification for one point set.
#[derive(Debug, Clone)]
pub struct DualitySweep {
    pub n: usize,
    /// Rank of the full `n x n` evaluation matrix of `Delta(r)`.
    pub full_rank: usize,
    /// Pairs `(a, b)` where the explicit dot product disagrees with
    /// [`footprint::monomials_orthogonal`].
    pub orthogonality_mismatches: Vec<(Exponent, Exponent)>,
    /// One entry per `delta` in `1..=n+1`.
    pub checks: Vec<DeltaCheck>,
}

/// Verifies the rank, duality and orthogonality claims for every `delta`
/// at once.
///
/// The Gram matrix `E E^T` of all monomial evaluations is computed with
/// explicit dot products; `G H^T` and `H H^T` for each `delta` are
/// submatrices of it. Ranks of the nested generator matrices come from one
/// incremental elimination per family.
pub fn duality_sweep(points: &PointSet) -> Result<DualitySweep, EvalError> {
    let spec = points.spec();
    let f = points.field();
    let n = points.len();
    let exps: Vec<Exponent> = spec.exponents().collect();
    let evals = exps
        .iter()
        .map(|a| points.evaluate_monomial(a))
        .collect::<Result<Vec<_>, _>>()?;
    let sig: Vec<u64> = exps.iter().map(|a| sigma_unchecked(spec.sizes(), a.as_slice())).collect();
    let mu: Vec<u64> = exps.iter().map(|a| mu_unchecked(a.as_slice())).collect();

    // gh_bad[d] counts nonzero entries of G H^T at delta = d via interval
    // endpoints: (a, b) contributes when mu(b) < delta <= sigma(a).
    let mut gh_diff = vec![0i64; n + 3];
    // H H^T has a nonzero entry once delta exceeds max(mu(b), mu(b')).
    let mut hh_first_bad = n as u64 + 2;
    let mut mismatches = Vec::new();
    for i in 0..n {
        for j in i..n {
            let nonzero = !f.dot(&evals[i], &evals[j])?.is_zero();
            let predicted_orthogonal = footprint::monomials_orthogonal(spec, &exps[i], &exps[j])?;
            if nonzero == predicted_orthogonal {
                mismatches.push((exps[i].clone(), exps[j].clone()));
            }
            if !nonzero {
                continue;
            }
            for (a, b) in [(i, j), (j, i)] {
                let lo = mu[b] + 1;
                let hi = sig[a];
                if lo <= hi {
                    gh_diff[lo as usize] += 1;
                    gh_diff[hi as usize + 1] -= 1;
                }
            }
            hh_first_bad = hh_first_bad.min(mu[i].max(mu[j]) + 1);
        }
    }

    let mut by_sigma = vec![Vec::new(); n + 1];
    let mut by_mu = vec![Vec::new(); n + 1];
    for i in 0..n {
        by_sigma[sig[i] as usize].push(i);
        by_mu[mu[i] as usize].push(i);
    }

    // rank of G(delta) for delta = n+1 down to 1
    let mut rank_g = vec![0usize; n + 2];
    let mut size_g = vec![0usize; n + 2];
    let mut basis = EchelonBasis::new(f, n);
    let mut size = 0;
    for delta in (1..=n).rev() {
        for &i in &by_sigma[delta] {
            basis.insert(&evals[i]);
            size += 1;
        }
        rank_g[delta] = basis.rank();
        size_g[delta] = size;
    }
    let full_rank = basis.rank();

    // rank of H(delta) for delta = 1 up to n+1
    let mut rank_h = vec![0usize; n + 2];
    let mut size_h = vec![0usize; n + 2];
    let mut basis = EchelonBasis::new(f, n);
    let mut size = 0;
    for delta in 2..=n + 1 {
        for &i in &by_mu[delta - 1] {
            basis.insert(&evals[i]);
            size += 1;
        }
        rank_h[delta] = basis.rank();
        size_h[delta] = size;
    }

    let mut checks = Vec::with_capacity(n + 1);
    let mut running = 0i64;
    for delta in 1..=n + 1 {
        running += gh_diff[delta];
        checks.push(DeltaCheck {
            delta: delta as u64,
            l_size: size_g[delta],
            l_perp_size: size_h[delta],
            rank_g: rank_g[delta],
            rank_h: rank_h[delta],
            gh_zero: running == 0,
            hh_zero: (delta as u64) < hh_first_bad,
        });
    }
    Ok(DualitySweep {
        n,
        full_rank,
        orthogonality_mismatches: mismatches,
        checks,
    })
}

/// Plain-text matrix dump: a header line `q n k`, then one row per line
/// with entries as base-`p` integer encodings.
pub fn write_matrix_dump<W: Write>(mut w: W, q: u32, m: &Matrix) -> io::Result<()> {
    writeln!(w, "{} {} {}", q, m.cols(), m.rows())?;
    for row in m.iter_rows() {
        let line: Vec<String> = row.iter().map(|x| x.encoding().to_string()).collect();
        writeln!(w, "{}", line.join(" "))?;
    }
    Ok(())
}

/// Inverse of [`write_matrix_dump`]; returns `q` and the matrix.
pub fn read_matrix_dump(text: &str) -> Result<(u32, Matrix), EvalError> {
    let bad = |msg: &str| EvalError::Dump(msg.to_string());
    let mut lines = text.lines();
    let header: Vec<u64> = lines
        .next()
        .ok_or_else(|| bad("missing header"))?
        .split_whitespace()
        .map(|t| t.parse::<u64>().map_err(|_| bad("header is not numeric")))
        .collect::<Result<_, _>>()?;
    let [q, n, k] = header[..] else {
        return Err(bad("header must be `q n k`"));
    };
    let mut data = Vec::with_capacity((n * k) as usize);
    let mut rows = 0;
    for line in lines.filter(|l| !l.trim().is_empty()) {
        let before = data.len();
        for tok in line.split_whitespace() {
            let v: u64 = tok.parse().map_err(|_| bad("entry is not numeric"))?;
            if v >= q {
                return Err(bad("entry exceeds field order"));
            }
            data.push(FieldElement::from_encoding(v as u32));
        }
        if (data.len() - before) as u64 != n {
            return Err(bad("row length differs from n"));
        }
        rows += 1;
    }
    if rows != k {
        return Err(bad("row count differs from k"));
    }
    Ok((q as u32, Matrix::from_vec(k as usize, n as usize, data)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::footprint::{improved_defining_set, sigma};

    fn spec(p: u64, r: &[u32]) -> ProductSpec {
        ProductSpec::new(p, r).unwrap()
    }

    fn e(a: &[u64]) -> Exponent {
        Exponent::new(a.to_vec())
    }

    #[test]
    fn point_set_order() {
        let ps = PointSet::new(&spec(2, &[1, 1])).unwrap();
        let pts: Vec<Vec<u32>> = ps
            .points()
            .iter()
            .map(|p| p.iter().map(|x| x.encoding()).collect())
            .collect();
        assert_eq!(pts, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        let ps = PointSet::new(&spec(3, &[2, 1])).unwrap();
        assert_eq!(ps.points().len(), 27);
        assert_eq!(ps.coordinate_values(1).len(), 3);
    }

    #[test]
    fn ev_dot_example() {
        let ps = PointSet::new(&spec(2, &[1, 1])).unwrap();
        let v = ps.evaluate_monomial(&e(&[0, 0])).unwrap();
        assert_eq!(ps.field().dot(&v, &v).unwrap(), FieldElement::ZERO);
    }

    #[test]
    fn constant_monomial_row() {
        let sp = spec(3, &[2, 1]);
        let ps = PointSet::new(&sp).unwrap();
        let l = DefiningSet::new(&sp, vec![e(&[0, 0])]).unwrap();
        let code = EvalCode::new(&ps, &l).unwrap();
        assert_eq!(code.generator().rows(), 1);
        assert!(code.generator().row(0).iter().all(|&x| x == FieldElement::ONE));
        assert_eq!(brute_min_distance(&code).unwrap(), 27);
    }

    #[test]
    fn full_space_has_full_rank() {
        let sp = spec(2, &[1, 1]);
        let l = improved_defining_set(&sp, 1).unwrap();
        let code = build_code(&sp, &l, 1).unwrap();
        assert_eq!(code.rank(), 4);
        assert_eq!(brute_min_distance(&code).unwrap(), 1);
    }

    #[test]
    fn build_code_errors() {
        let sp = spec(2, &[2, 1]);
        let l = improved_defining_set(&sp, 3).unwrap();
        assert!(matches!(build_code(&sp, &l, 3), Err(EvalError::IncompatibleAmbient { r_i: 2, ambient: 3 })));
        let big = spec(2, &[7, 6]);
        let l = DefiningSet::new(&big, vec![e(&[0, 0])]).unwrap();
        assert!(matches!(build_code(&big, &l, 42), Err(EvalError::TooLarge { .. })));
        let empty = improved_defining_set(&sp, 9).unwrap();
        let code = build_code(&sp, &empty, 2).unwrap();
        assert!(matches!(brute_min_distance(&code), Err(EvalError::EmptyCode)));
    }

    #[test]
    fn brute_distance_examples() {
        // p=3, r=(1,1): L(4) = {(0,0),(0,1),(1,0),(1,1)}, distance 4
        let sp = spec(3, &[1, 1]);
        let l = improved_defining_set(&sp, 4).unwrap();
        assert_eq!(l.len(), 4);
        let code = build_code(&sp, &l, 1).unwrap();
        assert_eq!(brute_min_distance(&code).unwrap(), 4);

        let sp = spec(2, &[2, 1]);
        let code = build_code(&sp, &improved_defining_set(&sp, 3).unwrap(), 2).unwrap();
        assert_eq!(brute_min_distance(&code).unwrap(), 3);
    }

    #[test]
    fn brute_force_cap() {
        let sp = spec(3, &[2, 1]);
        let code = build_code(&sp, &improved_defining_set(&sp, 2).unwrap(), 2).unwrap();
        assert!(matches!(brute_min_distance(&code), Err(EvalError::BruteForceTooLarge { q: 9, .. })));
    }

    #[test]
    fn example_one_rank() {
        let sp = spec(3, &[2, 2, 1]);
        let code = build_code(&sp, &improved_defining_set(&sp, 4).unwrap(), 2).unwrap();
        assert_eq!((code.generator().rows(), code.generator().cols()), (236, 243));
        assert_eq!(code.rank(), 236);
    }

    #[test]
    fn witnesses() {
        let sp = spec(3, &[2, 1]);
        let ps = PointSet::new(&sp).unwrap();
        let w = min_weight_witness(&ps, &e(&[0, 0])).unwrap();
        assert_eq!(hamming_weight(&w), 27);
        let w = min_weight_witness(&ps, &e(&[1, 1])).unwrap();
        assert_eq!(hamming_weight(&w), 16);
        let w = min_weight_witness(&ps, &e(&[8, 2])).unwrap();
        assert_eq!(hamming_weight(&w), 1);
        assert!(min_weight_witness(&ps, &e(&[9, 0])).is_err());

        // expansion agrees with the evaluation and stays below a
        let a = e(&[3, 1]);
        let terms = witness_polynomial(&ps, &a).unwrap();
        assert!(terms.iter().all(|(b, _)| b.divides(&a)));
        let f = ps.field();
        let mut acc = vec![FieldElement::ZERO; ps.len()];
        for (b, c) in &terms {
            f.add_scaled(&mut acc, &ps.evaluate_monomial(b).unwrap(), *c);
        }
        assert_eq!(acc, min_weight_witness(&ps, &a).unwrap());
        assert_eq!(hamming_weight(&acc) as u64, sigma(&sp, &a).unwrap());
    }

    #[test]
    fn witness_in_decreasing_code() {
        let sp = spec(2, &[2, 2]);
        let ps = PointSet::new(&sp).unwrap();
        let code = EvalCode::new(&ps, &improved_defining_set(&sp, 6).unwrap()).unwrap();
        let rs = code.row_space();
        for a in code.defining_set().members() {
            assert!(rs.contains(&min_weight_witness(&ps, a).unwrap()));
        }
    }

    #[test]
    fn dual_identity_examples() {
        let ps = PointSet::new(&spec(3, &[2, 1])).unwrap();
        assert!(verify_dual_identity(&ps, 4).unwrap());
        assert!(verify_dual_identity(&ps, 1).unwrap());
        let ps = PointSet::new(&spec(2, &[2, 2])).unwrap();
        assert!(verify_dual_identity(&ps, 3).unwrap());
    }

    #[test]
    fn sweep_agrees_with_direct_checks() {
        for (p, r) in [(2u64, vec![1u32, 1]), (3, vec![2, 1]), (2, vec![2, 1, 1]), (5, vec![1, 1])] {
            let sp = spec(p, &r);
            let ps = PointSet::new(&sp).unwrap();
            let sweep = duality_sweep(&ps).unwrap();
            assert!(sweep.orthogonality_mismatches.is_empty());
            assert_eq!(sweep.full_rank, ps.len());
            for c in &sweep.checks {
                assert_eq!(c.dual_identity(ps.len()), verify_dual_identity(&ps, c.delta).unwrap());
                assert_eq!(c.dual_contained(ps.len()), Some(dual_in_row_space(&ps, c.delta).unwrap()));
                assert_eq!(
                    c.dual_contained(ps.len()),
                    Some(footprint::is_dual_containing(&sp, c.delta).unwrap())
                );
            }
        }
    }

    #[test]
    fn dump_round_trip() {
        let sp = spec(3, &[1, 1]);
        let code = build_code(&sp, &improved_defining_set(&sp, 6).unwrap(), 1).unwrap();
        let mut buf = Vec::new();
        write_matrix_dump(&mut buf, 3, code.generator()).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "3 9 3\n1 1 1 1 1 1 1 1 1\n0 1 2 0 1 2 0 1 2\n0 0 0 1 1 1 2 2 2\n");
        let (q, m) = read_matrix_dump(&text).unwrap();
        assert_eq!(q, 3);
        assert_eq!(&m, code.generator());
        assert!(read_matrix_dump("3 9 2\n1 1\n").is_err());
        assert!(read_matrix_dump("3 2 1\n1 5\n").is_err());
        assert!(read_matrix_dump("").is_err());
    }
}
