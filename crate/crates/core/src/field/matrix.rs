use super::{Field, FieldElement, FieldError};

/// Dense row-major matrix over a finite field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<FieldElement>) -> Result<Matrix, FieldError> {
        if data.len() != rows * cols {
            return Err(FieldError::LengthMismatch {
                left: data.len(),
                right: rows * cols,
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from equal-length rows. An empty list yields a
    /// `0 x cols` matrix.
    pub fn from_rows(rows: Vec<Vec<FieldElement>>, cols: usize) -> Result<Matrix, FieldError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(FieldError::LengthMismatch {
                    left: row.len(),
                    right: cols,
                });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: FieldElement) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [FieldElement] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[FieldElement]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn as_slice(&self) -> &[FieldElement] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Rows `self` followed by rows of `other`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix, FieldError> {
        if self.cols != other.cols {
            return Err(FieldError::DimensionMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn mul(&self, rhs: &Matrix, f: &Field) -> Result<Matrix, FieldError> {
        if self.cols != rhs.rows {
            return Err(FieldError::DimensionMismatch(
                self.rows, self.cols, rhs.rows, rhs.cols,
            ));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let acc = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
            for (k, &a) in self.row(i).iter().enumerate() {
                f.add_scaled(acc, rhs.row(k), a);
            }
        }
        Ok(out)
    }

    /// `self * other^T`, i.e. all pairwise row dot products.
    pub fn mul_transpose(&self, other: &Matrix, f: &Field) -> Result<Matrix, FieldError> {
        if self.cols != other.cols {
            return Err(FieldError::DimensionMismatch(
                self.rows, self.cols, other.cols, other.rows,
            ));
        }
        let mut out = Matrix::zeros(self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                out.set(i, j, f.dot(self.row(i), other.row(j))?);
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self, f: &Field) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(piv) = (row..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, piv);
            let inv = f.inv(m.get(row, col)).expect("pivot is nonzero");
            for x in m.row_mut(row) {
                *x = f.mul(*x, inv);
            }
            let pivot_row = m.row(row).to_vec();
            for i in 0..m.rows {
                if i != row {
                    let factor = m.get(i, col);
                    f.sub_scaled(m.row_mut(i), &pivot_row, factor);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Rank by forward elimination.
    pub fn rank(&self, f: &Field) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(piv) = (rank..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            m.swap_rows(rank, piv);
            let inv = f.inv(m.get(rank, col)).expect("pivot is nonzero");
            let pivot_row: Vec<FieldElement> = m.row(rank).iter().map(|&x| f.mul(x, inv)).collect();
            for i in rank + 1..m.rows {
                let factor = m.get(i, col);
                f.sub_scaled(m.row_mut(i), &pivot_row, factor);
            }
            rank += 1;
        }
        rank
    }

    /// Basis (as rows) of the right kernel `{x : self * x = 0}`.
    pub fn nullspace(&self, f: &Field) -> Matrix {
        let (r, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            basis.set(b, fc, FieldElement::ONE);
            for (i, &pc) in pivots.iter().enumerate() {
                basis.set(b, pc, f.neg(r.get(i, fc)));
            }
        }
        basis
    }
}

/// Incrementally built row space with membership tests.
///
/// Stored rows have a leading 1 in their pivot column and a zero in the
/// pivot column of every earlier row, so reducing a vector by the rows in
/// insertion order clears all pivot positions.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    field: Field,
    cols: usize,
    rows: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: &Field, cols: usize) -> EchelonBasis {
        EchelonBasis {
            field: field.clone(),
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_matrix(field: &Field, m: &Matrix) -> EchelonBasis {
        let mut b = EchelonBasis::new(field, m.cols());
        for row in m.iter_rows() {
            b.insert(row);
        }
        b
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [FieldElement]) {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let factor = v[pc];
            self.field.sub_scaled(v, row, factor);
        }
    }

    /// Adds `v` to the span. Returns `false` when it was already contained.
    pub fn insert(&mut self, v: &[FieldElement]) -> bool {
        assert_eq!(v.len(), self.cols, "vector length");
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(pc) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = self.field.inv(w[pc]).expect("nonzero");
        for x in w.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        self.rows.push(w);
        self.pivots.push(pc);
        true
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        assert_eq!(v.len(), self.cols, "vector length");
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }
}
