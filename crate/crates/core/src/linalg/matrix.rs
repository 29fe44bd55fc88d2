use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::IntPolynomial;
use crate::error::LinalgError;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { 1 } else { 0 })
    }

    /// The all-ones matrix `J`.
    pub fn all_ones(n: usize) -> Self {
        Self::from_fn(n, n, |_, _| 1)
    }

    pub fn from_fn<T: Into<BigInt>>(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> T,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j).into());
            }
        }
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<T: Clone + Into<BigInt>>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| rows[i][j].clone())
    }

    /// `u vᵀ`.
    pub fn outer(u: &[BigInt], v: &[BigInt]) -> Self {
        Self::from_fn(u.len(), v.len(), |i, j| &u[i] * &v[j])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    fn square_size(&self) -> Result<usize, LinalgError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&BigInt, &BigInt) -> BigInt,
    ) -> Result<Self, LinalgError> {
        if self.shape() != other.shape() {
            return Err(LinalgError::DimensionMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scalar_mul(&self, k: &BigInt) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * k).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scalar_mul(&-BigInt::one())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix, `vᵀ M`.
    pub fn left_mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>, LinalgError> {
        if v.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                left: (1, v.len()),
                right: self.shape(),
            });
        }
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (o, m) in out.iter_mut().zip(self.row(i)) {
                if !m.is_zero() {
                    *o += vi * m;
                }
            }
        }
        Ok(out)
    }

    /// Matrix times column vector, `M v`.
    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn pow(&self, k: u32) -> Result<Self, LinalgError> {
        let n = self.square_size()?;
        let mut acc = IntMatrix::identity(n);
        for _ in 0..k {
            acc = acc.matmul(self)?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Result<BigInt, LinalgError> {
        let n = self.square_size()?;
        Ok((0..n).map(|i| self.get(i, i)).sum())
    }

    /// `1ᵀ M 1`.
    pub fn sum_entries(&self) -> BigInt {
        self.entries.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| self.get(i, i).is_one() && (0..i).all(|j| self.get(i, j).is_zero()))
    }

    /// True iff `Mⁿ = 0`, `n` the size. Squares repeatedly up to the first
    /// power of two `≥ n`, which vanishes exactly when `Mⁿ` does.
    pub fn is_nilpotent(&self) -> Result<bool, LinalgError> {
        let n = self.square_size()?;
        let mut power = self.clone();
        let mut exponent = 1;
        while exponent < n && !power.is_zero() {
            power = power.matmul(&power)?;
            exponent *= 2;
        }
        Ok(n == 0 || power.is_zero())
    }

    /// Exact determinant by fraction-free (Bareiss) elimination. A zero
    /// pivot is swapped with the first lower row that is nonzero in that
    /// column; a column with no such row makes the determinant zero.
    pub fn determinant(&self) -> Result<BigInt, LinalgError> {
        let n = self.square_size()?;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            let (upper, lower) = a.split_at_mut(k + 1);
            let pivot_row = &upper[k];
            let pivot = &pivot_row[k];
            for row in lower.iter_mut() {
                let factor = row[k].clone();
                for j in k + 1..n {
                    let v = pivot * &row[j] - &factor * &pivot_row[j];
                    // exact by Sylvester's identity
                    row[j] = v / &prev;
                }
                row[k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }

    /// Characteristic polynomial `det(M − λI)` by Berkowitz's division-free
    /// algorithm. Every intermediate value is an integer.
    pub fn charpoly(&self) -> Result<IntPolynomial, LinalgError> {
        let n = self.square_size()?;
        // coefficients of det(λI − A_k), highest degree first, for the
        // leading principal k×k block A_k
        let mut coeffs = vec![BigInt::one()];
        for k in 1..=n {
            let m = k - 1;
            let diag = self.get(m, m);
            let column: Vec<BigInt> = (0..m).map(|i| self.get(i, m).clone()).collect();
            let row: Vec<BigInt> = (0..m).map(|j| self.get(m, j).clone()).collect();

            // first column of the Toeplitz matrix:
            // 1, −a, −r c, −r A c, …, −r A^{m−1} c
            let mut toeplitz = Vec::with_capacity(k + 1);
            toeplitz.push(BigInt::one());
            toeplitz.push(-diag);
            let mut power_c = column;
            for step in 0..m {
                let dot: BigInt = row.iter().zip(&power_c).map(|(a, b)| a * b).sum();
                toeplitz.push(-dot);
                if step + 1 < m {
                    power_c = (0..m)
                        .map(|i| (0..m).map(|j| self.get(i, j) * &power_c[j]).sum())
                        .collect();
                }
            }

            let mut next = vec![BigInt::zero(); k + 1];
            for (i, out) in next.iter_mut().enumerate() {
                for (j, c) in coeffs.iter().enumerate().take(i + 1) {
                    let t = &toeplitz[i - j];
                    if !t.is_zero() && !c.is_zero() {
                        *out += t * c;
                    }
                }
            }
            coeffs = next;
        }
        // highest-first det(λI − M) → lowest-first det(M − λI)
        coeffs.reverse();
        let poly = IntPolynomial::new(coeffs);
        Ok(if n % 2 == 1 { poly.neg() } else { poly })
    }
}

impl fmt::Display for IntMatrix {
    /// One line per row, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(BigInt::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Column vector of ones, `1`.
pub fn ones_vector(n: usize) -> Vec<BigInt> {
    vec![BigInt::one(); n]
}
