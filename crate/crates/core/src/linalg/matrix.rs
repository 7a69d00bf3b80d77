use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use super::poly::RatPolynomial;
use crate::error::{Error, Result};
use crate::rational::{to_exact_string, Rational};

/// Largest dimension accepted by the exact routines unless overridden.
pub const DEFAULT_MAX_DIM: usize = 512;

/// Size guardrail for cubic-cost exact operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_dim: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_dim: DEFAULT_MAX_DIM,
        }
    }
}

impl Limits {
    fn check(&self, m: &RatMatrix) -> Result<()> {
        let dim = m.rows.max(m.cols);
        if dim > self.max_dim {
            return Err(Error::TooLarge {
                dim,
                limit: self.max_dim,
            });
        }
        Ok(())
    }
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    /// The all-ones matrix `J`.
    pub fn ones(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::one(); rows * cols],
        }
    }

    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Rational,
    {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let n = rows.len();
        Ok(RatMatrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_integers<const C: usize>(rows: &[[i64; C]]) -> Self {
        Self::from_fn(rows.len(), C, |i, j| Rational::from_integer(BigInt::from(rows[i][j])))
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { Rational::zero() })
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

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn row_sums(&self) -> Vec<Rational> {
        self.iter_rows().map(|r| r.iter().sum()).collect()
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn trace(&self) -> Result<Rational> {
        self.require_square()?;
        Ok((0..self.rows).map(|i| &self[(i, i)]).sum())
    }

    /// `A(S|T)`: the submatrix left after deleting rows `S` and columns `T`.
    /// Remaining entries keep their relative order; repeated indices are
    /// deleted once.
    pub fn delete(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        let keep = |drop: &[usize], size: usize| -> Result<Vec<usize>> {
            if let Some(&bad) = drop.iter().find(|&&i| i >= size) {
                return Err(Error::IndexOutOfRange { index: bad, size });
            }
            Ok((0..size).filter(|i| !drop.contains(i)).collect())
        };
        let keep_rows = keep(rows, self.rows)?;
        let keep_cols = keep(cols, self.cols)?;
        Ok(Self::from_fn(keep_rows.len(), keep_cols.len(), |i, j| {
            self[(keep_rows[i], keep_cols[j])].clone()
        }))
    }

    pub fn det(&self) -> Result<Rational> {
        self.det_with(&Limits::default())
    }

    /// Determinant by fraction-free (Bareiss) elimination. Each row is first
    /// scaled by the lcm of its denominators so the elimination runs over
    /// integers; the scale factors are divided back out at the end.
    pub fn det_with(&self, limits: &Limits) -> Result<Rational> {
        self.require_square()?;
        limits.check(self)?;
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }

        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for row in self.iter_rows() {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            a.push(row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect());
            scale *= lcm;
        }

        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(Rational::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let mut det = a[n - 1][n - 1].clone();
        if negate {
            det = -det;
        }
        Ok(Rational::new(det, scale))
    }

    pub fn inverse(&self) -> Result<Self> {
        self.inverse_with(&Limits::default())
    }

    /// Gauss–Jordan elimination taking the first nonzero pivot in each column.
    pub fn inverse_with(&self, limits: &Limits) -> Result<Self> {
        self.require_square()?;
        limits.check(self)?;
        let n = self.rows;
        let mut a: Vec<Vec<Rational>> = self.iter_rows().map(<[Rational]>::to_vec).collect();
        let mut inv: Vec<Vec<Rational>> = Self::identity(n).iter_rows().map(<[Rational]>::to_vec).collect();

        for col in 0..n {
            let pivot = (col..n).find(|&i| !a[i][col].is_zero()).ok_or(Error::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);

            let p = a[col][col].clone();
            for x in a[col].iter_mut() {
                *x /= &p;
            }
            for x in inv[col].iter_mut() {
                *x /= &p;
            }
            for i in 0..n {
                if i == col || a[i][col].is_zero() {
                    continue;
                }
                let factor = a[i][col].clone();
                for j in 0..n {
                    let t = &factor * &a[col][j];
                    a[i][j] -= t;
                    let t = &factor * &inv[col][j];
                    inv[i][j] -= t;
                }
            }
        }
        Ok(RatMatrix {
            rows: n,
            cols: n,
            data: inv.into_iter().flatten().collect(),
        })
    }

    pub fn char_poly(&self) -> Result<RatPolynomial> {
        self.char_poly_with(&Limits::default())
    }

    /// `det(A − xI)` via Faddeev–LeVerrier.
    ///
    /// The recurrence produces `det(xI − A) = Σ c_k x^k` with `c_n = 1`:
    /// `M_k = A M_{k−1} + c_{n−k+1} I`, `c_{n−k} = −tr(A M_k) / k`.
    pub fn char_poly_with(&self, limits: &Limits) -> Result<RatPolynomial> {
        self.require_square()?;
        limits.check(self)?;
        let n = self.rows;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();

        let mut m = RatMatrix::zeros(n, n);
        for k in 1..=n {
            let c_prev = coeffs[n - k + 1].clone();
            let mut next = self * &m;
            for i in 0..n {
                next[(i, i)] += &c_prev;
            }
            let am = self * &next;
            let tr: Rational = (0..n).map(|i| &am[(i, i)]).sum();
            coeffs[n - k] = -tr / Rational::from_integer(BigInt::from(k));
            m = next;
        }
        if n % 2 == 1 {
            for c in coeffs.iter_mut() {
                *c = -c.clone();
            }
        }
        Ok(RatPolynomial::new(coeffs))
    }

    /// Rows as comma-separated `p/q` values.
    pub fn to_csv(&self) -> String {
        self.render_rows(",", to_exact_string)
    }

    /// One row per line, entries joined by `sep` after `render`.
    pub fn render_rows<F>(&self, sep: &str, mut render: F) -> String
    where
        F: FnMut(&Rational) -> String,
    {
        let mut out = String::new();
        for row in self.iter_rows() {
            let cells: Vec<String> = row.iter().map(&mut render).collect();
            out.push_str(&cells.join(sep));
            out.push('\n');
        }
        out
    }

    /// Array of arrays of `p/q` strings.
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("matrix serialization is infallible")
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<'a> Mul for &'a RatMatrix {
    type Output = RatMatrix;

    fn mul(self, rhs: &'a RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add for &'a RatMatrix {
    type Output = RatMatrix;

    fn add(self, rhs: &'a RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum dimension mismatch");
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub for &'a RatMatrix {
    type Output = RatMatrix;

    fn sub(self, rhs: &'a RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference dimension mismatch");
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RatMatrix {
    type Output = RatMatrix;

    fn neg(self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.iter_rows() {
            let cells: Vec<String> = row.iter().map(to_exact_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for row in self.iter_rows() {
            let cells: Vec<String> = row.iter().map(to_exact_string).collect();
            seq.serialize_element(&cells)?;
        }
        seq.end()
    }
}
