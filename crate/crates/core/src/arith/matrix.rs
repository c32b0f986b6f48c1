use std::fmt;
use std::ops::Mul;

use super::laurent::LaurentPoly;
use super::ratfunc::RationalFunction;
use crate::error::{Error, Result};

/// Dense square matrix over [`LaurentPoly`], stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RepMatrix {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl RepMatrix {
    pub fn zero(dim: usize) -> Self {
        RepMatrix { dim, entries: vec![LaurentPoly::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, &LaurentPoly::one())
    }

    pub fn scalar(dim: usize, c: &LaurentPoly) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = c.clone();
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        RepMatrix { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { left: dim, right: row.len() });
            }
            entries.extend(row);
        }
        Ok(RepMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    /// `(row, col, entry)` for every nonzero entry, row-major.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &LaurentPoly)> {
        let d = self.dim;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(move |(k, e)| (k / d, k % d, e))
    }

    pub fn is_identity(&self) -> bool {
        self.as_scalar().map(|c| c.is_one()).unwrap_or(false)
    }

    /// The scalar `c` when the matrix equals `c · I`.
    pub fn as_scalar(&self) -> Option<LaurentPoly> {
        if self.dim == 0 {
            return Some(LaurentPoly::one());
        }
        let c = self.get(0, 0).clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let e = self.get(i, j);
                if (i == j && *e != c) || (i != j && !e.is_zero()) {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        RepMatrix { dim: self.dim, entries: self.entries.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        self.map(|e| e * c)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(RepMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(RepMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    /// Exact product; zero entries of `self` are skipped, which makes products
    /// with sparse generator matrices cheap.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let d = self.dim;
        let mut out = Self::zero(d);
        for i in 0..d {
            let out_row = &mut out.entries[i * d..(i + 1) * d];
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.entries[k * d..(k + 1) * d].iter().enumerate() {
                    if !b.is_zero() {
                        out_row[j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Smallest and largest `t`-exponent over all entries.
    pub fn t_degree_range(&self) -> Result<(i32, i32)> {
        self.entries
            .iter()
            .filter_map(LaurentPoly::t_range)
            .fold(None, |acc: Option<(i32, i32)>, (lo, hi)| match acc {
                None => Some((lo, hi)),
                Some((a, b)) => Some((a.min(lo), b.max(hi))),
            })
            .ok_or(Error::ZeroMatrix)
    }

    /// Inverse over the Laurent ring.
    ///
    /// Runs fraction-free Gauss-Jordan elimination on `[A | I]`, turns the
    /// result into quotients `adj / det`, and requires each quotient to reduce to
    /// a Laurent polynomial. The product `A · A⁻¹ = I` is checked before returning.
    pub fn inverse(&self) -> Result<Self> {
        let d = self.dim;
        let w = 2 * d;
        let mut aug: Vec<Vec<LaurentPoly>> = (0..d)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..d).map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }));
                row
            })
            .collect();
        let mut prev = LaurentPoly::one();
        for k in 0..d {
            let pivot = (k..d)
                .filter(|&r| !aug[r][k].is_zero())
                .min_by_key(|&r| aug[r][k].len())
                .ok_or(Error::Singular)?;
            aug.swap(k, pivot);
            let pivot_row = aug[k].clone();
            let pk = pivot_row[k].clone();
            for (i, row) in aug.iter_mut().enumerate() {
                if i == k {
                    continue;
                }
                let factor = row[k].clone();
                for j in 0..w {
                    if j == k {
                        continue;
                    }
                    let val = &(&pk * &row[j]) - &(&factor * &pivot_row[j]);
                    row[j] = val.div_exact(&prev).ok_or(Error::Singular)?;
                }
                row[k] = LaurentPoly::zero();
            }
            prev = pk;
        }
        // Left block is now det · I (up to the row-swap sign, which is carried by each diagonal).
        let mut inv = Self::zero(d);
        for (i, row) in aug.iter().enumerate() {
            for j in 0..d {
                let q = RationalFunction::new(row[d + j].clone(), row[i].clone())?;
                let entry = q.to_laurent().ok_or(Error::NotLaurent { row: i, col: j })?;
                inv.set(i, j, entry);
            }
        }
        if !self.try_mul(&inv)?.is_identity() {
            return Err(Error::InverseCheckFailed);
        }
        Ok(inv)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }
}

impl Mul for &RepMatrix {
    type Output = RepMatrix;

    /// Panics on a dimension mismatch; use [`RepMatrix::try_mul`] for a checked product.
    fn mul(self, rhs: &RepMatrix) -> RepMatrix {
        self.try_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl fmt::Display for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn burau_block() -> RepMatrix {
        RepMatrix::from_rows(vec![vec![p("1 + -1*t"), p("t")], vec![p("1"), p("0")]]).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let a = RepMatrix::from_fn(3, |i, j| LaurentPoly::monomial(i as i64 - j as i64 + 2, i as i32, -(j as i32)));
        assert_eq!(&a * &RepMatrix::identity(3), a);
        assert_eq!(&RepMatrix::identity(3) * &a, a);
        assert!(RepMatrix::identity(2).try_mul(&RepMatrix::identity(3)).is_err());
    }

    #[test]
    fn inverse_of_burau_block() {
        let inv = burau_block().inverse().unwrap();
        let expected =
            RepMatrix::from_rows(vec![vec![p("0"), p("1")], vec![p("t^-1"), p("1 + -1*t^-1")]]).unwrap();
        assert_eq!(inv, expected);
        assert!((&burau_block() * &inv).is_identity());
        assert_eq!(RepMatrix::identity(4).inverse().unwrap(), RepMatrix::identity(4));
    }

    #[test]
    fn inverse_of_one_by_one() {
        let m = RepMatrix::scalar(1, &p("q^2*t"));
        let inv = m.inverse().unwrap();
        assert_eq!(inv.get(0, 0), &p("q^-2*t^-1"));
        assert_eq!(inv.t_degree_range().unwrap(), (-1, -1));
        assert_eq!(m.t_degree_range().unwrap(), (1, 1));
    }

    #[test]
    fn inverse_errors() {
        let singular = RepMatrix::from_rows(vec![vec![p("1"), p("t")], vec![p("q"), p("q*t")]]).unwrap();
        assert_eq!(singular.inverse().unwrap_err(), Error::Singular);
        let non_unit = RepMatrix::scalar(2, &p("1 + t"));
        assert!(matches!(non_unit.inverse().unwrap_err(), Error::NotLaurent { .. }));
    }

    #[test]
    fn degree_range() {
        assert_eq!(RepMatrix::identity(3).t_degree_range().unwrap(), (0, 0));
        assert_eq!(RepMatrix::zero(2).t_degree_range().unwrap_err(), Error::ZeroMatrix);
        assert_eq!(burau_block().t_degree_range().unwrap(), (0, 1));
    }

    #[test]
    fn inverse_with_pivoting() {
        // needs a row swap at the first step
        let m = RepMatrix::from_rows(vec![
            vec![p("0"), p("1"), p("0")],
            vec![p("q"), p("1 + -1*q"), p("0")],
            vec![p("0"), p("t*q^2"), p("1")],
        ])
        .unwrap();
        let inv = m.inverse().unwrap();
        assert!((&inv * &m).is_identity());
    }
}
