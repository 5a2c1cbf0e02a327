//! Exact linear algebra over the rationals.
//!
//! Everything downstream (Hom spaces, presentations, the AR translate) reduces
//! to rank / kernel / solve questions for matrices over Q, so these are kept
//! exact and deterministic: arbitrary-precision rationals, leftmost-nonzero
//! pivoting, no permutation heuristics.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// Exact rational scalar used throughout the crate.
pub type QRat = BigRational;

pub fn qr_zero() -> QRat {
    QRat::zero()
}

pub fn qr_one() -> QRat {
    QRat::one()
}

pub fn qr_int(n: i64) -> QRat {
    QRat::from_integer(BigInt::from(n))
}

pub fn qr_frac(num: i64, den: i64) -> QRat {
    QRat::new(BigInt::from(num), BigInt::from(den))
}

/// Dense matrix over Q, row-major. Entries are always reduced fractions with
/// positive denominator (maintained by `BigRational` itself).
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<QRat>,
}

impl std::fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "QMatrix({}x{})", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![QRat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, QRat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<QRat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        QMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&n| qr_int(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &QRat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: QRat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = QMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(r, c).clone();
                    out.set(r, c, cur + a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.entries.len() {
            out.entries[i] = &self.entries[i] + &other.entries[i];
        }
        out
    }

    pub fn neg(&self) -> QMatrix {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = -e.clone();
        }
        out
    }

    pub fn scale(&self, s: &QRat) -> QMatrix {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = e.clone() * s;
        }
        out
    }

    /// Stack `self` on top of `other` (column counts must agree).
    pub fn vstack(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        QMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Put `self` left of `other` (row counts must agree).
    pub fn hstack(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut out = QMatrix::zero(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.at(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.at(r, c).clone());
            }
        }
        out
    }

    pub fn column(&self, c: usize) -> Vec<QRat> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn from_columns(rows: usize, cols: Vec<Vec<QRat>>) -> QMatrix {
        let n = cols.len();
        let mut m = QMatrix::zero(rows, n);
        for (c, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    /// Rank over Q, by fraction-free (Bareiss) elimination on the
    /// denominator-cleared integer matrix, pivoting on the leftmost nonzero
    /// column and the first nonzero row below the front.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // Clear denominators row by row; row scaling does not change rank.
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut lcm = BigInt::one();
            for c in 0..self.cols {
                let d = self.at(r, c).denom();
                lcm = num_integer::lcm(lcm, d.clone());
            }
            a.push(
                (0..self.cols)
                    .map(|c| {
                        let q = self.at(r, c);
                        q.numer() * (&lcm / q.denom())
                    })
                    .collect(),
            );
        }
        let mut rank = 0usize;
        let mut prev = BigInt::one();
        for col in 0..self.cols {
            let pivot_row = (rank..self.rows).find(|&r| !a[r][col].is_zero());
            let Some(p) = pivot_row else { continue };
            a.swap(rank, p);
            let pivot = a[rank][col].clone();
            for r in rank + 1..self.rows {
                for c in col + 1..self.cols {
                    let num = &pivot * &a[r][c] - &a[r][col] * &a[rank][c];
                    debug_assert!((&num % &prev).is_zero(), "Bareiss exact division");
                    a[r][c] = num / &prev;
                }
                a[r][col] = BigInt::zero();
            }
            prev = pivot;
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Reduced row echelon form; returns the reduced matrix and pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..a.cols {
            if lead >= a.rows {
                break;
            }
            let Some(p) = (lead..a.rows).find(|&r| !a.at(r, col).is_zero()) else {
                continue;
            };
            // swap rows p and lead
            for c in 0..a.cols {
                let tmp = a.at(p, c).clone();
                a.set(p, c, a.at(lead, c).clone());
                a.set(lead, c, tmp);
            }
            let inv = a.at(lead, col).clone();
            for c in col..a.cols {
                let v = a.at(lead, c).clone() / &inv;
                a.set(lead, c, v);
            }
            for r in 0..a.rows {
                if r == lead || a.at(r, col).is_zero() {
                    continue;
                }
                let f = a.at(r, col).clone();
                for c in col..a.cols {
                    let v = a.at(r, c).clone() - &f * a.at(lead, c);
                    a.set(r, c, v);
                }
            }
            pivots.push(col);
            lead += 1;
        }
        (a, pivots)
    }

    /// Canonical basis of the right kernel: each free column contributes one
    /// basis column with 1 in the free slot and the negated RREF entries in
    /// the pivot slots. Column count is `cols - rank`.
    pub fn kernel_basis(&self) -> QMatrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = QMatrix::zero(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, QRat::one());
            for (row, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, -r.at(row, fc).clone());
            }
        }
        out
    }

    /// One particular solution of `self * x = b` (free variables zero), or
    /// `None` when inconsistent. `b` may have several columns; all are solved
    /// simultaneously.
    pub fn solve(&self, b: &QMatrix) -> Result<Option<QMatrix>, Error> {
        if b.rows != self.rows {
            return Err(Error::DimensionMismatch {
                detail: format!(
                    "solve: lhs has {} rows, rhs has {}",
                    self.rows, b.rows
                ),
            });
        }
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        // A pivot inside the b-block means the system is inconsistent.
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = QMatrix::zero(self.cols, b.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x.set(pc, c, r.at(row, self.cols + c).clone());
            }
        }
        Ok(Some(x))
    }

    /// Canonical basis of the column space: the columns of `self` at the
    /// pivot positions of the RREF of `self`, re-echelonized for canonicity.
    pub fn column_space_basis(&self) -> QMatrix {
        // Echelonize the transpose: its nonzero rows are a canonical basis of
        // the row space of the transpose = column space of self.
        let (r, pivots) = self.transpose().rref();
        let mut cols = Vec::new();
        for row in 0..pivots.len() {
            cols.push((0..r.cols()).map(|c| r.at(row, c).clone()).collect());
        }
        QMatrix::from_columns(self.rows, cols)
    }

    /// True when the matrix is square and invertible.
    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Inverse of a square invertible matrix.
    pub fn inverse(&self) -> Option<QMatrix> {
        if self.rows != self.cols {
            return None;
        }
        self.solve(&QMatrix::identity(self.rows)).ok().flatten()
    }

    /// Matrix power by repeated squaring (square matrices).
    pub fn pow(&self, mut e: usize) -> QMatrix {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = QMatrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Flatten row-major into a single column vector.
    pub fn vec_flatten(&self) -> Vec<QRat> {
        self.entries.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, entries: Vec<QRat>) -> QMatrix {
        assert_eq!(entries.len(), rows * cols);
        QMatrix {
            rows,
            cols,
            entries,
        }
    }
}

/// Express each column of `v` in the column basis `basis` (full column rank
/// assumed); `None` when some column is outside the span.
pub fn coords_in_basis(basis: &QMatrix, v: &QMatrix) -> Option<QMatrix> {
    basis.solve(v).ok().flatten().filter(|x| {
        // `solve` returns any particular solution; against a full-column-rank
        // basis it is exact, but verify membership to be safe.
        &basis.mul(x) == v
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(QMatrix::identity(2).rank(), 2);
        assert_eq!(QMatrix::zero(2, 2).rank(), 0);
    }

    #[test]
    fn rank_dependent_rows() {
        // [[1,2],[2,4]] eliminates to a single nonzero row.
        let m = QMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_identity_and_zero() {
        assert_eq!(QMatrix::identity(3).kernel_basis().cols(), 0);
        let k = QMatrix::zero(2, 2).kernel_basis();
        assert_eq!(k.cols(), 2);
        assert_eq!(k, QMatrix::identity(2));
    }

    #[test]
    fn kernel_rank_one() {
        // Kernel of [[1,2],[2,4]] is spanned by (-2, 1).
        let m = QMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.at(0, 0), &qr_int(-2));
        assert_eq!(k.at(1, 0), &qr_int(1));
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn solve_cases() {
        let id = QMatrix::identity(2);
        let b = QMatrix::from_int_rows(&[&[3], &[5]]);
        assert_eq!(id.solve(&b).unwrap().unwrap(), b);

        let z = QMatrix::zero(2, 2);
        assert!(z.solve(&b).unwrap().is_none());

        // [[1,2],[2,4]] x = (1,2): particular solution with free var zero is (1,0).
        let m = QMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        let b = QMatrix::from_int_rows(&[&[1], &[2]]);
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(x, QMatrix::from_int_rows(&[&[1], &[0]]));

        let bad = QMatrix::from_int_rows(&[&[1], &[3]]);
        assert!(m.solve(&bad).unwrap().is_none());

        let wrong = QMatrix::from_int_rows(&[&[1]]);
        assert!(m.solve(&wrong).is_err());
    }

    #[test]
    fn rational_pivots() {
        let m = QMatrix::from_rows(vec![
            vec![qr_frac(1, 2), qr_frac(1, 3)],
            vec![qr_frac(1, 4), qr_frac(1, 6)],
        ]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn bareiss_matches_rref_rank() {
        let m = QMatrix::from_int_rows(&[
            &[2, 4, 1, 3],
            &[0, 0, 5, 7],
            &[2, 4, 6, 10],
            &[4, 8, 7, 13],
        ]);
        let (_, pivots) = m.rref();
        assert_eq!(m.rank(), pivots.len());
    }
}
