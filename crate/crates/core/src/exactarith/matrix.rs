use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::Int;

/// Dense integer matrix with row-major storage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Int>,
}

impl IntMatrix {
    /// Builds a matrix from row-major entries. Dimensions must be positive
    /// and match the entry count.
    pub fn new(rows: usize, cols: usize, entries: Vec<Int>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: 0,
            });
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Int::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Int>]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map(Vec::len).unwrap_or(0);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    got: row.len(),
                });
            }
            entries.extend(row.iter().cloned());
        }
        Self::new(nrows, ncols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Int {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Int {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = a * other.at(k, j);
                    *out.at_mut(i, j) += term;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, c: &Int) -> IntMatrix {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// Reduces every entry into the canonical residue range `[0, m)`.
    pub fn reduce_mod(&self, m: &Int) -> IntMatrix {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.mod_floor(m)).collect(),
        }
    }

    pub fn is_zero_mod(&self, m: &Int) -> bool {
        self.entries.iter().all(|e| e.mod_floor(m).is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Exact determinant of a square matrix by Bareiss fraction-free
    /// elimination. Every interior division is exact.
    pub fn determinant(&self) -> Result<Int> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n {
            if m.at(k, k).is_zero() {
                let swap = (k + 1..n).find(|&i| !m.at(i, k).is_zero());
                match swap {
                    Some(i) => {
                        for j in 0..n {
                            let a = m.at(k, j).clone();
                            let b = m.at(i, j).clone();
                            *m.at_mut(k, j) = b;
                            *m.at_mut(i, j) = a;
                        }
                        sign = -sign;
                    }
                    None => return Ok(Int::zero()),
                }
            }
            let pivot = m.at(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.at(i, j) * &pivot - m.at(i, k) * m.at(k, j);
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division must be exact");
                    *m.at_mut(i, j) = q;
                }
                *m.at_mut(i, k) = Int::zero();
            }
            prev = pivot;
        }
        Ok(sign * m.at(n - 1, n - 1).clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactarith::int;

    fn m2(a: i64, b: i64, c: i64, d: i64) -> IntMatrix {
        IntMatrix::new(2, 2, vec![int(a), int(b), int(c), int(d)]).unwrap()
    }

    #[test]
    fn determinant_2x2() {
        assert_eq!(m2(1, 2, 3, 4).determinant().unwrap(), int(-2));
        assert_eq!(m2(3, 4, -4, 3).determinant().unwrap(), int(25));
    }

    #[test]
    fn determinant_with_zero_pivot() {
        let m = IntMatrix::new(
            3,
            3,
            vec![
                int(0),
                int(1),
                int(2),
                int(1),
                int(0),
                int(3),
                int(4),
                int(5),
                int(0),
            ],
        )
        .unwrap();
        // Expansion: 0*(0-15) - 1*(0-12) + 2*(5-0) = 12 + 10 = 22.
        assert_eq!(m.determinant().unwrap(), int(22));
    }

    #[test]
    fn determinant_singular() {
        assert_eq!(m2(2, 4, 1, 2).determinant().unwrap(), int(0));
    }

    #[test]
    fn mul_identity() {
        let a = m2(5, -3, 2, 7);
        let id = IntMatrix::identity(2);
        assert_eq!(a.mul(&id).unwrap(), a);
    }

    #[test]
    fn reduce_mod_canonical_range() {
        let a = m2(-1, 7, 5, -14);
        let r = a.reduce_mod(&int(5));
        assert_eq!(r, m2(4, 2, 0, 1));
    }

    #[test]
    fn bad_shapes_rejected() {
        assert!(IntMatrix::new(2, 2, vec![int(1)]).is_err());
        assert!(IntMatrix::new(0, 2, vec![]).is_err());
        assert!(m2(1, 0, 0, 1).mul(&IntMatrix::zeros(3, 3)).is_err());
    }
}
