use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::{Int, IntMatrix};

/// Canonical Hermite-normal-form basis of a full-rank integer lattice.
///
/// Rows are the basis vectors. The matrix is lower triangular with strictly
/// positive diagonal, and every entry below a pivot is reduced into
/// `[0, pivot)` of its column's pivot row. This form is unique per lattice,
/// so equality of bases is equality of lattices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnfBasis {
    dim: usize,
    basis: IntMatrix,
}

/// Computes the HNF basis of the lattice spanned by `generators`.
///
/// Fails with `RankDeficient` when the generators span a sublattice of rank
/// below the ambient dimension.
pub fn hnf(generators: &[Vec<Int>]) -> Result<HnfBasis> {
    hnf_inner(generators, None)
}

/// Same as [`hnf`], but reduces intermediate entries modulo a known multiple
/// of the lattice index to bound coefficient growth. `multiple_of_index`
/// must be a positive multiple of `[Z^n : L]`; the scaled unit vectors it
/// contributes already lie in the lattice, so the result is unchanged.
pub fn hnf_with_modulus(generators: &[Vec<Int>], multiple_of_index: &Int) -> Result<HnfBasis> {
    if multiple_of_index.is_zero() || multiple_of_index.is_negative() {
        return Err(Error::BadModulus(multiple_of_index.to_string()));
    }
    hnf_inner(generators, Some(multiple_of_index))
}

fn hnf_inner(generators: &[Vec<Int>], modulus: Option<&Int>) -> Result<HnfBasis> {
    let n = match generators.first() {
        Some(g) => g.len(),
        None => {
            return Err(Error::RankDeficient {
                expected: 0,
                found: 0,
            })
        }
    };
    if n == 0 {
        return Err(Error::DimensionMismatch { expected: 1, got: 0 });
    }
    let mut active: Vec<Vec<Int>> = Vec::with_capacity(generators.len() + n);
    for g in generators {
        if g.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: g.len(),
            });
        }
        active.push(g.clone());
    }
    if let Some(d) = modulus {
        for j in 0..n {
            let mut unit = vec![Int::zero(); n];
            unit[j] = d.clone();
            active.push(unit);
        }
        for row in &mut active {
            for e in row.iter_mut() {
                *e = e.mod_floor(d);
            }
        }
    }

    let mut pivots: Vec<Option<Vec<Int>>> = vec![None; n];
    for col in (0..n).rev() {
        loop {
            let nonzero: Vec<usize> = (0..active.len())
                .filter(|&i| !active[i][col].is_zero())
                .collect();
            match nonzero.len() {
                0 => break,
                1 => {
                    let mut row = active.swap_remove(nonzero[0]);
                    if row[col].is_negative() {
                        for e in row.iter_mut() {
                            *e = -std::mem::take(e);
                        }
                    }
                    pivots[col] = Some(row);
                    break;
                }
                _ => {
                    // Euclidean reduction: shrink every entry in this column
                    // modulo the smallest one until a single survivor holds
                    // the column gcd.
                    let best = *nonzero
                        .iter()
                        .min_by_key(|&&i| active[i][col].abs())
                        .expect("nonzero set is non-empty");
                    if active[best][col].is_negative() {
                        for e in active[best].iter_mut() {
                            *e = -std::mem::take(e);
                        }
                    }
                    let m = active[best][col].clone();
                    for &i in &nonzero {
                        if i == best {
                            continue;
                        }
                        let t = active[i][col].div_floor(&m);
                        if t.is_zero() {
                            continue;
                        }
                        let pivot_row = active[best].clone();
                        for (e, p) in active[i].iter_mut().zip(&pivot_row) {
                            *e -= &t * p;
                        }
                        if let Some(d) = modulus {
                            for e in active[i].iter_mut() {
                                *e = e.mod_floor(d);
                            }
                        }
                    }
                    // Drop rows that became zero to keep passes short.
                    active.retain(|r| r.iter().any(|e| !e.is_zero()));
                }
            }
        }
    }

    let found = pivots.iter().filter(|p| p.is_some()).count();
    if found < n {
        return Err(Error::RankDeficient {
            expected: n,
            found,
        });
    }
    let mut rows: Vec<Vec<Int>> = pivots.into_iter().map(Option::unwrap).collect();

    // Reduce the entries below each pivot into [0, pivot). Subtracting a
    // multiple of row j only touches columns <= j, so descending order
    // leaves already-reduced columns intact.
    for i in 0..n {
        for j in (0..i).rev() {
            let pivot = rows[j][j].clone();
            let t = rows[i][j].div_floor(&pivot);
            if t.is_zero() {
                continue;
            }
            let lower = rows[j].clone();
            for (e, p) in rows[i].iter_mut().zip(&lower) {
                *e -= &t * p;
            }
        }
    }

    let basis = IntMatrix::from_rows(&rows)?;
    Ok(HnfBasis { dim: n, basis })
}

impl HnfBasis {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn rows(&self) -> Vec<Vec<Int>> {
        self.basis.row_vecs()
    }

    pub fn diagonal(&self) -> Vec<Int> {
        (0..self.dim).map(|i| self.basis.at(i, i).clone()).collect()
    }

    /// Lattice index `[Z^n : L]`, the product of the diagonal.
    pub fn index(&self) -> Int {
        self.diagonal().iter().product()
    }

    /// Membership test with certificate: returns the coefficient vector
    /// expressing `target` over the basis rows when `target` is in the
    /// lattice, `None` otherwise.
    pub fn member(&self, target: &[Int]) -> Result<Option<Vec<Int>>> {
        if target.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: target.len(),
            });
        }
        let mut residual = target.to_vec();
        let mut coeffs = vec![Int::zero(); self.dim];
        for j in (0..self.dim).rev() {
            let pivot = self.basis.at(j, j);
            let (q, r) = residual[j].div_rem(pivot);
            if !r.is_zero() {
                return Ok(None);
            }
            if !q.is_zero() {
                for k in 0..=j {
                    let step = &q * self.basis.at(j, k);
                    residual[k] -= step;
                }
            }
            coeffs[j] = q;
        }
        debug_assert!(residual.iter().all(Zero::is_zero));
        Ok(Some(coeffs))
    }

    pub fn contains(&self, target: &[Int]) -> Result<bool> {
        Ok(self.member(target)?.is_some())
    }

    /// The lattice point with the given basis coefficients.
    pub fn combination(&self, coeffs: &[Int]) -> Result<Vec<Int>> {
        if coeffs.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: coeffs.len(),
            });
        }
        let mut out = vec![Int::zero(); self.dim];
        for (c, i) in coeffs.iter().zip(0..self.dim) {
            if c.is_zero() {
                continue;
            }
            for k in 0..self.dim {
                let step = c * self.basis.at(i, k);
                out[k] += step;
            }
        }
        Ok(out)
    }
}

impl std::fmt::Display for HnfBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.dim {
            writeln!(
                f,
                "[{}]",
                self.basis
                    .row(i)
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactarith::int;

    fn vecs(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect()
    }

    // Lattice of (5, theta - 2) in the ring of x^2 + 1: row reduction by
    // hand gives pivots (5, 1) after reducing (-2, 1) by the gcd steps.
    #[test]
    fn prime_ideal_lattice_in_gaussian_ring() {
        let gens = vecs(&[&[5, 0], &[0, 5], &[-2, 1], &[-1, -2]]);
        let h = hnf(&gens).unwrap();
        assert_eq!(h.rows(), vecs(&[&[5, 0], &[3, 1]]));
        assert_eq!(h.index(), int(5));
    }

    #[test]
    fn unit_lattice() {
        let gens = vecs(&[&[1, 0], &[0, 1]]);
        let h = hnf(&gens).unwrap();
        assert_eq!(h.rows(), vecs(&[&[1, 0], &[0, 1]]));
        assert_eq!(h.index(), int(1));
    }

    #[test]
    fn rank_deficient_rejected() {
        let gens = vecs(&[&[2, 0]]);
        let err = hnf(&gens).unwrap_err();
        assert_eq!(
            err,
            Error::RankDeficient {
                expected: 2,
                found: 1
            }
        );
    }

    #[test]
    fn empty_generators_rejected() {
        assert!(hnf(&[]).is_err());
    }

    // pi^2 of (7, theta - 2) in the ring of x^2 + x + 1. Generators are the
    // theta-shifts of 49, 7(theta-2), (theta-2)^2 = 3 - 5 theta.
    fn pi_squared_gens() -> Vec<Vec<Int>> {
        vecs(&[
            &[49, 0],
            &[0, 49],
            &[-14, 7],
            &[-7, -21],
            &[3, -5],
            &[5, 8],
        ])
    }

    #[test]
    fn membership_with_certificate() {
        let h = hnf(&pi_squared_gens()).unwrap();
        assert_eq!(h.rows(), vecs(&[&[49, 0], &[19, 1]]));
        assert_eq!(h.index(), int(49));

        let coeffs = h.member(&[int(3), int(-5)]).unwrap().unwrap();
        assert_eq!(h.combination(&coeffs).unwrap(), vec![int(3), int(-5)]);

        assert!(h.member(&[int(1), int(0)]).unwrap().is_none());
    }

    #[test]
    fn identity_membership_is_trivial() {
        let h = hnf(&vecs(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        let t = vec![int(9), int(-4), int(77)];
        assert_eq!(h.member(&t).unwrap().unwrap(), t);
    }

    #[test]
    fn member_dimension_checked() {
        let h = hnf(&vecs(&[&[1, 0], &[0, 1]])).unwrap();
        assert!(h.member(&[int(1)]).is_err());
    }

    #[test]
    fn modulus_variant_matches_plain() {
        let gens = pi_squared_gens();
        let plain = hnf(&gens).unwrap();
        let modded = hnf_with_modulus(&gens, &int(49)).unwrap();
        assert_eq!(plain, modded);
        // Any positive multiple of the index works.
        let overshoot = hnf_with_modulus(&gens, &int(49 * 6)).unwrap();
        assert_eq!(plain, overshoot);
    }

    #[test]
    fn negative_modulus_rejected() {
        assert!(hnf_with_modulus(&vecs(&[&[1]]), &int(-3)).is_err());
    }
}
