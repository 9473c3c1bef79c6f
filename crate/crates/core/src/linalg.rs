//! Exact dense linear algebra over a [`FieldSpec`].
//!
//! Row reduction uses a deterministic pivot rule (first nonzero row in column
//! order), so solution sets and kernel bases are reproducible across runs and
//! thread counts. This is the backbone of every witness search in the crate.

use std::ops::{Index, IndexMut};

use thiserror::Error;

use crate::field::{FieldElement, FieldSpec};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: matrix is {rows}x{cols}, vector has length {len}")]
    DimensionMismatch { rows: usize, cols: usize, len: usize },
    #[error("entry at ({0}, {1}) does not belong to {2}")]
    ForeignEntry(usize, usize, FieldSpec),
}

/// Row-major dense matrix with entries in one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(spec: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            spec,
            rows,
            cols,
            data: vec![spec.zero(); rows * cols],
        }
    }

    pub fn identity(spec: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(spec, n, n);
        for i in 0..n {
            m[(i, i)] = spec.one();
        }
        m
    }

    /// Builds a matrix from row-major data, verifying every entry's field.
    pub fn from_rows(spec: FieldSpec, rows: Vec<Vec<FieldElement>>) -> Result<Self, LinalgError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(LinalgError::DimensionMismatch {
                    rows: nrows,
                    cols: ncols,
                    len: row.len(),
                });
            }
            for (j, e) in row.into_iter().enumerate() {
                if e.spec() != spec {
                    return Err(LinalgError::ForeignEntry(i, j, spec));
                }
                data.push(e);
            }
        }
        Ok(Matrix {
            spec,
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                rows: self.rows,
                cols: self.cols,
                len: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = self.spec.zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = &acc + &(&self[(i, j)] * &v[j]);
                    }
                }
                acc
            })
            .collect())
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            // First nonzero entry at or below pivot_row.
            let Some(src) = (pivot_row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(pivot_row, src);
            let inv = self[(pivot_row, col)].inverse().expect("pivot is nonzero");
            for j in col..self.cols {
                self[(pivot_row, j)] = &self[(pivot_row, j)] * &inv;
            }
            for r in 0..self.rows {
                if r != pivot_row && !self[(r, col)].is_zero() {
                    let factor = self[(r, col)].clone();
                    for j in col..self.cols {
                        let delta = &factor * &self[(pivot_row, j)];
                        self[(r, j)] = &self[(r, j)] - &delta;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of `ker A`, one vector per free column, in column order.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![self.spec.zero(); self.cols];
            v[free] = self.spec.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[(r, free)];
            }
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = FieldElement;
    fn index(&self, (i, j): (usize, usize)) -> &FieldElement {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FieldElement {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Outcome of an exact linear solve `A x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    Inconsistent,
    Solved {
        particular: Vec<FieldElement>,
        /// Basis of `ker A`; the full solution set is `particular + span`.
        kernel_basis: Vec<Vec<FieldElement>>,
    },
}

/// Solves `A x = b` exactly. The kernel basis spans `ker A` exactly, so the
/// returned data describes the entire solution set.
pub fn solve(a: &Matrix, b: &[FieldElement]) -> Result<LinearSolution, LinalgError> {
    if b.len() != a.rows {
        return Err(LinalgError::DimensionMismatch {
            rows: a.rows,
            cols: a.cols,
            len: b.len(),
        });
    }
    for (i, e) in b.iter().enumerate() {
        if e.spec() != a.spec {
            return Err(LinalgError::ForeignEntry(i, 0, a.spec));
        }
    }
    // Augment with b and reduce.
    let mut aug = Matrix::zeros(a.spec, a.rows, a.cols + 1);
    for i in 0..a.rows {
        for j in 0..a.cols {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, a.cols)] = b[i].clone();
    }
    let pivots = aug.rref();
    if pivots.contains(&a.cols) {
        return Ok(LinearSolution::Inconsistent);
    }
    let mut particular = vec![a.spec.zero(); a.cols];
    for (r, &pc) in pivots.iter().enumerate() {
        particular[pc] = aug[(r, a.cols)].clone();
    }
    Ok(LinearSolution::Solved {
        particular,
        kernel_basis: a.kernel_basis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fe(spec: FieldSpec, n: i64) -> FieldElement {
        spec.integer(n)
    }

    #[test]
    fn identity_system_has_unique_solution() {
        let q = FieldSpec::rationals();
        let a = Matrix::identity(q, 2);
        let b = vec![fe(q, 1), fe(q, 0)];
        match solve(&a, &b).unwrap() {
            LinearSolution::Solved {
                particular,
                kernel_basis,
            } => {
                assert_eq!(particular, b);
                assert!(kernel_basis.is_empty());
            }
            LinearSolution::Inconsistent => panic!("identity system must be solvable"),
        }
    }

    #[test]
    fn parity_kernel_over_f2() {
        let f2 = FieldSpec::prime(2).unwrap();
        let a = Matrix::from_rows(f2, vec![vec![fe(f2, 1), fe(f2, 1)]]).unwrap();
        match solve(&a, &[fe(f2, 0)]).unwrap() {
            LinearSolution::Solved { kernel_basis, .. } => {
                assert_eq!(kernel_basis, vec![vec![fe(f2, 1), fe(f2, 1)]]);
            }
            LinearSolution::Inconsistent => panic!("homogeneous system is always consistent"),
        }
    }

    #[test]
    fn random_f7_solutions_resubstitute() {
        let f7 = FieldSpec::prime(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let a = Matrix::from_rows(
                f7,
                (0..5)
                    .map(|_| (0..5).map(|_| fe(f7, rng.gen_range(0..7))).collect())
                    .collect(),
            )
            .unwrap();
            let b: Vec<_> = (0..5).map(|_| fe(f7, rng.gen_range(0..7))).collect();
            if let LinearSolution::Solved {
                particular,
                kernel_basis,
            } = solve(&a, &b).unwrap()
            {
                assert_eq!(a.mul_vec(&particular).unwrap(), b);
                for k in &kernel_basis {
                    assert!(a.mul_vec(k).unwrap().iter().all(FieldElement::is_zero));
                }
            }
        }
    }

    #[test]
    fn inconsistent_system_detected() {
        let q = FieldSpec::rationals();
        let a = Matrix::from_rows(q, vec![vec![fe(q, 1)], vec![fe(q, 1)]]).unwrap();
        let b = vec![fe(q, 1), fe(q, 2)];
        assert_eq!(solve(&a, &b).unwrap(), LinearSolution::Inconsistent);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let q = FieldSpec::rationals();
        let a = Matrix::identity(q, 2);
        assert!(matches!(
            solve(&a, &[fe(q, 1)]),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rank_of_rational_matrix() {
        let q = FieldSpec::rationals();
        let a = Matrix::from_rows(
            q,
            vec![
                vec![fe(q, 1), fe(q, 2), fe(q, 3)],
                vec![fe(q, 2), fe(q, 4), fe(q, 6)],
                vec![fe(q, 0), fe(q, 1), fe(q, 1)],
            ],
        )
        .unwrap();
        assert_eq!(a.rank(), 2);
        assert_eq!(a.kernel_basis().len(), 1);
    }
}
