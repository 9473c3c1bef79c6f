//! Finite-dimensional algebras with explicit structure constants.
//!
//! This is the dense representation behind the exhaustive deciders: elements
//! are coordinate vectors over the basis, products expand through the
//! structure-constant table, and centers/witnesses come out of exact linear
//! solves. Semigroup algebras of finite tables (full or contracted), the
//! seven-parameter matrix ring and direct sums all reduce to this form.

use thiserror::Error;

use crate::field::{FieldElement, FieldSpec};
use crate::linalg::Matrix;
use crate::semigroup::CayleyTable;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FinDimError {
    #[error("contracted algebra requires a designated zero element")]
    NoZeroDesignated,
    #[error("coordinate vector has length {0}, algebra dimension is {1}")]
    WrongDimension(usize, usize),
}

/// Sparse product of two basis elements: list of `(basis index, coefficient)`.
pub type SparseProduct = Vec<(usize, FieldElement)>;

#[derive(Debug, Clone)]
pub struct FinDimAlgebra {
    field: FieldSpec,
    dim: usize,
    names: Vec<String>,
    table: Vec<Vec<SparseProduct>>,
}

impl FinDimAlgebra {
    pub fn new(
        field: FieldSpec,
        names: Vec<String>,
        product: impl Fn(usize, usize) -> SparseProduct,
    ) -> Self {
        let dim = names.len();
        let table = (0..dim)
            .map(|i| (0..dim).map(|j| product(i, j)).collect())
            .collect();
        FinDimAlgebra {
            field,
            dim,
            names,
            table,
        }
    }

    /// Full semigroup algebra of a finite table: every element, including a
    /// designated zero, is an honest basis vector.
    pub fn from_table(table: &CayleyTable, field: FieldSpec) -> Self {
        let names = table.names().to_vec();
        FinDimAlgebra::new(field, names, |i, j| vec![(table.mul(i, j), field.one())])
    }

    /// Contracted algebra of a table with zero: basis is `S \ {θ}` and
    /// products landing on θ vanish.
    pub fn from_table_contracted(
        table: &CayleyTable,
        field: FieldSpec,
    ) -> Result<Self, FinDimError> {
        let theta = table.zero().ok_or(FinDimError::NoZeroDesignated)?;
        let words: Vec<usize> = (0..table.n()).filter(|&i| i != theta).collect();
        let names = words.iter().map(|&i| table.name(i).to_string()).collect();
        let pos = move |w: usize| words.iter().position(|&v| v == w);
        let words2: Vec<usize> = (0..table.n()).filter(|&i| i != theta).collect();
        Ok(FinDimAlgebra::new(field, names, move |i, j| {
            let w = table.mul(words2[i], words2[j]);
            if w == theta {
                vec![]
            } else {
                vec![(pos(w).expect("product stays in basis"), field.one())]
            }
        }))
    }

    /// Direct sum `A ⊕ B` with componentwise product.
    pub fn direct_sum(a: &FinDimAlgebra, b: &FinDimAlgebra) -> Self {
        assert_eq!(a.field, b.field, "summands must share the field");
        let names = a
            .names
            .iter()
            .map(|n| format!("L:{n}"))
            .chain(b.names.iter().map(|n| format!("R:{n}")))
            .collect();
        let (da, field) = (a.dim, a.field);
        let (ta, tb) = (a.table.clone(), b.table.clone());
        FinDimAlgebra::new(field, names, move |i, j| {
            if i < da && j < da {
                ta[i][j].clone()
            } else if i >= da && j >= da {
                tb[i - da][j - da]
                    .iter()
                    .map(|(k, c)| (k + da, c.clone()))
                    .collect()
            } else {
                vec![]
            }
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn zero_vec(&self) -> Vec<FieldElement> {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<FieldElement> {
        let mut v = self.zero_vec();
        v[i] = self.field.one();
        v
    }

    pub fn is_zero_vec(&self, v: &[FieldElement]) -> bool {
        v.iter().all(FieldElement::is_zero)
    }

    pub fn add_vec(&self, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub_vec(&self, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale_vec(&self, k: &FieldElement, a: &[FieldElement]) -> Vec<FieldElement> {
        a.iter().map(|x| k * x).collect()
    }

    pub fn mul_vec(&self, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
        debug_assert_eq!(a.len(), self.dim);
        debug_assert_eq!(b.len(), self.dim);
        let mut out = self.zero_vec();
        for i in 0..self.dim {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if b[j].is_zero() {
                    continue;
                }
                let coeff = &a[i] * &b[j];
                for (k, c) in &self.table[i][j] {
                    out[*k] = &out[*k] + &(&coeff * c);
                }
            }
        }
        out
    }

    pub fn commutator_vec(&self, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
        self.sub_vec(&self.mul_vec(a, b), &self.mul_vec(b, a))
    }

    /// `[b_i, a] = 0` for every basis element.
    pub fn is_central_vec(&self, a: &[FieldElement]) -> bool {
        (0..self.dim).all(|i| self.is_zero_vec(&self.commutator_vec(&self.basis_vec(i), a)))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| {
            let bi = self.basis_vec(i);
            (i + 1..self.dim).all(|j| {
                self.is_zero_vec(&self.commutator_vec(&bi, &self.basis_vec(j)))
            })
        })
    }

    /// Matrix of left multiplication by `a` in the basis.
    pub fn left_mul_matrix(&self, a: &[FieldElement]) -> Matrix {
        self.translation_matrix(a, true)
    }

    /// Matrix of right multiplication by `a` in the basis.
    pub fn right_mul_matrix(&self, a: &[FieldElement]) -> Matrix {
        self.translation_matrix(a, false)
    }

    fn translation_matrix(&self, a: &[FieldElement], left: bool) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let ej = self.basis_vec(j);
            let col = if left {
                self.mul_vec(a, &ej)
            } else {
                self.mul_vec(&ej, a)
            };
            for (i, e) in col.into_iter().enumerate() {
                m[(i, j)] = e;
            }
        }
        m
    }

    /// Exact basis of the center, by solving `[b_i, c] = 0` for all `i`.
    pub fn center_basis(&self) -> Vec<Vec<FieldElement>> {
        let mut rows: Vec<Vec<FieldElement>> = Vec::new();
        for i in 0..self.dim {
            let bi = self.basis_vec(i);
            // Row block: coordinates of [b_i, Σ λ_j b_j] as functions of λ.
            let mut block = vec![vec![self.field.zero(); self.dim]; self.dim];
            for j in 0..self.dim {
                let comm = self.commutator_vec(&bi, &self.basis_vec(j));
                for (t, e) in comm.into_iter().enumerate() {
                    block[t][j] = e;
                }
            }
            rows.extend(block);
        }
        let m = Matrix::from_rows(self.field, rows).expect("homogeneous block matrix");
        m.kernel_basis()
    }

    /// The identity element, when the algebra has one.
    pub fn identity_vec(&self) -> Option<Vec<FieldElement>> {
        // Solve e·b_j = b_j for all j; with left and right stacked.
        let mut rows: Vec<Vec<FieldElement>> = Vec::new();
        let mut rhs: Vec<FieldElement> = Vec::new();
        for j in 0..self.dim {
            let ej = self.basis_vec(j);
            for (side_left, _) in [(true, 0), (false, 0)] {
                let mut block = vec![vec![self.field.zero(); self.dim]; self.dim];
                for i in 0..self.dim {
                    let bi = self.basis_vec(i);
                    let prod = if side_left {
                        self.mul_vec(&bi, &ej)
                    } else {
                        self.mul_vec(&ej, &bi)
                    };
                    for (t, e) in prod.into_iter().enumerate() {
                        block[t][i] = e;
                    }
                }
                rows.extend(block);
                rhs.extend(ej.clone());
            }
        }
        let m = Matrix::from_rows(self.field, rows).ok()?;
        match crate::linalg::solve(&m, &rhs).ok()? {
            crate::linalg::LinearSolution::Solved { particular, .. } => Some(particular),
            crate::linalg::LinearSolution::Inconsistent => None,
        }
    }
}
