//! Finite semigroups given by Cayley table, and their structural checks:
//! associativity, cancellativity, Ore conditions, center, conjugation and the
//! finite-conjugate set Δ(S).
//!
//! Tables are validated eagerly: a [`CayleyTable`] is associative by
//! construction and downstream code may assume it. The raw, unvalidated form
//! ([`RawTable`]) is what the JSON interchange format deserializes into.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::parallel::{self, ExecMode};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("table must be {n}x{n}, row {row} has length {len}")]
    Shape { n: usize, row: usize, len: usize },
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("entry ({0}, {1}) = {2} is out of range")]
    EntryOutOfRange(usize, usize, usize),
    #[error("unknown element name {0:?}")]
    UnknownName(String),
    #[error("designated zero {0:?} fails θ·s = s·θ = θ at s = {1:?}")]
    ZeroLaw(String, String),
    #[error("designated identity {0:?} fails e·s = s·e = s at s = {1:?}")]
    IdentityLaw(String, String),
    #[error("not associative: ({0:?}·{1:?})·{2:?} ≠ {0:?}·({1:?}·{2:?})")]
    NotAssociative(String, String, String),
}

/// Unvalidated table data; the JSON wire format.
///
/// `zero` and `identity` name the designated elements, when present.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RawTable {
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zero: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity: Option<String>,
}

impl RawTable {
    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("table serializes");
        out.push('\n');
        out
    }

    /// First triple violating associativity, if any.
    pub fn associativity_violation(&self, mode: ExecMode) -> Option<(usize, usize, usize)> {
        let n = self.names.len();
        let idx = parallel::find_min((n * n * n) as u64, mode, |i| {
            let i = i as usize;
            let (a, b, c) = (i / (n * n), (i / n) % n, i % n);
            self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]
        })?;
        let i = idx as usize;
        Some((i / (n * n), (i / n) % n, i % n))
    }

    /// Validates shape, name uniqueness, zero/identity laws and associativity.
    pub fn validate(self) -> Result<CayleyTable, TableError> {
        let n = self.names.len();
        let mut seen = BTreeSet::new();
        for name in &self.names {
            if !seen.insert(name) {
                return Err(TableError::DuplicateName(name.clone()));
            }
        }
        if self.table.len() != n {
            return Err(TableError::Shape {
                n,
                row: self.table.len(),
                len: 0,
            });
        }
        for (i, row) in self.table.iter().enumerate() {
            if row.len() != n {
                return Err(TableError::Shape {
                    n,
                    row: i,
                    len: row.len(),
                });
            }
            for (j, &e) in row.iter().enumerate() {
                if e >= n {
                    return Err(TableError::EntryOutOfRange(i, j, e));
                }
            }
        }
        let lookup = |name: &str| {
            self.names
                .iter()
                .position(|x| x == name)
                .ok_or_else(|| TableError::UnknownName(name.to_string()))
        };
        let zero = self.zero.as_deref().map(lookup).transpose()?;
        let identity = self.identity.as_deref().map(lookup).transpose()?;
        if let Some(z) = zero {
            for s in 0..n {
                if self.table[z][s] != z || self.table[s][z] != z {
                    return Err(TableError::ZeroLaw(
                        self.names[z].clone(),
                        self.names[s].clone(),
                    ));
                }
            }
        }
        if let Some(e) = identity {
            for s in 0..n {
                if self.table[e][s] != s || self.table[s][e] != s {
                    return Err(TableError::IdentityLaw(
                        self.names[e].clone(),
                        self.names[s].clone(),
                    ));
                }
            }
        }
        if let Some((a, b, c)) = self.associativity_violation(ExecMode::default()) {
            return Err(TableError::NotAssociative(
                self.names[a].clone(),
                self.names[b].clone(),
                self.names[c].clone(),
            ));
        }
        Ok(CayleyTable {
            n,
            raw: self,
            zero,
            identity,
        })
    }
}

/// A validated finite semigroup. Elements are indices into `names`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    n: usize,
    raw: RawTable,
    zero: Option<usize>,
    identity: Option<usize>,
}

/// Result of the cancellativity scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cancellativity {
    pub left: bool,
    pub right: bool,
}

impl Cancellativity {
    pub fn both(&self) -> bool {
        self.left && self.right
    }
}

/// Result of the Ore-condition scan (`sS ∩ tS ≠ ∅`, and dually).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OreConditions {
    pub right: bool,
    pub left: bool,
}

/// Conjugation `s^x`, defined by `x·s = s^x·x`.
///
/// In a cancellative semigroup the solution `t` is unique when it exists. On
/// non-cancellative tables several `t` may satisfy the equation; that case is
/// reported as `Ambiguous` rather than picking one, and such elements are
/// excluded from Δ(S).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Conjugation {
    Unique(usize),
    Ambiguous(Vec<usize>),
    Undefined,
}

/// A Δ(S) member together with its finite conjugate set `D_S(s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyData {
    pub element: usize,
    pub conjugates: BTreeSet<usize>,
}

impl CayleyTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn names(&self) -> &[String] {
        &self.raw.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.raw.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.raw.names.iter().position(|x| x == name)
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.raw.table[a][b]
    }

    /// Canonical interchange form (what the CLI echoes back).
    pub fn raw(&self) -> &RawTable {
        &self.raw
    }

    /// Always true post-validation; exposed so reports can re-run the scan.
    pub fn is_associative(&self) -> bool {
        self.raw
            .associativity_violation(ExecMode::default())
            .is_none()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|a| (a..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Left/right cancellativity via injectivity of the translation maps.
    pub fn cancellativity(&self) -> Cancellativity {
        let injective = |row: &dyn Fn(usize, usize) -> usize| {
            (0..self.n).all(|c| {
                let mut seen = vec![false; self.n];
                (0..self.n).all(|a| {
                    let v = row(c, a);
                    !std::mem::replace(&mut seen[v], true)
                })
            })
        };
        Cancellativity {
            left: injective(&|c, a| self.mul(c, a)),
            right: injective(&|c, a| self.mul(a, c)),
        }
    }

    pub fn ore_conditions(&self) -> OreConditions {
        let right = self.ore_side(|s, u| self.mul(s, u));
        let left = self.ore_side(|s, u| self.mul(u, s));
        OreConditions { right, left }
    }

    fn ore_side<F: Fn(usize, usize) -> usize>(&self, translate: F) -> bool {
        let ideals: Vec<BTreeSet<usize>> = (0..self.n)
            .map(|s| (0..self.n).map(|u| translate(s, u)).collect())
            .collect();
        (0..self.n).all(|s| {
            (s + 1..self.n).all(|t| !ideals[s].is_disjoint(&ideals[t]))
        })
    }

    /// `Z(S) = {s : st = ts for all t}`.
    pub fn center(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&s| (0..self.n).all(|t| self.mul(s, t) == self.mul(t, s)))
            .collect()
    }

    /// `s^x`: the `t` with `x·s = t·x`, with ambiguity reported.
    pub fn conjugate(&self, s: usize, x: usize) -> Conjugation {
        let target = self.mul(x, s);
        let solutions: Vec<usize> = (0..self.n).filter(|&t| self.mul(t, x) == target).collect();
        match solutions.len() {
            0 => Conjugation::Undefined,
            1 => Conjugation::Unique(solutions[0]),
            _ => Conjugation::Ambiguous(solutions),
        }
    }

    /// Δ(S): elements whose conjugates `s^x` exist uniquely for every `x`.
    /// Finiteness of the conjugate set is automatic on a finite table.
    pub fn delta_set(&self) -> Vec<ConjugacyData> {
        (0..self.n)
            .filter_map(|s| {
                let mut conjugates = BTreeSet::new();
                for x in 0..self.n {
                    match self.conjugate(s, x) {
                        Conjugation::Unique(t) => {
                            conjugates.insert(t);
                        }
                        _ => return None,
                    }
                }
                Some(ConjugacyData {
                    element: s,
                    conjugates,
                })
            })
            .collect()
    }

    /// True iff an identity exists and every element has a two-sided inverse.
    pub fn is_group(&self) -> bool {
        let Some(e) = self.find_identity() else {
            return false;
        };
        (0..self.n).all(|a| (0..self.n).any(|b| self.mul(a, b) == e && self.mul(b, a) == e))
    }

    fn find_identity(&self) -> Option<usize> {
        self.identity
            .or_else(|| (0..self.n).find(|&e| (0..self.n).all(|s| self.mul(e, s) == s && self.mul(s, e) == s)))
    }
}

impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "semigroup on {} elements", self.n)?;
        if let Some(z) = self.zero {
            write!(f, ", zero {}", self.name(z))?;
        }
        if let Some(e) = self.identity {
            write!(f, ", identity {}", self.name(e))?;
        }
        Ok(())
    }
}

/// Table builder used by tests and the built-in examples.
pub fn table_from_fn(
    names: Vec<String>,
    mul: impl Fn(usize, usize) -> usize,
    zero: Option<usize>,
    identity: Option<usize>,
) -> Result<CayleyTable, TableError> {
    let n = names.len();
    let raw = RawTable {
        zero: zero.map(|z| names[z].clone()),
        identity: identity.map(|e| names[e].clone()),
        table: (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect(),
        names,
    };
    raw.validate()
}
