//! Semigroup-algebra arithmetic: finite-support linear combinations over a
//! carrier semigroup, centrality tests, class sums and center bases.
//!
//! Elements are canonical maps `word -> nonzero coefficient`; equality is map
//! equality. The carrier (a finite Cayley table, its contracted form, or one
//! of the presented families) supplies word multiplication, the generator set
//! that suffices for centrality checks, and Δ-class data for class sums.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::families::{DeltaClass, Family, FamilyError, NilWord, Variant};
use crate::field::{FieldElement, FieldSpec};
use crate::findim::FinDimAlgebra;
use crate::semigroup::{CayleyTable, Conjugation};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("coefficient belongs to {0}, algebra is over {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("word {0:?} does not belong to this carrier")]
    ForeignWord(String),
    #[error("carrier has no identity element")]
    NoIdentity,
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// A semigroup suitable as the basis of an algebra.
pub trait Carrier {
    type Word: Clone + Ord + fmt::Debug;

    /// Product of two basis words; `None` means the product is the
    /// identified zero of a contracted algebra.
    fn mul_words(&self, a: &Self::Word, b: &Self::Word) -> Result<Option<Self::Word>, AlgebraError>;

    /// Words whose commutators decide centrality of arbitrary elements.
    fn centrality_generators(&self) -> Vec<Self::Word>;

    fn identity_word(&self) -> Option<Self::Word>;

    /// `D(s)` when `s ∈ Δ(S)` with unambiguous conjugation, else `None`.
    fn delta_class(&self, w: &Self::Word) -> Option<Vec<Self::Word>>;

    /// Words of the carrier within a size bound (all words, for finite
    /// carriers).
    fn words_within(&self, bound: u64) -> Vec<Self::Word>;

    /// Whether class sums over Δ(S) are known to span the center (true for
    /// cancellative carriers).
    fn class_sums_span_center(&self) -> bool;

    fn word_name(&self, w: &Self::Word) -> String;

    fn describe(&self) -> String;
}

/// Finite table carrier, full or contracted.
#[derive(Debug, Clone)]
pub struct TableCarrier {
    table: CayleyTable,
    contracted: bool,
}

impl TableCarrier {
    pub fn full(table: CayleyTable) -> Self {
        TableCarrier {
            table,
            contracted: false,
        }
    }

    pub fn contracted(table: CayleyTable) -> Result<Self, AlgebraError> {
        if table.zero().is_none() {
            return Err(AlgebraError::ForeignWord(
                "contracted carrier requires a designated zero".into(),
            ));
        }
        Ok(TableCarrier {
            table,
            contracted: true,
        })
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn is_contracted(&self) -> bool {
        self.contracted
    }

    fn check_word(&self, w: usize) -> Result<(), AlgebraError> {
        if w >= self.table.n() || (self.contracted && Some(w) == self.table.zero()) {
            return Err(AlgebraError::ForeignWord(format!("index {w}")));
        }
        Ok(())
    }

    /// Dense structure-constant form over the given field.
    pub fn to_findim(&self, field: FieldSpec) -> FinDimAlgebra {
        if self.contracted {
            FinDimAlgebra::from_table_contracted(&self.table, field)
                .expect("contracted carrier always has a zero")
        } else {
            FinDimAlgebra::from_table(&self.table, field)
        }
    }
}

impl Carrier for TableCarrier {
    type Word = usize;

    fn mul_words(&self, a: &usize, b: &usize) -> Result<Option<usize>, AlgebraError> {
        self.check_word(*a)?;
        self.check_word(*b)?;
        let w = self.table.mul(*a, *b);
        if self.contracted && Some(w) == self.table.zero() {
            Ok(None)
        } else {
            Ok(Some(w))
        }
    }

    fn centrality_generators(&self) -> Vec<usize> {
        self.words_within(0)
    }

    fn identity_word(&self) -> Option<usize> {
        self.table.identity()
    }

    fn delta_class(&self, w: &usize) -> Option<Vec<usize>> {
        let mut class = std::collections::BTreeSet::new();
        for x in 0..self.table.n() {
            match self.table.conjugate(*w, x) {
                Conjugation::Unique(t) => {
                    class.insert(t);
                }
                _ => return None,
            }
        }
        Some(class.into_iter().collect())
    }

    fn words_within(&self, _bound: u64) -> Vec<usize> {
        (0..self.table.n())
            .filter(|&i| !(self.contracted && Some(i) == self.table.zero()))
            .collect()
    }

    fn class_sums_span_center(&self) -> bool {
        !self.contracted && self.table.cancellativity().both()
    }

    fn word_name(&self, w: &usize) -> String {
        self.table.name(*w).to_string()
    }

    fn describe(&self) -> String {
        if self.contracted {
            format!("contracted {}", self.table)
        } else {
            self.table.to_string()
        }
    }
}

/// One of the presented families, in a fixed variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyCarrier {
    pub family: Family,
    pub variant: Variant,
}

impl FamilyCarrier {
    pub fn new(family: Family, variant: Variant) -> Self {
        FamilyCarrier { family, variant }
    }

    fn check_word(&self, w: &NilWord) -> Result<(), AlgebraError> {
        if w.family() != self.family || w.variant() != self.variant {
            return Err(AlgebraError::ForeignWord(w.to_string()));
        }
        Ok(())
    }
}

impl Carrier for FamilyCarrier {
    type Word = NilWord;

    fn mul_words(&self, a: &NilWord, b: &NilWord) -> Result<Option<NilWord>, AlgebraError> {
        self.check_word(a)?;
        self.check_word(b)?;
        Ok(Some(a.mul(b)?))
    }

    fn centrality_generators(&self) -> Vec<NilWord> {
        vec![
            NilWord::generator_z(self.family, self.variant),
            NilWord::generator_y(self.family, self.variant),
            NilWord::generator_x(self.family, self.variant),
        ]
    }

    fn identity_word(&self) -> Option<NilWord> {
        Some(NilWord::identity(self.family, self.variant))
    }

    fn delta_class(&self, w: &NilWord) -> Option<Vec<NilWord>> {
        match w.delta_class() {
            DeltaClass::InDelta(c) => Some(c),
            DeltaClass::NotInDelta => None,
        }
    }

    fn words_within(&self, bound: u64) -> Vec<NilWord> {
        let b = bound as i64;
        let (zlo, zhi) = match (self.family, self.variant) {
            (Family::CentralInvolution, _) => (0, 1),
            (Family::FreeNilpotent, Variant::Semigroup) => (0, b),
            (Family::FreeNilpotent, Variant::Group) => (-b, b),
        };
        let (lo, hi) = match self.variant {
            Variant::Semigroup => (0, b),
            Variant::Group => (-b, b),
        };
        let mut words = Vec::new();
        for z in zlo..=zhi {
            for y in lo..=hi {
                for x in lo..=hi {
                    words.push(
                        NilWord::new(self.family, self.variant, z, y, x)
                            .expect("exponents within variant range"),
                    );
                }
            }
        }
        words.sort();
        words
    }

    fn class_sums_span_center(&self) -> bool {
        true
    }

    fn word_name(&self, w: &NilWord) -> String {
        w.to_string()
    }

    fn describe(&self) -> String {
        format!(
            "{} ({})",
            self.family,
            match self.variant {
                Variant::Semigroup => "semigroup",
                Variant::Group => "group of fractions",
            }
        )
    }
}

/// Finite-support linear combination of carrier words. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement<W: Ord + Clone> {
    coeffs: BTreeMap<W, FieldElement>,
}

impl<W: Ord + Clone> AlgebraElement<W> {
    pub fn zero() -> Self {
        AlgebraElement {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&W, &FieldElement)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &W> {
        self.coeffs.keys()
    }

    pub fn coeff(&self, w: &W) -> Option<&FieldElement> {
        self.coeffs.get(w)
    }

    fn insert_add(&mut self, w: W, c: FieldElement) {
        match self.coeffs.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }
}

/// The algebra object: a carrier plus a coefficient field. All element
/// operations go through it.
#[derive(Debug, Clone)]
pub struct SemigroupAlgebra<C: Carrier> {
    carrier: C,
    field: FieldSpec,
}

pub type Element<C> = AlgebraElement<<C as Carrier>::Word>;
pub type FamilyAlgebra = SemigroupAlgebra<FamilyCarrier>;
pub type TableAlgebra = SemigroupAlgebra<TableCarrier>;

impl<C: Carrier> SemigroupAlgebra<C> {
    pub fn new(carrier: C, field: FieldSpec) -> Self {
        SemigroupAlgebra { carrier, field }
    }

    pub fn carrier(&self) -> &C {
        &self.carrier
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn zero(&self) -> Element<C> {
        AlgebraElement::zero()
    }

    pub fn word(&self, w: C::Word) -> Element<C> {
        let mut e = AlgebraElement::zero();
        e.insert_add(w, self.field.one());
        e
    }

    pub fn one(&self) -> Result<Element<C>, AlgebraError> {
        self.carrier
            .identity_word()
            .map(|w| self.word(w))
            .ok_or(AlgebraError::NoIdentity)
    }

    pub fn from_terms(
        &self,
        terms: impl IntoIterator<Item = (C::Word, FieldElement)>,
    ) -> Result<Element<C>, AlgebraError> {
        let mut e = AlgebraElement::zero();
        for (w, c) in terms {
            if c.spec() != self.field {
                return Err(AlgebraError::FieldMismatch(c.spec(), self.field));
            }
            // Word validity is established by a unit product.
            self.carrier.mul_words(&w, &w)?;
            e.insert_add(w, c);
        }
        Ok(e)
    }

    pub fn add(&self, a: &Element<C>, b: &Element<C>) -> Element<C> {
        let mut out = a.clone();
        for (w, c) in &b.coeffs {
            out.insert_add(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self, a: &Element<C>) -> Element<C> {
        AlgebraElement {
            coeffs: a.coeffs.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, a: &Element<C>, b: &Element<C>) -> Element<C> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, k: &FieldElement, a: &Element<C>) -> Result<Element<C>, AlgebraError> {
        if k.spec() != self.field {
            return Err(AlgebraError::FieldMismatch(k.spec(), self.field));
        }
        if k.is_zero() {
            return Ok(self.zero());
        }
        Ok(AlgebraElement {
            coeffs: a.coeffs.iter().map(|(w, c)| (w.clone(), k * c)).collect(),
        })
    }

    /// Convolution product. Products of words that hit a contracted zero
    /// contribute nothing.
    pub fn mul(&self, a: &Element<C>, b: &Element<C>) -> Result<Element<C>, AlgebraError> {
        let mut out = AlgebraElement::zero();
        for (u, alpha) in &a.coeffs {
            for (v, beta) in &b.coeffs {
                if let Some(w) = self.carrier.mul_words(u, v)? {
                    out.insert_add(w, alpha * beta);
                }
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, a: &Element<C>, b: &Element<C>) -> Result<Element<C>, AlgebraError> {
        Ok(self.sub(&self.mul(a, b)?, &self.mul(b, a)?))
    }

    /// Centrality via commutators with the carrier's generator words.
    pub fn is_central(&self, a: &Element<C>) -> Result<bool, AlgebraError> {
        for g in self.carrier.centrality_generators() {
            let gw = self.word(g);
            if !self.commutator(&gw, a)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Class sum `Σ_{t ∈ D(s)} t` for a Δ-member, if `s ∈ Δ(S)`.
    pub fn class_sum(&self, s: &C::Word) -> Option<ClassSum<C::Word>> {
        let class = self.carrier.delta_class(s)?;
        let mut e = AlgebraElement::zero();
        for t in &class {
            e.insert_add(t.clone(), self.field.one());
        }
        Some(ClassSum {
            representative: Some(class[0].clone()),
            element: e,
        })
    }

    /// Generating set of the center.
    ///
    /// For carriers where class sums are known to span the center
    /// (cancellative ones), this returns the deduplicated class sums of all
    /// Δ-members within the word bound. For finite non-cancellative carriers
    /// it falls back to an exact linear solve over the whole algebra, and the
    /// entries carry no representative.
    pub fn center_basis(&self, bound: u64) -> Vec<ClassSum<C::Word>> {
        if self.carrier.class_sums_span_center() {
            let mut seen = std::collections::BTreeSet::new();
            let mut out = Vec::new();
            for w in self.carrier.words_within(bound) {
                if let Some(class) = self.carrier.delta_class(&w) {
                    if seen.insert(class.clone()) {
                        out.push(self.class_sum(&w).expect("w is a Δ-member"));
                    }
                }
            }
            out
        } else {
            let words = self.carrier.words_within(bound);
            self.brute_force_center(&words)
        }
    }

    fn brute_force_center(&self, words: &[C::Word]) -> Vec<ClassSum<C::Word>> {
        // Solve [w_i, Σ λ_j w_j] = 0 for all i over the finite word list.
        let products: Vec<Vec<Element<C>>> = words
            .iter()
            .map(|wi| {
                let gi = self.word(wi.clone());
                words
                    .iter()
                    .map(|wj| {
                        self.commutator(&gi, &self.word(wj.clone()))
                            .expect("carrier words multiply")
                    })
                    .collect()
            })
            .collect();
        let mut rows: Vec<Vec<FieldElement>> = Vec::new();
        for comms in &products {
            for (t, wt) in words.iter().enumerate() {
                let _ = t;
                let row: Vec<FieldElement> = comms
                    .iter()
                    .map(|c| c.coeff(wt).cloned().unwrap_or_else(|| self.field.zero()))
                    .collect();
                rows.push(row);
            }
        }
        let m = crate::linalg::Matrix::from_rows(self.field, rows).expect("square blocks");
        m.kernel_basis()
            .into_iter()
            .map(|v| {
                let mut e = AlgebraElement::zero();
                for (j, c) in v.into_iter().enumerate() {
                    if !c.is_zero() {
                        e.insert_add(words[j].clone(), c);
                    }
                }
                ClassSum {
                    representative: None,
                    element: e,
                }
            })
            .filter(|cs| !cs.element.is_zero())
            .collect::<Vec<_>>()
    }

    /// Human-readable rendering using the carrier's word names.
    pub fn render(&self, a: &Element<C>) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in a.coeffs.iter().enumerate() {
            let negative = crate::field::rational_is_negative(c);
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = if negative { -c } else { c.clone() };
            let name = self.carrier.word_name(w);
            if mag.is_one() {
                out.push_str(&name);
            } else {
                out.push_str(&format!("{mag}*{name}"));
            }
        }
        out
    }

    /// JSON form: a sorted list of `{word, coeff}` pairs.
    pub fn element_json(&self, a: &Element<C>) -> serde_json::Value {
        serde_json::Value::Array(
            a.coeffs
                .iter()
                .map(|(w, c)| {
                    serde_json::json!({
                        "word": self.carrier.word_name(w),
                        "coeff": c.to_string(),
                    })
                })
                .collect(),
        )
    }
}

impl FamilyAlgebra {
    pub fn family(&self) -> Family {
        self.carrier().family
    }

    pub fn variant(&self) -> Variant {
        self.carrier().variant
    }

    /// The same algebra over the group of fractions.
    pub fn group_algebra(&self) -> FamilyAlgebra {
        SemigroupAlgebra::new(
            FamilyCarrier::new(self.family(), Variant::Group),
            self.field(),
        )
    }

    /// Exponent-preserving embedding `FS -> FG`.
    pub fn embed_element(&self, a: &Element<FamilyCarrier>) -> Element<FamilyCarrier> {
        AlgebraElement {
            coeffs: a
                .coeffs
                .iter()
                .map(|(w, c)| (w.embed(), c.clone()))
                .collect(),
        }
    }
}

/// A central generator of the algebra: a class sum when a Δ-representative is
/// known, otherwise a solved basis vector of the center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSum<W: Ord + Clone> {
    pub representative: Option<W>,
    pub element: AlgebraElement<W>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{Family, Variant};
    use crate::semigroup::table_from_fn;

    const INV: Family = Family::CentralInvolution;
    const NIL: Family = Family::FreeNilpotent;

    fn ex22(field: FieldSpec) -> FamilyAlgebra {
        SemigroupAlgebra::new(FamilyCarrier::new(INV, Variant::Semigroup), field)
    }

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn nw(f: Family, v: Variant, z: i64, y: i64, x: i64) -> NilWord {
        NilWord::new(f, v, z, y, x).unwrap()
    }

    #[test]
    fn product_applies_rewriting() {
        let alg = ex22(f2());
        let x = alg.word(NilWord::generator_x(INV, Variant::Semigroup));
        let y = alg.word(NilWord::generator_y(INV, Variant::Semigroup));
        let xy = alg.mul(&x, &y).unwrap();
        assert_eq!(xy, alg.word(nw(INV, Variant::Semigroup, 1, 1, 1)));
    }

    #[test]
    fn zero_annihilates() {
        let alg = ex22(f2());
        let a = alg
            .from_terms([
                (nw(INV, Variant::Semigroup, 0, 1, 0), f2().one()),
                (nw(INV, Variant::Semigroup, 1, 0, 2), f2().one()),
            ])
            .unwrap();
        assert!(alg.mul(&a, &alg.zero()).unwrap().is_zero());
    }

    #[test]
    fn hat_squared_vanishes_in_char_two() {
        // (e + z)^2 = e + 2z + z^2 = 2(e + z) = 0 over F_2.
        let alg = ex22(f2());
        let hat = alg
            .from_terms([
                (NilWord::identity(INV, Variant::Semigroup), f2().one()),
                (NilWord::generator_z(INV, Variant::Semigroup), f2().one()),
            ])
            .unwrap();
        assert!(alg.mul(&hat, &hat).unwrap().is_zero());
    }

    #[test]
    fn commutator_of_y_and_x_over_q() {
        // [y, x] = yx - xy = (e - z)yx.
        let alg = ex22(FieldSpec::rationals());
        let x = alg.word(NilWord::generator_x(INV, Variant::Semigroup));
        let y = alg.word(NilWord::generator_y(INV, Variant::Semigroup));
        let c = alg.commutator(&y, &x).unwrap();
        let yx = nw(INV, Variant::Semigroup, 0, 1, 1);
        let zyx = nw(INV, Variant::Semigroup, 1, 1, 1);
        let q = FieldSpec::rationals();
        let expected = alg
            .from_terms([(yx, q.one()), (zyx, q.integer(-1))])
            .unwrap();
        assert_eq!(c, expected);
        assert!(!c.is_zero());
        assert!(!alg.is_central(&x).unwrap());
    }

    #[test]
    fn self_commutator_vanishes() {
        let alg = ex22(f2());
        let a = alg
            .from_terms([
                (nw(INV, Variant::Semigroup, 0, 1, 1), f2().one()),
                (nw(INV, Variant::Semigroup, 0, 0, 1), f2().one()),
            ])
            .unwrap();
        assert!(alg.commutator(&a, &a).unwrap().is_zero());
    }

    #[test]
    fn hat_is_central_in_char_two() {
        let alg = ex22(f2());
        let hat = alg
            .from_terms([
                (NilWord::identity(INV, Variant::Semigroup), f2().one()),
                (NilWord::generator_z(INV, Variant::Semigroup), f2().one()),
            ])
            .unwrap();
        assert!(alg.is_central(&hat).unwrap());
    }

    #[test]
    fn scalar_multiples_of_identity_are_central() {
        let alg = ex22(FieldSpec::rationals());
        let e = alg.one().unwrap();
        let a = alg.scale(&FieldSpec::rationals().integer(7), &e).unwrap();
        assert!(alg.is_central(&a).unwrap());
    }

    #[test]
    fn involution_class_sums_within_bound() {
        use num_integer::Integer;
        // Class sums: s alone for y,x both even; s + zs otherwise.
        let alg = ex22(f2());
        for cs in alg.center_basis(2) {
            let rep = cs.representative.clone().unwrap();
            let expected_size = if rep.y_exp().is_even() && rep.x_exp().is_even() {
                1
            } else {
                2
            };
            assert_eq!(cs.element.support_size(), expected_size, "class of {rep}");
            assert!(alg.is_central(&cs.element).unwrap(), "class sum of {rep}");
        }
    }

    #[test]
    fn free_nilpotent_class_sums_are_z_powers() {
        use num_traits::Zero;
        let alg = SemigroupAlgebra::new(FamilyCarrier::new(NIL, Variant::Semigroup), f2());
        let basis = alg.center_basis(3);
        for cs in &basis {
            assert_eq!(cs.element.support_size(), 1);
            let w = cs.element.support().next().unwrap();
            assert!(w.y_exp().is_zero() && w.x_exp().is_zero(), "{w}");
        }
        // z^0..z^3.
        assert_eq!(basis.len(), 4);
    }

    #[test]
    fn group_algebra_center_sums_match_conjugacy_classes() {
        // D4 class sums versus the brute-force dense center.
        let d4 = table_from_fn(
            ["e", "r", "r2", "r3", "f", "rf", "r2f", "r3f"]
                .map(String::from)
                .to_vec(),
            |a, b| {
                let (i, j) = (a % 4, a / 4);
                let (k, l) = (b % 4, b / 4);
                let k = if j == 1 { (4 - k) % 4 } else { k };
                (i + k) % 4 + 4 * ((j + l) % 2)
            },
            None,
            Some(0),
        )
        .unwrap();
        let carrier = TableCarrier::full(d4);
        let field = f2();
        let alg = SemigroupAlgebra::new(carrier.clone(), field);
        let sums = alg.center_basis(0);
        // D4 has 5 conjugacy classes.
        assert_eq!(sums.len(), 5);
        for cs in &sums {
            assert!(alg.is_central(&cs.element).unwrap());
        }
        let dense = carrier.to_findim(field);
        assert_eq!(dense.center_basis().len(), 5);
    }

    #[test]
    fn contracted_algebra_flattens_zero_products() {
        // Null semigroup {theta, a} with a*a = theta.
        let t = table_from_fn(
            vec!["theta".into(), "a".into()],
            |_, _| 0,
            Some(0),
            None,
        )
        .unwrap();
        let alg = SemigroupAlgebra::new(TableCarrier::contracted(t).unwrap(), f2());
        let a = alg.word(1);
        assert!(alg.mul(&a, &a).unwrap().is_zero());
        // theta itself is not a word of the contracted carrier.
        assert!(alg.from_terms([(0usize, f2().one())]).is_err());
    }

    #[test]
    fn field_mismatch_is_rejected() {
        let alg = ex22(f2());
        let q = FieldSpec::rationals();
        assert!(matches!(
            alg.from_terms([(NilWord::identity(INV, Variant::Semigroup), q.one())]),
            Err(AlgebraError::FieldMismatch(_, _))
        ));
    }

    #[test]
    fn support_of_product_is_within_support_products() {
        let alg = ex22(f2());
        let a = alg
            .from_terms([
                (nw(INV, Variant::Semigroup, 0, 1, 0), f2().one()),
                (nw(INV, Variant::Semigroup, 0, 0, 1), f2().one()),
            ])
            .unwrap();
        let b = alg
            .from_terms([
                (nw(INV, Variant::Semigroup, 1, 0, 0), f2().one()),
                (nw(INV, Variant::Semigroup, 0, 2, 1), f2().one()),
            ])
            .unwrap();
        let prod = alg.mul(&a, &b).unwrap();
        let allowed: std::collections::BTreeSet<NilWord> = a
            .support()
            .flat_map(|u| b.support().map(move |v| u.mul(v).unwrap()))
            .collect();
        for w in prod.support() {
            assert!(allowed.contains(w));
        }
    }

    #[test]
    fn render_and_json() {
        let alg = ex22(FieldSpec::rationals());
        let q = FieldSpec::rationals();
        let a = alg
            .from_terms([
                (NilWord::identity(INV, Variant::Semigroup), q.integer(2)),
                (nw(INV, Variant::Semigroup, 0, 1, 0), crate::field::rational(-1, 2)),
            ])
            .unwrap();
        assert_eq!(alg.render(&a), "2*e - 1/2*y");
        let json = alg.element_json(&a);
        assert_eq!(json[0]["word"], "e");
        assert_eq!(json[1]["coeff"], "-1/2");
    }
}
