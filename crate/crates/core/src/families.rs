//! The two built-in presented semigroups and their groups of fractions.
//!
//! Both families are generated by `x, y, z` with `z` central and the single
//! rewriting rule `xy = zyx`:
//!
//! * `ex22` additionally imposes `z² = e` (central involution family);
//! * `ex23` keeps `z` of infinite order (free nilpotent of class 2).
//!
//! Every element has a unique normal form `z^a y^b x^c`; multiplying two
//! normal forms is the closed formula
//! `(a,b,c)·(d,e,f) = (a + d + c·e, b + e, c + f)`, with the z-exponent taken
//! mod 2 for `ex22`. The semigroup variants keep all exponents nonnegative
//! (a monoid convention: the empty word `e` is included, which `z² = e`
//! forces for `ex22` anyway); the group variants allow arbitrary integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("words belong to different families: {0} vs {1}")]
    FamilyMismatch(Family, Family),
    #[error("words belong to different variants: {0:?} vs {1:?}")]
    VariantMismatch(Variant, Variant),
    #[error("exponent {0} of {1} is negative in the semigroup variant")]
    NegativeExponent(BigInt, char),
    #[error("no central denominator exists for this word in {0}")]
    NotDecomposable(Family),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    /// `z` central, `z² = e`, `xy = zyx`. CLI id `ex22`.
    CentralInvolution,
    /// `z` central of infinite order, `xy = zyx`. CLI id `ex23`.
    FreeNilpotent,
}

impl Family {
    pub fn cli_id(&self) -> &'static str {
        match self {
            Family::CentralInvolution => "ex22",
            Family::FreeNilpotent => "ex23",
        }
    }

    pub fn from_cli_id(s: &str) -> Option<Self> {
        match s {
            "ex22" => Some(Family::CentralInvolution),
            "ex23" => Some(Family::FreeNilpotent),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Variant {
    /// Nonnegative exponents only.
    Semigroup,
    /// The group of fractions: arbitrary integer exponents.
    Group,
}

/// Normal form `z^a y^b x^c` of one element.
///
/// The z-exponent is stored reduced (mod 2 for [`Family::CentralInvolution`]);
/// two words are equal iff their components are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NilWord {
    family: Family,
    variant: Variant,
    z: BigInt,
    y: BigInt,
    x: BigInt,
}

impl NilWord {
    pub fn new(
        family: Family,
        variant: Variant,
        z: impl Into<BigInt>,
        y: impl Into<BigInt>,
        x: impl Into<BigInt>,
    ) -> Result<Self, FamilyError> {
        let (z, y, x) = (z.into(), y.into(), x.into());
        if variant == Variant::Semigroup {
            if y.is_negative() {
                return Err(FamilyError::NegativeExponent(y, 'y'));
            }
            if x.is_negative() {
                return Err(FamilyError::NegativeExponent(x, 'x'));
            }
            if family == Family::FreeNilpotent && z.is_negative() {
                return Err(FamilyError::NegativeExponent(z, 'z'));
            }
        }
        Ok(NilWord {
            family,
            variant,
            z: reduce_z(family, z),
            y,
            x,
        })
    }

    pub fn identity(family: Family, variant: Variant) -> Self {
        NilWord::new(family, variant, 0, 0, 0).expect("identity is valid")
    }

    pub fn generator_z(family: Family, variant: Variant) -> Self {
        NilWord::new(family, variant, 1, 0, 0).expect("z is valid")
    }

    pub fn generator_y(family: Family, variant: Variant) -> Self {
        NilWord::new(family, variant, 0, 1, 0).expect("y is valid")
    }

    pub fn generator_x(family: Family, variant: Variant) -> Self {
        NilWord::new(family, variant, 0, 0, 1).expect("x is valid")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn z_exp(&self) -> &BigInt {
        &self.z
    }

    pub fn y_exp(&self) -> &BigInt {
        &self.y
    }

    pub fn x_exp(&self) -> &BigInt {
        &self.x
    }

    pub fn is_identity(&self) -> bool {
        self.z.is_zero() && self.y.is_zero() && self.x.is_zero()
    }

    fn compatible(&self, other: &Self) -> Result<(), FamilyError> {
        if self.family != other.family {
            return Err(FamilyError::FamilyMismatch(self.family, other.family));
        }
        if self.variant != other.variant {
            return Err(FamilyError::VariantMismatch(self.variant, other.variant));
        }
        Ok(())
    }

    /// Normal form of the concatenation:
    /// `(a,b,c)·(d,e,f) = (a + d + c·e, b + e, c + f)`.
    pub fn mul(&self, rhs: &Self) -> Result<Self, FamilyError> {
        self.compatible(rhs)?;
        NilWord::new(
            self.family,
            self.variant,
            &self.z + &rhs.z + &self.x * &rhs.y,
            &self.y + &rhs.y,
            &self.x + &rhs.x,
        )
    }

    /// Group-variant inverse.
    pub fn inverse(&self) -> Option<Self> {
        if self.variant != Variant::Group {
            return None;
        }
        // (a,b,c)^{-1} = (-a + bc, -b, -c): check by multiplying back.
        Some(
            NilWord::new(
                self.family,
                Variant::Group,
                -&self.z + &self.y * &self.x,
                -&self.y,
                -&self.x,
            )
            .expect("group variant accepts any exponents"),
        )
    }

    /// `s^x`, the unique `t` with `x·s = t·x`; closed form
    /// `(a + f·b − e·c, b, c)` for `x = (d,e,f)`.
    ///
    /// Always defined in the group variants and for the involution family;
    /// undefined in the `ex23` semigroup when the z-exponent would go
    /// negative.
    pub fn conjugate_by(&self, x: &Self) -> Result<Option<Self>, FamilyError> {
        self.compatible(x)?;
        let z = &self.z + &x.x * &self.y - &x.y * &self.x;
        match NilWord::new(self.family, self.variant, z, self.y.clone(), self.x.clone()) {
            Ok(w) => Ok(Some(w)),
            Err(FamilyError::NegativeExponent(_, _)) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// Δ-membership with the conjugate set when it is finite.
    pub fn delta_class(&self) -> DeltaClass {
        match self.family {
            Family::CentralInvolution => {
                // a + f·b − e·c mod 2 sweeps both parities unless b and c are
                // both even, in which case the class is a singleton.
                if self.y.is_even() && self.x.is_even() {
                    DeltaClass::InDelta(vec![self.clone()])
                } else {
                    let z = NilWord::generator_z(self.family, self.variant);
                    let mut class = vec![self.clone(), z.mul(self).expect("same carrier")];
                    class.sort();
                    DeltaClass::InDelta(class)
                }
            }
            Family::FreeNilpotent => {
                if self.y.is_zero() && self.x.is_zero() {
                    DeltaClass::InDelta(vec![self.clone()])
                } else {
                    // Conjugates z^k s range over infinitely many k (or are
                    // undefined in the semigroup variant).
                    DeltaClass::NotInDelta
                }
            }
        }
    }

    /// True iff the word is central in its family (`D(s) = {s}`).
    pub fn is_central_word(&self) -> bool {
        matches!(self.delta_class(), DeltaClass::InDelta(ref c) if c.len() == 1)
    }

    /// Exponent-preserving embedding into the group of fractions.
    pub fn embed(&self) -> Self {
        NilWord {
            family: self.family,
            variant: Variant::Group,
            z: self.z.clone(),
            y: self.y.clone(),
            x: self.x.clone(),
        }
    }

    /// Writes a group word as `s·t⁻¹` with `s` in the semigroup and `t` a
    /// central semigroup word. The denominator is the minimal one: even
    /// powers of `x` and `y` (involution family) or a power of `z` (free
    /// nilpotent family) just large enough to clear the negative exponents.
    pub fn central_decompose(&self) -> Result<(NilWord, NilWord), FamilyError> {
        let even_cover = |e: &BigInt| -> BigInt {
            if e.is_negative() {
                let m = -e;
                if m.is_even() {
                    m
                } else {
                    m + 1
                }
            } else {
                BigInt::zero()
            }
        };
        let t = match self.family {
            Family::CentralInvolution => NilWord::new(
                self.family,
                Variant::Semigroup,
                0,
                even_cover(&self.y),
                even_cover(&self.x),
            )?,
            Family::FreeNilpotent => {
                if self.y.is_negative() || self.x.is_negative() {
                    // Z(S) is the z-powers only; no central denominator can
                    // repair a negative x or y exponent.
                    return Err(FamilyError::NotDecomposable(self.family));
                }
                let z = if self.z.is_negative() {
                    -&self.z
                } else {
                    BigInt::zero()
                };
                NilWord::new(self.family, Variant::Semigroup, z, 0, 0)?
            }
        };
        debug_assert!(t.is_central_word());
        let in_group = self.as_group().mul(&t.embed())?;
        let s = in_group.as_semigroup()?;
        // Contract: s·t⁻¹ = g in the group of fractions.
        debug_assert_eq!(
            s.embed()
                .mul(&t.embed().inverse().expect("group word"))
                .expect("same carrier"),
            self.as_group()
        );
        Ok((s, t))
    }

    fn as_group(&self) -> NilWord {
        self.embed()
    }

    /// Reinterprets the word in the semigroup variant, failing on negative
    /// exponents.
    pub fn as_semigroup(&self) -> Result<NilWord, FamilyError> {
        NilWord::new(
            self.family,
            Variant::Semigroup,
            self.z.clone(),
            self.y.clone(),
            self.x.clone(),
        )
    }
}

fn reduce_z(family: Family, z: BigInt) -> BigInt {
    match family {
        Family::CentralInvolution => z.mod_floor(&BigInt::from(2)),
        Family::FreeNilpotent => z,
    }
}

/// Δ-membership result for a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeltaClass {
    /// The finite conjugate set `D(s)`, sorted.
    InDelta(Vec<NilWord>),
    NotInDelta,
}

impl fmt::Display for NilWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("e");
        }
        let mut parts = Vec::new();
        for (sym, exp) in [('z', &self.z), ('y', &self.y), ('x', &self.x)] {
            if exp.is_zero() {
                continue;
            }
            if exp.is_one() {
                parts.push(sym.to_string());
            } else {
                parts.push(format!("{sym}^{exp}"));
            }
        }
        f.write_str(&parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(f: Family, v: Variant, z: i64, y: i64, x: i64) -> NilWord {
        NilWord::new(f, v, z, y, x).unwrap()
    }

    const INV: Family = Family::CentralInvolution;
    const NIL: Family = Family::FreeNilpotent;
    const SG: Variant = Variant::Semigroup;
    const GP: Variant = Variant::Group;

    // Free rewriting oracle: multiply as strings over {x, y, z}, pushing z
    // left (it is central), rewriting xy -> zyx, and cancelling zz for the
    // involution family. Independent of the closed-form product.
    fn oracle_mul(family: Family, u: &NilWord, v: &NilWord) -> (i64, i64, i64) {
        let render = |w: &NilWord| -> Vec<char> {
            let mut s = Vec::new();
            let small = |b: &BigInt| -> i64 { b.try_into().unwrap() };
            for _ in 0..small(w.z_exp()) {
                s.push('z');
            }
            for _ in 0..small(w.y_exp()) {
                s.push('y');
            }
            for _ in 0..small(w.x_exp()) {
                s.push('x');
            }
            s
        };
        let mut word: Vec<char> = render(u).into_iter().chain(render(v)).collect();
        loop {
            let mut changed = false;
            for i in 0..word.len().saturating_sub(1) {
                let pair = (word[i], word[i + 1]);
                match pair {
                    ('x', 'y') => {
                        word.splice(i..i + 2, ['z', 'y', 'x']);
                        changed = true;
                        break;
                    }
                    ('x', 'z') | ('y', 'z') => {
                        word.swap(i, i + 1);
                        changed = true;
                        break;
                    }
                    ('z', 'z') if family == INV => {
                        word.drain(i..i + 2);
                        changed = true;
                        break;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }
        let count = |c: char| word.iter().filter(|&&k| k == c).count() as i64;
        (count('z'), count('y'), count('x'))
    }

    #[test]
    fn x_times_y_is_zyx() {
        for f in [INV, NIL] {
            let x = NilWord::generator_x(f, SG);
            let y = NilWord::generator_y(f, SG);
            assert_eq!(x.mul(&y).unwrap(), w(f, SG, 1, 1, 1));
        }
    }

    #[test]
    fn y_times_x_stays_yx() {
        // No rule applies to yx.
        let y = NilWord::generator_y(INV, SG);
        let x = NilWord::generator_x(INV, SG);
        assert_eq!(y.mul(&x).unwrap(), w(INV, SG, 0, 1, 1));
    }

    #[test]
    fn identity_is_neutral() {
        let e = NilWord::identity(NIL, SG);
        let u = w(NIL, SG, 2, 3, 1);
        assert_eq!(e.mul(&u).unwrap(), u);
        assert_eq!(u.mul(&e).unwrap(), u);
    }

    #[test]
    fn closed_form_matches_rewriting_oracle() {
        for f in [INV, NIL] {
            for (az, ay, ax) in [(0, 0, 1), (1, 1, 0), (0, 2, 1), (1, 1, 2), (0, 3, 2)] {
                for (bz, by, bx) in [(0, 1, 0), (0, 0, 2), (1, 2, 1), (0, 1, 3)] {
                    let u = w(f, SG, az, ay, ax);
                    let v = w(f, SG, bz, by, bx);
                    let got = u.mul(&v).unwrap();
                    let (oz, oy, ox) = oracle_mul(f, &u, &v);
                    let expect = w(f, SG, oz, oy, ox);
                    assert_eq!(got, expect, "{u} * {v}");
                }
            }
        }
    }

    #[test]
    fn conjugation_satisfies_defining_equation() {
        for f in [INV, NIL] {
            for v in [SG, GP] {
                for s in [w(f, v, 0, 1, 0), w(f, v, 1, 2, 1), w(f, v, 0, 0, 3)] {
                    for x in [w(f, v, 0, 0, 1), w(f, v, 0, 2, 1), w(f, v, 1, 1, 1)] {
                        if let Some(t) = s.conjugate_by(&x).unwrap() {
                            assert_eq!(x.mul(&s).unwrap(), t.mul(&x).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn conjugate_of_y_by_x_is_zy() {
        let y = NilWord::generator_y(INV, SG);
        let x = NilWord::generator_x(INV, SG);
        assert_eq!(y.conjugate_by(&x).unwrap(), Some(w(INV, SG, 1, 1, 0)));
    }

    #[test]
    fn central_words_are_fixed_by_conjugation() {
        let s = w(INV, SG, 1, 0, 0);
        for x in [w(INV, SG, 0, 1, 2), w(INV, SG, 1, 3, 1)] {
            assert_eq!(s.conjugate_by(&x).unwrap(), Some(s.clone()));
        }
    }

    #[test]
    fn x_conjugated_by_y_is_undefined_in_free_nilpotent_semigroup() {
        let x = NilWord::generator_x(NIL, SG);
        let y = NilWord::generator_y(NIL, SG);
        // Oracle: exhaust small t in t·y = y·x; the z-exponent of y·x is 0,
        // while t·y has z-exponent t.z + t.x ≥ ... the formula needs -1.
        for tz in 0..4i64 {
            for ty in 0..4i64 {
                for tx in 0..4i64 {
                    let t = w(NIL, SG, tz, ty, tx);
                    assert_ne!(
                        t.mul(&y).unwrap(),
                        y.mul(&x).unwrap(),
                        "unexpected solution {t}"
                    );
                }
            }
        }
        assert_eq!(x.conjugate_by(&y).unwrap(), None);
        // In the group variant the class {z^-k x} exists but is infinite.
        assert_eq!(NilWord::generator_x(NIL, GP).delta_class(), DeltaClass::NotInDelta);
    }

    #[test]
    fn involution_delta_classes() {
        // y has class {y, zy}.
        let y = NilWord::generator_y(INV, SG);
        match y.delta_class() {
            DeltaClass::InDelta(c) => {
                assert_eq!(c, vec![w(INV, SG, 0, 1, 0), w(INV, SG, 1, 1, 0)]);
            }
            DeltaClass::NotInDelta => panic!("every ex22 word is in Δ"),
        }
        // x² is central: singleton class.
        let x2 = w(INV, SG, 0, 0, 2);
        assert_eq!(x2.delta_class(), DeltaClass::InDelta(vec![x2.clone()]));
        assert!(x2.is_central_word());
    }

    #[test]
    fn involution_class_from_conjugation_sweep() {
        // Sweep conjugators over generator products and compare with the
        // closed-form class.
        let s = NilWord::generator_y(INV, SG);
        let mut seen = std::collections::BTreeSet::new();
        for d in 0..2i64 {
            for e in 0..3i64 {
                for f in 0..3i64 {
                    let x = w(INV, SG, d, e, f);
                    if let Some(t) = s.conjugate_by(&x).unwrap() {
                        seen.insert(t);
                    }
                }
            }
        }
        match s.delta_class() {
            DeltaClass::InDelta(c) => {
                assert_eq!(seen.into_iter().collect::<Vec<_>>(), c);
            }
            DeltaClass::NotInDelta => unreachable!(),
        }
    }

    #[test]
    fn free_nilpotent_delta_is_z_powers() {
        assert!(w(NIL, SG, 3, 0, 0).is_central_word());
        assert_eq!(w(NIL, SG, 0, 1, 0).delta_class(), DeltaClass::NotInDelta);
        assert_eq!(w(NIL, SG, 2, 1, 3).delta_class(), DeltaClass::NotInDelta);
    }

    #[test]
    fn involution_center_is_even_xy_exponents() {
        for z in 0..2i64 {
            for y in 0..4i64 {
                for x in 0..4i64 {
                    let word = w(INV, SG, z, y, x);
                    assert_eq!(
                        word.is_central_word(),
                        y % 2 == 0 && x % 2 == 0,
                        "{word}"
                    );
                }
            }
        }
    }

    #[test]
    fn embedding_is_multiplicative() {
        let u = w(INV, SG, 1, 2, 1);
        let v = w(INV, SG, 0, 1, 3);
        assert_eq!(
            u.embed().mul(&v.embed()).unwrap(),
            u.mul(&v).unwrap().embed()
        );
    }

    #[test]
    fn group_inverse_cancels() {
        for f in [INV, NIL] {
            for word in [w(f, GP, 1, -2, 3), w(f, GP, 0, 1, -1), w(f, GP, 1, 0, 0)] {
                let e = NilWord::identity(f, GP);
                let inv = word.inverse().unwrap();
                assert_eq!(word.mul(&inv).unwrap(), e);
                assert_eq!(inv.mul(&word).unwrap(), e);
            }
        }
    }

    #[test]
    fn central_decompose_x_inverse() {
        let g = w(INV, GP, 0, 0, -1);
        let (s, t) = g.central_decompose().unwrap();
        assert_eq!(s, w(INV, SG, 0, 0, 1));
        assert_eq!(t, w(INV, SG, 0, 0, 2));
    }

    #[test]
    fn central_decompose_trivial_on_semigroup_words() {
        let g = w(INV, GP, 1, 2, 3);
        let (s, t) = g.central_decompose().unwrap();
        assert_eq!(s, w(INV, SG, 1, 2, 3));
        assert!(t.is_identity());
    }

    #[test]
    fn central_decompose_round_trips() {
        for g in [
            w(INV, GP, 1, -1, -1),
            w(INV, GP, 0, -3, 2),
            w(INV, GP, 1, 4, -5),
            w(NIL, GP, -4, 2, 1),
        ] {
            let (s, t) = g.central_decompose().unwrap();
            assert!(t.is_central_word());
            let back = s.embed().mul(&t.embed().inverse().unwrap()).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn free_nilpotent_negative_xy_is_not_decomposable() {
        let g = w(NIL, GP, 0, 0, -1);
        assert_eq!(
            g.central_decompose(),
            Err(FamilyError::NotDecomposable(NIL))
        );
    }

    #[test]
    fn semigroup_variant_rejects_negative_exponents() {
        assert!(matches!(
            NilWord::new(INV, SG, 0, -1, 0),
            Err(FamilyError::NegativeExponent(_, 'y'))
        ));
        assert!(matches!(
            NilWord::new(NIL, SG, -1, 0, 0),
            Err(FamilyError::NegativeExponent(_, 'z'))
        ));
        // ex22 allows any z (reduced mod 2).
        assert_eq!(NilWord::new(INV, SG, -1, 0, 0).unwrap(), w(INV, SG, 1, 0, 0));
    }

    #[test]
    fn display_format() {
        assert_eq!(w(INV, SG, 1, 1, 1).to_string(), "z y x");
        assert_eq!(w(NIL, SG, 0, 2, 0).to_string(), "y^2");
        assert_eq!(w(NIL, GP, 0, 0, -1).to_string(), "x^-1");
        assert_eq!(NilWord::identity(INV, SG).to_string(), "e");
    }
}
