//! Sparse multivectors over G(p,q) and the products defined on them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::blade::{blade_product, reverse_is_odd, Blade};
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};
use crate::signature::Signature;

/// The three grade involutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Conjugation {
    /// `g†`: reverses the order of vector factors, sign `(-1)^(k(k-1)/2)`.
    Reverse,
    /// `g⁻`: negates every vector, sign `(-1)^k`.
    Inversion,
    /// `g* = (g†)⁻`, sign `(-1)^(k(k+1)/2)`.
    Mixed,
}

impl Conjugation {
    pub fn flips(self, grade: usize) -> bool {
        match self {
            Conjugation::Reverse => reverse_is_odd(grade),
            Conjugation::Inversion => grade % 2 == 1,
            Conjugation::Mixed => reverse_is_odd(grade) ^ (grade % 2 == 1),
        }
    }
}

/// An element of G(p,q), stored as blade → coefficient with no zero entries.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector<S: Scalar = Rational> {
    sig: Signature,
    terms: BTreeMap<Blade, S>,
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, S::one())
    }

    pub fn scalar(sig: Signature, value: S) -> Self {
        Self::from_blade(sig, Blade::SCALAR, value)
    }

    /// `value * blade`. Panics if the blade does not fit in `sig`.
    pub fn from_blade(sig: Signature, blade: Blade, value: S) -> Self {
        assert!(
            blade.mask() & !sig.full_mask() == 0,
            "blade {:b} outside {sig}",
            blade.mask()
        );
        let mut terms = BTreeMap::new();
        if !value.is_negligible() {
            terms.insert(blade, value);
        }
        Multivector { sig, terms }
    }

    /// Sums the given terms; blades outside `sig` are rejected.
    pub fn from_terms(sig: Signature, terms: impl IntoIterator<Item = (Blade, S)>) -> Result<Self> {
        let mut out = Self::zero(sig);
        for (blade, value) in terms {
            if blade.mask() & !sig.full_mask() != 0 {
                return Err(Error::Index(format!(
                    "blade mask {:b} outside {sig}",
                    blade.mask()
                )));
            }
            out.accumulate(blade, value);
        }
        Ok(out)
    }

    /// Generator `e_i`, 1-based.
    pub fn e(sig: Signature, i: usize) -> Result<Self> {
        let slot = sig
            .e_slot(i)
            .ok_or_else(|| Error::Index(format!("e{i} is not a generator of {sig}")))?;
        Ok(Self::from_blade(sig, Blade::generator(slot), S::one()))
    }

    /// Generator `f_j`, 1-based.
    pub fn f(sig: Signature, j: usize) -> Result<Self> {
        let slot = sig
            .f_slot(j)
            .ok_or_else(|| Error::Index(format!("f{j} is not a generator of {sig}")))?;
        Ok(Self::from_blade(sig, Blade::generator(slot), S::one()))
    }

    /// Generator at a raw slot (e-block first).
    pub fn generator(sig: Signature, slot: usize) -> Self {
        Self::from_blade(sig, Blade::generator(slot), S::one())
    }

    /// The unit pseudoscalar `e_1..e_p f_1..f_q`.
    pub fn pseudoscalar(sig: Signature) -> Self {
        Self::from_blade(sig, Blade::from_mask(sig.full_mask()), S::one())
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &S)> {
        self.terms.iter().map(|(b, s)| (*b, s))
    }

    pub fn coefficient(&self, blade: Blade) -> S {
        self.terms.get(&blade).cloned().unwrap_or_else(S::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(&mut self, blade: Blade, value: S) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(blade) {
            Entry::Vacant(v) => {
                if !value.is_negligible() {
                    v.insert(value);
                }
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + value;
                if sum.is_negligible() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_sig(&self, other: &Self) -> Result<()> {
        if self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch(self.sig, other.sig))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = self.clone();
        for (b, v) in other.terms() {
            out.accumulate(b, v.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = self.clone();
        for (b, v) in other.terms() {
            out.accumulate(b, -v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &S) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(b, v)| (*b, v.clone() * factor.clone()))
            .filter(|(_, v)| !v.is_negligible())
            .collect();
        Multivector {
            sig: self.sig,
            terms,
        }
    }

    /// Bilinear extension of the blade product.
    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = Self::zero(self.sig);
        for (&a, x) in &self.terms {
            for (&b, y) in &other.terms {
                let (negated, blade) = blade_product(&self.sig, a, b);
                let v = x.clone() * y.clone();
                out.accumulate(blade, if negated { -v } else { v });
            }
        }
        Ok(out)
    }

    /// `<g>_k`.
    pub fn grade_project(&self, k: usize) -> Result<Self> {
        if k > self.sig.n() {
            return Err(Error::Grade(format!(
                "grade {k} exceeds n = {} of {}",
                self.sig.n(),
                self.sig
            )));
        }
        Ok(self.filter(|b| b.grade() == k))
    }

    fn filter(&self, keep: impl Fn(Blade) -> bool) -> Self {
        Multivector {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(**b))
                .map(|(b, v)| (*b, v.clone()))
                .collect(),
        }
    }

    /// Even-grade part `<g>_+`.
    pub fn even_part(&self) -> Self {
        self.filter(|b| b.grade() % 2 == 0)
    }

    /// Grades carrying nonzero terms, ascending.
    pub fn grades(&self) -> Vec<usize> {
        let mut gs: Vec<usize> = self.terms.keys().map(|b| b.grade()).collect();
        gs.sort_unstable();
        gs.dedup();
        gs
    }

    /// `Some(k)` if every term has grade `k`; `None` for zero or mixed grades.
    pub fn homogeneous_grade(&self) -> Option<usize> {
        match self.grades().as_slice() {
            [k] => Some(*k),
            _ => None,
        }
    }

    pub fn conjugate(&self, kind: Conjugation) -> Self {
        Multivector {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .map(|(b, v)| {
                    let v = if kind.flips(b.grade()) { -v.clone() } else { v.clone() };
                    (*b, v)
                })
                .collect(),
        }
    }

    pub fn reverse(&self) -> Self {
        self.conjugate(Conjugation::Reverse)
    }

    pub fn inversion(&self) -> Self {
        self.conjugate(Conjugation::Inversion)
    }

    pub fn mixed(&self) -> Self {
        self.conjugate(Conjugation::Mixed)
    }

    /// `<g>_0`.
    pub fn scalar_part(&self) -> S {
        self.coefficient(Blade::SCALAR)
    }

    /// `g1 * g2 := <g1 g2†>_0`.
    pub fn scalar_product(&self, other: &Self) -> Result<S> {
        self.check_sig(other)?;
        // only matching blades contribute to the scalar part
        let mut acc = S::zero();
        for (&b, x) in &self.terms {
            if let Some(y) = other.terms.get(&b) {
                let (negated, _) = blade_product(&self.sig, b, b);
                let v = x.clone() * y.clone();
                let negated = negated ^ reverse_is_odd(b.grade());
                acc = if negated { acc - v } else { acc + v };
            }
        }
        Ok(acc)
    }

    /// `<g g†>_0`, before taking absolute value and root.
    pub fn norm_squared(&self) -> S {
        self.scalar_product(self).expect("same signature")
    }

    /// `|g| = |<g g†>_0|^(1/2)`.
    pub fn magnitude(&self) -> f64 {
        self.norm_squared().modulus().sqrt()
    }

    /// Magnitude in the coefficient type, when it is representable there.
    pub fn exact_magnitude(&self) -> Option<S> {
        self.norm_squared().sqrt_modulus()
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.geometric_product(other)? == other.geometric_product(self)?)
    }

    /// `½(ab + ba)`.
    pub fn symmetric_part(&self, other: &Self) -> Result<Self> {
        let ab = self.geometric_product(other)?;
        let ba = other.geometric_product(self)?;
        Ok(ab.try_add(&ba)?.scale(&S::half()))
    }

    /// `½(ab - ba)`.
    pub fn antisymmetric_part(&self, other: &Self) -> Result<Self> {
        let ab = self.geometric_product(other)?;
        let ba = other.geometric_product(self)?;
        Ok(ab.try_sub(&ba)?.scale(&S::half()))
    }

    /// Converts coefficients into another scalar type.
    pub fn map_scalars<T: Scalar>(&self, sig: Signature, f: impl Fn(&S) -> T) -> Multivector<T> {
        assert_eq!(sig.n(), self.sig.n());
        let mut out = Multivector::zero(sig);
        for (b, v) in self.terms() {
            out.accumulate(b, f(v));
        }
        out
    }

    /// Raises to a non-negative integer power.
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.sig);
        for _ in 0..exp {
            acc = acc.geometric_product(self).expect("same signature");
        }
        acc
    }
}

impl Multivector<Rational> {
    /// Lifts an exact real multivector into another coefficient type.
    pub fn convert<T: Scalar>(&self) -> Multivector<T> {
        self.map_scalars(self.sig.with_field(T::FIELD), T::from_rational)
    }
}

/// Splits `v W_k` into `v·W_k = <v W_k>_{k-1}` and `v∧W_k = <v W_k>_{k+1}`
/// using `½(v W_k ± (-1)^(k+1) W_k v)`.
pub fn vector_kvector_split<S: Scalar>(
    v: &Multivector<S>,
    w: &Multivector<S>,
) -> Result<(Multivector<S>, Multivector<S>)> {
    v.check_sig(w)?;
    let zero = Multivector::zero(v.sig);
    if !v.is_zero() && v.homogeneous_grade() != Some(1) {
        return Err(Error::Grade(format!("expected a vector, got grades {:?}", v.grades())));
    }
    if w.is_zero() || v.is_zero() {
        if !w.is_zero() && w.homogeneous_grade().is_none() {
            return Err(Error::Grade(format!(
                "expected a homogeneous k-vector, got grades {:?}",
                w.grades()
            )));
        }
        return Ok((zero.clone(), zero));
    }
    let k = w.homogeneous_grade().ok_or_else(|| {
        Error::Grade(format!(
            "expected a homogeneous k-vector, got grades {:?}",
            w.grades()
        ))
    })?;
    let vw = v.geometric_product(w)?;
    let wv = w.geometric_product(v)?;
    // (-1)^(k+1) W v
    let signed = if k % 2 == 1 { wv } else { -wv };
    let half = S::half();
    let dot = vw.try_add(&signed)?.scale(&half);
    let wedge = vw.try_sub(&signed)?.scale(&half);
    Ok((dot, wedge))
}

impl<S: Scalar> Neg for Multivector<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Multivector {
            sig: self.sig,
            terms: self.terms.into_iter().map(|(b, v)| (b, -v)).collect(),
        }
    }
}

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        -self.clone()
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        /// Panics on signature mismatch; use the `try_`/named method to get an error instead.
        impl<S: Scalar> $trait<&Multivector<S>> for &Multivector<S> {
            type Output = Multivector<S>;
            fn $method(self, rhs: &Multivector<S>) -> Multivector<S> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl<S: Scalar> $trait for Multivector<S> {
            type Output = Multivector<S>;
            fn $method(self, rhs: Multivector<S>) -> Multivector<S> {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, geometric_product);

impl<S: Scalar> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr::format(self))
    }
}
