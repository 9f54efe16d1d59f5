//! Generator maps realizing the structure theorems as explicit algebra
//! homomorphisms between geometric algebras.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::blade::Blade;
use crate::classify::classify_real;
use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::multivector::Multivector;
use crate::random::{random_multivector, rng};
use crate::scalar::{Rational, Scalar};
use crate::signature::{Field, Signature};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IsoKind {
    /// `G(p,q) → G(p,q+1)⁺`: `e_i ↦ f e_i`, `f_j ↦ f f_j` with `f = f_{q+1}`.
    EvenSub,
    /// `G(q+1,p-1) ≅ G(p,q)`, built inside `G(p,q)` from `e = e_1`:
    /// `e ↦ e`, then `e f_j` (square +1), then `e e_i` (square -1).
    Swap,
    /// `G(p-4,q+4) ≅ G(p,q)`, built inside `G(p,q)` from the trivectors of
    /// `e_1..e_4`.
    Shift4,
}

impl IsoKind {
    pub fn from_name(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().as_str() {
            "evensub" => Some(IsoKind::EvenSub),
            "swap" => Some(IsoKind::Swap),
            "shift4" => Some(IsoKind::Shift4),
            _ => None,
        }
    }
}

/// An algebra map given by the images of the domain generators
/// (`e_1..e_p` then `f_1..f_q`), extended multiplicatively and linearly.
#[derive(Debug, Clone)]
pub struct GeneratorMap {
    kind: Option<IsoKind>,
    domain: Signature,
    codomain: Signature,
    images: Vec<Multivector>,
    blade_images: OnceLock<Vec<Multivector>>,
}

impl GeneratorMap {
    /// A map from explicit images; invariants are not checked here (see
    /// [`verify_map`]), only the count and the codomain of each image.
    pub fn new(domain: Signature, codomain: Signature, images: Vec<Multivector>) -> Result<Self> {
        if images.len() != domain.n() {
            return Err(Error::Iso(format!(
                "{domain} has {} generators, got {} images",
                domain.n(),
                images.len()
            )));
        }
        if let Some(bad) = images.iter().find(|m| m.sig() != codomain) {
            return Err(Error::SignatureMismatch(bad.sig(), codomain));
        }
        Ok(GeneratorMap {
            kind: None,
            domain,
            codomain,
            images,
            blade_images: OnceLock::new(),
        })
    }

    pub fn kind(&self) -> Option<IsoKind> {
        self.kind
    }

    pub fn domain(&self) -> Signature {
        self.domain
    }

    pub fn codomain(&self) -> Signature {
        self.codomain
    }

    pub fn images(&self) -> &[Multivector] {
        &self.images
    }

    /// Name of the domain generator at `slot`.
    pub fn generator_name(&self, slot: usize) -> String {
        Blade::generator(slot).literal(&self.domain)
    }

    /// Image of every domain basis blade, indexed by mask.
    pub fn blade_images(&self) -> &[Multivector] {
        self.blade_images.get_or_init(|| {
            let mut out: Vec<Multivector> = Vec::with_capacity(self.domain.dim());
            out.push(Multivector::one(self.codomain));
            for mask in 1..self.domain.dim() as u32 {
                // strip the highest slot: image(rest) * image(top)
                let top = 31 - mask.leading_zeros();
                let rest = mask & !(1 << top);
                let img = &out[rest as usize] * &self.images[top as usize];
                out.push(img);
            }
            out
        })
    }

    /// Applies the map to `g`, keeping `g`'s coefficient field.
    pub fn apply<S: Scalar>(&self, g: &Multivector<S>) -> Result<Multivector<S>> {
        if g.sig().with_field(Field::Real) != self.domain {
            return Err(Error::SignatureMismatch(g.sig(), self.domain));
        }
        let codomain = self.codomain.with_field(g.sig().field());
        let images = self.blade_images();
        let mut terms = Vec::new();
        for (blade, coeff) in g.terms() {
            for (b, c) in images[blade.mask() as usize].terms() {
                terms.push((b, S::from_rational(c) * coeff.clone()));
            }
        }
        Multivector::from_terms(codomain, terms)
    }
}

/// Free-function form of [`GeneratorMap::apply`].
pub fn apply_map<S: Scalar>(m: &GeneratorMap, g: &Multivector<S>) -> Result<Multivector<S>> {
    m.apply(g)
}

fn gen(sig: Signature, slot: usize) -> Multivector {
    Multivector::generator(sig, slot)
}

/// Builds the generator map of a structure theorem.
///
/// * `EvenSub`: domain `G(p,q)`, codomain `G(p,q+1)`.
/// * `Swap`: codomain `G(p,q)` with `p >= 1`, domain `G(q+1,p-1)`.
/// * `Shift4`: codomain `G(p,q)` with `p >= 4`, domain `G(p-4,q+4)`.
pub fn build_iso(kind: IsoKind, p: usize, q: usize) -> Result<GeneratorMap> {
    let (domain, codomain, images) = match kind {
        IsoKind::EvenSub => {
            let dom = Signature::new(p, q)?;
            let cod = Signature::new(p, q + 1)?;
            let f = gen(cod, p + q);
            let mut images: Vec<Multivector> = (0..p).map(|i| &f * &gen(cod, i)).collect();
            images.extend((0..q).map(|j| &f * &gen(cod, p + j)));
            (dom, cod, images)
        }
        IsoKind::Swap => {
            if p == 0 {
                return Err(Error::Iso(format!(
                    "Swap needs an e-generator in G({p},{q})"
                )));
            }
            let cod = Signature::new(p, q)?;
            let dom = Signature::new(q + 1, p - 1)?;
            let e = gen(cod, 0);
            let mut images = vec![e.clone()];
            images.extend((0..q).map(|j| &e * &gen(cod, p + j)));
            images.extend((1..p).map(|i| &e * &gen(cod, i)));
            (dom, cod, images)
        }
        IsoKind::Shift4 => {
            if p < 4 {
                return Err(Error::Iso(format!(
                    "Shift4 needs four e-generators in G({p},{q})"
                )));
            }
            let cod = Signature::new(p, q)?;
            let dom = Signature::new(p - 4, q + 4)?;
            let e = |i: usize| gen(cod, i);
            // f'_a = e_b e_c e_d, cycling (a,b,c,d) = (e1,e2,e3,e4)
            let trivector = |s: usize| &(&e((s + 1) % 4) * &e((s + 2) % 4)) * &e((s + 3) % 4);
            let mut images: Vec<Multivector> = (4..p).map(e).collect();
            images.extend((0..4).map(trivector));
            images.extend((0..q).map(|j| gen(cod, p + j)));
            (dom, cod, images)
        }
    };
    let mut map = GeneratorMap::new(domain, codomain, images)?;
    map.kind = Some(kind);
    Ok(map)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub check: String,
    pub status: Status,
    pub witness: Option<String>,
}

impl Check {
    pub fn new(check: impl Into<String>, failure: Option<String>) -> Self {
        Check {
            check: check.into(),
            status: if failure.is_some() { Status::Fail } else { Status::Pass },
            witness: failure,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.check == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match (&c.status, &c.witness) {
                (Status::Pass, _) => writeln!(f, "PASS {}", c.check)?,
                (Status::Fail, Some(w)) => writeln!(f, "FAIL {}: {w}", c.check)?,
                (Status::Fail, None) => writeln!(f, "FAIL {}", c.check)?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { samples: 20, seed: 0 }
    }
}

/// Coordinates of `g` in the standard basis of its algebra.
pub fn coordinates(g: &Multivector) -> Vec<Rational> {
    let mut v = vec![Rational::from_integer(0.into()); g.sig().dim()];
    for (b, c) in g.terms() {
        v[b.mask() as usize] = c.clone();
    }
    v
}

/// Checks the generator-map invariants with default sampling.
pub fn verify_map(m: &GeneratorMap) -> Report {
    verify_map_with(m, VerifyOptions::default())
}

pub fn verify_map_with(m: &GeneratorMap, opts: VerifyOptions) -> Report {
    let mut report = Report::default();
    let n = m.domain.n();
    let one = Multivector::one(m.codomain);

    let mut failure = None;
    for (slot, img) in m.images.iter().enumerate() {
        if img.homogeneous_grade().is_none() {
            failure = Some(format!(
                "image of {} has grades {:?}",
                m.generator_name(slot),
                img.grades()
            ));
            break;
        }
    }
    report.push(Check::new("homogeneous", failure));

    let mut failure = None;
    for (slot, img) in m.images.iter().enumerate() {
        let want = if m.domain.generator_square(slot) > 0 { one.clone() } else { -&one };
        let got = img * img;
        if got != want {
            failure = Some(format!(
                "{}: image squares to {got}, expected {want}",
                m.generator_name(slot)
            ));
            break;
        }
    }
    report.push(Check::new("generator squares", failure));

    let mut failure = None;
    'pairs: for a in 0..n {
        for b in a + 1..n {
            let (x, y) = (&m.images[a], &m.images[b]);
            if x * y != -(y * x) {
                failure = Some(format!("{}, {}", m.generator_name(a), m.generator_name(b)));
                break 'pairs;
            }
        }
    }
    report.push(Check::new("anticommutation", failure));

    let mut r = rng(opts.seed);
    let mut failure = None;
    for i in 0..opts.samples {
        let g1 = random_multivector(m.domain, &mut r);
        let g2 = random_multivector(m.domain, &mut r);
        let lhs = m.apply(&(&g1 * &g2)).expect("domain sample");
        let rhs = &m.apply(&g1).expect("domain sample") * &m.apply(&g2).expect("domain sample");
        if lhs != rhs {
            failure = Some(format!("sample {i}: g1 = {g1}, g2 = {g2}"));
            break;
        }
    }
    report.push(Check::new("multiplicative", failure));

    let rows: Vec<Vec<Rational>> = m.blade_images().iter().map(coordinates).collect();
    let r = rank(&rows);
    let failure = (r != m.domain.dim())
        .then(|| format!("blade images have rank {r}, expected {}", m.domain.dim()));
    report.push(Check::new("injective", failure));

    match m.kind {
        Some(IsoKind::EvenSub) => {
            let bad = m
                .blade_images()
                .iter()
                .enumerate()
                .find(|(_, img)| img.grades().iter().any(|k| k % 2 == 1));
            let failure = bad.map(|(mask, img)| {
                format!(
                    "image of {} is {img}",
                    Blade::from_mask(mask as u32).literal(&m.domain)
                )
            });
            report.push(Check::new("even subalgebra", failure));
        }
        Some(IsoKind::Swap | IsoKind::Shift4) => {
            let (d, c) = (
                classify_real(m.domain.p(), m.domain.q()),
                classify_real(m.codomain.p(), m.codomain.q()),
            );
            let failure = (d != c).then(|| format!("{} is {d} but {} is {c}", m.domain, m.codomain));
            report.push(Check::new("classification agrees", failure));
        }
        None => {}
    }
    report
}
