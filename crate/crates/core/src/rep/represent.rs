//! Matrix representation of G(p,q) over its building-block ring.
//!
//! The route is fixed: Shift4 and Swap maps bring `(p,q)` to `-3 <= p-q <= 1`,
//! `min(p,q)` rounds of [`theorem2_block`] peel off hyperbolic pairs, and the
//! residual G(0,0), G(0,1), G(0,2), G(0,3) or G(1,0) lands in R, C, Q, ²Q or ²R.

use std::fmt;

use crate::blade::{reorder_is_odd, Blade};
use crate::classify::{classify_real, BuildingBlock, MatrixAlgebraShape};
use crate::error::{Error, Result};
use crate::iso::{build_iso, GeneratorMap, IsoKind};
use crate::multivector::Multivector;
use crate::rep::matrix::BlockMatrix;
use crate::rep::ring::RingElement;
use crate::scalar::{int, Scalar};
use crate::signature::{Field, Signature};

/// Splits `g` in G(p+1,q+1) on its highest e and f as
/// `g0 + g1 e + g2 f + g3 e f` and returns
/// `[[g0 + g3, g1 - g2], [g1^ + g2^, g0^ - g3^]]` over G(p,q), where `^` is
/// the grade inversion.
pub fn theorem2_block<S: Scalar>(g: &Multivector<S>) -> Result<[[Multivector<S>; 2]; 2]> {
    let sig = g.sig();
    let (p, q) = (sig.p(), sig.q());
    if p == 0 || q == 0 {
        return Err(Error::Signature(format!("{sig} has no e/f pair to split off")));
    }
    let sub = Signature::raw(p - 1, q - 1, sig.field());
    let e_bit = 1u32 << (p - 1);
    let f_bit = 1u32 << (p + q - 1);
    let low_e = e_bit - 1;
    let mut parts: [Vec<(Blade, S)>; 4] = Default::default();
    for (blade, c) in g.terms() {
        let mask = blade.mask();
        let ef = mask & (e_bit | f_bit);
        let rest = mask & !ef;
        // blade = ±(rest)(ef); f-slots of rest move down past the removed e
        let sub_mask = (rest & low_e) | ((rest & !low_e) >> 1);
        let c = if reorder_is_odd(rest, ef) { -c.clone() } else { c.clone() };
        let which = (mask & e_bit != 0) as usize + 2 * (mask & f_bit != 0) as usize;
        parts[which].push((Blade::from_mask(sub_mask), c));
    }
    let [g0, g1, g2, g3] = parts.map(|terms| Multivector::from_terms(sub, terms).expect("sub-blades fit"));
    Ok([
        [&g0 + &g3, &g1 - &g2],
        [&g1.inversion() + &g2.inversion(), &g0.inversion() - &g3.inversion()],
    ])
}

/// One step of the reduction route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RouteStep {
    Shift4 { from: Signature, to: Signature },
    Swap { from: Signature, to: Signature },
    Theorem2 { from: Signature, levels: usize, to: Signature },
    Base { sig: Signature, block: BuildingBlock },
}

impl fmt::Display for RouteStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RouteStep::Shift4 { from, to } => write!(f, "shift4: {from} -> {to}"),
            RouteStep::Swap { from, to } => write!(f, "swap: {from} -> {to}"),
            RouteStep::Theorem2 { from, levels, to } => {
                write!(f, "theorem2 x{levels}: {from} -> M{}({to})", 1 << levels)
            }
            RouteStep::Base { sig, block } => write!(f, "base: {sig} = {block}"),
        }
    }
}

/// A fixed, logged representation route for one signature.
#[derive(Debug, Clone)]
pub struct Representer {
    sig: Signature,
    maps: Vec<GeneratorMap>,
    levels: usize,
    residual: Signature,
    route: Vec<RouteStep>,
}

const MAX_REDUCTIONS: usize = 16;

fn ring_el(block: BuildingBlock, c: &[i64]) -> RingElement {
    RingElement::new(block, c.iter().map(|&v| int(v)).collect()).expect("fixed layout")
}

/// Images of the residual generators.
fn base_generators(residual: Signature) -> (BuildingBlock, Vec<RingElement>) {
    use BuildingBlock::*;
    match (residual.p(), residual.q()) {
        (0, 0) => (R, vec![]),
        (0, 1) => (C, vec![ring_el(C, &[0, 1])]),
        (0, 2) => (Q, vec![ring_el(Q, &[0, 1, 0, 0]), ring_el(Q, &[0, 0, 1, 0])]),
        // first component: where f123 acts as +1
        (0, 3) => (
            Q2,
            vec![
                ring_el(Q2, &[0, 1, 0, 0, 0, 1, 0, 0]),
                ring_el(Q2, &[0, 0, 1, 0, 0, 0, 1, 0]),
                ring_el(Q2, &[0, 0, 0, -1, 0, 0, 0, 1]),
            ],
        ),
        (1, 0) => (R2, vec![ring_el(R2, &[1, -1])]),
        _ => unreachable!("residual {residual} outside the base cases"),
    }
}

impl Representer {
    pub fn new(sig: Signature) -> Result<Self> {
        if sig.field() == Field::Complex {
            return Err(Error::Signature(format!("{sig}: matrix representations are built for real algebras")));
        }
        let mut maps = Vec::new();
        let mut route = Vec::new();
        let (mut p, mut q) = (sig.p(), sig.q());
        for _ in 0..MAX_REDUCTIONS {
            let from = Signature::raw(p, q, Field::Real);
            if q >= p + 4 {
                let m = build_iso(IsoKind::Shift4, p + 4, q - 4)?;
                route.push(RouteStep::Shift4 { from, to: m.codomain() });
                (p, q) = (p + 4, q - 4);
                maps.push(m);
            } else if p >= q + 2 {
                let m = build_iso(IsoKind::Swap, q + 1, p - 1)?;
                route.push(RouteStep::Swap { from, to: m.codomain() });
                (p, q) = (q + 1, p - 1);
                maps.push(m);
            } else {
                break;
            }
        }
        let levels = p.min(q);
        let residual = Signature::raw(p - levels, q - levels, Field::Real);
        if levels > 0 {
            route.push(RouteStep::Theorem2 {
                from: Signature::raw(p, q, Field::Real),
                levels,
                to: residual,
            });
        }
        route.push(RouteStep::Base {
            sig: residual,
            block: base_generators(residual).0,
        });
        Ok(Representer {
            sig,
            maps,
            levels,
            residual,
            route,
        })
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn route(&self) -> &[RouteStep] {
        &self.route
    }

    pub fn route_log(&self) -> String {
        self.route.iter().map(|s| format!("{s}\n")).collect()
    }

    pub fn shape(&self) -> MatrixAlgebraShape {
        MatrixAlgebraShape {
            block: base_generators(self.residual).0,
            size: 1 << self.levels,
        }
    }

    pub fn represent(&self, g: &Multivector) -> Result<BlockMatrix> {
        if g.sig() != self.sig {
            return Err(Error::SignatureMismatch(g.sig(), self.sig));
        }
        let mut g = g.clone();
        for m in &self.maps {
            g = m.apply(&g)?;
        }
        let (block, gens) = base_generators(self.residual);
        Ok(self.recurse(&g, self.levels, block, &gens))
    }

    fn recurse(&self, g: &Multivector, levels: usize, block: BuildingBlock, gens: &[RingElement]) -> BlockMatrix {
        if levels == 0 {
            let mut acc = RingElement::zero(block);
            for (blade, c) in g.terms() {
                let img = blade.slots().fold(RingElement::one(block), |x, s| {
                    x.try_mul(&gens[s]).expect("one ring")
                });
                acc = acc.try_add(&img.scale(c)).expect("one ring");
            }
            return BlockMatrix::new(block, 1, vec![acc]).expect("1x1");
        }
        let blocks = theorem2_block(g).expect("levels <= min(p,q)");
        let [[a, b], [c, d]] = blocks.map(|row| row.map(|x| self.recurse(&x, levels - 1, block, gens)));
        BlockMatrix::from_blocks([[a, b], [c, d]]).expect("uniform blocks")
    }
}

/// Matrix of `g` along the fixed route for its signature.
pub fn represent(g: &Multivector) -> Result<BlockMatrix> {
    let rep = Representer::new(g.sig())?;
    debug_assert_eq!(rep.shape(), classify_real(g.sig().p(), g.sig().q()));
    rep.represent(g)
}
