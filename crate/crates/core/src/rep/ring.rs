//! Arithmetic in the building-block rings R, ²R, C, ²C, Q, ²Q.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::classify::BuildingBlock;
use crate::error::{Error, Result};
use crate::scalar::Rational;

/// An element of a building-block ring, stored as real coordinates.
///
/// Layouts: R `[a]`, C `[a, b]` for `a + bi`, Q `[a, b, c, d]` for
/// `a + bi + cj + dk`; a double ring stores its two components back to back.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    block: BuildingBlock,
    coords: Vec<Rational>,
}

fn base_of(block: BuildingBlock) -> BuildingBlock {
    match block {
        BuildingBlock::R2 => BuildingBlock::R,
        BuildingBlock::C2 => BuildingBlock::C,
        BuildingBlock::Q2 => BuildingBlock::Q,
        b => b,
    }
}

fn mul_base(block: BuildingBlock, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    match block {
        BuildingBlock::R => vec![&x[0] * &y[0]],
        BuildingBlock::C => vec![
            &x[0] * &y[0] - &x[1] * &y[1],
            &x[0] * &y[1] + &x[1] * &y[0],
        ],
        BuildingBlock::Q => {
            let (a1, b1, c1, d1) = (&x[0], &x[1], &x[2], &x[3]);
            let (a2, b2, c2, d2) = (&y[0], &y[1], &y[2], &y[3]);
            vec![
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            ]
        }
        _ => unreachable!("doubles are split before multiplying"),
    }
}

impl RingElement {
    pub fn new(block: BuildingBlock, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != block.real_dim() {
            return Err(Error::Ring(format!(
                "{block} needs {} coordinates, got {}",
                block.real_dim(),
                coords.len()
            )));
        }
        Ok(RingElement { block, coords })
    }

    pub fn zero(block: BuildingBlock) -> Self {
        RingElement {
            block,
            coords: vec![Rational::zero(); block.real_dim()],
        }
    }

    pub fn one(block: BuildingBlock) -> Self {
        Self::real(block, Rational::one())
    }

    /// The real number `r` embedded in `block` (in both halves of a double).
    pub fn real(block: BuildingBlock, r: Rational) -> Self {
        let mut out = Self::zero(block);
        let half = base_of(block).real_dim();
        out.coords[0] = r.clone();
        if block.is_double() {
            out.coords[half] = r;
        }
        out
    }

    /// A double-ring element from its two components.
    pub fn pair(x: &RingElement, y: &RingElement) -> Result<Self> {
        let block = match x.block {
            BuildingBlock::R => BuildingBlock::R2,
            BuildingBlock::C => BuildingBlock::C2,
            BuildingBlock::Q => BuildingBlock::Q2,
            b => return Err(Error::Ring(format!("cannot double {b}"))),
        };
        x.check(y)?;
        let mut coords = x.coords.clone();
        coords.extend(y.coords.iter().cloned());
        Ok(RingElement { block, coords })
    }

    pub fn block(&self) -> BuildingBlock {
        self.block
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.block == other.block {
            Ok(())
        } else {
            Err(Error::Ring(format!("{} vs {}", self.block, other.block)))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(RingElement { block: self.block, coords })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let base = base_of(self.block);
        let coords = if self.block.is_double() {
            let h = base.real_dim();
            let mut c = mul_base(base, &self.coords[..h], &other.coords[..h]);
            c.extend(mul_base(base, &self.coords[h..], &other.coords[h..]));
            c
        } else {
            mul_base(base, &self.coords, &other.coords)
        };
        Ok(RingElement { block: self.block, coords })
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(&self) -> Self {
        RingElement {
            block: self.block,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        RingElement {
            block: self.block,
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    /// Complex or quaternion conjugation, componentwise on doubles.
    pub fn conj(&self) -> Self {
        let h = base_of(self.block).real_dim();
        let coords = self
            .coords
            .iter()
            .enumerate()
            .map(|(i, c)| if i % h == 0 { c.clone() } else { -c })
            .collect();
        RingElement { block: self.block, coords }
    }
}

/// Free-function form of the ring operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Mul,
    Conj,
}

/// `Conj` ignores `y` apart from the block check.
pub fn ring_arith(x: &RingElement, y: &RingElement, op: RingOp) -> Result<RingElement> {
    match op {
        RingOp::Add => x.try_add(y),
        RingOp::Mul => x.try_mul(y),
        RingOp::Conj => x.check(y).map(|_| x.conj()),
    }
}

fn rational_str(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_base(coords: &[Rational]) -> String {
    const UNITS: [&str; 4] = ["", "i", "j", "k"];
    let mut out = String::new();
    for (c, unit) in coords.iter().zip(UNITS) {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        if unit.is_empty() || !mag.is_one() {
            out.push_str(&rational_str(&mag));
        }
        out.push_str(unit);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.block.is_double() {
            let h = self.coords.len() / 2;
            write!(f, "({} | {})", fmt_base(&self.coords[..h]), fmt_base(&self.coords[h..]))
        } else {
            f.write_str(&fmt_base(&self.coords))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multivector::Multivector;
    use crate::scalar::int;
    use crate::signature::Signature;

    fn el(block: BuildingBlock, c: &[i64]) -> RingElement {
        RingElement::new(block, c.iter().map(|&v| int(v)).collect()).unwrap()
    }

    #[test]
    fn quaternion_units_match_g02() {
        use BuildingBlock::Q;
        let units = [el(Q, &[1, 0, 0, 0]), el(Q, &[0, 1, 0, 0]), el(Q, &[0, 0, 1, 0]), el(Q, &[0, 0, 0, 1])];
        // i = f1, j = f2, k = f12 in G(0,2)
        let s = Signature::new(0, 2).unwrap();
        let f1 = Multivector::f(s, 1).unwrap();
        let f2 = Multivector::f(s, 2).unwrap();
        let mv = [Multivector::one(s), f1.clone(), f2.clone(), &f1 * &f2];
        let coords = |m: &Multivector| {
            let c = mv.iter().map(|u| m.coefficient(u.terms().next().unwrap().0)).collect();
            RingElement::new(Q, c).unwrap()
        };
        for a in 0..4 {
            for b in 0..4 {
                let ring = units[a].try_mul(&units[b]).unwrap();
                assert_eq!(ring, coords(&(&mv[a] * &mv[b])), "unit {a} * unit {b}");
            }
        }
        assert_eq!(units[1].try_mul(&units[2]).unwrap(), units[3]);
    }

    #[test]
    fn doubles_are_componentwise() {
        use BuildingBlock::R2;
        assert_eq!(el(R2, &[1, 2]).try_mul(&el(R2, &[3, 4])).unwrap(), el(R2, &[3, 8]));
        assert_eq!(el(R2, &[1, 2]).to_string(), "(1 | 2)");
    }

    #[test]
    fn conj_and_errors() {
        use BuildingBlock::*;
        assert_eq!(el(R, &[5]).conj(), el(R, &[5]));
        assert_eq!(el(C, &[1, 2]).conj(), el(C, &[1, -2]));
        assert_eq!(el(Q2, &[1, 2, 3, 4, 5, 6, 7, 8]).conj(), el(Q2, &[1, -2, -3, -4, 5, -6, -7, -8]));
        assert!(matches!(el(R, &[1]).try_add(&el(C, &[1, 0])), Err(Error::Ring(_))));
        assert!(matches!(RingElement::new(Q, vec![int(1)]), Err(Error::Ring(_))));
        let q = el(Q, &[1, -2, 0, 1]);
        let norm = q.try_mul(&q.conj()).unwrap();
        assert_eq!(norm, el(Q, &[6, 0, 0, 0]));
    }

    #[test]
    fn display() {
        use BuildingBlock::*;
        assert_eq!(el(C, &[1, -2]).to_string(), "1-2i");
        assert_eq!(el(Q, &[0, 1, 0, -3]).to_string(), "i-3k");
        assert_eq!(el(Q, &[0, 0, 0, 0]).to_string(), "0");
        assert_eq!(RingElement::real(C2, int(2)).to_string(), "(2 | 2)");
    }
}
