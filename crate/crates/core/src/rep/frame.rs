//! Null vectors, the null-vector matrix frames of G(k,k) and G(k,k+1), and
//! conversion between multivectors and their coordinate matrices.

use std::sync::OnceLock;

use num_traits::Zero;

use crate::classify::BuildingBlock;
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::rep::matrix::BlockMatrix;
use crate::rep::ring::RingElement;
use crate::scalar::{rat, Rational};
use crate::signature::{Field, Signature};

/// `a = (e_j + f_j)/2`, `b = (e_j - f_j)/2` and the idempotents
/// `u_plus = ba`, `u_minus = ab`.
#[derive(Debug, Clone, PartialEq)]
pub struct NullVectors {
    pub a: Multivector,
    pub b: Multivector,
    pub u_plus: Multivector,
    pub u_minus: Multivector,
}

pub fn null_vectors(sig: Signature, j: usize) -> Result<NullVectors> {
    if j == 0 || j > sig.p().min(sig.q()) {
        return Err(Error::Index(format!("null vector pair {j} does not exist in {sig}")));
    }
    let half = rat(1, 2);
    let e = Multivector::e(sig, j)?;
    let f = Multivector::f(sig, j)?;
    let a = (&e + &f).scale(&half);
    let b = (&e - &f).scale(&half);
    let u_plus = &b * &a;
    let u_minus = &a * &b;
    Ok(NullVectors { a, b, u_plus, u_minus })
}

/// The `2^k x 2^k` matrix units of G(k,k) (or G(k,k+1) when `plus_one`).
///
/// Entry `(i, j)` is `A_i u_{1..k} B_j`, where `A_i` multiplies the `a_m` for
/// the bits `m` of `i` in ascending order and `B_j` multiplies the `b_m` for
/// the bits of `j` in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct NullFrame {
    k: usize,
    plus_one: bool,
    sig: Signature,
    entries: Vec<Multivector>,
}

pub const MAX_FRAME_K: usize = 5;

impl NullFrame {
    fn build(k: usize, plus_one: bool) -> NullFrame {
        let sig = Signature::raw(k, k + plus_one as usize, Field::Real);
        let pairs: Vec<NullVectors> = (1..=k).map(|j| null_vectors(sig, j).expect("j <= k")).collect();
        let size = 1usize << k;
        let mut u = Multivector::one(sig);
        for nv in &pairs {
            u = &u * &nv.u_plus;
        }
        let column: Vec<Multivector> = (0..size)
            .map(|i| {
                (0..k)
                    .filter(|m| i >> m & 1 == 1)
                    .fold(Multivector::one(sig), |acc, m| &acc * &pairs[m].a)
            })
            .collect();
        let row: Vec<Multivector> = (0..size)
            .map(|j| {
                (0..k)
                    .rev()
                    .filter(|m| j >> m & 1 == 1)
                    .fold(Multivector::one(sig), |acc, m| &acc * &pairs[m].b)
            })
            .collect();
        let left: Vec<Multivector> = column.iter().map(|c| c * &u).collect();
        let mut entries = Vec::with_capacity(size * size);
        for l in &left {
            for r in &row {
                entries.push(l * r);
            }
        }
        NullFrame { k, plus_one, sig, entries }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn plus_one(&self) -> bool {
        self.plus_one
    }

    /// G(k,k) or G(k,k+1).
    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn size(&self) -> usize {
        1 << self.k
    }

    pub fn get(&self, i: usize, j: usize) -> &Multivector {
        &self.entries[i * self.size() + j]
    }

    /// The central unit playing the role of `i` in G(k,k+1): its pseudoscalar.
    pub fn complex_unit(&self) -> Option<Multivector> {
        self.plus_one.then(|| Multivector::pseudoscalar(self.sig))
    }

    fn ring(&self) -> BuildingBlock {
        if self.plus_one {
            BuildingBlock::C
        } else {
            BuildingBlock::R
        }
    }
}

static FRAMES: [OnceLock<NullFrame>; 2 * MAX_FRAME_K] = [const { OnceLock::new() }; 2 * MAX_FRAME_K];

/// The cached null frame for `1 <= k <= 5`.
pub fn null_frame(k: usize, plus_one: bool) -> Result<&'static NullFrame> {
    if !(1..=MAX_FRAME_K).contains(&k) {
        return Err(Error::Index(format!("null frames exist for k in 1..={MAX_FRAME_K}, got {k}")));
    }
    let slot = 2 * (k - 1) + plus_one as usize;
    Ok(FRAMES[slot].get_or_init(|| NullFrame::build(k, plus_one)))
}

fn check_frame_sig(g: &Multivector, frame: &NullFrame) -> Result<()> {
    if g.sig() != frame.sig {
        return Err(Error::SignatureMismatch(g.sig(), frame.sig));
    }
    Ok(())
}

/// Coordinate matrix of `g`: real for G(k,k), complex for G(k,k+1).
pub fn to_matrix(g: &Multivector, frame: &NullFrame) -> Result<BlockMatrix> {
    check_frame_sig(g, frame)?;
    let n = frame.size();
    let scale = Rational::from_integer((1u64 << frame.k).into());
    let unit = frame.complex_unit();
    let mut out = BlockMatrix::zero(frame.ring(), n);
    for i in 0..n {
        let left = frame.get(0, i) * g;
        for j in 0..n {
            // E_0i g E_j0 = g_ij u, and <u>_0 = 2^-k
            let h = &left * frame.get(j, 0);
            let x = h.scalar_part() * &scale;
            let coords = match &unit {
                None => vec![x],
                Some(unit) => vec![x, -(&h * unit).scalar_part() * &scale],
            };
            out.set(i, j, RingElement::new(frame.ring(), coords)?)?;
        }
    }
    Ok(out)
}

/// Inverse of [`to_matrix`].
pub fn from_matrix(m: &BlockMatrix, frame: &NullFrame) -> Result<Multivector> {
    let n = frame.size();
    if m.size() != n {
        return Err(Error::Dim(format!("expected a {n}x{n} matrix, got {0}x{0}", m.size())));
    }
    if m.ring() != frame.ring() {
        return Err(Error::Dim(format!("expected entries in {}, got {}", frame.ring(), m.ring())));
    }
    let unit = frame.complex_unit();
    let mut g = Multivector::zero(frame.sig);
    for i in 0..n {
        for j in 0..n {
            let c = m.get(i, j).coords();
            let e = frame.get(i, j);
            if !c[0].is_zero() {
                g = &g + &e.scale(&c[0]);
            }
            if let (Some(unit), Some(y)) = (&unit, c.get(1)) {
                if !y.is_zero() {
                    g = &g + &(unit * e).scale(y);
                }
            }
        }
    }
    Ok(g)
}
