use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on `p + q`; a 4096-dimensional algebra.
pub const DEFAULT_DIM_CAP: usize = 12;

/// Hard limit imposed by the `u32` blade mask.
pub const MAX_DIM: usize = 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    Real,
    Complex,
}

/// The algebra G(p,q): `p` generators squaring to +1, `q` squaring to -1.
///
/// Generator slots `0..p` hold `e1..ep`, slots `p..p+q` hold `f1..fq`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    p: usize,
    q: usize,
    field: Field,
}

impl Signature {
    /// Real G(p,q) under the default dimension cap.
    pub fn new(p: usize, q: usize) -> Result<Self> {
        Self::with_cap(p, q, Field::Real, DEFAULT_DIM_CAP)
    }

    pub fn complex(p: usize, q: usize) -> Result<Self> {
        Self::with_cap(p, q, Field::Complex, DEFAULT_DIM_CAP)
    }

    pub fn with_cap(p: usize, q: usize, field: Field, cap: usize) -> Result<Self> {
        let cap = cap.min(MAX_DIM);
        if p + q > cap {
            return Err(Error::Signature(format!(
                "p + q = {} exceeds the dimension cap {cap}",
                p + q
            )));
        }
        Ok(Signature { p, q, field })
    }

    /// Unchecked constructor for internal use where `p + q` is known small.
    pub(crate) fn raw(p: usize, q: usize, field: Field) -> Self {
        debug_assert!(p + q <= MAX_DIM);
        Signature { p, q, field }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Number of basis blades, `2^n`.
    pub fn dim(&self) -> usize {
        1usize << self.n()
    }

    /// Same (p,q) over another field.
    pub fn with_field(&self, field: Field) -> Self {
        Signature { field, ..*self }
    }

    /// Slot of `e_i` (1-based), if present.
    pub fn e_slot(&self, i: usize) -> Option<usize> {
        (1..=self.p).contains(&i).then(|| i - 1)
    }

    /// Slot of `f_j` (1-based), if present.
    pub fn f_slot(&self, j: usize) -> Option<usize> {
        (1..=self.q).contains(&j).then(|| self.p + j - 1)
    }

    /// Mask of all blade bits.
    pub fn full_mask(&self) -> u32 {
        if self.n() == 32 {
            u32::MAX
        } else {
            (1u32 << self.n()) - 1
        }
    }

    /// Mask of the f-slots, whose generators square to -1.
    pub fn f_mask(&self) -> u32 {
        self.full_mask() & !((1u32 << self.p) - 1)
    }

    /// Square of generator at `slot`: +1 for e, -1 for f.
    pub fn generator_square(&self, slot: usize) -> i8 {
        if slot < self.p {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.field {
            Field::Real => write!(f, "G({},{})", self.p, self.q),
            Field::Complex => write!(f, "G({},{})(C)", self.p, self.q),
        }
    }
}
