//! Basis blades as bitmasks over generator slots.

use std::cmp::Ordering;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::signature::Signature;

/// A basis blade: the product of the generators whose slot bits are set,
/// taken in ascending slot order (e-block before f-block).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Blade(u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_mask(mask: u32) -> Self {
        Blade(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_scalar(self) -> bool {
        self.0 == 0
    }

    /// Single generator at `slot`.
    pub fn generator(slot: usize) -> Self {
        Blade(1 << slot)
    }

    /// Set slots in ascending order.
    pub fn slots(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let s = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(s)
            }
        })
    }

    /// Builds `e_{es} f_{fs}` from 1-based index lists, each strictly ascending.
    pub fn from_indices(sig: &Signature, es: &[usize], fs: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for (group, idxs) in [("e", es), ("f", fs)] {
            if idxs.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Index(format!(
                    "{group}-indices must be strictly ascending: {idxs:?}"
                )));
            }
            for &i in idxs {
                let slot = if group == "e" { sig.e_slot(i) } else { sig.f_slot(i) };
                let slot = slot.ok_or_else(|| {
                    Error::Index(format!("{group}{i} is not a generator of {sig}"))
                })?;
                mask |= 1 << slot;
            }
        }
        Ok(Blade(mask))
    }

    /// 1-based e- and f-indices of this blade.
    pub fn indices(self, sig: &Signature) -> (Vec<usize>, Vec<usize>) {
        let p = sig.p();
        let (es, fs): (Vec<usize>, Vec<usize>) = self.slots().partition(|&s| s < p);
        (
            es.into_iter().map(|s| s + 1).collect(),
            fs.into_iter().map(|s| s - p + 1).collect(),
        )
    }

    /// Canonical literal, e.g. `e12f3`, `f[10]`, or `1` for the scalar blade.
    pub fn literal(self, sig: &Signature) -> String {
        if self.is_scalar() {
            return "1".to_string();
        }
        let (es, fs) = self.indices(sig);
        let mut out = String::new();
        for (prefix, idxs) in [('e', es), ('f', fs)] {
            if idxs.is_empty() {
                continue;
            }
            out.push(prefix);
            for i in idxs {
                if i < 10 {
                    write!(out, "{i}").unwrap();
                } else {
                    write!(out, "[{i}]").unwrap();
                }
            }
        }
        out
    }
}

/// Grade first, then lexicographic on the ascending slot lists, so
/// `1 < e1 < .. < ep < f1 < .. < e12 < .. < f12 ..` as in the standard basis.
impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // lowest differing slot belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Parity of transpositions needed to sort the concatenation `a ++ b`.
pub fn reorder_is_odd(a: u32, b: u32) -> bool {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    swaps & 1 == 1
}

/// Product of two basis blades: `(negated, result)`.
pub fn blade_product(sig: &Signature, a: Blade, b: Blade) -> (bool, Blade) {
    let shared_f = (a.0 & b.0 & sig.f_mask()).count_ones();
    let negated = reorder_is_odd(a.0, b.0) ^ (shared_f & 1 == 1);
    (negated, Blade(a.0 ^ b.0))
}

/// Number of transpositions to reverse a grade-k blade, mod 2.
pub fn reverse_is_odd(k: usize) -> bool {
    (k * k.saturating_sub(1) / 2) % 2 == 1
}
