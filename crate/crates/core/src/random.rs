//! Seeded sampling of multivectors for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blade::Blade;
use crate::multivector::Multivector;
use crate::scalar::int;
use crate::signature::Signature;

/// Coefficients are drawn from `-COEFF_RANGE..=COEFF_RANGE`.
pub const COEFF_RANGE: i64 = 9;

/// Deterministic generator used by all sampled checks.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random integer coefficient on every blade of `sig`.
pub fn random_multivector<R: Rng>(sig: Signature, rng: &mut R) -> Multivector {
    let terms = (0..sig.dim() as u32)
        .map(|m| (Blade::from_mask(m), int(rng.random_range(-COEFF_RANGE..=COEFF_RANGE))))
        .collect::<Vec<_>>();
    Multivector::from_terms(sig, terms).expect("masks within signature")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_samples_repeat() {
        let sig = Signature::new(2, 1).unwrap();
        let a = random_multivector(sig, &mut rng(7));
        let b = random_multivector(sig, &mut rng(7));
        assert_eq!(a, b);
        assert!(a.len() <= 8);
    }
}
