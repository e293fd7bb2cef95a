//! Seeded random elements for sampled checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::{Rational, Scalar};

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_SAMPLES: usize = 200;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Scalars that can be drawn at random for sampled checks.
pub trait Sample: Scalar {
    /// A "generic" scalar: small-height rationals, or uniform floats in
    /// `[-1, 1]`.
    fn sample(rng: &mut impl Rng) -> Self;
}

impl Sample for f64 {
    fn sample(rng: &mut impl Rng) -> Self {
        rng.gen_range(-1.0..=1.0)
    }
}

impl Sample for Rational {
    fn sample(rng: &mut impl Rng) -> Self {
        let num = rng.gen_range(-12i64..=12);
        let den = rng.gen_range(1i64..=7);
        Rational::from_ratio(num, den)
    }
}

pub fn sample_coords<S: Sample>(dim: usize, rng: &mut impl Rng) -> Vec<S> {
    (0..dim).map(|_| S::sample(rng)).collect()
}

/// Positive rational `num/den` with `num` in `1..=max_num`, `den` in `1..=max_den`.
pub fn positive_rational(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Rational {
    Rational::from_ratio(rng.gen_range(1..=max_num), rng.gen_range(1..=max_den))
}

/// Nonzero rational in `[-max, max]` with denominators up to `max_den`.
pub fn nonzero_rational(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Rational {
    let v = positive_rational(rng, max_num, max_den);
    if rng.gen_bool(0.5) {
        -v
    } else {
        v
    }
}
