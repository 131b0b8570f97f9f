//! Seeded random sampling shared by the randomized estimators and tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A strictly positive vector `exp(u)` with `u_i` uniform in `[-spread, spread]`.
pub fn positive_vector<R: Rng>(rng: &mut R, n: usize, spread: f64) -> Vec<f64> {
    (0..n)
        .map(|_| rng.random_range(-spread..=spread).exp())
        .collect()
}

/// A point of the open standard simplex (coordinates sum to one).
pub fn simplex_point<R: Rng>(rng: &mut R, n: usize, spread: f64) -> Vec<f64> {
    let mut v = positive_vector(rng, n, spread);
    let s: f64 = v.iter().sum();
    v.iter_mut().for_each(|x| *x /= s);
    v
}
