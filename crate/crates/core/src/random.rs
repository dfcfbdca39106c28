//! Reproducible random inputs for batch checks. Item `k` of a batch draws
//! from stream `k` of a ChaCha8 generator seeded with the batch seed, so each
//! item is fixed by `(seed, k)` alone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::Ket;
use crate::scalar::C;

pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Point drawn uniformly from the unit sphere in ℝⁿ (rejection from the cube).
pub fn unit_vector<const N: usize>(rng: &mut impl Rng) -> [f64; N] {
    loop {
        let v: [f64; N] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let n2: f64 = v.iter().map(|x| x * x).sum();
        if n2 > 1e-4 && n2 <= 1.0 {
            let n = n2.sqrt();
            return v.map(|x| x / n);
        }
    }
}

/// Normalized state of dimension 4, uniformly distributed on the unit sphere.
pub fn random_ket4(seed: u64, index: u64) -> Ket<f64> {
    let v = unit_vector::<8>(&mut stream(seed, index));
    Ket::new((0..4).map(|k| C::new(v[2 * k], v[2 * k + 1])).collect())
}

/// Unit quaternion (u₀, u₁, u₂, u₃).
pub fn random_quaternion(seed: u64, index: u64) -> [f64; 4] {
    unit_vector::<4>(&mut stream(seed, index))
}

/// Complex pair (α, α′) with |α|² + |α′|² = 1.
pub fn random_mixing(seed: u64, index: u64) -> (C<f64>, C<f64>) {
    let v = unit_vector::<4>(&mut stream(seed, index));
    (C::new(v[0], v[1]), C::new(v[2], v[3]))
}
