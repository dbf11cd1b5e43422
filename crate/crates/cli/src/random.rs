//! Seeded random inputs: unitaries, words and Laurent sections.

use hardy_cover_core::annulus::SectionSpec;
use hardy_cover_core::{Alphabet, CMatrix, Letter, Word, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian(rng: &mut SeededRng) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Gram–Schmidt of a complex Gaussian matrix.
pub fn random_unitary(rng: &mut SeededRng, m: usize) -> CMatrix {
    let rows: Vec<Vec<C64>> = (0..m).map(|_| (0..m).map(|_| gaussian(rng)).collect()).collect();
    CMatrix::from_rows(&rows).orthonormalize_columns()
}

pub fn random_phase_diagonal(rng: &mut SeededRng, m: usize) -> CMatrix {
    let phases: Vec<C64> =
        (0..m).map(|_| C64::from_polar(1.0, rng.random_range(-std::f64::consts::PI..std::f64::consts::PI))).collect();
    CMatrix::diagonal(&phases)
}

/// `(W D₁ W*, W D₂ W*)` for a random unitary `W` and random phase diagonals.
pub fn random_commuting_pair(rng: &mut SeededRng, m: usize) -> (CMatrix, CMatrix) {
    let w = random_unitary(rng, m);
    let p = w.matmul(&random_phase_diagonal(rng, m)).matmul(&w.adjoint());
    let q = w.matmul(&random_phase_diagonal(rng, m)).matmul(&w.adjoint());
    (p, q)
}

/// A freely reduced word with at most `max_len` letters.
pub fn random_word(rng: &mut SeededRng, alphabet: Alphabet, max_len: usize) -> Word {
    let rank = alphabet.rank();
    if rank == 0 {
        return Word::identity(alphabet);
    }
    let len = rng.random_range(0..=max_len);
    let letters = (0..len).map(|_| Letter::new(rng.random_range(0..rank), rng.random_bool(0.5)));
    Word::new(alphabet, letters).expect("generators in range")
}

/// Coefficients uniform in the unit square for `|d| ≤ degree`.
pub fn random_section(rng: &mut SeededRng, exponents: &[f64], degree: usize) -> SectionSpec {
    let coeffs = (0..2 * degree + 1)
        .map(|_| exponents.iter().map(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect())
        .collect();
    SectionSpec::new(exponents.to_vec(), coeffs).expect("consistent shapes")
}
