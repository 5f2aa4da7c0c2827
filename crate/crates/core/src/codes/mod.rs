//! Reed-Muller families over Z2 and Z4, quadratic forms, cosets of
//! ZRM(1,m), Lee and Hamming distances, and codebook metadata.

pub mod codebook;
pub mod coset;
mod packed;
pub mod quadform;
pub mod reed_muller;

pub use codebook::{
    Bound, CodeBook, CodeMeta, DistanceReport, PaprReport, Rate, META_SCHEMA_VERSION,
};
pub use coset::{
    canonical_coset_rep, coset_min_lee_weight, quadratic_coset_min_weight, zrm1_contains,
    CosetUnion, SampledDistance,
};
pub use packed::min_distance_exhaustive;
pub use quadform::{coset_papr_bound_check, quad_form_word, CosetPaprCheck, QuadForm};
pub use reed_muller::{log2_cardinality, Family, LinearCode};

use crate::error::{Error, Result};
use crate::gbf::Word;

/// Lee distance for quaternary words, Hamming distance for binary words.
pub fn distance(u: &Word, v: &Word) -> Result<u32> {
    if u.alphabet() != v.alphabet() {
        return Err(Error::WrongAlphabet {
            expected: if u.is_quaternary() {
                "quaternary"
            } else {
                "binary"
            },
        });
    }
    Ok(u.sub(v)?.weight())
}

/// Hamming distance, for words over either alphabet.
pub fn hamming_distance(u: &Word, v: &Word) -> Result<u32> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(u.values()
        .iter()
        .zip(v.values())
        .filter(|(a, b)| a != b)
        .count() as u32)
}

/// Upper bound on the rate of a quaternary constant-amplitude code of length
/// `2^m` with minimum Lee distance at least `2^floor(m/2)`:
/// `(1/2^(m-1)) sum_{j <= ceil(m/2)} C(m, j)`, as `(numerator, 2^(m-1))`.
pub fn constant_amplitude_rate_bound(m: u32) -> (u64, u64) {
    let mut c: u64 = 1;
    let mut sum = 1;
    for j in 1..=m.div_ceil(2) as u64 {
        c = c * (m as u64 - j + 1) / j;
        sum += c;
    }
    (sum, 1 << (m.max(1) - 1))
}
