//! Cosets of ZRM(1,m) and unions of them.
//!
//! ZRM(1,m) is every constant over Z4 plus twice every affine binary
//! function, so two words share a coset iff their difference has an ANF
//! with only a constant term and even linear terms.
//!
//! The minimum Lee weight of a coset `f + ZRM(1,m)` is read off the
//! spectrum: with `lee(z) = 1 - Re(i^z)` and `c = e + 2 u.x`,
//! `lee(f + c) = 2^m - Re(i^e f^(u))`, so the minimum is
//! `2^m - max_u max(|Re f^(u)|, |Im f^(u)|)`. For a union of cosets of a
//! common linear code, the minimum distance is the smaller of the base
//! code's distance `2^m` and the minimum weight over cosets of
//! representative differences, which is exact by linearity of the base.

use std::collections::{HashMap, HashSet};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::SymMatrix;
use crate::error::{Error, Result};
use crate::gbf::{Alphabet, Gbf, Word};
use crate::spectral::{papr, PaprValue, SpectrumScratch};

use super::quadform::quad_form_word;
use super::reed_muller::LinearCode;

/// `true` iff the quaternary word lies in ZRM(1,m).
pub fn zrm1_contains(w: &Word) -> bool {
    if !w.is_quaternary() {
        return false;
    }
    Gbf::from_word(w)
        .terms()
        .all(|(mask, c)| mask == 0 || (mask.count_ones() == 1 && c % 2 == 0))
}

/// ANF coefficients of the canonical member of `w + ZRM(1,m)`: constant
/// term zero and linear coefficients reduced mod 2.
fn coset_key(w: &Word) -> Vec<u8> {
    let mut coeffs = Gbf::from_word(w).coefficients().to_vec();
    coeffs[0] = 0;
    for j in 0..w.m() {
        coeffs[1 << j] %= 2;
    }
    coeffs
}

/// The canonical representative of `w + ZRM(1,m)`.
pub fn canonical_coset_rep(w: &Word) -> Result<Word> {
    w.require(Alphabet::Quaternary)?;
    Ok(Gbf::from_coefficients(Alphabet::Quaternary, coset_key(w))?.to_word())
}

/// Minimum Lee weight over the coset `w + ZRM(1,m)`.
pub fn coset_min_lee_weight(w: &Word) -> Result<u32> {
    w.require(Alphabet::Quaternary)?;
    let mut scratch = SpectrumScratch::new(w.m());
    Ok(min_weight_with(&mut scratch, w.values()))
}

fn min_weight_with(scratch: &mut SpectrumScratch, values: &[u8]) -> u32 {
    scratch.load_z4(values);
    (values.len() as i64 - scratch.max_component()) as u32
}

/// Outcome of a distance scan over a sample of representative pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampledDistance {
    pub pairs_checked: u64,
    pub distinct_differences: u64,
    /// Smallest exact coset minimum weight met, capped by the base distance.
    pub min_weight: u32,
}

/// A union of distinct cosets `rep + ZRM(1,m)`.
#[derive(Debug, Clone)]
pub struct CosetUnion {
    m: u32,
    base: LinearCode,
    reps: Vec<Word>,
    forms: Option<Vec<SymMatrix>>,
}

impl CosetUnion {
    /// Checks the representatives lie in pairwise distinct cosets.
    pub fn new(m: u32, reps: Vec<Word>) -> Result<CosetUnion> {
        let base = LinearCode::zrm(1, m)?;
        let mut seen: HashMap<Vec<u8>, usize> = HashMap::with_capacity(reps.len());
        for (i, r) in reps.iter().enumerate() {
            r.require(Alphabet::Quaternary)?;
            if r.m() != m {
                return Err(Error::LengthMismatch {
                    left: 1 << m,
                    right: r.len(),
                });
            }
            if let Some(&first) = seen.get(&coset_key(r)) {
                return Err(Error::DuplicateCoset { first, second: i });
            }
            seen.insert(coset_key(r), i);
        }
        Ok(CosetUnion {
            m,
            base,
            reps,
            forms: None,
        })
    }

    /// Union of the quadratic-form cosets `Q_B + ZRM(1,m)`. Distinct
    /// matrices give distinct cosets, since a nonzero `Q_B` has an odd
    /// linear or a doubled quadratic term.
    pub fn from_forms(m: u32, forms: Vec<SymMatrix>) -> Result<CosetUnion> {
        let base = LinearCode::zrm(1, m)?;
        let mut seen: HashMap<u64, usize> = HashMap::with_capacity(forms.len());
        for (i, b) in forms.iter().enumerate() {
            if b.dim() != m as usize {
                return Err(Error::Precondition {
                    what: "coset union of quadratic forms",
                    requirement: format!("{m}x{m} matrices, got dimension {}", b.dim()),
                });
            }
            if let Some(first) = seen.insert(b.lex_key(), i) {
                return Err(Error::DuplicateCoset { first, second: i });
            }
        }
        let reps = forms.iter().map(quad_form_word).collect();
        Ok(CosetUnion {
            m,
            base,
            reps,
            forms: Some(forms),
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn base(&self) -> &LinearCode {
        &self.base
    }

    pub fn reps(&self) -> &[Word] {
        &self.reps
    }

    /// The matrices behind the representatives, when built from forms.
    pub fn forms(&self) -> Option<&[SymMatrix]> {
        self.forms.as_deref()
    }

    pub fn coset_count(&self) -> usize {
        self.reps.len()
    }

    /// `|reps| * 2^(m+2)`.
    pub fn size(&self) -> u128 {
        (self.reps.len() as u128) << (self.m + 2)
    }

    pub fn contains(&self, w: &Word) -> bool {
        if !w.is_quaternary() || w.m() != self.m {
            return false;
        }
        let key = coset_key(w);
        self.reps.iter().any(|r| coset_key(r) == key)
    }

    /// Every word, coset by coset.
    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        self.reps.iter().flat_map(move |r| {
            self.base
                .words()
                .map(move |c| r.add(&c).expect("same length"))
        })
    }

    /// Exact minimum Lee distance.
    pub fn min_lee_distance(&self) -> Result<u32> {
        let base_distance = 1u32 << self.m;
        let n = self.reps.len() as u64;
        let pairs = n * n.saturating_sub(1) / 2;
        if pairs > 1 << 36 {
            return Err(Error::TooLarge {
                what: "pairwise coset differences",
                log2_size: 64 - pairs.leading_zeros(),
            });
        }
        let mut scratch = SpectrumScratch::new(self.m);
        let mut best = base_distance;
        match &self.forms {
            Some(forms) => {
                for key in difference_keys(self.m as usize, forms) {
                    let b = SymMatrix::from_lex_key(self.m as usize, key);
                    let w = quad_form_word(&b);
                    best = best.min(min_weight_with(&mut scratch, w.values()));
                }
            }
            None => {
                let mut seen: HashSet<Vec<u8>> = HashSet::new();
                for i in 0..self.reps.len() {
                    for j in (i + 1)..self.reps.len() {
                        let d = self.reps[i].sub(&self.reps[j])?;
                        if seen.insert(coset_key(&d)) {
                            best = best.min(min_weight_with(&mut scratch, d.values()));
                        }
                    }
                }
            }
        }
        Ok(best)
    }

    /// Exact coset minimum weights of the differences of `samples` random
    /// pairs of distinct representatives.
    pub fn sampled_min_lee_distance<R: Rng + ?Sized>(
        &self,
        samples: u64,
        rng: &mut R,
    ) -> Result<SampledDistance> {
        let n = self.reps.len();
        if n < 2 {
            return Err(Error::Precondition {
                what: "sampled coset distance",
                requirement: "at least two cosets".into(),
            });
        }
        let mut scratch = SpectrumScratch::new(self.m);
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut best = 1u32 << self.m;
        for _ in 0..samples {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let d = self.reps[i].sub(&self.reps[j])?;
            if seen.insert(coset_key(&d)) {
                best = best.min(min_weight_with(&mut scratch, d.values()));
            }
        }
        Ok(SampledDistance {
            pairs_checked: samples,
            distinct_differences: seen.len() as u64,
            min_weight: best,
        })
    }

    /// Largest PAPR over the code; a coset shares the PAPR of its representative.
    pub fn max_papr(&self) -> PaprValue {
        let n = 1u64 << self.m;
        let mut scratch = SpectrumScratch::new(self.m);
        let peak = self
            .reps
            .iter()
            .map(|r| {
                scratch.load_z4(r.values());
                scratch.max_norm_sqr() as u64
            })
            .max()
            .unwrap_or(n);
        PaprValue::new(peak, n)
    }

    /// PAPR of every word of coset `index`, exhaustively.
    pub fn coset_paprs(&self, index: usize) -> Vec<PaprValue> {
        let r = &self.reps[index];
        self.base
            .words()
            .map(|c| papr(&r.add(&c).expect("same length")))
            .collect()
    }
}

/// Least coset minimum weight over every nonzero quadratic form
/// `Q_B + ZRM(1,m)`. Any union of quadratic-form cosets has its differences
/// among these, so this bounds its minimum Lee distance from below.
pub fn quadratic_coset_min_weight(m: u32) -> Result<u32> {
    let free = SymMatrix::free_entries(m as usize) as u32;
    if free > 28 {
        return Err(Error::TooLarge {
            what: "quadratic coset scan",
            log2_size: free,
        });
    }
    let mut scratch = SpectrumScratch::new(m);
    let mut best = u32::MAX;
    for key in 1u64..(1 << free) {
        let w = quad_form_word(&SymMatrix::from_lex_key(m as usize, key));
        best = best.min(min_weight_with(&mut scratch, w.values()));
    }
    Ok(best)
}

/// Distinct lex keys of `B_i xor B_j` over pairs `i < j`.
fn difference_keys(m: usize, forms: &[SymMatrix]) -> Vec<u64> {
    let keys: Vec<u64> = forms.iter().map(SymMatrix::lex_key).collect();
    let free = SymMatrix::free_entries(m);
    if free <= 30 {
        let mut bits = vec![0u64; ((1usize << free) / 64).max(1)];
        for (i, &a) in keys.iter().enumerate() {
            for &b in &keys[i + 1..] {
                let d = (a ^ b) as usize;
                bits[d / 64] |= 1 << (d % 64);
            }
        }
        let mut out = Vec::new();
        for (limb, &word) in bits.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push((limb * 64 + b) as u64);
                w &= w - 1;
            }
        }
        out
    } else {
        let mut set = HashSet::new();
        for (i, &a) in keys.iter().enumerate() {
            for &b in &keys[i + 1..] {
                set.insert(a ^ b);
            }
        }
        let mut out: Vec<u64> = set.into_iter().collect();
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::packed::min_distance_exhaustive;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn brute_coset_min(w: &Word) -> u32 {
        let base = LinearCode::zrm(1, w.m()).unwrap();
        base.words()
            .map(|c| w.add(&c).unwrap().weight())
            .min()
            .unwrap()
    }

    #[test]
    fn membership() {
        let zrm = LinearCode::zrm(1, 3).unwrap();
        assert!(zrm.words().all(|w| zrm1_contains(&w)));
        assert!(!zrm1_contains(&Word::z4(vec![0, 1, 0, 1]).unwrap()));
        assert!(!zrm1_contains(&Word::binary(vec![0, 0]).unwrap()));
    }

    #[test]
    fn spectral_coset_weight_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for m in 1..=5u32 {
            for _ in 0..40 {
                let w = Word::random(Alphabet::Quaternary, m, &mut rng);
                assert_eq!(coset_min_lee_weight(&w).unwrap(), brute_coset_min(&w));
            }
        }
    }

    #[test]
    fn canonical_rep_same_coset() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let zrm = LinearCode::zrm(1, 4).unwrap();
        for _ in 0..50 {
            let w = Word::random(Alphabet::Quaternary, 4, &mut rng);
            let c = zrm.word_at(rng.gen_range(0..64));
            let shifted = w.add(&c).unwrap();
            let r1 = canonical_coset_rep(&w).unwrap();
            assert_eq!(r1, canonical_coset_rep(&shifted).unwrap());
            assert!(zrm1_contains(&w.sub(&r1).unwrap()));
        }
    }

    #[test]
    fn single_full_rank_coset_m4() {
        let code = CosetUnion::from_forms(4, vec![SymMatrix::identity(4)]).unwrap();
        let words: Vec<Word> = code.words().collect();
        assert_eq!(words.len(), 64);
        assert_eq!(code.size(), 64);
        assert_eq!(min_distance_exhaustive(&words), Ok(16));
        assert_eq!(code.min_lee_distance(), Ok(16));
        assert!(code.max_papr().is_one());
    }

    #[test]
    fn union_distance_matches_all_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let all: Vec<SymMatrix> = SymMatrix::all(3).collect();
        for _ in 0..20 {
            let mut picks: Vec<SymMatrix> = Vec::new();
            while picks.len() < 3 {
                let b = all[rng.gen_range(0..all.len())].clone();
                if !picks.contains(&b) {
                    picks.push(b);
                }
            }
            let by_forms = CosetUnion::from_forms(3, picks.clone()).unwrap();
            let reps: Vec<Word> = picks.iter().map(quad_form_word).collect();
            let by_words = CosetUnion::new(3, reps).unwrap();
            let words: Vec<Word> = by_forms.words().collect();
            let exact = min_distance_exhaustive(&words).unwrap();
            assert_eq!(by_forms.min_lee_distance(), Ok(exact));
            assert_eq!(by_words.min_lee_distance(), Ok(exact));
        }
    }

    #[test]
    fn duplicate_cosets_rejected() {
        let q = quad_form_word(&SymMatrix::identity(3));
        let shifted = q
            .add(&Word::from_fn(Alphabet::Quaternary, 3, |x| {
                2 * (x & 1) as u8 + 1
            }))
            .unwrap();
        assert_eq!(
            CosetUnion::new(
                3,
                vec![q.clone(), Word::zeros(Alphabet::Quaternary, 3), shifted]
            )
            .unwrap_err(),
            Error::DuplicateCoset {
                first: 0,
                second: 2
            }
        );
        assert_eq!(
            CosetUnion::from_forms(3, vec![SymMatrix::identity(3), SymMatrix::identity(3)])
                .unwrap_err(),
            Error::DuplicateCoset {
                first: 0,
                second: 1
            }
        );
    }

    #[test]
    fn coset_papr_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        for m in 2..=5u32 {
            let reps: Vec<Word> = (0..3)
                .map(|_| Word::random(Alphabet::Quaternary, m, &mut rng))
                .collect();
            let Ok(code) = CosetUnion::new(m, reps) else {
                continue;
            };
            for i in 0..code.coset_count() {
                let expected = papr(&code.reps()[i]);
                assert!(code.coset_paprs(i).iter().all(|p| *p == expected));
            }
        }
    }

    #[test]
    fn sampled_distance_bounded_by_exact() {
        let forms: Vec<SymMatrix> = SymMatrix::all(4)
            .filter(|b| b.is_nonsingular())
            .take(40)
            .collect();
        let code = CosetUnion::from_forms(4, forms).unwrap();
        let exact = code.min_lee_distance().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(35);
        let sampled = code.sampled_min_lee_distance(2000, &mut rng).unwrap();
        assert!(sampled.min_weight >= exact);
        assert_eq!(sampled.pairs_checked, 2000);
    }

    #[test]
    fn quadratic_cosets_reach_zrm2_distance() {
        // d_L(ZRM(2,m)) = 2^(m-1)
        for m in 2..=5u32 {
            assert_eq!(quadratic_coset_min_weight(m), Ok(1 << (m - 1)));
        }
    }

    #[test]
    fn gray_images_are_rm1_cosets() {
        // Gray images of Q + ZRM(1,m) differ pairwise by RM(1, m+1) words.
        use crate::graymap::gray;
        for m in 1..=4u32 {
            let code = CosetUnion::from_forms(m, vec![SymMatrix::identity(m as usize)]).unwrap();
            let rm1 = LinearCode::rm(1, m + 1).unwrap();
            let images: Vec<Word> = code.words().map(|w| gray(&w).unwrap()).collect();
            for img in &images {
                assert!(rm1.contains(&img.sub(&images[0]).unwrap()));
            }
        }
    }
}
