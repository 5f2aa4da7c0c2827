//! Constant-amplitude codes inside the quaternary Reed-Muller codes:
//! Maiorana-McFarland bent words, the single quadratic coset, and unions of
//! nonsingular quadratic-form cosets of ZRM(1,m) inside ZRM(2,m).

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::algebra::{nonsingular_symmetric_formula, GaussInt, SymMatrix};
use crate::codes::CosetUnion;
use crate::error::{Error, Result};
use crate::gbf::{permutation_count, Alphabet, Gbf, Permutation, Word};

/// `f(x, y) = 2 sigma(x).y + g(x)` on `F^k x F^k`, with `x` in the low `k`
/// index bits and `y` in the high `k` bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MfSpec {
    pub sigma: Permutation,
    /// Value word of `g`, over Z4 on `F^k`.
    pub g: Word,
}

impl MfSpec {
    pub fn new(sigma: Permutation, g: Word) -> Result<MfSpec> {
        g.require(Alphabet::Quaternary)?;
        if g.m() != sigma.k() {
            return Err(Error::LengthMismatch {
                left: 1 << sigma.k(),
                right: g.len(),
            });
        }
        Ok(MfSpec { sigma, g })
    }

    pub fn k(&self) -> u32 {
        self.sigma.k()
    }
}

/// The bent word of a Maiorana-McFarland spec, of length `4^k`.
pub fn mf_bent(spec: &MfSpec) -> Word {
    let k = spec.k();
    let low = (1u32 << k) - 1;
    let g = spec.g.values();
    Word::from_fn(Alphabet::Quaternary, 2 * k, |z| {
        let (x, y) = (z & low, z >> k);
        let dot = (spec.sigma.apply(x) & y).count_ones() as u8 & 1;
        (2 * dot + g[x as usize]) % 4
    })
}

/// `f^(u, v) = 2^k i^g(s) (-1)^(u.s)` with `s = sigma^-1(v)`, indexed like
/// the word (`u` low bits, `v` high bits).
pub fn mf_spectrum(spec: &MfSpec) -> Vec<GaussInt<i64>> {
    let k = spec.k();
    let inv = spec.sigma.inverse();
    let low = (1u32 << k) - 1;
    (0..1u32 << (2 * k))
        .map(|z| {
            let (u, v) = (z & low, z >> k);
            let s = inv.apply(v);
            let sign = if (u & s).count_ones().is_multiple_of(2) { 0 } else { 2 };
            let unit = GaussInt::<i64>::i_pow((spec.g.values()[s as usize] + sign) as i64);
            GaussInt::new(unit.re << k, unit.im << k)
        })
        .collect()
}

/// Whether `g` ranges over every Z4 function or only those whose top ANF
/// coefficient is even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MfVariant {
    Rm4,
    Zrm,
}

/// Every `mf_bent` word of length `2^m`, `m = 2k`, enumerated lazily.
///
/// Word `index` splits as `perm * g_count + g_index`; `perm` selects
/// `sigma` in lexicographic order and the base-4 digits of `g_index` are
/// the ANF coefficients of `g`, monomial masks ascending. In the zrm
/// variant the top monomial takes a binary digit `d` with coefficient `2d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MfCode {
    k: u32,
    variant: MfVariant,
}

impl MfCode {
    pub fn new(m: u32, variant: MfVariant) -> Result<MfCode> {
        if !m.is_multiple_of(2) || !(2..=8).contains(&m) {
            return Err(Error::Precondition {
                what: "Maiorana-McFarland code",
                requirement: format!("even m with 2 <= m <= 8, got m={m}"),
            });
        }
        Ok(MfCode { k: m / 2, variant })
    }

    pub fn m(&self) -> u32 {
        2 * self.k
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn variant(&self) -> MfVariant {
        self.variant
    }

    fn top_is_binary(&self) -> bool {
        self.variant == MfVariant::Zrm
    }

    /// Number of admissible `g`.
    pub fn g_count(&self) -> u128 {
        let n = 1u32 << self.k;
        if self.top_is_binary() {
            1u128 << (2 * n - 1)
        } else {
            1u128 << (2 * n)
        }
    }

    /// `(2^k)! * |g|`.
    pub fn size(&self) -> BigUint {
        let mut perms = BigUint::from(1u32);
        for i in 2..=(1u32 << self.k) {
            perms *= i;
        }
        perms * BigUint::from(self.g_count())
    }

    fn g_from_index(&self, mut index: u128) -> Word {
        let n = 1usize << self.k;
        let mut coeffs = vec![0u8; n];
        for (mask, c) in coeffs.iter_mut().enumerate() {
            if mask == n - 1 && self.top_is_binary() {
                *c = 2 * (index % 2) as u8;
                index /= 2;
            } else {
                *c = (index % 4) as u8;
                index /= 4;
            }
        }
        Gbf::from_coefficients(Alphabet::Quaternary, coeffs)
            .expect("coefficients are reduced")
            .to_word()
    }

    /// The spec of word `index`; needs `k <= 4` so the index fits in u128.
    pub fn spec_at(&self, index: u128) -> Result<MfSpec> {
        let perms = permutation_count(self.k).ok_or(Error::TooLarge {
            what: "Maiorana-McFarland index",
            log2_size: 128,
        })?;
        let gc = self.g_count();
        if index / gc >= perms {
            return Err(Error::Precondition {
                what: "Maiorana-McFarland index",
                requirement: format!("index below {}", self.size()),
            });
        }
        MfSpec::new(
            Permutation::nth(self.k, index / gc),
            self.g_from_index(index % gc),
        )
    }

    pub fn word_at(&self, index: u128) -> Result<Word> {
        Ok(mf_bent(&self.spec_at(index)?))
    }

    /// Every word, in index order.
    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        let gc = self.g_count();
        let perms = permutation_count(self.k).expect("k <= 4");
        (0..perms).flat_map(move |p| {
            let sigma = Permutation::nth(self.k, p);
            (0..gc).map(move |gi| {
                mf_bent(&MfSpec {
                    sigma: sigma.clone(),
                    g: self.g_from_index(gi),
                })
            })
        })
    }

    /// One word per coset of ZRM(1,m): `sigma(0) = 0`, and `g` with zero
    /// constant term and binary linear coefficients. Adding
    /// `c + 2u.x + 2v.y` to a word replaces `sigma` by `sigma ^ v` and
    /// shifts `g` by `c + 2u.x`, so these reach every coset exactly once.
    pub fn coset_reps(&self) -> impl Iterator<Item = Word> + '_ {
        let k = self.k;
        let n = 1usize << k;
        let perms = permutation_count(k).expect("k <= 4");
        let top_binary = self.top_is_binary();
        (0..perms)
            .map(move |p| Permutation::nth(k, p))
            .filter(|s| s.apply(0) == 0)
            .flat_map(move |sigma| {
                // (radix, scale) of the coefficient digit per monomial mask
                let digits: Vec<(u8, u8)> = (0..n)
                    .map(|mask| {
                        let linear = mask.count_ones() == 1;
                        match mask {
                            0 => (1, 1),
                            _ if mask == n - 1 && top_binary => {
                                if linear {
                                    (1, 1)
                                } else {
                                    (2, 2)
                                }
                            }
                            _ if linear => (2, 1),
                            _ => (4, 1),
                        }
                    })
                    .collect();
                let total: u128 = digits.iter().map(|&(r, _)| r as u128).product();
                (0..total).map(move |mut idx| {
                    let mut coeffs = vec![0u8; n];
                    for (c, &(r, scale)) in coeffs.iter_mut().zip(&digits) {
                        *c = scale * (idx % r as u128) as u8;
                        idx /= r as u128;
                    }
                    let g = Gbf::from_coefficients(Alphabet::Quaternary, coeffs)
                        .expect("reduced")
                        .to_word();
                    mf_bent(&MfSpec {
                        sigma: sigma.clone(),
                        g,
                    })
                })
            })
    }

    /// Number of coset representatives: `|code| / 2^(m+2)`.
    pub fn coset_count(&self) -> BigUint {
        self.size() >> (self.m() + 2)
    }

    /// The code as a coset union; practical for `m <= 4`.
    pub fn coset_union(&self) -> Result<CosetUnion> {
        if self.k > 2 {
            return Err(Error::TooLarge {
                what: "Maiorana-McFarland coset list",
                log2_size: 24,
            });
        }
        CosetUnion::new(self.m(), self.coset_reps().collect())
    }

    /// Distance value carried by the construction: `2^(m/2)` for rm4,
    /// `2^(m/2 + 1)` for zrm.
    pub fn min_distance_formula(&self) -> u32 {
        match self.variant {
            MfVariant::Rm4 => 1 << self.k,
            MfVariant::Zrm => 2 << self.k,
        }
    }
}

/// The coset of the quadratic form `x_0 + x_1 + ... + x_{m-1}`:
/// `2^(m+2)` words, PAPR 1, minimum Lee distance `2^m`.
pub fn single_coset_code(m: u32) -> Result<CosetUnion> {
    CosetUnion::from_forms(m, vec![SymMatrix::identity(m as usize)])
}

/// Every nonsingular symmetric `m x m` matrix in lexicographic order.
pub fn nonsingular_forms(m: u32) -> Result<Vec<SymMatrix>> {
    if !(1..=6).contains(&m) {
        return Err(Error::Precondition {
            what: "nonsingular symmetric matrix enumeration",
            requirement: format!("1 <= m <= 6, got m={m}"),
        });
    }
    Ok(SymMatrix::all(m as usize)
        .filter(SymMatrix::is_nonsingular)
        .collect())
}

/// `floor(log2 N(m))`.
pub fn nonsingular_code_log2_cosets(m: u32) -> u32 {
    127 - nonsingular_symmetric_formula(m).leading_zeros()
}

/// The `2^floor(log2 N(m))` lexicographically smallest nonsingular
/// quadratic-form cosets. Rate `(floor(log2 N(m)) + m + 2)/2^m`, PAPR 1,
/// minimum Lee distance at least `2^(m-1)`.
pub fn nonsingular_quadratic_code(m: u32) -> Result<CosetUnion> {
    if !(2..=6).contains(&m) {
        return Err(Error::Precondition {
            what: "ZRM(2,m) subcode",
            requirement: format!("2 <= m <= 6, got m={m}"),
        });
    }
    let mut forms = nonsingular_forms(m)?;
    forms.truncate(1 << nonsingular_code_log2_cosets(m));
    CosetUnion::from_forms(m, forms)
}
