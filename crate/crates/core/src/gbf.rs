//! Generalized Boolean functions `F^m -> Z_2` or `F^m -> Z_4` and their value words.
//!
//! Position `l = sum l_j 2^j` of a word holds `f(l_0, ..., l_{m-1})`, so `x_0`
//! is the least significant index bit.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Value ring of a function or word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Alphabet {
    /// `Z_2`, h = 1.
    Binary,
    /// `Z_4`, h = 2.
    Quaternary,
}

impl Alphabet {
    pub fn from_h(h: u32) -> Result<Alphabet> {
        match h {
            1 => Ok(Alphabet::Binary),
            2 => Ok(Alphabet::Quaternary),
            _ => Err(Error::UnsupportedRing(h)),
        }
    }

    pub fn h(self) -> u32 {
        match self {
            Alphabet::Binary => 1,
            Alphabet::Quaternary => 2,
        }
    }

    pub fn modulus(self) -> u8 {
        1 << self.h()
    }
}

/// A value word of length `2^m` over `Z_2` or `Z_4`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    alphabet: Alphabet,
    m: u32,
    values: Vec<u8>,
}

pub(crate) fn log2_exact(len: usize) -> Result<u32> {
    if len == 0 || !len.is_power_of_two() {
        Err(Error::LengthNotPowerOfTwo(len))
    } else {
        Ok(len.trailing_zeros())
    }
}

impl Word {
    pub fn new(alphabet: Alphabet, values: Vec<u8>) -> Result<Word> {
        let m = log2_exact(values.len())?;
        let q = alphabet.modulus();
        if let Some((position, &value)) = values.iter().enumerate().find(|(_, &v)| v >= q) {
            return Err(Error::SymbolOutOfRange {
                value,
                position,
                modulus: q,
            });
        }
        Ok(Word {
            alphabet,
            m,
            values,
        })
    }

    pub fn z4(values: Vec<u8>) -> Result<Word> {
        Word::new(Alphabet::Quaternary, values)
    }

    pub fn binary(values: Vec<u8>) -> Result<Word> {
        Word::new(Alphabet::Binary, values)
    }

    pub fn zeros(alphabet: Alphabet, m: u32) -> Word {
        Word {
            alphabet,
            m,
            values: vec![0; 1 << m],
        }
    }

    /// Word of the function `x -> f(x)`, `x` given as its index bits; values are reduced.
    pub fn from_fn(alphabet: Alphabet, m: u32, mut f: impl FnMut(u32) -> u8) -> Word {
        let q = alphabet.modulus();
        Word {
            alphabet,
            m,
            values: (0..1u32 << m).map(|x| f(x) % q).collect(),
        }
    }

    pub fn random<R: Rng + ?Sized>(alphabet: Alphabet, m: u32, rng: &mut R) -> Word {
        let q = alphabet.modulus();
        Word::from_fn(alphabet, m, |_| rng.gen_range(0..q))
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u8> {
        self.values
    }

    pub fn is_quaternary(&self) -> bool {
        self.alphabet == Alphabet::Quaternary
    }

    pub(crate) fn require(&self, alphabet: Alphabet) -> Result<()> {
        if self.alphabet == alphabet {
            Ok(())
        } else {
            Err(Error::WrongAlphabet {
                expected: match alphabet {
                    Alphabet::Binary => "binary",
                    Alphabet::Quaternary => "quaternary",
                },
            })
        }
    }

    fn check_compatible(&self, other: &Word) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        other.require(self.alphabet)
    }

    /// Pointwise sum in `Z_{2^h}`.
    pub fn add(&self, other: &Word) -> Result<Word> {
        self.check_compatible(other)?;
        let q = self.alphabet.modulus();
        Ok(Word {
            alphabet: self.alphabet,
            m: self.m,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a + b) % q)
                .collect(),
        })
    }

    /// Pointwise difference in `Z_{2^h}`.
    pub fn sub(&self, other: &Word) -> Result<Word> {
        self.check_compatible(other)?;
        let q = self.alphabet.modulus();
        Ok(Word {
            alphabet: self.alphabet,
            m: self.m,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a + q - b) % q)
                .collect(),
        })
    }

    /// Multiplies every symbol by `c`.
    pub fn scale(&self, c: u8) -> Word {
        let q = self.alphabet.modulus();
        Word {
            alphabet: self.alphabet,
            m: self.m,
            values: self.values.iter().map(|&a| (a * (c % q)) % q).collect(),
        }
    }

    /// Embeds a binary word into `Z_4` (values 0/1 unchanged).
    pub fn to_quaternary(&self) -> Word {
        Word {
            alphabet: Alphabet::Quaternary,
            m: self.m,
            values: self.values.clone(),
        }
    }

    /// Lee weight for `Z_4` words, Hamming weight for binary words.
    pub fn weight(&self) -> u32 {
        match self.alphabet {
            Alphabet::Binary => self.values.iter().map(|&v| v as u32).sum(),
            Alphabet::Quaternary => self.values.iter().map(|&v| lee_weight_symbol(v)).sum(),
        }
    }

    pub fn hamming_weight(&self) -> u32 {
        self.values.iter().filter(|&&v| v != 0).count() as u32
    }

    /// Splits a quaternary word pointwise as `a + 2b` with `a, b` binary.
    pub fn two_adic_digits(&self) -> Result<(Word, Word)> {
        self.require(Alphabet::Quaternary)?;
        let a = self.values.iter().map(|&v| v & 1).collect();
        let b = self.values.iter().map(|&v| (v >> 1) & 1).collect();
        Ok((
            Word {
                alphabet: Alphabet::Binary,
                m: self.m,
                values: a,
            },
            Word {
                alphabet: Alphabet::Binary,
                m: self.m,
                values: b,
            },
        ))
    }
}

pub fn lee_weight_symbol(z: u8) -> u32 {
    match z & 3 {
        0 => 0,
        2 => 2,
        _ => 1,
    }
}

impl fmt::Display for Word {
    /// Symbols concatenated without separators, as in the word file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.values {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A generalized Boolean function held by its ANF coefficients.
///
/// `anf[k]` is the coefficient of the monomial `prod_{j in k} x_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gbf {
    alphabet: Alphabet,
    m: u32,
    anf: Vec<u8>,
}

impl Gbf {
    pub fn zero(alphabet: Alphabet, m: u32) -> Gbf {
        Gbf {
            alphabet,
            m,
            anf: vec![0; 1 << m],
        }
    }

    /// Builds the function `sum c * x^mask` from `(mask, c)` pairs; repeated masks add up.
    pub fn from_terms(alphabet: Alphabet, m: u32, terms: &[(u32, u8)]) -> Gbf {
        let mut f = Gbf::zero(alphabet, m);
        let q = alphabet.modulus();
        for &(mask, c) in terms {
            assert!(
                mask < (1 << m),
                "monomial mask {mask:#b} exceeds {m} variables"
            );
            let slot = &mut f.anf[mask as usize];
            *slot = (*slot + c % q) % q;
        }
        f
    }

    pub fn from_coefficients(alphabet: Alphabet, coeffs: Vec<u8>) -> Result<Gbf> {
        let w = Word::new(alphabet, coeffs)?;
        Ok(Gbf {
            alphabet,
            m: w.m,
            anf: w.values,
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn coefficients(&self) -> &[u8] {
        &self.anf
    }

    pub fn coeff(&self, mask: u32) -> u8 {
        self.anf[mask as usize]
    }

    /// Nonzero `(mask, coefficient)` pairs in ascending mask order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u8)> + '_ {
        self.anf
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k as u32, c))
    }

    /// Largest monomial weight with a nonzero coefficient; 0 for the zero function.
    pub fn degree(&self) -> u32 {
        self.terms().map(|(k, _)| k.count_ones()).max().unwrap_or(0)
    }

    /// Evaluates the ANF on all `2^m` points (subset-sum transform).
    pub fn to_word(&self) -> Word {
        let q = self.alphabet.modulus();
        let mut v = self.anf.clone();
        for j in 0..self.m {
            let bit = 1usize << j;
            for i in 0..v.len() {
                if i & bit != 0 {
                    v[i] = (v[i] + v[i ^ bit]) % q;
                }
            }
        }
        Word {
            alphabet: self.alphabet,
            m: self.m,
            values: v,
        }
    }

    /// Recovers the ANF from a value word by Möbius inversion over the subset lattice.
    pub fn from_word(w: &Word) -> Gbf {
        let q = w.alphabet.modulus();
        let mut c = w.values.clone();
        for j in 0..w.m {
            let bit = 1usize << j;
            for i in 0..c.len() {
                if i & bit != 0 {
                    c[i] = (c[i] + q - c[i ^ bit]) % q;
                }
            }
        }
        Gbf {
            alphabet: w.alphabet,
            m: w.m,
            anf: c,
        }
    }

    /// The binary functions `a`, `b` with `f = a + 2b` pointwise.
    ///
    /// The split acts on values; splitting ANF coefficients would be a different map.
    pub fn two_adic_split(&self) -> Result<(Gbf, Gbf)> {
        let (a, b) = self.to_word().two_adic_digits()?;
        Ok((Gbf::from_word(&a), Gbf::from_word(&b)))
    }

    /// `k_mask:coeff` pairs, ascending mask, space separated.
    pub fn anf_string(&self) -> String {
        self.terms()
            .map(|(k, c)| format!("{k}:{c}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse_anf(alphabet: Alphabet, m: u32, s: &str) -> Result<Gbf> {
        let mut terms = Vec::new();
        let mut last: Option<u32> = None;
        for tok in s.split_whitespace() {
            let bad = |message: String| Error::Parse { line: 1, message };
            let (k, c) = tok
                .split_once(':')
                .ok_or_else(|| bad(format!("term {tok:?} is not mask:coeff")))?;
            let k: u32 = k.parse().map_err(|_| bad(format!("bad mask in {tok:?}")))?;
            let c: u8 = c
                .parse()
                .map_err(|_| bad(format!("bad coefficient in {tok:?}")))?;
            if k >= 1 << m || c >= alphabet.modulus() {
                return Err(bad(format!("term {tok:?} out of range")));
            }
            if last.is_some_and(|l| l >= k) {
                return Err(bad("masks must ascend".into()));
            }
            last = Some(k);
            terms.push((k, c));
        }
        Ok(Gbf::from_terms(alphabet, m, &terms))
    }
}

/// A permutation of `F^k`, elements encoded as `k`-bit integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    k: u32,
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(k: u32, images: Vec<u32>) -> Result<Permutation> {
        assert_eq!(images.len(), 1 << k, "a map on F^k has 2^k images");
        let mut seen = vec![false; images.len()];
        for &y in &images {
            if y as usize >= seen.len() || seen[y as usize] {
                return Err(Error::NotBijective { k, image: y });
            }
            seen[y as usize] = true;
        }
        Ok(Permutation { k, images })
    }

    pub fn identity(k: u32) -> Permutation {
        Permutation {
            k,
            images: (0..1 << k).collect(),
        }
    }

    pub fn random<R: Rng + ?Sized>(k: u32, rng: &mut R) -> Permutation {
        let mut images: Vec<u32> = (0..1 << k).collect();
        images.shuffle(rng);
        Permutation { k, images }
    }

    /// The `index`-th permutation of `F^k` in lexicographic order of image lists.
    pub fn nth(k: u32, mut index: u128) -> Permutation {
        let n = 1usize << k;
        let mut pool: Vec<u32> = (0..n as u32).collect();
        let mut radix: Vec<u128> = vec![1; n];
        for i in (0..n.saturating_sub(1)).rev() {
            radix[i] = radix[i + 1] * (n - 1 - i) as u128;
        }
        let mut images = Vec::with_capacity(n);
        for r in radix.iter() {
            let pos = (index / r) as usize;
            index %= r;
            images.push(pool.remove(pos));
        }
        Permutation { k, images }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Permutation {
            k: self.k,
            images: inv,
        }
    }
}

/// `(2^k)!`, or `None` once it overflows `u128` (k >= 6).
pub fn permutation_count(k: u32) -> Option<u128> {
    (1..=(1u128 << k)).try_fold(1u128, |acc, i| acc.checked_mul(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(terms: &[(u32, u8)], m: u32) -> Gbf {
        Gbf::from_terms(Alphabet::Quaternary, m, terms)
    }

    #[test]
    fn anf_to_word_examples() {
        assert_eq!(q(&[], 2).to_word().values(), &[0, 0, 0, 0]);
        assert_eq!(q(&[(1, 1)], 2).to_word().values(), &[0, 1, 0, 1]);
        assert_eq!(q(&[(3, 2)], 2).to_word().values(), &[0, 0, 0, 2]);
    }

    #[test]
    fn word_to_anf_examples() {
        let zero = Word::z4(vec![0; 4]).unwrap();
        assert_eq!(Gbf::from_word(&zero), q(&[], 2));
        let x0 = Word::z4(vec![0, 1, 0, 1]).unwrap();
        assert_eq!(Gbf::from_word(&x0), q(&[(1, 1)], 2));
    }

    #[test]
    fn word_validation() {
        assert_eq!(Word::z4(vec![0, 1, 2]), Err(Error::LengthNotPowerOfTwo(3)));
        assert_eq!(
            Word::binary(vec![0, 2]),
            Err(Error::SymbolOutOfRange {
                value: 2,
                position: 1,
                modulus: 2
            })
        );
        assert_eq!(Alphabet::from_h(3), Err(Error::UnsupportedRing(3)));
        assert_eq!(Word::z4(vec![3]).unwrap().m(), 0);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(q(&[(0, 3)], 3).degree(), 0);
        assert_eq!(q(&[(3, 2), (4, 1)], 3).degree(), 2);
        assert_eq!(q(&[], 3).degree(), 0);
        assert_eq!(q(&[(7, 1)], 3).degree(), 3);
    }

    #[test]
    fn two_adic_examples() {
        let w = Word::z4(vec![0, 1, 2, 3]).unwrap();
        let (a, b) = w.two_adic_digits().unwrap();
        assert_eq!(a.values(), &[0, 1, 0, 1]);
        assert_eq!(b.values(), &[0, 0, 1, 1]);

        let (a, b) = q(&[(1, 2)], 2).two_adic_split().unwrap();
        assert_eq!(a, Gbf::zero(Alphabet::Binary, 2));
        assert_eq!(b, Gbf::from_terms(Alphabet::Binary, 2, &[(1, 1)]));

        let (a, b) = q(&[(1, 3)], 1).two_adic_split().unwrap();
        assert_eq!(a.to_word().values(), &[0, 1]);
        assert_eq!(b.to_word().values(), &[0, 1]);

        let bin = Gbf::zero(Alphabet::Binary, 2);
        assert!(bin.two_adic_split().is_err());
    }

    #[test]
    fn exhaustive_round_trip_small() {
        for m in 0..=2u32 {
            let n = 1usize << m;
            for idx in 0..4usize.pow(n as u32) {
                let values: Vec<u8> = (0..n).map(|i| ((idx >> (2 * i)) & 3) as u8).collect();
                let w = Word::z4(values).unwrap();
                let f = Gbf::from_word(&w);
                assert_eq!(f.to_word(), w);
                assert!(f.degree() <= m);
                let (a, b) = w.two_adic_digits().unwrap();
                let back = a.to_quaternary().add(&b.to_quaternary().scale(2)).unwrap();
                assert_eq!(back, w);
            }
        }
    }

    #[test]
    fn sampled_round_trip_m3() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10_000 {
            let w = Word::random(Alphabet::Quaternary, 3, &mut rng);
            assert_eq!(Gbf::from_word(&w).to_word(), w);
        }
    }

    #[test]
    fn anf_text_round_trip() {
        let f = q(&[(0, 3), (5, 2), (6, 1)], 3);
        assert_eq!(f.anf_string(), "0:3 5:2 6:1");
        assert_eq!(
            Gbf::parse_anf(Alphabet::Quaternary, 3, "0:3 5:2 6:1").unwrap(),
            f
        );
        assert!(Gbf::parse_anf(Alphabet::Quaternary, 3, "5:2 0:3").is_err());
        assert!(Gbf::parse_anf(Alphabet::Binary, 3, "5:2").is_err());
    }

    #[test]
    fn permutations() {
        assert!(matches!(
            Permutation::new(1, vec![1, 1]),
            Err(Error::NotBijective { k: 1, image: 1 })
        ));
        let p = Permutation::new(2, vec![2, 0, 3, 1]).unwrap();
        assert_eq!(p.inverse().images(), &[1, 3, 0, 2]);
        let all: std::collections::HashSet<_> = (0..24)
            .map(|i| Permutation::nth(2, i).images().to_vec())
            .collect();
        assert_eq!(all.len(), 24);
        assert_eq!(Permutation::nth(2, 0), Permutation::identity(2));
        assert_eq!(permutation_count(2), Some(24));
        assert_eq!(permutation_count(3), Some(40320));
    }

    fn word_strategy(m: u32) -> impl Strategy<Value = Word> {
        proptest::collection::vec(0u8..4, 1usize << m).prop_map(|v| Word::z4(v).unwrap())
    }

    proptest! {
        #[test]
        fn round_trip_up_to_m6(w in (0u32..=6).prop_flat_map(word_strategy)) {
            let f = Gbf::from_word(&w);
            prop_assert_eq!(f.to_word(), w.clone());
            prop_assert!(f.degree() <= w.m());
            let (a, b) = f.two_adic_split().unwrap();
            let back = a.to_word().to_quaternary().add(&b.to_word().to_quaternary().scale(2)).unwrap();
            prop_assert_eq!(back, w);
        }

        #[test]
        fn evaluation_is_linear(pair in (0u32..=6).prop_flat_map(|m| (word_strategy(m), word_strategy(m)))) {
            let (cf, cg) = pair;
            let f = Gbf::from_coefficients(Alphabet::Quaternary, cf.values().to_vec()).unwrap();
            let g = Gbf::from_coefficients(Alphabet::Quaternary, cg.values().to_vec()).unwrap();
            let sum = Gbf::from_coefficients(Alphabet::Quaternary, cf.add(&cg).unwrap().into_values()).unwrap();
            prop_assert_eq!(sum.to_word(), f.to_word().add(&g.to_word()).unwrap());
        }
    }
}
