//! Binary and quaternary Reed-Muller families as lazily enumerated linear codes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gbf::{Alphabet, Gbf, Word};

use super::packed;

/// Which Reed-Muller family a [`LinearCode`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Binary RM(r,m): monomials of degree at most r.
    Rm,
    /// RM4(r,m): the same monomials taken over Z4.
    Rm4,
    /// ZRM(r,m): monomials of degree below r over Z4, plus twice those of degree r.
    Zrm,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Rm => "rm",
            Family::Rm4 => "rm4",
            Family::Zrm => "zrm",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s {
            "rm" => Ok(Family::Rm),
            "rm4" => Ok(Family::Rm4),
            "zrm" => Ok(Family::Zrm),
            other => Err(Error::Precondition {
                what: "code family",
                requirement: format!("one of rm, rm4, zrm; got {other:?}"),
            }),
        }
    }
}

fn binomial(n: u32, k: u32) -> u32 {
    if k > n {
        return 0;
    }
    let mut c: u64 = 1;
    for i in 0..k as u64 {
        c = c * (n as u64 - i) / (i + 1);
    }
    c as u32
}

/// `log2` of the number of words of the family at `(r, m)`.
pub fn log2_cardinality(family: Family, r: u32, m: u32) -> u32 {
    let upto = |top: i64| -> u32 { (0..=top.min(m as i64)).map(|j| binomial(m, j as u32)).sum() };
    match family {
        Family::Rm => upto(r as i64),
        Family::Rm4 => 2 * upto(r as i64),
        Family::Zrm => 2 * upto(r as i64 - 1) + binomial(m, r),
    }
}

/// A linear code spanned by monomial words, with generator orders 2 or 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    family: Family,
    r: u32,
    m: u32,
    monomials: Vec<u32>,
    generators: Vec<Word>,
    orders: Vec<u8>,
}

fn monomial_word(alphabet: Alphabet, m: u32, mask: u32, coeff: u8) -> Word {
    Word::from_fn(alphabet, m, |x| if x & mask == mask { coeff } else { 0 })
}

impl LinearCode {
    pub fn new(family: Family, r: u32, m: u32) -> Result<LinearCode> {
        if !(1..=16).contains(&m) {
            return Err(Error::FieldDegree(m));
        }
        let r_max = if family == Family::Zrm { m + 1 } else { m };
        if r > r_max {
            return Err(Error::Precondition {
                what: "Reed-Muller order",
                requirement: format!("0 <= r <= {r_max} for {family} at m={m}, got r={r}"),
            });
        }
        let alphabet = match family {
            Family::Rm => Alphabet::Binary,
            _ => Alphabet::Quaternary,
        };
        let mut monomials = Vec::new();
        let mut generators = Vec::new();
        let mut orders = Vec::new();
        for mask in 0u32..(1 << m) {
            let deg = mask.count_ones();
            let (coeff, order) = match family {
                Family::Rm if deg <= r => (1, 2),
                Family::Rm4 if deg <= r => (1, 4),
                Family::Zrm if deg < r => (1, 4),
                Family::Zrm if deg == r => (2, 2),
                _ => continue,
            };
            monomials.push(mask);
            generators.push(monomial_word(alphabet, m, mask, coeff));
            orders.push(order);
        }
        Ok(LinearCode {
            family,
            r,
            m,
            monomials,
            generators,
            orders,
        })
    }

    pub fn rm(r: u32, m: u32) -> Result<LinearCode> {
        LinearCode::new(Family::Rm, r, m)
    }

    pub fn rm4(r: u32, m: u32) -> Result<LinearCode> {
        LinearCode::new(Family::Rm4, r, m)
    }

    pub fn zrm(r: u32, m: u32) -> Result<LinearCode> {
        LinearCode::new(Family::Zrm, r, m)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn alphabet(&self) -> Alphabet {
        match self.family {
            Family::Rm => Alphabet::Binary,
            _ => Alphabet::Quaternary,
        }
    }

    /// Monomial masks of the generators, ascending.
    pub fn monomials(&self) -> &[u32] {
        &self.monomials
    }

    pub fn generators(&self) -> &[Word] {
        &self.generators
    }

    /// Additive order (2 or 4) of each generator.
    pub fn orders(&self) -> &[u8] {
        &self.orders
    }

    pub fn log2_size(&self) -> u32 {
        self.orders.iter().map(|&o| o.trailing_zeros()).sum()
    }

    /// Membership through the ANF of `w`.
    pub fn contains(&self, w: &Word) -> bool {
        if w.alphabet() != self.alphabet() || w.m() != self.m {
            return false;
        }
        Gbf::from_word(w).terms().all(|(mask, c)| {
            let deg = mask.count_ones();
            match self.family {
                Family::Rm | Family::Rm4 => deg <= self.r,
                Family::Zrm => deg < self.r || (deg == self.r && c % 2 == 0),
            }
        })
    }

    /// The word with mixed-radix coordinates `index`, generator 0 least significant.
    pub fn word_at(&self, mut index: u128) -> Word {
        let mut acc = vec![0u8; 1 << self.m];
        let modulus = self.alphabet().modulus();
        for (g, &o) in self.generators.iter().zip(&self.orders) {
            let c = (index % o as u128) as u8;
            index /= o as u128;
            if c != 0 {
                for (a, &v) in acc.iter_mut().zip(g.values()) {
                    *a = (*a + c * v) % modulus;
                }
            }
        }
        Word::new(self.alphabet(), acc).expect("reduced symbols")
    }

    /// Every codeword, in `word_at` order.
    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        let total: u128 = 1u128 << self.log2_size().min(127);
        (0..total).map(move |i| self.word_at(i))
    }

    /// Minimum Lee (Hamming for RM) weight over nonzero codewords, by full
    /// enumeration over bit-packed words.
    pub fn min_weight(&self) -> Result<u32> {
        packed::min_nonzero_weight(self.alphabet(), self.m, &self.generators, &self.orders)?
            .ok_or(Error::SingletonCode)
    }

    /// The minimum-distance value carried by the family's formula.
    pub fn min_distance_formula(&self) -> Option<u32> {
        let (m, r) = (self.m, self.r);
        match self.family {
            Family::Rm | Family::Rm4 if r <= m => Some(1 << (m - r)),
            Family::Zrm => Some(1 << (m + 1 - r)),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn cardinality_examples() {
        assert_eq!(LinearCode::rm4(1, 4).unwrap().log2_size(), 10);
        assert_eq!(LinearCode::zrm(2, 4).unwrap().log2_size(), 16);
        assert_eq!(LinearCode::zrm(1, 4).unwrap().log2_size(), 6);
        assert_eq!(log2_cardinality(Family::Zrm, 2, 4), 16);
        assert!(LinearCode::rm(5, 4).is_err());
        assert!(LinearCode::zrm(5, 4).is_ok());
        assert!(LinearCode::zrm(6, 4).is_err());
    }

    #[test]
    fn enumeration_matches_formula_small() {
        for m in 1..=3u32 {
            for family in [Family::Rm, Family::Rm4, Family::Zrm] {
                let r_max = if family == Family::Zrm { m + 1 } else { m };
                for r in 0..=r_max {
                    let code = LinearCode::new(family, r, m).unwrap();
                    if code.log2_size() > 16 {
                        continue;
                    }
                    let set: HashSet<Word> = code.words().collect();
                    assert_eq!(set.len() as u64, 1u64 << log2_cardinality(family, r, m));
                    assert!(set.iter().all(|w| code.contains(w)));
                    assert!(set.iter().all(|w| Gbf::from_word(w).degree() <= r.min(m)));
                }
            }
        }
    }

    #[test]
    fn zrm1_size_and_distance() {
        let code = LinearCode::zrm(1, 4).unwrap();
        let set: HashSet<Word> = code.words().collect();
        assert_eq!(set.len(), 64);
        assert_eq!(code.min_weight(), Ok(16));
    }

    #[test]
    fn distances_small() {
        assert_eq!(LinearCode::rm4(1, 3).unwrap().min_weight(), Ok(4));
        assert_eq!(LinearCode::rm(1, 4).unwrap().min_weight(), Ok(8));
        for m in 1..=3u32 {
            for r in 0..=m {
                let rm4 = LinearCode::rm4(r, m).unwrap();
                assert_eq!(rm4.min_weight().ok(), rm4.min_distance_formula());
                let zrm = LinearCode::zrm(r, m).unwrap();
                assert_eq!(zrm.min_weight().ok(), zrm.min_distance_formula());
            }
        }
    }

    #[test]
    fn contains_rejects_outside() {
        let zrm = LinearCode::zrm(1, 2).unwrap();
        assert!(zrm.contains(&Word::z4(vec![0, 2, 0, 2]).unwrap()));
        assert!(!zrm.contains(&Word::z4(vec![0, 1, 0, 1]).unwrap()));
        assert!(zrm.contains(&Word::z4(vec![3, 3, 3, 3]).unwrap()));
    }
}
