//! A code of any of the supported shapes, with its metadata.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::constructions::MfCode;
use crate::error::{Error, Result};
use crate::gbf::{Alphabet, Word};
use crate::spectral::{papr, PaprValue, SpectrumScratch};

use super::{min_distance_exhaustive, CosetUnion, LinearCode};

/// Version of the [`CodeMeta`] JSON layout.
pub const META_SCHEMA_VERSION: u32 = 1;

/// `bits / length`, where `bits = floor(log2 |C|)`; `exact` is false when
/// `|C|` is not a power of two and the bits are the encodable floor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rate {
    pub bits: u32,
    pub length: u64,
    pub exact: bool,
}

impl Rate {
    pub fn from_size(size: &BigUint, length: u64) -> Rate {
        let bits = size.bits().saturating_sub(1) as u32;
        let exact = *size == BigUint::from(1u32) << bits;
        Rate {
            bits,
            length,
            exact,
        }
    }
}

impl fmt::Display for Rate {
    /// Unreduced, so the length stays visible: `12/16`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.bits, self.length)?;
        if !self.exact {
            write!(f, " (floor of log2 |C|)")?;
        }
        Ok(())
    }
}

/// Whether a reported distance is the exact minimum or a lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bound {
    Exact,
    AtLeast,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceReport {
    pub value: u32,
    /// `lee` for quaternary codes, `hamming` for binary ones.
    pub metric: String,
    pub bound: Bound,
    pub method: String,
}

impl fmt::Display for DistanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.bound {
            Bound::Exact => write!(f, "{}", self.value),
            Bound::AtLeast => write!(f, ">={}", self.value),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaprReport {
    pub numerator: u64,
    pub denominator: u64,
    /// Lowest terms.
    pub display: String,
    /// A word attaining the maximum.
    pub witness: String,
    pub method: String,
}

/// Metadata written next to a codebook file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeMeta {
    pub schema_version: u32,
    pub name: String,
    pub alphabet: Alphabet,
    pub m: u32,
    pub length: u64,
    /// Decimal word count.
    pub size: String,
    pub rate: Rate,
    pub rate_display: String,
    pub coset_count: Option<String>,
    pub min_distance: Option<DistanceReport>,
    pub max_papr: Option<PaprReport>,
}

/// A code held as an explicit list, a linear code, a union of ZRM(1,m)
/// cosets, or the Maiorana-McFarland family.
#[derive(Debug, Clone)]
pub enum CodeBook {
    List {
        alphabet: Alphabet,
        m: u32,
        words: Vec<Word>,
    },
    Linear(LinearCode),
    Cosets(CosetUnion),
    MaioranaMcFarland(MfCode),
}

impl CodeBook {
    /// A list code; every word must share the alphabet and length.
    pub fn list(words: Vec<Word>) -> Result<CodeBook> {
        let first = words.first().ok_or(Error::SingletonCode)?;
        let (alphabet, m) = (first.alphabet(), first.m());
        for w in &words {
            w.require(alphabet)?;
            if w.m() != m {
                return Err(Error::LengthMismatch {
                    left: 1 << m,
                    right: w.len(),
                });
            }
        }
        Ok(CodeBook::List { alphabet, m, words })
    }

    pub fn alphabet(&self) -> Alphabet {
        match self {
            CodeBook::List { alphabet, .. } => *alphabet,
            CodeBook::Linear(c) => c.alphabet(),
            _ => Alphabet::Quaternary,
        }
    }

    pub fn m(&self) -> u32 {
        match self {
            CodeBook::List { m, .. } => *m,
            CodeBook::Linear(c) => c.m(),
            CodeBook::Cosets(c) => c.m(),
            CodeBook::MaioranaMcFarland(c) => c.m(),
        }
    }

    pub fn length(&self) -> u64 {
        1 << self.m()
    }

    /// Number of distinct words.
    pub fn size(&self) -> BigUint {
        match self {
            CodeBook::List { words, .. } => {
                let mut sorted: Vec<&Word> = words.iter().collect();
                sorted.sort();
                sorted.dedup();
                BigUint::from(sorted.len())
            }
            CodeBook::Linear(c) => BigUint::from(1u32) << c.log2_size(),
            CodeBook::Cosets(c) => BigUint::from(c.size()),
            CodeBook::MaioranaMcFarland(c) => c.size(),
        }
    }

    pub fn rate(&self) -> Rate {
        Rate::from_size(&self.size(), self.length())
    }

    pub fn coset_count(&self) -> Option<BigUint> {
        match self {
            CodeBook::Cosets(c) => Some(BigUint::from(c.coset_count())),
            CodeBook::MaioranaMcFarland(c) => Some(c.coset_count()),
            _ => None,
        }
    }

    /// Every word, lazily.
    pub fn words(&self) -> Box<dyn Iterator<Item = Word> + '_> {
        match self {
            CodeBook::List { words, .. } => Box::new(words.iter().cloned()),
            CodeBook::Linear(c) => Box::new(c.words()),
            CodeBook::Cosets(c) => Box::new(c.words()),
            CodeBook::MaioranaMcFarland(c) => Box::new(c.words()),
        }
    }

    /// One word per coset of ZRM(1,m) for coset-shaped codes, else every word.
    pub fn representatives(&self) -> Box<dyn Iterator<Item = Word> + '_> {
        match self {
            CodeBook::Cosets(c) => Box::new(c.reps().iter().cloned()),
            CodeBook::MaioranaMcFarland(c) => Box::new(c.coset_reps()),
            _ => self.words(),
        }
    }

    fn metric(&self) -> String {
        match self.alphabet() {
            Alphabet::Binary => "hamming".into(),
            Alphabet::Quaternary => "lee".into(),
        }
    }

    /// Exact minimum distance.
    pub fn min_distance(&self) -> Result<DistanceReport> {
        let (value, method) = match self {
            CodeBook::List { words, .. } => (
                min_distance_exhaustive(words)?,
                "all pairs of distinct words",
            ),
            CodeBook::Linear(c) => (c.min_weight()?, "minimum weight over all nonzero codewords"),
            CodeBook::Cosets(c) => (
                c.min_lee_distance()?,
                "minimum coset weight over representative differences",
            ),
            CodeBook::MaioranaMcFarland(c) => (
                c.coset_union()?.min_lee_distance()?,
                "minimum coset weight over representative differences",
            ),
        };
        Ok(DistanceReport {
            value,
            metric: self.metric(),
            bound: Bound::Exact,
            method: method.into(),
        })
    }

    /// Largest PAPR with a witness word. Coset-shaped codes are scanned by
    /// representative, since PAPR is constant on cosets of ZRM(1,m).
    pub fn max_papr(&self) -> Result<PaprReport> {
        let n = self.length();
        let (value, witness, method) = match self {
            CodeBook::Linear(c) => {
                let zero = Word::zeros(c.alphabet(), c.m());
                (papr(&zero), zero, "the zero codeword attains 2^m")
            }
            CodeBook::List {
                alphabet: Alphabet::Binary,
                words,
                ..
            } => {
                let (p, w) = words
                    .iter()
                    .map(|w| (papr(w), w))
                    .max_by(|a, b| a.0.cmp(&b.0))
                    .ok_or(Error::SingletonCode)?;
                (p, w.clone(), "every word")
            }
            _ => {
                let mut scratch = SpectrumScratch::new(self.m());
                let mut best: Option<(i64, Word)> = None;
                for w in self.representatives() {
                    scratch.load_z4(w.values());
                    let peak = scratch.max_norm_sqr();
                    if best.as_ref().is_none_or(|(b, _)| peak > *b) {
                        best = Some((peak, w));
                    }
                }
                let (peak, w) = best.ok_or(Error::SingletonCode)?;
                let method = match self {
                    CodeBook::List { .. } => "every word",
                    _ => "every coset representative",
                };
                (PaprValue::new(peak as u64, n), w, method)
            }
        };
        Ok(PaprReport {
            numerator: value.numerator,
            denominator: value.denominator,
            display: value.to_string(),
            witness: witness.to_string(),
            method: method.into(),
        })
    }

    /// Metadata; the distance is computed only when `with_distance`.
    pub fn meta(&self, name: &str, with_distance: bool) -> Result<CodeMeta> {
        let rate = self.rate();
        Ok(CodeMeta {
            schema_version: META_SCHEMA_VERSION,
            name: name.into(),
            alphabet: self.alphabet(),
            m: self.m(),
            length: self.length(),
            size: self.size().to_string(),
            rate,
            rate_display: rate.to_string(),
            coset_count: self.coset_count().map(|c| c.to_string()),
            min_distance: if with_distance {
                Some(self.min_distance()?)
            } else {
                None
            },
            max_papr: Some(self.max_papr()?),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{single_coset_code, MfVariant};

    #[test]
    fn rate_display() {
        let r = Rate::from_size(&BigUint::from(6144u32), 16);
        assert_eq!(r.to_string(), "12/16 (floor of log2 |C|)");
        let r = Rate::from_size(&BigUint::from(64u32), 16);
        assert_eq!(r.to_string(), "6/16");
    }

    #[test]
    fn meta_single_coset() {
        let code = CodeBook::Cosets(single_coset_code(4).unwrap());
        let meta = code.meta("coset", true).unwrap();
        assert_eq!(meta.rate_display, "6/16");
        assert_eq!(meta.min_distance.unwrap().value, 16);
        assert_eq!(meta.max_papr.unwrap().display, "1/1");
        assert_eq!(meta.size, "64");
    }

    #[test]
    fn meta_matches_recomputation() {
        let code = CodeBook::MaioranaMcFarland(MfCode::new(4, MfVariant::Zrm).unwrap());
        let meta = code.meta("mf-zrm", true).unwrap();
        let list = CodeBook::list(code.words().collect()).unwrap();
        let again = list.meta("mf-zrm", true).unwrap();
        assert_eq!(meta.rate, again.rate);
        assert_eq!(meta.size, again.size);
        assert_eq!(
            meta.min_distance.unwrap().value,
            again.min_distance.unwrap().value
        );
        assert_eq!(
            meta.max_papr.unwrap().display,
            again.max_papr.unwrap().display
        );
        assert_eq!(meta.rate_display, "11/16 (floor of log2 |C|)");
    }

    #[test]
    fn linear_meta() {
        let code = CodeBook::Linear(LinearCode::rm4(1, 3).unwrap());
        let meta = code.meta("rm4", true).unwrap();
        assert_eq!(meta.min_distance.unwrap().value, 4);
        assert_eq!(meta.max_papr.unwrap().display, "8/1");
    }
}
