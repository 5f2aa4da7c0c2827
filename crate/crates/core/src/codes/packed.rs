//! Bit-packed words for distance scans.
//!
//! A quaternary word `a + 2b` is held as two bit planes `(a, b)`. Adding two
//! words is `(a1 ^ a2, b1 ^ b2 ^ (a1 & a2))` and the Lee weight is
//! `|a| + 2 |b & !a|`. Binary words use the `a` plane only.

use crate::error::{Error, Result};
use crate::gbf::{Alphabet, Word};

/// Bit planes of one word with `L` 64-bit limbs per plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Planes<const L: usize> {
    lo: [u64; L],
    hi: [u64; L],
}

impl<const L: usize> Planes<L> {
    const ZERO: Self = Planes {
        lo: [0; L],
        hi: [0; L],
    };

    fn from_word(w: &Word) -> Self {
        let mut p = Self::ZERO;
        for (i, &v) in w.values().iter().enumerate() {
            p.lo[i / 64] |= ((v & 1) as u64) << (i % 64);
            p.hi[i / 64] |= (((v >> 1) & 1) as u64) << (i % 64);
        }
        p
    }

    #[inline(always)]
    fn add(&self, other: &Self, alphabet: Alphabet) -> Self {
        let mut out = Self::ZERO;
        for l in 0..L {
            out.lo[l] = self.lo[l] ^ other.lo[l];
            out.hi[l] = match alphabet {
                Alphabet::Binary => 0,
                Alphabet::Quaternary => self.hi[l] ^ other.hi[l] ^ (self.lo[l] & other.lo[l]),
            };
        }
        out
    }

    #[inline(always)]
    fn weight(&self) -> u32 {
        let mut w = 0;
        for l in 0..L {
            w += self.lo[l].count_ones() + 2 * (self.hi[l] & !self.lo[l]).count_ones();
        }
        w
    }
}

/// Minimum weight over the nonzero words of the group generated by
/// `generators` with the given additive orders, by full enumeration.
pub(crate) fn min_nonzero_weight(
    alphabet: Alphabet,
    m: u32,
    generators: &[Word],
    orders: &[u8],
) -> Result<Option<u32>> {
    let log2_size: u32 = orders.iter().map(|&o| o.trailing_zeros()).sum();
    if log2_size > 40 {
        return Err(Error::TooLarge {
            what: "linear code enumeration",
            log2_size,
        });
    }
    let limbs = ((1usize << m) / 64).max(1);
    macro_rules! dispatch {
        ($($l:literal)*) => {
            match limbs {
                $($l => Ok(min_weight_impl::<$l>(alphabet, generators, orders)),)*
                _ => unreachable!("m <= 16"),
            }
        };
    }
    dispatch!(1 2 4 8 16 32 64 128 256 512 1024)
}

fn min_weight_impl<const L: usize>(
    alphabet: Alphabet,
    generators: &[Word],
    orders: &[u8],
) -> Option<u32> {
    let gens: Vec<Planes<L>> = generators.iter().map(Planes::from_word).collect();
    // Split into an inner block whose span is tabulated and an outer odometer.
    let mut split = gens.len();
    let mut inner_size = 1usize;
    while split > 0 && inner_size * orders[split - 1] as usize <= 1 << 14 {
        split -= 1;
        inner_size *= orders[split] as usize;
    }
    let mut table = vec![Planes::<L>::ZERO];
    for (g, &o) in gens[split..].iter().zip(&orders[split..]) {
        let prev = table.clone();
        let mut shifted = prev.clone();
        for _ in 1..o {
            shifted = shifted.iter().map(|p| p.add(g, alphabet)).collect();
            table.extend_from_slice(&shifted);
        }
    }
    let outer_gens = &gens[..split];
    let outer_orders = &orders[..split];
    let mut digits = vec![0u8; split];
    let mut current = Planes::<L>::ZERO;
    let mut best = u32::MAX;
    loop {
        for entry in &table {
            let w = current.add(entry, alphabet).weight();
            // only the zero word has weight 0
            if w != 0 && w < best {
                best = w;
            }
        }
        // advance the odometer; each digit step adds its generator once
        let mut d = 0;
        loop {
            if d == split {
                return (best != u32::MAX).then_some(best);
            }
            current = current.add(&outer_gens[d], alphabet);
            digits[d] += 1;
            if digits[d] < outer_orders[d] {
                break;
            }
            digits[d] = 0;
            d += 1;
        }
    }
}

/// Gray-image bits of each word, `limbs` u64 per word, for Hamming scans.
struct GrayPacked {
    limbs: usize,
    data: Vec<u64>,
}

impl GrayPacked {
    fn new(words: &[&Word]) -> GrayPacked {
        let bits_per_symbol = match words[0].alphabet() {
            Alphabet::Binary => 1,
            Alphabet::Quaternary => 2,
        };
        let bits = words[0].len() * bits_per_symbol;
        let limbs = bits.div_ceil(64);
        let mut data = vec![0u64; limbs * words.len()];
        for (wi, w) in words.iter().enumerate() {
            let row = &mut data[wi * limbs..(wi + 1) * limbs];
            for (i, &v) in w.values().iter().enumerate() {
                let pair: u64 = if bits_per_symbol == 1 {
                    v as u64
                } else {
                    // gray(a + 2b) = (b, a ^ b)
                    let (a, b) = ((v & 1) as u64, ((v >> 1) & 1) as u64);
                    b | ((a ^ b) << 1)
                };
                let pos = i * bits_per_symbol;
                row[pos / 64] |= pair << (pos % 64);
            }
        }
        GrayPacked { limbs, data }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.limbs..(i + 1) * self.limbs]
    }
}

/// Minimum Lee (quaternary) or Hamming (binary) distance over all pairs of
/// distinct words.
pub fn min_distance_exhaustive(words: &[Word]) -> Result<u32> {
    let mut distinct: Vec<&Word> = words.iter().collect();
    distinct.sort();
    distinct.dedup();
    if distinct.len() < 2 {
        return Err(Error::SingletonCode);
    }
    let first = distinct[0];
    for w in &distinct[1..] {
        if w.len() != first.len() {
            return Err(Error::LengthMismatch {
                left: first.len(),
                right: w.len(),
            });
        }
        w.require(first.alphabet())?;
    }
    let packed = GrayPacked::new(&distinct);
    let mut best = u32::MAX;
    for i in 0..distinct.len() {
        let a = packed.row(i);
        for j in (i + 1)..distinct.len() {
            let b = packed.row(j);
            let d: u32 = a.iter().zip(b).map(|(x, y)| (x ^ y).count_ones()).sum();
            best = best.min(d);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn planes_match_word_arithmetic() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for m in [2u32, 6, 7] {
            for _ in 0..200 {
                let u = Word::random(Alphabet::Quaternary, m, &mut rng);
                let v = Word::random(Alphabet::Quaternary, m, &mut rng);
                let sum = u.add(&v).unwrap();
                let pu = Planes::<2>::from_word(&u);
                let pv = Planes::<2>::from_word(&v);
                let ps = pu.add(&pv, Alphabet::Quaternary);
                assert_eq!(ps, Planes::<2>::from_word(&sum));
                assert_eq!(ps.weight(), sum.weight());
            }
        }
    }

    #[test]
    fn exhaustive_distance_small() {
        let words = vec![
            Word::z4(vec![0, 0, 0, 0]).unwrap(),
            Word::z4(vec![1, 1, 1, 1]).unwrap(),
            Word::z4(vec![0, 2, 0, 0]).unwrap(),
        ];
        assert_eq!(min_distance_exhaustive(&words), Ok(2));
        assert_eq!(
            min_distance_exhaustive(&words[..1]),
            Err(Error::SingletonCode)
        );
        // duplicates are not pairs
        let dup = vec![words[0].clone(), words[0].clone(), words[1].clone()];
        assert_eq!(min_distance_exhaustive(&dup), Ok(4));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let gens: Vec<Word> = (0..3)
                .map(|_| Word::random(Alphabet::Quaternary, 3, &mut rng))
                .collect();
            let orders = [4u8, 4, 4];
            let mut brute = u32::MAX;
            for i in 0..64u32 {
                let mut w = Word::zeros(Alphabet::Quaternary, 3);
                for (k, g) in gens.iter().enumerate() {
                    let c = ((i >> (2 * k)) & 3) as u8;
                    w = w.add(&g.scale(c)).unwrap();
                }
                if w.values().iter().any(|&v| v != 0) {
                    brute = brute.min(w.weight());
                }
            }
            let fast = min_nonzero_weight(Alphabet::Quaternary, 3, &gens, &orders).unwrap();
            assert_eq!(fast, if brute == u32::MAX { None } else { Some(brute) });
        }
    }
}
