//! Exact Fourier spectra, MC-CDMA signal synthesis and PAPR.
//!
//! The transform is `f^(u) = sum_x w^f(x) (-1)^(u.x)` with `w = i` for
//! quaternary words and `w = -1` for binary words. All arithmetic is over
//! Gaussian integers, so "PAPR = 1" is decided by integer equality.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::GaussInt;
use crate::error::{Error, Result};
use crate::gbf::{Alphabet, Gbf, Word};

/// In-place Walsh-Hadamard butterfly: `v[u] <- sum_x v[x] (-1)^(u.x)`.
pub fn fwht(v: &mut [i64]) {
    let n = v.len();
    debug_assert!(n.is_power_of_two());
    let mut h = 1;
    while h < n {
        for block in (0..n).step_by(2 * h) {
            for i in block..block + h {
                let (a, b) = (v[i], v[i + h]);
                v[i] = a + b;
                v[i + h] = a - b;
            }
        }
        h *= 2;
    }
}

/// `i32` variant of [`fwht`] for the hot loops over many short words.
pub(crate) fn fwht_i32(v: &mut [i32]) {
    let n = v.len();
    let mut h = 1;
    while h < n {
        for block in (0..n).step_by(2 * h) {
            for i in block..block + h {
                let (a, b) = (v[i], v[i + h]);
                v[i] = a + b;
                v[i + h] = a - b;
            }
        }
        h *= 2;
    }
}

/// Real and imaginary parts of `w^values[x]` laid out for the butterfly.
fn unit_parts(w: &Word) -> (Vec<i64>, Vec<i64>) {
    match w.alphabet() {
        Alphabet::Binary => (
            w.values()
                .iter()
                .map(|&v| if v == 0 { 1 } else { -1 })
                .collect(),
            vec![0; w.len()],
        ),
        Alphabet::Quaternary => w
            .values()
            .iter()
            .map(|&v| match v {
                0 => (1, 0),
                1 => (0, 1),
                2 => (-1, 0),
                _ => (0, -1),
            })
            .unzip(),
    }
}

/// Squared magnitudes and the butterfly scratch used by the batch checks.
pub(crate) struct SpectrumScratch {
    re: Vec<i32>,
    im: Vec<i32>,
}

impl SpectrumScratch {
    pub(crate) fn new(m: u32) -> SpectrumScratch {
        SpectrumScratch {
            re: vec![0; 1 << m],
            im: vec![0; 1 << m],
        }
    }

    /// Transforms a quaternary value slice in place.
    pub(crate) fn load_z4(&mut self, values: &[u8]) {
        let n = values.len();
        self.re.resize(n, 0);
        self.im.resize(n, 0);
        for (i, &v) in values.iter().enumerate() {
            let (r, c) = match v & 3 {
                0 => (1, 0),
                1 => (0, 1),
                2 => (-1, 0),
                _ => (0, -1),
            };
            self.re[i] = r;
            self.im[i] = c;
        }
        fwht_i32(&mut self.re);
        fwht_i32(&mut self.im);
    }

    pub(crate) fn max_norm_sqr(&self) -> i64 {
        self.re
            .iter()
            .zip(&self.im)
            .map(|(&r, &c)| r as i64 * r as i64 + c as i64 * c as i64)
            .max()
            .unwrap_or(0)
    }

    /// `max_u max(|Re|, |Im|)`.
    pub(crate) fn max_component(&self) -> i64 {
        self.re
            .iter()
            .zip(&self.im)
            .map(|(&r, &c)| (r.abs()).max(c.abs()) as i64)
            .max()
            .unwrap_or(0)
    }
}

/// The Fourier spectrum of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    m: u32,
    values: Vec<GaussInt<i64>>,
}

impl Spectrum {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn values(&self) -> &[GaussInt<i64>] {
        &self.values
    }

    pub fn get(&self, u: usize) -> GaussInt<i64> {
        self.values[u]
    }

    pub fn norms(&self) -> impl Iterator<Item = i64> + '_ {
        self.values.iter().map(GaussInt::norm_sqr)
    }

    pub fn max_norm_sqr(&self) -> i64 {
        self.norms().max().unwrap_or(0)
    }

    /// Parseval: the squared magnitudes sum to `4^m`.
    pub fn energy(&self) -> i64 {
        self.norms().sum()
    }
}

/// Exact spectrum by the `O(m 2^m)` butterfly.
pub fn fourier(w: &Word) -> Spectrum {
    let (mut re, mut im) = unit_parts(w);
    fwht(&mut re);
    fwht(&mut im);
    Spectrum {
        m: w.m(),
        values: re
            .into_iter()
            .zip(im)
            .map(|(r, c)| GaussInt::new(r, c))
            .collect(),
    }
}

/// The Sylvester-Hadamard matrix `H_n` built by the block recursion
/// `H_2n = [[H_n, H_n], [H_n, -H_n]]`, `H_1 = (1)`.
pub fn hadamard_matrix(m: u32) -> Vec<Vec<i8>> {
    let mut h = vec![vec![1i8]];
    for _ in 0..m {
        let n = h.len();
        let mut next = vec![vec![0i8; 2 * n]; 2 * n];
        for r in 0..n {
            for c in 0..n {
                next[r][c] = h[r][c];
                next[r][c + n] = h[r][c];
                next[r + n][c] = h[r][c];
                next[r + n][c + n] = -h[r][c];
            }
        }
        h = next;
    }
    h
}

/// `S_c(t) = sum_j w^c_j (H_n)_{j,t}` for `t = 0..n`, by direct matrix product.
pub fn mc_cdma_signal(w: &Word) -> Vec<GaussInt<i64>> {
    let h = hadamard_matrix(w.m());
    let symbols: Vec<GaussInt<i64>> = match w.alphabet() {
        Alphabet::Binary => w
            .values()
            .iter()
            .map(|&v| GaussInt::i_pow(2 * v as i64))
            .collect(),
        Alphabet::Quaternary => w
            .values()
            .iter()
            .map(|&v| GaussInt::i_pow(v as i64))
            .collect(),
    };
    (0..w.len())
        .map(|t| {
            symbols
                .iter()
                .zip(&h)
                .fold(GaussInt::new(0, 0), |acc, (&s, row)| {
                    if row[t] > 0 {
                        acc + s
                    } else {
                        acc - s
                    }
                })
        })
        .collect()
}

/// Exact PAPR `max |S|^2 / n`, kept as an unreduced fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PaprValue {
    pub numerator: u64,
    pub denominator: u64,
}

impl PaprValue {
    pub fn new(numerator: u64, denominator: u64) -> PaprValue {
        assert!(denominator > 0);
        PaprValue {
            numerator,
            denominator,
        }
    }

    pub fn is_one(&self) -> bool {
        self.numerator == self.denominator
    }

    pub fn reduced(&self) -> (u64, u64) {
        let g = gcd(self.numerator, self.denominator);
        (self.numerator / g, self.denominator / g)
    }

    /// `true` when `self <= bound` for an integer bound.
    pub fn at_most(&self, bound: u64) -> bool {
        self.numerator as u128 <= bound as u128 * self.denominator as u128
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

impl PartialOrd for PaprValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PaprValue {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.numerator as u128 * other.denominator as u128)
            .cmp(&(other.numerator as u128 * self.denominator as u128))
    }
}

impl fmt::Display for PaprValue {
    /// Lowest terms, `num/den`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.reduced();
        write!(f, "{n}/{d}")
    }
}

/// PAPR from the Fourier spectrum.
pub fn papr(w: &Word) -> PaprValue {
    PaprValue::new(fourier(w).max_norm_sqr() as u64, w.len() as u64)
}

/// PAPR from the synthesized MC-CDMA signal.
pub fn papr_via_signal(w: &Word) -> PaprValue {
    let peak = mc_cdma_signal(w)
        .iter()
        .map(GaussInt::norm_sqr)
        .max()
        .unwrap_or(0);
    PaprValue::new(peak as u64, w.len() as u64)
}

/// `|f^(u)|^2 = 2^m` for every `u`.
pub fn is_bent(w: &Word) -> bool {
    let n = w.len() as i64;
    fourier(w).norms().all(|s| s == n)
}

/// For a quaternary bent word, checks every spectral value has the shape
/// `2^(m/2) w^m i^k` with `w = (1+i)/sqrt(2)`: on the axes with magnitude
/// `2^(m/2)` for even `m`, on the diagonals with `|re| = |im| = 2^((m-1)/2)`
/// for odd `m`.
pub fn spectrum_form_check(w: &Word) -> Result<bool> {
    w.require(Alphabet::Quaternary)?;
    if !is_bent(w) {
        return Err(Error::NotBent);
    }
    let m = w.m();
    let ok = fourier(w).values().iter().all(|z| {
        let (r, c) = (z.re.abs(), z.im.abs());
        if m.is_multiple_of(2) {
            let a = 1i64 << (m / 2);
            (r == a && c == 0) || (r == 0 && c == a)
        } else {
            let a = 1i64 << ((m - 1) / 2);
            r == a && c == a
        }
    });
    Ok(ok)
}

/// Degrees of the 2-adic digits of a bent quaternary word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeBound {
    pub degree_a: u32,
    pub degree_b: u32,
    pub bound: u32,
}

impl DegreeBound {
    pub fn holds(&self) -> bool {
        self.degree_a <= self.bound && self.degree_b <= self.bound
    }
}

/// Splits a bent word as `a + 2b` and compares `deg a`, `deg b` with `ceil(m/2)`.
/// Requires `m > 2`.
pub fn degree_bound(w: &Word) -> Result<DegreeBound> {
    w.require(Alphabet::Quaternary)?;
    let m = w.m();
    if m <= 2 {
        return Err(Error::Precondition {
            what: "the bent degree bound",
            requirement: format!("m > 2, got m={m}"),
        });
    }
    if !is_bent(w) {
        return Err(Error::NotBent);
    }
    let (a, b) = w.two_adic_digits()?;
    Ok(DegreeBound {
        degree_a: Gbf::from_word(&a).degree(),
        degree_b: Gbf::from_word(&b).degree(),
        bound: m.div_ceil(2),
    })
}

pub fn degree_bound_check(w: &Word) -> Result<bool> {
    degree_bound(w).map(|d| d.holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn z4(v: &[u8]) -> Word {
        Word::z4(v.to_vec()).unwrap()
    }

    /// The defining double sum.
    fn fourier_naive(w: &Word) -> Vec<GaussInt<i64>> {
        let omega_pow = |v: u8| match w.alphabet() {
            Alphabet::Binary => GaussInt::i_pow(2 * v as i64),
            Alphabet::Quaternary => GaussInt::i_pow(v as i64),
        };
        (0..w.len())
            .map(|u| {
                w.values()
                    .iter()
                    .enumerate()
                    .fold(GaussInt::new(0, 0), |acc, (x, &v)| {
                        let term = omega_pow(v);
                        if (u & x).count_ones() % 2 == 0 {
                            acc + term
                        } else {
                            acc - term
                        }
                    })
            })
            .collect()
    }

    #[test]
    fn fourier_examples() {
        let s = fourier(&z4(&[0, 0]));
        assert_eq!(s.values(), &[GaussInt::new(2, 0), GaussInt::new(0, 0)]);
        let s = fourier(&z4(&[0, 1]));
        assert_eq!(s.values(), &[GaussInt::new(1, 1), GaussInt::new(1, -1)]);
        assert!(s.norms().all(|n| n == 2));
        let s = fourier(&z4(&[0, 1, 1, 2]));
        assert_eq!(s.get(0), GaussInt::new(0, 2));
        assert!(s.norms().all(|n| n == 4));
    }

    #[test]
    fn hadamard_recursion() {
        let h = hadamard_matrix(2);
        assert_eq!(
            h,
            vec![
                vec![1, 1, 1, 1],
                vec![1, -1, 1, -1],
                vec![1, 1, -1, -1],
                vec![1, -1, -1, 1]
            ]
        );
    }

    #[test]
    fn signal_examples() {
        let s = mc_cdma_signal(&z4(&[0, 0, 0, 0]));
        assert_eq!(
            s,
            vec![
                GaussInt::new(4, 0),
                GaussInt::new(0, 0),
                GaussInt::new(0, 0),
                GaussInt::new(0, 0)
            ]
        );
        let s = mc_cdma_signal(&z4(&[0, 1, 1, 2]));
        assert_eq!(s.iter().map(GaussInt::norm_sqr).max(), Some(4));
    }

    #[test]
    fn papr_examples() {
        let p = papr(&z4(&[0; 4]));
        assert_eq!((p.numerator, p.denominator), (16, 4));
        assert_eq!(p.to_string(), "4/1");
        assert!(papr(&z4(&[0, 1, 1, 2])).is_one());
        assert!(PaprValue::new(8, 4) > PaprValue::new(3, 2));
        assert!(PaprValue::new(8, 4).at_most(2));
        assert!(!PaprValue::new(9, 4).at_most(2));
    }

    #[test]
    fn bent_examples() {
        assert!(is_bent(&z4(&[0, 1])));
        assert!(!is_bent(&z4(&[0; 8])));
        assert!(!is_bent(&Word::zeros(Alphabet::Binary, 4)));
    }

    #[test]
    fn no_binary_bent_for_odd_m() {
        for m in [1u32, 3] {
            let n = 1usize << m;
            for idx in 0..1u32 << n {
                let w = Word::binary((0..n).map(|i| ((idx >> i) & 1) as u8).collect()).unwrap();
                assert!(!is_bent(&w));
            }
        }
    }

    #[test]
    fn spectrum_form_examples() {
        assert_eq!(spectrum_form_check(&z4(&[0, 1])), Ok(true));
        assert_eq!(spectrum_form_check(&z4(&[0, 1, 1, 2])), Ok(true));
        assert_eq!(spectrum_form_check(&z4(&[0, 0])), Err(Error::NotBent));
    }

    #[test]
    fn degree_bound_preconditions() {
        assert!(matches!(
            degree_bound_check(&z4(&[0, 1, 1, 2])),
            Err(Error::Precondition { .. })
        ));
        assert_eq!(degree_bound_check(&z4(&[0; 8])), Err(Error::NotBent));
        // x0 + x1 + x2 is bent on F^3 with both digits of degree <= 2.
        let w = Word::from_fn(Alphabet::Quaternary, 3, |x| x.count_ones() as u8);
        let d = degree_bound(&w).unwrap();
        assert!(d.holds());
        assert_eq!(d.bound, 2);
    }

    #[test]
    fn butterfly_matches_double_sum_exhaustively_small() {
        for m in 0..=3u32 {
            let n = 1usize << m;
            for idx in 0..4u64.pow(n as u32) {
                let w = z4(&(0..n)
                    .map(|i| ((idx >> (2 * i)) & 3) as u8)
                    .collect::<Vec<_>>());
                assert_eq!(fourier(&w).values(), fourier_naive(&w).as_slice());
            }
        }
    }

    #[test]
    fn butterfly_matches_double_sum_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for m in 4..=9 {
            for alphabet in [Alphabet::Binary, Alphabet::Quaternary] {
                for _ in 0..20 {
                    let w = Word::random(alphabet, m, &mut rng);
                    let s = fourier(&w);
                    assert_eq!(s.values(), fourier_naive(&w).as_slice());
                    if alphabet == Alphabet::Binary {
                        assert!(s.values().iter().all(|z| z.im == 0));
                    }
                }
            }
        }
    }

    #[test]
    fn parseval() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for m in 0..=10u32 {
            for _ in 0..1000 {
                let w = Word::random(Alphabet::Quaternary, m, &mut rng);
                assert_eq!(fourier(&w).energy(), 1i64 << (2 * m));
            }
        }
    }

    #[test]
    fn bent_iff_papr_one_exhaustive() {
        for m in 0..=2u32 {
            let n = 1usize << m;
            for idx in 0..4u64.pow(n as u32) {
                let w = z4(&(0..n)
                    .map(|i| ((idx >> (2 * i)) & 3) as u8)
                    .collect::<Vec<_>>());
                assert_eq!(is_bent(&w), papr(&w).is_one());
                assert_eq!(papr(&w), papr_via_signal(&w));
            }
        }
    }

    #[test]
    fn signal_equals_spectrum() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for m in 1..=6 {
            for _ in 0..50 {
                let w = Word::random(Alphabet::Quaternary, m, &mut rng);
                assert_eq!(mc_cdma_signal(&w), fourier(&w).values());
            }
        }
    }

    #[test]
    fn coset_shift_preserves_magnitudes() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for m in 1..=4u32 {
            for _ in 0..5 {
                let f = Word::random(Alphabet::Quaternary, m, &mut rng);
                let mut base: Vec<i64> = fourier(&f).norms().collect();
                base.sort_unstable();
                for c in 0..1u32 << m {
                    for eps in 0..4u8 {
                        let shift = Word::from_fn(Alphabet::Quaternary, m, |x| {
                            2 * ((c & x).count_ones() % 2) as u8 + eps
                        });
                        let g = f.add(&shift).unwrap();
                        let mut norms: Vec<i64> = fourier(&g).norms().collect();
                        norms.sort_unstable();
                        assert_eq!(norms, base);
                    }
                }
            }
        }
    }

    #[test]
    fn two_adic_spectrum_identity() {
        // f^ = [b^ + (a xor b)^]/2 + i [b^ - (a xor b)^]/2
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..1000 {
            let m = rand::Rng::gen_range(&mut rng, 1..=6);
            let f = Word::random(Alphabet::Quaternary, m, &mut rng);
            let (a, b) = f.two_adic_digits().unwrap();
            let axb = a.add(&b).unwrap();
            let sb = fourier(&b);
            let sx = fourier(&axb);
            let sf = fourier(&f);
            for u in 0..f.len() {
                let (bb, xx) = (sb.get(u).re, sx.get(u).re);
                let expect = GaussInt::new(bb + xx, bb - xx).div_exact(&2).unwrap();
                assert_eq!(sf.get(u), expect);
            }
        }
    }

    #[test]
    fn scratch_matches_fourier() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let mut scratch = SpectrumScratch::new(5);
        for _ in 0..100 {
            let w = Word::random(Alphabet::Quaternary, 5, &mut rng);
            scratch.load_z4(w.values());
            let s = fourier(&w);
            assert_eq!(scratch.max_norm_sqr(), s.max_norm_sqr());
            let comp = s
                .values()
                .iter()
                .map(|z| z.re.abs().max(z.im.abs()))
                .max()
                .unwrap();
            assert_eq!(scratch.max_component(), comp);
        }
    }
}
