//! Exact Gaussian integers `re + i*im`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

/// A Gaussian integer over any signed integer type.
///
/// Spectra of words of length `2^m` have parts bounded by `2^m`, so `i64`
/// is exact for every supported length; `num_bigint::BigInt` works as well.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GaussInt<T = i64> {
    pub re: T,
    pub im: T,
}

impl<T> GaussInt<T> {
    pub const fn new(re: T, im: T) -> Self {
        GaussInt { re, im }
    }
}

impl<T: Clone + Signed> GaussInt<T> {
    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussInt::new(T::one(), T::zero()),
            1 => GaussInt::new(T::zero(), T::one()),
            2 => GaussInt::new(-T::one(), T::zero()),
            _ => GaussInt::new(T::zero(), -T::one()),
        }
    }

    /// `|z|^2 = re^2 + im^2`.
    pub fn norm_sqr(&self) -> T {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    pub fn conj(&self) -> Self {
        GaussInt::new(self.re.clone(), -self.im.clone())
    }

    /// Multiplies by `i^k`.
    pub fn rotate(&self, k: i64) -> Self {
        let (re, im) = (self.re.clone(), self.im.clone());
        match k.rem_euclid(4) {
            0 => GaussInt::new(re, im),
            1 => GaussInt::new(-im, re),
            2 => GaussInt::new(-re, -im),
            _ => GaussInt::new(im, -re),
        }
    }

    /// Componentwise exact division; `None` when some part is not divisible.
    pub fn div_exact(&self, d: &T) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (qr, rr) = (self.re.clone() / d.clone(), self.re.clone() % d.clone());
        let (qi, ri) = (self.im.clone() / d.clone(), self.im.clone() % d.clone());
        if rr.is_zero() && ri.is_zero() {
            Some(GaussInt::new(qr, qi))
        } else {
            None
        }
    }
}

impl<T: Clone + Signed> Add for GaussInt<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussInt::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<T: Clone + Signed> Sub for GaussInt<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussInt::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<T: Clone + Signed> Neg for GaussInt<T> {
    type Output = Self;
    fn neg(self) -> Self {
        GaussInt::new(-self.re, -self.im)
    }
}

impl<T: Clone + Signed> Mul for GaussInt<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone();
        let im = self.re * rhs.im + self.im * rhs.re;
        GaussInt::new(re, im)
    }
}

impl<T: Clone + Signed> Zero for GaussInt<T> {
    fn zero() -> Self {
        GaussInt::new(T::zero(), T::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl<T: Clone + Signed> One for GaussInt<T> {
    fn one() -> Self {
        GaussInt::new(T::one(), T::zero())
    }
}

impl<T: fmt::Display + Signed> fmt::Display for GaussInt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type G = GaussInt<i64>;

    #[test]
    fn units() {
        let i = G::i_pow(1);
        assert_eq!(i * i, G::i_pow(2));
        assert_eq!(G::i_pow(-1), G::new(0, -1));
        assert_eq!(G::new(3, 4).norm_sqr(), 25);
        assert_eq!(G::new(3, 4).rotate(1), G::new(-4, 3));
        assert_eq!(G::new(3, 4).to_string(), "3+4i");
        assert_eq!(G::new(3, -4).to_string(), "3-4i");
        assert_eq!(G::new(4, 6).div_exact(&2), Some(G::new(2, 3)));
        assert_eq!(G::new(4, 5).div_exact(&2), None);
    }

    #[test]
    fn bigint_carrier() {
        let big = BigInt::from(1u64 << 40);
        let z = GaussInt::new(big.clone(), big.clone());
        let sq = z.clone() * z.clone();
        assert_eq!(sq.re, BigInt::from(0));
        assert_eq!(sq.im, BigInt::from(2) * &big * &big);
        assert_eq!(z.norm_sqr(), BigInt::from(2) * &big * &big);
    }

    proptest! {
        #[test]
        fn ring_axioms(a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000,
                       d in -1000i64..1000, e in -1000i64..1000, f in -1000i64..1000) {
            let x = G::new(a, b);
            let y = G::new(c, d);
            let z = G::new(e, f);
            prop_assert_eq!(x * (y + z), x * y + x * z);
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!((x * y).norm_sqr(), x.norm_sqr() * y.norm_sqr());
            prop_assert_eq!(x.rotate(1), x * G::i_pow(1));
        }
    }
}
