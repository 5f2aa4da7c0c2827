//! GF(2^m) in the polynomial basis of a fixed irreducible modulus.
//!
//! Elements are bit vectors: bit `j` is the coordinate on `alpha^j`, where
//! `alpha` is the class of `x` modulo the modulus. The basis element
//! `lambda_j` used by the bilinear-form matrices is therefore `1 << j`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One irreducible (in fact primitive) polynomial per degree, bit `d` being
/// the coefficient of `x^d`. Index 0 is unused.
pub const DEFAULT_MODULI: [u32; 17] = [
    0, 0x3, 0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11D, 0x211, 0x409, 0x805, 0x1053, 0x201B, 0x4443,
    0x8003, 0x1100B,
];

/// An element of GF(2^m), stored as its coordinate vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElem(pub u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Coordinate `j` relative to the polynomial basis.
    pub fn coord(self, j: u32) -> u8 {
        ((self.0 >> j) & 1) as u8
    }
}

// characteristic 2: addition is XOR
#[allow(clippy::suspicious_arithmetic_impl)]
impl std::ops::Add for FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: FieldElem) -> FieldElem {
        FieldElem(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl std::ops::AddAssign for FieldElem {
    fn add_assign(&mut self, rhs: FieldElem) {
        self.0 ^= rhs.0;
    }
}

/// The field GF(2^m) = GF(2)[x] / (modulus).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    m: u32,
    modulus: u32,
    /// Bit `j` is `tr(alpha^j)`; the trace of `x` is the parity of `x & trace_mask`.
    trace_mask: u32,
}

fn poly_degree(p: u64) -> u32 {
    63 - p.leading_zeros()
}

fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = poly_degree(b);
    while a != 0 && poly_degree(a) >= db {
        a ^= b << (poly_degree(a) - db);
    }
    a
}

/// Trial division by every polynomial of degree `1..=deg/2`.
fn is_irreducible(p: u32) -> bool {
    let p = p as u64;
    let deg = poly_degree(p);
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        for q in (1u64 << d)..(1u64 << (d + 1)) {
            if poly_rem(p, q) == 0 {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Builds GF(2^m) from an explicit modulus.
    pub fn new(m: u32, modulus: u32) -> Result<Field> {
        if !(1..=16).contains(&m) {
            return Err(Error::FieldDegree(m));
        }
        let found = if modulus == 0 {
            0
        } else {
            poly_degree(modulus as u64)
        };
        if modulus == 0 || found != m {
            return Err(Error::ModulusDegree {
                modulus,
                expected: m,
                found,
            });
        }
        if !is_irreducible(modulus) {
            return Err(Error::Reducible(modulus));
        }
        let mut field = Field {
            m,
            modulus,
            trace_mask: 0,
        };
        let mut mask = 0;
        for j in 0..m {
            if field.trace_by_frobenius(FieldElem(1 << j)) == 1 {
                mask |= 1 << j;
            }
        }
        field.trace_mask = mask;
        Ok(field)
    }

    /// GF(2^m) with the modulus from [`DEFAULT_MODULI`].
    pub fn with_default_modulus(m: u32) -> Result<Field> {
        if !(1..=16).contains(&m) {
            return Err(Error::FieldDegree(m));
        }
        Field::new(m, DEFAULT_MODULI[m as usize])
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn order(&self) -> u32 {
        1 << self.m
    }

    /// The basis element `alpha^j`.
    pub fn basis(&self, j: u32) -> FieldElem {
        debug_assert!(j < self.m);
        FieldElem(1 << j)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.order()).map(FieldElem)
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let mut acc: u32 = 0;
        let mut a = a.0;
        let mut b = b.0;
        let top = 1u32 << self.m;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.modulus;
            }
        }
        FieldElem(acc)
    }

    pub fn square(&self, a: FieldElem) -> FieldElem {
        self.mul(a, a)
    }

    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut base = a;
        let mut acc = FieldElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    /// `a^(2^j)`, the j-th Frobenius conjugate.
    pub fn frobenius(&self, a: FieldElem, j: u32) -> FieldElem {
        let mut x = a;
        for _ in 0..(j % self.m) {
            x = self.square(x);
        }
        x
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        if a.is_zero() {
            None
        } else {
            Some(self.pow(a, (1u64 << self.m) - 2))
        }
    }

    /// Absolute trace to GF(2).
    pub fn trace(&self, a: FieldElem) -> u8 {
        ((a.0 & self.trace_mask).count_ones() & 1) as u8
    }

    /// The trace as the sum of the `m` Frobenius conjugates.
    pub fn trace_by_frobenius(&self, a: FieldElem) -> u8 {
        let mut sum = FieldElem::ZERO;
        let mut x = a;
        for _ in 0..self.m {
            sum += x;
            x = self.square(x);
        }
        debug_assert!(sum.0 <= 1, "trace left the prime field");
        sum.0 as u8
    }

    /// Mask `M` with `tr(c * v) = parity(v & M)` for every `v`.
    pub fn trace_form_mask(&self, c: FieldElem) -> u32 {
        let mut mask = 0;
        for j in 0..self.m {
            if self.trace(self.mul(c, FieldElem(1 << j))) == 1 {
                mask |= 1 << j;
            }
        }
        mask
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m:{} modulus:{:#x}", self.m, self.modulus)
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Parses `m:<int> modulus:<hex bitmask>`; `modulus:default` is accepted too.
    fn from_str(s: &str) -> Result<Field> {
        let bad = |message: &str| Error::Parse {
            line: 1,
            message: message.to_string(),
        };
        let mut m = None;
        let mut modulus = None;
        for part in s.split_whitespace() {
            if let Some(v) = part.strip_prefix("m:") {
                m = Some(v.parse::<u32>().map_err(|_| bad("bad m"))?);
            } else if let Some(v) = part.strip_prefix("modulus:") {
                modulus = Some(if v == "default" {
                    None
                } else {
                    let hex = v.trim_start_matches("0x").trim_start_matches("0X");
                    Some(u32::from_str_radix(hex, 16).map_err(|_| bad("bad modulus"))?)
                });
            } else {
                return Err(bad("unexpected token in field description"));
            }
        }
        let m = m.ok_or_else(|| bad("missing m"))?;
        match modulus.ok_or_else(|| bad("missing modulus"))? {
            Some(p) => Field::new(m, p),
            None => Field::with_default_modulus(m),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_primitive_modulus() {
        let f = Field::new(3, 0b1011).unwrap();
        assert_eq!(f.order(), 8);
        // alpha^3 = alpha + 1
        let a = f.basis(1);
        assert_eq!(f.pow(a, 3), FieldElem(0b011));
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^3 + x^2 + x + 1 = (x + 1)^3
        assert_eq!(Field::new(3, 0b1111), Err(Error::Reducible(0b1111)));
        assert!(matches!(
            Field::new(3, 0b10011),
            Err(Error::ModulusDegree { found: 4, .. })
        ));
        assert_eq!(Field::new(0, 1), Err(Error::FieldDegree(0)));
        assert_eq!(Field::new(17, 1), Err(Error::FieldDegree(17)));
    }

    #[test]
    fn default_table_is_irreducible() {
        for m in 1..=16 {
            let f = Field::with_default_modulus(m).unwrap();
            assert_eq!(f.m(), m);
        }
    }

    #[test]
    fn multiplicative_order_divides_2m_minus_1() {
        let f = Field::with_default_modulus(4).unwrap();
        for x in f.elements().skip(1) {
            assert_eq!(f.pow(x, 15), FieldElem::ONE);
            let inv = f.inv(x).unwrap();
            assert_eq!(f.mul(x, inv), FieldElem::ONE);
        }
        assert_eq!(f.inv(FieldElem::ZERO), None);
    }

    #[test]
    fn frobenius_closure() {
        for m in 1..=8 {
            let f = Field::with_default_modulus(m).unwrap();
            for x in f.elements() {
                assert_eq!(f.frobenius_full(x), x, "m={m} x={x:?}");
            }
        }
    }

    impl Field {
        fn frobenius_full(&self, x: FieldElem) -> FieldElem {
            let mut y = x;
            for _ in 0..self.m {
                y = self.square(y);
            }
            y
        }
    }

    #[test]
    fn trace_examples() {
        let f3 = Field::new(3, 0b1011).unwrap();
        assert_eq!(f3.trace(FieldElem::ZERO), 0);
        assert_eq!(f3.trace(FieldElem::ONE), 1);
        let f4 = Field::with_default_modulus(4).unwrap();
        let ones = f4.elements().filter(|&x| f4.trace(x) == 1).count();
        assert_eq!(ones, 8);
    }

    #[test]
    fn trace_is_linear_balanced_and_matches_definition() {
        for m in 1..=8 {
            let f = Field::with_default_modulus(m).unwrap();
            let mut zeros = 0;
            for x in f.elements() {
                assert_eq!(f.trace(x), f.trace_by_frobenius(x));
                if f.trace(x) == 0 {
                    zeros += 1;
                }
                for y in f.elements().step_by(7) {
                    assert_eq!(f.trace(x + y), f.trace(x) ^ f.trace(y));
                }
            }
            assert_eq!(zeros, 1 << (m - 1));
        }
    }

    #[test]
    fn description_round_trip() {
        let f = Field::with_default_modulus(5).unwrap();
        assert_eq!(f.to_string(), "m:5 modulus:0x25");
        assert_eq!(f.to_string().parse::<Field>().unwrap(), f);
        assert_eq!("m:5 modulus:default".parse::<Field>().unwrap(), f);
        assert!("m:3 modulus:0xf".parse::<Field>().is_err());
    }
}
