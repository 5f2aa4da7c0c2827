//! The Gray map `Z_4 -> F^2` and the binary-to-quaternary bent liftings.
//!
//! Two word orders appear here. [`gray`] interleaves the two output bits of
//! each symbol, so the image read as a function on `F^(m+1)` has the new
//! variable `y` in the least significant index bit: `phi(f)(x, y) = a(x) y + b(x)`.
//! [`lift_odd_offset`] concatenates two halves instead, putting `y` in the most
//! significant bit. The two orders differ by the index rotation
//! `(x, y) -> (y, x)`; distances and bentness are unaffected.

use crate::error::{Error, Result};
use crate::gbf::{Alphabet, Permutation, Word};

/// `0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10`, symbol by symbol.
pub fn gray(w: &Word) -> Result<Word> {
    w.require(Alphabet::Quaternary)?;
    let mut out = Vec::with_capacity(2 * w.len());
    for &z in w.values() {
        let (a, b) = (z & 1, z >> 1);
        out.push(b);
        out.push(a ^ b);
    }
    Word::binary(out)
}

pub fn gray_inverse(bits: &Word) -> Result<Word> {
    bits.require(Alphabet::Binary)?;
    if bits.len() % 2 == 1 {
        return Err(Error::OddLength(bits.len()));
    }
    let out = bits
        .values()
        .chunks_exact(2)
        .map(|p| {
            let b = p[0];
            let a = p[0] ^ p[1];
            a + 2 * b
        })
        .collect();
    Word::z4(out)
}

fn same_length(a: &Word, b: &Word) -> Result<()> {
    a.require(Alphabet::Binary)?;
    b.require(Alphabet::Binary)?;
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(())
}

/// `(2a + eps | 2b + (1 + eps))`, the word of
/// `f(x, y) = 2a(x)(1 + y) + 2b(x)y + y` shifted by `eps`.
pub fn lift_odd_offset(a: &Word, b: &Word, eps: bool) -> Result<Word> {
    same_length(a, b)?;
    let e = eps as u8;
    let first = a.values().iter().map(|&v| (2 * v + e) % 4);
    let second = b.values().iter().map(|&v| (2 * v + 1 + e) % 4);
    Word::z4(first.chain(second).collect())
}

/// `f = 2b + (a xor b)`, the Gray preimage of `g(x, y) = a(x) y + b(x)(1 + y)`.
pub fn lift_even(a: &Word, b: &Word) -> Result<Word> {
    same_length(a, b)?;
    Word::z4(
        a.values()
            .iter()
            .zip(b.values())
            .map(|(&x, &y)| 2 * y + (x ^ y))
            .collect(),
    )
}

/// The Gray preimage of a binary word of length `2^(m+1)`.
pub fn lift_gray_preimage(g: &Word) -> Result<Word> {
    gray_inverse(g)
}

/// Binary Maiorana-McFarland function `g(x, y) = sigma(x).y + h(x)` on `F^(2k)`,
/// with `x` in the low `k` index bits and `y` in the high `k` bits.
pub fn mm_binary_bent(sigma: &Permutation, h: &Word) -> Result<Word> {
    h.require(Alphabet::Binary)?;
    let k = sigma.k();
    if h.m() != k {
        return Err(Error::LengthMismatch {
            left: 1 << k,
            right: h.len(),
        });
    }
    let mask = (1u32 << k) - 1;
    Ok(Word::from_fn(Alphabet::Binary, 2 * k, |idx| {
        let (x, y) = (idx & mask, idx >> k);
        ((sigma.apply(x) & y).count_ones() as u8 + h.values()[x as usize]) & 1
    }))
}

/// Code `{(2a + eps | 2b + 1 + eps) : a, b in B, eps in F}`.
pub fn odd_offset_code(code: &[Word]) -> Result<Vec<Word>> {
    let mut out = Vec::with_capacity(2 * code.len() * code.len());
    for a in code {
        for b in code {
            for eps in [false, true] {
                out.push(lift_odd_offset(a, b, eps)?);
            }
        }
    }
    Ok(out)
}

/// `{lift_even(a, b) : a, b in B}`.
pub fn even_code(code: &[Word]) -> Result<Vec<Word>> {
    let mut out = Vec::with_capacity(code.len() * code.len());
    for a in code {
        for b in code {
            out.push(lift_even(a, b)?);
        }
    }
    Ok(out)
}

/// `{gray_inverse(g) : g in B}`.
pub fn gray_preimage_code(code: &[Word]) -> Result<Vec<Word>> {
    code.iter().map(lift_gray_preimage).collect()
}
