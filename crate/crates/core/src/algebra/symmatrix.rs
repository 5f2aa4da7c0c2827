//! Symmetric binary matrices stored as bitmask rows.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An `m x m` symmetric matrix over GF(2). Bit `k` of `rows[j]` is entry `(j, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymMatrix {
    m: usize,
    rows: Vec<u32>,
}

impl SymMatrix {
    pub fn from_rows(m: usize, rows: Vec<u32>) -> Result<SymMatrix> {
        assert!(m <= 32 && rows.len() == m, "dimension mismatch");
        let mask = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
        for (j, &r) in rows.iter().enumerate() {
            assert!(r & !mask == 0, "row {j} has bits beyond column {m}");
        }
        let b = SymMatrix { m, rows };
        for j in 0..m {
            for k in (j + 1)..m {
                if b.get(j, k) != b.get(k, j) {
                    return Err(Error::NotSymmetric { row: j, col: k });
                }
            }
        }
        Ok(b)
    }

    pub fn zero(m: usize) -> SymMatrix {
        SymMatrix {
            m,
            rows: vec![0; m],
        }
    }

    pub fn identity(m: usize) -> SymMatrix {
        SymMatrix {
            m,
            rows: (0..m).map(|j| 1u32 << j).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn get(&self, j: usize, k: usize) -> u8 {
        ((self.rows[j] >> k) & 1) as u8
    }

    /// Sets `(j, k)` and `(k, j)`.
    pub fn set(&mut self, j: usize, k: usize, bit: u8) {
        for (r, c) in [(j, k), (k, j)] {
            if bit & 1 == 1 {
                self.rows[r] |= 1 << c;
            } else {
                self.rows[r] &= !(1 << c);
            }
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.m).all(|j| (j + 1..self.m).all(|k| self.get(j, k) == self.get(k, j)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// `x B y^T` for coordinate bit vectors `x`, `y`.
    pub fn form(&self, x: u32, y: u32) -> u8 {
        let mut acc = 0u32;
        for (j, &r) in self.rows.iter().enumerate() {
            if (x >> j) & 1 == 1 {
                acc ^= (r & y).count_ones() & 1;
            }
        }
        acc as u8
    }

    /// Rank over GF(2) by row reduction.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.m {
            let bit = 1u32 << col;
            let Some(p) = (rank..self.m).find(|&r| rows[r] & bit != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && *row & bit != 0 {
                    *row ^= pivot;
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_nonsingular(&self) -> bool {
        self.rank() == self.m
    }

    /// `m - rank`, the dimension of `{z : z B = 0}`.
    pub fn kernel_dim(&self) -> usize {
        self.m - self.rank()
    }

    /// Number of free entries (the upper triangle with the diagonal).
    pub fn free_entries(m: usize) -> usize {
        m * (m + 1) / 2
    }

    /// Upper-triangle entries in row-major order packed with `(0, 0)` as the
    /// most significant bit, so integer order is row-major lexicographic order.
    pub fn lex_key(&self) -> u64 {
        let n = Self::free_entries(self.m);
        let mut key = 0u64;
        let mut p = 0;
        for j in 0..self.m {
            for k in j..self.m {
                key |= (self.get(j, k) as u64) << (n - 1 - p);
                p += 1;
            }
        }
        key
    }

    pub fn from_lex_key(m: usize, key: u64) -> SymMatrix {
        let n = Self::free_entries(m);
        debug_assert!(n == 64 || key >> n == 0);
        let mut b = SymMatrix::zero(m);
        let mut p = 0;
        for j in 0..m {
            for k in j..m {
                if (key >> (n - 1 - p)) & 1 == 1 {
                    b.rows[j] |= 1 << k;
                    b.rows[k] |= 1 << j;
                }
                p += 1;
            }
        }
        b
    }

    /// Every symmetric `m x m` matrix in lexicographic order.
    pub fn all(m: usize) -> impl Iterator<Item = SymMatrix> {
        (0..1u64 << Self::free_entries(m)).map(move |key| SymMatrix::from_lex_key(m, key))
    }
}

impl std::ops::Add for &SymMatrix {
    type Output = SymMatrix;
    fn add(self, rhs: &SymMatrix) -> SymMatrix {
        assert_eq!(self.m, rhs.m);
        SymMatrix {
            m: self.m,
            rows: self
                .rows
                .iter()
                .zip(&rhs.rows)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }
}

impl fmt::Display for SymMatrix {
    /// `m` lines of `m` bits, row-major.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.m {
            for k in 0..self.m {
                write!(f, "{}", self.get(j, k))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for SymMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<SymMatrix> {
        let lines: Vec<&str> = s.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        let m = lines.len();
        let mut rows = vec![0u32; m];
        for (j, line) in lines.iter().enumerate() {
            if line.len() != m {
                return Err(Error::Parse {
                    line: j + 1,
                    message: format!("expected {m} bits, found {}", line.len()),
                });
            }
            for (k, ch) in line.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => rows[j] |= 1 << k,
                    _ => {
                        return Err(Error::Parse {
                            line: j + 1,
                            message: format!("unexpected character {ch:?}"),
                        })
                    }
                }
            }
        }
        SymMatrix::from_rows(m, rows)
    }
}

/// `N(m)`, the number of nonsingular symmetric `m x m` matrices over GF(2).
pub fn nonsingular_symmetric_formula(m: u32) -> u128 {
    let pow = |e: u32| 1u128 << e;
    if m == 0 {
        return 1;
    }
    if m.is_multiple_of(2) {
        (1..=m / 2).map(|j| pow(m + 1) - pow(2 * j)).product()
    } else {
        (0..=(m - 1) / 2).map(|j| pow(m) - pow(2 * j)).product()
    }
}

/// Counts nonsingular symmetric matrices by enumerating all `2^(m(m+1)/2)` of them.
pub fn count_nonsingular_symmetric(m: u32) -> Result<u64> {
    if !(1..=6).contains(&m) {
        return Err(Error::Precondition {
            what: "exhaustive symmetric-matrix count",
            requirement: format!("1 <= m <= 6, got m={m}"),
        });
    }
    Ok(SymMatrix::all(m as usize)
        .filter(SymMatrix::is_nonsingular)
        .count() as u64)
}
