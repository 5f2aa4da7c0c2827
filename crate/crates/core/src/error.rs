use thiserror::Error;

/// Errors raised by constructions, checks and parsers in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field degree m={0} outside the supported range 1..=16")]
    FieldDegree(u32),
    #[error("modulus {modulus:#x} has degree {found}, expected {expected}")]
    ModulusDegree {
        modulus: u32,
        expected: u32,
        found: u32,
    },
    #[error("modulus {0:#x} is reducible over GF(2)")]
    Reducible(u32),
    #[error("linearized polynomial order t={t} requires t < m/2 (m={m})")]
    LinPolyOrder { t: usize, m: u32 },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("word length {0} is not a power of two")]
    LengthNotPowerOfTwo(usize),
    #[error("word length {0} is odd")]
    OddLength(usize),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("symbol {value} at position {position} is not in Z_{modulus}")]
    SymbolOutOfRange {
        value: u8,
        position: usize,
        modulus: u8,
    },
    #[error("only h=1 (binary) and h=2 (quaternary) are supported, got h={0}")]
    UnsupportedRing(u32),
    #[error("expected a {expected} word")]
    WrongAlphabet { expected: &'static str },
    #[error("map on F^{k} is not a bijection: image {image:#x} appears twice")]
    NotBijective { k: u32, image: u32 },
    #[error("word is not bent")]
    NotBent,
    #[error("{what} requires {requirement}")]
    Precondition {
        what: &'static str,
        requirement: String,
    },
    #[error("{what} is too large to enumerate (about 2^{log2_size} items)")]
    TooLarge { what: &'static str, log2_size: u32 },
    #[error("representatives {first} and {second} lie in the same coset of ZRM(1,m)")]
    DuplicateCoset { first: usize, second: usize },
    #[error("need {needed} eligible cosets but only {found} exist")]
    InsufficientCosets { needed: u64, found: u64 },
    #[error("code has fewer than two words")]
    SingletonCode,
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
