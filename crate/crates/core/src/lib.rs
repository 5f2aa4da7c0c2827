//! Quaternary constant-amplitude codes for multicode CDMA.
//!
//! Words of length `2^m` over Z4 (or Z2) are value lists of generalized
//! Boolean functions, indexed so that position `l = sum l_j 2^j` holds
//! `f(l_0, ..., l_{m-1})`. A word has PAPR 1 exactly when it is bent, which
//! is decided by an exact Fourier transform over the Gaussian integers.

pub mod algebra;
pub mod codes;
pub mod constructions;
pub mod error;
pub mod format;
pub mod gbf;
pub mod graymap;
pub mod kerdock_dg;
pub mod spectral;
pub mod table;

pub use error::{Error, Result};
pub use gbf::{Alphabet, Gbf, Permutation, Word};
