//! Z4-valued quadratic forms `Q(x) = x B x^T`.

use serde::{Deserialize, Serialize};

use crate::algebra::SymMatrix;
use crate::gbf::{Alphabet, Word};
use crate::spectral::{papr, PaprValue};

/// A quadratic form given by its symmetric binary matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadForm {
    matrix: SymMatrix,
}

impl QuadForm {
    pub fn new(matrix: SymMatrix) -> QuadForm {
        QuadForm { matrix }
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.matrix
    }

    pub fn m(&self) -> u32 {
        self.matrix.dim() as u32
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// `sum_j b_jj x_j + 2 sum_{j<k} b_jk x_j x_k (mod 4)` at the point `x`.
    pub fn eval(&self, x: u32) -> u8 {
        let rows = self.matrix.rows();
        let mut diag = 0u32;
        let mut off = 0u32;
        for (j, &row) in rows.iter().enumerate() {
            if (x >> j) & 1 == 1 {
                diag += (row >> j) & 1;
                // entries k > j of row j hit by x
                off += (row & x & !((2u32 << j) - 1)).count_ones();
            }
        }
        ((diag + 2 * off) % 4) as u8
    }

    pub fn word(&self) -> Word {
        Word::from_fn(Alphabet::Quaternary, self.m(), |x| self.eval(x))
    }
}

/// Value word of the quadratic form of `b`.
pub fn quad_form_word(b: &SymMatrix) -> Word {
    QuadForm::new(b.clone()).word()
}

/// Exact PAPR of a quadratic-form coset next to the bound `2^(m - rank)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetPaprCheck {
    pub papr: PaprValue,
    pub rank: usize,
    pub bound: u64,
    pub bound_ok: bool,
}

/// PAPR of `Q_B`, shared by every word of `Q_B + ZRM(1,m)`, against `2^(m - rk B)`.
pub fn coset_papr_bound_check(b: &SymMatrix) -> CosetPaprCheck {
    let form = QuadForm::new(b.clone());
    let rank = form.rank();
    let value = papr(&form.word());
    let bound = 1u64 << (form.m() as usize - rank);
    CosetPaprCheck {
        papr: value,
        rank,
        bound,
        bound_ok: value.at_most(bound),
    }
}
