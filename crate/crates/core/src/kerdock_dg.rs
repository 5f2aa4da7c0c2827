//! Kerdock and Delsarte-Goethals codes over Z4 from the matrices of the
//! bilinear forms `B_a(x, y) = tr(y L_a(x))`.
//!
//! The tuple `a = (a_0, ..., a_t)` is indexed by the integer whose top `m`
//! bits are `a_0`, next `m` bits `a_1`, and so on, so index order is
//! lexicographic with `a_0` most significant. `a -> B_a` is GF(2)-linear,
//! so `M(t,m)` is spanned by the matrices of the single-bit indices.

use crate::algebra::{BilinearTables, Field, FieldElem, SymMatrix};
use crate::codes::{quad_form_word, CosetUnion};
use crate::error::{Error, Result};
use crate::gbf::{Alphabet, Gbf, Word};
use crate::spectral::SpectrumScratch;

/// The set `M(t,m)` of matrices `B_a`, `a in E^(t+1)`.
#[derive(Debug, Clone)]
pub struct MtmSet {
    t: usize,
    field: Field,
    tables: BilinearTables,
    /// `basis[i]` is the matrix of index `1 << i`, as rows.
    basis: Vec<Vec<u32>>,
}

impl MtmSet {
    pub fn new(field: Field, t: usize) -> Result<MtmSet> {
        let m = field.m() as usize;
        if 2 * t >= m {
            return Err(Error::LinPolyOrder { t, m: m as u32 });
        }
        let tables = BilinearTables::new(&field);
        let mut set = MtmSet {
            t,
            field,
            tables,
            basis: Vec::new(),
        };
        set.basis = (0..set.log2_len())
            .map(|i| set.matrix_direct(1u64 << i).rows().to_vec())
            .collect();
        Ok(set)
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn m(&self) -> u32 {
        self.field.m()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// `m (t + 1)`.
    pub fn log2_len(&self) -> u32 {
        self.m() * (self.t as u32 + 1)
    }

    /// The coefficient tuple with the given index.
    pub fn tuple(&self, index: u64) -> Vec<FieldElem> {
        let m = self.m();
        let mask = (1u64 << m) - 1;
        (0..=self.t as u32)
            .map(|j| FieldElem(((index >> (m * (self.t as u32 - j))) & mask) as u32))
            .collect()
    }

    /// Index of a coefficient tuple, inverse of [`MtmSet::tuple`].
    pub fn index_of(&self, a: &[FieldElem]) -> u64 {
        a.iter().fold(0u64, |acc, e| (acc << self.m()) | e.0 as u64)
    }

    /// `B_a` evaluated from the field arithmetic.
    pub fn matrix_direct(&self, index: u64) -> SymMatrix {
        self.tables.matrix(&self.field, &self.tuple(index))
    }

    /// `B_a` assembled from the basis matrices.
    pub fn matrix_at(&self, index: u64) -> SymMatrix {
        let m = self.m() as usize;
        let mut rows = vec![0u32; m];
        for (i, b) in self.basis.iter().enumerate() {
            if (index >> i) & 1 == 1 {
                for (r, x) in rows.iter_mut().zip(b) {
                    *r ^= x;
                }
            }
        }
        SymMatrix::from_rows(m, rows).expect("sums of symmetric matrices")
    }

    /// All matrices in index order.
    pub fn matrices(&self) -> impl Iterator<Item = SymMatrix> + '_ {
        (0..1u64 << self.log2_len()).map(move |i| self.matrix_at(i))
    }

    /// Index of `b` in the set, by elimination over the basis matrices.
    /// Supports `m <= 15`.
    pub fn find(&self, b: &SymMatrix) -> Option<u64> {
        let m = self.m() as usize;
        if b.dim() != m {
            return None;
        }
        if SymMatrix::free_entries(m) > 128 {
            return None;
        }
        // upper triangles, row j contributing its m - j entries from column j
        let flat = |rows: &[u32]| -> u128 {
            let mut acc = 0u128;
            let mut offset = 0;
            for (j, &r) in rows.iter().enumerate() {
                acc |= ((r >> j) as u128) << offset;
                offset += m - j;
            }
            acc
        };
        // echelon basis with the index combination that produced each row
        let mut pivots: Vec<(u128, u64)> = Vec::new();
        for (i, rows) in self.basis.iter().enumerate() {
            let mut v = (flat(rows), 1u64 << i);
            for &(p, c) in &pivots {
                if v.0 ^ p < v.0 {
                    v = (v.0 ^ p, v.1 ^ c);
                }
            }
            if v.0 != 0 {
                pivots.push(v);
                pivots.sort_by_key(|p| std::cmp::Reverse(p.0));
            }
        }
        let mut target = (flat(b.rows()), 0u64);
        for &(p, c) in &pivots {
            if target.0 ^ p < target.0 {
                target = (target.0 ^ p, target.1 ^ c);
            }
        }
        (target.0 == 0).then_some(target.1)
    }

    /// Number of members of each rank `0..=m`, by a Gray-code walk.
    pub fn rank_distribution(&self) -> Result<Vec<u64>> {
        let n = self.log2_len();
        if n > 24 {
            return Err(Error::TooLarge {
                what: "M(t,m) enumeration",
                log2_size: n,
            });
        }
        let m = self.m() as usize;
        let mut hist = vec![0u64; m + 1];
        let mut rows = vec![0u32; m];
        let mut scratch = vec![0u32; m];
        hist[0] += 1;
        for step in 1u64..(1 << n) {
            let bit = step.trailing_zeros() as usize;
            for (r, x) in rows.iter_mut().zip(&self.basis[bit]) {
                *r ^= x;
            }
            scratch.copy_from_slice(&rows);
            hist[gf2_rank(&mut scratch)] += 1;
        }
        Ok(hist)
    }
}

/// Rank over GF(2) of the rows, destroying them.
fn gf2_rank(rows: &mut [u32]) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let pivot = rows[i];
        if pivot == 0 {
            continue;
        }
        rank += 1;
        let low = pivot & pivot.wrapping_neg();
        for r in rows[i + 1..].iter_mut() {
            if *r & low != 0 {
                *r ^= pivot;
            }
        }
    }
    rank
}

/// Exact number of nonsingular matrices in `M(t,m)`; needs `m (t+1) <= 24`.
pub fn count_nonsingular_in_mtm(set: &MtmSet) -> Result<u64> {
    Ok(set.rank_distribution()?[set.m() as usize])
}

/// `2^m - 1 + (2^m + 1)(2^m - 1)/3`, the nonsingular count of `M(1,m)`.
pub fn nonsingular_mtm1_formula(m: u32) -> u64 {
    let q = 1u64 << m;
    q - 1 + (q + 1) * (q - 1) / 3
}

/// `2^((t+1) m - 2)`.
pub fn nonsingular_lower_bound(t: usize, m: u32) -> u64 {
    1u64 << ((t as u32 + 1) * m - 2)
}

/// `DG(t,m)`: the union of the cosets `Q_B + ZRM(1,m)` over `B` in `M(t,m)`.
#[derive(Debug, Clone)]
pub struct DgCode {
    set: MtmSet,
}

impl DgCode {
    pub fn new(field: Field, t: usize) -> Result<DgCode> {
        Ok(DgCode {
            set: MtmSet::new(field, t)?,
        })
    }

    pub fn with_default_field(m: u32, t: usize) -> Result<DgCode> {
        DgCode::new(Field::with_default_modulus(m)?, t)
    }

    pub fn set(&self) -> &MtmSet {
        &self.set
    }

    pub fn t(&self) -> usize {
        self.set.t
    }

    pub fn m(&self) -> u32 {
        self.set.m()
    }

    pub fn log2_coset_count(&self) -> u32 {
        self.set.log2_len()
    }

    /// `m (t + 2) + 2`.
    pub fn log2_size(&self) -> u32 {
        self.m() * (self.t() as u32 + 2) + 2
    }

    /// `2^m - 2^(t + floor(m/2))`.
    pub fn min_distance_formula(&self) -> u32 {
        (1u32 << self.m()) - (1u32 << (self.t() as u32 + self.m() / 2))
    }

    /// The code as an explicit coset union; needs `m (t+1) <= 22`.
    pub fn cosets(&self) -> Result<CosetUnion> {
        let n = self.set.log2_len();
        if n > 22 {
            return Err(Error::TooLarge {
                what: "DG coset list",
                log2_size: n,
            });
        }
        CosetUnion::from_forms(self.m(), self.set.matrices().collect())
    }

    /// Membership: `w` must reduce modulo ZRM(1,m) to some `Q_B`, `B` in `M(t,m)`.
    pub fn contains(&self, w: &Word) -> bool {
        let m = self.m();
        if !w.is_quaternary() || w.m() != m {
            return false;
        }
        let anf = Gbf::from_word(w);
        let mut b = SymMatrix::zero(m as usize);
        for (mask, c) in anf.terms() {
            match mask.count_ones() {
                0 => {}
                1 => b.set(
                    mask.trailing_zeros() as usize,
                    mask.trailing_zeros() as usize,
                    c % 2,
                ),
                2 if c % 2 == 0 => {
                    let j = mask.trailing_zeros() as usize;
                    let k = 31 - mask.leading_zeros() as usize;
                    b.set(j, k, c / 2);
                }
                _ => return false,
            }
        }
        self.set.find(&b).is_some()
    }

    /// Exact minimum Lee distance: by linearity, the smaller of `2^m` and the
    /// least coset minimum weight of a nonzero member of `M(t,m)`.
    pub fn min_lee_distance(&self) -> Result<u32> {
        let n = self.set.log2_len();
        if n > 24 {
            return Err(Error::TooLarge {
                what: "DG distance scan",
                log2_size: n,
            });
        }
        let mut scratch = SpectrumScratch::new(self.m());
        let len = 1i64 << self.m();
        let mut best = len as u32;
        for i in 1u64..(1 << n) {
            let w = quad_form_word(&self.set.matrix_at(i));
            scratch.load_z4(w.values());
            best = best.min((len - scratch.max_component()) as u32);
        }
        Ok(best)
    }
}

/// `K(m) = DG(0,m)` over the default field.
pub fn kerdock(m: u32) -> Result<DgCode> {
    DgCode::with_default_field(m, 0)
}

/// `DG(t,m)` over the default field.
pub fn dg(t: usize, m: u32) -> Result<DgCode> {
    DgCode::with_default_field(m, t)
}

/// The first `needed` nonsingular members of `M(t,m)` in index order.
fn first_nonsingular(set: &MtmSet, needed: u64) -> Result<Vec<SymMatrix>> {
    let mut out = Vec::with_capacity(needed as usize);
    for i in 0u64..(1 << set.log2_len()) {
        let b = set.matrix_at(i);
        if b.is_nonsingular() {
            out.push(b);
            if out.len() as u64 == needed {
                return Ok(out);
            }
        }
    }
    Err(Error::InsufficientCosets {
        needed,
        found: out.len() as u64,
    })
}

/// `2^(m-1)` cosets of `K(m)` with nonsingular `B_a`, smallest `a_0` first.
/// Rate `(2m + 1)/2^m`, PAPR 1, minimum Lee distance `2^m - 2^floor(m/2)`.
pub fn kerdock_subcode(field: Field) -> Result<CosetUnion> {
    let m = field.m();
    if m < 2 {
        return Err(Error::Precondition {
            what: "Kerdock subcode",
            requirement: format!("m >= 2, got m={m}"),
        });
    }
    let set = MtmSet::new(field, 0)?;
    CosetUnion::from_forms(m, first_nonsingular(&set, 1 << (m - 1))?)
}

/// `2^((t+1)m - 2)` cosets of `DG(t,m)` with nonsingular `B_a`, in index
/// order. Rate `(t + 2)m / 2^m`, PAPR 1, minimum Lee distance
/// `2^m - 2^(t + floor(m/2))`.
pub fn dg_subcode(field: Field, t: usize) -> Result<CosetUnion> {
    let m = field.m();
    if t < 1 {
        return Err(Error::Precondition {
            what: "Delsarte-Goethals subcode",
            requirement: "t >= 1".into(),
        });
    }
    let set = MtmSet::new(field, t)?;
    let log2_needed = set.log2_len() - 2;
    if log2_needed > 22 {
        return Err(Error::TooLarge {
            what: "Delsarte-Goethals subcode",
            log2_size: log2_needed,
        });
    }
    CosetUnion::from_forms(m, first_nonsingular(&set, 1 << log2_needed)?)
}

/// A random word of the code `DG(t,m)`.
pub fn random_dg_word<R: rand::Rng + ?Sized>(code: &DgCode, rng: &mut R) -> Word {
    let m = code.m();
    let b = code
        .set
        .matrix_at(rng.gen_range(0..1u64 << code.set.log2_len()));
    let c: u8 = rng.gen_range(0..4);
    let u: u32 = rng.gen_range(0..1u32 << m);
    let affine = Word::from_fn(Alphabet::Quaternary, m, |x| {
        (c + 2 * ((x & u).count_ones() % 2) as u8) % 4
    });
    quad_form_word(&b).add(&affine).expect("same length")
}
