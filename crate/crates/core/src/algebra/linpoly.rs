//! Linearized polynomials `L_a(x) = a_0 x + sum_{j=1..t} (a_j x^(2^j) + a_j^(2^(m-j)) x^(2^(m-j)))`
//! and the symmetric bilinear forms `B_a(x, y) = tr(y L_a(x))` they induce.

use super::field::{Field, FieldElem};
use super::symmatrix::SymMatrix;
use crate::error::{Error, Result};

/// Coefficient tuple `(a_0, ..., a_t)` with `t < m/2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinPoly {
    coeffs: Vec<FieldElem>,
}

impl LinPoly {
    pub fn new(field: &Field, coeffs: Vec<FieldElem>) -> Result<LinPoly> {
        assert!(!coeffs.is_empty(), "a linearized polynomial needs a_0");
        let t = coeffs.len() - 1;
        if 2 * t >= field.m() as usize {
            return Err(Error::LinPolyOrder { t, m: field.m() });
        }
        Ok(LinPoly { coeffs })
    }

    pub fn t(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|a| a.is_zero())
    }

    pub fn eval(&self, field: &Field, x: FieldElem) -> FieldElem {
        let m = field.m();
        let mut acc = field.mul(self.coeffs[0], x);
        for (j, &a) in self.coeffs.iter().enumerate().skip(1) {
            if a.is_zero() {
                continue;
            }
            let j = j as u32;
            acc += field.mul(a, field.frobenius(x, j));
            acc += field.mul(field.frobenius(a, m - j), field.frobenius(x, m - j));
        }
        acc
    }

    /// Number of roots of `L_a` in the field.
    pub fn kernel_size(&self, field: &Field) -> usize {
        field
            .elements()
            .filter(|&x| self.eval(field, x).is_zero())
            .count()
    }
}

/// Matrix of `B_a` relative to the polynomial basis: entry `(j, k)` is
/// `tr(lambda_k * L_a(lambda_j))`.
///
/// The entries depend on the basis; the rank does not.
pub fn bilinear_matrix(field: &Field, poly: &LinPoly) -> SymMatrix {
    let m = field.m() as usize;
    let masks: Vec<u32> = (0..m as u32)
        .map(|k| field.trace_form_mask(field.basis(k)))
        .collect();
    let mut rows = vec![0u32; m];
    for (j, row) in rows.iter_mut().enumerate() {
        let v = poly.eval(field, field.basis(j as u32));
        for (k, &mask) in masks.iter().enumerate() {
            if (v.0 & mask).count_ones() & 1 == 1 {
                *row |= 1 << k;
            }
        }
    }
    SymMatrix::from_rows(m, rows).expect("B_a is symmetric for every a")
}

/// Precomputed tables for building many `B_a` matrices over one field.
#[derive(Debug, Clone)]
pub(crate) struct BilinearTables {
    m: u32,
    /// `conj[i][j] = lambda_j^(2^i)` for `i < m`.
    conj: Vec<Vec<FieldElem>>,
    masks: Vec<u32>,
}

impl BilinearTables {
    pub(crate) fn new(field: &Field) -> BilinearTables {
        let m = field.m();
        let conj = (0..m)
            .map(|i| (0..m).map(|j| field.frobenius(field.basis(j), i)).collect())
            .collect();
        let masks = (0..m)
            .map(|k| field.trace_form_mask(field.basis(k)))
            .collect();
        BilinearTables { m, conj, masks }
    }

    /// Same result as [`bilinear_matrix`], reusing the conjugate tables.
    pub(crate) fn matrix(&self, field: &Field, coeffs: &[FieldElem]) -> SymMatrix {
        let m = self.m;
        let twisted: Vec<FieldElem> = coeffs
            .iter()
            .enumerate()
            .map(|(j, &a)| {
                if j == 0 {
                    a
                } else {
                    field.frobenius(a, m - j as u32)
                }
            })
            .collect();
        let mut rows = vec![0u32; m as usize];
        for (j, row) in rows.iter_mut().enumerate() {
            let mut v = field.mul(coeffs[0], self.conj[0][j]);
            for i in 1..coeffs.len() {
                if coeffs[i].is_zero() {
                    continue;
                }
                v += field.mul(coeffs[i], self.conj[i][j]);
                v += field.mul(twisted[i], self.conj[m as usize - i][j]);
            }
            for (k, &mask) in self.masks.iter().enumerate() {
                if (v.0 & mask).count_ones() & 1 == 1 {
                    *row |= 1 << k;
                }
            }
        }
        SymMatrix::from_rows(m as usize, rows).expect("B_a is symmetric for every a")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f3() -> Field {
        Field::new(3, 0b1011).unwrap()
    }

    #[test]
    fn order_limit() {
        let f = f3();
        assert!(LinPoly::new(&f, vec![FieldElem(1), FieldElem(2)]).is_ok());
        assert_eq!(
            LinPoly::new(&f, vec![FieldElem(1), FieldElem(2), FieldElem(3)]),
            Err(Error::LinPolyOrder { t: 2, m: 3 })
        );
        let f4 = Field::with_default_modulus(4).unwrap();
        assert!(LinPoly::new(&f4, vec![FieldElem(1), FieldElem(2), FieldElem(3)]).is_err());
    }

    #[test]
    fn degenerate_cases() {
        let f = Field::with_default_modulus(5).unwrap();
        let a0 = FieldElem(0b10110);
        let l = LinPoly::new(&f, vec![a0]).unwrap();
        for x in f.elements() {
            assert_eq!(l.eval(&f, x), f.mul(a0, x));
        }
        let a1 = FieldElem(0b00111);
        let l = LinPoly::new(&f, vec![FieldElem::ZERO, a1]).unwrap();
        for x in f.elements() {
            let expect = f.mul(a1, f.square(x)) + f.mul(f.pow(a1, 16), f.pow(x, 16));
            assert_eq!(l.eval(&f, x), expect);
        }
    }

    #[test]
    fn root_counts_m3_t1() {
        let f = f3();
        for a0 in f.elements() {
            for a1 in f.elements() {
                let l = LinPoly::new(&f, vec![a0, a1]).unwrap();
                if l.is_zero() {
                    continue;
                }
                let n = l.kernel_size(&f);
                assert!([1, 2, 4].contains(&n), "a=({a0:?},{a1:?}) roots={n}");
            }
        }
    }

    #[test]
    fn additive_in_x() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for m in 1..=10u32 {
            let f = Field::with_default_modulus(m).unwrap();
            for t in 0..=((m as usize - 1) / 2) {
                for _ in 0..1000 {
                    let coeffs = (0..=t)
                        .map(|_| FieldElem(rng.gen_range(0..f.order())))
                        .collect();
                    let l = LinPoly::new(&f, coeffs).unwrap();
                    let x = FieldElem(rng.gen_range(0..f.order()));
                    let y = FieldElem(rng.gen_range(0..f.order()));
                    assert_eq!(l.eval(&f, x + y), l.eval(&f, x) + l.eval(&f, y));
                }
            }
        }
    }

    #[test]
    fn zero_and_trace_form_matrices() {
        let f = Field::with_default_modulus(4).unwrap();
        let zero = LinPoly::new(&f, vec![FieldElem::ZERO, FieldElem::ZERO]).unwrap();
        assert_eq!(bilinear_matrix(&f, &zero), SymMatrix::zero(4));
        let one = LinPoly::new(&f, vec![FieldElem::ONE]).unwrap();
        let b = bilinear_matrix(&f, &one);
        for j in 0..4 {
            for k in 0..4 {
                let expect = f.trace(f.mul(f.basis(j), f.basis(k)));
                assert_eq!(b.get(j as usize, k as usize), expect);
            }
        }
    }

    #[test]
    fn matrices_are_injective_in_a() {
        let f = f3();
        let mut seen = std::collections::HashSet::new();
        for a0 in f.elements() {
            for a1 in f.elements() {
                let l = LinPoly::new(&f, vec![a0, a1]).unwrap();
                let b = bilinear_matrix(&f, &l);
                assert!(b.is_symmetric());
                assert!(seen.insert(b));
            }
        }
        assert_eq!(seen.len(), 64);
    }

    #[test]
    fn matrix_represents_the_form() {
        for m in 1..=4u32 {
            let f = Field::with_default_modulus(m).unwrap();
            let tables = BilinearTables::new(&f);
            let t_max = (m as usize - 1) / 2;
            let coeff_space = f.order().pow(t_max as u32 + 1);
            for idx in 0..coeff_space {
                let coeffs: Vec<FieldElem> = (0..=t_max)
                    .map(|j| FieldElem((idx >> (m * j as u32)) & (f.order() - 1)))
                    .collect();
                let l = LinPoly::new(&f, coeffs.clone()).unwrap();
                let b = bilinear_matrix(&f, &l);
                assert_eq!(tables.matrix(&f, &coeffs), b);
                for x in f.elements() {
                    let lx = l.eval(&f, x);
                    for y in f.elements() {
                        assert_eq!(f.trace(f.mul(y, lx)), b.form(x.0, y.0));
                    }
                }
            }
        }
    }
}
