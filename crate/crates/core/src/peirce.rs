//! Peirce decomposition `J = J₁ + J½ + J₀` relative to an idempotent.

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{self, Matrix, Subspace};
use crate::report::{Check, Report};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeirceDecomposition {
    pub idempotent: Element,
    pub one: Subspace,
    pub half: Subspace,
    pub zero: Subspace,
}

impl PeirceDecomposition {
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.one.dim(), self.half.dim(), self.zero.dim())
    }
}

/// `e·e = e` and `e ≠ 0`.
pub fn is_idempotent(algebra: &Algebra, e: &Element) -> bool {
    !e.is_zero() && algebra.square(e) == *e
}

fn shifted_kernel(algebra: &Algebra, r_e: &Matrix, lambda: &Scalar) -> Subspace {
    let m: Matrix = r_e
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, x)| if i == j { x - lambda } else { x.clone() })
                .collect()
        })
        .collect();
    linalg::kernel(algebra.field(), &m, algebra.dim())
}

/// Eigenspaces of `R_e` for the eigenvalues 1, ½ and 0.
pub fn peirce_decompose(algebra: &Algebra, e: &Element) -> Result<PeirceDecomposition> {
    algebra.check_element(e)?;
    if !is_idempotent(algebra, e) {
        return Err(Error::NotIdempotent);
    }
    let field = algebra.field();
    let r_e = algebra.right_multiplication(e);
    let one = shifted_kernel(algebra, &r_e, &field.one());
    let half = shifted_kernel(algebra, &r_e, &field.half());
    let zero = shifted_kernel(algebra, &r_e, &field.zero());
    let total = one.sum(&half).sum(&zero);
    if one.dim() + half.dim() + zero.dim() != algebra.dim() || total.dim() != algebra.dim() {
        return Err(Error::NotJordan(format!(
            "Peirce components have dimensions ({}, {}, {}) in an algebra of dimension {}",
            one.dim(),
            half.dim(),
            zero.dim(),
            algebra.dim()
        )));
    }
    Ok(PeirceDecomposition {
        idempotent: e.clone(),
        one,
        half,
        zero,
    })
}

/// Checks the Peirce multiplication rules on component bases:
/// `J₁J₁ ⊆ J₁`, `J₀J₀ ⊆ J₀`, `J₁J₀ = 0`, `J₁J½ ⊆ J½`, `J₀J½ ⊆ J½`,
/// `J½J½ ⊆ J₁ + J₀`.
pub fn check_peirce_rules(algebra: &Algebra, d: &PeirceDecomposition) -> Report {
    let zero_space = Subspace::zero(algebra.field(), algebra.dim());
    let one_plus_zero = d.one.sum(&d.zero);
    let rules: [(&str, &Subspace, &Subspace, &Subspace); 6] = [
        ("J1*J1 in J1", &d.one, &d.one, &d.one),
        ("J0*J0 in J0", &d.zero, &d.zero, &d.zero),
        ("J1*J0 = 0", &d.one, &d.zero, &zero_space),
        ("J1*Jhalf in Jhalf", &d.one, &d.half, &d.half),
        ("J0*Jhalf in Jhalf", &d.zero, &d.half, &d.half),
        ("Jhalf*Jhalf in J1+J0", &d.half, &d.half, &one_plus_zero),
    ];
    let mut report = Report::new();
    for (name, left, right, target) in rules {
        let lb: Vec<Element> = left.basis_elements();
        let rb: Vec<Element> = right.basis_elements();
        let mut count = 0;
        let mut witness = None;
        'search: for (a, x) in lb.iter().enumerate() {
            for (b, y) in rb.iter().enumerate() {
                count += 1;
                let p = algebra.mul(x, y);
                if !target.contains_element(&p) {
                    witness = Some(format!(
                        "basis pair ({a}, {b}): product {}",
                        algebra.format_element(&p)
                    ));
                    break 'search;
                }
            }
        }
        report.push(match witness {
            None => Check::pass(name, count),
            Some(w) => Check::fail(name, count, w),
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::catalog::{h2f, h4f, symmetric_matrices};
    use crate::field::FieldSpec;

    #[test]
    fn idempotents() {
        let q = FieldSpec::Rational;
        let (a, _) = h2f(q);
        assert!(is_idempotent(&a, &a.basis(0)));
        assert!(!is_idempotent(&a, &a.basis(2)));
        let x = a.element_from_ints(&[1, 1, 1]).scale(&q.half());
        assert!(is_idempotent(&a, &x));
        assert!(!is_idempotent(&a, &a.zero()));
    }

    #[test]
    fn h2_dims() {
        let (a, _) = h2f(FieldSpec::Rational);
        let d = peirce_decompose(&a, &a.basis(0)).unwrap();
        assert_eq!(d.dims(), (1, 1, 1));
        assert!(d.one.contains_element(&a.basis(0)));
        assert!(d.half.contains_element(&a.basis(2)));
        assert!(d.zero.contains_element(&a.basis(1)));
        assert!(check_peirce_rules(&a, &d).passed());
        assert_eq!(peirce_decompose(&a, &a.basis(2)), Err(Error::NotIdempotent));
    }

    #[test]
    fn h4_block_dims() {
        let (a, frame) = h4f(FieldSpec::prime(13).unwrap());
        let d = peirce_decompose(&a, &frame.e).unwrap();
        assert_eq!(d.dims(), (3, 4, 3));
        assert!(check_peirce_rules(&a, &d).passed());
    }

    #[test]
    fn unit_and_complement() {
        let a = symmetric_matrices(FieldSpec::Rational, 3);
        let one = a.unit().unwrap().clone();
        assert_eq!(peirce_decompose(&a, &one).unwrap().dims(), (6, 0, 0));
        let e = a.basis(0);
        let d = peirce_decompose(&a, &e).unwrap();
        let c = peirce_decompose(&a, &(&one - &e)).unwrap();
        assert_eq!(d.one, c.zero);
        assert_eq!(d.zero, c.one);
        assert_eq!(d.half, c.half);
    }
}
