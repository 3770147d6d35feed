//! Shipped example algebras.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::bilinear::{build_bilinear_form_algebra, BilinearFormData};
use super::involutive::InvolutiveAlgebra;
use crate::algebra::Algebra;
use crate::element::Element;
use crate::error::Result;
use crate::field::{FieldSpec, Scalar};
use crate::h2::frame::{verify_h2_frame, H2Frame};
use crate::linalg::LinearMap;
use crate::m2::{Mat2, BASIS_NAMES, K};

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| String::from(*s)).collect()
}

/// The base field as a one-dimensional algebra.
pub fn field_algebra(field: FieldSpec) -> Algebra {
    Algebra::new(field, names(&["1"]), [((0, 0), vec![(0, field.one())])])
        .and_then(|a| a.with_unit(Element::basis(field, 1, 0)))
        .expect("one-dimensional table is valid")
}

/// `F[t]/(t²)` on the basis `1, t`.
pub fn dual_numbers(field: FieldSpec) -> Algebra {
    let one = field.one();
    Algebra::new(
        field,
        names(&["1", "t"]),
        [
            ((0, 0), vec![(0, one.clone())]),
            ((0, 1), vec![(1, one.clone())]),
            ((1, 0), vec![(1, one)]),
        ],
    )
    .and_then(|a| a.with_unit(Element::basis(field, 2, 0)))
    .expect("dual numbers table is valid")
}

type Square = Vec<Vec<Scalar>>;

fn mat_mul(a: &Square, b: &Square) -> Square {
    let n = a.len();
    let field = a[0][0].field();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(field.zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Basis of symmetric `n×n` matrices: `Eᵢᵢ` then `Eᵢⱼ + Eⱼᵢ` for `i < j`.
fn symmetric_basis(n: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            out.push((i, j));
        }
    }
    out
}

/// Symmetric `n×n` matrices under `½(XY + YX)`. Basis names are `dI` for
/// diagonal units and `sIJ` for `E_IJ + E_JI` (1-based).
pub fn symmetric_matrices(field: FieldSpec, n: usize) -> Algebra {
    let basis = symmetric_basis(n);
    let as_matrix = |&(i, j): &(usize, usize)| {
        let mut m = vec![vec![field.zero(); n]; n];
        m[i][j] = field.one();
        m[j][i] = field.one();
        m
    };
    let mats: Vec<Square> = basis.iter().map(as_matrix).collect();
    let label = |&(i, j): &(usize, usize)| {
        if i == j {
            format!("d{}", i + 1)
        } else {
            format!("s{}{}", i + 1, j + 1)
        }
    };
    let half = field.half();
    let alg = Algebra::from_fn(field, basis.iter().map(label).collect(), |p, q| {
        let l = mat_mul(&mats[p], &mats[q]);
        let r = mat_mul(&mats[q], &mats[p]);
        Element::new(
            basis
                .iter()
                .map(|&(i, j)| &(&l[i][j] + &r[i][j]) * &half)
                .collect(),
        )
    });
    let mut one = alg.zero();
    for i in 0..n {
        one.coords_mut()[i] = field.one();
    }
    alg.with_unit(one).expect("identity matrix is the unit")
}

/// `H₂(F)` on `e = E11`, `f = E22`, `h = E12 + E21`.
pub fn h2f(field: FieldSpec) -> (Algebra, H2Frame) {
    let sym = symmetric_matrices(field, 2);
    let alg = Algebra::from_fn(field, names(&["e", "f", "h"]), |i, j| sym.structure_vector(i, j))
        .with_unit(sym.unit().expect("unital").clone())
        .expect("unit carries over");
    let frame = verify_h2_frame(&alg, &alg.basis(0), &alg.basis(2)).expect("standard frame");
    (alg, frame)
}

/// `H₄(F)` with the block frame `e = E11 + E22`, `h = (E13 + E31) + (E24 + E42)`.
pub fn h4f(field: FieldSpec) -> (Algebra, H2Frame) {
    let alg = symmetric_matrices(field, 4);
    let idx = |name: &str| alg.names().iter().position(|n| n == name).expect("basis name");
    let mut e = alg.zero();
    e.coords_mut()[idx("d1")] = field.one();
    e.coords_mut()[idx("d2")] = field.one();
    let mut h = alg.zero();
    h.coords_mut()[idx("s13")] = field.one();
    h.coords_mut()[idx("s24")] = field.one();
    let frame = verify_h2_frame(&alg, &e, &h).expect("block frame");
    (alg, frame)
}

/// The associative algebra `M₂(F)` on `e, f, h, k`.
pub fn m2(field: FieldSpec) -> Algebra {
    let mats: Vec<Mat2> = (0..4).map(|i| Mat2::basis(field, i)).collect();
    Algebra::from_fn(field, names(&BASIS_NAMES), |i, j| {
        Element::new((&mats[i] * &mats[j]).coords().to_vec())
    })
    .with_unit(Element::new(Mat2::identity(field).coords().to_vec()))
    .expect("identity matrix is the unit")
}

/// `M₂(F)⁺` on `e, f, h, k` with frame `(e, h)`.
pub fn m2_plus(field: FieldSpec) -> (Algebra, H2Frame) {
    let mats: Vec<Mat2> = (0..4).map(|i| Mat2::basis(field, i)).collect();
    let alg = Algebra::from_fn(field, names(&BASIS_NAMES), |i, j| {
        Element::new(mats[i].jordan(&mats[j]).coords().to_vec())
    })
    .with_unit(Element::new(Mat2::identity(field).coords().to_vec()))
    .expect("identity matrix is the unit");
    let frame = verify_h2_frame(&alg, &alg.basis(0), &alg.basis(2)).expect("standard frame");
    (alg, frame)
}

fn diagonal_map(field: FieldSpec, signs: &[i64]) -> LinearMap {
    let n = signs.len();
    let cols: Vec<Element> = signs
        .iter()
        .enumerate()
        .map(|(i, &s)| Element::basis(field, n, i).scale(&field.from_i64(s)))
        .collect();
    LinearMap::from_columns(field, n, &cols)
}

/// `(F, id)`.
pub fn field_with_identity(field: FieldSpec) -> InvolutiveAlgebra {
    InvolutiveAlgebra::new(field_algebra(field), LinearMap::identity(field, 1))
        .expect("identity is an involution")
}

/// `(M₂(F), transpose)`; transpose fixes `e, f, h` and negates `k`.
pub fn m2_transpose(field: FieldSpec) -> InvolutiveAlgebra {
    let mut signs = [1i64; 4];
    signs[K] = -1;
    InvolutiveAlgebra::new(m2(field), diagonal_map(field, &signs)).expect("transpose is an involution")
}

/// `(F⊕F, exchange)` on the idempotents `p1, p2`.
pub fn exchange(field: FieldSpec) -> InvolutiveAlgebra {
    let one = field.one();
    let alg = Algebra::new(
        field,
        names(&["p1", "p2"]),
        [((0, 0), vec![(0, one.clone())]), ((1, 1), vec![(1, one)])],
    )
    .expect("valid table");
    let swap = LinearMap::from_columns(
        field,
        2,
        &[Element::basis(field, 2, 1), Element::basis(field, 2, 0)],
    );
    InvolutiveAlgebra::new(alg, swap).expect("exchange is an involution")
}

fn identity_gram(a: &Algebra, r: usize) -> Vec<Vec<Element>> {
    let one = a.unit().expect("unital").clone();
    (0..r)
        .map(|s| {
            (0..r)
                .map(|t| if s == t { one.clone() } else { a.zero() })
                .collect()
        })
        .collect()
}

/// `F·1 ⊕ V` with `dim V = vdim` and the identity form; frame
/// `e = ½(1 - v0)`, `h = v1`.
pub fn spin_factor(field: FieldSpec, vdim: usize) -> Result<(Algebra, H2Frame)> {
    let a = field_algebra(field);
    let gram = identity_gram(&a, vdim);
    build_bilinear_form_algebra(&BilinearFormData::free_module(a, gram)?)
}

/// `A ⊕ A^r` for `A = F[t]/(t²)` with the identity form.
pub fn dual_spin_factor(field: FieldSpec, rank: usize) -> Result<(Algebra, H2Frame)> {
    let a = dual_numbers(field);
    let gram = identity_gram(&a, rank);
    build_bilinear_form_algebra(&BilinearFormData::free_module(a, gram)?)
}

/// Looks up a basis element by name.
pub fn named(alg: &Algebra, name: &str) -> Option<Element> {
    alg.names().iter().position(|n| n == name).map(|i| alg.basis(i))
}
