//! `H₂(F)⊗S₀ + Fk⊗S₁` with `(a⊗x)(b⊗y) = a·b⊗xy + [a,b]⊗{x,y}`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::element::Element;
use crate::field::Scalar;
use crate::h2::graded::{GradedBracketAlgebra, Homogeneous};
use crate::m2::{Mat2, BASIS_NAMES, E, F, H, K};

/// Index in the tensor basis of `blk⊗s_i`, where `i` indexes `S`.
fn slot(d0: usize, blk: usize, i: usize) -> usize {
    match blk {
        E | F | H => blk * d0 + i,
        _ => 3 * d0 + (i - d0),
    }
}

/// M₂ basis label and `S`-basis index of each tensor basis vector.
fn factors(d0: usize, d1: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(3 * d0 + d1);
    for blk in [E, F, H] {
        out.extend((0..d0).map(|i| (blk, i)));
    }
    out.extend((d0..d0 + d1).map(|i| (K, i)));
    out
}

/// Names `e.x, f.x, h.x` for even `x` and `k.n` for odd `n`.
pub fn tensor_names(s: &GradedBracketAlgebra) -> Vec<String> {
    factors(s.even_dim(), s.odd_dim())
        .into_iter()
        .map(|(blk, i)| format!("{}.{}", BASIS_NAMES[blk], s.names()[i]))
        .collect()
}

/// Adds `c·(blk ⊗ v)` for a homogeneous `v ∈ S` into `out`.
fn push_tensor(out: &mut Element, d0: usize, blk: usize, coeff: &Scalar, v: &Homogeneous) {
    for (i, x) in v.value.coords().iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let idx = slot(d0, blk, i);
        let o = &mut out.coords_mut()[idx];
        *o = &*o + &(coeff * x);
    }
}

/// Structure tensor of the tensor algebra built from `S` with the stored
/// bracket taken as is. No identities are assumed, so this doubles as a
/// harness for tampered inputs.
pub fn build_tensor_algebra(s: &GradedBracketAlgebra) -> Algebra {
    let field = s.field();
    let (d0, d1) = (s.even_dim(), s.odd_dim());
    let basis = factors(d0, d1);
    let dim = basis.len();
    let mats: Vec<Mat2> = (0..4).map(|b| Mat2::basis(field, b)).collect();
    let alg = Algebra::from_fn(field, tensor_names(s), |p, q| {
        let (a, x) = basis[p];
        let (b, y) = basis[q];
        let (x, y) = (s.basis_hom(x), s.basis_hom(y));
        let mut out = Element::zero(field, dim);
        let sym = mats[a].jordan(&mats[b]).coords();
        let xy = s.mul_hom(&x, &y);
        for (blk, c) in sym.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            push_tensor(&mut out, d0, blk, c, &xy);
        }
        let anti = mats[a].commutator(&mats[b]);
        if !anti.is_zero() {
            let br = s
                .bracket_hom(&x, &y)
                .expect("[a,b] vanishes on the undefined odd-odd slot");
            for (blk, c) in anti.coords().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                push_tensor(&mut out, d0, blk, c, &br);
            }
        }
        out
    });
    let mut unit = Element::zero(field, dim);
    for (i, c) in s.unit().coords()[..d0].iter().enumerate() {
        unit.coords_mut()[slot(d0, E, i)] = c.clone();
        unit.coords_mut()[slot(d0, F, i)] = c.clone();
    }
    alg.with_unit(unit).expect("(e+f)⊗1 is the unit")
}

/// `(e⊗1, h⊗1)` in the tensor algebra.
pub fn tensor_frame(s: &GradedBracketAlgebra) -> (Element, Element) {
    let field = s.field();
    let d0 = s.even_dim();
    let dim = 3 * d0 + s.odd_dim();
    let mut e = Element::zero(field, dim);
    let mut h = Element::zero(field, dim);
    for (i, c) in s.unit().coords()[..d0].iter().enumerate() {
        e.coords_mut()[slot(d0, E, i)] = c.clone();
        h.coords_mut()[slot(d0, H, i)] = c.clone();
    }
    (e, h)
}
