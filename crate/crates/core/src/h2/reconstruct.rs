//! Rescaling by a root of -1, reconstruction, and the explicit isomorphism.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::coordinates::{adapted_basis, DecompositionResult};
use super::graded::{Convention, GradedBracketAlgebra};
use crate::algebra::Algebra;
use crate::constructions::tensor::build_tensor_algebra;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::LinearMap;
use crate::report::{Check, Report};

/// Multiplies every bracket table by `eps` and marks the result rescaled.
pub fn rescale_bracket(s: &GradedBracketAlgebra, eps: &Scalar) -> Result<GradedBracketAlgebra> {
    if eps.field() != s.field() {
        return Err(Error::FieldMismatch);
    }
    if !(&eps.square() + &s.field().one()).is_zero() {
        return Err(Error::BadEpsilon);
    }
    if s.convention() != Convention::Raw {
        return Err(Error::WrongConvention("rescaling expects a raw bracket"));
    }
    Ok(s.with_scaled_bracket(eps, Convention::EpsilonRescaled))
}

/// Builds `J′ = H₂(F)⊗S₀ + Fk⊗S₁`.
///
/// A raw bracket is accepted only when it vanishes; otherwise it must be
/// rescaled first, which needs a square root of -1 in the field.
pub fn reconstruct(s: &GradedBracketAlgebra) -> Result<Algebra> {
    if s.convention() == Convention::Raw && !s.is_trivial() {
        return Err(if s.field().admits_sqrt_minus_one() {
            Error::WrongConvention("nonzero raw bracket must be rescaled before reconstruction")
        } else {
            Error::NoSqrtMinusOne
        });
    }
    Ok(build_tensor_algebra(s))
}

/// The map `J → J′` sending `e·z ↦ e⊗z`, `z - e·z ↦ f⊗z`, `h·z ↦ h⊗z`
/// and `n ↦ ε k⊗n`. `eps` may be omitted only when `N = 0`.
pub fn isomorphism(j: &Algebra, d: &DecompositionResult, eps: Option<&Scalar>) -> Result<LinearMap> {
    let field = j.field();
    let preimages = adapted_basis(j, &d.frame, &d.z, &d.n);
    let p = LinearMap::from_columns(field, j.dim(), &preimages);
    let p_inv = p.inverse()?;
    let d0 = 3 * d.z.dim();
    let eps = match (eps, d.n.dim()) {
        (Some(e), _) => e.clone(),
        (None, 0) => field.one(),
        (None, _) => return Err(Error::NoSqrtMinusOne),
    };
    let columns: Vec<Element> = (0..j.dim())
        .map(|i| {
            let c = if i < d0 { field.one() } else { eps.clone() };
            Element::basis(field, j.dim(), i).scale(&c)
        })
        .collect();
    let twist = LinearMap::from_columns(field, j.dim(), &columns);
    Ok(twist.compose(&p_inv))
}

fn unit_of(a: &Algebra) -> Result<Element> {
    match a.unit() {
        Some(u) => Ok(u.clone()),
        None => a.find_unit(),
    }
}

/// Invertibility, unit preservation and multiplicativity on basis pairs.
pub fn check_isomorphism(a: &Algebra, b: &Algebra, l: &LinearMap) -> Result<Report> {
    if a.field() != b.field() || l.field() != a.field() {
        return Err(Error::FieldMismatch);
    }
    for (expected, found) in [(a.dim(), b.dim()), (a.dim(), l.in_dim()), (b.dim(), l.out_dim())] {
        if expected != found {
            return Err(Error::DimensionMismatch { expected, found });
        }
    }
    let mut report = Report::new();
    report.push(if l.is_invertible() {
        Check::pass("invertible", 1)
    } else {
        Check::fail("invertible", 1, "singular matrix")
    });
    let (ua, ub) = (unit_of(a)?, unit_of(b)?);
    let image = l.apply(&ua);
    report.push(if image == ub {
        Check::pass("unit to unit", 1)
    } else {
        Check::fail("unit to unit", 1, b.format_element(&image))
    });
    let images: Vec<Element> = (0..a.dim()).map(|i| l.column(i)).collect();
    let mut witness = None;
    let mut count = 0;
    'search: for i in 0..a.dim() {
        for jdx in 0..a.dim() {
            count += 1;
            let lhs = l.apply(&a.mul(&a.basis(i), &a.basis(jdx)));
            let rhs = b.mul(&images[i], &images[jdx]);
            if lhs != rhs {
                witness = Some(format!(
                    "({}, {}): {} != {}",
                    a.names()[i],
                    a.names()[jdx],
                    b.format_element(&lhs),
                    b.format_element(&rhs)
                ));
                break 'search;
            }
        }
    }
    report.push(match witness {
        None => Check::pass("multiplicative", count),
        Some(w) => Check::fail("multiplicative", count, w),
    });
    Ok(report)
}

/// True iff `l` is an algebra isomorphism `a → b`.
pub fn verify_isomorphism(a: &Algebra, b: &Algebra, l: &LinearMap) -> Result<bool> {
    Ok(check_isomorphism(a, b, l)?.passed())
}

/// The structure of `a` carried along an invertible `l`, on the names given.
pub fn transport_structure(a: &Algebra, l: &LinearMap, names: Vec<String>) -> Result<Algebra> {
    let inv = l.inverse()?;
    let pre: Vec<Element> = (0..a.dim()).map(|i| inv.column(i)).collect();
    let out = Algebra::from_fn(a.field(), names, |i, j| l.apply(&a.mul(&pre[i], &pre[j])));
    match a.unit() {
        Some(u) => out.with_unit(l.apply(u)),
        None => Ok(out),
    }
}

/// Equality of structure tensors, ignoring basis names and units.
pub fn same_structure(a: &Algebra, b: &Algebra) -> bool {
    a.field() == b.field()
        && a.dim() == b.dim()
        && (0..a.dim()).all(|i| (0..a.dim()).all(|j| a.structure_vector(i, j) == b.structure_vector(i, j)))
}

/// Output of the full pipeline on a framed algebra.
#[derive(Clone, Debug)]
pub struct Roundtrip {
    pub decomposition: DecompositionResult,
    pub rescaled: GradedBracketAlgebra,
    pub rebuilt: Algebra,
    pub map: LinearMap,
}

/// Decomposes, rescales by `field.sqrt_minus_one()` when that exists,
/// reconstructs and builds the comparison map.
pub fn roundtrip(j: &Algebra, e: &Element, h: &Element) -> Result<Roundtrip> {
    let decomposition = super::coordinates::coordinatize(j, e, h)?;
    let field = j.field();
    let eps = field.sqrt_minus_one().ok();
    let rescaled = match &eps {
        Some(eps) => rescale_bracket(&decomposition.s, eps)?,
        None => decomposition.s.clone(),
    };
    let rebuilt = reconstruct(&rescaled)?;
    let map = isomorphism(j, &decomposition, eps.as_ref())?;
    Ok(Roundtrip {
        decomposition,
        rescaled,
        rebuilt,
        map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::catalog::{h2f, h4f, m2_plus, spin_factor};
    use crate::field::FieldSpec;
    use crate::h2::coordinates::coordinatize;

    #[test]
    fn rescale_rules() {
        let f = FieldSpec::prime(13).unwrap();
        let (j, fr) = h4f(f);
        let s = coordinatize(&j, &fr.e, &fr.h).unwrap().s;
        assert_eq!(rescale_bracket(&s, &f.one()), Err(Error::BadEpsilon));
        let r = rescale_bracket(&s, &f.from_i64(5)).unwrap();
        assert_eq!(r.convention(), Convention::EpsilonRescaled);
        assert!(matches!(
            rescale_bracket(&r, &f.from_i64(5)),
            Err(Error::WrongConvention(_))
        ));
        let (h, hf) = h2f(f);
        let t = coordinatize(&h, &hf.e, &hf.h).unwrap().s;
        let tr = rescale_bracket(&t, &f.from_i64(8)).unwrap();
        assert!(tr.is_trivial() && tr.convention() == Convention::EpsilonRescaled);
    }

    #[test]
    fn reconstruct_errors() {
        let f7 = FieldSpec::prime(7).unwrap();
        let (j, fr) = h4f(f7);
        let s = coordinatize(&j, &fr.e, &fr.h).unwrap().s;
        assert_eq!(reconstruct(&s), Err(Error::NoSqrtMinusOne));
        let f5 = FieldSpec::prime(5).unwrap();
        let (j, fr) = h4f(f5);
        let s = coordinatize(&j, &fr.e, &fr.h).unwrap().s;
        assert!(matches!(reconstruct(&s), Err(Error::WrongConvention(_))));
    }

    #[test]
    fn trivial_s_gives_h2() {
        let q = FieldSpec::Rational;
        let (j, fr) = h2f(q);
        let s = coordinatize(&j, &fr.e, &fr.h).unwrap().s;
        let r = reconstruct(&s).unwrap();
        assert!(same_structure(&r, &j));
        assert_eq!(r.names(), &["e.z0", "f.z0", "h.z0"]);
    }

    #[test]
    fn zero_bracket_odd_square_is_minus_one() {
        let q = FieldSpec::Rational;
        let (j, fr) = spin_factor(q, 3).unwrap();
        let s = coordinatize(&j, &fr.e, &fr.h).unwrap().s;
        let r = reconstruct(&s).unwrap();
        assert_eq!(r.dim(), 4);
        assert!(r.is_jordan().passed());
        let k = r.basis(3);
        // n·n = 1 in S, so (k⊗n)² = k∘k ⊗ 1 = -1
        assert_eq!(r.square(&k), -r.unit().unwrap().clone());
    }

    #[test]
    fn isomorphism_examples() {
        let q = FieldSpec::Rational;
        let (j, _) = h2f(q);
        let id = LinearMap::identity(q, 3);
        assert_eq!(verify_isomorphism(&j, &j, &id), Ok(true));
        let swap = LinearMap::from_columns(q, 3, &[j.basis(2), j.basis(1), j.basis(0)]);
        assert_eq!(verify_isomorphism(&j, &j, &swap), Ok(false));
        let f5 = FieldSpec::prime(5).unwrap();
        let (m, fr) = m2_plus(f5);
        let rt = roundtrip(&m, &fr.e, &fr.h).unwrap();
        assert_eq!(verify_isomorphism(&m, &rt.rebuilt, &rt.map), Ok(true));
        assert_eq!(verify_isomorphism(&m, &j.clone(), &id), Err(Error::FieldMismatch));
    }

    #[test]
    fn needs_epsilon_for_nonzero_n() {
        let q = FieldSpec::Rational;
        let (j, fr) = spin_factor(q, 3).unwrap();
        assert_eq!(
            roundtrip(&j, &fr.e, &fr.h).map(|_| ()),
            Err(Error::NoSqrtMinusOne)
        );
    }
}
