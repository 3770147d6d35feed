use crate::algebra::Algebra;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::linalg::Subspace;

/// Distinguished elements `1, e = e11, h = e12 + e21` of an embedded H₂(F).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H2Frame {
    pub e: Element,
    pub h: Element,
    pub one: Element,
}

impl H2Frame {
    /// `1 - 2e`, which squares to 1 and anticommutes with `h` in H₂(F).
    pub fn reflection(&self) -> Element {
        let two_e = self.e.scale(&self.e.coords()[0].field().from_i64(2));
        &self.one - &two_e
    }
}

/// Checks `e² = e`, `h² = 1`, `e·h = ½h` and independence of `{1, e, h}`.
///
/// The unit is taken from the algebra if declared, otherwise solved for.
pub fn verify_h2_frame(j: &Algebra, e: &Element, h: &Element) -> Result<H2Frame> {
    j.check_element(e)?;
    j.check_element(h)?;
    let one = match j.unit() {
        Some(u) => u.clone(),
        None => j.find_unit()?,
    };
    if j.square(e) != *e {
        return Err(Error::RelationFailed("e*e=e"));
    }
    if j.square(h) != one {
        return Err(Error::RelationFailed("h*h=1"));
    }
    if j.mul(e, h) != h.scale(&j.field().half()) {
        return Err(Error::RelationFailed("e*h=h/2"));
    }
    if Subspace::span_elements(j.field(), j.dim(), [&one, e, h]).dim() != 3 {
        return Err(Error::DependentFrame);
    }
    Ok(H2Frame {
        e: e.clone(),
        h: h.clone(),
        one,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::catalog::{h2f, h4f};
    use crate::field::FieldSpec;

    #[test]
    fn accepts_standard_frames() {
        let (a, _) = h2f(FieldSpec::Rational);
        let f = verify_h2_frame(&a, &a.basis(0), &a.basis(2)).unwrap();
        assert_eq!(f.one, a.element_from_ints(&[1, 1, 0]));
        assert_eq!(f.reflection(), a.element_from_ints(&[-1, 1, 0]));
        let (b, fb) = h4f(FieldSpec::Rational);
        assert!(verify_h2_frame(&b, &fb.e, &fb.h).is_ok());
    }

    #[test]
    fn rejects_bad_frames() {
        let (a, _) = h2f(FieldSpec::Rational);
        let (e, h) = (a.basis(0), a.basis(2));
        assert_eq!(verify_h2_frame(&a, &e, &e), Err(Error::RelationFailed("h*h=1")));
        assert_eq!(verify_h2_frame(&a, &h, &h), Err(Error::RelationFailed("e*e=e")));
        assert_eq!(
            verify_h2_frame(&a, &a.basis(1), &h.scale(&a.field().from_i64(-1))),
            Ok(H2Frame {
                e: a.basis(1),
                h: h.scale(&a.field().from_i64(-1)),
                one: a.element_from_ints(&[1, 1, 0]),
            })
        );
        let one = a.element_from_ints(&[1, 1, 0]);
        assert_eq!(
            verify_h2_frame(&a, &e, &one),
            Err(Error::RelationFailed("e*h=h/2"))
        );
    }
}
