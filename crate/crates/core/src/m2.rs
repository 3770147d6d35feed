//! 2×2 matrices over the base field and the basis `{e, f, h, k}` of M₂(F),
//! where `e = e11`, `f = e22`, `h = e12 + e21`, `k = e12 - e21`.

use core::ops::{Add, Mul, Neg, Sub};

use crate::field::{FieldSpec, Scalar};

/// Index of `e` in the `{e, f, h, k}` basis.
pub const E: usize = 0;
pub const F: usize = 1;
pub const H: usize = 2;
pub const K: usize = 3;

pub const BASIS_NAMES: [&str; 4] = ["e", "f", "h", "k"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub m: [[Scalar; 2]; 2],
}

impl Mat2 {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Self {
        Mat2 { m: [[a, b], [c, d]] }
    }

    pub fn from_ints(field: FieldSpec, a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(
            field.from_i64(a),
            field.from_i64(b),
            field.from_i64(c),
            field.from_i64(d),
        )
    }

    pub fn zero(field: FieldSpec) -> Self {
        Self::from_ints(field, 0, 0, 0, 0)
    }

    pub fn identity(field: FieldSpec) -> Self {
        Self::from_ints(field, 1, 0, 0, 1)
    }

    /// The basis matrix with the given index in `{e, f, h, k}`.
    pub fn basis(field: FieldSpec, index: usize) -> Self {
        match index {
            E => Self::from_ints(field, 1, 0, 0, 0),
            F => Self::from_ints(field, 0, 0, 0, 1),
            H => Self::from_ints(field, 0, 1, 1, 0),
            K => Self::from_ints(field, 0, 1, -1, 0),
            _ => panic!("M2 basis index out of range"),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.m[0][0].field()
    }

    /// Coordinates on `{e, f, h, k}`.
    pub fn coords(&self) -> [Scalar; 4] {
        let half = self.field().half();
        [
            self.m[0][0].clone(),
            self.m[1][1].clone(),
            &(&self.m[0][1] + &self.m[1][0]) * &half,
            &(&self.m[0][1] - &self.m[1][0]) * &half,
        ]
    }

    pub fn from_coords(field: FieldSpec, c: &[Scalar]) -> Self {
        (0..4).fold(Self::zero(field), |acc, i| {
            acc + Self::basis(field, i).scale(&c[i])
        })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Mat2 {
            m: [
                [&self.m[0][0] * c, &self.m[0][1] * c],
                [&self.m[1][0] * c, &self.m[1][1] * c],
            ],
        }
    }

    pub fn transpose(&self) -> Self {
        Mat2::new(
            self.m[0][0].clone(),
            self.m[1][0].clone(),
            self.m[0][1].clone(),
            self.m[1][1].clone(),
        )
    }

    pub fn trace(&self) -> Scalar {
        &self.m[0][0] + &self.m[1][1]
    }

    /// `a·b = ½(ab + ba)`
    pub fn jordan(&self, other: &Mat2) -> Mat2 {
        (self * other + other * self).scale(&self.field().half())
    }

    /// `[a, b] = ab - ba`
    pub fn commutator(&self, other: &Mat2) -> Mat2 {
        self * other - other * self
    }

    /// Jordan associator `(a, b, c)₊` in M₂(F)⁺.
    pub fn jordan_associator(&self, b: &Mat2, c: &Mat2) -> Mat2 {
        self.jordan(b).jordan(c) - self.jordan(&b.jordan(c))
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(Scalar::is_zero)
    }
}

impl<'a> Mul<&'a Mat2> for &'a Mat2 {
    type Output = Mat2;
    fn mul(self, o: &'a Mat2) -> Mat2 {
        let a = &self.m;
        let b = &o.m;
        Mat2::new(
            &a[0][0] * &b[0][0] + &a[0][1] * &b[1][0],
            &a[0][0] * &b[0][1] + &a[0][1] * &b[1][1],
            &a[1][0] * &b[0][0] + &a[1][1] * &b[1][0],
            &a[1][0] * &b[0][1] + &a[1][1] * &b[1][1],
        )
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, o: Mat2) -> Mat2 {
        let [[a, b], [c, d]] = self.m;
        let [[w, x], [y, z]] = o.m;
        Mat2::new(a + w, b + x, c + y, d + z)
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, o: Mat2) -> Mat2 {
        self + (-o)
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        let [[a, b], [c, d]] = self.m;
        Mat2::new(-a, -b, -c, -d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_table() {
        let q = FieldSpec::Rational;
        let b = |i| Mat2::basis(q, i);
        assert_eq!(b(E).commutator(&b(H)), b(K));
        assert_eq!(b(E).commutator(&b(K)), b(H));
        assert_eq!(b(K).jordan(&b(K)), -Mat2::identity(q));
        assert_eq!(b(E).jordan(&b(K)), b(K).scale(&q.half()));
    }

    #[test]
    fn coords_roundtrip() {
        let q = FieldSpec::Rational;
        let m = Mat2::from_ints(q, 1, 2, 3, 4);
        assert_eq!(Mat2::from_coords(q, &m.coords()), m);
    }
}
