//! Associative algebras with involution, hermitian 2×2 matrices over them,
//! the symmetric/skew split, and the envelope of a total bracket.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::h2::frame::{verify_h2_frame, H2Frame};
use crate::h2::graded::{BilinearTable, Convention, GradedBracketAlgebra, GradedTables};
use crate::linalg::{self, LinearMap, Subspace};

/// `(A, ⋆)` with `A` associative and unital and `⋆` an involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutiveAlgebra {
    algebra: Algebra,
    star: LinearMap,
}

impl InvolutiveAlgebra {
    /// Certifies associativity, the unit, `⋆² = id`, `⋆(1) = 1` and
    /// `⋆(xy) = ⋆(y)⋆(x)` on basis pairs.
    pub fn new(algebra: Algebra, star: LinearMap) -> Result<Self> {
        let n = algebra.dim();
        if star.field() != algebra.field() {
            return Err(Error::FieldMismatch);
        }
        if star.in_dim() != n || star.out_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: star.in_dim(),
            });
        }
        if let Some(f) = algebra.is_associative().first_failure() {
            return Err(Error::NotAssociative(format!("{f}")));
        }
        let algebra = if algebra.unit().is_some() {
            algebra
        } else {
            algebra.with_found_unit()?
        };
        let one = algebra.unit().expect("unit set above").clone();
        if star.compose(&star) != LinearMap::identity(algebra.field(), n) {
            return Err(Error::NotInvolutive(String::from("star is not of order two")));
        }
        if star.apply(&one) != one {
            return Err(Error::NotInvolutive(String::from("star does not fix the unit")));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = star.apply(&algebra.structure_vector(i, j));
                let rhs = algebra.mul(&star.column(j), &star.column(i));
                if lhs != rhs {
                    return Err(Error::NotInvolutive(format!(
                        "star({}*{}) != star({})*star({})",
                        algebra.names()[i],
                        algebra.names()[j],
                        algebra.names()[j],
                        algebra.names()[i]
                    )));
                }
            }
        }
        Ok(InvolutiveAlgebra { algebra, star })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn star(&self) -> &LinearMap {
        &self.star
    }

    pub fn unit(&self) -> &Element {
        self.algebra.unit().expect("certified unital")
    }

    fn eigenspace(&self, sign: i64) -> Subspace {
        let field = self.algebra.field();
        let c = field.from_i64(sign);
        let rows: Vec<Vec<Scalar>> = self
            .star
            .rows()
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, x)| if i == j { x - &c } else { x.clone() })
                    .collect()
            })
            .collect();
        linalg::kernel(field, &rows, self.algebra.dim())
    }

    /// `H = {x : x⋆ = x}`.
    pub fn symmetric(&self) -> Subspace {
        self.eigenspace(1)
    }

    /// `K = {x : x⋆ = -x}`.
    pub fn skew(&self) -> Subspace {
        self.eigenspace(-1)
    }
}

fn coords_in(space: &Subspace, v: &Element) -> Vec<Scalar> {
    space
        .coordinates(v.coords())
        .expect("value lies in the star eigenspace")
}

/// `S₀ = H`, `S₁ = K` with `x∘y = ½(xy + yx)` and the total bracket
/// `{x,y} = ¼(xy - yx)`.
pub fn split_involution(inv: &InvolutiveAlgebra) -> Result<GradedBracketAlgebra> {
    let a = inv.algebra();
    let field = a.field();
    let (hs, ks) = (inv.symmetric(), inv.skew());
    let (hb, kb) = (hs.basis_elements(), ks.basis_elements());
    let (d0, d1) = (hb.len(), kb.len());
    let half = field.half();
    let quarter = field.quarter();
    let jordan = |x: &Element, y: &Element| (&a.mul(x, y) + &a.mul(y, x)).scale(&half);
    let bracket = |x: &Element, y: &Element| a.commutator(x, y).scale(&quarter);

    let mut t = GradedTables::zero(field, d0, d1);
    let mut b11 = BilinearTable::zero(field, d1, d1, d1);
    for (i, x) in hb.iter().enumerate() {
        for (j, y) in hb.iter().enumerate() {
            t.p00.set(i, j, coords_in(&hs, &jordan(x, y)))?;
            t.b00.set(i, j, coords_in(&ks, &bracket(x, y)))?;
        }
        for (j, y) in kb.iter().enumerate() {
            t.p01.set(i, j, coords_in(&ks, &jordan(x, y)))?;
            t.b01.set(i, j, coords_in(&hs, &bracket(x, y)))?;
        }
    }
    for (i, x) in kb.iter().enumerate() {
        for (j, y) in kb.iter().enumerate() {
            t.p11.set(i, j, coords_in(&hs, &jordan(x, y)))?;
            b11.set(i, j, coords_in(&ks, &bracket(x, y)))?;
        }
    }
    t.b11 = Some(b11);
    let names: Vec<String> = (0..d0)
        .map(|i| format!("h{i}"))
        .chain((0..d1).map(|i| format!("k{i}")))
        .collect();
    let unit = coords_in(&hs, inv.unit());
    GradedBracketAlgebra::new(field, names, d0, t, unit, Convention::EpsilonRescaled)
}

/// `x*y = xy + 2{x,y}` on `S`, with `⋆` acting as `1` on `S₀` and `-1` on
/// `S₁`. Associativity is certified, not assumed.
pub fn cohn_envelope(s: &GradedBracketAlgebra) -> Result<InvolutiveAlgebra> {
    if !s.is_total() {
        return Err(Error::MissingBracketSlot);
    }
    let field = s.field();
    let two = field.from_i64(2);
    let product = s.product();
    let alg = Algebra::from_fn(field, s.names().to_vec(), |i, j| {
        let (x, y) = (s.basis_hom(i), s.basis_hom(j));
        let br = s.bracket_hom(&x, &y).expect("total bracket");
        let mut v = product.structure_vector(i, j);
        v.add_scaled(&two, &br.value);
        v
    })
    .with_unit(s.unit().clone())?;
    let d0 = s.even_dim();
    let star_cols: Vec<Element> = (0..s.dim())
        .map(|i| {
            let b = Element::basis(field, s.dim(), i);
            if i < d0 {
                b
            } else {
                -b
            }
        })
        .collect();
    let star = LinearMap::from_columns(field, s.dim(), &star_cols);
    InvolutiveAlgebra::new(alg, star)
}

/// 2×2 matrices over `A`, entries stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
struct BlockMatrix([Element; 4]);

impl BlockMatrix {
    fn mul(&self, o: &BlockMatrix, a: &Algebra) -> BlockMatrix {
        let [p, q, r, s] = &self.0;
        let [w, x, y, z] = &o.0;
        BlockMatrix([
            &a.mul(p, w) + &a.mul(q, y),
            &a.mul(p, x) + &a.mul(q, z),
            &a.mul(r, w) + &a.mul(s, y),
            &a.mul(r, x) + &a.mul(s, z),
        ])
    }

    fn jordan(&self, o: &BlockMatrix, a: &Algebra) -> BlockMatrix {
        let l = self.mul(o, a);
        let r = o.mul(self, a);
        let half = a.field().half();
        let mut out = l.0.clone();
        for (k, v) in out.iter_mut().enumerate() {
            *v = (&l.0[k] + &r.0[k]).scale(&half);
        }
        BlockMatrix(out)
    }
}

/// Hermitian 2×2 matrices over `(A, ⋆)` under `½(XY + YX)`, on the basis
/// `e⊗hᵢ, f⊗hᵢ, h⊗hᵢ, k⊗kⱼ` with the frame `(e⊗1, h⊗1)`.
pub fn build_h2_matrix(inv: &InvolutiveAlgebra) -> Result<(Algebra, H2Frame)> {
    let a = inv.algebra();
    let field = a.field();
    let (hs, ks) = (inv.symmetric(), inv.skew());
    let (hb, kb) = (hs.basis_elements(), ks.basis_elements());
    let (d0, d1) = (hb.len(), kb.len());
    let zero = a.zero();
    let mut basis = Vec::with_capacity(3 * d0 + d1);
    let mut names = Vec::with_capacity(3 * d0 + d1);
    for x in &hb {
        basis.push(BlockMatrix([x.clone(), zero.clone(), zero.clone(), zero.clone()]));
    }
    for x in &hb {
        basis.push(BlockMatrix([zero.clone(), zero.clone(), zero.clone(), x.clone()]));
    }
    for x in &hb {
        basis.push(BlockMatrix([zero.clone(), x.clone(), x.clone(), zero.clone()]));
    }
    for x in &kb {
        basis.push(BlockMatrix([zero.clone(), x.clone(), -x.clone(), zero.clone()]));
    }
    for blk in ["e", "f", "h"] {
        names.extend((0..d0).map(|i| format!("{blk}.h{i}")));
    }
    names.extend((0..d1).map(|i| format!("k.k{i}")));

    let half = field.half();
    let star = inv.star();
    let decode = |m: &BlockMatrix| {
        let [p, q, _, s] = &m.0;
        let q_star = star.apply(q);
        let sym = (q + &q_star).scale(&half);
        let skew = (q - &q_star).scale(&half);
        let mut out = Vec::with_capacity(3 * d0 + d1);
        out.extend(coords_in(&hs, p));
        out.extend(coords_in(&hs, s));
        out.extend(coords_in(&hs, &sym));
        out.extend(coords_in(&ks, &skew));
        Element::new(out)
    };
    let j = Algebra::from_fn(field, names, |x, y| decode(&basis[x].jordan(&basis[y], a)));
    let one_h = coords_in(&hs, inv.unit());
    let dim = j.dim();
    let mut one = Element::zero(field, dim);
    let mut e = Element::zero(field, dim);
    let mut h = Element::zero(field, dim);
    for (i, c) in one_h.iter().enumerate() {
        one.coords_mut()[i] = c.clone();
        one.coords_mut()[d0 + i] = c.clone();
        e.coords_mut()[i] = c.clone();
        h.coords_mut()[2 * d0 + i] = c.clone();
    }
    let j = j.with_unit(one)?;
    let frame = verify_h2_frame(&j, &e, &h)?;
    Ok((j, frame))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::catalog::{exchange, field_with_identity, m2, m2_transpose};
    use crate::constructions::tensor::build_tensor_algebra;
    use crate::field::FieldSpec;
    use crate::h2::reconstruct::same_structure;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    #[test]
    fn split_dims() {
        let s = split_involution(&field_with_identity(q())).unwrap();
        assert_eq!((s.even_dim(), s.odd_dim()), (1, 0));
        let s = split_involution(&m2_transpose(q())).unwrap();
        assert_eq!((s.even_dim(), s.odd_dim()), (3, 1));
        // {e, k} = [e, k]/4 = h/4
        let b = s.tables().b01.get(0, 0);
        assert_eq!(b, &[q().zero(), q().zero(), q().quarter()]);
        let s = split_involution(&exchange(q())).unwrap();
        assert_eq!((s.even_dim(), s.odd_dim()), (1, 1));
        assert!(s.tables().b00.is_zero() && s.tables().b01.is_zero());
    }

    #[test]
    fn envelope_of_m2_plus_is_m2() {
        let s = split_involution(&m2_transpose(q())).unwrap();
        let env = cohn_envelope(&s).unwrap();
        assert!(same_structure(env.algebra(), &m2(q())));
        let a = env.algebra();
        // e*h = h/2 + k/2 = e12
        let eh = a.mul(&a.basis(0), &a.basis(2));
        assert_eq!(eh, a.element_from_ints(&[0, 0, 1, 1]).scale(&q().half()));
        assert_eq!(env.star(), m2_transpose(q()).star());
    }

    #[test]
    fn envelope_of_exchange_is_commutative_semisimple() {
        let s = split_involution(&exchange(q())).unwrap();
        let env = cohn_envelope(&s).unwrap();
        assert!(env.algebra().is_commutative().passed());
        // a two-dimensional commutative algebra with unit and an idempotent
        // p = (1 + k)/2 other than 0, 1 is F⊕F
        let a = env.algebra();
        let p = (&a.basis(0) + &a.basis(1)).scale(&q().half());
        assert_eq!(a.square(&p), p);
    }

    #[test]
    fn envelope_needs_total_bracket() {
        let s = split_involution(&m2_transpose(q())).unwrap();
        let partial = s.with_odd_bracket(None).unwrap();
        assert_eq!(cohn_envelope(&partial), Err(Error::MissingBracketSlot));
    }

    #[test]
    fn envelope_of_broken_bracket_is_not_associative() {
        let s = split_involution(&m2_transpose(q())).unwrap();
        let doubled = s.with_scaled_bracket(&q().from_i64(2), Convention::EpsilonRescaled);
        assert!(matches!(cohn_envelope(&doubled), Err(Error::NotAssociative(_))));
    }

    #[test]
    fn h2_matrix_examples() {
        let (j, _) = build_h2_matrix(&field_with_identity(q())).unwrap();
        assert_eq!(j.dim(), 3);
        let inv = m2_transpose(q());
        let (j, _) = build_h2_matrix(&inv).unwrap();
        assert_eq!(j.dim(), 10);
        let t = build_tensor_algebra(&split_involution(&inv).unwrap());
        assert_eq!(j, t);
        let (x, _) = build_h2_matrix(&exchange(q())).unwrap();
        assert_eq!(x.dim(), 4);
        assert!(x.is_jordan().passed());
    }

    #[test]
    fn rejects_non_involutions() {
        let a = m2(q());
        let id = LinearMap::identity(q(), 4);
        assert!(matches!(
            InvolutiveAlgebra::new(a, id),
            Err(Error::NotInvolutive(_))
        ));
    }
}
