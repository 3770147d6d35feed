//! Finite-dimensional algebras given by structure constants.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{self, Matrix, Subspace};
use crate::report::{Check, Report};

/// Sparse product of basis vectors: `b_i b_j = Σ_k c_ij^k b_k`.
pub type Terms = Vec<(usize, Scalar)>;

/// An algebra over a field on an explicit basis.
///
/// The structure tensor is stored as one sparse term list per ordered pair
/// of basis indices. Coefficients in those lists are always nonzero and
/// sorted by output index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: FieldSpec,
    names: Vec<String>,
    table: Vec<Terms>,
    unit: Option<Element>,
}

impl Algebra {
    /// Builds an algebra from sparse `((i, j), terms)` entries. Repeated
    /// output indices inside one term list are summed; repeated `(i, j)`
    /// keys are rejected.
    pub fn new<I>(field: FieldSpec, names: Vec<String>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Terms)>,
    {
        let n = names.len();
        if n == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        let mut table: Vec<Option<Terms>> = vec![None; n * n];
        for ((i, j), terms) in entries {
            for idx in [i, j] {
                if idx >= n {
                    return Err(Error::IndexOutOfRange { index: idx, dim: n });
                }
            }
            let slot = &mut table[i * n + j];
            if slot.is_some() {
                return Err(Error::DuplicateEntry(i, j));
            }
            let mut dense = Element::zero(field, n);
            for (k, c) in terms {
                if k >= n {
                    return Err(Error::IndexOutOfRange { index: k, dim: n });
                }
                if !field.contains(&c) {
                    return Err(Error::FieldMismatch);
                }
                dense.coords_mut()[k] = &dense.coords()[k] + &c;
            }
            *slot = Some(sparse(&dense));
        }
        Ok(Algebra {
            field,
            names,
            table: table.into_iter().map(Option::unwrap_or_default).collect(),
            unit: None,
        })
    }

    /// Builds an algebra from a function computing basis products densely.
    pub fn from_fn<F>(field: FieldSpec, names: Vec<String>, mut product: F) -> Self
    where
        F: FnMut(usize, usize) -> Element,
    {
        let n = names.len();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let p = product(i, j);
                assert_eq!(p.dim(), n, "product has wrong dimension");
                table.push(sparse(&p));
            }
        }
        Algebra {
            field,
            names,
            table,
            unit: None,
        }
    }

    /// Declares `unit` and checks `unit·b = b·unit = b` for every basis `b`.
    pub fn with_unit(mut self, unit: Element) -> Result<Self> {
        self.check_element(&unit)?;
        for j in 0..self.dim() {
            let b = self.basis(j);
            if self.mul(&unit, &b) != b || self.mul(&b, &unit) != b {
                return Err(Error::BadUnit(format!("fails on basis vector {}", self.names[j])));
            }
        }
        self.unit = Some(unit);
        Ok(self)
    }

    /// Attaches the unit found by [`Algebra::find_unit`].
    pub fn with_found_unit(self) -> Result<Self> {
        let u = self.find_unit()?;
        self.with_unit(u)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn unit(&self) -> Option<&Element> {
        self.unit.as_ref()
    }

    pub fn structure(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    /// Nonempty structure entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Terms)> + '_ {
        let n = self.dim();
        self.table
            .iter()
            .enumerate()
            .filter(|(_, t)| !t.is_empty())
            .map(move |(idx, t)| ((idx / n, idx % n), t))
    }

    /// Replaces one structure constant; used to build tampered copies.
    pub fn set_structure(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        let n = self.dim();
        let mut dense = Element::zero(self.field, n);
        for (idx, v) in &self.table[i * n + j] {
            dense.coords_mut()[*idx] = v.clone();
        }
        dense.coords_mut()[k] = c;
        self.table[i * n + j] = sparse(&dense);
        self.unit = None;
    }

    pub fn basis(&self, i: usize) -> Element {
        Element::basis(self.field, self.dim(), i)
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.field, self.dim())
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Result<Element> {
        let e = Element::new(coords);
        self.check_element(&e)?;
        Ok(e)
    }

    /// `Σ c_k b_k` from integer coefficients.
    pub fn element_from_ints(&self, coords: &[i64]) -> Element {
        assert_eq!(coords.len(), self.dim());
        Element::new(coords.iter().map(|&c| self.field.from_i64(c)).collect())
    }

    pub fn check_element(&self, x: &Element) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.dim(),
            });
        }
        if !x.coords().iter().all(|c| self.field.contains(c)) {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// Bilinear product. Panics if the operands have the wrong dimension.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let n = self.dim();
        assert!(x.dim() == n && y.dim() == n, "element dimension mismatch");
        let mut out = self.zero();
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, s) in &self.table[i * n + j] {
                    let o = &mut out.coords_mut()[*k];
                    *o = &*o + &(&c * s);
                }
            }
        }
        out
    }

    /// Checked version of [`Algebra::mul`].
    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.mul(x, y))
    }

    pub fn square(&self, x: &Element) -> Element {
        self.mul(x, x)
    }

    /// `(xy)z - x(yz)`
    pub fn associator(&self, x: &Element, y: &Element, z: &Element) -> Element {
        &self.mul(&self.mul(x, y), z) - &self.mul(x, &self.mul(y, z))
    }

    /// `xy - yx`
    pub fn commutator(&self, x: &Element, y: &Element) -> Element {
        &self.mul(x, y) - &self.mul(y, x)
    }

    /// `k(x,y;z,t) = (xy,z,t) - (x,z,t)y - x(y,z,t)`
    pub fn pchelintsev_k(&self, x: &Element, y: &Element, z: &Element, t: &Element) -> Element {
        let a = self.associator(&self.mul(x, y), z, t);
        let b = self.mul(&self.associator(x, z, t), y);
        let c = self.mul(x, &self.associator(y, z, t));
        &(&a - &b) - &c
    }

    /// Matrix of `v ↦ v·e` on the basis.
    pub fn right_multiplication(&self, e: &Element) -> Matrix {
        self.operator_matrix(|b| self.mul(b, e))
    }

    pub fn left_multiplication(&self, e: &Element) -> Matrix {
        self.operator_matrix(|b| self.mul(e, b))
    }

    fn operator_matrix<F: Fn(&Element) -> Element>(&self, op: F) -> Matrix {
        let n = self.dim();
        let cols: Vec<Element> = (0..n).map(|j| op(&self.basis(j))).collect();
        (0..n)
            .map(|r| cols.iter().map(|c| c.coords()[r].clone()).collect())
            .collect()
    }

    /// Human-readable rendering on the basis names.
    pub fn format_element(&self, x: &Element) -> String {
        let parts: Vec<String> = x
            .coords()
            .iter()
            .zip(&self.names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, name)| {
                if c.is_one() {
                    name.clone()
                } else {
                    format!("({})*{}", c, name)
                }
            })
            .collect();
        if parts.is_empty() {
            String::from("0")
        } else {
            parts.join(" + ")
        }
    }

    /// `b_i b_j` as a dense vector.
    pub fn structure_vector(&self, i: usize, j: usize) -> Element {
        let mut e = self.zero();
        for (k, c) in self.structure(i, j) {
            e.coords_mut()[*k] = c.clone();
        }
        e
    }

    /// Structure constant `c_ij^k`.
    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> Scalar {
        coeff(self.field, self.structure(i, j), k)
    }

    fn basis_products(&self) -> Vec<Vec<Element>> {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| self.structure_vector(i, j)).collect())
            .collect()
    }

    pub fn is_commutative(&self) -> Report {
        let n = self.dim();
        let mut report = Report::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.structure(i, j) != self.structure(j, i) {
                    let (a, b) = (self.structure(i, j), self.structure(j, i));
                    let k = (0..n)
                        .find(|k| coeff(self.field, a, *k) != coeff(self.field, b, *k))
                        .expect("term lists differ");
                    report.push(Check::fail(
                        "commutative",
                        n * n,
                        format!(
                            "({}, {}, {}): {} != {}",
                            self.names[i],
                            self.names[j],
                            self.names[k],
                            coeff(self.field, a, k),
                            coeff(self.field, b, k)
                        ),
                    ));
                    return report;
                }
            }
        }
        report.push(Check::pass("commutative", n * n));
        report
    }

    /// Certifies the Jordan property via the linearized identity
    /// `(zt,x,y) + (yz,x,t) + (yt,x,z) = 0` on all basis quadruples.
    pub fn is_jordan(&self) -> Report {
        let mut report = self.is_commutative();
        if !report.passed() {
            report.push(Check::fail("jordan", 0, "algebra is not commutative"));
            return report;
        }
        report.push(self.linearized_jordan_check());
        report
    }

    fn linearized_jordan_check(&self) -> Check {
        let n = self.dim();
        let prod = self.basis_products();
        let basis: Vec<Element> = (0..n).map(|i| self.basis(i)).collect();
        let mut count = 0;
        // the expression is symmetric in (z, t, y), so z <= t <= y suffices
        for z in 0..n {
            for t in z..n {
                for y in t..n {
                    for x in 0..n {
                        count += 1;
                        let r = &(&self.associator(&prod[z][t], &basis[x], &basis[y])
                            + &self.associator(&prod[y][z], &basis[x], &basis[t]))
                            + &self.associator(&prod[y][t], &basis[x], &basis[z]);
                        if !r.is_zero() {
                            return Check::fail(
                                "jordan",
                                count,
                                format!(
                                    "(z,t,x,y) = ({}, {}, {}, {}): residual {}",
                                    self.names[z],
                                    self.names[t],
                                    self.names[x],
                                    self.names[y],
                                    self.format_element(&r)
                                ),
                            );
                        }
                    }
                }
            }
        }
        Check::pass("jordan", count)
    }

    pub fn is_associative(&self) -> Report {
        let n = self.dim();
        let prod = self.basis_products();
        let mut report = Report::new();
        for i in 0..n {
            for (j, pij) in prod[i].iter().enumerate() {
                for (k, pjk) in prod[j].iter().enumerate() {
                    let lhs = self.mul(pij, &self.basis(k));
                    let rhs = self.mul(&self.basis(i), pjk);
                    if lhs != rhs {
                        report.push(Check::fail(
                            "associative",
                            i * n * n + j * n + k + 1,
                            format!(
                                "({}, {}, {}): associator {}",
                                self.names[i],
                                self.names[j],
                                self.names[k],
                                self.format_element(&(&lhs - &rhs))
                            ),
                        ));
                        return report;
                    }
                }
            }
        }
        report.push(Check::pass("associative", n * n * n));
        report
    }

    /// The two-sided unit, solved from `u·b_j = b_j = b_j·u`.
    pub fn find_unit(&self) -> Result<Element> {
        let n = self.dim();
        let mut rows: Matrix = Vec::with_capacity(2 * n * n);
        let mut rhs = Vec::with_capacity(2 * n * n);
        for j in 0..n {
            for k in 0..n {
                let target = if j == k {
                    self.field.one()
                } else {
                    self.field.zero()
                };
                rows.push(
                    (0..n)
                        .map(|i| coeff(self.field, self.structure(i, j), k))
                        .collect(),
                );
                rhs.push(target.clone());
                rows.push(
                    (0..n)
                        .map(|i| coeff(self.field, self.structure(j, i), k))
                        .collect(),
                );
                rhs.push(target);
            }
        }
        linalg::solve(self.field, &rows, &rhs, n)
            .map(Element::new)
            .ok_or(Error::NoUnit)
    }

    /// Smallest subspace containing `gens` and closed under the product.
    pub fn span_closure(&self, gens: &[Element]) -> Subspace {
        let n = self.dim();
        let mut space = Subspace::span_elements(self.field, n, gens);
        loop {
            let basis = space.basis_elements();
            let mut vectors: Vec<Vec<Scalar>> = basis.iter().map(|b| b.coords().to_vec()).collect();
            for (a, x) in basis.iter().enumerate() {
                for y in &basis[a..] {
                    vectors.push(self.mul(x, y).into_coords());
                    vectors.push(self.mul(y, x).into_coords());
                }
            }
            let next = Subspace::span(self.field, n, vectors);
            if next.dim() == space.dim() {
                return space;
            }
            space = next;
        }
    }
}

fn coeff(field: FieldSpec, terms: &[(usize, Scalar)], k: usize) -> Scalar {
    terms
        .iter()
        .find(|(idx, _)| *idx == k)
        .map(|(_, c)| c.clone())
        .unwrap_or_else(|| field.zero())
}

fn sparse(dense: &Element) -> Terms {
    dense
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}
