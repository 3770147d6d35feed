//! Exact Gaussian elimination, subspaces and linear maps.
//!
//! Elimination always pivots on the leftmost available column and the first
//! row with a nonzero entry there, so every basis produced here is the same
//! on every run.

use alloc::vec;
use alloc::vec::Vec;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// Row-major matrix over one field.
pub type Matrix = Vec<Vec<Scalar>>;

/// Reduces `rows` (each of length `ncols`) to reduced row-echelon form in
/// place, drops zero rows and returns the pivot columns.
pub fn rref(rows: &mut Matrix, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut().skip(col) {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *x = &*x - &(&factor * p);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Scalar>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Right null space `{v : M v = 0}` of an `nrows x ncols` matrix.
pub fn kernel(field: FieldSpec, rows: &[Vec<Scalar>], ncols: usize) -> Subspace {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut basis = Vec::new();
    let mut next_pivot = 0;
    for col in 0..ncols {
        if next_pivot < pivots.len() && pivots[next_pivot] == col {
            next_pivot += 1;
            continue;
        }
        let mut v = vec![field.zero(); ncols];
        v[col] = field.one();
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = -&row[col];
        }
        basis.push(v);
    }
    Subspace::span(field, ncols, basis)
}

/// Solves `A x = b`; returns one solution (free variables set to zero) or
/// `None` if the system is inconsistent.
pub fn solve(field: FieldSpec, a: &[Vec<Scalar>], b: &[Scalar], ncols: usize) -> Option<Vec<Scalar>> {
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![field.zero(); ncols];
    for (row, &pc) in aug.iter().zip(&pivots) {
        x[pc] = row[ncols].clone();
    }
    Some(x)
}

/// A linear subspace of `F^n`, stored as a reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    rows: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span<I>(field: FieldSpec, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut rows: Matrix = vectors.into_iter().collect();
        for r in &rows {
            assert_eq!(r.len(), ambient, "vector length differs from ambient dimension");
        }
        let pivots = rref(&mut rows, ambient);
        Subspace {
            field,
            ambient,
            rows,
            pivots,
        }
    }

    pub fn span_elements<'a, I>(field: FieldSpec, ambient: usize, elements: I) -> Self
    where
        I: IntoIterator<Item = &'a Element>,
    {
        Self::span(field, ambient, elements.into_iter().map(|e| e.coords().to_vec()))
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Self::span(field, ambient, Vec::new())
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Self::span(
            field,
            ambient,
            (0..ambient).map(|i| Element::basis(field, ambient, i).into_coords()),
        )
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn basis_elements(&self) -> Vec<Element> {
        self.rows.iter().cloned().map(Element::new).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` with respect to the echelon basis, if `v` lies in
    /// the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        let coeffs: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, row) in coeffs.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in residual.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = &*x - &(c * y);
                }
            }
        }
        residual.iter().all(Scalar::is_zero).then_some(coeffs)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_element(&self, v: &Element) -> bool {
        self.contains(v.coords())
    }

    /// Linear combination of the basis rows.
    pub fn combine(&self, coeffs: &[Scalar]) -> Element {
        assert_eq!(coeffs.len(), self.dim());
        let mut out = Element::zero(self.field, self.ambient);
        for (c, row) in coeffs.iter().zip(&self.rows) {
            out.add_scaled(c, &Element::new(row.clone()));
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(
            self.field,
            self.ambient,
            self.rows.iter().chain(&other.rows).cloned(),
        )
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // U ∩ W is the common null space of both annihilators
        let ann_u = kernel(self.field, &self.rows, self.ambient);
        let ann_w = kernel(self.field, &other.rows, self.ambient);
        let stacked: Matrix = ann_u.rows.iter().chain(&ann_w.rows).cloned().collect();
        kernel(self.field, &stacked, self.ambient)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}

/// A linear map `F^cols -> F^rows`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    field: FieldSpec,
    matrix: Matrix,
    cols: usize,
}

impl LinearMap {
    pub fn from_rows(field: FieldSpec, matrix: Matrix, cols: usize) -> Self {
        for r in &matrix {
            assert_eq!(r.len(), cols);
        }
        LinearMap { field, matrix, cols }
    }

    /// Builds the map sending the `j`-th basis vector to `images[j]`.
    pub fn from_columns(field: FieldSpec, out_dim: usize, images: &[Element]) -> Self {
        let matrix = (0..out_dim)
            .map(|r| images.iter().map(|img| img.coords()[r].clone()).collect())
            .collect();
        LinearMap {
            field,
            matrix,
            cols: images.len(),
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let images: Vec<Element> = (0..n).map(|i| Element::basis(field, n, i)).collect();
        Self::from_columns(field, n, &images)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn in_dim(&self) -> usize {
        self.cols
    }

    pub fn out_dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.matrix
    }

    pub fn column(&self, j: usize) -> Element {
        Element::new(self.matrix.iter().map(|r| r[j].clone()).collect())
    }

    pub fn apply(&self, v: &Element) -> Element {
        assert_eq!(v.dim(), self.cols, "linear map applied to wrong dimension");
        Element::new(
            self.matrix
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(v.coords())
                        .filter(|(_, x)| !x.is_zero())
                        .fold(self.field.zero(), |acc, (a, x)| acc + a * x)
                })
                .collect(),
        )
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        let images: Vec<Element> = (0..other.cols).map(|j| self.apply(&other.column(j))).collect();
        LinearMap::from_columns(self.field, self.out_dim(), &images)
    }

    pub fn is_invertible(&self) -> bool {
        self.out_dim() == self.cols && rank(&self.matrix, self.cols) == self.cols
    }

    pub fn inverse(&self) -> Result<LinearMap> {
        let n = self.cols;
        if self.out_dim() != n {
            return Err(Error::Singular);
        }
        let mut aug: Matrix = self
            .matrix
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend((0..n).map(|j| {
                    if i == j {
                        self.field.one()
                    } else {
                        self.field.zero()
                    }
                }));
                r
            })
            .collect();
        let pivots = rref(&mut aug, 2 * n);
        if pivots.iter().take_while(|&&c| c < n).count() < n {
            return Err(Error::Singular);
        }
        let matrix = aug.into_iter().map(|r| r[n..].to_vec()).collect();
        Ok(LinearMap {
            field: self.field,
            matrix,
            cols: n,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    fn row(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| q().from_i64(x)).collect()
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let m = vec![row(&[1, 0, 0]), row(&[0, 1, 0]), row(&[0, 0, 1])];
        assert_eq!(kernel(q(), &m, 3).dim(), 0);
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        let m = vec![row(&[0, 0, 0, 0]), row(&[0, 0, 0, 0])];
        let k = kernel(q(), &m, 4);
        assert_eq!(k, Subspace::full(q(), 4));
    }

    #[test]
    fn kernel_by_hand() {
        let m = vec![row(&[1, 1]), row(&[2, 2])];
        let k = kernel(q(), &m, 2);
        assert_eq!(k.basis(), &[row(&[1, -1])]);
    }

    #[test]
    fn kernel_rank_nullity() {
        let m = vec![row(&[1, 2, 3, 4]), row(&[2, 4, 6, 8]), row(&[0, 1, 0, 1])];
        let k = kernel(q(), &m, 4);
        assert_eq!(k.dim(), 4 - rank(&m, 4));
        for v in k.basis() {
            for r in &m {
                let dot = r.iter().zip(v).fold(q().zero(), |acc, (a, b)| acc + a * b);
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn echelon_invariants() {
        let s = Subspace::span(q(), 3, vec![row(&[0, 2, 4]), row(&[3, 1, 0]), row(&[3, 3, 4])]);
        assert_eq!(s.dim(), 2);
        assert_eq!(s.pivots(), &[0, 1]);
        for (r, &p) in s.basis().iter().zip(s.pivots()) {
            assert!(r[p].is_one());
        }
        assert!(s.basis()[0][1].is_zero());
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = vec![row(&[1, 1]), row(&[1, -1])];
        let x = solve(q(), &a, &row(&[3, 1]), 2).unwrap();
        assert_eq!(x, row(&[2, 1]));
        let a = vec![row(&[1, 1]), row(&[2, 2])];
        assert!(solve(q(), &a, &row(&[1, 3]), 2).is_none());
    }

    #[test]
    fn coordinates_and_intersection() {
        let u = Subspace::span(q(), 3, vec![row(&[1, 0, 0]), row(&[0, 1, 0])]);
        let w = Subspace::span(q(), 3, vec![row(&[0, 1, 0]), row(&[0, 0, 1])]);
        let i = u.intersection(&w);
        assert_eq!(i.basis(), &[row(&[0, 1, 0])]);
        assert_eq!(u.coordinates(&row(&[2, 5, 0])).unwrap(), row(&[2, 5]));
        assert!(u.coordinates(&row(&[2, 5, 1])).is_none());
        assert_eq!(u.sum(&w).dim(), 3);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = LinearMap::from_rows(q(), vec![row(&[2, 1]), row(&[1, 1])], 2);
        let inv = m.inverse().unwrap();
        assert_eq!(m.compose(&inv), LinearMap::identity(q(), 2));
        let singular = LinearMap::from_rows(q(), vec![row(&[1, 1]), row(&[1, 1])], 2);
        assert_eq!(singular.inverse(), Err(Error::Singular));
        assert!(!singular.is_invertible());
    }
}
