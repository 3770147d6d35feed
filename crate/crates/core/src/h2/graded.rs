//! ℤ₂-graded Jordan algebras `S = S₀ + S₁` with a partial odd bracket.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// Sign convention of the stored bracket.
///
/// `Raw` is the bracket read off an H₂-algebra, satisfying
/// `(x,y,z) = 4{{x,z},y}`. `EpsilonRescaled` is that bracket multiplied by
/// a square root of -1, satisfying `(x,y,z) = 4{y,{x,z}}`; it is the form
/// consumed by the tensor-product reconstruction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    Raw,
    EpsilonRescaled,
}

impl Convention {
    pub fn as_str(self) -> &'static str {
        match self {
            Convention::Raw => "raw",
            Convention::EpsilonRescaled => "epsilon_rescaled",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "raw" => Some(Convention::Raw),
            "epsilon_rescaled" => Some(Convention::EpsilonRescaled),
            _ => None,
        }
    }
}

/// Dense table of a bilinear map `F^rows × F^cols → F^out` on basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearTable {
    rows: usize,
    cols: usize,
    out: usize,
    values: Vec<Vec<Scalar>>,
}

impl BilinearTable {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize, out: usize) -> Self {
        BilinearTable {
            rows,
            cols,
            out,
            values: vec![vec![field.zero(); out]; rows * cols],
        }
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.rows, self.cols, self.out)
    }

    pub fn get(&self, i: usize, j: usize) -> &[Scalar] {
        &self.values[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Vec<Scalar>) -> Result<()> {
        if i >= self.rows {
            return Err(Error::IndexOutOfRange {
                index: i,
                dim: self.rows,
            });
        }
        if j >= self.cols {
            return Err(Error::IndexOutOfRange {
                index: j,
                dim: self.cols,
            });
        }
        if value.len() != self.out {
            return Err(Error::DimensionMismatch {
                expected: self.out,
                found: value.len(),
            });
        }
        self.values[i * self.cols + j] = value;
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().flatten().all(Scalar::is_zero)
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        BilinearTable {
            values: self
                .values
                .iter()
                .map(|v| v.iter().map(|x| x * c).collect())
                .collect(),
            ..*self
        }
    }

    pub fn eval(&self, field: FieldSpec, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![field.zero(); self.out];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let c = xi * yj;
                for (o, v) in out.iter_mut().zip(self.get(i, j)) {
                    if !v.is_zero() {
                        *o = &*o + &(&c * v);
                    }
                }
            }
        }
        out
    }

    /// Nonzero entries `(i, j, value)` in row-major order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &[Scalar])> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| v.iter().any(|x| !x.is_zero()))
            .map(move |(idx, v)| (idx / self.cols, idx % self.cols, v.as_slice()))
    }

    fn is_antisymmetric(&self) -> Option<(usize, usize)> {
        for i in 0..self.rows {
            for j in i..self.cols {
                let ok = self
                    .get(i, j)
                    .iter()
                    .zip(self.get(j, i))
                    .all(|(a, b)| (a + b).is_zero());
                if !ok {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// Parity of a homogeneous element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl core::ops::Add for Parity {
    type Output = Parity;

    fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A homogeneous element of `S` tagged with its structural parity; zero
/// vectors keep the parity of the expression that produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homogeneous {
    pub parity: Parity,
    pub value: Element,
}

/// The tables of the graded products and brackets:
/// products `S₀S₀ → S₀`, `S₀S₁ → S₁`, `S₁S₁ → S₀`; brackets `S₀×S₀ → S₁`,
/// `S₀×S₁ → S₀` and, when the bracket is total, `S₁×S₁ → S₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedTables {
    pub p00: BilinearTable,
    pub p01: BilinearTable,
    pub p11: BilinearTable,
    pub b00: BilinearTable,
    pub b01: BilinearTable,
    pub b11: Option<BilinearTable>,
}

impl GradedTables {
    pub fn zero(field: FieldSpec, even: usize, odd: usize) -> Self {
        GradedTables {
            p00: BilinearTable::zero(field, even, even, even),
            p01: BilinearTable::zero(field, even, odd, odd),
            p11: BilinearTable::zero(field, odd, odd, even),
            b00: BilinearTable::zero(field, even, even, odd),
            b01: BilinearTable::zero(field, even, odd, even),
            b11: None,
        }
    }
}

/// `S = S₀ + S₁` with a Jordan product and a partial odd anticommutative
/// bracket. Basis vectors of `S` are ordered even first, then odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBracketAlgebra {
    field: FieldSpec,
    even_dim: usize,
    odd_dim: usize,
    tables: GradedTables,
    convention: Convention,
    product: Algebra,
}

impl GradedBracketAlgebra {
    /// Validates table shapes, bracket anticommutativity on `S₀×S₀` (and
    /// `S₁×S₁` when present) and the unit, given in `S₀` coordinates.
    pub fn new(
        field: FieldSpec,
        names: Vec<String>,
        even_dim: usize,
        tables: GradedTables,
        unit: Vec<Scalar>,
        convention: Convention,
    ) -> Result<Self> {
        if even_dim == 0 || even_dim > names.len() {
            return Err(Error::DimensionMismatch {
                expected: names.len().max(1),
                found: even_dim,
            });
        }
        let odd_dim = names.len() - even_dim;
        let (d0, d1) = (even_dim, odd_dim);
        let expect = [
            (&tables.p00, (d0, d0, d0)),
            (&tables.p01, (d0, d1, d1)),
            (&tables.p11, (d1, d1, d0)),
            (&tables.b00, (d0, d0, d1)),
            (&tables.b01, (d0, d1, d0)),
        ];
        for (t, shape) in expect.iter() {
            check_shape(t, *shape)?;
        }
        if let Some(b11) = &tables.b11 {
            check_shape(b11, (d1, d1, d1))?;
            if let Some((i, j)) = b11.is_antisymmetric() {
                return Err(Error::NotAnticommutative(d0 + i, d0 + j));
            }
        }
        if let Some((i, j)) = tables.b00.is_antisymmetric() {
            return Err(Error::NotAnticommutative(i, j));
        }
        if unit.len() != d0 {
            return Err(Error::DimensionMismatch {
                expected: d0,
                found: unit.len(),
            });
        }
        let d = d0 + d1;
        let product = Algebra::from_fn(field, names, |i, j| {
            let v = match (i < d0, j < d0) {
                (true, true) => embed(field, d0, d1, tables.p00.get(i, j), Parity::Even),
                (true, false) => embed(field, d0, d1, tables.p01.get(i, j - d0), Parity::Odd),
                (false, true) => embed(field, d0, d1, tables.p01.get(j, i - d0), Parity::Odd),
                (false, false) => embed(field, d0, d1, tables.p11.get(i - d0, j - d0), Parity::Even),
            };
            debug_assert_eq!(v.dim(), d);
            v
        });
        let unit = embed(field, d0, d1, &unit, Parity::Even);
        let product = product
            .with_unit(unit)
            .map_err(|e| Error::BadUnit(format!("{e}")))?;
        Ok(GradedBracketAlgebra {
            field,
            even_dim,
            odd_dim,
            tables,
            convention,
            product,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn even_dim(&self) -> usize {
        self.even_dim
    }

    pub fn odd_dim(&self) -> usize {
        self.odd_dim
    }

    pub fn dim(&self) -> usize {
        self.even_dim + self.odd_dim
    }

    pub fn names(&self) -> &[String] {
        self.product.names()
    }

    pub fn tables(&self) -> &GradedTables {
        &self.tables
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// The Jordan algebra `S` (bracket forgotten), with its unit.
    pub fn product(&self) -> &Algebra {
        &self.product
    }

    pub fn unit(&self) -> &Element {
        self.product.unit().expect("unit checked at construction")
    }

    /// Unit in `S₀` coordinates.
    pub fn unit_even_coords(&self) -> Vec<Scalar> {
        self.unit().coords()[..self.even_dim].to_vec()
    }

    pub fn is_total(&self) -> bool {
        self.tables.b11.is_some()
    }

    pub fn is_trivial(&self) -> bool {
        self.tables.b00.is_zero()
            && self.tables.b01.is_zero()
            && self.tables.b11.as_ref().is_none_or(BilinearTable::is_zero)
    }

    pub fn parity_of_basis(&self, i: usize) -> Parity {
        if i < self.even_dim {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn basis_hom(&self, i: usize) -> Homogeneous {
        Homogeneous {
            parity: self.parity_of_basis(i),
            value: self.product.basis(i),
        }
    }

    pub fn mul_hom(&self, x: &Homogeneous, y: &Homogeneous) -> Homogeneous {
        Homogeneous {
            parity: x.parity + y.parity,
            value: self.product.mul(&x.value, &y.value),
        }
    }

    /// The bracket of two homogeneous elements, or `None` on the undefined
    /// `S₁×S₁` slot of a partial bracket.
    pub fn bracket_hom(&self, x: &Homogeneous, y: &Homogeneous) -> Option<Homogeneous> {
        let (d0, d1) = (self.even_dim, self.odd_dim);
        let (xe, xo) = x.value.coords().split_at(d0);
        let (ye, yo) = y.value.coords().split_at(d0);
        let value = match (x.parity, y.parity) {
            (Parity::Even, Parity::Even) => embed(
                self.field,
                d0,
                d1,
                &self.tables.b00.eval(self.field, xe, ye),
                Parity::Odd,
            ),
            (Parity::Even, Parity::Odd) => embed(
                self.field,
                d0,
                d1,
                &self.tables.b01.eval(self.field, xe, yo),
                Parity::Even,
            ),
            (Parity::Odd, Parity::Even) => -embed(
                self.field,
                d0,
                d1,
                &self.tables.b01.eval(self.field, ye, xo),
                Parity::Even,
            ),
            (Parity::Odd, Parity::Odd) => {
                let b11 = self.tables.b11.as_ref()?;
                embed(self.field, d0, d1, &b11.eval(self.field, xo, yo), Parity::Odd)
            }
        };
        Some(Homogeneous {
            parity: (x.parity + y.parity).flip(),
            value,
        })
    }

    /// Bracket of arbitrary elements, split into homogeneous parts; `None`
    /// if both have odd components and the bracket is partial.
    pub fn bracket(&self, x: &Element, y: &Element) -> Option<Element> {
        let parts = |v: &Element| {
            let (mut even, mut odd) = (v.clone(), v.clone());
            for c in &mut even.coords_mut()[self.even_dim..] {
                *c = self.field.zero();
            }
            for c in &mut odd.coords_mut()[..self.even_dim] {
                *c = self.field.zero();
            }
            [
                Homogeneous {
                    parity: Parity::Even,
                    value: even,
                },
                Homogeneous {
                    parity: Parity::Odd,
                    value: odd,
                },
            ]
        };
        let mut acc = self.product.zero();
        for a in parts(x).iter().filter(|h| !h.value.is_zero()) {
            for b in parts(y).iter().filter(|h| !h.value.is_zero()) {
                acc = &acc + &self.bracket_hom(a, b)?.value;
            }
        }
        Some(acc)
    }

    /// Copy with all bracket tables multiplied by `c` and the convention
    /// replaced.
    pub fn with_scaled_bracket(&self, c: &Scalar, convention: Convention) -> Self {
        let mut out = self.clone();
        out.tables.b00 = self.tables.b00.scaled(c);
        out.tables.b01 = self.tables.b01.scaled(c);
        out.tables.b11 = self.tables.b11.as_ref().map(|t| t.scaled(c));
        out.convention = convention;
        out
    }

    /// Copy with the `S₁×S₁` bracket slot replaced.
    pub fn with_odd_bracket(&self, b11: Option<BilinearTable>) -> Result<Self> {
        let mut tables = self.tables.clone();
        tables.b11 = b11;
        Self::new(
            self.field,
            self.names().to_vec(),
            self.even_dim,
            tables,
            self.unit_even_coords(),
            self.convention,
        )
    }

    /// Copy with the tables replaced wholesale; used to build tampered
    /// negative controls.
    pub fn with_tables(&self, tables: GradedTables) -> Result<Self> {
        Self::new(
            self.field,
            self.names().to_vec(),
            self.even_dim,
            tables,
            self.unit_even_coords(),
            self.convention,
        )
    }
}

fn check_shape(t: &BilinearTable, shape: (usize, usize, usize)) -> Result<()> {
    let (r, c, o) = t.shape();
    for (found, expected) in [(r, shape.0), (c, shape.1), (o, shape.2)] {
        if found != expected {
            return Err(Error::DimensionMismatch { expected, found });
        }
    }
    Ok(())
}

/// Places component coordinates into a full `S` vector.
fn embed(field: FieldSpec, d0: usize, d1: usize, part: &[Scalar], parity: Parity) -> Element {
    let mut v = Element::zero(field, d0 + d1);
    let offset = match parity {
        Parity::Even => 0,
        Parity::Odd => d0,
    };
    for (k, c) in part.iter().enumerate() {
        v.coords_mut()[offset + k] = c.clone();
    }
    v
}
