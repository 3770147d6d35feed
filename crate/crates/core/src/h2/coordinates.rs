//! Extraction of `Z`, `N` and the partial odd bracket from a framed algebra.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::frame::{verify_h2_frame, H2Frame};
use super::graded::{Convention, GradedBracketAlgebra, GradedTables};
use crate::algebra::Algebra;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{self, Matrix, Subspace};
use crate::report::{Check, Report};

/// Stacks the matrices of the linear maps `v ↦ op(v)` for several ops and
/// returns the common kernel.
fn common_kernel<F>(j: &Algebra, ops: &[F]) -> Subspace
where
    F: Fn(&Element) -> Element,
{
    let n = j.dim();
    let mut rows: Matrix = Vec::with_capacity(ops.len() * n);
    for op in ops {
        let cols: Vec<Element> = (0..n).map(|k| op(&j.basis(k))).collect();
        for r in 0..n {
            rows.push(cols.iter().map(|c| c.coords()[r].clone()).collect());
        }
    }
    linalg::kernel(j.field(), &rows, n)
}

/// `Z = {z : (z,a,b) = 0 for a, b in {e, h}}`.
///
/// Associators with the unit vanish, so the basis pairs of the frame are
/// enough to cut out the full condition over `H₂(F)`.
pub fn compute_z(j: &Algebra, frame: &H2Frame) -> Subspace {
    let pairs = [
        (&frame.e, &frame.e),
        (&frame.e, &frame.h),
        (&frame.h, &frame.e),
        (&frame.h, &frame.h),
    ];
    let ops: Vec<_> = pairs
        .iter()
        .map(|&(a, b)| move |z: &Element| j.associator(z, a, b))
        .collect();
    common_kernel(j, &ops)
}

/// `N = {n : e·n = ½n, h·n = 0}`.
pub fn compute_n(j: &Algebra, frame: &H2Frame) -> Subspace {
    let half = j.field().half();
    let e = &frame.e;
    let h = &frame.h;
    let by_e = move |n: &Element| &j.mul(n, e) - &n.scale(&half);
    let by_h = move |n: &Element| j.mul(n, h);
    let ops: [&dyn Fn(&Element) -> Element; 2] = [&by_e, &by_h];
    common_kernel(j, &ops)
}

/// Preimages in `J` of the tensor basis `e⊗zᵢ, f⊗zᵢ, h⊗zᵢ` (block by
/// block), followed by the `N`-basis.
pub fn adapted_basis(j: &Algebra, frame: &H2Frame, z: &Subspace, n: &Subspace) -> Vec<Element> {
    let zb = z.basis_elements();
    let ez: Vec<Element> = zb.iter().map(|v| j.mul(&frame.e, v)).collect();
    let mut out = Vec::with_capacity(3 * zb.len() + n.dim());
    out.extend(ez.iter().cloned());
    out.extend(zb.iter().zip(&ez).map(|(v, w)| v - w));
    out.extend(zb.iter().map(|v| j.mul(&frame.h, v)));
    out.extend(n.basis_elements());
    out
}

/// Checks that `J = H₂(F)·Z ⊕ N` as a module:
/// `dim J = 3 dim Z + dim N`, independence of `{z, ez, hz} ∪ N`,
/// and the containments `ZZ ⊆ Z`, `NN ⊆ Z`, `ZN ⊆ N`.
pub fn check_module_decomposition(j: &Algebra, frame: &H2Frame, z: &Subspace, n: &Subspace) -> Report {
    let mut report = Report::new();
    let expected = 3 * z.dim() + n.dim();
    report.push(if expected == j.dim() {
        Check::pass("dim J = 3 dim Z + dim N", 1)
    } else {
        Check::fail(
            "dim J = 3 dim Z + dim N",
            1,
            format!("{} != 3*{} + {}", j.dim(), z.dim(), n.dim()),
        )
    });

    let mut family = Vec::new();
    for v in z.basis_elements() {
        family.push(v.clone());
        family.push(j.mul(&frame.e, &v));
        family.push(j.mul(&frame.h, &v));
    }
    family.extend(n.basis_elements());
    let rank = Subspace::span_elements(j.field(), j.dim(), &family).dim();
    report.push(if rank == family.len() {
        Check::pass("adapted basis independent", 1)
    } else {
        Check::fail(
            "adapted basis independent",
            1,
            format!("rank {} of {} vectors", rank, family.len()),
        )
    });

    let containments: [(&str, &Subspace, &Subspace, &Subspace); 3] = [
        ("Z*Z in Z", z, z, z),
        ("N*N in Z", n, n, z),
        ("Z*N in N", z, n, n),
    ];
    for (name, left, right, target) in containments {
        let lb = left.basis_elements();
        let rb = right.basis_elements();
        let mut count = 0;
        let mut witness = None;
        'search: for (a, x) in lb.iter().enumerate() {
            for (b, y) in rb.iter().enumerate() {
                count += 1;
                let p = j.mul(x, y);
                if !target.contains_element(&p) {
                    witness = Some(format!("basis pair ({a}, {b}): {}", j.format_element(&p)));
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

/// Everything read off a framed algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionResult {
    pub frame: H2Frame,
    pub z: Subspace,
    pub n: Subspace,
    pub s: GradedBracketAlgebra,
    /// For each `Z`-basis vector: `(z, e·z, h·z)` in `J`.
    pub z_images: Vec<(Element, Element, Element)>,
    pub n_basis: Vec<Element>,
}

fn coordinates_in(space: &Subspace, v: &Element, what: &str, j: &Algebra) -> Result<Vec<Scalar>> {
    space
        .coordinates(v.coords())
        .ok_or_else(|| Error::BracketEscapesComponent(format!("{what} = {}", j.format_element(v))))
}

/// Reads off `S = Z + N` with its products and the raw bracket
/// `{z,v} = (e·v, z, h)` on `Z×Z` and `{z,n} = -h·(z,e,n)` on `Z×N`.
pub fn extract_brackets(
    j: &Algebra,
    frame: &H2Frame,
    z: &Subspace,
    n: &Subspace,
) -> Result<GradedBracketAlgebra> {
    let field = j.field();
    let zb = z.basis_elements();
    let nb = n.basis_elements();
    let (d0, d1) = (zb.len(), nb.len());
    let mut t = GradedTables::zero(field, d0, d1);

    for (a, x) in zb.iter().enumerate() {
        for (b, y) in zb.iter().enumerate() {
            let p = j.mul(x, y);
            t.p00
                .set(a, b, coordinates_in(z, &p, &format!("z{a}*z{b}"), j)?)?;
            let br = j.associator(&j.mul(&frame.e, y), x, &frame.h);
            t.b00
                .set(a, b, coordinates_in(n, &br, &format!("{{z{a},z{b}}}"), j)?)?;
        }
        for (b, y) in nb.iter().enumerate() {
            let p = j.mul(x, y);
            t.p01
                .set(a, b, coordinates_in(n, &p, &format!("z{a}*n{b}"), j)?)?;
            let br = -j.mul(&frame.h, &j.associator(x, &frame.e, y));
            t.b01
                .set(a, b, coordinates_in(z, &br, &format!("{{z{a},n{b}}}"), j)?)?;
        }
    }
    for (a, x) in nb.iter().enumerate() {
        for (b, y) in nb.iter().enumerate() {
            let p = j.mul(x, y);
            t.p11
                .set(a, b, coordinates_in(z, &p, &format!("n{a}*n{b}"), j)?)?;
        }
    }
    let unit = coordinates_in(z, &frame.one, "1", j)?;
    let names: Vec<String> = (0..d0)
        .map(|i| format!("z{i}"))
        .chain((0..d1).map(|i| format!("n{i}")))
        .collect();
    GradedBracketAlgebra::new(field, names, d0, t, unit, Convention::Raw)
}

/// Certifies the input and the frame, then computes `Z`, `N`, checks the
/// module decomposition and extracts the raw bracket algebra.
pub fn coordinatize(j: &Algebra, e: &Element, h: &Element) -> Result<DecompositionResult> {
    let jordan = j.is_jordan();
    if let Some(fail) = jordan.first_failure() {
        return Err(Error::NotJordan(format!("{fail}")));
    }
    let frame = verify_h2_frame(j, e, h)?;
    let z = compute_z(j, &frame);
    let n = compute_n(j, &frame);
    let module = check_module_decomposition(j, &frame, &z, &n);
    if let Some(fail) = module.first_failure() {
        return Err(Error::ModuleDecomposition(format!("{fail}")));
    }
    let s = extract_brackets(j, &frame, &z, &n)?;
    let z_images = z
        .basis_elements()
        .into_iter()
        .map(|v| {
            let ev = j.mul(&frame.e, &v);
            let hv = j.mul(&frame.h, &v);
            (v, ev, hv)
        })
        .collect();
    let n_basis = n.basis_elements();
    Ok(DecompositionResult {
        frame,
        z,
        n,
        s,
        z_images,
        n_basis,
    })
}
