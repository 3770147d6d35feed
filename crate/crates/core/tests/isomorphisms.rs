use h2coord::constructions::catalog;
use h2coord::m2::{E, F, H, K};
use h2coord::{build_h2_matrix, verify_isomorphism, Element, FieldSpec, LinearMap, Scalar};

fn fields() -> Vec<FieldSpec> {
    ["q", "qi", "gf5", "gf13"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

/// The 2×2 matrix of `x` on the basis `e, f, h, k` of `M₂(F)`.
fn m2_matrix(x: &Element) -> [[Scalar; 2]; 2] {
    let c = x.coords();
    [[c[E].clone(), &c[H] + &c[K]], [&c[H] - &c[K], c[F].clone()]]
}

/// Flattens a 2×2 block matrix of 2×2 blocks and reads it in the
/// `d1..d4, s12..s34` basis of `H₄(F)`.
fn flatten(field: FieldSpec, blocks: [&Element; 4]) -> Element {
    let zero = field.zero();
    let mut m = vec![vec![zero; 4]; 4];
    for (b, x) in blocks.iter().enumerate() {
        let (r, c) = (b / 2, b % 2);
        let mx = m2_matrix(x);
        for i in 0..2 {
            for j in 0..2 {
                m[2 * r + i][2 * c + j] = mx[i][j].clone();
            }
        }
    }
    let mut out: Vec<Scalar> = (0..4).map(|i| m[i][i].clone()).collect();
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate().skip(i + 1) {
            assert_eq!(*x, m[j][i], "image is symmetric");
            out.push(x.clone());
        }
    }
    Element::new(out)
}

#[test]
fn h4_is_h2_of_m2_with_transpose() {
    for field in fields() {
        let inv = catalog::m2_transpose(field);
        let (h2m, frame) = build_h2_matrix(&inv).unwrap();
        let (h4, h4_frame) = catalog::h4f(field);
        let zero = Element::zero(field, 4);
        let hs = inv.symmetric().basis_elements();
        let ks = inv.skew().basis_elements();
        let mut cols = Vec::new();
        for x in &hs {
            cols.push(flatten(field, [x, &zero, &zero, &zero]));
        }
        for x in &hs {
            cols.push(flatten(field, [&zero, &zero, &zero, x]));
        }
        for x in &hs {
            cols.push(flatten(field, [&zero, x, x, &zero]));
        }
        for x in &ks {
            cols.push(flatten(field, [&zero, x, &-x.clone(), &zero]));
        }
        let map = LinearMap::from_columns(field, 10, &cols);
        assert_eq!(verify_isomorphism(&h2m, &h4, &map), Ok(true), "{field}");
        assert_eq!(map.apply(&frame.e), h4_frame.e);
        assert_eq!(map.apply(&frame.h), h4_frame.h);
    }
}

#[test]
fn h2_of_field_is_h2f() {
    for field in fields() {
        let (a, _) = build_h2_matrix(&catalog::field_with_identity(field)).unwrap();
        let (b, _) = catalog::h2f(field);
        assert_eq!(
            verify_isomorphism(&a, &b, &LinearMap::identity(field, 3)),
            Ok(true)
        );
    }
}
