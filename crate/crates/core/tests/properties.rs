use h2coord::constructions::catalog;
use h2coord::identities::random_element;
use h2coord::{
    build_h2_matrix, build_tensor_algebra, coordinatize, peirce_decompose, rescale_bracket, roundtrip,
    transport_structure, verify_bracket_identities, verify_isomorphism, Algebra, Element, FieldSpec, H2Frame,
    LinearMap,
};
use proptest::prelude::*;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field(i: usize) -> FieldSpec {
    ["qi", "gf5", "gf13"][i].parse().unwrap()
}

fn framed(field: FieldSpec, which: usize) -> (Algebra, H2Frame) {
    match which {
        0 => catalog::h2f(field),
        1 => catalog::m2_plus(field),
        2 => catalog::h4f(field),
        3 => build_h2_matrix(&catalog::exchange(field)).unwrap(),
        4 => catalog::spin_factor(field, 3).unwrap(),
        _ => catalog::dual_spin_factor(field, 2).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn roundtrip_map_is_multiplicative_on_random_elements(f in 0..3usize, which in 0..6usize, seed: u64) {
        let field = field(f);
        let (j, fr) = framed(field, which);
        let rt = roundtrip(&j, &fr.e, &fr.h).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..4 {
            let (x, y) = (random_element(&j, &mut rng), random_element(&j, &mut rng));
            prop_assert_eq!(rt.map.apply(&j.mul(&x, &y)), rt.rebuilt.mul(&rt.map.apply(&x), &rt.map.apply(&y)));
        }
        prop_assert_eq!(rt.map.apply(j.unit().unwrap()), rt.rebuilt.unit().unwrap().clone());
    }

    #[test]
    fn transport_preserves_jordan_and_isomorphism(which in 0..6usize, seed: u64) {
        let field = field(2);
        let (j, _) = framed(field, which);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cols: Vec<Element> = (0..j.dim()).map(|_| random_element(&j, &mut rng)).collect();
        let l = LinearMap::from_columns(field, j.dim(), &cols);
        prop_assume!(l.is_invertible());
        let t = transport_structure(&j, &l, j.names().to_vec()).unwrap();
        prop_assert!(t.is_jordan().passed());
        prop_assert_eq!(verify_isomorphism(&j, &t, &l), Ok(true));
    }

    #[test]
    fn peirce_projections_split_every_element(f in 0..3usize, which in 0..6usize, seed: u64) {
        let field = field(f);
        let (j, fr) = framed(field, which);
        let d = peirce_decompose(&j, &fr.e).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_element(&j, &mut rng);
        // with L = R_e: x1 = L(2L-1)x, xh = 4L(1-L)x, x0 = (1-L)(1-2L)x
        let l = |v: &Element| j.mul(v, &fr.e);
        let two = field.from_i64(2);
        let lx = l(&x);
        let llx = l(&lx);
        let x1 = &llx.scale(&two) - &lx;
        let xh = (&lx - &llx).scale(&field.from_i64(4));
        let x0 = &(&x - &lx.scale(&field.from_i64(3))) + &llx.scale(&two);
        prop_assert!(d.one.contains_element(&x1));
        prop_assert!(d.half.contains_element(&xh));
        prop_assert!(d.zero.contains_element(&x0));
        prop_assert_eq!(&(&x1 + &xh) + &x0, x);
    }

    #[test]
    fn opposite_root_also_coordinatizes(f in 0..3usize, which in 0..6usize) {
        let field = field(f);
        let (j, fr) = framed(field, which);
        let s = coordinatize(&j, &fr.e, &fr.h).unwrap().s;
        let eps = -field.sqrt_minus_one().unwrap();
        let r = rescale_bracket(&s, &eps).unwrap();
        prop_assert!(verify_bracket_identities(&r).passed());
        prop_assert!(build_tensor_algebra(&r).is_jordan().passed());
    }
}
