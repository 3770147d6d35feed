//! Acceptance suite: one PASS/FAIL line per criterion on stderr, written
//! past the test harness capture so it shows in every run.

use std::io::Write;
use std::path::Path;
use std::time::{Duration, Instant};

use h2coord::constructions::catalog;
use h2coord::constructions::tensor::tensor_frame;
use h2coord::identities::jordan_identity_sweep;
use h2coord::{
    build_h2_matrix, build_tensor_algebra, check_peirce_rules, cohn_envelope, compute_n, compute_z,
    coordinatize, isomorphism, peirce_decompose, reconstruct, rescale_bracket, same_structure,
    split_involution, transport_structure, verify_bracket_identities, verify_h2_frame, verify_isomorphism,
    Algebra, Element, FieldSpec, GradedBracketAlgebra, H2Frame, InvolutiveAlgebra, LinearMap, Subspace,
};
use h2coord_cli::commands::{cmd_roundtrip, cmd_verify_lemma4};
use h2coord_cli::format::{to_json, AlgebraFile};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))?;
    Ok(format!("{t:.2?}"))
}

fn f(text: &str) -> FieldSpec {
    text.parse().unwrap()
}

fn eps_fields() -> Vec<FieldSpec> {
    vec![f("qi"), f("gf5"), f("gf13")]
}

/// The five H2-algebras named by the roundtrip criterion; the fourth is
/// listed twice, as the matrix model of H4(F) and as H4(F) itself.
fn corpus(field: FieldSpec) -> Vec<(&'static str, Algebra, H2Frame)> {
    let (h2, fh2) = catalog::h2f(field);
    let (m2p, fm2p) = catalog::m2_plus(field);
    let (h4, fh4) = catalog::h4f(field);
    let (h2m, fh2m) = build_h2_matrix(&catalog::m2_transpose(field)).unwrap();
    let (h2x, fh2x) = build_h2_matrix(&catalog::exchange(field)).unwrap();
    let (spin, fspin) = catalog::spin_factor(field, 3).unwrap();
    vec![
        ("H2(F)", h2, fh2),
        ("M2(F)+", m2p, fm2p),
        ("H4(F)", h4, fh4),
        ("H2(M2(F),transpose)", h2m, fh2m),
        ("H2(F+F,exchange)", h2x, fh2x),
        ("spin factor dim 4", spin, fspin),
    ]
}

/// Everything Jordan that the suite ships, over every test field.
fn jordan_corpus() -> Vec<(String, Algebra, Vec<Element>)> {
    let mut out = Vec::new();
    for field in [f("q"), f("qi"), f("gf5"), f("gf13")] {
        for (name, a, fr) in corpus(field) {
            out.push((
                format!("{name} over {field}"),
                a,
                vec![fr.e.clone(), fr.one.clone()],
            ));
        }
        let (ds, fds) = catalog::dual_spin_factor(field, 2).unwrap();
        out.push((
            format!("dual spin factor over {field}"),
            ds,
            vec![fds.e.clone(), fds.one.clone()],
        ));
        let sym3 = catalog::symmetric_matrices(field, 3);
        let d1 = catalog::named(&sym3, "d1").unwrap();
        let unit = sym3.unit().unwrap().clone();
        out.push((format!("H3(F) over {field}"), sym3, vec![d1, unit]));
    }
    out
}

fn write_alg(dir: &Path, name: &str, a: &Algebra, fr: &H2Frame) -> std::path::PathBuf {
    let path = dir.join(name);
    let file = AlgebraFile::from_algebra(a, &[("e", &fr.e), ("h", &fr.h)], &[]);
    std::fs::write(&path, to_json(&file)).unwrap();
    path
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut count = 0;
    for field in eps_fields() {
        for (idx, (name, j, fr)) in corpus(field).into_iter().enumerate() {
            let path = write_alg(dir.path(), &format!("{idx}-{field}.alg"), &j, &fr);
            let out = cmd_roundtrip(&path, "e", "h").map_err(|e| format!("{name} over {field}: {e}"))?;
            ensure(out.success, || format!("{name} over {field}:\n{}", out.output))?;
            // independently: f carries the structure tensor of J onto J' exactly
            let d = coordinatize(&j, &fr.e, &fr.h).map_err(|e| e.to_string())?;
            let eps = field.sqrt_minus_one().map_err(|e| e.to_string())?;
            let rebuilt = reconstruct(&rescale_bracket(&d.s, &eps).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            let map = isomorphism(&j, &d, Some(&eps)).map_err(|e| e.to_string())?;
            let image = transport_structure(&j, &map, rebuilt.names().to_vec()).map_err(|e| e.to_string())?;
            ensure(
                same_structure(&image, &rebuilt) && image.unit() == rebuilt.unit(),
                || format!("{name} over {field}: f(J) differs from J'"),
            )?;
            count += 1;
        }
    }
    let t = within(start, Duration::from_secs(5))?;
    Ok(format!("{count} roundtrips exact in {t}"))
}

fn extracted_corpus() -> Vec<(String, GradedBracketAlgebra)> {
    let mut out = Vec::new();
    for field in eps_fields() {
        for (name, j, fr) in corpus(field) {
            let s = coordinatize(&j, &fr.e, &fr.h).unwrap().s;
            let eps = field.sqrt_minus_one().unwrap();
            out.push((format!("{name} over {field}"), rescale_bracket(&s, &eps).unwrap()));
        }
        for (name, inv) in [
            ("(F,id)", catalog::field_with_identity(field)),
            ("(M2,transpose)", catalog::m2_transpose(field)),
            ("(F+F,exchange)", catalog::exchange(field)),
        ] {
            out.push((
                format!("split {name} over {field}"),
                split_involution(&inv).unwrap(),
            ));
        }
    }
    out
}

fn criterion2() -> Outcome {
    let mut checked = 0;
    for (name, s) in extracted_corpus() {
        if !verify_bracket_identities(&s).passed() {
            return Err(format!("{name}: corpus input fails the identities"));
        }
        let r = build_tensor_algebra(&s).is_jordan();
        ensure(r.passed(), || format!("{name}: tensor algebra not Jordan\n{r}"))?;
        checked += 1;
    }
    let field = f("gf13");
    let (h4, fr) = catalog::h4f(field);
    let s = rescale_bracket(
        &coordinatize(&h4, &fr.e, &fr.h).unwrap().s,
        &field.sqrt_minus_one().unwrap(),
    )
    .unwrap();
    let two = field.from_i64(2);
    let mut doubled_b01 = s.tables().clone();
    doubled_b01.b01 = doubled_b01.b01.scaled(&two);
    let mut negated_b00 = s.tables().clone();
    negated_b00.b00 = negated_b00.b00.scaled(&field.from_i64(-1));
    // z2 is off the unit, so this keeps 1 a unit
    let mut skewed_p01 = s.tables().clone();
    let v = skewed_p01.p01.get(2, 0).to_vec();
    skewed_p01.p01.set(2, 0, vec![&v[0] + &field.one()]).unwrap();
    let mut controls = 0;
    for (label, tables) in [
        ("b01 doubled", doubled_b01),
        ("b00 negated", negated_b00),
        ("z2*n0 shifted", skewed_p01),
    ] {
        let t = s.with_tables(tables).map_err(|e| format!("{label}: {e}"))?;
        let r = build_tensor_algebra(&t).is_jordan();
        let fail = r
            .first_failure()
            .ok_or_else(|| format!("{label}: tampered tensor still Jordan"))?;
        ensure(fail.witness.is_some(), || {
            format!("{label}: failure without witness")
        })?;
        controls += 1;
    }
    Ok(format!(
        "{checked} inputs Jordan, {controls} tampered controls rejected with witnesses"
    ))
}

fn is_involution(inv: &InvolutiveAlgebra) -> bool {
    let a = inv.algebra();
    let star = inv.star();
    let n = a.dim();
    star.compose(star) == LinearMap::identity(a.field(), n)
        && (0..n).all(|i| {
            (0..n).all(|j| {
                let (x, y) = (a.basis(i), a.basis(j));
                star.apply(&a.mul(&x, &y)) == a.mul(&star.apply(&y), &star.apply(&x))
            })
        })
}

fn criterion3() -> Outcome {
    for field in [f("q"), f("gf5"), f("gf13")] {
        let total = split_involution(&catalog::m2_transpose(field)).map_err(|e| e.to_string())?;
        ensure(total.is_total(), || "bracket on M2(F)+ is not total".into())?;
        let env = cohn_envelope(&total).map_err(|e| e.to_string())?;
        ensure(same_structure(env.algebra(), &catalog::m2(field)), || {
            format!("envelope over {field} differs from M2(F)")
        })?;
        ensure(env.algebra().is_associative().passed(), || {
            "envelope not associative".into()
        })?;
        ensure(is_involution(&env), || "star is not an involution".into())?;
        let (ten, _) = build_h2_matrix(&env).map_err(|e| e.to_string())?;
        let (expected, _) = build_h2_matrix(&catalog::m2_transpose(field)).map_err(|e| e.to_string())?;
        ensure(ten.dim() == 10 && ten == expected, || {
            "H2 of the envelope is not the dim-10 example".into()
        })?;

        // S = F(p1+p2) + F(p1-p2); the envelope should be F+F on that basis
        let base = catalog::exchange(field);
        let ex = cohn_envelope(&split_involution(&base).unwrap()).map_err(|e| e.to_string())?;
        let mut cols = base.symmetric().basis_elements();
        cols.extend(base.skew().basis_elements());
        let to_base = LinearMap::from_columns(field, 2, &cols);
        ensure(
            verify_isomorphism(ex.algebra(), base.algebra(), &to_base) == Ok(true),
            || "envelope of the exchange split is not F+F".into(),
        )?;
        ensure(
            to_base.compose(ex.star()) == base.star().compose(&to_base),
            || "star does not match the exchange".into(),
        )?;
        ensure(is_involution(&ex), || "exchange star is not an involution".into())?;
        let (four, _) = build_h2_matrix(&ex).map_err(|e| e.to_string())?;
        let (expected, _) = build_h2_matrix(&catalog::exchange(field)).map_err(|e| e.to_string())?;
        ensure(four.dim() == 4 && four == expected, || {
            "H2 of F+F is not the dim-4 example".into()
        })?;
    }
    Ok("envelope = M2(F), associative, involutive; dim 10 and dim 4 rebuilt over q, gf5, gf13".into())
}

fn criterion4() -> Outcome {
    let start = Instant::now();
    for field in [f("q"), f("gf5"), f("gf13")] {
        let out = cmd_verify_lemma4(field);
        ensure(out.success && out.output.ends_with("9/9 PASS\n"), || {
            format!("{field}:\n{}", out.output)
        })?;
    }
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("9/9 over q, gf5, gf13 in {t}"))
}

fn criterion5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let corpus = jordan_corpus();
    for (name, a, _) in &corpus {
        let r = jordan_identity_sweep(a, &mut rng, 200);
        ensure(r.passed(), || format!("{name}:\n{r}"))?;
        ensure(r.checks.iter().all(|c| c.instances == 200), || {
            format!("{name}: short sweep")
        })?;
    }
    Ok(format!("200 seeded tuples on each of {} algebras", corpus.len()))
}

fn criterion6() -> Outcome {
    let start = Instant::now();
    let mut families = 0;
    for field in [f("q"), f("gf13")] {
        let (h4, fr) = catalog::h4f(field);
        let raw = coordinatize(&h4, &fr.e, &fr.h).map_err(|e| e.to_string())?.s;
        let mut variants = vec![raw.clone()];
        if let Ok(eps) = field.sqrt_minus_one() {
            variants.push(rescale_bracket(&raw, &eps).map_err(|e| e.to_string())?);
        }
        for s in variants {
            let r = verify_bracket_identities(&s);
            ensure(r.passed(), || {
                format!("{field} {}:\n{r}", s.convention().as_str())
            })?;
            ensure(r.checks.iter().all(|c| c.instances > 0), || {
                format!("a family is vacuous over {field}")
            })?;
            families = r.checks.len();
        }
    }
    let t = within(start, Duration::from_secs(10))?;
    Ok(format!(
        "all {families} checks exhaustive on H4(F), raw and rescaled, in {t}"
    ))
}

fn is_subset(space: &Subspace, vs: impl IntoIterator<Item = Element>) -> bool {
    vs.into_iter().all(|v| space.contains_element(&v))
}

fn criterion7() -> Outcome {
    // spin-factor inputs have zero brackets
    let mut inputs = 0;
    for field in [f("q"), f("gf5"), f("gf13")] {
        for vdim in [2, 3, 5] {
            let (j, fr) = catalog::spin_factor(field, vdim).map_err(|e| e.to_string())?;
            let s = coordinatize(&j, &fr.e, &fr.h).map_err(|e| e.to_string())?.s;
            ensure(s.is_trivial(), || {
                format!("spin factor dim {} over {field}: nonzero bracket", vdim + 1)
            })?;
            // the frame is e = (1 - u)/2, h = v with u = v0, v = v1
            let one = j.unit().unwrap().clone();
            let u = catalog::named(&j, "v0").unwrap();
            let v = catalog::named(&j, "v1").unwrap();
            let e = (&one - &u).scale(&field.half());
            verify_h2_frame(&j, &e, &v).map_err(|err| err.to_string())?;
            inputs += 1;
        }
        let (j, fr) = catalog::dual_spin_factor(field, 2).map_err(|e| e.to_string())?;
        ensure(coordinatize(&j, &fr.e, &fr.h).unwrap().s.is_trivial(), || {
            "dual spin factor bracket".into()
        })?;
        inputs += 1;
    }

    // zero-bracket reconstruction: Z associative, dim = 3 dim Z + dim N, and
    // the result is a bilinear-form algebra over Z with frame (1 - u)/2, v
    let mut rebuilt_count = 0;
    for field in [f("q"), f("gf5"), f("gf13")] {
        for (j, fr) in [
            catalog::dual_spin_factor(field, 3).unwrap(),
            catalog::spin_factor(field, 4).unwrap(),
            catalog::h2f(field),
        ] {
            let s = coordinatize(&j, &fr.e, &fr.h).unwrap().s;
            let jp = reconstruct(&s).map_err(|e| e.to_string())?;
            ensure(jp.is_jordan().passed(), || {
                "zero-bracket rebuild not Jordan".into()
            })?;
            let (e, h) = tensor_frame(&s);
            let frame = verify_h2_frame(&jp, &e, &h).map_err(|e| e.to_string())?;
            let z = compute_z(&jp, &frame);
            let n = compute_n(&jp, &frame);
            ensure(jp.dim() == 3 * z.dim() + n.dim(), || "dimension count".into())?;
            let zb = z.basis_elements();
            let z_assoc = zb.iter().all(|a| {
                zb.iter()
                    .all(|b| zb.iter().all(|c| jp.associator(a, b, c).is_zero()))
            });
            ensure(z_assoc, || "Z is not associative".into())?;

            let one = jp.unit().unwrap().clone();
            let u = &one - &e.scale(&field.from_i64(2));
            let v = h.clone();
            ensure(
                jp.square(&u) == one && jp.square(&v) == one && jp.mul(&u, &v).is_zero(),
                || "u, v are not orthonormal".into(),
            )?;
            ensure((&one - &u).scale(&field.half()) == e, || "e != (1 - u)/2".into())?;
            // A = Z·1 and V = Z·u + Z·v + N with A·A ⊆ A, A·V ⊆ V, V·V ⊆ A
            let a_gens: Vec<Element> = zb.clone();
            let mut v_gens: Vec<Element> = zb.iter().flat_map(|z| [jp.mul(z, &u), jp.mul(z, &v)]).collect();
            v_gens.extend(n.basis_elements());
            let a_space = Subspace::span_elements(field, jp.dim(), a_gens.iter());
            let v_space = Subspace::span_elements(field, jp.dim(), v_gens.iter());
            ensure(a_space.dim() + v_space.dim() == jp.dim(), || "J' != A + V".into())?;
            let aa = a_gens.iter().flat_map(|x| a_gens.iter().map(|y| jp.mul(x, y)));
            let av = a_gens.iter().flat_map(|x| v_gens.iter().map(|y| jp.mul(x, y)));
            let vv = v_gens.iter().flat_map(|x| v_gens.iter().map(|y| jp.mul(x, y)));
            ensure(is_subset(&a_space, aa.collect::<Vec<_>>()), || {
                "A*A escapes A".into()
            })?;
            ensure(is_subset(&v_space, av.collect::<Vec<_>>()), || {
                "A*V escapes V".into()
            })?;
            ensure(is_subset(&a_space, vv.collect::<Vec<_>>()), || {
                "V*V escapes A".into()
            })?;
            rebuilt_count += 1;
        }
    }
    Ok(format!(
        "{inputs} spin inputs trivial; {rebuilt_count} zero-bracket rebuilds are bilinear-form algebras"
    ))
}

fn criterion8() -> Outcome {
    let mut decompositions = 0;
    for (name, a, idempotents) in jordan_corpus() {
        let one = a.unit().unwrap().clone();
        let mut all = idempotents.clone();
        all.extend(idempotents.iter().map(|e| &one - e).filter(|x| !x.is_zero()));
        for e in all {
            let d = peirce_decompose(&a, &e).map_err(|err| format!("{name}: {err}"))?;
            let (p1, ph, p0) = d.dims();
            ensure(p1 + ph + p0 == a.dim(), || format!("{name}: dims do not sum"))?;
            let r = check_peirce_rules(&a, &d);
            ensure(r.passed(), || format!("{name}:\n{r}"))?;
            decompositions += 1;
        }
    }
    for field in [f("q"), f("gf13")] {
        let (h4, fr) = catalog::h4f(field);
        let dims = peirce_decompose(&h4, &fr.e).map_err(|e| e.to_string())?.dims();
        ensure(dims == (3, 4, 3), || format!("H4 block dims {dims:?}"))?;
    }
    Ok(format!(
        "{decompositions} decompositions obey the rules; H4(F) block dims (3,4,3)"
    ))
}

#[test]
fn acceptance() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("roundtrip isomorphism", criterion1),
        ("tensor algebra is Jordan", criterion2),
        ("Cohn envelope", criterion3),
        ("M2(F)+ trace identities", criterion4),
        ("associator identity sweep", criterion5),
        ("bracket extraction suite", criterion6),
        ("trivial brackets and bilinear forms", criterion7),
        ("Peirce decomposition", criterion8),
    ];
    let mut failures = Vec::new();
    let mut err = std::io::stderr().lock();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let spent = start.elapsed();
        let line = match result {
            Ok(detail) => format!("criterion {} ({name}): PASS ({detail}) [{spent:.2?}]", i + 1),
            Err(detail) => {
                failures.push(i + 1);
                format!("criterion {} ({name}): FAIL ({detail})", i + 1)
            }
        };
        writeln!(err, "{line}").unwrap();
    }
    assert!(failures.is_empty(), "failing criteria: {failures:?}");
}
