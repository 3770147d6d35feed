//! One function per subcommand. Each builds its report in memory so tests
//! can drive commands without spawning the binary.

use std::fmt::Write as _;
use std::path::Path;

use h2coord::constructions::catalog;
use h2coord::constructions::tensor::tensor_frame;
use h2coord::identities::jordan_identity_sweep;
use h2coord::m2::{E, F, H, K};
use h2coord::{
    build_h2_matrix, check_isomorphism, check_module_decomposition, check_peirce_rules, cohn_envelope,
    compute_n, compute_z, coordinatize, extract_brackets, isomorphism, peirce_decompose, reconstruct,
    rescale_bracket, same_structure, split_involution, transport_structure, verify_bracket_identities,
    verify_h2_frame, verify_lemma4, Algebra, Check, Convention, Element, FieldSpec, GradedBracketAlgebra,
    H2Frame, InvolutiveAlgebra, LinearMap, Report,
};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::format::{from_json, to_json, AlgebraFile, BracketFile, LoadedAlgebra};
use crate::{Base, CliError, Kind, Outcome, Star};

type CmdResult = Result<Outcome, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn load_algebra(path: &Path) -> Result<LoadedAlgebra, CliError> {
    from_json::<AlgebraFile>(&read(path)?)?.to_algebra()
}

pub fn load_brackets(path: &Path) -> Result<GradedBracketAlgebra, CliError> {
    from_json::<BracketFile>(&read(path)?)?.to_graded()
}

fn element(loaded: &LoadedAlgebra, name: &str) -> Result<Element, CliError> {
    loaded
        .lookup(name)
        .ok_or_else(|| CliError::Input(format!("no element or basis vector named `{name}`")))
}

fn push_report(out: &mut String, report: &Report) {
    out.push_str(&report.to_string());
}

fn push_check(out: &mut String, check: &Check) {
    let _ = writeln!(out, "{check}");
}

fn finish(success: bool, output: String) -> CmdResult {
    Ok(Outcome { success, output })
}

fn emit_file(out: &mut String, path: Option<&Path>, text: &str) -> Result<(), CliError> {
    if let Some(p) = path {
        write(p, text)?;
        let _ = writeln!(out, "wrote {}", p.display());
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

pub fn cmd_check(path: &Path) -> CmdResult {
    let loaded = load_algebra(path)?;
    let a = &loaded.algebra;
    let mut out = String::new();
    let _ = writeln!(out, "field: {}, dim: {}", a.field(), a.dim());
    push_report(&mut out, &a.is_commutative());
    let jordan = a.is_jordan();
    let verdict = jordan
        .get("jordan")
        .expect("is_jordan reports a jordan check")
        .clone();
    push_check(&mut out, &verdict);
    push_report(&mut out, &a.is_associative());
    finish(verdict.passed, out)
}

pub fn cmd_decompose(path: &Path, e: &str, h: &str, emit: Option<&Path>) -> CmdResult {
    let loaded = load_algebra(path)?;
    let j = &loaded.algebra;
    let (e, h) = (element(&loaded, e)?, element(&loaded, h)?);
    let mut out = String::new();
    let jordan = j.is_jordan();
    if let Some(fail) = jordan.first_failure() {
        push_check(&mut out, fail);
        return finish(false, out);
    }
    let frame = match verify_h2_frame(j, &e, &h) {
        Ok(f) => f,
        Err(err) => {
            let _ = writeln!(out, "frame: FAIL {err}");
            return finish(false, out);
        }
    };
    let _ = writeln!(out, "frame: PASS");
    let z = compute_z(j, &frame);
    let n = compute_n(j, &frame);
    let _ = writeln!(out, "dim Z={} dim N={}", z.dim(), n.dim());
    let module = check_module_decomposition(j, &frame, &z, &n);
    push_report(&mut out, &module);
    if !module.passed() {
        return finish(false, out);
    }
    let s = match extract_brackets(j, &frame, &z, &n) {
        Ok(s) => s,
        Err(err) => {
            let _ = writeln!(out, "extract: FAIL {err}");
            return finish(false, out);
        }
    };
    let _ = writeln!(out, "brackets trivial: {}", yes_no(s.is_trivial()));
    let ids = verify_bracket_identities(&s);
    push_report(&mut out, &ids);
    emit_file(&mut out, emit, &to_json(&BracketFile::from_graded(&s)))?;
    finish(ids.passed(), out)
}

pub fn cmd_rebuild(path: &Path, emit: Option<&Path>) -> CmdResult {
    let s = load_brackets(path)?;
    let field = s.field();
    let mut out = String::new();
    let _ = writeln!(out, "convention: {}", s.convention().as_str());
    let s = if s.convention() == Convention::Raw && !s.is_trivial() {
        match field.sqrt_minus_one() {
            Ok(eps) => {
                let _ = writeln!(out, "rescaled by {eps}");
                rescale_bracket(&s, &eps)?
            }
            Err(err) => {
                let _ = writeln!(
                    out,
                    "rescale: FAIL {err} in {field}; rebuild over qi or gf(p) with p = 1 mod 4"
                );
                return finish(false, out);
            }
        }
    } else {
        s
    };
    let rebuilt = reconstruct(&s)?;
    let (e, h) = tensor_frame(&s);
    let _ = writeln!(out, "dim J'={}", rebuilt.dim());
    let jordan = rebuilt.is_jordan();
    let verdict = jordan
        .get("jordan")
        .expect("is_jordan reports a jordan check")
        .clone();
    push_check(&mut out, &verdict);
    let file = AlgebraFile::from_algebra(&rebuilt, &[("e", &e), ("h", &h)], &[]);
    emit_file(&mut out, emit, &to_json(&file))?;
    finish(verdict.passed, out)
}

fn stage_fail(mut out: String, stage: &str, err: impl std::fmt::Display) -> CmdResult {
    let _ = writeln!(out, "stage {stage}: FAIL {err}");
    finish(false, out)
}

pub fn cmd_roundtrip(path: &Path, e: &str, h: &str) -> CmdResult {
    let mut out = String::new();
    // a corrupted table usually breaks the declared unit first
    let loaded = match load_algebra(path) {
        Ok(l) => l,
        Err(CliError::Math(m)) => return stage_fail(out, "load", m),
        Err(err) => return Err(err),
    };
    let j = &loaded.algebra;
    let (e, h) = (element(&loaded, e)?, element(&loaded, h)?);
    let d = match coordinatize(j, &e, &h) {
        Ok(d) => d,
        Err(err) => return stage_fail(out, "decompose", err),
    };
    let _ = writeln!(
        out,
        "stage decompose: PASS (dim Z={} dim N={})",
        d.z.dim(),
        d.n.dim()
    );
    let eps = j.field().sqrt_minus_one().ok();
    let rescaled = match &eps {
        Some(eps) => match rescale_bracket(&d.s, eps) {
            Ok(s) => s,
            Err(err) => return stage_fail(out, "rescale", err),
        },
        None => d.s.clone(),
    };
    let _ = writeln!(out, "stage rescale: PASS");
    let rebuilt = match reconstruct(&rescaled) {
        Ok(r) => r,
        Err(err) => return stage_fail(out, "reconstruct", err),
    };
    let _ = writeln!(out, "stage reconstruct: PASS (dim J'={})", rebuilt.dim());
    let map = match isomorphism(j, &d, eps.as_ref()) {
        Ok(m) => m,
        Err(err) => return stage_fail(out, "isomorphism", err),
    };
    let _ = writeln!(out, "stage isomorphism: PASS");
    let mut report = match check_isomorphism(j, &rebuilt, &map) {
        Ok(r) => r,
        Err(err) => return stage_fail(out, "verify", err),
    };
    let transported = transport_structure(j, &map, rebuilt.names().to_vec());
    report.push(match transported {
        Ok(t) if same_structure(&t, &rebuilt) => Check::pass("structure tensor = f(J)", 1),
        Ok(_) => Check::fail("structure tensor = f(J)", 1, "transported tensor differs"),
        Err(err) => Check::fail("structure tensor = f(J)", 1, err.to_string()),
    });
    let ok = report.passed();
    let _ = writeln!(out, "stage verify: {}", if ok { "PASS" } else { "FAIL" });
    push_report(&mut out, &report);
    finish(ok, out)
}

pub fn cmd_envelope(path: &Path, emit: Option<&Path>) -> CmdResult {
    let s = load_brackets(path)?;
    let mut out = String::new();
    let inv = match cohn_envelope(&s) {
        Ok(inv) => inv,
        Err(err) => {
            let _ = writeln!(out, "envelope: FAIL {err}");
            return finish(false, out);
        }
    };
    let a = inv.algebra();
    let _ = writeln!(
        out,
        "dim={} symmetric={} skew={}",
        a.dim(),
        inv.symmetric().dim(),
        inv.skew().dim()
    );
    let assoc = a.is_associative();
    push_report(&mut out, &assoc);
    let _ = writeln!(out, "involution: PASS");
    let file = AlgebraFile::from_algebra(a, &[], &[("star", inv.star())]);
    emit_file(&mut out, emit, &to_json(&file))?;
    finish(assoc.passed(), out)
}

fn symplectic(field: FieldSpec) -> Result<InvolutiveAlgebra, CliError> {
    // adjugate: e <-> f, h -> -h, k -> -k
    let mut cols = vec![Element::zero(field, 4); 4];
    cols[E] = Element::basis(field, 4, F);
    cols[F] = Element::basis(field, 4, E);
    cols[H] = -Element::basis(field, 4, H);
    cols[K] = -Element::basis(field, 4, K);
    Ok(InvolutiveAlgebra::new(
        catalog::m2(field),
        LinearMap::from_columns(field, 4, &cols),
    )?)
}

fn involutive(field: FieldSpec, base: Base, star: Option<Star>) -> Result<InvolutiveAlgebra, CliError> {
    match (base, star) {
        (Base::F, None | Some(Star::Identity)) => Ok(catalog::field_with_identity(field)),
        (Base::M2, None | Some(Star::Transpose)) => Ok(catalog::m2_transpose(field)),
        (Base::M2, Some(Star::Symplectic)) => symplectic(field),
        (Base::Ff, None | Some(Star::Exchange)) => Ok(catalog::exchange(field)),
        (Base::Dual, None | Some(Star::Identity)) => Ok(InvolutiveAlgebra::new(
            catalog::dual_numbers(field),
            LinearMap::identity(field, 2),
        )?),
        (b, Some(s)) => Err(CliError::Input(format!(
            "involution {s:?} is not available on base {b:?}"
        ))),
    }
}

fn framed(alg: &Algebra, frame: &H2Frame) -> AlgebraFile {
    AlgebraFile::from_algebra(alg, &[("e", &frame.e), ("h", &frame.h)], &[])
}

/// The file `make` would write, as canonical JSON.
pub fn make_text(
    kind: Kind,
    field: FieldSpec,
    base: Option<Base>,
    star: Option<Star>,
    vdim: usize,
) -> Result<String, CliError> {
    let file = match kind {
        Kind::H2f => {
            let (a, f) = catalog::h2f(field);
            framed(&a, &f)
        }
        Kind::M2 => AlgebraFile::from_algebra(&catalog::m2(field), &[], &[]),
        Kind::M2plus => {
            let (a, f) = catalog::m2_plus(field);
            framed(&a, &f)
        }
        Kind::H4f => {
            let (a, f) = catalog::h4f(field);
            framed(&a, &f)
        }
        Kind::H2matrix => {
            let inv = involutive(field, base.unwrap_or(Base::M2), star)?;
            let (a, f) = build_h2_matrix(&inv)?;
            framed(&a, &f)
        }
        Kind::Spinfactor => {
            let (a, f) = match base.unwrap_or(Base::F) {
                Base::F => catalog::spin_factor(field, vdim)?,
                Base::Dual => catalog::dual_spin_factor(field, vdim)?,
                b => {
                    return Err(CliError::Input(format!(
                        "spin factors take base f or dual, not {b:?}"
                    )))
                }
            };
            framed(&a, &f)
        }
        Kind::Split => {
            let inv = involutive(field, base.unwrap_or(Base::M2), star)?;
            return Ok(to_json(&BracketFile::from_graded(&split_involution(&inv)?)));
        }
    };
    Ok(to_json(&file))
}

pub fn cmd_make(
    kind: Kind,
    field: FieldSpec,
    base: Option<Base>,
    star: Option<Star>,
    vdim: usize,
    emit: Option<&Path>,
) -> CmdResult {
    let text = make_text(kind, field, base, star, vdim)?;
    let mut out = String::new();
    match emit {
        Some(_) => emit_file(&mut out, emit, &text)?,
        None => out = text,
    }
    finish(true, out)
}

pub fn cmd_verify_lemma4(field: FieldSpec) -> Outcome {
    let report = verify_lemma4(field);
    let mut out = String::new();
    push_report(&mut out, &report);
    let ok = report.passed();
    let _ = writeln!(
        out,
        "{}/{} {}",
        report.pass_count(),
        report.checks.len(),
        if ok { "PASS" } else { "FAIL" }
    );
    Outcome {
        success: ok,
        output: out,
    }
}

pub fn cmd_sweep(path: &Path, seed: u64, samples: usize) -> CmdResult {
    let loaded = load_algebra(path)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let report = jordan_identity_sweep(&loaded.algebra, &mut rng, samples);
    let mut out = String::new();
    let _ = writeln!(out, "seed {seed}, {samples} samples");
    push_report(&mut out, &report);
    finish(report.passed(), out)
}

pub fn cmd_peirce(path: &Path, e: &str) -> CmdResult {
    let loaded = load_algebra(path)?;
    let a = &loaded.algebra;
    let e = element(&loaded, e)?;
    let mut out = String::new();
    let d = match peirce_decompose(a, &e) {
        Ok(d) => d,
        Err(err) => {
            let _ = writeln!(out, "peirce: FAIL {err}");
            return finish(false, out);
        }
    };
    let (one, half, zero) = d.dims();
    let _ = writeln!(out, "dims (1, 1/2, 0) = ({one}, {half}, {zero})");
    let rules = check_peirce_rules(a, &d);
    push_report(&mut out, &rules);
    finish(rules.passed(), out)
}
