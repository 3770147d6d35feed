//! Trace identities of `M₂(F)⁺` relating `k = e12 - e21` to `H₂(F)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::field::FieldSpec;
use crate::m2::{Mat2, BASIS_NAMES, E, F, H, K};
use crate::report::{Check, Report};

/// Checks the nine identities for every `a, b ∈ {e, f, h}`. Everything but
/// the last identity is (bi)linear in its arguments, and the last is
/// symmetric bilinear, so basis pairs are exhaustive.
pub fn verify_lemma4(field: FieldSpec) -> Report {
    let k = Mat2::basis(field, K);
    let one = Mat2::identity(field);
    let s = |n: i64| field.from_i64(n);
    let t = |m: &Mat2| m.trace();
    type Ident = (&'static str, bool);
    type Cases = Vec<(usize, usize, bool)>;
    let mut results: Vec<(String, Cases)> = Vec::new();
    let mut record =
        |name: &str, a: usize, b: usize, ok: bool| match results.iter_mut().find(|(n, _)| n == name) {
            Some((_, v)) => v.push((a, b, ok)),
            None => results.push((String::from(name), alloc::vec![(a, b, ok)])),
        };
    for ai in [E, F, H] {
        let a = Mat2::basis(field, ai);
        for bi in [E, F, H] {
            let b = Mat2::basis(field, bi);
            let ka = k.commutator(&a);
            let kb = k.commutator(&b);
            let ab = a.jordan(&b);
            let checks: [Ident; 9] = [
                (
                    "a.k = t(a)k/2",
                    a.jordan(&k) == k.scale(&(&t(&a) * &field.half())),
                ),
                ("[a,k].k = 0", a.commutator(&k).jordan(&k).is_zero()),
                (
                    "[[k,a],k] = 4a - 2t(a)",
                    ka.commutator(&k) == a.scale(&s(4)) - one.scale(&(&s(2) * &t(&a))),
                ),
                (
                    "[a,[k,b]] = (t(a)t(b) - 2t(a.b))k",
                    a.commutator(&kb) == k.scale(&(&t(&a) * &t(&b) - &s(2) * &t(&ab))),
                ),
                (
                    "[k,a].[k,b] = 2t(a.b) - t(a)t(b)",
                    ka.jordan(&kb) == one.scale(&(&s(2) * &t(&ab) - &t(&a) * &t(&b))),
                ),
                ("[[k,a],[k,b]] = [[[k,a],k],b] = 4[a,b]", {
                    let four_ab = a.commutator(&b).scale(&s(4));
                    ka.commutator(&kb) == four_ab && ka.commutator(&k).commutator(&b) == four_ab
                }),
                ("[[a,[k,b]],k] = 0", a.commutator(&kb).commutator(&k).is_zero()),
                (
                    "([a,b],k,k) = 0",
                    a.commutator(&b).jordan_associator(&k, &k).is_zero(),
                ),
                ("2a.b = t(a)b + t(b)a - t(a)t(b) + t(a.b)", {
                    let rhs = b.scale(&t(&a)) + a.scale(&t(&b)) + one.scale(&(&t(&ab) - &(&t(&a) * &t(&b))));
                    ab.scale(&s(2)) == rhs
                }),
            ];
            for (name, ok) in checks {
                record(name, ai, bi, ok);
            }
        }
    }
    let mut report = Report::new();
    for (name, cases) in results {
        let n = cases.len();
        report.push(match cases.iter().find(|c| !c.2) {
            None => Check::pass(name, n),
            Some(&(a, b, _)) => {
                Check::fail(name, n, format!("a = {}, b = {}", BASIS_NAMES[a], BASIS_NAMES[b]))
            }
        });
    }
    report
}
