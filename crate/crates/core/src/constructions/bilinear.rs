//! Jordan algebras `J = A ⊕ V` of a symmetric `A`-bilinear form.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::h2::frame::{verify_h2_frame, H2Frame};

/// `V` is given on an `F`-basis, with the `A`-action of each basis pair and
/// the form values `f(vᵢ, vⱼ) ∈ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearFormData {
    a: Algebra,
    v_names: Vec<String>,
    /// `action[i][p] = aᵢ·v_p ∈ V`
    action: Vec<Vec<Element>>,
    /// `gram[p][q] = f(v_p, v_q) ∈ A`
    gram: Vec<Vec<Element>>,
    u: Element,
    v: Element,
}

fn invalid(msg: String) -> Error {
    Error::InvalidBilinearForm(msg)
}

impl BilinearFormData {
    /// Checks that `A` is commutative, associative and unital, that `V` is a
    /// unital `A`-module, that `f` is symmetric and `A`-bilinear, and that
    /// `f(u,u) = f(v,v) = 1`, `f(u,v) = 0`.
    pub fn new(
        a: Algebra,
        v_names: Vec<String>,
        action: Vec<Vec<Element>>,
        gram: Vec<Vec<Element>>,
        u: Element,
        v: Element,
    ) -> Result<Self> {
        let (na, nv) = (a.dim(), v_names.len());
        if let Some(f) = a.is_commutative().first_failure() {
            return Err(invalid(format!("coefficient algebra: {f}")));
        }
        if let Some(f) = a.is_associative().first_failure() {
            return Err(invalid(format!("coefficient algebra: {f}")));
        }
        let a = if a.unit().is_some() {
            a
        } else {
            a.with_found_unit()?
        };
        let shape_ok = action.len() == na
            && action
                .iter()
                .all(|r| r.len() == nv && r.iter().all(|x| x.dim() == nv))
            && gram.len() == nv
            && gram
                .iter()
                .all(|r| r.len() == nv && r.iter().all(|x| x.dim() == na))
            && u.dim() == nv
            && v.dim() == nv;
        if !shape_ok {
            return Err(invalid(String::from("table shapes do not match the dimensions")));
        }
        let data = BilinearFormData {
            a,
            v_names,
            action,
            gram,
            u,
            v,
        };
        data.validate()?;
        Ok(data)
    }

    fn validate(&self) -> Result<()> {
        let (na, nv) = (self.a.dim(), self.v_names.len());
        let one = self.a.unit().expect("unit set");
        for p in 0..nv {
            let vp = Element::basis(self.a.field(), nv, p);
            if self.act(one, &vp) != vp {
                return Err(invalid(format!("unit does not act trivially on v{p}")));
            }
            for i in 0..na {
                for j in 0..na {
                    let ai = self.a.basis(i);
                    let aj = self.a.basis(j);
                    let lhs = self.act(&self.a.mul(&ai, &aj), &vp);
                    let rhs = self.act(&ai, &self.act(&aj, &vp));
                    if lhs != rhs {
                        return Err(invalid(format!("module law fails at ({i}, {j}, {p})")));
                    }
                }
            }
            for q in 0..nv {
                if self.gram[p][q] != self.gram[q][p] {
                    return Err(invalid(format!("form not symmetric at ({p}, {q})")));
                }
                let vq = Element::basis(self.a.field(), nv, q);
                for i in 0..na {
                    let ai = self.a.basis(i);
                    let lhs = self.form(&self.act(&ai, &vp), &vq);
                    let rhs = self.a.mul(&ai, &self.form(&vp, &vq));
                    if lhs != rhs {
                        return Err(invalid(format!("form not A-linear at ({i}, {p}, {q})")));
                    }
                }
            }
        }
        let checks = [
            (&self.u, &self.u, one.clone(), "f(u,u) = 1"),
            (&self.v, &self.v, one.clone(), "f(v,v) = 1"),
            (&self.u, &self.v, self.a.zero(), "f(u,v) = 0"),
        ];
        for (x, y, want, what) in checks {
            if self.form(x, y) != want {
                return Err(invalid(format!("{what} fails")));
            }
        }
        Ok(())
    }

    /// `V = A^r` with basis `a_p·e_s` and `f(e_s, e_t) = gram[s][t]`;
    /// `u = e_0`, `v = e_1`.
    pub fn free_module(a: Algebra, gram: Vec<Vec<Element>>) -> Result<Self> {
        let r = gram.len();
        if r < 2 {
            return Err(invalid(String::from("need rank at least 2")));
        }
        let a = if a.unit().is_some() {
            a
        } else {
            a.with_found_unit()?
        };
        let na = a.dim();
        let nv = na * r;
        let field = a.field();
        let index = |p: usize, s: usize| s * na + p;
        let names = (0..r)
            .flat_map(|s| {
                a.names().iter().map(move |n| {
                    if na == 1 {
                        format!("v{s}")
                    } else {
                        format!("{n}.v{s}")
                    }
                })
            })
            .collect();
        let lift = |x: &Element, s: usize| {
            let mut out = Element::zero(field, nv);
            for (p, c) in x.coords().iter().enumerate() {
                out.coords_mut()[index(p, s)] = c.clone();
            }
            out
        };
        let mut action = Vec::with_capacity(na);
        for i in 0..na {
            let mut row = alloc::vec![Element::zero(field, nv); nv];
            for s in 0..r {
                for p in 0..na {
                    row[index(p, s)] = lift(&a.structure_vector(i, p), s);
                }
            }
            action.push(row);
        }
        let mut form = alloc::vec![alloc::vec![a.zero(); nv]; nv];
        for s in 0..r {
            for t in 0..r {
                for p in 0..na {
                    for q in 0..na {
                        let apq = a.structure_vector(p, q);
                        form[index(p, s)][index(q, t)] = a.mul(&apq, &gram[s][t]);
                    }
                }
            }
        }
        let one = a.unit().expect("unit set").clone();
        let (u, v) = (lift(&one, 0), lift(&one, 1));
        Self::new(a, names, action, form, u, v)
    }

    pub fn coefficients(&self) -> &Algebra {
        &self.a
    }

    pub fn v_dim(&self) -> usize {
        self.v_names.len()
    }

    /// `a·x` for `a ∈ A`, `x ∈ V`.
    pub fn act(&self, a: &Element, x: &Element) -> Element {
        let mut out = Element::zero(self.a.field(), self.v_dim());
        for (i, ai) in a.coords().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (p, xp) in x.coords().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                out.add_scaled(&(ai * xp), &self.action[i][p]);
            }
        }
        out
    }

    /// `f(x, y) ∈ A`.
    pub fn form(&self, x: &Element, y: &Element) -> Element {
        let mut out = self.a.zero();
        for (p, xp) in x.coords().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (q, yq) in y.coords().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                out.add_scaled(&(xp * yq), &self.gram[p][q]);
            }
        }
        out
    }
}

/// `(a + x)(b + y) = (ab + f(x,y)) + (a·y + b·x)` with the frame
/// `e = ½(1 - u)`, `h = v`. The result is certified Jordan.
pub fn build_bilinear_form_algebra(data: &BilinearFormData) -> Result<(Algebra, H2Frame)> {
    let a = &data.a;
    let field = a.field();
    let (na, nv) = (a.dim(), data.v_dim());
    let n = na + nv;
    let names: Vec<String> = a.names().iter().chain(&data.v_names).cloned().collect();
    let split = |x: &Element| {
        let (l, r) = x.coords().split_at(na);
        (Element::new(l.to_vec()), Element::new(r.to_vec()))
    };
    let join = |l: &Element, r: &Element| {
        let mut c = l.coords().to_vec();
        c.extend_from_slice(r.coords());
        Element::new(c)
    };
    let j = Algebra::from_fn(field, names, |i, k| {
        let (a1, x1) = split(&Element::basis(field, n, i));
        let (a2, x2) = split(&Element::basis(field, n, k));
        let even = &a.mul(&a1, &a2) + &data.form(&x1, &x2);
        let odd = &data.act(&a1, &x2) + &data.act(&a2, &x1);
        join(&even, &odd)
    });
    let one = join(a.unit().expect("unit set"), &Element::zero(field, nv));
    let j = j.with_unit(one.clone())?;
    if let Some(f) = j.is_jordan().first_failure() {
        return Err(Error::NotJordan(format!("{f}")));
    }
    let u = join(&a.zero(), &data.u);
    let e = (&one - &u).scale(&field.half());
    let h = join(&a.zero(), &data.v);
    let frame = verify_h2_frame(&j, &e, &h)?;
    Ok((j, frame))
}
