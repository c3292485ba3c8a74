//! Brute-force axiom checker used as a test oracle.
//!
//! Structures are copied into nested `Vec`s and every identity is evaluated
//! on all basis tuples with hand-rolled arithmetic. Nothing here calls the
//! crate's validators, products or linear algebra.

use std::collections::BTreeSet;

use hlr_core::action::LrsAction;
use hlr_core::algebra::{CommAlgebra, HomLeibnizAlgebra};
use hlr_core::crossed::{Cat1Algebra, CrossedModule};
use hlr_core::document::{AlgebraDocument, MorphismDocument};
use hlr_core::{Bilinear, Matrix, Rational};
use num_traits::{One, Zero};

type Q = Rational;
type V = Vec<Q>;
type M = Vec<Vec<Q>>;

/// `c[k][i][j]`.
#[derive(Clone)]
pub struct T {
    c: Vec<Vec<Vec<Q>>>,
    out: usize,
    left: usize,
    right: usize,
}

pub fn t(b: &Bilinear) -> T {
    let (out, left, right) = (b.dim_out(), b.dim_left(), b.dim_right());
    let c = (0..out)
        .map(|k| (0..left).map(|i| (0..right).map(|j| b.get(k, i, j).clone()).collect()).collect())
        .collect();
    T { c, out, left, right }
}

pub fn m(a: &Matrix) -> M {
    (0..a.rows()).map(|r| (0..a.cols()).map(|c| a.get(r, c).clone()).collect()).collect()
}

fn zero(n: usize) -> V {
    vec![Q::zero(); n]
}

fn e(n: usize, i: usize) -> V {
    let mut v = zero(n);
    v[i] = Q::one();
    v
}

fn add(a: &V, b: &V) -> V {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &V, b: &V) -> V {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn neg(a: &V) -> V {
    a.iter().map(|x| -x).collect()
}

fn ap(b: &T, u: &V, v: &V) -> V {
    let mut out = zero(b.out);
    for k in 0..b.out {
        let mut s = Q::zero();
        for i in 0..b.left {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..b.right {
                if !v[j].is_zero() {
                    s += &b.c[k][i][j] * &u[i] * &v[j];
                }
            }
        }
        out[k] = s;
    }
    out
}

fn mv(a: &M, v: &V) -> V {
    a.iter()
        .map(|row| row.iter().zip(v).fold(Q::zero(), |s, (x, y)| s + x * y))
        .collect()
}

fn col(a: &M, j: usize) -> V {
    a.iter().map(|row| row[j].clone()).collect()
}

fn ncols(a: &M, fallback: usize) -> usize {
    a.first().map_or(fallback, Vec::len)
}

/// Rank by Gaussian elimination on a copy of the rows.
fn rank(rows: &M) -> usize {
    let mut a = rows.clone();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &pivot;
                for k in 0..cols {
                    let d = &f * &a[r][k];
                    a[i][k] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

/// Basis of `{v : a v = 0}` for an `rows × n` matrix.
fn kernel(a: &M, n: usize) -> Vec<V> {
    let mut rows = a.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for k in 0..n {
            rows[r][k] = &rows[r][k] / &pivot;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in 0..n {
                    let d = &f * &rows[r][k];
                    rows[i][k] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = zero(n);
        v[free] = Q::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -rows[row][free].clone();
        }
        out.push(v);
    }
    out
}

/// Some `x` with `a x = b`, if one exists.
fn solve(a: &M, n: usize, b: &V) -> Option<V> {
    let aug: M = a
        .iter()
        .zip(b)
        .map(|(row, bi)| row.iter().cloned().chain(std::iter::once(bi.clone())).collect())
        .collect();
    let ker = kernel(&aug, n + 1);
    let v = ker.into_iter().find(|v| !v[n].is_zero())?;
    let s = -v[n].clone();
    Some(v[..n].iter().map(|x| x / &s).collect())
}

struct Fails(BTreeSet<String>);

impl Fails {
    fn new() -> Self {
        Fails(BTreeSet::new())
    }
    fn eq(&mut self, name: &str, a: V, b: V) {
        if a != b {
            self.0.insert(name.to_string());
        }
    }
    fn fail(&mut self, name: &str) {
        self.0.insert(name.to_string());
    }
    fn absorb(&mut self, prefix: &str, other: Fails) {
        for n in other.0 {
            self.0.insert(format!("{prefix}{n}"));
        }
    }
}

struct Comm {
    mul: T,
    phi: M,
    unit: Option<V>,
    n: usize,
}

fn comm(a: &CommAlgebra) -> Comm {
    Comm {
        mul: t(&a.mul),
        phi: m(&a.phi),
        unit: a.unit.clone(),
        n: a.mul.dim_out(),
    }
}

fn comm_fails(a: &Comm) -> Fails {
    let mut f = Fails::new();
    let n = a.n;
    for i in 0..n {
        for j in 0..n {
            let ij = ap(&a.mul, &e(n, i), &e(n, j));
            f.eq("COMM", ij.clone(), ap(&a.mul, &e(n, j), &e(n, i)));
            f.eq("PHI-MUL", mv(&a.phi, &ij), ap(&a.mul, &col(&a.phi, i), &col(&a.phi, j)));
            for k in 0..n {
                let lhs = ap(&a.mul, &ij, &e(n, k));
                let rhs = ap(&a.mul, &e(n, i), &ap(&a.mul, &e(n, j), &e(n, k)));
                f.eq("ASSOC", lhs, rhs);
            }
        }
    }
    if let Some(u) = &a.unit {
        for i in 0..n {
            f.eq("UNIT", ap(&a.mul, u, &e(n, i)), e(n, i));
        }
        f.eq("PHI-UNIT", mv(&a.phi, u), u.clone());
    }
    f
}

struct Hl {
    br: T,
    alpha: M,
    n: usize,
}

fn hl(l: &HomLeibnizAlgebra) -> Hl {
    Hl {
        br: t(&l.bracket),
        alpha: m(&l.alpha),
        n: l.bracket.dim_out(),
    }
}

fn hl_fails(l: &Hl) -> Fails {
    let mut f = Fails::new();
    let n = l.n;
    let b = |x: &V, y: &V| ap(&l.br, x, y);
    for i in 0..n {
        let (x, ax) = (e(n, i), col(&l.alpha, i));
        for j in 0..n {
            let (y, ay) = (e(n, j), col(&l.alpha, j));
            f.eq("MULT", mv(&l.alpha, &b(&x, &y)), b(&ax, &ay));
            for k in 0..n {
                let (z, az) = (e(n, k), col(&l.alpha, k));
                let lhs = b(&ax, &b(&y, &z));
                let rhs = add(&b(&b(&x, &y), &az), &b(&ay, &b(&x, &z)));
                f.eq("JAC", lhs, rhs);
            }
        }
    }
    if rank(&l.alpha) != n {
        f.fail("REG");
    }
    f
}

/// `act[k][f][v]`: `A ⊗ V → V`.
fn module_fails(a: &Comm, act: &T) -> Fails {
    let mut f = Fails::new();
    let nv = act.out;
    for i in 0..a.n {
        for j in 0..a.n {
            let fg = ap(&a.mul, &e(a.n, i), &e(a.n, j));
            for k in 0..nv {
                let lhs = ap(act, &fg, &e(nv, k));
                let rhs = ap(act, &e(a.n, i), &ap(act, &e(a.n, j), &e(nv, k)));
                f.eq("MOD-ASSOC", lhs, rhs);
            }
        }
    }
    if let Some(u) = &a.unit {
        for k in 0..nv {
            f.eq("MOD-UNIT", ap(act, u, &e(nv, k)), e(nv, k));
        }
    }
    f
}

fn der_fails(name: &str, a: &Comm, d: &M) -> Fails {
    let mut f = Fails::new();
    for i in 0..a.n {
        for j in 0..a.n {
            let lhs = mv(d, &ap(&a.mul, &e(a.n, i), &e(a.n, j)));
            let rhs = add(
                &ap(&a.mul, &col(&a.phi, i), &col(d, j)),
                &ap(&a.mul, &col(&a.phi, j), &col(d, i)),
            );
            f.eq(name, lhs, rhs);
        }
    }
    f
}

fn a_algebra_fails(a: &Comm, l: &Hl, act: &T) -> Fails {
    let mut f = Fails::new();
    f.absorb("base/", comm_fails(a));
    f.absorb("", hl_fails(l));
    f.absorb("", module_fails(a, act));
    let n = l.n;
    for g in 0..a.n {
        let (fv, pf) = (e(a.n, g), col(&a.phi, g));
        for i in 0..n {
            let fx = ap(act, &fv, &e(n, i));
            f.eq("AC1", mv(&l.alpha, &fx), ap(act, &pf, &col(&l.alpha, i)));
            for j in 0..n {
                let b = ap(&l.br, &e(n, i), &e(n, j));
                f.eq("AC2", ap(&l.br, &fx, &e(n, j)), ap(act, &pf, &b));
                f.eq("AC3", ap(&l.br, &e(n, i), &ap(act, &fv, &e(n, j))), ap(act, &pf, &b));
            }
        }
    }
    f
}

struct Hlr {
    base: Comm,
    l: Hl,
    act: T,
    rl: Vec<M>,
    rr: Vec<M>,
}

fn hlr(x: &hlr_core::rinehart::HlrAlgebra) -> Hlr {
    Hlr {
        base: comm(&x.base),
        l: hl(&x.carrier),
        act: t(&x.module.action),
        rl: x.anchor_l.iter().map(m).collect(),
        rr: x.anchor_r.iter().map(m).collect(),
    }
}

/// `ρ(v)(g)` for a family of anchor matrices.
fn anchor(family: &[M], v: &V, g: &V, na: usize) -> V {
    let mut out = zero(na);
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            let r = mv(&family[i], g);
            for k in 0..na {
                out[k] += c * &r[k];
            }
        }
    }
    out
}

fn hlr_fails(x: &Hlr) -> Fails {
    let mut f = Fails::new();
    f.absorb("base/", comm_fails(&x.base));
    f.absorb("", hl_fails(&x.l));
    f.absorb("", module_fails(&x.base, &x.act));
    for d in &x.rl {
        f.absorb("", der_fails("DER-L", &x.base, d));
    }
    for d in &x.rr {
        f.absorb("", der_fails("DER-R", &x.base, d));
    }
    let (n, na) = (x.l.n, x.base.n);
    let a = &x.base;
    let br = |u: &V, v: &V| ap(&x.l.br, u, v);
    let act = |g: &V, v: &V| ap(&x.act, g, v);
    let mul = |g: &V, h: &V| ap(&a.mul, g, h);
    let phi = |g: &V| mv(&a.phi, g);
    let rl = |v: &V, g: &V| anchor(&x.rl, v, g, na);
    let rr = |v: &V, g: &V| anchor(&x.rr, v, g, na);
    for i in 0..n {
        let (xi, axi) = (e(n, i), col(&x.l.alpha, i));
        for g in 0..na {
            let gv = e(na, g);
            let pg = phi(&gv);
            let fx = act(&gv, &xi);
            f.eq("H01", mv(&x.l.alpha, &fx), act(&pg, &axi));
            f.eq("H11", rl(&axi, &pg), phi(&rl(&xi, &gv)));
            f.eq("H12", rr(&axi, &pg), phi(&rr(&xi, &gv)));
            for h in 0..na {
                let hv = e(na, h);
                f.eq("H41", rl(&fx, &hv), mul(&pg, &rl(&xi, &hv)));
                f.eq("H42", rr(&fx, &hv), mul(&pg, &rr(&xi, &hv)));
            }
            for j in 0..n {
                let (yj, ayj) = (e(n, j), col(&x.l.alpha, j));
                let bxy = br(&xi, &yj);
                let rhs = add(&act(&pg, &bxy), &act(&rl(&xi, &gv), &ayj));
                f.eq("H31", br(&xi, &act(&gv, &yj)), rhs);
                let rhs = sub(&act(&pg, &bxy), &act(&rr(&yj, &gv), &axi));
                f.eq("H32", br(&fx, &yj), rhs);
                f.eq("H21", rr(&ayj, &rr(&xi, &gv)), neg(&rr(&ayj, &rl(&xi, &gv))));
                let rhs = sub(&rl(&axi, &rl(&yj, &gv)), &rl(&ayj, &rl(&xi, &gv)));
                f.eq("H22", rl(&bxy, &pg), rhs);
                let rhs = sub(&rl(&axi, &rr(&yj, &gv)), &rr(&ayj, &rl(&xi, &gv)));
                f.eq("H23", rr(&bxy, &pg), rhs);
            }
        }
    }
    f
}

fn action_fails(a: &LrsAction) -> Fails {
    let mut f = Fails::new();
    if a.actor.base != a.target.base {
        f.fail("BASE");
        return f;
    }
    let actor = hlr(&a.actor);
    let ml = hl(&a.target.algebra);
    let mact = t(&a.target.module.action);
    f.absorb("actor/", hlr_fails(&actor));
    f.absorb("target/", a_algebra_fails(&actor.base, &ml, &mact));
    let (nl, nm, na) = (actor.l.n, ml.n, actor.base.n);
    let left = t(&a.left);
    let right = t(&a.right);
    // Plain bracket on L ⊕ M, checked for the Hom-Leibniz identity.
    let n = nl + nm;
    let split = |v: &V| (v[..nl].to_vec(), v[nl..].to_vec());
    let join = |x: V, y: V| -> V { x.into_iter().chain(y).collect() };
    let sb = |u: &V, v: &V| -> V {
        let (x, p) = split(u);
        let (y, q) = split(v);
        let lower = add(&add(&ap(&ml.br, &p, &q), &ap(&left, &x, &q)), &ap(&right, &p, &y));
        join(ap(&actor.l.br, &x, &y), lower)
    };
    let sa = |u: &V| -> V {
        let (x, p) = split(u);
        join(mv(&actor.l.alpha, &x), mv(&ml.alpha, &p))
    };
    for i in 0..n {
        for j in 0..n {
            let (u, v) = (e(n, i), e(n, j));
            f.eq("S11/MULT", sa(&sb(&u, &v)), sb(&sa(&u), &sa(&v)));
            for k in 0..n {
                let w = e(n, k);
                let lhs = sb(&sa(&u), &sb(&v, &w));
                let rhs = add(&sb(&sb(&u, &v), &sa(&w)), &sb(&sa(&v), &sb(&u, &w)));
                f.eq("S11/JAC", lhs, rhs);
            }
        }
    }
    for g in 0..na {
        let (gv, pg) = (e(na, g), col(&actor.base.phi, g));
        for x in 0..nl {
            let xv = e(nl, x);
            let fx = ap(&actor.act, &gv, &xv);
            for mi in 0..nm {
                let mvec = e(nm, mi);
                let fm = ap(&mact, &gv, &mvec);
                let xm = ap(&left, &xv, &mvec);
                let mx = ap(&right, &mvec, &xv);
                let am = col(&ml.alpha, mi);
                f.eq("S21", ap(&left, &fx, &mvec), ap(&mact, &pg, &xm));
                f.eq("S22", ap(&right, &mvec, &fx), ap(&mact, &pg, &mx));
                let rhs = add(&ap(&mact, &pg, &xm), &ap(&mact, &anchor(&actor.rl, &xv, &gv, na), &am));
                f.eq("S31", ap(&left, &xv, &fm), rhs);
                let rhs = sub(&ap(&mact, &pg, &mx), &ap(&mact, &anchor(&actor.rr, &xv, &gv, na), &am));
                f.eq("S32", ap(&right, &fm, &xv), rhs);
            }
        }
    }
    f
}

fn crossed_fails(cm: &CrossedModule) -> Fails {
    let mut f = action_fails(&cm.action);
    let a = &cm.action;
    let actor = hlr(&a.actor);
    let ml = hl(&a.target.algebra);
    let mact = t(&a.target.module.action);
    let left = t(&a.left);
    let right = t(&a.right);
    let d = m(&cm.boundary);
    let (nl, nm, na) = (actor.l.n, ml.n, actor.base.n);
    for i in 0..nm {
        let mi = e(nm, i);
        let dm = mv(&d, &mi);
        f.eq("CM0", mv(&actor.l.alpha, &dm), mv(&d, &col(&ml.alpha, i)));
        for g in 0..na {
            let gv = e(na, g);
            f.eq("CM3", mv(&d, &ap(&mact, &gv, &mi)), ap(&actor.act, &gv, &dm));
            f.eq("CM4", anchor(&actor.rl, &dm, &gv, na), zero(na));
            f.eq("CM4", anchor(&actor.rr, &dm, &gv, na), zero(na));
        }
        for x in 0..nl {
            let xv = e(nl, x);
            f.eq("CM1", mv(&d, &ap(&left, &xv, &mi)), ap(&actor.l.br, &xv, &dm));
            f.eq("CM1", mv(&d, &ap(&right, &mi, &xv)), ap(&actor.l.br, &dm, &xv));
        }
        for j in 0..nm {
            let nj = e(nm, j);
            let b = ap(&ml.br, &mi, &nj);
            f.eq("CM2", ap(&left, &dm, &nj), b.clone());
            f.eq("CM2", ap(&right, &nj, &mv(&d, &mi)), ap(&ml.br, &nj, &mi));
        }
    }
    f
}

/// HLR homomorphism over a common base.
fn hlr_hom_fails(map: &M, src: &Hlr, dst: &Hlr) -> Fails {
    let mut f = Fails::new();
    let (n, na) = (src.l.n, src.base.n);
    let img = |v: &V| mv(map, v);
    for i in 0..n {
        let xi = e(n, i);
        let pi = img(&xi);
        f.eq("HOM-ALPHA", img(&col(&src.l.alpha, i)), mv(&dst.l.alpha, &pi));
        for g in 0..na {
            let gv = e(na, g);
            f.eq("HOM-ANL", anchor(&dst.rl, &pi, &gv, na), anchor(&src.rl, &xi, &gv, na));
            f.eq("HOM-ANR", anchor(&dst.rr, &pi, &gv, na), anchor(&src.rr, &xi, &gv, na));
            f.eq("HOM-ALIN", img(&ap(&src.act, &gv, &xi)), ap(&dst.act, &gv, &pi));
        }
        for j in 0..n {
            let xj = e(n, j);
            f.eq("HOM-BR", img(&ap(&src.l.br, &xi, &xj)), ap(&dst.l.br, &pi, &img(&xj)));
        }
    }
    f
}

/// `g(αp) = α g(p)`, `g[p,q] = [gp,gq]`, `g(fp) = φ(f) g(p)`,
/// `ρ_L(gp)(φ h) = φ(ρ_P(p)(h))`.
fn twisted_hom_fails(tag: &str, g: &M, p: &Hlr, l: &Hlr) -> Fails {
    let mut f = Fails::new();
    let (np, na) = (p.l.n, p.base.n);
    let name = |s: &str| format!("{tag}-{s}");
    for a in 0..np {
        let pa = e(np, a);
        let ga = mv(g, &pa);
        f.eq(&name("ALPHA"), mv(g, &col(&p.l.alpha, a)), mv(&l.l.alpha, &ga));
        for h in 0..na {
            let hv = e(na, h);
            let ph = mv(&l.base.phi, &hv);
            f.eq(&name("ANL"), anchor(&l.rl, &ga, &ph, na), mv(&l.base.phi, &anchor(&p.rl, &pa, &hv, na)));
            f.eq(&name("ANR"), anchor(&l.rr, &ga, &ph, na), mv(&l.base.phi, &anchor(&p.rr, &pa, &hv, na)));
            f.eq(&name("SEMI"), mv(g, &ap(&p.act, &hv, &pa)), ap(&l.act, &ph, &ga));
        }
        for b in 0..np {
            let pb = e(np, b);
            f.eq(&name("BR"), mv(g, &ap(&p.l.br, &pa, &pb)), ap(&l.l.br, &ga, &mv(g, &pb)));
        }
    }
    f
}

fn mat_mul(a: &M, b: &M, inner: usize) -> M {
    let cols = ncols(b, 0);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| (0..inner).fold(Q::zero(), |s, k| s + &row[k] * &b[k][c]))
                .collect()
        })
        .collect()
}

fn cat1_fails(c: &Cat1Algebra) -> Fails {
    let mut f = Fails::new();
    if c.source.base != c.range.base {
        f.fail("BASE");
        return f;
    }
    let p = hlr(&c.source);
    let l = hlr(&c.range);
    f.absorb("P/", hlr_fails(&p));
    f.absorb("L/", hlr_fails(&l));
    let (s, tt, i) = (m(&c.s), m(&c.t), m(&c.i));
    let (np, nl, na) = (p.l.n, l.l.n, p.base.n);
    f.absorb("", twisted_hom_fails("S", &s, &p, &l));
    f.absorb("", twisted_hom_fails("T", &tt, &p, &l));
    f.absorb("i/", hlr_hom_fails(&i, &l, &p));
    if rank(&i) != nl {
        f.fail("I-INJ");
    }
    let xi = c.xi.as_ref().map(m).unwrap_or_else(|| i.clone());
    for x in 0..nl {
        f.eq("XI", mv(&s, &col(&xi, x)), col(&l.l.alpha, x));
    }
    for x in 0..nl {
        let ix = col(&i, x);
        f.eq("SI", mv(&s, &ix), col(&l.l.alpha, x));
        f.eq("TI", mv(&tt, &ix), col(&l.l.alpha, x));
    }
    for a in 0..np {
        let pa = e(np, a);
        f.eq("Cat1", mv(&s, &mv(&i, &mv(&tt, &pa))), mv(&tt, &col(&p.l.alpha, a)));
        f.eq("Cat1", mv(&tt, &mv(&i, &mv(&s, &pa))), mv(&s, &col(&p.l.alpha, a)));
        let diff = sub(&mv(&tt, &pa), &mv(&s, &pa));
        for g in 0..na {
            let gv = e(na, g);
            f.eq("Cat4", anchor(&l.rl, &diff, &gv, na), zero(na));
            f.eq("Cat4", anchor(&l.rr, &diff, &gv, na), zero(na));
        }
    }
    for u in kernel(&s, np) {
        for v in kernel(&tt, np) {
            f.eq("Cat2", ap(&p.l.br, &u, &v), zero(np));
            f.eq("Cat2", ap(&p.l.br, &v, &u), zero(np));
        }
    }
    let txi = mat_mul(&tt, &xi, np);
    for g in 0..na {
        for x in 0..nl {
            let lhs = mv(&txi, &ap(&l.act, &e(na, g), &e(nl, x)));
            let rhs = ap(&l.act, &col(&l.base.phi, g), &col(&txi, x));
            f.eq("Cat3", lhs, rhs);
        }
    }
    f
}

/// `λ: M → M'` of crossed modules with identity on `L`.
fn cml_fails(lambda: &M, src: &CrossedModule, dst: &CrossedModule) -> Fails {
    let mut f = Fails::new();
    let n = src.m_dim();
    let (ds, dd) = (m(&src.boundary), m(&dst.boundary));
    let (a, b) = (hl(&src.target().algebra), hl(&dst.target().algebra));
    let (sa, da) = (t(&src.target().module.action), t(&dst.target().module.action));
    let (sl, dl) = (t(&src.action.left), t(&dst.action.left));
    let (sr, dr) = (t(&src.action.right), t(&dst.action.right));
    let (nl, na) = (src.l_dim(), src.target().base.dim());
    let img = |v: &V| mv(lambda, v);
    for i in 0..n {
        let mi = e(n, i);
        let li = img(&mi);
        f.eq("TRI", mv(&dd, &li), mv(&ds, &mi));
        f.eq("LAM-ALPHA", img(&col(&a.alpha, i)), mv(&b.alpha, &li));
        for g in 0..na {
            let gv = e(na, g);
            f.eq("LAM-ALIN", img(&ap(&sa, &gv, &mi)), ap(&da, &gv, &li));
        }
        for j in 0..n {
            let mj = e(n, j);
            f.eq("LAM-BR", img(&ap(&a.br, &mi, &mj)), ap(&b.br, &li, &img(&mj)));
        }
        for x in 0..nl {
            let xv = e(nl, x);
            f.eq("LAM-EQL", img(&ap(&sl, &xv, &mi)), ap(&dl, &xv, &li));
            f.eq("LAM-EQR", img(&ap(&sr, &mi, &xv)), ap(&dr, &li, &xv));
        }
    }
    f
}

fn cm_morphism_fails(phi: &M, psi: &M, src: &CrossedModule, dst: &CrossedModule) -> Fails {
    let mut f = Fails::new();
    f.absorb("psi/", hlr_hom_fails(psi, &hlr(src.actor()), &hlr(dst.actor())));
    let n = src.m_dim();
    let (ds, dd) = (m(&src.boundary), m(&dst.boundary));
    let (a, b) = (hl(&src.target().algebra), hl(&dst.target().algebra));
    let (sa, da) = (t(&src.target().module.action), t(&dst.target().module.action));
    let (sl, dl) = (t(&src.action.left), t(&dst.action.left));
    let (sr, dr) = (t(&src.action.right), t(&dst.action.right));
    let (nl, na) = (src.l_dim(), src.target().base.dim());
    for i in 0..n {
        let mi = e(n, i);
        let pm = mv(phi, &mi);
        f.eq("MOR-BD", mv(psi, &mv(&ds, &mi)), mv(&dd, &pm));
        f.eq("MOR-ALPHA", mv(phi, &col(&a.alpha, i)), mv(&b.alpha, &pm));
        for g in 0..na {
            let gv = e(na, g);
            f.eq("MOR-ALIN", mv(phi, &ap(&sa, &gv, &mi)), ap(&da, &gv, &pm));
        }
        for j in 0..n {
            let mj = e(n, j);
            f.eq("MOR-BR", mv(phi, &ap(&a.br, &mi, &mj)), ap(&b.br, &pm, &mv(phi, &mj)));
        }
        for x in 0..nl {
            let xv = e(nl, x);
            let qx = mv(psi, &xv);
            f.eq("MOR-EQL", mv(phi, &ap(&sl, &xv, &mi)), ap(&dl, &qx, &pm));
            f.eq("MOR-EQR", mv(phi, &ap(&sr, &mi, &xv)), ap(&dr, &pm, &qx));
        }
    }
    f
}

fn cat1_morphism_fails(u: &M, src: &Cat1Algebra, dst: &Cat1Algebra) -> Fails {
    let mut f = Fails::new();
    f.absorb("upsilon/", hlr_hom_fails(u, &hlr(&src.source), &hlr(&dst.source)));
    let (np, nl, nl2) = (src.p_dim(), src.l_dim(), dst.l_dim());
    let (i, i2) = (m(&src.i), m(&dst.i));
    let mut ul_cols = Vec::new();
    for x in 0..nl {
        match solve(&i2, nl2, &mv(u, &col(&i, x))) {
            Some(c) => ul_cols.push(c),
            None => {
                f.fail("C1M-INC");
                return f;
            }
        }
    }
    let ul = |v: &V| -> V {
        let mut out = zero(nl2);
        for (k, c) in v.iter().enumerate() {
            for r in 0..nl2 {
                out[r] += c * &ul_cols[k][r];
            }
        }
        out
    };
    let (s, s2, t1, t2) = (m(&src.s), m(&dst.s), m(&src.t), m(&dst.t));
    for a in 0..np {
        let pa = e(np, a);
        f.eq("C1M-S", mv(&s2, &mv(u, &pa)), ul(&mv(&s, &pa)));
        f.eq("C1M-T", mv(&t2, &mv(u, &pa)), ul(&mv(&t1, &pa)));
    }
    f
}

/// Names of every axiom the oracle finds violated; empty means valid.
pub fn failures(doc: &AlgebraDocument) -> BTreeSet<String> {
    let f = match doc {
        AlgebraDocument::CommAlgebra(a) => comm_fails(&comm(a)),
        AlgebraDocument::HomLeibniz(l) => hl_fails(&hl(l)),
        AlgebraDocument::Hlr(x) => hlr_fails(&hlr(x)),
        AlgebraDocument::Action(a) => action_fails(a),
        AlgebraDocument::CrossedModule(cm) => crossed_fails(cm),
        AlgebraDocument::Cat1(c) => cat1_fails(c),
        AlgebraDocument::Morphism(md) => {
            let mut f = Fails::new();
            match md {
                MorphismDocument::Hlr { map, source, target } => {
                    let (s, t) = (hlr(source), hlr(target));
                    f.absorb("source/", hlr_fails(&s));
                    f.absorb("target/", hlr_fails(&t));
                    if source.base != target.base {
                        f.fail("BASE");
                    } else {
                        f.absorb("", hlr_hom_fails(&m(map), &s, &t));
                    }
                }
                MorphismDocument::Crossed { map, source, target } => {
                    f.absorb("source/", crossed_fails(source));
                    f.absorb("target/", crossed_fails(target));
                    f.absorb("", cm_morphism_fails(&m(&map.phi_map), &m(&map.psi_map), source, target));
                }
                MorphismDocument::CrossedL { lambda, source, target } => {
                    f.absorb("source/", crossed_fails(source));
                    f.absorb("target/", crossed_fails(target));
                    f.absorb("", cml_fails(&m(lambda), source, target));
                }
                MorphismDocument::Cat1 { map, source, target } => {
                    f.absorb("source/", cat1_fails(source));
                    f.absorb("target/", cat1_fails(target));
                    f.absorb("", cat1_morphism_fails(&m(&map.upsilon), source, target));
                }
            }
            f
        }
    };
    f.0
}

pub fn is_valid(doc: &AlgebraDocument) -> bool {
    failures(doc).is_empty()
}

/// `[[x,y] + [y,x], α z] = 0` on all basis triples.
pub fn symmetric_annihilation_holds(l: &HomLeibnizAlgebra) -> bool {
    let h = hl(l);
    let n = h.n;
    (0..n).all(|i| {
        (0..n).all(|j| {
            let s = add(&ap(&h.br, &e(n, i), &e(n, j)), &ap(&h.br, &e(n, j), &e(n, i)));
            (0..n).all(|k| ap(&h.br, &s, &col(&h.alpha, k)).iter().all(Zero::is_zero))
        })
    })
}

/// `ρ^L([x,y] + [y,x])(φ g) = 0` on all basis pairs and all `g`.
pub fn symmetric_anchor_vanishes(x: &hlr_core::rinehart::HlrAlgebra) -> bool {
    let h = hlr(x);
    let (n, na) = (h.l.n, h.base.n);
    (0..n).all(|i| {
        (0..n).all(|j| {
            let s = add(&ap(&h.l.br, &e(n, i), &e(n, j)), &ap(&h.l.br, &e(n, j), &e(n, i)));
            (0..na).all(|g| {
                anchor(&h.rl, &s, &mv(&h.base.phi, &e(na, g)), na)
                    .iter()
                    .all(Zero::is_zero)
            })
        })
    })
}

/// Oracle verdicts on CM0-CM4 alone.
pub fn crossed_axioms_only(cm: &CrossedModule) -> BTreeSet<String> {
    let full = crossed_fails(cm).0;
    full.into_iter().filter(|n| n.starts_with("CM")).collect()
}
