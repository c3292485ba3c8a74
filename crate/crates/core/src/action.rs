//! Hom-actions, Rinehart-compatible actions and semi-direct products.

use num_traits::Zero;

use crate::algebra::{validate_hom_leibniz_a_algebra, AModule, HomLeibnizAAlgebra, HomLeibnizAlgebra};
use crate::error::{ensure_shape, Error, Result};
use crate::linalg::{Bilinear, Matrix};
use crate::rational::{add_vec, sub_vec, unit_vec, Rational, Vector};
use crate::report::ValidationReport;
use crate::rinehart::{validate_hlr, HlrAlgebra};

/// Pair of bilinear maps `L ⊗ M → M` and `M ⊗ L → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAction {
    pub actor: HomLeibnizAlgebra,
    pub target: HomLeibnizAlgebra,
    /// `(x, m) ↦ [x, m]`, shape `dim M × dim L × dim M`.
    pub left: Bilinear,
    /// `(m, x) ↦ [m, x]`, shape `dim M × dim M × dim L`.
    pub right: Bilinear,
}

impl HomAction {
    pub fn trivial(actor: HomLeibnizAlgebra, target: HomLeibnizAlgebra) -> Self {
        let (nl, nm) = (actor.dim(), target.dim());
        Self {
            actor,
            target,
            left: Bilinear::zeros(nm, nl, nm),
            right: Bilinear::zeros(nm, nm, nl),
        }
    }

    pub fn check_shapes(&self) -> Result<()> {
        self.actor.check_shapes()?;
        self.target.check_shapes()?;
        check_action_shapes(&self.left, &self.right, self.actor.dim(), self.target.dim())
    }
}

fn check_action_shapes(left: &Bilinear, right: &Bilinear, nl: usize, nm: usize) -> Result<()> {
    ensure_shape(
        left.dim_out() == nm && left.dim_left() == nl && left.dim_right() == nm,
        || format!("left action is {}x{}->{}, expected {nl}x{nm}->{nm}", left.dim_left(), left.dim_right(), left.dim_out()),
    )?;
    ensure_shape(
        right.dim_out() == nm && right.dim_left() == nm && right.dim_right() == nl,
        || format!("right action is {}x{}->{}, expected {nm}x{nl}->{nm}", right.dim_left(), right.dim_right(), right.dim_out()),
    )
}

/// A11 through A32 on basis tuples.
pub fn validate_hom_action(act: &HomAction) -> Result<ValidationReport> {
    act.check_shapes()?;
    Ok(hom_action_axioms(&act.actor, &act.target, &act.left, &act.right))
}

fn hom_action_axioms(l: &HomLeibnizAlgebra, m: &HomLeibnizAlgebra, left: &Bilinear, right: &Bilinear) -> ValidationReport {
    let (nl, nm) = (l.dim(), m.dim());
    let mut r = ValidationReport::new();
    let al = l.alpha.columns();
    let am = m.alpha.columns();
    let lx = |x: &[Rational], v: &[Rational]| left.apply(x, v);
    let rx = |v: &[Rational], x: &[Rational]| right.apply(v, x);
    for x in 0..nl {
        for mi in 0..nm {
            let w = [("x", x), ("m", mi)];
            r.check("A31", &w, m.alpha.apply(&left.basis_product(x, mi)), lx(&al[x], &am[mi]));
            r.check("A32", &w, m.alpha.apply(&right.basis_product(mi, x)), rx(&am[mi], &al[x]));
        }
    }
    for x in 0..nl {
        for y in 0..nl {
            let bxy = l.bracket.basis_product(x, y);
            for mi in 0..nm {
                let w = [("x", x), ("y", y), ("m", mi)];
                let xm = left.basis_product(x, mi);
                let mx = right.basis_product(mi, x);
                let my = right.basis_product(mi, y);
                // [αm,[x,y]] = [αx,[m,y]] - [[x,m],αy]
                let lhs = rx(&am[mi], &bxy);
                let rhs = sub_vec(&lx(&al[x], &my), &rx(&xm, &al[y]));
                r.check("A11", &w, lhs, rhs);
                // [αx,[m,y]] = [αm,[x,y]] - [[m,x],αy]
                let lhs = lx(&al[x], &my);
                let rhs = sub_vec(&rx(&am[mi], &bxy), &rx(&mx, &al[y]));
                r.check("A12", &w, lhs, rhs);
                // [αx,[y,m]] = [[x,y],αm] + [αy,[x,m]]
                let lhs = lx(&al[x], &left.basis_product(y, mi));
                let rhs = add_vec(&lx(&bxy, &am[mi]), &lx(&al[y], &xm));
                r.check("A13", &w, lhs, rhs);
            }
        }
    }
    for x in 0..nl {
        for mi in 0..nm {
            let xm = left.basis_product(x, mi);
            let mx = right.basis_product(mi, x);
            for mj in 0..nm {
                let w = [("x", x), ("m", mi), ("m'", mj)];
                let bmm = m.bracket.basis_product(mi, mj);
                let xmj = left.basis_product(x, mj);
                // [αx,[m,m']] = [αm,[x,m']] - [[m,x],αm']
                let lhs = lx(&al[x], &bmm);
                let rhs = sub_vec(&m.br(&am[mi], &xmj), &m.br(&mx, &am[mj]));
                r.check("A21", &w, lhs, rhs);
                // [αm,[x,m']] = [αx,[m,m']] - [[x,m],αm']
                let lhs = m.br(&am[mi], &xmj);
                let rhs = sub_vec(&lx(&al[x], &bmm), &m.br(&xm, &am[mj]));
                r.check("A22", &w, lhs, rhs);
                // [αm,[m',x]] = [[m,m'],αx] + [αm',[m,x]]
                let lhs = m.br(&am[mi], &right.basis_product(mj, x));
                let rhs = add_vec(&rx(&bmm, &al[x]), &m.br(&am[mj], &mx));
                r.check("A23", &w, lhs, rhs);
            }
        }
    }
    r
}

/// Action of an HLR algebra `L` on a Hom-Leibniz A-algebra `M` over the same
/// base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrsAction {
    pub actor: HlrAlgebra,
    pub target: HomLeibnizAAlgebra,
    pub left: Bilinear,
    pub right: Bilinear,
}

impl LrsAction {
    pub fn new(actor: HlrAlgebra, target: HomLeibnizAAlgebra, left: Bilinear, right: Bilinear) -> Result<Self> {
        let a = Self {
            actor,
            target,
            left,
            right,
        };
        a.check_shapes()?;
        Ok(a)
    }

    pub fn trivial(actor: HlrAlgebra, target: HomLeibnizAAlgebra) -> Self {
        let (nl, nm) = (actor.dim(), target.dim());
        Self {
            actor,
            target,
            left: Bilinear::zeros(nm, nl, nm),
            right: Bilinear::zeros(nm, nm, nl),
        }
    }

    /// `L` acting on itself by its own bracket.
    pub fn adjoint(l: &HlrAlgebra) -> Self {
        Self {
            actor: l.clone(),
            target: HomLeibnizAAlgebra {
                base: l.base.clone(),
                algebra: l.carrier.clone(),
                module: l.module.clone(),
            },
            left: l.carrier.bracket.clone(),
            right: l.carrier.bracket.clone(),
        }
    }

    pub fn actor_dim(&self) -> usize {
        self.actor.dim()
    }

    pub fn target_dim(&self) -> usize {
        self.target.dim()
    }

    pub fn check_shapes(&self) -> Result<()> {
        self.actor.check_shapes()?;
        self.target.check_shapes()?;
        check_action_shapes(&self.left, &self.right, self.actor.dim(), self.target.dim())
    }

    pub fn check_same_base(&self) -> Result<()> {
        if self.actor.base != self.target.base {
            return Err(Error::BaseMismatch("actor and target are defined over different base algebras".into()));
        }
        Ok(())
    }

    /// The underlying Hom-action of Hom-Leibniz algebras.
    pub fn hom_action(&self) -> HomAction {
        HomAction {
            actor: self.actor.carrier.clone(),
            target: self.target.algebra.clone(),
            left: self.left.clone(),
            right: self.right.clone(),
        }
    }

    pub fn act_left(&self, x: &[Rational], m: &[Rational]) -> Vector {
        self.left.apply(x, m)
    }

    pub fn act_right(&self, m: &[Rational], x: &[Rational]) -> Vector {
        self.right.apply(m, x)
    }
}

/// Validity of the actor and target, S11 (the Hom-action axioms) and S21
/// through S32.
pub fn validate_lrs_action(act: &LrsAction) -> Result<ValidationReport> {
    act.check_shapes()?;
    act.check_same_base()?;
    let mut r = ValidationReport::new();
    r.merge_prefixed("actor", validate_hlr(&act.actor)?);
    r.merge_prefixed("target", validate_hom_leibniz_a_algebra(&act.target)?);
    r.merge_prefixed(
        "S11",
        hom_action_axioms(&act.actor.carrier, &act.target.algebra, &act.left, &act.right),
    );
    r.merge(s_axioms(act));
    Ok(r)
}

fn s_axioms(act: &LrsAction) -> ValidationReport {
    let (na, nl, nm) = (act.actor.base_dim(), act.actor_dim(), act.target_dim());
    let base = &act.actor.base;
    let m = &act.target;
    let mut r = ValidationReport::new();
    for f in 0..na {
        let fv = unit_vec(na, f);
        let pf = base.phi.column(f);
        for x in 0..nl {
            let xv = unit_vec(nl, x);
            let fx = act.actor.act(&fv, &xv);
            for mi in 0..nm {
                let mv = unit_vec(nm, mi);
                let fm = m.module.act(&fv, &mv);
                let w = [("f", f), ("x", x), ("m", mi)];
                let xm = act.left.basis_product(x, mi);
                let mx = act.right.basis_product(mi, x);
                let am = m.algebra.alpha.column(mi);
                r.check("S21", &w, act.act_left(&fx, &mv), m.module.act(&pf, &xm));
                r.check("S22", &w, act.act_right(&mv, &fx), m.module.act(&pf, &mx));
                let rhs = add_vec(&m.module.act(&pf, &xm), &m.module.act(&act.actor.anchor_l[x].column(f), &am));
                r.check("S31", &w, act.act_left(&xv, &fm), rhs);
                let rhs = sub_vec(&m.module.act(&pf, &mx), &m.module.act(&act.actor.anchor_r[x].column(f), &am));
                r.check("S32", &w, act.act_right(&fm, &xv), rhs);
            }
        }
    }
    r
}

/// Bracket convention on `L ⊕ M`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SemidirectConvention {
    /// `[(x,m),(x',m')] = ([x,x'], [m,m'] + [x,m'] + [m,x'])`.
    #[default]
    Plain,
    /// `[(x,m),(x',m')] = ([x,x'], [m,m'] + [α x,m'] + [m,α x'])`.
    Twisted,
}

/// Semi-direct product `L ⋉ M` with the plain bracket.
pub fn semidirect(act: &LrsAction) -> Result<HlrAlgebra> {
    semidirect_with(act, SemidirectConvention::Plain)
}

/// Semi-direct product on `L ⊕ M` (L-block first). Validity of the action is
/// not required.
pub fn semidirect_with(act: &LrsAction, convention: SemidirectConvention) -> Result<HlrAlgebra> {
    act.check_shapes()?;
    let (nl, nm) = (act.actor_dim(), act.target_dim());
    let na = act.actor.base_dim();
    ensure_shape(act.target.base.dim() == na, || {
        format!("target module is over a base of dimension {}, actor over {na}", act.target.base.dim())
    })?;
    let n = nl + nm;
    let l = &act.actor.carrier;
    let m = &act.target.algebra;
    let twist = |i: usize| -> Vector {
        match convention {
            SemidirectConvention::Plain => unit_vec(nl, i),
            SemidirectConvention::Twisted => l.alpha.column(i),
        }
    };
    let mut bracket = Bilinear::zeros(n, n, n);
    for i in 0..n {
        for j in 0..n {
            let (lpart, mpart): (Vector, Vector) = match (i < nl, j < nl) {
                (true, true) => (l.bracket.basis_product(i, j), vec![Rational::zero(); nm]),
                (true, false) => (vec![Rational::zero(); nl], act.act_left(&twist(i), &unit_vec(nm, j - nl))),
                (false, true) => (vec![Rational::zero(); nl], act.act_right(&unit_vec(nm, i - nl), &twist(j))),
                (false, false) => (vec![Rational::zero(); nl], m.bracket.basis_product(i - nl, j - nl)),
            };
            for (k, c) in lpart.into_iter().chain(mpart).enumerate() {
                if !c.is_zero() {
                    bracket.set(k, i, j, c);
                }
            }
        }
    }
    let alpha = l.alpha.block_diag(&m.alpha);
    let mut action = Bilinear::zeros(n, na, n);
    for f in 0..na {
        for i in 0..nl {
            for k in 0..nl {
                action.set(k, f, i, act.actor.module.action.get(k, f, i).clone());
            }
        }
        for i in 0..nm {
            for k in 0..nm {
                action.set(nl + k, f, nl + i, act.target.module.action.get(k, f, i).clone());
            }
        }
    }
    let mut anchor_l = act.actor.anchor_l.clone();
    let mut anchor_r = act.actor.anchor_r.clone();
    anchor_l.extend(std::iter::repeat_n(Matrix::zeros(na, na), nm));
    anchor_r.extend(std::iter::repeat_n(Matrix::zeros(na, na), nm));
    Ok(HlrAlgebra {
        base: act.actor.base.clone(),
        carrier: HomLeibnizAlgebra { bracket, alpha },
        module: AModule::new(action),
        anchor_l,
        anchor_r,
    })
}

/// Runs the action validator and the HLR validator on the semi-direct
/// product; the two reports are expected to be empty together.
pub fn check_semidirect_iff(act: &LrsAction) -> Result<(ValidationReport, ValidationReport)> {
    let action_report = validate_lrs_action(act)?;
    let product_report = validate_hlr(&semidirect(act)?)?;
    Ok((action_report, product_report))
}

/// Block inclusions `L → L ⋉ M` and `M → L ⋉ M`.
pub fn semidirect_inclusions(nl: usize, nm: usize) -> (Matrix, Matrix) {
    let il = Matrix::identity(nl).vstack(&Matrix::zeros(nm, nl));
    let im = Matrix::zeros(nl, nm).vstack(&Matrix::identity(nm));
    (il, im)
}
