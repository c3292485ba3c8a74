//! The category of crossed L-modules over a fixed base `L`: morphisms,
//! finite limits and colimits, and a checker for their universal
//! properties.

use crate::action::LrsAction;
use crate::algebra::{AModule, HomLeibnizAAlgebra, HomLeibnizAlgebra};
use crate::crossed::{validate_crossed_module, CrossedModule};
use crate::error::{ensure_shape, Error, Result};
use crate::linalg::{
    closure, image, nullspace, solve_matrix_equations, Bilinear, Matrix, MatrixEquation, QuotientStructure, Side,
    Subspace,
};
use crate::rational::{is_zero_vec, unit_vec, Vector};
use crate::report::ValidationReport;
use crate::rinehart::HlrAlgebra;

/// Crossed module whose actor is the shared base `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedLModule {
    pub cm: CrossedModule,
}

impl CrossedLModule {
    /// Wraps a crossed module after validating it.
    pub fn new(cm: CrossedModule) -> Result<Self> {
        let report = validate_crossed_module(&cm)?;
        if !report.is_valid() {
            return Err(Error::Invalid {
                context: "crossed L-module".into(),
                report,
            });
        }
        Ok(Self { cm })
    }

    pub fn base(&self) -> &HlrAlgebra {
        self.cm.actor()
    }

    pub fn dim(&self) -> usize {
        self.cm.m_dim()
    }

    pub fn boundary(&self) -> &Matrix {
        &self.cm.boundary
    }

    /// The zero crossed L-module.
    pub fn zero(base: &HlrAlgebra) -> Self {
        let na = base.base_dim();
        Self {
            cm: CrossedModule {
                action: LrsAction::trivial(
                    base.clone(),
                    HomLeibnizAAlgebra {
                        base: base.base.clone(),
                        algebra: HomLeibnizAlgebra::abelian(0),
                        module: AModule::new(Bilinear::zeros(0, na, 0)),
                    },
                ),
                boundary: Matrix::zeros(base.dim(), 0),
            },
        }
    }
}

/// Morphism `λ: M → M'` of crossed L-modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmlMorphism {
    pub lambda: Matrix,
}

impl CmlMorphism {
    pub fn new(lambda: Matrix) -> Self {
        Self { lambda }
    }

    pub fn identity(x: &CrossedLModule) -> Self {
        Self::new(Matrix::identity(x.dim()))
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &CmlMorphism) -> CmlMorphism {
        CmlMorphism::new(&g.lambda * &self.lambda)
    }
}

fn same_base(x: &CrossedModule, y: &CrossedModule) -> Result<()> {
    if x.actor() != y.actor() {
        return Err(Error::BaseMismatch("crossed L-modules over different base algebras".into()));
    }
    Ok(())
}

fn left_op(cm: &CrossedModule, x: usize) -> Matrix {
    cm.action.left.left_operator(&unit_vec(cm.l_dim(), x))
}

fn right_op(cm: &CrossedModule, x: usize) -> Matrix {
    cm.action.right.right_operator(&unit_vec(cm.l_dim(), x))
}

fn module_op(cm: &CrossedModule, f: usize) -> Matrix {
    cm.target().module.operator(&unit_vec(cm.target().base.dim(), f))
}

pub fn validate_cml_morphism(f: &CmlMorphism, src: &CrossedLModule, dst: &CrossedLModule) -> Result<ValidationReport> {
    same_base(&src.cm, &dst.cm)?;
    morphism_report(&f.lambda, &src.cm, &dst.cm)
}

fn morphism_report(lambda: &Matrix, src: &CrossedModule, dst: &CrossedModule) -> Result<ValidationReport> {
    let (n, m) = (src.m_dim(), dst.m_dim());
    ensure_shape(lambda.rows() == m && lambda.cols() == n, || {
        format!("lambda is {}x{}, expected {m}x{n}", lambda.rows(), lambda.cols())
    })?;
    let mut r = ValidationReport::new();
    let tri = &dst.boundary * lambda;
    let lc = lambda.columns();
    let (na, nl) = (src.target().base.dim(), src.l_dim());
    let a = &src.target().algebra;
    let b = &dst.target().algebra;
    for i in 0..n {
        r.check("TRI", &[("m", i)], tri.column(i), src.boundary.column(i));
        r.check("LAM-ALPHA", &[("m", i)], lambda.apply(&a.alpha.column(i)), b.alpha.apply(&lc[i]));
        for f in 0..na {
            let fv = unit_vec(na, f);
            let lhs = lambda.apply(&src.target().module.act(&fv, &unit_vec(n, i)));
            r.check("LAM-ALIN", &[("f", f), ("m", i)], lhs, dst.target().module.act(&fv, &lc[i]));
        }
        for j in 0..n {
            let lhs = lambda.apply(&a.bracket.basis_product(i, j));
            r.check("LAM-BR", &[("m", i), ("m'", j)], lhs, b.br(&lc[i], &lc[j]));
        }
        for x in 0..nl {
            let xv = unit_vec(nl, x);
            let lhs = lambda.apply(&src.action.left.basis_product(x, i));
            r.check("LAM-EQL", &[("x", x), ("m", i)], lhs, dst.action.act_left(&xv, &lc[i]));
            let lhs = lambda.apply(&src.action.right.basis_product(i, x));
            r.check("LAM-EQR", &[("x", x), ("m", i)], lhs, dst.action.act_right(&lc[i], &xv));
        }
    }
    Ok(r)
}

/// Result of a limit or colimit construction.
#[derive(Clone, Debug)]
pub struct Construction {
    pub object: CrossedLModule,
    /// Projections out of a limit, or injections into a colimit.
    pub legs: Vec<CmlMorphism>,
    /// The ideal divided out, for colimits.
    pub ideal: Option<Subspace>,
    /// Number of enlarging passes the ideal closure needed.
    pub closure_rounds: Option<usize>,
    /// Dimension of the ambient space the ideal lives in.
    pub ambient_dim: usize,
    pub notes: Vec<String>,
}

fn require_morphism(what: &str, f: &CmlMorphism, src: &CrossedLModule, dst: &CrossedLModule) -> Result<()> {
    let report = validate_cml_morphism(f, src, dst)?;
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::Invalid {
            context: what.into(),
            report,
        })
    }
}

/// Wraps a constructed crossed module, refusing to return an invalid one.
fn finish(what: &str, cm: CrossedModule) -> Result<CrossedLModule> {
    let report = validate_crossed_module(&cm)?;
    if !report.is_valid() {
        return Err(Error::Diagnostic(format!("{what}: constructed object is not a crossed module\n{report}")));
    }
    Ok(CrossedLModule { cm })
}

fn check_legs(what: &str, legs: &[(&CmlMorphism, &CrossedLModule, &CrossedLModule)]) -> Result<()> {
    for (k, (f, s, d)) in legs.iter().enumerate() {
        let report = validate_cml_morphism(f, s, d)?;
        if !report.is_valid() {
            return Err(Error::Diagnostic(format!("{what}: leg {} is not a morphism\n{report}", k + 1)));
        }
    }
    Ok(())
}

/// Componentwise structure on `M ⊕ N` with the given boundary.
fn direct_sum(x: &CrossedModule, y: &CrossedModule, boundary: Matrix) -> CrossedModule {
    let (n1, n2) = (x.m_dim(), y.m_dim());
    let n = n1 + n2;
    let (na, nl) = (x.target().base.dim(), x.l_dim());
    let ax = &x.target().algebra;
    let ay = &y.target().algebra;
    let split = |v: Vector| -> (Vector, Vector) { (v[..n1].to_vec(), v[n1..].to_vec()) };
    let join = |a: Vector, b: Vector| -> Vector { a.into_iter().chain(b).collect() };
    let bracket = Bilinear::from_fn(n, n, n, |i, j| {
        let (u1, u2) = split(unit_vec(n, i));
        let (v1, v2) = split(unit_vec(n, j));
        join(ax.br(&u1, &v1), ay.br(&u2, &v2))
    });
    let module = Bilinear::from_fn(n, na, n, |f, i| {
        let fv = unit_vec(na, f);
        let (u1, u2) = split(unit_vec(n, i));
        join(x.target().module.act(&fv, &u1), y.target().module.act(&fv, &u2))
    });
    let left = Bilinear::from_fn(n, nl, n, |l, i| {
        let xv = unit_vec(nl, l);
        let (u1, u2) = split(unit_vec(n, i));
        join(x.action.act_left(&xv, &u1), y.action.act_left(&xv, &u2))
    });
    let right = Bilinear::from_fn(n, n, nl, |i, l| {
        let xv = unit_vec(nl, l);
        let (u1, u2) = split(unit_vec(n, i));
        join(x.action.act_right(&u1, &xv), y.action.act_right(&u2, &xv))
    });
    CrossedModule {
        action: LrsAction {
            actor: x.actor().clone(),
            target: HomLeibnizAAlgebra {
                base: x.target().base.clone(),
                algebra: HomLeibnizAlgebra {
                    bracket,
                    alpha: ax.alpha.block_diag(&ay.alpha),
                },
                module: AModule::new(module),
            },
            left,
            right,
        },
        boundary,
    }
}

/// `M ⋊ N` with `N` acting on `M` through `∂_N`, boundary `∂_M + ∂_N`.
fn mutual_semidirect(x: &CrossedModule, y: &CrossedModule) -> CrossedModule {
    let (n1, n2) = (x.m_dim(), y.m_dim());
    let n = n1 + n2;
    let boundary = x.boundary.hstack(&y.boundary);
    let mut raw = direct_sum(x, y, boundary);
    let dy = &y.boundary;
    let ax = &x.target().algebra;
    raw.action.target.algebra.bracket = Bilinear::from_fn(n, n, n, |i, j| {
        let (u1, u2) = (unit_vec(n, i)[..n1].to_vec(), unit_vec(n, i)[n1..].to_vec());
        let (v1, v2) = (unit_vec(n, j)[..n1].to_vec(), unit_vec(n, j)[n1..].to_vec());
        // ([m,m'] + [∂n, m'] + [m, ∂n'], [n,n'])
        let mut top = ax.br(&u1, &v1);
        for (k, c) in x.action.act_left(&dy.apply(&u2), &v1).into_iter().enumerate() {
            top[k] += c;
        }
        for (k, c) in x.action.act_right(&u1, &dy.apply(&v2)).into_iter().enumerate() {
            top[k] += c;
        }
        top.into_iter().chain(y.target().algebra.br(&u2, &v2)).collect()
    });
    raw
}

/// Structure of `raw` restricted to a subspace, in the subspace's canonical
/// basis, together with the inclusion matrix.
fn restrict(raw: &CrossedModule, sub: &Subspace, what: &str) -> Result<(CrossedModule, Matrix)> {
    let basis = sub.basis_vectors();
    let k = basis.len();
    let (na, nl) = (raw.target().base.dim(), raw.l_dim());
    let coords = |v: Vector, label: &str| -> Result<Vector> {
        sub.coordinates(&v)
            .ok_or_else(|| Error::Diagnostic(format!("{what}: subspace is not closed under {label}")))
    };
    let m = raw.target();
    let mut bracket = Bilinear::zeros(k, k, k);
    let mut module = Bilinear::zeros(k, na, k);
    let mut left = Bilinear::zeros(k, nl, k);
    let mut right = Bilinear::zeros(k, k, nl);
    let mut alpha_cols = Vec::new();
    for a in 0..k {
        alpha_cols.push(coords(m.algebra.alpha.apply(&basis[a]), "alpha")?);
        for b in 0..k {
            for (o, c) in coords(m.algebra.br(&basis[a], &basis[b]), "the bracket")?.into_iter().enumerate() {
                bracket.set(o, a, b, c);
            }
        }
        for f in 0..na {
            let v = m.module.act(&unit_vec(na, f), &basis[a]);
            for (o, c) in coords(v, "the A-action")?.into_iter().enumerate() {
                module.set(o, f, a, c);
            }
        }
        for x in 0..nl {
            let xv = unit_vec(nl, x);
            for (o, c) in coords(raw.action.act_left(&xv, &basis[a]), "the left action")?.into_iter().enumerate() {
                left.set(o, x, a, c);
            }
            for (o, c) in coords(raw.action.act_right(&basis[a], &xv), "the right action")?.into_iter().enumerate() {
                right.set(o, a, x, c);
            }
        }
    }
    let incl = sub.basis().clone();
    let cm = CrossedModule {
        action: LrsAction {
            actor: raw.actor().clone(),
            target: HomLeibnizAAlgebra {
                base: m.base.clone(),
                algebra: HomLeibnizAlgebra {
                    bracket,
                    alpha: Matrix::from_columns(k, &alpha_cols),
                },
                module: AModule::new(module),
            },
            left,
            right,
        },
        boundary: &raw.boundary * &incl,
    };
    Ok((cm, incl))
}

/// Structure induced on `raw / sub`, together with the projection.
fn quotient(raw: &CrossedModule, sub: &Subspace, what: &str) -> Result<(CrossedModule, Matrix)> {
    let q = QuotientStructure::new(sub.clone());
    let m = raw.target();
    let ill = |tensor: &str| Error::Diagnostic(format!("{what}: induced {tensor} on the quotient is not well defined"));
    let bracket = q.induced_product(&m.algebra.bracket).ok_or_else(|| ill("bracket"))?;
    let alpha = q.induced_endomorphism(&m.algebra.alpha).ok_or_else(|| ill("twist map"))?;
    let module = q.induced_left_action(&m.module.action).ok_or_else(|| ill("A-action"))?;
    let left = q.induced_left_action(&raw.action.left).ok_or_else(|| ill("left action of L"))?;
    let right = q.induced_right_action(&raw.action.right).ok_or_else(|| ill("right action of L"))?;
    let boundary = q.induced_map_out(&raw.boundary).ok_or_else(|| ill("boundary"))?;
    let cm = CrossedModule {
        action: LrsAction {
            actor: raw.actor().clone(),
            target: HomLeibnizAAlgebra {
                base: m.base.clone(),
                algebra: HomLeibnizAlgebra { bracket, alpha },
                module: AModule::new(module),
            },
            left,
            right,
        },
        boundary,
    };
    Ok((cm, q.projection().clone()))
}

/// Operators an ideal must be stable under: `α`, the A-action, both actions
/// of `L`, and the bracket on both sides.
fn ideal_closure(raw: &CrossedModule, seed: &Subspace) -> Result<crate::linalg::Closure> {
    let mut unary = vec![raw.target().algebra.alpha.clone()];
    for f in 0..raw.target().base.dim() {
        unary.push(module_op(raw, f));
    }
    for x in 0..raw.l_dim() {
        unary.push(left_op(raw, x));
        unary.push(right_op(raw, x));
    }
    closure(seed, &unary, &[(&raw.target().algebra.bracket, Side::Both)])
}

pub fn equalizer(x: &CrossedLModule, y: &CrossedLModule, f: &CmlMorphism, g: &CmlMorphism) -> Result<Construction> {
    require_morphism("equalizer: first map", f, x, y)?;
    require_morphism("equalizer: second map", g, x, y)?;
    let sub = nullspace(&(&f.lambda - &g.lambda));
    let (cm, incl) = restrict(&x.cm, &sub, "equalizer")?;
    let object = finish("equalizer", cm)?;
    let leg = CmlMorphism::new(incl);
    check_legs("equalizer", &[(&leg, &object, x)])?;
    Ok(Construction {
        object,
        legs: vec![leg],
        ideal: None,
        closure_rounds: None,
        ambient_dim: x.dim(),
        notes: Vec::new(),
    })
}

/// Pullback of `f: X → Z` and `g: Y → Z`, carried by `{(m, n): f m = g n}`.
pub fn pullback(
    x: &CrossedLModule,
    y: &CrossedLModule,
    z: &CrossedLModule,
    f: &CmlMorphism,
    g: &CmlMorphism,
) -> Result<Construction> {
    require_morphism("pullback: first map", f, x, z)?;
    require_morphism("pullback: second map", g, y, z)?;
    let (n1, n2) = (x.dim(), y.dim());
    let sub = nullspace(&f.lambda.hstack(&-&g.lambda));
    let boundary = x.boundary().hstack(&Matrix::zeros(x.cm.l_dim(), n2));
    let raw = direct_sum(&x.cm, &y.cm, boundary);
    let (cm, incl) = restrict(&raw, &sub, "pullback")?;
    let object = finish("pullback", cm)?;
    let p1 = CmlMorphism::new(&Matrix::identity(n1).hstack(&Matrix::zeros(n1, n2)) * &incl);
    let p2 = CmlMorphism::new(&Matrix::zeros(n2, n1).hstack(&Matrix::identity(n2)) * &incl);
    check_legs("pullback", &[(&p1, &object, x), (&p2, &object, y)])?;
    Ok(Construction {
        object,
        legs: vec![p1, p2],
        ideal: None,
        closure_rounds: None,
        ambient_dim: n1 + n2,
        notes: Vec::new(),
    })
}

/// `ker ρ = {r ∈ L : ρ^L(r) = 0 = ρ^R(r)}` as a subspace of `L`.
pub fn anchor_kernel(l: &HlrAlgebra) -> Subspace {
    let (n, na) = (l.dim(), l.base_dim());
    let cols: Vec<Vector> = (0..n)
        .map(|i| {
            l.anchor_l[i]
                .entries()
                .iter()
                .chain(l.anchor_r[i].entries())
                .cloned()
                .collect()
        })
        .collect();
    nullspace(&Matrix::from_columns(2 * na * na, &cols))
}

/// Terminal crossed L-module `(ker ρ, inclusion)`.
pub fn terminal(l: &HlrAlgebra) -> Result<CrossedLModule> {
    let ker = anchor_kernel(l);
    let adjoint = CrossedModule {
        action: LrsAction::adjoint(l),
        boundary: Matrix::identity(l.dim()),
    };
    let (cm, _) = restrict(&adjoint, &ker, "terminal object")?;
    finish("terminal object", cm)
}

/// The unique morphism into the terminal object: `∂` corestricted to
/// `ker ρ`.
pub fn terminal_morphism(x: &CrossedLModule) -> Result<CmlMorphism> {
    let ker = anchor_kernel(x.base());
    let cols = x
        .boundary()
        .columns()
        .into_iter()
        .map(|c| {
            ker.coordinates(&c)
                .ok_or_else(|| Error::Diagnostic("boundary image is not contained in ker rho".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CmlMorphism::new(Matrix::from_columns(ker.dim(), &cols)))
}

/// Product, as the pullback of the two morphisms into the terminal object.
pub fn product(x: &CrossedLModule, y: &CrossedLModule) -> Result<Construction> {
    same_base(&x.cm, &y.cm)?;
    let t = terminal(x.base())?;
    let (fx, fy) = (terminal_morphism(x)?, terminal_morphism(y)?);
    pullback(x, y, &t, &fx, &fy)
}

pub fn coequalizer(x: &CrossedLModule, y: &CrossedLModule, f: &CmlMorphism, g: &CmlMorphism) -> Result<Construction> {
    require_morphism("coequalizer: first map", f, x, y)?;
    require_morphism("coequalizer: second map", g, x, y)?;
    let seed = image(&(&f.lambda - &g.lambda));
    let cl = ideal_closure(&y.cm, &seed)?;
    let ideal = cl.subspace;
    for (k, v) in ideal.basis_vectors().iter().enumerate() {
        if !is_zero_vec(&y.boundary().apply(v)) {
            return Err(Error::Diagnostic(format!(
                "coequalizer: ideal is not contained in ker of the boundary (basis vector {})",
                k + 1
            )));
        }
    }
    let (cm, proj) = quotient(&y.cm, &ideal, "coequalizer")?;
    let object = finish("coequalizer", cm)?;
    let leg = CmlMorphism::new(proj);
    check_legs("coequalizer", &[(&leg, y, &object)])?;
    Ok(Construction {
        object,
        legs: vec![leg],
        ideal: Some(ideal),
        closure_rounds: Some(cl.rounds),
        ambient_dim: y.dim(),
        notes: Vec::new(),
    })
}

/// Generators used for the Peiffer ideal of `M ⋊ N`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PeifferConvention {
    /// `([∂n', m], [∂m, n'])`.
    #[default]
    Printed,
    /// `([∂n', m], -[∂m, n'])`.
    Signed,
    /// `(-[m, ∂n], [∂m, n])` and `(-[∂n, m], [n, ∂m])`.
    TwoSided,
}

impl PeifferConvention {
    pub fn name(self) -> &'static str {
        match self {
            PeifferConvention::Printed => "printed",
            PeifferConvention::Signed => "signed",
            PeifferConvention::TwoSided => "two-sided",
        }
    }
}

impl std::str::FromStr for PeifferConvention {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "printed" => Ok(PeifferConvention::Printed),
            "signed" => Ok(PeifferConvention::Signed),
            "two-sided" => Ok(PeifferConvention::TwoSided),
            other => Err(format!("unknown Peiffer convention '{other}' (expected printed, signed or two-sided)")),
        }
    }
}

/// Peiffer generators in `M ⊕ N` over all basis pairs.
pub fn peiffer_generators(x: &CrossedModule, y: &CrossedModule, convention: PeifferConvention) -> Vec<Vector> {
    let (n1, n2) = (x.m_dim(), y.m_dim());
    let mut out = Vec::new();
    let join = |a: Vector, b: Vector| -> Vector { a.into_iter().chain(b).collect() };
    let neg = |v: Vector| -> Vector { v.into_iter().map(|c| -c).collect() };
    for m in 0..n1 {
        let mv = unit_vec(n1, m);
        let dm = x.boundary.column(m);
        for n in 0..n2 {
            let nv = unit_vec(n2, n);
            let dn = y.boundary.column(n);
            match convention {
                PeifferConvention::Printed => {
                    out.push(join(x.action.act_left(&dn, &mv), y.action.act_left(&dm, &nv)));
                }
                PeifferConvention::Signed => {
                    out.push(join(x.action.act_left(&dn, &mv), neg(y.action.act_left(&dm, &nv))));
                }
                PeifferConvention::TwoSided => {
                    out.push(join(neg(x.action.act_right(&mv, &dn)), y.action.act_left(&dm, &nv)));
                    out.push(join(neg(x.action.act_left(&dn, &mv)), y.action.act_right(&nv, &dm)));
                }
            }
        }
    }
    out
}

fn colimit_of_sum(
    what: &str,
    x: &CrossedLModule,
    y: &CrossedLModule,
    mut generators: Vec<Vector>,
    convention: PeifferConvention,
) -> Result<Construction> {
    same_base(&x.cm, &y.cm)?;
    let (n1, n2) = (x.dim(), y.dim());
    let n = n1 + n2;
    let raw = mutual_semidirect(&x.cm, &y.cm);
    let peiffer = peiffer_generators(&x.cm, &y.cm, convention);
    for (k, g) in peiffer.iter().enumerate() {
        let d = raw.boundary.apply(g);
        if !is_zero_vec(&d) {
            let shown: Vec<String> = g.iter().map(|c| c.to_string()).collect();
            return Err(Error::Diagnostic(format!(
                "{what} boundary not well-defined for these inputs: Peiffer generator {} = ({}) has nonzero boundary ({} convention)",
                k + 1,
                shown.join(", "),
                convention.name()
            )));
        }
    }
    generators.extend(peiffer);
    let seed = Subspace::span(n, &generators);
    let cl = ideal_closure(&raw, &seed)?;
    let ideal = cl.subspace;
    for v in ideal.basis_vectors() {
        if !is_zero_vec(&raw.boundary.apply(&v)) {
            return Err(Error::Diagnostic(format!("{what} boundary not well-defined on the generated ideal")));
        }
    }
    let (cm, proj) = quotient(&raw, &ideal, what)?;
    let object = finish(what, cm)?;
    let ix = CmlMorphism::new(&proj * &Matrix::identity(n1).vstack(&Matrix::zeros(n2, n1)));
    let iy = CmlMorphism::new(&proj * &Matrix::zeros(n1, n2).vstack(&Matrix::identity(n2)));
    check_legs(what, &[(&ix, x, &object), (&iy, y, &object)])?;
    Ok(Construction {
        object,
        legs: vec![ix, iy],
        ideal: Some(ideal),
        closure_rounds: Some(cl.rounds),
        ambient_dim: n,
        notes: vec![format!("Peiffer convention: {}", convention.name())],
    })
}

/// Coproduct `(M ⋊ N) / I` with legs from `X` and from `Y`.
pub fn coproduct(x: &CrossedLModule, y: &CrossedLModule, convention: PeifferConvention) -> Result<Construction> {
    colimit_of_sum("coproduct", x, y, Vec::new(), convention)
}

/// Pushout of `f: E → X` and `g: E → Y`, the quotient of `X ⋊ Y` by the
/// Peiffer generators and `(f e, -g e)`.
pub fn pushout(
    e: &CrossedLModule,
    x: &CrossedLModule,
    y: &CrossedLModule,
    f: &CmlMorphism,
    g: &CmlMorphism,
    convention: PeifferConvention,
) -> Result<Construction> {
    require_morphism("pushout: first map", f, e, x)?;
    require_morphism("pushout: second map", g, e, y)?;
    let gens = (0..e.dim())
        .map(|k| {
            let fe = f.lambda.column(k);
            let ge = g.lambda.column(k);
            fe.into_iter().chain(ge.into_iter().map(|c| -c)).collect()
        })
        .collect();
    colimit_of_sum("pushout", x, y, gens, convention)
}

/// Shape of a universal property.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UniversalKind {
    /// Mediating map from a cone apex into the object: `leg_k ∘ h = cone_k`.
    Limit,
    /// Mediating map from the object to a cocone apex: `h ∘ leg_k = cone_k`.
    Colimit,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub existence: bool,
    pub uniqueness: bool,
    pub mediating: Option<Matrix>,
    /// Morphism check of the mediating map, when one was found.
    pub morphism_report: Option<ValidationReport>,
}

impl VerificationReport {
    pub fn holds(&self) -> bool {
        self.existence && self.uniqueness
    }
}

/// Linear equations making `H: src → dst` commute with boundaries, twist,
/// A-action and both L-actions.
fn morphism_equations(src: &CrossedModule, dst: &CrossedModule) -> Vec<MatrixEquation> {
    let (rows, cols) = (dst.m_dim(), src.m_dim());
    let mut eqs = vec![
        MatrixEquation::left(dst.boundary.clone(), cols, src.boundary.clone()),
        MatrixEquation::commute(dst.target().algebra.alpha.clone(), src.target().algebra.alpha.clone(), rows, cols),
    ];
    for f in 0..src.target().base.dim() {
        eqs.push(MatrixEquation::commute(module_op(dst, f), module_op(src, f), rows, cols));
    }
    for x in 0..src.l_dim() {
        eqs.push(MatrixEquation::commute(left_op(dst, x), left_op(src, x), rows, cols));
        eqs.push(MatrixEquation::commute(right_op(dst, x), right_op(src, x), rows, cols));
    }
    eqs
}

/// Solves for the mediating morphism of a (co)cone and checks that it is a
/// morphism and that it is unique.
pub fn verify_universal_property(
    kind: UniversalKind,
    object: &CrossedLModule,
    legs: &[CmlMorphism],
    apex: &CrossedLModule,
    cone: &[CmlMorphism],
) -> Result<VerificationReport> {
    same_base(&object.cm, &apex.cm)?;
    ensure_shape(legs.len() == cone.len(), || {
        format!("{} legs but {} cone maps", legs.len(), cone.len())
    })?;
    let (src, dst) = match kind {
        UniversalKind::Limit => (apex, object),
        UniversalKind::Colimit => (object, apex),
    };
    let (rows, cols) = (dst.dim(), src.dim());
    let mut eqs = morphism_equations(&src.cm, &dst.cm);
    for (leg, c) in legs.iter().zip(cone) {
        eqs.push(match kind {
            UniversalKind::Limit => MatrixEquation::left(leg.lambda.clone(), cols, c.lambda.clone()),
            UniversalKind::Colimit => MatrixEquation::right(rows, leg.lambda.clone(), c.lambda.clone()),
        });
    }
    let (particular, kernel) = solve_matrix_equations(rows, cols, &eqs)?;
    let uniqueness = kernel.is_zero();
    let Some(h) = particular else {
        return Ok(VerificationReport {
            existence: false,
            uniqueness,
            mediating: None,
            morphism_report: None,
        });
    };
    let report = morphism_report(&h, &src.cm, &dst.cm)?;
    Ok(VerificationReport {
        existence: report.is_valid(),
        uniqueness,
        mediating: Some(h),
        morphism_report: Some(report),
    })
}

/// Zero maps from the zero object, one per leg target.
pub fn zero_cone(targets: &[&CrossedLModule]) -> Vec<CmlMorphism> {
    targets.iter().map(|t| CmlMorphism::new(Matrix::zeros(t.dim(), 0))).collect()
}
