//! Crossed modules, cat¹-algebras and the conversions between them.

use crate::action::{semidirect, validate_lrs_action, LrsAction};
use crate::algebra::{AModule, HomLeibnizAAlgebra, HomLeibnizAlgebra};
use crate::error::{ensure_shape, Error, Result};
use crate::linalg::{nullspace, solve, Bilinear, Matrix, Subspace};
use crate::rational::{unit_vec, zero_vec, Vector};
use crate::report::ValidationReport;
use crate::rinehart::{validate_hlr, validate_hlr_morphism, HlrAlgebra};

/// Crossed module `∂: M → L` of HLR algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    pub action: LrsAction,
    /// `∂`, shape `dim L × dim M`.
    pub boundary: Matrix,
}

impl CrossedModule {
    pub fn new(action: LrsAction, boundary: Matrix) -> Result<Self> {
        let cm = Self { action, boundary };
        cm.check_shapes()?;
        Ok(cm)
    }

    pub fn actor(&self) -> &HlrAlgebra {
        &self.action.actor
    }

    pub fn target(&self) -> &HomLeibnizAAlgebra {
        &self.action.target
    }

    pub fn l_dim(&self) -> usize {
        self.action.actor_dim()
    }

    pub fn m_dim(&self) -> usize {
        self.action.target_dim()
    }

    pub fn check_shapes(&self) -> Result<()> {
        self.action.check_shapes()?;
        let (nl, nm) = (self.l_dim(), self.m_dim());
        ensure_shape(self.boundary.rows() == nl && self.boundary.cols() == nm, || {
            format!("boundary is {}x{}, expected {nl}x{nm}", self.boundary.rows(), self.boundary.cols())
        })
    }
}

fn flat(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

/// CM0 through CM4 only, without re-validating the action.
pub fn crossed_module_axioms(cm: &CrossedModule) -> Result<ValidationReport> {
    cm.check_shapes()?;
    let (na, nl, nm) = (cm.actor().base_dim(), cm.l_dim(), cm.m_dim());
    let l = cm.actor();
    let m = cm.target();
    let d = &cm.boundary;
    let dc = d.columns();
    let mut r = ValidationReport::new();
    for mi in 0..nm {
        let mv = unit_vec(nm, mi);
        r.check("CM0", &[("m", mi)], l.alpha().apply(&dc[mi]), d.apply(&m.algebra.alpha.column(mi)));
        let zero = zero_vec(na * na);
        let rl = flat(&l.rho_l(&dc[mi]));
        let rr = flat(&l.rho_r(&dc[mi]));
        r.check("CM4", &[("m", mi)], rl, zero.clone());
        r.check("CM4", &[("m", mi)], rr, zero);
        for f in 0..na {
            let fm = m.module.act(&unit_vec(na, f), &mv);
            r.check("CM3", &[("f", f), ("m", mi)], d.apply(&fm), l.act(&unit_vec(na, f), &dc[mi]));
        }
        for x in 0..nl {
            let xv = unit_vec(nl, x);
            let w = [("x", x), ("m", mi)];
            r.check("CM1", &w, d.apply(&cm.action.left.basis_product(x, mi)), l.bracket(&xv, &dc[mi]));
            r.check("CM1", &w, d.apply(&cm.action.right.basis_product(mi, x)), l.bracket(&dc[mi], &xv));
        }
        for ni in 0..nm {
            let nv = unit_vec(nm, ni);
            let w = [("m", mi), ("n", ni)];
            let bmn = m.algebra.bracket.basis_product(mi, ni);
            r.check("CM2", &w, cm.action.act_left(&dc[mi], &nv), bmn.clone());
            r.check("CM2", &w, cm.action.act_right(&mv, &dc[ni]), bmn);
        }
    }
    Ok(r)
}

/// Action validity plus CM0 through CM4.
pub fn validate_crossed_module(cm: &CrossedModule) -> Result<ValidationReport> {
    cm.check_shapes()?;
    let mut r = validate_lrs_action(&cm.action)?;
    r.merge(crossed_module_axioms(cm)?);
    Ok(r)
}

/// `M` viewed as an HLR algebra with zero anchors.
pub fn target_as_hlr(m: &HomLeibnizAAlgebra) -> HlrAlgebra {
    let (n, na) = (m.dim(), m.base.dim());
    HlrAlgebra {
        base: m.base.clone(),
        carrier: m.algebra.clone(),
        module: m.module.clone(),
        anchor_l: vec![Matrix::zeros(na, na); n],
        anchor_r: vec![Matrix::zeros(na, na); n],
    }
}

/// Returns the CM0-CM4 report and the homomorphism report for
/// `(id, ∂): L⋉M → L⋉L` and `(∂, id): M⋉M → L⋉M`.
pub fn check_boundary_homomorphisms(cm: &CrossedModule) -> Result<(ValidationReport, ValidationReport)> {
    cm.check_shapes()?;
    cm.action.check_same_base()?;
    let cm_report = crossed_module_axioms(cm)?;
    let (nl, nm) = (cm.l_dim(), cm.m_dim());
    let l_m = semidirect(&cm.action)?;
    let l_l = semidirect(&LrsAction::adjoint(cm.actor()))?;
    let m_hlr = target_as_hlr(cm.target());
    let m_m = semidirect(&LrsAction::adjoint(&m_hlr))?;
    let id_d = Matrix::identity(nl).block_diag(&cm.boundary);
    let d_id = cm.boundary.block_diag(&Matrix::identity(nm));
    let mut hom = ValidationReport::new();
    hom.merge_prefixed("(id,d)", validate_hlr_morphism(&id_d, &l_m, &l_l)?);
    hom.merge_prefixed("(d,id)", validate_hlr_morphism(&d_id, &m_m, &l_m)?);
    Ok((cm_report, hom))
}

/// Which reading of the fourth cat¹ condition to check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Cat4Mode {
    /// `ρ(ξ(s(p))) = 0` for every `p ∈ P`.
    Strict,
    /// `ρ_L((t - s)(p)) = 0` for every `p ∈ P`.
    #[default]
    Reconstructed,
}

impl Cat4Mode {
    pub fn name(self) -> &'static str {
        match self {
            Cat4Mode::Strict => "strict",
            Cat4Mode::Reconstructed => "reconstructed",
        }
    }
}

impl std::str::FromStr for Cat4Mode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "strict" => Ok(Cat4Mode::Strict),
            "reconstructed" => Ok(Cat4Mode::Reconstructed),
            other => Err(format!("unknown Cat4 mode '{other}' (expected strict or reconstructed)")),
        }
    }
}

/// Cat¹-algebra `(P; s, t: P → L; i: L → P)` with optional section `ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cat1Algebra {
    pub source: HlrAlgebra,
    pub range: HlrAlgebra,
    pub s: Matrix,
    pub t: Matrix,
    pub i: Matrix,
    pub xi: Option<Matrix>,
}

impl Cat1Algebra {
    pub fn p_dim(&self) -> usize {
        self.source.dim()
    }

    pub fn l_dim(&self) -> usize {
        self.range.dim()
    }

    pub fn check_shapes(&self) -> Result<()> {
        self.source.check_shapes()?;
        self.range.check_shapes()?;
        let (np, nl) = (self.p_dim(), self.l_dim());
        for (name, m) in [("s", &self.s), ("t", &self.t)] {
            ensure_shape(m.rows() == nl && m.cols() == np, || {
                format!("{name} is {}x{}, expected {nl}x{np}", m.rows(), m.cols())
            })?;
        }
        for (name, m) in [("i", Some(&self.i)), ("xi", self.xi.as_ref())] {
            if let Some(m) = m {
                ensure_shape(m.rows() == np && m.cols() == nl, || {
                    format!("{name} is {}x{}, expected {np}x{nl}", m.rows(), m.cols())
                })?;
            }
        }
        Ok(())
    }

    pub fn section(&self) -> &Matrix {
        self.xi.as_ref().unwrap_or(&self.i)
    }

    pub fn ker_s(&self) -> Subspace {
        nullspace(&self.s)
    }

    pub fn ker_t(&self) -> Subspace {
        nullspace(&self.t)
    }
}

/// Checks that `g: P → L` preserves brackets and twists, is φ-semilinear
/// (`g(f p) = φ(f) g(p)`) and intertwines anchors (`ρ_L(g p) ∘ φ = φ ∘ ρ_P(p)`).
fn twisted_hom_report(tag: &str, g: &Matrix, p: &HlrAlgebra, l: &HlrAlgebra) -> ValidationReport {
    let (np, na) = (p.dim(), p.base_dim());
    let phi = l.phi();
    let gc = g.columns();
    let mut r = ValidationReport::new();
    let t = |s: &str| format!("{tag}-{s}");
    for a in 0..np {
        r.check(&t("ALPHA"), &[("p", a)], g.apply(&p.alpha().column(a)), l.alpha().apply(&gc[a]));
        r.check(&t("ANL"), &[("p", a)], flat(&(&l.rho_l(&gc[a]) * phi)), flat(&(phi * &p.anchor_l[a])));
        r.check(&t("ANR"), &[("p", a)], flat(&(&l.rho_r(&gc[a]) * phi)), flat(&(phi * &p.anchor_r[a])));
        for f in 0..na {
            let lhs = g.apply(&p.act(&unit_vec(na, f), &unit_vec(np, a)));
            r.check(&t("SEMI"), &[("f", f), ("p", a)], lhs, l.act(&phi.column(f), &gc[a]));
        }
        for b in 0..np {
            let lhs = g.apply(&p.carrier.bracket.basis_product(a, b));
            r.check(&t("BR"), &[("p", a), ("q", b)], lhs, l.bracket(&gc[a], &gc[b]));
        }
    }
    r
}

pub fn validate_cat1(c: &Cat1Algebra, mode: Cat4Mode) -> Result<ValidationReport> {
    c.check_shapes()?;
    if c.source.base != c.range.base {
        return Err(Error::BaseMismatch("cat1 source and range have different base algebras".into()));
    }
    let alpha_l = c.range.alpha();
    if let Some(xi) = &c.xi {
        if &(&c.s * xi) != alpha_l {
            return Err(Error::Precondition("section xi does not satisfy s o xi = alpha_L".into()));
        }
    }
    let (np, nl, na) = (c.p_dim(), c.l_dim(), c.source.base_dim());
    let p = &c.source;
    let l = &c.range;
    let mut r = ValidationReport::new();
    r.note(format!("Cat4 mode: {}", mode.name()));
    r.merge_prefixed("P", validate_hlr(p)?);
    r.merge_prefixed("L", validate_hlr(l)?);
    r.merge(twisted_hom_report("S", &c.s, p, l));
    r.merge(twisted_hom_report("T", &c.t, p, l));
    r.merge_prefixed("i", validate_hlr_morphism(&c.i, l, p)?);
    if !c.i.is_injective() {
        r.fail("I-INJ", &[]);
    }
    let si = &c.s * &c.i;
    let ti = &c.t * &c.i;
    for x in 0..nl {
        r.check("SI", &[("x", x)], si.column(x), alpha_l.column(x));
        r.check("TI", &[("x", x)], ti.column(x), alpha_l.column(x));
    }
    // Cat1
    let sit = &(&c.s * &c.i) * &c.t;
    let t_alpha = &c.t * p.alpha();
    let tis = &(&c.t * &c.i) * &c.s;
    let s_alpha = &c.s * p.alpha();
    for a in 0..np {
        r.check("Cat1", &[("p", a)], sit.column(a), t_alpha.column(a));
        r.check("Cat1", &[("p", a)], tis.column(a), s_alpha.column(a));
    }
    // Cat2
    let ks = c.ker_s().basis_vectors();
    let kt = c.ker_t().basis_vectors();
    for (a, u) in ks.iter().enumerate() {
        for (b, v) in kt.iter().enumerate() {
            let w = [("ker s", a), ("ker t", b)];
            r.check("Cat2", &w, p.bracket(u, v), zero_vec(np));
            r.check("Cat2", &w, p.bracket(v, u), zero_vec(np));
        }
    }
    // Cat3
    let txi = &c.t * c.section();
    for f in 0..na {
        let fv = unit_vec(na, f);
        for x in 0..nl {
            let lhs = txi.apply(&l.act(&fv, &unit_vec(nl, x)));
            let rhs = l.act(&l.phi().column(f), &txi.column(x));
            r.check("Cat3", &[("f", f), ("x", x)], lhs, rhs);
        }
    }
    // Cat4
    let zero = zero_vec(na * na);
    match mode {
        Cat4Mode::Strict => {
            let xs = c.section() * &c.s;
            for a in 0..np {
                let q = xs.column(a);
                r.check("Cat4", &[("p", a)], flat(&p.rho_l(&q)), zero.clone());
                r.check("Cat4", &[("p", a)], flat(&p.rho_r(&q)), zero.clone());
            }
        }
        Cat4Mode::Reconstructed => {
            let diff = &c.t - &c.s;
            for a in 0..np {
                let q = diff.column(a);
                r.check("Cat4", &[("p", a)], flat(&l.rho_l(&q)), zero.clone());
                r.check("Cat4", &[("p", a)], flat(&l.rho_r(&q)), zero.clone());
            }
        }
    }
    Ok(r)
}

fn require_valid(context: &str, report: ValidationReport) -> Result<()> {
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::Invalid {
            context: context.into(),
            report,
        })
    }
}

/// Cat¹-algebra of a crossed module: `P = L ⋉ M`, `s(x,m) = α x`,
/// `t(x,m) = α x + ∂ α m`, `i(x) = (x, 0)`, `ξ(x) = (x, 0)`.
pub fn cm_to_cat1(cm: &CrossedModule) -> Result<Cat1Algebra> {
    cm_to_cat1_with_derivation(cm, None)
}

/// As [`cm_to_cat1`] with section `ξ(x) = (x, D x)` for a supplied
/// `D: L → M`.
pub fn cm_to_cat1_with_derivation(cm: &CrossedModule, d: Option<&Matrix>) -> Result<Cat1Algebra> {
    require_valid("cm_to_cat1", validate_crossed_module(cm)?)?;
    let (nl, nm) = (cm.l_dim(), cm.m_dim());
    let zero_d = Matrix::zeros(nm, nl);
    let d = d.unwrap_or(&zero_d);
    ensure_shape(d.rows() == nm && d.cols() == nl, || {
        format!("derivation D is {}x{}, expected {nm}x{nl}", d.rows(), d.cols())
    })?;
    let p = semidirect(&cm.action)?;
    let alpha_l = cm.actor().alpha();
    let alpha_m = &cm.target().algebra.alpha;
    let s = alpha_l.hstack(&Matrix::zeros(nl, nm));
    let t = alpha_l.hstack(&(&cm.boundary * alpha_m));
    let i = Matrix::identity(nl).vstack(&Matrix::zeros(nm, nl));
    let xi = Matrix::identity(nl).vstack(d);
    Ok(Cat1Algebra {
        source: p,
        range: cm.actor().clone(),
        s,
        t,
        i,
        xi: Some(xi),
    })
}

/// Structure of `P` restricted to a subspace closed under it, in the
/// subspace's canonical basis.
pub(crate) fn restrict_hlr_structure(
    p: &HlrAlgebra,
    sub: &Subspace,
    what: &str,
) -> Result<(HomLeibnizAlgebra, AModule)> {
    let basis = sub.basis_vectors();
    let k = basis.len();
    let na = p.base_dim();
    let coords = |v: Vector, label: &str| -> Result<Vector> {
        sub.coordinates(&v)
            .ok_or_else(|| Error::Diagnostic(format!("{what} is not closed under {label}")))
    };
    let mut bracket = Bilinear::zeros(k, k, k);
    for a in 0..k {
        for b in 0..k {
            let c = coords(p.bracket(&basis[a], &basis[b]), "the bracket")?;
            for (o, v) in c.into_iter().enumerate() {
                bracket.set(o, a, b, v);
            }
        }
    }
    let mut alpha_cols = Vec::with_capacity(k);
    for v in &basis {
        alpha_cols.push(coords(p.alpha().apply(v), "alpha")?);
    }
    let alpha = Matrix::from_columns(k, &alpha_cols);
    let mut action = Bilinear::zeros(k, na, k);
    for f in 0..na {
        for (a, v) in basis.iter().enumerate() {
            let c = coords(p.act(&unit_vec(na, f), v), "the A-action")?;
            for (o, x) in c.into_iter().enumerate() {
                action.set(o, f, a, x);
            }
        }
    }
    Ok((HomLeibnizAlgebra { bracket, alpha }, AModule::new(action)))
}

/// Crossed module of a cat¹-algebra: `M = ker s` with the structure of `P`,
/// actions `[x, m] = [i x, m]_P` and `[m, x] = [m, i x]_P`, and boundary
/// `α_L⁻¹ ∘ t` on `ker s`.
pub fn cat1_to_cm(c: &Cat1Algebra) -> Result<CrossedModule> {
    require_valid("cat1_to_cm", validate_cat1(c, Cat4Mode::Reconstructed)?)?;
    let alpha_inv = c
        .range
        .alpha()
        .inverse()
        .ok_or_else(|| Error::Precondition("cat1_to_cm: alpha_L is not invertible".into()))?;
    let p = &c.source;
    let nl = c.l_dim();
    let ker = c.ker_s();
    let basis = ker.basis_vectors();
    let k = basis.len();
    let (algebra, module) = restrict_hlr_structure(p, &ker, "ker s")?;
    let target = HomLeibnizAAlgebra {
        base: p.base.clone(),
        algebra,
        module,
    };
    let ic = c.i.columns();
    let mut left = Bilinear::zeros(k, nl, k);
    let mut right = Bilinear::zeros(k, k, nl);
    for x in 0..nl {
        for (a, m) in basis.iter().enumerate() {
            let xm = ker
                .coordinates(&p.bracket(&ic[x], m))
                .ok_or_else(|| Error::Diagnostic("ker s is not closed under the left action of L".into()))?;
            let mx = ker
                .coordinates(&p.bracket(m, &ic[x]))
                .ok_or_else(|| Error::Diagnostic("ker s is not closed under the right action of L".into()))?;
            for o in 0..k {
                left.set(o, x, a, xm[o].clone());
                right.set(o, a, x, mx[o].clone());
            }
        }
    }
    let boundary = &(&alpha_inv * &c.t) * ker.basis();
    let cm = CrossedModule {
        action: LrsAction {
            actor: c.range.clone(),
            target,
            left,
            right,
        },
        boundary,
    };
    require_valid("cat1_to_cm: recovered crossed module", validate_crossed_module(&cm)?)?;
    Ok(cm)
}

/// Morphism of crossed modules `(Φ: M → M', Ψ: L → L')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmMorphism {
    pub phi_map: Matrix,
    pub psi_map: Matrix,
}

impl CmMorphism {
    pub fn identity(cm: &CrossedModule) -> Self {
        Self {
            phi_map: Matrix::identity(cm.m_dim()),
            psi_map: Matrix::identity(cm.l_dim()),
        }
    }

    pub fn is_isomorphism(&self) -> bool {
        self.phi_map.inverse().is_some() && self.psi_map.inverse().is_some()
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &CmMorphism) -> CmMorphism {
        CmMorphism {
            phi_map: &g.phi_map * &self.phi_map,
            psi_map: &g.psi_map * &self.psi_map,
        }
    }
}

pub fn validate_cm_morphism(f: &CmMorphism, src: &CrossedModule, dst: &CrossedModule) -> Result<ValidationReport> {
    src.check_shapes()?;
    dst.check_shapes()?;
    let (nl, nm, nl2, nm2) = (src.l_dim(), src.m_dim(), dst.l_dim(), dst.m_dim());
    ensure_shape(f.phi_map.rows() == nm2 && f.phi_map.cols() == nm, || {
        format!("Phi is {}x{}, expected {nm2}x{nm}", f.phi_map.rows(), f.phi_map.cols())
    })?;
    ensure_shape(f.psi_map.rows() == nl2 && f.psi_map.cols() == nl, || {
        format!("Psi is {}x{}, expected {nl2}x{nl}", f.psi_map.rows(), f.psi_map.cols())
    })?;
    if src.target().base != dst.target().base {
        return Err(Error::BaseMismatch("crossed modules have different base algebras".into()));
    }
    let mut r = ValidationReport::new();
    r.merge_prefixed("psi", validate_hlr_morphism(&f.psi_map, src.actor(), dst.actor())?);
    let phi = &f.phi_map;
    let psi = &f.psi_map;
    let m = src.target();
    let m2 = dst.target();
    let na = m.base.dim();
    let pc = phi.columns();
    let qc = psi.columns();
    let bd = psi * &src.boundary;
    let db = &dst.boundary * phi;
    for a in 0..nm {
        r.check("MOR-BD", &[("m", a)], bd.column(a), db.column(a));
        r.check("MOR-ALPHA", &[("m", a)], phi.apply(&m.algebra.alpha.column(a)), m2.algebra.alpha.apply(&pc[a]));
        for f in 0..na {
            let fv = unit_vec(na, f);
            let lhs = phi.apply(&m.module.act(&fv, &unit_vec(nm, a)));
            r.check("MOR-ALIN", &[("f", f), ("m", a)], lhs, m2.module.act(&fv, &pc[a]));
        }
        for b in 0..nm {
            let lhs = phi.apply(&m.algebra.bracket.basis_product(a, b));
            r.check("MOR-BR", &[("m", a), ("m'", b)], lhs, m2.algebra.br(&pc[a], &pc[b]));
        }
        for x in 0..nl {
            let w = [("x", x), ("m", a)];
            let lhs = phi.apply(&src.action.left.basis_product(x, a));
            r.check("MOR-EQL", &w, lhs, dst.action.act_left(&qc[x], &pc[a]));
            let lhs = phi.apply(&src.action.right.basis_product(a, x));
            r.check("MOR-EQR", &w, lhs, dst.action.act_right(&pc[a], &qc[x]));
        }
    }
    Ok(r)
}

/// Outcome of the crossed module → cat¹ → crossed module round trip.
#[derive(Clone, Debug)]
pub struct RoundTrip {
    pub roundtrip: CrossedModule,
    /// Identity pair, verified as an isomorphism `roundtrip → cm`.
    pub identity: CmMorphism,
    pub identity_report: ValidationReport,
    /// The twist pair `(α_M, α_L)` and its morphism report `roundtrip → cm`.
    pub twist_pair: CmMorphism,
    pub twist_report: ValidationReport,
}

pub fn roundtrip_iso_check(cm: &CrossedModule) -> Result<RoundTrip> {
    let back = cat1_to_cm(&cm_to_cat1(cm)?)?;
    let identity = CmMorphism::identity(cm);
    let identity_report = validate_cm_morphism(&identity, &back, cm)?;
    if !identity_report.is_valid() || back != *cm {
        return Err(Error::Diagnostic(format!(
            "round trip did not return the original crossed module\n{identity_report}"
        )));
    }
    let twist_pair = CmMorphism {
        phi_map: cm.target().algebra.alpha.clone(),
        psi_map: cm.actor().alpha().clone(),
    };
    let twist_report = validate_cm_morphism(&twist_pair, &back, cm)?;
    Ok(RoundTrip {
        roundtrip: back,
        identity,
        identity_report,
        twist_pair,
        twist_report,
    })
}

/// Morphism of cat¹-algebras, `Υ: P → P'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cat1Morphism {
    pub upsilon: Matrix,
}

/// Image of a crossed module morphism: `Υ(x, m) = (Ψ x, Φ m)`.
pub fn cm_morphism_to_cat1(f: &CmMorphism) -> Cat1Morphism {
    Cat1Morphism {
        upsilon: f.psi_map.block_diag(&f.phi_map),
    }
}

pub fn validate_cat1_morphism(u: &Cat1Morphism, src: &Cat1Algebra, dst: &Cat1Algebra) -> Result<ValidationReport> {
    src.check_shapes()?;
    dst.check_shapes()?;
    let (np, np2, nl) = (src.p_dim(), dst.p_dim(), src.l_dim());
    let y = &u.upsilon;
    ensure_shape(y.rows() == np2 && y.cols() == np, || {
        format!("Upsilon is {}x{}, expected {np2}x{np}", y.rows(), y.cols())
    })?;
    let mut r = ValidationReport::new();
    r.merge_prefixed("upsilon", validate_hlr_morphism(y, &src.source, &dst.source)?);
    // Υ restricted to L, read through i'
    let yi = y * &src.i;
    let mut cols: Vec<Vector> = Vec::with_capacity(nl);
    let mut contained = true;
    for x in 0..nl {
        match solve(&dst.i, &yi.column(x))? {
            Some(c) => cols.push(c),
            None => {
                contained = false;
                r.fail("C1M-INC", &[("x", x)]);
                cols.push(zero_vec(dst.l_dim()));
            }
        }
    }
    if contained {
        let y_l = Matrix::from_columns(dst.l_dim(), &cols);
        let s_lhs = &dst.s * y;
        let s_rhs = &y_l * &src.s;
        let t_lhs = &dst.t * y;
        let t_rhs = &y_l * &src.t;
        for a in 0..np {
            r.check("C1M-S", &[("p", a)], s_lhs.column(a), s_rhs.column(a));
            r.check("C1M-T", &[("p", a)], t_lhs.column(a), t_rhs.column(a));
        }
    }
    Ok(r)
}
