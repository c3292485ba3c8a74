//! Hom-Leibniz-Rinehart algebras.

use num_traits::Zero;

use crate::algebra::{
    combine, is_phi_derivation, validate_comm_algebra, validate_hom_leibniz, validate_module, AModule,
    CommAlgebra, HomLeibnizAlgebra,
};
use crate::error::{ensure_shape, Error, Result};
use crate::linalg::Matrix;
use crate::rational::{add_vec, sub_vec, unit_vec, Rational, Vector};
use crate::report::ValidationReport;

/// Hom-Leibniz-Rinehart algebra over `(A, φ)`.
///
/// Anchors are stored per basis element of `L` as `dim A × dim A` matrices
/// and extended linearly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HlrAlgebra {
    pub base: CommAlgebra,
    pub carrier: HomLeibnizAlgebra,
    pub module: AModule,
    pub anchor_l: Vec<Matrix>,
    pub anchor_r: Vec<Matrix>,
}

impl HlrAlgebra {
    pub fn new(
        base: CommAlgebra,
        carrier: HomLeibnizAlgebra,
        module: AModule,
        anchor_l: Vec<Matrix>,
        anchor_r: Vec<Matrix>,
    ) -> Result<Self> {
        let x = Self {
            base,
            carrier,
            module,
            anchor_l,
            anchor_r,
        };
        x.check_shapes()?;
        Ok(x)
    }

    /// Both anchors identically zero.
    pub fn with_zero_anchors(base: CommAlgebra, carrier: HomLeibnizAlgebra, module: AModule) -> Result<Self> {
        let (n, na) = (carrier.dim(), base.dim());
        Self::new(base, carrier, module, vec![Matrix::zeros(na, na); n], vec![Matrix::zeros(na, na); n])
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    pub fn check_shapes(&self) -> Result<()> {
        self.base.check_shapes()?;
        self.carrier.check_shapes()?;
        let (n, na) = (self.dim(), self.base_dim());
        self.module.check_shapes(&self.base, n)?;
        ensure_shape(self.anchor_l.len() == n && self.anchor_r.len() == n, || {
            format!(
                "anchor families have {} and {} entries, carrier has dimension {n}",
                self.anchor_l.len(),
                self.anchor_r.len()
            )
        })?;
        for (k, m) in self.anchor_l.iter().chain(&self.anchor_r).enumerate() {
            ensure_shape(m.rows() == na && m.cols() == na, || {
                format!("anchor matrix {} is {}x{}, expected {na}x{na}", k % n.max(1) + 1, m.rows(), m.cols())
            })?;
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.carrier.br(x, y)
    }

    pub fn alpha(&self) -> &Matrix {
        &self.carrier.alpha
    }

    pub fn phi(&self) -> &Matrix {
        &self.base.phi
    }

    pub fn act(&self, f: &[Rational], x: &[Rational]) -> Vector {
        self.module.act(f, x)
    }

    /// `ρ^L(x)` as a matrix on `A`.
    pub fn rho_l(&self, x: &[Rational]) -> Matrix {
        combine(&self.anchor_l, x)
    }

    pub fn rho_r(&self, x: &[Rational]) -> Matrix {
        combine(&self.anchor_r, x)
    }

    pub fn has_zero_anchors(&self) -> bool {
        self.anchor_l.iter().chain(&self.anchor_r).all(Matrix::is_zero)
    }
}

fn flat(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

/// Full axiom check: base algebra, carrier, module, anchor derivations and
/// H01 through H42.
pub fn validate_hlr(x: &HlrAlgebra) -> Result<ValidationReport> {
    x.check_shapes()?;
    let mut r = ValidationReport::new();
    r.merge_prefixed("base", validate_comm_algebra(&x.base)?);
    r.merge(validate_hom_leibniz(&x.carrier)?);
    r.merge(validate_module(&x.base, &x.module)?);
    r.merge(anchor_derivations(x)?);
    r.merge(hlr_axioms(x));
    Ok(r)
}

fn anchor_derivations(x: &HlrAlgebra) -> Result<ValidationReport> {
    let mut r = ValidationReport::new();
    for (tag, family) in [("DER-L", &x.anchor_l), ("DER-R", &x.anchor_r)] {
        for (i, m) in family.iter().enumerate() {
            for v in is_phi_derivation(m, &x.base)?.violations {
                let f = v.witness[0].index;
                let g = v.witness[1].index;
                r.push(tag, &[("x", i), ("f", f), ("g", g)], v.lhs, v.rhs);
            }
        }
    }
    Ok(r)
}

/// The compatibility conditions H01 through H42 on basis tuples.
pub fn hlr_axioms(x: &HlrAlgebra) -> ValidationReport {
    let (n, na) = (x.dim(), x.base_dim());
    let mut r = ValidationReport::new();
    let alpha = x.alpha();
    let phi = x.phi();
    let a: Vec<Vector> = alpha.columns();
    let ex = |i| unit_vec(n, i);
    let ef = |f| unit_vec(na, f);
    for f in 0..na {
        let pf = phi.column(f);
        let mul_pf = x.base.mul_operator(&pf);
        for i in 0..n {
            let fx = x.act(&ef(f), &ex(i));
            r.check("H01", &[("f", f), ("x", i)], alpha.apply(&fx), x.act(&pf, &a[i]));
            r.check("H41", &[("f", f), ("x", i)], flat(&x.rho_l(&fx)), flat(&(&mul_pf * &x.anchor_l[i])));
            r.check("H42", &[("f", f), ("x", i)], flat(&x.rho_r(&fx)), flat(&(&mul_pf * &x.anchor_r[i])));
            for j in 0..n {
                let w = [("f", f), ("x", i), ("y", j)];
                let bxy = x.carrier.bracket.basis_product(i, j);
                // [x, f y] = φ(f)[x,y] + ρL(x)(f) α(y)
                let lhs = x.bracket(&ex(i), &x.act(&ef(f), &ex(j)));
                let rhs = add_vec(&x.act(&pf, &bxy), &x.act(&x.anchor_l[i].column(f), &a[j]));
                r.check("H31", &w, lhs, rhs);
                // [f x, y] = φ(f)[x,y] - ρR(y)(f) α(x)
                let lhs = x.bracket(&fx, &ex(j));
                let rhs = sub_vec(&x.act(&pf, &bxy), &x.act(&x.anchor_r[j].column(f), &a[i]));
                r.check("H32", &w, lhs, rhs);
            }
        }
    }
    for i in 0..n {
        let rl = &x.anchor_l[i];
        let rr = &x.anchor_r[i];
        r.check("H11", &[("x", i)], flat(&(&x.rho_l(&a[i]) * phi)), flat(&(phi * rl)));
        r.check("H12", &[("x", i)], flat(&(&x.rho_r(&a[i]) * phi)), flat(&(phi * rr)));
        for j in 0..n {
            let w = [("x", i), ("y", j)];
            let bxy = x.carrier.bracket.basis_product(i, j);
            let (lax, lay) = (x.rho_l(&a[i]), x.rho_l(&a[j]));
            let ray = x.rho_r(&a[j]);
            let (ly, ry) = (&x.anchor_l[j], &x.anchor_r[j]);
            r.check("H21", &w, flat(&(&ray * rr)), flat(&-&(&ray * rl)));
            let lhs = &x.rho_l(&bxy) * phi;
            let rhs = &(&lax * ly) - &(&lay * rl);
            r.check("H22", &w, flat(&lhs), flat(&rhs));
            let lhs = &x.rho_r(&bxy) * phi;
            let rhs = &(&lax * ry) - &(&ray * rl);
            r.check("H23", &w, flat(&lhs), flat(&rhs));
        }
    }
    r
}

/// Derived identity `ρ^L([x,y] + [y,x]) ∘ φ = 0` on basis pairs.
pub fn anchor_symmetric_vanishing(x: &HlrAlgebra) -> ValidationReport {
    let n = x.dim();
    let mut r = ValidationReport::new();
    for i in 0..n {
        for j in 0..n {
            let s = add_vec(&x.carrier.bracket.basis_product(i, j), &x.carrier.bracket.basis_product(j, i));
            let m = &x.rho_l(&s) * x.phi();
            if !m.is_zero() {
                r.push("SYM-ANCHOR", &[("x", i), ("y", j)], flat(&m), vec![Rational::zero(); m.entries().len()]);
            }
        }
    }
    r
}

/// Checks that `phi` is a homomorphism of HLR algebras `src → dst` over a
/// common base: A-linear, commuting with the twists, bracket preserving and
/// compatible with both anchors.
pub fn validate_hlr_morphism(phi: &Matrix, src: &HlrAlgebra, dst: &HlrAlgebra) -> Result<ValidationReport> {
    src.check_shapes()?;
    dst.check_shapes()?;
    if src.base != dst.base {
        return Err(Error::BaseMismatch("source and target HLR algebras have different base algebras".into()));
    }
    let (n, m, na) = (src.dim(), dst.dim(), src.base_dim());
    ensure_shape(phi.rows() == m && phi.cols() == n, || {
        format!("map is {}x{}, expected {m}x{n}", phi.rows(), phi.cols())
    })?;
    let mut r = ValidationReport::new();
    let ph = phi.columns();
    for i in 0..n {
        let xi = unit_vec(n, i);
        r.check("HOM-ALPHA", &[("x", i)], phi.apply(&src.alpha().column(i)), dst.alpha().apply(&ph[i]));
        r.check("HOM-ANL", &[("x", i)], flat(&dst.rho_l(&ph[i])), flat(&src.anchor_l[i]));
        r.check("HOM-ANR", &[("x", i)], flat(&dst.rho_r(&ph[i])), flat(&src.anchor_r[i]));
        for f in 0..na {
            let fv = unit_vec(na, f);
            r.check("HOM-ALIN", &[("f", f), ("x", i)], phi.apply(&src.act(&fv, &xi)), dst.act(&fv, &ph[i]));
        }
        for j in 0..n {
            let lhs = phi.apply(&src.carrier.bracket.basis_product(i, j));
            r.check("HOM-BR", &[("x", i), ("y", j)], lhs, dst.bracket(&ph[i], &ph[j]));
        }
    }
    Ok(r)
}

fn require_classical(x: &HlrAlgebra, what: &str) -> Result<()> {
    if !x.phi().is_identity() {
        return Err(Error::Precondition(format!("{what}: phi must be the identity")));
    }
    if !x.alpha().is_identity() {
        return Err(Error::Precondition(format!("{what}: alpha must be the identity")));
    }
    Ok(())
}

/// Views a classical Leibniz-Rinehart algebra (identity twists) as a
/// Hom-Leibniz-Rinehart algebra.
pub fn from_leibniz_rinehart(classical: &HlrAlgebra) -> Result<HlrAlgebra> {
    classical.check_shapes()?;
    require_classical(classical, "from_leibniz_rinehart")?;
    let report = validate_hlr(classical)?;
    if !report.is_valid() {
        return Err(Error::Invalid {
            context: "from_leibniz_rinehart".into(),
            report,
        });
    }
    Ok(classical.clone())
}

/// Conditions for `(alpha, phi)` to be an endomorphism of a classical
/// algebra: `phi` an algebra map, `alpha` bracket preserving and
/// phi-semilinear, anchors intertwined.
pub fn twist_compatibility(classical: &HlrAlgebra, alpha: &Matrix, phi: &Matrix) -> Result<ValidationReport> {
    classical.check_shapes()?;
    let (n, na) = (classical.dim(), classical.base_dim());
    ensure_shape(alpha.rows() == n && alpha.cols() == n, || {
        format!("alpha is {}x{}, carrier has dimension {n}", alpha.rows(), alpha.cols())
    })?;
    ensure_shape(phi.rows() == na && phi.cols() == na, || {
        format!("phi is {}x{}, base has dimension {na}", phi.rows(), phi.cols())
    })?;
    let base = &classical.base;
    let mut r = ValidationReport::new();
    for f in 0..na {
        for g in 0..na {
            let lhs = phi.apply(&base.mul.basis_product(f, g));
            r.check("TW-PHI", &[("f", f), ("g", g)], lhs, base.product(&phi.column(f), &phi.column(g)));
        }
    }
    if let Some(u) = &base.unit {
        r.check("TW-UNIT", &[], phi.apply(u), u.clone());
    }
    let a = alpha.columns();
    for i in 0..n {
        for j in 0..n {
            let lhs = alpha.apply(&classical.carrier.bracket.basis_product(i, j));
            r.check("TW-BR", &[("x", i), ("y", j)], lhs, classical.bracket(&a[i], &a[j]));
        }
        for f in 0..na {
            let lhs = alpha.apply(&classical.act(&unit_vec(na, f), &unit_vec(n, i)));
            r.check("TW-SEMI", &[("f", f), ("x", i)], lhs, classical.act(&phi.column(f), &a[i]));
        }
        let lhs = &classical.rho_l(&a[i]) * phi;
        r.check("TW-ANL", &[("x", i)], flat(&lhs), flat(&(phi * &classical.anchor_l[i])));
        let lhs = &classical.rho_r(&a[i]) * phi;
        r.check("TW-ANR", &[("x", i)], flat(&lhs), flat(&(phi * &classical.anchor_r[i])));
    }
    Ok(r)
}

/// Twists a classical algebra along an endomorphism `(alpha, phi)`:
/// bracket `alpha ∘ [·,·]`, anchors `phi ∘ ρ`.
pub fn yau_twist(classical: &HlrAlgebra, alpha: &Matrix, phi: &Matrix) -> Result<HlrAlgebra> {
    classical.check_shapes()?;
    require_classical(classical, "yau_twist")?;
    let report = validate_hlr(classical)?;
    if !report.is_valid() {
        return Err(Error::Invalid {
            context: "yau_twist: classical input".into(),
            report,
        });
    }
    let compat = twist_compatibility(classical, alpha, phi)?;
    if alpha.inverse().is_none() {
        return Err(Error::Precondition("yau_twist: alpha is not invertible".into()));
    }
    if phi.inverse().is_none() {
        return Err(Error::Precondition("yau_twist: phi is not invertible".into()));
    }
    if !compat.is_valid() {
        return Err(Error::Invalid {
            context: "yau_twist: (alpha, phi) is not an endomorphism".into(),
            report: compat,
        });
    }
    let n = classical.dim();
    let bracket = classical
        .carrier
        .bracket
        .transform(alpha, &Matrix::identity(n), &Matrix::identity(n));
    let base = CommAlgebra {
        phi: phi.clone(),
        ..classical.base.clone()
    };
    Ok(HlrAlgebra {
        base,
        carrier: HomLeibnizAlgebra {
            bracket,
            alpha: alpha.clone(),
        },
        module: classical.module.clone(),
        anchor_l: classical.anchor_l.iter().map(|m| phi * m).collect(),
        anchor_r: classical.anchor_r.iter().map(|m| phi * m).collect(),
    })
}
