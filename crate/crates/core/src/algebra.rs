//! Base algebras, Hom-Leibniz algebras, modules and representations.

use num_traits::{One, Zero};

use crate::error::{ensure_shape, Result};
use crate::linalg::{Bilinear, Matrix};
use crate::rational::{add_vec, unit_vec, Rational, Vector};
use crate::report::ValidationReport;

/// Header line attached to every Hom-Leibniz A-algebra report.
pub const A_ALGEBRA_NOTE: &str =
    "assumption: Hom-Leibniz A-algebra bracket is phi-twisted bilinear ([f.m,m'] = phi(f)[m,m'] = [m,f.m'], alpha(f.m) = phi(f).alpha(m))";

/// Commutative associative algebra `A` with an endomorphism `φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommAlgebra {
    pub mul: Bilinear,
    pub phi: Matrix,
    /// Coordinates of the unit, when `A` is unital.
    pub unit: Option<Vector>,
}

impl CommAlgebra {
    pub fn new(mul: Bilinear, phi: Matrix, unit: Option<Vector>) -> Result<Self> {
        let a = Self { mul, phi, unit };
        a.check_shapes()?;
        Ok(a)
    }

    /// The ground field itself, with `u·u = u` and `φ = id`.
    pub fn ground_field() -> Self {
        let mut mul = Bilinear::zeros(1, 1, 1);
        mul.set(0, 0, 0, Rational::one());
        Self {
            mul,
            phi: Matrix::identity(1),
            unit: Some(vec![Rational::one()]),
        }
    }

    pub fn dim(&self) -> usize {
        self.mul.dim_out()
    }

    pub fn check_shapes(&self) -> Result<()> {
        let n = self.dim();
        ensure_shape(self.mul.dim_left() == n && self.mul.dim_right() == n, || {
            format!(
                "algebra product is {}x{}->{n}",
                self.mul.dim_left(),
                self.mul.dim_right()
            )
        })?;
        ensure_shape(self.phi.rows() == n && self.phi.cols() == n, || {
            format!("phi is {}x{}, algebra has dimension {n}", self.phi.rows(), self.phi.cols())
        })?;
        if let Some(u) = &self.unit {
            ensure_shape(u.len() == n, || format!("unit has length {}, expected {n}", u.len()))?;
        }
        Ok(())
    }

    pub fn product(&self, f: &[Rational], g: &[Rational]) -> Vector {
        self.mul.apply(f, g)
    }

    /// Matrix of multiplication by `f`.
    pub fn mul_operator(&self, f: &[Rational]) -> Matrix {
        self.mul.left_operator(f)
    }
}

pub fn validate_comm_algebra(a: &CommAlgebra) -> Result<ValidationReport> {
    a.check_shapes()?;
    let n = a.dim();
    let mut r = ValidationReport::new();
    let e = |i| unit_vec(n, i);
    for i in 0..n {
        for j in 0..n {
            r.check("COMM", &[("f", i), ("g", j)], a.mul.basis_product(i, j), a.mul.basis_product(j, i));
            r.check(
                "PHI-MUL",
                &[("f", i), ("g", j)],
                a.phi.apply(&a.mul.basis_product(i, j)),
                a.product(&a.phi.column(i), &a.phi.column(j)),
            );
            for k in 0..n {
                let lhs = a.product(&a.mul.basis_product(i, j), &e(k));
                let rhs = a.product(&e(i), &a.mul.basis_product(j, k));
                r.check("ASSOC", &[("f", i), ("g", j), ("h", k)], lhs, rhs);
            }
        }
    }
    if let Some(u) = &a.unit {
        for i in 0..n {
            r.check("UNIT", &[("f", i)], a.product(u, &e(i)), e(i));
        }
        r.check("PHI-UNIT", &[], a.phi.apply(u), u.clone());
    }
    Ok(r)
}

/// Checks `δ(fg) = φ(f)δ(g) + φ(g)δ(f)` on all basis pairs.
pub fn is_phi_derivation(delta: &Matrix, a: &CommAlgebra) -> Result<ValidationReport> {
    a.check_shapes()?;
    let n = a.dim();
    ensure_shape(delta.rows() == n && delta.cols() == n, || {
        format!("derivation is {}x{}, algebra has dimension {n}", delta.rows(), delta.cols())
    })?;
    let mut r = ValidationReport::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = delta.apply(&a.mul.basis_product(i, j));
            let rhs = add_vec(
                &a.product(&a.phi.column(i), &delta.column(j)),
                &a.product(&a.phi.column(j), &delta.column(i)),
            );
            r.check("DER", &[("f", i), ("g", j)], lhs, rhs);
        }
    }
    Ok(r)
}

/// Hom-Leibniz algebra `(L, [·,·], α)`, always left, multiplicative and
/// regular once validated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLeibnizAlgebra {
    pub bracket: Bilinear,
    pub alpha: Matrix,
}

impl HomLeibnizAlgebra {
    pub fn new(bracket: Bilinear, alpha: Matrix) -> Result<Self> {
        let l = Self { bracket, alpha };
        l.check_shapes()?;
        Ok(l)
    }

    pub fn abelian(dim: usize) -> Self {
        Self {
            bracket: Bilinear::zeros(dim, dim, dim),
            alpha: Matrix::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim_out()
    }

    pub fn check_shapes(&self) -> Result<()> {
        let n = self.dim();
        ensure_shape(self.bracket.dim_left() == n && self.bracket.dim_right() == n, || {
            format!(
                "bracket is {}x{}->{n}",
                self.bracket.dim_left(),
                self.bracket.dim_right()
            )
        })?;
        ensure_shape(self.alpha.rows() == n && self.alpha.cols() == n, || {
            format!("alpha is {}x{}, algebra has dimension {n}", self.alpha.rows(), self.alpha.cols())
        })
    }

    pub fn br(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.bracket.apply(x, y)
    }

    pub fn alpha_inverse(&self) -> Option<Matrix> {
        self.alpha.inverse()
    }
}

pub fn validate_hom_leibniz(l: &HomLeibnizAlgebra) -> Result<ValidationReport> {
    l.check_shapes()?;
    let n = l.dim();
    let mut r = ValidationReport::new();
    let a: Vec<Vector> = l.alpha.columns();
    for i in 0..n {
        for j in 0..n {
            let bij = l.bracket.basis_product(i, j);
            r.check("MULT", &[("x", i), ("y", j)], l.alpha.apply(&bij), l.br(&a[i], &a[j]));
            for k in 0..n {
                // [αx,[y,z]] = [[x,y],αz] + [αy,[x,z]]
                let lhs = l.br(&a[i], &l.bracket.basis_product(j, k));
                let rhs = add_vec(&l.br(&bij, &a[k]), &l.br(&a[j], &l.bracket.basis_product(i, k)));
                r.check("JAC", &[("x", i), ("y", j), ("z", k)], lhs, rhs);
            }
        }
    }
    if l.alpha_inverse().is_none() {
        r.fail("REG", &[]);
    }
    Ok(r)
}

/// Module over a commutative algebra, given by the action tensor
/// `A ⊗ V → V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AModule {
    pub action: Bilinear,
}

impl AModule {
    pub fn new(action: Bilinear) -> Self {
        Self { action }
    }

    /// Scalar action of the ground field viewed as `A = Q`.
    pub fn scalar(dim: usize) -> Self {
        let mut action = Bilinear::zeros(dim, 1, dim);
        for i in 0..dim {
            action.set(i, 0, i, Rational::one());
        }
        Self { action }
    }

    pub fn dim(&self) -> usize {
        self.action.dim_out()
    }

    pub fn algebra_dim(&self) -> usize {
        self.action.dim_left()
    }

    pub fn act(&self, f: &[Rational], v: &[Rational]) -> Vector {
        self.action.apply(f, v)
    }

    /// Matrix of `v ↦ f·v`.
    pub fn operator(&self, f: &[Rational]) -> Matrix {
        self.action.left_operator(f)
    }

    pub fn check_shapes(&self, a: &CommAlgebra, dim: usize) -> Result<()> {
        ensure_shape(
            self.action.dim_left() == a.dim() && self.action.dim_right() == dim && self.action.dim_out() == dim,
            || {
                format!(
                    "module action is {}x{}->{}, expected {}x{dim}->{dim}",
                    self.action.dim_left(),
                    self.action.dim_right(),
                    self.action.dim_out(),
                    a.dim()
                )
            },
        )
    }
}

pub fn validate_module(a: &CommAlgebra, m: &AModule) -> Result<ValidationReport> {
    a.check_shapes()?;
    let n = m.dim();
    m.check_shapes(a, n)?;
    let mut r = ValidationReport::new();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let fg = a.mul.basis_product(i, j);
            for k in 0..n {
                let lhs = m.act(&fg, &unit_vec(n, k));
                let rhs = m.act(&unit_vec(a.dim(), i), &m.action.basis_product(j, k));
                r.check("MOD-ASSOC", &[("f", i), ("g", j), ("v", k)], lhs, rhs);
            }
        }
    }
    if let Some(u) = &a.unit {
        for k in 0..n {
            r.check("MOD-UNIT", &[("v", k)], m.act(u, &unit_vec(n, k)), unit_vec(n, k));
        }
    }
    Ok(r)
}

/// Linear combination `Σ v_i · family[i]`.
pub fn combine(family: &[Matrix], v: &[Rational]) -> Matrix {
    assert_eq!(family.len(), v.len(), "operator family length mismatch");
    let (rows, cols) = family
        .first()
        .map_or((0, 0), |m| (m.rows(), m.cols()));
    let mut out = Matrix::zeros(rows, cols);
    for (m, c) in family.iter().zip(v) {
        if !c.is_zero() {
            out = &out + &m.scale(c);
        }
    }
    out
}

/// Representation `(V, α_V, ρ^L, ρ^R)` of a Hom-Leibniz algebra, stored per
/// basis element of `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub alpha_v: Matrix,
    pub rho_l: Vec<Matrix>,
    pub rho_r: Vec<Matrix>,
}

impl Representation {
    pub fn dim(&self) -> usize {
        self.alpha_v.rows()
    }

    pub fn left(&self, x: &[Rational]) -> Matrix {
        combine(&self.rho_l, x)
    }

    pub fn right(&self, x: &[Rational]) -> Matrix {
        combine(&self.rho_r, x)
    }

    /// Adjoint representation on the algebra itself.
    pub fn adjoint(l: &HomLeibnizAlgebra) -> Self {
        let n = l.dim();
        Self {
            alpha_v: l.alpha.clone(),
            rho_l: (0..n).map(|i| l.bracket.left_operator(&unit_vec(n, i))).collect(),
            rho_r: (0..n).map(|i| l.bracket.right_operator(&unit_vec(n, i))).collect(),
        }
    }
}

fn flat(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

pub fn validate_representation(l: &HomLeibnizAlgebra, rep: &Representation) -> Result<ValidationReport> {
    l.check_shapes()?;
    let n = l.dim();
    let v = rep.dim();
    ensure_shape(rep.alpha_v.is_square(), || "alpha_V must be square".into())?;
    ensure_shape(rep.rho_l.len() == n && rep.rho_r.len() == n, || {
        format!("anchor families have {} and {} entries, algebra has dimension {n}", rep.rho_l.len(), rep.rho_r.len())
    })?;
    for m in rep.rho_l.iter().chain(&rep.rho_r) {
        ensure_shape(m.rows() == v && m.cols() == v, || format!("representation matrix is {}x{}, expected {v}x{v}", m.rows(), m.cols()))?;
    }
    let mut r = ValidationReport::new();
    let av = &rep.alpha_v;
    let a = l.alpha.columns();
    for i in 0..n {
        let xi = unit_vec(n, i);
        r.check("R1", &[("x", i)], flat(&(&rep.left(&a[i]) * av)), flat(&(av * &rep.left(&xi))));
        r.check("R2", &[("x", i)], flat(&(&rep.right(&a[i]) * av)), flat(&(av * &rep.right(&xi))));
        for j in 0..n {
            let yj = unit_vec(n, j);
            let bxy = l.bracket.basis_product(i, j);
            let w = [("x", i), ("y", j)];
            let lhs = &rep.left(&bxy) * av;
            let rhs = &(&rep.left(&a[i]) * &rep.left(&yj)) - &(&rep.left(&a[j]) * &rep.left(&xi));
            r.check("R3", &w, flat(&lhs), flat(&rhs));
            let lhs = &rep.right(&bxy) * av;
            let rhs = &(&rep.left(&a[i]) * &rep.right(&yj)) - &(&rep.right(&a[j]) * &rep.left(&xi));
            r.check("R4", &w, flat(&lhs), flat(&rhs));
            let lhs = &rep.right(&a[j]) * &rep.right(&xi);
            let rhs = -&(&rep.right(&a[j]) * &rep.left(&xi));
            r.check("R5", &w, flat(&lhs), flat(&rhs));
        }
    }
    Ok(r)
}

/// Hom-Leibniz algebra that is also a module over `(A, φ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLeibnizAAlgebra {
    pub base: CommAlgebra,
    pub algebra: HomLeibnizAlgebra,
    pub module: AModule,
}

impl HomLeibnizAAlgebra {
    pub fn new(base: CommAlgebra, algebra: HomLeibnizAlgebra, module: AModule) -> Result<Self> {
        let m = Self { base, algebra, module };
        m.check_shapes()?;
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn check_shapes(&self) -> Result<()> {
        self.base.check_shapes()?;
        self.algebra.check_shapes()?;
        self.module.check_shapes(&self.base, self.algebra.dim())
    }
}

pub fn validate_hom_leibniz_a_algebra(m: &HomLeibnizAAlgebra) -> Result<ValidationReport> {
    m.check_shapes()?;
    let mut r = ValidationReport::new();
    r.note(A_ALGEBRA_NOTE);
    r.merge_prefixed("base", validate_comm_algebra(&m.base)?);
    r.merge(validate_hom_leibniz(&m.algebra)?);
    r.merge(validate_module(&m.base, &m.module)?);
    r.merge(a_algebra_compatibility(m));
    Ok(r)
}

/// The three φ-compatibility laws between bracket, twist and A-action.
pub(crate) fn a_algebra_compatibility(m: &HomLeibnizAAlgebra) -> ValidationReport {
    let mut r = ValidationReport::new();
    let (na, n) = (m.base.dim(), m.dim());
    let l = &m.algebra;
    for f in 0..na {
        let fv = unit_vec(na, f);
        let pf = m.base.phi.column(f);
        for i in 0..n {
            let xi = unit_vec(n, i);
            let fx = m.module.act(&fv, &xi);
            r.check(
                "AC1",
                &[("f", f), ("m", i)],
                l.alpha.apply(&fx),
                m.module.act(&pf, &l.alpha.column(i)),
            );
            for j in 0..n {
                let xj = unit_vec(n, j);
                let b = l.bracket.basis_product(i, j);
                let w = [("f", f), ("m", i), ("m'", j)];
                r.check("AC2", &w, l.br(&fx, &xj), m.module.act(&pf, &b));
                r.check("AC3", &w, l.br(&xi, &m.module.act(&fv, &xj)), m.module.act(&pf, &b));
            }
        }
    }
    r
}

/// Derived identity of left Hom-Leibniz algebras:
/// `[[x,y] + [y,x], α(z)] = 0`.
pub fn symmetric_bracket_annihilates(l: &HomLeibnizAlgebra) -> ValidationReport {
    let n = l.dim();
    let mut r = ValidationReport::new();
    for i in 0..n {
        for j in 0..n {
            let s = add_vec(&l.bracket.basis_product(i, j), &l.bracket.basis_product(j, i));
            for k in 0..n {
                let v = l.br(&s, &l.alpha.column(k));
                r.check("SYM-ANN", &[("x", i), ("y", j), ("z", k)], v, vec![Rational::zero(); n]);
            }
        }
    }
    r
}
