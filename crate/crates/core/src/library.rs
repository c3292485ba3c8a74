//! Built-in example instances.

use crate::action::LrsAction;
use crate::algebra::{AModule, CommAlgebra, HomLeibnizAAlgebra, HomLeibnizAlgebra};
use crate::crossed::{cm_morphism_to_cat1, cm_to_cat1, Cat1Morphism, CmMorphism, CrossedModule};
use crate::document::{AlgebraDocument, MorphismDocument};
use crate::linalg::{Bilinear, Matrix};
use crate::rational::{int, Rational};
use crate::rinehart::{yau_twist, HlrAlgebra};

fn tensor(out: usize, left: usize, right: usize, entries: &[(usize, usize, usize, i64)]) -> Bilinear {
    let mut b = Bilinear::zeros(out, left, right);
    for &(k, i, j, c) in entries {
        b.set(k, i, j, int(c));
    }
    b
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

/// `Q` with `u·u = u`, `φ = id`.
pub fn q_trivial() -> CommAlgebra {
    CommAlgebra::ground_field()
}

/// `Q × Q` with pointwise product and the coordinate swap.
pub fn q2_swap() -> CommAlgebra {
    CommAlgebra {
        mul: tensor(2, 2, 2, &[(0, 0, 0, 1), (1, 1, 1, 1)]),
        phi: Matrix::from_ints(&[&[0, 1], &[1, 0]]),
        unit: Some(ints(&[1, 1])),
    }
}

/// `Q[x]/(x²)` on the basis `{1, x}`, `φ = id`.
pub fn dual_numbers() -> CommAlgebra {
    CommAlgebra {
        mul: tensor(2, 2, 2, &[(0, 0, 0, 1), (1, 0, 1, 1), (1, 1, 0, 1)]),
        phi: Matrix::identity(2),
        unit: Some(ints(&[1, 0])),
    }
}

/// `Q[x,y]/(x,y)²` on the basis `{1, x, y}` with the given `φ`.
fn square_zero_plane(phi: Matrix) -> CommAlgebra {
    CommAlgebra {
        mul: tensor(
            3,
            3,
            3,
            &[(0, 0, 0, 1), (1, 0, 1, 1), (1, 1, 0, 1), (2, 0, 2, 1), (2, 2, 0, 1)],
        ),
        phi,
        unit: Some(ints(&[1, 0, 0])),
    }
}

pub fn abelian_dim2() -> HomLeibnizAlgebra {
    HomLeibnizAlgebra::abelian(2)
}

/// `[e2, e2] = e1`, `α = id`.
pub fn leibniz_dim2() -> HomLeibnizAlgebra {
    HomLeibnizAlgebra {
        bracket: tensor(2, 2, 2, &[(0, 1, 1, 1)]),
        alpha: Matrix::identity(2),
    }
}

fn over_q(l: HomLeibnizAlgebra) -> HlrAlgebra {
    let n = l.dim();
    HlrAlgebra::with_zero_anchors(q_trivial(), l, AModule::scalar(n)).expect("library shapes")
}

fn a_algebra_over_q(l: HomLeibnizAlgebra) -> HomLeibnizAAlgebra {
    let n = l.dim();
    HomLeibnizAAlgebra {
        base: q_trivial(),
        algebra: l,
        module: AModule::scalar(n),
    }
}

/// `leibniz-dim2` as an HLR algebra over `Q` with zero anchors.
pub fn leibniz_dim2_hlr() -> HlrAlgebra {
    over_q(leibniz_dim2())
}

/// Twist of `leibniz-dim2` by `α = diag(4, 2)`: `[e2, e2] = 4 e1`.
pub fn yau_twisted_dim2() -> HlrAlgebra {
    yau_twist(&leibniz_dim2_hlr(), &Matrix::from_ints(&[&[4, 0], &[0, 2]]), &Matrix::identity(1))
        .expect("library twist is an endomorphism")
}

/// Rank-one module `A·d` over `A = Q[x]/(x²)` on the basis `e1 = d`,
/// `e2 = x d`; `[e1, e2] = e2`, left anchor of `e1` the Euler derivation
/// `1 ↦ 0, x ↦ x`, right anchor zero.
pub fn dxmod_rank1() -> HlrAlgebra {
    let a = dual_numbers();
    let module = AModule::new(tensor(2, 2, 2, &[(0, 0, 0, 1), (1, 0, 1, 1), (1, 1, 0, 1)]));
    let carrier = HomLeibnizAlgebra {
        bracket: tensor(2, 2, 2, &[(1, 0, 1, 1)]),
        alpha: Matrix::identity(2),
    };
    let euler = Matrix::from_ints(&[&[0, 0], &[0, 1]]);
    HlrAlgebra {
        base: a,
        carrier,
        module,
        anchor_l: vec![euler, Matrix::zeros(2, 2)],
        anchor_r: vec![Matrix::zeros(2, 2); 2],
    }
}

/// Rank-one module `A·d` over `A = Q[x,y]/(x,y)²` on the basis `d, x d, y d`
/// with Heisenberg bracket `[e1, e2] = e3 = -[e2, e1]` and both anchors of
/// `e1` equal to the derivation `x ↦ y`.
pub fn nilmod_rank1() -> HlrAlgebra {
    let a = square_zero_plane(Matrix::identity(3));
    // f·(g d) = (f g) d, same table as the product of A
    let module = AModule::new(a.mul.clone());
    let carrier = HomLeibnizAlgebra {
        bracket: tensor(3, 3, 3, &[(2, 0, 1, 1), (2, 1, 0, -1)]),
        alpha: Matrix::identity(3),
    };
    let n = Matrix::from_ints(&[&[0, 0, 0], &[0, 0, 0], &[0, 1, 0]]);
    let z = Matrix::zeros(3, 3);
    HlrAlgebra {
        base: a,
        carrier,
        module,
        anchor_l: vec![n.clone(), z.clone(), z.clone()],
        anchor_r: vec![n, z.clone(), z],
    }
}

/// Twist of `nilmod-rank1` by `φ = diag(1, 2, 4)`, `α = diag(2, 4, 8)`.
pub fn nilmod_twisted() -> HlrAlgebra {
    yau_twist(
        &nilmod_rank1(),
        &Matrix::from_ints(&[&[2, 0, 0], &[0, 4, 0], &[0, 0, 8]]),
        &Matrix::from_ints(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 4]]),
    )
    .expect("library twist is an endomorphism")
}

/// Restriction of `L` to an ideal spanned by a subset of basis vectors,
/// acting by the ambient bracket, with `∂` the inclusion.
fn ideal_crossed_module(l: &HlrAlgebra, idx: &[usize]) -> CrossedModule {
    let (n, k, na) = (l.dim(), idx.len(), l.base_dim());
    let pos = |g: usize| idx.iter().position(|&j| j == g);
    let restrict = |v: Vec<Rational>| -> Vec<Rational> {
        for (g, c) in v.iter().enumerate() {
            assert!(pos(g).is_some() || num_traits::Zero::is_zero(c), "library ideal is not closed");
        }
        idx.iter().map(|&g| v[g].clone()).collect()
    };
    let e = |g: usize| crate::rational::unit_vec(n, g);
    let bracket = Bilinear::from_fn(k, k, k, |a, b| restrict(l.bracket(&e(idx[a]), &e(idx[b]))));
    let alpha = Matrix::from_columns(k, &idx.iter().map(|&g| restrict(l.alpha().column(g))).collect::<Vec<_>>());
    let action = Bilinear::from_fn(k, na, k, |f, a| {
        restrict(l.act(&crate::rational::unit_vec(na, f), &e(idx[a])))
    });
    let left = Bilinear::from_fn(k, n, k, |x, a| restrict(l.bracket(&e(x), &e(idx[a]))));
    let right = Bilinear::from_fn(k, k, n, |a, x| restrict(l.bracket(&e(idx[a]), &e(x))));
    let boundary = Matrix::from_columns(n, &idx.iter().map(|&g| e(g)).collect::<Vec<_>>());
    CrossedModule {
        action: LrsAction {
            actor: l.clone(),
            target: HomLeibnizAAlgebra {
                base: l.base.clone(),
                algebra: HomLeibnizAlgebra { bracket, alpha },
                module: AModule::new(action),
            },
            left,
            right,
        },
        boundary,
    }
}

/// Abelian `L = Q` acting trivially on abelian `M = Q`, `∂ = 0`.
pub fn crossed_trivial() -> CrossedModule {
    let l = over_q(HomLeibnizAlgebra::abelian(1));
    let m = a_algebra_over_q(HomLeibnizAlgebra::abelian(1));
    CrossedModule {
        action: LrsAction::trivial(l, m),
        boundary: Matrix::zeros(1, 1),
    }
}

/// `span{e1} ⊆ leibniz-dim2` with `∂` the inclusion.
pub fn crossed_ideal() -> CrossedModule {
    ideal_crossed_module(&leibniz_dim2_hlr(), &[0])
}

/// `span{e1} ⊆ yau-twisted-dim2`, `α_M = 4`.
pub fn crossed_ideal_twisted() -> CrossedModule {
    ideal_crossed_module(&yau_twisted_dim2(), &[0])
}

/// `leibniz-dim2` over itself with `∂ = id`.
pub fn crossed_identity() -> CrossedModule {
    ideal_crossed_module(&leibniz_dim2_hlr(), &[0, 1])
}

/// `span{x d} ⊆ dxmod-rank1`, an ideal on which the anchors vanish.
pub fn crossed_dxmod_ideal() -> CrossedModule {
    ideal_crossed_module(&dxmod_rank1(), &[1])
}

/// Centre `span{y d}` of `nilmod-rank1`.
pub fn crossed_nilmod_center() -> CrossedModule {
    ideal_crossed_module(&nilmod_rank1(), &[2])
}

/// Centre of `nilmod-twisted`, `α_M = 8`.
pub fn crossed_nilmod_twisted() -> CrossedModule {
    ideal_crossed_module(&nilmod_twisted(), &[2])
}

/// Two-dimensional abelian `M` with `α_M = diag(1, 2)`, trivial action of
/// `abelian-dim2`, `∂ = 0`.
pub fn crossed_diag12() -> CrossedModule {
    let l = over_q(HomLeibnizAlgebra::abelian(2));
    let m = a_algebra_over_q(HomLeibnizAlgebra {
        bracket: Bilinear::zeros(2, 2, 2),
        alpha: Matrix::from_ints(&[&[1, 0], &[0, 2]]),
    });
    CrossedModule {
        action: LrsAction::trivial(l, m),
        boundary: Matrix::zeros(2, 2),
    }
}

pub fn action_trivial() -> LrsAction {
    crossed_trivial().action
}

pub fn action_ideal() -> LrsAction {
    crossed_ideal().action
}

pub fn action_dxmod_ideal() -> LrsAction {
    crossed_dxmod_ideal().action
}

pub fn cat1_from_crossed_ideal() -> crate::crossed::Cat1Algebra {
    cm_to_cat1(&crossed_ideal()).expect("crossed-ideal is valid")
}

/// `(α_M, α_L)` on the twisted ideal crossed module.
pub fn morphism_twist_pair() -> MorphismDocument {
    let cm = crossed_ideal_twisted();
    MorphismDocument::Crossed {
        map: CmMorphism {
            phi_map: cm.target().algebra.alpha.clone(),
            psi_map: cm.actor().alpha().clone(),
        },
        source: cm.clone(),
        target: cm,
    }
}

pub fn morphism_identity_crossed_ideal() -> MorphismDocument {
    let cm = crossed_ideal();
    MorphismDocument::Crossed {
        map: CmMorphism::identity(&cm),
        source: cm.clone(),
        target: cm,
    }
}

/// Inclusion `span{e1} → leibniz-dim2` of crossed L-modules.
pub fn morphism_ideal_inclusion() -> MorphismDocument {
    MorphismDocument::CrossedL {
        lambda: Matrix::from_ints(&[&[1], &[0]]),
        source: crossed_ideal(),
        target: crossed_identity(),
    }
}

/// Image of the identity crossed module morphism under the cat¹ functor.
pub fn morphism_cat1_identity() -> MorphismDocument {
    let cm = crossed_ideal();
    let c = cat1_from_crossed_ideal();
    let u: Cat1Morphism = cm_morphism_to_cat1(&CmMorphism::identity(&cm));
    MorphismDocument::Cat1 {
        map: u,
        source: c.clone(),
        target: c,
    }
}

/// Every shipped instance, in a fixed order.
pub fn names() -> &'static [&'static str] {
    &[
        "q-trivial",
        "q2-swap",
        "dual-numbers",
        "abelian-dim2",
        "leibniz-dim2",
        "leibniz-dim2-hlr",
        "yau-twisted-dim2",
        "dxmod-rank1",
        "nilmod-rank1",
        "nilmod-twisted",
        "action-trivial",
        "action-ideal",
        "action-dxmod-ideal",
        "crossed-trivial",
        "crossed-ideal",
        "crossed-ideal-twisted",
        "crossed-identity",
        "crossed-dxmod-ideal",
        "crossed-nilmod-center",
        "crossed-nilmod-twisted",
        "crossed-diag12",
        "cat1-from-crossed-ideal",
        "morphism-identity-crossed-ideal",
        "morphism-twist-pair",
        "morphism-ideal-inclusion",
        "morphism-cat1-identity",
    ]
}

pub fn get(name: &str) -> Option<AlgebraDocument> {
    use AlgebraDocument as D;
    Some(match name {
        "q-trivial" => D::CommAlgebra(q_trivial()),
        "q2-swap" => D::CommAlgebra(q2_swap()),
        "dual-numbers" => D::CommAlgebra(dual_numbers()),
        "abelian-dim2" => D::HomLeibniz(abelian_dim2()),
        "leibniz-dim2" => D::HomLeibniz(leibniz_dim2()),
        "leibniz-dim2-hlr" => D::Hlr(leibniz_dim2_hlr()),
        "yau-twisted-dim2" => D::Hlr(yau_twisted_dim2()),
        "dxmod-rank1" => D::Hlr(dxmod_rank1()),
        "nilmod-rank1" => D::Hlr(nilmod_rank1()),
        "nilmod-twisted" => D::Hlr(nilmod_twisted()),
        "action-trivial" => D::Action(action_trivial()),
        "action-ideal" => D::Action(action_ideal()),
        "action-dxmod-ideal" => D::Action(action_dxmod_ideal()),
        "crossed-trivial" => D::CrossedModule(crossed_trivial()),
        "crossed-ideal" => D::CrossedModule(crossed_ideal()),
        "crossed-ideal-twisted" => D::CrossedModule(crossed_ideal_twisted()),
        "crossed-identity" => D::CrossedModule(crossed_identity()),
        "crossed-dxmod-ideal" => D::CrossedModule(crossed_dxmod_ideal()),
        "crossed-nilmod-center" => D::CrossedModule(crossed_nilmod_center()),
        "crossed-nilmod-twisted" => D::CrossedModule(crossed_nilmod_twisted()),
        "crossed-diag12" => D::CrossedModule(crossed_diag12()),
        "cat1-from-crossed-ideal" => D::Cat1(cat1_from_crossed_ideal()),
        "morphism-identity-crossed-ideal" => D::Morphism(morphism_identity_crossed_ideal()),
        "morphism-twist-pair" => D::Morphism(morphism_twist_pair()),
        "morphism-ideal-inclusion" => D::Morphism(morphism_ideal_inclusion()),
        "morphism-cat1-identity" => D::Morphism(morphism_cat1_identity()),
        _ => return None,
    })
}

/// All shipped instances with their names.
pub fn all() -> Vec<(&'static str, AlgebraDocument)> {
    names()
        .iter()
        .map(|&n| (n, get(n).expect("every listed name resolves")))
        .collect()
}

/// Every shipped crossed module.
pub fn crossed_modules() -> Vec<(&'static str, CrossedModule)> {
    all()
        .into_iter()
        .filter_map(|(n, d)| match d {
            AlgebraDocument::CrossedModule(cm) => Some((n, cm)),
            _ => None,
        })
        .collect()
}

/// Every shipped HLR algebra.
pub fn hlr_algebras() -> Vec<(&'static str, HlrAlgebra)> {
    all()
        .into_iter()
        .filter_map(|(n, d)| match d {
            AlgebraDocument::Hlr(x) => Some((n, x)),
            _ => None,
        })
        .collect()
}

/// Every shipped Hom-Leibniz algebra, including carriers of HLR algebras
/// and targets of crossed modules.
pub fn hom_leibniz_algebras() -> Vec<(String, HomLeibnizAlgebra)> {
    let mut out = Vec::new();
    for (n, d) in all() {
        match d {
            AlgebraDocument::HomLeibniz(l) => out.push((n.to_string(), l)),
            AlgebraDocument::Hlr(x) => out.push((n.to_string(), x.carrier)),
            AlgebraDocument::CrossedModule(cm) => out.push((format!("{n}/target"), cm.action.target.algebra)),
            _ => {}
        }
    }
    out
}
