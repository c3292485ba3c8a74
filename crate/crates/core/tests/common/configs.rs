//! Inputs and test cones for the limit and colimit constructions.

use hlr_core::action::LrsAction;
use hlr_core::algebra::{AModule, HomLeibnizAAlgebra, HomLeibnizAlgebra};
use hlr_core::category::{terminal, terminal_morphism, CmlMorphism, Construction, CrossedLModule};
use hlr_core::crossed::CrossedModule;
use hlr_core::library;
use hlr_core::rational::int;
use hlr_core::rinehart::HlrAlgebra;
use hlr_core::{Bilinear, Matrix};

pub fn obj(cm: CrossedModule) -> CrossedLModule {
    CrossedLModule::new(cm).expect("configuration object is a crossed module")
}

pub fn mor(m: Matrix) -> CmlMorphism {
    CmlMorphism::new(m)
}

fn augmentation_action(na: usize, k: usize) -> AModule {
    let mut action = Bilinear::zeros(k, na, k);
    for i in 0..k {
        action.set(i, 0, i, int(1));
    }
    AModule::new(action)
}

/// Abelian `M` with twist `alpha`, trivial action, `∂ = 0`, on which the
/// base algebra acts through its first coordinate (the unit in every
/// library base).
pub fn trivial_module(base: &HlrAlgebra, alpha: Matrix) -> CrossedLModule {
    let k = alpha.rows();
    let target = HomLeibnizAAlgebra {
        base: base.base.clone(),
        algebra: HomLeibnizAlgebra {
            bracket: Bilinear::zeros(k, k, k),
            alpha,
        },
        module: augmentation_action(base.base_dim(), k),
    };
    obj(CrossedModule {
        action: LrsAction::trivial(base.clone(), target),
        boundary: Matrix::zeros(base.dim(), k),
    })
}

/// `X ⊕ T` for a `k`-dimensional trivial module `T`, with the block
/// inclusion of `X` and projection onto `X`.
pub fn plus_trivial(x: &CrossedLModule, k: usize) -> (CrossedLModule, Matrix, Matrix) {
    let cm = &x.cm;
    let (n, nl, na) = (x.dim(), cm.l_dim(), x.base().base_dim());
    let m = cm.target();
    let d = n + k;
    let mut bracket = Bilinear::zeros(d, d, d);
    let mut action = Bilinear::zeros(d, na, d);
    let mut left = Bilinear::zeros(d, nl, d);
    let mut right = Bilinear::zeros(d, d, nl);
    for o in 0..n {
        for i in 0..n {
            for j in 0..n {
                bracket.set(o, i, j, m.algebra.bracket.get(o, i, j).clone());
            }
            for f in 0..na {
                action.set(o, f, i, m.module.action.get(o, f, i).clone());
            }
            for y in 0..nl {
                left.set(o, y, i, cm.action.left.get(o, y, i).clone());
                right.set(o, i, y, cm.action.right.get(o, i, y).clone());
            }
        }
    }
    for i in n..d {
        action.set(i, 0, i, int(1));
    }
    let target = HomLeibnizAAlgebra {
        base: m.base.clone(),
        algebra: HomLeibnizAlgebra {
            bracket,
            alpha: m.algebra.alpha.block_diag(&Matrix::identity(k)),
        },
        module: AModule::new(action),
    };
    let sum = obj(CrossedModule {
        action: LrsAction::new(x.base().clone(), target, left, right).unwrap(),
        boundary: x.boundary().hstack(&Matrix::zeros(nl, k)),
    });
    let incl = Matrix::identity(n).vstack(&Matrix::zeros(k, n));
    let proj = Matrix::identity(n).hstack(&Matrix::zeros(n, k));
    (sum, incl, proj)
}

pub fn l1() -> HlrAlgebra {
    library::leibniz_dim2_hlr()
}

pub fn l2() -> HlrAlgebra {
    library::crossed_diag12().action.actor
}

pub fn l3() -> HlrAlgebra {
    library::dxmod_rank1()
}

pub fn ideal() -> CrossedLModule {
    obj(library::crossed_ideal())
}

pub fn identity_module() -> CrossedLModule {
    obj(library::crossed_identity())
}

pub fn diag12() -> CrossedLModule {
    obj(library::crossed_diag12())
}

pub fn dxmod_ideal() -> CrossedLModule {
    obj(library::crossed_dxmod_ideal())
}

fn diag12_alpha() -> Matrix {
    Matrix::from_ints(&[&[1, 0], &[0, 2]])
}

fn inclusion() -> CmlMorphism {
    mor(Matrix::from_ints(&[&[1], &[0]]))
}

/// Two parallel maps `f, g: X → Y`.
pub struct Parallel {
    pub name: &'static str,
    pub x: CrossedLModule,
    pub y: CrossedLModule,
    pub f: CmlMorphism,
    pub g: CmlMorphism,
}

/// `f: X → Z ← Y: g`.
pub struct Cospan {
    pub name: &'static str,
    pub x: CrossedLModule,
    pub y: CrossedLModule,
    pub z: CrossedLModule,
    pub f: CmlMorphism,
    pub g: CmlMorphism,
}

pub struct Pair {
    pub name: &'static str,
    pub x: CrossedLModule,
    pub y: CrossedLModule,
}

/// `f: E → X`, `g: E → Y`.
pub struct Span {
    pub name: &'static str,
    pub e: CrossedLModule,
    pub x: CrossedLModule,
    pub y: CrossedLModule,
    pub f: CmlMorphism,
    pub g: CmlMorphism,
}

pub fn equalizer_configs() -> Vec<Parallel> {
    let t2 = trivial_module(&l2(), Matrix::identity(2));
    vec![
        Parallel {
            name: "diag12 (id, alpha)",
            x: diag12(),
            y: diag12(),
            f: mor(Matrix::identity(2)),
            g: mor(diag12_alpha()),
        },
        Parallel {
            name: "ideal into identity (incl, incl)",
            x: ideal(),
            y: identity_module(),
            f: inclusion(),
            g: inclusion(),
        },
        Parallel {
            name: "trivial (id, 0)",
            x: t2.clone(),
            y: t2,
            f: mor(Matrix::identity(2)),
            g: mor(Matrix::zeros(2, 2)),
        },
        Parallel {
            name: "dxmod ideal (id, id)",
            x: dxmod_ideal(),
            y: dxmod_ideal(),
            f: mor(Matrix::identity(1)),
            g: mor(Matrix::identity(1)),
        },
    ]
}

pub fn pullback_configs() -> Vec<Cospan> {
    let t1 = trivial_module(&l2(), Matrix::identity(1));
    vec![
        Cospan {
            name: "ideal over identity (incl, id)",
            x: ideal(),
            y: identity_module(),
            z: identity_module(),
            f: inclusion(),
            g: mor(Matrix::identity(2)),
        },
        Cospan {
            name: "diag12 (id, alpha)",
            x: diag12(),
            y: diag12(),
            z: diag12(),
            f: mor(Matrix::identity(2)),
            g: mor(diag12_alpha()),
        },
        Cospan {
            name: "trivial into zero",
            x: t1.clone(),
            y: t1,
            z: CrossedLModule::zero(&l2()),
            f: mor(Matrix::zeros(0, 1)),
            g: mor(Matrix::zeros(0, 1)),
        },
        Cospan {
            name: "ideal twice over identity",
            x: ideal(),
            y: ideal(),
            z: identity_module(),
            f: inclusion(),
            g: inclusion(),
        },
    ]
}

pub fn product_configs() -> Vec<Pair> {
    vec![
        Pair {
            name: "ideal x ideal",
            x: ideal(),
            y: ideal(),
        },
        Pair {
            name: "zero x ideal",
            x: CrossedLModule::zero(&l1()),
            y: ideal(),
        },
        Pair {
            name: "diag12 x diag12",
            x: diag12(),
            y: diag12(),
        },
        Pair {
            name: "dxmod ideal x dxmod ideal",
            x: dxmod_ideal(),
            y: dxmod_ideal(),
        },
    ]
}

pub fn coequalizer_configs() -> Vec<Parallel> {
    let t2 = trivial_module(&l2(), Matrix::identity(2));
    vec![
        Parallel {
            name: "diag12 (id, alpha)",
            x: diag12(),
            y: diag12(),
            f: mor(Matrix::identity(2)),
            g: mor(diag12_alpha()),
        },
        Parallel {
            name: "trivial (id, 0)",
            x: t2.clone(),
            y: t2,
            f: mor(Matrix::identity(2)),
            g: mor(Matrix::zeros(2, 2)),
        },
        Parallel {
            name: "ideal into identity (incl, incl)",
            x: ideal(),
            y: identity_module(),
            f: inclusion(),
            g: inclusion(),
        },
        Parallel {
            name: "dxmod ideal (id, id)",
            x: dxmod_ideal(),
            y: dxmod_ideal(),
            f: mor(Matrix::identity(1)),
            g: mor(Matrix::identity(1)),
        },
    ]
}

/// Coproduct inputs on which the printed Peiffer generators have zero
/// boundary.
pub fn coproduct_configs() -> Vec<Pair> {
    vec![
        Pair {
            name: "ideal + ideal",
            x: ideal(),
            y: ideal(),
        },
        Pair {
            name: "diag12 + diag12",
            x: diag12(),
            y: diag12(),
        },
        Pair {
            name: "ideal + zero",
            x: ideal(),
            y: CrossedLModule::zero(&l1()),
        },
        Pair {
            name: "ideal + identity",
            x: ideal(),
            y: identity_module(),
        },
        Pair {
            name: "dxmod ideal + dxmod ideal",
            x: dxmod_ideal(),
            y: dxmod_ideal(),
        },
    ]
}

pub fn pushout_configs() -> Vec<Span> {
    let t1 = trivial_module(&l2(), Matrix::identity(1));
    vec![
        Span {
            name: "ideal (id, id)",
            e: ideal(),
            x: ideal(),
            y: ideal(),
            f: mor(Matrix::identity(1)),
            g: mor(Matrix::identity(1)),
        },
        Span {
            name: "ideal into ideal and identity",
            e: ideal(),
            x: ideal(),
            y: identity_module(),
            f: mor(Matrix::identity(1)),
            g: inclusion(),
        },
        Span {
            name: "zero into diag12 twice",
            e: CrossedLModule::zero(&l2()),
            x: diag12(),
            y: diag12(),
            f: mor(Matrix::zeros(2, 0)),
            g: mor(Matrix::zeros(2, 0)),
        },
        Span {
            name: "trivial (id, id)",
            e: t1.clone(),
            x: t1.clone(),
            y: t1,
            f: mor(Matrix::identity(1)),
            g: mor(Matrix::identity(1)),
        },
    ]
}

/// Bases with the crossed L-modules used as apexes of terminal cones.
pub fn terminal_configs() -> Vec<(&'static str, HlrAlgebra, Vec<CrossedLModule>)> {
    vec![
        (
            "leibniz-dim2",
            l1(),
            vec![ideal(), identity_module(), CrossedLModule::zero(&l1()), trivial_module(&l1(), Matrix::identity(1))],
        ),
        (
            "abelian-dim2",
            l2(),
            vec![diag12(), CrossedLModule::zero(&l2()), trivial_module(&l2(), Matrix::identity(2))],
        ),
        (
            "dxmod-rank1",
            l3(),
            vec![dxmod_ideal(), CrossedLModule::zero(&l3()), trivial_module(&l3(), Matrix::identity(1))],
        ),
    ]
}

/// A test cone: apex, maps, and the mediating morphism it must produce.
pub struct Cone {
    pub name: &'static str,
    pub apex: CrossedLModule,
    pub maps: Vec<CmlMorphism>,
    pub expected: Matrix,
}

/// Zero cone from the zero object, the construction's own cone, and its
/// cone precomposed with the projection `X ⊕ T → X`.
pub fn limit_cones(c: &Construction) -> Vec<Cone> {
    let base = c.object.base();
    let n = c.object.dim();
    let (sum, _, proj) = plus_trivial(&c.object, 1);
    vec![
        Cone {
            name: "zero",
            apex: CrossedLModule::zero(base),
            maps: c.legs.iter().map(|l| mor(Matrix::zeros(l.lambda.rows(), 0))).collect(),
            expected: Matrix::zeros(n, 0),
        },
        Cone {
            name: "identity",
            apex: c.object.clone(),
            maps: c.legs.clone(),
            expected: Matrix::identity(n),
        },
        Cone {
            name: "with trivial summand",
            apex: sum,
            maps: c.legs.iter().map(|l| mor(&l.lambda * &proj)).collect(),
            expected: proj,
        },
    ]
}

/// The construction's own cocone, the cocone into the terminal object,
/// and its cocone followed by the inclusion `X → X ⊕ T`.
pub fn colimit_cocones(c: &Construction, sources: &[&CrossedLModule]) -> Vec<Cone> {
    let base = c.object.base();
    let n = c.object.dim();
    let (sum, incl, _) = plus_trivial(&c.object, 1);
    let t = terminal(base).unwrap();
    vec![
        Cone {
            name: "identity",
            apex: c.object.clone(),
            maps: c.legs.clone(),
            expected: Matrix::identity(n),
        },
        Cone {
            name: "terminal",
            apex: t,
            maps: sources.iter().map(|s| terminal_morphism(s).unwrap()).collect(),
            expected: terminal_morphism(&c.object).unwrap().lambda,
        },
        Cone {
            name: "with trivial summand",
            apex: sum,
            maps: c.legs.iter().map(|l| mor(&incl * &l.lambda)).collect(),
            expected: incl,
        },
    ]
}
