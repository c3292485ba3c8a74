//! Deterministic single-coefficient mutations of documents.
//!
//! Every structure constant, twist entry, anchor entry and map entry of a
//! document is a mutation site. A base algebra shared by several parts of a
//! document is a single set of sites; the copies are kept identical after
//! mutation. For morphism documents only the map entries are sites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::action::LrsAction;
use crate::algebra::{CommAlgebra, HomLeibnizAlgebra};
use crate::crossed::Cat1Algebra;
use crate::document::{AlgebraDocument, MorphismDocument};
use crate::error::{Error, Result};
use crate::linalg::{Bilinear, Matrix};
use crate::rational::{int, Rational};
use crate::rinehart::HlrAlgebra;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutationSpec {
    pub seed: u64,
    /// Explicit site; when `None` the site is drawn from `seed`.
    pub target_path: Option<String>,
    pub delta: Rational,
}

impl MutationSpec {
    pub fn seeded(seed: u64) -> Self {
        Self {
            seed,
            target_path: None,
            delta: int(1),
        }
    }
}

/// Record of an applied mutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mutation {
    pub path: String,
    pub before: Rational,
    pub after: Rational,
}

type Visit<'a> = dyn FnMut(String, &mut Rational) + 'a;

fn visit_tensor(path: &str, b: &mut Bilinear, f: &mut Visit) {
    let (l, r) = (b.dim_left(), b.dim_right());
    for (n, c) in b.coeffs_mut().iter_mut().enumerate() {
        let (k, i, j) = (n / (l * r), (n / r) % l, n % r);
        f(format!("{path}[{},{},{}]", k + 1, i + 1, j + 1), c);
    }
}

fn visit_matrix(path: &str, m: &mut Matrix, f: &mut Visit) {
    let cols = m.cols();
    for (n, c) in m.entries_mut().iter_mut().enumerate() {
        f(format!("{path}[{},{}]", n / cols + 1, n % cols + 1), c);
    }
}

fn visit_comm(path: &str, a: &mut CommAlgebra, f: &mut Visit) {
    visit_tensor(&format!("{path}.mul"), &mut a.mul, f);
    visit_matrix(&format!("{path}.phi"), &mut a.phi, f);
    if let Some(u) = &mut a.unit {
        for (i, c) in u.iter_mut().enumerate() {
            f(format!("{path}.unit[{}]", i + 1), c);
        }
    }
}

fn visit_hom_leibniz(path: &str, l: &mut HomLeibnizAlgebra, f: &mut Visit) {
    visit_tensor(&format!("{path}.bracket"), &mut l.bracket, f);
    visit_matrix(&format!("{path}.alpha"), &mut l.alpha, f);
}

fn visit_hlr(path: &str, x: &mut HlrAlgebra, with_base: bool, f: &mut Visit) {
    if with_base {
        visit_comm(&format!("{path}.base"), &mut x.base, f);
    }
    visit_hom_leibniz(&format!("{path}.carrier"), &mut x.carrier, f);
    visit_tensor(&format!("{path}.module"), &mut x.module.action, f);
    for (i, m) in x.anchor_l.iter_mut().enumerate() {
        visit_matrix(&format!("{path}.anchorLeft[{}]", i + 1), m, f);
    }
    for (i, m) in x.anchor_r.iter_mut().enumerate() {
        visit_matrix(&format!("{path}.anchorRight[{}]", i + 1), m, f);
    }
}

fn visit_action(path: &str, a: &mut LrsAction, f: &mut Visit) {
    visit_hlr(&format!("{path}.actor"), &mut a.actor, true, f);
    visit_hom_leibniz(&format!("{path}.target.algebra"), &mut a.target.algebra, f);
    visit_tensor(&format!("{path}.target.module"), &mut a.target.module.action, f);
    visit_tensor(&format!("{path}.left"), &mut a.left, f);
    visit_tensor(&format!("{path}.right"), &mut a.right, f);
}

fn visit_cat1(path: &str, c: &mut Cat1Algebra, f: &mut Visit) {
    visit_hlr(&format!("{path}.source"), &mut c.source, true, f);
    visit_hlr(&format!("{path}.range"), &mut c.range, false, f);
    visit_matrix(&format!("{path}.s"), &mut c.s, f);
    visit_matrix(&format!("{path}.t"), &mut c.t, f);
    visit_matrix(&format!("{path}.i"), &mut c.i, f);
    if let Some(xi) = &mut c.xi {
        visit_matrix(&format!("{path}.xi"), xi, f);
    }
}

fn visit_document(doc: &mut AlgebraDocument, f: &mut Visit) {
    let p = "payload";
    match doc {
        AlgebraDocument::CommAlgebra(a) => visit_comm(p, a, f),
        AlgebraDocument::HomLeibniz(l) => visit_hom_leibniz(p, l, f),
        AlgebraDocument::Hlr(x) => visit_hlr(p, x, true, f),
        AlgebraDocument::Action(a) => visit_action(p, a, f),
        AlgebraDocument::CrossedModule(cm) => {
            visit_action(p, &mut cm.action, f);
            visit_matrix(&format!("{p}.boundary"), &mut cm.boundary, f);
        }
        AlgebraDocument::Cat1(c) => visit_cat1(p, c, f),
        AlgebraDocument::Morphism(m) => match m {
            MorphismDocument::Hlr { map, .. } => visit_matrix(&format!("{p}.map"), map, f),
            MorphismDocument::Crossed { map, .. } => {
                visit_matrix(&format!("{p}.phi"), &mut map.phi_map, f);
                visit_matrix(&format!("{p}.psi"), &mut map.psi_map, f);
            }
            MorphismDocument::CrossedL { lambda, .. } => visit_matrix(&format!("{p}.lambda"), lambda, f),
            MorphismDocument::Cat1 { map, .. } => visit_matrix(&format!("{p}.upsilon"), &mut map.upsilon, f),
        },
    }
}

/// Copies the mutated shared base into the parts that carry a copy of it.
fn sync_bases(doc: &mut AlgebraDocument) {
    match doc {
        AlgebraDocument::Action(a) => a.target.base = a.actor.base.clone(),
        AlgebraDocument::CrossedModule(cm) => cm.action.target.base = cm.action.actor.base.clone(),
        AlgebraDocument::Cat1(c) => c.range.base = c.source.base.clone(),
        _ => {}
    }
}

/// All mutation sites of a document, in visiting order.
pub fn mutation_sites(doc: &AlgebraDocument) -> Vec<String> {
    let mut copy = doc.clone();
    let mut out = Vec::new();
    visit_document(&mut copy, &mut |path, _| out.push(path));
    out
}

/// Shifts one coefficient by `spec.delta`.
pub fn fuzz(doc: &AlgebraDocument, spec: &MutationSpec) -> Result<(AlgebraDocument, Mutation)> {
    let sites = mutation_sites(doc);
    if sites.is_empty() {
        return Err(Error::Precondition(format!("{} document has no mutation sites", doc.kind())));
    }
    let index = match &spec.target_path {
        Some(path) => sites
            .iter()
            .position(|s| s == path)
            .ok_or_else(|| Error::Precondition(format!("no mutation site named {path}")))?,
        None => ChaCha8Rng::seed_from_u64(spec.seed).gen_range(0..sites.len()),
    };
    let mut out = doc.clone();
    let mut record = None;
    let mut n = 0;
    visit_document(&mut out, &mut |path, c| {
        if n == index {
            let before = c.clone();
            *c += &spec.delta;
            record = Some(Mutation {
                path,
                before,
                after: c.clone(),
            });
        }
        n += 1;
    });
    sync_bases(&mut out);
    Ok((out, record.expect("site index is in range")))
}
