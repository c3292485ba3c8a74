//! Canonical JSON documents for every structure in the crate.
//!
//! A document is `{"kind", "payload", "schemaVersion"}`. Rationals are
//! strings, tensors are sparse 1-indexed entry lists, matrices are dense
//! row-major `data` arrays. Keys are sorted on output.

use serde_json::{json, Map, Value};

use crate::action::{validate_lrs_action, LrsAction};
use crate::algebra::{
    validate_comm_algebra, validate_hom_leibniz, AModule, CommAlgebra, HomLeibnizAAlgebra, HomLeibnizAlgebra,
};
use crate::category::{validate_cml_morphism, CrossedLModule, PeifferConvention};
use crate::crossed::{
    validate_cat1, validate_cat1_morphism, validate_cm_morphism, validate_crossed_module, Cat1Algebra, Cat1Morphism,
    Cat4Mode, CmMorphism, CrossedModule,
};
use crate::error::{Error, Result};
use crate::linalg::{Bilinear, Matrix};
use crate::rational::{format_rational, parse_rational, Rational, Vector};
use crate::report::ValidationReport;
use crate::rinehart::{validate_hlr, validate_hlr_morphism, HlrAlgebra};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismDocument {
    Hlr {
        map: Matrix,
        source: HlrAlgebra,
        target: HlrAlgebra,
    },
    Crossed {
        map: CmMorphism,
        source: CrossedModule,
        target: CrossedModule,
    },
    /// Morphism of crossed L-modules; only the map on `M` is recorded.
    CrossedL {
        lambda: Matrix,
        source: CrossedModule,
        target: CrossedModule,
    },
    Cat1 {
        map: Cat1Morphism,
        source: Cat1Algebra,
        target: Cat1Algebra,
    },
}

impl MorphismDocument {
    pub fn variant(&self) -> &'static str {
        match self {
            MorphismDocument::Hlr { .. } => "hlr",
            MorphismDocument::Crossed { .. } => "crossed-module",
            MorphismDocument::CrossedL { .. } => "crossed-l-module",
            MorphismDocument::Cat1 { .. } => "cat1",
        }
    }
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraDocument {
    CommAlgebra(CommAlgebra),
    HomLeibniz(HomLeibnizAlgebra),
    Hlr(HlrAlgebra),
    Action(LrsAction),
    CrossedModule(CrossedModule),
    Cat1(Cat1Algebra),
    Morphism(MorphismDocument),
}

impl AlgebraDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            AlgebraDocument::CommAlgebra(_) => "comm-algebra",
            AlgebraDocument::HomLeibniz(_) => "hom-leibniz",
            AlgebraDocument::Hlr(_) => "hlr",
            AlgebraDocument::Action(_) => "action",
            AlgebraDocument::CrossedModule(_) => "crossed-module",
            AlgebraDocument::Cat1(_) => "cat1",
            AlgebraDocument::Morphism(_) => "morphism",
        }
    }

    pub fn to_value(&self) -> Value {
        let payload = match self {
            AlgebraDocument::CommAlgebra(a) => comm_value(a),
            AlgebraDocument::HomLeibniz(l) => hom_leibniz_value(l),
            AlgebraDocument::Hlr(x) => hlr_value(x),
            AlgebraDocument::Action(a) => action_value(a),
            AlgebraDocument::CrossedModule(cm) => crossed_value(cm),
            AlgebraDocument::Cat1(c) => cat1_value(c),
            AlgebraDocument::Morphism(m) => morphism_value(m),
        };
        json!({"kind": self.kind(), "payload": payload, "schemaVersion": SCHEMA_VERSION})
    }

    /// Canonical text: sorted keys, two-space indentation, trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
            path: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        Self::from_value(&value)
    }

    pub fn from_value(value: &Value) -> Result<Self> {
        let root = At::root(value);
        let obj = root.object()?;
        let version = obj.field("schemaVersion")?.string()?;
        if version != SCHEMA_VERSION {
            return Err(obj.field("schemaVersion")?.error(format!("unsupported schema version {version:?}")));
        }
        let kind = obj.field("kind")?;
        let payload = obj.field("payload")?;
        let doc = match kind.string()? {
            "comm-algebra" => AlgebraDocument::CommAlgebra(read_comm(&payload)?),
            "hom-leibniz" => AlgebraDocument::HomLeibniz(read_hom_leibniz(&payload)?),
            "hlr" => AlgebraDocument::Hlr(read_hlr(&payload, None)?),
            "action" => AlgebraDocument::Action(read_action(&payload)?),
            "crossed-module" => AlgebraDocument::CrossedModule(read_crossed(&payload)?),
            "cat1" => AlgebraDocument::Cat1(read_cat1(&payload)?),
            "morphism" => AlgebraDocument::Morphism(read_morphism(&payload)?),
            other => return Err(kind.error(format!("unknown kind {other:?}"))),
        };
        Ok(doc)
    }
}

/// Settings for [`validate_document`].
#[derive(Clone, Copy, Debug, Default)]
pub struct ValidateOptions {
    pub cat4_mode: Cat4Mode,
    pub peiffer: PeifferConvention,
}

/// Runs the validator matching the document kind. Morphism documents also
/// validate both endpoints, under the prefixes `source` and `target`.
pub fn validate_document(doc: &AlgebraDocument, opts: &ValidateOptions) -> Result<ValidationReport> {
    match doc {
        AlgebraDocument::CommAlgebra(a) => validate_comm_algebra(a),
        AlgebraDocument::HomLeibniz(l) => validate_hom_leibniz(l),
        AlgebraDocument::Hlr(x) => validate_hlr(x),
        AlgebraDocument::Action(a) => validate_lrs_action(a),
        AlgebraDocument::CrossedModule(cm) => validate_crossed_module(cm),
        AlgebraDocument::Cat1(c) => validate_cat1(c, opts.cat4_mode),
        AlgebraDocument::Morphism(m) => {
            let mut r = ValidationReport::new();
            match m {
                MorphismDocument::Hlr { map, source, target } => {
                    r.merge_prefixed("source", validate_hlr(source)?);
                    r.merge_prefixed("target", validate_hlr(target)?);
                    r.merge(validate_hlr_morphism(map, source, target)?);
                }
                MorphismDocument::Crossed { map, source, target } => {
                    r.merge_prefixed("source", validate_crossed_module(source)?);
                    r.merge_prefixed("target", validate_crossed_module(target)?);
                    r.merge(validate_cm_morphism(map, source, target)?);
                }
                MorphismDocument::CrossedL { lambda, source, target } => {
                    r.merge_prefixed("source", validate_crossed_module(source)?);
                    r.merge_prefixed("target", validate_crossed_module(target)?);
                    let (s, t) = (
                        CrossedLModule { cm: source.clone() },
                        CrossedLModule { cm: target.clone() },
                    );
                    r.merge(validate_cml_morphism(
                        &crate::category::CmlMorphism::new(lambda.clone()),
                        &s,
                        &t,
                    )?);
                }
                MorphismDocument::Cat1 { map, source, target } => {
                    r.merge_prefixed("source", validate_cat1(source, opts.cat4_mode)?);
                    r.merge_prefixed("target", validate_cat1(target, opts.cat4_mode)?);
                    r.merge(validate_cat1_morphism(map, source, target)?);
                }
            }
            Ok(r)
        }
    }
}

// ---------------------------------------------------------------- writing

fn rat(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn vector_value(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

pub fn matrix_value(m: &Matrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "data": m.to_rows().iter().map(|r| vector_value(r)).collect::<Vec<_>>(),
    })
}

pub fn tensor_value(b: &Bilinear) -> Value {
    let mut entries = Vec::new();
    for k in 0..b.dim_out() {
        for i in 0..b.dim_left() {
            for j in 0..b.dim_right() {
                let c = b.get(k, i, j);
                if *c != Rational::from_integer(0.into()) {
                    entries.push(json!([k + 1, i + 1, j + 1, format_rational(c)]));
                }
            }
        }
    }
    json!({"dims": [b.dim_out(), b.dim_left(), b.dim_right()], "entries": entries})
}

fn matrices_value(ms: &[Matrix]) -> Value {
    Value::Array(ms.iter().map(matrix_value).collect())
}

fn comm_value(a: &CommAlgebra) -> Value {
    let mut m = Map::new();
    m.insert("mul".into(), tensor_value(&a.mul));
    m.insert("phi".into(), matrix_value(&a.phi));
    if let Some(u) = &a.unit {
        m.insert("unit".into(), vector_value(u));
    }
    Value::Object(m)
}

fn hom_leibniz_value(l: &HomLeibnizAlgebra) -> Value {
    json!({"alpha": matrix_value(&l.alpha), "bracket": tensor_value(&l.bracket)})
}

/// HLR fields without the base algebra.
fn hlr_fields(x: &HlrAlgebra) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("carrier".into(), hom_leibniz_value(&x.carrier));
    m.insert("module".into(), tensor_value(&x.module.action));
    m.insert("anchorLeft".into(), matrices_value(&x.anchor_l));
    m.insert("anchorRight".into(), matrices_value(&x.anchor_r));
    m
}

fn hlr_value(x: &HlrAlgebra) -> Value {
    let mut m = hlr_fields(x);
    m.insert("base".into(), comm_value(&x.base));
    Value::Object(m)
}

fn action_fields(a: &LrsAction) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("actor".into(), hlr_value(&a.actor));
    m.insert(
        "target".into(),
        json!({
            "algebra": hom_leibniz_value(&a.target.algebra),
            "module": tensor_value(&a.target.module.action),
        }),
    );
    if a.target.base != a.actor.base {
        m.insert("targetBase".into(), comm_value(&a.target.base));
    }
    m.insert("left".into(), tensor_value(&a.left));
    m.insert("right".into(), tensor_value(&a.right));
    m
}

fn action_value(a: &LrsAction) -> Value {
    Value::Object(action_fields(a))
}

fn crossed_value(cm: &CrossedModule) -> Value {
    let mut m = action_fields(&cm.action);
    m.insert("boundary".into(), matrix_value(&cm.boundary));
    Value::Object(m)
}

fn cat1_value(c: &Cat1Algebra) -> Value {
    let mut m = Map::new();
    m.insert("source".into(), hlr_value(&c.source));
    let mut range = hlr_fields(&c.range);
    if c.range.base != c.source.base {
        range.insert("base".into(), comm_value(&c.range.base));
    }
    m.insert("range".into(), Value::Object(range));
    m.insert("s".into(), matrix_value(&c.s));
    m.insert("t".into(), matrix_value(&c.t));
    m.insert("i".into(), matrix_value(&c.i));
    if let Some(xi) = &c.xi {
        m.insert("xi".into(), matrix_value(xi));
    }
    Value::Object(m)
}

fn morphism_value(md: &MorphismDocument) -> Value {
    let mut m = Map::new();
    m.insert("variant".into(), Value::String(md.variant().into()));
    match md {
        MorphismDocument::Hlr { map, source, target } => {
            m.insert("map".into(), matrix_value(map));
            m.insert("source".into(), hlr_value(source));
            m.insert("target".into(), hlr_value(target));
        }
        MorphismDocument::Crossed { map, source, target } => {
            m.insert("phi".into(), matrix_value(&map.phi_map));
            m.insert("psi".into(), matrix_value(&map.psi_map));
            m.insert("source".into(), crossed_value(source));
            m.insert("target".into(), crossed_value(target));
        }
        MorphismDocument::CrossedL { lambda, source, target } => {
            m.insert("lambda".into(), matrix_value(lambda));
            m.insert("source".into(), crossed_value(source));
            m.insert("target".into(), crossed_value(target));
        }
        MorphismDocument::Cat1 { map, source, target } => {
            m.insert("upsilon".into(), matrix_value(&map.upsilon));
            m.insert("source".into(), cat1_value(source));
            m.insert("target".into(), cat1_value(target));
        }
    }
    Value::Object(m)
}

// ---------------------------------------------------------------- reading

/// A JSON value together with its path from the document root.
#[derive(Clone)]
struct At<'a> {
    value: &'a Value,
    path: String,
}

impl<'a> At<'a> {
    fn root(value: &'a Value) -> Self {
        Self {
            value,
            path: String::new(),
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            path: if self.path.is_empty() { "<root>".into() } else { self.path.clone() },
            message: message.into(),
        }
    }

    fn object(&self) -> Result<Self> {
        if self.value.is_object() {
            Ok(self.clone())
        } else {
            Err(self.error("expected an object"))
        }
    }

    fn get(&self, key: &str) -> Option<At<'a>> {
        let v = self.value.as_object()?.get(key)?;
        let path = if self.path.is_empty() { key.to_string() } else { format!("{}.{key}", self.path) };
        Some(At { value: v, path })
    }

    fn field(&self, key: &str) -> Result<At<'a>> {
        self.object()?;
        self.get(key).ok_or_else(|| self.error(format!("missing field {key:?}")))
    }

    fn items(&self) -> Result<Vec<At<'a>>> {
        let arr = self.value.as_array().ok_or_else(|| self.error("expected an array"))?;
        Ok(arr
            .iter()
            .enumerate()
            .map(|(k, v)| At {
                value: v,
                path: format!("{}[{k}]", self.path),
            })
            .collect())
    }

    fn string(&self) -> Result<&'a str> {
        self.value.as_str().ok_or_else(|| self.error("expected a string"))
    }

    fn usize(&self) -> Result<usize> {
        self.value
            .as_u64()
            .map(|n| n as usize)
            .ok_or_else(|| self.error("expected a non-negative integer"))
    }

    fn rational(&self) -> Result<Rational> {
        let s = self
            .value
            .as_str()
            .ok_or_else(|| self.error("expected a rational written as a string \"p\" or \"p/q\""))?;
        parse_rational(s).map_err(|m| self.error(m))
    }
}

fn read_vector(at: &At) -> Result<Vector> {
    at.items()?.iter().map(At::rational).collect()
}

fn read_matrix(at: &At) -> Result<Matrix> {
    let rows = at.field("rows")?.usize()?;
    let cols = at.field("cols")?.usize()?;
    let data = at.field("data")?;
    let items = data.items()?;
    if items.len() != rows {
        return Err(data.error(format!("expected {rows} rows, found {}", items.len())));
    }
    let mut m = Matrix::zeros(rows, cols);
    for (r, row) in items.iter().enumerate() {
        let v = read_vector(row)?;
        if v.len() != cols {
            return Err(row.error(format!("expected {cols} entries, found {}", v.len())));
        }
        for (c, q) in v.into_iter().enumerate() {
            m.set(r, c, q);
        }
    }
    Ok(m)
}

fn read_matrix_shaped(at: &At, rows: usize, cols: usize) -> Result<Matrix> {
    let m = read_matrix(at)?;
    if (m.rows(), m.cols()) != (rows, cols) {
        return Err(at.error(format!("expected a {rows}x{cols} matrix, found {}x{}", m.rows(), m.cols())));
    }
    Ok(m)
}

fn read_tensor(at: &At) -> Result<Bilinear> {
    let dims_at = at.field("dims")?;
    let dims = dims_at.items()?.iter().map(At::usize).collect::<Result<Vec<_>>>()?;
    let [out, left, right] = dims[..] else {
        return Err(dims_at.error("expected three dimensions [out, left, right]"));
    };
    let mut b = Bilinear::zeros(out, left, right);
    let entries = at.field("entries")?;
    for e in entries.items()? {
        let parts = e.items()?;
        if parts.len() != 4 {
            return Err(e.error("expected an entry [k, i, j, \"value\"]"));
        }
        let mut idx = [0usize; 3];
        for (n, bound) in [out, left, right].into_iter().enumerate() {
            let k = parts[n].usize()?;
            if k == 0 || k > bound {
                return Err(parts[n].error(format!("index {k} out of range 1..={bound}")));
            }
            idx[n] = k - 1;
        }
        let q = parts[3].rational()?;
        b.set(idx[0], idx[1], idx[2], q);
    }
    Ok(b)
}

fn read_tensor_shaped(at: &At, dims: [usize; 3]) -> Result<Bilinear> {
    let b = read_tensor(at)?;
    let found = [b.dim_out(), b.dim_left(), b.dim_right()];
    if found != dims {
        return Err(at.error(format!("expected tensor dims {dims:?}, found {found:?}")));
    }
    Ok(b)
}

fn read_comm(at: &At) -> Result<CommAlgebra> {
    let mul = read_tensor(&at.field("mul")?)?;
    let n = mul.dim_out();
    if mul.dim_left() != n || mul.dim_right() != n {
        return Err(at.field("mul")?.error("multiplication must be an n x n -> n tensor"));
    }
    let phi = read_matrix_shaped(&at.field("phi")?, n, n)?;
    let unit = match at.get("unit") {
        Some(u) if !u.value.is_null() => {
            let v = read_vector(&u)?;
            if v.len() != n {
                return Err(u.error(format!("expected {n} entries, found {}", v.len())));
            }
            Some(v)
        }
        _ => None,
    };
    Ok(CommAlgebra { mul, phi, unit })
}

fn read_hom_leibniz(at: &At) -> Result<HomLeibnizAlgebra> {
    let bracket = read_tensor(&at.field("bracket")?)?;
    let n = bracket.dim_out();
    if bracket.dim_left() != n || bracket.dim_right() != n {
        return Err(at.field("bracket")?.error("bracket must be an n x n -> n tensor"));
    }
    let alpha = read_matrix_shaped(&at.field("alpha")?, n, n)?;
    Ok(HomLeibnizAlgebra { bracket, alpha })
}

fn read_anchors(at: &At, n: usize, na: usize) -> Result<Vec<Matrix>> {
    let items = at.items()?;
    if items.len() != n {
        return Err(at.error(format!("expected {n} anchor matrices, found {}", items.len())));
    }
    items.iter().map(|m| read_matrix_shaped(m, na, na)).collect()
}

/// Reads an HLR payload; `shared_base` is used when the payload omits
/// `base`.
fn read_hlr(at: &At, shared_base: Option<&CommAlgebra>) -> Result<HlrAlgebra> {
    let base = match (at.get("base"), shared_base) {
        (Some(b), _) => read_comm(&b)?,
        (None, Some(b)) => b.clone(),
        (None, None) => return Err(at.error("missing field \"base\"")),
    };
    let na = base.dim();
    let carrier = read_hom_leibniz(&at.field("carrier")?)?;
    let n = carrier.dim();
    let module = AModule::new(read_tensor_shaped(&at.field("module")?, [n, na, n])?);
    let anchor_l = read_anchors(&at.field("anchorLeft")?, n, na)?;
    let anchor_r = read_anchors(&at.field("anchorRight")?, n, na)?;
    Ok(HlrAlgebra {
        base,
        carrier,
        module,
        anchor_l,
        anchor_r,
    })
}

fn read_action(at: &At) -> Result<LrsAction> {
    let actor = read_hlr(&at.field("actor")?, None)?;
    let target_base = match at.get("targetBase") {
        Some(b) => read_comm(&b)?,
        None => actor.base.clone(),
    };
    let t = at.field("target")?;
    let algebra = read_hom_leibniz(&t.field("algebra")?)?;
    let (nl, nm, na) = (actor.dim(), algebra.dim(), target_base.dim());
    let module = AModule::new(read_tensor_shaped(&t.field("module")?, [nm, na, nm])?);
    let left = read_tensor_shaped(&at.field("left")?, [nm, nl, nm])?;
    let right = read_tensor_shaped(&at.field("right")?, [nm, nm, nl])?;
    Ok(LrsAction {
        actor,
        target: HomLeibnizAAlgebra {
            base: target_base,
            algebra,
            module,
        },
        left,
        right,
    })
}

fn read_crossed(at: &At) -> Result<CrossedModule> {
    let action = read_action(at)?;
    let boundary = read_matrix_shaped(&at.field("boundary")?, action.actor_dim(), action.target_dim())?;
    Ok(CrossedModule { action, boundary })
}

fn read_cat1(at: &At) -> Result<Cat1Algebra> {
    let source = read_hlr(&at.field("source")?, None)?;
    let range = read_hlr(&at.field("range")?, Some(&source.base))?;
    let (np, nl) = (source.dim(), range.dim());
    let s = read_matrix_shaped(&at.field("s")?, nl, np)?;
    let t = read_matrix_shaped(&at.field("t")?, nl, np)?;
    let i = read_matrix_shaped(&at.field("i")?, np, nl)?;
    let xi = match at.get("xi") {
        Some(x) => Some(read_matrix_shaped(&x, np, nl)?),
        None => None,
    };
    Ok(Cat1Algebra {
        source,
        range,
        s,
        t,
        i,
        xi,
    })
}

fn read_morphism(at: &At) -> Result<MorphismDocument> {
    let variant = at.field("variant")?;
    Ok(match variant.string()? {
        "hlr" => {
            let source = read_hlr(&at.field("source")?, None)?;
            let target = read_hlr(&at.field("target")?, None)?;
            let map = read_matrix_shaped(&at.field("map")?, target.dim(), source.dim())?;
            MorphismDocument::Hlr { map, source, target }
        }
        "crossed-module" => {
            let source = read_crossed(&at.field("source")?)?;
            let target = read_crossed(&at.field("target")?)?;
            let phi_map = read_matrix_shaped(&at.field("phi")?, target.m_dim(), source.m_dim())?;
            let psi_map = read_matrix_shaped(&at.field("psi")?, target.l_dim(), source.l_dim())?;
            MorphismDocument::Crossed {
                map: CmMorphism { phi_map, psi_map },
                source,
                target,
            }
        }
        "crossed-l-module" => {
            let source = read_crossed(&at.field("source")?)?;
            let target = read_crossed(&at.field("target")?)?;
            let lambda = read_matrix_shaped(&at.field("lambda")?, target.m_dim(), source.m_dim())?;
            MorphismDocument::CrossedL { lambda, source, target }
        }
        "cat1" => {
            let source = read_cat1(&at.field("source")?)?;
            let target = read_cat1(&at.field("target")?)?;
            let upsilon = read_matrix_shaped(&at.field("upsilon")?, target.p_dim(), source.p_dim())?;
            MorphismDocument::Cat1 {
                map: Cat1Morphism { upsilon },
                source,
                target,
            }
        }
        other => return Err(variant.error(format!("unknown morphism variant {other:?}"))),
    })
}
