//! Python bindings. Documents travel as `Document` objects, exact
//! rationals as `fractions.Fraction`, and matrices as lists of rows.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use hlr_core::action::semidirect as core_semidirect;
use hlr_core::category::{self as cat, CmlMorphism, CrossedLModule, PeifferConvention};
use hlr_core::crossed::{cat1_to_cm, cm_to_cat1, roundtrip_iso_check, Cat4Mode, CrossedModule};
use hlr_core::document::{validate_document, AlgebraDocument, MorphismDocument, ValidateOptions};
use hlr_core::fuzz::{fuzz as core_fuzz, MutationSpec};
use hlr_core::rational::parse_rational;
use hlr_core::rinehart::yau_twist;
use hlr_core::{library, Error, Matrix, Rational, ValidationReport};

create_exception!(hlr, HlrError, PyException, "Base class of every error raised by hlr.");
create_exception!(hlr, ParseError, HlrError, "Malformed document.");
create_exception!(hlr, ShapeError, HlrError, "Dimensions do not fit together.");
create_exception!(hlr, InvalidInput, HlrError, "An input fails the axioms its operation requires.");
create_exception!(hlr, DiagnosticError, HlrError, "A construction is not defined for the given data.");

fn err(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::Parse { .. } => ParseError::new_err(msg),
        Error::Shape(_) => ShapeError::new_err(msg),
        Error::Diagnostic(_) => DiagnosticError::new_err(msg),
        _ => InvalidInput::new_err(msg),
    }
}

fn fraction<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((q.to_string(),))
}

fn vector<'py>(py: Python<'py>, v: &[Rational]) -> PyResult<Bound<'py, PyList>> {
    let items = v.iter().map(|q| fraction(py, q)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn matrix_to_py<'py>(py: Python<'py>, m: &Matrix) -> PyResult<Bound<'py, PyList>> {
    let rows = m.to_rows().iter().map(|r| vector(py, r)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, rows)
}

/// Accepts a list of rows whose entries are ints, strings or Fractions.
fn matrix_from_py(obj: &Bound<'_, PyAny>) -> PyResult<Matrix> {
    let mut rows = Vec::new();
    for row in obj.try_iter()? {
        let mut r = Vec::new();
        for x in row?.try_iter()? {
            let s = x?.str()?.to_string();
            r.push(parse_rational(&s).map_err(ParseError::new_err)?);
        }
        rows.push(r);
    }
    let cols = rows.first().map_or(0, |r| r.len());
    Matrix::from_rows(rows, cols).map_err(err)
}

fn options(cat4_mode: &str, peiffer: &str) -> PyResult<ValidateOptions> {
    Ok(ValidateOptions {
        cat4_mode: cat4_mode.parse::<Cat4Mode>().map_err(pyo3::exceptions::PyValueError::new_err)?,
        peiffer: peiffer.parse::<PeifferConvention>().map_err(pyo3::exceptions::PyValueError::new_err)?,
    })
}

/// Any document: algebra, action, crossed module, cat¹-algebra or morphism.
#[pyclass(frozen, module = "hlr")]
struct Document {
    inner: AlgebraDocument,
}

#[pymethods]
impl Document {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        AlgebraDocument::parse(text).map(|inner| Document { inner }).map_err(err)
    }

    #[staticmethod]
    fn load(path: std::path::PathBuf) -> PyResult<Self> {
        let text = std::fs::read_to_string(&path)?;
        Self::parse(&text)
    }

    /// A built-in example by name.
    #[staticmethod]
    fn example(name: &str) -> PyResult<Self> {
        library::get(name)
            .map(|inner| Document { inner })
            .ok_or_else(|| pyo3::exceptions::PyKeyError::new_err(name.to_string()))
    }

    #[getter]
    fn kind(&self) -> &'static str {
        self.inner.kind()
    }

    /// Canonical text form.
    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[pyo3(signature = (cat4_mode = "reconstructed", peiffer = "printed"))]
    fn validate(&self, cat4_mode: &str, peiffer: &str) -> PyResult<Report> {
        let r = validate_document(&self.inner, &options(cat4_mode, peiffer)?).map_err(err)?;
        Ok(Report { inner: r })
    }

    fn __eq__(&self, other: &Document) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("<hlr.Document {}>", self.inner.kind())
    }
}

#[pyclass(frozen, module = "hlr")]
struct Report {
    inner: ValidationReport,
}

#[pymethods]
impl Report {
    #[getter]
    fn valid(&self) -> bool {
        self.inner.is_valid()
    }

    #[getter]
    fn notes(&self) -> Vec<String> {
        self.inner.notes.clone()
    }

    /// Distinct axiom tags that failed, sorted.
    #[getter]
    fn tags(&self) -> Vec<String> {
        self.inner.tags().into_iter().collect()
    }

    /// Each violation as a dict with `tag`, `witness` (label, 1-based index)
    /// pairs, `lhs` and `rhs`.
    #[getter]
    fn violations<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let mut out = Vec::new();
        for v in &self.inner.violations {
            let d = PyDict::new(py);
            d.set_item("tag", &v.tag)?;
            let w: Vec<(String, usize)> = v.witness.iter().map(|w| (w.label.clone(), w.index + 1)).collect();
            d.set_item("witness", w)?;
            d.set_item("lhs", vector(py, &v.lhs)?)?;
            d.set_item("rhs", vector(py, &v.rhs)?)?;
            out.push(d);
        }
        PyList::new(py, out)
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn __bool__(&self) -> bool {
        self.inner.is_valid()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("<hlr.Report {} violation(s)>", self.inner.len())
    }
}

/// Result of a limit or colimit construction.
#[pyclass(frozen, module = "hlr")]
struct Construction {
    inner: cat::Construction,
}

#[pymethods]
impl Construction {
    /// The constructed crossed module as a document.
    #[getter]
    fn object(&self) -> Document {
        Document {
            inner: AlgebraDocument::CrossedModule(self.inner.object.cm.clone()),
        }
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.object.dim()
    }

    #[getter]
    fn legs<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyList>>> {
        self.inner.legs.iter().map(|l| matrix_to_py(py, &l.lambda)).collect()
    }

    #[getter]
    fn closure_rounds(&self) -> Option<usize> {
        self.inner.closure_rounds
    }

    #[getter]
    fn ideal_dim(&self) -> Option<usize> {
        self.inner.ideal.as_ref().map(|i| i.dim())
    }

    #[getter]
    fn notes(&self) -> Vec<String> {
        self.inner.notes.clone()
    }

    fn __repr__(&self) -> String {
        format!("<hlr.Construction dim {}>", self.inner.object.dim())
    }
}

fn crossed(doc: &Document) -> PyResult<CrossedModule> {
    match &doc.inner {
        AlgebraDocument::CrossedModule(cm) => Ok(cm.clone()),
        other => Err(pyo3::exceptions::PyTypeError::new_err(format!(
            "expected a crossed-module document, found {}",
            other.kind()
        ))),
    }
}

fn crossed_l(doc: &Document) -> PyResult<CrossedLModule> {
    CrossedLModule::new(crossed(doc)?).map_err(err)
}

fn cml_morphism(doc: &Document) -> PyResult<(CrossedLModule, CrossedLModule, CmlMorphism)> {
    match &doc.inner {
        AlgebraDocument::Morphism(MorphismDocument::CrossedL { lambda, source, target }) => Ok((
            CrossedLModule::new(source.clone()).map_err(err)?,
            CrossedLModule::new(target.clone()).map_err(err)?,
            CmlMorphism::new(lambda.clone()),
        )),
        other => Err(pyo3::exceptions::PyTypeError::new_err(format!(
            "expected a crossed-l-module morphism document, found {}",
            other.kind()
        ))),
    }
}

fn wrap(c: hlr_core::Result<cat::Construction>) -> PyResult<Construction> {
    c.map(|inner| Construction { inner }).map_err(err)
}

/// Names of the built-in examples.
#[pyfunction]
fn examples() -> Vec<&'static str> {
    library::names().to_vec()
}

/// Semi-direct product of an action document.
#[pyfunction]
fn semidirect(doc: &Document) -> PyResult<Document> {
    let AlgebraDocument::Action(a) = &doc.inner else {
        return Err(pyo3::exceptions::PyTypeError::new_err("expected an action document"));
    };
    let p = core_semidirect(a).map_err(err)?;
    Ok(Document {
        inner: AlgebraDocument::Hlr(p),
    })
}

#[pyfunction]
fn to_cat1(doc: &Document) -> PyResult<Document> {
    let c = cm_to_cat1(&crossed(doc)?).map_err(err)?;
    Ok(Document {
        inner: AlgebraDocument::Cat1(c),
    })
}

#[pyfunction]
fn to_cm(doc: &Document) -> PyResult<Document> {
    let AlgebraDocument::Cat1(c) = &doc.inner else {
        return Err(pyo3::exceptions::PyTypeError::new_err("expected a cat1 document"));
    };
    let cm = cat1_to_cm(c).map_err(err)?;
    Ok(Document {
        inner: AlgebraDocument::CrossedModule(cm),
    })
}

/// Crossed module → cat¹ → crossed module. Returns a dict with the
/// recovered document and the reports for the identity pair and the twist
/// pair `(α_M, α_L)`.
#[pyfunction]
fn roundtrip<'py>(py: Python<'py>, doc: &Document) -> PyResult<Bound<'py, PyDict>> {
    let rt = roundtrip_iso_check(&crossed(doc)?).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item(
        "roundtrip",
        Document {
            inner: AlgebraDocument::CrossedModule(rt.roundtrip),
        },
    )?;
    d.set_item("identity_report", Report { inner: rt.identity_report })?;
    d.set_item("twist_phi", matrix_to_py(py, &rt.twist_pair.phi_map)?)?;
    d.set_item("twist_psi", matrix_to_py(py, &rt.twist_pair.psi_map)?)?;
    d.set_item("twist_invertible", rt.twist_pair.is_isomorphism())?;
    d.set_item("twist_report", Report { inner: rt.twist_report })?;
    Ok(d)
}

/// Yau twist of an HLR algebra by `alpha` on the carrier and `phi` on the base.
#[pyfunction]
fn twist(doc: &Document, alpha: &Bound<'_, PyAny>, phi: &Bound<'_, PyAny>) -> PyResult<Document> {
    let AlgebraDocument::Hlr(x) = &doc.inner else {
        return Err(pyo3::exceptions::PyTypeError::new_err("expected an hlr document"));
    };
    let t = yau_twist(x, &matrix_from_py(alpha)?, &matrix_from_py(phi)?).map_err(err)?;
    Ok(Document {
        inner: AlgebraDocument::Hlr(t),
    })
}

#[pyfunction]
fn equalizer(f: &Document, g: &Document) -> PyResult<Construction> {
    let ((x, y, f), (_, _, g)) = (cml_morphism(f)?, cml_morphism(g)?);
    wrap(cat::equalizer(&x, &y, &f, &g))
}

#[pyfunction]
fn coequalizer(f: &Document, g: &Document) -> PyResult<Construction> {
    let ((x, y, f), (_, _, g)) = (cml_morphism(f)?, cml_morphism(g)?);
    wrap(cat::coequalizer(&x, &y, &f, &g))
}

/// Pullback of `f: X → Z` and `g: Y → Z`.
#[pyfunction]
fn pullback(f: &Document, g: &Document) -> PyResult<Construction> {
    let ((x, z, f), (y, _, g)) = (cml_morphism(f)?, cml_morphism(g)?);
    wrap(cat::pullback(&x, &y, &z, &f, &g))
}

/// Pushout of `f: E → X` and `g: E → Y`.
#[pyfunction]
#[pyo3(signature = (f, g, peiffer = "printed"))]
fn pushout(f: &Document, g: &Document, peiffer: &str) -> PyResult<Construction> {
    let conv = options("reconstructed", peiffer)?.peiffer;
    let ((e, x, f), (_, y, g)) = (cml_morphism(f)?, cml_morphism(g)?);
    wrap(cat::pushout(&e, &x, &y, &f, &g, conv))
}

#[pyfunction]
fn product(x: &Document, y: &Document) -> PyResult<Construction> {
    wrap(cat::product(&crossed_l(x)?, &crossed_l(y)?))
}

#[pyfunction]
#[pyo3(signature = (x, y, peiffer = "printed"))]
fn coproduct(x: &Document, y: &Document, peiffer: &str) -> PyResult<Construction> {
    let conv = options("reconstructed", peiffer)?.peiffer;
    wrap(cat::coproduct(&crossed_l(x)?, &crossed_l(y)?, conv))
}

/// Terminal crossed module over the actor of a crossed-module document.
#[pyfunction]
fn terminal(doc: &Document) -> PyResult<Document> {
    let t = cat::terminal(crossed(doc)?.actor()).map_err(err)?;
    Ok(Document {
        inner: AlgebraDocument::CrossedModule(t.cm),
    })
}

/// One seeded single-constant mutation. Returns the mutated document with
/// the path, old and new value of the changed constant.
#[pyfunction]
#[pyo3(signature = (doc, seed, path = None))]
fn fuzz<'py>(
    py: Python<'py>,
    doc: &Document,
    seed: u64,
    path: Option<String>,
) -> PyResult<(Document, String, Bound<'py, PyAny>, Bound<'py, PyAny>)> {
    let spec = MutationSpec {
        target_path: path,
        ..MutationSpec::seeded(seed)
    };
    let (m, mu) = core_fuzz(&doc.inner, &spec).map_err(err)?;
    Ok((Document { inner: m }, mu.path, fraction(py, &mu.before)?, fraction(py, &mu.after)?))
}

#[pymodule]
fn hlr(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("HlrError", py.get_type::<HlrError>())?;
    m.add("ParseError", py.get_type::<ParseError>())?;
    m.add("ShapeError", py.get_type::<ShapeError>())?;
    m.add("InvalidInput", py.get_type::<InvalidInput>())?;
    m.add("DiagnosticError", py.get_type::<DiagnosticError>())?;
    m.add_class::<Document>()?;
    m.add_class::<Report>()?;
    m.add_class::<Construction>()?;
    m.add_function(wrap_pyfunction!(examples, m)?)?;
    m.add_function(wrap_pyfunction!(semidirect, m)?)?;
    m.add_function(wrap_pyfunction!(to_cat1, m)?)?;
    m.add_function(wrap_pyfunction!(to_cm, m)?)?;
    m.add_function(wrap_pyfunction!(roundtrip, m)?)?;
    m.add_function(wrap_pyfunction!(twist, m)?)?;
    m.add_function(wrap_pyfunction!(equalizer, m)?)?;
    m.add_function(wrap_pyfunction!(coequalizer, m)?)?;
    m.add_function(wrap_pyfunction!(pullback, m)?)?;
    m.add_function(wrap_pyfunction!(pushout, m)?)?;
    m.add_function(wrap_pyfunction!(product, m)?)?;
    m.add_function(wrap_pyfunction!(coproduct, m)?)?;
    m.add_function(wrap_pyfunction!(terminal, m)?)?;
    m.add_function(wrap_pyfunction!(fuzz, m)?)?;
    Ok(())
}
