//! Command-line front end: `run_command` parses an argument vector, runs
//! one command and returns the exit status with the text it produced.
//!
//! Exit status 0 means success, 1 a validation failure or a construction
//! that cannot be carried out for the given data, 2 a usage, I/O or parse
//! error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hlr_core::action::semidirect;
use hlr_core::category::{
    coequalizer, coproduct, equalizer, product, pullback, pushout, CmlMorphism, Construction, CrossedLModule,
    PeifferConvention,
};
use hlr_core::crossed::{cat1_to_cm, cm_to_cat1, roundtrip_iso_check, Cat4Mode, CrossedModule};
use hlr_core::document::{matrix_value, validate_document, AlgebraDocument, MorphismDocument, ValidateOptions};
use hlr_core::fuzz::{fuzz, MutationSpec};
use hlr_core::library;
use hlr_core::rational::parse_rational;
use hlr_core::rinehart::yau_twist;
use hlr_core::{Error, Matrix, ValidationReport};

#[derive(Parser, Debug)]
#[command(name = "hlr", version, about = "Exact checks and constructions for Hom-Leibniz-Rinehart algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Reading of the fourth cat¹ condition.
    #[arg(long, global = true, value_enum, default_value_t = Cat4Arg::Reconstructed)]
    cat4_mode: Cat4Arg,

    /// Sign convention for the Peiffer generators of coproducts and pushouts.
    #[arg(long, global = true, value_enum, default_value_t = PeifferArg::Printed)]
    peiffer_sign: PeifferArg,

    /// Write the primary output here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate any document.
    Validate { file: PathBuf },
    /// Semi-direct product of an action document.
    Semidirect { file: PathBuf },
    /// Cat¹-algebra of a crossed module.
    ToCat1 { file: PathBuf },
    /// Crossed module of a cat¹-algebra.
    ToCm { file: PathBuf },
    /// Crossed module → cat¹ → crossed module, with the isomorphism checks.
    Roundtrip { file: PathBuf },
    /// Equalizer of two parallel crossed L-module morphisms.
    Equalizer { f: PathBuf, g: PathBuf },
    /// Pullback of two crossed L-module morphisms with a common target.
    Pullback { f: PathBuf, g: PathBuf },
    /// Product of two crossed L-modules.
    Product { x: PathBuf, y: PathBuf },
    /// Coequalizer of two parallel crossed L-module morphisms.
    Coequalizer { f: PathBuf, g: PathBuf },
    /// Coproduct of two crossed L-modules.
    Coproduct { x: PathBuf, y: PathBuf },
    /// Pushout of two crossed L-module morphisms with a common source.
    Pushout { f: PathBuf, g: PathBuf },
    /// Validate morphism documents.
    CheckMorphism {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Yau twist of an HLR algebra; matrices are written row by row, e.g. "4,0;0,2".
    Twist { file: PathBuf, alpha: String, phi: String },
    /// List the built-in examples, or print one.
    Examples { name: Option<String> },
    /// Apply seeded single-coefficient mutations and validate each result.
    Fuzz {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Cat4Arg {
    Strict,
    Reconstructed,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PeifferArg {
    Printed,
    Signed,
    TwoSided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Exit status and captured streams of one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type CmdResult = Result<(i32, String), Failure>;

struct Ctx {
    opts: ValidateOptions,
    output: Option<PathBuf>,
    format: Format,
}

/// Runs one command. `argv[0]` is the program name.
pub fn run_command<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let ctx = Ctx {
        opts: ValidateOptions {
            cat4_mode: match cli.cat4_mode {
                Cat4Arg::Strict => Cat4Mode::Strict,
                Cat4Arg::Reconstructed => Cat4Mode::Reconstructed,
            },
            peiffer: match cli.peiffer_sign {
                PeifferArg::Printed => PeifferConvention::Printed,
                PeifferArg::Signed => PeifferConvention::Signed,
                PeifferArg::TwoSided => PeifferConvention::TwoSided,
            },
        },
        output: cli.output,
        format: cli.format,
    };
    match dispatch(&ctx, cli.command) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Core(e)) => {
            let code = match e {
                Error::Parse { .. } | Error::Shape(_) => 2,
                _ => 1,
            };
            Outcome {
                code,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

fn dispatch(ctx: &Ctx, command: Command) -> CmdResult {
    match command {
        Command::Validate { file } => cmd_validate(ctx, &file),
        Command::Semidirect { file } => {
            let doc = load(&file)?;
            let AlgebraDocument::Action(a) = doc else {
                return Err(wrong_kind(&file, "action", &doc));
            };
            let p = semidirect(&a)?;
            emit_document(ctx, &AlgebraDocument::Hlr(p), || {
                format!("semidirect product: dim {}\n", a.actor_dim() + a.target_dim())
            })
        }
        Command::ToCat1 { file } => {
            let cm = load_crossed(&file)?;
            let c = cm_to_cat1(&cm)?;
            let (np, nl) = (c.p_dim(), c.l_dim());
            emit_document(ctx, &AlgebraDocument::Cat1(c), || format!("cat1: dim P {np}, dim L {nl}\n"))
        }
        Command::ToCm { file } => {
            let doc = load(&file)?;
            let AlgebraDocument::Cat1(c) = doc else {
                return Err(wrong_kind(&file, "cat1", &doc));
            };
            let cm = cat1_to_cm(&c)?;
            let (nl, nm) = (cm.l_dim(), cm.m_dim());
            emit_document(ctx, &AlgebraDocument::CrossedModule(cm), || {
                format!("crossed module: dim L {nl}, dim M {nm}\n")
            })
        }
        Command::Roundtrip { file } => cmd_roundtrip(ctx, &file),
        Command::Equalizer { f, g } => {
            let (x, y, f) = load_cml_morphism(&f)?;
            let (x2, y2, g) = load_cml_morphism(&g)?;
            same_object(&x, &x2, "the two maps have different sources")?;
            same_object(&y, &y2, "the two maps have different targets")?;
            emit_construction(ctx, "equalizer", equalizer(&x, &y, &f, &g)?)
        }
        Command::Coequalizer { f, g } => {
            let (x, y, f) = load_cml_morphism(&f)?;
            let (x2, y2, g) = load_cml_morphism(&g)?;
            same_object(&x, &x2, "the two maps have different sources")?;
            same_object(&y, &y2, "the two maps have different targets")?;
            emit_construction(ctx, "coequalizer", coequalizer(&x, &y, &f, &g)?)
        }
        Command::Pullback { f, g } => {
            let (x, z, f) = load_cml_morphism(&f)?;
            let (y, z2, g) = load_cml_morphism(&g)?;
            same_object(&z, &z2, "the two maps have different targets")?;
            emit_construction(ctx, "pullback", pullback(&x, &y, &z, &f, &g)?)
        }
        Command::Pushout { f, g } => {
            let (e, x, f) = load_cml_morphism(&f)?;
            let (e2, y, g) = load_cml_morphism(&g)?;
            same_object(&e, &e2, "the two maps have different sources")?;
            emit_construction(ctx, "pushout", pushout(&e, &x, &y, &f, &g, ctx.opts.peiffer)?)
        }
        Command::Product { x, y } => {
            let (x, y) = (CrossedLModule::new(load_crossed(&x)?)?, CrossedLModule::new(load_crossed(&y)?)?);
            emit_construction(ctx, "product", product(&x, &y)?)
        }
        Command::Coproduct { x, y } => {
            let (x, y) = (CrossedLModule::new(load_crossed(&x)?)?, CrossedLModule::new(load_crossed(&y)?)?);
            emit_construction(ctx, "coproduct", coproduct(&x, &y, ctx.opts.peiffer)?)
        }
        Command::CheckMorphism { files } => cmd_check_morphism(ctx, &files),
        Command::Twist { file, alpha, phi } => {
            let doc = load(&file)?;
            let AlgebraDocument::Hlr(x) = doc else {
                return Err(wrong_kind(&file, "hlr", &doc));
            };
            let alpha = parse_matrix(&alpha).map_err(|m| Failure::Usage(format!("alpha: {m}")))?;
            let phi = parse_matrix(&phi).map_err(|m| Failure::Usage(format!("phi: {m}")))?;
            let t = yau_twist(&x, &alpha, &phi)?;
            let n = t.dim();
            emit_document(ctx, &AlgebraDocument::Hlr(t), || format!("twisted hlr algebra: dim {n}\n"))
        }
        Command::Examples { name } => match name {
            None => {
                let mut out = String::new();
                for n in library::names() {
                    out.push_str(n);
                    out.push('\n');
                }
                write_primary(ctx, out)
            }
            Some(n) => {
                let doc = library::get(&n).ok_or_else(|| Failure::Usage(format!("no built-in example named {n:?}")))?;
                emit_document(ctx, &doc, || format!("{n}: {}\n", doc.kind()))
            }
        },
        Command::Fuzz { file, seed, count } => cmd_fuzz(ctx, &file, seed, count),
    }
}

fn load(path: &Path) -> Result<AlgebraDocument, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    AlgebraDocument::parse(&text).map_err(|e| match e {
        Error::Parse { path: p, message } => Failure::Core(Error::Parse {
            path: format!("{}: {p}", path.display()),
            message,
        }),
        other => Failure::Core(other),
    })
}

fn wrong_kind(path: &Path, expected: &str, doc: &AlgebraDocument) -> Failure {
    Failure::Usage(format!("{}: expected a {expected} document, found {}", path.display(), doc.kind()))
}

fn load_crossed(path: &Path) -> Result<CrossedModule, Failure> {
    match load(path)? {
        AlgebraDocument::CrossedModule(cm) => Ok(cm),
        other => Err(wrong_kind(path, "crossed-module", &other)),
    }
}

fn load_cml_morphism(path: &Path) -> Result<(CrossedLModule, CrossedLModule, CmlMorphism), Failure> {
    match load(path)? {
        AlgebraDocument::Morphism(MorphismDocument::CrossedL { lambda, source, target }) => Ok((
            CrossedLModule::new(source)?,
            CrossedLModule::new(target)?,
            CmlMorphism::new(lambda),
        )),
        other => Err(wrong_kind(path, "crossed-l-module morphism", &other)),
    }
}

fn same_object(a: &CrossedLModule, b: &CrossedLModule, msg: &str) -> Result<(), Failure> {
    if a == b {
        Ok(())
    } else {
        Err(Failure::Usage(msg.into()))
    }
}

/// Parses `"a,b;c,d"` into a matrix.
fn parse_matrix(text: &str) -> Result<Matrix, String> {
    let rows: Vec<Vec<_>> = text
        .split(';')
        .map(|r| r.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>())
        .collect::<Result<_, _>>()?;
    let cols = rows.first().map_or(0, |r| r.len());
    Matrix::from_rows(rows, cols).map_err(|e| e.to_string())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

fn write_primary(ctx: &Ctx, text: String) -> CmdResult {
    match &ctx.output {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            Ok((0, String::new()))
        }
        None => Ok((0, text)),
    }
}

/// Writes a document to `--output` and a summary to standard output, or the
/// document itself to standard output.
fn emit_document(ctx: &Ctx, doc: &AlgebraDocument, summary: impl FnOnce() -> String) -> CmdResult {
    match &ctx.output {
        Some(path) => {
            std::fs::write(path, doc.to_json())
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            let s = summary();
            Ok((
                0,
                match ctx.format {
                    Format::Text => s,
                    Format::Json => pretty(&json!({"kind": doc.kind(), "summary": s.trim_end()})),
                },
            ))
        }
        None => Ok((0, doc.to_json())),
    }
}

fn emit_construction(ctx: &Ctx, what: &str, c: Construction) -> CmdResult {
    let doc = AlgebraDocument::CrossedModule(c.object.cm.clone());
    let (rounds, ideal) = (c.closure_rounds, c.ideal.as_ref().map(|i| i.dim()));
    let summary = match ctx.format {
        Format::Text => {
            let mut s = format!("{what}: dim {}\n", c.object.dim());
            for (k, leg) in c.legs.iter().enumerate() {
                let _ = writeln!(s, "leg {}: {}", k + 1, matrix_text(&leg.lambda));
            }
            if let (Some(r), Some(d)) = (rounds, ideal) {
                let _ = writeln!(s, "ideal: dim {d} in ambient dim {} after {r} closure round(s)", c.ambient_dim);
            }
            for n in &c.notes {
                let _ = writeln!(s, "# {n}");
            }
            s
        }
        Format::Json => pretty(&json!({
            "construction": what,
            "dim": c.object.dim(),
            "legs": c.legs.iter().map(|l| matrix_value(&l.lambda)).collect::<Vec<_>>(),
            "idealDim": ideal,
            "closureRounds": rounds,
            "ambientDim": c.ambient_dim,
            "notes": c.notes,
        })),
    };
    match &ctx.output {
        Some(path) => {
            std::fs::write(path, doc.to_json())
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            Ok((0, summary))
        }
        None => Ok((0, doc.to_json())),
    }
}

fn matrix_text(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
        .collect();
    format!("{}x{} [{}]", m.rows(), m.cols(), rows.join("; "))
}

fn report_text(header: &str, r: &ValidationReport, format: Format) -> String {
    match format {
        Format::Text => format!("{header}\n{r}"),
        Format::Json => {
            let mut v = r.to_json();
            v["subject"] = Value::String(header.to_string());
            pretty(&v)
        }
    }
}

fn cmd_validate(ctx: &Ctx, file: &Path) -> CmdResult {
    let doc = load(file)?;
    let r = validate_document(&doc, &ctx.opts)?;
    let code = if r.is_valid() { 0 } else { 1 };
    let (_, out) = write_primary(ctx, report_text(doc.kind(), &r, ctx.format))?;
    Ok((code, out))
}

fn cmd_check_morphism(ctx: &Ctx, files: &[PathBuf]) -> CmdResult {
    let mut code = 0;
    let mut text = String::new();
    let mut values = Vec::new();
    for f in files {
        let doc = load(f)?;
        let AlgebraDocument::Morphism(m) = &doc else {
            return Err(wrong_kind(f, "morphism", &doc));
        };
        let r = validate_document(&doc, &ctx.opts)?;
        if !r.is_valid() {
            code = 1;
        }
        let header = format!("morphism ({})", m.variant());
        match ctx.format {
            Format::Text => text.push_str(&report_text(&header, &r, Format::Text)),
            Format::Json => {
                let mut v = r.to_json();
                v["subject"] = Value::String(header);
                values.push(v);
            }
        }
    }
    if ctx.format == Format::Json {
        text = pretty(&Value::Array(values));
    }
    let (_, out) = write_primary(ctx, text)?;
    Ok((code, out))
}

fn cmd_roundtrip(ctx: &Ctx, file: &Path) -> CmdResult {
    let cm = load_crossed(file)?;
    let rt = roundtrip_iso_check(&cm)?;
    let code = if rt.twist_report.is_valid() { 0 } else { 1 };
    let text = match ctx.format {
        Format::Text => {
            let mut s = String::from("round trip: recovered crossed module equals the input\n");
            s.push_str(&report_text("identity pair", &rt.identity_report, Format::Text));
            let inv = if rt.twist_pair.is_isomorphism() { "invertible" } else { "not invertible" };
            s.push_str(&report_text(&format!("twist pair (alpha_M, alpha_L), {inv}"), &rt.twist_report, Format::Text));
            s
        }
        Format::Json => pretty(&json!({
            "recoveredEqualsInput": true,
            "identity": rt.identity_report.to_json(),
            "twistPair": {
                "phi": matrix_value(&rt.twist_pair.phi_map),
                "psi": matrix_value(&rt.twist_pair.psi_map),
                "invertible": rt.twist_pair.is_isomorphism(),
                "report": rt.twist_report.to_json(),
            },
        })),
    };
    let (_, out) = write_primary(ctx, text)?;
    Ok((code, out))
}

fn cmd_fuzz(ctx: &Ctx, file: &Path, seed: u64, count: u64) -> CmdResult {
    let doc = load(file)?;
    let mut lines = String::new();
    let mut values = Vec::new();
    for s in seed..seed.saturating_add(count) {
        let (mutated, m) = fuzz(&doc, &MutationSpec::seeded(s))?;
        let verdict = match validate_document(&mutated, &ctx.opts) {
            Ok(r) if r.is_valid() => Ok(Vec::new()),
            Ok(r) => Ok(r.tags().into_iter().collect()),
            Err(e) => Err(e.to_string()),
        };
        match ctx.format {
            Format::Text => {
                let v = match &verdict {
                    Ok(t) if t.is_empty() => "accepted".to_string(),
                    Ok(t) => format!("rejected [{}]", t.join(", ")),
                    Err(e) => format!("rejected ({})", e.lines().next().unwrap_or_default()),
                };
                let _ = writeln!(lines, "seed {s}: {} {} -> {}: {v}", m.path, m.before, m.after);
            }
            Format::Json => values.push(json!({
                "seed": s,
                "path": m.path,
                "before": m.before.to_string(),
                "after": m.after.to_string(),
                "rejected": !matches!(&verdict, Ok(t) if t.is_empty()),
                "tags": verdict.as_ref().ok(),
                "error": verdict.as_ref().err(),
            })),
        }
    }
    if ctx.format == Format::Json {
        lines = pretty(&Value::Array(values));
    }
    write_primary(ctx, lines)
}
