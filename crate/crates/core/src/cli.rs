//! The `folcan` command line.
//!
//! [`run`] takes the argument list and returns the exit status together with
//! what would be written to stdout and stderr, so the binary is a thin
//! wrapper and tests can drive the CLI in-process.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{kx2_bounds, kx2_candidates};
use crate::constructions::{
    abelian_double_cover, ruled_double_cover, AbelianCoverInput, ConstructionReport,
    RuledCoverInput,
};
use crate::enumerate::{enumerate_hilbert_with_workers, EnumerationQuery, QIndexRule};
use crate::error::Error;
use crate::exact::{Rational, RationalVector};
use crate::io::{
    basket_entries, to_json, HilbertFunctionDocument, ModelDocument, NumericsDocument,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "folcan",
    version,
    about = "Exact numerical invariants of foliated surfaces"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Worker threads for `enumerate`.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: u64,
    /// Write the document here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mumford pullbacks and intersection numbers for a model document.
    Intersect {
        #[arg(long)]
        model: PathBuf,
    },
    /// Tabulate P(m) for a numerics document.
    Hilbert {
        #[arg(long)]
        numerics: PathBuf,
        #[arg(long)]
        mmax: u64,
    },
    /// Enumerate the Hilbert functions with fixed K_F^2, K_F.K_X and Q-index.
    Enumerate(EnumerateArgs),
    /// Admissible range of K_X^2 and the numerics of D = 4s K_F + K_X.
    Bounds {
        #[arg(long, allow_hyphen_values = true)]
        k1: Rational,
        #[arg(long, allow_hyphen_values = true)]
        k2: Rational,
        #[arg(long)]
        s: u64,
        #[arg(long, allow_hyphen_values = true)]
        kx2: Option<Rational>,
    },
    /// Double-cover example families.
    #[command(subcommand)]
    Example(ExampleCommand),
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub k1: Rational,
    #[arg(long, allow_hyphen_values = true)]
    pub k2: Rational,
    #[arg(long)]
    pub s: u64,
    /// Comma-separated values of chi(O_X).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub chi: Vec<i64>,
    #[arg(long, default_value_t = 0)]
    pub cap: usize,
    #[arg(long, default_value_t = 0)]
    pub max_cusps: usize,
    /// Leave cusps out entirely.
    #[arg(long)]
    pub no_cusps: bool,
    /// Accept baskets whose Q-index divides s instead of equalling it.
    #[arg(long)]
    pub q_index_divides: bool,
}

#[derive(Debug, Subcommand)]
pub enum ExampleCommand {
    /// Double cover of a ruled surface over a curve of genus q.
    Ruled {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        g: i64,
        #[arg(long)]
        q: i64,
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<i64>,
        /// Parameter sweep such as `q=0..10` (inclusive).
        #[arg(long)]
        sweep: Option<String>,
    },
    /// Double cover of E x E, fibred by y - n x.
    Abelian {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<i64>,
        #[arg(long)]
        sweep: Option<String>,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A structured error: `{code, message, context}`.
#[derive(Debug, Clone, Serialize)]
pub struct CliError {
    pub code: String,
    pub message: String,
    pub context: Value,
    #[serde(skip)]
    pub status: i32,
}

impl CliError {
    fn io(path: &Path, err: std::io::Error) -> Self {
        CliError {
            code: "Io".into(),
            message: err.to_string(),
            context: json!({ "path": path.display().to_string() }),
            status: 1,
        }
    }

    fn parse(path: &Path, err: serde_json::Error) -> Self {
        CliError {
            code: "ParseDocument".into(),
            message: err.to_string(),
            context: json!({ "path": path.display().to_string() }),
            status: 1,
        }
    }

    fn usage(message: String) -> Self {
        CliError {
            code: "Usage".into(),
            message,
            context: Value::Null,
            status: 1,
        }
    }

    fn library(err: Error, context: Value) -> Self {
        CliError {
            code: err.code().into(),
            message: err.to_string(),
            context,
            status: if err.is_validation() { 2 } else { 1 },
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    status: 0,
                    stdout: e.to_string(),
                    stderr: String::new(),
                },
                _ => failure(CliError::usage(e.to_string())),
            };
        }
    };
    match execute(&cli) {
        Ok(document) => match &cli.out {
            Some(path) => match std::fs::write(path, &document) {
                Ok(()) => Outcome {
                    status: 0,
                    stdout: String::new(),
                    stderr: String::new(),
                },
                Err(e) => failure(CliError::io(path, e)),
            },
            None => Outcome {
                status: 0,
                stdout: document,
                stderr: String::new(),
            },
        },
        Err(e) => failure(e),
    }
}

fn failure(err: CliError) -> Outcome {
    Outcome {
        status: err.status,
        stdout: String::new(),
        stderr: to_json(&json!({ "error": err })),
    }
}

fn execute(cli: &Cli) -> CliResult<String> {
    match &cli.command {
        Command::Intersect { model } => intersect(model, cli.format),
        Command::Hilbert { numerics, mmax } => hilbert(numerics, *mmax, cli.format),
        Command::Enumerate(args) => enumerate(args, cli.workers as usize, cli.format),
        Command::Bounds { k1, k2, s, kx2 } => bounds(k1, k2, *s, kx2.as_ref(), cli.format),
        Command::Example(example) => example_command(example, cli.format),
    }
}

fn read_document<T: serde::de::DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::parse(path, e))
}

fn path_context(command: &str, path: &Path) -> Value {
    json!({ "command": command, "path": path.display().to_string() })
}

#[derive(Serialize)]
struct PairingRow {
    a: String,
    b: String,
    value: Rational,
}

fn pairing_table(
    classes: &BTreeMap<String, RationalVector>,
    mut pair: impl FnMut(&RationalVector, &RationalVector) -> crate::Result<Rational>,
) -> crate::Result<Vec<PairingRow>> {
    let entries: Vec<(&String, &RationalVector)> = classes.iter().collect();
    let mut rows = Vec::new();
    for (i, (a, u)) in entries.iter().enumerate() {
        for (b, v) in &entries[i..] {
            rows.push(PairingRow {
                a: (*a).clone(),
                b: (*b).clone(),
                value: pair(u, v)?,
            });
        }
    }
    Ok(rows)
}

fn intersect(path: &Path, format: OutputFormat) -> CliResult<String> {
    let doc: ModelDocument = read_document(path)?;
    let ctx = || path_context("intersect", path);
    let lib = |e| CliError::library(e, ctx());
    let model = doc.surface_model().map_err(lib)?;
    let mut classes = model.distinguished_classes().clone();
    if let Some(k) = model.canonical_class() {
        classes.insert("K".into(), k.clone());
    }
    let lattice = pairing_table(&classes, |u, v| model.intersect(u, v)).map_err(lib)?;

    let resolution = doc.resolution_data().map_err(lib)?;
    let mut weil_rows = Vec::new();
    let resolution_json = match &resolution {
        None => Value::Null,
        Some(res) => {
            let mut pullbacks = BTreeMap::new();
            let mut coefficients = BTreeMap::new();
            for (label, strict) in res.strict_transforms() {
                pullbacks.insert(label.clone(), res.mumford_pullback(strict).map_err(lib)?);
                coefficients.insert(
                    label.clone(),
                    res.pullback_coefficients(strict).map_err(lib)?,
                );
            }
            weil_rows = pairing_table(res.strict_transforms(), |u, v| res.weil_intersect(u, v))
                .map_err(lib)?;
            json!({
                "exceptional_indices": res.exceptional_indices(),
                "exceptional_signature": res.exceptional_gram().signature(),
                "pullback_coefficients": coefficients,
                "pullbacks": pullbacks,
                "weil_pairings": weil_rows,
            })
        }
    };
    match format {
        OutputFormat::Json => Ok(to_json(&json!({
            "basis_labels": model.basis_labels(),
            "signature": model.pairing().signature(),
            "pairings": lattice,
            "resolution": resolution_json,
        }))),
        OutputFormat::Csv => {
            let mut out = String::from("table,a,b,value\n");
            for row in &lattice {
                writeln!(out, "lattice,{},{},{}", row.a, row.b, row.value).unwrap();
            }
            for row in &weil_rows {
                writeln!(out, "weil,{},{},{}", row.a, row.b, row.value).unwrap();
            }
            Ok(out)
        }
    }
}

fn hilbert(path: &Path, mmax: u64, format: OutputFormat) -> CliResult<String> {
    let doc: NumericsDocument = read_document(path)?;
    let num = doc
        .numerics()
        .map_err(|e| CliError::library(e, path_context("hilbert", path)))?;
    let values: Vec<Rational> = (0..=mmax).map(|m| num.hilbert_value(m)).collect();
    match format {
        OutputFormat::Csv => {
            let mut out = String::from("m,P\n");
            for (m, p) in values.iter().enumerate() {
                writeln!(out, "{m},{p}").unwrap();
            }
            Ok(out)
        }
        OutputFormat::Json => {
            let function = num.to_hilbert_function().ok();
            let rows: Vec<Value> = values
                .iter()
                .enumerate()
                .map(|(m, p)| json!({ "m": m, "P": p }))
                .collect();
            Ok(to_json(&json!({
                "numerics": NumericsDocument::from_numerics(&num),
                "integral": function.is_some(),
                "integrality_window": num.integrality_window(),
                "hilbert_function": function.as_ref().map(HilbertFunctionDocument::from_function),
                "second_difference_ok": function.as_ref().map(|h| h.second_difference_check()),
                "extrapolated": (1..=mmax).any(|m| num.basket.is_extrapolated(m)),
                "values": rows,
            })))
        }
    }
}

fn enumerate(args: &EnumerateArgs, workers: usize, format: OutputFormat) -> CliResult<String> {
    let mut query = EnumerationQuery::new(args.k1.clone(), args.k2.clone(), args.s)
        .chi(args.chi.iter().copied())
        .cap(args.cap)
        .max_cusps(args.max_cusps);
    query.include_cusps = !args.no_cusps;
    if args.q_index_divides {
        query = query.q_index_rule(QIndexRule::Divides);
    }
    let ctx = json!({ "command": "enumerate", "k1": args.k1, "k2": args.k2, "s": args.s });
    let found =
        enumerate_hilbert_with_workers(&query, workers).map_err(|e| CliError::library(e, ctx))?;
    match format {
        OutputFormat::Json => {
            let functions: Vec<Value> = found
                .iter()
                .map(|f| {
                    let window = f.function.integrality_window();
                    json!({
                        "canonical": HilbertFunctionDocument::from_function(&f.function),
                        "integrality_window": window,
                        "witnesses": f.witnesses.iter().map(basket_entries).collect::<Vec<_>>(),
                        "witness_labels": f.witnesses.iter().map(|b| b.label()).collect::<Vec<_>>(),
                        "values": f.function.values(0..=2 * window),
                    })
                })
                .collect();
            Ok(to_json(&json!({
                "query": {
                    "k1": args.k1,
                    "k2": args.k2,
                    "s": args.s,
                    "chi": query.chi_set,
                    "cap": args.cap,
                    "max_cusps": args.max_cusps,
                    "include_cusps": query.include_cusps,
                    "q_index_rule": if args.q_index_divides { "divides" } else { "equal" },
                },
                "count": found.len(),
                "functions": functions,
            })))
        }
        OutputFormat::Csv => {
            let mut out = String::from("index,k1,k2,chi,period,correction,witnesses\n");
            for (i, f) in found.iter().enumerate() {
                let h = &f.function;
                let correction: Vec<String> =
                    h.correction.iter().map(ToString::to_string).collect();
                let witnesses: Vec<String> = f.witnesses.iter().map(|b| b.label()).collect();
                writeln!(
                    out,
                    "{i},{},{},{},{},{},\"{}\"",
                    h.k1,
                    h.k2,
                    h.chi,
                    h.period,
                    correction.join(";"),
                    witnesses.join(";")
                )
                .unwrap();
            }
            Ok(out)
        }
    }
}

fn bounds(
    k1: &Rational,
    k2: &Rational,
    s: u64,
    kx2: Option<&Rational>,
    format: OutputFormat,
) -> CliResult<String> {
    let ctx = json!({ "command": "bounds", "k1": k1, "k2": k2, "s": s });
    let mut report = kx2_bounds(k1, k2, s).map_err(|e| CliError::library(e, ctx))?;
    let candidates = kx2_candidates(&report, s).len();
    let admitted = kx2.map(|v| report.admits(v));
    if let Some(v) = kx2 {
        report = report.with_kx2(k1, k2, v, s);
    }
    let mut flat = serde_json::Map::new();
    flat.insert("k1".into(), json!(k1));
    flat.insert("k2".into(), json!(k2));
    flat.insert("s".into(), json!(s));
    if let Value::Object(fields) = json!(report) {
        flat.extend(fields);
    }
    flat.insert("kx2_lattice_candidates".into(), json!(candidates));
    if let (Some(v), Some(ok)) = (kx2, admitted) {
        flat.insert("kx2".into(), json!(v));
        flat.insert("kx2_admissible".into(), json!(ok));
    }
    Ok(render_flat(&flat, format))
}

fn render_flat(flat: &serde_json::Map<String, Value>, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(flat),
        OutputFormat::Csv => {
            let mut out = String::from("key,value\n");
            for (k, v) in flat {
                writeln!(out, "{k},{}", csv_cell(v)).unwrap();
            }
            out
        }
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(csv_cell).collect();
            format!("\"{}\"", inner.join(" "))
        }
        other => other.to_string(),
    }
}

fn flatten_report(
    params: &BTreeMap<String, i64>,
    chi: Option<i64>,
    family: &str,
    rep: &ConstructionReport,
) -> serde_json::Map<String, Value> {
    let mut flat = serde_json::Map::new();
    flat.insert("family".into(), json!(family));
    for (name, value) in params {
        flat.insert(name.clone(), json!(value));
    }
    flat.insert("kf2".into(), json!(rep.kf2));
    flat.insert("kf_dot_kx".into(), json!(rep.kf_dot_kx));
    flat.insert("kx2".into(), json!(rep.kx2));
    flat.insert("fiber_genus".into(), json!(rep.fiber_genus));
    flat.insert("basis".into(), json!(rep.basis));
    for (name, class) in &rep.classes {
        flat.insert(format!("class:{name}"), json!(class));
    }
    for (name, value) in &rep.numbers {
        flat.insert(name.clone(), json!(value));
    }
    flat.insert("assumptions".into(), json!(rep.assumptions));
    if let Some(chi) = chi {
        let num = rep.numerics(chi);
        flat.insert("chi".into(), json!(chi));
        flat.insert("integral".into(), json!(num.integrality_check()));
    }
    flat
}

/// Parses `name=a..b` (inclusive).
fn parse_sweep(arg: &str, allowed: &[&str]) -> CliResult<(String, Vec<i64>)> {
    let bad = || {
        CliError::usage(format!(
            "sweep must look like name=a..b with name in {allowed:?}, got {arg:?}"
        ))
    };
    let (name, range) = arg.split_once('=').ok_or_else(bad)?;
    if !allowed.contains(&name) {
        return Err(bad());
    }
    let (a, b) = range.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.parse().map_err(|_| bad())?;
    let b: i64 = b.parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((name.to_string(), (a..=b).collect()))
}

fn example_command(cmd: &ExampleCommand, format: OutputFormat) -> CliResult<String> {
    type Build = Box<dyn Fn(&BTreeMap<String, i64>) -> crate::Result<ConstructionReport>>;
    let (family, mut params, chi, sweep, build): (
        &str,
        BTreeMap<String, i64>,
        Option<i64>,
        Option<&String>,
        Build,
    ) = match cmd {
        ExampleCommand::Ruled {
            k,
            g,
            q,
            chi,
            sweep,
        } => (
            "ruled",
            BTreeMap::from([("k".into(), *k), ("g".into(), *g), ("q".into(), *q)]),
            *chi,
            sweep.as_ref(),
            Box::new(|p| {
                ruled_double_cover(RuledCoverInput {
                    k: p["k"],
                    g: p["g"],
                    q: p["q"],
                })
            }),
        ),
        ExampleCommand::Abelian { d, n, chi, sweep } => (
            "abelian",
            BTreeMap::from([("d".into(), *d), ("n".into(), *n)]),
            *chi,
            sweep.as_ref(),
            Box::new(|p| {
                abelian_double_cover(AbelianCoverInput {
                    d: p["d"],
                    n: p["n"],
                })
            }),
        ),
    };
    let names: Vec<String> = params.keys().cloned().collect();
    let allowed: Vec<&str> = names.iter().map(String::as_str).collect();
    let ctx = |p: &BTreeMap<String, i64>| json!({ "command": "example", "family": family, "parameters": p });

    let Some(sweep) = sweep else {
        let rep = build(&params).map_err(|e| CliError::library(e, ctx(&params)))?;
        return Ok(render_flat(
            &flatten_report(&params, chi, family, &rep),
            format,
        ));
    };
    let (name, values) = parse_sweep(sweep, &allowed)?;
    let mut rows = Vec::new();
    for v in values {
        params.insert(name.clone(), v);
        let rep = build(&params).map_err(|e| CliError::library(e, ctx(&params)))?;
        rows.push((params.clone(), rep));
    }
    match format {
        OutputFormat::Json => {
            let docs: Vec<Value> = rows
                .iter()
                .map(|(p, rep)| Value::Object(flatten_report(p, chi, family, rep)))
                .collect();
            Ok(to_json(&docs))
        }
        OutputFormat::Csv => {
            let mut out = names.join(",");
            out.push_str(",kf2,kf_dot_kx,kx2,fiber_genus\n");
            for (p, rep) in &rows {
                let cells: Vec<String> = p.values().map(ToString::to_string).collect();
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    cells.join(","),
                    rep.kf2,
                    rep.kf_dot_kx,
                    rep.kx2,
                    rep.fiber_genus
                )
                .unwrap();
            }
            Ok(out)
        }
    }
}
