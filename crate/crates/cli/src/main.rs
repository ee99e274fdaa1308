//! `topoforge` — command-line front end for the workspace.
//!
//! Thin, single-threaded plumbing around `topoforge-core` and
//! `topoforge-verifier`: read JSON documents, call the library, print JSON
//! lines. Only `sweep` fans out, and that happens inside the verifier.
//!
//! Exit codes: 0 success, 1 counterexample(s) found (`sweep`/`check`),
//! 2 input error, 3 capability limit. Code 4 is reserved for a dual-route
//! disagreement, which is a bug in this artifact rather than in the input.
//!
//! The env var `TOPOFORGE_MAX_N` lowers the carrier caps below the built-in
//! limits; it can never raise them, because the library enforces its own.

use std::fmt;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use topoforge_core::codec::{FunctionDoc, OperatorDoc, TopologyDoc};
use topoforge_core::maps::ConnectivityVariant;
use topoforge_core::openclasses::{
    class_family, is_b_open_variant, t12_open_family, t_open_family, BVariant, ClassKind,
};
use topoforge_core::{
    enumerate_topologies, ErrorKind, FiniteTopology, OperatorTable, PointSet, TopoError,
};
use topoforge_verifier::{
    cross_validate, evaluate, find_intersection_witness, run_sweep, CheckOptions, Classification,
    InstanceData, InstanceDoc, PoolSpec, SweepConfig, TheoremId, Verdict, VerifierError,
    ALL_THEOREMS, DEFAULT_FN_CELL_CAP, DEFAULT_SEEDED_EXTRAS,
};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAPABILITY: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

/// Finite-topology workbench: enumerate spaces, classify subsets, run
/// operator-indexed closures, and stress-test bi-operator claims.
#[derive(Parser)]
#[command(name = "topoforge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every topology on an n-point carrier, ascending by encoding.
    Enumerate {
        /// Carrier size (number of points).
        #[arg(long)]
        n: usize,
    },
    /// Print generalized-open families of a space, one JSON line per class.
    Classify {
        /// Topology document: {"n": 2, "opens": [0, 1, 3]}.
        #[arg(long, value_name = "FILE")]
        space: PathBuf,
        /// Operator pair document {"t1": OP, "t2": OP}; each OP is either
        /// {"builtin": "closure"} or {"n": 2, "images": [...]}.
        #[arg(long, value_name = "FILE")]
        operators: Option<PathBuf>,
        /// Restrict output to one class; default prints every class the
        /// given documents support.
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
    },
    /// Closure of one subset: topological by default, bi-operator with --t12.
    Closure {
        /// Topology document.
        #[arg(long, value_name = "FILE")]
        space: PathBuf,
        /// Operator pair document; required with --t12.
        #[arg(long, value_name = "FILE")]
        operators: Option<PathBuf>,
        /// Subset to close, as a bitmask over the carrier.
        #[arg(long, value_name = "MASK")]
        set: u32,
        /// Close under the bi-operator family induced by t1 and t2.
        #[arg(long)]
        t12: bool,
    },
    /// Evaluate one claim instance and cross-check it on the naive route.
    Check {
        /// Claim id; unique prefixes are accepted ("T48" for
        /// "T48_graph_function").
        #[arg(long, value_name = "ID")]
        theorem: String,
        /// Instance document; an optional "theorem" field must agree with
        /// the flag.
        #[arg(long, value_name = "FILE")]
        instance: PathBuf,
        #[command(flatten)]
        variants: VariantFlags,
    },
    /// Sweep every instance of a claim up to a carrier bound, streaming a
    /// JSON-lines report. Exits 1 when the sweep found counterexamples.
    Sweep {
        /// Claim id; unique prefixes are accepted.
        #[arg(long, value_name = "ID")]
        theorem: String,
        /// Largest carrier swept, for domains and codomains alike.
        #[arg(long, value_name = "K")]
        max_n: usize,
        /// Root seed; recorded in the report summary.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Operator pool: builtins, exhaustive, or seeded[:COUNT].
        #[arg(long, default_value = "builtins")]
        pool: String,
        /// Function draws per sweep cell before sampling kicks in.
        #[arg(long, value_name = "N", default_value_t = DEFAULT_FN_CELL_CAP)]
        cell_cap: usize,
        /// Write the report to this file instead of standard output; the
        /// summary line is still echoed.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[command(flatten)]
        variants: VariantFlags,
    },
    /// Find the first bi-operator pair, in canonical order, whose open sets
    /// have a non-open intersection. Prints the witness object, or null if
    /// the scanned range has none.
    Witness {
        /// Largest carrier scanned.
        #[arg(long, value_name = "K", default_value_t = 3)]
        max_n: usize,
        /// Seed for the operator pool (only the seeded pool uses it).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Operator pool: builtins, exhaustive, or seeded[:COUNT].
        #[arg(long, default_value = "builtins")]
        pool: String,
    },
    /// Validate a topology, operator, or function document and write its
    /// canonical form.
    Export {
        /// Document to normalize; the kind is detected from its fields.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Topology used to tabulate a {"builtin": ...} operator document.
        #[arg(long, value_name = "FILE")]
        space: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Read a canonical document back, validate it, and re-emit it. Importing
    /// what export wrote reproduces the bytes exactly.
    Import {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Topology used to tabulate a {"builtin": ...} operator document.
        #[arg(long, value_name = "FILE")]
        space: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

/// Alternate hypothesis readings, available wherever a claim is evaluated.
#[derive(Args)]
struct VariantFlags {
    /// Check union stability under "preserves binary unions" instead of the
    /// default monotonicity hypothesis.
    #[arg(long)]
    union_hypothesis: bool,
    /// Count overlapping bi-operator covers as disconnections too, instead
    /// of only disjoint ones.
    #[arg(long)]
    literal_connectivity: bool,
}

impl VariantFlags {
    fn to_options(&self) -> CheckOptions {
        CheckOptions {
            l42_union_hypothesis: self.union_hypothesis,
            connectivity: if self.literal_connectivity {
                ConnectivityVariant::Literal
            } else {
                ConnectivityVariant::Disjoint
            },
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Semi,
    Pre,
    B,
    /// Closure applied to the whole union: A ⊆ Cl(Int A ∪ Int(Cl A)).
    BClosureUnion,
    /// Plain interior in the second disjunct: A ⊆ Cl(Int A) ∪ Int A.
    BPlainInterior,
    Open,
    Closed,
    /// Operator-open under t1: needs an operators file.
    T,
    /// Bi-operator-open under (t1, t2): needs both operators.
    T12,
}

impl ClassArg {
    fn name(self) -> &'static str {
        match self {
            ClassArg::Semi => "semi",
            ClassArg::Pre => "pre",
            ClassArg::B => "b",
            ClassArg::BClosureUnion => "b-closure-union",
            ClassArg::BPlainInterior => "b-plain-interior",
            ClassArg::Open => "open",
            ClassArg::Closed => "closed",
            ClassArg::T => "t",
            ClassArg::T12 => "t12",
        }
    }
}

#[derive(Debug)]
enum CliError {
    Core(TopoError),
    Verifier(VerifierError),
    Json(serde_json::Error),
    File { path: String, source: io::Error },
    Io(io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Verifier(e) => write!(f, "{e}"),
            CliError::Json(e) => write!(f, "invalid JSON: {e}"),
            CliError::File { path, source } => write!(f, "{path}: {source}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        fn topo(e: &TopoError) -> u8 {
            match e.kind() {
                ErrorKind::Input => EXIT_INPUT,
                ErrorKind::Capability => EXIT_CAPABILITY,
            }
        }
        match self {
            CliError::Core(e) => topo(e),
            CliError::Verifier(VerifierError::Core(e)) => topo(e),
            CliError::Verifier(VerifierError::Divergence { .. }) => EXIT_INTERNAL,
            _ => EXIT_INPUT,
        }
    }
}

impl From<TopoError> for CliError {
    fn from(e: TopoError) -> CliError {
        CliError::Core(e)
    }
}

impl From<VerifierError> for CliError {
    fn from(e: VerifierError) -> CliError {
        CliError::Verifier(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> CliError {
        CliError::Json(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> CliError {
        CliError::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Enumerate { n } => cmd_enumerate(n),
        Command::Classify { space, operators, class } => cmd_classify(&space, operators, class),
        Command::Closure { space, operators, set, t12 } => {
            cmd_closure(&space, operators, set, t12)
        }
        Command::Check { theorem, instance, variants } => {
            cmd_check(&theorem, &instance, &variants.to_options())
        }
        Command::Sweep { theorem, max_n, seed, pool, cell_cap, out, variants } => {
            cmd_sweep(&theorem, max_n, seed, &pool, cell_cap, out, &variants.to_options())
        }
        Command::Witness { max_n, seed, pool } => cmd_witness(max_n, seed, &pool),
        Command::Export { input, space, out } | Command::Import { input, space, out } => {
            cmd_normalize(&input, space, out)
        }
    }
}

/// The env override may tighten carrier limits for every command; the
/// library's own caps still apply underneath.
fn enforce_env_cap(n: usize) -> Result<(), TopoError> {
    let raw = match std::env::var("TOPOFORGE_MAX_N") {
        Ok(raw) => raw,
        Err(std::env::VarError::NotPresent) => return Ok(()),
        Err(std::env::VarError::NotUnicode(_)) => {
            return Err(TopoError::InvalidField {
                field: "TOPOFORGE_MAX_N",
                message: "value is not valid unicode".into(),
            })
        }
    };
    let cap: usize = raw.trim().parse().map_err(|_| TopoError::InvalidField {
        field: "TOPOFORGE_MAX_N",
        message: format!("expected a number, got {raw:?}"),
    })?;
    if n > cap {
        return Err(TopoError::CarrierTooLarge { n, max: cap });
    }
    Ok(())
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|source| CliError::File { path: path.display().to_string(), source })
}

fn read_topology(path: &Path) -> Result<FiniteTopology, CliError> {
    let doc: TopologyDoc = serde_json::from_str(&read_text(path)?)?;
    Ok(doc.to_topology()?)
}

/// The `--operators` file names the pair explicitly so a single file can
/// serve both single-operator and pair commands.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct OperatorsFile {
    #[serde(default)]
    t1: Option<OperatorDoc>,
    #[serde(default)]
    t2: Option<OperatorDoc>,
}

fn read_operators(
    path: &Path,
    top: &FiniteTopology,
) -> Result<(Option<OperatorTable>, Option<OperatorTable>), CliError> {
    let file: OperatorsFile = serde_json::from_str(&read_text(path)?)?;
    let t1 = file.t1.map(|doc| doc.resolve(top)).transpose()?;
    let t2 = file.t2.map(|doc| doc.resolve(top)).transpose()?;
    Ok((t1, t2))
}

/// Human-readable rendering of a subset mask, e.g. `{0,2}`.
fn point_list(n: usize, mask: u32) -> String {
    let points: Vec<String> = PointSet::from_mask(mask, n)
        .expect("mask validated against the carrier")
        .points()
        .map(|p| p.to_string())
        .collect();
    format!("{{{}}}", points.join(","))
}

fn set_entry(n: usize, mask: u32) -> Value {
    json!({ "mask": mask, "points": point_list(n, mask) })
}

fn cmd_enumerate(n: usize) -> Result<ExitCode, CliError> {
    enforce_env_cap(n)?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for top in enumerate_topologies(n)? {
        let doc = TopologyDoc::from(&top);
        writeln!(out, "{}", serde_json::to_string(&doc)?)?;
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(
    space: &Path,
    operators: Option<PathBuf>,
    class: Option<ClassArg>,
) -> Result<ExitCode, CliError> {
    let top = read_topology(space)?;
    enforce_env_cap(top.carrier())?;
    let (t1, t2) = match operators {
        Some(path) => read_operators(&path, &top)?,
        None => (None, None),
    };

    let classes: Vec<ClassArg> = match class {
        Some(c) => vec![c],
        None => {
            let mut all = vec![
                ClassArg::Open,
                ClassArg::Closed,
                ClassArg::Semi,
                ClassArg::Pre,
                ClassArg::B,
            ];
            if t1.is_some() {
                all.push(ClassArg::T);
            }
            if t1.is_some() && t2.is_some() {
                all.push(ClassArg::T12);
            }
            all
        }
    };

    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for c in classes {
        let masks = family_masks(c, &top, t1.as_ref(), t2.as_ref())?;
        let sets: Vec<Value> = masks.iter().map(|&m| set_entry(top.carrier(), m)).collect();
        let line = json!({ "class": c.name(), "count": sets.len(), "sets": sets });
        writeln!(out, "{}", serde_json::to_string(&line)?)?;
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn family_masks(
    class: ClassArg,
    top: &FiniteTopology,
    t1: Option<&OperatorTable>,
    t2: Option<&OperatorTable>,
) -> Result<Vec<u32>, CliError> {
    let all = || 0..(1u32 << top.carrier());
    let need = |field: &'static str| CliError::Core(TopoError::MissingField(field));
    let masks = match class {
        ClassArg::Semi => class_family(top, ClassKind::Semi).masks().collect(),
        ClassArg::Pre => class_family(top, ClassKind::Pre).masks().collect(),
        ClassArg::B => class_family(top, ClassKind::B).masks().collect(),
        ClassArg::BClosureUnion => all()
            .filter(|&m| {
                is_b_open_variant(top, BVariant::ClosureOfUnion, ps(m, top.carrier()))
            })
            .collect(),
        ClassArg::BPlainInterior => all()
            .filter(|&m| is_b_open_variant(top, BVariant::PlainInterior, ps(m, top.carrier())))
            .collect(),
        ClassArg::Open => top.opens().masks().collect(),
        ClassArg::Closed => top.closed_sets().masks().collect(),
        ClassArg::T => {
            let t1 = t1.ok_or_else(|| need("t1"))?;
            t_open_family(top, t1)?.masks().collect()
        }
        ClassArg::T12 => {
            let t1 = t1.ok_or_else(|| need("t1"))?;
            let t2 = t2.ok_or_else(|| need("t2"))?;
            t12_open_family(t1, t2).masks().collect()
        }
    };
    Ok(masks)
}

fn ps(mask: u32, n: usize) -> PointSet {
    PointSet::from_mask(mask, n).expect("mask below 2^carrier")
}

fn cmd_closure(
    space: &Path,
    operators: Option<PathBuf>,
    set: u32,
    t12: bool,
) -> Result<ExitCode, CliError> {
    let top = read_topology(space)?;
    enforce_env_cap(top.carrier())?;
    let a = PointSet::from_mask(set, top.carrier()).map_err(CliError::Core)?;

    let (kind, result) = if t12 {
        let path = operators.ok_or(CliError::Core(TopoError::MissingField("operators")))?;
        let (t1, t2) = read_operators(&path, &top)?;
        let t1 = t1.ok_or(CliError::Core(TopoError::MissingField("t1")))?;
        let t2 = t2.ok_or(CliError::Core(TopoError::MissingField("t2")))?;
        ("t12_closure", topoforge_core::openclasses::t12_closure(&t1, &t2, a))
    } else {
        ("closure", top.closure(a))
    };

    let line = json!({
        "kind": kind,
        "set": set_entry(top.carrier(), a.mask()),
        "closure": set_entry(top.carrier(), result.mask()),
    });
    let stdout = io::stdout();
    let mut out = stdout.lock();
    writeln!(out, "{}", serde_json::to_string(&line)?)?;
    Ok(ExitCode::SUCCESS)
}

/// Exact id, or a unique prefix of one ("T48" → "T48_graph_function").
fn resolve_theorem(id: &str) -> Result<TheoremId, TopoError> {
    if let Ok(t) = TheoremId::from_id(id) {
        return Ok(t);
    }
    let hits: Vec<TheoremId> =
        ALL_THEOREMS.iter().copied().filter(|t| t.id().starts_with(id)).collect();
    match hits.as_slice() {
        [only] => Ok(*only),
        [] => TheoremId::from_id(id),
        many => Err(TopoError::InvalidField {
            field: "theorem",
            message: format!(
                "{id:?} is ambiguous: matches {}",
                many.iter().map(|t| t.id()).collect::<Vec<_>>().join(", ")
            ),
        }),
    }
}

fn instance_carrier(data: &InstanceData) -> usize {
    match data {
        InstanceData::SubsetSingle { top, .. } | InstanceData::SubsetPair { top, .. } => {
            top.carrier()
        }
        InstanceData::Function { top_x, top_y, .. }
        | InstanceData::FunctionPair { top_x, top_y, .. }
        | InstanceData::FunctionPairSubset { top_x, top_y, .. } => {
            top_x.carrier().max(top_y.carrier())
        }
    }
}

fn cmd_check(
    theorem: &str,
    instance: &Path,
    options: &CheckOptions,
) -> Result<ExitCode, CliError> {
    let theorem = resolve_theorem(theorem)?;
    let mut value: Value = serde_json::from_str(&read_text(instance)?)?;
    let map = value.as_object_mut().ok_or(CliError::Core(TopoError::InvalidField {
        field: "instance",
        message: "expected a JSON object".into(),
    }))?;
    match map.get("theorem") {
        None => {
            map.insert("theorem".into(), Value::String(theorem.id().into()));
        }
        Some(Value::String(in_file)) => {
            if resolve_theorem(in_file)? != theorem {
                return Err(CliError::Core(TopoError::InvalidField {
                    field: "theorem",
                    message: format!(
                        "instance file says {in_file:?}, --theorem says {:?}",
                        theorem.id()
                    ),
                }));
            }
        }
        Some(_) => {
            return Err(CliError::Core(TopoError::InvalidField {
                field: "theorem",
                message: "expected a string".into(),
            }))
        }
    }

    let doc: InstanceDoc = serde_json::from_value(value)?;
    let (tid, data) = doc.resolve()?;
    enforce_env_cap(instance_carrier(&data))?;
    let outcome = evaluate(tid, &data, options)?;
    cross_validate(tid, &data, options, &outcome)?;
    let verdict = Verdict::new(data.key(tid), outcome);

    let stdout = io::stdout();
    let mut out = stdout.lock();
    writeln!(out, "{}", serde_json::to_string(&verdict)?)?;
    Ok(if verdict.classification == Classification::Counterexample {
        ExitCode::from(EXIT_COUNTEREXAMPLE)
    } else {
        ExitCode::SUCCESS
    })
}

fn parse_pool(s: &str) -> Result<PoolSpec, TopoError> {
    match s {
        "builtins" => Ok(PoolSpec::Builtins),
        "exhaustive" => Ok(PoolSpec::Exhaustive),
        "seeded" => Ok(PoolSpec::Seeded { extras: DEFAULT_SEEDED_EXTRAS }),
        other => match other.strip_prefix("seeded:").and_then(|k| k.parse().ok()) {
            Some(extras) => Ok(PoolSpec::Seeded { extras }),
            None => Err(TopoError::InvalidField {
                field: "pool",
                message: format!("unknown pool {other:?}; expected builtins, exhaustive, or seeded[:COUNT]"),
            }),
        },
    }
}

fn cmd_sweep(
    theorem: &str,
    max_n: usize,
    seed: u64,
    pool: &str,
    cell_cap: usize,
    out_path: Option<PathBuf>,
    options: &CheckOptions,
) -> Result<ExitCode, CliError> {
    enforce_env_cap(max_n)?;
    let mut config = SweepConfig::new(resolve_theorem(theorem)?, max_n);
    config.pool = parse_pool(pool)?;
    config.seed = seed;
    config.fn_cell_cap = cell_cap;
    config.options = *options;

    let summary = match out_path {
        Some(path) => {
            let file = fs::File::create(&path)
                .map_err(|source| CliError::File { path: path.display().to_string(), source })?;
            let mut report = BufWriter::new(file);
            let summary = run_sweep(&config, &mut report)?;
            report.flush()?;
            println!("{}", serde_json::to_string(&summary)?);
            summary
        }
        None => {
            let stdout = io::stdout();
            let mut report = BufWriter::new(stdout.lock());
            let summary = run_sweep(&config, &mut report)?;
            report.flush()?;
            summary
        }
    };

    Ok(if summary.counterexamples > 0 {
        ExitCode::from(EXIT_COUNTEREXAMPLE)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_witness(max_n: usize, seed: u64, pool: &str) -> Result<ExitCode, CliError> {
    enforce_env_cap(max_n)?;
    let pool = parse_pool(pool)?;
    let found = find_intersection_witness(max_n, pool, seed)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match found {
        Some(w) => writeln!(out, "{}", serde_json::to_string(&w)?)?,
        None => writeln!(out, "null")?,
    }
    Ok(ExitCode::SUCCESS)
}

/// Shared body of `export` and `import`: parse, validate, emit canonically.
/// Canonical means explicit tables for operators and struct-ordered fields,
/// so a second pass over the output is the identity.
fn cmd_normalize(
    input: &Path,
    space: Option<PathBuf>,
    out_path: Option<PathBuf>,
) -> Result<ExitCode, CliError> {
    let value: Value = serde_json::from_str(&read_text(input)?)?;
    let obj = value.as_object().ok_or(CliError::Core(TopoError::InvalidField {
        field: "document",
        message: "expected a JSON object".into(),
    }))?;

    let canonical = if obj.contains_key("opens") {
        let doc: TopologyDoc = serde_json::from_value(value.clone())?;
        let top = doc.to_topology()?;
        enforce_env_cap(top.carrier())?;
        serde_json::to_string(&TopologyDoc::from(&top))?
    } else if obj.contains_key("dom_n") {
        let doc: FunctionDoc = serde_json::from_value(value.clone())?;
        let f = doc.to_function()?;
        enforce_env_cap(f.dom_carrier().max(f.cod_carrier()))?;
        serde_json::to_string(&FunctionDoc::from(&f))?
    } else if obj.contains_key("builtin") || obj.contains_key("images") {
        let doc: OperatorDoc = serde_json::from_value(value.clone())?;
        let table = match &doc {
            OperatorDoc::Builtin { .. } => {
                let path = space.ok_or(CliError::Core(TopoError::MissingField("space")))?;
                doc.resolve(&read_topology(&path)?)?
            }
            OperatorDoc::Table { n, images } => OperatorTable::new(*n, images.clone())?,
        };
        enforce_env_cap(table.carrier())?;
        serde_json::to_string(&OperatorDoc::from(&table))?
    } else {
        return Err(CliError::Core(TopoError::InvalidField {
            field: "document",
            message: "expected a topology ({n, opens}), operator ({builtin} or {n, images}), or function ({dom_n, cod_n, images})".into(),
        }));
    };

    match out_path {
        Some(path) => {
            let mut file = fs::File::create(&path)
                .map_err(|source| CliError::File { path: path.display().to_string(), source })?;
            writeln!(file, "{canonical}")?;
        }
        None => println!("{canonical}"),
    }
    Ok(ExitCode::SUCCESS)
}
