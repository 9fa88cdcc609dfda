//! Command-line front end: generate preorders, analyze them, export Hasse
//! diagrams and run the individual searches.

pub mod document;
pub mod error;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use ordrep::generators::{self, BridgeVariant};
use ordrep::oracle::{cross_check, min_multi_utility_size, realizer_to_multi_utility, Budgets};
use ordrep::{
    min_debreu_subset, min_separating_family, DebreuMode, Minimum, MultiUtilityKind, Preorder, Rat,
    SeparationKind,
};
use serde_json::json;

use document::{BudgetRecord, PreorderDocument};
pub use error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "ordrep",
    version,
    about = "Preorders, multi-utilities and separating families"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Largest family size tried by the exact searches (default: 6 for
    /// multi-utilities, 16 for separating families).
    #[arg(long, global = true)]
    pub budget_k: Option<usize>,
    /// Largest ground set accepted or generated.
    #[arg(long, global = true, default_value_t = generators::DEFAULT_ELEMENT_CAP)]
    pub element_cap: usize,
    /// Seed for the random generator.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

impl GlobalArgs {
    fn budgets(&self) -> Budgets {
        let mut b = Budgets::default();
        if let Some(k) = self.budget_k {
            b.mu_k = k;
            b.sep_k = k;
        }
        b
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated preorder document.
    Generate {
        generator: Generator,
        /// Generator parameters as `key=value`.
        params: Vec<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Classify a preorder and cross-check the constructions.
    Analyze {
        input: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Hasse diagram of the quotient in DOT.
    ExportDot {
        input: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Smallest multi-utility of a kind.
    MultiUtility {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Plain)]
        kind: Kind,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Smallest separating family of a kind.
    Separate {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = SepKind::I)]
        sep_kind: SepKind,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Smallest Debreu dense or upper dense subset.
    Debreu {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    Chain,
    Antichain,
    StandardExample,
    Majorization,
    Bridge,
    TwoWings,
    DoublePowerset,
    NatVsSets,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Plain,
    Strict,
    Injective,
}

impl From<Kind> for MultiUtilityKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Plain => MultiUtilityKind::Plain,
            Kind::Strict => MultiUtilityKind::Strict,
            Kind::Injective => MultiUtilityKind::Injective,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SepKind {
    I,
    Ii,
    Iii,
}

impl From<SepKind> for SeparationKind {
    fn from(k: SepKind) -> Self {
        match k {
            SepKind::I => SeparationKind::I,
            SepKind::Ii => SeparationKind::II,
            SepKind::Iii => SeparationKind::III,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Dense,
    Upper,
    Both,
}

impl From<Mode> for DebreuMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Dense => DebreuMode::Dense,
            Mode::Upper => DebreuMode::Upper,
            Mode::Both => DebreuMode::Both,
        }
    }
}

/// `key=value` parameters with typed lookups; unknown keys are rejected.
struct Params {
    pairs: Vec<(String, String)>,
}

impl Params {
    fn parse(raw: &[String], allowed: &[&str]) -> Result<Self, CliError> {
        let mut pairs = Vec::new();
        for item in raw {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| CliError::param(item.as_str(), "expected key=value"))?;
            if !allowed.contains(&k) {
                return Err(CliError::param(
                    k,
                    format!("unknown; expected one of {allowed:?}"),
                ));
            }
            if pairs.iter().any(|(seen, _): &(String, String)| seen == k) {
                return Err(CliError::param(k, "given twice"));
            }
            pairs.push((k.to_string(), v.to_string()));
        }
        Ok(Params { pairs })
    }

    fn raw(&self, key: &str) -> Option<&str> {
        self.pairs
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    fn usize(&self, key: &str, default: Option<usize>) -> Result<usize, CliError> {
        match (self.raw(key), default) {
            (Some(v), _) => v
                .parse()
                .map_err(|_| CliError::param(key, format!("`{v}` is not a non-negative integer"))),
            (None, Some(d)) => Ok(d),
            (None, None) => Err(CliError::param(key, "required")),
        }
    }
}

fn generate(gen: Generator, raw: &[String], g: &GlobalArgs) -> Result<Preorder, CliError> {
    use Generator::*;
    let cap = g.element_cap;
    let allowed: &[&str] = match gen {
        Chain | Antichain | StandardExample | TwoWings => &["n"],
        Majorization => &["omega", "denom"],
        Bridge => &["n", "variant"],
        DoublePowerset => &["m"],
        NatVsSets => &["m", "min_size"],
        Random => &["n", "density"],
    };
    let params = Params::parse(raw, allowed)?;
    let sized = |n: usize| -> Result<usize, CliError> {
        if n > cap {
            Err(CliError::param(
                "n",
                format!("{n} exceeds the element cap {cap}"),
            ))
        } else {
            Ok(n)
        }
    };
    let p = match gen {
        Chain => generators::chain(sized(params.usize("n", None)?)?)?,
        Antichain => generators::antichain(sized(params.usize("n", None)?)?)?,
        StandardExample => {
            let n = params.usize("n", None)?;
            sized(n.saturating_mul(2))?;
            generators::standard_example(n)?
        }
        TwoWings => {
            let n = params.usize("n", None)?;
            sized(n.saturating_mul(4))?;
            generators::two_wings(n)?
        }
        Bridge => {
            let n = params.usize("n", None)?;
            sized(n.saturating_mul(2))?;
            let variant = match params.raw("variant").unwrap_or("incomparable") {
                "incomparable" => BridgeVariant::Incomparable,
                "strict" => BridgeVariant::Strict,
                other => {
                    return Err(CliError::param(
                        "variant",
                        format!("`{other}` is not one of incomparable, strict"),
                    ))
                }
            };
            generators::bridge(n, variant)?
        }
        Majorization => {
            let omega = params.usize("omega", None)?;
            let denom = params.usize("denom", None)?;
            let denom = u32::try_from(denom).map_err(|_| CliError::param("denom", "too large"))?;
            generators::majorization(omega, denom, cap)?
        }
        DoublePowerset => generators::double_powerset(params.usize("m", None)?, cap)?,
        NatVsSets => {
            let m = params.usize("m", None)?;
            generators::nat_vs_sets(m, params.usize("min_size", Some(2))?, cap)?
        }
        Random => {
            let n = sized(params.usize("n", None)?)?;
            let text = params.raw("density").unwrap_or("1/2");
            let density: Rat = text
                .parse()
                .map_err(|_| CliError::param("density", format!("`{text}` is not a rational")))?;
            generators::random_preorder(n, &density, g.seed)?
        }
    };
    Ok(p)
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, text: &str) -> Result<(), CliError> {
    let fail = |source| CliError::Output {
        path: path.display().to_string(),
        source,
    };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(&dir).map_err(fail)?;
    tmp.write_all(text.as_bytes()).map_err(fail)?;
    tmp.as_file().sync_all().map_err(fail)?;
    tmp.persist(path).map_err(|e| fail(e.error))?;
    Ok(())
}

/// Document text goes to `out`, or to stdout when no path is given.
fn emit(out: Option<&Path>, text: &str, stdout: &mut String) -> Result<(), CliError> {
    match out {
        Some(path) => write_atomic(path, text),
        None => {
            stdout.push_str(text);
            Ok(())
        }
    }
}

fn read_preorder(path: &Path, g: &GlobalArgs) -> Result<Preorder, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read `{}`: {e}", path.display())))?;
    PreorderDocument::parse(&text)?.to_preorder(g.element_cap)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Nodes are class representatives in ground order; edges are covers.
pub fn dot(p: &Preorder) -> String {
    let q = p.quotient();
    let mut s = String::from("digraph preorder {\n");
    for (c, members) in q.classes().iter().enumerate() {
        let id = quote(p.label(q.representative(c)));
        if members.len() > 1 {
            let all: Vec<&str> = members.iter().map(|&x| p.label(x)).collect();
            let _ = writeln!(s, "  {id} [label={}];", quote(&all.join(" ~ ")));
        } else {
            let _ = writeln!(s, "  {id};");
        }
    }
    for (a, b) in q.covers() {
        let _ = writeln!(
            s,
            "  {} -> {};",
            quote(p.label(q.representative(a))),
            quote(p.label(q.representative(b)))
        );
    }
    s.push_str("}\n");
    s
}

/// Human-readable placement of a report.
fn summary(cc: &ordrep::CrossCheck) -> String {
    let r = &cc.report;
    let mut s = String::new();
    let _ = writeln!(s, "classes: {}, width: {}", r.quotient_size, r.width);
    let _ = writeln!(
        s,
        "has utility: {}",
        if r.has_utility { "yes" } else { "no" }
    );
    let _ = writeln!(
        s,
        "min multi-utility k: plain {}, strict {}, injective {}",
        r.min_mu_plain, r.min_mu_strict, r.min_mu_injective
    );
    let _ = writeln!(
        s,
        "min separating family: I {}, II {}, III {}",
        r.min_sep_i, r.min_sep_ii, r.min_sep_iii
    );
    let _ = writeln!(
        s,
        "min Debreu subset: dense {}, upper {}",
        r.debreu_dense_min, r.debreu_upper_min
    );
    for d in &cc.discrepancies {
        let _ = writeln!(s, "warning: {} check failed: {}", d.check, d.detail);
    }
    s
}

/// Output of a successful or budget-limited command.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
}

/// Runs one command. On a budget overrun the partial document has already
/// been written when the error comes back.
pub fn run(cli: &Cli) -> Result<Outcome, (Outcome, CliError)> {
    let mut out = Outcome::default();
    match execute(cli, &mut out) {
        Ok(()) => Ok(out),
        Err(e) => Err((out, e)),
    }
}

fn execute(cli: &Cli, o: &mut Outcome) -> Result<(), CliError> {
    let g = &cli.global;
    let budgets = g.budgets();
    match &cli.command {
        Command::Generate {
            generator,
            params,
            out,
        } => {
            let p = generate(*generator, params, g)?;
            let text = document::to_text(&PreorderDocument::from_preorder(&p));
            emit(out.as_deref(), &text, &mut o.stdout)
        }
        Command::Analyze { input, out } => {
            let p = read_preorder(input, g)?;
            let cc = cross_check(&p, &budgets)?;
            let report = document::report(&p, &cc, BudgetRecord::new(&budgets, g.element_cap));
            let text = document::to_text(&report);
            let summary = summary(&cc);
            match out {
                Some(path) => {
                    write_atomic(path, &text)?;
                    o.stdout.push_str(&summary);
                }
                None => {
                    o.stdout.push_str(&text);
                    o.stderr.push_str(&summary);
                }
            }
            if cc.complete() {
                Ok(())
            } else {
                Err(CliError::Budget("report fields marked exceeded".into()))
            }
        }
        Command::ExportDot { input, out } => {
            let p = read_preorder(input, g)?;
            emit(out.as_deref(), &dot(&p), &mut o.stdout)
        }
        Command::MultiUtility { input, kind, out } => {
            let p = read_preorder(input, g)?;
            let kind = MultiUtilityKind::from(*kind);
            let classes = p.quotient().len();
            if classes > budgets.class_cap {
                return Err(CliError::Budget(format!(
                    "{classes} classes exceed the exact search cap {}",
                    budgets.class_cap
                )));
            }
            let m = min_multi_utility_size(&p, kind, budgets.mu_k);
            let kind_name = format!("{kind:?}").to_lowercase();
            let cert = m.certificate().clone();
            let doc = match &m {
                Minimum::Found { value, .. } => {
                    let mu = realizer_to_multi_utility(value, kind);
                    let members: Vec<_> = mu
                        .members
                        .iter()
                        .map(|f| document::monotone(&p, f))
                        .collect();
                    json!({
                        "kind": kind_name,
                        "size": members.len(),
                        "lower_bound": cert.infeasible_below,
                        "nodes": cert.nodes,
                        "members": members,
                    })
                }
                Minimum::Exceeded { budget, .. } => json!({
                    "kind": kind_name,
                    "exceeded": true,
                    "budget": budget,
                    "lower_bound": cert.infeasible_below,
                    "nodes": cert.nodes,
                }),
            };
            emit(out.as_deref(), &document::to_text(&doc), &mut o.stdout)?;
            match m {
                Minimum::Found { .. } => Ok(()),
                Minimum::Exceeded { budget, .. } => Err(CliError::Budget(format!(
                    "no {kind_name} multi-utility with at most {budget} members"
                ))),
            }
        }
        Command::Separate {
            input,
            sep_kind,
            out,
        } => {
            let p = read_preorder(input, g)?;
            let kind = SeparationKind::from(*sep_kind);
            let m = match min_separating_family(&p, kind, budgets.sep_k, budgets.upset_cap) {
                Ok(m) => m,
                Err(e @ ordrep::Error::SizeOverflow { .. }) => {
                    return Err(CliError::Budget(e.to_string()))
                }
                Err(e) => return Err(e.into()),
            };
            let kind_name = format!("{kind:?}").to_lowercase();
            let cert = m.certificate().clone();
            let doc = match &m {
                Minimum::Found { value, .. } => {
                    let sets: Vec<_> = value.sets.iter().map(|s| document::upset(&p, s)).collect();
                    json!({
                        "kind": kind_name,
                        "size": sets.len(),
                        "lower_bound": cert.infeasible_below,
                        "nodes": cert.nodes,
                        "sets": sets,
                    })
                }
                Minimum::Exceeded { budget, .. } => json!({
                    "kind": kind_name,
                    "exceeded": true,
                    "budget": budget,
                    "lower_bound": cert.infeasible_below,
                    "nodes": cert.nodes,
                }),
            };
            emit(out.as_deref(), &document::to_text(&doc), &mut o.stdout)?;
            match m {
                Minimum::Found { .. } => Ok(()),
                Minimum::Exceeded { budget, .. } => Err(CliError::Budget(format!(
                    "no kind {kind_name} family with at most {budget} sets"
                ))),
            }
        }
        Command::Debreu { input, mode, out } => {
            let p = read_preorder(input, g)?;
            let mode = DebreuMode::from(*mode);
            let z = min_debreu_subset(&p, mode);
            let doc = json!({
                "mode": format!("{mode:?}").to_lowercase(),
                "size": z.len(),
                "subset": document::labels(&p, &z),
            });
            emit(out.as_deref(), &document::to_text(&doc), &mut o.stdout)
        }
    }
}
