//! Command-line front end: loads a graph, parses terms and reports what the
//! matching engine decides.
//!
//! Exit codes: `0` success (or `HOLDS`), `1` a `check` that `FAILS`, `2` any
//! error including bad usage.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use obskit_core::oracle::ac_oracle_graph;
use obskit_core::{
    AnticliqueEngine, Clique, CoherenceGraph, Error, FanEngine, GraphKind, LatTerm, LatticeEngine, ObsTerm, Oracle,
    ProductEngine, DEFAULT_MAX_BRACKET, DEFAULT_MAX_VECTORS,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "obskit", version, about = "Decide containment of observation terms over coherence graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide `leq` (containment) or `equiv` between two terms; prints HOLDS or FAILS.
    Check {
        graph: PathBuf,
        relation: Relation,
        left: String,
        right: String,
        /// On failure, print a counterexample clique found by brute force.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        opts: EngineOpts,
    },
    /// Print the engine's normal form of a term.
    Normalize {
        graph: PathBuf,
        term: String,
        #[command(flatten)]
        opts: EngineOpts,
    },
    /// Print the denotation of a term as a sorted clique list (finite graphs only).
    Oracle { graph: PathBuf, term: String },
    /// Print the graph kind, its atom count and whether it has finite anti-neighbourhoods.
    Info { graph: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Relation {
    Leq,
    Equiv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineChoice {
    Lattice,
    Fan,
    Anticlique,
    Product,
    Oracle,
}

#[derive(Debug, Args)]
struct EngineOpts {
    /// Override the engine picked from the graph kind.
    #[arg(long, value_enum)]
    engine: Option<EngineChoice>,
    /// Budget on bracket members in lattice computations.
    #[arg(long, default_value_t = DEFAULT_MAX_BRACKET)]
    max_bracket: usize,
    /// Budget on term vectors in product representatives.
    #[arg(long, default_value_t = DEFAULT_MAX_VECTORS)]
    max_vectors: usize,
}

/// Runs the command line `args` (program name first) and returns the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot read `{path}`: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("cannot write output: {0}")]
    Output(std::io::Error),
}

fn load(path: &PathBuf) -> Result<CoherenceGraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?;
    Ok(CoherenceGraph::from_json(&text)?)
}

fn parse(text: &str) -> Result<ObsTerm, CliError> {
    Ok(text.parse()?)
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Check { graph, relation, left, right, witness, opts } => {
            let g = load(&graph)?;
            let (s, t) = (parse(&left)?, parse(&right)?);
            let engine = choose(&g, opts.engine, &[&s, &t]);
            let holds = match relation {
                Relation::Leq => leq(&g, engine, &opts, &s, &t)?,
                Relation::Equiv => leq(&g, engine, &opts, &s, &t)? && leq(&g, engine, &opts, &t, &s)?,
            };
            if holds {
                emit(out, "HOLDS")?;
                return Ok(EXIT_OK);
            }
            emit(out, "FAILS")?;
            if witness {
                let found = match relation {
                    Relation::Leq => counterexample(&g, &s, &t)?,
                    Relation::Equiv => match counterexample(&g, &s, &t)? {
                        Some(c) => Some(c),
                        None => counterexample(&g, &t, &s)?,
                    },
                };
                if let Some(c) = found {
                    emit(out, &format!("witness: {c}"))?;
                }
            }
            Ok(EXIT_FAILS)
        }
        Command::Normalize { graph, term, opts } => {
            let g = load(&graph)?;
            let s = parse(&term)?;
            let text = normalize(&g, choose(&g, opts.engine, &[&s]), &opts, &s)?;
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Oracle { graph, term } => {
            let g = load(&graph)?;
            let s = parse(&term)?;
            let sem = Oracle::new(&g)?.eval(&s)?;
            emit(out, &sem.to_string())?;
            Ok(EXIT_OK)
        }
        Command::Info { graph } => {
            let g = load(&graph)?;
            let atoms = match g.atoms() {
                Some(a) => a.len().to_string(),
                None => "unbounded".to_string(),
            };
            let fan = if g.has_fan() { "yes" } else { "no" };
            emit(out, &format!("kind: {}\natoms: {atoms}\nfan: {fan}", g.kind()))?;
            Ok(EXIT_OK)
        }
    }
}

fn emit(out: &mut dyn Write, line: &str) -> Result<(), CliError> {
    writeln!(out, "{line}").map_err(CliError::Output)
}

/// The explicit choice, or the natural engine for the graph kind: the
/// lattice engine for implication-free terms over finite graphs, the FAN
/// engine for other finite-graph terms.
fn choose(g: &CoherenceGraph, explicit: Option<EngineChoice>, terms: &[&ObsTerm]) -> EngineChoice {
    explicit.unwrap_or(match g.kind() {
        GraphKind::Finite if terms.iter().all(|s| s.to_lat().is_some()) => EngineChoice::Lattice,
        GraphKind::Finite => EngineChoice::Fan,
        GraphKind::Anticlique => EngineChoice::Anticlique,
        GraphKind::Product => EngineChoice::Product,
    })
}

fn lat(s: &ObsTerm) -> Result<LatTerm, Error> {
    s.to_lat().ok_or_else(|| Error::Unsupported(format!("the lattice engine cannot handle implication in `{s}`")))
}

fn product_engine<'g>(g: &'g CoherenceGraph, opts: &EngineOpts) -> Result<ProductEngine<'g>, Error> {
    Ok(ProductEngine::with_max_bracket(g, opts.max_bracket)?.with_max_vectors(opts.max_vectors))
}

fn leq(g: &CoherenceGraph, engine: EngineChoice, opts: &EngineOpts, s: &ObsTerm, t: &ObsTerm) -> Result<bool, Error> {
    match engine {
        EngineChoice::Lattice => LatticeEngine::new(g).with_max_bracket(opts.max_bracket).leq(&lat(s)?, &lat(t)?),
        EngineChoice::Fan => FanEngine::new(g)?.with_max_bracket(opts.max_bracket).leq(s, t),
        EngineChoice::Anticlique => AnticliqueEngine::new(g)?.leq(s, t),
        EngineChoice::Product => product_engine(g, opts)?.leq(s, t),
        EngineChoice::Oracle => Oracle::new(g)?.leq(s, t),
    }
}

fn normalize(g: &CoherenceGraph, engine: EngineChoice, opts: &EngineOpts, s: &ObsTerm) -> Result<String, Error> {
    Ok(match engine {
        EngineChoice::Lattice => LatticeEngine::new(g).with_max_bracket(opts.max_bracket).dnf(&lat(s)?)?.to_string(),
        EngineChoice::Fan => FanEngine::new(g)?.with_max_bracket(opts.max_bracket).normalize(s)?.to_string(),
        EngineChoice::Anticlique => AnticliqueEngine::new(g)?.tau(s)?.to_string(),
        EngineChoice::Product => product_engine(g, opts)?.tau_vee(s)?.to_string(),
        EngineChoice::Oracle => Oracle::new(g)?.eval(s)?.to_string(),
    })
}

/// A clique in `⟦s⟧ ∖ ⟦t⟧`. Anticlique graphs are searched through their
/// finite model on the atoms of `s` and `t` plus two fresh atoms.
fn counterexample(g: &CoherenceGraph, s: &ObsTerm, t: &ObsTerm) -> Result<Option<Clique>, Error> {
    match g {
        CoherenceGraph::Anticlique(omega) => Oracle::new(&ac_oracle_graph(omega, s, t)?)?.witness(s, t),
        _ => Oracle::new(g)?.witness(s, t),
    }
}
