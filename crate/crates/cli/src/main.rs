//! `binlift`: splitting operations, minor tests, the catalog, the census and
//! the verification sweeps from the command line.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success; minor found; matroid is a gammoid |
//! | 1 | minor absent; not a gammoid; catalog check or sweep found a failure |
//! | 2 | usage or I/O error |
//! | 3 | malformed input file |
//! | 4 | unknown label or catalog name |
//! | 5 | size or budget bound exceeded |
//! | 6 | precondition violated |

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use binlift::catalog;
use binlift::census::{self, CensusOptions};
use binlift::lifts::{element_splitting, es_splitting};
use binlift::minor::{gammoid_obstruction, has_minor, Pattern};
use binlift::verifier::verify_by_name;
use binlift::{splitting, BinaryMatroid, Error, Multigraph};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "binlift", version, about = "Splitting operations and excluded minors of binary gammoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply splitting, element splitting or es-splitting.
    Op(OpArgs),
    /// Search the host for a minor isomorphic to the pattern.
    Minor {
        #[arg(long)]
        host: PathBuf,
        /// Catalog name or matroid/graph file.
        #[arg(long)]
        pattern: String,
    },
    /// Decide whether a binary matroid is a gammoid (no M(K4) minor).
    Gammoid { file: PathBuf },
    /// Inspect or check the named matroids.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Enumerate connected multigraphs, or the binary gammoids among them.
    Census {
        #[arg(long)]
        max_edges: usize,
        #[arg(long)]
        gammoids: bool,
        /// Also list disconnected graphs (ignored with --gammoids).
        #[arg(long)]
        all: bool,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Run a verification sweep and print its report.
    Verify {
        theorem: TheoremId,
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long)]
        max_h: Option<usize>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct OpArgs {
    kind: OpKind,
    #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
    matroid: Option<PathBuf>,
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Comma-separated labels of H.
    #[arg(long, allow_hyphen_values = true)]
    set: String,
    #[arg(long)]
    pivot: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    Split,
    Esplit,
    Essplit,
}

#[derive(Subcommand)]
enum CatalogAction {
    Show { name: String },
    Check,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremId {
    G2,
    G3,
    Corollary,
    ElementSplitting,
    EsSplitting,
    LiftIdentities,
    QuotientsK4,
    Mt1,
}

impl TheoremId {
    fn id(self) -> &'static str {
        match self {
            TheoremId::G2 => "g2",
            TheoremId::G3 => "g3",
            TheoremId::Corollary => "corollary",
            TheoremId::ElementSplitting => "element-splitting",
            TheoremId::EsSplitting => "es-splitting",
            TheoremId::LiftIdentities => "lift-identities",
            TheoremId::QuotientsK4 => "quotients-k4",
            TheoremId::Mt1 => "mt1",
        }
    }
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. }
            | Error::DuplicateLabel(_)
            | Error::WidthMismatch { .. }
            | Error::IndexOutOfRange { .. } => 3,
            Error::UnknownLabel(_) | Error::UnknownName(_) => 4,
            Error::SizeBound { .. } | Error::TooManyColumns { .. } => 5,
            Error::Precondition(_) => 6,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 2,
            msg: e.to_string(),
        }
    }
}

type CliResult = Result<u8, Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        msg: format!("{}: {e}", path.display()),
    })
}

fn from_graph(g: &Multigraph, path: &Path) -> BinaryMatroid {
    eprintln!("note: {} read as a graph; using its cycle matroid", path.display());
    g.cycle_matroid()
}

/// Reads a matroid file, or a graph file converted to its cycle matroid.
fn read_matroid(path: &Path) -> Result<BinaryMatroid, Failure> {
    let text = read_text(path)?;
    if text.trim_start().starts_with("graph") {
        return Ok(from_graph(&text.parse()?, path));
    }
    Ok(text.parse()?)
}

fn read_graph(path: &Path) -> Result<BinaryMatroid, Failure> {
    let g: Multigraph = read_text(path)?.parse()?;
    Ok(from_graph(&g, path))
}

/// Splits a comma-separated label list, dropping duplicates with a warning.
fn parse_set(s: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for l in s.split(',').map(str::trim).filter(|l| !l.is_empty()) {
        if out.iter().any(|x| x == l) {
            eprintln!("warning: duplicate label `{l}` in set ignored");
        } else {
            out.push(l.to_string());
        }
    }
    out.sort();
    out
}

fn run_op(args: &OpArgs) -> CliResult {
    let m = match (&args.matroid, &args.graph) {
        (Some(p), _) => read_matroid(p)?,
        (None, Some(p)) => read_graph(p)?,
        (None, None) => unreachable!("clap requires one input"),
    };
    let set = parse_set(&args.set);
    let out = match args.kind {
        OpKind::Split | OpKind::Esplit if args.pivot.is_some() => {
            return Err(Failure {
                code: 2,
                msg: "--pivot is only used by essplit".into(),
            })
        }
        OpKind::Split => splitting(&m, &set)?,
        OpKind::Esplit => element_splitting(&m, &set)?,
        OpKind::Essplit => {
            let e = args.pivot.as_deref().ok_or_else(|| Failure {
                code: 2,
                msg: "essplit requires --pivot".into(),
            })?;
            es_splitting(&m, &set, e)?
        }
    };
    print!("{out}");
    Ok(0)
}

fn resolve_pattern(name_or_path: &str) -> Result<Pattern, Failure> {
    match catalog::pattern(name_or_path) {
        Ok(p) => Ok(p),
        Err(Error::UnknownName(_)) if Path::new(name_or_path).exists() => {
            Ok(Pattern::represented(name_or_path, read_matroid(Path::new(name_or_path))?))
        }
        Err(e) => Err(e.into()),
    }
}

fn run_minor(host: &Path, pattern: &str) -> CliResult {
    let host = read_matroid(host)?;
    let pattern = resolve_pattern(pattern)?;
    match has_minor(&host, &pattern)? {
        Some(c) => {
            println!("{c}");
            Ok(0)
        }
        None => {
            println!("absent");
            Ok(1)
        }
    }
}

fn run_gammoid(path: &Path) -> CliResult {
    let m = read_matroid(path)?;
    match gammoid_obstruction(&m)? {
        None => {
            println!("yes");
            Ok(0)
        }
        Some(c) => {
            println!("no");
            println!("{c}");
            Ok(1)
        }
    }
}

fn run_catalog(action: &CatalogAction) -> CliResult {
    match action {
        CatalogAction::Show { name } => {
            print!("{}", catalog::show(name)?);
            Ok(0)
        }
        CatalogAction::Check => {
            let lines = catalog::check_all()?;
            let mut ok = true;
            for l in &lines {
                ok &= l.verdict.passed;
                let status = if l.verdict.passed { "PASS" } else { "FAIL" };
                println!("{}: {status} {}", l.name, l.verdict.detail);
            }
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn run_census(max_edges: usize, gammoids: bool, all: bool, cache: Option<&Path>) -> CliResult {
    let opts = CensusOptions::default();
    let connected = gammoids || !all;
    let cached = match cache {
        Some(p) => census::read_cache(p, max_edges, connected)?,
        None => None,
    };
    let graphs = match cached {
        Some(g) => g,
        None => {
            let g = census::enumerate_multigraphs(max_edges, connected, &opts)?;
            if let Some(p) = cache {
                census::write_cache(p, max_edges, connected, &g)?;
            }
            g
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let count = if gammoids {
        let entries = census::binary_gammoids_among(graphs)?;
        for e in &entries {
            writeln!(out, "{}", e.graph.encode())?;
        }
        entries.len()
    } else {
        for g in &graphs {
            writeln!(out, "{}", g.encode())?;
        }
        graphs.len()
    };
    writeln!(out, "count: {count}")?;
    out.flush()?;
    Ok(0)
}

fn run_verify(
    theorem: TheoremId,
    max_edges: Option<usize>,
    max_h: Option<usize>,
    jobs: Option<usize>,
    out: Option<&Path>,
) -> CliResult {
    if jobs == Some(0) {
        return Err(Failure {
            code: 2,
            msg: "--jobs must be at least 1".into(),
        });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Failure {
            code: 2,
            msg: e.to_string(),
        })?;
    let report = pool.install(|| verify_by_name(theorem.id(), max_edges, max_h))?;
    let text = report.to_string();
    match out {
        Some(p) => fs::write(p, &text)?,
        None => print!("{text}"),
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Op(args) => run_op(args),
        Command::Minor { host, pattern } => run_minor(host, pattern),
        Command::Gammoid { file } => run_gammoid(file),
        Command::Catalog { action } => run_catalog(action),
        Command::Census {
            max_edges,
            gammoids,
            all,
            cache,
        } => run_census(*max_edges, *gammoids, *all, cache.as_deref()),
        Command::Verify {
            theorem,
            max_edges,
            max_h,
            jobs,
            out,
        } => run_verify(*theorem, *max_edges, *max_h, *jobs, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
