//! Command-line driver: generate family graphs, compute chromatic numbers,
//! emit construction certificates, and run verification campaigns.
//!
//! Exit codes: 0 success, 1 assertion failure, 2 usage error, 3 I/O error,
//! 4 budget exhausted (bounds printed).

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sgcolor::campaigns::{self, Options};
use sgcolor::constructions::{self, NegTarget};
use sgcolor::families::{self, FamilyDescriptor, FamilyKind, SignedSubset};
use sgcolor::graph::{BalancedColoring, SignedGraph};
use sgcolor::{dimacs, solver, topo, Error};

#[derive(Parser)]
#[command(name = "sgcolor", version, about = "Signed Kneser/Schrijver/Borsuk graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family graph as a signed-DIMACS file.
    Gen(GenArgs),
    /// Exact balanced chromatic number of a signed-DIMACS file.
    Chib(ChibArgs),
    /// Exact chromatic number of the underlying (or negative) graph.
    Chi(ChiArgs),
    /// Run a named verification campaign and write its report.
    Verify(VerifyArgs),
    /// Emit a construction certificate and re-verify it.
    Construct(ConstructArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Ks,
    Hks,
    Ss,
    Hss,
    Kneser,
    Schrijver,
    Borsuk,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, default_value_t = 0)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    k: usize,
    /// Sphere dimension (borsuk only).
    #[arg(long, default_value_t = 1)]
    d: usize,
    /// Distance threshold (borsuk only).
    #[arg(long, default_value_t = 0.05)]
    eps: f64,
    /// Points per antipodal half (borsuk only).
    #[arg(long, default_value_t = 128)]
    res: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Args)]
struct ChibArgs {
    file: PathBuf,
    /// Budget in seconds.
    #[arg(long)]
    budget: Option<f64>,
    /// Write the balanced-colouring certificate here.
    #[arg(long)]
    certificate: Option<PathBuf>,
}

#[derive(Args)]
struct ChiArgs {
    file: PathBuf,
    #[arg(long)]
    budget: Option<f64>,
    #[arg(long)]
    certificate: Option<PathBuf>,
    /// Colour the negative subgraph instead of the underlying graph.
    #[arg(long)]
    negative: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// signedK | signedS | neg-hat | neg-full | prop14 | prop24 |
    /// k2-matching | conjecture | gale | hom | counts | borsuk-d1
    #[arg(long)]
    theorem: String,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    budget: Option<f64>,
    /// Report file; stdout when omitted.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Include elapsed-time fields (makes reports run-dependent).
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    BiCover,
    Critical,
    BiPlus,
    Equator,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    what: ConstructKind,
    #[arg(long, default_value_t = 0)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    k: usize,
    /// Cover indices, e.g. "1,2,3" (bi-cover; defaults to 1..=n-k+1).
    #[arg(long)]
    index_set: Option<String>,
    /// Deleted vertex, e.g. "{1,-2}" (critical).
    #[arg(long)]
    vertex: Option<String>,
    /// Number of colours (bi-plus).
    #[arg(long)]
    count: Option<usize>,
    /// hks | hss | ss (bi-plus target).
    #[arg(long, default_value = "hks")]
    target: String,
    #[arg(long, default_value_t = 1)]
    d: usize,
    #[arg(long, default_value_t = 0.05)]
    eps: f64,
    #[arg(long, default_value_t = 128)]
    res: usize,
    #[arg(long)]
    tau: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Certificate file; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Chib(args) => cmd_chib(args),
        Command::Chi(args) => cmd_chi(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Construct(args) => cmd_construct(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Timeout { .. } => ExitCode::from(4),
                Error::Io(_) | Error::Parse { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn budget_of(secs: Option<f64>) -> Option<Duration> {
    secs.map(Duration::from_secs_f64)
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode, Error> {
    let desc = match args.family {
        FamilyArg::Ks => FamilyDescriptor::sets(FamilyKind::KneserSigned, args.n, args.k),
        FamilyArg::Hks => FamilyDescriptor::sets(FamilyKind::KneserSignedHat, args.n, args.k),
        FamilyArg::Ss => FamilyDescriptor::sets(FamilyKind::SchrijverSigned, args.n, args.k),
        FamilyArg::Hss => FamilyDescriptor::sets(FamilyKind::SchrijverSignedHat, args.n, args.k),
        FamilyArg::Kneser => FamilyDescriptor::sets(FamilyKind::Kneser, args.n, args.k),
        FamilyArg::Schrijver => FamilyDescriptor::sets(FamilyKind::Schrijver, args.n, args.k),
        FamilyArg::Borsuk => FamilyDescriptor::borsuk(args.d, args.eps, args.res, args.seed),
    };
    let g = families::gen_family(&desc)?;
    dimacs::write_signed_file(&args.output, &g)?;
    println!("wrote {} ({} vertices, {} edges)", args.output.display(), g.order(), g.edge_count());
    Ok(ExitCode::SUCCESS)
}

fn write_balanced_certificate(
    path: &PathBuf,
    g: &SignedGraph,
    value: usize,
    coloring: &BalancedColoring,
) -> Result<(), Error> {
    use std::io::Write;
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    writeln!(out, "chi_b {value}")?;
    for v in 0..g.order() {
        let label = g.label(v).unwrap_or("-");
        writeln!(
            out,
            "v {} label {} color {} witness {}",
            v + 1,
            label,
            coloring.colors[v] + 1,
            coloring.witness[v]
        )?;
    }
    Ok(())
}

fn cmd_chib(args: ChibArgs) -> Result<ExitCode, Error> {
    let g = dimacs::read_signed_file(&args.file)?;
    let res = solver::chi_b_exact(&g, None, budget_of(args.budget))?;
    println!("chi_b {}", res.value);
    if let Some(path) = args.certificate {
        write_balanced_certificate(&path, &g, res.value, &res.coloring)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_chi(args: ChiArgs) -> Result<ExitCode, Error> {
    let g = dimacs::read_signed_file(&args.file)?;
    let h = if args.negative { g.negative_subgraph() } else { g.underlying() };
    let res = solver::chi_exact(&h, budget_of(args.budget))?;
    println!("chi {}", res.value);
    if let Some(path) = args.certificate {
        use std::io::Write;
        let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
        writeln!(out, "chi {}", res.value)?;
        for v in 0..h.order() {
            writeln!(out, "v {} color {}", v + 1, res.colors[v] + 1)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let campaign: campaigns::Campaign = args.theorem.parse()?;
    let opts = Options {
        max_n: args.max_n,
        samples: args.samples,
        seed: args.seed,
        budget: budget_of(args.budget),
    };
    let report = campaigns::run(campaign, &opts)?;
    let text = report.render(args.timings);
    match &args.report {
        Some(path) => std::fs::write(path, &text)?,
        None => print!("{text}"),
    }
    if report.passed() || campaign == campaigns::Campaign::Conjecture {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("{} of {} checks failed", report.fail_count(), report.records.len());
        Ok(ExitCode::from(1))
    }
}

fn render_certificate(
    kind: &str,
    labels: &[String],
    coloring: &BalancedColoring,
) -> String {
    let mut text = String::new();
    text.push_str(&format!("construction {kind}\nclasses {}\n", coloring.class_count()));
    for (v, label) in labels.iter().enumerate() {
        text.push_str(&format!(
            "v {} label {} color {} witness {}\n",
            v + 1,
            label,
            coloring.colors[v] + 1,
            coloring.witness[v]
        ));
    }
    text
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), Error> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_construct(args: ConstructArgs) -> Result<ExitCode, Error> {
    match args.what {
        ConstructKind::BiCover => {
            let idx: Vec<usize> = match &args.index_set {
                Some(text) => text
                    .split(',')
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| Error::input("bad --index-set"))?,
                None => (1..=args.n + 1 - args.k).collect(),
            };
            let (family, coloring) = constructions::cover_b_i(args.n, args.k, &idx)?;
            let verified = family.graph.verify_balanced_coloring(&coloring.colors)?.is_accepted();
            let labels: Vec<String> = family.vertices.iter().map(|s| s.to_string()).collect();
            let mut text = render_certificate("bi-cover", &labels, &coloring);
            text.push_str(&format!("verified {verified}\n"));
            emit(&text, args.output.as_ref())?;
            Ok(if verified { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        ConstructKind::Critical => {
            let vertex_text = args
                .vertex
                .as_deref()
                .ok_or_else(|| Error::input("--vertex is required for critical"))?;
            let a = SignedSubset::parse(args.n, vertex_text)?;
            let cover = constructions::critical_cover(args.n, args.k, &a)?;
            let verified =
                cover.graph.verify_balanced_coloring(&cover.coloring.colors)?.is_accepted();
            let labels: Vec<String> = cover.vertices.iter().map(|s| s.to_string()).collect();
            let mut text = format!("removed {}\n", cover.removed);
            text.push_str(&render_certificate("critical", &labels, &cover.coloring));
            text.push_str(&format!("verified {verified}\n"));
            emit(&text, args.output.as_ref())?;
            Ok(if verified { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        ConstructKind::BiPlus => {
            let target = match args.target.as_str() {
                "hks" => NegTarget::HatKneser,
                "hss" => NegTarget::HatSchrijver,
                "ss" => NegTarget::Schrijver,
                other => return Err(Error::input(format!("unknown target `{other}`"))),
            };
            let default_count = match target {
                NegTarget::HatKneser | NegTarget::HatSchrijver => args.n + 1 - args.k,
                NegTarget::Schrijver => args.n + 2 - args.k,
            };
            let count = args.count.unwrap_or(default_count);
            let cover = constructions::cover_b_i_plus(args.n, args.k, count, target)?;
            let verified = cover
                .graph
                .edges()
                .iter()
                .all(|&(u, v)| cover.colors[u] != cover.colors[v]);
            let mut text = format!("construction bi-plus\ncolors {count}\n");
            for (v, s) in cover.vertices.iter().enumerate() {
                text.push_str(&format!("v {} label {} color {}\n", v + 1, s, cover.colors[v] + 1));
            }
            text.push_str(&format!("verified {verified}\n"));
            emit(&text, args.output.as_ref())?;
            Ok(if verified { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        ConstructKind::Equator => {
            let disc = topo::borsuk_discretization(args.d, args.eps, args.res, args.seed)?;
            let tau = args.tau.unwrap_or(args.eps);
            let coloring = constructions::equator_cover(&disc, tau)?;
            let verified = disc.graph.verify_balanced_coloring(&coloring.colors)?.is_accepted();
            let labels: Vec<String> = (0..disc.points.len())
                .map(|i| disc.graph.label(i).unwrap_or("-").to_string())
                .collect();
            let mut text = render_certificate("equator", &labels, &coloring);
            text.push_str(&format!("verified {verified}\n"));
            emit(&text, args.output.as_ref())?;
            Ok(if verified { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}
