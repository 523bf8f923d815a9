use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use linecover::experiments::{
    cmd_chordal_bound_check, cmd_cover_build, cmd_kn_report, cmd_formula_table, cmd_mycielski_trend,
    cmd_verify, BuildKind, Built, NamedGraph, RunConfig,
};
use linecover::graph::line_graph;
use linecover::io::{load_graph, orientation_to_dot, to_json, GraphJson, OrientationFamilyJson};
use linecover::orientations::{exact_cover_number, CoverKind, OrientationFamily};
use linecover::{Error, Graph};

#[derive(Parser)]
#[command(name = "linecover", version, about = "Elbow covers of graphs and covers of their line graphs")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Opts {
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Vertex limit of the exact chromatic-number solver [default: 16, 32 for report-trend]
    #[arg(long, global = true)]
    budget_vertices: Option<usize>,
    /// Edge limit of the exact elb/inelb solvers
    #[arg(long, global = true, default_value_t = 12)]
    budget_edges: usize,
    #[arg(long, global = true, default_value_t = 4)]
    kmax: usize,
    /// Randomised attempts per graph (report-chordal-bound)
    #[arg(long, global = true, default_value_t = 20)]
    trials: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Accept non-canonical edge lists in JSON input
    #[arg(long, global = true)]
    normalize: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a spec such as complete:5 or random:8:0.4:7
    Gen { spec: String },
    /// Line graph of a graph spec or JSON file
    Linegraph { graph: String },
    /// Build a verified cover certificate
    CoverBuild {
        graph: String,
        /// equivalence, chordal, in-elbow, elbow or elbow-from-chordal
        #[arg(long, default_value = "elbow")]
        kind: String,
    },
    /// Verify a cover, orientation, orientation family or order family JSON file
    CoverVerify { path: PathBuf },
    /// Minimum elbow or in-elbow cover by exhaustive search
    ElbExact {
        graph: String,
        #[arg(long, default_value = "elbow")]
        kind: String,
    },
    /// elb against the lg lg chromatic-number formula
    #[command(alias = "report-theorem1")]
    ReportFormula {
        #[arg(default_values_t = ["complete:3", "complete:4", "complete:5", "path:3", "matching:2"].map(String::from))]
        graphs: Vec<String>,
    },
    /// Equivalence covers of L(K_n)
    ReportKn {
        #[arg(default_values_t = [3, 4, 5, 8, 16])]
        ns: Vec<usize>,
    },
    /// Chordal covering lower bound against verified covers
    #[command(alias = "report-cor3")]
    ReportChordalBound {
        #[arg(default_values_t = ["cycle:5", "path:3", "mycielski:4"].map(String::from))]
        graphs: Vec<String>,
    },
    /// Lower bound and covers along the Mycielski iterates
    ReportTrend {
        #[arg(default_values_t = [3, 4, 5])]
        ks: Vec<usize>,
    },
}

/// Exit statuses: 0 pass, 1 verification failure, 2 budget or input error.
enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn config(cli: &Cli, name: &str, sources: Vec<String>, default_vertices: usize) -> RunConfig {
    let mut cfg = RunConfig::new(name);
    cfg.sources = sources;
    cfg.seed = cli.opts.seed;
    cfg.trials = cli.opts.trials;
    cfg.budgets.vertices = cli.opts.budget_vertices.unwrap_or(default_vertices);
    cfg.budgets.edges = cli.opts.budget_edges;
    cfg.budgets.k_max = cli.opts.kmax;
    cfg
}

fn emit(cli: &Cli, text: String) -> Result<(), Error> {
    match &cli.opts.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn report<R: Serialize>(cli: &Cli, r: &R, text: impl FnOnce(&R) -> String, pass: bool) -> Result<Outcome, Error> {
    emit(cli, if cli.opts.format == Format::Json { to_json(r) } else { text(r) })?;
    Ok(if pass { Outcome::Pass } else { Outcome::Fail })
}

fn graph_out(cli: &Cli, g: &Graph, name: &str) -> Result<Outcome, Error> {
    emit(cli, match cli.opts.format {
        Format::Json => to_json(&GraphJson::from(g)),
        Format::Text => g.to_dot(name),
    })?;
    Ok(Outcome::Pass)
}

fn named(cli: &Cli, sources: &[String]) -> Result<Vec<NamedGraph>, Error> {
    sources
        .iter()
        .map(|s| load_graph(s, cli.opts.normalize).map(|(name, g)| NamedGraph::new(name, g)))
        .collect()
}

fn family_text(f: &OrientationFamily) -> String {
    let mut s = format!("# {} orientations, claimed: {:?}\n", f.len(), f.claimed());
    for (i, o) in f.members().iter().enumerate() {
        s += &orientation_to_dot(f.graph(), o, &format!("o{i}"));
    }
    s
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let normalize = cli.opts.normalize;
    match &cli.command {
        Command::Gen { spec } => {
            let (_, g) = load_graph(spec, normalize)?;
            graph_out(cli, &g, "G")
        }
        Command::Linegraph { graph } => {
            let (_, g) = load_graph(graph, normalize)?;
            graph_out(cli, &line_graph(&g).line, "L")
        }
        Command::CoverBuild { graph, kind } => {
            let (name, g) = load_graph(graph, normalize)?;
            let kind: BuildKind = kind.parse()?;
            let cfg = config(cli, "cover-build", vec![name], 16);
            let built = cmd_cover_build(&cfg, &g, kind)?;
            let text = match (&built, cli.opts.format) {
                (_, Format::Json) => built.to_json(),
                (Built::Family(f), Format::Text) => family_text(f),
                (Built::Cover(c), Format::Text) => {
                    let mut s = format!("# {} cover of the line graph, {} members\n", c.class(), c.len());
                    for (i, m) in c.members().iter().enumerate() {
                        s += &format!("member {i}: {m:?}\n");
                    }
                    s
                }
            };
            emit(cli, text)?;
            Ok(Outcome::Pass)
        }
        Command::CoverVerify { path } => {
            let text = std::fs::read_to_string(path)?;
            let v = cmd_verify(&text, normalize)?;
            let pass = v.pass;
            report(
                cli,
                &v,
                |v| {
                    let mut s = format!("{}: {} ({})\n", v.artifact, if v.pass { "PASS" } else { "FAIL" }, v.summary);
                    for p in &v.problems {
                        s += &format!("  {p}\n");
                    }
                    s
                },
                pass,
            )
        }
        Command::ElbExact { graph, kind } => {
            let (_, g) = load_graph(graph, normalize)?;
            let kind: CoverKind = kind.parse()?;
            let cfg = config(cli, "elb-exact", Vec::new(), 16);
            cfg.validate()?;
            match exact_cover_number(&g, kind, cfg.budgets.k_max, cfg.budgets.edges)? {
                Some(sol) => {
                    let fam = OrientationFamily::new(g, sol.witness)?.certify(kind)?;
                    emit(cli, match cli.opts.format {
                        Format::Json => to_json(&OrientationFamilyJson::from(&fam)),
                        Format::Text => format!("{kind} cover number: {}\n{}", sol.size, family_text(&fam)),
                    })?;
                    Ok(Outcome::Pass)
                }
                None => Err(Error::BudgetExceeded { what: "cover size", size: cfg.budgets.k_max + 1, budget: cfg.budgets.k_max }),
            }
        }
        Command::ReportFormula { graphs } => {
            let gs = named(cli, graphs)?;
            let cfg = config(cli, "report-formula", gs.iter().map(|g| g.name.clone()).collect(), 16);
            let r = cmd_formula_table(&cfg, &gs)?;
            report(cli, &r, |r| r.to_text(), r.pass)
        }
        Command::ReportKn { ns } => {
            let cfg = config(cli, "report-kn", ns.iter().map(|n| format!("complete:{n}")).collect(), 16);
            let r = cmd_kn_report(&cfg, ns)?;
            report(cli, &r, |r| r.to_text(), r.pass)
        }
        Command::ReportChordalBound { graphs } => {
            let gs = named(cli, graphs)?;
            let cfg = config(cli, "report-chordal-bound", gs.iter().map(|g| g.name.clone()).collect(), 16);
            let r = cmd_chordal_bound_check(&cfg, &gs)?;
            report(cli, &r, |r| r.to_text(), r.pass)
        }
        Command::ReportTrend { ks } => {
            let cfg = config(cli, "report-trend", ks.iter().map(|k| format!("mycielski:{k}")).collect(), 32);
            let r = cmd_mycielski_trend(&cfg, ks)?;
            report(cli, &r, |r| r.to_text(), r.pass)
        }
    }
}
