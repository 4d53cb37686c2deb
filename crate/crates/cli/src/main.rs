use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use moeakit::autodiff::{gradients, Request};
use moeakit::config::RunConfig;
use moeakit::decomposition::{Decomposition, Method};
use moeakit::indicators::{gd, gd_plus, hypervolume, igd, igd_plus, ReferenceFront};
use moeakit::io::{fmt_sig, write_file, Table};
use moeakit::mcdm::{closest_to_weights, compromise, pseudo_weights, tradeoff_metric};
use moeakit::problems::{analytic_front, make_problem, PROBLEM_NAMES};
use moeakit::viz::{build, write_svg, PlotKind, PlotSpec};
use moeakit::{Error, Matrix, Result};

#[derive(Parser)]
#[command(name = "moeakit", version, about = "Multi-objective evolutionary optimization toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an optimization from a JSON config.
    Run {
        config: PathBuf,
        /// Overrides `output_dir` from the config.
        #[arg(long)]
        output_dir: Option<PathBuf>,
        /// Per-generation progress on stderr.
        #[arg(long)]
        verbose: bool,
    },
    /// Compute a performance indicator of a solution set.
    Indicator(IndicatorArgs),
    /// Pick a solution from a result set.
    Decide {
        #[command(subcommand)]
        method: DecideCommand,
    },
    /// Export a plot as SVG.
    Plot(PlotArgs),
    /// Built-in problem catalogue.
    Problems {
        #[command(subcommand)]
        action: ProblemsCommand,
    },
    /// Exact gradients of a built-in problem at a point.
    Gradient {
        #[arg(long)]
        problem: String,
        #[arg(long)]
        n_var: Option<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        at: Vec<f64>,
        /// Also differentiate the inequality constraints.
        #[arg(long)]
        constraints: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum IndicatorKind {
    Gd,
    Igd,
    GdPlus,
    IgdPlus,
    Hv,
}

#[derive(Args)]
struct IndicatorArgs {
    #[arg(long)]
    kind: IndicatorKind,
    /// Solution set CSV (f1..fM columns, or all columns).
    #[arg(long)]
    set: PathBuf,
    /// Reference front CSV.
    #[arg(long, conflicts_with = "problem")]
    front: Option<PathBuf>,
    /// Use the analytic front of a built-in problem instead of `--front`.
    #[arg(long)]
    problem: Option<String>,
    #[arg(long, default_value_t = 500)]
    n_points: usize,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    ref_point: Option<Vec<f64>>,
}

#[derive(Args)]
struct DecideIo {
    /// Result CSV.
    #[arg(long = "in")]
    input: PathBuf,
    /// Annotated CSV with the appended columns.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum DecideCommand {
    /// Appends w1..wM; selects the row closest to `--target` (uniform by default).
    PseudoWeights {
        #[command(flatten)]
        io: DecideIo,
        #[arg(long, value_delimiter = ',')]
        target: Option<Vec<f64>>,
    },
    /// Appends mu; selects the highest trade-off row.
    Tradeoff {
        #[command(flatten)]
        io: DecideIo,
        #[arg(long)]
        neighbors: Option<usize>,
    },
    /// Appends the scalarized value; selects its minimum.
    Compromise {
        #[command(flatten)]
        io: DecideIo,
        #[arg(long)]
        method: String,
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<f64>,
        /// Defaults to the origin.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        ideal: Option<Vec<f64>>,
        #[arg(long)]
        theta: Option<f64>,
        #[arg(long)]
        rho: Option<f64>,
    },
}

#[derive(Args)]
struct PlotArgs {
    #[arg(long)]
    kind: String,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    normalize: bool,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    ideal: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    nadir: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    highlight: Vec<usize>,
    /// Heatmap: sort rows lexicographically.
    #[arg(long)]
    sort: bool,
    /// Petal/radar: which row to draw.
    #[arg(long, default_value_t = 0)]
    row: usize,
    /// Comma-separated hex stops for the heatmap color map.
    #[arg(long, value_delimiter = ',')]
    colormap: Vec<String>,
}

#[derive(Subcommand)]
enum ProblemsCommand {
    List,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_runtime() { 3 } else { 2 })
        }
    }
}

fn dispatch(command: Command) -> Result<()> {
    match command {
        Command::Run { config, output_dir, verbose } => cmd_run(&config, output_dir.as_deref(), verbose),
        Command::Indicator(args) => cmd_indicator(args),
        Command::Decide { method } => cmd_decide(method),
        Command::Plot(args) => cmd_plot(args),
        Command::Problems { action: ProblemsCommand::List } => {
            let mut out = std::io::stdout().lock();
            for name in PROBLEM_NAMES {
                let _ = writeln!(out, "{name}");
            }
            Ok(())
        }
        Command::Gradient { problem, n_var, at, constraints } => {
            cmd_gradient(&problem, n_var, &at, constraints)
        }
    }
}

fn cmd_run(config: &Path, output_dir: Option<&Path>, verbose: bool) -> Result<()> {
    let cfg = RunConfig::load(config)?;
    let mut progress = |r: &moeakit::moea::GenerationReport| eprintln!("{r}");
    let observer: Option<&mut dyn FnMut(&moeakit::moea::GenerationReport)> =
        if verbose || cfg.verbose { Some(&mut progress) } else { None };
    let summary = cfg.execute(output_dir, observer)?;
    let dir = output_dir.unwrap_or(&cfg.output_dir);
    println!(
        "n_eval={} n_gen={} n_final={} output={}",
        summary.n_eval,
        summary.n_gen,
        summary.n_final,
        dir.display()
    );
    Ok(())
}

fn read_objectives(path: &Path) -> Result<Matrix> {
    let f = Table::read(path)?.objectives();
    if f.is_empty() {
        return Err(Error::Csv { path: path.to_path_buf(), msg: "no data rows".into() });
    }
    Ok(f)
}

fn cmd_indicator(args: IndicatorArgs) -> Result<()> {
    let set = read_objectives(&args.set)?;
    let value = match args.kind {
        IndicatorKind::Hv => {
            let r = args.ref_point.ok_or_else(|| {
                Error::InvalidArgument("hv needs --ref-point".into())
            })?;
            let hv = hypervolume(&set, &r)?;
            if hv.discarded > 0 {
                eprintln!("warning: {} point(s) do not dominate the reference point", hv.discarded);
            }
            hv.value
        }
        kind => {
            let front = match (&args.front, &args.problem) {
                (Some(path), _) => read_objectives(path)?,
                (None, Some(name)) => analytic_front(name, args.n_points)?,
                (None, None) => {
                    return Err(Error::InvalidArgument("--front or --problem is required".into()))
                }
            };
            let front = ReferenceFront::new(front)?;
            let pf = front.points();
            match kind {
                IndicatorKind::Gd => gd(&set, pf)?,
                IndicatorKind::Igd => igd(&set, pf)?,
                IndicatorKind::GdPlus => gd_plus(&set, pf)?,
                IndicatorKind::IgdPlus => igd_plus(&set, pf)?,
                IndicatorKind::Hv => unreachable!(),
            }
        }
    };
    println!("{}", fmt_sig(value, 12));
    Ok(())
}

fn cmd_decide(command: DecideCommand) -> Result<()> {
    let (io, names, extra, selected) = match command {
        DecideCommand::PseudoWeights { io, target } => {
            let f = read_objectives(&io.input)?;
            let pw = pseudo_weights(&f)?;
            for (i, _) in pw.degenerate.iter().enumerate().filter(|(_, d)| **d) {
                eprintln!("warning: row {i} has no spread to the worst point; uniform weights used");
            }
            let m = f[0].len();
            let target = target.unwrap_or_else(|| vec![1.0 / m as f64; m]);
            let best = closest_to_weights(&pw, &target)?;
            let names = (1..=m).map(|j| format!("w{j}")).collect();
            (io, names, pw.weights, best)
        }
        DecideCommand::Tradeoff { io, neighbors } => {
            let f = read_objectives(&io.input)?;
            let t = tradeoff_metric(&f, neighbors)?;
            let best = t.best();
            let extra = t.mu.iter().map(|&v| vec![v]).collect();
            (io, vec!["mu".to_string()], extra, best)
        }
        DecideCommand::Compromise { io, method, weights, ideal, theta, rho } => {
            let f = read_objectives(&io.input)?;
            let method: Method = method.parse()?;
            let m = weights.len();
            let mut d = Decomposition::new(method, weights).with_ideal(ideal.unwrap_or(vec![0.0; m]));
            if let Some(t) = theta {
                d.theta = t;
            }
            if let Some(r) = rho {
                d.rho = r;
            }
            let best = compromise(&f, &d)?;
            let extra = f.iter().map(|r| d.apply(r).map(|v| vec![v])).collect::<Result<Matrix>>()?;
            (io, vec!["scalar".to_string()], extra, best)
        }
    };
    if let Some(out) = &io.out {
        let table = Table::read(&io.input)?;
        write_file(out, &table.with_columns(&names, &extra))?;
    }
    println!("{selected}");
    Ok(())
}

fn cmd_plot(args: PlotArgs) -> Result<()> {
    let kind: PlotKind = args.kind.parse()?;
    let data = read_objectives(&args.input)?;
    let mut spec = PlotSpec::new(kind, data);
    spec.normalize = args.normalize;
    spec.ideal = args.ideal;
    spec.nadir = args.nadir;
    spec.highlight = args.highlight;
    spec.sort_rows = args.sort;
    spec.row = args.row;
    if !args.colormap.is_empty() {
        spec.style.colormap = args.colormap;
    }
    let geometry = build(&spec)?;
    write_svg(&geometry, &args.out)
}

fn cmd_gradient(name: &str, n_var: Option<usize>, at: &[f64], constraints: bool) -> Result<()> {
    let problem = make_problem(name, n_var)?;
    let want = if constraints { Request::FG } else { Request::F };
    let grads = gradients(problem.as_ref(), at, want)?;
    let eval = problem.evaluate(at);
    let mut doc = serde_json::json!({
        "problem": name,
        "x": at,
        "f": eval.f,
        "df": grads.df,
    });
    if constraints {
        doc["g"] = serde_json::json!(eval.g);
        doc["dg"] = serde_json::json!(grads.dg);
    }
    println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
    Ok(())
}
