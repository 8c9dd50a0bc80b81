//! `bkw` — zeros of exponential-sum polynomial families, their limit sets,
//! empirical convergence checks, figure SVGs, linear recurrences, and exact
//! Tutte/Steele polynomials of small multigraphs.
//!
//! Exit codes: 0 success, 1 computation failure (including a failed
//! threshold check under `verify`), 2 usage error (bad flags, unknown
//! family, malformed input files).

mod svg;

use bkw_core::families::{builtin_family, BUILTIN_NAMES};
use bkw_core::graphpoly::{mean_mst_length, steele, tutte, Multigraph};
use bkw_core::limitset::{limit_set, Window};
use bkw_core::poly::{ComplexPoly, ExpSumFamily};
use bkw_core::recurrence::to_recurrence;
use bkw_core::rootfind::{family_roots, family_roots_at, RootSet, DEFAULT_FAMILY_TOL};
use bkw_core::verify::{convergence_report, converse_residual};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "bkw",
    version,
    about = "Zeros, limit sets, and graph polynomials of exponential-sum families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// All roots of P_n over an index range, as CSV (n,re,im,residual) or JSON
    Zeros(ZerosArgs),
    /// Limit set (isolated points, persistent zeros, equimodular curves) as JSON
    Limitset(LimitsetArgs),
    /// Convergence report with a pass/fail summary against fixed thresholds
    Verify(VerifyArgs),
    /// SVG figure overlaying zeros (colored by index) with the limit set
    Plot(PlotArgs),
    /// Linear recurrence satisfied by the family, as JSON
    Recur(RecurArgs),
    /// Tutte polynomial of a multigraph, exact integer coefficients, as JSON
    Tutte(GraphArgs),
    /// Steele polynomial of a multigraph, exact rational coefficients, as JSON
    Steele(GraphArgs),
    /// Mean minimum-spanning-tree length under uniform [0,1] edge weights
    MstMean(GraphArgs),
}

#[derive(Args)]
struct ZerosArgs {
    /// Built-in family name (f, g, steele_cycle, independence, screl,
    /// domination) or path to a family JSON file
    #[arg(long)]
    family: String,
    /// Inclusive index range, e.g. 2..30
    #[arg(long)]
    n: String,
    /// Residual acceptance tolerance, relative to the largest expanded coefficient
    #[arg(long, default_value_t = DEFAULT_FAMILY_TOL)]
    tol: f64,
    /// Output format
    #[arg(long, value_enum, default_value_t = ZerosFormat::Csv)]
    out: ZerosFormat,
    /// Output path (stdout when omitted)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ZerosFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct LimitsetArgs {
    /// Built-in family name or path to a family JSON file
    #[arg(long)]
    family: String,
    /// Window as re_min,re_max,im_min,im_max
    #[arg(long, default_value = "-3,3,-3,3", allow_hyphen_values = true)]
    window: String,
    /// Grid resolution per axis for curve extraction
    #[arg(long, default_value_t = 512)]
    grid: usize,
    /// Output path (stdout when omitted)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Built-in family name or path to a family JSON file
    #[arg(long)]
    family: String,
    /// Inclusive index range, e.g. 10..40
    #[arg(long)]
    n: String,
    /// Window as re_min,re_max,im_min,im_max
    #[arg(long, default_value = "-3,3,-3,3", allow_hyphen_values = true)]
    window: String,
    /// Grid resolution per axis for curve extraction
    #[arg(long, default_value_t = 512)]
    grid: usize,
    /// Path for the JSON report (stdout when omitted; the summary always prints)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct PlotArgs {
    /// Built-in family name or path to a family JSON file
    #[arg(long)]
    family: String,
    /// Inclusive index range, e.g. 2..30
    #[arg(long)]
    n: String,
    /// Window as re_min,re_max,im_min,im_max
    #[arg(long, default_value = "-3,3,-3,3", allow_hyphen_values = true)]
    window: String,
    /// Grid resolution per axis for curve extraction
    #[arg(long, default_value_t = 512)]
    grid: usize,
    /// SVG output path
    #[arg(long)]
    output: PathBuf,
}

#[derive(Args)]
struct RecurArgs {
    /// Built-in family name or path to a family JSON file
    #[arg(long)]
    family: String,
    /// Output path (stdout when omitted)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GraphArgs {
    /// Path to a multigraph JSON file: {"n_vertices": 4, "edges": [[0,1], [1,2]]}
    #[arg(long)]
    graph: PathBuf,
    /// Output path (stdout when omitted)
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Errors carrying their exit code: usage mistakes exit 2, failures inside a
/// well-formed computation exit 1.
enum CliError {
    Usage(String),
    Compute(String),
}

type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn compute(msg: impl std::fmt::Display) -> CliError {
    CliError::Compute(msg.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = setup_threads().and_then(|()| match cli.command {
        Command::Zeros(a) => cmd_zeros(a),
        Command::Limitset(a) => cmd_limitset(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Plot(a) => cmd_plot(a),
        Command::Recur(a) => cmd_recur(a),
        Command::Tutte(a) => cmd_tutte(a),
        Command::Steele(a) => cmd_steele(a),
        Command::MstMean(a) => cmd_mst_mean(a),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Compute(msg)) => {
            eprintln!("bkw: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("bkw: {msg}");
            ExitCode::from(2)
        }
    }
}

/// `BKW_THREADS` caps internal parallelism; 0 or unset means automatic.
fn setup_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var("BKW_THREADS") else {
        return Ok(());
    };
    let k: usize = raw.trim().parse().map_err(|_| {
        usage(format!(
            "BKW_THREADS must be a nonnegative integer, got '{raw}'"
        ))
    })?;
    if k > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(compute)?;
    }
    Ok(())
}

fn load_family(arg: &str) -> CliResult<ExpSumFamily> {
    if let Some(spec) = builtin_family(arg) {
        return Ok(spec.family);
    }
    let path = std::path::Path::new(arg);
    if !path.is_file() {
        return Err(usage(format!(
            "unknown family '{arg}': not one of the built-ins ({}) and not a readable file",
            BUILTIN_NAMES.join(", ")
        )));
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("reading family file '{arg}': {e}")))?;
    ExpSumFamily::from_json_str(&text)
        .map_err(|e| usage(format!("parsing family file '{arg}': {e}")))
}

fn load_graph(path: &PathBuf) -> CliResult<Multigraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("reading graph file '{}': {e}", path.display())))?;
    let raw: Multigraph = serde_json::from_str(&text)
        .map_err(|e| usage(format!("parsing graph file '{}': {e}", path.display())))?;
    // Deserialization bypasses the constructor; revalidate the edge list.
    Multigraph::new(raw.n_vertices, raw.edges)
        .map_err(|e| usage(format!("invalid graph in '{}': {e}", path.display())))
}

fn parse_range(s: &str) -> CliResult<(i64, i64)> {
    let parsed = s.split_once("..").and_then(|(a, b)| {
        let a: i64 = a.trim().parse().ok()?;
        let b: i64 = b.trim().parse().ok()?;
        (a <= b).then_some((a, b))
    });
    parsed.ok_or_else(|| usage(format!("index range must be 'a..b' with a <= b, got '{s}'")))
}

fn parse_window(s: &str, grid: usize) -> CliResult<Window> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| {
            usage(format!(
                "window must be re_min,re_max,im_min,im_max, got '{s}'"
            ))
        })?;
    if parts.len() != 4 {
        return Err(usage(format!(
            "window must have exactly 4 comma-separated numbers, got '{s}'"
        )));
    }
    let window = Window {
        re_min: parts[0],
        re_max: parts[1],
        im_min: parts[2],
        im_max: parts[3],
        grid,
    };
    window
        .validate()
        .map_err(|e| usage(format!("invalid window '{s}': {e}")))?;
    Ok(window)
}

fn emit(output: &Option<PathBuf>, content: &str) -> CliResult<()> {
    match output {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| compute(format!("writing '{}': {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn roots_json(rs: &RootSet) -> serde_json::Value {
    serde_json::json!({
        "n": rs.n,
        "roots": rs.roots.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
        "residuals": rs.residuals,
    })
}

fn cmd_zeros(args: ZerosArgs) -> CliResult<()> {
    let family = load_family(&args.family)?;
    let (n_from, n_to) = parse_range(&args.n)?;
    let sweep = family_roots(&family, n_from, n_to, args.tol).map_err(compute)?;
    let content = match args.out {
        ZerosFormat::Csv => {
            let mut s = String::from("n,re,im,residual\n");
            for rs in &sweep {
                for (z, r) in rs.roots.iter().zip(&rs.residuals) {
                    let _ = writeln!(s, "{},{},{},{:e}", rs.n, z.re, z.im, r);
                }
            }
            s
        }
        ZerosFormat::Json => {
            let v = serde_json::json!({
                "family": family.name,
                "n_from": n_from,
                "n_to": n_to,
                "tol": args.tol,
                "sweep": sweep.iter().map(roots_json).collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("JSON"))
        }
    };
    emit(&args.output, &content)
}

fn cmd_limitset(args: LimitsetArgs) -> CliResult<()> {
    let family = load_family(&args.family)?;
    let window = parse_window(&args.window, args.grid)?;
    let set = limit_set(&family, &window).map_err(compute)?;
    let content = format!(
        "{}\n",
        serde_json::to_string_pretty(&set.to_json()).expect("JSON")
    );
    emit(&args.output, &content)
}

fn cmd_verify(args: VerifyArgs) -> CliResult<()> {
    let family = load_family(&args.family)?;
    let (n_from, n_to) = parse_range(&args.n)?;
    let window = parse_window(&args.window, args.grid)?;
    let set = limit_set(&family, &window).map_err(compute)?;
    let report = convergence_report(&family, n_from, n_to, &set).map_err(compute)?;

    let coverage_max = report
        .coverage
        .iter()
        .map(|&(_, d)| d)
        .fold(0.0_f64, f64::max);
    let balance_max = if family.k() == 2 {
        let roots = family_roots_at(&family, n_to, DEFAULT_FAMILY_TOL).map_err(compute)?;
        let mut worst = 0.0_f64;
        for &z in &roots.roots {
            worst = worst.max(converse_residual(&family, z, n_to).map_err(compute)?);
        }
        Some(worst)
    } else {
        None
    };

    let checks = [
        ("trend < 0.7", report.trend, 0.7, report.trend < 0.7),
        (
            "curve coverage <= 0.25",
            coverage_max,
            0.25,
            coverage_max <= 0.25,
        ),
    ];
    let mut lines = String::new();
    let mut all_pass = true;
    for (label, value, bound, pass) in checks {
        let _ = writeln!(
            lines,
            "{label}: {value:.4} vs {bound} -> {}",
            if pass { "PASS" } else { "FAIL" }
        );
        all_pass &= pass;
    }
    if let Some(worst) = balance_max {
        let pass = worst < 0.05;
        let _ = writeln!(
            lines,
            "two-term balance residual < 0.05: {worst:.3e} -> {}",
            if pass { "PASS" } else { "FAIL" }
        );
        all_pass &= pass;
    }

    let v = serde_json::json!({
        "family": family.name,
        "n_from": n_from,
        "n_to": n_to,
        "per_n": report.per_n.iter().map(|d| serde_json::json!({
            "n": d.n, "max_dist": d.max_dist, "mean_dist": d.mean_dist,
        })).collect::<Vec<_>>(),
        "trend": report.trend,
        "coverage_max": coverage_max,
        "balance_residual_max": balance_max,
        "pass": all_pass,
    });
    emit(
        &args.output,
        &format!("{}\n", serde_json::to_string_pretty(&v).expect("JSON")),
    )?;
    print!("{lines}");
    println!("overall: {}", if all_pass { "PASS" } else { "FAIL" });
    if all_pass {
        Ok(())
    } else {
        Err(compute("one or more threshold checks failed"))
    }
}

fn cmd_plot(args: PlotArgs) -> CliResult<()> {
    let family = load_family(&args.family)?;
    let (n_from, n_to) = parse_range(&args.n)?;
    let window = parse_window(&args.window, args.grid)?;
    let sweep = family_roots(&family, n_from, n_to, DEFAULT_FAMILY_TOL).map_err(compute)?;
    let set = limit_set(&family, &window).map_err(compute)?;

    let title = format!(
        "{} — zeros for n = {n_from}..{n_to} and limit set",
        family.name
    );
    let mut fig = svg::Figure::new(&title, &window);
    for (i, curve) in set.curves.iter().enumerate() {
        fig.polyline(
            &curve.points,
            svg::CURVE_COLORS[i % svg::CURVE_COLORS.len()],
        );
    }
    for rs in &sweep {
        let color = svg::n_color(rs.n, n_from, n_to);
        for &z in &rs.roots {
            fig.dot(z, &color, rs.n);
        }
    }
    for &(z, _) in &set.isolated {
        fig.cross(z, "#d62728");
    }
    for &z in &set.persistent {
        fig.cross(z, "#ff7f0e");
    }

    let mut entries: Vec<(&str, &str, String)> = vec![(
        "dot",
        "#08306b",
        format!("zeros of P_n, n = {n_from}..{n_to}"),
    )];
    if !set.curves.is_empty() {
        entries.push((
            "line",
            svg::CURVE_COLORS[0],
            "equimodular curves".to_string(),
        ));
    }
    if !set.isolated.is_empty() {
        entries.push(("cross", "#d62728", "isolated limit points".to_string()));
    }
    if !set.persistent.is_empty() {
        entries.push(("cross", "#ff7f0e", "persistent zeros".to_string()));
    }
    fig.legend(&entries);

    std::fs::write(&args.output, fig.finish())
        .map_err(|e| compute(format!("writing '{}': {e}", args.output.display())))
}

fn poly_pairs(p: &ComplexPoly) -> Vec<[f64; 2]> {
    p.coeffs.iter().map(|c| [c.re, c.im]).collect()
}

fn cmd_recur(args: RecurArgs) -> CliResult<()> {
    let family = load_family(&args.family)?;
    let rec = to_recurrence(&family).map_err(compute)?;
    let v = serde_json::json!({
        "family": family.name,
        "order": rec.order(),
        "f": rec.f.iter().map(|p| poly_pairs(p)).collect::<Vec<_>>(),
        "initials": rec.initials.iter().map(|p| poly_pairs(p)).collect::<Vec<_>>(),
    });
    emit(
        &args.output,
        &format!("{}\n", serde_json::to_string_pretty(&v).expect("JSON")),
    )
}

fn cmd_tutte(args: GraphArgs) -> CliResult<()> {
    let graph = load_graph(&args.graph)?;
    let t = tutte(&graph).map_err(compute)?;
    let v = serde_json::json!({
        "n_vertices": graph.n_vertices,
        "edges": graph.edges,
        "terms": t.to_term_list(),
        "display": t.to_string(),
    });
    emit(
        &args.output,
        &format!("{}\n", serde_json::to_string_pretty(&v).expect("JSON")),
    )
}

fn cmd_steele(args: GraphArgs) -> CliResult<()> {
    let graph = load_graph(&args.graph)?;
    let s = steele(&graph).map_err(compute)?;
    let v = serde_json::json!({
        "n_vertices": graph.n_vertices,
        "edges": graph.edges,
        "coefficients": s.coeff_strings(),
        "display": s.to_string(),
    });
    emit(
        &args.output,
        &format!("{}\n", serde_json::to_string_pretty(&v).expect("JSON")),
    )
}

fn cmd_mst_mean(args: GraphArgs) -> CliResult<()> {
    let graph = load_graph(&args.graph)?;
    let mean = mean_mst_length(&graph).map_err(compute)?;
    let v = serde_json::json!({
        "n_vertices": graph.n_vertices,
        "edges": graph.edges,
        "mean_mst_length": mean.to_string(),
    });
    emit(
        &args.output,
        &format!("{}\n", serde_json::to_string_pretty(&v).expect("JSON")),
    )
}
