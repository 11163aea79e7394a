//! `wiener` — exact Wiener indices, Harary graphs, k-connectivity bounds
//! and exhaustive small-order verification.
//!
//! Exit codes: 0 success, 1 verification mismatch or theorem violation,
//! 2 usage or parse errors.

#![forbid(unsafe_code)]

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use wiener_cli::{
    decode_graph6, encode_graph6, format_edge_list, parse_edge_list, report, EdgeListError,
    Graph6Error, ReportEnvelope,
};
use wiener_core::{
    bound_report, harary, harary_closed_form, rational, verify_bounds, verify_closed_forms,
    BoundsVerification, DomainError, ExtremalReport, Graph, HararyError, Rational, ScanOptions,
    SearchError,
};

#[derive(Parser)]
#[command(
    name = "wiener",
    version,
    about = "Exact Wiener indices, Harary graphs and sharp k-connectivity bounds",
    propagate_version = true
)]
struct Cli {
    /// Report format for computation commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for exhaustive scans (defaults to all cores).
    #[arg(long, global = true, env = "WIENER_WORKERS")]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    /// `n <count>` header plus one `u v` line per edge.
    EdgeList,
    /// graph6 short form, orders up to 62.
    Graph6,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the Harary graph H_{k,n} and print it.
    Harary {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::EdgeList)]
        out: GraphFormat,
    },
    /// Wiener index, diameter and optional per-vertex statuses of a graph
    /// read from FILE (edge list, or graph6 when the header line is absent).
    Wiener {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        per_vertex: bool,
    },
    /// Closed-form diameter, statuses and Wiener index of H_{k,n}.
    ClosedForm {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
    },
    /// Upper bounds on diameter, status and Wiener index of k-connected
    /// graphs of order n, as exact rationals and floors.
    Bounds {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
    },
    /// Verification suites; nonzero exit on any mismatch or violation.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Extremal Wiener index over k-connected graphs of order n, with a
    /// maximizing witness.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Allow the full n = 8 scan and report progress.
        #[arg(long)]
        full: bool,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Compare the closed forms against BFS over 2 <= k <= k-max,
    /// k+2 <= n <= n-max.
    Formulas {
        #[arg(long = "k-max")]
        k_max: u64,
        #[arg(long = "n-max")]
        n_max: u64,
    },
    /// Exhaustively check the Wiener, status and diameter bounds over all
    /// k-connected graphs of order n.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Allow the full n = 8 scan and report progress.
        #[arg(long)]
        full: bool,
    },
}

enum CliError {
    Io { path: PathBuf, message: String },
    EdgeList(EdgeListError),
    Graph6(Graph6Error),
    Domain(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io { path, message } => {
                write!(f, "cannot read {}: {message}", path.display())
            }
            CliError::EdgeList(e) => write!(f, "{e}"),
            CliError::Graph6(e) => write!(f, "{e}"),
            CliError::Domain(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<EdgeListError> for CliError {
    fn from(e: EdgeListError) -> Self {
        CliError::EdgeList(e)
    }
}

impl From<Graph6Error> for CliError {
    fn from(e: Graph6Error) -> Self {
        CliError::Graph6(e)
    }
}

impl From<DomainError> for CliError {
    fn from(e: DomainError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<HararyError> for CliError {
    fn from(e: HararyError) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.workers {
        Some(workers) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build();
            match pool {
                Ok(pool) => pool.install(|| run(&cli)),
                Err(e) => Err(CliError::Domain(format!("cannot build worker pool: {e}"))),
            }
        }
        None => run(&cli),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Harary { k, n, out } => run_harary(*k, *n, *out),
        Command::Wiener { input, per_vertex } => run_wiener(cli.format, input, *per_vertex),
        Command::ClosedForm { k, n } => run_closed_form(cli.format, *k, *n),
        Command::Bounds { k, n } => run_bounds(cli.format, *k, *n),
        Command::Verify { what } => match what {
            VerifyCommand::Formulas { k_max, n_max } => {
                run_verify_formulas(cli.format, *k_max, *n_max)
            }
            VerifyCommand::Bounds { n, k, full } => run_verify_bounds(cli.format, *n, *k, *full),
        },
        Command::Extremal { n, k, full } => run_extremal(cli.format, *n, *k, *full),
    }
}

fn rat_text(r: &Rational) -> String {
    if rational::is_integer(r) {
        r.numer().to_string()
    } else {
        rational::fraction_string(r)
    }
}

fn run_harary(k: usize, n: usize, out: GraphFormat) -> Result<ExitCode, CliError> {
    let g = harary(k, n)?;
    match out {
        GraphFormat::EdgeList => print!("{}", format_edge_list(&g)),
        GraphFormat::Graph6 => println!("{}", encode_graph6(&g)?),
    }
    Ok(ExitCode::SUCCESS)
}

fn load_graph(path: &PathBuf) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.clone(),
        message: e.to_string(),
    })?;
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    if first.trim_start().starts_with("n ") || first.trim() == "n" {
        Ok(parse_edge_list(&text)?)
    } else {
        Ok(decode_graph6(&text)?)
    }
}

fn run_wiener(format: Format, input: &PathBuf, per_vertex: bool) -> Result<ExitCode, CliError> {
    let g = load_graph(input)?;
    let wiener = g
        .wiener()
        .map_err(|e| CliError::Domain(e.to_string()))?;
    let diameter = g.diameter().map_err(|e| CliError::Domain(e.to_string()))?;
    let rows: Option<Vec<(usize, u64, u32)>> = if per_vertex {
        let mut rows = Vec::with_capacity(g.n());
        for v in 0..g.n() {
            rows.push((
                v,
                g.status(v).map_err(|e| CliError::Domain(e.to_string()))?,
                g.eccentricity(v).map_err(|e| CliError::Domain(e.to_string()))?,
            ));
        }
        Some(rows)
    } else {
        None
    };

    match format {
        Format::Text => {
            println!("n {}", g.n());
            println!("edges {}", g.edge_count());
            println!("wiener {wiener}");
            println!("diameter {diameter}");
            if let Some(rows) = &rows {
                println!("vertex  status  eccentricity");
                for (v, status, ecc) in rows {
                    println!("{v:<7} {status:<7} {ecc}");
                }
            }
        }
        Format::Json => {
            let mut results = Map::new();
            results.insert("n".into(), Value::from(g.n()));
            results.insert("edges".into(), Value::from(g.edge_count()));
            results.insert("wiener".into(), Value::from(wiener));
            results.insert("diameter".into(), Value::from(diameter));
            if let Some(rows) = &rows {
                let list: Vec<Value> = rows
                    .iter()
                    .map(|(v, status, ecc)| {
                        let mut row = Map::new();
                        row.insert("vertex".into(), Value::from(*v));
                        row.insert("status".into(), Value::from(*status));
                        row.insert("eccentricity".into(), Value::from(*ecc));
                        Value::Object(row)
                    })
                    .collect();
                results.insert("per_vertex".into(), Value::Array(list));
            }
            let envelope = ReportEnvelope::new("wiener")
                .param("in", input.display())
                .param("per-vertex", per_vertex)
                .results(Value::Object(results));
            println!("{}", envelope.to_json());
        }
        Format::Csv => {
            if let Some(rows) = &rows {
                println!("vertex,status,eccentricity");
                for (v, status, ecc) in rows {
                    println!("{v},{status},{ecc}");
                }
            } else {
                println!("n,edges,wiener,diameter");
                println!("{},{},{wiener},{diameter}", g.n(), g.edge_count());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_closed_form(format: Format, k: u64, n: u64) -> Result<ExitCode, CliError> {
    let form = harary_closed_form(k, n)?;
    let z_text = form
        .status_z
        .as_ref()
        .map(rat_text)
        .unwrap_or_else(|| "-".to_owned());
    match format {
        Format::Text => {
            println!("k   n   regime         D   W(x)   W(z)   W");
            println!(
                "{:<3} {:<3} {:<14} {:<3} {:<6} {:<6} {}",
                form.k,
                form.n,
                form.regime.label(),
                form.diameter,
                rat_text(&form.status_x),
                z_text,
                rat_text(&form.wiener)
            );
        }
        Format::Json => {
            let mut results = Map::new();
            results.insert("k".into(), Value::from(form.k));
            results.insert("n".into(), Value::from(form.n));
            results.insert("regime".into(), Value::from(form.regime.label()));
            results.insert("diameter".into(), Value::from(form.diameter));
            results.insert("status_x".into(), report::rational_value(&form.status_x));
            results.insert(
                "status_z".into(),
                form.status_z
                    .as_ref()
                    .map(report::rational_value)
                    .unwrap_or(Value::Null),
            );
            results.insert("wiener".into(), report::rational_value(&form.wiener));
            let envelope = ReportEnvelope::new("closed-form")
                .param("k", k)
                .param("n", n)
                .results(Value::Object(results));
            println!("{}", envelope.to_json());
        }
        Format::Csv => {
            println!("k,n,regime,diameter,status_x,status_z,wiener");
            println!(
                "{},{},{},{},{},{},{}",
                form.k,
                form.n,
                form.regime.label(),
                form.diameter,
                rat_text(&form.status_x),
                z_text,
                rat_text(&form.wiener)
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_bounds(format: Format, k: u64, n: u64) -> Result<ExitCode, CliError> {
    let r = bound_report(n, k)?;
    let mean_text = r
        .mean_distance_bound
        .as_ref()
        .map(rational::fraction_string)
        .unwrap_or_else(|| "-".to_owned());
    match format {
        Format::Text => {
            println!("n = {n}, k = {k}");
            println!("diameter_bound       {}", r.diameter_bound);
            println!("status_bound         {}", rat_text(&r.status_bound));
            println!("wiener_bound         {}", rat_text(&r.wiener_bound));
            println!("wiener_bound_floor   {}", r.wiener_bound_floor);
            println!("mean_distance_bound  {mean_text}");
            if r.boundary_complete {
                println!("note: k = n - 1, formulas coincide with the complete graph");
            }
        }
        Format::Json => {
            let floor: u64 = r
                .wiener_bound_floor
                .to_string()
                .parse()
                .map_err(|_| CliError::Domain("wiener bound floor exceeds u64".into()))?;
            let mut results = Map::new();
            results.insert("diameter_bound".into(), Value::from(r.diameter_bound));
            results.insert("status_bound".into(), report::rational_value(&r.status_bound));
            results.insert("wiener_bound".into(), report::rational_value(&r.wiener_bound));
            results.insert("wiener_bound_floor".into(), Value::from(floor));
            results.insert(
                "mean_distance_bound".into(),
                r.mean_distance_bound
                    .as_ref()
                    .map(report::rational_value)
                    .unwrap_or(Value::Null),
            );
            results.insert("boundary_complete".into(), Value::from(r.boundary_complete));
            let envelope = ReportEnvelope::new("bounds")
                .param("k", k)
                .param("n", n)
                .results(Value::Object(results));
            println!("{}", envelope.to_json());
        }
        Format::Csv => {
            println!(
                "n,k,diameter_bound,status_bound,wiener_bound,wiener_bound_floor,mean_distance_bound,boundary_complete"
            );
            println!(
                "{n},{k},{},{},{},{},{mean_text},{}",
                r.diameter_bound,
                rational::fraction_string(&r.status_bound),
                rational::fraction_string(&r.wiener_bound),
                r.wiener_bound_floor,
                r.boundary_complete
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify_formulas(format: Format, k_max: u64, n_max: u64) -> Result<ExitCode, CliError> {
    if k_max < 2 || n_max < 4 {
        return Err(CliError::Domain(format!(
            "sweep needs k-max >= 2 and n-max >= 4, got {k_max} and {n_max}"
        )));
    }
    let report = verify_closed_forms(2..=k_max, 4..=n_max);
    let mismatch_count = report.mismatches.len();
    match format {
        Format::Text => {
            println!(
                "checked {} pairs (2 <= k <= {k_max}, k+2 <= n <= {n_max}): {mismatch_count} mismatches",
                report.pairs_checked
            );
            for c in &report.mismatches {
                println!(
                    "(k={}, n={}, {}): {}",
                    c.k,
                    c.n,
                    c.regime.label(),
                    c.mismatch.as_deref().unwrap_or("")
                );
            }
        }
        Format::Json => {
            let rows: Vec<Value> = report
                .mismatches
                .iter()
                .map(|c| {
                    let mut row = Map::new();
                    row.insert("k".into(), Value::from(c.k));
                    row.insert("n".into(), Value::from(c.n));
                    row.insert("regime".into(), Value::from(c.regime.label()));
                    row.insert(
                        "detail".into(),
                        Value::from(c.mismatch.clone().unwrap_or_default()),
                    );
                    row.insert("observed_wiener".into(), Value::from(c.observed_wiener));
                    row.insert(
                        "expected_wiener".into(),
                        report::rational_value(&c.expected_wiener),
                    );
                    Value::Object(row)
                })
                .collect();
            let mut results = Map::new();
            results.insert("pairs_checked".into(), Value::from(report.pairs_checked));
            results.insert("mismatch_count".into(), Value::from(mismatch_count));
            results.insert("mismatches".into(), Value::Array(rows));
            let envelope = ReportEnvelope::new("verify-formulas")
                .param("k-max", k_max)
                .param("n-max", n_max)
                .results(Value::Object(results));
            println!("{}", envelope.to_json());
        }
        Format::Csv => {
            println!("k,n,regime,detail");
            for c in &report.mismatches {
                println!(
                    "{},{},{},{}",
                    c.k,
                    c.n,
                    c.regime.label(),
                    report::csv_field(c.mismatch.as_deref().unwrap_or(""))
                );
            }
            eprintln!(
                "checked {} pairs: {mismatch_count} mismatches",
                report.pairs_checked
            );
        }
    }
    Ok(if mismatch_count == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn scan_error(e: SearchError) -> CliError {
    match e {
        SearchError::OrderOutOfRange { n: 8, .. } => {
            CliError::Domain("the n = 8 scan visits 268M graphs; request it with --full".into())
        }
        other => CliError::Domain(other.to_string()),
    }
}

fn scan_options(full: bool) -> ScanOptions<'static> {
    fn progress(done: u64, total: u64) {
        if done % 256 == 0 || done == total {
            eprint!("\rscanned {done}/{total} chunks");
            if done == total {
                eprintln!();
            }
        }
    }
    ScanOptions {
        allow_order_eight: full,
        progress: if full { Some(&progress) } else { None },
    }
}

fn run_verify_bounds(format: Format, n: usize, k: usize, full: bool) -> Result<ExitCode, CliError> {
    match verify_bounds(n, k, &scan_options(full)) {
        Ok(v) => {
            print_bounds_verification(format, n, k, &v);
            Ok(ExitCode::SUCCESS)
        }
        Err(SearchError::BoundViolation {
            quantity,
            n,
            k,
            observed,
            bound,
            witness,
        }) => {
            eprintln!(
                "theorem violation: {quantity} bound at n = {n}, k = {k}: observed {observed} > bound {bound}; witness edges {}",
                report::edges_token(&witness)
            );
            Ok(ExitCode::from(1))
        }
        Err(e) => Err(scan_error(e)),
    }
}

fn print_bounds_verification(format: Format, n: usize, k: usize, v: &BoundsVerification) {
    match format {
        Format::Text => {
            println!(
                "n = {n}, k = {k}: scanned {} graphs, {} are {k}-connected",
                v.extremal.graphs_scanned, v.extremal.k_connected_count
            );
            println!(
                "wiener    max {:<6} bound {:<8} {}",
                v.extremal.max_wiener,
                rat_text(&v.extremal.bound),
                if v.extremal.tight { "tight" } else { "strict" }
            );
            println!(
                "status    max {:<6} bound {:<8} {}",
                v.status.max_status,
                rat_text(&v.status.bound),
                if v.status.attained { "attained" } else { "strict" }
            );
            println!(
                "diameter  max {:<6} bound {:<8} {}",
                v.diameter.max_diameter,
                v.diameter.bound,
                if v.diameter.attained { "attained" } else { "strict" }
            );
            println!(
                "witness (max wiener): {}",
                report::edges_token(&v.extremal.witness_edges)
            );
            println!("all bounds hold");
        }
        Format::Json => {
            let mut wiener = Map::new();
            wiener.insert("max".into(), Value::from(v.extremal.max_wiener));
            wiener.insert("bound".into(), report::rational_value(&v.extremal.bound));
            wiener.insert("gap".into(), report::rational_value(&v.extremal.gap));
            wiener.insert("tight".into(), Value::from(v.extremal.tight));
            wiener.insert(
                "witness".into(),
                Value::from(report::edges_token(&v.extremal.witness_edges)),
            );
            let mut status = Map::new();
            status.insert("max".into(), Value::from(v.status.max_status));
            status.insert("bound".into(), report::rational_value(&v.status.bound));
            status.insert("attained".into(), Value::from(v.status.attained));
            let mut diameter = Map::new();
            diameter.insert("max".into(), Value::from(v.diameter.max_diameter));
            diameter.insert("bound".into(), Value::from(v.diameter.bound));
            diameter.insert("attained".into(), Value::from(v.diameter.attained));
            let mut results = Map::new();
            results.insert("graphs_scanned".into(), Value::from(v.extremal.graphs_scanned));
            results.insert(
                "k_connected_count".into(),
                Value::from(v.extremal.k_connected_count),
            );
            results.insert("wiener".into(), Value::Object(wiener));
            results.insert("status".into(), Value::Object(status));
            results.insert("diameter".into(), Value::Object(diameter));
            let envelope = ReportEnvelope::new("verify-bounds")
                .param("k", k)
                .param("n", n)
                .results(Value::Object(results));
            println!("{}", envelope.to_json());
        }
        Format::Csv => {
            println!("quantity,max,bound,attained");
            println!(
                "wiener,{},{},{}",
                v.extremal.max_wiener,
                rational::fraction_string(&v.extremal.bound),
                v.extremal.tight
            );
            println!(
                "status,{},{},{}",
                v.status.max_status,
                rational::fraction_string(&v.status.bound),
                v.status.attained
            );
            println!(
                "diameter,{},{},{}",
                v.diameter.max_diameter, v.diameter.bound, v.diameter.attained
            );
        }
    }
}

fn run_extremal(format: Format, n: usize, k: usize, full: bool) -> Result<ExitCode, CliError> {
    match wiener_core::extremal_wiener(n, k, &scan_options(full)) {
        Ok(r) => {
            print_extremal(format, n, k, &r);
            Ok(ExitCode::SUCCESS)
        }
        Err(SearchError::BoundViolation {
            quantity,
            observed,
            bound,
            witness,
            ..
        }) => {
            eprintln!(
                "theorem violation: {quantity} observed {observed} > bound {bound}; witness edges {}",
                report::edges_token(&witness)
            );
            Ok(ExitCode::from(1))
        }
        Err(e) => Err(scan_error(e)),
    }
}

fn print_extremal(format: Format, n: usize, k: usize, r: &ExtremalReport) {
    match format {
        Format::Text => {
            println!("n = {n}, k = {k}");
            println!("graphs_scanned     {}", r.graphs_scanned);
            println!("k_connected_count  {}", r.k_connected_count);
            println!("max_wiener         {}", r.max_wiener);
            println!("bound              {}", rat_text(&r.bound));
            println!("bound_floor        {}", r.bound_floor);
            println!("gap                {}", rat_text(&r.gap));
            println!("tight              {}", r.tight);
            println!("witness            {}", report::edges_token(&r.witness_edges));
        }
        Format::Json => {
            let mut results = Map::new();
            results.insert("graphs_scanned".into(), Value::from(r.graphs_scanned));
            results.insert("k_connected_count".into(), Value::from(r.k_connected_count));
            results.insert("max_wiener".into(), Value::from(r.max_wiener));
            results.insert("bound".into(), report::rational_value(&r.bound));
            results.insert("bound_floor".into(), Value::from(r.bound_floor.to_string()));
            results.insert("gap".into(), report::rational_value(&r.gap));
            results.insert("tight".into(), Value::from(r.tight));
            results.insert(
                "witness_edges".into(),
                Value::from(report::edges_token(&r.witness_edges)),
            );
            let envelope = ReportEnvelope::new("extremal")
                .param("k", k)
                .param("n", n)
                .results(Value::Object(results));
            println!("{}", envelope.to_json());
        }
        Format::Csv => {
            println!("n,k,graphs_scanned,k_connected_count,max_wiener,bound,bound_floor,gap,tight,witness");
            println!(
                "{n},{k},{},{},{},{},{},{},{},{}",
                r.graphs_scanned,
                r.k_connected_count,
                r.max_wiener,
                rational::fraction_string(&r.bound),
                r.bound_floor,
                rational::fraction_string(&r.gap),
                r.tight,
                report::csv_field(&report::edges_token(&r.witness_edges))
            );
        }
    }
}
