mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use kirchhoff_core::extremal::{extremal_dkf, extremal_kf, generate_table, ExtremalResult};
use kirchhoff_core::linalg::laplacian_pinv;
use kirchhoff_core::multipartite::{
    dkf_closed, dkf_edge_count_form, kf_forms, minor_charpoly, multipartite_spectrum, resistance_closed,
    resistance_matrix_closed, spanning_trees,
};
use kirchhoff_core::oracle::{
    degree_kirchhoff_index, half_resistance_sum, kirchhoff_index, normalized_inverse_trace, resistance_matrix,
    spanning_tree_count, spanning_tree_count_deleting,
};
use kirchhoff_core::rational::{from_usize, to_decimal_string, to_exact_string, Rational};
use kirchhoff_core::spectral::{dkf_from_normalized_spectrum, kf_from_spectrum, laplacian_spectrum};
use kirchhoff_core::verify::verify;
use kirchhoff_core::{Error, Graph, PartitionSpec};

use output::{json_line, Format, Mode, Settings, FILE_DEFAULT_DIGITS};

/// Relative agreement required of floating-point routes under `--all-methods`.
const FLOAT_AGREEMENT: f64 = 1e-8;
const TABLE_DEFAULT_DIGITS: usize = 5;

#[derive(Parser, Debug)]
#[command(name = "kirchhoff", version, about = "Resistance distances and Kirchhoff indices, exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Resistance distance matrix, or one entry with --pair
    Resdist {
        #[command(flatten)]
        input: Input,
        /// Two 0-based vertex ids
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        pair: Option<Vec<usize>>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Kirchhoff index Kf
    Kirchhoff {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        all_methods: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Degree Kirchhoff index Kf′
    Dkirchhoff {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        all_methods: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Number of spanning trees
    Trees {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        all_methods: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Laplacian eigenvalues, descending
    Spectrum {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Characteristic polynomial det(L(A|A) − xI) of a Laplacian minor
    Minorpoly {
        #[arg(long, value_parser = parse_spec)]
        spec: PartitionSpec,
        /// Deleted vertices per part, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        t: Vec<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Brute-force extremes over all complete r-partite graphs on n vertices
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = IndexArg::Kf)]
        index: IndexArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Kf′ and Kf of every complete r-partite graph on n vertices, by edge count
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=40))]
        digits: Option<u32>,
    },
    /// Cross-check closed forms against the oracle and the float spectrum
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    /// Partition spec such as 2,3,4 or 2^3,3^2,5,7
    #[arg(long, value_parser = parse_spec)]
    spec: Option<PartitionSpec>,
    /// Edge-list file: vertex count on the first line, then one `u v` per line
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Significant digits for decimal output [env: KIRCHHOFF_DIGITS]
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=40))]
    digits: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum IndexArg {
    Kf,
    Dkf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
    Json,
}

fn parse_spec(text: &str) -> Result<PartitionSpec, String> {
    PartitionSpec::parse(text).map_err(|e| e.to_string())
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Compute(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSpec(_) | Error::InvalidArgument(_) | Error::Parse { .. } | Error::SelfLoop(_) => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Compute(other),
        }
    }
}

type CliResult = Result<String, CliError>;

enum Loaded {
    Spec(PartitionSpec),
    File(Graph),
}

impl Input {
    fn load(&self) -> Result<Loaded, CliError> {
        match (&self.spec, &self.file) {
            (Some(spec), None) => Ok(Loaded::Spec(spec.clone())),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
                Ok(Loaded::File(Graph::parse_edge_list(&text)?))
            }
            _ => Err(CliError::Usage("exactly one of --spec or --file is required".into())),
        }
    }
}

impl Loaded {
    fn is_file(&self) -> bool {
        matches!(self, Loaded::File(_))
    }

    fn graph(&self) -> Graph {
        match self {
            Loaded::Spec(spec) => Graph::complete_multipartite(spec),
            Loaded::File(g) => g.clone(),
        }
    }
}

fn settings(output: &OutputArgs, fallback: usize, file_input: bool) -> Result<Settings, CliError> {
    Settings::resolve(output.format, output.digits.map(|d| d as usize), fallback, file_input).map_err(CliError::Usage)
}

/// One route of a multi-method computation.
enum Route {
    Exact(Rational),
    Float(f64),
}

fn render_routes(quantity: &str, routes: &[(&str, Route)], s: &Settings) -> CliResult {
    let reference = routes
        .iter()
        .find_map(|(_, r)| match r {
            Route::Exact(v) => Some(v.clone()),
            Route::Float(_) => None,
        })
        .ok_or_else(|| CliError::Compute(Error::Internal("no exact route".into())))?;
    let target = kirchhoff_core::rational::to_f64(&reference);
    let agrees = |r: &Route| match r {
        Route::Exact(v) => *v == reference,
        Route::Float(f) => (f - target).abs() <= FLOAT_AGREEMENT * target.abs().max(1.0),
    };
    let all_agree = routes.iter().all(|(_, r)| agrees(r));

    let out = match s.format {
        Format::Json => {
            let methods: Vec<serde_json::Value> = routes
                .iter()
                .map(|(name, r)| match r {
                    Route::Exact(v) => {
                        let mut p = s.pair(v);
                        p["method"] = json!(name);
                        p
                    }
                    Route::Float(f) => json!({ "method": name, "float": f }),
                })
                .collect();
            json_line(&json!({
                "schema": 1,
                "quantity": quantity,
                "value": s.pair(&reference),
                "methods": methods,
                "agree": all_agree,
            }))
        }
        Format::Csv => {
            let mut out = String::from("method,exact,decimal\n");
            for (name, r) in routes {
                match r {
                    Route::Exact(v) => out.push_str(&format!(
                        "{name},{},{}\n",
                        to_exact_string(v),
                        to_decimal_string(v, s.digits)
                    )),
                    Route::Float(f) => out.push_str(&format!("{name},,{}\n", s.float(*f))),
                }
            }
            out
        }
        Format::Exact | Format::Decimal => {
            let width = routes.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
            let mut out = String::new();
            for (name, r) in routes {
                let shown = match (r, s.mode) {
                    (Route::Exact(v), _) => s.number(v),
                    (Route::Float(f), Mode::Decimal(_)) => s.float(*f),
                    (Route::Float(_), Mode::Exact) => {
                        if agrees(r) {
                            format!("agrees within {FLOAT_AGREEMENT:e}")
                        } else {
                            "disagrees".to_string()
                        }
                    }
                };
                out.push_str(&format!("{name:<width$}  {shown}\n"));
            }
            out.push_str(if all_agree { "all methods agree\n" } else { "methods DISAGREE\n" });
            out
        }
    };
    if all_agree {
        Ok(out)
    } else {
        print!("{out}");
        Err(CliError::Compute(Error::Internal(format!("{quantity} routes disagree"))))
    }
}

fn cmd_resdist(input: &Input, pair: Option<&[usize]>, output: &OutputArgs) -> CliResult {
    let loaded = input.load()?;
    let s = settings(output, FILE_DEFAULT_DIGITS, loaded.is_file())?;
    let matrix = match &loaded {
        Loaded::Spec(spec) => resistance_matrix_closed(spec)?,
        Loaded::File(g) => resistance_matrix(g)?,
    };
    if let Some(&[u, v]) = pair {
        let n = matrix.rows();
        for w in [u, v] {
            if w >= n {
                return Err(CliError::Usage(format!("vertex {w} out of range for {n} vertices")));
            }
        }
        let value = match &loaded {
            Loaded::Spec(spec) => resistance_closed(spec, spec.locate(u)?, spec.locate(v)?)?,
            Loaded::File(_) => matrix[(u, v)].clone(),
        };
        return Ok(s.scalar("resistance", &value));
    }
    Ok(match s.format {
        Format::Json => json_line(&json!({
            "schema": 1,
            "n": matrix.rows(),
            "resistance": matrix.to_json_value(),
        })),
        Format::Csv => {
            let mut out = matrix.render_rows(",", |v| s.number(v));
            out.push('\n');
            out
        }
        Format::Exact | Format::Decimal => {
            let cells: Vec<Vec<String>> = matrix.iter_rows().map(|row| row.iter().map(|v| s.number(v)).collect()).collect();
            let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
            let mut out = String::new();
            for row in cells {
                let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                out.push_str(&padded.join(" "));
                out.push('\n');
            }
            out
        }
    })
}

fn cmd_kirchhoff(input: &Input, all: bool, output: &OutputArgs) -> CliResult {
    let loaded = input.load()?;
    let s = settings(output, FILE_DEFAULT_DIGITS, loaded.is_file())?;
    if !all {
        let value = match &loaded {
            Loaded::Spec(spec) => kirchhoff_core::multipartite::kf_closed(spec)?,
            Loaded::File(g) => kirchhoff_index(g)?,
        };
        return Ok(s.scalar("kirchhoff", &value));
    }
    let g = loaded.graph();
    let n = from_usize(g.n());
    let mut routes = Vec::new();
    if let Loaded::Spec(spec) = &loaded {
        let forms = kf_forms(spec)?;
        routes.push(("reciprocal-sum", Route::Exact(forms.reciprocal_sum)));
        routes.push(("join-spectrum", Route::Exact(forms.join_spectrum)));
        routes.push(("part-trace", Route::Exact(forms.trace)));
    }
    routes.push(("n-trace-pinv", Route::Exact(&n * laplacian_pinv(&g)?.trace()?)));
    routes.push(("half-resistance-sum", Route::Exact(half_resistance_sum(&resistance_matrix(&g)?))));
    routes.push(("float-spectrum", Route::Float(kf_from_spectrum(&g)?)));
    render_routes("kirchhoff", &routes, &s)
}

fn cmd_dkirchhoff(input: &Input, all: bool, output: &OutputArgs) -> CliResult {
    let loaded = input.load()?;
    let s = settings(output, FILE_DEFAULT_DIGITS, loaded.is_file())?;
    if !all {
        let value = match &loaded {
            Loaded::Spec(spec) => dkf_closed(spec)?,
            Loaded::File(g) => degree_kirchhoff_index(g)?,
        };
        return Ok(s.scalar("degree_kirchhoff", &value));
    }
    let g = loaded.graph();
    let mut routes = Vec::new();
    if let Loaded::Spec(spec) = &loaded {
        routes.push(("closed-form", Route::Exact(dkf_closed(spec)?)));
    }
    routes.push(("degree-weighted-sum", Route::Exact(degree_kirchhoff_index(&g)?)));
    let two_m = from_usize(2 * g.edge_count());
    routes.push(("2m-normalized-trace", Route::Exact(two_m * normalized_inverse_trace(&g)?)));
    routes.push(("float-normalized-spectrum", Route::Float(dkf_from_normalized_spectrum(&g)?)));
    let mut out = render_routes("degree_kirchhoff", &routes, &s)?;
    if let (Loaded::Spec(spec), Format::Exact | Format::Decimal) = (&loaded, s.format) {
        // informational only; exact just for equal part sizes
        out.push_str(&format!("edge-count formula  {}\n", s.number(&dkf_edge_count_form(spec)?)));
    }
    Ok(out)
}

fn cmd_trees(input: &Input, all: bool, output: &OutputArgs) -> CliResult {
    let loaded = input.load()?;
    let s = settings(output, FILE_DEFAULT_DIGITS, loaded.is_file())?;
    let g = loaded.graph();
    if !all {
        let value = match &loaded {
            Loaded::Spec(spec) => spanning_trees(spec)?,
            Loaded::File(g) => spanning_tree_count(g)?,
        };
        return Ok(s.scalar("spanning_trees", &Rational::from_integer(value)));
    }
    let mut routes = Vec::new();
    if let Loaded::Spec(spec) = &loaded {
        routes.push(("closed-form", Route::Exact(Rational::from_integer(spanning_trees(spec)?))));
        routes.push(("join-spectrum", Route::Exact(multipartite_spectrum(spec).spanning_trees())));
    }
    routes.push(("matrix-tree", Route::Exact(Rational::from_integer(spanning_tree_count(&g)?))));
    if g.n() > 1 {
        let last = g.n() - 1;
        routes.push(("matrix-tree-last-vertex", Route::Exact(Rational::from_integer(spanning_tree_count_deleting(&g, last)?))));
    }
    let spectrum = laplacian_spectrum(&g)?;
    let product: f64 = spectrum.eigenvalues.iter().filter(|v| v.abs() >= 1e-7).product();
    routes.push(("float-spectrum", Route::Float(product / g.n() as f64)));
    render_routes("spanning_trees", &routes, &s)
}

fn cmd_spectrum(input: &Input, output: &OutputArgs) -> CliResult {
    let loaded = input.load()?;
    let s = settings(output, FILE_DEFAULT_DIGITS, loaded.is_file())?;
    match &loaded {
        Loaded::Spec(spec) => {
            let eigenvalues = multipartite_spectrum(spec).eigenvalues();
            Ok(match s.format {
                Format::Json => json_line(&json!({
                    "schema": 1,
                    "method": "join-spectrum",
                    "eigenvalues": eigenvalues.iter().map(|v| s.pair(v)).collect::<Vec<_>>(),
                })),
                Format::Csv => {
                    let mut out = String::from("exact,decimal\n");
                    for v in &eigenvalues {
                        out.push_str(&format!("{},{}\n", to_exact_string(v), to_decimal_string(v, s.digits)));
                    }
                    out
                }
                Format::Exact | Format::Decimal => eigenvalues.iter().map(|v| s.number(v) + "\n").collect(),
            })
        }
        Loaded::File(g) => {
            if s.mode == Mode::Exact {
                return Err(CliError::Usage(
                    "exact spectra are only available for --spec input; use --format decimal".into(),
                ));
            }
            let spectrum = laplacian_spectrum(g)?;
            Ok(match s.format {
                Format::Json => json_line(&json!({
                    "schema": 1,
                    "method": "jacobi",
                    "eigenvalues": spectrum.eigenvalues,
                    "residual": spectrum.residual,
                })),
                Format::Csv => {
                    let mut out = String::from("eigenvalue\n");
                    for v in &spectrum.eigenvalues {
                        out.push_str(&format!("{}\n", s.float(*v)));
                    }
                    out
                }
                _ => {
                    let mut out: String = spectrum.eigenvalues.iter().map(|v| s.float(*v) + "\n").collect();
                    out.push_str(&format!("residual {:.1e}\n", spectrum.residual));
                    out
                }
            })
        }
    }
}

fn cmd_minorpoly(spec: &PartitionSpec, t: &[usize], output: &OutputArgs) -> CliResult {
    let s = settings(output, FILE_DEFAULT_DIGITS, false)?;
    let poly = minor_charpoly(spec, t)?;
    Ok(match s.format {
        Format::Json => {
            let mut v = poly.to_json_value();
            v["schema"] = json!(1);
            json_line(&v)
        }
        Format::Csv => {
            let mut out = String::from("degree,coefficient\n");
            for (k, c) in poly.expand().coeffs().iter().enumerate() {
                out.push_str(&format!("{k},{}\n", s.number(c)));
            }
            out
        }
        Format::Exact | Format::Decimal => format!("factored  {poly}\nexpanded  {}\n", poly.expand()),
    })
}

fn verdict(agrees: bool) -> &'static str {
    if agrees {
        "AGREE"
    } else {
        "DISAGREE"
    }
}

fn cmd_extremal(n: usize, r: usize, index: IndexArg, output: &OutputArgs) -> CliResult {
    let s = settings(output, TABLE_DEFAULT_DIGITS, true)?;
    let res: ExtremalResult = match index {
        IndexArg::Kf => extremal_kf(n, r)?,
        IndexArg::Dkf => extremal_dkf(n, r)?,
    };
    let label = res.index.label();
    Ok(match s.format {
        Format::Json => {
            let side = |spec: &PartitionSpec, v: &Rational, tie: bool, predicted: &PartitionSpec, agrees: bool| {
                json!({
                    "spec": spec.to_string(),
                    "value": s.pair(v),
                    "tie": tie,
                    "predicted": predicted.to_string(),
                    "agrees": agrees,
                })
            };
            json_line(&json!({
                "schema": 1,
                "index": label,
                "n": n,
                "r": r,
                "candidates": res.candidates,
                "min": side(&res.minimizer, &res.min_value, res.min_tie, &res.predicted_min, res.min_agrees),
                "max": side(&res.maximizer, &res.max_value, res.max_tie, &res.predicted_max, res.max_agrees),
                "edge_extremes_agree": res.edge_extremes_agree,
            }))
        }
        Format::Csv => {
            let mut out = String::from("side,spec,exact,decimal,predicted,theorem\n");
            for (side, spec, v, p, a) in [
                ("min", &res.minimizer, &res.min_value, &res.predicted_min, res.min_agrees),
                ("max", &res.maximizer, &res.max_value, &res.predicted_max, res.max_agrees),
            ] {
                out.push_str(&format!(
                    "{side},\"{spec}\",{},{},\"{p}\",{}\n",
                    to_exact_string(v),
                    to_decimal_string(v, s.digits),
                    verdict(a)
                ));
            }
            out
        }
        Format::Exact | Format::Decimal => {
            let tie = |t: bool| if t { " (tie)" } else { "" };
            let mut out = format!("{label} over {} complete {r}-partite graphs on {n} vertices\n", res.candidates);
            out.push_str(&format!(
                "min {} at {}{}  predicted {}  theorem: {}\n",
                s.number(&res.min_value),
                res.minimizer,
                tie(res.min_tie),
                res.predicted_min,
                verdict(res.min_agrees)
            ));
            out.push_str(&format!(
                "max {} at {}{}  predicted {}  theorem: {}\n",
                s.number(&res.max_value),
                res.maximizer,
                tie(res.max_tie),
                res.predicted_max,
                verdict(res.max_agrees)
            ));
            if let Some(edges) = res.edge_extremes_agree {
                out.push_str(&format!("edge-count extremes: {}\n", verdict(edges)));
            }
            out
        }
    })
}

fn cmd_table(n: usize, r: usize, format: TableFormat, digits: Option<u32>) -> CliResult {
    let digits = match digits {
        Some(d) => d as usize,
        None => output::env_digits().map_err(CliError::Usage)?.unwrap_or(TABLE_DEFAULT_DIGITS),
    };
    let table = generate_table(n, r)?;
    Ok(match format {
        TableFormat::Text => table.render_text(digits),
        TableFormat::Csv => table.render_csv(digits),
        TableFormat::Json => json_line(&table.to_json(digits)),
    })
}

fn cmd_verify(max_n: usize) -> CliResult {
    let report = verify(max_n)?;
    let text = report.render();
    if report.passed() {
        Ok(text)
    } else {
        print!("{text}");
        Err(CliError::Compute(Error::Internal(format!(
            "{} cross-checks failed",
            report.failures().count()
        ))))
    }
}

fn run(cli: Cli) -> CliResult {
    match &cli.command {
        Command::Resdist { input, pair, output } => cmd_resdist(input, pair.as_deref(), output),
        Command::Kirchhoff { input, all_methods, output } => cmd_kirchhoff(input, *all_methods, output),
        Command::Dkirchhoff { input, all_methods, output } => cmd_dkirchhoff(input, *all_methods, output),
        Command::Trees { input, all_methods, output } => cmd_trees(input, *all_methods, output),
        Command::Spectrum { input, output } => cmd_spectrum(input, output),
        Command::Minorpoly { spec, t, output } => cmd_minorpoly(spec, t, output),
        Command::Extremal { n, r, index, output } => cmd_extremal(*n, *r, *index, output),
        Command::Table { n, r, format, digits } => cmd_table(*n, *r, *format, *digits),
        Command::Verify { max_n } => cmd_verify(*max_n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Compute(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
