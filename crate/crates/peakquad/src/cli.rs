//! Command-line front end over the library: table and figure
//! reproduction, one-shot integration, moment dumps, and the oracle
//! cross-check suite.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use peakquad::{
    adaptive_oracle, composite_simpson, composite_trapezoid, figure_to_csv, figure_to_markdown,
    quade, quadp, rows_to_csv, rows_to_markdown, run_figure, run_table, weight_moments, FigureId,
    GaussianWeight, ReferenceIntegral, TableId,
};

#[derive(Parser)]
#[command(
    name = "peakquad",
    version,
    about = "Quadrature benchmarks for sharply peaked Gaussian-weighted integrals",
    after_help = "Exit codes: 0 success, 1 domain or oracle error, 2 usage error."
)]
struct Cli {
    /// Reserved. Every command is fully deterministic, so a seed is
    /// rejected rather than silently ignored.
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,

    /// Output format for tabular commands.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,

    /// Write output to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Tolerance for the adaptive oracle (check subcommand).
    #[arg(long, global = true, value_name = "T", default_value_t = 1e-13)]
    tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Md,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliScheme {
    Quadp,
    Quade,
    Simpson,
    Trapezoid,
}

fn integrand_label(s: &str) -> Result<ReferenceIntegral, String> {
    ReferenceIntegral::from_label(s)
        .ok_or_else(|| format!("unknown integrand {s:?}; expected const1, x2, expx2 or step"))
}

#[derive(Subcommand)]
enum Command {
    /// Integrate one registry integrand against e^(-alpha^2 x^2) on [0, 1].
    Integrate {
        #[arg(long, value_enum)]
        scheme: CliScheme,
        #[arg(long)]
        alpha: f64,
        /// Number of subintervals.
        #[arg(long)]
        n: usize,
        /// Polynomial degree (fixed-degree graded scheme only).
        #[arg(long, required_if_eq("scheme", "quadp"))]
        m: Option<usize>,
        /// Integrand label: const1, x2, expx2 or step.
        #[arg(long, value_parser = integrand_label)]
        f: ReferenceIntegral,
    },
    /// Reproduce one benchmark table (1..6).
    Table {
        #[arg(value_parser = <TableId as FromStr>::from_str)]
        id: TableId,
    },
    /// Emit the data behind one figure (1, 2, 3, 4, 5, 6.1, 6.2).
    Figure {
        #[arg(value_parser = <FigureId as FromStr>::from_str)]
        id: FigureId,
    },
    /// Print the weight moment vector w_k for k = 0..kmax.
    Moments {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long)]
        kmax: usize,
    },
    /// Cross-check the graded schemes against the adaptive oracle.
    Check,
}

/// Parses arguments and runs; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    if let Some(seed) = cli.seed {
        eprintln!(
            "error: --seed {seed} is reserved; every command is deterministic and takes no seed"
        );
        return 2;
    }
    let report = match execute(&cli) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    match &cli.out {
        None => {
            print!("{}", report.text);
            report.code
        }
        Some(path) => match std::fs::write(path, &report.text) {
            Ok(()) => report.code,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                1
            }
        },
    }
}

/// Rendered output plus the exit code it should carry. Only the check
/// subcommand produces a nonzero code together with printable text.
struct Report {
    text: String,
    code: i32,
}

impl From<String> for Report {
    fn from(text: String) -> Self {
        Report { text, code: 0 }
    }
}

fn execute(cli: &Cli) -> Result<Report, Box<dyn std::error::Error>> {
    match &cli.command {
        Command::Integrate {
            scheme,
            alpha,
            n,
            m,
            f,
        } => Ok(integrate_report(*scheme, *alpha, *n, *m, *f, cli.format)?.into()),
        Command::Table { id } => {
            let rows = run_table(*id)?;
            Ok(match cli.format {
                OutputFormat::Csv => rows_to_csv(&rows),
                OutputFormat::Md => rows_to_markdown(&rows),
            }
            .into())
        }
        Command::Figure { id } => {
            let fig = run_figure(*id)?;
            Ok(match cli.format {
                OutputFormat::Csv => figure_to_csv(&fig),
                OutputFormat::Md => figure_to_markdown(&fig),
            }
            .into())
        }
        Command::Moments { alpha, beta, kmax } => {
            Ok(moments_report(*alpha, *beta, *kmax, cli.format)?.into())
        }
        Command::Check => check_report(cli.tol),
    }
}

fn real(x: f64) -> String {
    format!("{x:.16e}")
}

fn integrate_report(
    scheme: CliScheme,
    alpha: f64,
    n: usize,
    m: Option<usize>,
    f: ReferenceIntegral,
    format: OutputFormat,
) -> Result<String, Box<dyn std::error::Error>> {
    let g = move |x: f64| f.eval(x);
    let weighted = move |x: f64| f.eval(x) * f64::exp(-alpha * alpha * x * x);
    let (value, nodes, order_base) = match scheme {
        CliScheme::Quadp => {
            let r = quadp(&g, alpha, n, m.expect("clap enforces --m for quadp"))?;
            (r.value, r.node_count, Some(alpha))
        }
        CliScheme::Quade => {
            let r = quade(&g, alpha, n)?;
            (r.value, r.node_count, Some(2.0 * alpha))
        }
        CliScheme::Simpson => (composite_simpson(&weighted, n), 2 * n + 1, None),
        CliScheme::Trapezoid => (composite_trapezoid(&weighted, n), n + 1, None),
    };
    let exact = f.exact(alpha);
    let abs_error = (value - exact).abs();
    let re = abs_error / exact.abs();
    let order = match order_base {
        Some(base) if abs_error > 0.0 => real(-abs_error.ln() / base.ln()),
        _ => String::new(),
    };
    let header = "value,nodes,re,abs_error,order";
    let cells = [
        real(value),
        nodes.to_string(),
        real(re),
        real(abs_error),
        order,
    ];
    Ok(match format {
        OutputFormat::Csv => format!("{header}\n{}\n", cells.join(",")),
        OutputFormat::Md => {
            let names: Vec<&str> = header.split(',').collect();
            let mut out = String::new();
            for (name, cell) in names.iter().zip(&cells) {
                out.push_str(&format!("| {name} | {cell} |\n"));
            }
            out
        }
    })
}

fn moments_report(
    alpha: f64,
    beta: f64,
    kmax: usize,
    format: OutputFormat,
) -> Result<String, Box<dyn std::error::Error>> {
    let weight = GaussianWeight::new(alpha, beta)?;
    let vector = weight_moments(&weight, kmax)?;
    let mut out = String::new();
    match format {
        OutputFormat::Csv => {
            out.push_str("k,value\n");
            for (k, v) in vector.values().iter().enumerate() {
                out.push_str(&format!("{k},{}\n", real(*v)));
            }
        }
        OutputFormat::Md => {
            out.push_str("| k | value |\n| - | ----- |\n");
            for (k, v) in vector.values().iter().enumerate() {
                out.push_str(&format!("| {k} | {} |\n", real(*v)));
            }
        }
    }
    Ok(out)
}

/// One line per check: the two graded schemes and the closed forms,
/// each against the adaptive oracle on the mapped interval.
fn check_report(tol: f64) -> Result<Report, Box<dyn std::error::Error>> {
    let integrands = [
        ReferenceIntegral::Const1,
        ReferenceIntegral::X2,
        ReferenceIntegral::ExpX2,
        ReferenceIntegral::Step,
    ];
    let alphas = [100.0f64, 2000.0];
    let mut out = String::new();
    let mut failures = 0usize;
    let mut total = 0usize;
    for fi in integrands {
        for alpha in alphas {
            // Map [0, 1] onto [-1, 1]: the weight becomes sharpness
            // alpha/2 peaked at -1 and the value picks up a factor 1/2.
            let w = GaussianWeight::new(alpha / 2.0, -1.0)?;
            let mapped = move |t: f64| fi.eval(0.5 * (t + 1.0));
            let oracle = 0.5 * adaptive_oracle(&mapped, &w, tol)?;
            let exact = fi.exact(alpha);
            let bar = 20.0 * tol;

            let mut record = |name: &str, got: f64| {
                total += 1;
                let rel = (got - oracle).abs() / exact.abs();
                let verdict = if rel <= bar {
                    "pass"
                } else {
                    failures += 1;
                    "FAIL"
                };
                out.push_str(&format!(
                    "{verdict}  {name:<28} f={:<6} alpha={alpha:<6} rel={rel:.2e}\n",
                    fi.label()
                ));
            };
            record("closed form vs oracle", exact);
            record("fixed-degree vs oracle", quadp(&|x: f64| fi.eval(x), alpha, 6, 8)?.value);
            record("growing-degree vs oracle", quade(&|x: f64| fi.eval(x), alpha, 5)?.value);
        }
    }
    out.push_str(&format!(
        "summary: {}/{total} checks passed (oracle tol {tol:e})\n",
        total - failures
    ));
    Ok(Report {
        text: out,
        code: if failures > 0 { 1 } else { 0 },
    })
}
