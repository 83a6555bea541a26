//! Benchmark tables and figure data.
//!
//! Reproduces the published accuracy tables for the two graded schemes
//! and their uniform-mesh controls, plus the data behind the diagnostic
//! figures (bell-derivative curves, trapezoid failure sweeps, scheme
//! error curves). Grids live in an embedded TOML file so the exact
//! (α, n, m) choices are data, not code; every run is deterministic and
//! two runs of the same table produce byte-identical CSV.

use std::sync::OnceLock;

use serde::Deserialize;

use crate::baseline::composite_simpson;
use crate::error::Result;
use crate::graded::{quade, quadp};
use crate::specfun::{erf, gaussian_derivative};
use crate::SQRT_PI;

/// The fixed integrand registry. Every benchmark integrates one of
/// these against the Gaussian weight on [0, 1]; each has a closed-form
/// exact value through erf, so relative errors need no oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReferenceIntegral {
    /// f ≡ 1.
    Const1,
    /// f = x².
    X2,
    /// f = e^{−x²}.
    ExpX2,
    /// f = 1 on [0, 1/2], 1/2 on (1/2, 1].
    Step,
}

impl ReferenceIntegral {
    /// Registry label, as accepted on the command line.
    pub fn label(self) -> &'static str {
        match self {
            ReferenceIntegral::Const1 => "const1",
            ReferenceIntegral::X2 => "x2",
            ReferenceIntegral::ExpX2 => "expx2",
            ReferenceIntegral::Step => "step",
        }
    }

    /// Looks up a label; `None` for anything outside the registry.
    pub fn from_label(label: &str) -> Option<Self> {
        match label {
            "const1" => Some(ReferenceIntegral::Const1),
            "x2" => Some(ReferenceIntegral::X2),
            "expx2" => Some(ReferenceIntegral::ExpX2),
            "step" => Some(ReferenceIntegral::Step),
            _ => None,
        }
    }

    /// Evaluates the smooth (or piecewise) factor at x.
    pub fn eval(self, x: f64) -> f64 {
        match self {
            ReferenceIntegral::Const1 => 1.0,
            ReferenceIntegral::X2 => x * x,
            ReferenceIntegral::ExpX2 => (-x * x).exp(),
            ReferenceIntegral::Step => {
                if x <= 0.5 {
                    1.0
                } else {
                    0.5
                }
            }
        }
    }

    /// Closed-form value of ∫₀¹ f(x)·e^{−α²x²} dx.
    pub fn exact(self, alpha: f64) -> f64 {
        match self {
            ReferenceIntegral::Const1 => SQRT_PI * erf(alpha) / (2.0 * alpha),
            ReferenceIntegral::X2 => {
                (SQRT_PI * erf(alpha) / 2.0 - alpha * (-alpha * alpha).exp())
                    / (2.0 * alpha.powi(3))
            }
            ReferenceIntegral::ExpX2 => {
                let s = (alpha * alpha + 1.0).sqrt();
                SQRT_PI * erf(s) / (2.0 * s)
            }
            ReferenceIntegral::Step => {
                SQRT_PI * (erf(alpha) + erf(alpha / 2.0)) / (4.0 * alpha)
            }
        }
    }
}

/// Which rule produced a benchmark row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    /// Graded mesh, fixed degree.
    QuadP,
    /// Graded mesh, growing degrees.
    QuadE,
    /// Uniform-mesh composite Simpson (the control).
    Simpson,
}

impl Scheme {
    pub fn label(self) -> &'static str {
        match self {
            Scheme::QuadP => "quadp",
            Scheme::QuadE => "quade",
            Scheme::Simpson => "simpson",
        }
    }
}

/// One benchmark measurement.
///
/// `order` is −ln(abs_error)/ln(α) for the fixed-degree scheme and
/// −ln(abs_error)/ln(2α) for the growing-degree scheme; it is absent
/// for the uniform control and for errors that round to zero.
#[derive(Debug, Clone)]
pub struct BenchRow {
    pub scheme: Scheme,
    pub alpha: f64,
    /// Bell standard deviation c₀ = 1/(√2·α).
    pub c0: f64,
    pub n: usize,
    /// Per-subinterval polynomial degrees: one entry for the
    /// fixed-degree scheme, the full list for the growing-degree
    /// scheme, empty for the uniform control.
    pub degrees: Vec<usize>,
    /// |Q − I| / |I| against the closed-form value.
    pub re: f64,
    /// |Q − I|.
    pub abs_error: f64,
    pub order: Option<f64>,
    /// Distinct integrand evaluations.
    pub nodes: usize,
}

/// Benchmark table selector (1 through 6).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
}

impl std::str::FromStr for TableId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "1" => Ok(TableId::T1),
            "2" => Ok(TableId::T2),
            "3" => Ok(TableId::T3),
            "4" => Ok(TableId::T4),
            "5" => Ok(TableId::T5),
            "6" => Ok(TableId::T6),
            _ => Err(format!("unknown table id {s:?}; expected 1..6")),
        }
    }
}

impl std::fmt::Display for TableId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = match self {
            TableId::T1 => 1,
            TableId::T2 => 2,
            TableId::T3 => 3,
            TableId::T4 => 4,
            TableId::T5 => 5,
            TableId::T6 => 6,
        };
        write!(f, "{n}")
    }
}

/// Figure selector: 1–5 plus the two scheme-error figures 6.1 and 6.2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F61,
    F62,
}

impl std::str::FromStr for FigureId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "1" => Ok(FigureId::F1),
            "2" => Ok(FigureId::F2),
            "3" => Ok(FigureId::F3),
            "4" => Ok(FigureId::F4),
            "5" => Ok(FigureId::F5),
            "6.1" => Ok(FigureId::F61),
            "6.2" => Ok(FigureId::F62),
            _ => Err(format!(
                "unknown figure id {s:?}; expected 1, 2, 3, 4, 5, 6.1 or 6.2"
            )),
        }
    }
}

impl std::fmt::Display for FigureId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FigureId::F1 => "1",
            FigureId::F2 => "2",
            FigureId::F3 => "3",
            FigureId::F4 => "4",
            FigureId::F5 => "5",
            FigureId::F61 => "6.1",
            FigureId::F62 => "6.2",
        };
        f.write_str(s)
    }
}

/// One cell of a figure dump: panel tags print bare, integers plain,
/// reals in 17-significant-digit scientific notation.
#[derive(Debug, Clone, Copy)]
pub enum Cell {
    Tag(&'static str),
    Int(i64),
    Real(f64),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Tag(s) => (*s).to_string(),
            Cell::Int(i) => i.to_string(),
            Cell::Real(x) => real(*x),
        }
    }
}

/// Re-plottable data for one figure.
#[derive(Debug, Clone)]
pub struct FigureData {
    pub columns: &'static [&'static str],
    /// Caveats that belong in the output header (e.g. a curve cut
    /// short by the degree cap).
    pub note: Option<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

#[derive(Deserialize)]
struct FixedDegreeGrid {
    integrand: ReferenceIntegral,
    m: usize,
    alphas: Vec<f64>,
    ns: Vec<usize>,
}

#[derive(Deserialize)]
struct GrowingDegreeGrid {
    integrand: ReferenceIntegral,
    alphas: Vec<f64>,
    ns: Vec<usize>,
}

#[derive(Deserialize)]
struct ComparePair {
    uniform_n: usize,
    graded_n: usize,
}

#[derive(Deserialize)]
struct CompareGrowingGrid {
    integrand: ReferenceIntegral,
    alphas: Vec<f64>,
    pairs: Vec<ComparePair>,
}

#[derive(Deserialize)]
struct BellGrid {
    alpha: f64,
    pairs: Vec<[usize; 2]>,
    half_width: f64,
    samples: usize,
}

#[derive(Deserialize)]
struct TrapezoidAlphaGrid {
    ns: Vec<usize>,
    points: usize,
    decades: f64,
}

#[derive(Deserialize)]
struct TrapezoidNGrid {
    alphas: Vec<f64>,
    ns: Vec<usize>,
}

#[derive(Deserialize)]
struct PanelOverN {
    alpha: f64,
    n_lo: usize,
    n_hi: usize,
}

#[derive(Deserialize)]
struct PanelOverAlpha {
    n: usize,
    alpha_lo: f64,
    alpha_hi: f64,
    alpha_step: f64,
}

#[derive(Deserialize)]
struct SchemeFigureGrid {
    integrand: ReferenceIntegral,
    m: Option<usize>,
    panel_a: PanelOverN,
    panel_b: PanelOverAlpha,
}

#[derive(Deserialize)]
struct Grids {
    table1: FixedDegreeGrid,
    table2: FixedDegreeGrid,
    table3: GrowingDegreeGrid,
    table4: CompareGrowingGrid,
    table5: FixedDegreeGrid,
    table6: GrowingDegreeGrid,
    figure_bell: BellGrid,
    figure_trapezoid_alpha: TrapezoidAlphaGrid,
    figure_trapezoid_n: TrapezoidNGrid,
    figure_quadp: SchemeFigureGrid,
    figure_quade: SchemeFigureGrid,
}

fn grids() -> &'static Grids {
    static GRIDS: OnceLock<Grids> = OnceLock::new();
    GRIDS.get_or_init(|| {
        toml::from_str(include_str!("../data/grids.toml"))
            .expect("embedded grid data is well-formed")
    })
}

fn c0_of(alpha: f64) -> f64 {
    (std::f64::consts::SQRT_2 * alpha).recip()
}

fn order_of(base: f64, abs_error: f64) -> Option<f64> {
    (abs_error > 0.0).then(|| -abs_error.ln() / base.ln())
}

fn quadp_row(fi: ReferenceIntegral, alpha: f64, n: usize, m: usize) -> Result<BenchRow> {
    let report = quadp(&|x: f64| fi.eval(x), alpha, n, m)?;
    let exact = fi.exact(alpha);
    let abs_error = (report.value - exact).abs();
    Ok(BenchRow {
        scheme: Scheme::QuadP,
        alpha,
        c0: c0_of(alpha),
        n,
        degrees: vec![m],
        re: abs_error / exact.abs(),
        abs_error,
        order: order_of(alpha, abs_error),
        nodes: report.node_count,
    })
}

fn quade_row(fi: ReferenceIntegral, alpha: f64, n: usize) -> Result<BenchRow> {
    let report = quade(&|x: f64| fi.eval(x), alpha, n)?;
    let exact = fi.exact(alpha);
    let abs_error = (report.value - exact).abs();
    let degrees = report
        .per_interval
        .iter()
        .map(|p| p.degree)
        .collect::<Vec<_>>();
    Ok(BenchRow {
        scheme: Scheme::QuadE,
        alpha,
        c0: c0_of(alpha),
        n,
        degrees,
        re: abs_error / exact.abs(),
        abs_error,
        order: order_of(2.0 * alpha, abs_error),
        nodes: report.node_count,
    })
}

fn simpson_row(fi: ReferenceIntegral, alpha: f64, n: usize) -> BenchRow {
    let g = move |x: f64| fi.eval(x) * f64::exp(-alpha * alpha * x * x);
    let q = composite_simpson(&g, n);
    let exact = fi.exact(alpha);
    let abs_error = (q - exact).abs();
    BenchRow {
        scheme: Scheme::Simpson,
        alpha,
        c0: c0_of(alpha),
        n,
        degrees: Vec::new(),
        re: abs_error / exact.abs(),
        abs_error,
        order: None,
        nodes: 2 * n + 1,
    }
}

/// Computes every row of one benchmark table, in grid order.
pub fn run_table(id: TableId) -> Result<Vec<BenchRow>> {
    let g = grids();
    let mut rows = Vec::new();
    match id {
        TableId::T1 | TableId::T5 => {
            let t = if id == TableId::T1 { &g.table1 } else { &g.table5 };
            for &alpha in &t.alphas {
                for &n in &t.ns {
                    rows.push(quadp_row(t.integrand, alpha, n, t.m)?);
                }
            }
        }
        TableId::T2 => {
            let t = &g.table2;
            for &alpha in &t.alphas {
                for &n in &t.ns {
                    rows.push(simpson_row(t.integrand, alpha, n));
                    rows.push(quadp_row(t.integrand, alpha, n, t.m)?);
                }
            }
        }
        TableId::T3 | TableId::T6 => {
            let t = if id == TableId::T3 { &g.table3 } else { &g.table6 };
            for &alpha in &t.alphas {
                for &n in &t.ns {
                    rows.push(quade_row(t.integrand, alpha, n)?);
                }
            }
        }
        TableId::T4 => {
            let t = &g.table4;
            for &alpha in &t.alphas {
                for pair in &t.pairs {
                    rows.push(simpson_row(t.integrand, alpha, pair.uniform_n));
                    rows.push(quade_row(t.integrand, alpha, pair.graded_n)?);
                }
            }
        }
    }
    Ok(rows)
}

fn panel_tag(i: usize) -> &'static str {
    ["A", "B", "C"][i]
}

fn bell_figure(pair_index: usize) -> FigureData {
    let g = &grids().figure_bell;
    let pair = g.pairs[pair_index];
    let mut rows = Vec::with_capacity(2 * g.samples);
    for (panel, &m) in pair.iter().enumerate() {
        let step = 2.0 * g.half_width / (g.samples - 1) as f64;
        for i in 0..g.samples {
            let x = -g.half_width + i as f64 * step;
            rows.push(vec![
                Cell::Tag(panel_tag(panel)),
                Cell::Int(m as i64),
                Cell::Real(x),
                Cell::Real(gaussian_derivative(m, g.alpha, x)),
            ]);
        }
    }
    FigureData {
        columns: &["panel", "m", "x", "value"],
        note: None,
        rows,
    }
}

fn trapezoid_alpha_figure() -> FigureData {
    let g = &grids().figure_trapezoid_alpha;
    let mut rows = Vec::new();
    for (panel, &n) in g.ns.iter().enumerate() {
        for i in 0..g.points {
            let alpha = 10f64.powf(i as f64 * g.decades / (g.points - 1) as f64);
            let q = crate::baseline::composite_trapezoid(
                &move |x: f64| f64::exp(-alpha * alpha * x * x),
                n,
            );
            let ae = (q - ReferenceIntegral::Const1.exact(alpha)).abs();
            rows.push(vec![
                Cell::Tag(panel_tag(panel)),
                Cell::Int(n as i64),
                Cell::Real(alpha),
                Cell::Real(ae),
            ]);
        }
    }
    FigureData {
        columns: &["panel", "n", "alpha", "abs_error"],
        note: None,
        rows,
    }
}

fn trapezoid_n_figure() -> FigureData {
    let g = &grids().figure_trapezoid_n;
    let mut rows = Vec::new();
    for (panel, &alpha) in g.alphas.iter().enumerate() {
        for &n in &g.ns {
            let q = crate::baseline::composite_trapezoid(
                &move |x: f64| f64::exp(-alpha * alpha * x * x),
                n,
            );
            let ae = (q - ReferenceIntegral::Const1.exact(alpha)).abs();
            rows.push(vec![
                Cell::Tag(panel_tag(panel)),
                Cell::Real(alpha),
                Cell::Int(n as i64),
                Cell::Real(ae),
            ]);
        }
    }
    FigureData {
        columns: &["panel", "alpha", "n", "abs_error"],
        note: None,
        rows,
    }
}

fn quadp_figure() -> Result<FigureData> {
    let g = &grids().figure_quadp;
    let m = g.m.expect("fixed-degree figure grid carries m");
    let mut rows = Vec::new();
    for n in g.panel_a.n_lo..=g.panel_a.n_hi {
        let row = quadp_row(g.integrand, g.panel_a.alpha, n, m)?;
        rows.push(vec![
            Cell::Tag("A"),
            Cell::Real(g.panel_a.alpha),
            Cell::Int(n as i64),
            Cell::Real(row.re),
        ]);
    }
    let b = &g.panel_b;
    let steps = ((b.alpha_hi - b.alpha_lo) / b.alpha_step).round() as usize;
    for i in 0..=steps {
        let alpha = b.alpha_lo + i as f64 * b.alpha_step;
        let row = quadp_row(g.integrand, alpha, b.n, m)?;
        rows.push(vec![
            Cell::Tag("B"),
            Cell::Real(alpha),
            Cell::Int(b.n as i64),
            Cell::Real(row.re),
        ]);
    }
    Ok(FigureData {
        columns: &["panel", "alpha", "n", "re"],
        note: None,
        rows,
    })
}

fn quade_figure() -> Result<FigureData> {
    let g = &grids().figure_quade;
    let mut rows = Vec::new();
    for n in g.panel_a.n_lo..=g.panel_a.n_hi {
        let row = quade_row(g.integrand, g.panel_a.alpha, n)?;
        rows.push(vec![
            Cell::Tag("A"),
            Cell::Real(g.panel_a.alpha),
            Cell::Int(n as i64),
            Cell::Real(row.re),
        ]);
    }
    let b = &g.panel_b;
    let steps = ((b.alpha_hi - b.alpha_lo) / b.alpha_step).round() as usize;
    for i in 0..=steps {
        let alpha = b.alpha_lo + i as f64 * b.alpha_step;
        let row = quade_row(g.integrand, alpha, b.n)?;
        rows.push(vec![
            Cell::Tag("B"),
            Cell::Real(alpha),
            Cell::Int(b.n as i64),
            Cell::Real((2.0 * alpha).powi(5) * row.abs_error),
        ]);
    }
    Ok(FigureData {
        columns: &["panel", "alpha", "n", "value"],
        note: Some(
            "panel A: value = relative error at fixed alpha; n stops at 6 because \
             larger n needs degrees past the cap of 40. panel B: value = \
             (2*alpha)^5 * abs_error at n = 4",
        ),
        rows,
    })
}

/// Computes the data behind one figure.
pub fn run_figure(id: FigureId) -> Result<FigureData> {
    match id {
        FigureId::F1 => Ok(bell_figure(0)),
        FigureId::F2 => Ok(bell_figure(1)),
        FigureId::F3 => Ok(bell_figure(2)),
        FigureId::F4 => Ok(trapezoid_alpha_figure()),
        FigureId::F5 => Ok(trapezoid_n_figure()),
        FigureId::F61 => quadp_figure(),
        FigureId::F62 => quade_figure(),
    }
}

/// Formats a real with 17 significant digits, the fixed output width.
fn real(x: f64) -> String {
    format!("{x:.16e}")
}

fn degrees_cell(degrees: &[usize]) -> String {
    degrees
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

const ROW_COLUMNS: &str = "scheme,alpha,c0,n,m,re,abs_error,order,nodes";

fn row_cells(row: &BenchRow) -> Vec<String> {
    vec![
        row.scheme.label().to_string(),
        real(row.alpha),
        real(row.c0),
        row.n.to_string(),
        degrees_cell(&row.degrees),
        real(row.re),
        real(row.abs_error),
        row.order.map(real).unwrap_or_default(),
        row.nodes.to_string(),
    ]
}

/// Renders benchmark rows as CSV (UTF-8, LF, headers first).
pub fn rows_to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(ROW_COLUMNS);
    out.push('\n');
    for row in rows {
        out.push_str(&row_cells(row).join(","));
        out.push('\n');
    }
    out
}

/// Renders benchmark rows as an aligned Markdown table.
pub fn rows_to_markdown(rows: &[BenchRow]) -> String {
    let header: Vec<String> = ROW_COLUMNS.split(',').map(str::to_string).collect();
    let body: Vec<Vec<String>> = rows.iter().map(row_cells).collect();
    markdown_table(&header, &body)
}

/// Renders a figure dump as CSV; the note, if any, becomes a leading
/// `#` comment line.
pub fn figure_to_csv(figure: &FigureData) -> String {
    let mut out = String::new();
    if let Some(note) = figure.note {
        out.push_str("# ");
        out.push_str(note);
        out.push('\n');
    }
    out.push_str(&figure.columns.join(","));
    out.push('\n');
    for row in &figure.rows {
        let cells: Vec<String> = row.iter().map(Cell::render).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Renders a figure dump as an aligned Markdown table.
pub fn figure_to_markdown(figure: &FigureData) -> String {
    let header: Vec<String> = figure.columns.iter().map(|c| (*c).to_string()).collect();
    let body: Vec<Vec<String>> = figure
        .rows
        .iter()
        .map(|row| row.iter().map(Cell::render).collect())
        .collect();
    let mut out = String::new();
    if let Some(note) = figure.note {
        out.push_str("> ");
        out.push_str(note);
        out.push_str("\n\n");
    }
    out.push_str(&markdown_table(&header, &body));
    out
}

fn markdown_table(header: &[String], body: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(String::len).collect();
    for row in body {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let fmt_row = |cells: &[String]| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        format!("| {} |\n", padded.join(" | "))
    };
    let mut out = fmt_row(header);
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    out.push_str(&format!("| {} |\n", rule.join(" | ")));
    for row in body {
        out.push_str(&fmt_row(row));
    }
    out
}
