use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::TypedValueParser;
use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde_json::json;

use indatt::chebyshev::{candidate, chebyshev, SEGMENT_KS};
use indatt::classifier::{
    attractor_report_with, AttractorReport, ReportOptions, CORROBORATION_CAP, CORROBORATION_DEPTH,
};
use indatt::dynamics::{backward_orbit, filled_julia_raster, Window, DEFAULT_CAP, DEFAULT_DEPTH, SOLVER_TOL};
use indatt::graph::Graph;
use indatt::poly::{CoefficientGuard, IntPoly};
use indatt::search::{dedup_symmetric, enumerate_for_poly, solve_components, CaseKind};

/// Largest degree `power` will expand.
const MAX_POWER_DEGREE: u64 = 4096;

#[derive(Parser)]
#[command(name = "indatt", version, about = "Independence polynomials and independence attractors of graphs")]
struct Cli {
    /// Worker threads, 0 for one per core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

fn parse_graph(s: &str) -> Result<Graph, String> {
    Graph::from_graph6(s).map_err(|e| e.to_string())
}

fn parse_poly(s: &str) -> Result<IntPoly, String> {
    s.parse::<IntPoly>().map_err(|e| e.to_string())
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(format!("tolerance must be a positive number, got {s:?}")),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Independence polynomial of a graph.
    Ipoly {
        #[arg(value_parser = parse_graph)]
        graph: Graph,
        /// Print I − 1 instead.
        #[arg(long)]
        reduced: bool,
    },
    /// Independence polynomial of the lexicographic product G[H].
    Product {
        #[arg(value_parser = parse_graph)]
        g: Graph,
        #[arg(value_parser = parse_graph)]
        h: Graph,
    },
    /// Independence polynomial of the m-th lexicographic power.
    Power {
        #[arg(value_parser = parse_graph)]
        graph: Graph,
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..=1000))]
        m: u32,
    },
    /// Backward orbit of -1 under the reduced polynomial, as CSV.
    Attractor {
        #[arg(value_parser = parse_graph)]
        graph: Graph,
        #[arg(long, default_value_t = DEFAULT_DEPTH, value_parser = clap::value_parser!(u32).range(1..=20).map(|v| v as usize))]
        depth: usize,
        #[arg(long, default_value_t = DEFAULT_CAP, value_parser = clap::value_parser!(u32).range(1..=1_000_000).map(|v| v as usize))]
        cap: usize,
        #[arg(long, default_value_t = SOLVER_TOL, value_parser = parse_tol)]
        tol: f64,
        /// CSV of the last level; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write an escape-time raster of the filled Julia set.
        #[arg(long)]
        ppm: Option<PathBuf>,
        #[arg(long, default_value_t = 800)]
        width: usize,
        #[arg(long, default_value_t = 600)]
        height: usize,
        #[arg(long, default_value_t = 200)]
        max_iter: u32,
    },
    /// Classify the independence attractor.
    Classify {
        #[arg(value_parser = parse_graph)]
        graph: Graph,
        #[arg(long)]
        json: bool,
        /// Skip the numeric backward-orbit check.
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = CORROBORATION_DEPTH, value_parser = clap::value_parser!(u32).range(1..=20).map(|v| v as usize))]
        depth: usize,
        #[arg(long, default_value_t = CORROBORATION_CAP, value_parser = clap::value_parser!(u32).range(1..=1_000_000).map(|v| v as usize))]
        cap: usize,
    },
    /// Chebyshev polynomial T_n and its integer segment conjugates.
    Cheb {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=64))]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: Option<u32>,
    },
    /// Component equations for the segment quartic with index k.
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=4))]
        k: u32,
        #[arg(long)]
        case: CaseKind,
        /// Collapse rows that differ only by swapping components.
        #[arg(long)]
        dedup: bool,
    },
    /// Graphs with a given independence polynomial, as graph6 lines.
    Enumerate {
        #[arg(long, value_parser = parse_poly)]
        poly: IntPoly,
        /// Only connected graphs.
        #[arg(long)]
        co_connected: bool,
    },
    /// Run the built-in invariant suite.
    Verify,
}

/// A failed computation, reported as `module: message`.
struct Failure(String);

fn fail(module: &str, e: impl std::fmt::Display) -> Failure {
    Failure(format!("{module}: {e}"))
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        fail("io", e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
        eprintln!("indatt: {e}");
        return ExitCode::from(1);
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = out.flush();
            eprintln!("indatt: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<ExitCode, Failure> {
    match command {
        Command::Ipoly { graph, reduced } => {
            let p = graph.independence_polynomial();
            let p = if reduced { p.reduced().map_err(|e| fail("poly", e))? } else { p };
            writeln!(out, "{p}")?;
        }
        Command::Product { g, h } => {
            let product = g.lexicographic_product_wide(&h).map_err(|e| fail("graph", e))?;
            writeln!(out, "{}", product.independence_polynomial())?;
        }
        Command::Power { graph, m } => {
            let reduced = graph.independence_polynomial().reduced().map_err(|e| fail("poly", e))?;
            let degree = reduced.degree().unwrap_or(0) as u64;
            if degree > 1 && degree.checked_pow(m).is_none_or(|d| d > MAX_POWER_DEGREE) {
                return Err(fail(
                    "poly",
                    format!("degree {degree}^{m} exceeds {MAX_POWER_DEGREE}; use `indatt attractor` to study the roots instead"),
                ));
            }
            let iterate = reduced
                .iterate(m as usize, &CoefficientGuard::default())
                .map_err(|e| fail("poly", format!("{e}; use `indatt attractor` to study the roots instead")))?;
            writeln!(out, "{}", &iterate + &IntPoly::one())?;
        }
        Command::Attractor { graph, depth, cap, tol, out: path, ppm, width, height, max_iter } => {
            attractor(&graph, depth, cap, tol, path, ppm.map(|p| (p, width, height, max_iter)), out)?;
        }
        Command::Classify { graph, json, exact, depth, cap } => {
            let options = ReportOptions { corroborate: !exact, depth, cap };
            let report = attractor_report_with(&graph, &options).map_err(|e| fail("classifier", e))?;
            if json {
                serde_json::to_writer_pretty(&mut *out, &classify_json(&report)).map_err(|e| fail("io", e))?;
                writeln!(out)?;
            } else {
                writeln!(out, "{}", classify_text(&report))?;
            }
        }
        Command::Cheb { n, k } => {
            writeln!(out, "T_{n} = {}", chebyshev(n))?;
            for k in k.map_or(SEGMENT_KS.to_vec(), |k| vec![k]) {
                match candidate(n, k).map_err(|e| fail("chebyshev", e))? {
                    Some(p) => writeln!(out, "k={k}: {p}")?,
                    None => writeln!(out, "k={k}: no integer conjugate")?,
                }
            }
        }
        Command::Tables { k, case, dedup } => {
            let rows = solve_components(case, k).map_err(|e| fail("search", e))?;
            let rows = if dedup { dedup_symmetric(rows) } else { rows };
            writeln!(out, "{}\tfactors", case.columns().join("\t"))?;
            for row in &rows {
                let params: Vec<String> = row.params.iter().map(u64::to_string).collect();
                let factors: Vec<String> = row.factors.iter().map(|f| format!("({f})")).collect();
                writeln!(out, "{}\t{}", params.join("\t"), factors.concat())?;
            }
            if rows.is_empty() {
                writeln!(out, "not possible")?;
            }
        }
        Command::Enumerate { poly, co_connected } => {
            let graphs = enumerate_for_poly(&poly, co_connected).map_err(|e| fail("search", e))?;
            for g in &graphs {
                writeln!(out, "{}", g.to_graph6())?;
            }
            out.flush()?;
            eprintln!("{} graphs", graphs.len());
        }
        Command::Verify => {
            let checks = indatt::verify::run_all();
            let width = checks.iter().map(|c| c.module.len() + c.name.len() + 3).max().unwrap_or(0);
            for c in &checks {
                let label = format!("{} / {}", c.module, c.name);
                let status = if c.passed { "PASS" } else { "FAIL" };
                write!(out, "{status}  {label:<width$}  {:>8.3}s", c.elapsed.as_secs_f64())?;
                if c.passed {
                    writeln!(out)?;
                } else {
                    writeln!(out, "  {}", c.detail)?;
                }
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            writeln!(out, "{} checks, {failed} failed", checks.len())?;
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn attractor(
    graph: &Graph,
    depth: usize,
    cap: usize,
    tol: f64,
    csv: Option<PathBuf>,
    raster: Option<(PathBuf, usize, usize, u32)>,
    out: &mut impl Write,
) -> Result<(), Failure> {
    let reduced = graph.independence_polynomial().reduced().map_err(|e| fail("poly", e))?;
    let levels =
        backward_orbit(&reduced, Complex64::new(-1.0, 0.0), depth, cap, tol).map_err(|e| fail("dynamics", e))?;
    for (i, level) in levels.iter().enumerate() {
        let note = if level.thinned { format!(" (thinned from {})", level.raw_size) } else { String::new() };
        eprintln!("level {}: {} points{note}", i + 1, level.cloud.len());
    }
    let last = &levels.last().expect("depth is at least 1").cloud;
    match csv {
        Some(path) => last.write_csv(BufWriter::new(File::create(&path)?))?,
        None => last.write_csv(&mut *out)?,
    }
    if let Some((path, width, height, max_iter)) = raster {
        let window = frame(last.points());
        let r = filled_julia_raster(&reduced, window, width, height, max_iter).map_err(|e| fail("dynamics", e))?;
        let mut file = BufWriter::new(File::create(&path)?);
        r.write_ppm(&mut file)?;
        file.flush()?;
    }
    Ok(())
}

/// Bounding box of the cloud with a 10% margin, widened to a 4:3 aspect.
fn frame(points: &[Complex64]) -> Window {
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for z in points {
        x0 = x0.min(z.re);
        x1 = x1.max(z.re);
        y0 = y0.min(z.im);
        y1 = y1.max(z.im);
    }
    let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
    let mut w = ((x1 - x0) * 1.2).max(1e-3);
    let mut h = ((y1 - y0) * 1.2).max(1e-3);
    if w < h * 4.0 / 3.0 {
        w = h * 4.0 / 3.0;
    } else {
        h = w * 3.0 / 4.0;
    }
    Window::new(cx - w / 2.0, cx + w / 2.0, cy - h / 2.0, cy + h / 2.0)
}

fn segment_text(k: u32) -> String {
    match k {
        1 => "[-4,0]".into(),
        2 => "[-2,0]".into(),
        4 => "[-1,0]".into(),
        k => format!("[-4/{k},0]"),
    }
}

fn classify_text(r: &AttractorReport) -> String {
    let mut s = format!("class={}", r.klass.name());
    if let Some(k) = r.k() {
        s += &format!(" k={k} segment={}", segment_text(k));
    }
    s += &format!(
        " alpha={} minusOneMultiplicity={} fractalRelation={}",
        r.alpha,
        r.minus_one_multiplicity,
        r.fractal_relation.name()
    );
    if let Some(n) = &r.numeric {
        s += &format!(" hausdorffToSegment={:.3e} depth={}", n.hausdorff_to_segment, n.depth);
    }
    s
}

fn classify_json(r: &AttractorReport) -> serde_json::Value {
    json!({
        "schema": "indatt/1",
        "alpha": r.alpha,
        "vertices": r.vertices,
        "class": r.klass.name(),
        "k": r.k(),
        "segment": r.segment().map(|(a, b)| [a, b]),
        "minusOneMultiplicity": r.minus_one_multiplicity,
        "fractalRelation": r.fractal_relation.name(),
        "connected": r.connected,
        "independencePolynomial": r.independence_polynomial.to_string(),
        "hausdorffToSegment": r.numeric.as_ref().map(|n| n.hausdorff_to_segment),
        "depth": r.numeric.as_ref().map(|n| n.depth),
    })
}
