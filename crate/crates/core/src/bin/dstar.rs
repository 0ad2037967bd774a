//! `dstar`: double-star triangles, general second Zagreb indices and their
//! generating functions from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

use std::fmt::Write as _;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use dstar::graph::{parse_edge_list, parse_graph6, Family, Graph};
use dstar::oracle::series_divide;
use dstar::starseq::{frequency_from_star, frequency_sequence, star_from_frequency, star_sequence};
use dstar::verify::{random_corpus, verify_graph, VerifyOptions, VerifyReport};
use dstar::zagreb::{
    generating_function, m2_direct, m2_from_frequency, m2_from_star, recurrence_check,
    recurrence_coefficients,
};

#[derive(Parser, Debug)]
#[command(name = "dstar", version, about = "Double-star sequences and general second Zagreb indices")]
struct Cli {
    /// Graph file (edge list or graph6); `-` reads standard input.
    #[arg(short, long, global = true, value_name = "PATH")]
    input: Option<String>,

    /// Built-in family: complete:N, path:N, cycle:N, star:LEAVES, double-star:A,B.
    #[arg(long, global = true, value_name = "NAME:PARAMS")]
    family: Option<Family>,

    /// Seeded G(n, 1/2) corpus, e.g. `--random n=6 count=50 seed=7`.
    #[arg(long, global = true, num_args = 3, value_names = ["n=K", "count=C", "seed=S"])]
    random: Option<Vec<String>>,

    /// Input format of `--input`.
    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Auto)]
    format: InputFormat,

    /// Output format.
    #[arg(short, long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Auto,
    Edgelist,
    Graph6,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Latex,
    Plain,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    Star,
    Freq,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Vertex count, edge count, degrees and isolated vertices.
    Info,
    /// Double-star triangle, frequency triangle, or both with a round-trip check.
    Triangles {
        #[arg(long, value_enum, default_value_t = Which::Both)]
        which: Which,
    },
    /// General second Zagreb index for each requested exponent.
    Zagreb {
        /// Exponents: `3`, `0,2,5` or the inclusive range `0..3`. Repeatable.
        #[arg(short, long = "p", value_name = "LIST", default_value = "0..3")]
        p: Vec<String>,
        /// Also evaluate through the frequency and star triangles and require agreement.
        #[arg(long)]
        cross_check: bool,
    },
    /// Rational generating function of the Zagreb sequence.
    Gf {
        /// Append the first K series coefficients, checked against the edge sum.
        #[arg(long, value_name = "K")]
        terms: Option<usize>,
    },
    /// Recurrence coefficients and the order-|C| recurrence check.
    Recurrence {
        #[arg(long, value_name = "P")]
        pmax: Option<u64>,
    },
    /// Run the full identity suite; exit 1 on any failure.
    Verify {
        #[arg(long, value_name = "P", default_value_t = 6)]
        pmax: u64,
        /// Perturb the star triangle before checking (harness self-test).
        #[arg(long)]
        inject_fault: bool,
        /// Check graphs on the rayon pool; report order is unchanged.
        #[arg(long)]
        parallel: bool,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl Failure {
    fn exit(self) -> ExitCode {
        match self {
            Failure::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            Failure::Verification(msg) => {
                eprintln!("verification failed: {msg}");
                ExitCode::from(1)
            }
        }
    }
}

type Outcome = Result<String, Failure>;

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => f.exit(),
    }
}

fn run(cli: &Cli) -> Outcome {
    let graphs = load_graphs(cli)?;
    match &cli.command {
        Command::Info => per_graph(&graphs, |g| cmd_info(g, cli.output)),
        Command::Triangles { which } => per_graph(&graphs, |g| cmd_triangles(g, *which, cli.output)),
        Command::Zagreb { p, cross_check } => {
            let ps = parse_exponents(p)?;
            per_graph(&graphs, |g| cmd_zagreb(g, &ps, *cross_check, cli.output))
        }
        Command::Gf { terms } => per_graph(&graphs, |g| cmd_gf(g, *terms, cli.output)),
        Command::Recurrence { pmax } => per_graph(&graphs, |g| cmd_recurrence(g, *pmax, cli.output)),
        Command::Verify { pmax, inject_fault, parallel } => cmd_verify(
            &graphs,
            VerifyOptions { p_max: *pmax, inject_fault: *inject_fault },
            *parallel,
            cli.output,
        ),
    }
}

fn per_graph<F: Fn(&Graph) -> Outcome>(graphs: &[Graph], f: F) -> Outcome {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&f(g)?);
    }
    Ok(out)
}

fn load_graphs(cli: &Cli) -> Result<Vec<Graph>, Failure> {
    let sources = [cli.input.is_some(), cli.family.is_some(), cli.random.is_some()];
    match sources.iter().filter(|&&s| s).count() {
        0 => return Err(usage("no graph given: use --input, --family or --random")),
        1 => {}
        _ => return Err(usage("--input, --family and --random are mutually exclusive")),
    }
    if let Some(family) = cli.family {
        return family.build().map(|g| vec![g]).map_err(usage);
    }
    if let Some(spec) = &cli.random {
        let (n, count, seed) = parse_random(spec)?;
        return Ok(random_corpus(n, count, seed));
    }
    let path = cli.input.as_deref().expect("checked above");
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(usage)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?
    };
    parse_graph_text(&text, cli.format)
}

fn parse_graph_text(text: &str, format: InputFormat) -> Result<Vec<Graph>, Failure> {
    let format = match format {
        InputFormat::Auto => {
            let first = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .find(|l| !l.is_empty());
            match first {
                Some(l) if l.split_whitespace().next() == Some("n") => InputFormat::Edgelist,
                _ => InputFormat::Graph6,
            }
        }
        other => other,
    };
    match format {
        InputFormat::Edgelist => parse_edge_list(text).map(|g| vec![g]).map_err(usage),
        _ => {
            let graphs = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .enumerate()
                .map(|(i, l)| parse_graph6(l.as_bytes()).map_err(|e| usage(format!("record {}: {e}", i + 1))))
                .collect::<Result<Vec<_>, _>>()?;
            if graphs.is_empty() {
                return Err(usage("graph6: empty input"));
            }
            Ok(graphs)
        }
    }
}

fn parse_random(spec: &[String]) -> Result<(usize, usize, u64), Failure> {
    let (mut n, mut count, mut seed) = (None, None, None);
    for item in spec {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| usage(format!("--random: expected key=value, got `{item}`")))?;
        let num: u64 = value.parse().map_err(|e| usage(format!("--random {key}: {e}")))?;
        match key {
            "n" => n = Some(num as usize),
            "count" => count = Some(num as usize),
            "seed" => seed = Some(num),
            _ => return Err(usage(format!("--random: unknown key `{key}`"))),
        }
    }
    match (n, count, seed) {
        (Some(n), Some(c), Some(s)) => Ok((n, c, s)),
        _ => Err(usage("--random needs n=, count= and seed=")),
    }
}

fn parse_exponents(specs: &[String]) -> Result<Vec<u64>, Failure> {
    let mut ps = Vec::new();
    for spec in specs {
        for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let bad = |e: std::num::ParseIntError| usage(format!("bad exponent `{part}`: {e}"));
            if let Some((lo, hi)) = part.split_once("..") {
                let hi = hi.strip_prefix('=').unwrap_or(hi);
                let (lo, hi): (u64, u64) = (lo.parse().map_err(bad)?, hi.parse().map_err(bad)?);
                if lo > hi {
                    return Err(usage(format!("empty exponent range `{part}`")));
                }
                ps.extend(lo..=hi);
            } else {
                ps.push(part.parse().map_err(bad)?);
            }
        }
    }
    if ps.is_empty() {
        return Err(usage("no exponents given"));
    }
    Ok(ps)
}

fn json_line(v: Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn cmd_info(g: &Graph, fmt: OutputFormat) -> Outcome {
    let degrees = g.degrees();
    let ds = degrees.as_slice();
    let joined = |sep: &str| ds.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep);
    Ok(match fmt {
        OutputFormat::Json => json_line(json!({
            "n": g.vertex_count(),
            "m": g.edge_count(),
            "degrees": ds,
            "isolated": g.isolated_count(),
        })),
        OutputFormat::Plain => format!(
            "n={} m={} degrees={} n0={}\n",
            g.vertex_count(),
            g.edge_count(),
            joined(","),
            g.isolated_count()
        ),
        OutputFormat::Csv => format!(
            "n,m,degrees,isolated\n{},{},{},{}\n",
            g.vertex_count(),
            g.edge_count(),
            joined(" "),
            g.isolated_count()
        ),
        OutputFormat::Latex => return Err(usage("latex output is available for triangles and gf only")),
    })
}

fn cmd_triangles(g: &Graph, which: Which, fmt: OutputFormat) -> Outcome {
    let star = star_sequence(g);
    let freq = frequency_sequence(g);
    let round_trip_ok = || frequency_from_star(&star) == freq && star_from_frequency(&freq) == star;
    let out = match (which, fmt) {
        (Which::Star, OutputFormat::Json) => json_line(json!({ "star": star.to_json() })),
        (Which::Freq, OutputFormat::Json) => json_line(json!({ "frequency": freq.to_json() })),
        (Which::Star, OutputFormat::Csv) => star.to_csv(),
        (Which::Freq, OutputFormat::Csv) => freq.to_csv(),
        (Which::Star, OutputFormat::Latex) => star.to_latex("S"),
        (Which::Freq, OutputFormat::Latex) => freq.to_latex("f"),
        (Which::Star, OutputFormat::Plain) => star.to_plain(),
        (Which::Freq, OutputFormat::Plain) => freq.to_plain(),
        (Which::Both, _) => {
            let ok = round_trip_ok();
            let status = if ok { "ok" } else { "failed" };
            let out = match fmt {
                OutputFormat::Json => json_line(json!({
                    "star": star.to_json(),
                    "frequency": freq.to_json(),
                    "round_trip": status,
                })),
                OutputFormat::Csv => {
                    let mut s = String::from("triangle,a,b,value\n");
                    for (name, t) in [("star", &star), ("freq", &freq)] {
                        for (a, b, v) in t.entries() {
                            let _ = writeln!(s, "{name},{a},{b},{v}");
                        }
                    }
                    s
                }
                OutputFormat::Latex => format!(
                    "{}{}% round trip: {status}\n",
                    star.to_latex("S"),
                    freq.to_latex("f")
                ),
                OutputFormat::Plain => format!(
                    "star\n{}frequency\n{}round trip: {status}\n",
                    star.to_plain(),
                    freq.to_plain()
                ),
            };
            if !ok {
                print!("{out}");
                return Err(Failure::Verification(format!(
                    "triangle round trip failed on graph6 {}",
                    g.to_graph6()
                )));
            }
            out
        }
    };
    Ok(out)
}

fn cmd_zagreb(g: &Graph, ps: &[u64], cross_check: bool, fmt: OutputFormat) -> Outcome {
    let (star, freq) = if cross_check {
        (Some(star_sequence(g)), Some(frequency_sequence(g)))
    } else {
        (None, None)
    };
    let mut rows = Vec::with_capacity(ps.len());
    for &p in ps {
        let direct = m2_direct(g, p);
        let routes = match (&freq, &star) {
            (Some(f), Some(s)) => {
                let (rf, rs) = (m2_from_frequency(f, p), m2_from_star(s, p));
                if rf != direct || rs != direct {
                    return Err(Failure::Verification(format!(
                        "p = {p}: direct {direct}, frequency {rf}, star {rs} on graph6 {}",
                        g.to_graph6()
                    )));
                }
                Some((rf, rs))
            }
            _ => None,
        };
        rows.push((p, direct, routes));
    }
    Ok(match fmt {
        OutputFormat::Json => {
            let values: Vec<Value> = rows
                .iter()
                .map(|(p, d, r)| match r {
                    Some((f, s)) => json!({
                        "p": p, "direct": d.to_string(),
                        "frequency": f.to_string(), "star": s.to_string(),
                    }),
                    None => json!({ "p": p, "value": d.to_string() }),
                })
                .collect();
            json_line(json!({ "values": values }))
        }
        OutputFormat::Csv => {
            let mut s = String::from(if cross_check { "p,direct,frequency,star\n" } else { "p,value\n" });
            for (p, d, r) in &rows {
                match r {
                    Some((f, st)) => writeln!(s, "{p},{d},{f},{st}"),
                    None => writeln!(s, "{p},{d}"),
                }
                .expect("writing to a String");
            }
            s
        }
        OutputFormat::Plain => {
            let mut s = String::new();
            for (p, d, r) in &rows {
                let _ = write!(s, "M2^({p}) = {d}");
                if r.is_some() {
                    s.push_str(" (3 routes agree)");
                }
                s.push('\n');
            }
            s
        }
        OutputFormat::Latex => return Err(usage("latex output is available for triangles and gf only")),
    })
}

fn cmd_gf(g: &Graph, terms: Option<usize>, fmt: OutputFormat) -> Outcome {
    let gf = generating_function(g);
    let series = match terms {
        Some(k) => {
            let series = series_divide(&gf.numerator, &gf.denominator(), k)
                .expect("denominator constant term is 1");
            if let Some(p) = (0..k).find(|&p| series[p] != m2_direct(g, p as u64)) {
                return Err(Failure::Verification(format!(
                    "series coefficient {p} disagrees with the edge sum on graph6 {}",
                    g.to_graph6()
                )));
            }
            Some(series)
        }
        None => None,
    };
    let series_strings = || -> Vec<String> {
        series.iter().flatten().map(ToString::to_string).collect()
    };
    Ok(match fmt {
        OutputFormat::Json => {
            let mut v = serde_json::to_value(gf.to_json()).expect("serializable");
            if series.is_some() {
                v["series"] = json!(series_strings());
            }
            json_line(v)
        }
        OutputFormat::Plain => {
            let mut s = format!("{}\n", gf.to_plain());
            if series.is_some() {
                let _ = writeln!(s, "series: {}", series_strings().join(", "));
            }
            s
        }
        OutputFormat::Latex => {
            let mut s = format!("\\mathcal{{G}}(M_2,t)={}\n", gf.to_latex());
            if series.is_some() {
                let _ = writeln!(s, "% series: {}", series_strings().join(", "));
            }
            s
        }
        OutputFormat::Csv => return Err(usage("csv output is not available for gf")),
    })
}

fn cmd_recurrence(g: &Graph, pmax: Option<u64>, fmt: OutputFormat) -> Outcome {
    let coeffs = recurrence_coefficients(g.vertex_count());
    let order = (coeffs.len() - 1) as u64;
    let report = recurrence_check(g, pmax.unwrap_or(2 * order));
    let out = match fmt {
        OutputFormat::Json => json_line(json!({
            "coefficients": coeffs.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "report": report,
            "passed": report.passed(),
        })),
        OutputFormat::Plain => {
            let mut s = format!(
                "coefficients: {}\n",
                coeffs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
            );
            let _ = writeln!(s, "M2^({}) = {} ; rhs = {}", report.order, report.lhs, report.rhs);
            let _ = writeln!(
                s,
                "shifted instances {}..={}: {} violation(s)",
                report.order,
                report.p_max,
                report.violations.len()
            );
            s
        }
        OutputFormat::Csv => {
            let mut s = String::from("i,coefficient\n");
            for (i, c) in coeffs.iter().enumerate() {
                let _ = writeln!(s, "{i},{c}");
            }
            s
        }
        OutputFormat::Latex => return Err(usage("latex output is available for triangles and gf only")),
    };
    if !report.passed() {
        print!("{out}");
        return Err(Failure::Verification(format!("recurrence violated on graph6 {}", g.to_graph6())));
    }
    Ok(out)
}

fn cmd_verify(graphs: &[Graph], opts: VerifyOptions, parallel: bool, fmt: OutputFormat) -> Outcome {
    let reports: Vec<VerifyReport> = if parallel {
        graphs.par_iter().map(|g| verify_graph(g, opts)).collect()
    } else {
        graphs.iter().map(|g| verify_graph(g, opts)).collect()
    };
    let failed: Vec<&VerifyReport> = reports.iter().filter(|r| !r.passed()).collect();
    let out = match fmt {
        OutputFormat::Json => json_line(json!({
            "graphs": reports.len(),
            "failed": failed.len(),
            "passed": failed.is_empty(),
            "reports": reports,
        })),
        OutputFormat::Plain => {
            let mut s = String::new();
            for r in &reports {
                let _ = writeln!(s, "graph {} (n={}, m={})", r.graph6, r.n, r.m);
                for c in &r.checks {
                    let mark = if c.passed { "PASS" } else { "FAIL" };
                    let _ = write!(s, "  {mark} {}", c.name);
                    if let Some(d) = &c.detail {
                        let _ = write!(s, ": {d}");
                    }
                    s.push('\n');
                }
            }
            let _ = writeln!(s, "{} graph(s), {} failed", reports.len(), failed.len());
            s
        }
        OutputFormat::Csv => {
            let mut s = String::from("graph6,check,passed\n");
            for r in &reports {
                for c in &r.checks {
                    let _ = writeln!(s, "{},{},{}", r.graph6, c.name, c.passed);
                }
            }
            s
        }
        OutputFormat::Latex => return Err(usage("latex output is available for triangles and gf only")),
    };
    if let Some(first) = failed.first() {
        print!("{out}");
        let names: Vec<&str> = first.failures().map(|c| c.name).collect();
        return Err(Failure::Verification(format!(
            "{} of {} graph(s) failed; first: graph6 {} ({})",
            failed.len(),
            reports.len(),
            first.graph6,
            names.join(", ")
        )));
    }
    Ok(out)
}
