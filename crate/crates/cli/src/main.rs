use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cliquealg::graph::{cliques, EdgeSigns, SignPolicy};
use cliquealg::groebner::{groebner_for_graph, verify_sign_independence};
use cliquealg::oracle::{oracle_hilbert, OracleError};
use cliquealg::trace::{verify_cartier_foata, weight_map, TraceMonoid};
use cliquealg::{
    clique_polynomial, corpus, hilbert_series, inertness_report, parse_graph, TruncatedSeries,
    VertexId, WeightedGraph,
};

/// Highest degree the oracle is asked for inside `verify`.
const VERIFY_ORACLE_DEGREE: u32 = 6;

#[derive(Parser)]
#[command(name = "cliquealg", version, about = "Clique polynomials and Hilbert series of graph algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Degree (or trace weight) bound N.
    #[arg(long, global = true, visible_alias = "weight", default_value_t = 6)]
    degree: u32,

    /// Variable precedence, largest first, e.g. x1,x3,x5,x2,x4.
    #[arg(long, global = true, value_delimiter = ',')]
    order: Option<Vec<String>>,

    /// Edge signs: default, zero, explicit, random or random:<seed>.
    #[arg(long, global = true, default_value = "explicit")]
    signs: String,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Print the clique polynomial.
    CliquePoly { input: String },
    /// Hilbert series coefficients through the degree bound.
    Hilbert {
        input: String,
        #[arg(long, value_enum, default_value_t = Method::Clique)]
        method: Method,
    },
    /// Truncated Gröbner basis, one rule per line.
    Groebner { input: String },
    /// Triangle-freeness and the two-term Hilbert series test.
    Inert { input: String },
    /// Trace normal forms up to the weight bound.
    Traces { input: String },
    /// Check that the clique series inverts the characteristic series.
    CartierFoata { input: String },
    /// Run every method and identity check.
    Verify {
        input: String,
        /// Random sign assignments tried besides zero and default.
        #[arg(long, default_value_t = 4)]
        trials: usize,
    },
    /// Presentations of A(Γ) and its DGA.
    Dga { input: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Clique,
    Groebner,
    Monoid,
    Oracle,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Clique => "clique",
            Method::Groebner => "groebner",
            Method::Monoid => "monoid",
            Method::Oracle => "oracle",
        }
    }
}

/// Input problems; verification mismatches are reported through `Output::ok`.
enum Failure {
    Input(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

struct Run {
    graph: WeightedGraph,
    signs: EdgeSigns,
    order: Option<Vec<VertexId>>,
    degree: u32,
    seed: u64,
}

fn load(input: &str) -> Result<WeightedGraph, Failure> {
    if let Some(name) = input.strip_prefix("corpus:") {
        return match corpus::load(name) {
            Some(g) => Ok(g?),
            None => {
                let names: Vec<_> = corpus::names().collect();
                Err(Failure::Input(format!("unknown corpus graph `{name}` (known: {})", names.join(", "))))
            }
        };
    }
    let text = std::fs::read_to_string(Path::new(input))
        .map_err(|e| Failure::Input(format!("{input}: {e}")))?;
    parse_graph(&text).map_err(|e| Failure::Input(format!("{input}: {e}")))
}

fn parse_order(items: &[String], g: &WeightedGraph) -> Result<Vec<VertexId>, Failure> {
    let ids = items
        .iter()
        .map(|s| {
            let t = s.trim();
            t.strip_prefix('x')
                .unwrap_or(t)
                .parse::<VertexId>()
                .map_err(|_| Failure::Input(format!("bad variable `{t}` in --order")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    g.check_order(&ids)?;
    Ok(ids)
}

fn parse_policy(s: &str, seed: u64) -> Result<SignPolicy, Failure> {
    if s == "random" {
        return Ok(SignPolicy::Random(seed));
    }
    Ok(s.parse()?)
}

fn coefficient_line(s: &TruncatedSeries) -> String {
    s.coefficients().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

fn series_json(method: &str, s: &TruncatedSeries) -> Value {
    let mut v = s.to_json();
    v["method"] = json!(method);
    v
}

fn hilbert(run: &Run, method: Method) -> Result<TruncatedSeries, Failure> {
    let g = &run.graph;
    let n = run.degree as usize;
    match method {
        Method::Clique => Ok(hilbert_series(g, n)),
        Method::Groebner => {
            let gb = groebner_for_graph(g, &run.signs, run.order.as_deref(), run.degree)?;
            Ok(gb.hilbert_series(n)?)
        }
        Method::Monoid => {
            if !run.signs.all_zero() {
                return Err(Failure::Input(format!(
                    "the monoid method models zero edge signs, but the resolved signs are {}; use --signs zero",
                    run.signs
                )));
            }
            Ok(weight_map(&TraceMonoid::new(g).characteristic(run.degree)))
        }
        Method::Oracle => match oracle_hilbert(g, &run.signs, n) {
            Ok(s) => Ok(s),
            Err(OracleError::CapExceeded { degree, words, cap, partial }) => Err(Failure::Input(format!(
                "oracle stopped at degree {degree} ({words} words, cap {cap}); computed so far: {}",
                coefficient_line(&partial)
            ))),
            Err(e) => Err(e.into()),
        },
    }
}

fn cmd_clique_poly(run: &Run) -> Output {
    let p = clique_polynomial(&run.graph);
    let terms: Vec<Value> = p.terms().map(|(d, c)| json!({"degree": d, "coefficient": c})).collect();
    Output {
        text: format!("{p}\n"),
        json: json!({"polynomial": p.to_string(), "terms": terms, "cliques": cliques(&run.graph).len()}),
        ok: true,
    }
}

fn cmd_hilbert(run: &Run, method: Method) -> Result<Output, Failure> {
    let s = hilbert(run, method)?;
    Ok(Output { text: format!("{}\n", coefficient_line(&s)), json: series_json(method.name(), &s), ok: true })
}

fn cmd_groebner(run: &Run) -> Result<Output, Failure> {
    let gb = groebner_for_graph(&run.graph, &run.signs, run.order.as_deref(), run.degree)?;
    let ids: Vec<VertexId> = run.graph.vertices().iter().map(|v| v.id).collect();
    let mut json = gb.to_json(Some(&ids));
    json["signs"] = json!(run.signs.as_slice());
    Ok(Output { text: gb.render_text(), json, ok: true })
}

fn cmd_inert(run: &Run) -> Output {
    let r = inertness_report(&run.graph);
    let yes = |b: bool| if b { "yes" } else { "no" };
    let mut text = String::new();
    writeln!(text, "clique polynomial: {}", r.clique_polynomial).unwrap();
    writeln!(text, "two-term polynomial: {}", r.two_term_polynomial).unwrap();
    writeln!(text, "triangle-free: {}", yes(r.triangle_free)).unwrap();
    if let Some([a, b, c]) = r.witness_triangle {
        writeln!(text, "witness triangle: {{{a}, {b}, {c}}}").unwrap();
    }
    writeln!(text, "inert: {}", yes(r.matches)).unwrap();
    Output {
        text,
        json: json!({
            "triangle_free": r.triangle_free,
            "witness_triangle": r.witness_triangle,
            "clique_polynomial": r.clique_polynomial.to_string(),
            "two_term_polynomial": r.two_term_polynomial.to_string(),
            "matches": r.matches,
            "inert": r.matches,
        }),
        ok: true,
    }
}

fn cmd_traces(run: &Run) -> Output {
    let m = TraceMonoid::new(&run.graph);
    let traces = m.enumerate(run.degree);
    let mut text = String::new();
    for t in &traces {
        writeln!(text, "{}\t{}", t.weight(), m.render(t)).unwrap();
    }
    let json = json!({
        "weight": run.degree,
        "count": traces.len(),
        "traces": traces.iter().map(|t| json!({"weight": t.weight(), "word": m.ids(t)})).collect::<Vec<_>>(),
    });
    Output { text, json, ok: true }
}

fn cmd_cartier_foata(run: &Run) -> Output {
    let report = verify_cartier_foata(&run.graph, run.degree);
    let m = TraceMonoid::new(&run.graph);
    let mut text = format!(
        "cartier-foata through weight {} ({} traces): {}\n",
        report.truncation,
        report.traces,
        if report.passed() { "pass" } else { "FAIL" }
    );
    if !report.left_residual.is_empty() {
        writeln!(text, "mu*chi - 1 = {}", m.render_series(&report.left_residual)).unwrap();
    }
    if !report.right_residual.is_empty() {
        writeln!(text, "chi*mu - 1 = {}", m.render_series(&report.right_residual)).unwrap();
    }
    Output {
        text,
        json: json!({
            "weight": report.truncation,
            "traces": report.traces,
            "passed": report.passed(),
            "left_residual": m.render_series(&report.left_residual),
            "right_residual": m.render_series(&report.right_residual),
        }),
        ok: report.passed(),
    }
}

struct Check {
    name: String,
    passed: bool,
    detail: String,
}

fn cmd_verify(run: &Run, trials: usize) -> Result<Output, Failure> {
    let g = &run.graph;
    let n = run.degree as usize;
    let mut checks = Vec::new();
    let mut series = Vec::new();

    let reference = hilbert_series(g, n);
    series.push(("clique", reference.clone()));
    let gb = groebner_for_graph(g, &run.signs, run.order.as_deref(), run.degree)?;
    series.push(("groebner", gb.hilbert_series(n)?));
    // trace counts model zero signs; the sign check below ties them to the rest
    series.push(("monoid", weight_map(&TraceMonoid::new(g).characteristic(run.degree))));
    let oracle_degree = n.min(VERIFY_ORACLE_DEGREE as usize);
    match oracle_hilbert(g, &run.signs, oracle_degree) {
        Ok(s) => series.push(("oracle", s)),
        Err(OracleError::CapExceeded { partial, .. }) => series.push(("oracle", partial)),
        Err(e) => return Err(e.into()),
    }
    for (name, s) in &series[1..] {
        let shared = s.truncation().min(reference.truncation());
        let difference = reference.truncate(shared).first_difference(&s.truncate(shared));
        checks.push(Check {
            name: format!("hilbert: clique = {name} through degree {shared}"),
            passed: difference.is_none(),
            detail: match difference {
                None => String::new(),
                Some(k) => format!(
                    "first difference at degree {k}: {} vs {}",
                    reference.coefficient(k),
                    s.coefficient(k)
                ),
            },
        });
    }

    let cf = verify_cartier_foata(g, run.degree);
    checks.push(Check {
        name: format!("cartier-foata through weight {}", run.degree),
        passed: cf.passed(),
        detail: if cf.passed() {
            String::new()
        } else {
            TraceMonoid::new(g).render_series(&cf.left_residual)
        },
    });

    let signs = verify_sign_independence(g, trials, run.degree, run.seed)?;
    checks.push(Check {
        name: format!("sign independence over {} assignments", signs.assignments.len()),
        passed: signs.passed(),
        detail: signs
            .discrepancies
            .first()
            .map(|d| format!("signs {} vs {}", d.baseline, d.other))
            .unwrap_or_default(),
    });

    let inert = inertness_report(g);
    checks.push(Check {
        name: "inertness: two-term test agrees with triangle-freeness".to_string(),
        passed: inert.matches == inert.triangle_free,
        detail: format!("inert = {}", inert.matches),
    });

    let ok = checks.iter().all(|c| c.passed);
    let mut text = String::new();
    for (name, s) in &series {
        writeln!(text, "{name:>9}: {}", coefficient_line(s)).unwrap();
    }
    for c in &checks {
        let mark = if c.passed { "ok  " } else { "FAIL" };
        if c.detail.is_empty() {
            writeln!(text, "[{mark}] {}", c.name).unwrap();
        } else {
            writeln!(text, "[{mark}] {} ({})", c.name, c.detail).unwrap();
        }
    }
    writeln!(text, "{}", if ok { "all checks passed" } else { "verification FAILED" }).unwrap();
    let json = json!({
        "degree": run.degree,
        "series": series.iter().map(|(name, s)| series_json(name, s)).collect::<Vec<_>>(),
        "checks": checks.iter().map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail})).collect::<Vec<_>>(),
        "inert": inert.matches,
        "passed": ok,
    });
    Ok(Output { text, json, ok })
}

fn cmd_dga(run: &Run) -> Result<Output, Failure> {
    let p = cliquealg::freealg::presentation_with(&run.graph, &run.signs, run.order.as_deref())?;
    Ok(Output { text: p.render_text(), json: p.to_json(), ok: true })
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    let input = match &cli.command {
        Command::CliquePoly { input }
        | Command::Hilbert { input, .. }
        | Command::Groebner { input }
        | Command::Inert { input }
        | Command::Traces { input }
        | Command::CartierFoata { input }
        | Command::Verify { input, .. }
        | Command::Dga { input } => input,
    };
    let graph = load(input)?;
    let order = cli.order.as_deref().map(|o| parse_order(o, &graph)).transpose()?;
    let signs = parse_policy(&cli.signs, cli.seed)?.resolve(&graph);
    let run = Run { graph, signs, order, degree: cli.degree, seed: cli.seed };
    match &cli.command {
        Command::CliquePoly { .. } => Ok(cmd_clique_poly(&run)),
        Command::Hilbert { method, .. } => cmd_hilbert(&run, *method),
        Command::Groebner { .. } => cmd_groebner(&run),
        Command::Inert { .. } => Ok(cmd_inert(&run)),
        Command::Traces { .. } => Ok(cmd_traces(&run)),
        Command::CartierFoata { .. } => Ok(cmd_cartier_foata(&run)),
        Command::Verify { trials, .. } => cmd_verify(&run, *trials),
        Command::Dga { .. } => cmd_dga(&run),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable")),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
