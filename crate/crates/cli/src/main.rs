use std::io::{BufWriter, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use virtfib::cover::{build_cover_tower, build_curve_system, decompose_arcs, CoverError};
use virtfib::graph_manifold::{build_jsj_graph, BasisChange};
use virtfib::pipeline::{certify, NotApplicable, Outcome, PipelineError, MAX_N, MAX_P};
use virtfib::seifert::cover_euler_data;
use virtfib::tangle::{component_count, validate_theorem_hypotheses, CaseTag, LinkClass};
use virtfib::transversality::{FibrationCertificate, Verdict};
use virtfib::{dot, exact, parse_montesinos, MontesinosLink};

mod range;

use range::{parse_range, parse_set};

const EXIT_PASS: u8 = 0;
const EXIT_NOT_APPLICABLE: u8 = 1;
const EXIT_FAIL: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_TOO_LARGE: u8 = 4;

/// Most rows a single batch run will enumerate.
const MAX_BATCH_ROWS: usize = 200_000;

#[derive(Parser, Debug)]
#[command(name = "virtfib", version, about = "Certify virtual fibration of Montesinos links with equal odd denominators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every check on one link and print the certificate.
    Check {
        /// Link in tangle notation, e.g. "(1/5,1/5,1/5)".
        link: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify every link in a parameter sweep.
    Batch {
        /// Denominators, `a..b` inclusive or a single value; even values are skipped.
        #[arg(long = "p", value_parser = parse_range)]
        p: (u64, u64),
        /// Number of tangles, `a..b` inclusive or a single value.
        #[arg(long = "n", value_parser = parse_range)]
        n: (u64, u64),
        /// Allowed numerators, comma separated.
        #[arg(long = "q", value_parser = parse_set, value_delimiter = ',', allow_hyphen_values = true)]
        q: Vec<i64>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graphviz view of the curve system or of the `F_1` boundary graph.
    CoverDot {
        link: String,
        #[arg(long, value_enum, default_value_t = CoverDot::Incidence)]
        dot: CoverDot,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graphviz view of the JSJ graph of the cover or its double.
    JsjDot {
        link: String,
        #[arg(long, value_enum, default_value_t = JsjDot::Single)]
        dot: JsjDot,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum CoverDot {
    Incidence,
    Boundary,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum JsjDot {
    Single,
    Doubled,
}

struct Style {
    color: bool,
}

impl Style {
    fn detect(to_file: bool) -> Self {
        let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
        Self {
            color: !no_color && !to_file && std::io::stdout().is_terminal(),
        }
    }

    fn status(&self, passed: bool) -> String {
        let (word, code) = if passed { ("PASS", "32") } else { ("FAIL", "31") };
        if self.color {
            format!("\x1b[{code}m{word}\x1b[0m")
        } else {
            word.to_string()
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| e.to_string())
        }
    }
}

fn stream(
    out: &Option<PathBuf>,
    write: impl FnOnce(&mut dyn Write) -> std::io::Result<()>,
) -> Result<(), String> {
    let result = match out {
        Some(path) => {
            let file = std::fs::File::create(path).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            let mut w = BufWriter::new(file);
            write(&mut w).and_then(|()| w.flush())
        }
        None => {
            let mut w = BufWriter::new(std::io::stdout().lock());
            write(&mut w).and_then(|()| w.flush())
        }
    };
    result.map_err(|e| e.to_string())
}

fn parse_or_report(text: &str) -> Result<MontesinosLink, ExitCode> {
    parse_montesinos(text).map_err(|e| {
        eprintln!("error: {e}");
        if let Some(pos) = e.position() {
            eprintln!("  {text}");
            eprintln!("  {}^", " ".repeat(text[..pos.min(text.len())].chars().count()));
        }
        ExitCode::from(EXIT_PARSE)
    })
}

fn not_applicable_json(link: &MontesinosLink, na: &NotApplicable) -> Value {
    let mut v = json!({
        "input": { "notation": link.to_string(), "tangles": link.tangles },
        "applicability": { "report": na.report, "reason": na.reason.to_string() },
        "invariants": { "seifert": na.seifert },
        "verdict": { "overall": "NOT_APPLICABLE" },
    });
    stringify(&mut v);
    v
}

fn stringify(v: &mut Value) {
    match v {
        Value::Number(n) => *v = Value::String(n.to_string()),
        Value::Array(a) => a.iter_mut().for_each(stringify),
        Value::Object(o) => o.values_mut().for_each(stringify),
        _ => {}
    }
}

fn certificate_text(cert: &FibrationCertificate, style: &Style) -> String {
    let p = &cert.parts;
    let mut s = String::new();
    let class = match p.class {
        LinkClass::Knot => "knot",
        LinkClass::TwoComponentLink => "two-component link",
    };
    s += &format!("link        {} ({class}, {:?})\n", p.link, p.applicability.case);
    s += &format!(
        "invariants  e(W_K) = {}, chi = {}, geometry {:?}\n",
        exact::format_ratio(&p.seifert.euler_number_wk),
        exact::format_ratio(&p.seifert.chi_orb),
        p.seifert.geometry
    );
    s += &format!(
        "cover       e = {}, e~ = {}, genus(F) = {}, lambda = {}, lambda-bar = {}\n",
        p.cover_euler.e, p.cover_euler.e_tilde, p.tower.f_genus, p.horizontal.lambda, p.horizontal.lambda_bar
    );
    s += &format!("gamma       {} tori, {} crossing records\n", p.gamma.len(), p.records.len());
    for g in &cert.gates {
        s += &format!("  [{}] {:<17} {}\n", style.status(g.passed), g.name, g.detail);
    }
    if cert.extrapolated {
        s += "note        two-component link with n > 3: certificate combines the link-case slopes with the four-torus family (extrapolated)\n";
    }
    s += &format!("verdict     {}\n", style.status(cert.verdict == Verdict::Pass));
    s
}

fn pipeline_exit(e: &PipelineError) -> ExitCode {
    eprintln!("error: {e}");
    if matches!(e, PipelineError::ModelTooLarge { .. }) {
        ExitCode::from(EXIT_TOO_LARGE)
    } else {
        eprintln!("a proof obligation could not be evaluated; this is a bug in virtfib, not a property of the link");
        ExitCode::from(EXIT_FAIL)
    }
}

fn run_check(link_text: &str, json: bool, out: &Option<PathBuf>) -> ExitCode {
    let link = match parse_or_report(link_text) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let style = Style::detect(out.is_some());
    let (text, code) = match certify(&link) {
        Err(e) => return pipeline_exit(&e),
        Ok(Outcome::NotApplicable(na)) => {
            let text = if json {
                let mut t = serde_json::to_string_pretty(&not_applicable_json(&link, &na)).expect("json");
                t.push('\n');
                t
            } else {
                format!("link        {link}\nNOT APPLICABLE: {}\n", na.reason)
            };
            (text, EXIT_NOT_APPLICABLE)
        }
        Ok(Outcome::Certified(cert)) => {
            let text = if json {
                // Large certificates are streamed rather than built as a string.
                if let Err(e) = stream(out, |w| cert.write_json(w)) {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_FAIL);
                }
                String::new()
            } else {
                certificate_text(&cert, &style)
            };
            let code = if cert.verdict == Verdict::Pass {
                EXIT_PASS
            } else {
                eprintln!("a proof obligation failed; this is a bug in virtfib, not a property of the link");
                EXIT_FAIL
            };
            (text, code)
        }
    };
    if !text.is_empty() {
        if let Err(e) = emit(out, &text) {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FAIL);
        }
    }
    ExitCode::from(code)
}

struct Row {
    p: u64,
    n: u64,
    q: Vec<i64>,
    status: String,
    case: String,
    euler: String,
    chi: String,
    detail: String,
}

fn batch_row(p: u64, n: u64, q: Vec<i64>) -> Row {
    let link = MontesinosLink::equal_denominator(p as i64, &q);
    let seifert = virtfib::seifert::seifert_invariants(&link).ok();
    let (euler, chi) = seifert
        .as_ref()
        .map(|s| (exact::format_ratio(&s.euler_number_wk), exact::format_ratio(&s.chi_orb)))
        .unwrap_or_default();
    let (status, case, detail) = match certify(&link) {
        Ok(Outcome::Certified(c)) => (
            c.verdict.to_string(),
            format!("{:?}", c.parts.applicability.case),
            if c.extrapolated { "extrapolated".to_string() } else { String::new() },
        ),
        Ok(Outcome::NotApplicable(na)) => ("NOT_APPLICABLE".into(), "NotApplicable".into(), na.reason.to_string()),
        Err(e @ PipelineError::ModelTooLarge { .. }) => ("TOO_LARGE".into(), String::new(), e.to_string()),
        Err(e) => ("FAIL".into(), String::new(), e.to_string()),
    };
    Row {
        p,
        n,
        q,
        status,
        case,
        euler,
        chi,
        detail,
    }
}

fn tuples(set: &[i64], n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                set.iter().map(move |&q| {
                    let mut t = t.clone();
                    t.push(q);
                    t
                })
            })
            .collect();
    }
    out
}

fn run_batch(p: (u64, u64), n: (u64, u64), q: Vec<i64>, json: bool, out: &Option<PathBuf>) -> ExitCode {
    let mut set = q;
    set.sort();
    set.dedup();
    let mut jobs = Vec::new();
    for pv in (p.0..=p.1).filter(|v| v % 2 == 1) {
        for nv in n.0..=n.1 {
            let count = (set.len() as f64).powi(nv as i32);
            if jobs.len() as f64 + count > MAX_BATCH_ROWS as f64 {
                eprintln!("error: sweep has more than {MAX_BATCH_ROWS} rows");
                return ExitCode::from(EXIT_TOO_LARGE);
            }
            for t in tuples(&set, nv as usize) {
                jobs.push((pv, nv, t));
            }
        }
    }
    jobs.sort();
    let rows: Vec<Row> = jobs.into_par_iter().map(|(p, n, q)| batch_row(p, n, q)).collect();

    let style = Style::detect(out.is_some());
    let text = if json {
        let mut v = Value::Array(
            rows.iter()
                .map(|r| {
                    json!({
                        "p": r.p, "n": r.n, "q": r.q, "status": r.status, "case": r.case,
                        "euler_number_wk": r.euler, "chi_orb": r.chi, "detail": r.detail,
                    })
                })
                .collect(),
        );
        stringify(&mut v);
        let mut t = serde_json::to_string_pretty(&v).expect("json");
        t.push('\n');
        t
    } else {
        let mut t = format!("{:>4} {:>3}  {:<24} {:<10} {:<8} {:<13} {:<15} {}\n", "p", "n", "q", "e(W_K)", "chi", "case", "status", "detail");
        for r in &rows {
            let q = r.q.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
            let status = match r.status.as_str() {
                "PASS" => style.status(true),
                "FAIL" => style.status(false),
                other => other.to_string(),
            };
            t += &format!(
                "{:>4} {:>3}  {:<24} {:<10} {:<8} {:<13} {:<15} {}\n",
                r.p, r.n, q, r.euler, r.chi, r.case, status, r.detail
            );
        }
        t
    };
    if let Err(e) = emit(out, &text) {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_FAIL);
    }
    if rows.iter().any(|r| r.status == "FAIL") {
        ExitCode::from(EXIT_FAIL)
    } else if rows.iter().any(|r| r.status == "TOO_LARGE") {
        ExitCode::from(EXIT_TOO_LARGE)
    } else {
        ExitCode::from(EXIT_PASS)
    }
}

/// Shared gate for the DOT commands: parse, check applicability and size.
fn gated_link(text: &str) -> Result<(MontesinosLink, usize), ExitCode> {
    let link = parse_or_report(text)?;
    if let CaseTag::NotApplicable(reason) = validate_theorem_hypotheses(&link).case {
        eprintln!("not applicable: {reason}");
        return Err(ExitCode::from(EXIT_NOT_APPLICABLE));
    }
    let p = link.common_denominator().and_then(|p| usize::try_from(p).ok());
    match p {
        Some(p) if p <= MAX_P && link.n() <= MAX_N => Ok((link, p)),
        _ => {
            eprintln!("error: model too large (limits p <= {MAX_P}, n <= {MAX_N})");
            Err(ExitCode::from(EXIT_TOO_LARGE))
        }
    }
}

fn run_cover_dot(text: &str, which: CoverDot, out: &Option<PathBuf>) -> ExitCode {
    let (link, _) = match gated_link(text) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let tower = match build_cover_tower(&link) {
        Ok(t) => t,
        Err(CoverError::NotApplicable(r)) => {
            eprintln!("not applicable: {r}");
            return ExitCode::from(EXIT_NOT_APPLICABLE);
        }
        Err(e) => return pipeline_exit(&PipelineError::Cover(e)),
    };
    let system = build_curve_system(&tower);
    let dot = match which {
        CoverDot::Incidence => dot::curve_incidence_dot(&system),
        CoverDot::Boundary => dot::boundary_graph_dot(&decompose_arcs(&system)),
    };
    finish_dot(out, &dot)
}

fn run_jsj_dot(text: &str, which: JsjDot, out: &Option<PathBuf>) -> ExitCode {
    let (link, p) = match gated_link(text) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let euler = match cover_euler_data(&link) {
        Ok(e) => e,
        Err(e) => return pipeline_exit(&PipelineError::Seifert(e)),
    };
    let basis = BasisChange::for_class(component_count(&link));
    let graph = match build_jsj_graph(p, &basis, &euler.e_tilde, matches!(which, JsjDot::Doubled)) {
        Ok(g) => g,
        Err(e) => return pipeline_exit(&PipelineError::Graph(e)),
    };
    finish_dot(out, &dot::jsj_dot(&graph))
}

fn finish_dot(out: &Option<PathBuf>, dot: &str) -> ExitCode {
    match emit(out, dot) {
        Ok(()) => ExitCode::from(EXIT_PASS),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_PASS };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Check { link, json, out } => run_check(&link, json, &out),
        Command::Batch { p, n, q, json, out } => run_batch(p, n, q, json, &out),
        Command::CoverDot { link, dot, out } => run_cover_dot(&link, dot, &out),
        Command::JsjDot { link, dot, out } => run_jsj_dot(&link, dot, &out),
    }
}
