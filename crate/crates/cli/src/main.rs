use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use phenylene_core::enumerate::{enumerate, max_h_from_env, EnumerateOptions, Filters, MAX_H_ENV};
use phenylene_core::families::FamilySpec;
use phenylene_core::formulas::evaluate;
use phenylene_core::lemmas::{
    check_pl_vs_second_chain, check_pl_vs_third_chain, check_two_segment_ordering, linear_branch_trials, merge_trials,
    orientation_trials, TrialSummary,
};
use phenylene_core::phenylene::{cut_classes, geometric_embedding, Surd};
use phenylene_core::verify::{check_claim, member_label, rank, Claim, Status, Verdict};
use phenylene_core::{Error, PhenyleneTree};

#[derive(Parser)]
#[command(name = "phenylene", version, about = "Mostar index of tree-like phenylenes")]
struct Cli {
    /// Largest h the enumerator accepts [default: $PHENYLENE_MAX_H or 9]
    #[arg(long, global = true)]
    max_h: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mostar index of a phenylene given as JSON
    Compute {
        /// JSON file; `-` or omitted reads stdin
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Build a named family member, e.g. `linear:6`, `cl:1,0,3`, `pl:1,1,3`, `chain:LRS`
    Family {
        spec: String,
        /// Also write a DOT drawing with exact coordinates
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate a closed form: linear H | pl J K N | second H | third H
    Formula {
        name: String,
        #[arg(required = true)]
        params: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Stream every isomorphism class with h hexagons as JSON lines
    Enumerate {
        #[arg(long)]
        h: usize,
        #[command(flatten)]
        filters: FilterArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Group all classes with h hexagons by Mostar index
    Rank {
        #[arg(long)]
        h: usize,
        /// Number of value groups to print
        #[arg(long)]
        top: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[command(flatten)]
        filters: FilterArgs,
    },
    /// Check the minimum, second and third smallest values over a range of h
    Verify {
        /// min, second, third (or 3.5, 4.4, 5.4); all three when omitted
        #[arg(long)]
        theorem: Option<String>,
        /// Inclusive range `A..B`, or a single h
        #[arg(long, default_value = "2..8")]
        h_range: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[command(flatten)]
        filters: FilterArgs,
    },
    /// Seeded random trials of the transformation inequalities plus the family orderings
    CheckLemmas {
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Size bound for the random instances
        #[arg(long, default_value_t = 8)]
        trial_h: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Args, Clone, Copy)]
struct FilterArgs {
    /// Only phenylenes without a full hexagon
    #[arg(long)]
    chains_only: bool,
    /// Only phenylenes whose regular drawing does not overlap itself
    #[arg(long)]
    planar_only: bool,
}

impl From<FilterArgs> for Filters {
    fn from(f: FilterArgs) -> Self {
        Filters { chains_only: f.chains_only, planar_only: f.planar_only }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Cut,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::MethodMismatch { .. }) { 1 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn io_error(e: io::Error) -> Failure {
    input_error(e.to_string())
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let max_h = cli.max_h.unwrap_or_else(max_h_from_env);
    match run(cli.command, max_h) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command, max_h: usize) -> CmdResult {
    match command {
        Command::Compute { input, method, format } => compute(input, method, format),
        Command::Family { spec, dot, output } => family(&spec, dot, output),
        Command::Formula { name, params, format } => formula(&name, &params, format),
        Command::Enumerate { h, filters, output } => enumerate_cmd(h, filters.into(), max_h, output),
        Command::Rank { h, top, format, filters } => rank_cmd(h, top, format, filters.into(), max_h),
        Command::Verify { theorem, h_range, format, filters } => {
            verify_cmd(theorem.as_deref(), &h_range, format, filters.into(), max_h)
        }
        Command::CheckLemmas { trials, seed, trial_h, format } => check_lemmas(trials, seed, trial_h, format),
    }
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(io_error),
        None => io::stdout().write_all(text.as_bytes()).map_err(io_error),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn read_input(input: Option<PathBuf>) -> Result<String, Failure> {
    match input {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(&p).map_err(|e| input_error(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(io_error)?;
            Ok(s)
        }
    }
}

#[derive(Serialize)]
struct CutRow {
    edges: Vec<(usize, usize)>,
    o: usize,
    r_u: usize,
    r_v: usize,
    contribution: u64,
}

fn compute(input: Option<PathBuf>, method: Method, format: Format) -> CmdResult {
    let tree = PhenyleneTree::from_json(&read_input(input)?)?;
    let direct = match method {
        Method::Cut => None,
        _ => Some(tree.expand()?.mostar_direct()?),
    };
    let classes = match method {
        Method::Direct => None,
        _ => Some(cut_classes(&tree)?),
    };
    let cut = classes.as_ref().map(|c| c.iter().map(|x| x.contribution()).sum::<u64>());
    let agree = match (direct, cut) {
        (Some(d), Some(c)) => Some(d == c),
        _ => None,
    };
    let rows: Vec<CutRow> = match method {
        Method::Both => classes
            .iter()
            .flatten()
            .map(|c| CutRow {
                edges: c.edges.clone(),
                o: c.size(),
                r_u: c.r_u,
                r_v: c.r_v,
                contribution: c.contribution(),
            })
            .collect(),
        _ => Vec::new(),
    };

    let text = match format {
        Format::Json => json(&serde_json::json!({
            "h": tree.h,
            "direct": direct,
            "cut": cut,
            "agree": agree,
            "classes": if method == Method::Both { Some(&rows) } else { None },
        })),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["class", "o", "r_u", "r_v", "contribution"]).map_err(|e| input_error(e.to_string()))?;
            for (i, r) in rows.iter().enumerate() {
                w.serialize((i + 1, r.o, r.r_u, r.r_v, r.contribution)).map_err(|e| input_error(e.to_string()))?;
            }
            String::from_utf8(w.into_inner().map_err(|e| input_error(e.to_string()))?).expect("utf-8")
        }
        Format::Table => {
            let mut s = String::new();
            if !rows.is_empty() {
                writeln!(s, "{:>5} {:>4} {:>5} {:>5} {:>12}  first edge", "class", "o", "r_u", "r_v", "contribution")
                    .unwrap();
                for (i, r) in rows.iter().enumerate() {
                    let (a, b) = r.edges[0];
                    writeln!(s, "{:>5} {:>4} {:>5} {:>5} {:>12}  {a}-{b}", i + 1, r.o, r.r_u, r.r_v, r.contribution)
                        .unwrap();
                }
            }
            if let Some(d) = direct {
                writeln!(s, "direct {d}").unwrap();
            }
            if let Some(c) = cut {
                writeln!(s, "cut    {c}").unwrap();
            }
            match agree {
                Some(true) => writeln!(s, "agree").unwrap(),
                Some(false) => writeln!(s, "DISAGREE").unwrap(),
                None => {}
            }
            s
        }
    };
    emit(None, &text)?;
    match (direct, cut) {
        (Some(d), Some(c)) if d != c => Err(Error::MethodMismatch { tree: tree.to_json(), cut: c, direct: d }.into()),
        _ => Ok(0),
    }
}

fn surd_text(s: Surd) -> String {
    // doubled coordinate, so halve when printing
    let rational = |n: i64| if n % 2 == 0 { format!("{}", n / 2) } else { format!("{n}/2") };
    match (s.a, s.b) {
        (a, 0) => rational(a),
        (0, b) => format!("{}*sqrt3", rational(b)),
        (a, b) if a % 2 == 0 && b % 2 == 0 => format!("{}{:+}*sqrt3", a / 2, b / 2),
        (a, b) => format!("({a}{b:+}*sqrt3)/2"),
    }
}

fn dot_text(tree: &PhenyleneTree, name: &str) -> Result<String, Failure> {
    let g = tree.expand()?;
    let e = geometric_embedding(tree)?;
    let mut s = String::new();
    writeln!(s, "graph \"{name}\" {{").unwrap();
    writeln!(s, "  node [shape=point];").unwrap();
    for (v, p) in e.vertices.iter().enumerate() {
        let (x, y) = p.to_f64();
        writeln!(
            s,
            "  {v} [pos=\"{x:.6},{y:.6}!\", exact_x=\"{}\", exact_y=\"{}\"];",
            surd_text(p.x2),
            surd_text(p.y2)
        )
        .unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(s, "  {u} -- {v};").unwrap();
    }
    writeln!(s, "}}").unwrap();
    Ok(s)
}

fn family(spec: &str, dot: Option<PathBuf>, output: Option<PathBuf>) -> CmdResult {
    let parsed: FamilySpec = spec.parse()?;
    let tree = parsed.build()?;
    emit(output.as_ref(), &(tree.to_json() + "\n"))?;
    if let Some(path) = dot {
        fs::write(&path, dot_text(&tree, &parsed.to_string())?).map_err(io_error)?;
    }
    Ok(0)
}

fn formula(name: &str, params: &[usize], format: Format) -> CmdResult {
    let r = evaluate(name, params)?;
    let text = match format {
        Format::Json => json(&serde_json::json!({
            "name": name,
            "params": params,
            "value": r.value,
            "branch": r.branch.to_string(),
        })),
        _ => format!("{} {}\n", r.value, r.branch),
    };
    emit(None, &text)?;
    Ok(0)
}

fn options(filters: Filters, max_h: usize) -> EnumerateOptions {
    EnumerateOptions { filters, max_h }
}

fn enumerate_cmd(h: usize, filters: Filters, max_h: usize, output: Option<PathBuf>) -> CmdResult {
    let catalog = enumerate(h, options(filters, max_h)).map_err(with_bound_hint)?;
    let mut text = String::new();
    for e in &catalog.entries {
        text.push_str(&e.json_line());
        text.push('\n');
    }
    text.push_str(&catalog.summary_json());
    text.push('\n');
    emit(output.as_ref(), &text)?;
    Ok(0)
}

fn with_bound_hint(e: Error) -> Failure {
    let hint = matches!(e, Error::ResourceBound { .. });
    let mut f = Failure::from(e);
    if hint {
        f.message.push_str(&format!(" (--max-h or {MAX_H_ENV})"));
    }
    f
}

fn rank_cmd(h: usize, top: Option<usize>, format: Format, filters: Filters, max_h: usize) -> CmdResult {
    let report = rank(h, options(filters, max_h)).map_err(with_bound_hint)?;
    let groups = &report.groups[..top.unwrap_or(usize::MAX).min(report.groups.len())];
    let text = match format {
        Format::Json => {
            let rows: Vec<_> = groups
                .iter()
                .enumerate()
                .map(|(i, g)| {
                    serde_json::json!({
                        "rank": i + 1,
                        "mo_value": g.value,
                        "class_count": g.members.len(),
                        "members": g.members,
                    })
                })
                .collect();
            json(&serde_json::json!({
                "h": report.h,
                "filters": report.filters,
                "class_count": report.class_count,
                "groups": rows,
            }))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let csv_err = |e: csv::Error| input_error(e.to_string());
            w.write_record(["rank", "mo_value", "class_count", "member_specs"]).map_err(csv_err)?;
            for (i, g) in groups.iter().enumerate() {
                let names: Vec<&str> = g.members.iter().map(|m| m.name.as_str()).collect();
                w.serialize((i + 1, g.value, g.members.len(), names.join(";"))).map_err(csv_err)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| input_error(e.to_string()))?).expect("utf-8")
        }
        Format::Table => {
            let mut s = format!("h = {}, {} classes\n", report.h, report.class_count);
            for (i, g) in groups.iter().enumerate() {
                let names: Vec<String> = g.members.iter().map(member_label).collect();
                writeln!(s, "{:>4} {:>8} {:>4}  {}", i + 1, g.value, g.members.len(), names.join(", ")).unwrap();
            }
            s
        }
    };
    emit(None, &text)?;
    Ok(0)
}

fn parse_range(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || input_error(format!("bad h range {s:?}; expected A..B"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a < 1 || a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn status_text(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Empirical => "EMPIRICAL",
    }
}

fn verify_cmd(theorem: Option<&str>, range: &str, format: Format, filters: Filters, max_h: usize) -> CmdResult {
    let claims: Vec<Claim> = match theorem {
        Some(t) => vec![t.parse()?],
        None => Claim::ALL.to_vec(),
    };
    let (a, b) = parse_range(range)?;
    let mut verdicts: Vec<Verdict> = Vec::new();
    for h in a..=b {
        let report = rank(h, options(filters, max_h)).map_err(with_bound_hint)?;
        for &c in &claims {
            verdicts.push(check_claim(&report, c)?);
        }
    }
    let text = match format {
        Format::Json => json(&verdicts),
        _ => {
            let mut s = String::new();
            for v in &verdicts {
                let value = |x: Option<u64>| x.map_or("-".to_string(), |x| x.to_string());
                writeln!(
                    s,
                    "{:<6} h={:<2} {:<9} expected {} {{{}}} observed {} {{{}}}",
                    v.claim,
                    v.h,
                    status_text(v.status),
                    value(v.expected_value),
                    v.expected_members.join(", "),
                    value(v.observed_value),
                    v.observed_members.join(", "),
                )
                .unwrap();
            }
            s
        }
    };
    emit(None, &text)?;
    Ok(verdicts.iter().any(|v| v.status == Status::Fail) as u8)
}

#[derive(Serialize)]
struct OrderingLine {
    name: &'static str,
    h_from: usize,
    h_to: usize,
    holds: bool,
    failing_h: Vec<usize>,
}

fn check_lemmas(trials: usize, seed: u64, trial_h: usize, format: Format) -> CmdResult {
    if !(3..=9).contains(&trial_h) {
        return Err(input_error("--trial-h must lie in 3..=9"));
    }
    let summaries: Vec<TrialSummary> = vec![
        orientation_trials(trials, seed, trial_h)?,
        linear_branch_trials(trials, seed, trial_h)?,
        merge_trials(trials, seed, trial_h)?,
    ];
    let mut orderings = Vec::new();
    let mut ordering = |name, from, to, f: &dyn Fn(usize) -> phenylene_core::Result<bool>| -> Result<(), Failure> {
        let mut failing_h = Vec::new();
        for h in from..=to {
            if !f(h)? {
                failing_h.push(h);
            }
        }
        orderings.push(OrderingLine { name, h_from: from, h_to: to, holds: failing_h.is_empty(), failing_h });
        Ok(())
    };
    ordering("two-segment-ordering", 4, 30, &|h| Ok(check_two_segment_ordering(h)?.holds))?;
    ordering("pl-vs-second-chain", 4, 16, &|h| Ok(check_pl_vs_second_chain(h)?.holds))?;
    ordering("pl-vs-third-chain", 5, 16, &|h| Ok(check_pl_vs_third_chain(h)?.holds))?;

    let text = match format {
        Format::Json => json(&serde_json::json!({ "trials": summaries, "orderings": orderings })),
        _ => {
            let mut s = String::new();
            for t in &summaries {
                writeln!(
                    s,
                    "{:<22} {} {}/{} passed, {} equal, seed {}, h <= {}",
                    t.name,
                    if t.all_passed() { "PASS" } else { "FAIL" },
                    t.passed,
                    t.trials,
                    t.equalities,
                    t.seed,
                    t.max_h
                )
                .unwrap();
                for f in &t.failures {
                    writeln!(s, "    {f}").unwrap();
                }
            }
            for o in &orderings {
                writeln!(
                    s,
                    "{:<22} {} h = {}..{}{}",
                    o.name,
                    if o.holds { "PASS" } else { "FAIL" },
                    o.h_from,
                    o.h_to,
                    if o.holds { String::new() } else { format!(", fails at {:?}", o.failing_h) }
                )
                .unwrap();
            }
            s
        }
    };
    emit(None, &text)?;
    let ok = summaries.iter().all(TrialSummary::all_passed) && orderings.iter().all(|o| o.holds);
    Ok(!ok as u8)
}
