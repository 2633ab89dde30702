//! Command-line front end. [`run`] parses arguments, writes to the given sinks,
//! and returns the process exit code:
//!
//! | code | meaning                                   |
//! |------|-------------------------------------------|
//! | 0    | success                                   |
//! | 2    | usage or input error, budget exceeded     |
//! | 3    | cross-check or internal invariant failure |
//! | 4    | word not in the language                  |

use std::ffi::OsString;
use std::io::{self, Write};
use std::str::FromStr;
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Number, Value};

use crate::algebra::{canonicalize, CanonicalForm, Prime, VectorPair};
use crate::bijection::{vector_to_word, word_to_orbit};
use crate::error::Error;
use crate::formulas::{r_closed, r_recursive};
use crate::language::{count_words, enumerate_words, enumerate_words_with_lead, word_leads, Word};
use crate::orbits::{
    count_orbits_bruteforce, enumerate_orbits, forms_of_blocks, orbit_blocks, DEFAULT_BUDGET,
};
use crate::polar::{
    build_dual_polar_space, find_closure_witness, greedy_closure_set, universal_embedding_dim,
};
use crate::verify::{verify_case, CaseReport, Status};
use crate::BigCount;

/// Overrides the default brute-force state budget.
pub const BUDGET_ENV: &str = "ORBITLANG_BUDGET";

/// `enumerate` refuses to print more items than this without `--force`.
pub const ENUMERATE_LIMIT: u64 = 1_000_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;
pub const EXIT_NOT_IN_LANGUAGE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "orbitlang",
    version,
    about = "Orbits of SL(2,Z) on (Z_p x Z_p)^n, the word language W_p^n, and their counts"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count orbits by closed form, recurrence, words, and/or brute force (JSON).
    Count(CountArgs),
    /// Stream all words or all orbit normal forms.
    Enumerate(EnumerateArgs),
    /// Map a word to its orbit, or a vector pair to its normal form and word.
    Map(MapArgs),
    /// Run every cross-check over ranges of p and n.
    Verify(VerifyArgs),
    /// Dual polar space over GF(2): counts, universal embedding dimension, marking witness.
    Polar(PolarArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Recursive,
    Words,
    Bruteforce,
    All,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(short = 'p', long = "prime", value_parser = parse_prime)]
    pub p: Prime,
    #[arg(short = 'n', long = "length")]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Method::All)]
    pub method: Method,
    /// Maximum number of vectors the brute-force route may visit.
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Words,
    Orbits,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(short = 'p', long = "prime", value_parser = parse_prime)]
    pub p: Prime,
    #[arg(short = 'n', long = "length")]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Kind::Words)]
    pub kind: Kind,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Print even when the output exceeds the size limit.
    #[arg(long)]
    pub force: bool,
    #[arg(long, default_value_t = 1, value_parser = parse_jobs)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    #[arg(short = 'p', long = "prime", value_parser = parse_prime)]
    pub p: Prime,
    /// Word as "a1,a2,..." (compact digits allowed for p <= 3).
    #[arg(long, conflicts_with = "vector", required_unless_present = "vector")]
    pub word: Option<String>,
    /// Vector pair as "u1,...,un|v1,...,vn".
    #[arg(long)]
    pub vector: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated primes, e.g. "2,3,5".
    #[arg(short = 'p', long = "primes", value_parser = parse_prime_list)]
    pub primes: PrimeList,
    /// Lengths as "a..b" (inclusive), "a,b,c", or a single value.
    #[arg(short = 'n', long = "lengths", value_parser = parse_lengths)]
    pub lengths: Lengths,
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    #[arg(long, default_value_t = 1, value_parser = parse_jobs)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct PolarArgs {
    #[arg(short = 'n', long = "n")]
    pub n: usize,
    /// Report point/line counts and the universal embedding dimension (default).
    #[arg(long)]
    pub report: bool,
    /// Search all point subsets of size udim for one whose closure is everything (n <= 2).
    #[arg(long)]
    pub find_closure_witness: bool,
    /// Also report a greedily chosen marking set.
    #[arg(long)]
    pub greedy: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeList(pub Vec<Prime>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lengths(pub Vec<usize>);

fn parse_prime(s: &str) -> Result<Prime, String> {
    let v: u64 = s
        .trim()
        .parse()
        .map_err(|_| format!("{s:?} is not a number"))?;
    Prime::new(v).map_err(|e| e.to_string())
}

fn parse_prime_list(s: &str) -> Result<PrimeList, String> {
    s.split(',')
        .map(parse_prime)
        .collect::<Result<_, _>>()
        .map(PrimeList)
}

fn parse_lengths(s: &str) -> Result<Lengths, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("{t:?} is not a length"))
    };
    if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
        if a > b {
            return Err(format!("empty range {s:?}"));
        }
        return Ok(Lengths((a..=b).collect()));
    }
    s.split(',').map(num).collect::<Result<_, _>>().map(Lengths)
}

fn parse_jobs(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) | Err(_) => Err(format!("{s:?} is not a positive worker count")),
        Ok(j) => Ok(j),
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Invariant(String),
    NotInLanguage(String),
    Io(io::Error),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Io(_) => EXIT_USAGE,
            Failure::Invariant(_) => EXIT_INVARIANT,
            Failure::NotInLanguage(_) => EXIT_NOT_IN_LANGUAGE,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotInLanguage(_) => Failure::NotInLanguage(e.to_string()),
            Error::InternalInvariantViolation(_) => Failure::Invariant(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Count(a) => cmd_count(a, out),
        Command::Enumerate(a) => cmd_enumerate(a, out),
        Command::Map(a) => cmd_map(a, out),
        Command::Verify(a) => cmd_verify(a, out, err),
        Command::Polar(a) => cmd_polar(a, out),
    };
    let flushed = out.flush();
    match (outcome, flushed) {
        (Ok(code), Ok(())) => code,
        (Err(Failure::Io(e)), _) | (Ok(_), Err(e)) if e.kind() == io::ErrorKind::BrokenPipe => {
            EXIT_OK
        }
        (Ok(_), Err(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        (Err(f), _) => {
            let msg = match &f {
                Failure::Usage(m) | Failure::Invariant(m) | Failure::NotInLanguage(m) => m.clone(),
                Failure::Io(e) => e.to_string(),
            };
            let _ = writeln!(err, "error: {msg}");
            f.code()
        }
    }
}

fn resolve_budget(flag: Option<u64>) -> Result<u64, Failure> {
    let budget = match flag {
        Some(b) => b,
        None => match std::env::var(BUDGET_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("{BUDGET_ENV}={v:?} is not a number")))?,
            Err(_) => DEFAULT_BUDGET,
        },
    };
    if budget == 0 {
        return Err(Failure::Usage("budget must be positive".into()));
    }
    Ok(budget)
}

fn big(x: &BigCount) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("decimal digits form a JSON number"))
}

fn opt_big(x: &Option<BigCount>) -> Value {
    x.as_ref().map_or(Value::Null, big)
}

fn write_json(out: &mut dyn Write, v: &Value) -> io::Result<()> {
    serde_json::to_writer(&mut *out, v)?;
    out.write_all(b"\n")
}

fn cmd_count(a: CountArgs, out: &mut dyn Write) -> Outcome {
    let budget = resolve_budget(a.budget)?;
    let wants = |m: Method| a.method == m || a.method == Method::All;
    let closed = wants(Method::Closed)
        .then(|| r_closed(a.p, a.n))
        .transpose()?;
    let recursive = wants(Method::Recursive).then(|| r_recursive(a.p, a.n));
    let words = wants(Method::Words).then(|| count_words(a.p, a.n));
    let bruteforce = match a.method {
        Method::Bruteforce => Some(count_orbits_bruteforce(a.p, a.n, budget)?),
        Method::All => match count_orbits_bruteforce(a.p, a.n, budget) {
            Ok(v) => Some(v),
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e.into()),
        },
        _ => None,
    };
    let values: Vec<&BigCount> = [&closed, &recursive, &words, &bruteforce]
        .into_iter()
        .flatten()
        .collect();
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    let report = json!({
        "p": a.p.get(),
        "n": a.n,
        "r_closed": opt_big(&closed),
        "r_recursive": opt_big(&recursive),
        "words": opt_big(&words),
        "bruteforce": opt_big(&bruteforce),
        "agree": agree,
    });
    write_json(out, &report)?;
    Ok(if agree { EXIT_OK } else { EXIT_INVARIANT })
}

/// Applies `f` to every item on up to `jobs` scoped threads; results keep input order.
fn sharded<T: Send, R: Send>(items: Vec<T>, jobs: usize, f: impl Fn(T) -> R + Sync) -> Vec<R> {
    if jobs <= 1 || items.len() <= 1 {
        return items.into_iter().map(f).collect();
    }
    let count = items.len();
    let queue = Mutex::new(items.into_iter().enumerate());
    let f = &f;
    let mut slots: Vec<Option<R>> = (0..count).map(|_| None).collect();
    std::thread::scope(|s| {
        let workers: Vec<_> = (0..jobs.min(count))
            .map(|_| {
                s.spawn(|| {
                    let mut done = Vec::new();
                    loop {
                        let next = queue.lock().expect("queue lock").next();
                        let Some((i, item)) = next else { break };
                        done.push((i, f(item)));
                    }
                    done
                })
            })
            .collect();
        for w in workers {
            for (i, r) in w.join().expect("worker panicked") {
                slots[i] = Some(r);
            }
        }
    });
    slots
        .into_iter()
        .map(|r| r.expect("every item processed"))
        .collect()
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

struct Renderer {
    kind: Kind,
    format: Format,
    n: usize,
    index: u64,
}

impl Renderer {
    fn header(&self, out: &mut dyn Write) -> io::Result<()> {
        if self.format != Format::Csv {
            return Ok(());
        }
        let mut cols = vec!["index".to_string()];
        match self.kind {
            Kind::Words => cols.extend((1..=self.n).map(|i| format!("a{i}"))),
            Kind::Orbits => {
                cols.extend((1..=self.n).map(|i| format!("u{i}")));
                cols.extend((1..=self.n).map(|i| format!("v{i}")));
            }
        }
        writeln!(out, "{}", cols.join(","))
    }

    fn word(&mut self, out: &mut dyn Write, w: &Word) -> io::Result<()> {
        let i = self.index;
        self.index += 1;
        match self.format {
            Format::Text => writeln!(out, "{w}"),
            Format::Json => write_json(
                out,
                &json!({"index": i, "word": w.to_string(), "letters": w.letters()}),
            ),
            Format::Csv => writeln!(
                out,
                "{}",
                join(std::iter::once(i).chain(w.letters().iter().map(|&a| u64::from(a))))
            ),
        }
    }

    fn form(&mut self, out: &mut dyn Write, c: &CanonicalForm) -> io::Result<()> {
        let i = self.index;
        self.index += 1;
        let x = c.inner();
        match self.format {
            Format::Text => writeln!(out, "{c}"),
            Format::Json => write_json(
                out,
                &json!({
                    "index": i,
                    "form": c.to_string(),
                    "u": x.u(),
                    "v": x.v(),
                    "lead": c.lead(),
                    "pivot": c.pivot(),
                    "word": vector_to_word(x).to_string(),
                }),
            ),
            Format::Csv => {
                let cells = x.u().iter().chain(x.v()).map(|&r| u64::from(r));
                writeln!(out, "{}", join(std::iter::once(i).chain(cells)))
            }
        }
    }
}

fn cmd_enumerate(a: EnumerateArgs, out: &mut dyn Write) -> Outcome {
    let total = r_closed(a.p, a.n)?;
    if !a.force && total > BigCount::from(ENUMERATE_LIMIT) {
        return Err(Failure::Usage(format!(
            "output would have {total} lines (limit {ENUMERATE_LIMIT}); pass --force"
        )));
    }
    let mut r = Renderer {
        kind: a.kind,
        format: a.format,
        n: a.n,
        index: 0,
    };
    r.header(out)?;
    match (a.kind, a.jobs) {
        (Kind::Words, 1) => {
            for w in enumerate_words(a.p, a.n) {
                r.word(out, &w)?;
            }
        }
        (Kind::Orbits, 1) => {
            for c in enumerate_orbits(a.p, a.n) {
                r.form(out, &c)?;
            }
        }
        (Kind::Words, jobs) => {
            let (p, n) = (a.p, a.n);
            let blocks = sharded(word_leads(n), jobs, |lead| {
                enumerate_words_with_lead(p, n, lead).collect::<Vec<_>>()
            });
            for w in blocks.iter().flatten() {
                r.word(out, w)?;
            }
        }
        (Kind::Orbits, jobs) => {
            let (p, n) = (a.p, a.n);
            let blocks = sharded(orbit_blocks(n), jobs, |b| {
                forms_of_blocks(p, n, vec![b]).collect::<Vec<_>>()
            });
            for c in blocks.iter().flatten() {
                r.form(out, c)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_map(a: MapArgs, out: &mut dyn Write) -> Outcome {
    if let Some(text) = &a.word {
        let w = Word::parse(a.p, text)?;
        let form = word_to_orbit(&w)?;
        writeln!(out, "{form}")?;
    } else if let Some(text) = &a.vector {
        let x = VectorPair::parse(a.p, text)?;
        let form = canonicalize(&x);
        let w = vector_to_word(&x);
        writeln!(out, "{form}")?;
        writeln!(out, "{w}")?;
    }
    Ok(EXIT_OK)
}

fn case_json(r: &CaseReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| json!({"name": c.name, "status": c.status.to_string(), "detail": c.detail}))
        .collect();
    json!({
        "p": r.p.get(),
        "n": r.n,
        "r": opt_big(&r.value),
        "passed": r.passed(),
        "checks": checks,
    })
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let budget = resolve_budget(a.budget)?;
    let cases: Vec<(Prime, usize)> = a
        .primes
        .0
        .iter()
        .flat_map(|&p| a.lengths.0.iter().map(move |&n| (p, n)))
        .collect();
    let reports = sharded(cases, a.jobs, |(p, n)| verify_case(p, n, budget));
    let passed = reports.iter().all(CaseReport::passed);
    match a.format {
        ReportFormat::Json => {
            let cases: Vec<Value> = reports.iter().map(case_json).collect();
            write_json(
                out,
                &json!({"passed": passed, "budget": budget, "cases": cases}),
            )?;
        }
        ReportFormat::Text => {
            for r in &reports {
                let value = r.value.as_ref().map_or("?".to_string(), |v| v.to_string());
                let checks = r
                    .checks
                    .iter()
                    .map(|c| format!("{}={}", c.name, c.status))
                    .collect::<Vec<_>>()
                    .join(" ");
                let verdict = if r.passed() { "PASS" } else { "FAIL" };
                writeln!(out, "{verdict} p={} n={} r={value} {checks}", r.p, r.n)?;
            }
            let skipped = reports
                .iter()
                .flat_map(|r| &r.checks)
                .filter(|c| c.status == Status::Skipped)
                .count();
            writeln!(
                out,
                "{}: {} cases, {skipped} checks skipped (budget {budget})",
                if passed { "PASS" } else { "FAIL" },
                reports.len()
            )?;
        }
    }
    if let Some((r, c)) = reports
        .iter()
        .find_map(|r| r.first_failure().map(|c| (r, c)))
    {
        writeln!(
            err,
            "counterexample at p={} n={} [{}]: {}",
            r.p,
            r.n,
            c.name,
            c.detail.as_deref().unwrap_or("")
        )?;
        return Ok(EXIT_INVARIANT);
    }
    Ok(EXIT_OK)
}

fn cmd_polar(a: PolarArgs, out: &mut dyn Write) -> Outcome {
    if a.find_closure_witness && a.n > 2 {
        return Err(Failure::Usage(
            "closure witness search is exhaustive and limited to n <= 2".into(),
        ));
    }
    let cfg = build_dual_polar_space(a.n)?;
    let udim = universal_embedding_dim(&cfg);
    let witness = a
        .find_closure_witness
        .then(|| find_closure_witness(&cfg, udim))
        .flatten();
    let mut report = Map::new();
    report.insert("points".into(), json!(cfg.points().len()));
    report.insert("lines".into(), json!(cfg.lines().len()));
    report.insert("udim".into(), json!(udim));
    report.insert("witness".into(), json!(witness));
    report.insert("computed_line_count".into(), json!(cfg.lines().len()));
    if a.greedy {
        report.insert("greedy".into(), json!(greedy_closure_set(&cfg)));
    }
    write_json(out, &Value::Object(report))?;
    if a.find_closure_witness && witness.is_none() {
        return Ok(EXIT_INVARIANT);
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("orbitlang").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn parses_lengths() {
        assert_eq!(parse_lengths("1..4").unwrap(), Lengths(vec![1, 2, 3, 4]));
        assert_eq!(parse_lengths("1..=2").unwrap(), Lengths(vec![1, 2]));
        assert_eq!(parse_lengths("0,3").unwrap(), Lengths(vec![0, 3]));
        assert!(parse_lengths("4..1").is_err());
        assert!(parse_lengths("x").is_err());
    }

    #[test]
    fn rejects_composite_primes() {
        let (code, _, err) = run_str(&["verify", "-p", "4", "-n", "1..2"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("4 is not prime"), "{err}");
        let (code, _, _) = run_str(&["count", "-p", "1", "-n", "2"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn count_boundary() {
        let (code, out, _) = run_str(&["count", "-p", "2", "-n", "0"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "{\"p\":2,\"n\":0,\"r_closed\":1,\"r_recursive\":1,\"words\":1,\"bruteforce\":1,\"agree\":true}\n"
        );
    }

    #[test]
    fn count_single_method_and_budget() {
        let (code, out, _) = run_str(&["count", "-p", "7", "-n", "30", "--method", "closed"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!(v["r_recursive"].is_null() && v["bruteforce"].is_null());
        assert_eq!(
            v["r_closed"].to_string(),
            r_closed(Prime::new(7).unwrap(), 30).unwrap().to_string()
        );

        let (code, _, err) = run_str(&[
            "count",
            "-p",
            "3",
            "-n",
            "3",
            "--method",
            "bruteforce",
            "--budget",
            "10",
        ]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("exceeds the budget"));

        let (code, out, _) = run_str(&["count", "-p", "3", "-n", "3", "--budget", "10"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"bruteforce\":null"));
    }

    #[test]
    fn enumerate_limit() {
        let (code, _, err) = run_str(&["enumerate", "-p", "2", "-n", "12"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--force"));
    }

    #[test]
    fn map_errors() {
        assert_eq!(
            run_str(&["map", "-p", "2", "--word", "013"]).0,
            EXIT_NOT_IN_LANGUAGE
        );
        assert_eq!(run_str(&["map", "-p", "2", "--word", "4"]).0, EXIT_USAGE);
        assert_eq!(
            run_str(&["map", "-p", "2", "--vector", "1,0"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_str(&["map", "-p", "2"]).0, EXIT_USAGE);
        assert_eq!(
            run_str(&["map", "-p", "2", "--word", "1", "--vector", "1|0"]).0,
            EXIT_USAGE
        );
    }

    #[test]
    fn polar_limits() {
        assert_eq!(run_str(&["polar", "--n", "4"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["polar", "--n", "0"]).0, EXIT_USAGE);
        assert_eq!(
            run_str(&["polar", "--n", "3", "--find-closure-witness"]).0,
            EXIT_USAGE
        );
    }

    #[test]
    fn sharding_keeps_order() {
        let items: Vec<u32> = (0..100).collect();
        let out = sharded(items.clone(), 7, |x| x * 2);
        assert_eq!(out, items.iter().map(|x| x * 2).collect::<Vec<_>>());
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("enumerate"));
    }
}
