//! Command dispatch and report assembly for the `bitangent` tool.
//!
//! [`run`] takes the full argument vector and returns the exit status and the
//! text destined for stdout and stderr, so the binary and the tests share one
//! code path.

use std::time::Instant;

use bitangent_core::expr::{format_quartic, parse_int_list, parse_quartic};
use bitangent_core::exact_algebra::QuarticForm;
use bitangent_core::projective::{Line, ProjPoint};
use bitangent_core::quadratic_points::{bitangents_through_point, quadratic_points_batch};
use bitangent_core::search::{
    incidence_graph, search_bitangents_with, search_rational_points, smoothness_screen, with_workers,
    BitangentCatalog, HeightBound, SearchConfig, Strategy,
};
use bitangent_core::tangency::{classify_tangency, contact_points, restrict_quartic_to_line, verify_example};
use bitangent_core::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_DOMAIN: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "bitangent", version, about = "Bitangents, rational lines and quadratic points on quartic surfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify how a line meets the surface.
    Classify {
        #[command(flatten)]
        q: QuarticArg,
        /// Two spanning points "a0,a1,a2,a3;b0,b1,b2,b3", or six Plücker
        /// coordinates with --plucker.
        #[arg(long)]
        line: String,
        /// Read --line as Plücker coordinates (p01,p02,p03,p12,p13,p23)
        #[arg(long)]
        plucker: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Rational bitangents and lines on the surface up to a height bound.
    Bitangents {
        #[command(flatten)]
        q: QuarticArg,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Rational points up to a height bound.
    Points {
        #[command(flatten)]
        q: QuarticArg,
        #[arg(long)]
        height: i64,
        #[command(flatten)]
        common: Common,
    },
    /// Quadratic points on the tangent section at a rational point.
    Quadpoints {
        #[command(flatten)]
        q: QuarticArg,
        #[arg(long)]
        point: String,
        /// Pencil parameter "a:b"; repeatable.
        #[arg(long = "param")]
        params: Vec<String>,
        /// Parameters (t:1) for t in an inclusive range "lo..hi".
        #[arg(long = "t-range")]
        t_range: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Branch form and bitangents through a rational point.
    ThroughPoint {
        #[command(flatten)]
        q: QuarticArg,
        #[arg(long)]
        point: String,
        #[command(flatten)]
        common: Common,
    },
    /// Which catalog bitangents meet each other.
    Incidence {
        #[command(flatten)]
        q: QuarticArg,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Symbolic check of the quadritangent family on x^4 - x*y^3 - z^4 + z*w^3.
    VerifyExample {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug)]
pub struct QuarticArg {
    /// Quartic expression, or @PATH to read it from a file.
    #[arg(long)]
    pub quartic: String,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub height: i64,
    /// Sieve modulus (prime ≥ 5); chosen from the height by default.
    #[arg(long, conflicts_with = "exhaustive")]
    pub modulus: Option<u64>,
    /// Classify every line of bounded height instead of sieving.
    #[arg(long)]
    pub exhaustive: bool,
    #[arg(long = "smooth-check-primes", default_value = "2,3,5,7,11")]
    pub smooth_check_primes: String,
}

#[derive(Args, Debug)]
pub struct Common {
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    pub workers: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Omit the timing field.
    #[arg(long = "no-timing")]
    pub no_timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(String),
    Parse(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Res<T> = std::result::Result<T, Failure>;

#[derive(Serialize)]
struct Report {
    schema: u32,
    command: &'static str,
    version: &'static str,
    quartic: Option<String>,
    config: Value,
    results: Value,
    warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing: Option<Value>,
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let out_path = common(&cli.command).out.clone();
    match execute(&cli.command) {
        Ok(text) => match out_path {
            Some(path) => match std::fs::write(&path, &text) {
                Ok(()) => Outcome { code: EXIT_OK, stdout: String::new(), stderr: String::new() },
                Err(e) => fail(EXIT_IO, format!("cannot write {path}: {e}")),
            },
            None => Outcome { code: EXIT_OK, stdout: text, stderr: String::new() },
        },
        Err(Failure::Usage(m)) => fail(EXIT_USAGE, m),
        Err(Failure::Io(m)) => fail(EXIT_IO, m),
        Err(Failure::Parse(m)) => fail(EXIT_PARSE, m),
        Err(Failure::Core(e)) => fail(if e.is_domain() { EXIT_DOMAIN } else { EXIT_PARSE }, e.to_string()),
    }
}

fn fail(code: i32, msg: String) -> Outcome {
    Outcome { code, stdout: String::new(), stderr: format!("error: {msg}\n") }
}

fn common(c: &Command) -> &Common {
    match c {
        Command::Classify { common, .. }
        | Command::Bitangents { common, .. }
        | Command::Points { common, .. }
        | Command::Quadpoints { common, .. }
        | Command::ThroughPoint { common, .. }
        | Command::Incidence { common, .. }
        | Command::VerifyExample { common } => common,
    }
}

/// Reads `--quartic`: inline text or `@path`.
fn quartic(q: &QuarticArg) -> Res<QuarticForm> {
    let text = match q.quartic.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {path}: {e}")))?,
        None => q.quartic.clone(),
    };
    parse_quartic(text.trim()).map_err(|e| match e {
        Error::ZeroForm => Failure::Parse("the quartic is identically zero".into()),
        e => Failure::Core(e),
    })
}

fn point(text: &str) -> Res<ProjPoint> {
    let v = parse_int_list(text, 4)?;
    Ok(ProjPoint::new([v[0], v[1], v[2], v[3]])?)
}

fn line(text: &str, plucker: bool) -> Res<Line> {
    if plucker {
        let v = parse_int_list(text, 6)?;
        return Ok(Line::from_plucker([v[0], v[1], v[2], v[3], v[4], v[5]])?);
    }
    let (a, b) = text
        .split_once(';')
        .ok_or_else(|| Failure::Core(Error::Parse { pos: 0, msg: "expected two points separated by ';'".into() }))?;
    Ok(Line::from_points(point(a)?, point(b)?)?)
}

fn param(text: &str) -> Res<(i64, i64)> {
    let parse = |s: &str| -> Res<i64> {
        s.trim()
            .parse()
            .map_err(|_| Failure::Core(Error::Parse { pos: 0, msg: format!("invalid pencil parameter '{text}'") }))
    };
    match text.split_once(':') {
        Some((a, b)) => Ok((parse(a)?, parse(b)?)),
        None => Ok((parse(text)?, 1)),
    }
}

fn t_range(text: &str) -> Res<Vec<(i64, i64)>> {
    let bad = || Failure::Core(Error::Parse { pos: 0, msg: format!("invalid range '{text}', expected lo..hi") });
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    Ok((lo..=hi).map(|t| (t, 1)).collect())
}

fn primes(text: &str) -> Res<Vec<u64>> {
    text.split(',')
        .map(|s| {
            s.trim().parse::<u64>().map_err(|_| Failure::Core(Error::Parse { pos: 0, msg: format!("invalid prime '{s}'") }))
        })
        .collect()
}

fn workers(c: &Common) -> usize {
    c.workers.unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)).max(1)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serialisable")
}

fn execute(cmd: &Command) -> Res<String> {
    let start = Instant::now();
    let c = common(cmd);
    let nworkers = workers(c);
    let csv_ok = matches!(cmd, Command::Bitangents { .. } | Command::Points { .. });
    if c.format == Format::Csv && !csv_ok {
        return Err(Failure::Usage("--format csv is only available for bitangents and points".into()));
    }
    let mut warnings = Vec::new();
    let mut csv_rows: Option<String> = None;
    let (name, f, config, results): (&'static str, Option<QuarticForm>, Value, Value) = match cmd {
        Command::Classify { q, line: text, plucker, .. } => {
            let f = quartic(q)?;
            let l = line(text, *plucker)?;
            let t = classify_tangency(&f, &l);
            let contacts = if t.kind.is_bitangent() { contact_points(&f, &l).ok() } else { None };
            let res = json!({
                "line": to_value(&l),
                "restriction": to_value(&restrict_quartic_to_line(&f, &l)),
                "kind": t.kind.name(),
                "partition": t.partition(),
                "witness": to_value(&t.witness),
                "contacts": to_value(&contacts),
            });
            ("classify", Some(f), json!({ "workers": nworkers }), res)
        }
        Command::Bitangents { q, search, .. } | Command::Incidence { q, search, .. } => {
            let f = quartic(q)?;
            let (cat, screen_primes) = bitangent_search(&f, search, nworkers, &mut warnings)?;
            let config = json!({
                "height": search.height,
                "strategy": cat.method,
                "smooth_check_primes": screen_primes,
                "workers": nworkers,
            });
            if let Command::Incidence { .. } = cmd {
                let g = incidence_graph(&cat);
                ("incidence", Some(f), config, to_value(&g))
            } else {
                if c.format == Format::Csv {
                    csv_rows = Some(catalog_csv(&cat).map_err(|e| Failure::Io(e.to_string()))?);
                }
                let res = json!({
                    "bitangent_count": cat.bitangent_count(),
                    "contained_count": cat.contained_lines.len(),
                    "counts": to_value(&cat.counts),
                    "finiteness_note": "counts are for this height bound only; stabilisation across bounds is evidence, not proof, of finiteness",
                    "bitangents": to_value(&cat.bitangents),
                    "contained_lines": to_value(&cat.contained_lines),
                });
                ("bitangents", Some(f), config, res)
            }
        }
        Command::Points { q, height, .. } => {
            let f = quartic(q)?;
            let h = HeightBound::new(*height)?;
            let pts = with_workers(Some(nworkers), || search_rational_points(&f, h))?;
            if c.format == Format::Csv {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["x", "y", "z", "w"]).map_err(|e| Failure::Io(e.to_string()))?;
                for p in &pts {
                    w.write_record(p.coords().map(|v| v.to_string())).map_err(|e| Failure::Io(e.to_string()))?;
                }
                csv_rows = Some(String::from_utf8(w.into_inner().map_err(|e| Failure::Io(e.to_string()))?).unwrap());
            }
            let res = json!({ "count": pts.len(), "points": to_value(&pts) });
            ("points", Some(f), json!({ "height": height, "workers": nworkers }), res)
        }
        Command::Quadpoints { q, point: pt, params, t_range: tr, .. } => {
            let f = quartic(q)?;
            let p = point(pt)?;
            let mut ps = params.iter().map(|s| param(s)).collect::<Res<Vec<_>>>()?;
            if let Some(r) = tr {
                ps.extend(t_range(r)?);
            }
            if ps.is_empty() {
                return Err(Failure::Usage("give at least one --param or a --t-range".into()));
            }
            let batch = with_workers(Some(nworkers), || quadratic_points_batch(&f, &p, &ps))?;
            for it in &batch.items {
                if let Err(e) = &it.outcome {
                    warnings.push(format!("parameter ({}:{}) skipped: {e}", it.param.0, it.param.1));
                }
            }
            let params_text: Vec<String> = ps.iter().map(|(a, b)| format!("{a}:{b}")).collect();
            let config = json!({ "point": p.coords(), "params": params_text, "workers": nworkers });
            ("quadpoints", Some(f), config, to_value(&batch))
        }
        Command::ThroughPoint { q, point: pt, .. } => {
            let f = quartic(q)?;
            let p = point(pt)?;
            let rep = bitangents_through_point(&f, &p)?;
            if !rep.branch.generic {
                warnings.push(format!("branch form has degree {}, not 6: non-generic section", rep.branch.degree));
            }
            ("through-point", Some(f), json!({ "point": p.coords(), "workers": nworkers }), to_value(&rep))
        }
        Command::VerifyExample { .. } => {
            let rep = verify_example();
            let f = bitangent_core::tangency::example_quartic();
            ("verify-example", Some(f), json!({ "workers": nworkers }), to_value(&rep))
        }
    };
    if let Some(text) = csv_rows {
        return Ok(text);
    }
    let report = Report {
        schema: SCHEMA,
        command: name,
        version: env!("CARGO_PKG_VERSION"),
        quartic: f.as_ref().map(format_quartic),
        config,
        results,
        warnings,
        timing: (!c.no_timing).then(|| json!({ "elapsed_ms": start.elapsed().as_secs_f64() * 1e3 })),
    };
    let mut s = serde_json::to_string_pretty(&report).expect("serialisable");
    s.push('\n');
    Ok(s)
}

fn bitangent_search(
    f: &QuarticForm,
    search: &SearchArgs,
    nworkers: usize,
    warnings: &mut Vec<String>,
) -> Res<(BitangentCatalog, Vec<u64>)> {
    let h = HeightBound::new(search.height)?;
    let strategy = match (search.exhaustive, search.modulus) {
        (true, _) => Strategy::Exhaustive,
        (false, Some(p)) => Strategy::Modulus(p),
        (false, None) => Strategy::Auto,
    };
    let screen_primes = primes(&search.smooth_check_primes)?;
    let screen = smoothness_screen(f, &screen_primes);
    if !screen.passed {
        warnings.push(format!(
            "smoothness screen inconclusive: every reduction modulo {:?} vanishes or has an F_p-rational singular point",
            screen_primes
        ));
    }
    let cfg = SearchConfig { strategy, workers: Some(nworkers) };
    let cat = search_bitangents_with(f, h, &cfg).map_err(|e| match e {
        Error::Parse { msg, .. } => Failure::Usage(msg),
        e => Failure::Core(e),
    })?;
    Ok((cat, screen_primes))
}

/// Flat catalog: bitangents and contained lines, sorted by Plücker vector.
pub fn catalog_csv(cat: &BitangentCatalog) -> csv::Result<String> {
    let mut rows: Vec<([i64; 6], &str, usize, bool)> = cat
        .bitangents
        .iter()
        .map(|e| (e.line.plucker(), e.tangency.kind.name(), e.contacts.len(), false))
        .chain(cat.contained_lines.iter().map(|l| (l.plucker(), "Contained", 0, true)))
        .collect();
    rows.sort();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["p01", "p02", "p03", "p12", "p13", "p23", "kind", "contact_count", "contained"])?;
    for (p, kind, n, contained) in rows {
        let mut rec: Vec<String> = p.iter().map(|v| v.to_string()).collect();
        rec.extend([kind.to_string(), n.to_string(), contained.to_string()]);
        w.write_record(&rec)?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("utf-8"))
}
