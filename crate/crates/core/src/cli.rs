//! Command-line front end.
//!
//! [`run`] takes the full argument vector and returns the exit code with
//! the captured stdout and stderr, so the binary is a thin wrapper and the
//! commands are testable in-process.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 mathematical
//! precondition violated, 3 theorem check failed.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::chain::SturmChain;
use crate::error::Error;
use crate::expr::{parse_poly, parse_rational, ParseError};
use crate::matrix::SturmMatrix;
use crate::poly::{Polynomial, Rational};
use crate::roots::{self, InertiaCounter, Interval};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "sturm", version, about = "Exact real root counting by Sturm chains and Sturm-matrix inertia")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Corrupt the inertia computation (test hook for the cross-checks).
    #[arg(long, hide = true, global = true)]
    inject_fault: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Sturm chain f_0..f_m and the quotients d_1..d_m.
    Chain {
        #[arg(allow_hyphen_values = true)]
        f: String,
        /// Second polynomial of the pair; defaults to f'.
        #[arg(long, allow_hyphen_values = true)]
        g: Option<String>,
    },
    /// Print the Sturm matrix diagonal and its trailing minors D_1..D_m.
    Matrix {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: Option<String>,
    },
    /// Count distinct real roots in (from, to].
    Count {
        #[arg(allow_hyphen_values = true)]
        f: String,
        /// Lower endpoint (excluded); defaults to minus the Cauchy bound.
        #[arg(long, allow_hyphen_values = true)]
        from: Option<String>,
        /// Upper endpoint (included); defaults to the Cauchy bound.
        #[arg(long, allow_hyphen_values = true)]
        to: Option<String>,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Print one half-open interval per distinct real root.
    Isolate {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Randomized self-check of q(S(a)) = V(a) and D_i = f~_{m-i}.
    Verify {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: Option<String>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Variation,
    Inertia,
    Both,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Variation => "variation",
            Method::Inertia => "inertia",
            Method::Both => "both",
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    tag: &'static str,
    message: String,
}

impl Failure {
    fn parse(what: &str, e: ParseError) -> Self {
        Self {
            code: EXIT_USAGE,
            tag: "parse",
            message: format!("{what}: {e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let tag = match e {
            Error::MultipleRootEndpoint(_) => "multiple-root-endpoint",
            Error::EmptyInterval { .. } => "empty-interval",
            Error::ConstantPolynomial => "constant-polynomial",
            Error::ZeroPolynomial => "zero-polynomial",
            _ => "internal",
        };
        Self {
            code: EXIT_PRECONDITION,
            tag,
            message: e.to_string(),
        }
    }
}

/// What a command produced before any theorem-check verdict.
struct Done {
    text: String,
    doc: Value,
    failed_check: bool,
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Output {
                    code: EXIT_OK,
                    stdout: e.render().to_string(),
                    stderr: String::new(),
                },
                _ => {
                    let rendered = e.render().to_string();
                    let first = rendered
                        .lines()
                        .next()
                        .unwrap_or("invalid arguments")
                        .trim_start_matches("error: ");
                    Output {
                        code: EXIT_USAGE,
                        stdout: String::new(),
                        stderr: format!("error[usage]: {first}\n"),
                    }
                }
            };
        }
    };

    let result = match &cli.command {
        Command::Chain { f, g } => cmd_chain(f, g.as_deref()),
        Command::Matrix { f, g } => cmd_matrix(f, g.as_deref(), cli.inject_fault),
        Command::Count { f, from, to, method } => {
            cmd_count(f, from.as_deref(), to.as_deref(), *method, cli.inject_fault)
        }
        Command::Isolate { f } => cmd_isolate(f),
        Command::Verify { f, g, samples, seed } => {
            cmd_verify(f, g.as_deref(), *samples, *seed, cli.inject_fault)
        }
    };

    match result {
        Ok(done) => {
            let stdout = match cli.format {
                Format::Text => done.text,
                Format::Structured => {
                    let mut s = serde_json::to_string_pretty(&done.doc).expect("json");
                    s.push('\n');
                    s
                }
            };
            Output {
                code: if done.failed_check { EXIT_DISAGREEMENT } else { EXIT_OK },
                stdout,
                stderr: String::new(),
            }
        }
        Err(f) => Output {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error[{}]: {}\n", f.tag, f.message.replace('\n', " ")),
        },
    }
}

fn poly_arg(what: &str, text: &str) -> Result<Polynomial, Failure> {
    parse_poly(text).map_err(|e| Failure::parse(what, e))
}

fn rational_arg(what: &str, text: &str) -> Result<Rational, Failure> {
    parse_rational(text).map_err(|e| Failure::parse(what, e))
}

fn pair(f: &str, g: Option<&str>) -> Result<(Polynomial, Polynomial), Failure> {
    let f = poly_arg("f", f)?;
    let g = match g {
        Some(g) => poly_arg("g", g)?,
        None => f.derivative(),
    };
    Ok((f, g))
}

fn polys_json(ps: &[Polynomial]) -> Value {
    Value::Array(ps.iter().map(|p| Value::String(p.to_string())).collect())
}

fn rat(r: &Rational) -> Value {
    Value::String(r.to_string())
}

/// Adds one to the last diagonal entry.
fn corrupt(matrix: &SturmMatrix) -> SturmMatrix {
    let mut diag = matrix.diagonal().to_vec();
    let last = diag.last_mut().expect("m >= 1");
    *last = &*last + &Polynomial::one();
    SturmMatrix::from_diagonal(diag)
}

fn cmd_chain(f: &str, g: Option<&str>) -> Result<Done, Failure> {
    let (f, g) = pair(f, g)?;
    let chain = SturmChain::new(&f, &g)?;
    let mut text = String::new();
    for (i, p) in chain.polys().iter().enumerate() {
        writeln!(text, "f{i} = {p}").unwrap();
    }
    for (i, d) in chain.quotients().iter().enumerate() {
        writeln!(text, "d{} = {d}", i + 1).unwrap();
    }
    let doc = json!({
        "command": "chain",
        "inputs": { "f": f.to_string(), "g": g.to_string() },
        "results": {
            "m": chain.m(),
            "chain": polys_json(chain.polys()),
            "quotients": polys_json(chain.quotients()),
        },
    });
    Ok(Done {
        text,
        doc,
        failed_check: false,
    })
}

fn cmd_matrix(f: &str, g: Option<&str>, fault: bool) -> Result<Done, Failure> {
    let (f, g) = pair(f, g)?;
    let chain = SturmChain::new(&f, &g)?;
    let mut matrix = SturmMatrix::from_chain(&chain);
    if fault {
        matrix = corrupt(&matrix);
    }
    let minors = matrix.trailing_minors();
    let mut text = String::new();
    writeln!(text, "m = {}", matrix.m()).unwrap();
    for (i, d) in matrix.diagonal().iter().enumerate() {
        writeln!(text, "S[{0},{0}] = {d}", i + 1).unwrap();
    }
    for (i, d) in minors.iter().enumerate() {
        writeln!(text, "D{} = {d}", i + 1).unwrap();
    }
    let doc = json!({
        "command": "matrix",
        "inputs": { "f": f.to_string(), "g": g.to_string() },
        "results": {
            "m": matrix.m(),
            "diagonal": polys_json(matrix.diagonal()),
            "off_diagonal": "1",
            "trailing_minors": polys_json(&minors),
        },
    });
    Ok(Done {
        text,
        doc,
        failed_check: false,
    })
}

fn cmd_count(
    f: &str,
    from: Option<&str>,
    to: Option<&str>,
    method: Method,
    fault: bool,
) -> Result<Done, Failure> {
    let f = poly_arg("f", f)?;
    let bound = f.cauchy_bound()?;
    let a = match from {
        Some(t) => rational_arg("--from", t)?,
        None => -bound.clone(),
    };
    let b = match to {
        Some(t) => rational_arg("--to", t)?,
        None => bound,
    };
    let iv = Interval::new(a, b)?;
    let inputs = json!({
        "f": f.to_string(),
        "from": rat(iv.lo()),
        "to": rat(iv.hi()),
        "method": method.name(),
    });

    let variation = match method {
        Method::Inertia => None,
        Method::Variation => Some(roots::count_roots_variation(&f, iv.lo(), iv.hi())?),
        Method::Both => match roots::count_roots_variation(&f, iv.lo(), iv.hi()) {
            Ok(v) => Some(v),
            Err(Error::MultipleRootEndpoint(_)) => None,
            Err(e) => return Err(e.into()),
        },
    };
    let inertia = match method {
        Method::Variation => None,
        _ => {
            let counter = InertiaCounter::canonical(&f)?;
            let mut qa = counter.q_at(iv.lo());
            let qb = counter.q_at(iv.hi());
            if fault {
                qa += 1;
            }
            Some((qa, qb))
        }
    };
    let count_inertia = inertia.map(|(qa, qb)| qa as i64 - qb as i64);
    let agreement = match (method, variation, count_inertia) {
        (Method::Both, Some(v), Some(c)) => Some(v as i64 == c),
        _ => None,
    };

    let mut text = String::new();
    if method != Method::Inertia {
        match variation {
            Some(v) => writeln!(text, "variation: {v}").unwrap(),
            None => writeln!(text, "variation: n/a (endpoint is a multiple root)").unwrap(),
        }
    }
    if let (Some(c), Some((qa, qb))) = (count_inertia, inertia) {
        writeln!(text, "inertia: {c} (q(a) = {qa}, q(b) = {qb})").unwrap();
    }
    if method == Method::Both {
        match agreement {
            Some(ok) => writeln!(text, "agreement: {ok}").unwrap(),
            None => writeln!(text, "agreement: n/a").unwrap(),
        }
    }

    let doc = json!({
        "command": "count",
        "inputs": inputs,
        "results": {
            "count_variation": variation,
            "count_inertia": count_inertia,
            "qa": inertia.map(|(qa, _)| qa),
            "qb": inertia.map(|(_, qb)| qb),
            "agreement": agreement,
        },
    });
    Ok(Done {
        text,
        doc,
        failed_check: agreement == Some(false) || count_inertia.is_some_and(|c| c < 0),
    })
}

fn cmd_isolate(f: &str) -> Result<Done, Failure> {
    let f = poly_arg("f", f)?;
    let intervals = roots::isolate_roots(&f)?;
    let mut text = String::new();
    for iv in &intervals {
        writeln!(text, "{iv}").unwrap();
    }
    let doc = json!({
        "command": "isolate",
        "inputs": { "f": f.to_string() },
        "results": {
            "count": intervals.len(),
            "intervals": intervals
                .iter()
                .map(|iv| json!({ "lo": rat(iv.lo()), "hi": rat(iv.hi()) }))
                .collect::<Vec<_>>(),
        },
    });
    Ok(Done {
        text,
        doc,
        failed_check: false,
    })
}

/// Random rational with a small denominator, in roughly `[-10, 10]`.
fn random_point(rng: &mut ChaCha8Rng) -> Rational {
    let den: i64 = rng.random_range(1..=24);
    let num: i64 = rng.random_range(-10 * den..=10 * den);
    crate::poly::ratio(num, den)
}

fn cmd_verify(
    f: &str,
    g: Option<&str>,
    samples: usize,
    seed: u64,
    fault: bool,
) -> Result<Done, Failure> {
    let (f, g) = pair(f, g)?;
    let chain = SturmChain::new(&f, &g)?;
    let mut matrix = SturmMatrix::from_chain(&chain);
    if fault {
        matrix = corrupt(&matrix);
    }
    let refined = chain.refine()?;
    let counter = InertiaCounter::from_parts(chain.clone(), matrix);

    // D_i = f~_{m-i} for every i, hence D_m = f~_0 = det S
    let m = chain.m();
    let minors = counter.minors();
    let bad_minors: Vec<usize> = (1..=m)
        .filter(|&i| minors[i - 1] != refined.polys()[m - i])
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0usize;
    let mut skipped = 0usize;
    let mut mismatches = Vec::new();
    for _ in 0..samples {
        let a = random_point(&mut rng);
        if chain.is_common_root(&a) {
            skipped += 1;
            continue;
        }
        checked += 1;
        let (q, v) = (counter.q_oracle(&a), chain.variation_at(&a));
        if q != v {
            mismatches.push((a, q, v));
        }
    }

    let minor_ok = bad_minors.is_empty();
    let q_ok = mismatches.is_empty();
    let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" };
    let mut text = String::new();
    writeln!(text, "{} minor-identity (D_i = f~_(m-i), i = 1..{m})", verdict(minor_ok)).unwrap();
    for i in &bad_minors {
        writeln!(text, "  D{i} = {} but f~{} = {}", minors[i - 1], m - i, refined.polys()[m - i]).unwrap();
    }
    writeln!(
        text,
        "{} inertia-equals-variation ({} points checked, {} common roots skipped)",
        verdict(q_ok),
        checked,
        skipped
    )
    .unwrap();
    for (a, q, v) in mismatches.iter().take(10) {
        writeln!(text, "  at {a}: q = {q}, V = {v}").unwrap();
    }

    let doc = json!({
        "command": "verify",
        "inputs": {
            "f": f.to_string(),
            "g": g.to_string(),
            "samples": samples,
            "seed": seed,
        },
        "results": {
            "minor_identity": { "pass": minor_ok, "failing_indices": bad_minors },
            "inertia_equals_variation": {
                "pass": q_ok,
                "checked": checked,
                "skipped_common_roots": skipped,
                "mismatches": mismatches
                    .iter()
                    .map(|(a, q, v)| json!({ "point": rat(a), "q": q, "v": v }))
                    .collect::<Vec<_>>(),
            },
        },
    });
    Ok(Done {
        text,
        doc,
        failed_check: !(minor_ok && q_ok),
    })
}
