//! The `lrx` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 resource-limit refusal.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::bfs::{
    bfs_all_distances, pair_distance, PairMethod, SearchLimits, DEFAULT_MEMORY_BUDGET,
};
use crate::error::{Error, Result};
use crate::formulas;
use crate::perm::{factorial, rank, unrank, DihedralElement, Generator, Permutation};
use crate::verifier::{self, write_report, ReportFormat, Scope, VerificationReport, VerifyOptions};
use crate::words::{lemma_word, theorem_word, GenWord, LemmaVariant};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

const MIN_MEMORY_BUDGET: u64 = 64 << 20;

#[derive(Debug, Parser)]
#[command(
    name = "lrx",
    version,
    about = "Words, closed forms and exact distances in the Cayley graph of S_n generated by X=(12), L and R"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: CliConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CliConfig {
    /// Memory budget for searches, in bytes; accepts K/M/G suffixes (binary).
    #[arg(long, global = true, env = "LRX_MEMORY_BUDGET", value_parser = parse_budget)]
    pub memory_budget: Option<u64>,
    /// Worker threads; defaults to one per core.
    #[arg(long, global = true, env = "LRX_THREADS", value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Bfs,
    Bidir,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact diameter by breadth-first search from the identity.
    Diameter {
        #[arg(long)]
        n: usize,
    },
    /// Exact distance between two permutations.
    Distance {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long, value_enum, default_value_t = Method::Bidir)]
        method: Method,
    },
    /// A word taking the element to the identity.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(
            long,
            conflicts_with = "theorem_i",
            required_unless_present = "theorem_i",
            allow_hyphen_values = true
        )]
        element: Option<String>,
        /// Decompose s*r^(n-i).
        #[arg(long)]
        theorem_i: Option<usize>,
    },
    /// Cross-check builders and closed forms, optionally against the BFS oracle.
    Verify {
        #[arg(value_enum)]
        scope: VerifyScope,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        oracle: bool,
        /// Also fail when an oracle distance differs from the closed form.
        #[arg(long)]
        strict: bool,
    },
    /// Lexicographic rank of a permutation.
    Rank {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
    },
    /// Permutation with the given lexicographic rank.
    Unrank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        index: u64,
    },
    /// Evaluate a closed form.
    Formula {
        #[command(subcommand)]
        which: FormulaCommand,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyScope {
    Lemma,
    Theorem,
    Decompositions,
    Bound,
}

impl From<VerifyScope> for Scope {
    fn from(s: VerifyScope) -> Scope {
        match s {
            VerifyScope::Lemma => Scope::Lemma,
            VerifyScope::Theorem => Scope::Theorem,
            VerifyScope::Decompositions => Scope::Decompositions,
            VerifyScope::Bound => Scope::Bound,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum FormulaCommand {
    /// j(j-1)-1
    Lemma {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        j: u64,
    },
    /// Distance bound for s*r^(n-i).
    Theorem {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        i: u64,
    },
    /// n(n-1)/2
    Bound {
        #[arg(long)]
        n: u64,
    },
}

fn parse_budget(text: &str) -> std::result::Result<u64, String> {
    let t = text.trim();
    let (digits, shift) = match t.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
        None => (t, 0),
        Some((at, _)) => {
            let shift = match t[at..].to_ascii_uppercase().as_str() {
                "K" | "KB" | "KIB" => 10,
                "M" | "MB" | "MIB" => 20,
                "G" | "GB" | "GIB" => 30,
                "T" | "TB" | "TIB" => 40,
                other => return Err(format!("unknown size suffix {other:?}")),
            };
            (&t[..at], shift)
        }
    };
    let value: u64 = digits.parse().map_err(|_| format!("bad size {text:?}"))?;
    let bytes = value
        .checked_mul(1u64 << shift)
        .ok_or_else(|| format!("size {text:?} overflows"))?;
    if bytes < MIN_MEMORY_BUDGET {
        return Err(format!(
            "memory budget must be at least 64 MiB, got {bytes} bytes"
        ));
    }
    Ok(bytes)
}

/// What a subcommand produced: fields in CSV column order (JSON keys come
/// out sorted), plus the human-readable text.
struct Record {
    fields: Vec<(&'static str, Value)>,
    text: String,
}

impl Record {
    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.text.clone(),
            OutputFormat::Json => {
                let map: Map<String, Value> = self
                    .fields
                    .iter()
                    .map(|(k, v)| (k.to_string(), v.clone()))
                    .collect();
                let mut s = serde_json::to_string_pretty(&Value::Object(map)).expect("serializes");
                s.push('\n');
                s
            }
            OutputFormat::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                let cell = |v: &Value| match v {
                    Value::String(s) => s.clone(),
                    Value::Null => String::new(),
                    other => other.to_string(),
                };
                w.write_record(self.fields.iter().map(|(k, _)| *k))
                    .expect("in-memory");
                w.write_record(self.fields.iter().map(|(_, v)| cell(v)))
                    .expect("in-memory");
                String::from_utf8(w.into_inner().expect("in-memory")).expect("utf-8")
            }
        }
    }
}

enum Outcome {
    Record(Record),
    Report {
        report: VerificationReport,
        ok: bool,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::ResourceLimit { .. } => EXIT_RESOURCE,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<i32> {
    let config = &cli.config;
    let limits = SearchLimits::with_budget(config.memory_budget.unwrap_or(DEFAULT_MEMORY_BUDGET));
    let outcome = match config.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build()
            .map_err(|e| Error::OutOfRange(format!("thread pool: {e}")))?
            .install(|| dispatch(&cli.command, &limits)),
        None => dispatch(&cli.command, &limits),
    }?;

    let io = |path: PathBuf| move |source| Error::Io { path, source };
    let stdout_path = || PathBuf::from("<stdout>");
    match outcome {
        Outcome::Record(record) => {
            let text = record.render(config.format);
            match &config.output {
                Some(path) => std::fs::write(path, text).map_err(io(path.clone()))?,
                None => stdout
                    .write_all(text.as_bytes())
                    .map_err(io(stdout_path()))?,
            }
            Ok(EXIT_OK)
        }
        Outcome::Report { report, ok } => {
            match (&config.output, config.format) {
                (Some(path), OutputFormat::Json) => {
                    write_report(&report, ReportFormat::Json, path)?
                }
                (Some(path), OutputFormat::Csv) => write_report(&report, ReportFormat::Csv, path)?,
                (Some(path), OutputFormat::Text) => {
                    std::fs::write(path, report.to_text()).map_err(io(path.clone()))?
                }
                (None, format) => {
                    let text = match format {
                        OutputFormat::Json => report.to_json(),
                        OutputFormat::Csv => report.to_csv(),
                        OutputFormat::Text => report.to_text(),
                    };
                    stdout
                        .write_all(text.as_bytes())
                        .map_err(io(stdout_path()))?;
                }
            }
            Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
    }
}

fn dispatch(command: &Command, limits: &SearchLimits) -> Result<Outcome> {
    let record = match command {
        Command::Diameter { n } => diameter(*n, limits)?,
        Command::Distance {
            n,
            from,
            to,
            method,
        } => {
            let a = Permutation::parse(from, *n)?;
            let b = Permutation::parse(to, *n)?;
            let method = match method {
                Method::Bfs => PairMethod::FullBfs,
                Method::Bidir => PairMethod::Bidirectional,
            };
            let d = pair_distance(&a, &b, method, limits)?;
            Record {
                fields: vec![
                    ("n", json!(n)),
                    ("from", json!(a.to_string())),
                    ("to", json!(b.to_string())),
                    ("distance", json!(d)),
                ],
                text: format!("{d}\n"),
            }
        }
        Command::Decompose {
            n,
            element,
            theorem_i,
        } => {
            let (element, word, method) = match (element, theorem_i) {
                (_, Some(i)) => {
                    let (word, _) = theorem_word(*n, *i)?;
                    let start = Permutation::full_reversal(*n)?.rotate((*n as i64) - (*i as i64));
                    (start, word, "two-phase")
                }
                (Some(text), None) => {
                    let pi = Permutation::parse(text, *n)?;
                    let (word, method) = decompose(&pi, limits)?;
                    (pi, word, method)
                }
                (None, None) => unreachable!("clap requires one of the two"),
            };
            let valid = word.apply(&element)?.is_identity();
            if !valid {
                return Err(Error::Validation(format!("word does not sort {element:?}")));
            }
            Record {
                fields: vec![
                    ("n", json!(n)),
                    ("element", json!(element.to_string())),
                    ("method", json!(method)),
                    ("word", json!(word.to_string())),
                    ("length", json!(word.len())),
                ],
                text: format!("{word}\nlength {}\n", word.len()),
            }
        }
        Command::Verify {
            scope,
            n_max,
            oracle,
            strict,
        } => {
            let options = VerifyOptions {
                with_oracle: *oracle,
                limits: *limits,
                ..VerifyOptions::default()
            };
            let report = verifier::verify((*scope).into(), *n_max, &options)?;
            let ok = report.passed() && !(*strict && report.summary.discrepancies > 0);
            return Ok(Outcome::Report { report, ok });
        }
        Command::Rank { n, perm } => {
            let pi = Permutation::parse(perm, *n)?;
            let r = rank(&pi)?;
            Record {
                fields: vec![
                    ("n", json!(n)),
                    ("perm", json!(pi.to_string())),
                    ("rank", json!(r)),
                ],
                text: format!("{r}\n"),
            }
        }
        Command::Unrank { n, index } => {
            let pi = unrank(*n, *index)?;
            Record {
                fields: vec![
                    ("n", json!(n)),
                    ("index", json!(index)),
                    ("perm", json!(pi.to_string())),
                ],
                text: format!("{pi}\n"),
            }
        }
        Command::Formula { which } => formula(which)?,
    };
    Ok(Outcome::Record(record))
}

fn diameter(n: usize, limits: &SearchLimits) -> Result<Record> {
    let table = bfs_all_distances(&Permutation::identity(n)?, limits)?;
    let witness = unrank(n, table.witnesses()[0])?;
    let histogram = table.histogram();
    let mut text = format!("{}\n", table.max_distance());
    text.push_str(&format!("witness {witness}\n"));
    text.push_str(&format!(
        "farthest {} of {}\n",
        table.witnesses().len(),
        factorial(n).unwrap_or(0)
    ));
    Ok(Record {
        fields: vec![
            ("n", json!(n)),
            ("diameter", json!(table.max_distance())),
            ("witness", json!(witness.to_string())),
            ("farthest", json!(table.witnesses().len())),
            ("histogram", json!(histogram)),
        ],
        text,
    })
}

/// Rotations sort with a shift run, reflections with the two-phase word,
/// anything else with a BFS geodesic.
fn decompose(pi: &Permutation, limits: &SearchLimits) -> Result<(GenWord, &'static str)> {
    let n = pi.degree();
    if let Some(d) = DihedralElement::from_permutation(pi) {
        if !d.reflect() {
            let k = d.shift();
            let tokens = if k <= n - k {
                vec![Generator::Right; k]
            } else {
                vec![Generator::Left; n - k]
            };
            return Ok((GenWord::new(n, tokens)?, "shift"));
        }
        if n >= 4 {
            let i = match d.shift() {
                0 => n,
                k => n - k,
            };
            return Ok((theorem_word(n, i)?.0, "two-phase"));
        }
    }
    let table = bfs_all_distances(&Permutation::identity(n)?, limits)?;
    Ok((table.geodesic(&pi.inverse())?, "geodesic"))
}

fn formula(which: &FormulaCommand) -> Result<Record> {
    Ok(match *which {
        FormulaCommand::Lemma { n, j } => {
            let v = formulas::lemma_value(n, j)?;
            if n <= crate::words::MAX_BUILDER_DEGREE as u64 {
                // the builder must agree wherever it runs
                lemma_word(n as usize, j as usize, LemmaVariant::I)?;
            }
            Record {
                fields: vec![("n", json!(n)), ("j", json!(j)), ("value", json!(v))],
                text: format!("{v}\n"),
            }
        }
        FormulaCommand::Theorem { n, i } => {
            let case = formulas::theorem_value(n, i)?;
            Record {
                fields: vec![
                    ("n", json!(n)),
                    ("i", json!(i)),
                    ("case", json!(case.case_tag)),
                    ("value", json!(case.value)),
                ],
                text: format!("{}\n", case.value),
            }
        }
        FormulaCommand::Bound { n } => {
            let v = formulas::lower_bound(n)?;
            Record {
                fields: vec![("n", json!(n)), ("value", json!(v))],
                text: format!("{v}\n"),
            }
        }
    })
}
