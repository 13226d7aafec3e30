use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use weil_core::algebraic_sets::PowerMap;
use weil_core::field::FieldElement;
use weil_core::survey::write_output;
use weil_core::{
    spectrum_report, survey, verify_all, verify_characters, verify_identities, CheckReport, Error, Field, OutputFormat,
    QQuery, SurveyConfig,
};

#[derive(Parser)]
#[command(name = "weil", version, about = "Weil sums of binomials over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Weil spectrum of x^s over a field, with its Galois action and checks.
    Spectrum {
        /// Field: p, p^n, q, optionally followed by :c0,c1,..,cn for the modulus.
        field: String,
        s: u64,
        #[arg(long)]
        json: bool,
    },
    /// Classify every exponent class for every field up to --q-max.
    Survey {
        #[arg(long)]
        q_max: u32,
        #[arg(long, default_value = "csv")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Also run the identity suites for small fields.
        #[arg(long)]
        lemmas: bool,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Skip prime powers and survey prime fields only.
        #[arg(long)]
        primes_only: bool,
    },
    /// Count v in K^k with t.v = a and v_1^s + .. + v_k^s = b^s.
    Qcount {
        field: String,
        s: u64,
        /// Comma-separated element indices, e.g. 1,4.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        t: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Exact group algebra identities (and character checks) for one pair.
    AlgebraCheck {
        field: String,
        s: u64,
        /// Only report checks whose name contains this string.
        #[arg(long)]
        lemma: Option<String>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Every check for one pair.
    Verify {
        field: String,
        s: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

/// Exit status for invariant failures; usage and validation errors exit with 2.
const CHECK_FAILURE: u8 = 1;
const USAGE_ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE_ERROR } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e @ Error::CheckFailed { .. }) | Err(e @ Error::Inconsistent(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(CHECK_FAILURE)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}

fn verdict(report: &CheckReport) -> ExitCode {
    match report.first_failure() {
        None => ExitCode::SUCCESS,
        Some(f) => {
            eprintln!("check failed: {}", f.name);
            ExitCode::from(CHECK_FAILURE)
        }
    }
}

/// An element index in `[0, q)`; a leading `-` negates.
fn parse_element(field: &Field, text: &str) -> weil_core::Result<FieldElement> {
    let text = text.trim();
    let (neg, digits) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let idx: u64 = digits.parse().map_err(|_| Error::Parse(format!("bad element {text:?}")))?;
    let x = field.element(idx)?;
    Ok(if neg { field.neg(x) } else { x })
}

fn run(command: Command) -> weil_core::Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let io_err = |e: io::Error| {
        // a closed pipe (`weil ... | head`) is not an error
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        Error::Inconsistent(format!("write failed: {e}"))
    };
    match command {
        Command::Spectrum { field, s, json } => {
            let report = spectrum_report(&field, s)?;
            let text = if json { report.to_json() } else { report.to_text() };
            writeln!(out, "{text}").map_err(io_err)?;
            Ok(verdict(&report.checks))
        }
        Command::Survey { q_max, format, out: path, jobs, lemmas, seed, primes_only } => {
            let config = SurveyConfig {
                q_max,
                include_prime_powers: !primes_only,
                lemma_suite: lemmas,
                output_path: path,
                format,
                jobs,
                seed,
                ..Default::default()
            };
            let result = survey(&config)?;
            write_output(&result, &config, &mut out)?;
            out.flush().map_err(io_err)?;
            eprint!("{}", result.summary);
            for row in result.rows.iter().filter(|r| !r.ok()) {
                eprintln!("failing row q={} s={}:\n{}", row.record.q, row.record.s, row.report);
            }
            Ok(if result.summary.consistent() { ExitCode::SUCCESS } else { ExitCode::from(CHECK_FAILURE) })
        }
        Command::Qcount { field, s, t, a, b } => {
            let f = Field::parse(&field)?;
            let t: Vec<FieldElement> = t.iter().map(|x| parse_element(&f, x)).collect::<weil_core::Result<_>>()?;
            let (a, b) = (parse_element(&f, &a)?, parse_element(&f, &b)?);
            let pm = PowerMap::new(&f, s)?;
            let query = QQuery { t: t.clone(), a, b };
            let count = pm.count(&query)?;
            writeln!(out, "Q = {count}").map_err(io_err)?;
            let ok = cross_checks(&f, &pm, &query, count, &mut out).map_err(io_err)?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(CHECK_FAILURE) })
        }
        Command::AlgebraCheck { field, s, lemma, seed } => {
            let f = Field::parse(&field)?;
            let mut report = verify_identities(&f, s, seed)?;
            if f.q() <= 64 {
                report.merge(verify_characters(&f, seed));
            }
            if let Some(needle) = lemma {
                report = report.filtered(&needle);
                if report.outcomes.is_empty() {
                    return Err(Error::Parse(format!("no check matches {needle:?}")));
                }
            }
            write!(out, "{report}").map_err(io_err)?;
            Ok(verdict(&report))
        }
        Command::Verify { field, s, seed } => {
            let report = verify_all(&field, s, seed)?;
            write!(out, "{report}").map_err(io_err)?;
            Ok(verdict(&report))
        }
    }
}

/// Prints the closed forms that apply to this query; returns whether all agree.
fn cross_checks(f: &Field, pm: &PowerMap<'_>, query: &QQuery, count: u64, out: &mut impl Write) -> io::Result<bool> {
    let q = f.q() as u64;
    let k = query.t.len() as u32;
    let (a, b) = (query.a, query.b);
    let zero = f.zero();
    let mut ok = true;
    let mut line = |name: &str, want: u64, out: &mut dyn Write| -> io::Result<()> {
        let verdict = if want == count { "ok" } else { "MISMATCH" };
        ok &= want == count;
        writeln!(out, "  {name}: {want} [{verdict}]")
    };
    if k == 1 {
        line("single coordinate", u64::from(a == f.mul(query.t[0], b)), out)?;
    }
    if k == 2 && (a.is_zero() || b.is_zero()) {
        let same = query.t[0] == query.t[1];
        let want = if a.is_zero() && b.is_zero() { 1 + if same { q - 1 } else { 0 } } else { u64::from(!same) };
        line("two coordinates", want, out)?;
    }
    let q00 = pm.count(&QQuery { t: query.t.clone(), a: zero, b: zero }).expect("validated");
    if a.is_zero() != b.is_zero() {
        let num = q.pow(k - 1) - q00;
        line("zero target", num / (q - 1), out)?;
    }
    if !b.is_zero() && (k as usize) < weil_core::algebraic_sets::MAX_K {
        // one more coordinate with coefficient a/b
        let c = f.div(a, b).expect("b is a unit");
        let mut t2 = vec![c];
        t2.extend_from_slice(&query.t);
        let lifted = pm.count_general(&t2, zero, zero).expect("t has a unit");
        line("lift to k + 1", (lifted - q00) / (q - 1), out)?;
    }
    Ok(ok)
}
