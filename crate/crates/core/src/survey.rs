//! Batch classification of every exponent class over every field up to a bound.

use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebraic_sets::verify_q_lemmas;
use crate::characters::verify_characters;
use crate::checks::CheckReport;
use crate::error::{Error, Result};
use crate::field::{is_prime, prime_power, Field};
use crate::group_algebra::verify_identities;
use crate::spectrum::{
    check_spectrum, classification_record, exponent_classes, spectrum, tau_action, ClassificationRecord,
    SpectrumCheckOptions,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Parse(format!("unknown format {other:?} (expected csv or json)"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SurveyConfig {
    pub q_max: u32,
    pub include_prime_powers: bool,
    /// Also run the point-count, group-algebra and character suites for
    /// fields with `q <= lemma_q_max`.
    pub lemma_suite: bool,
    pub lemma_q_max: u32,
    pub output_path: Option<PathBuf>,
    pub format: OutputFormat,
    pub jobs: usize,
    pub seed: u64,
    /// The exact second-moment check runs for `q <= moment_q_max`.
    pub moment_q_max: u32,
}

impl Default for SurveyConfig {
    fn default() -> Self {
        SurveyConfig {
            q_max: 64,
            include_prime_powers: true,
            lemma_suite: false,
            lemma_q_max: 16,
            output_path: None,
            format: OutputFormat::Csv,
            jobs: 1,
            seed: 42,
            moment_q_max: 128,
        }
    }
}

impl SurveyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.q_max < 2 {
            return Err(Error::Parse(format!("q_max must be at least 2, got {}", self.q_max)));
        }
        if self.jobs == 0 {
            return Err(Error::Parse("at least one worker is required".into()));
        }
        if self.q_max > crate::field::MAX_ORDER {
            return Err(Error::TooLarge(self.q_max as u128));
        }
        Ok(())
    }
}

/// Results of the theorem checks for one row.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TheoremFlags {
    pub three_valued_ok: bool,
    pub rationality_ok: bool,
    pub three_valued_rational_ok: bool,
    pub four_valued_rational_ok: bool,
    pub galois_degree_ok: bool,
    pub frequency_divisibility_ok: bool,
}

impl TheoremFlags {
    fn from_report(r: &CheckReport) -> TheoremFlags {
        let ok = |name: &str| r.get(name).is_some_and(|o| o.passed());
        TheoremFlags {
            three_valued_ok: ok("three-valued-criterion"),
            rationality_ok: ok("rationality-criterion"),
            three_valued_rational_ok: ok("three-valued-rational"),
            four_valued_rational_ok: ok("four-valued-rational"),
            galois_degree_ok: ok("galois-degree"),
            frequency_divisibility_ok: ok("frequency-divisibility"),
        }
    }

    pub fn all(&self) -> bool {
        self.three_valued_ok
            && self.rationality_ok
            && self.three_valued_rational_ok
            && self.four_valued_rational_ok
            && self.galois_degree_ok
            && self.frequency_divisibility_ok
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyRow {
    #[serde(flatten)]
    pub record: ClassificationRecord,
    pub flags: TheoremFlags,
    /// Names of failing checks (spectrum invariants and, if run, lemma suites).
    pub failed_checks: Vec<String>,
    /// Whether the lemma suites ran for this row and passed.
    pub lemmas_ok: Option<bool>,
    /// Not serialized, so output files stay reproducible.
    #[serde(skip)]
    pub wall_ms: f64,
    #[serde(skip)]
    pub report: CheckReport,
}

impl SurveyRow {
    pub fn ok(&self) -> bool {
        self.failed_checks.is_empty() && self.flags.all()
    }
}

/// A `(q, s)` pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Pair {
    pub q: u32,
    pub s: u64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SurveySummary {
    pub fields: usize,
    pub classes: usize,
    pub three_valued: Vec<Pair>,
    pub four_valued: Vec<Pair>,
    pub irrational_three_valued: Vec<Pair>,
    pub irrational_four_valued: Vec<Pair>,
    /// The value sets of the irrational 4-valued rows.
    pub exceptional_spectra: Vec<String>,
    pub failing_rows: Vec<Pair>,
}

impl SurveySummary {
    /// No failing rows, no irrational 3-valued spectrum, and irrational
    /// 4-valued spectra only at `q = 5`.
    pub fn consistent(&self) -> bool {
        self.failing_rows.is_empty()
            && self.irrational_three_valued.is_empty()
            && self.irrational_four_valued.iter().all(|pr| pr.q == 5 && pr.s % 4 == 3)
    }
}

#[derive(Clone, Debug)]
pub struct SurveyResult {
    pub rows: Vec<SurveyRow>,
    pub summary: SurveySummary,
}

/// Field orders in `2..=q_max`, ascending.
pub fn field_orders(q_max: u32, include_prime_powers: bool) -> Vec<u32> {
    (2..=q_max)
        .filter(|&q| if include_prime_powers { prime_power(q as u64).is_some() } else { is_prime(q as u64) })
        .collect()
}

/// Classifies one pair and runs its checks.
pub fn survey_row(field: &Field, s: u64, config: &SurveyConfig) -> Result<SurveyRow> {
    let start = Instant::now();
    let q = field.q();
    let spec = spectrum(field, s)?;
    let tau = tau_action(&spec)?;
    let opts = SpectrumCheckOptions { second_moment: q <= config.moment_q_max, ..Default::default() };
    let mut report = check_spectrum(&spec, &tau, opts);
    let flags = TheoremFlags::from_report(&report);
    let record = classification_record(&spec, &tau)?;
    let mut lemmas_ok = None;
    if config.lemma_suite && q <= config.lemma_q_max {
        let mut lemmas = verify_q_lemmas(field, s, if q <= 13 { 3 } else { 2 }, config.seed)?;
        lemmas.merge(verify_identities(field, s, config.seed)?);
        if q <= 64 {
            lemmas.merge(verify_characters(field, config.seed));
        }
        lemmas_ok = Some(lemmas.passed());
        report.merge(lemmas);
    }
    let failed_checks = report.outcomes.iter().filter(|o| !o.passed()).map(|o| o.name.clone()).collect();
    Ok(SurveyRow { record, flags, failed_checks, lemmas_ok, wall_ms: start.elapsed().as_secs_f64() * 1e3, report })
}

/// Runs the survey on a pool of `config.jobs` workers. Rows come back sorted
/// by `(q, s)` whatever the completion order.
pub fn survey(config: &SurveyConfig) -> Result<SurveyResult> {
    config.validate()?;
    let fields: Vec<Field> = field_orders(config.q_max, config.include_prime_powers)
        .into_iter()
        .map(|q| {
            let (p, n) = prime_power(q as u64).expect("prime power");
            Field::new(p as u32, n, None)
        })
        .collect::<Result<_>>()?;
    let tasks: Vec<(&Field, u64)> = fields
        .iter()
        .flat_map(|f| exponent_classes(f.q() as u64, f.p() as u64).into_iter().map(move |s| (f, s)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Inconsistent(format!("thread pool: {e}")))?;
    let rows: Vec<SurveyRow> =
        pool.install(|| tasks.par_iter().map(|&(f, s)| survey_row(f, s, config)).collect::<Result<_>>())?;
    let summary = summarize(&rows, fields.len());
    Ok(SurveyResult { rows, summary })
}

pub fn summarize(rows: &[SurveyRow], fields: usize) -> SurveySummary {
    let mut sum = SurveySummary { fields, classes: rows.len(), ..Default::default() };
    for row in rows {
        let r = &row.record;
        let pair = Pair { q: r.q, s: r.s };
        match r.num_values {
            3 => {
                sum.three_valued.push(pair);
                if !r.is_rational {
                    sum.irrational_three_valued.push(pair);
                }
            }
            4 => {
                sum.four_valued.push(pair);
                if !r.is_rational {
                    sum.irrational_four_valued.push(pair);
                    sum.exceptional_spectra.push(format!("q={} s={}: {{{}}}", r.q, r.s, r.values.join(", ")));
                }
            }
            _ => {}
        }
        if !row.ok() {
            sum.failing_rows.push(pair);
        }
    }
    sum
}

/// Lists of values and frequencies are written in full only up to this many
/// distinct values; larger spectra get a compact frequency summary.
pub const CSV_MAX_LISTED_VALUES: usize = 8;

pub const CSV_HEADER: [&str; 11] = [
    "q",
    "p",
    "n",
    "s",
    "num_values",
    "is_degenerate",
    "is_rational",
    "tau_order",
    "cycle_type",
    "values",
    "frequencies",
];

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

/// `"1*60;2*3"`: each frequency with its multiplicity, ascending.
fn frequency_summary(freqs: &[u64]) -> String {
    let mut sorted = freqs.to_vec();
    sorted.sort_unstable();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let j = sorted[i..].iter().take_while(|&&x| x == sorted[i]).count();
        parts.push(format!("{}*{}", sorted[i], j));
        i += j;
    }
    parts.join(";")
}

pub fn write_csv<W: Write>(rows: &[SurveyRow], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::Inconsistent(format!("csv output: {e}"));
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(io)?;
    for row in rows {
        let r = &row.record;
        let listed = r.num_values <= CSV_MAX_LISTED_VALUES;
        let values = if listed { join(&r.values, ";") } else { String::new() };
        let freqs = if listed { join(&r.frequencies, ";") } else { frequency_summary(&r.frequencies) };
        w.write_record([
            r.q.to_string(),
            r.p.to_string(),
            r.n.to_string(),
            r.s.to_string(),
            r.num_values.to_string(),
            r.is_degenerate.to_string(),
            r.is_rational.to_string(),
            r.tau_order.to_string(),
            join(&r.cycle_type, " "),
            values,
            freqs,
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::Inconsistent(format!("csv output: {e}")))?;
    Ok(())
}

#[derive(Serialize)]
struct JsonOut<'a> {
    rows: &'a [SurveyRow],
    summary: &'a SurveySummary,
}

pub fn write_json<W: Write>(result: &SurveyResult, out: W) -> Result<()> {
    serde_json::to_writer_pretty(out, &JsonOut { rows: &result.rows, summary: &result.summary })
        .map_err(|e| Error::Inconsistent(format!("json output: {e}")))
}

/// Writes to `config.output_path`, or to `out` when no path is set.
pub fn write_output<W: Write>(result: &SurveyResult, config: &SurveyConfig, out: W) -> Result<()> {
    let io = |e: std::io::Error| Error::Inconsistent(format!("cannot write output: {e}"));
    match &config.output_path {
        Some(path) => {
            let file = std::io::BufWriter::new(std::fs::File::create(path).map_err(io)?);
            match config.format {
                OutputFormat::Csv => write_csv(&result.rows, file),
                OutputFormat::Json => write_json(result, file),
            }
        }
        None => match config.format {
            OutputFormat::Csv => write_csv(&result.rows, out),
            OutputFormat::Json => write_json(result, out),
        },
    }
}

impl std::fmt::Display for SurveySummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let list = |v: &[Pair]| v.iter().map(|p| format!("({}, {})", p.q, p.s)).collect::<Vec<_>>().join(" ");
        writeln!(f, "fields: {}  exponent classes: {}", self.fields, self.classes)?;
        writeln!(
            f,
            "3-valued classes: {}  irrational: {}",
            self.three_valued.len(),
            self.irrational_three_valued.len()
        )?;
        writeln!(f, "4-valued classes: {}  irrational: {}", self.four_valued.len(), self.irrational_four_valued.len())?;
        if !self.irrational_four_valued.is_empty() {
            writeln!(f, "irrational 4-valued: {}", list(&self.irrational_four_valued))?;
        }
        for line in &self.exceptional_spectra {
            writeln!(f, "  {line}")?;
        }
        if self.failing_rows.is_empty() {
            writeln!(f, "all rows consistent")
        } else {
            writeln!(f, "FAILING rows: {}", list(&self.failing_rows))
        }
    }
}
