//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification records a failure, 2 on
//! usage errors. Every output is deterministic for fixed arguments.
//!
//! JSON output wraps the payload as `{"command", "parameters", "payload"}`;
//! report payloads are rows of `identity_label, n, lhs, rhs, status` and
//! table payloads rows of `source, source_class, image, image_class`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use crate::bijection::{bijection_table, MapName};
use crate::counting::{l_count, q_by_dp, q_by_series, q_table, s_count, CountTable, FamilyCounts, DEFAULT_Q_LIMIT};
use crate::errata::{derived_expansion, errata_report, ErrataEntry};
use crate::error::{Error, Result};
use crate::identity::{normalize_backward, to_inequality, verify_expression, QExpression};
use crate::oeis::{self, FetchPolicy, Source};
use crate::partition::{count_oracle, enumerate, ClassTag, Family};
use crate::published;
use crate::report::{self, Relation, VerificationReport};
use crate::{table, Count};

/// Largest `n` the exhaustive enumerator accepts.
pub const ORACLE_LIMIT: u64 = 120;

#[derive(Parser, Debug)]
#[command(
    name = "kfold",
    version,
    about = "Partitions with distinct parts except a k-fold repeated smallest or largest part"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print q(n), s_k(n) or l_k(n).
    ///
    /// CSV columns: class,k,n,method,count
    Count(CountArgs),
    /// List the members of a family, lexicographically decreasing.
    ///
    /// CSV columns: partition
    Enumerate(EnumerateArgs),
    /// Tabulate one of the bijections A, B, C, D, L.
    ///
    /// CSV columns: source,source_class,image,image_class
    Bijection(BijectionArgs),
    /// Expand s_k or l_k as a combination of shifted q values.
    ///
    /// CSV columns: label,shift,coefficient,n_min
    Expand(ExpandArgs),
    /// Check an expansion, its bound, and the recurrence over a range.
    ///
    /// CSV columns: identity_label,n,lhs,rhs,status
    Verify(VerifyArgs),
    /// Compare published formulas, bounds, listings and tables with derived ones.
    ///
    /// CSV columns: identity_label,n,lhs,rhs,status
    Errata(ErrataArgs),
    /// Compare computed values with an OEIS b-file.
    ///
    /// CSV columns: identity_label,n,lhs,rhs,status
    Oeis(OeisArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum ClassArg {
    Q,
    S,
    L,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Method {
    /// Exhaustive enumeration.
    Oracle,
    /// q from the cross-checked table, s_k / l_k by recurrence.
    Recurrence,
    /// q by product expansion only, s_k / l_k by recurrence.
    Series,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long = "class", value_enum, default_value = "q")]
    class: ClassArg,
    #[arg(long, default_value_t = 1)]
    k: usize,
}

impl FamilyArgs {
    fn tag(&self) -> Result<ClassTag> {
        match self.class {
            ClassArg::Q if self.k == 1 => Ok(ClassTag::STRICT),
            ClassArg::Q => Err(Error::InvalidMultiplicity(self.k)),
            ClassArg::S => ClassTag::smallest(self.k),
            ClassArg::L => ClassTag::largest(self.k),
        }
    }
}

#[derive(Args, Debug)]
struct CountArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    n: u64,
    #[arg(long, value_enum, default_value = "recurrence")]
    method: Method,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    n: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct BijectionArgs {
    /// A, B (k = 2 only), C, D or L.
    #[arg(long)]
    name: String,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long)]
    n: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct ExpandArgs {
    #[arg(long = "class", value_enum)]
    class: ClassArg,
    #[arg(long)]
    k: usize,
    /// Rewrite with descending arguments only.
    #[arg(long)]
    backward: bool,
    /// Use the published form instead of the derived one.
    #[arg(long)]
    paper_form: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long = "class", value_enum)]
    class: ClassArg,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, default_value_t = 200)]
    max_n: u64,
    /// Check the published form instead of the derived one.
    #[arg(long)]
    paper_form: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct ErrataArgs {
    #[arg(long, default_value_t = 40)]
    max_n: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct OeisArgs {
    /// A000009 (q) or A087135 (s_2 + q).
    #[arg(long)]
    id: String,
    /// Last index to compare; defaults to the end of the fixture.
    #[arg(long)]
    max_n: Option<u64>,
    /// Read the b-file from this path instead of the bundled copy.
    #[arg(long, conflicts_with = "fetch")]
    file: Option<PathBuf>,
    /// Read the b-file through the download cache.
    #[arg(long)]
    fetch: bool,
    /// Permit network access when the cache is cold.
    #[arg(long)]
    allow_network: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

enum Failure {
    Usage(String),
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidMultiplicity(_)
            | Error::UnknownMap(_)
            | Error::ResourceLimit { .. }
            | Error::Precondition { .. }
            | Error::NotNormalizable { .. } => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.into())
    }
}

type CliResult = std::result::Result<i32, Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(message)) => {
            let _ = writeln!(err, "error: {message}\n\nFor more information, try '--help'.");
            2
        }
        Err(Failure::Runtime(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CliResult {
    match command {
        Command::Count(a) => count(a, out),
        Command::Enumerate(a) => enumerate_cmd(a, out),
        Command::Bijection(a) => bijection(a, out),
        Command::Expand(a) => expand(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Errata(a) => errata(a, out),
        Command::Oeis(a) => oeis_cmd(a, out),
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure::Usage(message.into())
}

fn envelope(out: &mut dyn Write, command: &str, parameters: serde_json::Value, payload: impl Serialize) -> Result<()> {
    let value = json!({ "command": command, "parameters": parameters, "payload": payload });
    serde_json::to_writer_pretty(&mut *out, &value)?;
    writeln!(out)?;
    Ok(())
}

fn big_json(v: &Count) -> serde_json::Value {
    serde_json::Value::Number(v.to_string().parse().expect("decimal integer"))
}

fn count_value(tag: ClassTag, n: u64, method: Method) -> std::result::Result<Count, Failure> {
    let k = tag.k();
    let n_us = n as usize;
    match method {
        Method::Oracle => {
            if n > ORACLE_LIMIT {
                return Err(usage(format!("--method oracle supports n <= {ORACLE_LIMIT}")));
            }
            Ok(count_oracle(tag, n))
        }
        Method::Recurrence | Method::Series => {
            let reach = n_us + k * (k - 1) / 2;
            if reach > DEFAULT_Q_LIMIT {
                return Err(usage(format!("n + k(k-1)/2 must not exceed {DEFAULT_Q_LIMIT}")));
            }
            let q = if method == Method::Series {
                CountTable::new(ClassTag::STRICT, q_by_series(reach))
            } else {
                q_table(reach)?
            };
            Ok(match tag.family() {
                Family::Strict => q.get(n as i64)?,
                Family::SmallestRepeat => s_count(k, n_us, &q)?,
                Family::LargestRepeat => l_count(k, n_us, &q)?,
            })
        }
    }
}

fn count(a: CountArgs, out: &mut dyn Write) -> CliResult {
    let tag = a.family.tag()?;
    let value = count_value(tag, a.n, a.method)?;
    match a.format {
        Format::Text => writeln!(out, "{value}")?,
        Format::Csv => {
            writeln!(out, "class,k,n,method,count")?;
            writeln!(out, "{},{},{},{},{value}", class_name(a.family.class), tag.k(), a.n, method_name(a.method))?;
        }
        Format::Json => envelope(
            out,
            "count",
            json!({ "class": a.family.class, "k": tag.k(), "n": a.n, "method": a.method }),
            big_json(&value),
        )?,
    }
    Ok(0)
}

fn class_name(c: ClassArg) -> &'static str {
    match c {
        ClassArg::Q => "q",
        ClassArg::S => "s",
        ClassArg::L => "l",
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Oracle => "oracle",
        Method::Recurrence => "recurrence",
        Method::Series => "series",
    }
}

fn enumerate_cmd(a: EnumerateArgs, out: &mut dyn Write) -> CliResult {
    let tag = a.family.tag()?;
    if a.n > ORACLE_LIMIT {
        return Err(usage(format!("enumerate supports n <= {ORACLE_LIMIT}")));
    }
    let members = enumerate(tag, a.n);
    match a.format {
        Format::Text => {
            for p in &members {
                writeln!(out, "{p}")?;
            }
        }
        Format::Csv => {
            writeln!(out, "partition")?;
            for p in &members {
                writeln!(out, "\"{p}\"")?;
            }
        }
        Format::Json => envelope(
            out,
            "enumerate",
            json!({ "class": a.family.class, "k": tag.k(), "n": a.n }),
            &members,
        )?,
    }
    Ok(0)
}

fn bijection(a: BijectionArgs, out: &mut dyn Write) -> CliResult {
    let map: MapName = a.name.parse()?;
    map.check_k(a.k)?;
    if a.n > ORACLE_LIMIT {
        return Err(usage(format!("bijection supports n <= {ORACLE_LIMIT}")));
    }
    let rows = bijection_table(map, a.n, a.k)?;
    match a.format {
        Format::Text => write!(out, "{}", table::render_text(map, a.n, a.k, &rows)?)?,
        Format::Csv => table::write_csv(&mut *out, &rows)?,
        Format::Json => envelope(out, "bijection", json!({ "name": map, "k": a.k, "n": a.n }), &rows)?,
    }
    Ok(0)
}

fn family_of(class: ClassArg) -> std::result::Result<Family, Failure> {
    match class {
        ClassArg::S => Ok(Family::SmallestRepeat),
        ClassArg::L => Ok(Family::LargestRepeat),
        ClassArg::Q => Err(usage("--class must be s or l")),
    }
}

fn published_expansion(family: Family, k: usize) -> std::result::Result<QExpression, Failure> {
    published::EXPANSIONS
        .iter()
        .find(|e| e.family == family && e.k == k)
        .map(|e| QExpression::new(format!("{} [published]", e.label), e.n_min, e.terms.iter().copied()))
        .ok_or_else(|| usage(format!("no published form for k = {k}")))
}

fn chosen_expansion(class: ClassArg, k: usize, paper_form: bool) -> std::result::Result<QExpression, Failure> {
    let family = family_of(class)?;
    if k == 0 {
        return Err(usage("--k must be at least 1"));
    }
    if paper_form {
        published_expansion(family, k)
    } else {
        Ok(derived_expansion(family, k)?)
    }
}

fn expand(a: ExpandArgs, out: &mut dyn Write) -> CliResult {
    let mut expr = chosen_expansion(a.class, a.k, a.paper_form)?;
    let inequality = if expr.coeff(0).abs() == 1 { Some(to_inequality(&expr)?) } else { None };
    let mut inequality = inequality;
    if a.backward {
        expr = normalize_backward(&expr);
        inequality = inequality.map(|i| i.normalize_backward()).transpose()?;
    }
    match a.format {
        Format::Text => {
            writeln!(out, "{} = {}, n >= {}", expr.label(), expr, expr.n_min())?;
            if let Some(i) = &inequality {
                writeln!(out, "{i}")?;
            }
        }
        Format::Csv => {
            writeln!(out, "label,shift,coefficient,n_min")?;
            for (j, c) in expr.coeffs() {
                writeln!(out, "{},{j},{c},{}", expr.label(), expr.n_min())?;
            }
        }
        Format::Json => {
            let coefficients: serde_json::Map<String, serde_json::Value> =
                expr.coeffs().iter().map(|(j, c)| (j.to_string(), json!(c))).collect();
            let payload = json!({
                "label": expr.label(),
                "expression": expr.to_string(),
                "coefficients": coefficients,
                "n_min": expr.n_min(),
                "inequality": inequality.as_ref().map(|i| json!({
                    "direction": i.direction,
                    "text": i.to_string(),
                    "n_min": i.n_min,
                })),
            });
            envelope(
                out,
                "expand",
                json!({ "class": a.class, "k": a.k, "backward": a.backward, "paper_form": a.paper_form }),
                payload,
            )?;
        }
    }
    Ok(0)
}

fn emit_reports(out: &mut dyn Write, format: Format, command: &str, parameters: serde_json::Value, reports: &[VerificationReport]) -> Result<()> {
    match format {
        Format::Text => {
            for r in reports {
                writeln!(out, "{}", r.summary())?;
            }
        }
        Format::Csv => report::write_csv(&mut *out, reports)?,
        Format::Json => {
            let rows: Vec<_> = reports.iter().flat_map(|r| r.rows()).collect();
            envelope(out, command, parameters, rows)?;
        }
    }
    Ok(())
}

fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(VerificationReport::passed) {
        0
    } else {
        1
    }
}

/// Recurrence counts against enumeration up to this weight.
const VERIFY_ORACLE_SPAN: u64 = 30;

fn verify(a: VerifyArgs, out: &mut dyn Write) -> CliResult {
    let max_n = a.max_n as usize;
    let parameters = json!({ "class": a.class, "k": a.k, "max_n": a.max_n, "paper_form": a.paper_form });
    if a.class == ClassArg::Q {
        if a.paper_form {
            return Err(usage("--paper-form needs --class s or l"));
        }
        if max_n > DEFAULT_Q_LIMIT {
            return Err(usage(format!("--max-n must not exceed {DEFAULT_Q_LIMIT}")));
        }
        let (series, dp) = (q_by_series(max_n), q_by_dp(max_n));
        let mut report = VerificationReport::new("q by product expansion = q by bounded-part DP", Relation::Equal, 0, a.max_n as i64);
        for n in 0..=max_n {
            report.push(n as i64, series[n].clone().into(), dp[n].clone().into());
        }
        let reports = [report];
        emit_reports(out, a.format, "verify", parameters, &reports)?;
        return Ok(exit_code(&reports));
    }
    let expr = chosen_expansion(a.class, a.k, a.paper_form)?;
    let family = family_of(a.class)?;
    let tag = ClassTag::new(family, a.k)?;
    if max_n + a.k * a.k.saturating_sub(1) / 2 > DEFAULT_Q_LIMIT {
        return Err(usage(format!("--max-n is too large; q is limited to n <= {DEFAULT_Q_LIMIT}")));
    }
    let counts = FamilyCounts::build(a.k, max_n)?;
    let range = 0..=a.max_n as i64;
    let count = |n: i64| -> Result<BigInt> { Ok(counts.count(tag, n)?.into()) };

    let mut reports = vec![verify_expression(&expr, count, range.clone(), counts.q())?];
    if a.paper_form {
        if let Some(bound) = published::BOUNDS.iter().find(|b| b.family == family && b.k == a.k && !b.backward) {
            let rhs = QExpression::new(bound.label, bound.n_min, bound.terms.iter().copied());
            let mut r = VerificationReport::new(format!("{} [published]", bound.label), bound.relation, 0, a.max_n as i64);
            for n in bound.n_min..=a.max_n as i64 {
                r.push(n, counts.q().get(n)?.into(), rhs.evaluate(n, counts.q())?);
            }
            reports.push(r);
        }
    } else if expr.coeff(0).abs() == 1 {
        let inequality = to_inequality(&expr)?;
        reports.push(inequality.verify(range.clone(), counts.q())?);
        if family == Family::LargestRepeat && a.k >= 2 {
            reports.push(inequality.normalize_backward()?.verify(range, counts.q())?);
        }
    }
    let span = a.max_n.min(VERIFY_ORACLE_SPAN);
    let mut oracle = VerificationReport::new(format!("{tag} recurrence = {tag} enumeration"), Relation::Equal, 0, span as i64);
    for n in 0..=span {
        oracle.push(n as i64, counts.count(tag, n as i64)?.into(), count_oracle(tag, n).into());
    }
    reports.push(oracle);
    emit_reports(out, a.format, "verify", parameters, &reports)?;
    Ok(exit_code(&reports))
}

#[derive(Serialize)]
struct ErrataJson<'a> {
    item: &'a str,
    form: crate::errata::Form,
    expected: crate::report::Status,
    status: crate::report::Status,
    witness: Option<&'a crate::report::Record>,
    records: Vec<crate::report::Row<'a>>,
}

fn errata(a: ErrataArgs, out: &mut dyn Write) -> CliResult {
    if a.max_n > 2000 {
        return Err(usage("--max-n must not exceed 2000"));
    }
    let entries = errata_report(1..=a.max_n as i64)?;
    let all_expected = entries.iter().all(ErrataEntry::as_expected);
    match a.format {
        Format::Text => {
            for e in &entries {
                let note = if e.as_expected() { "" } else { "  UNEXPECTED" };
                writeln!(out, "{}{note}", e.report.summary())?;
            }
            let surprises = entries.iter().filter(|e| !e.as_expected()).count();
            writeln!(out, "{} checks, {} published items fail as recorded, {surprises} unexpected",
                entries.len(),
                entries.iter().filter(|e| e.expected == crate::report::Status::Fail && e.as_expected()).count())?;
        }
        Format::Csv => {
            let reports: Vec<_> = entries.iter().map(|e| &e.report).collect();
            report::write_csv(&mut *out, reports)?;
        }
        Format::Json => {
            let payload: Vec<_> = entries
                .iter()
                .map(|e| ErrataJson {
                    item: &e.item,
                    form: e.form,
                    expected: e.expected,
                    status: e.report.status(),
                    witness: e.report.witness.as_ref(),
                    records: e.report.rows().collect(),
                })
                .collect();
            envelope(out, "errata", json!({ "max_n": a.max_n }), payload)?;
        }
    }
    Ok(if all_expected { 0 } else { 1 })
}

fn oeis_cmd(a: OeisArgs, out: &mut dyn Write) -> CliResult {
    if !matches!(a.id.as_str(), "A000009" | "A087135") {
        return Err(usage(format!("no generator for {}; use A000009 or A087135", a.id)));
    }
    let fixture = if let Some(path) = &a.file {
        let text = std::fs::read_to_string(path)?;
        oeis::parse_bfile(&a.id, &text, Source::Bundled).map_err(Error::from)?
    } else if a.fetch {
        let policy = FetchPolicy { allow_network: a.allow_network, ..FetchPolicy::offline() };
        let text = oeis::fetch(&a.id, &policy).map_err(Error::from)?;
        oeis::parse_bfile(&a.id, &text, Source::Fetched).map_err(Error::from)?
    } else {
        oeis::bundled(&a.id).expect("bundled ids checked above")
    };
    let last = fixture.last_index();
    let max_n = a.max_n.map(|m| m as i64).unwrap_or(last);
    if max_n as usize > DEFAULT_Q_LIMIT {
        return Err(usage(format!("--max-n must not exceed {DEFAULT_Q_LIMIT}")));
    }
    let counts = FamilyCounts::build(2, max_n.max(0) as usize)?;
    let report = if a.id == "A000009" {
        oeis::compare(&fixture, |n| counts.count(ClassTag::STRICT, n), max_n)?
    } else {
        let s2 = ClassTag::smallest(2)?;
        oeis::compare(&fixture, |n| Ok(counts.count(s2, n)? + counts.count(ClassTag::STRICT, n)?), max_n)?
    };
    let reports = [report];
    emit_reports(out, a.format, "oeis", json!({ "id": a.id, "max_n": max_n }), &reports)?;
    Ok(exit_code(&reports))
}
