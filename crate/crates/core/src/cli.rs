//! Command-line front end.
//!
//! Exit codes: 0 success, 1 check failure or I/O error, 2 usage or argument
//! error, 3 when a single requested count is unknown.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

use crate::arith::{is_prime, ExactRational};
use crate::checks::{run_checks, CheckReport, Suite};
use crate::counts::{count, count_table, CountResult, CountValue, ReprType, Route};
use crate::error::{Error, Result};
use crate::fixture::{block_weights, APPENDIX_LAYOUT, APPENDIX_PRIMES};
use crate::plancherel::{plancherel_mass, verify_mass_system, PlancherelType};
use crate::series::gf_catalog;
use crate::siegel::{dim_newforms, dim_siegel_cusp, SubgroupKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Md,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableSuite {
    AppendixB,
}

#[derive(Debug, Parser)]
#[command(
    name = "gsp4count",
    version,
    about = "Counts of level-p cuspidal representations of GSp(4) by local type"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,

    /// Write output to FILE instead of standard output
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// One value s_k(p, type)
    Count {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u32,
        #[arg(long = "type", value_parser = parse_type)]
        omega: ReprType,
    },
    /// A grid of counts, or the golden-table layout with --suite appendix-b
    Table {
        #[arg(long = "type", value_parser = parse_type)]
        omega: Option<ReprType>,
        /// Comma-separated primes (default 2,3,5,7,11,13,17,19)
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
        #[arg(long, default_value_t = 1)]
        kmin: u32,
        #[arg(long, default_value_t = 30)]
        kmax: u32,
        #[arg(long, value_enum, conflicts_with_all = ["primes", "kmin", "kmax"])]
        suite: Option<TableSuite>,
    },
    /// Dimensions of Siegel cusp form spaces
    Dims {
        #[arg(long, value_parser = parse_group)]
        group: SubgroupKind,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        kmin: u32,
        #[arg(long)]
        kmax: u32,
    },
    /// Dimensions of newform spaces
    Newforms {
        #[arg(long, value_parser = parse_group)]
        group: SubgroupKind,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        kmin: u32,
        #[arg(long)]
        kmax: u32,
    },
    /// Plancherel masses at residue field size q and the volume identity
    Plancherel {
        #[arg(long)]
        q: u64,
    },
    /// Series coefficients of a catalogued generating function
    Series {
        #[arg(long)]
        p: u64,
        #[arg(long = "type", value_parser = parse_type)]
        omega: ReprType,
        #[arg(long)]
        upto: u32,
        /// Print the rational function as exponent:coefficient pairs instead
        #[arg(long)]
        fraction: bool,
    },
    /// Consistency suites
    Check {
        #[arg(long, value_parser = parse_suite, default_value = "all")]
        suite: Suite,
    },
}

fn parse_type(s: &str) -> std::result::Result<ReprType, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_group(s: &str) -> std::result::Result<SubgroupKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// One row of `count`, `table` and `series` output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRecord {
    pub k: u32,
    pub p: u64,
    #[serde(rename = "type")]
    pub type_label: String,
    pub value: Value,
    pub route: String,
}

impl OutputRecord {
    fn from_count(r: &CountResult) -> Self {
        OutputRecord {
            k: r.k,
            p: r.p,
            type_label: r.omega.label().to_string(),
            value: count_json(&r.value),
            route: r.route.label().to_string(),
        }
    }

    fn value_text(&self) -> String {
        match &self.value {
            Value::String(s) => s.clone(),
            v => v.to_string(),
        }
    }
}

/// One row of `dims` and `newforms` output.
#[derive(Debug, Clone, PartialEq, Serialize)]
struct DimRecord {
    k: u32,
    p: u64,
    group: String,
    value: Value,
}

fn int_json(v: &BigInt) -> Value {
    match v.to_u64() {
        Some(n) => Value::from(n),
        None => Value::String(v.to_string()),
    }
}

fn count_json(v: &CountValue) -> Value {
    match v {
        CountValue::Known(n) => int_json(n),
        CountValue::Unknown => Value::String("unknown".into()),
    }
}

fn rational_json(v: &ExactRational) -> Value {
    match v.to_integer().as_ref().and_then(|n| n.to_i64()) {
        Some(n) => Value::from(n),
        None => Value::String(v.to_string()),
    }
}

fn json_lines<T: Serialize>(rows: &[T]) -> String {
    let body: Vec<String> = rows
        .iter()
        .map(|r| serde_json::to_string(r).expect("records serialize"))
        .collect();
    if body.is_empty() {
        "[]\n".into()
    } else {
        format!("[\n{}\n]\n", body.join(",\n"))
    }
}

fn md_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut s = format!("| {} |\n", header.join(" | "));
    let _ = writeln!(s, "|{}", "---|".repeat(header.len()));
    for r in rows {
        let _ = writeln!(s, "| {} |", r.join(" | "));
    }
    s
}

fn render_records(records: &[OutputRecord], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut s = String::from("k,p,type,value,route\n");
            for r in records {
                let _ = writeln!(s, "{},{},{},{},{}", r.k, r.p, r.type_label, r.value_text(), r.route);
            }
            s
        }
        Format::Json => json_lines(records),
        Format::Md => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    vec![
                        r.k.to_string(),
                        r.p.to_string(),
                        r.type_label.clone(),
                        r.value_text(),
                        r.route.clone(),
                    ]
                })
                .collect();
            md_table(&["k", "p", "type", "value", "route"], &rows)
        }
    }
}

/// Primes as rows, weights as columns.
fn render_matrix(omega: ReprType, weights: &[u32], rows: &[Vec<CountResult>]) -> String {
    let mut header = vec!["p \\ k".to_string()];
    header.extend(weights.iter().map(u32::to_string));
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            let mut r = vec![row.first().map_or(String::new(), |c| c.p.to_string())];
            r.extend(row.iter().map(|c| c.value.to_string()));
            r
        })
        .collect();
    format!("s_k(p, {omega})\n\n{}", md_table(&header, &body))
}

fn sorted_records(rows: &[Vec<CountResult>]) -> Vec<OutputRecord> {
    let mut cells: Vec<&CountResult> = rows.iter().flatten().collect();
    cells.sort_by_key(|c| (c.p, c.k));
    cells.into_iter().map(OutputRecord::from_count).collect()
}

fn render_dims(records: &[DimRecord], format: Format) -> String {
    let text = |v: &Value| match v {
        Value::String(s) => s.clone(),
        v => v.to_string(),
    };
    match format {
        Format::Csv => {
            let mut s = String::from("k,p,group,value\n");
            for r in records {
                let _ = writeln!(s, "{},{},{},{}", r.k, r.p, r.group, text(&r.value));
            }
            s
        }
        Format::Json => json_lines(records),
        Format::Md => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| vec![r.k.to_string(), r.p.to_string(), r.group.clone(), text(&r.value)])
                .collect();
            md_table(&["k", "p", "group", "value"], &rows)
        }
    }
}

#[derive(Serialize)]
struct MassRow {
    #[serde(rename = "type")]
    type_label: &'static str,
    mass: Value,
}

#[derive(Serialize)]
struct PlancherelReport {
    q: u64,
    masses: Vec<MassRow>,
    system: &'static str,
}

#[derive(Serialize)]
struct FailureRow<'a> {
    case: &'a str,
    expected: &'a str,
    actual: &'a str,
}

#[derive(Serialize)]
struct ReportRow<'a> {
    suite: &'a str,
    cases: usize,
    failures: Vec<FailureRow<'a>>,
}

fn render_checks(reports: &[CheckReport], format: Format) -> String {
    let status = |r: &CheckReport| if r.passed() { "ok" } else { "fail" };
    match format {
        Format::Csv => {
            let mut s = String::from("suite,cases,failures,status\n");
            for r in reports {
                let _ = writeln!(s, "{},{},{},{}", r.suite, r.cases, r.failures.len(), status(r));
            }
            s
        }
        Format::Json => {
            let rows: Vec<ReportRow> = reports
                .iter()
                .map(|r| ReportRow {
                    suite: r.suite,
                    cases: r.cases,
                    failures: r
                        .failures
                        .iter()
                        .map(|f| FailureRow {
                            case: &f.case,
                            expected: &f.expected,
                            actual: &f.actual,
                        })
                        .collect(),
                })
                .collect();
            json_lines(&rows)
        }
        Format::Md => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.suite.to_string(),
                        r.cases.to_string(),
                        r.failures.len().to_string(),
                        status(r).to_string(),
                    ]
                })
                .collect();
            md_table(&["suite", "cases", "failures", "status"], &rows)
        }
    }
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn weight_range(kmin: u32, kmax: u32) -> Result<Vec<u32>> {
    if kmin == 0 || kmin > kmax {
        return Err(Error::InvalidArgument(format!(
            "weight range {kmin}..={kmax} must satisfy 1 <= kmin <= kmax"
        )));
    }
    Ok((kmin..=kmax).collect())
}

/// Rendered output plus the exit code it implies.
struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: EXIT_OK }
    }
}

fn execute(command: Command, format: Format) -> Result<Output> {
    match command {
        Command::Count { p, k, omega } => {
            let r = count(k, p, omega)?;
            let rec = OutputRecord::from_count(&r);
            let text = match format {
                Format::Json => format!("{}\n", serde_json::to_string(&rec).expect("serializable")),
                f => render_records(&[rec], f),
            };
            let code = if r.value.is_unknown() { EXIT_UNKNOWN } else { EXIT_OK };
            Ok(Output { text, code })
        }
        Command::Table {
            omega,
            primes,
            kmin,
            kmax,
            suite,
        } => {
            if let Some(TableSuite::AppendixB) = suite {
                return appendix_table(omega, format).map(Output::ok);
            }
            let omega = omega.ok_or_else(|| {
                Error::InvalidArgument("table needs --type or --suite appendix-b".into())
            })?;
            let primes = primes.unwrap_or_else(|| APPENDIX_PRIMES.to_vec());
            primes.iter().try_for_each(|&p| check_prime(p))?;
            let ks = weight_range(kmin, kmax)?;
            let rows = count_table(omega, &primes, &ks)?;
            Ok(Output::ok(match format {
                Format::Md => render_matrix(omega, &ks, &rows),
                f => render_records(&sorted_records(&rows), f),
            }))
        }
        Command::Dims {
            group,
            p,
            kmin,
            kmax,
        } => {
            check_prime(p)?;
            let recs = weight_range(kmin, kmax)?
                .into_iter()
                .map(|k| dim_record(k, p, group, dim_siegel_cusp(k, p, group)?))
                .collect::<Result<Vec<_>>>()?;
            Ok(Output::ok(render_dims(&recs, format)))
        }
        Command::Newforms {
            group,
            p,
            kmin,
            kmax,
        } => {
            check_prime(p)?;
            let recs = weight_range(kmin, kmax)?
                .into_iter()
                .map(|k| dim_record(k, p, group, dim_newforms(k, p, group)?))
                .collect::<Result<Vec<_>>>()?;
            Ok(Output::ok(render_dims(&recs, format)))
        }
        Command::Plancherel { q } => plancherel_report(q, format),
        Command::Series {
            p,
            omega,
            upto,
            fraction,
        } => {
            let gf = gf_catalog(p, omega)?;
            if fraction {
                return Ok(Output::ok(format!("{gf}\n")));
            }
            let e = gf.expand(upto as usize);
            let recs: Vec<OutputRecord> = e
                .coefficients
                .iter()
                .enumerate()
                .map(|(k, c)| OutputRecord {
                    k: k as u32,
                    p,
                    type_label: omega.label().to_string(),
                    value: int_json(c),
                    route: Route::Series.label().to_string(),
                })
                .collect();
            Ok(Output::ok(render_records(&recs, format)))
        }
        Command::Check { suite } => {
            let reports = run_checks(suite);
            let failed = reports.iter().any(|r| !r.passed());
            if failed && format != Format::Json {
                for r in &reports {
                    for f in r.failures.iter().take(20) {
                        eprintln!("{}: {f}", r.suite);
                    }
                }
            }
            Ok(Output {
                text: render_checks(&reports, format),
                code: if failed { EXIT_FAILURE } else { EXIT_OK },
            })
        }
    }
}

fn dim_record(k: u32, p: u64, group: SubgroupKind, v: CountValue) -> Result<DimRecord> {
    Ok(DimRecord {
        k,
        p,
        group: group.label().to_string(),
        value: count_json(&v),
    })
}

fn appendix_table(filter: Option<ReprType>, format: Format) -> Result<String> {
    let layout: Vec<_> = APPENDIX_LAYOUT
        .iter()
        .filter(|(t, _, _)| filter.map_or(true, |f| f == *t))
        .collect();
    if layout.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "type {} has no golden table",
            filter.map_or("?", ReprType::label)
        )));
    }
    let mut md = String::new();
    let mut records = Vec::new();
    for (omega, odd, even) in layout {
        let mut all_rows: Vec<Vec<CountResult>> = vec![Vec::new(); APPENDIX_PRIMES.len()];
        for range in [odd, even] {
            let ks = block_weights(*range);
            let rows = count_table(*omega, &APPENDIX_PRIMES, &ks)?;
            if format == Format::Md {
                md.push_str(&render_matrix(*omega, &ks, &rows));
                md.push('\n');
            }
            for (acc, row) in all_rows.iter_mut().zip(rows) {
                acc.extend(row);
            }
        }
        records.extend(sorted_records(&all_rows));
    }
    Ok(match format {
        Format::Md => md,
        f => render_records(&records, f),
    })
}

fn plancherel_report(q: u64, format: Format) -> Result<Output> {
    let masses = PlancherelType::ALL
        .iter()
        .map(|&t| Ok((t, plancherel_mass(q, t)?)))
        .collect::<Result<Vec<_>>>()?;
    let ok = verify_mass_system(q)?;
    let system = if ok { "ok" } else { "fail" };
    let text = match format {
        Format::Csv => {
            let mut s = String::from("type,mass\n");
            for (t, m) in &masses {
                let _ = writeln!(s, "{t},{m}");
            }
            let _ = writeln!(s, "system,{system}");
            s
        }
        Format::Json => {
            let report = PlancherelReport {
                q,
                masses: masses
                    .iter()
                    .map(|(t, m)| MassRow {
                        type_label: t.label(),
                        mass: rational_json(m),
                    })
                    .collect(),
                system,
            };
            format!("{}\n", serde_json::to_string(&report).expect("serializable"))
        }
        Format::Md => {
            let mut rows: Vec<Vec<String>> = masses
                .iter()
                .map(|(t, m)| vec![t.to_string(), m.to_string()])
                .collect();
            rows.push(vec!["system".into(), system.into()]);
            md_table(&["type", "mass"], &rows)
        }
    };
    Ok(Output {
        text,
        code: if ok { EXIT_OK } else { EXIT_FAILURE },
    })
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command, cli.format) {
        Ok(out) => {
            if let Err(e) = emit(&out.text, cli.out.as_ref()) {
                eprintln!("error: {e}");
                return EXIT_FAILURE;
            }
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
