//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 internal error.

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::coefficients::{coefficient_pair, coefficient_table};
use crate::error::Error;
use crate::identities::{fast_narayana, mirror, reduce_to_base, reduction_stages, Strategy};
use crate::sequence::{Index, SequenceEngine, DEFAULT_INDEX_CAP};
use crate::sums::{closed_sum_4_0, partial_sum, sum_recurrence_4, ColumnSumSpec};
use crate::table::{build_table, render, TableFormat};
use crate::verify::{
    verify_all_with, verify_skip_unclipped_with, verify_with, IdentityId, MatrixOracle, Oracle, Ranges,
    VerificationReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "narayana", version, about = "Exact Narayana's cows numbers and their identities")]
#[command(allow_negative_numbers = true)]
pub struct CliConfig {
    /// Largest |m| the memoized engine will serve.
    #[arg(long, global = true, default_value_t = DEFAULT_INDEX_CAP)]
    pub index_cap: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableOutput {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SumMethod {
    Direct,
    Closed,
    Recurrence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Naive,
    Matrix,
    Thirds,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Naive => Strategy::Naive,
            StrategyArg::Matrix => Strategy::Matrix,
            StrategyArg::Thirds => Strategy::Thirds,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print N_m in decimal.
    Compute {
        #[arg(allow_hyphen_values = true)]
        m: Index,
        #[arg(long, value_enum, default_value_t = StrategyArg::Naive)]
        strategy: StrategyArg,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Print the skip-recurrence pair (p_a, q_a), or the table for 1..=a.
    Coeff {
        #[arg(allow_hyphen_values = true)]
        a: Index,
        #[arg(long)]
        table: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Express N_m through the first three entries of its column in the a-column table.
    Reduce {
        m: Index,
        a: Index,
        /// Also print every intermediate stage.
        #[arg(long)]
        stages: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Print P_{N,m}, Q_{N,m}, N_m and N_{-m}.
    Mirror {
        m: Index,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Print the a-column table. CSV output has no header row.
    Table {
        a: Index,
        rows: Index,
        #[arg(long, value_enum, default_value_t = TableOutput::Text)]
        format: TableOutput,
    },
    /// Column partial sum S_{N,r}^{(a,b)}.
    Sum {
        a: Index,
        b: Index,
        r: Index,
        #[arg(long, value_enum, default_value_t = SumMethod::Direct)]
        method: SumMethod,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Check identities against the companion-matrix oracle.
    Verify(VerifyArgs),
    /// Time each strategy on the given indices.
    Bench {
        #[arg(long = "m", value_delimiter = ',', required = true, allow_hyphen_values = true)]
        m: Vec<Index>,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [StrategyArg::Naive, StrategyArg::Matrix, StrategyArg::Thirds])]
        strategies: Vec<StrategyArg>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, conflicts_with = "all")]
    pub identity: Option<String>,
    #[arg(long)]
    pub all: bool,
    #[arg(long, value_parser = parse_range, default_value = "-200:1000", allow_hyphen_values = true)]
    pub m_range: (Index, Index),
    #[arg(long, value_parser = parse_range, default_value = "1:40", allow_hyphen_values = true)]
    pub a_range: (Index, Index),
    #[arg(long, value_parser = parse_range, default_value = "0:200", allow_hyphen_values = true)]
    pub r_range: (Index, Index),
    /// Also report the skip recurrence without the a < m clip (never affects the exit code).
    #[arg(long)]
    pub wide_skip: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

fn parse_range(s: &str) -> Result<(Index, Index), String> {
    let (lo, hi) = s.split_once(':').ok_or_else(|| format!("expected LO:HI, got {s:?}"))?;
    let lo = lo.trim().parse().map_err(|e| format!("bad lower bound {lo:?}: {e}"))?;
    let hi = hi.trim().parse().map_err(|e| format!("bad upper bound {hi:?}: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}:{hi}"));
    }
    Ok((lo, hi))
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Argument(_) | Error::IndexOutOfRange { .. } => Failure::Usage(e.to_string()),
            Error::Internal(_) => Failure::Internal(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Internal(format!("write failed: {e}"))
    }
}

/// Parses `argv` (including the program name) and runs one subcommand.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    run_with_oracle(argv, out, err, &MatrixOracle)
}

/// As [`run`], with the verifier's reference oracle supplied by the caller.
pub fn run_with_oracle(argv: &[String], out: &mut dyn Write, err: &mut dyn Write, oracle: &dyn Oracle) -> i32 {
    let config = match CliConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(config, out, oracle) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}

fn emit_json(out: &mut dyn Write, value: &serde_json::Value) -> Result<(), Failure> {
    writeln!(out, "{value}")?;
    Ok(())
}

fn dispatch(config: CliConfig, out: &mut dyn Write, oracle: &dyn Oracle) -> Result<i32, Failure> {
    let mut engine = SequenceEngine::with_cap(config.index_cap);
    match config.command {
        Command::Compute { m, strategy, format } => {
            let strategy = Strategy::from(strategy);
            let value = fast_narayana(&mut engine, m, strategy)?;
            match format {
                OutputFormat::Text => writeln!(out, "{value}")?,
                OutputFormat::Json => emit_json(
                    out,
                    &json!({ "m": m, "strategy": strategy.name(), "value": value.to_string() }),
                )?,
            }
        }
        Command::Coeff { a, table, format } => {
            let pairs = if table { coefficient_table(&mut engine, a)? } else { vec![coefficient_pair(&mut engine, a)?] };
            match format {
                OutputFormat::Text if table => {
                    for c in &pairs {
                        writeln!(out, "a={} p={} q={}", c.a, c.p, c.q)?;
                    }
                }
                OutputFormat::Text => writeln!(out, "p={} q={}", pairs[0].p, pairs[0].q)?,
                OutputFormat::Json if table => emit_json(out, &serde_json::to_value(&pairs).expect("pairs"))?,
                OutputFormat::Json => emit_json(out, &serde_json::to_value(&pairs[0]).expect("pair"))?,
            }
        }
        Command::Reduce { m, a, stages, format } => {
            let triple = reduce_to_base(&mut engine, m, a)?;
            let b = triple.b;
            let [i2, i1, i0] = [2 * a + b, a + b, b];
            let combo = &triple.alpha * engine.get(i2)? + &triple.beta * engine.get(i1)? + &triple.gamma * engine.get(i0)?;
            let value = engine.narayana(m)?;
            let holds = combo == value;
            let stage_list = if stages { reduction_stages(&mut engine, m, a)? } else { Vec::new() };
            match format {
                OutputFormat::Text => {
                    writeln!(out, "b={b}")?;
                    writeln!(out, "alpha={}", triple.alpha)?;
                    writeln!(out, "beta={}", triple.beta)?;
                    writeln!(out, "gamma={}", triple.gamma)?;
                    for s in &stage_list {
                        let [x, y, z] = s.indices(a, b);
                        writeln!(out, "stage {}: {}*N_{x} + {}*N_{y} + {}*N_{z}", s.level, s.alpha, s.beta, s.gamma)?;
                    }
                    let rel = if holds { "=" } else { "!=" };
                    writeln!(
                        out,
                        "{}*N_{i2} + {}*N_{i1} + {}*N_{i0} = {combo} {rel} N_{m} = {value}",
                        triple.alpha, triple.beta, triple.gamma
                    )?;
                }
                OutputFormat::Json => {
                    let mut v = serde_json::to_value(&triple).expect("triple");
                    v["m"] = json!(m);
                    v["value"] = json!(value.to_string());
                    v["holds"] = json!(holds);
                    if stages {
                        v["stages"] = serde_json::to_value(&stage_list).expect("stages");
                    }
                    emit_json(out, &v)?;
                }
            }
            if !holds {
                return Err(Failure::Internal(format!("reduction of N_{m} with a = {a} does not reproduce N_{m}")));
            }
        }
        Command::Mirror { m, format } => {
            let pair = mirror(&mut engine, m)?;
            let pos = engine.narayana(m)?;
            let neg = engine.narayana(-m)?;
            match format {
                OutputFormat::Text => {
                    writeln!(out, "P={}", pair.p)?;
                    writeln!(out, "Q={}", pair.q)?;
                    writeln!(out, "N_m={pos}")?;
                    writeln!(out, "N_-m={neg}")?;
                }
                OutputFormat::Json => emit_json(
                    out,
                    &json!({
                        "m": m,
                        "P": pair.p.to_string(),
                        "Q": pair.q.to_string(),
                        "N_m": pos.to_string(),
                        "N_neg_m": neg.to_string(),
                    }),
                )?,
            }
        }
        Command::Table { a, rows, format } => {
            let table = build_table(&mut engine, a, rows)?;
            let format = match format {
                TableOutput::Text => TableFormat::Text,
                TableOutput::Csv => TableFormat::Csv,
                TableOutput::Json => TableFormat::Json,
            };
            let text = render(&table, format);
            if format == TableFormat::Json {
                writeln!(out, "{text}")?;
            } else {
                write!(out, "{text}")?;
            }
        }
        Command::Sum { a, b, r, method, format } => {
            let value = match method {
                SumMethod::Direct => partial_sum(&mut engine, ColumnSumSpec::new(a, b, r)?)?,
                SumMethod::Closed => {
                    if (a, b) != (4, 0) {
                        return Err(Failure::Usage("closed form is only available for a = 4, b = 0".into()));
                    }
                    closed_sum_4_0(&mut engine, r)?
                }
                SumMethod::Recurrence => {
                    if a != 4 {
                        return Err(Failure::Usage("recurrence is only available for a = 4, 1 <= b <= 4".into()));
                    }
                    sum_recurrence_4(&mut engine, b, r)?
                }
            };
            match format {
                OutputFormat::Text => writeln!(out, "{value}")?,
                OutputFormat::Json => emit_json(out, &json!({ "a": a, "b": b, "r": r, "value": value.to_string() }))?,
            }
        }
        Command::Verify(args) => return run_verify(args, out, oracle),
        Command::Bench { m, strategies, format } => run_bench(&m, &strategies, format, config.index_cap, out)?,
    }
    Ok(EXIT_OK)
}

fn run_verify(args: VerifyArgs, out: &mut dyn Write, oracle: &dyn Oracle) -> Result<i32, Failure> {
    let ranges = Ranges { m: args.m_range, a: args.a_range, r: args.r_range };
    let reports = match (&args.identity, args.all) {
        (Some(name), _) => vec![verify_with(name.parse::<IdentityId>()?, &ranges, oracle)?],
        (None, _) => verify_all_with(&ranges, oracle)?,
    };
    let wide = if args.wide_skip { Some(verify_skip_unclipped_with(&ranges, oracle)?) } else { None };
    let failed = reports.iter().any(|r| !r.passed());
    match args.format {
        OutputFormat::Text => {
            for r in &reports {
                write_report_line(out, r, "")?;
            }
            if let Some(r) = &wide {
                write_report_line(out, r, " [informational]")?;
            }
            let failures: u64 = reports.iter().map(|r| r.failures).sum();
            writeln!(out, "{} identities, {} failures", reports.len(), failures)?;
        }
        OutputFormat::Json => {
            let v = serde_json::to_value(&reports).expect("reports");
            match &wide {
                None => emit_json(out, &v)?,
                Some(w) => emit_json(out, &json!({ "reports": v, "informational": [w] }))?,
            }
        }
    }
    Ok(if failed { EXIT_VERIFY_FAILED } else { EXIT_OK })
}

fn write_report_line(out: &mut dyn Write, r: &VerificationReport, suffix: &str) -> std::io::Result<()> {
    let status = if r.passed() { "PASS" } else { "FAIL" };
    write!(out, "{status} {:<20} checked={} failures={} domain: {}{suffix}", r.identity.name(), r.checked, r.failures, r.domain)?;
    if let Some(cx) = &r.first_counterexample {
        let params: Vec<String> = cx.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(out, " first counterexample ({}) {}: expected {} got {}", params.join(", "), cx.detail, cx.expected, cx.actual)?;
    }
    writeln!(out)
}

const BENCH_REPEATS: usize = 3;

fn run_bench(
    indices: &[Index],
    strategies: &[StrategyArg],
    format: OutputFormat,
    cap: u64,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let mut rows = Vec::new();
    for &m in indices {
        let mut results: Vec<(Strategy, u128, BigInt)> = Vec::new();
        for &s in strategies {
            let s = Strategy::from(s);
            let mut best = u128::MAX;
            let mut value = BigInt::default();
            for _ in 0..BENCH_REPEATS {
                // fresh engine so no run benefits from another's memo
                let mut engine = SequenceEngine::with_cap(cap);
                let start = Instant::now();
                value = fast_narayana(&mut engine, m, s)?;
                best = best.min(start.elapsed().as_nanos());
            }
            results.push((s, best, value));
        }
        let agree = results.windows(2).all(|w| w[0].2 == w[1].2);
        rows.push((m, results, agree));
    }
    match format {
        OutputFormat::Text => {
            for (m, results, agree) in &rows {
                for (s, ns, v) in results {
                    writeln!(out, "m={m} strategy={s} ns={ns} digits={}", digit_count(v))?;
                }
                writeln!(out, "m={m} agree={agree}")?;
            }
        }
        OutputFormat::Json => {
            let v: Vec<serde_json::Value> = rows
                .iter()
                .map(|(m, results, agree)| {
                    let timings: Vec<serde_json::Value> = results
                        .iter()
                        .map(|(s, ns, v)| json!({ "strategy": s.name(), "ns": *ns as u64, "digits": digit_count(v) }))
                        .collect();
                    json!({ "m": m, "results": timings, "agree": agree })
                })
                .collect();
            emit_json(out, &serde_json::Value::Array(v))?;
        }
    }
    if rows.iter().any(|(_, _, agree)| !agree) {
        return Err(Failure::Internal("strategies disagree".into()));
    }
    Ok(())
}

/// Decimal digits of `|v|`.
pub fn digit_count(v: &BigInt) -> usize {
    v.magnitude().to_str_radix(10).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let argv: Vec<String> = std::iter::once("narayana").chain(args.iter().copied()).map(String::from).collect();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn range_parser() {
        assert_eq!(parse_range("-200:1000"), Ok((-200, 1000)));
        assert!(parse_range("5:4").is_err());
        assert!(parse_range("5").is_err());
    }

    #[test]
    fn negative_index_is_positional() {
        assert_eq!(run_args(&["compute", "-7"]).1, "-2\n");
        assert_eq!(run_args(&["coeff", "-5"]).1, "p=-5 q=-6\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&["compute"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["compute", "5", "--strategy", "binet"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["sum", "5", "0", "3", "--method", "closed"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["mirror", "0"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["--index-cap", "10", "compute", "11"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["verify", "--identity", "nope"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn digits() {
        assert_eq!(digit_count(&BigInt::from(-848491)), 6);
        assert_eq!(digit_count(&BigInt::from(0)), 1);
    }
}
