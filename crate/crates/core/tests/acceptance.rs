//! Acceptance gate. Every comparison is exact; runtime bounds are wall-clock.
//!
//! Run with `cargo test -p narayana-core --test acceptance`.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use narayana::cli::{run_with_oracle, EXIT_OK, EXIT_VERIFY_FAILED};
use narayana::{
    closed_sum_4_0, coefficient_table, fast_narayana, narayana_matrix, p_coeff, partial_sum, reduce_to_base,
    reduction_stages, sum_recurrence_4, verify_all, BigInt, ColumnSumSpec, IdentityId, Oracle, Ranges,
    SequenceEngine, Strategy,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))?;
    Ok(took)
}

fn golden_values() -> Outcome {
    let start = Instant::now();
    let mut e = SequenceEngine::new();
    for (m, v) in [(38, 848491), (40, 1822473), (26, 8641)] {
        let got = e.narayana(m).map_err(|x| x.to_string())?;
        ensure(got == big(v), || format!("N_{m} = {got}, want {v}"))?;
    }
    let prefix = e.narayana_range(0, 9).map_err(|x| x.to_string())?;
    ensure(prefix == [0, 1, 1, 1, 2, 3, 4, 6, 9, 13].map(big), || format!("prefix {prefix:?}"))?;
    let neg_row = [0, 1, 0, -1, 1, 1, -2, 0, 3, -2, -3, 5];
    for (m, &v) in (1..=12).zip(neg_row.iter()) {
        let got = e.narayana(-m).map_err(|x| x.to_string())?;
        ensure(got == big(v), || format!("N_-{m} = {got}, want {v}"))?;
    }
    let took = within(Duration::from_secs(1), start)?;
    Ok(format!("N_38, N_40, N_26, prefix and N_-1..N_-12 exact in {took:?}"))
}

fn coefficient_tables() -> Outcome {
    let start = Instant::now();
    let mut e = SequenceEngine::new();
    let table = coefficient_table(&mut e, 8).map_err(|x| x.to_string())?;
    let want = [(1, 0), (1, 2), (4, -3), (5, -2), (6, 5), (10, -1), (15, -7), (21, 6)];
    for (c, (p, q)) in table.iter().zip(want) {
        ensure(c.p == big(p) && c.q == big(q), || format!("a = {}: ({}, {}) want ({p}, {q})", c.a, c.p, c.q))?;
    }
    ensure(table.len() == 8, || format!("{} rows", table.len()))?;
    let extended = [-6, 7, 1, -5, 2, 3, -2, 0, 3, 1, 1, 4];
    for (s, &v) in (-8..=3).zip(extended.iter()) {
        let got = p_coeff(&mut e, s).map_err(|x| x.to_string())?;
        ensure(got == big(v), || format!("p_{s} = {got}, want {v}"))?;
    }
    let took = within(Duration::from_secs(1), start)?;
    Ok(format!("(p_a, q_a) for a = 1..8 and p_s for s = -8..3 exact in {took:?}"))
}

fn identity_suite() -> Outcome {
    let start = Instant::now();
    let reports = verify_all(&Ranges { m: (-200, 1000), a: (1, 40), r: (0, 200) }).map_err(|x| x.to_string())?;
    ensure(reports.len() == 20, || format!("{} reports", reports.len()))?;
    let ids: Vec<IdentityId> = reports.iter().map(|r| r.identity).collect();
    ensure(ids == IdentityId::ALL, || "report order differs from registry".into())?;
    for r in &reports {
        ensure(r.failures == 0, || format!("{} failed: {:?}", r.identity, r.first_counterexample))?;
        ensure(r.checked > 0, || format!("{} checked nothing", r.identity))?;
    }
    let checked: u64 = reports.iter().map(|r| r.checked).sum();
    let took = within(Duration::from_secs(60), start)?;
    Ok(format!("20 identities, {checked} checks, 0 failures in {took:?}"))
}

fn worked_reductions() -> Outcome {
    let start = Instant::now();
    let mut e = SequenceEngine::new();
    let t = reduce_to_base(&mut e, 38, 7).map_err(|x| x.to_string())?;
    ensure(t.b == 3 && t.alpha == big(3166) && t.beta == big(-1511) && t.gamma == big(218), || format!("{t:?}"))?;
    let stages = reduction_stages(&mut e, 38, 7).map_err(|x| x.to_string())?;
    let mid = stages.iter().find(|s| s.indices(7, 3) == [24, 17, 10]).ok_or("no N_24/N_17/N_10 stage")?;
    ensure((mid.alpha.clone(), mid.beta.clone(), mid.gamma.clone()) == (big(218), big(-104), big(15)), || {
        format!("{mid:?}")
    })?;
    let took = within(Duration::from_secs(1), start)?;
    Ok(format!("N_38 = 3166 N_17 - 1511 N_10 + 218 N_3 via stage (218, -104, 15) in {took:?}"))
}

fn sum_table() -> Outcome {
    let start = Instant::now();
    let mut e = SequenceEngine::new();
    let cols: [&[i64]; 4] = [&[1, 4, 17, 77, 354], &[1, 5, 24, 112, 518], &[1, 7, 35, 164, 759], &[2, 11, 52, 241]];
    for (b, col) in (1..=4).zip(cols) {
        for (r, &v) in col.iter().enumerate() {
            let r = r as i64;
            let direct = partial_sum(&mut e, ColumnSumSpec { a: 4, b, r }).map_err(|x| x.to_string())?;
            let rec = sum_recurrence_4(&mut e, b, r).map_err(|x| x.to_string())?;
            ensure(direct == big(v) && rec == big(v), || format!("S(4,{b}) at r = {r}: {direct}/{rec}, want {v}"))?;
        }
    }
    for r in 0..=500 {
        let closed = closed_sum_4_0(&mut e, r).map_err(|x| x.to_string())?;
        let direct = partial_sum(&mut e, ColumnSumSpec { a: 4, b: 0, r }).map_err(|x| x.to_string())?;
        ensure(closed == direct, || format!("closed form differs at r = {r}"))?;
    }
    let took = within(Duration::from_secs(2), start)?;
    Ok(format!("four-column sum table and closed form r = 0..500 exact in {took:?}"))
}

fn strategies_and_performance() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x4e61_7261);
    let mut e = SequenceEngine::new();
    for _ in 0..200 {
        let m = rng.gen_range(-2000..=5000);
        let want = fast_narayana(&mut e, m, Strategy::Naive).map_err(|x| x.to_string())?;
        for s in [Strategy::Matrix, Strategy::Thirds] {
            let got = fast_narayana(&mut e, m, s).map_err(|x| x.to_string())?;
            ensure(got == want, || format!("{s} disagrees at m = {m}"))?;
        }
    }
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_narayana"))
        .args(["compute", "100000", "--strategy", "matrix"])
        .output()
        .map_err(|x| x.to_string())?;
    let took = within(Duration::from_secs(5), start)?;
    ensure(out.status.success(), || format!("exit {:?}", out.status))?;
    let matrix_digits = String::from_utf8_lossy(&out.stdout).trim().len();
    let naive = Command::new(env!("CARGO_BIN_EXE_narayana"))
        .args(["compute", "100000", "--strategy", "naive"])
        .output()
        .map_err(|x| x.to_string())?;
    let naive_digits = String::from_utf8_lossy(&naive.stdout).trim().len();
    ensure(matrix_digits == naive_digits, || format!("digits {matrix_digits} vs {naive_digits}"))?;
    ensure((16_500..=16_700).contains(&matrix_digits), || format!("{matrix_digits} digits"))?;
    ensure(out.stdout == naive.stdout, || "N_100000 differs between matrix and naive".into())?;
    Ok(format!("200 sampled indices agree; compute 100000 (matrix) {took:?}, {matrix_digits} digits"))
}

struct OffByOneAt(i64);

impl Oracle for OffByOneAt {
    fn value(&self, m: i64) -> narayana::Result<BigInt> {
        Ok(narayana_matrix(m)? + i64::from(m == self.0))
    }
}

fn cli_contract() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_narayana"))
        .args(["verify", "--all"])
        .output()
        .map_err(|x| x.to_string())?;
    ensure(out.status.code() == Some(EXIT_OK), || format!("verify --all exited {:?}", out.status.code()))?;

    let argv: Vec<String> =
        ["narayana", "verify", "--all", "--format", "json"].into_iter().map(String::from).collect();
    let (mut stdout, mut stderr) = (Vec::new(), Vec::new());
    let code = run_with_oracle(&argv, &mut stdout, &mut stderr, &OffByOneAt(11));
    ensure(code == EXIT_VERIFY_FAILED, || format!("corrupted run exited {code}"))?;
    let reports: serde_json::Value = serde_json::from_slice(&stdout).map_err(|x| x.to_string())?;
    let populated = reports
        .as_array()
        .ok_or("reports are not an array")?
        .iter()
        .filter(|r| r["failures"].as_u64().unwrap_or(0) > 0)
        .all(|r| r["first_counterexample"]["expected"].is_string() && r["first_counterexample"]["params"].is_object());
    ensure(populated, || "failing report without counterexample".into())?;
    Ok("verify --all exits 0; corrupted oracle exits 1 with counterexamples".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("AC1 golden values", golden_values),
        ("AC2 coefficient tables", coefficient_tables),
        ("AC3 identity suite", identity_suite),
        ("AC4 worked reductions", worked_reductions),
        ("AC5 sum table", sum_table),
        ("AC6 strategy agreement and performance", strategies_and_performance),
        ("AC7 cli contract", cli_contract),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
