//! Identity registry and numeric checker.
//!
//! Every identity is evaluated through the library's own routines and
//! compared against values from an independent [`Oracle`], by default the
//! companion-matrix evaluator. Each checker clips the requested ranges to the
//! side conditions of its identity.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::coefficients::{p_coeff, q_coeff};
use crate::error::{Error, Result};
use crate::identities::{
    fast_narayana, mirror, pq_identity_eval, pq_reconstruct, reduce_to_base, skip_eval, thirds_eval, Strategy,
};
use crate::sequence::{narayana_matrix, Index, SequenceEngine};
use crate::sums::{closed_sum_4_0, partial_sum, sum_recurrence_4, ColumnSumSpec, SUM_RECURRENCE_CONSTANTS};
use crate::table::ser_decimal;

/// Source of reference values `N_m`.
pub trait Oracle: Sync {
    fn value(&self, m: Index) -> Result<BigInt>;
}

/// Reference values from [`narayana_matrix`].
#[derive(Debug, Clone, Copy, Default)]
pub struct MatrixOracle;

impl Oracle for MatrixOracle {
    fn value(&self, m: Index) -> Result<BigInt> {
        narayana_matrix(m)
    }
}

macro_rules! identities {
    ($($variant:ident => $name:literal, $statement:literal;)*) => {
        /// Closed set of verifiable identities.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId {
            $($variant,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $name,)*
                }
            }

            /// The statement this identity checks.
            pub fn statement(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $statement,)*
                }
            }
        }

        impl FromStr for IdentityId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(IdentityId::$variant),)*
                    other => Err(Error::arg(format!("unknown identity {other:?}"))),
                }
            }
        }
    };
}

identities! {
    BaseRecurrence => "base_recurrence", "N_m = N_{m-1} + N_{m-3}; N_0 = 0, N_1 = N_2 = 1";
    NegativeExtension => "negative_extension", "N_{-(s+1)} = -N_{-(s-1)} + N_{-(s-2)} for s >= 2; N_0 = N_{-1} = 0, N_{-2} = 1";
    Lemma1A2 => "lemma1_a2", "N_m = N_{m-2} + 2N_{m-4} + N_{m-6} for all m";
    Lemma1A3 => "lemma1_a3", "N_m = 4N_{m-3} - 3N_{m-6} + N_{m-9} for all m";
    Lemma1A4 => "lemma1_a4", "N_m = 5N_{m-4} - 2N_{m-8} + N_{m-12} for all m";
    CoeffTable1To8 => "coeff_table_1_8", "(p_a, q_a) for a = 1..8 is (1,0),(1,2),(4,-3),(5,-2),(6,5),(10,-1),(15,-7),(21,6)";
    PNarayanaType => "p_narayana_type", "p_{s+3} = p_{s+2} + p_s";
    QRecurrence => "q_recurrence", "q_{s+3} = q_s - q_{s+1}";
    QAntisymmetry => "q_antisymmetry", "q_s = -p_{-s}";
    PClosedForm => "p_closed_form", "p_s = N_s + 3N_{s-2}";
    SkipRecurrence => "skip_recurrence", "N_m = p_a N_{m-a} + q_a N_{m-2a} + N_{m-3a} for 1 <= a < m";
    ReductionBase => "reduction_base", "N_{ar+b} = alpha N_{2a+b} + beta N_{a+b} + gamma N_b for 1 <= b <= a < m";
    ThirdsFormula => "thirds_formula", "N_m = p_a N_{2a} + q_a N_a (m = 3a); N_m = p_a N_{floor(2m/3)+1} + q_a N_{floor(m/3+1/2)+1} + 1 otherwise";
    PqSplit => "pq_split", "N_m = (P_m + Q_m)/2, N_{-m} = (P_m - Q_m)/2";
    PqIdentity => "pq_identity", "N_m = P_{m+4} - Q_{m+2} - P_{m+1} for m >= 1";
    PqPRecurrence => "pq_p_recurrence", "P_m = P_{m-3} + Q_{m-2} + N_{m-4}";
    SumClosed40 => "sum_closed_4_0", "sum_{k=0..r} N_{4k} = (N_{4(r+1)} - N_{4r} + N_{4(r-1)} - 1)/3";
    SumDiv3 => "sum_div3", "N_{4(r+1)} - N_{4r} + N_{4(r-1)} - 1 = 0 (mod 3)";
    SumRecurrence4b => "sum_recurrence_4b", "S_r = 5S_{r-1} - 2S_{r-2} + S_{r-3} + c_b, (c_1..c_4) = (-1, 1, 2, 1), r >= 3";
    StrategyAgreement => "strategy_agreement", "naive, matrix and thirds evaluation agree with the oracle";
}

impl Serialize for IdentityId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Inclusive parameter ranges for `m`, `a` and `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Ranges {
    pub m: (Index, Index),
    pub a: (Index, Index),
    pub r: (Index, Index),
}

impl Default for Ranges {
    fn default() -> Self {
        Self { m: (-200, 1000), a: (1, 40), r: (0, 200) }
    }
}

impl Ranges {
    pub fn validate(&self) -> Result<()> {
        for (name, (lo, hi)) in [("m", self.m), ("a", self.a), ("r", self.r)] {
            if lo > hi {
                return Err(Error::arg(format!("empty {name} range: {lo} > {hi}")));
            }
        }
        Ok(())
    }

    /// Symmetric window `[-A, A]` for coefficient identities, `A = max |a|`.
    fn s_span(&self) -> (Index, Index) {
        let span = self.a.0.abs().max(self.a.1.abs());
        (-span, span)
    }
}

fn clip(range: (Index, Index), lo: Index) -> std::ops::RangeInclusive<Index> {
    range.0.max(lo)..=range.1
}

/// A failing parameter tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub params: BTreeMap<String, Index>,
    pub detail: String,
    #[serde(serialize_with = "ser_decimal")]
    pub expected: BigInt,
    #[serde(serialize_with = "ser_decimal")]
    pub actual: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub domain: String,
    pub checked: u64,
    pub failures: u64,
    pub first_counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// One check may compare several quantities; it fails if any differ.
struct Check<'p> {
    params: &'p [(&'static str, Index)],
    mismatch: Option<(String, BigInt, BigInt)>,
}

impl Check<'_> {
    fn eq(&mut self, detail: &str, expected: BigInt, actual: BigInt) {
        if self.mismatch.is_none() && expected != actual {
            self.mismatch = Some((detail.to_owned(), expected, actual));
        }
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    failures: u64,
    first: Option<Counterexample>,
}

impl Tally {
    fn check(&mut self, params: &[(&'static str, Index)], body: impl FnOnce(&mut Check) -> Result<()>) -> Result<()> {
        let mut c = Check { params, mismatch: None };
        body(&mut c)?;
        self.checked += 1;
        if let Some((detail, expected, actual)) = c.mismatch {
            self.failures += 1;
            if self.first.is_none() {
                let params = c.params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
                self.first = Some(Counterexample { params, detail, expected, actual });
            }
        }
        Ok(())
    }

    fn report(self, identity: IdentityId, domain: String) -> VerificationReport {
        VerificationReport {
            identity,
            domain,
            checked: self.checked,
            failures: self.failures,
            first_counterexample: self.first,
        }
    }
}

/// Per-checker state: a private engine plus a cached oracle.
struct Ctx<'o> {
    engine: SequenceEngine,
    oracle: &'o dyn Oracle,
    cache: HashMap<Index, BigInt>,
}

impl<'o> Ctx<'o> {
    fn new(oracle: &'o dyn Oracle) -> Self {
        Self { engine: SequenceEngine::new(), oracle, cache: HashMap::new() }
    }

    /// Oracle `N_m`.
    fn n(&mut self, m: Index) -> Result<BigInt> {
        if let Some(v) = self.cache.get(&m) {
            return Ok(v.clone());
        }
        let v = self.oracle.value(m)?;
        self.cache.insert(m, v.clone());
        Ok(v)
    }

    /// Engine `N_m`.
    fn e(&mut self, m: Index) -> Result<BigInt> {
        self.engine.narayana(m)
    }

    /// Oracle `N_s + 3 N_{s-2}`.
    fn p(&mut self, s: Index) -> Result<BigInt> {
        Ok(self.n(s)? + self.n(s - 2)? * 3)
    }

    /// `(p_a, q_a)` solved from the skip recurrence at two consecutive
    /// indices `m = 2a + k`, using oracle values only. `None` when every
    /// tried system is singular or the solution is not integral.
    fn solve_pair(&mut self, a: Index) -> Result<Option<(BigInt, BigInt)>> {
        for k in 1..=12 {
            let (x1, y1) = (self.n(a + k)?, self.n(k)?);
            let (x2, y2) = (self.n(a + k + 1)?, self.n(k + 1)?);
            let det = &x1 * &y2 - &x2 * &y1;
            if det.is_zero() {
                continue;
            }
            let r1 = self.n(2 * a + k)? - self.n(k - a)?;
            let r2 = self.n(2 * a + k + 1)? - self.n(k + 1 - a)?;
            let (p, p_rem) = (&r1 * &y2 - &r2 * &y1).div_rem(&det);
            let (q, q_rem) = (&x1 * &r2 - &x2 * &r1).div_rem(&det);
            if !p_rem.is_zero() || !q_rem.is_zero() {
                return Ok(None);
            }
            return Ok(Some((p, q)));
        }
        Ok(None)
    }
}

const COEFF_TABLE: [(i64, i64); 8] = [(1, 0), (1, 2), (4, -3), (5, -2), (6, 5), (10, -1), (15, -7), (21, 6)];

/// Published `p_s` for `s = -8..=8`.
fn published_p(s: Index) -> Option<i64> {
    const NEG: [i64; 9] = [-6, 7, 1, -5, 2, 3, -2, 0, 3]; // s = -8..=0
    match s {
        -8..=0 => Some(NEG[(s + 8) as usize]),
        1..=8 => Some(COEFF_TABLE[(s - 1) as usize].0),
        _ => None,
    }
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn fmt_range((lo, hi): (Index, Index)) -> String {
    format!("[{lo}, {hi}]")
}

fn run_checker(id: IdentityId, ranges: &Ranges, ctx: &mut Ctx) -> Result<VerificationReport> {
    let mut t = Tally::default();
    let m_range = ranges.m;
    let domain = match id {
        IdentityId::BaseRecurrence => {
            for m in clip(m_range, Index::MIN) {
                t.check(&[("m", m)], |c| {
                    let want = ctx.n(m)?;
                    c.eq("engine N_m vs oracle", want.clone(), ctx.e(m)?);
                    c.eq("N_{m-1} + N_{m-3}", want.clone(), ctx.e(m - 1)? + ctx.e(m - 3)?);
                    if let 0..=2 = m {
                        c.eq("initial value", big(i64::from(m != 0)), want);
                    }
                    Ok(())
                })?;
            }
            format!("m in {}", fmt_range(m_range))
        }
        IdentityId::NegativeExtension => {
            let hi = m_range.1.min(0);
            for m in m_range.0..=hi {
                t.check(&[("m", m)], |c| {
                    let want = ctx.n(m)?;
                    match m {
                        0 | -1 => c.eq("initial value", big(0), want),
                        -2 => c.eq("initial value", big(1), want),
                        _ => c.eq("-N_{m+2} + N_{m+3}", want, ctx.e(m + 3)? - ctx.e(m + 2)?),
                    }
                    Ok(())
                })?;
            }
            format!("m in [{}, {hi}] (m <= 0)", m_range.0)
        }
        IdentityId::Lemma1A2 | IdentityId::Lemma1A3 | IdentityId::Lemma1A4 => {
            let (a, p, q) = match id {
                IdentityId::Lemma1A2 => (2, 1, 2),
                IdentityId::Lemma1A3 => (3, 4, -3),
                _ => (4, 5, -2),
            };
            for m in clip(m_range, Index::MIN) {
                t.check(&[("m", m)], |c| {
                    let want = ctx.n(m)?;
                    let literal = ctx.e(m - a)? * p + ctx.e(m - 2 * a)? * q + ctx.e(m - 3 * a)?;
                    c.eq("literal coefficients", want.clone(), literal);
                    c.eq("skip_eval", want, skip_eval(&mut ctx.engine, m, a)?);
                    Ok(())
                })?;
            }
            format!("a = {a}, m in {} (all integers)", fmt_range(m_range))
        }
        IdentityId::CoeffTable1To8 => {
            let span = ranges.a.0.max(1)..=ranges.a.1.min(8);
            for a in span.clone() {
                let (p, q) = COEFF_TABLE[(a - 1) as usize];
                t.check(&[("a", a)], |c| {
                    c.eq("p_a", big(p), p_coeff(&mut ctx.engine, a)?);
                    c.eq("q_a", big(q), q_coeff(&mut ctx.engine, a)?);
                    for m in clip(m_range, Index::MIN) {
                        let rhs = ctx.n(m - a)? * p + ctx.n(m - 2 * a)? * q + ctx.n(m - 3 * a)?;
                        c.eq("tabulated pair recurrence", ctx.n(m)?, rhs);
                    }
                    Ok(())
                })?;
            }
            format!("a in [{}, {}], recurrence over m in {}", span.start(), span.end(), fmt_range(m_range))
        }
        IdentityId::PNarayanaType => {
            let s_span = ranges.s_span();
            for s in s_span.0..=s_span.1 {
                t.check(&[("s", s)], |c| {
                    let lhs = ctx.p(s + 3)?;
                    let rhs = p_coeff(&mut ctx.engine, s + 2)? + p_coeff(&mut ctx.engine, s)?;
                    c.eq("p_{s+2} + p_s", lhs, rhs);
                    Ok(())
                })?;
            }
            format!("s in {}", fmt_range(s_span))
        }
        IdentityId::QRecurrence => {
            let s_span = ranges.s_span();
            for s in s_span.0..=s_span.1 {
                t.check(&[("s", s)], |c| {
                    let lhs = -ctx.p(-(s + 3))?;
                    let rhs = q_coeff(&mut ctx.engine, s)? - q_coeff(&mut ctx.engine, s + 1)?;
                    c.eq("q_s - q_{s+1}", lhs, rhs);
                    Ok(())
                })?;
            }
            format!("s in {}", fmt_range(s_span))
        }
        IdentityId::QAntisymmetry | IdentityId::PClosedForm => {
            let s_span = ranges.s_span();
            let is_q = id == IdentityId::QAntisymmetry;
            for s in s_span.0..=s_span.1 {
                t.check(&[("s", s)], |c| {
                    let got = if is_q { q_coeff(&mut ctx.engine, s)? } else { p_coeff(&mut ctx.engine, s)? };
                    if s == 0 {
                        // the skip recurrence is degenerate at s = 0
                        let want = if is_q { -ctx.p(0)? } else { big(3) };
                        c.eq("s = 0", want, got.clone());
                    } else {
                        match ctx.solve_pair(s)? {
                            Some((p, q)) => {
                                c.eq("solved from skip recurrence", if is_q { q } else { p }, got.clone());
                            }
                            None => c.eq("skip system has a unique integral solution", big(1), big(0)),
                        }
                    }
                    if is_q && (1..=8).contains(&s) {
                        c.eq("tabulated q_s", big(COEFF_TABLE[(s - 1) as usize].1), got.clone());
                        let mirrored = published_p(-s).map(|v| -v).expect("published range");
                        c.eq("-p_{-s} from published table", big(mirrored), got);
                    } else if !is_q {
                        if let Some(v) = published_p(s) {
                            c.eq("published p_s", big(v), got);
                        }
                    }
                    Ok(())
                })?;
            }
            format!("s in {}", fmt_range(s_span))
        }
        IdentityId::SkipRecurrence => {
            for a in clip(ranges.a, 1) {
                for m in clip(m_range, a + 1) {
                    t.check(&[("m", m), ("a", a)], |c| {
                        c.eq("skip_eval", ctx.n(m)?, skip_eval(&mut ctx.engine, m, a)?);
                        Ok(())
                    })?;
                }
            }
            format!("a in {}, m in {}, a < m", fmt_range(ranges.a), fmt_range(m_range))
        }
        IdentityId::ReductionBase => {
            for a in clip(ranges.a, 1) {
                for m in clip(m_range, a + 1) {
                    t.check(&[("m", m), ("a", a)], |c| {
                        let tr = reduce_to_base(&mut ctx.engine, m, a)?;
                        let b = tr.b;
                        let combo = &tr.alpha * ctx.n(2 * a + b)? + &tr.beta * ctx.n(a + b)? + &tr.gamma * ctx.n(b)?;
                        c.eq("alpha N_{2a+b} + beta N_{a+b} + gamma N_b", ctx.n(m)?, combo);
                        Ok(())
                    })?;
                }
            }
            format!("a in {}, m in {}, m >= a + 1", fmt_range(ranges.a), fmt_range(m_range))
        }
        IdentityId::ThirdsFormula => {
            for m in clip(m_range, 3) {
                t.check(&[("m", m)], |c| {
                    c.eq("thirds_eval", ctx.n(m)?, thirds_eval(&mut ctx.engine, m)?);
                    Ok(())
                })?;
            }
            format!("m in {}, m >= 3", fmt_range(m_range))
        }
        IdentityId::PqSplit => {
            for m in clip(m_range, 1) {
                t.check(&[("m", m)], |c| {
                    let (pos, neg) = pq_reconstruct(&mut ctx.engine, m)?;
                    c.eq("(P + Q)/2", ctx.n(m)?, pos);
                    c.eq("(P - Q)/2", ctx.n(-m)?, neg);
                    Ok(())
                })?;
            }
            format!("m in {}, m >= 1", fmt_range(m_range))
        }
        IdentityId::PqIdentity => {
            for m in clip(m_range, 1) {
                t.check(&[("m", m)], |c| {
                    c.eq("P_{m+4} - Q_{m+2} - P_{m+1}", ctx.n(m)?, pq_identity_eval(&mut ctx.engine, m)?);
                    Ok(())
                })?;
            }
            format!("m in {}, m >= 1", fmt_range(m_range))
        }
        IdentityId::PqPRecurrence => {
            for m in clip(m_range, 5) {
                t.check(&[("m", m)], |c| {
                    let want = ctx.n(m)? + ctx.n(-m)?;
                    let rhs = mirror(&mut ctx.engine, m - 3)?.p + mirror(&mut ctx.engine, m - 2)?.q + ctx.e(m - 4)?;
                    c.eq("P_{m-3} + Q_{m-2} + N_{m-4}", want, rhs);
                    Ok(())
                })?;
            }
            format!("m in {}, m >= 5", fmt_range(m_range))
        }
        IdentityId::SumClosed40 => {
            let mut running = BigInt::zero();
            for k in 0..ranges.r.0.max(0) {
                running += ctx.n(4 * k)?;
            }
            for r in clip(ranges.r, 0) {
                running += ctx.n(4 * r)?;
                t.check(&[("r", r)], |c| {
                    c.eq("closed form", running.clone(), closed_sum_4_0(&mut ctx.engine, r)?);
                    c.eq("partial_sum", running.clone(), partial_sum(&mut ctx.engine, ColumnSumSpec { a: 4, b: 0, r })?);
                    Ok(())
                })?;
            }
            format!("r in {}, r >= 0", fmt_range(ranges.r))
        }
        IdentityId::SumDiv3 => {
            for r in clip(ranges.r, 0) {
                t.check(&[("r", r)], |c| {
                    let numerator: BigInt = ctx.n(4 * (r + 1))? - ctx.n(4 * r)? + ctx.n(4 * (r - 1))? - 1;
                    c.eq("numerator mod 3", big(0), numerator.mod_floor(&big(3)));
                    Ok(())
                })?;
            }
            format!("r in {}, r >= 0", fmt_range(ranges.r))
        }
        IdentityId::SumRecurrence4b => {
            for b in 1..=4 {
                let mut sums = Vec::new();
                let mut running = BigInt::zero();
                for k in 0..=ranges.r.1.max(0) {
                    running += ctx.n(4 * k + b)?;
                    sums.push(running.clone());
                }
                for r in clip(ranges.r, 3) {
                    t.check(&[("b", b), ("r", r)], |c| {
                        let want = sums[r as usize].clone();
                        let cb = SUM_RECURRENCE_CONSTANTS[(b - 1) as usize];
                        let u = r as usize;
                        let literal = &sums[u - 1] * 5 - &sums[u - 2] * 2 + &sums[u - 3] + cb;
                        c.eq("5S_{r-1} - 2S_{r-2} + S_{r-3} + c_b", want.clone(), literal);
                        c.eq("sum_recurrence_4", want, sum_recurrence_4(&mut ctx.engine, b, r)?);
                        Ok(())
                    })?;
                }
            }
            format!("b in [1, 4], r in {}, r >= 3", fmt_range(ranges.r))
        }
        IdentityId::StrategyAgreement => {
            for m in clip(m_range, Index::MIN) {
                t.check(&[("m", m)], |c| {
                    let want = ctx.n(m)?;
                    for s in Strategy::ALL {
                        c.eq(s.name(), want.clone(), fast_narayana(&mut ctx.engine, m, s)?);
                    }
                    Ok(())
                })?;
            }
            format!("m in {}", fmt_range(m_range))
        }
    };
    Ok(t.report(id, domain))
}

/// Checks one identity against the companion-matrix oracle.
pub fn verify(id: IdentityId, ranges: &Ranges) -> Result<VerificationReport> {
    verify_with(id, ranges, &MatrixOracle)
}

pub fn verify_with(id: IdentityId, ranges: &Ranges, oracle: &dyn Oracle) -> Result<VerificationReport> {
    ranges.validate()?;
    run_checker(id, ranges, &mut Ctx::new(oracle))
}

/// One report per identity, in registry order.
pub fn verify_all(ranges: &Ranges) -> Result<Vec<VerificationReport>> {
    verify_all_with(ranges, &MatrixOracle)
}

/// Runs every checker on its own thread, each with a private engine.
pub fn verify_all_with(ranges: &Ranges, oracle: &dyn Oracle) -> Result<Vec<VerificationReport>> {
    ranges.validate()?;
    std::thread::scope(|scope| {
        let handles: Vec<_> = IdentityId::ALL
            .iter()
            .map(|&id| scope.spawn(move || run_checker(id, ranges, &mut Ctx::new(oracle))))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Err(Error::Internal("checker panicked".into()))))
            .collect()
    })
}

/// The skip recurrence over every `a` in range without the `a < m` clip.
/// Informational: the stated domain is `a < m`.
pub fn verify_skip_unclipped(ranges: &Ranges) -> Result<VerificationReport> {
    verify_skip_unclipped_with(ranges, &MatrixOracle)
}

pub fn verify_skip_unclipped_with(ranges: &Ranges, oracle: &dyn Oracle) -> Result<VerificationReport> {
    ranges.validate()?;
    let mut ctx = Ctx::new(oracle);
    let mut t = Tally::default();
    for a in clip(ranges.a, 1) {
        for m in clip(ranges.m, Index::MIN) {
            t.check(&[("m", m), ("a", a)], |c| {
                c.eq("skip_eval", ctx.n(m)?, skip_eval(&mut ctx.engine, m, a)?);
                Ok(())
            })?;
        }
    }
    let domain = format!("a in {}, m in {} (informational, no a < m clip)", fmt_range(ranges.a), fmt_range(ranges.m));
    Ok(t.report(IdentityId::SkipRecurrence, domain))
}
