//! Skip recurrence, column reduction, the thirds evaluator and the `P`/`Q`
//! mirror sequences.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::coefficients::{p_coeff, q_coeff};
use crate::error::{Error, Result};
use crate::sequence::{linear_walk, narayana_matrix, Index, SequenceEngine};
use crate::table::ser_decimal;

/// Indices with `|m|` below this are served straight from the memo by the
/// thirds strategy.
pub const THIRDS_THRESHOLD: Index = 64;

/// `p_a N_{m-a} + q_a N_{m-2a} + N_{m-3a}`.
///
/// Equals `N_m` whenever `a < m`. Smaller `m` is not rejected: the right-hand
/// side is computed regardless, and subscripts may go negative.
pub fn skip_eval(engine: &mut SequenceEngine, m: Index, a: Index) -> Result<BigInt> {
    if a < 1 {
        return Err(Error::arg(format!("step a must be at least 1, got {a}")));
    }
    let p = p_coeff(engine, a)?;
    let q = q_coeff(engine, a)?;
    let mut acc = p * engine.get(m - a)?;
    acc += q * engine.get(m - 2 * a)?;
    acc += engine.get(m - 3 * a)?;
    Ok(acc)
}

/// `N_m = alpha N_{2a+b} + beta N_{a+b} + gamma N_b` for `m = a r + b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionTriple {
    pub a: Index,
    pub b: Index,
    #[serde(serialize_with = "ser_decimal")]
    pub alpha: BigInt,
    #[serde(serialize_with = "ser_decimal")]
    pub beta: BigInt,
    #[serde(serialize_with = "ser_decimal")]
    pub gamma: BigInt,
}

/// One intermediate form of the reduction at column level `s`:
/// `N_m = alpha N_{a(s+2)+b} + beta N_{a(s+1)+b} + gamma N_{as+b}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionStage {
    pub level: Index,
    #[serde(serialize_with = "ser_decimal")]
    pub alpha: BigInt,
    #[serde(serialize_with = "ser_decimal")]
    pub beta: BigInt,
    #[serde(serialize_with = "ser_decimal")]
    pub gamma: BigInt,
}

impl ReductionStage {
    /// The three indices this stage combines, highest first.
    pub fn indices(&self, a: Index, b: Index) -> [Index; 3] {
        [a * (self.level + 2) + b, a * (self.level + 1) + b, a * self.level + b]
    }
}

/// Splits `m` into `(r, b)` with `m = a r + b` and `1 <= b <= a`.
pub fn column_split(m: Index, a: Index) -> (Index, Index) {
    let b = (m - 1).rem_euclid(a) + 1;
    ((m - b) / a, b)
}

fn check_reduction_args(m: Index, a: Index) -> Result<()> {
    if a < 1 {
        return Err(Error::arg(format!("step a must be at least 1, got {a}")));
    }
    if m < a + 1 {
        return Err(Error::arg(format!("reduction needs m >= a + 1, got m = {m}, a = {a}")));
    }
    Ok(())
}

/// Every stepping stage from the seed at level `r - 2` down to level 0.
///
/// Empty when `r = 1`, where `m = a + b` already sits in the first rows.
pub fn reduction_stages(engine: &mut SequenceEngine, m: Index, a: Index) -> Result<Vec<ReductionStage>> {
    check_reduction_args(m, a)?;
    let (r, _) = column_split(m, a);
    if r < 2 {
        return Ok(Vec::new());
    }
    let p = p_coeff(engine, a)?;
    let q = q_coeff(engine, a)?;
    let mut stage =
        ReductionStage { level: r - 2, alpha: BigInt::one(), beta: BigInt::zero(), gamma: BigInt::zero() };
    let mut stages = Vec::with_capacity(r as usize - 1);
    while stage.level > 0 {
        let next = ReductionStage {
            level: stage.level - 1,
            alpha: &p * &stage.alpha + &stage.beta,
            beta: &q * &stage.alpha + &stage.gamma,
            gamma: stage.alpha.clone(),
        };
        stages.push(stage);
        stage = next;
    }
    stages.push(stage);
    Ok(stages)
}

/// Expresses `N_m` through the first three entries of its column in the
/// `a`-column table.
pub fn reduce_to_base(engine: &mut SequenceEngine, m: Index, a: Index) -> Result<ReductionTriple> {
    check_reduction_args(m, a)?;
    let (_, b) = column_split(m, a);
    let triple = match reduction_stages(engine, m, a)?.pop() {
        Some(last) => ReductionTriple { a, b, alpha: last.alpha, beta: last.beta, gamma: last.gamma },
        // r = 1: N_m = N_{a+b}
        None => ReductionTriple { a, b, alpha: BigInt::zero(), beta: BigInt::one(), gamma: BigInt::zero() },
    };
    Ok(triple)
}

/// `N_m` with the step `a = floor(m/3)`, so every operand lands in the first
/// third of the index range.
pub fn thirds_eval(engine: &mut SequenceEngine, m: Index) -> Result<BigInt> {
    if m < 3 {
        return Err(Error::arg(format!("thirds evaluation needs m >= 3, got {m}")));
    }
    let a = m / 3;
    let p = p_coeff(engine, a)?;
    let q = q_coeff(engine, a)?;
    if m % 3 == 0 {
        return Ok(p * engine.get(2 * a)? + q * engine.get(a)?);
    }
    // floor(2m/3) + 1 and floor(m/3 + 1/2) + 1
    let hi = 2 * m / 3 + 1;
    let mid = (2 * m + 3) / 6 + 1;
    let mut acc = p * engine.get(hi)?;
    acc += q * engine.get(mid)?;
    Ok(acc + 1)
}

/// Evaluation strategies for [`fast_narayana`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Walk the base recurrence term by term.
    Naive,
    /// Companion-matrix powering.
    Matrix,
    /// Recursive thirds evaluation over the skip recurrence.
    Thirds,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::Naive, Strategy::Matrix, Strategy::Thirds];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Naive => "naive",
            Strategy::Matrix => "matrix",
            Strategy::Thirds => "thirds",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(Strategy::Naive),
            "matrix" => Ok(Strategy::Matrix),
            "thirds" => Ok(Strategy::Thirds),
            other => Err(Error::arg(format!("unknown strategy {other:?} (expected naive, matrix or thirds)"))),
        }
    }
}

/// `N_m` through the chosen strategy. All strategies agree.
pub fn fast_narayana(engine: &mut SequenceEngine, m: Index, strategy: Strategy) -> Result<BigInt> {
    match strategy {
        Strategy::Naive => {
            if m.unsigned_abs() > engine.cap() {
                return Err(Error::IndexOutOfRange { index: m, cap: engine.cap() });
            }
            Ok(linear_walk(m))
        }
        Strategy::Matrix => narayana_matrix(m),
        Strategy::Thirds => {
            if m.unsigned_abs() > engine.cap() {
                return Err(Error::IndexOutOfRange { index: m, cap: engine.cap() });
            }
            ThirdsEvaluator { engine, cache: HashMap::new() }.value(m)
        }
    }
}

struct ThirdsEvaluator<'a> {
    engine: &'a mut SequenceEngine,
    cache: HashMap<Index, BigInt>,
}

impl ThirdsEvaluator<'_> {
    fn value(&mut self, m: Index) -> Result<BigInt> {
        if m.abs() < THIRDS_THRESHOLD {
            return self.engine.narayana(m);
        }
        if let Some(v) = self.cache.get(&m) {
            return Ok(v.clone());
        }
        let v = if m > 0 { self.forward(m)? } else { self.backward(m)? };
        self.cache.insert(m, v.clone());
        Ok(v)
    }

    fn coeffs(&mut self, a: Index) -> Result<(BigInt, BigInt)> {
        let p: BigInt = self.value(a)? + self.value(a - 2)? * 3;
        let neg: BigInt = self.value(-a)? + self.value(-a - 2)? * 3;
        let q = -neg;
        Ok((p, q))
    }

    fn forward(&mut self, m: Index) -> Result<BigInt> {
        let a = m / 3;
        let (p, q) = self.coeffs(a)?;
        if m % 3 == 0 {
            return Ok(p * self.value(2 * a)? + q * self.value(a)?);
        }
        // N_{m-3a} is N_1 or N_2, both 1
        Ok(p * self.value(m - a)? + q * self.value(m - 2 * a)? + 1)
    }

    /// For `m < 0`, pick `a` with `m + 3a` in `{0, 1, 2}` and solve the skip
    /// recurrence for its last term.
    fn backward(&mut self, m: Index) -> Result<BigInt> {
        let a = Integer::div_ceil(&-m, &3);
        let top = m + 3 * a;
        let (p, q) = self.coeffs(a)?;
        let base = self.engine.narayana(top)?;
        Ok(base - p * self.value(m + 2 * a)? - q * self.value(m + a)?)
    }
}

/// `P_{N,m} = N_m + N_{-m}` and `Q_{N,m} = N_m - N_{-m}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MirrorPair {
    pub m: Index,
    #[serde(rename = "P", serialize_with = "ser_decimal")]
    pub p: BigInt,
    #[serde(rename = "Q", serialize_with = "ser_decimal")]
    pub q: BigInt,
}

fn check_mirror_index(m: Index) -> Result<()> {
    if m < 1 {
        return Err(Error::arg(format!("mirror sequences need m >= 1, got {m}")));
    }
    Ok(())
}

pub fn mirror(engine: &mut SequenceEngine, m: Index) -> Result<MirrorPair> {
    check_mirror_index(m)?;
    let pos = engine.narayana(m)?;
    let neg = engine.get(-m)?;
    Ok(MirrorPair { m, p: &pos + neg, q: &pos - neg })
}

fn exact_half(v: BigInt) -> Result<BigInt> {
    let (half, rem) = v.div_rem(&BigInt::from(2));
    if !rem.is_zero() {
        return Err(Error::Internal(format!("{v} is odd; mirror halves must be exact")));
    }
    Ok(half)
}

/// Recovers `(N_m, N_{-m})` as `((P + Q) / 2, (P - Q) / 2)`.
pub fn pq_reconstruct(engine: &mut SequenceEngine, m: Index) -> Result<(BigInt, BigInt)> {
    let MirrorPair { p, q, .. } = mirror(engine, m)?;
    Ok((exact_half(&p + &q)?, exact_half(p - q)?))
}

/// `P_{N,m+4} - Q_{N,m+2} - P_{N,m+1}`.
pub fn pq_identity_eval(engine: &mut SequenceEngine, m: Index) -> Result<BigInt> {
    check_mirror_index(m)?;
    let p4 = mirror(engine, m + 4)?.p;
    let q2 = mirror(engine, m + 2)?.q;
    let p1 = mirror(engine, m + 1)?.p;
    Ok(p4 - q2 - p1)
}
