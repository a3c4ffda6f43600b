//! Skip-recurrence coefficients `(p_a, q_a)`.
//!
//! For every integer `a`, `N_m = p_a N_{m-a} + q_a N_{m-2a} + N_{m-3a}` with
//! `p_a = N_a + 3 N_{a-2}` and `q_a = -p_{-a}`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sequence::{Index, SequenceEngine};

/// `(a, p_a, q_a)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientPair {
    pub a: Index,
    #[serde(serialize_with = "crate::table::ser_decimal")]
    pub p: BigInt,
    #[serde(serialize_with = "crate::table::ser_decimal")]
    pub q: BigInt,
}

/// Consecutive terms `n_start, n_{start+1}, ...` of a sequence under test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceWindow {
    pub start: Index,
    pub terms: Vec<BigInt>,
}

impl RecurrenceWindow {
    pub fn new(start: Index, terms: Vec<BigInt>) -> Self {
        Self { start, terms }
    }
}

/// `p_a = N_a + 3 N_{a-2}`, defined for every integer `a`.
pub fn p_coeff(engine: &mut SequenceEngine, a: Index) -> Result<BigInt> {
    let lead = engine.get(a)?.clone();
    Ok(lead + engine.get(a - 2)? * 3)
}

/// `q_a = -p_{-a}`.
pub fn q_coeff(engine: &mut SequenceEngine, a: Index) -> Result<BigInt> {
    Ok(-p_coeff(engine, -a)?)
}

pub fn coefficient_pair(engine: &mut SequenceEngine, a: Index) -> Result<CoefficientPair> {
    Ok(CoefficientPair { a, p: p_coeff(engine, a)?, q: q_coeff(engine, a)? })
}

/// Pairs for `a = 1 ..= a_max`.
pub fn coefficient_table(engine: &mut SequenceEngine, a_max: Index) -> Result<Vec<CoefficientPair>> {
    if a_max < 1 {
        return Err(Error::arg(format!("a_max must be at least 1, got {a_max}")));
    }
    (1..=a_max).map(|a| coefficient_pair(engine, a)).collect()
}

/// True iff `n_{r+3} = n_{r+2} + n_r` at every offset the window covers.
pub fn is_narayana_type(window: &RecurrenceWindow) -> Result<bool> {
    if window.terms.len() < 4 {
        return Err(Error::arg(format!(
            "window needs at least 4 terms, got {}",
            window.terms.len()
        )));
    }
    Ok(window.terms.windows(4).all(|w| w[3] == &w[2] + &w[0]))
}
