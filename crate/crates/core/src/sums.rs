//! Partial sums `S_{N,r}^{(a,b)} = sum_{k=0..r} N_{ak+b}` down a table
//! column, plus the closed form and recurrences available for `a = 4`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::sequence::{Index, SequenceEngine};

/// Additive constants `c_b` of the four-column sum recurrence, `b = 1..=4`.
pub const SUM_RECURRENCE_CONSTANTS: [i64; 4] = [-1, 1, 2, 1];

/// Identifies `S_{N,r}^{(a,b)}`. `b = 0` is admitted so that `sum N_{4k}`
/// can be expressed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColumnSumSpec {
    pub a: Index,
    pub b: Index,
    pub r: Index,
}

impl ColumnSumSpec {
    pub fn new(a: Index, b: Index, r: Index) -> Result<Self> {
        let spec = Self { a, b, r };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        if self.a < 1 {
            return Err(Error::arg(format!("column count a must be at least 1, got {}", self.a)));
        }
        if !(0..=self.a).contains(&self.b) {
            return Err(Error::arg(format!("column b must lie in [0, {}], got {}", self.a, self.b)));
        }
        if self.r < 0 {
            return Err(Error::arg(format!("row count r must be nonnegative, got {}", self.r)));
        }
        Ok(())
    }
}

/// Direct summation.
pub fn partial_sum(engine: &mut SequenceEngine, spec: ColumnSumSpec) -> Result<BigInt> {
    spec.validate()?;
    let mut acc = BigInt::zero();
    for k in 0..=spec.r {
        acc += engine.get(spec.a * k + spec.b)?;
    }
    Ok(acc)
}

/// `sum_{k=0..r} N_{4k} = (N_{4(r+1)} - N_{4r} + N_{4(r-1)} - 1) / 3`.
pub fn closed_sum_4_0(engine: &mut SequenceEngine, r: Index) -> Result<BigInt> {
    if r < 0 {
        return Err(Error::arg(format!("r must be nonnegative, got {r}")));
    }
    let numerator = closed_sum_numerator(engine, r)?;
    let (q, rem) = numerator.div_rem(&BigInt::from(3));
    if !rem.is_zero() {
        return Err(Error::Internal(format!("closed-form numerator {numerator} not divisible by 3")));
    }
    Ok(q)
}

/// `N_{4(r+1)} - N_{4r} + N_{4(r-1)} - 1`.
pub fn closed_sum_numerator(engine: &mut SequenceEngine, r: Index) -> Result<BigInt> {
    let mut v = engine.narayana(4 * (r + 1))?;
    v -= engine.get(4 * r)?;
    v += engine.get(4 * (r - 1))?;
    Ok(v - 1)
}

/// `S_{N,r}^{(4,b)}` for `1 <= b <= 4` via
/// `S_r = 5 S_{r-1} - 2 S_{r-2} + S_{r-3} + c_b`, seeded with `S_0..S_2`.
pub fn sum_recurrence_4(engine: &mut SequenceEngine, b: Index, r: Index) -> Result<BigInt> {
    if !(1..=4).contains(&b) {
        return Err(Error::arg(format!("recurrence needs 1 <= b <= 4, got {b}")));
    }
    if r < 0 {
        return Err(Error::arg(format!("r must be nonnegative, got {r}")));
    }
    let seed = |engine: &mut SequenceEngine, k| partial_sum(engine, ColumnSumSpec { a: 4, b, r: k });
    if r <= 2 {
        return seed(engine, r);
    }
    let c = SUM_RECURRENCE_CONSTANTS[(b - 1) as usize];
    let mut s0 = seed(engine, 0)?;
    let mut s1 = seed(engine, 1)?;
    let mut s2 = seed(engine, 2)?;
    for _ in 3..=r {
        let next = &s2 * 5 - &s1 * 2 + &s0 + c;
        s0 = std::mem::replace(&mut s1, std::mem::replace(&mut s2, next));
    }
    Ok(s2)
}
