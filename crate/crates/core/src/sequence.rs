//! Exact evaluation of `N_m` for any signed index.
//!
//! Two independent routes are provided: [`SequenceEngine`], which memoizes a
//! contiguous signed window of the sequence, and [`narayana_matrix`], which
//! powers the 3×3 companion matrix and never touches a memo.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Signed sequence index.
pub type Index = i64;

/// Default bound on `|m|` for the memoized engine.
pub const DEFAULT_INDEX_CAP: u64 = 10_000_000;

/// Bound on `|m|` for the matrix strategy.
pub const MATRIX_INDEX_CAP: u64 = 1 << 31;

fn check_cap(m: Index, cap: u64) -> Result<()> {
    if m.unsigned_abs() > cap {
        Err(Error::IndexOutOfRange { index: m, cap })
    } else {
        Ok(())
    }
}

/// Memoized evaluator holding `N_lo ..= N_hi` in one contiguous buffer.
///
/// The window grows upward with `N_{r+1} = N_r + N_{r-2}` and downward with
/// `N_m = N_{m+3} - N_{m+2}`. Access must be serialized; callers that need
/// concurrency should own one engine each.
#[derive(Debug, Clone)]
pub struct SequenceEngine {
    cap: u64,
    lo: Index,
    values: VecDeque<BigInt>,
}

impl Default for SequenceEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl SequenceEngine {
    pub fn new() -> Self {
        Self::with_cap(DEFAULT_INDEX_CAP)
    }

    pub fn with_cap(cap: u64) -> Self {
        let values = [0u32, 1, 1].into_iter().map(BigInt::from).collect();
        Self { cap, lo: 0, values }
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// Lowest memoized index.
    pub fn memo_lo(&self) -> Index {
        self.lo
    }

    /// Highest memoized index.
    pub fn memo_hi(&self) -> Index {
        self.lo + self.values.len() as Index - 1
    }

    fn ensure(&mut self, m: Index) -> Result<()> {
        check_cap(m, self.cap)?;
        while self.memo_hi() < m {
            let n = self.values.len();
            let next = &self.values[n - 1] + &self.values[n - 3];
            self.values.push_back(next);
        }
        while self.lo > m {
            let prev = &self.values[2] - &self.values[1];
            self.values.push_front(prev);
            self.lo -= 1;
        }
        Ok(())
    }

    /// Borrow `N_m`, extending the memo as needed.
    pub fn get(&mut self, m: Index) -> Result<&BigInt> {
        self.ensure(m)?;
        Ok(&self.values[(m - self.lo) as usize])
    }

    /// `N_m` for any integer `m` within the cap.
    pub fn narayana(&mut self, m: Index) -> Result<BigInt> {
        self.get(m).cloned()
    }

    /// `[N_lo, ..., N_hi]`.
    pub fn narayana_range(&mut self, lo: Index, hi: Index) -> Result<Vec<BigInt>> {
        if lo > hi {
            return Err(Error::arg(format!("empty range: lo {lo} > hi {hi}")));
        }
        self.ensure(lo)?;
        self.ensure(hi)?;
        let start = (lo - self.lo) as usize;
        let end = (hi - self.lo) as usize;
        Ok(self.values.range(start..=end).cloned().collect())
    }
}

/// 3×3 integer matrix used for companion-matrix powering.
#[derive(Debug, Clone, PartialEq)]
struct Mat3([[BigInt; 3]; 3]);

impl Mat3 {
    fn from_i8(rows: [[i8; 3]; 3]) -> Self {
        Mat3(rows.map(|r| r.map(BigInt::from)))
    }

    fn identity() -> Self {
        Self::from_i8([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    fn mul(&self, rhs: &Mat3) -> Mat3 {
        let cell = |i: usize, j: usize| -> BigInt {
            let mut acc = BigInt::zero();
            for k in 0..3 {
                let (x, y) = (&self.0[i][k], &rhs.0[k][j]);
                if !x.is_zero() && !y.is_zero() {
                    acc += x * y;
                }
            }
            acc
        };
        Mat3([
            [cell(0, 0), cell(0, 1), cell(0, 2)],
            [cell(1, 0), cell(1, 1), cell(1, 2)],
            [cell(2, 0), cell(2, 1), cell(2, 2)],
        ])
    }

    fn pow(&self, mut exp: u64) -> Mat3 {
        let mut result = Mat3::identity();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        result
    }
}

/// `N_m` by binary powering of the companion matrix of `x^3 = x^2 + 1`.
///
/// The forward matrix maps `(N_r, N_{r-1}, N_{r-2})` to
/// `(N_{r+1}, N_r, N_{r-1})`. Its determinant is 1, so negative offsets use
/// the exact integer inverse. Shares no state with [`SequenceEngine`].
pub fn narayana_matrix(m: Index) -> Result<BigInt> {
    check_cap(m, MATRIX_INDEX_CAP)?;
    // Start from the state at r = 2: (N_2, N_1, N_0) = (1, 1, 0).
    let offset = m - 2;
    let step = if offset >= 0 {
        Mat3::from_i8([[1, 0, 1], [1, 0, 0], [0, 1, 0]])
    } else {
        Mat3::from_i8([[0, 1, 0], [0, 0, 1], [1, -1, 0]])
    };
    let power = step.pow(offset.unsigned_abs());
    Ok(&power.0[0][0] + &power.0[0][1])
}

/// `N_m` by walking the recurrence from `(N_0, N_1, N_2)` with three rolling
/// registers. Linear time, constant memory in the number of terms.
pub fn linear_walk(m: Index) -> BigInt {
    // (a, b, c) = (N_i, N_{i+1}, N_{i+2})
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    let mut c = BigInt::one();
    if m >= 0 {
        for _ in 0..m {
            // N_{i+3} = N_{i+2} + N_i
            a += &c;
            std::mem::swap(&mut a, &mut b);
            std::mem::swap(&mut b, &mut c);
        }
        a
    } else {
        for _ in 0..m.unsigned_abs() {
            // N_{i-1} = N_{i+2} - N_{i+1}
            c -= &b;
            std::mem::swap(&mut b, &mut c);
            std::mem::swap(&mut a, &mut b);
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn golden_values() {
        let mut e = SequenceEngine::new();
        assert_eq!(e.narayana(0).unwrap(), big(0));
        assert_eq!(e.narayana(9).unwrap(), big(13));
        assert_eq!(e.narayana(-7).unwrap(), big(-2));
        assert_eq!(e.narayana(38).unwrap(), big(848491));
        assert_eq!(e.narayana(40).unwrap(), big(1822473));
    }

    #[test]
    fn ranges() {
        let mut e = SequenceEngine::new();
        let want: Vec<BigInt> = [0, 1, 1, 1, 2, 3, 4, 6, 9, 13].map(big).to_vec();
        assert_eq!(e.narayana_range(0, 9).unwrap(), want);
        assert_eq!(e.narayana_range(5, 5).unwrap(), vec![big(3)]);
        let neg: Vec<BigInt> = [5, -3, -2, 3, 0, -2, 1, 1, -1, 0, 1, 0].map(big).to_vec();
        assert_eq!(e.narayana_range(-12, -1).unwrap(), neg);
        assert!(matches!(e.narayana_range(3, 2), Err(Error::Argument(_))));
    }

    #[test]
    fn negative_initial_conditions() {
        let mut e = SequenceEngine::new();
        assert_eq!(e.narayana(-1).unwrap(), big(0));
        assert_eq!(e.narayana(-3).unwrap(), big(0));
        assert_eq!(e.narayana(-2).unwrap(), big(1));
    }

    #[test]
    fn memo_window_tracks_requests() {
        let mut e = SequenceEngine::new();
        assert_eq!((e.memo_lo(), e.memo_hi()), (0, 2));
        e.narayana(-5).unwrap();
        e.narayana(10).unwrap();
        assert_eq!((e.memo_lo(), e.memo_hi()), (-5, 10));
    }

    #[test]
    fn cap_is_enforced() {
        let mut e = SequenceEngine::with_cap(100);
        assert!(e.narayana(100).is_ok());
        assert_eq!(e.narayana(101), Err(Error::IndexOutOfRange { index: 101, cap: 100 }));
        assert!(e.narayana(-101).is_err());
        assert!(narayana_matrix((1 << 31) + 1).is_err());
        assert!(narayana_matrix(-(1 << 31) - 1).is_err());
    }

    #[test]
    fn matrix_examples() {
        assert_eq!(narayana_matrix(12).unwrap(), big(41));
        assert_eq!(narayana_matrix(0).unwrap(), big(0));
        assert_eq!(narayana_matrix(2).unwrap(), big(1));
        assert_eq!(narayana_matrix(1).unwrap(), big(1));
        assert_eq!(narayana_matrix(-12).unwrap(), big(5));
    }

    #[test]
    fn matrix_200_matches_brute_force() {
        // independent forward recurrence in a plain Vec
        let mut v = vec![big(0), big(1), big(1)];
        for i in 3..=200 {
            let next = &v[i - 1] + &v[i - 3];
            v.push(next);
        }
        assert_eq!(narayana_matrix(200).unwrap(), v[200]);
        assert_eq!(SequenceEngine::new().narayana(200).unwrap(), v[200]);
    }

    #[test]
    fn linear_walk_matches_engine() {
        let mut e = SequenceEngine::new();
        for m in -60..=60 {
            assert_eq!(linear_walk(m), e.narayana(m).unwrap(), "m = {m}");
        }
    }
}
