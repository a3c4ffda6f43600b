//! # narayana
//!
//! Exact arithmetic for Narayana's cows numbers `N_m` over every integer
//! index, together with the skip-recurrence, reduction, mirror-sequence and
//! column-sum identities that relate them, and a verifier that checks each
//! identity against an independent companion-matrix oracle.
//!
//! ```
//! use narayana::SequenceEngine;
//!
//! let mut engine = SequenceEngine::new();
//! assert_eq!(engine.narayana(38).unwrap().to_string(), "848491");
//! assert_eq!(narayana::narayana_matrix(40).unwrap().to_string(), "1822473");
//! ```

pub mod cli;
pub mod coefficients;
pub mod error;
pub mod identities;
pub mod sequence;
pub mod sums;
pub mod table;
pub mod verify;

pub use coefficients::{coefficient_table, is_narayana_type, p_coeff, q_coeff, CoefficientPair, RecurrenceWindow};
pub use error::{Error, Result};
pub use identities::{
    fast_narayana, mirror, pq_identity_eval, pq_reconstruct, reduce_to_base, reduction_stages, skip_eval,
    thirds_eval, MirrorPair, ReductionStage, ReductionTriple, Strategy,
};
pub use sequence::{linear_walk, narayana_matrix, Index, SequenceEngine, DEFAULT_INDEX_CAP, MATRIX_INDEX_CAP};
pub use sums::{closed_sum_4_0, partial_sum, sum_recurrence_4, ColumnSumSpec, SUM_RECURRENCE_CONSTANTS};
pub use table::{build_table, parse_csv, render, NarayanaTable, TableFormat};
pub use verify::{verify, verify_all, verify_skip_unclipped, IdentityId, MatrixOracle, Oracle, Ranges, VerificationReport};

pub use num_bigint::BigInt;
