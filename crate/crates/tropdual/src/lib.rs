//! Exact-arithmetic engine and verification toolkit for the tropical data of
//! cluster-algebra seed patterns: C-matrices (c-vectors), G-matrices
//! (g-vectors), and F-polynomials, computed along arbitrary mutation words,
//! together with mechanical verifiers for the duality identities relating
//! them and for the standard structural conjectures.
//!
//! Everything is exact: arbitrary-precision integers, exact polynomial and
//! rational-function arithmetic, zero tolerances. All public indices
//! (matrix positions, mutation directions) are 1-based, matching the usual
//! cluster-algebra conventions.
//!
//! # Quick tour
//!
//! ```
//! use tropdual::{walk, ExchangeMatrix, MutationWord};
//!
//! let b = ExchangeMatrix::from_i64(&[[0, 1], [-1, 0]]).unwrap();
//! let word: MutationWord = "1,2".parse().unwrap();
//! let point = walk(&b, &word).unwrap();
//! assert_eq!(point.f[1].to_string(), "u1*u2 + u1 + 1");
//! ```
//!
//! The `examples/` directory carries one runnable example per capability:
//! walking words, the tropical and symbolic oracles, the duality and
//! auxiliary identity verifiers, the conjecture suite, the left-end
//! recurrence, and seeded random scans. A thin `tropdual` binary exposes the
//! same functionality as `mutate`, `verify`, and `scan` subcommands.

// Dense matrix code indexes rows and columns directly throughout.
#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod matrix;
pub mod oracle;
pub mod pattern;
pub mod poly;
pub mod verify;

pub use matrix::{find_skew_symmetrizer, Axis, ExchangeMatrix, IntMat, MatrixError};
pub use oracle::{
    format_xy, separation_check, symbolic_walk, tropical_y_walk, RatFn, SeparationReport,
    SymbolicSeed, TropMonomial,
};
pub use pattern::{
    mutate_c_unconditional, mutate_matrix, sign_of_column, step_general, step_left,
    step_left_with_sign, step_right, walk, walk_matrices, words_up_to_depth, ColumnSign,
    MutationWord, PatternError, PatternPoint, SignCoherenceViolation, TropicalPoint, Walker,
    WordError,
};
pub use poly::{analyze_f, f_step, FAnalysis, PolyError, SparsePoly};
pub use verify::{
    verify_auxiliary, verify_conjecture41, verify_inverse_column_fact, verify_scalar_identity,
    verify_separation, verify_sign_coherence, verify_step_left, verify_theorem,
    verify_tropical_oracle, Verdict, VerdictStatus,
};
