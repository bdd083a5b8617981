//! Octonion-valued third-order linear recurrences.
//!
//! A sequence `V_n = r V_{n-1} + s V_{n-2} + t V_{n-3}` is lifted to
//! octonions `O_n = Σ_l V_{n+l} e_l`. The crate computes terms exactly over
//! integers or rationals, finds the roots of the characteristic cubic, and
//! checks each closed-form identity either exactly or, for root-based
//! formulas, in double precision against exact values.
//!
//! ```
//! use trioct::{OctSequenceContext, Preset};
//! use num_bigint::BigInt;
//!
//! let ctx = OctSequenceContext::<BigInt>::new(Preset::Tribonacci.params(), 10);
//! assert_eq!(ctx.v(7).to_string(), "24");
//! ```

pub mod cubic;
pub mod error;
pub mod genfunc;
pub mod io;
pub mod octonion;
pub mod octseq;
pub mod paramfile;
pub mod reference;
pub mod scalar;
pub mod sequence;
pub mod verify;

pub use cubic::{
    binet_scalar, cubic_roots, discriminant, discriminant_exact, BinetKind, CubicRoots,
};
pub use error::{Error, Result};
pub use genfunc::{generating_function, gf_expand, OctPolynomial, RationalGF};
pub use octonion::{AnyOctonion, MultiplicationTable, Octonion, BASIS_TABLE};
pub use octseq::{omega_const, shift_coefficients, OctSequenceContext, QuadApprox, RootLine};
pub use reference::ReferenceTables;
pub use scalar::{Exact, Field, Ring, Scalar, ScalarKind};
pub use sequence::{
    companion_identity, direct_sum, partial_sum_formula, seq_term, seq_terms, u_term, Preset,
    RecurrenceParams,
};
pub use verify::{run_suite, Category, SuiteConfig, VerificationReport};
