//! Interleaved binary sequences of period `4p` with optimal autocorrelation
//! magnitude: construction from quartic cyclotomic classes, periodic
//! autocorrelation, exact 2-adic complexity and linear complexity, and
//! machine checks of the congruence and gcd identities these sequences obey.

pub mod complexity;
pub mod correlation;
pub mod error;
pub mod numtheory;
pub mod seq;

pub use complexity::{
    evaluate_t_inv2, evaluate_u2, linear_complexity, two_adic_complexity, verify_all, AdicReport,
    CheckOutcome, VerificationReport,
};
pub use correlation::{resolve_y_sign, resolved_params, spectrum, AutocorrSpectrum, Classification};
pub use error::{Error, Result};
pub use numtheory::{build_params, is_admissible_prime, ConstructionParams, Sign};
pub use seq::{construct_u, BVector, BinarySequence};
