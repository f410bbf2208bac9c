//! 2-adic and linear complexity, plus the congruence and gcd checks for the
//! interleaved construction.

mod adic;
mod linear;
mod verify;

pub use adic::{
    evaluate_t_inv2, evaluate_u2, log2_big, mersenne, pow2_plus_one, two_adic_complexity,
    AdicReport,
};
pub use linear::{berlekamp_massey, linear_complexity};
pub use verify::{
    correlation_identity_sides, gauss_sum, product_congruence_rhs, product_lhs, verify_all,
    verify_correlation_identity, verify_gauss_square, verify_gcd_lemmas, verify_params,
    verify_product_congruence, verify_spectrum_table, verify_theorems, CheckOutcome, Form,
    GcdLemmas, TheoremChecks, Variant, VerificationReport,
};

/// Serde adapters writing big integers as decimal strings.
pub(crate) mod decimal {
    use num_bigint::BigUint;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_str_radix(10))
    }

    pub mod option {
        use num_bigint::BigUint;
        use serde::Serializer;

        pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(v) => s.serialize_str(&v.to_str_radix(10)),
                None => s.serialize_none(),
            }
        }
    }
}
