use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::decimal;
use crate::error::{Error, Result};
use crate::seq::BinarySequence;

/// `2^n - 1`.
pub fn mersenne(n: usize) -> BigUint {
    (BigUint::one() << n) - 1u8
}

/// `2^n + 1`.
pub fn pow2_plus_one(n: usize) -> BigUint {
    (BigUint::one() << n) + 1u8
}

/// `U(2) = Σ s_i 2^i` over canonical indices `0..N`.
pub fn evaluate_u2(s: &BinarySequence) -> BigUint {
    let bytes: Vec<u8> = s
        .bits()
        .chunks(8)
        .map(|chunk| {
            chunk
                .iter()
                .enumerate()
                .fold(0u8, |acc, (k, &b)| acc | ((b as u8) << k))
        })
        .collect();
    BigUint::from_bytes_le(&bytes)
}

// a * 2^{-1} mod m, for odd m and a < m
fn half_mod(a: BigUint, m: &BigUint) -> BigUint {
    if a.is_even() {
        a >> 1
    } else {
        (a + m) >> 1
    }
}

/// `T(1/2) = Σ (-1)^{s_i} 2^{-i} mod m`, with `2^{-1} = (m+1)/2`.
///
/// Horner's rule in `2^{-1}`, so every step is a single modular halving.
pub fn evaluate_t_inv2(s: &BinarySequence, modulus: &BigUint) -> Result<BigUint> {
    if modulus.is_even() || *modulus < BigUint::from(3u8) {
        return Err(Error::EvenModulus(modulus.to_string()));
    }
    let plus = BigUint::one();
    let minus = modulus - 1u8;
    let term = |b: bool| if b { &minus } else { &plus };
    let mut acc = BigUint::zero();
    for &b in s.bits().iter().rev() {
        acc = half_mod(acc, modulus) + term(b);
        if acc >= *modulus {
            acc -= modulus;
        }
    }
    Ok(acc)
}

/// `log2(n)` for `n > 0`, accurate to double precision for any size.
pub fn log2_big(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 64 {
        return n.to_u64().map_or(f64::NAN, |v| (v as f64).log2());
    }
    let shift = bits - 64;
    let top = (n >> shift).to_u64().expect("64 significant bits");
    (top as f64).log2() + shift as f64
}

/// Exact 2-adic complexity data for one period.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdicReport {
    pub period: usize,
    #[serde(with = "decimal")]
    pub u2: BigUint,
    /// `gcd(U(2), 2^N - 1)`.
    #[serde(with = "decimal")]
    pub gcd_total: BigUint,
    /// `gcd(U(2), 2^{N/2} - 1)`, for even `N`.
    #[serde(with = "decimal::option")]
    pub gcd_minus: Option<BigUint>,
    /// `gcd(U(2), 2^{N/2} + 1)`, for even `N`.
    #[serde(with = "decimal::option")]
    pub gcd_plus: Option<BigUint>,
    /// `(2^N - 1) / gcd_total`; the authoritative complexity value.
    #[serde(with = "decimal")]
    pub quotient: BigUint,
    /// `log2(quotient)`, for display.
    pub phi2: f64,
}

pub fn two_adic_complexity(s: &BinarySequence) -> AdicReport {
    let n = s.period();
    let u2 = evaluate_u2(s);
    let m = mersenne(n);
    let gcd_total = u2.gcd(&m);
    let (gcd_minus, gcd_plus) = if n.is_multiple_of(2) {
        (
            Some(u2.gcd(&mersenne(n / 2))),
            Some(u2.gcd(&pow2_plus_one(n / 2))),
        )
    } else {
        (None, None)
    };
    let quotient = &m / &gcd_total;
    let phi2 = log2_big(&quotient);
    AdicReport {
        period: n,
        u2,
        gcd_total,
        gcd_minus,
        gcd_plus,
        quotient,
        phi2,
    }
}
