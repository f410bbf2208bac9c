//! Periodic autocorrelation, optimality classes, and the predicted spectrum
//! of the `b = (0,0,0,0)` sequence.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::{build_params, ConstructionParams, Sign};
use crate::seq::{construct_u, BVector, BinarySequence};

fn signs(s: &BinarySequence) -> Vec<i64> {
    s.bits().iter().map(|&b| if b { -1 } else { 1 }).collect()
}

/// `C_s(τ) = Σ_i (-1)^(s_i + s_{i+τ})`, with `τ` taken mod `N`.
pub fn autocorrelation(s: &BinarySequence, tau: usize) -> i64 {
    let n = s.period();
    let tau = tau % n;
    let bits = s.bits();
    (0..n)
        .map(|i| if bits[i] == bits[(i + tau) % n] { 1 } else { -1 })
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Classification {
    /// `N ≡ 3 (mod 4)`, all out-of-phase values `-1`.
    #[serde(rename = "ideal")]
    Ideal,
    /// `N ≡ 1 (mod 4)`, values in `{1, -3}`.
    #[serde(rename = "type-2")]
    Type2,
    /// `N ≡ 2 (mod 4)`, values in `{2, -2}`.
    #[serde(rename = "type-3")]
    Type3,
    /// `N ≡ 0 (mod 4)`, all out-of-phase values `0`.
    #[serde(rename = "perfect")]
    Perfect,
    /// `N ≡ 0 (mod 4)`, values in `{0, -4}` or in `{0, 4}`.
    #[serde(rename = "optimal-value")]
    OptimalValue,
    /// `N ≡ 0 (mod 4)`, values in `{0, ±4}`.
    #[serde(rename = "optimal-magnitude")]
    OptimalMagnitude,
    #[serde(rename = "none")]
    None,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Ideal => "ideal",
            Classification::Type2 => "type-2",
            Classification::Type3 => "type-3",
            Classification::Perfect => "perfect",
            Classification::OptimalValue => "optimal-value",
            Classification::OptimalMagnitude => "optimal-magnitude",
            Classification::None => "none",
        })
    }
}

/// Classifies a full spectrum (`values[0] = N`), reporting the most specific class.
///
/// An out-of-phase value equal to `N` means the least period is a proper
/// divisor of `N`; such spectra get [`Classification::None`].
pub fn classify(values: &[i64]) -> Classification {
    let n = values.len();
    let off = values.get(1..).unwrap_or(&[]);
    if off.contains(&(n as i64)) {
        return Classification::None;
    }
    let all_in = |set: &[i64]| off.iter().all(|v| set.contains(v));
    match n % 4 {
        3 if all_in(&[-1]) => Classification::Ideal,
        1 if all_in(&[1, -3]) => Classification::Type2,
        2 if all_in(&[2, -2]) => Classification::Type3,
        0 if all_in(&[0]) => Classification::Perfect,
        0 if all_in(&[0, -4]) || all_in(&[0, 4]) => Classification::OptimalValue,
        0 if all_in(&[0, 4, -4]) => Classification::OptimalMagnitude,
        _ => Classification::None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutocorrSpectrum {
    pub period: usize,
    /// `values[τ] = C(τ)` for `τ` in `[0, N)`.
    pub values: Vec<i64>,
    pub classification: Classification,
}

impl AutocorrSpectrum {
    /// Out-of-phase values, `τ` in `[1, N)`.
    pub fn off_peak(&self) -> &[i64] {
        &self.values[1..]
    }
}

pub fn spectrum(s: &BinarySequence) -> AutocorrSpectrum {
    let n = s.period();
    let v = signs(s);
    let values: Vec<i64> = (0..n)
        .map(|tau| {
            let straight: i64 = v[..n - tau].iter().zip(&v[tau..]).map(|(a, b)| a * b).sum();
            let wrapped: i64 = v[n - tau..].iter().zip(&v[..tau]).map(|(a, b)| a * b).sum();
            straight + wrapped
        })
        .collect();
    let classification = classify(&values);
    AutocorrSpectrum {
        period: n,
        values,
        classification,
    }
}

/// The nine cases of the predicted spectrum for `b = (0,0,0,0)`, indexed by
/// `τ = τ₁ + 4τ₂` with `τ₁ ∈ {0,1,2,3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpectrumCase {
    /// `τ₁ = 0, τ₂ ≠ 0`.
    WholeRows,
    /// `τ₁ = 1, τ₂ + d ≡ 0`.
    OneSpike,
    /// `τ₁ = 1, τ₂ + d` a nonzero square.
    OneSquare,
    /// `τ₁ = 1, τ₂ + d` a non-square.
    OneNonSquare,
    /// `τ₁ = 2, τ₂ + 2d ≡ 0`.
    TwoSpike,
    /// `τ₁ = 2, τ₂ + 2d ≢ 0`.
    TwoFlat,
    /// `τ₁ = 3, τ₂ + 3d ≡ 0`.
    ThreeSpike,
    /// `τ₁ = 3, τ₂ + 3d` a nonzero square.
    ThreeSquare,
    /// `τ₁ = 3, τ₂ + 3d` a non-square.
    ThreeNonSquare,
}

impl SpectrumCase {
    pub const ALL: [SpectrumCase; 9] = [
        SpectrumCase::WholeRows,
        SpectrumCase::OneSpike,
        SpectrumCase::OneSquare,
        SpectrumCase::OneNonSquare,
        SpectrumCase::TwoSpike,
        SpectrumCase::TwoFlat,
        SpectrumCase::ThreeSpike,
        SpectrumCase::ThreeSquare,
        SpectrumCase::ThreeNonSquare,
    ];
}

/// Which case `τ ∈ [1, 4p)` falls in; `None` for `τ ≡ 0 (mod 4p)`.
pub fn spectrum_case(params: &ConstructionParams, tau: u64) -> Option<SpectrumCase> {
    let p = params.p;
    let tau = tau % (4 * p);
    if tau == 0 {
        return None;
    }
    let (t1, t2) = (tau % 4, tau / 4);
    let r = (t2 + t1 * params.d) % p;
    let square = || params.is_even_class(r as i64) == Some(true);
    Some(match (t1, r) {
        (0, _) => SpectrumCase::WholeRows,
        (1, 0) => SpectrumCase::OneSpike,
        (1, _) if square() => SpectrumCase::OneSquare,
        (1, _) => SpectrumCase::OneNonSquare,
        (2, 0) => SpectrumCase::TwoSpike,
        (2, _) => SpectrumCase::TwoFlat,
        (3, 0) => SpectrumCase::ThreeSpike,
        (3, _) if square() => SpectrumCase::ThreeSquare,
        _ => SpectrumCase::ThreeNonSquare,
    })
}

/// Which sign convention the `τ₁ = 3` rows follow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableForm {
    /// Square ↦ `4y`, non-square ↦ `-4y`, mirroring the `τ₁ = 1` rows. This
    /// is the only choice compatible with `C(τ) = C(N - τ)`, because `-1` is a
    /// square modulo every admissible prime.
    Symmetric,
    /// Square ↦ `-4y`, non-square ↦ `4y`, as commonly printed.
    Published,
}

pub fn case_value(case: SpectrumCase, y: Sign, form: TableForm) -> i64 {
    let y = y.value();
    let three = match form {
        TableForm::Symmetric => 1,
        TableForm::Published => -1,
    };
    match case {
        SpectrumCase::WholeRows => -4,
        SpectrumCase::OneSpike | SpectrumCase::TwoSpike | SpectrumCase::ThreeSpike => 4,
        SpectrumCase::OneSquare => 4 * y,
        SpectrumCase::OneNonSquare => -4 * y,
        SpectrumCase::TwoFlat => 0,
        SpectrumCase::ThreeSquare => 4 * y * three,
        SpectrumCase::ThreeNonSquare => -4 * y * three,
    }
}

fn table(params: &ConstructionParams, y: Sign, form: TableForm) -> Vec<i64> {
    let n = 4 * params.p;
    (0..n)
        .map(|tau| match spectrum_case(params, tau) {
            None => n as i64,
            Some(case) => case_value(case, y, form),
        })
        .collect()
}

/// Predicted spectrum of `construct_u(params, (0,0,0,0))` for sign `y`; entry
/// 0 holds the peak `4p`.
pub fn expected_spectrum_u2(params: &ConstructionParams, y: Sign) -> Vec<i64> {
    table(params, y, TableForm::Symmetric)
}

/// Same table with the printed `τ₁ = 3` signs. It violates `C(τ) = C(N - τ)`
/// and so matches no binary sequence; kept to make that checkable.
pub fn published_spectrum_u2(params: &ConstructionParams, y: Sign) -> Vec<i64> {
    table(params, y, TableForm::Published)
}

/// Signs `y` for which the given table form reproduces `actual` exactly.
pub fn matching_signs(params: &ConstructionParams, actual: &[i64], form: TableForm) -> Vec<Sign> {
    [Sign::Plus, Sign::Minus]
        .into_iter()
        .filter(|&y| table(params, y, form) == actual)
        .collect()
}

/// The unique `y` for which the predicted spectrum equals the computed one.
pub fn resolve_y_sign(params: &ConstructionParams) -> Result<Sign> {
    let actual = spectrum(&construct_u(params, BVector::ZERO)).values;
    match matching_signs(params, &actual, TableForm::Symmetric).as_slice() {
        [y] => Ok(*y),
        other => Err(Error::SignResolution {
            p: params.p,
            matching: other.len(),
        }),
    }
}

/// [`build_params`] followed by [`resolve_y_sign`].
pub fn resolved_params(p: u64) -> Result<ConstructionParams> {
    let params = build_params(p)?;
    let y = resolve_y_sign(&params)?;
    Ok(params.with_y(y))
}
