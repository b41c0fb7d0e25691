//! Seifert invariants of the double branched cover `W_K` and of the
//! circle bundle `Y -> F` over the `p^2`-fold cover of its base orbifold.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exact::{self, Rational};
use crate::tangle::MontesinosLink;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeifertError {
    #[error("denominators are not all equal")]
    UnequalDenominators,
    #[error("numerator sum is zero, so the cover has trivial Euler number")]
    ZeroEuler,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum GeometryFailure {
    EulerNumberZero,
    OrbifoldNotHyperbolic,
}

impl fmt::Display for GeometryFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EulerNumberZero => f.write_str("e = 0"),
            Self::OrbifoldNotHyperbolic => f.write_str("chi >= 0"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Geometry {
    SL2Tilde,
    Other(GeometryFailure),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeifertInvariants {
    #[serde(with = "crate::exact::ratio_string")]
    pub euler_number_wk: Rational,
    #[serde(with = "crate::exact::ratio_string")]
    pub chi_orb: Rational,
    pub geometry: Geometry,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverEulerData {
    #[serde(with = "crate::exact::int_string")]
    pub e: BigInt,
    #[serde(with = "crate::exact::int_string")]
    pub e_tilde: BigInt,
    pub e_tilde_odd: bool,
}

fn denominator(link: &MontesinosLink) -> Result<BigInt, SeifertError> {
    link.common_denominator()
        .cloned()
        .ok_or(SeifertError::UnequalDenominators)
}

/// `e(W_K) = -Σq_i / p`.
pub fn euler_number(link: &MontesinosLink) -> Result<Rational, SeifertError> {
    let p = denominator(link)?;
    Ok(-exact::ratio(link.q_sum(), p))
}

/// `χ(B_K) = 2 - n + n/p` for `n` cone points of order `p` on the sphere.
pub fn orbifold_euler_char(link: &MontesinosLink) -> Result<Rational, SeifertError> {
    let p = denominator(link)?;
    let n = BigInt::from(link.n());
    Ok(exact::from_int(&(BigInt::from(2) - &n)) + exact::ratio(n, p))
}

pub fn classify_geometry(euler: &Rational, chi: &Rational) -> Geometry {
    if euler.is_zero() {
        Geometry::Other(GeometryFailure::EulerNumberZero)
    } else if !chi.is_negative() {
        Geometry::Other(GeometryFailure::OrbifoldNotHyperbolic)
    } else {
        Geometry::SL2Tilde
    }
}

pub fn seifert_invariants(link: &MontesinosLink) -> Result<SeifertInvariants, SeifertError> {
    let euler_number_wk = euler_number(link)?;
    let chi_orb = orbifold_euler_char(link)?;
    let geometry = classify_geometry(&euler_number_wk, &chi_orb);
    Ok(SeifertInvariants {
        euler_number_wk,
        chi_orb,
        geometry,
    })
}

/// Euler number of `Y -> F` and the per-block share `ẽ = e/p`, with the
/// total split evenly across the `p` blocks.
pub fn cover_euler_data(link: &MontesinosLink) -> Result<CoverEulerData, SeifertError> {
    let p = denominator(link)?;
    let e_tilde = -link.q_sum();
    if e_tilde.is_zero() {
        return Err(SeifertError::ZeroEuler);
    }
    Ok(CoverEulerData {
        e: &p * &e_tilde,
        e_tilde_odd: exact::is_odd(&e_tilde),
        e_tilde,
    })
}

/// Orbifold Euler characteristic of a sphere with `cone_points` cone
/// points of order `p`.
pub fn sphere_orbifold_chi(cone_points: u64, p: u64) -> Rational {
    exact::ratio(2 - cone_points as i64, 1) + exact::ratio(cone_points as i64, p as i64)
}
