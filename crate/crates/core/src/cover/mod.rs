//! The `p^2`-fold cover tower `F -> F' -> B_K` and the combinatorial
//! curve system on `F`.
//!
//! The first cover is defined by `h1(x_1) = 1`, `h1(x_2) = -1` and
//! `h1(x_r) = 0` for `r >= 3`; it unwraps `c_1` and `c_2` and leaves `p`
//! cone points over each remaining `c_r`. The second cover sends every
//! remaining cone generator to `1` and produces a smooth surface `F`.

pub mod arcs;
pub mod complex;
pub mod curves;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exact::Rational;
use crate::seifert::{self, sphere_orbifold_chi};
use crate::tangle::{validate_theorem_hypotheses, CaseTag, MontesinosLink, NotApplicableReason};

pub use arcs::{
    boundary_graph, check_f1_connected, decompose_arcs, reorient_curves, Arc, ArcSystem, ConnectivityReport,
    Endpoint, Region, Side,
};
pub use complex::{CellCounts, CoverComplex, Monodromy};
pub use curves::{build_curve_system, CurveId, MarkedCurveSystem, MarkedPoint};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CoverCase {
    /// Three tangles, `p >= 5`.
    Case1,
    /// More than three tangles.
    Case2,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("link is outside the construction: {0}")]
    NotApplicable(NotApplicableReason),
    #[error("denominator {0} is too large for the combinatorial model")]
    DenominatorOverflow(BigInt),
    #[error("first-level images do not sum to zero mod p")]
    UnbalancedMonodromy,
    #[error("p^2 chi_orb = {0} does not give an integral genus")]
    NonIntegralGenus(Rational),
    #[error("cover consistency check failed: {0}")]
    Inconsistent(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverTower {
    pub p: usize,
    pub n: usize,
    pub case: CoverCase,
    /// `h1(x_r)` as residues mod `p`, for `r = 1..n`.
    pub h1_images: Vec<usize>,
    /// `h2` on the cone generators of `F'`, one entry per cone point.
    pub h2_images: Vec<usize>,
    pub fprime_cone_points: usize,
    #[serde(with = "crate::exact::ratio_string")]
    pub fprime_chi_orb: Rational,
    /// Euler characteristic of the underlying surface of `F'`.
    pub fprime_underlying_chi: i64,
    pub f_chi: i64,
    pub f_genus: u64,
    /// Cell structure of `F` from the glued-polygon model.
    pub f_cells: CellCounts,
}

/// First-level images: `x_1 -> 1`, `x_2 -> -1`, the rest `0`.
pub fn h1_images(n: usize) -> Vec<i64> {
    let mut h = vec![0i64; n];
    h[0] = 1;
    h[1] = -1;
    h
}

fn gcd(a: usize, b: usize) -> usize {
    num_integer::Integer::gcd(&a, &b)
}

pub fn build_cover_tower(link: &MontesinosLink) -> Result<CoverTower, CoverError> {
    let report = validate_theorem_hypotheses(link);
    let case = match report.case {
        CaseTag::Case1 => CoverCase::Case1,
        CaseTag::Case2 => CoverCase::Case2,
        CaseTag::NotApplicable(reason) => return Err(CoverError::NotApplicable(reason)),
    };
    let p_big = link.common_denominator().expect("gated").clone();
    let p = p_big
        .to_usize()
        .filter(|&p| p <= u32::MAX as usize)
        .ok_or_else(|| CoverError::DenominatorOverflow(p_big.clone()))?;
    let n = link.n();
    let h1 = h1_images(n);

    // Cone points of F' from the local images: c_r has gcd(h1(x_r), p)
    // preimages, each of cone order gcd(h1(x_r), p).
    let mut fprime_cone_points = 0;
    for &h in &h1 {
        let g = gcd(h.rem_euclid(p as i64) as usize, p);
        if g > 1 {
            fprime_cone_points += g;
        }
    }

    let chi_base = seifert::orbifold_euler_char(link).map_err(|e| CoverError::Inconsistent(e.to_string()))?;
    let p_rat = Rational::from_integer(BigInt::from(p));
    let fprime_chi_orb = &chi_base * &p_rat;
    let cone_defect = Rational::from_integer(BigInt::from(fprime_cone_points))
        * (Rational::from_integer(BigInt::from(1)) - Rational::new(1.into(), p.into()));
    let underlying = &fprime_chi_orb + &cone_defect;
    if !underlying.is_integer() {
        return Err(CoverError::Inconsistent(format!(
            "underlying Euler characteristic of F' is {underlying}"
        )));
    }
    let fprime_underlying_chi = underlying.to_integer().to_i64().expect("small");
    if fprime_underlying_chi != 2 {
        return Err(CoverError::Inconsistent(format!(
            "F' is not a sphere: underlying chi = {fprime_underlying_chi}"
        )));
    }
    if fprime_chi_orb != sphere_orbifold_chi(fprime_cone_points as u64, p as u64) {
        return Err(CoverError::Inconsistent("F' orbifold chi mismatch".into()));
    }

    let chi_f = &fprime_chi_orb * &p_rat;
    if !chi_f.is_integer() || !(chi_f.to_integer() % 2u32).is_zero() {
        return Err(CoverError::NonIntegralGenus(chi_f));
    }
    let f_chi = chi_f.to_integer().to_i64().expect("small");
    if f_chi > 2 {
        return Err(CoverError::NonIntegralGenus(chi_f));
    }
    let f_genus = ((2 - f_chi) / 2) as u64;

    let mono = Monodromy::first_level(p, &h1).ok_or(CoverError::UnbalancedMonodromy)?;
    let first = mono.build();
    if first.cone_points(p) != fprime_cone_points {
        return Err(CoverError::Inconsistent(format!(
            "glued F' has {} cone points, expected {fprime_cone_points}",
            first.cone_points(p)
        )));
    }
    let mono = mono.with_unit_second_level();
    let mut h2_images = Vec::new();
    for (_, ramification, shift) in mono.first_level_loops() {
        if ramification == 1 {
            h2_images.push(shift);
        } else if shift != 0 {
            return Err(CoverError::Inconsistent(
                "second level is nontrivial around a smooth point of F'".into(),
            ));
        }
    }
    if h2_images.len() != fprime_cone_points || h2_images.iter().any(|&s| s != 1) {
        return Err(CoverError::Inconsistent(format!(
            "second-level images {h2_images:?} are not all 1"
        )));
    }
    let second = mono.build();
    if second.cone_points(p) != 0 {
        return Err(CoverError::Inconsistent("F still has cone points".into()));
    }
    if second.counts.euler_characteristic() != f_chi {
        return Err(CoverError::Inconsistent(format!(
            "glued F has chi {}, expected {f_chi}",
            second.counts.euler_characteristic()
        )));
    }

    Ok(CoverTower {
        p,
        n,
        case,
        h1_images: h1.iter().map(|&h| h.rem_euclid(p as i64) as usize).collect(),
        h2_images,
        fprime_cone_points,
        fprime_chi_orb,
        fprime_underlying_chi,
        f_chi,
        f_genus,
        f_cells: second.counts,
    })
}
