//! How the lifted curve arcs cross each block `M_2^j`.
//!
//! Inside band `j` every even arc of a non-core curve joins `T_1^j` and
//! `T_2^j`. After reorientation the slot-2 family runs `T_1 -> T_2` and
//! the slot-4 and higher families run `T_2 -> T_1`, so the two kinds of
//! crossings sit on opposite sides of the singular points of the
//! horizontal foliation on the punctured annulus.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cover::{ArcSystem, Side};
use crate::report::{all_passed, Check};
use crate::tangle::LinkClass;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ArcFamily {
    Slot2,
    Slot4,
    /// Slots `2l` with `l >= 3`.
    Higher,
}

impl ArcFamily {
    fn of(slot: usize) -> Self {
        match slot {
            2 => ArcFamily::Slot2,
            4 => ArcFamily::Slot4,
            _ => ArcFamily::Higher,
        }
    }

    /// Expected `(tail side, head side)`.
    pub fn expected(self) -> (Side, Side) {
        match self {
            ArcFamily::Slot2 => (Side::One, Side::Two),
            ArcFamily::Slot4 | ArcFamily::Higher => (Side::Two, Side::One),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyProfile {
    pub family: ArcFamily,
    pub direction: String,
    /// Arcs of this family in each block (the same for every block).
    pub arcs_per_block: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileReport {
    pub class: LinkClass,
    pub singular_points_per_annulus: usize,
    pub families: Vec<FamilyProfile>,
    pub alternates: bool,
    pub checks: Vec<Check>,
    pub passed: bool,
}

fn direction(tail: Side, head: Side) -> String {
    format!("T{}->T{}", tail.index(), head.index())
}

/// `singular_points` comes from the horizontal solution (`c` of the basis
/// change); the profile checks it against the link class.
pub fn singular_point_profile(arcs: &ArcSystem, class: LinkClass, singular_points: usize) -> ProfileReport {
    let (p, n) = (arcs.system.p, arcs.system.n);
    let mut checks = Vec::new();
    let expected_points = match class {
        LinkClass::Knot => 2,
        LinkClass::TwoComponentLink => 1,
    };
    checks.push(Check::new(
        "singular-count",
        singular_points == expected_points,
        format!("{singular_points} singular points per punctured annulus, expected {expected_points}"),
    ));
    checks.push(Check::new(
        "reoriented",
        arcs.reoriented,
        "profile is read from the reoriented system",
    ));

    let mut per_block: BTreeMap<(usize, ArcFamily), usize> = BTreeMap::new();
    let mut bad = Vec::new();
    for arc in arcs.even_arcs().filter(|a| !a.curve.is_core()) {
        let family = ArcFamily::of(arc.slot);
        let band = arc.marked.expect("even arcs carry a marked point").band();
        *per_block.entry((band, family)).or_default() += 1;
        let ok = arc.tail.band == band
            && arc.head.band == band
            && (arc.tail.side, arc.head.side) == family.expected();
        if !ok && bad.len() < 10 {
            bad.push(arc.to_string());
        }
    }
    checks.push(Check::new(
        "directions",
        bad.is_empty(),
        if bad.is_empty() {
            "every even arc crosses its block in its family's direction".to_string()
        } else {
            format!("wrong direction: {}", bad.join("; "))
        },
    ));

    let mut families = Vec::new();
    for family in [ArcFamily::Slot2, ArcFamily::Slot4, ArcFamily::Higher] {
        // Slot 2 and 4 arcs in block j come from L_{i,j}, i != j; each
        // higher slot from L_{j,k}, k != j.
        let expected = match family {
            ArcFamily::Slot2 | ArcFamily::Slot4 => p - 1,
            ArcFamily::Higher => (n - 2) * (p - 1),
        };
        let counts: Vec<usize> = (0..p).map(|j| per_block.get(&(j, family)).copied().unwrap_or(0)).collect();
        checks.push(Check::new(
            match family {
                ArcFamily::Slot2 => "count-slot2",
                ArcFamily::Slot4 => "count-slot4",
                ArcFamily::Higher => "count-higher",
            },
            counts.iter().all(|&c| c == expected),
            format!("{expected} arcs per block expected, found {counts:?}"),
        ));
        let (t, h) = family.expected();
        families.push(FamilyProfile {
            family,
            direction: direction(t, h),
            arcs_per_block: expected,
        });
    }
    let alternates = ArcFamily::Slot2.expected() != ArcFamily::Slot4.expected();
    checks.push(Check::new(
        "alternation",
        alternates,
        "slot-2 and slot-4 families cross in opposite directions",
    ));
    let passed = all_passed(&checks);
    ProfileReport {
        class,
        singular_points_per_annulus: singular_points,
        families,
        alternates,
        checks,
        passed,
    }
}
