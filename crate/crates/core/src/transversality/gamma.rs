//! The family `Γ` of vertical tori, described by their quotient curves
//! in `F_1`, one copy per sheet `s ∈ {1, 2}` of the double cover.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::lcurves::{LCurve, Lane, SegmentKind};
use super::TransversalityError;
use crate::cover::{ArcSystem, CoverCase, Side};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TorusKind {
    /// Parallel copy of `T_1^j` (Case 1 only).
    BoundaryParallel { band: usize },
    /// Lift of `l_1` or `l_2`.
    LCurve { index: u8 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerticalTorusSpec {
    pub id: String,
    pub kind: TorusKind,
    pub sheet: u8,
    pub lanes: Vec<Lane>,
}

impl VerticalTorusSpec {
    pub fn is_boundary_parallel(&self) -> bool {
        matches!(self.kind, TorusKind::BoundaryParallel { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gamma {
    pub case: CoverCase,
    pub tori: Vec<VerticalTorusSpec>,
    pub l_curves: Vec<LCurve>,
}

impl Gamma {
    pub fn len(&self) -> usize {
        self.tori.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tori.is_empty()
    }

    pub fn in_sheet(&self, sheet: u8) -> impl Iterator<Item = &VerticalTorusSpec> {
        self.tori.iter().filter(move |t| t.sheet == sheet)
    }
}

fn boundary_parallel(n: usize, band: usize, sheet: u8) -> VerticalTorusSpec {
    VerticalTorusSpec {
        id: format!("V^{}_{sheet}", band),
        kind: TorusKind::BoundaryParallel { band },
        sheet,
        lanes: vec![Lane {
            kind: SegmentKind::Full,
            band,
            side: Side::One,
            depth: 1,
            classes: (1..=n).collect(),
            entry_gap: None,
            exit_gap: None,
            omega: 1,
        }],
    }
}

/// Lanes sharing a side and depth of the same band must not overlap:
/// their covered classes and their end gaps are disjoint, and a closed
/// lane excludes everything else.
type LaneGroups<'a> = BTreeMap<(u8, usize, Side, u8), Vec<(&'a str, &'a Lane)>>;

fn check_disjoint(tori: &[VerticalTorusSpec]) -> Result<(), TransversalityError> {
    let mut groups: LaneGroups = BTreeMap::new();
    for t in tori {
        for lane in &t.lanes {
            groups
                .entry((t.sheet, lane.band, lane.side, lane.depth))
                .or_default()
                .push((&t.id, lane));
        }
    }
    for ((sheet, band, side, depth), lanes) in groups {
        let clash = |why: &str| {
            TransversalityError::Model(format!(
                "lanes at sheet {sheet}, band {band}, side {side:?}, depth {depth} {why}"
            ))
        };
        if lanes.len() > 1 && lanes.iter().any(|(_, l)| l.kind == SegmentKind::Full) {
            return Err(clash("include a closed lane and something else"));
        }
        let mut classes = BTreeSet::new();
        let mut gaps = BTreeSet::new();
        for (_, l) in &lanes {
            for c in &l.classes {
                if !classes.insert(*c) {
                    return Err(clash("cover the same class twice"));
                }
            }
            // A lane may start and stop in the same gap (an empty b-lane).
            let ends: BTreeSet<usize> = [l.entry_gap, l.exit_gap].into_iter().flatten().collect();
            for g in ends {
                if !gaps.insert(g) {
                    return Err(clash("end in the same gap"));
                }
            }
        }
    }
    Ok(())
}

fn check_connectors(l_curves: &[LCurve]) -> Result<(), TransversalityError> {
    let mut seen = BTreeSet::new();
    for l in l_curves {
        for c in &l.connectors {
            if !seen.insert((c.parent, c.parent_slot, c.hand)) {
                return Err(TransversalityError::Model(format!(
                    "two connectors copy L{}_{{{},{}}} on the same hand",
                    c.parent_slot, c.parent.i, c.parent.k
                )));
            }
        }
    }
    Ok(())
}

/// Case 1 uses `p` boundary-parallel tori plus the two `l`-tori in each
/// sheet (`2p + 4` in all); Case 2 uses only the `l`-tori (4 in all).
pub fn build_gamma(arcs: &ArcSystem, l_curves: (LCurve, LCurve)) -> Result<Gamma, TransversalityError> {
    let (p, n, case) = (arcs.system.p, arcs.system.n, arcs.system.case);
    let l_curves = vec![l_curves.0, l_curves.1];
    let mut tori = Vec::new();
    for sheet in [1u8, 2] {
        if case == CoverCase::Case1 {
            tori.extend((0..p).map(|j| boundary_parallel(n, j, sheet)));
        }
        for l in &l_curves {
            tori.push(VerticalTorusSpec {
                id: format!("V^(l{})_{sheet}", l.index),
                kind: TorusKind::LCurve { index: l.index },
                sheet,
                lanes: l.lanes.clone(),
            });
        }
    }
    let expected = match case {
        CoverCase::Case1 => 2 * p + 4,
        CoverCase::Case2 => 4,
    };
    if tori.len() != expected {
        return Err(TransversalityError::Model(format!(
            "Γ has {} tori, expected {expected}",
            tori.len()
        )));
    }
    check_disjoint(&tori)?;
    check_connectors(&l_curves)?;
    Ok(Gamma {
        case,
        tori,
        l_curves,
    })
}
