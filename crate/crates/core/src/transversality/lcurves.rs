//! The auxiliary curves `l_1`, `l_2` in `F_1`.
//!
//! Near each band boundary the model keeps parallel "lanes". A lane on
//! side `s` of band `j` covers some marked-point classes; every odd arc
//! ending on `β_s^j` next to a covered class crosses the lane once.
//! Positions along the band are `0..2n`: class `c` sits at `2(c-1)`,
//! odd positions are gaps. The core `L*_{j,j}` runs towards decreasing
//! positions ("east"); `β_1` is on its left ("north").
//!
//! `l_r` lives on side `r` and, for each `j` in the orbit of
//! `j -> j + step`, follows
//!
//! * `a_r^j`: from gap 1 east across class 1 to gap `2n-1`,
//! * a copy of `L3_{j+step, j}` to gap 3,
//! * `b_r^j`: west across classes `3..n-1` to gap `2n-3`,
//! * a copy of `L1_{j, j+step}` to gap 1 of band `j + step`,
//!
//! with `step = (p+1)/2` for `l_1` and `(p-1)/2` for `l_2`.

use num_integer::Integer;
use serde::Serialize;

use super::TransversalityError;
use crate::cover::{Arc, ArcSystem, CurveId, Endpoint, MarkedPoint, Side};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SegmentKind {
    /// Boundary-parallel circle covering the whole band side.
    Full,
    A,
    B,
}

/// A piece of a vertical-torus quotient curve running parallel to a band
/// boundary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lane {
    pub kind: SegmentKind,
    pub band: usize,
    pub side: Side,
    /// Distance from the boundary circle, 1 = closest.
    pub depth: u8,
    /// Marked-point classes whose arcs the lane crosses.
    pub classes: Vec<usize>,
    /// Gaps where the lane starts and stops (`None` for closed lanes).
    pub entry_gap: Option<usize>,
    pub exit_gap: Option<usize>,
    /// `+1` if the lane runs like the core curve, `-1` if against it.
    pub omega: i8,
}

impl Lane {
    pub fn crosses(&self, end: &Endpoint) -> bool {
        self.band == end.band && self.side == end.side && self.classes.contains(&end.class)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Hand {
    Left,
    Right,
}

/// A connecting arc in `F_1` parallel to an odd arc of the curve system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Connector {
    pub parent: CurveId,
    pub parent_slot: usize,
    pub from_band: usize,
    pub to_band: usize,
    pub hand: Hand,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LCurve {
    /// 1 or 2.
    pub index: u8,
    pub side: Side,
    pub step: usize,
    /// Bands in visiting order, starting from 0.
    pub visits: Vec<usize>,
    pub lanes: Vec<Lane>,
    pub connectors: Vec<Connector>,
}

/// Whether a gap lies west (`true`) or east of the marked point of
/// `class` on a band with `2n` positions.
fn gap_is_west(n: usize, class: usize, gap: usize) -> bool {
    let pos = 2 * (class - 1);
    (pos + 1) % (2 * n) == gap
}

/// Non-core arcs ending on `(side, band)` next to `point`, ordered from
/// east to west. A curve through the point with angle class `a` is a line
/// at angle `mπ/p` with `m = 2a mod p`; on the north side the crossing
/// moves west as `m` grows, on the south side east.
pub fn fan(arcs: &ArcSystem, point: MarkedPoint, side: Side) -> Result<Vec<Arc>, TransversalityError> {
    let sys = &arcs.system;
    let p = sys.p;
    let mut lines: Vec<(usize, CurveId)> = sys
        .curves_through(point)
        .into_iter()
        .filter(|c| !c.is_core())
        .map(|c| ((2 * sys.angle_class(c, point).expect("incident")) % p, c))
        .collect();
    lines.sort();
    if side == Side::Two {
        lines.reverse();
    }
    let target = Endpoint {
        side,
        band: point.band(),
        class: point.class,
    };
    lines
        .into_iter()
        .map(|(_, c)| {
            (1..=2 * sys.n)
                .step_by(2)
                .map(|slot| arcs.arc(c, slot))
                .find(|a| a.tail == target || a.head == target)
                .copied()
                .ok_or_else(|| {
                    TransversalityError::Model(format!(
                        "{c:?} crosses {point:?} but has no arc ending on side {side:?}"
                    ))
                })
        })
        .collect()
}

/// The hand of a parallel copy that sits on the `west` (or east) side of
/// `arc` where the arc touches `end`.
fn hand_at(arc: &Arc, end: &Endpoint, west: bool) -> Hand {
    let at_tail = &arc.tail == end;
    // Leaving the north boundary the left is west; arriving, east. The
    // south boundary is mirrored.
    let left_is_west = match end.side {
        Side::One => at_tail,
        Side::Two => !at_tail,
    };
    if left_is_west == west {
        Hand::Left
    } else {
        Hand::Right
    }
}

fn connector(
    arcs: &ArcSystem,
    parent: CurveId,
    slot: usize,
    from: (usize, usize, usize),
    to: (usize, usize, usize),
    side: Side,
) -> Result<Connector, TransversalityError> {
    let n = arcs.system.n;
    let arc = *arcs.arc(parent, slot);
    let mut hands = Vec::new();
    for (band, class, gap) in [from, to] {
        let end = Endpoint { side, band, class };
        if arc.tail != end && arc.head != end {
            return Err(TransversalityError::Model(format!(
                "{arc} does not end next to class {class} on side {side:?} of band {band}"
            )));
        }
        let west = gap_is_west(n, class, gap);
        let f = fan(arcs, MarkedPoint::new(class, band), side)?;
        let extreme = if west { f.last() } else { f.first() };
        if extreme.map(|a| (a.curve, a.slot)) != Some((parent, slot)) {
            return Err(TransversalityError::Model(format!(
                "{arc} is not the outermost arc at class {class} of band {band}"
            )));
        }
        hands.push(hand_at(&arc, &end, west));
    }
    if hands[0] != hands[1] {
        return Err(TransversalityError::Model(format!(
            "copy of {arc} would switch sides between its ends"
        )));
    }
    Ok(Connector {
        parent,
        parent_slot: slot,
        from_band: from.0,
        to_band: to.0,
        hand: hands[0],
    })
}

pub fn build_l_curve(arcs: &ArcSystem, index: u8) -> Result<LCurve, TransversalityError> {
    if !arcs.reoriented {
        return Err(TransversalityError::NotReoriented);
    }
    let (p, n) = (arcs.system.p, arcs.system.n);
    let (side, step) = match index {
        1 => (Side::One, p.div_ceil(2)),
        2 => (Side::Two, (p - 1) / 2),
        _ => return Err(TransversalityError::Model(format!("no l-curve {index}"))),
    };
    if step.gcd(&p) != 1 {
        return Err(TransversalityError::Model(format!("step {step} is not coprime to {p}")));
    }
    let mut visits = vec![0];
    loop {
        let next = (visits.last().unwrap() + step) % p;
        if next == 0 {
            break;
        }
        visits.push(next);
    }
    if visits.len() != p {
        return Err(TransversalityError::Model(format!(
            "l{index} closes after {} steps",
            visits.len()
        )));
    }

    let a_entry = 1;
    let a_exit = 2 * n - 1;
    let b_entry = 3;
    let b_exit = 2 * n - 3;
    let mut lanes = Vec::new();
    let mut connectors = Vec::new();
    for &j in &visits {
        let next = (j + step) % p;
        lanes.push(Lane {
            kind: SegmentKind::A,
            band: j,
            side,
            depth: 2,
            classes: vec![1],
            entry_gap: Some(a_entry),
            exit_gap: Some(a_exit),
            omega: 1,
        });
        connectors.push(connector(
            arcs,
            CurveId::new(next, j),
            3,
            (j, 1, a_exit),
            (j, 2, b_entry),
            side,
        )?);
        lanes.push(Lane {
            kind: SegmentKind::B,
            band: j,
            side,
            depth: 2,
            classes: (3..n).collect(),
            entry_gap: Some(b_entry),
            exit_gap: Some(b_exit),
            omega: -1,
        });
        connectors.push(connector(
            arcs,
            CurveId::new(j, next),
            1,
            (j, n, b_exit),
            (next, 1, a_entry),
            side,
        )?);
    }
    Ok(LCurve {
        index,
        side,
        step,
        visits,
        lanes,
        connectors,
    })
}

pub fn build_l_curves(arcs: &ArcSystem) -> Result<(LCurve, LCurve), TransversalityError> {
    Ok((build_l_curve(arcs, 1)?, build_l_curve(arcs, 2)?))
}
