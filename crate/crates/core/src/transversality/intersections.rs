//! Crossings of lifted odd arcs with the tori of `Γ`.
//!
//! A lane crosses an arc exactly when the arc ends on the lane's side of
//! the lane's band next to a class the lane covers. The sign of such a
//! crossing is `ω · σ(side) · (+1 at a tail, -1 at a head)`: an arc
//! leaving the north boundary crosses an eastbound lane from left to
//! right, which counts as `+1`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::gamma::{Gamma, TorusKind};
use super::lcurves::Lane;
use crate::cover::{ArcSystem, CoverCase, CurveId, Side};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ArcRef {
    pub i: usize,
    pub k: usize,
    pub slot: usize,
    /// Lift index, `0` or `2n`.
    pub copy: usize,
    pub sheet: u8,
}

impl ArcRef {
    pub fn curve(&self) -> CurveId {
        CurveId::new(self.i, self.k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct IntersectionRecord {
    pub arc: ArcRef,
    pub torus: String,
    pub count: usize,
    pub signs: Vec<i8>,
}

/// Nonzero records for every odd arc of a non-core curve, both lifts and
/// both sheets, sorted by arc and then torus id.
pub fn compute_intersections(arcs: &ArcSystem, gamma: &Gamma) -> Vec<IntersectionRecord> {
    assert!(arcs.reoriented, "crossing signs are read off the reoriented arcs");
    let n = arcs.system.n;
    let mut out = Vec::new();
    for sheet in [1u8, 2] {
        // Lanes by the boundary circle they run along.
        let mut by_circle: HashMap<(usize, Side), Vec<(usize, &Lane)>> = HashMap::new();
        let tori: Vec<_> = gamma.in_sheet(sheet).collect();
        for (t, torus) in tori.iter().enumerate() {
            for lane in &torus.lanes {
                by_circle.entry((lane.band, lane.side)).or_default().push((t, lane));
            }
        }
        for arc in arcs.odd_arcs().filter(|a| !a.curve.is_core()) {
            let mut hits: BTreeMap<usize, Vec<i8>> = BTreeMap::new();
            for (end, at_tail) in [(&arc.tail, 1i8), (&arc.head, -1)] {
                let Some(lanes) = by_circle.get(&(end.band, end.side)) else { continue };
                for (t, lane) in lanes {
                    if lane.crosses(end) {
                        hits.entry(*t).or_default().push(lane.omega * end.side.sign() * at_tail);
                    }
                }
            }
            for copy in [0, 2 * n] {
                for (t, signs) in &hits {
                    out.push(IntersectionRecord {
                        arc: ArcRef {
                            i: arc.curve.i,
                            k: arc.curve.k,
                            slot: arc.slot,
                            copy,
                            sheet,
                        },
                        torus: tori[*t].id.clone(),
                        count: signs.len(),
                        signs: signs.clone(),
                    });
                }
            }
        }
    }
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemarkVerdict {
    pub id: String,
    pub statement: String,
    pub checked: usize,
    pub passed: bool,
    /// First few violations, empty on success.
    pub counterexamples: Vec<String>,
}

const MAX_COUNTEREXAMPLES: usize = 10;

struct Tally {
    verdict: RemarkVerdict,
}

impl Tally {
    fn new(id: &str, statement: &str) -> Self {
        Self {
            verdict: RemarkVerdict {
                id: id.into(),
                statement: statement.into(),
                checked: 0,
                passed: true,
                counterexamples: Vec::new(),
            },
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.verdict.checked += 1;
        if !ok {
            self.verdict.passed = false;
            if self.verdict.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.verdict.counterexamples.push(what());
            }
        }
    }
}

/// Crossing signs of one lifted arc, split by torus kind.
#[derive(Default, Clone, Debug)]
struct ArcCrossings {
    boundary_parallel: Vec<i8>,
    l_tori: Vec<i8>,
}

fn sorted(mut v: Vec<i8>) -> Vec<i8> {
    v.sort();
    v
}

pub fn verify_sign_remarks(
    arcs: &ArcSystem,
    gamma: &Gamma,
    records: &[IntersectionRecord],
) -> Vec<RemarkVerdict> {
    let (p, n) = (arcs.system.p, arcs.system.n);
    let kinds: BTreeMap<&str, (TorusKind, u8)> =
        gamma.tori.iter().map(|t| (t.id.as_str(), (t.kind, t.sheet))).collect();
    let mut by_arc: BTreeMap<ArcRef, ArcCrossings> = BTreeMap::new();
    for sheet in [1u8, 2] {
        for copy in [0, 2 * n] {
            for arc in arcs.odd_arcs().filter(|a| !a.curve.is_core()) {
                by_arc.entry(ArcRef {
                    i: arc.curve.i,
                    k: arc.curve.k,
                    slot: arc.slot,
                    copy,
                    sheet,
                })
                .or_default();
            }
        }
    }
    let mut stray = Tally::new(
        "records-well-formed",
        "every record names a known torus in its own sheet and count equals the number of signs",
    );
    for r in records {
        let found = kinds.get(r.torus.as_str());
        let same_sheet = found.is_some_and(|(_, s)| *s == r.arc.sheet);
        stray.check(
            same_sheet && r.count == r.signs.len() && by_arc.contains_key(&r.arc),
            || format!("{r:?}"),
        );
        let Some((kind, _)) = found else { continue };
        let Some(entry) = by_arc.get_mut(&r.arc) else { continue };
        match kind {
            TorusKind::BoundaryParallel { .. } => entry.boundary_parallel.extend(&r.signs),
            TorusKind::LCurve { .. } => entry.l_tori.extend(&r.signs),
        }
    }

    let mut copies = Tally::new(
        "lifts-agree",
        "both lifts r = 0, 2n and both sheets of an arc carry identical crossings",
    );
    for (a, c) in &by_arc {
        let base = ArcRef { copy: 0, sheet: 1, ..a.clone() };
        let b = &by_arc[&base];
        copies.check(
            sorted(c.boundary_parallel.clone()) == sorted(b.boundary_parallel.clone())
                && sorted(c.l_tori.clone()) == sorted(b.l_tori.clone()),
            || format!("{a:?} differs from {base:?}"),
        );
    }

    let mut out = vec![stray.verdict, copies.verdict];
    let label = |a: &ArcRef| format!("L{}_{{{},{}}} r={} s={}", a.slot, a.i, a.k, a.copy, a.sheet);
    match gamma.case {
        CoverCase::Case1 => {
            let mut twice = Tally::new(
                "case1-boundary-twice",
                "L1 with i-k <= (p-1)/2 and L3 with i-k > (p-1)/2 meet the boundary-parallel tori twice with opposite signs",
            );
            let mut once = Tally::new(
                "case1-boundary-once",
                "L5 meets the boundary-parallel tori once positively and no other arc meets them",
            );
            let mut l_once = Tally::new(
                "case1-l-tori",
                "the l-tori meet every L1 and L3 exactly once negatively and miss L5",
            );
            for (a, c) in &by_arc {
                let low = a.curve().is_low(p);
                let bp = sorted(c.boundary_parallel.clone());
                match (a.slot, low) {
                    (1, true) | (3, false) => {
                        twice.check(bp == [-1, 1], || format!("{} has {bp:?}", label(a)))
                    }
                    (5, _) => once.check(bp == [1], || format!("{} has {bp:?}", label(a))),
                    _ => once.check(bp.is_empty(), || format!("{} has {bp:?}", label(a))),
                }
                let l = &c.l_tori;
                if a.slot == 5 {
                    l_once.check(l.is_empty(), || format!("{} has {l:?}", label(a)));
                } else {
                    l_once.check(l == &[-1], || format!("{} has {l:?}", label(a)));
                }
            }
            out.extend([twice.verdict, once.verdict, l_once.verdict]);
        }
        CoverCase::Case2 => {
            let mut pattern = Tally::new(
                "case2-l-tori",
                "every odd arc meets the l-tori negatively, once for l in {1,2,3,n} and twice for 3 < l < n",
            );
            let mut none = Tally::new("case2-no-boundary", "no boundary-parallel tori are used");
            none.check(
                gamma.tori.iter().all(|t| !t.is_boundary_parallel()),
                || "Γ contains a boundary-parallel torus".into(),
            );
            for (a, c) in &by_arc {
                let l = a.slot.div_ceil(2);
                let expected = if l > 3 && l < n { 2 } else { 1 };
                let ok = c.l_tori.len() == expected && c.l_tori.iter().all(|&s| s == -1);
                pattern.check(ok && c.boundary_parallel.is_empty(), || {
                    format!("{} has {:?}, expected {expected} negative", label(a), c.l_tori)
                });
            }
            out.extend([pattern.verdict, none.verdict]);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{decompose_arcs, reorient_curves, MarkedCurveSystem};
    use crate::transversality::gamma::build_gamma;
    use crate::transversality::lcurves::build_l_curves;

    fn run(p: usize, n: usize) -> (Vec<IntersectionRecord>, Vec<RemarkVerdict>) {
        let arcs = reorient_curves(&decompose_arcs(&MarkedCurveSystem::new(p, n)));
        let gamma = build_gamma(&arcs, build_l_curves(&arcs).unwrap()).unwrap();
        let records = compute_intersections(&arcs, &gamma);
        let verdicts = verify_sign_remarks(&arcs, &gamma, &records);
        (records, verdicts)
    }

    #[test]
    fn case1_remarks_hold() {
        for p in [5, 7, 9] {
            let (_, v) = run(p, 3);
            assert_eq!(v.len(), 5);
            for r in &v {
                assert!(r.passed, "p={p}: {r:?}");
            }
        }
    }

    #[test]
    fn case2_remarks_hold() {
        for (p, n) in [(3, 4), (3, 5), (5, 6), (7, 5)] {
            let (_, v) = run(p, n);
            for r in &v {
                assert!(r.passed, "p={p} n={n}: {r:?}");
            }
        }
    }

    #[test]
    fn slot7_crossed_twice_for_n5() {
        let (records, _) = run(3, 5);
        let r: Vec<_> = records
            .iter()
            .filter(|r| r.arc.slot == 7 && r.arc.copy == 0 && r.arc.sheet == 1)
            .collect();
        assert!(!r.is_empty());
        let mut per_arc: BTreeMap<(usize, usize), Vec<i8>> = BTreeMap::new();
        for rec in r {
            per_arc.entry((rec.arc.i, rec.arc.k)).or_default().extend(&rec.signs);
        }
        assert_eq!(per_arc.len(), 6);
        assert!(per_arc.values().all(|s| s == &[-1, -1]));
    }

    #[test]
    fn tampered_record_is_reported() {
        let arcs = reorient_curves(&decompose_arcs(&MarkedCurveSystem::new(5, 3)));
        let gamma = build_gamma(&arcs, build_l_curves(&arcs).unwrap()).unwrap();
        let mut records = compute_intersections(&arcs, &gamma);
        let idx = records.iter().position(|r| r.arc.slot == 5).unwrap();
        records[idx].signs[0] = -records[idx].signs[0];
        let v = verify_sign_remarks(&arcs, &gamma, &records);
        let bad: Vec<_> = v.iter().filter(|r| !r.passed).collect();
        assert!(!bad.is_empty());
        assert!(bad.iter().all(|r| !r.counterexamples.is_empty()));
    }
}
