mod oracles;

use std::collections::{BTreeMap, BTreeSet};

use virtfib::cover::{decompose_arcs, reorient_curves, ArcSystem, MarkedCurveSystem};
use virtfib::transversality::{
    build_gamma, build_l_curves, compute_intersections, verify_sign_remarks, Gamma, IntersectionRecord,
    TorusKind,
};

fn model(p: usize, n: usize) -> (ArcSystem, Gamma, Vec<IntersectionRecord>) {
    let arcs = reorient_curves(&decompose_arcs(&MarkedCurveSystem::new(p, n)));
    let gamma = build_gamma(&arcs, build_l_curves(&arcs).unwrap()).unwrap();
    let records = compute_intersections(&arcs, &gamma);
    (arcs, gamma, records)
}

type Key = (usize, usize, usize, usize, u8);

fn grouped(gamma: &Gamma, records: &[IntersectionRecord]) -> BTreeMap<Key, (Vec<i8>, Vec<i8>)> {
    let kinds: BTreeMap<&str, TorusKind> = gamma.tori.iter().map(|t| (t.id.as_str(), t.kind)).collect();
    let mut out: BTreeMap<Key, (Vec<i8>, Vec<i8>)> = BTreeMap::new();
    for r in records {
        let e = out
            .entry((r.arc.i, r.arc.k, r.arc.slot, r.arc.copy, r.arc.sheet))
            .or_default();
        match kinds[r.torus.as_str()] {
            TorusKind::BoundaryParallel { .. } => e.0.extend(&r.signs),
            TorusKind::LCurve { .. } => e.1.extend(&r.signs),
        }
    }
    for v in out.values_mut() {
        v.0.sort();
        v.1.sort();
    }
    out
}

#[test]
fn every_crossing_matches_the_angular_oracle() {
    for p in (3..=13).step_by(2) {
        for n in 3..=8 {
            if n == 3 && p < 5 {
                continue;
            }
            let (_, gamma, records) = model(p, n);
            let got = grouped(&gamma, &records);
            let mut checked = 0;
            for i in 0..p {
                for k in 0..p {
                    if i == k {
                        continue;
                    }
                    for slot in (1..2 * n).step_by(2) {
                        let o = oracles::crossings(p, n, i, k, slot);
                        for copy in [0, 2 * n] {
                            for sheet in [1u8, 2] {
                                let g = got.get(&(i, k, slot, copy, sheet)).cloned().unwrap_or_default();
                                assert_eq!(g.0, o.boundary_parallel, "V: L{slot}_{{{i},{k}}} p={p} n={n}");
                                assert_eq!(g.1, o.l_tori, "l: L{slot}_{{{i},{k}}} p={p} n={n}");
                                checked += 1;
                            }
                        }
                    }
                }
            }
            assert_eq!(checked, 4 * p * (p - 1) * n);
        }
    }
}

#[test]
fn case1_remarks_exhaustive() {
    for p in [5, 7, 9] {
        let (arcs, gamma, records) = model(p, 3);
        let verdicts = verify_sign_remarks(&arcs, &gamma, &records);
        for v in &verdicts {
            assert!(v.passed, "p={p}: {v:?}");
        }
        let ids: BTreeSet<&str> = verdicts.iter().map(|v| v.id.as_str()).collect();
        for id in ["case1-boundary-twice", "case1-boundary-once", "case1-l-tori"] {
            assert!(ids.contains(id));
        }
    }
}

#[test]
fn case1_p5_covers_all_pairs() {
    let (_, gamma, records) = model(5, 3);
    let got = grouped(&gamma, &records);
    let pairs: BTreeSet<(usize, usize)> = got.keys().map(|k| (k.0, k.1)).collect();
    // 20 ordered pairs i != k; each arc appears in 2 lifts and 2 sheets.
    assert_eq!(pairs.len(), 20);
    assert_eq!(got.len(), 20 * 3 * 4);
}

#[test]
fn case2_pattern() {
    for n in [4, 5, 6] {
        for p in [3, 5, 7] {
            let (arcs, gamma, records) = model(p, n);
            assert_eq!(gamma.len(), 4);
            for v in verify_sign_remarks(&arcs, &gamma, &records) {
                assert!(v.passed, "p={p} n={n}: {v:?}");
            }
            for ((_, _, slot, _, _), (bp, l)) in grouped(&gamma, &records) {
                let ll = slot.div_ceil(2);
                let expected = if ll > 3 && ll < n { 2 } else { 1 };
                assert!(bp.is_empty());
                assert_eq!(l, vec![-1; expected]);
            }
        }
    }
}

#[test]
fn n4_has_no_double_crossings() {
    let (_, gamma, records) = model(5, 4);
    assert!(grouped(&gamma, &records).values().all(|(_, l)| l.len() == 1));
}

/// Relabel sheets `j -> j + 1` in a torus id.
fn shift_torus(id: &str, p: usize) -> String {
    match id.strip_prefix("V^").and_then(|r| r.split_once('_')) {
        Some((j, s)) if j.parse::<usize>().is_ok() => {
            format!("V^{}_{s}", (j.parse::<usize>().unwrap() + 1) % p)
        }
        _ => id.to_string(),
    }
}

#[test]
fn deck_transformation_permutes_records() {
    for (p, n) in [(5, 3), (7, 3), (3, 4), (5, 6)] {
        let (_, _, records) = model(p, n);
        let original: BTreeSet<_> = records
            .iter()
            .map(|r| (r.arc.i, r.arc.k, r.arc.slot, r.arc.copy, r.arc.sheet, r.torus.clone(), r.signs.clone()))
            .collect();
        let shifted: BTreeSet<_> = records
            .iter()
            .map(|r| {
                (
                    (r.arc.i + 1) % p,
                    (r.arc.k + 1) % p,
                    r.arc.slot,
                    r.arc.copy,
                    r.arc.sheet,
                    shift_torus(&r.torus, p),
                    r.signs.clone(),
                )
            })
            .collect();
        assert_eq!(original.len(), records.len());
        assert_eq!(original, shifted, "p={p} n={n}");
    }
}

#[test]
fn l_curves_close_in_p_steps() {
    for p in (3..=51).step_by(2) {
        let n = if p < 5 { 4 } else { 3 };
        let arcs = reorient_curves(&decompose_arcs(&MarkedCurveSystem::new(p, n)));
        let (l1, l2) = build_l_curves(&arcs).unwrap();
        for l in [&l1, &l2] {
            assert_eq!(l.visits.len(), p);
            let mut sorted = l.visits.clone();
            sorted.sort();
            assert_eq!(sorted, (0..p).collect::<Vec<_>>());
            for w in 0..p {
                assert_eq!((l.visits[w] + l.step) % p, l.visits[(w + 1) % p]);
            }
        }
        assert_eq!(l1.step, p.div_ceil(2));
        assert_eq!(l2.step, (p - 1) / 2);
    }
}
