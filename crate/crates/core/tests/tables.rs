mod oracles;

use virtfib::cover::{decompose_arcs, reorient_curves, Arc, CurveId, MarkedCurveSystem, Side};

fn side_no(s: Side) -> u8 {
    match s {
        Side::One => 1,
        Side::Two => 2,
    }
}

fn ends(a: &Arc) -> ((u8, usize), (u8, usize)) {
    ((side_no(a.tail.side), a.tail.band), (side_no(a.head.side), a.head.band))
}

#[test]
fn table1_agrees_with_angle_oracle() {
    for p in [3, 5, 7, 9, 11, 13] {
        for n in 3..=7 {
            let arcs = decompose_arcs(&MarkedCurveSystem::new(p, n));
            for i in 0..p {
                for k in 0..p {
                    if i == k {
                        continue;
                    }
                    for slot in (1..2 * n).step_by(2) {
                        let a = arcs.arc(CurveId::new(i, k), slot);
                        let (t, h) = oracles::table1_from_angles(p, n, i, k, slot);
                        assert_eq!(
                            (side_no(a.tail.side), a.tail.band, a.tail.class),
                            t,
                            "tail of L{slot}_{{{i},{k}}}, p={p} n={n}"
                        );
                        assert_eq!(
                            (side_no(a.head.side), a.head.band, a.head.class),
                            h,
                            "head of L{slot}_{{{i},{k}}}, p={p} n={n}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn reorientation_reproduces_table2() {
    for p in [3, 5, 7, 9, 11, 13] {
        for n in 3..=7 {
            let arcs = reorient_curves(&decompose_arcs(&MarkedCurveSystem::new(p, n)));
            for i in 0..p {
                for k in 0..p {
                    if i == k {
                        continue;
                    }
                    for slot in 1..=2 * n {
                        let a = arcs.arc(CurveId::new(i, k), slot);
                        assert_eq!(ends(a), oracles::table2(p, i, k, slot), "{a}, p={p} n={n}");
                    }
                }
            }
        }
    }
}

#[test]
fn worked_example_rows() {
    // p = 5, L_{2,0} is low (reversed), L_{4,0} is high.
    let arcs = reorient_curves(&decompose_arcs(&MarkedCurveSystem::new(5, 3)));
    assert_eq!(arcs.arc(CurveId::new(2, 0), 1).to_string(), "L1_{2,0}: T1^2 -> T1^0");
    assert_eq!(arcs.arc(CurveId::new(4, 0), 1).to_string(), "L1_{4,0}: T2^0 -> T2^4");
    assert_eq!(arcs.arc(CurveId::new(2, 0), 5).to_string(), "L5_{2,0}: T1^0 -> T2^2");
    assert_eq!(arcs.arc(CurveId::new(4, 0), 5).to_string(), "L5_{4,0}: T1^4 -> T2^0");
}

#[test]
fn reoriented_curves_close_up() {
    for p in [3, 5, 7, 9] {
        for n in 3..=6 {
            let original = decompose_arcs(&MarkedCurveSystem::new(p, n));
            original.check_closed().unwrap();
            reorient_curves(&original).check_closed().unwrap();
        }
    }
}
