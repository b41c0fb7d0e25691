mod oracles;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use oracles::Frac;
use virtfib::graph_manifold::slopes::{coefficient_table, SlopePair};
use virtfib::graph_manifold::{
    build_jsj_graph, compute_boundary_slopes, solve_general, solve_wang_yu, verify_semibundle,
    wang_yu_matrix, BasisChange, HorizontalSolution,
};
use virtfib::tangle::LinkClass;

fn frac(s: &SlopePair) -> Frac {
    Frac::new(s.t.to_i128().unwrap(), s.u.to_i128().unwrap())
}

fn solve(class: LinkClass, p: usize, e: i64) -> HorizontalSolution {
    let basis = BasisChange::for_class(class);
    let e = BigInt::from(e);
    let single = build_jsj_graph(p, &basis, &e, false).unwrap();
    let general = solve_general(&wang_yu_matrix(&single).unwrap()).unwrap();
    let closed = solve_wang_yu(p, &basis.c, &(&e * p)).unwrap();
    assert_eq!(general, closed, "p={p} ẽ={e}");
    compute_boundary_slopes(class, p, &basis, &e, &closed).unwrap()
}

fn check(class: LinkClass, c: i128, p: usize, e: i64) {
    let h = solve(class, p, e);
    let report = verify_semibundle(&h);
    assert!(report.passed && report.semibundle, "{class:?} p={p} ẽ={e}: {report:?}");
    assert_eq!(h.epsilon1, -h.epsilon2);

    let t = &h.table;
    assert_eq!(frac(&t.hub_t1).add(frac(&t.hub_t2)), Frac(0, 1));
    assert_eq!(
        frac(&t.block_t1).add(frac(&t.block_t2)).add(frac(&t.block_t3)),
        Frac(0, 1)
    );
    assert_eq!(frac(&t.block_t3), Frac::new(-4, e as i128 * c * c), "ẽ={e}");
    for s in [&t.hub_t1, &t.hub_t2, &t.block_t1, &t.block_t2, &t.block_t3] {
        assert!(s.is_reduced(), "ẽ={e}: {s:?}");
    }
}

#[test]
fn knot_sweep() {
    for e in (-99i64..=99).filter(|e| e % 2 != 0) {
        for p in [5, 7] {
            check(LinkClass::Knot, 2, p, e);
        }
    }
}

#[test]
fn link_sweep() {
    for e in (-98i64..=98).filter(|e| e % 2 == 0 && *e != 0) {
        for p in [5, 7] {
            check(LinkClass::TwoComponentLink, 1, p, e);
        }
    }
}

#[test]
fn link_torus_components_follow_e_mod_4() {
    for e in (-98i64..=98).filter(|e| e % 2 == 0 && *e != 0) {
        let r = verify_semibundle(&solve(LinkClass::TwoComponentLink, 5, e));
        let expected = if e % 4 == 0 { 2 } else { 1 };
        assert_eq!(r.link_torus_components.to_integer(), BigInt::from(expected), "ẽ={e}");
    }
    for e in [-3i64, 1, 5, 77] {
        let r = verify_semibundle(&solve(LinkClass::Knot, 5, e));
        assert_eq!(r.link_torus_components.to_integer(), BigInt::from(1));
    }
}

#[test]
fn minus_three_knot_row() {
    let t = coefficient_table(LinkClass::Knot, &BigInt::from(-3)).unwrap();
    assert_eq!(frac(&t.hub_t1), Frac(-2, 1));
    assert_eq!((t.block_t3.t.to_i64(), t.block_t3.u.to_i64()), (Some(-1), Some(-3)));
}

#[test]
fn parity_mismatch_is_rejected() {
    assert!(coefficient_table(LinkClass::Knot, &BigInt::from(4)).is_err());
    assert!(coefficient_table(LinkClass::TwoComponentLink, &BigInt::from(3)).is_err());
    assert!(coefficient_table(LinkClass::TwoComponentLink, &BigInt::from(0)).is_err());
}
