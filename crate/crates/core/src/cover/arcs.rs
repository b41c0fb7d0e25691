//! Cutting the curves along the band boundaries.
//!
//! Each band `F_2^j` around `L*_{j,j}` has two boundary circles: `β_1^j`
//! on the left of the core and `β_2^j` on the right. Cutting every
//! curve `L*_{i,k}` along them gives `2n` arcs: even slots inside a band
//! (each carrying its marked point) and odd slots in the complement
//! `F_1`. In the lifted picture the boundary circles become the tori
//! `T_1^j`, `T_2^j`, so the same data is printed with `T` once the
//! curves have been reoriented.

use std::fmt;

use petgraph::algo::{connected_components, min_spanning_tree};
use petgraph::data::Element;
use petgraph::graph::UnGraph;
use serde::Serialize;

use super::curves::{CurveId, MarkedCurveSystem, MarkedPoint};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    /// `β_1`, left of the core.
    One,
    /// `β_2`, right of the core.
    Two,
}

impl Side {
    pub fn index(self) -> usize {
        match self {
            Side::One => 1,
            Side::Two => 2,
        }
    }

    pub fn other(self) -> Side {
        match self {
            Side::One => Side::Two,
            Side::Two => Side::One,
        }
    }

    /// `+1` for the left boundary, `-1` for the right one.
    pub fn sign(self) -> i8 {
        match self {
            Side::One => 1,
            Side::Two => -1,
        }
    }
}

/// An arc endpoint: which boundary circle it lies on, and which marked
/// point of that band it sits next to.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Endpoint {
    pub side: Side,
    pub band: usize,
    pub class: usize,
}

impl Endpoint {
    pub fn boundary(&self) -> (Side, usize) {
        (self.side, self.band)
    }

    /// `β_s^j` or `T_s^j`.
    pub fn label(&self, lifted: bool) -> String {
        let letter = if lifted { "T" } else { "β" };
        format!("{letter}{}^{}", self.side.index(), self.band)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Region {
    F1,
    Band(usize),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arc {
    pub curve: CurveId,
    pub slot: usize,
    pub region: Region,
    pub tail: Endpoint,
    pub head: Endpoint,
    pub marked: Option<MarkedPoint>,
    pub reoriented: bool,
}

impl Arc {
    pub fn is_odd(&self) -> bool {
        self.slot % 2 == 1
    }

    pub fn label(&self) -> String {
        format!("L{}_{{{},{}}}", self.slot, self.curve.i, self.curve.k)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} -> {}",
            self.label(),
            self.tail.label(self.reoriented),
            self.head.label(self.reoriented)
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ArcSystem {
    pub system: MarkedCurveSystem,
    pub reoriented: bool,
    arcs: Vec<Arc>,
}

/// Boundary circles of odd arc `slot` of `curve`, as `(tail, head)`, in
/// the original orientation. Rows are chosen by whether
/// `i - k <= (p-1)/2`.
pub fn table1(p: usize, curve: CurveId, slot: usize) -> ((Side, usize), (Side, usize)) {
    use Side::{One, Two};
    let (i, k) = (curve.i, curve.k);
    let low = curve.is_low(p);
    match (slot, low) {
        (1, true) => ((One, k), (One, i)),
        (1, false) => ((Two, k), (Two, i)),
        (3, true) => ((Two, k), (Two, k)),
        (3, false) => ((One, k), (One, k)),
        (5, true) => ((Two, i), (One, k)),
        (5, false) => ((One, i), (Two, k)),
        (_, true) => ((Two, i), (One, i)),
        (_, false) => ((One, i), (Two, i)),
    }
}

impl ArcSystem {
    fn index(&self, curve: CurveId, slot: usize) -> usize {
        let n2 = 2 * self.system.n;
        (curve.i * self.system.p + curve.k) * n2 + (slot - 1)
    }

    pub fn arc(&self, curve: CurveId, slot: usize) -> &Arc {
        &self.arcs[self.index(curve, slot)]
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn odd_arcs(&self) -> impl Iterator<Item = &Arc> {
        self.arcs.iter().filter(|a| a.is_odd())
    }

    pub fn even_arcs(&self) -> impl Iterator<Item = &Arc> {
        self.arcs.iter().filter(|a| !a.is_odd())
    }

    /// Whether `curve` runs against its original orientation.
    pub fn is_flipped(&self, curve: CurveId) -> bool {
        self.reoriented && curve.is_short_positive(self.system.p)
    }

    /// Slots of `curve` in the order its current orientation visits them.
    pub fn traversal(&self, curve: CurveId) -> Vec<usize> {
        let n2 = 2 * self.system.n;
        let mut slots: Vec<usize> = (1..=n2).rev().collect();
        if self.is_flipped(curve) {
            slots.reverse();
        }
        slots
    }

    /// Consecutive arcs share an endpoint: the head of each arc is the
    /// tail of the next one along the current orientation.
    pub fn check_closed(&self) -> Result<(), String> {
        for curve in self.system.curves() {
            let order = self.traversal(curve);
            for w in 0..order.len() {
                let a = self.arc(curve, order[w]);
                let b = self.arc(curve, order[(w + 1) % order.len()]);
                if a.head != b.tail {
                    return Err(format!("{a} does not continue into {b}"));
                }
            }
        }
        Ok(())
    }
}

/// Split every curve into its `2n` arcs, with endpoints read off the
/// headings at the marked points.
pub fn decompose_arcs(system: &MarkedCurveSystem) -> ArcSystem {
    let (p, n) = (system.p, system.n);
    let n2 = 2 * n;
    let mut arcs = Vec::with_capacity(p * p * n2);
    for curve in system.curves() {
        let point = |slot: usize| system.point_on_slot(curve, slot).expect("even slot");
        let mut odd = Vec::with_capacity(n);
        for l in 1..=n {
            let slot = 2 * l - 1;
            let ((ts, tb), (hs, hb)) = table1(p, curve, slot);
            let tail_point = point(2 * l);
            let head_point = point(if l == 1 { n2 } else { 2 * l - 2 });
            debug_assert_eq!(tail_point.band(), tb);
            debug_assert_eq!(head_point.band(), hb);
            odd.push(Arc {
                curve,
                slot,
                region: Region::F1,
                tail: Endpoint { side: ts, band: tb, class: tail_point.class },
                head: Endpoint { side: hs, band: hb, class: head_point.class },
                marked: None,
                reoriented: false,
            });
        }
        for slot in 1..=n2 {
            if slot % 2 == 1 {
                arcs.push(odd[slot / 2]);
            } else {
                let l = slot / 2;
                let before = &odd[l % n];
                let after = &odd[l - 1];
                let pt = point(slot);
                arcs.push(Arc {
                    curve,
                    slot,
                    region: Region::Band(pt.band()),
                    tail: before.head,
                    head: after.tail,
                    marked: Some(pt),
                    reoriented: false,
                });
            }
        }
    }
    ArcSystem {
        system: system.clone(),
        reoriented: false,
        arcs,
    }
}

/// Reverse every curve with `1 <= i - k <= (p-1)/2`; arcs of other
/// curves are unchanged but now read as lifted arcs between tori.
pub fn reorient_curves(arcs: &ArcSystem) -> ArcSystem {
    let p = arcs.system.p;
    let flipped = arcs
        .arcs
        .iter()
        .map(|a| {
            let mut b = *a;
            if !arcs.reoriented && a.curve.is_short_positive(p) {
                std::mem::swap(&mut b.tail, &mut b.head);
            }
            b.reoriented = true;
            b
        })
        .collect();
    ArcSystem {
        system: arcs.system.clone(),
        reoriented: true,
        arcs: flipped,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeEdge {
    pub arc: String,
    pub from: String,
    pub to: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    pub nodes: usize,
    pub edges: usize,
    pub components: usize,
    pub connected: bool,
    /// Spanning tree of the boundary graph (only when connected).
    pub spanning_tree: Vec<TreeEdge>,
    /// Connectivity using only the arcs `L5_{j+1,j}` and `L1_{j+1,j}`.
    pub witness_connected: bool,
}

fn boundary_node(p: usize, side: Side, band: usize) -> usize {
    (side.index() - 1) * p + band
}

fn boundary_label(p: usize, node: usize) -> String {
    format!("β{}^{}", node / p + 1, node % p)
}

/// Boundary graph of `F_1`: nodes are the `2p` circles `β_s^j`, one edge
/// per odd arc.
pub fn boundary_graph<'a>(
    p: usize,
    odd: impl Iterator<Item = &'a Arc>,
) -> UnGraph<usize, String> {
    let mut g = UnGraph::with_capacity(2 * p, 0);
    let nodes: Vec<_> = (0..2 * p).map(|v| g.add_node(v)).collect();
    for a in odd {
        let t = boundary_node(p, a.tail.side, a.tail.band);
        let h = boundary_node(p, a.head.side, a.head.band);
        g.add_edge(nodes[t], nodes[h], a.label());
    }
    g
}

pub fn check_f1_connected(arcs: &ArcSystem) -> ConnectivityReport {
    let p = arcs.system.p;
    let g = boundary_graph(p, arcs.odd_arcs());
    let components = connected_components(&g);
    let connected = components == 1;
    let spanning_tree = if connected {
        min_spanning_tree(&g)
            .filter_map(|el| match el {
                Element::Edge { source, target, weight } => Some(TreeEdge {
                    arc: weight,
                    from: boundary_label(p, source),
                    to: boundary_label(p, target),
                }),
                Element::Node { .. } => None,
            })
            .collect()
    } else {
        Vec::new()
    };
    let witness = (0..p).flat_map(|j| {
        let c = CurveId::new((j + 1) % p, j);
        [arcs.arc(c, 5), arcs.arc(c, 1)]
    });
    let witness_connected = connected_components(&boundary_graph(p, witness)) == 1;
    ConnectivityReport {
        nodes: g.node_count(),
        edges: g.edge_count(),
        components,
        connected,
        spanning_tree,
        witness_connected,
    }
}
