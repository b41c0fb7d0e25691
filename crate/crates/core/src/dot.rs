//! Graphviz output for the curve system, the `F_1` boundary graph and
//! the JSJ graphs.

use petgraph::dot::Dot;
use petgraph::graph::UnGraph;

use crate::cover::{boundary_graph, ArcSystem, MarkedCurveSystem};
use crate::graph_manifold::JsjGraph;

fn render<N, E>(g: &UnGraph<N, E>) -> String
where
    N: std::fmt::Display,
    E: std::fmt::Display,
{
    format!("{}", Dot::with_config(g, &[]))
}

/// Bipartite incidence graph: curves `L*_{i,k}` and marked points, each
/// edge labelled with its slot and angle class.
pub fn curve_incidence_dot(system: &MarkedCurveSystem) -> String {
    let mut g = UnGraph::<String, String>::new_undirected();
    let curves: Vec<_> = system
        .curves()
        .map(|c| (c, g.add_node(format!("L*_{{{},{}}}", c.i, c.k))))
        .collect();
    let points: Vec<_> = system
        .marked_points()
        .map(|pt| (pt, g.add_node(format!("ĉ_{{{},{}}}", pt.class, pt.index))))
        .collect();
    for (curve, cn) in &curves {
        for (slot, pt) in system.points_in_order(*curve) {
            let pn = points.iter().find(|(q, _)| *q == pt).expect("marked point").1;
            let class = system.angle_class(*curve, pt).expect("incident");
            g.add_edge(*cn, pn, format!("slot {slot}, angle {class}"));
        }
    }
    render(&g)
}

/// Boundary circles `β_s^j` joined by the odd arcs in `F_1`.
pub fn boundary_graph_dot(arcs: &ArcSystem) -> String {
    let p = arcs.system.p;
    let g = boundary_graph(p, arcs.odd_arcs()).map(
        |_, &v| format!("β{}^{}", v / p + 1, v % p),
        |_, e| e.clone(),
    );
    render(&g)
}

pub fn jsj_dot(graph: &JsjGraph) -> String {
    let doubled = graph.doubled;
    render(&graph.graph.map(|_, v| v.label(doubled), |_, e| e.label(doubled)))
}
