//! JSJ graph of `M` and of its free double cover, with gluing matrices.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use petgraph::graph::{EdgeIndex, NodeIndex, UnGraph};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::GraphError;
use crate::tangle::LinkClass;

/// 2x2 integer matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2(pub [[BigInt; 2]; 2]);

impl Mat2 {
    pub fn from_i64(m: [[i64; 2]; 2]) -> Self {
        Mat2(m.map(|row| row.map(BigInt::from)))
    }

    pub fn identity() -> Self {
        Self::from_i64([[1, 0], [0, 1]])
    }

    pub fn det(&self) -> BigInt {
        let m = &self.0;
        &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let (a, b) = (&self.0, &other.0);
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.0[i][j]
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(2))?;
        for row in &self.0 {
            seq.serialize_element(&[row[0].to_string(), row[1].to_string()])?;
        }
        seq.end()
    }
}

/// New basis of a block boundary torus in terms of the old one:
/// `ᾱ = aα + bφ`, `φ̄ = cα + dφ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisChange {
    #[serde(with = "crate::exact::int_string")]
    pub a: BigInt,
    #[serde(with = "crate::exact::int_string")]
    pub b: BigInt,
    #[serde(with = "crate::exact::int_string")]
    pub c: BigInt,
    #[serde(with = "crate::exact::int_string")]
    pub d: BigInt,
}

impl BasisChange {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    /// Knot case: the core curve double covers its image, so `c = 2`.
    pub fn knot() -> Self {
        Self::new(1, 0, 2, 1)
    }

    pub fn link() -> Self {
        Self::new(1, 0, 1, 1)
    }

    pub fn for_class(class: LinkClass) -> Self {
        match class {
            LinkClass::Knot => Self::knot(),
            LinkClass::TwoComponentLink => Self::link(),
        }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GluingMatrices {
    pub g1: Mat2,
    pub g2: Mat2,
    pub g1_inv: Mat2,
    pub g2_inv: Mat2,
}

/// `G1 = [[-a, b], [-c, d]]`, `G2 = [[-a, aẽ-b], [c, d-cẽ]]` and their
/// inverses, checked by multiplication.
pub fn gluing_matrices(basis: &BasisChange, e_tilde: &BigInt) -> Result<GluingMatrices, GraphError> {
    if !basis.det().is_one() {
        return Err(GraphError::BasisDeterminant(basis.det()));
    }
    let (a, b, c, d) = (&basis.a, &basis.b, &basis.c, &basis.d);
    let e = e_tilde;
    let g1 = Mat2([[-a, b.clone()], [-c, d.clone()]]);
    let g2 = Mat2([[-a, a * e - b], [c.clone(), d - c * e]]);
    let g1_inv = Mat2([[-d, b.clone()], [-c, a.clone()]]);
    let g2_inv = Mat2([[c * e - d, a * e - b], [c.clone(), a.clone()]]);
    let id = Mat2::identity();
    for (name, m, inv) in [("G1", &g1, &g1_inv), ("G2", &g2, &g2_inv)] {
        if m.mul(inv) != id || inv.mul(m) != id {
            return Err(GraphError::InverseMismatch(name));
        }
    }
    Ok(GluingMatrices {
        g1,
        g2,
        g1_inv,
        g2_inv,
    })
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum JsjVertex {
    /// The piece over `F_1`; `sheet` is 1 or 2.
    Hub { sheet: u8 },
    /// The block `M_2^j`.
    Block { j: usize, sheet: u8 },
}

impl JsjVertex {
    pub fn sheet(&self) -> u8 {
        match *self {
            JsjVertex::Hub { sheet } | JsjVertex::Block { sheet, .. } => sheet,
        }
    }

    pub fn swapped(&self) -> Self {
        match *self {
            JsjVertex::Hub { sheet } => JsjVertex::Hub { sheet: 3 - sheet },
            JsjVertex::Block { j, sheet } => JsjVertex::Block { j, sheet: 3 - sheet },
        }
    }

    pub fn projected(&self) -> Self {
        match *self {
            JsjVertex::Hub { .. } => JsjVertex::Hub { sheet: 1 },
            JsjVertex::Block { j, .. } => JsjVertex::Block { j, sheet: 1 },
        }
    }

    pub fn label(&self, doubled: bool) -> String {
        match (*self, doubled) {
            (JsjVertex::Hub { .. }, false) => "Y1".to_string(),
            (JsjVertex::Hub { sheet }, true) => format!("Y1_{sheet}"),
            (JsjVertex::Block { j, .. }, false) => format!("M2^{j}"),
            (JsjVertex::Block { j, sheet }, true) => format!("M2^{j}_{sheet}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JsjEdge {
    /// 1 for `T_1^j`, 2 for `T_2^j`.
    pub torus: u8,
    pub j: usize,
    /// Sheet of the block end.
    pub sheet: u8,
    pub gluing: Mat2,
}

impl JsjEdge {
    pub fn label(&self, doubled: bool) -> String {
        if doubled {
            format!("T{}^{}_{}", self.torus, self.j, self.sheet)
        } else {
            format!("T{}^{}", self.torus, self.j)
        }
    }
}

#[derive(Clone, Debug)]
pub struct JsjGraph {
    pub p: usize,
    pub doubled: bool,
    pub e_tilde: BigInt,
    pub matrices: GluingMatrices,
    pub graph: UnGraph<JsjVertex, JsjEdge>,
}

impl Serialize for JsjGraph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("JsjGraph", 4)?;
        st.serialize_field("doubled", &self.doubled)?;
        st.serialize_field("vertices", &self.graph.node_count())?;
        st.serialize_field("edges", &self.graph.edge_count())?;
        st.serialize_field("matrices", &self.matrices)?;
        st.end()
    }
}

/// Single cover: one hub and `p` blocks, block `j` joined to the hub by
/// `T_1^j` and `T_2^j`. Doubled: two hubs and `2p` blocks, block `(j, s)`
/// joined to hub `s` by `T_1` and to hub `3 - s` by `T_2`.
pub fn build_jsj_graph(
    p: usize,
    basis: &BasisChange,
    e_tilde: &BigInt,
    doubled: bool,
) -> Result<JsjGraph, GraphError> {
    let matrices = gluing_matrices(basis, e_tilde)?;
    let sheets: &[u8] = if doubled { &[1, 2] } else { &[1] };
    let mut graph = UnGraph::new_undirected();
    let hubs: Vec<NodeIndex> = sheets
        .iter()
        .map(|&sheet| graph.add_node(JsjVertex::Hub { sheet }))
        .collect();
    for &sheet in sheets {
        for j in 0..p {
            let block = graph.add_node(JsjVertex::Block { j, sheet });
            let s = (sheet - 1) as usize;
            let other = if doubled { 1 - s } else { s };
            graph.add_edge(
                block,
                hubs[s],
                JsjEdge {
                    torus: 1,
                    j,
                    sheet,
                    gluing: matrices.g1.clone(),
                },
            );
            graph.add_edge(
                block,
                hubs[other],
                JsjEdge {
                    torus: 2,
                    j,
                    sheet,
                    gluing: matrices.g2.clone(),
                },
            );
        }
    }
    Ok(JsjGraph {
        p,
        doubled,
        e_tilde: e_tilde.clone(),
        matrices,
        graph,
    })
}

impl JsjGraph {
    pub fn vertex_count(&self) -> usize {
        self.graph.node_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    fn find(&self, v: JsjVertex) -> Option<NodeIndex> {
        self.graph.node_indices().find(|&i| self.graph[i] == v)
    }

    fn edge_key(&self, e: EdgeIndex) -> (u8, usize, u8, JsjVertex, JsjVertex) {
        let (x, y) = self.graph.edge_endpoints(e).expect("edge");
        let (mut u, mut v) = (self.graph[x], self.graph[y]);
        if u > v {
            std::mem::swap(&mut u, &mut v);
        }
        let w = &self.graph[e];
        (w.torus, w.j, w.sheet, u, v)
    }

    /// The sheet swap is a graph automorphism without fixed vertices or
    /// edges that preserves torus labels and gluing matrices.
    pub fn check_involution(&self) -> bool {
        if !self.doubled {
            return false;
        }
        let mut keys: Vec<_> = self.graph.edge_indices().map(|e| self.edge_key(e)).collect();
        keys.sort();
        let mut swapped: Vec<_> = self
            .graph
            .edge_indices()
            .map(|e| {
                let (t, j, s, u, v) = self.edge_key(e);
                let (mut u2, mut v2) = (u.swapped(), v.swapped());
                if u2 > v2 {
                    std::mem::swap(&mut u2, &mut v2);
                }
                (t, j, 3 - s, u2, v2)
            })
            .collect();
        swapped.sort();
        let vertices_ok = self.graph.node_indices().all(|i| {
            let v = self.graph[i];
            v.swapped() != v && self.find(v.swapped()).is_some()
        });
        let gluing_ok = self.graph.edge_indices().all(|e| {
            let w = &self.graph[e];
            self.graph.edge_references().any(|r| {
                let o = r.weight();
                o.torus == w.torus && o.j == w.j && o.sheet == 3 - w.sheet && o.gluing == w.gluing
            })
        });
        keys == swapped && vertices_ok && gluing_ok
    }

    /// Projection to the single-cover graph is exactly 2-to-1 on vertices
    /// and on edges.
    pub fn check_projection(&self, base: &JsjGraph) -> bool {
        if !self.doubled || base.doubled {
            return false;
        }
        let mut vcount = std::collections::BTreeMap::new();
        for i in self.graph.node_indices() {
            *vcount.entry(self.graph[i].projected()).or_insert(0) += 1;
        }
        let base_vertices: Vec<_> = base.graph.node_indices().map(|i| base.graph[i]).collect();
        let vertices_ok = vcount.len() == base_vertices.len()
            && base_vertices.iter().all(|v| vcount.get(v) == Some(&2));
        let mut ecount = std::collections::BTreeMap::new();
        for e in self.graph.edge_indices() {
            let w = &self.graph[e];
            *ecount.entry((w.torus, w.j)).or_insert(0) += 1;
        }
        let edges_ok = ecount.len() == base.edge_count() && ecount.values().all(|&c| c == 2);
        vertices_ok && edges_ok
    }

    pub fn is_connected(&self) -> bool {
        petgraph::algo::connected_components(&self.graph) == 1
    }

    /// Lower-left entry of a gluing matrix, up to sign.
    pub fn fiber_intersection(m: &Mat2) -> BigInt {
        let c = m.entry(1, 0).clone();
        if c < BigInt::zero() {
            -c
        } else {
            c
        }
    }
}
