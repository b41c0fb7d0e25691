//! Horizontal-surface system for the JSJ graph of `M`.
//!
//! A horizontal surface meeting the hub in degree `λ` and block `j` in
//! degree `λ̄_j` exists for every nonzero integer solution of
//! `(Y - Z) x = (0, *, ..., *)`. `Y` records, for each pair of adjacent
//! pieces, the sum of `1/|γ|` over the gluing matrices `[[α, β], [γ, δ]]`
//! joining them; `Z` is diagonal with `-δ/γ` summed at the hub end and
//! `α/γ` at the block end. Only the hub row is a hard constraint; the
//! block rows only need integral values.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::jsj::{JsjGraph, JsjVertex};
use super::linalg::{kernel, mat_vec};
use super::GraphError;
use crate::exact::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WangYuSolution {
    #[serde(with = "crate::exact::int_string")]
    pub lambda: BigInt,
    #[serde(with = "crate::exact::int_string")]
    pub lambda_bar: BigInt,
}

fn vertex_index(v: JsjVertex) -> usize {
    match v {
        JsjVertex::Hub { .. } => 0,
        JsjVertex::Block { j, .. } => j + 1,
    }
}

/// `Y - Z` assembled from the single-cover graph, indexed
/// `(hub, block_0, ..., block_{p-1})`.
pub fn wang_yu_matrix(graph: &JsjGraph) -> Result<Vec<Vec<Rational>>, GraphError> {
    if graph.doubled {
        return Err(GraphError::DoubledGraph);
    }
    let size = graph.p + 1;
    let mut y = vec![vec![Rational::zero(); size]; size];
    let mut z = vec![Rational::zero(); size];
    for e in graph.graph.edge_indices() {
        let (a, b) = graph.graph.edge_endpoints(e).expect("edge");
        let (mut hub, mut block) = (graph.graph[a], graph.graph[b]);
        if matches!(hub, JsjVertex::Block { .. }) {
            std::mem::swap(&mut hub, &mut block);
        }
        let (h, k) = (vertex_index(hub), vertex_index(block));
        let m = &graph.graph[e].gluing;
        let gamma = m.entry(1, 0);
        if gamma.is_zero() {
            return Err(GraphError::FibresMatch);
        }
        let inv = exact::ratio(1, gamma.abs());
        y[h][k] += inv.clone();
        y[k][h] += inv;
        z[h] -= exact::ratio(m.entry(1, 1).clone(), gamma.clone());
        z[k] += exact::ratio(m.entry(0, 0).clone(), gamma.clone());
    }
    for (i, zi) in z.into_iter().enumerate() {
        y[i][i] -= zi;
    }
    Ok(y)
}

fn primitive(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let mut out: Vec<BigInt> = ints.iter().map(|x| x / &g).collect();
    if out[0].is_negative() {
        out.iter_mut().for_each(|x| *x = -x.clone());
    }
    out
}

/// Solve the hub row under the symmetry `λ̄_1 = ... = λ̄_p` by row
/// reduction on the full matrix.
pub fn solve_general(matrix: &[Vec<Rational>]) -> Result<WangYuSolution, GraphError> {
    let size = matrix.len();
    let mut rows = vec![matrix[0].clone()];
    for j in 2..size {
        let mut r = vec![Rational::zero(); size];
        r[1] = Rational::one();
        r[j] = -Rational::one();
        rows.push(r);
    }
    let basis = kernel(&rows);
    if basis.len() != 1 {
        return Err(GraphError::KernelDimension(basis.len()));
    }
    let mut x = primitive(&basis[0]);
    if x[0].is_zero() {
        return Err(GraphError::ZeroHubDegree);
    }
    // Scale until the block rows take integral values.
    let xr: Vec<Rational> = x.iter().map(exact::from_int).collect();
    let scale = mat_vec(matrix, &xr)
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    x.iter_mut().for_each(|v| *v *= &scale);
    Ok(WangYuSolution {
        lambda: x[0].clone(),
        lambda_bar: x[1].clone(),
    })
}

/// Closed form of the symmetric system: `-eλ + (2p/c)λ̄ = 0`, primitive
/// with `λ > 0`, scaled so that `(2/c)λ` is an integer.
pub fn solve_wang_yu(p: usize, c: &BigInt, e: &BigInt) -> Result<WangYuSolution, GraphError> {
    if e.is_zero() {
        return Err(GraphError::ZeroEuler);
    }
    if c.is_zero() {
        return Err(GraphError::FibresMatch);
    }
    let ratio = exact::ratio(c * e, BigInt::from(2 * p));
    let mut lambda = ratio.denom().clone();
    let mut lambda_bar = ratio.numer().clone();
    let check = exact::ratio(BigInt::from(2) * &lambda, c.clone());
    if !check.is_integer() {
        let f = check.denom().clone();
        lambda *= &f;
        lambda_bar *= &f;
    }
    Ok(WangYuSolution { lambda, lambda_bar })
}
