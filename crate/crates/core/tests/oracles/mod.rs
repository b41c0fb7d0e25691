//! Independent reference computations for the integration and acceptance
//! tests. Nothing here calls into the library's own derivations: sides,
//! signs and Euler data are recomputed from first principles with plain
//! integers.

#![allow(dead_code)]

/// Reduced fraction over `i128` with a positive denominator.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Frac(pub i128, pub i128);

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Frac {
    pub fn new(n: i128, d: i128) -> Self {
        assert!(d != 0);
        let g = gcd(n, d).max(1);
        let s = if d < 0 { -1 } else { 1 };
        Frac(s * n / g, s * d / g)
    }

    pub fn add(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.1 + o.0 * self.1, self.1 * o.1)
    }

    pub fn mul(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.0, self.1 * o.1)
    }

    pub fn neg(self) -> Frac {
        Frac(-self.0, self.1)
    }

    /// Same `"n/d"` form the library prints.
    pub fn render(self) -> String {
        format!("{}/{}", self.0, self.1)
    }
}

/// `e(W_K)` by summing the fractions one at a time.
pub fn euler_number(p: i128, qs: &[i128]) -> Frac {
    qs.iter().fold(Frac(0, 1), |acc, &q| acc.add(Frac::new(q, p))).neg()
}

/// Base orbifold Euler characteristic: sphere minus `n` cone defects.
pub fn orbifold_chi(p: i128, n: i128) -> Frac {
    (0..n).fold(Frac(2, 1), |acc, _| acc.add(Frac::new(-(p - 1), p)))
}

/// Euler characteristic of the `p^2`-fold cover by Riemann–Hurwitz: each
/// cone point of order `p` has `p^2 / p` preimages.
pub fn cover_chi(p: i128, n: i128) -> i128 {
    p * p * (2 - n) + n * p
}

/// Hypothesis gate written out directly.
pub fn applicable(p: i64, qs: &[i64]) -> bool {
    let n = qs.len();
    let sum: i64 = qs.iter().sum();
    n >= 3 && p % 2 != 0 && p >= 3 && sum != 0 && !(n == 3 && p < 5)
}

/// Marked point `(class, index)` on an even slot of `L*_{i,k}`.
pub fn point_on_slot(i: usize, k: usize, slot: usize) -> (usize, usize) {
    match slot {
        2 => (1, k),
        4 => (2, k),
        s => (s / 2, i),
    }
}

pub fn difference(p: usize, i: usize, k: usize) -> usize {
    (i + p - k) % p
}

pub fn flipped(p: usize, i: usize, k: usize) -> bool {
    let d = difference(p, i, k);
    d >= 1 && d <= (p - 1) / 2
}

/// Heading of the curve at a marked point, in units of `π/p`, mod `2p`.
/// The line through class 1 makes angle class `d`; the other classes make
/// `-d`.
pub fn heading(p: usize, i: usize, k: usize, class: usize, reoriented: bool) -> usize {
    let d = difference(p, i, k);
    let a = if class == 1 { d } else { (p - d) % p };
    let mut h = (2 * a) % (2 * p);
    if reoriented && flipped(p, i, k) {
        h = (h + p) % (2 * p);
    }
    h
}

/// Sign of `sin(hπ/p)`.
pub fn sin_sign(p: usize, h: usize) -> i8 {
    let h = h % (2 * p);
    if h == 0 || h == p {
        0
    } else if h < p {
        1
    } else {
        -1
    }
}

/// Side of a boundary circle: 1 (left of the core) or 2 (right).
pub type SideNo = u8;

/// Endpoints of odd arc `slot` of `L*_{i,k}` in the original
/// orientation, as `((side, band, class), (side, band, class))`. At each
/// even slot the curve moves from `β_2` to `β_1` exactly when its heading
/// points north; the odd arc leaving slot `2l` starts where the even arc
/// exits, and ends where the even arc of slot `2l - 2` enters.
pub fn table1_from_angles(
    p: usize,
    n: usize,
    i: usize,
    k: usize,
    slot: usize,
) -> ((SideNo, usize, usize), (SideNo, usize, usize)) {
    let l = slot.div_ceil(2);
    let from_slot = 2 * l;
    let to_slot = if l == 1 { 2 * n } else { 2 * l - 2 };
    let (c_from, b_from) = point_on_slot(i, k, from_slot);
    let (c_to, b_to) = point_on_slot(i, k, to_slot);
    let north = |class| sin_sign(p, heading(p, i, k, class, false)) > 0;
    let exit_side = if north(c_from) { 1 } else { 2 };
    let entry_side = if north(c_to) { 2 } else { 1 };
    ((exit_side, b_from, c_from), (entry_side, b_to, c_to))
}

/// Lifted endpoints after reorientation, written out row by row.
pub fn table2(p: usize, i: usize, k: usize, slot: usize) -> ((SideNo, usize), (SideNo, usize)) {
    let low = (i + p - k) % p <= (p - 1) / 2;
    match (slot, low) {
        (1, true) => ((1, i), (1, k)),
        (1, false) => ((2, k), (2, i)),
        (3, true) => ((2, k), (2, k)),
        (3, false) => ((1, k), (1, k)),
        (5, true) => ((1, k), (2, i)),
        (5, false) => ((1, i), (2, k)),
        (2, _) => ((1, k), (2, k)),
        (4, _) => ((2, k), (1, k)),
        (s, _) if s % 2 == 1 => ((1, i), (2, i)),
        _ => ((2, i), (1, i)),
    }
}

/// Crossing signs of one odd arc with the boundary-parallel tori (all
/// bands, side 1, every class) and with the `l`-tori: side 1 for `l_1`,
/// side 2 for `l_2`; class 1 with the lane running with the core, classes
/// `3..n-1` against it. The sign is that of `ω · sin(heading)` at the
/// marked point next to the crossing, in the reoriented system.
pub struct OracleCrossings {
    pub boundary_parallel: Vec<i8>,
    pub l_tori: Vec<i8>,
}

pub fn crossings(p: usize, n: usize, i: usize, k: usize, slot: usize) -> OracleCrossings {
    let (tail, head) = table1_from_angles(p, n, i, k, slot);
    let mut bp = Vec::new();
    let mut lt = Vec::new();
    for (side, _band, class) in [tail, head] {
        let s = sin_sign(p, heading(p, i, k, class, true));
        assert_ne!(s, 0);
        if n == 3 && side == 1 {
            bp.push(s);
        }
        if class == 1 {
            lt.push(s);
        } else if class >= 3 && class < n {
            lt.push(-s);
        }
    }
    bp.sort();
    lt.sort();
    OracleCrossings {
        boundary_parallel: bp,
        l_tori: lt,
    }
}

/// Plain BFS on an undirected edge list over `0..nodes`.
pub fn bfs_components(nodes: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj = vec![Vec::new(); nodes];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; nodes];
    let mut comps = 0;
    for s in 0..nodes {
        if seen[s] {
            continue;
        }
        comps += 1;
        let mut queue = std::collections::VecDeque::from([s]);
        seen[s] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    comps
}
