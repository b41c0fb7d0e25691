//! Branched covers of `S^2(p, ..., p)` built from glued polygons.
//!
//! The base sphere is cut along a circle through the cone points
//! `c_1, ..., c_n` into two `n`-gons, `N` and `S`. Edge `e_r` runs from
//! `c_r` to `c_{r+1}` (indices mod `n`). A cover with sheet group
//! `Z/p x Z/p` is described by the sheet shift applied when crossing
//! `e_r` from `N` to `S`. Walking around `c_r` then gives the local
//! monodromy, and the number of `N` sheets visited before returning is
//! the ramification index of that vertex.
//!
//! This is an independent route to the Euler characteristic of the
//! covered surface: it never looks at the curve system.

use serde::Serialize;

/// Sheet shifts for a two-level abelian cover. `w1[r]` is the first
/// coordinate shift across `e_r`; `w2[r][t]` the second coordinate
/// shift, which may depend on the first-level sheet `t`.
#[derive(Clone, Debug)]
pub struct Monodromy {
    pub p: usize,
    pub n: usize,
    w1: Vec<usize>,
    w2: Vec<Vec<usize>>,
    second_level: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellCounts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
}

impl CellCounts {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }
}

/// One vertex of the covering complex.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverVertex {
    /// Base cone point `c_r`, 1-based.
    pub base: usize,
    /// Number of polygon corners meeting at the vertex (twice the
    /// ramification index).
    pub corners: usize,
}

impl CoverVertex {
    pub fn ramification(&self) -> usize {
        self.corners / 2
    }

    /// Cone order of the vertex in the cover of an orbifold whose cone
    /// points all have order `p`.
    pub fn cone_order(&self, p: usize) -> usize {
        p / self.ramification()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverComplex {
    pub sheets: usize,
    pub counts: CellCounts,
    pub vertices: Vec<CoverVertex>,
}

fn m(v: i64, p: usize) -> usize {
    v.rem_euclid(p as i64) as usize
}

impl Monodromy {
    /// The first-level cover for local images `h1[r-1] = h1(x_r)`.
    /// Requires `Σ h1 ≡ 0 (mod p)`.
    pub fn first_level(p: usize, h1: &[i64]) -> Option<Self> {
        let n = h1.len();
        if m(h1.iter().sum(), p) != 0 {
            return None;
        }
        let mut w1 = vec![0usize; n + 1];
        let mut acc = 0i64;
        for r in 1..n {
            acc -= h1[r - 1];
            w1[r] = m(acc, p);
        }
        w1[n] = 0;
        w1[0] = w1[n];
        Some(Self {
            p,
            n,
            w1,
            w2: vec![vec![0; p]; n + 1],
            second_level: false,
        })
    }

    /// Extend the first level by the cover that sends a small loop around
    /// every first-level cone point to `1`. Cone points of the first level
    /// are the unramified lifts of `c_r`, which for the tower in use are
    /// exactly the lifts of `c_3, ..., c_n`.
    pub fn with_unit_second_level(mut self) -> Self {
        let (p, n) = (self.p, self.n);
        for r in 1..=n {
            for t in 0..p {
                self.w2[r][t] = if r >= 2 { (n - r) % p } else { 0 };
            }
        }
        self.w2[0] = self.w2[n].clone();
        self.second_level = true;
        self
    }

    fn sheets(&self) -> usize {
        if self.second_level {
            self.p * self.p
        } else {
            self.p
        }
    }

    fn across(&self, r: usize, (t, u): (usize, usize)) -> (usize, usize) {
        let p = self.p;
        ((t + self.w1[r]) % p, (u + self.w2[r][t]) % p)
    }

    fn back(&self, r: usize, (t, u): (usize, usize)) -> (usize, usize) {
        let p = self.p;
        let t0 = (t + p - self.w1[r]) % p;
        (t0, (u + p - self.w2[r][t0]) % p)
    }

    /// One step of the rotation around `c_r`, starting and ending in `N`.
    fn rotate(&self, r: usize, sheet: (usize, usize)) -> (usize, usize) {
        let prev = if r == 1 { self.n } else { r - 1 };
        let s = self.across(prev, sheet);
        self.back(r, s)
    }

    /// Second-coordinate shift accumulated by one rotation step.
    fn second_shift(&self, r: usize, sheet: (usize, usize)) -> usize {
        let next = self.rotate(r, sheet);
        (next.1 + self.p - sheet.1) % self.p
    }

    fn all_sheets(&self) -> Vec<(usize, usize)> {
        let us = if self.second_level { self.p } else { 1 };
        (0..self.p)
            .flat_map(|t| (0..us).map(move |u| (t, u)))
            .collect()
    }

    /// Orbits of the rotation around `c_r` on `N` sheets.
    fn orbits(&self, r: usize) -> Vec<Vec<(usize, usize)>> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for start in self.all_sheets() {
            if seen.contains(&start) {
                continue;
            }
            let mut orbit = vec![start];
            seen.insert(start);
            let mut cur = self.rotate(r, start);
            while cur != start {
                seen.insert(cur);
                orbit.push(cur);
                cur = self.rotate(r, cur);
            }
            out.push(orbit);
        }
        out
    }

    /// For every first-level vertex over `c_r`, the second-level shift
    /// accumulated by going once around it. Vertices are reported as
    /// `(r, ramification, shift)`.
    pub fn first_level_loops(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for r in 1..=self.n {
            let mut seen = vec![false; self.p];
            for t in 0..self.p {
                if seen[t] {
                    continue;
                }
                let mut cur = (t, 0);
                let mut shift = 0;
                let mut len = 0;
                loop {
                    seen[cur.0] = true;
                    if self.second_level {
                        shift = (shift + self.second_shift(r, cur)) % self.p;
                    }
                    len += 1;
                    cur = (self.rotate(r, cur).0, 0);
                    if cur.0 == t {
                        break;
                    }
                }
                out.push((r, len, shift));
            }
        }
        out
    }

    pub fn build(&self) -> CoverComplex {
        let sheets = self.sheets();
        let mut vertices = Vec::new();
        for r in 1..=self.n {
            for orbit in self.orbits(r) {
                vertices.push(CoverVertex {
                    base: r,
                    corners: 2 * orbit.len(),
                });
            }
        }
        CoverComplex {
            sheets,
            counts: CellCounts {
                vertices: vertices.len(),
                edges: self.n * sheets,
                faces: 2 * sheets,
            },
            vertices,
        }
    }
}

impl CoverComplex {
    /// Number of vertices that are still cone points (order > 1).
    pub fn cone_points(&self, p: usize) -> usize {
        self.vertices.iter().filter(|v| v.cone_order(p) > 1).count()
    }

    pub fn cone_points_over(&self, base: usize, p: usize) -> usize {
        self.vertices
            .iter()
            .filter(|v| v.base == base && v.cone_order(p) > 1)
            .count()
    }
}
