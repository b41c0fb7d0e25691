//! The labeled curve system `{L*_{i,k}}` on `F`.
//!
//! Each curve `L*_{i,k}` is a closed curve through `n` marked points.
//! With slots numbered `1..=2n`, the even slot `2l` carries a marked
//! point: `ĉ_{1,k}` on slot 2, `ĉ_{2,k}` on slot 4 and `ĉ_{l,i}` on slot
//! `2l` for `l >= 3`. The original orientation traverses the slots in
//! decreasing order `2n, 2n-1, ..., 1`, so the curve meets `ĉ_{n,i}`
//! first and `ĉ_{1,k}` last.
//!
//! The curves `L*_{j,j}` are pairwise disjoint; each is the core of a
//! band `F_2^j` containing every marked point with index `j`. At a marked
//! point of band `j` the other curves cross the core at angles that are
//! multiples of `2π/p`; angles are stored as residues (angle classes).

use serde::Serialize;

use super::{CoverCase, CoverTower};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CurveId {
    pub i: usize,
    pub k: usize,
}

impl CurveId {
    pub fn new(i: usize, k: usize) -> Self {
        Self { i, k }
    }

    /// `(i - k) mod p`.
    pub fn difference(&self, p: usize) -> usize {
        (self.i + p - self.k) % p
    }

    /// `1 <= i - k <= (p-1)/2` (the curves that get reoriented).
    pub fn is_short_positive(&self, p: usize) -> bool {
        let d = self.difference(p);
        d >= 1 && d <= (p - 1) / 2
    }

    /// `i - k <= (p-1)/2`, including the core curves.
    pub fn is_low(&self, p: usize) -> bool {
        self.difference(p) <= (p - 1) / 2
    }

    pub fn is_core(&self) -> bool {
        self.i == self.k
    }

    /// Deck transformation `τ2`: `(i, k) -> (i, k + 1)`.
    pub fn tau2(&self, p: usize) -> Self {
        Self::new(self.i, (self.k + 1) % p)
    }

    /// Simultaneous shift `(i, k) -> (i + 1, k + 1)`.
    pub fn shift(&self, p: usize) -> Self {
        Self::new((self.i + 1) % p, (self.k + 1) % p)
    }
}

/// `ĉ_{class,index}`: `class` is 1-based, `index` is `0..p`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MarkedPoint {
    pub class: usize,
    pub index: usize,
}

impl MarkedPoint {
    pub fn new(class: usize, index: usize) -> Self {
        Self { class, index }
    }

    /// Marked points with index `j` lie on the band of `L*_{j,j}`.
    pub fn band(&self) -> usize {
        self.index
    }

    /// Position along the band boundary: marked points sit at even
    /// positions `2(class - 1)`, gaps at odd positions.
    pub fn position(&self) -> usize {
        2 * (self.class - 1)
    }

    pub fn shift(&self, p: usize) -> Self {
        Self::new(self.class, (self.index + 1) % p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MarkedCurveSystem {
    pub p: usize,
    pub n: usize,
    pub case: CoverCase,
}

/// An incidence of a curve with a marked point, with the angle class
/// measured against the core curve of the band.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Incidence {
    pub curve: CurveId,
    pub slot: usize,
    pub point: MarkedPoint,
    pub angle_class: usize,
}

pub fn build_curve_system(tower: &CoverTower) -> MarkedCurveSystem {
    MarkedCurveSystem {
        p: tower.p,
        n: tower.n,
        case: tower.case,
    }
}

impl MarkedCurveSystem {
    pub fn new(p: usize, n: usize) -> Self {
        let case = if n == 3 { CoverCase::Case1 } else { CoverCase::Case2 };
        Self { p, n, case }
    }

    pub fn half(&self) -> usize {
        (self.p - 1) / 2
    }

    pub fn curves(&self) -> impl Iterator<Item = CurveId> + '_ {
        let p = self.p;
        (0..p).flat_map(move |i| (0..p).map(move |k| CurveId::new(i, k)))
    }

    pub fn marked_points(&self) -> impl Iterator<Item = MarkedPoint> + '_ {
        let p = self.p;
        (1..=self.n).flat_map(move |c| (0..p).map(move |j| MarkedPoint::new(c, j)))
    }

    /// Marked point carried by even slot `slot` of `curve`.
    pub fn point_on_slot(&self, curve: CurveId, slot: usize) -> Option<MarkedPoint> {
        if slot % 2 == 1 || slot == 0 || slot > 2 * self.n {
            return None;
        }
        let l = slot / 2;
        Some(match l {
            1 | 2 => MarkedPoint::new(l, curve.k),
            _ => MarkedPoint::new(l, curve.i),
        })
    }

    /// Marked points of `curve` in traversal order of the original
    /// orientation (`ĉ_{n,i}, ..., ĉ_{3,i}, ĉ_{2,k}, ĉ_{1,k}`).
    pub fn points_in_order(&self, curve: CurveId) -> Vec<(usize, MarkedPoint)> {
        (1..=self.n)
            .rev()
            .map(|l| (2 * l, self.point_on_slot(curve, 2 * l).expect("even slot")))
            .collect()
    }

    /// The core curve through a marked point.
    pub fn reference_curve(&self, point: MarkedPoint) -> CurveId {
        CurveId::new(point.index, point.index)
    }

    /// All curves through `point`, sorted.
    pub fn curves_through(&self, point: MarkedPoint) -> Vec<CurveId> {
        let j = point.index;
        match point.class {
            1 | 2 => (0..self.p).map(|i| CurveId::new(i, j)).collect(),
            _ => (0..self.p).map(|k| CurveId::new(j, k)).collect(),
        }
    }

    /// Angle class (units of `2π/p`) at which `curve` crosses the core
    /// of the band at `point`, counterclockwise from the core's
    /// direction. `None` if the curve misses the point.
    pub fn angle_class(&self, curve: CurveId, point: MarkedPoint) -> Option<usize> {
        let p = self.p;
        let on = match point.class {
            1 | 2 => curve.k == point.index,
            _ => curve.i == point.index && point.class <= self.n,
        };
        if !on {
            return None;
        }
        let d = curve.difference(p);
        Some(match point.class {
            1 => d,
            _ => (p - d) % p,
        })
    }

    pub fn incidences(&self, point: MarkedPoint) -> Vec<Incidence> {
        self.curves_through(point)
            .into_iter()
            .map(|curve| Incidence {
                curve,
                slot: 2 * point.class,
                point,
                angle_class: self.angle_class(curve, point).expect("incident"),
            })
            .collect()
    }

    /// Heading of `curve` at `point` in units of `π/p`, mod `2p`, when
    /// the curve is oriented as given by `flipped`.
    pub fn heading(&self, curve: CurveId, point: MarkedPoint, flipped: bool) -> Option<usize> {
        let a = self.angle_class(curve, point)?;
        let base = 2 * a;
        Some(if flipped { (base + self.p) % (2 * self.p) } else { base })
    }

    /// Check the incidence structure: each marked point carries `p`
    /// curves with the `p` distinct angle classes, the core at class 0,
    /// and no two distinct curves share more than the listed points.
    pub fn check_incidences(&self) -> Result<(), String> {
        for point in self.marked_points() {
            let inc = self.incidences(point);
            if inc.len() != self.p {
                return Err(format!("{point:?} carries {} curves", inc.len()));
            }
            let mut classes: Vec<usize> = inc.iter().map(|x| x.angle_class).collect();
            classes.sort_unstable();
            if classes != (0..self.p).collect::<Vec<_>>() {
                return Err(format!("{point:?} has angle classes {classes:?}"));
            }
            let reference = self.reference_curve(point);
            if self.angle_class(reference, point) != Some(0) {
                return Err(format!("core at {point:?} is not at class 0"));
            }
        }
        for a in 0..self.p {
            for b in 0..self.p {
                if a == b {
                    continue;
                }
                let ca = CurveId::new(a, a);
                let cb = CurveId::new(b, b);
                let pa: Vec<_> = self.points_in_order(ca).into_iter().map(|x| x.1).collect();
                if self.points_in_order(cb).iter().any(|(_, q)| pa.contains(q)) {
                    return Err(format!("core curves {a} and {b} meet"));
                }
            }
        }
        Ok(())
    }
}
