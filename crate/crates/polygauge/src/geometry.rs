//! Regular-polygon model and the formula-free chord oracle.
//!
//! [`RegularPolygon::chord_length`] clips a line against the polygon's
//! bounding half-planes without consulting any of the closed-form laws, so
//! it serves as the independent geometric reference the laws are tested
//! against.

use alloc::vec::Vec;

use core::f64::consts::PI;

#[cfg(not(feature = "std"))]
use crate::float::FloatExt;
use crate::Error;

const TAU: f64 = 2.0 * PI;

/// Cartesian point.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Euclidean distance to `other`.
    pub fn distance(&self, other: &Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        (dx * dx + dy * dy).sqrt()
    }
}

/// Line in Hesse normal form: `x cos φ + y sin φ = p` with `p ≥ 0`.
///
/// `p` is the distance from the origin and `φ` the direction of the
/// normal. Every line not through the origin has exactly one such
/// representation with `φ ∈ [0, 2π)`; the measure `dp dφ` over this chart
/// is the rigid-motion-invariant line measure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    p: f64,
    phi: f64,
}

impl Line {
    /// Build a line from a nonnegative origin distance and a normal angle;
    /// the angle is reduced to `[0, 2π)`.
    ///
    /// Panics if `p` is negative or either argument is not finite.
    pub fn new(p: f64, phi: f64) -> Self {
        assert!(p >= 0.0 && p.is_finite(), "line distance must be finite and >= 0");
        assert!(phi.is_finite(), "line angle must be finite");
        Self { p, phi: reduce_angle(phi) }
    }

    /// Distance from the origin.
    pub fn distance(&self) -> f64 {
        self.p
    }

    /// Normal angle in `[0, 2π)`.
    pub fn normal_angle(&self) -> f64 {
        self.phi
    }
}

/// Reduce an angle to `[0, 2π)`.
pub(crate) fn reduce_angle(phi: f64) -> f64 {
    let mut a = phi % TAU;
    if a < 0.0 {
        a += TAU;
    }
    // A tiny negative remainder can round up to exactly TAU.
    if a >= TAU {
        a = 0.0;
    }
    a
}

/// Regular polygon with `n` vertices on the circle of radius `r`, the
/// first vertex on the positive x-axis.
///
/// Construction precomputes the derived constants every law needs: the
/// perimeter, area, apothem, and the vertex distances `ℓ_k = 2r sin(kπ/n)`
/// that are the breakpoints of every distribution on this polygon.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularPolygon {
    n: u32,
    r: f64,
    apothem: f64,
    perimeter: f64,
    area: f64,
    min_width: f64,
    /// ℓ_k for k = 0..=last_branch()+1; strictly increasing, ℓ_0 = 0.
    vertex_distances: Vec<f64>,
}

impl RegularPolygon {
    /// Build the polygon; errors on `n < 3` or a nonpositive/nonfinite
    /// radius.
    pub fn new(n: u32, r: f64) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::SideCount);
        }
        if !r.is_finite() || r <= 0.0 {
            return Err(Error::Radius);
        }
        let nf = f64::from(n);
        let step = PI / nf;
        let last_branch = (n - 2) / 2;
        let vertex_distances =
            (0..=last_branch + 1).map(|k| 2.0 * r * (f64::from(k) * step).sin()).collect();
        let apothem = r * step.cos();
        // Smallest directional width: vertex-to-edge for odd n, the
        // distance between opposite edges for even n.
        let min_width = if n % 2 == 1 { r + apothem } else { 2.0 * apothem };
        Ok(Self {
            n,
            r,
            apothem,
            perimeter: 2.0 * nf * r * step.sin(),
            area: 0.5 * nf * r * r * (2.0 * step).sin(),
            min_width,
            vertex_distances,
        })
    }

    /// Number of sides.
    pub fn side_count(&self) -> u32 {
        self.n
    }

    /// Radius of the circle through the vertices.
    pub fn circumradius(&self) -> f64 {
        self.r
    }

    /// Distance from the center to each edge.
    pub fn apothem(&self) -> f64 {
        self.apothem
    }

    pub fn perimeter(&self) -> f64 {
        self.perimeter
    }

    pub fn area(&self) -> f64 {
        self.area
    }

    /// Largest branch index `K = ⌊(n−2)/2⌋`; chord lengths in
    /// `[ℓ_k, ℓ_{k+1})` belong to branch `k ∈ 0..=K`.
    pub fn last_branch(&self) -> u32 {
        (self.n - 2) / 2
    }

    /// Distance `ℓ_k = 2r sin(kπ/n)` between two vertices `k` steps apart.
    ///
    /// Defined for `k ≤ last_branch() + 1`; these are the breakpoints of
    /// every law on this polygon. Panics on larger `k`.
    pub fn vertex_distance(&self, k: u32) -> f64 {
        self.vertex_distances[k as usize]
    }

    /// Length of the longest chord, `ℓ_{K+1}`; the diameter `2r` for even
    /// `n`, `2r cos(π/2n)` for odd `n`.
    pub fn max_chord(&self) -> f64 {
        *self.vertex_distances.last().unwrap()
    }

    /// Smallest directional width. Chords longer than this are missing in
    /// some directions; every shorter length occurs in every direction.
    ///
    /// Equals `2r cos²(π/2n)` for odd `n` (strictly between `ℓ_K` and
    /// `ℓ_{K+1}`) and `ℓ_K = 2·apothem` for even `n`.
    pub fn min_width(&self) -> f64 {
        self.min_width
    }

    /// Branch index `k` with `ℓ_k ≤ s < ℓ_{k+1}`; the top endpoint
    /// `s = max_chord()` is assigned to the last branch. `None` outside
    /// `[0, max_chord()]`.
    pub fn branch_of(&self, s: f64) -> Option<u32> {
        if !(s >= 0.0) || s > self.max_chord() {
            return None;
        }
        let above = self.vertex_distances.partition_point(|&l| l <= s);
        Some(((above - 1) as u32).min(self.last_branch()))
    }

    /// The `n` vertices, counterclockwise from `(r, 0)`.
    pub fn vertices(&self) -> Vec<Point> {
        (0..self.n)
            .map(|i| {
                let a = TAU * f64::from(i) / f64::from(self.n);
                Point::new(self.r * a.cos(), self.r * a.sin())
            })
            .collect()
    }

    /// Outward unit normal direction of edge `j` (the edge between
    /// vertices `j` and `j+1`): angle `(2j+1)π/n`.
    fn edge_normal_angle(&self, j: u32) -> f64 {
        f64::from(2 * j + 1) * PI / f64::from(self.n)
    }

    /// Length of the intersection of `line` with the closed polygon.
    ///
    /// The line is clipped parametrically against the `n` half-planes
    /// `x·cos θ_j + y·sin θ_j ≤ apothem`; an empty or single-point
    /// intersection yields 0. No closed-form law is consulted.
    pub fn chord_length(&self, line: &Line) -> f64 {
        let cos_phi = line.phi.cos();
        let sin_phi = line.phi.sin();
        // Foot of the perpendicular, and the unit direction along the line.
        let ox = line.p * cos_phi;
        let oy = line.p * sin_phi;
        let dx = -sin_phi;
        let dy = cos_phi;
        let mut lo = f64::NEG_INFINITY;
        let mut hi = f64::INFINITY;
        for j in 0..self.n {
            let theta = self.edge_normal_angle(j);
            let nx = theta.cos();
            let ny = theta.sin();
            // Constraint along P(t) = O + t·d: (O·n) + t·(d·n) ≤ apothem.
            let slope = dx * nx + dy * ny;
            let rhs = self.apothem - (ox * nx + oy * ny);
            if slope.abs() < 1e-12 {
                // Parallel edge: the whole line is inside or outside this
                // half-plane.
                if rhs < 0.0 {
                    return 0.0;
                }
            } else if slope > 0.0 {
                hi = hi.min(rhs / slope);
            } else {
                lo = lo.max(rhs / slope);
            }
        }
        (hi - lo).max(0.0)
    }

    /// Whether the point lies in the closed polygon.
    ///
    /// Allows a hair of slack (`1e-12·r`) so exact vertices and sampled
    /// boundary points test inside despite rounding.
    pub fn contains(&self, pt: &Point) -> bool {
        let slack = 1e-12 * self.r;
        for j in 0..self.n {
            let theta = self.edge_normal_angle(j);
            if pt.x * theta.cos() + pt.y * theta.sin() > self.apothem + slack {
                return false;
            }
        }
        true
    }
}
