//! Closed-form distribution of the distance between two random points.
//!
//! The density of the distance between two independent uniform points
//! factors through the chord law: it is an integral transform of the
//! chord CDF, so once that CDF is a combination of elementary kernels,
//! its running integrals are elementary too. Two towers are built over
//! [`ChordLaw`]: plain `t`-antiderivatives feed the density, and
//! `t`-weighted antiderivatives of those feed the distribution function.
//! Both towers mirror the chord law's branch dispatch. On the last odd
//! branch the extinction terms switch on at the minimal width; a matching
//! constant keeps each antiderivative continuous there, so differences
//! across branch ends can be taken blindly.
//!
//! [`DistanceLaw::pdf`] and [`DistanceLaw::cdf`] evaluate the law; the
//! tests differentiate the towers back down, compare them against direct
//! quadrature of the chord CDF, and pin the triangle, square, and disk
//! against independently known elementary forms.

use alloc::vec;
use alloc::vec::Vec;

use core::f64::consts::PI;

use crate::chord_law::{ChordLaw, KERNEL_SLACK};
#[cfg(not(feature = "std"))]
use crate::float::FloatExt;
use crate::geometry::RegularPolygon;
use crate::Error;

/// Antiderivative in `t` of the chord-law kernel basis.
fn basis_star(i: u32, t: f64, a: f64) -> f64 {
    let gap = (t - a).max(0.0) * (t + a);
    let root = gap.sqrt();
    let asn = (a / t).min(1.0).asin();
    match i {
        1 => 0.5 * t * t,
        2 => t.ln(),
        3 => root + a * asn,
        _ => 0.5 * (a * root + t * t * asn),
    }
}

/// Antiderivative in `t` of `t` times [`basis_star`].
fn basis_ring(i: u32, t: f64, a: f64) -> f64 {
    let gap = (t - a).max(0.0) * (t + a);
    let root = gap.sqrt();
    let asn = (a / t).min(1.0).asin();
    let t2 = t * t;
    match i {
        1 => t2 * t2 / 8.0,
        2 => 0.25 * t2 * (2.0 * t.ln() - 1.0),
        3 => gap * root / 3.0 + 0.5 * a * (a * root + t2 * asn),
        _ => (5.0 * a / 3.0 * gap * root + a * a * a * root + t2 * t2 * asn) / 8.0,
    }
}

fn kernel_star(law: &ChordLaw, k: u32, t: f64, a: f64, b: f64) -> Result<f64, Error> {
    if k == 0 || t == 0.0 {
        return Ok(0.0);
    }
    if !(t > 0.0) || !(a >= 0.0) || a > t * (1.0 + KERNEL_SLACK) {
        return Err(Error::Domain);
    }
    let mut total = 0.0;
    for i in 1..=4 {
        total += law.coefficient(k, i, a, b)? * basis_star(i, t, a);
    }
    Ok(total)
}

fn kernel_ring(law: &ChordLaw, k: u32, t: f64, a: f64, b: f64) -> Result<f64, Error> {
    if k == 0 || t == 0.0 {
        return Ok(0.0);
    }
    if !(t > 0.0) || !(a >= 0.0) || a > t * (1.0 + KERNEL_SLACK) {
        return Err(Error::Domain);
    }
    let mut total = 0.0;
    for i in 1..=4 {
        total += law.coefficient(k, i, a, b)? * basis_ring(i, t, a);
    }
    Ok(total)
}

/// Antiderivative of the chord law's branch CDF, glued at the odd
/// minimal width by `seam`.
fn branch_star(law: &ChordLaw, seam: f64, k: u32, t: f64) -> Result<f64, Error> {
    let poly = law.polygon();
    if k > poly.last_branch() {
        return Err(Error::Branch);
    }
    let n = f64::from(poly.side_count());
    let odd = poly.side_count() % 2 == 1;
    let (a, b) = law.branch_args(k);
    if k == poly.last_branch() && odd && t >= poly.min_width() {
        let (ta, tb) = law.tail_args();
        Ok(t - kernel_star(law, k, t, a, b)? + kernel_star(law, k + 1, t, a, b + PI / n)?
            - kernel_star(law, k + 1, t, ta, tb + PI / n)?
            - kernel_star(law, k + 1, t, ta, tb)?
            + seam)
    } else if k == poly.last_branch() && !odd {
        Ok(t - kernel_star(law, k, t, a, b)?)
    } else {
        Ok(t - kernel_star(law, k, t, a, b)? + kernel_star(law, k + 1, t, a, b + PI / n)?)
    }
}

/// Antiderivative of `t` times [`branch_star`], glued by `t²/2 · seam`.
fn branch_ring(law: &ChordLaw, seam: f64, k: u32, t: f64) -> Result<f64, Error> {
    let poly = law.polygon();
    if k > poly.last_branch() {
        return Err(Error::Branch);
    }
    let n = f64::from(poly.side_count());
    let odd = poly.side_count() % 2 == 1;
    let (a, b) = law.branch_args(k);
    let lead = t * t * t / 3.0;
    if k == poly.last_branch() && odd && t >= poly.min_width() {
        let (ta, tb) = law.tail_args();
        Ok(lead - kernel_ring(law, k, t, a, b)? + kernel_ring(law, k + 1, t, a, b + PI / n)?
            - kernel_ring(law, k + 1, t, ta, tb + PI / n)?
            - kernel_ring(law, k + 1, t, ta, tb)?
            + 0.5 * t * t * seam)
    } else if k == poly.last_branch() && !odd {
        Ok(lead - kernel_ring(law, k, t, a, b)?)
    } else {
        Ok(lead - kernel_ring(law, k, t, a, b)? + kernel_ring(law, k + 1, t, a, b + PI / n)?)
    }
}

/// Distance distribution of two independent uniform points in a regular
/// polygon, in closed form.
#[derive(Debug, Clone)]
pub struct DistanceLaw {
    law: ChordLaw,
    /// Integral of the chord CDF over the branches below branch k.
    cdf_run: Vec<f64>,
    /// First-tower branch antiderivative at its branch's left end.
    star_at_lo: Vec<f64>,
    /// Integral of `s` times the chord-CDF integral over the branches
    /// below branch k.
    moment_run: Vec<f64>,
    /// Second-tower branch antiderivative at its branch's left end.
    ring_at_lo: Vec<f64>,
    /// Value the extinction terms would subtract at the minimal width,
    /// added back so the towers stay continuous there (zero when even).
    c_seam: f64,
}

impl DistanceLaw {
    pub fn new(poly: RegularPolygon) -> Self {
        let law = ChordLaw::new(poly);
        let poly = law.polygon();
        let n = f64::from(poly.side_count());
        let c_seam = if poly.side_count() % 2 == 1 {
            let (ta, tb) = law.tail_args();
            let lam = poly.min_width();
            let k = poly.last_branch() + 1;
            kernel_star(&law, k, lam, ta, tb + PI / n).expect("seam kernel arguments are valid")
                + kernel_star(&law, k, lam, ta, tb).expect("seam kernel arguments are valid")
        } else {
            0.0
        };

        let last = poly.last_branch();
        let mut star_at_lo = Vec::with_capacity(last as usize + 1);
        let mut ring_at_lo = Vec::with_capacity(last as usize + 1);
        let mut cdf_run = vec![0.0];
        let mut moment_run = vec![0.0];
        for k in 0..=last {
            let lo = poly.vertex_distance(k);
            let star_lo = branch_star(&law, c_seam, k, lo).expect("branch ends are in range");
            let ring_lo = branch_ring(&law, c_seam, k, lo).expect("branch ends are in range");
            star_at_lo.push(star_lo);
            ring_at_lo.push(ring_lo);
            if k < last {
                let hi = poly.vertex_distance(k + 1);
                let run = cdf_run[k as usize];
                cdf_run.push(
                    run + branch_star(&law, c_seam, k, hi).expect("branch ends are in range")
                        - star_lo,
                );
                moment_run.push(
                    moment_run[k as usize]
                        + 0.5 * (hi * hi - lo * lo) * (run - star_lo)
                        + branch_ring(&law, c_seam, k, hi).expect("branch ends are in range")
                        - ring_lo,
                );
            }
        }
        Self { law, cdf_run, star_at_lo, moment_run, ring_at_lo, c_seam }
    }

    pub fn polygon(&self) -> &RegularPolygon {
        self.law.polygon()
    }

    /// The chord law the towers are built on.
    pub fn chord_law(&self) -> &ChordLaw {
        &self.law
    }

    /// First-tower kernel: the `t`-antiderivative of
    /// [`ChordLaw::kernel`], with the same argument rules; zero at
    /// `t = 0`.
    pub fn kernel_integral(&self, k: u32, t: f64, a: f64, b: f64) -> Result<f64, Error> {
        kernel_star(&self.law, k, t, a, b)
    }

    /// Second-tower kernel: the antiderivative of `t` times
    /// [`Self::kernel_integral`].
    pub fn kernel_moment_integral(&self, k: u32, t: f64, a: f64, b: f64) -> Result<f64, Error> {
        kernel_ring(&self.law, k, t, a, b)
    }

    /// Antiderivative of [`ChordLaw::branch_cdf`] on branch `k`,
    /// continuous across the odd minimal width.
    pub fn branch_integral(&self, k: u32, t: f64) -> Result<f64, Error> {
        branch_star(&self.law, self.c_seam, k, t)
    }

    /// Antiderivative of `t` times [`Self::branch_integral`] on branch
    /// `k`, continuous across the odd minimal width.
    pub fn branch_moment_integral(&self, k: u32, t: f64) -> Result<f64, Error> {
        branch_ring(&self.law, self.c_seam, k, t)
    }

    fn branch_of_closed(&self, t: f64) -> Result<u32, Error> {
        let poly = self.law.polygon();
        if !(t >= 0.0 && t <= poly.max_chord()) {
            return Err(Error::Domain);
        }
        // The top of the support belongs to the last branch.
        Ok(self.law.polygon().branch_of(t).unwrap_or(poly.last_branch()))
    }

    /// Integral of the chord CDF from zero to `t`. Domain
    /// `[0, max_chord]`.
    pub fn cdf_integral(&self, t: f64) -> Result<f64, Error> {
        let k = self.branch_of_closed(t)?;
        Ok(self.cdf_run[k as usize] + self.branch_integral(k, t)? - self.star_at_lo[k as usize])
    }

    /// Integral of `s` times [`Self::cdf_integral`] from zero to `t`.
    /// Domain `[0, max_chord]`.
    pub fn cdf_moment_integral(&self, t: f64) -> Result<f64, Error> {
        let k = self.branch_of_closed(t)?;
        let lo = self.law.polygon().vertex_distance(k);
        Ok(self.moment_run[k as usize]
            + 0.5 * (t * t - lo * lo) * (self.cdf_run[k as usize] - self.star_at_lo[k as usize])
            + self.branch_moment_integral(k, t)?
            - self.ring_at_lo[k as usize])
    }

    /// Density of the distance between two independent uniform points.
    ///
    /// Total on the reals: exactly `0.0` outside `(0, max_chord)`, `NaN`
    /// for `NaN`. Vanishes continuously at both ends of the support.
    pub fn pdf(&self, t: f64) -> f64 {
        if t.is_nan() {
            return f64::NAN;
        }
        let poly = self.law.polygon();
        if t <= 0.0 || t >= poly.max_chord() {
            return 0.0;
        }
        let area = poly.area();
        let phi = self.cdf_integral(t).expect("t strictly inside the support");
        2.0 * t / area * (PI + poly.perimeter() / area * (phi - t))
    }

    /// Probability that the distance between two independent uniform
    /// points is no greater than `t`.
    ///
    /// Total on the reals: exactly `0.0` for `t ≤ 0`, exactly `1.0` from
    /// the maximal chord on, `NaN` for `NaN`. Interior values are clamped
    /// to `[0, 1]`, which terminal rounding can otherwise leave by an
    /// ulp; [`cdf_moment_integral`](Self::cdf_moment_integral) exposes
    /// the raw closed form.
    pub fn cdf(&self, t: f64) -> f64 {
        if t.is_nan() {
            return f64::NAN;
        }
        let poly = self.law.polygon();
        if t <= 0.0 {
            return 0.0;
        }
        if t >= poly.max_chord() {
            return 1.0;
        }
        let area = poly.area();
        let u = poly.perimeter();
        let phi = self.cdf_moment_integral(t).expect("t strictly inside the support");
        let raw = (t * t * (PI - 2.0 * u / (3.0 * area) * t) + 2.0 * u / area * phi) / area;
        raw.clamp(0.0, 1.0)
    }

    /// Mean distance, by adaptive quadrature of `t · pdf(t)` split at the
    /// law's breakpoints.
    pub fn mean(&self) -> f64 {
        let poly = self.law.polygon();
        let mut points: Vec<f64> =
            (0..=poly.last_branch() + 1).map(|k| poly.vertex_distance(k)).collect();
        if poly.side_count() % 2 == 1 {
            let lam = poly.min_width();
            let pos = points.iter().position(|&p| p > lam).expect("minimal width below diameter");
            points.insert(pos, lam);
        }
        crate::numerics::integrate_split(|t| t * self.pdf(t), &points, 1e-13 * poly.circumradius())
            .expect("the density is piecewise smooth")
            .value
    }
}

/// Distance density of the equilateral triangle with circumradius `r`,
/// in the two-arm elementary form. Shares nothing with the kernel
/// towers; the tests cross-check the two routes.
pub fn triangle_pdf(r: f64, t: f64) -> f64 {
    if t.is_nan() {
        return f64::NAN;
    }
    let top = 3.0f64.sqrt() * r;
    if t <= 0.0 || t >= top {
        return 0.0;
    }
    let u = 3.0 * 3.0f64.sqrt() * r;
    let area = 0.75 * 3.0f64.sqrt() * r * r;
    let lam = 1.5 * r;
    let phi = if t < lam {
        (3.0 * 3.0f64.sqrt() + 2.0 * PI) * t * t / (36.0 * r)
    } else {
        let x = lam / t;
        1.5 * (t * ((1.0 - x) * (1.0 + x)).sqrt() - 0.5 * PI * r)
            + (0.25 / 3.0f64.sqrt() - PI / 9.0) * t * t / r
            + (lam + t * t / (3.0 * r)) * x.asin()
    };
    2.0 * t / area * (PI + u / area * (phi - t))
}

/// Mean distance of two uniform points in the equilateral triangle with
/// circumradius `r`: `(√3 r / 20)(4 + 3 ln 3)`.
pub fn triangle_mean_distance(r: f64) -> f64 {
    3.0f64.sqrt() * r / 20.0 * (4.0 + 3.0 * 3.0f64.ln())
}

/// Distance density of two uniform points in the disk of radius
/// `radius`: the smooth reference the polygonal law approaches as the
/// side count grows.
pub fn circle_pdf(radius: f64, t: f64) -> f64 {
    if t.is_nan() {
        return f64::NAN;
    }
    if t <= 0.0 || t >= 2.0 * radius {
        return 0.0;
    }
    let x = t / (2.0 * radius);
    let root = ((1.0 - x) * (1.0 + x)).sqrt();
    2.0 * t / (radius * radius) * (2.0 / PI * x.acos() - t / (PI * radius) * root)
}

/// Distance CDF of two uniform points in the disk of radius `radius`.
pub fn circle_cdf(radius: f64, t: f64) -> f64 {
    if t.is_nan() {
        return f64::NAN;
    }
    if t <= 0.0 {
        return 0.0;
    }
    let x = t / (2.0 * radius);
    if x >= 1.0 {
        return 1.0;
    }
    let root = ((1.0 - x) * (1.0 + x)).sqrt();
    16.0 / PI * (0.5 * x * x * x.acos() + (x.asin() - x * root * (1.0 + 2.0 * x * x)) / 8.0)
}

/// Mean distance `128 · radius / (45π)` of two uniform points in the
/// disk.
pub fn circle_mean_distance(radius: f64) -> f64 {
    128.0 * radius / (45.0 * PI)
}
