//! Closed-form distribution of the random chord length.
//!
//! A uniform random line (invariant measure, conditioned to hit the
//! polygon) cuts a chord whose length distribution has an explicit
//! piecewise form: on each branch `[ℓ_k, ℓ_{k+1})` the CDF is an affine
//! combination of four elementary kernels in `s`, with coefficients
//! built from the polygon's angles. [`ChordLaw::cdf`] evaluates it;
//! [`profile::measure_numeric`](crate::profile::measure_numeric) is the
//! independent quadrature oracle it is tested against.
//!
//! The kernel [`ChordLaw::kernel`] equals `csc(π/n)/r` times the
//! antiderivative of the window profile evaluated at `arcsin(a/s) − b`,
//! which is how the oracle comparison is phrased in the tests.

use alloc::vec::Vec;

use core::f64::consts::PI;

#[cfg(not(feature = "std"))]
use crate::float::FloatExt;
use crate::geometry::RegularPolygon;
use crate::Error;

/// Relative slack for the `a ≤ s` precondition of [`ChordLaw::kernel`]:
/// branch endpoints computed in floating point may overshoot by a few
/// ulps, which is clamped rather than rejected.
pub(crate) const KERNEL_SLACK: f64 = 1e-12;

/// Chord length distribution of a regular polygon, in closed form.
#[derive(Debug, Clone)]
pub struct ChordLaw {
    poly: RegularPolygon,
    /// Per-branch kernel argument `a`: the distance below which the
    /// branch's transition angle would leave its window.
    branch_a: Vec<f64>,
    /// Per-branch kernel argument `b`: the branch's half-angle offset.
    branch_b: Vec<f64>,
    /// Kernel arguments of the extinction-angle terms on the last odd
    /// branch (unused for even side counts).
    tail_a: f64,
    tail_b: f64,
}

impl ChordLaw {
    pub fn new(poly: RegularPolygon) -> Self {
        let n = f64::from(poly.side_count());
        let last = poly.last_branch();
        let mut branch_a = Vec::with_capacity(last as usize + 1);
        let mut branch_b = Vec::with_capacity(last as usize + 1);
        for k in 0..=last {
            let kf = f64::from(k);
            branch_a.push(
                2.0 * poly.circumradius() * (kf * PI / n).sin() * ((kf + 1.0) * PI / n).sin(),
            );
            branch_b.push(kf * PI / n);
        }
        let tail_a = poly.min_width();
        let tail_b = 0.5 * PI * (1.0 - 1.0 / n);
        Self { poly, branch_a, branch_b, tail_a, tail_b }
    }

    pub fn polygon(&self) -> &RegularPolygon {
        &self.poly
    }

    /// Kernel arguments `(a, b)` assembled for branch `k`.
    pub(crate) fn branch_args(&self, k: u32) -> (f64, f64) {
        (self.branch_a[k as usize], self.branch_b[k as usize])
    }

    /// Kernel arguments `(a, b)` of the extinction-angle terms on the
    /// last odd branch.
    pub(crate) fn tail_args(&self) -> (f64, f64) {
        (self.tail_a, self.tail_b)
    }

    /// Kernel coefficient `i ∈ {1,2,3,4}` for kernel index `k` and
    /// arguments `(a, b)`.
    ///
    /// Rejects `k = 0` (that kernel is identically zero) and indices with
    /// `2k ≡ 0 (mod n)`, where the coefficients are singular; the law's
    /// dispatch never reaches either.
    pub fn coefficient(&self, k: u32, i: u32, a: f64, b: f64) -> Result<f64, Error> {
        if k == 0 || (2 * k) % self.poly.side_count() == 0 {
            return Err(Error::Branch);
        }
        if !(1..=4).contains(&i) {
            return Err(Error::Domain);
        }
        let n = f64::from(self.poly.side_count());
        let r = self.poly.circumradius();
        let gamma = f64::from(k) * PI / n;
        let csc_n = 1.0 / (PI / n).sin();
        let csc_2g = 1.0 / (2.0 * gamma).sin();
        let cot_2g = (2.0 * gamma).cos() * csc_2g;
        Ok(match i {
            1 => csc_n / (4.0 * r) * ((2.0 * b).sin() * csc_2g - 2.0 * b * cot_2g),
            2 => {
                a * (b.cos() * (PI / n).cos() / (PI / n).sin() / gamma.cos()
                    - a / (2.0 * r) * (2.0 * b).sin() * csc_n * csc_2g)
            }
            3 => {
                -(b.sin() * (PI / n).cos() / (PI / n).sin() / gamma.cos()
                    + a / (2.0 * r) * (2.0 * b).cos() * csc_n * csc_2g)
            }
            _ => csc_n / (2.0 * r) * cot_2g,
        })
    }

    fn basis(i: u32, s: f64, a: f64) -> f64 {
        match i {
            1 => s,
            2 => 1.0 / s,
            // The factored difference keeps precision when s is barely
            // above a, where the law has a vertical tangent.
            3 => ((s - a).max(0.0) * (s + a)).sqrt() / s,
            _ => s * (a / s).min(1.0).asin(),
        }
    }

    fn kernel_impl(&self, k: u32, s: f64, a: f64, b: f64, flip: u32) -> Result<f64, Error> {
        if k == 0 {
            return Ok(0.0);
        }
        if !(s > 0.0) || !(a >= 0.0) || a > s * (1.0 + KERNEL_SLACK) {
            return Err(Error::Domain);
        }
        let mut total = 0.0;
        for i in 1..=4 {
            let sign = if i == flip { -1.0 } else { 1.0 };
            total += sign * self.coefficient(k, i, a, b)? * Self::basis(i, s, a);
        }
        Ok(total)
    }

    /// Evaluate the four-term kernel `Σᵢ coefficient(k,i,a,b)·Lᵢ(s,a)`.
    ///
    /// Equals `csc(π/n)/r · ∫₀^{arcsin(a/s)−b} q_k(s,ψ) dψ` (oriented),
    /// which the tests verify by quadrature. Requires `0 ≤ a ≤ s` up to
    /// a relative slack of a few ulps; `k = 0` returns zero.
    pub fn kernel(&self, k: u32, s: f64, a: f64, b: f64) -> Result<f64, Error> {
        self.kernel_impl(k, s, a, b, 0)
    }

    /// [`kernel`](Self::kernel) with coefficient row `flip` negated: the
    /// mutation control's window into a deliberately broken build.
    pub(crate) fn kernel_mutated(
        &self,
        k: u32,
        s: f64,
        a: f64,
        b: f64,
        flip: u32,
    ) -> Result<f64, Error> {
        self.kernel_impl(k, s, a, b, flip)
    }

    /// CDF restricted to branch `k`, with coefficient row `flip` negated
    /// in every kernel evaluation (`0` leaves the law intact). The
    /// mutation check uses the flipped variants as deliberately broken
    /// controls.
    pub(crate) fn branch_cdf_mutated(&self, k: u32, s: f64, flip: u32) -> Result<f64, Error> {
        let last = self.poly.last_branch();
        if k > last {
            return Err(Error::Branch);
        }
        let n = f64::from(self.poly.side_count());
        let odd = self.poly.side_count() % 2 == 1;
        let (a, b) = (self.branch_a[k as usize], self.branch_b[k as usize]);
        if k == last && odd && s >= self.poly.min_width() {
            Ok(1.0 - self.kernel_impl(k, s, a, b, flip)?
                + self.kernel_impl(k + 1, s, a, b + PI / n, flip)?
                - self.kernel_impl(k + 1, s, self.tail_a, self.tail_b + PI / n, flip)?
                - self.kernel_impl(k + 1, s, self.tail_a, self.tail_b, flip)?)
        } else if k == last && !odd {
            Ok(1.0 - self.kernel_impl(k, s, a, b, flip)?)
        } else {
            Ok(1.0 - self.kernel_impl(k, s, a, b, flip)?
                + self.kernel_impl(k + 1, s, a, b + PI / n, flip)?)
        }
    }

    /// CDF restricted to branch `k` (no endpoint shortcuts): the affine
    /// kernel combination for `ℓ_k ≤ s < ℓ_{k+1}`.
    pub fn branch_cdf(&self, k: u32, s: f64) -> Result<f64, Error> {
        self.branch_cdf_mutated(k, s, 0)
    }

    /// Probability that a uniform random chord is no longer than `s`.
    ///
    /// Total on the reals: exactly `0.0` for `s ≤ 0`, exactly `1.0` from
    /// the maximal chord on, `NaN` for `NaN`. Interior values are clamped
    /// to `[0, 1]`, which terminal rounding can otherwise leave by an
    /// ulp; [`branch_cdf`](Self::branch_cdf) exposes the raw branch
    /// values.
    pub fn cdf(&self, s: f64) -> f64 {
        if s.is_nan() {
            return f64::NAN;
        }
        if s <= 0.0 {
            return 0.0;
        }
        if s >= self.poly.max_chord() {
            return 1.0;
        }
        let k = self.poly.branch_of(s).expect("s strictly inside the support");
        self.branch_cdf(k, s).expect("in-branch arguments are valid").clamp(0.0, 1.0)
    }

    /// The law's initial linear stretch `slope · s`, valid on
    /// `[0, ℓ₁]` (on `[0, min_width]` for the triangle, whose first
    /// branch extends past it).
    ///
    /// Agrees with [`cdf`](Self::cdf) to working precision on its domain
    /// and errs with [`Error::Domain`] outside.
    pub fn cdf_linear(&self, s: f64) -> Result<f64, Error> {
        let top = self.poly.vertex_distance(1).min(self.poly.min_width());
        if !(s >= 0.0 && s <= top) {
            return Err(Error::Domain);
        }
        let n = f64::from(self.poly.side_count());
        let w = PI / n;
        let slope =
            ((1.0 - w / w.tan()) / w.sin() + w / w.cos()) / (4.0 * self.poly.circumradius());
        Ok(slope * s)
    }

    /// Chord length density by symmetric differencing of the closed-form
    /// CDF. The full stencil `[s − step, s + step]` must stay inside one
    /// branch, strictly inside the support.
    pub fn pdf_numeric(&self, s: f64, step: f64) -> Result<f64, Error> {
        if !(step > 0.0) || !(s - step > 0.0) || s + step >= self.poly.max_chord() {
            return Err(Error::Domain);
        }
        let k = self.poly.branch_of(s).ok_or(Error::Domain)?;
        if s - step < self.poly.vertex_distance(k) || s + step > self.poly.vertex_distance(k + 1) {
            return Err(Error::Domain);
        }
        Ok(crate::numerics::central_diff(|x| self.cdf(x), s, step))
    }
}

/// Mean chord length of the polygon under the invariant line measure:
/// `π · area / perimeter`.
pub fn mean_chord(poly: &RegularPolygon) -> f64 {
    PI * poly.area() / poly.perimeter()
}

/// Chord length CDF of the disk of radius `radius`: the smooth reference
/// the polygonal law approaches as the side count grows.
///
/// Total on the reals like [`ChordLaw::cdf`]: `0.0` for `s ≤ 0`, `1.0`
/// from the diameter on, `NaN` for `NaN`.
pub fn circle_cdf(radius: f64, s: f64) -> f64 {
    if s.is_nan() {
        return f64::NAN;
    }
    if s <= 0.0 {
        return 0.0;
    }
    let x = s / (2.0 * radius);
    if x >= 1.0 {
        return 1.0;
    }
    1.0 - ((1.0 - x) * (1.0 + x)).sqrt()
}

/// Mean chord length `π · radius / 2` of the disk.
pub fn circle_mean_chord(radius: f64) -> f64 {
    0.5 * PI * radius
}
