//! The verification suite behind `polygauge verify`: every closed form
//! driven against an independent oracle, one record per check.
//!
//! The oracles deliberately share no code with what they check. The
//! chord CDF is compared against adaptive quadrature of the window
//! profile and against the clipping engine; the distance law against
//! finite differences down its antiderivative towers, against the
//! integral transform of the chord law, and against elementary closed
//! forms where they exist; both laws against seeded Monte Carlo via the
//! Kolmogorov-Smirnov statistic. A mutation control flips one
//! coefficient row at a time and demands the suite notice.
//!
//! Checks are pure and deterministic: same [`Config`], same [`Report`],
//! bit for bit. Runtime budgets are the caller's concern.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use core::f64::consts::PI;
use core::fmt::Write as _;

use crate::chord_law::{circle_mean_chord, mean_chord, ChordLaw};
use crate::distance_law::{triangle_mean_distance, triangle_pdf, DistanceLaw};
#[cfg(not(feature = "std"))]
use crate::float::FloatExt;
use crate::geometry::{Line, RegularPolygon};
use crate::montecarlo::{chord_lengths, point_distances, EmpiricalCdf};
use crate::numerics::{central_diff, integrate, integrate_split};
use crate::profile;

/// Fewest Monte Carlo samples worth testing: below this the
/// Kolmogorov-Smirnov threshold is so loose the comparison says nothing,
/// so the statistical checks are skipped rather than rubber-stamped.
pub const MIN_MC_SAMPLES: usize = 10_000;

/// Outcome of one check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Not run; never counts against [`Report::all_passed`]. The detail
    /// says why.
    Skipped,
}

/// Which side of its bound the observed value must fall on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Discrepancy gauge: pass iff `observed ≤ bound`.
    AtMost,
    /// Detection gauge (mutation controls): pass iff `observed > bound`.
    Beyond,
}

/// One verified statement.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub observed: f64,
    pub bound: f64,
    pub direction: Direction,
    /// Worst-case location, or the reason for a skip.
    pub detail: String,
}

impl Check {
    fn at_most(name: &'static str, observed: f64, bound: f64, detail: String) -> Self {
        let status =
            if observed.is_finite() && observed <= bound { Status::Pass } else { Status::Fail };
        Self { name, status, observed, bound, direction: Direction::AtMost, detail }
    }

    fn beyond(name: &'static str, observed: f64, bound: f64, detail: String) -> Self {
        let status =
            if observed.is_finite() && observed > bound { Status::Pass } else { Status::Fail };
        Self { name, status, observed, bound, direction: Direction::Beyond, detail }
    }

    fn skipped(name: &'static str, detail: String) -> Self {
        Self {
            name,
            status: Status::Skipped,
            observed: 0.0,
            bound: 0.0,
            direction: Direction::AtMost,
            detail,
        }
    }
}

/// Everything [`run`] produced, in execution order.
#[derive(Debug, Clone)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    /// No check failed (skipped checks do not count).
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    /// One line per check, fixed order, ASCII only.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            if c.status == Status::Skipped {
                let _ = writeln!(out, "[{tag}] {:<32} ({})", c.name, c.detail);
            } else {
                let rel = match c.direction {
                    Direction::AtMost => "within",
                    Direction::Beyond => "beyond",
                };
                let _ = writeln!(
                    out,
                    "[{tag}] {:<32} observed {:9.3e} {rel} {:9.3e}  ({})",
                    c.name, c.observed, c.bound, c.detail
                );
            }
        }
        out
    }
}

/// Suite configuration. Only the statistical checks read it; the
/// analytic checks have fixed scopes.
#[derive(Debug, Clone)]
pub struct Config {
    /// Side counts eligible for the Monte Carlo comparison. The default
    /// six cover odd/even side counts with and without the extinction
    /// arm, plus a many-sided case.
    pub mc_sides: Vec<u32>,
    /// Sample count per side count and law.
    pub samples: usize,
    /// Seed for every sampling run.
    pub seed: u64,
    /// Worker threads for sample generation; the samples do not depend
    /// on it.
    pub threads: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self { mc_sides: vec![3, 4, 5, 7, 8, 12], samples: 1_000_000, seed: 42, threads: 1 }
    }
}

/// Running maximum with a note about where it happened.
struct Worst {
    value: f64,
    detail: String,
}

impl Worst {
    fn new() -> Self {
        Self { value: 0.0, detail: String::new() }
    }

    fn note(&mut self, value: f64, detail: impl FnOnce() -> String) {
        // The negated comparison promotes NaN to the worst value seen.
        if !(value <= self.value) {
            self.value = value;
            self.detail = detail();
        }
    }

    fn into_check(self, name: &'static str, bound: f64) -> Check {
        Check::at_most(name, self.value, bound, self.detail)
    }
}

/// Running minimum, for detection gauges.
struct Least {
    value: f64,
    detail: String,
}

impl Least {
    fn new() -> Self {
        Self { value: f64::INFINITY, detail: String::new() }
    }

    fn note(&mut self, value: f64, detail: impl FnOnce() -> String) {
        if !(value >= self.value) {
            self.value = value;
            self.detail = detail();
        }
    }

    fn into_check(self, name: &'static str, bound: f64) -> Check {
        Check::beyond(name, self.value, bound, self.detail)
    }
}

fn polygon(n: u32, r: f64) -> RegularPolygon {
    RegularPolygon::new(n, r).expect("verified side counts and radii are valid")
}

/// Both CDFs hit 0 and 1 exactly at the ends of the support, evaluated
/// at the endpoints and one ulp inside (the closed forms, not the
/// clamps).
pub fn endpoint_checks() -> Vec<Check> {
    let mut chord = Worst::new();
    let mut distance = Worst::new();
    for n in 3..=40u32 {
        for r in [0.5, 1.0, 3.0] {
            let law = DistanceLaw::new(polygon(n, r));
            let top = law.polygon().max_chord();
            let f = law.chord_law();
            let chord_gap = f
                .cdf(0.0)
                .abs()
                .max((f.cdf(top) - 1.0).abs())
                .max((f.cdf(top.next_down()) - 1.0).abs());
            chord.note(chord_gap, || format!("n={n} r={r}"));
            let dist_gap = law
                .cdf(0.0)
                .abs()
                .max((law.cdf(top) - 1.0).abs())
                .max((law.cdf(top.next_down()) - 1.0).abs());
            distance.note(dist_gap, || format!("n={n} r={r}"));
        }
    }
    vec![
        chord.into_check("chord-cdf-endpoints", 1e-12),
        distance.into_check("distance-cdf-endpoints", 1e-9),
    ]
}

/// No law jumps at a branch end: the one-ulp gap on the incoming side of
/// every breakpoint stays far below the bound. (On the outgoing side of
/// the even minimal width the chord CDF is continuous but rises with a
/// square-root cusp, so a fixed-offset probe there measures the cusp,
/// not the gluing.)
pub fn continuity_checks() -> Vec<Check> {
    let mut chord = Worst::new();
    let mut dist_cdf = Worst::new();
    let mut dist_pdf = Worst::new();
    for n in 3..=40u32 {
        let law = DistanceLaw::new(polygon(n, 1.0));
        let poly = law.polygon().clone();
        let mut stops: Vec<f64> =
            (1..=poly.last_branch() + 1).map(|k| poly.vertex_distance(k)).collect();
        if poly.side_count() % 2 == 1 {
            stops.push(poly.min_width());
        }
        for &x in &stops {
            let f = law.chord_law();
            chord.note((f.cdf(x) - f.cdf(x.next_down())).abs(), || format!("n={n} x={x:.6}"));
            dist_cdf
                .note((law.cdf(x) - law.cdf(x.next_down())).abs(), || format!("n={n} x={x:.6}"));
            dist_pdf
                .note((law.pdf(x) - law.pdf(x.next_down())).abs(), || format!("n={n} x={x:.6}"));
        }
    }
    vec![
        chord.into_check("chord-cdf-continuity", 1e-8),
        dist_cdf.into_check("distance-cdf-continuity", 1e-8),
        dist_pdf.into_check("distance-pdf-continuity", 1e-8),
    ]
}

/// The closed chord CDF equals one minus the quadrature of the window
/// profile over the branch window, normalized by the perimeter: the
/// algebra against the geometry, 50 points per branch.
pub fn quadrature_checks() -> Vec<Check> {
    let mut worst = Worst::new();
    for n in 3..=12u32 {
        let poly = polygon(n, 1.0);
        let law = ChordLaw::new(poly.clone());
        let u = poly.perimeter();
        for k in 0..=poly.last_branch() {
            let lo = poly.vertex_distance(k);
            let hi = poly.vertex_distance(k + 1);
            for i in 0..50 {
                let s = lo + (f64::from(i) + 0.5) / 50.0 * (hi - lo);
                let gap = match profile::measure_numeric(&poly, k, s) {
                    Ok(mu) => (law.cdf(s) - (1.0 - mu / u)).abs(),
                    Err(_) => f64::INFINITY,
                };
                worst.note(gap, || format!("n={n} k={k} s={s:.6}"));
            }
        }
    }
    vec![worst.into_check("quadrature-equivalence", 1e-8)]
}

/// Lines reconstructed from the window profile cut the polygon in a
/// chord of exactly the requested length, 200 positive-offset pairs per
/// side count.
pub fn round_trip_checks() -> Vec<Check> {
    let mut worst = Worst::new();
    for n in 3..=12u32 {
        let poly = polygon(n, 1.0);
        let mut state = 0x243f_6a88_85a3_08d3u64 ^ u64::from(n);
        let mut rand = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let mut checked = 0;
        let mut attempts = 0;
        while checked < 200 && attempts < 100_000 {
            attempts += 1;
            let k = ((rand() * f64::from(poly.last_branch() + 1)) as u32).min(poly.last_branch());
            let lo = poly.vertex_distance(k);
            let hi = poly.vertex_distance(k + 1);
            let s = lo + (0.02 + 0.96 * rand()) * (hi - lo);
            let phi = 2.0 * PI * rand();
            let d = profile::distance(&poly, k, s, phi).expect("window arguments in range");
            if d < 1e-4 {
                continue;
            }
            let chord = poly.chord_length(&Line::new(d, phi));
            worst.note((chord - s).abs(), || format!("n={n} k={k} s={s:.6} phi={phi:.6}"));
            checked += 1;
        }
        if checked < 200 {
            worst.note(f64::INFINITY, || format!("n={n}: only {checked} usable pairs"));
        }
    }
    vec![worst.into_check("geometric-round-trip", 1e-9)]
}

/// Below the first breakpoint the chord CDF is exactly linear, and the
/// triangle's unit-circumradius slope matches its published decimal.
pub fn linear_onset_checks() -> Vec<Check> {
    let mut worst = Worst::new();
    for n in 3..=12u32 {
        for r in [0.5, 1.0, 3.0] {
            let poly = polygon(n, r);
            let law = ChordLaw::new(poly.clone());
            let top = poly.vertex_distance(1).min(poly.min_width());
            for i in 0..=49 {
                let s = top * (f64::from(i) / 49.0);
                let gap =
                    (law.cdf(s) - law.cdf_linear(s).expect("s is on the linear stretch")).abs();
                worst.note(gap, || format!("n={n} r={r} s={s:.6}"));
            }
        }
    }
    let slope =
        ChordLaw::new(polygon(3, 1.0)).cdf_linear(1.0).expect("1.0 is on the linear stretch");
    vec![
        worst.into_check("linear-onset", 1e-12),
        Check::at_most(
            "linear-onset-slope",
            (slope - 0.637741).abs(),
            5e-7,
            format!("slope {slope:.12}"),
        ),
    ]
}

/// Numeric integration of the chord survival function reproduces the
/// mean chord `π·area/perimeter`, and the square's value matches its
/// published decimal.
pub fn mean_chord_checks() -> Vec<Check> {
    let mut worst = Worst::new();
    let mut square = f64::NAN;
    for n in 3..=12u32 {
        let poly = polygon(n, 1.0);
        let law = ChordLaw::new(poly.clone());
        let top = poly.max_chord();
        let mut points: Vec<f64> =
            (0..=poly.last_branch() + 1).map(|k| poly.vertex_distance(k)).collect();
        if poly.side_count() % 2 == 1 {
            let lam = poly.min_width();
            let pos = points.iter().position(|&p| p > lam).expect("minimal width below diameter");
            points.insert(pos, lam);
        }
        let survival = integrate_split(|s| 1.0 - law.cdf(s), &points, 1e-11)
            .map(|q| q.value)
            .unwrap_or(f64::NAN);
        let want = mean_chord(&poly);
        worst.note((survival - want).abs() / want, || format!("n={n} got {survival:.12}"));
        if n == 4 {
            square = survival;
        }
        let _ = top;
    }
    vec![
        worst.into_check("mean-chord", 1e-6),
        Check::at_most(
            "mean-chord-square-decimal",
            (square - 1.110721).abs(),
            5e-7,
            format!("numeric {square:.12}"),
        ),
    ]
}

/// The kernel-tower distance density specializes, for the triangle, to
/// the elementary two-arm closed form, and the mean distance carries the
/// logarithmic constant.
pub fn triangle_checks() -> Vec<Check> {
    let law = DistanceLaw::new(polygon(3, 1.0));
    let top = law.polygon().max_chord();
    let mut worst = Worst::new();
    for i in 0..100 {
        let t = top * (f64::from(i) + 0.5) / 100.0;
        worst.note((law.pdf(t) - triangle_pdf(1.0, t)).abs(), || format!("t={t:.6}"));
    }
    let mean = law.mean();
    vec![
        worst.into_check("triangle-distance-density", 1e-10),
        Check::at_most(
            "triangle-mean-distance",
            (mean - triangle_mean_distance(1.0)).abs(),
            1e-9,
            format!("mean {mean:.12}"),
        ),
    ]
}

fn relative_gap(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(1e-6)
}

/// Central differences walk every antiderivative tower back down one
/// level: branch integrals to branch CDFs, kernel moments to weighted
/// kernels, and the two running integrals to their integrands.
pub fn tower_checks() -> Vec<Check> {
    const FRACS: [f64; 7] = [0.1, 0.25, 0.4, 0.55, 0.7, 0.85, 0.95];
    const H: f64 = 1e-5;
    let mut branch = Worst::new();
    let mut kernel = Worst::new();
    let mut first = Worst::new();
    let mut second = Worst::new();
    for n in [3u32, 4, 5, 8, 12] {
        let law = DistanceLaw::new(polygon(n, 1.0));
        let poly = law.polygon().clone();
        for k in 0..=poly.last_branch() {
            let lo = poly.vertex_distance(k);
            let hi = poly.vertex_distance(k + 1);
            for frac in FRACS {
                let t = lo + frac * (hi - lo);
                let diff = central_diff(|x| law.branch_integral(k, x).unwrap(), t, H);
                let want = law.chord_law().branch_cdf(k, t).unwrap();
                branch.note(relative_gap(diff, want), || format!("n={n} k={k} t={t:.6}"));

                let diff = central_diff(|x| law.cdf_integral(x).unwrap(), t, H);
                let want = law.chord_law().cdf(t);
                first.note(relative_gap(diff, want), || format!("n={n} t={t:.6}"));

                let diff = central_diff(|x| law.cdf_moment_integral(x).unwrap(), t, H);
                let want = t * law.cdf_integral(t).unwrap();
                second.note(relative_gap(diff, want), || format!("n={n} t={t:.6}"));
            }
        }
        for k in 1..=poly.last_branch() {
            let (a, b) = law.chord_law().branch_args(k);
            let lo = poly.vertex_distance(k);
            let hi = poly.vertex_distance(k + 1);
            for frac in [0.3, 0.6, 0.9] {
                let t = lo + frac * (hi - lo);
                let diff = central_diff(|x| law.kernel_moment_integral(k, x, a, b).unwrap(), t, H);
                let want = t * law.kernel_integral(k, t, a, b).unwrap();
                kernel.note(relative_gap(diff, want), || format!("n={n} k={k} t={t:.6}"));
            }
        }
    }
    vec![
        branch.into_check("tower-branch-cdf", 1e-5),
        kernel.into_check("tower-kernel-moment", 1e-5),
        first.into_check("tower-cdf-integral", 1e-5),
        second.into_check("tower-moment-integral", 1e-5),
    ]
}

/// The closed distance density equals the integral transform of the
/// chord law, `(2ut/A²)·∫ₜ (1−F)`, with the transform integrated
/// numerically.
pub fn transform_checks() -> Vec<Check> {
    let mut worst = Worst::new();
    for n in [3u32, 4, 5, 7, 8] {
        let law = DistanceLaw::new(polygon(n, 1.0));
        let poly = law.polygon().clone();
        let (u, area, top) = (poly.perimeter(), poly.area(), poly.max_chord());
        for frac in [0.05, 0.15, 0.3, 0.45, 0.6, 0.75, 0.85, 0.9] {
            let t = frac * top;
            let mut points: Vec<f64> = (1..=poly.last_branch() + 1)
                .map(|k| poly.vertex_distance(k))
                .filter(|&p| p > t)
                .collect();
            if poly.side_count() % 2 == 1 && poly.min_width() > t {
                points.push(poly.min_width());
                points.sort_by(f64::total_cmp);
            }
            points.insert(0, t);
            let survival = integrate_split(|s| 1.0 - law.chord_law().cdf(s), &points, 1e-12)
                .map(|q| q.value)
                .unwrap_or(f64::NAN);
            let transform = 2.0 * u * t / (area * area) * survival;
            let got = law.pdf(t);
            let gap = (got - transform).abs() / got.abs().max(1e-3);
            worst.note(gap, || format!("n={n} t={t:.6}"));
        }
    }
    vec![worst.into_check("distance-transform", 1e-5)]
}

/// The distance density integrates to one.
pub fn normalization_checks() -> Vec<Check> {
    let mut worst = Worst::new();
    for n in 3..=12u32 {
        let law = DistanceLaw::new(polygon(n, 1.0));
        let poly = law.polygon().clone();
        let mut points: Vec<f64> =
            (0..=poly.last_branch() + 1).map(|k| poly.vertex_distance(k)).collect();
        if poly.side_count() % 2 == 1 {
            let lam = poly.min_width();
            let pos = points.iter().position(|&p| p > lam).expect("minimal width below diameter");
            points.insert(pos, lam);
        }
        let total =
            integrate_split(|t| law.pdf(t), &points, 1e-9).map(|q| q.value).unwrap_or(f64::NAN);
        worst.note((total - 1.0).abs(), || format!("n={n} total {total:.12}"));
    }
    vec![worst.into_check("distance-normalization", 1e-6)]
}

fn draw_chords(poly: &RegularPolygon, cfg: &Config) -> Vec<f64> {
    #[cfg(feature = "std")]
    if cfg.threads > 1 {
        return crate::montecarlo::chord_lengths_with_workers(
            poly,
            cfg.seed,
            cfg.samples,
            cfg.threads,
        );
    }
    chord_lengths(poly, cfg.seed, cfg.samples)
}

fn draw_distances(poly: &RegularPolygon, cfg: &Config) -> Vec<f64> {
    #[cfg(feature = "std")]
    if cfg.threads > 1 {
        return crate::montecarlo::point_distances_with_workers(
            poly,
            cfg.seed,
            cfg.samples,
            cfg.threads,
        );
    }
    point_distances(poly, cfg.seed, cfg.samples)
}

/// Seeded sampling against the closed laws: the Kolmogorov-Smirnov
/// statistic stays under `4/√N` for both laws on every configured side
/// count.
pub fn monte_carlo_checks(cfg: &Config) -> Vec<Check> {
    if cfg.samples < MIN_MC_SAMPLES {
        let why =
            format!("monte carlo needs at least {MIN_MC_SAMPLES} samples, got {}", cfg.samples);
        return vec![
            Check::skipped("monte-carlo-chords", why.clone()),
            Check::skipped("monte-carlo-distances", why),
        ];
    }
    if cfg.mc_sides.is_empty() {
        let why = String::from("no side counts selected");
        return vec![
            Check::skipped("monte-carlo-chords", why.clone()),
            Check::skipped("monte-carlo-distances", why),
        ];
    }
    let bound = 4.0 / (cfg.samples as f64).sqrt();
    let mut chords = Worst::new();
    let mut distances = Worst::new();
    for &n in &cfg.mc_sides {
        let law = DistanceLaw::new(polygon(n, 1.0));
        let poly = law.polygon().clone();
        let emp = EmpiricalCdf::new(draw_chords(&poly, cfg));
        let ks = emp.ks_distance(|s| law.chord_law().cdf(s));
        chords.note(ks, || format!("n={n}"));
        let emp = EmpiricalCdf::new(draw_distances(&poly, cfg));
        let ks = emp.ks_distance(|t| law.cdf(t));
        distances.note(ks, || format!("n={n}"));
    }
    vec![
        chords.into_check("monte-carlo-chords", bound),
        distances.into_check("monte-carlo-distances", bound),
    ]
}

/// Branch probes for the mutation control: one midpoint per branch, plus
/// a point on the extinction arm for odd side counts.
fn mutation_probes(poly: &RegularPolygon) -> Vec<(u32, f64)> {
    let mut probes = Vec::new();
    for k in 0..=poly.last_branch() {
        let lo = poly.vertex_distance(k);
        let hi = poly.vertex_distance(k + 1);
        probes.push((k, 0.5 * (lo + hi)));
    }
    if poly.side_count() % 2 == 1 {
        probes.push((poly.last_branch(), 0.5 * (poly.min_width() + poly.max_chord())));
    }
    probes
}

/// Deliberately broken builds must be caught. Negating coefficient rows
/// 1, 3, or 4 throws the law visibly off the quadrature oracle. Negating
/// row 2 provably does not move any branch CDF (its contributions cancel
/// in every branch combination, which the control verifies to 1e-12
/// rather than takes on faith), so that row's detection happens one
/// level down, where single kernels meet the quadrature oracle before
/// the cancellation can hide the flip.
pub fn mutation_checks() -> Vec<Check> {
    let mut detected = [Least::new(), Least::new(), Least::new()];
    let mut null_row = Worst::new();
    for n in [5u32, 8] {
        let poly = polygon(n, 1.0);
        let law = ChordLaw::new(poly.clone());
        let u = poly.perimeter();
        for (slot, flip) in [(0usize, 1u32), (1, 3), (2, 4)] {
            let mut breach = Worst::new();
            for &(k, s) in &mutation_probes(&poly) {
                let mutated = law.branch_cdf_mutated(k, s, flip).expect("probe in range");
                let mu = profile::measure_numeric(&poly, k, s).expect("probe in range");
                breach.note((mutated - (1.0 - mu / u)).abs(), || format!("k={k} s={s:.6}"));
            }
            detected[slot]
                .note(breach.value, || format!("n={n} best hiding spot {}", breach.detail));
        }
    }
    for n in [5u32, 8, 12] {
        let poly = polygon(n, 1.0);
        let law = ChordLaw::new(poly.clone());
        for k in 0..=poly.last_branch() {
            let lo = poly.vertex_distance(k);
            let hi = poly.vertex_distance(k + 1);
            for i in 0..10 {
                let s = lo + (f64::from(i) + 0.5) / 10.0 * (hi - lo);
                let gap = (law.branch_cdf_mutated(k, s, 2).unwrap()
                    - law.branch_cdf(k, s).unwrap())
                .abs();
                null_row.note(gap, || format!("n={n} k={k} s={s:.6}"));
            }
        }
        if poly.side_count() % 2 == 1 {
            let k = poly.last_branch();
            for i in 0..10 {
                let s = poly.min_width()
                    + (f64::from(i) + 0.5) / 10.0 * (poly.max_chord() - poly.min_width());
                let gap = (law.branch_cdf_mutated(k, s, 2).unwrap()
                    - law.branch_cdf(k, s).unwrap())
                .abs();
                null_row.note(gap, || format!("n={n} k={k} s={s:.6} (extinction arm)"));
            }
        }
    }
    // Row 2 at kernel granularity: the flipped kernel against the
    // oriented profile quadrature that defines it.
    let mut kernel_level = Least::new();
    for (n, k, s, tail) in [(5u32, 1u32, 1.3, false), (8, 2, 1.6, false), (5, 2, 1.85, true)] {
        let poly = polygon(n, 1.0);
        let law = ChordLaw::new(poly.clone());
        let (a, b) = if tail {
            let (ta, tb) = law.tail_args();
            (ta, tb)
        } else {
            law.branch_args(k)
        };
        let mutated = law.kernel_mutated(k, s, a, b, 2).expect("probe in range");
        let upper = (a / s).asin() - b;
        let (lo, hi, sign) = if upper >= 0.0 { (0.0, upper, 1.0) } else { (upper, 0.0, -1.0) };
        let j = integrate(|psi| profile::chord_offset(&poly, k, s, psi).unwrap(), lo, hi, 1e-13)
            .expect("profile piece is smooth")
            .value;
        let oracle = sign * j / ((PI / f64::from(n)).sin() * poly.circumradius());
        kernel_level.note((mutated - oracle).abs(), || format!("n={n} k={k} s={s}"));
    }
    let [row1, row3, row4] = detected;
    vec![
        row1.into_check("mutation-coefficient-row-1", 1e-8),
        null_row.into_check("mutation-row-2-null-in-every-branch", 1e-12),
        kernel_level.into_check("mutation-row-2-kernel-level", 1e-8),
        row3.into_check("mutation-coefficient-row-3", 1e-8),
        row4.into_check("mutation-coefficient-row-4", 1e-8),
    ]
}

/// The whole suite, in a fixed order.
pub fn run(cfg: &Config) -> Report {
    let mut checks = Vec::new();
    checks.extend(endpoint_checks());
    checks.extend(continuity_checks());
    checks.extend(quadrature_checks());
    checks.extend(round_trip_checks());
    checks.extend(linear_onset_checks());
    checks.extend(mean_chord_checks());
    checks.extend(triangle_checks());
    checks.extend(tower_checks());
    checks.extend(transform_checks());
    checks.extend(normalization_checks());
    checks.extend(monte_carlo_checks(cfg));
    checks.extend(mutation_checks());
    Report { checks }
}

/// The disk references used by the CLI's `--circle` series, pinned to
/// their own oracles (quadrature and sampling live in the tests; here
/// the closed forms cross-check each other).
pub fn circle_reference_checks() -> Vec<Check> {
    let mut worst = Worst::new();
    let r = 1.0;
    // Survival integral of the chord law reproduces the mean chord.
    let mean = integrate(|s| 1.0 - crate::chord_law::circle_cdf(r, s), 0.0, 2.0 * r, 1e-12)
        .map(|q| q.value)
        .unwrap_or(f64::NAN);
    worst.note((mean - circle_mean_chord(r)).abs(), || String::from("chord mean"));
    // Distance density integrates to one and differentiates the CDF.
    let total = integrate(|t| crate::distance_law::circle_pdf(r, t), 0.0, 2.0 * r, 1e-12)
        .map(|q| q.value)
        .unwrap_or(f64::NAN);
    worst.note((total - 1.0).abs(), || String::from("distance normalization"));
    for t in [0.4, 1.0, 1.6] {
        let slope = central_diff(|x| crate::distance_law::circle_cdf(r, x), t, 1e-6);
        worst.note((slope - crate::distance_law::circle_pdf(r, t)).abs(), || {
            format!("distance cdf slope at t={t}")
        });
    }
    vec![worst.into_check("circle-references", 1e-8)]
}
