//! Seeded Monte Carlo oracles for both laws, plus the empirical CDF and
//! Kolmogorov-Smirnov distance used to compare them against the closed
//! forms.
//!
//! Chords are drawn by rejection from the rigid-motion-invariant line
//! measure: offset and normal angle are uniform over the circumdisk's
//! parameter box, and lines that miss the polygon are redrawn. Point
//! pairs are uniform via the polygon's fan of congruent center-edge
//! triangles. Chord lengths come from the clipping routine, point
//! distances from plain coordinates, so the sampler shares no formulas
//! with the closed-form laws.
//!
//! A sampling run fans out over [`STREAMS`] counter-based generator
//! streams whose ids depend only on the side count, the law, and the
//! stream index. The run is therefore byte-identical however the streams
//! are scheduled: [`chord_lengths`] and [`point_distances`] fill them
//! sequentially, and callers that want parallelism can fill each
//! [`stream_spans`] slice on its own thread with the `fill_*_stream`
//! functions and get the same bytes.

use alloc::vec;
use alloc::vec::Vec;

use core::f64::consts::TAU;
use core::ops::Range;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

#[cfg(not(feature = "std"))]
use crate::float::FloatExt;
use crate::geometry::{Line, Point, RegularPolygon};

/// Number of generator streams a sampling run fans out over. Part of the
/// reproducibility contract: changing it changes the samples.
pub const STREAMS: u64 = 16;

/// Which law a run samples. Feeds the stream id, so chord and distance
/// runs with the same seed never share a stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    /// Chord length under the invariant line measure.
    Chord,
    /// Distance between two independent uniform interior points.
    Distance,
}

/// Generator stream id for stream `j < STREAMS` of a run.
pub fn stream_id(n: u32, law: Law, j: u64) -> u64 {
    let kind = match law {
        Law::Chord => 0u64,
        Law::Distance => 1,
    };
    (u64::from(n) << 8) | (kind << 4) | j
}

/// One generator stream, individually seeded and positioned so streams
/// of a run are independent and reproducible in isolation.
#[derive(Debug, Clone)]
pub struct StreamRng {
    inner: ChaCha8Rng,
}

impl StreamRng {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        Self { inner }
    }

    /// Uniform on `[0, 1)` from the top 53 bits of one generator word.
    pub fn next_f64(&mut self) -> f64 {
        const SCALE: f64 = 1.0 / 9_007_199_254_740_992.0; // 2⁻⁵³
        (self.inner.next_u64() >> 11) as f64 * SCALE
    }
}

/// One chord length under the invariant line measure, by rejection.
pub fn sample_chord(poly: &RegularPolygon, rng: &mut StreamRng) -> f64 {
    loop {
        let phi = TAU * rng.next_f64();
        let p = poly.circumradius() * rng.next_f64();
        let len = poly.chord_length(&Line::new(p, phi));
        if len > 0.0 {
            return len;
        }
    }
}

/// Uniform sampler of interior points.
#[derive(Debug, Clone)]
pub struct PointSampler {
    verts: Vec<Point>,
}

impl PointSampler {
    pub fn new(poly: &RegularPolygon) -> Self {
        Self { verts: poly.vertices() }
    }

    /// One uniform point: pick one of the `n` congruent center-edge
    /// triangles, then map two uniforms onto it by the square-root
    /// trick. The center sits at the origin, so only the edge vertices
    /// appear.
    pub fn sample(&self, rng: &mut StreamRng) -> Point {
        let n = self.verts.len();
        let pick = ((rng.next_f64() * n as f64) as usize).min(n - 1);
        let v1 = self.verts[pick];
        let v2 = self.verts[(pick + 1) % n];
        let edge = rng.next_f64().sqrt();
        let along = rng.next_f64();
        Point::new(
            edge * ((1.0 - along) * v1.x + along * v2.x),
            edge * ((1.0 - along) * v1.y + along * v2.y),
        )
    }

    /// Distance between two independent uniform points.
    pub fn sample_pair_distance(&self, rng: &mut StreamRng) -> f64 {
        let a = self.sample(rng);
        let b = self.sample(rng);
        a.distance(&b)
    }
}

/// How a run of `count` samples is split over the streams: equal chunks,
/// with the remainder spread over the leading streams.
pub fn stream_spans(count: usize) -> Vec<Range<usize>> {
    let streams = STREAMS as usize;
    let base = count / streams;
    let extra = count % streams;
    let mut spans = Vec::with_capacity(streams);
    let mut start = 0;
    for j in 0..streams {
        let len = base + usize::from(j < extra);
        spans.push(start..start + len);
        start += len;
    }
    spans
}

/// Fill `out` with stream `j`'s share of a chord run.
pub fn fill_chord_stream(poly: &RegularPolygon, seed: u64, j: u64, out: &mut [f64]) {
    let mut rng = StreamRng::new(seed, stream_id(poly.side_count(), Law::Chord, j));
    for slot in out {
        *slot = sample_chord(poly, &mut rng);
    }
}

/// Fill `out` with stream `j`'s share of a point-distance run.
pub fn fill_distance_stream(poly: &RegularPolygon, seed: u64, j: u64, out: &mut [f64]) {
    let sampler = PointSampler::new(poly);
    let mut rng = StreamRng::new(seed, stream_id(poly.side_count(), Law::Distance, j));
    for slot in out {
        *slot = sampler.sample_pair_distance(&mut rng);
    }
}

/// `count` chord lengths for the run `(poly, seed)`, stream by stream.
pub fn chord_lengths(poly: &RegularPolygon, seed: u64, count: usize) -> Vec<f64> {
    let mut out = vec![0.0; count];
    for (j, span) in stream_spans(count).into_iter().enumerate() {
        fill_chord_stream(poly, seed, j as u64, &mut out[span]);
    }
    out
}

/// `count` point-pair distances for the run `(poly, seed)`, stream by
/// stream.
pub fn point_distances(poly: &RegularPolygon, seed: u64, count: usize) -> Vec<f64> {
    let mut out = vec![0.0; count];
    for (j, span) in stream_spans(count).into_iter().enumerate() {
        fill_distance_stream(poly, seed, j as u64, &mut out[span]);
    }
    out
}

/// Run a per-stream fill across `workers` threads. Streams are dealt
/// round-robin; the spans are disjoint, so the bytes match the
/// sequential fill for any worker count.
#[cfg(feature = "std")]
fn fill_across_workers(
    count: usize,
    workers: usize,
    fill: impl Fn(u64, &mut [f64]) + Sync,
) -> Vec<f64> {
    let mut out = vec![0.0; count];
    let workers = workers.clamp(1, STREAMS as usize);
    let mut buckets: Vec<Vec<(u64, &mut [f64])>> = (0..workers).map(|_| Vec::new()).collect();
    let mut rest: &mut [f64] = &mut out;
    for (j, span) in stream_spans(count).into_iter().enumerate() {
        let (head, tail) = rest.split_at_mut(span.len());
        buckets[j % workers].push((j as u64, head));
        rest = tail;
    }
    std::thread::scope(|scope| {
        for bucket in buckets {
            scope.spawn(|| {
                for (j, slice) in bucket {
                    fill(j, slice);
                }
            });
        }
    });
    out
}

/// [`chord_lengths`] with the streams spread over `workers` threads;
/// same bytes for every worker count.
#[cfg(feature = "std")]
pub fn chord_lengths_with_workers(
    poly: &RegularPolygon,
    seed: u64,
    count: usize,
    workers: usize,
) -> Vec<f64> {
    fill_across_workers(count, workers, |j, slice| fill_chord_stream(poly, seed, j, slice))
}

/// [`point_distances`] with the streams spread over `workers` threads;
/// same bytes for every worker count.
#[cfg(feature = "std")]
pub fn point_distances_with_workers(
    poly: &RegularPolygon,
    seed: u64,
    count: usize,
    workers: usize,
) -> Vec<f64> {
    fill_across_workers(count, workers, |j, slice| fill_distance_stream(poly, seed, j, slice))
}

/// Empirical distribution of a nonempty sample.
#[derive(Debug, Clone)]
pub struct EmpiricalCdf {
    sorted: Vec<f64>,
}

impl EmpiricalCdf {
    /// Sorts the samples. Panics on an empty sample.
    pub fn new(mut samples: Vec<f64>) -> Self {
        assert!(!samples.is_empty(), "empirical CDF needs at least one sample");
        samples.sort_unstable_by(f64::total_cmp);
        Self { sorted: samples }
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Fraction of samples `≤ x`.
    pub fn eval(&self, x: f64) -> f64 {
        self.sorted.partition_point(|&v| v <= x) as f64 / self.sorted.len() as f64
    }

    /// Two-sided Kolmogorov-Smirnov distance against a reference CDF,
    /// evaluated from both sides of every jump of the step function.
    pub fn ks_distance(&self, cdf: impl Fn(f64) -> f64) -> f64 {
        let n = self.sorted.len() as f64;
        let mut sup = 0.0f64;
        for (i, &x) in self.sorted.iter().enumerate() {
            let f = cdf(x);
            sup = sup.max((f - i as f64 / n).abs());
            sup = sup.max((f - (i + 1) as f64 / n).abs());
        }
        sup
    }
}
