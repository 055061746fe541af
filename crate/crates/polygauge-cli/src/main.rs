//! Command-line front end over the polygauge library: point evaluation,
//! tabulation for plotting, and the verification suite.
//!
//! Exit codes: 0 success, 1 runtime failure (including a failed
//! verification), 2 invalid parameters. Everything diagnostic goes to
//! stderr; payload output is byte-deterministic for a fixed command
//! line and seed, so timing lines also go to stderr.

mod output;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use polygauge::chord_law::{circle_cdf as circle_chord_cdf, mean_chord, ChordLaw};
use polygauge::distance_law::{circle_cdf as circle_distance_cdf, circle_pdf};
use polygauge::{verify, DistanceLaw, RegularPolygon};

use output::Record;

#[derive(Parser)]
#[command(
    name = "polygauge",
    version,
    about = "Chord-length and point-distance laws of regular polygons"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one quantity at one point.
    Eval(EvalArgs),
    /// Tabulate a law over its support.
    Table(TableArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Number of sides.
    #[arg(long)]
    n: u32,
    /// Circumradius.
    #[arg(long, default_value_t = 1.0)]
    r: f64,
    /// F (chord CDF), g (distance density), G (distance CDF),
    /// meanchord, or meandist.
    #[arg(long)]
    quantity: String,
    /// Abscissa; required for F, g, and G.
    #[arg(long)]
    at: Option<f64>,
}

#[derive(Args)]
struct TableArgs {
    /// Number of sides.
    #[arg(long)]
    n: u32,
    /// Circumradius.
    #[arg(long, default_value_t = 1.0)]
    r: f64,
    /// F (chord CDF), g (distance density), or G (distance CDF).
    #[arg(long)]
    quantity: String,
    /// Grid size over the support, endpoints included.
    #[arg(long, default_value_t = 101)]
    points: u32,
    /// csv or json.
    #[arg(long, default_value = "csv")]
    format: String,
    /// Add the same quantity for the disk of the same circumradius as a
    /// second series.
    #[arg(long)]
    circle: bool,
    /// Destination path, or the literal `stdout`.
    #[arg(long, default_value = "stdout")]
    out: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Side counts as `lo..hi` (inclusive) or a single value; selects
    /// which of the canonical Monte Carlo side counts run.
    #[arg(long, default_value = "3..12")]
    n: String,
    /// Monte Carlo samples per side count and law.
    #[arg(long, default_value_t = 1_000_000)]
    samples: usize,
    /// Seed for every sampling run.
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

/// A diagnosed failure: the message goes to stderr, the code to the OS.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    fn runtime(message: impl Into<String>) -> Self {
        Self { code: 1, message: message.into() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(args) => cmd_eval(&args),
        Command::Table(args) => cmd_table(&args),
        Command::Verify(args) => cmd_verify(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("polygauge: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn build_polygon(n: u32, r: f64) -> Result<RegularPolygon, Failure> {
    RegularPolygon::new(n, r).map_err(|e| Failure::usage(format!("--n {n} --r {r}: {e}")))
}

fn required_at(args: &EvalArgs) -> Result<f64, Failure> {
    let at = args
        .at
        .ok_or_else(|| Failure::usage(format!("--quantity {} needs --at", args.quantity)))?;
    if !at.is_finite() {
        return Err(Failure::usage("--at must be finite"));
    }
    Ok(at)
}

fn cmd_eval(args: &EvalArgs) -> Result<(), Failure> {
    let poly = build_polygon(args.n, args.r)?;
    let value = match args.quantity.as_str() {
        "F" => ChordLaw::new(poly).cdf(required_at(args)?),
        "g" => DistanceLaw::new(poly).pdf(required_at(args)?),
        "G" => DistanceLaw::new(poly).cdf(required_at(args)?),
        "meanchord" => mean_chord(&poly),
        "meandist" => DistanceLaw::new(poly).mean(),
        other => return Err(Failure::usage(format!("unknown quantity {other:?}"))),
    };
    println!("{}", output::twelve_digits(value));
    Ok(())
}

/// Evenly spaced abscissae over `[0, top]` with exact endpoints;
/// interior points that land on a breakpoint are nudged inward by
/// `1e-12·r` so tabulation never sits on a branch seam.
fn grid(poly: &RegularPolygon, points: u32) -> Vec<f64> {
    let top = poly.max_chord();
    let mut stops: Vec<f64> = (1..=poly.last_branch()).map(|k| poly.vertex_distance(k)).collect();
    if poly.side_count() % 2 == 1 {
        stops.push(poly.min_width());
    }
    let nudge = 1e-12 * poly.circumradius();
    (0..points)
        .map(|i| {
            let x = top * (f64::from(i) / f64::from(points - 1));
            if i == 0 || i == points - 1 {
                return x;
            }
            match stops.iter().find(|&&b| (x - b).abs() < nudge) {
                Some(&b) => b - nudge,
                None => x,
            }
        })
        .collect()
}

fn cmd_table(args: &TableArgs) -> Result<(), Failure> {
    let poly = build_polygon(args.n, args.r)?;
    if args.points < 2 {
        return Err(Failure::usage("--points must be at least 2"));
    }
    let xs = grid(&poly, args.points);
    let r = args.r;
    type Eval = Box<dyn Fn(f64) -> f64>;
    let (series, eval, circle_eval): (&'static str, Eval, Eval) = match args.quantity.as_str() {
        "F" => {
            let law = ChordLaw::new(poly);
            ("F", Box::new(move |x| law.cdf(x)), Box::new(move |x| circle_chord_cdf(r, x)))
        }
        "g" => {
            let law = DistanceLaw::new(poly);
            ("g", Box::new(move |x| law.pdf(x)), Box::new(move |x| circle_pdf(r, x)))
        }
        "G" => {
            let law = DistanceLaw::new(poly);
            ("G", Box::new(move |x| law.cdf(x)), Box::new(move |x| circle_distance_cdf(r, x)))
        }
        other => return Err(Failure::usage(format!("table needs F, g, or G, not {other:?}"))),
    };
    let mut records: Vec<Record> =
        xs.iter().map(|&x| Record { x, value: eval(x), series }).collect();
    if args.circle {
        records.extend(xs.iter().map(|&x| Record { x, value: circle_eval(x), series: "circle" }));
    }
    if let Some(bad) = records.iter().find(|rec| !(rec.x.is_finite() && rec.value.is_finite())) {
        return Err(Failure::runtime(format!("non-finite value at x={}", bad.x)));
    }
    let text = match args.format.as_str() {
        "csv" => output::csv(&records),
        "json" => output::json(&records),
        other => return Err(Failure::usage(format!("unknown format {other:?}"))),
    };
    emit(&args.out, &text)
}

fn emit(out: &str, text: &str) -> Result<(), Failure> {
    if out == "stdout" {
        print!("{text}");
        return Ok(());
    }
    std::fs::write(out, text).map_err(|e| Failure::runtime(format!("writing {out}: {e}")))
}

/// `lo..hi` (inclusive) or a single integer.
fn parse_range(text: &str) -> Result<(u32, u32), Failure> {
    let bad = || Failure::usage(format!("--n {text:?}: expected `lo..hi` or a single integer"));
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: u32 = lo.parse().map_err(|_| bad())?;
        let hi: u32 = hi.parse().map_err(|_| bad())?;
        if lo < 3 || hi < lo {
            return Err(bad());
        }
        return Ok((lo, hi));
    }
    let n: u32 = text.parse().map_err(|_| bad())?;
    if n < 3 {
        return Err(bad());
    }
    Ok((n, n))
}

/// Worker count: available parallelism capped by `POLYGAUGE_THREADS`.
/// The samples do not depend on it.
fn worker_count() -> Result<usize, Failure> {
    let available = std::thread::available_parallelism().map_or(1, usize::from);
    match std::env::var("POLYGAUGE_THREADS") {
        Ok(text) => {
            let cap: usize = text.parse().map_err(|_| {
                Failure::usage(format!("POLYGAUGE_THREADS={text:?} is not a number"))
            })?;
            Ok(available.min(cap.max(1)))
        }
        Err(_) => Ok(available),
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), Failure> {
    let (lo, hi) = parse_range(&args.n)?;
    let cfg = verify::Config {
        mc_sides: verify::Config::default()
            .mc_sides
            .into_iter()
            .filter(|&n| (lo..=hi).contains(&n))
            .collect(),
        samples: args.samples,
        seed: args.seed,
        threads: worker_count()?,
    };
    let start = Instant::now();
    let report = verify::run(&cfg);
    print!("{}", report.render());
    eprintln!("verified in {:.2}s", start.elapsed().as_secs_f64());
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::runtime("verification failed"))
    }
}
