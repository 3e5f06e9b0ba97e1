//! `cubepath`: shortest surface paths between interior points of opposite
//! faces of a cube, four-face endpoint regions, and probability heatmaps.
//!
//! Exit codes: 0 success, 1 domain or I/O error, 2 usage error, 3
//! verification failure.

use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use cubepath::distribution::{heatmap, HeatmapMode};
use cubepath::geometry::Point;
use cubepath::regions::region_set;
use cubepath::solver::solve;
use cubepath::unfolding::nets::enumerate_nets;
use cubepath_cli::render;
use cubepath_cli::verify;

#[derive(Parser)]
#[command(
    name = "cubepath",
    version,
    about = "Shortest surface paths between opposite faces of a cube",
    long_about = "Computes shortest surface paths between interior points of opposite faces \
                  of a cube via unfoldings, the regions of targets whose shortest path crosses \
                  four faces, and the probability distribution of such targets over source \
                  points.\n\nCoordinates use half-edge units: each face is the open square \
                  (-1,1) x (-1,1)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one source/target instance
    Solve {
        /// Source point as "s1,s2", strictly inside the open face
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        source: Point,
        /// Target point as "t1,t2" on the opposite face, projected straight
        /// down ("top view")
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        target: Point,
        /// Emit JSON instead of plain text
        #[arg(long)]
        json: bool,
        /// Physical edge length; reported lengths scale accordingly
        #[arg(long, default_value_t = 2.0)]
        edge_length: f64,
    },
    /// Compute the four-face endpoint regions for a source point
    Regions {
        /// Source point as "s1,s2"
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        source: Point,
        /// Write an SVG plot of the regions
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Write the region polygons as JSON
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Evaluate the four-face probability over a source grid
    Heatmap {
        /// Sources per axis
        #[arg(long, default_value_t = 101)]
        n: usize,
        /// Use the lattice estimator instead of exact region areas
        #[arg(long)]
        sampled: bool,
        /// Target lattice pitch for --sampled
        #[arg(long, default_value_t = 0.01)]
        pitch: f64,
        /// Write CSV here (stdout when no output is chosen)
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write a grayscale SVG raster here
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Worker threads (0 = machine parallelism)
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Run the verification suites
    Verify {
        /// Suite name: "all" or one criterion
        #[arg(long, default_value = "all")]
        suite: String,
        /// Worker threads (0 = machine parallelism)
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Directory for verification exports
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Count cube unfoldings and print one net per congruence class
    Nets,
}

fn parse_point(raw: &str) -> Result<Point, String> {
    let (a, b) = raw
        .split_once(',')
        .ok_or_else(|| format!("expected \"x,y\", got {raw:?}"))?;
    let x: f64 = a
        .trim()
        .parse()
        .map_err(|_| format!("bad coordinate {a:?}"))?;
    let y: f64 = b
        .trim()
        .parse()
        .map_err(|_| format!("bad coordinate {b:?}"))?;
    Ok(Point::new(x, y))
}

fn fail(msg: String) -> i32 {
    eprintln!("error: {msg}");
    1
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), i32> {
    fs::write(path, contents).map_err(|e| fail(format!("cannot write {}: {e}", path.display())))
}

fn with_thread_pool<T>(threads: usize, f: impl FnOnce() -> T + Send) -> T
where
    T: Send,
{
    if threads == 0 {
        return f();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
        .install(f)
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Solve {
            source,
            target,
            json,
            edge_length,
        } => {
            if !(edge_length.is_finite() && edge_length > 0.0) {
                return fail(format!("edge length must be positive, got {edge_length}"));
            }
            let result = match solve(source, target) {
                Ok(r) => r,
                Err(e) => return fail(e.to_string()),
            };
            let scale = edge_length / 2.0;
            if json {
                print!("{}", render::solve_json(&result, scale));
            } else {
                print!("{}", render::solve_text(&result, scale));
            }
            0
        }
        Command::Regions { source, svg, json } => {
            if !cubepath::is_interior(source) {
                return fail(format!(
                    "point {source} is not strictly inside the open face (-1,1)^2"
                ));
            }
            let rs = region_set(source);
            let labels: Vec<String> = rs
                .nonempty()
                .map(|(seq, poly)| format!("{seq} ({})", render::sig12(poly.area())))
                .collect();
            println!(
                "source {}  regions {}  union area {}  probability {}",
                source,
                if labels.is_empty() {
                    "none".to_string()
                } else {
                    labels.join(", ")
                },
                render::sig12(rs.union_area),
                render::sig12(rs.probability)
            );
            if let Some(path) = svg {
                if let Err(code) = write_file(&path, &render::regions_svg(&rs)) {
                    return code;
                }
            }
            if let Some(path) = json {
                if let Err(code) = write_file(&path, &render::regions_json(&rs)) {
                    return code;
                }
            }
            0
        }
        Command::Heatmap {
            n,
            sampled,
            pitch,
            csv,
            svg,
            threads,
        } => {
            if n < 3 {
                return fail(format!("heatmap needs n >= 3, got {n}"));
            }
            if sampled && !(pitch > 0.0 && pitch <= 0.1) {
                return fail(format!("pitch must lie in (0, 0.1], got {pitch}"));
            }
            let mode = if sampled {
                HeatmapMode::Sampled { pitch }
            } else {
                HeatmapMode::Exact
            };
            let grid = with_thread_pool(threads, || heatmap(n, mode));
            let csv_text = render::heatmap_csv(&grid);
            match &csv {
                Some(path) => {
                    if let Err(code) = write_file(path, &csv_text) {
                        return code;
                    }
                }
                None if svg.is_none() => print!("{csv_text}"),
                None => {}
            }
            if let Some(path) = svg {
                if let Err(code) = write_file(&path, &render::heatmap_svg(&grid)) {
                    return code;
                }
            }
            0
        }
        Command::Verify {
            suite,
            threads,
            out_dir,
        } => {
            let reports = match with_thread_pool(threads, || verify::run_suite(&suite, &out_dir)) {
                Some(r) => r,
                None => {
                    eprintln!(
                        "error: unknown suite {suite:?}; expected \"all\" or one of: {}",
                        verify::CRITERIA.join(", ")
                    );
                    return 2;
                }
            };
            let mut all_passed = true;
            for r in &reports {
                println!(
                    "{} {} - {}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.detail
                );
                all_passed &= r.passed;
            }
            if all_passed {
                0
            } else {
                3
            }
        }
        Command::Nets => {
            print!("{}", render::nets_text(&enumerate_nets()));
            0
        }
    }
}

fn main() {
    std::process::exit(run());
}
