//! The `dense-partition` command line: `generate`, `decompose`, `verify`,
//! `stats` and `render`.
//!
//! Exit status is 0 on success, 1 when a verification check fails and 2 on
//! bad input, IO or pipeline errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::decomposer::{
    self, assign_cells, build_star_triangulation, is_rich, DecomposeConfig, DecomposeError, Decomposition,
    Edge, FormatError, GridConfig, DEFAULT_C_PRIME, DEFAULT_K_MAX,
};
use crate::pointset::{self, PointSet, PointSetError};
use crate::verifier::{lemma_bounds_report, verify_partition};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    PointSet(#[from] PointSetError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Parser)]
#[command(name = "dense-partition", version, about = "Plane subgraph partitions of dense point sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated point set.
    Generate {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Decompose the complete geometric graph on a point file.
    Decompose {
        points: PathBuf,
        #[command(flatten)]
        run: RunConfig,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a decomposition file against its point file.
    Verify { points: PathBuf, decomposition: PathBuf },
    /// Density, cell counts and the grid bounds for one `k`.
    Stats {
        points: PathBuf,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, default_value_t = 5)]
        k: usize,
        #[arg(long = "c-prime", default_value_t = DEFAULT_C_PRIME)]
        c_prime: f64,
    },
    /// Static SVG of points, grid, triangulation segments and edges.
    Render {
        points: PathBuf,
        #[arg(long)]
        decomposition: Option<PathBuf>,
        /// Subgraph of the decomposition to draw.
        #[arg(long, default_value_t = 0)]
        subgraph: usize,
        /// Draw the `k x k` grid, rich cells and the segments of S.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        alpha: Option<f64>,
        /// Highlight the matching `i -- i + n/2`.
        #[arg(long)]
        antipodal: bool,
        /// Extra edges to highlight, `u-v,u-v,...`.
        #[arg(long)]
        highlight: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Perturbed `side x side` lattice.
    Grid {
        #[arg(long)]
        side: usize,
        #[arg(long, default_value_t = 0.2)]
        perturb: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Centrally symmetric set on `{-a..a}^2` without the origin.
    Reflection {
        #[arg(long)]
        a: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Uniform points in the unit square.
    Uniform {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Adaptive,
    Theoretical,
    Random,
    Fallback,
}

/// Decomposition settings shared by the pipeline commands.
#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Density constant; defaults to the set's effective alpha.
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long = "k-max", default_value_t = DEFAULT_K_MAX)]
    pub k_max: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Adaptive)]
    pub mode: ModeArg,
    #[arg(long = "c-prime", default_value_t = DEFAULT_C_PRIME)]
    pub c_prime: f64,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Generate { kind } => {
            let (ps, path) = match kind {
                GenKind::Grid { side, perturb, seed, out } => (pointset::gen_perturbed_grid(side, perturb, seed)?, out),
                GenKind::Reflection { a, seed, out } => (pointset::gen_reflection_lowerbound_seeded(a, seed)?, out),
                GenKind::Uniform { n, seed, out } => (pointset::gen_uniform_unit_square(n, seed)?, out),
            };
            ps.save(&path)?;
            let alpha = ps.density_stats()?.alpha_effective;
            writeln!(out, "n={} scale={} alpha_effective={alpha:.6}", ps.len(), ps.scale())?;
            Ok(0)
        }
        Command::Decompose { points, run, out: path } => {
            let ps = PointSet::load(&points)?;
            let d = decompose_with(&ps, &run)?;
            if let Some(path) = path {
                d.save(path)?;
            }
            let m = &d.meta;
            writeln!(
                out,
                "n={} k={} m={} mode={} count={} c_realized={:.6}",
                m.n,
                m.k,
                m.m,
                m.mode,
                m.subgraph_count,
                d.c_realized()
            )?;
            Ok(0)
        }
        Command::Verify { points, decomposition } => {
            let ps = PointSet::load(&points)?;
            let d = Decomposition::load(&decomposition)?;
            let report = verify_partition(&ps, &d);
            write!(out, "{report}")?;
            let pass = report.passed();
            writeln!(out, "RESULT {}", if pass { "PASS" } else { "FAIL" })?;
            Ok(if pass { 0 } else { 1 })
        }
        Command::Stats { points, alpha, k, c_prime } => {
            let ps = PointSet::load(&points)?;
            write!(out, "{}", stats_text(&ps, alpha, k, c_prime)?)?;
            Ok(0)
        }
        Command::Render { points, decomposition, subgraph, k, alpha, antipodal, highlight, out: path } => {
            let ps = PointSet::load(&points)?;
            let mut layers = RenderLayers::default();
            if let Some(k) = k {
                let alpha = match alpha {
                    Some(a) => a,
                    None => ps.density_stats()?.alpha_effective,
                };
                layers.grid = Some(GridConfig::new(&ps, k.max(1), alpha));
            }
            if let Some(dp) = decomposition {
                let d = Decomposition::load(dp)?;
                let s = d
                    .subgraphs
                    .get(subgraph)
                    .ok_or_else(|| CliError::Usage(format!("no subgraph {subgraph} in the decomposition")))?;
                layers.subgraph = s.edges.clone();
            }
            if antipodal {
                let h = ps.len() / 2;
                layers.highlight.extend((0..h).map(|i| Edge::new(i, i + h)));
            }
            if let Some(spec) = highlight {
                layers.highlight.extend(parse_edge_list(&spec, ps.len())?);
            }
            std::fs::write(&path, render_svg(&ps, &layers))?;
            writeln!(out, "wrote {}", path.display())?;
            Ok(0)
        }
    }
}

/// Runs the decomposer as configured.
pub fn decompose_with(ps: &PointSet, run: &RunConfig) -> Result<Decomposition, CliError> {
    if let ModeArg::Random = run.mode {
        return Ok(decomposer::decompose_random_mode(ps)?);
    }
    let alpha = match run.alpha {
        Some(a) => a,
        None => ps.density_stats()?.alpha_effective,
    };
    let config = DecomposeConfig { alpha, k_max: run.k_max, c_prime: run.c_prime };
    let mode = match run.mode {
        ModeArg::Adaptive => decomposer::Mode::Adaptive,
        ModeArg::Theoretical => decomposer::Mode::Theoretical,
        ModeArg::Fallback | ModeArg::Random => decomposer::Mode::Fallback,
    };
    Ok(decomposer::decompose(ps, &config, mode)?)
}

fn parse_edge_list(spec: &str, n: usize) -> Result<Vec<Edge>, CliError> {
    spec.split(',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            let bad = || CliError::Usage(format!("bad edge {t:?}"));
            let (a, b) = t.split_once('-').ok_or_else(bad)?;
            let (a, b): (usize, usize) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
            if a == b || a >= n || b >= n {
                return Err(bad());
            }
            Ok(Edge::new(a, b))
        })
        .collect()
}

/// The `stats` report.
pub fn stats_text(ps: &PointSet, alpha: Option<f64>, k: usize, c_prime: f64) -> Result<String, CliError> {
    if k < 1 {
        return Err(CliError::Usage("k must be at least 1".into()));
    }
    let ds = ps.density_stats()?;
    let alpha = alpha.unwrap_or(ds.alpha_effective);
    let gc = GridConfig::new(ps, k, alpha);
    let cells = assign_cells(ps, &gc);
    let n = ps.len();
    let mut s = String::new();
    writeln!(s, "n={n} scale={}", ps.scale()).unwrap();
    writeln!(s, "alpha_effective={:.6} alpha0={:.6} alpha={alpha:.6}", ds.alpha_effective, ds.alpha0).unwrap();
    writeln!(s, "D^2={:.6} volume_bound_violated={}", ds.diameter_ratio_sq(), ds.volume_bound_violated).unwrap();
    writeln!(s, "k={k} n0={} square_side={} jitter={}", gc.n0, gc.square_side, gc.jitter).unwrap();
    writeln!(s, "cells (top row first):").unwrap();
    for row in (0..k).rev() {
        let counts: Vec<String> = (0..k).map(|col| cells[col * k + row].len().to_string()).collect();
        writeln!(s, "  {}", counts.join(" ")).unwrap();
    }
    let rich = cells.iter().filter(|c| is_rich(c.len(), n, k)).count();
    writeln!(s, "rich={rich}").unwrap();
    for check in lemma_bounds_report(ps, &gc, &cells, c_prime) {
        writeln!(s, "{check}").unwrap();
    }
    Ok(s)
}

/// What [`render_svg`] draws on top of the points.
#[derive(Debug, Clone, Default)]
pub struct RenderLayers {
    pub grid: Option<GridConfig>,
    pub subgraph: Vec<Edge>,
    pub highlight: Vec<Edge>,
}

const CANVAS: f64 = 800.0;
const MARGIN: f64 = 20.0;

/// Deterministic SVG; the same inputs give the same bytes.
pub fn render_svg(ps: &PointSet, layers: &RenderLayers) -> String {
    let pts = ps.points();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    let mut grow = |x: f64, y: f64| {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    };
    for p in pts {
        grow(p.x() as f64, p.y() as f64);
    }
    if let Some(gc) = &layers.grid {
        let o = gc.square_origin;
        grow(o.x() as f64, o.y() as f64);
        grow((o.x() + gc.square_side) as f64, (o.y() + gc.square_side) as f64);
    }
    if pts.is_empty() {
        (x0, y0, x1, y1) = (0.0, 0.0, 1.0, 1.0);
    }
    let f = (CANVAS - 2.0 * MARGIN) / (x1 - x0).max(y1 - y0).max(1.0);
    let tx = |x: f64| MARGIN + (x - x0) * f;
    let ty = |y: f64| CANVAS - MARGIN - (y - y0) * f;

    let mut s = String::new();
    writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{CANVAS}\" height=\"{CANVAS}\" viewBox=\"0 0 {CANVAS} {CANVAS}\">"
    )
    .unwrap();
    writeln!(s, "<rect width=\"{CANVAS}\" height=\"{CANVAS}\" fill=\"white\"/>").unwrap();
    let line = |s: &mut String, a: (f64, f64), b: (f64, f64), style: &str| {
        writeln!(
            s,
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" {style}/>",
            tx(a.0),
            ty(a.1),
            tx(b.0),
            ty(b.1)
        )
        .unwrap();
    };

    if let Some(gc) = &layers.grid {
        let k = gc.k;
        let cells = assign_cells(ps, gc);
        let rich: Vec<(usize, usize)> =
            cells.iter().filter(|c| is_rich(c.len(), ps.len(), k)).map(|c| c.coords()).collect();
        s.push_str("<g id=\"rich\" fill=\"#dbe6f3\">\n");
        for &(c, r) in &rich {
            let (ax, ay) = gc.to_input_coords(c as f64, r as f64 + 1.0);
            let (bx, by) = gc.to_input_coords(c as f64 + 1.0, r as f64);
            writeln!(
                s,
                "<rect x=\"{:.2}\" y=\"{:.2}\" width=\"{:.2}\" height=\"{:.2}\"/>",
                tx(ax),
                ty(ay),
                tx(bx) - tx(ax),
                ty(by) - ty(ay)
            )
            .unwrap();
        }
        s.push_str("</g>\n<g id=\"grid\" stroke=\"#9a9a9a\" stroke-width=\"0.6\">\n");
        for i in 0..=k {
            let t = i as f64;
            line(&mut s, gc.to_input_coords(t, 0.0), gc.to_input_coords(t, k as f64), "");
            line(&mut s, gc.to_input_coords(0.0, t), gc.to_input_coords(k as f64, t), "");
        }
        s.push_str("</g>\n");
        if let Ok(st) = build_star_triangulation(&rich, k) {
            s.push_str("<g id=\"segments\" stroke=\"black\" stroke-width=\"2.5\">\n");
            for seg in &st.segments {
                let (a, b) = (seg.a(), seg.b());
                line(
                    &mut s,
                    gc.to_input_coords(a.x() as f64, a.y() as f64),
                    gc.to_input_coords(b.x() as f64, b.y() as f64),
                    "",
                );
            }
            s.push_str("</g>\n");
        }
    }

    let coords = |i: usize| (pts[i].x() as f64, pts[i].y() as f64);
    for (id, edges, style) in [
        ("subgraph", &layers.subgraph, "stroke=\"#c0392b\" stroke-width=\"1.2\""),
        ("highlight", &layers.highlight, "stroke=\"#1e8449\" stroke-width=\"1.6\""),
    ] {
        if edges.is_empty() {
            continue;
        }
        writeln!(s, "<g id=\"{id}\" {style}>").unwrap();
        for e in edges.iter().filter(|e| (e.v as usize) < pts.len()) {
            let (u, v) = e.endpoints();
            line(&mut s, coords(u), coords(v), "");
        }
        s.push_str("</g>\n");
    }

    s.push_str("<g id=\"points\" fill=\"black\">\n");
    for p in pts {
        writeln!(s, "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2.5\"/>", tx(p.x() as f64), ty(p.y() as f64)).unwrap();
    }
    s.push_str("</g>\n</svg>\n");
    s
}

/// Entry point for the binary.
pub fn main_exit_code() -> i32 {
    run(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
