//! Point sets in general position: certification, density statistics,
//! generators and the plain-text point file.
//!
//! Continuous constructions are placed on a fine lattice of `scale`
//! sub-units per unit length, so "minimum pairwise distance 1" becomes
//! "minimum squared distance `scale^2`" and every check stays exact.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geometry::{cross, squared_distance_extremes, GeometryError, Point};

/// Default lattice resolution: sub-units per unit length.
pub const DEFAULT_SCALE: i64 = 1 << 16;

/// Smallest possible density constant, `2^(1/2) 3^(1/4) pi^(-1/2)`.
pub const ALPHA0: f64 = 1.050_075_135_808_664;

/// Sets at least this large get their density checked against the
/// volume bound (with the constant relaxed to 1.0 for finite n).
pub const VOLUME_BOUND_MIN_N: usize = 10_000;

/// Full re-draw passes a generator may spend reaching general position.
pub const RETRY_BUDGET: usize = 64;

#[derive(Debug, Error)]
pub enum PointSetError {
    #[error("points {first} and {second} coincide at {point}")]
    Duplicate { first: usize, second: usize, point: Point },
    #[error("points {0}, {1} and {2} are collinear")]
    Collinear(usize, usize, usize),
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
    #[error("general position not reached after {0} re-draw passes")]
    RetryBudgetExhausted(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Distinct points, no three collinear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
    scale: i64,
}

impl PointSet {
    /// Certifies distinctness and general position.
    pub fn new(points: Vec<Point>, scale: i64) -> Result<Self, PointSetError> {
        if scale < 1 {
            return Err(PointSetError::InvalidParameter(format!("scale {scale} < 1")));
        }
        certify_general_position(&points)?;
        Ok(PointSet { points, scale })
    }

    /// For point sets that [`settle`] has already certified.
    fn settled(points: Vec<Point>, scale: i64) -> Self {
        PointSet { points, scale }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> Point {
        self.points[i]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn density_stats(&self) -> Result<DensityStats, PointSetError> {
        density_stats(self)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), PointSetError> {
        fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, PointSetError> {
        Self::from_text(&fs::read_to_string(path)?)
    }

    /// `n scale` followed by one `x y` line per point.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(16 * (self.points.len() + 1));
        writeln!(out, "{} {}", self.points.len(), self.scale).unwrap();
        for p in &self.points {
            writeln!(out, "{} {}", p.x(), p.y()).unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, PointSetError> {
        let mut lines = text.split('\n');
        let header = lines.next().unwrap_or("");
        let (n, scale) = parse_pair(header, 1)?;
        if n < 0 {
            return Err(parse_err(1, "negative point count"));
        }
        let n = n as usize;
        let mut points = Vec::with_capacity(n);
        for i in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| parse_err(i + 2, "missing point line"))?;
            let (x, y) = parse_pair(line, i + 2)?;
            points.push(Point::try_new(x, y).map_err(|e| parse_err(i + 2, &e.to_string()))?);
        }
        match (lines.next(), lines.next()) {
            (Some(""), None) | (None, _) => {}
            _ => return Err(parse_err(n + 2, "unexpected content after the last point")),
        }
        PointSet::new(points, scale)
    }
}

fn parse_err(line: usize, msg: &str) -> PointSetError {
    PointSetError::Parse { line, msg: msg.to_string() }
}

fn parse_pair(line: &str, lineno: usize) -> Result<(i64, i64), PointSetError> {
    let mut it = line.split(' ');
    let mut next = || -> Result<i64, PointSetError> {
        let tok = it.next().ok_or_else(|| parse_err(lineno, "expected two integers"))?;
        tok.parse::<i64>()
            .map_err(|_| parse_err(lineno, &format!("not an integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(parse_err(lineno, "expected exactly two integers"));
    }
    Ok((a, b))
}

/// Exact general-position certificate in `O(n^2 log n)`.
///
/// For each point `i`, the directions to all later points are sorted by
/// slope; a collinear triple with smallest index `i` shows up as two equal
/// directions.
pub fn certify_general_position(points: &[Point]) -> Result<(), PointSetError> {
    let mut seen = HashSet::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        if !seen.insert(*p) {
            let first = points.iter().position(|q| q == p).unwrap();
            return Err(PointSetError::Duplicate { first, second: i, point: *p });
        }
    }
    match first_collinear_triple(points) {
        Some((i, j, l)) => Err(PointSetError::Collinear(i, j, l)),
        None => Ok(()),
    }
}

/// Coordinates below this bound have differences exactly representable in
/// an `f64`.
const SLOPE_KEY_LIMIT: i64 = 1 << 52;

/// `q - p` flipped into the half-plane `dx > 0` or `dx = 0, dy > 0`.
fn canonical(p: &Point, q: &Point) -> (i64, i64) {
    let (dx, dy) = (q.x() - p.x(), q.y() - p.y());
    if dx < 0 || (dx == 0 && dy < 0) {
        (-dx, -dy)
    } else {
        (dx, dy)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn fits_slope_keys(points: &[Point]) -> bool {
    points.iter().all(|p| p.x().abs() < SLOPE_KEY_LIMIT && p.y().abs() < SLOPE_KEY_LIMIT)
}

/// Direction of `q - p`. A slope when coordinates are small enough: equal
/// directions then give bit-identical keys because the quotient of exactly
/// representable integers is correctly rounded, while unequal directions
/// may collide and are told apart by an exact cross product. Otherwise the
/// reduced direction vector.
#[derive(Debug, Clone, Copy, PartialEq)]
enum DirKey {
    Slope(f64),
    Reduced(i64, i64),
}

impl DirKey {
    fn of(p: &Point, q: &Point, slopes: bool) -> Self {
        let (dx, dy) = canonical(p, q);
        if slopes {
            DirKey::Slope(if dx == 0 { f64::INFINITY } else { dy as f64 / dx as f64 })
        } else {
            let g = gcd(dx.unsigned_abs(), dy.unsigned_abs()) as i64;
            DirKey::Reduced(dx / g, dy / g)
        }
    }

    fn order(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (DirKey::Slope(a), DirKey::Slope(b)) => a.total_cmp(b),
            (DirKey::Reduced(a, b), DirKey::Reduced(c, d)) => (a, b).cmp(&(c, d)),
            _ => unreachable!("one key kind per scan"),
        }
    }
}

/// Calls `hit(j, l)` for each collinear triple `(p, points[j], points[l])`
/// with `j, l` from `later`, until `hit` returns true.
fn scan_directions(
    points: &[Point],
    p: &Point,
    later: impl Iterator<Item = usize>,
    slopes: bool,
    dirs: &mut Vec<(DirKey, u32)>,
    mut hit: impl FnMut(usize, usize) -> bool,
) {
    dirs.clear();
    dirs.extend(later.map(|j| (DirKey::of(p, &points[j], slopes), j as u32)));
    dirs.sort_unstable_by(|a, b| a.0.order(&b.0).then(a.1.cmp(&b.1)));
    let mut start = 0;
    while start < dirs.len() {
        let mut end = start + 1;
        while end < dirs.len() && dirs[end].0 == dirs[start].0 {
            end += 1;
        }
        for a in start..end {
            for b in a + 1..end {
                let (j, l) = (dirs[a].1 as usize, dirs[b].1 as usize);
                if cross(p, &points[j], &points[l]) == 0 && hit(j, l) {
                    return;
                }
            }
        }
        start = end;
    }
}

fn first_collinear_triple(points: &[Point]) -> Option<(usize, usize, usize)> {
    let slopes = fits_slope_keys(points);
    let mut dirs = Vec::with_capacity(points.len());
    let mut found = None;
    for (i, p) in points.iter().enumerate() {
        scan_directions(points, p, i + 1..points.len(), slopes, &mut dirs, |j, l| {
            found = Some((i, j.min(l), j.max(l)));
            true
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Indices that, once re-drawn, remove every collinear triple found in a
/// single scan (the largest index of each triple).
fn collinear_offenders(points: &[Point]) -> Vec<usize> {
    let slopes = fits_slope_keys(points);
    let mut bad = vec![false; points.len()];
    let mut dirs = Vec::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        if bad[i] {
            continue;
        }
        let mut hits = Vec::new();
        let later = (i + 1..points.len()).filter(|&j| !bad[j]);
        scan_directions(points, p, later, slopes, &mut dirs, |j, l| {
            hits.push(j.max(l));
            false
        });
        for j in hits {
            bad[j] = true;
        }
    }
    bad.iter().enumerate().filter_map(|(i, &b)| b.then_some(i)).collect()
}

/// Re-draws offending points until the set is in general position.
///
/// One full scan finds the first offenders; afterwards only triples
/// through a re-drawn point can be new, so each later round scans from the
/// re-drawn points alone. `redraw(i, rng)` proposes a new location for
/// point `i`.
fn settle<F>(points: &mut [Point], rng: &mut ChaCha8Rng, mut redraw: F) -> Result<(), PointSetError>
where
    F: FnMut(usize, &mut ChaCha8Rng) -> Point,
{
    let mut pending: Vec<usize> = {
        let mut seen = HashSet::with_capacity(points.len());
        let dups: Vec<usize> = (0..points.len()).filter(|&i| !seen.insert(points[i])).collect();
        if dups.is_empty() {
            collinear_offenders(points)
        } else {
            dups
        }
    };
    for _ in 0..RETRY_BUDGET {
        if pending.is_empty() {
            return Ok(());
        }
        for &i in &pending {
            points[i] = redraw(i, rng);
        }
        pending = offenders_through(points, &pending);
    }
    Err(PointSetError::RetryBudgetExhausted(RETRY_BUDGET))
}

/// Members of `moved` that coincide with another point or lie on a line
/// through two others.
fn offenders_through(points: &[Point], moved: &[usize]) -> Vec<usize> {
    let mut owner: HashMap<Point, usize> = HashMap::with_capacity(points.len());
    let mut dup = vec![false; points.len()];
    for (i, p) in points.iter().enumerate() {
        if let Some(&j) = owner.get(p) {
            dup[i] = true;
            dup[j] = true;
        } else {
            owner.insert(*p, i);
        }
    }
    let slopes = fits_slope_keys(points);
    let mut dirs = Vec::with_capacity(points.len());
    let mut out = Vec::new();
    for &r in moved {
        let mut bad = dup[r];
        if !bad {
            let others = (0..points.len()).filter(|&j| j != r && !dup[j]);
            scan_directions(points, &points[r], others, slopes, &mut dirs, |_, _| {
                bad = true;
                true
            });
        }
        if bad {
            out.push(r);
        }
    }
    out
}

/// `side x side` lattice, each point moved by a uniform integer offset in
/// the disk of radius `perturbation * scale`.
pub fn gen_perturbed_grid(side: usize, perturbation: f64, seed: u64) -> Result<PointSet, PointSetError> {
    gen_perturbed_grid_scaled(side, perturbation, seed, DEFAULT_SCALE)
}

pub fn gen_perturbed_grid_scaled(
    side: usize,
    perturbation: f64,
    seed: u64,
    scale: i64,
) -> Result<PointSet, PointSetError> {
    if side < 2 {
        return Err(PointSetError::InvalidParameter(format!("grid side {side} < 2")));
    }
    if scale < 1 {
        return Err(PointSetError::InvalidParameter(format!("scale {scale} < 1")));
    }
    if !(0.0..0.5).contains(&perturbation) {
        return Err(PointSetError::InvalidParameter(format!(
            "perturbation {perturbation} outside [0, 1/2)"
        )));
    }
    let radius = (perturbation * scale as f64).floor() as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lattice: Vec<Point> = (0..side)
        .flat_map(|j| (0..side).map(move |i| (i as i64 * scale, j as i64 * scale)))
        .map(|(x, y)| Point::new(x, y))
        .collect();
    let mut points: Vec<Point> = lattice.iter().map(|p| jitter(p, radius, &mut rng)).collect();
    if radius == 0 {
        certify_general_position(&points)?;
    } else {
        settle(&mut points, &mut rng, |i, rng| jitter(&lattice[i], radius, rng))?;
        return Ok(PointSet::settled(points, scale));
    }
    PointSet::new(points, scale)
}

fn jitter(p: &Point, radius: i64, rng: &mut ChaCha8Rng) -> Point {
    if radius == 0 {
        return *p;
    }
    loop {
        let dx = rng.gen_range(-radius..=radius);
        let dy = rng.gen_range(-radius..=radius);
        if (dx as i128).pow(2) + (dy as i128).pow(2) <= (radius as i128).pow(2) {
            return Point::new(p.x() + dx, p.y() + dy);
        }
    }
}

/// Offset radius, as a fraction of `scale`, used for the base points of
/// [`gen_reflection_lowerbound`].
pub const REFLECTION_PERTURBATION: f64 = 0.05;

/// The centrally symmetric lower-bound set: lattice points of `{-a..a}^2`
/// with `y > 0`, or `y = 0` and `x < 0`, perturbed, followed by their exact
/// reflections through the origin. Point `i` and point `i + n/2` are
/// reflections of each other.
pub fn gen_reflection_lowerbound(a: usize) -> Result<PointSet, PointSetError> {
    gen_reflection_lowerbound_seeded(a, 0)
}

pub fn gen_reflection_lowerbound_seeded(a: usize, seed: u64) -> Result<PointSet, PointSetError> {
    if a < 1 {
        return Err(PointSetError::InvalidParameter("a must be >= 1".into()));
    }
    let scale = DEFAULT_SCALE;
    let a = a as i64;
    let base: Vec<Point> = (-a..=a)
        .flat_map(|y| (-a..=a).map(move |x| (x, y)))
        .filter(|&(x, y)| y > 0 || (y == 0 && x < 0))
        .map(|(x, y)| Point::new(x * scale, y * scale))
        .collect();
    let half = base.len();
    let radius = (REFLECTION_PERTURBATION * scale as f64) as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perturbed: Vec<Point> = base.iter().map(|p| jitter(p, radius, &mut rng)).collect();
    for _ in 0..RETRY_BUDGET {
        let mut points = perturbed.clone();
        points.extend(perturbed.iter().map(Point::reflected));
        let mut offenders: HashSet<usize> = {
            let mut seen = HashSet::new();
            points
                .iter()
                .enumerate()
                .filter_map(|(i, p)| (!seen.insert(*p)).then_some(i % half))
                .collect()
        };
        if offenders.is_empty() {
            offenders = collinear_offenders(&points).into_iter().map(|i| i % half).collect();
        }
        if offenders.is_empty() {
            return PointSet::new(points, scale);
        }
        let mut offenders: Vec<usize> = offenders.into_iter().collect();
        offenders.sort_unstable();
        for i in offenders {
            perturbed[i] = jitter(&base[i], radius, &mut rng);
        }
    }
    Err(PointSetError::RetryBudgetExhausted(RETRY_BUDGET))
}

/// `n` points uniform on the lattice inside `[0, scale]^2`.
pub fn gen_uniform_unit_square(n: usize, seed: u64) -> Result<PointSet, PointSetError> {
    gen_uniform_unit_square_scaled(n, seed, DEFAULT_SCALE)
}

pub fn gen_uniform_unit_square_scaled(n: usize, seed: u64, scale: i64) -> Result<PointSet, PointSetError> {
    if n < 2 {
        return Err(PointSetError::InvalidParameter(format!("n = {n} < 2")));
    }
    if scale < 1 {
        return Err(PointSetError::InvalidParameter(format!("scale {scale} < 1")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| Point::new(rng.gen_range(0..=scale), rng.gen_range(0..=scale));
    let mut points: Vec<Point> = (0..n).map(|_| draw(&mut rng)).collect();
    settle(&mut points, &mut rng, |_, rng| draw(rng))?;
    Ok(PointSet::settled(points, scale))
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityStats {
    pub n: usize,
    pub min_sq: i128,
    pub max_sq: i128,
    /// Smallest `alpha` (rounded up) with `D(A) <= alpha * sqrt(n)`.
    pub alpha_effective: f64,
    pub alpha0: f64,
    /// Set when `n >= VOLUME_BOUND_MIN_N` yet `alpha_effective < 1.0`,
    /// which the packing bound forbids.
    pub volume_bound_violated: bool,
}

impl DensityStats {
    /// `D(A)^2 = max_sq / min_sq` as a float.
    pub fn diameter_ratio_sq(&self) -> f64 {
        self.max_sq as f64 / self.min_sq as f64
    }
}

/// `alpha_effective` is the correctly rounded square root of
/// `max_sq / (n min_sq)`, nudged up until `alpha^2 n min_sq >= max_sq`
/// holds in floating point.
pub fn density_stats(ps: &PointSet) -> Result<DensityStats, PointSetError> {
    let (min_sq, max_sq) = squared_distance_extremes(ps.points())?;
    let n = ps.len();
    let denom = n as f64 * min_sq as f64;
    let mut alpha = (max_sq as f64 / denom).sqrt();
    while alpha * alpha * denom < max_sq as f64 {
        alpha = alpha.next_up();
    }
    Ok(DensityStats {
        n,
        min_sq,
        max_sq,
        alpha_effective: alpha,
        alpha0: ALPHA0,
        volume_bound_violated: n >= VOLUME_BOUND_MIN_N && alpha < 1.0,
    })
}
