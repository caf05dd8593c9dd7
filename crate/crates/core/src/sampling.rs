//! Density models on a polytope and reproducible i.i.d. sampling.
//!
//! Points are drawn by rejection: propose uniformly in the bounding box,
//! keep the proposal with probability `f(x) / sup_bound` when it lies in `A`.

use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::math::{orthonormal_basis, radical_inverse, sub, PRIMES};
use crate::polytope::{BoundingBox, Face, Polytope};
use crate::rng;

/// JSON form of a density: `{"kind":"uniform"}`,
/// `{"kind":"product","factors":[[c0,c1,...], ...]}` (one polynomial per
/// coordinate, coefficients in increasing degree) or
/// `{"kind":"grid","values":[...],"cells":[c_1,...,c_d]}` (piecewise constant
/// on a regular grid over the bounding box, row-major, first axis slowest).
///
/// Product and grid densities may be unnormalised; the normaliser is computed
/// when the model is built.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DensitySpec {
    Uniform,
    Product { factors: Vec<Vec<f64>> },
    Grid { values: Vec<f64>, cells: Vec<usize> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DensityKind {
    Uniform,
    Product,
    Grid,
}

/// An infimum of the density over some set, flagged when it is only the
/// minimum over probe points (an upper bound on the true infimum).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FaceInfimum {
    pub value: f64,
    pub estimated: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityOptions {
    /// Monte Carlo samples for normalisers that have no closed form.
    pub normalizer_samples: usize,
    /// Probe points per face for infima that have no closed form.
    pub probe_points: usize,
    pub seed: u64,
}

impl Default for DensityOptions {
    fn default() -> Self {
        DensityOptions { normalizer_samples: 1_000_000, probe_points: 2048, seed: 0xde75_17e5 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityModel {
    kind: DensityKind,
    spec: DensitySpec,
    dim: usize,
    polytope_label: String,
    bounding_box: BoundingBox,
    normalizer: f64,
    normalizer_estimated: bool,
    sup_bound: f64,
    f0: FaceInfimum,
    f1: FaceInfimum,
    per_face_inf: Vec<FaceInfimum>,
}

/// Polynomial `Σ c_i x^i`.
struct Poly<'a>(&'a [f64]);

impl Poly<'_> {
    fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    fn integral(&self, a: f64, b: f64) -> f64 {
        let anti = |x: f64| {
            self.0
                .iter()
                .enumerate()
                .rev()
                .fold(0.0, |acc, (i, c)| acc * x + c / (i + 1) as f64)
                * x
        };
        anti(b) - anti(a)
    }

    fn derivative(&self) -> Vec<f64> {
        self.0.iter().enumerate().skip(1).map(|(i, c)| c * i as f64).collect()
    }

    /// Endpoints plus every sign change of the derivative, refined by bisection.
    fn extremes(&self, a: f64, b: f64) -> (f64, f64) {
        let mut lo = self.eval(a).min(self.eval(b));
        let mut hi = self.eval(a).max(self.eval(b));
        if a == b {
            return (lo, hi);
        }
        let dcoef = self.derivative();
        let d = Poly(&dcoef);
        const STEPS: usize = 512;
        let h = (b - a) / STEPS as f64;
        for s in 0..STEPS {
            let (mut x0, mut x1) = (a + h * s as f64, a + h * (s + 1) as f64);
            let (d0, d1) = (d.eval(x0), d.eval(x1));
            if d0 == 0.0 || d0.signum() != d1.signum() {
                for _ in 0..100 {
                    let m = 0.5 * (x0 + x1);
                    if d.eval(m).signum() == d0.signum() && d0 != 0.0 {
                        x0 = m;
                    } else {
                        x1 = m;
                    }
                }
                let v = self.eval(0.5 * (x0 + x1));
                lo = lo.min(v);
                hi = hi.max(v);
            }
        }
        (lo, hi)
    }

    fn is_concave(&self) -> bool {
        let deg = self.0.iter().rposition(|c| *c != 0.0).unwrap_or(0);
        deg <= 1 || (deg == 2 && self.0[2] <= 0.0)
    }
}

impl DensityModel {
    pub fn new(spec: &DensitySpec, polytope: &Polytope) -> Result<Self> {
        Self::with_options(spec, polytope, &DensityOptions::default())
    }

    pub fn with_options(spec: &DensitySpec, polytope: &Polytope, opts: &DensityOptions) -> Result<Self> {
        let d = polytope.dim();
        let bbox = polytope.bounding_box().clone();
        let kind = match spec {
            DensitySpec::Uniform => DensityKind::Uniform,
            DensitySpec::Product { factors } => {
                if factors.len() != d {
                    return Err(Error::Configuration(alloc::format!(
                        "product density needs {d} factors, got {}",
                        factors.len()
                    )));
                }
                for (k, f) in factors.iter().enumerate() {
                    if f.is_empty() || f.iter().any(|c| !c.is_finite()) {
                        return Err(Error::Configuration(alloc::format!("factor {k} is not a finite polynomial")));
                    }
                    let (lo, _) = Poly(f).extremes(bbox.lo[k], bbox.hi[k]);
                    if !(lo > 0.0) {
                        return Err(Error::Configuration(alloc::format!(
                            "factor {k} must be positive on [{}, {}] (f0 > 0)",
                            bbox.lo[k], bbox.hi[k]
                        )));
                    }
                }
                DensityKind::Product
            }
            DensitySpec::Grid { values, cells } => {
                if cells.len() != d || cells.contains(&0) {
                    return Err(Error::Configuration(alloc::format!("grid needs {d} positive cell counts")));
                }
                let total: usize = cells.iter().product();
                if values.len() != total {
                    return Err(Error::Configuration(alloc::format!(
                        "grid has {total} cells but {} values",
                        values.len()
                    )));
                }
                if values.iter().any(|v| !(v.is_finite() && *v >= 0.0)) {
                    return Err(Error::Configuration("grid values must be finite and >= 0".into()));
                }
                DensityKind::Grid
            }
        };
        let mut model = DensityModel {
            kind,
            spec: spec.clone(),
            dim: d,
            polytope_label: polytope.label().into(),
            bounding_box: bbox,
            normalizer: 1.0,
            normalizer_estimated: false,
            sup_bound: 0.0,
            f0: FaceInfimum { value: 0.0, estimated: false },
            f1: FaceInfimum { value: 0.0, estimated: false },
            per_face_inf: Vec::new(),
        };
        model.normalize(polytope, opts);
        if !(model.normalizer > 0.0 && model.normalizer.is_finite()) {
            return Err(Error::Configuration("density has no positive finite mass on A".into()));
        }
        model.sup_bound = model.compute_sup();
        model.per_face_inf = polytope
            .faces()
            .iter()
            .map(|f| model.face_infimum(polytope, f, opts.probe_points, opts.seed))
            .collect();
        model.f0 = model.per_face_inf[polytope.full_face().id];
        model.f1 = polytope
            .faces_of_dimension(d - 1)
            .map(|f| model.per_face_inf[f.id])
            .fold(FaceInfimum { value: f64::INFINITY, estimated: false }, |acc, x| FaceInfimum {
                value: acc.value.min(x.value),
                estimated: acc.estimated || x.estimated,
            });
        if !(model.f0.value > 0.0) {
            return Err(Error::Configuration("density infimum f0 must be positive".into()));
        }
        Ok(model)
    }

    fn raw(&self, x: &[f64]) -> f64 {
        match &self.spec {
            DensitySpec::Uniform => 1.0,
            DensitySpec::Product { factors } => {
                factors.iter().zip(x).map(|(f, xi)| Poly(f).eval(*xi)).product()
            }
            DensitySpec::Grid { values, cells } => values[self.cell_index(cells, x)],
        }
    }

    fn cell_index(&self, cells: &[usize], x: &[f64]) -> usize {
        let mut idx = 0;
        for k in 0..self.dim {
            let (lo, hi) = (self.bounding_box.lo[k], self.bounding_box.hi[k]);
            let t = (x[k] - lo) / (hi - lo) * cells[k] as f64;
            let i = (libm::floor(t).max(0.0) as usize).min(cells[k] - 1);
            idx = idx * cells[k] + i;
        }
        idx
    }

    fn normalize(&mut self, polytope: &Polytope, opts: &DensityOptions) {
        let bbox = &self.bounding_box;
        let exact = match (&self.spec, polytope.is_axis_box()) {
            (DensitySpec::Uniform, _) => Some(polytope.volume()),
            (DensitySpec::Product { factors }, true) => Some(
                factors
                    .iter()
                    .enumerate()
                    .map(|(k, f)| Poly(f).integral(bbox.lo[k], bbox.hi[k]))
                    .product(),
            ),
            (DensitySpec::Grid { values, .. }, true) => {
                Some(values.iter().sum::<f64>() * bbox.volume() / values.len() as f64)
            }
            _ => None,
        };
        match exact {
            Some(z) => self.normalizer = z,
            None => {
                self.normalizer = 1.0;
                self.normalizer = self.integral_estimate(polytope, opts.normalizer_samples, opts.seed);
                self.normalizer_estimated = true;
            }
        }
    }

    fn compute_sup(&self) -> f64 {
        let bbox = &self.bounding_box;
        match &self.spec {
            DensitySpec::Uniform => 1.0 / self.normalizer,
            DensitySpec::Product { factors } => {
                let m: f64 = factors
                    .iter()
                    .enumerate()
                    .map(|(k, f)| Poly(f).extremes(bbox.lo[k], bbox.hi[k]).1)
                    .product();
                m / self.normalizer * (1.0 + 1e-9)
            }
            DensitySpec::Grid { values, .. } => {
                values.iter().copied().fold(0.0, f64::max) / self.normalizer
            }
        }
    }

    /// Normalised density at `x`. Only meaningful for `x ∈ A`.
    pub fn evaluate(&self, x: &[f64]) -> f64 {
        self.raw(x) / self.normalizer
    }

    /// Monte Carlo estimate of `∫_A f`, which should be close to 1.
    pub fn integral_estimate(&self, polytope: &Polytope, samples: usize, seed: u64) -> f64 {
        let bbox = polytope.bounding_box();
        let mut rng = rng::stream(seed);
        let mut x = alloc::vec![0.0; self.dim];
        let mut acc = 0.0;
        for _ in 0..samples {
            for k in 0..self.dim {
                x[k] = bbox.lo[k] + (bbox.hi[k] - bbox.lo[k]) * rng.gen::<f64>();
            }
            if polytope.contains_unchecked(&x) {
                acc += self.evaluate(&x);
            }
        }
        bbox.volume() * acc / samples as f64
    }

    fn face_infimum(&self, polytope: &Polytope, face: &Face, n_probe: usize, seed: u64) -> FaceInfimum {
        let exact = |value| FaceInfimum { value, estimated: false };
        let verts = || face.vertex_ids.iter().map(|&i| polytope.vertices()[i].as_slice());
        match &self.spec {
            DensitySpec::Uniform => exact(1.0 / self.normalizer),
            DensitySpec::Product { factors } if factors.iter().all(|f| Poly(f).is_concave()) => {
                // a product of positive concave factors is log-concave, so its
                // minimum over a polytope sits at a vertex
                exact(verts().map(|v| self.evaluate(v)).fold(f64::INFINITY, f64::min))
            }
            DensitySpec::Product { factors } if polytope.is_axis_box() => {
                let mut m = 1.0;
                for (k, f) in factors.iter().enumerate() {
                    let lo = verts().map(|v| v[k]).fold(f64::INFINITY, f64::min);
                    let hi = verts().map(|v| v[k]).fold(f64::NEG_INFINITY, f64::max);
                    m *= Poly(f).extremes(lo, hi).0;
                }
                exact(m / self.normalizer)
            }
            _ => FaceInfimum {
                value: probe_points(polytope, face, n_probe, seed)
                    .iter()
                    .map(|x| self.evaluate(x))
                    .fold(f64::INFINITY, f64::min),
                estimated: true,
            },
        }
    }

    pub fn kind(&self) -> DensityKind {
        self.kind
    }
    pub fn spec(&self) -> &DensitySpec {
        &self.spec
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn normalizer(&self) -> f64 {
        self.normalizer
    }
    pub fn normalizer_estimated(&self) -> bool {
        self.normalizer_estimated
    }
    /// Upper bound on `f` over `A`.
    pub fn sup_bound(&self) -> f64 {
        self.sup_bound
    }
    /// Essential infimum of `f` over `A`.
    pub fn f0(&self) -> FaceInfimum {
        self.f0
    }
    /// Infimum of `f` over the boundary of `A`.
    pub fn f1(&self) -> FaceInfimum {
        self.f1
    }
    /// `f_φ` for every face, indexed by face id (`f_A = f0`).
    pub fn per_face_inf(&self) -> &[FaceInfimum] {
        &self.per_face_inf
    }
    pub fn face_inf(&self, face_id: usize) -> Result<FaceInfimum> {
        self.per_face_inf
            .get(face_id)
            .copied()
            .ok_or_else(|| Error::Configuration(alloc::format!("no density infimum for face {face_id}")))
    }

    pub(crate) fn check_polytope(&self, polytope: &Polytope) -> Result<()> {
        if polytope.dim() != self.dim || polytope.label() != self.polytope_label {
            return Err(Error::Configuration(alloc::format!(
                "density was built for {}, not {}",
                self.polytope_label,
                polytope.label()
            )));
        }
        Ok(())
    }
}

/// Quasi-uniform points on a face: its vertices, its centroid, then a Halton
/// sequence in face-local orthonormal coordinates clipped to the face.
fn probe_points(polytope: &Polytope, face: &Face, n_probe: usize, seed: u64) -> Vec<Vec<f64>> {
    let verts: Vec<&Vec<f64>> = face.vertex_ids.iter().map(|&i| &polytope.vertices()[i]).collect();
    let mut out: Vec<Vec<f64>> = verts.iter().map(|v| (*v).clone()).collect();
    out.push(face.relative_interior_point.clone());
    if face.dimension == 0 {
        return out;
    }
    let origin = verts[0];
    let diffs: Vec<Vec<f64>> = verts[1..].iter().map(|v| sub(v, origin)).collect();
    let basis = orthonormal_basis(&diffs, polytope.tolerance());
    let local: Vec<Vec<f64>> = verts
        .iter()
        .map(|v| {
            let r = sub(v, origin);
            basis.iter().map(|b| crate::math::dot(&r, b)).collect()
        })
        .collect();
    let m = basis.len();
    let lo: Vec<f64> = (0..m).map(|j| local.iter().map(|c| c[j]).fold(f64::INFINITY, f64::min)).collect();
    let hi: Vec<f64> = (0..m).map(|j| local.iter().map(|c| c[j]).fold(f64::NEG_INFINITY, f64::max)).collect();
    let start = seed % 4096;
    let tol = polytope.tolerance();
    let mut accepted = 0;
    let mut index = start + 1;
    while accepted < n_probe && index < start + 1 + 20 * n_probe as u64 {
        let mut x = origin.clone();
        for j in 0..m {
            let c = lo[j] + (hi[j] - lo[j]) * radical_inverse(index, PRIMES[j % PRIMES.len()]);
            for (xi, bi) in x.iter_mut().zip(&basis[j]) {
                *xi += c * bi;
            }
        }
        index += 1;
        if polytope.contains_within(&x, tol) {
            out.push(x);
            accepted += 1;
        }
    }
    out
}

/// `f_φ` for a face. Exact for uniform densities, for products of concave
/// factors, and for product densities on boxes; otherwise the minimum over
/// `n_probe` quasi-uniform probe points (an upper bound on the infimum).
pub fn estimate_face_infimum(
    density: &DensityModel,
    polytope: &Polytope,
    face: &Face,
    n_probe: usize,
    seed: u64,
) -> Result<f64> {
    density.check_polytope(polytope)?;
    crate::polytope::angular_volume(polytope, face)?;
    Ok(density.face_infimum(polytope, face, n_probe.max(1), seed).value)
}

/// An i.i.d. sample `X_1, ..., X_n` together with its provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointCloud {
    dim: usize,
    coords: Vec<f64>,
    pub seed: u64,
    pub polytope_id: String,
}

impl PointCloud {
    /// `coords` holds `n · dim` values, one point after another.
    pub fn new(dim: usize, coords: Vec<f64>, seed: u64, polytope_id: impl Into<String>) -> Result<Self> {
        if dim == 0 || coords.is_empty() || coords.len() % dim != 0 {
            return Err(domain!("need n >= 1 points of dimension {dim}, got {} values", coords.len()));
        }
        if coords.iter().any(|x| !x.is_finite()) {
            return Err(domain!("point coordinates must be finite"));
        }
        Ok(PointCloud { dim, coords, seed, polytope_id: polytope_id.into() })
    }

    pub fn from_points(points: &[Vec<f64>]) -> Result<Self> {
        let dim = points.first().map_or(0, |p| p.len());
        if points.iter().any(|p| p.len() != dim) {
            return Err(domain!("points have mixed dimensions"));
        }
        Self::new(dim, points.concat(), 0, "explicit")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }
    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
    #[inline]
    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }
    pub fn coords(&self) -> &[f64] {
        &self.coords
    }
    pub fn iter(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks_exact(self.dim)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplingOptions {
    /// Give up once proposals exceed this multiple of `n`.
    pub max_proposals_per_point: u64,
}

impl Default for SamplingOptions {
    fn default() -> Self {
        SamplingOptions { max_proposals_per_point: 10_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SampleStats {
    pub proposals: u64,
    pub accepted: u64,
}

impl SampleStats {
    pub fn acceptance_rate(&self) -> f64 {
        self.accepted as f64 / self.proposals as f64
    }
}

pub fn sample_points(polytope: &Polytope, density: &DensityModel, n: usize, seed: u64) -> Result<PointCloud> {
    sample_points_with_stats(polytope, density, n, seed, &SamplingOptions::default()).map(|(c, _)| c)
}

/// Draws `n` points by rejection from the bounding box. Identical inputs give
/// bit-identical clouds.
pub fn sample_points_with_stats(
    polytope: &Polytope,
    density: &DensityModel,
    n: usize,
    seed: u64,
    opts: &SamplingOptions,
) -> Result<(PointCloud, SampleStats)> {
    if n == 0 {
        return Err(domain!("n must be at least 1"));
    }
    density.check_polytope(polytope)?;
    let sup = density.sup_bound();
    if !(sup > 0.0 && sup.is_finite()) {
        return Err(Error::Sampling(alloc::format!("sup bound must be positive, got {sup}")));
    }
    let d = polytope.dim();
    let bbox = polytope.bounding_box();
    let uniform = density.kind() == DensityKind::Uniform;
    let cap = opts.max_proposals_per_point.saturating_mul(n as u64);
    let mut rng = rng::stream(seed);
    let mut coords = Vec::with_capacity(n * d);
    let mut x = alloc::vec![0.0; d];
    let mut stats = SampleStats::default();
    while (stats.accepted as usize) < n {
        if stats.proposals >= cap {
            return Err(Error::Sampling(alloc::format!(
                "accepted {} of {n} points after {} proposals",
                stats.accepted, stats.proposals
            )));
        }
        stats.proposals += 1;
        for k in 0..d {
            x[k] = bbox.lo[k] + (bbox.hi[k] - bbox.lo[k]) * rng.gen::<f64>();
        }
        if !polytope.contains_unchecked(&x) {
            continue;
        }
        if !uniform && rng.gen::<f64>() * sup > density.evaluate(&x) {
            continue;
        }
        coords.extend_from_slice(&x);
        stats.accepted += 1;
    }
    let cloud = PointCloud::new(d, coords, seed, polytope.label())?;
    Ok((cloud, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{build_polytope, contains, PolytopeSpec};
    use alloc::vec;

    fn square() -> Polytope {
        build_polytope(&PolytopeSpec::hypercube(2)).unwrap()
    }

    #[test]
    fn uniform_square_infima_are_exact() {
        let p = square();
        let f = DensityModel::new(&DensitySpec::Uniform, &p).unwrap();
        assert_eq!(f.f0(), FaceInfimum { value: 1.0, estimated: false });
        assert_eq!(f.f1().value, 1.0);
        for face in p.faces() {
            assert_eq!(estimate_face_infimum(&f, &p, face, 16, 0).unwrap(), 1.0);
        }
    }

    #[test]
    fn linear_product_density_infima() {
        // f(x, y) ∝ 1 + x, ∫ over the unit square = 3/2
        let p = square();
        let spec = DensitySpec::Product { factors: vec![vec![1.0, 1.0], vec![1.0]] };
        let f = DensityModel::new(&spec, &p).unwrap();
        assert!((f.normalizer() - 1.5).abs() < 1e-15);
        let left = p
            .faces_of_dimension(1)
            .find(|e| e.vertex_ids.iter().all(|&i| p.vertices()[i][0] == 0.0))
            .unwrap();
        assert!((estimate_face_infimum(&f, &p, left, 64, 1).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        let corner = p
            .faces_of_dimension(0)
            .find(|v| p.vertices()[v.vertex_ids[0]] == vec![1.0, 1.0])
            .unwrap();
        assert!((estimate_face_infimum(&f, &p, corner, 64, 1).unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert!((f.f0().value - 2.0 / 3.0).abs() < 1e-15);
        assert!((f.sup_bound() - 4.0 / 3.0).abs() < 1e-8);
    }

    #[test]
    fn convex_product_on_box_uses_interval_minima() {
        // (x - 1/2)^2 + 1/4 has its minimum inside the interval
        let p = square();
        let spec = DensitySpec::Product { factors: vec![vec![0.5, -1.0, 1.0], vec![1.0]] };
        let f = DensityModel::new(&spec, &p).unwrap();
        // ∫_0^1 (x - 1/2)^2 + 1/4 dx = 1/12 + 1/4
        assert!((f.normalizer() - (1.0 / 12.0 + 0.25)).abs() < 1e-14);
        assert!(!f.f0().estimated);
        assert!((f.f0().value - 0.25 / f.normalizer()).abs() < 1e-12);
    }

    #[test]
    fn grid_density_on_triangle_is_estimated() {
        let p = build_polytope(&PolytopeSpec::simplex(2)).unwrap();
        let spec = DensitySpec::Grid { values: vec![1.0, 2.0, 3.0, 4.0], cells: vec![2, 2] };
        let opts = DensityOptions { normalizer_samples: 200_000, ..Default::default() };
        let f = DensityModel::with_options(&spec, &p, &opts).unwrap();
        assert!(f.normalizer_estimated());
        assert!(f.f0().estimated);
        assert!((f.f0().value - 1.0 / f.normalizer()).abs() < 1e-12);
        assert!(f.f0().value <= f.f1().value);
        let total = f.integral_estimate(&p, 200_000, 99);
        assert!((total - 1.0).abs() < 0.01, "{total}");
    }

    #[test]
    fn invalid_densities_are_rejected() {
        let p = square();
        assert!(DensityModel::new(&DensitySpec::Product { factors: vec![vec![1.0]] }, &p).is_err());
        // vanishes at x = 0
        assert!(DensityModel::new(&DensitySpec::Product { factors: vec![vec![0.0, 1.0], vec![1.0]] }, &p).is_err());
        assert!(DensityModel::new(&DensitySpec::Grid { values: vec![1.0; 3], cells: vec![2, 2] }, &p).is_err());
        assert!(DensityModel::new(&DensitySpec::Grid { values: vec![0.0; 4], cells: vec![2, 2] }, &p).is_err());
    }

    #[test]
    fn sampling_is_deterministic_and_contained() {
        let p = square();
        let f = DensityModel::new(&DensitySpec::Uniform, &p).unwrap();
        let a = sample_points(&p, &f, 1000, 42).unwrap();
        let b = sample_points(&p, &f, 1000, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 1000);
        assert!(a.iter().all(|x| contains(&p, x).unwrap()));
        assert_eq!(a.polytope_id, "hypercube(2)");
        for s in 0..100u64 {
            let c = sample_points(&p, &f, 1, 2 * s).unwrap();
            let d = sample_points(&p, &f, 1, 2 * s + 1).unwrap();
            assert_ne!(c.point(0), d.point(0));
        }
    }

    #[test]
    fn sampling_errors() {
        let p = square();
        let f = DensityModel::new(&DensitySpec::Uniform, &p).unwrap();
        assert!(sample_points(&p, &f, 0, 1).is_err());
        let tri = build_polytope(&PolytopeSpec::simplex(2)).unwrap();
        assert!(matches!(sample_points(&tri, &f, 10, 1), Err(Error::Configuration(_))));
        let opts = SamplingOptions { max_proposals_per_point: 0 };
        assert!(matches!(sample_points_with_stats(&p, &f, 10, 1, &opts), Err(Error::Sampling(_))));
    }

    #[test]
    fn weighted_sampling_follows_density() {
        // f ∝ 1 + x: P[x < 1/2] = (1/2 + 1/8) / (3/2) = 5/12
        let p = square();
        let spec = DensitySpec::Product { factors: vec![vec![1.0, 1.0], vec![1.0]] };
        let f = DensityModel::new(&spec, &p).unwrap();
        let c = sample_points(&p, &f, 50_000, 3).unwrap();
        let frac = c.iter().filter(|x| x[0] < 0.5).count() as f64 / 50_000.0;
        assert!((frac - 5.0 / 12.0).abs() < 0.01, "{frac}");
    }

    #[test]
    fn point_cloud_validation() {
        assert!(PointCloud::new(2, vec![1.0, 2.0, 3.0], 0, "x").is_err());
        assert!(PointCloud::new(2, vec![], 0, "x").is_err());
        assert!(PointCloud::from_points(&[vec![0.0, 1.0], vec![0.0]]).is_err());
        let c = PointCloud::from_points(&[vec![0.0, 1.0], vec![2.0, 3.0]]).unwrap();
        assert_eq!(c.point(1), &[2.0, 3.0]);
    }
}
