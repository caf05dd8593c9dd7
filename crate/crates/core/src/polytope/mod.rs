//! Compact convex polytopes, their face lattice `Φ*(A)` (every proper face plus
//! `A` itself), and the angular volume of each face.
//!
//! Builtin generators (hypercube, box, simplex, cross-polytope, regular
//! polygon, regular simplex) work in any supported dimension. Explicit vertex
//! lists go through a convex hull and are limited to `d ∈ {2, 3}`.
//!
//! The face lattice is derived from the facet halfspaces: every proper face is
//! an intersection of facets, so closing the facet vertex sets under
//! intersection enumerates the whole lattice.

mod angular;
mod hull;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::math::{affine_dimension, distance, dot, norm, rank, sqrt, sub};

pub use angular::{angular_volume, angular_volume_monte_carlo, dihedral_angle, vertex_angle};

/// `normal · x <= offset`, with a unit outward normal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Halfspace {
    pub normal: Vec<f64>,
    pub offset: f64,
}

impl Halfspace {
    #[inline]
    pub fn slack(&self, x: &[f64]) -> f64 {
        self.offset - dot(&self.normal, x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    Hypercube,
    Box,
    Simplex,
    RegularSimplex,
    CrossPolytope,
    RegularPolygon,
    Explicit,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundingBox {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
}

impl BoundingBox {
    pub fn volume(&self) -> f64 {
        self.lo.iter().zip(&self.hi).map(|(l, h)| h - l).product()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.iter()
            .zip(self.lo.iter().zip(&self.hi))
            .all(|(v, (l, h))| *v >= *l && *v <= *h)
    }

    pub fn diagonal(&self) -> f64 {
        distance(&self.lo, &self.hi)
    }
}

/// One element of `Φ*(A)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Face {
    pub id: usize,
    pub dimension: usize,
    /// Sorted indices into [`Polytope::vertices`].
    pub vertex_ids: Vec<usize>,
    /// Faces one dimension up that contain this face.
    pub parent_ids: Vec<usize>,
    /// Faces one dimension down contained in this face.
    pub child_ids: Vec<usize>,
    /// Volume of `K_φ ∩ B(o, 1)` where `K_φ` is the tangent cone along the face.
    pub angular_volume: f64,
    /// `false` when `angular_volume` came from the Monte Carlo fallback.
    pub angular_volume_exact: bool,
    pub relative_interior_point: Vec<f64>,
    /// Halfspaces tight at `relative_interior_point`; they cut out `K_φ`.
    pub active_halfspaces: Vec<usize>,
}

/// Input description of a polytope, as accepted in JSON spec files.
///
/// Either `{"shape": "<generator>", "dim": d, ...}` or
/// `{"dim": d, "vertices": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolytopeSpec {
    Generator(Generator),
    Vertices { dim: usize, vertices: Vec<Vec<f64>> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Generator {
    /// `[0, 1]^d`.
    Hypercube { dim: usize },
    /// `∏ [0, sides_i]`.
    Box { dim: usize, sides: Vec<f64> },
    /// Corner simplex with vertices `0, e_1, ..., e_d`.
    Simplex { dim: usize },
    /// Unit-edge equilateral triangle (d = 2) or the tetrahedron on alternate
    /// corners of `[-1, 1]^3` (d = 3).
    RegularSimplex { dim: usize },
    /// Convex hull of `±e_i`.
    CrossPolytope { dim: usize },
    /// `m` vertices on the unit circle.
    RegularPolygon {
        #[serde(default = "two")]
        dim: usize,
        m: usize,
    },
}

fn two() -> usize {
    2
}

impl PolytopeSpec {
    pub fn hypercube(dim: usize) -> Self {
        PolytopeSpec::Generator(Generator::Hypercube { dim })
    }
    pub fn box_with_sides(sides: Vec<f64>) -> Self {
        PolytopeSpec::Generator(Generator::Box { dim: sides.len(), sides })
    }
    pub fn simplex(dim: usize) -> Self {
        PolytopeSpec::Generator(Generator::Simplex { dim })
    }
    pub fn regular_simplex(dim: usize) -> Self {
        PolytopeSpec::Generator(Generator::RegularSimplex { dim })
    }
    pub fn cross_polytope(dim: usize) -> Self {
        PolytopeSpec::Generator(Generator::CrossPolytope { dim })
    }
    pub fn regular_polygon(m: usize) -> Self {
        PolytopeSpec::Generator(Generator::RegularPolygon { dim: 2, m })
    }
    pub fn vertices(dim: usize, vertices: Vec<Vec<f64>>) -> Self {
        PolytopeSpec::Vertices { dim, vertices }
    }
}

/// Knobs for the Monte Carlo angular-volume fallback.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BuildOptions {
    pub mc_samples: usize,
    pub mc_seed: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { mc_samples: 1_000_000, mc_seed: 0x5eed_a11e }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polytope {
    dim: usize,
    shape: Shape,
    label: String,
    vertices: Vec<Vec<f64>>,
    halfspaces: Vec<Halfspace>,
    faces: Vec<Face>,
    volume: f64,
    bounding_box: BoundingBox,
    diameter: f64,
}

/// Generators refuse dimensions whose lattices would be unreasonably large.
const MAX_GENERATOR_DIM: usize = 10;

pub fn build_polytope(spec: &PolytopeSpec) -> Result<Polytope> {
    build_polytope_with(spec, &BuildOptions::default())
}

pub fn build_polytope_with(spec: &PolytopeSpec, opts: &BuildOptions) -> Result<Polytope> {
    let raw = match spec {
        PolytopeSpec::Generator(g) => generate(g)?,
        PolytopeSpec::Vertices { dim, vertices } => from_vertices(*dim, vertices)?,
    };
    assemble(raw, opts)
}

/// Every face of every dimension, including `A` itself (last).
pub fn face_lattice(polytope: &Polytope) -> &[Face] {
    &polytope.faces
}

/// Membership test with tolerance `1e-12` on every halfspace.
pub fn contains(polytope: &Polytope, x: &[f64]) -> Result<bool> {
    if x.len() != polytope.dim {
        return Err(domain!("point has dimension {}, polytope has {}", x.len(), polytope.dim));
    }
    Ok(polytope.contains_unchecked(x))
}

struct RawPolytope {
    dim: usize,
    shape: Shape,
    label: String,
    vertices: Vec<Vec<f64>>,
    halfspaces: Vec<Halfspace>,
    volume: Option<f64>,
}

fn check_generator_dim(dim: usize, min: usize) -> Result<()> {
    if dim < min || dim > MAX_GENERATOR_DIM {
        return Err(Error::Construction(format!(
            "generator dimension must lie in [{min}, {MAX_GENERATOR_DIM}], got {dim}"
        )));
    }
    Ok(())
}

fn unit(d: usize, i: usize, sign: f64) -> Vec<f64> {
    let mut v = alloc::vec![0.0; d];
    v[i] = sign;
    v
}

fn factorial(d: usize) -> f64 {
    (1..=d).map(|i| i as f64).product()
}

fn box_polytope(shape: Shape, label: String, sides: &[f64]) -> Result<RawPolytope> {
    let d = sides.len();
    check_generator_dim(d, 1)?;
    if sides.iter().any(|s| !(s.is_finite() && *s > 0.0)) {
        return Err(Error::Construction("box side lengths must be positive and finite".into()));
    }
    let vertices = (0..1usize << d)
        .map(|mask| (0..d).map(|i| if mask >> i & 1 == 1 { sides[i] } else { 0.0 }).collect())
        .collect();
    let mut halfspaces = Vec::with_capacity(2 * d);
    for (i, s) in sides.iter().enumerate() {
        halfspaces.push(Halfspace { normal: unit(d, i, -1.0), offset: 0.0 });
        halfspaces.push(Halfspace { normal: unit(d, i, 1.0), offset: *s });
    }
    Ok(RawPolytope {
        dim: d,
        shape,
        label,
        vertices,
        halfspaces,
        volume: Some(sides.iter().product()),
    })
}

fn generate(g: &Generator) -> Result<RawPolytope> {
    match g {
        Generator::Hypercube { dim } => {
            box_polytope(Shape::Hypercube, format!("hypercube({dim})"), &alloc::vec![1.0; *dim])
        }
        Generator::Box { dim, sides } => {
            if sides.len() != *dim {
                return Err(Error::Construction(format!(
                    "box needs {dim} side lengths, got {}",
                    sides.len()
                )));
            }
            box_polytope(Shape::Box, format!("box({sides:?})"), sides)
        }
        Generator::Simplex { dim } => {
            let d = *dim;
            check_generator_dim(d, 1)?;
            let mut vertices = alloc::vec![alloc::vec![0.0; d]];
            vertices.extend((0..d).map(|i| unit(d, i, 1.0)));
            let mut halfspaces: Vec<Halfspace> =
                (0..d).map(|i| Halfspace { normal: unit(d, i, -1.0), offset: 0.0 }).collect();
            let s = 1.0 / sqrt(d as f64);
            halfspaces.push(Halfspace { normal: alloc::vec![s; d], offset: s });
            Ok(RawPolytope {
                dim: d,
                shape: Shape::Simplex,
                label: format!("simplex({d})"),
                vertices,
                halfspaces,
                volume: Some(1.0 / factorial(d)),
            })
        }
        Generator::CrossPolytope { dim } => {
            let d = *dim;
            check_generator_dim(d, 1)?;
            let mut vertices = Vec::with_capacity(2 * d);
            for i in 0..d {
                vertices.push(unit(d, i, 1.0));
                vertices.push(unit(d, i, -1.0));
            }
            let s = 1.0 / sqrt(d as f64);
            let halfspaces = (0..1usize << d)
                .map(|mask| Halfspace {
                    normal: (0..d).map(|i| if mask >> i & 1 == 1 { -s } else { s }).collect(),
                    offset: s,
                })
                .collect();
            Ok(RawPolytope {
                dim: d,
                shape: Shape::CrossPolytope,
                label: format!("cross_polytope({d})"),
                vertices,
                halfspaces,
                volume: Some(powi2(d) / factorial(d)),
            })
        }
        Generator::RegularPolygon { dim, m } => {
            if *dim != 2 {
                return Err(Error::Construction("regular_polygon is two-dimensional".into()));
            }
            if *m < 3 {
                return Err(Error::Construction(format!("regular_polygon needs m >= 3, got {m}")));
            }
            let vertices: Vec<Vec<f64>> = (0..*m)
                .map(|i| {
                    let a = 2.0 * PI * i as f64 / *m as f64;
                    alloc::vec![libm::cos(a), libm::sin(a)]
                })
                .collect();
            let halfspaces = (0..*m)
                .map(|i| {
                    let a = PI * (2 * i + 1) as f64 / *m as f64;
                    let normal = alloc::vec![libm::cos(a), libm::sin(a)];
                    let offset = libm::cos(PI / *m as f64);
                    Halfspace { normal, offset }
                })
                .collect();
            Ok(RawPolytope {
                dim: 2,
                shape: Shape::RegularPolygon,
                label: format!("regular_polygon({m})"),
                vertices,
                halfspaces,
                volume: Some(0.5 * *m as f64 * libm::sin(2.0 * PI / *m as f64)),
            })
        }
        Generator::RegularSimplex { dim } => {
            let vertices = match dim {
                2 => alloc::vec![
                    alloc::vec![0.0, 0.0],
                    alloc::vec![1.0, 0.0],
                    alloc::vec![0.5, sqrt(3.0) / 2.0],
                ],
                3 => alloc::vec![
                    alloc::vec![1.0, 1.0, 1.0],
                    alloc::vec![1.0, -1.0, -1.0],
                    alloc::vec![-1.0, 1.0, -1.0],
                    alloc::vec![-1.0, -1.0, 1.0],
                ],
                _ => {
                    return Err(Error::Construction(format!(
                        "regular_simplex is available for d in {{2, 3}}, got {dim}"
                    )))
                }
            };
            let mut raw = from_vertices(*dim, &vertices)?;
            raw.shape = Shape::RegularSimplex;
            raw.label = format!("regular_simplex({dim})");
            Ok(raw)
        }
    }
}

fn powi2(d: usize) -> f64 {
    (0..d).fold(1.0, |acc, _| acc * 2.0)
}

fn diameter_of(points: &[Vec<f64>]) -> f64 {
    let mut best = 0.0f64;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            best = best.max(distance(&points[i], &points[j]));
        }
    }
    best
}

fn from_vertices(dim: usize, points: &[Vec<f64>]) -> Result<RawPolytope> {
    if !(2..=3).contains(&dim) {
        return Err(Error::UnsupportedDimension(dim));
    }
    if points.iter().any(|p| p.len() != dim) {
        return Err(Error::Construction(format!("every vertex must have {dim} coordinates")));
    }
    if points.iter().flatten().any(|x| !x.is_finite()) {
        return Err(Error::Construction("vertex coordinates must be finite".into()));
    }
    if points.len() < dim + 1 {
        return Err(Error::Construction(format!(
            "need at least {} affinely independent points, got {}",
            dim + 1,
            points.len()
        )));
    }
    let diam = diameter_of(points);
    let tol = 1e-9 * diam;
    if diam == 0.0 {
        return Err(Error::Construction("all points coincide".into()));
    }
    let halfspaces = if dim == 2 { hull::hull_2d(points, tol)? } else { hull::hull_3d(points, tol)? };
    // extreme points: tight normals span R^d
    let mut vertices: Vec<Vec<f64>> = Vec::new();
    for p in points {
        let tight: Vec<Vec<f64>> = halfspaces
            .iter()
            .filter(|h| h.slack(p).abs() <= tol)
            .map(|h| h.normal.clone())
            .collect();
        if rank(&tight, 1e-9) == dim && !vertices.iter().any(|v| distance(v, p) <= tol) {
            vertices.push(p.clone());
        }
    }
    Ok(RawPolytope {
        dim,
        shape: Shape::Explicit,
        label: format!("explicit({dim}d,{} vertices)", vertices.len()),
        vertices,
        halfspaces,
        volume: None,
    })
}

struct Bits(Vec<u64>);

impl Bits {
    fn from_ids(ids: &[usize], n: usize) -> Self {
        let mut b = alloc::vec![0u64; n.div_ceil(64)];
        for &i in ids {
            b[i / 64] |= 1 << (i % 64);
        }
        Bits(b)
    }
    fn is_subset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

fn assemble(raw: RawPolytope, opts: &BuildOptions) -> Result<Polytope> {
    let RawPolytope { dim, shape, label, vertices, halfspaces, volume } = raw;
    let diameter = diameter_of(&vertices);
    let tol = 1e-9 * diameter.max(f64::MIN_POSITIVE);
    let refs: Vec<&[f64]> = vertices.iter().map(|v| v.as_slice()).collect();
    if affine_dimension(&refs, tol) != dim {
        return Err(Error::Construction("polytope is not full-dimensional".into()));
    }
    for h in &halfspaces {
        if (norm(&h.normal) - 1.0).abs() > 1e-12 {
            return Err(Error::Construction("halfspace normals must be unit vectors".into()));
        }
        if vertices.iter().any(|v| h.slack(v) < -tol) {
            return Err(Error::Construction("a vertex violates a supporting halfspace".into()));
        }
    }
    let nv = vertices.len();
    // keep only facet-defining halfspaces, one per facet
    let mut facet_sets: Vec<Vec<usize>> = Vec::new();
    let mut facets: Vec<Halfspace> = Vec::new();
    for h in halfspaces {
        let ids: Vec<usize> = (0..nv).filter(|&i| h.slack(&vertices[i]).abs() <= tol).collect();
        let pts: Vec<&[f64]> = ids.iter().map(|&i| vertices[i].as_slice()).collect();
        if affine_dimension(&pts, tol) + 1 == dim && !facet_sets.contains(&ids) {
            facet_sets.push(ids);
            facets.push(h);
        }
    }
    if facets.len() < dim + 1 {
        return Err(Error::Construction("too few facets for a bounded polytope".into()));
    }
    let mut seen: BTreeSet<Vec<usize>> = facet_sets.iter().cloned().collect();
    let mut queue: Vec<Vec<usize>> = facet_sets.clone();
    while let Some(f) = queue.pop() {
        for g in &facet_sets {
            let meet: Vec<usize> = f.iter().filter(|i| g.binary_search(i).is_ok()).copied().collect();
            if !meet.is_empty() && seen.insert(meet.clone()) {
                queue.push(meet);
            }
        }
    }
    let mut sets: Vec<(usize, Vec<usize>)> = seen
        .into_iter()
        .map(|ids| {
            let pts: Vec<&[f64]> = ids.iter().map(|&i| vertices[i].as_slice()).collect();
            (affine_dimension(&pts, tol), ids)
        })
        .collect();
    sets.push((dim, (0..nv).collect()));
    sets.sort();
    let bits: Vec<Bits> = sets.iter().map(|(_, ids)| Bits::from_ids(ids, nv)).collect();
    let mut faces: Vec<Face> = sets
        .iter()
        .enumerate()
        .map(|(id, (d, ids))| {
            let mut c = alloc::vec![0.0; dim];
            for &i in ids {
                for k in 0..dim {
                    c[k] += vertices[i][k];
                }
            }
            c.iter_mut().for_each(|x| *x /= ids.len() as f64);
            let active = (0..facets.len()).filter(|&h| facets[h].slack(&c).abs() <= tol).collect();
            Face {
                id,
                dimension: *d,
                vertex_ids: ids.clone(),
                parent_ids: Vec::new(),
                child_ids: Vec::new(),
                angular_volume: 0.0,
                angular_volume_exact: true,
                relative_interior_point: c,
                active_halfspaces: active,
            }
        })
        .collect();
    for a in 0..faces.len() {
        for b in 0..faces.len() {
            if faces[b].dimension == faces[a].dimension + 1 && bits[a].is_subset_of(&bits[b]) {
                faces[a].parent_ids.push(b);
                faces[b].child_ids.push(a);
            }
        }
    }
    let mut lo = alloc::vec![f64::INFINITY; dim];
    let mut hi = alloc::vec![f64::NEG_INFINITY; dim];
    for v in &vertices {
        for k in 0..dim {
            lo[k] = lo[k].min(v[k]);
            hi[k] = hi[k].max(v[k]);
        }
    }
    let mut polytope = Polytope {
        dim,
        shape,
        label,
        vertices,
        halfspaces: facets,
        faces,
        volume: 0.0,
        bounding_box: BoundingBox { lo, hi },
        diameter,
    };
    polytope.volume = match volume {
        Some(v) => v,
        None => polytope.pyramid_volume(),
    };
    for id in 0..polytope.faces.len() {
        let (rho, exact) = angular::compute(&polytope, id, opts);
        polytope.faces[id].angular_volume = rho;
        polytope.faces[id].angular_volume_exact = exact;
    }
    Ok(polytope)
}

impl Polytope {
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn shape(&self) -> Shape {
        self.shape
    }
    /// Short provenance label such as `hypercube(3)`.
    pub fn label(&self) -> &str {
        &self.label
    }
    pub fn vertices(&self) -> &[Vec<f64>] {
        &self.vertices
    }
    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }
    pub fn face(&self, id: usize) -> Result<&Face> {
        self.faces.get(id).ok_or_else(|| Error::Lookup(format!("no face with id {id}")))
    }
    pub fn faces_of_dimension(&self, d: usize) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.dimension == d)
    }
    /// The face `A` itself.
    pub fn full_face(&self) -> &Face {
        self.faces.last().expect("lattice always contains A")
    }
    pub fn volume(&self) -> f64 {
        self.volume
    }
    pub fn bounding_box(&self) -> &BoundingBox {
        &self.bounding_box
    }
    pub fn diameter(&self) -> f64 {
        self.diameter
    }
    /// Geometric tolerance used for incidence tests: `1e-9 · diameter`.
    pub fn tolerance(&self) -> f64 {
        1e-9 * self.diameter
    }
    /// True for `[0,1]^d` and axis-aligned boxes.
    pub fn is_axis_box(&self) -> bool {
        matches!(self.shape, Shape::Hypercube | Shape::Box)
    }

    pub(crate) fn contains_unchecked(&self, x: &[f64]) -> bool {
        self.halfspaces.iter().all(|h| h.slack(x) >= -1e-12)
    }

    pub(crate) fn contains_within(&self, x: &[f64], tol: f64) -> bool {
        self.halfspaces.iter().all(|h| h.slack(x) >= -tol)
    }

    /// The polytope scaled by `s > 0` about the origin. Angular volumes are
    /// scale invariant and carried over unchanged.
    pub fn scaled(&self, s: f64) -> Result<Polytope> {
        if !(s.is_finite() && s > 0.0) {
            return Err(domain!("scale factor must be positive and finite, got {s}"));
        }
        let scale = |v: &Vec<f64>| v.iter().map(|x| x * s).collect::<Vec<f64>>();
        let mut out = self.clone();
        out.vertices = self.vertices.iter().map(scale).collect();
        for h in &mut out.halfspaces {
            h.offset *= s;
        }
        for f in &mut out.faces {
            f.relative_interior_point = scale(&f.relative_interior_point);
        }
        out.volume = self.volume * (0..self.dim).fold(1.0, |acc, _| acc * s);
        out.bounding_box = BoundingBox { lo: scale(&self.bounding_box.lo), hi: scale(&self.bounding_box.hi) };
        out.diameter = self.diameter * s;
        out.label = format!("{}*{s}", self.label);
        out.shape = match self.shape {
            Shape::Hypercube => Shape::Box,
            other => other,
        };
        Ok(out)
    }

    /// Volume as a sum of pyramids over the facets, apex at the vertex centroid.
    /// Supports `d ∈ {2, 3}`.
    fn pyramid_volume(&self) -> f64 {
        let apex = &self.full_face().relative_interior_point;
        let mut total = 0.0;
        for (h, facet) in self.faces_of_dimension(self.dim - 1).map(|f| (&self.halfspaces[f.active_halfspaces[0]], f)) {
            let height = h.slack(apex);
            let area = match self.dim {
                2 => distance(&self.vertices[facet.vertex_ids[0]], &self.vertices[facet.vertex_ids[1]]),
                _ => self.polygon_area(&facet.vertex_ids, &h.normal),
            };
            total += area * height / self.dim as f64;
        }
        total
    }

    /// Area of a planar convex polygon in `R^3` with the given unit normal.
    fn polygon_area(&self, ids: &[usize], normal: &[f64]) -> f64 {
        let ring = self.ordered_ring(ids, normal);
        let mut acc = [0.0; 3];
        for i in 0..ring.len() {
            let a = &self.vertices[ring[i]];
            let b = &self.vertices[ring[(i + 1) % ring.len()]];
            let c = crate::math::cross(a, b);
            for k in 0..3 {
                acc[k] += c[k];
            }
        }
        0.5 * dot(&acc, normal).abs()
    }

    /// Vertices of a planar face in `R^3` sorted by angle around their centroid.
    pub(crate) fn ordered_ring(&self, ids: &[usize], normal: &[f64]) -> Vec<usize> {
        let n = ids.len() as f64;
        let mut c = [0.0; 3];
        for &i in ids {
            for k in 0..3 {
                c[k] += self.vertices[i][k] / n;
            }
        }
        let e1 = crate::math::normalized(&sub(&self.vertices[ids[0]], &c));
        let e2 = crate::math::cross(normal, &e1);
        let mut ring: Vec<(f64, usize)> = ids
            .iter()
            .map(|&i| {
                let r = sub(&self.vertices[i], &c);
                (crate::math::atan2(dot(&r, &e2), dot(&r, &e1)), i)
            })
            .collect();
        ring.sort_by(|a, b| a.0.total_cmp(&b.0));
        ring.into_iter().map(|(_, i)| i).collect()
    }
}
