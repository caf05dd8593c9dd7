//! Angular volumes `ρ_φ = |K_φ ∩ B(o,1)|`.
//!
//! Exact branches cover `A` itself, facets, orthant-like cones (mutually
//! orthogonal active normals, e.g. every face of a box), polygon vertices,
//! polyhedron edges and polyhedron vertices. Anything else falls back to
//! Monte Carlo over the unit ball.

use alloc::vec::Vec;
use core::f64::consts::PI;

use rand::Rng;

use super::{BuildOptions, Face, Polytope};
use crate::error::{domain, Error, Result};
use crate::math::{angle_between, atan2, cross, dot, normalized, sub, unit_ball_volume};
use crate::rng;

pub(super) fn compute(p: &Polytope, id: usize, opts: &BuildOptions) -> (f64, bool) {
    let face = &p.faces[id];
    let d = p.dim;
    let theta = unit_ball_volume(d);
    if face.dimension == d {
        return (theta, true);
    }
    if face.dimension + 1 == d {
        return (theta / 2.0, true);
    }
    if orthogonal_normals(p, face) {
        let j = face.active_halfspaces.len() as i32;
        return (theta / libm::pow(2.0, j as f64), true);
    }
    match (d, face.dimension) {
        (2, 0) => (vertex_angle_unchecked(p, face) / 2.0, true),
        (3, 1) => (2.0 * dihedral_unchecked(p, face) / 3.0, true),
        (3, 0) => (solid_angle_at_vertex(p, face) / 3.0, true),
        _ => {
            let seed = rng::derive_seed(opts.mc_seed, &[id as u64]);
            (monte_carlo(p, face, opts.mc_samples, seed), false)
        }
    }
}

fn orthogonal_normals(p: &Polytope, face: &Face) -> bool {
    let act = &face.active_halfspaces;
    (0..act.len()).all(|i| {
        (i + 1..act.len()).all(|j| {
            dot(&p.halfspaces[act[i]].normal, &p.halfspaces[act[j]].normal).abs() <= 1e-12
        })
    })
}

fn check_member(p: &Polytope, face: &Face) -> Result<()> {
    match p.faces.get(face.id) {
        Some(f) if f.vertex_ids == face.vertex_ids && f.dimension == face.dimension => Ok(()),
        _ => Err(Error::Lookup(alloc::format!(
            "face {} is not a face of {}",
            face.id, p.label
        ))),
    }
}

/// `ρ_φ` for a face of `polytope`, as computed at construction time.
pub fn angular_volume(polytope: &Polytope, face: &Face) -> Result<f64> {
    check_member(polytope, face)?;
    Ok(polytope.faces[face.id].angular_volume)
}

/// Monte Carlo estimate of `ρ_φ`: the fraction of uniform points of `B(o,1)`
/// falling in `K_φ`, times `θ_d`. Independent of the exact branches.
pub fn angular_volume_monte_carlo(
    polytope: &Polytope,
    face_id: usize,
    samples: usize,
    seed: u64,
) -> Result<f64> {
    let face = polytope.face(face_id)?;
    if samples == 0 {
        return Err(domain!("sample count must be positive"));
    }
    Ok(monte_carlo(polytope, face, samples, seed))
}

fn monte_carlo(p: &Polytope, face: &Face, samples: usize, seed: u64) -> f64 {
    let d = p.dim;
    let mut rng = rng::stream(seed);
    let normals: Vec<&[f64]> = face
        .active_halfspaces
        .iter()
        .map(|&h| p.halfspaces[h].normal.as_slice())
        .collect();
    let mut y = alloc::vec![0.0; d];
    let mut accepted = 0usize;
    let mut hits = 0usize;
    while accepted < samples {
        for v in y.iter_mut() {
            *v = 2.0 * rng.gen::<f64>() - 1.0;
        }
        if dot(&y, &y) > 1.0 {
            continue;
        }
        accepted += 1;
        if normals.iter().all(|n| dot(n, &y) <= 0.0) {
            hits += 1;
        }
    }
    unit_ball_volume(d) * hits as f64 / samples as f64
}

/// Interior angle `α_e` between the two facets meeting at an edge of a
/// polyhedron.
pub fn dihedral_angle(polytope: &Polytope, edge: &Face) -> Result<f64> {
    check_member(polytope, edge)?;
    if polytope.dim != 3 || edge.dimension != 1 {
        return Err(domain!(
            "dihedral angles need an edge (dimension 1) of a polyhedron (d = 3); got D = {} in d = {}",
            edge.dimension,
            polytope.dim
        ));
    }
    Ok(dihedral_unchecked(polytope, edge))
}

fn dihedral_unchecked(p: &Polytope, edge: &Face) -> f64 {
    let n1 = &p.halfspaces[edge.active_halfspaces[0]].normal;
    let n2 = &p.halfspaces[edge.active_halfspaces[1]].normal;
    PI - angle_between(n1, n2)
}

/// Interior angle `ω_v` subtended by a polygon at a vertex.
pub fn vertex_angle(polytope: &Polytope, vertex: &Face) -> Result<f64> {
    check_member(polytope, vertex)?;
    if polytope.dim != 2 || vertex.dimension != 0 {
        return Err(domain!("vertex angles need a vertex of a polygon (d = 2)"));
    }
    Ok(vertex_angle_unchecked(polytope, vertex))
}

fn edge_directions(p: &Polytope, vertex: &Face) -> Vec<Vec<f64>> {
    let v = vertex.vertex_ids[0];
    vertex
        .parent_ids
        .iter()
        .map(|&e| {
            let ids = &p.faces[e].vertex_ids;
            let w = if ids[0] == v { ids[1] } else { ids[0] };
            normalized(&sub(&p.vertices[w], &p.vertices[v]))
        })
        .collect()
}

fn vertex_angle_unchecked(p: &Polytope, vertex: &Face) -> f64 {
    let dirs = edge_directions(p, vertex);
    angle_between(&dirs[0], &dirs[1])
}

/// Solid angle `Ω_v` of the cone of a polyhedron at a vertex: the spherical
/// polygon spanned by the unit edge directions, fan-triangulated, with each
/// spherical triangle's excess from the Van Oosterom-Strackee formula.
fn solid_angle_at_vertex(p: &Polytope, vertex: &Face) -> f64 {
    let dirs = edge_directions(p, vertex);
    let mut axis = [0.0; 3];
    for u in &dirs {
        for k in 0..3 {
            axis[k] += u[k];
        }
    }
    let axis = normalized(&axis);
    // any vector not parallel to the axis seeds the tangent frame
    let seed = if axis[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
    let e1 = normalized(&cross(&axis, &seed));
    let e2 = cross(&axis, &e1);
    let mut ordered: Vec<(f64, &Vec<f64>)> =
        dirs.iter().map(|u| (atan2(dot(u, &e2), dot(u, &e1)), u)).collect();
    ordered.sort_by(|a, b| a.0.total_cmp(&b.0));
    let a = ordered[0].1;
    let mut omega = 0.0;
    for w in ordered[1..].windows(2) {
        let (b, c) = (w[0].1, w[1].1);
        let triple = dot(a, &cross(b, c)).abs();
        let denom = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
        omega += 2.0 * atan2(triple, denom);
    }
    omega
}
