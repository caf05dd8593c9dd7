//! Limit constants for `L_{n,k(n)}` and `M_{n,k(n)}`.
//!
//! With `k(n) / log n → β < ∞`, `n L^d / log n` converges to
//! `max_φ Ĥ_β(D(φ)/d) / (f_φ ρ_φ)`; with `β = ∞`, `n L^d / k(n)` converges to
//! `max_φ 1 / (f_φ ρ_φ)`. The maximum runs over every face `φ` of `A`
//! including `A` itself, `D(φ)` is the face dimension, `ρ_φ` its angular
//! volume and `f_φ` the infimum of the density over it. `M` has the same limit.
//!
//! The polygon, polyhedron and hypercube variants evaluate the closed forms
//! from dihedral and vertex angles rather than from the generic angular
//! volumes, which makes them an independent check of [`limit_constant`].

use alloc::vec::Vec;
use core::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::math::{powi, unit_ball_volume};
use crate::polytope::{dihedral_angle, vertex_angle, Face, Polytope, Shape};
use crate::sampling::DensityModel;
use crate::theory::{hhat, BetaMode};

/// Faces within this relative distance of the maximum are all reported as argmax.
pub const ARGMAX_RELATIVE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// `n L^d / log n`, for finite β.
    PerLogN,
    /// `n L^d / k(n)`, for β = ∞.
    PerK,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FaceContribution {
    pub face_id: usize,
    pub dimension: usize,
    pub angular_volume: f64,
    pub density_inf: f64,
    pub contribution: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitReport {
    pub beta: BetaMode,
    pub per_face: Vec<FaceContribution>,
    pub constant: f64,
    pub argmax_faces: Vec<usize>,
    pub normalization: Normalization,
    /// Set when some angular volume or density infimum was only estimated.
    pub approximate: bool,
}

impl LimitReport {
    fn from_contributions(beta: BetaMode, per_face: Vec<FaceContribution>, approximate: bool) -> Self {
        let constant = per_face.iter().map(|c| c.contribution).fold(0.0, f64::max);
        let argmax_faces = per_face
            .iter()
            .filter(|c| c.contribution >= constant * (1.0 - ARGMAX_RELATIVE_TOLERANCE))
            .map(|c| c.face_id)
            .collect();
        let normalization = if beta.is_infinite() { Normalization::PerK } else { Normalization::PerLogN };
        LimitReport { beta, per_face, constant, argmax_faces, normalization, approximate }
    }
}

fn check_inputs(polytope: &Polytope, density: &DensityModel) -> Result<()> {
    density.check_polytope(polytope)?;
    if density.per_face_inf().len() != polytope.faces().len() {
        return Err(Error::Configuration(alloc::format!(
            "density carries {} face infima for {} faces",
            density.per_face_inf().len(),
            polytope.faces().len()
        )));
    }
    let f0 = density.f0().value;
    if !(f0 > 0.0) {
        return Err(domain!("the density must be bounded away from 0 on A (f0 = {f0})"));
    }
    Ok(())
}

fn finite_beta(beta: BetaMode) -> Result<f64> {
    match beta {
        BetaMode::Finite(b) if b.is_finite() && b >= 0.0 => Ok(b),
        BetaMode::Finite(b) => Err(domain!("beta must be finite and >= 0, got {b}")),
        BetaMode::Infinite => Err(domain!("this closed form needs a finite beta")),
    }
}

/// The limit constant, face by face.
pub fn limit_constant(polytope: &Polytope, density: &DensityModel, beta: BetaMode) -> Result<LimitReport> {
    check_inputs(polytope, density)?;
    let d = polytope.dim() as f64;
    let b = match beta {
        BetaMode::Infinite => None,
        finite => Some(finite_beta(finite)?),
    };
    let mut approximate = false;
    let mut per_face = Vec::with_capacity(polytope.faces().len());
    for face in polytope.faces() {
        let inf = density.face_inf(face.id)?;
        approximate |= inf.estimated || !face.angular_volume_exact;
        let numerator = match b {
            None => 1.0,
            Some(b) => hhat(b, face.dimension as f64 / d)?,
        };
        per_face.push(FaceContribution {
            face_id: face.id,
            dimension: face.dimension,
            angular_volume: face.angular_volume,
            density_inf: inf.value,
            contribution: numerator / (inf.value * face.angular_volume),
        });
    }
    Ok(LimitReport::from_contributions(beta, per_face, approximate))
}

/// `f(v)` at the single vertex of a 0-face.
fn vertex_density(polytope: &Polytope, density: &DensityModel, face: &Face) -> f64 {
    density.evaluate(&polytope.vertices()[face.vertex_ids[0]])
}

/// Polygon closed form:
/// `max(Ĥ_β(1)/(π f0), 2Ĥ_β(1/2)/(π f1), max_v 2β/(ω_v f(v)))`,
/// reported per face with each edge carrying its own infimum.
pub fn limit_constant_polygon(polytope: &Polytope, density: &DensityModel, beta: BetaMode) -> Result<LimitReport> {
    if polytope.dim() != 2 {
        return Err(domain!("polygon limit needs d = 2, got d = {}", polytope.dim()));
    }
    let b = finite_beta(beta)?;
    check_inputs(polytope, density)?;
    let (interior, edge) = (hhat(b, 1.0)?, hhat(b, 0.5)?);
    let mut approximate = false;
    let mut per_face = Vec::new();
    for face in polytope.faces() {
        let (rho, inf, contribution) = match face.dimension {
            2 => {
                let f0 = density.f0();
                approximate |= f0.estimated;
                (PI, f0.value, interior / (PI * f0.value))
            }
            1 => {
                let fe = density.face_inf(face.id)?;
                approximate |= fe.estimated;
                (PI / 2.0, fe.value, 2.0 * edge / (PI * fe.value))
            }
            _ => {
                let omega = vertex_angle(polytope, face)?;
                let fv = vertex_density(polytope, density, face);
                (omega / 2.0, fv, 2.0 * b / (omega * fv))
            }
        };
        per_face.push(FaceContribution {
            face_id: face.id,
            dimension: face.dimension,
            angular_volume: rho,
            density_inf: inf,
            contribution,
        });
    }
    Ok(LimitReport::from_contributions(beta, per_face, approximate))
}

/// Polyhedron closed form:
/// `max(Ĥ_β(1)/(θ_3 f0), 2Ĥ_β(2/3)/(θ_3 f1), 3Ĥ_β(1/3)/(2 min_e α_e f_e), max_v β/(ρ_v f(v)))`
/// with `θ_3 = 4π/3` and `α_e` the dihedral angle at edge `e`.
pub fn limit_constant_polyhedron(polytope: &Polytope, density: &DensityModel, beta: BetaMode) -> Result<LimitReport> {
    if polytope.dim() != 3 {
        return Err(domain!("polyhedron limit needs d = 3, got d = {}", polytope.dim()));
    }
    let b = finite_beta(beta)?;
    check_inputs(polytope, density)?;
    let theta = 4.0 * PI / 3.0;
    let (interior, facet, edge) = (hhat(b, 1.0)?, hhat(b, 2.0 / 3.0)?, hhat(b, 1.0 / 3.0)?);
    let mut approximate = false;
    let mut per_face = Vec::new();
    for face in polytope.faces() {
        let inf = if face.dimension == 0 {
            vertex_density(polytope, density, face)
        } else {
            let i = density.face_inf(face.id)?;
            approximate |= i.estimated;
            i.value
        };
        let (rho, contribution) = match face.dimension {
            3 => (theta, interior / (theta * inf)),
            2 => (theta / 2.0, 2.0 * facet / (theta * inf)),
            1 => {
                let alpha = dihedral_angle(polytope, face)?;
                (2.0 * alpha / 3.0, 3.0 * edge / (2.0 * alpha * inf))
            }
            _ => (face.angular_volume, b / (face.angular_volume * inf)),
        };
        per_face.push(FaceContribution {
            face_id: face.id,
            dimension: face.dimension,
            angular_volume: rho,
            density_inf: inf,
            contribution,
        });
    }
    Ok(LimitReport::from_contributions(beta, per_face, approximate))
}

/// Hypercube closed form: `max_j 2^j Ĥ_β(1 - j/d) / (θ_d f_j)`, where `j` is
/// the codimension of a face and `f_j` the density infimum over it.
pub fn limit_constant_hypercube(polytope: &Polytope, density: &DensityModel, beta: BetaMode) -> Result<LimitReport> {
    if polytope.shape() != Shape::Hypercube {
        return Err(domain!("hypercube limit needs a unit hypercube, got {:?}", polytope.shape()));
    }
    let b = finite_beta(beta)?;
    check_inputs(polytope, density)?;
    let d = polytope.dim();
    let theta = unit_ball_volume(d);
    let mut approximate = false;
    let mut per_face = Vec::new();
    for face in polytope.faces() {
        let j = d - face.dimension;
        let inf = density.face_inf(face.id)?;
        approximate |= inf.estimated;
        let scale = powi(2.0, j as i32);
        let numerator = scale * hhat(b, 1.0 - j as f64 / d as f64)?;
        per_face.push(FaceContribution {
            face_id: face.id,
            dimension: face.dimension,
            angular_volume: theta / scale,
            density_inf: inf.value,
            contribution: numerator / (theta * inf.value),
        });
    }
    Ok(LimitReport::from_contributions(beta, per_face, approximate))
}
