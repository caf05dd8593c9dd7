//! Limit constants and finite-sample thresholds for the largest k-nearest-neighbour
//! link `L_{n,k}` and the k-connectivity threshold `M_{n,k}` of i.i.d. samples in
//! a convex polytope.
//!
//! The crate is `no_std` (with `alloc`). Everything that touches files, clocks or
//! threads lives in the `polylink` companion crate.
//!
//! Module map:
//! - [`theory`]: the rate function `H`, its inverse family `Ĥ_a`, Chernoff bounds.
//! - [`polytope`]: polytope construction, face lattice, angular volumes.
//! - [`sampling`]: density models and reproducible rejection sampling.
//! - [`rgg`]: thresholds of random geometric graphs plus brute-force oracles.
//! - [`limits`]: the limit constants, per face and in aggregate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod error;
pub mod limits;
pub mod math;
pub mod polytope;
pub mod rgg;
pub mod rng;
pub mod sampling;
pub mod theory;

pub use error::{Error, Result};
pub use limits::{
    limit_constant, limit_constant_hypercube, limit_constant_polygon,
    limit_constant_polyhedron, FaceContribution, LimitReport, Normalization,
};
pub use polytope::{
    angular_volume, angular_volume_monte_carlo, build_polytope, build_polytope_with,
    contains, dihedral_angle, face_lattice, vertex_angle, BoundingBox, BuildOptions, Face, Halfspace,
    Polytope, PolytopeSpec, Shape,
};
pub use rgg::{
    brute_force_is_k_connected, brute_force_l, is_k_connected, k_connectivity_threshold,
    k_connectivity_threshold_by_search, largest_k_nn_link, longest_mst_edge, thresholds,
    ThresholdReport,
};
pub use sampling::{
    estimate_face_infimum, sample_points, sample_points_with_stats, DensityKind,
    DensityModel, DensityOptions, DensitySpec, FaceInfimum, PointCloud, SampleStats,
    SamplingOptions,
};
pub use theory::{chernoff_bound, h_function, hhat, BetaMode, ChernoffBound};
