use std::f64::consts::PI;

use polylink_core::{
    build_polytope, limit_constant, limit_constant_polyhedron, sample_points, thresholds,
    BetaMode, DensityModel, DensitySpec, Error, PolytopeSpec, ThresholdReport,
};

#[test]
fn json_specs_to_limit_constant() {
    let tetra: PolytopeSpec = serde_json::from_str(
        r#"{"dim": 3, "vertices": [[1,1,1],[1,-1,-1],[-1,1,-1],[-1,-1,1],[0,0,0]]}"#,
    )
    .unwrap();
    let p = build_polytope(&tetra).unwrap();
    assert_eq!(p.vertices().len(), 4);
    assert_eq!(p.faces().len(), 15);
    let density: DensitySpec = serde_json::from_str(r#"{"kind": "uniform"}"#).unwrap();
    let f = DensityModel::new(&density, &p).unwrap();
    assert!((f.f0().value * p.volume() - 1.0).abs() < 1e-12);

    let general = limit_constant(&p, &f, BetaMode::Finite(0.0)).unwrap();
    let closed = limit_constant_polyhedron(&p, &f, BetaMode::Finite(0.0)).unwrap();
    assert!((general.constant - closed.constant).abs() <= 1e-12 * closed.constant);
    // the sharp edges (dihedral angle arccos(1/3) < π/2) decide the limit
    let alpha = (1.0f64 / 3.0).acos();
    assert!((general.constant - 1.0 / (2.0 * alpha * f.f0().value)).abs() < 1e-12);
    assert!(general.argmax_faces.iter().all(|&id| p.faces()[id].dimension == 1));
    assert_eq!(general.argmax_faces.len(), 6);

    let json = serde_json::to_value(&general).unwrap();
    assert_eq!(json["normalization"], "per_log_n");
    assert_eq!(json["per_face"].as_array().unwrap().len(), 15);
}

#[test]
fn infinite_beta_picks_the_sharpest_corner() {
    let p = build_polytope(&PolytopeSpec::simplex(3)).unwrap();
    let f = DensityModel::new(&DensitySpec::Uniform, &p).unwrap();
    let r = limit_constant(&p, &f, BetaMode::Infinite).unwrap();
    let rho_min = p.faces().iter().map(|x| x.angular_volume).fold(f64::INFINITY, f64::min);
    assert!((r.constant - 1.0 / (f.f0().value * rho_min)).abs() < 1e-12 * r.constant);
    // the three acute corners of the corner simplex, not the right-angled one
    assert_eq!(r.argmax_faces.len(), 3);
}

#[test]
fn sampled_cloud_thresholds() {
    let p = build_polytope(&PolytopeSpec::hypercube(2)).unwrap();
    let f = DensityModel::new(&DensitySpec::Uniform, &p).unwrap();
    let cloud = sample_points(&p, &f, 2000, 42).unwrap();
    for k in 1..=4 {
        let r: ThresholdReport = thresholds(&cloud, k, true).unwrap();
        let m = r.m.unwrap();
        assert!(r.l > 0.0 && r.l <= m, "k={k}: L={} M={m}", r.l);
        assert!(r.witness_l.unwrap() < 2000);
    }
    // n L^2 / log n is already of the order of 1/π at this size
    let r = thresholds(&cloud, 1, false).unwrap();
    let stat = 2000.0 * r.l * r.l / 2000f64.ln();
    assert!(stat > 0.5 / PI && stat < 3.0 / PI, "{stat}");
    assert_eq!(r.m, None);
}

#[test]
fn mismatched_density_is_a_configuration_error() {
    let square = build_polytope(&PolytopeSpec::hypercube(2)).unwrap();
    let triangle = build_polytope(&PolytopeSpec::simplex(2)).unwrap();
    let f = DensityModel::new(&DensitySpec::Uniform, &triangle).unwrap();
    assert!(matches!(limit_constant(&square, &f, BetaMode::Finite(1.0)), Err(Error::Configuration(_))));
    assert!(sample_points(&square, &f, 10, 1).is_err());
}

#[test]
fn face_counts_of_generated_shapes() {
    let count = |spec: PolytopeSpec| build_polytope(&spec).unwrap().faces().len();
    assert_eq!(count(PolytopeSpec::hypercube(4)), 81);
    assert_eq!(count(PolytopeSpec::cross_polytope(3)), 27);
    assert_eq!(count(PolytopeSpec::regular_polygon(6)), 13);
    assert_eq!(count(PolytopeSpec::box_with_sides(vec![2.0, 0.5, 1.0])), 27);
}
