use polylink_core::{
    build_polytope, contains, sample_points, sample_points_with_stats, DensityModel, DensitySpec,
    PolytopeSpec, SamplingOptions,
};
use statrs::distribution::{ChiSquared, ContinuousCDF};

#[test]
fn uniform_cells_pass_chi_square() {
    let n = 100_000;
    for d in 1..=3usize {
        let p = build_polytope(&PolytopeSpec::hypercube(d)).unwrap();
        let f = DensityModel::new(&DensitySpec::Uniform, &p).unwrap();
        let cloud = sample_points(&p, &f, n, 1000 + d as u64).unwrap();
        let cells = 4usize.pow(d as u32);
        let mut counts = vec![0u64; cells];
        for x in cloud.iter() {
            let idx = x.iter().fold(0, |acc, c| acc * 4 + ((c * 4.0) as usize).min(3));
            counts[idx] += 1;
        }
        let expected = n as f64 / cells as f64;
        let stat: f64 = counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
        let p_value = 1.0 - ChiSquared::new((cells - 1) as f64).unwrap().cdf(stat);
        assert!(p_value > 1e-4, "d={d}: chi2={stat}, p={p_value}");
    }
}

#[test]
fn quarter_square_mass() {
    let p = build_polytope(&PolytopeSpec::hypercube(2)).unwrap();
    let f = DensityModel::new(&DensitySpec::Uniform, &p).unwrap();
    let cloud = sample_points(&p, &f, 100_000, 5).unwrap();
    let inside = cloud.iter().filter(|x| x[0] <= 0.5 && x[1] <= 0.5).count();
    let frac = inside as f64 / 1e5;
    assert!((frac - 0.25).abs() <= 0.01, "{frac}");
}

#[test]
fn triangle_acceptance_rate() {
    let p = build_polytope(&PolytopeSpec::simplex(2)).unwrap();
    let f = DensityModel::new(&DensitySpec::Uniform, &p).unwrap();
    let (cloud, stats) = sample_points_with_stats(&p, &f, 51_000, 11, &SamplingOptions::default()).unwrap();
    assert!(stats.proposals >= 100_000, "{}", stats.proposals);
    assert!((stats.acceptance_rate() - 0.5).abs() <= 0.01, "{}", stats.acceptance_rate());
    assert!(cloud.iter().all(|x| contains(&p, x).unwrap()));
}

#[test]
fn seeds_give_distinct_clouds() {
    let p = build_polytope(&PolytopeSpec::regular_simplex(3)).unwrap();
    let f = DensityModel::new(&DensitySpec::Product { factors: vec![vec![2.0, 0.5], vec![1.0], vec![3.0, -0.5]] }, &p)
        .unwrap();
    for s in 0..100u64 {
        let a = sample_points(&p, &f, 5, 2 * s).unwrap();
        let b = sample_points(&p, &f, 5, 2 * s + 1).unwrap();
        assert_ne!(a.point(0), b.point(0));
        assert_eq!(a, sample_points(&p, &f, 5, 2 * s).unwrap());
        assert!(a.iter().chain(b.iter()).all(|x| contains(&p, x).unwrap()));
    }
}

#[test]
fn weighted_density_shifts_mass() {
    // f ∝ 1 + x on the square: P[x <= 1/2] = (1/2 + 1/8) / (3/2) = 5/12
    let p = build_polytope(&PolytopeSpec::hypercube(2)).unwrap();
    let f = DensityModel::new(&DensitySpec::Product { factors: vec![vec![1.0, 1.0], vec![1.0]] }, &p).unwrap();
    let cloud = sample_points(&p, &f, 100_000, 3).unwrap();
    let frac = cloud.iter().filter(|x| x[0] <= 0.5).count() as f64 / 1e5;
    assert!((frac - 5.0 / 12.0).abs() <= 0.01, "{frac}");
    assert!((f.integral_estimate(&p, 200_000, 4) - 1.0).abs() <= 0.01);
}
