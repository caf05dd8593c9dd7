use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::error::Error;
use crate::rng::stream;
use rand::Rng;

fn cloud(points: &[&[f64]]) -> PointCloud {
    let owned: Vec<Vec<f64>> = points.iter().map(|p| p.to_vec()).collect();
    PointCloud::from_points(&owned).unwrap()
}

fn square() -> PointCloud {
    cloud(&[&[0.0, 0.0], &[1.0, 0.0], &[1.0, 1.0], &[0.0, 1.0]])
}

fn random_cloud(n: usize, d: usize, seed: u64) -> PointCloud {
    let mut rng = stream(seed);
    let coords = (0..n * d).map(|_| rng.gen::<f64>()).collect();
    PointCloud::new(d, coords, seed, "unit-cube").unwrap()
}

#[test]
fn line_knn_link() {
    let c = cloud(&[&[0.0, 0.0], &[3.0, 0.0], &[4.0, 0.0]]);
    assert_eq!(largest_k_nn_link(&c, 1).unwrap(), 3.0);
    assert_eq!(largest_k_nn_link_with_witness(&c, 1).unwrap().1, Some(0));
    assert_eq!(brute_force_l(&c, 1).unwrap(), 3.0);
}

#[test]
fn square_thresholds() {
    let c = square();
    // second nearest other corner is an adjacent one
    assert_eq!(largest_k_nn_link(&c, 2).unwrap(), 1.0);
    assert_eq!(largest_k_nn_link(&c, 3).unwrap(), 2f64.sqrt());
    assert_eq!(k_connectivity_threshold(&c, 2).unwrap(), 1.0);
    assert_eq!(k_connectivity_threshold(&c, 3).unwrap(), 2f64.sqrt());
    assert_eq!(longest_mst_edge(&c).unwrap(), 1.0);
    assert!(is_k_connected(&c, 1.0, 2).unwrap());
    assert!(!is_k_connected(&c, 1.0, 3).unwrap());
    assert!(brute_force_is_k_connected(&c, 1.0, 2).unwrap());
    assert!(!brute_force_is_k_connected(&c, 1.0, 3).unwrap());
}

#[test]
fn collinear_connectivity() {
    let c = cloud(&[&[0.0, 0.0], &[1.0, 0.0], &[3.0, 0.0]]);
    assert_eq!(k_connectivity_threshold(&c, 1).unwrap(), 2.0);
    assert_eq!(k_connectivity_threshold_by_search(&c, 1).unwrap(), 2.0);
    assert_eq!(longest_mst_edge(&c).unwrap(), 2.0);
    assert!(is_k_connected(&c, 2.0, 1).unwrap());
    assert!(!is_k_connected(&c, 2.0, 2).unwrap());
}

#[test]
fn small_and_degenerate() {
    let pair = cloud(&[&[0.0, 0.0], &[3.0, 4.0]]);
    assert_eq!(longest_mst_edge(&pair).unwrap(), 5.0);
    assert!(!is_k_connected(&pair, 0.5, 1).unwrap());
    assert!(is_k_connected(&pair, 5.0, 1).unwrap());
    let three = cloud(&[&[0.0, 0.0], &[1.0, 0.0], &[0.0, 1.0]]);
    assert_eq!(k_connectivity_threshold(&three, 3).unwrap(), f64::INFINITY);
    assert_eq!(largest_k_nn_link(&three, 3).unwrap(), f64::INFINITY);
    assert_eq!(largest_k_nn_link_with_witness(&three, 5).unwrap().1, None);
    // K_3 is 2-connected but not 3-connected
    assert!(is_k_connected(&three, 2.0, 2).unwrap());
    assert!(!is_k_connected(&three, 2.0, 3).unwrap());
    let one = cloud(&[&[0.5, 0.5]]);
    assert!(matches!(longest_mst_edge(&one), Err(Error::Domain(_))));
}

#[test]
fn argument_errors() {
    let c = square();
    assert!(matches!(largest_k_nn_link(&c, 0), Err(Error::Domain(_))));
    assert!(matches!(k_connectivity_threshold(&c, 0), Err(Error::Domain(_))));
    assert!(matches!(is_k_connected(&c, -1.0, 1), Err(Error::Domain(_))));
    assert!(matches!(is_k_connected(&c, f64::NAN, 1), Err(Error::Domain(_))));
    assert!(matches!(brute_force_l(&c, 0), Err(Error::Domain(_))));
    let big = random_cloud(17, 2, 1);
    assert!(matches!(brute_force_is_k_connected(&big, 0.3, 1), Err(Error::SizeGuard(_))));
}

#[test]
fn oracle_paths() {
    let path = cloud(&[&[0.0, 0.0], &[1.0, 0.0], &[2.0, 0.0]]);
    assert!(brute_force_is_k_connected(&path, 1.0, 1).unwrap());
    assert!(!brute_force_is_k_connected(&path, 1.0, 2).unwrap());
}

#[test]
fn duplicate_points() {
    let c = cloud(&[&[0.2, 0.2], &[0.2, 0.2], &[0.9, 0.2]]);
    assert_eq!(largest_k_nn_link(&c, 1).unwrap(), brute_force_l(&c, 1).unwrap());
    assert!((longest_mst_edge(&c).unwrap() - 0.7).abs() < 1e-15);
    assert_eq!(k_connectivity_threshold(&c, 2).unwrap(), k_connectivity_threshold_by_search(&c, 2).unwrap());
}

#[test]
fn report_serialises_infinity() {
    let c = cloud(&[&[0.0, 0.0], &[1.0, 0.0]]);
    let r = thresholds(&c, 2, true).unwrap();
    let json = serde_json::to_string(&r).unwrap();
    assert!(json.contains("\"L\":\"inf\""), "{json}");
    let back: ThresholdReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, r);
    let r = thresholds(&c, 1, false).unwrap();
    let back: ThresholdReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(back, r);
    assert_eq!(r.l, 1.0);
}

#[test]
fn matches_oracles_on_random_clouds() {
    for seed in 0..60u64 {
        let n = 3 + (seed as usize % 10);
        let d = 1 + (seed as usize % 3);
        let c = random_cloud(n, d, seed);
        for k in 1..4 {
            assert_eq!(largest_k_nn_link(&c, k).unwrap(), brute_force_l(&c, k).unwrap());
            let m = k_connectivity_threshold(&c, k).unwrap();
            if m.is_finite() {
                assert!(brute_force_is_k_connected(&c, m, k).unwrap());
                let below = f64::from_bits(m.to_bits() - 1);
                assert!(!brute_force_is_k_connected(&c, below, k).unwrap());
            }
            for r in [0.1, 0.3, 0.5, 0.8] {
                assert_eq!(is_k_connected(&c, r, k).unwrap(), brute_force_is_k_connected(&c, r, k).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn l_never_exceeds_m(seed in any::<u64>(), n in 2usize..60, k in 1usize..5) {
        let c = random_cloud(n, 2, seed);
        let r = thresholds(&c, k, true).unwrap();
        let m = r.m.unwrap();
        prop_assert!(r.l <= m);
        prop_assert_eq!(r.l.is_infinite(), n <= k);
    }

    #[test]
    fn mst_matches_search(seed in any::<u64>(), n in 2usize..120, d in 1usize..4) {
        let c = random_cloud(n, d, seed);
        prop_assert_eq!(longest_mst_edge(&c).unwrap(), k_connectivity_threshold_by_search(&c, 1).unwrap());
    }

    #[test]
    fn thresholds_monotone_in_k(seed in any::<u64>(), n in 6usize..50) {
        let c = random_cloud(n, 2, seed);
        let ls: Vec<f64> = (1..5).map(|k| largest_k_nn_link(&c, k).unwrap()).collect();
        let ms: Vec<f64> = (1..5).map(|k| k_connectivity_threshold(&c, k).unwrap()).collect();
        prop_assert!(ls.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(ms.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn connectivity_monotone_in_radius(seed in any::<u64>(), n in 3usize..40, k in 1usize..4, a in 0.0f64..1.5, b in 0.0f64..1.5) {
        let c = random_cloud(n, 2, seed);
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        if is_k_connected(&c, lo, k).unwrap() {
            prop_assert!(is_k_connected(&c, hi, k).unwrap());
        }
    }
}

#[test]
fn scaled_cloud_scales_thresholds() {
    let c = random_cloud(200, 2, 9);
    let scaled = PointCloud::new(2, c.coords().iter().map(|x| x * 4.0).collect(), 9, "x").unwrap();
    assert_eq!(largest_k_nn_link(&scaled, 3).unwrap(), 4.0 * largest_k_nn_link(&c, 3).unwrap());
    assert_eq!(longest_mst_edge(&scaled).unwrap(), 4.0 * longest_mst_edge(&c).unwrap());
}
