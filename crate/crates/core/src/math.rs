//! Float helpers that work without `std`, plus the small amount of linear
//! algebra the geometry code needs.

use alloc::vec::Vec;
use core::f64::consts::PI;

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub fn ln1p(x: f64) -> f64 {
    libm::log1p(x)
}

#[inline]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}

#[inline]
pub fn powi(x: f64, n: i32) -> f64 {
    libm::pow(x, n as f64)
}

#[inline]
pub fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

#[inline]
pub fn ceil(x: f64) -> f64 {
    libm::ceil(x)
}

/// Volume of the unit ball in `R^d`.
///
/// Uses `θ_d = θ_{d-2} · 2π / d` from `θ_0 = 1`, `θ_1 = 2`, which equals
/// `π^{d/2} / Γ(1 + d/2)` without going through a gamma approximation.
pub fn unit_ball_volume(d: usize) -> f64 {
    let mut v = if d % 2 == 0 { 1.0 } else { 2.0 };
    let mut j = if d % 2 == 0 { 2 } else { 3 };
    while j <= d {
        v *= 2.0 * PI / j as f64;
        j += 2;
    }
    v
}

/// Squared Euclidean distance. Symmetric bit-for-bit in its arguments.
#[inline]
pub fn sq_distance(a: &[f64], b: &[f64]) -> f64 {
    let mut s = 0.0;
    for (x, y) in a.iter().zip(b) {
        let t = x - y;
        s += t * t;
    }
    s
}

/// Euclidean distance. Every distance comparison in the crate goes through
/// this function so that thresholds computed by different routes compare equal.
#[inline]
pub fn distance(a: &[f64], b: &[f64]) -> f64 {
    sqrt(sq_distance(a, b))
}

#[inline]
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[inline]
pub fn norm(a: &[f64]) -> f64 {
    sqrt(dot(a, a))
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn normalized(a: &[f64]) -> Vec<f64> {
    let n = norm(a);
    a.iter().map(|x| x / n).collect()
}

pub fn cross(a: &[f64], b: &[f64]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Angle between two vectors in `[0, π]`, stable for nearly parallel inputs.
pub fn angle_between(a: &[f64], b: &[f64]) -> f64 {
    let d = dot(a, b);
    let na = norm(a);
    let nb = norm(b);
    // |a||b| sin θ via Lagrange's identity
    let s2 = (na * nb) * (na * nb) - d * d;
    atan2(sqrt(s2.max(0.0)), d)
}

/// Rank of a set of row vectors by Gaussian elimination with partial pivoting.
pub fn rank(rows: &[Vec<f64>], tol: f64) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<f64>> = rows.to_vec();
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let (piv, val) = (r..m.len())
            .map(|i| (i, m[i][c].abs()))
            .fold((r, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if val <= tol {
            continue;
        }
        m.swap(r, piv);
        for i in r + 1..m.len() {
            let f = m[i][c] / m[r][c];
            if f != 0.0 {
                for j in c..cols {
                    m[i][j] -= f * m[r][j];
                }
            }
        }
        r += 1;
    }
    r
}

/// Affine dimension of a point set (`rank` of differences to the first point).
pub fn affine_dimension(points: &[&[f64]], tol: f64) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let diffs: Vec<Vec<f64>> = points[1..].iter().map(|p| sub(p, points[0])).collect();
    rank(&diffs, tol)
}

/// Orthonormal basis of the span of `vectors` (modified Gram-Schmidt).
pub fn orthonormal_basis(vectors: &[Vec<f64>], tol: f64) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for b in &basis {
            let c = dot(&w, b);
            for (wi, bi) in w.iter_mut().zip(b) {
                *wi -= c * bi;
            }
        }
        let n = norm(&w);
        if n > tol {
            basis.push(w.iter().map(|x| x / n).collect());
        }
    }
    basis
}

/// Solves the square system `a x = b` by Gaussian elimination.
/// Returns `None` when the matrix is numerically singular.
pub fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for c in 0..n {
        let piv = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs()))?;
        if a[piv][c].abs() < 1e-14 {
            return None;
        }
        a.swap(c, piv);
        b.swap(c, piv);
        for i in c + 1..n {
            let f = a[i][c] / a[c][c];
            for j in c..n {
                a[i][j] -= f * a[c][j];
            }
            b[i] -= f * b[c];
        }
    }
    let mut x = alloc::vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|j| a[i][j] * x[j]).sum();
        x[i] = (b[i] - s) / a[i][i];
    }
    Some(x)
}

/// Radical inverse of `index` in `base`; the building block of Halton sequences.
pub fn radical_inverse(mut index: u64, base: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let mut f = inv;
    let mut r = 0.0;
    while index > 0 {
        r += f * (index % base) as f64;
        index /= base;
        f *= inv;
    }
    r
}

pub(crate) const PRIMES: [u64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_ball_volumes_match_closed_forms() {
        assert_eq!(unit_ball_volume(1), 2.0);
        assert!((unit_ball_volume(2) - PI).abs() < 1e-15);
        assert!((unit_ball_volume(3) - 4.0 * PI / 3.0).abs() < 1e-15);
        assert!((unit_ball_volume(4) - PI * PI / 2.0).abs() < 1e-14);
        assert!((unit_ball_volume(5) - 8.0 * PI * PI / 15.0).abs() < 1e-14);
    }

    #[test]
    fn distance_is_symmetric() {
        let a = [0.1, 0.7, 1e-9];
        let b = [0.33, -2.0, 5.5];
        assert_eq!(distance(&a, &b).to_bits(), distance(&b, &a).to_bits());
    }

    #[test]
    fn rank_detects_dependence() {
        let rows = alloc::vec![alloc::vec![1.0, 2.0, 3.0], alloc::vec![2.0, 4.0, 6.0]];
        assert_eq!(rank(&rows, 1e-12), 1);
    }

    #[test]
    fn halton_base_two() {
        assert_eq!(radical_inverse(1, 2), 0.5);
        assert_eq!(radical_inverse(3, 2), 0.75);
    }
}
