//! Convex hulls for explicit vertex input in two and three dimensions.
//!
//! Both routines return supporting halfspaces only. Which input points are
//! vertices is decided afterwards from the halfspace incidences.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::Halfspace;
use crate::error::{Error, Result};
use crate::math::{cross, dot, norm, sub};

fn cross2(o: &[f64], a: &[f64], b: &[f64]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Andrew's monotone chain. Collinear boundary points are dropped.
pub(crate) fn hull_2d(points: &[Vec<f64>], tol: f64) -> Result<Vec<Halfspace>> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&a, &b| {
        points[a][0]
            .total_cmp(&points[b][0])
            .then(points[a][1].total_cmp(&points[b][1]))
    });
    let mut chain: Vec<usize> = Vec::with_capacity(2 * idx.len());
    for pass in 0..2 {
        let start = chain.len();
        let iter: Vec<usize> = if pass == 0 { idx.clone() } else { idx.iter().rev().copied().collect() };
        for i in iter {
            while chain.len() >= start + 2 {
                let o = &points[chain[chain.len() - 2]];
                let a = &points[chain[chain.len() - 1]];
                // scale-aware collinearity: area over base length
                let base = norm(&sub(a, o)).max(f64::MIN_POSITIVE);
                if cross2(o, a, &points[i]) / base <= tol {
                    chain.pop();
                } else {
                    break;
                }
            }
            chain.push(i);
        }
        chain.pop();
    }
    if chain.len() < 3 {
        return Err(Error::Construction(
            "fewer than 3 affinely independent points in the plane".into(),
        ));
    }
    let m = chain.len();
    let mut halfspaces = Vec::with_capacity(m);
    for i in 0..m {
        let a = &points[chain[i]];
        let b = &points[chain[(i + 1) % m]];
        let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
        let len = libm::hypot(dx, dy);
        let normal = alloc::vec![dy / len, -dx / len];
        let offset = dot(&normal, a);
        halfspaces.push(Halfspace { normal, offset });
    }
    Ok(halfspaces)
}

struct Tri {
    v: [usize; 3],
    normal: [f64; 3],
    offset: f64,
    alive: bool,
}

fn make_tri(points: &[Vec<f64>], v: [usize; 3], interior: &[f64; 3]) -> Tri {
    let (a, b, c) = (&points[v[0]], &points[v[1]], &points[v[2]]);
    let mut n = cross(&sub(b, a), &sub(c, a));
    let len = norm(&n);
    for x in n.iter_mut() {
        *x /= len;
    }
    let mut v = v;
    let mut offset = dot(&n, a);
    if dot(&n, interior) > offset {
        v.swap(1, 2);
        for x in n.iter_mut() {
            *x = -*x;
        }
        offset = -offset;
    }
    Tri { v, normal: n, offset, alive: true }
}

/// Incremental 3-d hull over triangles, then coplanar triangles are merged
/// into a single supporting plane.
pub(crate) fn hull_3d(points: &[Vec<f64>], tol: f64) -> Result<Vec<Halfspace>> {
    let degenerate = || Error::Construction("fewer than 4 affinely independent points in space".into());
    let n = points.len();
    if n < 4 {
        return Err(degenerate());
    }
    let far = |from: &dyn Fn(&[f64]) -> f64| -> (usize, f64) {
        (0..n)
            .map(|i| (i, from(&points[i])))
            .fold((0, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc })
    };
    let p0 = 0;
    let (p1, d1) = far(&|p| norm(&sub(p, &points[p0])));
    if d1 <= tol {
        return Err(degenerate());
    }
    let axis = sub(&points[p1], &points[p0]);
    let (p2, d2) = far(&|p| norm(&cross(&axis, &sub(p, &points[p0]))) / norm(&axis));
    if d2 <= tol {
        return Err(degenerate());
    }
    let mut pn = cross(&axis, &sub(&points[p2], &points[p0]));
    let l = norm(&pn);
    pn.iter_mut().for_each(|x| *x /= l);
    let (p3, d3) = far(&|p| dot(&pn, &sub(p, &points[p0])).abs());
    if d3 <= tol {
        return Err(degenerate());
    }
    let mut interior = [0.0; 3];
    for &i in &[p0, p1, p2, p3] {
        for k in 0..3 {
            interior[k] += points[i][k] / 4.0;
        }
    }
    let mut tris = alloc::vec![
        make_tri(points, [p0, p1, p2], &interior),
        make_tri(points, [p0, p1, p3], &interior),
        make_tri(points, [p0, p2, p3], &interior),
        make_tri(points, [p1, p2, p3], &interior),
    ];
    let seeds = [p0, p1, p2, p3];
    for (i, p) in points.iter().enumerate() {
        if seeds.contains(&i) {
            continue;
        }
        let visible: Vec<usize> = (0..tris.len())
            .filter(|&t| tris[t].alive && dot(&tris[t].normal, p) - tris[t].offset > tol)
            .collect();
        if visible.is_empty() {
            continue;
        }
        let mut edges = BTreeSet::new();
        for &t in &visible {
            let v = tris[t].v;
            for e in 0..3 {
                edges.insert((v[e], v[(e + 1) % 3]));
            }
        }
        let horizon: Vec<(usize, usize)> = edges
            .iter()
            .filter(|&&(a, b)| !edges.contains(&(b, a)))
            .copied()
            .collect();
        for &t in &visible {
            tris[t].alive = false;
        }
        for (a, b) in horizon {
            tris.push(make_tri(points, [a, b, i], &interior));
        }
    }
    let mut planes: Vec<Halfspace> = Vec::new();
    for t in tris.iter().filter(|t| t.alive) {
        let dup = planes.iter().any(|h| {
            (dot(&h.normal, &t.normal) - 1.0).abs() <= 1e-9 && (h.offset - t.offset).abs() <= tol
        });
        if !dup {
            planes.push(Halfspace { normal: t.normal.to_vec(), offset: t.offset });
        }
    }
    Ok(planes)
}
