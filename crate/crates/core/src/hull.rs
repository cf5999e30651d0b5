//! Minimum-norm point of the convex hull of a finite point set in 3-space
//! (Wolfe's algorithm), used to decide whether the hull contains the origin.

use nalgebra::{DMatrix, DVector};

pub type Vec3 = [f64; 3];

fn dot(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn combine(points: &[Vec3], support: &[usize], w: &[f64]) -> Vec3 {
    let mut x = [0.0; 3];
    for (&i, &wi) in support.iter().zip(w) {
        for c in 0..3 {
            x[c] += wi * points[i][c];
        }
    }
    x
}

/// Weights of the point of least norm in the affine hull of `support`.
fn affine_minimizer(points: &[Vec3], support: &[usize]) -> Vec<f64> {
    let k = support.len();
    let mut a = DMatrix::zeros(k + 1, k + 1);
    for i in 0..k {
        for j in 0..k {
            a[(i, j)] = dot(&points[support[i]], &points[support[j]]);
        }
        a[(i, k)] = 1.0;
        a[(k, i)] = 1.0;
    }
    let mut rhs = DVector::zeros(k + 1);
    rhs[k] = 1.0;
    let sol = a
        .clone()
        .lu()
        .solve(&rhs)
        .filter(|s| s.iter().all(|v| v.is_finite()))
        .unwrap_or_else(|| {
            a.svd(true, true)
                .solve(&rhs, 1e-14)
                .expect("svd solve")
        });
    sol.rows(0, k).iter().copied().collect()
}

/// Convex weights `(index, weight)` and the minimum-norm point.
pub fn min_norm_point(points: &[Vec3]) -> (Vec<(usize, f64)>, Vec3) {
    assert!(!points.is_empty(), "no points");
    let scale = points.iter().map(|p| dot(p, p)).fold(0.0, f64::max).max(1e-300);
    let eps = 1e-12 * scale;
    let start = (0..points.len())
        .min_by(|&a, &b| dot(&points[a], &points[a]).total_cmp(&dot(&points[b], &points[b])))
        .unwrap();
    let mut support = vec![start];
    let mut w = vec![1.0];
    for _ in 0..10 * points.len() + 100 {
        let x = combine(points, &support, &w);
        let xx = dot(&x, &x);
        if xx <= 1e-28 * scale {
            break;
        }
        let (j, best) = (0..points.len())
            .map(|i| (i, dot(&x, &points[i])))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        if best > xx - eps || support.contains(&j) {
            break;
        }
        support.push(j);
        w.push(0.0);
        loop {
            let alpha = affine_minimizer(points, &support);
            if alpha.iter().all(|&a| a > 1e-15) {
                w = alpha;
                break;
            }
            let theta = w
                .iter()
                .zip(&alpha)
                .filter(|(_, &a)| a <= 1e-15)
                .map(|(&wi, &a)| if wi - a > 0.0 { wi / (wi - a) } else { 0.0 })
                .fold(1.0, f64::min);
            for (wi, a) in w.iter_mut().zip(&alpha) {
                *wi += theta * (a - *wi);
            }
            let keep: Vec<usize> = (0..support.len()).filter(|&i| w[i] > 1e-15).collect();
            // drop at least one point to guarantee progress
            let keep = if keep.len() == support.len() {
                let drop = (0..w.len()).min_by(|&a, &b| w[a].total_cmp(&w[b])).unwrap();
                keep.into_iter().filter(|&i| i != drop).collect()
            } else {
                keep
            };
            support = keep.iter().map(|&i| support[i]).collect();
            w = keep.iter().map(|&i| w[i]).collect();
            let total: f64 = w.iter().sum();
            w.iter_mut().for_each(|v| *v /= total);
            if support.len() == 1 {
                break;
            }
        }
    }
    let x = combine(points, &support, &w);
    (support.into_iter().zip(w).collect(), x)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HullVerdict {
    Contains,
    Separated,
    Indeterminate,
}

#[derive(Clone, Debug)]
pub struct HullCertificate {
    pub verdict: HullVerdict,
    /// Convex weights on sample indices whose combination is closest to 0.
    pub weights: Vec<(usize, f64)>,
    /// Norm of the weighted combination.
    pub residual: f64,
    /// Unit direction with `direction . p >= gap` for every sample `p`.
    pub direction: Vec3,
    pub gap: f64,
}

/// Decides whether the hull of `points` contains the origin: a residual
/// at most `tolerance` counts as containment, a gap above `separation`
/// counts as separation, anything between is indeterminate.
pub fn hull_contains_origin(points: &[Vec3], tolerance: f64, separation: f64) -> HullCertificate {
    let (weights, x) = min_norm_point(points);
    let residual = dot(&x, &x).sqrt();
    let (direction, gap) = if residual > 0.0 {
        let d = [x[0] / residual, x[1] / residual, x[2] / residual];
        let gap = points.iter().map(|p| dot(&d, p)).fold(f64::INFINITY, f64::min);
        (d, gap)
    } else {
        ([0.0; 3], 0.0)
    };
    let verdict = if residual <= tolerance {
        HullVerdict::Contains
    } else if gap > separation {
        HullVerdict::Separated
    } else {
        HullVerdict::Indeterminate
    };
    HullCertificate {
        verdict,
        weights,
        residual,
        direction,
        gap,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetrahedron_around_origin() {
        let pts = [[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0], [3.0, 0.0, 0.0]];
        let c = hull_contains_origin(&pts, 1e-9, 1e-9);
        assert_eq!(c.verdict, HullVerdict::Contains);
        let s: f64 = c.weights.iter().map(|w| w.1).sum();
        assert!((s - 1.0).abs() < 1e-12);
        assert!(c.weights.iter().all(|w| w.1 >= 0.0));
    }

    #[test]
    fn shifted_cloud_is_separated() {
        let pts = [[1.0, 2.0, 0.0], [1.0, -2.0, 0.0], [2.0, 0.0, 3.0], [4.0, 1.0, -1.0]];
        let c = hull_contains_origin(&pts, 1e-9, 1e-9);
        assert_eq!(c.verdict, HullVerdict::Separated);
        assert!((c.residual - 1.0).abs() < 1e-12);
        assert!((c.direction[0] - 1.0).abs() < 1e-12);
        assert!((c.gap - 1.0).abs() < 1e-12);
    }

    #[test]
    fn planar_circle() {
        let pts: Vec<Vec3> = (0..16)
            .map(|k| {
                let a = std::f64::consts::PI * k as f64 / 8.0;
                [a.cos(), 0.0, a.sin()]
            })
            .collect();
        let c = hull_contains_origin(&pts, 1e-9, 1e-9);
        assert_eq!(c.verdict, HullVerdict::Contains);
        assert!(c.residual < 1e-12);
    }

    #[test]
    fn near_boundary() {
        let pts = [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]];
        let c = hull_contains_origin(&pts, 1e-9, 1e-9);
        // origin is a vertex: zero residual counts as containment
        assert_eq!(c.verdict, HullVerdict::Contains);
        let pts = [[1e-12, 1.0, 0.0], [1e-12, -1.0, 0.0], [1.0, 0.0, 0.0]];
        assert_eq!(hull_contains_origin(&pts, 1e-9, 1e-9).verdict, HullVerdict::Contains);
        let pts = [[1e-6, 1.0, 0.0], [1e-6, -1.0, 0.0]];
        assert_eq!(hull_contains_origin(&pts, 1e-9, 1e-9).verdict, HullVerdict::Separated);
        assert_eq!(hull_contains_origin(&pts, 1e-9, 1e-3).verdict, HullVerdict::Indeterminate);
    }
}
