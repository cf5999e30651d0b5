//! Dense log-det barrier search for a well-conditioned positive definite
//! point of a Gram slice.
//!
//! Phase one maximizes `s` subject to `M(x) - s I > 0` and `tr M(x) = 1`,
//! which finds the point of the slice with the largest smallest eigenvalue.
//! With a seed, phase two then moves towards a random linear cost while
//! keeping `M(x) - margin I > 0`, which gives different interior points for
//! different seeds. The float result is rationalized and re-checked exactly.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{self, Rational};
use crate::linalg::RatMatrix;
use crate::poly::Polynomial;
use crate::positivity::{certify_regular_of_degree, gram_polynomial, GramSlice, RegularityCertificate};

pub const DEFAULT_MARGIN: f64 = 1e-4;
pub const DEFAULT_MAX_DENOMINATOR: u64 = 1_000_000;

#[derive(Clone, Debug)]
pub struct SdpOptions {
    /// Required smallest eigenvalue at unit trace.
    pub margin: f64,
    /// Randomizes the interior point when set.
    pub seed: Option<u64>,
    /// Denominator bound for rationalizing the float witness.
    pub max_denominator: u64,
}

impl Default for SdpOptions {
    fn default() -> Self {
        SdpOptions {
            margin: DEFAULT_MARGIN,
            seed: None,
            max_denominator: DEFAULT_MAX_DENOMINATOR,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FeasibilityStatus {
    /// Exact certificate obtained.
    Feasible,
    /// Empty slice, or no matrix of the slice has positive trace.
    InfeasibleNumerically,
    /// No point with the required margin was found. Not a proof.
    Indeterminate,
}

#[derive(Clone, Debug)]
pub struct FeasibilityResult {
    pub status: FeasibilityStatus,
    /// Float coordinates in the slice basis, unit trace.
    pub witness_x: Vec<f64>,
    /// Rationalized coordinates.
    pub witness_rational: Vec<Rational>,
    pub witness_gram: Option<RatMatrix>,
    pub witness_mu: Option<Polynomial>,
    /// Smallest eigenvalue of the float witness.
    pub min_eigenvalue: f64,
    pub certificate: Option<RegularityCertificate>,
}

impl FeasibilityResult {
    fn empty(status: FeasibilityStatus) -> Self {
        FeasibilityResult {
            status,
            witness_x: Vec::new(),
            witness_rational: Vec::new(),
            witness_gram: None,
            witness_mu: None,
            min_eigenvalue: f64::NEG_INFINITY,
            certificate: None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.status == FeasibilityStatus::Feasible
    }
}

pub fn min_eigenvalue(m: &DMatrix<f64>) -> f64 {
    m.clone().symmetric_eigenvalues().min()
}

pub fn sdp_feasible_point(g: &GramSlice, margin: f64) -> FeasibilityResult {
    sdp_feasible_point_with(
        g,
        &SdpOptions {
            margin,
            ..SdpOptions::default()
        },
    )
}

pub fn sdp_feasible_point_with(g: &GramSlice, opts: &SdpOptions) -> FeasibilityResult {
    assert!(opts.margin > 0.0, "margin must be positive");
    let Some(problem) = BarrierProblem::new(g) else {
        return FeasibilityResult::empty(FeasibilityStatus::InfeasibleNumerically);
    };
    let (mut y, s) = problem.maximize_min_eigenvalue();
    if s >= opts.margin {
        if let Some(seed) = opts.seed {
            y = problem.randomize(&y, opts.margin, seed);
        }
    }
    let x = problem.x_of(&y);
    let min_eig = min_eigenvalue(&problem.matrix(&x));

    let witness_rational: Vec<Rational> = x
        .iter()
        .map(|&v| arith::rationalize(v, opts.max_denominator))
        .collect();
    let gram = g.matrix(&witness_rational);
    let mu = gram_polynomial(&gram);
    let cert = certify_regular_of_degree(&mu, g.numerator_degree());
    let status = if min_eig >= opts.margin && gram.is_positive_definite() && cert.regular {
        FeasibilityStatus::Feasible
    } else {
        FeasibilityStatus::Indeterminate
    };
    FeasibilityResult {
        status,
        witness_x: x.iter().copied().collect(),
        witness_rational,
        witness_gram: Some(gram),
        witness_mu: Some(mu),
        min_eigenvalue: min_eig,
        certificate: Some(cert),
    }
}

/// Slice restricted to unit trace: `x = x0 + N y`.
struct BarrierProblem {
    basis: Vec<DMatrix<f64>>,
    x0: DVector<f64>,
    null: DMatrix<f64>,
    /// `M(N e_j)`
    directions: Vec<DMatrix<f64>>,
    m0: DMatrix<f64>,
    n: usize,
}

const MAX_NEWTON: usize = 100;

impl BarrierProblem {
    fn new(g: &GramSlice) -> Option<Self> {
        let d = g.dimension();
        if d == 0 {
            return None;
        }
        let basis: Vec<DMatrix<f64>> = g.basis().iter().map(RatMatrix::to_f64).collect();
        let a = DVector::from_iterator(d, basis.iter().map(|b| b.trace()));
        let norm2 = a.norm_squared();
        let scale = basis.iter().map(|b| b.amax()).fold(0.0, f64::max);
        if norm2.sqrt() <= 1e-12 * scale {
            return None;
        }
        let x0 = &a / norm2;
        // Orthonormal complement of `a`.
        let mut aug = DMatrix::identity(d, d + 1);
        aug.set_column(0, &a);
        for i in 0..d {
            aug[(i, i + 1)] = 1.0;
        }
        let q = aug.qr().q();
        let null = q.columns(1, d - 1).into_owned();
        let n = g.size();
        let combine = |v: &DVector<f64>| {
            basis
                .iter()
                .zip(v.iter())
                .fold(DMatrix::zeros(n, n), |acc, (b, vi)| acc + b * *vi)
        };
        let directions = (0..d - 1).map(|j| combine(&null.column(j).into_owned())).collect();
        let m0 = combine(&x0);
        Some(BarrierProblem {
            basis,
            x0,
            null,
            directions,
            m0,
            n,
        })
    }

    fn x_of(&self, y: &DVector<f64>) -> DVector<f64> {
        &self.x0 + &self.null * y
    }

    fn matrix(&self, x: &DVector<f64>) -> DMatrix<f64> {
        self.basis
            .iter()
            .zip(x.iter())
            .fold(DMatrix::zeros(self.n, self.n), |acc, (b, xi)| acc + b * *xi)
    }

    fn matrix_y(&self, y: &DVector<f64>) -> DMatrix<f64> {
        self.directions
            .iter()
            .zip(y.iter())
            .fold(self.m0.clone(), |acc, (b, yi)| acc + b * *yi)
    }

    /// Returns `(y, s)` with `s` close to the largest achievable smallest
    /// eigenvalue.
    fn maximize_min_eigenvalue(&self) -> (DVector<f64>, f64) {
        let k = self.directions.len();
        // z = (y, s); F(z) = M(y) - s I
        let mut z = DVector::zeros(k + 1);
        z[k] = min_eigenvalue(&self.m0) - 1.0;
        let mut dirs: Vec<DMatrix<f64>> = self.directions.clone();
        dirs.push(-DMatrix::identity(self.n, self.n));
        let f = |z: &DVector<f64>| {
            let y = z.rows(0, k).into_owned();
            let mut m = self.matrix_y(&y);
            for i in 0..self.n {
                m[(i, i)] -= z[k];
            }
            m
        };
        let mut cost = DVector::zeros(k + 1);
        cost[k] = -1.0;
        let mut tau = 1.0;
        while tau < 1e12 {
            z = newton_barrier(&z, &cost, tau, &dirs, &f);
            tau *= 10.0;
        }
        let y = z.rows(0, k).into_owned();
        let s = min_eigenvalue(&self.matrix_y(&y));
        (y, s)
    }

    /// Moves from `y` towards a random cost inside `M(y) - margin I > 0`.
    fn randomize(&self, y: &DVector<f64>, margin: f64, seed: u64) -> DVector<f64> {
        let k = self.directions.len();
        if k == 0 {
            return y.clone();
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cost: DVector<f64> = DVector::from_fn(k, |_, _| rng.gen_range(-1.0..1.0));
        cost /= cost.norm().max(1e-300);
        let f = |y: &DVector<f64>| {
            let mut m = self.matrix_y(y);
            for i in 0..self.n {
                m[(i, i)] -= margin;
            }
            m
        };
        let mut out = y.clone();
        // A few barrier stages only: the point should stay well inside.
        for tau in [1.0, 10.0, 100.0] {
            out = newton_barrier(&out, &cost, tau, &self.directions, &f);
        }
        out
    }
}

/// Minimizes `tau <cost, z> - log det F(z)` by damped Newton steps from a
/// strictly feasible `z`; `F` is affine with partial derivatives `dirs`.
fn newton_barrier(
    z0: &DVector<f64>,
    cost: &DVector<f64>,
    tau: f64,
    dirs: &[DMatrix<f64>],
    f: &impl Fn(&DVector<f64>) -> DMatrix<f64>,
) -> DVector<f64> {
    let k = z0.len();
    let phi = |z: &DVector<f64>| -> Option<f64> {
        let chol = f(z).cholesky()?;
        let logdet: f64 = chol.l().diagonal().iter().map(|d| 2.0 * d.ln()).sum();
        Some(tau * cost.dot(z) - logdet)
    };
    let mut z = z0.clone();
    let Some(mut val) = phi(&z) else {
        return z;
    };
    for _ in 0..MAX_NEWTON {
        let Some(chol) = f(&z).cholesky() else {
            break;
        };
        let finv = chol.inverse();
        let g_dirs: Vec<DMatrix<f64>> = dirs.iter().map(|d| &finv * d).collect();
        let grad = DVector::from_fn(k, |a, _| tau * cost[a] - g_dirs[a].trace());
        let hess = DMatrix::from_fn(k, k, |a, b| (&g_dirs[a] * &g_dirs[b]).trace());
        let Some(step) = hess.clone().cholesky().map(|c| -c.solve(&grad)).or_else(|| {
            hess.lu().solve(&grad).map(|s| -s)
        }) else {
            break;
        };
        let decrement = -grad.dot(&step);
        if !(decrement > 1e-14) {
            break;
        }
        let mut t = 1.0;
        let mut accepted = false;
        while t > 1e-12 {
            let cand = &z + &step * t;
            if let Some(v) = phi(&cand) {
                if v <= val - 0.25 * t * decrement {
                    z = cand;
                    val = v;
                    accepted = true;
                    break;
                }
            }
            t *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::positivity::{build_gram_slice, certify_regular};
    use crate::synthesis::build_residue_system;
    use crate::synthesis::tests::example_problem;

    fn slice(n: u32) -> GramSlice {
        build_gram_slice(&build_residue_system(&example_problem(n)))
    }

    #[test]
    fn finds_the_best_conditioned_point() {
        let g = slice(6);
        let r = sdp_feasible_point(&g, 1e-4);
        assert_eq!(r.status, FeasibilityStatus::Feasible);
        // known optimum of max lambda_min at unit trace
        assert!((r.min_eigenvalue - 4.0178e-4).abs() < 1e-7, "{}", r.min_eigenvalue);
        assert!(certify_regular(r.witness_mu.as_ref().unwrap()).regular);
    }

    #[test]
    fn margin_above_optimum_is_indeterminate() {
        let r = sdp_feasible_point(&slice(6), 1e-3);
        assert_eq!(r.status, FeasibilityStatus::Indeterminate);
        assert!(r.min_eigenvalue > 0.0);
    }

    #[test]
    fn cusped_kernel_is_not_feasible() {
        let r = sdp_feasible_point(&slice(5), 1e-4);
        assert_eq!(r.status, FeasibilityStatus::Indeterminate);
        assert!(r.min_eigenvalue <= 0.0);
        let r = sdp_feasible_point(&slice(4), 1e-4);
        assert_eq!(r.status, FeasibilityStatus::InfeasibleNumerically);
    }

    #[test]
    fn seeds_give_distinct_certified_points() {
        let g = slice(6);
        let opts = |seed| SdpOptions {
            seed: Some(seed),
            ..SdpOptions::default()
        };
        let a = sdp_feasible_point_with(&g, &opts(1));
        let b = sdp_feasible_point_with(&g, &opts(2));
        let a2 = sdp_feasible_point_with(&g, &opts(1));
        assert!(a.is_feasible() && b.is_feasible());
        assert_ne!(a.witness_mu, b.witness_mu);
        assert_eq!(a.witness_mu, a2.witness_mu);
    }
}
