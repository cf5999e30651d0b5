//! Gram-matrix description of numerators and exact positivity certificates.
//!
//! A numerator of even degree `m` is positive on the real line iff it equals
//! `(1, t, .., t^(m/2)) M (1, t, .., t^(m/2))^T` for a positive definite `M`.
//! The slice of Gram matrices whose numerator lies in the residue kernel is
//! an affine (here linear) family `sum x_k M_k`.

use nalgebra::DMatrix;
use num_traits::{One, Signed, Zero};

use crate::arith::{self, Rational};
use crate::linalg::RatMatrix;
use crate::poly::Polynomial;
use crate::sturm::{sign_variations, sturm_sequence, ExtendedReal};
use crate::synthesis::SolutionSpace;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GramSlice {
    size: usize,
    m: usize,
    basis: Vec<RatMatrix>,
}

/// Upper-triangle index pairs of an `n x n` symmetric matrix, row-major.
fn upper_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

/// Symmetric matrices whose antidiagonal sums give a kernel element.
pub fn build_gram_slice(space: &SolutionSpace) -> GramSlice {
    let m = space.numerator_degree();
    let n = m / 2 + 1;
    if space.dimension() == 0 {
        return GramSlice {
            size: n,
            m,
            basis: Vec::new(),
        };
    }
    let pairs = upper_pairs(n);
    // coefficient map: mu_k = sum_{i+j=k} M_ij
    let coeff_map = RatMatrix::from_fn(m + 1, pairs.len(), |k, p| {
        let (i, j) = pairs[p];
        match (i + j == k, i == j) {
            (true, true) => Rational::one(),
            (true, false) => arith::int(2),
            _ => Rational::zero(),
        }
    });
    let c = space.constraint_matrix();
    let system = if c.rows() == 0 {
        RatMatrix::zeros(0, pairs.len())
    } else {
        c.mul(&coeff_map)
    };
    let basis = system
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut mat = RatMatrix::zeros(n, n);
            for (p, &(i, j)) in pairs.iter().enumerate() {
                mat[(i, j)] = v[p].clone();
                mat[(j, i)] = v[p].clone();
            }
            mat
        })
        .collect();
    GramSlice { size: n, m, basis }
}

impl GramSlice {
    /// Builds a slice from given matrices, e.g. to compare with another basis.
    pub fn from_basis(m: usize, basis: Vec<RatMatrix>) -> Self {
        let size = m / 2 + 1;
        assert!(basis.iter().all(|b| b.rows() == size && b.is_symmetric()));
        GramSlice { size, m, basis }
    }

    /// Side length `m/2 + 1` of the Gram matrices.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn numerator_degree(&self) -> usize {
        self.m
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[RatMatrix] {
        &self.basis
    }

    pub fn matrix(&self, x: &[Rational]) -> RatMatrix {
        assert_eq!(x.len(), self.basis.len());
        self.basis
            .iter()
            .zip(x)
            .fold(RatMatrix::zeros(self.size, self.size), |acc, (b, xi)| acc.add(&b.scale(xi)))
    }

    pub fn matrix_f64(&self, x: &[f64]) -> DMatrix<f64> {
        assert_eq!(x.len(), self.basis.len());
        self.basis
            .iter()
            .zip(x)
            .fold(DMatrix::zeros(self.size, self.size), |acc, (b, xi)| acc + b.to_f64() * *xi)
    }

    pub fn mu(&self, x: &[Rational]) -> Polynomial {
        gram_polynomial(&self.matrix(x))
    }

    /// True when every matrix of `other` lies in the span of `self`.
    pub fn spans(&self, other: &GramSlice) -> bool {
        if self.size != other.size {
            return false;
        }
        let flat = |ms: &[RatMatrix]| {
            ms.iter()
                .map(|b| upper_pairs(self.size).iter().map(|&(i, j)| b[(i, j)].clone()).collect())
                .collect::<Vec<Vec<Rational>>>()
        };
        let mine = flat(&self.basis);
        if mine.is_empty() {
            return other.basis.is_empty();
        }
        let rank = RatMatrix::from_rows(mine.clone()).rank();
        flat(&other.basis).into_iter().all(|row| {
            let mut rows = mine.clone();
            rows.push(row);
            RatMatrix::from_rows(rows).rank() == rank
        })
    }
}

/// `(1, t, ..) M (1, t, ..)^T`
pub fn gram_polynomial(mat: &RatMatrix) -> Polynomial {
    let n = mat.rows();
    let mut c = vec![Rational::zero(); 2 * n - 1];
    for i in 0..n {
        for j in 0..n {
            c[i + j] += &mat[(i, j)];
        }
    }
    Polynomial::new(c)
}

/// `mu = sum d_k p_k^2` from an exact `L D L^T` factorization of a positive
/// definite Gram matrix.
pub fn sos_decomposition(mat: &RatMatrix) -> Option<Vec<(Rational, Polynomial)>> {
    if !mat.is_symmetric() {
        return None;
    }
    let (l, d) = mat.ldlt()?;
    if d.iter().any(|x| !x.is_positive()) {
        return None;
    }
    let n = mat.rows();
    Some(
        d.into_iter()
            .enumerate()
            .map(|(k, dk)| (dk, Polynomial::new((0..n).map(|i| l[(i, k)].clone()).collect())))
            .collect(),
    )
}

/// Exact regularity verdict with its Sturm data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RegularityCertificate {
    pub regular: bool,
    pub real_roots: usize,
    pub leading_positive: bool,
    /// Sign changes of the Sturm sequence at `-inf` and `+inf`.
    pub variations: (usize, usize),
}

/// `mu` has no real root and a positive leading coefficient.
pub fn certify_regular(mu: &Polynomial) -> RegularityCertificate {
    let seq = sturm_sequence(mu);
    let lo = sign_variations(&seq, &ExtendedReal::NegInfinity);
    let hi = sign_variations(&seq, &ExtendedReal::PosInfinity);
    let real_roots = lo.saturating_sub(hi);
    let leading_positive = mu.leading_sign() > 0;
    RegularityCertificate {
        regular: !mu.is_zero() && real_roots == 0 && leading_positive,
        real_roots,
        leading_positive,
        variations: (lo, hi),
    }
}

/// Regularity over the whole projective line for a numerator of nominal
/// degree `m`: in addition to [`certify_regular`], the coefficient of `t^m`
/// must not vanish, otherwise the speed is zero at the closure point.
pub fn certify_regular_of_degree(mu: &Polynomial, m: usize) -> RegularityCertificate {
    let mut cert = certify_regular(mu);
    cert.regular &= mu.degree() == Some(m);
    cert
}

/// Searches primitive integer combinations `sum c_k basis_k` with
/// `|c_k| <= radius` for a regular numerator.
pub fn scan_kernel_rays(space: &SolutionSpace, radius: i64) -> Option<Polynomial> {
    let d = space.dimension();
    if d == 0 {
        return None;
    }
    let mut c = vec![-radius; d];
    loop {
        if c.iter().any(|&x| x != 0) && gcd_all(&c) == 1 {
            let coeffs: Vec<Rational> = c.iter().map(|&x| arith::int(x)).collect();
            let mu = space.combine(&coeffs);
            if certify_regular_of_degree(&mu, space.numerator_degree()).regular {
                return Some(mu);
            }
        }
        let mut k = 0;
        while k < d && c[k] == radius {
            c[k] = -radius;
            k += 1;
        }
        if k == d {
            return None;
        }
        c[k] += 1;
    }
}

fn gcd_all(c: &[i64]) -> i64 {
    c.iter().fold(0i64, |mut a, &b| {
        let mut b = b.abs();
        while b != 0 {
            let r = a % b;
            a = b;
            b = r;
        }
        a
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::synthesis::build_residue_system;
    use crate::synthesis::tests::example_problem;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn certificates() {
        assert!(!certify_regular(&p(&[7036, 0, -89])).regular);
        assert!(certify_regular(&p(&[1, 0, 0, 0, 1])).regular);
        assert!(!certify_regular(&p(&[-1, 0, 0, 0, -1])).regular);
        let mu0 = Polynomial::new(vec![int(1), int(0), int(0), int(0), rat(11, 53264)]);
        let cert = certify_regular(&mu0);
        assert!(cert.regular);
        assert_eq!(cert.variations.0, cert.variations.1);
    }

    #[test]
    fn slice_dimensions() {
        let s4 = build_gram_slice(&build_residue_system(&example_problem(4)));
        assert!(s4.is_empty());
        let s5 = build_gram_slice(&build_residue_system(&example_problem(5)));
        assert_eq!(s5.dimension(), 1);
        let s6 = build_gram_slice(&build_residue_system(&example_problem(6)));
        assert_eq!(s6.dimension(), 3);
        assert_eq!(s6.size(), 3);
        let space = build_residue_system(&example_problem(6));
        for b in s6.basis() {
            assert!(space.contains(&gram_polynomial(b)));
        }
    }

    #[test]
    fn sos_reexpands() {
        let m = RatMatrix::from_rows(vec![
            vec![int(1), int(0), rat(-1, 100)],
            vec![int(0), rat(1, 50), int(0)],
            vec![rat(-1, 100), int(0), rat(11, 53264)],
        ]);
        let sos = sos_decomposition(&m).unwrap();
        let sum = sos
            .iter()
            .fold(Polynomial::zero(), |acc, (d, q)| &acc + &(q * q).scale(d));
        assert_eq!(sum, gram_polynomial(&m));
        assert_eq!(sum, Polynomial::new(vec![int(1), int(0), int(0), int(0), rat(11, 53264)]));
    }

    #[test]
    fn ray_scan_finds_positive_numerator() {
        let space = build_residue_system(&example_problem(6));
        let mu = scan_kernel_rays(&space, 3).unwrap();
        assert!(certify_regular_of_degree(&mu, 4).regular);
        // positive, but vanishing at t = inf as a quartic form
        assert!(certify_regular(&p(&[756, 0, 11])).regular);
        assert!(!certify_regular_of_degree(&p(&[756, 0, 11]), 4).regular);
        assert!(scan_kernel_rays(&build_residue_system(&example_problem(5)), 5).is_none());
    }
}
