//! Exact quaternions and quaternion polynomials.
//!
//! A quaternion polynomial `A(t)` drives the rotational part of a framing
//! motion; the hodograph direction is `A(t) i A*(t)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::{self, Rational};
use crate::error::{Error, Result};
use crate::gaussian::{Gaussian, GaussianPolynomial};
use crate::poly::{Coeff, Poly, Polynomial};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Quaternion {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

pub type QuaternionPolynomial = Poly<Quaternion>;

impl Quaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion::new(arith::int(w), arith::int(x), arith::int(y), arith::int(z))
    }

    pub fn real(w: Rational) -> Self {
        Quaternion::new(w, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    pub fn vector(x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion::new(Rational::zero(), x, y, z)
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(
            self.w.clone(),
            -self.x.clone(),
            -self.y.clone(),
            -self.z.clone(),
        )
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    pub fn is_pure(&self) -> bool {
        self.w.is_zero()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Quaternion::new(&self.w * s, &self.x * s, &self.y * s, &self.z * s)
    }

    /// `(p, q)` with `self = p + q j`, `p, q` in span{1, i}.
    pub fn split(&self) -> (Gaussian, Gaussian) {
        (
            Gaussian::new(self.w.clone(), self.x.clone()),
            Gaussian::new(self.y.clone(), self.z.clone()),
        )
    }

    /// Inverse of [`Quaternion::split`].
    pub fn from_split(p: &Gaussian, q: &Gaussian) -> Self {
        // q j = (y + z i) j = y j + z k
        Quaternion::new(p.re.clone(), p.im.clone(), q.re.clone(), q.im.clone())
    }

    pub fn to_f64(&self) -> [f64; 4] {
        [
            arith::to_f64(&self.w),
            arith::to_f64(&self.x),
            arith::to_f64(&self.y),
            arith::to_f64(&self.z),
        ]
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i + {}j + {}k)", self.w, self.x, self.y, self.z)
    }
}

impl<'a> Add<&'a Quaternion> for Quaternion {
    type Output = Quaternion;
    fn add(self, o: &'a Quaternion) -> Quaternion {
        Quaternion::new(self.w + &o.w, self.x + &o.x, self.y + &o.y, self.z + &o.z)
    }
}

impl<'a> Sub<&'a Quaternion> for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: &'a Quaternion) -> Quaternion {
        Quaternion::new(self.w - &o.w, self.x - &o.x, self.y - &o.y, self.z - &o.z)
    }
}

impl<'a> Mul<&'a Quaternion> for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &'a Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&o.w, &o.x, &o.y, &o.z);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        self + &o
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Quaternion) -> Quaternion {
        self * &o
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Zero for Quaternion {
    fn zero() -> Self {
        Quaternion::default()
    }
    fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

impl One for Quaternion {
    fn one() -> Self {
        Quaternion::real(Rational::one())
    }
}

impl Coeff for Quaternion {
    fn from_int(n: i64) -> Self {
        Quaternion::real(arith::int(n))
    }
}

/// Decomposition `A = p + q j` of a quaternion polynomial with `p`, `q` over
/// the Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComplexPair {
    pub p: GaussianPolynomial,
    pub q: GaussianPolynomial,
}

impl ComplexPair {
    pub fn reassemble(&self) -> QuaternionPolynomial {
        let n = self.p.coeffs().len().max(self.q.coeffs().len());
        Poly::new(
            (0..n)
                .map(|i| Quaternion::from_split(&self.p.coeff(i), &self.q.coeff(i)))
                .collect(),
        )
    }
}

/// Vector-valued polynomial `(x(t), y(t), z(t))` with rational coefficients.
pub type VectorPolynomial = [Polynomial; 3];

impl QuaternionPolynomial {
    pub fn from_quaternions(coeffs: Vec<Quaternion>) -> Self {
        Poly::new(coeffs)
    }

    pub fn conj(&self) -> Self {
        self.map(Quaternion::conj)
    }

    /// Real polynomial `A A*`.
    pub fn norm_poly(&self) -> Polynomial {
        let n = self * &self.conj();
        debug_assert!(n.coeffs().iter().all(|c| c.x.is_zero() && c.y.is_zero() && c.z.is_zero()));
        n.component(0)
    }

    /// Real polynomial formed by one of the four coordinates (0 = scalar).
    pub fn component(&self, idx: usize) -> Polynomial {
        Poly::new(
            self.coeffs()
                .iter()
                .map(|c| match idx {
                    0 => c.w.clone(),
                    1 => c.x.clone(),
                    2 => c.y.clone(),
                    3 => c.z.clone(),
                    _ => panic!("quaternion component index {idx} out of range"),
                })
                .collect(),
        )
    }

    pub fn from_components(c: [&Polynomial; 4]) -> Self {
        let n = c.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
        Poly::new(
            (0..n)
                .map(|i| Quaternion::new(c[0].coeff(i), c[1].coeff(i), c[2].coeff(i), c[3].coeff(i)))
                .collect(),
        )
    }

    pub fn split(&self) -> ComplexPair {
        ComplexPair {
            p: self.map(|c| c.split().0),
            q: self.map(|c| c.split().1),
        }
    }

    pub fn from_gaussian(p: &GaussianPolynomial) -> Self {
        p.map(|c| Quaternion::from_split(c, &Gaussian::zero()))
    }

    /// Evaluation at a real parameter.
    pub fn eval_rational(&self, t: &Rational) -> Quaternion {
        self.eval(&Quaternion::real(t.clone()))
    }

    pub fn eval_f64(&self, t: f64) -> [f64; 4] {
        let mut acc = [0.0; 4];
        for c in self.coeffs().iter().rev() {
            let c = c.to_f64();
            for (a, ci) in acc.iter_mut().zip(c) {
                *a = *a * t + ci;
            }
        }
        acc
    }
}

/// `A(t) v A*(t)` for a pure quaternion `v`, returned as its three vector
/// components (the scalar part vanishes identically).
pub fn rotate_vector(a: &QuaternionPolynomial, v: &Quaternion) -> Result<VectorPolynomial> {
    if !v.is_pure() {
        return Err(Error::NotPure);
    }
    let prod = &(a * &Poly::constant(v.clone())) * &a.conj();
    debug_assert!(prod.component(0).is_zero());
    Ok([prod.component(1), prod.component(2), prod.component(3)])
}

/// Result of [`i_reduce`]: `a = reduced * right_factor`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IReduction {
    pub reduced: QuaternionPolynomial,
    /// Monic right factor in span{1, i}[t].
    pub right_factor: GaussianPolynomial,
}

impl IReduction {
    pub fn was_reduced(&self) -> bool {
        self.right_factor.is_constant()
    }
}

/// Splits off the maximal right factor of `a` with coefficients in span{1, i}.
///
/// Writing `a = p + q j`, a right factor `R` must divide `p` and `conj(q)`,
/// so the maximal one is `gcd(p, conj(q))`.
pub fn i_reduce(a: &QuaternionPolynomial) -> Result<IReduction> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ComplexPair { p, q } = a.split();
    let r = Poly::gcd(&p, &q.conj());
    let p_red = p.exact_div(&r).expect("gcd divides p");
    let q_red = q.conj().exact_div(&r).expect("gcd divides conj(q)").conj();
    let reduced = ComplexPair { p: p_red, q: q_red }.reassemble();
    Ok(IReduction {
        reduced,
        right_factor: r,
    })
}

pub fn is_i_reduced(a: &QuaternionPolynomial) -> bool {
    i_reduce(a).map(|r| r.was_reduced()).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn q(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
        Quaternion::from_ints(w, x, y, z)
    }

    /// t^3 + (2j + k) t^2 - (1 + 2i) t - k
    pub(crate) fn example_a() -> QuaternionPolynomial {
        Poly::new(vec![q(0, 0, 0, -1), q(-1, -2, 0, 0), q(0, 0, 2, 1), q(1, 0, 0, 0)])
    }

    #[test]
    fn unit_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        let m1 = -Quaternion::one();
        assert_eq!(i.clone() * &i, m1);
        assert_eq!(j.clone() * &j, m1);
        assert_eq!(k.clone() * &k, m1);
        assert_eq!(i.clone() * &j * &k, m1);
        assert_eq!(i.clone() * &j, k);
        assert_eq!(j.clone() * &i, -k);
    }

    #[test]
    fn complex_subalgebra_product() {
        let a = Poly::new(vec![Quaternion::i(), Quaternion::one()]);
        let b = Poly::new(vec![-Quaternion::i(), Quaternion::one()]);
        assert_eq!(&a * &b, Poly::new(vec![q(1, 0, 0, 0), q(0, 0, 0, 0), q(1, 0, 0, 0)]));
    }

    #[test]
    fn noncommutative_product() {
        let tj = Poly::new(vec![Quaternion::j(), Quaternion::one()]);
        let ti = Poly::new(vec![Quaternion::i(), Quaternion::one()]);
        let ji = &tj * &ti;
        assert_eq!(ji, Poly::new(vec![q(0, 0, 0, -1), q(0, 1, 1, 0), q(1, 0, 0, 0)]));
        assert_ne!(ji, &ti * &tj);
    }

    #[test]
    fn norm_polynomial_is_real() {
        let a = example_a();
        let n = &a * &a.conj();
        for c in n.coeffs() {
            assert!(c.x.is_zero() && c.y.is_zero() && c.z.is_zero());
        }
        // (t^2 + 1)^3
        assert_eq!(a.norm_poly(), Polynomial::from_ints(&[1, 0, 3, 0, 3, 0, 1]));
    }

    #[test]
    fn rotation_of_i_matches_tangent_numerator() {
        let w = rotate_vector(&example_a(), &Quaternion::i()).unwrap();
        assert_eq!(w[0], Polynomial::from_ints(&[-1, 0, 7, 0, -7, 0, 1]));
        assert_eq!(w[1], Polynomial::from_ints(&[0, 2, 0, -12, 0, 2]));
        assert_eq!(w[2], Polynomial::from_ints(&[0, 4, 0, 0, 0, -4]));
    }

    #[test]
    fn rotate_identity_and_reject_non_pure() {
        let one = QuaternionPolynomial::one();
        let w = rotate_vector(&one, &Quaternion::i()).unwrap();
        assert_eq!(w, [Polynomial::one(), Polynomial::zero(), Polynomial::zero()]);
        assert!(matches!(rotate_vector(&one, &q(1, 1, 0, 0)), Err(Error::NotPure)));
    }

    #[test]
    fn i_reduction_examples() {
        let a = example_a();
        let r = i_reduce(&a).unwrap();
        assert!(r.was_reduced());
        assert_eq!(r.reduced, a);

        let tj = Poly::new(vec![Quaternion::j(), Quaternion::one()]);
        let ti = Poly::new(vec![Quaternion::i(), Quaternion::one()]);
        let r = i_reduce(&(&tj * &ti)).unwrap();
        assert_eq!(r.reduced, tj);
        assert_eq!(QuaternionPolynomial::from_gaussian(&r.right_factor), ti);

        // Constant left factor: everything but a constant is split off.
        let c = Poly::constant(q(1, 2, -1, 3));
        let r = i_reduce(&(&c * &ti)).unwrap();
        assert!(r.reduced.is_constant());
        assert_eq!(QuaternionPolynomial::from_gaussian(&r.right_factor), ti);
        assert_eq!(
            &r.reduced * &QuaternionPolynomial::from_gaussian(&r.right_factor),
            &c * &ti
        );
    }

    #[test]
    fn split_reassembles() {
        let a = example_a();
        assert_eq!(a.split().reassemble(), a);
        assert_eq!(a.eval_rational(&int(1)), q(0, -2, 2, 0));
    }
}
