//! Gaussian rationals `re + im*i`, the complex subalgebra of the quaternions
//! spanned by 1 and i.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::poly::{Coeff, FieldCoeff, Poly};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

pub type GaussianPolynomial = Poly<Gaussian>;

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Gaussian {
            re,
            im: Rational::zero(),
        }
    }

    pub fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re, self.im)
    }
}

impl<'a> Add<&'a Gaussian> for Gaussian {
    type Output = Gaussian;
    fn add(self, o: &'a Gaussian) -> Gaussian {
        Gaussian::new(self.re + &o.re, self.im + &o.im)
    }
}

impl<'a> Sub<&'a Gaussian> for Gaussian {
    type Output = Gaussian;
    fn sub(self, o: &'a Gaussian) -> Gaussian {
        Gaussian::new(self.re - &o.re, self.im - &o.im)
    }
}

impl<'a> Mul<&'a Gaussian> for Gaussian {
    type Output = Gaussian;
    fn mul(self, o: &'a Gaussian) -> Gaussian {
        Gaussian::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Add for Gaussian {
    type Output = Gaussian;
    fn add(self, o: Gaussian) -> Gaussian {
        self + &o
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, o: Gaussian) -> Gaussian {
        self * &o
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-self.re, -self.im)
    }
}

impl Zero for Gaussian {
    fn zero() -> Self {
        Gaussian::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Gaussian {
    fn one() -> Self {
        Gaussian::real(Rational::one())
    }
}

impl Coeff for Gaussian {
    fn from_int(n: i64) -> Self {
        Gaussian::real(Rational::from_int(n))
    }
}

impl FieldCoeff for Gaussian {
    fn inv(&self) -> Self {
        let n = self.norm_sqr();
        Gaussian::new(&self.re / &n, -(&self.im / &n))
    }
}

impl GaussianPolynomial {
    /// Coefficient-wise conjugate.
    pub fn conj(&self) -> Self {
        self.map(Gaussian::conj)
    }
}
