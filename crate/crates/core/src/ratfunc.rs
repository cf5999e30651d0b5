//! Rational functions over the rationals, kept in reduced form with a monic
//! denominator.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::{self, Rational};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Reduces `num / den`. Panics if `den` is zero.
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = Polynomial::gcd(&num, &den);
        let mut num = num.exact_div(&g).unwrap();
        let mut den = den.exact_div(&g).unwrap();
        let lc = den.leading().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction { num, den }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// `deg num - deg den`; `None` for the zero function.
    pub fn degree(&self) -> Option<i64> {
        (!self.num.is_zero()).then(|| self.num.degree_i64() - self.den.degree_i64())
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(n, &self.den * &self.den)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.num.scale(c), self.den.clone())
    }

    pub fn recip(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Exact value, `None` at a pole.
    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        let d = self.den.eval(t);
        (!d.is_zero()).then(|| self.num.eval(t) / d)
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.num.eval_f64(t) / self.den.eval_f64(t)
    }

    /// Limit for `t -> +-inf` of a function of degree at most zero.
    pub fn limit_at_infinity(&self) -> Option<Rational> {
        match self.degree() {
            None => Some(Rational::zero()),
            Some(d) if d < 0 => Some(Rational::zero()),
            Some(0) => Some(self.num.leading().unwrap() / self.den.leading().unwrap()),
            Some(_) => None,
        }
    }

    /// Exact square root of a rational function, if it exists. The sign is
    /// chosen so the root is positive at the first of `t = 0, 1, 2, ...` where
    /// it does not vanish.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // num/den is a square iff num*den is a square polynomial.
        let s = (&self.num * &self.den).sqrt_exact()?;
        let root = Self::new(s, self.den.clone());
        let mut k = 0i64;
        loop {
            if let Some(v) = root.eval(&arith::int(k)) {
                if !v.is_zero() {
                    return Some(if v < Rational::zero() { -root } else { root });
                }
            }
            k += 1;
        }
    }

    /// `self(psi(s))` with `psi(s) = (a s + b) / (c s + d)`.
    pub fn reparameterize(
        &self,
        a: &Rational,
        b: &Rational,
        c: &Rational,
        d: &Rational,
    ) -> Result<Self> {
        let det = a * d - b * c;
        if det.is_zero() {
            return Err(Error::SingularTransformation);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        let n = self.num.homogeneous_substitute(a, b, c, d, dn);
        let m = self.den.homogeneous_substitute(a, b, c, d, dd);
        let lin = Polynomial::new(vec![d.clone(), c.clone()]);
        // (cs + d)^(dd - dn) correction
        Ok(if dd >= dn {
            Self::new(&n * &lin.pow((dd - dn) as u32), m)
        } else {
            Self::new(n, &m * &lin.pow((dn - dd) as u32))
        })
    }

    /// Derivative `psi'(s) = (ad - bc) / (cs + d)^2` of the Moebius map.
    pub fn moebius_jacobian(
        a: &Rational,
        b: &Rational,
        c: &Rational,
        d: &Rational,
    ) -> Result<Self> {
        let det = a * d - b * c;
        if det.is_zero() {
            return Err(Error::SingularTransformation);
        }
        let lin = Polynomial::new(vec![d.clone(), c.clone()]);
        Ok(Self::new(Polynomial::constant(det), lin.pow(2)))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<'a> Add<&'a RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &'a RationalFunction) -> RationalFunction {
        if self.den == o.den {
            return RationalFunction::new(&self.num + &o.num, self.den.clone());
        }
        RationalFunction::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl<'a> Sub<&'a RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &'a RationalFunction) -> RationalFunction {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &'a RationalFunction) -> RationalFunction {
        if self.is_zero() || o.is_zero() {
            return RationalFunction::zero();
        }
        // both factors are reduced, so cross-cancelling leaves a reduced product
        let g1 = Polynomial::gcd(&self.num, &o.den);
        let g2 = Polynomial::gcd(&o.num, &self.den);
        let num = &self.num.exact_div(&g1).unwrap() * &o.num.exact_div(&g2).unwrap();
        let den = &self.den.exact_div(&g2).unwrap() * &o.den.exact_div(&g1).unwrap();
        let inv = den.leading().unwrap().recip();
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }
}

impl<'a> Div<&'a RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, o: &'a RationalFunction) -> RationalFunction {
        assert!(!o.is_zero(), "division by the zero rational function");
        RationalFunction::new(&self.num * &o.den, &self.den * &o.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &'a RationalFunction) -> RationalFunction {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn reduces_common_factors() {
        let f = RationalFunction::new(p(&[-2, 0, 2]), p(&[2, 2]));
        assert_eq!(f.numerator(), &p(&[-1, 1]));
        assert_eq!(f.denominator(), &p(&[1]));
        assert_eq!(f.degree(), Some(1));
    }

    #[test]
    fn inversion_reparameterization() {
        let t = RationalFunction::from_poly(p(&[0, 1]));
        let s = t.reparameterize(&int(0), &int(1), &int(1), &int(0)).unwrap();
        assert_eq!(s, RationalFunction::new(p(&[1]), p(&[0, 1])));
        assert!(matches!(
            t.reparameterize(&int(1), &int(2), &int(2), &int(4)),
            Err(Error::SingularTransformation)
        ));
    }

    #[test]
    fn circle_chart_change() {
        // x(t) = (1 - t^2)/(1 + t^2), y(t) = 2t/(1 + t^2); t = 1/s.
        let x = RationalFunction::new(p(&[1, 0, -1]), p(&[1, 0, 1]));
        let y = RationalFunction::new(p(&[0, 2]), p(&[1, 0, 1]));
        let (a, b, c, d) = (int(0), int(1), int(1), int(0));
        let x2 = x.reparameterize(&a, &b, &c, &d).unwrap();
        let y2 = y.reparameterize(&a, &b, &c, &d).unwrap();
        assert_eq!(x2, RationalFunction::new(p(&[-1, 0, 1]), p(&[1, 0, 1])));
        assert_eq!(y2, y);
        assert_eq!(x2.eval(&int(0)), Some(int(-1)));
        assert_eq!(y2.eval(&int(0)), Some(int(0)));
    }

    #[test]
    fn speed_stays_rational_under_moebius_maps() {
        // sigma(t) = 2/(1+t^2), psi(s) = (2s + 1)/(s + 3)
        let sigma = RationalFunction::new(p(&[2]), p(&[1, 0, 1]));
        let (a, b, c, d) = (int(2), int(1), int(1), int(3));
        let composed = sigma.reparameterize(&a, &b, &c, &d).unwrap();
        let jac = RationalFunction::moebius_jacobian(&a, &b, &c, &d).unwrap();
        let speed = &composed * &jac;
        // Spot check against direct evaluation at s = 1/2.
        let s = rat(1, 2);
        let psi = (&a * &s + &b) / (&c * &s + &d);
        let expected = sigma.eval(&psi).unwrap() * (&a * &d - &b * &c)
            / ((&c * &s + &d) * (&c * &s + &d));
        assert_eq!(speed.eval(&s), Some(expected));
    }

    #[test]
    fn exact_square_roots_choose_positive_sign() {
        let f = RationalFunction::new(p(&[1, 0, 1]), p(&[4, 0, 4, 0, 1]));
        let r = RationalFunction::new(p(&[0, 1]), p(&[2, 0, 1]));
        let sq = &r * &r;
        let root = sq.sqrt_exact().unwrap();
        assert_eq!(&root * &root, sq);
        assert!(root.eval(&int(1)).unwrap() > int(0));
        assert!(f.sqrt_exact().is_none());
    }
}
