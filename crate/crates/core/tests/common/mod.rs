#![allow(dead_code)]

use phforge_core::arith::{int, rat};
use phforge_core::{
    PoleStructure, Polynomial, QuadraticFactor, Quaternion, QuaternionPolynomial, Rational,
    RationalCurve, SynthesisProblem,
};

pub fn poly(c: &[i64]) -> Polynomial {
    Polynomial::from_ints(c)
}

/// Ascending coefficients from a descending list.
pub fn poly_desc(c: &[i64]) -> Polynomial {
    let mut v = c.to_vec();
    v.reverse();
    Polynomial::from_ints(&v)
}

pub fn quat(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
    Quaternion::from_ints(w, x, y, z)
}

/// t^3 + (2j + k) t^2 - (1 + 2i) t - k
pub fn cubic() -> QuaternionPolynomial {
    QuaternionPolynomial::new(vec![quat(0, 0, 0, -1), quat(-1, -2, 0, 0), quat(0, 0, 2, 1), quat(1, 0, 0, 0)])
}

pub fn problem(a: QuaternionPolynomial, b: i64, c: i64, n: u32) -> SynthesisProblem {
    let f = QuadraticFactor::new(int(b), int(c), n).unwrap();
    SynthesisProblem::new(a, PoleStructure::single(f)).unwrap()
}

/// 1 + (11/53264) t^4
pub fn mu0() -> Polynomial {
    Polynomial::new(vec![int(1), int(0), int(0), int(0), rat(11, 53264)])
}

/// t^2 - (189/13316) t^4
pub fn mu2() -> Polynomial {
    Polynomial::new(vec![int(0), int(0), int(1), int(0), rat(-189, 13316)])
}

/// Reference curve of the speed example, at v = 1.
pub fn speed_example_curve() -> RationalCurve {
    let den = poly(&[1, 0, 1]).pow(5).scale(&int(15));
    RationalCurve::new(
        [
            poly_desc(&[14, 0, 130, 0, 110, 0, 30, 0, -60, 0, 0]),
            poly_desc(&[60, 0, 60, 0, 96, 0, 60, 0, 60, 0]),
            poly_desc(&[-120, 0, -300, 0, -300, 0, -120, 0, 0]),
        ],
        den,
    )
}

/// `r - r(0)`
pub fn anchored(c: &RationalCurve) -> RationalCurve {
    let r0 = c.eval(&Rational::from_integer(0.into())).unwrap();
    c.translate(&r0.map(|x| -x))
}
