//! Numerical integration of rational functions over the real line.
//!
//! Two routes: Gauss-Legendre on `[-T, T]` after `t = sinh u`, plus the
//! two tails from the expansion at infinity; and the trapezoidal rule after
//! mapping the projective line to the circle, which converges geometrically
//! for integrands without real poles.

use std::f64::consts::PI;
use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use num_traits::Zero;

use crate::arith::{self, Rational};
use crate::calculus::{residue_at, QuadraticFactor};
use crate::error::{Error, Result};
use crate::ratfunc::RationalFunction;

/// Coefficients `a_0 .. a_order` of `f(t) = sum a_k t^(-k)` for large `|t|`.
/// Requires `deg f <= 0`.
pub fn expansion_at_infinity(f: &RationalFunction, order: usize) -> Vec<Rational> {
    if f.is_zero() {
        return vec![Rational::zero(); order + 1];
    }
    let dn = f.numerator().degree().unwrap();
    let dd = f.denominator().degree().unwrap();
    assert!(dn <= dd, "expansion at infinity of an unbounded function");
    let shift = dd - dn;
    // f(1/s) = s^shift * nrev(s) / drev(s)
    let nrev = f.numerator().reversed(dn);
    let drev = f.denominator().reversed(dd);
    let d0 = drev.coeff(0);
    let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut v = nrev.coeff(k);
        for j in 1..=k {
            v -= drev.coeff(j) * &q[k - j];
        }
        q.push(v / &d0);
    }
    let mut out = vec![Rational::zero(); order + 1];
    for k in shift..=order {
        out[k] = q[k - shift].clone();
    }
    out
}

const TAIL_ORDER: usize = 10;
const PANEL_WIDTH: f64 = 0.05;
const PANEL_DEGREE: usize = 12;

/// `int_{-T}^{T} f dt` by composite Gauss-Legendre in `u = asinh t`.
pub fn integrate_truncated(f: &RationalFunction, big_t: f64) -> f64 {
    let rule = GaussLegendre::new(NonZeroUsize::new(PANEL_DEGREE).unwrap());
    let num = f.numerator().to_f64_coeffs();
    let den = f.denominator().to_f64_coeffs();
    let horner = |c: &[f64], x: f64| c.iter().rev().fold(0.0, |acc, ci| acc * x + ci);
    let g = |u: f64| {
        let t = u.sinh();
        horner(&num, t) / horner(&den, t) * u.cosh()
    };
    let umax = big_t.asinh();
    let panels = ((2.0 * umax / PANEL_WIDTH).ceil() as usize).max(1);
    let h = 2.0 * umax / panels as f64;
    (0..panels)
        .map(|k| {
            let a = -umax + k as f64 * h;
            rule.integrate(a, a + h, g)
        })
        .sum()
}

/// `int_T^inf f` and `int_{-inf}^{-T} f` from the expansion at infinity.
pub fn tail_integrals(f: &RationalFunction, big_t: f64) -> Result<(f64, f64)> {
    if f.degree().is_some_and(|d| d > -2) {
        return Err(Error::InvalidArgument(
            "tail integral needs degree at most -2".into(),
        ));
    }
    let a = expansion_at_infinity(f, TAIL_ORDER);
    let mut right = 0.0;
    let mut left = 0.0;
    for (k, ak) in a.iter().enumerate().skip(2) {
        let term = arith::to_f64(ak) * big_t.powi(1 - k as i32) / (k as f64 - 1.0);
        right += term;
        left += if k % 2 == 0 { term } else { -term };
    }
    Ok((right, left))
}

/// `int_R f dt`, truncated at `T` and tail-corrected. Needs `deg f <= -2`
/// and `T` beyond all pole moduli.
pub fn integrate_real_line(f: &RationalFunction, big_t: f64) -> Result<f64> {
    let (r, l) = tail_integrals(f, big_t)?;
    Ok(integrate_truncated(f, big_t) + r + l)
}

/// Trapezoidal rule for `int_0^pi g(psi) d psi` of a `pi`-periodic smooth
/// function, doubling the node count until two estimates agree.
pub fn periodic_trapezoid<const N: usize>(g: impl Fn(f64) -> [f64; N]) -> [f64; N] {
    let mut n = 64;
    let rule = |n: usize| {
        let mut acc = [0.0; N];
        for k in 0..n {
            let v = g(PI * k as f64 / n as f64);
            for c in 0..N {
                acc[c] += v[c];
            }
        }
        acc.map(|a| a * PI / n as f64)
    };
    let mut prev = rule(n);
    while n < 1 << 18 {
        n *= 2;
        let next = rule(n);
        let scale = next.iter().map(|v| v.abs()).fold(1.0, f64::max);
        let close = next.iter().zip(&prev).all(|(a, b)| (a - b).abs() <= 1e-15 * scale);
        prev = next;
        if close {
            break;
        }
    }
    prev
}

/// `int_R f dt` via `t = -cot(psi)`, `dt = (1 + t^2) d psi`. Needs `deg f <= -2`.
pub fn integrate_circle(f: &RationalFunction) -> Result<f64> {
    if f.degree().is_some_and(|d| d > -2) {
        return Err(Error::InvalidArgument(
            "circle integral needs degree at most -2".into(),
        ));
    }
    if f.is_zero() {
        return Ok(0.0);
    }
    let dd = f.denominator().degree().unwrap();
    let num = f.numerator();
    let den = f.denominator();
    let [v] = periodic_trapezoid(|psi| {
        let (u, v) = (-psi.cos(), psi.sin());
        [(u * u + v * v) * num.eval_homogeneous_f64(dd - 2, u, v) / den.eval_homogeneous_f64(dd, u, v)]
    });
    Ok(v)
}

/// Exact value `2 pi i Res_z f` of `int_R f` for `f` whose only poles are
/// the roots of `q`, with `deg f <= -2`.
pub fn residue_integral(f: &RationalFunction, q: &QuadraticFactor) -> Result<f64> {
    let r = residue_at(f, q)?;
    let (re, im) = q.to_complex(&r);
    debug_assert!(re.abs() <= 1e-9 * (1.0 + im.abs()));
    Ok(-2.0 * PI * im)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_ints(n), Polynomial::from_ints(d))
    }

    #[test]
    fn expansion() {
        // 1/(t^2+1) = t^-2 - t^-4 + ...
        let a = expansion_at_infinity(&rf(&[1], &[1, 0, 1]), 5);
        let ints: Vec<i64> = a.iter().map(|x| x.to_integer().try_into().unwrap()).collect();
        assert_eq!(ints, vec![0, 0, 1, 0, -1, 0]);
    }

    #[test]
    fn lorentzian() {
        let f = rf(&[1], &[1, 0, 1]);
        assert!((integrate_real_line(&f, 1e4).unwrap() - PI).abs() < 1e-10);
        assert!((integrate_circle(&f).unwrap() - PI).abs() < 1e-12);
        let q = QuadraticFactor::new(arith::int(0), arith::int(1), 1).unwrap();
        assert!((residue_integral(&f, &q).unwrap() - PI).abs() < 1e-15);
    }

    #[test]
    fn exact_derivative_integrates_to_zero() {
        let f = rf(&[0, 2], &[1, 0, 2, 0, 1]);
        assert!(integrate_real_line(&f, 1e4).unwrap().abs() < 1e-10);
        assert!(integrate_circle(&f).unwrap().abs() < 1e-14);
        assert!(integrate_circle(&rf(&[1], &[1, 1])).is_err());
    }
}
