//! Sturm sequences for exact real-root counting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;
use crate::poly::Polynomial;

/// Point of the extended real line.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExtendedReal {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

impl From<Rational> for ExtendedReal {
    fn from(r: Rational) -> Self {
        ExtendedReal::Finite(r)
    }
}

/// Canonical Sturm sequence of the square-free part of `p`.
pub fn sturm_sequence(p: &Polynomial) -> Vec<Polynomial> {
    if p.is_zero() {
        return Vec::new();
    }
    let p0 = primitive(&p.squarefree_part());
    let mut seq = vec![p0.clone(), primitive(&p0.derivative())];
    while !seq.last().unwrap().is_zero() {
        let n = seq.len();
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        seq.push(primitive(&-r));
    }
    seq.pop();
    seq
}

/// Positive multiple with coprime integer coefficients. Sign variations
/// are unchanged and the remainder sequence stays small.
fn primitive(p: &Polynomial) -> Polynomial {
    let c = p.coeffs();
    if c.is_empty() {
        return p.clone();
    }
    let den = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let num = c.iter().fold(BigInt::zero(), |acc, x| acc.gcd(&(x.numer() * &den / x.denom())));
    p.scale(&Rational::new(den, num))
}

fn sign_at(p: &Polynomial, x: &ExtendedReal) -> i32 {
    match x {
        ExtendedReal::Finite(v) => {
            let y = p.eval(v);
            if y.is_zero() {
                0
            } else if y.is_positive() {
                1
            } else {
                -1
            }
        }
        ExtendedReal::PosInfinity => p.leading_sign(),
        ExtendedReal::NegInfinity => {
            let s = p.leading_sign();
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }
    }
}

/// Number of sign changes of the sequence at `x`, zeros skipped.
pub fn sign_variations(seq: &[Polynomial], x: &ExtendedReal) -> usize {
    let signs: Vec<i32> = seq.iter().map(|p| sign_at(p, x)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_real_root_count(p: &Polynomial, lo: &ExtendedReal, hi: &ExtendedReal) -> usize {
    let seq = sturm_sequence(p);
    if seq.is_empty() {
        return 0;
    }
    sign_variations(&seq, lo).saturating_sub(sign_variations(&seq, hi))
}

/// Number of distinct real roots of `p`.
pub fn real_root_count(p: &Polynomial) -> usize {
    sturm_real_root_count(p, &ExtendedReal::NegInfinity, &ExtendedReal::PosInfinity)
}
