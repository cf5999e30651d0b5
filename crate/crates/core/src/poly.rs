//! Dense univariate polynomials with ascending coefficients.
//!
//! `Poly<T>` is generic over the coefficient ring so the same code serves
//! rational polynomials, polynomials over the Gaussian rationals and
//! quaternion polynomials. The indeterminate is central: for noncommutative
//! coefficients the product `a * b` multiplies coefficients in order
//! `a_i * b_j`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{self, Rational};

/// Coefficient ring of a polynomial.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_int(n: i64) -> Self;

    /// Coefficients of the product of two nonempty coefficient lists.
    fn convolve(a: &[Self], b: &[Self]) -> Vec<Self> {
        let mut out = vec![Self::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(x.clone() * y);
            }
        }
        out
    }
}

/// Commutative coefficient field.
pub trait FieldCoeff: Coeff {
    fn inv(&self) -> Self;

    /// Image in `Z/PRIME`, if the field maps there.
    fn mod_prime(&self) -> Option<u64> {
        None
    }
}

/// Mersenne prime used for modular coprimality tests.
const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn inv_mod(a: u64) -> u64 {
    // Fermat
    let (mut base, mut e, mut acc) = (a, PRIME - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        e >>= 1;
    }
    acc
}

/// Degree of `gcd(a mod p, b mod p)`; ascending coefficients with nonzero
/// leading entries.
fn gcd_degree_mod_prime(a: &[u64], b: &[u64]) -> usize {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let inv = inv_mod(*b.last().unwrap());
        while a.len() >= b.len() {
            let f = mul_mod(*a.last().unwrap(), inv);
            let shift = a.len() - b.len();
            for (i, bi) in b.iter().enumerate() {
                a[shift + i] = (a[shift + i] + PRIME - mul_mod(f, *bi)) % PRIME;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len() - 1
}

impl Coeff for Rational {
    fn from_int(n: i64) -> Self {
        arith::int(n)
    }

    /// Integer convolution over common denominators, normalizing once per
    /// output coefficient instead of once per term.
    fn convolve(a: &[Self], b: &[Self]) -> Vec<Self> {
        let lift = |v: &[Self]| {
            let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
            (ints, den)
        };
        let (ia, da) = lift(a);
        let (ib, db) = lift(b);
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in ia.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in ib.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        let den = da * db;
        out.into_iter().map(|n| Rational::new(n, den.clone())).collect()
    }
}

impl FieldCoeff for Rational {
    fn inv(&self) -> Self {
        self.recip()
    }

    fn mod_prime(&self) -> Option<u64> {
        let p = BigInt::from(PRIME);
        let reduce = |n: &BigInt| (((n % &p) + &p) % &p).to_u64().unwrap();
        let den = reduce(self.denom());
        (den != 0).then(|| mul_mod(reduce(self.numer()), inv_mod(den)))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type Polynomial = Poly<Rational>;

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The indeterminate `t`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `deg 0 = -1`.
    pub fn degree_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Horner evaluation at a value commuting with all coefficients.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x + c)
    }

    /// `c * self`
    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| c.clone() * a).collect())
    }

    /// `self * c`
    pub fn scale_right(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * &T::from_int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Remainder modulo `t^n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n).cloned().collect())
    }

    /// `t^d * self(1/t)` for `d >= deg self`.
    pub fn reversed(&self, d: usize) -> Self {
        let mut coeffs = vec![T::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            assert!(i <= d, "reversal degree below polynomial degree");
            coeffs[d - i] = c.clone();
        }
        Self::new(coeffs)
    }
}

impl<T: FieldCoeff> Poly<T> {
    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv_lc = d.leading().unwrap().inv();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let q = rem[k].clone() * &inv_lc;
            if q.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                rem[idx] = rem[idx].clone() - &(q.clone() * dc);
            }
            quot[k - dd] = q;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Quotient if `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        if a.is_zero() {
            return b.monic();
        }
        if b.is_constant() && !b.is_zero() {
            return Self::one();
        }
        if b.is_zero() {
            return a.monic();
        }
        // gcd degree can only grow under reduction mod p, so a coprime image
        // proves coprimality and skips the rational remainder sequence
        let image = |p: &Self| p.coeffs.iter().map(FieldCoeff::mod_prime).collect::<Option<Vec<u64>>>();
        if let (Some(ia), Some(ib)) = (image(&a), image(&b)) {
            if ia.last() != Some(&0) && ib.last() != Some(&0) && gcd_degree_mod_prime(&ia, &ib) == 0 {
                return Self::one();
            }
        }
        while !b.is_zero() {
            // monic remainders keep the coefficients from growing
            let r = a.div_rem(&b).1.monic();
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*a + t*b = g = gcd(a, b)` monic.
    pub fn ext_gcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = lc.inv();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// Solves `s*a + t*b = c` with `deg s < deg b` for coprime `a`, `b`.
    pub fn solve_bezout(a: &Self, b: &Self, c: &Self) -> (Self, Self) {
        let (g, s0, _) = Self::ext_gcd(a, b);
        debug_assert!(g.is_constant() && !g.is_zero(), "operands not coprime");
        let s = (&s0 * c).div_rem(b).1;
        let t = (c - &(&s * a))
            .exact_div(b)
            .expect("bezout cofactor must divide exactly");
        (s, t)
    }

    /// Antiderivative vanishing at zero.
    pub fn integral(&self) -> Self {
        let mut coeffs = vec![T::zero()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.clone() * &T::from_int(i as i64 + 1).inv());
        }
        Self::new(coeffs)
    }

    /// Square-free decomposition `self = lc * prod_k f_k^k` (Yun). Returns the
    /// nonconstant monic `f_k` with their exponents `k`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = Self::gcd(&f, &df);
        let mut b = f.exact_div(&a0).unwrap();
        let mut c = df.exact_div(&a0).unwrap();
        let mut d = &c - &b.derivative();
        let mut k = 1;
        while !b.is_constant() {
            let a = Self::gcd(&b, &d);
            b = b.exact_div(&a).unwrap();
            c = d.exact_div(&a).unwrap();
            d = &c - &b.derivative();
            if !a.is_constant() {
                out.push((a, k));
            }
            k += 1;
        }
        out
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = Self::gcd(self, &self.derivative());
        self.exact_div(&g).unwrap().monic()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $bound:ident) => {
        impl<T: $bound> $tr<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
        impl<'a, T: $bound> $tr<&'a Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: &'a Poly<T>) -> Poly<T> {
                (&self).$method(rhs)
            }
        }
        impl<'a, T: $bound> $tr<Poly<T>> for &'a Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                self.$method(&rhs)
            }
        }
    };
}

impl<'a, T: Coeff> Add<&'a Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &'a Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<'a, T: Coeff> Sub<&'a Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &'a Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl<'a, T: Coeff> Mul<&'a Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &'a Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        Poly::new(T::convolve(&self.coeffs, &rhs.coeffs))
    }
}

forward_binop!(Add, add, Coeff);
forward_binop!(Sub, sub, Coeff);
forward_binop!(Mul, mul, Coeff);

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

/// Evaluates the binary form `sum c[k] u^k v^(degree-k)`. Horner runs in
/// whichever of `u/v`, `v/u` is bounded by one.
pub fn eval_form(c: &[f64], degree: usize, u: f64, v: f64) -> f64 {
    assert!(c.len() <= degree + 1, "form degree below polynomial degree");
    let at = |k: usize| c.get(k).copied().unwrap_or(0.0);
    if v.abs() >= u.abs() {
        let r = u / v;
        (0..=degree).rev().fold(0.0, |acc, k| acc * r + at(k)) * v.powi(degree as i32)
    } else {
        let r = v / u;
        (0..=degree).fold(0.0, |acc, k| acc * r + at(k)) * u.powi(degree as i32)
    }
}

impl Polynomial {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| arith::int(c)).collect())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + arith::to_f64(c))
    }

    /// Value of the degree-`degree` form `sum c_k u^k v^(degree-k)`.
    pub fn eval_homogeneous_f64(&self, degree: usize, u: f64, v: f64) -> f64 {
        eval_form(&self.to_f64_coeffs(), degree, u, v)
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(arith::to_f64).collect()
    }

    /// Sign of the leading coefficient (0 for the zero polynomial).
    pub fn leading_sign(&self) -> i32 {
        match self.leading() {
            None => 0,
            Some(c) if c.is_positive() => 1,
            Some(_) => -1,
        }
    }

    /// Exact square root if `self` is the square of a rational polynomial.
    /// The root returned has a nonnegative leading coefficient.
    pub fn sqrt_exact(&self) -> Option<Self> {
        let Some(deg) = self.degree() else {
            return Some(Self::zero());
        };
        if deg % 2 == 1 {
            return None;
        }
        let lc = arith::sqrt_exact(self.leading().unwrap())?;
        let half = deg / 2;
        // Determine the root top-down: coefficient k of S^2 at degree half + k.
        let mut root = vec![Rational::zero(); half + 1];
        root[half] = lc.clone();
        let two_lc = &lc + &lc;
        for k in (0..half).rev() {
            // Coefficient of t^(half + k) in S^2 = 2*lc*s_k + sum of products of
            // already known coefficients s_i s_j with i + j = half + k, i,j > k.
            let target = self.coeff(half + k);
            let mut known = Rational::zero();
            for i in (k + 1)..=half {
                let j = half + k - i;
                if j > k && j <= half {
                    known += &root[i] * &root[j];
                }
            }
            root[k] = (target - known) / &two_lc;
        }
        let root = Self::new(root);
        (&root * &root == *self).then_some(root)
    }

    /// Substitutes `t = (a s + b) / (c s + d)` into `self` and clears the
    /// denominator `(c s + d)^deg`, where `deg >= self.degree()`.
    pub fn homogeneous_substitute(
        &self,
        a: &Rational,
        b: &Rational,
        c: &Rational,
        d: &Rational,
        deg: usize,
    ) -> Self {
        let num = Self::new(vec![b.clone(), a.clone()]);
        let den = Self::new(vec![d.clone(), c.clone()]);
        let mut out = Self::zero();
        for (k, coeff) in self.coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let term = &num.pow(k as u32) * &den.pow((deg - k) as u32);
            out = &out + &term.scale(coeff);
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "{}t", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}t^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}
