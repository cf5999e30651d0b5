//! Residues at quadratic poles, Hermite reduction and partial fractions.
//!
//! Residues are computed in the quadratic field `Q[t]/(Q(t))`: the class
//! `theta` of `t` stands for the root `z` of `Q` with positive imaginary
//! part, so no irrational numbers are ever formed. The residue at the
//! conjugate root is the field conjugate.

use std::fmt;

use nalgebra::DMatrix;
use num_traits::{One, Signed, Zero};

use crate::arith::{self, Rational};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;

/// Monic irreducible quadratic `t^2 + b t + c` with a multiplicity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadraticFactor {
    b: Rational,
    c: Rational,
    multiplicity: u32,
}

/// Element `r0 + r1*theta` of `Q[t]/(Q(t))`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ExtensionElement {
    pub r0: Rational,
    pub r1: Rational,
}

impl ExtensionElement {
    pub fn new(r0: Rational, r1: Rational) -> Self {
        ExtensionElement { r0, r1 }
    }

    pub fn from_rational(r0: Rational) -> Self {
        ExtensionElement {
            r0,
            r1: Rational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.r0.is_zero() && self.r1.is_zero()
    }

    fn add(&self, o: &Self) -> Self {
        ExtensionElement::new(&self.r0 + &o.r0, &self.r1 + &o.r1)
    }

    fn sub(&self, o: &Self) -> Self {
        ExtensionElement::new(&self.r0 - &o.r0, &self.r1 - &o.r1)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        ExtensionElement::new(&self.r0 * s, &self.r1 * s)
    }
}

impl fmt::Display for ExtensionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ({})*theta", self.r0, self.r1)
    }
}

impl QuadraticFactor {
    pub fn new(b: Rational, c: Rational, multiplicity: u32) -> Result<Self> {
        if multiplicity == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        let disc = &b * &b - &c * arith::int(4);
        if !disc.is_negative() {
            return Err(Error::ReducibleQuadratic { b, c });
        }
        Ok(QuadraticFactor { b, c, multiplicity })
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn with_multiplicity(&self, multiplicity: u32) -> Result<Self> {
        Self::new(self.b.clone(), self.c.clone(), multiplicity)
    }

    /// `t^2 + b t + c`
    pub fn poly(&self) -> Polynomial {
        Polynomial::new(vec![self.c.clone(), self.b.clone(), Rational::one()])
    }

    /// `(t^2 + b t + c)^multiplicity`
    pub fn power(&self) -> Polynomial {
        self.poly().pow(self.multiplicity)
    }

    /// Root with positive imaginary part.
    pub fn root(&self) -> (f64, f64) {
        let b = arith::to_f64(&self.b);
        let c = arith::to_f64(&self.c);
        (-b / 2.0, (c - b * b / 4.0).sqrt())
    }

    /// Complex value of a field element at the upper root.
    pub fn to_complex(&self, e: &ExtensionElement) -> (f64, f64) {
        let (re, im) = self.root();
        (
            arith::to_f64(&e.r0) + arith::to_f64(&e.r1) * re,
            arith::to_f64(&e.r1) * im,
        )
    }

    fn theta(&self) -> ExtensionElement {
        ExtensionElement::new(Rational::zero(), Rational::one())
    }

    pub fn ext_mul(&self, x: &ExtensionElement, y: &ExtensionElement) -> ExtensionElement {
        // theta^2 = -b theta - c
        let hh = &x.r1 * &y.r1;
        ExtensionElement::new(
            &x.r0 * &y.r0 - &self.c * &hh,
            &x.r0 * &y.r1 + &x.r1 * &y.r0 - &self.b * &hh,
        )
    }

    /// Image of `theta` under the nontrivial automorphism is `-b - theta`.
    pub fn ext_conj(&self, x: &ExtensionElement) -> ExtensionElement {
        ExtensionElement::new(&x.r0 - &self.b * &x.r1, -x.r1.clone())
    }

    pub fn ext_inv(&self, x: &ExtensionElement) -> ExtensionElement {
        assert!(!x.is_zero(), "inverse of zero in quadratic field");
        let conj = self.ext_conj(x);
        let norm = self.ext_mul(x, &conj).r0;
        conj.scale(&norm.recip())
    }

    /// `p(theta)`
    pub fn ext_eval(&self, p: &Polynomial) -> ExtensionElement {
        let th = self.theta();
        p.coeffs().iter().rev().fold(ExtensionElement::default(), |acc, c| {
            self.ext_mul(&acc, &th).add(&ExtensionElement::from_rational(c.clone()))
        })
    }

    /// Coefficients of `p(theta + h)` up to `h^(order - 1)`.
    fn taylor_at_root(&self, p: &Polynomial, order: usize) -> Vec<ExtensionElement> {
        let th = self.theta();
        let mut acc = vec![ExtensionElement::default(); order];
        for c in p.coeffs().iter().rev() {
            // acc <- acc * (theta + h) + c
            let mut next = vec![ExtensionElement::default(); order];
            for k in 0..order {
                let mut v = self.ext_mul(&acc[k], &th);
                if k > 0 {
                    v = v.add(&acc[k - 1]);
                }
                next[k] = v;
            }
            next[0] = next[0].add(&ExtensionElement::from_rational(c.clone()));
            acc = next;
        }
        acc
    }

    fn series_mul(&self, a: &[ExtensionElement], b: &[ExtensionElement]) -> Vec<ExtensionElement> {
        let n = a.len().min(b.len());
        (0..n)
            .map(|k| {
                (0..=k).fold(ExtensionElement::default(), |acc, j| {
                    acc.add(&self.ext_mul(&a[j], &b[k - j]))
                })
            })
            .collect()
    }

    fn series_inv(&self, s: &[ExtensionElement]) -> Vec<ExtensionElement> {
        let inv0 = self.ext_inv(&s[0]);
        let mut out = vec![inv0.clone()];
        for k in 1..s.len() {
            let acc = (1..=k).fold(ExtensionElement::default(), |acc, j| {
                acc.add(&self.ext_mul(&s[j], &out[k - j]))
            });
            out.push(self.ext_mul(&ExtensionElement::default().sub(&acc), &inv0));
        }
        out
    }
}

/// Denominator `alpha = prod Q_i^m_i` given by distinct irreducible quadratics.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PoleStructure {
    factors: Vec<QuadraticFactor>,
}

impl PoleStructure {
    pub fn new(factors: Vec<QuadraticFactor>) -> Result<Self> {
        for (i, f) in factors.iter().enumerate() {
            if factors[..i].iter().any(|g| g.b == f.b && g.c == f.c) {
                return Err(Error::DuplicateFactor {
                    b: f.b.clone(),
                    c: f.c.clone(),
                });
            }
        }
        Ok(PoleStructure { factors })
    }

    /// Single factor `Q^multiplicity`.
    pub fn single(factor: QuadraticFactor) -> Self {
        PoleStructure {
            factors: vec![factor],
        }
    }

    pub fn factors(&self) -> &[QuadraticFactor] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `sum m_i`
    pub fn total_multiplicity(&self) -> u32 {
        self.factors.iter().map(|f| f.multiplicity).sum()
    }

    pub fn alpha(&self) -> Polynomial {
        self.factors
            .iter()
            .fold(Polynomial::one(), |acc, f| &acc * &f.power())
    }

    /// `alpha / Q_i^m_i`
    pub fn cofactor(&self, i: usize) -> Polynomial {
        self.factors
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(Polynomial::one(), |acc, (_, f)| &acc * &f.power())
    }

    /// Least common multiple: union of the factors with the larger
    /// multiplicity on shared ones.
    pub fn lcm(&self, other: &PoleStructure) -> PoleStructure {
        let mut factors = self.factors.clone();
        for g in &other.factors {
            match factors.iter_mut().find(|f| f.b == g.b && f.c == g.c) {
                Some(f) => f.multiplicity = f.multiplicity.max(g.multiplicity),
                None => factors.push(g.clone()),
            }
        }
        PoleStructure { factors }
    }

    pub fn as_blocks(&self) -> Vec<(Polynomial, u32)> {
        self.factors
            .iter()
            .map(|f| (f.poly(), f.multiplicity))
            .collect()
    }
}

/// Precomputed data for residues at the upper root of `Q` of functions
/// `N / (Q^m E)` with a fixed cofactor `E` coprime to `Q`.
#[derive(Clone, Debug)]
pub struct ResidueMap {
    factor: QuadraticFactor,
    order: usize,
    inv_series: Vec<ExtensionElement>,
}

impl ResidueMap {
    /// `multiplicity` is taken from `factor`.
    pub fn new(factor: &QuadraticFactor, cofactor: &Polynomial) -> Self {
        let m = factor.multiplicity as usize;
        // Q(theta + h) = h (2 theta + b + h), so Q^m = h^m (2 theta + b + h)^m.
        let lin = vec![
            ExtensionElement::new(factor.b.clone(), arith::int(2)),
            ExtensionElement::from_rational(Rational::one()),
        ];
        let mut lin_pow = vec![ExtensionElement::from_rational(Rational::one())];
        lin_pow.resize(m, ExtensionElement::default());
        let mut lin_full = lin;
        lin_full.resize(m, ExtensionElement::default());
        for _ in 0..m {
            lin_pow = factor.series_mul(&lin_pow, &lin_full);
        }
        let cof = factor.taylor_at_root(cofactor, m);
        let den = factor.series_mul(&cof, &lin_pow);
        ResidueMap {
            factor: factor.clone(),
            order: m,
            inv_series: factor.series_inv(&den),
        }
    }

    pub fn factor(&self) -> &QuadraticFactor {
        &self.factor
    }

    /// Residue of `num / (Q^m E)` at the upper root: the coefficient of
    /// `h^(m-1)` in the Laurent-shifted Taylor expansion.
    pub fn residue(&self, num: &Polynomial) -> ExtensionElement {
        let m = self.order;
        let n = self.factor.taylor_at_root(num, m);
        (0..m).fold(ExtensionElement::default(), |acc, j| {
            acc.add(&self.factor.ext_mul(&n[j], &self.inv_series[m - 1 - j]))
        })
    }
}

/// Multiplicity of `q` in `p` (`p` nonzero).
pub fn multiplicity_in(p: &Polynomial, q: &Polynomial) -> (u32, Polynomial) {
    let mut rest = p.clone();
    let mut m = 0;
    while let Some(next) = rest.exact_div(q) {
        rest = next;
        m += 1;
    }
    (m, rest)
}

/// Residue of `f` at the upper root of `q`. The multiplicity recorded in `q`
/// is ignored; the actual order of the pole in `f` is used.
pub fn residue_at(f: &RationalFunction, q: &QuadraticFactor) -> Result<ExtensionElement> {
    let (m, cofactor) = multiplicity_in(f.denominator(), &q.poly());
    if m == 0 {
        return Err(Error::NotAFactor {
            b: q.b.clone(),
            c: q.c.clone(),
        });
    }
    let q = q.with_multiplicity(m)?;
    Ok(ResidueMap::new(&q, &cofactor).residue(f.numerator()))
}

/// Rational antiderivative by Hermite reduction.
///
/// The polynomial part is integrated with zero constant term; no other
/// constant is added, so e.g. `2t/(t^2+1)^2` integrates to `-1/(t^2+1)`.
/// Fails if the reduced integrand has a nonzero residue anywhere.
pub fn hermite_antiderivative(f: &RationalFunction) -> Result<RationalFunction> {
    if f.is_zero() {
        return Ok(RationalFunction::zero());
    }
    let d = f.denominator().clone();
    let (poly_part, mut a) = f.numerator().div_rem(&d);

    // rational part sum b_k / D_k over a divisor chain D_0 = D-, D_{k+1} | D_k,
    // kept as one numerator over D_0
    let mut d_minus = Polynomial::gcd(&d, &d.derivative());
    let g_den = d_minus.clone();
    let mut g_num = Polynomial::zero();
    let d_star = d.exact_div(&d_minus).unwrap();
    while !d_minus.is_constant() {
        let d_minus2 = Polynomial::gcd(&d_minus, &d_minus.derivative());
        let d_minus_star = d_minus.exact_div(&d_minus2).unwrap();
        let lhs = -(&d_star * &d_minus.derivative())
            .exact_div(&d_minus)
            .expect("D* D-' divisible by D-");
        let (b, c) = Polynomial::solve_bezout(&lhs, &d_minus_star, &a);
        a = &c - &(&b.derivative() * &d_star.exact_div(&d_minus_star).unwrap());
        g_num = &g_num + &(&b * &g_den.exact_div(&d_minus).unwrap());
        d_minus = d_minus2;
    }

    let (extra_poly, rem) = a.div_rem(&d_star);
    if !rem.is_zero() {
        let bad = d_star
            .exact_div(&Polynomial::gcd(&rem, &d_star))
            .unwrap()
            .monic();
        let residue = (bad.degree() == Some(2))
            .then(|| {
                QuadraticFactor::new(bad.coeff(1), bad.coeff(0), 1)
                    .ok()
                    .and_then(|q| residue_at(f, &q).ok())
            })
            .flatten();
        return Err(Error::NonzeroResidue {
            factor: bad,
            residue,
        });
    }
    let poly = (&poly_part + &extra_poly).integral();
    Ok(RationalFunction::new(&g_num + &(&poly * &g_den), g_den))
}

/// One block `numerator / factor^power` of a partial fraction expansion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialFractionTerm {
    pub factor: Polynomial,
    pub power: u32,
    pub numerator: Polynomial,
}

impl PartialFractionTerm {
    pub fn to_rational(&self) -> RationalFunction {
        RationalFunction::new(self.numerator.clone(), self.factor.pow(self.power))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialFractions {
    pub polynomial_part: Polynomial,
    pub terms: Vec<PartialFractionTerm>,
}

impl PartialFractions {
    pub fn sum(&self) -> RationalFunction {
        self.terms.iter().fold(
            RationalFunction::from_poly(self.polynomial_part.clone()),
            |acc, t| &acc + &t.to_rational(),
        )
    }
}

/// Splits `f` along pairwise coprime blocks `factor^power` whose product is
/// a multiple of the denominator of `f`. Each returned term has
/// `deg numerator < deg factor^power`.
pub fn split_coprime(
    f: &RationalFunction,
    blocks: &[(Polynomial, u32)],
) -> Result<PartialFractions> {
    let full = blocks
        .iter()
        .fold(Polynomial::one(), |acc, (p, k)| &acc * &p.pow(*k));
    let lift = full.exact_div(f.denominator()).ok_or_else(|| {
        Error::InvalidArgument("blocks do not cover the denominator".into())
    })?;
    let num = f.numerator() * &lift;
    let mut terms = Vec::new();
    let mut covered = Polynomial::zero();
    for (factor, power) in blocks {
        let block = factor.pow(*power);
        let rest = full.exact_div(&block).unwrap();
        // num = s*rest + t*block with deg s < deg block
        let (inv_rest, _) = Polynomial::solve_bezout(&rest, &block, &Polynomial::one());
        let s = (&inv_rest * &num).div_rem(&block).1;
        covered = &covered + &(&s * &rest);
        terms.push(PartialFractionTerm {
            factor: factor.clone(),
            power: *power,
            numerator: s,
        });
    }
    let polynomial_part = (&num - &covered)
        .exact_div(&full)
        .expect("partial fraction remainder must be polynomial");
    Ok(PartialFractions {
        polynomial_part,
        terms,
    })
}

/// Full partial fraction expansion over the given coprime factors: every
/// term has `deg numerator < deg factor`.
pub fn partial_fractions(
    f: &RationalFunction,
    factors: &[(Polynomial, u32)],
) -> Result<PartialFractions> {
    let blocks = split_coprime(f, factors)?;
    let mut terms = Vec::new();
    for t in blocks.terms {
        let mut n = t.numerator;
        for power in (1..=t.power).rev() {
            let (q, r) = n.div_rem(&t.factor);
            if !r.is_zero() {
                terms.push(PartialFractionTerm {
                    factor: t.factor.clone(),
                    power,
                    numerator: r,
                });
            }
            n = q;
        }
        debug_assert!(n.is_zero());
    }
    Ok(PartialFractions {
        polynomial_part: blocks.polynomial_part,
        terms,
    })
}

/// Factors a polynomial without real roots into monic quadratics over the
/// rationals where possible, with multiplicities. Square-free parts that do
/// not split into rational quadratics are kept whole.
pub fn quadratic_factorization(p: &Polynomial) -> Vec<(Polynomial, u32)> {
    let mut out = Vec::new();
    for (part, k) in p.squarefree_decomposition() {
        for f in split_rational_quadratics(&part) {
            out.push((f, k as u32));
        }
    }
    out
}

fn split_rational_quadratics(p: &Polynomial) -> Vec<Polynomial> {
    let deg = p.degree().unwrap_or(0);
    if deg <= 2 {
        return vec![p.clone()];
    }
    let monic = p.monic();
    let coeffs = monic.to_f64_coeffs();
    let companion = DMatrix::from_fn(deg, deg, |i, j| {
        if j == deg - 1 {
            -coeffs[i]
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let roots = companion.complex_eigenvalues();
    let mut rest = monic.clone();
    let mut found = Vec::new();
    for z in roots.iter().filter(|z| z.im > 0.0) {
        let b = arith::rationalize(-2.0 * z.re, 100_000);
        let c = arith::rationalize(z.re * z.re + z.im * z.im, 100_000);
        let q = Polynomial::new(vec![c, b, Rational::one()]);
        if let Some(next) = rest.exact_div(&q) {
            rest = next;
            found.push(q);
        }
    }
    if !rest.is_constant() {
        found.push(rest);
    }
    found
}
