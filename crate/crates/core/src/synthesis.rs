//! Zero-residue systems and rational PH curves.
//!
//! For a generator `A` and denominator `alpha`, the hodograph is
//! `mu / alpha * A i A*`. It has a rational antiderivative exactly when all
//! residues at the roots of `alpha` vanish, which is a linear condition on
//! the coefficients of `mu`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::calculus::{
    hermite_antiderivative, quadratic_factorization, split_coprime, PoleStructure, ResidueMap,
};
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::poly::Polynomial;
use crate::quaternion::{is_i_reduced, rotate_vector, Quaternion, QuaternionPolynomial, VectorPolynomial};
use crate::ratfunc::RationalFunction;

/// Generator, pole structure and the implied numerator degree
/// `m = 2 (sum m_i - deg A - 1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SynthesisProblem {
    a: QuaternionPolynomial,
    poles: PoleStructure,
    m: usize,
    i_reduced: bool,
    direction: VectorPolynomial,
    alpha: Polynomial,
}

impl SynthesisProblem {
    pub fn new(a: QuaternionPolynomial, poles: PoleStructure) -> Result<Self> {
        let deg_a = a.degree().ok_or(Error::ZeroPolynomial)? as i64;
        let m = 2 * (poles.total_multiplicity() as i64 - deg_a - 1);
        if m < 0 {
            return Err(Error::NegativeDegree(m));
        }
        let direction = rotate_vector(&a, &Quaternion::i())?;
        Ok(SynthesisProblem {
            i_reduced: is_i_reduced(&a),
            alpha: poles.alpha(),
            a,
            poles,
            m: m as usize,
            direction,
        })
    }

    pub fn generator(&self) -> &QuaternionPolynomial {
        &self.a
    }

    pub fn poles(&self) -> &PoleStructure {
        &self.poles
    }

    pub fn numerator_degree(&self) -> usize {
        self.m
    }

    /// A generator with a right factor in span{1, i}[t] still works, but
    /// the factor only inflates degrees.
    pub fn is_i_reduced(&self) -> bool {
        self.i_reduced
    }

    /// `A i A*`
    pub fn direction(&self) -> &VectorPolynomial {
        &self.direction
    }

    pub fn alpha(&self) -> &Polynomial {
        &self.alpha
    }

    /// Real polynomial `A A*`.
    pub fn norm(&self) -> Polynomial {
        self.a.norm_poly()
    }

    /// Hodograph `mu / alpha * A i A*`.
    pub fn hodograph(&self, mu: &Polynomial) -> [RationalFunction; 3] {
        self.direction
            .clone()
            .map(|w| RationalFunction::new(mu * &w, self.alpha.clone()))
    }

    /// True when `alpha` divides `mu`: then the integral is a polynomial curve,
    /// which cannot close.
    pub fn polynomial_solution(&self, mu: &Polynomial) -> bool {
        !mu.is_zero() && mu.div_rem(&self.alpha).1.is_zero()
    }
}

/// Exact kernel of the zero-residue conditions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolutionSpace {
    m: usize,
    constraints: RatMatrix,
    basis: Vec<Polynomial>,
    /// Coefficient index where basis vector `j` is the only nonzero one.
    free: Vec<usize>,
}

impl SolutionSpace {
    /// Columns are the coefficients `mu_0 .. mu_m`; two rows (the `1` and
    /// `theta` coordinates) per pole factor and vector component.
    pub fn constraint_matrix(&self) -> &RatMatrix {
        &self.constraints
    }

    /// Independent relations in reduced row echelon form.
    pub fn relations(&self) -> RatMatrix {
        self.constraints.row_basis()
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn numerator_degree(&self) -> usize {
        self.m
    }

    pub fn contains(&self, mu: &Polynomial) -> bool {
        if mu.degree().is_some_and(|d| d > self.m) {
            return false;
        }
        let v: Vec<Rational> = (0..=self.m).map(|k| mu.coeff(k)).collect();
        self.constraints.mul_vec(&v).iter().all(Zero::is_zero)
    }

    /// Exact coordinates of `mu` in the basis, or `None` outside the space.
    pub fn coordinates(&self, mu: &Polynomial) -> Option<Vec<Rational>> {
        if !self.contains(mu) {
            return None;
        }
        Some(
            self.free
                .iter()
                .zip(&self.basis)
                .map(|(&f, b)| mu.coeff(f) / b.coeff(f))
                .collect(),
        )
    }

    /// `sum coeffs_k basis_k`
    pub fn combine(&self, coeffs: &[Rational]) -> Polynomial {
        assert_eq!(coeffs.len(), self.basis.len());
        self.basis
            .iter()
            .zip(coeffs)
            .fold(Polynomial::zero(), |acc, (b, c)| &acc + &b.scale(c))
    }
}

pub fn build_residue_system(p: &SynthesisProblem) -> SolutionSpace {
    let m = p.m;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (i, q) in p.poles.factors().iter().enumerate() {
        let map = ResidueMap::new(q, &p.poles.cofactor(i));
        for w in &p.direction {
            let res: Vec<_> = (0..=m).map(|k| map.residue(&w.shift(k))).collect();
            rows.push(res.iter().map(|r| r.r0.clone()).collect());
            rows.push(res.iter().map(|r| r.r1.clone()).collect());
        }
    }
    let constraints = if rows.is_empty() {
        RatMatrix::zeros(0, m + 1)
    } else {
        RatMatrix::from_rows(rows)
    };
    let (free, kernel) = constraints.nullspace_with_free();
    let basis = kernel
        .into_iter()
        .map(|v| Polynomial::new(content_normalize(v)))
        .collect();
    SolutionSpace {
        m,
        constraints,
        basis,
        free,
    }
}

/// Scales a nonzero rational vector to coprime integers, keeping signs.
fn content_normalize(v: Vec<Rational>) -> Vec<Rational> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    ints.into_iter().map(|x| Rational::from(x / &g)).collect()
}

/// Triple of rational functions over one reduced, monic common denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalCurve {
    num: [Polynomial; 3],
    den: Polynomial,
}

impl RationalCurve {
    pub fn new(num: [Polynomial; 3], den: Polynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let g = num
            .iter()
            .fold(den.clone(), |acc, p| Polynomial::gcd(&acc, p));
        let lc = den.exact_div(&g).unwrap().leading().unwrap().clone();
        let inv = lc.recip();
        let den = den.exact_div(&g).unwrap().scale(&inv);
        let num = num.map(|p| p.exact_div(&g).unwrap().scale(&inv));
        RationalCurve { num, den }
    }

    pub fn from_components(c: &[RationalFunction; 3]) -> Self {
        let den = c.iter().fold(Polynomial::one(), |acc, f| {
            let g = Polynomial::gcd(&acc, f.denominator());
            (&acc * f.denominator()).exact_div(&g).unwrap()
        });
        let num = c
            .clone()
            .map(|f| f.numerator() * &den.exact_div(f.denominator()).unwrap());
        Self::new(num, den)
    }

    pub fn constant(v: &[Rational; 3]) -> Self {
        Self::new(v.clone().map(Polynomial::constant), Polynomial::one())
    }

    pub fn zero() -> Self {
        Self::constant(&[Rational::zero(), Rational::zero(), Rational::zero()])
    }

    pub fn numerators(&self) -> &[Polynomial; 3] {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn component(&self, i: usize) -> RationalFunction {
        RationalFunction::new(self.num[i].clone(), self.den.clone())
    }

    pub fn components(&self) -> [RationalFunction; 3] {
        [self.component(0), self.component(1), self.component(2)]
    }

    /// Hodograph `r'(t)`.
    pub fn derivative(&self) -> [RationalFunction; 3] {
        self.components().map(|c| c.derivative())
    }

    /// Every component has numerator degree at most the denominator degree.
    pub fn is_bounded(&self) -> bool {
        let dd = self.den.degree_i64();
        self.num.iter().all(|p| p.degree_i64() <= dd)
    }

    pub fn add(&self, other: &Self) -> Self {
        let c = self.components();
        let d = other.components();
        Self::from_components(&[&c[0] + &d[0], &c[1] + &d[1], &c[2] + &d[2]])
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.num.clone().map(|p| p.scale(s)), self.den.clone())
    }

    pub fn translate(&self, v: &[Rational; 3]) -> Self {
        self.add(&Self::constant(v))
    }

    pub fn eval(&self, t: &Rational) -> Option<[Rational; 3]> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return None;
        }
        Some([0, 1, 2].map(|i| self.num[i].eval(t) / &d))
    }

    pub fn eval_f64(&self, t: f64) -> [f64; 3] {
        let d = self.den.eval_f64(t);
        [0, 1, 2].map(|i| self.num[i].eval_f64(t) / d)
    }

    /// Point at the projective parameter `(u : v)`, `t = u / v`. Needs a
    /// bounded curve; `(1 : 0)` gives the closure point.
    pub fn eval_homogeneous(&self, u: f64, v: f64) -> [f64; 3] {
        assert!(self.is_bounded(), "homogeneous evaluation of an unbounded curve");
        let deg = self.den.degree().unwrap_or(0);
        let d = self.den.eval_homogeneous_f64(deg, u, v);
        [0, 1, 2].map(|i| self.num[i].eval_homogeneous_f64(deg, u, v) / d)
    }

    /// `r((a s + b) / (c s + d))`
    pub fn reparameterize(
        &self,
        a: &Rational,
        b: &Rational,
        c: &Rational,
        d: &Rational,
    ) -> Result<Self> {
        let comps = self.components();
        let mut out = Vec::with_capacity(3);
        for f in &comps {
            out.push(f.reparameterize(a, b, c, d)?);
        }
        Ok(Self::from_components(&[out[0].clone(), out[1].clone(), out[2].clone()]))
    }
}

/// Integrates `mu / alpha * A i A*` and translates so that `r(0) = 0`.
pub fn synthesize_curve(p: &SynthesisProblem, mu: &Polynomial) -> Result<RationalCurve> {
    if mu.degree().is_some_and(|d| d > p.m) {
        return Err(Error::InvalidArgument(format!(
            "numerator degree {} exceeds m = {}",
            mu.degree().unwrap(),
            p.m
        )));
    }
    let h = p.hodograph(mu);
    let mut comps = Vec::with_capacity(3);
    for f in &h {
        let g = hermite_antiderivative(f)?;
        let g0 = g.eval(&Rational::zero()).expect("denominator has no real roots");
        comps.push(&g - &RationalFunction::constant(g0));
    }
    Ok(RationalCurve::from_components(&[
        comps[0].clone(),
        comps[1].clone(),
        comps[2].clone(),
    ]))
}

/// Same curve as [`synthesize_curve`], integrated once per basis vector of
/// `space` and combined with the exact coordinates of `mu`. Much cheaper
/// when `mu` has long coefficients, e.g. after rationalizing a float witness.
pub fn synthesize_in_space(
    p: &SynthesisProblem,
    space: &SolutionSpace,
    mu: &Polynomial,
) -> Result<RationalCurve> {
    let Some(y) = space.coordinates(mu) else {
        // reports the offending factor
        return synthesize_curve(p, mu);
    };
    let parts: Vec<RationalCurve> = space
        .basis()
        .iter()
        .map(|b| synthesize_curve(p, b))
        .collect::<Result<_>>()?;
    let den = parts
        .iter()
        .fold(Polynomial::one(), |acc, c| lcm(&acc, c.denominator()));
    let mut num = [Polynomial::zero(), Polynomial::zero(), Polynomial::zero()];
    for (c, yj) in parts.iter().zip(&y) {
        let lift = den.exact_div(c.denominator()).expect("lcm is a multiple");
        for (acc, n) in num.iter_mut().zip(c.numerators()) {
            *acc = &*acc + &(n * &lift).scale(yj);
        }
    }
    // den is a product of pole factors, so cancellation is trial division
    let mut den = den;
    for q in p.poles().factors() {
        let q = q.poly();
        while !den.is_constant() {
            let Some(d) = den.exact_div(&q) else { break };
            let Some(n) = num.iter().map(|n| n.exact_div(&q)).collect::<Option<Vec<_>>>() else {
                break;
            };
            den = d;
            num = [n[0].clone(), n[1].clone(), n[2].clone()];
        }
    }
    Ok(RationalCurve { num, den })
}

fn lcm(a: &Polynomial, b: &Polynomial) -> Polynomial {
    (a * b).exact_div(&Polynomial::gcd(a, b)).unwrap().monic()
}

/// `lim r(t)` for `t -> +-inf`; both limits agree for a rational curve.
pub fn closure_point(c: &RationalCurve) -> Result<[Rational; 3]> {
    let dd = c.den.degree_i64();
    let mut out: [Rational; 3] = Default::default();
    for (i, n) in c.num.iter().enumerate() {
        match n.degree_i64().cmp(&dd) {
            std::cmp::Ordering::Greater => return Err(Error::Unbounded(i)),
            std::cmp::Ordering::Equal => out[i] = n.leading().unwrap() / c.den.leading().unwrap(),
            std::cmp::Ordering::Less => {}
        }
    }
    Ok(out)
}

/// Curve whose denominator is a power of a single quadratic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ElementarySummand {
    pub factor: Polynomial,
    pub multiplicity: u32,
    pub curve: RationalCurve,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ElementaryDecomposition {
    pub polynomial_part: RationalCurve,
    pub summands: Vec<ElementarySummand>,
}

impl ElementaryDecomposition {
    pub fn sum(&self) -> RationalCurve {
        self.summands
            .iter()
            .fold(self.polynomial_part.clone(), |acc, s| acc.add(&s.curve))
    }
}

/// Splits a curve into elementary summands by partial fractions over the
/// quadratic factors of its denominator.
pub fn elementary_decomposition(c: &RationalCurve) -> Result<ElementaryDecomposition> {
    let blocks = quadratic_factorization(c.denominator());
    let parts = c
        .components()
        .iter()
        .map(|f| split_coprime(f, &blocks))
        .collect::<Result<Vec<_>>>()?;
    let polynomial_part = RationalCurve::new(
        [0, 1, 2].map(|i| parts[i].polynomial_part.clone()),
        Polynomial::one(),
    );
    let summands = blocks
        .iter()
        .enumerate()
        .map(|(k, (factor, mult))| ElementarySummand {
            factor: factor.clone(),
            multiplicity: *mult,
            curve: RationalCurve::new(
                [0, 1, 2].map(|i| parts[i].terms[k].numerator.clone()),
                factor.pow(*mult),
            ),
        })
        .collect();
    Ok(ElementaryDecomposition {
        polynomial_part,
        summands,
    })
}

/// Generator, poles, numerator and the integrated curve, kept together.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Solution {
    pub problem: SynthesisProblem,
    pub mu: Polynomial,
    pub curve: RationalCurve,
}

impl Solution {
    pub fn new(problem: SynthesisProblem, mu: Polynomial) -> Result<Self> {
        let curve = synthesize_curve(&problem, &mu)?;
        Ok(Solution { problem, mu, curve })
    }

    /// Same as [`Solution::new`] with the curve assembled from the basis
    /// curves of `space`, which must belong to `problem`.
    pub fn in_space(problem: SynthesisProblem, space: &SolutionSpace, mu: Polynomial) -> Result<Self> {
        let curve = synthesize_in_space(&problem, space, &mu)?;
        Ok(Solution { problem, mu, curve })
    }

    /// `kappa = mu / alpha`
    pub fn kappa(&self) -> RationalFunction {
        RationalFunction::new(self.mu.clone(), self.problem.alpha.clone())
    }
}

/// Weighted sum of solutions sharing a generator. Pole structures are merged
/// into their least common multiple.
pub fn average_solutions(solutions: &[Solution], weights: &[Rational]) -> Result<Solution> {
    if solutions.is_empty() || solutions.len() != weights.len() {
        return Err(Error::InvalidArgument(
            "need one weight per solution and at least one solution".into(),
        ));
    }
    if weights.iter().any(|w| *w <= Rational::zero()) {
        return Err(Error::InvalidArgument("weights must be positive".into()));
    }
    let a = solutions[0].problem.generator();
    if solutions.iter().any(|s| s.problem.generator() != a) {
        return Err(Error::MismatchedGenerator);
    }
    let poles = solutions
        .iter()
        .skip(1)
        .fold(solutions[0].problem.poles.clone(), |acc, s| acc.lcm(&s.problem.poles));
    let problem = SynthesisProblem::new(a.clone(), poles)?;
    let mut mu = Polynomial::zero();
    let mut curve = RationalCurve::zero();
    for (s, w) in solutions.iter().zip(weights) {
        let lift = problem.alpha.exact_div(&s.problem.alpha).unwrap();
        mu = &mu + &(&s.mu * &lift).scale(w);
        curve = curve.add(&s.curve.scale(w));
    }
    Ok(Solution { problem, mu, curve })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::calculus::{residue_at, QuadraticFactor};

    fn q(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
        Quaternion::from_ints(w, x, y, z)
    }

    /// t^3 + (2j + k) t^2 - (1 + 2i) t - k
    pub(crate) fn example_a() -> QuaternionPolynomial {
        QuaternionPolynomial::new(vec![q(0, 0, 0, -1), q(-1, -2, 0, 0), q(0, 0, 2, 1), q(1, 0, 0, 0)])
    }

    pub(crate) fn example_problem(n: u32) -> SynthesisProblem {
        let f = QuadraticFactor::new(int(0), int(4), n).unwrap();
        SynthesisProblem::new(example_a(), PoleStructure::single(f)).unwrap()
    }

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn degree_formula() {
        assert_eq!(example_problem(4).numerator_degree(), 0);
        assert_eq!(example_problem(6).numerator_degree(), 4);
        let f = QuadraticFactor::new(int(0), int(4), 3).unwrap();
        assert!(matches!(
            SynthesisProblem::new(example_a(), PoleStructure::single(f)),
            Err(Error::NegativeDegree(-2))
        ));
        assert!(example_problem(5).is_i_reduced());
    }

    #[test]
    fn kernels_grow_with_multiplicity() {
        assert_eq!(build_residue_system(&example_problem(4)).dimension(), 0);
        let s5 = build_residue_system(&example_problem(5));
        assert_eq!(s5.dimension(), 1);
        let mu = &s5.basis()[0];
        assert!(mu == &p(&[7036, 0, -89]) || mu == &p(&[-7036, 0, 89]), "{mu}");
        let s6 = build_residue_system(&example_problem(6));
        assert_eq!(s6.dimension(), 2);
        assert_eq!(s6.relations().rows(), 3);
    }

    #[test]
    fn kernel_elements_have_zero_residues() {
        let pr = example_problem(6);
        let s = build_residue_system(&pr);
        let f = &pr.poles().factors()[0];
        for mu in s.basis() {
            for h in pr.hodograph(mu) {
                assert!(residue_at(&h, f).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn basis_route_matches_direct_integration() {
        let pr = example_problem(7);
        let s = build_residue_system(&pr);
        let y: Vec<Rational> = (0..s.dimension())
            .map(|k| rat(123456789 + 1000 * k as i64, 987654 - 7 * k as i64))
            .collect();
        let mu = s.combine(&y);
        assert_eq!(s.coordinates(&mu).unwrap(), y);
        assert_eq!(synthesize_in_space(&pr, &s, &mu).unwrap(), synthesize_curve(&pr, &mu).unwrap());
        assert!(s.coordinates(&p(&[0, 1])).is_none());
        assert!(matches!(
            synthesize_in_space(&pr, &s, &p(&[0, 1])),
            Err(Error::NonzeroResidue { .. })
        ));
    }

    #[test]
    fn curve_is_ph_and_tangent() {
        let pr = example_problem(6);
        let mu = Polynomial::new(vec![int(1), int(0), int(0), int(0), rat(11, 53264)]);
        let c = synthesize_curve(&pr, &mu).unwrap();
        assert!(c.is_bounded());
        assert_eq!(c.eval(&int(0)).unwrap(), [int(0), int(0), int(0)]);
        let d = c.derivative();
        let speed2 = d.iter().fold(RationalFunction::zero(), |acc, f| &acc + &(f * f));
        let expected = RationalFunction::new(&mu * &pr.norm(), pr.alpha().clone());
        assert_eq!(speed2, &expected * &expected);
        for (i, f) in d.iter().enumerate() {
            assert_eq!(f, &pr.hodograph(&mu)[i]);
        }
        let cp = closure_point(&c).unwrap();
        assert_eq!(c.reparameterize(&int(0), &int(1), &int(1), &int(0)).unwrap().eval(&int(0)).unwrap(), cp);
    }

    #[test]
    fn nonkernel_numerator_is_rejected() {
        let pr = example_problem(5);
        assert!(matches!(
            synthesize_curve(&pr, &Polynomial::one()),
            Err(Error::NonzeroResidue { .. })
        ));
        assert_eq!(synthesize_curve(&pr, &Polynomial::zero()).unwrap(), RationalCurve::zero());
    }

    #[test]
    fn circle_closes_at_minus_one() {
        let c = RationalCurve::new([p(&[1, 0, -1]), p(&[0, 2]), p(&[])], p(&[1, 0, 1]));
        assert_eq!(closure_point(&c).unwrap(), [int(-1), int(0), int(0)]);
        let unbounded = RationalCurve::new([p(&[0, 0, 0, 1]), p(&[]), p(&[])], p(&[1, 0, 1]));
        assert!(matches!(closure_point(&unbounded), Err(Error::Unbounded(0))));
    }

    #[test]
    fn decomposition_resums() {
        let den = &p(&[1, 0, 1]).pow(2) * &p(&[2, 0, 1]);
        let c = RationalCurve::new([p(&[1, 2, 3, 4, 5, 6]), p(&[0, 0, 1]), p(&[7])], den);
        let d = elementary_decomposition(&c).unwrap();
        assert_eq!(d.summands.len(), 2);
        assert_eq!(d.sum(), c);

        let pr = example_problem(6);
        let mu = Polynomial::new(vec![int(1), int(0), int(0), int(0), rat(11, 53264)]);
        let r0 = synthesize_curve(&pr, &mu).unwrap();
        let d = elementary_decomposition(&r0).unwrap();
        assert_eq!(d.summands.len(), 1);
        assert_eq!(d.summands[0].factor, p(&[4, 0, 1]));
        assert_eq!(d.sum(), r0);
    }

    #[test]
    fn polynomial_solutions_are_flagged() {
        let pr = example_problem(6);
        assert!(pr.polynomial_solution(&pr.alpha().clone()));
        assert!(!pr.polynomial_solution(&p(&[1])));
    }

    #[test]
    fn averages() {
        let pr = example_problem(6);
        let mu0 = Polynomial::new(vec![int(1), int(0), int(0), int(0), rat(11, 53264)]);
        let s = Solution::new(pr.clone(), mu0.clone()).unwrap();
        let one = average_solutions(std::slice::from_ref(&s), &[int(1)]).unwrap();
        assert_eq!(one.curve, s.curve);
        let two = average_solutions(&[s.clone(), s.clone()], &[int(1), int(1)]).unwrap();
        assert_eq!(two.mu, mu0.scale(&int(2)));
        assert_eq!(two.curve, synthesize_curve(&pr, &two.mu).unwrap());
    }
}
