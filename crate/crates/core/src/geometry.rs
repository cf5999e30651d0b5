//! Geometry over the projective line: tangent indicatrix, speed, frames.
//!
//! Parameters are points `(u : v)` of the projective line with `t = u / v`,
//! so the closure point `t = inf` is `(1 : 0)`. Sampling uses the angle
//! `psi` with `(u, v) = (-cos psi, sin psi)`, which runs through `t` from
//! `-inf` to `+inf` as `psi` goes from 0 to `pi`; the circle angle of the
//! embedding `(u^2 - v^2, 2uv) / (u^2 + v^2)` is `2 psi`.

use std::f64::consts::PI;

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::hull::{hull_contains_origin, HullCertificate, Vec3};
use crate::poly::{eval_form, Polynomial};
use crate::quadrature::periodic_trapezoid;
use crate::quaternion::{i_reduce, rotate_vector, Quaternion, QuaternionPolynomial, VectorPolynomial};
use crate::ratfunc::RationalFunction;
use crate::synthesis::RationalCurve;

/// Point `(u : v)` of the projective line.
#[derive(Clone, Debug, Eq)]
pub struct HomogeneousPoint {
    u: Rational,
    v: Rational,
}

impl PartialEq for HomogeneousPoint {
    fn eq(&self, o: &Self) -> bool {
        &self.u * &o.v == &o.u * &self.v
    }
}

impl HomogeneousPoint {
    pub fn new(u: Rational, v: Rational) -> Result<Self> {
        if u.is_zero() && v.is_zero() {
            return Err(Error::InvalidArgument("(0 : 0) is not a projective point".into()));
        }
        Ok(HomogeneousPoint { u, v })
    }

    pub fn from_parameter(t: Rational) -> Self {
        HomogeneousPoint { u: t, v: Rational::one() }
    }

    pub fn infinity() -> Self {
        HomogeneousPoint {
            u: Rational::one(),
            v: Rational::zero(),
        }
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }

    pub fn v(&self) -> &Rational {
        &self.v
    }

    /// `t = u / v`, `None` at infinity.
    pub fn parameter(&self) -> Option<Rational> {
        (!self.v.is_zero()).then(|| &self.u / &self.v)
    }

    /// Image on the unit circle.
    pub fn circle_point(&self) -> (Rational, Rational) {
        let uu = &self.u * &self.u;
        let vv = &self.v * &self.v;
        let n = &uu + &vv;
        ((&uu - &vv) / &n, (&self.u * &self.v * Rational::from_integer(2.into())) / n)
    }
}

/// Unit tangent `A i A* / A A*` as a vector of forms of degree `2 deg A`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TangentIndicatrix {
    numerator: VectorPolynomial,
    denominator: Polynomial,
    degree: usize,
}

pub fn tangent_indicatrix(a: &QuaternionPolynomial) -> Result<TangentIndicatrix> {
    let degree = 2 * a.degree().ok_or(Error::ZeroPolynomial)?;
    let numerator = rotate_vector(a, &Quaternion::i())?;
    let denominator = a.norm_poly();
    let t = TangentIndicatrix {
        numerator,
        denominator,
        degree,
    };
    assert!(t.is_unit(), "A i A* has norm A A*");
    Ok(t)
}

impl TangentIndicatrix {
    pub fn numerator(&self) -> &VectorPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    /// Degree of the forms.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Exact check `sum num_i^2 = den^2`.
    pub fn is_unit(&self) -> bool {
        let s = self
            .numerator
            .iter()
            .fold(Polynomial::zero(), |acc, p| &acc + &(p * p));
        s == &self.denominator * &self.denominator
    }

    pub fn eval(&self, u: f64, v: f64) -> Vec3 {
        let d = self.denominator.eval_homogeneous_f64(self.degree, u, v);
        [0, 1, 2].map(|i| self.numerator[i].eval_homogeneous_f64(self.degree, u, v) / d)
    }

    /// Samples at `psi_k = pi k / n`, `k = 0 .. n-1`.
    pub fn sample(&self, n: usize) -> Vec<Vec3> {
        (0..n)
            .map(|k| {
                let (u, v) = angle_point(PI * k as f64 / n as f64);
                self.eval(u, v)
            })
            .collect()
    }
}

/// `(u, v)` for the sampling angle `psi`.
pub fn angle_point(psi: f64) -> (f64, f64) {
    (-psi.cos(), psi.sin())
}

/// Normalized `(u, v)` for a parameter `t`, infinite values allowed.
pub fn parameter_point(t: f64) -> (f64, f64) {
    if t.is_infinite() {
        (1.0, 0.0)
    } else if t.abs() <= 1.0 {
        let n = (1.0 + t * t).sqrt();
        (t / n, 1.0 / n)
    } else {
        let s = 1.0 / t;
        let n = (1.0 + s * s).sqrt();
        (1.0 / n, s / n)
    }
}

/// `L(t) = |r'(t)| (1 + t^2) / 2`, the speed with respect to the circle
/// angle. Fails if `|r'|^2` is not a square.
pub fn speed_function(c: &RationalCurve) -> Result<RationalFunction> {
    // r' = (num' D - num D') / D^2 over the common denominator D
    let d = c.denominator();
    let dd = d.derivative();
    let s2 = c
        .numerators()
        .iter()
        .map(|p| &(&p.derivative() * d) - &(p * &dd))
        .fold(Polynomial::zero(), |acc, n| &acc + &(&n * &n));
    let root = s2.sqrt_exact().ok_or(Error::NotPythagorean)?;
    let chart = Polynomial::new(vec![Rational::one(), Rational::zero(), Rational::one()]);
    let speed = RationalFunction::new(&root * &chart, (d * d).scale(&Rational::from_integer(2.into())));
    if speed.is_zero() {
        return Ok(speed);
    }
    let positive = (0..)
        .filter_map(|k: i64| speed.eval(&Rational::from_integer(k.into())))
        .find(|v| !v.is_zero())
        .map_or(true, |v| v > Rational::zero());
    Ok(if positive { speed } else { -speed })
}

/// Speed `L` of the curve integrated from `mu / alpha * A i A*`, read off
/// as `mu A A* (1 + t^2) / (2 alpha)` without integrating. Assumes `mu > 0`.
pub fn solution_speed(a: &QuaternionPolynomial, alpha: &Polynomial, mu: &Polynomial) -> RationalFunction {
    let chart = Polynomial::new(vec![Rational::one(), Rational::zero(), Rational::one()]);
    // cancel the short factor first; mu tends to have long coefficients
    let short = &a.norm_poly() * &chart;
    let g = Polynomial::gcd(&short, alpha);
    RationalFunction::new(
        mu * &short.exact_div(&g).unwrap(),
        alpha.exact_div(&g).unwrap().scale(&Rational::from_integer(2.into())),
    )
}

/// Generator of the direction field `w`: some `A` with `A i A*` a positive
/// multiple of `w` (as rational functions). `|w|^2` must be a square.
pub fn generator_from_direction(w: &VectorPolynomial) -> Result<QuaternionPolynomial> {
    let n2 = w.iter().fold(Polynomial::zero(), |acc, p| &acc + &(p * p));
    if n2.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = n2.sqrt_exact().ok_or(Error::NotPythagorean)?;
    // n - w i = n (1 - T i) rotates i into T = w / n; the factor it picks up
    // vanishes where T = -i and leaves as a right factor in span{1, i}[t].
    let scalar = &n + &w[0];
    if scalar.is_zero() {
        return Ok(QuaternionPolynomial::constant(Quaternion::k()));
    }
    let a = QuaternionPolynomial::from_components([&scalar, &Polynomial::zero(), &-w[2].clone(), &w[1]]);
    Ok(i_reduce(&a)?.reduced)
}

/// Generator of a PH curve's hodograph direction.
pub fn generator_of_curve(c: &RationalCurve) -> Result<QuaternionPolynomial> {
    let d = c.derivative();
    let den = d
        .iter()
        .fold(Polynomial::one(), |acc, f| {
            let g = Polynomial::gcd(&acc, f.denominator());
            (&acc * f.denominator()).exact_div(&g).unwrap()
        });
    let w = [0, 1, 2].map(|i| d[i].numerator() * &den.exact_div(d[i].denominator()).unwrap());
    generator_from_direction(&w)
}

/// Hull test on `samples` points of the indicatrix. Separation must beat a
/// bound on how far the true curve can leave the sampled polygon.
pub fn convex_hull_contains_origin(t: &TangentIndicatrix, samples: usize, tolerance: f64) -> HullCertificate {
    assert!(samples >= 16, "need at least 16 samples");
    let pts = t.sample(samples);
    let mut chord2: f64 = 0.0;
    for k in 0..samples {
        let a = pts[k];
        let b = pts[(k + 1) % samples];
        chord2 = chord2.max((0..3).map(|c| (a[c] - b[c]).powi(2)).sum());
    }
    hull_contains_origin(&pts, tolerance, tolerance + chord2)
}

/// One sample of the framing motion.
#[derive(Clone, Debug, PartialEq)]
pub struct FramePose {
    /// Curve parameter `t`, infinite at the closure point.
    pub parameter: f64,
    pub position: Vec3,
    /// Unit quaternion `(w, x, y, z)`.
    pub rotation: [f64; 4],
    /// Frame vectors `[t, b, c]`: images of `i`, `j`, `k`.
    pub frame: [Vec3; 3],
}

fn rotation_frame(q: &[f64; 4]) -> [Vec3; 3] {
    let [w, x, y, z] = *q;
    [
        [1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y + w * z), 2.0 * (x * z - w * y)],
        [2.0 * (x * y - w * z), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z + w * x)],
        [2.0 * (x * z + w * y), 2.0 * (y * z - w * x), 1.0 - 2.0 * (x * x + y * y)],
    ]
}

/// Float coefficients of a generator and a bounded curve, converted once
/// for repeated evaluation.
struct FloatMotion {
    generator: [Vec<f64>; 4],
    generator_degree: usize,
    numerators: [Vec<f64>; 3],
    denominator: Vec<f64>,
    degree: usize,
}

impl FloatMotion {
    fn new(a: &QuaternionPolynomial, c: &RationalCurve) -> Self {
        assert!(c.is_bounded(), "homogeneous evaluation of an unbounded curve");
        FloatMotion {
            generator: [0, 1, 2, 3].map(|i| a.component(i).to_f64_coeffs()),
            generator_degree: a.degree().unwrap_or(0),
            numerators: c.numerators().clone().map(|p| p.to_f64_coeffs()),
            denominator: c.denominator().to_f64_coeffs(),
            degree: c.denominator().degree().unwrap_or(0),
        }
    }

    fn position(&self, u: f64, v: f64) -> Vec3 {
        let d = eval_form(&self.denominator, self.degree, u, v);
        [0, 1, 2].map(|i| eval_form(&self.numerators[i], self.degree, u, v) / d)
    }

    fn pose(&self, u: f64, v: f64) -> FramePose {
        let q = [0, 1, 2, 3].map(|i| eval_form(&self.generator[i], self.generator_degree, u, v));
        let norm = q.iter().map(|x| x * x).sum::<f64>().sqrt();
        let rotation = q.map(|x| x / norm);
        FramePose {
            parameter: u / v,
            position: self.position(u, v),
            rotation,
            frame: rotation_frame(&rotation),
        }
    }
}

/// Pose at the projective parameter `(u : v)`.
pub fn pose_at(a: &QuaternionPolynomial, c: &RationalCurve, u: f64, v: f64) -> FramePose {
    FloatMotion::new(a, c).pose(u, v)
}

/// Euler-Rodriguez pose at parameter `t`; for `|t| > 1` the evaluation runs
/// in the chart `s = 1/t`.
pub fn euler_rodriguez_pose(a: &QuaternionPolynomial, c: &RationalCurve, t: f64) -> FramePose {
    let (u, v) = parameter_point(t);
    let mut pose = pose_at(a, c, u, v);
    pose.parameter = t;
    pose
}

/// `n` poses at `psi_k = pi k / n`, starting at the closure point, with
/// quaternion signs aligned along the sequence.
pub fn sample_motion(a: &QuaternionPolynomial, c: &RationalCurve, n: usize) -> Vec<FramePose> {
    assert!(n >= 2, "need at least two poses");
    let motion = FloatMotion::new(a, c);
    let mut out: Vec<FramePose> = Vec::with_capacity(n);
    for k in 0..n {
        let (u, v) = angle_point(PI * k as f64 / n as f64);
        let mut pose = motion.pose(u, v);
        if k == 0 {
            pose.parameter = f64::NEG_INFINITY;
        }
        if let Some(prev) = out.last() {
            let dot: f64 = prev.rotation.iter().zip(&pose.rotation).map(|(x, y)| x * y).sum();
            if dot < 0.0 {
                pose.rotation = pose.rotation.map(|x| -x);
            }
        }
        out.push(pose);
    }
    out
}

/// Positions at `psi_k = pi k / n`.
pub fn sample_curve(c: &RationalCurve, n: usize) -> Vec<Vec3> {
    let motion = FloatMotion::new(&QuaternionPolynomial::one(), c);
    (0..n)
        .map(|k| {
            let (u, v) = angle_point(PI * k as f64 / n as f64);
            motion.position(u, v)
        })
        .collect()
}

/// Speed `L` at `psi_k = pi k / n`; the polar plot of `L` over the circle
/// angle `2 psi` shows where the curve is close to singular.
pub fn sample_speed(speed: &RationalFunction, n: usize) -> Vec<f64> {
    let dn = speed.numerator().degree().unwrap_or(0);
    let dd = speed.denominator().degree().unwrap_or(0);
    let deg = dn.max(dd);
    (0..n)
        .map(|k| {
            let (u, v) = angle_point(PI * k as f64 / n as f64);
            speed.numerator().eval_homogeneous_f64(deg, u, v)
                / speed.denominator().eval_homogeneous_f64(deg, u, v)
        })
        .collect()
}

/// `int_R r'(t) dt`, which vanishes for a closed curve. Computed as
/// `int_0^pi r'(t) (1 + t^2) d psi` with the trapezoidal rule.
pub fn closure_integral(c: &RationalCurve) -> Vec3 {
    assert!(c.is_bounded(), "closure integral of an unbounded curve");
    // r' = (N' D - N D') / D^2 with numerator degree at most 2 deg D - 2
    let den = c.denominator();
    let dd = den.degree().unwrap_or(0);
    if dd == 0 {
        return [0.0; 3];
    }
    let d_prime = den.derivative();
    let nums = c
        .numerators()
        .clone()
        .map(|n| (&(&n.derivative() * den) - &(&n * &d_prime)).to_f64_coeffs());
    let den2 = (den * den).to_f64_coeffs();
    periodic_trapezoid(|psi| {
        let (u, v) = angle_point(psi);
        let w = (u * u + v * v) / eval_form(&den2, 2 * dd, u, v);
        [0, 1, 2].map(|i| w * eval_form(&nums[i], 2 * dd - 2, u, v))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::hull::HullVerdict;
    use crate::synthesis::tests::{example_a, example_problem};
    use crate::synthesis::synthesize_curve;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn unit_circle() -> RationalCurve {
        RationalCurve::new([p(&[1, 0, -1]), p(&[0, 2]), p(&[])], p(&[1, 0, 1]))
    }

    #[test]
    fn projective_points() {
        let a = HomogeneousPoint::new(int(2), int(4)).unwrap();
        assert_eq!(a, HomogeneousPoint::from_parameter(Rational::new(1.into(), 2.into())));
        assert!(HomogeneousPoint::new(int(0), int(0)).is_err());
        assert_eq!(HomogeneousPoint::infinity().circle_point(), (int(1), int(0)));
        let (x, y) = a.circle_point();
        assert_eq!(&x * &x + &y * &y, int(1));
    }

    #[test]
    fn indicatrix_of_the_cubic() {
        let t = tangent_indicatrix(&example_a()).unwrap();
        assert_eq!(t.numerator()[0], p(&[-1, 0, 7, 0, -7, 0, 1]));
        assert_eq!(t.denominator(), &p(&[1, 0, 1]).pow(3));
        let c = convex_hull_contains_origin(&t, 64, 1e-9);
        assert_eq!(c.verdict, HullVerdict::Contains);
        let c1 = tangent_indicatrix(&QuaternionPolynomial::one()).unwrap();
        let cert = convex_hull_contains_origin(&c1, 16, 1e-9);
        assert_eq!(cert.verdict, HullVerdict::Separated);
        assert!((cert.direction[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn circle_speed_is_constant() {
        let l = speed_function(&unit_circle()).unwrap();
        assert_eq!(l, RationalFunction::one());
        assert_eq!(speed_function(&RationalCurve::zero()).unwrap(), RationalFunction::zero());
        let bad = RationalCurve::new([p(&[0, 1]), p(&[0, 0, 1]), p(&[])], p(&[1]));
        assert!(matches!(speed_function(&bad), Err(Error::NotPythagorean)));
    }

    #[test]
    fn circle_poses_at_quarter_turns() {
        // generator of the circle's tangent: rotation about k by the angle
        let a = generator_of_curve(&unit_circle()).unwrap();
        let poses = sample_motion(&a, &unit_circle(), 4);
        let expected = [[-1.0, 0.0], [0.0, -1.0], [1.0, 0.0], [0.0, 1.0]];
        for (pose, e) in poses.iter().zip(&expected) {
            assert!((pose.position[0] - e[0]).abs() < 1e-12 && (pose.position[1] - e[1]).abs() < 1e-12, "{:?}", pose.position);
        }
    }

    #[test]
    fn closed_form_speed_matches_the_integrated_curve() {
        let pr = example_problem(6);
        let mu = Polynomial::new(vec![int(1), int(0), int(0), int(0), Rational::new(11.into(), 53264.into())]);
        let c = synthesize_curve(&pr, &mu).unwrap();
        assert_eq!(solution_speed(pr.generator(), pr.alpha(), &mu), speed_function(&c).unwrap());
    }

    #[test]
    fn generator_recovers_direction() {
        let pr = example_problem(6);
        let mu = Polynomial::new(vec![int(1), int(0), int(0), int(0), Rational::new(11.into(), 53264.into())]);
        let c = synthesize_curve(&pr, &mu).unwrap();
        let a = generator_of_curve(&c).unwrap();
        let w = rotate_vector(&a, &Quaternion::i()).unwrap();
        let dir = pr.direction();
        // parallel with a positive factor
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(&w[i] * &dir[j], &w[j] * &dir[i]);
            }
        }
        assert_eq!(a.degree(), Some(3));
    }

    #[test]
    fn frames_and_closure() {
        let pr = example_problem(6);
        let mu = Polynomial::new(vec![int(1), int(0), int(0), int(0), Rational::new(11.into(), 53264.into())]);
        let c = synthesize_curve(&pr, &mu).unwrap();
        let a = pr.generator();
        let pose = euler_rodriguez_pose(a, &c, 0.0);
        let d = c.derivative().map(|f| f.eval_f64(0.0));
        let dn = (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt();
        for k in 0..3 {
            assert!((pose.frame[0][k] - d[k] / dn).abs() < 1e-12);
        }
        let far = euler_rodriguez_pose(a, &c, 1e6);
        let near = euler_rodriguez_pose(a, &c, -1e6);
        for k in 0..3 {
            assert!((far.position[k] - near.position[k]).abs() < 1e-6);
        }
        let dot: f64 = far.rotation.iter().zip(&near.rotation).map(|(x, y)| x * y).sum();
        assert!(dot.abs() > 1.0 - 1e-9);
        let z = closure_integral(&c);
        assert!(z.iter().all(|v| v.abs() < 1e-12), "{z:?}");
    }
}
