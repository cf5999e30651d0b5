//! Synthesized curve with its exact data, diagnostics and samples.

use phforge_core::geometry::{sample_curve, sample_speed};
use phforge_core::{
    parse_rational, sample_motion, FramePose, Polynomial, Quaternion, QuaternionPolynomial,
    Rational, RationalCurve, RationalFunction, RegularityCertificate,
};
use serde::{Deserialize, Serialize};

use crate::config::PoleSpec;
use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExactCurve {
    pub numerators: [Vec<String>; 3],
    pub denominator: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub regular: bool,
    pub real_roots: usize,
    pub leading_positive: bool,
    /// Sturm sign changes at -inf and +inf.
    pub sturm_variations: [usize; 2],
    pub degree: Option<usize>,
}

impl Certificate {
    pub fn new(c: &RegularityCertificate, mu: &Polynomial) -> Self {
        Certificate {
            regular: c.regular,
            real_roots: c.real_roots,
            leading_positive: c.leading_positive,
            sturm_variations: [c.variations.0, c.variations.1],
            degree: mu.degree(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub kernel_dimension: usize,
    pub certificate: Certificate,
    pub closure_point: [String; 3],
    /// Smallest eigenvalue of the Gram witness, absent for an explicit `mu`.
    pub min_eigenvalue: Option<f64>,
    /// Smallest sampled value of the speed `|r'| (1 + t^2) / 2`.
    pub speed_polar_minimum: f64,
    /// Hull verdict on the tangent indicatrix: true, false or indeterminate.
    pub hull: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Pose {
    /// Angle `psi` in `[0, pi)` with `t = -cot psi`.
    pub angle: f64,
    /// `None` at the closure point `t = inf`.
    pub parameter: Option<f64>,
    pub position: [f64; 3],
    /// Unit quaternion `[w, x, y, z]`.
    pub rotation: [f64; 4],
    /// Images of `i`, `j`, `k`; the first is the unit tangent.
    pub frame: [[f64; 3]; 3],
}

impl Pose {
    fn new(angle: f64, p: &FramePose) -> Self {
        Pose {
            angle,
            parameter: p.parameter.is_finite().then_some(p.parameter),
            position: p.position,
            rotation: p.rotation,
            frame: p.frame,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveBundle {
    pub generator: Vec<[String; 4]>,
    pub poles: Vec<PoleSpec>,
    pub alpha: Vec<String>,
    pub mu: Vec<String>,
    pub curve: ExactCurve,
    pub diagnostics: Diagnostics,
    pub polyline: Vec<[f64; 3]>,
    pub poses: Vec<Pose>,
}

fn strings(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn parse_poly(field: &str, cs: &[String]) -> Result<Polynomial, CliError> {
    let coeffs = cs
        .iter()
        .enumerate()
        .map(|(i, s)| {
            parse_rational(s).map_err(|e| CliError::Field {
                field: format!("{field}[{i}]"),
                message: e.to_string(),
            })
        })
        .collect::<Result<Vec<Rational>, _>>()?;
    Ok(Polynomial::new(coeffs))
}

/// `psi_k = pi k / n`
pub fn angle(k: usize, n: usize) -> f64 {
    std::f64::consts::PI * k as f64 / n as f64
}

pub fn sample_poses(a: &QuaternionPolynomial, c: &RationalCurve, n: usize) -> Vec<Pose> {
    sample_motion(a, c, n)
        .iter()
        .enumerate()
        .map(|(k, p)| Pose::new(angle(k, n), p))
        .collect()
}

pub fn speed_minimum(l: &RationalFunction, n: usize) -> f64 {
    sample_speed(l, n).into_iter().fold(f64::INFINITY, f64::min)
}

pub struct BundleParts<'a> {
    pub generator: &'a QuaternionPolynomial,
    pub poles: Vec<PoleSpec>,
    pub alpha: &'a Polynomial,
    pub mu: &'a Polynomial,
    pub curve: &'a RationalCurve,
    pub diagnostics: Diagnostics,
    pub samples: usize,
}

impl CurveBundle {
    pub fn new(p: BundleParts<'_>) -> Self {
        let [x, y, z] = p.curve.numerators().clone();
        CurveBundle {
            generator: p
                .generator
                .coeffs()
                .iter()
                .map(|q| [q.w.to_string(), q.x.to_string(), q.y.to_string(), q.z.to_string()])
                .collect(),
            poles: p.poles,
            alpha: strings(p.alpha),
            mu: strings(p.mu),
            curve: ExactCurve {
                numerators: [strings(&x), strings(&y), strings(&z)],
                denominator: strings(p.curve.denominator()),
            },
            diagnostics: p.diagnostics,
            polyline: sample_curve(p.curve, p.samples),
            poses: sample_poses(p.generator, p.curve, p.samples),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("bundle serializes")
    }

    pub fn exact_curve(&self) -> Result<RationalCurve, CliError> {
        let [x, y, z] = &self.curve.numerators;
        let den = parse_poly("curve.denominator", &self.curve.denominator)?;
        if den.is_zero() {
            return Err(CliError::Field {
                field: "curve.denominator".into(),
                message: "zero denominator".into(),
            });
        }
        Ok(RationalCurve::new(
            [
                parse_poly("curve.numerators[0]", x)?,
                parse_poly("curve.numerators[1]", y)?,
                parse_poly("curve.numerators[2]", z)?,
            ],
            den,
        ))
    }

    pub fn generator(&self) -> Result<QuaternionPolynomial, CliError> {
        let mut coeffs = Vec::with_capacity(self.generator.len());
        for (i, q) in self.generator.iter().enumerate() {
            let c = parse_poly(&format!("generator[{i}]"), q)?;
            coeffs.push(Quaternion::new(c.coeff(0), c.coeff(1), c.coeff(2), c.coeff(3)));
        }
        Ok(QuaternionPolynomial::new(coeffs))
    }

    pub fn mu(&self) -> Result<Polynomial, CliError> {
        parse_poly("mu", &self.mu)
    }

    pub fn alpha(&self) -> Result<Polynomial, CliError> {
        parse_poly("alpha", &self.alpha)
    }

    /// Largest distance between the stored polyline and a fresh evaluation
    /// of the exact curve at the same angles.
    pub fn sample_deviation(&self) -> Result<f64, CliError> {
        let c = self.exact_curve()?;
        let fresh = sample_curve(&c, self.polyline.len());
        Ok(fresh
            .iter()
            .zip(&self.polyline)
            .map(|(a, b)| (0..3).map(|i| (a[i] - b[i]).powi(2)).sum::<f64>().sqrt())
            .fold(0.0, f64::max))
    }
}
