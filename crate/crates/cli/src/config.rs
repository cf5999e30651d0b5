//! Problem files: a generator `A`, pole factors and solver options.

use phforge_core::{
    parse_rational, PoleStructure, Polynomial, QuadraticFactor, Quaternion, QuaternionPolynomial,
    Rational, SynthesisProblem,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const DEFAULT_SAMPLES: usize = 256;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PoleSpec {
    pub b: String,
    pub c: String,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub margin: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// One positive weight per averaged solution; solution `i` uses seed `seed + i`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<String>>,
    /// Explicit numerator `mu` (ascending), bypassing the positivity search.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<String>>,
}

/// On-disk form. Coefficients are ascending in `t`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfig {
    pub quaternion: Vec<[String; 4]>,
    pub poles: Vec<PoleSpec>,
    #[serde(default)]
    pub options: Options,
}

/// Validated problem.
#[derive(Clone, Debug, PartialEq)]
pub struct ProblemConfig {
    pub generator: QuaternionPolynomial,
    pub factors: Vec<QuadraticFactor>,
    pub margin: Option<f64>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub weights: Option<Vec<Rational>>,
    pub mu: Option<Polynomial>,
}

fn field(path: &str, s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::Field {
        field: path.to_string(),
        message: e.to_string(),
    })
}

fn field_err(path: &str, message: impl Into<String>) -> CliError {
    CliError::Field {
        field: path.to_string(),
        message: message.into(),
    }
}

impl ProblemConfig {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let raw: RawConfig = serde_json::from_str(text).map_err(|e| CliError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Self::from_raw(&raw)
    }

    pub fn from_raw(raw: &RawConfig) -> Result<Self, CliError> {
        let mut coeffs = Vec::with_capacity(raw.quaternion.len());
        for (i, q) in raw.quaternion.iter().enumerate() {
            let c: Vec<Rational> = q
                .iter()
                .enumerate()
                .map(|(j, s)| field(&format!("quaternion[{i}][{j}]"), s))
                .collect::<Result<_, _>>()?;
            let [w, x, y, z]: [Rational; 4] = c.try_into().unwrap();
            coeffs.push(Quaternion::new(w, x, y, z));
        }
        let generator = QuaternionPolynomial::new(coeffs);
        if generator.is_zero() {
            return Err(field_err("quaternion", "generator is the zero polynomial"));
        }

        if raw.poles.is_empty() {
            return Err(field_err("poles", "at least one pole factor is required"));
        }
        let mut factors = Vec::with_capacity(raw.poles.len());
        for (i, p) in raw.poles.iter().enumerate() {
            let b = field(&format!("poles[{i}].b"), &p.b)?;
            let c = field(&format!("poles[{i}].c"), &p.c)?;
            let f = QuadraticFactor::new(b, c, p.multiplicity)
                .map_err(|e| field_err(&format!("poles[{i}]"), e.to_string()))?;
            factors.push(f);
        }
        PoleStructure::new(factors.clone()).map_err(|e| field_err("poles", e.to_string()))?;

        let o = &raw.options;
        if let Some(m) = o.margin {
            if !(m.is_finite() && m > 0.0) {
                return Err(field_err("options.margin", "must be positive"));
            }
        }
        if let Some(n) = o.samples {
            if n < 16 {
                return Err(field_err("options.samples", "must be at least 16"));
            }
        }
        let weights = match &o.weights {
            None => None,
            Some(ws) => {
                if ws.is_empty() {
                    return Err(field_err("options.weights", "empty weight list"));
                }
                let mut out = Vec::with_capacity(ws.len());
                for (i, s) in ws.iter().enumerate() {
                    let path = format!("options.weights[{i}]");
                    let w = field(&path, s)?;
                    if w <= Rational::from_integer(0.into()) {
                        return Err(field_err(&path, "weights must be positive"));
                    }
                    out.push(w);
                }
                Some(out)
            }
        };
        let mu = match &o.mu {
            None => None,
            Some(cs) => Some(Polynomial::new(
                cs.iter()
                    .enumerate()
                    .map(|(i, s)| field(&format!("options.mu[{i}]"), s))
                    .collect::<Result<_, _>>()?,
            )),
        };
        Ok(ProblemConfig {
            generator,
            factors,
            margin: o.margin,
            samples: o.samples,
            seed: o.seed,
            weights,
            mu,
        })
    }

    pub fn problem(&self) -> Result<SynthesisProblem, CliError> {
        let poles = PoleStructure::new(self.factors.clone())?;
        Ok(SynthesisProblem::new(self.generator.clone(), poles)?)
    }

    pub fn samples(&self) -> usize {
        self.samples.unwrap_or(DEFAULT_SAMPLES)
    }

    pub fn to_raw(&self) -> RawConfig {
        let quaternion = self
            .generator
            .coeffs()
            .iter()
            .map(|q| [q.w.to_string(), q.x.to_string(), q.y.to_string(), q.z.to_string()])
            .collect();
        let poles = self
            .factors
            .iter()
            .map(|f| PoleSpec {
                b: f.b().to_string(),
                c: f.c().to_string(),
                multiplicity: f.multiplicity(),
            })
            .collect();
        RawConfig {
            quaternion,
            poles,
            options: Options {
                margin: self.margin,
                samples: self.samples,
                seed: self.seed,
                weights: self.weights.as_ref().map(|w| w.iter().map(|x| x.to_string()).collect()),
                mu: self.mu.as_ref().map(|p| p.coeffs().iter().map(|x| x.to_string()).collect()),
            },
        }
    }

    /// Canonical JSON: reduced rationals, trimmed coefficient lists.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("config serializes")
    }
}
