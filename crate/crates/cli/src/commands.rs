//! The four subcommands, as library functions returning their output text
//! or bundle.

use phforge_core::geometry::{sample_curve, sample_speed, solution_speed};
use phforge_core::hull::HullVerdict;
use phforge_core::{
    average_solutions, build_gram_slice, build_residue_system, certify_regular_of_degree,
    closure_point, convex_hull_contains_origin, i_reduce, sdp_feasible_point_with,
    synthesize_in_space, tangent_indicatrix, FeasibilityStatus, HullCertificate, Polynomial,
    QuaternionPolynomial, Rational, SdpOptions, Solution,
};
use serde::Serialize;

use crate::bundle::{sample_poses, speed_minimum, BundleParts, Certificate, CurveBundle, Diagnostics};
use crate::config::ProblemConfig;
use crate::error::CliError;
use crate::export::{self, Format};

pub const HULL_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, Serialize)]
pub struct HullReport {
    pub samples: usize,
    pub residual: f64,
    pub gap: f64,
    pub direction: [f64; 3],
    /// `[sample index, weight]` pairs of the convex combination.
    pub weights: Vec<(usize, f64)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub i_reduced: bool,
    /// `true`, `false` or `"indeterminate"`.
    pub hull: serde_json::Value,
    pub certificate: HullReport,
}

pub fn verdict_value(v: HullVerdict) -> serde_json::Value {
    match v {
        HullVerdict::Contains => true.into(),
        HullVerdict::Separated => false.into(),
        HullVerdict::Indeterminate => "indeterminate".into(),
    }
}

fn verdict_name(v: HullVerdict) -> &'static str {
    match v {
        HullVerdict::Contains => "true",
        HullVerdict::Separated => "false",
        HullVerdict::Indeterminate => "indeterminate",
    }
}

pub fn hull_certificate(a: &QuaternionPolynomial, samples: usize) -> Result<HullCertificate, CliError> {
    let t = tangent_indicatrix(a)?;
    Ok(convex_hull_contains_origin(&t, samples.max(16), HULL_TOLERANCE))
}

pub fn cmd_check(cfg: &ProblemConfig, samples: usize) -> Result<CheckReport, CliError> {
    let red = i_reduce(&cfg.generator)?;
    let cert = hull_certificate(&cfg.generator, samples)?;
    Ok(CheckReport {
        i_reduced: red.was_reduced(),
        hull: verdict_value(cert.verdict),
        certificate: HullReport {
            samples: samples.max(16),
            residual: cert.residual,
            gap: cert.gap,
            direction: cert.direction,
            weights: cert.weights,
        },
    })
}

#[derive(Clone, Debug, Default)]
pub struct SynthOptions {
    pub margin: Option<f64>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub force: bool,
}

/// Runs the pipeline: hull test, residue system, Gram slice, positivity
/// search, integration and the exact regularity check.
pub fn cmd_synth(cfg: &ProblemConfig, opts: &SynthOptions) -> Result<CurveBundle, CliError> {
    let samples = opts.samples.unwrap_or_else(|| cfg.samples());
    let hull = hull_certificate(&cfg.generator, samples)?;
    if hull.verdict == HullVerdict::Separated && !opts.force {
        return Err(CliError::HullFails);
    }

    let problem = cfg.problem()?;
    let m = problem.numerator_degree();
    let space = build_residue_system(&problem);
    if space.dimension() == 0 {
        return Err(CliError::EmptyKernel { degree: m });
    }

    let (mu, min_eigenvalue) = match &cfg.mu {
        Some(mu) => {
            if !space.contains(mu) {
                return Err(CliError::Field {
                    field: "options.mu".into(),
                    message: "not in the solution space: some residue is nonzero".into(),
                });
            }
            (mu.clone(), None)
        }
        None => positive_numerator(cfg, opts, &problem, &space)?,
    };

    let cert = certify_regular_of_degree(&mu, m);
    if !cert.regular {
        return Err(CliError::NotPositive(format!(
            "mu has {} real roots, degree {:?} of {m}",
            cert.real_roots,
            mu.degree()
        )));
    }
    let curve = synthesize_in_space(&problem, &space, &mu)?;
    let speed = solution_speed(&cfg.generator, problem.alpha(), &mu);
    let closure = closure_point(&curve)?;
    let diagnostics = Diagnostics {
        kernel_dimension: space.dimension(),
        certificate: Certificate::new(&cert, &mu),
        closure_point: closure.map(|c| c.to_string()),
        min_eigenvalue,
        speed_polar_minimum: speed_minimum(&speed, samples),
        hull: verdict_name(hull.verdict).to_string(),
    };
    Ok(CurveBundle::new(BundleParts {
        generator: &cfg.generator,
        poles: cfg.to_raw().poles,
        alpha: problem.alpha(),
        mu: &mu,
        curve: &curve,
        diagnostics,
        samples,
    }))
}

fn positive_numerator(
    cfg: &ProblemConfig,
    opts: &SynthOptions,
    problem: &phforge_core::SynthesisProblem,
    space: &phforge_core::SolutionSpace,
) -> Result<(Polynomial, Option<f64>), CliError> {
    let slice = build_gram_slice(space);
    let base = SdpOptions {
        margin: opts.margin.or(cfg.margin).unwrap_or(SdpOptions::default().margin),
        seed: opts.seed.or(cfg.seed),
        ..SdpOptions::default()
    };
    let weights = cfg.weights.clone().unwrap_or_else(|| vec![Rational::from_integer(1.into())]);
    let mut solutions = Vec::with_capacity(weights.len());
    let mut lambda = f64::INFINITY;
    for i in 0..weights.len() {
        let seed = if weights.len() > 1 {
            Some(base.seed.unwrap_or(0) + i as u64)
        } else {
            base.seed
        };
        let r = sdp_feasible_point_with(&slice, &SdpOptions { seed, ..base.clone() });
        if r.status != FeasibilityStatus::Feasible {
            return Err(CliError::NotPositive(format!(
                "{:?}, smallest eigenvalue {:.3e} against margin {:.1e}",
                r.status, r.min_eigenvalue, base.margin
            )));
        }
        lambda = lambda.min(r.min_eigenvalue);
        let mu = r.witness_mu.expect("feasible result carries mu");
        if weights.len() == 1 {
            return Ok((mu, Some(lambda)));
        }
        solutions.push(Solution::in_space(problem.clone(), space, mu)?);
    }
    let mu = average_solutions(&solutions, &weights)?.mu;
    Ok((mu, Some(lambda)))
}

pub fn cmd_sample(bundle: &CurveBundle, n: usize, format: Format, view: [f64; 3]) -> Result<String, CliError> {
    if n == 0 {
        return Err(CliError::Field {
            field: "samples".into(),
            message: "need at least one sample".into(),
        });
    }
    let curve = bundle.exact_curve()?;
    let points = sample_curve(&curve, n);
    let speed = || -> Result<Vec<f64>, CliError> {
        let l = solution_speed(&bundle.generator()?, &bundle.alpha()?, &bundle.mu()?);
        Ok(sample_speed(&l, n))
    };
    Ok(match format {
        Format::Csv => export::polyline_csv(&points),
        Format::Obj => export::polyline_obj(&points),
        Format::Json => export::polyline_json(&points, &speed()?),
        Format::Svg => export::svg(&points, &speed()?, view)?,
    })
}

pub fn cmd_frames(bundle: &CurveBundle, n: usize, format: Format) -> Result<String, CliError> {
    if n < 2 {
        return Err(CliError::Field {
            field: "samples".into(),
            message: "need at least two poses".into(),
        });
    }
    let poses = sample_poses(&bundle.generator()?, &bundle.exact_curve()?, n);
    match format {
        Format::Json => Ok(export::poses_json(&poses)),
        Format::Csv => Ok(export::poses_csv(&poses)),
        Format::Obj | Format::Svg => Err(CliError::Format(format!("{format:?} for frames").to_lowercase())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(n: u32, extra: &str) -> ProblemConfig {
        ProblemConfig::parse(&format!(
            r#"{{"quaternion": [["0","0","0","-1"], ["-1","-2","0","0"], ["0","0","2","1"], ["1","0","0","0"]],
                "poles": [{{"b": "0", "c": "4", "multiplicity": {n}}}], "options": {{{extra}}}}}"#
        ))
        .unwrap()
    }

    #[test]
    fn exit_codes_follow_the_kernel() {
        let e = cmd_synth(&config(4, ""), &SynthOptions::default()).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let e = cmd_synth(&config(5, ""), &SynthOptions::default()).unwrap_err();
        assert_eq!(e.exit_code(), 3);
    }

    #[test]
    fn sixth_power_synthesizes() {
        let b = cmd_synth(&config(6, "\"samples\": 64"), &SynthOptions::default()).unwrap();
        assert!(b.diagnostics.certificate.regular);
        assert_eq!(b.diagnostics.kernel_dimension, 2);
        assert_eq!(b.polyline.len(), 64);
        assert!(b.sample_deviation().unwrap() < 1e-10);
        assert!(b.diagnostics.speed_polar_minimum > 0.0);
    }

    #[test]
    fn explicit_mu_is_checked() {
        let b = cmd_synth(&config(6, "\"mu\": [\"1\", \"0\", \"0\", \"0\", \"11/53264\"]"), &SynthOptions::default()).unwrap();
        assert_eq!(b.mu, vec!["1", "0", "0", "0", "11/53264"]);
        assert_eq!(b.diagnostics.min_eigenvalue, None);
        let e = cmd_synth(&config(6, "\"mu\": [\"0\", \"1\"]"), &SynthOptions::default()).unwrap_err();
        assert_eq!(e.exit_code(), 4);
    }

    #[test]
    fn weighted_average_of_seeded_solutions() {
        let cfg = config(6, "\"weights\": [\"1\", \"2\"], \"seed\": 3, \"samples\": 32");
        let b = cmd_synth(&cfg, &SynthOptions::default()).unwrap();
        assert!(b.diagnostics.certificate.regular);
    }

    #[test]
    fn trivial_generator_fails_the_hull_test() {
        let cfg = ProblemConfig::parse(
            r#"{"quaternion": [["1","0","0","0"]], "poles": [{"b": "0", "c": "1", "multiplicity": 2}]}"#,
        )
        .unwrap();
        let r = cmd_check(&cfg, 64).unwrap();
        assert_eq!(r.hull, serde_json::Value::Bool(false));
        assert!(r.i_reduced);
        assert_eq!(cmd_synth(&cfg, &SynthOptions::default()).unwrap_err().exit_code(), 3);
    }
}
