//! Exact construction of closed rational Pythagorean-hodograph space curves
//! and their rational framing motions.
//!
//! The pipeline: a quaternion polynomial `A` fixes the tangent direction
//! `A i A*`; a prescribed denominator `alpha` of irreducible quadratics fixes
//! the poles; the numerators `mu` for which `mu A i A* / alpha` has a rational
//! antiderivative form the kernel of an exact residue system; a semidefinite
//! search over Gram matrices then selects a positive `mu`, which makes the
//! curve regular.

pub mod arith;
pub mod calculus;
pub mod error;
pub mod gaussian;
pub mod geometry;
pub mod hull;
pub mod linalg;
pub mod poly;
pub mod positivity;
pub mod quadrature;
pub mod quaternion;
pub mod ratfunc;
pub mod sdp;
pub mod sturm;
pub mod synthesis;

pub use arith::{parse_rational, rationalize, Rational};
pub use calculus::{
    hermite_antiderivative, partial_fractions, residue_at, ExtensionElement, PartialFractions,
    PoleStructure, QuadraticFactor,
};
pub use error::{Error, Result};
pub use gaussian::{Gaussian, GaussianPolynomial};
pub use geometry::{
    convex_hull_contains_origin, euler_rodriguez_pose, sample_motion, solution_speed, speed_function,
    tangent_indicatrix, FramePose, HomogeneousPoint, TangentIndicatrix,
};
pub use hull::{HullCertificate, HullVerdict};
pub use linalg::RatMatrix;
pub use poly::{Poly, Polynomial};
pub use positivity::{
    build_gram_slice, certify_regular, certify_regular_of_degree, GramSlice, RegularityCertificate,
};
pub use quaternion::{
    i_reduce, rotate_vector, ComplexPair, IReduction, Quaternion, QuaternionPolynomial,
    VectorPolynomial,
};
pub use ratfunc::RationalFunction;
pub use sdp::{sdp_feasible_point, sdp_feasible_point_with, FeasibilityResult, FeasibilityStatus, SdpOptions};
pub use synthesis::{
    average_solutions, build_residue_system, closure_point, elementary_decomposition,
    synthesize_curve, synthesize_in_space, RationalCurve, Solution, SolutionSpace, SynthesisProblem,
};
pub use sturm::{sturm_real_root_count, ExtendedReal};
