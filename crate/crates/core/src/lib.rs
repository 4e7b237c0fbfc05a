//! Bilinear depth-3 circuits over composite moduli.
//!
//! A bilinear circuit here is a sum of products of two linear forms, one over
//! an x-bank and one over a y-bank of variables, with constant coefficients
//! drawn from `Z_m`. For moduli with at least two distinct prime factors such
//! circuits can compute *representations* of the dot product and of the matrix
//! product with far fewer input-dependent multiplications than the exact
//! values require. A representation is correct coefficient by coefficient:
//! every coefficient of the computed polynomial agrees with the target modulo
//! at least one prime-power divisor of `m`, under one of three precise notions
//! (alternative, 0-a-strong, 1-a-strong).
//!
//! The crate provides:
//! - exact arithmetic over `Z_m` with explicit factorizations ([`modring`]),
//! - sparse multivariate polynomials over `Z_m` ([`polynomial`]),
//! - checkers and composition rules for the representation notions
//!   ([`representation`]),
//! - the weak-OR symmetric polynomial underlying the constructions
//!   ([`orpoly`]),
//! - the circuit object with an instrumented cost model ([`circuit`]),
//! - the dot-product and matrix-product constructions with verifiers
//!   ([`construct`]).

pub mod circuit;
pub mod construct;
pub mod error;
pub mod matrix;
pub mod modring;
pub mod orpoly;
pub mod polynomial;
pub mod representation;

pub use circuit::{BilinearCircuit, BilinearGate, CostMeter};
pub use construct::{
    build_dot_circuit, build_s2_circuit, count_dot_gates, count_s2_gates, dot_target,
    gate_count_bound, matmul_rep, matmul_rep_unchecked, s2_target, surplus_matrix,
    verify_dot_circuit, verify_matmul_probes, verify_s2_circuit, BenchRow, DotVerification,
    IndexEncoding, S2Verification, SurplusMatrix,
};
pub use error::{Error, Result};
pub use matrix::ModMatrix;
pub use modring::{binom_mod_prime, crt_combine, crt_split, Factor, Modulus, Residue, ResidueVector};
pub use orpoly::{build_or_poly, choose_exponents, selector_set, ExponentPlan, SymmetricPoly};
pub use polynomial::{Monomial, Polynomial};
pub use representation::{
    check_alternative, check_one_a_strong, check_representation, check_zero_a_strong, rep_product,
    rep_sum, surplus_of, surpluses_compatible, surpluses_disjoint, RepVerdict, SurplusReport,
    Witness,
};
