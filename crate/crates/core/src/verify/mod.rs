//! Verification harness: exhaustive bound checks over connected graphs,
//! closed-form family checks, tabulated values and randomised witnesses.

mod appendix;
mod bounds;
mod configurations;
mod exhaustive;
mod family;
mod report;
mod table1;

use thiserror::Error;

use crate::enumeration::EnumError;
use crate::family::{FamilyError, FamilyKind};
use crate::spectral::SpectralError;

pub use appendix::{
    appendix_sign_claims, complete_minus_edge_cube, gadget_quartic_at_cbrt4, pendant_cubic_at_cbrt3,
    Anchor, SignClaim, ANCHOR_TOL, SIGN_MAX_ORDER,
};
pub use bounds::{
    bound_f, bound_g, bound_star_clique, chain_checks, f_chain_endpoint, g_chain_endpoint,
    tabulated_cases, BoundCase, BoundName, ChainCheck, CHAIN_MAX_S, CHAIN_SLACK,
};
pub use configurations::{
    verify_configuration_lemmas, verify_configurations, witness, Configuration,
    ConfigurationReport, ConfigurationSummary, Witness, DEFAULT_SAMPLES, DEFAULT_SEED,
    WITNESS_MAX_ORDER,
};
pub use exhaustive::{
    default_depth, plan, run_unit, verify_exhaustive, verify_negative, verify_positive, Checker,
    ExhaustiveOptions, WorkUnit, EXHAUSTIVE_MAX_ORDER,
};
pub use family::{
    lemma_bound, subdivided_star_structure, verify_family, verify_family_lemma, verify_family_with,
    FamilyReport,
    FamilyRow, LemmaBound, AGREEMENT_TOL, NUMERIC_MAX_ORDER,
};
pub use report::{
    Bound, EnergyReport, Exceptional, Finding, Margins, OrderCount, Side, VerificationReport,
    EQUALITY_TOL, MINIMIZERS_PER_BOUND, SLACK,
};
pub use table1::{round3, verify_table1, Table1Row, TABLE_TOLERANCE};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("empty order range {lo}..={hi}")]
    Range { lo: usize, hi: usize },
    #[error("exponent must be finite and >= 1, got {0}")]
    Exponent(f64),
    #[error("no closed-form check for {0:?}")]
    Unsupported(FamilyKind),
    #[error("{kind:?} bound needs n >= {min}, got {n}")]
    LemmaRange { kind: FamilyKind, n: usize, min: usize },
    #[error("invalid bound arguments: {0}")]
    BoundArgs(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
