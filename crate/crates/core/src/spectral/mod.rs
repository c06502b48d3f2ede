//! Adjacency spectra, signed p-energies, and closed-form spectra of the
//! graph families.

mod closed_form;
mod energy;
mod jacobi;
mod quotient;

pub use closed_form::closed_form_spectrum;
pub use energy::{energy, energy_of_values, path_positive_energy, EnergyPair, Spectrum, EPS_ZERO};
pub use jacobi::{JacobiWorkspace, MAX_SWEEPS};
pub use quotient::{
    negative_bracket, poly_negative_root, quotient_char_poly, quotient_matrix, real_cubic_roots, QuotientPoly,
};

use thiserror::Error;

use crate::family::FamilyError;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },
    #[error("polynomial has no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("exponent {0} must be >= 1")]
    Exponent(f64),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// Adjacency spectrum of `g`, classified with [`EPS_ZERO`].
pub fn eigenvalues(g: &Graph) -> Result<Spectrum, SpectralError> {
    let mut values = Vec::with_capacity(g.order());
    JacobiWorkspace::new().adjacency_eigenvalues(g, &mut values)?;
    Ok(Spectrum::new(values))
}
