//! Positive and negative p-energies of graph spectra, closed-form spectra of
//! clique-like families, isomorph-free enumeration of small connected graphs,
//! and an exhaustive bound-checking harness.

pub mod enumeration;
pub mod family;
pub mod gadgets;
pub mod graph;
pub mod graph6;
pub mod par;
pub mod spectral;
pub mod verify;

pub use family::{build_family, FamilyError, FamilyKind, FamilySpec};
pub use gadgets::{gadget_catalog, TableEntry};
pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use spectral::{
    closed_form_spectrum, eigenvalues, energy, path_positive_energy, EnergyPair, Spectrum,
    SpectralError, EPS_ZERO,
};
