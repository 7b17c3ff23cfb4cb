//! Output tripartite entanglement spectra for three cavity modes resonantly
//! coupled to an ensemble of strongly driven three-level Λ atoms.
//!
//! The pipeline runs
//! [`dressed_basis`] → [`gain_loss_matrices`] → [`transfer_cofactor`] /
//! [`transfer_numeric`] → [`spectra_printed`] / [`spectra_composed`], and the
//! [`sweep`] module drives it over analyzing frequency or laser detuning.

pub mod coeffs;
pub mod dressed;
pub mod error;
pub mod linalg;
pub mod params;
pub mod selftest;
pub mod spectra;
pub mod sweep;
pub mod transfer;

pub use coeffs::{gain_loss_matrices, CoeffMatrices};
pub use dressed::{
    decay_rates, dressed_basis, steady_populations, DressedBasis, RateSet, SteadyState,
};
pub use error::{Error, Result};
pub use linalg::{det3, invert3, ComplexMatrix3};
pub use params::SystemParams;
pub use spectra::{
    spectra, spectra_composed, spectra_printed, verdict, Correlation, SpectrumPoint, Variant,
    ENTANGLEMENT_BOUND,
};
pub use sweep::{
    find_minimum, sweep_detuning, sweep_frequency, threshold_crossings, Axis, Grid, SweepTable,
};
pub use transfer::{
    drift_determinant, drift_matrix, transfer, transfer_cofactor, transfer_numeric, TransferMatrix,
    TransferRoute,
};

pub use num_complex::Complex64;
