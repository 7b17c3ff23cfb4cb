//! Shared inputs for the criterion benches.

use tricav_core::{gain_loss_matrices, CoeffMatrices, SystemParams};

/// Reference parameters (Ω = 35, g²N = 10, γ = 1, κ = 0.1) at the given laser detuning.
pub fn reference_params(delta: f64) -> SystemParams {
    SystemParams::new(35.0, delta, 1.0, 0.1, 10.0).expect("reference parameters are valid")
}

pub fn reference_coeffs(delta: f64) -> CoeffMatrices {
    gain_loss_matrices(&reference_params(delta)).expect("reference parameters are valid")
}
