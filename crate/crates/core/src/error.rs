use thiserror::Error;

use crate::sweep::Axis;

/// Errors produced anywhere in the spectrum pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// The drift matrix is (numerically) singular: the parameters sit on an
    /// instability threshold and the spectra are undefined there.
    #[error("singular drift matrix (|det| = {det_abs:e})")]
    SingularDrift { det_abs: f64 },

    #[error("singular matrix: pivot modulus {pivot_abs:e} below floor")]
    SingularMatrix { pivot_abs: f64 },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("empty sweep table")]
    EmptyTable,

    #[error("at {axis} = {coordinate}: {source}")]
    AtCoordinate {
        axis: Axis,
        coordinate: f64,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
