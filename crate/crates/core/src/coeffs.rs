//! Gain (A) and absorption/coupling (B) coefficients of the reduced
//! cavity-mode master equation.
//!
//! Every entry is g²N times a sum of two (coupling)·(rate)·(population)
//! products. Indices are (row, column) = (first, second) subscript, zero
//! based. B₂₁ carries a `c1 e4` term and B₃₃ uses the steady population
//! ρ₊₊.
//!
//! The entries are used verbatim. With dimensional rates they carry units of
//! rate³ rather than rate, so results are only self-consistent for γ = 1.

use crate::dressed::{decay_rates, dressed_basis, steady_populations};
use crate::error::Result;
use crate::params::SystemParams;

pub type Real3 = [[f64; 3]; 3];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoeffMatrices {
    pub a: Real3,
    pub b: Real3,
}

impl CoeffMatrices {
    pub fn zero() -> Self {
        CoeffMatrices {
            a: [[0.0; 3]; 3],
            b: [[0.0; 3]; 3],
        }
    }

    /// Off-diagonal drift element A_jk − B_jk.
    #[inline]
    pub fn net(&self, j: usize, k: usize) -> f64 {
        self.a[j][k] - self.b[j][k]
    }
}

pub fn gain_loss_matrices(params: &SystemParams) -> Result<CoeffMatrices> {
    let basis = dressed_basis(params)?;
    let pop = steady_populations(&basis);
    let r = decay_rates(&basis, params.gamma)?;

    let (c1, c2, c3) = (basis.c1, basis.c2, basis.c3);
    let (e1, e2, e3, e4) = (r.e1, r.e2, r.e3, r.e4);
    let (p0, pp, pm) = (pop.rho00, pop.rhopp, pop.rhomm);
    let g = params.g2n;

    let a = [
        [
            g * (c1 * e1 * p0 + c3 * e2 * pp),
            g * (c2 * e2 * pp - c3 * e1 * p0),
            g * (c1 * e2 * pp + c3 * e1 * p0),
        ],
        [
            g * (c3 * e3 * p0 - c1 * e4 * pm),
            g * (c2 * e3 * p0 + c3 * e4 * pm),
            g * (c1 * e3 * p0 - c3 * e4 * pm),
        ],
        [
            g * (c3 * e1 * p0 + c1 * e2 * pm),
            g * (c2 * e1 * p0 - c3 * e2 * pm),
            g * (c1 * e1 * p0 + c3 * e2 * pm),
        ],
    ];
    let b = [
        [
            g * (c3 * e2 * p0 + c1 * e1 * pm),
            g * (c2 * e2 * p0 - c3 * e1 * pm),
            g * (c1 * e2 * p0 + c3 * e1 * pm),
        ],
        [
            g * (c3 * e3 * pp - c1 * e4 * p0),
            g * (c2 * e3 * pp + c3 * e4 * p0),
            g * (c1 * e3 * pp - c3 * e4 * p0),
        ],
        [
            g * (c3 * e1 * pp + c1 * e2 * p0),
            g * (c2 * e1 * pp - c3 * e2 * p0),
            g * (c1 * e1 * pp + c3 * e2 * p0),
        ],
    ];
    Ok(CoeffMatrices { a, b })
}
