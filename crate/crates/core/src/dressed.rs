//! Semiclassical dressed basis of the driven Λ atom, its steady state and
//! the dressed-state decay rates.
//!
//! Sign conventions are kept throughout: `s = -Δ/d` is negative for a
//! positive laser detuning, which makes both `c1` and `c2` negative.

use std::f64::consts::SQRT_2;

use crate::error::{Error, Result};
use crate::params::{check_positive, SystemParams};

/// Dressed-state amplitudes and the effective cavity couplings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DressedBasis {
    /// Generalized Rabi frequency √(Δ² + 2Ω²).
    pub d: f64,
    pub c: f64,
    pub s: f64,
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    /// Cavity detuning δ₁ = d = −δ₂ = −δ₃ that puts all three modes on a
    /// dressed resonance.
    pub cavity_detuning: f64,
}

impl DressedBasis {
    /// Rows are |0⟩, |+⟩, |−⟩ expanded on the bare states |1⟩, |2⟩, |3⟩.
    pub fn transformation(&self) -> [[f64; 3]; 3] {
        let (c, s) = (self.c, self.s);
        let h = c / SQRT_2;
        [
            [-h, h, s],
            [0.5 * (1.0 + s), 0.5 * (1.0 - s), h],
            [0.5 * (1.0 - s), 0.5 * (1.0 + s), -h],
        ]
    }
}

/// Steady-state dressed populations in the absence of cavity fields.
/// The `+`/`−` coherence is taken to vanish.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteadyState {
    pub rho00: f64,
    pub rhopp: f64,
    pub rhomm: f64,
}

/// Dressed-state decay rates together with Γ and the coupling-weighted
/// rates e₁..e₄ that enter the cavity-mode coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateSet {
    /// γ₊₋ = γ₋₊
    pub gpm: f64,
    /// γ₊₀ = γ₋₀
    pub gp0: f64,
    /// γ₀₊ = γ₀₋
    pub g0p: f64,
    pub gc: f64,
    /// Dephasing γ_ph^{0+} = γ_ph^{0−}
    pub gph0p: f64,
    /// Dephasing γ_ph^{+−}
    pub gphpm: f64,
    pub big_gamma: f64,
    pub e1: f64,
    pub e2: f64,
    pub e3: f64,
    pub e4: f64,
}

pub fn dressed_basis(params: &SystemParams) -> Result<DressedBasis> {
    if !(params.omega_rabi.is_finite() && params.omega_rabi > 0.0) {
        return Err(Error::InvalidParameter {
            name: "omega_rabi",
            value: params.omega_rabi,
            reason: "dressing requires a positive Rabi frequency",
        });
    }
    params.validate()?;
    let omega = params.omega_rabi;
    let delta = params.delta;
    let d = (delta * delta + 2.0 * omega * omega).sqrt();
    let c = SQRT_2 * omega / d;
    let s = -delta / d;
    Ok(DressedBasis {
        d,
        c,
        s,
        c1: 0.5 * s * (1.0 - s),
        c2: 0.5 * s * (1.0 + s),
        c3: 0.5 * c * c,
        cavity_detuning: d,
    })
}

pub fn steady_populations(basis: &DressedBasis) -> SteadyState {
    let c2 = basis.c * basis.c;
    let s2 = basis.s * basis.s;
    let norm = 1.0 + 3.0 * s2 * s2;
    let side = s2 * (1.0 + s2) / norm;
    SteadyState {
        rho00: c2 * c2 / norm,
        rhopp: side,
        rhomm: side,
    }
}

pub fn decay_rates(basis: &DressedBasis, gamma: f64) -> Result<RateSet> {
    check_positive("gamma", gamma)?;
    let c2 = basis.c * basis.c;
    let s2 = basis.s * basis.s;

    // Each rate is γ times a dimensionless factor, so scaling γ scales every
    // field identically.
    let gpm = gamma * (0.25 * c2 * (1.0 + s2));
    let gp0 = gamma * (0.5 * s2 * (1.0 + s2));
    let g0p = gamma * (0.5 * c2 * c2);
    let gc = gamma * (0.5 * c2 * s2);
    let gph0p = gamma * (c2 * s2);
    let gphpm = gamma * (0.5 * c2 * c2);

    // γ₋₀ = γ₊₀ and γ_ph^{0−} = γ_ph^{0+}
    let big_gamma = gph0p + 0.5 * (gpm + gp0 + gp0 + g0p) + 0.25 * (gph0p + gphpm);

    let DressedBasis {
        c1, c2: cc2, c3, ..
    } = *basis;
    Ok(RateSet {
        gpm,
        gp0,
        g0p,
        gc,
        gph0p,
        gphpm,
        big_gamma,
        e1: big_gamma * c1 - gc * c3,
        e2: big_gamma * c3 - gc * c1,
        e3: big_gamma * cc2 + gc * c3,
        e4: big_gamma * c3 + gc * cc2,
    })
}
