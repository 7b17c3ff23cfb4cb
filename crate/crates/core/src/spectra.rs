//! Van Loock–Furusawa correlation spectra of the three output modes.
//!
//! Two variants are provided. [`Variant::Printed`] evaluates the closed
//! spectrum expressions term by term, including their asymmetric sign
//! patterns. [`Variant::Composed`] builds the quadrature transfer arrays and
//! sums input-channel variances for unit-variance, uncorrelated vacuum
//! inputs. The two disagree in internal sign combinations for general `D`;
//! they coincide whenever `D` is diagonal.
//!
//! The input phase quadrature follows Y = −i(a − a†).

use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::transfer::TransferMatrix;

/// Inseparability bound; any correlation strictly below it certifies
/// genuine tripartite entanglement.
pub const ENTANGLEMENT_BOUND: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Printed,
    Composed,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::Printed, Variant::Composed];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Printed => "printed",
            Variant::Composed => "composed",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "printed" => Ok(Variant::Printed),
            "composed" => Ok(Variant::Composed),
            other => Err(format!(
                "unknown variant `{other}` (expected printed|composed)"
            )),
        }
    }
}

/// One of the three correlation combinations, named by mode ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Correlation {
    S123,
    S231,
    S312,
}

impl Correlation {
    pub const ALL: [Correlation; 3] = [Correlation::S123, Correlation::S231, Correlation::S312];

    pub fn as_str(self) -> &'static str {
        match self {
            Correlation::S123 => "S123",
            Correlation::S231 => "S231",
            Correlation::S312 => "S312",
        }
    }
}

impl fmt::Display for Correlation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumPoint {
    /// Sweep coordinate: ω′ for frequency sweeps, Δ for detuning sweeps.
    pub coordinate: f64,
    pub s123: f64,
    pub s231: f64,
    pub s312: f64,
    pub variant: Variant,
    pub entangled: bool,
}

impl SpectrumPoint {
    pub fn new(coordinate: f64, values: [f64; 3], variant: Variant) -> Self {
        let [s123, s231, s312] = values;
        let mut point = SpectrumPoint {
            coordinate,
            s123,
            s231,
            s312,
            variant,
            entangled: false,
        };
        point.entangled = verdict(&point);
        point
    }

    pub fn get(&self, which: Correlation) -> f64 {
        match which {
            Correlation::S123 => self.s123,
            Correlation::S231 => self.s231,
            Correlation::S312 => self.s312,
        }
    }

    pub fn values(&self) -> [f64; 3] {
        [self.s123, self.s231, self.s312]
    }

    pub fn min_value(&self) -> f64 {
        self.s123.min(self.s231).min(self.s312)
    }

    /// Same point relabelled with another sweep coordinate.
    pub fn at(self, coordinate: f64) -> Self {
        SpectrumPoint { coordinate, ..self }
    }
}

/// True iff at least one correlation lies strictly below the bound.
pub fn verdict(point: &SpectrumPoint) -> bool {
    point.values().iter().any(|&v| v < ENTANGLEMENT_BOUND)
}

pub fn spectra(t: &TransferMatrix, variant: Variant) -> SpectrumPoint {
    match variant {
        Variant::Printed => spectra_printed(t),
        Variant::Composed => spectra_composed(t),
    }
}

pub fn spectra_printed(t: &TransferMatrix) -> SpectrumPoint {
    let d = |j: usize, k: usize| t.get(j - 1, k - 1);
    let sq = |z: Complex64| z.norm_sqr();
    let r2 = SQRT_2;

    let s123 = (1..=3)
        .map(|k| sq(d(1, k) * r2 - d(2, k) - d(3, k)))
        .sum::<f64>();

    let s231 = 0.5
        * (1..=3)
            .map(|k| sq(d(2, k) * r2 - d(1, k) - d(3, k)))
            .sum::<f64>()
        + 0.5
            * (1..=3)
                .map(|k| sq(d(2, k) * r2 - d(1, k) + d(3, k)))
                .sum::<f64>();

    // The second group's first term carries +D11 −D21, unlike its siblings.
    let s312 = 0.5
        * (1..=3)
            .map(|k| sq(d(3, k) * r2 - d(1, k) - d(2, k)))
            .sum::<f64>()
        + 0.5
            * (sq(d(3, 1) * r2 + d(1, 1) - d(2, 1))
                + sq(d(3, 2) * r2 - d(1, 2) + d(2, 2))
                + sq(d(3, 3) * r2 - d(1, 3) + d(2, 3)));

    SpectrumPoint::new(t.omega_prime, [s123, s231, s312], Variant::Printed)
}

/// Phase-quadrature transfer: row 1 negates columns 2, 3; rows 2, 3 negate
/// column 1.
fn phase_transfer(t: &TransferMatrix) -> [[Complex64; 3]; 3] {
    let mut y = t.d.0;
    y[0][1] = -y[0][1];
    y[0][2] = -y[0][2];
    y[1][0] = -y[1][0];
    y[2][0] = -y[2][0];
    y
}

pub fn spectra_composed(t: &TransferMatrix) -> SpectrumPoint {
    let x = &t.d.0;
    let y = phase_transfer(t);
    let h = FRAC_1_SQRT_2;

    // V[Q_i ± (Q_j + Q_k)/√2] summed over unit-variance input channels.
    let variance = |q: &[[Complex64; 3]; 3], i: usize, j: usize, k: usize, sign: f64| {
        (0..3)
            .map(|m| (q[i][m] + (q[j][m] + q[k][m]) * (sign * h)).norm_sqr())
            .sum::<f64>()
    };
    let combo = |i, j, k| variance(x, i, j, k, 1.0) + variance(&y, i, j, k, -1.0);

    SpectrumPoint::new(
        t.omega_prime,
        [combo(0, 1, 2), combo(1, 2, 0), combo(2, 0, 1)],
        Variant::Composed,
    )
}
