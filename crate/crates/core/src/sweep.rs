//! Frequency and detuning sweeps, plus the ordinal read-outs used to compare
//! sampled curves (minima, sub-bound intervals, monotone stretches).

use std::fmt;

use rayon::prelude::*;

use crate::coeffs::gain_loss_matrices;
use crate::error::{Error, Result};
use crate::params::SystemParams;
use crate::spectra::{spectra, Correlation, SpectrumPoint, Variant, ENTANGLEMENT_BOUND};
use crate::transfer::{transfer, TransferRoute};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    OmegaPrime,
    Delta,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::OmegaPrime => "omega_prime",
            Axis::Delta => "delta",
        })
    }
}

/// Uniform grid of `points` samples on `[min, max]`, both ends included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

impl Grid {
    pub const DEFAULT_FREQUENCY: Grid = Grid {
        min: -5.0,
        max: 5.0,
        points: 1001,
    };
    pub const DEFAULT_DETUNING: Grid = Grid {
        min: 0.5,
        max: 20.0,
        points: 391,
    };

    pub fn new(min: f64, max: f64, points: usize) -> Result<Self> {
        let grid = Grid { min, max, points };
        grid.validate()?;
        Ok(grid)
    }

    pub fn validate(&self) -> Result<()> {
        if self.points < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 points, got {}",
                self.points
            )));
        }
        if !(self.min.is_finite() && self.max.is_finite() && self.min < self.max) {
            return Err(Error::InvalidGrid(format!(
                "need finite min < max, got [{}, {}]",
                self.min, self.max
            )));
        }
        Ok(())
    }

    /// Sample coordinates. Written as a weighted mean of the end points so a
    /// grid symmetric about zero is exactly antisymmetric.
    pub fn coordinates(&self) -> Vec<f64> {
        let n = (self.points - 1) as f64;
        (0..self.points)
            .map(|i| {
                if i == 0 {
                    self.min
                } else if i == self.points - 1 {
                    self.max
                } else {
                    let i = i as f64;
                    ((n - i) * self.min + i * self.max) / n
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub axis: Axis,
    /// The held coordinate: Δ for frequency sweeps, ω′ for detuning sweeps.
    pub fixed: f64,
    pub rows: Vec<SpectrumPoint>,
    pub params: SystemParams,
    pub variant: Variant,
    pub route: TransferRoute,
}

impl SweepTable {
    pub fn coordinates(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.coordinate).collect()
    }

    pub fn column(&self, which: Correlation) -> Vec<f64> {
        self.rows.iter().map(|r| r.get(which)).collect()
    }

    /// Rows restricted to `lo <= coordinate <= hi`.
    pub fn window(&self, lo: f64, hi: f64) -> SweepTable {
        SweepTable {
            rows: self
                .rows
                .iter()
                .filter(|r| r.coordinate >= lo && r.coordinate <= hi)
                .copied()
                .collect(),
            ..self.clone()
        }
    }

    /// Every sample is strictly below its predecessor.
    pub fn is_strictly_decreasing(&self, which: Correlation) -> bool {
        self.column(which).windows(2).all(|w| w[1] < w[0])
    }

    /// The global minimum, if it lies strictly inside the sampled range with
    /// larger values on both ends ("first decreases, then increases").
    pub fn interior_minimum(&self, which: Correlation) -> Option<(f64, f64)> {
        let (coord, value) = find_minimum(self, which).ok()?;
        let first = self.rows.first()?;
        let last = self.rows.last()?;
        let inside = coord > first.coordinate && coord < last.coordinate;
        (inside && first.get(which) > value && last.get(which) > value).then_some((coord, value))
    }
}

fn annotate(axis: Axis, coordinate: f64) -> impl FnOnce(Error) -> Error {
    move |e| Error::AtCoordinate {
        axis,
        coordinate,
        source: Box::new(e),
    }
}

/// Earliest failure in coordinate order, so errors do not depend on
/// scheduling.
fn collect_rows(rows: Vec<Result<SpectrumPoint>>) -> Result<Vec<SpectrumPoint>> {
    rows.into_iter().collect()
}

/// Spectra versus ω′ at fixed parameters. Coefficients are computed once.
pub fn sweep_frequency(
    params: &SystemParams,
    grid: Grid,
    variant: Variant,
    route: TransferRoute,
) -> Result<SweepTable> {
    grid.validate()?;
    let coeffs = gain_loss_matrices(params)?;
    let kappa = params.kappa;
    let rows: Vec<Result<SpectrumPoint>> = grid
        .coordinates()
        .into_par_iter()
        .map(|w| {
            transfer(route, &coeffs, kappa, w)
                .map(|t| spectra(&t, variant))
                .map_err(annotate(Axis::OmegaPrime, w))
        })
        .collect();
    Ok(SweepTable {
        axis: Axis::OmegaPrime,
        fixed: params.delta,
        rows: collect_rows(rows)?,
        params: *params,
        variant,
        route,
    })
}

/// Spectra versus Δ at fixed ω′. The whole pipeline reruns per sample; the
/// `delta` of `template` is ignored.
pub fn sweep_detuning(
    template: &SystemParams,
    grid: Grid,
    omega_prime: f64,
    variant: Variant,
    route: TransferRoute,
) -> Result<SweepTable> {
    grid.validate()?;
    if !omega_prime.is_finite() {
        return Err(Error::InvalidParameter {
            name: "omega_prime",
            value: omega_prime,
            reason: "must be finite",
        });
    }
    let rows: Vec<Result<SpectrumPoint>> = grid
        .coordinates()
        .into_par_iter()
        .map(|delta| {
            let params = template.with_delta(delta);
            gain_loss_matrices(&params)
                .and_then(|coeffs| transfer(route, &coeffs, params.kappa, omega_prime))
                .map(|t| spectra(&t, variant).at(delta))
                .map_err(annotate(Axis::Delta, delta))
        })
        .collect();
    Ok(SweepTable {
        axis: Axis::Delta,
        fixed: omega_prime,
        rows: collect_rows(rows)?,
        params: *template,
        variant,
        route,
    })
}

/// Smallest sampled value of `which`; ties go to the smallest coordinate.
pub fn find_minimum(table: &SweepTable, which: Correlation) -> Result<(f64, f64)> {
    let mut best: Option<(f64, f64)> = None;
    for row in &table.rows {
        let v = row.get(which);
        match best {
            Some((_, b)) if v.is_nan() || v >= b => {}
            _ => best = Some((row.coordinate, v)),
        }
    }
    best.ok_or(Error::EmptyTable)
}

/// Maximal runs of consecutive samples with `which` below the bound, as
/// `[first, last]` coordinate pairs.
pub fn threshold_crossings(table: &SweepTable, which: Correlation) -> Vec<(f64, f64)> {
    let mut runs = Vec::new();
    let mut current: Option<(f64, f64)> = None;
    for row in &table.rows {
        if row.get(which) < ENTANGLEMENT_BOUND {
            current = Some(match current {
                Some((start, _)) => (start, row.coordinate),
                None => (row.coordinate, row.coordinate),
            });
        } else if let Some(run) = current.take() {
            runs.push(run);
        }
    }
    runs.extend(current);
    runs
}
