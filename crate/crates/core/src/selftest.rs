//! Invariant suite behind the `selftest` command. Draws are seeded, so a
//! report is reproducible run to run.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeffs::{gain_loss_matrices, CoeffMatrices};
use crate::dressed::{decay_rates, dressed_basis, steady_populations};
use crate::linalg::{det3, ComplexMatrix3};
use crate::params::SystemParams;
use crate::spectra::{spectra, Variant};
use crate::sweep::Grid;
use crate::transfer::{drift_determinant, drift_matrix, transfer_cofactor, transfer_numeric};

const SEED: u64 = 0x7123_5eed;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SelfTestReport {
    pub checks: Vec<Check>,
}

impl SelfTestReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    fn record(&mut self, name: &'static str, worst: f64, tol: f64, draws: usize) {
        self.checks.push(Check {
            name,
            passed: worst <= tol,
            detail: format!("worst {worst:.3e} (tol {tol:.0e}) over {draws} cases"),
        });
    }
}

/// Largest entrywise relative difference of two complex matrices. Entries
/// that are both exactly zero compare equal.
pub fn max_relative_diff(a: &ComplexMatrix3, b: &ComplexMatrix3) -> f64 {
    let mut worst = 0.0f64;
    for j in 0..3 {
        for k in 0..3 {
            worst = worst.max(relative_diff(a.0[j][k], b.0[j][k]));
        }
    }
    worst
}

pub fn relative_diff(a: Complex64, b: Complex64) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale
    }
}

/// Reference parameters: Ω = 35, g²N = 10, γ = 1, κ = 0.1.
pub fn reference_params(delta: f64) -> SystemParams {
    SystemParams {
        omega_rabi: 35.0,
        delta,
        gamma: 1.0,
        kappa: 0.1,
        g2n: 10.0,
    }
}

pub fn run() -> SelfTestReport {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut report = SelfTestReport::default();
    dressed_identities(&mut rng, &mut report);
    transfer_routes(&mut rng, &mut report);
    limits(&mut report);
    report
}

fn dressed_identities(rng: &mut ChaCha8Rng, report: &mut SelfTestReport) {
    const DRAWS: usize = 10_000;
    let mut worst = 0.0f64;
    for _ in 0..DRAWS {
        let omega = rng.gen_range(1.0..100.0);
        let delta = rng.gen_range(-50.0..50.0);
        let gamma = rng.gen_range(0.1..10.0);
        let p = SystemParams {
            omega_rabi: omega,
            delta,
            gamma,
            kappa: 1.0,
            g2n: 1.0,
        };
        let Ok(b) = dressed_basis(&p) else {
            worst = f64::INFINITY;
            continue;
        };
        let st = steady_populations(&b);
        let Ok(r) = decay_rates(&b, gamma) else {
            worst = f64::INFINITY;
            continue;
        };
        let u = b.transformation();
        let mut ortho = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                let dot: f64 = (0..3).map(|k| u[i][k] * u[j][k]).sum();
                ortho = ortho.max((dot - if i == j { 1.0 } else { 0.0 }).abs());
            }
        }
        let errs = [
            (b.c * b.c + b.s * b.s - 1.0).abs(),
            (st.rho00 + st.rhopp + st.rhomm - 1.0).abs(),
            ortho,
            (b.c1 + b.c2 - b.s).abs(),
            (b.c2 - b.c1 - b.s * b.s).abs(),
            (2.0 * b.c3 - b.c * b.c).abs(),
            (r.gpm - 0.25 * gamma * (1.0 - b.s.powi(4))).abs(),
        ];
        worst = errs.into_iter().fold(worst, f64::max);
    }
    report.record("dressed-state identities", worst, 1e-12, DRAWS);
}

fn transfer_routes(rng: &mut ChaCha8Rng, report: &mut SelfTestReport) {
    const DRAWS: usize = 1_000;
    let mut worst_route = 0.0f64;
    let mut worst_det = 0.0f64;
    let mut worst_conj = 0.0f64;
    let mut used = 0;
    while used < DRAWS {
        let p = SystemParams {
            omega_rabi: rng.gen_range(5.0..100.0),
            delta: rng.gen_range(-30.0..30.0),
            gamma: rng.gen_range(0.5..2.0),
            kappa: rng.gen_range(0.01..1.0),
            g2n: rng.gen_range(0.0..50.0),
        };
        let w = rng.gen_range(-20.0..20.0);
        let Ok(co) = gain_loss_matrices(&p) else {
            worst_route = f64::INFINITY;
            break;
        };
        if !well_conditioned(&co, p.kappa, w) {
            continue;
        }
        used += 1;
        let pair = transfer_cofactor(&co, p.kappa, w).and_then(|a| {
            let b = transfer_numeric(&co, p.kappa, w)?;
            let a_neg = transfer_cofactor(&co, p.kappa, -w)?;
            Ok((a, b, a_neg))
        });
        let Ok((a, b, a_neg)) = pair else {
            worst_route = f64::INFINITY;
            continue;
        };
        worst_route = worst_route.max(max_relative_diff(&a.d, &b.d));
        let direct = det3(&drift_matrix(&co, p.kappa, w));
        worst_det = worst_det.max(relative_diff(drift_determinant(&co, p.kappa, w), direct));
        worst_conj = worst_conj.max(max_relative_diff(&a_neg.d, &a.d.conj()));
    }
    report.record("cofactor vs numeric transfer", worst_route, 1e-9, DRAWS);
    report.record("determinant expansion vs det3", worst_det, 1e-10, DRAWS);
    report.record(
        "conjugation symmetry D(-w) = conj D(w)",
        worst_conj,
        1e-12,
        DRAWS,
    );
}

/// Keeps draws away from instability thresholds: the drift determinant must
/// not be tiny next to the product of its row norms.
pub fn well_conditioned(co: &CoeffMatrices, kappa: f64, omega_prime: f64) -> bool {
    let m = drift_matrix(co, kappa, omega_prime);
    let rows: f64 =
        m.0.iter()
            .map(|r| r.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
            .product();
    det3(&m).norm() > 1e-6 * rows
}

fn limits(report: &mut SelfTestReport) {
    let grid = Grid::DEFAULT_FREQUENCY;
    let mut vacuum = 0.0f64;
    let mut even = 0.0f64;
    let mut asym = 0.0f64;
    let mut cases = 0;
    for delta in [5.0, 10.0] {
        let p = reference_params(delta);
        let (Ok(co), Ok(empty)) = (
            gain_loss_matrices(&p),
            gain_loss_matrices(&SystemParams { g2n: 0.0, ..p }),
        ) else {
            vacuum = f64::INFINITY;
            continue;
        };
        for v in Variant::ALL {
            for w in grid.coordinates() {
                cases += 1;
                let eval = |co: &CoeffMatrices, w: f64| {
                    transfer_cofactor(co, p.kappa, w).map(|t| spectra(&t, v).values())
                };
                match (eval(&empty, w), eval(&co, w), eval(&co, -w)) {
                    (Ok(e), Ok(plus), Ok(minus)) => {
                        for i in 0..3 {
                            vacuum = vacuum.max((e[i] - 4.0).abs());
                            even = even.max((plus[i] - minus[i]).abs());
                        }
                    }
                    _ => even = f64::INFINITY,
                }
            }
            match transfer_cofactor(&co, p.kappa, 1e5) {
                Ok(t) => {
                    for s in spectra(&t, v).values() {
                        asym = asym.max((s - 4.0).abs());
                    }
                }
                Err(_) => asym = f64::INFINITY,
            }
        }
    }
    report.record("empty-cavity spectra equal 4", vacuum, 1e-12, cases);
    report.record("spectra even in w'", even, 1e-12, cases);
    report.record("spectra approach 4 at w' = 1e5", asym, 1e-2, 4);
}
