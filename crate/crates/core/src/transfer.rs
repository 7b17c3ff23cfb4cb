//! Frequency-domain drift matrix and the input→output transfer matrix.
//!
//! The transfer matrix is available through two independent routes: the
//! closed-form cofactor expressions and a direct numerical inversion of
//! the drift matrix, `D = −(I + κ D₀⁻¹)`. Loss rates are equal for all
//! three modes.
//!
//! The first mode enters as a creation operator at −ω, so `D` maps
//! (a₁†(−ω), a₂(ω), a₃(ω)) in to out. Only the raw entries are exposed.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::coeffs::CoeffMatrices;
use crate::error::{Error, Result};
use crate::linalg::{det3, invert3, ComplexMatrix3, SINGULAR_FLOOR};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferMatrix {
    pub d: ComplexMatrix3,
    /// Normalized analyzing frequency ω′ = ωτ/κ.
    pub omega_prime: f64,
}

impl TransferMatrix {
    #[inline]
    pub fn get(&self, j: usize, k: usize) -> Complex64 {
        self.d.0[j][k]
    }
}

/// Which algebraic route produced a transfer matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TransferRoute {
    #[default]
    Cofactor,
    Numeric,
}

impl TransferRoute {
    pub fn as_str(self) -> &'static str {
        match self {
            TransferRoute::Cofactor => "cofactor",
            TransferRoute::Numeric => "numeric",
        }
    }
}

impl fmt::Display for TransferRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TransferRoute {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "cofactor" => Ok(TransferRoute::Cofactor),
            "numeric" => Ok(TransferRoute::Numeric),
            other => Err(format!(
                "unknown route `{other}` (expected cofactor|numeric)"
            )),
        }
    }
}

/// Drift matrix D₀ at normalized frequency ω′ (ωτ = κω′).
pub fn drift_matrix(coeffs: &CoeffMatrices, kappa: f64, omega_prime: f64) -> ComplexMatrix3 {
    let mut m = ComplexMatrix3::zeros();
    for j in 0..3 {
        for k in 0..3 {
            m.0[j][k] = if j == k {
                diagonal_response(coeffs, kappa, omega_prime, j)
            } else {
                Complex64::new(coeffs.net(j, k), 0.0)
            };
        }
    }
    m
}

/// χ_jj = κ(A_jj/κ − B_jj/κ − ½ − iω′), written without the κ round trip.
fn diagonal_response(coeffs: &CoeffMatrices, kappa: f64, omega_prime: f64, j: usize) -> Complex64 {
    Complex64::new(coeffs.net(j, j) - 0.5 * kappa, -kappa * omega_prime)
}

/// The closed-form expansion of |D₀| along the first row.
pub fn drift_determinant(coeffs: &CoeffMatrices, kappa: f64, omega_prime: f64) -> Complex64 {
    let x = |j| diagonal_response(coeffs, kappa, omega_prime, j);
    let m = |j, k| Complex64::new(coeffs.net(j, k), 0.0);
    let (x11, x22, x33) = (x(0), x(1), x(2));
    x11 * (x22 * x33 - m(1, 2) * m(2, 1))
        + m(0, 1) * (m(1, 2) * m(2, 0) - m(1, 0) * x33)
        + m(0, 2) * (m(1, 0) * m(2, 1) - m(2, 0) * x22)
}

/// Transfer matrix from the explicit cofactor expressions,
/// D_jk = −δ_jk + χ₀·adj(D₀)_jk with χ₀ = −κ/|D₀|.
///
/// D₁₁ uses the (2,3)(3,2) minor.
pub fn transfer_cofactor(
    coeffs: &CoeffMatrices,
    kappa: f64,
    omega_prime: f64,
) -> Result<TransferMatrix> {
    let det = drift_determinant(coeffs, kappa, omega_prime);
    if det.norm().is_nan() || det.norm() < SINGULAR_FLOOR {
        return Err(Error::SingularDrift {
            det_abs: det.norm(),
        });
    }
    let chi0 = -Complex64::new(kappa, 0.0) / det;

    let x = |j| diagonal_response(coeffs, kappa, omega_prime, j);
    let m = |j, k| Complex64::new(coeffs.net(j, k), 0.0);
    let (x11, x22, x33) = (x(0), x(1), x(2));
    let one = Complex64::new(1.0, 0.0);

    let d = [
        [
            -one + chi0 * (x22 * x33 - m(1, 2) * m(2, 1)),
            chi0 * (m(0, 2) * m(2, 1) - m(0, 1) * x33),
            chi0 * (m(0, 1) * m(1, 2) - m(0, 2) * x22),
        ],
        [
            chi0 * (m(1, 2) * m(2, 0) - m(1, 0) * x33),
            -one + chi0 * (x11 * x33 - m(0, 2) * m(2, 0)),
            chi0 * (m(0, 2) * m(1, 0) - m(1, 2) * x11),
        ],
        [
            chi0 * (m(2, 1) * m(1, 0) - m(2, 0) * x22),
            chi0 * (m(0, 1) * m(2, 0) - m(2, 1) * x11),
            -one + chi0 * (x11 * x22 - m(0, 1) * m(1, 0)),
        ],
    ];
    Ok(TransferMatrix {
        d: ComplexMatrix3(d),
        omega_prime,
    })
}

/// Transfer matrix by inverting D₀ numerically: −(I + B D₀⁻¹ B) with
/// B = √κ·I.
pub fn transfer_numeric(
    coeffs: &CoeffMatrices,
    kappa: f64,
    omega_prime: f64,
) -> Result<TransferMatrix> {
    let drift = drift_matrix(coeffs, kappa, omega_prime);
    let inv = invert3(&drift).map_err(|_| Error::SingularDrift {
        det_abs: det3(&drift).norm(),
    })?;
    let mut d = inv.scale(Complex64::new(-kappa, 0.0));
    for j in 0..3 {
        d.0[j][j] -= 1.0;
    }
    Ok(TransferMatrix { d, omega_prime })
}

pub fn transfer(
    route: TransferRoute,
    coeffs: &CoeffMatrices,
    kappa: f64,
    omega_prime: f64,
) -> Result<TransferMatrix> {
    match route {
        TransferRoute::Cofactor => transfer_cofactor(coeffs, kappa, omega_prime),
        TransferRoute::Numeric => transfer_numeric(coeffs, kappa, omega_prime),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::gain_loss_matrices;
    use crate::params::SystemParams;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel_close(a: Complex64, b: Complex64, rel: f64) -> bool {
        (a - b).norm() <= rel * a.norm().max(b.norm()).max(1e-300)
    }

    fn reference_coeffs(delta: f64) -> CoeffMatrices {
        gain_loss_matrices(&SystemParams::new(35.0, delta, 1.0, 0.1, 10.0).unwrap()).unwrap()
    }

    #[test]
    fn empty_cavity_drift() {
        let z = CoeffMatrices::zero();
        let m = drift_matrix(&z, 0.1, 0.0);
        assert_eq!(m, ComplexMatrix3::from_diagonal([c(-0.05, 0.0); 3]));
        let m = drift_matrix(&z, 0.1, 3.0);
        for j in 0..3 {
            assert!((m[(j, j)] - c(-0.05, -0.3)).norm() < 1e-16);
        }
    }

    #[test]
    fn drift_entry_at_reference_point() {
        let m = drift_matrix(&reference_coeffs(5.0), 0.1, 0.0);
        assert!((m[(0, 0)] - c(-1.246_138_937_668_174, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn empty_cavity_is_all_pass() {
        let z = CoeffMatrices::zero();
        let t = transfer_cofactor(&z, 0.1, 0.0).unwrap();
        for j in 0..3 {
            for k in 0..3 {
                let id = if j == k { 1.0 } else { 0.0 };
                assert!((t.get(j, k) - c(id, 0.0)).norm() < 1e-15);
            }
        }
        for w in [-7.5, -1.0, 0.3, 2.0, 100.0] {
            let want = c(0.5, -w) / c(0.5, w);
            for route in [TransferRoute::Cofactor, TransferRoute::Numeric] {
                let t = transfer(route, &z, 0.1, w).unwrap();
                for j in 0..3 {
                    for k in 0..3 {
                        if j == k {
                            assert!((t.get(j, j) - want).norm() < 1e-14);
                            assert!((t.get(j, j).norm() - 1.0).abs() < 1e-12);
                        } else {
                            assert_eq!(t.get(j, k), c(0.0, 0.0));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn routes_agree_at_reference_points() {
        for (delta, w) in [(5.0, 0.0), (10.0, 1.0), (-8.0, 2.5)] {
            let co = reference_coeffs(delta);
            let a = transfer_cofactor(&co, 0.1, w).unwrap();
            let b = transfer_numeric(&co, 0.1, w).unwrap();
            for j in 0..3 {
                for k in 0..3 {
                    assert!(
                        rel_close(a.get(j, k), b.get(j, k), 1e-10),
                        "({j},{k}) at Δ={delta}"
                    );
                }
            }
        }
    }

    #[test]
    fn singular_drift_is_typed_error() {
        // A_jj − B_jj = κ/2 cancels the loss exactly at ω′ = 0.
        let mut co = CoeffMatrices::zero();
        for j in 0..3 {
            co.a[j][j] = 0.05;
        }
        assert!(matches!(
            transfer_cofactor(&co, 0.1, 0.0),
            Err(Error::SingularDrift { .. })
        ));
        assert!(matches!(
            transfer_numeric(&co, 0.1, 0.0),
            Err(Error::SingularDrift { .. })
        ));
        assert!(transfer_cofactor(&co, 0.1, 0.5).is_ok());
    }

    #[test]
    fn route_names_round_trip() {
        for r in [TransferRoute::Cofactor, TransferRoute::Numeric] {
            assert_eq!(r.as_str().parse::<TransferRoute>().unwrap(), r);
        }
        assert!("lu".parse::<TransferRoute>().is_err());
    }

    fn random_coeffs() -> impl Strategy<Value = CoeffMatrices> {
        let row = proptest::array::uniform3(-1.0f64..1.0);
        let mat = proptest::array::uniform3(row);
        (mat.clone(), mat).prop_map(|(a, b)| CoeffMatrices { a, b })
    }

    proptest! {
        #[test]
        fn routes_agree_on_random_coefficients(co in random_coeffs(), w in -20.0f64..20.0) {
            let drift = drift_matrix(&co, 0.1, w);
            let det = det3(&drift);
            prop_assume!(det.norm() > 1e-6);
            let expansion = drift_determinant(&co, 0.1, w);
            prop_assert!(rel_close(expansion, det, 1e-10));
            let a = transfer_cofactor(&co, 0.1, w).unwrap();
            let b = transfer_numeric(&co, 0.1, w).unwrap();
            let scale = a.d.max_norm();
            for j in 0..3 {
                for k in 0..3 {
                    prop_assert!((a.get(j, k) - b.get(j, k)).norm() <= 1e-10 * scale);
                }
            }
        }

        #[test]
        fn conjugation_symmetry(co in random_coeffs(), w in -20.0f64..20.0) {
            prop_assume!(det3(&drift_matrix(&co, 0.1, w)).norm() > 1e-6);
            for route in [TransferRoute::Cofactor, TransferRoute::Numeric] {
                let plus = transfer(route, &co, 0.1, w).unwrap();
                let minus = transfer(route, &co, 0.1, -w).unwrap();
                for j in 0..3 {
                    for k in 0..3 {
                        prop_assert!((minus.get(j, k) - plus.get(j, k).conj()).norm() <= 1e-12 * (1.0 + plus.d.max_norm()));
                    }
                }
            }
        }
    }
}
