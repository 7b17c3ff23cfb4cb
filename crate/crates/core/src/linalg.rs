//! Fixed-size 3×3 complex matrices: cofactor determinant and a
//! partial-pivoting Gauss–Jordan inverse.

use std::ops::{Index, IndexMut, Mul};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Pivots with modulus below this are treated as exact zeros.
pub const SINGULAR_FLOOR: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix3(pub [[Complex64; 3]; 3]);

impl ComplexMatrix3 {
    pub fn zeros() -> Self {
        ComplexMatrix3([[Complex64::new(0.0, 0.0); 3]; 3])
    }

    pub fn identity() -> Self {
        Self::from_diagonal([Complex64::new(1.0, 0.0); 3])
    }

    pub fn from_diagonal(diag: [Complex64; 3]) -> Self {
        let mut m = Self::zeros();
        for (i, v) in diag.into_iter().enumerate() {
            m.0[i][i] = v;
        }
        m
    }

    pub fn from_real(m: [[f64; 3]; 3]) -> Self {
        ComplexMatrix3(m.map(|row| row.map(|x| Complex64::new(x, 0.0))))
    }

    pub fn conj(&self) -> Self {
        ComplexMatrix3(self.0.map(|row| row.map(|z| z.conj())))
    }

    pub fn scale(&self, k: Complex64) -> Self {
        ComplexMatrix3(self.0.map(|row| row.map(|z| z * k)))
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|z| z.is_finite())
    }

    pub fn det3(&self) -> Complex64 {
        det3(self)
    }

    pub fn invert3(&self) -> Result<Self> {
        invert3(self)
    }
}

impl Index<(usize, usize)> for ComplexMatrix3 {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix3 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.0[i][j]
    }
}

impl Mul for ComplexMatrix3 {
    type Output = ComplexMatrix3;

    fn mul(self, rhs: ComplexMatrix3) -> ComplexMatrix3 {
        let mut out = ComplexMatrix3::zeros();
        for i in 0..3 {
            for j in 0..3 {
                out.0[i][j] = (0..3).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        out
    }
}

/// Determinant by cofactor expansion along the first row.
pub fn det3(m: &ComplexMatrix3) -> Complex64 {
    let a = &m.0;
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        + a[0][1] * (a[1][2] * a[2][0] - a[1][0] * a[2][2])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// Inverse by Gauss–Jordan elimination with partial (row) pivoting.
pub fn invert3(m: &ComplexMatrix3) -> Result<ComplexMatrix3> {
    let mut a = m.0;
    let mut inv = ComplexMatrix3::identity().0;

    for col in 0..3 {
        let pivot_row = (col..3)
            .max_by(|&r, &s| a[r][col].norm().total_cmp(&a[s][col].norm()))
            .unwrap_or(col);
        let pivot_abs = a[pivot_row][col].norm();
        if pivot_abs.is_nan() || pivot_abs < SINGULAR_FLOOR {
            return Err(Error::SingularMatrix { pivot_abs });
        }
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);

        let p = a[col][col];
        for k in 0..3 {
            a[col][k] /= p;
            inv[col][k] /= p;
        }
        for row in 0..3 {
            if row == col {
                continue;
            }
            let f = a[row][col];
            if f == Complex64::new(0.0, 0.0) {
                continue;
            }
            for k in 0..3 {
                let (ak, ik) = (a[col][k], inv[col][k]);
                a[row][k] -= f * ak;
                inv[row][k] -= f * ik;
            }
        }
    }
    Ok(ComplexMatrix3(inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_round_trip() {
        let id = ComplexMatrix3::identity();
        assert_eq!(det3(&id), c(1.0, 0.0));
        assert_eq!(invert3(&id).unwrap(), id);
    }

    #[test]
    fn diagonal_closed_form() {
        let m = ComplexMatrix3::from_diagonal([c(2.0, 0.0), c(0.0, 3.0), c(-1.0, 0.0)]);
        let det = det3(&m);
        assert!((det - c(0.0, -6.0)).norm() < 1e-15);
        let inv = invert3(&m).unwrap();
        let want = ComplexMatrix3::from_diagonal([c(0.5, 0.0), c(0.0, -1.0 / 3.0), c(-1.0, 0.0)]);
        for i in 0..3 {
            for j in 0..3 {
                assert!((inv[(i, j)] - want[(i, j)]).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn singular_is_rejected() {
        let m = ComplexMatrix3::from_real([[1.0, 2.0, 3.0], [2.0, 4.0, 6.0], [0.0, 1.0, 1.0]]);
        assert!(matches!(invert3(&m), Err(Error::SingularMatrix { .. })));
        assert!(invert3(&ComplexMatrix3::zeros()).is_err());
        let nan = ComplexMatrix3::from_diagonal([c(f64::NAN, 0.0), c(1.0, 0.0), c(1.0, 0.0)]);
        assert!(invert3(&nan).is_err());
    }

    #[test]
    fn needs_pivoting() {
        let m = ComplexMatrix3::from_real([[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]);
        assert_eq!(invert3(&m).unwrap(), m);
        assert_eq!(det3(&m), c(-1.0, 0.0));
    }

    fn entry() -> impl Strategy<Value = Complex64> {
        (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| c(re, im))
    }

    fn matrix() -> impl Strategy<Value = ComplexMatrix3> {
        proptest::array::uniform3(proptest::array::uniform3(entry())).prop_map(ComplexMatrix3)
    }

    proptest! {
        #[test]
        fn inverse_round_trip(m in matrix()) {
            // Diagonal shift keeps the draw well conditioned.
            let mut shifted = m;
            for i in 0..3 {
                shifted[(i, i)] += c(4.0, 0.0);
            }
            let inv = invert3(&shifted).unwrap();
            for prod in [shifted * inv, inv * shifted] {
                for i in 0..3 {
                    for j in 0..3 {
                        let id = if i == j { c(1.0, 0.0) } else { c(0.0, 0.0) };
                        prop_assert!((prod[(i, j)] - id).norm() < 1e-12);
                    }
                }
            }
        }

        #[test]
        fn det_of_product(a in matrix(), b in matrix()) {
            let lhs = det3(&(a * b));
            let rhs = det3(&a) * det3(&b);
            prop_assert!((lhs - rhs).norm() < 1e-12);
            prop_assert!((det3(&a.conj()) - det3(&a).conj()).norm() == 0.0);
        }
    }
}
