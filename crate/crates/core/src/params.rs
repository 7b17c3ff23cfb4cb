use crate::error::{Error, Result};

/// Physical inputs of the driven-atom / three-mode cavity system.
///
/// All rates share one unit system; the reference runs use `gamma = 1`.
/// `g2n` is the collective coupling g²N (rate squared).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    pub omega_rabi: f64,
    pub delta: f64,
    pub gamma: f64,
    pub kappa: f64,
    pub g2n: f64,
}

impl SystemParams {
    pub fn new(omega_rabi: f64, delta: f64, gamma: f64, kappa: f64, g2n: f64) -> Result<Self> {
        let params = SystemParams {
            omega_rabi,
            delta,
            gamma,
            kappa,
            g2n,
        };
        params.validate()?;
        Ok(params)
    }

    /// Same parameters with a different laser detuning.
    pub fn with_delta(self, delta: f64) -> Self {
        SystemParams { delta, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        check_positive("omega_rabi", self.omega_rabi)?;
        if !self.delta.is_finite() {
            return Err(Error::InvalidParameter {
                name: "delta",
                value: self.delta,
                reason: "must be finite",
            });
        }
        check_positive("gamma", self.gamma)?;
        check_positive("kappa", self.kappa)?;
        if !(self.g2n.is_finite() && self.g2n >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "g2n",
                value: self.g2n,
                reason: "must be finite and >= 0",
            });
        }
        Ok(())
    }
}

pub(crate) fn check_positive(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be finite and > 0",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_reference_parameters() {
        let p = SystemParams::new(35.0, 5.0, 1.0, 0.1, 10.0).unwrap();
        assert_eq!(p.with_delta(-3.0).delta, -3.0);
        assert!(SystemParams::new(35.0, 0.0, 1.0, 0.1, 0.0).is_ok());
    }

    #[test]
    fn rejects_out_of_domain() {
        for (p, name) in [
            (SystemParams::new(0.0, 5.0, 1.0, 0.1, 10.0), "omega_rabi"),
            (SystemParams::new(-1.0, 5.0, 1.0, 0.1, 10.0), "omega_rabi"),
            (SystemParams::new(35.0, f64::NAN, 1.0, 0.1, 10.0), "delta"),
            (SystemParams::new(35.0, 5.0, 0.0, 0.1, 10.0), "gamma"),
            (SystemParams::new(35.0, 5.0, 1.0, -0.1, 10.0), "kappa"),
            (SystemParams::new(35.0, 5.0, 1.0, 0.1, -1e-9), "g2n"),
        ] {
            match p {
                Err(Error::InvalidParameter { name: n, .. }) => assert_eq!(n, name),
                other => panic!("expected error for {name}, got {other:?}"),
            }
        }
    }
}
