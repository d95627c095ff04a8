use crate::{Error, Result};

/// Numerical thresholds shared by every decision in the crate.
///
/// PSD and rank thresholds are relative: they are multiplied by
/// `max(1, ||H||_F)` of the matrix being tested.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub psd_tol: f64,
    pub rank_tol: f64,
    pub root_tol: f64,
    pub residual_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            psd_tol: 1e-9,
            rank_tol: 1e-8,
            root_tol: 1e-10,
            residual_tol: 1e-8,
        }
    }
}

impl Tolerances {
    pub fn new(psd_tol: f64, rank_tol: f64, root_tol: f64, residual_tol: f64) -> Result<Self> {
        let t = Tolerances {
            psd_tol,
            rank_tol,
            root_tol,
            residual_tol,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.psd_tol, self.rank_tol, self.root_tol, self.residual_tol];
        if all.iter().all(|t| t.is_finite() && *t > 0.0) {
            Ok(())
        } else {
            Err(Error::Precondition("tolerances must be finite and strictly positive"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_positive() {
        Tolerances::default().validate().unwrap();
        assert!(Tolerances::new(1e-9, 0.0, 1e-10, 1e-8).is_err());
        assert!(Tolerances::new(f64::NAN, 1e-8, 1e-10, 1e-8).is_err());
    }
}
