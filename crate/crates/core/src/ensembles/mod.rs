//! Sample covariance ensembles and direct evaluation of `E[det(Z−μ) det(Z−ν)]`.

pub mod enumerate;
pub mod matrix;
pub mod mc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use enumerate::{enumerate_correlation, enumerate_correlations, DEFAULT_ENUMERATION_BUDGET};
pub use matrix::{char_poly_product, determinant, sample_covariance, DataMatrix, Matrix};
pub use mc::{mc_correlation, McEstimate};

/// Symmetry class of the ensemble.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Beta {
    /// Real entries, `Z = XᵀX`.
    Real,
    /// Complex entries with i.i.d. real and imaginary parts, `Z = X*X`.
    Complex,
}

impl Beta {
    pub fn from_index(b: u8) -> Result<Beta> {
        match b {
            1 => Ok(Beta::Real),
            2 => Ok(Beta::Complex),
            _ => Err(Error::validation(format!("beta must be 1 or 2, got {b}"))),
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Beta::Real => 1,
            Beta::Complex => 2,
        }
    }

    /// Variance required of the distribution `Q` of each real component.
    pub fn component_variance(self) -> f64 {
        match self {
            Beta::Real => 1.0,
            Beta::Complex => 0.5,
        }
    }

    /// `b* = b − 3` (real) or `b* = 2(b − 3/4)` (complex).
    pub fn b_star(self, b: f64) -> f64 {
        match self {
            Beta::Real => b - 3.0,
            Beta::Complex => 2.0 * (b - 0.75),
        }
    }

    /// Number of independent real components per matrix entry.
    pub fn components(self) -> usize {
        match self {
            Beta::Real => 1,
            Beta::Complex => 2,
        }
    }
}

/// Distribution `Q` of a real component of a matrix entry.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Distribution {
    /// Normal with the given standard deviation.
    Gaussian { sd: f64 },
    /// Uniform on `[-half_width, half_width]`.
    Uniform { half_width: f64 },
    /// Finitely supported: `points[i]` with probability `probs[i]`.
    Discrete { points: Vec<f64>, probs: Vec<f64> },
}

impl Distribution {
    pub fn mean(&self) -> f64 {
        match self {
            Distribution::Gaussian { .. } | Distribution::Uniform { .. } => 0.0,
            Distribution::Discrete { points, probs } => points.iter().zip(probs).map(|(x, p)| x * p).sum(),
        }
    }

    pub fn variance(&self) -> f64 {
        match self {
            Distribution::Gaussian { sd } => sd * sd,
            Distribution::Uniform { half_width } => half_width * half_width / 3.0,
            Distribution::Discrete { points, probs } => {
                let m = self.mean();
                points.iter().zip(probs).map(|(x, p)| (x - m).powi(2) * p).sum()
            }
        }
    }

    pub fn fourth_moment(&self) -> f64 {
        match self {
            Distribution::Gaussian { sd } => 3.0 * sd.powi(4),
            Distribution::Uniform { half_width } => half_width.powi(4) / 5.0,
            Distribution::Discrete { points, probs } => points.iter().zip(probs).map(|(x, p)| x.powi(4) * p).sum(),
        }
    }

    pub fn is_finite_support(&self) -> bool {
        matches!(self, Distribution::Discrete { .. })
    }
}

/// Named entry distributions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BuiltinEnsemble {
    /// Real, `Q = ±1` with equal probability (`b = 1`).
    RealRademacher,
    /// Real, `Q = N(0, 1)` (`b = 3`).
    RealGaussian,
    /// Real, `Q` uniform on `[−√3, √3]` (`b = 9/5`).
    RealUniform,
    /// Complex, `Q = ±1/√2` with equal probability (`b = 1/4`).
    ComplexSign,
    /// Complex, `Q = N(0, 1/2)` (`b = 3/4`).
    ComplexGaussian,
}

impl BuiltinEnsemble {
    pub const ALL: [BuiltinEnsemble; 5] = [
        BuiltinEnsemble::RealRademacher,
        BuiltinEnsemble::RealGaussian,
        BuiltinEnsemble::RealUniform,
        BuiltinEnsemble::ComplexSign,
        BuiltinEnsemble::ComplexGaussian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinEnsemble::RealRademacher => "real-rademacher",
            BuiltinEnsemble::RealGaussian => "real-gaussian",
            BuiltinEnsemble::RealUniform => "real-uniform",
            BuiltinEnsemble::ComplexSign => "complex-sign",
            BuiltinEnsemble::ComplexGaussian => "complex-gaussian",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        BuiltinEnsemble::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::validation(format!("unknown distribution '{s}'")))
    }

    pub fn spec(self) -> EnsembleSpec {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let (beta, dist) = match self {
            BuiltinEnsemble::RealRademacher => {
                (Beta::Real, Distribution::Discrete { points: vec![-1.0, 1.0], probs: vec![0.5, 0.5] })
            }
            BuiltinEnsemble::RealGaussian => (Beta::Real, Distribution::Gaussian { sd: 1.0 }),
            BuiltinEnsemble::RealUniform => (Beta::Real, Distribution::Uniform { half_width: 3f64.sqrt() }),
            BuiltinEnsemble::ComplexSign => {
                (Beta::Complex, Distribution::Discrete { points: vec![-h, h], probs: vec![0.5, 0.5] })
            }
            BuiltinEnsemble::ComplexGaussian => (Beta::Complex, Distribution::Gaussian { sd: h }),
        };
        let mut spec = EnsembleSpec::new(beta, dist).expect("built-in ensembles are valid");
        // the sampled points are rounded (±1/√2, √3); keep the exact moment
        spec.b = self.fourth_moment();
        spec.b_star = beta.b_star(spec.b);
        spec
    }

    /// Exact fourth moment `E Q⁴`.
    pub fn fourth_moment(self) -> f64 {
        match self {
            BuiltinEnsemble::RealRademacher => 1.0,
            BuiltinEnsemble::RealGaussian => 3.0,
            BuiltinEnsemble::RealUniform => 1.8,
            BuiltinEnsemble::ComplexSign => 0.25,
            BuiltinEnsemble::ComplexGaussian => 0.75,
        }
    }
}

/// A fully specified ensemble: symmetry class, entry distribution and its
/// fourth-moment data.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnsembleSpec {
    pub beta: Beta,
    pub entry_dist: Distribution,
    pub b: f64,
    pub b_star: f64,
}

const MOMENT_TOL: f64 = 1e-9;

impl EnsembleSpec {
    /// Validates the moment conditions and derives `b` and `b*`.
    pub fn new(beta: Beta, entry_dist: Distribution) -> Result<Self> {
        if let Distribution::Discrete { points, probs } = &entry_dist {
            if points.is_empty() || points.len() != probs.len() {
                return Err(Error::validation("discrete distribution needs matching points and probabilities"));
            }
            if probs.iter().any(|p| !(*p >= 0.0)) || (probs.iter().sum::<f64>() - 1.0).abs() > MOMENT_TOL {
                return Err(Error::validation("probabilities must be non-negative and sum to 1"));
            }
        }
        let mean = entry_dist.mean();
        let var = entry_dist.variance();
        let want = beta.component_variance();
        if mean.abs() > MOMENT_TOL {
            return Err(Error::validation(format!("entry distribution has mean {mean}, expected 0")));
        }
        if (var - want).abs() > MOMENT_TOL {
            return Err(Error::validation(format!("entry distribution has variance {var}, expected {want}")));
        }
        let b = entry_dist.fourth_moment();
        Ok(EnsembleSpec { beta, entry_dist, b, b_star: beta.b_star(b) })
    }

    /// The moment data alone, for methods that only depend on `b*`. The entry
    /// distribution is recorded as Gaussian, so sampling from it is refused.
    pub fn from_fourth_moment(beta: Beta, b: f64) -> Result<Self> {
        let var = beta.component_variance();
        if !b.is_finite() || b < var * var - MOMENT_TOL {
            return Err(Error::validation(format!(
                "fourth moment b = {b} violates b >= variance^2 = {}",
                var * var
            )));
        }
        Ok(EnsembleSpec {
            beta,
            entry_dist: Distribution::Gaussian { sd: var.sqrt() },
            b,
            b_star: beta.b_star(b),
        })
    }

    /// True when the stored distribution actually has fourth moment `b`.
    pub fn is_sampleable(&self) -> bool {
        (self.entry_dist.fourth_moment() - self.b).abs() <= MOMENT_TOL * (1.0 + self.b.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn builtin_fourth_moments() {
        let want = [
            (BuiltinEnsemble::RealRademacher, 1.0, -2.0),
            (BuiltinEnsemble::RealGaussian, 3.0, 0.0),
            (BuiltinEnsemble::RealUniform, 1.8, -1.2),
            (BuiltinEnsemble::ComplexSign, 0.25, -1.0),
            (BuiltinEnsemble::ComplexGaussian, 0.75, 0.0),
        ];
        for (e, b, bs) in want {
            let s = e.spec();
            assert_eq!(s.b, b);
            assert_relative_eq!(s.b_star, bs, epsilon = 1e-15);
            assert!(s.is_sampleable());
            assert_eq!(BuiltinEnsemble::from_name(e.name()).unwrap(), e);
        }
    }

    #[test]
    fn moment_mismatch_is_rejected() {
        let d = Distribution::Discrete { points: vec![-1.0, 1.0], probs: vec![0.5, 0.5] };
        assert!(matches!(EnsembleSpec::new(Beta::Complex, d), Err(Error::Validation(_))));
        let d = Distribution::Discrete { points: vec![0.0, 2.0], probs: vec![0.5, 0.5] };
        assert!(EnsembleSpec::new(Beta::Real, d).is_err());
        assert!(EnsembleSpec::from_fourth_moment(Beta::Real, 0.5).is_err());
        assert!(EnsembleSpec::from_fourth_moment(Beta::Complex, 0.25).is_ok());
    }
}
