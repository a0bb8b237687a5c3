//! Default numerical tolerances.
//!
//! Relative tolerances are measured against the spectral radius (for
//! eigenvalue work) or the gram norm of the quantity they bound. Overrides
//! flow through [`Tolerances`]; the documented safe range for every field is
//! checked by [`Tolerances::validate`].

/// Relative threshold below which a form eigenvalue counts as kernel.
pub const KERNEL_TOL: f64 = 1e-8;

/// Relative separation below which pencil eigenvalues merge into a cluster.
pub const CLUSTER_TOL: f64 = 1e-6;

/// Gram-norm residual bound for the corrector equation.
pub const CORRECTOR_TOL: f64 = 1e-11;

/// Norm bound under which a reduced gradient counts as zero.
pub const REDUCED_TOL: f64 = 1e-9;

/// Full-space gram-norm residual bound for lifted solutions.
pub const LIFT_TOL: f64 = 1e-8;

/// Gram-distance factor (times `reduced_tol`) separating distinct reduced
/// zeros from Newton scatter.
pub const DEDUPE_FACTOR: f64 = 20.0;

/// Gram-norm residual bound per eigenpair returned by the pencil solver.
pub const PENCIL_RESIDUAL_TOL: f64 = 1e-9;

/// Deviation bound for gram-orthonormality of returned bases.
pub const ORTHO_TOL: f64 = 1e-10;

/// Relative asymmetry bound for assembled matrices.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Relative asymmetry bound on second-derivative callbacks before the
/// integrand is rejected.
pub const CALLBACK_SYMMETRY_TOL: f64 = 1e-9;

/// Unknown-count threshold above which the pencil solver switches from the
/// dense full-spectrum path to the banded bisection path.
pub const DENSE_CAP: usize = 1400;

#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    pub kernel_tol: f64,
    pub cluster_tol: f64,
    pub corrector_tol: f64,
    pub reduced_tol: f64,
    pub lift_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            kernel_tol: KERNEL_TOL,
            cluster_tol: CLUSTER_TOL,
            corrector_tol: CORRECTOR_TOL,
            reduced_tol: REDUCED_TOL,
            lift_tol: LIFT_TOL,
        }
    }
}

impl Tolerances {
    /// Safe override ranges; values outside are configuration errors.
    pub fn validate(&self) -> crate::Result<()> {
        let checks = [
            ("kernel_tol", self.kernel_tol, 1e-14, 1e-4),
            ("cluster_tol", self.cluster_tol, 1e-12, 1e-2),
            ("corrector_tol", self.corrector_tol, 1e-14, 1e-6),
            ("reduced_tol", self.reduced_tol, 1e-13, 1e-5),
            ("lift_tol", self.lift_tol, 1e-12, 1e-4),
        ];
        for (name, value, lo, hi) in checks {
            if !(value >= lo && value <= hi) {
                return Err(crate::Error::Config(format!(
                    "tolerance {name} = {value:e} outside safe range [{lo:e}, {hi:e}]"
                )));
            }
        }
        Ok(())
    }
}
