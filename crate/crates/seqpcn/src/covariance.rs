//! Stationary covariance kernels on 2D point sets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Kernel family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CovarianceKind {
    /// Anisotropic exponential kernel `sigma^2 * exp(-h)`.
    ExponentialAniso,
    /// Matern kernel with smoothness 5/2:
    /// `sigma^2 * (1 + sqrt(5) h + 5/3 h^2) * exp(-sqrt(5) h)`.
    Matern25,
}

/// A stationary, anisotropic covariance model for the log-conductivity field.
///
/// The effective distance `h` between two points is computed by rotating the
/// separation vector by `-rotation_deg` (counterclockwise convention: the
/// first lengthscale axis is the x-axis rotated counterclockwise by
/// `rotation_deg`), dividing the components by `(l1, l2)` and taking the
/// Euclidean norm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CovarianceModel {
    pub kind: CovarianceKind,
    /// Lengthscales `(l1, l2)` in meters along the rotated x- and y-axes.
    pub lengthscales: (f64, f64),
    /// Rotation of the anisotropy axes in degrees, counterclockwise.
    pub rotation_deg: f64,
    /// Field variance `sigma^2`.
    pub variance: f64,
}

impl CovarianceModel {
    pub fn new(
        kind: CovarianceKind,
        lengthscales: (f64, f64),
        rotation_deg: f64,
        variance: f64,
    ) -> Result<Self> {
        let model = CovarianceModel {
            kind,
            lengthscales,
            rotation_deg,
            variance,
        };
        model.validate()?;
        Ok(model)
    }

    pub fn validate(&self) -> Result<()> {
        let (l1, l2) = self.lengthscales;
        if !(l1 > 0.0) || !(l2 > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "lengthscales must be positive, got ({l1}, {l2})"
            )));
        }
        if !(self.variance > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "variance must be positive, got {}",
                self.variance
            )));
        }
        Ok(())
    }

    /// Covariance between the points `p` and `q` (meters).
    pub fn value(&self, p: (f64, f64), q: (f64, f64)) -> f64 {
        let dx = q.0 - p.0;
        let dy = q.1 - p.1;
        // Rotate the separation into the anisotropy frame (rotation by
        // -rotation_deg) and scale per axis.
        let theta = self.rotation_deg.to_radians();
        let (s, c) = theta.sin_cos();
        let u = (c * dx + s * dy) / self.lengthscales.0;
        let v = (-s * dx + c * dy) / self.lengthscales.1;
        let h = (u * u + v * v).sqrt();
        match self.kind {
            CovarianceKind::ExponentialAniso => self.variance * (-h).exp(),
            CovarianceKind::Matern25 => {
                let s5h = 5f64.sqrt() * h;
                self.variance * (1.0 + s5h + 5.0 / 3.0 * h * h) * (-s5h).exp()
            }
        }
    }
}

/// Covariance of `model` between points `p` and `q`.
pub fn covariance_at(model: &CovarianceModel, p: (f64, f64), q: (f64, f64)) -> f64 {
    model.value(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn iso_exp(l: f64, var: f64) -> CovarianceModel {
        CovarianceModel::new(CovarianceKind::ExponentialAniso, (l, l), 0.0, var).unwrap()
    }

    #[test]
    fn zero_separation_gives_variance() {
        for model in [
            iso_exp(3.0, 2.5),
            CovarianceModel::new(CovarianceKind::Matern25, (1.0, 4.0), 30.0, 0.7).unwrap(),
        ] {
            assert_relative_eq!(model.value((1.0, 2.0), (1.0, 2.0)), model.variance);
        }
    }

    #[test]
    fn exponential_at_one_lengthscale() {
        let model = iso_exp(2.0, 1.0);
        let v = model.value((0.0, 0.0), (2.0, 0.0));
        assert_relative_eq!(v, (-1.0f64).exp(), epsilon = 1e-12);
    }

    #[test]
    fn matern_decays_to_zero() {
        let model = CovarianceModel::new(CovarianceKind::Matern25, (1.0, 1.0), 0.0, 1.0).unwrap();
        let mut prev = model.value((0.0, 0.0), (1.0, 0.0));
        for k in 2..60 {
            let v = model.value((0.0, 0.0), (k as f64, 0.0));
            assert!(v < prev, "Matern should decay monotonically at h >= 1");
            prev = v;
        }
        assert!(prev < 1e-20);
    }

    #[test]
    fn symmetric_and_bounded() {
        let model =
            CovarianceModel::new(CovarianceKind::ExponentialAniso, (2.0, 5.0), 135.0, 1.7)
                .unwrap();
        let pts = [(0.0, 0.0), (1.0, 2.0), (-3.0, 0.5), (4.0, -2.0)];
        for &p in &pts {
            for &q in &pts {
                assert_relative_eq!(model.value(p, q), model.value(q, p), epsilon = 1e-14);
                assert!(model.value(p, q).abs() <= model.variance + 1e-14);
            }
        }
    }

    #[test]
    fn isotropic_kernel_is_rotation_invariant() {
        for rot in [0.0, 17.0, 45.0, 135.0, 290.0] {
            let m =
                CovarianceModel::new(CovarianceKind::ExponentialAniso, (2.0, 2.0), rot, 1.0)
                    .unwrap();
            let m0 =
                CovarianceModel::new(CovarianceKind::ExponentialAniso, (2.0, 2.0), 0.0, 1.0)
                    .unwrap();
            let p = (0.3, -1.2);
            let q = (2.5, 0.7);
            assert_relative_eq!(m.value(p, q), m0.value(p, q), epsilon = 1e-12);
        }
    }

    #[test]
    fn anisotropy_rotation_aligns_major_axis() {
        // l2 = 2000 attached to the rotated y-axis; at 135 degrees rotation
        // that axis lies along the bottom-left-to-top-right diagonal, so
        // correlation along (1, 1) must beat correlation along (1, -1).
        let m = CovarianceModel::new(
            CovarianceKind::ExponentialAniso,
            (1500.0, 2000.0),
            135.0,
            1.0,
        )
        .unwrap();
        let d = 1000.0 / 2f64.sqrt();
        let along = m.value((0.0, 0.0), (d, d));
        let across = m.value((0.0, 0.0), (d, -d));
        assert!(
            along > across,
            "major axis should point bottom-left to top-right: {along} vs {across}"
        );
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(
            CovarianceModel::new(CovarianceKind::ExponentialAniso, (0.0, 1.0), 0.0, 1.0).is_err()
        );
        assert!(
            CovarianceModel::new(CovarianceKind::ExponentialAniso, (1.0, 1.0), 0.0, 0.0).is_err()
        );
    }
}
