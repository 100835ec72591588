//! Regular 2D cell-centered grid.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A regular 2D grid of `nx * ny` cells covering `[0, lx] x [0, ly]` meters.
///
/// The field carries one parameter per cell. Cells are indexed row-major,
/// `k = j * nx + i`, and cell `k` has its center at
/// `((i + 0.5) * lx / nx, (j + 0.5) * ly / ny)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid2D {
    pub nx: usize,
    pub ny: usize,
    pub lx: f64,
    pub ly: f64,
}

impl Grid2D {
    pub fn new(nx: usize, ny: usize, lx: f64, ly: f64) -> Result<Self> {
        if nx == 0 || ny == 0 {
            return Err(Error::InvalidArgument(format!(
                "grid cell counts must be positive, got {nx}x{ny}"
            )));
        }
        if !(lx > 0.0) || !(ly > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "grid lengths must be positive, got {lx}x{ly}"
            )));
        }
        Ok(Grid2D { nx, ny, lx, ly })
    }

    /// Number of cells (= number of field parameters).
    pub fn n_cells(&self) -> usize {
        self.nx * self.ny
    }

    /// Cell width in x.
    pub fn dx(&self) -> f64 {
        self.lx / self.nx as f64
    }

    /// Cell width in y.
    pub fn dy(&self) -> f64 {
        self.ly / self.ny as f64
    }

    /// Row-major index of cell `(i, j)`.
    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.nx && j < self.ny);
        j * self.nx + i
    }

    /// `(i, j)` coordinates of cell `k`.
    pub fn ij(&self, k: usize) -> (usize, usize) {
        debug_assert!(k < self.n_cells());
        (k % self.nx, k / self.nx)
    }

    /// Center of cell `k` in meters.
    pub fn cell_center(&self, k: usize) -> (f64, f64) {
        let (i, j) = self.ij(k);
        ((i as f64 + 0.5) * self.dx(), (j as f64 + 0.5) * self.dy())
    }

    fn check_inside(&self, x: f64, y: f64) -> Result<()> {
        if !(0.0..=self.lx).contains(&x) || !(0.0..=self.ly).contains(&y) {
            return Err(Error::InvalidArgument(format!(
                "location ({x}, {y}) outside domain [0, {}] x [0, {}]",
                self.lx, self.ly
            )));
        }
        Ok(())
    }

    /// Cell whose center is nearest to `(x, y)`; ties break toward the lower
    /// index. Errors if the location is outside the domain.
    pub fn nearest_cell(&self, x: f64, y: f64) -> Result<usize> {
        self.check_inside(x, y)?;
        // Nearest center along one axis is ceil(x/dx) - 1; a point equidistant
        // to two centers sits exactly on a cell edge and lands on the lower
        // cell this way.
        let pick = |v: f64, d: f64, n: usize| -> usize {
            let i = (v / d).ceil() as isize - 1;
            i.clamp(0, n as isize - 1) as usize
        };
        let i = pick(x, self.dx(), self.nx);
        let j = pick(y, self.dy(), self.ny);
        Ok(self.index(i, j))
    }

    /// Cell containing `(x, y)` (points on an edge belong to the upper cell,
    /// the domain boundary to the last cell). Errors if outside the domain.
    pub fn containing_cell(&self, x: f64, y: f64) -> Result<usize> {
        self.check_inside(x, y)?;
        let i = ((x / self.dx()).floor() as usize).min(self.nx - 1);
        let j = ((y / self.dy()).floor() as usize).min(self.ny - 1);
        Ok(self.index(i, j))
    }
}

/// Builds a grid after validating dimensions.
pub fn build_grid(nx: usize, ny: usize, lx: f64, ly: f64) -> Result<Grid2D> {
    Grid2D::new(nx, ny, lx, ly)
}
