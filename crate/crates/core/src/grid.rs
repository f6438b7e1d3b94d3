//! Uniform centered grids and sampled signals.
//!
//! A grid covers `[-L/2, L/2)` per axis with `n` equispaced nodes, and the
//! dual (frequency) grid covers `[-n/(2L), n/(2L))` with spacing `1/L`.
//! All continuum integrals downstream are Riemann sums weighted by the
//! spacing raised to the dimension.

use crate::error::{CoreError, Result};
use rustfft::num_complex::Complex64;

/// Which variable a grid (or signal) lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Physical,
    Frequency,
}

/// Uniform tensor grid in dimension 1 or 2, centered at the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    dim: usize,
    n: usize,
    extent: f64,
    side: Side,
}

impl GridSpec {
    pub fn new(dim: usize, n: usize, extent: f64, side: Side) -> Result<Self> {
        if dim != 1 && dim != 2 {
            return Err(CoreError::BadDimension(dim));
        }
        if n < 16 || !n.is_power_of_two() {
            return Err(CoreError::BadGridSize(n));
        }
        if !(extent > 0.0) || !extent.is_finite() {
            return Err(CoreError::BadExtent(extent));
        }
        Ok(GridSpec {
            dim,
            n,
            extent,
            side,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Samples per axis.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Extent per axis; the grid covers `[-extent/2, extent/2)`.
    pub fn extent(&self) -> f64 {
        self.extent
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Node spacing per axis.
    pub fn spacing(&self) -> f64 {
        self.extent / self.n as f64
    }

    /// Total node count `n^d`.
    pub fn len(&self) -> usize {
        self.n.pow(self.dim as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The dual grid: spacing `1/extent`, extent `n/extent`, opposite side.
    pub fn dual(&self) -> GridSpec {
        GridSpec {
            dim: self.dim,
            n: self.n,
            extent: self.n as f64 / self.extent,
            side: match self.side {
                Side::Physical => Side::Frequency,
                Side::Frequency => Side::Physical,
            },
        }
    }

    /// Largest representable frequency magnitude on the dual grid
    /// (`n / (2 extent)` for a physical grid).
    pub fn nyquist(&self) -> f64 {
        self.n as f64 / (2.0 * self.extent)
    }

    /// Coordinate of the 1-D node with index `i`: `(i - n/2) * spacing`.
    pub fn coord(&self, i: usize) -> f64 {
        (i as f64 - (self.n / 2) as f64) * self.spacing()
    }

    /// Coordinates of the flat (row-major) node `idx`.
    pub fn point(&self, idx: usize) -> Vec<f64> {
        match self.dim {
            1 => vec![self.coord(idx)],
            2 => vec![self.coord(idx / self.n), self.coord(idx % self.n)],
            _ => unreachable!(),
        }
    }

    /// Iterator over all node coordinates in row-major order.
    pub fn points(&self) -> impl Iterator<Item = Vec<f64>> + '_ {
        (0..self.len()).map(move |i| self.point(i))
    }

    /// Index offset per axis for an on-grid point, or an error if any
    /// component is not an integer multiple of the spacing.
    pub fn on_grid_offsets(&self, x: &[f64]) -> Result<Vec<i64>> {
        let h = self.spacing();
        let mut offs = Vec::with_capacity(self.dim);
        for &xi in x {
            let r = xi / h;
            let k = r.round();
            if (r - k).abs() > 1e-9 {
                return Err(CoreError::OffGridPoint(x.to_vec()));
            }
            offs.push(k as i64);
        }
        if offs.len() != self.dim {
            return Err(CoreError::OffGridPoint(x.to_vec()));
        }
        Ok(offs)
    }

    /// Grid refined `k` times: each refinement doubles both `n` and the
    /// extent, so spacing and dual spacing shrink together.
    pub fn refined(&self, k: u32) -> GridSpec {
        GridSpec {
            dim: self.dim,
            n: self.n << k,
            extent: self.extent * (1u64 << k) as f64,
            side: self.side,
        }
    }

    pub fn expect_side(&self, side: Side) -> Result<()> {
        if self.side != side {
            return Err(CoreError::SideMismatch {
                expected: side,
                found: self.side,
            });
        }
        Ok(())
    }
}

/// Construct a grid; `side` is the variable the samples will live in.
pub fn make_grid(dim: usize, n: usize, extent: f64, side: Side) -> Result<GridSpec> {
    GridSpec::new(dim, n, extent, side)
}

/// Complex samples over a grid, row-major over axes.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    pub grid: GridSpec,
    pub samples: Vec<Complex64>,
}

impl SampledSignal {
    pub fn new(grid: GridSpec, samples: Vec<Complex64>) -> Result<Self> {
        if samples.len() != grid.len() {
            return Err(CoreError::LengthMismatch {
                expected: grid.len(),
                found: samples.len(),
            });
        }
        if !samples.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(CoreError::Invalid("non-finite sample".into()));
        }
        Ok(SampledSignal { grid, samples })
    }

    pub fn zeros(grid: GridSpec) -> Self {
        SampledSignal {
            samples: vec![Complex64::new(0.0, 0.0); grid.len()],
            grid,
        }
    }

    /// Tabulate `f` at the grid nodes.
    pub fn from_fn(grid: GridSpec, mut f: impl FnMut(&[f64]) -> Complex64) -> Self {
        let samples = (0..grid.len()).map(|i| f(&grid.point(i))).collect();
        SampledSignal { grid, samples }
    }

    /// Discrete `L^2` norm with Riemann weight `spacing^d`.
    pub fn l2_norm(&self) -> f64 {
        let w = self.grid.spacing().powi(self.grid.dim() as i32);
        (self.samples.iter().map(|z| z.norm_sqr()).sum::<f64>() * w).sqrt()
    }

    /// Discrete `L^p` norm (`None` = sup norm, no weight).
    pub fn lp_norm(&self, p: Option<f64>) -> f64 {
        let mags = self.samples.iter().map(|z| z.norm());
        match p {
            None => mags.fold(0.0, f64::max),
            Some(p) => {
                let w = self.grid.spacing().powi(self.grid.dim() as i32);
                (mags.map(|m| m.powf(p)).sum::<f64>() * w).powf(1.0 / p)
            }
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.samples.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest pointwise deviation from `other`.
    pub fn max_abs_diff(&self, other: &SampledSignal) -> f64 {
        self.samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn scaled(&self, c: Complex64) -> SampledSignal {
        SampledSignal {
            grid: self.grid,
            samples: self.samples.iter().map(|z| z * c).collect(),
        }
    }

    /// Pointwise product; grids must agree.
    pub fn pointwise_mul(&self, other: &SampledSignal) -> Result<SampledSignal> {
        if self.grid != other.grid {
            return Err(CoreError::GridMismatch(
                "pointwise product of signals on different grids".into(),
            ));
        }
        Ok(SampledSignal {
            grid: self.grid,
            samples: self
                .samples
                .iter()
                .zip(&other.samples)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    pub fn add(&self, other: &SampledSignal) -> Result<SampledSignal> {
        if self.grid != other.grid {
            return Err(CoreError::GridMismatch("sum of signals on different grids".into()));
        }
        Ok(SampledSignal {
            grid: self.grid,
            samples: self
                .samples
                .iter()
                .zip(&other.samples)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn spacing_arithmetic() {
        let g = make_grid(1, 1024, 64.0, Side::Physical).unwrap();
        assert_relative_eq!(g.spacing(), 0.0625);
        assert_relative_eq!(g.dual().spacing(), 1.0 / 64.0);
        assert_relative_eq!(g.dual().extent(), 16.0);
        assert_eq!(g.len(), 1024);
    }

    #[test]
    fn two_dim_volume() {
        let g = make_grid(2, 64, 16.0, Side::Physical).unwrap();
        assert_eq!(g.len(), 4096);
        assert_relative_eq!(g.spacing(), 0.25);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(make_grid(1, 1000, 64.0, Side::Physical).is_err());
        assert!(make_grid(3, 1024, 64.0, Side::Physical).is_err());
        assert!(make_grid(1, 1024, 0.0, Side::Physical).is_err());
        assert!(make_grid(1, 8, 64.0, Side::Physical).is_err());
    }

    #[test]
    fn dual_is_involutive() {
        let g = make_grid(1, 256, 32.0, Side::Physical).unwrap();
        assert_eq!(g.dual().dual(), g);
    }

    #[test]
    fn grid_points_cover_centered_range() {
        let g = make_grid(1, 16, 16.0, Side::Physical).unwrap();
        assert_relative_eq!(g.coord(0), -8.0);
        assert_relative_eq!(g.coord(8), 0.0);
        assert_relative_eq!(g.coord(15), 7.0);
    }

    #[test]
    fn on_grid_offsets_detects_off_grid() {
        let g = make_grid(1, 64, 16.0, Side::Physical).unwrap();
        assert_eq!(g.on_grid_offsets(&[0.5]).unwrap(), vec![2]);
        assert!(g.on_grid_offsets(&[0.3]).is_err());
    }
}
