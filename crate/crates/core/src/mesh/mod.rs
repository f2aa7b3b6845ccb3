//! Uniform Cartesian grids, ghost-padded state storage, boundary conditions
//! and the shock flattener.

mod boundary;
mod flattener;

pub use boundary::{fill_ghosts, BoundaryConditions, EdgeCondition, GhostFn};
pub use flattener::{flattener_eta, FlattenerField};

use crate::error::{Error, Result};

/// Uniform grid of `nx` by `ny` zones. One-dimensional grids have `ny = 1`
/// and no ghost rows in y.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub nx: usize,
    pub ny: usize,
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    pub ghost: usize,
    two_d: bool,
    /// Interior zones occupied by solid obstacles, row-major.
    solid: Option<Vec<bool>>,
}

impl Grid {
    pub fn new_1d(nx: usize, x_range: (f64, f64), ghost: usize) -> Result<Self> {
        Self::build(nx, 1, x_range, (0.0, 1.0), ghost, false)
    }

    pub fn new_2d(
        nx: usize,
        ny: usize,
        x_range: (f64, f64),
        y_range: (f64, f64),
        ghost: usize,
    ) -> Result<Self> {
        Self::build(nx, ny, x_range, y_range, ghost, true)
    }

    fn build(
        nx: usize,
        ny: usize,
        x_range: (f64, f64),
        y_range: (f64, f64),
        ghost: usize,
        two_d: bool,
    ) -> Result<Self> {
        if nx == 0 || ny == 0 {
            return Err(Error::usage("grid needs at least one zone per direction"));
        }
        if !(x_range.1 > x_range.0) || !(y_range.1 > y_range.0) {
            return Err(Error::usage("grid extents must be increasing"));
        }
        if nx < ghost || (two_d && ny < ghost) {
            return Err(Error::usage(format!(
                "grid of {nx}x{ny} zones is smaller than the ghost width {ghost}"
            )));
        }
        Ok(Self {
            nx,
            ny,
            x_range,
            y_range,
            ghost,
            two_d,
            solid: None,
        })
    }

    /// Marks interior zones whose centres satisfy `inside` as solid.
    pub fn with_solid(mut self, inside: impl Fn(f64, f64) -> bool) -> Self {
        let mut mask = vec![false; self.nx * self.ny];
        for j in 0..self.ny {
            for i in 0..self.nx {
                mask[j * self.nx + i] = inside(self.x_center(i as i64), self.y_center(j as i64));
            }
        }
        self.solid = mask.iter().any(|&s| s).then_some(mask);
        self
    }

    pub fn is_2d(&self) -> bool {
        self.two_d
    }

    pub fn has_solid(&self) -> bool {
        self.solid.is_some()
    }

    /// Whether interior zone `(i, j)` is solid; zones outside the interior are not.
    pub fn is_solid(&self, i: i64, j: i64) -> bool {
        match &self.solid {
            Some(m) if i >= 0 && j >= 0 && (i as usize) < self.nx && (j as usize) < self.ny => {
                m[j as usize * self.nx + i as usize]
            }
            _ => false,
        }
    }

    pub fn dx(&self) -> f64 {
        (self.x_range.1 - self.x_range.0) / self.nx as f64
    }

    pub fn dy(&self) -> f64 {
        if self.two_d {
            (self.y_range.1 - self.y_range.0) / self.ny as f64
        } else {
            self.y_range.1 - self.y_range.0
        }
    }

    pub fn gx(&self) -> usize {
        self.ghost
    }

    pub fn gy(&self) -> usize {
        if self.two_d { self.ghost } else { 0 }
    }

    /// Total zones in x including ghosts.
    pub fn nxt(&self) -> usize {
        self.nx + 2 * self.gx()
    }

    pub fn nyt(&self) -> usize {
        self.ny + 2 * self.gy()
    }

    /// Centre of interior zone `i`; negative or large `i` address ghosts.
    pub fn x_center(&self, i: i64) -> f64 {
        self.x_range.0 + (i as f64 + 0.5) * self.dx()
    }

    pub fn y_center(&self, j: i64) -> f64 {
        if self.two_d {
            self.y_range.0 + (j as f64 + 0.5) * self.dy()
        } else {
            0.5 * (self.y_range.0 + self.y_range.1)
        }
    }

    /// Flat zone index of interior coordinates `(i, j)`.
    pub fn index(&self, i: i64, j: i64) -> usize {
        let it = (i + self.gx() as i64) as usize;
        let jt = (j + self.gy() as i64) as usize;
        jt * self.nxt() + it
    }

    pub fn interior(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        (0..self.ny as i64).flat_map(move |j| (0..self.nx as i64).map(move |i| (i, j)))
    }
}

/// Ghost-padded array of `nvar` components per zone.
#[derive(Debug, Clone, PartialEq)]
pub struct StateArray {
    pub nvar: usize,
    pub data: Vec<f64>,
}

impl StateArray {
    pub fn zeros(grid: &Grid, nvar: usize) -> Self {
        Self {
            nvar,
            data: vec![0.0; grid.nxt() * grid.nyt() * nvar],
        }
    }

    pub fn zone(&self, grid: &Grid, i: i64, j: i64) -> &[f64] {
        let k = grid.index(i, j) * self.nvar;
        &self.data[k..k + self.nvar]
    }

    pub fn zone_mut(&mut self, grid: &Grid, i: i64, j: i64) -> &mut [f64] {
        let k = grid.index(i, j) * self.nvar;
        &mut self.data[k..k + self.nvar]
    }

    pub fn get<const N: usize>(&self, grid: &Grid, i: i64, j: i64) -> [f64; N] {
        let k = grid.index(i, j) * N;
        self.data[k..k + N].try_into().expect("component count")
    }

    pub fn set<const N: usize>(&mut self, grid: &Grid, i: i64, j: i64, v: &[f64; N]) {
        let k = grid.index(i, j) * N;
        self.data[k..k + N].copy_from_slice(v);
    }

    /// Sum of each component over interior zones, times the zone volume.
    pub fn totals(&self, grid: &Grid) -> Vec<f64> {
        let mut t = vec![0.0; self.nvar];
        let vol = grid.dx() * grid.dy();
        for (i, j) in grid.interior() {
            for (a, b) in t.iter_mut().zip(self.zone(grid, i, j)) {
                *a += b * vol;
            }
        }
        t
    }
}
