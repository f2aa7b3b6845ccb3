//! Hyperbolic systems: conserved/primitive maps, fluxes, wave speeds and
//! eigenvector bases.
//!
//! Each system implements its x-direction physics; the y direction is obtained
//! by swapping the x and y components of the state.

mod euler;
mod rhd;
mod ten_moment;

pub use euler::Euler;
pub use rhd::Rhd;
pub use ten_moment::TenMoment;

use nalgebra::SMatrix;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    X,
    Y,
}

pub type Matrix<const N: usize> = SMatrix<f64, N, N>;

/// Eigenvalues with right eigenvectors as columns of `right` and left
/// eigenvectors as rows of `left`, normalised so that `left * right = I`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigensystem<const N: usize> {
    pub eigenvalues: [f64; N],
    pub right: Matrix<N>,
    pub left: Matrix<N>,
}

impl<const N: usize> Eigensystem<N> {
    /// Builds the left basis by inverting the right one.
    pub fn from_right(eigenvalues: [f64; N], right: Matrix<N>) -> Result<Self> {
        let left = right
            .try_inverse()
            .ok_or_else(|| Error::numerical("singular eigenvector matrix"))?;
        Ok(Self {
            eigenvalues,
            right,
            left,
        })
    }

    /// `L v`
    pub fn to_characteristic(&self, v: &[f64; N]) -> [f64; N] {
        mat_vec(&self.left, v)
    }

    /// `R v`
    pub fn from_characteristic(&self, v: &[f64; N]) -> [f64; N] {
        mat_vec(&self.right, v)
    }
}

pub(crate) fn mat_vec<const N: usize>(m: &Matrix<N>, v: &[f64; N]) -> [f64; N] {
    let mut out = [0.0; N];
    for (r, o) in out.iter_mut().enumerate() {
        let mut s = 0.0;
        for c in 0..N {
            s += m[(r, c)] * v[c];
        }
        *o = s;
    }
    out
}

fn norm<const N: usize>(v: &[f64; N]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

pub(crate) fn check_finite<const N: usize>(v: &[f64; N], what: &str) -> Result<()> {
    if v.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(Error::numerical(format!("non-finite {what}: {v:?}")))
    }
}

pub trait HyperbolicSystem<const N: usize>: Send + Sync {
    fn name(&self) -> &'static str;

    fn primitive_names(&self) -> [&'static str; N];

    fn prim_to_cons(&self, w: &[f64; N]) -> Result<[f64; N]>;

    fn cons_to_prim(&self, u: &[f64; N]) -> Result<[f64; N]>;

    /// Flux in x.
    fn flux_x(&self, u: &[f64; N]) -> Result<[f64; N]>;

    /// Eigen-decomposition of the x Jacobian.
    fn eigen_x(&self, u: &[f64; N]) -> Result<Eigensystem<N>>;

    /// Smallest and largest x eigenvalue.
    fn wave_speeds_x(&self, u: &[f64; N]) -> Result<(f64, f64)>;

    /// Exchange x and y components; an involution.
    fn swap_xy(&self, u: &[f64; N]) -> [f64; N];

    /// Sound speed used by the flattener, from primitives.
    fn sound_speed(&self, w: &[f64; N]) -> f64;

    /// Scalar pressure used by the flattener spread rule, from primitives.
    fn flattener_pressure(&self, w: &[f64; N]) -> f64;

    /// `A_x(u) v` by a central directional difference.
    fn jacobian_vector_x(&self, u: &[f64; N], v: &[f64; N]) -> Result<[f64; N]> {
        fd_jacobian_vector(|s| self.flux_x(s), u, v)
    }

    /// Conserved components that flip sign under reflection across an x wall.
    fn odd_components_x(&self) -> &'static [usize] {
        &[1]
    }

    fn odd_components(&self, dir: Direction) -> Vec<usize> {
        match dir {
            Direction::X => self.odd_components_x().to_vec(),
            Direction::Y => {
                let mut e = [0.0; N];
                for &k in self.odd_components_x() {
                    e[k] = 1.0;
                }
                let s = self.swap_xy(&e);
                (0..N).filter(|&k| s[k] != 0.0).collect()
            }
        }
    }

    /// Velocity components from primitives.
    fn velocity(&self, w: &[f64; N]) -> (f64, f64) {
        (w[1], w[2])
    }

    fn flux(&self, u: &[f64; N], dir: Direction) -> Result<[f64; N]> {
        match dir {
            Direction::X => self.flux_x(u),
            Direction::Y => Ok(self.swap_xy(&self.flux_x(&self.swap_xy(u))?)),
        }
    }

    fn jacobian_vector(&self, u: &[f64; N], v: &[f64; N], dir: Direction) -> Result<[f64; N]> {
        match dir {
            Direction::X => self.jacobian_vector_x(u, v),
            Direction::Y => Ok(self.swap_xy(
                &self.jacobian_vector_x(&self.swap_xy(u), &self.swap_xy(v))?,
            )),
        }
    }

    fn eigenvectors(&self, u: &[f64; N], dir: Direction) -> Result<Eigensystem<N>> {
        match dir {
            Direction::X => self.eigen_x(u),
            Direction::Y => {
                let e = self.eigen_x(&self.swap_xy(u))?;
                let p = self.swap_permutation();
                Ok(Eigensystem {
                    eigenvalues: e.eigenvalues,
                    right: p * e.right,
                    left: e.left * p,
                })
            }
        }
    }

    fn eigenvalue_bounds(&self, u: &[f64; N], dir: Direction) -> Result<(f64, f64)> {
        match dir {
            Direction::X => self.wave_speeds_x(u),
            Direction::Y => self.wave_speeds_x(&self.swap_xy(u)),
        }
    }

    /// Davis estimate of the slowest and fastest signal.
    fn signal_speeds(&self, ul: &[f64; N], ur: &[f64; N], dir: Direction) -> Result<(f64, f64)> {
        let (a, b) = self.eigenvalue_bounds(ul, dir)?;
        let (c, d) = self.eigenvalue_bounds(ur, dir)?;
        Ok((a.min(c), b.max(d)))
    }

    fn max_abs_speed(&self, u: &[f64; N], dir: Direction) -> Result<f64> {
        let (a, b) = self.eigenvalue_bounds(u, dir)?;
        Ok(a.abs().max(b.abs()))
    }

    /// Matrix form of [`HyperbolicSystem::swap_xy`].
    fn swap_permutation(&self) -> Matrix<N> {
        let mut p = Matrix::<N>::zeros();
        for c in 0..N {
            let mut e = [0.0; N];
            e[c] = 1.0;
            let s = self.swap_xy(&e);
            for r in 0..N {
                p[(r, c)] = s[r];
            }
        }
        p
    }
}

/// Central difference of `f` along `v`, shrinking the step when a perturbed
/// state is inadmissible.
pub fn fd_jacobian_vector<const N: usize>(
    f: impl Fn(&[f64; N]) -> Result<[f64; N]>,
    u: &[f64; N],
    v: &[f64; N],
) -> Result<[f64; N]> {
    let nv = norm(v);
    if nv == 0.0 {
        return Ok([0.0; N]);
    }
    let mut h = 1e-7 * (norm(u) / nv + 1e-12);
    let mut last = None;
    for _ in 0..4 {
        let mut up = *u;
        let mut um = *u;
        for k in 0..N {
            up[k] += h * v[k];
            um[k] -= h * v[k];
        }
        match (f(&up), f(&um)) {
            (Ok(fp), Ok(fm)) => {
                let mut out = [0.0; N];
                for k in 0..N {
                    out[k] = (fp[k] - fm[k]) / (2.0 * h);
                }
                return Ok(out);
            }
            (Err(e), _) | (_, Err(e)) => last = Some(e),
        }
        h *= 0.1;
    }
    Err(last.unwrap_or_else(|| Error::numerical("directional difference failed")))
}

/// Runtime choice of system, used by the harness and the CLI.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SystemKind {
    Euler(Euler),
    Rhd(Rhd),
    TenMoment(TenMoment),
}

impl SystemKind {
    pub fn name(&self) -> &'static str {
        match self {
            SystemKind::Euler(s) => HyperbolicSystem::<4>::name(s),
            SystemKind::Rhd(s) => HyperbolicSystem::<4>::name(s),
            SystemKind::TenMoment(s) => HyperbolicSystem::<6>::name(s),
        }
    }

    pub fn nvar(&self) -> usize {
        match self {
            SystemKind::Euler(_) | SystemKind::Rhd(_) => 4,
            SystemKind::TenMoment(_) => 6,
        }
    }

    pub fn primitive_names(&self) -> Vec<&'static str> {
        match self {
            SystemKind::Euler(s) => s.primitive_names().to_vec(),
            SystemKind::Rhd(s) => s.primitive_names().to_vec(),
            SystemKind::TenMoment(s) => s.primitive_names().to_vec(),
        }
    }
}
