//! The alternative finite difference update: face states from the centre
//! reconstruction, a Riemann solver at each face, and high-order corrections
//! from boundary interpolation of `w = A(U) dU/dxi`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::mesh::{flattener_eta, FlattenerField, Grid, StateArray};
use crate::order::SchemeOrder;
use crate::riemann::{self, RiemannSolverKind};
use crate::systems::{Direction, HyperbolicSystem};
use crate::weno_boundary::{
    boundary_derivatives, interp_boundary_unchecked, BoundaryDerivativeStack, OddDerivatives,
};
use crate::weno_center::{interp_center_unchecked, WenoConfig};

/// Exact coefficients `c2, c4, ...` multiplying the even flux derivatives.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrectionCoefficients {
    pub order: SchemeOrder,
    pub exact: Vec<BigRational>,
}

impl CorrectionCoefficients {
    pub fn as_f64(&self) -> [f64; 4] {
        let mut out = [0.0; 4];
        for (o, c) in out.iter_mut().zip(&self.exact) {
            *o = c.to_f64().unwrap_or(f64::NAN);
        }
        out
    }
}

/// Floating-point correction coefficients for the ninth-order scheme; lower
/// orders use a prefix.
pub const CORRECTIONS: [f64; 4] = [
    -1.0 / 24.0,
    7.0 / 5760.0,
    -31.0 / 967680.0,
    127.0 / 154828800.0,
];

fn taylor_gap(j: i64) -> BigRational {
    // ((1/2)^j - (-1/2)^j) / j!
    if j <= 0 || j % 2 == 0 {
        return BigRational::zero();
    }
    let mut fact = BigInt::one();
    for q in 2..=j {
        fact *= BigInt::from(q);
    }
    let pow = BigInt::from(2).pow((j - 1) as u32);
    BigRational::new(BigInt::one(), pow * fact)
}

/// Coefficients `a_1..a_K` (`K` = order) of `F = f + sum a_k f^(k)` such that
/// `F(1/2) - F(-1/2) = f'(0)` through order `K + 1`.
pub fn taylor_correction_solve(order: SchemeOrder) -> Vec<BigRational> {
    let k = order.as_usize();
    // Rows m = 2..=k+1, columns a_1..a_k.
    let mut a: Vec<Vec<BigRational>> = (0..k)
        .map(|r| {
            let m = r as i64 + 2;
            let mut row: Vec<BigRational> = (1..=k as i64).map(|c| taylor_gap(m - c)).collect();
            row.push(-taylor_gap(m));
            row
        })
        .collect();
    for col in 0..k {
        let piv = (col..k)
            .find(|&r| !a[r][col].is_zero())
            .expect("Taylor system is triangular with unit pivots");
        a.swap(col, piv);
        let p = a[col][col].clone();
        for v in a[col].iter_mut() {
            *v = &*v / &p;
        }
        for r in 0..k {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..=k {
                    let sub = &f * &a[col][c];
                    a[r][c] -= sub;
                }
            }
        }
    }
    a.into_iter().map(|row| row[k].clone()).collect()
}

pub fn derive_correction_coefficients(order: SchemeOrder) -> CorrectionCoefficients {
    let all = taylor_correction_solve(order);
    let exact = (0..order.correction_terms())
        .map(|q| all[2 * q + 1].clone())
        .collect();
    CorrectionCoefficients { order, exact }
}

/// `F* + sum_q c_{2q+2} d_{2q+1}` per component.
pub fn numerical_flux<const N: usize>(
    f_star: &[f64; N],
    stack: &BoundaryDerivativeStack<N>,
    order: SchemeOrder,
) -> [f64; N] {
    let nt = order.correction_terms();
    let mut out = *f_star;
    for (o, d) in out.iter_mut().zip(&stack.components) {
        for q in 0..nt {
            *o += CORRECTIONS[q] * d.0[q];
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryProjection {
    ComponentWise,
    /// Project onto the eigenvectors of the resolved interface state.
    Characteristic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeConfig {
    pub weno: WenoConfig,
    pub riemann: RiemannSolverKind,
    /// Reconstruct in characteristic variables of the zone.
    pub characteristic_center: bool,
    pub boundary_projection: BoundaryProjection,
    /// Flattener threshold `kappa`; `None` disables flattening.
    pub flattener_kappa: Option<f64>,
    /// Replace an inadmissible reconstructed face state by the zone value.
    pub face_fallback: bool,
}

impl SchemeConfig {
    pub fn new(order: SchemeOrder, riemann: RiemannSolverKind) -> Self {
        Self {
            weno: WenoConfig::new(order),
            riemann,
            characteristic_center: true,
            boundary_projection: BoundaryProjection::ComponentWise,
            flattener_kappa: None,
            face_fallback: true,
        }
    }

    pub fn order(&self) -> SchemeOrder {
        self.weno.order
    }
}

/// Per-line intermediate data.
struct ZoneRecon<const N: usize> {
    left: [f64; N],
    right: [f64; N],
    w: [f64; N],
}

/// Flux differences `F_{i+1/2} - F_{i-1/2}` for the `n` interior zones of a
/// line padded by `g` ghosts on both sides. `loc` maps a local index to an
/// interior zone for error reporting.
#[allow(clippy::too_many_arguments)]
fn sweep_line<const N: usize, S: HyperbolicSystem<N>>(
    system: &S,
    cfg: &SchemeConfig,
    dir: Direction,
    line: &[[f64; N]],
    eta: Option<&[f64]>,
    g: usize,
    n: usize,
    loc: &dyn Fn(usize) -> (i64, i64),
    out: &mut [[f64; N]],
) -> Result<()> {
    let order = cfg.order();
    let hw = order.center_half_width();
    let (lb, rb) = order.boundary_reach();
    let zmin = g - 1 - lb;
    let zmax = g + n - 1 + rb;
    let err_at = |z: usize| {
        let (i, j) = loc(z);
        move |e: Error| e.at_zone(i, j)
    };

    let mut recon: Vec<ZoneRecon<N>> = Vec::with_capacity(zmax - zmin + 1);
    let mut win = vec![[0.0; N]; 2 * hw + 1];
    let mut comp = vec![0.0; 2 * hw + 1];
    for z in zmin..=zmax {
        let u = &line[z];
        let eig = if cfg.characteristic_center {
            system.eigenvectors(u, dir).ok()
        } else {
            None
        };
        for (o, slot) in win.iter_mut().enumerate() {
            let v = &line[z + o - hw];
            *slot = match &eig {
                Some(e) => e.to_characteristic(v),
                None => *v,
            };
        }
        let mut left = [0.0; N];
        let mut right = [0.0; N];
        let mut du = [0.0; N];
        for k in 0..N {
            for (c, v) in comp.iter_mut().zip(&win) {
                *c = v[k];
            }
            let r = interp_center_unchecked(&cfg.weno, &comp);
            left[k] = r.u_left;
            right[k] = r.u_right;
            du[k] = r.du_center;
        }
        if let Some(e) = &eig {
            left = e.from_characteristic(&left);
            right = e.from_characteristic(&right);
            du = e.from_characteristic(&du);
        }
        let w = system.jacobian_vector(u, &du, dir).map_err(err_at(z))?;
        recon.push(ZoneRecon { left, right, w });
    }
    let at = |z: usize| &recon[z - zmin];

    let nf = n + 1;
    let mut fnum = vec![[0.0; N]; nf];
    let bwin = lb + rb + 1;
    let mut wwin = vec![[0.0; N]; bwin];
    let mut comp = vec![0.0; bwin];
    for (f, fout) in fnum.iter_mut().enumerate() {
        let b = g - 1 + f; // zone on the left of this face
        let eta_face = eta.map_or(0.0, |e| e[b].max(e[b + 1]));
        let mut ul = at(b).right;
        let mut ur = at(b + 1).left;
        if eta_face > 0.0 {
            for k in 0..N {
                ul[k] = (1.0 - eta_face) * ul[k] + eta_face * line[b][k];
                ur[k] = (1.0 - eta_face) * ur[k] + eta_face * line[b + 1][k];
            }
        }
        let mut damp = 1.0 - eta_face;
        let rs = match riemann::solve(cfg.riemann, system, &ul, &ur, dir) {
            Ok(r) => r,
            Err(e) if cfg.face_fallback => {
                let _ = e;
                damp = 0.0;
                riemann::solve(cfg.riemann, system, &line[b], &line[b + 1], dir)
                    .map_err(err_at(b))?
            }
            Err(e) => return Err(err_at(b)(e)),
        };

        for (o, slot) in wwin.iter_mut().enumerate() {
            *slot = at(b + o - lb).w;
        }
        let eig = match cfg.boundary_projection {
            BoundaryProjection::Characteristic => system.eigenvectors(&rs.state, dir).ok(),
            BoundaryProjection::ComponentWise => None,
        };
        if let Some(e) = &eig {
            for slot in wwin.iter_mut() {
                *slot = e.to_characteristic(slot);
            }
        }
        let mut stack = [OddDerivatives::default(); N];
        for k in 0..N {
            for (c, v) in comp.iter_mut().zip(&wwin) {
                *c = v[k];
            }
            stack[k] = boundary_derivatives(&interp_boundary_unchecked(&cfg.weno, &comp), order);
        }
        if let Some(e) = &eig {
            for q in 0..4 {
                let mut v = [0.0; N];
                for k in 0..N {
                    v[k] = stack[k].0[q];
                }
                let back = e.from_characteristic(&v);
                for k in 0..N {
                    stack[k].0[q] = back[k];
                }
            }
        }
        let stack = BoundaryDerivativeStack { components: stack }.scaled(damp);
        *fout = numerical_flux(&rs.flux, &stack, order);
        for v in fout.iter() {
            if !v.is_finite() {
                return Err(err_at(b)(Error::numerical("non-finite numerical flux")));
            }
        }
    }
    for (i, o) in out.iter_mut().enumerate().take(n) {
        for k in 0..N {
            o[k] = fnum[i + 1][k] - fnum[i][k];
        }
    }
    Ok(())
}

/// Interior fluid runs `[a, b)` of a line of `len` zones.
fn fluid_segments(len: usize, solid: impl Fn(usize) -> bool) -> Vec<(usize, usize)> {
    let mut segs = Vec::new();
    let mut start = None;
    for i in 0..=len {
        let s = i == len || solid(i);
        match (s, start) {
            (false, None) => start = Some(i),
            (true, Some(a)) => {
                segs.push((a, i));
                start = None;
            }
            _ => {}
        }
    }
    segs
}

/// Evaluates `dU/dt = -(F_{i+1/2} - F_{i-1/2}) / dx` summed over directions.
/// Ghost zones of `state` must already be filled. Solid zones get zero.
pub fn semidiscrete_rhs<const N: usize, S: HyperbolicSystem<N>>(
    system: &S,
    grid: &Grid,
    state: &StateArray,
    cfg: &SchemeConfig,
    rhs: &mut StateArray,
) -> Result<()> {
    cfg.weno.validate()?;
    if state.nvar != N || rhs.nvar != N || state.data.len() != rhs.data.len() {
        return Err(Error::usage("state arrays do not match the system"));
    }
    if grid.ghost < cfg.order().ghost_width() {
        return Err(Error::usage(format!(
            "order {} needs {} ghost zones, grid has {}",
            cfg.order(),
            cfg.order().ghost_width(),
            grid.ghost
        )));
    }
    let flat: Option<FlattenerField> = match cfg.flattener_kappa {
        Some(kappa) => Some(flattener_eta(system, state, grid, kappa)?),
        None => None,
    };
    rhs.data.iter_mut().for_each(|v| *v = 0.0);

    let nx = grid.nx;
    let ny = grid.ny;
    let g = grid.ghost;
    let dirs: &[Direction] = if grid.is_2d() {
        &[Direction::X, Direction::Y]
    } else {
        &[Direction::X]
    };
    for &dir in dirs {
        let (n_along, n_across, h) = match dir {
            Direction::X => (nx, ny, grid.dx()),
            Direction::Y => (ny, nx, grid.dy()),
        };
        let odd = system.odd_components(dir);
        let zone = move |along: i64, across: i64| match dir {
            Direction::X => (along, across),
            Direction::Y => (across, along),
        };
        let mut line: Vec<[f64; N]> = Vec::new();
        let mut eline: Vec<f64> = Vec::new();
        let mut out: Vec<[f64; N]> = Vec::new();
        for c in 0..n_across as i64 {
            let segs = fluid_segments(n_along, |a| {
                let (i, j) = zone(a as i64, c);
                grid.is_solid(i, j)
            });
            for (a, b) in segs {
                let len = b - a;
                line.clear();
                eline.clear();
                // local index l covers zones a-g .. b+g
                for l in 0..len + 2 * g {
                    let p = a as i64 + l as i64 - g as i64;
                    let src = if p < a as i64 && a > 0 {
                        Some((a as i64 + (a as i64 - 1 - p)).min(b as i64 - 1))
                    } else if p >= b as i64 && b < n_along {
                        Some((b as i64 - 1 - (p - b as i64)).max(a as i64))
                    } else {
                        None
                    };
                    let (q, mirrored) = match src {
                        Some(m) => (m, true),
                        None => (p, false),
                    };
                    let (i, j) = zone(q, c);
                    let mut v = state.get::<N>(grid, i, j);
                    if mirrored {
                        for &k in &odd {
                            v[k] = -v[k];
                        }
                    }
                    line.push(v);
                    if let Some(f) = &flat {
                        eline.push(f.at(grid, i, j));
                    }
                }
                out.clear();
                out.resize(len, [0.0; N]);
                let loc = |l: usize| zone(a as i64 + l as i64 - g as i64, c);
                sweep_line(
                    system,
                    cfg,
                    dir,
                    &line,
                    flat.as_ref().map(|_| eline.as_slice()),
                    g,
                    len,
                    &loc,
                    &mut out,
                )?;
                for (l, d) in out.iter().enumerate() {
                    let (i, j) = zone(a as i64 + l as i64, c);
                    let r = rhs.zone_mut(grid, i, j);
                    for k in 0..N {
                        r[k] -= d[k] / h;
                    }
                }
            }
        }
    }
    Ok(())
}
