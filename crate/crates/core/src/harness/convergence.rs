//! Grid convergence studies against exact solutions.

use super::norms::{error_norms, observed_order};
use super::problems::ProblemSpec;
use super::run::{boundary_conditions, build_grid, dispatch, initial_state, run_problem, RunConfig};
use crate::error::{Error, Result};
use crate::order::SchemeOrder;
use crate::systems::SystemKind;
use crate::time::{compute_dt, TimeIntegrator};

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    /// Zones per side.
    pub mesh: usize,
    pub l1_error: f64,
    /// Empty on the coarsest mesh.
    pub l1_order: Option<f64>,
    pub linf_error: f64,
    pub linf_order: Option<f64>,
}

/// Time integrator used by accuracy studies: SSP-RK3 for order 3 and the
/// five-stage fourth order scheme above.
pub fn accuracy_integrator(order: SchemeOrder) -> TimeIntegrator {
    match order {
        SchemeOrder::Third => TimeIntegrator::SspRk3,
        _ => TimeIntegrator::SspRk4,
    }
}

/// Exponent `e` in `dt ~ dx^e` that keeps the temporal error of the given
/// integrator below the spatial one.
pub fn dt_exponent(order: SchemeOrder) -> f64 {
    let p = order.as_usize() as f64;
    let q = accuracy_integrator(order).order() as f64;
    (p / q).max(1.0)
}

/// Step size on an `n`-zone mesh: the CFL step of the coarsest mesh scaled by
/// `(n0 / n)^e`, then shrunk so an integer number of steps reaches `t_end`.
pub fn refined_dt(dt0: f64, n0: usize, n: usize, exponent: f64, t_end: f64) -> f64 {
    let dt = dt0 * (n0 as f64 / n as f64).powf(exponent);
    if t_end <= 0.0 {
        return dt;
    }
    let steps = (t_end / dt - 1e-9).ceil().max(1.0);
    t_end / steps
}

fn coarse_dt(spec: &ProblemSpec, n: usize, order: SchemeOrder, cfl: f64) -> Result<f64> {
    let grid = build_grid(spec, n, n, order)?;
    let bcs = boundary_conditions(spec)?;
    let state = initial_state(spec, &grid, &bcs)?;
    dispatch!(spec.system, |s, N| compute_dt::<N, _>(&s, &grid, &state, cfl))
}

/// Runs `spec` at `order` on each mesh (zones per side, ascending) and
/// measures the density error against the exact solution at `base.t_end`.
pub fn convergence_study(
    spec: &ProblemSpec,
    order: SchemeOrder,
    meshes: &[usize],
    base: &RunConfig,
) -> Result<Vec<ConvergenceRow>> {
    let exact = spec
        .exact
        .as_ref()
        .ok_or_else(|| Error::usage(format!("problem '{}' has no exact solution", spec.name)))?;
    if meshes.is_empty() || meshes.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::usage("meshes must be a non-empty increasing list"));
    }
    let dt0 = coarse_dt(spec, meshes[0], order, base.cfl)?;
    let e = dt_exponent(order);
    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(meshes.len());
    for &n in meshes {
        let mut cfg = base.clone();
        cfg.order = order;
        cfg.nx = n;
        cfg.ny = n;
        cfg.integrator = accuracy_integrator(order);
        cfg.fixed_dt = Some(refined_dt(dt0, meshes[0], n, e, cfg.t_end));
        let out = run_problem(spec, &cfg)?;
        let mut num = Vec::with_capacity(out.primitives.len());
        let mut reference = Vec::with_capacity(out.primitives.len());
        for ((x, y), w) in out.coordinates().zip(&out.primitives) {
            num.push(w[0]);
            reference.push(exact(x, y, out.t)?[0]);
        }
        let (l1, linf) = error_norms(&num, &reference)?;
        let (l1_order, linf_order) = match rows.last() {
            Some(prev) => (
                Some(observed_order(prev.l1_error, l1, prev.mesh, n)),
                Some(observed_order(prev.linf_error, linf, prev.mesh, n)),
            ),
            None => (None, None),
        };
        rows.push(ConvergenceRow { mesh: n, l1_error: l1, l1_order, linf_error: linf, linf_order });
    }
    Ok(rows)
}
