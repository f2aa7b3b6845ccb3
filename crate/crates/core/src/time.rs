//! Strong-stability-preserving Runge-Kutta integrators and the CFL time step.

use crate::error::{Error, Result};
use crate::mesh::{Grid, StateArray};
use crate::systems::{Direction, HyperbolicSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TimeIntegrator {
    /// Three-stage third-order (Shu-Osher).
    SspRk3,
    /// Five-stage fourth-order (Spiteri-Ruuth).
    SspRk4,
}

impl TimeIntegrator {
    pub fn order(self) -> usize {
        match self {
            TimeIntegrator::SspRk3 => 3,
            TimeIntegrator::SspRk4 => 4,
        }
    }
}

impl std::str::FromStr for TimeIntegrator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "rk3" | "ssprk3" => Ok(TimeIntegrator::SspRk3),
            "rk4" | "ssprk4" | "ssprk54" => Ok(TimeIntegrator::SspRk4),
            _ => Err(Error::usage(format!("unknown time integrator '{s}'"))),
        }
    }
}

/// Shu-Osher form: stage `s` is `sum_k alpha[s][k] u_k + beta[s][k] dt L(u_k)`.
struct Tableau {
    alpha: &'static [&'static [f64]],
    beta: &'static [&'static [f64]],
}

const RK3: Tableau = Tableau {
    alpha: &[&[1.0], &[0.75, 0.25], &[1.0 / 3.0, 0.0, 2.0 / 3.0]],
    beta: &[&[1.0], &[0.0, 0.25], &[0.0, 0.0, 2.0 / 3.0]],
};

const RK54: Tableau = Tableau {
    alpha: &[
        &[1.0],
        &[0.444370493651235, 0.555629506348765],
        &[0.620101851488403, 0.0, 0.379898148511597],
        &[0.178079954393132, 0.0, 0.0, 0.821920045606868],
        &[0.0, 0.0, 0.517231671970585, 0.096059710526147, 0.386708617503269],
    ],
    beta: &[
        &[0.391752226571890],
        &[0.0, 0.368410593050371],
        &[0.0, 0.0, 0.251891774271694],
        &[0.0, 0.0, 0.0, 0.544974750228521],
        &[0.0, 0.0, 0.0, 0.063692468666290, 0.226007483236906],
    ],
};

/// Right-hand side callback: `(t, state, out)`. The state is mutable so that
/// the callback can fill its ghost zones in place.
pub trait Rhs {
    fn eval(&mut self, t: f64, state: &mut StateArray, out: &mut StateArray) -> Result<()>;
}

impl<F> Rhs for F
where
    F: FnMut(f64, &mut StateArray, &mut StateArray) -> Result<()>,
{
    fn eval(&mut self, t: f64, state: &mut StateArray, out: &mut StateArray) -> Result<()> {
        self(t, state, out)
    }
}

/// Advance `state` from `t` to `t + dt`.
pub fn ssp_rk_step(
    kind: TimeIntegrator,
    rhs: &mut impl Rhs,
    state: &mut StateArray,
    t: f64,
    dt: f64,
) -> Result<()> {
    let tab = match kind {
        TimeIntegrator::SspRk3 => &RK3,
        TimeIntegrator::SspRk4 => &RK54,
    };
    let stages = tab.alpha.len();
    let mut us: Vec<StateArray> = Vec::with_capacity(stages + 1);
    let mut ls: Vec<Option<StateArray>> = Vec::with_capacity(stages);
    let mut ts: Vec<f64> = Vec::with_capacity(stages + 1);
    us.push(state.clone());
    ts.push(t);
    for s in 0..stages {
        let (alpha, beta) = (tab.alpha[s], tab.beta[s]);
        // evaluate L(u_k) lazily for the stages that need it
        for k in 0..=s {
            if beta[k] != 0.0 && ls.get(k).is_none_or(|l| l.is_none()) {
                while ls.len() <= k {
                    ls.push(None);
                }
                let mut out = StateArray {
                    nvar: state.nvar,
                    data: vec![0.0; state.data.len()],
                };
                rhs.eval(ts[k], &mut us[k], &mut out)?;
                ls[k] = Some(out);
            }
        }
        // the published coefficients are rounded; keep the combination convex
        let asum: f64 = alpha.iter().sum();
        let mut next = vec![0.0; state.data.len()];
        let mut tn = 0.0;
        for k in 0..=s {
            if alpha[k] != 0.0 {
                let a = alpha[k] / asum;
                for (n, u) in next.iter_mut().zip(&us[k].data) {
                    *n += a * u;
                }
                tn += a * ts[k];
            }
            if beta[k] != 0.0 {
                let l = ls[k].as_ref().expect("stage derivative evaluated");
                for (n, d) in next.iter_mut().zip(&l.data) {
                    *n += beta[k] * dt * d;
                }
                tn += beta[k] * dt;
            }
        }
        us.push(StateArray {
            nvar: state.nvar,
            data: next,
        });
        ts.push(tn);
    }
    *state = us.pop().expect("at least one stage");
    Ok(())
}

/// Largest stable step for the given CFL number over interior fluid zones.
pub fn compute_dt<const N: usize, S: HyperbolicSystem<N>>(
    system: &S,
    grid: &Grid,
    state: &StateArray,
    cfl: f64,
) -> Result<f64> {
    if !(cfl > 0.0) {
        return Err(Error::usage("CFL number must be positive"));
    }
    let mut sx: f64 = 0.0;
    let mut sy: f64 = 0.0;
    for (i, j) in grid.interior() {
        if grid.is_solid(i, j) {
            continue;
        }
        let u = state.get::<N>(grid, i, j);
        sx = sx.max(system.max_abs_speed(&u, Direction::X).map_err(|e| e.at_zone(i, j))?);
        if grid.is_2d() {
            sy = sy.max(system.max_abs_speed(&u, Direction::Y).map_err(|e| e.at_zone(i, j))?);
        }
    }
    let rate = sx / grid.dx() + if grid.is_2d() { sy / grid.dy() } else { 0.0 };
    if !(rate > 0.0) || !rate.is_finite() {
        return Err(Error::numerical("no finite signal speed for the time step"));
    }
    Ok(cfl / rate)
}
