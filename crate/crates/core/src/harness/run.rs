//! Time-marching driver: builds the grid, initial data and boundaries of a
//! registered problem and integrates it to the final time.

use std::sync::Arc;

use super::problems::{EdgeSpec, ProblemSpec};
use crate::error::{Error, Result};
use crate::mesh::{fill_ghosts, BoundaryConditions, EdgeCondition, Grid, StateArray};
use crate::order::SchemeOrder;
use crate::riemann::RiemannSolverKind;
use crate::scheme::{semidiscrete_rhs, BoundaryProjection, SchemeConfig};
use crate::systems::{Direction, Euler, HyperbolicSystem, SystemKind};
use crate::time::{compute_dt, ssp_rk_step, TimeIntegrator};
use crate::weno_center::CenterVariant;

/// Calls `$body` with `$s` bound to the concrete system and `$n` to its
/// number of components.
macro_rules! dispatch {
    ($kind:expr, |$s:ident, $n:ident| $body:expr) => {
        match $kind {
            SystemKind::Euler($s) => {
                const $n: usize = 4;
                $body
            }
            SystemKind::Rhd($s) => {
                const $n: usize = 4;
                $body
            }
            SystemKind::TenMoment($s) => {
                const $n: usize = 6;
                $body
            }
        }
    };
}
pub(crate) use dispatch;

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub order: SchemeOrder,
    pub nx: usize,
    /// Ignored for one-dimensional problems.
    pub ny: usize,
    pub riemann: RiemannSolverKind,
    pub cfl: f64,
    pub integrator: TimeIntegrator,
    /// Flattener threshold; `None` turns the flattener off.
    pub kappa: Option<f64>,
    pub t_end: f64,
    /// Uniform step used instead of the CFL condition. The last step is
    /// shortened to land on `t_end`.
    pub fixed_dt: Option<f64>,
    pub center_variant: Option<CenterVariant>,
    /// Linear weights `(hi, avg, lo)` overriding the defaults.
    pub gammas: Option<[f64; 3]>,
    /// Small constant in the nonlinear weights.
    pub epsilon: Option<f64>,
    pub characteristic_center: bool,
    pub boundary_projection: BoundaryProjection,
    pub max_steps: Option<usize>,
}

impl RunConfig {
    /// Defaults registered with the problem.
    pub fn from_problem(spec: &ProblemSpec) -> Self {
        Self {
            order: spec.default_order,
            nx: spec.default_zones.0,
            ny: spec.default_zones.1,
            riemann: spec.riemann,
            cfl: spec.cfl,
            integrator: spec.integrator,
            kappa: spec.flattener,
            t_end: spec.t_end,
            fixed_dt: None,
            center_variant: None,
            gammas: None,
            epsilon: None,
            characteristic_center: true,
            boundary_projection: BoundaryProjection::ComponentWise,
            max_steps: None,
        }
    }

    pub fn scheme(&self) -> SchemeConfig {
        let mut s = SchemeConfig::new(self.order, self.riemann);
        if let Some(v) = self.center_variant {
            s.weno = s.weno.with_variant(v);
        }
        if let Some([hi, avg, lo]) = self.gammas {
            s.weno.gamma_hi = hi;
            s.weno.gamma_avg = avg;
            s.weno.gamma_lo = lo;
        }
        if let Some(e) = self.epsilon {
            s.weno.epsilon = e;
        }
        s.characteristic_center = self.characteristic_center;
        s.boundary_projection = self.boundary_projection;
        s.flattener_kappa = self.kappa;
        s
    }
}

/// Final state of a run.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub problem: String,
    pub system: &'static str,
    pub grid: Grid,
    /// Conserved variables including ghosts.
    pub state: StateArray,
    /// Primitive variables of interior zones, x fastest.
    pub primitives: Vec<Vec<f64>>,
    pub primitive_names: Vec<&'static str>,
    pub t: f64,
    pub steps: usize,
    pub config: RunConfig,
}

impl RunOutput {
    /// Zone centres in the order of `primitives`.
    pub fn coordinates(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.grid
            .interior()
            .map(|(i, j)| (self.grid.x_center(i), self.grid.y_center(j)))
    }

    /// One primitive component over the interior.
    pub fn field(&self, k: usize) -> Vec<f64> {
        self.primitives.iter().map(|w| w[k]).collect()
    }

    /// `key = value` lines describing the run.
    pub fn metadata(&self) -> Vec<(String, String)> {
        let c = &self.config;
        vec![
            ("problem".into(), self.problem.clone()),
            ("system".into(), self.system.into()),
            ("order".into(), c.order.to_string()),
            ("zones".into(), if self.grid.is_2d() { format!("{}x{}", self.grid.nx, self.grid.ny) } else { self.grid.nx.to_string() }),
            ("riemann".into(), format!("{:?}", c.riemann).to_lowercase()),
            ("integrator".into(), format!("{:?}", c.integrator)),
            ("cfl".into(), c.cfl.to_string()),
            ("flattener".into(), c.kappa.map(|k| format!("on (kappa = {k})")).unwrap_or_else(|| "off".into())),
            ("t".into(), self.t.to_string()),
            ("steps".into(), self.steps.to_string()),
        ]
    }
}

/// Conserved state from primitives for a runtime-selected system.
pub fn prim_to_cons(kind: SystemKind, w: &[f64]) -> Result<Vec<f64>> {
    dispatch!(kind, |s, N| {
        let a: [f64; N] = w
            .try_into()
            .map_err(|_| Error::usage(format!("expected {} primitives, got {}", N, w.len())))?;
        Ok(s.prim_to_cons(&a)?.to_vec())
    })
}

pub fn cons_to_prim(kind: SystemKind, u: &[f64]) -> Result<Vec<f64>> {
    dispatch!(kind, |s, N| {
        let a: [f64; N] = u
            .try_into()
            .map_err(|_| Error::usage(format!("expected {} conserved values, got {}", N, u.len())))?;
        Ok(s.cons_to_prim(&a)?.to_vec())
    })
}

fn odd_components(kind: SystemKind, dir: Direction) -> Vec<usize> {
    dispatch!(kind, |s, N| HyperbolicSystem::<N>::odd_components(&s, dir))
}

/// Grid for a problem with the ghost width the order needs.
pub fn build_grid(spec: &ProblemSpec, nx: usize, ny: usize, order: SchemeOrder) -> Result<Grid> {
    let g = order.ghost_width();
    let grid = if spec.two_d {
        Grid::new_2d(nx, ny, spec.x_range, spec.y_range, g)?
    } else {
        Grid::new_1d(nx, spec.x_range, g)?
    };
    Ok(match spec.step {
        Some(step) => grid.with_solid(move |x, y| x >= step.x0 && y <= step.height),
        None => grid,
    })
}

/// Converts the primitive-valued edge descriptions into conserved ones.
pub fn boundary_conditions(spec: &ProblemSpec) -> Result<BoundaryConditions> {
    let kind = spec.system;
    let nvar = kind.nvar();
    let convert = |e: &EdgeSpec| -> Result<EdgeCondition> {
        Ok(match e {
            EdgeSpec::Periodic => EdgeCondition::Periodic,
            EdgeSpec::Outflow => EdgeCondition::Outflow,
            EdgeSpec::Reflective => EdgeCondition::Reflective,
            EdgeSpec::Dirichlet(w) => EdgeCondition::Dirichlet(prim_to_cons(kind, w)?),
            EdgeSpec::Mixed(f) => {
                let f = Arc::clone(f);
                // an inadmissible ghost state surfaces as NaN in the next step
                EdgeCondition::Mixed(Arc::new(move |x, y, t| {
                    f(x, y, t).map(|w| prim_to_cons(kind, &w).unwrap_or_else(|_| vec![f64::NAN; nvar]))
                }))
            }
        })
    };
    let bcs = BoundaryConditions {
        left: convert(&spec.edges[0])?,
        right: convert(&spec.edges[1])?,
        bottom: convert(&spec.edges[2])?,
        top: convert(&spec.edges[3])?,
        odd_x: odd_components(kind, Direction::X),
        odd_y: odd_components(kind, Direction::Y),
    };
    bcs.validate(nvar)?;
    Ok(bcs)
}

/// Conserved initial data sampled at zone centres, ghosts filled at `t = 0`.
pub fn initial_state(spec: &ProblemSpec, grid: &Grid, bcs: &BoundaryConditions) -> Result<StateArray> {
    let mut state = StateArray::zeros(grid, spec.system.nvar());
    for (i, j) in grid.interior() {
        let w = (spec.initial)(grid.x_center(i), grid.y_center(j));
        let u = prim_to_cons(spec.system, &w).map_err(|e| e.at_zone(i, j))?;
        state.zone_mut(grid, i, j).copy_from_slice(&u);
    }
    fill_ghosts(&mut state, grid, bcs, 0.0)?;
    Ok(state)
}

/// A problem being integrated in time.
pub struct Simulation {
    spec: ProblemSpec,
    cfg: RunConfig,
    scheme: SchemeConfig,
    grid: Grid,
    bcs: BoundaryConditions,
    state: StateArray,
    t: f64,
    steps: usize,
}

impl Simulation {
    pub fn new(spec: ProblemSpec, cfg: RunConfig) -> Result<Self> {
        if !(cfg.t_end >= 0.0) {
            return Err(Error::usage("final time must be non-negative"));
        }
        if let Some(dt) = cfg.fixed_dt
            && !(dt > 0.0) {
                return Err(Error::usage("fixed time step must be positive"));
            }
        let scheme = cfg.scheme();
        scheme.weno.validate()?;
        let grid = build_grid(&spec, cfg.nx, cfg.ny, cfg.order)?;
        let bcs = boundary_conditions(&spec)?;
        let state = initial_state(&spec, &grid, &bcs)?;
        Ok(Self { spec, cfg, scheme, grid, bcs, state, t: 0.0, steps: 0 })
    }

    pub fn time(&self) -> f64 {
        self.t
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn state(&self) -> &StateArray {
        &self.state
    }

    pub fn config(&self) -> &RunConfig {
        &self.cfg
    }

    pub fn spec(&self) -> &ProblemSpec {
        &self.spec
    }

    pub fn finished(&self) -> bool {
        self.t >= self.cfg.t_end
    }

    /// Takes one step, never past `t_end`. Returns the step size used.
    pub fn step(&mut self) -> Result<f64> {
        if self.finished() {
            return Ok(0.0);
        }
        let t0 = self.t;
        let dt = dispatch!(self.spec.system, |s, N| self.step_with::<N, _>(&s))
            .map_err(|e| e.at_time(t0))?;
        if let (SystemKind::Euler(e), Some(_)) = (self.spec.system, self.spec.step) {
            self.corner_fix(&e)?;
        }
        self.steps += 1;
        Ok(dt)
    }

    /// Steps until `t_end` or the step limit.
    pub fn run(&mut self) -> Result<()> {
        while !self.finished() {
            if let Some(m) = self.cfg.max_steps
                && self.steps >= m {
                    break;
                }
            self.step()?;
        }
        Ok(())
    }

    fn step_with<const N: usize, S: HyperbolicSystem<N>>(&mut self, sys: &S) -> Result<f64> {
        let remaining = self.cfg.t_end - self.t;
        let mut dt = match self.cfg.fixed_dt {
            Some(d) => d,
            None => compute_dt(sys, &self.grid, &self.state, self.cfg.cfl)?,
        };
        let last = dt >= remaining * (1.0 - 1e-12);
        if last {
            dt = remaining;
        }
        let (grid, bcs, scheme) = (&self.grid, &self.bcs, &self.scheme);
        let mut rhs = |t: f64, u: &mut StateArray, out: &mut StateArray| -> Result<()> {
            fill_ghosts(u, grid, bcs, t)?;
            semidiscrete_rhs(sys, grid, u, scheme, out)
        };
        ssp_rk_step(self.cfg.integrator, &mut rhs, &mut self.state, self.t, dt)?;
        self.t = if last { self.cfg.t_end } else { self.t + dt };
        // every interior fluid zone must stay admissible
        for (i, j) in self.grid.interior() {
            if self.grid.is_solid(i, j) {
                continue;
            }
            let u = self.state.get::<N>(&self.grid, i, j);
            sys.cons_to_prim(&u).map_err(|e| e.at_zone(i, j))?;
        }
        fill_ghosts(&mut self.state, &self.grid, &self.bcs, self.t)?;
        Ok(dt)
    }

    /// Step-corner treatment: the 2x2 block of zones above and right of the
    /// corner gets the entropy and total enthalpy of the zone just below and
    /// left of the corner, keeping its own pressure and flow direction.
    fn corner_fix(&mut self, sys: &Euler) -> Result<()> {
        let Some(step) = self.spec.step else { return Ok(()) };
        let g = &self.grid;
        let ic = ((step.x0 - g.x_range.0) / g.dx()).round() as i64;
        let jc = ((step.height - g.y_range.0) / g.dy()).round() as i64;
        if ic < 1 || jc < 1 || ic + 1 >= g.nx as i64 || jc + 1 >= g.ny as i64 {
            return Ok(());
        }
        let gamma = sys.gamma;
        let r = sys.cons_to_prim(&self.state.get::<4>(g, ic - 1, jc - 1))?;
        let entropy = r[3] / r[0].powf(gamma);
        let enthalpy = gamma / (gamma - 1.0) * r[3] / r[0] + 0.5 * (r[1] * r[1] + r[2] * r[2]);
        for (i, j) in [(ic, jc), (ic + 1, jc), (ic, jc + 1), (ic + 1, jc + 1)] {
            let w = sys.cons_to_prim(&self.state.get::<4>(g, i, j))?;
            let rho = (w[3] / entropy).powf(1.0 / gamma);
            let speed = (w[1] * w[1] + w[2] * w[2]).sqrt();
            let target = (2.0 * (enthalpy - gamma / (gamma - 1.0) * w[3] / rho)).max(0.0).sqrt();
            let (vx, vy) = if speed > 0.0 {
                (w[1] * target / speed, w[2] * target / speed)
            } else {
                (target, 0.0)
            };
            let u = sys.prim_to_cons(&[rho, vx, vy, w[3]])?;
            self.state.set(g, i, j, &u);
        }
        fill_ghosts(&mut self.state, &self.grid, &self.bcs, self.t)
    }

    /// Snapshot of the current state.
    pub fn output(&self) -> Result<RunOutput> {
        let kind = self.spec.system;
        let mut primitives = Vec::with_capacity(self.grid.nx * self.grid.ny);
        for (i, j) in self.grid.interior() {
            let u = self.state.zone(&self.grid, i, j);
            primitives.push(cons_to_prim(kind, u).map_err(|e| e.at_zone(i, j))?);
        }
        Ok(RunOutput {
            problem: self.spec.name.to_string(),
            system: kind.name(),
            grid: self.grid.clone(),
            state: self.state.clone(),
            primitives,
            primitive_names: kind.primitive_names(),
            t: self.t,
            steps: self.steps,
            config: self.cfg.clone(),
        })
    }
}

/// Integrates `spec` to `cfg.t_end`.
pub fn run_problem(spec: &ProblemSpec, cfg: &RunConfig) -> Result<RunOutput> {
    let mut sim = Simulation::new(spec.clone(), cfg.clone())?;
    sim.run()?;
    sim.output()
}

/// Semidiscrete right-hand side of the initial data, interior zones only.
pub fn initial_rhs(spec: &ProblemSpec, cfg: &RunConfig) -> Result<(Grid, StateArray)> {
    let grid = build_grid(spec, cfg.nx, cfg.ny, cfg.order)?;
    let bcs = boundary_conditions(spec)?;
    let state = initial_state(spec, &grid, &bcs)?;
    let mut rhs = StateArray::zeros(&grid, spec.system.nvar());
    let scheme = cfg.scheme();
    dispatch!(spec.system, |s, N| semidiscrete_rhs::<N, _>(&s, &grid, &state, &scheme, &mut rhs))?;
    Ok((grid, rhs))
}
