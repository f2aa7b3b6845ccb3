//! Registry of every test problem with its initial data, boundaries and
//! default run parameters.

use std::f64::consts::PI;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::order::SchemeOrder;
use crate::riemann::RiemannSolverKind;
use crate::systems::{Euler, Rhd, SystemKind, TenMoment};
use crate::time::TimeIntegrator;

use super::exact::exact_euler_riemann;

/// Primitive state as a function of `(x, y)`.
pub type PrimField = Arc<dyn Fn(f64, f64) -> Vec<f64> + Send + Sync>;
/// Primitive state as a function of `(x, y, t)`.
pub type ExactField = Arc<dyn Fn(f64, f64, f64) -> Result<Vec<f64>> + Send + Sync>;
/// Ghost primitive state at `(x, y, t)`; `None` reflects.
pub type PrimGhostFn = Arc<dyn Fn(f64, f64, f64) -> Option<Vec<f64>> + Send + Sync>;

#[derive(Clone)]
pub enum EdgeSpec {
    Periodic,
    Outflow,
    Reflective,
    /// Fixed primitive state.
    Dirichlet(Vec<f64>),
    Mixed(PrimGhostFn),
}

impl std::fmt::Debug for EdgeSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EdgeSpec::Periodic => write!(f, "periodic"),
            EdgeSpec::Outflow => write!(f, "outflow"),
            EdgeSpec::Reflective => write!(f, "reflective"),
            EdgeSpec::Dirichlet(w) => write!(f, "dirichlet{w:?}"),
            EdgeSpec::Mixed(_) => write!(f, "mixed"),
        }
    }
}

/// One row of initial data as tabulated: region label and primitive state.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub region: &'static str,
    pub state: Vec<f64>,
}

/// Rectangular obstacle `x >= x0, y <= y1` (the forward facing step).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForwardStep {
    pub x0: f64,
    pub height: f64,
}

/// Resolution and order of a fine self-reference run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceRun {
    pub order: SchemeOrder,
    pub zones: usize,
}

#[derive(Clone)]
pub struct ProblemSpec {
    pub name: &'static str,
    pub description: &'static str,
    pub system: SystemKind,
    pub two_d: bool,
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    pub t_end: f64,
    pub default_zones: (usize, usize),
    pub default_order: SchemeOrder,
    pub riemann: RiemannSolverKind,
    pub cfl: f64,
    pub integrator: TimeIntegrator,
    /// Flattener threshold `kappa` when the flattener is on by default.
    pub flattener: Option<f64>,
    /// Left, right, bottom, top.
    pub edges: [EdgeSpec; 4],
    pub initial: PrimField,
    pub exact: Option<ExactField>,
    pub table: Vec<TableRow>,
    /// Extra scalar parameters of the initial data.
    pub params: Vec<(&'static str, f64)>,
    pub step: Option<ForwardStep>,
    pub reference: Option<ReferenceRun>,
    /// Smooth problem used for convergence studies.
    pub smooth: bool,
}

impl std::fmt::Debug for ProblemSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ProblemSpec")
            .field("name", &self.name)
            .field("system", &self.system.name())
            .field("x_range", &self.x_range)
            .field("y_range", &self.y_range)
            .field("t_end", &self.t_end)
            .field("default_zones", &self.default_zones)
            .field("edges", &self.edges)
            .finish()
    }
}

impl ProblemSpec {
    pub fn gamma(&self) -> Option<f64> {
        match self.system {
            SystemKind::Euler(e) => Some(e.gamma),
            SystemKind::Rhd(r) => Some(r.gamma),
            SystemKind::TenMoment(_) => None,
        }
    }
}

pub const PROBLEM_NAMES: &[&str] = &[
    "sod",
    "lax",
    "blast",
    "euler-advection",
    "euler-vortex",
    "rhd-1",
    "rhd-2",
    "rhd-3",
    "rhd-4",
    "rhd-5",
    "rhd-6",
    "rhd-7",
    "rhd-vortex",
    "tenmoment-1",
    "tenmoment-2",
    "tenmoment-3",
    "tenmoment-sine2d",
    "ffs",
    "dmr",
    "2drp-1",
    "2drp-2",
    "2drp-3",
    "sb-1",
    "sb-2",
    "tenmoment-vacuum",
];

fn row(region: &'static str, state: &[f64]) -> TableRow {
    TableRow { region, state: state.to_vec() }
}

fn outflow4() -> [EdgeSpec; 4] {
    std::array::from_fn(|_| EdgeSpec::Outflow)
}

fn periodic4() -> [EdgeSpec; 4] {
    std::array::from_fn(|_| EdgeSpec::Periodic)
}

fn euler(gamma: f64) -> SystemKind {
    SystemKind::Euler(Euler { gamma })
}

fn rhd(gamma: f64) -> SystemKind {
    SystemKind::Rhd(Rhd { gamma })
}

/// Pads a `(rho, vx, vy, p)` row or returns a ten-moment row unchanged.
fn two_state(l: Vec<f64>, r: Vec<f64>, x0: f64) -> PrimField {
    Arc::new(move |x, _| if x < x0 { l.clone() } else { r.clone() })
}

/// Skeleton for a one-dimensional shock problem on `[-0.5, 0.5]`.
#[allow(clippy::too_many_arguments)]
fn shock_tube(
    name: &'static str,
    description: &'static str,
    system: SystemKind,
    t_end: f64,
    zones: usize,
    order: SchemeOrder,
    table: Vec<TableRow>,
    initial: PrimField,
) -> ProblemSpec {
    ProblemSpec {
        name,
        description,
        system,
        two_d: false,
        x_range: (-0.5, 0.5),
        y_range: (0.0, 1.0),
        t_end,
        default_zones: (zones, 1),
        default_order: order,
        riemann: RiemannSolverKind::Llf,
        cfl: 0.8,
        integrator: TimeIntegrator::SspRk3,
        flattener: None,
        edges: outflow4(),
        initial,
        exact: None,
        table,
        params: Vec::new(),
        step: None,
        reference: None,
        smooth: false,
    }
}

fn euler_riemann_exact(l: [f64; 4], r: [f64; 4], gamma: f64) -> ExactField {
    Arc::new(move |x, _, t| {
        if t <= 0.0 {
            return Ok(if x < 0.0 { l.to_vec() } else { r.to_vec() });
        }
        Ok(exact_euler_riemann(&l, &r, gamma, x / t)?.to_vec())
    })
}

fn three_state(l: Vec<f64>, m: Vec<f64>, r: Vec<f64>) -> PrimField {
    Arc::new(move |x, _| {
        if x < -0.4 {
            l.clone()
        } else if x < 0.4 {
            m.clone()
        } else {
            r.clone()
        }
    })
}

fn quadrant(ne: Vec<f64>, nw: Vec<f64>, sw: Vec<f64>, se: Vec<f64>) -> PrimField {
    Arc::new(move |x, y| match (x > 0.0, y > 0.0) {
        (true, true) => ne.clone(),
        (false, true) => nw.clone(),
        (false, false) => sw.clone(),
        (true, false) => se.clone(),
    })
}

/// Looks up a registered problem by name.
pub fn problem(name: &str) -> Result<ProblemSpec> {
    use SchemeOrder::*;
    let spec = match name {
        "sod" => {
            let (l, r) = ([1.0, 0.0, 0.0, 1.0], [0.125, 0.0, 0.0, 0.1]);
            let mut s = shock_tube(
                "sod",
                "Euler Sod shock tube",
                euler(1.4),
                0.2,
                200,
                Fifth,
                vec![row("x < 0", &l), row("x > 0", &r)],
                two_state(l.to_vec(), r.to_vec(), 0.0),
            );
            s.exact = Some(euler_riemann_exact(l, r, 1.4));
            s
        }
        "lax" => {
            let (l, r) = ([0.445, 0.698, 0.0, 3.528], [0.5, 0.0, 0.0, 0.571]);
            let mut s = shock_tube(
                "lax",
                "Euler Lax shock tube",
                euler(1.4),
                0.13,
                200,
                Seventh,
                vec![row("x < 0", &l), row("x > 0", &r)],
                two_state(l.to_vec(), r.to_vec(), 0.0),
            );
            s.exact = Some(euler_riemann_exact(l, r, 1.4));
            s
        }
        "blast" => {
            let (l, m, r) = ([1.0, 0.0, 0.0, 1000.0], [1.0, 0.0, 0.0, 0.01], [1.0, 0.0, 0.0, 100.0]);
            let mut s = shock_tube(
                "blast",
                "Euler interacting blast waves",
                euler(1.4),
                0.038,
                1000,
                Ninth,
                vec![row("x < -0.4", &l), row("-0.4 < x < 0.4", &m), row("x > 0.4", &r)],
                three_state(l.to_vec(), m.to_vec(), r.to_vec()),
            );
            s.flattener = Some(0.3);
            s.edges = std::array::from_fn(|_| EdgeSpec::Reflective);
            s.reference = Some(ReferenceRun { order: Third, zones: 4000 });
            s
        }
        "euler-advection" => ProblemSpec {
            name: "euler-advection",
            description: "Euler density wave rho = 2 + sin(2 pi x) advected at unit speed",
            system: euler(1.4),
            two_d: false,
            x_range: (0.0, 1.0),
            y_range: (0.0, 1.0),
            t_end: 1.0,
            default_zones: (64, 1),
            default_order: Fifth,
            riemann: RiemannSolverKind::Llf,
            cfl: 0.4,
            integrator: TimeIntegrator::SspRk4,
            flattener: None,
            edges: periodic4(),
            initial: Arc::new(|x, _| vec![2.0 + (2.0 * PI * x).sin(), 1.0, 0.0, 1.0]),
            exact: Some(Arc::new(|x, _, t| Ok(vec![2.0 + (2.0 * PI * (x - t)).sin(), 1.0, 0.0, 1.0]))),
            table: Vec::new(),
            params: Vec::new(),
            step: None,
            reference: None,
            smooth: true,
        },
        "euler-vortex" => {
            let exact: ExactField = Arc::new(|x, y, t| Ok(euler_vortex(x, y, t)));
            ProblemSpec {
                name: "euler-vortex",
                description: "Euler isentropic vortex advected diagonally",
                system: euler(1.4),
                two_d: true,
                x_range: (-5.0, 5.0),
                y_range: (-5.0, 5.0),
                t_end: 10.0,
                default_zones: (64, 64),
                default_order: Third,
                riemann: RiemannSolverKind::Llf,
                cfl: 0.4,
                integrator: TimeIntegrator::SspRk4,
                flattener: None,
                edges: periodic4(),
                initial: Arc::new(|x, y| euler_vortex(x, y, 0.0)),
                exact: Some(exact),
                table: Vec::new(),
                params: vec![("epsilon", 5.0), ("vx", 1.0), ("vy", 1.0)],
                step: None,
                reference: None,
                smooth: true,
            }
        }
        "rhd-1" | "rhd-2" | "rhd-3" | "rhd-4" | "rhd-5" => {
            let (l, r, gamma, zones, order): ([f64; 4], [f64; 4], f64, usize, SchemeOrder) = match name {
                "rhd-1" => ([1.0, -0.6, 0.0, 10.0], [10.0, 0.5, 0.0, 20.0], 5.0 / 3.0, 200, Fifth),
                "rhd-2" => ([10.0, 0.0, 0.0, 40.0 / 3.0], [1.0, 0.0, 0.0, 1e-6], 5.0 / 3.0, 200, Fifth),
                "rhd-3" => ([1.0, 0.0, 0.0, 1e3], [1.0, 0.0, 0.0, 1e-2], 5.0 / 3.0, 400, Seventh),
                "rhd-4" => ([1.0, 0.9, 0.0, 1.0], [1.0, 0.0, 0.0, 10.0], 4.0 / 3.0, 200, Seventh),
                _ => ([1.0, -0.7, 0.0, 20.0], [1.0, 0.7, 0.0, 20.0], 5.0 / 3.0, 200, Ninth),
            };
            let names = ["rhd-1", "rhd-2", "rhd-3", "rhd-4", "rhd-5"];
            let name = names[names.iter().position(|n| *n == name).unwrap_or(0)];
            let mut s = shock_tube(
                name,
                "relativistic Riemann problem",
                rhd(gamma),
                0.4,
                zones,
                order,
                vec![row("x < 0", &l), row("x > 0", &r)],
                two_state(l.to_vec(), r.to_vec(), 0.0),
            );
            if matches!(name, "rhd-3" | "rhd-4" | "rhd-5") {
                s.flattener = Some(0.3);
            }
            s.reference = Some(ReferenceRun { order: Third, zones: 4000 });
            s
        }
        "rhd-6" => {
            let (l, m, r) = ([1.0, 0.0, 0.0, 1000.0], [1.0, 0.0, 0.0, 0.01], [1.0, 0.0, 0.0, 100.0]);
            let mut s = shock_tube(
                "rhd-6",
                "relativistic interacting blast waves",
                rhd(1.4),
                0.43,
                4000,
                Ninth,
                vec![row("x < -0.4", &l), row("-0.4 < x < 0.4", &m), row("x > 0.4", &r)],
                three_state(l.to_vec(), m.to_vec(), r.to_vec()),
            );
            s.flattener = Some(0.3);
            s.edges = std::array::from_fn(|_| EdgeSpec::Reflective);
            s.reference = Some(ReferenceRun { order: Third, zones: 15000 });
            s
        }
        "rhd-7" => {
            let l = [5.0, 0.0, 0.0, 50.0];
            let r = [2.0, 0.0, 0.0, 5.0];
            let initial: PrimField = Arc::new(move |x, _| {
                if x < 0.0 {
                    l.to_vec()
                } else {
                    vec![2.0 + 0.3 * (50.0 * x).sin(), 0.0, 0.0, 5.0]
                }
            });
            let mut s = shock_tube(
                "rhd-7",
                "relativistic shock hitting a density perturbation",
                rhd(5.0 / 3.0),
                0.35,
                400,
                Seventh,
                vec![row("x < 0", &l), row("x > 0", &r)],
                initial,
            );
            s.params = vec![("amplitude", 0.3), ("wavenumber", 50.0)];
            s.reference = Some(ReferenceRun { order: Third, zones: 4000 });
            s
        }
        "rhd-vortex" => {
            let gamma = 5.0 / 3.0;
            let exact: ExactField = Arc::new(move |x, y, t| Ok(rhd_vortex(x, y, t, gamma)));
            ProblemSpec {
                name: "rhd-vortex",
                description: "boosted relativistic isentropic vortex",
                system: rhd(gamma),
                two_d: true,
                x_range: (-5.0, 5.0),
                y_range: (-5.0, 5.0),
                t_end: 2.0,
                default_zones: (64, 64),
                default_order: Fifth,
                riemann: RiemannSolverKind::Llf,
                cfl: 0.4,
                integrator: TimeIntegrator::SspRk4,
                flattener: None,
                edges: periodic4(),
                initial: Arc::new(move |x, y| rhd_vortex(x, y, 0.0, gamma)),
                exact: Some(exact),
                table: Vec::new(),
                params: vec![("epsilon", 5.0), ("vx", 0.5), ("vy", 0.5)],
                step: None,
                reference: None,
                smooth: true,
            }
        }
        "tenmoment-1" | "tenmoment-2" | "tenmoment-3" => {
            let (l, r, t_end, order, name): ([f64; 6], [f64; 6], f64, SchemeOrder, &'static str) = match name {
                "tenmoment-1" => (
                    [1.0, 0.0, 0.0, 2.0, 0.05, 0.6],
                    [0.125, 0.0, 0.0, 0.2, 0.1, 0.2],
                    0.125,
                    Fifth,
                    "tenmoment-1",
                ),
                "tenmoment-2" => (
                    [1.0, 1.0, 1.0, 1.0, 0.0, 1.0],
                    [1.0, -1.0, -1.0, 1.0, 0.0, 1.0],
                    0.125,
                    Seventh,
                    "tenmoment-2",
                ),
                _ => (
                    [2.0, -0.5, -0.5, 1.5, 0.5, 1.5],
                    [1.0, 1.0, 1.0, 1.0, 0.0, 1.0],
                    0.15,
                    Ninth,
                    "tenmoment-3",
                ),
            };
            let mut s = shock_tube(
                name,
                "ten-moment Riemann problem",
                SystemKind::TenMoment(TenMoment),
                t_end,
                200,
                order,
                vec![row("x < 0", &l), row("x > 0", &r)],
                two_state(l.to_vec(), r.to_vec(), 0.0),
            );
            s.reference = Some(ReferenceRun { order: Third, zones: 4000 });
            s
        }
        "tenmoment-sine2d" => ProblemSpec {
            name: "tenmoment-sine2d",
            description: "ten-moment density wave advected diagonally on the unit square",
            system: SystemKind::TenMoment(TenMoment),
            two_d: true,
            x_range: (0.0, 1.0),
            y_range: (0.0, 1.0),
            t_end: 0.5,
            default_zones: (32, 32),
            default_order: Fifth,
            riemann: RiemannSolverKind::Llf,
            cfl: 0.4,
            integrator: TimeIntegrator::SspRk4,
            flattener: None,
            edges: periodic4(),
            initial: Arc::new(|x, y| ten_moment_sine(x, y, 0.0)),
            exact: Some(Arc::new(|x, y, t| Ok(ten_moment_sine(x, y, t)))),
            table: Vec::new(),
            params: Vec::new(),
            step: None,
            reference: None,
            smooth: true,
        },
        "ffs" => {
            let inflow = [1.4, 3.0, 0.0, 1.0];
            ProblemSpec {
                name: "ffs",
                description: "Mach 3 wind tunnel with a forward facing step",
                system: euler(1.4),
                two_d: true,
                x_range: (0.0, 3.0),
                y_range: (0.0, 1.0),
                t_end: 0.4,
                default_zones: (1440, 480),
                default_order: Fifth,
                riemann: RiemannSolverKind::Hll,
                cfl: 0.4,
                integrator: TimeIntegrator::SspRk3,
                flattener: Some(0.3),
                edges: [
                    EdgeSpec::Dirichlet(inflow.to_vec()),
                    EdgeSpec::Outflow,
                    EdgeSpec::Reflective,
                    EdgeSpec::Reflective,
                ],
                initial: Arc::new(move |_, _| inflow.to_vec()),
                exact: None,
                table: vec![row("inflow", &inflow)],
                params: vec![("step_x", 0.6), ("step_height", 0.2)],
                step: Some(ForwardStep { x0: 0.6, height: 0.2 }),
                reference: None,
                smooth: false,
            }
        }
        "dmr" => {
            let pre = [1.4, 0.0, 0.0, 1.0];
            let post = dmr_post_shock();
            let bottom: PrimGhostFn =
                Arc::new(move |x, _, _| (x < 1.0 / 6.0).then(|| post.to_vec()));
            let top: PrimGhostFn = Arc::new(move |x, y, t| {
                Some(if x < dmr_shock_x(y, t) { post.to_vec() } else { pre.to_vec() })
            });
            ProblemSpec {
                name: "dmr",
                description: "double Mach reflection of a Mach 10 shock",
                system: euler(1.4),
                two_d: true,
                x_range: (0.0, 4.0),
                y_range: (0.0, 1.0),
                t_end: 0.2,
                default_zones: (1920, 480),
                default_order: Seventh,
                riemann: RiemannSolverKind::Hll,
                cfl: 0.4,
                integrator: TimeIntegrator::SspRk3,
                flattener: Some(0.3),
                edges: [
                    EdgeSpec::Dirichlet(post.to_vec()),
                    EdgeSpec::Outflow,
                    EdgeSpec::Mixed(bottom),
                    EdgeSpec::Mixed(top),
                ],
                initial: Arc::new(move |x, y| {
                    if x < dmr_shock_x(y, 0.0) { post.to_vec() } else { pre.to_vec() }
                }),
                exact: None,
                table: vec![row("pre-shock", &pre), row("post-shock", &post)],
                params: vec![("mach", 10.0), ("angle_deg", 60.0), ("x0", 1.0 / 6.0)],
                step: None,
                reference: None,
                smooth: false,
            }
        }
        "2drp-1" | "2drp-2" | "2drp-3" => {
            let (q, order, name): ([[f64; 4]; 4], SchemeOrder, &'static str) = match name {
                "2drp-1" => (
                    [
                        [0.5, 0.5, -0.5, 5.0],
                        [1.0, 0.5, 0.5, 5.0],
                        [3.0, -0.5, 0.5, 5.0],
                        [1.5, -0.5, -0.5, 5.0],
                    ],
                    Fifth,
                    "2drp-1",
                ),
                "2drp-2" => (
                    [
                        [1.0, 0.0, 0.0, 1.0],
                        [0.5771, -0.3529, 0.0, 0.4],
                        [1.0, -0.3529, -0.3529, 1.0],
                        [0.5771, 0.0, -0.3529, 0.4],
                    ],
                    Seventh,
                    "2drp-2",
                ),
                _ => (
                    [
                        [0.0351452161, 0.0, 0.0, 0.1629310565],
                        [0.1, 0.7, 0.0, 1.0],
                        [0.5, 0.0, 0.0, 1.0],
                        [0.1, 0.0, 0.7, 1.0],
                    ],
                    Ninth,
                    "2drp-3",
                ),
            };
            ProblemSpec {
                name,
                description: "relativistic two-dimensional Riemann problem",
                system: rhd(5.0 / 3.0),
                two_d: true,
                x_range: (-0.5, 0.5),
                y_range: (-0.5, 0.5),
                t_end: 0.4,
                default_zones: (200, 200),
                default_order: order,
                riemann: RiemannSolverKind::Llf,
                cfl: 0.4,
                integrator: TimeIntegrator::SspRk3,
                flattener: None,
                edges: outflow4(),
                initial: quadrant(q[0].to_vec(), q[1].to_vec(), q[2].to_vec(), q[3].to_vec()),
                exact: None,
                table: vec![
                    row("x > 0, y > 0", &q[0]),
                    row("x < 0, y > 0", &q[1]),
                    row("x < 0, y < 0", &q[2]),
                    row("x > 0, y < 0", &q[3]),
                ],
                params: Vec::new(),
                step: None,
                reference: None,
                smooth: false,
            }
        }
        "sb-1" | "sb-2" => {
            let pre = [1.0, 0.0, 0.0, 0.05];
            let post = [1.86522508063, -0.19678110737, 0.0, 0.15];
            let (bubble, t_end, name): ([f64; 4], f64, &'static str) = if name == "sb-1" {
                ([0.1358, 0.0, 0.0, 0.05], 450.0, "sb-1")
            } else {
                ([3.1538, 0.0, 0.0, 0.05], 500.0, "sb-2")
            };
            ProblemSpec {
                name,
                description: "relativistic shock-bubble interaction",
                system: rhd(5.0 / 3.0),
                two_d: true,
                x_range: (0.0, 325.0),
                y_range: (-45.0, 45.0),
                t_end,
                default_zones: (650, 180),
                default_order: Fifth,
                riemann: RiemannSolverKind::Llf,
                cfl: 0.4,
                integrator: TimeIntegrator::SspRk3,
                flattener: None,
                edges: [
                    EdgeSpec::Dirichlet(pre.to_vec()),
                    EdgeSpec::Dirichlet(post.to_vec()),
                    EdgeSpec::Reflective,
                    EdgeSpec::Reflective,
                ],
                initial: Arc::new(move |x, y| {
                    if (x - 215.0).powi(2) + y * y < 25.0 * 25.0 {
                        bubble.to_vec()
                    } else if x < 265.0 {
                        pre.to_vec()
                    } else {
                        post.to_vec()
                    }
                }),
                exact: None,
                table: vec![row("x < 265", &pre), row("x > 265", &post), row("bubble", &bubble)],
                params: vec![("bubble_x", 215.0), ("bubble_y", 0.0), ("bubble_radius", 25.0), ("shock_x", 265.0)],
                step: None,
                reference: None,
                smooth: false,
            }
        }
        "tenmoment-vacuum" => ProblemSpec {
            name: "tenmoment-vacuum",
            description: "ten-moment radial outflow creating a near vacuum",
            system: SystemKind::TenMoment(TenMoment),
            two_d: true,
            x_range: (-2.0, 2.0),
            y_range: (-2.0, 2.0),
            t_end: 0.05,
            default_zones: (200, 200),
            default_order: Seventh,
            riemann: RiemannSolverKind::Llf,
            cfl: 0.4,
            integrator: TimeIntegrator::SspRk3,
            flattener: Some(1.0),
            edges: outflow4(),
            initial: Arc::new(|x, y| {
                let r = (x * x + y * y).sqrt();
                let (vx, vy) = if r > 0.0 { (8.0 * x / r, 8.0 * y / r) } else { (0.0, 0.0) };
                vec![1.0, vx, vy, 2.0, 0.0, 2.0]
            }),
            exact: None,
            table: vec![row("everywhere", &[1.0, 0.0, 0.0, 2.0, 0.0, 2.0])],
            params: vec![("speed", 8.0)],
            step: None,
            reference: None,
            smooth: false,
        },
        _ => {
            return Err(Error::usage(format!(
                "unknown problem '{name}'; known problems: {}",
                PROBLEM_NAMES.join(", ")
            )))
        }
    };
    Ok(spec)
}

/// Post-shock state of the Mach 10 shock inclined at 60 degrees.
pub fn dmr_post_shock() -> [f64; 4] {
    let a = PI / 6.0;
    [8.0, 8.25 * a.cos(), -8.25 * a.sin(), 116.5]
}

/// Shock position at height `y` and time `t`.
pub fn dmr_shock_x(y: f64, t: f64) -> f64 {
    1.0 / 6.0 + (y + 20.0 * t) / 3f64.sqrt()
}

fn wrap(v: f64, lo: f64, len: f64) -> f64 {
    (v - lo).rem_euclid(len) + lo
}

/// Isentropic vortex with strength 5 on `[-5, 5]^2` moving with `(1, 1)`.
pub fn euler_vortex(x: f64, y: f64, t: f64) -> Vec<f64> {
    let gamma: f64 = 1.4;
    let eps = 5.0;
    let xr = wrap(x - t, -5.0, 10.0);
    let yr = wrap(y - t, -5.0, 10.0);
    let r2 = xr * xr + yr * yr;
    let du = eps / (2.0 * PI) * (0.5 * (1.0 - r2)).exp();
    let temp = 1.0 - (gamma - 1.0) * eps * eps / (8.0 * gamma * PI * PI) * (1.0 - r2).exp();
    let rho = temp.powf(1.0 / (gamma - 1.0));
    vec![rho, 1.0 - du * yr, 1.0 + du * xr, rho.powf(gamma)]
}

/// Relativistic isentropic vortex: a static rotating equilibrium in its rest
/// frame, boosted with velocity `(0.5, 0.5)`.
pub fn rhd_vortex(x: f64, y: f64, t: f64, gamma: f64) -> Vec<f64> {
    let eps = 5.0;
    let (bx, by) = (0.5, 0.5);
    let b2: f64 = bx * bx + by * by;
    let b = b2.sqrt();
    let lorentz = 1.0 / (1.0 - b2).sqrt();
    let (nx, ny) = (bx / b, by / b);
    // lab separation from the moving centre, then undo the contraction
    let dx = wrap(x - bx * t, -5.0, 10.0);
    let dy = wrap(y - by * t, -5.0, 10.0);
    let par = dx * nx + dy * ny;
    let xr = dx + (lorentz - 1.0) * par * nx;
    let yr = dy + (lorentz - 1.0) * par * ny;
    let r2 = xr * xr + yr * yr;
    // rest frame: u = W v_phi, h from radial balance
    let u = eps / (2.0 * PI) * (0.5 * (1.0 - r2)).exp();
    let h_inf = 1.0 + gamma / (gamma - 1.0);
    let h = h_inf * (-(eps * eps) / (8.0 * PI * PI) * (1.0 - r2).exp()).exp();
    let rho = ((h - 1.0) * (gamma - 1.0) / gamma).powf(1.0 / (gamma - 1.0));
    let p = rho.powf(gamma);
    let w_phi = (1.0 + u * u * r2).sqrt();
    let (vx0, vy0) = (-u * yr / w_phi, u * xr / w_phi);
    // velocity addition into the lab frame
    let dot = vx0 * bx + vy0 * by;
    let denom = 1.0 + dot;
    let vpar0 = vx0 * nx + vy0 * ny;
    let (px0, py0) = (vx0 - vpar0 * nx, vy0 - vpar0 * ny);
    let vpar = (vpar0 + b) / denom;
    let vx = vpar * nx + px0 / (lorentz * denom);
    let vy = vpar * ny + py0 / (lorentz * denom);
    vec![rho, vx, vy, p]
}

/// Ten-moment density wave: `rho = 2 + sin(2 pi (x + y))` carried by
/// `v = (1, 1)` with isotropic unit pressure.
pub fn ten_moment_sine(x: f64, y: f64, t: f64) -> Vec<f64> {
    vec![2.0 + (2.0 * PI * (x + y - 2.0 * t)).sin(), 1.0, 1.0, 1.0, 0.0, 1.0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_resolves() {
        for name in PROBLEM_NAMES {
            let p = problem(name).unwrap();
            assert_eq!(p.name, *name);
            let w = (p.initial)(0.5 * (p.x_range.0 + p.x_range.1) + 0.01, 0.01);
            assert_eq!(w.len(), p.system.nvar());
        }
        assert!(problem("nope").is_err());
    }

    #[test]
    fn vortex_far_field_and_period() {
        let w = euler_vortex(4.9, 4.9, 0.0);
        assert!((w[0] - 1.0).abs() < 1e-6 && (w[1] - 1.0).abs() < 1e-5);
        let a = euler_vortex(0.3, -0.2, 10.0);
        let b = euler_vortex(0.3, -0.2, 0.0);
        for k in 0..4 {
            assert!((a[k] - b[k]).abs() < 1e-12);
        }
    }

    #[test]
    fn rhd_vortex_far_field_moves_with_boost() {
        let w = rhd_vortex(4.9, -4.9, 0.3, 5.0 / 3.0);
        assert!((w[0] - 1.0).abs() < 1e-6);
        assert!((w[1] - 0.5).abs() < 1e-6 && (w[2] - 0.5).abs() < 1e-6);
        let c = rhd_vortex(0.0, 0.0, 0.0, 5.0 / 3.0);
        assert!(c[0] < 0.9 && (c[1] - 0.5).abs() < 1e-12);
        for (x, y) in [(0.4, -1.1), (1.5, 0.7), (-2.0, 0.3)] {
            let v = rhd_vortex(x, y, 0.0, 5.0 / 3.0);
            assert!(v[1] * v[1] + v[2] * v[2] < 1.0);
        }
    }

    #[test]
    fn dmr_shock_geometry() {
        assert!((dmr_shock_x(0.0, 0.0) - 1.0 / 6.0).abs() < 1e-15);
        // the shock normal speed is 10
        let dx = dmr_shock_x(0.5, 0.1) - dmr_shock_x(0.5, 0.0);
        assert!((dx * (PI / 3.0).sin() - 1.0).abs() < 1e-12);
    }
}
