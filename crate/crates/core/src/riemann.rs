//! Approximate Riemann solvers returning the resolved flux and state.

use crate::error::{Error, Result};
use crate::systems::{Direction, HyperbolicSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RiemannSolverKind {
    /// Local Lax-Friedrichs (Rusanov).
    Llf,
    /// Harten-Lax-van Leer.
    Hll,
}

impl std::str::FromStr for RiemannSolverKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "llf" | "rusanov" => Ok(RiemannSolverKind::Llf),
            "hll" => Ok(RiemannSolverKind::Hll),
            _ => Err(Error::usage(format!("unknown Riemann solver '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiemannResult<const N: usize> {
    pub flux: [f64; N],
    /// Resolved state at the interface.
    pub state: [f64; N],
}

pub fn solve<const N: usize, S: HyperbolicSystem<N>>(
    kind: RiemannSolverKind,
    system: &S,
    ul: &[f64; N],
    ur: &[f64; N],
    dir: Direction,
) -> Result<RiemannResult<N>> {
    match kind {
        RiemannSolverKind::Llf => llf_flux(system, ul, ur, dir),
        RiemannSolverKind::Hll => hll_flux(system, ul, ur, dir),
    }
}

pub fn llf_flux<const N: usize, S: HyperbolicSystem<N>>(
    system: &S,
    ul: &[f64; N],
    ur: &[f64; N],
    dir: Direction,
) -> Result<RiemannResult<N>> {
    let fl = system.flux(ul, dir)?;
    let fr = system.flux(ur, dir)?;
    let (sl, sr) = system.signal_speeds(ul, ur, dir)?;
    Ok(llf_from(&fl, &fr, ul, ur, sl.abs().max(sr.abs())))
}

fn llf_from<const N: usize>(
    fl: &[f64; N],
    fr: &[f64; N],
    ul: &[f64; N],
    ur: &[f64; N],
    smax: f64,
) -> RiemannResult<N> {
    let mut flux = [0.0; N];
    let mut state = [0.0; N];
    for k in 0..N {
        flux[k] = 0.5 * (fl[k] + fr[k]) - 0.5 * smax * (ur[k] - ul[k]);
        state[k] = 0.5 * (ul[k] + ur[k]) - 0.5 * (fr[k] - fl[k]) / smax.max(f64::MIN_POSITIVE);
    }
    RiemannResult { flux, state }
}

pub fn hll_flux<const N: usize, S: HyperbolicSystem<N>>(
    system: &S,
    ul: &[f64; N],
    ur: &[f64; N],
    dir: Direction,
) -> Result<RiemannResult<N>> {
    let fl = system.flux(ul, dir)?;
    let fr = system.flux(ur, dir)?;
    let (sl, sr) = system.signal_speeds(ul, ur, dir)?;
    if sl >= 0.0 {
        return Ok(RiemannResult { flux: fl, state: *ul });
    }
    if sr <= 0.0 {
        return Ok(RiemannResult { flux: fr, state: *ur });
    }
    if sr - sl < 1e-12 {
        return Ok(llf_from(&fl, &fr, ul, ur, sl.abs().max(sr.abs())));
    }
    let inv = 1.0 / (sr - sl);
    let mut flux = [0.0; N];
    let mut state = [0.0; N];
    for k in 0..N {
        flux[k] = (sr * fl[k] - sl * fr[k] + sl * sr * (ur[k] - ul[k])) * inv;
        state[k] = (sr * ur[k] - sl * ul[k] - (fr[k] - fl[k])) * inv;
    }
    Ok(RiemannResult { flux, state })
}
