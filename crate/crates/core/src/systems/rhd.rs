use super::{check_finite, Eigensystem, HyperbolicSystem, Matrix};
use crate::error::{Error, Result};

/// Special-relativistic hydrodynamics with an ideal-gas equation of state
/// (units with `c = 1`). Primitives `(rho, vx, vy, p)`, conserved
/// `(D, Mx, My, E)` with `E` including the rest-mass energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rhd {
    pub gamma: f64,
}

const MAX_NEWTON: usize = 60;

impl Rhd {
    pub fn new(gamma: f64) -> Result<Self> {
        if !(gamma > 1.0 && gamma <= 2.0) {
            return Err(Error::usage(format!(
                "adiabatic index must lie in (1, 2], got {gamma}"
            )));
        }
        Ok(Self { gamma })
    }

    pub fn enthalpy(&self, rho: f64, p: f64) -> f64 {
        1.0 + self.gamma / (self.gamma - 1.0) * p / rho
    }

    /// Pressure from conserved variables by a bracketed Newton iteration.
    pub fn recover_pressure(&self, u: &[f64; 4]) -> Result<f64> {
        let [d, mx, my, e] = *u;
        let m2 = mx * mx + my * my;
        if !(d > 0.0) || !(e > 0.0) || !(e * e > d * d + m2) {
            return Err(Error::domain(format!("inadmissible relativistic state {u:?}")));
        }
        let k = (self.gamma - 1.0) / self.gamma;
        // g(p) is decreasing with g(0) > 0 and g((gamma-1) E) < 0.
        let g = |p: f64| -> (f64, f64) {
            let s = e + p;
            let r = m2 / (s * s);
            let root = (1.0 - r).sqrt();
            let val = k * (s - m2 / s - d * root) - p;
            let der = k * (1.0 + r - d * r / (s * root)) - 1.0;
            (val, der)
        };
        let mut lo = 0.0;
        let mut hi = (self.gamma - 1.0) * e;
        let v0 = (m2.sqrt() / e).min(0.99);
        let mut p = (k * (e * (1.0 - v0 * v0) - d * (1.0 - v0 * v0).sqrt())).clamp(0.0, hi);
        if p <= 0.0 {
            p = 0.5 * hi;
        }
        for _ in 0..MAX_NEWTON {
            let (val, der) = g(p);
            if val > 0.0 {
                lo = p;
            } else {
                hi = p;
            }
            let mut next = p - val / der;
            if !(next > lo && next < hi) {
                next = 0.5 * (lo + hi);
            }
            let step = (next - p).abs();
            p = next;
            if step <= 4e-16 * p || hi - lo <= 4e-16 * hi {
                break;
            }
        }
        let (val, _) = g(p);
        if !(p > 0.0) || !p.is_finite() || val.abs() > 1e-12 * (p + e) {
            return Err(Error::numerical(format!(
                "pressure recovery failed for {u:?} (p = {p}, residual = {val})"
            )));
        }
        Ok(p)
    }
}

impl HyperbolicSystem<4> for Rhd {
    fn name(&self) -> &'static str {
        "rhd"
    }

    fn primitive_names(&self) -> [&'static str; 4] {
        ["rho", "vx", "vy", "p"]
    }

    fn prim_to_cons(&self, w: &[f64; 4]) -> Result<[f64; 4]> {
        let [rho, vx, vy, p] = *w;
        let v2 = vx * vx + vy * vy;
        if !(rho > 0.0) || !(p > 0.0) || !(v2 < 1.0) {
            return Err(Error::domain(format!("inadmissible relativistic primitive {w:?}")));
        }
        let lorentz2 = 1.0 / (1.0 - v2);
        let h = self.enthalpy(rho, p);
        let rhw2 = rho * h * lorentz2;
        Ok([rho * lorentz2.sqrt(), rhw2 * vx, rhw2 * vy, rhw2 - p])
    }

    fn cons_to_prim(&self, u: &[f64; 4]) -> Result<[f64; 4]> {
        check_finite(u, "relativistic state")?;
        let p = self.recover_pressure(u)?;
        let s = u[3] + p;
        let vx = u[1] / s;
        let vy = u[2] / s;
        let v2 = vx * vx + vy * vy;
        if !(v2 < 1.0) {
            return Err(Error::domain(format!("superluminal velocity in {u:?}")));
        }
        let rho = u[0] * (1.0 - v2).sqrt();
        Ok([rho, vx, vy, p])
    }

    fn flux_x(&self, u: &[f64; 4]) -> Result<[f64; 4]> {
        let [_, vx, _, p] = self.cons_to_prim(u)?;
        Ok([u[0] * vx, u[1] * vx + p, u[2] * vx, u[1]])
    }

    fn eigen_x(&self, u: &[f64; 4]) -> Result<Eigensystem<4>> {
        let [rho, vx, vy, p] = self.cons_to_prim(u)?;
        let h = self.enthalpy(rho, p);
        let v2 = vx * vx + vy * vy;
        let w = 1.0 / (1.0 - v2).sqrt();
        let cs2 = self.gamma * p / (rho * h);
        let (lm, lp) = speeds(vx, v2, cs2);
        let kappa = (self.gamma - 1.0) / (self.gamma - 1.0 - cs2);
        let acoustic = |lam: f64| -> [f64; 4] {
            let at = (1.0 - vx * vx) / (1.0 - vx * lam);
            [1.0, h * w * at * lam, h * w * vy, h * w * at]
        };
        let rm = acoustic(lm);
        let rp = acoustic(lp);
        let r1 = [kappa / (h * w), vx, vy, 1.0];
        let r2 = [
            w * vy,
            2.0 * h * w * w * vx * vy,
            h * (1.0 + 2.0 * w * w * vy * vy),
            2.0 * h * w * w * vy,
        ];
        let right = Matrix::<4>::from_fn(|r, c| [rm, r1, r2, rp][c][r]);
        Eigensystem::from_right([lm, vx, vx, lp], right)
    }

    fn wave_speeds_x(&self, u: &[f64; 4]) -> Result<(f64, f64)> {
        let [rho, vx, vy, p] = self.cons_to_prim(u)?;
        let cs2 = self.gamma * p / (rho * self.enthalpy(rho, p));
        Ok(speeds(vx, vx * vx + vy * vy, cs2))
    }

    fn swap_xy(&self, u: &[f64; 4]) -> [f64; 4] {
        [u[0], u[2], u[1], u[3]]
    }

    fn sound_speed(&self, w: &[f64; 4]) -> f64 {
        (self.gamma * w[3] / (w[0] * self.enthalpy(w[0], w[3]))).sqrt()
    }

    fn flattener_pressure(&self, w: &[f64; 4]) -> f64 {
        w[3]
    }
}

/// Acoustic eigenvalues `(lambda_-, lambda_+)`.
fn speeds(vx: f64, v2: f64, cs2: f64) -> (f64, f64) {
    let cs = cs2.sqrt();
    let disc = ((1.0 - v2) * (1.0 - vx * vx - (v2 - vx * vx) * cs2)).max(0.0).sqrt();
    let den = 1.0 - v2 * cs2;
    let a = vx * (1.0 - cs2);
    ((a - cs * disc) / den, (a + cs * disc) / den)
}
