//! Exact solutions used as references: the Euler Riemann problem and the
//! smooth advected profiles.

use crate::error::{Error, Result};

/// Star-region pressure and velocity of an Euler Riemann problem with
/// primitive states `(rho, vx, vy, p)`.
pub fn euler_star_state(left: &[f64; 4], right: &[f64; 4], gamma: f64) -> Result<(f64, f64)> {
    let (rl, ul, pl) = (left[0], left[1], left[3]);
    let (rr, ur, pr) = (right[0], right[1], right[3]);
    if !(rl > 0.0 && rr > 0.0 && pl > 0.0 && pr > 0.0) {
        return Err(Error::domain("Riemann states must have positive density and pressure"));
    }
    let cl = (gamma * pl / rl).sqrt();
    let cr = (gamma * pr / rr).sqrt();
    if 2.0 / (gamma - 1.0) * (cl + cr) <= ur - ul {
        return Err(Error::domain("Riemann data generates vacuum"));
    }
    let side = |p: f64, rk: f64, pk: f64, ck: f64| -> (f64, f64) {
        if p > pk {
            let a = 2.0 / ((gamma + 1.0) * rk);
            let b = (gamma - 1.0) / (gamma + 1.0) * pk;
            let q = (a / (p + b)).sqrt();
            ((p - pk) * q, q * (1.0 - 0.5 * (p - pk) / (p + b)))
        } else {
            let e = (gamma - 1.0) / (2.0 * gamma);
            let r = p / pk;
            (
                2.0 * ck / (gamma - 1.0) * (r.powf(e) - 1.0),
                r.powf(-(gamma + 1.0) / (2.0 * gamma)) / (rk * ck),
            )
        }
    };
    // two-rarefaction guess
    let e = (gamma - 1.0) / (2.0 * gamma);
    let mut p = ((cl + cr - 0.5 * (gamma - 1.0) * (ur - ul))
        / (cl / pl.powf(e) + cr / pr.powf(e)))
    .powf(1.0 / e)
    .max(1e-12 * (pl + pr));
    let mut converged = false;
    for _ in 0..100 {
        let (fl, dl) = side(p, rl, pl, cl);
        let (fr, dr) = side(p, rr, pr, cr);
        let f = fl + fr + ur - ul;
        let mut next = p - f / (dl + dr);
        if next <= 0.0 {
            next = 0.5 * p;
        }
        let change = (next - p).abs() / (0.5 * (next + p));
        p = next;
        if change < 1e-15 {
            converged = true;
            break;
        }
    }
    let (fl, _) = side(p, rl, pl, cl);
    let (fr, _) = side(p, rr, pr, cr);
    let residual = fl + fr + ur - ul;
    if !converged && residual.abs() > 1e-12 {
        return Err(Error::numerical("exact Riemann pressure iteration did not converge"));
    }
    Ok((p, 0.5 * (ul + ur) + 0.5 * (fr - fl)))
}

/// Samples the self-similar Euler Riemann solution at `s = x / t`.
pub fn exact_euler_riemann(
    left: &[f64; 4],
    right: &[f64; 4],
    gamma: f64,
    s: f64,
) -> Result<[f64; 4]> {
    let (ps, us) = euler_star_state(left, right, gamma)?;
    let g1 = (gamma - 1.0) / (gamma + 1.0);
    let sample = |k: &[f64; 4], dir: f64| -> [f64; 4] {
        // dir = -1 for the left wave, +1 for the right wave; work in a frame
        // where the wave moves in the `dir` direction.
        let (rk, uk, vk, pk) = (k[0], k[1], k[2], k[3]);
        let ck = (gamma * pk / rk).sqrt();
        if ps > pk {
            let ratio = ps / pk;
            let sk = uk + dir * ck * ((gamma + 1.0) / (2.0 * gamma) * ratio + (gamma - 1.0) / (2.0 * gamma)).sqrt();
            if dir * (s - sk) >= 0.0 {
                [rk, uk, vk, pk]
            } else {
                let rs = rk * (ratio + g1) / (g1 * ratio + 1.0);
                [rs, us, vk, ps]
            }
        } else {
            let head = uk + dir * ck;
            let cs = ck * (ps / pk).powf((gamma - 1.0) / (2.0 * gamma));
            let tail = us + dir * cs;
            if dir * (s - head) >= 0.0 {
                [rk, uk, vk, pk]
            } else if dir * (s - tail) <= 0.0 {
                [rk * (ps / pk).powf(1.0 / gamma), us, vk, ps]
            } else {
                let c = 2.0 / (gamma + 1.0) * (ck - dir * 0.5 * (gamma - 1.0) * (uk - s));
                let u = 2.0 / (gamma + 1.0) * (-dir * ck + 0.5 * (gamma - 1.0) * uk + s);
                let r = rk * (c / ck).powf(2.0 / (gamma - 1.0));
                [r, u, vk, pk * (c / ck).powf(2.0 * gamma / (gamma - 1.0))]
            }
        }
    };
    Ok(if s <= us {
        sample(left, -1.0)
    } else {
        sample(right, 1.0)
    })
}
