use super::{check_finite, Eigensystem, HyperbolicSystem, Matrix};
use crate::error::{Error, Result};

/// Two-dimensional Euler equations for an ideal gas.
/// Primitives `(rho, vx, vy, p)`, conserved `(rho, rho vx, rho vy, E)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Euler {
    pub gamma: f64,
}

impl Euler {
    pub fn new(gamma: f64) -> Result<Self> {
        if !(gamma > 1.0) {
            return Err(Error::usage(format!("adiabatic index must exceed 1, got {gamma}")));
        }
        Ok(Self { gamma })
    }

    fn unpack(&self, u: &[f64; 4]) -> Result<(f64, f64, f64, f64)> {
        let w = self.cons_to_prim(u)?;
        Ok((w[0], w[1], w[2], w[3]))
    }
}

impl HyperbolicSystem<4> for Euler {
    fn name(&self) -> &'static str {
        "euler"
    }

    fn primitive_names(&self) -> [&'static str; 4] {
        ["rho", "vx", "vy", "p"]
    }

    fn prim_to_cons(&self, w: &[f64; 4]) -> Result<[f64; 4]> {
        let [rho, vx, vy, p] = *w;
        if !(rho > 0.0) || !(p > 0.0) {
            return Err(Error::domain(format!("inadmissible Euler primitive {w:?}")));
        }
        let e = p / (self.gamma - 1.0) + 0.5 * rho * (vx * vx + vy * vy);
        Ok([rho, rho * vx, rho * vy, e])
    }

    fn cons_to_prim(&self, u: &[f64; 4]) -> Result<[f64; 4]> {
        check_finite(u, "Euler state")?;
        let rho = u[0];
        if !(rho > 0.0) {
            return Err(Error::domain(format!("non-positive density {rho}")));
        }
        let vx = u[1] / rho;
        let vy = u[2] / rho;
        let p = (self.gamma - 1.0) * (u[3] - 0.5 * rho * (vx * vx + vy * vy));
        if !(p > 0.0) {
            return Err(Error::domain(format!("non-positive pressure {p}")));
        }
        Ok([rho, vx, vy, p])
    }

    fn flux_x(&self, u: &[f64; 4]) -> Result<[f64; 4]> {
        let (rho, vx, vy, p) = self.unpack(u)?;
        Ok([rho * vx, rho * vx * vx + p, rho * vx * vy, (u[3] + p) * vx])
    }

    fn jacobian_vector_x(&self, u: &[f64; 4], v: &[f64; 4]) -> Result<[f64; 4]> {
        let (rho, a, b, p) = self.unpack(u)?;
        let g1 = self.gamma - 1.0;
        let q2 = a * a + b * b;
        let h = (u[3] + p) / rho;
        Ok([
            v[1],
            (0.5 * g1 * q2 - a * a) * v[0] + (3.0 - self.gamma) * a * v[1] - g1 * b * v[2]
                + g1 * v[3],
            -a * b * v[0] + b * v[1] + a * v[2],
            a * (0.5 * g1 * q2 - h) * v[0] + (h - g1 * a * a) * v[1] - g1 * a * b * v[2]
                + self.gamma * a * v[3],
        ])
    }

    fn eigen_x(&self, u: &[f64; 4]) -> Result<Eigensystem<4>> {
        let (rho, a, b, p) = self.unpack(u)?;
        let c = (self.gamma * p / rho).sqrt();
        let h = (u[3] + p) / rho;
        let q2 = a * a + b * b;
        #[rustfmt::skip]
        let right = Matrix::<4>::new(
            1.0,        1.0,        0.0, 1.0,
            a - c,      a,          0.0, a + c,
            b,          b,          1.0, b,
            h - a * c,  0.5 * q2,   b,   h + a * c,
        );
        let b1 = (self.gamma - 1.0) / (c * c);
        let b2 = 0.5 * b1 * q2;
        #[rustfmt::skip]
        let left = Matrix::<4>::new(
            0.5 * (b2 + a / c), 0.5 * (-b1 * a - 1.0 / c), -0.5 * b1 * b, 0.5 * b1,
            1.0 - b2,           b1 * a,                     b1 * b,       -b1,
            -b,                 0.0,                        1.0,          0.0,
            0.5 * (b2 - a / c), 0.5 * (-b1 * a + 1.0 / c), -0.5 * b1 * b, 0.5 * b1,
        );
        Ok(Eigensystem {
            eigenvalues: [a - c, a, a, a + c],
            right,
            left,
        })
    }

    fn wave_speeds_x(&self, u: &[f64; 4]) -> Result<(f64, f64)> {
        let (rho, a, _, p) = self.unpack(u)?;
        let c = (self.gamma * p / rho).sqrt();
        Ok((a - c, a + c))
    }

    fn swap_xy(&self, u: &[f64; 4]) -> [f64; 4] {
        [u[0], u[2], u[1], u[3]]
    }

    fn sound_speed(&self, w: &[f64; 4]) -> f64 {
        (self.gamma * w[3] / w[0]).sqrt()
    }

    fn flattener_pressure(&self, w: &[f64; 4]) -> f64 {
        w[3]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::systems::test_support::check_eigensystem;
    use crate::systems::{fd_jacobian_vector, Direction};

    #[test]
    fn rest_state_eigenvalues() {
        let s = Euler::new(1.4).unwrap();
        let u = s.prim_to_cons(&[1.0, 0.0, 0.0, 1.0]).unwrap();
        let e = s.eigenvectors(&u, Direction::X).unwrap();
        let c = 1.4f64.sqrt();
        let want = [-c, 0.0, 0.0, c];
        for (a, b) in e.eigenvalues.iter().zip(want) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn analytic_jacobian_matches_difference() {
        let s = Euler::new(1.4).unwrap();
        let u = s.prim_to_cons(&[1.3, 0.4, -0.7, 2.2]).unwrap();
        let v = [0.3, -0.1, 0.8, 0.5];
        let a = s.jacobian_vector_x(&u, &v).unwrap();
        let b = fd_jacobian_vector(|x| s.flux_x(x), &u, &v).unwrap();
        for k in 0..4 {
            assert!((a[k] - b[k]).abs() < 1e-7, "{a:?} {b:?}");
        }
    }

    #[test]
    fn eigensystems_are_consistent() {
        let s = Euler::new(1.4).unwrap();
        let u = s.prim_to_cons(&[0.7, -1.4, 0.3, 0.4]).unwrap();
        check_eigensystem(&s, &u, Direction::X);
        check_eigensystem(&s, &u, Direction::Y);
    }

    #[test]
    fn negative_pressure_is_rejected() {
        let s = Euler::new(1.4).unwrap();
        assert!(s.cons_to_prim(&[1.0, 2.0, 0.0, 1.0]).is_err());
        assert!(s.prim_to_cons(&[-1.0, 0.0, 0.0, 1.0]).is_err());
    }
}
