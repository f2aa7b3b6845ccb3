use super::{check_finite, Eigensystem, HyperbolicSystem, Matrix};
use crate::error::{Error, Result};

/// Ten-moment Gaussian closure of gas dynamics in two dimensions.
/// Primitives `(rho, vx, vy, pxx, pxy, pyy)`, conserved
/// `(rho, rho vx, rho vy, rho vx^2 + pxx, rho vx vy + pxy, rho vy^2 + pyy)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TenMoment;

impl TenMoment {
    fn check(w: &[f64; 6]) -> Result<()> {
        let [rho, _, _, pxx, pxy, pyy] = *w;
        if !(rho > 0.0) || !(pxx > 0.0) || !(pyy > 0.0) || !(pxx * pyy - pxy * pxy > 0.0) {
            return Err(Error::domain(format!("inadmissible ten-moment primitive {w:?}")));
        }
        Ok(())
    }

    /// `dU/dW` at primitive state `w`.
    fn state_jacobian(w: &[f64; 6]) -> Matrix<6> {
        let [rho, vx, vy, ..] = *w;
        #[rustfmt::skip]
        let j = Matrix::<6>::from_row_slice(&[
            1.0,     0.0,            0.0,            0.0, 0.0, 0.0,
            vx,      rho,            0.0,            0.0, 0.0, 0.0,
            vy,      0.0,            rho,            0.0, 0.0, 0.0,
            vx * vx, 2.0 * rho * vx, 0.0,            1.0, 0.0, 0.0,
            vx * vy, rho * vy,       rho * vx,       0.0, 1.0, 0.0,
            vy * vy, 0.0,            2.0 * rho * vy, 0.0, 0.0, 1.0,
        ]);
        j
    }
}

impl HyperbolicSystem<6> for TenMoment {
    fn name(&self) -> &'static str {
        "tenmoment"
    }

    fn primitive_names(&self) -> [&'static str; 6] {
        ["rho", "vx", "vy", "pxx", "pxy", "pyy"]
    }

    fn prim_to_cons(&self, w: &[f64; 6]) -> Result<[f64; 6]> {
        Self::check(w)?;
        let [rho, vx, vy, pxx, pxy, pyy] = *w;
        Ok([
            rho,
            rho * vx,
            rho * vy,
            rho * vx * vx + pxx,
            rho * vx * vy + pxy,
            rho * vy * vy + pyy,
        ])
    }

    fn cons_to_prim(&self, u: &[f64; 6]) -> Result<[f64; 6]> {
        check_finite(u, "ten-moment state")?;
        let rho = u[0];
        if !(rho > 0.0) {
            return Err(Error::domain(format!("non-positive density {rho}")));
        }
        let vx = u[1] / rho;
        let vy = u[2] / rho;
        let w = [
            rho,
            vx,
            vy,
            u[3] - rho * vx * vx,
            u[4] - rho * vx * vy,
            u[5] - rho * vy * vy,
        ];
        Self::check(&w)?;
        Ok(w)
    }

    fn flux_x(&self, u: &[f64; 6]) -> Result<[f64; 6]> {
        let [rho, vx, vy, pxx, pxy, pyy] = self.cons_to_prim(u)?;
        Ok([
            rho * vx,
            rho * vx * vx + pxx,
            rho * vx * vy + pxy,
            rho * vx * vx * vx + 3.0 * vx * pxx,
            rho * vx * vx * vy + 2.0 * vx * pxy + vy * pxx,
            rho * vx * vy * vy + vx * pyy + 2.0 * vy * pxy,
        ])
    }

    fn eigen_x(&self, u: &[f64; 6]) -> Result<Eigensystem<6>> {
        let w = self.cons_to_prim(u)?;
        let [rho, vx, _, pxx, pxy, pyy] = w;
        let a = (3.0 * pxx / rho).sqrt();
        let b = (pxx / rho).sqrt();
        let fast = |s: f64| {
            [
                rho,
                s * a,
                s * a * pxy / pxx,
                3.0 * pxx,
                3.0 * pxy,
                pyy + 2.0 * pxy * pxy / pxx,
            ]
        };
        let slow = |s: f64| [0.0, 0.0, s * b, 0.0, pxx, 2.0 * pxy];
        let cols = [
            fast(-1.0),
            slow(-1.0),
            [1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
            slow(1.0),
            fast(1.0),
        ];
        let rw = Matrix::<6>::from_fn(|r, c| cols[c][r]);
        let right = Self::state_jacobian(&w) * rw;
        Eigensystem::from_right([vx - a, vx - b, vx, vx, vx + b, vx + a], right)
    }

    fn wave_speeds_x(&self, u: &[f64; 6]) -> Result<(f64, f64)> {
        let [rho, vx, _, pxx, ..] = self.cons_to_prim(u)?;
        let a = (3.0 * pxx / rho).sqrt();
        Ok((vx - a, vx + a))
    }

    fn swap_xy(&self, u: &[f64; 6]) -> [f64; 6] {
        [u[0], u[2], u[1], u[5], u[4], u[3]]
    }

    fn odd_components_x(&self) -> &'static [usize] {
        &[1, 4]
    }

    fn sound_speed(&self, w: &[f64; 6]) -> f64 {
        (self.flattener_pressure(w) / w[0]).sqrt()
    }

    fn flattener_pressure(&self, w: &[f64; 6]) -> f64 {
        (w[3] * w[5] - w[4] * w[4]).max(0.0).sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::systems::test_support::check_eigensystem;
    use crate::systems::Direction;

    #[test]
    fn eigensystems_are_consistent() {
        let s = TenMoment;
        for w in [
            [1.0, 0.0, 0.0, 2.0, 0.05, 0.6],
            [0.125, 0.3, -0.2, 0.2, 0.1, 0.2],
            [2.0, -0.5, -0.5, 1.5, 0.5, 1.5],
        ] {
            let u = s.prim_to_cons(&w).unwrap();
            check_eigensystem(&s, &u, Direction::X);
            check_eigensystem(&s, &u, Direction::Y);
        }
    }

    #[test]
    fn swap_is_involution_and_y_flux_is_consistent() {
        let s = TenMoment;
        let u = s.prim_to_cons(&[1.0, 0.3, -0.7, 2.0, 0.1, 0.5]).unwrap();
        assert_eq!(s.swap_xy(&s.swap_xy(&u)), u);
        let fy = s.flux(&u, Direction::Y).unwrap();
        let [rho, vx, vy, pxx, pxy, pyy] = s.cons_to_prim(&u).unwrap();
        let want = [
            rho * vy,
            rho * vx * vy + pxy,
            rho * vy * vy + pyy,
            rho * vy * vx * vx + pxx * vy + 2.0 * vx * pxy,
            rho * vx * vy * vy + 2.0 * vy * pxy + vx * pyy,
            rho * vy * vy * vy + 3.0 * vy * pyy,
        ];
        for k in 0..6 {
            assert!((fy[k] - want[k]).abs() < 1e-13, "{k}: {fy:?} vs {want:?}");
        }
    }

    #[test]
    fn non_positive_pressure_tensor_is_rejected() {
        assert!(TenMoment.prim_to_cons(&[1.0, 0.0, 0.0, 1.0, 2.0, 1.0]).is_err());
    }
}
