use super::{Grid, StateArray};
use crate::error::Result;
use crate::systems::HyperbolicSystem;

/// Per-zone flattening coefficient in `[0, 1]`, stored on the ghost-padded
/// layout. Zero outside the interior plus one ghost ring.
#[derive(Debug, Clone, PartialEq)]
pub struct FlattenerField {
    pub eta: Vec<f64>,
    pub kappa: f64,
}

impl FlattenerField {
    pub fn at(&self, grid: &Grid, i: i64, j: i64) -> f64 {
        self.eta[grid.index(i, j)]
    }

    pub fn max(&self) -> f64 {
        self.eta.iter().copied().fold(0.0, f64::max)
    }
}

/// Compression-based flattener: `eta` grows once the compression across a
/// zone exceeds `kappa` times the local sound speed, then spreads one zone
/// towards lower pressure.
pub fn flattener_eta<const N: usize, S: HyperbolicSystem<N>>(
    system: &S,
    state: &StateArray,
    grid: &Grid,
    kappa: f64,
) -> Result<FlattenerField> {
    let ntot = grid.nxt() * grid.nyt();
    let two_d = grid.is_2d();
    let (ri, rj) = (2i64, if two_d { 2i64 } else { 0 });
    let nx = grid.nx as i64;
    let ny = grid.ny as i64;

    // primitives on interior plus two rings
    let mut cs = vec![f64::NAN; ntot];
    let mut pr = vec![f64::NAN; ntot];
    let mut vel = vec![(0.0, 0.0); ntot];
    for j in -rj..ny + rj {
        for i in -ri..nx + ri {
            let idx = grid.index(i, j);
            let w = system
                .cons_to_prim(&state.get::<N>(grid, i, j))
                .map_err(|e| e.at_zone(i, j))?;
            cs[idx] = system.sound_speed(&w);
            pr[idx] = system.flattener_pressure(&w);
            vel[idx] = system.velocity(&w);
        }
    }

    let h = if two_d { grid.dx().max(grid.dy()) } else { grid.dx() };
    let mut eta = vec![0.0; ntot];
    let (oi, oj) = (1i64, if two_d { 1i64 } else { 0 });
    for j in -oj..ny + oj {
        for i in -oi..nx + oi {
            let mut div = (vel[grid.index(i + 1, j)].0 - vel[grid.index(i - 1, j)].0)
                / (2.0 * grid.dx());
            if two_d {
                div += (vel[grid.index(i, j + 1)].1 - vel[grid.index(i, j - 1)].1)
                    / (2.0 * grid.dy());
            }
            let mut cmin = f64::INFINITY;
            for b in -oj..=oj {
                for a in -1..=1 {
                    cmin = cmin.min(cs[grid.index(i + a, j + b)]);
                }
            }
            let x = div.abs() * h / (kappa * cmin) - 1.0;
            eta[grid.index(i, j)] = x.clamp(0.0, 1.0);
        }
    }

    let base = eta.clone();
    let spread = |eta: &mut Vec<f64>, from: (i64, i64), to: (i64, i64)| {
        let (a, b) = (grid.index(from.0, from.1), grid.index(to.0, to.1));
        if base[a] > 0.0 && base[b] == 0.0 && pr[a] > pr[b] {
            eta[b] = eta[b].max(base[a]);
        }
    };
    for j in -oj..ny + oj {
        for i in -oi..nx + oi {
            if i > -oi {
                spread(&mut eta, (i, j), (i - 1, j));
            }
            if i < nx + oi - 1 {
                spread(&mut eta, (i, j), (i + 1, j));
            }
            if two_d {
                if j > -oj {
                    spread(&mut eta, (i, j), (i, j - 1));
                }
                if j < ny + oj - 1 {
                    spread(&mut eta, (i, j), (i, j + 1));
                }
            }
        }
    }
    Ok(FlattenerField { eta, kappa })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::{fill_ghosts, BoundaryConditions, EdgeCondition};
    use crate::systems::Euler;

    fn setup(f: impl Fn(f64) -> [f64; 4]) -> (Euler, Grid, StateArray) {
        let e = Euler::new(1.4).unwrap();
        let g = Grid::new_1d(40, (-0.5, 0.5), 4).unwrap();
        let mut s = StateArray::zeros(&g, 4);
        for (i, j) in g.interior() {
            let u = e.prim_to_cons(&f(g.x_center(i))).unwrap();
            s.set(&g, i, j, &u);
        }
        let bc = BoundaryConditions::uniform(EdgeCondition::Outflow, vec![1], vec![2]);
        fill_ghosts(&mut s, &g, &bc, 0.0).unwrap();
        (e, g, s)
    }

    #[test]
    fn smooth_flow_is_not_flattened() {
        let (e, g, s) = setup(|x| [1.0 + 0.1 * x, 0.1 * (3.0 * x).sin(), 0.0, 1.0]);
        let f = flattener_eta(&e, &s, &g, 0.3).unwrap();
        assert_eq!(f.max(), 0.0);
    }

    #[test]
    fn strong_compression_is_flattened_and_spread() {
        let (e, g, s) = setup(|x| {
            if x < 0.0 {
                [4.0, 3.0, 0.0, 10.0]
            } else {
                [1.0, 0.0, 0.0, 1.0 - 0.1 * x]
            }
        });
        let f = flattener_eta(&e, &s, &g, 0.3).unwrap();
        assert_eq!(f.at(&g, 19, 0), 1.0);
        assert_eq!(f.at(&g, 20, 0), 1.0);
        // spread toward the low-pressure side only
        assert!(f.at(&g, 21, 0) > 0.0);
        assert_eq!(f.at(&g, 18, 0), 0.0);
        for i in 0..15 {
            assert_eq!(f.at(&g, i, 0), 0.0);
        }
    }
}
