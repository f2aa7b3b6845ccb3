use std::sync::Arc;

use super::{Grid, StateArray};
use crate::error::{Error, Result};

/// Ghost value generator `(x, y, t)`: `Some(conserved)` fixes the ghost zone,
/// `None` reflects it.
pub type GhostFn = Arc<dyn Fn(f64, f64, f64) -> Option<Vec<f64>> + Send + Sync>;

#[derive(Clone)]
pub enum EdgeCondition {
    Periodic,
    /// Zero-gradient extrapolation.
    Outflow,
    /// Mirror with the odd components negated.
    Reflective,
    /// Fixed conserved state.
    Dirichlet(Vec<f64>),
    /// Position- and time-dependent mix of fixed and reflective ghosts.
    Mixed(GhostFn),
}

impl std::fmt::Debug for EdgeCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EdgeCondition::Periodic => write!(f, "Periodic"),
            EdgeCondition::Outflow => write!(f, "Outflow"),
            EdgeCondition::Reflective => write!(f, "Reflective"),
            EdgeCondition::Dirichlet(v) => write!(f, "Dirichlet({v:?})"),
            EdgeCondition::Mixed(_) => write!(f, "Mixed(..)"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BoundaryConditions {
    pub left: EdgeCondition,
    pub right: EdgeCondition,
    pub bottom: EdgeCondition,
    pub top: EdgeCondition,
    /// Components that change sign under reflection across an x wall.
    pub odd_x: Vec<usize>,
    /// Components that change sign under reflection across a y wall.
    pub odd_y: Vec<usize>,
}

impl BoundaryConditions {
    pub fn uniform(edge: EdgeCondition, odd_x: Vec<usize>, odd_y: Vec<usize>) -> Self {
        Self {
            left: edge.clone(),
            right: edge.clone(),
            bottom: edge.clone(),
            top: edge,
            odd_x,
            odd_y,
        }
    }

    pub fn validate(&self, nvar: usize) -> Result<()> {
        let px = matches!(self.left, EdgeCondition::Periodic);
        let qx = matches!(self.right, EdgeCondition::Periodic);
        let py = matches!(self.bottom, EdgeCondition::Periodic);
        let qy = matches!(self.top, EdgeCondition::Periodic);
        if px != qx || py != qy {
            return Err(Error::usage("periodic boundaries must come in pairs"));
        }
        for e in [&self.left, &self.right, &self.bottom, &self.top] {
            if let EdgeCondition::Dirichlet(v) = e
                && v.len() != nvar {
                    return Err(Error::usage("Dirichlet state has the wrong length"));
                }
        }
        Ok(())
    }
}

/// Fill every ghost zone for time `t`. X ghosts are filled on interior rows,
/// then y ghosts on all columns, which also fills the corners.
pub fn fill_ghosts(
    state: &mut StateArray,
    grid: &Grid,
    bcs: &BoundaryConditions,
    t: f64,
) -> Result<()> {
    bcs.validate(state.nvar)?;
    let nx = grid.nx as i64;
    let ny = grid.ny as i64;
    let gx = grid.gx() as i64;
    let gy = grid.gy() as i64;
    for j in 0..ny {
        for k in 0..gx {
            // ghost index, its periodic image, its mirror, the edge zone
            fill_one(state, grid, &bcs.left, &bcs.odd_x, (-1 - k, j), (nx - 1 - k, j), (k, j), (0, j), t)?;
            fill_one(state, grid, &bcs.right, &bcs.odd_x, (nx + k, j), (k, j), (nx - 1 - k, j), (nx - 1, j), t)?;
        }
    }
    for i in -gx..nx + gx {
        for k in 0..gy {
            fill_one(state, grid, &bcs.bottom, &bcs.odd_y, (i, -1 - k), (i, ny - 1 - k), (i, k), (i, 0), t)?;
            fill_one(state, grid, &bcs.top, &bcs.odd_y, (i, ny + k), (i, k), (i, ny - 1 - k), (i, ny - 1), t)?;
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn fill_one(
    state: &mut StateArray,
    grid: &Grid,
    edge: &EdgeCondition,
    odd: &[usize],
    ghost: (i64, i64),
    image: (i64, i64),
    mirror: (i64, i64),
    edge_zone: (i64, i64),
    t: f64,
) -> Result<()> {
    let nvar = state.nvar;
    let src: Vec<f64> = match edge {
        EdgeCondition::Periodic => state.zone(grid, image.0, image.1).to_vec(),
        EdgeCondition::Outflow => state.zone(grid, edge_zone.0, edge_zone.1).to_vec(),
        EdgeCondition::Reflective => reflect(state.zone(grid, mirror.0, mirror.1), odd),
        EdgeCondition::Dirichlet(v) => v.clone(),
        EdgeCondition::Mixed(f) => {
            match f(grid.x_center(ghost.0), grid.y_center(ghost.1), t) {
                Some(v) => {
                    if v.len() != nvar {
                        return Err(Error::usage("ghost function returned the wrong length"));
                    }
                    v
                }
                None => reflect(state.zone(grid, mirror.0, mirror.1), odd),
            }
        }
    };
    state.zone_mut(grid, ghost.0, ghost.1).copy_from_slice(&src);
    Ok(())
}

pub(crate) fn reflect(zone: &[f64], odd: &[usize]) -> Vec<f64> {
    let mut v = zone.to_vec();
    for &k in odd {
        v[k] = -v[k];
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ramp(grid: &Grid) -> StateArray {
        let mut s = StateArray::zeros(grid, 2);
        for (i, j) in grid.interior() {
            s.zone_mut(grid, i, j).copy_from_slice(&[(i + 10 * j) as f64, 1.0 + i as f64]);
        }
        s
    }

    #[test]
    fn periodic_and_reflective_1d() {
        let g = Grid::new_1d(8, (0.0, 1.0), 4).unwrap();
        let mut s = ramp(&g);
        let bc = BoundaryConditions::uniform(EdgeCondition::Periodic, vec![1], vec![]);
        fill_ghosts(&mut s, &g, &bc, 0.0).unwrap();
        assert_eq!(s.zone(&g, -1, 0), s.zone(&g, 7, 0));
        assert_eq!(s.zone(&g, 9, 0), s.zone(&g, 1, 0));
        let mut bc = bc;
        bc.left = EdgeCondition::Reflective;
        bc.right = EdgeCondition::Reflective;
        fill_ghosts(&mut s, &g, &bc, 0.0).unwrap();
        assert_eq!(s.zone(&g, -2, 0), &[1.0, -2.0]);
        assert_eq!(s.zone(&g, 8, 0), &[7.0, -8.0]);
    }

    #[test]
    fn mixed_and_corners_2d() {
        let g = Grid::new_2d(6, 6, (0.0, 1.0), (0.0, 1.0), 4).unwrap();
        let mut s = ramp(&g);
        let mut bc = BoundaryConditions::uniform(EdgeCondition::Outflow, vec![1], vec![0]);
        bc.bottom = EdgeCondition::Mixed(Arc::new(|x, _, _| (x < 0.5).then(|| vec![-7.0, -7.0])));
        fill_ghosts(&mut s, &g, &bc, 0.0).unwrap();
        assert_eq!(s.zone(&g, 1, -1), &[-7.0, -7.0]);
        assert_eq!(s.zone(&g, 4, -2), &[-14.0, 5.0]);
        assert_eq!(s.zone(&g, -3, 9), s.zone(&g, 0, 5));
    }

    #[test]
    fn unpaired_periodic_is_rejected() {
        let g = Grid::new_1d(8, (0.0, 1.0), 4).unwrap();
        let mut s = ramp(&g);
        let mut bc = BoundaryConditions::uniform(EdgeCondition::Periodic, vec![], vec![]);
        bc.right = EdgeCondition::Outflow;
        assert!(fill_ghosts(&mut s, &g, &bc, 0.0).is_err());
    }
}
