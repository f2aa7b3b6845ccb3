//! Nonlinear interpolation across a zone boundary, used for the odd flux
//! derivatives of the correction terms.
//!
//! The polynomial is centred on the boundary between zones `i` and `i+1`;
//! their centres sit at `xi = -1/2` and `xi = +1/2`.

use crate::error::{Error, Result};
use crate::legendre::{fit_unchecked, ModalPolynomial, StencilId};
use crate::order::SchemeOrder;
use crate::weno_center::{weights_into, WenoConfig};

/// Odd derivatives `P'(0), P'''(0), P^(5)(0), P^(7)(0)`; entries beyond the
/// scheme's correction count are zero.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct OddDerivatives(pub [f64; 4]);

impl OddDerivatives {
    pub fn d1(&self) -> f64 {
        self.0[0]
    }
    pub fn d3(&self) -> f64 {
        self.0[1]
    }
    pub fn d5(&self) -> f64 {
        self.0[2]
    }
    pub fn d7(&self) -> f64 {
        self.0[3]
    }
}

/// Per-component derivative stacks at one boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryDerivativeStack<const N: usize> {
    pub components: [OddDerivatives; N],
}

impl<const N: usize> Default for BoundaryDerivativeStack<N> {
    fn default() -> Self {
        Self {
            components: [OddDerivatives::default(); N],
        }
    }
}

impl<const N: usize> BoundaryDerivativeStack<N> {
    pub fn scaled(mut self, a: f64) -> Self {
        for c in self.components.iter_mut() {
            for d in c.0.iter_mut() {
                *d *= a;
            }
        }
        self
    }
}

fn tau_exponent(order: SchemeOrder) -> i32 {
    match order {
        SchemeOrder::Ninth => 4,
        _ => 2,
    }
}

/// Nonlinear boundary polynomial from a window at offsets `-left..=right`.
pub fn interp_boundary(cfg: &WenoConfig, window: &[f64]) -> Result<ModalPolynomial> {
    cfg.validate()?;
    let n = cfg.order.boundary_window_len();
    if window.len() != n {
        return Err(Error::usage(format!(
            "order-{} boundary window needs {n} values, got {}",
            cfg.order,
            window.len()
        )));
    }
    Ok(interp_boundary_unchecked(cfg, window))
}

pub(crate) fn interp_boundary_unchecked(cfg: &WenoConfig, window: &[f64]) -> ModalPolynomial {
    let (left, _) = cfg.order.boundary_reach();
    let z = left; // index of the zone left of the boundary
    let mut polys = [ModalPolynomial::zero(0); 4];
    let mut gamma = [0.0; 4];
    let hi = cfg.gamma_hi;
    let nbig = match cfg.order {
        SchemeOrder::Third => 0,
        SchemeOrder::Fifth => {
            polys[0] = fit_unchecked(StencilId::BoundaryC4, &window[z - 1..=z + 2]);
            gamma[0] = hi;
            1
        }
        SchemeOrder::Seventh => {
            polys[0] = fit_unchecked(StencilId::BoundaryC6, &window[z - 2..=z + 3]);
            gamma[0] = hi;
            1
        }
        SchemeOrder::Ninth => {
            polys[0] = fit_unchecked(StencilId::BoundaryC8, &window[z - 3..=z + 4]);
            polys[1] = fit_unchecked(StencilId::BoundaryC6, &window[z - 2..=z + 3]);
            gamma[0] = hi;
            gamma[1] = (1.0 - hi) * cfg.gamma_avg;
            2
        }
    };
    polys[nbig] = fit_unchecked(StencilId::BoundaryL3, &window[z - 1..=z + 1]);
    polys[nbig + 1] = fit_unchecked(StencilId::BoundaryR3, &window[z..=z + 2]);
    let small = if nbig == 0 {
        0.5
    } else {
        0.5 * (1.0 - gamma[..nbig].iter().sum::<f64>())
    };
    gamma[nbig] = small;
    gamma[nbig + 1] = small;
    let n = nbig + 2;

    let mut beta = [0.0; 4];
    for k in 0..n {
        beta[k] = polys[k].smoothness();
    }
    let mut w = [0.0; 4];
    weights_into(
        &gamma[..n],
        &beta[..n],
        cfg.epsilon,
        tau_exponent(cfg.order),
        0,
        &mut w[..n],
    );

    let mut out = ModalPolynomial::zero(0);
    if nbig == 0 {
        out.add_scaled(w[0], &polys[0]);
        out.add_scaled(w[1], &polys[1]);
        return out;
    }
    let r = w[0] / gamma[0];
    out.add_scaled(r, &polys[0]);
    for k in 1..n {
        out.add_scaled(w[k] - r * gamma[k], &polys[k]);
    }
    out
}

/// Odd derivatives at the boundary up to the scheme's needs.
pub fn boundary_derivatives(p: &ModalPolynomial, order: SchemeOrder) -> OddDerivatives {
    let mut d = [0.0; 4];
    for (q, slot) in d.iter_mut().enumerate().take(order.correction_terms()) {
        *slot = p.derivative_at_zero(2 * q + 1);
    }
    OddDerivatives(d)
}
