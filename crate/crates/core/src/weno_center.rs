//! Adaptive-order WENO reconstruction inside a zone.
//!
//! From point values around zone `i` this produces the state just inside the
//! left and right faces and the undivided slope at the zone centre.

use crate::error::{Error, Result};
use crate::legendre::{fit_unchecked, ModalPolynomial, StencilId};
use crate::order::SchemeOrder;

/// Which adaptive-order combination is used for the centre reconstruction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CenterVariant {
    /// Three third-order stencils blended as a plain convex combination.
    Ao3,
    /// Three third-order stencils with the central one de-biased like the
    /// large stencil of the higher orders, so smooth data returns exactly the
    /// central fit. Not robust at strong jumps: a smooth central stencil keeps
    /// a negative share of a biased stencil that straddles the jump.
    Ao3Central,
    /// Five-point stencil over the three third-order stencils.
    Ao53,
    /// Seven-point stencil over the three third-order stencils.
    Ao73,
    /// Seven-point, then five-point, then third-order stencils.
    Ao753,
    /// Nine-point stencil over the three third-order stencils.
    Ao93,
}

impl CenterVariant {
    pub fn default_for(order: SchemeOrder) -> Self {
        match order {
            SchemeOrder::Third => CenterVariant::Ao3,
            SchemeOrder::Fifth => CenterVariant::Ao53,
            SchemeOrder::Seventh => CenterVariant::Ao73,
            SchemeOrder::Ninth => CenterVariant::Ao93,
        }
    }

    pub fn order(self) -> SchemeOrder {
        match self {
            CenterVariant::Ao3 | CenterVariant::Ao3Central => SchemeOrder::Third,
            CenterVariant::Ao53 => SchemeOrder::Fifth,
            CenterVariant::Ao73 | CenterVariant::Ao753 => SchemeOrder::Seventh,
            CenterVariant::Ao93 => SchemeOrder::Ninth,
        }
    }

    pub fn default_tau_exponent(self) -> i32 {
        match self {
            CenterVariant::Ao753 => 3,
            _ => 2,
        }
    }
}

impl std::str::FromStr for CenterVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['(', ')', ',', '-'], "").as_str() {
            "ao3" => Ok(CenterVariant::Ao3),
            "ao3central" => Ok(CenterVariant::Ao3Central),
            "ao53" => Ok(CenterVariant::Ao53),
            "ao73" => Ok(CenterVariant::Ao73),
            "ao753" => Ok(CenterVariant::Ao753),
            "ao93" => Ok(CenterVariant::Ao93),
            _ => Err(Error::usage(format!("unknown centre variant '{s}'"))),
        }
    }
}

/// Tunable parameters of the nonlinear weights.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WenoConfig {
    pub order: SchemeOrder,
    pub center_variant: CenterVariant,
    pub gamma_hi: f64,
    pub gamma_avg: f64,
    pub gamma_lo: f64,
    pub epsilon: f64,
    /// Overrides the variant's default `tau` exponent.
    pub tau_exponent: Option<i32>,
}

impl WenoConfig {
    pub fn new(order: SchemeOrder) -> Self {
        Self {
            order,
            center_variant: CenterVariant::default_for(order),
            gamma_hi: 0.85,
            gamma_avg: 0.85,
            gamma_lo: 0.85,
            epsilon: 1e-12,
            tau_exponent: None,
        }
    }

    pub fn with_variant(mut self, v: CenterVariant) -> Self {
        self.center_variant = v;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.center_variant.order() != self.order {
            return Err(Error::usage(format!(
                "centre variant {:?} is not an order-{} scheme",
                self.center_variant, self.order
            )));
        }
        for (name, g) in [
            ("gamma_hi", self.gamma_hi),
            ("gamma_avg", self.gamma_avg),
            ("gamma_lo", self.gamma_lo),
        ] {
            if !(g > 0.0 && g < 1.0) {
                return Err(Error::usage(format!("{name} must lie in (0,1), got {g}")));
            }
        }
        if !(self.epsilon > 0.0) {
            return Err(Error::usage("epsilon must be positive"));
        }
        Ok(())
    }

    pub fn center_tau_exponent(&self) -> i32 {
        self.tau_exponent
            .unwrap_or_else(|| self.center_variant.default_tau_exponent())
    }
}

/// Result of a centre reconstruction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CenterInterpolation {
    /// Value at the left face, `xi = -1/2`.
    pub u_left: f64,
    /// Value at the right face, `xi = +1/2`.
    pub u_right: f64,
    /// Slope in zone units at the centre.
    pub du_center: f64,
}

/// Normalised nonlinear weights. `tau` is the mean distance of the reference
/// indicator from the others.
pub fn nonlinear_weights(
    gamma: &[f64],
    beta: &[f64],
    eps: f64,
    tau_exp: i32,
    reference_index: usize,
) -> Result<Vec<f64>> {
    if gamma.len() != beta.len() || gamma.len() < 2 {
        return Err(Error::usage(
            "weights need matching gamma/beta lists of length >= 2",
        ));
    }
    if reference_index >= gamma.len() {
        return Err(Error::usage("reference index out of range"));
    }
    let mut out = vec![0.0; gamma.len()];
    weights_into(gamma, beta, eps, tau_exp, reference_index, &mut out);
    Ok(out)
}

pub(crate) fn weights_into(
    gamma: &[f64],
    beta: &[f64],
    eps: f64,
    tau_exp: i32,
    reference: usize,
    out: &mut [f64],
) {
    let n = gamma.len();
    let bref = beta[reference];
    let tau = beta
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != reference)
        .map(|(_, b)| (bref - b).abs())
        .sum::<f64>()
        / (n - 1) as f64;
    let tp = tau.powi(tau_exp);
    let mut sum = 0.0;
    for k in 0..n {
        let d = beta[k] + eps;
        out[k] = gamma[k] * (1.0 + tp / (d * d));
        sum += out[k];
    }
    for w in out.iter_mut() {
        *w /= sum;
    }
}

/// Linear weights for `(big..., left r3, centre r3, right r3)`.
fn linear_weights(cfg: &WenoConfig, out: &mut [f64; 5]) -> usize {
    let (hi, avg, lo) = (cfg.gamma_hi, cfg.gamma_avg, cfg.gamma_lo);
    match cfg.center_variant {
        CenterVariant::Ao3 | CenterVariant::Ao3Central => {
            out[0] = 0.5 * (1.0 - lo);
            out[1] = lo;
            out[2] = 0.5 * (1.0 - lo);
            3
        }
        CenterVariant::Ao53 | CenterVariant::Ao73 | CenterVariant::Ao93 => {
            out[0] = hi;
            out[1] = 0.5 * (1.0 - hi) * (1.0 - lo);
            out[2] = (1.0 - hi) * lo;
            out[3] = 0.5 * (1.0 - hi) * (1.0 - lo);
            4
        }
        CenterVariant::Ao753 => {
            out[0] = hi;
            out[1] = (1.0 - hi) * avg;
            let rest = (1.0 - hi) * (1.0 - avg);
            out[2] = 0.5 * rest * (1.0 - lo);
            out[3] = rest * lo;
            out[4] = 0.5 * rest * (1.0 - lo);
            5
        }
    }
}

/// Nonlinear centre polynomial from a window of `2*hw + 1` point values.
pub fn center_polynomial(cfg: &WenoConfig, window: &[f64]) -> Result<ModalPolynomial> {
    cfg.validate()?;
    let hw = cfg.order.center_half_width();
    if window.len() != 2 * hw + 1 {
        return Err(Error::usage(format!(
            "order-{} centre window needs {} values, got {}",
            cfg.order,
            2 * hw + 1,
            window.len()
        )));
    }
    Ok(center_polynomial_unchecked(cfg, window))
}

pub(crate) fn center_polynomial_unchecked(cfg: &WenoConfig, window: &[f64]) -> ModalPolynomial {
    let hw = cfg.order.center_half_width();
    let c = hw; // index of the zone itself
    let mut polys = [ModalPolynomial::zero(0); 5];
    let mut gamma = [0.0; 5];
    let n = linear_weights(cfg, &mut gamma);
    let nbig = n - 3;
    match cfg.center_variant {
        CenterVariant::Ao3 | CenterVariant::Ao3Central => {}
        CenterVariant::Ao53 => polys[0] = fit_unchecked(StencilId::Center5, &window[c - 2..=c + 2]),
        CenterVariant::Ao73 => polys[0] = fit_unchecked(StencilId::Center7, &window[c - 3..=c + 3]),
        CenterVariant::Ao93 => polys[0] = fit_unchecked(StencilId::Center9, &window[c - 4..=c + 4]),
        CenterVariant::Ao753 => {
            polys[0] = fit_unchecked(StencilId::Center7, &window[c - 3..=c + 3]);
            polys[1] = fit_unchecked(StencilId::Center5, &window[c - 2..=c + 2]);
        }
    }
    polys[nbig] = fit_unchecked(StencilId::CenterL3, &window[c - 2..=c]);
    polys[nbig + 1] = fit_unchecked(StencilId::CenterC3, &window[c - 1..=c + 1]);
    polys[nbig + 2] = fit_unchecked(StencilId::CenterR3, &window[c..=c + 2]);

    let mut beta = [0.0; 5];
    for k in 0..n {
        beta[k] = polys[k].smoothness();
    }
    let reference = if nbig == 0 { 1 } else { 0 };
    let mut w = [0.0; 5];
    weights_into(
        &gamma[..n],
        &beta[..n],
        cfg.epsilon,
        cfg.center_tau_exponent(),
        reference,
        &mut w[..n],
    );

    let mut out = ModalPolynomial::zero(0);
    if cfg.center_variant == CenterVariant::Ao3Central {
        // (w1/g1) (P1 - g0 P0 - g2 P2) + w0 P0 + w2 P2
        let r = w[1] / gamma[1];
        out.add_scaled(r, &polys[1]);
        for k in [0, 2] {
            out.add_scaled(w[k] - r * gamma[k], &polys[k]);
        }
        return out;
    }
    if nbig == 0 {
        for k in 0..n {
            out.add_scaled(w[k], &polys[k]);
        }
        return out;
    }
    // (w0/g0) (P0 - sum_{k>0} g_k P_k) + sum_{k>0} w_k P_k
    let r = w[0] / gamma[0];
    out.add_scaled(r, &polys[0]);
    for k in 1..n {
        out.add_scaled(w[k] - r * gamma[k], &polys[k]);
    }
    out
}

/// Reconstruct face values and the centre slope of one zone.
pub fn interp_center(cfg: &WenoConfig, window: &[f64]) -> Result<CenterInterpolation> {
    let p = center_polynomial(cfg, window)?;
    Ok(evaluate(&p))
}

pub(crate) fn interp_center_unchecked(cfg: &WenoConfig, window: &[f64]) -> CenterInterpolation {
    evaluate(&center_polynomial_unchecked(cfg, window))
}

fn evaluate(p: &ModalPolynomial) -> CenterInterpolation {
    CenterInterpolation {
        u_left: p.at_left_face(),
        u_right: p.at_right_face(),
        du_center: p.derivative_at_zero(1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_configs() -> Vec<WenoConfig> {
        vec![
            WenoConfig::new(SchemeOrder::Third),
            WenoConfig::new(SchemeOrder::Third).with_variant(CenterVariant::Ao3Central),
            WenoConfig::new(SchemeOrder::Fifth),
            WenoConfig::new(SchemeOrder::Seventh),
            WenoConfig::new(SchemeOrder::Seventh).with_variant(CenterVariant::Ao753),
            WenoConfig::new(SchemeOrder::Ninth),
        ]
    }

    fn window(cfg: &WenoConfig, f: impl Fn(f64) -> f64) -> Vec<f64> {
        let hw = cfg.order.center_half_width() as i32;
        (-hw..=hw).map(|j| f(j as f64)).collect()
    }

    #[test]
    fn constants_are_reproduced() {
        for cfg in all_configs() {
            let r = interp_center(&cfg, &window(&cfg, |_| 3.7)).unwrap();
            assert!((r.u_left - 3.7).abs() < 1e-14);
            assert!((r.u_right - 3.7).abs() < 1e-14);
            assert!(r.du_center.abs() < 1e-14);
        }
    }

    #[test]
    fn linear_data_is_exact() {
        for cfg in all_configs() {
            let r = interp_center(&cfg, &window(&cfg, |x| 2.0 * x - 1.0)).unwrap();
            assert!((r.u_left + 2.0).abs() < 1e-13, "{cfg:?}");
            assert!(r.u_right.abs() < 1e-13);
            assert!((r.du_center - 2.0).abs() < 1e-13);
        }
    }

    #[test]
    fn quadratic_data_is_reproduced() {
        let q = |x: f64| 0.4 - 1.3 * x + 2.2 * x * x;
        for cfg in all_configs() {
            let r = interp_center(&cfg, &window(&cfg, q)).unwrap();
            assert!((r.u_right - q(0.5)).abs() < 1e-12, "{cfg:?}");
            assert!((r.u_left - q(-0.5)).abs() < 1e-12);
            assert!((r.du_center + 1.3).abs() < 1e-12);
        }
    }

    #[test]
    fn smooth_data_recovers_big_stencil() {
        let f = |x: f64| (1e-3 * x + 0.3).sin();
        for (cfg, id) in [
            (
                WenoConfig::new(SchemeOrder::Third).with_variant(CenterVariant::Ao3Central),
                crate::legendre::StencilId::CenterC3,
            ),
            (WenoConfig::new(SchemeOrder::Fifth), crate::legendre::StencilId::Center5),
            (WenoConfig::new(SchemeOrder::Seventh), crate::legendre::StencilId::Center7),
            (WenoConfig::new(SchemeOrder::Ninth), crate::legendre::StencilId::Center9),
        ] {
            let order = cfg.order;
            let w = window(&cfg, f);
            let skip = (w.len() - id.len()) / 2;
            let big = crate::legendre::fit_stencil(id, &w[skip..w.len() - skip]).unwrap();
            let r = interp_center(&cfg, &w).unwrap();
            assert!((r.u_right - big.at_right_face()).abs() < 1e-14, "{order}");
        }
    }

    #[test]
    fn convex_third_order_blend_mixes_biased_stencils() {
        let f = |x: f64| (0.2 * x).sin();
        let cfg = WenoConfig::new(SchemeOrder::Third);
        let w = window(&cfg, f);
        let central = crate::legendre::fit_stencil(crate::legendre::StencilId::CenterC3, &w[1..4]).unwrap();
        let r = interp_center(&cfg, &w).unwrap();
        let gap = (r.u_right - central.at_right_face()).abs();
        assert!(gap > 1e-6 && gap < 1e-3, "{gap}");
    }

    #[test]
    fn mirrored_window_mirrors_result() {
        let f = |x: f64| (0.7 * x).exp() + if x > 1.0 { 1.0 } else { 0.0 };
        for cfg in all_configs() {
            let w = window(&cfg, f);
            let mut m = w.clone();
            m.reverse();
            let a = interp_center(&cfg, &w).unwrap();
            let b = interp_center(&cfg, &m).unwrap();
            assert!((a.u_right - b.u_left).abs() < 1e-12);
            assert!((a.du_center + b.du_center).abs() < 1e-12);
        }
    }

    #[test]
    fn step_in_fifth_order_window() {
        let cfg = WenoConfig::new(SchemeOrder::Fifth);
        let r = interp_center(&cfg, &[1.0, 1.0, 1.0, 1.0, 0.0]).unwrap();
        assert!(r.u_right >= 0.98 && r.u_right <= 1.0, "{}", r.u_right);
    }

    #[test]
    fn weights_reject_rough_stencil() {
        let w = nonlinear_weights(&[0.075, 0.85, 0.075], &[1e6, 1.0, 1.0], 1e-12, 2, 1).unwrap();
        assert!(w[0] < 1e-10, "{w:?}");
        assert!((w[1] - 0.85 / 0.925).abs() < 1e-9);
        assert!((w[2] - 0.075 / 0.925).abs() < 1e-9);
        assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn weights_equal_linear_on_equal_indicators() {
        let g = [0.85, 0.01125, 0.1275, 0.01125];
        let w = nonlinear_weights(&g, &[0.3; 4], 1e-12, 2, 0).unwrap();
        for (a, b) in w.iter().zip(g) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn window_length_checked() {
        let cfg = WenoConfig::new(SchemeOrder::Ninth);
        assert!(interp_center(&cfg, &[0.0; 7]).is_err());
        let bad = WenoConfig::new(SchemeOrder::Fifth).with_variant(CenterVariant::Ao93);
        assert!(interp_center(&bad, &[0.0; 5]).is_err());
    }

    #[test]
    fn step_does_not_overshoot() {
        for cfg in all_configs() {
            let r = interp_center(&cfg, &window(&cfg, |x| if x > 0.5 { 1.0 } else { 0.0 })).unwrap();
            for v in [r.u_left, r.u_right] {
                assert!(v > -0.05 && v < 1.05, "{cfg:?}: {v}");
            }
        }
    }
}
