use crate::error::{Error, Result};

/// Zone-averaged L1 and maximum norms of `a - b`.
pub fn error_norms(a: &[f64], b: &[f64]) -> Result<(f64, f64)> {
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::usage(format!(
            "error norms need equal non-empty fields, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let mut l1 = 0.0;
    let mut linf: f64 = 0.0;
    for (x, y) in a.iter().zip(b) {
        let d = (x - y).abs();
        l1 += d;
        linf = linf.max(d);
    }
    Ok((l1 / a.len() as f64, linf))
}

/// Observed order between two meshes with `n_coarse` and `n_fine` zones per side.
pub fn observed_order(e_coarse: f64, e_fine: f64, n_coarse: usize, n_fine: usize) -> f64 {
    (e_coarse / e_fine).ln() / (n_fine as f64 / n_coarse as f64).ln()
}
