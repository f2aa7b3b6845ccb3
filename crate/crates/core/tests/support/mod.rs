// Helpers shared by the integration test targets. Not every target uses all
// of them.
#![allow(dead_code)]

pub mod closed_forms;

/// Block average of `fine` onto `fine.len() / factor` zones.
pub fn downsample(fine: &[f64], factor: usize) -> Vec<f64> {
    assert!(factor > 0 && fine.len().is_multiple_of(factor), "{} zones do not divide by {factor}", fine.len());
    fine.chunks(factor).map(|c| c.iter().sum::<f64>() / factor as f64).collect()
}

/// 2D block average; `fine` is x fastest with `nx * ny` entries.
pub fn downsample_2d(fine: &[f64], nx: usize, ny: usize, factor: usize) -> Vec<f64> {
    let (cx, cy) = (nx / factor, ny / factor);
    let mut out = vec![0.0; cx * cy];
    for j in 0..ny {
        for i in 0..nx {
            out[(j / factor) * cx + i / factor] += fine[j * nx + i];
        }
    }
    let a = (factor * factor) as f64;
    out.iter_mut().for_each(|v| *v /= a);
    out
}

fn jumps(v: &[f64]) -> Vec<f64> {
    v.windows(2).map(|w| (w[1] - w[0]).abs()).collect()
}

/// Faces (index `i` sits between zones `i` and `i+1`) where the per-zone jump
/// is the largest within `radius` and at least `threshold` of the largest
/// jump in the profile.
pub fn fronts(v: &[f64], threshold: f64, radius: usize) -> Vec<usize> {
    let d = jumps(v);
    let top = d.iter().cloned().fold(0.0, f64::max);
    if top == 0.0 {
        return Vec::new();
    }
    (0..d.len())
        .filter(|&i| {
            let lo = i.saturating_sub(radius);
            let hi = (i + radius).min(d.len() - 1);
            d[i] >= threshold * top && (lo..=hi).all(|k| d[k] < d[i] || (d[k] == d[i] && k >= i))
        })
        .collect()
}

/// One reference front and where the run put it.
#[derive(Debug, Clone, Copy)]
pub struct FrontMatch {
    pub reference: usize,
    pub found: usize,
    pub offset: usize,
    /// Largest run jump near the front relative to the reference jump.
    pub strength: f64,
}

/// Locates every front of `reference` in `run` (same grid) by the steepest
/// run jump within `search` faces.
pub fn match_fronts(run: &[f64], reference: &[f64], threshold: f64, search: usize) -> Vec<FrontMatch> {
    let dr = jumps(run);
    let dref = jumps(reference);
    fronts(reference, threshold, search)
        .into_iter()
        .map(|f| {
            let lo = f.saturating_sub(search);
            let hi = (f + search).min(dr.len() - 1);
            let found = (lo..=hi)
                .max_by(|&a, &b| dr[a].total_cmp(&dr[b]).then(b.abs_diff(f).cmp(&a.abs_diff(f))))
                .expect("non-empty window");
            FrontMatch {
                reference: f,
                found,
                offset: found.abs_diff(f),
                strength: dr[found] / dref[f],
            }
        })
        .collect()
}

pub fn min_max(v: &[f64]) -> (f64, f64) {
    v.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &x| (a.min(x), b.max(x)))
}

