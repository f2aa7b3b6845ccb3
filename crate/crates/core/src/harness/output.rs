use std::io::Write;
use std::path::Path;

use super::convergence::ConvergenceRow;
use super::run::RunOutput;
use crate::error::Result;

/// Writes `x[, y]` and the primitive variables of every interior zone.
pub fn write_solution<W: Write>(out: &RunOutput, sink: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    let mut header = vec!["x".to_string()];
    if out.grid.is_2d() {
        header.push("y".into());
    }
    header.extend(out.primitive_names.iter().map(|s| s.to_string()));
    w.write_record(&header)?;
    for (k, (x, y)) in out.coordinates().enumerate() {
        let mut rec = vec![fmt(x)];
        if out.grid.is_2d() {
            rec.push(fmt(y));
        }
        rec.extend(out.primitives[k].iter().map(|v| fmt(*v)));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_solution_file(out: &RunOutput, path: &Path) -> Result<()> {
    write_solution(out, std::fs::File::create(path)?)
}

/// Writes `mesh, l1_error, l1_order, linf_error, linf_order`; orders are
/// empty on the coarsest mesh.
pub fn write_convergence<W: Write>(rows: &[ConvergenceRow], sink: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(["mesh", "l1_error", "l1_order", "linf_error", "linf_order"])?;
    for r in rows {
        let opt = |v: Option<f64>| v.map(|o| format!("{o:.2}")).unwrap_or_default();
        w.write_record([
            r.mesh.to_string(),
            format!("{:.5E}", r.l1_error),
            opt(r.l1_order),
            format!("{:.5E}", r.linf_error),
            opt(r.linf_order),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_convergence_file(rows: &[ConvergenceRow], path: &Path) -> Result<()> {
    write_convergence(rows, std::fs::File::create(path)?)
}

/// Conventional snapshot name `<problem>_<order>_<mesh>.csv`.
pub fn snapshot_name(problem: &str, order: usize, nx: usize, ny: Option<usize>) -> String {
    match ny {
        Some(ny) => format!("{problem}_{order}_{nx}x{ny}.csv"),
        None => format!("{problem}_{order}_{nx}.csv"),
    }
}

fn fmt(v: f64) -> String {
    format!("{v:.12e}")
}
