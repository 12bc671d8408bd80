//! CSV persistence. Every file starts with a header row; floats carry 17
//! significant digits so values round-trip exactly; lines end with LF.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use seird_core::analysis::{ComparisonReport, ProbeSeries};
use seird_core::grid::SpatialGrid;
use seird_core::macroscale::MacroState;

/// 17 significant digits: enough to reproduce any f64 bit pattern.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Long-format snapshots: one row per (time, node).
pub fn write_snapshots(
    path: &Path,
    snapshots: &[MacroState],
    grid: &SpatialGrid,
) -> std::io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "t,x,S,E,I,R,D")?;
    for snap in snapshots {
        for j in 0..snap.n_nodes() {
            writeln!(
                w,
                "{},{},{},{},{},{},{}",
                fmt_f64(snap.t),
                fmt_f64(grid.node(j)),
                fmt_f64(snap.s[j]),
                fmt_f64(snap.e[j]),
                fmt_f64(snap.i[j]),
                fmt_f64(snap.r[j]),
                fmt_f64(snap.dead[j]),
            )?;
        }
    }
    w.flush()
}

/// Kinetic-versus-macro distances, one row per (eps, time, species).
pub fn write_comparison(path: &Path, reports: &[ComparisonReport]) -> std::io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "eps,t,species,l1,linf")?;
    for report in reports {
        for species in &report.species {
            writeln!(
                w,
                "{},{},{},{},{}",
                fmt_f64(report.eps),
                fmt_f64(report.time),
                species.compartment.label(),
                fmt_f64(species.l1),
                fmt_f64(species.linf),
            )?;
        }
    }
    w.flush()
}

/// Time series at a probe location for one transmission rate.
pub fn write_probe_series(path: &Path, series: &ProbeSeries) -> std::io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "beta,t,S,E,I,R,D")?;
    for (k, &t) in series.times.iter().enumerate() {
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            fmt_f64(series.beta),
            fmt_f64(t),
            fmt_f64(series.values[0][k]),
            fmt_f64(series.values[1][k]),
            fmt_f64(series.values[2][k]),
            fmt_f64(series.values[3][k]),
            fmt_f64(series.values[4][k]),
        )?;
    }
    w.flush()
}
