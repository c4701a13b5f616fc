//! Writes CSV files and gnuplot scripts for the temperature, k0 and B0 sweeps.
//!
//! cargo run --release --example figure_sweeps -- [output-dir]
//! cd <output-dir> && gnuplot -p fig1_k10.gp

use std::fs;
use std::path::PathBuf;

use qdot_eur::dot_model::DotParams;
use qdot_eur::sweep::{first_ordering_violation, plot_script, run_sweep, to_csv, SweepParameter, SweepSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    fs::create_dir_all(&dir)?;

    let mut jobs = Vec::new();
    for k0 in [10.0, 5.0, 3.0] {
        let base = DotParams::new(k0, 1.0, 1.0, 0.0)?;
        jobs.push((format!("fig1_k{k0}"), SweepSpec::new(SweepParameter::Temperature, 0.0, 5.0, 101, base)?));
    }
    for t in [0.0, 1.0, 2.0] {
        let base = DotParams::new(0.0, 1.0, 1.0, t)?;
        jobs.push((format!("fig2_T{t}"), SweepSpec::new(SweepParameter::K0, 0.0, 20.0, 101, base)?));
    }
    for t in [0.05, 1.0, 2.0] {
        let base = DotParams::new(10.0, 1.0, 0.0, t)?;
        jobs.push((format!("fig3_T{t}"), SweepSpec::new(SweepParameter::B0, 0.0, 5.0, 101, base)?));
    }

    for (name, spec) in jobs {
        let rows = run_sweep(&spec)?;
        let csv = format!("{name}.csv");
        fs::write(dir.join(&csv), to_csv(&rows)?)?;
        fs::write(dir.join(format!("{name}.gp")), plot_script(&rows, spec.param(), &csv)?)?;
        let ordered = first_ordering_violation(&rows).is_none();
        println!("{:>12}: {} rows, bounds ordered: {ordered}", name, rows.len());
    }
    println!("wrote {}", dir.display());
    Ok(())
}
