use std::fs;

use anyhow::Context;
use rayon::prelude::*;

use gkpcb_core::{
    apply_cubic_t, fidelity_closed_form, logical_state, qubit_density, ClosedFormInputs,
    LogicalLabel, SqueezingSpec,
};

use crate::config::SweepConfig;

/// Per-point comparison of the binning decoder against the closed form,
/// with validity flags rather than hard failures outside the derivation
/// regime.
pub fn run_oracle(cfg: &SweepConfig) -> anyhow::Result<()> {
    fs::create_dir_all(&cfg.out_dir)
        .with_context(|| format!("creating {}", cfg.out_dir.display()))?;
    let grid = cfg.grid.build()?;
    let points: Vec<(f64, f64)> = cfg
        .db_x
        .values()
        .into_iter()
        .flat_map(|db| cfg.ratios.iter().map(move |r| (db, *r)))
        .collect();
    let rows: Vec<String> = points
        .par_iter()
        .map(|&(db, ratio)| -> anyhow::Result<String> {
            let dx = gkpcb_core::db_to_delta(db);
            let s = SqueezingSpec::new(dx, ratio * dx)?;
            let inputs = ClosedFormInputs::new(s.delta_x(), s.delta_p())?;
            let psi = apply_cubic_t(&logical_state(LogicalLabel::Plus, s, &grid)?)?;
            let f_numeric = qubit_density(&psi)?.fidelity_to_magic();
            let f_closed = fidelity_closed_form(&inputs);
            Ok(format!(
                "{db:.16e},{:.16e},{:.16e},{f_numeric:.16e},{f_closed:.16e},{:.16e},{},{}\n",
                s.delta_x(),
                s.delta_p(),
                (f_numeric - f_closed).abs(),
                inputs.small_delta_regime(),
                inputs.phase_regime(),
            ))
        })
        .collect::<anyhow::Result<_>>()?;

    let mut csv =
        String::from("db,delta_x,delta_p,f_numeric,f_closed,abs_delta,small_delta_regime,phase_regime\n");
    rows.iter().for_each(|r| csv.push_str(r));
    let path = cfg.out_dir.join("oracle_report.csv");
    fs::write(&path, &csv).with_context(|| format!("writing {}", path.display()))?;
    fs::write(cfg.out_dir.join("oracle_manifest.json"), cfg.manifest_json())?;

    println!("{:>6} {:>10} {:>10} {:>10} {:>10} {:>10} flags", "db", "delta_x", "delta_p", "numeric", "closed", "delta");
    for r in &rows {
        let f: Vec<&str> = r.trim().split(',').collect();
        let short = |s: &str| s.parse::<f64>().map(|v| format!("{v:.5}")).unwrap_or_default();
        let mut flags = String::new();
        if f[6] == "false" {
            flags.push_str(" coarse-delta");
        }
        if f[7] == "false" {
            flags.push_str(" phase-regime-violated");
        }
        println!(
            "{:>6} {:>10} {:>10} {:>10} {:>10} {:>10}{}",
            short(f[0]),
            short(f[1]),
            short(f[2]),
            short(f[3]),
            short(f[4]),
            short(f[5]),
            flags
        );
    }
    println!("wrote {}", path.display());
    Ok(())
}
