use std::fs;
use std::path::Path;

use anyhow::{bail, Context};
use rayon::prelude::*;

use gkpcb_core::{
    apply_cubic_t, ec_qubit_average, fidelity_closed_form, logical_state, qubit_density,
    teleport_t, ClosedFormInputs, GatePhasePolynomial, Grid, LogicalLabel, SqueezingSpec,
    WaveFunction, SQRT_PI,
};

use crate::config::{FigureId, GridShape, SweepConfig};

/// Momentum studies of U_T states need the dual lattice to cover the
/// sheared support: the outermost comb site n_env is displaced to roughly
/// (3 sqrt(pi)/2) n_env^2, plus the peak bandwidth ~ 10/delta_x.
fn momentum_samples_per_rootpi(s: SqueezingSpec, base: usize) -> anyhow::Result<usize> {
    let n_env = (2.96 / s.delta_p()).ceil() + 1.0;
    let p_need = 1.5 * SQRT_PI * n_env * n_env + 10.0 / s.delta_x();
    let dx_max = std::f64::consts::PI / p_need;
    let mut m = base.max(16);
    while SQRT_PI / m as f64 > dx_max {
        m *= 2;
        if m > 1 << 17 {
            bail!("momentum grid would exceed 2^17 samples per sqrt(pi)");
        }
    }
    Ok(m)
}

fn momentum_grid(s: SqueezingSpec, shape: GridShape) -> anyhow::Result<Grid> {
    let m = momentum_samples_per_rootpi(s, shape.samples_per_rootpi)?;
    GridShape { halfwidth_units: shape.halfwidth_units, samples_per_rootpi: m }.build()
}

fn write_file(dir: &Path, name: &str, contents: &str) -> anyhow::Result<()> {
    let path = dir.join(name);
    fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn spec_for(db_x: f64, ratio: f64) -> anyhow::Result<SqueezingSpec> {
    let dx = gkpcb_core::db_to_delta(db_x);
    Ok(SqueezingSpec::new(dx, ratio * dx)?)
}

pub fn run(cfg: &SweepConfig) -> anyhow::Result<()> {
    fs::create_dir_all(&cfg.out_dir)
        .with_context(|| format!("creating {}", cfg.out_dir.display()))?;
    match cfg.figure {
        FigureId::Fig1a => fig1a(cfg)?,
        FigureId::Fig1b => fig1b(cfg)?,
        FigureId::Fig1c => fig1c(cfg)?,
        FigureId::Fig2a => fig2a(cfg)?,
        FigureId::Fig2b => fig2b(cfg)?,
        FigureId::Fig3b => fig3b(cfg)?,
        FigureId::Custom => custom(cfg)?,
    }
    let name = format!("{}_manifest.json", figure_stem(cfg.figure));
    write_file(&cfg.out_dir, &name, &cfg.manifest_json())?;
    Ok(())
}

fn figure_stem(id: FigureId) -> &'static str {
    match id {
        FigureId::Fig1a => "fig1a",
        FigureId::Fig1b => "fig1b",
        FigureId::Fig1c => "fig1c",
        FigureId::Fig2a => "fig2a",
        FigureId::Fig2b => "fig2b",
        FigureId::Fig3b => "fig3b",
        FigureId::Custom => "custom",
    }
}

/// Position density of |+_L> at the first sweep point, the gate phase
/// profile mod 2 pi, and its values at the comb sites.
fn fig1a(cfg: &SweepConfig) -> anyhow::Result<()> {
    let grid = cfg.grid.build()?;
    let s = spec_for(cfg.db_x.start, cfg.ratios[0])?;
    let plus = logical_state(LogicalLabel::Plus, s, &grid)?;
    let density = plus.density();
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut csv = String::from("x,density,phase_mod_2pi\n");
    for (j, v) in density.values().iter().enumerate() {
        let x = grid.point(j);
        let phase = GatePhasePolynomial::T_GATE.eval(x).rem_euclid(two_pi);
        csv.push_str(&format!("{x:.16e},{v:.16e},{phase:.16e}\n"));
    }
    write_file(&cfg.out_dir, "fig1a_density_phase.csv", &csv)?;

    let units = grid.lattice().expect("commensurate").halfwidth_units as i64;
    let mut markers = String::from("n,x,phase_mod_2pi\n");
    for n in (1 - units)..units {
        let x = n as f64 * SQRT_PI;
        let phase = GatePhasePolynomial::T_GATE.eval(x).rem_euclid(two_pi);
        markers.push_str(&format!("{n},{x:.16e},{phase:.16e}\n"));
    }
    write_file(&cfg.out_dir, "fig1a_markers.csv", &markers)?;
    Ok(())
}

/// Momentum densities of U_T |+_L> and of the directly constructed target.
fn fig1b(cfg: &SweepConfig) -> anyhow::Result<()> {
    let s = spec_for(cfg.db_x.start, cfg.ratios[0])?;
    let grid = momentum_grid(s, cfg.grid)?;
    let sheared = apply_cubic_t(&logical_state(LogicalLabel::Plus, s, &grid)?)?;
    let target = logical_state(LogicalLabel::Magic, s, &grid)?;
    let d_ut = sheared.to_momentum()?.density();
    let d_t = target.to_momentum()?.density();
    let mut csv = String::from("p,ut,t\n");
    for j in 0..d_ut.values().len() {
        csv.push_str(&format!(
            "{:.16e},{:.16e},{:.16e}\n",
            d_ut.grid().point(j),
            d_ut.values()[j],
            d_t.values()[j]
        ));
    }
    write_file(&cfg.out_dir, "fig1b_momentum_density.csv", &csv)?;
    Ok(())
}

/// Folded momentum densities (mod 2 sqrt(pi)) across the squeezing sweep.
/// All sweep points share the same halfwidth, hence the same folded lattice.
fn fig1c(cfg: &SweepConfig) -> anyhow::Result<()> {
    let dbs = cfg.db_x.values();
    let rows: Vec<(f64, Vec<f64>, Vec<f64>, Grid)> = dbs
        .par_iter()
        .map(|&db| -> anyhow::Result<_> {
            let s = spec_for(db, cfg.ratios[0])?;
            let grid = momentum_grid(s, cfg.grid)?;
            let sheared = apply_cubic_t(&logical_state(LogicalLabel::Plus, s, &grid)?)?;
            let target = logical_state(LogicalLabel::Magic, s, &grid)?;
            let f_ut = sheared.to_momentum()?.density().fold(2.0 * SQRT_PI)?;
            let f_t = target.to_momentum()?.density().fold(2.0 * SQRT_PI)?;
            let g = f_ut.grid().clone();
            Ok((db, f_ut.values().to_vec(), f_t.values().to_vec(), g))
        })
        .collect::<anyhow::Result<_>>()?;
    let mut csv = String::from("db,p,ut,t\n");
    for (db, ut, t, g) in &rows {
        for j in 0..ut.len() {
            csv.push_str(&format!(
                "{db:.16e},{:.16e},{:.16e},{:.16e}\n",
                g.point(j),
                ut[j],
                t[j]
            ));
        }
    }
    write_file(&cfg.out_dir, "fig1c_folded_momentum.csv", &csv)?;
    Ok(())
}

/// Bloch trajectory of error-corrected U_T |+_L> over the squeezing sweep.
fn fig2a(cfg: &SweepConfig) -> anyhow::Result<()> {
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
            let s = spec_for(db, ratio)?;
            let psi = apply_cubic_t(&logical_state(LogicalLabel::Plus, s, &grid)?)?;
            let b = ec_qubit_average(&psi, cfg.k_max)?.bloch_vector();
            Ok(format!("{db:.16e},{ratio:.16e},{}\n", b.to_csv_row()))
        })
        .collect::<anyhow::Result<_>>()?;
    let mut csv = String::from("db,ratio,bx,by,bz\n");
    rows.iter().for_each(|r| csv.push_str(r));
    write_file(&cfg.out_dir, "fig2a_bloch_trajectory.csv", &csv)?;
    Ok(())
}

/// Error-corrected fidelity curves: cubic gate (ut), ideal gate (t),
/// identity (id), and optionally the teleportation gadget (teleport).
fn fig2b(cfg: &SweepConfig) -> anyhow::Result<()> {
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
            let s = spec_for(db, ratio)?;
            let plus = logical_state(LogicalLabel::Plus, s, &grid)?;
            let mut out = String::new();
            let curves: [(&str, WaveFunction); 3] = [
                ("ut", apply_cubic_t(&plus)?),
                ("t", logical_state(LogicalLabel::Magic, s, &grid)?),
                ("id", plus),
            ];
            for (name, state) in curves {
                let f = ec_qubit_average(&state, cfg.k_max)?.fidelity_to_magic();
                out.push_str(&format!("{db:.16e},{ratio:.16e},{name},{f:.16e}\n"));
            }
            if cfg.include_teleport {
                let tm_grid = cfg.two_mode_grid.build()?;
                let psi_in = logical_state(LogicalLabel::Plus, s, &tm_grid)?;
                let f = teleport_t(&psi_in, s, cfg.k_max)?.fidelity_to_magic();
                out.push_str(&format!("{db:.16e},{ratio:.16e},teleport,{f:.16e}\n"));
            }
            Ok(out)
        })
        .collect::<anyhow::Result<_>>()?;
    let mut csv = String::from("db,ratio,curve,fidelity\n");
    rows.iter().for_each(|r| csv.push_str(r));
    write_file(&cfg.out_dir, "fig2b_fidelity.csv", &csv)?;
    Ok(())
}

/// Binning-decoder fidelity of U_T |+_L> with the closed-form overlay.
fn fig3b(cfg: &SweepConfig) -> anyhow::Result<()> {
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
            let s = spec_for(db, ratio)?;
            let psi = apply_cubic_t(&logical_state(LogicalLabel::Plus, s, &grid)?)?;
            let f = qubit_density(&psi)?.fidelity_to_magic();
            let closed =
                fidelity_closed_form(&ClosedFormInputs::new(s.delta_x(), s.delta_p())?);
            Ok(format!("{db:.16e},{ratio:.16e},{f:.16e},{closed:.16e}\n"))
        })
        .collect::<anyhow::Result<_>>()?;
    let mut csv = String::from("db,ratio,f_numeric,f_closed\n");
    rows.iter().for_each(|r| csv.push_str(r));
    write_file(&cfg.out_dir, "fig3b_binning_fidelity.csv", &csv)?;
    Ok(())
}

/// Generic sweep: both decoders and the closed form on one table.
fn custom(cfg: &SweepConfig) -> anyhow::Result<()> {
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
            let s = spec_for(db, ratio)?;
            let psi = apply_cubic_t(&logical_state(LogicalLabel::Plus, s, &grid)?)?;
            let f_bin = qubit_density(&psi)?.fidelity_to_magic();
            let f_ec = ec_qubit_average(&psi, cfg.k_max)?.fidelity_to_magic();
            let closed =
                fidelity_closed_form(&ClosedFormInputs::new(s.delta_x(), s.delta_p())?);
            Ok(format!(
                "{db:.16e},{ratio:.16e},{f_bin:.16e},{f_ec:.16e},{closed:.16e}\n"
            ))
        })
        .collect::<anyhow::Result<_>>()?;
    let mut csv = String::from("db,ratio,f_binning,f_ec,f_closed\n");
    rows.iter().for_each(|r| csv.push_str(r));
    write_file(&cfg.out_dir, "custom_sweep.csv", &csv)?;
    Ok(())
}
