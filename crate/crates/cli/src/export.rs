//! Plot-ready CSV exports. Every writer emits a header row and one line
//! per sample; float formatting uses the shortest round-trip form, so a
//! fixed configuration produces bit-identical files. A zero count yields
//! a header-only file.

use std::io::{self, Write};

use beltrami_core::dynamics::{integrate_free_motion, KinState};
use beltrami_core::geometry::ym_density;
use beltrami_core::geometry::{bi_density, chart_margin, metric_b, GeometryConfig, Point4};
use beltrami_core::modes::{
    exact_massless, exact_massless_derivative, solve_mode_ode, unruh_amplitude, wkb_iterate,
    wkb_w0_cosh_form, wkb_w0_state, CoeffKind, ModeParams,
};
use thiserror::Error;

use crate::config::RunConfig;

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("unknown quantity `{0}` (expected mode, wkb, amplitude, trajectory, density, metric)")]
    UnknownQuantity(String),
    #[error("io: {0}")]
    Io(#[from] io::Error),
    #[error("core: {0}")]
    Core(String),
}

pub const QUANTITIES: &[&str] = &[
    "mode",
    "wkb",
    "amplitude",
    "trajectory",
    "density",
    "metric",
];

/// Write the selected quantity as CSV. `count` controls the number of
/// samples where meaningful; `0` writes the header only.
pub fn write_csv(
    cfg: &RunConfig,
    quantity: &str,
    count: usize,
    out: &mut dyn Write,
) -> Result<(), ExportError> {
    match quantity {
        "mode" => mode_csv(cfg, count, out),
        "wkb" => wkb_csv(cfg, count, out),
        "amplitude" => amplitude_csv(count, out),
        "trajectory" => trajectory_csv(cfg, count, out),
        "density" => density_csv(count, out),
        "metric" => metric_csv(cfg, count, out),
        other => Err(ExportError::UnknownQuantity(other.into())),
    }
}

fn mode_csv(cfg: &RunConfig, count: usize, out: &mut dyn Write) -> Result<(), ExportError> {
    writeln!(out, "xtilde,re_chi,im_chi,abs_chi,w")?;
    if count == 0 {
        return Ok(());
    }
    let kk = 2.0;
    let p = ModeParams::massless(kk);
    let chi0 =
        exact_massless(kk, true, cfg.grid_min).map_err(|e| ExportError::Core(e.to_string()))?;
    let dchi0 = exact_massless_derivative(kk, true, cfg.grid_min)
        .map_err(|e| ExportError::Core(e.to_string()))?;
    let sol = solve_mode_ode(
        &p,
        chi0,
        dchi0,
        cfg.grid_min,
        cfg.grid_max,
        count.max(500),
        CoeffKind::Standard,
    )
    .map_err(|e| ExportError::Core(e.to_string()))?;
    for (i, &x) in sol.grid.iter().enumerate() {
        let w = wkb_w0_cosh_form(&p, x);
        writeln!(
            out,
            "{},{},{},{},{}",
            x,
            sol.chi[i].re,
            sol.chi[i].im,
            sol.chi[i].abs(),
            w
        )?;
    }
    Ok(())
}

fn wkb_csv(cfg: &RunConfig, count: usize, out: &mut dyn Write) -> Result<(), ExportError> {
    const ORDER: usize = 2;
    let mut header = String::from("xtilde");
    for k in 0..=ORDER {
        header.push_str(&format!(",w{k}"));
    }
    writeln!(out, "{header}")?;
    if count == 0 {
        return Ok(());
    }
    let p = ModeParams::new(1.0, 0.0, 10.0);
    let nodes = count.max(17 + 4 * ORDER);
    let mut states = vec![wkb_w0_state(&p, cfg.grid_min, cfg.grid_max, nodes)
        .map_err(|e| ExportError::Core(e.to_string()))?];
    for _ in 0..ORDER {
        let next = wkb_iterate(states.last().unwrap(), &p)
            .map_err(|e| ExportError::Core(e.to_string()))?;
        states.push(next);
    }
    // report on the final (most-trimmed) grid
    let last = states.last().unwrap();
    for (i, &x) in last.grid.iter().enumerate() {
        let mut row = format!("{x}");
        for st in &states {
            let offset = (st.grid.len() - last.grid.len()) / 2;
            row.push_str(&format!(",{}", st.w[i + offset]));
        }
        writeln!(out, "{row}")?;
    }
    Ok(())
}

fn amplitude_csv(count: usize, out: &mut dyn Write) -> Result<(), ExportError> {
    writeln!(out, "delta_e,k_dot_k,amplitude")?;
    if count == 0 {
        return Ok(());
    }
    for &kk in &[2.0, 5.0, 10.0] {
        for i in 0..count {
            let de = 10.0 * i as f64 / (count.max(2) - 1) as f64;
            let a = unruh_amplitude(de, kk, true).map_err(|e| ExportError::Core(e.to_string()))?;
            writeln!(out, "{de},{kk},{a}")?;
        }
    }
    Ok(())
}

fn trajectory_csv(cfg: &RunConfig, count: usize, out: &mut dyn Write) -> Result<(), ExportError> {
    writeln!(out, "t,x1,x2,x3,v1,v2,v3,straightness_error")?;
    if count == 0 {
        return Ok(());
    }
    let g = cfg.geometry();
    let s0 = KinState::new(0.0, [0.1, 0.0, 0.0], [0.2, 0.1, 0.0]);
    let step = 0.5 / count as f64;
    let traj =
        integrate_free_motion(&s0, 0.5, step, &g).map_err(|e| ExportError::Core(e.to_string()))?;
    for (k, &t) in traj.times.iter().enumerate() {
        let mut line_err: f64 = 0.0;
        for i in 0..3 {
            let straight = traj.positions[0][i] + traj.velocities[0][i] * (t - traj.times[0]);
            line_err = line_err.max((traj.positions[k][i] - straight).abs());
        }
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            t,
            traj.positions[k][0],
            traj.positions[k][1],
            traj.positions[k][2],
            traj.velocities[k][0],
            traj.velocities[k][1],
            traj.velocities[k][2],
            line_err
        )?;
    }
    Ok(())
}

fn density_csv(count: usize, out: &mut dyn Write) -> Result<(), ExportError> {
    writeln!(out, "x0,x1,x2,x3,ym_density,bi_density")?;
    if count == 0 {
        return Ok(());
    }
    let (da, db, dc) = (1.0, 0.5, -0.3);
    let unit = GeometryConfig::unit();
    for i in 0..count {
        for j in 0..count {
            let t = -0.4 + 0.8 * i as f64 / (count.max(2) - 1) as f64;
            let x1 = -0.4 + 0.8 * j as f64 / (count.max(2) - 1) as f64;
            let p = Point4::new(t, x1, 0.05, -0.05);
            if chart_margin(&p, &unit) <= 0.05 {
                continue;
            }
            let ym = ym_density(&p, da, db, dc).map_err(|e| ExportError::Core(e.to_string()))?;
            let bi = bi_density(&p, da, db, dc).map_err(|e| ExportError::Core(e.to_string()))?;
            writeln!(out, "{t},{x1},0.05,-0.05,{ym},{bi}")?;
        }
    }
    Ok(())
}

fn metric_csv(cfg: &RunConfig, count: usize, out: &mut dyn Write) -> Result<(), ExportError> {
    writeln!(out, "x0,x1,x2,x3,component,value")?;
    if count == 0 {
        return Ok(());
    }
    let g = cfg.geometry();
    for i in 0..count {
        let t = -0.4 + 0.8 * i as f64 / (count.max(2) - 1) as f64;
        let p = Point4::new(t, 0.1, -0.2, 0.05);
        if chart_margin(&p, &g) <= 0.0 {
            continue;
        }
        let b = metric_b(&p, &g)
            .map_err(|e| ExportError::Core(e.to_string()))?
            .0;
        for mu in 0..4 {
            for nu in mu..4 {
                writeln!(out, "{t},0.1,-0.2,0.05,B{mu}{nu},{}", b[mu][nu])?;
            }
        }
    }
    Ok(())
}
