//! `beltrami` — verification and exploration toolkit for the two-parameter
//! constant-curvature geometry on the projective chart.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::io::Write;
use std::process::ExitCode;

use beltrami_cli::config::RunConfig;
use beltrami_cli::export;
use beltrami_cli::report::Status;
use beltrami_cli::verify::{run_verify, SUITES};
use beltrami_core::dynamics::{integrate_free_motion, KinState};
use beltrami_core::geometry::Point4;
use beltrami_core::lie::{invariant_space, Convention, Species, SubalgebraSpec};
use beltrami_core::linalg;
use beltrami_core::modes::{
    exact_massless, exact_massless_derivative, fourier_closed_form, fourier_oracle, solve_mode_ode,
    unruh_amplitude, wkb_iterate, wkb_w0_cosh_form, wkb_w0_state, CoeffKind, ModeParams,
};
use beltrami_core::symmetry::{flt_apply, sample_group_element, verify_b_invariance};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "beltrami",
    version,
    about = "Two-parameter constant-curvature geometry: verification suites, geodesics, field modes, detector amplitudes, and exact invariant tensors"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the verification suites and print one line per check.
    Verify {
        /// Restrict to one suite: geometry, dynamics, symmetry, lie, modes.
        #[arg(long)]
        suite: Option<String>,
        /// Flat key-value config file.
        #[arg(long)]
        config: Option<String>,
        /// Emit the full JSON report on stdout (deterministic per config).
        #[arg(long)]
        json: bool,
    },
    /// Integrate a free worldline and print CSV with a straightness column.
    Geodesic {
        #[arg(long, default_value_t = 0.0)]
        t0: f64,
        /// Initial position, comma separated: "x1,x2,x3".
        #[arg(long, default_value = "0.1,0,0")]
        x0: String,
        /// Initial velocity, comma separated: "v1,v2,v3".
        #[arg(long, default_value = "0.2,0.1,0")]
        v: String,
        #[arg(long, default_value_t = 0.5)]
        t_end: f64,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
        #[arg(long)]
        config: Option<String>,
    },
    /// Integrate the mode equation and print CSV (xtilde, chi, |chi|, w).
    Modes {
        #[arg(long, default_value_t = 0.0)]
        m2: f64,
        #[arg(long, default_value_t = 0.0)]
        xi: f64,
        /// Spatial momentum squared k·k.
        #[arg(long, default_value_t = 2.0)]
        kk: f64,
        #[arg(long, default_value_t = 2000)]
        steps: usize,
        #[arg(long)]
        config: Option<String>,
    },
    /// Iterate the WKB frequency and print CSV of all orders.
    Wkb {
        #[arg(long, default_value_t = 2)]
        order: usize,
        #[arg(long, default_value_t = 1.0)]
        m2: f64,
        #[arg(long, default_value_t = 0.0)]
        xi: f64,
        #[arg(long, default_value_t = 10.0)]
        kk: f64,
        #[arg(long)]
        config: Option<String>,
    },
    /// Closed-form transition amplitude with its quadrature cross-check.
    Unruh {
        /// Detector energy gap ΔE.
        #[arg(long)]
        de: f64,
        #[arg(long)]
        kk: f64,
        /// Phase branch: "plus" (physical) or "minus".
        #[arg(long, default_value = "plus")]
        sign: String,
    },
    /// Exact invariant-tensor basis of a subalgebra, as JSON.
    Invariants {
        /// Subalgebra name: TypeI+, TypeII-, H1+..H8, K1+..K5, o(1,4), example1.
        #[arg(long)]
        spec: String,
        /// Tensor species: vector, symmetric, antisymmetric.
        #[arg(long)]
        species: String,
        /// Invariance convention: covariant or contravariant.
        #[arg(long, default_value = "contravariant")]
        convention: String,
    },
    /// Apply a seeded sampled isometry to a chart point; JSON out.
    Transform {
        #[arg(long)]
        seed: u64,
        /// Chart point "x0,x1,x2,x3".
        #[arg(long, default_value = "0.1,0.2,-0.1,0.05")]
        x: String,
        #[arg(long, default_value_t = 0.5)]
        scale: f64,
        #[arg(long)]
        config: Option<String>,
    },
    /// Write a plot-ready CSV for a named quantity.
    Export {
        /// One of: mode, wkb, amplitude, trajectory, density, metric.
        #[arg(long)]
        quantity: String,
        #[arg(long)]
        out: String,
        /// Sample count (0 writes the header only).
        #[arg(long, default_value_t = 64)]
        count: usize,
        #[arg(long)]
        config: Option<String>,
    },
}

fn load_config(path: &Option<String>) -> Result<RunConfig, String> {
    match path {
        None => Ok(RunConfig::default()),
        Some(p) => RunConfig::load(p).map_err(|e| e.to_string()),
    }
}

fn parse_triple(text: &str, what: &str) -> Result<[f64; 3], String> {
    let parts: Vec<f64> = text
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("cannot parse {what} `{text}`: {e}"))?;
    if parts.len() != 3 {
        return Err(format!(
            "{what} needs exactly 3 components, got {}",
            parts.len()
        ));
    }
    Ok([parts[0], parts[1], parts[2]])
}

fn parse_quad(text: &str, what: &str) -> Result<[f64; 4], String> {
    let parts: Vec<f64> = text
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("cannot parse {what} `{text}`: {e}"))?;
    if parts.len() != 4 {
        return Err(format!(
            "{what} needs exactly 4 components, got {}",
            parts.len()
        ));
    }
    Ok([parts[0], parts[1], parts[2], parts[3]])
}

fn main() -> ExitCode {
    match dispatch() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Verify {
            suite,
            config,
            json,
        } => {
            let cfg = load_config(&config)?;
            cfg.validate().map_err(|e| e.to_string())?;
            let (report, timings) =
                run_verify(&cfg, suite.as_deref()).map_err(|e| e.to_string())?;
            if json {
                println!("{}", report.render_json());
            } else {
                for c in &report.checks {
                    let tag = match c.status {
                        Status::Pass => "pass   ",
                        Status::Fail => "FAIL   ",
                        Status::Flagged => "flagged",
                    };
                    println!(
                        "[{tag}] {:<42} residual {:>12.3e}  tol {:>9.1e}  {}",
                        c.id, c.residual, c.tolerance, c.anchor
                    );
                }
                println!(
                    "summary: {} passed, {} failed, {} flagged (suites: {})",
                    report.summary.passed,
                    report.summary.failed,
                    report.summary.flagged,
                    suite.unwrap_or_else(|| SUITES.join("+")),
                );
            }
            for (name, ms) in &timings.0 {
                eprintln!("timing: {name} {ms:.1} ms");
            }
            Ok(if report.all_green() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Cmd::Geodesic {
            t0,
            x0,
            v,
            t_end,
            step,
            config,
        } => {
            let cfg = load_config(&config)?;
            let s0 = KinState::new(t0, parse_triple(&x0, "--x0")?, parse_triple(&v, "--v")?);
            let traj = integrate_free_motion(&s0, t_end, step, &cfg.geometry())
                .map_err(|e| e.to_string())?;
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            writeln!(out, "t,x1,x2,x3,v1,v2,v3,straightness_error").unwrap();
            for (k, &t) in traj.times.iter().enumerate() {
                let mut err: f64 = 0.0;
                for i in 0..3 {
                    let straight =
                        traj.positions[0][i] + traj.velocities[0][i] * (t - traj.times[0]);
                    err = err.max((traj.positions[k][i] - straight).abs());
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
                    err
                )
                .unwrap();
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Modes {
            m2,
            xi,
            kk,
            steps,
            config,
        } => {
            let cfg = load_config(&config)?;
            let p = ModeParams::new(m2, xi, kk);
            // raise the step count for stiff parameters: the local frequency
            // grows like cosh(x), and the residual gate needs w·h small
            let w_edge = wkb_w0_cosh_form(&p, cfg.grid_min)
                .max(wkb_w0_cosh_form(&p, cfg.grid_max))
                .max(1.0);
            let stiff_steps =
                ((cfg.grid_max - cfg.grid_min) * libm::pow(w_edge, 1.5) / 0.03) as usize;
            let steps = steps.max(stiff_steps);
            let (chi0, dchi0) = if p.mu() == 0.0 && kk > 1.0 {
                (
                    exact_massless(kk, true, cfg.grid_min).map_err(|e| e.to_string())?,
                    exact_massless_derivative(kk, true, cfg.grid_min).map_err(|e| e.to_string())?,
                )
            } else {
                // first-order WKB seed at the left edge
                let x = cfg.grid_min;
                let w = wkb_w0_cosh_form(&p, x);
                if !(w > 0.0) {
                    return Err("left grid edge sits beyond a turning point".into());
                }
                let env = 1.0 / libm::cosh(x) / libm::sqrt(w);
                let wp = p.mu() * libm::sinh(2.0 * x) / (2.0 * w);
                let chi = beltrami_core::cx::Cx::real(env);
                let dlog = -libm::tanh(x) - wp / (2.0 * w);
                let dchi = chi * beltrami_core::cx::Cx::new(dlog, w);
                (chi, dchi)
            };
            let sol = solve_mode_ode(
                &p,
                chi0,
                dchi0,
                cfg.grid_min,
                cfg.grid_max,
                steps,
                CoeffKind::Standard,
            )
            .map_err(|e| e.to_string())?;
            println!("xtilde,re_chi,im_chi,abs_chi,w");
            for (i, &x) in sol.grid.iter().enumerate() {
                let w = wkb_w0_cosh_form(&p, x);
                println!(
                    "{},{},{},{},{}",
                    x,
                    sol.chi[i].re,
                    sol.chi[i].im,
                    sol.chi[i].abs(),
                    w
                );
            }
            eprintln!("fd residual: {:.3e}", sol.max_residual);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Wkb {
            order,
            m2,
            xi,
            kk,
            config,
        } => {
            let cfg = load_config(&config)?;
            let p = ModeParams::new(m2, xi, kk);
            let mut states = vec![wkb_w0_state(&p, cfg.grid_min, cfg.grid_max, cfg.grid_nodes)
                .map_err(|e| e.to_string())?];
            for _ in 0..order {
                let next = wkb_iterate(states.last().unwrap(), &p).map_err(|e| e.to_string())?;
                states.push(next);
            }
            let mut header = String::from("xtilde");
            for k in 0..=order {
                header.push_str(&format!(",w{k}"));
            }
            println!("{header}");
            let last = states.last().unwrap();
            for (i, &x) in last.grid.iter().enumerate() {
                let mut row = format!("{x}");
                for st in &states {
                    let offset = (st.grid.len() - last.grid.len()) / 2;
                    row.push_str(&format!(",{}", st.w[i + offset]));
                }
                println!("{row}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Unruh { de, kk, sign } => {
            let plus = match sign.as_str() {
                "plus" => true,
                "minus" => false,
                other => return Err(format!("--sign must be plus or minus, got `{other}`")),
            };
            let amp = unruh_amplitude(de, kk, plus).map_err(|e| e.to_string())?;
            let kappa = libm::sqrt(kk - 1.0);
            let omega = if plus { de + kappa } else { de - kappa };
            let oracle = fourier_oracle(omega, 40.0, 1e-12);
            let closed = fourier_closed_form(omega);
            let z0 = fourier_oracle(0.0, 40.0, 1e-12);
            let payload = serde_json::json!({
                "delta_e": de,
                "k_dot_k": kk,
                "sign": sign,
                "omega": omega,
                // detected-particle energy sqrt(dE^2 + 1); metadata only,
                // it does not enter the amplitude
                "e_p": libm::sqrt(de * de + 1.0),
                "amplitude": amp,
                "fourier_closed_form": closed,
                "fourier_oracle": { "re": oracle.re, "im": oracle.im },
                "oracle_residual": (oracle.re - closed).abs(),
                "omega_zero_value": z0.re,
                "omega_zero_note": "the zero-frequency envelope integral is pi/2; a quoted value of pi is flagged by the verification suite",
            });
            println!("{}", serde_json::to_string_pretty(&payload).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Invariants {
            spec,
            species,
            convention,
        } => {
            let sp = SubalgebraSpec::by_name(&spec).map_err(|e| e.to_string())?;
            let species_enum = match species.as_str() {
                "vector" => Species::Vector,
                "symmetric" => Species::Symmetric2,
                "antisymmetric" => Species::Antisymmetric2,
                other => {
                    return Err(format!(
                        "--species must be vector, symmetric, or antisymmetric, got `{other}`"
                    ))
                }
            };
            let conv = match convention.as_str() {
                "covariant" => Convention::Covariant,
                "contravariant" => Convention::Contravariant,
                other => {
                    return Err(format!(
                        "--convention must be covariant or contravariant, got `{other}`"
                    ))
                }
            };
            let inv = invariant_space(&sp, species_enum, conv);
            let render = |m: &beltrami_core::exact::QMat| -> Vec<Vec<String>> {
                (0..m.rows)
                    .map(|i| (0..m.cols).map(|j| m[(i, j)].render()).collect())
                    .collect()
            };
            let payload = serde_json::json!({
                "spec": spec,
                "generators": sp.generators.iter().map(|g| g.name.clone()).collect::<Vec<_>>(),
                "species": species,
                "convention": convention,
                "dimension": inv.dimension,
                "basis": inv.basis.iter().map(render).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&payload).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Transform {
            seed,
            x,
            scale,
            config,
        } => {
            let cfg = load_config(&config)?;
            let g = cfg.geometry();
            let el = sample_group_element(seed, scale, g.branch).map_err(|e| e.to_string())?;
            let point = Point4(parse_quad(&x, "--x")?);
            let image = flt_apply(&el, &point, &g).map_err(|e| e.to_string())?;
            let resid = verify_b_invariance(&el, &point, &g)
                .map(|r| linalg::inf_norm(&r))
                .map_err(|e| e.to_string())?;
            let payload = serde_json::json!({
                "seed": seed,
                "scale": scale,
                "x": point.0,
                "x_prime": image.0,
                "invariance_residual": resid,
                "defining_residual": el.defining_residual(),
            });
            println!("{}", serde_json::to_string_pretty(&payload).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Export {
            quantity,
            out,
            count,
            config,
        } => {
            let cfg = load_config(&config)?;
            let file =
                std::fs::File::create(&out).map_err(|e| format!("cannot create `{out}`: {e}"))?;
            let mut writer = std::io::BufWriter::new(file);
            export::write_csv(&cfg, &quantity, count, &mut writer).map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
