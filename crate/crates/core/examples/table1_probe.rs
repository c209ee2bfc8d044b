//! Probe: Table-1 tail rows at desk scale.
use birkstab::majorant::{scan_grid, TailMode};
use birkstab::models::henon_heiles;
use birkstab::normalform::{Frequencies, ResonanceMode};
use birkstab::rigor::{iv_sqrt_down, iv_sqrt_up, Interval};
use std::time::Instant;

fn main() {
    let s5 = Interval::new(iv_sqrt_down(5.0), iv_sqrt_up(5.0));
    let w2 = s5.sub(&Interval::ONE).div_int(2).neg();
    let omega = Frequencies::new(vec![Interval::ONE, w2]);
    let r_i: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(40);
    let r_ii = 1500;
    let t0 = Instant::now();
    let mut state = henon_heiles(&omega, r_i, r_ii, ResonanceMode::NonResonant);
    if std::env::args().nth(2).as_deref() == Some("crude") {
        state.deriv_mode = birkstab::normalform::DerivWeightMode::PoissonNorm;
    }
    let rhos = [3.55e-2, 4.44e-2, 5.55e-2, 6.94e-2, 8.67e-2];
    let results = scan_grid(&mut state, &rhos, TailMode::Truncated, TailMode::Truncated);
    println!("elapsed: {:?}", t0.elapsed());
    let expected_ropt = [38u32, 30, 26, 26, 26];
    let expected_logt = [16.8f64, 14.3, 11.9, 9.30, 6.65];
    for (i, r) in results.iter().enumerate() {
        match r {
            Ok(res) => {
                let log10t = birkstab::majorant::log10_of(res.log_t);
                let log10r = birkstab::majorant::log10_of(res.log_remainder);
                let log10i = birkstab::majorant::log10_of(res.log_action_rate);
                println!(
                    "rho={:.3e} r_opt={} (want {}) a_r={:.3e} log10R={:.3} log10Idot={:.3} log10T={:.3} (want {:.2}) rho0={:.3e} div={} horizon={}",
                    res.rho, res.r_opt, expected_ropt[i], res.a_r, log10r, log10i, log10t, expected_logt[i], res.rho0, res.tail_divergent, res.hit_horizon
                );
            }
            Err(e) => println!("rho={:.3e} error: {e}", rhos[i]),
        }
    }
    println!("steps done: {}", state.steps_done);
}
