//! Ground truth at scale: all-explicit run to R_I = 50, norms at step 38.
use birkstab::models::henon_heiles;
use birkstab::normalform::{Frequencies, ResonanceMode};
use birkstab::rigor::{iv_sqrt_down, iv_sqrt_up, Interval};
use std::time::Instant;

fn main() {
    let s5 = Interval::new(iv_sqrt_down(5.0), iv_sqrt_up(5.0));
    let w2 = s5.sub(&Interval::ONE).div_int(2).neg();
    let omega = Frequencies::new(vec![Interval::ONE, w2]);
    let mut state = henon_heiles(&omega, 50, 1500, ResonanceMode::NonResonant);
    let t0 = Instant::now();
    for r in 1..=38u32 {
        state.normalization_step().unwrap();
        if r % 10 == 0 {
            println!("step {r} done ({:?})", t0.elapsed());
        }
    }
    println!("a38 = {:.4e} (log {:.4})", state.log_a.exp(), state.log_a);
    let ln10 = std::f64::consts::LN_10;
    for &rho in &[3.55e-2f64, 8.67e-2] {
        let lr = rho.ln();
        println!("rho = {rho:.3e}: per-class explicit terms at step 38:");
        let mut sum = 0.0f64;
        for (&s, poly) in &state.f_explicit {
            let ln_norm = poly.norm().hi().ln();
            let term = ln_norm + f64::from(s + 2) * lr;
            sum += term.exp();
            println!("  class {s}: log|f| = {:.3}, log10 term = {:.3}", ln_norm, term / ln10);
        }
        println!("  explicit sum log10 = {:.3}", sum.ln() / ln10);
    }
}
