//! Diagnostic: majorant table and remainder decomposition at desk scale.
use birkstab::majorant::TailMode;
use birkstab::models::henon_heiles;
use birkstab::normalform::{Frequencies, ResonanceMode};
use birkstab::rigor::{iv_sqrt_down, iv_sqrt_up, Interval};

fn main() {
    let s5 = Interval::new(iv_sqrt_down(5.0), iv_sqrt_up(5.0));
    let w2 = s5.sub(&Interval::ONE).div_int(2).neg();
    let omega = Frequencies::new(vec![Interval::ONE, w2]);
    let mut state = henon_heiles(&omega, 40, 1500, ResonanceMode::NonResonant);
    let ln10 = std::f64::consts::LN_10;
    for r in 1..=39u32 {
        if state.steps_done < state.r_i {
            state.normalization_step().unwrap();
        } else {
            state.estimate_step().unwrap();
        }
        if r >= 20 {
            let d = match state.chi_d_history.last().unwrap() {
                (_, birkstab::normalform::DerivWeight::Explicit(iv)) => iv.hi().ln(),
                (_, birkstab::normalform::DerivWeight::Estimated { log_g }) => *log_g,
            };
            println!(
                "r={r:2} log_a={:.4} a={:.3e} logD={:.3} logF41={:.2} logF42={:.2} logF60={:.2} logF100={:.2} logF500={:.2} logF1500={:.2}",
                state.log_a,
                state.log_a.exp(),
                d,
                state.log_f.get(&41).map(|l| l.logval).unwrap_or(-1e4),
                state.log_f.get(&42).map(|l| l.logval).unwrap_or(-1e4),
                state.log_f.get(&60).map(|l| l.logval).unwrap_or(-1e4),
                state.log_f.get(&100).map(|l| l.logval).unwrap_or(-1e4),
                state.log_f.get(&500).map(|l| l.logval).unwrap_or(-1e4),
                state.log_f.get(&1500).map(|l| l.logval).unwrap_or(-1e4),
            );
        }
        for (rho, label) in [(3.55e-2f64, "row1"), (8.67e-2f64, "row5")] {
            if (r == 38 && label == "row1") || (r == 26 && label == "row5") {
                let b = state.class_bounds();
                let lr = rho.ln();
                let mut expl = f64::NEG_INFINITY;
                let mut expl_sum = 0.0f64;
                for (&s, lb) in &b.log_f_explicit {
                    let term = lb.logval + f64::from(s + 2) * lr;
                    expl = expl.max(term);
                    expl_sum += term.exp();
                }
                let mut maj = f64::NEG_INFINITY;
                let mut maj_argmax = 0;
                let mut maj_sum = 0.0f64;
                for (&s, lb) in &b.log_f_table {
                    if lb.logval <= -9.9e3 { continue; }
                    let term = lb.logval + f64::from(s + 2) * lr;
                    if term > maj { maj = term; maj_argmax = s; }
                    maj_sum += term.exp();
                }
                println!(
                    "{label} r={r} rho={rho:.3e}: explicit log10 sum={:.3} (max term {:.3}), majorant log10 sum={:.3} (max at class {} = {:.3})",
                    expl_sum.ln() / ln10, expl / ln10, maj_sum.ln() / ln10, maj_argmax, maj / ln10
                );
            }
        }
    }
    let b = state.class_bounds();
    let parts = birkstab::majorant::remainder_parts(&b, 3.55e-2);
    println!("final r=39 truncated remainder at rho=3.55e-2: log10 = {:.3}", parts.value(TailMode::Truncated).0.logval / ln10);
}
