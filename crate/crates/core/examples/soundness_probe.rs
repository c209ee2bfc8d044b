//! Majorant soundness: the Prop-1 table of a short-R_I run must dominate the
//! true class norms computed by a long-R_I (all-explicit) run.
use birkstab::models::henon_heiles;
use birkstab::normalform::{Frequencies, ResonanceMode};
use birkstab::rigor::{iv_sqrt_down, iv_sqrt_up, Interval};

fn main() {
    let s5 = Interval::new(iv_sqrt_down(5.0), iv_sqrt_up(5.0));
    let w2 = s5.sub(&Interval::ONE).div_int(2).neg();
    let omega = Frequencies::new(vec![Interval::ONE, w2]);
    let steps = 4u32;
    let mut short = henon_heiles(&omega, steps, 30, ResonanceMode::NonResonant);
    let mut long = henon_heiles(&omega, 30, 40, ResonanceMode::NonResonant);
    for _ in 0..steps {
        short.normalization_step().unwrap();
        long.normalization_step().unwrap();
    }
    println!("class | table(log) | true norm(log) | ok");
    for s in (steps + 1)..=30 {
        let table = short
            .log_f
            .get(&s)
            .map(|l| l.logval)
            .unwrap_or(-1e4);
        let truth = long
            .f_explicit
            .get(&s)
            .map(|p| p.norm().hi().ln())
            .unwrap_or(f64::NEG_INFINITY);
        let ok = table >= truth;
        println!("{s:4} | {table:10.4} | {truth:12.4} | {}", if ok { "ok" } else { "VIOLATION" });
    }
    // Also compare a few explicit norms of the two runs (must be identical).
    for s in (steps + 1)..=steps + 3 {
        if let (Some(a), Some(b)) = (short.f_explicit.get(&s), long.f_explicit.get(&s)) {
            println!("explicit class {s}: short {:.6e} long {:.6e}", a.norm().hi(), b.norm().hi());
        }
    }
}
