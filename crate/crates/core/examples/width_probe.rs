//! Interval-width growth along the explicit evolution.
use birkstab::models::henon_heiles;
use birkstab::normalform::{Frequencies, ResonanceMode};
use birkstab::rigor::{iv_sqrt_down, iv_sqrt_up, Interval};

fn main() {
    let s5 = Interval::new(iv_sqrt_down(5.0), iv_sqrt_up(5.0));
    let w2 = s5.sub(&Interval::ONE).div_int(2).neg();
    let omega = Frequencies::new(vec![Interval::ONE, w2]);
    let mut state = henon_heiles(&omega, 40, 100, ResonanceMode::NonResonant);
    for r in 1..=38u32 {
        state.normalization_step().unwrap();
        if r % 5 == 0 || r >= 35 {
            // widths of the first remaining class norm
            if let Some((&s, poly)) = state.f_explicit.iter().next() {
                let n = poly.norm();
                println!(
                    "step {r:2}: class {s}: norm=[{:.6e}, {:.6e}] rel width {:.3e}; terms {}",
                    n.lo(),
                    n.hi(),
                    (n.hi() - n.lo()) / n.hi(),
                    poly.len()
                );
            }
        }
    }
}
