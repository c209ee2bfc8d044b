//! TSV report rows in the shape of the published tables.

use birkstab::majorant::{log10_of, StabilityResult};

pub const NONRES_HEADER: &str = "rho0\trho\tr_opt\ta_r\tlog10_R\tlog10_Idot\tlog10_T";
pub const RES_HEADER: &str = "rho0sq\trhostar2sq\trhosq\tT";

/// Scientific notation with `digits` significant digits.
pub fn sci(x: f64, digits: usize) -> String {
    format!("{:.*e}", digits.saturating_sub(1), x)
}

pub struct NonResonantRow {
    pub result: StabilityResult,
}

impl NonResonantRow {
    pub fn tsv(&self, digits: usize) -> String {
        let r = &self.result;
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            sci(r.rho0, digits),
            sci(r.rho, digits),
            r.r_opt,
            sci(r.a_r, digits),
            sci(log10_of(r.log_remainder), digits),
            sci(log10_of(r.log_action_rate), digits),
            sci(log10_of(r.log_t), digits),
        )
    }

    pub fn tsv_full(&self) -> String {
        let r = &self.result;
        format!(
            "{:.17e}\t{:.17e}\t{}\t{:.17e}\t{:.17e}\t{:.17e}\t{:.17e}\t{}\t{}",
            r.rho0,
            r.rho,
            r.r_opt,
            r.a_r,
            r.log_remainder.logval,
            r.log_action_rate.logval,
            r.log_t.logval,
            r.tail_divergent,
            r.hit_horizon,
        )
    }
}

pub struct ResonantRow {
    pub rho0_sq: f64,
    pub rho_star_sq: f64,
    pub rho_sq: f64,
    pub t_lower: f64,
    pub log_t: f64,
}

impl ResonantRow {
    pub fn tsv(&self, digits: usize) -> String {
        format!(
            "{}\t{}\t{}\t{}",
            sci(self.rho0_sq, digits),
            sci(self.rho_star_sq, digits),
            sci(self.rho_sq, digits),
            sci(self.t_lower, digits),
        )
    }

    pub fn tsv_full(&self) -> String {
        format!(
            "{:.17e}\t{:.17e}\t{:.17e}\t{:.17e}\t{:.17e}",
            self.rho0_sq, self.rho_star_sq, self.rho_sq, self.t_lower, self.log_t
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sci_formatting() {
        assert_eq!(sci(0.0008165, 3), "8.16e-4");
        assert_eq!(sci(636000000.0, 3), "6.36e8");
    }
}
