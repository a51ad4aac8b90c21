//! Error measurement on a grid, table reproduction, log-rate fits and CSV
//! output.

use std::fmt::Write as _;
use std::str::FromStr;

use log::warn;

use crate::bounds::{c_const, lower_bound_opt_with_c, n_min, upper_bound_opt, MillsEpsilon};
use crate::error::{domain, invalid_certificate, Error, Result};
use crate::format::{fixed, sci};
use crate::reconstruct::{optimal_width, reconstruct_gauss_ext, GaussWidth};
use crate::signals::{f0_eval_ext, f0_samples, Bandwidth};

/// Interior grid size matching `t = j/100, j = 1..99`.
pub const DEFAULT_GRID_POINTS: usize = 99;

/// One table row: lower bound, measured grid error, upper bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorRow {
    pub n: usize,
    pub lower: f64,
    pub measured: f64,
    pub upper: f64,
}

impl ErrorRow {
    pub fn get(&self, column: Column) -> f64 {
        match column {
            Column::Lower => self.lower,
            Column::Measured => self.measured,
            Column::Upper => self.upper,
        }
    }

    /// `lower <= measured <= upper`.
    pub fn is_sandwiched(&self) -> bool {
        self.lower <= self.measured && self.measured <= self.upper
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    Lower,
    Measured,
    Upper,
}

impl FromStr for Column {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lower" => Ok(Column::Lower),
            "measured" => Ok(Column::Measured),
            "upper" => Ok(Column::Upper),
            other => Err(Error::Parse(format!(
                "unknown column `{other}` (expected lower, measured or upper)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub delta: Bandwidth,
    pub eps: MillsEpsilon,
    pub n_list: Vec<usize>,
    pub grid_points: usize,
}

impl ExperimentConfig {
    pub fn new(
        delta: Bandwidth,
        eps: MillsEpsilon,
        n_list: Vec<usize>,
        grid_points: usize,
    ) -> Result<Self> {
        if grid_points < 1 {
            return domain("grid_points must be >= 1");
        }
        if n_list.windows(2).any(|w| w[0] >= w[1]) {
            return domain(format!("n_list must be strictly ascending, got {n_list:?}"));
        }
        if n_list.iter().any(|&n| n < 2) {
            return domain(format!("every n must be >= 2, got {n_list:?}"));
        }
        Ok(Self {
            delta,
            eps,
            n_list,
            grid_points,
        })
    }

    /// δ = π/4, ε = 1/7, n = 7, 9, …, 25 on the 99-point grid.
    pub fn table1() -> Self {
        Self::new(
            Bandwidth::new(std::f64::consts::FRAC_PI_4).expect("π/4 is a valid bandwidth"),
            MillsEpsilon::new(1.0 / 7.0).expect("1/7 is a valid epsilon"),
            (7..=25).step_by(2).collect(),
            DEFAULT_GRID_POINTS,
        )
        .expect("table configuration is valid")
    }
}

/// `max_{j=1..grid_points} |f0(t_j) − (S_{n,r} f0)(t_j)|` with
/// `t_j = j/(grid_points+1)`; the difference is formed in double-double.
pub fn measure_error(delta: Bandwidth, n: usize, r: GaussWidth, grid_points: usize) -> Result<f64> {
    if grid_points < 1 {
        return domain("grid_points must be >= 1");
    }
    let samples = f0_samples(delta, n)?;
    let denom = (grid_points + 1) as f64;
    Ok((1..=grid_points)
        .map(|j| {
            let t = j as f64 / denom;
            (f0_eval_ext(delta, t) - reconstruct_gauss_ext(&samples, r, t))
                .abs()
                .to_f64()
        })
        .fold(0.0, f64::max))
}

/// The certified constant used for the whole lower column: the minimum of
/// `C_{r,δ,ε}` over the rows at their optimal widths.
///
/// `C` grows with `r`, so this is the value at the smallest `n`; using one
/// uniform constant keeps the column a single closed form in `n`.
pub fn certified_c_floor(config: &ExperimentConfig) -> Result<f64> {
    let mut floor = f64::INFINITY;
    for &n in &config.n_list {
        let c = c_const(config.delta, config.eps, optimal_width(config.delta, n)?);
        if !(c > 0.0) {
            return invalid_certificate(format!("C = {c} is not positive at n = {n}"));
        }
        floor = floor.min(c);
    }
    if floor.is_finite() {
        Ok(floor)
    } else {
        domain("empty n_list")
    }
}

pub fn repro_table(config: &ExperimentConfig) -> Result<Vec<ErrorRow>> {
    if config.n_list.is_empty() {
        return Ok(Vec::new());
    }
    let c = certified_c_floor(config)?;
    let need = n_min(config.delta, config.eps, c)?;
    if let Some(&bad) = config.n_list.iter().find(|&&n| n < need) {
        return invalid_certificate(format!("n = {bad} below the admissible minimum {need}"));
    }
    config
        .n_list
        .iter()
        .map(|&n| {
            let r = optimal_width(config.delta, n)?;
            Ok(ErrorRow {
                n,
                lower: lower_bound_opt_with_c(config.delta, n, c)?,
                measured: measure_error(config.delta, n, r, config.grid_points)?,
                upper: upper_bound_opt(config.delta, n)?,
            })
        })
        .collect()
}

/// Least-squares slope of `ln(column)` against `n`.
pub fn rate_fit(rows: &[ErrorRow], column: Column) -> Result<f64> {
    if rows.len() < 3 {
        return Err(Error::Degenerate(format!(
            "rate fit needs at least 3 rows, got {}",
            rows.len()
        )));
    }
    let mut points = Vec::with_capacity(rows.len());
    for row in rows {
        let v = row.get(column);
        if !(v > 0.0) || !v.is_finite() {
            return Err(Error::Degenerate(format!(
                "non-positive value {v} at n = {} in column {column:?}",
                row.n
            )));
        }
        points.push((row.n as f64, v.ln()));
    }
    let k = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / k;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let syy: f64 = points.iter().map(|p| (p.1 - mean_y).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::Degenerate("all rows share the same n".into()));
    }
    if syy == 0.0 {
        return Err(Error::Degenerate(format!("column {column:?} is constant")));
    }
    Ok(sxy / sxx)
}

/// `n,lower,measured,upper` CSV. Plain values use 5 significant digits;
/// with `log_scale` the natural logs are written with 6 decimals.
///
/// A negative lower bound carries no information and is displayed as 0.
pub fn emit_csv(rows: &[ErrorRow], log_scale: bool) -> String {
    let mut out = String::from("n,lower,measured,upper\n");
    for row in rows {
        let lower = if row.lower < 0.0 {
            warn!(
                "n = {}: lower bound {} is negative, shown as 0",
                row.n, row.lower
            );
            0.0
        } else {
            row.lower
        };
        let cell = |v: f64| {
            if log_scale {
                fixed(v.ln(), 6)
            } else {
                sci(v, 5)
            }
        };
        let _ = writeln!(
            out,
            "{},{},{},{}",
            row.n,
            cell(lower),
            cell(row.measured),
            cell(row.upper)
        );
    }
    out
}

/// Reads rows written by [`emit_csv`]; `log_scale` undoes the logarithm.
pub fn parse_csv(text: &str, log_scale: bool) -> Result<Vec<ErrorRow>> {
    let mut rows = Vec::new();
    let mut lines = text.lines().enumerate().filter(|(_, l)| {
        let l = l.trim();
        !l.is_empty() && !l.starts_with('#')
    });
    match lines.next() {
        Some((_, header)) if header.trim() == "n,lower,measured,upper" => {}
        Some((i, header)) => {
            return Err(Error::Parse(format!(
                "line {}: expected header `n,lower,measured,upper`, got `{header}`",
                i + 1
            )))
        }
        None => return Ok(rows),
    }
    for (i, line) in lines {
        let bad = || Error::Parse(format!("line {}: malformed row `{line}`", i + 1));
        let fields: Vec<&str> = line.trim().split(',').collect();
        if fields.len() != 4 {
            return Err(bad());
        }
        let n: usize = fields[0].trim().parse().map_err(|_| bad())?;
        let mut vals = [0.0; 3];
        for (slot, f) in vals.iter_mut().zip(&fields[1..]) {
            let v: f64 = f.trim().parse().map_err(|_| bad())?;
            *slot = if log_scale { v.exp() } else { v };
        }
        rows.push(ErrorRow {
            n,
            lower: vals[0],
            measured: vals[1],
            upper: vals[2],
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    fn pi4() -> Bandwidth {
        Bandwidth::new(FRAC_PI_4).unwrap()
    }

    fn row(n: usize, lower: f64, measured: f64, upper: f64) -> ErrorRow {
        ErrorRow {
            n,
            lower,
            measured,
            upper,
        }
    }

    /// The reference error table, five significant digits.
    fn printed_table() -> Vec<ErrorRow> {
        vec![
            row(7, 7.5816e-07, 1.6125e-05, 1.3637e-04),
            row(9, 5.6056e-08, 1.0218e-06, 1.0754e-05),
            row(11, 4.4118e-09, 7.1272e-08, 8.8497e-07),
            row(13, 3.5746e-10, 5.2752e-09, 7.4813e-08),
            row(15, 2.9493e-11, 4.0037e-10, 6.4423e-09),
            row(17, 2.4661e-12, 3.1085e-11, 5.6227e-10),
            row(19, 2.0841e-13, 2.4961e-12, 4.9577e-11),
            row(21, 1.7768e-14, 2.0497e-13, 4.4065e-12),
            row(23, 1.5261e-15, 1.6963e-14, 3.9420e-13),
            row(25, 1.3193e-16, 1.4843e-15, 3.5451e-14),
        ]
    }

    #[test]
    fn config_validation() {
        let eps = MillsEpsilon::new(0.1).unwrap();
        assert!(ExperimentConfig::new(pi4(), eps, vec![9, 7], 99).is_err());
        assert!(ExperimentConfig::new(pi4(), eps, vec![7, 7], 99).is_err());
        assert!(ExperimentConfig::new(pi4(), eps, vec![7], 0).is_err());
        assert!(ExperimentConfig::new(pi4(), eps, vec![1, 7], 99).is_err());
    }

    #[test]
    fn measured_examples() {
        let at = |n| measure_error(pi4(), n, optimal_width(pi4(), n).unwrap(), 99).unwrap();
        let e7 = at(7);
        assert!(((e7 - 1.6125e-5) / 1.6125e-5).abs() < 5e-3);
        let e13 = at(13);
        assert!(((e13 - 5.2752e-9) / 5.2752e-9).abs() < 5e-3);
    }

    #[test]
    fn midpoint_only_is_a_subset() {
        let r = optimal_width(pi4(), 9).unwrap();
        let mid = measure_error(pi4(), 9, r, 1).unwrap();
        let full = measure_error(pi4(), 9, r, 99).unwrap();
        assert!(mid <= full);
        assert!(measure_error(pi4(), 9, r, 0).is_err());
    }

    #[test]
    fn single_row_matches_full_table() {
        let full = repro_table(&ExperimentConfig::table1()).unwrap();
        let cfg = ExperimentConfig::new(pi4(), MillsEpsilon::new(1.0 / 7.0).unwrap(), vec![7], 99)
            .unwrap();
        let one = repro_table(&cfg).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0], full[0]);
    }

    #[test]
    fn inadmissible_n_is_rejected() {
        let cfg =
            ExperimentConfig::new(pi4(), MillsEpsilon::new(1.0 / 7.0).unwrap(), vec![5, 7], 99)
                .unwrap();
        assert!(matches!(
            repro_table(&cfg),
            Err(Error::CertificateInvalid(_))
        ));
    }

    #[test]
    fn rate_fit_on_printed_columns() {
        let rows: Vec<_> = printed_table().into_iter().filter(|r| r.n >= 15).collect();
        let target = -3.0 * std::f64::consts::PI / 8.0;
        for col in [Column::Measured, Column::Upper, Column::Lower] {
            let s = rate_fit(&rows, col).unwrap();
            assert!(((s - target) / target).abs() < 0.1, "{col:?}: {s}");
        }
        // endpoint slope of the printed measured column
        let endpoint = (1.4843e-15f64 / 4.0037e-10).ln() / 10.0;
        assert!((endpoint + 1.2506).abs() < 1e-4);
    }

    #[test]
    fn rate_fit_degenerate() {
        let flat = vec![
            row(7, 1e-3, 1e-3, 1e-3),
            row(9, 1e-3, 1e-3, 1e-3),
            row(11, 1e-3, 1e-3, 1e-3),
        ];
        assert!(matches!(
            rate_fit(&flat, Column::Measured),
            Err(Error::Degenerate(_))
        ));
        assert!(rate_fit(&flat[..2], Column::Measured).is_err());
        let neg = vec![
            row(7, -1.0, 1.0, 1.0),
            row(9, 1.0, 1.0, 1.0),
            row(11, 1.0, 1.0, 1.0),
        ];
        assert!(rate_fit(&neg, Column::Lower).is_err());
    }

    #[test]
    fn csv_first_row() {
        let csv = emit_csv(&printed_table(), false);
        assert_eq!(csv.lines().next().unwrap(), "n,lower,measured,upper");
        assert_eq!(
            csv.lines().nth(1).unwrap(),
            "7,7.5816e-07,1.6125e-05,1.3637e-04"
        );
        assert_eq!(emit_csv(&[], false), "n,lower,measured,upper\n");
    }

    #[test]
    fn csv_log_row() {
        let csv = emit_csv(&printed_table()[..1], true);
        // ln(7.5816e-7), ln(1.6125e-5), ln(1.3637e-4)
        assert_eq!(
            csv.lines().nth(1).unwrap(),
            "7,-14.092371,-11.035140,-8.900139"
        );
    }

    #[test]
    fn csv_clamps_negative_lower() {
        let csv = emit_csv(&[row(3, -2e-3, 1e-3, 1e-2)], false);
        assert_eq!(
            csv.lines().nth(1).unwrap(),
            "3,0.0000e+00,1.0000e-03,1.0000e-02"
        );
    }

    #[test]
    fn csv_parse_round_trip() {
        let rows = printed_table();
        assert_eq!(parse_csv(&emit_csv(&rows, false), false).unwrap(), rows);
        let back = parse_csv(&emit_csv(&rows, true), true).unwrap();
        for (a, b) in back.iter().zip(&rows) {
            assert!(((a.measured - b.measured) / b.measured).abs() < 1e-5);
        }
        assert!(parse_csv("n,lower\n", false).is_err());
        assert!(parse_csv("n,lower,measured,upper\n7,1,2\n", false).is_err());
    }
}
