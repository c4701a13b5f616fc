//! Point evaluation and one-dimensional parameter sweeps of the dot model,
//! with CSV and gnuplot output.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;

use crate::correlations::{correlation_report, CorrelationReport};
use crate::dot_model::{thermal_state, DotParams};
use crate::error::{Error, Result};
use crate::uncertainty::{uncertainty_report, UncertaintyReport};

/// Exact CSV header.
pub const CSV_HEADER: &str = "param,concurrence,discord,mutual_information,lhs,berta_bound,adabi_bound,delta";

/// Slack for the `berta <= adabi <= lhs` ordering check.
pub const ORDERING_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointReport {
    pub params: DotParams,
    pub correlations: CorrelationReport,
    pub uncertainty: UncertaintyReport,
}

pub fn evaluate_point(params: &DotParams) -> Result<PointReport> {
    let state = thermal_state(params)?;
    Ok(PointReport {
        params: *params,
        correlations: correlation_report(&state),
        uncertainty: uncertainty_report(&state)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParameter {
    Temperature,
    K0,
    B0,
}

impl SweepParameter {
    pub fn name(self) -> &'static str {
        match self {
            SweepParameter::Temperature => "temperature",
            SweepParameter::K0 => "k0",
            SweepParameter::B0 => "b0",
        }
    }

    fn apply(self, base: DotParams, value: f64) -> Result<DotParams> {
        match self {
            SweepParameter::Temperature => base.with_temperature(value),
            SweepParameter::K0 => base.with_k0(value),
            SweepParameter::B0 => base.with_b0(value),
        }
    }

    fn axis_label(self) -> &'static str {
        match self {
            SweepParameter::Temperature => "T",
            SweepParameter::K0 => "k_0",
            SweepParameter::B0 => "B_0",
        }
    }
}

impl fmt::Display for SweepParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepParameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "temperature" | "t" | "T" => Ok(SweepParameter::Temperature),
            "k0" => Ok(SweepParameter::K0),
            "b0" => Ok(SweepParameter::B0),
            other => Err(Error::InvalidSweep(format!("unknown parameter {other:?}"))),
        }
    }
}

/// A uniform one-dimensional grid over one model parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    param: SweepParameter,
    start: f64,
    stop: f64,
    steps: usize,
    base: DotParams,
}

impl SweepSpec {
    /// `base` supplies the fixed parameters; its value for `param` is ignored.
    pub fn new(param: SweepParameter, start: f64, stop: f64, steps: usize, base: DotParams) -> Result<Self> {
        if !start.is_finite() || !stop.is_finite() {
            return Err(Error::InvalidSweep("non-finite range".into()));
        }
        if start > stop {
            return Err(Error::InvalidSweep(format!("start {start} > stop {stop}")));
        }
        if steps < 2 {
            return Err(Error::InvalidSweep(format!("steps must be >= 2, got {steps}")));
        }
        if param == SweepParameter::Temperature && start < 0.0 {
            return Err(Error::InvalidSweep(format!("negative temperature {start}")));
        }
        Ok(SweepSpec {
            param,
            start,
            stop,
            steps,
            base,
        })
    }

    pub fn param(&self) -> SweepParameter {
        self.param
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    /// `start + i (stop - start)/(steps - 1)`.
    pub fn grid(&self) -> Vec<f64> {
        let h = (self.stop - self.start) / (self.steps - 1) as f64;
        (0..self.steps).map(|i| self.start + i as f64 * h).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub param: f64,
    pub concurrence: f64,
    pub discord: f64,
    pub mutual_information: f64,
    pub lhs: f64,
    pub berta_bound: f64,
    pub adabi_bound: f64,
    pub delta: f64,
}

impl SweepRow {
    pub fn from_report(param: f64, report: &PointReport) -> Self {
        SweepRow {
            param,
            concurrence: report.correlations.concurrence,
            discord: report.correlations.discord,
            mutual_information: report.correlations.mutual_information,
            lhs: report.uncertainty.lhs,
            berta_bound: report.uncertainty.berta_bound,
            adabi_bound: report.uncertainty.adabi_bound,
            delta: report.uncertainty.delta,
        }
    }

    fn values(&self) -> [f64; 8] {
        [
            self.param,
            self.concurrence,
            self.discord,
            self.mutual_information,
            self.lhs,
            self.berta_bound,
            self.adabi_bound,
            self.delta,
        ]
    }

    /// `berta <= adabi <= lhs` within [`ORDERING_SLACK`].
    pub fn bounds_ordered(&self) -> bool {
        self.berta_bound <= self.adabi_bound + ORDERING_SLACK && self.adabi_bound <= self.lhs + ORDERING_SLACK
    }
}

/// Rows in ascending grid order. Points run in parallel; the first failing
/// grid point aborts the sweep.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.grid()
        .into_par_iter()
        .map(|value| {
            let point = spec
                .param
                .apply(spec.base, value)
                .and_then(|params| evaluate_point(&params))
                .map_err(|e| Error::SweepPoint {
                    param: spec.param.name(),
                    value,
                    source: Box::new(e),
                })?;
            let row = SweepRow::from_report(value, &point);
            if row.values().iter().any(|x| !x.is_finite()) {
                return Err(Error::SweepPoint {
                    param: spec.param.name(),
                    value,
                    source: Box::new(Error::Numerical("non-finite result".into())),
                });
            }
            Ok(row)
        })
        .collect()
}

/// First row violating the bound ordering, if any.
pub fn first_ordering_violation(rows: &[SweepRow]) -> Option<&SweepRow> {
    rows.iter().find(|r| !r.bounds_ordered())
}

/// Twelve significant digits in scientific notation; `-0` prints as `0`.
pub fn format_value(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

pub fn to_csv(rows: &[SweepRow]) -> Result<String> {
    if rows.is_empty() {
        return Err(Error::EmptySweep);
    }
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let fields: Vec<String> = row.values().iter().map(|&x| format_value(x)).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    Ok(out)
}

/// Gnuplot script plotting the sweep columns from `csv_path`.
pub fn plot_script(rows: &[SweepRow], param: SweepParameter, csv_path: &str) -> Result<String> {
    let (first, last) = match (rows.first(), rows.last()) {
        (Some(f), Some(l)) => (f.param, l.param),
        _ => return Err(Error::EmptySweep),
    };
    let mut s = String::new();
    let _ = writeln!(s, "# columns: {CSV_HEADER}");
    let _ = writeln!(s, "set datafile separator ','");
    let _ = writeln!(s, "set key top right");
    let _ = writeln!(s, "set grid");
    let _ = writeln!(s, "set xlabel '{}'", param.axis_label());
    if last > first {
        let _ = writeln!(s, "set xrange [{}:{}]", format_value(first), format_value(last));
    }
    let _ = writeln!(s, "set yrange [0:*]");
    let _ = writeln!(s, "data = '{}'", csv_path.replace('\'', "''"));
    let _ = writeln!(
        s,
        "plot data using 1:7 skip 1 with lines lw 2 title 'entropic uncertainty bound', \\"
    );
    let _ = writeln!(s, "     data using 1:5 skip 1 with lines dt 2 title 'S(X|B)+S(Z|B)', \\");
    let _ = writeln!(s, "     data using 1:6 skip 1 with lines dt 3 title 'Berta bound', \\");
    let _ = writeln!(s, "     data using 1:2 skip 1 with lines lw 2 title 'concurrence', \\");
    let _ = writeln!(s, "     data using 1:3 skip 1 with lines lw 2 title 'quantum discord'");
    Ok(s)
}
