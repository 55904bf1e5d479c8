//! Meta-analysis of benchmark records.
//!
//! The record set inherits the A/B/swapped block structure of the parameter
//! design, so the same Sobol' machinery that the benchmark evaluates can be
//! turned on the benchmark itself: which settings drive each estimator's
//! score. Also provides the tabular summaries: score medians binned by runs
//! per input, and the out-of-range diagnostic over rank-reversed records.

use crate::error::{Error, Result};
use crate::estimators::{first_order_si, jansen_total, EstimatorId, EvaluationSet};

use super::{Grouping, RecordStatus, SimulationRecord};

/// Which record metric feeds an analysis or summary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputKind {
    R,
    Mae,
}

impl OutputKind {
    pub fn name(self) -> &'static str {
        match self {
            OutputKind::R => "r",
            OutputKind::Mae => "mae",
        }
    }

    pub fn of(self, record: &SimulationRecord) -> Option<f64> {
        match self {
            OutputKind::R => record.r,
            OutputKind::Mae => record.mae,
        }
    }
}

/// First- and total-order indices of one parameter group for one estimator's
/// score.
#[derive(Debug, Clone, PartialEq)]
pub struct SaRow {
    pub estimator: EstimatorId,
    pub output: OutputKind,
    pub group: String,
    pub si: f64,
    pub ti: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SensitivityReport {
    pub rows: Vec<SaRow>,
}

impl SensitivityReport {
    pub const CSV_HEADER: &'static str = "estimator,output,parameter_or_cluster,Si,Ti";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                row.estimator.name(),
                row.output.name(),
                row.group,
                row.si,
                row.ti
            ));
        }
        out
    }
}

/// Sobol' analysis of the benchmark's own results: per estimator, first- and
/// total-order indices of each parameter group with respect to the chosen
/// score.
///
/// The records must cover a full block design: one record per (row,
/// estimator) for rows `0..base*(2+groups)`. Failed records are imputed with
/// the estimator's mean score so they dilute rather than bias the indices;
/// a missing record is an error because it breaks row alignment between
/// blocks.
pub fn sobol_sa_on_results(
    records: &[SimulationRecord],
    grouping: &Grouping,
    output: OutputKind,
) -> Result<SensitivityReport> {
    if records.is_empty() {
        return Err(Error::InvalidInput("no records to analyze".to_string()));
    }
    let blocks = 2 + grouping.len();
    let total_rows = records.iter().map(|r| r.row_id).max().unwrap() + 1;
    if total_rows % blocks != 0 || total_rows / blocks < 2 {
        return Err(Error::IncompleteDesign(format!(
            "{total_rows} rows do not form {blocks} equal blocks"
        )));
    }
    let base = total_rows / blocks;

    let mut rows = Vec::with_capacity(EstimatorId::ALL.len() * grouping.len());
    for &est in EstimatorId::ALL.iter() {
        let mut value: Vec<Option<f64>> = vec![None; total_rows];
        let mut present = vec![false; total_rows];
        for rec in records.iter().filter(|r| r.estimator == est) {
            if rec.row_id >= total_rows {
                continue;
            }
            present[rec.row_id] = true;
            if rec.status == RecordStatus::Ok {
                value[rec.row_id] = output.of(rec);
            }
        }
        if let Some(missing) = present.iter().position(|&p| !p) {
            return Err(Error::IncompleteDesign(format!(
                "no {} record for row {missing}",
                est.name()
            )));
        }
        let good: Vec<f64> = value.iter().flatten().copied().collect();
        if good.is_empty() {
            return Err(Error::InvalidInput(format!(
                "no successful {} records carry the {} metric",
                est.name(),
                output.name()
            )));
        }
        let fill = good.iter().sum::<f64>() / good.len() as f64;
        let y: Vec<f64> = value.iter().map(|v| v.unwrap_or(fill)).collect();

        let block = |b: usize| y[b * base..(b + 1) * base].to_vec();
        let ev = EvaluationSet {
            y_a: block(0),
            y_b: block(1),
            y_ab: (0..grouping.len()).map(|g| block(2 + g)).collect(),
            ..Default::default()
        };
        let si = first_order_si(&ev)?;
        let ti = jansen_total(&ev)?.t;
        for (g, label) in grouping.labels.iter().enumerate() {
            rows.push(SaRow {
                estimator: est,
                output,
                group: label.clone(),
                si: si[g],
                ti: ti[g],
            });
        }
    }
    Ok(SensitivityReport { rows })
}

/// Median score of one estimator over the records whose runs-per-input ratio
/// falls in `[lo, hi)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BinSummary {
    pub lo: f64,
    pub hi: f64,
    pub estimator: EstimatorId,
    pub count: usize,
    pub median: f64,
}

/// Out-of-range behavior of one estimator over its rank-reversed records
/// (successful records with r < 0).
#[derive(Debug, Clone, PartialEq)]
pub struct NegativeRowDiagnostic {
    pub estimator: EstimatorId,
    pub count: usize,
    pub mean_frac_negative: Option<f64>,
    pub mean_frac_above_one: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryTable {
    pub output: OutputKind,
    pub bin_width: f64,
    pub bins: Vec<BinSummary>,
    pub diagnostics: Vec<NegativeRowDiagnostic>,
}

impl SummaryTable {
    pub const CSV_HEADER: &'static str =
        "table,estimator,bin_lo,bin_hi,count,median,mean_frac_neg,mean_frac_gt1";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for bin in &self.bins {
            out.push_str(&format!(
                "bin_median,{},{},{},{},{},,\n",
                bin.estimator.name(),
                bin.lo,
                bin.hi,
                bin.count,
                bin.median
            ));
        }
        for d in &self.diagnostics {
            let fmt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "negative_r,{},,,{},,{},{}\n",
                d.estimator.name(),
                d.count,
                fmt(d.mean_frac_negative),
                fmt(d.mean_frac_above_one)
            ));
        }
        out
    }
}

fn median_of(mut values: Vec<f64>) -> f64 {
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        0.5 * (values[n / 2 - 1] + values[n / 2])
    }
}

/// Bin the successful records by their runs-per-input ratio N_t/k into
/// intervals of `bin_width` and report each estimator's median score per
/// bin, plus the out-of-range diagnostic restricted to records with r < 0.
pub fn summarize(
    records: &[SimulationRecord],
    output: OutputKind,
    bin_width: f64,
) -> Result<SummaryTable> {
    if records.is_empty() {
        return Err(Error::InvalidInput("no records to summarize".to_string()));
    }
    if !(bin_width.is_finite() && bin_width > 0.0) {
        return Err(Error::InvalidInput(format!(
            "bin width must be positive, got {bin_width}"
        )));
    }
    let mut by_bin: std::collections::BTreeMap<(usize, usize), Vec<f64>> =
        std::collections::BTreeMap::new();
    for rec in records {
        if rec.status != RecordStatus::Ok {
            continue;
        }
        let Some(score) = output.of(rec) else {
            continue;
        };
        let ratio = rec.params.n_t as f64 / rec.params.k as f64;
        let bin = (ratio / bin_width).floor() as usize;
        let est = EstimatorId::ALL
            .iter()
            .position(|&e| e == rec.estimator)
            .unwrap();
        by_bin.entry((bin, est)).or_default().push(score);
    }
    let bins = by_bin
        .into_iter()
        .map(|((bin, est), values)| BinSummary {
            lo: bin as f64 * bin_width,
            hi: (bin + 1) as f64 * bin_width,
            estimator: EstimatorId::ALL[est],
            count: values.len(),
            median: median_of(values),
        })
        .collect();

    let diagnostics = EstimatorId::ALL
        .iter()
        .map(|&est| {
            let mut count = 0usize;
            let (mut neg, mut gt1) = (0.0, 0.0);
            for rec in records.iter().filter(|r| {
                r.estimator == est && r.status == RecordStatus::Ok && r.r.is_some_and(|v| v < 0.0)
            }) {
                count += 1;
                neg += rec.frac_negative.unwrap_or(0.0);
                gt1 += rec.frac_above_one.unwrap_or(0.0);
            }
            let mean = |s: f64| (count > 0).then(|| s / count as f64);
            NegativeRowDiagnostic {
                estimator: est,
                count,
                mean_frac_negative: mean(neg),
                mean_frac_above_one: mean(gt1),
            }
        })
        .collect();

    Ok(SummaryTable {
        output,
        bin_width,
        bins,
        diagnostics,
    })
}
