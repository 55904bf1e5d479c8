//! Randomized benchmark of the total-order estimators.
//!
//! The settings of a sensitivity analysis are treated as uncertain inputs in
//! their own right: sampling method, evaluation budget, input count,
//! marginal shapes, test-function seed and activation fractions, and the
//! rank-agreement measure. That eight-parameter space is sampled with
//! scrambled Sobol' points; every sampled setting materializes a test
//! function, runs all eight estimators within a shared evaluation budget,
//! and scores them against a high-effort reference either by rank agreement
//! or by mean absolute error. Records stream to an append-only CSV so long
//! runs survive interruption, and the record set can be pushed back through
//! the same Sobol' machinery to ask which settings drive performance.

mod sa;

pub use sa::{
    sobol_sa_on_results, summarize, BinSummary, NegativeRowDiagnostic, OutputKind, SaRow,
    SensitivityReport, SummaryTable,
};

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::distributions::{phi_assign, transform_matrix, Marginal};
use crate::error::{Error, Result};
use crate::estimators::{
    azzini_rosati_total, glen_isaacs_total, homma_saltelli_total, janon_monod_total, jansen_total,
    pseudo_owen_total, saltelli2008_total, vars_total, EstimatorId, EvaluationSet,
    TotalOrderEstimate,
};
use crate::metafunction::{
    evaluate, evaluate_with_swaps, generate_spec, phi_vector_seed, MetafunctionSpec,
};
use crate::metrics::{
    kendall_tau_b, mae, out_of_range_fractions, pearson, ranks_from_values, savage_scores,
};
use crate::sampling::{
    allocate_runs, build_star_design, mix64, random_points, sobol_points, EstimatorClass,
    SampleMatrix,
};

/// Column order of the benchmark parameters in the sampled design.
pub const PARAM_NAMES: [&str; 8] = ["tau", "N_t", "k", "phi", "epsilon", "k2", "k3", "delta"];

const COL_TAU: usize = 0;
const COL_NT: usize = 1;
const COL_K: usize = 2;
const COL_PHI: usize = 3;
const COL_EPSILON: usize = 4;
const COL_K2: usize = 5;
const COL_K3: usize = 6;
const COL_DELTA: usize = 7;

/// One sampled benchmark setting.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchmarkParams {
    /// Sampling method for the estimator designs: 1 = pseudo-random,
    /// 2 = scrambled quasi-random.
    pub tau: u8,
    /// Total model-evaluation budget shared by every design.
    pub n_t: u64,
    /// Number of model inputs.
    pub k: usize,
    /// Marginal-shape setting (1..=7 one shared shape, 8 mixed per input).
    pub phi: u8,
    /// Test-function seed.
    pub epsilon: u32,
    /// Fraction of pairwise interactions activated.
    pub k2: f64,
    /// Fraction of three-way interactions activated.
    pub k3: f64,
    /// Rank-agreement measure: 1 = Kendall tau-b, 2 = Pearson on Savage
    /// scores.
    pub delta: u8,
}

fn discrete(u: f64, lo: u64, hi: u64) -> u64 {
    let v = lo + (u * (hi - lo + 1) as f64).floor() as u64;
    v.min(hi)
}

impl BenchmarkParams {
    /// Map one unit-cube design row onto the parameter supports. Integer
    /// parameters use equal-width cells; real ones scale linearly.
    pub fn from_unit_row(row: &[f64]) -> Result<Self> {
        if row.len() != 8 {
            return Err(Error::LengthMismatch {
                got: row.len(),
                expected: 8,
                context: "benchmark parameter row",
            });
        }
        if row.iter().any(|&u| !(0.0..1.0).contains(&u)) {
            return Err(Error::InvalidInput(
                "benchmark parameter row must lie in [0, 1)".to_string(),
            ));
        }
        Ok(Self {
            tau: discrete(row[COL_TAU], 1, 2) as u8,
            n_t: discrete(row[COL_NT], 10, 1000),
            k: discrete(row[COL_K], 3, 100) as usize,
            phi: discrete(row[COL_PHI], 1, 8) as u8,
            epsilon: discrete(row[COL_EPSILON], 1, 200) as u32,
            k2: 0.3 + 0.2 * row[COL_K2],
            k3: 0.1 + 0.2 * row[COL_K3],
            delta: discrete(row[COL_DELTA], 1, 2) as u8,
        })
    }
}

/// How the eight parameter columns are grouped for the analysis design.
/// Columns within one group are swapped jointly between the A and B blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grouping {
    pub labels: Vec<String>,
    pub members: Vec<Vec<usize>>,
}

impl Grouping {
    /// The seven per-parameter groups; the budget and the input count form
    /// a single group because only their ratio matters.
    pub fn individual() -> Self {
        Self {
            labels: ["tau", "N_t_k", "phi", "epsilon", "k2", "k3", "delta"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
            members: vec![
                vec![COL_TAU],
                vec![COL_NT, COL_K],
                vec![COL_PHI],
                vec![COL_EPSILON],
                vec![COL_K2],
                vec![COL_K3],
                vec![COL_DELTA],
            ],
        }
    }

    /// Three clusters: the agreement measures, the test-function settings,
    /// and the budget/dimension pair. When the output is an absolute error
    /// the measure choice plays no role, so that cluster keeps only the
    /// sampling method.
    pub fn clustered(include_delta: bool) -> Self {
        let (first_label, first) = if include_delta {
            ("delta_tau", vec![COL_DELTA, COL_TAU])
        } else {
            ("tau", vec![COL_TAU])
        };
        Self {
            labels: [first_label, "function", "N_t_k"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
            members: vec![
                first,
                vec![COL_EPSILON, COL_K2, COL_K3, COL_PHI],
                vec![COL_NT, COL_K],
            ],
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Compact single-line form used in the records header, e.g.
    /// `tau=0|N_t_k=1,2|...`.
    pub fn encode(&self) -> String {
        self.labels
            .iter()
            .zip(&self.members)
            .map(|(l, m)| {
                let cols: Vec<String> = m.iter().map(|c| c.to_string()).collect();
                format!("{l}={}", cols.join(","))
            })
            .collect::<Vec<_>>()
            .join("|")
    }

    pub fn decode(text: &str) -> Result<Self> {
        let mut labels = Vec::new();
        let mut members = Vec::new();
        for part in text.split('|') {
            let (label, cols) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidInput(format!("bad group entry '{part}'")))?;
            let cols: std::result::Result<Vec<usize>, _> =
                cols.split(',').map(|c| c.parse::<usize>()).collect();
            let cols =
                cols.map_err(|_| Error::InvalidInput(format!("bad group columns in '{part}'")))?;
            if cols.iter().any(|&c| c >= 8) || cols.is_empty() {
                return Err(Error::InvalidInput(format!(
                    "bad group columns in '{part}'"
                )));
            }
            labels.push(label.to_string());
            members.push(cols);
        }
        Ok(Self { labels, members })
    }
}

/// The sampled parameter-space design: base blocks A and B plus one
/// column-swapped block per group.
#[derive(Debug, Clone)]
pub struct BenchmarkDesign {
    pub a: SampleMatrix,
    pub b: SampleMatrix,
    pub ab: Vec<SampleMatrix>,
    pub grouping: Grouping,
}

impl BenchmarkDesign {
    pub fn base_rows(&self) -> usize {
        self.a.rows()
    }

    /// Simulation rows: the A block, the B block, then one block per group.
    pub fn total_rows(&self) -> usize {
        self.base_rows() * (2 + self.ab.len())
    }

    /// Parameters for every simulation row, in block order.
    pub fn params_for_all_rows(&self) -> Result<Vec<BenchmarkParams>> {
        let mut out = Vec::with_capacity(self.total_rows());
        for m in std::iter::once(&self.a)
            .chain(std::iter::once(&self.b))
            .chain(self.ab.iter())
        {
            for r in 0..m.rows() {
                out.push(BenchmarkParams::from_unit_row(m.row(r))?);
            }
        }
        Ok(out)
    }
}

/// Sample the benchmark parameter space with scrambled Sobol' points:
/// 16 columns split into the A and B blocks, plus joint column swaps per
/// group.
pub fn sample_benchmark_space(
    rows_exp: u32,
    seed: u64,
    grouping: Grouping,
) -> Result<BenchmarkDesign> {
    if !(4..=24).contains(&rows_exp) {
        return Err(Error::InvalidInput(format!(
            "rows_exp must lie in 4..=24, got {rows_exp}"
        )));
    }
    let n = 1usize << rows_exp;
    let base = sobol_points(n, 16, Some(seed))?;
    let a = base.column_block(0, 8)?;
    let b = base.column_block(8, 16)?;
    let mut ab = Vec::with_capacity(grouping.len());
    for group in &grouping.members {
        let mut m = a.clone();
        for &col in group {
            m = m.with_column_from(&b, col)?;
        }
        ab.push(m);
    }
    Ok(BenchmarkDesign { a, b, ab, grouping })
}

/// What the benchmark scores: rank agreement against the reference ranking,
/// or mean absolute error against the reference values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Rank,
    Mae,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Rank => "rank",
            Mode::Mae => "mae",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "rank" => Ok(Mode::Rank),
            "mae" => Ok(Mode::Mae),
            other => Err(Error::InvalidInput(format!(
                "unknown mode '{other}' (expected rank or mae)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordStatus {
    Ok,
    Degenerate,
    Infeasible,
}

impl RecordStatus {
    pub fn name(self) -> &'static str {
        match self {
            RecordStatus::Ok => "ok",
            RecordStatus::Degenerate => "degenerate",
            RecordStatus::Infeasible => "infeasible",
        }
    }

    fn parse(text: &str) -> Result<Self> {
        match text {
            "ok" => Ok(RecordStatus::Ok),
            "degenerate" => Ok(RecordStatus::Degenerate),
            "infeasible" => Ok(RecordStatus::Infeasible),
            other => Err(Error::InvalidInput(format!("unknown status '{other}'"))),
        }
    }
}

/// Outcome of one estimator on one benchmark row. Failed rows keep their
/// status and leave the metric fields empty.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationRecord {
    pub row_id: usize,
    pub params: BenchmarkParams,
    pub estimator: EstimatorId,
    pub status: RecordStatus,
    pub r: Option<f64>,
    pub mae: Option<f64>,
    pub frac_negative: Option<f64>,
    pub frac_above_one: Option<f64>,
    pub evals_used: u64,
}

pub const RECORDS_HEADER: &str =
    "row_id,tau,N_t,k,phi,epsilon,k2,k3,delta,estimator,status,r,mae,frac_neg,frac_gt1,evals_used";

fn opt_field(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn parse_opt(field: &str, what: &str) -> Result<Option<f64>> {
    if field.is_empty() {
        return Ok(None);
    }
    field
        .parse::<f64>()
        .map(Some)
        .map_err(|_| Error::InvalidInput(format!("bad {what} value '{field}'")))
}

impl SimulationRecord {
    pub fn to_csv_line(&self) -> String {
        let p = &self.params;
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.row_id,
            p.tau,
            p.n_t,
            p.k,
            p.phi,
            p.epsilon,
            p.k2,
            p.k3,
            p.delta,
            self.estimator.name(),
            self.status.name(),
            opt_field(self.r),
            opt_field(self.mae),
            opt_field(self.frac_negative),
            opt_field(self.frac_above_one),
            self.evals_used
        )
    }

    pub fn from_csv_line(line: &str) -> Result<Self> {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 16 {
            return Err(Error::InvalidInput(format!(
                "expected 16 fields, got {}",
                fields.len()
            )));
        }
        let int = |i: usize, what: &str| -> Result<u64> {
            fields[i]
                .parse::<u64>()
                .map_err(|_| Error::InvalidInput(format!("bad {what} value '{}'", fields[i])))
        };
        let real = |i: usize, what: &str| -> Result<f64> {
            fields[i]
                .parse::<f64>()
                .map_err(|_| Error::InvalidInput(format!("bad {what} value '{}'", fields[i])))
        };
        Ok(Self {
            row_id: int(0, "row_id")? as usize,
            params: BenchmarkParams {
                tau: int(1, "tau")? as u8,
                n_t: int(2, "N_t")?,
                k: int(3, "k")? as usize,
                phi: int(4, "phi")? as u8,
                epsilon: int(5, "epsilon")? as u32,
                k2: real(6, "k2")?,
                k3: real(7, "k3")?,
                delta: int(8, "delta")? as u8,
            },
            estimator: EstimatorId::parse(fields[9])?,
            status: RecordStatus::parse(fields[10])?,
            r: parse_opt(fields[11], "r")?,
            mae: parse_opt(fields[12], "mae")?,
            frac_negative: parse_opt(fields[13], "frac_neg")?,
            frac_above_one: parse_opt(fields[14], "frac_gt1")?,
            evals_used: int(15, "evals_used")?,
        })
    }
}

/// Full benchmark configuration. `parallelism` and `out_path` affect
/// scheduling and placement only; every output byte is determined by the
/// remaining fields.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkConfig {
    pub global_seed: u64,
    pub rows_exp: u32,
    pub truth_rows_exp: u32,
    pub mode: Mode,
    pub delta_h: f64,
    pub parallelism: usize,
    pub out_path: PathBuf,
    pub clusters: bool,
}

impl BenchmarkConfig {
    pub fn new(global_seed: u64, rows_exp: u32, out_path: PathBuf) -> Self {
        Self {
            global_seed,
            rows_exp,
            truth_rows_exp: 11,
            mode: Mode::Rank,
            delta_h: 0.2,
            parallelism: 0,
            out_path,
            clusters: false,
        }
    }

    /// Parse a flat key-value config file: one `key = value` per line,
    /// `#` comments. Unknown keys are rejected.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        let perr = |line: usize, message: String| Error::Parse {
            path: path.display().to_string(),
            line,
            message,
        };
        let mut global_seed = None;
        let mut rows_exp = None;
        let mut out_path = None;
        let mut cfg_rest = (11u32, Mode::Rank, 0.2f64, 0usize, false);
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = idx + 1;
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| perr(lineno, format!("expected key = value, got '{line}'")))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| perr(lineno, format!("bad {what} value '{value}'"));
            match key {
                "global_seed" => global_seed = Some(value.parse().map_err(|_| bad("global_seed"))?),
                "rows_exp" => rows_exp = Some(value.parse().map_err(|_| bad("rows_exp"))?),
                "truth_rows_exp" => {
                    cfg_rest.0 = value.parse().map_err(|_| bad("truth_rows_exp"))?
                }
                "mode" => cfg_rest.1 = Mode::parse(value).map_err(|_| bad("mode"))?,
                "delta_h" => cfg_rest.2 = value.parse().map_err(|_| bad("delta_h"))?,
                "parallelism" => cfg_rest.3 = value.parse().map_err(|_| bad("parallelism"))?,
                "out_path" => out_path = Some(PathBuf::from(value)),
                "clusters" => cfg_rest.4 = value.parse().map_err(|_| bad("clusters"))?,
                other => return Err(perr(lineno, format!("unknown key '{other}'"))),
            }
        }
        let missing = |what: &str| perr(0, format!("missing required key '{what}'"));
        Ok(Self {
            global_seed: global_seed.ok_or_else(|| missing("global_seed"))?,
            rows_exp: rows_exp.ok_or_else(|| missing("rows_exp"))?,
            truth_rows_exp: cfg_rest.0,
            mode: cfg_rest.1,
            delta_h: cfg_rest.2,
            parallelism: cfg_rest.3,
            out_path: out_path.ok_or_else(|| missing("out_path"))?,
            clusters: cfg_rest.4,
        })
    }

    pub fn grouping(&self) -> Grouping {
        if self.clusters {
            Grouping::clustered(self.mode == Mode::Rank)
        } else {
            Grouping::individual()
        }
    }

    fn header_lines(&self) -> Vec<String> {
        vec![
            "#schema sensa-records-v1".to_string(),
            format!("#global_seed {}", self.global_seed),
            format!("#rows_exp {}", self.rows_exp),
            format!("#truth_rows_exp {}", self.truth_rows_exp),
            format!("#mode {}", self.mode.name()),
            format!("#delta_h {}", self.delta_h),
            format!("#groups {}", self.grouping().encode()),
            RECORDS_HEADER.to_string(),
        ]
    }
}

/// Header metadata recovered from a records file.
#[derive(Debug, Clone, PartialEq)]
pub struct RecordsMeta {
    pub global_seed: u64,
    pub rows_exp: u32,
    pub truth_rows_exp: u32,
    pub mode: Mode,
    pub delta_h: f64,
    pub grouping: Grouping,
}

/// Read a records CSV produced by [`run_benchmark`].
pub fn read_records(path: &Path) -> Result<(RecordsMeta, Vec<SimulationRecord>)> {
    let text = fs::read_to_string(path)?;
    let perr = |line: usize, message: String| Error::Parse {
        path: path.display().to_string(),
        line,
        message,
    };
    let mut global_seed = None;
    let mut rows_exp = None;
    let mut truth_rows_exp = None;
    let mut mode = None;
    let mut delta_h = None;
    let mut grouping = None;
    let mut records = Vec::new();
    let mut saw_schema = false;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        if let Some(rest) = line.strip_prefix('#') {
            let (key, value) = rest
                .split_once(' ')
                .ok_or_else(|| perr(lineno, format!("bad header line '{line}'")))?;
            let bad = |what: &str| perr(lineno, format!("bad {what} header '{value}'"));
            match key {
                "schema" => {
                    if value != "sensa-records-v1" {
                        return Err(perr(lineno, format!("unsupported schema '{value}'")));
                    }
                    saw_schema = true;
                }
                "global_seed" => global_seed = Some(value.parse().map_err(|_| bad("global_seed"))?),
                "rows_exp" => rows_exp = Some(value.parse().map_err(|_| bad("rows_exp"))?),
                "truth_rows_exp" => {
                    truth_rows_exp = Some(value.parse().map_err(|_| bad("truth_rows_exp"))?)
                }
                "mode" => mode = Some(Mode::parse(value).map_err(|_| bad("mode"))?),
                "delta_h" => delta_h = Some(value.parse().map_err(|_| bad("delta_h"))?),
                "groups" => grouping = Some(Grouping::decode(value).map_err(|_| bad("groups"))?),
                other => return Err(perr(lineno, format!("unknown header key '{other}'"))),
            }
            continue;
        }
        if line == RECORDS_HEADER || line.is_empty() {
            continue;
        }
        records
            .push(SimulationRecord::from_csv_line(line).map_err(|e| perr(lineno, e.to_string()))?);
    }
    if !saw_schema {
        return Err(perr(1, "missing #schema header".to_string()));
    }
    let missing = |what: &str| perr(0, format!("missing #{what} header"));
    Ok((
        RecordsMeta {
            global_seed: global_seed.ok_or_else(|| missing("global_seed"))?,
            rows_exp: rows_exp.ok_or_else(|| missing("rows_exp"))?,
            truth_rows_exp: truth_rows_exp.ok_or_else(|| missing("truth_rows_exp"))?,
            mode: mode.ok_or_else(|| missing("mode"))?,
            delta_h: delta_h.ok_or_else(|| missing("delta_h"))?,
            grouping: grouping.ok_or_else(|| missing("groups"))?,
        },
        records,
    ))
}

// ---------------------------------------------------------------------------
// Row execution
// ---------------------------------------------------------------------------

/// Per-run settings that apply to every row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RowSettings {
    pub global_seed: u64,
    pub truth_rows_exp: u32,
    pub delta_h: f64,
    pub mode: Mode,
}

fn row_seed(global_seed: u64, row_id: usize) -> u64 {
    mix64(global_seed ^ mix64(row_id as u64 ^ 0x9e37_79b9_7f4a_7c15))
}

fn class_seed(row_seed: u64, class_index: usize) -> u64 {
    mix64(row_seed ^ (0xc1a5_5000 + class_index as u64))
}

fn truth_seed(row_seed: u64) -> u64 {
    mix64(row_seed ^ 0x94d0_49bb_1331_11eb)
}

const CLASS_ORDER: [EstimatorClass; 5] = [
    EstimatorClass::AbK,
    EstimatorClass::AbKPlusB,
    EstimatorClass::DoubleRadial,
    EstimatorClass::PseudoOwen,
    EstimatorClass::Stars,
];

fn estimators_of(class: EstimatorClass) -> &'static [EstimatorId] {
    match class {
        EstimatorClass::AbK => &[
            EstimatorId::Jansen,
            EstimatorId::HommaSaltelli,
            EstimatorId::JanonMonod,
            EstimatorId::GlenIsaacs,
        ],
        EstimatorClass::AbKPlusB => &[EstimatorId::Saltelli2008],
        EstimatorClass::DoubleRadial => &[EstimatorId::AzziniRosati],
        EstimatorClass::PseudoOwen => &[EstimatorId::PseudoOwen],
        EstimatorClass::Stars => &[EstimatorId::RazaviGupta],
    }
}

fn failed_record(
    params: &BenchmarkParams,
    row_id: usize,
    estimator: EstimatorId,
    status: RecordStatus,
    evals_used: u64,
) -> SimulationRecord {
    SimulationRecord {
        row_id,
        params: *params,
        estimator,
        status,
        r: None,
        mae: None,
        frac_negative: None,
        frac_above_one: None,
        evals_used,
    }
}

fn compute_truth(
    spec: &MetafunctionSpec,
    dv: &[Marginal],
    k: usize,
    seed: u64,
    truth_rows_exp: u32,
) -> Result<TotalOrderEstimate> {
    let n = 1usize << truth_rows_exp;
    let base = sobol_points(n, 2 * k, Some(seed))?;
    let ta = transform_matrix(&base.column_block(0, k)?, dv)?;
    let tb = transform_matrix(&base.column_block(k, 2 * k)?, dv)?;
    let (y_a, y_ab) = evaluate_with_swaps(spec, &ta, &tb)?;
    jansen_total(&EvaluationSet {
        y_a,
        y_ab,
        ..Default::default()
    })
}

type ClassEstimates = Vec<(EstimatorId, Result<TotalOrderEstimate>)>;

fn evaluate_class(
    class: EstimatorClass,
    spec: &MetafunctionSpec,
    dv: &[Marginal],
    params: &BenchmarkParams,
    n_v: usize,
    delta_h: f64,
    seed: u64,
) -> Result<ClassEstimates> {
    let k = params.k;
    let points = |n: usize, d: usize| -> Result<SampleMatrix> {
        match params.tau {
            1 => random_points(n, d, seed),
            _ => sobol_points(n, d, Some(seed)),
        }
    };
    match class {
        EstimatorClass::AbK => {
            let base = points(n_v, 2 * k)?;
            let ta = transform_matrix(&base.column_block(0, k)?, dv)?;
            let tb = transform_matrix(&base.column_block(k, 2 * k)?, dv)?;
            let (y_a, y_ab) = evaluate_with_swaps(spec, &ta, &tb)?;
            let ev = EvaluationSet {
                y_a,
                y_ab,
                ..Default::default()
            };
            Ok(vec![
                (EstimatorId::Jansen, jansen_total(&ev)),
                (EstimatorId::HommaSaltelli, homma_saltelli_total(&ev)),
                (EstimatorId::JanonMonod, janon_monod_total(&ev)),
                (EstimatorId::GlenIsaacs, glen_isaacs_total(&ev)),
            ])
        }
        EstimatorClass::AbKPlusB => {
            let base = points(n_v, 2 * k)?;
            let ta = transform_matrix(&base.column_block(0, k)?, dv)?;
            let tb = transform_matrix(&base.column_block(k, 2 * k)?, dv)?;
            let y_a = evaluate(spec, &ta)?;
            let (y_b, y_ba) = evaluate_with_swaps(spec, &tb, &ta)?;
            let ev = EvaluationSet {
                y_a,
                y_b,
                y_ba,
                ..Default::default()
            };
            Ok(vec![(EstimatorId::Saltelli2008, saltelli2008_total(&ev))])
        }
        EstimatorClass::DoubleRadial => {
            let base = points(n_v, 2 * k)?;
            let ta = transform_matrix(&base.column_block(0, k)?, dv)?;
            let tb = transform_matrix(&base.column_block(k, 2 * k)?, dv)?;
            let (y_a, y_ab) = evaluate_with_swaps(spec, &ta, &tb)?;
            let (y_b, y_ba) = evaluate_with_swaps(spec, &tb, &ta)?;
            let ev = EvaluationSet {
                y_a,
                y_b,
                y_ab,
                y_ba,
                ..Default::default()
            };
            Ok(vec![(EstimatorId::AzziniRosati, azzini_rosati_total(&ev))])
        }
        EstimatorClass::PseudoOwen => {
            let base = points(n_v, 3 * k)?;
            let ta = transform_matrix(&base.column_block(0, k)?, dv)?;
            let tb = transform_matrix(&base.column_block(k, 2 * k)?, dv)?;
            let tc = transform_matrix(&base.column_block(2 * k, 3 * k)?, dv)?;
            let y_a = evaluate(spec, &ta)?;
            let (y_b, y_ba) = evaluate_with_swaps(spec, &tb, &ta)?;
            // The C block is never charged to the budget; its swaps against
            // B are.
            let (_, y_cb) = evaluate_with_swaps(spec, &tc, &tb)?;
            let ev = EvaluationSet {
                y_a,
                y_b,
                y_ba,
                y_cb,
                ..Default::default()
            };
            Ok(vec![(EstimatorId::PseudoOwen, pseudo_owen_total(&ev))])
        }
        EstimatorClass::Stars => {
            let centers = points(n_v, k)?;
            let star = build_star_design(&centers, delta_h)?;
            let tp = transform_matrix(&star.points, dv)?;
            let y = evaluate(spec, &tp)?;
            Ok(vec![(
                EstimatorId::RazaviGupta,
                vars_total(&star, &y).map(|(est, _)| est),
            )])
        }
    }
}

/// Run one benchmark row: materialize the test function, compute the
/// reference indices, run every estimator inside its budget allocation, and
/// score it. Failures never abort the row; they become failed records.
pub fn run_row(
    params: &BenchmarkParams,
    row_id: usize,
    settings: &RowSettings,
) -> Vec<SimulationRecord> {
    let all_failed = |status: RecordStatus| -> Vec<SimulationRecord> {
        EstimatorId::ALL
            .iter()
            .map(|&e| failed_record(params, row_id, e, status, 0))
            .collect()
    };
    let spec = match generate_spec(params.k, params.k2, params.k3, params.epsilon as u64) {
        Ok(s) => s,
        Err(_) => return all_failed(RecordStatus::Degenerate),
    };
    let dv = match phi_assign(params.phi, params.k, phi_vector_seed(params.epsilon as u64)) {
        Ok(d) => d,
        Err(_) => return all_failed(RecordStatus::Degenerate),
    };
    let rseed = row_seed(settings.global_seed, row_id);
    let truth = match compute_truth(
        &spec,
        &dv,
        params.k,
        truth_seed(rseed),
        settings.truth_rows_exp,
    ) {
        Ok(t) => t,
        Err(_) => return all_failed(RecordStatus::Degenerate),
    };
    let truth_ranks = ranks_from_values(&truth.t);
    let truth_savage = savage_scores(&truth_ranks);

    let mut records = Vec::with_capacity(EstimatorId::ALL.len());
    for (ci, &class) in CLASS_ORDER.iter().enumerate() {
        let members = estimators_of(class);
        let alloc = match allocate_runs(class, params.n_t, params.k, settings.delta_h) {
            Ok(a) => a,
            Err(_) => {
                for &e in members {
                    records.push(failed_record(
                        params,
                        row_id,
                        e,
                        RecordStatus::Infeasible,
                        0,
                    ));
                }
                continue;
            }
        };
        let outcome = evaluate_class(
            class,
            &spec,
            &dv,
            params,
            alloc.n_v,
            settings.delta_h,
            class_seed(rseed, ci),
        );
        match outcome {
            Err(_) => {
                for &e in members {
                    records.push(failed_record(
                        params,
                        row_id,
                        e,
                        RecordStatus::Degenerate,
                        alloc.evals,
                    ));
                }
            }
            Ok(list) => {
                for (est_id, result) in list {
                    records.push(score(
                        params,
                        row_id,
                        est_id,
                        result,
                        alloc.evals,
                        settings.mode,
                        &truth,
                        &truth_ranks,
                        &truth_savage,
                    ));
                }
            }
        }
    }
    records
}

#[allow(clippy::too_many_arguments)]
fn score(
    params: &BenchmarkParams,
    row_id: usize,
    estimator: EstimatorId,
    result: Result<TotalOrderEstimate>,
    evals_used: u64,
    mode: Mode,
    truth: &TotalOrderEstimate,
    truth_ranks: &[f64],
    truth_savage: &[f64],
) -> SimulationRecord {
    let estimate = match result {
        Ok(e) => e,
        Err(_) => {
            return failed_record(
                params,
                row_id,
                estimator,
                RecordStatus::Degenerate,
                evals_used,
            )
        }
    };
    let (frac_neg, frac_gt1) = out_of_range_fractions(&estimate.t);
    let scored = match mode {
        Mode::Rank => {
            let ranks = ranks_from_values(&estimate.t);
            let r = if params.delta == 1 {
                kendall_tau_b(&ranks, truth_ranks)
            } else {
                pearson(&savage_scores(&ranks), truth_savage)
            };
            r.map(|r| (Some(r), None))
        }
        Mode::Mae => mae(&truth.t, &estimate.t).map(|m| (None, Some(m))),
    };
    match scored {
        Ok((r, mae)) => SimulationRecord {
            row_id,
            params: *params,
            estimator,
            status: RecordStatus::Ok,
            r,
            mae,
            frac_negative: Some(frac_neg),
            frac_above_one: Some(frac_gt1),
            evals_used,
        },
        Err(_) => failed_record(
            params,
            row_id,
            estimator,
            RecordStatus::Degenerate,
            evals_used,
        ),
    }
}

// ---------------------------------------------------------------------------
// Full runs
// ---------------------------------------------------------------------------

/// Records per simulation row: one per estimator.
pub const RECORDS_PER_ROW: usize = 8;

struct ResumeState {
    records: Vec<SimulationRecord>,
    rows_done: usize,
}

/// Validate an existing results file against the expected header, keep the
/// longest complete-row prefix (rewriting the file if a partial row trails),
/// and return the parsed prefix.
fn resume_state(path: &Path, header: &[String], total_rows: usize) -> Result<ResumeState> {
    if !path.exists() {
        if let Some(parent) = path.parent() {
            if !parent.as_os_str().is_empty() {
                fs::create_dir_all(parent)?;
            }
        }
        let mut text = header.join("\n");
        text.push('\n');
        fs::write(path, text)?;
        return Ok(ResumeState {
            records: Vec::new(),
            rows_done: 0,
        });
    }
    let text = fs::read_to_string(path)?;
    let lines: Vec<&str> = text.lines().collect();
    if lines.len() < header.len() || lines[..header.len()] != header[..] {
        return Err(Error::Parse {
            path: path.display().to_string(),
            line: 1,
            message: "existing results were produced with a different configuration".to_string(),
        });
    }
    let body = &lines[header.len()..];
    let mut records = Vec::new();
    let mut keep_lines = 0usize;
    let mut rows_done = 0usize;
    'rows: while rows_done < total_rows {
        let start = rows_done * RECORDS_PER_ROW;
        if start + RECORDS_PER_ROW > body.len() {
            break;
        }
        let mut row_records = Vec::with_capacity(RECORDS_PER_ROW);
        for j in 0..RECORDS_PER_ROW {
            match SimulationRecord::from_csv_line(body[start + j]) {
                Ok(rec) if rec.row_id == rows_done => row_records.push(rec),
                _ => break 'rows,
            }
        }
        records.extend(row_records);
        keep_lines = start + RECORDS_PER_ROW;
        rows_done += 1;
    }
    if keep_lines != body.len() {
        // Drop the trailing partial row so appends always restart cleanly.
        let mut text = header.join("\n");
        text.push('\n');
        for line in &body[..keep_lines] {
            text.push_str(line);
            text.push('\n');
        }
        fs::write(path, text)?;
    }
    Ok(ResumeState { records, rows_done })
}

/// Run the full benchmark described by `cfg`, streaming records to
/// `cfg.out_path` and returning them all. Reruns with an existing complete
/// file are no-ops; interrupted files resume after their last complete row.
pub fn run_benchmark(cfg: &BenchmarkConfig) -> Result<Vec<SimulationRecord>> {
    let grouping = cfg.grouping();
    let design = sample_benchmark_space(
        cfg.rows_exp,
        mix64(cfg.global_seed ^ 0x5bd1_e995_5bd1_e995),
        grouping,
    )?;
    let all_params = design.params_for_all_rows()?;
    let header = cfg.header_lines();
    let state = resume_state(&cfg.out_path, &header, all_params.len())?;
    let mut records = state.records;
    if state.rows_done == all_params.len() {
        return Ok(records);
    }

    let settings = RowSettings {
        global_seed: cfg.global_seed,
        truth_rows_exp: cfg.truth_rows_exp,
        delta_h: cfg.delta_h,
        mode: cfg.mode,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism)
        .build()
        .map_err(|e| Error::InvalidInput(format!("cannot build thread pool: {e}")))?;
    let mut file = fs::OpenOptions::new().append(true).open(&cfg.out_path)?;
    let chunk_size = (cfg.parallelism.max(1) * 4).max(16);
    let mut next = state.rows_done;
    while next < all_params.len() {
        let end = (next + chunk_size).min(all_params.len());
        let chunk: Vec<Vec<SimulationRecord>> = pool.install(|| {
            (next..end)
                .into_par_iter()
                .map(|row| run_row(&all_params[row], row, &settings))
                .collect()
        });
        let mut buf = String::new();
        for row_records in &chunk {
            for rec in row_records {
                buf.push_str(&rec.to_csv_line());
                buf.push('\n');
            }
        }
        file.write_all(buf.as_bytes())?;
        file.flush()?;
        for row_records in chunk {
            records.extend(row_records);
        }
        next = end;
    }
    Ok(records)
}
