//! Sample generation and experimental designs.
//!
//! Two point sources are provided: seeded pseudo-random sampling and the
//! Sobol' low-discrepancy sequence with optional Owen scrambling. On top of
//! those, this module builds the column-swap design families used by the
//! total-order estimators (`A`/`B` block designs with per-input swapped
//! matrices) and the star designs used by the variogram estimator, and it
//! decides how many base rows a total evaluation budget affords each design.

mod direction_numbers;
pub(crate) mod sobol;

pub use direction_numbers::MAX_DIMENSION;
pub(crate) use sobol::mix64;

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// Sample matrices
// ---------------------------------------------------------------------------

/// Dense row-major matrix of sample points. Rows are points, columns are
/// input dimensions. Generator output lives in `[0, 1)`; transformed
/// matrices and star points may use the closed unit interval.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl SampleMatrix {
    /// Wraps row-major data. The length must equal `rows * cols` and every
    /// value must be finite.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch {
                got: data.len(),
                expected: rows * cols,
                context: "matrix data",
            });
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput(
                "matrix entries must be finite".to_string(),
            ));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// Copy of this matrix with column `col` replaced by the donor's column.
    pub fn with_column_from(&self, donor: &SampleMatrix, col: usize) -> Result<Self> {
        if donor.rows != self.rows || col >= self.cols || col >= donor.cols {
            return Err(Error::BadShape {
                rows: donor.rows,
                cols: donor.cols,
                context: format!("column {col} swap into {}x{}", self.rows, self.cols),
            });
        }
        let mut out = self.clone();
        for r in 0..self.rows {
            out.data[r * self.cols + col] = donor.data[r * donor.cols + col];
        }
        Ok(out)
    }

    /// Copy of a contiguous column block `[from, to)`.
    pub fn column_block(&self, from: usize, to: usize) -> Result<Self> {
        if from > to || to > self.cols {
            return Err(Error::BadShape {
                rows: self.rows,
                cols: self.cols,
                context: format!("column block {from}..{to}"),
            });
        }
        let w = to - from;
        let mut data = Vec::with_capacity(self.rows * w);
        for r in 0..self.rows {
            data.extend_from_slice(&self.data[r * self.cols + from..r * self.cols + to]);
        }
        Ok(Self {
            rows: self.rows,
            cols: w,
            data,
        })
    }

    /// Writes the matrix as headerless CSV, one point per line. Values use
    /// the shortest decimal form that round-trips exactly.
    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let mut out = String::new();
        for r in 0..self.rows {
            let row = self.row(r);
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{v}");
            }
            out.push('\n');
        }
        fs::write(path, out)?;
        Ok(())
    }

    /// Reads a headerless CSV matrix. Every line must have the same number
    /// of fields and every field must parse as a finite real.
    pub fn read_csv(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        let mut data = Vec::new();
        let mut cols = None;
        let mut rows = 0;
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            match cols {
                None => cols = Some(fields.len()),
                Some(c) if c != fields.len() => {
                    return Err(Error::Parse {
                        path: path.display().to_string(),
                        line: lineno + 1,
                        message: format!("expected {c} fields, found {}", fields.len()),
                    });
                }
                _ => {}
            }
            for f in fields {
                let v: f64 = f.trim().parse().map_err(|_| Error::Parse {
                    path: path.display().to_string(),
                    line: lineno + 1,
                    message: format!("bad number {f:?}"),
                })?;
                if !v.is_finite() {
                    return Err(Error::Parse {
                        path: path.display().to_string(),
                        line: lineno + 1,
                        message: "non-finite value".to_string(),
                    });
                }
                data.push(v);
            }
            rows += 1;
        }
        let cols = cols.unwrap_or(0);
        SampleMatrix::new(rows, cols, data)
    }
}

/// Provenance record written next to a matrix CSV.
#[derive(Debug, Clone)]
pub struct MatrixMetadata {
    pub method: String,
    pub seed: Option<u64>,
    pub scramble_seed: Option<u64>,
    pub rows: usize,
    pub cols: usize,
}

impl MatrixMetadata {
    /// One-line JSON rendering.
    pub fn to_json_line(&self) -> String {
        let mut s = format!("{{\"method\":\"{}\"", self.method);
        if let Some(seed) = self.seed {
            let _ = write!(s, ",\"seed\":{seed}");
        }
        if let Some(seed) = self.scramble_seed {
            let _ = write!(s, ",\"scramble_seed\":{seed}");
        }
        let _ = write!(s, ",\"rows\":{},\"cols\":{}}}", self.rows, self.cols);
        s
    }

    pub fn write_sidecar(&self, matrix_path: &Path) -> Result<()> {
        let mut p = matrix_path.as_os_str().to_owned();
        p.push(".meta.json");
        fs::write(Path::new(&p), self.to_json_line() + "\n")?;
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Point generation
// ---------------------------------------------------------------------------

/// `n` pseudo-random points in `[0, 1)^d`, filled row by row from a seeded
/// ChaCha stream. The same `(n, d, seed)` always yields the same matrix.
pub fn random_points(n: usize, d: usize, seed: u64) -> Result<SampleMatrix> {
    if n == 0 || d == 0 {
        return Err(Error::BadShape {
            rows: n,
            cols: d,
            context: "random_points needs n >= 1 and d >= 1".to_string(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data: Vec<f64> = (0..n * d).map(|_| rng.gen::<f64>()).collect();
    SampleMatrix::new(n, d, data)
}

/// `n` Sobol' points in `[0, 1)^d`.
///
/// Without a scramble seed the raw sequence is returned with the all-zeros
/// point skipped, so the first point is the cube center. With a scramble
/// seed, Owen-style nested scrambling is applied and the sequence starts at
/// index 0: scrambling already moves the degenerate origin point, and
/// keeping the natural power-of-two prefixes preserves the exact net
/// property of the sequence.
pub fn sobol_points(n: usize, d: usize, scramble_seed: Option<u64>) -> Result<SampleMatrix> {
    if n == 0 || d == 0 {
        return Err(Error::BadShape {
            rows: n,
            cols: d,
            context: "sobol_points needs n >= 1 and d >= 1".to_string(),
        });
    }
    let words = match scramble_seed {
        None => sobol::unscrambled_words(n, d)?,
        Some(seed) => sobol::scrambled_words(n, d, seed)?,
    };
    let data: Vec<f64> = words.into_iter().map(sobol::word_to_unit).collect();
    SampleMatrix::new(n, d, data)
}

// ---------------------------------------------------------------------------
// Run allocation
// ---------------------------------------------------------------------------

/// Design families, keyed by the estimators they serve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EstimatorClass {
    /// `A` plus `k` matrices `A_B^(i)`.
    AbK,
    /// `A`, `B`, plus `k` matrices `B_A^(i)`.
    AbKPlusB,
    /// `A`, `B`, plus `k` each of `A_B^(i)` and `B_A^(i)`.
    DoubleRadial,
    /// `A`, `B`, plus `k` each of `B_A^(i)` and `C_B^(i)`; `C` itself is
    /// never evaluated.
    PseudoOwen,
    /// Star design: centers plus axis sections.
    Stars,
}

impl EstimatorClass {
    fn name(self) -> &'static str {
        match self {
            EstimatorClass::AbK => "AB_k",
            EstimatorClass::AbKPlusB => "AB_k_plus_B",
            EstimatorClass::DoubleRadial => "double_radial",
            EstimatorClass::PseudoOwen => "pseudo_owen",
            EstimatorClass::Stars => "stars",
        }
    }

    /// Model evaluations consumed per base row.
    fn block_size(self, k: usize, sections: usize) -> u64 {
        match self {
            EstimatorClass::AbK => k as u64 + 1,
            EstimatorClass::AbKPlusB => k as u64 + 2,
            EstimatorClass::DoubleRadial | EstimatorClass::PseudoOwen => 2 * k as u64 + 2,
            EstimatorClass::Stars => k as u64 * (sections as u64 - 1) + 1,
        }
    }
}

/// Outcome of splitting a total evaluation budget for one design family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunAllocation {
    pub class: EstimatorClass,
    /// Base rows for the design (stars for the star design).
    pub n_v: usize,
    /// Model evaluations the design will consume.
    pub evals: u64,
    /// True when the shared small-budget fallback replaced the budget.
    pub fallback: bool,
    /// Budget actually used (the fallback substitutes `2` star blocks).
    pub effective_budget: u64,
}

/// Number of points per star section implied by the step width.
pub(crate) fn sections_per_dim(delta_h: f64) -> Result<usize> {
    if !(delta_h > 0.0 && delta_h < 1.0) {
        return Err(Error::BadStepWidth(delta_h));
    }
    let s = 1.0 / delta_h;
    let rounded = s.round();
    if (s - rounded).abs() > 1e-9 || rounded < 2.0 {
        return Err(Error::BadStepWidth(delta_h));
    }
    Ok(rounded as usize)
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

/// Splits a total budget of `n_t` model evaluations into base rows for one
/// design family with `k` inputs.
///
/// Block designs round the row count up, so every design gets at least its
/// nominal share. Star designs round down: a fractional star cannot be
/// evaluated. When the star design would get one star or none, all families
/// switch to the fallback budget of exactly two star blocks, which keeps the
/// eight estimators comparable on small budgets at the cost of coupling the
/// effective budget to `k`.
pub fn allocate_runs(
    class: EstimatorClass,
    n_t: u64,
    k: usize,
    delta_h: f64,
) -> Result<RunAllocation> {
    if n_t == 0 || k == 0 {
        return Err(Error::InvalidInput(format!(
            "allocate_runs needs n_t >= 1 and k >= 1, got n_t = {n_t}, k = {k}"
        )));
    }
    let sections = sections_per_dim(delta_h)?;
    let star_block = EstimatorClass::Stars.block_size(k, sections);
    let stars_nominal = n_t / star_block;
    let (fallback, budget) = if stars_nominal <= 1 {
        (true, 2 * star_block)
    } else {
        (false, n_t)
    };
    let block = class.block_size(k, sections);
    let n_v = match class {
        EstimatorClass::Stars => {
            if fallback {
                2
            } else {
                stars_nominal
            }
        }
        _ => ceil_div(budget, block),
    };
    if n_v < 2 {
        return Err(Error::InfeasibleBudget {
            n_t,
            k,
            n_v,
            class: class.name(),
        });
    }
    Ok(RunAllocation {
        class,
        n_v: n_v as usize,
        evals: n_v * block,
        fallback,
        effective_budget: budget,
    })
}

// ---------------------------------------------------------------------------
// Column-swap designs
// ---------------------------------------------------------------------------

/// The matrices one design family evaluates. Lists are indexed by input.
#[derive(Debug, Clone)]
pub struct DesignBundle {
    pub class: EstimatorClass,
    pub k: usize,
    pub a: SampleMatrix,
    pub b: Option<SampleMatrix>,
    /// `A_B^(i)`: `A` with column `i` taken from `B`.
    pub ab: Vec<SampleMatrix>,
    /// `B_A^(i)`: `B` with column `i` taken from `A`.
    pub ba: Vec<SampleMatrix>,
    /// `C_B^(i)`: `C` with column `i` taken from `B`.
    pub cb: Vec<SampleMatrix>,
}

/// Splits a base sample into the matrices required by a block design
/// family. The base must have `2k` columns (`3k` for the pseudo-Owen
/// family, whose third block is only used through its swapped copies).
pub fn build_design(base: &SampleMatrix, class: EstimatorClass) -> Result<DesignBundle> {
    let bad = |context: String| Error::BadShape {
        rows: base.rows(),
        cols: base.cols(),
        context,
    };
    if base.rows() < 2 {
        return Err(bad("designs need at least 2 base rows".to_string()));
    }
    let k = match class {
        EstimatorClass::Stars => {
            return Err(Error::InvalidInput(
                "star designs are built with build_star_design".to_string(),
            ))
        }
        EstimatorClass::PseudoOwen => {
            if base.cols() % 3 != 0 || base.cols() == 0 {
                return Err(bad("pseudo-Owen base needs 3k columns".to_string()));
            }
            base.cols() / 3
        }
        _ => {
            if base.cols() % 2 != 0 || base.cols() == 0 {
                return Err(bad("base needs 2k columns".to_string()));
            }
            base.cols() / 2
        }
    };
    let a = base.column_block(0, k)?;
    let b = base.column_block(k, 2 * k)?;
    let swaps = |from: &SampleMatrix, donor: &SampleMatrix| -> Result<Vec<SampleMatrix>> {
        (0..k).map(|i| from.with_column_from(donor, i)).collect()
    };
    let bundle = match class {
        EstimatorClass::AbK => DesignBundle {
            class,
            k,
            ab: swaps(&a, &b)?,
            a,
            b: None,
            ba: Vec::new(),
            cb: Vec::new(),
        },
        EstimatorClass::AbKPlusB => DesignBundle {
            class,
            k,
            ba: swaps(&b, &a)?,
            a,
            b: Some(b),
            ab: Vec::new(),
            cb: Vec::new(),
        },
        EstimatorClass::DoubleRadial => DesignBundle {
            class,
            k,
            ab: swaps(&a, &b)?,
            ba: swaps(&b, &a)?,
            a,
            b: Some(b),
            cb: Vec::new(),
        },
        EstimatorClass::PseudoOwen => {
            let c = base.column_block(2 * k, 3 * k)?;
            DesignBundle {
                class,
                k,
                ba: swaps(&b, &a)?,
                cb: swaps(&c, &b)?,
                a,
                b: Some(b),
                ab: Vec::new(),
            }
        }
        EstimatorClass::Stars => unreachable!(),
    };
    Ok(bundle)
}

// ---------------------------------------------------------------------------
// Star designs
// ---------------------------------------------------------------------------

/// Star design: for every center, each input dimension carries a section of
/// equally spaced points through the center. The center row is shared by
/// all sections of its star.
#[derive(Debug, Clone)]
pub struct StarSample {
    pub centers: SampleMatrix,
    pub delta_h: f64,
    /// Flat evaluation list; rows feed the model in this order.
    pub points: SampleMatrix,
    /// `sections[star][dim]` lists the rows of `points` forming that
    /// section, in ascending coordinate order. Each section has
    /// `1/delta_h` entries and contains the star's center row.
    pub sections: Vec<Vec<Vec<usize>>>,
}

impl StarSample {
    /// Evaluations consumed per star.
    pub fn points_per_star(&self) -> usize {
        let k = self.centers.cols();
        let s = (1.0 / self.delta_h).round() as usize;
        k * (s - 1) + 1
    }
}

/// Builds the star sections for a set of centers.
///
/// Each section holds `1/delta_h` points spaced exactly `delta_h` apart,
/// one of which is the center's own coordinate. Near the domain boundary
/// the window slides by whole steps (never reflects), keeping the center on
/// the grid while all points stay inside `[0, 1]`.
pub fn build_star_design(centers: &SampleMatrix, delta_h: f64) -> Result<StarSample> {
    let sections_n = sections_per_dim(delta_h)?;
    let n_stars = centers.rows();
    let k = centers.cols();
    if n_stars == 0 || k == 0 {
        return Err(Error::BadShape {
            rows: n_stars,
            cols: k,
            context: "star design needs at least one center and one dimension".to_string(),
        });
    }
    let per_star = k * (sections_n - 1) + 1;
    let mut points = Vec::with_capacity(n_stars * per_star * k);
    let mut sections = Vec::with_capacity(n_stars);
    for s in 0..n_stars {
        let center = centers.row(s);
        let base_row = s * per_star;
        points.extend_from_slice(center);
        let mut star_sections = Vec::with_capacity(k);
        let mut next_row = base_row + 1;
        for dim in 0..k {
            let c = center[dim];
            // Integer grid position of the center inside its window, chosen
            // as close to the middle as the boundaries allow.
            let max_pos = sections_n - 1;
            let p_hi = ((c / delta_h) + 1e-9).floor().min(max_pos as f64) as usize;
            let p_lo_f = (max_pos as f64) - ((1.0 - c) / delta_h + 1e-9).floor();
            let p_lo = p_lo_f.max(0.0) as usize;
            let mid = max_pos / 2;
            let p = mid.clamp(p_lo, p_hi);
            let mut idxs = Vec::with_capacity(sections_n);
            for j in 0..sections_n {
                if j == p {
                    idxs.push(base_row);
                    continue;
                }
                let coord = (c + (j as f64 - p as f64) * delta_h).clamp(0.0, 1.0);
                let mut row = center.to_vec();
                row[dim] = coord;
                points.extend_from_slice(&row);
                idxs.push(next_row);
                next_row += 1;
            }
            star_sections.push(idxs);
        }
        sections.push(star_sections);
    }
    Ok(StarSample {
        centers: centers.clone(),
        delta_h,
        points: SampleMatrix::new(n_stars * per_star, k, points)?,
        sections,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // ------------------------------------------------------------------
    // point generation
    // ------------------------------------------------------------------

    #[test]
    fn random_points_are_deterministic_and_in_range() {
        let a = random_points(64, 5, 3).unwrap();
        let b = random_points(64, 5, 3).unwrap();
        let c = random_points(64, 5, 4).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.data().iter().all(|&v| (0.0..1.0).contains(&v)));
    }

    #[test]
    fn sobol_points_match_va_der_corput_prefix() {
        let m = sobol_points(4, 1, None).unwrap();
        assert_eq!(m.data(), &[0.5, 0.75, 0.25, 0.375]);
    }

    #[test]
    fn scrambled_sobol_in_unit_interval() {
        let m = sobol_points(128, 4, Some(9)).unwrap();
        assert!(m.data().iter().all(|&v| (0.0..1.0).contains(&v)));
    }

    // ------------------------------------------------------------------
    // allocation
    // ------------------------------------------------------------------

    #[test]
    fn allocation_follows_block_sizes() {
        // 1000 evaluations over k = 9 inputs at delta_h = 0.2.
        let n_t = 1000;
        let k = 9;
        let a = allocate_runs(EstimatorClass::AbK, n_t, k, 0.2).unwrap();
        assert_eq!(a.n_v, 100); // ceil(1000 / 10)
        let b = allocate_runs(EstimatorClass::AbKPlusB, n_t, k, 0.2).unwrap();
        assert_eq!(b.n_v, 91); // ceil(1000 / 11)
        let c = allocate_runs(EstimatorClass::DoubleRadial, n_t, k, 0.2).unwrap();
        assert_eq!(c.n_v, 50); // ceil(1000 / 20)
        let d = allocate_runs(EstimatorClass::Stars, n_t, k, 0.2).unwrap();
        assert_eq!(d.n_v, 27); // floor(1000 / 37)
        assert!(!d.fallback);
    }

    #[test]
    fn small_budget_triggers_shared_fallback() {
        // Worked example: N_t = 50, k = 30 cannot host a single star
        // (block = 121), so everything recomputes from 2 * 121 = 242.
        let stars = allocate_runs(EstimatorClass::Stars, 50, 30, 0.2).unwrap();
        assert!(stars.fallback);
        assert_eq!(stars.n_v, 2);
        assert_eq!(stars.effective_budget, 242);
        let abk = allocate_runs(EstimatorClass::AbK, 50, 30, 0.2).unwrap();
        assert!(abk.fallback);
        assert_eq!(abk.n_v, 8); // ceil(242 / 31)
    }

    #[test]
    fn infeasible_budget_is_an_error() {
        // delta_h = 0.5 gives star blocks of k + 1; the fallback budget
        // 2k + 2 leaves a single row for the double-radial design.
        let err = allocate_runs(EstimatorClass::DoubleRadial, 3, 10, 0.5);
        assert!(matches!(err, Err(Error::InfeasibleBudget { .. })));
    }

    #[test]
    fn budget_never_exceeded_by_more_than_one_block() {
        for n_t in [13u64, 77, 250, 999] {
            for k in [3usize, 7, 31] {
                for class in [
                    EstimatorClass::AbK,
                    EstimatorClass::AbKPlusB,
                    EstimatorClass::DoubleRadial,
                    EstimatorClass::PseudoOwen,
                    EstimatorClass::Stars,
                ] {
                    let a = allocate_runs(class, n_t, k, 0.2).unwrap();
                    let block = class.block_size(k, 5);
                    assert!(
                        a.evals <= a.effective_budget + block,
                        "{class:?} n_t={n_t} k={k}: {} > {} + {block}",
                        a.evals,
                        a.effective_budget
                    );
                }
            }
        }
    }

    // ------------------------------------------------------------------
    // column-swap designs
    // ------------------------------------------------------------------

    #[test]
    fn design_matrices_differ_in_exactly_one_column() {
        let base = random_points(16, 6, 11).unwrap(); // k = 3
        let bundle = build_design(&base, EstimatorClass::DoubleRadial).unwrap();
        assert_eq!(bundle.k, 3);
        let b = bundle.b.as_ref().unwrap();
        for i in 0..3 {
            for r in 0..16 {
                for c in 0..3 {
                    let expect_ab = if c == i {
                        b.get(r, c)
                    } else {
                        bundle.a.get(r, c)
                    };
                    assert_eq!(bundle.ab[i].get(r, c), expect_ab);
                    let expect_ba = if c == i {
                        bundle.a.get(r, c)
                    } else {
                        b.get(r, c)
                    };
                    assert_eq!(bundle.ba[i].get(r, c), expect_ba);
                }
            }
        }
    }

    #[test]
    fn pseudo_owen_uses_three_blocks() {
        let base = random_points(8, 9, 5).unwrap(); // k = 3
        let bundle = build_design(&base, EstimatorClass::PseudoOwen).unwrap();
        assert_eq!(bundle.k, 3);
        assert_eq!(bundle.ba.len(), 3);
        assert_eq!(bundle.cb.len(), 3);
        // C_B^(i) column i must equal the B block's column i.
        let b = bundle.b.as_ref().unwrap();
        for i in 0..3 {
            for r in 0..8 {
                assert_eq!(bundle.cb[i].get(r, i), b.get(r, i));
            }
        }
    }

    #[test]
    fn odd_column_count_is_rejected() {
        let base = random_points(8, 5, 5).unwrap();
        assert!(build_design(&base, EstimatorClass::AbK).is_err());
    }

    // ------------------------------------------------------------------
    // star designs
    // ------------------------------------------------------------------

    #[test]
    fn interior_star_sections_are_centered() {
        let centers = SampleMatrix::new(1, 1, vec![0.5]).unwrap();
        let star = build_star_design(&centers, 0.2).unwrap();
        let coords: Vec<f64> = star.sections[0][0]
            .iter()
            .map(|&r| star.points.get(r, 0))
            .collect();
        let expect = [0.1, 0.3, 0.5, 0.7, 0.9];
        for (got, want) in coords.iter().zip(expect) {
            assert!((got - want).abs() < 1e-12, "{coords:?}");
        }
    }

    #[test]
    fn boundary_star_sections_shift_without_reflecting() {
        let centers = SampleMatrix::new(1, 1, vec![0.05]).unwrap();
        let star = build_star_design(&centers, 0.2).unwrap();
        let coords: Vec<f64> = star.sections[0][0]
            .iter()
            .map(|&r| star.points.get(r, 0))
            .collect();
        let expect = [0.05, 0.25, 0.45, 0.65, 0.85];
        for (got, want) in coords.iter().zip(expect) {
            assert!((got - want).abs() < 1e-12, "{coords:?}");
        }
        // The center keeps its own coordinate.
        assert_eq!(star.sections[0][0][0], 0);
    }

    #[test]
    fn star_point_count_and_spacing() {
        let centers = random_points(7, 4, 21).unwrap();
        let star = build_star_design(&centers, 0.2).unwrap();
        assert_eq!(star.points.rows(), 7 * (4 * 4 + 1));
        for s in 0..7 {
            for dim in 0..4 {
                let sec = &star.sections[s][dim];
                assert_eq!(sec.len(), 5);
                let coords: Vec<f64> = sec.iter().map(|&r| star.points.get(r, dim)).collect();
                for w in coords.windows(2) {
                    assert!((w[1] - w[0] - 0.2).abs() < 1e-12);
                }
                assert!(coords.iter().all(|&x| (0.0..=1.0).contains(&x)));
                // Off-axis coordinates match the center.
                for &r in sec {
                    for other in 0..4 {
                        if other != dim {
                            assert_eq!(star.points.get(r, other), star.centers.get(s, other));
                        }
                    }
                }
            }
        }
    }
}
