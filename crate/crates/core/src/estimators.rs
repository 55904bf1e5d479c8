//! Total-order sensitivity index estimators.
//!
//! Eight Monte-Carlo estimators of the total-order Sobol' index, one per
//! design family produced by the sampling module, plus the first-order
//! estimator the benchmark uses for its own sensitivity analysis. All are
//! ratios of second moments, hence invariant under rescaling of the output;
//! all but the covariance-style forms that subtract f0 computed from one
//! matrix alone (Homma-Saltelli, Saltelli-2008) are shift-invariant too.
//!
//! Cross-moments are accumulated in centered form. Besides the usual
//! precision argument, centering makes the inert-input contract hold in
//! exact floating point: when a swapped column leaves the output list
//! bitwise unchanged, the numerator terms cancel to literal zeros instead
//! of rounding residue, and the estimate comes out exactly 0 (or exactly 1
//! for the C-matrix form).

use crate::error::{Error, Result};
use crate::sampling::{EstimatorClass, StarSample};

/// Model outputs for one design, grouped by matrix family.
///
/// Unused members stay empty; each estimator checks that the lists its
/// design family needs are present and of equal length.
#[derive(Debug, Clone, Default)]
pub struct EvaluationSet {
    pub y_a: Vec<f64>,
    pub y_b: Vec<f64>,
    /// Outputs of the k column-swapped variants of A (column i from B).
    pub y_ab: Vec<Vec<f64>>,
    /// Outputs of the k column-swapped variants of B (column i from A).
    pub y_ba: Vec<Vec<f64>>,
    /// Outputs of the k column-swapped variants of C (column i from B).
    pub y_cb: Vec<Vec<f64>>,
}

impl EvaluationSet {
    fn base(&self, what: &'static str) -> Result<&[f64]> {
        if self.y_a.is_empty() {
            return Err(Error::InvalidInput(format!("{what} needs y_a outputs")));
        }
        Ok(&self.y_a)
    }

    fn second(&self, what: &'static str) -> Result<&[f64]> {
        if self.y_b.is_empty() {
            return Err(Error::InvalidInput(format!("{what} needs y_b outputs")));
        }
        if self.y_b.len() != self.y_a.len() && !self.y_a.is_empty() {
            return Err(Error::LengthMismatch {
                got: self.y_b.len(),
                expected: self.y_a.len(),
                context: "y_b length",
            });
        }
        Ok(&self.y_b)
    }

    fn swapped<'a>(
        &self,
        field: &'a [Vec<f64>],
        n: usize,
        what: &'static str,
    ) -> Result<&'a [Vec<f64>]> {
        if field.is_empty() {
            return Err(Error::InvalidInput(format!("{what} outputs missing")));
        }
        for list in field {
            if list.len() != n {
                return Err(Error::LengthMismatch {
                    got: list.len(),
                    expected: n,
                    context: "swapped-column output length",
                });
            }
        }
        Ok(field)
    }
}

/// Total-order estimates for one design, with the normalizing moments kept
/// for diagnostics. `f0` and `v_y` hold one entry when the estimator shares
/// a single mean/variance across inputs and k entries when it pools them
/// per input.
#[derive(Debug, Clone)]
pub struct TotalOrderEstimate {
    pub t: Vec<f64>,
    pub f0: Vec<f64>,
    pub v_y: Vec<f64>,
    pub n_negative: usize,
    pub n_above_one: usize,
}

impl TotalOrderEstimate {
    fn new(t: Vec<f64>, f0: Vec<f64>, v_y: Vec<f64>) -> Self {
        let n_negative = t.iter().filter(|&&v| v < 0.0).count();
        let n_above_one = t.iter().filter(|&&v| v > 1.0).count();
        Self {
            t,
            f0,
            v_y,
            n_negative,
            n_above_one,
        }
    }
}

/// Variogram and covariogram diagnostics attached to a star-design
/// estimate. `gamma_h` and `cov_h` are at the smallest lag; `gamma_lags`
/// keeps the variogram at every multiple of the step width for inspection.
#[derive(Debug, Clone)]
pub struct VariogramEstimate {
    pub gamma_h: Vec<f64>,
    pub cov_h: Vec<f64>,
    pub v_y: f64,
    pub gamma_lags: Vec<Vec<f64>>,
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

/// (1/N) Σ (a_j − ca)(b_j − cb).
///
/// The variance of A and every A-vs-swap cross moment go through this one
/// loop, so bitwise-equal inputs produce bitwise-equal moments.
fn centered_cross(a: &[f64], b: &[f64], ca: f64, cb: f64) -> f64 {
    let mut s = 0.0;
    for j in 0..a.len() {
        s += (a[j] - ca) * (b[j] - cb);
    }
    s / a.len() as f64
}

fn variance_or_err(a: &[f64], f0: f64, what: &'static str) -> Result<f64> {
    let v = centered_cross(a, a, f0, f0);
    if v <= 0.0 {
        return Err(Error::DegenerateOutput);
    }
    let _ = what;
    Ok(v)
}

/// Squared-difference form: T̂ᵢ = [1/(2N) Σ (y_A − y_ABᵢ)²] / V(y).
///
/// Nonnegative by construction; the workhorse the benchmark also uses for
/// its reference indices.
pub fn jansen_total(ev: &EvaluationSet) -> Result<TotalOrderEstimate> {
    let a = ev.base("jansen")?;
    let ab = ev.swapped(&ev.y_ab, a.len(), "jansen y_ab")?;
    let n = a.len() as f64;
    let f0 = mean(a);
    let v = variance_or_err(a, f0, "jansen")?;
    let t = ab
        .iter()
        .map(|abi| {
            let mut s = 0.0;
            for j in 0..a.len() {
                let d = a[j] - abi[j];
                s += d * d;
            }
            s / (2.0 * n) / v
        })
        .collect();
    Ok(TotalOrderEstimate::new(t, vec![f0], vec![v]))
}

/// Cross-product form: T̂ᵢ = [V(y) − (1/N) Σ y_A·y_ABᵢ + f0²] / V(y).
///
/// The cross moment is accumulated centered at f0 and corrected by
/// f0·(mean(y_ABᵢ) − f0), which is algebraically identical and keeps the
/// numerator an exact zero for inert inputs.
pub fn homma_saltelli_total(ev: &EvaluationSet) -> Result<TotalOrderEstimate> {
    let a = ev.base("homma-saltelli")?;
    let ab = ev.swapped(&ev.y_ab, a.len(), "homma-saltelli y_ab")?;
    let f0 = mean(a);
    let v = variance_or_err(a, f0, "homma-saltelli")?;
    let t = ab
        .iter()
        .map(|abi| {
            let c = centered_cross(a, abi, f0, f0);
            let correction = f0 * (mean(abi) - f0);
            (v - c - correction) / v
        })
        .collect();
    Ok(TotalOrderEstimate::new(t, vec![f0], vec![v]))
}

/// Pooled-moment form: T̂ᵢ = 1 − [(1/N) Σ y_A·y_ABᵢ − f0ᵢ²] / Vᵢ(y), where
/// f0ᵢ and Vᵢ(y) pool the A and A_Bᵢ lists symmetrically.
///
/// Centering both lists at the pooled mean reproduces the printed raw-moment
/// formula exactly: the cross terms collapse because the pooled mean is the
/// average of the two list means.
pub fn janon_monod_total(ev: &EvaluationSet) -> Result<TotalOrderEstimate> {
    let a = ev.base("janon-monod")?;
    let ab = ev.swapped(&ev.y_ab, a.len(), "janon-monod y_ab")?;
    let n = a.len() as f64;
    let k = ab.len();
    let mut t = Vec::with_capacity(k);
    let mut f0s = Vec::with_capacity(k);
    let mut vs = Vec::with_capacity(k);
    for abi in ab {
        let mut pooled = 0.0;
        for j in 0..a.len() {
            pooled += (a[j] + abi[j]) * 0.5;
        }
        let mu = pooled / n;
        let (mut num, mut sa, mut sb) = (0.0, 0.0, 0.0);
        for j in 0..a.len() {
            let da = a[j] - mu;
            let db = abi[j] - mu;
            num += da * db;
            sa += da * da;
            sb += db * db;
        }
        if sa + sb <= 0.0 {
            return Err(Error::DegenerateOutput);
        }
        // num/N over (sa+sb)/(2N); the power-of-two factors are exact.
        t.push(1.0 - 2.0 * num / (sa + sb));
        f0s.push(mu);
        vs.push((sa + sb) / (2.0 * n));
    }
    Ok(TotalOrderEstimate::new(t, f0s, vs))
}

/// Regression-slope form: T̂ᵢ = 1 − Σ(y_A − ȳ_A)(y_ABᵢ − ȳ_ABᵢ) / Σ(y_A − ȳ_A)²,
/// each list centered at its own mean, normalized by the A-side sum of squares.
pub fn glen_isaacs_total(ev: &EvaluationSet) -> Result<TotalOrderEstimate> {
    let a = ev.base("glen-isaacs")?;
    let ab = ev.swapped(&ev.y_ab, a.len(), "glen-isaacs y_ab")?;
    let ma = mean(a);
    let mut t = Vec::with_capacity(ab.len());
    for abi in ab {
        let mb = mean(abi);
        let (mut num, mut sa, mut sb) = (0.0, 0.0, 0.0);
        for j in 0..a.len() {
            let da = a[j] - ma;
            let db = abi[j] - mb;
            num += da * db;
            sa += da * da;
            sb += db * db;
        }
        if sa <= 0.0 || sb <= 0.0 {
            return Err(Error::DegenerateOutput);
        }
        // num == sa bitwise when the lists coincide, so inert inputs land on
        // exactly 1 − 1.
        t.push(1.0 - num / sa);
    }
    let va = centered_cross(a, a, ma, ma);
    Ok(TotalOrderEstimate::new(t, vec![ma], vec![va]))
}

/// B-matrix numerator form: T̂ᵢ = 1 − [(1/N) Σ y_B·y_BAᵢ − f0²] / V(y), with
/// f0 and V(y) taken from the A outputs.
pub fn saltelli2008_total(ev: &EvaluationSet) -> Result<TotalOrderEstimate> {
    let a = ev.base("saltelli-2008")?;
    let b = ev.second("saltelli-2008")?;
    let ba = ev.swapped(&ev.y_ba, a.len(), "saltelli-2008 y_ba")?;
    let f0 = mean(a);
    let v = variance_or_err(a, f0, "saltelli-2008")?;
    let mb = mean(b);
    let t = ba
        .iter()
        .map(|bai| {
            let cc = centered_cross(b, bai, f0, f0);
            // (1/N) Σ y_B·y_BAᵢ − f0², re-expanded from the centered sum.
            let cross = cc + f0 * (mb - f0) + f0 * (mean(bai) - f0);
            1.0 - cross / v
        })
        .collect();
    Ok(TotalOrderEstimate::new(t, vec![f0], vec![v]))
}

/// Double-difference form:
/// T̂ᵢ = Σ[(y_B − y_BAᵢ)² + (y_A − y_ABᵢ)²] / Σ[(y_A − y_B)² + (y_BAᵢ − y_ABᵢ)²].
///
/// Nonnegative by construction, and exactly 0 for inert inputs because both
/// numerator differences vanish termwise.
pub fn azzini_rosati_total(ev: &EvaluationSet) -> Result<TotalOrderEstimate> {
    let a = ev.base("azzini-rosati")?;
    let b = ev.second("azzini-rosati")?;
    let ab = ev.swapped(&ev.y_ab, a.len(), "azzini-rosati y_ab")?;
    let ba = ev.swapped(&ev.y_ba, a.len(), "azzini-rosati y_ba")?;
    if ab.len() != ba.len() {
        return Err(Error::LengthMismatch {
            got: ba.len(),
            expected: ab.len(),
            context: "y_ba input count",
        });
    }
    let n = a.len() as f64;
    let k = ab.len();
    let mut t = Vec::with_capacity(k);
    let mut vs = Vec::with_capacity(k);
    for i in 0..k {
        let (abi, bai) = (&ab[i], &ba[i]);
        let (mut num, mut den) = (0.0, 0.0);
        for j in 0..a.len() {
            let d1 = b[j] - bai[j];
            let d2 = a[j] - abi[j];
            num += d1 * d1 + d2 * d2;
            let d3 = a[j] - b[j];
            let d4 = bai[j] - abi[j];
            den += d3 * d3 + d4 * d4;
        }
        if den <= 0.0 {
            return Err(Error::DegenerateOutput);
        }
        t.push(num / den);
        // The denominator estimates 4N·V(y); keep the implied variance.
        vs.push(den / (4.0 * n));
    }
    Ok(TotalOrderEstimate::new(t, Vec::new(), vs))
}

/// C-matrix form: T̂ᵢ = [V(y) − (1/N) Σ (y_B − y_CBᵢ)(y_BAᵢ − y_A)] / V(y),
/// with f0 and V(y) pooled symmetrically over the A and B outputs (the only
/// two full random output lists this design provides).
pub fn pseudo_owen_total(ev: &EvaluationSet) -> Result<TotalOrderEstimate> {
    let a = ev.base("pseudo-owen")?;
    let b = ev.second("pseudo-owen")?;
    let ba = ev.swapped(&ev.y_ba, a.len(), "pseudo-owen y_ba")?;
    let cb = ev.swapped(&ev.y_cb, a.len(), "pseudo-owen y_cb")?;
    if ba.len() != cb.len() {
        return Err(Error::LengthMismatch {
            got: cb.len(),
            expected: ba.len(),
            context: "y_cb input count",
        });
    }
    let n = a.len() as f64;
    let mut pooled = 0.0;
    for j in 0..a.len() {
        pooled += (a[j] + b[j]) * 0.5;
    }
    let f0 = pooled / n;
    let mut v = 0.0;
    for j in 0..a.len() {
        let da = a[j] - f0;
        let db = b[j] - f0;
        v += (da * da + db * db) * 0.5;
    }
    v /= n;
    if v <= 0.0 {
        return Err(Error::DegenerateOutput);
    }
    let k = ba.len();
    let mut t = Vec::with_capacity(k);
    for i in 0..k {
        let (bai, cbi) = (&ba[i], &cb[i]);
        let mut s = 0.0;
        for j in 0..a.len() {
            s += (b[j] - cbi[j]) * (bai[j] - a[j]);
        }
        t.push((v - s / n) / v);
    }
    Ok(TotalOrderEstimate::new(t, vec![f0], vec![v]))
}

/// Star-design form: T̂ᵢ = (E[γᵢ(Δh)] + E[Cᵢ(Δh)]) / V(y).
///
/// γᵢ pools ½(y_a − y_b)² over every consecutive within-section pair of
/// every star; Cᵢ is the per-star sample covariance of those pairs (pair-set
/// means, denominator = pair count) averaged over stars; V(y) is the
/// variance of all star outputs together.
pub fn vars_total(star: &StarSample, y: &[f64]) -> Result<(TotalOrderEstimate, VariogramEstimate)> {
    let n_stars = star.centers.rows();
    let k = star.centers.cols();
    if y.len() != star.points.rows() {
        return Err(Error::LengthMismatch {
            got: y.len(),
            expected: star.points.rows(),
            context: "star outputs",
        });
    }
    if y.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidInput(
            "star outputs contain a non-finite value".to_string(),
        ));
    }
    if n_stars < 2 {
        return Err(Error::InvalidInput(
            "variogram estimation needs at least two stars".to_string(),
        ));
    }
    let sections_n = star.sections[0][0].len();
    let pairs = sections_n - 1;
    if pairs < 2 {
        return Err(Error::TooFewPairs { dim: 0, pairs });
    }

    let my = mean(y);
    let v_y = centered_cross(y, y, my, my);
    if v_y <= 0.0 {
        return Err(Error::DegenerateOutput);
    }

    let mut gamma_h = vec![0.0; k];
    let mut cov_h = vec![0.0; k];
    let mut gamma_lags = vec![vec![0.0; pairs]; k];
    for dim in 0..k {
        let mut gamma_sum = 0.0;
        let mut cov_sum = 0.0;
        let mut lag_sums = vec![0.0; pairs];
        for s in 0..n_stars {
            let idxs = &star.sections[s][dim];
            // Shift by the first section value so constant sections cancel
            // to literal zeros rather than rounding residue.
            let y0 = y[idxs[0]];
            let (mut left_sum, mut right_sum) = (0.0, 0.0);
            for j in 0..pairs {
                let ya = y[idxs[j]];
                let yb = y[idxs[j + 1]];
                let d = ya - yb;
                gamma_sum += 0.5 * d * d;
                left_sum += ya - y0;
                right_sum += yb - y0;
            }
            let ml = left_sum / pairs as f64;
            let mr = right_sum / pairs as f64;
            let mut cov = 0.0;
            for j in 0..pairs {
                cov += (y[idxs[j]] - y0 - ml) * (y[idxs[j + 1]] - y0 - mr);
            }
            cov_sum += cov / pairs as f64;
            for lag in 1..=pairs {
                for j in 0..=(pairs - lag) {
                    let d = y[idxs[j]] - y[idxs[j + lag]];
                    lag_sums[lag - 1] += 0.5 * d * d;
                }
            }
        }
        gamma_h[dim] = gamma_sum / (n_stars * pairs) as f64;
        cov_h[dim] = cov_sum / n_stars as f64;
        for lag in 1..=pairs {
            let count = n_stars * (pairs - lag + 1);
            gamma_lags[dim][lag - 1] = lag_sums[lag - 1] / count as f64;
        }
    }

    let t: Vec<f64> = (0..k).map(|i| (gamma_h[i] + cov_h[i]) / v_y).collect();
    let estimate = TotalOrderEstimate::new(t, vec![my], vec![v_y]);
    let diag = VariogramEstimate {
        gamma_h,
        cov_h,
        v_y,
        gamma_lags,
    };
    Ok((estimate, diag))
}

/// First-order index Sᵢ = [(1/N) Σ y_B·(y_ABᵢ − y_A)] / V(y), with f0 and
/// V(y) from the A outputs.
pub fn first_order_si(ev: &EvaluationSet) -> Result<Vec<f64>> {
    let a = ev.base("first-order")?;
    let b = ev.second("first-order")?;
    let ab = ev.swapped(&ev.y_ab, a.len(), "first-order y_ab")?;
    let n = a.len() as f64;
    let f0 = mean(a);
    let v = variance_or_err(a, f0, "first-order")?;
    Ok(ab
        .iter()
        .map(|abi| {
            let (mut s1, mut s2) = (0.0, 0.0);
            for j in 0..a.len() {
                let d = abi[j] - a[j];
                s1 += (b[j] - f0) * d;
                s2 += d;
            }
            (s1 + f0 * s2) / n / v
        })
        .collect())
}

/// The eight estimators by their stable command-line identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EstimatorId {
    Jansen,
    HommaSaltelli,
    JanonMonod,
    GlenIsaacs,
    Saltelli2008,
    AzziniRosati,
    PseudoOwen,
    RazaviGupta,
}

impl EstimatorId {
    pub const ALL: [EstimatorId; 8] = [
        EstimatorId::Jansen,
        EstimatorId::HommaSaltelli,
        EstimatorId::JanonMonod,
        EstimatorId::GlenIsaacs,
        EstimatorId::Saltelli2008,
        EstimatorId::AzziniRosati,
        EstimatorId::PseudoOwen,
        EstimatorId::RazaviGupta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EstimatorId::Jansen => "jansen",
            EstimatorId::HommaSaltelli => "homma-saltelli",
            EstimatorId::JanonMonod => "janon-monod",
            EstimatorId::GlenIsaacs => "glen-isaacs",
            EstimatorId::Saltelli2008 => "saltelli-2008",
            EstimatorId::AzziniRosati => "azzini-rosati",
            EstimatorId::PseudoOwen => "pseudo-owen",
            EstimatorId::RazaviGupta => "razavi-gupta",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|e| e.name() == name)
            .ok_or_else(|| Error::InvalidInput(format!("unknown estimator '{name}'")))
    }

    /// The design family this estimator consumes.
    pub fn class(self) -> EstimatorClass {
        match self {
            EstimatorId::Jansen
            | EstimatorId::HommaSaltelli
            | EstimatorId::JanonMonod
            | EstimatorId::GlenIsaacs => EstimatorClass::AbK,
            EstimatorId::Saltelli2008 => EstimatorClass::AbKPlusB,
            EstimatorId::AzziniRosati => EstimatorClass::DoubleRadial,
            EstimatorId::PseudoOwen => EstimatorClass::PseudoOwen,
            EstimatorId::RazaviGupta => EstimatorClass::Stars,
        }
    }

    /// Run a matrix-design estimator. The star-design estimator has a
    /// different input shape; call [`vars_total`] for it.
    pub fn run_matrix(self, ev: &EvaluationSet) -> Result<TotalOrderEstimate> {
        match self {
            EstimatorId::Jansen => jansen_total(ev),
            EstimatorId::HommaSaltelli => homma_saltelli_total(ev),
            EstimatorId::JanonMonod => janon_monod_total(ev),
            EstimatorId::GlenIsaacs => glen_isaacs_total(ev),
            EstimatorId::Saltelli2008 => saltelli2008_total(ev),
            EstimatorId::AzziniRosati => azzini_rosati_total(ev),
            EstimatorId::PseudoOwen => pseudo_owen_total(ev),
            EstimatorId::RazaviGupta => Err(Error::InvalidInput(
                "razavi-gupta runs on star samples, not matrix designs".to_string(),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{build_design, build_star_design, sobol_points, SampleMatrix};
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn eval_rows(m: &SampleMatrix, f: &dyn Fn(&[f64]) -> f64) -> Vec<f64> {
        (0..m.rows()).map(|r| f(m.row(r))).collect()
    }

    fn eval_bundle(
        base: &SampleMatrix,
        class: EstimatorClass,
        f: &dyn Fn(&[f64]) -> f64,
    ) -> EvaluationSet {
        let bundle = build_design(base, class).unwrap();
        EvaluationSet {
            y_a: eval_rows(&bundle.a, f),
            y_b: bundle
                .b
                .as_ref()
                .map(|m| eval_rows(m, f))
                .unwrap_or_default(),
            y_ab: bundle.ab.iter().map(|m| eval_rows(m, f)).collect(),
            y_ba: bundle.ba.iter().map(|m| eval_rows(m, f)).collect(),
            y_cb: bundle.cb.iter().map(|m| eval_rows(m, f)).collect(),
        }
    }

    fn random_ev(rng: &mut ChaCha8Rng, n: usize, k: usize) -> EvaluationSet {
        let draw = |rng: &mut ChaCha8Rng| (0..n).map(|_| rng.gen_range(-3.0..3.0)).collect();
        EvaluationSet {
            y_a: draw(rng),
            y_b: draw(rng),
            y_ab: (0..k).map(|_| draw(rng)).collect(),
            y_ba: (0..k).map(|_| draw(rng)).collect(),
            y_cb: (0..k).map(|_| draw(rng)).collect(),
        }
    }

    // ------------------------------------------------------------------
    // exactness contracts
    // ------------------------------------------------------------------

    #[test]
    fn inert_inputs_give_exact_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let mut ev = random_ev(&mut rng, 33, 3);
            ev.y_ab[1] = ev.y_a.clone();
            ev.y_ba[1] = ev.y_b.clone();
            for est in [
                EstimatorId::Jansen,
                EstimatorId::HommaSaltelli,
                EstimatorId::JanonMonod,
                EstimatorId::GlenIsaacs,
                EstimatorId::AzziniRosati,
            ] {
                let got = est.run_matrix(&ev).unwrap();
                assert_eq!(got.t[1], 0.0, "{} not exactly zero", est.name());
                assert!(got.t[0] != 0.0 && got.t[2] != 0.0);
            }
        }
    }

    #[test]
    fn glen_isaacs_anticorrelated_lists_hit_exactly_two() {
        let a = vec![1.0, -1.0, 2.0, -2.0, 0.5, -0.5];
        let ab = a.iter().map(|v| -v).collect::<Vec<_>>();
        let ev = EvaluationSet {
            y_a: a,
            y_ab: vec![ab],
            ..Default::default()
        };
        let got = glen_isaacs_total(&ev).unwrap();
        assert_eq!(got.t[0], 2.0);
        assert_eq!(got.n_above_one, 1);
    }

    #[test]
    fn azzini_rosati_swapped_lists_hit_exactly_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let a: Vec<f64> = (0..40).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let b: Vec<f64> = (0..40).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let ev = EvaluationSet {
            y_ab: vec![b.clone()],
            y_ba: vec![a.clone()],
            y_a: a,
            y_b: b,
            ..Default::default()
        };
        let got = azzini_rosati_total(&ev).unwrap();
        assert_eq!(got.t[0], 1.0);
    }

    #[test]
    fn pseudo_owen_single_active_input_hits_exactly_one() {
        // y depends only on x_1, so C_B^(1) evaluates identically to B and
        // the correction term vanishes termwise.
        let base = sobol_points(256, 9, Some(5)).unwrap();
        let f = |row: &[f64]| (row[1] * 2.7).exp();
        let ev = eval_bundle(&base, EstimatorClass::PseudoOwen, &f);
        let got = pseudo_owen_total(&ev).unwrap();
        assert_eq!(got.t[1], 1.0);
        // Inert inputs drift around 0 but are not exact for this form.
        assert!(got.t[0].abs() < 0.2 && got.t[2].abs() < 0.2);
    }

    #[test]
    fn vars_inert_inputs_give_exact_zero() {
        let centers = sobol_points(16, 3, Some(7)).unwrap();
        let star = build_star_design(&centers, 0.2).unwrap();
        let y = eval_rows(&star.points, &|row: &[f64]| row[0].powi(3) + 0.25);
        let (got, diag) = vars_total(&star, &y).unwrap();
        assert_eq!(got.t[1], 0.0);
        assert_eq!(got.t[2], 0.0);
        assert!(got.t[0] > 0.5);
        assert_eq!(diag.gamma_h[1], 0.0);
        assert_eq!(diag.cov_h[2], 0.0);
    }

    // ------------------------------------------------------------------
    // analytic oracles
    // ------------------------------------------------------------------

    /// Total-order indices of sin(x1) + a·sin²(x2) + b·x3⁴·sin(x1) on
    /// [-pi, pi]³: V1 = (1 + b·pi⁴/5)²/2, V2 = a²/8, V13 = 8·b²·pi⁸/225.
    fn ishigami_truth(a: f64, b: f64) -> [f64; 3] {
        let v1 = 0.5 * (1.0 + b * PI.powi(4) / 5.0).powi(2);
        let v2 = a * a / 8.0;
        let v13 = 8.0 * b * b * PI.powi(8) / 225.0;
        let v = v1 + v2 + v13;
        [(v1 + v13) / v, v2 / v, v13 / v]
    }

    fn ishigami(row: &[f64]) -> f64 {
        let x: Vec<f64> = row.iter().map(|u| PI * (2.0 * u - 1.0)).collect();
        x[0].sin() + 7.0 * x[1].sin().powi(2) + 0.1 * x[2].powi(4) * x[0].sin()
    }

    #[test]
    fn matrix_estimators_match_ishigami_decomposition() {
        let truth = ishigami_truth(7.0, 0.1);
        let n = 1 << 14;
        let base2 = sobol_points(n, 6, None).unwrap();
        let ev2 = eval_bundle(&base2, EstimatorClass::DoubleRadial, &ishigami);
        let base3 = sobol_points(n, 9, None).unwrap();
        let ev3 = eval_bundle(&base3, EstimatorClass::PseudoOwen, &ishigami);
        for (est, tol) in [
            (EstimatorId::Jansen, 0.02),
            (EstimatorId::JanonMonod, 0.02),
            (EstimatorId::AzziniRosati, 0.02),
            (EstimatorId::HommaSaltelli, 0.05),
            (EstimatorId::GlenIsaacs, 0.05),
            (EstimatorId::Saltelli2008, 0.05),
            (EstimatorId::PseudoOwen, 0.05),
        ] {
            let ev = if est == EstimatorId::PseudoOwen {
                &ev3
            } else {
                &ev2
            };
            let got = est.run_matrix(ev).unwrap();
            for i in 0..3 {
                assert!(
                    (got.t[i] - truth[i]).abs() < tol,
                    "{}: T[{i}] = {} vs {}",
                    est.name(),
                    got.t[i],
                    truth[i]
                );
            }
        }
    }

    #[test]
    fn vars_ranks_ishigami_correctly() {
        let truth = ishigami_truth(7.0, 0.1);
        let centers = sobol_points(256, 3, Some(21)).unwrap();
        let star = build_star_design(&centers, 0.2).unwrap();
        let y = eval_rows(&star.points, &ishigami);
        let (got, _) = vars_total(&star, &y).unwrap();
        let tau = crate::metrics::kendall_tau_b(
            &crate::metrics::ranks_from_values(&got.t),
            &crate::metrics::ranks_from_values(&truth),
        )
        .unwrap();
        assert_eq!(tau, 1.0);
    }

    #[test]
    fn estimators_agree_on_smooth_additive_function() {
        let f = |row: &[f64]| row[0] + 2.0 * row[1] + 3.0 * row[2] + 4.0 * row[3];
        let n = 1 << 14;
        let base = sobol_points(n, 12, None).unwrap();
        let base2 = base.column_block(0, 8).unwrap();
        let mut values: Vec<(EstimatorId, Vec<f64>)> = Vec::new();
        for est in [
            EstimatorId::Jansen,
            EstimatorId::HommaSaltelli,
            EstimatorId::JanonMonod,
            EstimatorId::GlenIsaacs,
            EstimatorId::Saltelli2008,
            EstimatorId::AzziniRosati,
            EstimatorId::PseudoOwen,
        ] {
            let ev = if est == EstimatorId::PseudoOwen {
                eval_bundle(&base, EstimatorClass::PseudoOwen, &f)
            } else {
                eval_bundle(&base2, est.class(), &f)
            };
            values.push((est, est.run_matrix(&ev).unwrap().t));
        }
        for (ea, ta) in &values {
            for (eb, tb) in &values {
                for i in 0..4 {
                    assert!(
                        (ta[i] - tb[i]).abs() < 0.05,
                        "{} vs {} at input {i}: {} vs {}",
                        ea.name(),
                        eb.name(),
                        ta[i],
                        tb[i]
                    );
                }
            }
        }
        // The star-design estimator ranks the same even though its values
        // carry a step-width bias.
        let centers = sobol_points(128, 4, Some(3)).unwrap();
        let star = build_star_design(&centers, 0.2).unwrap();
        let y = eval_rows(&star.points, &f);
        let (vars, _) = vars_total(&star, &y).unwrap();
        let tau = crate::metrics::kendall_tau_b(
            &crate::metrics::ranks_from_values(&vars.t),
            &crate::metrics::ranks_from_values(&values[0].1),
        )
        .unwrap();
        assert_eq!(tau, 1.0);
    }

    #[test]
    fn linear_function_gives_quadratic_variogram() {
        let coef = [1.5, -2.0, 0.5];
        let f = |row: &[f64]| row.iter().zip(&coef).map(|(x, c)| x * c).sum::<f64>();
        let centers = sobol_points(32, 3, Some(4)).unwrap();
        let delta_h = 0.2;
        let star = build_star_design(&centers, delta_h).unwrap();
        let y = eval_rows(&star.points, &f);
        let (_, diag) = vars_total(&star, &y).unwrap();
        for i in 0..3 {
            let want = (coef[i] * delta_h).powi(2) / 2.0;
            assert_abs_diff_eq!(diag.gamma_h[i], want, epsilon = 1e-12);
        }
    }

    #[test]
    fn first_order_splits_additive_variance() {
        let f = |row: &[f64]| row[0] + 2.0 * row[1] + 3.0 * row[2];
        let base = sobol_points(1 << 13, 6, None).unwrap();
        let ev = eval_bundle(&base, EstimatorClass::DoubleRadial, &f);
        let si = first_order_si(&ev).unwrap();
        let total: f64 = [1.0f64, 4.0, 9.0].iter().sum();
        for (i, c2) in [1.0, 4.0, 9.0].iter().enumerate() {
            assert!((si[i] - c2 / total).abs() < 0.01, "S[{i}] = {}", si[i]);
        }
        assert!(si.iter().sum::<f64>() <= 1.02);
    }

    // ------------------------------------------------------------------
    // structural properties
    // ------------------------------------------------------------------

    #[test]
    fn squared_form_estimators_never_negative() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..2000 {
            let n = rng.gen_range(4..48);
            let k = rng.gen_range(1..6);
            let ev = random_ev(&mut rng, n, k);
            let j = jansen_total(&ev).unwrap();
            let z = azzini_rosati_total(&ev).unwrap();
            assert!(j.t.iter().all(|&v| v >= 0.0));
            assert!(z.t.iter().all(|&v| v >= 0.0));
            assert_eq!(j.n_negative, 0);
            assert_eq!(z.n_negative, 0);
        }
    }

    #[test]
    fn estimates_are_scale_equivariant() {
        // Every estimator is a ratio of second moments, so scaling the
        // output changes nothing. Shifting it is different: the
        // covariance-style forms that subtract f0 computed from A alone
        // (Homma-Saltelli, Saltelli-2008) are shift-invariant only in
        // expectation, the rest exactly.
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        let ev = random_ev(&mut rng, 64, 4);
        let map_ev = |f: &dyn Fn(f64) -> f64| EvaluationSet {
            y_a: ev.y_a.iter().map(|&y| f(y)).collect(),
            y_b: ev.y_b.iter().map(|&y| f(y)).collect(),
            y_ab: ev
                .y_ab
                .iter()
                .map(|v| v.iter().map(|&y| f(y)).collect())
                .collect(),
            y_ba: ev
                .y_ba
                .iter()
                .map(|v| v.iter().map(|&y| f(y)).collect())
                .collect(),
            y_cb: ev
                .y_cb
                .iter()
                .map(|v| v.iter().map(|&y| f(y)).collect())
                .collect(),
        };
        let scaled = map_ev(&|y| 3.0 * y);
        let shifted = map_ev(&|y| 3.0 * y - 7.0);
        let all = [
            EstimatorId::Jansen,
            EstimatorId::HommaSaltelli,
            EstimatorId::JanonMonod,
            EstimatorId::GlenIsaacs,
            EstimatorId::Saltelli2008,
            EstimatorId::AzziniRosati,
            EstimatorId::PseudoOwen,
        ];
        let shift_invariant = [
            EstimatorId::Jansen,
            EstimatorId::JanonMonod,
            EstimatorId::GlenIsaacs,
            EstimatorId::AzziniRosati,
            EstimatorId::PseudoOwen,
        ];
        for est in all {
            let base = est.run_matrix(&ev).unwrap();
            let moved = est.run_matrix(&scaled).unwrap();
            for i in 0..4 {
                assert_abs_diff_eq!(base.t[i], moved.t[i], epsilon = 1e-9);
            }
            if shift_invariant.contains(&est) {
                let moved = est.run_matrix(&shifted).unwrap();
                for i in 0..4 {
                    assert_abs_diff_eq!(base.t[i], moved.t[i], epsilon = 1e-9);
                }
            }
        }
        let centers = sobol_points(16, 3, Some(2)).unwrap();
        let star = build_star_design(&centers, 0.2).unwrap();
        let y = eval_rows(&star.points, &|r: &[f64]| r[0] * r[1] + r[2]);
        let y2: Vec<f64> = y.iter().map(|&v| 3.0 * v - 7.0).collect();
        let (a, _) = vars_total(&star, &y).unwrap();
        let (b, _) = vars_total(&star, &y2).unwrap();
        for i in 0..3 {
            assert_abs_diff_eq!(a.t[i], b.t[i], epsilon = 1e-9);
        }
    }

    #[test]
    fn degenerate_outputs_are_errors() {
        let flat = vec![2.5; 16];
        let ev = EvaluationSet {
            y_a: flat.clone(),
            y_b: flat.clone(),
            y_ab: vec![flat.clone()],
            y_ba: vec![flat.clone()],
            y_cb: vec![flat.clone()],
        };
        for est in [
            EstimatorId::Jansen,
            EstimatorId::HommaSaltelli,
            EstimatorId::JanonMonod,
            EstimatorId::GlenIsaacs,
            EstimatorId::Saltelli2008,
            EstimatorId::AzziniRosati,
            EstimatorId::PseudoOwen,
        ] {
            assert!(est.run_matrix(&ev).is_err(), "{}", est.name());
        }
        let centers = sobol_points(4, 2, Some(2)).unwrap();
        let star = build_star_design(&centers, 0.2).unwrap();
        let y = vec![1.0; star.points.rows()];
        assert!(vars_total(&star, &y).is_err());
    }

    #[test]
    fn vars_rejects_thin_designs() {
        let centers = sobol_points(4, 2, Some(2)).unwrap();
        // 1/0.5 = 2 sections leave a single pair per section.
        let star = build_star_design(&centers, 0.5).unwrap();
        let y: Vec<f64> = (0..star.points.rows()).map(|i| i as f64).collect();
        assert!(matches!(
            vars_total(&star, &y),
            Err(Error::TooFewPairs { .. })
        ));
        let one = sobol_points(1, 2, Some(2)).unwrap();
        let star1 = build_star_design(&one, 0.2).unwrap();
        let y1: Vec<f64> = (0..star1.points.rows()).map(|i| i as f64).collect();
        assert!(vars_total(&star1, &y1).is_err());
    }

    #[test]
    fn out_of_range_bookkeeping_matches_contents() {
        let est = TotalOrderEstimate::new(vec![-0.1, 0.5, 1.2, 0.0, 1.0], vec![], vec![]);
        assert_eq!(est.n_negative, 1);
        assert_eq!(est.n_above_one, 1);
    }

    #[test]
    fn estimator_names_roundtrip() {
        for est in EstimatorId::ALL {
            assert_eq!(EstimatorId::parse(est.name()).unwrap(), est);
        }
        assert!(EstimatorId::parse("sobol").is_err());
        assert_eq!(EstimatorId::RazaviGupta.class(), EstimatorClass::Stars);
        assert!(EstimatorId::RazaviGupta
            .run_matrix(&EvaluationSet::default())
            .is_err());
    }

    #[test]
    fn missing_lists_are_rejected() {
        let ev = EvaluationSet {
            y_a: vec![1.0, 2.0],
            ..Default::default()
        };
        assert!(jansen_total(&ev).is_err());
        assert!(saltelli2008_total(&ev).is_err());
        let bad = EvaluationSet {
            y_a: vec![1.0, 2.0],
            y_ab: vec![vec![1.0]],
            ..Default::default()
        };
        assert!(matches!(
            jansen_total(&bad),
            Err(Error::LengthMismatch { .. })
        ));
    }
}
