//! Input marginals and quantile transforms.
//!
//! Seven fixed marginal distributions on the unit interval are supported.
//! Quantiles are obtained by numeric inversion of the distribution function
//! with a bracketed Newton iteration, converged to an absolute tolerance of
//! `1e-10` on the abscissa. The beta family members used here have small
//! integer or half-integer parameters, so their distribution functions are
//! evaluated in closed form; the normal-based members go through the error
//! function.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::function::erf::erfc;

use crate::error::{Error, Result};
use crate::sampling::SampleMatrix;

/// Marginal distribution of one model input, supported on the unit interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Marginal {
    /// Uniform on `[0, 1]`.
    Uniform,
    /// Normal(0.5, 0.15) truncated to `(0, 1)`.
    TruncNormal,
    /// Beta(8, 2): mass piled near 1.
    Beta82,
    /// Beta(2, 8): mass piled near 0.
    Beta28,
    /// Beta(0.5, 0.5), the arcsine law: mass at both ends.
    ArcSine,
    /// Beta(2, 2): symmetric hump.
    BetaSym,
    /// Logit-normal(0, 1).
    LogitNormal,
}

/// The seven concrete marginals, in family-identifier order.
pub const MARGINALS: [Marginal; 7] = [
    Marginal::Uniform,
    Marginal::TruncNormal,
    Marginal::Beta82,
    Marginal::Beta28,
    Marginal::ArcSine,
    Marginal::BetaSym,
    Marginal::LogitNormal,
];

const TN_MEAN: f64 = 0.5;
const TN_SD: f64 = 0.15;

/// Standard normal distribution function.
fn std_normal_cdf(t: f64) -> f64 {
    0.5 * erfc(-t / std::f64::consts::SQRT_2)
}

fn std_normal_pdf(t: f64) -> f64 {
    (-(t * t) / 2.0).exp() / (2.0 * std::f64::consts::PI).sqrt()
}

/// Mass of the untruncated Normal(0.5, 0.15) inside `(0, 1)`.
fn trunc_normal_mass() -> f64 {
    let lo = std_normal_cdf((0.0 - TN_MEAN) / TN_SD);
    let hi = std_normal_cdf((1.0 - TN_MEAN) / TN_SD);
    hi - lo
}

/// Distribution function of a marginal, valid on `[0, 1]`.
pub fn cdf(m: Marginal, x: f64) -> f64 {
    let x = x.clamp(0.0, 1.0);
    match m {
        Marginal::Uniform => x,
        Marginal::TruncNormal => {
            let lo = std_normal_cdf((0.0 - TN_MEAN) / TN_SD);
            (std_normal_cdf((x - TN_MEAN) / TN_SD) - lo) / trunc_normal_mass()
        }
        // I_x(8, 2) = 9 x^8 - 8 x^9.
        Marginal::Beta82 => {
            let x8 = x.powi(8);
            x8 * (9.0 - 8.0 * x)
        }
        // I_x(2, 8) = 1 - I_{1-x}(8, 2).
        Marginal::Beta28 => {
            let y = 1.0 - x;
            let y8 = y.powi(8);
            1.0 - y8 * (1.0 + 8.0 * x)
        }
        Marginal::ArcSine => (2.0 / std::f64::consts::PI) * x.sqrt().asin(),
        // I_x(2, 2) = x^2 (3 - 2x).
        Marginal::BetaSym => x * x * (3.0 - 2.0 * x),
        Marginal::LogitNormal => {
            if x <= 0.0 {
                0.0
            } else if x >= 1.0 {
                1.0
            } else {
                std_normal_cdf((x / (1.0 - x)).ln())
            }
        }
    }
}

/// Density of a marginal on the open unit interval.
fn pdf(m: Marginal, x: f64) -> f64 {
    match m {
        Marginal::Uniform => 1.0,
        Marginal::TruncNormal => {
            std_normal_pdf((x - TN_MEAN) / TN_SD) / (TN_SD * trunc_normal_mass())
        }
        Marginal::Beta82 => 72.0 * x.powi(7) * (1.0 - x),
        Marginal::Beta28 => 72.0 * x * (1.0 - x).powi(7),
        Marginal::ArcSine => 1.0 / (std::f64::consts::PI * (x * (1.0 - x)).sqrt()),
        Marginal::BetaSym => 6.0 * x * (1.0 - x),
        Marginal::LogitNormal => {
            let t = (x / (1.0 - x)).ln();
            std_normal_pdf(t) / (x * (1.0 - x))
        }
    }
}

const QUANTILE_TOL: f64 = 1e-10;
const QUANTILE_MAX_ITER: usize = 200;

/// Quantile of a marginal at probability `p` in `(0, 1)`.
///
/// Inversion keeps a shrinking bracket around the root and takes Newton
/// steps while they stay inside it, falling back to bisection otherwise.
pub fn quantile(m: Marginal, p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) || !p.is_finite() {
        return Err(Error::ProbabilityOutOfRange(p));
    }
    if m == Marginal::Uniform {
        return Ok(p);
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let mut x = 0.5;
    for _ in 0..QUANTILE_MAX_ITER {
        let resid = cdf(m, x) - p;
        if resid > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        let d = pdf(m, x);
        let newton = if d.is_finite() && d > 1e-300 {
            x - resid / d
        } else {
            f64::NAN
        };
        let next = if newton.is_finite() && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        let step = (next - x).abs();
        x = next;
        if step <= QUANTILE_TOL {
            return Ok(x);
        }
    }
    Err(Error::QuantileDiverged {
        tol: QUANTILE_TOL,
        max_iter: QUANTILE_MAX_ITER,
    })
}

/// Assigns a marginal to each of `k` inputs for family identifier `phi`.
///
/// Identifiers 1 through 7 assign that single marginal to every input;
/// identifier 8 draws one of the seven independently per input from a
/// seeded stream.
pub fn phi_assign(phi: u8, k: usize, seed: u64) -> Result<Vec<Marginal>> {
    if !(1..=8).contains(&phi) {
        return Err(Error::InvalidInput(format!(
            "distribution family identifier must be 1..=8, got {phi}"
        )));
    }
    if k == 0 {
        return Err(Error::InvalidInput("phi_assign needs k >= 1".to_string()));
    }
    if phi <= 7 {
        return Ok(vec![MARGINALS[phi as usize - 1]; k]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..k).map(|_| MARGINALS[rng.gen_range(0..7)]).collect())
}

/// Unit-cube values are nudged inside the open interval before inversion so
/// that exact 0 or 1 coordinates (possible for star sections on the domain
/// boundary) stay transformable.
const P_FLOOR: f64 = 1e-15;

/// Transforms each column of a unit-cube sample by its marginal quantile.
pub fn transform_matrix(m: &SampleMatrix, dv: &[Marginal]) -> Result<SampleMatrix> {
    if dv.len() != m.cols() {
        return Err(Error::LengthMismatch {
            got: dv.len(),
            expected: m.cols(),
            context: "marginal vector vs matrix columns",
        });
    }
    let p_ceil = 1.0 - f64::EPSILON / 2.0;
    let mut data = Vec::with_capacity(m.rows() * m.cols());
    for r in 0..m.rows() {
        let row = m.row(r);
        for (c, &marginal) in dv.iter().enumerate() {
            if marginal == Marginal::Uniform {
                data.push(row[c]);
            } else {
                let p = row[c].clamp(P_FLOOR, p_ceil);
                data.push(quantile(marginal, p)?);
            }
        }
    }
    SampleMatrix::new(m.rows(), m.cols(), data)
}
