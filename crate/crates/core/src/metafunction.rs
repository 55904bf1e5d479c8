//! Seeded random test functions.
//!
//! A metafunction instance over `k` inputs is a random mixture drawn from a
//! fixed alphabet of ten univariate behaviors (cubic, discontinuous,
//! exponential, inverse, linear, inert, non-monotonic, periodic, quadratic,
//! trigonometric). Each input gets one behavior; a fraction `k2` of all
//! input pairs and `k3` of all input triples become interaction terms whose
//! factors are the member behaviors. Every active term carries a
//! coefficient drawn from a two-component normal mixture
//! `0.3 N(0, 5^2) + 0.7 N(0, 0.5^2)` (component scales are standard
//! deviations), which yields a few dominant effects and many minor ones.
//!
//! The generator seed is split into independent substreams for the behavior
//! assignment, the interaction selection, the coefficients, and the
//! marginal assignment used elsewhere, so instances with the same seed are
//! reproducible piece by piece.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::sampling::SampleMatrix;

/// The ten univariate behaviors, in identifier order 1 through 10.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Univariate {
    Cubic,
    Discontinuous,
    Exponential,
    Inverse,
    Linear,
    NoEffect,
    NonMonotonic,
    Periodic,
    Quadratic,
    Trigonometric,
}

pub const UNIVARIATES: [Univariate; 10] = [
    Univariate::Cubic,
    Univariate::Discontinuous,
    Univariate::Exponential,
    Univariate::Inverse,
    Univariate::Linear,
    Univariate::NoEffect,
    Univariate::NonMonotonic,
    Univariate::Periodic,
    Univariate::Quadratic,
    Univariate::Trigonometric,
];

/// Evaluates one univariate behavior on `[0, 1]`.
pub fn univariate(f: Univariate, x: f64) -> f64 {
    match f {
        Univariate::Cubic => x * x * x,
        Univariate::Discontinuous => {
            if x < 0.5 {
                0.0
            } else {
                1.0
            }
        }
        Univariate::Exponential => (x.exp() - 1.0) / (std::f64::consts::E - 1.0),
        Univariate::Inverse => (10.0_f64 - 1.0 / 1.1).recip() / (x + 0.1),
        Univariate::Linear => x,
        Univariate::NoEffect => 0.0,
        Univariate::NonMonotonic => 4.0 * (x - 0.5) * (x - 0.5),
        Univariate::Periodic => (2.0 * std::f64::consts::PI * x).sin() / 2.0,
        Univariate::Quadratic => x * x,
        Univariate::Trigonometric => x.cos(),
    }
}

/// A fully materialized metafunction instance. The record is self-contained:
/// evaluation never touches the generator again.
#[derive(Debug, Clone, PartialEq)]
pub struct MetafunctionSpec {
    pub k: usize,
    pub k2: f64,
    pub k3: f64,
    pub seed: u64,
    /// Behavior per input.
    pub u: Vec<Univariate>,
    /// Active pairs, each `(a, b)` with `a < b`, 0-based input indices.
    pub pairs: Vec<(u32, u32)>,
    /// Active triples, each `(a, b, c)` with `a < b < c`.
    pub triples: Vec<(u32, u32, u32)>,
    /// First-order coefficients, one per input.
    pub alpha: Vec<f64>,
    /// Pair coefficients, aligned with `pairs`.
    pub beta: Vec<f64>,
    /// Triple coefficients, aligned with `triples`.
    pub gamma: Vec<f64>,
}

/// Substream indices of the generator seed.
const STREAM_BEHAVIOR: u64 = 0;
const STREAM_INTERACTIONS: u64 = 1;
const STREAM_COEFFICIENTS: u64 = 2;
const STREAM_MARGINALS: u64 = 3;

fn substream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Seed for the per-input marginal assignment tied to this generator seed.
/// Kept as its own substream so redrawing marginals never perturbs the
/// function itself.
pub fn phi_vector_seed(seed: u64) -> u64 {
    substream(seed, STREAM_MARGINALS).gen::<u64>()
}

/// Standard normal draw via Box-Muller; consumes two uniforms.
fn normal(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = rng.gen();
    let u2: f64 = rng.gen();
    let r = (-2.0 * (1.0 - u1).ln()).sqrt();
    r * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Coefficient mixture: rare large effects, common small ones.
fn coefficient(rng: &mut ChaCha8Rng) -> f64 {
    let pick: f64 = rng.gen();
    let sd = if pick < 0.3 { 5.0 } else { 0.5 };
    sd * normal(rng)
}

/// `ceil(frac * total)` active terms out of `total` candidates.
fn active_count(frac: f64, total: u64) -> u64 {
    ((frac * total as f64).ceil() as u64).min(total)
}

/// Draws `take` distinct indices from `0..total` by a partial shuffle,
/// returned in ascending order.
fn sample_indices(rng: &mut ChaCha8Rng, total: u64, take: u64) -> Vec<u64> {
    let mut idx: Vec<u64> = (0..total).collect();
    let take = take.min(total) as usize;
    for j in 0..take {
        let pick = rng.gen_range(j..idx.len());
        idx.swap(j, pick);
    }
    let mut out: Vec<u64> = idx[..take].to_vec();
    out.sort_unstable();
    out
}

/// Lexicographic unranking of a 2-combination of `0..k`.
fn unrank_pair(k: u64, mut r: u64) -> (u32, u32) {
    let mut a = 0u64;
    loop {
        let block = k - 1 - a;
        if r < block {
            return (a as u32, (a + 1 + r) as u32);
        }
        r -= block;
        a += 1;
    }
}

/// Lexicographic unranking of a 3-combination of `0..k`.
fn unrank_triple(k: u64, mut r: u64) -> (u32, u32, u32) {
    let mut a = 0u64;
    loop {
        let block = (k - 1 - a) * (k - 2 - a) / 2;
        if r < block {
            let (b, c) = unrank_pair(k - 1 - a, r);
            return (a as u32, a as u32 + 1 + b, a as u32 + 1 + c);
        }
        r -= block;
        a += 1;
    }
}

/// Generates a metafunction instance.
///
/// `k2` scales the number of active pairs out of `C(k, 2)` and `k3` the
/// number of active triples out of `C(k, 3)`, both rounded up. Coefficient
/// vectors are drawn at the active lengths, in the order alpha, beta,
/// gamma.
pub fn generate_spec(k: usize, k2: f64, k3: f64, seed: u64) -> Result<MetafunctionSpec> {
    if k < 2 {
        return Err(Error::InvalidInput(format!(
            "metafunction needs k >= 2, got {k}"
        )));
    }
    for (name, v) in [("k2", k2), ("k3", k3)] {
        if !(0.0..=1.0).contains(&v) || !v.is_finite() {
            return Err(Error::InvalidInput(format!(
                "{name} must lie in [0, 1], got {v}"
            )));
        }
    }
    let ku = k as u64;
    let n_pairs = ku * (ku - 1) / 2;
    let n_triples = if k >= 3 {
        ku * (ku - 1) * (ku - 2) / 6
    } else {
        0
    };

    let mut rng = substream(seed, STREAM_BEHAVIOR);
    let u: Vec<Univariate> = (0..k).map(|_| UNIVARIATES[rng.gen_range(0..10)]).collect();

    let mut rng = substream(seed, STREAM_INTERACTIONS);
    let pairs: Vec<(u32, u32)> = sample_indices(&mut rng, n_pairs, active_count(k2, n_pairs))
        .into_iter()
        .map(|r| unrank_pair(ku, r))
        .collect();
    let triples: Vec<(u32, u32, u32)> = if n_triples > 0 {
        sample_indices(&mut rng, n_triples, active_count(k3, n_triples))
            .into_iter()
            .map(|r| unrank_triple(ku, r))
            .collect()
    } else {
        Vec::new()
    };

    let mut rng = substream(seed, STREAM_COEFFICIENTS);
    let alpha: Vec<f64> = (0..k).map(|_| coefficient(&mut rng)).collect();
    let beta: Vec<f64> = (0..pairs.len()).map(|_| coefficient(&mut rng)).collect();
    let gamma: Vec<f64> = (0..triples.len()).map(|_| coefficient(&mut rng)).collect();

    Ok(MetafunctionSpec {
        k,
        k2,
        k3,
        seed,
        u,
        pairs,
        triples,
        alpha,
        beta,
        gamma,
    })
}

impl MetafunctionSpec {
    fn check_matrix(&self, m: &SampleMatrix) -> Result<()> {
        if m.cols() != self.k {
            return Err(Error::BadShape {
                rows: m.rows(),
                cols: m.cols(),
                context: format!("metafunction expects {} columns", self.k),
            });
        }
        Ok(())
    }

    /// Per-input behavior values for one point.
    fn behaviors_into(&self, x: &[f64], g: &mut [f64]) {
        for i in 0..self.k {
            g[i] = univariate(self.u[i], x[i]);
        }
    }

    /// Sum of all terms given precomputed behavior values.
    fn combine(&self, g: &[f64]) -> f64 {
        let mut y = 0.0;
        for i in 0..self.k {
            y += self.alpha[i] * g[i];
        }
        for (t, &(a, b)) in self.pairs.iter().enumerate() {
            y += self.beta[t] * g[a as usize] * g[b as usize];
        }
        for (t, &(a, b, c)) in self.triples.iter().enumerate() {
            y += self.gamma[t] * g[a as usize] * g[b as usize] * g[c as usize];
        }
        y
    }
}

/// Evaluates the metafunction on every row of a matrix of model inputs
/// (already transformed to their marginals).
pub fn evaluate(spec: &MetafunctionSpec, m: &SampleMatrix) -> Result<Vec<f64>> {
    spec.check_matrix(m)?;
    let mut g = vec![0.0; spec.k];
    let mut out = Vec::with_capacity(m.rows());
    for r in 0..m.rows() {
        spec.behaviors_into(m.row(r), &mut g);
        out.push(spec.combine(&g));
    }
    Ok(out)
}

/// Evaluates the metafunction on a base matrix and on all `k` single-column
/// swaps of it, reusing per-row work.
///
/// Returns `(y_base, y_swapped)` where `y_swapped[i]` are the outputs for
/// the base matrix with column `i` taken from the donor. Swapping input `i`
/// changes only the terms containing `i`, all of which are linear in the
/// behavior value `g_i`, so each swap costs one behavior evaluation and the
/// terms touching `i` rather than a full re-evaluation. Results agree with
/// [`evaluate`] on materialized swap matrices up to floating-point
/// reassociation; an inert input (its behavior is identically zero)
/// reproduces the base output exactly.
pub fn evaluate_with_swaps(
    spec: &MetafunctionSpec,
    base: &SampleMatrix,
    donor: &SampleMatrix,
) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    spec.check_matrix(base)?;
    spec.check_matrix(donor)?;
    if donor.rows() != base.rows() {
        return Err(Error::LengthMismatch {
            got: donor.rows(),
            expected: base.rows(),
            context: "donor rows vs base rows",
        });
    }
    // Terms touching each input, as indices into pairs/triples.
    let mut pairs_of: Vec<Vec<u32>> = vec![Vec::new(); spec.k];
    for (t, &(a, b)) in spec.pairs.iter().enumerate() {
        pairs_of[a as usize].push(t as u32);
        pairs_of[b as usize].push(t as u32);
    }
    let mut triples_of: Vec<Vec<u32>> = vec![Vec::new(); spec.k];
    for (t, &(a, b, c)) in spec.triples.iter().enumerate() {
        triples_of[a as usize].push(t as u32);
        triples_of[b as usize].push(t as u32);
        triples_of[c as usize].push(t as u32);
    }

    let rows = base.rows();
    let mut y_base = Vec::with_capacity(rows);
    let mut y_swapped = vec![vec![0.0; rows]; spec.k];
    let mut g = vec![0.0; spec.k];
    for r in 0..rows {
        let x = base.row(r);
        let xd = donor.row(r);
        spec.behaviors_into(x, &mut g);
        let y = spec.combine(&g);
        y_base.push(y);
        for i in 0..spec.k {
            let gi_new = univariate(spec.u[i], xd[i]);
            let dg = gi_new - g[i];
            if dg == 0.0 {
                y_swapped[i][r] = y;
                continue;
            }
            // Sensitivity of y to g_i with all other behaviors fixed.
            let mut slope = spec.alpha[i];
            for &t in &pairs_of[i] {
                let (a, b) = spec.pairs[t as usize];
                let other = if a as usize == i { b } else { a };
                slope += spec.beta[t as usize] * g[other as usize];
            }
            for &t in &triples_of[i] {
                let (a, b, c) = spec.triples[t as usize];
                let (o1, o2) = if a as usize == i {
                    (b, c)
                } else if b as usize == i {
                    (a, c)
                } else {
                    (a, b)
                };
                slope += spec.gamma[t as usize] * g[o1 as usize] * g[o2 as usize];
            }
            y_swapped[i][r] = y + dg * slope;
        }
    }
    Ok((y_base, y_swapped))
}

// ---------------------------------------------------------------------------
// Text serialization
// ---------------------------------------------------------------------------

fn univariate_id(f: Univariate) -> usize {
    UNIVARIATES.iter().position(|&u| u == f).unwrap() + 1
}

impl MetafunctionSpec {
    /// Self-contained text record, replayable without the generator.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "k = {}", self.k);
        let _ = writeln!(s, "k2 = {}", self.k2);
        let _ = writeln!(s, "k3 = {}", self.k3);
        let _ = writeln!(s, "seed = {}", self.seed);
        let ids: Vec<String> = self
            .u
            .iter()
            .map(|&f| univariate_id(f).to_string())
            .collect();
        let _ = writeln!(s, "u = {}", ids.join(","));
        let ps: Vec<String> = self
            .pairs
            .iter()
            .map(|&(a, b)| format!("{a}:{b}"))
            .collect();
        let _ = writeln!(s, "pairs = {}", ps.join(","));
        let ts: Vec<String> = self
            .triples
            .iter()
            .map(|&(a, b, c)| format!("{a}:{b}:{c}"))
            .collect();
        let _ = writeln!(s, "triples = {}", ts.join(","));
        for (name, coefs) in [
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("gamma", &self.gamma),
        ] {
            let vs: Vec<String> = coefs.iter().map(|v| format!("{v}")).collect();
            let _ = writeln!(s, "{name} = {}", vs.join(","));
        }
        s
    }

    /// Parses a record produced by [`MetafunctionSpec::to_text`].
    pub fn from_text(text: &str) -> Result<Self> {
        let mut fields = std::collections::HashMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
                path: "metafunction record".to_string(),
                line: lineno + 1,
                message: "expected key = value".to_string(),
            })?;
            fields.insert(key.trim().to_string(), value.trim().to_string());
        }
        let get = |key: &str| -> Result<String> {
            fields
                .get(key)
                .cloned()
                .ok_or_else(|| Error::InvalidInput(format!("metafunction record missing {key}")))
        };
        let parse_err =
            |what: &str| Error::InvalidInput(format!("bad {what} in metafunction record"));
        let k: usize = get("k")?.parse().map_err(|_| parse_err("k"))?;
        let k2: f64 = get("k2")?.parse().map_err(|_| parse_err("k2"))?;
        let k3: f64 = get("k3")?.parse().map_err(|_| parse_err("k3"))?;
        let seed: u64 = get("seed")?.parse().map_err(|_| parse_err("seed"))?;
        let split_list = |s: &str| -> Vec<String> {
            if s.is_empty() {
                Vec::new()
            } else {
                s.split(',').map(|x| x.trim().to_string()).collect()
            }
        };
        let u: Vec<Univariate> = split_list(&get("u")?)
            .iter()
            .map(|s| -> Result<Univariate> {
                let id: usize = s.parse().map_err(|_| parse_err("u"))?;
                if (1..=10).contains(&id) {
                    Ok(UNIVARIATES[id - 1])
                } else {
                    Err(parse_err("u"))
                }
            })
            .collect::<Result<_>>()?;
        let pairs: Vec<(u32, u32)> = split_list(&get("pairs")?)
            .iter()
            .map(|s| -> Result<(u32, u32)> {
                let mut it = s.split(':');
                let a = it.next().and_then(|x| x.parse().ok());
                let b = it.next().and_then(|x| x.parse().ok());
                match (a, b, it.next()) {
                    (Some(a), Some(b), None) if a < b => Ok((a, b)),
                    _ => Err(parse_err("pairs")),
                }
            })
            .collect::<Result<_>>()?;
        let triples: Vec<(u32, u32, u32)> = split_list(&get("triples")?)
            .iter()
            .map(|s| -> Result<(u32, u32, u32)> {
                let parts: Vec<Option<u32>> = s.split(':').map(|x| x.parse().ok()).collect();
                match parts.as_slice() {
                    [Some(a), Some(b), Some(c)] if a < b && b < c => Ok((*a, *b, *c)),
                    _ => Err(parse_err("triples")),
                }
            })
            .collect::<Result<_>>()?;
        let nums = |key: &str| -> Result<Vec<f64>> {
            split_list(&get(key)?)
                .iter()
                .map(|s| s.parse().map_err(|_| parse_err(key)))
                .collect()
        };
        let alpha = nums("alpha")?;
        let beta = nums("beta")?;
        let gamma = nums("gamma")?;
        if u.len() != k
            || alpha.len() != k
            || beta.len() != pairs.len()
            || gamma.len() != triples.len()
        {
            return Err(Error::InvalidInput(
                "metafunction record has inconsistent lengths".to_string(),
            ));
        }
        if pairs.iter().any(|&(a, b)| b as usize >= k || a >= b)
            || triples
                .iter()
                .any(|&(a, b, c)| c as usize >= k || !(a < b && b < c))
        {
            return Err(Error::InvalidInput(
                "metafunction record has out-of-range interactions".to_string(),
            ));
        }
        Ok(MetafunctionSpec {
            k,
            k2,
            k3,
            seed,
            u,
            pairs,
            triples,
            alpha,
            beta,
            gamma,
        })
    }
}
