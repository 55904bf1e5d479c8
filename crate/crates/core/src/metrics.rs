//! Ranking and agreement measures.
//!
//! Estimates are compared to references either on ranks (Kendall's tau-b,
//! or Pearson correlation of Savage scores, which weights the top of the
//! ranking) or on values (mean absolute error). Ranks are descending
//! midranks: the largest value gets rank 1 and ties share the average of
//! the positions they occupy.

use crate::error::{Error, Result};

fn check_finite(v: &[f64], what: &'static str) -> Result<()> {
    if v.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "{what} contains a non-finite value"
        )));
    }
    Ok(())
}

fn check_same_len(a: &[f64], b: &[f64], context: &'static str) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            got: b.len(),
            expected: a.len(),
            context,
        });
    }
    Ok(())
}

/// Descending midranks: rank 1 is the largest value; tied values share the
/// mean of the positions they cover.
pub fn ranks_from_values(v: &[f64]) -> Vec<f64> {
    let n = v.len();
    let mut ranks = vec![0.0; n];
    for i in 0..n {
        let mut greater = 0usize;
        let mut equal = 0usize;
        for j in 0..n {
            if v[j] > v[i] {
                greater += 1;
            } else if v[j] == v[i] {
                equal += 1;
            }
        }
        ranks[i] = greater as f64 + (equal as f64 + 1.0) / 2.0;
    }
    ranks
}

/// Kendall's tau-b between two vectors, with tie corrections.
///
/// Implemented by sorting on the first vector and counting exchanges in the
/// second with a merge sort, so concordance is never enumerated pair by
/// pair. Undefined (an error) when either vector is entirely tied.
pub fn kendall_tau_b(a: &[f64], b: &[f64]) -> Result<f64> {
    check_same_len(a, b, "kendall_tau_b inputs")?;
    check_finite(a, "kendall_tau_b first input")?;
    check_finite(b, "kendall_tau_b second input")?;
    let n = a.len();
    if n < 2 {
        return Err(Error::UndefinedCorrelation(
            "need at least two observations",
        ));
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| {
        a[i].partial_cmp(&a[j])
            .unwrap()
            .then(b[i].partial_cmp(&b[j]).unwrap())
    });

    let pairs = |t: u64| t * (t.saturating_sub(1)) / 2;
    let n0 = pairs(n as u64);

    // Tie runs in a, and joint tie runs in (a, b).
    let mut n1 = 0u64;
    let mut n3 = 0u64;
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j < n && a[idx[j]] == a[idx[i]] {
            j += 1;
        }
        n1 += pairs((j - i) as u64);
        let mut p = i;
        while p < j {
            let mut q = p;
            while q < j && b[idx[q]] == b[idx[p]] {
                q += 1;
            }
            n3 += pairs((q - p) as u64);
            p = q;
        }
        i = j;
    }

    // Discordant pairs = exchanges needed to sort b after ordering by a.
    let seq: Vec<f64> = idx.iter().map(|&i| b[i]).collect();
    let mut buf = seq.clone();
    let mut tmp = vec![0.0; n];
    let swaps = merge_count(&mut buf, &mut tmp);

    // Tie runs in b.
    let mut sorted_b = seq;
    sorted_b.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let mut n2 = 0u64;
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j < n && sorted_b[j] == sorted_b[i] {
            j += 1;
        }
        n2 += pairs((j - i) as u64);
        i = j;
    }

    if n1 == n0 || n2 == n0 {
        return Err(Error::UndefinedCorrelation("all values tied in one vector"));
    }
    let con_minus_dis = n0 as f64 - n1 as f64 - n2 as f64 + n3 as f64 - 2.0 * swaps as f64;
    let denom = ((n0 - n1) as f64 * (n0 - n2) as f64).sqrt();
    Ok(con_minus_dis / denom)
}

/// Merge sort that counts inversions; equal elements do not count.
fn merge_count(v: &mut [f64], tmp: &mut [f64]) -> u64 {
    let n = v.len();
    if n <= 1 {
        return 0;
    }
    let mid = n / 2;
    let (left, right) = v.split_at_mut(mid);
    let mut swaps = merge_count(left, &mut tmp[..mid]) + merge_count(right, &mut tmp[mid..]);
    let (mut i, mut j, mut k) = (0, 0, 0);
    while i < left.len() && j < right.len() {
        if right[j] < left[i] {
            swaps += (left.len() - i) as u64;
            tmp[k] = right[j];
            j += 1;
        } else {
            tmp[k] = left[i];
            i += 1;
        }
        k += 1;
    }
    while i < left.len() {
        tmp[k] = left[i];
        i += 1;
        k += 1;
    }
    while j < right.len() {
        tmp[k] = right[j];
        j += 1;
        k += 1;
    }
    v.copy_from_slice(&tmp[..n]);
    swaps
}

/// Savage scores for a vector of descending midranks.
///
/// Position `p` (1-based) scores `sum_{j=p}^{k} 1/j`; tied ranks share the
/// mean of the scores of the positions they occupy. The scores of a full
/// vector always sum to `k`.
pub fn savage_scores(ranks: &[f64]) -> Vec<f64> {
    let k = ranks.len();
    // Suffix harmonic sums: h[p] = 1/(p+1) + ... + 1/k, 0-based positions.
    let mut h = vec![0.0; k + 1];
    for p in (0..k).rev() {
        h[p] = h[p + 1] + 1.0 / (p as f64 + 1.0);
    }
    let mut idx: Vec<usize> = (0..k).collect();
    idx.sort_by(|&i, &j| ranks[i].partial_cmp(&ranks[j]).unwrap());
    let mut out = vec![0.0; k];
    let mut i = 0;
    while i < k {
        let mut j = i;
        while j < k && ranks[idx[j]] == ranks[idx[i]] {
            j += 1;
        }
        // Tied group occupies positions i..j (0-based).
        let mean: f64 = (i..j).map(|p| h[p]).sum::<f64>() / (j - i) as f64;
        for &orig in &idx[i..j] {
            out[orig] = mean;
        }
        i = j;
    }
    out
}

/// Pearson correlation coefficient.
pub fn pearson(a: &[f64], b: &[f64]) -> Result<f64> {
    check_same_len(a, b, "pearson inputs")?;
    check_finite(a, "pearson first input")?;
    check_finite(b, "pearson second input")?;
    let n = a.len();
    if n < 2 {
        return Err(Error::UndefinedCorrelation(
            "need at least two observations",
        ));
    }
    let ma = a.iter().sum::<f64>() / n as f64;
    let mb = b.iter().sum::<f64>() / n as f64;
    let (mut saa, mut sbb, mut sab) = (0.0, 0.0, 0.0);
    for i in 0..n {
        let da = a[i] - ma;
        let db = b[i] - mb;
        saa += da * da;
        sbb += db * db;
        sab += da * db;
    }
    if saa == 0.0 || sbb == 0.0 {
        return Err(Error::UndefinedCorrelation("zero variance in one vector"));
    }
    Ok(sab / (saa * sbb).sqrt())
}

/// Mean absolute error between a reference vector and an estimate.
pub fn mae(reference: &[f64], estimate: &[f64]) -> Result<f64> {
    check_same_len(reference, estimate, "mae inputs")?;
    check_finite(reference, "mae reference")?;
    check_finite(estimate, "mae estimate")?;
    if reference.is_empty() {
        return Err(Error::InvalidInput(
            "mae needs at least one value".to_string(),
        ));
    }
    let sum: f64 = reference
        .iter()
        .zip(estimate)
        .map(|(t, e)| (t - e).abs())
        .sum();
    Ok(sum / reference.len() as f64)
}

/// Fractions of estimates strictly below 0 and strictly above 1.
pub fn out_of_range_fractions(estimate: &[f64]) -> (f64, f64) {
    if estimate.is_empty() {
        return (0.0, 0.0);
    }
    let k = estimate.len() as f64;
    let neg = estimate.iter().filter(|&&v| v < 0.0).count() as f64;
    let high = estimate.iter().filter(|&&v| v > 1.0).count() as f64;
    (neg / k, high / k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn midranks_descend_and_average_ties() {
        let r = ranks_from_values(&[0.4, 0.4, 0.2]);
        assert_eq!(r, vec![1.5, 1.5, 3.0]);
        let r = ranks_from_values(&[1.0, 3.0, 2.0]);
        assert_eq!(r, vec![3.0, 1.0, 2.0]);
    }

    #[test]
    fn ranks_match_sort_based_oracle() {
        // Oracle: sort positions, then average positions over tie groups.
        let oracle = |v: &[f64]| -> Vec<f64> {
            let n = v.len();
            let mut idx: Vec<usize> = (0..n).collect();
            idx.sort_by(|&i, &j| v[j].partial_cmp(&v[i]).unwrap());
            let mut out = vec![0.0; n];
            let mut i = 0;
            while i < n {
                let mut j = i;
                while j < n && v[idx[j]] == v[idx[i]] {
                    j += 1;
                }
                let mean = (i + 1 + j) as f64 / 2.0;
                for &orig in &idx[i..j] {
                    out[orig] = mean;
                }
                i = j;
            }
            out
        };
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let n = rng.gen_range(1..30);
            let v: Vec<f64> = (0..n).map(|_| (rng.gen_range(0..8) as f64) / 4.0).collect();
            assert_eq!(ranks_from_values(&v), oracle(&v));
        }
    }

    #[test]
    fn tau_b_perfect_and_reversed() {
        let a = [1.0, 2.0, 3.0, 4.0];
        let b = [10.0, 20.0, 30.0, 40.0];
        assert_abs_diff_eq!(kendall_tau_b(&a, &b).unwrap(), 1.0, epsilon = 1e-15);
        let rev = [40.0, 30.0, 20.0, 10.0];
        assert_abs_diff_eq!(kendall_tau_b(&a, &rev).unwrap(), -1.0, epsilon = 1e-15);
    }

    #[test]
    fn tau_b_known_tied_case() {
        // a = (1,2,2,3), b = (1,3,2,4): of the 6 pairs, one is tied in a
        // (indices 1,2) and the other five are concordant, so
        // tau-b = 5 / sqrt((6-1)(6-0)).
        let a = [1.0, 2.0, 2.0, 3.0];
        let b = [1.0, 3.0, 2.0, 4.0];
        let got = kendall_tau_b(&a, &b).unwrap();
        let want = 5.0 / ((6.0_f64 - 1.0) * 6.0).sqrt();
        assert_abs_diff_eq!(got, want, epsilon = 1e-15);
    }

    #[test]
    fn tau_b_matches_exhaustive_pair_oracle() {
        use rand::{Rng, SeedableRng};
        let oracle = |a: &[f64], b: &[f64]| -> Option<f64> {
            let n = a.len();
            let (mut c, mut d, mut ta, mut tb) = (0i64, 0i64, 0i64, 0i64);
            for i in 0..n {
                for j in i + 1..n {
                    let da = a[i].partial_cmp(&a[j]).unwrap();
                    let db = b[i].partial_cmp(&b[j]).unwrap();
                    use std::cmp::Ordering::Equal;
                    match (da, db) {
                        (Equal, Equal) => {}
                        (Equal, _) => ta += 1,
                        (_, Equal) => tb += 1,
                        (x, y) if x == y => c += 1,
                        _ => d += 1,
                    }
                }
            }
            // Pairs tied in a never enter the a-side denominator, so
            // n0 - n1 = C + D + (pairs tied only in b); symmetrically for b.
            let denom = (((c + d + tb) as f64) * ((c + d + ta) as f64)).sqrt();
            if denom == 0.0 {
                None
            } else {
                Some((c - d) as f64 / denom)
            }
        };
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for _ in 0..500 {
            let n = rng.gen_range(2..40);
            let a: Vec<f64> = (0..n).map(|_| rng.gen_range(0..6) as f64).collect();
            let b: Vec<f64> = (0..n).map(|_| rng.gen_range(0..6) as f64).collect();
            match (kendall_tau_b(&a, &b), oracle(&a, &b)) {
                (Ok(got), Some(want)) => assert_abs_diff_eq!(got, want, epsilon = 1e-12),
                (Err(_), None) => {}
                (got, want) => panic!("mismatch: {got:?} vs {want:?}"),
            }
        }
    }

    #[test]
    fn tau_b_all_tied_is_undefined() {
        let a = [1.0, 1.0, 1.0];
        let b = [1.0, 2.0, 3.0];
        assert!(kendall_tau_b(&a, &b).is_err());
        assert!(kendall_tau_b(&b, &a).is_err());
    }

    #[test]
    fn savage_scores_worked_example() {
        // k = 3, no ties: scores (from rank 1) are 1 + 1/2 + 1/3, 1/2 + 1/3,
        // and 1/3.
        let s = savage_scores(&[1.0, 2.0, 3.0]);
        assert_abs_diff_eq!(s[0], 11.0 / 6.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s[1], 5.0 / 6.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s[2], 1.0 / 3.0, epsilon = 1e-15);
    }

    #[test]
    fn savage_scores_tie_averaging_and_sum() {
        let s = savage_scores(&[1.5, 1.5, 3.0]);
        // Positions 1 and 2 share (11/6 + 5/6) / 2 = 4/3.
        assert_abs_diff_eq!(s[0], 4.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s[1], 4.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s[2], 1.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.iter().sum::<f64>(), 3.0, epsilon = 1e-12);
    }

    #[test]
    fn savage_scores_sum_to_k() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for k in [1usize, 2, 5, 17, 60, 100] {
            let v: Vec<f64> = (0..k).map(|_| rng.gen_range(0..5) as f64).collect();
            let s = savage_scores(&ranks_from_values(&v));
            assert_abs_diff_eq!(s.iter().sum::<f64>(), k as f64, epsilon = 1e-9);
        }
    }

    #[test]
    fn pearson_linearity() {
        let a = [1.0, 2.0, 3.0, 5.0];
        let b: Vec<f64> = a.iter().map(|x| 3.0 * x - 7.0).collect();
        assert_abs_diff_eq!(pearson(&a, &b).unwrap(), 1.0, epsilon = 1e-15);
        let c: Vec<f64> = a.iter().map(|x| -2.0 * x).collect();
        assert_abs_diff_eq!(pearson(&a, &c).unwrap(), -1.0, epsilon = 1e-15);
        assert!(pearson(&a, &[1.0, 1.0, 1.0, 1.0]).is_err());
    }

    #[test]
    fn mae_basics() {
        assert_abs_diff_eq!(
            mae(&[1.0, 2.0, 3.0], &[1.5, 1.5, 3.0]).unwrap(),
            (0.5 + 0.5 + 0.0) / 3.0,
            epsilon = 1e-15
        );
        assert!(mae(&[1.0], &[1.0, 2.0]).is_err());
    }

    #[test]
    fn out_of_range_counts_are_strict() {
        let (neg, high) = out_of_range_fractions(&[-0.1, 0.0, 0.5, 1.0, 1.2]);
        assert_eq!(neg, 0.2);
        assert_eq!(high, 0.2);
    }
}
