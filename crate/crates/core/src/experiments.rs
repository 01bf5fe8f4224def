//! Random balanced splits and exact gap tables.
//!
//! Trial `i` of a run seeded with `s` draws from ChaCha8 seeded with `s` on
//! stream `i`, so every trial is reproducible on its own and independent of
//! how many trials run or in what order.

use std::fmt::Write as _;

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::construction::level_params;
use crate::digraph::{Degree, Digraph, VertexSet};
use crate::error::{Error, Result};
use crate::search::{enumerate_max, SearchConfig, SearchReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitTrial {
    pub trial: u64,
    pub seed: u64,
    pub half_one: VertexSet,
    pub delta_one: Degree,
    pub delta_two: Degree,
}

impl SplitTrial {
    pub fn better_half(&self) -> Degree {
        self.delta_one.max(self.delta_two)
    }
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Trial 0 of the run seeded with `seed`.
pub fn random_balanced_split(d: &Digraph, seed: u64) -> Result<SplitTrial> {
    split_trial(d, seed, 0)
}

/// Shuffles the vertex ids and keeps the first half.
pub fn split_trial(d: &Digraph, seed: u64, trial: u64) -> Result<SplitTrial> {
    let order = d.order();
    if !order.is_multiple_of(2) {
        return Err(Error::OddOrder(order));
    }
    let mut ids: Vec<_> = (0..order).collect();
    ids.shuffle(&mut trial_rng(seed, trial));
    let half_one = VertexSet::from_ids(order, ids[..order / 2].iter().copied())?;
    let half_two = half_one.complement();
    Ok(SplitTrial {
        trial,
        seed,
        delta_one: d.min_out_degree(&half_one)?,
        delta_two: d.min_out_degree(&half_two)?,
        half_one,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SplitSummary {
    pub trials: Vec<SplitTrial>,
    /// Largest `max(delta_one, delta_two)` over the trials.
    pub max_better_half: Degree,
    pub mean_better_half: f64,
}

impl SplitSummary {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("trial,seed,delta_one,delta_two\n");
        for t in &self.trials {
            let _ = writeln!(out, "{},{},{},{}", t.trial, t.seed, t.delta_one, t.delta_two);
        }
        out
    }
}

/// Runs trials `0..trials`; the summary is identical for any thread count.
pub fn split_experiment(d: &Digraph, trials: u64, seed: u64) -> Result<SplitSummary> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    if !d.order().is_multiple_of(2) {
        return Err(Error::OddOrder(d.order()));
    }
    let records = (0..trials)
        .into_par_iter()
        .map(|i| split_trial(d, seed, i))
        .collect::<Result<Vec<_>>>()?;
    let max_better_half = records.iter().map(SplitTrial::better_half).max().unwrap_or(0);
    let total: u64 = records.iter().map(|t| t.better_half() as u64).sum();
    Ok(SplitSummary {
        mean_better_half: total as f64 / trials as f64,
        max_better_half,
        trials: records,
    })
}

/// Best half over every balanced split, by exhaustive enumeration.
pub fn exhaustive_split_max(d: &Digraph, config: &SearchConfig) -> Result<SearchReport> {
    let order = d.order();
    if !order.is_multiple_of(2) {
        return Err(Error::OddOrder(order));
    }
    enumerate_max(d, order / 2..=order / 2, config)
}

#[derive(Debug, Clone, PartialEq)]
pub struct GapRow {
    pub k: u32,
    pub n: u64,
    pub s: i64,
    pub bound: u64,
    /// `s/2 - bound`, exactly.
    pub gap: Ratio<i64>,
    /// `(k - 1)/2`, exactly.
    pub half_k_minus_1: Ratio<i64>,
    /// `log_3 s`; display only.
    pub log3_s: f64,
}

/// Rows for `k = 1..=k_max`.
pub fn gap_table(k_max: u32) -> Result<Vec<GapRow>> {
    (1..=k_max)
        .map(|k| {
            let p = level_params(k)?;
            let bound = i64::try_from(p.bound).map_err(|_| Error::Overflow(k))?;
            Ok(GapRow {
                k,
                n: p.n,
                s: p.s,
                bound: p.bound,
                gap: Ratio::new(p.s, 2) - Ratio::from_integer(bound),
                half_k_minus_1: Ratio::new(k as i64 - 1, 2),
                log3_s: (p.s as f64).log(3.0),
            })
        })
        .collect()
}

/// `(log s, sqrt(s log s))` with unit constants. These only indicate the
/// shape of the known lower and upper gap curves.
pub fn reference_curves(s: f64) -> (f64, f64) {
    let log = s.ln();
    (log, (s * log).sqrt())
}

pub fn gap_table_csv(rows: &[GapRow], with_reference: bool) -> String {
    let mut out = String::from("k,n,s,bound,gap_num,gap_den,log3_s");
    if with_reference {
        out.push_str(",ref_log_s,ref_sqrt_s_log_s");
    }
    out.push('\n');
    for r in rows {
        let _ = write!(
            out,
            "{},{},{},{},{},{},{:.6}",
            r.k,
            r.n,
            r.s,
            r.bound,
            r.gap.numer(),
            r.gap.denom(),
            r.log3_s
        );
        if with_reference {
            let (lo, hi) = reference_curves(r.s as f64);
            let _ = write!(out, ",{lo:.6},{hi:.6}");
        }
        out.push('\n');
    }
    out
}
