use std::cmp::Ordering;
use std::ops::RangeInclusive;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::time::Instant;

use rayon::prelude::*;

use super::{SearchConfig, SearchReport};
use crate::digraph::{lex_cmp_mask, Degree, Digraph, VertexSet, WORD_BITS};
use crate::error::{Error, Result};

/// Binomial coefficient, saturating at `u128::MAX`.
fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        // exact at every step: c * (n - i) is divisible by i + 1
        c = match c.checked_mul((n - i) as u128) {
            Some(p) => p / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    c
}

/// Number of subsets of an `n`-set whose size lies in `sizes`.
pub fn subset_count(n: usize, sizes: RangeInclusive<usize>) -> u128 {
    sizes
        .take_while(|&s| s <= n)
        .map(|s| binomial(n, s))
        .fold(0u128, u128::saturating_add)
}

/// Best (value, set) seen so far; larger value wins, then the
/// lexicographically smaller set.
#[derive(Debug, Clone, Copy)]
struct MaskBest {
    value: Degree,
    mask: u64,
}

fn merge(a: Option<MaskBest>, b: Option<MaskBest>) -> Option<MaskBest> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => Some(match x.value.cmp(&y.value) {
            Ordering::Greater => x,
            Ordering::Less => y,
            Ordering::Equal if lex_cmp_mask(x.mask, y.mask) == Ordering::Greater => y,
            Ordering::Equal => x,
        }),
    }
}

/// Minimum out-degree of `x`, or `None` as soon as some member falls
/// below `floor`.
#[inline]
fn min_degree_from(rows: &[u64], x: u64, floor: Degree) -> Option<Degree> {
    let mut min = if x == 0 { 0 } else { Degree::MAX };
    let mut rest = x;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (rows[v] & x).count_ones() as Degree;
        if d < floor {
            return None;
        }
        min = min.min(d);
    }
    Some(min)
}

#[inline]
fn next_same_popcount(x: u64) -> u64 {
    let low = x & x.wrapping_neg();
    let ripple = x + low;
    (((ripple ^ x) >> 2) / low) | ripple
}

/// All subsets of size `size` whose largest member is `top` (size 0: the
/// empty set).
#[derive(Debug, Clone, Copy)]
struct Unit {
    size: usize,
    top: usize,
}

fn run_unit(rows: &[u64], unit: Unit, floor: &AtomicUsize) -> (Option<MaskBest>, u64) {
    let mut best: Option<MaskBest> = None;
    let mut visited = 0u64;
    let mut consider = |x: u64, best: &mut Option<MaskBest>| {
        visited += 1;
        let f = floor.load(AtomicOrdering::Relaxed);
        if let Some(value) = min_degree_from(rows, x, f) {
            *best = merge(*best, Some(MaskBest { value, mask: x }));
            floor.fetch_max(value, AtomicOrdering::Relaxed);
        }
    };

    if unit.size == 0 {
        consider(0, &mut best);
        return (best, visited);
    }
    let high = 1u64 << unit.top;
    let lower = unit.size - 1;
    if lower == 0 {
        consider(high, &mut best);
        return (best, visited);
    }
    let end = high;
    let mut x = (1u64 << lower) - 1;
    while x < end {
        consider(x | high, &mut best);
        x = next_same_popcount(x);
    }
    (best, visited)
}

/// Exhaustively maximises the minimum out-degree over all subsets of `d`
/// with size in `sizes`.
pub fn enumerate_max(
    d: &Digraph,
    sizes: RangeInclusive<usize>,
    config: &SearchConfig,
) -> Result<SearchReport> {
    let start = Instant::now();
    let n = d.order();
    let estimate = subset_count(n, sizes.clone());
    if estimate > config.budget as u128 {
        return Err(Error::BudgetExceeded {
            estimate,
            budget: config.budget,
        });
    }

    let (best_set, best_value, visited) = if n <= WORD_BITS {
        enumerate_words(d, sizes, config)
    } else {
        enumerate_general(d, sizes)
    };
    Ok(SearchReport {
        best_set,
        best_value,
        nodes_visited: visited,
        pruned: 0,
        exact: true,
        elapsed: start.elapsed(),
    })
}

fn enumerate_words(
    d: &Digraph,
    sizes: RangeInclusive<usize>,
    config: &SearchConfig,
) -> (VertexSet, Degree, u64) {
    let n = d.order();
    let rows: Vec<u64> = (0..n).map(|v| d.row(v)[0]).collect();

    // larger sets first: they tend to raise the floor early
    let mut units = Vec::new();
    for size in sizes.rev().filter(|&s| s <= n) {
        if size == 0 {
            units.push(Unit { size, top: 0 });
        } else {
            units.extend((size - 1..n).map(|top| Unit { size, top }));
        }
    }

    let floor = AtomicUsize::new(0);
    let (best, visited) = if config.threads <= 1 {
        units.iter().fold((None, 0), |(best, visited), &u| {
            let (b, v) = run_unit(&rows, u, &floor);
            (merge(best, b), visited + v)
        })
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .expect("failed to start search workers");
        pool.install(|| {
            units
                .par_iter()
                .map(|&u| run_unit(&rows, u, &floor))
                .reduce(|| (None, 0), |(a, va), (b, vb)| (merge(a, b), va + vb))
        })
    };

    match best {
        Some(b) => (VertexSet::from_mask(n, b.mask), b.value, visited),
        None => (VertexSet::empty(n), 0, visited),
    }
}

/// Index-combination walk for digraphs wider than one word. Combinations of
/// each size come out in lexicographic order, so ties keep the first set.
fn enumerate_general(d: &Digraph, sizes: RangeInclusive<usize>) -> (VertexSet, Degree, u64) {
    let n = d.order();
    let mut best: Option<(Degree, VertexSet)> = None;
    let mut visited = 0u64;
    for size in sizes.filter(|&s| s <= n) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            visited += 1;
            let x = VertexSet::from_ids(n, idx.iter().copied()).expect("ids below n");
            let floor = best.as_ref().map_or(0, |b| b.0);
            let mut min = if size == 0 { 0 } else { Degree::MAX };
            for &v in &idx {
                let deg = d.degree_into(v, x.words());
                min = min.min(deg);
                if deg < floor {
                    break;
                }
            }
            let replace = match &best {
                None => true,
                Some((bv, bs)) => min > *bv || (min == *bv && x.lex_cmp(bs) == Ordering::Less),
            };
            if replace {
                best = Some((min, x));
            }

            if size == 0 {
                break;
            }
            match (0..size).rev().find(|&i| idx[i] < n - size + i) {
                Some(i) => {
                    idx[i] += 1;
                    for j in i + 1..size {
                        idx[j] = idx[j - 1] + 1;
                    }
                }
                None => break,
            }
        }
    }
    match best {
        Some((v, s)) => (s, v, visited),
        None => (VertexSet::empty(n), 0, visited),
    }
}
