use std::time::Instant;

use super::SearchReport;
use crate::digraph::{Degree, Digraph, VertexSet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BranchBoundOptions {
    /// Enables the ceiling, reachability and peeling rules. With pruning off
    /// the solver degenerates to a plain include/exclude walk.
    pub prune: bool,
}

impl Default for BranchBoundOptions {
    fn default() -> Self {
        Self { prune: true }
    }
}

/// Maximum of the minimum out-degree over all subsets of exactly
/// `target_size` vertices.
pub fn branch_bound_max(d: &Digraph, target_size: usize) -> Result<SearchReport> {
    branch_bound_max_with(d, target_size, &BranchBoundOptions::default())
}

pub fn branch_bound_max_with(
    d: &Digraph,
    target_size: usize,
    options: &BranchBoundOptions,
) -> Result<SearchReport> {
    let start = Instant::now();
    let n = d.order();
    if target_size > n {
        return Err(Error::TargetTooLarge { target: target_size, n });
    }
    // every member of a tournament subset of size t loses at least half of its
    // t - 1 matches on average, so some member has out-degree <= (t - 1) / 2
    let ceiling = (options.prune && d.is_tournament() && target_size > 0)
        .then(|| (target_size - 1) / 2);

    let mut search = Search {
        d,
        target: target_size,
        prune: options.prune,
        ceiling,
        best: None,
        visited: 0,
        pruned: 0,
        done: false,
    };
    search.descend(VertexSet::empty(n), d.vertices());

    let (best_value, best_set) = search.best.unwrap_or((0, VertexSet::empty(n)));
    Ok(SearchReport {
        best_set,
        best_value,
        nodes_visited: search.visited,
        pruned: search.pruned,
        exact: true,
        elapsed: start.elapsed(),
    })
}

struct Search<'a> {
    d: &'a Digraph,
    target: usize,
    prune: bool,
    ceiling: Option<Degree>,
    best: Option<(Degree, VertexSet)>,
    visited: u64,
    pruned: u64,
    done: bool,
}

impl Search<'_> {
    /// Include/exclude on the smallest pool vertex, include first. Sets are
    /// therefore completed in lexicographic order, and only a strictly better
    /// value replaces the incumbent.
    fn descend(&mut self, selected: VertexSet, mut pool: VertexSet) {
        if self.done {
            return;
        }
        self.visited += 1;

        let chosen = selected.len();
        if chosen == self.target {
            let value = self.d.min_out_degree(&selected).expect("same universe");
            if self.best.as_ref().is_none_or(|(b, _)| value > *b) {
                if self.ceiling == Some(value) {
                    self.done = true;
                }
                self.best = Some((value, selected));
            }
            return;
        }
        if chosen + pool.len() < self.target {
            return;
        }

        if self.prune {
            if let Some((best, _)) = &self.best {
                if !self.peel(&selected, &mut pool, best + 1) {
                    self.pruned += 1;
                    return;
                }
            }
        }

        let v = pool.first().expect("pool is large enough to finish");
        pool.remove(v);
        let mut with_v = selected.clone();
        with_v.insert(v);
        self.descend(with_v, pool.clone());
        self.descend(selected, pool);
    }

    /// Drops pool vertices that cannot reach `need` out-neighbours even if
    /// every remaining candidate were chosen, to a fixpoint. Returns false
    /// when the node cannot beat the incumbent.
    fn peel(&self, selected: &VertexSet, pool: &mut VertexSet, need: Degree) -> bool {
        loop {
            let reach = selected.union(pool);
            if selected
                .iter()
                .any(|s| self.d.degree_into(s, reach.words()) < need)
            {
                return false;
            }
            let weak: Vec<_> = pool
                .iter()
                .filter(|&c| self.d.degree_into(c, reach.words()) < need)
                .collect();
            if weak.is_empty() {
                return true;
            }
            for c in weak {
                pool.remove(c);
            }
            if selected.len() + pool.len() < self.target {
                return false;
            }
        }
    }
}
