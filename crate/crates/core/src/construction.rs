//! The recursive cyclic tournaments `T_k` and the derived digraphs `D_k`.
//!
//! `T_0` is a single vertex. `T_{k+1}` is three copies of `T_k` on the id
//! blocks `A = [0, 3^k)`, `B = [3^k, 2*3^k)` and `C = [2*3^k, 3^(k+1))`, with
//! every arc `A -> B`, `B -> C` and `C -> A` added. Under this numbering the
//! most significant base-3 digit of a vertex names its copy, which gives the
//! closed-form arc rule in [`trit_arc`].

use crate::digraph::{Digraph, Vertex};
use crate::error::{Error, Result};

/// Largest vertex count the builders accept unless told otherwise (`3^10`).
pub const DEFAULT_MAX_ORDER: u64 = 59_049;

/// `3^k`, or an overflow error once it leaves `u64`.
pub fn pow3(k: u32) -> Result<u64> {
    3u64.checked_pow(k).ok_or(Error::Overflow(k))
}

/// Base-3 label of a vertex of `T_k`, most significant digit first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TritLabel {
    digits: Vec<u8>,
}

impl TritLabel {
    pub fn of(v: Vertex, k: u32) -> Result<Self> {
        let order = pow3(k)?;
        if v as u64 >= order {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: order as usize,
            });
        }
        let mut digits = vec![0u8; k as usize];
        let mut rest = v as u64;
        for d in digits.iter_mut().rev() {
            *d = (rest % 3) as u8;
            rest /= 3;
        }
        Ok(Self { digits })
    }

    pub fn level(&self) -> u32 {
        self.digits.len() as u32
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn vertex(&self) -> Vertex {
        self.digits.iter().fold(0, |acc, &d| acc * 3 + d as usize)
    }

    /// Which top-level copy the vertex sits in: 0 = A, 1 = B, 2 = C.
    /// `None` at level 0.
    pub fn copy(&self) -> Option<u8> {
        self.digits.first().copied()
    }
}

/// Sizes and bounds attached to level `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelParams {
    pub k: u32,
    /// `3^k`
    pub order: u64,
    /// Common out-degree of `T_k`, `(3^k - 1) / 2`.
    pub reg_degree: u64,
    /// Half the order of `D_k`; equal to `reg_degree`.
    pub n: u64,
    /// Minimum out-degree of `D_k`, `n - 1` (negative only at `k = 0`).
    pub s: i64,
    /// `((3^k - 1)/2 - k) / 2`, the cap on the minimum out-degree of any
    /// subset of `T_k` with at most `n` vertices.
    pub bound: u64,
}

pub fn level_params(k: u32) -> Result<LevelParams> {
    let order = pow3(k)?;
    let reg_degree = (order - 1) / 2;
    let excess = reg_degree - k as u64;
    debug_assert_eq!(excess % 2, 0);
    Ok(LevelParams {
        k,
        order,
        reg_degree,
        n: reg_degree,
        s: reg_degree as i64 - 1,
        bound: excess / 2,
    })
}

fn check_order(order: u64, limit: u64) -> Result<()> {
    if order > limit {
        Err(Error::SizeLimit { order, limit })
    } else {
        Ok(())
    }
}

/// `T_k`, built by repeated [`compose_cyclic`].
pub fn cyclic_tournament(k: u32) -> Result<Digraph> {
    cyclic_tournament_with_limit(k, DEFAULT_MAX_ORDER)
}

pub fn cyclic_tournament_with_limit(k: u32, limit: u64) -> Result<Digraph> {
    check_order(pow3(k)?, limit)?;
    if k == 0 {
        return Ok(Digraph::new(1));
    }
    let copy = cyclic_tournament_with_limit(k - 1, limit)?;
    compose_cyclic_with_limit(&copy, &copy, &copy, limit)
}

/// Disjoint union of `a`, `b`, `c` (in that id order) plus all arcs
/// `a -> b`, `b -> c` and `c -> a`.
pub fn compose_cyclic(a: &Digraph, b: &Digraph, c: &Digraph) -> Result<Digraph> {
    compose_cyclic_with_limit(a, b, c, DEFAULT_MAX_ORDER)
}

pub fn compose_cyclic_with_limit(
    a: &Digraph,
    b: &Digraph,
    c: &Digraph,
    limit: u64,
) -> Result<Digraph> {
    let (na, nb, nc) = (a.order(), b.order(), c.order());
    let total = na + nb + nc;
    check_order(total as u64, limit)?;

    let block_a = 0..na;
    let block_b = na..na + nb;
    let block_c = na + nb..total;

    let mut d = Digraph::new(total);
    d.embed(a, block_a.start);
    d.embed(b, block_b.start);
    d.embed(c, block_c.start);
    d.add_block_arcs(block_a.clone(), block_b.clone());
    d.add_block_arcs(block_b, block_c.clone());
    d.add_block_arcs(block_c, block_a);
    Ok(d)
}

/// Arc rule of `T_k` without building it: at the most significant base-3
/// position where `u` and `v` differ, `u -> v` iff `v`'s digit is one more
/// than `u`'s modulo 3.
pub fn trit_arc(u: Vertex, v: Vertex, k: u32) -> Result<bool> {
    let order = pow3(k)?;
    for w in [u, v] {
        if w as u64 >= order {
            return Err(Error::VertexOutOfRange {
                vertex: w,
                n: order as usize,
            });
        }
    }
    if u == v {
        return Err(Error::SelfLoop(u));
    }
    let (mut u, mut v) = (u as u64, v as u64);
    let mut place = order / 3;
    loop {
        let (du, dv) = (u / place, v / place);
        if du != dv {
            return Ok((dv + 3 - du) % 3 == 1);
        }
        u %= place;
        v %= place;
        place /= 3;
    }
}

/// `D_k`: `T_k` with vertex 0 deleted. It has `2n` vertices and minimum
/// out-degree `n - 1`, where `n = (3^k - 1) / 2`.
pub fn counterexample_digraph(k: u32) -> Result<Digraph> {
    if k == 0 {
        return Err(Error::LevelZero(k));
    }
    cyclic_tournament(k)?.delete_vertex(0)
}
