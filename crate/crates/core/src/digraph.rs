//! Dense bit-matrix digraphs and vertex subsets.
//!
//! Each row of the adjacency matrix is padded to a whole number of 64-bit
//! words, so the out-degree of `v` inside a subset `X` is a word-wise AND of
//! row `v` with the bits of `X` followed by a popcount.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Vertex identifier. Vertices of an `n`-vertex digraph are `0..n`.
pub type Vertex = usize;

/// An out-degree count.
pub type Degree = usize;

pub(crate) const WORD_BITS: usize = 64;

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A subset of the vertices `0..owner_n` of some digraph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    owner_n: usize,
    bits: Vec<u64>,
}

impl VertexSet {
    pub fn empty(owner_n: usize) -> Self {
        Self {
            owner_n,
            bits: vec![0; words_for(owner_n)],
        }
    }

    pub fn full(owner_n: usize) -> Self {
        let mut set = Self::empty(owner_n);
        set.insert_range(0, owner_n);
        set
    }

    /// Builds a set from vertex ids, rejecting ids `>= owner_n`.
    pub fn from_ids<I>(owner_n: usize, ids: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut set = Self::empty(owner_n);
        for v in ids {
            if v >= owner_n {
                return Err(Error::VertexOutOfRange { vertex: v, n: owner_n });
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Interprets a single word as a set over `owner_n <= 64` vertices.
    pub fn from_mask(owner_n: usize, mask: u64) -> Self {
        assert!(owner_n <= WORD_BITS, "mask sets hold at most 64 vertices");
        if owner_n < WORD_BITS {
            assert_eq!(mask >> owner_n, 0, "mask has bits beyond owner_n");
        }
        let mut set = Self::empty(owner_n);
        if let Some(w) = set.bits.first_mut() {
            *w = mask;
        }
        set
    }

    pub fn owner_n(&self) -> usize {
        self.owner_n
    }

    pub fn words(&self) -> &[u64] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.owner_n && self.bits[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// # Panics
    ///
    /// Panics if `v >= owner_n`.
    pub fn insert(&mut self, v: Vertex) {
        assert!(v < self.owner_n, "vertex {v} out of range {}", self.owner_n);
        self.bits[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: Vertex) {
        if v < self.owner_n {
            self.bits[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        }
    }

    /// Inserts every vertex in `start..end`.
    pub(crate) fn insert_range(&mut self, start: usize, end: usize) {
        set_bit_range(&mut self.bits, start, end);
    }

    pub fn first(&self) -> Option<Vertex> {
        self.bits
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD_BITS + w.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Ones<'_> {
        Ones {
            words: &self.bits,
            index: 0,
            current: self.bits.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// The single-word mask of a set over at most 64 vertices.
    pub fn as_mask(&self) -> Option<u64> {
        match self.bits.len() {
            0 => Some(0),
            1 => Some(self.bits[0]),
            _ => None,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        Self::full(self.owner_n).difference(self)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.owner_n, other.owner_n, "sets over different universes");
        Self {
            owner_n: self.owner_n,
            bits: self.bits.iter().zip(&other.bits).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    /// Members `>= offset` and `< offset + len`, re-indexed to start at 0.
    pub fn window(&self, offset: usize, len: usize) -> Self {
        let mut out = Self::empty(len);
        for v in self.iter().filter(|&v| v >= offset && v < offset + len) {
            out.insert(v - offset);
        }
        out
    }

    /// Lexicographic order of the increasing id sequences. A proper prefix
    /// sorts first, so the empty set is the minimum.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

/// [`VertexSet::lex_cmp`] specialised to single-word masks.
pub(crate) fn lex_cmp_mask(a: u64, b: u64) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let d = (a ^ b).trailing_zeros();
    if a >> d & 1 == 1 {
        // b lacks d; b is smaller only if it ends before d
        if b >> d == 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    } else if a >> d == 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

fn set_bit_range(words: &mut [u64], start: usize, end: usize) {
    let mut i = start;
    while i < end {
        let w = i / WORD_BITS;
        let lo = i % WORD_BITS;
        let hi = (end - w * WORD_BITS).min(WORD_BITS);
        let span = hi - lo;
        let mask = if span == WORD_BITS { !0 } else { ((1u64 << span) - 1) << lo };
        words[w] |= mask;
        i = w * WORD_BITS + hi;
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Iterator over set bits of a word slice, lowest first.
pub struct Ones<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

/// A loopless digraph on vertices `0..n` stored as a dense bit matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Digraph {
    /// The arcless digraph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let stride = words_for(n);
        Self {
            n,
            stride,
            bits: vec![0; n * stride],
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut d = Self::new(n);
        for (u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    pub fn add_arc(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.set_arc(u, v);
        Ok(())
    }

    pub(crate) fn set_arc(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(u != v);
        self.bits[u * self.stride + v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    /// Adds every arc from `sources` to `targets`, both given as id ranges.
    pub(crate) fn add_block_arcs(
        &mut self,
        sources: std::ops::Range<usize>,
        targets: std::ops::Range<usize>,
    ) {
        for u in sources {
            debug_assert!(!targets.contains(&u));
            let row = &mut self.bits[u * self.stride..(u + 1) * self.stride];
            set_bit_range(row, targets.start, targets.end);
        }
    }

    /// Copies the arcs of `other` into this digraph, shifting ids by `offset`.
    pub(crate) fn embed(&mut self, other: &Digraph, offset: usize) {
        for u in 0..other.n {
            for v in other.out_iter(u) {
                self.set_arc(u + offset, v + offset);
            }
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.row(u)[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Row `u` of the adjacency matrix.
    pub fn row(&self, u: Vertex) -> &[u64] {
        &self.bits[u * self.stride..(u + 1) * self.stride]
    }

    fn out_iter(&self, u: Vertex) -> Ones<'_> {
        let row = self.row(u);
        Ones {
            words: row,
            index: 0,
            current: row.first().copied().unwrap_or(0),
        }
    }

    pub fn out_neighbors(&self, u: Vertex) -> VertexSet {
        VertexSet {
            owner_n: self.n,
            bits: self.row(u).to_vec(),
        }
    }

    pub fn out_degree(&self, u: Vertex) -> Degree {
        popcount(self.row(u))
    }

    pub fn out_degrees(&self) -> Vec<Degree> {
        (0..self.n).map(|u| self.out_degree(u)).collect()
    }

    pub fn in_degrees(&self) -> Vec<Degree> {
        let mut deg = vec![0; self.n];
        for u in 0..self.n {
            for v in self.out_iter(u) {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn arc_count(&self) -> usize {
        popcount(&self.bits)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| self.out_iter(u).map(move |v| (u, v)))
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    fn check_set(&self, x: &VertexSet) -> Result<()> {
        if x.owner_n == self.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                set_n: x.owner_n,
                graph_n: self.n,
            })
        }
    }

    /// Number of out-neighbours of `v` inside `x`.
    pub fn out_degree_in(&self, x: &VertexSet, v: Vertex) -> Result<Degree> {
        self.check_set(x)?;
        if !x.contains(v) {
            return Err(Error::NotInSubset(v));
        }
        Ok(self.degree_into(v, &x.bits))
    }

    #[inline]
    pub(crate) fn degree_into(&self, v: Vertex, set_bits: &[u64]) -> Degree {
        self.row(v)
            .iter()
            .zip(set_bits)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Minimum out-degree of the subdigraph induced by `x`; 0 when `x` is empty.
    pub fn min_out_degree(&self, x: &VertexSet) -> Result<Degree> {
        self.check_set(x)?;
        Ok(x.iter().map(|v| self.degree_into(v, &x.bits)).min().unwrap_or(0))
    }

    /// Minimum out-degree of the whole digraph.
    pub fn min_degree(&self) -> Degree {
        (0..self.n).map(|v| self.out_degree(v)).min().unwrap_or(0)
    }

    /// The subdigraph induced by `x`, relabelled by increasing original id.
    pub fn induced(&self, x: &VertexSet) -> Result<Digraph> {
        self.check_set(x)?;
        let ids = x.to_vec();
        let mut out = Digraph::new(ids.len());
        for (i, &u) in ids.iter().enumerate() {
            for (j, &v) in ids.iter().enumerate() {
                if self.has_arc(u, v) {
                    out.set_arc(i, j);
                }
            }
        }
        Ok(out)
    }

    /// True iff every pair of distinct vertices is joined by exactly one arc.
    pub fn is_tournament(&self) -> bool {
        (0..self.n).all(|u| ((u + 1)..self.n).all(|v| self.has_arc(u, v) != self.has_arc(v, u)))
    }

    /// Removes `v`; higher ids shift down by one.
    pub fn delete_vertex(&self, v: Vertex) -> Result<Digraph> {
        self.check_vertex(v)?;
        let keep = self.vertices().difference(&VertexSet::from_ids(self.n, [v])?);
        self.induced(&keep)
    }
}

fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arc_count())
            .finish()
    }
}
