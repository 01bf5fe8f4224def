//! Upper-bound certificates for the minimum out-degree of small subsets of
//! `T_k`.
//!
//! [`certify_bound`] splits `X` by top-level copy into `X_A`, `X_B`, `X_C`
//! and recurses into one copy:
//!
//! * `X` empty or `k = 0`: bound 0.
//! * some part empty: rotate so that `X_B` is empty and `X_A` is not. A
//!   vertex of `X_A` only has out-neighbours inside its own copy, so the
//!   bound is the copy's regular degree `(3^(k-1) - 1) / 2`.
//! * all parts nonempty: two of the three part sizes fall on the same side
//!   of `3^(k-1) / 2`. Rotate them into positions A and B.
//!   - both small: bound `cert(X_A) + |X_B|`;
//!   - both large: take the smallest `(3^(k-1) - 1) / 2` ids `S` of `X_B`,
//!     bound `cert(S) + (|X_B| - |S|) + |X_C|`.
//!
//! Rotation `r` relabels the parts as `(A, B, C) := (P_r, P_{r+1}, P_{r+2})`
//! (indices mod 3), which keeps the arc directions `A -> B -> C -> A`.

use std::fmt::{self, Write as _};

use crate::construction::pow3;
use crate::digraph::{Degree, Digraph, VertexSet};
use crate::error::{Error, Result};

/// Which step of the case analysis a certificate node applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaseKind {
    Base,
    EmptyPart { rotation: u8 },
    TwoSmall { rotation: u8, child: Box<BoundCertificate> },
    TwoLarge { rotation: u8, chosen: VertexSet, child: Box<BoundCertificate> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCertificate {
    pub level: u32,
    /// The certified subset, in level-`level` coordinates.
    pub subset: VertexSet,
    pub kind: CaseKind,
    pub claimed_bound: Degree,
}

impl BoundCertificate {
    pub fn depth(&self) -> usize {
        match &self.kind {
            CaseKind::Base | CaseKind::EmptyPart { .. } => 1,
            CaseKind::TwoSmall { child, .. } | CaseKind::TwoLarge { child, .. } => 1 + child.depth(),
        }
    }

    /// Re-derives every node's bound from its children and checks the size
    /// hypotheses of each case. Returns the root bound.
    pub fn replay(&self) -> Result<Degree> {
        let bad = |msg: String| Err(Error::MalformedCertificate(msg));
        let k = self.level;
        let order = pow3(k)? as usize;
        if self.subset.owner_n() != order {
            return bad(format!("level {k} subset indexes {} vertices", self.subset.owner_n()));
        }
        let recomputed = match &self.kind {
            CaseKind::Base => {
                if k != 0 && !self.subset.is_empty() {
                    return bad(format!("base node at level {k} with nonempty subset"));
                }
                0
            }
            CaseKind::EmptyPart { rotation } => {
                let [a, b, _] = rotated(&partition_parts(&self.subset, k)?, *rotation);
                if a.is_empty() || !b.is_empty() {
                    return bad(format!("rotation {rotation} does not empty B at level {k}"));
                }
                copy_degree(k)
            }
            CaseKind::TwoSmall { rotation, child } => {
                let [a, b, c] = rotated(&partition_parts(&self.subset, k)?, *rotation);
                let small = copy_degree(k);
                if a.is_empty() || b.is_empty() || c.is_empty() {
                    return bad(format!("two-small node at level {k} has an empty part"));
                }
                if a.len() > small || b.len() > small {
                    return bad(format!("two-small node at level {k} has a large part"));
                }
                expect_child(child, k, &a)?;
                child.replay()? + b.len()
            }
            CaseKind::TwoLarge { rotation, chosen, child } => {
                let [a, b, c] = rotated(&partition_parts(&self.subset, k)?, *rotation);
                let small = copy_degree(k);
                if c.is_empty() {
                    return bad(format!("two-large node at level {k} has an empty part"));
                }
                if a.len() <= small || b.len() <= small {
                    return bad(format!("two-large node at level {k} has a small part"));
                }
                if chosen.len() != small || !chosen.difference(&b).is_empty() {
                    return bad(format!("chosen set at level {k} is not a {small}-subset of B"));
                }
                expect_child(child, k, chosen)?;
                child.replay()? + (b.len() - chosen.len()) + c.len()
            }
        };
        if recomputed != self.claimed_bound {
            return bad(format!(
                "level {k}: claimed {} but children give {recomputed}",
                self.claimed_bound
            ));
        }
        Ok(recomputed)
    }

    /// Indented rendering, one node per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, indent: usize) {
        let pad = "  ".repeat(indent);
        let k = self.level;
        let sizes = match partition_parts(&self.subset, k) {
            Ok(parts) => {
                let r = match &self.kind {
                    CaseKind::Base => 0,
                    CaseKind::EmptyPart { rotation }
                    | CaseKind::TwoSmall { rotation, .. }
                    | CaseKind::TwoLarge { rotation, .. } => *rotation,
                };
                let [a, b, c] = rotated(&parts, r);
                format!(" parts=({},{},{})", a.len(), b.len(), c.len())
            }
            Err(_) => String::new(),
        };
        let (case, rotation) = match &self.kind {
            CaseKind::Base => ("base", None),
            CaseKind::EmptyPart { rotation } => ("empty-part", Some(*rotation)),
            CaseKind::TwoSmall { rotation, .. } => ("two-small", Some(*rotation)),
            CaseKind::TwoLarge { rotation, .. } => ("two-large", Some(*rotation)),
        };
        let _ = write!(out, "{pad}{case} k={k} |X|={}", self.subset.len());
        if let Some(r) = rotation {
            let _ = write!(out, " rotation={r}");
        }
        out.push_str(&sizes);
        if let CaseKind::TwoLarge { chosen, .. } = &self.kind {
            let _ = write!(out, " |S|={}", chosen.len());
        }
        let _ = writeln!(out, " bound={}", self.claimed_bound);
        match &self.kind {
            CaseKind::TwoSmall { child, .. } | CaseKind::TwoLarge { child, .. } => {
                child.render_into(out, indent + 1)
            }
            _ => {}
        }
    }
}

impl fmt::Display for BoundCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn expect_child(child: &BoundCertificate, k: u32, part: &VertexSet) -> Result<()> {
    let block = part.owner_n() / 3;
    let expected = strip_top(part, k);
    if child.level + 1 != k || child.subset != expected {
        return Err(Error::MalformedCertificate(format!(
            "child of level {k} node certifies the wrong subset (block size {block})"
        )));
    }
    Ok(())
}

/// Regular out-degree of a level-`k - 1` copy.
fn copy_degree(k: u32) -> usize {
    let block = 3usize.pow(k - 1);
    (block - 1) / 2
}

/// Splits `x` (a subset of `T_k`'s vertices) by top-level copy.
pub fn partition_parts(x: &VertexSet, k: u32) -> Result<[VertexSet; 3]> {
    if k == 0 {
        return Err(Error::LevelZero(k));
    }
    let order = pow3(k)? as usize;
    if x.owner_n() != order {
        return Err(Error::DimensionMismatch {
            set_n: x.owner_n(),
            graph_n: order,
        });
    }
    let block = order / 3;
    let mut parts = [
        VertexSet::empty(order),
        VertexSet::empty(order),
        VertexSet::empty(order),
    ];
    for v in x.iter() {
        parts[v / block].insert(v);
    }
    Ok(parts)
}

fn rotated(parts: &[VertexSet; 3], r: u8) -> [VertexSet; 3] {
    let r = r as usize;
    [
        parts[r % 3].clone(),
        parts[(r + 1) % 3].clone(),
        parts[(r + 2) % 3].clone(),
    ]
}

/// Re-indexes a subset of one top-level copy into level `k - 1` ids.
fn strip_top(part: &VertexSet, k: u32) -> VertexSet {
    let block = 3usize.pow(k - 1);
    let copy = part.first().map_or(0, |v| v / block);
    part.window(copy * block, block)
}

/// Proves an upper bound on the minimum out-degree of `T_k[X]` for
/// `|X| <= (3^k - 1) / 2`. The returned bound never exceeds
/// `((3^k - 1)/2 - k) / 2`.
pub fn certify_bound(k: u32, x: &VertexSet) -> Result<(Degree, BoundCertificate)> {
    let order = pow3(k)?;
    if x.owner_n() as u64 != order {
        return Err(Error::DimensionMismatch {
            set_n: x.owner_n(),
            graph_n: order as usize,
        });
    }
    let max = (order - 1) / 2;
    if x.len() as u64 > max {
        return Err(Error::SubsetTooLarge { k, size: x.len(), max });
    }
    let cert = certify(k, x);
    Ok((cert.claimed_bound, cert))
}

fn certify(k: u32, x: &VertexSet) -> BoundCertificate {
    let node = |kind, claimed_bound| BoundCertificate {
        level: k,
        subset: x.clone(),
        kind,
        claimed_bound,
    };
    if k == 0 || x.is_empty() {
        return node(CaseKind::Base, 0);
    }
    let parts = partition_parts(x, k).expect("level and size checked by caller");
    let small = copy_degree(k);
    let sizes = parts.each_ref().map(VertexSet::len);
    let at = |r: u8, i: usize| sizes[(r as usize + i) % 3];

    if sizes.contains(&0) {
        let rotation = (0..3u8)
            .find(|&r| at(r, 0) > 0 && at(r, 1) == 0)
            .expect("a nonempty part precedes an empty one cyclically");
        return node(CaseKind::EmptyPart { rotation }, small);
    }

    if let Some(rotation) = (0..3u8).find(|&r| at(r, 0) <= small && at(r, 1) <= small) {
        let [a, b, _] = rotated(&parts, rotation);
        let child = certify(k - 1, &strip_top(&a, k));
        let bound = child.claimed_bound + b.len();
        return node(
            CaseKind::TwoSmall {
                rotation,
                child: Box::new(child),
            },
            bound,
        );
    }

    let rotation = (0..3u8)
        .find(|&r| at(r, 0) > small && at(r, 1) > small)
        .expect("two of three part sizes share a side of the threshold");
    let [_, b, c] = rotated(&parts, rotation);
    let chosen = VertexSet::from_ids(b.owner_n(), b.iter().take(small))
        .expect("ids come from a valid set");
    let child = certify(k - 1, &strip_top(&chosen, k));
    let bound = child.claimed_bound + (b.len() - chosen.len()) + c.len();
    node(
        CaseKind::TwoLarge {
            rotation,
            chosen,
            child: Box::new(child),
        },
        bound,
    )
}

/// Checks that the minimum out-degree of `T_k[X]` equals
/// `min(δ(X_A) + |X_B|, δ(X_B) + |X_C|, δ(X_C) + |X_A|)`, where each part's
/// degree is taken inside its own copy. `t_k` must be `T_k`.
pub fn min_identity_check(t_k: &Digraph, k: u32, x: &VertexSet) -> Result<bool> {
    let parts = partition_parts(x, k)?;
    if t_k.order() != x.owner_n() {
        return Err(Error::DimensionMismatch {
            set_n: x.owner_n(),
            graph_n: t_k.order(),
        });
    }
    if parts.iter().any(VertexSet::is_empty) {
        return Err(Error::EmptyPart);
    }
    let lhs = t_k.min_out_degree(x)?;
    let mut rhs = usize::MAX;
    for i in 0..3 {
        let inner = t_k.min_out_degree(&parts[i])?;
        rhs = rhs.min(inner + parts[(i + 1) % 3].len());
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::cyclic_tournament;

    fn set(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::from_ids(n, ids.iter().copied()).unwrap()
    }

    #[test]
    fn partition_examples() {
        let [a, b, c] = partition_parts(&set(9, &[0, 3, 6]), 2).unwrap();
        assert_eq!((a.to_vec(), b.to_vec(), c.to_vec()), (vec![0], vec![3], vec![6]));
        let [a, b, c] = partition_parts(&set(9, &[0, 1, 2]), 2).unwrap();
        assert_eq!(a.len(), 3);
        assert!(b.is_empty() && c.is_empty());
        let parts = partition_parts(&VertexSet::full(9), 2).unwrap();
        assert!(parts.iter().all(|p| p.len() == 3));
        assert_eq!(partition_parts(&VertexSet::full(1), 0), Err(Error::LevelZero(0)));
    }

    #[test]
    fn empty_set_is_base_case() {
        let (bound, cert) = certify_bound(1, &VertexSet::empty(3)).unwrap();
        assert_eq!(bound, 0);
        assert_eq!(cert.kind, CaseKind::Base);
    }

    #[test]
    fn single_copy_uses_empty_part() {
        let x = set(9, &[0, 1, 2]);
        let (bound, cert) = certify_bound(2, &x).unwrap();
        assert_eq!(bound, 1);
        assert_eq!(cert.kind, CaseKind::EmptyPart { rotation: 0 });
        let t2 = cyclic_tournament(2).unwrap();
        assert_eq!(t2.min_out_degree(&x).unwrap(), 1);
    }

    #[test]
    fn empty_part_rotation_is_smallest() {
        // only C occupied: rotation 2 puts C first and A second
        let (_, cert) = certify_bound(2, &set(9, &[6, 7])).unwrap();
        assert_eq!(cert.kind, CaseKind::EmptyPart { rotation: 2 });
        // A and C occupied, B empty: rotation 0
        let (_, cert) = certify_bound(2, &set(9, &[0, 7])).unwrap();
        assert_eq!(cert.kind, CaseKind::EmptyPart { rotation: 0 });
        // B and C occupied, A empty: rotation 2 gives (C, A, B)
        let (_, cert) = certify_bound(2, &set(9, &[3, 7])).unwrap();
        assert_eq!(cert.kind, CaseKind::EmptyPart { rotation: 2 });
    }

    #[test]
    fn mixed_subset_of_t2() {
        let t2 = cyclic_tournament(2).unwrap();
        let x = set(9, &[0, 3, 6, 7]);
        let (bound, cert) = certify_bound(2, &x).unwrap();
        assert!(bound <= 1);
        assert!(t2.min_out_degree(&x).unwrap() <= bound);
        assert_eq!(cert.replay().unwrap(), bound);
        assert!(matches!(cert.kind, CaseKind::TwoSmall { rotation: 0, .. }));
    }

    #[test]
    fn two_large_case_appears() {
        // parts (5, 5, 1) at k = 3 force both-large on A and B
        let x = set(27, &[0, 1, 2, 3, 4, 9, 10, 11, 12, 13, 18]);
        let (bound, cert) = certify_bound(3, &x).unwrap();
        match &cert.kind {
            CaseKind::TwoLarge { rotation, chosen, .. } => {
                assert_eq!(*rotation, 0);
                assert_eq!(chosen.to_vec(), vec![9, 10, 11, 12]);
            }
            other => panic!("unexpected case {other:?}"),
        }
        assert_eq!(cert.replay().unwrap(), bound);
        assert!(bound <= 5);
        let t3 = cyclic_tournament(3).unwrap();
        assert!(t3.min_out_degree(&x).unwrap() <= bound);
    }

    #[test]
    fn oversized_subset_rejected() {
        assert_eq!(
            certify_bound(2, &set(9, &[0, 1, 2, 3, 4])),
            Err(Error::SubsetTooLarge { k: 2, size: 5, max: 4 })
        );
        assert!(certify_bound(2, &VertexSet::empty(8)).is_err());
    }

    #[test]
    fn tampered_certificate_fails_replay() {
        let (_, mut cert) = certify_bound(2, &set(9, &[0, 3, 6, 7])).unwrap();
        cert.claimed_bound += 1;
        assert!(matches!(cert.replay(), Err(Error::MalformedCertificate(_))));
    }

    #[test]
    fn exhaustive_t2_soundness() {
        let t2 = cyclic_tournament(2).unwrap();
        for mask in 0u64..512 {
            if mask.count_ones() > 4 {
                continue;
            }
            let x = VertexSet::from_mask(9, mask);
            let (bound, cert) = certify_bound(2, &x).unwrap();
            assert!(t2.min_out_degree(&x).unwrap() <= bound, "{x}");
            assert!(bound <= 1);
            assert_eq!(cert.replay().unwrap(), bound);
        }
    }

    #[test]
    fn min_identity_examples() {
        let t2 = cyclic_tournament(2).unwrap();
        assert!(min_identity_check(&t2, 2, &VertexSet::full(9)).unwrap());
        assert!(min_identity_check(&t2, 2, &set(9, &[0, 3, 6])).unwrap());
        assert_eq!(min_identity_check(&t2, 2, &set(9, &[0, 1])), Err(Error::EmptyPart));
    }

    #[test]
    fn render_has_one_line_per_node() {
        let (_, cert) = certify_bound(3, &set(27, &[0, 1, 2, 3, 4, 9, 10, 11, 12, 13, 18])).unwrap();
        let text = cert.render();
        assert_eq!(text.lines().count(), cert.depth());
        assert!(text.starts_with("two-large k=3 |X|=11 rotation=0 parts=(5,5,1) |S|=4 bound="));
        assert!(text.lines().nth(1).unwrap().starts_with("  "));
    }
}
