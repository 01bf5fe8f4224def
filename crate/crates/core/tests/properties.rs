use cyclotour::search::{branch_bound_max_with, BranchBoundOptions};
use cyclotour::{
    branch_bound_max, certify_bound, cyclic_tournament, enumerate_max, min_identity_check,
    partition_parts, Digraph, SearchConfig, VertexSet,
};
use proptest::prelude::*;

fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let arcs = bits
                .into_iter()
                .enumerate()
                .filter(|&(i, b)| b && i / n != i % n)
                .map(|(i, _)| (i / n, i % n));
            Digraph::from_arcs(n, arcs).unwrap()
        })
    })
}

fn arb_tournament(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |flips| {
            let mut d = Digraph::new(n);
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            for ((u, v), flip) in pairs.zip(flips) {
                let (a, b) = if flip { (v, u) } else { (u, v) };
                d.add_arc(a, b).unwrap();
            }
            d
        })
    })
}

fn subset_of(d: &Digraph, mask: u64) -> VertexSet {
    let n = d.order();
    VertexSet::from_ids(n, (0..n).filter(|&v| mask >> v & 1 == 1)).unwrap()
}

proptest! {
    #[test]
    fn min_degree_is_at_most_size_minus_one(d in arb_digraph(20), mask in any::<u64>()) {
        let x = subset_of(&d, mask);
        let m = d.min_out_degree(&x).unwrap();
        prop_assert!(m <= x.len().saturating_sub(1));
    }

    #[test]
    fn tournament_subsets_lose_half(d in arb_tournament(20), mask in any::<u64>()) {
        prop_assert!(d.is_tournament());
        let x = subset_of(&d, mask);
        if !x.is_empty() {
            prop_assert!(d.min_out_degree(&x).unwrap() <= (x.len() - 1) / 2);
        }
    }

    #[test]
    fn induced_agrees_with_in_place(d in arb_digraph(20), mask in any::<u64>()) {
        let x = subset_of(&d, mask);
        let sub = d.induced(&x).unwrap();
        prop_assert_eq!(sub.order(), x.len());
        prop_assert_eq!(sub.min_out_degree(&sub.vertices()).unwrap(), d.min_out_degree(&x).unwrap());
    }

    #[test]
    fn deleting_a_vertex_costs_at_most_one(d in arb_digraph(20), pick in any::<usize>()) {
        let v = pick % d.order();
        let smaller = d.delete_vertex(v).unwrap();
        let before = d.out_degrees();
        let kept: Vec<_> = (0..d.order()).filter(|&u| u != v).collect();
        for (new, &old) in kept.iter().enumerate() {
            let delta = before[old] - smaller.out_degree(new);
            prop_assert!(delta == usize::from(d.has_arc(old, v)));
        }
    }

    #[test]
    fn certificates_sound_on_t3(mask in 0u64..1 << 27) {
        let t3 = cyclic_tournament(3).unwrap();
        let x = subset_of(&t3, mask);
        prop_assume!(x.len() <= 13);
        let (bound, cert) = certify_bound(3, &x).unwrap();
        prop_assert!(t3.min_out_degree(&x).unwrap() <= bound);
        prop_assert!(bound <= 5);
        prop_assert_eq!(cert.replay().unwrap(), bound);
        // pure function of (k, X)
        prop_assert_eq!(certify_bound(3, &x).unwrap().1, cert);
        if partition_parts(&x, 3).unwrap().iter().all(|p| !p.is_empty()) {
            prop_assert!(min_identity_check(&t3, 3, &x).unwrap());
        }
    }

    #[test]
    fn solvers_agree_with_and_without_pruning(d in arb_digraph(10), size in 0usize..=10) {
        prop_assume!(size <= d.order());
        let fast = branch_bound_max(&d, size).unwrap();
        let slow = branch_bound_max_with(&d, size, &BranchBoundOptions { prune: false }).unwrap();
        let en = enumerate_max(&d, size..=size, &SearchConfig::default()).unwrap();
        prop_assert_eq!(&fast.best_set, &en.best_set);
        prop_assert_eq!(&slow.best_set, &en.best_set);
        prop_assert_eq!(fast.best_value, en.best_value);
    }

    #[test]
    fn sweep_is_max_of_size_classes(d in arb_digraph(10), hi in 0usize..=10) {
        let hi = hi.min(d.order());
        let sweep = enumerate_max(&d, 0..=hi, &SearchConfig::default()).unwrap();
        let per_size = (0..=hi)
            .map(|s| enumerate_max(&d, s..=s, &SearchConfig::default()).unwrap().best_value)
            .max()
            .unwrap();
        prop_assert_eq!(sweep.best_value, per_size);
        let threaded = enumerate_max(&d, 0..=hi, &SearchConfig { threads: 3, ..Default::default() }).unwrap();
        prop_assert_eq!(threaded.best_set, sweep.best_set);
    }
}
