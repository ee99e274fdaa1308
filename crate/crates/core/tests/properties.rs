//! Randomized structural laws over the whole public surface: every property
//! here pits a fast-path implementation against either an algebraic identity
//! or the naive module's independent route.

use proptest::prelude::*;
use std::collections::BTreeSet;
use topoforge_core::maps::{enumerate_functions, product_topology, FiniteFunction};
use topoforge_core::openclasses::{
    generated_tau12, is_b_open, is_t12_open, t12_closure, t12_open_family,
};
use topoforge_core::operators::{OperatorKind, OperatorTable};
use topoforge_core::{naive, FiniteTopology, PointSet, SetFamily};

/// Close a seed family under pairwise unions and intersections; always lands
/// on a topology.
fn close_to_topology(n: usize, seeds: &[u32]) -> FiniteTopology {
    let full = PointSet::full(n).mask();
    let mut fam: BTreeSet<u32> = seeds.iter().map(|&m| m & full).collect();
    fam.insert(0);
    fam.insert(full);
    loop {
        let snapshot: Vec<u32> = fam.iter().copied().collect();
        let before = fam.len();
        for &a in &snapshot {
            for &b in &snapshot {
                fam.insert(a | b);
                fam.insert(a & b);
            }
        }
        if fam.len() == before {
            break;
        }
    }
    let masks: Vec<u32> = fam.into_iter().collect();
    FiniteTopology::from_masks(n, &masks).expect("union/intersection closure is a topology")
}

fn topology_strategy(max_n: usize) -> impl Strategy<Value = FiniteTopology> {
    (1usize..=max_n).prop_flat_map(|n| {
        let full = PointSet::full(n).mask();
        proptest::collection::vec(0..=full, 0..5)
            .prop_map(move |seeds| close_to_topology(n, &seeds))
    })
}

/// A topology plus an operator table repaired to be associated with it.
fn associated_pair_strategy(
    max_n: usize,
) -> impl Strategy<Value = (FiniteTopology, OperatorTable, OperatorTable)> {
    topology_strategy(max_n).prop_flat_map(|top| {
        let n = top.carrier();
        let full = PointSet::full(n).mask();
        let len = 1usize << n;
        (
            Just(top),
            proptest::collection::vec(0..=full, len),
            proptest::collection::vec(0..=full, len),
        )
            .prop_map(|(top, mut im1, mut im2)| {
                for w in top.opens().masks() {
                    im1[w as usize] |= w;
                    im2[w as usize] |= w;
                }
                let n = top.carrier();
                let t1 = OperatorTable::new(n, im1).unwrap();
                let t2 = OperatorTable::new(n, im2).unwrap();
                (top, t1, t2)
            })
    })
}

fn table_strategy(max_n: usize) -> impl Strategy<Value = OperatorTable> {
    (1usize..=max_n).prop_flat_map(|n| {
        let full = PointSet::full(n).mask();
        proptest::collection::vec(0..=full, 1usize << n)
            .prop_map(move |images| OperatorTable::new(n, images).unwrap())
    })
}

proptest! {
    #[test]
    fn interior_is_dual_to_closure(top in topology_strategy(4)) {
        let n = top.carrier();
        for m in 0..=PointSet::full(n).mask() {
            let a = PointSet::from_mask(m, n).unwrap();
            prop_assert_eq!(top.interior(a), top.closure(a.complement()).complement());
        }
    }

    #[test]
    fn closure_is_extensive_monotone_idempotent(top in topology_strategy(4)) {
        let n = top.carrier();
        let full = PointSet::full(n).mask();
        for m in 0..=full {
            let a = PointSet::from_mask(m, n).unwrap();
            let ca = top.closure(a);
            prop_assert!(a.is_subset_of(ca));
            prop_assert_eq!(top.closure(ca), ca);
            for m2 in 0..=full {
                let b = PointSet::from_mask(m2, n).unwrap();
                if a.is_subset_of(b) {
                    prop_assert!(ca.is_subset_of(top.closure(b)));
                }
            }
        }
    }

    #[test]
    fn monotonicity_scan_agrees_with_all_pairs(t in table_strategy(4)) {
        prop_assert_eq!(t.is_monotone(), naive::is_monotone(t.images(), t.carrier()));
    }

    #[test]
    fn union_preservation_scan_agrees_with_all_pairs(t in table_strategy(4)) {
        prop_assert_eq!(
            t.preserves_binary_unions(),
            naive::preserves_binary_unions(t.images(), t.carrier())
        );
    }

    #[test]
    fn bi_operator_closure_laws(
        (top, t1, t2) in associated_pair_strategy(3)
    ) {
        let n = top.carrier();
        let full = PointSet::full(n).mask();
        for m in 0..=full {
            let a = PointSet::from_mask(m, n).unwrap();
            let c = t12_closure(&t1, &t2, a);
            prop_assert!(a.is_subset_of(c), "extensive");
            prop_assert_eq!(t12_closure(&t1, &t2, c), c, "idempotent");
            for m2 in 0..=full {
                let b = PointSet::from_mask(m2, n).unwrap();
                if a.is_subset_of(b) {
                    prop_assert!(c.is_subset_of(t12_closure(&t1, &t2, b)), "monotone");
                }
            }
        }
    }

    #[test]
    fn b_open_is_the_canonical_bi_operator_class(top in topology_strategy(4)) {
        let n = top.carrier();
        let t1 = OperatorTable::tabulate(OperatorKind::ClosureInterior, &top);
        let t2 = OperatorTable::tabulate(OperatorKind::InteriorClosure, &top);
        for m in 0..=PointSet::full(n).mask() {
            let a = PointSet::from_mask(m, n).unwrap();
            prop_assert_eq!(is_b_open(&top, a), is_t12_open(&t1, &t2, a));
        }
    }

    #[test]
    fn generated_topology_agrees_with_naive_fixpoint(
        (_, t1, t2) in associated_pair_strategy(3)
    ) {
        let n = t1.carrier();
        let fast = generated_tau12(&t1, &t2);
        let slow: Vec<u32> = naive::generated_tau12(t1.images(), t2.images(), n)
            .iter()
            .map(naive::set_to_mask)
            .collect();
        prop_assert_eq!(fast.opens().masks().collect::<Vec<_>>(), slow);
        for m in t12_open_family(&t1, &t2).masks() {
            prop_assert!(fast.opens().contains_mask(m));
        }
    }

    #[test]
    fn family_encoding_round_trips(
        n in 1usize..=6,
        raw in proptest::collection::vec(0u32..64, 0..12),
    ) {
        let full = PointSet::full(n).mask();
        let masks: Vec<u32> = raw.into_iter().map(|m| m & full).collect();
        let mut fam = SetFamily::empty(n);
        for m in masks {
            fam.insert_mask(m);
        }
        let enc = fam.encoding().unwrap();
        prop_assert_eq!(SetFamily::from_encoding(n, enc).unwrap(), fam);
    }

    #[test]
    fn preimage_respects_boolean_algebra(
        dom in 1usize..=6,
        cod in 1usize..=6,
        raw in proptest::collection::vec(0usize..6, 6),
        m1 in 0u32..64,
        m2 in 0u32..64,
    ) {
        let images: Vec<usize> = raw.into_iter().take(dom).map(|y| y % cod).collect();
        let f = FiniteFunction::new(dom, cod, images).unwrap();
        let full = PointSet::full(cod).mask();
        let a = PointSet::from_mask(m1 & full, cod).unwrap();
        let b = PointSet::from_mask(m2 & full, cod).unwrap();
        prop_assert_eq!(f.preimage(a.union(b)), f.preimage(a).union(f.preimage(b)));
        prop_assert_eq!(f.preimage(a.intersect(b)), f.preimage(a).intersect(f.preimage(b)));
        prop_assert_eq!(f.preimage(a.complement()), f.preimage(a).complement());
        prop_assert!(f.image(f.preimage(a)).is_subset_of(a));
    }

    #[test]
    fn product_topology_has_open_boxes_and_continuous_projections(
        tx in topology_strategy(3),
        ty in topology_strategy(3),
    ) {
        let p = product_topology(&tx, &ty).unwrap();
        let (nx, ny) = (tx.carrier(), ty.carrier());
        // projections: pair (x, y) sits at x*ny + y
        let proj1 = FiniteFunction::new(
            nx * ny,
            nx,
            (0..nx * ny).map(|i| i / ny).collect(),
        )
        .unwrap();
        let proj2 = FiniteFunction::new(
            nx * ny,
            ny,
            (0..nx * ny).map(|i| i % ny).collect(),
        )
        .unwrap();
        for u in tx.opens().members() {
            prop_assert!(p.is_open(proj1.preimage(u)));
        }
        for v in ty.opens().members() {
            prop_assert!(p.is_open(proj2.preimage(v)));
        }
    }

    #[test]
    fn function_index_round_trips(
        dom in 1usize..=4,
        cod in 1usize..=4,
    ) {
        for (k, f) in enumerate_functions(dom, cod).unwrap().enumerate() {
            prop_assert_eq!(f.index(), k as u64);
            prop_assert_eq!(FiniteFunction::from_index(dom, cod, k as u64).unwrap(), f);
        }
    }
}
