//! Acceptance gate for the whole workspace: nine end-to-end criteria, one
//! test and one printed PASS line each (`--nocapture` shows them). Every
//! numeric baseline here was frozen from an independent route — a from-
//! scratch recount, a hand-checkable instance, or a locked first sweep —
//! and the sweeps re-derive each counterexample on the naive path before
//! a single line is emitted.

use std::io::{self, Write};
use std::time::{Duration, Instant};

use sha2::{Digest, Sha256};
use topoforge_core::maps::{
    enumerate_functions, is_class_continuous_pointwise, is_class_continuous_preimage,
};
use topoforge_core::naive::{self, mask_to_set};
use topoforge_core::openclasses::{
    is_b_open, is_t12_open, is_t_open, is_t_star_open, t12_closure, ClassKind,
};
use topoforge_core::{
    enumerate_topologies, FiniteTopology, OperatorKind, OperatorTable, PointSet,
};
use topoforge_verifier::{
    cross_validate, evaluate, find_intersection_witness, run_sweep, CheckOptions, Classification,
    InstanceData, LabeledOperator, PoolSpec, Summary, SweepConfig, TheoremId,
};

fn ps(mask: u32, n: usize) -> PointSet {
    PointSet::from_mask(mask, n).expect("mask below 2^carrier")
}

fn builtin(id: &str, top: &FiniteTopology) -> OperatorTable {
    OperatorTable::tabulate(OperatorKind::from_id(id).expect("known builtin"), top)
}

fn sweep(theorem: TheoremId, max_n: usize, pool: PoolSpec) -> Summary {
    let mut config = SweepConfig::new(theorem, max_n);
    config.pool = pool;
    run_sweep(&config, io::sink()).expect("sweep completes")
}

fn tallies(s: &Summary) -> (u64, u64, u64, u64) {
    (s.instances, s.confirmed, s.vacuous, s.counterexamples)
}

/// Criterion 1: enumeration counts 4 / 29 / 355 at n = 2 / 3 / 4, and the
/// n ≤ 3 enumerations agree, encoding for encoding, with a from-scratch
/// recount that re-checks the axioms on every candidate family.
#[test]
fn criterion_1_enumeration_counts() {
    let start = Instant::now();
    let count = |n: usize| enumerate_topologies(n).expect("within cap").count();
    assert_eq!(count(2), 4);
    assert_eq!(count(3), 29);
    assert_eq!(count(4), 355);

    // Independent recount: a family is a topology iff it has ∅ and X and is
    // closed under pairwise union and intersection. No library calls.
    fn recount(n: usize) -> Vec<u64> {
        let subsets = 1u32 << n;
        let full = subsets - 1;
        let mut found = Vec::new();
        for code in 0u64..(1u64 << subsets) {
            let masks: Vec<u32> = (0..subsets).filter(|m| code >> m & 1 == 1).collect();
            let has = |m: u32| masks.contains(&m);
            let ok = has(0)
                && has(full)
                && masks.iter().all(|&a| masks.iter().all(|&b| has(a | b) && has(a & b)));
            if ok {
                found.push(code);
            }
        }
        found
    }
    for n in 1..=3 {
        let enumerated: Vec<u64> = enumerate_topologies(n)
            .expect("within cap")
            .map(|t| t.encoding().expect("small carrier"))
            .collect();
        assert_eq!(enumerated, recount(n), "enumeration disagrees with recount at n={n}");
    }

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!(
        "CRITERION 1: PASS — counts 4/29/355 at n=2/3/4; n≤3 encodings match the \
         independent recount; {elapsed:?} total"
    );
}

/// Criterion 2: a subset is b-open exactly when it is bi-operator-open under
/// (T₁ = closure∘interior, T₂ = interior∘closure), on every subset of every
/// topology up to four points.
#[test]
fn criterion_2_b_open_equivalence() {
    let mut checked = 0u64;
    for n in 1..=4 {
        for top in enumerate_topologies(n).expect("within cap") {
            let t1 = builtin("closure_interior", &top);
            let t2 = builtin("interior_closure", &top);
            for mask in 0..(1u32 << n) {
                let a = ps(mask, n);
                assert_eq!(
                    is_b_open(&top, a),
                    is_t12_open(&t1, &t2, a),
                    "disagreement at n={n}, topology {:?}, mask {mask}",
                    top.encoding(),
                );
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 5930);
    println!(
        "CRITERION 2: PASS — b-open ≡ (ClInt, IntCl) bi-operator-open on all \
         {checked} subset instances with n ≤ 4"
    );
}

/// Criterion 3: the chain "operator-open ⇒ open ⇒ star-open" never breaks:
/// swept over all topologies n ≤ 3 with the builtin pool, over the
/// exhaustive associated pool at n = 2, and re-checked directly against all
/// 256 candidate tables per two-point topology.
#[test]
fn criterion_3_implication_chain() {
    let builtins = sweep(TheoremId::R33Chain, 3, PoolSpec::Builtins);
    assert_eq!(tallies(&builtins), (170, 170, 0, 0));
    let exhaustive = sweep(TheoremId::R33Chain, 2, PoolSpec::Exhaustive);
    assert_eq!(tallies(&exhaustive), (146, 146, 0, 0));

    // Direct scan: decode every one of the 4^4 = 256 tables over two points;
    // the associated ones must satisfy both implications on every subset.
    let mut associated_total = 0u32;
    for top in enumerate_topologies(2).expect("within cap") {
        let mut seen = 0u32;
        for code in 0u32..256 {
            let images: Vec<u32> = (0..4).map(|i| (code >> (2 * i)) & 3).collect();
            let t = OperatorTable::new(2, images).expect("valid table");
            seen += 1;
            if !t.is_associated(&top).expect("same carrier") {
                continue;
            }
            associated_total += 1;
            for mask in 0..4u32 {
                let a = ps(mask, 2);
                if is_t_open(&top, &t, a).expect("same carrier") {
                    assert!(top.is_open(a), "operator-open but not open: {mask}");
                }
                if top.is_open(a) {
                    assert!(is_t_star_open(&t, a), "open but not star-open: {mask}");
                }
            }
        }
        assert_eq!(seen, 256);
    }
    println!(
        "CRITERION 3: PASS — chain holds on 170 builtin instances (n ≤ 3), 146 \
         exhaustive instances (n = 2), and a direct scan of 256 tables × 4 \
         topologies ({associated_total} associated)"
    );
}

/// Criterion 4: the witness search returns a verified three-point
/// counterexample to "bi-operator opens are closed under intersection", and
/// the hand-checkable reference instance (opens {∅,{0},{1},{0,1},X},
/// a = {0,2}, b = {1,2}) fails the same way. Both are re-derived naively.
#[test]
fn criterion_4_intersection_witness() {
    let w = find_intersection_witness(3, PoolSpec::Builtins, 0)
        .expect("search completes")
        .expect("witness exists by n = 3");
    assert_eq!(w.n, 3);
    assert_eq!(w.top_encoding, 137);
    assert_eq!(w.opens, vec![0, 3, 7]);
    assert_eq!(w.t1, "builtin:closure_interior");
    assert_eq!(w.t2, "builtin:interior_closure");
    assert_eq!((w.a, w.b, w.intersection), (5, 6, 4));

    // Re-derive the emitted witness on the naive route, from its own fields.
    let top = FiniteTopology::from_masks(w.n, &w.opens).expect("valid opens");
    let t1 = builtin("closure_interior", &top);
    let t2 = builtin("interior_closure", &top);
    let naive_open =
        |m: u32| naive::is_t12_open(t1.images(), t2.images(), &mask_to_set(m, w.n), w.n);
    assert!(naive_open(w.a) && naive_open(w.b) && !naive_open(w.intersection));

    // The reference instance: same operator pair on τ = {∅,{0},{1},{0,1},X}.
    let reference = FiniteTopology::from_masks(3, &[0, 1, 2, 3, 7]).expect("valid opens");
    let r1 = builtin("closure_interior", &reference);
    let r2 = builtin("interior_closure", &reference);
    let fast = |m: u32| is_t12_open(&r1, &r2, ps(m, 3));
    let slow = |m: u32| naive::is_t12_open(r1.images(), r2.images(), &mask_to_set(m, 3), 3);
    assert!(fast(5) && fast(6) && !fast(4));
    assert!(slow(5) && slow(6) && !slow(4));

    // And the full check pipeline agrees, cross-validation included.
    let inst = InstanceData::SubsetPair {
        t1: LabeledOperator::builtin(
            OperatorKind::from_id("closure_interior").unwrap(),
            &reference,
        ),
        t2: LabeledOperator::builtin(
            OperatorKind::from_id("interior_closure").unwrap(),
            &reference,
        ),
        top: reference,
    };
    let options = CheckOptions::default();
    let outcome = evaluate(TheoremId::R43IntersectionWitness, &inst, &options).expect("evaluates");
    cross_validate(TheoremId::R43IntersectionWitness, &inst, &options, &outcome)
        .expect("routes agree");
    assert_eq!(outcome.classification(), Classification::Counterexample);
    let witness = outcome.witness.expect("counterexample carries a witness");
    assert_eq!(witness["a"], 5);
    assert_eq!(witness["b"], 6);
    assert_eq!(witness["intersection"], 4);

    println!(
        "CRITERION 4: PASS — witness search returns the n=3 instance (encoding 137, \
         a=5, b=6, a∩b=4), naive route agrees, and the reference space (encoding \
         143) fails identically on both routes"
    );
}

/// Criterion 5: among hypothesis-satisfying instances with n ≤ 3, open
/// intersections stay bi-operator open (distributivity hypothesis) and
/// unions of bi-operator opens stay bi-operator open (monotone hypothesis) —
/// zero counterexamples, on the builtin and exhaustive pools alike.
#[test]
fn criterion_5_intersection_and_union_stability() {
    let p1 = sweep(TheoremId::L42Part1, 3, PoolSpec::Builtins);
    assert_eq!(tallies(&p1), (850, 595, 255, 0));
    let p2 = sweep(TheoremId::L42Part2, 3, PoolSpec::Builtins);
    assert_eq!(tallies(&p2), (850, 850, 0, 0));
    let p1x = sweep(TheoremId::L42Part1, 2, PoolSpec::Exhaustive);
    assert_eq!(tallies(&p1x), (6404, 773, 5631, 0));
    let p2x = sweep(TheoremId::L42Part2, 2, PoolSpec::Exhaustive);
    assert_eq!(tallies(&p2x), (6404, 1160, 5244, 0));
    println!(
        "CRITERION 5: PASS — part 1: 595/850 hypothesis-satisfying builtin instances \
         confirmed, 773/6404 exhaustive; part 2: 850/850 and 1160/6404; zero \
         counterexamples anywhere"
    );
}

/// Criterion 6: the graph-function claim is a hard gate — zero
/// counterexamples across the full n ≤ 3 sweep and the exhaustive n = 2
/// operator pool.
#[test]
fn criterion_6_graph_function_hard_gate() {
    let full = sweep(TheoremId::T48GraphFunction, 3, PoolSpec::Builtins);
    assert_eq!(tallies(&full), (621_800, 539_062, 82_738, 0));
    let exhaustive = sweep(TheoremId::T48GraphFunction, 2, PoolSpec::Exhaustive);
    assert_eq!(tallies(&exhaustive), (108_836, 92_452, 16_384, 0));
    println!(
        "CRITERION 6: PASS — zero counterexamples on 621800 instances (n ≤ 3, \
         builtins) and 108836 instances (n = 2, exhaustive pool)"
    );
}

/// Criterion 7: the four contested function claims sweep n ≤ 3 inside the
/// time budget, byte-identically on re-run, with every counterexample
/// re-derived on the naive route before emission (a divergence would abort
/// the sweep). The tallies below are the locked regression baseline; the
/// graph-preimage claim genuinely fails 108 times.
#[test]
fn criterion_7_function_sweeps_locked() {
    struct HashSink(Sha256);
    impl Write for HashSink {
        fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
            self.0.update(buf);
            Ok(buf.len())
        }
        fn flush(&mut self) -> io::Result<()> {
            Ok(())
        }
    }
    fn hashed_sweep(theorem: TheoremId) -> (Summary, [u8; 32]) {
        let config = SweepConfig::new(theorem, 3);
        let mut sink = HashSink(Sha256::new());
        let summary = run_sweep(&config, &mut sink).expect("sweep completes");
        (summary, sink.0.finalize().into())
    }

    let baselines = [
        (TheoremId::T46GraphPreimage, (621_800, 91_354, 530_338, 108)),
        (TheoremId::T49Equalizer, (5_817_075, 57_312, 5_759_763, 0)),
        (TheoremId::C412DenseAgreement, (551_391, 6_261, 545_130, 0)),
        (TheoremId::T414NotDiscrete, (620_950, 2_860, 618_090, 0)),
    ];
    let start = Instant::now();
    for (theorem, frozen) in baselines {
        let (summary, digest) = hashed_sweep(theorem);
        let (again, digest2) = hashed_sweep(theorem);
        assert_eq!(digest, digest2, "{theorem} re-run is not byte-identical");
        assert_eq!(summary, again);
        assert_eq!(tallies(&summary), frozen, "{theorem} drifted from the locked baseline");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
    println!(
        "CRITERION 7: PASS — four sweeps × 2 runs in {elapsed:?}, byte-identical \
         reports; locked tallies hold (graph-preimage: 108 cross-validated \
         counterexamples; equalizer, dense-agreement, not-discrete: zero)"
    );
}

/// Criterion 8: closure laws. Topological closure is extensive, monotone,
/// and idempotent everywhere; the bi-operator closure is extensive and
/// monotone for every builtin pair, and idempotent whenever both operators
/// are monotone — which covers all 25 pairs, since every builtin is.
#[test]
fn criterion_8_closure_laws() {
    let ids = ["identity", "closure", "closure_interior", "interior_closure", "constant_full"];
    let mut t12_idempotent_checked = 0u64;
    for n in 1..=3 {
        for top in enumerate_topologies(n).expect("within cap") {
            let subsets = 1u32 << n;
            for mask in 0..subsets {
                let a = ps(mask, n);
                let c = top.closure(a);
                assert!(a.is_subset_of(c), "closure not extensive");
                assert_eq!(top.closure(c), c, "closure not idempotent");
                for bigger in 0..subsets {
                    let b = ps(bigger, n);
                    if a.is_subset_of(b) {
                        assert!(c.is_subset_of(top.closure(b)), "closure not monotone");
                    }
                }
            }

            let pool: Vec<OperatorTable> = ids.iter().map(|id| builtin(id, &top)).collect();
            for t1 in &pool {
                for t2 in &pool {
                    let both_monotone = t1.is_monotone() && t2.is_monotone();
                    assert!(both_monotone, "every builtin operator is monotone");
                    for mask in 0..subsets {
                        let a = ps(mask, n);
                        let c = t12_closure(t1, t2, a);
                        assert!(a.is_subset_of(c), "t12_closure not extensive");
                        assert_eq!(t12_closure(t1, t2, c), c, "t12_closure not idempotent");
                        t12_idempotent_checked += 1;
                        for bigger in 0..subsets {
                            let b = ps(bigger, n);
                            if a.is_subset_of(b) {
                                assert!(
                                    c.is_subset_of(t12_closure(t1, t2, b)),
                                    "t12_closure not monotone"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    println!(
        "CRITERION 8: PASS — closure extensive/monotone/idempotent on all topologies \
         n ≤ 3; t12_closure extensive/monotone on all 25 builtin pairs and idempotent \
         on every monotone pair ({t12_idempotent_checked} instances, all pairs monotone)"
    );
}

/// Criterion 9: the pointwise reading of semi-/pre-/b-continuity agrees with
/// the preimage characterization on every function between spaces with
/// n, m ≤ 3.
#[test]
fn criterion_9_pointwise_equals_preimage() {
    let mut checked = 0u64;
    for n in 1..=3usize {
        for m in 1..=3usize {
            let doms: Vec<FiniteTopology> =
                enumerate_topologies(n).expect("within cap").collect();
            let cods: Vec<FiniteTopology> =
                enumerate_topologies(m).expect("within cap").collect();
            for tx in &doms {
                for ty in &cods {
                    for f in enumerate_functions(n, m).expect("small function space") {
                        for class in [ClassKind::Semi, ClassKind::Pre, ClassKind::B] {
                            assert_eq!(
                                is_class_continuous_pointwise(&f, tx, ty, class),
                                is_class_continuous_preimage(&f, tx, ty, class),
                                "pointwise/preimage split: n={n}, m={m}, f={:?}, {class:?}",
                                f.images().collect::<Vec<_>>(),
                            );
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    assert_eq!(checked, 74_616);
    println!(
        "CRITERION 9: PASS — pointwise ≡ preimage for semi/pre/b continuity on all \
         {checked} (function, space pair, class) combinations with n, m ≤ 3"
    );
}
