//! Sweep tallies over small carriers, frozen after being derived twice by
//! independent implementations. Any drift in enumeration order, pool
//! construction, or predicate semantics shows up here as a count mismatch.

use std::io;

use topoforge_core::maps::ConnectivityVariant;
use topoforge_verifier::{run_sweep, PoolSpec, SweepConfig, Summary, TheoremId};

fn sweep(config: &SweepConfig) -> Summary {
    run_sweep(config, io::sink()).expect("sweep completes")
}

fn expect_counts(summary: &Summary, instances: u64, confirmed: u64, vacuous: u64, cx: u64) {
    assert_eq!(
        (summary.instances, summary.confirmed, summary.vacuous, summary.counterexamples),
        (instances, confirmed, vacuous, cx),
        "tallies drifted for {}",
        summary.theorem
    );
}

#[test]
fn subset_claims_over_builtins_to_three_points() {
    let s = sweep(&SweepConfig::new(TheoremId::R33Chain, 3));
    expect_counts(&s, 170, 170, 0, 0);

    let s = sweep(&SweepConfig::new(TheoremId::L42Part1, 3));
    expect_counts(&s, 850, 595, 255, 0);

    let s = sweep(&SweepConfig::new(TheoremId::L42Part2, 3));
    expect_counts(&s, 850, 850, 0, 0);

    let s = sweep(&SweepConfig::new(TheoremId::R43IntersectionWitness, 3));
    expect_counts(&s, 850, 832, 0, 18);
}

#[test]
fn subset_claims_over_every_associated_table_to_two_points() {
    let mut config = SweepConfig::new(TheoremId::R33Chain, 2);
    config.pool = PoolSpec::Exhaustive;
    expect_counts(&sweep(&config), 146, 146, 0, 0);

    config.theorem = TheoremId::L42Part1;
    expect_counts(&sweep(&config), 6404, 773, 5631, 0);

    config.theorem = TheoremId::L42Part2;
    expect_counts(&sweep(&config), 6404, 1160, 5244, 0);

    config.theorem = TheoremId::R43IntersectionWitness;
    expect_counts(&sweep(&config), 6404, 6404, 0, 0);
}

#[test]
fn union_stability_under_the_stricter_hypothesis() {
    let mut config = SweepConfig::new(TheoremId::L42Part2, 3);
    config.options.l42_union_hypothesis = true;
    expect_counts(&sweep(&config), 850, 751, 99, 0);

    config.max_n = 2;
    config.pool = PoolSpec::Exhaustive;
    expect_counts(&sweep(&config), 6404, 629, 5775, 0);
}

#[test]
fn function_claims_over_builtins_to_two_points() {
    let s = sweep(&SweepConfig::new(TheoremId::T46GraphPreimage, 2));
    expect_counts(&s, 1925, 807, 1118, 0);

    let s = sweep(&SweepConfig::new(TheoremId::T47ContraCompactCodomain, 2));
    expect_counts(&s, 1925, 583, 1342, 0);

    let s = sweep(&SweepConfig::new(TheoremId::T48GraphFunction, 2));
    expect_counts(&s, 1925, 1783, 142, 0);

    let s = sweep(&SweepConfig::new(TheoremId::T49Equalizer, 2));
    expect_counts(&s, 6925, 1189, 5736, 0);

    let s = sweep(&SweepConfig::new(TheoremId::C412DenseAgreement, 2));
    expect_counts(&s, 2255, 455, 1800, 0);

    let s = sweep(&SweepConfig::new(TheoremId::T414NotDiscrete, 2));
    expect_counts(&s, 1800, 34, 1766, 0);
}

#[test]
fn graph_function_claim_over_every_associated_table_to_two_points() {
    let mut config = SweepConfig::new(TheoremId::T48GraphFunction, 2);
    config.pool = PoolSpec::Exhaustive;
    expect_counts(&sweep(&config), 108_836, 92_452, 16_384, 0);
}

#[test]
fn discreteness_claim_under_the_literal_cover_variant() {
    let mut config = SweepConfig::new(TheoremId::T414NotDiscrete, 2);
    config.options.connectivity = ConnectivityVariant::Literal;
    expect_counts(&sweep(&config), 1800, 2, 1798, 0);
}
