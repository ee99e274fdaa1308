//! Exhaustive and sampled instance sweeps over enumerated spaces.
//!
//! Enumeration order is fixed: domain carrier ascending, then domain
//! topology by family encoding, then the operator pair (first operator
//! outer), then codomain carrier and topology, then functions by their
//! radix index (`f` outer when there are two), then the agreement subset.
//! Cells — everything sharing one (spaces, operator pair) choice — are
//! evaluated in parallel, but verdicts are emitted in enumeration order and
//! every random choice is derived from the cell's coordinates, so a report
//! is a pure function of its configuration.

use std::io::Write;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use topoforge_core::maps::{equalizer, function_count, product_topology};
use topoforge_core::{
    enumerate_topologies, FiniteFunction, FiniteTopology, PointSet, TopoError,
    MAX_ENUMERATION_CARRIER,
};

use crate::check::{check_chain, check_in_cell, check_intersection_stability,
    check_open_intersection, check_union_stability, CheckOptions, FnCellContext};
use crate::crossval::{confirm, naive_function_outcome, naive_subset_outcome};
use crate::instance::{
    function_cell_prefix, function_images_key, subset_pair_key, subset_single_key,
    LabeledOperator,
};
use crate::pool::{build_pool, topology_coordinate, PoolSpec, MAX_EXHAUSTIVE_CARRIER};
use crate::report::ReportWriter;
use crate::seed;
use crate::theorem::{InstanceShape, TheoremId};
use crate::verdict::{Classification, Summary, Verdict};
use crate::VerifierError;

/// Function sweeps enumerate codomain topologies too; past three points the
/// instance space stops being useful to scan.
pub const MAX_FUNCTION_SWEEP_CARRIER: usize = 3;

/// Default cap on function (or function-pair) draws per cell.
pub const DEFAULT_FN_CELL_CAP: usize = 256;

/// Cells evaluated per parallel batch; bounds peak verdict memory while
/// keeping every core busy.
const CELL_CHUNK: usize = 256;

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub theorem: TheoremId,
    /// Largest carrier swept, for domains and codomains alike.
    pub max_n: usize,
    pub pool: PoolSpec,
    pub seed: u64,
    /// Per-cell cap on function draws; cells at or under the cap are
    /// exhaustive, larger ones are sampled without replacement.
    pub fn_cell_cap: usize,
    pub options: CheckOptions,
}

impl SweepConfig {
    pub fn new(theorem: TheoremId, max_n: usize) -> SweepConfig {
        SweepConfig {
            theorem,
            max_n,
            pool: PoolSpec::Builtins,
            seed: 0,
            fn_cell_cap: DEFAULT_FN_CELL_CAP,
            options: CheckOptions::default(),
        }
    }

    fn validate(&self) -> Result<(), TopoError> {
        let cap = if self.theorem.takes_functions() {
            MAX_FUNCTION_SWEEP_CARRIER
        } else {
            MAX_ENUMERATION_CARRIER
        };
        if self.max_n == 0 || self.max_n > cap {
            return Err(TopoError::CarrierTooLarge { n: self.max_n, max: cap });
        }
        if self.pool == PoolSpec::Exhaustive && self.max_n > MAX_EXHAUSTIVE_CARRIER {
            return Err(TopoError::EnumerationCap { n: self.max_n, max: MAX_EXHAUSTIVE_CARRIER });
        }
        if self.fn_cell_cap == 0 {
            return Err(TopoError::InvalidField {
                field: "fn_cell_cap",
                message: "per-cell function cap must be positive".into(),
            });
        }
        Ok(())
    }
}

/// Run the configured sweep, streaming the report into `out`. Counterexample
/// verdicts are re-derived on the naive route before being written; the
/// first divergence aborts the sweep.
pub fn run_sweep<W: Write>(config: &SweepConfig, out: W) -> Result<Summary, VerifierError> {
    config.validate()?;
    let mut writer = ReportWriter::new(out, config.theorem, config.seed);
    if config.theorem.takes_functions() {
        function_sweep(config, &mut writer)?;
    } else {
        subset_sweep(config, &mut writer)?;
    }
    Ok(writer.finish()?)
}

fn subset_sweep<W: Write>(
    config: &SweepConfig,
    writer: &mut ReportWriter<W>,
) -> Result<(), VerifierError> {
    let theorem = config.theorem;
    let single = theorem.shape() == InstanceShape::SubsetSingle;
    for n in 1..=config.max_n {
        for top in enumerate_topologies(n)? {
            let pool = build_pool(config.pool, &top, config.seed)?;
            let jobs: Vec<(usize, usize)> = if single {
                (0..pool.len()).map(|i| (i, i)).collect()
            } else {
                (0..pool.len())
                    .flat_map(|i| (0..pool.len()).map(move |j| (i, j)))
                    .collect()
            };
            let verdicts: Result<Vec<Verdict>, VerifierError> = jobs
                .par_iter()
                .map(|&(i, j)| {
                    let (t1, t2) = (&pool[i], &pool[j]);
                    let (key, outcome) = match theorem {
                        TheoremId::R33Chain => (
                            subset_single_key(theorem, &top, &t1.label),
                            check_chain(&top, &t1.table),
                        ),
                        TheoremId::L42Part1 => (
                            subset_pair_key(theorem, &top, &t1.label, &t2.label),
                            check_open_intersection(&top, &t1.table, &t2.table),
                        ),
                        TheoremId::L42Part2 => (
                            subset_pair_key(theorem, &top, &t1.label, &t2.label),
                            check_union_stability(&t1.table, &t2.table, &config.options),
                        ),
                        TheoremId::R43IntersectionWitness => (
                            subset_pair_key(theorem, &top, &t1.label, &t2.label),
                            check_intersection_stability(&t1.table, &t2.table),
                        ),
                        _ => unreachable!("function claims take the other driver"),
                    };
                    if outcome.classification() == Classification::Counterexample {
                        let second = (!single).then_some(&t2.table);
                        let naive =
                            naive_subset_outcome(theorem, &top, &t1.table, second, &config.options);
                        confirm(&key, &outcome, naive)?;
                    }
                    Ok(Verdict::new(key, outcome))
                })
                .collect();
            for v in verdicts? {
                writer.record(&v)?;
            }
        }
    }
    Ok(())
}

fn function_sweep<W: Write>(
    config: &SweepConfig,
    writer: &mut ReportWriter<W>,
) -> Result<(), VerifierError> {
    let theorem = config.theorem;
    for nx in 1..=config.max_n {
        for top_x in enumerate_topologies(nx)? {
            let pool = build_pool(config.pool, &top_x, config.seed)?;
            let enc_x = topology_coordinate(&top_x);

            let mut raw = Vec::new();
            for my in theorem.min_codomain()..=config.max_n {
                for top_y in enumerate_topologies(my)? {
                    raw.push(top_y);
                }
            }
            let codomains: Vec<(FiniteTopology, Option<FiniteTopology>)> =
                if theorem == TheoremId::T48GraphFunction {
                    raw.into_par_iter()
                        .map(|ty| {
                            let product = product_topology(&top_x, &ty)?;
                            Ok((ty, Some(product)))
                        })
                        .collect::<Result<_, TopoError>>()?
                } else {
                    raw.into_iter().map(|ty| (ty, None)).collect()
                };

            let mut cells = Vec::with_capacity(pool.len() * pool.len() * codomains.len());
            for i1 in 0..pool.len() {
                for i2 in 0..pool.len() {
                    for ci in 0..codomains.len() {
                        cells.push((i1, i2, ci));
                    }
                }
            }
            for chunk in cells.chunks(CELL_CHUNK) {
                let batches: Result<Vec<Vec<Verdict>>, VerifierError> = chunk
                    .par_iter()
                    .map(|&(i1, i2, ci)| {
                        let pair_index = (i1 * pool.len() + i2) as u64;
                        run_cell(config, &top_x, enc_x, &pool[i1], &pool[i2], pair_index, &codomains[ci])
                    })
                    .collect();
                for batch in batches? {
                    for v in batch {
                        writer.record(&v)?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn run_cell(
    config: &SweepConfig,
    top_x: &FiniteTopology,
    enc_x: u64,
    t1: &LabeledOperator,
    t2: &LabeledOperator,
    pair_index: u64,
    codomain: &(FiniteTopology, Option<FiniteTopology>),
) -> Result<Vec<Verdict>, VerifierError> {
    let theorem = config.theorem;
    let (top_y, product) = codomain;
    let ctx = FnCellContext::new(
        theorem,
        top_x,
        &t1.table,
        &t2.table,
        top_y,
        product.as_ref(),
        &config.options,
    );
    let prefix = function_cell_prefix(theorem, top_x, &t1.label, &t2.label, top_y);
    let (nx, my) = (top_x.carrier(), top_y.carrier());
    let f_count = function_count(nx, my).expect("sweep carriers stay tiny");
    let stream = seed::derive(&[
        config.seed,
        seed::TAG_CELL_SAMPLE,
        theorem.index() as u64,
        nx as u64,
        enc_x,
        pair_index,
        my as u64,
        topology_coordinate(top_y),
    ]);

    let mut verdicts = Vec::new();
    let mut check_one = |key: String,
                         f: &FiniteFunction,
                         g: Option<&FiniteFunction>,
                         a: Option<PointSet>|
     -> Result<(), VerifierError> {
        let outcome = check_in_cell(&ctx, f, g, a);
        if outcome.classification() == Classification::Counterexample {
            let naive = naive_function_outcome(
                theorem,
                top_x,
                &t1.table,
                &t2.table,
                top_y,
                f,
                g,
                a,
                &config.options,
            );
            confirm(&key, &outcome, naive)?;
        }
        verdicts.push(Verdict::new(key, outcome));
        Ok(())
    };

    match theorem.shape() {
        InstanceShape::Function => {
            for idx in sample_indices(f_count, config.fn_cell_cap, stream) {
                let f = FiniteFunction::from_index(nx, my, idx).expect("index below count");
                check_one(format!("{prefix}|f={}", function_images_key(&f)), &f, None, None)?;
            }
        }
        InstanceShape::FunctionPair | InstanceShape::FunctionPairSubset => {
            let total = f_count.checked_mul(f_count).expect("pair count fits");
            for idx in sample_indices(total, config.fn_cell_cap, stream) {
                let f = FiniteFunction::from_index(nx, my, idx / f_count).expect("below count");
                let g = FiniteFunction::from_index(nx, my, idx % f_count).expect("below count");
                if theorem.shape() == InstanceShape::FunctionPair {
                    check_one(
                        format!(
                            "{prefix}|f={}|g={}",
                            function_images_key(&f),
                            function_images_key(&g)
                        ),
                        &f,
                        Some(&g),
                        None,
                    )?;
                } else {
                    let eq = equalizer(&f, &g).expect("same carriers");
                    for &mask in ctx.dense_masks() {
                        let a = PointSet::from_mask(mask, nx).expect("mask in range");
                        if a.is_subset_of(eq) {
                            check_one(
                                format!(
                                    "{prefix}|f={}|g={}|a={mask}",
                                    function_images_key(&f),
                                    function_images_key(&g)
                                ),
                                &f,
                                Some(&g),
                                Some(a),
                            )?;
                        }
                    }
                }
            }
        }
        _ => unreachable!("subset claims take the other driver"),
    }
    Ok(verdicts)
}

/// `cap` draws without replacement from `0..total`, ascending; the whole
/// range when it already fits. A partial shuffle keyed by `stream` picks the
/// sample, so the choice is independent of everything but the coordinates
/// that built the stream.
fn sample_indices(total: u64, cap: usize, stream: u64) -> Vec<u64> {
    if total <= cap as u64 {
        return (0..total).collect();
    }
    let mut all: Vec<u64> = (0..total).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(stream);
    for i in 0..cap {
        let j = i + rand_below(&mut rng, (all.len() - i) as u32) as usize;
        all.swap(i, j);
    }
    all.truncate(cap);
    all.sort_unstable();
    all
}

/// Uniform draw from `0..bound` by rejection; exact, not modulo-biased.
fn rand_below(rng: &mut ChaCha8Rng, bound: u32) -> u32 {
    let limit = u32::MAX - u32::MAX % bound;
    loop {
        let r = rng.next_u32();
        if r < limit {
            return r % bound;
        }
    }
}
