//! Operator pools: which tables a sweep pairs with each topology.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use topoforge_core::operators::BUILTIN_OPERATORS;
use topoforge_core::{FiniteTopology, OperatorTable, TopoError};

use crate::instance::{image_list, LabeledOperator};
use crate::seed;

/// Exhaustive pools enumerate (2^n)^(2^n) candidate tables; past two points
/// that is 16^16 and out of reach.
pub const MAX_EXHAUSTIVE_CARRIER: usize = 2;

/// Default number of random associated tables a seeded pool adds on top of
/// the builtins.
pub const DEFAULT_SEEDED_EXTRAS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoolSpec {
    /// The five tabulated builtin operators, in their fixed order.
    Builtins,
    /// Every associated table on the carrier, ascending by table encoding
    /// (image of the empty set least significant). Capped at two points.
    Exhaustive,
    /// Builtins plus `extras` random associated tables drawn from a stream
    /// derived from the sweep seed and the topology.
    Seeded { extras: usize },
}

impl PoolSpec {
    /// Short name for diagnostics.
    pub fn label(self) -> String {
        match self {
            PoolSpec::Builtins => "builtins".into(),
            PoolSpec::Exhaustive => "exhaustive".into(),
            PoolSpec::Seeded { extras } => format!("seeded+{extras}"),
        }
    }
}

/// Stable per-topology coordinate for seed derivation; falls back to mixing
/// the open masks when the family encoding does not fit an integer.
pub(crate) fn topology_coordinate(top: &FiniteTopology) -> u64 {
    top.encoding().unwrap_or_else(|| {
        top.opens().masks().fold(0u64, |acc, m| seed::splitmix64(acc ^ u64::from(m)))
    })
}

/// All associated tables on `top`, ascending by encoding.
fn exhaustive_pool(top: &FiniteTopology) -> Result<Vec<LabeledOperator>, TopoError> {
    let n = top.carrier();
    if n > MAX_EXHAUSTIVE_CARRIER {
        return Err(TopoError::EnumerationCap { n, max: MAX_EXHAUSTIVE_CARRIER });
    }
    let m = 1usize << n;
    let total = (m as u64).pow(m as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut images = Vec::with_capacity(m);
        let mut c = code;
        for _ in 0..m {
            images.push((c % m as u64) as u32);
            c /= m as u64;
        }
        let table = OperatorTable::new(n, images).expect("images within carrier");
        if table.is_associated(top).expect("same carrier") {
            out.push(LabeledOperator {
                label: format!("exhaustive:{}", image_list(&table)),
                table,
            });
        }
    }
    Ok(out)
}

/// Build the pool for one topology. Seeded pools draw from a stream keyed by
/// `(sweep_seed, topology)` only, so the same topology sees the same extras
/// across claims and sweeps run with the same seed.
pub fn build_pool(
    spec: PoolSpec,
    top: &FiniteTopology,
    sweep_seed: u64,
) -> Result<Vec<LabeledOperator>, TopoError> {
    match spec {
        PoolSpec::Builtins => Ok(BUILTIN_OPERATORS
            .iter()
            .map(|&kind| LabeledOperator::builtin(kind, top))
            .collect()),
        PoolSpec::Exhaustive => exhaustive_pool(top),
        PoolSpec::Seeded { extras } => {
            let mut pool = build_pool(PoolSpec::Builtins, top, sweep_seed)?;
            let stream = seed::derive(&[
                sweep_seed,
                seed::TAG_POOL,
                top.carrier() as u64,
                topology_coordinate(top),
            ]);
            let mut rng = ChaCha8Rng::seed_from_u64(stream);
            for i in 0..extras {
                let table = OperatorTable::random_associated(top, &mut rng);
                pool.push(LabeledOperator {
                    label: format!("seeded:{i}:{}", image_list(&table)),
                    table,
                });
            }
            Ok(pool)
        }
    }
}
