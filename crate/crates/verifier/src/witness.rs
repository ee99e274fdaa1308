//! Canonical-first search for an intersection counterexample: the smallest
//! space, in enumeration order, where two bi-operator open sets have a
//! non-bi-operator-open intersection.

use serde::{Deserialize, Serialize};
use topoforge_core::naive;
use topoforge_core::openclasses::{is_t12_open, t12_open_family};
use topoforge_core::{enumerate_topologies, PointSet};

use crate::pool::{build_pool, PoolSpec};
use crate::VerifierError;

/// The found counterexample, fully reproducible from its fields: the first
/// `(topology, operator pair, a < b)` in sweep order whose intersection
/// breaks bi-operator openness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionWitness {
    pub n: usize,
    pub top_encoding: u64,
    pub opens: Vec<u32>,
    pub t1: String,
    pub t2: String,
    pub a: u32,
    pub b: u32,
    pub intersection: u32,
}

/// Scan carriers `1..=max_n` in canonical order and return the first
/// witness, cross-validated on the naive route before it is reported.
/// `None` means the scanned range genuinely has no counterexample.
pub fn find_intersection_witness(
    max_n: usize,
    pool: PoolSpec,
    seed: u64,
) -> Result<Option<IntersectionWitness>, VerifierError> {
    for n in 1..=max_n {
        for top in enumerate_topologies(n)? {
            let candidates = build_pool(pool, &top, seed)?;
            for t1 in &candidates {
                for t2 in &candidates {
                    let fam: Vec<u32> = t12_open_family(&t1.table, &t2.table).masks().collect();
                    for (i, &a) in fam.iter().enumerate() {
                        for &b in &fam[i + 1..] {
                            let inter = PointSet::from_mask(a & b, n).expect("mask in range");
                            if !is_t12_open(&t1.table, &t2.table, inter) {
                                let witness = IntersectionWitness {
                                    n,
                                    top_encoding: top.encoding().expect("small carrier"),
                                    opens: top.opens().masks().collect(),
                                    t1: t1.label.clone(),
                                    t2: t2.label.clone(),
                                    a,
                                    b,
                                    intersection: a & b,
                                };
                                confirm_witness(&witness, t1.table.images(), t2.table.images())?;
                                return Ok(Some(witness));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Re-derive the three membership facts behind the witness with the naive
/// set predicates: both sets bi-operator open, the intersection not.
fn confirm_witness(
    w: &IntersectionWitness,
    t1: &[u32],
    t2: &[u32],
) -> Result<(), VerifierError> {
    let check = |mask: u32, expected: bool, part: &'static str| -> Result<(), VerifierError> {
        let set = naive::mask_to_set(mask, w.n);
        let got = naive::is_t12_open(t1, t2, &set, w.n);
        if got != expected {
            return Err(VerifierError::Divergence {
                key: format!("witness|nX={}|topX={}", w.n, w.top_encoding),
                part,
                fast: expected,
                naive: got,
            });
        }
        Ok(())
    };
    check(w.a, true, "first set open")?;
    check(w.b, true, "second set open")?;
    check(w.intersection, false, "intersection open")
}
