//! Independent re-evaluation of hypothesis and conclusion through the
//! brute-force predicates in `topoforge_core::naive`.
//!
//! Every counterexample a sweep emits passes through here first. The naive
//! route shares no code with the fast path beyond the raw instance data, so
//! agreement means the claim really failed on that instance rather than the
//! fast predicates being wrong. Divergence is a hard error, never a warning.

use topoforge_core::naive::{self, NaiveSpace, NSet};
use topoforge_core::{FiniteFunction, FiniteTopology, OperatorTable, PointSet};

use crate::check::CheckOptions;
use crate::theorem::TheoremId;
use crate::verdict::Outcome;
use crate::VerifierError;

fn intersect(a: &NSet, b: &NSet) -> NSet {
    a.intersection(b).copied().collect()
}

fn union(a: &NSet, b: &NSet) -> NSet {
    a.union(b).copied().collect()
}

fn subsets(n: usize) -> impl Iterator<Item = NSet> {
    (0u32..1 << n).map(move |mask| naive::mask_to_set(mask, n))
}

/// Hypothesis and conclusion of a subset-shaped claim, recomputed naively.
/// `t2` is ignored for the single-operator chain claim.
pub fn naive_subset_outcome(
    theorem: TheoremId,
    top: &FiniteTopology,
    t1: &OperatorTable,
    t2: Option<&OperatorTable>,
    options: &CheckOptions,
) -> (bool, bool) {
    let n = top.carrier();
    let space = NaiveSpace::new(top);
    let t1 = t1.images();
    match theorem {
        TheoremId::R33Chain => {
            let concl = subsets(n).all(|a| {
                let t_open = naive::is_t_open(&space, t1, &a);
                let open = space.is_open(&a);
                let star = naive::is_t_star_open(t1, &a, n);
                !(t_open && !open) && !(open && !star)
            });
            (true, concl)
        }
        TheoremId::L42Part1 => {
            let t2 = t2.expect("pair shape").images();
            let hyp = naive::distributes_over_open_intersection(&space, t1)
                && naive::distributes_over_open_intersection(&space, t2);
            let fam = naive::t12_family(t1, t2, n);
            let concl = space.opens().iter().all(|w| {
                fam.iter().all(|v| naive::is_t12_open(t1, t2, &intersect(w, v), n))
            });
            (hyp, concl)
        }
        TheoremId::L42Part2 => {
            let t2 = t2.expect("pair shape").images();
            let hyp = if options.l42_union_hypothesis {
                naive::preserves_binary_unions(t1, n) && naive::preserves_binary_unions(t2, n)
            } else {
                naive::is_monotone(t1, n) && naive::is_monotone(t2, n)
            };
            let fam = naive::t12_family(t1, t2, n);
            let concl = fam
                .iter()
                .all(|a| fam.iter().all(|b| naive::is_t12_open(t1, t2, &union(a, b), n)));
            (hyp, concl)
        }
        TheoremId::R43IntersectionWitness => {
            let t2 = t2.expect("pair shape").images();
            let fam = naive::t12_family(t1, t2, n);
            let concl = fam
                .iter()
                .all(|a| fam.iter().all(|b| naive::is_t12_open(t1, t2, &intersect(a, b), n)));
            (true, concl)
        }
        _ => unreachable!("function-shaped claim passed to the subset route"),
    }
}

/// Hypothesis and conclusion of a function-shaped claim, recomputed naively.
/// `g` and `a` are consulted only by the shapes that carry them.
#[allow(clippy::too_many_arguments)]
pub fn naive_function_outcome(
    theorem: TheoremId,
    top_x: &FiniteTopology,
    t1: &OperatorTable,
    t2: &OperatorTable,
    top_y: &FiniteTopology,
    f: &FiniteFunction,
    g: Option<&FiniteFunction>,
    a: Option<PointSet>,
    options: &CheckOptions,
) -> (bool, bool) {
    let nx = top_x.carrier();
    let ny = top_y.carrier();
    let sx = NaiveSpace::new(top_x);
    let sy = NaiveSpace::new(top_y);
    let t1 = t1.images();
    let t2 = t2.images();
    match theorem {
        TheoremId::T46GraphPreimage => {
            let hyp = naive::has_contra_t12_closed_graph(f, t1, t2, &sy);
            let concl = subsets(ny)
                .filter(|a| naive::is_contra_compact_subset(&sy, a))
                .all(|a| naive::is_t12_closed(t1, t2, &naive::fn_preimage(f, &a), nx));
            (hyp, concl)
        }
        TheoremId::T47ContraCompactCodomain => {
            let tau12: Vec<u32> =
                naive::generated_tau12(t1, t2, nx).iter().map(naive::set_to_mask).collect();
            let space_tau = NaiveSpace::from_masks(nx, &tau12);
            let full_y = naive::mask_to_set((1 << ny) - 1, ny);
            let hyp = naive::is_associated(&space_tau, t1)
                && naive::is_associated(&space_tau, t2)
                && naive::is_contra_compact_subset(&sy, &full_y)
                && naive::has_contra_t12_closed_graph(f, t1, t2, &sy);
            let concl = naive::is_contra_t12_continuous(f, t1, t2, &sy);
            (hyp, concl)
        }
        TheoremId::T48GraphFunction => {
            let prod = naive::naive_product_topology(&sx, &sy);
            let images: Vec<usize> = (0..nx).map(|x| x * ny + f.apply(x)).collect();
            let graph = FiniteFunction::new(nx, nx * ny, images).expect("points in range");
            let hyp = prod
                .iter()
                .all(|o| naive::is_t12_closed(t1, t2, &naive::fn_preimage(&graph, o), nx));
            let concl = naive::is_contra_t12_continuous(f, t1, t2, &sy);
            (hyp, concl)
        }
        TheoremId::T49Equalizer => {
            let g = g.expect("pair shape");
            let hyp = naive::is_contra_t12_continuous(f, t1, t2, &sy)
                && naive::is_contra_continuous(g, &sx, &sy)
                && sy.is_urysohn();
            let concl = naive::is_t12_closed(t1, t2, &naive::equalizer_set(f, g), nx);
            (hyp, concl)
        }
        TheoremId::C412DenseAgreement => {
            let g = g.expect("pair shape");
            let a = naive::mask_to_set(a.expect("subset shape").mask(), nx);
            let eq = naive::equalizer_set(f, g);
            let hyp = naive::is_contra_t12_continuous(f, t1, t2, &sy)
                && naive::is_contra_continuous(g, &sx, &sy)
                && sy.is_urysohn()
                && naive::is_t12_dense(t1, t2, &a, nx)
                && a.is_subset(&eq);
            let concl = eq.len() == nx;
            (hyp, concl)
        }
        TheoremId::T414NotDiscrete => {
            let hyp = naive::is_contra_t12_continuous(f, t1, t2, &sy)
                && naive::is_onto(f)
                && naive::is_t12_connected(t1, t2, nx, options.connectivity);
            let concl = !sy.is_discrete();
            (hyp, concl)
        }
        _ => unreachable!("subset-shaped claim passed to the function route"),
    }
}

/// Compare a fast-path outcome against its naive recomputation. Returns the
/// divergence as a hard error naming which half disagreed.
pub fn confirm(
    key: &str,
    fast: &Outcome,
    naive_result: (bool, bool),
) -> Result<(), VerifierError> {
    let (naive_hyp, naive_concl) = naive_result;
    if fast.hypothesis != naive_hyp {
        return Err(VerifierError::Divergence {
            key: key.to_string(),
            part: "hypothesis",
            fast: fast.hypothesis,
            naive: naive_hyp,
        });
    }
    if fast.conclusion != naive_concl {
        return Err(VerifierError::Divergence {
            key: key.to_string(),
            part: "conclusion",
            fast: fast.conclusion,
            naive: naive_concl,
        });
    }
    Ok(())
}

/// Full cross-validation of an assembled instance: recompute both truth
/// values on the naive route and demand agreement with `fast`.
pub fn cross_validate(
    theorem: TheoremId,
    inst: &crate::instance::InstanceData,
    options: &CheckOptions,
    fast: &Outcome,
) -> Result<(), VerifierError> {
    use crate::instance::InstanceData;
    let naive_result = match inst {
        InstanceData::SubsetSingle { top, t } => {
            naive_subset_outcome(theorem, top, &t.table, None, options)
        }
        InstanceData::SubsetPair { top, t1, t2 } => {
            naive_subset_outcome(theorem, top, &t1.table, Some(&t2.table), options)
        }
        InstanceData::Function { top_x, t1, t2, top_y, f } => naive_function_outcome(
            theorem, top_x, &t1.table, &t2.table, top_y, f, None, None, options,
        ),
        InstanceData::FunctionPair { top_x, t1, t2, top_y, f, g } => naive_function_outcome(
            theorem, top_x, &t1.table, &t2.table, top_y, f, Some(g), None, options,
        ),
        InstanceData::FunctionPairSubset { top_x, t1, t2, top_y, f, g, a } => {
            naive_function_outcome(
                theorem, top_x, &t1.table, &t2.table, top_y, f, Some(g), Some(*a), options,
            )
        }
    };
    confirm(&inst.key(theorem), fast, naive_result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check;
    use topoforge_core::operators::BUILTIN_OPERATORS;

    #[test]
    fn subset_routes_agree_on_every_small_pair() {
        let options = CheckOptions::default();
        for n in 1..=2 {
            for top in topoforge_core::enumerate_topologies(n).unwrap() {
                let tables: Vec<OperatorTable> = BUILTIN_OPERATORS
                    .iter()
                    .map(|&k| OperatorTable::tabulate(k, &top))
                    .collect();
                for t in &tables {
                    let fast = check::check_chain(&top, t);
                    let naive = naive_subset_outcome(TheoremId::R33Chain, &top, t, None, &options);
                    assert_eq!((fast.hypothesis, fast.conclusion), naive);
                }
                for t1 in &tables {
                    for t2 in &tables {
                        for theorem in [
                            TheoremId::L42Part1,
                            TheoremId::L42Part2,
                            TheoremId::R43IntersectionWitness,
                        ] {
                            let fast = match theorem {
                                TheoremId::L42Part1 => check::check_open_intersection(&top, t1, t2),
                                TheoremId::L42Part2 => {
                                    check::check_union_stability(t1, t2, &options)
                                }
                                _ => check::check_intersection_stability(t1, t2),
                            };
                            let naive =
                                naive_subset_outcome(theorem, &top, t1, Some(t2), &options);
                            assert_eq!(
                                (fast.hypothesis, fast.conclusion),
                                naive,
                                "{theorem} diverged"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn divergence_is_a_hard_error_naming_the_half() {
        let top = FiniteTopology::from_masks(2, &[0, 1, 3]).unwrap();
        let t = OperatorTable::tabulate(topoforge_core::OperatorKind::Closure, &top);
        let honest = check::check_chain(&top, &t);
        let naive =
            naive_subset_outcome(TheoremId::R33Chain, &top, &t, None, &CheckOptions::default());
        assert!(confirm("k", &honest, naive).is_ok());

        let mut tampered = honest.clone();
        tampered.conclusion = !tampered.conclusion;
        let err = confirm("k", &tampered, naive).unwrap_err();
        assert!(err.to_string().contains("conclusion"));

        let mut tampered = honest;
        tampered.hypothesis = !tampered.hypothesis;
        let err = confirm("k", &tampered, naive).unwrap_err();
        assert!(err.to_string().contains("hypothesis"));
    }
}
