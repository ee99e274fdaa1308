//! Hypothesis/conclusion evaluation for each claim, one instance at a time.
//!
//! Every function here decides two booleans and, when the conclusion fails,
//! records where. Sweeps call these through [`FnCellContext`] so that work
//! shared by all functions of a cell (generated topologies, separation and
//! connectivity of the fixed spaces, dense subsets) is done once.

use serde_json::json;
use topoforge_core::maps::{
    equalizer, graph_function, is_contra_continuous, is_contra_t12_continuous, is_urysohn,
    ConnectivityVariant,
};
use topoforge_core::openclasses::{
    generated_tau12, is_t12_closed, is_t12_dense, is_t12_open, is_t_open, is_t_star_open,
    t12_open_family,
};
use topoforge_core::{FiniteFunction, FiniteTopology, OperatorTable, PointSet, TopoError};

use crate::instance::InstanceData;
use crate::theorem::TheoremId;
use crate::verdict::Outcome;

/// Knobs that change which hypothesis a claim is checked under. Defaults
/// match the primary statements.
#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    /// Check the union-stability claim under "both operators preserve binary
    /// unions" instead of the weaker "both operators are monotone".
    pub l42_union_hypothesis: bool,
    /// Which cover counts as disconnecting for the connectivity hypothesis.
    pub connectivity: ConnectivityVariant,
}

impl Default for CheckOptions {
    fn default() -> CheckOptions {
        CheckOptions {
            l42_union_hypothesis: false,
            connectivity: ConnectivityVariant::Disjoint,
        }
    }
}

fn ps(mask: u32, n: usize) -> PointSet {
    PointSet::from_mask(mask, n).expect("mask within validated carrier")
}

fn subset_masks(n: usize) -> impl Iterator<Item = u32> {
    0..=(((1u32) << n) - 1)
}

const NOTE_ALL_SUBSETS_COMPACT: &str =
    "every subset of the finite codomain is contra-compact, so the conclusion ranges over all of them";
const NOTE_CODOMAIN_COMPACT: &str =
    "contra-compactness of the codomain holds automatically on a finite carrier";
const NOTE_URYSOHN_DISCRETE: &str =
    "the separation hypothesis forces a discrete codomain on a finite carrier";
const NOTE_UNION_HYPOTHESIS: &str =
    "checked under the stronger hypothesis: both operators preserve binary unions";

pub fn check_chain(top: &FiniteTopology, t: &OperatorTable) -> Outcome {
    let n = top.carrier();
    let mut conclusion = true;
    let mut witness = None;
    for mask in subset_masks(n) {
        let a = ps(mask, n);
        let t_open = is_t_open(top, t, a).expect("carriers validated");
        let open = top.is_open(a);
        let star = is_t_star_open(t, a);
        if t_open && !open {
            conclusion = false;
            witness = Some(json!({"a": mask, "failed": "operator_open_implies_open"}));
            break;
        }
        if open && !star {
            conclusion = false;
            witness = Some(json!({"a": mask, "failed": "open_implies_star_open"}));
            break;
        }
    }
    Outcome { hypothesis: true, conclusion, witness, notes: None }
}

pub fn check_open_intersection(
    top: &FiniteTopology,
    t1: &OperatorTable,
    t2: &OperatorTable,
) -> Outcome {
    let n = top.carrier();
    let hypothesis = t1.distributes_over_open_intersection(top).expect("carriers validated")
        && t2.distributes_over_open_intersection(top).expect("carriers validated");
    let fam = t12_open_family(t1, t2);
    let mut conclusion = true;
    let mut witness = None;
    'outer: for w in top.opens().masks() {
        for v in fam.masks() {
            if !is_t12_open(t1, t2, ps(w & v, n)) {
                conclusion = false;
                witness = Some(json!({"w": w, "v": v, "intersection": w & v}));
                break 'outer;
            }
        }
    }
    Outcome { hypothesis, conclusion, witness, notes: None }
}

pub fn check_union_stability(
    t1: &OperatorTable,
    t2: &OperatorTable,
    options: &CheckOptions,
) -> Outcome {
    let n = t1.carrier();
    let (hypothesis, notes) = if options.l42_union_hypothesis {
        (
            t1.preserves_binary_unions() && t2.preserves_binary_unions(),
            Some(NOTE_UNION_HYPOTHESIS.to_string()),
        )
    } else {
        (t1.is_monotone() && t2.is_monotone(), None)
    };
    let fam: Vec<u32> = t12_open_family(t1, t2).masks().collect();
    let mut conclusion = true;
    let mut witness = None;
    'outer: for &a in &fam {
        for &b in &fam {
            if !is_t12_open(t1, t2, ps(a | b, n)) {
                conclusion = false;
                witness = Some(json!({"a": a, "b": b, "union": a | b}));
                break 'outer;
            }
        }
    }
    Outcome { hypothesis, conclusion, witness, notes }
}

pub fn check_intersection_stability(t1: &OperatorTable, t2: &OperatorTable) -> Outcome {
    let n = t1.carrier();
    let fam: Vec<u32> = t12_open_family(t1, t2).masks().collect();
    let mut conclusion = true;
    let mut witness = None;
    'outer: for &a in &fam {
        for &b in &fam {
            if !is_t12_open(t1, t2, ps(a & b, n)) {
                conclusion = false;
                witness = Some(json!({"a": a, "b": b, "intersection": a & b}));
                break 'outer;
            }
        }
    }
    Outcome { hypothesis: true, conclusion, witness, notes: None }
}

/// Work shared by every function instance of one sweep cell: the fixed
/// spaces and operator pair, plus the f-independent pieces each claim needs.
pub struct FnCellContext<'a> {
    pub theorem: TheoremId,
    pub top_x: &'a FiniteTopology,
    pub t1: &'a OperatorTable,
    pub t2: &'a OperatorTable,
    pub top_y: &'a FiniteTopology,
    /// Product of the two spaces; populated only for the graph-function claim.
    pub product: Option<&'a FiniteTopology>,
    tau12_associated: bool,
    urysohn_y: bool,
    connected_x: bool,
    dense_masks: Vec<u32>,
}

impl<'a> FnCellContext<'a> {
    pub fn new(
        theorem: TheoremId,
        top_x: &'a FiniteTopology,
        t1: &'a OperatorTable,
        t2: &'a OperatorTable,
        top_y: &'a FiniteTopology,
        product: Option<&'a FiniteTopology>,
        options: &CheckOptions,
    ) -> FnCellContext<'a> {
        let n = top_x.carrier();
        let tau12_associated = theorem == TheoremId::T47ContraCompactCodomain && {
            let tau12 = generated_tau12(t1, t2);
            t1.is_associated(&tau12).expect("same carrier")
                && t2.is_associated(&tau12).expect("same carrier")
        };
        let urysohn_y = matches!(
            theorem,
            TheoremId::T49Equalizer | TheoremId::C412DenseAgreement
        ) && is_urysohn(top_y);
        let connected_x = theorem == TheoremId::T414NotDiscrete
            && topoforge_core::maps::is_t12_connected(t1, t2, options.connectivity);
        let dense_masks = if theorem == TheoremId::C412DenseAgreement {
            subset_masks(n).filter(|&m| is_t12_dense(t1, t2, ps(m, n))).collect()
        } else {
            Vec::new()
        };
        FnCellContext {
            theorem,
            top_x,
            t1,
            t2,
            top_y,
            product,
            tau12_associated,
            urysohn_y,
            connected_x,
            dense_masks,
        }
    }

    /// Subsets of the domain that are dense for the operator pair, ascending.
    /// Only populated for the dense-agreement claim.
    pub fn dense_masks(&self) -> &[u32] {
        &self.dense_masks
    }
}

/// Preimages of the codomain's opens, demanding each to be bi-operator
/// closed; reports the first open that breaks.
fn contra_t12_witness(
    f: &FiniteFunction,
    t1: &OperatorTable,
    t2: &OperatorTable,
    top_y: &FiniteTopology,
) -> Option<serde_json::Value> {
    for v in top_y.opens().members() {
        let pre = f.preimage(v);
        if !is_t12_closed(t1, t2, pre) {
            return Some(json!({"v": v.mask(), "preimage": pre.mask()}));
        }
    }
    None
}

pub fn check_graph_preimage(ctx: &FnCellContext<'_>, f: &FiniteFunction) -> Outcome {
    let hypothesis = topoforge_core::maps::has_contra_t12_closed_graph(f, ctx.t1, ctx.t2, ctx.top_y);
    let ny = ctx.top_y.carrier();
    let mut conclusion = true;
    let mut witness = None;
    for mask in subset_masks(ny) {
        let a = ps(mask, ny);
        if !topoforge_core::maps::is_contra_compact_subset(ctx.top_y, a) {
            continue;
        }
        let pre = f.preimage(a);
        if !is_t12_closed(ctx.t1, ctx.t2, pre) {
            conclusion = false;
            witness = Some(json!({"a": mask, "preimage": pre.mask()}));
            break;
        }
    }
    Outcome {
        hypothesis,
        conclusion,
        witness,
        notes: Some(NOTE_ALL_SUBSETS_COMPACT.to_string()),
    }
}

pub fn check_generated_continuity(ctx: &FnCellContext<'_>, f: &FiniteFunction) -> Outcome {
    let hypothesis = ctx.tau12_associated
        && topoforge_core::maps::is_contra_compact_subset(ctx.top_y, PointSet::full(ctx.top_y.carrier()))
        && topoforge_core::maps::has_contra_t12_closed_graph(f, ctx.t1, ctx.t2, ctx.top_y);
    let witness = contra_t12_witness(f, ctx.t1, ctx.t2, ctx.top_y);
    Outcome {
        hypothesis,
        conclusion: witness.is_none(),
        witness,
        notes: Some(NOTE_CODOMAIN_COMPACT.to_string()),
    }
}

pub fn check_graph_function(ctx: &FnCellContext<'_>, f: &FiniteFunction) -> Outcome {
    let product = ctx.product.expect("product topology supplied for graph-function checks");
    let g = graph_function(f).expect("product bound validated");
    let mut hypothesis = true;
    for o in product.opens().members() {
        if !is_t12_closed(ctx.t1, ctx.t2, g.preimage(o)) {
            hypothesis = false;
            break;
        }
    }
    let witness = contra_t12_witness(f, ctx.t1, ctx.t2, ctx.top_y);
    Outcome { hypothesis, conclusion: witness.is_none(), witness, notes: None }
}

pub fn check_equalizer(
    ctx: &FnCellContext<'_>,
    f: &FiniteFunction,
    g: &FiniteFunction,
) -> Outcome {
    let hypothesis = is_contra_t12_continuous(f, ctx.t1, ctx.t2, ctx.top_y)
        && is_contra_continuous(g, ctx.top_x, ctx.top_y)
        && ctx.urysohn_y;
    let eq = equalizer(f, g).expect("carriers validated");
    let conclusion = is_t12_closed(ctx.t1, ctx.t2, eq);
    Outcome {
        hypothesis,
        conclusion,
        witness: (!conclusion).then(|| json!({"equalizer": eq.mask()})),
        notes: ctx.urysohn_y.then(|| NOTE_URYSOHN_DISCRETE.to_string()),
    }
}

pub fn check_dense_agreement(
    ctx: &FnCellContext<'_>,
    f: &FiniteFunction,
    g: &FiniteFunction,
    a: PointSet,
) -> Outcome {
    let eq = equalizer(f, g).expect("carriers validated");
    let hypothesis = is_contra_t12_continuous(f, ctx.t1, ctx.t2, ctx.top_y)
        && is_contra_continuous(g, ctx.top_x, ctx.top_y)
        && ctx.urysohn_y
        && is_t12_dense(ctx.t1, ctx.t2, a)
        && a.is_subset_of(eq);
    let conclusion = eq.is_full();
    let witness = (!conclusion).then(|| {
        let off = eq.complement().points().next().expect("non-full equalizer misses a point");
        json!({"equalizer": eq.mask(), "off_point": off})
    });
    Outcome {
        hypothesis,
        conclusion,
        witness,
        notes: ctx.urysohn_y.then(|| NOTE_URYSOHN_DISCRETE.to_string()),
    }
}

pub fn check_not_discrete(ctx: &FnCellContext<'_>, f: &FiniteFunction) -> Outcome {
    let hypothesis = is_contra_t12_continuous(f, ctx.t1, ctx.t2, ctx.top_y)
        && f.is_onto()
        && ctx.connected_x;
    let conclusion = !ctx.top_y.is_discrete();
    Outcome {
        hypothesis,
        conclusion,
        witness: (!conclusion)
            .then(|| json!({"discrete_codomain_carrier": ctx.top_y.carrier()})),
        notes: None,
    }
}

/// Dispatch for a function-shaped instance whose cell context is already
/// built. `g` and `a` are consulted only by the shapes that carry them.
pub fn check_in_cell(
    ctx: &FnCellContext<'_>,
    f: &FiniteFunction,
    g: Option<&FiniteFunction>,
    a: Option<PointSet>,
) -> Outcome {
    match ctx.theorem {
        TheoremId::T46GraphPreimage => check_graph_preimage(ctx, f),
        TheoremId::T47ContraCompactCodomain => check_generated_continuity(ctx, f),
        TheoremId::T48GraphFunction => check_graph_function(ctx, f),
        TheoremId::T414NotDiscrete => check_not_discrete(ctx, f),
        TheoremId::T49Equalizer => {
            check_equalizer(ctx, f, g.expect("pair shape validated"))
        }
        TheoremId::C412DenseAgreement => check_dense_agreement(
            ctx,
            f,
            g.expect("pair shape validated"),
            a.expect("subset shape validated"),
        ),
        _ => unreachable!("subset-shaped claims never reach a function cell"),
    }
}

/// Evaluate one instance of `theorem`. Validates shape and carriers first;
/// the only other failure mode is a product carrier too large to tabulate.
pub fn evaluate(
    theorem: TheoremId,
    inst: &InstanceData,
    options: &CheckOptions,
) -> Result<Outcome, TopoError> {
    inst.validate(theorem)?;
    match inst {
        InstanceData::SubsetSingle { top, t } => Ok(check_chain(top, &t.table)),
        InstanceData::SubsetPair { top, t1, t2 } => Ok(match theorem {
            TheoremId::L42Part1 => check_open_intersection(top, &t1.table, &t2.table),
            TheoremId::L42Part2 => check_union_stability(&t1.table, &t2.table, options),
            TheoremId::R43IntersectionWitness => {
                check_intersection_stability(&t1.table, &t2.table)
            }
            _ => unreachable!("shape validated against the claim"),
        }),
        InstanceData::Function { top_x, t1, t2, top_y, f }
        | InstanceData::FunctionPair { top_x, t1, t2, top_y, f, .. }
        | InstanceData::FunctionPairSubset { top_x, t1, t2, top_y, f, .. } => {
            let product = if theorem == TheoremId::T48GraphFunction {
                Some(topoforge_core::maps::product_topology(top_x, top_y)?)
            } else {
                None
            };
            let ctx = FnCellContext::new(
                theorem,
                top_x,
                &t1.table,
                &t2.table,
                top_y,
                product.as_ref(),
                options,
            );
            let g = match inst {
                InstanceData::FunctionPair { g, .. }
                | InstanceData::FunctionPairSubset { g, .. } => Some(g),
                _ => None,
            };
            let a = match inst {
                InstanceData::FunctionPairSubset { a, .. } => Some(*a),
                _ => None,
            };
            Ok(check_in_cell(&ctx, f, g, a))
        }
    }
}
