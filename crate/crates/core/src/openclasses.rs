//! Generalized open-set classes: semi-open, pre-open, b-open, and the
//! operator-indexed classes built from one or two expansion operators.
//!
//! The operator-indexed machinery is the heart of the crate. For operators
//! `T₁`, `T₂` a set is *bi-operator open* when `A ⊆ T₁(A) ∪ T₂(A)`; its
//! complement-closed counterpart gives a closure-by-intersection and a
//! notion of density, and the family itself generates an ordinary topology
//! by closing under intersections and then unions.

use crate::error::TopoError;
use crate::operators::OperatorTable;
use crate::set::{full_mask, PointSet, SetFamily};
use crate::topology::FiniteTopology;

/// The three classical generalized-open classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassKind {
    Semi,
    Pre,
    B,
}

impl ClassKind {
    pub fn id(self) -> &'static str {
        match self {
            ClassKind::Semi => "semi",
            ClassKind::Pre => "pre",
            ClassKind::B => "b",
        }
    }
}

/// Alternative renderings of the b-open condition seen in the wild. The
/// standard condition is `A ⊆ Cl(Int A) ∪ Int(Cl A)`; these two differ from
/// it on some spaces and are kept around so the difference can be exhibited.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BVariant {
    /// `A ⊆ Cl(Int A ∪ Int(Cl A))` — weaker than standard (closure applied
    /// to the union). First differs from standard on a 4-point space.
    ClosureOfUnion,
    /// `A ⊆ Cl(Int A) ∪ Int A` — stronger than standard (plain interior in
    /// place of interior-of-closure). Differs already on 2 points.
    PlainInterior,
}

/// `A ⊆ Cl(Int A)`.
pub fn is_semi_open(top: &FiniteTopology, a: PointSet) -> bool {
    a.is_subset_of(top.closure(top.interior(a)))
}

/// `A ⊆ Int(Cl A)`.
pub fn is_pre_open(top: &FiniteTopology, a: PointSet) -> bool {
    a.is_subset_of(top.interior(top.closure(a)))
}

/// `A ⊆ Cl(Int A) ∪ Int(Cl A)`.
pub fn is_b_open(top: &FiniteTopology, a: PointSet) -> bool {
    a.is_subset_of(top.closure(top.interior(a)).union(top.interior(top.closure(a))))
}

pub fn is_b_open_variant(top: &FiniteTopology, variant: BVariant, a: PointSet) -> bool {
    match variant {
        BVariant::ClosureOfUnion => {
            a.is_subset_of(top.closure(top.interior(a).union(top.interior(top.closure(a)))))
        }
        BVariant::PlainInterior => {
            a.is_subset_of(top.closure(top.interior(a)).union(top.interior(a)))
        }
    }
}

pub fn is_class_open(top: &FiniteTopology, class: ClassKind, a: PointSet) -> bool {
    match class {
        ClassKind::Semi => is_semi_open(top, a),
        ClassKind::Pre => is_pre_open(top, a),
        ClassKind::B => is_b_open(top, a),
    }
}

pub fn class_family(top: &FiniteTopology, class: ClassKind) -> SetFamily {
    let n = top.carrier();
    let mut fam = SetFamily::empty(n);
    for m in 0..=full_mask(n) {
        if is_class_open(top, class, PointSet::from_mask(m, n).expect("mask in range")) {
            fam.insert_mask(m);
        }
    }
    fam
}

/// `A` is operator-open when every point of `A` sits inside an open `V` with
/// `V ⊆ T(V) ⊆ A`. The middle inclusion is checked literally, so the
/// predicate is meaningful even for tables that are not associated with the
/// topology (for associated tables it holds automatically).
pub fn is_t_open(
    top: &FiniteTopology,
    t: &OperatorTable,
    a: PointSet,
) -> Result<bool, TopoError> {
    if top.carrier() != t.carrier() {
        return Err(TopoError::CarrierMismatch { left: top.carrier(), right: t.carrier() });
    }
    'points: for x in a.points() {
        for v in top.opens().members() {
            if v.contains(x) && v.is_subset_of(t.apply(v)) && t.apply(v).is_subset_of(a) {
                continue 'points;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

pub fn t_open_family(top: &FiniteTopology, t: &OperatorTable) -> Result<SetFamily, TopoError> {
    let n = top.carrier();
    let mut fam = SetFamily::empty(n);
    for m in 0..=full_mask(n) {
        if is_t_open(top, t, PointSet::from_mask(m, n).expect("mask in range"))? {
            fam.insert_mask(m);
        }
    }
    Ok(fam)
}

/// `A ⊆ T(A)`.
pub fn is_t_star_open(t: &OperatorTable, a: PointSet) -> bool {
    a.is_subset_of(t.apply(a))
}

/// `A ⊆ T₁(A) ∪ T₂(A)`. Both tables must share a carrier with `a`.
pub fn is_t12_open(t1: &OperatorTable, t2: &OperatorTable, a: PointSet) -> bool {
    debug_assert_eq!(t1.carrier(), t2.carrier());
    a.is_subset_of(t1.apply(a).union(t2.apply(a)))
}

/// The complement is bi-operator open.
pub fn is_t12_closed(t1: &OperatorTable, t2: &OperatorTable, a: PointSet) -> bool {
    is_t12_open(t1, t2, a.complement())
}

pub fn t12_open_family(t1: &OperatorTable, t2: &OperatorTable) -> SetFamily {
    let n = t1.carrier();
    let mut fam = SetFamily::empty(n);
    for m in 0..=full_mask(n) {
        if is_t12_open(t1, t2, PointSet::from_mask(m, n).expect("mask in range")) {
            fam.insert_mask(m);
        }
    }
    fam
}

/// Intersection of every bi-operator closed superset. The whole carrier is
/// always such a superset, so the scan never comes up empty. The result need
/// not itself be bi-operator closed, but applying the scan again returns the
/// same set: a closed set contains the intersection exactly when it contains
/// the original set.
pub fn t12_closure(t1: &OperatorTable, t2: &OperatorTable, a: PointSet) -> PointSet {
    let n = t1.carrier();
    let mut acc = full_mask(n);
    for m in 0..=full_mask(n) {
        let c = PointSet::from_mask(m, n).expect("mask in range");
        if a.is_subset_of(c) && is_t12_closed(t1, t2, c) {
            acc &= m;
        }
    }
    PointSet::from_mask(acc, n).expect("intersection stays inside the carrier")
}

/// The bi-operator closure is the whole carrier.
pub fn is_t12_dense(t1: &OperatorTable, t2: &OperatorTable, a: PointSet) -> bool {
    t12_closure(t1, t2, a).is_full()
}

/// The topology generated by the bi-operator open family: close the family
/// under finite intersections (seeded with the carrier), then under finite
/// unions (seeded with the empty set).
pub fn generated_tau12(t1: &OperatorTable, t2: &OperatorTable) -> FiniteTopology {
    let n = t1.carrier();
    debug_assert_eq!(n, t2.carrier());
    let size = 1usize << n;

    let mut base = vec![false; size];
    base[full_mask(n) as usize] = true;
    for s in t12_open_family(t1, t2).masks() {
        let current: Vec<u32> =
            (0..size as u32).filter(|&m| base[m as usize]).collect();
        for b in current {
            base[(b & s) as usize] = true;
        }
    }

    let mut opens = vec![false; size];
    opens[0] = true;
    for b in (0..size as u32).filter(|&m| base[m as usize]) {
        let current: Vec<u32> =
            (0..size as u32).filter(|&m| opens[m as usize]).collect();
        for u in current {
            opens[(u | b) as usize] = true;
        }
    }

    let mut fam = SetFamily::empty(n);
    for m in (0..size as u32).filter(|&m| opens[m as usize]) {
        fam.insert_mask(m);
    }
    FiniteTopology::new(fam)
        .expect("intersection-closure then union-closure yields a topology")
}
