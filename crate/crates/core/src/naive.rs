//! A second, deliberately slow implementation of the predicates, written
//! against sorted point-sets instead of bitmasks and using different
//! characterizations where one exists (closure via "every neighborhood
//! meets the set", topology generation via a union/intersection fixpoint,
//! contra-compactness via literal cover enumeration).
//!
//! Nothing in the fast path is allowed to call into this module; it exists
//! so the verifier can recompute hypotheses and conclusions along an
//! independent route and fail hard on any divergence.

use crate::error::TopoError;
use crate::maps::{pair_point, ConnectivityVariant, FiniteFunction};
use crate::topology::FiniteTopology;
use std::collections::BTreeSet;

pub type NSet = BTreeSet<usize>;

/// Cover enumeration is exponential in the number of closed sets; above this
/// many the literal contra-compactness scan falls back to the finiteness
/// argument.
pub const COVER_SCAN_LIMIT: usize = 10;

/// Largest carrier for the brute-force topology recount.
pub const MAX_RECOUNT_CARRIER: usize = 3;

pub fn mask_to_set(mask: u32, n: usize) -> NSet {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn set_to_mask(s: &NSet) -> u32 {
    s.iter().fold(0u32, |acc, &i| acc | 1 << i)
}

fn is_subset(a: &NSet, b: &NSet) -> bool {
    a.iter().all(|x| b.contains(x))
}

fn union(a: &NSet, b: &NSet) -> NSet {
    a.union(b).copied().collect()
}

fn intersect(a: &NSet, b: &NSet) -> NSet {
    a.intersection(b).copied().collect()
}

/// A topology as a plain list of open point-sets.
#[derive(Debug, Clone)]
pub struct NaiveSpace {
    n: usize,
    opens: Vec<NSet>,
}

impl NaiveSpace {
    pub fn new(top: &FiniteTopology) -> NaiveSpace {
        NaiveSpace {
            n: top.carrier(),
            opens: top.opens().masks().map(|m| mask_to_set(m, top.carrier())).collect(),
        }
    }

    pub fn from_masks(n: usize, masks: &[u32]) -> NaiveSpace {
        NaiveSpace { n, opens: masks.iter().map(|&m| mask_to_set(m, n)).collect() }
    }

    pub fn carrier(&self) -> usize {
        self.n
    }

    pub fn opens(&self) -> &[NSet] {
        &self.opens
    }

    pub fn complement(&self, s: &NSet) -> NSet {
        (0..self.n).filter(|x| !s.contains(x)).collect()
    }

    pub fn is_open(&self, s: &NSet) -> bool {
        self.opens.contains(s)
    }

    pub fn is_closed(&self, s: &NSet) -> bool {
        self.is_open(&self.complement(s))
    }

    pub fn closed_sets(&self) -> Vec<NSet> {
        self.opens.iter().map(|o| self.complement(o)).collect()
    }

    pub fn is_discrete(&self) -> bool {
        self.opens.len() == 1 << self.n
    }

    /// `x ∈ Cl(A)` iff every open set containing `x` meets `A`.
    pub fn closure(&self, a: &NSet) -> NSet {
        (0..self.n)
            .filter(|&x| {
                self.opens
                    .iter()
                    .all(|u| !u.contains(&x) || !intersect(u, a).is_empty())
            })
            .collect()
    }

    /// `x ∈ Int(A)` iff some open set contains `x` inside `A`.
    pub fn interior(&self, a: &NSet) -> NSet {
        (0..self.n)
            .filter(|&x| self.opens.iter().any(|u| u.contains(&x) && is_subset(u, a)))
            .collect()
    }

    pub fn is_urysohn(&self) -> bool {
        for x in 0..self.n {
            'pair: for y in 0..self.n {
                if x == y {
                    continue;
                }
                for v in &self.opens {
                    if !v.contains(&x) {
                        continue;
                    }
                    let cv = self.closure(v);
                    for w in &self.opens {
                        if w.contains(&y) && intersect(&cv, &self.closure(w)).is_empty() {
                            continue 'pair;
                        }
                    }
                }
                return false;
            }
        }
        true
    }
}

/// Brute-force recount of all labeled topologies on `n` points.
pub fn count_topologies(n: usize) -> Result<u64, TopoError> {
    if n == 0 || n > MAX_RECOUNT_CARRIER {
        return Err(TopoError::EnumerationCap { n, max: MAX_RECOUNT_CARRIER });
    }
    let subsets = 1usize << n;
    let mut count = 0u64;
    for enc in 0u64..1 << subsets {
        let fam: Vec<NSet> = (0..subsets)
            .filter(|&k| enc >> k & 1 == 1)
            .map(|k| mask_to_set(k as u32, n))
            .collect();
        let empty = NSet::new();
        let carrier: NSet = (0..n).collect();
        if !fam.contains(&empty) || !fam.contains(&carrier) {
            continue;
        }
        let closed = fam.iter().all(|a| {
            fam.iter()
                .all(|b| fam.contains(&union(a, b)) && fam.contains(&intersect(a, b)))
        });
        if closed {
            count += 1;
        }
    }
    Ok(count)
}

/// Apply a tabulated operator through the point-set representation.
pub fn apply_table(t: &[u32], a: &NSet, n: usize) -> NSet {
    mask_to_set(t[set_to_mask(a) as usize], n)
}

pub fn is_associated(space: &NaiveSpace, t: &[u32]) -> bool {
    space.opens.iter().all(|w| is_subset(w, &apply_table(t, w, space.n)))
}

/// All-pairs monotonicity, no single-bit shortcut.
pub fn is_monotone(t: &[u32], n: usize) -> bool {
    let sets: Vec<NSet> = (0..1u32 << n).map(|m| mask_to_set(m, n)).collect();
    for a in &sets {
        for b in &sets {
            if is_subset(a, b) && !is_subset(&apply_table(t, a, n), &apply_table(t, b, n)) {
                return false;
            }
        }
    }
    true
}

pub fn preserves_binary_unions(t: &[u32], n: usize) -> bool {
    let sets: Vec<NSet> = (0..1u32 << n).map(|m| mask_to_set(m, n)).collect();
    for a in &sets {
        for b in &sets {
            let lhs = apply_table(t, &union(a, b), n);
            let rhs = union(&apply_table(t, a, n), &apply_table(t, b, n));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

pub fn distributes_over_open_intersection(space: &NaiveSpace, t: &[u32]) -> bool {
    let n = space.n;
    let sets: Vec<NSet> = (0..1u32 << n).map(|m| mask_to_set(m, n)).collect();
    for w in &space.opens {
        for b in &sets {
            let lhs = apply_table(t, &intersect(w, b), n);
            let rhs = intersect(&apply_table(t, w, n), &apply_table(t, b, n));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

pub fn is_semi_open(space: &NaiveSpace, a: &NSet) -> bool {
    is_subset(a, &space.closure(&space.interior(a)))
}

pub fn is_pre_open(space: &NaiveSpace, a: &NSet) -> bool {
    is_subset(a, &space.interior(&space.closure(a)))
}

pub fn is_b_open(space: &NaiveSpace, a: &NSet) -> bool {
    let u = union(
        &space.closure(&space.interior(a)),
        &space.interior(&space.closure(a)),
    );
    is_subset(a, &u)
}

pub fn is_t_open(space: &NaiveSpace, t: &[u32], a: &NSet) -> bool {
    a.iter().all(|&x| {
        space.opens.iter().any(|v| {
            let tv = apply_table(t, v, space.n);
            v.contains(&x) && is_subset(v, &tv) && is_subset(&tv, a)
        })
    })
}

pub fn is_t_star_open(t: &[u32], a: &NSet, n: usize) -> bool {
    is_subset(a, &apply_table(t, a, n))
}

pub fn is_t12_open(t1: &[u32], t2: &[u32], a: &NSet, n: usize) -> bool {
    is_subset(a, &union(&apply_table(t1, a, n), &apply_table(t2, a, n)))
}

pub fn is_t12_closed(t1: &[u32], t2: &[u32], a: &NSet, n: usize) -> bool {
    let comp: NSet = (0..n).filter(|x| !a.contains(x)).collect();
    is_t12_open(t1, t2, &comp, n)
}

pub fn t12_family(t1: &[u32], t2: &[u32], n: usize) -> Vec<NSet> {
    (0..1u32 << n)
        .map(|m| mask_to_set(m, n))
        .filter(|a| is_t12_open(t1, t2, a, n))
        .collect()
}

pub fn t12_closure(t1: &[u32], t2: &[u32], a: &NSet, n: usize) -> NSet {
    let mut acc: NSet = (0..n).collect();
    for m in 0..1u32 << n {
        let c = mask_to_set(m, n);
        if is_subset(a, &c) && is_t12_closed(t1, t2, &c, n) {
            acc = intersect(&acc, &c);
        }
    }
    acc
}

pub fn is_t12_dense(t1: &[u32], t2: &[u32], a: &NSet, n: usize) -> bool {
    t12_closure(t1, t2, a, n).len() == n
}

/// Smallest topology containing the bi-operator open family, found as the
/// fixpoint of closing under pairwise unions and intersections (rather than
/// the intersection-then-union fold the fast path uses).
pub fn generated_tau12(t1: &[u32], t2: &[u32], n: usize) -> Vec<NSet> {
    let mut fam: BTreeSet<NSet> = t12_family(t1, t2, n).into_iter().collect();
    fam.insert(NSet::new());
    fam.insert((0..n).collect());
    loop {
        let mut grew = false;
        let snapshot: Vec<NSet> = fam.iter().cloned().collect();
        for a in &snapshot {
            for b in &snapshot {
                if fam.insert(union(a, b)) {
                    grew = true;
                }
                if fam.insert(intersect(a, b)) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let mut out: Vec<NSet> = fam.into_iter().collect();
    out.sort_by_key(set_to_mask);
    out
}

pub fn fn_image(f: &FiniteFunction, a: &NSet) -> NSet {
    a.iter().map(|&x| f.apply(x)).collect()
}

pub fn fn_preimage(f: &FiniteFunction, b: &NSet) -> NSet {
    (0..f.dom_carrier()).filter(|&x| b.contains(&f.apply(x))).collect()
}

pub fn is_onto(f: &FiniteFunction) -> bool {
    let hit: NSet = (0..f.dom_carrier()).map(|x| f.apply(x)).collect();
    hit.len() == f.cod_carrier()
}

pub fn equalizer_set(f: &FiniteFunction, g: &FiniteFunction) -> NSet {
    (0..f.dom_carrier()).filter(|&x| f.apply(x) == g.apply(x)).collect()
}

pub fn is_contra_continuous(f: &FiniteFunction, sx: &NaiveSpace, sy: &NaiveSpace) -> bool {
    sy.opens.iter().all(|v| sx.is_closed(&fn_preimage(f, v)))
}

pub fn is_contra_t12_continuous(
    f: &FiniteFunction,
    t1: &[u32],
    t2: &[u32],
    sy: &NaiveSpace,
) -> bool {
    let n = f.dom_carrier();
    sy.opens.iter().all(|v| is_t12_closed(t1, t2, &fn_preimage(f, v), n))
}

pub fn has_contra_t12_closed_graph(
    f: &FiniteFunction,
    t1: &[u32],
    t2: &[u32],
    sy: &NaiveSpace,
) -> bool {
    let nx = f.dom_carrier();
    let fam = t12_family(t1, t2, nx);
    let closed = sy.closed_sets();
    for x in 0..nx {
        for y in 0..sy.n {
            if f.apply(x) == y {
                continue;
            }
            let found = fam.iter().any(|u| {
                u.contains(&x) && {
                    let img = fn_image(f, u);
                    closed.iter().any(|v| v.contains(&y) && intersect(&img, v).is_empty())
                }
            });
            if !found {
                return false;
            }
        }
    }
    true
}

pub fn is_t12_connected(t1: &[u32], t2: &[u32], n: usize, variant: ConnectivityVariant) -> bool {
    let fam: Vec<NSet> =
        t12_family(t1, t2, n).into_iter().filter(|a| !a.is_empty()).collect();
    for (i, a) in fam.iter().enumerate() {
        for b in &fam[i + 1..] {
            let covers = union(a, b).len() == n;
            let split = match variant {
                ConnectivityVariant::Disjoint => covers && intersect(a, b).is_empty(),
                ConnectivityVariant::Literal => covers,
            };
            if split {
                return false;
            }
        }
    }
    true
}

/// Literal contra-compactness: enumerate every family of closed sets that
/// covers `a` and exhibit a finite subcover for each (the smallest one, by
/// popcount-ordered subfamily search). Falls back to the finiteness argument
/// when there are too many closed sets to enumerate covers over.
pub fn is_contra_compact_subset(space: &NaiveSpace, a: &NSet) -> bool {
    let closed = space.closed_sets();
    let k = closed.len();
    if k > COVER_SCAN_LIMIT {
        // 2^k covers is out of reach; every cover is finite regardless
        return true;
    }
    for cover in 0u32..1 << k {
        let members: Vec<&NSet> =
            (0..k).filter(|&i| cover >> i & 1 == 1).map(|i| &closed[i]).collect();
        let covered = members.iter().fold(NSet::new(), |acc, m| union(&acc, m));
        if !is_subset(a, &covered) {
            continue;
        }
        // find any finite subfamily that still covers; the family itself
        // qualifies, so the search must succeed
        let mut found = false;
        'sub: for sub in 0u32..1 << members.len() {
            let mut acc = NSet::new();
            for (i, m) in members.iter().enumerate() {
                if sub >> i & 1 == 1 {
                    acc = union(&acc, m);
                }
            }
            if is_subset(a, &acc) {
                found = true;
                break 'sub;
            }
        }
        if !found {
            return false;
        }
    }
    true
}

pub fn naive_product_topology(sx: &NaiveSpace, sy: &NaiveSpace) -> Vec<NSet> {
    let ny = sy.n;
    let mut fam: BTreeSet<NSet> = BTreeSet::new();
    for u in &sx.opens {
        for v in &sy.opens {
            let mut b = NSet::new();
            for &x in u {
                for &y in v {
                    b.insert(pair_point(x, y, ny));
                }
            }
            fam.insert(b);
        }
    }
    fam.insert(NSet::new());
    loop {
        let mut grew = false;
        let snapshot: Vec<NSet> = fam.iter().cloned().collect();
        for a in &snapshot {
            for b in &snapshot {
                if fam.insert(union(a, b)) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let mut out: Vec<NSet> = fam.into_iter().collect();
    out.sort_by_key(set_to_mask);
    out
}
