//! Finite topological spaces on carriers of at most 16 points.
//!
//! A topology is stored as the family of its open sets. On a finite carrier,
//! closure under pairwise union and intersection already gives closure under
//! arbitrary unions, so the axioms checked here are: contains the empty set,
//! contains the whole carrier, and is closed under pairwise union and
//! intersection.
//!
//! Construction precomputes each point's minimal open neighborhood and each
//! singleton's closure; `closure` and `interior` then run in O(n) per call.

use crate::error::TopoError;
use crate::set::{full_mask, PointSet, SetFamily};

/// Exhaustive topology enumeration is capped here: the candidate space is
/// `2^(2^n)` families, which at n = 4 is 65536 and at n = 5 would be 2^32.
pub const MAX_ENUMERATION_CARRIER: usize = 4;

#[derive(Clone)]
pub struct FiniteTopology {
    n: u8,
    opens: SetFamily,
    /// `min_nbhd[i]` = intersection of all opens containing point `i`
    /// (itself open on a finite carrier).
    min_nbhd: Vec<u32>,
    /// `point_cl[i]` = closure of the singleton `{i}`.
    point_cl: Vec<u32>,
}

impl PartialEq for FiniteTopology {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.opens == other.opens
    }
}

impl Eq for FiniteTopology {}

impl std::fmt::Debug for FiniteTopology {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteTopology(n={}, opens=", self.n)?;
        f.debug_list().entries(self.opens.members()).finish()?;
        write!(f, ")")
    }
}

/// Check the topology axioms on a family of subsets.
pub fn is_topology(family: &SetFamily) -> bool {
    let n = family.carrier();
    if !family.contains_mask(0) || !family.contains_mask(full_mask(n)) {
        return false;
    }
    let members: Vec<u32> = family.masks().collect();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if !family.contains_mask(a | b) || !family.contains_mask(a & b) {
                return false;
            }
        }
    }
    true
}

impl FiniteTopology {
    pub fn new(opens: SetFamily) -> Result<FiniteTopology, TopoError> {
        let n = opens.carrier();
        if !opens.contains_mask(0) {
            return Err(TopoError::NotATopology { reason: "missing the empty set".into() });
        }
        if !opens.contains_mask(full_mask(n)) {
            return Err(TopoError::NotATopology { reason: "missing the whole carrier".into() });
        }
        let members: Vec<u32> = opens.masks().collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !opens.contains_mask(a | b) {
                    return Err(TopoError::NotATopology {
                        reason: format!("not closed under union: {a:#x} | {b:#x}"),
                    });
                }
                if !opens.contains_mask(a & b) {
                    return Err(TopoError::NotATopology {
                        reason: format!("not closed under intersection: {a:#x} & {b:#x}"),
                    });
                }
            }
        }
        Ok(Self::precomputed(opens, &members))
    }

    /// Build from a family already known to satisfy the axioms (used by the
    /// enumerator, which has just checked them).
    fn precomputed(opens: SetFamily, members: &[u32]) -> FiniteTopology {
        let n = opens.carrier();
        let mut min_nbhd = vec![full_mask(n); n];
        for &o in members {
            for (i, nb) in min_nbhd.iter_mut().enumerate() {
                if o >> i & 1 == 1 {
                    *nb &= o;
                }
            }
        }
        let mut point_cl = vec![0u32; n];
        for i in 0..n {
            for (x, &nb) in min_nbhd.iter().enumerate() {
                if nb >> i & 1 == 1 {
                    point_cl[i] |= 1 << x;
                }
            }
        }
        FiniteTopology { n: n as u8, opens, min_nbhd, point_cl }
    }

    pub fn from_masks(n: usize, opens: &[u32]) -> Result<FiniteTopology, TopoError> {
        FiniteTopology::new(SetFamily::from_masks(n, opens)?)
    }

    pub fn indiscrete(n: usize) -> FiniteTopology {
        FiniteTopology::from_masks(n, &[0, full_mask(n)]).expect("indiscrete family is a topology")
    }

    pub fn discrete(n: usize) -> FiniteTopology {
        let all: Vec<u32> = (0..=full_mask(n)).collect();
        FiniteTopology::from_masks(n, &all).expect("power set is a topology")
    }

    pub fn carrier(&self) -> usize {
        self.n as usize
    }

    pub fn opens(&self) -> &SetFamily {
        &self.opens
    }

    pub fn open_count(&self) -> usize {
        self.opens.len()
    }

    pub fn is_open(&self, a: PointSet) -> bool {
        self.opens.contains(a)
    }

    pub fn is_closed(&self, a: PointSet) -> bool {
        self.opens.contains(a.complement())
    }

    pub fn is_discrete(&self) -> bool {
        self.opens.len() == 1usize << self.n
    }

    /// Complements of the open sets.
    pub fn closed_sets(&self) -> SetFamily {
        let mut fam = SetFamily::empty(self.carrier());
        let full = full_mask(self.carrier());
        for m in self.opens.masks() {
            fam.insert_mask(!m & full);
        }
        fam
    }

    /// Smallest closed superset.
    pub fn closure(&self, a: PointSet) -> PointSet {
        debug_assert_eq!(a.carrier(), self.carrier());
        let mut acc = 0u32;
        for i in a.points() {
            acc |= self.point_cl[i];
        }
        PointSet::from_mask(acc, self.carrier()).expect("closure stays inside the carrier")
    }

    /// Largest open subset. Must agree with the complement/closure dual; that
    /// identity is covered by tests rather than used as the definition.
    pub fn interior(&self, a: PointSet) -> PointSet {
        debug_assert_eq!(a.carrier(), self.carrier());
        let mask = a.mask();
        let mut acc = 0u32;
        for i in a.points() {
            if self.min_nbhd[i] & !mask == 0 {
                acc |= 1 << i;
            }
        }
        PointSet::from_mask(acc, self.carrier()).expect("interior stays inside the carrier")
    }

    /// Minimal open neighborhood of a point.
    pub fn min_neighborhood(&self, point: usize) -> PointSet {
        PointSet::from_mask(self.min_nbhd[point], self.carrier())
            .expect("neighborhood stays inside the carrier")
    }

    /// Family encoding as an integer, for carriers with at most 64 subsets.
    pub fn encoding(&self) -> Option<u64> {
        self.opens.encoding()
    }
}

/// All labeled topologies on an `n`-point carrier in ascending family-encoding
/// order. Capability error above [`MAX_ENUMERATION_CARRIER`].
pub fn enumerate_topologies(n: usize) -> Result<TopologyEnumeration, TopoError> {
    if n > MAX_ENUMERATION_CARRIER {
        return Err(TopoError::EnumerationCap { n, max: MAX_ENUMERATION_CARRIER });
    }
    if n == 0 {
        return Err(TopoError::InvalidField {
            field: "n",
            message: "carrier must have at least one point".into(),
        });
    }
    Ok(TopologyEnumeration { n, next: 0, end: 1u64 << (1usize << n) })
}

#[derive(Debug)]
pub struct TopologyEnumeration {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for TopologyEnumeration {
    type Item = FiniteTopology;

    fn next(&mut self) -> Option<FiniteTopology> {
        let subsets = 1usize << self.n;
        let must = 1u64 | 1u64 << (subsets - 1); // empty set and full carrier
        while self.next < self.end {
            let enc = self.next;
            self.next += 1;
            if enc & must != must {
                continue;
            }
            let fam = SetFamily::from_encoding(self.n, enc).expect("encoding fits the carrier");
            if is_topology(&fam) {
                let members: Vec<u32> = fam.masks().collect();
                return Some(FiniteTopology::precomputed(fam, &members));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sierpinski() -> FiniteTopology {
        FiniteTopology::from_masks(2, &[0b00, 0b01, 0b11]).unwrap()
    }

    #[test]
    fn axioms_are_enforced() {
        // {∅, {0}, {1}, X} on 2 points lacks nothing; on 3 points {0}|{1} is missing
        assert!(FiniteTopology::from_masks(2, &[0, 1, 2, 3]).is_ok());
        let e = FiniteTopology::from_masks(3, &[0, 1, 2, 7]).unwrap_err();
        assert!(e.to_string().contains("union"));
        assert!(FiniteTopology::from_masks(2, &[0, 1]).is_err()); // no carrier
        assert!(FiniteTopology::from_masks(2, &[1, 3]).is_err()); // no empty set
    }

    #[test]
    fn sierpinski_closure_and_interior() {
        let t = sierpinski();
        let cl: Vec<u32> = (0..4).map(|m| t.closure(PointSet::from_mask(m, 2).unwrap()).mask()).collect();
        let int: Vec<u32> = (0..4).map(|m| t.interior(PointSet::from_mask(m, 2).unwrap()).mask()).collect();
        // closure({0}) = X, closure({1}) = {1}
        assert_eq!(cl, vec![0b00, 0b11, 0b10, 0b11]);
        // interior({1}) = ∅
        assert_eq!(int, vec![0b00, 0b01, 0b00, 0b11]);
        assert_eq!(t.closed_sets().masks().collect::<Vec<_>>(), vec![0b00, 0b10, 0b11]);
    }

    #[test]
    fn closure_interior_duality_exhaustive_small() {
        // interior(A) == complement(closure(complement(A))) for every topology n <= 3
        for n in 1..=3 {
            for top in enumerate_topologies(n).unwrap() {
                for m in 0..=full_mask(n) {
                    let a = PointSet::from_mask(m, n).unwrap();
                    assert_eq!(
                        top.interior(a),
                        top.closure(a.complement()).complement(),
                        "duality failed for n={n} opens={:?} a={a}",
                        top.opens().masks().collect::<Vec<_>>(),
                    );
                }
            }
        }
    }

    #[test]
    fn interior_is_largest_open_subset() {
        // definitional fold: union of all opens contained in A
        for n in 1..=3 {
            for top in enumerate_topologies(n).unwrap() {
                for m in 0..=full_mask(n) {
                    let a = PointSet::from_mask(m, n).unwrap();
                    let mut fold = PointSet::empty(n);
                    for o in top.opens().members() {
                        if o.is_subset_of(a) {
                            fold = fold.union(o);
                        }
                    }
                    assert_eq!(top.interior(a), fold);
                    assert!(top.is_open(top.interior(a)));
                    assert!(top.is_closed(top.closure(a)));
                }
            }
        }
    }

    #[test]
    fn closure_laws_exhaustive_n_le_3() {
        for n in 1..=3 {
            for top in enumerate_topologies(n).unwrap() {
                for m in 0..=full_mask(n) {
                    let a = PointSet::from_mask(m, n).unwrap();
                    let ca = top.closure(a);
                    assert!(a.is_subset_of(ca), "extensive");
                    assert_eq!(top.closure(ca), ca, "idempotent");
                    for m2 in 0..=full_mask(n) {
                        let b = PointSet::from_mask(m2, n).unwrap();
                        if a.is_subset_of(b) {
                            assert!(ca.is_subset_of(top.closure(b)), "monotone");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate_topologies(1).unwrap().count(), 1);
        assert_eq!(enumerate_topologies(2).unwrap().count(), 4);
        assert_eq!(enumerate_topologies(3).unwrap().count(), 29);
        assert_eq!(enumerate_topologies(4).unwrap().count(), 355);

        let encs: Vec<u64> =
            enumerate_topologies(2).unwrap().map(|t| t.encoding().unwrap()).collect();
        assert_eq!(encs, vec![9, 11, 13, 15]); // indiscrete, both Sierpinski variants, discrete
        let mut sorted = encs.clone();
        sorted.sort_unstable();
        assert_eq!(encs, sorted, "ascending encoding order");
    }

    #[test]
    fn enumeration_cap_is_a_capability_error() {
        let e = enumerate_topologies(5).unwrap_err();
        assert_eq!(e.kind(), crate::error::ErrorKind::Capability);
    }

    #[test]
    fn discrete_and_indiscrete() {
        assert!(FiniteTopology::discrete(3).is_discrete());
        assert_eq!(FiniteTopology::indiscrete(3).open_count(), 2);
        assert_eq!(FiniteTopology::discrete(1), FiniteTopology::indiscrete(1));
    }

    #[test]
    fn min_neighborhoods() {
        let t = sierpinski();
        assert_eq!(t.min_neighborhood(0).mask(), 0b01);
        assert_eq!(t.min_neighborhood(1).mask(), 0b11);
    }
}
