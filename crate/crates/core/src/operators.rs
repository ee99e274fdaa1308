//! Expansion operators on the subsets of a finite carrier.
//!
//! An operator is tabulated: one image per subset mask, `2^n` entries. The
//! key predicate is *association* with a topology — every open set must be
//! contained in its own image. [`BiOperatorSpace`] packages a topology with
//! two associated operators and refuses construction otherwise.

use crate::error::TopoError;
use crate::set::{full_mask, PointSet, MAX_CARRIER};
use crate::topology::FiniteTopology;
use rand_core::RngCore;

/// The named operators every consumer knows about, in the order they appear
/// in search pools and CLI listings.
pub const BUILTIN_OPERATORS: [OperatorKind; 5] = [
    OperatorKind::Identity,
    OperatorKind::Closure,
    OperatorKind::ClosureInterior,
    OperatorKind::InteriorClosure,
    OperatorKind::ConstantFull,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    /// A ↦ A
    Identity,
    /// A ↦ Cl(A)
    Closure,
    /// A ↦ Cl(Int(A))
    ClosureInterior,
    /// A ↦ Int(Cl(A))
    InteriorClosure,
    /// A ↦ X
    ConstantFull,
}

impl OperatorKind {
    pub fn id(self) -> &'static str {
        match self {
            OperatorKind::Identity => "identity",
            OperatorKind::Closure => "closure",
            OperatorKind::ClosureInterior => "closure_interior",
            OperatorKind::InteriorClosure => "interior_closure",
            OperatorKind::ConstantFull => "constant_full",
        }
    }

    pub fn from_id(id: &str) -> Result<OperatorKind, TopoError> {
        BUILTIN_OPERATORS
            .into_iter()
            .find(|k| k.id() == id)
            .ok_or_else(|| TopoError::UnknownBuiltin(id.to_string()))
    }
}

impl std::fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OperatorTable {
    n: u8,
    /// `images[m]` = image mask of the subset with mask `m`; length `2^n`.
    images: Vec<u32>,
}

impl std::fmt::Debug for OperatorTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OperatorTable(n={}, images={:?})", self.n, self.images)
    }
}

impl OperatorTable {
    pub fn new(n: usize, images: Vec<u32>) -> Result<OperatorTable, TopoError> {
        if n > MAX_CARRIER {
            return Err(TopoError::CarrierTooLarge { n, max: MAX_CARRIER });
        }
        let expected = 1usize << n;
        if images.len() != expected {
            return Err(TopoError::BadTableLength { expected, got: images.len() });
        }
        let full = full_mask(n);
        for &img in &images {
            if img & !full != 0 {
                return Err(TopoError::MaskOutOfRange { mask: img, n });
            }
        }
        Ok(OperatorTable { n: n as u8, images })
    }

    /// Tabulate a named operator over a topology.
    pub fn tabulate(kind: OperatorKind, top: &FiniteTopology) -> OperatorTable {
        let n = top.carrier();
        OperatorTable::tabulate_with(n, |a| match kind {
            OperatorKind::Identity => a,
            OperatorKind::Closure => top.closure(a),
            OperatorKind::ClosureInterior => top.closure(top.interior(a)),
            OperatorKind::InteriorClosure => top.interior(top.closure(a)),
            OperatorKind::ConstantFull => PointSet::full(n),
        })
    }

    pub fn tabulate_with(n: usize, mut f: impl FnMut(PointSet) -> PointSet) -> OperatorTable {
        debug_assert!(n <= MAX_CARRIER);
        let images = (0..=full_mask(n))
            .map(|m| f(PointSet::from_mask(m, n).expect("mask in range")).mask())
            .collect();
        OperatorTable { n: n as u8, images }
    }

    /// A uniformly random table, then repaired to be associated with `top` by
    /// unioning each open set into its own image.
    pub fn random_associated(top: &FiniteTopology, rng: &mut impl RngCore) -> OperatorTable {
        let n = top.carrier();
        let full = full_mask(n);
        let mut images: Vec<u32> =
            (0..=full).map(|_| rng.next_u32() & full).collect();
        for w in top.opens().masks() {
            images[w as usize] |= w;
        }
        OperatorTable { n: n as u8, images }
    }

    pub fn carrier(&self) -> usize {
        self.n as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, a: PointSet) -> PointSet {
        debug_assert_eq!(a.carrier(), self.carrier());
        PointSet::from_mask(self.images[a.mask() as usize], self.carrier())
            .expect("table images stay inside the carrier")
    }

    /// Every open set is contained in its image.
    pub fn is_associated(&self, top: &FiniteTopology) -> Result<bool, TopoError> {
        if top.carrier() != self.carrier() {
            return Err(TopoError::CarrierMismatch { left: self.carrier(), right: top.carrier() });
        }
        Ok(top.opens().masks().all(|w| w & !self.images[w as usize] == 0))
    }

    /// A ⊆ B implies T(A) ⊆ T(B). It is enough to check single-point
    /// extensions: any A ⊆ B is a chain of them.
    pub fn is_monotone(&self) -> bool {
        let full = full_mask(self.carrier());
        for m in 0..=full {
            let img = self.images[m as usize];
            let mut rest = full & !m;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                if img & !self.images[(m | bit) as usize] != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// T(A ∪ B) = T(A) ∪ T(B) for all pairs. Holds iff T(∅) absorbs into
    /// everything and T is determined by its singleton images, so the scan is
    /// linear in the table rather than quadratic in pairs.
    pub fn preserves_binary_unions(&self) -> bool {
        let full = full_mask(self.carrier());
        for m in 0..=full {
            let mut fold = self.images[0];
            let mut rest = m;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                fold |= self.images[bit as usize];
            }
            if fold != self.images[m as usize] {
                return false;
            }
        }
        true
    }

    /// T(W ∩ B) = T(W) ∩ T(B) for every *open* W and every subset B.
    pub fn distributes_over_open_intersection(&self, top: &FiniteTopology) -> Result<bool, TopoError> {
        if top.carrier() != self.carrier() {
            return Err(TopoError::CarrierMismatch { left: self.carrier(), right: top.carrier() });
        }
        let full = full_mask(self.carrier());
        for w in top.opens().masks() {
            for b in 0..=full {
                if self.images[(w & b) as usize] != self.images[w as usize] & self.images[b as usize] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// A topology with two operators, both associated with it. The only way to
/// get one is [`BiOperatorSpace::new`], so holding a value is proof of
/// association.
#[derive(Debug, Clone)]
pub struct BiOperatorSpace {
    top: FiniteTopology,
    t1: OperatorTable,
    t2: OperatorTable,
}

impl BiOperatorSpace {
    pub fn new(
        top: FiniteTopology,
        t1: OperatorTable,
        t2: OperatorTable,
    ) -> Result<BiOperatorSpace, TopoError> {
        for t in [&t1, &t2] {
            if !t.is_associated(&top)? {
                let open = top
                    .opens()
                    .masks()
                    .find(|&w| w & !t.images()[w as usize] != 0)
                    .expect("an unassociated operator has a violating open set");
                return Err(TopoError::NotAssociated {
                    open,
                    image: t.images()[open as usize],
                });
            }
        }
        Ok(BiOperatorSpace { top, t1, t2 })
    }

    pub fn topology(&self) -> &FiniteTopology {
        &self.top
    }

    pub fn t1(&self) -> &OperatorTable {
        &self.t1
    }

    pub fn t2(&self) -> &OperatorTable {
        &self.t2
    }

    pub fn carrier(&self) -> usize {
        self.top.carrier()
    }
}
