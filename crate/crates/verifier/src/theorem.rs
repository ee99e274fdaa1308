//! The registry of checkable claims. Each claim has a stable string id used
//! in CLI arguments, verdict keys, and report summaries.

use topoforge_core::TopoError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// Chain of implications: operator-open ⇒ open ⇒ star-open, for one
    /// associated operator.
    R33Chain,
    /// Intersections of opens with bi-operator opens stay bi-operator open,
    /// under the distributivity hypothesis on both operators.
    L42Part1,
    /// Unions of bi-operator opens stay bi-operator open, under the
    /// monotonicity hypothesis (or the stricter union-preservation variant).
    L42Part2,
    /// Intersections of two bi-operator opens are bi-operator open — the
    /// claim expected to fail; its counterexamples are the point.
    R43IntersectionWitness,
    /// A bi-operator-closed graph forces preimages of (automatically
    /// contra-compact) subsets to be bi-operator closed.
    T46GraphPreimage,
    /// Operators associated with their own generated topology plus a closed
    /// graph force contra-bi-operator continuity.
    T47ContraCompactCodomain,
    /// Contra-continuity of the graph map x ↦ (x, f(x)) into the product is
    /// equivalent to contra-continuity of f; a set identity, so a hard gate.
    T48GraphFunction,
    /// Equalizer of a contra-bi-operator-continuous and a contra-continuous
    /// map into a strongly separated codomain is bi-operator closed.
    T49Equalizer,
    /// Two such maps agreeing on a bi-operator-dense set agree everywhere.
    C412DenseAgreement,
    /// Contra-bi-operator-continuous onto image of a bi-operator-connected
    /// space is not discrete (codomains with at least two points).
    T414NotDiscrete,
}

/// Which pieces of data an instance of the claim carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceShape {
    /// Topology + one operator.
    SubsetSingle,
    /// Topology + ordered operator pair.
    SubsetPair,
    /// Domain space with operator pair, codomain space, one function.
    Function,
    /// ... plus a second function.
    FunctionPair,
    /// ... plus a distinguished subset of the domain.
    FunctionPairSubset,
}

pub const ALL_THEOREMS: [TheoremId; 10] = [
    TheoremId::R33Chain,
    TheoremId::L42Part1,
    TheoremId::L42Part2,
    TheoremId::R43IntersectionWitness,
    TheoremId::T46GraphPreimage,
    TheoremId::T47ContraCompactCodomain,
    TheoremId::T48GraphFunction,
    TheoremId::T49Equalizer,
    TheoremId::C412DenseAgreement,
    TheoremId::T414NotDiscrete,
];

impl TheoremId {
    pub fn id(self) -> &'static str {
        match self {
            TheoremId::R33Chain => "R33_chain",
            TheoremId::L42Part1 => "L42_part1",
            TheoremId::L42Part2 => "L42_part2",
            TheoremId::R43IntersectionWitness => "R43_intersection_witness",
            TheoremId::T46GraphPreimage => "T46_graph_preimage",
            TheoremId::T47ContraCompactCodomain => "T47_contra_compact_codomain",
            TheoremId::T48GraphFunction => "T48_graph_function",
            TheoremId::T49Equalizer => "T49_equalizer",
            TheoremId::C412DenseAgreement => "C412_dense_agreement",
            TheoremId::T414NotDiscrete => "T414_not_discrete",
        }
    }

    pub fn from_id(id: &str) -> Result<TheoremId, TopoError> {
        ALL_THEOREMS
            .into_iter()
            .find(|t| t.id() == id)
            .ok_or_else(|| TopoError::InvalidField {
                field: "theorem",
                message: format!(
                    "unknown claim {id:?}; expected one of {}",
                    ALL_THEOREMS.map(|t| t.id()).join(", ")
                ),
            })
    }

    /// Stable position in [`ALL_THEOREMS`], used in seed derivation.
    pub fn index(self) -> usize {
        ALL_THEOREMS.iter().position(|&t| t == self).expect("listed")
    }

    pub fn shape(self) -> InstanceShape {
        match self {
            TheoremId::R33Chain => InstanceShape::SubsetSingle,
            TheoremId::L42Part1 | TheoremId::L42Part2 | TheoremId::R43IntersectionWitness => {
                InstanceShape::SubsetPair
            }
            TheoremId::T46GraphPreimage
            | TheoremId::T47ContraCompactCodomain
            | TheoremId::T48GraphFunction
            | TheoremId::T414NotDiscrete => InstanceShape::Function,
            TheoremId::T49Equalizer => InstanceShape::FunctionPair,
            TheoremId::C412DenseAgreement => InstanceShape::FunctionPairSubset,
        }
    }

    /// Smallest codomain carrier the sweep visits.
    pub fn min_codomain(self) -> usize {
        match self {
            TheoremId::T414NotDiscrete => 2,
            _ => 1,
        }
    }

    pub fn takes_functions(self) -> bool {
        !matches!(self.shape(), InstanceShape::SubsetSingle | InstanceShape::SubsetPair)
    }
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.id())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for t in ALL_THEOREMS {
            assert_eq!(TheoremId::from_id(t.id()).unwrap(), t);
        }
        assert!(TheoremId::from_id("R34_chain").is_err());
    }

    #[test]
    fn indices_are_stable() {
        assert_eq!(TheoremId::R33Chain.index(), 0);
        assert_eq!(TheoremId::T414NotDiscrete.index(), 9);
    }

    #[test]
    fn shapes_and_codomain_floors() {
        assert_eq!(TheoremId::R33Chain.shape(), InstanceShape::SubsetSingle);
        assert_eq!(TheoremId::T49Equalizer.shape(), InstanceShape::FunctionPair);
        assert_eq!(TheoremId::C412DenseAgreement.shape(), InstanceShape::FunctionPairSubset);
        assert_eq!(TheoremId::T414NotDiscrete.min_codomain(), 2);
        assert_eq!(TheoremId::T46GraphPreimage.min_codomain(), 1);
        assert!(!TheoremId::L42Part1.takes_functions());
        assert!(TheoremId::T48GraphFunction.takes_functions());
    }
}
