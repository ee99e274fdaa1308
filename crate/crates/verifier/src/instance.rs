//! Concrete instances of a claim: the spaces, operators, functions, and
//! subsets a single check runs against, plus the canonical key that names
//! the instance in reports.

use serde::Deserialize;
use topoforge_core::codec::{FunctionDoc, OperatorDoc, TopologyDoc};
use topoforge_core::{FiniteFunction, FiniteTopology, OperatorTable, PointSet, TopoError, MAX_CARRIER};

use crate::theorem::{InstanceShape, TheoremId};

/// An operator table together with the label that identifies it in keys,
/// e.g. `builtin:closure`, `seeded:3:[0,3,3,3]`, `explicit:[0,1,2,3]`.
#[derive(Debug, Clone)]
pub struct LabeledOperator {
    pub label: String,
    pub table: OperatorTable,
}

impl LabeledOperator {
    pub fn builtin(kind: topoforge_core::OperatorKind, top: &FiniteTopology) -> LabeledOperator {
        LabeledOperator {
            label: format!("builtin:{}", kind.id()),
            table: OperatorTable::tabulate(kind, top),
        }
    }

    pub fn explicit(table: OperatorTable) -> LabeledOperator {
        LabeledOperator { label: format!("explicit:{}", image_list(&table)), table }
    }
}

pub(crate) fn image_list(table: &OperatorTable) -> String {
    let parts: Vec<String> = table.images().iter().map(|m| m.to_string()).collect();
    format!("[{}]", parts.join(","))
}

#[derive(Debug, Clone)]
pub enum InstanceData {
    SubsetSingle {
        top: FiniteTopology,
        t: LabeledOperator,
    },
    SubsetPair {
        top: FiniteTopology,
        t1: LabeledOperator,
        t2: LabeledOperator,
    },
    Function {
        top_x: FiniteTopology,
        t1: LabeledOperator,
        t2: LabeledOperator,
        top_y: FiniteTopology,
        f: FiniteFunction,
    },
    FunctionPair {
        top_x: FiniteTopology,
        t1: LabeledOperator,
        t2: LabeledOperator,
        top_y: FiniteTopology,
        f: FiniteFunction,
        g: FiniteFunction,
    },
    FunctionPairSubset {
        top_x: FiniteTopology,
        t1: LabeledOperator,
        t2: LabeledOperator,
        top_y: FiniteTopology,
        f: FiniteFunction,
        g: FiniteFunction,
        a: PointSet,
    },
}

/// A topology's name inside a key: the family encoding when the carrier is
/// small enough to have one, the sorted open masks otherwise.
pub(crate) fn topology_key(top: &FiniteTopology) -> String {
    match top.encoding() {
        Some(e) => e.to_string(),
        None => {
            let masks: Vec<String> = top.opens().masks().map(|m| m.to_string()).collect();
            format!("opens[{}]", masks.join(","))
        }
    }
}

pub(crate) fn function_images_key(f: &FiniteFunction) -> String {
    let parts: Vec<String> = f.images().map(|y| y.to_string()).collect();
    format!("[{}]", parts.join(","))
}

pub(crate) fn subset_single_key(theorem: TheoremId, top: &FiniteTopology, label: &str) -> String {
    format!("{theorem}|nX={}|topX={}|t={label}", top.carrier(), topology_key(top))
}

pub(crate) fn subset_pair_key(
    theorem: TheoremId,
    top: &FiniteTopology,
    l1: &str,
    l2: &str,
) -> String {
    format!("{theorem}|nX={}|topX={}|t1={l1}|t2={l2}", top.carrier(), topology_key(top))
}

/// Everything before the function part of a key; one cell's instances share
/// this prefix.
pub(crate) fn function_cell_prefix(
    theorem: TheoremId,
    top_x: &FiniteTopology,
    l1: &str,
    l2: &str,
    top_y: &FiniteTopology,
) -> String {
    format!(
        "{theorem}|nX={}|topX={}|t1={l1}|t2={l2}|mY={}|topY={}",
        top_x.carrier(),
        topology_key(top_x),
        top_y.carrier(),
        topology_key(top_y)
    )
}

impl InstanceData {
    pub fn shape(&self) -> InstanceShape {
        match self {
            InstanceData::SubsetSingle { .. } => InstanceShape::SubsetSingle,
            InstanceData::SubsetPair { .. } => InstanceShape::SubsetPair,
            InstanceData::Function { .. } => InstanceShape::Function,
            InstanceData::FunctionPair { .. } => InstanceShape::FunctionPair,
            InstanceData::FunctionPairSubset { .. } => InstanceShape::FunctionPairSubset,
        }
    }

    /// Canonical report key. Two instances compare equal exactly when their
    /// keys match, so keys double as deduplication and replay handles.
    pub fn key(&self, theorem: TheoremId) -> String {
        match self {
            InstanceData::SubsetSingle { top, t } => subset_single_key(theorem, top, &t.label),
            InstanceData::SubsetPair { top, t1, t2 } => {
                subset_pair_key(theorem, top, &t1.label, &t2.label)
            }
            InstanceData::Function { top_x, t1, t2, top_y, f } => format!(
                "{}|f={}",
                function_cell_prefix(theorem, top_x, &t1.label, &t2.label, top_y),
                function_images_key(f)
            ),
            InstanceData::FunctionPair { top_x, t1, t2, top_y, f, g } => format!(
                "{}|f={}|g={}",
                function_cell_prefix(theorem, top_x, &t1.label, &t2.label, top_y),
                function_images_key(f),
                function_images_key(g)
            ),
            InstanceData::FunctionPairSubset { top_x, t1, t2, top_y, f, g, a } => format!(
                "{}|f={}|g={}|a={}",
                function_cell_prefix(theorem, top_x, &t1.label, &t2.label, top_y),
                function_images_key(f),
                function_images_key(g),
                a.mask()
            ),
        }
    }

    /// Shape and carrier agreement for the given claim. Returns an input
    /// error naming the first inconsistency; downstream evaluation relies on
    /// this having passed.
    pub fn validate(&self, theorem: TheoremId) -> Result<(), TopoError> {
        if self.shape() != theorem.shape() {
            return Err(TopoError::InvalidField {
                field: "instance",
                message: format!(
                    "{theorem} takes {:?} data, got {:?}",
                    theorem.shape(),
                    self.shape()
                ),
            });
        }
        let same = |left: usize, right: usize| -> Result<(), TopoError> {
            if left == right {
                Ok(())
            } else {
                Err(TopoError::CarrierMismatch { left, right })
            }
        };
        match self {
            InstanceData::SubsetSingle { top, t } => same(top.carrier(), t.table.carrier()),
            InstanceData::SubsetPair { top, t1, t2 } => {
                same(top.carrier(), t1.table.carrier())?;
                same(top.carrier(), t2.table.carrier())
            }
            InstanceData::Function { top_x, t1, t2, top_y, f }
            | InstanceData::FunctionPair { top_x, t1, t2, top_y, f, .. }
            | InstanceData::FunctionPairSubset { top_x, t1, t2, top_y, f, .. } => {
                same(top_x.carrier(), t1.table.carrier())?;
                same(top_x.carrier(), t2.table.carrier())?;
                same(top_x.carrier(), f.dom_carrier())?;
                same(top_y.carrier(), f.cod_carrier())?;
                if let InstanceData::FunctionPair { g, .. }
                | InstanceData::FunctionPairSubset { g, .. } = self
                {
                    same(f.dom_carrier(), g.dom_carrier())?;
                    same(f.cod_carrier(), g.cod_carrier())?;
                }
                if let InstanceData::FunctionPairSubset { a, .. } = self {
                    same(top_x.carrier(), a.carrier())?;
                }
                if theorem == TheoremId::T48GraphFunction {
                    let product = top_x.carrier() * top_y.carrier();
                    if product > MAX_CARRIER {
                        return Err(TopoError::ProductTooLarge {
                            dom_n: top_x.carrier(),
                            cod_n: top_y.carrier(),
                            product,
                            max: MAX_CARRIER,
                        });
                    }
                }
                Ok(())
            }
        }
    }
}

/// Wire form of an instance, as accepted by `check` on stdin or a file.
/// Fields beyond what the claim's shape needs are rejected rather than
/// silently dropped.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDoc {
    pub theorem: String,
    #[serde(default)]
    pub topology: Option<TopologyDoc>,
    #[serde(default)]
    pub operator: Option<OperatorDoc>,
    #[serde(default)]
    pub top_x: Option<TopologyDoc>,
    #[serde(default)]
    pub t1: Option<OperatorDoc>,
    #[serde(default)]
    pub t2: Option<OperatorDoc>,
    #[serde(default)]
    pub top_y: Option<TopologyDoc>,
    #[serde(default)]
    pub f: Option<FunctionDoc>,
    #[serde(default)]
    pub g: Option<FunctionDoc>,
    #[serde(default)]
    pub a: Option<u32>,
}

impl InstanceDoc {
    pub fn resolve(&self) -> Result<(TheoremId, InstanceData), TopoError> {
        let theorem = TheoremId::from_id(&self.theorem)?;
        let need = |field: &'static str| TopoError::MissingField(field);
        let reject = |field: &'static str, present: bool| -> Result<(), TopoError> {
            if present {
                Err(TopoError::InvalidField {
                    field: "instance",
                    message: format!("{theorem} does not take field {field:?}"),
                })
            } else {
                Ok(())
            }
        };

        let data = match theorem.shape() {
            InstanceShape::SubsetSingle => {
                reject("top_x", self.top_x.is_some())?;
                reject("t1", self.t1.is_some())?;
                reject("t2", self.t2.is_some())?;
                reject("top_y", self.top_y.is_some())?;
                reject("f", self.f.is_some())?;
                reject("g", self.g.is_some())?;
                reject("a", self.a.is_some())?;
                let top = self.topology.as_ref().ok_or_else(|| need("topology"))?.to_topology()?;
                let doc = self.operator.as_ref().ok_or_else(|| need("operator"))?;
                let t = LabeledOperator { label: doc.label(), table: doc.resolve(&top)? };
                InstanceData::SubsetSingle { top, t }
            }
            InstanceShape::SubsetPair => {
                reject("operator", self.operator.is_some())?;
                reject("top_x", self.top_x.is_some())?;
                reject("top_y", self.top_y.is_some())?;
                reject("f", self.f.is_some())?;
                reject("g", self.g.is_some())?;
                reject("a", self.a.is_some())?;
                let top = self.topology.as_ref().ok_or_else(|| need("topology"))?.to_topology()?;
                let d1 = self.t1.as_ref().ok_or_else(|| need("t1"))?;
                let d2 = self.t2.as_ref().ok_or_else(|| need("t2"))?;
                InstanceData::SubsetPair {
                    t1: LabeledOperator { label: d1.label(), table: d1.resolve(&top)? },
                    t2: LabeledOperator { label: d2.label(), table: d2.resolve(&top)? },
                    top,
                }
            }
            shape => {
                reject("topology", self.topology.is_some())?;
                reject("operator", self.operator.is_some())?;
                let top_x = self.top_x.as_ref().ok_or_else(|| need("top_x"))?.to_topology()?;
                let top_y = self.top_y.as_ref().ok_or_else(|| need("top_y"))?.to_topology()?;
                let d1 = self.t1.as_ref().ok_or_else(|| need("t1"))?;
                let d2 = self.t2.as_ref().ok_or_else(|| need("t2"))?;
                let t1 = LabeledOperator { label: d1.label(), table: d1.resolve(&top_x)? };
                let t2 = LabeledOperator { label: d2.label(), table: d2.resolve(&top_x)? };
                let f = self.f.as_ref().ok_or_else(|| need("f"))?.to_function()?;
                match shape {
                    InstanceShape::Function => {
                        reject("g", self.g.is_some())?;
                        reject("a", self.a.is_some())?;
                        InstanceData::Function { top_x, t1, t2, top_y, f }
                    }
                    InstanceShape::FunctionPair => {
                        reject("a", self.a.is_some())?;
                        let g = self.g.as_ref().ok_or_else(|| need("g"))?.to_function()?;
                        InstanceData::FunctionPair { top_x, t1, t2, top_y, f, g }
                    }
                    InstanceShape::FunctionPairSubset => {
                        let g = self.g.as_ref().ok_or_else(|| need("g"))?.to_function()?;
                        let mask = self.a.ok_or_else(|| need("a"))?;
                        let a = PointSet::from_mask(mask, top_x.carrier())?;
                        InstanceData::FunctionPairSubset { top_x, t1, t2, top_y, f, g, a }
                    }
                    _ => unreachable!("subset shapes handled above"),
                }
            }
        };
        data.validate(theorem)?;
        Ok((theorem, data))
    }
}
