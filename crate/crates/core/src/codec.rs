//! JSON document shapes for topologies, operators, and functions.
//!
//! These are the wire formats the command-line tool reads and writes:
//!
//! - topology: `{"n": 2, "opens": [0, 1, 3]}` (subset masks, ascending)
//! - operator: `{"builtin": "closure"}` or `{"n": 2, "images": [0, 3, 2, 3]}`
//! - function: `{"dom_n": 2, "cod_n": 2, "images": [0, 1]}`
//!
//! Deserialization is shape-only; converting into the core types performs
//! the real validation and is where errors surface.

use crate::error::TopoError;
use crate::maps::FiniteFunction;
use crate::operators::{OperatorKind, OperatorTable};
use crate::topology::FiniteTopology;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TopologyDoc {
    pub n: usize,
    pub opens: Vec<u32>,
}

impl TopologyDoc {
    pub fn to_topology(&self) -> Result<FiniteTopology, TopoError> {
        FiniteTopology::from_masks(self.n, &self.opens)
    }
}

impl From<&FiniteTopology> for TopologyDoc {
    fn from(top: &FiniteTopology) -> TopologyDoc {
        TopologyDoc { n: top.carrier(), opens: top.opens().masks().collect() }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OperatorDoc {
    Builtin { builtin: String },
    Table { n: usize, images: Vec<u32> },
}

impl OperatorDoc {
    /// Turn the document into a table over `top`'s carrier. Builtins are
    /// tabulated against the topology; explicit tables are validated.
    pub fn resolve(&self, top: &FiniteTopology) -> Result<OperatorTable, TopoError> {
        match self {
            OperatorDoc::Builtin { builtin } => {
                let kind = OperatorKind::from_id(builtin)?;
                Ok(OperatorTable::tabulate(kind, top))
            }
            OperatorDoc::Table { n, images } => {
                if *n != top.carrier() {
                    return Err(TopoError::CarrierMismatch { left: *n, right: top.carrier() });
                }
                OperatorTable::new(*n, images.clone())
            }
        }
    }

    /// Short description for verdict keys and diagnostics.
    pub fn label(&self) -> String {
        match self {
            OperatorDoc::Builtin { builtin } => format!("builtin:{builtin}"),
            OperatorDoc::Table { images, .. } => {
                let parts: Vec<String> = images.iter().map(|m| m.to_string()).collect();
                format!("explicit:[{}]", parts.join(","))
            }
        }
    }
}

impl From<&OperatorTable> for OperatorDoc {
    fn from(t: &OperatorTable) -> OperatorDoc {
        OperatorDoc::Table { n: t.carrier(), images: t.images().to_vec() }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FunctionDoc {
    pub dom_n: usize,
    pub cod_n: usize,
    pub images: Vec<usize>,
}

impl FunctionDoc {
    pub fn to_function(&self) -> Result<FiniteFunction, TopoError> {
        FiniteFunction::new(self.dom_n, self.cod_n, self.images.clone())
    }
}

impl From<&FiniteFunction> for FunctionDoc {
    fn from(f: &FiniteFunction) -> FunctionDoc {
        FunctionDoc {
            dom_n: f.dom_carrier(),
            cod_n: f.cod_carrier(),
            images: f.images().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn topology_round_trip() {
        let doc: TopologyDoc = serde_json::from_str(r#"{"n": 2, "opens": [0, 1, 3]}"#).unwrap();
        let top = doc.to_topology().unwrap();
        assert_eq!(top.carrier(), 2);
        let back = TopologyDoc::from(&top);
        assert_eq!(serde_json::to_string(&back).unwrap(), r#"{"n":2,"opens":[0,1,3]}"#);
    }

    #[test]
    fn topology_validation_flows_through() {
        let doc: TopologyDoc = serde_json::from_str(r#"{"n": 2, "opens": [0, 1]}"#).unwrap();
        assert!(doc.to_topology().is_err());
    }

    #[test]
    fn operator_documents() {
        let top = FiniteTopology::from_masks(2, &[0, 1, 3]).unwrap();
        let b: OperatorDoc = serde_json::from_str(r#"{"builtin": "closure"}"#).unwrap();
        assert_eq!(b.resolve(&top).unwrap().images(), &[0, 3, 2, 3]);
        assert_eq!(b.label(), "builtin:closure");

        let t: OperatorDoc =
            serde_json::from_str(r#"{"n": 2, "images": [0, 3, 2, 3]}"#).unwrap();
        assert_eq!(t.resolve(&top).unwrap().images(), &[0, 3, 2, 3]);
        assert_eq!(t.label(), "explicit:[0,3,2,3]");

        let bad: OperatorDoc = serde_json::from_str(r#"{"builtin": "boundary"}"#).unwrap();
        assert!(matches!(bad.resolve(&top), Err(TopoError::UnknownBuiltin(_))));

        let mismatched: OperatorDoc =
            serde_json::from_str(r#"{"n": 3, "images": [0,1,2,3,4,5,6,7]}"#).unwrap();
        assert!(matches!(mismatched.resolve(&top), Err(TopoError::CarrierMismatch { .. })));
    }

    #[test]
    fn function_round_trip() {
        let doc: FunctionDoc =
            serde_json::from_str(r#"{"dom_n": 2, "cod_n": 3, "images": [2, 0]}"#).unwrap();
        let f = doc.to_function().unwrap();
        assert_eq!(f.apply(0), 2);
        let back = FunctionDoc::from(&f);
        assert_eq!(
            serde_json::to_string(&back).unwrap(),
            r#"{"dom_n":2,"cod_n":3,"images":[2,0]}"#
        );
        let bad: FunctionDoc =
            serde_json::from_str(r#"{"dom_n": 2, "cod_n": 2, "images": [2, 0]}"#).unwrap();
        assert!(bad.to_function().is_err());
    }
}
