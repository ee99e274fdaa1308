use thiserror::Error;

/// Coarse error category, used by front ends to pick an exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or inconsistent input data.
    Input,
    /// The request is well-formed but exceeds a supported size cap.
    Capability,
}

#[derive(Debug, Error)]
pub enum TopoError {
    #[error("carrier size {n} exceeds the maximum of {max} points")]
    CarrierTooLarge { n: usize, max: usize },

    #[error("subset mask {mask:#x} has bits outside the {n}-point carrier")]
    MaskOutOfRange { mask: u32, n: usize },

    #[error("point {point} is outside the {n}-point carrier")]
    PointOutOfRange { point: usize, n: usize },

    #[error("family is not a topology: {reason}")]
    NotATopology { reason: String },

    #[error("operator table has {got} images, expected {expected} (one per subset)")]
    BadTableLength { expected: usize, got: usize },

    #[error("operator is not associated with the topology: open set {open:#x} is not contained in its image {image:#x}")]
    NotAssociated { open: u32, image: u32 },

    #[error("carrier mismatch: {left} vs {right} points")]
    CarrierMismatch { left: usize, right: usize },

    #[error("function image {image} at point {point} is outside the {cod_n}-point codomain")]
    BadFunctionImage { point: usize, image: usize, cod_n: usize },

    #[error("exhaustive topology enumeration is capped at {max} points (requested {n})")]
    EnumerationCap { n: usize, max: usize },

    #[error("product carrier {dom_n}x{cod_n} = {product} exceeds the maximum of {max} points")]
    ProductTooLarge { dom_n: usize, cod_n: usize, product: usize, max: usize },

    #[error("unknown builtin operator kind {0:?}")]
    UnknownBuiltin(String),

    #[error("missing field {0:?}")]
    MissingField(&'static str),

    #[error("invalid {field}: {message}")]
    InvalidField { field: &'static str, message: String },
}

impl TopoError {
    pub fn kind(&self) -> ErrorKind {
        match self {
            TopoError::CarrierTooLarge { .. }
            | TopoError::EnumerationCap { .. }
            | TopoError::ProductTooLarge { .. } => ErrorKind::Capability,
            _ => ErrorKind::Input,
        }
    }
}
