use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse ring spec {spec:?}: {reason}")]
    Parse { spec: String, reason: String },

    #[error("polynomial {poly} is reducible over Z{prime}")]
    ReduciblePolynomial { poly: String, prime: u64 },

    #[error("ring order {order} exceeds the order cap {cap}")]
    OrderCap { order: u128, cap: usize },

    #[error("invalid ring tables: {0}")]
    InvalidRing(String),

    #[error("the Lee weight needs a residue ring Z_m, got {0}")]
    NotResidueRing(String),

    #[error("ring {0} is not local")]
    NonLocal(String),

    #[error("ring {0} is a field (|J| = 1); use the Hamming-metric Plotkin bound (plotkin_field)")]
    FieldRing(String),

    #[error("element set is not a left ideal")]
    NotAnIdeal,

    #[error("average over an empty set")]
    EmptySet,

    #[error("invalid weight table: {0}")]
    WeightTable(String),

    #[error("{name} = {value} is outside the allowed range {range}")]
    OutOfRange {
        name: &'static str,
        value: String,
        range: String,
    },

    #[error("enumerating {size} words exceeds the cap {cap}")]
    EnumerationCap { size: u128, cap: usize },

    #[error("minimum distance is undefined for a singleton code")]
    SingletonCode,

    #[error("invalid code: {0}")]
    InvalidCode(String),

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
