use thiserror::Error;

use crate::pointset::PointSet;

/// Why a family of sets fails to be a topology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologyDefect {
    MissingEmpty,
    MissingCarrier,
    UnionNotOpen(PointSet, PointSet),
    IntersectionNotOpen(PointSet, PointSet),
}

impl std::fmt::Display for TopologyDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TopologyDefect::MissingEmpty => write!(f, "the empty set is not open"),
            TopologyDefect::MissingCarrier => write!(f, "the whole carrier is not open"),
            TopologyDefect::UnionNotOpen(a, b) => {
                write!(f, "union of {a} and {b} is {} which is not open", *a | *b)
            }
            TopologyDefect::IntersectionNotOpen(a, b) => {
                write!(f, "intersection of {a} and {b} is {} which is not open", *a & *b)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("not a topology: {0}")]
    NotATopology(TopologyDefect),
    #[error("point {point} does not fit a carrier of {carrier} points")]
    CarrierMismatch { carrier: usize, point: usize },
    #[error("carrier of {size} points exceeds the supported maximum of {max}")]
    CarrierTooLarge { size: usize, max: usize },
    #[error("a space needs at least one point")]
    EmptyCarrier,
    #[error("subspace on the empty set")]
    EmptySubspace,
    #[error("relation is not a preorder: {0}")]
    NotAPreorder(String),
    #[error("{0}")]
    Format(String),
}
