use thiserror::Error;

use crate::coxeter::Diagram;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("expected a vector quaternion, scalar part is {0:e}")]
    NonVectorInput(f64),

    #[error("no root sign assignment reproduces the {0} Cartan matrix")]
    ConstructionInconsistency(Diagram),

    #[error("group closure for {diagram} exceeded {limit} elements")]
    ClosureOverflow { diagram: Diagram, limit: usize },

    #[error("the {subgroup} subgroup is not defined for {diagram}")]
    UnsupportedSubgroup { diagram: Diagram, subgroup: &'static str },

    #[error("invalid indices: {0}")]
    InvalidIndices(String),

    #[error("orbit has only {0} distinct vertices")]
    DegenerateOrbit(usize),

    #[error("face is not planar (deviation {deviation:e}, limit {limit:e})")]
    NonPlanarFace { deviation: f64, limit: f64 },

    #[error("face is not convex at corner {0}")]
    NonConvexFace(usize),

    #[error("point set has no three-dimensional hull")]
    DegenerateHull,

    #[error("weight {0} has zero projection on the seed vector")]
    ZeroProjection(usize),

    #[error("dual face around primal vertex {vertex} is not planar (deviation {deviation:e})")]
    NonCoplanarDualFace { vertex: usize, deviation: f64 },

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("could not parse `{0}`")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
