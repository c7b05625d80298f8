use thiserror::Error;

use crate::quadratic_points::SingularityKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined on the zero form")]
    ZeroForm,
    #[error("expected a form of degree {expected}, found {found}")]
    Degree { expected: usize, found: usize },
    #[error("substitution images must be linear binary forms (image {index} is not)")]
    MalformedSubstitution { index: usize },
    #[error("points do not span a line")]
    DegenerateSpan,
    #[error("the zero vector is not a projective point")]
    ZeroVector,
    #[error("pencil parameter (0:0) is not a point of P^1")]
    ZeroParameter,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("vector {0:?} violates the Plücker relation")]
    InvalidPlucker([i64; 6]),
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("point {0:?} does not lie on the surface")]
    NotOnSurface([i64; 4]),
    #[error("surface is singular at {0:?}")]
    SingularPoint([i64; 4]),
    #[error("plane does not contain the vertex of the pencil")]
    VertexNotOnPlane,
    #[error("line meets the surface transversally or lies on it; there is no contact point")]
    NoContact,
    #[error("tangent section is {0:?}, a node is required")]
    DegenerateSection(SingularityKind),
    #[error("pencil direction ({0}:{1}) lies inside the tangent section")]
    ContainedDirection(i64, i64),
    #[error("pencil direction ({0}:{1}) meets the section in a double point; it is a bitangent through the base point")]
    TangentDirection(i64, i64),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("expression is not a homogeneous quartic; offending monomials: {offending}")]
    NotQuartic { offending: String },
    #[error("invalid height bound {0}; must be at least 1")]
    InvalidHeight(i64),
}

impl Error {
    /// Errors rooted in the geometry of the inputs rather than their syntax.
    pub fn is_domain(&self) -> bool {
        !matches!(self, Error::Parse { .. } | Error::NotQuartic { .. })
    }
}
