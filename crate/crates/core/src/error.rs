use thiserror::Error;

use crate::sets::ElemSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("matroid must have a non-empty ground set")]
    EmptyGroundSet,

    #[error("ground set uses element {0}; the largest supported label is {max}", max = crate::sets::MAX_ELEMENT)]
    GroundTooLarge(u32),

    #[error("basis axiom violated: {reason}")]
    AxiomViolation {
        reason: String,
        /// Witness `(B1, B2, x)` when basis exchange fails.
        witness: Option<(ElemSet, ElemSet, u32)>,
    },

    #[error("{0} is not a basis")]
    NotABasis(ElemSet),

    #[error("element {element} {expectation} the basis {basis}")]
    ElementMembership {
        element: u32,
        basis: ElemSet,
        expectation: &'static str,
    },

    #[error("invalid order: {0}")]
    InvalidOrder(String),

    #[error("matrix rows are linearly dependent")]
    RankDeficient,

    #[error("the system A x = b has no solution")]
    InconsistentSystem,

    #[error("not a matroid morphism: flat {0} of the target is not a flat of the source")]
    NotAMorphism(ElemSet),

    #[error("ideal is not equidimensional: components of sizes {0} and {1}")]
    NotEquidimensional(usize, usize),

    #[error("primary component {0} is not of the form <z_e : e in B> with one variable per element")]
    MixedComponent(String),

    #[error("Betti number in degree {0} uses both x_e and y_e for some e")]
    NonSquarefreeDegree(String),

    #[error("polynomial is zero")]
    ZeroPolynomial,

    #[error("polytope has no vertices")]
    EmptyPolytope,

    #[error("ground set of size {size} exceeds the enumeration cutoff {cutoff}")]
    CutoffExceeded { size: usize, cutoff: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
