//! Matroid invariants of the closures of linear and affine spaces in
//! products of projective lines.
//!
//! A linear space is given by a rational matrix whose rows cut it out. Its
//! column matroid `M` determines the initial ideals of the closure, their
//! primary decompositions, multidegrees and Betti numbers, and the cocircuit
//! polytope. An affine space `A x = b` adds the homogenizing element 0 and
//! is described by the triple `(M_hom, M, M')`.

pub mod activities;
pub mod affine;
pub mod error;
pub mod ideal;
pub mod io;
pub mod linalg;
pub mod matroid;
pub mod order;
pub mod polytope;
pub mod sets;
pub mod simplicial;

pub use activities::{ActivitySplit, ActivityTable, BivarPoly, UniPoly};
pub use affine::{MatroidTriple, TrivarPoly};
pub use error::{Error, Result};
pub use ideal::{LinearForm, Monomial, Multidegree, Polynomial, TermOrder};
pub use linalg::{Rat, RatMatrix};
pub use matroid::{FlatLattice, Matroid};
pub use order::LinearOrder;
pub use polytope::GenPermutahedron;
pub use sets::{ElemSet, Var, VarSet};
pub use simplicial::{BettiTable, SimplicialComplex, SquarefreeMonomialIdeal};

/// Largest ground set swept over all `n!` orders by default.
pub const LINEAR_SWEEP_CUTOFF: usize = 8;

/// Largest `n` for affine sweeps over all `(n + 1)!` orders by default.
pub const AFFINE_SWEEP_CUTOFF: usize = 7;
