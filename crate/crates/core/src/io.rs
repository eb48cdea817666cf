//! JSON and CSV input formats.
//!
//! Matroids: `{"n": 4, "bases": [[1, 2], ...]}` or
//! `{"matrix": [["1", "1/2"], ...]}`. Affine spaces:
//! `{"matrix": [...], "b": ["1", ...]}`. Rationals are strings `"p/q"` or
//! `"p"`, or JSON integers.

use serde::Deserialize;

use crate::affine::{matroid_triple, MatroidTriple};
use crate::error::{Error, Result};
use crate::linalg::{Rat, RatMatrix};
use crate::matroid::Matroid;
use crate::order::LinearOrder;
use crate::sets::ElemSet;

/// A matroid description as read from JSON.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum MatroidInput {
    Bases { n: u32, bases: Vec<Vec<u32>> },
    Matrix { matrix: RatMatrix },
}

impl MatroidInput {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("matroid input: {e}")))
    }

    pub fn matrix(&self) -> Option<&RatMatrix> {
        match self {
            MatroidInput::Matrix { matrix } => Some(matrix),
            MatroidInput::Bases { .. } => None,
        }
    }

    pub fn build(&self) -> Result<Matroid> {
        match self {
            MatroidInput::Matrix { matrix } => Matroid::from_matrix(matrix),
            MatroidInput::Bases { n, bases } => {
                let sets = bases
                    .iter()
                    .map(|b| {
                        if let Some(&e) = b.iter().find(|&&e| e == 0 || e > *n) {
                            return Err(Error::Parse(format!("basis element {e} outside 1..={n}")));
                        }
                        Ok(b.iter().collect::<ElemSet>())
                    })
                    .collect::<Result<Vec<_>>>()?;
                if *n > crate::matroid::MAX_MATROID_ELEMENT {
                    return Err(Error::GroundTooLarge(*n));
                }
                Matroid::from_bases(*n, sets)
            }
        }
    }
}

/// An affine space `A x = b` as read from JSON.
#[derive(Clone, Debug, Deserialize)]
pub struct AffineInput {
    pub matrix: RatMatrix,
    pub b: Vec<Rat>,
}

impl AffineInput {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("affine input: {e}")))
    }

    pub fn build(&self) -> Result<MatroidTriple> {
        matroid_triple(&self.matrix, &self.b)
    }
}

/// Parses `"1,0,-1/2"`.
pub fn parse_rat_csv(text: &str) -> Result<Vec<Rat>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse())
        .collect()
}

/// Parses `"3,1,2"` into an order, which must cover `ground` exactly.
pub fn parse_order_csv(text: &str, ground: ElemSet) -> Result<LinearOrder> {
    let seq = text
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidOrder(format!("not an element: {s:?}")))
        })
        .collect::<Result<Vec<u32>>>()?;
    LinearOrder::on(ground, seq)
}
