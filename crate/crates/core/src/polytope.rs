//! Generalized permutahedra: the cocircuit polytope and the matroid
//! polytope.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{Rat, RatMatrix};
use crate::matroid::Matroid;
use crate::order::LinearOrder;
use crate::sets::ElemSet;

/// `{t : sum t_i = z(E), sum_{i in S} t_i <= z(S)}` with its vertices.
///
/// Coordinates are indexed by the ground elements in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenPermutahedron {
    ground: ElemSet,
    z: BTreeMap<ElemSet, Rat>,
    vertices: Vec<Vec<Rat>>,
}

/// Failure of local submodularity: `(S, a, b)`.
pub type SummandWitness = (ElemSet, u32, u32);

impl GenPermutahedron {
    /// Builds the polytope from `z`, with vertices from every order on the
    /// ground set. Fails if `|E|` exceeds `cutoff`.
    pub fn from_z(ground: ElemSet, z: BTreeMap<ElemSet, Rat>, cutoff: usize) -> Result<Self> {
        check_cutoff(ground, cutoff)?;
        let mut p = GenPermutahedron {
            ground,
            z,
            vertices: Vec::new(),
        };
        let vertices: BTreeSet<Vec<Rat>> = LinearOrder::all(ground)
            .par_bridge()
            .map(|o| p.greedy_vertex(&o))
            .collect();
        p.vertices = vertices.into_iter().collect();
        Ok(p)
    }

    pub fn ground(&self) -> ElemSet {
        self.ground
    }

    pub fn dim_ambient(&self) -> usize {
        self.ground.len()
    }

    pub fn z(&self, s: ElemSet) -> &Rat {
        &self.z[&s]
    }

    pub fn z_values(&self) -> &BTreeMap<ElemSet, Rat> {
        &self.z
    }

    /// Distinct vertices, sorted.
    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    /// The vertex maximizing a functional decreasing along `order`:
    /// `t_{pi_k} = z({pi_1..pi_k}) - z({pi_1..pi_{k-1}})`.
    pub fn greedy_vertex(&self, order: &LinearOrder) -> Vec<Rat> {
        let mut prefix = ElemSet::EMPTY;
        let mut coords: BTreeMap<u32, Rat> = BTreeMap::new();
        for &e in order.elements() {
            let next = prefix.with(e);
            coords.insert(e, self.z(next) - self.z(prefix));
            prefix = next;
        }
        coords.into_values().collect()
    }

    /// `z(I) + z(J) >= z(I | J) + z(I & J)` for all pairs; returns a
    /// violating pair if any.
    pub fn submodularity_violation(&self) -> Option<(ElemSet, ElemSet)> {
        for (i, zi) in &self.z {
            for (j, zj) in &self.z {
                if zi + zj < self.z(i.union(*j)) + self.z(i.intersection(*j)) {
                    return Some((*i, *j));
                }
            }
        }
        None
    }

    /// Whether `point` satisfies the equation and every inequality.
    pub fn contains(&self, point: &[Rat]) -> bool {
        let elems = self.ground.to_vec();
        if point.len() != elems.len() {
            return false;
        }
        let sum_over = |s: ElemSet| -> Rat {
            elems
                .iter()
                .zip(point)
                .filter(|(e, _)| s.contains(**e))
                .fold(Rat::zero(), |acc, (_, v)| acc + v.clone())
        };
        sum_over(self.ground) == *self.z(self.ground) && self.z.iter().all(|(s, zs)| sum_over(*s) <= *zs)
    }

    /// Dimension of the affine hull of the vertices.
    pub fn dimension(&self) -> Result<usize> {
        let first = self.vertices.first().ok_or(Error::EmptyPolytope)?;
        let rows: Vec<Vec<Rat>> = self.vertices[1..]
            .iter()
            .map(|v| v.iter().zip(first).map(|(a, b)| a - b).collect())
            .collect();
        if rows.is_empty() {
            return Ok(0);
        }
        Ok(RatMatrix::from_rows(rows)?.rank())
    }
}

fn check_cutoff(ground: ElemSet, cutoff: usize) -> Result<()> {
    if ground.len() > cutoff {
        return Err(Error::CutoffExceeded {
            size: ground.len(),
            cutoff,
        });
    }
    Ok(())
}

#[derive(Serialize)]
struct ZEntry<'a> {
    #[serde(rename = "S")]
    s: &'a ElemSet,
    val: &'a Rat,
}

impl Serialize for GenPermutahedron {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let z: Vec<ZEntry> = self.z.iter().map(|(s, val)| ZEntry { s, val }).collect();
        let mut st = s.serialize_struct("GenPermutahedron", 3)?;
        st.serialize_field("n", &self.ground.len())?;
        st.serialize_field("z", &z)?;
        st.serialize_field("vertices", &self.vertices)?;
        st.end()
    }
}

/// `D(S)`: the number of cocircuits meeting `S`.
pub fn cocircuits_meeting(m: &Matroid, s: ElemSet) -> usize {
    m.cocircuits().iter().filter(|d| !d.is_disjoint(s)).count()
}

/// The cocircuit polytope, `z(S) = D(S)`.
pub fn cocircuit_polytope(m: &Matroid, cutoff: usize) -> Result<GenPermutahedron> {
    let z = m
        .ground()
        .subsets()
        .map(|s| (s, Rat::from_int(cocircuits_meeting(m, s) as i64)))
        .collect();
    GenPermutahedron::from_z(m.ground(), z, cutoff)
}

/// `d_i` = number of cocircuits whose order-smallest element is `i`.
pub fn vertex_for_order(m: &Matroid, order: &LinearOrder) -> Vec<Rat> {
    let mut counts: BTreeMap<u32, i64> = m.ground().iter().map(|e| (e, 0)).collect();
    for &d in m.cocircuits() {
        *counts
            .get_mut(&order.min_of(d).expect("non-empty"))
            .expect("ground element") += 1;
    }
    counts.into_values().map(Rat::from_int).collect()
}

/// The matroid polytope, `z(S) = r(S)`.
pub fn matroid_polytope(m: &Matroid, cutoff: usize) -> Result<GenPermutahedron> {
    let z = m
        .ground()
        .subsets()
        .map(|s| (s, Rat::from_int(m.rank_of(s) as i64)))
        .collect();
    GenPermutahedron::from_z(m.ground(), z, cutoff)
}

/// Indicator vector of a subset of the ground set.
pub fn indicator(ground: ElemSet, s: ElemSet) -> Vec<Rat> {
    ground.iter().map(|e| Rat::from_int(s.contains(e) as i64)).collect()
}

/// Support of a point, as a set of ground elements.
pub fn support(ground: ElemSet, point: &[Rat]) -> ElemSet {
    ground
        .iter()
        .zip(point)
        .filter(|(_, v)| !v.is_zero())
        .map(|(e, _)| e)
        .collect()
}

/// Checks that `q(S) = D(S) - r(S)` is locally submodular:
/// `q(S+a) + q(S+b) >= q(S+a+b) + q(S)` for all `S` and `a, b` outside `S`.
pub fn summand_check(m: &Matroid) -> std::result::Result<(), SummandWitness> {
    let q = |s: ElemSet| cocircuits_meeting(m, s) as i64 - m.rank_of(s) as i64;
    for s in m.ground().subsets() {
        let rest = m.ground().difference(s).to_vec();
        for (k, &a) in rest.iter().enumerate() {
            for &b in &rest[k + 1..] {
                let delta = -q(s.with(a).with(b)) + q(s.with(a)) + q(s.with(b)) - q(s);
                if delta < 0 {
                    return Err((s, a, b));
                }
            }
        }
    }
    Ok(())
}

/// `r! * b`, the vertex-count bound for the cocircuit polytope.
pub fn vertex_bound(m: &Matroid) -> u64 {
    (1..=m.rank() as u64).product::<u64>() * m.bases().len() as u64
}
