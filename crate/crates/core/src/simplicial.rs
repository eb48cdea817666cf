//! Simplicial complexes on the variables `x_e, y_e`, Stanley-Reisner ideals,
//! exact reduced homology and Hochster's formula.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::activities::ActivityTable;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::order::LinearOrder;
use crate::sets::{ElemSet, Var, VarSet};

/// Degrees up to this many variables are scanned exhaustively by
/// [`hochster_betti`]; larger ideals scan only unions of generators.
pub const HOCHSTER_EXHAUSTIVE_VARS: usize = 14;

/// Keeps the inclusion-maximal sets, sorted.
fn maximal(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut out: Vec<VarSet> = Vec::new();
    for s in sets {
        if !out.iter().any(|t| s.is_subset(*t)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Keeps the inclusion-minimal sets, sorted.
fn minimal(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by_key(|s| s.len());
    let mut out: Vec<VarSet> = Vec::new();
    for s in sets {
        if !out.iter().any(|t| t.is_subset(s)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Minimal transversals (hitting sets) of a family, by Berge's algorithm.
pub fn minimal_transversals(edges: &[VarSet]) -> Vec<VarSet> {
    let mut current = vec![VarSet::EMPTY];
    for &edge in edges {
        let (kept, missed): (Vec<VarSet>, Vec<VarSet>) = current.into_iter().partition(|t| !t.is_disjoint(edge));
        let mut candidates: Vec<VarSet> = missed
            .iter()
            .flat_map(|t| edge.iter().map(move |v| t.with(v)))
            .collect();
        candidates.sort_by_key(|s| s.len());
        candidates.dedup();
        let mut fresh: Vec<VarSet> = Vec::new();
        for c in candidates {
            let dominated = kept.iter().any(|k| k.is_subset(c)) || fresh.iter().any(|f| f.is_subset(c));
            if !dominated {
                fresh.push(c);
            }
        }
        current = kept;
        current.extend(fresh);
    }
    current.sort();
    current
}

/// A simplicial complex given by its facets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: VarSet,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    /// The complex generated by `facets`; non-maximal entries are dropped.
    /// Every facet must lie inside `vertices`.
    pub fn from_facets(vertices: VarSet, facets: impl IntoIterator<Item = VarSet>) -> Self {
        let facets: Vec<VarSet> = facets.into_iter().collect();
        assert!(facets.iter().all(|f| f.is_subset(vertices)), "facet outside vertex set");
        SimplicialComplex {
            vertices,
            facets: maximal(facets),
        }
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: VarSet) -> Self {
        SimplicialComplex::from_facets(vertices, [vertices])
    }

    pub fn vertices(&self) -> VarSet {
        self.vertices
    }

    /// Facets, sorted.
    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn is_face(&self, s: VarSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    /// Largest facet size, or `None` for the void complex.
    pub fn max_facet_size(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len()).max()
    }

    /// `Delta|_sigma`: faces contained in `sigma`.
    pub fn restrict(&self, sigma: VarSet) -> SimplicialComplex {
        SimplicialComplex {
            vertices: self.vertices.intersection(sigma),
            facets: maximal(self.facets.iter().map(|f| f.intersection(sigma)).collect()),
        }
    }

    /// All faces (including the empty face), grouped by size.
    pub fn faces_by_size(&self) -> Vec<Vec<VarSet>> {
        let top = self.max_facet_size().map_or(0, |s| s + 1);
        let mut seen: HashSet<VarSet> = HashSet::new();
        let mut by_size: Vec<Vec<VarSet>> = vec![Vec::new(); top];
        for f in &self.facets {
            for s in f.subsets() {
                if seen.insert(s) {
                    by_size[s.len()].push(s);
                }
            }
        }
        for level in &mut by_size {
            level.sort_by_key(|s| s.bits());
        }
        by_size
    }

    /// Independence complex on the variables `x_e`: facets `x_B`.
    pub fn independence_complex(m: &Matroid) -> Self {
        let vertices = VarSet::from_parts(m.ground(), ElemSet::EMPTY);
        SimplicialComplex::from_facets(
            vertices,
            m.bases().iter().map(|&b| VarSet::from_parts(b, ElemSet::EMPTY)),
        )
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.facets).finish()
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SimplicialComplex", 2)?;
        st.serialize_field("vertices", &self.vertices)?;
        st.serialize_field("facets", &self.facets)?;
        st.end()
    }
}

/// External activity complex: facets `x_{B + EP(B)} y_{B + EA(B)}` over the
/// bases of `m`.
pub fn external_activity_complex(m: &Matroid, order: &LinearOrder) -> SimplicialComplex {
    external_activity_complex_from(m.ground(), &ActivityTable::new(m), order)
}

pub fn external_activity_complex_from(
    ground: ElemSet,
    table: &ActivityTable,
    order: &LinearOrder,
) -> SimplicialComplex {
    let facets = table
        .splits(order)
        .into_iter()
        .map(|s| VarSet::from_parts(s.basis.union(s.externally_passive), s.basis.union(s.externally_active)));
    SimplicialComplex::from_facets(VarSet::doubled(ground), facets)
}

/// The minimal non-faces `x_{min C} y_{C - min C}` over the circuits of `m`,
/// derived without activities.
pub fn external_activity_nonfaces(m: &Matroid, order: &LinearOrder) -> SquarefreeMonomialIdeal {
    let gens = m.circuits().iter().map(|&c| {
        let lo = order.min_of(c).expect("circuits are non-empty");
        VarSet::from_parts(ElemSet::singleton(lo), c.without(lo))
    });
    SquarefreeMonomialIdeal::new(VarSet::doubled(m.ground()), gens)
}

/// A squarefree monomial ideal, stored by its minimal generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquarefreeMonomialIdeal {
    vertices: VarSet,
    gens: Vec<VarSet>,
}

impl SquarefreeMonomialIdeal {
    /// The ideal generated by `gens`, reduced to minimal generators.
    pub fn new(vertices: VarSet, gens: impl IntoIterator<Item = VarSet>) -> Self {
        let gens: Vec<VarSet> = gens.into_iter().collect();
        assert!(
            gens.iter().all(|g| g.is_subset(vertices)),
            "generator outside vertex set"
        );
        SquarefreeMonomialIdeal {
            vertices,
            gens: minimal(gens),
        }
    }

    pub fn zero(vertices: VarSet) -> Self {
        SquarefreeMonomialIdeal {
            vertices,
            gens: Vec::new(),
        }
    }

    pub fn vertices(&self) -> VarSet {
        self.vertices
    }

    /// Minimal generators, sorted.
    pub fn generators(&self) -> &[VarSet] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, monomial: VarSet) -> bool {
        self.gens.iter().any(|g| g.is_subset(monomial))
    }

    /// Image under a substitution of variables, re-minimized; `None` from
    /// `f` sends the variable to 1.
    pub fn substitute(&self, f: impl Fn(Var) -> Option<Var>) -> SquarefreeMonomialIdeal {
        let image = |s: VarSet| -> VarSet { s.iter().filter_map(&f).collect() };
        SquarefreeMonomialIdeal::new(image(self.vertices), self.gens.iter().map(|&g| image(g)))
    }

    /// Intersection of the prime ideals generated by each component.
    pub fn from_components(vertices: VarSet, components: &[VarSet]) -> Self {
        SquarefreeMonomialIdeal::new(vertices, minimal_transversals(components))
    }
}

impl Ord for SquarefreeMonomialIdeal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.gens
            .cmp(&other.gens)
            .then_with(|| self.vertices.bits().cmp(&other.vertices.bits()))
    }
}

impl PartialOrd for SquarefreeMonomialIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SquarefreeMonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

impl fmt::Display for SquarefreeMonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl Serialize for SquarefreeMonomialIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SquarefreeMonomialIdeal", 2)?;
        st.serialize_field("vertices", &self.vertices)?;
        st.serialize_field("generators", &self.gens)?;
        st.end()
    }
}

/// Minimal non-faces of `delta`.
pub fn stanley_reisner(delta: &SimplicialComplex) -> SquarefreeMonomialIdeal {
    let v = delta.vertices();
    let complements: Vec<VarSet> = delta.facets().iter().map(|f| v.difference(*f)).collect();
    SquarefreeMonomialIdeal::new(v, minimal_transversals(&complements))
}

/// The complex whose Stanley-Reisner ideal is `ideal`.
pub fn complex_of(ideal: &SquarefreeMonomialIdeal) -> SimplicialComplex {
    let v = ideal.vertices();
    let facets = minimal_transversals(ideal.generators())
        .into_iter()
        .map(|t| v.difference(t));
    SimplicialComplex::from_facets(v, facets)
}

/// Prime components of a squarefree ideal: the minimal vertex covers of its
/// generators, one per facet of [`complex_of`], sorted.
pub fn primary_decomposition(ideal: &SquarefreeMonomialIdeal) -> Vec<VarSet> {
    minimal_transversals(ideal.generators())
}

/// Ring elements used by the sparse rank routine.
trait Scalar: Clone + Zero + PartialEq {
    fn mul_sub(&self, a: &Self, b: &Self, c: &Self) -> Option<Self>;
    fn gcd_with(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl Scalar for i64 {
    /// `self * a - b * c` with overflow detection.
    fn mul_sub(&self, a: &Self, b: &Self, c: &Self) -> Option<Self> {
        self.checked_mul(*a)?.checked_sub(b.checked_mul(*c)?)
    }
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs() == 1
    }
}

impl Scalar for BigInt {
    fn mul_sub(&self, a: &Self, b: &Self, c: &Self) -> Option<Self> {
        Some(self * a - b * c)
    }
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs() == BigInt::from(1)
    }
}

type SparseRow<T> = Vec<(usize, T)>;

/// Rank over `Q` of integer rows by fraction-free elimination on the last
/// non-zero column. Returns `None` on `i64` overflow.
fn sparse_rank<T: Scalar>(rows: Vec<SparseRow<T>>) -> Option<usize> {
    let mut pivots: HashMap<usize, SparseRow<T>> = HashMap::new();
    for mut row in rows {
        while let Some((lead, _)) = row.last() {
            let lead = *lead;
            let Some(p) = pivots.get(&lead) else {
                break;
            };
            row = eliminate(&row, p)?;
        }
        if let Some((lead, _)) = row.last() {
            pivots.insert(*lead, row);
        }
    }
    Some(pivots.len())
}

/// `b * row - a * pivot`, where `a`, `b` are the leading coefficients, with
/// the content divided out.
fn eliminate<T: Scalar>(row: &SparseRow<T>, pivot: &SparseRow<T>) -> Option<SparseRow<T>> {
    let a = &row.last()?.1;
    let b = &pivot.last()?.1;
    let zero = T::zero();
    let mut out: SparseRow<T> = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (col, v) = if ci < cj {
            i += 1;
            (ci, row[i - 1].1.mul_sub(b, &zero, &zero)?)
        } else if cj < ci {
            j += 1;
            (cj, zero.mul_sub(&zero, a, &pivot[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (ci, row[i - 1].1.mul_sub(b, a, &pivot[j - 1].1)?)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    let content = out.iter().fold(
        T::zero(),
        |g, (_, v)| if g.is_zero() { v.clone() } else { g.gcd_with(v) },
    );
    if !content.is_zero() && !content.is_unit() {
        for e in &mut out {
            e.1 = e.1.div_exact(&content);
        }
    }
    Some(out)
}

/// Rank of the boundary map from `upper` (faces of size `k + 1`) to `lower`
/// (faces of size `k`).
fn boundary_rank(upper: &[VarSet], lower: &[VarSet]) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let index: HashMap<VarSet, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let rows: Vec<SparseRow<i64>> = upper
        .iter()
        .map(|&face| {
            let mut row: SparseRow<i64> = face
                .iter()
                .enumerate()
                .map(|(pos, v)| {
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    (index[&face.difference(VarSet::EMPTY.with(v))], sign)
                })
                .collect();
            row.sort_by_key(|e| e.0);
            row
        })
        .collect();
    match sparse_rank(rows.clone()) {
        Some(r) => r,
        None => {
            let big = rows
                .into_iter()
                .map(|r| r.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect())
                .collect();
            sparse_rank::<BigInt>(big).expect("BigInt elimination cannot overflow")
        }
    }
}

/// Ranks of reduced homology over `Q`; entry `k` is `dim H~_{k-1}`, so the
/// vector starts in dimension -1. Empty for the void complex.
pub fn reduced_homology(delta: &SimplicialComplex) -> Vec<usize> {
    let faces = delta.faces_by_size();
    if faces.is_empty() {
        return Vec::new();
    }
    // ranks[k] = rank of the boundary from size-k faces to size-(k-1) faces
    let ranks: Vec<usize> = (0..=faces.len())
        .map(|k| {
            if k == 0 || k >= faces.len() {
                0
            } else {
                boundary_rank(&faces[k], &faces[k - 1])
            }
        })
        .collect();
    (0..faces.len())
        .map(|k| faces[k].len() - ranks[k] - ranks[k + 1])
        .collect()
}

/// `dim H~_d`, or 0 outside the computed range.
pub fn homology_in_dim(ranks: &[usize], d: i64) -> usize {
    usize::try_from(d + 1)
        .ok()
        .and_then(|k| ranks.get(k).copied())
        .unwrap_or(0)
}

/// A multidegree usable as a Betti-table key.
pub trait Degree: Ord + Clone + Serialize + fmt::Display {
    fn total(&self) -> usize;
}

impl Degree for VarSet {
    fn total(&self) -> usize {
        self.len()
    }
}

impl Degree for ElemSet {
    fn total(&self) -> usize {
        self.len()
    }
}

/// Non-zero Betti numbers `beta_{i, alpha}` of a quotient `S/I`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiTable<D: Degree> {
    entries: BTreeMap<(usize, D), u64>,
}

impl<D: Degree> Default for BettiTable<D> {
    fn default() -> Self {
        BettiTable {
            entries: BTreeMap::new(),
        }
    }
}

impl<D: Degree> BettiTable<D> {
    pub fn add(&mut self, i: usize, degree: D, beta: u64) {
        if beta == 0 {
            return;
        }
        *self.entries.entry((i, degree)).or_insert(0) += beta;
    }

    pub fn get(&self, i: usize, degree: &D) -> u64 {
        self.entries.get(&(i, degree.clone())).copied().unwrap_or(0)
    }

    /// Entries sorted by `(i, degree)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &D, u64)> {
        self.entries.iter().map(|((i, d), &b)| (*i, d, b))
    }

    /// `beta_i` summed over degrees, for `i = 0..=projdim`.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.projdim().map_or(0, |p| p + 1)];
        for (i, _, b) in self.entries() {
            out[i] += b;
        }
        out
    }

    /// Largest `i` with a non-zero entry.
    pub fn projdim(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// Graded table: `rows[j][i] = sum of beta_{i, alpha}` over `|alpha| = i + j`.
    pub fn graded(&self) -> Vec<Vec<u64>> {
        let width = self.projdim().map_or(0, |p| p + 1);
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for (i, d, b) in self.entries() {
            let j = d.total() - i;
            if rows.len() <= j {
                rows.resize(j + 1, vec![0; width]);
            }
            rows[j][i] += b;
        }
        rows
    }

    /// The graded table in the usual text layout, `-` for zero.
    pub fn graded_display(&self) -> String {
        let rows = self.graded();
        let mut out = String::new();
        for (j, row) in rows.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .map(|&b| if b == 0 { "-".into() } else { b.to_string() })
                .collect();
            out.push_str(&format!("{j:>3}: {}\n", cells.join(" ")));
        }
        out
    }
}

impl BettiTable<VarSet> {
    /// Coarsens to `Z^n` by sending `x_e` and `y_e` to `e`. Fails if a
    /// non-zero entry has a degree using both `x_e` and `y_e`.
    pub fn coarsen(&self) -> Result<BettiTable<ElemSet>> {
        let mut out = BettiTable::default();
        for (i, d, b) in self.entries() {
            if !d.x_part().is_disjoint(d.y_part()) {
                return Err(Error::NonSquarefreeDegree(d.to_string()));
            }
            out.add(i, d.elements(), b);
        }
        Ok(out)
    }
}

#[derive(Serialize)]
struct BettiEntry<'a, D> {
    i: usize,
    degree: &'a D,
    beta: u64,
}

impl<D: Degree> Serialize for BettiTable<D> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<BettiEntry<D>> = self
            .entries()
            .map(|(i, degree, beta)| BettiEntry { i, degree, beta })
            .collect();
        let mut st = s.serialize_struct("BettiTable", 1)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

/// Unions of subsets of `gens`, including the empty union.
fn generator_unions(gens: &[VarSet]) -> Vec<VarSet> {
    let mut seen: HashSet<VarSet> = HashSet::from([VarSet::EMPTY]);
    let mut frontier = vec![VarSet::EMPTY];
    while let Some(s) = frontier.pop() {
        for &g in gens {
            let u = s.union(g);
            if seen.insert(u) {
                frontier.push(u);
            }
        }
    }
    let mut out: Vec<VarSet> = seen.into_iter().collect();
    out.sort_by_key(|s| s.bits());
    out
}

/// Betti numbers of `S/I` by Hochster's formula:
/// `beta_{i, sigma} = dim H~_{|sigma| - i - 1}(Delta|_sigma)`.
///
/// A degree `sigma` that is not the union of the generators inside it has a
/// cone as restriction (any vertex outside those generators is an apex), so
/// its Betti numbers vanish and the homology is skipped.
pub fn hochster_betti(ideal: &SquarefreeMonomialIdeal) -> BettiTable<VarSet> {
    let delta = complex_of(ideal);
    let gens = ideal.generators();
    let candidates: Vec<VarSet> = if ideal.vertices().len() <= HOCHSTER_EXHAUSTIVE_VARS {
        ideal.vertices().subsets().collect()
    } else {
        generator_unions(gens)
    };
    let found: Vec<(usize, VarSet, u64)> = candidates
        .par_iter()
        .filter(|&&sigma| {
            let cover = gens
                .iter()
                .filter(|g| g.is_subset(sigma))
                .fold(VarSet::EMPTY, |acc, g| acc.union(*g));
            cover == sigma
        })
        .flat_map_iter(|&sigma| {
            let ranks = reduced_homology(&delta.restrict(sigma));
            let size = sigma.len() as i64;
            (0..=sigma.len())
                .map(move |i| (i, homology_in_dim(&ranks, size - i as i64 - 1)))
                .filter(|&(_, b)| b > 0)
                .map(move |(i, b)| (i, sigma, b as u64))
                .collect::<Vec<_>>()
        })
        .collect();
    let mut table = BettiTable::default();
    for (i, sigma, b) in found {
        table.add(i, sigma, b);
    }
    table
}

/// Betti table predicted by the lattice of flats: one entry
/// `beta_{r - r(F), E - F} = |mu(F, top)|` per flat `F`.
pub fn betti_from_mobius(m: &Matroid) -> BettiTable<ElemSet> {
    let mut table = BettiTable::default();
    for (f, rank, mu) in m.flat_lattice().iter() {
        table.add(m.rank() - rank, m.ground().difference(f), mu.unsigned_abs());
    }
    table
}

/// Outcome of [`is_cohen_macaulay`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CmWitness {
    pub cohen_macaulay: bool,
    pub codim: usize,
    pub projdim: usize,
}

/// Compares the codimension (number of variables minus the largest facet
/// size) with the projective dimension read off the Hochster Betti table.
pub fn is_cohen_macaulay(ideal: &SquarefreeMonomialIdeal) -> CmWitness {
    cm_from_betti(ideal, &hochster_betti(ideal))
}

/// [`is_cohen_macaulay`] with a precomputed Betti table.
pub fn cm_from_betti(ideal: &SquarefreeMonomialIdeal, betti: &BettiTable<VarSet>) -> CmWitness {
    let delta = complex_of(ideal);
    let codim = ideal.vertices().len() - delta.max_facet_size().unwrap_or(0);
    let projdim = betti.projdim().unwrap_or(0);
    CmWitness {
        cohen_macaulay: codim == projdim,
        codim,
        projdim,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::RatMatrix;
    use crate::sets::digits;

    fn paper() -> Matroid {
        Matroid::from_matrix(&RatMatrix::from_i64_rows(&[
            &[1, 1, 0, 0, 0, 1],
            &[0, 1, -1, 0, 1, 0],
            &[0, 0, 1, 1, 0, 0],
        ]))
        .unwrap()
    }

    fn xs(s: &str) -> VarSet {
        VarSet::from_parts(digits(s), ElemSet::EMPTY)
    }

    fn mono(x: &str, y: &str) -> VarSet {
        VarSet::from_parts(digits(x), digits(y))
    }

    fn natural_ideal() -> SquarefreeMonomialIdeal {
        let m = paper();
        stanley_reisner(&external_activity_complex(&m.dual(), &LinearOrder::natural(m.ground())))
    }

    #[test]
    fn transversals() {
        let t = minimal_transversals(&[xs("12"), xs("23")]);
        assert_eq!(t, vec![xs("13"), xs("2")]);
        assert_eq!(minimal_transversals(&[]), vec![VarSet::EMPTY]);
        assert!(minimal_transversals(&[VarSet::EMPTY]).is_empty());
    }

    #[test]
    fn independence_complex_of_dual() {
        let m = paper();
        let ideal = stanley_reisner(&SimplicialComplex::independence_complex(&m.dual()));
        let mut expected: Vec<VarSet> = ["126", "235", "245", "34", "1356", "1456"]
            .iter()
            .map(|s| xs(s))
            .collect();
        expected.sort();
        assert_eq!(ideal.generators(), &expected[..]);
        let comps = primary_decomposition(&ideal);
        assert_eq!(comps.len(), 13);
        assert!(comps.contains(&xs("123")) && comps.contains(&xs("456")));
        assert_eq!(
            SquarefreeMonomialIdeal::from_components(ideal.vertices(), &comps),
            ideal
        );
        assert_eq!(complex_of(&ideal), SimplicialComplex::independence_complex(&m.dual()));
    }

    #[test]
    fn simplex_and_empty_complex() {
        let v = xs("123");
        assert!(stanley_reisner(&SimplicialComplex::simplex(v)).is_zero());
        let empty = SimplicialComplex::from_facets(v, [VarSet::EMPTY]);
        assert_eq!(stanley_reisner(&empty).generators(), &[xs("1"), xs("2"), xs("3")]);
        assert_eq!(
            primary_decomposition(&SquarefreeMonomialIdeal::zero(v)),
            vec![VarSet::EMPTY]
        );
    }

    #[test]
    fn external_activity_complex_descriptions_agree() {
        let dual = paper().dual();
        let natural = LinearOrder::natural(dual.ground());
        let delta = external_activity_complex(&dual, &natural);
        assert_eq!(delta.facets().len(), 13);
        assert!(delta.facets().iter().all(|f| f.len() == 9));
        let nonfaces = external_activity_nonfaces(&dual, &natural);
        assert_eq!(stanley_reisner(&delta), nonfaces);
        assert!(nonfaces.generators().contains(&mono("3", "4")));
    }

    #[test]
    fn loop_is_a_nonface() {
        let m = Matroid::from_matrix(&RatMatrix::from_i64_rows(&[&[1, 0]])).unwrap();
        let ideal = external_activity_nonfaces(&m, &LinearOrder::natural(m.ground()));
        assert_eq!(ideal.generators(), &[mono("2", "")]);
    }

    #[test]
    fn natural_decomposition_has_235_component() {
        let comps = primary_decomposition(&natural_ideal());
        assert_eq!(comps.len(), 13);
        assert!(comps.contains(&mono("3", "25")));
        assert!(comps.contains(&mono("123", "")));
    }

    #[test]
    fn homology_basics() {
        let circle = SimplicialComplex::from_facets(xs("123"), [xs("12"), xs("13"), xs("23")]);
        assert_eq!(reduced_homology(&circle), vec![0, 0, 1]);
        let simplex = SimplicialComplex::simplex(xs("1234"));
        assert!(reduced_homology(&simplex).iter().all(|&h| h == 0));
        let empty = SimplicialComplex::from_facets(xs("1"), [VarSet::EMPTY]);
        assert_eq!(reduced_homology(&empty), vec![1]);
        let two_points = SimplicialComplex::from_facets(xs("12"), [xs("1"), xs("2")]);
        assert_eq!(reduced_homology(&two_points), vec![0, 1]);
    }

    #[test]
    fn bjorner_on_paper_dual() {
        let m = paper();
        let ranks = reduced_homology(&SimplicialComplex::independence_complex(&m.dual()));
        assert_eq!(homology_in_dim(&ranks, 2), 4);
        assert_eq!(ranks.iter().sum::<usize>(), 4);
    }

    #[test]
    fn principal_ideal_betti() {
        let ideal = SquarefreeMonomialIdeal::new(xs("12"), [xs("1")]);
        let betti = hochster_betti(&ideal);
        let entries: Vec<_> = betti.entries().map(|(i, d, b)| (i, *d, b)).collect();
        assert_eq!(entries, vec![(0, VarSet::EMPTY, 1), (1, xs("1"), 1)]);
    }

    #[test]
    fn paper_betti_numbers() {
        let ideal = natural_ideal();
        let betti = hochster_betti(&ideal);
        assert_eq!(betti.totals(), vec![1, 6, 9, 4]);
        let coarse = betti.coarsen().unwrap();
        assert_eq!(coarse.get(2, &digits("2345")), 2);
        assert_eq!(coarse.get(3, &digits("123456")), 4);
        let predicted = betti_from_mobius(&paper());
        assert_eq!(coarse, predicted);
        assert_eq!(
            predicted.graded(),
            vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 3, 2, 0], vec![0, 2, 7, 4]]
        );
        let cm = cm_from_betti(&ideal, &betti);
        assert_eq!(
            cm,
            CmWitness {
                cohen_macaulay: true,
                codim: 3,
                projdim: 3
            }
        );
    }

    #[test]
    fn mobius_prediction_linear_strand() {
        let predicted = betti_from_mobius(&paper());
        for d in ["34", "126", "235", "245", "1356", "1456"] {
            assert_eq!(predicted.get(1, &digits(d)), 1, "{d}");
        }
    }

    #[test]
    fn path_ideal_is_computed() {
        let ideal = SquarefreeMonomialIdeal::new(xs("1234"), [xs("12"), xs("23"), xs("34")]);
        let betti = hochster_betti(&ideal);
        assert_eq!(betti.totals(), vec![1, 3, 2]);
        let cm = is_cohen_macaulay(&ideal);
        assert_eq!((cm.codim, cm.projdim, cm.cohen_macaulay), (2, 2, true));
        let zero = is_cohen_macaulay(&SquarefreeMonomialIdeal::zero(xs("12")));
        assert_eq!((zero.codim, zero.projdim, zero.cohen_macaulay), (0, 0, true));
    }

    #[test]
    fn exhaustive_and_union_scans_agree() {
        let ideal = natural_ideal();
        let delta = complex_of(&ideal);
        let mut table = BettiTable::default();
        for sigma in generator_unions(ideal.generators()) {
            let ranks = reduced_homology(&delta.restrict(sigma));
            for i in 0..=sigma.len() {
                table.add(
                    i,
                    sigma,
                    homology_in_dim(&ranks, sigma.len() as i64 - i as i64 - 1) as u64,
                );
            }
        }
        assert_eq!(table, hochster_betti(&ideal));
    }

    #[test]
    fn big_rank_matches_i64() {
        let rows: Vec<SparseRow<i64>> = vec![vec![(0, 2), (1, 4)], vec![(0, 1), (1, 2)], vec![(2, 3)]];
        let big = rows
            .iter()
            .map(|r| r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect())
            .collect();
        assert_eq!(sparse_rank(rows), Some(2));
        assert_eq!(sparse_rank::<BigInt>(big), Some(2));
        let overflow: Vec<SparseRow<i64>> = vec![vec![(0, i64::MAX), (1, 3)], vec![(0, 3), (1, i64::MAX)]];
        assert_eq!(sparse_rank(overflow), None);
    }
}
