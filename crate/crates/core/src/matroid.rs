//! Matroids given by their bases, with a precomputed rank table.
//!
//! A matroid built from a matrix uses the column matroid: the bases are the
//! column subsets of full rank, and the cocircuits are the minimal supports
//! of vectors in the row space. Read as the matroid of the linear space cut
//! out by the rows, this is the rank `n - d` convention; the dual convention
//! (rank `d`) is obtained with [`Matroid::dual`].

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::OnceLock;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::order::LinearOrder;
use crate::sets::ElemSet;

/// Largest element label accepted by [`Matroid`]; the rank table is indexed
/// by raw bitmask.
pub const MAX_MATROID_ELEMENT: u32 = 20;

#[derive(Clone)]
pub struct Matroid {
    ground: ElemSet,
    rank: usize,
    bases: Vec<ElemSet>,
    rank_table: Vec<u8>,
    circuits: OnceLock<Vec<ElemSet>>,
    cocircuits: OnceLock<Vec<ElemSet>>,
    flats: OnceLock<Vec<ElemSet>>,
}

impl Matroid {
    /// Column matroid of `m`, with column `j` (0-based) labelled `j + 1`.
    pub fn from_matrix(m: &RatMatrix) -> Result<Self> {
        let labels: Vec<u32> = (1..=m.cols() as u32).collect();
        Matroid::from_matrix_labeled(m, &labels)
    }

    /// Column matroid of `m` with explicit element labels, one per column.
    pub fn from_matrix_labeled(m: &RatMatrix, labels: &[u32]) -> Result<Self> {
        assert_eq!(labels.len(), m.cols(), "one label per column");
        if m.cols() == 0 {
            return Err(Error::EmptyGroundSet);
        }
        let ground: ElemSet = labels.iter().collect();
        if ground.len() != labels.len() {
            return Err(Error::Parse("duplicate column labels".into()));
        }
        check_labels(ground)?;
        let rank = m.rank();
        let bases = (0..m.cols())
            .combinations(rank)
            .filter(|cols| m.column_rank(cols) == rank)
            .map(|cols| cols.iter().map(|&c| labels[c]).collect())
            .collect();
        Ok(Matroid::from_bases_unchecked(ground, bases))
    }

    /// Matroid on `1..=n` from an explicit basis list, validating the basis
    /// axioms. Exchange is checked pairwise, which is quadratic in the number
    /// of bases; intended for `n <= 12`.
    pub fn from_bases(n: u32, bases: impl IntoIterator<Item = ElemSet>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        Matroid::from_bases_on(ElemSet::range(1, n), bases)
    }

    /// Like [`Matroid::from_bases`] on an arbitrary ground set.
    pub fn from_bases_on(ground: ElemSet, bases: impl IntoIterator<Item = ElemSet>) -> Result<Self> {
        if ground.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        check_labels(ground)?;
        let bases: BTreeSet<ElemSet> = bases.into_iter().collect();
        let violation = |reason: String, witness| Error::AxiomViolation { reason, witness };
        let Some(first) = bases.first() else {
            return Err(violation("no bases given".into(), None));
        };
        let r = first.len();
        for b in &bases {
            if !b.is_subset(ground) {
                return Err(violation(
                    format!("basis {b} is not inside the ground set {ground}"),
                    None,
                ));
            }
            if b.len() != r {
                return Err(violation(format!("bases {first} and {b} have different sizes"), None));
            }
        }
        let lookup: HashSet<ElemSet> = bases.iter().copied().collect();
        for &b1 in &bases {
            for &b2 in &bases {
                for x in b1.difference(b2).iter() {
                    let exchangeable = b2
                        .difference(b1)
                        .iter()
                        .any(|y| lookup.contains(&b1.without(x).with(y)));
                    if !exchangeable {
                        return Err(violation(
                            format!("no y in {b2} - {b1} makes ({b1} - {x}) + y a basis"),
                            Some((b1, b2, x)),
                        ));
                    }
                }
            }
        }
        Ok(Matroid::from_bases_unchecked(ground, bases.into_iter().collect()))
    }

    /// Trusted constructor: `bases` must already satisfy the axioms.
    pub(crate) fn from_bases_unchecked(ground: ElemSet, mut bases: Vec<ElemSet>) -> Self {
        bases.sort();
        bases.dedup();
        let rank = bases[0].len();
        let size = 1usize << (ground.max().unwrap_or(0) + 1);
        let mut independent = vec![false; size];
        for b in &bases {
            for s in b.subsets() {
                independent[s.bits() as usize] = true;
            }
        }
        let mut rank_table = vec![0u8; size];
        for s in ground.subsets() {
            let i = s.bits() as usize;
            rank_table[i] = if independent[i] {
                s.len() as u8
            } else {
                s.iter()
                    .map(|e| rank_table[s.without(e).bits() as usize])
                    .max()
                    .unwrap_or(0)
            };
        }
        Matroid {
            ground,
            rank,
            bases,
            rank_table,
            circuits: OnceLock::new(),
            cocircuits: OnceLock::new(),
            flats: OnceLock::new(),
        }
    }

    /// The uniform matroid `U_{r,n}` on `1..=n`.
    pub fn uniform(r: usize, n: u32) -> Self {
        let ground = ElemSet::range(1, n);
        let bases = ground
            .to_vec()
            .into_iter()
            .combinations(r)
            .map(|c| c.into_iter().collect())
            .collect();
        Matroid::from_bases_unchecked(ground, bases)
    }

    /// Direct sum; the ground sets must be disjoint.
    pub fn direct_sum(&self, other: &Matroid) -> Matroid {
        assert!(self.ground.is_disjoint(other.ground));
        let bases = self
            .bases
            .iter()
            .cartesian_product(&other.bases)
            .map(|(a, b)| a.union(*b))
            .collect();
        Matroid::from_bases_unchecked(self.ground.union(other.ground), bases)
    }

    pub fn ground(&self) -> ElemSet {
        self.ground
    }

    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Bases in lexicographic order.
    pub fn bases(&self) -> &[ElemSet] {
        &self.bases
    }

    pub fn rank_of(&self, s: ElemSet) -> usize {
        self.rank_table[s.intersection(self.ground).bits() as usize] as usize
    }

    pub fn is_independent(&self, s: ElemSet) -> bool {
        s.is_subset(self.ground) && self.rank_of(s) == s.len()
    }

    pub fn is_basis(&self, s: ElemSet) -> bool {
        s.len() == self.rank && self.is_independent(s)
    }

    pub fn is_spanning(&self, s: ElemSet) -> bool {
        self.rank_of(s) == self.rank
    }

    pub fn closure(&self, s: ElemSet) -> ElemSet {
        let r = self.rank_of(s);
        self.ground.iter().filter(|&e| self.rank_of(s.with(e)) == r).collect()
    }

    pub fn is_flat(&self, s: ElemSet) -> bool {
        s.is_subset(self.ground) && self.closure(s) == s
    }

    pub fn loops(&self) -> ElemSet {
        self.closure(ElemSet::EMPTY)
    }

    pub fn coloops(&self) -> ElemSet {
        self.ground
            .iter()
            .filter(|&e| self.bases.iter().all(|b| b.contains(e)))
            .collect()
    }

    /// Inclusion-minimal dependent sets, in lexicographic order.
    pub fn circuits(&self) -> &[ElemSet] {
        self.circuits.get_or_init(|| {
            let mut out: Vec<ElemSet> = self
                .ground
                .subsets()
                .filter(|&s| {
                    let k = s.len();
                    k > 0 && self.rank_of(s) + 1 == k && s.iter().all(|e| self.rank_of(s.without(e)) + 1 == k)
                })
                .collect();
            out.sort();
            out
        })
    }

    /// All flats, in lexicographic order.
    pub fn flats(&self) -> &[ElemSet] {
        self.flats.get_or_init(|| {
            let mut out: Vec<ElemSet> = self.ground.subsets().filter(|&s| self.is_flat(s)).collect();
            out.sort();
            out
        })
    }

    /// Flats of rank `r - 1`.
    pub fn hyperplanes(&self) -> Vec<ElemSet> {
        if self.rank == 0 {
            return Vec::new();
        }
        self.flats()
            .iter()
            .copied()
            .filter(|&f| self.rank_of(f) + 1 == self.rank)
            .collect()
    }

    /// Cocircuits, computed as complements of hyperplanes, in lexicographic
    /// order.
    pub fn cocircuits(&self) -> &[ElemSet] {
        self.cocircuits.get_or_init(|| {
            let mut out: Vec<ElemSet> = self
                .hyperplanes()
                .into_iter()
                .map(|h| self.ground.difference(h))
                .collect();
            out.sort();
            out
        })
    }

    pub fn dual(&self) -> Matroid {
        let bases = self.bases.iter().map(|b| self.ground.difference(*b)).collect();
        Matroid::from_bases_unchecked(self.ground, bases)
    }

    /// `M \ A`, on the ground set `E - A`.
    pub fn delete(&self, a: ElemSet) -> Matroid {
        let ground = self.ground.difference(a);
        let r = self.rank_of(ground);
        let bases = self
            .bases
            .iter()
            .map(|b| b.difference(a))
            .filter(|b| b.len() == r)
            .collect();
        Matroid::from_bases_unchecked(ground, bases)
    }

    /// `M / A`, on the ground set `E - A`.
    pub fn contract(&self, a: ElemSet) -> Matroid {
        let a = a.intersection(self.ground);
        let ra = self.rank_of(a);
        let bases = self
            .bases
            .iter()
            .filter(|b| b.intersection(a).len() == ra)
            .map(|b| b.difference(a))
            .collect();
        Matroid::from_bases_unchecked(self.ground.difference(a), bases)
    }

    /// `M | S`.
    pub fn restrict(&self, s: ElemSet) -> Matroid {
        self.delete(self.ground.difference(s))
    }

    /// Classes of the relation "lie on a common circuit"; loops and coloops
    /// are singletons. Sorted lexicographically.
    pub fn connected_components(&self) -> Vec<ElemSet> {
        let elems = self.ground.to_vec();
        let index = |e: u32| elems.binary_search(&e).expect("ground element");
        let mut parent: Vec<usize> = (0..elems.len()).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for c in self.circuits() {
            let mut it = c.iter();
            let first = index(it.next().expect("circuits are non-empty"));
            for e in it {
                let (a, b) = (find(&mut parent, first), find(&mut parent, index(e)));
                parent[a] = b;
            }
        }
        let mut classes: Vec<ElemSet> = Vec::new();
        let mut root_class = vec![usize::MAX; elems.len()];
        for (i, &e) in elems.iter().enumerate() {
            let root = find(&mut parent, i);
            if root_class[root] == usize::MAX {
                root_class[root] = classes.len();
                classes.push(ElemSet::EMPTY);
            }
            let k = root_class[root];
            classes[k] = classes[k].with(e);
        }
        classes.sort();
        classes
    }

    /// The basis minimizing the sum of order positions, by the greedy
    /// algorithm.
    pub fn min_basis(&self, order: &LinearOrder) -> ElemSet {
        order.elements().iter().fold(ElemSet::EMPTY, |b, &e| {
            if self.is_independent(b.with(e)) {
                b.with(e)
            } else {
                b
            }
        })
    }

    /// The same basis via the blue rule: repeatedly take a cocircuit with no
    /// blue element and colour its order-smallest element blue.
    pub fn min_basis_blue_rule(&self, order: &LinearOrder) -> ElemSet {
        let mut blue = ElemSet::EMPTY;
        while let Some(d) = self.cocircuits().iter().find(|d| d.is_disjoint(blue)) {
            blue = blue.with(order.min_of(*d).expect("cocircuits are non-empty"));
        }
        blue
    }

    pub fn flat_lattice(&self) -> FlatLattice {
        FlatLattice::new(self)
    }
}

fn check_labels(ground: ElemSet) -> Result<()> {
    match ground.max() {
        Some(m) if m > MAX_MATROID_ELEMENT => Err(Error::GroundTooLarge(m)),
        _ => Ok(()),
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("ground", &self.ground)
            .field("rank", &self.rank)
            .field("bases", &self.bases)
            .finish()
    }
}

/// The lattice of flats with the Möbius values `mu(F, top)`.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    flats: Vec<ElemSet>,
    ranks: Vec<usize>,
    mobius_top: Vec<i64>,
    covers: Vec<(usize, usize)>,
}

impl FlatLattice {
    fn new(m: &Matroid) -> Self {
        let mut flats = m.flats().to_vec();
        flats.sort_by_key(|&f| (m.rank_of(f), f));
        let ranks: Vec<usize> = flats.iter().map(|&f| m.rank_of(f)).collect();
        let k = flats.len();
        let mut covers = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if ranks[j] == ranks[i] + 1 && flats[i].is_subset(flats[j]) {
                    covers.push((i, j));
                }
            }
        }
        // Flats are sorted by rank, so the top is last and every G > F comes
        // after F.
        let mut mobius_top = vec![0i64; k];
        for i in (0..k).rev() {
            mobius_top[i] = if i == k - 1 {
                1
            } else {
                -(i + 1..k)
                    .filter(|&j| flats[i].is_subset(flats[j]) && flats[i] != flats[j])
                    .map(|j| mobius_top[j])
                    .sum::<i64>()
            };
        }
        FlatLattice {
            flats,
            ranks,
            mobius_top,
            covers,
        }
    }

    /// Flats sorted by rank, then lexicographically.
    pub fn flats(&self) -> &[ElemSet] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i]
    }

    /// `mu(F_i, top)`.
    pub fn mobius_to_top(&self, i: usize) -> i64 {
        self.mobius_top[i]
    }

    /// Pairs `(i, j)` with `F_j` covering `F_i`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// `mu(bottom, top)`, the Möbius number of the matroid.
    pub fn mobius_number(&self) -> i64 {
        self.mobius_top[0]
    }

    pub fn iter(&self) -> impl Iterator<Item = (ElemSet, usize, i64)> + '_ {
        (0..self.len()).map(|i| (self.flats[i], self.ranks[i], self.mobius_top[i]))
    }
}
