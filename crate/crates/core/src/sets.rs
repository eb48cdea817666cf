//! Bitset subsets of a small ground set, and the doubled variable set
//! `{x_e, y_e}` used by the monomial ideals.
//!
//! Elements are labelled `0..=31`; element `0` is reserved for the
//! homogenizing coordinate of an affine space, so linear problems live on
//! `1..=n`. Collections of subsets are always ordered lexicographically on
//! their ascending element sequences, which is what makes every report
//! reproducible.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

/// Largest element label supported by [`ElemSet`] and [`VarSet`].
pub const MAX_ELEMENT: u32 = 31;

/// A subset of the ground set, stored as a bitmask (bit `e` is element `e`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElemSet(u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElemSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(e: u32) -> Self {
        debug_assert!(e <= MAX_ELEMENT);
        ElemSet(1 << e)
    }

    /// The interval `lo..=hi`.
    pub fn range(lo: u32, hi: u32) -> Self {
        (lo..=hi).collect()
    }

    pub fn contains(self, e: u32) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }

    pub fn with(self, e: u32) -> Self {
        ElemSet(self.0 | 1 << e)
    }

    pub fn without(self, e: u32) -> Self {
        ElemSet(self.0 & !(1 << e))
    }

    pub fn union(self, other: Self) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElemSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn min(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros())
    }

    pub fn max(self) -> Option<u32> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros())
    }

    pub fn iter(self) -> ElemIter {
        ElemIter(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing bitmask order (so every subset
    /// is visited after all of its own subsets).
    pub fn subsets(self) -> Subsets {
        Subsets {
            ground: self.0,
            next: Some(0),
        }
    }
}

impl FromIterator<u32> for ElemSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut bits = 0u64;
        for e in iter {
            assert!(e <= MAX_ELEMENT, "element {e} out of range");
            bits |= 1 << e;
        }
        ElemSet(bits)
    }
}

impl<'a> FromIterator<&'a u32> for ElemSet {
    fn from_iter<I: IntoIterator<Item = &'a u32>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

/// Lexicographic comparison of the ascending element sequences of two
/// bitmasks, where bit `i` ranks below bit `j` iff `i < j`.
fn lex_cmp_bits(a: u64, b: u64) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let low = diff & diff.wrapping_neg();
    let above = !((low << 1).wrapping_sub(1));
    if a & low != 0 {
        // `a` carries the first differing element; `b` is smaller only if it
        // stops here (is a prefix of `a`).
        if b & above == 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    } else if a & above == 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp_bits(self.0, other.0)
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for ElemSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

pub struct ElemIter(u64);

impl Iterator for ElemIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for ElemIter {}

pub struct Subsets {
    ground: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElemSet;

    fn next(&mut self) -> Option<ElemSet> {
        let cur = self.next?;
        self.next = if cur == self.ground {
            None
        } else {
            Some((cur | !self.ground).wrapping_add(1) & self.ground)
        };
        Some(ElemSet(cur))
    }
}

/// One of the `2(n+1)` polynomial variables `x_e`, `y_e`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Var {
    X(u32),
    Y(u32),
}

impl Var {
    pub fn element(self) -> u32 {
        match self {
            Var::X(e) | Var::Y(e) => e,
        }
    }

    pub fn is_x(self) -> bool {
        matches!(self, Var::X(_))
    }

    /// Bit position inside a [`VarSet`]: `x_e -> 2e`, `y_e -> 2e + 1`.
    pub fn slot(self) -> u32 {
        match self {
            Var::X(e) => 2 * e,
            Var::Y(e) => 2 * e + 1,
        }
    }

    pub fn from_slot(slot: u32) -> Var {
        if slot.is_multiple_of(2) {
            Var::X(slot / 2)
        } else {
            Var::Y(slot / 2)
        }
    }

    /// Position in the fixed variable sequence
    /// `x_1, x_2, ..., y_1, y_2, ..., x_0, y_0` used for lexicographic
    /// tie-breaking and for printing.
    fn sequence_key(self) -> (u8, u32) {
        match self {
            Var::X(0) => (2, 0),
            Var::Y(0) => (3, 0),
            Var::X(e) => (0, e),
            Var::Y(e) => (1, e),
        }
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sequence_key().cmp(&other.sequence_key())
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(e) => write!(f, "x{e}"),
            Var::Y(e) => write!(f, "y{e}"),
        }
    }
}

impl Serialize for Var {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A set of variables, i.e. a squarefree monomial or a simplex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VarSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `x_A y_B`.
    pub fn from_parts(xs: ElemSet, ys: ElemSet) -> Self {
        let mut out = VarSet::EMPTY;
        for e in xs.iter() {
            out = out.with(Var::X(e));
        }
        for e in ys.iter() {
            out = out.with(Var::Y(e));
        }
        out
    }

    /// All `x_e` and `y_e` for `e` in the given elements.
    pub fn doubled(elems: ElemSet) -> Self {
        VarSet::from_parts(elems, elems)
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 >> v.slot() & 1 == 1
    }

    pub fn with(self, v: Var) -> Self {
        VarSet(self.0 | 1 << v.slot())
    }

    pub fn union(self, other: Self) -> Self {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VarSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Elements carrying an `x` variable.
    pub fn x_part(self) -> ElemSet {
        self.iter().filter(|v| v.is_x()).map(Var::element).collect()
    }

    /// Elements carrying a `y` variable.
    pub fn y_part(self) -> ElemSet {
        self.iter().filter(|v| !v.is_x()).map(Var::element).collect()
    }

    /// Elements touched by the set (the `Z^n`-multidegree support).
    pub fn elements(self) -> ElemSet {
        self.x_part().union(self.y_part())
    }

    /// Variables in slot (bit) order.
    pub fn iter(self) -> impl Iterator<Item = Var> {
        ElemIter(self.0).map(Var::from_slot)
    }

    /// Variables in the canonical sequence order.
    pub fn sorted_vars(self) -> Vec<Var> {
        let mut vars: Vec<Var> = self.iter().collect();
        vars.sort();
        vars
    }

    /// All subsets, each visited after its own subsets.
    pub fn subsets(self) -> impl Iterator<Item = VarSet> {
        ElemSet(self.0).subsets().map(|s| VarSet(s.0))
    }
}

impl FromIterator<Var> for VarSet {
    fn from_iter<I: IntoIterator<Item = Var>>(iter: I) -> Self {
        iter.into_iter().fold(VarSet::EMPTY, VarSet::with)
    }
}

impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        self.sorted_vars().cmp(&other.sorted_vars())
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prints the monomial, e.g. `x1y2y6`; the empty set prints as `1`.
impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for v in self.sorted_vars() {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl Serialize for VarSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.sorted_vars())
    }
}

/// Parses shorthand like `"126"` into `{1,2,6}` (single-digit elements only).
pub fn digits(s: &str) -> ElemSet {
    s.chars().map(|c| c.to_digit(10).expect("digit")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lex_order_matches_sequences() {
        let mut sets = vec![digits("13"), digits("123"), digits("2"), digits(""), digits("12")];
        sets.sort();
        assert_eq!(
            sets,
            vec![digits(""), digits("12"), digits("123"), digits("13"), digits("2")]
        );
    }

    #[test]
    fn subsets_visits_each_once() {
        let g = digits("1357");
        let all: Vec<_> = g.subsets().collect();
        assert_eq!(all.len(), 16);
        assert!(all.iter().all(|s| s.is_subset(g)));
        let uniq: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(uniq.len(), 16);
    }

    #[test]
    fn monomial_display_orders_x_before_y() {
        let m = VarSet::from_parts(digits("1"), digits("26"));
        assert_eq!(m.to_string(), "x1y2y6");
        let with_zero = VarSet::from_parts(digits("02"), digits("0"));
        assert_eq!(with_zero.to_string(), "x2x0y0");
    }

    proptest! {
        #[test]
        fn elemset_order_agrees_with_vec_order(a in 0u64..(1 << 12), b in 0u64..(1 << 12)) {
            let (x, y) = (ElemSet::from_bits(a), ElemSet::from_bits(b));
            prop_assert_eq!(x.cmp(&y), x.to_vec().cmp(&y.to_vec()));
        }
    }
}
