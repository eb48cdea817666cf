//! Fundamental circuits and cocircuits, internal and external activity,
//! Crapo intervals, and the Tutte polynomial.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::order::LinearOrder;
use crate::sets::ElemSet;

/// `C(B, x) = {y : (B + x) - y is a basis}` for `x` outside the basis `B`.
pub fn fundamental_circuit(m: &Matroid, b: ElemSet, x: u32) -> Result<ElemSet> {
    if !m.is_basis(b) {
        return Err(Error::NotABasis(b));
    }
    if b.contains(x) || !m.ground().contains(x) {
        return Err(Error::ElementMembership {
            element: x,
            basis: b,
            expectation: "must be a ground element outside",
        });
    }
    Ok(circuit_unchecked(m, b, x))
}

/// `D(B, y) = {x : (B - y) + x is a basis}` for `y` in the basis `B`.
pub fn fundamental_cocircuit(m: &Matroid, b: ElemSet, y: u32) -> Result<ElemSet> {
    if !m.is_basis(b) {
        return Err(Error::NotABasis(b));
    }
    if !b.contains(y) {
        return Err(Error::ElementMembership {
            element: y,
            basis: b,
            expectation: "must belong to",
        });
    }
    Ok(cocircuit_unchecked(m, b, y))
}

fn circuit_unchecked(m: &Matroid, b: ElemSet, x: u32) -> ElemSet {
    let bx = b.with(x);
    bx.iter().filter(|&y| m.is_basis(bx.without(y))).collect()
}

fn cocircuit_unchecked(m: &Matroid, b: ElemSet, y: u32) -> ElemSet {
    let by = b.without(y);
    m.ground()
        .difference(by)
        .iter()
        .filter(|&x| m.is_basis(by.with(x)))
        .collect()
}

/// Activity data of one basis with respect to an order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActivitySplit {
    pub basis: ElemSet,
    pub internally_active: ElemSet,
    pub internally_passive: ElemSet,
    pub externally_active: ElemSet,
    pub externally_passive: ElemSet,
    pub order: LinearOrder,
}

impl ActivitySplit {
    /// Bottom of the Crapo interval, `B - IA(B)`.
    pub fn interval_bottom(&self) -> ElemSet {
        self.basis.difference(self.internally_active)
    }

    /// Top of the Crapo interval, `B + EA(B)`.
    pub fn interval_top(&self) -> ElemSet {
        self.basis.union(self.externally_active)
    }

    pub fn interval_contains(&self, a: ElemSet) -> bool {
        self.interval_bottom().is_subset(a) && a.is_subset(self.interval_top())
    }
}

pub fn activity_split(m: &Matroid, b: ElemSet, order: &LinearOrder) -> Result<ActivitySplit> {
    if !m.is_basis(b) {
        return Err(Error::NotABasis(b));
    }
    Ok(ActivityTable::for_basis(m, b).split(order))
}

/// Fundamental circuits and cocircuits of every basis, which do not depend
/// on the order. Order sweeps build this once and call
/// [`ActivityTable::split`] per order.
#[derive(Clone, Debug)]
pub struct ActivityTable {
    ground: ElemSet,
    rows: Vec<BasisRow>,
}

#[derive(Clone, Debug)]
struct BasisRow {
    basis: ElemSet,
    /// `(x, C(B, x))` for `x` outside the basis.
    circuits: Vec<(u32, ElemSet)>,
    /// `(y, D(B, y))` for `y` in the basis.
    cocircuits: Vec<(u32, ElemSet)>,
}

impl BasisRow {
    fn new(m: &Matroid, b: ElemSet) -> Self {
        BasisRow {
            basis: b,
            circuits: m
                .ground()
                .difference(b)
                .iter()
                .map(|x| (x, circuit_unchecked(m, b, x)))
                .collect(),
            cocircuits: b.iter().map(|y| (y, cocircuit_unchecked(m, b, y))).collect(),
        }
    }

    fn split(&self, ground: ElemSet, order: &LinearOrder) -> ActivitySplit {
        let active = |pairs: &[(u32, ElemSet)]| -> ElemSet {
            pairs
                .iter()
                .filter(|(e, c)| order.min_of(*c) == Some(*e))
                .map(|(e, _)| *e)
                .collect()
        };
        let ia = active(&self.cocircuits);
        let ea = active(&self.circuits);
        ActivitySplit {
            basis: self.basis,
            internally_active: ia,
            internally_passive: self.basis.difference(ia),
            externally_active: ea,
            externally_passive: ground.difference(self.basis).difference(ea),
            order: order.clone(),
        }
    }
}

impl ActivityTable {
    pub fn new(m: &Matroid) -> Self {
        ActivityTable {
            ground: m.ground(),
            rows: m.bases().iter().map(|&b| BasisRow::new(m, b)).collect(),
        }
    }

    fn for_basis(m: &Matroid, b: ElemSet) -> Self {
        ActivityTable {
            ground: m.ground(),
            rows: vec![BasisRow::new(m, b)],
        }
    }

    /// Splits of all bases, in basis order.
    pub fn splits(&self, order: &LinearOrder) -> Vec<ActivitySplit> {
        self.rows.iter().map(|r| r.split(self.ground, order)).collect()
    }

    fn split(&self, order: &LinearOrder) -> ActivitySplit {
        self.rows[0].split(self.ground, order)
    }

    /// `(|IA(B)|, |EA(B)|)` for every basis, without building full splits.
    pub fn activity_counts<'a>(&'a self, order: &'a LinearOrder) -> impl Iterator<Item = (usize, usize)> + 'a {
        self.rows.iter().map(move |r| {
            let count = |pairs: &[(u32, ElemSet)]| pairs.iter().filter(|(e, c)| order.min_of(*c) == Some(*e)).count();
            (count(&r.cocircuits), count(&r.circuits))
        })
    }
}

/// Crapo's decomposition `A = (B + ext) - int` with `ext` in `EA(B)` and
/// `int` in `IA(B)`. Every subset of the ground set lies in exactly one
/// interval `[B - IA(B), B + EA(B)]`; the first match is returned.
pub fn crapo_decompose(m: &Matroid, order: &LinearOrder, a: ElemSet) -> Option<(ElemSet, ElemSet, ElemSet)> {
    crapo_decompose_with(&ActivityTable::new(m).splits(order), a)
}

/// [`crapo_decompose`] against precomputed splits.
pub fn crapo_decompose_with(splits: &[ActivitySplit], a: ElemSet) -> Option<(ElemSet, ElemSet, ElemSet)> {
    splits
        .iter()
        .find(|s| s.interval_contains(a))
        .map(|s| (s.basis, a.difference(s.basis), s.basis.difference(a)))
}

/// Integer polynomial in two variables, stored sparsely.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), i64>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), i64)>) -> Self {
        let mut p = BivarPoly::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: i64) {
        let slot = self.terms.entry((i, j)).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> i64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Non-zero terms sorted by `(i, j)`.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.terms.iter().map(|(&(i, j), &c)| c * x.pow(i) * y.pow(j)).sum()
    }

    /// `p(x, 1)` as a univariate polynomial.
    pub fn at_y_one(&self) -> UniPoly {
        let mut coeffs = Vec::new();
        for (&(i, _), &c) in &self.terms {
            let i = i as usize;
            if coeffs.len() <= i {
                coeffs.resize(i + 1, 0);
            }
            coeffs[i] += c;
        }
        UniPoly::new(coeffs)
    }

    /// `p(y, x)`.
    pub fn swapped(&self) -> BivarPoly {
        BivarPoly::from_terms(self.terms().map(|((i, j), c)| ((j, i), c)))
    }

    /// Renders with the given variable names, highest total degree first.
    pub fn display_in(&self, x: &str, y: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut keys: Vec<_> = self.terms().collect();
        keys.sort_by_key(|&((i, j), _)| (std::cmp::Reverse(i + j), std::cmp::Reverse(i)));
        let monomials = keys.into_iter().map(|((i, j), c)| {
            let mut mono = String::new();
            for (v, e) in [(x, i), (y, j)] {
                match e {
                    0 => {}
                    1 => mono.push_str(v),
                    _ => mono.push_str(&format!("{v}^{e}")),
                }
            }
            (c, mono)
        });
        join_signed(monomials)
    }
}

/// Joins `(coefficient, monomial)` pairs as `a + b - c`.
pub(crate) fn join_signed(terms: impl IntoIterator<Item = (i64, String)>) -> String {
    let mut out = String::new();
    for (k, (c, mono)) in terms.into_iter().enumerate() {
        let sign = if c < 0 { "-" } else { "+" };
        if k == 0 {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let a = c.abs();
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else if a == 1 {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{a}{mono}"));
        }
    }
    out
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x", "y"))
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize)]
struct BivarTerm {
    x: u32,
    y: u32,
    c: i64,
}

impl Serialize for BivarPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<BivarTerm> = self.terms().map(|((x, y), c)| BivarTerm { x, y, c }).collect();
        let mut st = s.serialize_struct("BivarPoly", 1)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// Integer polynomial in one variable; `coeffs[i]` multiplies `x^i`.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct UniPoly {
    coeffs: Vec<i64>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Coefficients from `x^0` upwards.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    /// `t^r p(s/t)` as a polynomial in `(s, t)`; requires `deg p <= r`.
    pub fn homogenize(&self, r: u32) -> BivarPoly {
        assert!(self.coeffs.len() <= r as usize + 1, "degree exceeds r");
        BivarPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| ((i as u32, r - i as u32), c)),
        )
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let mono = match i {
                    0 => String::new(),
                    1 => "x".into(),
                    _ => format!("x^{i}"),
                };
                (c, mono)
            });
        f.write_str(&join_signed(terms))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn binomial(n: u32, k: u32) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Coefficients of `(x - 1)^a`, lowest degree first.
pub(crate) fn shifted_power(a: u32) -> Vec<i64> {
    (0..=a)
        .map(|i| {
            let c = binomial(a, i);
            if (a - i).is_multiple_of(2) {
                c
            } else {
                -c
            }
        })
        .collect()
}

/// Tutte polynomial by the corank-nullity sum over all subsets.
pub fn tutte(m: &Matroid) -> BivarPoly {
    let r = m.rank();
    let mut counts: BTreeMap<(u32, u32), i64> = BTreeMap::new();
    for a in m.ground().subsets() {
        let ra = m.rank_of(a);
        *counts.entry(((r - ra) as u32, (a.len() - ra) as u32)).or_insert(0) += 1;
    }
    let mut t = BivarPoly::zero();
    for ((p, q), mult) in counts {
        for (i, ci) in shifted_power(p).into_iter().enumerate() {
            for (j, cj) in shifted_power(q).iter().enumerate() {
                t.add_term(i as u32, j as u32, mult * ci * cj);
            }
        }
    }
    t
}

/// Tutte polynomial as `sum_B x^|IA(B)| y^|EA(B)|`.
pub fn tutte_via_activities(m: &Matroid, order: &LinearOrder) -> BivarPoly {
    tutte_from_table(&ActivityTable::new(m), order)
}

pub fn tutte_from_table(table: &ActivityTable, order: &LinearOrder) -> BivarPoly {
    let mut t = BivarPoly::zero();
    for (ia, ea) in table.activity_counts(order) {
        t.add_term(ia as u32, ea as u32, 1);
    }
    t
}

/// `f_i` = number of independent sets of size `i`, for `i = 0..=r`.
pub fn f_vector(m: &Matroid) -> Vec<u64> {
    let mut f = vec![0u64; m.rank() + 1];
    for s in m.ground().subsets() {
        if m.is_independent(s) {
            f[s.len()] += 1;
        }
    }
    f
}

/// `h(x) = sum_i f_i (x - 1)^(r - i)`.
pub fn h_polynomial(m: &Matroid) -> UniPoly {
    let r = m.rank();
    let mut coeffs = vec![0i64; r + 1];
    for (i, &fi) in f_vector(m).iter().enumerate() {
        for (k, c) in shifted_power((r - i) as u32).into_iter().enumerate() {
            coeffs[k] += fi as i64 * c;
        }
    }
    UniPoly::new(coeffs)
}
