//! Cocircuit forms, their homogenizations in `x_e, y_e`, term orders,
//! initial ideals and degree computations.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::activities::{ActivityTable, BivarPoly};
use crate::error::{Error, Result};
use crate::linalg::{Rat, RatMatrix};
use crate::matroid::Matroid;
use crate::order::LinearOrder;
use crate::sets::{ElemSet, Var, VarSet, MAX_ELEMENT};
use crate::simplicial::{primary_decomposition, SquarefreeMonomialIdeal};

const SLOTS: usize = 2 * (MAX_ELEMENT as usize + 1);

/// Exponent vector indexed by [`Var::slot`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial([u8; SLOTS]);

/// Slots in the sequence `x_1, .., x_31, y_1, .., y_31, x_0, y_0`.
fn sequence_slots() -> &'static [usize; SLOTS] {
    static SEQ: OnceLock<[usize; SLOTS]> = OnceLock::new();
    SEQ.get_or_init(|| {
        let mut vars: Vec<Var> = (0..SLOTS as u32).map(Var::from_slot).collect();
        vars.sort();
        let mut out = [0usize; SLOTS];
        for (k, v) in vars.into_iter().enumerate() {
            out[k] = v.slot() as usize;
        }
        out
    })
}

impl Monomial {
    pub const ONE: Monomial = Monomial([0; SLOTS]);

    pub fn from_varset(s: VarSet) -> Self {
        let mut m = Monomial::ONE;
        for v in s.iter() {
            m.0[v.slot() as usize] = 1;
        }
        m
    }

    pub fn exponent(&self, v: Var) -> u8 {
        self.0[v.slot() as usize]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(&other.0) {
            *a += b;
        }
        out
    }

    /// `self / other`; requires `other` to divide `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(&other.0) {
            *a -= b;
        }
        out
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(&other.0) {
            *a = (*a).max(*b);
        }
        out
    }

    /// The variable set if the monomial is squarefree.
    pub fn to_varset(&self) -> Option<VarSet> {
        let mut s = VarSet::EMPTY;
        for (slot, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => s = s.with(Var::from_slot(slot as u32)),
                _ => return None,
            }
        }
        Some(s)
    }

    /// `(variable, exponent)` pairs in sequence order.
    pub fn factors(&self) -> impl Iterator<Item = (Var, u8)> + '_ {
        sequence_slots()
            .iter()
            .filter(|&&s| self.0[s] > 0)
            .map(|&s| (Var::from_slot(s as u32), self.0[s]))
    }

    /// Pure lexicographic comparison along the variable sequence.
    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        for &s in sequence_slots() {
            match self.0[s].cmp(&other.0[s]) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (v, e) in self.factors() {
            any = true;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if !any {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A polynomial in `x_e, y_e` (`e` in `vars`) with rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: ElemSet,
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero(vars: ElemSet) -> Self {
        Polynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(vars: ElemSet, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Polynomial::zero(vars);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: &Rat) {
        let slot = self.terms.entry(m).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn vars(&self) -> ElemSet {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// `self - c * m * other`.
    fn sub_scaled(&mut self, c: &Rat, m: &Monomial, other: &Polynomial) {
        for (t, d) in &other.terms {
            self.add_term(t.mul(m), &-(c * d));
        }
    }

    /// Largest term under `ord`.
    pub fn leading(&self, ord: &TermOrder) -> Option<(Monomial, Rat)> {
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(a.0, b.0))
            .map(|(m, c)| (*m, c.clone()))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{m}")?;
            } else if *m == Monomial::ONE {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize)]
struct PolyTerm {
    x: Vec<u8>,
    y: Vec<u8>,
    c: Rat,
}

/// Exponent lists follow the variables in increasing element order.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let elems = self.vars.to_vec();
        let terms: Vec<PolyTerm> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| PolyTerm {
                x: elems.iter().map(|&e| m.exponent(Var::X(e))).collect(),
                y: elems.iter().map(|&e| m.exponent(Var::Y(e))).collect(),
                c: c.clone(),
            })
            .collect();
        let mut st = s.serialize_struct("Polynomial", 1)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// An affine-linear form `sum c_e x_e + constant`.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearForm {
    vars: ElemSet,
    coeffs: BTreeMap<u32, Rat>,
    constant: Rat,
}

impl LinearForm {
    pub fn new(vars: ElemSet, coeffs: BTreeMap<u32, Rat>, constant: Rat) -> Self {
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        LinearForm { vars, coeffs, constant }
    }

    pub fn support(&self) -> ElemSet {
        self.coeffs.keys().collect()
    }

    pub fn coeff(&self, e: u32) -> Rat {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant(&self) -> &Rat {
        &self.constant
    }

    /// Rescales so that the order-smallest support element has coefficient 1.
    pub fn normalized(&self, order: &LinearOrder) -> LinearForm {
        let Some(lead) = order.min_of(self.support()) else {
            return self.clone();
        };
        let inv = self.coeffs[&lead].recip();
        LinearForm {
            vars: self.vars,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * &inv)).collect(),
            constant: &self.constant * &inv,
        }
    }

    /// `sum_d c_d x_d y_{D - d} + constant * y_D` with `D` the support.
    pub fn homogenize(&self) -> Polynomial {
        let d = self.support();
        let mut p = Polynomial::zero(self.vars);
        for (&e, c) in &self.coeffs {
            p.add_term(
                Monomial::from_varset(VarSet::from_parts(ElemSet::singleton(e), d.without(e))),
                c,
            );
        }
        if !self.constant.is_zero() {
            p.add_term(
                Monomial::from_varset(VarSet::from_parts(ElemSet::EMPTY, d)),
                &self.constant,
            );
        }
        p
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut put = |f: &mut fmt::Formatter<'_>, c: &Rat, name: String| -> fmt::Result {
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            match (a.is_one(), name.is_empty()) {
                (_, true) => write!(f, "{a}"),
                (true, false) => f.write_str(&name),
                (false, false) => write!(f, "{a}*{name}"),
            }
        };
        for (e, c) in &self.coeffs {
            put(f, c, format!("x{e}"))?;
        }
        if !self.constant.is_zero() {
            put(f, &self.constant, String::new())?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for LinearForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("LinearForm", 3)?;
        st.serialize_field("support", &self.support())?;
        let coeffs: Vec<&Rat> = self.coeffs.values().collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.serialize_field("constant", &self.constant)?;
        st.end()
    }
}

/// One form per cocircuit of the column matroid of `a`, supported exactly
/// on the cocircuit and normalized at its smallest element. Columns are
/// labelled `1..=cols`.
pub fn cocircuit_forms(a: &RatMatrix) -> Result<Vec<LinearForm>> {
    let zeros = vec![Rat::zero(); a.rows()];
    affine_cocircuit_forms(a, &zeros)
}

/// Cocircuit forms of the affine space `A x = b`: each form is a
/// combination `lambda (A x - b)` whose linear part is supported on a
/// cocircuit of the column matroid of `A`.
pub fn affine_cocircuit_forms(a: &RatMatrix, b: &[Rat]) -> Result<Vec<LinearForm>> {
    let labels: Vec<u32> = (1..=a.cols() as u32).collect();
    forms_labeled(a, b, &labels)
}

/// [`affine_cocircuit_forms`] with explicit column labels.
pub fn forms_labeled(a: &RatMatrix, b: &[Rat], labels: &[u32]) -> Result<Vec<LinearForm>> {
    assert_eq!(b.len(), a.rows(), "one right-hand side per row");
    let n = a.cols();
    let rref = a.with_column(b).rref();
    if rref.pivots.contains(&n) {
        return Err(Error::InconsistentSystem);
    }
    if rref.rank < a.rows() {
        return Err(Error::RankDeficient);
    }
    let r = rref.rank;
    let m = Matroid::from_matrix_labeled(a, labels)?;
    let vars: ElemSet = labels.iter().collect();
    let column_of: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let order = LinearOrder::natural(vars);
    let mut forms = Vec::new();
    for &d in m.cocircuits() {
        let hyper: Vec<usize> = vars.difference(d).iter().map(|e| column_of[&e]).collect();
        // lambda spans the left kernel of R restricted to the hyperplane.
        let sub = RatMatrix::from_rows(
            hyper
                .iter()
                .map(|&c| (0..r).map(|row| rref.matrix.get(row, c).clone()).collect())
                .collect(),
        )?;
        let lambda = if hyper.is_empty() {
            let mut v = vec![Rat::zero(); r];
            v[0] = Rat::one();
            v
        } else {
            let k = sub.kernel_basis();
            debug_assert_eq!(k.rows(), 1, "hyperplane has corank one");
            k.row(0).to_vec()
        };
        let combine =
            |col: usize| -> Rat { (0..r).fold(Rat::zero(), |acc, row| acc + &lambda[row] * rref.matrix.get(row, col)) };
        let coeffs: BTreeMap<u32, Rat> = labels.iter().map(|&e| (e, combine(column_of[&e]))).collect();
        let form = LinearForm::new(vars, coeffs, -combine(n));
        debug_assert_eq!(form.support(), d);
        forms.push(form.normalized(&order));
    }
    Ok(forms)
}

/// Weight-then-lexicographic term order. Missing weights are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    weights: Vec<Rat>,
}

impl TermOrder {
    pub fn from_weights(weights: impl IntoIterator<Item = (Var, Rat)>) -> Self {
        let mut w = vec![Rat::zero(); SLOTS];
        for (v, r) in weights {
            w[v.slot() as usize] = r;
        }
        TermOrder { weights: w }
    }

    /// Weights `w(x_i) = K - pos(i)` and `w(y_i) = 0`, where `pos` is the
    /// 0-based position and `K` is the position of 0 if the order contains
    /// it, otherwise the length. Elements before 0 get `x_i > y_i`,
    /// elements after it `x_i < y_i`.
    pub fn from_element_order(order: &LinearOrder) -> Self {
        let ground = order.ground();
        let k = if ground.contains(0) {
            order.position(0)
        } else {
            order.len()
        } as i64;
        TermOrder::from_weights(
            order
                .elements()
                .iter()
                .map(|&e| (Var::X(e), Rat::from_int(k - order.position(e) as i64))),
        )
    }

    pub fn weight(&self, v: Var) -> &Rat {
        &self.weights[v.slot() as usize]
    }

    pub fn weight_of(&self, m: &Monomial) -> Rat {
        m.0.iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(Rat::zero(), |acc, (s, &e)| {
                acc + &self.weights[s] * &Rat::from_int(e as i64)
            })
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.weight_of(a).cmp(&self.weight_of(b)).then_with(|| a.lex_cmp(b))
    }

    /// The element order induced on `ground`: `i < j` iff
    /// `w(x_i) - w(y_i) > w(x_j) - w(y_j)`, ties broken by the variable
    /// sequence (smaller labels first, 0 last).
    pub fn induced_order(&self, ground: ElemSet) -> LinearOrder {
        let mut elems = ground.to_vec();
        let key = |e: u32| self.weight(Var::X(e)) - self.weight(Var::Y(e));
        elems.sort_by(|&a, &b| key(b).cmp(&key(a)).then_with(|| Var::X(a).cmp(&Var::X(b))));
        LinearOrder::new(elems).expect("distinct elements")
    }
}

/// Largest term of `f`.
pub fn leading_term(f: &Polynomial, ord: &TermOrder) -> Result<Monomial> {
    f.leading(ord).map(|(m, _)| m).ok_or(Error::ZeroPolynomial)
}

/// Initial ideal of the closure of the linear space with matroid `m`:
/// generators `x_{min D} y_{D - min D}` over the cocircuits `D`.
pub fn initial_ideal(m: &Matroid, order: &LinearOrder) -> SquarefreeMonomialIdeal {
    let gens = m.cocircuits().iter().map(|&d| {
        let lo = order.min_of(d).expect("cocircuits are non-empty");
        VarSet::from_parts(ElemSet::singleton(lo), d.without(lo))
    });
    SquarefreeMonomialIdeal::new(VarSet::doubled(m.ground()), gens)
}

/// The ideal of leading terms of `forms`, which must be squarefree.
pub fn initial_ideal_from_polys(
    vertices: VarSet,
    polys: &[Polynomial],
    ord: &TermOrder,
) -> Result<SquarefreeMonomialIdeal> {
    let mut gens = Vec::new();
    for p in polys {
        let lt = leading_term(p, ord)?;
        gens.push(lt.to_varset().expect("homogenized forms are squarefree"));
    }
    Ok(SquarefreeMonomialIdeal::new(vertices, gens))
}

/// Components `<x_e : e in IA(B), y_e : e in IP(B)>`, one per basis.
pub fn primary_decomposition_via_activities(m: &Matroid, order: &LinearOrder) -> Vec<VarSet> {
    let mut comps: Vec<VarSet> = ActivityTable::new(m)
        .splits(order)
        .into_iter()
        .map(|s| VarSet::from_parts(s.internally_active, s.internally_passive))
        .collect();
    comps.sort();
    comps
}

/// Distinct initial ideals found by an order sweep, each with the
/// lexicographically first order producing it.
#[derive(Clone, Debug, Serialize)]
pub struct InitialIdealCensus {
    pub ideals: Vec<(SquarefreeMonomialIdeal, LinearOrder)>,
    pub bound: u64,
}

impl InitialIdealCensus {
    pub fn count(&self) -> usize {
        self.ideals.len()
    }
}

/// Runs `f` over every order on `ground` (in parallel) and collects the
/// distinct results with their smallest witnessing order.
pub fn sweep_orders<F>(ground: ElemSet, f: F) -> Vec<(SquarefreeMonomialIdeal, LinearOrder)>
where
    F: Fn(&LinearOrder) -> SquarefreeMonomialIdeal + Sync,
{
    type Seen = BTreeMap<SquarefreeMonomialIdeal, Vec<u32>>;
    fn insert(mut acc: Seen, ideal: SquarefreeMonomialIdeal, seq: Vec<u32>) -> Seen {
        match acc.get_mut(&ideal) {
            Some(old) if *old <= seq => {}
            Some(old) => *old = seq,
            None => {
                acc.insert(ideal, seq);
            }
        }
        acc
    }
    let seen: Seen = LinearOrder::all(ground)
        .par_bridge()
        .fold(Seen::new, |acc, o| {
            let ideal = f(&o);
            insert(acc, ideal, o.elements().to_vec())
        })
        .reduce(Seen::new, |a, b| b.into_iter().fold(a, |acc, (i, s)| insert(acc, i, s)));
    seen.into_iter()
        .map(|(i, s)| (i, LinearOrder::new(s).expect("valid order")))
        .collect()
}

/// All initial ideals of the closure of a linear space with matroid `m`.
pub fn enumerate_initial_ideals(m: &Matroid, cutoff: usize) -> Result<InitialIdealCensus> {
    if m.size() > cutoff {
        return Err(Error::CutoffExceeded { size: m.size(), cutoff });
    }
    Ok(InitialIdealCensus {
        ideals: sweep_orders(m.ground(), |o| initial_ideal(m, o)),
        bound: crate::polytope::vertex_bound(m),
    })
}

/// Outcome of [`buchberger_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BuchbergerReport {
    /// Every S-polynomial reduces to zero.
    pub s_pairs_reduce: bool,
    /// No term of one generator divides a term of another.
    pub terms_nondividing: bool,
}

impl BuchbergerReport {
    pub fn passed(&self) -> bool {
        self.s_pairs_reduce && self.terms_nondividing
    }
}

/// Remainder of `f` under the division algorithm by `gens`.
pub fn reduce(f: &Polynomial, gens: &[Polynomial], ord: &TermOrder) -> Polynomial {
    let leads: Vec<(Monomial, Rat)> = gens
        .iter()
        .map(|g| g.leading(ord).expect("non-zero generator"))
        .collect();
    let mut p = f.clone();
    let mut rem = Polynomial::zero(f.vars());
    while let Some((lt, lc)) = p.leading(ord) {
        match leads.iter().position(|(m, _)| m.divides(&lt)) {
            Some(k) => {
                let (gm, gc) = &leads[k];
                p.sub_scaled(&(&lc / gc), &lt.div(gm), &gens[k]);
            }
            None => {
                rem.add_term(lt, &lc);
                p.add_term(lt, &-lc);
            }
        }
    }
    rem
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &TermOrder) -> Polynomial {
    let (fm, fc) = f.leading(ord).expect("non-zero");
    let (gm, gc) = g.leading(ord).expect("non-zero");
    let l = fm.lcm(&gm);
    let mut s = Polynomial::zero(f.vars().union(g.vars()));
    s.sub_scaled(&-fc.recip(), &l.div(&fm), f);
    s.sub_scaled(&gc.recip(), &l.div(&gm), g);
    s
}

/// Buchberger's criterion plus the term-divisibility check.
pub fn buchberger_check(gens: &[Polynomial], ord: &TermOrder) -> BuchbergerReport {
    let mut s_pairs_reduce = true;
    'outer: for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if !reduce(&s_polynomial(&gens[i], &gens[j], ord), gens, ord).is_zero() {
                s_pairs_reduce = false;
                break 'outer;
            }
        }
    }
    let terms_nondividing = gens.iter().enumerate().all(|(i, f)| {
        gens.iter()
            .enumerate()
            .all(|(j, g)| i == j || f.terms().all(|(a, _)| g.terms().all(|(b, _)| !a.divides(b))))
    });
    BuchbergerReport {
        s_pairs_reduce,
        terms_nondividing,
    }
}

/// `true` iff `gens` is a reduced Gröbner basis under `ord`, as far as
/// [`buchberger_check`] can tell.
pub fn buchberger_verify(gens: &[Polynomial], ord: &TermOrder) -> bool {
    buchberger_check(gens, ord).passed()
}

/// Formal sum of squarefree monomials `t_S`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Multidegree {
    terms: BTreeMap<ElemSet, i64>,
}

impl Multidegree {
    pub fn add(&mut self, s: ElemSet, c: i64) {
        let slot = self.terms.entry(s).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&s);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (ElemSet, i64)> + '_ {
        self.terms.iter().map(|(&s, &c)| (s, c))
    }

    /// `sum_B t_B` over the bases of `m`.
    pub fn of_bases(m: &Matroid) -> Self {
        let mut md = Multidegree::default();
        for &b in m.bases() {
            md.add(b, 1);
        }
        md
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms()
            .map(|(s, c)| {
                let mono: String = s.iter().map(|e| format!("t{e}")).collect();
                if c == 1 {
                    mono
                } else {
                    format!("{c}{mono}")
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl fmt::Debug for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Multidegree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            #[serde(rename = "S")]
            s: ElemSet,
            c: i64,
        }
        s.collect_seq(self.terms().map(|(s, c)| Term { s, c }))
    }
}

/// Prime components, checked to use one variable per element and to have
/// equal sizes.
fn checked_components(ideal: &SquarefreeMonomialIdeal) -> Result<Vec<VarSet>> {
    let comps = primary_decomposition(ideal);
    for c in &comps {
        if !c.x_part().is_disjoint(c.y_part()) {
            return Err(Error::MixedComponent(format!("{c}")));
        }
    }
    if let (Some(lo), Some(hi)) = (comps.iter().map(|c| c.len()).min(), comps.iter().map(|c| c.len()).max()) {
        if lo != hi {
            return Err(Error::NotEquidimensional(lo, hi));
        }
    }
    Ok(comps)
}

/// Multidegree in `Z^n`: each component contributes `t_S` for its elements.
pub fn multidegree(ideal: &SquarefreeMonomialIdeal) -> Result<Multidegree> {
    let mut md = Multidegree::default();
    for c in checked_components(ideal)? {
        md.add(c.elements(), 1);
    }
    Ok(md)
}

/// Bidegree in `(s, t)`: each component contributes `s^{#x} t^{#y}`.
pub fn bidegree(ideal: &SquarefreeMonomialIdeal) -> Result<BivarPoly> {
    let mut p = BivarPoly::zero();
    for c in checked_components(ideal)? {
        p.add_term(c.x_part().len() as u32, c.y_part().len() as u32, 1);
    }
    Ok(p)
}
