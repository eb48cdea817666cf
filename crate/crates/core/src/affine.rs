//! Affine subspaces: the matroid triple `(M_hom, M, M')`, the Las Vergnas
//! polynomial of the morphism `M -> M'`, and affine initial ideals.
//!
//! The homogenizing element is labelled 0. The space `A x = b` is
//! homogenized as `(A | -b) (x, x_0) = 0`.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::activities::{h_polynomial, join_signed, shifted_power, BivarPoly, UniPoly};
use crate::error::{Error, Result};
use crate::ideal::{initial_ideal, sweep_orders, InitialIdealCensus};
use crate::linalg::{Rat, RatMatrix};
use crate::matroid::Matroid;
use crate::order::LinearOrder;
use crate::sets::{ElemSet, VarSet};
use crate::simplicial::{primary_decomposition, SquarefreeMonomialIdeal};

/// `(M_hom, M, M')` with `M = M_hom \ 0` and `M' = M_hom / 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatroidTriple {
    hom: Matroid,
    m: Matroid,
    mprime: Matroid,
}

/// Builds the triple of `A x = b`.
pub fn matroid_triple(a: &RatMatrix, b: &[Rat]) -> Result<MatroidTriple> {
    if b.len() != a.rows() {
        return Err(Error::Parse(format!(
            "right-hand side has {} entries but the matrix has {} rows",
            b.len(),
            a.rows()
        )));
    }
    if a.with_column(b).rank() > a.rank() {
        return Err(Error::InconsistentSystem);
    }
    let neg_b: Vec<Rat> = b.iter().map(|v| -v).collect();
    let augmented = RatMatrix::zeros(a.rows(), 0).with_column(&neg_b);
    let mut full = augmented;
    for c in 0..a.cols() {
        let col: Vec<Rat> = (0..a.rows()).map(|r| a.get(r, c).clone()).collect();
        full = full.with_column(&col);
    }
    let labels: Vec<u32> = (0..=a.cols() as u32).collect();
    MatroidTriple::from_hom(Matroid::from_matrix_labeled(&full, &labels)?)
}

impl MatroidTriple {
    /// The triple of a matroid on `0..=n`.
    pub fn from_hom(hom: Matroid) -> Result<Self> {
        if !hom.ground().contains(0) {
            return Err(Error::Parse("homogenized matroid must contain element 0".into()));
        }
        if hom.size() < 2 {
            return Err(Error::EmptyGroundSet);
        }
        let zero = ElemSet::singleton(0);
        let t = MatroidTriple {
            m: hom.delete(zero),
            mprime: hom.contract(zero),
            hom,
        };
        t.check_morphism()?;
        Ok(t)
    }

    /// Every flat of `M'` must be a flat of `M`.
    pub fn check_morphism(&self) -> Result<()> {
        match self.mprime.flats().iter().find(|&&f| !self.m.is_flat(f)) {
            Some(&f) => Err(Error::NotAMorphism(f)),
            None => Ok(()),
        }
    }

    pub fn hom(&self) -> &Matroid {
        &self.hom
    }

    pub fn m(&self) -> &Matroid {
        &self.m
    }

    pub fn mprime(&self) -> &Matroid {
        &self.mprime
    }

    /// The ground set `1..=n` of `M` and `M'`.
    pub fn ground(&self) -> ElemSet {
        self.m.ground()
    }

    /// `rcd(S) = (r - r') - (r(S) - r'(S))`.
    pub fn rcd(&self, s: ElemSet) -> usize {
        (self.m.rank() - self.mprime.rank()) - (self.m.rank_of(s) - self.mprime.rank_of(s))
    }
}

/// Integer polynomial in `x, y, z`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TrivarPoly {
    terms: BTreeMap<(u32, u32, u32), i64>,
}

impl TrivarPoly {
    pub fn add_term(&mut self, i: u32, j: u32, k: u32, c: i64) {
        let slot = self.terms.entry((i, j, k)).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&(i, j, k));
        }
    }

    pub fn coeff(&self, i: u32, j: u32, k: u32) -> i64 {
        self.terms.get(&(i, j, k)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32, u32), i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn eval(&self, x: i64, y: i64, z: i64) -> i64 {
        self.terms
            .iter()
            .map(|(&(i, j, k), &c)| c * x.pow(i) * y.pow(j) * z.pow(k))
            .sum()
    }

    /// `T(x, 1, 0)`.
    pub fn at_y_one_z_zero(&self) -> UniPoly {
        let mut coeffs = Vec::new();
        for (&(i, _, k), &c) in &self.terms {
            if k != 0 {
                continue;
            }
            let i = i as usize;
            if coeffs.len() <= i {
                coeffs.resize(i + 1, 0);
            }
            coeffs[i] += c;
        }
        UniPoly::new(coeffs)
    }

    /// The `z^0` part as a polynomial in `x, y`.
    pub fn z_free_part(&self) -> BivarPoly {
        BivarPoly::from_terms(
            self.terms()
                .filter(|((_, _, k), _)| *k == 0)
                .map(|((i, j, _), c)| ((i, j), c)),
        )
    }
}

impl fmt::Display for TrivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<_> = self.terms().collect();
        keys.sort_by_key(|&((i, j, k), _)| std::cmp::Reverse((i + j + k, i, j)));
        let parts = keys.into_iter().map(|((i, j, k), c)| {
            let mut mono = String::new();
            for (v, e) in [("x", i), ("y", j), ("z", k)] {
                match e {
                    0 => {}
                    1 => mono.push_str(v),
                    _ => mono.push_str(&format!("{v}^{e}")),
                }
            }
            (c, mono)
        });
        f.write_str(&join_signed(parts))
    }
}

impl fmt::Debug for TrivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for TrivarPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            x: u32,
            y: u32,
            z: u32,
            c: i64,
        }
        let terms: Vec<Term> = self.terms().map(|((x, y, z), c)| Term { x, y, z, c }).collect();
        let mut st = s.serialize_struct("TrivarPoly", 1)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// `sum_S (x-1)^{r' - r'(S)} (y-1)^{|S| - r(S)} z^{rcd(S)}` over all subsets.
pub fn lasvergnas_tutte(t: &MatroidTriple) -> Result<TrivarPoly> {
    t.check_morphism()?;
    let (m, mp) = (t.m(), t.mprime());
    let mut counts: BTreeMap<(u32, u32, u32), i64> = BTreeMap::new();
    for s in t.ground().subsets() {
        let key = (
            (mp.rank() - mp.rank_of(s)) as u32,
            (s.len() - m.rank_of(s)) as u32,
            t.rcd(s) as u32,
        );
        *counts.entry(key).or_insert(0) += 1;
    }
    let mut out = TrivarPoly::default();
    for ((p, q, k), mult) in counts {
        for (i, ci) in shifted_power(p).into_iter().enumerate() {
            for (j, cj) in shifted_power(q).iter().enumerate() {
                out.add_term(i as u32, j as u32, k, mult * ci * cj);
            }
        }
    }
    Ok(out)
}

/// External activity of an independent set `S` of `m`: elements `i` outside
/// `S` that close a circuit in `S + i` of which they are the smallest.
pub fn external_activity_of_independent(m: &Matroid, s: ElemSet, order: &LinearOrder) -> ElemSet {
    m.ground()
        .difference(s)
        .iter()
        .filter(|&i| {
            let si = s.with(i);
            if m.is_independent(si) {
                return false;
            }
            let circuit: ElemSet = si.iter().filter(|&y| m.is_independent(si.without(y))).collect();
            order.min_of(circuit) == Some(i)
        })
        .collect()
}

/// Internal activity of a spanning set `S` of `m`: elements `i` of `S`
/// with `S - i` not spanning that are the smallest in their cocircuit
/// `{y in (E - S) + i : (S - i) + y spans}`.
pub fn internal_activity_of_spanning(m: &Matroid, s: ElemSet, order: &LinearOrder) -> ElemSet {
    s.iter()
        .filter(|&i| {
            let rest = s.without(i);
            if m.is_spanning(rest) {
                return false;
            }
            let cocircuit: ElemSet = m
                .ground()
                .difference(s)
                .with(i)
                .iter()
                .filter(|&y| m.is_spanning(rest.with(y)))
                .collect();
            order.min_of(cocircuit) == Some(i)
        })
        .collect()
}

/// `sum x^{|IA'(S)|} y^{|EA(S)|} z^{rcd(S)}` over the sets `S` independent in
/// `M` and spanning in `M'`.
pub fn lasvergnas_via_activities(t: &MatroidTriple, order: &LinearOrder) -> Result<TrivarPoly> {
    t.check_morphism()?;
    let order = order.restrict(t.ground());
    let mut out = TrivarPoly::default();
    for s in t.ground().subsets() {
        if !t.m().is_independent(s) || !t.mprime().is_spanning(s) {
            continue;
        }
        let ia = internal_activity_of_spanning(t.mprime(), s, &order).len();
        let ea = external_activity_of_independent(t.m(), s, &order).len();
        out.add_term(ia as u32, ea as u32, t.rcd(s) as u32, 1);
    }
    Ok(out)
}

/// Closed-form bidegrees of the affine initial ideals: `top = t^r h_M(s/t)`
/// for orders with 0 last, `bottom = t^r T(s/t, 1, 0)` for orders with 0
/// first.
pub fn affine_bidegrees(t: &MatroidTriple) -> Result<(BivarPoly, BivarPoly)> {
    let r = t.m().rank() as u32;
    let top = h_polynomial(t.m()).homogenize(r);
    let bottom = lasvergnas_tutte(t)?.at_y_one_z_zero().homogenize(r);
    Ok((top, bottom))
}

/// Initial ideal of the closure of the affine space under an order on
/// `0..=n`. For each cocircuit `D` of `M`, let `D'` be `D + 0` if that is a
/// cocircuit of `M_hom` and `D` otherwise, and `m = min D'`; the generator is
/// `y_D` if `m = 0` and `x_m y_{D - m}` otherwise.
pub fn initial_ideal_affine(t: &MatroidTriple, order: &LinearOrder) -> SquarefreeMonomialIdeal {
    let hom_cocircuits = t.hom().cocircuits();
    let gens = t.m().cocircuits().iter().map(|&d| {
        let d0 = d.with(0);
        let dprime = if hom_cocircuits.binary_search(&d0).is_ok() {
            d0
        } else {
            d
        };
        match order.min_of(dprime).expect("cocircuits are non-empty") {
            0 => VarSet::from_parts(ElemSet::EMPTY, d),
            lo => VarSet::from_parts(ElemSet::singleton(lo), d.without(lo)),
        }
    });
    SquarefreeMonomialIdeal::new(VarSet::doubled(t.ground()), gens)
}

/// Prime components of an ideal of `M_hom` that avoid `x_0` and `y_0`, which
/// are the components left after setting `x_0 = y_0 = 1`.
pub fn dehomogenized_components(hom_ideal: &SquarefreeMonomialIdeal) -> Vec<VarSet> {
    let zero = VarSet::doubled(ElemSet::singleton(0));
    primary_decomposition(hom_ideal)
        .into_iter()
        .filter(|c| c.is_disjoint(zero))
        .collect()
}

/// Distinct initial ideals of the affine space and of its homogenization.
#[derive(Clone, Debug, Serialize)]
pub struct AffineCensus {
    pub affine: InitialIdealCensus,
    pub hom: InitialIdealCensus,
}

/// Sweeps all orders on `0..=n`.
pub fn enumerate_affine_initial_ideals(t: &MatroidTriple, cutoff: usize) -> Result<AffineCensus> {
    let n = t.ground().len();
    if n > cutoff {
        return Err(Error::CutoffExceeded { size: n, cutoff });
    }
    let bound = crate::polytope::vertex_bound(t.hom());
    Ok(AffineCensus {
        affine: InitialIdealCensus {
            ideals: sweep_orders(t.hom().ground(), |o| initial_ideal_affine(t, o)),
            bound,
        },
        hom: InitialIdealCensus {
            ideals: sweep_orders(t.hom().ground(), |o| initial_ideal(t.hom(), o)),
            bound,
        },
    })
}
