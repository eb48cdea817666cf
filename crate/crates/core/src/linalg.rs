//! Exact rational linear algebra.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number, always in lowest terms with positive
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(v: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn recip(&self) -> Self {
        Rat(self.0.recip())
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    /// The value as an `i64` if it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Self {
        Rat::from_int(v)
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a rational number: {s:?}"));
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Rat(BigRational::new(num, den)))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(v) => Ok(Rat::from_int(v)),
            Repr::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

/// A dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

/// Output of [`RatMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: RatMatrix,
    /// Pivot columns, strictly increasing, 0-based.
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse("ragged matrix rows".into()));
        }
        Ok(RatMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rat::from_int(v)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Submatrix on the given columns (0-based), in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (k, &c) in cols.iter().enumerate() {
                m.set(r, k, self.get(r, c).clone());
            }
        }
        m
    }

    /// Appends a column on the right.
    pub fn with_column(&self, col: &[Rat]) -> RatMatrix {
        assert_eq!(col.len(), self.rows);
        let mut m = RatMatrix::zeros(self.rows, self.cols + 1);
        for (r, v) in col.iter().enumerate() {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).clone());
            }
            m.set(r, self.cols, v.clone());
        }
        m
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(Rat::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    /// Reduced row-echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead_row = 0;
        for c in 0..m.cols {
            if lead_row == m.rows {
                break;
            }
            let Some(p) = (lead_row..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, lead_row);
            let inv = m.get(lead_row, c).recip();
            for k in c..m.cols {
                let v = m.get(lead_row, k) * &inv;
                m.set(lead_row, k, v);
            }
            for r in 0..m.rows {
                if r == lead_row || m.get(r, c).is_zero() {
                    continue;
                }
                let factor = m.get(r, c).clone();
                for k in c..m.cols {
                    let v = m.get(r, k) - &(&factor * m.get(lead_row, k));
                    m.set(r, k, v);
                }
            }
            pivots.push(c);
            lead_row += 1;
        }
        let rank = pivots.len();
        Rref {
            matrix: m,
            pivots,
            rank,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Rank of the submatrix on a set of columns (0-based).
    pub fn column_rank(&self, cols: &[usize]) -> usize {
        if cols.is_empty() {
            return 0;
        }
        self.select_columns(cols).rank()
    }

    /// A basis of the right kernel, one vector per row of the result.
    pub fn kernel_basis(&self) -> RatMatrix {
        let Rref { matrix, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = RatMatrix::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            basis.set(k, f, Rat::one());
            for (r, &p) in pivots.iter().enumerate() {
                basis.set(k, p, -matrix.get(r, f));
            }
        }
        basis
    }

    /// Non-zero rows of the reduced row-echelon form: a canonical basis of
    /// the row space.
    pub fn row_space_basis(&self) -> RatMatrix {
        let Rref { matrix, rank, .. } = self.rref();
        RatMatrix::from_rows((0..rank).map(|r| matrix.row(r).to_vec()).collect())
            .unwrap_or_else(|_| RatMatrix::zeros(0, self.cols))
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "{:?}", self.row(r))?;
        }
        f.write_str("]")
    }
}

impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq((0..self.rows).map(|r| self.row(r)))
    }
}

impl<'de> Deserialize<'de> for RatMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Rat>>::deserialize(d)?;
        RatMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn paper_matrix() -> RatMatrix {
        RatMatrix::from_i64_rows(&[&[1, 1, 0, 0, 0, 1], &[0, 1, -1, 0, 1, 0], &[0, 0, 1, 1, 0, 0]])
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = RatMatrix::identity(3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.rank, 3);

        let z = RatMatrix::zeros(2, 4);
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn paper_matrix_ranks() {
        let a = paper_matrix();
        assert_eq!(a.rank(), 3);
        assert_eq!(a.column_rank(&[0, 1, 2]), 3);
        assert_eq!(a.column_rank(&[0, 5]), 1);
        assert_eq!(a.column_rank(&[]), 0);
    }

    #[test]
    fn kernel_of_paper_matrix_is_annihilated() {
        let a = paper_matrix();
        let k = a.kernel_basis();
        assert_eq!(k.rows(), 3);
        for r in 0..k.rows() {
            assert!(a.mul_vec(k.row(r)).iter().all(Rat::is_zero));
        }
        assert_eq!(RatMatrix::identity(2).kernel_basis().rows(), 0);
        let k = RatMatrix::from_i64_rows(&[&[1, 1]]).kernel_basis();
        assert_eq!(k.row(0), &[Rat::from_int(-1), Rat::one()]);
    }

    #[test]
    fn rationals_parse_and_print_reduced() {
        let r: Rat = "6/-4".parse().unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!("0/5".parse::<Rat>().unwrap().to_string(), "0");
        assert!("1/0".parse::<Rat>().is_err());
        assert!("abc".parse::<Rat>().is_err());
    }

    fn small_matrix() -> impl Strategy<Value = RatMatrix> {
        (1usize..4, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec((-3i64..4, 1i64..3), r * c).prop_map(move |v| {
                let rows = v
                    .chunks(c)
                    .map(|ch| ch.iter().map(|&(p, q)| Rat::new(p, q)).collect())
                    .collect();
                RatMatrix::from_rows(rows).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in small_matrix()) {
            let once = m.rref().matrix;
            prop_assert_eq!(once.rref().matrix, once);
        }

        #[test]
        fn rank_nullity(m in small_matrix()) {
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.rows(), m.cols());
            for r in 0..k.rows() {
                prop_assert!(m.mul_vec(k.row(r)).iter().all(Rat::is_zero));
            }
        }

        #[test]
        fn column_rank_monotone_submodular(m in small_matrix()) {
            let c = m.cols();
            let rk = |mask: usize| {
                let cols: Vec<usize> = (0..c).filter(|i| mask >> i & 1 == 1).collect();
                m.column_rank(&cols)
            };
            let ranks: Vec<usize> = (0..1usize << c).map(rk).collect();
            for a in 0..1usize << c {
                for b in 0..1usize << c {
                    prop_assert!(ranks[a] + ranks[b] >= ranks[a | b] + ranks[a & b]);
                    if a & b == a {
                        prop_assert!(ranks[a] <= ranks[b]);
                    }
                }
            }
        }
    }
}
