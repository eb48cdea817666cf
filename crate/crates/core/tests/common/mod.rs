#![allow(dead_code)]

use matlin::{ElemSet, Matroid, Rat, RatMatrix, VarSet};
use proptest::prelude::*;

pub fn paper_matrix() -> RatMatrix {
    RatMatrix::from_i64_rows(&[&[1, 1, 0, 0, 0, 1], &[0, 1, -1, 0, 1, 0], &[0, 0, 1, 1, 0, 0]])
}

pub fn paper() -> Matroid {
    Matroid::from_matrix(&paper_matrix()).unwrap()
}

/// Right-hand side for the forms `x1+x2+x6+a, x2-x3+x5+b, x3+x4+c`.
pub fn paper_rhs(abc: [i64; 3]) -> Vec<Rat> {
    abc.iter().map(|&v| Rat::from_int(-v)).collect()
}

pub fn set(s: &str) -> ElemSet {
    matlin::sets::digits(s)
}

pub fn sets(list: &[&str]) -> Vec<ElemSet> {
    let mut v: Vec<ElemSet> = list.iter().map(|s| set(s)).collect();
    v.sort();
    v
}

pub fn mono(x: &str, y: &str) -> VarSet {
    VarSet::from_parts(set(x), set(y))
}

fn entry() -> impl Strategy<Value = Rat> {
    prop_oneof![
        4 => Just(Rat::zero()),
        2 => Just(Rat::one()),
        2 => Just(Rat::from_int(-1)),
        1 => Just(Rat::from_int(2)),
        1 => Just(Rat::new(1, 2)),
        1 => Just(Rat::from_int(-3)),
    ]
}

/// Full-row-rank rational matrices with `cols` in `min_cols..=max_cols`.
pub fn matrix(min_cols: usize, max_cols: usize) -> impl Strategy<Value = RatMatrix> {
    (1usize..=3, min_cols..=max_cols)
        .prop_flat_map(|(r, c)| {
            proptest::collection::vec(entry(), r * c)
                .prop_map(move |v| RatMatrix::from_rows(v.chunks(c).map(|ch| ch.to_vec()).collect()).unwrap())
        })
        .prop_filter_map("zero matrix", |m| {
            let basis = m.row_space_basis();
            (basis.rows() > 0).then_some(basis)
        })
}

/// A consistent affine system: `b = A x` for a small integer `x`, or zero.
pub fn affine_system(min_cols: usize, max_cols: usize) -> impl Strategy<Value = (RatMatrix, Vec<Rat>)> {
    matrix(min_cols, max_cols).prop_flat_map(|a| {
        let cols = a.cols();
        (Just(a), proptest::collection::vec(-2i64..=2, cols)).prop_map(|(a, x)| {
            let x: Vec<Rat> = x.into_iter().map(Rat::from_int).collect();
            let b = a.mul_vec(&x);
            (a, b)
        })
    })
}

/// A matroid from a random matrix.
pub fn matroid(min_cols: usize, max_cols: usize) -> impl Strategy<Value = Matroid> {
    matrix(min_cols, max_cols).prop_map(|m| Matroid::from_matrix(&m).unwrap())
}

/// A matroid with a random order on its ground set.
pub fn matroid_and_order(min_cols: usize, max_cols: usize) -> impl Strategy<Value = (Matroid, matlin::LinearOrder)> {
    matroid(min_cols, max_cols).prop_flat_map(|m| {
        let elems = m.ground().to_vec();
        (Just(m), Just(elems).prop_shuffle()).prop_map(|(m, seq)| (m, matlin::LinearOrder::new(seq).unwrap()))
    })
}
