//! Brute-force reference computations compared against the library.

mod common;

use common::*;
use matlin::activities::{f_vector, tutte};
use matlin::ideal::initial_ideal;
use matlin::simplicial::{complex_of, hochster_betti, minimal_transversals, reduced_homology, SimplicialComplex};
use matlin::{ElemSet, LinearOrder, Matroid, Var, VarSet};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Rank of an integer matrix by Bareiss elimination on i128.
fn int_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let (nr, nc) = (a.len(), a.first().map_or(0, |r| r.len()));
    let mut rank = 0;
    let mut prev = 1i128;
    for c in 0..nc {
        let Some(p) = (rank..nr).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..nr {
            for k in c + 1..nc {
                a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        rank += 1;
    }
    rank
}

fn random_int_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| if rng.gen_bool(0.4) { 0 } else { rng.gen_range(-3..=3) })
                .collect()
        })
        .collect()
}

fn columns(rows: &[Vec<i64>], s: ElemSet) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|r| s.iter().map(|e| r[e as usize - 1]).collect())
        .collect()
}

fn to_matroid(rows: &[Vec<i64>]) -> Option<Matroid> {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    let a = matlin::RatMatrix::from_i64_rows(&refs).row_space_basis();
    (a.rows() > 0).then(|| Matroid::from_matrix(&a).unwrap())
}

fn minimal(family: Vec<ElemSet>) -> Vec<ElemSet> {
    let mut out: Vec<ElemSet> = family
        .iter()
        .copied()
        .filter(|s| !family.iter().any(|t| t != s && t.is_subset(*s)))
        .collect();
    out.sort();
    out.dedup();
    out
}

#[test]
fn matroid_data_against_integer_elimination() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 60 {
        let rows = rng.gen_range(1..=3);
        let cols = rng.gen_range(2..=7);
        let a = random_int_matrix(&mut rng, rows, cols);
        let Some(m) = to_matroid(&a) else { continue };
        checked += 1;
        let ground = m.ground();
        let rank = |s: ElemSet| int_rank(&columns(&a, s));
        assert_eq!(m.rank(), rank(ground));
        for s in ground.subsets() {
            assert_eq!(m.rank_of(s), rank(s), "rank of {s}");
        }
        let r = m.rank();
        let mut bases: Vec<ElemSet> = ground.subsets().filter(|s| s.len() == r && rank(*s) == r).collect();
        bases.sort();
        assert_eq!(m.bases(), &bases[..]);

        let dependent: Vec<ElemSet> = ground.subsets().filter(|s| rank(*s) < s.len()).collect();
        assert_eq!(m.circuits(), &minimal(dependent)[..]);
        let blocking: Vec<ElemSet> = ground
            .subsets()
            .filter(|s| !s.is_empty() && bases.iter().all(|b| !b.is_disjoint(*s)))
            .collect();
        assert_eq!(m.cocircuits(), &minimal(blocking)[..]);

        let mut flats: Vec<ElemSet> = ground
            .subsets()
            .filter(|s| ground.difference(*s).iter().all(|e| rank(s.with(e)) > rank(*s)))
            .collect();
        flats.sort();
        let mut got = m.flats().to_vec();
        got.sort();
        assert_eq!(got, flats);

        // Corank-nullity expansion, evaluated on a grid.
        for x in -2i64..=3 {
            for y in -2i64..=3 {
                let direct: i64 = ground
                    .subsets()
                    .map(|s| {
                        let rs = rank(s) as u32;
                        (x - 1).pow(r as u32 - rs) * (y - 1).pow(s.len() as u32 - rs)
                    })
                    .sum();
                assert_eq!(tutte(&m).eval(x, y), direct);
            }
        }

        let mut f = vec![0u64; r + 1];
        for s in ground.subsets().filter(|s| rank(*s) == s.len()) {
            f[s.len()] += 1;
        }
        assert_eq!(f_vector(&m), f);
    }
}

#[test]
fn minimal_transversals_against_scan() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..80 {
        let nv = rng.gen_range(2..=8u32);
        let all = VarSet::doubled(ElemSet::range(1, nv / 2 + 1));
        let verts = all.sorted_vars();
        let edges: Vec<VarSet> = (0..rng.gen_range(1..=5))
            .map(|_| {
                let e: VarSet = verts
                    .iter()
                    .filter(|_| rng.gen_bool(0.4))
                    .fold(VarSet::default(), |acc, &v| acc.with(v));
                if e.is_empty() {
                    VarSet::default().with(verts[0])
                } else {
                    e
                }
            })
            .collect();
        let covers: Vec<VarSet> = all
            .subsets()
            .filter(|t| edges.iter().all(|e| !e.is_disjoint(*t)))
            .collect();
        let mut expected: Vec<VarSet> = covers
            .iter()
            .copied()
            .filter(|t| !covers.iter().any(|u| u != t && u.is_subset(*t)))
            .collect();
        expected.sort();
        let mut got = minimal_transversals(&edges);
        got.sort();
        assert_eq!(got, expected, "edges {edges:?}");
    }
}

fn vs(vars: &[Var]) -> VarSet {
    vars.iter().fold(VarSet::default(), |acc, &v| acc.with(v))
}

#[test]
fn reduced_homology_of_known_spaces() {
    let (a, b, c, d) = (Var::X(1), Var::X(2), Var::X(3), Var::X(4));
    let all = vs(&[a, b, c, d]);
    // Two points: one reduced class in dimension 0.
    let two = SimplicialComplex::from_facets(vs(&[a, b]), [vs(&[a]), vs(&[b])]);
    assert_eq!(reduced_homology(&two).get(1).copied(), Some(1));
    // Boundary of a tetrahedron is a 2-sphere.
    let sphere = SimplicialComplex::from_facets(all, [vs(&[a, b, c]), vs(&[a, b, d]), vs(&[a, c, d]), vs(&[b, c, d])]);
    let h = reduced_homology(&sphere);
    assert_eq!(h.iter().sum::<usize>(), 1);
    assert_eq!(h[3], 1);
    // A 4-cycle is a circle.
    let cycle = SimplicialComplex::from_facets(all, [vs(&[a, b]), vs(&[b, c]), vs(&[c, d]), vs(&[a, d])]);
    let h = reduced_homology(&cycle);
    assert_eq!(h.iter().sum::<usize>(), 1);
    assert_eq!(h[2], 1);
    // A simplex is acyclic; the complex {empty face} has one class in dimension -1.
    assert!(reduced_homology(&SimplicialComplex::simplex(all))
        .iter()
        .all(|&x| x == 0));
    let point_free = SimplicialComplex::from_facets(all, [VarSet::default()]);
    assert_eq!(reduced_homology(&point_free), vec![1]);
}

/// The multigraded Euler characteristic `sum_i (-1)^i beta_{i,sigma}` equals
/// `sum_{F face, F in sigma} (-1)^{|sigma - F|}`, the coefficient of
/// `t^sigma` in the K-polynomial.
#[test]
fn betti_euler_characteristic_matches_k_polynomial() {
    let m = paper();
    for o in [
        LinearOrder::natural(m.ground()),
        LinearOrder::natural(m.ground()).reversed(),
        LinearOrder::new(vec![4, 1, 6, 2, 5, 3]).unwrap(),
    ] {
        let ideal = initial_ideal(&m, &o);
        let delta = complex_of(&ideal);
        let betti = hochster_betti(&ideal);
        for sigma in ideal.vertices().subsets() {
            let k: i64 = sigma
                .subsets()
                .filter(|f| delta.is_face(*f))
                .map(|f| if (sigma.len() - f.len()) % 2 == 0 { 1 } else { -1 })
                .sum();
            let euler: i64 = (0..=sigma.len())
                .map(|i| {
                    let b = betti.get(i, &sigma) as i64;
                    if i % 2 == 0 {
                        b
                    } else {
                        -b
                    }
                })
                .sum();
            assert_eq!(euler, k, "sigma {sigma}");
        }
    }
}
