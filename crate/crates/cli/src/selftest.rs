//! Golden checks on the built-in six-element example and its affine
//! translates.

use std::collections::BTreeSet;

use matlin::activities::{f_vector, h_polynomial};
use matlin::affine::{affine_bidegrees, enumerate_affine_initial_ideals, initial_ideal_affine, matroid_triple};
use matlin::ideal::{
    bidegree, buchberger_check, cocircuit_forms, enumerate_initial_ideals, initial_ideal, initial_ideal_from_polys,
    multidegree, Multidegree, TermOrder,
};
use matlin::polytope::{cocircuit_polytope, summand_check, support};
use matlin::simplicial::{betti_from_mobius, cm_from_betti, hochster_betti, primary_decomposition};
use matlin::{ElemSet, LinearOrder, Matroid, Rat, RatMatrix, Var, VarSet};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use crate::Report;

pub fn example_matrix() -> RatMatrix {
    RatMatrix::from_i64_rows(&[&[1, 1, 0, 0, 0, 1], &[0, 1, -1, 0, 1, 0], &[0, 0, 1, 1, 0, 0]])
}

/// `x1+x2+x6+a, x2-x3+x5+b, x3+x4+c` vanish on `A x = -(a, b, c)`.
pub fn example_rhs(abc: [i64; 3]) -> Vec<Rat> {
    abc.iter().map(|&v| Rat::from_int(-v)).collect()
}

fn digits(s: &str) -> ElemSet {
    matlin::sets::digits(s)
}

fn family(list: &str) -> Vec<ElemSet> {
    let mut v: Vec<ElemSet> = list.split(' ').map(digits).collect();
    v.sort();
    v
}

/// Parses `"x1 y2 y6"`-style monomials.
fn vars(s: &str) -> VarSet {
    s.split(' ')
        .map(|t| {
            let e: u32 = t[1..].parse().expect("element");
            if t.starts_with('x') {
                Var::X(e)
            } else {
                Var::Y(e)
            }
        })
        .collect()
}

struct Check {
    name: &'static str,
    passed: bool,
    detail: Value,
}

pub fn run() -> Report {
    let m = Matroid::from_matrix(&example_matrix()).expect("example matrix");
    let checks = [
        matroid_data(&m),
        initial_ideals(&m),
        degrees(&m),
        betti(&m),
        groebner(&m),
        polytope(&m),
        affine_table(),
        affine_bidegree_families(),
    ];
    let passed = checks.iter().all(|c| c.passed);
    let body = json!({
        "command": "selftest",
        "passed": passed,
        "checks": checks
            .iter()
            .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
            .collect::<Vec<_>>(),
    });
    Report { body, passed }
}

fn matroid_data(m: &Matroid) -> Check {
    let bases = family("123 124 134 135 145 234 235 236 245 246 346 356 456");
    let circuits = family("16 125 256 345 1234 2346");
    let cocircuits = family("34 126 235 245 1356 1456");
    let mut flats = family("16 2 3 4 5 1256 136 146 23 24 345 123456");
    flats.push(ElemSet::EMPTY);
    flats.sort();
    let mut got_flats = m.flats().to_vec();
    got_flats.sort();
    let h = h_polynomial(m).to_string();
    let passed = m.bases() == bases
        && m.circuits() == circuits
        && m.cocircuits() == cocircuits
        && got_flats == flats
        && f_vector(m) == [1, 6, 14, 13]
        && h == "x^3 + 3x^2 + 5x + 4";
    Check {
        name: "matroid",
        passed,
        detail: json!({ "bases": m.bases().len(), "flats": got_flats.len(), "f_vector": f_vector(m), "h": h }),
    }
}

fn initial_ideals(m: &Matroid) -> Check {
    let census = enumerate_initial_ideals(m, matlin::LINEAR_SWEEP_CUTOFF).expect("within cutoff");
    let natural = initial_ideal(m, &LinearOrder::natural(m.ground()));
    let mut gens: Vec<VarSet> = [
        "x1 y2 y6",
        "x1 y3 y5 y6",
        "x1 y4 y5 y6",
        "x2 y3 y5",
        "x2 y4 y5",
        "x3 y4",
    ]
    .into_iter()
    .map(vars)
    .collect();
    gens.sort();
    let mut comps: Vec<VarSet> = [
        "x1 x2 x3", "x1 x2 y4", "x1 y3 y4", "x1 x3 y5", "x1 y4 y5", "y2 y3 y4", "y2 x3 y5", "x2 x3 y6", "y2 y4 y5",
        "x2 y4 y6", "y3 y4 y6", "x3 y5 y6", "y4 y5 y6",
    ]
    .into_iter()
    .map(vars)
    .collect();
    comps.sort();
    let mut got = primary_decomposition(&natural);
    got.sort();
    let passed = census.count() == 72 && census.bound == 78 && natural.generators() == gens && got == comps;
    Check {
        name: "initial_ideals",
        passed,
        detail: json!({
            "count": census.count(),
            "bound": census.bound,
            "natural": natural.to_string(),
            "components": got.len(),
        }),
    }
}

fn all_ideals(m: &Matroid) -> Vec<matlin::SquarefreeMonomialIdeal> {
    enumerate_initial_ideals(m, matlin::LINEAR_SWEEP_CUTOFF)
        .expect("within cutoff")
        .ideals
        .into_iter()
        .map(|(i, _)| i)
        .collect()
}

fn degrees(m: &Matroid) -> Check {
    let expected = Multidegree::of_bases(m);
    let ideals = all_ideals(m);
    let bideg: BTreeSet<String> = ideals
        .iter()
        .map(|i| bidegree(i).map(|b| b.display_in("s", "t")).unwrap_or_default())
        .collect();
    let same = ideals.iter().all(|i| multidegree(i).ok().as_ref() == Some(&expected));
    let passed = same && bideg.len() == 1 && bideg.contains("s^3 + 3s^2t + 5st^2 + 4t^3");
    Check {
        name: "degrees",
        passed,
        detail: json!({ "ideals": ideals.len(), "bidegrees": bideg }),
    }
}

fn betti(m: &Matroid) -> Check {
    let predicted = betti_from_mobius(m);
    let mut agree = 0;
    let mut cm = 0;
    let mut natural_totals = Vec::new();
    let mut natural_graded = Vec::new();
    let natural = initial_ideal(m, &LinearOrder::natural(m.ground()));
    for ideal in all_ideals(m) {
        let table = hochster_betti(&ideal);
        if table.coarsen().ok().as_ref() == Some(&predicted) {
            agree += 1;
        }
        let w = cm_from_betti(&ideal, &table);
        if w.cohen_macaulay && w.codim == 3 && w.projdim == 3 {
            cm += 1;
        }
        if ideal == natural {
            natural_totals = table.totals();
            natural_graded = table.graded();
        }
    }
    let graded: Vec<Vec<u64>> = vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 3, 2, 0], vec![0, 2, 7, 4]];
    let passed = agree == 72 && cm == 72 && natural_totals == [1, 6, 9, 4] && natural_graded == graded;
    Check {
        name: "betti",
        passed,
        detail: json!({
            "mobius_agrees": agree,
            "cohen_macaulay": cm,
            "totals": natural_totals,
            "graded": natural_graded,
        }),
    }
}

fn groebner(m: &Matroid) -> Check {
    let forms: Vec<_> = cocircuit_forms(&example_matrix())
        .expect("full rank")
        .iter()
        .map(|f| f.homogenize())
        .collect();
    let mut rng = StdRng::seed_from_u64(0x6d61746c);
    let mut orders = BTreeSet::new();
    let mut passed_runs = 0;
    let runs = 60;
    for _ in 0..runs {
        let weights = m.ground().iter().flat_map(|e| {
            let wx = Rat::new(rng.gen_range(-12..=12), rng.gen_range(1..=4));
            let wy = Rat::new(rng.gen_range(-12..=12), rng.gen_range(1..=4));
            [(Var::X(e), wx), (Var::Y(e), wy)]
        });
        let ord = TermOrder::from_weights(weights.collect::<Vec<_>>());
        let induced = ord.induced_order(m.ground());
        let report = buchberger_check(&forms, &ord);
        let lt = initial_ideal_from_polys(VarSet::doubled(m.ground()), &forms, &ord);
        if report.passed() && lt.ok().as_ref() == Some(&initial_ideal(m, &induced)) {
            passed_runs += 1;
        }
        orders.insert(induced.elements().to_vec());
    }
    let natural = initial_ideal(m, &LinearOrder::natural(m.ground()));
    let minimal = crate::minimally_generated(&natural);
    let passed = passed_runs == runs && orders.len() >= 20 && minimal;
    Check {
        name: "groebner",
        passed,
        detail: json!({
            "weight_realizations": runs,
            "passed": passed_runs,
            "distinct_orders": orders.len(),
            "minimal": minimal,
        }),
    }
}

fn polytope(m: &Matroid) -> Check {
    let p = cocircuit_polytope(m, matlin::LINEAR_SWEEP_CUTOFF).expect("within cutoff");
    let six = Rat::from_int(6);
    let on_plane = p
        .vertices()
        .iter()
        .all(|v| v.iter().fold(Rat::zero(), |acc, x| acc + x.clone()) == six && p.contains(v));
    let supports = p.vertices().iter().all(|v| m.is_basis(support(m.ground(), v)));
    let dim = p.dimension().unwrap_or(usize::MAX);
    let summand = summand_check(m).is_ok();
    let passed = p.vertices().len() == 72 && dim == 5 && on_plane && supports && summand;
    Check {
        name: "polytope",
        passed,
        detail: json!({
            "vertices": p.vertices().len(),
            "dimension": dim,
            "feasible": on_plane,
            "supports_are_bases": supports,
            "summand_check": summand,
        }),
    }
}

const TABLE: [([i64; 3], usize, usize); 5] = [
    ([0, 0, 0], 72, 72),
    ([1, 0, 1], 124, 144),
    ([2, 2, 3], 114, 156),
    ([1, -1, 1], 111, 150),
    ([1, 2, 3], 107, 162),
];

fn affine_table() -> Check {
    let mut rows = Vec::new();
    let mut passed = true;
    for (abc, affine, hom) in TABLE {
        let t = matroid_triple(&example_matrix(), &example_rhs(abc)).expect("consistent");
        let census = enumerate_affine_initial_ideals(&t, matlin::AFFINE_SWEEP_CUTOFF).expect("within cutoff");
        passed &= census.affine.count() == affine && census.hom.count() == hom;
        rows.push(json!({ "abc": abc, "affine": census.affine.count(), "hom": census.hom.count() }));
    }
    Check {
        name: "affine_table",
        passed,
        detail: json!(rows),
    }
}

fn affine_bidegree_families() -> Check {
    let t = matroid_triple(&example_matrix(), &example_rhs([1, 0, 1])).expect("consistent");
    let (top, bottom) = affine_bidegrees(&t).expect("closed forms");
    let mut last = BTreeSet::new();
    let mut first = BTreeSet::new();
    for o in LinearOrder::all(t.ground()) {
        let zl = o.with_inserted(0, o.len()).expect("fresh element");
        let zf = o.with_inserted(0, 0).expect("fresh element");
        for (order, seen) in [(zl, &mut last), (zf, &mut first)] {
            let b = bidegree(&initial_ideal_affine(&t, &order)).map(|b| b.display_in("s", "t"));
            seen.insert(b.unwrap_or_else(|e| e.to_string()));
        }
    }
    let (top, bottom) = (top.display_in("s", "t"), bottom.display_in("s", "t"));
    let passed = last.len() == 1
        && first.len() == 1
        && last.contains("s^3 + 3s^2t + 5st^2 + 4t^3")
        && first.contains("3st^2 + 10t^3")
        && last.contains(&top)
        && first.contains(&bottom);
    Check {
        name: "affine_bidegrees",
        passed,
        detail: json!({ "zero_last": last, "zero_first": first, "top": top, "bottom": bottom }),
    }
}
