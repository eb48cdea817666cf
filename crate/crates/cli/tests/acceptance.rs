//! The ten acceptance criteria, one PASS/FAIL line each.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use matlin::activities::{h_polynomial, tutte, tutte_from_table, ActivityTable};
use matlin::affine::{affine_bidegrees, initial_ideal_affine, lasvergnas_tutte, matroid_triple};
use matlin::ideal::{
    bidegree, buchberger_check, cocircuit_forms, enumerate_initial_ideals, initial_ideal, initial_ideal_from_polys,
    multidegree, sweep_orders, Multidegree, TermOrder,
};
use matlin::polytope::{cocircuit_polytope, summand_check, support};
use matlin::simplicial::{
    betti_from_mobius, cm_from_betti, external_activity_complex_from, external_activity_nonfaces, hochster_betti,
    reduced_homology, stanley_reisner, SimplicialComplex, SquarefreeMonomialIdeal,
};
use matlin::{ElemSet, LinearOrder, Matroid, Rat, RatMatrix, Var, VarSet};
use matlin_cli::{run, run_with_jobs, Command, Format, Input, JobSpec};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const MATRIX_JSON: &str =
    r#"{"matrix": [["1","1","0","0","0","1"],["0","1","-1","0","1","0"],["0","0","1","1","0","0"]]}"#;

fn matrix() -> RatMatrix {
    RatMatrix::from_i64_rows(&[&[1, 1, 0, 0, 0, 1], &[0, 1, -1, 0, 1, 0], &[0, 0, 1, 1, 0, 0]])
}

fn example() -> Matroid {
    Matroid::from_matrix(&matrix()).unwrap()
}

fn digits(s: &str) -> ElemSet {
    matlin::sets::digits(s)
}

fn family(list: &str) -> BTreeSet<ElemSet> {
    list.split_whitespace().map(digits).collect()
}

fn json_sets(v: &Value) -> BTreeSet<ElemSet> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|s| {
            s.as_array()
                .unwrap()
                .iter()
                .map(|e| e.as_u64().unwrap() as u32)
                .collect()
        })
        .collect()
}

fn monomial(s: &str) -> VarSet {
    s.split_whitespace()
        .map(|t| {
            let e: u32 = t[1..].parse().unwrap();
            if t.starts_with('x') {
                Var::X(e)
            } else {
                Var::Y(e)
            }
        })
        .collect()
}

fn cli(command: Command, f: impl FnOnce(&mut JobSpec)) -> Result<Value, String> {
    let mut job = JobSpec::new(command, Input::Matrix(MATRIX_JSON.into()));
    job.format = Format::Json;
    f(&mut job);
    run(&job).map(|r| r.body).map_err(|e| e.to_string())
}

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn all_ideals(m: &Matroid) -> Vec<SquarefreeMonomialIdeal> {
    enumerate_initial_ideals(m, 8)
        .unwrap()
        .ideals
        .into_iter()
        .map(|(i, _)| i)
        .collect()
}

fn criterion_1() -> Outcome {
    let r = cli(Command::Analyze, |_| {})?;
    ensure(
        json_sets(&r["bases"]) == family("123 124 134 135 145 234 235 236 245 246 346 356 456"),
        "bases",
    )?;
    ensure(
        json_sets(&r["circuits"]) == family("16 125 256 345 1234 2346"),
        "circuits",
    )?;
    ensure(
        json_sets(&r["cocircuits"]) == family("34 126 235 245 1356 1456"),
        "cocircuits",
    )?;
    let flats: BTreeSet<ElemSet> = r["flats"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| {
            f["flat"]
                .as_array()
                .unwrap()
                .iter()
                .map(|e| e.as_u64().unwrap() as u32)
                .collect()
        })
        .collect();
    let mut expected = family("16 2 3 4 5 1256 136 146 23 24 345 123456");
    expected.insert(ElemSet::EMPTY);
    ensure(flats == expected, "flats")?;
    ensure(r["f_vector"] == serde_json::json!([1, 6, 14, 13]), "f-vector")?;
    ensure(r["h_polynomial"]["display"] == "x^3 + 3x^2 + 5x + 4", "h-polynomial")?;
    Ok("13 bases, 6 circuits, 6 cocircuits, 13 flats, f and h".into())
}

fn criterion_2() -> Outcome {
    let r = cli(Command::InitialIdeals, |s| s.count = true)?;
    ensure(
        r["count"] == 72 && r["bound"] == 78,
        format!("count {} bound {}", r["count"], r["bound"]),
    )?;
    let shown = cli(Command::InitialIdeals, |s| s.show = Some("1,2,3,4,5,6".into()))?;
    let gens: BTreeSet<String> = shown["initial_ideal"]["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| {
            g.as_array()
                .unwrap()
                .iter()
                .map(|v| v.as_str().unwrap())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    let expected: BTreeSet<String> = [
        "x1 y2 y6",
        "x1 y3 y5 y6",
        "x1 y4 y5 y6",
        "x2 y3 y5",
        "x2 y4 y5",
        "x3 y4",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    ensure(gens == expected, format!("generators {gens:?}"))?;
    let comps: BTreeSet<VarSet> = shown["components"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            monomial(
                &c.as_array()
                    .unwrap()
                    .iter()
                    .map(|v| v.as_str().unwrap())
                    .collect::<Vec<_>>()
                    .join(" "),
            )
        })
        .collect();
    let expected: BTreeSet<VarSet> = [
        "x1 x2 x3", "x1 x2 y4", "x1 y3 y4", "x1 x3 y5", "x1 y4 y5", "y2 y3 y4", "y2 x3 y5", "x2 x3 y6", "y2 y4 y5",
        "x2 y4 y6", "y3 y4 y6", "x3 y5 y6", "y4 y5 y6",
    ]
    .into_iter()
    .map(monomial)
    .collect();
    ensure(comps == expected, "components")?;
    Ok("72 initial ideals, bound 78, natural-order ideal and 13 components".into())
}

fn criterion_3() -> Outcome {
    let m = example();
    let mut expected = Multidegree::default();
    for b in family("123 124 134 135 145 234 235 236 245 246 346 356 456") {
        expected.add(b, 1);
    }
    let ideals = all_ideals(&m);
    for ideal in &ideals {
        ensure(
            multidegree(ideal).map_err(|e| e.to_string())? == expected,
            format!("multidegree of {ideal}"),
        )?;
        let b = bidegree(ideal).map_err(|e| e.to_string())?.display_in("s", "t");
        ensure(b == "s^3 + 3s^2t + 5st^2 + 4t^3", format!("bidegree {b} of {ideal}"))?;
    }
    Ok(format!("{} ideals share multidegree and bidegree", ideals.len()))
}

fn criterion_4() -> Outcome {
    let m = example();
    let predicted = betti_from_mobius(&m);
    let natural = initial_ideal(&m, &LinearOrder::natural(m.ground()));
    let ideals = all_ideals(&m);
    for ideal in &ideals {
        let table = hochster_betti(ideal);
        ensure(
            table.coarsen().map_err(|e| e.to_string())? == predicted,
            format!("Betti of {ideal}"),
        )?;
        ensure(table.totals() == [1, 6, 9, 4], "totals")?;
        let cm = cm_from_betti(ideal, &table);
        ensure(
            cm.cohen_macaulay && cm.codim == 3 && cm.projdim == 3,
            format!("CM of {ideal}"),
        )?;
        if *ideal == natural {
            let graded = vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 3, 2, 0], vec![0, 2, 7, 4]];
            ensure(table.graded() == graded, "graded table")?;
        }
    }
    Ok(format!(
        "Moebius = Hochster, totals (1,6,9,4), CM for {} ideals",
        ideals.len()
    ))
}

fn criterion_5() -> Outcome {
    let m = example();
    let forms: Vec<_> = cocircuit_forms(&matrix())
        .unwrap()
        .iter()
        .map(|f| f.homogenize())
        .collect();
    ensure(forms.len() == 6, "six cocircuit forms")?;
    let mut rng = StdRng::seed_from_u64(5);
    let mut orders = BTreeSet::new();
    let runs = 80;
    for _ in 0..runs {
        let ord = TermOrder::from_weights(
            m.ground()
                .iter()
                .flat_map(|e| {
                    [
                        (Var::X(e), Rat::new(rng.gen_range(-20..=20), rng.gen_range(1..=5))),
                        (Var::Y(e), Rat::new(rng.gen_range(-20..=20), rng.gen_range(1..=5))),
                    ]
                })
                .collect::<Vec<_>>(),
        );
        let report = buchberger_check(&forms, &ord);
        ensure(report.s_pairs_reduce, "S-pairs reduce")?;
        ensure(report.terms_nondividing, "reducedness")?;
        let induced = ord.induced_order(m.ground());
        let lt = initial_ideal_from_polys(VarSet::doubled(m.ground()), &forms, &ord).unwrap();
        ensure(lt == initial_ideal(&m, &induced), "leading terms")?;
        orders.insert(induced.elements().to_vec());
    }
    ensure(orders.len() >= 20, format!("only {} distinct orders", orders.len()))?;
    let natural = initial_ideal(&m, &LinearOrder::natural(m.ground()));
    let gens = natural.generators();
    for (i, g) in gens.iter().enumerate() {
        let rest: Vec<VarSet> = gens
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, h)| *h)
            .collect();
        ensure(
            SquarefreeMonomialIdeal::new(natural.vertices(), rest) != natural,
            format!("dropping {g} keeps the ideal"),
        )?;
    }
    Ok(format!(
        "{runs} weight vectors over {} orders, reduced and minimal",
        orders.len()
    ))
}

fn criterion_6() -> Outcome {
    let m = example();
    let p = cocircuit_polytope(&m, 8).unwrap();
    ensure(p.vertices().len() == 72, format!("{} vertices", p.vertices().len()))?;
    ensure(
        p.vertices().len() == all_ideals(&m).len(),
        "vertex count differs from ideal count",
    )?;
    ensure(p.dimension().unwrap() == 5, "dimension")?;
    let six = Rat::from_int(6);
    for v in p.vertices() {
        ensure(v.iter().fold(Rat::zero(), |a, x| a + x.clone()) == six, "sum")?;
        ensure(p.contains(v), "inequalities")?;
        ensure(m.is_basis(support(m.ground(), v)), "support")?;
    }
    ensure(summand_check(&m).is_ok(), "summand check")?;
    Ok("72 vertices, dimension 5, supports are bases, summand check".into())
}

fn criterion_7() -> Outcome {
    let rows = [
        ([1, 0, 1], 124, 144),
        ([2, 2, 3], 114, 156),
        ([1, -1, 1], 111, 150),
        ([1, 2, 3], 107, 162),
        ([0, 0, 0], 72, 72),
    ];
    for (abc, affine, hom) in rows {
        // The forms x1+x2+x6+a, ... vanish where A x = -(a, b, c).
        let csv = abc.iter().map(|v: &i64| (-v).to_string()).collect::<Vec<_>>().join(",");
        let r = cli(Command::Affine, |s| {
            s.b = Some(csv.clone());
            s.count = true;
        })?;
        ensure(
            r["counts"]["affine"] == affine && r["counts"]["hom"] == hom,
            format!("{abc:?}: {}", r["counts"]),
        )?;
    }
    Ok("all five rows of the affine table".into())
}

fn criterion_8() -> Outcome {
    let t = matroid_triple(&matrix(), &[Rat::from_int(-1), Rat::zero(), Rat::from_int(-1)]).unwrap();
    let (top, bottom) = affine_bidegrees(&t).unwrap();
    let r = t.m().rank() as u32;
    ensure(top == h_polynomial(t.m()).homogenize(r), "top closed form")?;
    ensure(
        bottom == lasvergnas_tutte(&t).unwrap().at_y_one_z_zero().homogenize(r),
        "bottom closed form",
    )?;
    ensure(top.display_in("s", "t") == "s^3 + 3s^2t + 5st^2 + 4t^3", "top")?;
    ensure(bottom.display_in("s", "t") == "3st^2 + 10t^3", "bottom")?;
    let mut n = 0;
    for o in LinearOrder::all(t.ground()) {
        let last = initial_ideal_affine(&t, &o.with_inserted(0, o.len()).unwrap());
        let first = initial_ideal_affine(&t, &o.with_inserted(0, 0).unwrap());
        ensure(bidegree(&last).unwrap() == top, format!("0 last in {o}"))?;
        ensure(bidegree(&first).unwrap() == bottom, format!("0 first in {o}"))?;
        n += 1;
    }
    Ok(format!("{n} orders with 0 last and {n} with 0 first"))
}

fn random_matrix(rng: &mut StdRng) -> RatMatrix {
    loop {
        let cols = rng.gen_range(2..=7usize);
        let rows = rng.gen_range(1..=cols.min(4));
        let entries: Vec<Vec<Rat>> = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| match rng.gen_range(0..10) {
                        0..=3 => Rat::zero(),
                        4 | 5 => Rat::one(),
                        6 => Rat::from_int(-1),
                        7 => Rat::from_int(2),
                        8 => Rat::new(-1, 2),
                        _ => Rat::new(3, rng.gen_range(1..=4)),
                    })
                    .collect()
            })
            .collect();
        let a = RatMatrix::from_rows(entries).unwrap().row_space_basis();
        if a.rows() > 0 {
            return a;
        }
    }
}

fn random_rhs(rng: &mut StdRng, a: &RatMatrix) -> Vec<Rat> {
    let x: Vec<Rat> = (0..a.cols()).map(|_| Rat::from_int(rng.gen_range(-2..=2))).collect();
    a.mul_vec(&x)
}

/// Every subset lies in exactly one interval `[B - IA(B), B + EA(B)]`.
fn crapo_covers(m: &Matroid, table: &ActivityTable, order: &LinearOrder) -> bool {
    let mut hits = vec![0u8; 1 << (m.ground().max().unwrap() + 1)];
    for s in table.splits(order) {
        let free = s.internally_active.union(s.externally_active);
        for extra in free.subsets() {
            hits[s.interval_bottom().union(extra).bits() as usize] += 1;
        }
    }
    m.ground().subsets().all(|a| hits[a.bits() as usize] == 1)
}

fn criterion_9() -> Outcome {
    let mut rng = StdRng::seed_from_u64(9);
    let count = 200;
    let mut orders_checked = 0usize;
    for k in 0..count {
        let a = random_matrix(&mut rng);
        let m = Matroid::from_matrix(&a).unwrap();
        let ctx = |what: &str| format!("matrix {k} ({} x {}): {what}", a.rows(), a.cols());

        for c in m.circuits() {
            for d in m.cocircuits() {
                ensure(c.intersection(*d).len() != 1, ctx("circuit meets cocircuit once"))?;
            }
        }

        let table = ActivityTable::new(&m);
        let t = tutte(&m);
        for o in LinearOrder::all(m.ground()) {
            ensure(crapo_covers(&m, &table, &o), ctx("Crapo partition"))?;
            ensure(tutte_from_table(&table, &o) == t, ctx("Tutte via activities"))?;
            let delta = external_activity_complex_from(m.ground(), &table, &o);
            ensure(
                stanley_reisner(&delta) == external_activity_nonfaces(&m, &o),
                ctx("facets vs non-faces"),
            )?;
            orders_checked += 1;
        }

        let h = reduced_homology(&SimplicialComplex::independence_complex(&m.dual()));
        let top = m.size() - m.rank();
        let mu = m.flat_lattice().mobius_number().unsigned_abs() as usize;
        for (i, &rank) in h.iter().enumerate() {
            let want = if m.loops().is_empty() && i == top { mu } else { 0 };
            ensure(rank == want, ctx("Bjorner concentration"))?;
        }

        let predicted = betti_from_mobius(&m);
        for ideal in all_ideals(&m) {
            let table = hochster_betti(&ideal);
            ensure(
                table.coarsen().ok().as_ref() == Some(&predicted),
                ctx("linear Betti table"),
            )?;
            let cm = cm_from_betti(&ideal, &table);
            ensure(cm.cohen_macaulay && cm.codim == m.rank(), ctx("Cohen-Macaulay"))?;
        }
        for b in [random_rhs(&mut rng, &a), random_rhs(&mut rng, &a)] {
            let triple = matroid_triple(&a, &b).unwrap();
            for (ideal, _) in &sweep_orders(triple.hom().ground(), |o| initial_ideal_affine(&triple, o)) {
                ensure(
                    hochster_betti(ideal).coarsen().ok().as_ref() == Some(&predicted),
                    ctx("affine Betti table depends on b"),
                )?;
            }
        }
    }
    Ok(format!("{count} matrices, {orders_checked} orders"))
}

fn criterion_10() -> Outcome {
    let job = JobSpec::new(Command::Selftest, Input::Absent);
    let mut outputs = Vec::new();
    for jobs in [1, 2, 8] {
        let report = run_with_jobs(&job, jobs).map_err(|e| e.to_string())?;
        ensure(report.passed, format!("selftest failed with {jobs} workers"))?;
        outputs.push(report.render(Format::Json));
    }
    ensure(
        outputs.windows(2).all(|w| w[0] == w[1]),
        "library output differs across worker counts",
    )?;

    let bin = env!("CARGO_BIN_EXE_matlin");
    let mut stdout = Vec::new();
    for jobs in ["1", "2", "8"] {
        let out = std::process::Command::new(bin)
            .args(["selftest", "--format", "json", "--jobs", jobs])
            .env_remove("MATLIN_JOBS")
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), format!("selftest exit {:?}", out.status.code()))?;
        stdout.push(out.stdout);
    }
    ensure(
        stdout.windows(2).all(|w| w[0] == w[1]),
        "binary output differs across worker counts",
    )?;
    ensure(stdout[0] == outputs[0].as_bytes(), "binary and library output differ")?;
    Ok("selftest byte-identical under 1, 2 and 8 workers".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("matroid golden set", criterion_1),
        ("initial-ideal enumeration", criterion_2),
        ("degree invariance", criterion_3),
        ("Betti numbers", criterion_4),
        ("Groebner bases", criterion_5),
        ("cocircuit polytope", criterion_6),
        ("affine counts", criterion_7),
        ("affine bidegrees", criterion_8),
        ("property suite", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
