//! Job descriptions, reports and rendering for the `matlin` command.
//!
//! Every report is a JSON object; the text format is a rendering of the
//! same object. Reports carry `input_hash`, the SHA-256 of the canonical
//! JSON form of the input.

mod render;
pub mod selftest;

use matlin::activities::{f_vector, h_polynomial, tutte, tutte_from_table, ActivityTable};
use matlin::affine::{
    affine_bidegrees, dehomogenized_components, enumerate_affine_initial_ideals, initial_ideal_affine,
    lasvergnas_tutte, MatroidTriple,
};
use matlin::ideal::{
    bidegree, buchberger_check, cocircuit_forms, enumerate_initial_ideals, initial_ideal, initial_ideal_from_polys,
    multidegree, TermOrder,
};
use matlin::io::{parse_order_csv, parse_rat_csv, AffineInput, MatroidInput};
use matlin::polytope::{cocircuit_polytope, summand_check, support, vertex_bound, vertex_for_order};
use matlin::simplicial::{
    betti_from_mobius, cm_from_betti, external_activity_complex, hochster_betti, primary_decomposition,
    reduced_homology, SquarefreeMonomialIdeal,
};
use matlin::{ElemSet, LinearOrder, Matroid, Rat, RatMatrix, AFFINE_SWEEP_CUTOFF, LINEAR_SWEEP_CUTOFF};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Ideal,
    InitialIdeals,
    Betti,
    Polytope,
    Tutte,
    Affine,
    Selftest,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Ideal => "ideal",
            Command::InitialIdeals => "initial-ideals",
            Command::Betti => "betti",
            Command::Polytope => "polytope",
            Command::Tutte => "tutte",
            Command::Affine => "affine",
            Command::Selftest => "selftest",
        }
    }
}

/// Where the matroid comes from. File contents, not paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Matrix(String),
    Bases(String),
    Absent,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct JobSpec {
    pub command: Command,
    pub input: Input,
    /// Right-hand side of `A x = b` as CSV; overrides a `"b"` field in the
    /// matrix file.
    pub b: Option<String>,
    pub order: Option<String>,
    pub show: Option<String>,
    pub count: bool,
    pub format: Format,
    /// Replaces both sweep cutoffs.
    pub cutoff: Option<usize>,
}

impl JobSpec {
    pub fn new(command: Command, input: Input) -> Self {
        JobSpec {
            command,
            input,
            b: None,
            order: None,
            show: None,
            count: false,
            format: Format::Text,
            cutoff: None,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Math(#[from] matlin::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Internal(String),
}

/// Exit codes, also listed in `--help`.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INTERNAL: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const CUTOFF: i32 = 3;
    pub const AXIOM: i32 = 4;
    pub const MATH: i32 = 5;
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use matlin::Error as E;
        match self {
            CliError::Usage(_) | CliError::Io(_) => exit::USAGE,
            CliError::Internal(_) => exit::INTERNAL,
            CliError::Math(e) => match e {
                E::Parse(_) | E::InvalidOrder(_) | E::GroundTooLarge(_) | E::EmptyGroundSet => exit::USAGE,
                E::CutoffExceeded { .. } => exit::CUTOFF,
                E::AxiomViolation { .. } | E::NotAMorphism(_) => exit::AXIOM,
                _ => exit::MATH,
            },
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.exit_code() {
            exit::USAGE => "usage",
            exit::CUTOFF => "cutoff",
            exit::AXIOM => "axiom",
            exit::MATH => "math",
            _ => "internal",
        }
    }

    pub fn to_json(&self) -> Value {
        let mut err = json!({
            "kind": self.kind(),
            "message": self.to_string(),
            "exit_code": self.exit_code(),
        });
        if let CliError::Math(matlin::Error::AxiomViolation {
            witness: Some((b1, b2, x)),
            ..
        }) = self
        {
            err["witness"] = json!({"b1": b1, "b2": b2, "x": x});
        }
        json!({ "error": err })
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

/// A finished report. `passed` is false only for a failing selftest.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub body: Value,
    pub passed: bool,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.body).expect("JSON values serialize");
                s.push('\n');
                s
            }
            Format::Text => render::text(&self.body),
        }
    }
}

/// Runs `job` on a pool of `jobs` worker threads (0 picks the default).
pub fn run_with_jobs(job: &JobSpec, jobs: usize) -> Result<Report> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Internal(format!("thread pool: {e}")))?;
    pool.install(|| run(job))
}

/// Runs `job` on the current rayon pool.
pub fn run(job: &JobSpec) -> Result<Report> {
    if job.command == Command::Selftest {
        return Ok(selftest::run());
    }
    let input = load(job)?;
    let mut body = match job.command {
        Command::Analyze => analyze(&input.matroid),
        Command::Ideal => ideal(&input, job)?,
        Command::InitialIdeals => initial_ideals(&input.matroid, job)?,
        Command::Betti => betti(&input.matroid, job)?,
        Command::Polytope => polytope(&input.matroid, job)?,
        Command::Tutte => tutte_report(&input.matroid, job)?,
        Command::Affine => affine(&input, job)?,
        Command::Selftest => unreachable!(),
    };
    body["command"] = json!(job.command.name());
    body["input_hash"] = json!(input.hash);
    Ok(Report { body, passed: true })
}

struct Loaded {
    matroid: Matroid,
    matrix: Option<RatMatrix>,
    triple: Option<MatroidTriple>,
    hash: String,
}

fn load(job: &JobSpec) -> Result<Loaded> {
    let parsed = match &job.input {
        Input::Matrix(text) | Input::Bases(text) => MatroidInput::from_json(text)?,
        Input::Absent => return Err(CliError::Usage("one of --matrix or --bases is required".into())),
    };
    match (&job.input, &parsed) {
        (Input::Matrix(_), MatroidInput::Bases { .. }) => {
            return Err(CliError::Usage("--matrix file holds bases; use --bases".into()))
        }
        (Input::Bases(_), MatroidInput::Matrix { .. }) => {
            return Err(CliError::Usage("--bases file holds a matrix; use --matrix".into()))
        }
        _ => {}
    }
    let matroid = parsed.build()?;
    let matrix = parsed.matrix().cloned();

    let b = match (&job.b, &job.input) {
        (Some(csv), _) => Some(parse_rat_csv(csv)?),
        (None, Input::Matrix(text)) if job.command == Command::Affine => Some(
            AffineInput::from_json(text)
                .map_err(|_| CliError::Usage("affine needs --b or a \"b\" field in the matrix file".into()))?
                .b,
        ),
        _ => None,
    };
    let triple = match (&b, &matrix) {
        (Some(b), Some(a)) => Some(matlin::affine::matroid_triple(a, b)?),
        (Some(_), None) => return Err(CliError::Usage("--b needs a --matrix input".into())),
        _ => None,
    };
    let hash = input_hash(&matroid, matrix.as_ref(), b.as_deref());
    Ok(Loaded {
        matroid,
        matrix,
        triple,
        hash,
    })
}

/// SHA-256 of the canonical input: the reduced matrix entries (or the sorted
/// bases) and the right-hand side, as compact JSON with sorted keys.
pub fn input_hash(m: &Matroid, matrix: Option<&RatMatrix>, b: Option<&[Rat]>) -> String {
    let mut canon = match matrix {
        Some(a) => json!({ "matrix": a }),
        None => json!({ "n": m.size(), "bases": m.bases() }),
    };
    if let Some(b) = b {
        canon["b"] = json!(b);
    }
    hex::encode(Sha256::digest(canon.to_string().as_bytes()))
}

fn cutoff(job: &JobSpec, default: usize) -> usize {
    job.cutoff.unwrap_or(default)
}

fn order_arg(job: &JobSpec, ground: ElemSet) -> Result<LinearOrder> {
    match job.show.as_ref().or(job.order.as_ref()) {
        Some(csv) => Ok(parse_order_csv(csv, ground)?),
        None => Ok(LinearOrder::natural(ground)),
    }
}

fn ideal_json(ideal: &SquarefreeMonomialIdeal) -> Value {
    json!({
        "display": ideal.to_string(),
        "generators": ideal.generators(),
    })
}

fn components_json(ideal: &SquarefreeMonomialIdeal) -> Value {
    let comps = primary_decomposition(ideal);
    json!(comps)
}

fn analyze(m: &Matroid) -> Value {
    let lattice = m.flat_lattice();
    let flats: Vec<Value> = lattice
        .iter()
        .map(|(f, rank, mu)| json!({ "flat": f, "rank": rank, "mobius": mu }))
        .collect();
    let h = h_polynomial(m);
    let t = tutte(m);
    json!({
        "n": m.size(),
        "rank": m.rank(),
        "bases": m.bases(),
        "circuits": m.circuits(),
        "cocircuits": m.cocircuits(),
        "flats": flats,
        "mobius_number": lattice.mobius_number(),
        "loops": m.loops(),
        "coloops": m.coloops(),
        "components": m.connected_components(),
        "f_vector": f_vector(m),
        "h_polynomial": { "display": h.to_string(), "coeffs": h.coeffs() },
        "tutte": { "display": t.to_string(), "polynomial": t },
    })
}

fn require_matrix(input: &Loaded) -> Result<&RatMatrix> {
    input
        .matrix
        .as_ref()
        .ok_or_else(|| CliError::Usage("this command needs --matrix".into()))
}

fn ideal(input: &Loaded, job: &JobSpec) -> Result<Value> {
    let a = require_matrix(input)?;
    let m = &input.matroid;
    let order = order_arg(job, m.ground())?;
    // The ideal depends only on the row space.
    let forms = cocircuit_forms(&a.row_space_basis())?;
    let polys: Vec<_> = forms.iter().map(|f| f.homogenize()).collect();
    let ord = TermOrder::from_element_order(&order);
    let lt = initial_ideal_from_polys(matlin::VarSet::doubled(m.ground()), &polys, &ord)?;
    let rule = initial_ideal(m, &order);
    let report = buchberger_check(&polys, &ord);
    let listed: Vec<Value> = forms
        .iter()
        .zip(&polys)
        .map(|(f, p)| {
            json!({
                "cocircuit": f.support(),
                "form": f.to_string(),
                "homogenized": p.to_string(),
                "polynomial": p,
            })
        })
        .collect();
    Ok(json!({
        "order": order,
        "forms": listed,
        "initial_ideal": ideal_json(&lt),
        "matches_cocircuit_rule": lt == rule,
        "minimal_generators": minimally_generated(&lt),
        "buchberger": {
            "s_pairs_reduce": report.s_pairs_reduce,
            "terms_nondividing": report.terms_nondividing,
            "passed": report.passed(),
        },
        "components": components_json(&lt),
    }))
}

/// Removing any generator gives a strictly smaller ideal.
pub fn minimally_generated(ideal: &SquarefreeMonomialIdeal) -> bool {
    let gens = ideal.generators();
    (0..gens.len()).all(|i| {
        let rest: Vec<_> = gens
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| *g)
            .collect();
        !SquarefreeMonomialIdeal::new(ideal.vertices(), rest).contains(gens[i])
    })
}

fn initial_ideals(m: &Matroid, job: &JobSpec) -> Result<Value> {
    if job.show.is_some() || job.order.is_some() {
        let order = order_arg(job, m.ground())?;
        let ideal = initial_ideal(m, &order);
        return Ok(json!({
            "order": order,
            "initial_ideal": ideal_json(&ideal),
            "components": components_json(&ideal),
            "multidegree": multidegree(&ideal)?.to_string(),
            "bidegree": bidegree(&ideal)?.display_in("s", "t"),
        }));
    }
    let census = enumerate_initial_ideals(m, cutoff(job, LINEAR_SWEEP_CUTOFF))?;
    let mut body = json!({
        "count": census.count(),
        "bound": census.bound,
        "gap": census.bound - census.count() as u64,
    });
    if !job.count {
        body["ideals"] = census
            .ideals
            .iter()
            .map(|(ideal, order)| json!({ "order": order, "initial_ideal": ideal_json(ideal) }))
            .collect();
    }
    Ok(body)
}

fn betti(m: &Matroid, job: &JobSpec) -> Result<Value> {
    let order = order_arg(job, m.ground())?;
    let ideal = initial_ideal(m, &order);
    let predicted = betti_from_mobius(m);
    let computed = hochster_betti(&ideal);
    let coarse = computed.coarsen()?;
    let cm = cm_from_betti(&ideal, &computed);
    let homology = reduced_homology(&external_activity_complex(m, &order));
    Ok(json!({
        "order": order,
        "initial_ideal": ideal_json(&ideal),
        "mobius_prediction": predicted,
        "hochster": computed,
        "agrees": coarse == predicted,
        "totals": computed.totals(),
        "graded": computed.graded(),
        "graded_display": computed.graded_display(),
        "cohen_macaulay": cm,
        // Exploratory: no expected value is asserted for these.
        "external_activity_complex_homology": homology_json(&homology),
    }))
}

fn homology_json(ranks: &[usize]) -> Value {
    ranks
        .iter()
        .enumerate()
        .filter(|(_, &r)| r > 0)
        .map(|(k, &r)| json!({ "dim": k as i64 - 1, "rank": r }))
        .collect()
}

fn polytope(m: &Matroid, job: &JobSpec) -> Result<Value> {
    let p = cocircuit_polytope(m, cutoff(job, LINEAR_SWEEP_CUTOFF))?;
    let bound = vertex_bound(m);
    let summand = match summand_check(m) {
        Ok(()) => json!({ "passed": true }),
        Err((s, a, b)) => json!({ "passed": false, "witness": { "S": s, "a": a, "b": b } }),
    };
    let mut body = json!({
        "polytope": p,
        "vertex_count": p.vertices().len(),
        "bound": bound,
        "gap": bound - p.vertices().len() as u64,
        "dimension": p.dimension()?,
        "submodular": p.submodularity_violation().is_none(),
        "summand_check": summand,
    });
    if job.show.is_some() || job.order.is_some() {
        let order = order_arg(job, m.ground())?;
        let v = vertex_for_order(m, &order);
        body["order"] = json!(order);
        body["vertex"] = json!(v);
        body["vertex_support"] = json!(support(m.ground(), &v));
    }
    Ok(body)
}

fn tutte_report(m: &Matroid, job: &JobSpec) -> Result<Value> {
    let order = order_arg(job, m.ground())?;
    let table = ActivityTable::new(m);
    let t = tutte(m);
    let via = tutte_from_table(&table, &order);
    Ok(json!({
        "tutte": { "display": t.to_string(), "polynomial": t },
        "order": order,
        "activities": table.splits(&order),
        "via_activities": via.to_string(),
        "agrees": via == t,
    }))
}

fn affine(input: &Loaded, job: &JobSpec) -> Result<Value> {
    let t = input
        .triple
        .as_ref()
        .ok_or_else(|| CliError::Usage("affine needs --matrix and --b".into()))?;
    let lv = lasvergnas_tutte(t)?;
    let (top, bottom) = affine_bidegrees(t)?;
    let mut body = json!({
        "hom": {
            "rank": t.hom().rank(),
            "bases": t.hom().bases(),
            "cocircuits": t.hom().cocircuits(),
        },
        "rank": t.m().rank(),
        "rank_contracted": t.mprime().rank(),
        "lasvergnas": { "display": lv.to_string(), "polynomial": lv },
        "bidegrees": {
            "zero_last": top.display_in("s", "t"),
            "zero_first": bottom.display_in("s", "t"),
        },
    });
    if job.count {
        let census = enumerate_affine_initial_ideals(t, cutoff(job, AFFINE_SWEEP_CUTOFF))?;
        body["counts"] = json!({
            "affine": census.affine.count(),
            "hom": census.hom.count(),
            "bound": census.hom.bound,
        });
    }
    if let Some(csv) = job.show.as_ref().or(job.order.as_ref()) {
        let order = affine_order(csv, t.ground())?;
        let ideal = initial_ideal_affine(t, &order);
        let deg = bidegree(&ideal)?;
        let family = match order.position(0) {
            0 => "zero_first",
            p if p == order.len() - 1 => "zero_last",
            _ => "intermediate",
        };
        let mut comps = dehomogenized_components(&initial_ideal(t.hom(), &order));
        comps.sort();
        let mut own = primary_decomposition(&ideal);
        own.sort();
        body["show"] = json!({
            "order": order,
            "family": family,
            "initial_ideal": ideal_json(&ideal),
            "components": components_json(&ideal),
            "consistent_with_hom": own == comps,
            "multidegree": multidegree(&ideal)?.to_string(),
            "bidegree": deg.display_in("s", "t"),
        });
    }
    Ok(body)
}

/// An order on `0..=n`; without 0 it is appended last.
fn affine_order(csv: &str, ground: ElemSet) -> Result<LinearOrder> {
    match parse_order_csv(csv, ground.with(0)) {
        Ok(o) => Ok(o),
        Err(first) => {
            let plain = parse_order_csv(csv, ground).map_err(|_| first)?;
            Ok(plain.with_inserted(0, plain.len())?)
        }
    }
}
