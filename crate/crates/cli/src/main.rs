//! Command-line surface for the exact invariants of torus orbit spaces of
//! the Grassmannians G(n,2): stratum enumeration, admissible polytopes, the
//! fundamental table, moment-map diagnostics, parameter-space transition
//! checks, and homology profiles.
//!
//! Exit codes: 0 on success, 2 on a validation error (bad flags or inputs),
//! 3 on an internal assertion failure (including a failed report).

use clap::{Parser, Subcommand};
use grastra::exact::{GaussianRational, Rational};
use grastra::homology::{
    assemble_pair, curated_complex, homology, join_s3_cp2_profile, orbit_space_homology,
    pair_v21_from_l2, pair_v2_from_v1, pair_v3_from_v2, quotient_by_g42_homology,
    quotient_by_g42_homology_mod2, uct_consistent, v2_complex, v3_complex, Coefficients,
    HomologyProfile, Stage,
};
use grastra::moment::{is_regular_value, moment, prisms, MomentPoint};
use grastra::params::{
    embed_family, embed_five, embedding_identities_hold, euler_characteristic_universal,
    representative_of_params, sample_main_triples, tilde_transition_12_13, transition,
    transition_12_13_closed, virtual_space, Chart, CurveDomain, FamilyShape,
    ProjectivePoint1, Slot,
};
use grastra::plucker::{all_pairs, plucker_coordinates, support, PlaneMatrix, PluckerVector};
use grastra::polytope::{classify, polytope_of, PolytopeType};
use grastra::strata::{
    enumerate_admissible_sets, is_admissible, representative, sample_gaussian, stratum_record,
    AdmissibleSet,
};
use grastra::symmetry::fundamental_table;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "grastra",
    version,
    about = "Exact combinatorics, geometry and homology of G(n,2)/T^n"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate the admissible sets (strata) for a given n.
    Strata {
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Emit only the totals and the census by polytope type.
        #[arg(long)]
        summary: bool,
        /// Plain table instead of JSON.
        #[arg(long)]
        tsv: bool,
    },
    /// Admissible polytopes: census over all strata, or one stratum's data.
    Polytopes {
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// A stratum as a JSON list of pairs, e.g. '[[1,2],[1,3]]'.
        #[arg(long)]
        sigma: Option<String>,
        #[arg(long)]
        tsv: bool,
    },
    /// The table of fundamental strata (one row per symmetry orbit).
    Fundamental {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long)]
        tsv: bool,
    },
    /// Moment-map diagnostics: a stratum's data, or a randomized oracle run.
    Moment {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long)]
        sigma: Option<String>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Space-of-parameters checks and tables.
    Params {
        #[command(subcommand)]
        cmd: ParamsCmd,
    },
    /// Homology profile of one of the named spaces.
    Homology {
        /// One of g42, g52, V1, L1, L2, V21, V2, X.
        #[arg(long)]
        space: String,
        /// Coefficients: z or z2.
        #[arg(long, default_value = "z")]
        coeff: String,
    },
    /// Run the full acceptance suite; nonzero exit on any mismatch.
    ReportAll {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long)]
        tsv: bool,
    },
}

#[derive(Subcommand)]
enum ParamsCmd {
    /// Verify the closed transition formula, the cocycle law and the
    /// extended transitions on virtual families.
    CheckTransitions {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// The virtual space of parameters of a stratum in a chart.
    Virtual {
        #[arg(long)]
        sigma: String,
        #[arg(long, default_value = "12")]
        chart: String,
    },
    /// Embed the plane given in a JSON file into (CP¹)⁵ and check the
    /// intersection identities.
    Embed {
        /// Path to a JSON file: five rows of two Gaussian-rational strings.
        #[arg(long)]
        matrix: String,
    },
}

enum CliError {
    Validation(String),
    Internal(String),
}

type CliResult<T> = Result<T, CliError>;

fn validation(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = std::panic::catch_unwind(move || run(cli));
    match outcome {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(CliError::Validation(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok(Err(CliError::Internal(msg))) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
        Err(_) => {
            eprintln!("internal error: assertion failure");
            ExitCode::from(3)
        }
    }
}

fn emit(command: &str, seed: Option<u64>, payload: Value) {
    let mut obj = serde_json::Map::new();
    obj.insert("command".into(), json!(command));
    if let Some(s) = seed {
        obj.insert("seed".into(), json!(s));
    }
    obj.insert("payload".into(), payload);
    println!("{}", Value::Object(obj));
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.cmd {
        Cmd::Strata { n, summary, tsv } => cmd_strata(n, summary, tsv),
        Cmd::Polytopes { n, sigma, tsv } => cmd_polytopes(n, sigma.as_deref(), tsv),
        Cmd::Fundamental { n, tsv } => cmd_fundamental(n, tsv),
        Cmd::Moment {
            n,
            sigma,
            samples,
            seed,
        } => cmd_moment(n, sigma.as_deref(), samples, seed),
        Cmd::Params { cmd } => match cmd {
            ParamsCmd::CheckTransitions { samples, seed } => cmd_check_transitions(samples, seed),
            ParamsCmd::Virtual { sigma, chart } => cmd_virtual(&sigma, &chart),
            ParamsCmd::Embed { matrix } => cmd_embed(&matrix),
        },
        Cmd::Homology { space, coeff } => cmd_homology(&space, &coeff),
        Cmd::ReportAll {
            n,
            seed,
            samples,
            tsv,
        } => cmd_report_all(n, seed, samples, tsv),
    }
}

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

fn parse_sigma(n: usize, text: &str) -> CliResult<AdmissibleSet> {
    let raw: Vec<[usize; 2]> = serde_json::from_str(text)
        .map_err(|e| validation(format!("--sigma must be a JSON list of pairs: {e}")))?;
    let pairs: BTreeSet<(usize, usize)> = raw.iter().map(|&[i, j]| (i.min(j), i.max(j))).collect();
    AdmissibleSet::new(n, pairs).map_err(|e| validation(format!("--sigma is not admissible: {e}")))
}

fn parse_chart(text: &str) -> CliResult<Chart> {
    let digits: Vec<usize> = text
        .chars()
        .filter_map(|c| c.to_digit(10).map(|d| d as usize))
        .collect();
    match digits.as_slice() {
        [i, j] if 1 <= *i && i < j && *j <= 5 => Ok((*i, *j)),
        _ => Err(validation(format!(
            "--chart must name two rows like `12`, got `{text}`"
        ))),
    }
}

fn parse_coefficients(text: &str) -> CliResult<Coefficients> {
    match text.to_ascii_lowercase().as_str() {
        "z" => Ok(Coefficients::Z),
        "z2" => Ok(Coefficients::Z2),
        other => Err(validation(format!("--coeff must be z or z2, got `{other}`"))),
    }
}

/// Deterministic split-mix generator; keeps the CLI free of extra
/// dependencies while staying reproducible per seed.
struct Rng(u64);

impl Rng {
    fn new(seed: u64) -> Self {
        Rng(seed.wrapping_add(0x9e37_79b9_7f4a_7c15))
    }

    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
}

/// A random rank-2 plane with entries from the fixed Gaussian-rational pool.
fn random_plane(rng: &mut Rng) -> PluckerVector {
    loop {
        let rows: Vec<[GaussianRational; 2]> = (0..5)
            .map(|_| [sample_gaussian(rng.next()), sample_gaussian(rng.next())])
            .collect();
        if let Ok(m) = PlaneMatrix::new(rows) {
            return plucker_coordinates(&m);
        }
    }
}

/// A random rational point of the open hypersimplex Δ°(5,2).  Every fourth
/// point is forced onto a prism hyperplane x_i + x_j = 1 to exercise the
/// singular verdicts.
fn random_interior_point(rng: &mut Rng, index: usize) -> MomentPoint {
    loop {
        let mut xs: Vec<Rational> = (0..4)
            .map(|_| Rational::new((rng.next() % 95 + 1) as i64, 97))
            .collect();
        if index % 4 == 0 {
            xs[1] = &Rational::one() - &xs[0];
        }
        let sum4 = xs
            .iter()
            .fold(Rational::zero(), |acc, x| &acc + x);
        let last = &Rational::from_int(2) - &sum4;
        if last.is_positive() && (&Rational::one() - &last).is_positive() {
            xs.push(last);
            let p = MomentPoint::new(xs);
            if p.in_open_hypersimplex() {
                return p;
            }
        }
    }
}

fn census(n: usize) -> CliResult<(usize, BTreeMap<String, usize>)> {
    let strata =
        enumerate_admissible_sets(n).map_err(|e| validation(format!("bad --n: {e}")))?;
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for sigma in &strata {
        let ty = classify(&polytope_of(sigma))
            .map_err(|e| CliError::Internal(format!("unclassifiable polytope: {e}")))?;
        *counts.entry(ty.as_str().to_string()).or_default() += 1;
    }
    Ok((strata.len(), counts))
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn cmd_strata(n: usize, summary: bool, tsv: bool) -> CliResult<()> {
    let strata =
        enumerate_admissible_sets(n).map_err(|e| validation(format!("bad --n: {e}")))?;
    if tsv {
        println!("pairs\ttype\tpolytope_dim\tdefect\tparam_dim");
        for sigma in &strata {
            let r = stratum_record(sigma);
            let ty = classify(&polytope_of(sigma))
                .map(|t| t.as_str().to_string())
                .unwrap_or_else(|_| "-".to_string());
            let pairs: Vec<String> = sigma.pairs().iter().map(|(i, j)| format!("{i}{j}")).collect();
            println!(
                "{}\t{}\t{}\t{}\t{}",
                pairs.join(","),
                ty,
                r.polytope_dim,
                r.defect,
                r.param_dim
            );
        }
        return Ok(());
    }
    let mut payload = serde_json::Map::new();
    payload.insert("n".into(), json!(n));
    payload.insert("total".into(), json!(strata.len()));
    if n == 5 {
        let (_, counts) = census(n)?;
        payload.insert("census".into(), json!(counts));
    }
    if !summary {
        let records: Vec<Value> = strata
            .iter()
            .map(|s| serde_json::to_value(stratum_record(s)).expect("serializable record"))
            .collect();
        payload.insert("strata".into(), Value::Array(records));
    }
    emit("strata", None, Value::Object(payload));
    Ok(())
}

fn cmd_polytopes(n: usize, sigma: Option<&str>, tsv: bool) -> CliResult<()> {
    match sigma {
        Some(text) => {
            let sigma = parse_sigma(n, text)?;
            let poly = polytope_of(&sigma);
            let ty = classify(&poly).map(|t| t.as_str().to_string()).ok();
            if tsv {
                println!("type\tdim\tvertices\tfacets\tnonsimple_vertices");
                println!(
                    "{}\t{}\t{}\t{}\t{}",
                    ty.as_deref().unwrap_or("-"),
                    poly.affine_dim(),
                    poly.vertex_count(),
                    poly.facets().len(),
                    poly.nonsimple_vertex_count()
                );
                return Ok(());
            }
            emit(
                "polytopes",
                None,
                json!({
                    "n": n,
                    "sigma": sigma,
                    "type": ty,
                    "dim": poly.affine_dim(),
                    "vertex_count": poly.vertex_count(),
                    "facet_count": poly.facets().len(),
                    "nonsimple_vertices": poly.nonsimple_vertex_count(),
                    "polytope": poly,
                }),
            );
            Ok(())
        }
        None => {
            let (total, counts) = census(n)?;
            if tsv {
                println!("type\tcount");
                for (ty, c) in &counts {
                    println!("{ty}\t{c}");
                }
                return Ok(());
            }
            emit(
                "polytopes",
                None,
                json!({ "n": n, "total": total, "census": counts }),
            );
            Ok(())
        }
    }
}

fn cmd_fundamental(n: usize, tsv: bool) -> CliResult<()> {
    let table = fundamental_table(n).map_err(|e| validation(format!("bad --n: {e}")))?;
    if tsv {
        print!("{}", table.to_tsv());
        return Ok(());
    }
    emit(
        "fundamental",
        None,
        serde_json::to_value(&table).expect("serializable table"),
    );
    Ok(())
}

fn cmd_moment(n: usize, sigma: Option<&str>, samples: usize, seed: u64) -> CliResult<()> {
    match sigma {
        Some(text) => {
            let sigma = parse_sigma(n, text)?;
            let p = plucker_coordinates(&representative(&sigma));
            let mu = moment(&p);
            emit(
                "moment",
                None,
                json!({
                    "n": n,
                    "sigma": sigma,
                    "moment": mu,
                    "dmu_rank": grastra::moment::dmu_rank(&p),
                    "regular_point": grastra::moment::is_regular_point(&p),
                    "polytope_dim": polytope_of(&sigma).affine_dim(),
                }),
            );
            Ok(())
        }
        None => {
            if n != 5 {
                return Err(validation("the randomized moment oracle runs with --n 5"));
            }
            let mut rng = Rng::new(seed);
            let mut failures = 0usize;
            for _ in 0..samples {
                let p = random_plane(&mut rng);
                let sup = support(&p);
                let poly = polytope_of(&sup);
                let ok = is_admissible(5, sup.pairs())
                    && poly.relative_interior_contains(&moment(&p).coords)
                    && grastra::moment::dmu_rank(&p) == poly.affine_dim();
                if !ok {
                    failures += 1;
                }
            }
            emit(
                "moment",
                Some(seed),
                json!({ "n": n, "checked": samples, "failures": failures, "ok": failures == 0 }),
            );
            if failures > 0 {
                return Err(CliError::Internal("moment oracle mismatches".into()));
            }
            Ok(())
        }
    }
}

fn check_transitions(samples: usize, seed: u64) -> (Value, bool) {
    // Closed transition formula against the representative round trip.
    let mut closed_failures = 0usize;
    for t in sample_main_triples(seed, samples) {
        match (transition((1, 2), (1, 3), &t), transition_12_13_closed(&t)) {
            (Ok(a), Ok(b)) if a == b => {}
            _ => closed_failures += 1,
        }
    }

    // Cocycle law on twenty deterministic chart triples.
    let charts = all_pairs(5);
    let mut cocycle_failures = 0usize;
    let mut cocycle_checked = 0usize;
    let probes = sample_main_triples(seed.wrapping_add(1), 2);
    'outer: for &a in &charts {
        for &b in &charts {
            for &c in &charts {
                if a == b || b == c || a == c {
                    continue;
                }
                if cocycle_checked == 20 {
                    break 'outer;
                }
                cocycle_checked += 1;
                for t in &probes {
                    let via = transition(a, b, t).and_then(|u| transition(b, c, &u));
                    let direct = transition(a, c, t);
                    if direct.is_err() || via.ok() != direct.ok() {
                        cocycle_failures += 1;
                    }
                }
            }
        }
    }

    // Extended transitions map tabulated families between the charts.
    let mut tilde_checked = 0usize;
    let mut tilde_failures = 0usize;
    for sigma in enumerate_admissible_sets(5).expect("n = 5 in range") {
        let Ok(fam12) = virtual_space(&sigma, (1, 2)) else {
            continue;
        };
        let Ok(fam13) = virtual_space(&sigma, (1, 3)) else {
            continue;
        };
        for u in fam12.shape.sample(seed.wrapping_add(2), 25) {
            tilde_checked += 1;
            if !fam13.shape.contains(&tilde_transition_12_13(&u)) {
                tilde_failures += 1;
            }
        }
    }

    let ok = closed_failures == 0 && cocycle_failures == 0 && tilde_failures == 0;
    (
        json!({
            "closed_formula": { "checked": samples, "failures": closed_failures },
            "cocycle": { "chart_triples": cocycle_checked, "failures": cocycle_failures },
            "tilde_families": { "checked": tilde_checked, "failures": tilde_failures },
            "ok": ok,
        }),
        ok,
    )
}

fn cmd_check_transitions(samples: usize, seed: u64) -> CliResult<()> {
    let (payload, ok) = check_transitions(samples, seed);
    emit("params check-transitions", Some(seed), payload);
    if ok {
        Ok(())
    } else {
        Err(CliError::Internal("transition checks failed".into()))
    }
}

fn slot_json(slot: &Slot) -> Value {
    match slot {
        Slot::Const(p) => json!(p),
        Slot::Param => json!("(c : c')"),
        Slot::ParamRev => json!("(c' : c)"),
    }
}

fn domain_json(d: &CurveDomain) -> Value {
    match d {
        CurveDomain::Full => json!("full"),
        CurveDomain::MinusA => json!("minus_a"),
    }
}

fn shape_json(shape: &FamilyShape) -> Value {
    match shape {
        FamilyShape::Point(u) => json!({ "kind": "point", "value": u.to_string() }),
        FamilyShape::Curve { slots, domain } => json!({
            "kind": "curve",
            "slots": slots.iter().map(slot_json).collect::<Vec<_>>(),
            "domain": domain_json(domain),
        }),
        FamilyShape::DivisorCurve { domain } => json!({
            "kind": "divisor_curve",
            "domain": domain_json(domain),
        }),
        FamilyShape::CubicSlice { free_slot } => {
            json!({ "kind": "cubic_slice", "free_slot": free_slot })
        }
        FamilyShape::Main => json!({ "kind": "main" }),
        FamilyShape::Union(parts) => json!({
            "kind": "union",
            "parts": parts.iter().map(shape_json).collect::<Vec<_>>(),
        }),
    }
}

fn cmd_virtual(sigma: &str, chart: &str) -> CliResult<()> {
    let sigma = parse_sigma(5, sigma)?;
    let chart = parse_chart(chart)?;
    let fam = virtual_space(&sigma, chart)
        .map_err(|e| validation(format!("no tabulated family: {e}")))?;
    emit(
        "params virtual",
        None,
        json!({
            "sigma": fam.sigma,
            "chart": format!("{}{}", chart.0, chart.1),
            "shape": shape_json(&fam.shape),
        }),
    );
    Ok(())
}

fn cmd_embed(path: &str) -> CliResult<()> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| validation(format!("cannot read --matrix file `{path}`: {e}")))?;
    let raw: Vec<[String; 2]> = serde_json::from_str(&text)
        .map_err(|e| validation(format!("--matrix must hold five rows of two entries: {e}")))?;
    if raw.len() != 5 {
        return Err(validation("--matrix must have exactly five rows"));
    }
    let mut rows = Vec::with_capacity(5);
    for r in &raw {
        let a: GaussianRational = r[0]
            .parse()
            .map_err(|e| validation(format!("bad entry `{}`: {e}", r[0])))?;
        let b: GaussianRational = r[1]
            .parse()
            .map_err(|e| validation(format!("bad entry `{}`: {e}", r[1])))?;
        rows.push([a, b]);
    }
    let m = PlaneMatrix::new(rows).map_err(|e| validation(format!("not a plane: {e}")))?;
    let p = plucker_coordinates(&m);
    let x = embed_five(&p).map_err(|e| validation(format!("not a main-stratum plane: {e}")))?;
    emit(
        "params embed",
        None,
        json!({
            "point": x,
            "identities_hold": embedding_identities_hold(&x),
        }),
    );
    Ok(())
}

fn cmd_homology(space: &str, coeff: &str) -> CliResult<()> {
    let c = parse_coefficients(coeff)?;
    let profile = match space.to_ascii_lowercase().as_str() {
        "g42" => orbit_space_homology(4, c),
        "g52" => orbit_space_homology(5, c),
        "v1" => homology(&curated_complex(Stage::V1), c),
        "l1" => homology(&curated_complex(Stage::L1), c),
        "l2" => homology(&curated_complex(Stage::L2), c),
        "v21" => homology(&curated_complex(Stage::V21), c),
        "v2" => homology(&v2_complex(), c),
        "x" => match c {
            Coefficients::Z => quotient_by_g42_homology(),
            Coefficients::Z2 => quotient_by_g42_homology_mod2(),
        },
        other => {
            return Err(validation(format!(
                "--space must be one of g42, g52, V1, L1, L2, V21, V2, X; got `{other}`"
            )))
        }
    };
    emit(
        "homology",
        None,
        json!({ "space": space, "coeff": coeff, "profile": profile }),
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// The acceptance suite (report-all)
// ---------------------------------------------------------------------------

struct Criterion {
    index: usize,
    name: &'static str,
    pass: bool,
    detail: Value,
}

fn expected_census() -> BTreeMap<String, usize> {
    [
        ("HYPERSIMPLEX", 1),
        ("K9", 10),
        ("K8", 15),
        ("K7", 10),
        ("OCTAHEDRON", 5),
        ("PRISM6", 10),
        ("PYRAMID5", 30),
        ("TETRAHEDRON", 5),
        ("SQUARE", 15),
        ("TRIANGLE", 30),
        ("EDGE", 30),
        ("VERTEX", 10),
    ]
    .iter()
    .map(|&(k, v)| (k.to_string(), v))
    .collect()
}

fn criterion_census() -> Criterion {
    let start = Instant::now();
    let result = census(5);
    let elapsed = start.elapsed();
    let (total, counts) = match result {
        Ok(x) => x,
        Err(_) => {
            return Criterion {
                index: 1,
                name: "stratum census",
                pass: false,
                detail: json!({"error": "enumeration failed"}),
            }
        }
    };
    let pass = total == 171 && counts == expected_census() && elapsed.as_secs_f64() < 1.0;
    Criterion {
        index: 1,
        name: "stratum census",
        pass,
        detail: json!({
            "total": total,
            "census": counts,
            "elapsed_ms": elapsed.as_millis() as u64,
        }),
    }
}

fn expected_stabilizer(ty: PolytopeType) -> &'static [usize] {
    match ty {
        PolytopeType::Hypersimplex => &[120],
        PolytopeType::K9 => &[12],
        PolytopeType::K8 => &[8],
        PolytopeType::K7 => &[12],
        PolytopeType::Octahedron => &[24],
        PolytopeType::Prism6 => &[12],
        PolytopeType::Pyramid5 => &[4],
        PolytopeType::Tetrahedron => &[24],
        PolytopeType::Square => &[8],
        PolytopeType::Triangle => &[6, 12],
        PolytopeType::Edge => &[4],
        PolytopeType::Vertex => &[12],
    }
}

fn criterion_fundamental() -> Criterion {
    let table = fundamental_table(5).expect("n = 5 in range");
    let mut pass = table.orbit_count() == 13;
    let mut stab_by_type: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for row in &table.rows {
        let expected_q = if matches!(row.p, 3 | 4 | 6) { 2 } else { 1 };
        pass &= row.q_p == expected_q;
        pass &= row.orbit_size * row.stabilizer_order == 120;
        stab_by_type
            .entry(row.polytope_type.as_str().to_string())
            .or_default()
            .push(row.stabilizer_order);
    }
    for (ty, mut orders) in stab_by_type.clone() {
        orders.sort_unstable();
        let expected: Vec<usize> = table
            .rows
            .iter()
            .find(|r| r.polytope_type.as_str() == ty)
            .map(|r| expected_stabilizer(r.polytope_type).to_vec())
            .unwrap_or_default();
        pass &= orders == expected;
    }
    Criterion {
        index: 2,
        name: "fundamental strata",
        pass,
        detail: json!({ "orbits": table.orbit_count(), "stabilizers": stab_by_type }),
    }
}

fn criterion_oracle(seed: u64) -> Criterion {
    let mut rng = Rng::new(seed);
    let mut failures = 0usize;
    for _ in 0..500 {
        let p = random_plane(&mut rng);
        let sup = support(&p);
        let poly = polytope_of(&sup);
        let ok = is_admissible(5, sup.pairs())
            && poly.relative_interior_contains(&moment(&p).coords)
            && grastra::moment::dmu_rank(&p) == poly.affine_dim();
        if !ok {
            failures += 1;
        }
    }
    Criterion {
        index: 3,
        name: "moment oracle on random planes",
        pass: failures == 0,
        detail: json!({ "checked": 500, "failures": failures }),
    }
}

fn criterion_singular_loci(seed: u64) -> Criterion {
    let expected: &[(PolytopeType, usize)] = &[
        (PolytopeType::Hypersimplex, 10),
        (PolytopeType::K9, 9),
        (PolytopeType::K8, 4),
        (PolytopeType::K7, 1),
        (PolytopeType::Octahedron, 6),
        (PolytopeType::Pyramid5, 1),
        (PolytopeType::Prism6, 0),
        (PolytopeType::Tetrahedron, 0),
    ];
    let table = fundamental_table(5).expect("n = 5 in range");
    let mut nonsimple_ok = true;
    let mut nonsimple: BTreeMap<String, usize> = BTreeMap::new();
    for &(ty, want) in expected {
        let row = table
            .rows
            .iter()
            .find(|r| r.polytope_type == ty)
            .expect("every type occurs");
        let got = polytope_of(&row.generator).nonsimple_vertex_count();
        nonsimple.insert(ty.as_str().to_string(), got);
        nonsimple_ok &= got == want;
    }

    let prism_polytopes = prisms();
    let mut rng = Rng::new(seed.wrapping_add(3));
    let mut verdict_failures = 0usize;
    for index in 0..200 {
        let x = random_interior_point(&mut rng, index);
        let by_oracle = is_regular_value(&x).expect("interior point");
        let by_prisms = !prism_polytopes
            .iter()
            .any(|(_, _, p)| p.relative_interior_contains(&x.coords));
        if by_oracle != by_prisms {
            verdict_failures += 1;
        }
    }
    Criterion {
        index: 4,
        name: "singular loci",
        pass: nonsimple_ok && verdict_failures == 0,
        detail: json!({
            "nonsimple_vertices": nonsimple,
            "regular_value_samples": 200,
            "verdict_failures": verdict_failures,
        }),
    }
}

fn criterion_transitions(samples: usize, seed: u64) -> Criterion {
    let (detail, pass) = check_transitions(samples.max(100), seed);
    Criterion {
        index: 5,
        name: "transition calculus",
        pass,
        detail,
    }
}

fn criterion_embedding(seed: u64) -> Criterion {
    let mut point_failures = 0usize;
    for t in sample_main_triples(seed.wrapping_add(4), 100) {
        let ok = representative_of_params((1, 2), &t)
            .ok()
            .map(|m| plucker_coordinates(&m))
            .and_then(|p| embed_five(&p).ok())
            .is_some_and(|x| embedding_identities_hold(&x));
        if !ok {
            point_failures += 1;
        }
    }
    let mut family_checked = 0usize;
    let mut family_failures = 0usize;
    let probes = [
        ProjectivePoint1::from_int(2, 1),
        ProjectivePoint1::from_int(5, 3),
        ProjectivePoint1::from_int(-3, 4),
        ProjectivePoint1::from_int(7, 2),
    ];
    for sigma in enumerate_admissible_sets(5).expect("n = 5 in range") {
        let Ok(fam) = embed_family(&sigma, (1, 2)) else {
            continue;
        };
        for c in &probes {
            if let Some(x) = fam.eval(c) {
                family_checked += 1;
                if !embedding_identities_hold(&x) {
                    family_failures += 1;
                }
            }
        }
    }
    let chi = euler_characteristic_universal();
    Criterion {
        index: 6,
        name: "embedding identities",
        pass: point_failures == 0 && family_failures == 0 && family_checked == 140 && chi == 7,
        detail: json!({
            "points": { "checked": 100, "failures": point_failures },
            "families": { "checked": family_checked, "failures": family_failures },
            "euler_characteristic": chi,
        }),
    }
}

fn criterion_stagewise() -> Criterion {
    let start = Instant::now();
    let v1 = homology(&curated_complex(Stage::V1), Coefficients::Z);
    let l1 = homology(&curated_complex(Stage::L1), Coefficients::Z);
    let l2 = homology(&curated_complex(Stage::L2), Coefficients::Z);
    let v21_z2 = homology(&curated_complex(Stage::V21), Coefficients::Z2);
    let v2 = homology(&v2_complex(), Coefficients::Z);
    let elapsed = start.elapsed();
    let pass = v1 == HomologyProfile::free(&[(0, 1), (3, 1), (5, 5)])
        && l1 == HomologyProfile::free(&[(0, 1), (3, 10)])
        && l2 == HomologyProfile::free(&[(0, 1), (4, 15)])
        && v21_z2 == HomologyProfile::free(&[(0, 1), (4, 1), (5, 6), (6, 10)])
        && v2.free_rank(5) == 6
        && v2.torsion(5) == [2]
        && v2.free_rank(6) == 5
        && v2.free_rank(0) == 1
        && v2.groups().len() == 3
        && elapsed.as_secs_f64() < 10.0;
    Criterion {
        index: 7,
        name: "stagewise homology",
        pass,
        detail: json!({
            "V1": v1, "L1": l1, "L2": l2, "V21_z2": v21_z2, "V2": v2,
            "elapsed_ms": elapsed.as_millis() as u64,
        }),
    }
}

fn criterion_final_homology() -> Criterion {
    let g52 = orbit_space_homology(5, Coefficients::Z);
    let g52_z2 = orbit_space_homology(5, Coefficients::Z2);
    let g42 = orbit_space_homology(4, Coefficients::Z);
    let x = quotient_by_g42_homology();
    let join = join_s3_cp2_profile();
    let g52_expected = g52.groups().len() == 3
        && g52.free_rank(0) == 1
        && g52.free_rank(8) == 1
        && g52.free_rank(5) == 0
        && g52.torsion(5) == [2];
    let pass = g52_expected
        && g52_z2 == HomologyProfile::free(&[(0, 1), (5, 1), (6, 1), (8, 1)])
        && g42 == HomologyProfile::free(&[(0, 1), (5, 1)])
        && x == HomologyProfile::free(&[(0, 1), (6, 1), (8, 1)])
        && x == join;
    Criterion {
        index: 8,
        name: "final homology",
        pass,
        detail: json!({ "g52": g52, "g52_z2": g52_z2, "g42": g42, "X": x, "join": join }),
    }
}

fn criterion_properties() -> Criterion {
    // Building every curated complex asserts the boundary-square-zero law.
    for stage in [
        Stage::V1,
        Stage::L1,
        Stage::L2,
        Stage::V21RelL2,
        Stage::V21,
        Stage::V32,
    ] {
        let _ = curated_complex(stage);
    }
    let _ = v2_complex();
    let _ = v3_complex();

    let assembled = assemble_pair(&pair_v21_from_l2())
        .and_then(|h21| {
            let h2 = assemble_pair(&pair_v2_from_v1())?;
            let h3 = assemble_pair(&pair_v3_from_v2())?;
            Ok((h21, h2, h3))
        })
        .ok();
    let assembly_ok = assembled.as_ref().is_some_and(|(h21, h2, h3)| {
        *h21 == homology(&curated_complex(Stage::V21), Coefficients::Z)
            && *h2 == homology(&v2_complex(), Coefficients::Z)
            && *h3 == orbit_space_homology(5, Coefficients::Z)
    });

    let uct_ok = [
        (
            orbit_space_homology(4, Coefficients::Z),
            orbit_space_homology(4, Coefficients::Z2),
        ),
        (
            orbit_space_homology(5, Coefficients::Z),
            orbit_space_homology(5, Coefficients::Z2),
        ),
        (
            homology(&v2_complex(), Coefficients::Z),
            homology(&v2_complex(), Coefficients::Z2),
        ),
        (
            homology(&curated_complex(Stage::V21), Coefficients::Z),
            homology(&curated_complex(Stage::V21), Coefficients::Z2),
        ),
        (quotient_by_g42_homology(), quotient_by_g42_homology_mod2()),
    ]
    .iter()
    .all(|(z, z2)| uct_consistent(z, z2));

    let top_ok = [4usize, 5].iter().all(|&n| {
        let h = orbit_space_homology(n, Coefficients::Z);
        let d = 3 * n - 7;
        h.free_rank(d) == 1 && h.torsion(d).is_empty() && h.max_degree() == d
    });

    Criterion {
        index: 9,
        name: "property suite",
        pass: assembly_ok && uct_ok && top_ok,
        detail: json!({
            "boundary_square_zero": true,
            "pair_assembly_matches": assembly_ok,
            "universal_coefficients": uct_ok,
            "top_class": top_ok,
        }),
    }
}

fn cmd_report_all(n: usize, seed: u64, samples: usize, tsv: bool) -> CliResult<()> {
    if n != 5 {
        return Err(validation("the acceptance suite is defined for --n 5"));
    }
    let criteria = vec![
        criterion_census(),
        criterion_fundamental(),
        criterion_oracle(seed),
        criterion_singular_loci(seed),
        criterion_transitions(samples, seed),
        criterion_embedding(seed),
        criterion_stagewise(),
        criterion_final_homology(),
        criterion_properties(),
    ];
    let all_pass = criteria.iter().all(|c| c.pass);
    if tsv {
        for c in &criteria {
            println!(
                "criterion {} ({}): {}",
                c.index,
                c.name,
                if c.pass { "PASS" } else { "FAIL" }
            );
        }
    } else {
        let results: Vec<Value> = criteria
            .iter()
            .map(|c| {
                json!({
                    "criterion": c.index,
                    "name": c.name,
                    "pass": c.pass,
                    "detail": c.detail,
                })
            })
            .collect();
        emit(
            "report-all",
            Some(seed),
            json!({ "results": results, "ok": all_pass }),
        );
    }
    if all_pass {
        Ok(())
    } else {
        Err(CliError::Internal("acceptance criteria failed".into()))
    }
}
