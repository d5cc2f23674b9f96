//! The scenario registry: every verified claim is bound to an executable
//! check with an expected value, a provenance tag, and budget handling.
//! Scenarios either pass, fail with details, error out, or abort on
//! budget; there are no silent partial results.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;
use serde_json::{json, Value};

use comvar::catalog::{
    appendix_cases, build_cut_components, build_family_f, build_gl2_comm, build_mixed,
    build_sl2_comm, build_sl2_nilcomm, build_sl3_nilcomm, build_sl3_u_comm, AppendixCheck,
    FamilyLabel, VarietyId,
};
use comvar::charseries::{
    character_series, decompose_good_filtration, partition_count, total_multiplicity,
};
use comvar::oracle::{
    hilbert_function_by_evaluation, jacobian_rank_dimension, parametrizations, sample_points,
};
use comvar::{
    buchberger, hilbert_series, ideal_equal_radical, ideal_member, intersect_ideals, normal_form,
    parse_polynomial, radical_member, Error, FieldSpec, GbConfig, GroebnerBasis,
    IdealPresentation, Polynomial, Scalar,
};

use crate::config::RunConfig;
use crate::report::{EngineStats, Report, Status, Summary, SuiteReport};

pub struct Outcome {
    pub status: Status,
    pub measured: Value,
    pub expected: Value,
    pub seeds: Vec<u64>,
    pub engine: EngineStats,
    pub detail: Option<String>,
}

impl Outcome {
    fn compare(measured: Value, expected: Value) -> Outcome {
        let status = if measured == expected {
            Status::Pass
        } else {
            Status::Fail
        };
        Outcome {
            status,
            measured,
            expected,
            seeds: Vec::new(),
            engine: EngineStats::default(),
            detail: None,
        }
    }

    fn with_seeds(mut self, seeds: Vec<u64>) -> Outcome {
        self.seeds = seeds;
        self
    }

    fn with_engine(mut self, engine: EngineStats) -> Outcome {
        self.engine = engine;
        self
    }

    fn with_detail(mut self, detail: Option<String>) -> Outcome {
        self.detail = detail;
        self
    }
}

type Runner = fn(&RunConfig) -> Result<Outcome, Error>;

pub struct ScenarioDef {
    pub id: &'static str,
    pub claim: &'static str,
    pub provenance: &'static str,
    /// Which engine and oracle operations the scenario drives.
    pub method: &'static str,
    pub heavy: bool,
    /// A budget abort on this scenario does not fail the suite.
    pub abort_ok: bool,
    /// Participates in `--certify-q` reruns over the rationals.
    pub field_sensitive: bool,
    runner: Runner,
}

/// Claim keys with human-readable statements, used by the audit command.
pub const CLAIMS: &[(&str, &str)] = &[
    (
        "dims.groebner",
        "symbolic dimensions: r+2 (traceless 2x2), r+1 (their nilpotent cone), 2r+2 (full 2x2), 2r+1 (lower-triangular 3x3)",
    ),
    (
        "nonradicality.witness",
        "x1*x2 + y1*z2 separates the generated nilpotent commuting ideal from its radical at r=2",
    ),
    (
        "appendix.obligations",
        "all inductive membership and non-zero-divisor obligations hold for r = 2..4",
    ),
    (
        "hypersurface.cut",
        "the y1+z1 cut decomposes into the three listed components with the stated pairwise intersections",
    ),
    (
        "character.series",
        "graded dimensions of the nilpotent commuting tuples match the partition-weighted character sizes",
    ),
    (
        "good.filtration",
        "highest-weight multiplicities across all degrees equal the partition counts",
    ),
    (
        "sl3.nilcone.dimension",
        "nilpotent commuting tuples of traceless 3x3 matrices have dimension 2r+4",
    ),
    (
        "subregular.codimension",
        "both sliced subregular components measure 2r+2, codimension 2 in the ambient 2r+4",
    ),
    (
        "mixed.decomposition",
        "mixed tuples decompose into the all-nilpotent and zero-prefix components of dimensions i+j+1 and j+2",
    ),
    (
        "gl2.splitting",
        "the traceless-part/trace splitting is a two-sided inverse pair carrying relations onto relations",
    ),
    (
        "engine.selfcert",
        "basis uniqueness, S-polynomial certificates, radical/plain agreement on determinantal ideals, field-independent dimensions",
    ),
];

pub fn registry() -> Vec<ScenarioDef> {
    vec![
        ScenarioDef {
            id: "dim.sl2comm",
            claim: "dims.groebner",
            provenance: "paper",
            method: "buchberger + hilbert pole order",
            heavy: false,
            abort_ok: false,
            field_sensitive: true,
            runner: run_dim_sl2comm,
        },
        ScenarioDef {
            id: "dim.sl2nilcomm",
            claim: "dims.groebner",
            provenance: "paper",
            method: "buchberger + hilbert pole order",
            heavy: false,
            abort_ok: false,
            field_sensitive: true,
            runner: run_dim_sl2nilcomm,
        },
        ScenarioDef {
            id: "dim.gl2comm",
            claim: "dims.groebner",
            provenance: "paper",
            method: "buchberger + hilbert pole order",
            heavy: false,
            abort_ok: false,
            field_sensitive: true,
            runner: run_dim_gl2comm,
        },
        ScenarioDef {
            id: "dim.sl3ucomm",
            claim: "dims.groebner",
            provenance: "paper",
            method: "buchberger + hilbert pole order",
            heavy: false,
            abort_ok: false,
            field_sensitive: true,
            runner: run_dim_sl3ucomm,
        },
        ScenarioDef {
            id: "dim.sl3nilcomm",
            claim: "sl3.nilcone.dimension",
            provenance: "paper",
            method: "jacobian rank, two seeds",
            heavy: false,
            abort_ok: false,
            field_sensitive: false,
            runner: run_dim_sl3nilcomm,
        },
        ScenarioDef {
            id: "dim.subreg",
            claim: "subregular.codimension",
            provenance: "paper",
            method: "jacobian rank, two seeds",
            heavy: false,
            abort_ok: false,
            field_sensitive: false,
            runner: run_dim_subreg,
        },
        ScenarioDef {
            id: "dim.mixed",
            claim: "mixed.decomposition",
            provenance: "paper",
            method: "buchberger + hilbert pole order per component",
            heavy: false,
            abort_ok: false,
            field_sensitive: true,
            runner: run_dim_mixed,
        },
        ScenarioDef {
            id: "dim.familyf",
            claim: "appendix.obligations",
            provenance: "derived",
            method: "buchberger + hilbert pole order per member",
            heavy: false,
            abort_ok: false,
            field_sensitive: true,
            runner: run_dim_familyf,
        },
        ScenarioDef {
            id: "nonradical.witness",
            claim: "nonradicality.witness",
            provenance: "paper",
            method: "normal form vs radical membership",
            heavy: false,
            abort_ok: false,
            field_sensitive: true,
            runner: run_nonradical_witness,
        },
        ScenarioDef {
            id: "appendix.case1",
            claim: "appendix.obligations",
            provenance: "paper",
            method: "normal forms against chain bases",
            heavy: false,
            abort_ok: false,
            field_sensitive: true,
            runner: |c| run_appendix(c, "case1"),
        },
        ScenarioDef {
            id: "appendix.case2",
            claim: "appendix.obligations",
            provenance: "paper",
            method: "normal forms + radical memberships",
            heavy: false,
            abort_ok: false,
            field_sensitive: true,
            runner: |c| run_appendix(c, "case2"),
        },
        ScenarioDef {
            id: "appendix.nzd",
            claim: "appendix.obligations",
            provenance: "paper",
            method: "radical non-membership",
            heavy: false,
            abort_ok: false,
            field_sensitive: true,
            runner: |c| run_appendix(c, "nzd"),
        },
        ScenarioDef {
            id: "cut.decomposition",
            claim: "hypersurface.cut",
            provenance: "paper",
            method: "ideal intersection + radical equality",
            heavy: false,
            abort_ok: false,
            field_sensitive: true,
            runner: run_cut_decomposition,
        },
        ScenarioDef {
            id: "cut.v1v2-line",
            claim: "hypersurface.cut",
            provenance: "derived",
            method: "reduced basis comparison",
            heavy: false,
            abort_ok: false,
            field_sensitive: true,
            runner: run_cut_v1v2_line,
        },
        ScenarioDef {
            id: "cut.v2v3-origin",
            claim: "hypersurface.cut",
            provenance: "paper",
            method: "radical equality with the maximal ideal",
            heavy: false,
            abort_ok: false,
            field_sensitive: true,
            runner: run_cut_v2v3_origin,
        },
        ScenarioDef {
            id: "char.series.match",
            claim: "character.series",
            provenance: "paper",
            method: "evaluation ranks vs partition-weighted characters; symbolic series at r=1",
            heavy: false,
            abort_ok: false,
            field_sensitive: false,
            runner: run_char_series_match,
        },
        ScenarioDef {
            id: "char.multiplicity",
            claim: "good.filtration",
            provenance: "paper",
            method: "greedy character peeling",
            heavy: false,
            abort_ok: false,
            field_sensitive: false,
            runner: run_char_multiplicity,
        },
        ScenarioDef {
            id: "mixed.vanish",
            claim: "mixed.decomposition",
            provenance: "derived",
            method: "generator evaluation on component samples",
            heavy: false,
            abort_ok: false,
            field_sensitive: false,
            runner: run_mixed_vanish,
        },
        ScenarioDef {
            id: "mixed.intersection",
            claim: "mixed.decomposition",
            provenance: "paper",
            method: "radical equality of the component-sum",
            heavy: false,
            abort_ok: false,
            field_sensitive: true,
            runner: run_mixed_intersection,
        },
        ScenarioDef {
            id: "iso.gl2sl2.roundtrip",
            claim: "gl2.splitting",
            provenance: "trivial",
            method: "point-map composition on samples",
            heavy: false,
            abort_ok: false,
            field_sensitive: false,
            runner: run_iso_roundtrip,
        },
        ScenarioDef {
            id: "iso.gl2sl2.pullback",
            claim: "gl2.splitting",
            provenance: "derived",
            method: "substitution + normal forms",
            heavy: false,
            abort_ok: false,
            field_sensitive: true,
            runner: run_iso_pullback,
        },
        ScenarioDef {
            id: "engine.gb-unique",
            claim: "engine.selfcert",
            provenance: "derived",
            method: "permuted-generator basis comparison",
            heavy: false,
            abort_ok: false,
            field_sensitive: true,
            runner: run_engine_gb_unique,
        },
        ScenarioDef {
            id: "engine.spoly-cert",
            claim: "engine.selfcert",
            provenance: "derived",
            method: "S-polynomial reduction certificates",
            heavy: false,
            abort_ok: false,
            field_sensitive: true,
            runner: run_engine_spoly_cert,
        },
        ScenarioDef {
            id: "engine.radical-agree",
            claim: "engine.selfcert",
            provenance: "derived",
            method: "plain vs radical membership probes",
            heavy: false,
            abort_ok: false,
            field_sensitive: true,
            runner: run_engine_radical_agree,
        },
        ScenarioDef {
            id: "engine.char-indep",
            claim: "engine.selfcert",
            provenance: "derived",
            method: "dimension comparison across fields",
            heavy: false,
            abort_ok: false,
            field_sensitive: false,
            runner: run_engine_char_indep,
        },
        ScenarioDef {
            id: "heavy.sl3nilcomm-gb",
            claim: "sl3.nilcone.dimension",
            provenance: "paper",
            method: "buchberger + hilbert pole order, wall-capped",
            heavy: true,
            abort_ok: true,
            field_sensitive: false,
            runner: run_heavy_sl3_gb,
        },
    ]
}

pub fn find(id: &str) -> Option<ScenarioDef> {
    registry().into_iter().find(|s| s.id == id)
}

/// Runs one scenario, mapping budget errors to aborted status and other
/// construction errors to error status.
pub fn run_scenario(def: &ScenarioDef, config: &RunConfig) -> Report {
    let start = Instant::now();
    let outcome = (def.runner)(config);
    let mut report = match outcome {
        Ok(o) => Report {
            id: def.id.to_string(),
            status: o.status,
            measured: o.measured,
            expected: o.expected,
            provenance: def.provenance.to_string(),
            method: def.method.to_string(),
            seeds: o.seeds,
            engine: o.engine,
            detail: o.detail,
            runtime_ms: 0,
        },
        Err(Error::Budget(msg)) => Report {
            id: def.id.to_string(),
            status: Status::Aborted,
            measured: Value::Null,
            expected: Value::Null,
            provenance: def.provenance.to_string(),
            method: def.method.to_string(),
            seeds: vec![],
            engine: EngineStats::default(),
            detail: Some(msg),
            runtime_ms: 0,
        },
        Err(e) => Report {
            id: def.id.to_string(),
            status: Status::Error,
            measured: Value::Null,
            expected: Value::Null,
            provenance: def.provenance.to_string(),
            method: def.method.to_string(),
            seeds: vec![],
            engine: EngineStats::default(),
            detail: Some(e.to_string()),
            runtime_ms: 0,
        },
    };
    if report.status == Status::Pass && config.certify_q && def.field_sensitive {
        let mut q_config = config.clone();
        q_config.field = FieldSpec::Rationals;
        q_config.certify_q = false;
        let q_report = {
            let q_outcome = (def.runner)(&q_config);
            match q_outcome {
                Ok(o) => o.status,
                Err(Error::Budget(_)) => Status::Aborted,
                Err(_) => Status::Error,
            }
        };
        if q_report == Status::Pass {
            report.detail = Some("certified over q".to_string());
        } else {
            report.status = Status::Fail;
            report.detail = Some(format!(
                "passed over {} but rational certification ended with status {:?}",
                config.field, q_report
            ));
        }
    }
    report.runtime_ms = start.elapsed().as_millis() as u64;
    report
}

/// Glob-ish matching: `*` matches any run of characters.
pub fn filter_matches(pattern: &str, id: &str) -> bool {
    if pattern.is_empty() {
        return true;
    }
    let parts: Vec<&str> = pattern.split('*').collect();
    let mut rest = id;
    for (k, part) in parts.iter().enumerate() {
        if part.is_empty() {
            continue;
        }
        match rest.find(part) {
            Some(pos) => {
                if k == 0 && pos != 0 {
                    return false;
                }
                rest = &rest[pos + part.len()..];
            }
            None => return false,
        }
    }
    if let Some(last) = parts.last() {
        if !last.is_empty() && !pattern.ends_with('*') && !id.ends_with(last) {
            return false;
        }
    }
    true
}

/// Runs all scenarios matching the filter over a small worker pool and
/// returns reports ordered by scenario id, plus the suite exit code:
/// 0 all pass (abort-tolerant scenarios may abort), 1 any failure or
/// error, 3 a budget abort on a scenario that must not abort.
pub fn run_suite(filter: &str, config: &RunConfig) -> (Vec<Report>, i32) {
    let defs: Vec<ScenarioDef> = registry()
        .into_iter()
        .filter(|d| (config.include_heavy || !d.heavy) && filter_matches(filter, d.id))
        .collect();
    let abort_ok: Vec<bool> = defs.iter().map(|d| d.abort_ok).collect();
    let results: Mutex<Vec<Option<Report>>> = Mutex::new(vec![None; defs.len()]);
    let next: AtomicUsize = AtomicUsize::new(0);
    let workers = config.workers.max(1).min(defs.len().max(1));

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::SeqCst);
                if k >= defs.len() {
                    break;
                }
                let report = run_scenario(&defs[k], config);
                results.lock().unwrap()[k] = Some(report);
            });
        }
    });

    let mut indexed: Vec<(usize, Report)> = results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(Option::unwrap)
        .enumerate()
        .collect();
    indexed.sort_by(|a, b| a.1.id.cmp(&b.1.id));

    let mut exit = 0;
    for (orig, report) in &indexed {
        match report.status {
            Status::Pass => {}
            Status::Fail | Status::Error => exit = 1,
            Status::Aborted => {
                if !abort_ok[*orig] && exit == 0 {
                    exit = 3;
                }
            }
        }
    }
    (indexed.into_iter().map(|(_, r)| r).collect(), exit)
}

pub fn suite_report(reports: Vec<Report>) -> SuiteReport {
    let summary = Summary::of(&reports);
    SuiteReport {
        generated_at_ms: std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_millis())
            .unwrap_or(0),
        reports,
        summary,
    }
}

/// Claims with no registered scenario (should be empty).
pub fn audit_uncovered() -> Vec<&'static str> {
    let reg = registry();
    CLAIMS
        .iter()
        .filter(|(key, _)| !reg.iter().any(|s| s.claim == *key))
        .map(|(key, _)| *key)
        .collect()
}

// ---- helpers ----

fn sweep(config: &RunConfig, default: &[usize]) -> Vec<usize> {
    match config.r_override {
        Some(r) => vec![r],
        None => default.to_vec(),
    }
}

fn krull_tracked(
    ideal: &IdealPresentation,
    gb_config: &GbConfig,
    engine: &mut EngineStats,
) -> Result<i64, Error> {
    let gb = buchberger(ideal, gb_config)?;
    engine.absorb(gb.stats());
    Ok(hilbert_series(&gb, 0)?.dimension)
}

fn dim_sweep(
    config: &RunConfig,
    rs: &[usize],
    build: impl Fn(usize, &FieldSpec) -> Result<IdealPresentation, Error>,
    expect: impl Fn(usize) -> i64,
) -> Result<Outcome, Error> {
    let gb_config = config.gb_config();
    let mut engine = EngineStats::default();
    let mut measured = serde_json::Map::new();
    let mut expected = serde_json::Map::new();
    for &r in rs {
        let ideal = build(r, &config.field)?;
        let dim = krull_tracked(&ideal, &gb_config, &mut engine)?;
        measured.insert(format!("r={r}"), json!(dim));
        expected.insert(format!("r={r}"), json!(expect(r)));
    }
    Ok(Outcome::compare(Value::Object(measured), Value::Object(expected)).with_engine(engine))
}

// ---- dimension scenarios ----

fn run_dim_sl2comm(config: &RunConfig) -> Result<Outcome, Error> {
    dim_sweep(config, &sweep(config, &[1, 2, 3, 4]), build_sl2_comm, |r| {
        r as i64 + 2
    })
}

fn run_dim_sl2nilcomm(config: &RunConfig) -> Result<Outcome, Error> {
    dim_sweep(
        config,
        &sweep(config, &[1, 2, 3, 4]),
        build_sl2_nilcomm,
        |r| r as i64 + 1,
    )
}

fn run_dim_gl2comm(config: &RunConfig) -> Result<Outcome, Error> {
    dim_sweep(
        config,
        &sweep(config, &[1, 2, 3]),
        |r, f| Ok(build_gl2_comm(r, f)?.ideal),
        |r| 2 * r as i64 + 2,
    )
}

fn run_dim_sl3ucomm(config: &RunConfig) -> Result<Outcome, Error> {
    dim_sweep(
        config,
        &sweep(config, &[1, 2, 3, 4]),
        build_sl3_u_comm,
        |r| 2 * r as i64 + 1,
    )
}

fn run_dim_sl3nilcomm(config: &RunConfig) -> Result<Outcome, Error> {
    let mut measured = serde_json::Map::new();
    let mut expected = serde_json::Map::new();
    for r in sweep(config, &[1, 2, 3]) {
        let dim = jacobian_rank_dimension(&VarietyId::Sl3NilComm { r }, 2, config.seed)?;
        measured.insert(format!("r={r}"), json!(dim));
        expected.insert(format!("r={r}"), json!(2 * r as i64 + 4));
    }
    Ok(
        Outcome::compare(Value::Object(measured), Value::Object(expected))
            .with_seeds(vec![config.seed]),
    )
}

fn run_dim_subreg(config: &RunConfig) -> Result<Outcome, Error> {
    let mut measured = serde_json::Map::new();
    let mut expected = serde_json::Map::new();
    for r in sweep(config, &[2, 3]) {
        let ambient = jacobian_rank_dimension(&VarietyId::Sl3NilComm { r }, 2, config.seed)?;
        for which in [1usize, 2] {
            let d = jacobian_rank_dimension(
                &VarietyId::SubregComponent { r, which },
                2,
                config.seed,
            )?;
            measured.insert(format!("r={r}:w{which}"), json!(d));
            expected.insert(format!("r={r}:w{which}"), json!(2 * r as i64 + 2));
            measured.insert(format!("r={r}:w{which}:codim"), json!(ambient - d));
            expected.insert(format!("r={r}:w{which}:codim"), json!(2));
        }
    }
    Ok(
        Outcome::compare(Value::Object(measured), Value::Object(expected))
            .with_seeds(vec![config.seed]),
    )
}

fn mixed_shapes(config: &RunConfig) -> Vec<(usize, usize)> {
    let all = [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1)];
    all.into_iter()
        .filter(|(i, j)| match config.r_override {
            Some(r) => i + j == r,
            None => true,
        })
        .collect()
}

fn run_dim_mixed(config: &RunConfig) -> Result<Outcome, Error> {
    let gb_config = config.gb_config();
    let mut engine = EngineStats::default();
    let mut measured = serde_json::Map::new();
    let mut expected = serde_json::Map::new();
    for (i, j) in mixed_shapes(config) {
        let m = build_mixed(i, j, &config.field)?;
        let nil = krull_tracked(&m.nilpotent_component, &gb_config, &mut engine)?;
        let zero = krull_tracked(&m.zero_prefix_component, &gb_config, &mut engine)?;
        measured.insert(format!("i={i},j={j}:nilpotent"), json!(nil));
        expected.insert(format!("i={i},j={j}:nilpotent"), json!((i + j + 1) as i64));
        measured.insert(format!("i={i},j={j}:zero-prefix"), json!(zero));
        expected.insert(format!("i={i},j={j}:zero-prefix"), json!((j + 2) as i64));
        measured.insert(format!("i={i},j={j}:max"), json!(nil.max(zero)));
        expected.insert(format!("i={i},j={j}:max"), json!((i + j + 1) as i64));
    }
    Ok(Outcome::compare(Value::Object(measured), Value::Object(expected)).with_engine(engine))
}

fn run_dim_familyf(config: &RunConfig) -> Result<Outcome, Error> {
    let gb_config = config.gb_config();
    let mut engine = EngineStats::default();
    let mut measured = serde_json::Map::new();
    let mut expected = serde_json::Map::new();
    for r in sweep(config, &[2, 3]) {
        for member in build_family_f(r, &config.field)? {
            let want = match member.label {
                FamilyLabel::P(m) => (r - m) as i64,
                FamilyLabel::I(m) => (m + 1) as i64,
                FamilyLabel::Max => 0,
                _ => continue,
            };
            let dim = krull_tracked(&member.presentation, &gb_config, &mut engine)?;
            measured.insert(format!("r={r}:{}", member.label), json!(dim));
            expected.insert(format!("r={r}:{}", member.label), json!(want));
        }
    }
    Ok(Outcome::compare(Value::Object(measured), Value::Object(expected)).with_engine(engine))
}

// ---- radicality and appendix scenarios ----

fn run_nonradical_witness(config: &RunConfig) -> Result<Outcome, Error> {
    let r = config.r_override.unwrap_or(2).max(2);
    let ideal = build_sl2_nilcomm(r, &config.field)?;
    let ring = ideal.ring().clone();
    let witness = parse_polynomial(&ring, "x1*x2 + y1*z2")?;
    let gb_config = config.gb_config();
    let mut engine = EngineStats::default();
    let gb = buchberger(&ideal, &gb_config)?;
    engine.absorb(gb.stats());
    let plain = ideal_member(&witness, &gb)?;
    let radical = radical_member(&witness, &ideal, &gb_config)?;
    let square_reduces = normal_form(&witness.pow(2), gb.basis())?.is_zero();
    Ok(Outcome::compare(
        json!({"member": plain, "radical_member": radical, "square_reduces": square_reduces}),
        json!({"member": false, "radical_member": true, "square_reduces": true}),
    )
    .with_engine(engine))
}

fn run_appendix(config: &RunConfig, prefix: &str) -> Result<Outcome, Error> {
    let gb_config = config.gb_config();
    let mut engine = EngineStats::default();
    let mut measured = serde_json::Map::new();
    let mut expected = serde_json::Map::new();
    let mut failures: Vec<String> = Vec::new();
    for r in sweep(config, &[2, 3, 4]) {
        let mut pass = 0usize;
        let mut total = 0usize;
        let mut cache: Option<(IdealPresentation, GroebnerBasis)> = None;
        for ob in appendix_cases(r, &config.field)? {
            if !ob.label.starts_with(prefix) {
                continue;
            }
            total += 1;
            let ok = match ob.check {
                AppendixCheck::NormalFormZero => {
                    let fresh = match &cache {
                        Some((ideal, _)) => *ideal != ob.ideal,
                        None => true,
                    };
                    if fresh {
                        let gb = buchberger(&ob.ideal, &gb_config)?;
                        engine.absorb(gb.stats());
                        cache = Some((ob.ideal.clone(), gb));
                    }
                    let (_, gb) = cache.as_ref().unwrap();
                    normal_form(&ob.poly, gb.basis())?.is_zero()
                }
                AppendixCheck::RadicalMember => radical_member(&ob.poly, &ob.ideal, &gb_config)?,
                AppendixCheck::RadicalNonMember => {
                    !radical_member(&ob.poly, &ob.ideal, &gb_config)?
                }
            };
            if ok {
                pass += 1;
            } else {
                failures.push(format!("r={r}:{}", ob.label));
            }
        }
        measured.insert(format!("r={r}"), json!(format!("{pass}/{total}")));
        expected.insert(format!("r={r}"), json!(format!("{total}/{total}")));
    }
    let detail = if failures.is_empty() {
        None
    } else {
        Some(format!("failed obligations: {}", failures.join(", ")))
    };
    Ok(Outcome::compare(Value::Object(measured), Value::Object(expected))
        .with_engine(engine)
        .with_detail(detail))
}

// ---- hyperplane cut scenarios ----

fn cut_pieces(
    config: &RunConfig,
) -> Result<(IdealPresentation, [IdealPresentation; 3]), Error> {
    let r = config.r_override.unwrap_or(2).max(2);
    let nil = build_sl2_nilcomm(r, &config.field)?;
    let ring = nil.ring().clone();
    let cut = nil.sum(&IdealPresentation::new(
        ring.clone(),
        vec![parse_polynomial(&ring, "y1 + z1")?],
        false,
    )?)?;
    let components = build_cut_components(r, &config.field)?;
    Ok((cut, components))
}

fn run_cut_decomposition(config: &RunConfig) -> Result<Outcome, Error> {
    let gb_config = config.gb_config();
    let (cut, [v1, v2, v3]) = cut_pieces(config)?;
    let meet = intersect_ideals(&intersect_ideals(&v1, &v2, &gb_config)?, &v3, &gb_config)?;
    let equal = ideal_equal_radical(&cut, &meet, &gb_config)?;
    Ok(Outcome::compare(json!({"equal_radicals": equal}), json!({"equal_radicals": true})))
}

fn run_cut_v1v2_line(config: &RunConfig) -> Result<Outcome, Error> {
    let gb_config = config.gb_config();
    let (_, [v1, v2, _]) = cut_pieces(config)?;
    let ring = v1.ring().clone();
    let r = ring.arity() / 3;
    let mut line_gens = vec![
        parse_polynomial(&ring, "x1")?,
        parse_polynomial(&ring, "y1")?,
        parse_polynomial(&ring, "z1")?,
    ];
    for i in 2..=r {
        line_gens.push(parse_polynomial(&ring, &format!("y{i} - x{i}"))?);
        line_gens.push(parse_polynomial(&ring, &format!("z{i} + x{i}"))?);
    }
    let line = IdealPresentation::new(ring, line_gens, false)?;
    let mut engine = EngineStats::default();
    let sum_gb = buchberger(&v1.sum(&v2)?, &gb_config)?;
    engine.absorb(sum_gb.stats());
    let line_gb = buchberger(&line, &gb_config)?;
    engine.absorb(line_gb.stats());
    let equal = sum_gb.basis() == line_gb.basis();
    Ok(Outcome::compare(json!({"basis_equals_line": equal}), json!({"basis_equals_line": true}))
        .with_engine(engine))
}

fn run_cut_v2v3_origin(config: &RunConfig) -> Result<Outcome, Error> {
    let gb_config = config.gb_config();
    let (_, [_, v2, v3]) = cut_pieces(config)?;
    let ring = v2.ring().clone();
    let maximal = IdealPresentation::new(
        ring.clone(),
        (0..ring.arity())
            .map(|i| Polynomial::variable(&ring, i))
            .collect(),
        false,
    )?;
    let equal = ideal_equal_radical(&v2.sum(&v3)?, &maximal, &gb_config)?;
    Ok(Outcome::compare(json!({"origin_only": equal}), json!({"origin_only": true})))
}

// ---- character scenarios ----

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

fn run_char_series_match(config: &RunConfig) -> Result<Outcome, Error> {
    let mut measured = serde_json::Map::new();
    let mut expected = serde_json::Map::new();
    for r in sweep(config, &[1, 2, 3]) {
        let id = VarietyId::Sl2NilComm { r };
        let v = 3 * r as u64;
        let mut got = Vec::new();
        let mut want = Vec::new();
        for n in 0..=8usize {
            let samples = binomial(n as u64 + v - 1, v - 1).max(1);
            got.push(hilbert_function_by_evaluation(&id, n, samples, config.seed)?);
            want.push(partition_count(r, n as u64) * (2 * n as u64 + 1));
        }
        measured.insert(format!("r={r}:oracle"), json!(got));
        expected.insert(format!("r={r}:oracle"), json!(want));
    }
    // symbolic series of the r=1 cone
    if config.r_override.is_none() || config.r_override == Some(1) {
        let gb_config = config.gb_config();
        let nil1 = build_sl2_nilcomm(1, &config.field)?;
        let gb = buchberger(&nil1, &gb_config)?;
        let h = hilbert_series(&gb, 9)?;
        measured.insert("r=1:symbolic".into(), json!(h.coefficients));
        expected.insert(
            "r=1:symbolic".into(),
            json!((0..=8u64).map(|n| 2 * n + 1).collect::<Vec<_>>()),
        );
    }
    Ok(
        Outcome::compare(Value::Object(measured), Value::Object(expected))
            .with_seeds(vec![config.seed]),
    )
}

fn run_char_multiplicity(config: &RunConfig) -> Result<Outcome, Error> {
    let mut measured = serde_json::Map::new();
    let mut expected = serde_json::Map::new();
    for r in sweep(config, &[1, 2, 3]) {
        let series = character_series(r, 6);
        let table = decompose_good_filtration(&series.degrees)?;
        let got: Vec<u64> = (0..=6).map(|m| total_multiplicity(&table, m)).collect();
        let want: Vec<u64> = (0..=6).map(|m| partition_count(r, m)).collect();
        measured.insert(format!("r={r}"), json!(got));
        expected.insert(format!("r={r}"), json!(want));
    }
    Ok(Outcome::compare(Value::Object(measured), Value::Object(expected)))
}

// ---- mixed scenarios ----

fn run_mixed_vanish(config: &RunConfig) -> Result<Outcome, Error> {
    let mut measured = serde_json::Map::new();
    let mut expected = serde_json::Map::new();
    for (i, j) in mixed_shapes(config) {
        let id = VarietyId::Mixed { i, j };
        let ideal = id.build_ideal(&FieldSpec::Rationals)?;
        let mut all_vanish = true;
        for p in parametrizations(&id)? {
            for s in sample_points(&p, config.seed, 100)? {
                let scalars: Vec<Scalar> =
                    s.point.iter().map(|x| Scalar::Rat(x.clone())).collect();
                if !ideal
                    .generators()
                    .iter()
                    .all(|g| g.eval(&scalars).is_zero())
                {
                    all_vanish = false;
                }
            }
        }
        measured.insert(format!("i={i},j={j}"), json!(all_vanish));
        expected.insert(format!("i={i},j={j}"), json!(true));
    }
    Ok(
        Outcome::compare(Value::Object(measured), Value::Object(expected))
            .with_seeds(vec![config.seed]),
    )
}

fn run_mixed_intersection(config: &RunConfig) -> Result<Outcome, Error> {
    // one constrained slot against two free ones: the component ideals
    // meet along 0 x (nilpotent commuting pair)
    let gb_config = config.gb_config();
    let m = build_mixed(1, 2, &config.field)?;
    let ring = m.ideal.ring().clone();
    let sum = m.nilpotent_component.sum(&m.zero_prefix_component)?;
    let mut gens: Vec<Polynomial> = ["x1", "y1", "z1"]
        .iter()
        .map(|s| parse_polynomial(&ring, s))
        .collect::<Result<_, _>>()?;
    for src in [
        "x2^2 + y2*z2",
        "x3^2 + y3*z3",
        "x2*y3 - x3*y2",
        "y2*z3 - y3*z2",
        "x2*z3 - x3*z2",
    ] {
        gens.push(parse_polynomial(&ring, src)?);
    }
    let target = IdealPresentation::new(ring, gens, false)?;
    let equal = ideal_equal_radical(&sum, &target, &gb_config)?;
    Ok(Outcome::compare(
        json!({"i=1,j=2:intersection": equal}),
        json!({"i=1,j=2:intersection": true}),
    ))
}

// ---- splitting isomorphism scenarios ----

fn run_iso_roundtrip(config: &RunConfig) -> Result<Outcome, Error> {
    use rand_chacha::rand_core::SeedableRng;
    let r = config.r_override.unwrap_or(2);
    let built = build_gl2_comm(r, &FieldSpec::Rationals)?;
    let id = VarietyId::Gl2Comm { r };
    let p = comvar::oracle::parametrize(&id)?;
    let mut ok = 0usize;
    let samples = sample_points(&p, config.seed, 100)?;
    for s in &samples {
        let split = built.iso.split_point(&s.point);
        if built.iso.unsplit_point(&split) == s.point {
            ok += 1;
        }
    }
    // and the other composition on arbitrary integer points of the
    // split side
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(config.seed ^ 0xACE1);
    let mut ok_back = 0usize;
    for _ in 0..100 {
        let point: Vec<BigRational> = (0..4 * r)
            .map(|_| BigRational::from(BigInt::from(rng.random_range(-999i64..=999))))
            .collect();
        if built.iso.split_point(&built.iso.unsplit_point(&point)) == point {
            ok_back += 1;
        }
    }
    Ok(Outcome::compare(
        json!({"unsplit_of_split": ok, "split_of_unsplit": ok_back}),
        json!({"unsplit_of_split": 100, "split_of_unsplit": 100}),
    )
    .with_seeds(vec![config.seed]))
}

fn run_iso_pullback(config: &RunConfig) -> Result<Outcome, Error> {
    let r = config.r_override.unwrap_or(2);
    let built = build_gl2_comm(r, &config.field)?;
    let split_ring = built.iso.split_ring.clone();
    let mut gens = Vec::new();
    for i in 1..=r {
        for j in i + 1..=r {
            gens.push(parse_polynomial(&split_ring, &format!("x{i}*y{j} - x{j}*y{i}"))?);
            gens.push(parse_polynomial(&split_ring, &format!("y{i}*z{j} - y{j}*z{i}"))?);
            gens.push(parse_polynomial(&split_ring, &format!("x{i}*z{j} - x{j}*z{i}"))?);
        }
    }
    let target = IdealPresentation::new(split_ring.clone(), gens, false)?;
    let gb_config = config.gb_config();
    let mut engine = EngineStats::default();
    let gb = buchberger(&target, &gb_config)?;
    engine.absorb(gb.stats());
    let mut reduced = 0usize;
    let total = built.ideal.generators().len();
    for g in built.ideal.generators() {
        let pulled = g.ring_map(&split_ring, &built.iso.gl2_images_in_split)?;
        if normal_form(&pulled, gb.basis())?.is_zero() {
            reduced += 1;
        }
    }
    Ok(Outcome::compare(
        json!({"pullbacks_reducing": reduced}),
        json!({"pullbacks_reducing": total}),
    )
    .with_engine(engine))
}

// ---- engine self-certification scenarios ----

fn engine_catalog(field: &FieldSpec) -> Result<Vec<(String, IdealPresentation)>, Error> {
    let mut out = Vec::new();
    for r in 1..=3 {
        out.push((format!("sl2-comm:r={r}"), build_sl2_comm(r, field)?));
        out.push((format!("sl2-nilcomm:r={r}"), build_sl2_nilcomm(r, field)?));
        out.push((format!("sl3-u-comm:r={r}"), build_sl3_u_comm(r, field)?));
    }
    for r in 1..=2 {
        out.push((format!("gl2-comm:r={r}"), build_gl2_comm(r, field)?.ideal));
    }
    out.push(("sl3-nilcomm:r=1".into(), build_sl3_nilcomm(1, field)?));
    out.push(("mixed:i=1,j=2".into(), build_mixed(1, 2, field)?.ideal));
    Ok(out)
}

fn run_engine_gb_unique(config: &RunConfig) -> Result<Outcome, Error> {
    use rand_chacha::rand_core::SeedableRng;
    let gb_config = config.gb_config();
    let mut engine = EngineStats::default();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(config.seed);
    let mut stable = 0usize;
    let mut total = 0usize;
    for (_, ideal) in engine_catalog(&config.field)? {
        if ideal.generators().is_empty() {
            continue;
        }
        total += 1;
        let reference = buchberger(&ideal, &gb_config)?;
        engine.absorb(reference.stats());
        let mut all_equal = true;
        for _ in 0..3 {
            let mut gens = ideal.generators().to_vec();
            gens.shuffle(&mut rng);
            let shuffled = IdealPresentation::new(ideal.ring().clone(), gens, false)?;
            let gb = buchberger(&shuffled, &gb_config)?;
            engine.absorb(gb.stats());
            if gb.basis() != reference.basis() {
                all_equal = false;
            }
        }
        if all_equal {
            stable += 1;
        }
    }
    Ok(Outcome::compare(
        json!({"permutation_stable": stable, "total": total}),
        json!({"permutation_stable": total, "total": total}),
    )
    .with_engine(engine)
    .with_seeds(vec![config.seed]))
}

fn run_engine_spoly_cert(config: &RunConfig) -> Result<Outcome, Error> {
    let gb_config = config.gb_config();
    let mut engine = EngineStats::default();
    let mut certified = 0usize;
    let mut total = 0usize;
    for (_, ideal) in engine_catalog(&config.field)? {
        total += 1;
        let gb = buchberger(&ideal, &gb_config)?;
        engine.absorb(gb.stats());
        let generators_reduce = ideal
            .generators()
            .iter()
            .map(|g| normal_form(g, gb.basis()).map(|r| r.is_zero()))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .all(|b| b);
        if comvar::is_groebner(gb.basis()) && generators_reduce {
            certified += 1;
        }
    }
    Ok(Outcome::compare(
        json!({"certified": certified, "total": total}),
        json!({"certified": total, "total": total}),
    )
    .with_engine(engine))
}

fn run_engine_radical_agree(config: &RunConfig) -> Result<Outcome, Error> {
    let gb_config = config.gb_config();
    let mut engine = EngineStats::default();
    let mut agreements = 0usize;
    let mut total = 0usize;
    for r in 1..=3usize {
        for ideal in [
            build_sl2_comm(r, &config.field)?,
            build_sl3_u_comm(r, &config.field)?,
        ] {
            let ring = ideal.ring().clone();
            let gb = buchberger(&ideal, &gb_config)?;
            engine.absorb(gb.stats());
            let mut probes: Vec<Polynomial> = Vec::new();
            for (k, g) in ideal.generators().iter().enumerate() {
                probes.push(g.mul(&Polynomial::variable(&ring, k % ring.arity())));
                if let Some(h) = ideal.generators().get(k + 1) {
                    probes.push(g.add(h));
                }
            }
            for k in 0..ring.arity().min(3) {
                probes.push(Polynomial::variable(&ring, k));
            }
            probes.push(parse_polynomial(&ring, "x1^2 + 5*x1*y1 - z1")?);
            for f in probes {
                total += 1;
                if ideal_member(&f, &gb)? == radical_member(&f, &ideal, &gb_config)? {
                    agreements += 1;
                }
            }
        }
    }
    Ok(Outcome::compare(
        json!({"agreements": agreements, "total": total}),
        json!({"agreements": total, "total": total}),
    )
    .with_engine(engine))
}

fn run_engine_char_indep(config: &RunConfig) -> Result<Outcome, Error> {
    let gb_config = config.gb_config();
    let mut engine = EngineStats::default();
    let prime_side = engine_catalog(&config.field)?;
    let rational_side = engine_catalog(&FieldSpec::Rationals)?;
    let mut measured = serde_json::Map::new();
    let mut expected = serde_json::Map::new();
    for ((name, a), (_, b)) in prime_side.iter().zip(&rational_side) {
        let da = krull_tracked(a, &gb_config, &mut engine)?;
        let db = krull_tracked(b, &gb_config, &mut engine)?;
        measured.insert(name.clone(), json!(da));
        expected.insert(name.clone(), json!(db));
    }
    Ok(Outcome::compare(Value::Object(measured), Value::Object(expected)).with_engine(engine))
}

fn run_heavy_sl3_gb(config: &RunConfig) -> Result<Outcome, Error> {
    // symbolic cross-check of the 3x3 nilpotent commuting dimension at
    // r=2, wall-capped at ten minutes
    let cap = config.budget_seconds.map_or(600.0, |s| s.min(600.0));
    let gb_config = GbConfig {
        max_pairs: config.budget_pairs,
        max_time: Some(std::time::Duration::from_secs_f64(cap)),
    };
    let ideal = build_sl3_nilcomm(2, &config.field)?;
    let mut engine = EngineStats::default();
    let dim = krull_tracked(&ideal, &gb_config, &mut engine)?;
    Ok(Outcome::compare(json!({"r=2": dim}), json!({"r=2": 8})).with_engine(engine))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique_and_claims_covered() {
        let reg = registry();
        let mut ids: Vec<&str> = reg.iter().map(|d| d.id).collect();
        ids.sort();
        let len = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), len, "duplicate scenario ids");
        assert!(audit_uncovered().is_empty());
        // every scenario's claim key exists
        for d in &reg {
            assert!(
                CLAIMS.iter().any(|(k, _)| *k == d.claim),
                "{} references unknown claim {}",
                d.id,
                d.claim
            );
        }
    }

    #[test]
    fn dim_filter_matches_eight_scenarios() {
        let reg = registry();
        let matching: Vec<&str> = reg
            .iter()
            .filter(|d| filter_matches("dim.*", d.id))
            .map(|d| d.id)
            .collect();
        assert_eq!(matching.len(), 8, "{matching:?}");
    }

    #[test]
    fn filter_semantics() {
        assert!(filter_matches("", "anything"));
        assert!(filter_matches("dim.*", "dim.sl2comm"));
        assert!(!filter_matches("dim.*", "nondim.sl2comm"));
        assert!(filter_matches("*witness", "nonradical.witness"));
        assert!(filter_matches("appendix.case1", "appendix.case1"));
        assert!(!filter_matches("appendix.case1", "appendix.case12"));
        assert!(filter_matches("*case*", "appendix.case2"));
    }

    #[test]
    fn characteristic_two_surfaces_as_error_status() {
        let mut config = RunConfig::default();
        config.field = FieldSpec::prime(2).unwrap();
        let def = find("dim.sl2comm").unwrap();
        let report = run_scenario(&def, &config);
        assert_eq!(report.status, Status::Error);
        assert!(report.detail.unwrap().contains("characteristic"));
    }

    #[test]
    fn witness_scenario_passes_quickly() {
        let config = RunConfig::default();
        let def = find("nonradical.witness").unwrap();
        let report = run_scenario(&def, &config);
        assert_eq!(report.status, Status::Pass, "{:?}", report.detail);
    }

    #[test]
    fn budget_abort_is_reported_not_failed() {
        let mut config = RunConfig::default();
        config.budget_pairs = 1;
        let def = find("dim.sl2nilcomm").unwrap();
        let report = run_scenario(&def, &config);
        assert_eq!(report.status, Status::Aborted);
    }
}
