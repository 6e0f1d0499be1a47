//! Subcommand implementations behind the command-line front end.
//!
//! Every pipeline returns printable text plus an exit status following
//! one contract: 0 when everything checked is verified, 1 when anything
//! is refuted, 2 when something is undecided (and nothing refuted), 64
//! for unusable input and 70 for internal failures.

use std::fmt::Write as _;

use exodromy_core::classify::{classify, ClassifyError};
use exodromy_core::complex::{
    barycentric_subdivide, cone_complex, quotient_complex, stabilizer_stratification,
    validate_gcomplex, GComplex, SignedEdge,
};
use exodromy_core::exit::{exit_category, ExitStatus};
use exodromy_core::fincat::{
    fibration_to_presheaf, find_natural_iso, presheaf_to_fibration, FiniteCategory, Presheaf,
};
use exodromy_core::group::{
    builtin, conjugacy_class_poset, enumerate_subgroups, small_group_name, PermGroup,
};
use exodromy_core::models;
use exodromy_core::orbit::build_orbit_category;
use exodromy_core::report::{Verdict, VerificationReport};
use exodromy_core::word::ExitWord;

use crate::dot::{export_dot, orbit_category_dot, DotOptions};
use crate::format::{write_json, ComplexFile, GroupFile, ReportFile};

pub const EXIT_VERIFIED: u8 = 0;
pub const EXIT_REFUTED: u8 = 1;
pub const EXIT_UNDECIDED: u8 = 2;
pub const EXIT_INPUT: u8 = 64;
pub const EXIT_INTERNAL: u8 = 70;

#[derive(Debug)]
pub enum RunError {
    /// Unusable input: unknown names, unreadable or malformed files.
    Input(String),
    /// A pipeline stage failed in a way that is not a verdict.
    Internal(String),
}

impl RunError {
    pub fn status(&self) -> u8 {
        match self {
            RunError::Input(_) => EXIT_INPUT,
            RunError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Input(s) => write!(f, "input error: {s}"),
            RunError::Internal(s) => write!(f, "internal error: {s}"),
        }
    }
}

impl From<ClassifyError> for RunError {
    fn from(e: ClassifyError) -> Self {
        RunError::Internal(format!("{e}"))
    }
}

/// Printable result of a pipeline plus its exit status.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub status: u8,
}

impl Output {
    fn ok(text: String) -> Output {
        Output {
            text,
            status: EXIT_VERIFIED,
        }
    }
}

fn verdict_status(v: &Verdict) -> u8 {
    match v {
        Verdict::Verified => EXIT_VERIFIED,
        Verdict::Refuted { .. } => EXIT_REFUTED,
        Verdict::Undecided { .. } => EXIT_UNDECIDED,
    }
}

fn report_lines(r: &VerificationReport) -> String {
    let mut out = String::new();
    for e in &r.entries {
        writeln!(out, "{}: {}", e.name, e.verdict).expect("write to string");
    }
    writeln!(out, "overall: {}", r.overall()).expect("write to string");
    out
}

/// Resolves a group by builtin name or JSON file path.
pub fn load_group(spec: &str) -> Result<PermGroup, RunError> {
    if let Some(g) = builtin(spec) {
        return Ok(g);
    }
    if std::path::Path::new(spec).exists() {
        let file: GroupFile = crate::format::read_json(spec)
            .map_err(|e| RunError::Input(format!("{e}")))?;
        return file.to_group().map_err(|e| RunError::Input(format!("{e}")));
    }
    Err(RunError::Input(format!(
        "unknown group {spec:?} (not a builtin name or file)"
    )))
}

/// Resolves a model by curated name or JSON file path.
pub fn load_model(spec: &str) -> Result<GComplex, RunError> {
    if let Some(x) = models::by_name(spec) {
        return Ok(x);
    }
    if std::path::Path::new(spec).exists() {
        let file: ComplexFile = crate::format::read_json(spec)
            .map_err(|e| RunError::Input(format!("{e}")))?;
        return file
            .to_complex()
            .map_err(|e| RunError::Input(format!("{e}")));
    }
    Err(RunError::Input(format!(
        "unknown model {spec:?} (curated models: {})",
        models::names().join(", ")
    )))
}

fn write_dot(path: &str, dot: &str) -> Result<(), RunError> {
    std::fs::write(path, dot).map_err(|e| RunError::Internal(format!("cannot write {path}: {e}")))
}

/// `group`: basic invariants, subgroups and conjugacy classes.
pub fn group_info(spec: &str) -> Result<Output, RunError> {
    let g = load_group(spec)?;
    let subgroups =
        enumerate_subgroups(&g).map_err(|e| RunError::Internal(format!("{e}")))?;
    let classes =
        conjugacy_class_poset(&g).map_err(|e| RunError::Internal(format!("{e}")))?;
    let mut text = String::new();
    writeln!(text, "group: {}", small_group_name(&g)).expect("write");
    writeln!(text, "order: {}", g.order()).expect("write");
    writeln!(text, "degree: {}", g.degree()).expect("write");
    writeln!(text, "abelian: {}", g.is_abelian()).expect("write");
    writeln!(text, "subgroups: {}", subgroups.len()).expect("write");
    writeln!(text, "conjugacy classes of subgroups: {}", classes.len()).expect("write");
    let orders: Vec<String> = subgroups.iter().map(|h| h.order().to_string()).collect();
    writeln!(text, "subgroup orders: {}", orders.join(", ")).expect("write");
    Ok(Output::ok(text))
}

/// `orbit-cat`: build the orbit category, optionally exporting DOT.
pub fn orbit_cat(
    spec: &str,
    dot_path: Option<&str>,
    include_identities: bool,
) -> Result<Output, RunError> {
    let g = load_group(spec)?;
    let orbit = build_orbit_category(&g).map_err(|e| RunError::Internal(format!("{e}")))?;
    let mut text = String::new();
    writeln!(text, "objects: {}", orbit.category.object_count()).expect("write");
    writeln!(text, "morphisms: {}", orbit.category.morphism_count()).expect("write");
    for o in 0..orbit.category.object_count() {
        writeln!(
            text,
            "{}: endomorphisms {}",
            orbit.category.objects[o],
            orbit.endo_label(o)
        )
        .expect("write");
    }
    if let Some(path) = dot_path {
        write_dot(path, &orbit_category_dot(&orbit, include_identities))?;
        writeln!(text, "dot written to {path}").expect("write");
    }
    Ok(Output::ok(text))
}

/// `space` operations on a model.
pub fn space(op: &str, spec: &str, out: Option<&str>) -> Result<Output, RunError> {
    let x = load_model(spec)?;
    let mut text = String::new();
    let mut status = EXIT_VERIFIED;
    let result: Option<GComplex> = match op {
        "validate" => {
            let v = validate_gcomplex(&x);
            writeln!(text, "validate: {v}").expect("write");
            status = verdict_status(&v);
            None
        }
        "quotient" => {
            let q = quotient_complex(&x).map_err(|e| RunError::Internal(format!("{e}")))?;
            writeln!(
                text,
                "quotient: {} vertices, {} edges, {} faces",
                q.complex.vertices,
                q.complex.edges.len(),
                q.complex.faces.len()
            )
            .expect("write");
            Some(q.complex)
        }
        "strat" => {
            let s = stabilizer_stratification(&x)
                .map_err(|e| RunError::Internal(format!("{e}")))?;
            let labels: Vec<&str> = s
                .strat
                .vertices
                .iter()
                .map(|&p| s.strat.poset.label(p))
                .collect();
            writeln!(text, "vertex strata: {}", labels.join(", ")).expect("write");
            Some(s)
        }
        "subdivide" => {
            let s =
                barycentric_subdivide(&x).map_err(|e| RunError::Internal(format!("{e}")))?;
            writeln!(
                text,
                "subdivision: {} vertices, {} edges, {} faces",
                s.vertices,
                s.edges.len(),
                s.faces.len()
            )
            .expect("write");
            Some(s)
        }
        "cone" => {
            let c = cone_complex(&x).map_err(|e| RunError::Internal(format!("{e}")))?;
            writeln!(
                text,
                "cone: {} vertices, {} edges, {} faces",
                c.vertices,
                c.edges.len(),
                c.faces.len()
            )
            .expect("write");
            Some(c)
        }
        other => {
            return Err(RunError::Input(format!(
                "unknown space operation {other:?}"
            )))
        }
    };
    if let (Some(y), Some(path)) = (&result, out) {
        write_json(path, &ComplexFile::from_complex(y))
            .map_err(|e| RunError::Internal(format!("{e}")))?;
        writeln!(text, "complex written to {path}").expect("write");
    }
    Ok(Output { text, status })
}

/// `exit-cat`: build and, when possible, materialize the exit category.
pub fn exit_cat(
    spec: &str,
    budget: usize,
    dot_path: Option<&str>,
    on_quotient: bool,
) -> Result<Output, RunError> {
    let x = load_model(spec)?;
    let x = if on_quotient {
        quotient_complex(&x)
            .map_err(|e| RunError::Internal(format!("{e}")))?
            .complex
    } else {
        x
    };
    let ec = exit_category(&x, budget).map_err(|e| RunError::Internal(format!("{e}")))?;
    let mut text = String::new();
    writeln!(
        text,
        "generators: {}",
        ec.presentation.generators.len()
    )
    .expect("write");
    writeln!(text, "relations: {}", ec.presentation.relations.len()).expect("write");
    let status = match ec.status {
        ExitStatus::Finite => {
            let fin = ec.finite.as_ref().expect("finite status carries tables");
            writeln!(
                text,
                "materialized: {} objects, {} morphisms",
                fin.category.object_count(),
                fin.category.morphism_count()
            )
            .expect("write");
            if let Some(path) = dot_path {
                write_dot(path, &export_dot(&fin.category, &DotOptions::default()))?;
                writeln!(text, "dot written to {path}").expect("write");
            }
            EXIT_VERIFIED
        }
        ExitStatus::PresentedOnly => {
            writeln!(
                text,
                "presented only: infinitely many morphisms, word problem decided"
            )
            .expect("write");
            EXIT_VERIFIED
        }
        ExitStatus::Undecided => {
            writeln!(
                text,
                "undecided: completion budget {} exhausted",
                budget
            )
            .expect("write");
            EXIT_UNDECIDED
        }
    };
    Ok(Output { text, status })
}

/// Parses a word like "+0,-1" into signed edge traversals.
pub fn parse_steps(s: &str) -> Result<Vec<SignedEdge>, RunError> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let (forward, num) = match tok.as_bytes().first() {
                Some(b'+') => (true, &tok[1..]),
                Some(b'-') => (false, &tok[1..]),
                _ => (true, tok),
            };
            let edge: usize = num
                .parse()
                .map_err(|_| RunError::Input(format!("bad step {tok:?}")))?;
            Ok(SignedEdge { edge, forward })
        })
        .collect()
}

/// `lift`: lift a quotient exit word against a chosen endpoint lift.
pub fn lift(
    spec: &str,
    start: usize,
    steps: &str,
    end_lift: usize,
) -> Result<Output, RunError> {
    let x = load_model(spec)?;
    let q = quotient_complex(&x).map_err(|e| RunError::Internal(format!("{e}")))?;
    let w = ExitWord {
        start,
        steps: parse_steps(steps)?,
    };
    w.validate(&q.complex)
        .map_err(|e| RunError::Input(format!("not a quotient exit word: {e}")))?;
    let lifted = exodromy_core::lift::lift_path(&x, &q, &w, end_lift)
        .map_err(|e| RunError::Input(format!("{e}")))?;
    let mut text = String::new();
    writeln!(
        text,
        "lift starts at {} ({})",
        lifted.start, x.vertex_names[lifted.start]
    )
    .expect("write");
    let rendered: Vec<String> = lifted
        .steps
        .iter()
        .map(|se| format!("{}{}", if se.forward { "+" } else { "-" }, se.edge))
        .collect();
    writeln!(text, "steps: {}", rendered.join(",")).expect("write");
    Ok(Output::ok(text))
}

/// `classify`: the full verification pipeline on one model.
pub fn classify_model(
    spec: &str,
    budget: usize,
    bound: usize,
    report_path: Option<&str>,
) -> Result<Output, RunError> {
    let x = load_model(spec)?;
    let (mut report, _) = classify(&x, budget, bound)?;
    report.subject = spec.to_string();
    let text = report_lines(&report);
    if let Some(path) = report_path {
        write_json(path, &ReportFile::from_report(&report))
            .map_err(|e| RunError::Internal(format!("{e}")))?;
    }
    Ok(Output {
        text,
        status: verdict_status(&report.overall()),
    })
}

/// A small deterministic generator for the seeded suite checks.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

/// A random presheaf on the poset category of a random forest: cover
/// relations have unique composites, so arbitrary cover maps extend
/// functorially.
pub fn random_forest_presheaf(seed: u64) -> Presheaf {
    let mut rng = SplitMix64(seed.wrapping_mul(2).wrapping_add(1));
    let n = 2 + rng.below(3);
    // parent[i] < i or none: a forest on n nodes
    let mut covers: Vec<(usize, usize)> = Vec::new();
    for i in 1..n {
        if rng.below(4) > 0 {
            covers.push((rng.below(i), i));
        }
    }
    let poset = exodromy_core::poset::StratPoset::from_covers(
        (0..n).map(|i| format!("p{i}")).collect(),
        &covers,
    )
    .expect("forests are posets");
    let base = FiniteCategory::from_poset(&poset);
    let sizes: Vec<usize> = (0..n).map(|_| 1 + rng.below(3)).collect();
    // assign maps to covers, compose along unique chains for the rest
    let mut cover_map: std::collections::BTreeMap<(usize, usize), Vec<usize>> =
        std::collections::BTreeMap::new();
    for &(a, b) in &covers {
        let table: Vec<usize> = (0..sizes[b]).map(|_| rng.below(sizes[a])).collect();
        cover_map.insert((a, b), table);
    }
    let chain_map = |a: usize, b: usize| -> Vec<usize> {
        // unique path from b down to a through parents
        let mut maps: Vec<&Vec<usize>> = Vec::new();
        let mut cur = b;
        while cur != a {
            let &(p, c) = covers
                .iter()
                .find(|&&(_, c)| c == cur)
                .expect("path exists in the forest");
            maps.push(cover_map.get(&(p, c)).expect("cover map assigned"));
            cur = p;
        }
        let mut table: Vec<usize> = (0..sizes[b]).collect();
        for m in maps {
            table = table.into_iter().map(|v| m[v]).collect();
        }
        table
    };
    let action: Vec<Vec<usize>> = base
        .morphisms()
        .map(|m| chain_map(base.src(m), base.dst(m)))
        .collect();
    Presheaf {
        base,
        sizes,
        action,
    }
}

/// `suite`: classify every curated model, reject the broken fixtures and
/// round-trip seeded presheaves through the category of elements.
pub fn suite(
    budget: usize,
    bound: usize,
    seed: u64,
    rounds: usize,
    report_path: Option<&str>,
) -> Result<Output, RunError> {
    let mut report = VerificationReport::new("suite");
    for (name, x) in models::curated() {
        let (model_report, _) = classify(&x, budget, bound)?;
        report.push(
            name,
            model_report.overall(),
            "full classification pipeline",
        );
    }
    let broken_rejected = validate_gcomplex(&models::raw_square_klein4()).is_refuted()
        && validate_gcomplex(&models::circle_reflect_extra_edge()).is_refuted();
    report.push(
        "broken-fixtures",
        if broken_rejected {
            Verdict::Verified
        } else {
            Verdict::refuted("a broken fixture passed validation")
        },
        "validator rejects the broken fixtures",
    );
    let mut grothendieck = Verdict::Verified;
    for i in 0..rounds {
        let presheaf = random_forest_presheaf(seed.wrapping_add(i as u64));
        let (fibration, _) = presheaf_to_fibration(&presheaf);
        let round = match fibration_to_presheaf(&fibration) {
            Ok((back, _)) => {
                if find_natural_iso(&presheaf, &back).is_some() {
                    Verdict::Verified
                } else {
                    Verdict::refuted(format!("seed {i}: presheaf not recovered"))
                }
            }
            Err(_) => Verdict::refuted(format!("seed {i}: not a fibration")),
        };
        grothendieck = grothendieck.and(round);
    }
    report.push(
        "grothendieck-round-trip",
        grothendieck,
        format!("{rounds} seeded presheaf round trips"),
    );
    let text = report_lines(&report);
    if let Some(path) = report_path {
        write_json(path, &ReportFile::from_report(&report))
            .map_err(|e| RunError::Internal(format!("{e}")))?;
    }
    Ok(Output {
        text,
        status: verdict_status(&report.overall()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_info_builtin_and_unknown() {
        let out = group_info("S3").unwrap();
        assert!(out.text.contains("order: 6"));
        assert!(out.text.contains("subgroups: 6"));
        let err = group_info("nope").unwrap_err();
        assert_eq!(err.status(), EXIT_INPUT);
    }

    #[test]
    fn space_validate_statuses() {
        let out = space("validate", "circle-reflect", None).unwrap();
        assert_eq!(out.status, EXIT_VERIFIED);
        // a broken model from a file is refuted with status 1
        let dir = std::env::temp_dir().join("exodromy-test-space");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("broken.json");
        let file = ComplexFile::from_complex(&models::raw_square_klein4());
        write_json(path.to_str().unwrap(), &file).unwrap();
        let out = space("validate", path.to_str().unwrap(), None).unwrap();
        assert_eq!(out.status, EXIT_REFUTED);
    }

    #[test]
    fn exit_cat_statuses() {
        let out = exit_cat(
            "circle-reflect",
            exodromy_core::rewrite::DEFAULT_REWRITE_BUDGET,
            None,
            false,
        )
        .unwrap();
        assert!(out.text.contains("materialized: 4 objects, 8 morphisms"));
        let out = exit_cat("circle-rotate-3", 10_000, None, false).unwrap();
        assert!(out.text.contains("presented only"));
        // a starved budget is undecided, exit status 2
        let out = exit_cat("disk-rotate-4", 1, None, false).unwrap();
        assert_eq!(out.status, EXIT_UNDECIDED);
    }

    #[test]
    fn lift_round_trip_via_cli() {
        // quotient of the reflection circle is [N] -> [EW] <- [S]; lift
        // the single exiting step ending at the W lift
        let out = lift("circle-reflect", 0, "+0", 3).unwrap();
        assert!(out.text.contains("lift starts at 0"));
        let err = lift("circle-reflect", 0, "+9", 3).unwrap_err();
        assert_eq!(err.status(), EXIT_INPUT);
    }

    #[test]
    fn classify_and_suite_verify() {
        let out = classify_model("interval-flip", 10_000, 4, None).unwrap();
        assert_eq!(out.status, EXIT_VERIFIED, "{}", out.text);
        let out = suite(10_000, 3, 7, 5, None).unwrap();
        assert_eq!(out.status, EXIT_VERIFIED, "{}", out.text);
        assert!(out.text.contains("grothendieck-round-trip: Verified"));
    }

    #[test]
    fn parse_steps_accepts_signs() {
        let steps = parse_steps("+0,-1,2").unwrap();
        assert_eq!(steps.len(), 3);
        assert!(steps[0].forward);
        assert!(!steps[1].forward);
        assert!(steps[2].forward);
        assert!(parse_steps("x").is_err());
        assert!(parse_steps("").unwrap().is_empty());
    }
}
