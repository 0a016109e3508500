//! The full analysis of one design: validation, block graph, maximum-clique
//! census, a permutation group with its orbits, and the automorphism groups
//! of the design and of its block graph. Rendered as text or as a JSON
//! document with sorted keys and integer-only values.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};
use thiserror::Error;

use crate::arith::{gm_threshold, only_canonical_guaranteed};
use crate::builtin::{representative_clique, BuiltinName, MAIN66_GENERATORS};
use crate::clique::{
    census_report, Census, CliqueClassification, CliqueError, CliqueRecord, SearchOptions,
};
use crate::design::{validate_2design, Design, DesignParameters, ValidationReport};
use crate::perm::{
    clique_orbits, close_group, coloured_orbit_split, design_automorphism_group,
    graph_automorphism_group, induced_block_action, is_design_automorphism, parse_cycles,
    point_action_from_block_perm, point_orbits, AutError, AutOptions, AutomorphismGroup,
    OrbitPartition, PermError, Permutation, SeedInvariants, DEFAULT_CLOSURE_CAP,
};
use crate::srg::{srg_from_design_params, SrgError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error("design is not a valid 2-design ({} violations)", .0.violations.len())]
    Invalid(ValidationReport),
    #[error(transparent)]
    Clique(#[from] CliqueError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Where the group for the orbit section comes from.
#[derive(Debug, Clone)]
pub enum GeneratorChoice {
    Supplied {
        source: String,
        generators: Vec<Permutation>,
    },
    /// Generators of the full design automorphism group.
    DesignSearch,
}

impl GeneratorChoice {
    /// The published generators for `main66`, a full search otherwise.
    pub fn default_for(name: Option<BuiltinName>, design: &Design) -> Self {
        if name == Some(BuiltinName::Main66) {
            let generators = MAIN66_GENERATORS
                .iter()
                .map(|g| parse_cycles(g, design.labels()).expect("embedded generators parse"))
                .collect();
            return GeneratorChoice::Supplied {
                source: "builtin pi1, pi2".into(),
                generators,
            };
        }
        GeneratorChoice::DesignSearch
    }
}

#[derive(Debug, Clone)]
pub struct ReportOptions {
    pub search: SearchOptions,
    pub aut: AutOptions,
    pub generators: GeneratorChoice,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            search: SearchOptions::default(),
            aut: AutOptions::default(),
            generators: GeneratorChoice::DesignSearch,
        }
    }
}

#[derive(Debug, Clone)]
pub struct GroupSection {
    pub source: String,
    pub generators: Vec<Permutation>,
    /// `None` when the closure exceeds the element cap.
    pub order: Option<usize>,
    pub abelian: Option<bool>,
    pub points: OrbitPartition,
    pub blocks: OrbitPartition,
    pub cliques: OrbitPartition,
    pub canonical_clique_orbits: Vec<usize>,
    pub non_canonical_clique_orbits: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct AutomorphismSection {
    pub graph: Result<AutomorphismGroup, AutError>,
    pub design: Result<AutomorphismGroup, AutError>,
    /// Equal orders and every block-graph generator induced by a design automorphism.
    pub coincide: bool,
    /// Block-graph group equals the induced block action of the orbit-section group, element by element.
    pub graph_equals_induced: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub id: String,
    pub design: Design,
    pub validation: ValidationReport,
    pub params: DesignParameters,
    pub census: Census,
    pub closed_form: Result<crate::srg::SrgParams, SrgError>,
    pub group: Result<GroupSection, String>,
    pub automorphisms: AutomorphismSection,
}

fn group_section(
    design: &Design,
    census: &Census,
    options: &ReportOptions,
) -> Result<GroupSection, String> {
    let (source, generators) = match &options.generators {
        GeneratorChoice::Supplied { source, generators } => (source.clone(), generators.clone()),
        GeneratorChoice::DesignSearch => {
            let g = design_automorphism_group(design, options.aut).map_err(|e| e.to_string())?;
            ("design automorphism search".to_string(), g.generators)
        }
    };
    if let Some(i) = generators
        .iter()
        .position(|g| g.degree() != design.n() || !is_design_automorphism(design, g))
    {
        return Err(format!("generator {} is not a design automorphism", i + 1));
    }
    let closure = close_group(design.n(), &generators, DEFAULT_CLOSURE_CAP).ok();
    let cliques = census.cliques();
    let block_gens: Vec<Permutation> = generators
        .iter()
        .map(|g| induced_block_action(design, g).expect("checked automorphism"))
        .collect();
    let clique_part = clique_orbits(design, &cliques, &generators).map_err(|e| e.to_string())?;
    let canonical: Vec<bool> = census
        .records
        .iter()
        .map(|r| r.classification.is_canonical())
        .collect();
    let (canonical_clique_orbits, non_canonical_clique_orbits) =
        coloured_orbit_split(&clique_part, &canonical);
    Ok(GroupSection {
        source,
        order: closure.as_ref().map(|c| c.order()),
        abelian: closure.as_ref().map(|c| c.is_abelian()),
        points: point_orbits(design.n(), &generators),
        blocks: point_orbits(design.b(), &block_gens),
        cliques: clique_part,
        canonical_clique_orbits,
        non_canonical_clique_orbits,
        generators,
    })
}

fn automorphism_section(
    design: &Design,
    census: &Census,
    group: &Result<GroupSection, String>,
    options: &ReportOptions,
) -> AutomorphismSection {
    let seeds = SeedInvariants::with_cliques(&census.graph, &census.cliques());
    let graph = graph_automorphism_group(&census.graph, &seeds, options.aut);
    let design_group = design_automorphism_group(design, options.aut);
    let coincide = match (&graph, &design_group) {
        (Ok(g), Ok(d)) => {
            g.order == d.order
                && g.generators.iter().all(|bp| {
                    point_action_from_block_perm(design, bp)
                        .and_then(|pp| induced_block_action(design, &pp).ok())
                        .is_some_and(|back| &back == bp)
                })
        }
        _ => false,
    };
    let graph_equals_induced = match (&graph, group) {
        (Ok(g), Ok(section)) => {
            let induced: Vec<Permutation> = section
                .generators
                .iter()
                .map(|p| induced_block_action(design, p).expect("checked automorphism"))
                .collect();
            let b = design.b();
            match (
                close_group(b, &g.generators, DEFAULT_CLOSURE_CAP),
                close_group(b, &induced, DEFAULT_CLOSURE_CAP),
            ) {
                (Ok(x), Ok(y)) => Some(x.same_elements(&y)),
                _ => None,
            }
        }
        _ => None,
    };
    AutomorphismSection {
        graph,
        design: design_group,
        coincide,
        graph_equals_induced,
    }
}

/// Runs every analysis on a valid design.
pub fn build_report(
    design: &Design,
    id: &str,
    options: &ReportOptions,
) -> Result<AnalysisReport, ReportError> {
    let validation = validate_2design(design);
    let Some(params) = validation.params.clone().filter(|_| validation.valid) else {
        return Err(ReportError::Invalid(validation));
    };
    let census = census_report(design, options.search)?;
    let closed_form = srg_from_design_params(params.n, params.m);
    let group = group_section(design, &census, options);
    let automorphisms = automorphism_section(design, &census, &group, options);
    Ok(AnalysisReport {
        id: id.to_string(),
        design: design.clone(),
        validation,
        params,
        census,
        closed_form,
        group,
        automorphisms,
    })
}

fn big_to_json(x: num_bigint::BigUint) -> Value {
    u64::try_from(&x).map_or_else(|_| Value::String(x.to_string()), Value::from)
}

fn histogram(record: &CliqueRecord) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &c in record.multiplicities.values() {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

fn params_label(p: &DesignParameters) -> String {
    format!("2-({},{},{})", p.n, p.m, p.lambda)
}

fn aut_json(r: &Result<AutomorphismGroup, AutError>) -> Value {
    match r {
        Ok(g) => json!({
            "generators": g.generators.iter().map(Permutation::to_index_cycle_string).collect::<Vec<_>>(),
            "nodes": g.nodes,
            "order": g.order,
        }),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

impl AnalysisReport {
    pub fn threshold(&self) -> (num_bigint::BigUint, bool) {
        (
            gm_threshold(self.params.m),
            only_canonical_guaranteed(self.params.n, self.params.m),
        )
    }

    pub fn graph_order(&self) -> Option<u64> {
        self.automorphisms.graph.as_ref().ok().map(|g| g.order)
    }

    pub fn design_order(&self) -> Option<u64> {
        self.automorphisms.design.as_ref().ok().map(|g| g.order)
    }

    fn classification_label(&self, c: &CliqueClassification) -> String {
        match c {
            CliqueClassification::Canonical { witness } => {
                format!("canonical at {}", self.design.label(*witness))
            }
            CliqueClassification::NonCanonical => "non-canonical".into(),
        }
    }

    /// Structured form; `serde_json` maps keep keys sorted.
    pub fn to_json(&self) -> Value {
        let c = &self.census;
        let srg = match &c.srg {
            Ok(p) => json!({
                "status": "ok", "v": p.v, "k": p.k, "lambda": p.lambda, "mu": p.mu,
                "r_eig": p.r_eig, "s_eig": p.s_eig,
                "matches_closed_form": self.closed_form.as_ref().ok() == Some(p),
            }),
            Err(SrgError::Degenerate(d)) => {
                json!({ "status": "degenerate", "reason": d.to_string() })
            }
            Err(e) => json!({ "status": "failed", "reason": e.to_string() }),
        };
        let cliques: Vec<Value> = c
            .records
            .iter()
            .map(|r| {
                let witness = match r.classification {
                    CliqueClassification::Canonical { witness } => {
                        Value::from(self.design.label(witness))
                    }
                    CliqueClassification::NonCanonical => Value::Null,
                };
                let hist: serde_json::Map<String, Value> = histogram(r)
                    .into_iter()
                    .map(|(k, v)| (k.to_string(), Value::from(v)))
                    .collect();
                json!({
                    "canonical": r.classification.is_canonical(),
                    "witness": witness,
                    "members": r.clique.members(),
                    "support_size": r.subdesign.support_size,
                    "core_size": r.core.core_points.len(),
                    "core_design": r.core.restricted_params.as_ref().map(params_label),
                    "multiplicity_histogram": hist,
                    "subdesign": {
                        "candidate": r.subdesign.candidate_params.as_ref().map(params_label),
                        "admissible": r.subdesign.admissible(),
                        "pair_coverage_ok": r.subdesign.pair_coverage_ok,
                        "is_design": r.subdesign.is_design,
                    },
                })
            })
            .collect();
        let group = match &self.group {
            Ok(g) => json!({
                "source": g.source,
                "order": g.order,
                "abelian": g.abelian,
                "generators": g.generators.iter().map(|p| p.to_cycle_string(self.design.labels())).collect::<Vec<_>>(),
                "orbits": {
                    "points": g.points.sorted_lengths(),
                    "blocks": g.blocks.sorted_lengths(),
                    "canonical_cliques": g.canonical_clique_orbits,
                    "non_canonical_cliques": g.non_canonical_clique_orbits,
                },
            }),
            Err(e) => json!({ "error": e }),
        };
        let (threshold, guaranteed) = self.threshold();
        json!({
            "design": {
                "id": self.id, "n": self.params.n, "m": self.params.m, "lambda": self.params.lambda,
                "b": self.design.b(), "r": self.params.r.to_string(), "valid": self.validation.valid,
            },
            "srg": srg,
            "delsarte_bound": c.delsarte_bound,
            "clique_number": c.clique_number,
            "census": { "total": c.total(), "canonical": c.canonical(), "non_canonical": c.non_canonical() },
            "cliques": cliques,
            "threshold": { "gm_threshold": big_to_json(threshold), "only_canonical_guaranteed": guaranteed },
            "group": group,
            "automorphisms": {
                "graph": aut_json(&self.automorphisms.graph),
                "design": aut_json(&self.automorphisms.design),
                "coincide": self.automorphisms.coincide,
                "graph_equals_induced": self.automorphisms.graph_equals_induced,
            },
        })
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("json values serialize");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let c = &self.census;
        let mut out = String::new();
        let p = &self.params;
        let _ = writeln!(
            out,
            "design {}: {} with {} blocks, r = {}",
            self.id,
            params_label(p),
            self.design.b(),
            p.r
        );
        let _ = writeln!(out, "validation: valid");
        match &c.srg {
            Ok(s) => {
                let agree = if self.closed_form.as_ref().ok() == Some(s) {
                    "matches"
                } else {
                    "differs from"
                };
                let _ = writeln!(out, "block graph: {s} ({agree} closed form)");
            }
            Err(SrgError::Degenerate(d)) => {
                let _ = writeln!(out, "block graph: degenerate ({d}), symmetric design");
            }
            Err(e) => {
                let _ = writeln!(out, "block graph: not strongly regular: {e}");
            }
        }
        match c.delsarte_bound {
            Some(b) => writeln!(out, "delsarte bound: {b}"),
            None => writeln!(out, "delsarte bound: n/a"),
        }
        .ok();
        let _ = writeln!(out, "clique number: {}", c.clique_number);
        let _ = writeln!(
            out,
            "maximum cliques: {} ({} canonical, {} non-canonical)",
            c.total(),
            c.canonical(),
            c.non_canonical()
        );
        let (threshold, guaranteed) = self.threshold();
        let _ = writeln!(
            out,
            "threshold m^3-2m^2+2m = {threshold}; only canonical cliques guaranteed: {}",
            yes_no(guaranteed)
        );
        match &self.group {
            Ok(g) => {
                let order = g
                    .order
                    .map_or("too large to close".to_string(), |o| o.to_string());
                let kind = match g.abelian {
                    Some(true) => ", abelian",
                    Some(false) => ", nonabelian",
                    None => "",
                };
                let _ = writeln!(out, "group ({}): order {order}{kind}", g.source);
                let _ = writeln!(out, "  point orbits: {}", join(&g.points.sorted_lengths()));
                let _ = writeln!(out, "  block orbits: {}", join(&g.blocks.sorted_lengths()));
                let _ = writeln!(
                    out,
                    "  canonical clique orbits: {}",
                    join(&g.canonical_clique_orbits)
                );
                let _ = writeln!(
                    out,
                    "  non-canonical clique orbits: {}",
                    join(&g.non_canonical_clique_orbits)
                );
            }
            Err(e) => {
                let _ = writeln!(out, "group: unavailable ({e})");
            }
        }
        let order = |r: &Result<AutomorphismGroup, AutError>| match r {
            Ok(g) => g.order.to_string(),
            Err(e) => format!("unavailable ({e})"),
        };
        let _ = writeln!(
            out,
            "automorphisms: block graph {}, design {}, coincide {}",
            order(&self.automorphisms.graph),
            order(&self.automorphisms.design),
            yes_no(self.automorphisms.coincide)
        );
        let _ = writeln!(out, "cliques:");
        for (i, r) in c.records.iter().enumerate() {
            let core = match &r.core.restricted_params {
                Some(cp) => format!(
                    "core {} forming {}",
                    r.core.core_points.len(),
                    params_label(cp)
                ),
                None => format!("core {}", r.core.core_points.len()),
            };
            let _ = writeln!(
                out,
                "  {i}: {}; support {}; {core}; design structure {}; blocks {}",
                self.classification_label(&r.classification),
                r.subdesign.support_size,
                yes_no(r.subdesign.is_design),
                join(r.clique.members())
            );
        }
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

/// One compared quantity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperCheck {
    pub claim: &'static str,
    pub expected: String,
    pub actual: String,
}

impl PaperCheck {
    pub fn ok(&self) -> bool {
        self.expected == self.actual
    }
}

fn check<T: std::fmt::Debug, U: std::fmt::Debug>(
    claim: &'static str,
    expected: T,
    actual: U,
) -> PaperCheck {
    PaperCheck {
        claim,
        expected: format!("{expected:?}"),
        actual: format!("{actual:?}"),
    }
}

/// Non-canonical cliques with support 39 whose 13-point core carries a 2-(13,4,1) design.
pub fn plane_core_cliques(census: &Census) -> usize {
    census
        .records
        .iter()
        .filter(|r| {
            !r.classification.is_canonical()
                && r.subdesign.support_size == 39
                && !r.subdesign.admissible()
                && r.core.core_points.len() == 13
                && r.core
                    .restricted_params
                    .as_ref()
                    .is_some_and(|p| (p.n, p.m) == (13, 4))
        })
        .count()
}

/// Non-canonical cliques with support 26 in which every support point lies in three blocks.
pub fn triple_cover_cliques(census: &Census) -> usize {
    census
        .records
        .iter()
        .filter(|r| {
            !r.classification.is_canonical()
                && r.subdesign.support_size == 26
                && !r.subdesign.admissible()
                && r.uniform_multiplicity() == Some(3)
        })
        .count()
}

/// Compares a report for one of the three 66-point designs against the
/// published values. `None` for other designs.
pub fn check_paper(report: &AnalysisReport, name: BuiltinName) -> Option<Vec<PaperCheck>> {
    let c = &report.census;
    let a = &report.automorphisms;
    let p = &report.params;
    let mut checks = vec![
        check(
            "valid 2-(n,m,1) design",
            (true, 66, 6),
            (report.validation.valid, p.n, p.m),
        ),
        check("blocks", 143, report.design.b()),
    ];
    match name {
        BuiltinName::Main66 => {
            checks.push(check("replication number", Some(13), p.r_value()));
            let srg = c
                .srg
                .as_ref()
                .ok()
                .map(|s| (s.v, s.k, s.lambda, s.mu, s.s_eig));
            checks.push(check(
                "block graph SRG(v,k,lambda,mu) and smallest eigenvalue",
                Some((143, 72, 36, 36, -6)),
                srg,
            ));
            checks.push(check(
                "SRG equals closed form",
                true,
                c.srg.is_ok() && c.srg.as_ref().ok() == report.closed_form.as_ref().ok(),
            ));
            checks.push(check("Delsarte bound", Some(13), c.delsarte_bound));
            checks.push(check("clique number", 13, c.clique_number));
            checks.push(check(
                "maximum cliques (total, canonical, non-canonical)",
                (80, 66, 14),
                (c.total(), c.canonical(), c.non_canonical()),
            ));
            let failing = c
                .records
                .iter()
                .filter(|r| !r.classification.is_canonical() && !r.subdesign.is_design)
                .count();
            checks.push(check(
                "non-canonical cliques without design structure",
                14,
                failing,
            ));
            checks.push(check(
                "support-39 cliques with a 2-(13,4,1) core",
                13,
                plane_core_cliques(c),
            ));
            checks.push(check(
                "support-26 cliques with all multiplicities 3",
                1,
                triple_cover_cliques(c),
            ));
            let g = report.group.as_ref().ok();
            checks.push(check(
                "group order and abelian flag",
                Some((Some(39), Some(false))),
                g.map(|g| (g.order, g.abelian)),
            ));
            checks.push(check(
                "point orbits",
                Some(vec![39, 13, 13, 1]),
                g.map(|g| g.points.sorted_lengths()),
            ));
            checks.push(check(
                "block orbits",
                Some(vec![39, 39, 39, 13, 13]),
                g.map(|g| g.blocks.sorted_lengths()),
            ));
            checks.push(check(
                "canonical clique orbits",
                Some(vec![39, 13, 13, 1]),
                g.map(|g| g.canonical_clique_orbits.clone()),
            ));
            checks.push(check(
                "non-canonical clique orbits",
                Some(vec![13, 1]),
                g.map(|g| g.non_canonical_clique_orbits.clone()),
            ));
            checks.push(check(
                "block graph automorphisms equal the induced group",
                Some(true),
                a.graph_equals_induced,
            ));
        }
        BuiltinName::AppendixA66 | BuiltinName::AppendixB66 => {
            checks.push(check(
                "canonical and non-canonical maximum cliques",
                (66, 14),
                (c.canonical(), c.non_canonical()),
            ));
            let rep = representative_clique(name).expect("appendix designs list a clique");
            let tokens: Vec<Vec<String>> = rep
                .blocks
                .iter()
                .map(|b| b.iter().map(u32::to_string).collect())
                .collect();
            let found: Option<Vec<usize>> = tokens
                .iter()
                .map(|t| report.design.find_block_by_tokens(t).ok().flatten())
                .collect();
            let record = found.and_then(|mut members| {
                members.sort_unstable();
                c.records.iter().find(|r| r.clique.members() == members)
            });
            let core = record.map(|r| {
                let mut labels: Vec<u32> = r
                    .core
                    .core_points
                    .iter()
                    .filter_map(|&q| report.design.label(q).parse().ok())
                    .collect();
                labels.sort_unstable();
                labels
            });
            checks.push(check(
                "listed clique is a non-canonical maximum clique",
                true,
                record.is_some_and(|r| !r.classification.is_canonical()),
            ));
            checks.push(check(
                "listed intersecting points",
                Some(rep.core.to_vec()),
                core,
            ));
            let restricted =
                record.and_then(|r| r.core.restricted_params.as_ref().map(|p| (p.n, p.m)));
            checks.push(check("core restriction", Some((13, 4)), restricted));
        }
        _ => return None,
    }
    checks.push(check(
        "block graph automorphism group order",
        Some(39),
        report.graph_order(),
    ));
    checks.push(check(
        "block graph and design groups coincide",
        true,
        a.coincide,
    ));
    let (threshold, guaranteed) = report.threshold();
    checks.push(check(
        "threshold at m = 6 and only-canonical guarantee",
        (num_bigint::BigUint::from(156u32), false),
        (threshold, guaranteed),
    ));
    Some(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::builtin_design;

    #[test]
    fn invalid_design_is_rejected() {
        let d = builtin_design(BuiltinName::Fano).without_block(0);
        assert!(matches!(
            build_report(&d, "broken", &ReportOptions::default()),
            Err(ReportError::Invalid(_))
        ));
    }

    #[test]
    fn fano_report_is_degenerate() {
        let d = builtin_design(BuiltinName::Fano);
        let r = build_report(&d, "fano", &ReportOptions::default()).unwrap();
        assert_eq!(r.census.total(), 1);
        assert_eq!(r.graph_order(), Some(5040));
        assert_eq!(r.design_order(), Some(168));
        assert!(!r.automorphisms.coincide);
        assert_eq!(r.to_json()["srg"]["status"], "degenerate");
        assert!(check_paper(&r, BuiltinName::Fano).is_none());
    }

    #[test]
    fn ag23_report() {
        let d = builtin_design(BuiltinName::Ag23);
        let r = build_report(&d, "ag23", &ReportOptions::default()).unwrap();
        assert_eq!((r.census.total(), r.census.canonical()), (81, 9));
        assert_eq!(r.design_order(), Some(432));
        // K_{3,3,3,3} has far more symmetry than AG(2,3).
        assert_eq!(r.graph_order(), Some(31104));
        assert!(!r.automorphisms.coincide);
        let text = r.render_text();
        assert!(text.contains("maximum cliques: 81 (9 canonical, 72 non-canonical)"));
    }
}
