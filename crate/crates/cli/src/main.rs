use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use steiner_cliques::arith::{
    denniston_may_have_noncanonical, difference_multiset, family_params, gm_threshold,
    only_canonical_guaranteed, orbit_clique_certificate, squares_mod, ArithError, Family,
    ResidueSet,
};
use steiner_cliques::builtin::MAIN66_GENERATORS;
use steiner_cliques::clique::{
    census_report, check_clique, core_restriction, parse_clique_file, point_multiplicity_profile,
    subdesign_test, write_clique_file, CliqueClassification, SearchOptions,
};
use steiner_cliques::design::Violation;
use steiner_cliques::perm::{
    block_orbits, clique_orbits, coloured_orbit_split, design_automorphism_group,
    graph_automorphism_group, induced_block_action, parse_cycles, point_orbits, AutError,
    AutOptions, OrbitPartition, Permutation, SeedInvariants, DEFAULT_NODE_LIMIT,
};
use steiner_cliques::point::parse_points;
use steiner_cliques::report::{
    build_report, check_paper, GeneratorChoice, ReportError, ReportOptions,
};
use steiner_cliques::srg::SrgError;
use steiner_cliques::{
    builtin_design, parse_design, serialize_design, validate_2design, BuiltinName, Design,
    DesignFormat,
};

/// Writes to stdout, ignoring errors such as a closed pipe.
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

macro_rules! say_raw {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout().lock(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(name = "steiner-cliques", version)]
#[command(
    about = "Exact analysis of 2-(n,m,1) designs: validation, block graphs, maximum cliques and automorphisms"
)]
struct Cli {
    /// Worker threads for clique enumeration (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// Built-in design: main66, appendixA66, appendixB66, fano, ag23, pg23.
    #[arg(long, conflicts_with_all = ["input", "path"])]
    builtin: Option<String>,

    /// Design file.
    #[arg(long, conflicts_with = "path")]
    input: Option<PathBuf>,

    /// Design file (same as --input).
    path: Option<PathBuf>,

    /// Input format; files ending in .json default to json, others to blocklist.
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Blocklist,
    Json,
}

impl From<InputFormat> for DesignFormat {
    fn from(f: InputFormat) -> Self {
        match f {
            InputFormat::Blocklist => DesignFormat::Blocklist,
            InputFormat::Json => DesignFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Domain {
    Points,
    Blocks,
    Cliques,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportKind {
    Blocklist,
    Json,
    Adjacency,
    Edges,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the design axioms and print parameters, SRG data and the Delsarte bound.
    Verify(#[command(flatten)] Source),

    /// Enumerate and classify all maximum cliques of the block graph.
    Cliques {
        #[command(flatten)]
        source: Source,
        /// Expected counts, e.g. total=80,canonical=66,noncanonical=14.
        #[arg(long)]
        expect: Option<String>,
        /// Also write the cliques to this file (one per line, 0-based block indices).
        #[arg(long)]
        output: Option<PathBuf>,
    },

    /// Support, core restriction and subdesign verdict of each clique in a file.
    Subdesign {
        #[command(flatten)]
        source: Source,
        /// Clique file: one clique per line, 0-based block indices.
        #[arg(long)]
        cliques: PathBuf,
    },

    /// Orbits of a permutation group on points, blocks or maximum cliques.
    Orbits {
        #[command(flatten)]
        source: Source,
        /// Generator file, one permutation per line in cycle notation over point tokens.
        /// Defaults to the published generators for main66.
        #[arg(long)]
        generators: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "points")]
        domain: Domain,
    },

    /// Full automorphism groups of the block graph and of the design.
    Aut {
        #[command(flatten)]
        source: Source,
        /// Search node budget.
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        budget: u64,
    },

    /// Complete analysis report.
    Report {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        /// Compare against the published values (main66, appendixA66, appendixB66 only).
        #[arg(long)]
        check_paper: bool,
        /// Generators for the orbit section (default: published ones for main66, full search otherwise).
        #[arg(long)]
        generators: Option<PathBuf>,
        /// Automorphism search node budget.
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        budget: u64,
    },

    /// Write the design or its block graph in another format.
    Export {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "blocklist")]
        to: ExportKind,
    },

    /// Parameter thresholds, design families and residue arithmetic.
    #[command(subcommand)]
    Theory(Theory),
}

#[derive(Subcommand)]
enum Theory {
    /// The bound m^3-2m^2+2m above which only canonical maximum cliques exist.
    Gm {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Denniston parameters and whether non-canonical cliques are possible.
    Denniston {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
    },
    /// Points and lines of AG(d,q).
    Affine {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        q: u64,
    },
    /// Points and lines of PG(d,q).
    Projective {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        q: u64,
    },
    /// Unital parameters 2-(t^3+1, t+1, 1).
    Unital {
        #[arg(long)]
        t: u64,
    },
    /// Nonzero squares and non-squares modulo an odd prime.
    Squares {
        #[arg(long)]
        p: u64,
    },
    /// Difference multiset of a residue set.
    Diffset {
        #[arg(long)]
        p: u64,
        /// Comma-separated residues.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        set: Vec<u64>,
    },
    /// Whether the translates of a two-tagged base block pairwise intersect.
    Certificate {
        /// Base block in point tokens, e.g. "2_a 6_a 5_a 4_b 12_b 10_b".
        #[arg(long)]
        block: String,
        #[arg(long, default_value_t = 13)]
        p: u8,
    },
}

/// Exit 1: a check failed. Exit 2: bad input.
enum Failure {
    Check(String),
    Usage(String),
}

type Outcome = Result<(), Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

struct Loaded {
    design: Design,
    id: String,
    builtin: Option<BuiltinName>,
}

fn load(source: &Source) -> Result<Loaded, Failure> {
    if let Some(name) = &source.builtin {
        let builtin: BuiltinName = name.parse().map_err(usage)?;
        return Ok(Loaded {
            design: builtin_design(builtin),
            id: builtin.as_str().into(),
            builtin: Some(builtin),
        });
    }
    let path = source
        .input
        .as_ref()
        .or(source.path.as_ref())
        .ok_or_else(|| usage("no design given: use --builtin NAME, --input FILE or a path"))?;
    let text = read(path)?;
    let format = source
        .input_format
        .map(DesignFormat::from)
        .unwrap_or_else(|| {
            if path.extension().is_some_and(|e| e == "json") {
                DesignFormat::Json
            } else {
                DesignFormat::Blocklist
            }
        });
    let design =
        parse_design(&text, format).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok(Loaded {
        design,
        id: path.display().to_string(),
        builtin: None,
    })
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn describe_violation(design: &Design, v: &Violation) -> String {
    match v {
        Violation::PairCoverage { a, b, count } => {
            format!(
                "pair {} {} covered {count} times",
                design.label(*a),
                design.label(*b)
            )
        }
        Violation::Replication {
            point,
            count,
            expected,
        } => {
            format!(
                "point {} lies in {count} blocks, expected {expected}",
                design.label(*point)
            )
        }
        Violation::BlockCount { count, expected } => format!("{count} blocks, expected {expected}"),
        Violation::Inadmissible => "parameters fail the divisibility conditions".into(),
    }
}

/// Fails with exit 1 unless the design is a valid 2-(n,m,1) design.
fn require_valid(design: &Design) -> Outcome {
    let report = validate_2design(design);
    if report.valid {
        return Ok(());
    }
    let mut msg = format!("invalid design: {} violations", report.violations.len());
    for v in report.violations.iter().take(10) {
        msg.push_str("\n  ");
        msg.push_str(&describe_violation(design, v));
    }
    Err(Failure::Check(msg))
}

fn search_options(cli_workers: Option<usize>) -> SearchOptions {
    SearchOptions {
        workers: cli_workers,
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_verify(source: &Source) -> Outcome {
    let Loaded { design, id, .. } = load(source)?;
    let report = validate_2design(&design);
    say!(
        "design {id}: n = {}, m = {}, b = {}",
        design.n(),
        design.m(),
        design.b()
    );
    if let Some(p) = &report.params {
        say!(
            "parameters: {p}{}",
            if p.admissible() {
                ""
            } else {
                " (inadmissible)"
            }
        );
    }
    require_valid(&design)?;
    say!(
        "validation: valid 2-({},{},1) design",
        design.n(),
        design.m()
    );
    let graph = steiner_cliques::build_block_graph(&design);
    match steiner_cliques::verify_srg(&graph) {
        Ok(srg) => {
            say!("block graph: {srg}");
            match steiner_cliques::delsarte_bound(&srg) {
                Some(b) => say!("delsarte bound: {b}"),
                None => say!("delsarte bound: n/a"),
            }
        }
        Err(SrgError::Degenerate(d)) => say!("block graph: degenerate ({d}), symmetric design"),
        Err(e) => {
            return Err(Failure::Check(format!(
                "block graph is not strongly regular: {e}"
            )))
        }
    }
    Ok(())
}

fn parse_expect(text: &str) -> Result<BTreeMap<&'static str, usize>, Failure> {
    let mut out = BTreeMap::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| usage(format!("bad --expect item `{item}`")))?;
        let key = match key.trim() {
            "total" => "total",
            "canonical" => "canonical",
            "noncanonical" | "non_canonical" | "non-canonical" => "noncanonical",
            other => return Err(usage(format!("unknown --expect key `{other}`"))),
        };
        let value = value
            .trim()
            .parse()
            .map_err(|_| usage(format!("bad count in `{item}`")))?;
        out.insert(key, value);
    }
    Ok(out)
}

fn cmd_cliques(
    source: &Source,
    expect: Option<&str>,
    output: Option<&Path>,
    workers: Option<usize>,
) -> Outcome {
    let expected = expect.map(parse_expect).transpose()?;
    let Loaded { design, .. } = load(source)?;
    require_valid(&design)?;
    let census = census_report(&design, search_options(workers))
        .map_err(|e| Failure::Check(e.to_string()))?;
    say!(
        "clique number {}: {} maximum cliques ({} canonical, {} non-canonical)",
        census.clique_number,
        census.total(),
        census.canonical(),
        census.non_canonical()
    );
    for (i, r) in census.records.iter().enumerate() {
        let kind = match r.classification {
            CliqueClassification::Canonical { witness } => {
                format!("canonical {}", design.label(witness))
            }
            CliqueClassification::NonCanonical => "non-canonical".into(),
        };
        say!("{i}: {kind}: {}", join(r.clique.members()));
    }
    if let Some(path) = output {
        fs::write(path, write_clique_file(&census.cliques()))
            .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    let mut mismatches = Vec::new();
    for (key, want) in expected.unwrap_or_default() {
        let got = match key {
            "total" => census.total(),
            "canonical" => census.canonical(),
            _ => census.non_canonical(),
        };
        if got != want {
            mismatches.push(format!("{key}: expected {want}, found {got}"));
        }
    }
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(mismatches.join("\n")))
    }
}

fn cmd_subdesign(source: &Source, cliques: &Path) -> Outcome {
    let Loaded { design, .. } = load(source)?;
    let list = parse_clique_file(&read(cliques)?).map_err(usage)?;
    for (i, c) in list.iter().enumerate() {
        check_clique(&design, c).map_err(|e| Failure::Check(format!("clique {i}: {e}")))?;
        let verdict = subdesign_test(&design, c);
        let core = core_restriction(&design, c);
        let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
        for &k in point_multiplicity_profile(&design, c).values() {
            *hist.entry(k).or_insert(0) += 1;
        }
        let candidate = verdict
            .candidate_params
            .as_ref()
            .map_or("none".to_string(), |p| {
                format!(
                    "2-({},{},1) {}",
                    p.n,
                    p.m,
                    if p.admissible() {
                        "admissible"
                    } else {
                        "inadmissible"
                    }
                )
            });
        say!("clique {i}: {} blocks", c.len());
        say!(
            "  support: {} points; candidate {candidate}",
            verdict.support_size
        );
        say!(
            "  pair coverage exact: {}; design structure: {}",
            yes_no(verdict.pair_coverage_ok),
            yes_no(verdict.is_design)
        );
        let tokens: Vec<&str> = core.core_points.iter().map(|&p| design.label(p)).collect();
        say!(
            "  core: {} points: {}",
            core.core_points.len(),
            tokens.join(" ")
        );
        match &core.restricted_params {
            Some(p) => say!("  core restriction: 2-({},{},1) design", p.n, p.m),
            None => say!("  core restriction: not a 2-design"),
        }
        say!(
            "  points outside the core per block: {}",
            join(&core.extension_sizes)
        );
        let h: Vec<String> = hist
            .iter()
            .map(|(k, n)| format!("{n} points in {k} blocks"))
            .collect();
        say!("  multiplicities: {}", h.join(", "));
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn load_generators(
    path: Option<&Path>,
    loaded: &Loaded,
) -> Result<(String, Vec<Permutation>), Failure> {
    let labels = loaded.design.labels();
    match path {
        Some(path) => {
            let text = read(path)?;
            let gens = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty())
                .map(|l| {
                    parse_cycles(l, labels).map_err(|e| usage(format!("{}: {e}", path.display())))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok((path.display().to_string(), gens))
        }
        None if loaded.builtin == Some(BuiltinName::Main66) => {
            let gens = MAIN66_GENERATORS
                .iter()
                .map(|g| parse_cycles(g, labels).expect("embedded generators"))
                .collect();
            Ok(("builtin pi1, pi2".into(), gens))
        }
        None => Err(usage("--generators is required for this design")),
    }
}

fn print_orbits(part: &OrbitPartition, name: impl Fn(usize) -> String) {
    say!("orbit lengths: {}", join(&part.sorted_lengths()));
    for orbit in &part.orbits {
        let items: Vec<String> = orbit.iter().map(|&x| name(x)).collect();
        say!("{}", items.join(" "));
    }
}

fn cmd_orbits(
    source: &Source,
    generators: Option<&Path>,
    domain: Domain,
    workers: Option<usize>,
) -> Outcome {
    let loaded = load(source)?;
    let (_, gens) = load_generators(generators, &loaded)?;
    let design = &loaded.design;
    for (i, g) in gens.iter().enumerate() {
        induced_block_action(design, g)
            .map_err(|e| Failure::Check(format!("generator {}: {e}", i + 1)))?;
    }
    match domain {
        Domain::Points => {
            let part = point_orbits(design.n(), &gens);
            print_orbits(&part, |p| design.label(p).to_string());
        }
        Domain::Blocks => {
            let part = block_orbits(design, &gens).map_err(|e| Failure::Check(e.to_string()))?;
            print_orbits(&part, |b| b.to_string());
        }
        Domain::Cliques => {
            require_valid(design)?;
            let census = census_report(design, search_options(workers))
                .map_err(|e| Failure::Check(e.to_string()))?;
            let part = clique_orbits(design, &census.cliques(), &gens)
                .map_err(|e| Failure::Check(e.to_string()))?;
            let flags: Vec<bool> = census
                .records
                .iter()
                .map(|r| r.classification.is_canonical())
                .collect();
            let (canonical, other) = coloured_orbit_split(&part, &flags);
            say!("canonical clique orbit lengths: {}", join(&canonical));
            say!("non-canonical clique orbit lengths: {}", join(&other));
            print_orbits(&part, |c| c.to_string());
        }
    }
    Ok(())
}

fn cmd_aut(source: &Source, budget: u64, workers: Option<usize>) -> Outcome {
    let Loaded { design, .. } = load(source)?;
    require_valid(&design)?;
    let census = census_report(&design, search_options(workers))
        .map_err(|e| Failure::Check(e.to_string()))?;
    let options = AutOptions { node_limit: budget };
    let seeds = SeedInvariants::with_cliques(&census.graph, &census.cliques());
    let graph = match graph_automorphism_group(&census.graph, &seeds, options) {
        Ok(g) => g,
        Err(AutError::BudgetExceeded { limit, found }) => {
            say!(
                "block graph search incomplete after {limit} nodes; partial generators on blocks:"
            );
            for g in &found {
                say!("  {}", g.to_index_cycle_string());
            }
            return Err(Failure::Check(format!(
                "automorphism search budget of {limit} nodes exhausted"
            )));
        }
        Err(e) => return Err(Failure::Check(e.to_string())),
    };
    say!(
        "block graph automorphism group: order {} ({} search nodes)",
        graph.order,
        graph.nodes
    );
    say!("generators on blocks:");
    for g in &graph.generators {
        say!("  {}", g.to_index_cycle_string());
    }
    match design_automorphism_group(&design, options) {
        Ok(d) => {
            say!("design automorphism group: order {}", d.order);
            say!("generators on points:");
            for g in &d.generators {
                say!("  {}", g.to_cycle_string(design.labels()));
            }
            let induced = graph.generators.iter().all(|bp| {
                steiner_cliques::perm::point_action_from_block_perm(&design, bp)
                    .and_then(|pp| induced_block_action(&design, &pp).ok())
                    .is_some_and(|back| &back == bp)
            });
            let coincide = d.order == graph.order && induced;
            say!("groups coincide: {}", yes_no(coincide));
            Ok(())
        }
        Err(e) => Err(Failure::Check(format!("design automorphism search: {e}"))),
    }
}

fn cmd_report(
    source: &Source,
    format: ReportFormat,
    check: bool,
    generators: Option<&Path>,
    budget: u64,
    workers: Option<usize>,
) -> Outcome {
    let loaded = load(source)?;
    let name = loaded.builtin;
    if check
        && !matches!(
            name,
            Some(BuiltinName::Main66 | BuiltinName::AppendixA66 | BuiltinName::AppendixB66)
        )
    {
        return Err(usage(
            "--check-paper needs --builtin main66, appendixA66 or appendixB66",
        ));
    }
    let choice = match generators {
        Some(path) => {
            let (source, generators) = load_generators(Some(path), &loaded)?;
            GeneratorChoice::Supplied { source, generators }
        }
        None => GeneratorChoice::default_for(name, &loaded.design),
    };
    let options = ReportOptions {
        search: search_options(workers),
        aut: AutOptions { node_limit: budget },
        generators: choice,
    };
    let report = match build_report(&loaded.design, &loaded.id, &options) {
        Ok(r) => r,
        Err(ReportError::Invalid(_)) => return require_valid(&loaded.design),
        Err(e) => return Err(Failure::Check(e.to_string())),
    };
    match format {
        ReportFormat::Text => say_raw!("{}", report.render_text()),
        ReportFormat::Json => say_raw!("{}", report.to_json_string()),
    }
    let mut failures = Vec::new();
    if let Err(e) = &report.group {
        failures.push(format!("group: {e}"));
    }
    for (what, r) in [
        ("block graph", &report.automorphisms.graph),
        ("design", &report.automorphisms.design),
    ] {
        if let Err(e) = r {
            failures.push(format!("{what} automorphisms: {e}"));
        }
    }
    if check {
        let checks = check_paper(&report, name.expect("checked above")).expect("paper design");
        for c in &checks {
            let status = if c.ok() { "ok" } else { "FAIL" };
            eprintln!(
                "check {status}: {} (expected {}, found {})",
                c.claim, c.expected, c.actual
            );
            if !c.ok() {
                failures.push(c.claim.to_string());
            }
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("failed: {}", failures.join("; "))))
    }
}

fn cmd_export(source: &Source, to: ExportKind) -> Outcome {
    let Loaded { design, .. } = load(source)?;
    let graph = || steiner_cliques::build_block_graph(&design);
    let text = match to {
        ExportKind::Blocklist => serialize_design(&design, DesignFormat::Blocklist),
        ExportKind::Json => serialize_design(&design, DesignFormat::Json),
        ExportKind::Adjacency => graph().upper_triangular_text(),
        ExportKind::Edges => graph().edge_list_text(),
    };
    say_raw!("{text}");
    Ok(())
}

fn arith(e: ArithError) -> Failure {
    usage(e)
}

fn print_family(f: Family) -> Outcome {
    let p = family_params(f).map_err(arith)?;
    let threshold = gm_threshold(p.m.clone());
    say!("{f}: n = {}, m = {}", p.n, p.m);
    say!("threshold m^3-2m^2+2m = {threshold}");
    let relation = match p.n.cmp(&threshold) {
        std::cmp::Ordering::Less => "<",
        std::cmp::Ordering::Equal => "=",
        std::cmp::Ordering::Greater => ">",
    };
    say!(
        "n {relation} threshold; only canonical cliques guaranteed: {}",
        yes_no(p.n > threshold)
    );
    Ok(())
}

fn cmd_theory(t: &Theory) -> Outcome {
    match t {
        Theory::Gm { m, n } => {
            if *m < 2 {
                return Err(usage("m must be at least 2"));
            }
            say!("threshold m^3-2m^2+2m for m = {m}: {}", gm_threshold(*m));
            if let Some(n) = n {
                say!(
                    "only canonical cliques guaranteed for n = {n}: {}",
                    yes_no(only_canonical_guaranteed(*n, *m))
                );
            }
        }
        Theory::Denniston { r, s } => {
            let flag = denniston_may_have_noncanonical(*r, *s).map_err(arith)?;
            print_family(Family::Denniston { r: *r, s: *s })?;
            say!("s < 2r, non-canonical cliques possible: {}", yes_no(flag));
        }
        Theory::Affine { d, q } => print_family(Family::Affine { d: *d, q: *q })?,
        Theory::Projective { d, q } => print_family(Family::Projective { d: *d, q: *q })?,
        Theory::Unital { t } => print_family(Family::Unital { t: *t })?,
        Theory::Squares { p } => {
            let s = squares_mod(*p).map_err(arith)?;
            say!("squares mod {p}: {s}");
            say!("non-squares mod {p}: {}", s.nonzero_complement());
        }
        Theory::Diffset { p, set } => {
            let s = ResidueSet::new(*p, set.iter().copied()).map_err(arith)?;
            let diffs = difference_multiset(&s);
            say!("{s} - {s} = {diffs}");
            if let Ok(squares) = squares_mod(*p) {
                let once = diffs.by_multiplicity().get(&1).cloned();
                if once.as_ref() == Some(&squares) {
                    say!("each nonzero square mod {p} occurs exactly once");
                } else if once.as_ref() == Some(&squares.nonzero_complement()) {
                    say!("each non-square mod {p} occurs exactly once");
                }
            }
        }
        Theory::Certificate { block, p } => {
            let points = parse_points(block).map_err(usage)?;
            let c = orbit_clique_certificate(&points, *p).map_err(arith)?;
            for i in 0..2 {
                say!(
                    "{}-part {} differences: {}",
                    c.tags[i].symbol(),
                    c.parts[i],
                    c.part_diffs[i]
                );
            }
            let totals: Vec<String> = (1..c.totals.len())
                .map(|d| format!("{d}:{}", c.totals[d]))
                .collect();
            say!("intersection with each nonzero shift: {}", totals.join(" "));
            say!(
                "translates pairwise intersect: {}",
                yes_no(c.pairwise_intersecting)
            );
            say!(
                "every shift meets in exactly one point: {}",
                yes_no(c.exactly_once())
            );
            if !c.pairwise_intersecting {
                return Err(Failure::Check("some translates are disjoint".into()));
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let w = cli.workers;
    if w == Some(0) {
        return Err(usage("--workers must be positive"));
    }
    match &cli.command {
        Command::Verify(source) => cmd_verify(source),
        Command::Cliques {
            source,
            expect,
            output,
        } => cmd_cliques(source, expect.as_deref(), output.as_deref(), w),
        Command::Subdesign { source, cliques } => cmd_subdesign(source, cliques),
        Command::Orbits {
            source,
            generators,
            domain,
        } => cmd_orbits(source, generators.as_deref(), *domain, w),
        Command::Aut { source, budget } => cmd_aut(source, *budget, w),
        Command::Report {
            source,
            format,
            check_paper,
            generators,
            budget,
        } => cmd_report(
            source,
            *format,
            *check_paper,
            generators.as_deref(),
            *budget,
            w,
        ),
        Command::Export { source, to } => cmd_export(source, *to),
        Command::Theory(t) => cmd_theory(t),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
