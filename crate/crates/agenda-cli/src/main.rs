use agenda_core::feature_space::{build_space, FeatureSpace, Parameter, Scale, DEFAULT_PROFILE_CAP};
use agenda_core::lattice::{AgendaLattice, AgendaSort, IssueSet, LatticeError, DEFAULT_GENERATOR_CAP};
use agenda_core::logic::correspondence::{correspondence_pair, pair_condition, FrameCaps, PAIR_COUNT};
use agenda_core::logic::fixtures::{check_fixture, gt_fixture};
use agenda_core::logic::frame::{FrameDoc, RelationalStructure};
use agenda_core::logic::LogicError;
use agenda_core::scenario::{self, fixtures, partition_lattice_dot, profile_poset_dot, Scenario, ScenarioError};
use clap::{Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::fmt::Write as _;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "agendas", version, about = "Interrogative agendas, coalitions and deliberation")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a deliberation scenario.
    Analyze {
        /// Scenario JSON file.
        #[arg(required_unless_present = "fixture")]
        file: Option<String>,
        /// Use a bundled scenario instead of a file.
        #[arg(long, conflicts_with = "file")]
        fixture: Option<String>,
    },
    /// Build an agenda lattice, a profile poset or a partition lattice.
    Lattice {
        /// Parameters as `name` (binary) or `name:k` (k-valued chain), comma separated.
        #[arg(long, conflicts_with = "scenario")]
        params: Option<String>,
        /// Generators over `--params`.
        #[arg(long, value_enum, default_value = "projections", requires = "params")]
        issues: IssueKind,
        /// Use the agenda lattice of a scenario file.
        #[arg(long)]
        scenario: Option<String>,
        /// Show the profile poset instead of the agenda lattice.
        #[arg(long)]
        profiles: bool,
        /// Show the full partition lattice E(W) on these points, comma separated.
        #[arg(long, conflicts_with_all = ["params", "scenario", "profiles"])]
        ground: Option<String>,
        /// Generator cap for materializing the lattice.
        #[arg(long, default_value_t = DEFAULT_GENERATOR_CAP)]
        cap: usize,
        /// Emit Graphviz DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Check each condition against its axioms on many relational structures.
    CheckCorrespondence {
        /// All structures with at most n agents and n issues.
        #[arg(long, conflicts_with = "random")]
        exhaustive: Option<usize>,
        /// This many random structures.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Agents and issues in each random structure.
        #[arg(long, default_value_t = 3)]
        size: usize,
        /// Only this pair (1 to 11).
        #[arg(long)]
        pair: Option<usize>,
    },
    /// Check one of the non-definability frame constructions.
    Frames {
        #[arg(long)]
        fixture: u8,
        /// Term depth for the sequent comparison.
        #[arg(long, default_value_t = 2)]
        depth: usize,
        /// Atoms per sort in generated terms.
        #[arg(long, default_value_t = 1)]
        atoms: usize,
    },
    /// Decompose a sum agenda into its threshold issues.
    Decompose {
        #[arg(long)]
        scenario: String,
        /// Parameter set, comma separated.
        #[arg(long)]
        set: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IssueKind {
    Projections,
    Thresholds,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<ScenarioError> for Failure {
    fn from(e: ScenarioError) -> Self {
        Failure { code: e.exit_code() as u8, message: e.to_string() }
    }
}

impl From<LogicError> for Failure {
    fn from(e: LogicError) -> Self {
        Failure { code: if e.is_cap() { 2 } else { 1 }, message: e.to_string() }
    }
}

impl From<LatticeError> for Failure {
    fn from(e: LatticeError) -> Self {
        ScenarioError::from(e).into()
    }
}

fn fail(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

type Outcome = Result<String, Failure>;

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) -> Outcome {
    if json {
        Ok(serde_json::to_string_pretty(value).expect("reports serialize") + "\n")
    } else {
        Ok(text())
    }
}

fn load(path: &str) -> Result<Scenario, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| fail(format!("{path}: {e}")))?;
    Ok(Scenario::from_json(&text)?)
}

fn split(list: &str) -> Vec<String> {
    list.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect()
}

fn analyze(json: bool, file: Option<String>, fixture: Option<String>) -> Outcome {
    let s = match (file, fixture) {
        (Some(f), _) => load(&f)?,
        (None, Some(name)) => {
            let text = fixtures::by_name(&name)
                .ok_or_else(|| fail(format!("unknown fixture `{name}`; known: {}", fixtures::NAMES.join(", "))))?;
            Scenario::from_json(text)?
        }
        (None, None) => return Err(fail("no scenario given")),
    };
    let report = s.analyze()?;
    emit(json, &report, || report.to_text())
}

fn params_space(spec: &str) -> Result<FeatureSpace, Failure> {
    let mut params = Vec::new();
    for p in split(spec) {
        let (name, k) = match p.split_once(':') {
            Some((n, k)) => (n.to_string(), k.parse::<usize>().map_err(|_| fail(format!("bad value count in `{p}`")))?),
            None => (p.clone(), 2),
        };
        if k < 2 {
            return Err(fail(format!("`{name}` needs at least two values")));
        }
        params.push(Parameter::new(name, Scale::uniform_chain(k)));
    }
    build_space(params, DEFAULT_PROFILE_CAP).map_err(|e| ScenarioError::from(e).into())
}

#[derive(Serialize)]
struct LatticeSummary {
    generators: Vec<String>,
    size: usize,
    boolean: bool,
    distributive: bool,
    /// A triple `x, y, z` with `x ⊓ (y ⊔ z) ≠ (x ⊓ y) ⊔ (x ⊓ z)`.
    witness: Option<[String; 3]>,
}

fn summarize(lat: &AgendaLattice) -> Result<LatticeSummary, Failure> {
    let witness = lat.distributivity_witness()?;
    Ok(LatticeSummary {
        generators: lat.issue_set().issues().iter().map(|i| i.id.clone()).collect(),
        size: lat.elements()?.len(),
        boolean: lat.is_boolean(),
        distributive: witness.is_none(),
        witness: witness.map(|(x, y, z)| [lat.describe(x), lat.describe(y), lat.describe(z)]),
    })
}

#[derive(Serialize)]
struct Dot {
    dot: String,
}

fn lattice(json: bool, cmd: Command) -> Outcome {
    let Command::Lattice { params, issues, scenario, profiles, ground, cap, dot } = cmd else { unreachable!() };
    if let Some(points) = ground {
        let d = partition_lattice_dot(&split(&points), 8)?;
        return emit(json, &Dot { dot: d.clone() }, || d);
    }
    let (space, lat) = match (params, scenario) {
        (Some(spec), _) => {
            let space = params_space(&spec)?;
            let set = match issues {
                IssueKind::Projections => IssueSet::projections(&space),
                IssueKind::Thresholds => IssueSet::all_thresholds(&space),
            }?;
            (space, AgendaLattice::build(set, cap))
        }
        (None, Some(path)) => {
            let s = load(&path)?;
            let set = s.structure().lattice().issue_set().clone();
            (s.space().clone(), AgendaLattice::build(set, cap))
        }
        (None, None) => return Err(fail("give --params, --scenario or --ground")),
    };
    if profiles {
        let d = profile_poset_dot(&space);
        return emit(json, &Dot { dot: d.clone() }, || d);
    }
    if dot {
        let d = lat.hasse_dot()?;
        return emit(json, &Dot { dot: d.clone() }, || d);
    }
    let summary = summarize(&lat)?;
    emit(json, &summary, || {
        let mut out = String::new();
        let _ = writeln!(out, "generators ({}): {}", summary.generators.len(), summary.generators.join(", "));
        let _ = writeln!(out, "elements: {}", summary.size);
        let _ = writeln!(out, "boolean: {}", summary.boolean);
        match &summary.witness {
            None => out.push_str("distributive: true\n"),
            Some([x, y, z]) => {
                let _ = writeln!(out, "distributive: false (x = {x}, y = {y}, z = {z})");
            }
        }
        out
    })
}

#[derive(Serialize)]
struct PairSummary {
    pair: usize,
    condition: String,
    structures: usize,
    condition_holds: usize,
    disagreements: usize,
    first_counterexample: Option<FrameDoc>,
}

fn check_correspondence(
    json: bool,
    exhaustive: Option<usize>,
    random: Option<usize>,
    seed: u64,
    size: usize,
    pair: Option<usize>,
) -> Outcome {
    let caps = FrameCaps::default();
    let frames: Vec<RelationalStructure> = match (exhaustive, random) {
        (Some(n), _) => {
            let mut out = Vec::new();
            for nc in 1..=n {
                for nd in 1..=n {
                    out.extend(RelationalStructure::all(nc, nd)?);
                }
            }
            out
        }
        (None, Some(k)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..k).map(|_| RelationalStructure::random(size, size, &mut rng)).collect::<Result<_, _>>()?
        }
        (None, None) => return Err(fail("give --exhaustive n or --random k")),
    };
    let pairs: Vec<usize> = match pair {
        Some(k) => {
            pair_condition(k)?;
            vec![k]
        }
        None => (1..=PAIR_COUNT).collect(),
    };
    let mut summaries = Vec::new();
    for k in pairs {
        let mut s = PairSummary {
            pair: k,
            condition: pair_condition(k)?.to_string(),
            structures: frames.len(),
            condition_holds: 0,
            disagreements: 0,
            first_counterexample: None,
        };
        for f in &frames {
            let r = correspondence_pair(f, k, caps)?;
            s.condition_holds += r.fo as usize;
            if !r.agree {
                s.disagreements += 1;
                s.first_counterexample.get_or_insert_with(|| f.to_doc());
            }
        }
        summaries.push(s);
    }
    emit(json, &summaries, || {
        let mut out = String::new();
        for s in &summaries {
            let verdict = if s.disagreements == 0 { "agree".to_string() } else { format!("{} disagreements", s.disagreements) };
            let _ = writeln!(
                out,
                "pair {:>2} {:<22} {} structures, condition holds on {}: {verdict}",
                s.pair, s.condition, s.structures, s.condition_holds
            );
            if let Some(doc) = &s.first_counterexample {
                let _ = writeln!(out, "         e.g. {}", serde_json::to_string(doc).expect("frames serialize"));
            }
        }
        out
    })
}

fn frames(json: bool, case: u8, depth: usize, atoms: usize) -> Outcome {
    let fx = gt_fixture(case)?;
    let r = check_fixture(&fx, depth, atoms)?;
    emit(json, &r, || {
        let mut out = String::new();
        let _ = writeln!(out, "case {}: {} ({})", r.case, r.condition, r.shape);
        if let Some(s) = r.source_holds {
            let _ = writeln!(out, "  source satisfies condition: {s}");
        }
        let _ = writeln!(out, "  target satisfies condition: {}", r.target_holds);
        let _ = writeln!(out, "  verdicts match the claim: {}", r.claims_match);
        if let Some(m) = r.forth_morphism {
            let _ = writeln!(out, "  surjective forth morphism: {m}");
        }
        if let Some(e) = &r.equivalence {
            let _ = writeln!(out, "  sequents compared: {} (depth {}, {} atom per sort)", e.sequents_checked, e.depth, e.atom_cap);
            match &e.first_disagreement {
                None => out.push_str("  source and target validate the same sequents\n"),
                Some(d) => {
                    let _ = writeln!(
                        out,
                        "  disagree on {}: source {}, target {}",
                        d.sequent, d.valid_in_first, d.valid_in_second
                    );
                }
            }
        }
        if let Some(t) = &r.transfer {
            let _ = writeln!(out, "  sequents compared: {}", t.sequents_checked);
            match &t.counterexample {
                None => out.push_str("  every sequent valid in both components is valid in the union\n"),
                Some(s) => {
                    let _ = writeln!(out, "  valid in both components but not in the union: {s}");
                }
            }
        }
        if r.partial {
            out.push_str("  partial: only the finite target is built\n");
        }
        out
    })
}

fn decompose(json: bool, path: &str, set: &str) -> Outcome {
    let s = load(path)?;
    let names = split(set);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let r: scenario::DecomposeReport = s.decompose(&refs)?;
    emit(json, &r, || {
        format!(
            "e^Σ_{{{}}} has {} blocks\nthresholds: {}\nmeet of thresholds equals the sum agenda: {}\n",
            r.set.join(","),
            r.sum_blocks,
            r.thresholds.join(", "),
            r.equals_sum_agenda
        )
    })
}

fn run(cli: Cli) -> Outcome {
    let json = cli.json;
    match cli.command {
        Command::Analyze { file, fixture } => analyze(json, file, fixture),
        cmd @ Command::Lattice { .. } => lattice(json, cmd),
        Command::CheckCorrespondence { exhaustive, random, seed, size, pair } => {
            check_correspondence(json, exhaustive, random, seed, size, pair)
        }
        Command::Frames { fixture, depth, atoms } => frames(json, fixture, depth, atoms),
        Command::Decompose { scenario, set } => decompose(json, &scenario, &set),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
