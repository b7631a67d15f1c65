//! Deliberation scenarios: JSON ingestion, end-to-end analysis and reports.

use crate::coalition::{AgentSet, Coalition, CoalitionError, Influence};
use crate::feature_space::{
    self, build_space, decide, Agenda, FeatureError, FeatureSpace, Parameter, Rule, Scale, ScaleKind, Verdict,
    DEFAULT_PROFILE_CAP,
};
use crate::hetero::{HeteroError, HeteroStructure, Triple};
use crate::lattice::{self, AgendaLattice, AgendaSort, Elem, IssueSet, LatticeError, DEFAULT_GENERATOR_CAP};
use crate::logic::term::{build, ITerm, Valuation};
use crate::partition::{Partition, PartitionError};
use indexmap::IndexMap;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScenarioError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid scenario:\n  {}", .0.join("\n  "))]
    Validation(Vec<String>),
    #[error("cap exceeded: {0}")]
    Cap(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl ScenarioError {
    /// Process exit code: 1 validation, 2 cap, 3 invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            ScenarioError::Parse(_) | ScenarioError::Validation(_) => 1,
            ScenarioError::Cap(_) => 2,
            ScenarioError::Invariant(_) => 3,
        }
    }

    fn one(msg: impl ToString) -> Self {
        ScenarioError::Validation(vec![msg.to_string()])
    }
}

impl From<FeatureError> for ScenarioError {
    fn from(e: FeatureError) -> Self {
        match e {
            FeatureError::CapExceeded { .. } | FeatureError::Partition(PartitionError::SizeCap { .. }) => {
                ScenarioError::Cap(e.to_string())
            }
            other => ScenarioError::one(other),
        }
    }
}

impl From<LatticeError> for ScenarioError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::NotMaterialized { .. } => ScenarioError::Cap(e.to_string()),
            LatticeError::Feature(f) => f.into(),
            other => ScenarioError::one(other),
        }
    }
}

impl From<HeteroError> for ScenarioError {
    fn from(e: HeteroError) -> Self {
        match e {
            HeteroError::Lattice(l) => l.into(),
            other => ScenarioError::Invariant(other.to_string()),
        }
    }
}

impl From<CoalitionError> for ScenarioError {
    fn from(e: CoalitionError) -> Self {
        ScenarioError::one(e)
    }
}

pub type Result<T> = std::result::Result<T, ScenarioError>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScaleDoc {
    pub kind: ScaleKind,
    pub values: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numeric: Option<IndexMap<String, String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterDoc {
    pub name: String,
    pub scale: ScaleDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubstitutionDoc {
    pub agent: String,
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct OptionsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator_cap: Option<usize>,
    /// Extra agendas to decide with, each a list of issue ids.
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub agendas: IndexMap<String, Vec<String>>,
}

/// The scenario document, field for field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioDoc {
    pub agents: Vec<String>,
    pub parameters: Vec<ParameterDoc>,
    pub winning_rule: Rule,
    pub candidates: IndexMap<String, IndexMap<String, String>>,
    pub relevance: IndexMap<String, Vec<String>>,
    #[serde(default)]
    pub influence: Vec<[String; 2]>,
    #[serde(default)]
    pub substitution: Vec<SubstitutionDoc>,
    #[serde(default)]
    pub options: OptionsDoc,
}

/// A fully resolved scenario.
#[derive(Debug, Clone)]
pub struct Scenario {
    doc: ScenarioDoc,
    space: FeatureSpace,
    rule: Rule,
    candidates: [(String, usize); 2],
    structure: HeteroStructure<AgendaLattice>,
    named: Vec<(String, Elem)>,
}

fn parse_rational(s: &str) -> Option<Rational64> {
    s.trim().parse::<Rational64>().ok()
}

fn build_scale(doc: &ScaleDoc) -> std::result::Result<Scale, String> {
    let idx = |v: &str| doc.values.iter().position(|x| x == v).ok_or_else(|| format!("unknown scale value `{v}`"));
    let numeric: Vec<Option<Rational64>> = match &doc.numeric {
        Some(map) => {
            for k in map.keys() {
                idx(k)?;
            }
            doc.values
                .iter()
                .map(|v| match map.get(v) {
                    Some(s) => parse_rational(s).map(Some).ok_or_else(|| format!("`{s}` is not a rational")),
                    None => Ok(None),
                })
                .collect::<std::result::Result<_, _>>()?
        }
        None => doc.values.iter().map(|v| parse_rational(v)).collect(),
    };
    match doc.kind {
        ScaleKind::Chain => {
            if doc.covers.is_some() {
                return Err("chain scales take no covers".into());
            }
            let num = if numeric.iter().all(Option::is_some) { Some(numeric.into_iter().flatten().collect()) } else { None };
            Scale::chain(&doc.values, num).map_err(|e| e.to_string())
        }
        ScaleKind::Poset => {
            let covers = doc
                .covers
                .as_ref()
                .ok_or("poset scales need covers")?
                .iter()
                .map(|[a, b]| Ok((idx(a)?, idx(b)?)))
                .collect::<std::result::Result<Vec<_>, String>>()?;
            Scale::poset(&doc.values, &covers, numeric).map_err(|e| e.to_string())
        }
    }
}

/// Splits `a,b,c` into names.
fn names(list: &str) -> Vec<&str> {
    list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

/// The agendas named by an issue id: one for `param:` and `sum:`, all
/// thresholds over the set for `sumset:`. Bare parameter names are accepted
/// under total dominance.
pub fn resolve_issue_id(space: &FeatureSpace, rule: Rule, id: &str) -> std::result::Result<Vec<Agenda>, String> {
    let err = |e: FeatureError| format!("issue `{id}`: {e}");
    if let Some(p) = id.strip_prefix("param:") {
        return Ok(vec![feature_space::projection_agenda(space, &[p]).map_err(err)?]);
    }
    if let Some(rest) = id.strip_prefix("sumset:") {
        return feature_space::thresholds(space, &names(rest)).map_err(err);
    }
    if let Some(rest) = id.strip_prefix("sum:") {
        let (set, k) = rest.split_once("<=").ok_or_else(|| format!("issue `{id}`: expected `sum:<names><=<k>`"))?;
        let k = parse_rational(k).ok_or_else(|| format!("issue `{id}`: `{k}` is not a rational"))?;
        return Ok(vec![feature_space::threshold_issue(space, &names(set), k).map_err(err)?]);
    }
    if rule == Rule::TotalDominance && space.param_index(id).is_ok() {
        return Ok(vec![feature_space::projection_agenda(space, &[id]).map_err(err)?]);
    }
    Err(format!("malformed issue id `{id}`"))
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ScenarioDoc = serde_json::from_str(text).map_err(|e| ScenarioError::Parse(e.to_string()))?;
        Self::from_doc(doc)
    }

    pub fn from_doc(doc: ScenarioDoc) -> Result<Self> {
        let mut errors = Vec::new();
        let mut params = Vec::new();
        for p in &doc.parameters {
            match build_scale(&p.scale) {
                Ok(s) => params.push(Parameter::new(p.name.clone(), s)),
                Err(e) => errors.push(format!("parameter `{}`: {e}", p.name)),
            }
        }
        if !errors.is_empty() {
            return Err(ScenarioError::Validation(errors));
        }
        let profile_cap = doc.options.profile_cap.unwrap_or(DEFAULT_PROFILE_CAP);
        let space = build_space(params, profile_cap)?;
        let rule = doc.winning_rule;
        if rule == Rule::Sum {
            for p in space.parameters() {
                if p.scale.kind() != ScaleKind::Chain || (0..p.scale.len()).any(|v| p.scale.score(v).is_none()) {
                    errors.push(format!("parameter `{}`: the sum rule needs a numeric chain", p.name));
                }
            }
        }
        let agents = AgentSet::new(doc.agents.clone());
        if let Err(e) = &agents {
            errors.push(e.to_string());
        }

        let mut candidates = Vec::new();
        for (name, values) in &doc.candidates {
            let mut labels = Vec::new();
            let mut ok = true;
            for p in space.parameters() {
                match values.get(&p.name) {
                    Some(v) if p.scale.index_of(v).is_some() => labels.push(v.clone()),
                    Some(v) => {
                        errors.push(format!("candidate `{name}`: `{v}` is not a value of `{}`", p.name));
                        ok = false;
                    }
                    None => {
                        errors.push(format!("candidate `{name}`: no value for `{}`", p.name));
                        ok = false;
                    }
                }
            }
            for k in values.keys() {
                if space.param_index(k).is_err() {
                    errors.push(format!("candidate `{name}`: unknown parameter `{k}`"));
                    ok = false;
                }
            }
            if ok {
                candidates.push((name.clone(), space.profile_id(&labels)?));
            }
        }
        if doc.candidates.len() != 2 {
            errors.push(format!("need exactly two candidates, got {}", doc.candidates.len()));
        }

        let issues = match rule {
            Rule::TotalDominance => IssueSet::projections(&space),
            Rule::Sum if errors.is_empty() => IssueSet::all_thresholds(&space),
            Rule::Sum => return Err(ScenarioError::Validation(errors)),
        }?;
        let lattice = AgendaLattice::build(issues, doc.options.generator_cap.unwrap_or(DEFAULT_GENERATOR_CAP));
        let Ok(agents) = agents else { return Err(ScenarioError::Validation(errors)) };

        let generators = |id: &str, errors: &mut Vec<String>| -> Vec<usize> {
            match resolve_issue_id(&space, rule, id) {
                Ok(agendas) => agendas
                    .iter()
                    .filter_map(|a| {
                        let g = lattice.issue_set().index_of_partition(&a.partition);
                        if g.is_none() {
                            errors.push(format!("issue `{id}` is not a generator of the agenda lattice"));
                        }
                        g
                    })
                    .collect(),
                Err(e) => {
                    errors.push(e);
                    Vec::new()
                }
            }
        };

        let mut relevance = Vec::new();
        for (agent, ids) in &doc.relevance {
            let j = match agents.index_of(agent) {
                Ok(j) => j,
                Err(e) => {
                    errors.push(format!("relevance: {e}"));
                    continue;
                }
            };
            for id in ids {
                relevance.extend(generators(id, &mut errors).into_iter().map(|m| (m, j)));
            }
        }
        let influence = match Influence::from_names(&agents, &doc.influence.iter().map(|[a, b]| (a, b)).collect::<Vec<_>>()) {
            Ok(i) => i,
            Err(e) => {
                errors.push(format!("influence: {e}"));
                Influence::new(agents.len(), &[])
            }
        };
        let mut triples = Vec::new();
        for s in &doc.substitution {
            let j = agents.index_of(&s.agent);
            if let Err(e) = &j {
                errors.push(format!("substitution: {e}"));
            }
            let from = generators(&s.from, &mut errors);
            let to = generators(&s.to, &mut errors);
            for (side, g) in [(&s.from, &from), (&s.to, &to)] {
                if g.len() > 1 {
                    errors.push(format!("substitution: `{side}` names {} issues, expected one", g.len()));
                }
            }
            if let (Ok(j), [m], [n]) = (j, from.as_slice(), to.as_slice()) {
                triples.push(Triple { to: *n, agent: j, from: *m });
            }
        }
        let mut named = Vec::new();
        for (name, ids) in &doc.options.agendas {
            let mut e = Elem::EMPTY;
            for id in ids {
                for g in generators(id, &mut errors) {
                    e = e.union(Elem::single(g));
                }
            }
            named.push((name.clone(), lattice.close(e)));
        }
        if !errors.is_empty() {
            return Err(ScenarioError::Validation(errors));
        }
        let structure = HeteroStructure::new(agents, lattice, influence, &relevance, &triples)?;
        let candidates = [candidates[0].clone(), candidates[1].clone()];
        Ok(Scenario { doc, space, rule, candidates, structure, named })
    }

    pub fn doc(&self) -> &ScenarioDoc {
        &self.doc
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.doc).expect("scenario documents serialize")
    }

    pub fn space(&self) -> &FeatureSpace {
        &self.space
    }

    pub fn rule(&self) -> Rule {
        self.rule
    }

    pub fn structure(&self) -> &HeteroStructure<AgendaLattice> {
        &self.structure
    }

    pub fn candidate_names(&self) -> [&str; 2] {
        [&self.candidates[0].0, &self.candidates[1].0]
    }

    pub fn agent_count(&self) -> usize {
        self.structure.agent_count()
    }

    /// The element of 𝔻 generated by the given issue ids.
    pub fn element(&self, ids: &[&str]) -> Result<Elem> {
        let lat = self.structure.lattice();
        let mut e = Elem::EMPTY;
        for id in ids {
            for a in resolve_issue_id(&self.space, self.rule, id).map_err(ScenarioError::one)? {
                let g = lat
                    .issue_set()
                    .index_of_partition(&a.partition)
                    .ok_or_else(|| ScenarioError::one(format!("issue `{id}` is not a generator")))?;
                e = e.union(Elem::single(g));
            }
        }
        Ok(lat.close(e))
    }

    /// The decision an element of 𝔻 leads to between the two candidates.
    pub fn decide_element(&self, e: Elem) -> Result<Verdict> {
        let agenda = self.structure.lattice().agenda(e);
        Ok(decide(&self.space, self.rule, &agenda, self.candidates[0].1, self.candidates[1].1)?)
    }

    /// The substitution aggregate `⊓_{i≠j} (i −< ⋄j)` as a term, with the
    /// valuation sending coalition atom `k` to agent `k`.
    pub fn aggregate_term(&self) -> (ITerm, Valuation) {
        let n = self.agent_count();
        let mut parts = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    parts.push(build::pdra(build::c(i), build::diamond(build::c(j))));
                }
            }
        }
        let term = parts.into_iter().reduce(build::meet).unwrap_or(ITerm::Tau);
        let v = Valuation { coalitions: (0..n).map(Coalition::single).collect(), agendas: Vec::new() };
        (term, v)
    }

    /// The aggregate computed directly from the operators.
    pub fn aggregate(&self) -> Elem {
        let h = &self.structure;
        let n = self.agent_count();
        let mut acc = h.lattice().top();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let x = h.subst_transform(Coalition::single(i), h.common_agenda(Coalition::single(j)));
                    acc = h.lattice().meet(acc, x);
                }
            }
        }
        acc
    }

    fn report_for(&self, label: String, e: Elem) -> Result<AgendaReport> {
        let lat = self.structure.lattice();
        let verdict = self.decide_element(e)?;
        Ok(AgendaReport {
            label,
            issues: lat.describe(e),
            winner: self.winner(verdict),
            verdict,
            agenda: lat.agenda(e),
        })
    }

    fn winner(&self, v: Verdict) -> Option<String> {
        match v {
            Verdict::PrefersFirst => Some(self.candidates[0].0.clone()),
            Verdict::PrefersSecond => Some(self.candidates[1].0.clone()),
            _ => None,
        }
    }

    /// The parameters behind each agent's agenda, when every relevant issue
    /// is a single-parameter projection.
    fn parameter_agendas(&self) -> Option<Vec<(String, Vec<String>)>> {
        let h = &self.structure;
        let names = h.agents().names();
        let mut out = Vec::new();
        for (j, name) in names.iter().enumerate() {
            let mut params = Vec::new();
            for g in h.relevant(j).iter() {
                let id = &h.lattice().issue_set().issues()[g].id;
                params.push(id.strip_prefix("param:")?.to_string());
            }
            out.push((name.clone(), params));
        }
        Some(out)
    }

    pub fn analyze(&self) -> Result<DeliberationReport> {
        let h = &self.structure;
        let names = h.agents().names();
        let all = h.all_agents();
        let mut agents = Vec::new();
        for (j, name) in names.iter().enumerate() {
            agents.push(self.report_for(format!("⋄{{{name}}}"), h.common_agenda(Coalition::single(j)))?);
        }
        let everyone = names.join(",");
        let common = self.report_for(format!("⋄{{{everyone}}}"), h.common_agenda(all))?;
        let distributed = self.report_for(format!("▷{{{everyone}}}"), h.distributed_agenda(all))?;
        let aggregate = self.report_for("⊓_{i≠j} (i −< ⋄j)".to_string(), self.aggregate())?;

        let mut rounds = Vec::new();
        if let (Rule::TotalDominance, Some(pa)) = (self.rule, self.parameter_agendas()) {
            if pa.len() >= 2 && pa.iter().all(|(_, p)| !p.is_empty()) {
                let deepest = pa.iter().map(|(_, p)| p.len()).max().unwrap_or(1);
                for k in 1..=deepest {
                    rounds.push(self.candidate_round(&pa, k)?);
                }
            }
        }
        let mut rounds = rounds.into_iter();
        let candidate_set = rounds.next();
        let further_rounds = rounds.collect();
        let named = self
            .named
            .iter()
            .map(|(name, e)| self.report_for(name.clone(), *e))
            .collect::<Result<Vec<_>>>()?;
        Ok(DeliberationReport {
            rule: self.rule,
            candidates: [self.candidates[0].0.clone(), self.candidates[1].0.clone()],
            agents: names.iter().cloned().zip(agents).map(|(agent, agenda)| AgentReport { agent, agenda }).collect(),
            common,
            distributed,
            aggregate,
            candidate_set,
            further_rounds,
            named,
        })
    }

    fn candidate_round(&self, agendas: &[(String, Vec<String>)], k: usize) -> Result<Vec<CandidateReport>> {
        let mut out = Vec::new();
        for c in lattice::candidate_round(&self.space, agendas, k)? {
            let verdict = decide(&self.space, self.rule, &c.agenda, self.candidates[0].1, self.candidates[1].1)?;
            out.push(CandidateReport {
                choices: c
                    .choices
                    .into_iter()
                    .map(|(chooser, owner, parameters)| Choice { chooser, owner, parameters })
                    .collect(),
                winner: self.winner(verdict),
                verdict,
                agenda: c.agenda,
            });
        }
        Ok(out)
    }

    /// The threshold decomposition of `e^Σ_Y` over this scenario's space.
    pub fn decompose(&self, y: &[&str]) -> Result<DecomposeReport> {
        let ts = feature_space::thresholds(&self.space, y)?;
        let sum = feature_space::sum_agenda(&self.space, y)?;
        let mut acc = Partition::top(self.space.profile_count());
        for t in &ts {
            acc = acc.meet(&t.partition).map_err(|e| ScenarioError::Invariant(e.to_string()))?;
        }
        let set = match &sum.descriptor {
            feature_space::Descriptor::Sum { set } => set.clone(),
            _ => Vec::new(),
        };
        Ok(DecomposeReport {
            set,
            thresholds: ts.iter().map(|t| lattice::threshold_id(&t.descriptor)).collect(),
            sum_blocks: sum.partition.block_count(),
            equals_sum_agenda: acc == sum.partition,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AgendaReport {
    /// How the agenda was obtained, e.g. `⋄{a}`.
    pub label: String,
    /// The issues the agenda supports.
    pub issues: String,
    pub verdict: Verdict,
    pub winner: Option<String>,
    pub agenda: Agenda,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AgentReport {
    pub agent: String,
    pub agenda: AgendaReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Choice {
    pub chooser: String,
    pub owner: String,
    pub parameters: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateReport {
    pub choices: Vec<Choice>,
    pub verdict: Verdict,
    pub winner: Option<String>,
    pub agenda: Agenda,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeliberationReport {
    pub rule: Rule,
    pub candidates: [String; 2],
    pub agents: Vec<AgentReport>,
    pub common: AgendaReport,
    pub distributed: AgendaReport,
    pub aggregate: AgendaReport,
    /// One-step coarsenings; total dominance only.
    pub candidate_set: Option<Vec<CandidateReport>>,
    /// Rounds removing two, three, ... parameters, reported but never chosen from.
    pub further_rounds: Vec<Vec<CandidateReport>>,
    pub named: Vec<AgendaReport>,
}

fn verdict_text(v: Verdict, winner: &Option<String>) -> String {
    match (v, winner) {
        (_, Some(w)) => w.clone(),
        (Verdict::Tie, _) => "tie".into(),
        _ => "no decision".into(),
    }
}

impl DeliberationReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let rule = match self.rule {
            Rule::TotalDominance => "total dominance",
            Rule::Sum => "sum",
        };
        let _ = writeln!(out, "{} vs {} under {rule}", self.candidates[0], self.candidates[1]);
        let line = |out: &mut String, r: &AgendaReport| {
            let _ = writeln!(out, "  {:<24} {:<40} -> {}", r.label, r.issues, verdict_text(r.verdict, &r.winner));
        };
        for a in &self.agents {
            line(&mut out, &a.agenda);
        }
        line(&mut out, &self.common);
        line(&mut out, &self.distributed);
        line(&mut out, &self.aggregate);
        for r in &self.named {
            line(&mut out, r);
        }
        let rounds = self.candidate_set.iter().chain(&self.further_rounds);
        for (k, cs) in rounds.enumerate() {
            let noun = if cs.len() == 1 { "agenda" } else { "agendas" };
            let _ = writeln!(out, "candidate set, {} removed ({} {noun}):", k + 1, cs.len());
            for c in cs {
                let name = match &c.agenda.descriptor {
                    feature_space::Descriptor::Projection { set } if !set.is_empty() => format!("e_{{{}}}", set.join(",")),
                    _ => "τ".to_string(),
                };
                let _ = writeln!(out, "  {name} -> {}", verdict_text(c.verdict, &c.winner));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecomposeReport {
    pub set: Vec<String>,
    pub thresholds: Vec<String>,
    pub sum_blocks: usize,
    pub equals_sum_agenda: bool,
}

/// Bundled example scenarios.
pub mod fixtures {
    pub const HIRING: &str = include_str!("../fixtures/hiring.json");
    pub const HIRING_S2: &str = include_str!("../fixtures/hiring_s2.json");
    pub const HIRING_BETTY_VARIANT: &str = include_str!("../fixtures/hiring_betty_variant.json");
    pub const HIRING_NONLINEAR: &str = include_str!("../fixtures/hiring_nonlinear.json");
    pub const CAR: &str = include_str!("../fixtures/car.json");
    /// The car scenario with S exactly as printed, where Betty only substitutes
    /// with thresholds k = 2..3.
    pub const CAR_LITERAL_S: &str = include_str!("../fixtures/car_literal_s.json");

    pub fn by_name(name: &str) -> Option<&'static str> {
        Some(match name {
            "hiring" => HIRING,
            "hiring_s2" => HIRING_S2,
            "hiring_betty_variant" => HIRING_BETTY_VARIANT,
            "hiring_nonlinear" => HIRING_NONLINEAR,
            "car" => CAR,
            "car_literal_s" => CAR_LITERAL_S,
            _ => return None,
        })
    }

    pub const NAMES: [&str; 6] = ["hiring", "hiring_s2", "hiring_betty_variant", "hiring_nonlinear", "car", "car_literal_s"];
}

/// DOT of the profile poset under dominance.
pub fn profile_poset_dot(space: &FeatureSpace) -> String {
    let labels: Vec<String> = (0..space.profile_count()).map(|w| format!("({})", space.profile_labels(w).join(","))).collect();
    lattice::hasse_dot("profiles", &labels, |a, b| space.dominance().le(a, b))
}

/// DOT of the full partition lattice E(W) on the named points.
pub fn partition_lattice_dot(points: &[String], cap: usize) -> Result<String> {
    if points.len() > cap {
        return Err(ScenarioError::Cap(format!("{} points exceed the cap of {cap}", points.len())));
    }
    let parts = Partition::all(points.len());
    let labels: Vec<String> = parts
        .iter()
        .map(|p| {
            p.blocks()
                .iter()
                .map(|b| b.iter().map(|&x| points[x].as_str()).collect::<Vec<_>>().join(""))
                .collect::<Vec<_>>()
                .join("|")
        })
        .collect();
    Ok(lattice::hasse_dot("partitions", &labels, |a, b| parts[a].refines(&parts[b]).unwrap_or(false)))
}
