//! The lattice 𝔻 of agendas meet-generated by a set of issues.
//!
//! Every element of 𝔻 is the meet of the generators above it, so an element
//! is stored as that set of generators (an [`Elem`]). Meets close the union of
//! the two sets; 𝔻-joins are plain intersections, which never leave 𝔻.

use crate::feature_space::{self, Agenda, Descriptor, FeatureError, FeatureSpace};
use crate::partition::{Partition, PartitionError};
use serde::Serialize;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;
use thiserror::Error;

/// Hard limit on generators (elements are 128-bit masks).
pub const MAX_GENERATORS: usize = 128;
/// Default limit on generators for materializing all of 𝔻.
pub const DEFAULT_GENERATOR_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("{count} generators exceed the hard limit of {MAX_GENERATORS}")]
    TooManyGenerators { count: usize },
    #[error("duplicate issue id `{0}`")]
    DuplicateId(String),
    #[error("issues `{0}` and `{1}` are the same partition")]
    DuplicatePartition(String, String),
    #[error("issue `{0}` is the top agenda and cannot generate")]
    TrivialIssue(String),
    #[error("unknown issue `{0}`")]
    UnknownIssue(String),
    #[error("partition is not an element of the agenda lattice")]
    NotInLattice,
    #[error("lattice is not materialized ({generators} generators, cap {cap})")]
    NotMaterialized { generators: usize, cap: usize },
    #[error("empty parameter set")]
    EmptyAgendaSet,
    #[error("need at least two agents")]
    TooFewAgents,
    #[error(transparent)]
    Feature(#[from] FeatureError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

pub type Result<T> = std::result::Result<T, LatticeError>;

/// An element of 𝔻 given by the generators lying above it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct Elem(pub u128);

impl Elem {
    pub const EMPTY: Elem = Elem(0);

    pub fn full(n: usize) -> Elem {
        if n >= 128 {
            Elem(u128::MAX)
        } else {
            Elem((1u128 << n) - 1)
        }
    }

    pub fn single(g: usize) -> Elem {
        Elem(1u128 << g)
    }

    pub fn contains(self, g: usize) -> bool {
        self.0 >> g & 1 == 1
    }

    pub fn union(self, o: Elem) -> Elem {
        Elem(self.0 | o.0)
    }

    pub fn intersect(self, o: Elem) -> Elem {
        Elem(self.0 & o.0)
    }

    pub fn is_subset(self, o: Elem) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..128).filter(move |&g| self.contains(g))
    }

    pub fn count(self) -> usize {
        self.0.count_ones() as usize
    }
}

/// Anything that can serve as the agenda sort: a set of generators with a
/// closure operator. Order: `a ≤ b` iff every generator above `b` is above `a`.
pub trait AgendaSort {
    fn generator_count(&self) -> usize;

    /// The generators above the meet of `m`.
    fn close(&self, m: Elem) -> Elem;

    /// All elements of the sort, if it can be enumerated.
    fn elements(&self) -> Result<Vec<Elem>>;

    /// Whether every set of generators is closed, making the sort Boolean
    /// and every generator meet-prime.
    fn is_boolean(&self) -> bool;

    fn generator_name(&self, g: usize) -> String;

    fn top(&self) -> Elem {
        Elem::EMPTY
    }

    fn bottom(&self) -> Elem {
        self.close(Elem::full(self.generator_count()))
    }

    fn le(&self, a: Elem, b: Elem) -> bool {
        b.is_subset(a)
    }

    fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.close(a.union(b))
    }

    fn join(&self, a: Elem, b: Elem) -> Elem {
        a.intersect(b)
    }

    fn describe(&self, e: Elem) -> String {
        if e == Elem::EMPTY {
            return "τ".to_string();
        }
        let parts: Vec<String> = e.iter().map(|g| self.generator_name(g)).collect();
        parts.join(" ⊓ ")
    }
}

/// 𝒫(D) with reversed order: every subset of issues is an element.
#[derive(Debug, Clone)]
pub struct FreeAgendas {
    names: Vec<String>,
}

impl FreeAgendas {
    pub fn new(names: Vec<String>) -> Result<Self> {
        if names.len() > MAX_GENERATORS {
            return Err(LatticeError::TooManyGenerators { count: names.len() });
        }
        Ok(FreeAgendas { names })
    }
}

impl AgendaSort for FreeAgendas {
    fn generator_count(&self) -> usize {
        self.names.len()
    }

    fn close(&self, m: Elem) -> Elem {
        m
    }

    fn elements(&self) -> Result<Vec<Elem>> {
        let n = self.names.len();
        if n > DEFAULT_GENERATOR_CAP {
            return Err(LatticeError::NotMaterialized { generators: n, cap: DEFAULT_GENERATOR_CAP });
        }
        Ok((0..1u128 << n).map(Elem).collect())
    }

    fn is_boolean(&self) -> bool {
        true
    }

    fn generator_name(&self, g: usize) -> String {
        self.names[g].clone()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Issue {
    pub id: String,
    pub agenda: Agenda,
}

/// Generators of 𝔻: distinct nontrivial agendas over one profile space.
#[derive(Debug, Clone, Serialize)]
pub struct IssueSet {
    ground: usize,
    issues: Vec<Issue>,
}

impl IssueSet {
    pub fn new(ground: usize, issues: Vec<Issue>) -> Result<Self> {
        if issues.len() > MAX_GENERATORS {
            return Err(LatticeError::TooManyGenerators { count: issues.len() });
        }
        let mut ids = HashSet::new();
        let mut parts: HashMap<&Partition, &str> = HashMap::new();
        for i in &issues {
            if i.agenda.partition.ground_size() != ground {
                return Err(PartitionError::GroundMismatch(ground, i.agenda.partition.ground_size()).into());
            }
            if !ids.insert(i.id.as_str()) {
                return Err(LatticeError::DuplicateId(i.id.clone()));
            }
            if i.agenda.partition.is_top() {
                return Err(LatticeError::TrivialIssue(i.id.clone()));
            }
            if let Some(prev) = parts.insert(&i.agenda.partition, &i.id) {
                return Err(LatticeError::DuplicatePartition(prev.to_string(), i.id.clone()));
            }
        }
        Ok(IssueSet { ground, issues })
    }

    /// One projection issue `param:x` per parameter.
    pub fn projections(space: &FeatureSpace) -> Result<Self> {
        let issues = space
            .parameters()
            .iter()
            .map(|p| {
                Ok(Issue {
                    id: format!("param:{}", p.name),
                    agenda: feature_space::projection_agenda(space, &[&p.name])?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(space.profile_count(), issues)
    }

    /// Every admissible threshold issue over every nonempty parameter subset.
    pub fn all_thresholds(space: &FeatureSpace) -> Result<Self> {
        let names: Vec<String> = space.parameters().iter().map(|p| p.name.clone()).collect();
        let mut issues = Vec::new();
        let mut seen = HashSet::new();
        for mask in 1u64..1 << names.len() {
            let y: Vec<&String> = names.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, n)| n).collect();
            for t in feature_space::thresholds(space, &y)? {
                if seen.insert(t.partition.clone()) {
                    issues.push(Issue { id: threshold_id(&t.descriptor), agenda: t });
                }
            }
        }
        Self::new(space.profile_count(), issues)
    }

    pub fn len(&self) -> usize {
        self.issues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn issues(&self) -> &[Issue] {
        &self.issues
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.issues.iter().position(|i| i.id == id)
    }

    pub fn index_of_partition(&self, p: &Partition) -> Option<usize> {
        self.issues.iter().position(|i| &i.agenda.partition == p)
    }

    /// Whether every generator is a bipartition, i.e. a coatom of E(W).
    pub fn all_coatoms(&self) -> bool {
        self.issues.iter().all(|i| i.agenda.partition.block_count() == 2)
    }
}

/// Canonical id of a threshold issue: `sum:<sorted names><=<k>`.
pub fn threshold_id(d: &Descriptor) -> String {
    match d {
        Descriptor::Threshold { set, k } => format!("sum:{}<={}", set.join(","), k),
        _ => String::new(),
    }
}

#[derive(Debug, Clone)]
pub struct AgendaLattice {
    issues: IssueSet,
    cap: usize,
    elements: Option<Vec<Elem>>,
    independent: bool,
}

impl AgendaLattice {
    /// Builds 𝔻 over the issues; above `cap` generators it stays lazy.
    pub fn build(issues: IssueSet, cap: usize) -> Self {
        let mut lat = AgendaLattice { issues, cap, elements: None, independent: false };
        lat.independent = (0..lat.issues.len()).all(|g| {
            let others = Elem::full(lat.issues.len()).intersect(Elem(!(1u128 << g)));
            !lat.close(others).contains(g)
        });
        if lat.issues.len() <= cap {
            lat.elements = Some(lat.materialize());
        }
        lat
    }

    fn materialize(&self) -> Vec<Elem> {
        let mut seen: HashSet<Elem> = HashSet::from([Elem::EMPTY]);
        let mut frontier = vec![Elem::EMPTY];
        while let Some(e) = frontier.pop() {
            for g in 0..self.issues.len() {
                if e.contains(g) {
                    continue;
                }
                let next = self.close(e.union(Elem::single(g)));
                if seen.insert(next) {
                    frontier.push(next);
                }
            }
        }
        let mut all: Vec<Elem> = seen.into_iter().collect();
        all.sort_by_key(|e| (e.count(), e.0));
        all
    }

    pub fn issue_set(&self) -> &IssueSet {
        &self.issues
    }

    pub fn is_materialized(&self) -> bool {
        self.elements.is_some()
    }

    pub fn size(&self) -> Option<usize> {
        self.elements.as_ref().map(Vec::len)
    }

    pub fn meet_partition(&self, m: Elem) -> Partition {
        let mut acc = Partition::top(self.issues.ground);
        for g in m.iter() {
            acc = acc.meet(&self.issues.issues[g].agenda.partition).expect("same ground");
        }
        acc
    }

    /// The agenda (partition plus descriptor) of an element.
    pub fn agenda(&self, e: Elem) -> Agenda {
        Agenda {
            partition: self.meet_partition(e),
            descriptor: Descriptor::MeetOfIssues { issues: e.iter().map(|g| self.issues.issues[g].id.clone()).collect() },
        }
    }

    /// The element whose partition is `p`, if `p` lies in 𝔻.
    pub fn element_of(&self, p: &Partition) -> Result<Elem> {
        let up = self.up_of(p);
        if &self.meet_partition(up) == p {
            Ok(up)
        } else {
            Err(LatticeError::NotInLattice)
        }
    }

    fn up_of(&self, p: &Partition) -> Elem {
        let mut up = Elem::EMPTY;
        for (g, i) in self.issues.issues.iter().enumerate() {
            if p.refines_unchecked(&i.agenda.partition) {
                up = up.union(Elem::single(g));
            }
        }
        up
    }

    /// Least upper bound inside 𝔻 (⊥ for no arguments).
    pub fn d_join(&self, elems: &[Partition]) -> Result<Partition> {
        let mut acc = Elem::full(self.issues.len());
        for p in elems {
            acc = acc.intersect(self.element_of(p)?);
        }
        Ok(self.meet_partition(acc))
    }

    /// Scans all triples for a failure of `x ⊓ (y ⊔ z) = (x ⊓ y) ⊔ (x ⊓ z)`.
    pub fn distributivity_witness(&self) -> Result<Option<(Elem, Elem, Elem)>> {
        let els = self.elements()?;
        for &x in &els {
            for &y in &els {
                for &z in &els {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return Ok(Some((x, y, z)));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_distributive(&self) -> Result<bool> {
        Ok(self.distributivity_witness()?.is_none())
    }

    /// DOT text of the Hasse diagram of the materialized lattice.
    pub fn hasse_dot(&self) -> Result<String> {
        let els = self.elements()?;
        let names: Vec<String> = els.iter().map(|&e| self.describe(e)).collect();
        Ok(hasse_dot("agendas", &names, |a, b| self.le(els[a], els[b])))
    }
}

impl AgendaSort for AgendaLattice {
    fn generator_count(&self) -> usize {
        self.issues.len()
    }

    fn close(&self, m: Elem) -> Elem {
        self.up_of(&self.meet_partition(m))
    }

    fn elements(&self) -> Result<Vec<Elem>> {
        self.elements
            .clone()
            .ok_or(LatticeError::NotMaterialized { generators: self.issues.len(), cap: self.cap })
    }

    fn is_boolean(&self) -> bool {
        self.independent
    }

    fn generator_name(&self, g: usize) -> String {
        self.issues.issues[g].id.clone()
    }
}

/// `Crs₁(e_Y)`: drop one parameter at a time.
pub fn coarsenings_crs1<S: AsRef<str>>(space: &FeatureSpace, y: &[S]) -> Result<Vec<Agenda>> {
    coarsenings(space, y, 1)
}

/// Projections onto every subset of `Y` with `k` parameters removed; `{τ}`
/// once `k` reaches `|Y|`.
pub fn coarsenings<S: AsRef<str>>(space: &FeatureSpace, y: &[S], k: usize) -> Result<Vec<Agenda>> {
    let idx = space.resolve(y)?;
    if idx.is_empty() {
        return Err(LatticeError::EmptyAgendaSet);
    }
    let names: Vec<&str> = idx.iter().map(|&i| space.parameters()[i].name.as_str()).collect();
    let keep = names.len().saturating_sub(k);
    let mut out = Vec::new();
    // Decreasing masks drop the earliest parameters first, as Crs₁ lists them.
    for mask in (0u64..1 << names.len()).rev() {
        if mask.count_ones() as usize != keep {
            continue;
        }
        let rest: Vec<&str> = names.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, n)| *n).collect();
        out.push(feature_space::projection_agenda(space, &rest)?);
    }
    Ok(out)
}

/// One element of the candidate set, with the coarsening each agent chose.
#[derive(Debug, Clone, Serialize)]
pub struct Candidate {
    pub agenda: Agenda,
    /// `(chooser, owner, parameter set)`: `chooser` coarsened `owner`'s agenda.
    pub choices: Vec<(String, String, Vec<String>)>,
}

/// Meets `⊓_{i≠j} e′_ij` where each `e′_ij` is a one-step coarsening of `e_j`,
/// deduplicated by partition.
pub fn candidate_set<S: AsRef<str>>(space: &FeatureSpace, agendas: &[(String, Vec<S>)]) -> Result<Vec<Candidate>> {
    candidate_round(space, agendas, 1)
}

/// The candidate set when every agent removes `k` parameters from each
/// other agent's agenda.
pub fn candidate_round<S: AsRef<str>>(
    space: &FeatureSpace,
    agendas: &[(String, Vec<S>)],
    k: usize,
) -> Result<Vec<Candidate>> {
    if agendas.len() < 2 {
        return Err(LatticeError::TooFewAgents);
    }
    let mut slots: Vec<(String, String, Vec<Vec<String>>)> = Vec::new();
    for (i, (chooser, _)) in agendas.iter().enumerate() {
        for (j, (owner, y)) in agendas.iter().enumerate() {
            if i == j {
                continue;
            }
            let options: Vec<Vec<String>> = coarsenings(space, y, k)?
                .into_iter()
                .map(|a| match a.descriptor {
                    Descriptor::Projection { set } => set,
                    _ => unreachable!("coarsenings are projections"),
                })
                .collect();
            slots.push((chooser.clone(), owner.clone(), options));
        }
    }
    let mut out: Vec<Candidate> = Vec::new();
    let mut seen = HashSet::new();
    let mut pick = vec![0usize; slots.len()];
    loop {
        let mut union = BTreeSet::new();
        let mut choices = Vec::new();
        for (s, &k) in slots.iter().zip(&pick) {
            union.extend(s.2[k].iter().cloned());
            choices.push((s.0.clone(), s.1.clone(), s.2[k].clone()));
        }
        let set: Vec<String> = union.into_iter().collect();
        let agenda = feature_space::projection_agenda(space, &set)?;
        if seen.insert(agenda.partition.clone()) {
            out.push(Candidate { agenda, choices });
        }
        let mut i = 0;
        loop {
            if i == pick.len() {
                return Ok(out);
            }
            pick[i] += 1;
            if pick[i] < slots[i].2.len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// DOT digraph of the covering pairs of a finite order, edges drawn upward
/// (lower -> upper), nodes in the given order.
pub fn hasse_dot(name: &str, labels: &[String], le: impl Fn(usize, usize) -> bool) -> String {
    let n = labels.len();
    let mut out = format!("digraph {name} {{\n  rankdir=BT;\n");
    for (i, l) in labels.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{}\"];", l.replace('"', "\\\""));
    }
    for (a, b) in covers(n, &le) {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

/// Covering pairs `(a, b)`: `a < b` with nothing strictly between.
pub fn covers(n: usize, le: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let lt = |a: usize, b: usize| a != b && le(a, b) && !le(b, a);
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                out.push((a, b));
            }
        }
    }
    out
}
