//! Profile spaces over scored parameters, the agendas they induce, and the
//! decisions those agendas reach under the total-dominance and sum rules.

use crate::partition::{self, Partition, PartitionError, Preference, Preorder};
use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

pub const DEFAULT_PROFILE_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FeatureError {
    #[error("profile space has {size} profiles, cap is {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("malformed scale: {0}")]
    MalformedScale(String),
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("unknown value `{value}` for parameter `{param}`")]
    UnknownValue { param: String, value: String },
    #[error("parameter `{0}` is not a numeric chain; the sum rule needs one")]
    NonLinearScale(String),
    #[error("threshold {k} over {{{set}}} leaves one cell empty")]
    DegenerateThreshold { set: String, k: Rational64 },
    #[error("agenda kind does not match the winning rule")]
    IncompatibleRule,
    #[error("wrong space: {0}")]
    WrongSpace(String),
    #[error("no parameters")]
    NoParameters,
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

pub type Result<T> = std::result::Result<T, FeatureError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScaleKind {
    Chain,
    Poset,
}

/// A finite bounded poset of value labels, optionally carrying a rational
/// score per label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scale {
    kind: ScaleKind,
    labels: Vec<String>,
    le: Vec<Vec<bool>>,
    numeric: Vec<Option<Rational64>>,
}

impl Scale {
    /// A chain listed from bottom to top.
    pub fn chain<S: AsRef<str>>(labels: &[S], numeric: Option<Vec<Rational64>>) -> Result<Self> {
        let k = labels.len();
        let covers: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
        let numeric = match numeric {
            Some(v) if v.len() != k => {
                return Err(FeatureError::MalformedScale("numeric values do not match labels".into()))
            }
            Some(v) => v.into_iter().map(Some).collect(),
            None => vec![None; k],
        };
        Self::build(ScaleKind::Chain, labels, &covers, numeric)
    }

    pub fn poset<S: AsRef<str>>(
        labels: &[S],
        covers: &[(usize, usize)],
        numeric: Vec<Option<Rational64>>,
    ) -> Result<Self> {
        Self::build(ScaleKind::Poset, labels, covers, numeric)
    }

    /// `{0, 1}` with scores 0 and 1.
    pub fn binary() -> Self {
        Self::uniform_chain(2)
    }

    /// `k` evenly spaced values from 0 to 1, labelled by their score.
    pub fn uniform_chain(k: usize) -> Self {
        assert!(k >= 2);
        let vals: Vec<Rational64> =
            (0..k).map(|i| Rational64::new(i as i64, (k - 1) as i64)).collect();
        let labels: Vec<String> = vals.iter().map(|v| v.to_string()).collect();
        Self::chain(&labels, Some(vals)).expect("uniform chain is well formed")
    }

    /// The pentagon: `0 < 1/3 < 2/3 < 1` with `u` strictly between 0 and 1 and
    /// incomparable to the middle values. `u` has no score.
    pub fn pentagon() -> Self {
        let labels = ["0", "1/3", "2/3", "1", "u"];
        let covers = [(0, 1), (1, 2), (2, 3), (0, 4), (4, 3)];
        let numeric = vec![
            Some(Rational64::zero()),
            Some(Rational64::new(1, 3)),
            Some(Rational64::new(2, 3)),
            Some(Rational64::from_integer(1)),
            None,
        ];
        Self::poset(&labels, &covers, numeric).expect("pentagon is well formed")
    }

    fn build<S: AsRef<str>>(
        kind: ScaleKind,
        labels: &[S],
        covers: &[(usize, usize)],
        numeric: Vec<Option<Rational64>>,
    ) -> Result<Self> {
        let k = labels.len();
        if k == 0 {
            return Err(FeatureError::MalformedScale("no values".into()));
        }
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != k {
            return Err(FeatureError::MalformedScale("duplicate value label".into()));
        }
        if numeric.len() != k {
            return Err(FeatureError::MalformedScale("numeric values do not match labels".into()));
        }
        if covers.iter().any(|&(a, b)| a >= k || b >= k) {
            return Err(FeatureError::MalformedScale("cover refers to unknown value".into()));
        }
        let closure = Preorder::closure(k, |a, b| covers.contains(&(a, b)));
        if !closure.is_antisymmetric() {
            return Err(FeatureError::MalformedScale("cycle in covers".into()));
        }
        let le: Vec<Vec<bool>> = (0..k).map(|a| (0..k).map(|b| closure.le(a, b)).collect()).collect();
        let has_bottom = (0..k).any(|b| (0..k).all(|x| le[b][x]));
        let has_top = (0..k).any(|t| (0..k).all(|x| le[x][t]));
        if !has_bottom || !has_top {
            return Err(FeatureError::MalformedScale("no unique top or bottom".into()));
        }
        if kind == ScaleKind::Chain && (0..k).any(|a| (0..k).any(|b| !le[a][b] && !le[b][a])) {
            return Err(FeatureError::MalformedScale("chain is not totally ordered".into()));
        }
        for a in 0..k {
            for b in 0..k {
                if let (Some(x), Some(y)) = (numeric[a], numeric[b]) {
                    if a != b && le[a][b] && x >= y {
                        return Err(FeatureError::MalformedScale(
                            "scores are not strictly increasing along the order".into(),
                        ));
                    }
                }
            }
        }
        Ok(Scale { kind, labels, le, numeric })
    }

    pub fn kind(&self) -> ScaleKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a][b]
    }

    pub fn score(&self, v: usize) -> Option<Rational64> {
        self.numeric[v]
    }

    /// Covering pairs of the order (lower, upper).
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let k = self.len();
        let mut out = Vec::new();
        for a in 0..k {
            for b in 0..k {
                if a != b && self.le[a][b] && !(0..k).any(|c| c != a && c != b && self.le[a][c] && self.le[c][b]) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn is_sum_ready(&self) -> bool {
        self.kind == ScaleKind::Chain && self.numeric.iter().all(Option::is_some)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parameter {
    pub name: String,
    pub scale: Scale,
}

impl Parameter {
    pub fn new(name: impl Into<String>, scale: Scale) -> Self {
        Parameter { name: name.into(), scale }
    }
}

/// The product space W of all profiles, with its dominance order.
#[derive(Debug, Clone)]
pub struct FeatureSpace {
    params: Vec<Parameter>,
    profiles: Vec<Vec<usize>>,
    dominance: Preorder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    TotalDominance,
    Sum,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Descriptor {
    Projection { set: Vec<String> },
    Sum { set: Vec<String> },
    Threshold { set: Vec<String>, k: String },
    MeetOfIssues { issues: Vec<String> },
    Opaque,
}

/// An agenda: a partition of the profile ids together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Agenda {
    pub partition: Partition,
    pub descriptor: Descriptor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    PrefersFirst,
    PrefersSecond,
    Tie,
    NoDecision,
}

impl Verdict {
    /// "Leads to a decision" in the paper's sense: either direction holds.
    pub fn decides(self) -> bool {
        self != Verdict::NoDecision
    }

    fn from_preference(p: Preference) -> Self {
        match p {
            Preference::PrefersU => Verdict::PrefersFirst,
            Preference::PrefersW => Verdict::PrefersSecond,
            Preference::Tie => Verdict::Tie,
            Preference::Incomparable => Verdict::NoDecision,
        }
    }
}

pub fn build_space(params: Vec<Parameter>, cap: usize) -> Result<FeatureSpace> {
    if params.is_empty() {
        return Err(FeatureError::NoParameters);
    }
    let names: BTreeSet<&str> = params.iter().map(|p| p.name.as_str()).collect();
    if names.len() != params.len() {
        return Err(FeatureError::MalformedScale("duplicate parameter name".into()));
    }
    let mut size: usize = 1;
    for p in &params {
        size = size.saturating_mul(p.scale.len());
        if size > cap {
            return Err(FeatureError::CapExceeded { size, cap });
        }
    }
    let mut profiles = Vec::with_capacity(size);
    let mut cur = vec![0usize; params.len()];
    'outer: loop {
        profiles.push(cur.clone());
        for i in (0..params.len()).rev() {
            cur[i] += 1;
            if cur[i] < params[i].scale.len() {
                continue 'outer;
            }
            cur[i] = 0;
        }
        break;
    }
    let dominance = Preorder::from_fn(size, |a, b| {
        params.iter().enumerate().all(|(i, p)| p.scale.le(profiles[a][i], profiles[b][i]))
    })
    .expect("coordinatewise order is a partial order");
    Ok(FeatureSpace { params, profiles, dominance })
}

impl FeatureSpace {
    pub fn parameters(&self) -> &[Parameter] {
        &self.params
    }

    pub fn profile_count(&self) -> usize {
        self.profiles.len()
    }

    pub fn profile(&self, id: usize) -> &[usize] {
        &self.profiles[id]
    }

    pub fn dominance(&self) -> &Preorder {
        &self.dominance
    }

    pub fn param_index(&self, name: &str) -> Result<usize> {
        self.params
            .iter()
            .position(|p| p.name == name)
            .ok_or_else(|| FeatureError::UnknownParameter(name.to_string()))
    }

    /// Resolves names to indices, returned sorted and deduplicated.
    pub fn resolve<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<usize>> {
        let set: BTreeSet<usize> =
            names.iter().map(|n| self.param_index(n.as_ref())).collect::<Result<_>>()?;
        Ok(set.into_iter().collect())
    }

    fn names(&self, idx: &[usize]) -> Vec<String> {
        let mut v: Vec<String> = idx.iter().map(|&i| self.params[i].name.clone()).collect();
        v.sort();
        v
    }

    /// Profile id of a tuple of value labels given in parameter order.
    pub fn profile_id<S: AsRef<str>>(&self, labels: &[S]) -> Result<usize> {
        if labels.len() != self.params.len() {
            return Err(FeatureError::WrongSpace("profile arity".into()));
        }
        let mut id = 0;
        for (p, l) in self.params.iter().zip(labels) {
            let v = p.scale.index_of(l.as_ref()).ok_or_else(|| FeatureError::UnknownValue {
                param: p.name.clone(),
                value: l.as_ref().to_string(),
            })?;
            id = id * p.scale.len() + v;
        }
        Ok(id)
    }

    pub fn profile_labels(&self, id: usize) -> Vec<String> {
        self.params
            .iter()
            .zip(&self.profiles[id])
            .map(|(p, &v)| p.scale.labels[v].clone())
            .collect()
    }

    /// Sum of scores over the given parameter indices.
    pub fn sum_score(&self, id: usize, idx: &[usize]) -> Result<Rational64> {
        let mut total = Rational64::zero();
        for &i in idx {
            let p = &self.params[i];
            if !p.scale.is_sum_ready() {
                return Err(FeatureError::NonLinearScale(p.name.clone()));
            }
            total += p.scale.score(self.profiles[id][i]).expect("checked above");
        }
        Ok(total)
    }

    fn check_sum_ready(&self, idx: &[usize]) -> Result<()> {
        for &i in idx {
            if !self.params[i].scale.is_sum_ready() {
                return Err(FeatureError::NonLinearScale(self.params[i].name.clone()));
            }
        }
        Ok(())
    }

    fn sums(&self, idx: &[usize]) -> Result<Vec<Rational64>> {
        self.check_sum_ready(idx)?;
        (0..self.profile_count()).map(|w| self.sum_score(w, idx)).collect()
    }

    /// Distinct achievable sums over `idx`, ascending.
    pub fn achievable_sums(&self, idx: &[usize]) -> Result<Vec<Rational64>> {
        let set: BTreeSet<Rational64> = self.sums(idx)?.into_iter().collect();
        Ok(set.into_iter().collect())
    }
}

/// `e_Y`: profiles identified when they agree on every parameter of Y.
pub fn projection_agenda<S: AsRef<str>>(space: &FeatureSpace, y: &[S]) -> Result<Agenda> {
    let idx = space.resolve(y)?;
    let keys: Vec<Vec<usize>> = (0..space.profile_count())
        .map(|w| idx.iter().map(|&i| space.profiles[w][i]).collect())
        .collect();
    Ok(Agenda {
        partition: Partition::from_labels(&keys),
        descriptor: Descriptor::Projection { set: space.names(&idx) },
    })
}

/// `e^Σ_Y`: profiles identified when their scores over Y sum to the same value.
pub fn sum_agenda<S: AsRef<str>>(space: &FeatureSpace, y: &[S]) -> Result<Agenda> {
    let idx = space.resolve(y)?;
    let sums = space.sums(&idx)?;
    Ok(Agenda {
        partition: Partition::from_labels(&sums),
        descriptor: Descriptor::Sum { set: space.names(&idx) },
    })
}

/// The issue `{sum_Y ≤ k, sum_Y > k}`.
pub fn threshold_issue<S: AsRef<str>>(space: &FeatureSpace, y: &[S], k: Rational64) -> Result<Agenda> {
    let idx = space.resolve(y)?;
    let sums = space.sums(&idx)?;
    let names = space.names(&idx);
    let low = sums.iter().filter(|s| **s <= k).count();
    if low == 0 || low == sums.len() {
        return Err(FeatureError::DegenerateThreshold { set: names.join(","), k });
    }
    Ok(Agenda {
        partition: Partition::bipartition(sums.len(), |w| sums[w] <= k),
        descriptor: Descriptor::Threshold { set: names, k: k.to_string() },
    })
}

/// One threshold per achievable non-maximal sum over Y, ascending.
pub fn thresholds<S: AsRef<str>>(space: &FeatureSpace, y: &[S]) -> Result<Vec<Agenda>> {
    let idx = space.resolve(y)?;
    let sums = space.achievable_sums(&idx)?;
    let names = space.names(&idx);
    sums.iter()
        .take(sums.len().saturating_sub(1))
        .map(|&k| threshold_issue(space, &names, k))
        .collect()
}

/// The preorder ≤_Y on all of W under the given rule.
pub fn rule_preorder<S: AsRef<str>>(space: &FeatureSpace, rule: Rule, y: &[S]) -> Result<Preorder> {
    let idx = space.resolve(y)?;
    let n = space.profile_count();
    let rel = match rule {
        Rule::TotalDominance => Preorder::from_fn(n, |a, b| {
            idx.iter().all(|&i| space.params[i].scale.le(space.profiles[a][i], space.profiles[b][i]))
        }),
        Rule::Sum => {
            let sums = space.sums(&idx)?;
            Preorder::from_fn(n, |a, b| sums[a] <= sums[b])
        }
    };
    Ok(rel.expect("rule relations are preorders"))
}

/// Whether `agenda` leads to a decision between two profiles.
pub fn decide(space: &FeatureSpace, rule: Rule, agenda: &Agenda, first: usize, second: usize) -> Result<Verdict> {
    let n = space.profile_count();
    for i in [first, second] {
        if i >= n {
            return Err(PartitionError::IndexOutOfRange { index: i, n }.into());
        }
    }
    match (&agenda.descriptor, rule) {
        (Descriptor::Projection { set }, Rule::TotalDominance) => {
            let idx = space.resolve(set)?;
            let le = |a: usize, b: usize| {
                idx.iter().all(|&i| space.params[i].scale.le(space.profiles[a][i], space.profiles[b][i]))
            };
            Ok(match (le(second, first), le(first, second)) {
                (true, true) => Verdict::Tie,
                (true, false) => Verdict::PrefersFirst,
                (false, true) => Verdict::PrefersSecond,
                (false, false) => Verdict::NoDecision,
            })
        }
        (Descriptor::Sum { set }, Rule::Sum) => {
            let idx = space.resolve(set)?;
            let (a, b) = (space.sum_score(first, &idx)?, space.sum_score(second, &idx)?);
            Ok(match a.cmp(&b) {
                std::cmp::Ordering::Greater => Verdict::PrefersFirst,
                std::cmp::Ordering::Less => Verdict::PrefersSecond,
                std::cmp::Ordering::Equal => Verdict::Tie,
            })
        }
        (Descriptor::Projection { .. }, Rule::Sum) | (Descriptor::Sum { .. }, Rule::TotalDominance) => {
            Err(FeatureError::IncompatibleRule)
        }
        _ => generic_decision(space, &agenda.partition, first, second),
    }
}

/// The rule-free notion: compare the quotient of the dominance order.
pub fn generic_decision(space: &FeatureSpace, e: &Partition, first: usize, second: usize) -> Result<Verdict> {
    Ok(Verdict::from_preference(partition::prefers(e, &space.dominance, first, second)?))
}

/// Whether the meet of all thresholds over Y equals `e^Σ_Y`.
pub fn sum_decomposition_check<S: AsRef<str>>(space: &FeatureSpace, y: &[S]) -> Result<bool> {
    let target = sum_agenda(space, y)?.partition;
    let mut acc = Partition::top(space.profile_count());
    for t in thresholds(space, y)? {
        acc = acc.meet(&t.partition)?;
    }
    Ok(acc == target)
}

/// The facts behind the equivariance argument: on `U = {w,u}` and
/// `U' = {w',u'}` with the bijection `g`, both projections commute with `g`
/// while the sum agenda does not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivarianceReport {
    pub w: usize,
    pub u: usize,
    pub w_prime: usize,
    pub u_prime: usize,
    /// `g(e_y(U)) = e_y(U')` for y in {s, f}.
    pub projections_commute: bool,
    /// `e^Σ_Y(U) = U × U`.
    pub sum_on_u_is_total: bool,
    /// `e^Σ_Y(U') = {(w',w'), (u',u')}`.
    pub sum_on_u_prime_is_identity: bool,
    /// `g(e^Σ_Y(U)) = U' × U' ≠ e^Σ_Y(U')`.
    pub sum_breaks_equivariance: bool,
}

impl EquivarianceReport {
    pub fn all_hold(&self) -> bool {
        self.projections_commute
            && self.sum_on_u_is_total
            && self.sum_on_u_prime_is_identity
            && self.sum_breaks_equivariance
    }
}

pub fn equivariance_witness_check(space5: &FeatureSpace) -> Result<EquivarianceReport> {
    let binary = Scale::binary();
    if space5.params.len() != 5 || space5.params.iter().any(|p| p.scale != binary) {
        return Err(FeatureError::WrongSpace("expected five binary parameters".into()));
    }
    let id = |bits: [&str; 5]| space5.profile_id(&bits);
    let (w, u) = (id(["1", "0", "0", "0", "0"])?, id(["0", "1", "0", "0", "0"])?);
    let (wp, up) = (id(["0", "0", "0", "0", "0"])?, id(["1", "1", "0", "0", "0"])?);
    let y: Vec<String> = space5.params[..2].iter().map(|p| p.name.clone()).collect();
    let g = |x: usize| if x == w { wp } else { up };

    type Rel = BTreeSet<(usize, usize)>;
    let restrict = |e: &Partition, set: [usize; 2]| -> Rel {
        let mut r = Rel::new();
        for a in set {
            for b in set {
                if e.same_block(a, b) {
                    r.insert((a, b));
                }
            }
        }
        r
    };
    let image = |r: &Rel| -> Rel { r.iter().map(|&(a, b)| (g(a), g(b))).collect() };

    let mut projections_commute = true;
    for name in &y {
        let e = projection_agenda(space5, &[name])?.partition;
        projections_commute &= image(&restrict(&e, [w, u])) == restrict(&e, [wp, up]);
    }
    let sigma = sum_agenda(space5, &y)?.partition;
    let on_u = restrict(&sigma, [w, u]);
    let on_up = restrict(&sigma, [wp, up]);
    let total_u: Rel = [(w, w), (w, u), (u, w), (u, u)].into_iter().collect();
    let id_up: Rel = [(wp, wp), (up, up)].into_iter().collect();
    Ok(EquivarianceReport {
        w,
        u,
        w_prime: wp,
        u_prime: up,
        projections_commute,
        sum_on_u_is_total: on_u == total_u,
        sum_on_u_prime_is_identity: on_up == id_up,
        sum_breaks_equivariance: image(&on_u) != on_up,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binary_space(names: &[&str]) -> FeatureSpace {
        build_space(names.iter().map(|n| Parameter::new(*n, Scale::binary())).collect(), DEFAULT_PROFILE_CAP)
            .unwrap()
    }

    fn hiring() -> FeatureSpace {
        binary_space(&["r", "p", "l"])
    }

    #[test]
    fn space_sizes() {
        assert_eq!(hiring().profile_count(), 8);
        assert_eq!(binary_space(&["s", "f", "p", "t", "m"]).profile_count(), 32);
        let nl = build_space(
            vec![
                Parameter::new("r", Scale::pentagon()),
                Parameter::new("p", Scale::uniform_chain(3)),
                Parameter::new("l", Scale::uniform_chain(3)),
            ],
            DEFAULT_PROFILE_CAP,
        )
        .unwrap();
        assert_eq!(nl.profile_count(), 45);
        let big: Vec<Parameter> = (0..13).map(|i| Parameter::new(format!("x{i}"), Scale::binary())).collect();
        assert_eq!(build_space(big, 4096).unwrap_err(), FeatureError::CapExceeded { size: 8192, cap: 4096 });
    }

    #[test]
    fn cube_dominance_has_twelve_covers() {
        let s = hiring();
        let d = s.dominance();
        let mut covers = 0;
        for a in 0..8 {
            for b in 0..8 {
                if a != b && d.le(a, b) && !(0..8).any(|c| c != a && c != b && d.le(a, c) && d.le(c, b)) {
                    covers += 1;
                }
            }
        }
        assert_eq!(covers, 12);
    }

    #[test]
    fn malformed_scales() {
        assert!(Scale::poset(&["a", "b", "c"], &[(0, 1), (0, 2)], vec![None; 3]).is_err());
        assert!(Scale::poset(&["a", "b"], &[(0, 1), (1, 0)], vec![None; 2]).is_err());
        let z = Rational64::zero();
        assert!(Scale::chain(&["a", "b"], Some(vec![z, z])).is_err());
    }

    #[test]
    fn projection_examples() {
        let s = hiring();
        assert!(projection_agenda::<&str>(&s, &[]).unwrap().partition.is_top());
        let pr = projection_agenda(&s, &["p", "r"]).unwrap().partition;
        assert_eq!(pr.block_count(), 4);
        assert!(pr.blocks().iter().all(|b| b.len() == 2));
        assert!(projection_agenda(&s, &["r", "p", "l"]).unwrap().partition.is_bottom());
        assert!(matches!(projection_agenda(&s, &["q"]), Err(FeatureError::UnknownParameter(_))));
    }

    #[test]
    fn car_sums_and_thresholds() {
        let s = binary_space(&["s", "f", "p", "t", "m"]);
        let all = ["s", "f", "p", "t", "m"];
        let sigma = sum_agenda(&s, &all).unwrap().partition;
        assert_eq!(sigma.block_count(), 6);
        let c1 = s.profile_id(&["1", "0", "1", "0", "1"]).unwrap();
        let c2 = s.profile_id(&["0", "1", "0", "1", "0"]).unwrap();
        let idx = s.resolve(&all).unwrap();
        assert_eq!(s.sum_score(c1, &idx).unwrap(), Rational64::from_integer(3));
        assert_eq!(s.sum_score(c2, &idx).unwrap(), Rational64::from_integer(2));
        assert_eq!(
            sum_agenda(&s, &["f"]).unwrap().partition,
            projection_agenda(&s, &["f"]).unwrap().partition
        );
        assert!(sum_agenda::<&str>(&s, &[]).unwrap().partition.is_top());
        let t = threshold_issue(&s, &["f"], Rational64::zero()).unwrap();
        assert_eq!(t.partition, projection_agenda(&s, &["f"]).unwrap().partition);
        assert_eq!(t.partition.classify(), partition::IrreducibleKind::Coatom);
        assert!(matches!(
            threshold_issue(&s, &["f"], Rational64::from_integer(1)),
            Err(FeatureError::DegenerateThreshold { .. })
        ));
        let t0 = threshold_issue(&s, &["s", "f"], Rational64::zero()).unwrap().partition;
        let t1 = threshold_issue(&s, &["s", "f"], Rational64::from_integer(1)).unwrap().partition;
        assert_eq!(t0.meet(&t1).unwrap().block_count(), 3);
        assert_eq!(thresholds(&s, &["s", "f", "p"]).unwrap().len(), 3);
    }

    #[test]
    fn sum_rule_rejects_pentagon() {
        let s = build_space(vec![Parameter::new("r", Scale::pentagon())], 100).unwrap();
        assert_eq!(sum_agenda(&s, &["r"]).unwrap_err(), FeatureError::NonLinearScale("r".into()));
    }

    #[test]
    fn hiring_decisions() {
        let s = hiring();
        let john = s.profile_id(&["1", "1", "0"]).unwrap();
        let mary = s.profile_id(&["0", "1", "1"]).unwrap();
        let dec = |y: &[&str]| decide(&s, Rule::TotalDominance, &projection_agenda(&s, y).unwrap(), john, mary).unwrap();
        assert_eq!(dec(&["p", "r"]), Verdict::PrefersFirst);
        assert_eq!(dec(&["r", "l"]), Verdict::NoDecision);
        assert_eq!(dec(&["r"]), Verdict::PrefersFirst);
        assert_eq!(dec(&["p", "l"]), Verdict::PrefersSecond);
        assert_eq!(dec(&["r", "p", "l"]), Verdict::NoDecision);
        let all = rule_preorder(&s, Rule::TotalDominance, &["r", "p", "l"]).unwrap();
        assert!(!all.le(john, mary) && !all.le(mary, john));
        let sum = sum_agenda(&binary_space(&["a"]), &["a"]).unwrap();
        assert_eq!(decide(&s, Rule::TotalDominance, &sum, 0, 1), Err(FeatureError::IncompatibleRule));
    }

    #[test]
    fn car_decisions() {
        let s = binary_space(&["s", "f", "p", "t", "m"]);
        let c1 = s.profile_id(&["1", "0", "1", "0", "1"]).unwrap();
        let c2 = s.profile_id(&["0", "1", "0", "1", "0"]).unwrap();
        let dec = |y: &[&str]| decide(&s, Rule::Sum, &sum_agenda(&s, y).unwrap(), c1, c2).unwrap();
        assert_eq!(dec(&["f"]), Verdict::PrefersSecond);
        assert_eq!(dec(&["s", "f", "p", "t", "m"]), Verdict::PrefersFirst);
        assert_eq!(dec(&["s", "f", "p"]), Verdict::PrefersFirst);
        assert_eq!(dec(&["f", "t", "m"]), Verdict::PrefersSecond);
        let le_a = rule_preorder(&s, Rule::Sum, &["s", "f", "p"]).unwrap();
        assert!(le_a.le(c2, c1) && !le_a.le(c1, c2));
        assert_eq!(rule_preorder::<&str>(&s, Rule::Sum, &[]).unwrap(), Preorder::total(32));
    }

    #[test]
    fn equivariance_facts() {
        let s = binary_space(&["s", "f", "p", "t", "m"]);
        let r = equivariance_witness_check(&s).unwrap();
        assert!(r.all_hold(), "{r:?}");
        assert!(equivariance_witness_check(&hiring()).is_err());
    }
}
