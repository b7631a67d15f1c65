//! Finite partitions, the lattice of equivalence relations over `0..n`, and
//! the preorder constructions that link agendas to preferences.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Default ceiling on `n` for coatom enumeration (there are `2^(n-1) - 1`).
pub const DEFAULT_COATOM_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("element {0} appears in more than one block")]
    Overlap(usize),
    #[error("element {0} is not covered by any block")]
    Coverage(usize),
    #[error("empty block")]
    EmptyBlock,
    #[error("element {index} is outside the ground set of size {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("ground sets differ ({0} vs {1})")]
    GroundMismatch(usize, usize),
    #[error("ground set of size {0} is too small")]
    TooSmall(usize),
    #[error("coatom enumeration refused for n = {n} (cap {cap})")]
    SizeCap { n: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, PartitionError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroundSet(usize);

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(PartitionError::TooSmall(0));
        }
        Ok(GroundSet(n))
    }

    pub fn size(self) -> usize {
        self.0
    }
}

fn same_ground(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(PartitionError::GroundMismatch(a, b))
    }
}

/// A partition stored as its restricted-growth labelling: `labels[i]` is the
/// index of the block of `i`, blocks numbered in order of their least element.
/// Two partitions are equal exactly when their labellings are.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    labels: Vec<u32>,
    count: u32,
}

impl Partition {
    pub fn new(ground: GroundSet, blocks: &[Vec<usize>]) -> Result<Self> {
        let n = ground.size();
        let mut owner = vec![u32::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            for &x in block {
                if x >= n {
                    return Err(PartitionError::IndexOutOfRange { index: x, n });
                }
                if owner[x] != u32::MAX {
                    return Err(PartitionError::Overlap(x));
                }
                owner[x] = b as u32;
            }
        }
        if let Some(x) = owner.iter().position(|&o| o == u32::MAX) {
            return Err(PartitionError::Coverage(x));
        }
        Ok(Self::from_labels(&owner))
    }

    /// Builds a partition from any labelling (equal labels = same block).
    pub fn from_labels<L: Clone + Eq + std::hash::Hash>(raw: &[L]) -> Self {
        let mut seen = std::collections::HashMap::new();
        let labels = raw
            .iter()
            .map(|l| {
                let next = seen.len() as u32;
                *seen.entry(l.clone()).or_insert(next)
            })
            .collect();
        Partition { labels, count: seen.len() as u32 }
    }

    /// The top element τ: a single block.
    pub fn top(n: usize) -> Self {
        Partition { labels: vec![0; n], count: u32::from(n > 0) }
    }

    /// The bottom element ε: all singletons.
    pub fn bottom(n: usize) -> Self {
        Partition { labels: (0..n as u32).collect(), count: n as u32 }
    }

    /// The bipartition `{X, W \ X}` (τ if X is empty or everything).
    pub fn bipartition(n: usize, in_x: impl Fn(usize) -> bool) -> Self {
        let raw: Vec<bool> = (0..n).map(in_x).collect();
        Self::from_labels(&raw)
    }

    pub fn ground_size(&self) -> usize {
        self.labels.len()
    }

    pub fn block_count(&self) -> usize {
        self.count as usize
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.labels[x] as usize
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.labels[x] == self.labels[y]
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.block_count()];
        for (x, &l) in self.labels.iter().enumerate() {
            out[l as usize].push(x);
        }
        out
    }

    pub fn is_top(&self) -> bool {
        self.count <= 1
    }

    pub fn is_bottom(&self) -> bool {
        self.count as usize == self.labels.len()
    }

    pub fn meet(&self, other: &Partition) -> Result<Partition> {
        same_ground(self.ground_size(), other.ground_size())?;
        let pairs: Vec<(u32, u32)> =
            self.labels.iter().zip(&other.labels).map(|(a, b)| (*a, *b)).collect();
        Ok(Self::from_labels(&pairs))
    }

    /// Least upper bound in E(W): the equivalence closure of the union,
    /// computed by merging overlapping blocks with union-find.
    pub fn join(&self, other: &Partition) -> Result<Partition> {
        same_ground(self.ground_size(), other.ground_size())?;
        let mut uf = UnionFind::new(self.block_count());
        let mut first_in_other = vec![usize::MAX; other.block_count()];
        for x in 0..self.ground_size() {
            let ob = other.block_of(x);
            if first_in_other[ob] == usize::MAX {
                first_in_other[ob] = self.block_of(x);
            } else {
                uf.union(first_in_other[ob], self.block_of(x));
            }
        }
        let raw: Vec<usize> = self.labels.iter().map(|&l| uf.find(l as usize)).collect();
        Ok(Self::from_labels(&raw))
    }

    /// `self ≤ other` in E(W): every block of `self` sits inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> Result<bool> {
        same_ground(self.ground_size(), other.ground_size())?;
        Ok(self.refines_unchecked(other))
    }

    pub(crate) fn refines_unchecked(&self, other: &Partition) -> bool {
        let mut image = vec![u32::MAX; self.block_count()];
        for (a, b) in self.labels.iter().zip(&other.labels) {
            let slot = &mut image[*a as usize];
            if *slot == u32::MAX {
                *slot = *b;
            } else if *slot != *b {
                return false;
            }
        }
        true
    }

    pub fn classify(&self) -> IrreducibleKind {
        let n = self.ground_size();
        if self.is_bottom() {
            return IrreducibleKind::Bottom;
        }
        if self.is_top() {
            return IrreducibleKind::Top;
        }
        if self.block_count() == 2 {
            return IrreducibleKind::Coatom;
        }
        if self.block_count() == n - 1 {
            return IrreducibleKind::Atom;
        }
        IrreducibleKind::Neither
    }

    /// ⟨e⟩X: union of the blocks that meet X.
    pub fn diamond_set(&self, x: &Subset) -> Result<Subset> {
        same_ground(self.ground_size(), x.ground_size())?;
        let mut hit = vec![false; self.block_count()];
        for i in x.iter() {
            hit[self.block_of(i)] = true;
        }
        Ok(Subset::from_fn(self.ground_size(), |i| hit[self.block_of(i)]))
    }

    /// [e]X: union of the blocks contained in X.
    pub fn box_set(&self, x: &Subset) -> Result<Subset> {
        same_ground(self.ground_size(), x.ground_size())?;
        let mut inside = vec![true; self.block_count()];
        for i in 0..self.ground_size() {
            if !x.contains(i) {
                inside[self.block_of(i)] = false;
            }
        }
        Ok(Subset::from_fn(self.ground_size(), |i| inside[self.block_of(i)]))
    }

    /// Every partition of `0..n`, via restricted growth strings.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut labels = vec![0u32; n];
        fn rec(i: usize, max: u32, labels: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == labels.len() {
                out.push(Partition { labels: labels.clone(), count: max });
                return;
            }
            for l in 0..=max {
                labels[i] = l;
                rec(i + 1, max.max(l + 1), labels, out);
            }
        }
        if n == 0 {
            return vec![Partition::top(0)];
        }
        rec(1, 1, &mut labels, &mut out);
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                let items: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let blocks: Vec<Vec<usize>> = Vec::deserialize(d)?;
        let n = blocks.iter().map(Vec::len).sum();
        let ground = GroundSet::new(n).map_err(serde::de::Error::custom)?;
        Partition::new(ground, &blocks).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IrreducibleKind {
    Atom,
    Coatom,
    Neither,
    Bottom,
    Top,
}

/// Atoms (one merged pair) and coatoms (bipartitions) of E(W).
pub fn enumerate_irreducibles(
    ground: GroundSet,
    coatom_cap: usize,
) -> Result<(Vec<Partition>, Vec<Partition>)> {
    let n = ground.size();
    if n < 2 {
        return Err(PartitionError::TooSmall(n));
    }
    if n > coatom_cap {
        return Err(PartitionError::SizeCap { n, cap: coatom_cap });
    }
    let mut atoms = Vec::with_capacity(n * (n - 1) / 2);
    for x in 0..n {
        for y in x + 1..n {
            let raw: Vec<usize> = (0..n).map(|i| if i == y { x } else { i }).collect();
            atoms.push(Partition::from_labels(&raw));
        }
    }
    // Element 0 always sits outside the marked block, so nonzero masks over
    // the other n-1 elements list each bipartition once.
    let mut coatoms = Vec::with_capacity((1usize << (n - 1)) - 1);
    for mask in 1..1u64 << (n - 1) {
        coatoms.push(Partition::bipartition(n, |i| i > 0 && mask >> (i - 1) & 1 == 1));
    }
    Ok((atoms, coatoms))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    members: Vec<bool>,
}

impl Subset {
    pub fn new(ground: GroundSet, members: &[usize]) -> Result<Self> {
        let n = ground.size();
        let mut v = vec![false; n];
        for &m in members {
            if m >= n {
                return Err(PartitionError::IndexOutOfRange { index: m, n });
            }
            v[m] = true;
        }
        Ok(Subset { members: v })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> bool) -> Self {
        Subset { members: (0..n).map(f).collect() }
    }

    pub fn empty(n: usize) -> Self {
        Subset { members: vec![false; n] }
    }

    pub fn full(n: usize) -> Self {
        Subset { members: vec![true; n] }
    }

    pub fn ground_size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().enumerate().filter(|(_, m)| **m).map(|(i, _)| i)
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|m| **m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn complement(&self) -> Subset {
        Subset { members: self.members.iter().map(|m| !m).collect() }
    }

    pub fn union(&self, other: &Subset) -> Subset {
        Subset::from_fn(self.ground_size(), |i| self.members[i] || other.members[i])
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.members.iter().zip(&other.members).all(|(a, b)| !a || *b)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A reflexive transitive relation, stored densely row by row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Preorder {
    n: usize,
    holds: Vec<bool>,
}

/// Attached to a quotient preorder whose relation turned out not to be transitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitivityWarning {
    pub witness: (usize, usize, usize),
}

impl Preorder {
    /// Reflexive-transitive closure of an arbitrary relation.
    pub fn closure(n: usize, rel: impl Fn(usize, usize) -> bool) -> Self {
        let mut holds: Vec<bool> = (0..n * n).map(|k| k / n == k % n || rel(k / n, k % n)).collect();
        for k in 0..n {
            for i in 0..n {
                if holds[i * n + k] {
                    for j in 0..n {
                        if holds[k * n + j] {
                            holds[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Preorder { n, holds }
    }

    /// Accepts a relation only if it is already reflexive and transitive.
    pub fn from_fn(n: usize, rel: impl Fn(usize, usize) -> bool) -> Option<Self> {
        let p = Preorder { n, holds: (0..n * n).map(|k| rel(k / n, k % n)).collect() };
        (p.is_reflexive() && p.transitivity_witness().is_none()).then_some(p)
    }

    pub fn total(n: usize) -> Self {
        Preorder { n, holds: vec![true; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Preorder { n, holds: (0..n * n).map(|k| k / n == k % n).collect() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.holds[a * self.n + b]
    }

    fn is_reflexive(&self) -> bool {
        (0..self.n).all(|i| self.le(i, i))
    }

    fn transitivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                if !self.le(a, b) {
                    continue;
                }
                for c in 0..n {
                    if self.le(b, c) && !self.le(a, c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| !(self.le(a, b) && self.le(b, a))))
    }

    /// The relational composition `e ∘ self ∘ e`.
    pub fn conjugate(&self, e: &Partition) -> Result<Vec<bool>> {
        same_ground(self.n, e.ground_size())?;
        let bl = self.block_relation(e);
        let n = self.n;
        Ok((0..n * n).map(|k| bl[e.block_of(k / n)][e.block_of(k % n)].1).collect())
    }

    /// For each pair of blocks (B, B'): (∀w∈B ∃u∈B' w≤u, ∃w∈B ∃u∈B' w≤u).
    fn block_relation(&self, e: &Partition) -> Vec<Vec<(bool, bool)>> {
        let blocks = e.blocks();
        blocks
            .iter()
            .map(|b| {
                blocks
                    .iter()
                    .map(|c| {
                        let every = b.iter().all(|&w| c.iter().any(|&u| self.le(w, u)));
                        let some = b.iter().any(|&w| c.iter().any(|&u| self.le(w, u)));
                        (every, some)
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for Preorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|a| (0..self.n).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && self.le(a, b))
            .collect();
        write!(f, "Preorder(n={}, {:?})", self.n, pairs)
    }
}

/// `≤_e`: w ≤_e u iff every w′ ~ w lies below some u′ ~ u.
pub fn preorder_from_equiv(
    e: &Partition,
    base: &Preorder,
) -> Result<(Preorder, Option<TransitivityWarning>)> {
    same_ground(e.ground_size(), base.size())?;
    let bl = base.block_relation(e);
    let n = base.size();
    let rel = Preorder {
        n,
        holds: (0..n * n).map(|k| bl[e.block_of(k / n)][e.block_of(k % n)].0).collect(),
    };
    let warning = rel.transitivity_witness().map(|witness| TransitivityWarning { witness });
    Ok((rel, warning))
}

/// `e_≤`: the classes of mutually comparable elements.
pub fn equiv_from_preorder(pre: &Preorder) -> Partition {
    let n = pre.size();
    let mut rep = vec![usize::MAX; n];
    for i in 0..n {
        if rep[i] != usize::MAX {
            continue;
        }
        for j in i..n {
            if pre.le(i, j) && pre.le(j, i) {
                rep[j] = i;
            }
        }
    }
    Partition::from_labels(&rep)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Compatibility {
    None,
    Compatible,
    StronglyCompatible,
}

pub fn compatibility(e: &Partition, pre: &Preorder) -> Result<Compatibility> {
    let conj = pre.conjugate(e)?;
    let n = pre.size();
    if (0..n * n).any(|k| conj[k] && !pre.le(k / n, k % n)) {
        return Ok(Compatibility::None);
    }
    if equiv_from_preorder(pre).refines_unchecked(e) {
        Ok(Compatibility::StronglyCompatible)
    } else {
        Ok(Compatibility::Compatible)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Preference {
    PrefersU,
    PrefersW,
    Tie,
    Incomparable,
}

/// Whether agenda `e` over `base` prefers `u` to `w`.
pub fn prefers(e: &Partition, base: &Preorder, u: usize, w: usize) -> Result<Preference> {
    same_ground(e.ground_size(), base.size())?;
    let n = base.size();
    for i in [u, w] {
        if i >= n {
            return Err(PartitionError::IndexOutOfRange { index: i, n });
        }
    }
    let le = |a: usize, b: usize| {
        let (ba, bb) = (e.block_of(a), e.block_of(b));
        (0..n)
            .filter(|&x| e.block_of(x) == ba)
            .all(|x| (0..n).any(|y| e.block_of(y) == bb && base.le(x, y)))
    };
    Ok(match (le(w, u), le(u, w)) {
        (true, true) => Preference::Tie,
        (true, false) => Preference::PrefersU,
        (false, true) => Preference::PrefersW,
        (false, false) => Preference::Incomparable,
    })
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
