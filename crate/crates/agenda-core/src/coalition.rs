//! Coalitions as subsets of an ordered agent list, and the modal operators
//! induced by the influence relation.

use serde::Serialize;
use thiserror::Error;

/// Coalitions are 64-bit masks.
pub const MAX_AGENTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoalitionError {
    #[error("unknown agent `{0}`")]
    UnknownAgent(String),
    #[error("duplicate agent `{0}`")]
    DuplicateAgent(String),
    #[error("need between 1 and {MAX_AGENTS} agents, got {0}")]
    BadAgentCount(usize),
}

pub type Result<T> = std::result::Result<T, CoalitionError>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AgentSet {
    names: Vec<String>,
}

impl AgentSet {
    pub fn new(names: Vec<String>) -> Result<Self> {
        if names.is_empty() || names.len() > MAX_AGENTS {
            return Err(CoalitionError::BadAgentCount(names.len()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(CoalitionError::DuplicateAgent(n.clone()));
            }
        }
        Ok(AgentSet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| CoalitionError::UnknownAgent(name.to_string()))
    }

    pub fn coalition<S: AsRef<str>>(&self, members: &[S]) -> Result<Coalition> {
        let mut c = Coalition::EMPTY;
        for m in members {
            c = c.with(self.index_of(m.as_ref())?);
        }
        Ok(c)
    }

    pub fn all(&self) -> Coalition {
        Coalition::full(self.len())
    }

    pub fn member_names(&self, c: Coalition) -> Vec<String> {
        c.iter().map(|i| self.names[i].clone()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct Coalition(pub u64);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn full(n: usize) -> Coalition {
        if n >= 64 {
            Coalition(u64::MAX)
        } else {
            Coalition((1u64 << n) - 1)
        }
    }

    pub fn single(i: usize) -> Coalition {
        Coalition(1u64 << i)
    }

    pub fn with(self, i: usize) -> Coalition {
        Coalition(self.0 | 1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn union(self, o: Coalition) -> Coalition {
        Coalition(self.0 | o.0)
    }

    pub fn intersect(self, o: Coalition) -> Coalition {
        Coalition(self.0 & o.0)
    }

    /// Complement relative to `n` agents.
    pub fn complement(self, n: usize) -> Coalition {
        Coalition(!self.0 & Coalition::full(n).0)
    }

    pub fn is_subset(self, o: Coalition) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DiamondDirection {
    /// Agents influencing some member.
    Influencers,
    /// Agents influenced by some member.
    Audience,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoxDirection {
    /// Agents who influence only members: `¬ Influencers(¬c)`.
    OnlyInto,
    /// Agents influenced only by members: `¬ Audience(¬c)`.
    OnlyFrom,
}

/// `i I j`: agent `i` influences agent `j`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Influence {
    n: usize,
    /// `influences[i]`: the agents `i` influences.
    influences: Vec<Coalition>,
}

impl Influence {
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut influences = vec![Coalition::EMPTY; n];
        for &(i, j) in pairs {
            influences[i] = influences[i].with(j);
        }
        Influence { n, influences }
    }

    pub fn from_names<S: AsRef<str>>(agents: &AgentSet, pairs: &[(S, S)]) -> Result<Self> {
        let idx: Vec<(usize, usize)> = pairs
            .iter()
            .map(|(a, b)| Ok((agents.index_of(a.as_ref())?, agents.index_of(b.as_ref())?)))
            .collect::<Result<_>>()?;
        Ok(Self::new(agents.len(), &idx))
    }

    pub fn agent_count(&self) -> usize {
        self.n
    }

    pub fn holds(&self, i: usize, j: usize) -> bool {
        self.influences[i].contains(j)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|i| self.influences[i].iter().map(move |j| (i, j))).collect()
    }

    pub fn diamond(&self, c: Coalition, dir: DiamondDirection) -> Coalition {
        let mut out = Coalition::EMPTY;
        for i in 0..self.n {
            let hit = match dir {
                DiamondDirection::Influencers => !self.influences[i].intersect(c).is_empty(),
                DiamondDirection::Audience => c.iter().any(|j| self.influences[j].contains(i)),
            };
            if hit {
                out = out.with(i);
            }
        }
        out
    }

    pub fn boxed(&self, c: Coalition, dir: BoxDirection) -> Coalition {
        let d = match dir {
            BoxDirection::OnlyInto => DiamondDirection::Influencers,
            BoxDirection::OnlyFrom => DiamondDirection::Audience,
        };
        self.diamond(c.complement(self.n), d).complement(self.n)
    }
}
