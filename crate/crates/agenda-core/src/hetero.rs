//! Heterogeneous operators between coalitions and agendas, induced by the
//! relevance relation R and the substitution relation S.

use crate::coalition::{AgentSet, Coalition, Influence};
use crate::lattice::{AgendaSort, Elem, LatticeError};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeteroError {
    #[error("the agenda lattice is not Boolean")]
    NotBoolean,
    #[error("agent index {0} out of range")]
    UnknownAgent(usize),
    #[error("issue index {0} out of range")]
    UnknownIssue(usize),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

pub type Result<T> = std::result::Result<T, HeteroError>;

/// Agents, a lattice of agendas, and the relations I, R and S.
#[derive(Debug, Clone)]
pub struct HeteroStructure<L> {
    agents: AgentSet,
    lattice: L,
    influence: Influence,
    /// `relevant[j]`: issues m with m R j.
    relevant: Vec<Elem>,
    /// `subst[j][m]`: issues n with S(n, j, m).
    subst: Vec<Vec<Elem>>,
    diamond_atom: Vec<Elem>,
    arrow_atom: Vec<Vec<Elem>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Triple {
    pub to: usize,
    pub agent: usize,
    pub from: usize,
}

impl<L: AgendaSort> HeteroStructure<L> {
    /// `relevance` holds pairs `(m, j)`; `substitution` holds `S(n, j, m)`.
    pub fn new(
        agents: AgentSet,
        lattice: L,
        influence: Influence,
        relevance: &[(usize, usize)],
        substitution: &[Triple],
    ) -> Result<Self> {
        let (nc, nd) = (agents.len(), lattice.generator_count());
        let issue = |m: usize| if m < nd { Ok(m) } else { Err(HeteroError::UnknownIssue(m)) };
        let agent = |j: usize| if j < nc { Ok(j) } else { Err(HeteroError::UnknownAgent(j)) };
        if influence.agent_count() != nc {
            return Err(HeteroError::UnknownAgent(influence.agent_count()));
        }
        let mut relevant = vec![Elem::EMPTY; nc];
        for &(m, j) in relevance {
            relevant[agent(j)?] = relevant[j].union(Elem::single(issue(m)?));
        }
        let mut subst = vec![vec![Elem::EMPTY; nd]; nc];
        for t in substitution {
            let (n, j, m) = (issue(t.to)?, agent(t.agent)?, issue(t.from)?);
            subst[j][m] = subst[j][m].union(Elem::single(n));
        }
        let diamond_atom = relevant.iter().map(|&r| lattice.close(r)).collect();
        let arrow_atom = subst.iter().map(|row| row.iter().map(|&s| lattice.close(s)).collect()).collect();
        Ok(HeteroStructure { agents, lattice, influence, relevant, subst, diamond_atom, arrow_atom })
    }

    pub fn agents(&self) -> &AgentSet {
        &self.agents
    }

    pub fn lattice(&self) -> &L {
        &self.lattice
    }

    pub fn influence(&self) -> &Influence {
        &self.influence
    }

    pub fn agent_count(&self) -> usize {
        self.agents.len()
    }

    pub fn all_agents(&self) -> Coalition {
        Coalition::full(self.agents.len())
    }

    pub fn relevant(&self, j: usize) -> Elem {
        self.relevant[j]
    }

    pub fn substitutes(&self, j: usize, m: usize) -> Elem {
        self.subst[j][m]
    }

    /// ⋄c: the common agenda, a 𝔻-join of the members' agendas (⊥ for ∅).
    pub fn common_agenda(&self, c: Coalition) -> Elem {
        c.iter().fold(self.lattice.bottom(), |acc, j| acc.intersect(self.diamond_atom[j]))
    }

    /// ▷c: the distributed agenda, the meet of the members' agendas (τ for ∅).
    pub fn distributed_agenda(&self, c: Coalition) -> Elem {
        self.lattice.close(c.iter().fold(Elem::EMPTY, |acc, j| acc.union(self.relevant[j])))
    }

    /// □c = ⊓{m | some j outside c has ⋄j ≰ m}; needs a Boolean lattice.
    pub fn box_coalition(&self, c: Coalition) -> Result<Elem> {
        if !self.lattice.is_boolean() {
            return Err(HeteroError::NotBoolean);
        }
        let nd = self.lattice.generator_count();
        let mut acc = Elem::EMPTY;
        for j in c.complement(self.agent_count()).iter() {
            acc = acc.union(Elem::full(nd).intersect(Elem(!self.diamond_atom[j].0)));
        }
        Ok(self.lattice.close(acc))
    }

    /// ■e = {j | ⋄j ≤ e}.
    pub fn blacksquare(&self, e: Elem) -> Coalition {
        self.agents_where(|j| self.lattice.le(self.diamond_atom[j], e))
    }

    /// ▶e = {j | e ≤ ▷j}.
    pub fn blacktriangleright(&self, e: Elem) -> Coalition {
        self.agents_where(|j| self.lattice.le(e, self.distributed_agenda(Coalition::single(j))))
    }

    /// c −< e: 𝔻-join of `j −< m` over members j and generators m ≥ e.
    pub fn subst_transform(&self, c: Coalition, e: Elem) -> Elem {
        let mut acc = self.lattice.bottom();
        for j in c.iter() {
            for m in e.iter() {
                acc = acc.intersect(self.arrow_atom[j][m]);
            }
        }
        acc
    }

    /// e1 ⋆ e2 = {j | j −< e1 ≤ e2}.
    pub fn star(&self, e1: Elem, e2: Elem) -> Coalition {
        self.agents_where(|j| self.lattice.le(self.subst_transform(Coalition::single(j), e1), e2))
    }

    /// c =< e = ⊓{e′ | c −< e′ ≤ e}, by enumerating 𝔻.
    pub fn residual_second(&self, c: Coalition, e: Elem) -> Result<Elem> {
        let mut acc = Elem::EMPTY;
        for x in self.lattice.elements()? {
            if self.lattice.le(self.subst_transform(c, x), e) {
                acc = acc.union(x);
            }
        }
        Ok(self.lattice.close(acc))
    }

    /// c ▷̄ e: meet of `j −< m` over members j and generators m ≥ e (τ if none).
    pub fn br_transform(&self, c: Coalition, e: Elem) -> Elem {
        let mut acc = Elem::EMPTY;
        for j in c.iter() {
            for m in e.iter() {
                acc = acc.union(self.arrow_atom[j][m]);
            }
        }
        self.lattice.close(acc)
    }

    /// e1 ▶̄ e2 = {j | e1 ≤ j ▷̄ e2}.
    pub fn br_black(&self, e1: Elem, e2: Elem) -> Coalition {
        self.agents_where(|j| self.lattice.le(e1, self.br_transform(Coalition::single(j), e2)))
    }

    /// c △ e = ⊓{e2 | e ≤ c ▷̄ e2}, by enumerating 𝔻.
    pub fn vartriangle(&self, c: Coalition, e: Elem) -> Result<Elem> {
        let mut acc = Elem::EMPTY;
        for x in self.lattice.elements()? {
            if self.lattice.le(e, self.br_transform(c, x)) {
                acc = acc.union(x);
            }
        }
        Ok(self.lattice.close(acc))
    }

    fn agents_where(&self, f: impl Fn(usize) -> bool) -> Coalition {
        (0..self.agent_count()).filter(|&j| f(j)).fold(Coalition::EMPTY, Coalition::with)
    }
}
