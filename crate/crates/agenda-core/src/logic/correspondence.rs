//! The eleven condition/axiom pairs, compared on a single structure.

use super::conditions::{check_condition, ConditionId};
use super::frame::RelationalStructure;
use super::term::{build::*, check_validity, CTerm, ITerm, Sequent, DEFAULT_ATOM_CAP};
use super::{LogicError, Result};
use serde::Serialize;

/// Size limits for checking a pair on a frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrameCaps {
    pub max_agents: usize,
    pub max_issues: usize,
    pub atoms_per_sort: usize,
}

impl Default for FrameCaps {
    fn default() -> Self {
        FrameCaps { max_agents: 3, max_issues: 3, atoms_per_sort: DEFAULT_ATOM_CAP }
    }
}

pub const PAIR_COUNT: usize = 11;

/// The condition of pair `k` (1-based).
pub fn pair_condition(k: usize) -> Result<ConditionId> {
    use ConditionId::*;
    Ok(match k {
        1 => Symmetric,
        2 => PosCoherent,
        3 => NegCoherent,
        4 => NegPrefCoherent,
        5 => PosPrefCoherent,
        6 => Intransigent,
        7 => Equanimous,
        8 => GloballyIndifferent,
        9 => IPosCoherent,
        10 => INegCoherent,
        11 => IrsCoherent,
        _ => return Err(LogicError::UnknownPair(k)),
    })
}

/// The axioms of pair `k`; the first pair has two equivalent axioms.
pub fn pair_axioms(k: usize) -> Result<Vec<Sequent>> {
    let (c1, e1, e2) = (|| c(0), || e(0), || e(1));
    let cs = |a: CTerm, b: CTerm| Sequent::C(a, b);
    let is = |a: ITerm, b: ITerm| Sequent::IA(a, b);
    Ok(match k {
        1 => vec![cs(star(e1(), e2()), star(e2(), e1())), is(eqless(c1(), e1()), pdra(c1(), e1()))],
        2 => vec![cs(blacksquare(e1()), star(e1(), e1()))],
        3 => vec![cs(star(e1(), e1()), blacksquare(e1()))],
        4 => vec![is(diamond(c1()), pdra(c1(), ITerm::Tau))],
        5 => vec![is(pdra(c1(), ITerm::Bot), diamond(c1()))],
        6 => vec![cs(blacksquare(e1()), br_b(e1(), e1()))],
        7 => vec![cs(blacksquare(meet(e1(), e2())), star(e1(), e2()))],
        8 => vec![cs(CTerm::Top, star(ITerm::Bot, ITerm::Bot))],
        9 => vec![is(pdra(diamdotb(c1()), e1()), pdra(c1(), e1()))],
        10 => vec![is(pdra(diamdot(c1()), e1()), pdra(c1(), e1()))],
        11 => vec![cs(blacksquare(e1()), boxdot(star(e1(), ITerm::Bot)))],
        _ => return Err(LogicError::UnknownPair(k)),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub sequent: String,
    pub valid: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub pair: usize,
    pub condition: ConditionId,
    pub fo: bool,
    /// Every axiom of the pair is valid.
    pub axiom: bool,
    /// Each axiom matches the condition.
    pub agree: bool,
    pub axioms: Vec<AxiomResult>,
}

pub fn correspondence_pair(f: &RelationalStructure, pair: usize, caps: FrameCaps) -> Result<PairReport> {
    if f.agent_count() > caps.max_agents || f.issue_count() > caps.max_issues {
        return Err(LogicError::StructureCap { agents: f.agent_count(), issues: f.issue_count() });
    }
    let condition = pair_condition(pair)?;
    let h = f.complex_algebra()?;
    let fo = check_condition(f, condition);
    let mut axioms = Vec::new();
    for seq in pair_axioms(pair)? {
        let valid = check_validity(&h, &seq, caps.atoms_per_sort)?.is_valid();
        axioms.push(AxiomResult { sequent: seq.to_string(), valid });
    }
    Ok(PairReport {
        pair,
        condition,
        fo,
        axiom: axioms.iter().all(|a| a.valid),
        agree: axioms.iter().all(|a| a.valid == fo),
        axioms,
    })
}

pub fn all_pairs(f: &RelationalStructure, caps: FrameCaps) -> Result<Vec<PairReport>> {
    (1..=PAIR_COUNT).map(|k| correspondence_pair(f, k, caps)).collect()
}
