//! Bounded comparison of the sequents validated by several complex algebras.
//!
//! Terms are generated up to a depth and identified by their value profile:
//! the vector of their values under every valuation of every structure. Two
//! terms with the same profile validate the same sequents, so one
//! representative per profile suffices.

use super::frame::{disjoint_union, RelationalStructure};
use super::term::{build::*, CTerm, ITerm, Sequent};
use super::{LogicError, Result};
use crate::coalition::{BoxDirection, Coalition, DiamondDirection};
use crate::hetero::HeteroStructure;
use crate::lattice::{AgendaSort, Elem, FreeAgendas};
use serde::Serialize;
use std::collections::HashMap;

/// Limit on representatives per sort.
pub const TERM_CAP: usize = 5000;
/// Limit on valuations summed over all structures.
pub const VALUATION_CAP: usize = 1 << 14;

struct Point {
    owner: usize,
    coalitions: Vec<Coalition>,
    agendas: Vec<Elem>,
}

/// Representative terms of both sorts with their value profiles.
pub struct TermFamily {
    algebras: Vec<HeteroStructure<FreeAgendas>>,
    points: Vec<Point>,
    c: Vec<(CTerm, Vec<Coalition>)>,
    ia: Vec<(ITerm, Vec<Elem>)>,
}

impl TermFamily {
    pub fn generate(frames: &[&RelationalStructure], depth: usize, atom_cap: usize) -> Result<Self> {
        let algebras = frames.iter().map(|f| f.complex_algebra()).collect::<Result<Vec<_>>>()?;
        let mut points = Vec::new();
        for (k, h) in algebras.iter().enumerate() {
            let nc = 1usize << h.agent_count();
            let elems = h.lattice().elements()?;
            let total = (nc * elems.len()).checked_pow(atom_cap as u32).unwrap_or(usize::MAX);
            if points.len().saturating_add(total) > VALUATION_CAP {
                return Err(LogicError::TermCap("valuations"));
            }
            for idx in 0..total {
                let mut rest = idx;
                let mut p = Point { owner: k, coalitions: Vec::new(), agendas: Vec::new() };
                for _ in 0..atom_cap {
                    p.coalitions.push(Coalition((rest % nc) as u64));
                    rest /= nc;
                    p.agendas.push(elems[rest % elems.len()]);
                    rest /= elems.len();
                }
                points.push(p);
            }
        }
        let mut fam = TermFamily { algebras, points, c: Vec::new(), ia: Vec::new() };
        let mut seen_c = HashMap::new();
        let mut seen_i = HashMap::new();
        let mut leaves_c = vec![CTerm::Top, CTerm::Bot];
        let mut leaves_i = vec![ITerm::Tau, ITerm::Bot];
        for k in 0..atom_cap {
            leaves_c.push(c(k));
            leaves_i.push(e(k));
        }
        for t in leaves_c {
            let sig = fam.map_points(|h, p| match &t {
                CTerm::Top => h.all_agents(),
                CTerm::Atom(k) => p.coalitions[*k],
                _ => Coalition::EMPTY,
            });
            fam.push_c(&mut seen_c, t.clone(), sig)?;
        }
        for t in leaves_i {
            let sig = fam.map_points(|h, p| match &t {
                ITerm::Bot => h.lattice().bottom(),
                ITerm::Atom(k) => p.agendas[*k],
                _ => Elem::EMPTY,
            });
            fam.push_i(&mut seen_i, t.clone(), sig)?;
        }
        for _ in 0..depth {
            fam.grow(&mut seen_c, &mut seen_i)?;
        }
        Ok(fam)
    }

    pub fn coalition_terms(&self) -> usize {
        self.c.len()
    }

    pub fn agenda_terms(&self) -> usize {
        self.ia.len()
    }

    fn map_points<T>(&self, f: impl Fn(&HeteroStructure<FreeAgendas>, &Point) -> T) -> Vec<T> {
        self.points.iter().map(|p| f(&self.algebras[p.owner], p)).collect()
    }

    fn zip_points<T>(&self, f: impl Fn(&HeteroStructure<FreeAgendas>, usize) -> T) -> Vec<T> {
        self.points.iter().enumerate().map(|(v, p)| f(&self.algebras[p.owner], v)).collect()
    }

    fn push_c(&mut self, seen: &mut HashMap<Vec<Coalition>, usize>, t: CTerm, sig: Vec<Coalition>) -> Result<()> {
        if !seen.contains_key(&sig) {
            if self.c.len() >= TERM_CAP {
                return Err(LogicError::TermCap("coalition terms"));
            }
            seen.insert(sig.clone(), self.c.len());
            self.c.push((t, sig));
        }
        Ok(())
    }

    fn push_i(&mut self, seen: &mut HashMap<Vec<Elem>, usize>, t: ITerm, sig: Vec<Elem>) -> Result<()> {
        if !seen.contains_key(&sig) {
            if self.ia.len() >= TERM_CAP {
                return Err(LogicError::TermCap("agenda terms"));
            }
            seen.insert(sig.clone(), self.ia.len());
            self.ia.push((t, sig));
        }
        Ok(())
    }

    /// One more layer of operators over the current representatives.
    fn grow(&mut self, seen_c: &mut HashMap<Vec<Coalition>, usize>, seen_i: &mut HashMap<Vec<Elem>, usize>) -> Result<()> {
        let cs = self.c.clone();
        let is = self.ia.clone();
        let mut new_c: Vec<(CTerm, Vec<Coalition>)> = Vec::new();
        let mut new_i: Vec<(ITerm, Vec<Elem>)> = Vec::new();

        for (t, x) in &cs {
            let n = |h: &HeteroStructure<FreeAgendas>| h.agent_count();
            new_c.push((not(t.clone()), self.zip_points(|h, v| x[v].complement(n(h)))));
            new_c.push((diamdot(t.clone()), self.zip_points(|h, v| h.influence().diamond(x[v], DiamondDirection::Influencers))));
            new_c.push((diamdotb(t.clone()), self.zip_points(|h, v| h.influence().diamond(x[v], DiamondDirection::Audience))));
            new_c.push((boxdot(t.clone()), self.zip_points(|h, v| h.influence().boxed(x[v], BoxDirection::OnlyInto))));
            new_c.push((blacksqdot(t.clone()), self.zip_points(|h, v| h.influence().boxed(x[v], BoxDirection::OnlyFrom))));
            new_i.push((diamond(t.clone()), self.zip_points(|h, v| h.common_agenda(x[v]))));
            new_i.push((rhd(t.clone()), self.zip_points(|h, v| h.distributed_agenda(x[v]))));
        }
        for (a, (ta, x)) in cs.iter().enumerate() {
            for (tb, y) in &cs[a + 1..] {
                new_c.push((CTerm::And(Box::new(ta.clone()), Box::new(tb.clone())), self.zip_points(|_, v| x[v].intersect(y[v]))));
                new_c.push((CTerm::Or(Box::new(ta.clone()), Box::new(tb.clone())), self.zip_points(|_, v| x[v].union(y[v]))));
            }
        }
        for (t, x) in &is {
            new_c.push((blacksquare(t.clone()), self.zip_points(|h, v| h.blacksquare(x[v]))));
            new_c.push((blacktriangle(t.clone()), self.zip_points(|h, v| h.blacktriangleright(x[v]))));
        }
        for (a, (ta, x)) in is.iter().enumerate() {
            for (b, (tb, y)) in is.iter().enumerate() {
                new_c.push((star(ta.clone(), tb.clone()), self.zip_points(|h, v| h.star(x[v], y[v]))));
                new_c.push((br_b(ta.clone(), tb.clone()), self.zip_points(|h, v| h.br_black(x[v], y[v]))));
                if a < b {
                    new_i.push((meet(ta.clone(), tb.clone()), self.zip_points(|h, v| h.lattice().meet(x[v], y[v]))));
                    new_i.push((join(ta.clone(), tb.clone()), self.zip_points(|h, v| h.lattice().join(x[v], y[v]))));
                }
            }
        }
        for (tc, x) in &cs {
            for (te, y) in &is {
                new_i.push((pdra(tc.clone(), te.clone()), self.zip_points(|h, v| h.subst_transform(x[v], y[v]))));
                new_i.push((br(tc.clone(), te.clone()), self.zip_points(|h, v| h.br_transform(x[v], y[v]))));
                let eq = self.points.iter().enumerate().map(|(v, p)| self.algebras[p.owner].residual_second(x[v], y[v])).collect::<std::result::Result<Vec<_>, _>>()?;
                new_i.push((eqless(tc.clone(), te.clone()), eq));
                let tr = self.points.iter().enumerate().map(|(v, p)| self.algebras[p.owner].vartriangle(x[v], y[v])).collect::<std::result::Result<Vec<_>, _>>()?;
                new_i.push((triangle(tc.clone(), te.clone()), tr));
            }
        }
        for (t, sig) in new_c {
            self.push_c(seen_c, t, sig)?;
        }
        for (t, sig) in new_i {
            self.push_i(seen_i, t, sig)?;
        }
        Ok(())
    }

    /// Valid structures of `lhs ⊢ rhs` as a bit mask, one bit per structure.
    fn mask<T: Copy>(&self, x: &[T], y: &[T], le: impl Fn(usize, T, T) -> bool) -> u32 {
        let mut valid = (1u32 << self.algebras.len()) - 1;
        for (v, p) in self.points.iter().enumerate() {
            if valid >> p.owner & 1 == 1 && !le(p.owner, x[v], y[v]) {
                valid &= !(1 << p.owner);
            }
        }
        valid
    }

    /// Visits every sequent between distinct representatives of the same sort,
    /// coalition sort first, until `stop` returns true on a validity mask.
    pub fn scan(&self, mut stop: impl FnMut(u32) -> bool) -> (usize, Option<(Sequent, u32)>) {
        let mut checked = 0;
        for (a, (ta, x)) in self.c.iter().enumerate() {
            for (b, (tb, y)) in self.c.iter().enumerate() {
                if a == b {
                    continue;
                }
                checked += 1;
                let m = self.mask(x, y, |_, p, q| p.is_subset(q));
                if stop(m) {
                    return (checked, Some((Sequent::C(ta.clone(), tb.clone()), m)));
                }
            }
        }
        for (a, (ta, x)) in self.ia.iter().enumerate() {
            for (b, (tb, y)) in self.ia.iter().enumerate() {
                if a == b {
                    continue;
                }
                checked += 1;
                let m = self.mask(x, y, |k, p, q| self.algebras[k].lattice().le(p, q));
                if stop(m) {
                    return (checked, Some((Sequent::IA(ta.clone(), tb.clone()), m)));
                }
            }
        }
        (checked, None)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub sequent: String,
    #[serde(skip)]
    pub term: Sequent,
    pub valid_in_first: bool,
    pub valid_in_second: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub agree: bool,
    pub depth: usize,
    pub atom_cap: usize,
    pub coalition_terms: usize,
    pub agenda_terms: usize,
    pub sequents_checked: usize,
    pub first_disagreement: Option<Disagreement>,
}

/// Whether both complex algebras validate the same sequents among the
/// generated terms.
pub fn bounded_modal_equivalence(
    f1: &RelationalStructure,
    f2: &RelationalStructure,
    depth: usize,
    atom_cap: usize,
) -> Result<EquivalenceReport> {
    let fam = TermFamily::generate(&[f1, f2], depth, atom_cap)?;
    let (checked, hit) = fam.scan(|m| m == 0b01 || m == 0b10);
    Ok(EquivalenceReport {
        agree: hit.is_none(),
        depth,
        atom_cap,
        coalition_terms: fam.coalition_terms(),
        agenda_terms: fam.agenda_terms(),
        sequents_checked: checked,
        first_disagreement: hit.map(|(s, m)| Disagreement {
            sequent: s.to_string(),
            term: s,
            valid_in_first: m & 1 == 1,
            valid_in_second: m & 2 == 2,
        }),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferReport {
    pub holds: bool,
    pub sequents_checked: usize,
    /// A sequent valid in both components but not in their union.
    pub counterexample: Option<String>,
}

/// Checks that every generated sequent valid in both components stays valid
/// in their disjoint union.
pub fn union_transfer(f1: &RelationalStructure, f2: &RelationalStructure, depth: usize, atom_cap: usize) -> Result<TransferReport> {
    let u = disjoint_union(f1, f2);
    let fam = TermFamily::generate(&[f1, f2, &u], depth, atom_cap)?;
    let (checked, hit) = fam.scan(|m| m == 0b011);
    Ok(TransferReport { holds: hit.is_none(), sequents_checked: checked, counterexample: hit.map(|(s, _)| s.to_string()) })
}
