//! Two-sorted terms, sequents, evaluation and brute-force validity.

use super::{LogicError, Result, Sort};
use crate::coalition::{BoxDirection, Coalition, DiamondDirection};
use crate::hetero::HeteroStructure;
use crate::lattice::{AgendaSort, Elem};
use serde::Serialize;
use std::fmt;

type B<T> = Box<T>;

/// Coalition-sorted terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CTerm {
    Atom(usize),
    Top,
    Bot,
    Not(B<CTerm>),
    And(B<CTerm>, B<CTerm>),
    Or(B<CTerm>, B<CTerm>),
    /// Agents influencing some member.
    DiamDot(B<CTerm>),
    /// Agents influenced by some member.
    DiamDotB(B<CTerm>),
    /// Agents influencing only members.
    BoxDot(B<CTerm>),
    /// Agents influenced only by members.
    BlackSqDot(B<CTerm>),
    BlackSquare(B<ITerm>),
    BlackTriangle(B<ITerm>),
    Star(B<ITerm>, B<ITerm>),
    BrB(B<ITerm>, B<ITerm>),
}

/// Agenda-sorted terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ITerm {
    Atom(usize),
    Tau,
    Bot,
    Meet(B<ITerm>, B<ITerm>),
    Join(B<ITerm>, B<ITerm>),
    Diamond(B<CTerm>),
    Rhd(B<CTerm>),
    Pdra(B<CTerm>, B<ITerm>),
    EqLess(B<CTerm>, B<ITerm>),
    Br(B<CTerm>, B<ITerm>),
    Triangle(B<CTerm>, B<ITerm>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    C(CTerm),
    IA(ITerm),
}

impl Term {
    pub fn sort(&self) -> Sort {
        match self {
            Term::C(_) => Sort::Coalition,
            Term::IA(_) => Sort::Agenda,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Sequent {
    C(CTerm, CTerm),
    IA(ITerm, ITerm),
}

impl Sequent {
    pub fn new(lhs: Term, rhs: Term) -> Result<Self> {
        match (lhs, rhs) {
            (Term::C(a), Term::C(b)) => Ok(Sequent::C(a, b)),
            (Term::IA(a), Term::IA(b)) => Ok(Sequent::IA(a, b)),
            (a, b) => Err(LogicError::SortError { lhs: a.sort(), rhs: b.sort() }),
        }
    }

    /// Number of atom slots used per sort: `(coalition, agenda)`.
    pub fn atom_counts(&self) -> (usize, usize) {
        let mut n = (0, 0);
        match self {
            Sequent::C(a, b) => {
                a.atoms(&mut n);
                b.atoms(&mut n);
            }
            Sequent::IA(a, b) => {
                a.atoms(&mut n);
                b.atoms(&mut n);
            }
        }
        n
    }
}

impl CTerm {
    fn atoms(&self, n: &mut (usize, usize)) {
        use CTerm::*;
        match self {
            Atom(k) => n.0 = n.0.max(k + 1),
            Top | Bot => {}
            Not(a) | DiamDot(a) | DiamDotB(a) | BoxDot(a) | BlackSqDot(a) => a.atoms(n),
            And(a, b) | Or(a, b) => {
                a.atoms(n);
                b.atoms(n);
            }
            BlackSquare(e) | BlackTriangle(e) => e.atoms(n),
            Star(a, b) | BrB(a, b) => {
                a.atoms(n);
                b.atoms(n);
            }
        }
    }
}

impl ITerm {
    fn atoms(&self, n: &mut (usize, usize)) {
        use ITerm::*;
        match self {
            Atom(k) => n.1 = n.1.max(k + 1),
            Tau | Bot => {}
            Meet(a, b) | Join(a, b) => {
                a.atoms(n);
                b.atoms(n);
            }
            Diamond(c) | Rhd(c) => c.atoms(n),
            Pdra(c, e) | EqLess(c, e) | Br(c, e) | Triangle(c, e) => {
                c.atoms(n);
                e.atoms(n);
            }
        }
    }
}

/// Constructors that read like the notation.
pub mod build {
    use super::{CTerm, ITerm};

    pub fn c(k: usize) -> CTerm {
        CTerm::Atom(k)
    }
    pub fn e(k: usize) -> ITerm {
        ITerm::Atom(k)
    }
    pub fn not(a: CTerm) -> CTerm {
        CTerm::Not(Box::new(a))
    }
    pub fn diamdot(a: CTerm) -> CTerm {
        CTerm::DiamDot(Box::new(a))
    }
    pub fn diamdotb(a: CTerm) -> CTerm {
        CTerm::DiamDotB(Box::new(a))
    }
    pub fn boxdot(a: CTerm) -> CTerm {
        CTerm::BoxDot(Box::new(a))
    }
    pub fn blacksqdot(a: CTerm) -> CTerm {
        CTerm::BlackSqDot(Box::new(a))
    }
    pub fn blacksquare(e: ITerm) -> CTerm {
        CTerm::BlackSquare(Box::new(e))
    }
    pub fn blacktriangle(e: ITerm) -> CTerm {
        CTerm::BlackTriangle(Box::new(e))
    }
    pub fn star(a: ITerm, b: ITerm) -> CTerm {
        CTerm::Star(Box::new(a), Box::new(b))
    }
    pub fn br_b(a: ITerm, b: ITerm) -> CTerm {
        CTerm::BrB(Box::new(a), Box::new(b))
    }
    pub fn meet(a: ITerm, b: ITerm) -> ITerm {
        ITerm::Meet(Box::new(a), Box::new(b))
    }
    pub fn join(a: ITerm, b: ITerm) -> ITerm {
        ITerm::Join(Box::new(a), Box::new(b))
    }
    pub fn diamond(c: CTerm) -> ITerm {
        ITerm::Diamond(Box::new(c))
    }
    pub fn rhd(c: CTerm) -> ITerm {
        ITerm::Rhd(Box::new(c))
    }
    pub fn pdra(c: CTerm, e: ITerm) -> ITerm {
        ITerm::Pdra(Box::new(c), Box::new(e))
    }
    pub fn eqless(c: CTerm, e: ITerm) -> ITerm {
        ITerm::EqLess(Box::new(c), Box::new(e))
    }
    pub fn br(c: CTerm, e: ITerm) -> ITerm {
        ITerm::Br(Box::new(c), Box::new(e))
    }
    pub fn triangle(c: CTerm, e: ITerm) -> ITerm {
        ITerm::Triangle(Box::new(c), Box::new(e))
    }
}

impl fmt::Display for CTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CTerm::*;
        match self {
            Atom(k) => write!(f, "c{}", k + 1),
            Top => write!(f, "⊤"),
            Bot => write!(f, "⊥"),
            Not(a) => write!(f, "¬{a}"),
            And(a, b) => write!(f, "({a} ∧ {b})"),
            Or(a, b) => write!(f, "({a} ∨ {b})"),
            DiamDot(a) => write!(f, "diamdot({a})"),
            DiamDotB(a) => write!(f, "diamdotb({a})"),
            BoxDot(a) => write!(f, "boxdot({a})"),
            BlackSqDot(a) => write!(f, "blacksqdot({a})"),
            BlackSquare(e) => write!(f, "■{e}"),
            BlackTriangle(e) => write!(f, "▶{e}"),
            Star(a, b) => write!(f, "({a} ⋆ {b})"),
            BrB(a, b) => write!(f, "brB({a}, {b})"),
        }
    }
}

impl fmt::Display for ITerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ITerm::*;
        match self {
            Atom(k) => write!(f, "e{}", k + 1),
            Tau => write!(f, "τ"),
            Bot => write!(f, "⊥"),
            Meet(a, b) => write!(f, "({a} ⊓ {b})"),
            Join(a, b) => write!(f, "({a} ⊔ {b})"),
            Diamond(c) => write!(f, "⋄{c}"),
            Rhd(c) => write!(f, "▷{c}"),
            Pdra(c, e) => write!(f, "({c} −< {e})"),
            EqLess(c, e) => write!(f, "({c} =< {e})"),
            Br(c, e) => write!(f, "br({c}, {e})"),
            Triangle(c, e) => write!(f, "({c} △ {e})"),
        }
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sequent::C(a, b) => write!(f, "{a} ⊢ {b}"),
            Sequent::IA(a, b) => write!(f, "{a} ⊢ {b}"),
        }
    }
}

/// Assignment of values to atoms, indexed by atom number.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Valuation {
    pub coalitions: Vec<Coalition>,
    pub agendas: Vec<Elem>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Value {
    Coalition(Coalition),
    Agenda(Elem),
}

pub fn eval_c<L: AgendaSort>(h: &HeteroStructure<L>, v: &Valuation, t: &CTerm) -> Result<Coalition> {
    use CTerm::*;
    let n = h.agent_count();
    let i = h.influence();
    Ok(match t {
        Atom(k) => *v.coalitions.get(*k).ok_or(LogicError::UnassignedAtom { sort: Sort::Coalition, index: *k })?,
        Top => h.all_agents(),
        Bot => Coalition::EMPTY,
        Not(a) => eval_c(h, v, a)?.complement(n),
        And(a, b) => eval_c(h, v, a)?.intersect(eval_c(h, v, b)?),
        Or(a, b) => eval_c(h, v, a)?.union(eval_c(h, v, b)?),
        DiamDot(a) => i.diamond(eval_c(h, v, a)?, DiamondDirection::Influencers),
        DiamDotB(a) => i.diamond(eval_c(h, v, a)?, DiamondDirection::Audience),
        BoxDot(a) => i.boxed(eval_c(h, v, a)?, BoxDirection::OnlyInto),
        BlackSqDot(a) => i.boxed(eval_c(h, v, a)?, BoxDirection::OnlyFrom),
        BlackSquare(e) => h.blacksquare(eval_ia(h, v, e)?),
        BlackTriangle(e) => h.blacktriangleright(eval_ia(h, v, e)?),
        Star(a, b) => h.star(eval_ia(h, v, a)?, eval_ia(h, v, b)?),
        BrB(a, b) => h.br_black(eval_ia(h, v, a)?, eval_ia(h, v, b)?),
    })
}

pub fn eval_ia<L: AgendaSort>(h: &HeteroStructure<L>, v: &Valuation, t: &ITerm) -> Result<Elem> {
    use ITerm::*;
    let l = h.lattice();
    Ok(match t {
        Atom(k) => *v.agendas.get(*k).ok_or(LogicError::UnassignedAtom { sort: Sort::Agenda, index: *k })?,
        Tau => l.top(),
        Bot => l.bottom(),
        Meet(a, b) => l.meet(eval_ia(h, v, a)?, eval_ia(h, v, b)?),
        Join(a, b) => l.join(eval_ia(h, v, a)?, eval_ia(h, v, b)?),
        Diamond(c) => h.common_agenda(eval_c(h, v, c)?),
        Rhd(c) => h.distributed_agenda(eval_c(h, v, c)?),
        Pdra(c, e) => h.subst_transform(eval_c(h, v, c)?, eval_ia(h, v, e)?),
        EqLess(c, e) => h.residual_second(eval_c(h, v, c)?, eval_ia(h, v, e)?)?,
        Br(c, e) => h.br_transform(eval_c(h, v, c)?, eval_ia(h, v, e)?),
        Triangle(c, e) => h.vartriangle(eval_c(h, v, c)?, eval_ia(h, v, e)?)?,
    })
}

pub fn eval_term<L: AgendaSort>(h: &HeteroStructure<L>, v: &Valuation, t: &Term) -> Result<Value> {
    match t {
        Term::C(c) => eval_c(h, v, c).map(Value::Coalition),
        Term::IA(e) => eval_ia(h, v, e).map(Value::Agenda),
    }
}

/// Whether the sequent holds under one valuation.
pub fn satisfies<L: AgendaSort>(h: &HeteroStructure<L>, v: &Valuation, seq: &Sequent) -> Result<bool> {
    Ok(match seq {
        Sequent::C(a, b) => eval_c(h, v, a)?.is_subset(eval_c(h, v, b)?),
        Sequent::IA(a, b) => h.lattice().le(eval_ia(h, v, a)?, eval_ia(h, v, b)?),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Validity {
    Valid,
    Counterexample(Valuation),
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

/// Default number of atoms allowed per sort.
pub const DEFAULT_ATOM_CAP: usize = 2;

/// Checks the sequent under every valuation of its atoms.
pub fn check_validity<L: AgendaSort>(h: &HeteroStructure<L>, seq: &Sequent, atom_cap: usize) -> Result<Validity> {
    let (nc, ni) = seq.atom_counts();
    for (sort, n) in [(Sort::Coalition, nc), (Sort::Agenda, ni)] {
        if n > atom_cap {
            return Err(LogicError::AtomCap { sort, atoms: n, cap: atom_cap });
        }
    }
    let coalitions: Vec<Coalition> = (0..1u64 << h.agent_count()).map(Coalition).collect();
    let agendas = if ni > 0 { h.lattice().elements()? } else { Vec::new() };
    let mut v = Valuation { coalitions: vec![Coalition::EMPTY; nc], agendas: vec![Elem::EMPTY; ni] };
    // Odometer over all atom slots, coalition slots first.
    let radix: Vec<usize> = std::iter::repeat(coalitions.len()).take(nc).chain(std::iter::repeat(agendas.len()).take(ni)).collect();
    let mut digits = vec![0usize; radix.len()];
    loop {
        for (slot, &d) in digits.iter().enumerate() {
            if slot < nc {
                v.coalitions[slot] = coalitions[d];
            } else {
                v.agendas[slot - nc] = agendas[d];
            }
        }
        if !satisfies(h, &v, seq)? {
            return Ok(Validity::Counterexample(v));
        }
        let mut k = 0;
        loop {
            if k == digits.len() {
                return Ok(Validity::Valid);
            }
            digits[k] += 1;
            if digits[k] < radix[k] {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
    }
}
