//! Finite relational structures (C, D, I, R, S) and their complex algebras.

use super::{LogicError, Result};
use crate::coalition::{AgentSet, Influence};
use crate::hetero::{HeteroStructure, Triple};
use crate::lattice::FreeAgendas;
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Dense relational structure. Relations are stored as index tuples:
/// `i` as `(influencer, influenced)`, `r` as `(issue, agent)`, `s` as
/// `(n, j, m)` meaning agent `j` would replace `m` by `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationalStructure {
    c: Vec<String>,
    d: Vec<String>,
    i: Vec<bool>,
    r: Vec<bool>,
    s: Vec<bool>,
}

/// JSON shape of a frame, using names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameDoc {
    #[serde(rename = "C")]
    pub c: Vec<String>,
    #[serde(rename = "D")]
    pub d: Vec<String>,
    #[serde(rename = "I", default)]
    pub i: Vec<[String; 2]>,
    #[serde(rename = "R", default)]
    pub r: Vec<[String; 2]>,
    #[serde(rename = "S", default)]
    pub s: Vec<[String; 3]>,
}

impl RelationalStructure {
    pub fn new(
        c: Vec<String>,
        d: Vec<String>,
        i: &[(usize, usize)],
        r: &[(usize, usize)],
        s: &[(usize, usize, usize)],
    ) -> Result<Self> {
        if c.is_empty() || d.is_empty() {
            return Err(LogicError::EmptyCarrier);
        }
        for (k, x) in c.iter().enumerate() {
            if c[..k].contains(x) {
                return Err(LogicError::DuplicateName(x.clone()));
            }
        }
        for (k, x) in d.iter().enumerate() {
            if d[..k].contains(x) {
                return Err(LogicError::DuplicateName(x.clone()));
            }
        }
        let (nc, nd) = (c.len(), d.len());
        let mut f = RelationalStructure { c, d, i: vec![false; nc * nc], r: vec![false; nd * nc], s: vec![false; nd * nc * nd] };
        let oob = |x: usize, n: usize| if x < n { Ok(x) } else { Err(LogicError::IndexOutOfRange(x)) };
        for &(a, b) in i {
            let k = oob(a, nc)? * nc + oob(b, nc)?;
            f.i[k] = true;
        }
        for &(m, j) in r {
            let k = oob(m, nd)? * nc + oob(j, nc)?;
            f.r[k] = true;
        }
        for &(n, j, m) in s {
            let k = f.s_index(oob(n, nd)?, oob(j, nc)?, oob(m, nd)?);
            f.s[k] = true;
        }
        Ok(f)
    }

    pub fn from_doc(doc: &FrameDoc) -> Result<Self> {
        let ci = |x: &str| doc.c.iter().position(|y| y == x).ok_or_else(|| LogicError::UnknownName(x.to_string()));
        let di = |x: &str| doc.d.iter().position(|y| y == x).ok_or_else(|| LogicError::UnknownName(x.to_string()));
        let i = doc.i.iter().map(|[a, b]| Ok((ci(a)?, ci(b)?))).collect::<Result<Vec<_>>>()?;
        let r = doc.r.iter().map(|[m, j]| Ok((di(m)?, ci(j)?))).collect::<Result<Vec<_>>>()?;
        let s = doc.s.iter().map(|[n, j, m]| Ok((di(n)?, ci(j)?, di(m)?))).collect::<Result<Vec<_>>>()?;
        Self::new(doc.c.clone(), doc.d.clone(), &i, &r, &s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: FrameDoc = serde_json::from_str(text).map_err(|e| LogicError::Json(e.to_string()))?;
        Self::from_doc(&doc)
    }

    pub fn to_doc(&self) -> FrameDoc {
        FrameDoc {
            c: self.c.clone(),
            d: self.d.clone(),
            i: self.i_pairs().into_iter().map(|(a, b)| [self.c[a].clone(), self.c[b].clone()]).collect(),
            r: self.r_pairs().into_iter().map(|(m, j)| [self.d[m].clone(), self.c[j].clone()]).collect(),
            s: self
                .s_triples()
                .into_iter()
                .map(|(n, j, m)| [self.d[n].clone(), self.c[j].clone(), self.d[m].clone()])
                .collect(),
        }
    }

    fn s_index(&self, n: usize, j: usize, m: usize) -> usize {
        (n * self.c.len() + j) * self.d.len() + m
    }

    pub fn agents(&self) -> &[String] {
        &self.c
    }

    pub fn issues(&self) -> &[String] {
        &self.d
    }

    pub fn agent_count(&self) -> usize {
        self.c.len()
    }

    pub fn issue_count(&self) -> usize {
        self.d.len()
    }

    /// `a I b`.
    pub fn infl(&self, a: usize, b: usize) -> bool {
        self.i[a * self.c.len() + b]
    }

    /// `m R j`.
    pub fn rel(&self, m: usize, j: usize) -> bool {
        self.r[m * self.c.len() + j]
    }

    /// `S(n, j, m)`.
    pub fn subst(&self, n: usize, j: usize, m: usize) -> bool {
        self.s[self.s_index(n, j, m)]
    }

    pub fn i_pairs(&self) -> Vec<(usize, usize)> {
        let nc = self.c.len();
        (0..nc).flat_map(|a| (0..nc).map(move |b| (a, b))).filter(|&(a, b)| self.infl(a, b)).collect()
    }

    pub fn r_pairs(&self) -> Vec<(usize, usize)> {
        let (nc, nd) = (self.c.len(), self.d.len());
        (0..nd).flat_map(|m| (0..nc).map(move |j| (m, j))).filter(|&(m, j)| self.rel(m, j)).collect()
    }

    pub fn s_triples(&self) -> Vec<(usize, usize, usize)> {
        let (nc, nd) = (self.c.len(), self.d.len());
        let mut out = Vec::new();
        for n in 0..nd {
            for j in 0..nc {
                for m in 0..nd {
                    if self.subst(n, j, m) {
                        out.push((n, j, m));
                    }
                }
            }
        }
        out
    }

    /// The complex algebra: 𝒫(C) and 𝒫(D) with reversed order.
    pub fn complex_algebra(&self) -> Result<HeteroStructure<FreeAgendas>> {
        let agents = AgentSet::new(self.c.clone())?;
        let lattice = FreeAgendas::new(self.d.clone())?;
        let influence = Influence::new(self.c.len(), &self.i_pairs());
        let triples: Vec<Triple> = self.s_triples().into_iter().map(|(n, j, m)| Triple { to: n, agent: j, from: m }).collect();
        Ok(HeteroStructure::new(agents, lattice, influence, &self.r_pairs(), &triples)?)
    }

    /// All structures on `nc` agents and `nd` issues, in bit order.
    pub fn all(nc: usize, nd: usize) -> Result<impl Iterator<Item = RelationalStructure>> {
        let bits = nc * nc + nd * nc + nd * nc * nd;
        if bits > 24 {
            return Err(LogicError::StructureCap { agents: nc, issues: nd });
        }
        let proto = Self::new(names("j", nc), names("m", nd), &[], &[], &[])?;
        Ok((0..1u64 << bits).map(move |mask| {
            let mut f = proto.clone();
            let mut k = 0;
            for v in f.i.iter_mut().chain(f.r.iter_mut()).chain(f.s.iter_mut()) {
                *v = mask >> k & 1 == 1;
                k += 1;
            }
            f
        }))
    }

    /// A structure with every tuple present independently with probability 1/2.
    pub fn random<G: Rng>(nc: usize, nd: usize, rng: &mut G) -> Result<Self> {
        let mut f = Self::new(names("j", nc), names("m", nd), &[], &[], &[])?;
        for v in f.i.iter_mut().chain(f.r.iter_mut()).chain(f.s.iter_mut()) {
            *v = rng.gen();
        }
        Ok(f)
    }
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("{prefix}{k}")).collect()
}

/// Tagged union of carriers and relations. Names are kept when the carriers
/// are disjoint and prefixed with `1.` / `2.` otherwise.
pub fn disjoint_union(f1: &RelationalStructure, f2: &RelationalStructure) -> RelationalStructure {
    let clash = f1.c.iter().any(|x| f2.c.contains(x)) || f1.d.iter().any(|x| f2.d.contains(x));
    let tag = |k: u8, xs: &[String]| -> Vec<String> {
        xs.iter().map(|x| if clash { format!("{k}.{x}") } else { x.clone() }).collect()
    };
    let c: Vec<String> = tag(1, &f1.c).into_iter().chain(tag(2, &f2.c)).collect();
    let d: Vec<String> = tag(1, &f1.d).into_iter().chain(tag(2, &f2.d)).collect();
    let (oc, od) = (f1.c.len(), f1.d.len());
    let i: Vec<_> = f1.i_pairs().into_iter().chain(f2.i_pairs().into_iter().map(|(a, b)| (a + oc, b + oc))).collect();
    let r: Vec<_> = f1.r_pairs().into_iter().chain(f2.r_pairs().into_iter().map(|(m, j)| (m + od, j + oc))).collect();
    let s: Vec<_> = f1
        .s_triples()
        .into_iter()
        .chain(f2.s_triples().into_iter().map(|(n, j, m)| (n + od, j + oc, m + od)))
        .collect();
    RelationalStructure::new(c, d, &i, &r, &s).expect("union of valid structures is valid")
}

/// A pair of carrier maps `C1 → C2`, `D1 → D2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrameMap {
    pub agents: Vec<usize>,
    pub issues: Vec<usize>,
}

impl FrameMap {
    pub fn identity(f: &RelationalStructure) -> Self {
        FrameMap { agents: (0..f.agent_count()).collect(), issues: (0..f.issue_count()).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MorphismReport {
    pub surjective: bool,
    pub forth_i: bool,
    pub forth_r: bool,
    pub forth_s: bool,
}

impl MorphismReport {
    pub fn passes(&self) -> bool {
        self.surjective && self.forth_i && self.forth_r && self.forth_s
    }
}

/// Surjectivity and the forth conditions, componentwise.
pub fn check_forth_morphism(f: &FrameMap, f1: &RelationalStructure, f2: &RelationalStructure) -> Result<MorphismReport> {
    if f.agents.len() != f1.agent_count() || f.issues.len() != f1.issue_count() {
        return Err(LogicError::MapMismatch);
    }
    if let Some(&x) = f.agents.iter().find(|&&x| x >= f2.agent_count()).or(f.issues.iter().find(|&&x| x >= f2.issue_count())) {
        return Err(LogicError::IndexOutOfRange(x));
    }
    let onto = |map: &[usize], n: usize| (0..n).all(|y| map.contains(&y));
    let (a, m) = (&f.agents, &f.issues);
    Ok(MorphismReport {
        surjective: onto(a, f2.agent_count()) && onto(m, f2.issue_count()),
        forth_i: f1.i_pairs().iter().all(|&(x, y)| f2.infl(a[x], a[y])),
        forth_r: f1.r_pairs().iter().all(|&(x, j)| f2.rel(m[x], a[j])),
        forth_s: f1.s_triples().iter().all(|&(n, j, x)| f2.subst(m[n], a[j], m[x])),
    })
}
