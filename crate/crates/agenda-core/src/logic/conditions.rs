//! First-order conditions on I, R and S, checked by direct quantification.

use super::frame::RelationalStructure;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConditionId {
    Symmetric,
    Antisymmetric,
    Unanimous,
    Reflexive,
    Transitive,
    GloballyIndifferent,
    Euclidean,
    SingleStepped,
    ReasonablyDuctile,
    PosCoherent,
    NegCoherent,
    NegPrefCoherent,
    PosPrefCoherent,
    Equanimous,
    Bicoherent,
    Intransigent,
    #[serde(rename = "I_pos_coherent")]
    IPosCoherent,
    #[serde(rename = "I_neg_coherent")]
    INegCoherent,
    #[serde(rename = "IRS_coherent")]
    IrsCoherent,
}

impl ConditionId {
    pub const ALL: [ConditionId; 19] = [
        ConditionId::Symmetric,
        ConditionId::Antisymmetric,
        ConditionId::Unanimous,
        ConditionId::Reflexive,
        ConditionId::Transitive,
        ConditionId::GloballyIndifferent,
        ConditionId::Euclidean,
        ConditionId::SingleStepped,
        ConditionId::ReasonablyDuctile,
        ConditionId::PosCoherent,
        ConditionId::NegCoherent,
        ConditionId::NegPrefCoherent,
        ConditionId::PosPrefCoherent,
        ConditionId::Equanimous,
        ConditionId::Bicoherent,
        ConditionId::Intransigent,
        ConditionId::IPosCoherent,
        ConditionId::INegCoherent,
        ConditionId::IrsCoherent,
    ];

    pub fn name(self) -> &'static str {
        use ConditionId::*;
        match self {
            Symmetric => "symmetric",
            Antisymmetric => "antisymmetric",
            Unanimous => "unanimous",
            Reflexive => "reflexive",
            Transitive => "transitive",
            GloballyIndifferent => "globally_indifferent",
            Euclidean => "euclidean",
            SingleStepped => "single_stepped",
            ReasonablyDuctile => "reasonably_ductile",
            PosCoherent => "pos_coherent",
            NegCoherent => "neg_coherent",
            NegPrefCoherent => "neg_pref_coherent",
            PosPrefCoherent => "pos_pref_coherent",
            Equanimous => "equanimous",
            Bicoherent => "bicoherent",
            Intransigent => "intransigent",
            IPosCoherent => "I_pos_coherent",
            INegCoherent => "I_neg_coherent",
            IrsCoherent => "IRS_coherent",
        }
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConditionId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        ConditionId::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| format!("unknown condition `{s}`"))
    }
}

/// Evaluates the condition by quantifying over C and D. Issues are compared
/// as singletons of 𝒫(D)^∂, so `m ≤ n` is equality.
pub fn check_condition(f: &RelationalStructure, id: ConditionId) -> bool {
    use ConditionId::*;
    let cs = 0..f.agent_count();
    let ds = || 0..f.issue_count();
    let s = |n, j, m| f.subst(n, j, m);
    let r = |m, j| f.rel(m, j);
    let i = |a, b| f.infl(a, b);
    let all_j = |p: &dyn Fn(usize) -> bool| cs.clone().all(p);
    let all_d = |p: &dyn Fn(usize) -> bool| ds().all(p);
    match id {
        Symmetric => all_j(&|j| all_d(&|m| all_d(&|n| !s(n, j, m) || s(m, j, n)))),
        Antisymmetric => all_j(&|j| all_d(&|m| all_d(&|n| !(s(n, j, m) && s(m, j, n)) || m == n))),
        Unanimous => all_j(&|j| all_j(&|k| all_d(&|m| all_d(&|n| !s(m, j, n) || s(m, k, n))))),
        Reflexive => all_j(&|j| all_d(&|m| s(m, j, m))),
        Transitive => {
            all_j(&|j| all_d(&|m| all_d(&|o| all_d(&|n| !(s(n, j, m) && s(o, j, n)) || s(o, j, m)))))
        }
        GloballyIndifferent => all_j(&|j| all_d(&|m| all_d(&|n| s(m, j, n)))),
        Euclidean => {
            all_j(&|j| all_d(&|m| all_d(&|n| all_d(&|o| !(s(n, j, m) && s(o, j, m)) || s(n, j, o)))))
        }
        SingleStepped => {
            all_j(&|j| all_d(&|m1| all_d(&|m2| all_d(&|n| !(s(n, j, m1) && s(m2, j, n)) || n == m2))))
        }
        ReasonablyDuctile => all_j(&|j| {
            all_j(&|k| all_d(&|m| all_d(&|n| !(i(j, k) && r(m, j) && r(m, k) && r(n, j)) || s(n, k, m))))
        }),
        PosCoherent => all_j(&|j| all_d(&|m| !r(m, j) || s(m, j, m))),
        NegCoherent => all_j(&|j| all_d(&|m| !s(m, j, m) || r(m, j))),
        NegPrefCoherent => all_j(&|j| all_d(&|m| all_d(&|n| !s(n, j, m) || r(n, j)))),
        PosPrefCoherent => all_j(&|j| all_d(&|m| all_d(&|n| !r(n, j) || s(n, j, m)))),
        Equanimous => all_j(&|j| all_d(&|m| all_d(&|n| !(r(m, j) && r(n, j)) || s(n, j, m)))),
        Bicoherent => all_j(&|j| all_d(&|m| all_d(&|n| !(r(m, j) && !r(n, j)) || s(m, j, n)))),
        Intransigent => all_j(&|j| all_d(&|m| all_d(&|n| !(r(m, j) && s(n, j, m)) || m == n))),
        IPosCoherent => all_j(&|j| all_j(&|k| all_d(&|m| all_d(&|n| !(s(m, j, n) && i(j, k)) || s(m, k, n))))),
        INegCoherent => all_j(&|j| all_j(&|k| all_d(&|m| all_d(&|n| !(!s(m, j, n) && i(j, k)) || !s(m, k, n))))),
        IrsCoherent => all_j(&|j| all_j(&|k| all_d(&|m| all_d(&|n| !(r(n, j) && i(j, k)) || s(n, k, m))))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_relation_is_vacuous() {
        let f = RelationalStructure::new(vec!["j".into()], vec!["m".into(), "n".into()], &[], &[], &[]).unwrap();
        for id in [ConditionId::Symmetric, ConditionId::Transitive, ConditionId::Euclidean, ConditionId::SingleStepped] {
            assert!(check_condition(&f, id), "{id}");
        }
        assert!(!check_condition(&f, ConditionId::Reflexive));
        assert!(!check_condition(&f, ConditionId::GloballyIndifferent));
    }

    #[test]
    fn names_round_trip() {
        for id in ConditionId::ALL {
            assert_eq!(id.name().parse::<ConditionId>().unwrap(), id);
            assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{}\"", id.name()));
        }
    }

    #[test]
    fn two_cycle() {
        let f = RelationalStructure::new(vec!["i".into()], vec!["n0".into(), "n1".into()], &[], &[], &[(0, 0, 1), (1, 0, 0)]).unwrap();
        assert!(check_condition(&f, ConditionId::Symmetric));
        assert!(!check_condition(&f, ConditionId::Antisymmetric));
        assert!(!check_condition(&f, ConditionId::Transitive));
    }
}
