//! Frame pairs witnessing that eight conditions are not definable.

use super::conditions::{check_condition, ConditionId};
use super::equivalence::{bounded_modal_equivalence, union_transfer, EquivalenceReport, TransferReport};
use super::frame::{check_forth_morphism, disjoint_union, FrameMap, RelationalStructure};
use super::{LogicError, Result};
use serde::Serialize;

#[derive(Debug, Clone)]
pub enum GtShape {
    /// A claimed surjective bounded morphism from `source` onto `target`.
    Morphism { source: RelationalStructure, target: RelationalStructure, map: FrameMap },
    /// Two components and their disjoint union.
    Union { components: [RelationalStructure; 2], union: RelationalStructure },
    /// Only the finite target is built; the source is infinite.
    TargetOnly { target: RelationalStructure },
}

#[derive(Debug, Clone)]
pub struct GtFixture {
    pub case: u8,
    pub condition: ConditionId,
    pub shape: GtShape,
    /// Claimed verdict on the source, or on each component.
    pub source_holds: bool,
    /// Claimed verdict on the target, or on the union.
    pub target_holds: bool,
    /// Set when only part of the construction is available.
    pub partial: bool,
}

fn frame(
    c: &[&str],
    d: &[&str],
    i: &[(&str, &str)],
    r: &[(&str, &str)],
    s: &[(&str, &str, &str)],
) -> RelationalStructure {
    let ci = |x: &str| c.iter().position(|y| *y == x).unwrap();
    let di = |x: &str| d.iter().position(|y| *y == x).unwrap();
    RelationalStructure::new(
        c.iter().map(|x| x.to_string()).collect(),
        d.iter().map(|x| x.to_string()).collect(),
        &i.iter().map(|&(a, b)| (ci(a), ci(b))).collect::<Vec<_>>(),
        &r.iter().map(|&(m, j)| (di(m), ci(j))).collect::<Vec<_>>(),
        &s.iter().map(|&(n, j, m)| (di(n), ci(j), di(m))).collect::<Vec<_>>(),
    )
    .expect("fixture frames are well formed")
}

fn morphism(condition: ConditionId, case: u8, source: RelationalStructure, target: RelationalStructure, map: FrameMap) -> GtFixture {
    GtFixture { case, condition, shape: GtShape::Morphism { source, target, map }, source_holds: true, target_holds: false, partial: false }
}

fn union(condition: ConditionId, case: u8, f1: RelationalStructure, f2: RelationalStructure) -> GtFixture {
    let u = disjoint_union(&f1, &f2);
    GtFixture { case, condition, shape: GtShape::Union { components: [f1, f2], union: u }, source_holds: true, target_holds: false, partial: false }
}

/// Collapse of `j1, j2` onto one agent, `mk ↦ nk`.
fn collapse() -> FrameMap {
    FrameMap { agents: vec![0, 0], issues: vec![0, 1, 2] }
}

pub fn gt_fixture(case: u8) -> Result<GtFixture> {
    use ConditionId::*;
    let c1 = ["j1", "j2"];
    let d1 = ["m1", "m2", "m3"];
    let d2 = ["n1", "n2", "n3"];
    Ok(match case {
        1 => morphism(
            Transitive,
            1,
            frame(&c1, &d1, &[], &[], &[("m1", "j1", "m2"), ("m2", "j2", "m3")]),
            frame(&["i"], &d2, &[], &[], &[("n1", "i", "n2"), ("n2", "i", "n3")]),
            collapse(),
        ),
        2 => union(
            Reflexive,
            2,
            frame(&["j1"], &["m1"], &[], &[], &[("m1", "j1", "m1")]),
            frame(&["j2"], &["m2"], &[], &[], &[("m2", "j2", "m2")]),
        ),
        3 => GtFixture {
            case: 3,
            condition: Antisymmetric,
            shape: GtShape::TargetOnly { target: frame(&["i"], &["n0", "n1"], &[], &[], &[("n0", "i", "n1"), ("n1", "i", "n0")]) },
            source_holds: true,
            target_holds: false,
            partial: true,
        },
        4 => morphism(
            SingleStepped,
            4,
            frame(&c1, &d1, &[], &[], &[("m1", "j1", "m2"), ("m3", "j2", "m1")]),
            frame(&["i"], &d2, &[], &[], &[("n1", "i", "n2"), ("n3", "i", "n1")]),
            collapse(),
        ),
        5 => morphism(
            Euclidean,
            5,
            frame(&c1, &d1, &[], &[], &[("m1", "j1", "m3"), ("m2", "j2", "m3")]),
            frame(&["i"], &d2, &[], &[], &[("n1", "i", "n3"), ("n2", "i", "n3")]),
            collapse(),
        ),
        6 => union(
            Unanimous,
            6,
            frame(&["j1"], &["m1", "n1"], &[], &[], &[("m1", "j1", "n1")]),
            frame(&["j2"], &["m2", "n2"], &[], &[], &[("m2", "j2", "n2")]),
        ),
        7 => union(
            Bicoherent,
            7,
            frame(&["j1"], &["m1"], &[], &[("m1", "j1")], &[]),
            frame(&["j2"], &["m2"], &[], &[("m2", "j2")], &[]),
        ),
        8 => morphism(
            ReasonablyDuctile,
            8,
            frame(
                &["j1", "i1"],
                &["m1", "m1'", "n1"],
                &[("j1", "i1")],
                &[("m1", "j1"), ("n1", "j1"), ("m1'", "i1")],
                &[],
            ),
            frame(&["j2", "i2"], &["m2", "n2"], &[("j2", "i2")], &[("m2", "j2"), ("n2", "j2"), ("m2", "i2")], &[]),
            FrameMap { agents: vec![0, 1], issues: vec![0, 0, 1] },
        ),
        _ => return Err(LogicError::UnknownCase(case)),
    })
}

/// What a fixture actually shows when its claims are checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureReport {
    pub case: u8,
    pub condition: ConditionId,
    pub shape: &'static str,
    /// Measured verdict on the source, or on both components; absent when
    /// the source is not built.
    pub source_holds: Option<bool>,
    pub target_holds: bool,
    /// Measured verdicts equal the claimed ones.
    pub claims_match: bool,
    /// Forth conditions and surjectivity of the map, for morphism fixtures.
    pub forth_morphism: Option<bool>,
    pub equivalence: Option<EquivalenceReport>,
    pub transfer: Option<TransferReport>,
    pub partial: bool,
}

impl FixtureReport {
    /// Whether the bounded sequents are preserved by the construction;
    /// `None` for partial fixtures.
    pub fn invariance_holds(&self) -> Option<bool> {
        match (&self.equivalence, &self.transfer) {
            (Some(e), _) => Some(e.agree),
            (_, Some(t)) => Some(t.holds),
            _ => None,
        }
    }
}

/// Checks a fixture's condition verdicts and compares the two sides on all
/// generated sequents up to `depth`.
pub fn check_fixture(fx: &GtFixture, depth: usize, atom_cap: usize) -> Result<FixtureReport> {
    let id = fx.condition;
    let mut report = FixtureReport {
        case: fx.case,
        condition: id,
        shape: "",
        source_holds: None,
        target_holds: false,
        claims_match: false,
        forth_morphism: None,
        equivalence: None,
        transfer: None,
        partial: fx.partial,
    };
    match &fx.shape {
        GtShape::Morphism { source, target, map } => {
            report.shape = "morphism";
            report.source_holds = Some(check_condition(source, id));
            report.target_holds = check_condition(target, id);
            report.forth_morphism = Some(check_forth_morphism(map, source, target)?.passes());
            report.equivalence = Some(bounded_modal_equivalence(source, target, depth, atom_cap)?);
        }
        GtShape::Union { components: [f1, f2], union } => {
            report.shape = "union";
            report.source_holds = Some(check_condition(f1, id) && check_condition(f2, id));
            report.target_holds = check_condition(union, id);
            report.transfer = Some(union_transfer(f1, f2, depth, atom_cap)?);
        }
        GtShape::TargetOnly { target } => {
            report.shape = "target_only";
            report.target_holds = check_condition(target, id);
        }
    }
    report.claims_match =
        report.source_holds.map_or(true, |s| s == fx.source_holds) && report.target_holds == fx.target_holds;
    Ok(report)
}
