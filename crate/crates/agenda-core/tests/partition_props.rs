use agenda_core::partition::{
    compatibility, enumerate_irreducibles, equiv_from_preorder, preorder_from_equiv, Compatibility, GroundSet,
    IrreducibleKind, Partition, Preorder, Subset,
};
use proptest::prelude::*;

fn partition(n: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0..n, n).prop_map(|raw| Partition::from_labels(&raw))
}

fn subset(n: usize) -> impl Strategy<Value = Subset> {
    proptest::collection::vec(any::<bool>(), n).prop_map(move |b| Subset::from_fn(n, |i| b[i]))
}

fn three(max: usize) -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (1..=max).prop_flat_map(|n| (partition(n), partition(n), partition(n)))
}

fn preorder(max: usize) -> impl Strategy<Value = Preorder> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.2), n * n)
            .prop_map(move |bits| Preorder::closure(n, |a, b| bits[a * n + b]))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn lattice_laws((a, b, c) in three(8)) {
        prop_assert_eq!(a.meet(&b).unwrap(), b.meet(&a).unwrap());
        prop_assert_eq!(a.join(&b).unwrap(), b.join(&a).unwrap());
        prop_assert_eq!(a.meet(&b.meet(&c).unwrap()).unwrap(), a.meet(&b).unwrap().meet(&c).unwrap());
        prop_assert_eq!(a.join(&b.join(&c).unwrap()).unwrap(), a.join(&b).unwrap().join(&c).unwrap());
        prop_assert_eq!(a.meet(&a.join(&b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(a.join(&a.meet(&b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(a.meet(&a).unwrap(), a.clone());
        prop_assert_eq!(a.join(&a).unwrap(), a.clone());
    }

    #[test]
    fn order_agrees_with_operations((a, b, _) in three(8)) {
        let le = a.refines(&b).unwrap();
        prop_assert_eq!(le, a.meet(&b).unwrap() == a);
        prop_assert_eq!(le, a.join(&b).unwrap() == b);
    }

    #[test]
    fn join_is_least_upper_bound((a, b, c) in three(8)) {
        let j = a.join(&b).unwrap();
        prop_assert!(a.refines(&j).unwrap() && b.refines(&j).unwrap());
        if a.refines(&c).unwrap() && b.refines(&c).unwrap() {
            prop_assert!(j.refines(&c).unwrap());
        }
    }

    #[test]
    fn diamond_and_box_are_residuated((e, x, y) in (1usize..=8).prop_flat_map(|n| (partition(n), subset(n), subset(n)))) {
        let lhs = e.diamond_set(&x).unwrap().is_subset(&y);
        let rhs = x.is_subset(&e.box_set(&y).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn set_operators_are_monotone((e1, e2, x) in (1usize..=8).prop_flat_map(|n| (partition(n), partition(n), subset(n)))) {
        let small = e1.meet(&e2).unwrap();
        prop_assert!(small.diamond_set(&x).unwrap().is_subset(&e1.diamond_set(&x).unwrap()));
        prop_assert!(e1.box_set(&x).unwrap().is_subset(&small.box_set(&x).unwrap()));
    }

    #[test]
    fn preorder_round_trips(pre in preorder(16)) {
        let e = equiv_from_preorder(&pre);
        prop_assert_eq!(compatibility(&e, &pre).unwrap(), Compatibility::StronglyCompatible);
        let (back, warning) = preorder_from_equiv(&e, &pre).unwrap();
        prop_assert!(warning.is_none());
        prop_assert_eq!(back, pre);
    }

    #[test]
    fn strongly_compatible_round_trip((pre, raw) in preorder(10).prop_flat_map(|p| {
        let n = p.size();
        (Just(p), proptest::collection::vec(0..n, n))
    })) {
        let e = Partition::from_labels(&raw).join(&equiv_from_preorder(&pre)).unwrap();
        if compatibility(&e, &pre).unwrap() == Compatibility::StronglyCompatible {
            let (q, _) = preorder_from_equiv(&e, &pre).unwrap();
            prop_assert_eq!(equiv_from_preorder(&q), e);
        }
    }
}

/// Join- and meet-irreducibles found from the covering relation alone.
fn irreducibles_by_covers(n: usize) -> (Vec<Partition>, Vec<Partition>) {
    let all = Partition::all(n);
    let lt = |a: usize, b: usize| a != b && all[a].refines(&all[b]).unwrap();
    let covers = |a: usize, b: usize| lt(a, b) && !(0..all.len()).any(|c| lt(a, c) && lt(c, b));
    let mut join_irr = Vec::new();
    let mut meet_irr = Vec::new();
    for x in 0..all.len() {
        if (0..all.len()).filter(|&y| covers(y, x)).count() == 1 {
            join_irr.push(all[x].clone());
        }
        if (0..all.len()).filter(|&y| covers(x, y)).count() == 1 {
            meet_irr.push(all[x].clone());
        }
    }
    (join_irr, meet_irr)
}

#[test]
fn irreducibles_match_covers_and_formulas() {
    for n in 2..=5 {
        let (mut atoms, mut coatoms) = enumerate_irreducibles(GroundSet::new(n).unwrap(), 20).unwrap();
        let (mut j, mut m) = irreducibles_by_covers(n);
        for v in [&mut atoms, &mut coatoms, &mut j, &mut m] {
            v.sort_by_key(|p| p.labels().to_vec());
        }
        assert_eq!(atoms, j, "n = {n}");
        assert_eq!(coatoms, m, "n = {n}");
        if n >= 4 {
            assert!(atoms.iter().all(|p| p.classify() == IrreducibleKind::Atom));
            assert!(coatoms.iter().all(|p| p.classify() == IrreducibleKind::Coatom));
        }
    }
    for n in 2..=10usize {
        let (a, c) = enumerate_irreducibles(GroundSet::new(n).unwrap(), 20).unwrap();
        assert_eq!(a.len(), n * (n - 1) / 2);
        assert_eq!(c.len(), (1 << (n - 1)) - 1);
    }
    let (a, c) = enumerate_irreducibles(GroundSet::new(8).unwrap(), 20).unwrap();
    assert_eq!((c.len(), a.len()), (127, 28));
}

#[test]
fn every_partition_is_generated_by_irreducibles() {
    for n in 2..=4 {
        let (atoms, coatoms) = enumerate_irreducibles(GroundSet::new(n).unwrap(), 20).unwrap();
        for p in Partition::all(n) {
            let below = atoms.iter().filter(|a| a.refines(&p).unwrap()).fold(Partition::bottom(n), |acc, a| acc.join(a).unwrap());
            let above = coatoms.iter().filter(|c| p.refines(c).unwrap()).fold(Partition::top(n), |acc, c| acc.meet(c).unwrap());
            assert_eq!(below, p);
            assert_eq!(above, p);
        }
    }
}

/// Every preorder on at most four points, from its strict part.
fn all_preorders(n: usize) -> Vec<Preorder> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|(a, b)| a != b).collect();
    (0u32..1 << pairs.len())
        .filter_map(|mask| {
            Preorder::from_fn(n, |a, b| a == b || pairs.iter().position(|&p| p == (a, b)).is_some_and(|k| mask >> k & 1 == 1))
        })
        .collect()
}

#[test]
fn preorder_round_trips_exhaustively() {
    let counts = [1, 1, 4, 29, 355];
    for n in 1..=4 {
        let pres = all_preorders(n);
        assert_eq!(pres.len(), counts[n]);
        let parts = Partition::all(n);
        for pre in &pres {
            let (back, _) = preorder_from_equiv(&equiv_from_preorder(pre), pre).unwrap();
            assert_eq!(&back, pre);
            for e in &parts {
                if compatibility(e, pre).unwrap() == Compatibility::StronglyCompatible {
                    let (q, _) = preorder_from_equiv(e, pre).unwrap();
                    assert_eq!(&equiv_from_preorder(&q), e);
                }
            }
        }
    }
}

#[test]
fn non_distributive_triple_in_three_points() {
    // Points a, b, c; e_x is the bipartition isolating x.
    let e = |x: usize| Partition::bipartition(3, |i| i == x);
    let (ea, eb, ec) = (e(0), e(1), e(2));
    assert!(ea.meet(&ec).unwrap().refines(&eb).unwrap());
    assert!(!ea.refines(&eb).unwrap() && !ec.refines(&eb).unwrap());
}
