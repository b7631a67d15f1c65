//! Exhaustive and random agreement between each condition and its axiom.

use agenda_core::logic::conditions::{check_condition, ConditionId};
use agenda_core::logic::correspondence::{correspondence_pair, FrameCaps};
use agenda_core::logic::frame::RelationalStructure;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// First structure with at most two agents and two issues on which the pair
/// disagrees, with the report.
fn exhaustive_disagreement(pair: usize) -> Option<String> {
    for (nc, nd) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        for f in RelationalStructure::all(nc, nd).unwrap() {
            let r = correspondence_pair(&f, pair, FrameCaps::default()).unwrap();
            if !r.agree {
                return Some(format!("{:?}\n{:?}", f.to_doc(), r));
            }
        }
    }
    None
}

fn random_disagreement(pair: usize) -> Option<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let f = RelationalStructure::random(3, 3, &mut rng).unwrap();
        let r = correspondence_pair(&f, pair, FrameCaps::default()).unwrap();
        if !r.agree {
            return Some(format!("{:?}\n{:?}", f.to_doc(), r));
        }
    }
    None
}

macro_rules! pair_tests {
    ($($name:ident => $k:expr),* $(,)?) => {$(
        #[test]
        fn $name() {
            if let Some(w) = exhaustive_disagreement($k) {
                panic!("pair {} disagrees on a small structure:\n{w}", $k);
            }
            if let Some(w) = random_disagreement($k) {
                panic!("pair {} disagrees on a random structure:\n{w}", $k);
            }
        }
    )*};
}

pair_tests! {
    symmetric_pair => 1,
    pos_coherent_pair => 2,
    neg_coherent_pair => 3,
    neg_pref_coherent_pair => 4,
    pos_pref_coherent_pair => 5,
    intransigent_pair => 6,
    equanimous_pair => 7,
    globally_indifferent_pair => 8,
    i_pos_coherent_pair => 9,
    i_neg_coherent_pair => 10,
    irs_coherent_pair => 11,
}

#[test]
fn implication_chains_on_random_structures() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let f = RelationalStructure::random(2, 3, &mut rng).unwrap();
        if check_condition(&f, ConditionId::SingleStepped) {
            assert!(check_condition(&f, ConditionId::Transitive), "{:?}", f.to_doc());
        }
        if check_condition(&f, ConditionId::Equanimous) {
            assert!(check_condition(&f, ConditionId::PosCoherent), "{:?}", f.to_doc());
        }
    }
}
