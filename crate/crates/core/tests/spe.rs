use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treegame::backward::{
    bi_enumerate, bi_run, bi_run_ordered, is_spe, reach_check, spe_brute_force, PreleafOrder, SpeMode, TieBreak,
};
use treegame::gen::{random_game, Family};
use treegame::strategic::{is_nash, to_strategic};
use treegame::strategy::{enumerate_joint, enumerate_strategies, play, strategy_index};
use treegame::tree::{classify, subgame, validate};
use treegame::{Caps, ExtensiveGame, JointStrategy};

fn game(seed: u64, family: Family) -> ExtensiveGame {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let players = rng.gen_range(1..=3);
    random_game(&mut rng, family, players, 14)
}

fn profile(g: &ExtensiveGame, s: &JointStrategy) -> Vec<usize> {
    s.0.iter().map(|t| strategy_index(g, t)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn enumeration_matches_brute_force(seed in any::<u64>()) {
        let g = game(seed, Family::General);
        let caps = Caps::default();
        let set = bi_enumerate(&g, &caps).unwrap();
        let by_definition = spe_brute_force(&g, SpeMode::Definition, &caps).unwrap();
        let by_deviation = spe_brute_force(&g, SpeMode::OneDeviation, &caps).unwrap();
        prop_assert_eq!(&by_definition, &by_deviation);
        prop_assert_eq!(set.explicit.as_ref().unwrap(), &by_definition);
        prop_assert_eq!(set.count, by_definition.len().into());
    }

    #[test]
    fn spe_are_nash_and_exist(seed in any::<u64>()) {
        let g = game(seed, Family::General);
        let caps = Caps::default();
        let h = to_strategic(&g, false, &caps).unwrap();
        let set = bi_enumerate(&g, &caps).unwrap();
        let explicit = set.explicit.unwrap();
        prop_assert!(!explicit.is_empty());
        for s in &explicit {
            prop_assert!(is_nash(&h, &profile(&g, s)));
        }
    }

    #[test]
    fn unique_without_relevant_ties(seed in any::<u64>()) {
        let g = game(seed, Family::WithoutRelevantTies);
        prop_assert_eq!(bi_enumerate(&g, &Caps::default()).unwrap().count, 1u32.into());
    }

    #[test]
    fn runs_land_in_the_set_and_reach_all_of_it(seed in any::<u64>()) {
        let g = game(seed, Family::General);
        let caps = Caps::default();
        let explicit = bi_enumerate(&g, &caps).unwrap().explicit.unwrap();
        for tie in [TieBreak::First, TieBreak::Seeded(seed)] {
            let r = bi_run(&g, &tie).unwrap();
            prop_assert!(explicit.contains(&r.strategy));
            prop_assert_eq!(r.root_outcome(), g.outcome(play(&g, &r.strategy).leaf()));
            for v in g.non_leaves() {
                prop_assert_eq!(&r.extended[v], &r.extended[r.strategy.child_at(&g, v)]);
            }
        }
        for s in &explicit {
            let script: BTreeMap<_, _> = g.non_leaves().map(|v| (v, s.choice_at(&g, v))).collect();
            prop_assert_eq!(&bi_run(&g, &TieBreak::Scripted(script)).unwrap().strategy, s);
        }
    }

    #[test]
    fn preleaf_order_does_not_matter(seed in any::<u64>()) {
        let g = game(seed, Family::General);
        let lowest = bi_run_ordered(&g, &TieBreak::First, PreleafOrder::Lowest).unwrap();
        let shuffled = bi_run_ordered(&g, &TieBreak::First, PreleafOrder::Seeded(seed)).unwrap();
        prop_assert_eq!(lowest.strategy, shuffled.strategy);
        prop_assert_eq!(lowest.extended, shuffled.extended);
    }

    #[test]
    fn reach_check_matches_some_completion(seed in any::<u64>()) {
        let g = game(seed, Family::General);
        let caps = Caps::default();
        let joint = enumerate_joint(&g, &caps).unwrap();
        for i in 0..g.players() {
            for s in enumerate_strategies(&g, i, &caps).unwrap() {
                for &v in g.decision_nodes(i) {
                    let reached = joint
                        .iter()
                        .filter(|t| t.player(i) == &s)
                        .any(|t| play(&g, t).path.contains(&v));
                    prop_assert_eq!(reach_check(&g, &s, v), reached);
                }
            }
        }
    }

    #[test]
    fn subgames_are_valid_and_compose(seed in any::<u64>()) {
        let g = game(seed, Family::General);
        for u in g.non_leaves() {
            let sub = subgame(&g, u).unwrap();
            prop_assert!(validate(&sub.game.to_raw()).is_empty());
            for v in sub.game.non_leaves() {
                let nested = subgame(&sub.game, v).unwrap();
                let direct = subgame(&g, sub.original(v)).unwrap();
                prop_assert_eq!(nested.game.to_raw(), direct.game.to_raw());
                for w in 0..nested.game.len() {
                    prop_assert_eq!(sub.original(nested.original(w)), direct.original(w));
                }
            }
        }
    }

    #[test]
    fn every_leaf_is_played(seed in any::<u64>()) {
        let g = game(seed, Family::General);
        let reached: std::collections::BTreeSet<_> = enumerate_joint(&g, &Caps::default())
            .unwrap()
            .iter()
            .map(|s| play(&g, s).leaf())
            .collect();
        prop_assert_eq!(reached.len(), g.leaves().len());
        prop_assert_eq!(g.leaves().len() + g.non_leaves().count(), g.len());
    }

    #[test]
    fn classification_implications(seed in any::<u64>(), k in 0usize..7) {
        let g = game(seed, Family::ALL[k]);
        let c = classify(&g, &Caps::default());
        prop_assert!(!c.generic || c.without_relevant_ties);
        prop_assert!(!c.win_or_lose || c.chess_like);
        prop_assert!(!c.chess_like || c.zero_sum);
        prop_assert!(!c.zero_sum || c.strictly_competitive);
        prop_assert!(!c.strictly_competitive || c.tdi != Some(false));
    }
}

#[test]
fn modes_agree_on_every_joint_strategy() {
    let caps = Caps::default();
    for seed in 0..200 {
        let g = game(seed, Family::General);
        for s in enumerate_joint(&g, &caps).unwrap() {
            assert_eq!(
                is_spe(&g, &s, SpeMode::Definition, &caps).unwrap(),
                is_spe(&g, &s, SpeMode::OneDeviation, &caps).unwrap(),
                "seed {seed}"
            );
        }
    }
}
