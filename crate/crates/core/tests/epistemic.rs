use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treegame::backward::bi_enumerate;
use treegame::epistemic::{
    ckr_check, common_knowledge, know, know_all, node_event, profile_event, random_system, rationality_all,
    singleton_system, strategy_event, CkrVerdict, Event, KnowledgeSystem,
};
use treegame::gen::{random_game, Family};
use treegame::{Caps, ExtensiveGame, JointStrategy};

fn game(seed: u64) -> ExtensiveGame {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let players = rng.gen_range(1..=3);
    random_game(&mut rng, Family::WithoutRelevantTies, players, 10)
}

fn spe(g: &ExtensiveGame) -> JointStrategy {
    bi_enumerate(g, &Caps::default()).unwrap().unique().unwrap().clone()
}

fn random_event(ks: &KnowledgeSystem, rng: &mut impl Rng) -> Event {
    (0..ks.len()).filter(|_| rng.gen_bool(0.5)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn knowledge_operator_laws(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = game(seed);
        let states = rng.gen_range(1..=6);
        let ks = random_system(&g, states, None, &mut rng).unwrap();
        let e = random_event(&ks, &mut rng);
        let f = random_event(&ks, &mut rng);
        let ck = common_knowledge(&ks, &e);
        prop_assert!(ck.is_subset(&e));
        prop_assert!(ck.is_subset(&know_all(&ks, &e)));
        for i in 0..ks.players() {
            let ke = know(&ks, i, &e);
            prop_assert_eq!(&know(&ks, i, &ck), &ck);
            let ef = e.union(&f);
            prop_assert!(ke.is_subset(&know(&ks, i, &ef)));
            prop_assert_eq!(ke.intersection(&know(&ks, i, &f)), know(&ks, i, &e.intersection(&f)));
            prop_assert_eq!(know(&ks, i, &ks.not(&ke)), ks.not(&ke));
            prop_assert!(ke.is_subset(&e));
        }
    }

    #[test]
    fn players_know_their_own_choices(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = game(seed);
        let ks = random_system(&g, rng.gen_range(1..=6), None, &mut rng).unwrap();
        let target = spe(&g);
        for w in 0..ks.len() {
            for t in &ks.assignment(w).0 {
                let e = strategy_event(&ks, t);
                prop_assert!(e.is_subset(&know(&ks, t.player, &e)));
            }
        }
        let mut all = ks.omega();
        for v in g.non_leaves() {
            let i = g.turn(v).unwrap();
            let iv = node_event(&ks, &g, &target, v);
            prop_assert!(iv.is_subset(&know(&ks, i, &iv)));
            all = all.intersection(&iv);
        }
        prop_assert_eq!(all, profile_event(&ks, &target));
    }

    #[test]
    fn common_knowledge_of_rationality_implies_backward_induction(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = game(seed % 40);
        let target = spe(&g);
        let anchor = rng.gen_bool(0.5).then_some(&target);
        let ks = random_system(&g, rng.gen_range(1..=6), anchor, &mut rng).unwrap();
        let report = ckr_check(&ks, &g, &Caps::default()).unwrap();
        prop_assert_eq!(report.verdict, CkrVerdict::Holds);
        prop_assert!(report.ckr.is_subset(&report.bi));
        prop_assert!(report.ckr.is_subset(&report.rational));
    }
}

#[test]
fn singleton_system_is_rational() {
    for seed in 0..40 {
        let g = game(seed);
        let s = spe(&g);
        let ks = singleton_system(&g, &s).unwrap();
        assert_eq!(rationality_all(&ks, &g, &Caps::default()).unwrap(), ks.omega());
        let report = ckr_check(&ks, &g, &Caps::default()).unwrap();
        assert_eq!(report.ckr, ks.omega());
        assert_eq!(report.bi, ks.omega());
    }
}

// Anchored systems are where the check has teeth: make sure some states end
// up commonly known to be rational.
#[test]
fn random_systems_reach_nonempty_ckr() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut nonempty = 0;
    for seed in 0..200 {
        let g = game(seed % 40);
        let target = spe(&g);
        let ks = random_system(&g, rng.gen_range(1..=6), Some(&target), &mut rng).unwrap();
        if !ckr_check(&ks, &g, &Caps::default()).unwrap().ckr.is_empty() {
            nonempty += 1;
        }
    }
    assert!(nonempty > 20, "{nonempty}");
}
