use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treegame::dynamics::{
    fip_analysis, guided_deviation, improvement_path, profitable_deviations, weak_potential, FipResult, PathStatus,
    Scheduler,
};
use treegame::gen::{random_game, Family};
use treegame::strategic::{is_nash, to_strategic, Support};
use treegame::strategy::{strategy_from_index, strategy_index};
use treegame::{Caps, ExtensiveGame, JointStrategy, StrategicGame};

fn game(seed: u64) -> ExtensiveGame {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let players = rng.gen_range(1..=3);
    random_game(&mut rng, Family::General, players, 12)
}

fn joint(g: &ExtensiveGame, p: &[usize]) -> JointStrategy {
    JointStrategy(p.iter().enumerate().map(|(i, &k)| strategy_from_index(g, i, k)).collect())
}

fn valid_path(h: &StrategicGame, start: &[usize], path: &treegame::dynamics::ImprovementPath) -> bool {
    let mut at = start.to_vec();
    for step in &path.steps {
        let i = step.deviator;
        let differs: Vec<usize> = (0..h.players()).filter(|&j| step.from[j] != step.to[j]).collect();
        if step.from != at || differs != [i] || h.payoff(&step.to, i) <= h.payoff(&step.from, i) {
            return false;
        }
        at = step.to.clone();
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn guided_runs_reach_equilibria_from_everywhere(seed in any::<u64>()) {
        let g = game(seed);
        let h = to_strategic(&g, false, &Caps::default()).unwrap();
        let bound = 1usize << g.len().min(30);
        for start in Support::full(&h).profiles() {
            let path = improvement_path(&h, Some(&g), &start, &Scheduler::PotentialGuided, bound).unwrap();
            prop_assert_eq!(&path.status, &PathStatus::NashReached);
            prop_assert!(valid_path(&h, &start, &path));
            prop_assert!(is_nash(&h, path.profiles().last().unwrap()));
            for step in &path.steps {
                let before = weak_potential(&g, &joint(&g, &step.from));
                let after = weak_potential(&g, &joint(&g, &step.to));
                prop_assert!(before.bits < after.bits);
            }
        }
    }

    #[test]
    fn guided_deviation_raises_the_potential(seed in any::<u64>()) {
        let g = game(seed);
        let h = to_strategic(&g, false, &Caps::default()).unwrap();
        for p in Support::full(&h).profiles() {
            let s = joint(&g, &p);
            match guided_deviation(&g, &s) {
                Ok(d) => {
                    prop_assert!(d.before.bits < d.after.bits);
                    let to: Vec<usize> = d.to.0.iter().map(|t| strategy_index(&g, t)).collect();
                    prop_assert!(profitable_deviations(&h, &p).iter().any(|x| x.to == to));
                }
                Err(treegame::Error::Precondition(_)) => prop_assert!(is_nash(&h, &p)),
                Err(e) => prop_assert!(false, "{}", e),
            }
        }
    }

    #[test]
    fn schedulers_give_valid_paths(seed in any::<u64>()) {
        let g = game(seed);
        let h = to_strategic(&g, false, &Caps::default()).unwrap();
        let fip = fip_analysis(&h, &Caps::default()).unwrap();
        let start: Vec<usize> = (0..h.players()).map(|i| h.strategy_count(i) - 1).collect();
        for scheduler in [Scheduler::First, Scheduler::BestGain, Scheduler::SeededRandom(seed)] {
            let path = improvement_path(&h, None, &start, &scheduler, 10_000).unwrap();
            prop_assert!(valid_path(&h, &start, &path));
            match &path.status {
                PathStatus::NashReached => {
                    prop_assert!(profitable_deviations(&h, path.profiles().last().unwrap()).is_empty())
                }
                PathStatus::CycleDetected { start: k } => {
                    prop_assert!(fip != FipResult::HasFip);
                    prop_assert_eq!(path.profiles()[*k], path.profiles().last().unwrap().to_owned());
                }
                PathStatus::Truncated => prop_assert!(false, "10000 steps without a repeat"),
            }
        }
    }

    #[test]
    fn fip_witness_is_a_cycle(seed in any::<u64>()) {
        let g = game(seed);
        let h = to_strategic(&g, false, &Caps::default()).unwrap();
        if let FipResult::NotFip { cycle } = fip_analysis(&h, &Caps::default()).unwrap() {
            prop_assert_eq!(cycle.first(), cycle.last());
            prop_assert!(cycle.len() >= 3);
            for w in cycle.windows(2) {
                prop_assert!(profitable_deviations(&h, &w[0]).iter().any(|s| s.to == w[1]));
            }
            prop_assert!(cycle.iter().all(|p| h.cell(p) >= h.cell(&cycle[0])));
        }
    }
}

// With the finite improvement property every scheduler stops at an
// equilibrium from every start.
#[test]
fn fip_games_terminate_under_every_scheduler() {
    let mut checked = 0;
    for seed in 0..300 {
        let g = game(seed);
        let h = to_strategic(&g, false, &Caps::default()).unwrap();
        if fip_analysis(&h, &Caps::default()).unwrap() != FipResult::HasFip {
            continue;
        }
        checked += 1;
        for start in Support::full(&h).profiles() {
            for scheduler in [Scheduler::First, Scheduler::BestGain, Scheduler::SeededRandom(seed)] {
                let path = improvement_path(&h, None, &start, &scheduler, h.cell_count()).unwrap();
                assert_eq!(path.status, PathStatus::NashReached, "seed {seed}");
            }
        }
    }
    assert!(checked > 50);
}
