//! Knowledge systems over an extensive game: states carrying joint
//! strategies, per-player information partitions, the knowledge operators
//! and the rationality and backward-induction events.
//!
//! Common knowledge is the limit of `KE ⊇ K(KE) ⊇ K(K(KE)) ⊇ ...`, each term
//! applying the everybody-knows operator to the previous one.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use rand::Rng;

use crate::backward::bi_enumerate;
use crate::error::{Caps, Error, Result};
use crate::strategy::{leaf_from, JointStrategy, Strategy};
use crate::tree::{valid_action, without_relevant_ties, ExtensiveGame, NodeId, Player};

pub type State = usize;

/// A set of states.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Event(BTreeSet<State>);

impl Event {
    pub fn empty() -> Self {
        Event(BTreeSet::new())
    }

    pub fn contains(&self, w: State) -> bool {
        self.0.contains(&w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = State> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &Event) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn intersection(&self, other: &Event) -> Event {
        Event(self.0.intersection(&other.0).copied().collect())
    }

    pub fn union(&self, other: &Event) -> Event {
        Event(self.0.union(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &Event) -> Event {
        Event(self.0.difference(&other.0).copied().collect())
    }
}

impl FromIterator<State> for Event {
    fn from_iter<I: IntoIterator<Item = State>>(iter: I) -> Self {
        Event(iter.into_iter().collect())
    }
}

/// States, their joint strategies and one partition of the states per
/// player. Each player's own strategy is constant on each of the player's
/// blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnowledgeSystem {
    states: Vec<String>,
    assignment: Vec<JointStrategy>,
    /// Blocks sorted by their least state; states sorted within blocks.
    partitions: Vec<Vec<Vec<State>>>,
    block_of: Vec<Vec<usize>>,
}

fn invalid(message: impl Into<String>) -> Error {
    Error::InvalidKnowledgeSystem(message.into())
}

impl KnowledgeSystem {
    pub fn new(
        game: &ExtensiveGame,
        states: Vec<String>,
        assignment: Vec<JointStrategy>,
        partitions: Vec<Vec<Vec<State>>>,
    ) -> Result<Self> {
        let n = states.len();
        if n == 0 {
            return Err(invalid("the state set is empty"));
        }
        let mut names = BTreeSet::new();
        for name in &states {
            if !valid_action(name) {
                return Err(invalid(format!("invalid state name {name:?}")));
            }
            if !names.insert(name) {
                return Err(invalid(format!("duplicate state `{name}`")));
            }
        }
        if assignment.len() != n {
            return Err(invalid(format!(
                "{} states but {} assigned joint strategies",
                n,
                assignment.len()
            )));
        }
        if partitions.len() != game.players() {
            return Err(invalid(format!(
                "{} partitions for {} players",
                partitions.len(),
                game.players()
            )));
        }
        let mut sorted = Vec::with_capacity(partitions.len());
        let mut block_of = Vec::with_capacity(partitions.len());
        for (i, blocks) in partitions.into_iter().enumerate() {
            let mut owner = vec![usize::MAX; n];
            let mut blocks: Vec<Vec<State>> = blocks
                .into_iter()
                .map(|mut b| {
                    b.sort_unstable();
                    b
                })
                .collect();
            blocks.sort();
            for (k, block) in blocks.iter().enumerate() {
                if block.is_empty() {
                    return Err(invalid(format!("player {} has an empty block", i + 1)));
                }
                for &w in block {
                    if w >= n {
                        return Err(invalid(format!("player {}: unknown state {w}", i + 1)));
                    }
                    if owner[w] != usize::MAX {
                        return Err(invalid(format!(
                            "player {}: state `{}` lies in two blocks",
                            i + 1,
                            states[w]
                        )));
                    }
                    owner[w] = k;
                }
            }
            if let Some(w) = owner.iter().position(|&k| k == usize::MAX) {
                return Err(invalid(format!(
                    "player {}: state `{}` lies in no block",
                    i + 1,
                    states[w]
                )));
            }
            sorted.push(blocks);
            block_of.push(owner);
        }
        let ks = KnowledgeSystem {
            states,
            assignment,
            partitions: sorted,
            block_of,
        };
        ks.check_against(game)?;
        Ok(ks)
    }

    /// Assignment shape matches `game` and every player knows its own
    /// strategy.
    pub fn check_against(&self, game: &ExtensiveGame) -> Result<()> {
        if self.partitions.len() != game.players() {
            return Err(invalid("partition count differs from the player count"));
        }
        for (w, s) in self.assignment.iter().enumerate() {
            let ok = s.0.len() == game.players()
                && s.0.iter().enumerate().all(|(i, si)| {
                    let nodes = game.decision_nodes(i);
                    si.player == i
                        && si.choices.len() == nodes.len()
                        && si.choices.iter().zip(nodes).all(|(&k, &v)| k < game.arity(v))
                });
            if !ok {
                return Err(invalid(format!(
                    "state `{}` is not assigned a joint strategy of this game",
                    self.states[w]
                )));
            }
        }
        for (i, blocks) in self.partitions.iter().enumerate() {
            for block in blocks {
                let first = &self.assignment[block[0]].0[i];
                if let Some(&w) = block.iter().find(|&&w| &self.assignment[w].0[i] != first) {
                    return Err(invalid(format!(
                        "player {}'s strategy differs between states `{}` and `{}` of one block",
                        i + 1,
                        self.states[block[0]],
                        self.states[w]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn players(&self) -> usize {
        self.partitions.len()
    }

    pub fn state_names(&self) -> &[String] {
        &self.states
    }

    pub fn state_index(&self, name: &str) -> Option<State> {
        self.states.iter().position(|s| s == name)
    }

    pub fn assignment(&self, w: State) -> &JointStrategy {
        &self.assignment[w]
    }

    pub fn partition(&self, player: Player) -> &[Vec<State>] {
        &self.partitions[player]
    }

    pub fn block_of(&self, player: Player, w: State) -> &[State] {
        &self.partitions[player][self.block_of[player][w]]
    }

    /// Ω.
    pub fn omega(&self) -> Event {
        (0..self.len()).collect()
    }

    /// Complement relative to Ω.
    pub fn not(&self, e: &Event) -> Event {
        self.omega().difference(e)
    }

    /// Events are subsets of Ω.
    pub fn is_event(&self, e: &Event) -> bool {
        e.iter().all(|w| w < self.len())
    }
}

/// `K_i E`: union of player `i`'s blocks contained in `E`.
pub fn know(ks: &KnowledgeSystem, player: Player, e: &Event) -> Event {
    ks.partition(player)
        .iter()
        .filter(|block| block.iter().all(|&w| e.contains(w)))
        .flatten()
        .copied()
        .collect()
}

/// `KE`: every player knows `E`.
pub fn know_all(ks: &KnowledgeSystem, e: &Event) -> Event {
    (0..ks.players()).fold(ks.omega(), |acc, i| acc.intersection(&know(ks, i, e)))
}

/// `CKE`, the fixpoint of the decreasing sequence `KE, K(KE), ...`.
pub fn common_knowledge(ks: &KnowledgeSystem, e: &Event) -> Event {
    let mut current = know_all(ks, e);
    loop {
        let next = know_all(ks, &current);
        if next == current {
            return current;
        }
        current = next;
    }
}

/// `[s_i = t_i]`.
pub fn strategy_event(ks: &KnowledgeSystem, t: &Strategy) -> Event {
    (0..ks.len())
        .filter(|&w| &ks.assignment(w).0[t.player] == t)
        .collect()
}

/// `[s = t]`.
pub fn profile_event(ks: &KnowledgeSystem, t: &JointStrategy) -> Event {
    (0..ks.len()).filter(|&w| ks.assignment(w) == t).collect()
}

/// `[s(v) = t(v)]`: states whose joint strategy moves like `t` at `v`.
pub fn node_event(ks: &KnowledgeSystem, game: &ExtensiveGame, t: &JointStrategy, v: NodeId) -> Event {
    let k = t.choice_at(game, v);
    (0..ks.len())
        .filter(|&w| ks.assignment(w).choice_at(game, v) == k)
        .collect()
}

/// `[o_i(leaf((s_{-i}, t_i)^v)) > o_i(leaf(s^v))]` for the player `i` moving
/// at `v`. Only `t_i`'s moves inside `T^v` matter.
pub fn improvement_event(ks: &KnowledgeSystem, game: &ExtensiveGame, t: &Strategy, v: NodeId) -> Event {
    let i = t.player;
    (0..ks.len())
        .filter(|&w| {
            let s = ks.assignment(w);
            let current = leaf_from(game, v, |u| s.choice_at(game, u));
            let deviated = leaf_from(game, v, |u| {
                if game.turn(u) == Some(i) {
                    t.choice(game, u)
                } else {
                    s.choice_at(game, u)
                }
            });
            game.rank(deviated, i) > game.rank(current, i)
        })
        .collect()
}

/// `R_i`: at none of its nodes does player `i` know that some strategy of
/// its own would do better in the subgame than the assigned one.
///
/// The deviations at `v` are enumerated as the distinct restrictions of
/// player `i`'s strategies to `T^v`; strategies agreeing there give the
/// same improvement event.
pub fn rationality_event(ks: &KnowledgeSystem, game: &ExtensiveGame, player: Player, caps: &Caps) -> Result<Event> {
    let mut r = ks.omega();
    for &v in game.decision_nodes(player) {
        let own: Vec<NodeId> = game
            .subtree(v)
            .iter()
            .copied()
            .filter(|&u| game.turn(u) == Some(player))
            .collect();
        let count = own
            .iter()
            .fold(BigUint::from(1u32), |acc, &u| acc * BigUint::from(game.arity(u)));
        let count = caps.check("subgame strategies", &count)?;
        let mut t = Strategy::first(game, player);
        for mut index in 0..count {
            for &u in own.iter().rev() {
                t.choices[game.slot(u)] = index % game.arity(u);
                index /= game.arity(u);
            }
            r = r.difference(&know(ks, player, &improvement_event(ks, game, &t, v)));
        }
    }
    Ok(r)
}

/// `R`: every player is rational.
pub fn rationality_all(ks: &KnowledgeSystem, game: &ExtensiveGame, caps: &Caps) -> Result<Event> {
    let mut r = ks.omega();
    for i in 0..game.players() {
        r = r.intersection(&rationality_event(ks, game, i, caps)?);
    }
    Ok(r)
}

/// A node where a state's joint strategy departs from the subgame perfect
/// equilibrium.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeDeparture {
    pub node: NodeId,
    pub player: Player,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CkrVerdict {
    Holds,
    /// A state in `CKR` outside `I`, with every node whose event `I^v` it
    /// misses.
    Violation { state: State, departures: Vec<NodeDeparture> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CkrReport {
    pub spe: JointStrategy,
    pub rational: Event,
    pub ckr: Event,
    /// `I = [s = s*]`.
    pub bi: Event,
    pub verdict: CkrVerdict,
}

/// Checks `CKR ⊆ I` where `I` is the event that the unique subgame perfect
/// equilibrium is played.
pub fn ckr_check(ks: &KnowledgeSystem, game: &ExtensiveGame, caps: &Caps) -> Result<CkrReport> {
    if !without_relevant_ties(game) {
        return Err(Error::Precondition(
            "the game has relevant ties, so the backward induction outcome is not unique".into(),
        ));
    }
    ks.check_against(game)?;
    let spe = unique_spe(game, caps)?;
    let rational = rationality_all(ks, game, caps)?;
    let ckr = common_knowledge(ks, &rational);
    let bi = profile_event(ks, &spe);
    let verdict = match ckr.difference(&bi).iter().next() {
        None => CkrVerdict::Holds,
        Some(state) => {
            let s = ks.assignment(state);
            let departures = game
                .non_leaves()
                .filter(|&v| s.choice_at(game, v) != spe.choice_at(game, v))
                .map(|v| NodeDeparture {
                    node: v,
                    player: game.turn(v).expect("decision node"),
                    expected: game.moves(v)[spe.choice_at(game, v)].action.clone(),
                    actual: game.moves(v)[s.choice_at(game, v)].action.clone(),
                })
                .collect();
            CkrVerdict::Violation { state, departures }
        }
    };
    Ok(CkrReport {
        spe,
        rational,
        ckr,
        bi,
        verdict,
    })
}

fn unique_spe(game: &ExtensiveGame, caps: &Caps) -> Result<JointStrategy> {
    let set = bi_enumerate(game, &Caps { spe_expansion: 1, ..*caps })?;
    match set.unique() {
        Some(s) => Ok(s.clone()),
        None => Err(Error::Internal(format!(
            "a game without relevant ties has {} subgame perfect equilibria",
            set.count
        ))),
    }
}

/// One state assigned `s`, every partition trivial.
pub fn singleton_system(game: &ExtensiveGame, s: &JointStrategy) -> Result<KnowledgeSystem> {
    KnowledgeSystem::new(
        game,
        vec!["w".to_string()],
        vec![s.clone()],
        vec![vec![vec![0]]; game.players()],
    )
}

/// Uniformly random set partition of `0..n` as a block list.
pub fn random_partition(n: usize, rng: &mut impl Rng) -> Vec<Vec<State>> {
    assert!(n <= 25, "partition sampling supports at most 25 elements");
    // ways[m][k]: partitions of m further elements given k existing blocks.
    let mut ways = vec![vec![0u128; n + 2]; n + 1];
    ways[0].fill(1);
    for m in 1..=n {
        for k in 0..=n {
            ways[m][k] = k as u128 * ways[m - 1][k] + ways[m - 1][k + 1];
        }
    }
    let mut blocks: Vec<Vec<State>> = Vec::new();
    for w in 0..n {
        let rest = n - w - 1;
        let k = blocks.len();
        let join = k as u128 * ways[rest][k];
        let pick = rng.gen_range(0..join + ways[rest][k + 1]);
        if pick < join {
            blocks[(pick / ways[rest][k]) as usize].push(w);
        } else {
            blocks.push(vec![w]);
        }
    }
    blocks
}

fn random_strategy(game: &ExtensiveGame, player: Player, rng: &mut impl Rng) -> Strategy {
    Strategy {
        player,
        choices: game
            .decision_nodes(player)
            .iter()
            .map(|&v| rng.gen_range(0..game.arity(v)))
            .collect(),
    }
}

/// A random valid system on `states` states: each player's partition is a
/// uniform set partition and each of its blocks gets one strategy of that
/// player. With an `anchor`, a block takes the anchor's strategy with
/// probability one half and a uniform strategy otherwise.
pub fn random_system(
    game: &ExtensiveGame,
    states: usize,
    anchor: Option<&JointStrategy>,
    rng: &mut impl Rng,
) -> Result<KnowledgeSystem> {
    let mut assignment: Vec<Vec<Strategy>> = vec![Vec::with_capacity(game.players()); states];
    let mut partitions = Vec::with_capacity(game.players());
    for i in 0..game.players() {
        let blocks = random_partition(states, rng);
        for block in &blocks {
            let t = match anchor {
                Some(a) if rng.gen_bool(0.5) => a.0[i].clone(),
                _ => random_strategy(game, i, rng),
            };
            for &w in block {
                assignment[w].push(t.clone());
            }
        }
        partitions.push(blocks);
    }
    KnowledgeSystem::new(
        game,
        (0..states).map(|w| format!("w{w}")).collect(),
        assignment.into_iter().map(JointStrategy).collect(),
        partitions,
    )
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, w) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::corpus;
    use crate::strategy::{enumerate_strategies, parse_strategy_label};

    fn one_player_system(partition: Vec<Vec<State>>) -> (ExtensiveGame, KnowledgeSystem) {
        let g = crate::tree::TreeSpec::leaf(&[0]).build("t", 1).unwrap();
        let n = partition.iter().map(Vec::len).sum();
        let ks = KnowledgeSystem::new(
            &g,
            (0..n).map(|w| format!("s{w}")).collect(),
            vec![JointStrategy::first(&g); n],
            vec![partition],
        )
        .unwrap();
        (g, ks)
    }

    fn ev(states: &[State]) -> Event {
        states.iter().copied().collect()
    }

    #[test]
    fn knowledge_examples() {
        let (_, coarse) = one_player_system(vec![vec![0, 1]]);
        assert_eq!(know(&coarse, 0, &ev(&[0])), Event::empty());
        assert_eq!(know(&coarse, 0, &coarse.omega()), coarse.omega());
        let (_, fine) = one_player_system(vec![vec![0], vec![1]]);
        assert_eq!(know(&fine, 0, &ev(&[0])), ev(&[0]));
    }

    #[test]
    fn common_knowledge_examples() {
        let (_, single) = one_player_system(vec![vec![0]]);
        assert_eq!(common_knowledge(&single, &single.omega()), single.omega());

        // Two players with the discrete and the trivial partition.
        let g = crate::tree::TreeSpec::leaf(&[0, 0]).build("t", 2).unwrap();
        let ks = KnowledgeSystem::new(
            &g,
            vec!["a".into(), "b".into()],
            vec![JointStrategy::first(&g); 2],
            vec![vec![vec![0], vec![1]], vec![vec![0, 1]]],
        )
        .unwrap();
        assert_eq!(know_all(&ks, &ev(&[0])), Event::empty());
        assert_eq!(common_knowledge(&ks, &ev(&[0])), Event::empty());
        assert_eq!(common_knowledge(&ks, &ks.omega()), ks.omega());
    }

    #[test]
    fn common_knowledge_needs_several_rounds() {
        // Chain a-b-c-d: player 1 pairs {a,b},{c,d}; player 2 {a},{b,c},{d}.
        let g = crate::tree::TreeSpec::leaf(&[0, 0]).build("t", 2).unwrap();
        let ks = KnowledgeSystem::new(
            &g,
            ["a", "b", "c", "d"].map(String::from).to_vec(),
            vec![JointStrategy::first(&g); 4],
            vec![vec![vec![0, 1], vec![2, 3]], vec![vec![0], vec![1, 2], vec![3]]],
        )
        .unwrap();
        let e = ev(&[0, 1, 2]);
        assert_eq!(know_all(&ks, &e), ev(&[0, 1]));
        assert_eq!(know_all(&ks, &ev(&[0, 1])), ev(&[0]));
        assert_eq!(common_knowledge(&ks, &e), Event::empty());
    }

    #[test]
    fn validation_errors() {
        let g = corpus::matching_pennies();
        let s = JointStrategy::first(&g);
        let t = s.with(parse_strategy_label(&g, 0, "T").unwrap());
        let make = |assign: Vec<JointStrategy>, parts: Vec<Vec<Vec<State>>>| {
            KnowledgeSystem::new(&g, vec!["a".into(), "b".into()], assign, parts)
        };
        // Player 1's strategy differs inside its only block.
        let e = make(vec![s.clone(), t.clone()], vec![vec![vec![0, 1]], vec![vec![0], vec![1]]]);
        assert!(matches!(e, Err(Error::InvalidKnowledgeSystem(_))));
        assert!(make(vec![s.clone(), t.clone()], vec![vec![vec![0], vec![1]], vec![vec![0, 1]]]).is_ok());
        assert!(make(vec![s.clone(), s.clone()], vec![vec![vec![0]], vec![vec![0, 1]]]).is_err());
        assert!(make(vec![s.clone(), s.clone()], vec![vec![vec![0, 1], vec![1]], vec![vec![0, 1]]]).is_err());
        assert!(make(vec![s.clone()], vec![vec![vec![0, 1]], vec![vec![0, 1]]]).is_err());
        assert!(make(vec![s.clone(), s.clone()], vec![vec![vec![0, 1]]]).is_err());
    }

    #[test]
    fn singleton_system_at_the_spe_is_all_rational() {
        for g in [corpus::centipede(), corpus::prisoners_dilemma(), corpus::spe_elimination()] {
            let caps = Caps::default();
            let spe = unique_spe(&g, &caps).unwrap();
            let ks = singleton_system(&g, &spe).unwrap();
            let report = ckr_check(&ks, &g, &caps).unwrap();
            assert_eq!(report.rational, ks.omega());
            assert_eq!(report.ckr, ks.omega());
            assert_eq!(report.bi, ks.omega());
            assert_eq!(report.verdict, CkrVerdict::Holds);
        }
    }

    #[test]
    fn known_improvement_excludes_the_state() {
        // Centipede, player 1 continues at `a` while player 2 stops at `b`:
        // stopping at `a` gives 1 > 0 and player 1's block is a singleton.
        let g = corpus::centipede();
        let caps = Caps::default();
        let s = JointStrategy(vec![
            parse_strategy_label(&g, 0, "CSS").unwrap(),
            parse_strategy_label(&g, 1, "SSS").unwrap(),
        ]);
        let ks = singleton_system(&g, &s).unwrap();
        assert_eq!(rationality_event(&ks, &g, 0, &caps).unwrap(), Event::empty());
        assert_eq!(rationality_event(&ks, &g, 1, &caps).unwrap(), ks.omega());
        assert_eq!(ckr_check(&ks, &g, &caps).unwrap().verdict, CkrVerdict::Holds);
    }

    #[test]
    fn one_strategy_each_is_rational() {
        let g = crate::tree::TreeSpec::decide(0, vec![("a", crate::tree::TreeSpec::leaf(&[1, 2]))])
            .build("t", 2)
            .unwrap();
        let ks = singleton_system(&g, &JointStrategy::first(&g)).unwrap();
        assert_eq!(rationality_all(&ks, &g, &Caps::default()).unwrap(), ks.omega());
    }

    #[test]
    fn relevant_ties_are_rejected() {
        let g = corpus::matching_pennies();
        let ks = singleton_system(&g, &JointStrategy::first(&g)).unwrap();
        assert!(matches!(ckr_check(&ks, &g, &Caps::default()), Err(Error::Precondition(_))));
    }

    // R_i with t_i ranging over every full strategy of the player.
    fn rationality_by_definition(ks: &KnowledgeSystem, g: &ExtensiveGame, i: Player) -> Event {
        let caps = Caps::default();
        let mut r = ks.omega();
        for &v in g.decision_nodes(i) {
            for t in enumerate_strategies(g, i, &caps).unwrap() {
                r = r.intersection(&ks.not(&know(ks, i, &improvement_event(ks, g, &t, v))));
            }
        }
        r
    }

    #[test]
    fn restricted_deviations_match_the_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in [corpus::centipede(), corpus::spe_elimination(), corpus::prisoners_dilemma()] {
            let spe = unique_spe(&g, &Caps::default()).unwrap();
            for _ in 0..40 {
                let n = rng.gen_range(1..=5);
                let ks = random_system(&g, n, Some(&spe), &mut rng).unwrap();
                for i in 0..2 {
                    assert_eq!(
                        rationality_event(&ks, &g, i, &Caps::default()).unwrap(),
                        rationality_by_definition(&ks, &g, i)
                    );
                }
            }
        }
    }

    #[test]
    fn partitions_are_uniform() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut counts: BTreeMap<Vec<Vec<State>>, usize> = BTreeMap::new();
        for _ in 0..15_000 {
            *counts.entry(random_partition(4, &mut rng)).or_default() += 1;
        }
        // Bell(4) = 15 partitions, each expected 1000 times.
        assert_eq!(counts.len(), 15);
        assert!(counts.values().all(|&c| (850..1150).contains(&c)), "{counts:?}");
    }

    #[test]
    fn random_systems_satisfy_ckr_on_figure_six() {
        let g = corpus::spe_elimination();
        let caps = Caps::default();
        let spe = unique_spe(&g, &caps).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..100 {
            let n = rng.gen_range(1..=6);
            let ks = random_system(&g, n, Some(&spe), &mut rng).unwrap();
            assert_eq!(ckr_check(&ks, &g, &caps).unwrap().verdict, CkrVerdict::Holds);
        }
    }
}
