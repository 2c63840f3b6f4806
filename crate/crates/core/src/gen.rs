//! Seeded random games for property tests and experiments.
//!
//! Shapes grow from a single leaf by expanding random leaves until a
//! randomly drawn size is reached. Moves are labelled `a`, `b`, `c`; the
//! mover at every decision node is drawn uniformly.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::outcome::Outcome;
use crate::tree::{without_relevant_ties, ExtensiveGame, TreeSpec};

const ACTIONS: [&str; 3] = ["a", "b", "c"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Small integer payoffs, any number of players.
    General,
    /// Two players, payoffs summing to zero.
    ZeroSum,
    /// Two players whose preferences over outcomes are exactly opposed.
    StrictlyCompetitive,
    /// Outcomes (1,-1) and (-1,1) only.
    WinOrLose,
    /// Outcomes (1,-1), (0,0) and (-1,1) only.
    ChessLike,
    /// Every player's payoffs are pairwise distinct across leaves.
    Generic,
    /// No mover is indifferent between two leaves below its node.
    WithoutRelevantTies,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::General,
        Family::ZeroSum,
        Family::StrictlyCompetitive,
        Family::WinOrLose,
        Family::ChessLike,
        Family::Generic,
        Family::WithoutRelevantTies,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::General => "general",
            Family::ZeroSum => "zero-sum",
            Family::StrictlyCompetitive => "strictly-competitive",
            Family::WinOrLose => "win-or-lose",
            Family::ChessLike => "chess-like",
            Family::Generic => "generic",
            Family::WithoutRelevantTies => "without-relevant-ties",
        }
    }

    /// Families that only make sense for two players.
    pub fn two_player(self) -> bool {
        matches!(
            self,
            Family::ZeroSum | Family::StrictlyCompetitive | Family::WinOrLose | Family::ChessLike
        )
    }
}

// children[v] lists the children of v; a node without children is a leaf.
fn random_shape<R: Rng>(rng: &mut R, max_nodes: usize) -> Vec<Vec<usize>> {
    let max_nodes = max_nodes.max(1);
    // Mostly large trees; small ones still show up a quarter of the time.
    let target = if rng.gen_bool(0.25) {
        rng.gen_range(1..=max_nodes)
    } else {
        rng.gen_range(max_nodes.div_ceil(2)..=max_nodes)
    };
    let mut children: Vec<Vec<usize>> = vec![Vec::new()];
    let mut frontier = vec![0];
    while children.len() < target {
        let room = target - children.len();
        let k = rng.gen_range(0..frontier.len());
        let v = frontier.swap_remove(k);
        let arity = if rng.gen_bool(0.1) { 1 } else { rng.gen_range(2..=3) }.min(room);
        for _ in 0..arity {
            let c = children.len();
            children.push(Vec::new());
            children[v].push(c);
            frontier.push(c);
        }
    }
    children
}

fn to_spec<R: Rng>(
    rng: &mut R,
    children: &[Vec<usize>],
    v: usize,
    players: usize,
    outcomes: &mut impl Iterator<Item = Outcome>,
) -> TreeSpec {
    if children[v].is_empty() {
        return TreeSpec::leaf_outcome(outcomes.next().expect("one outcome per leaf"));
    }
    let player = rng.gen_range(0..players);
    let moves = children[v]
        .iter()
        .enumerate()
        .map(|(k, &c)| (ACTIONS[k], to_spec(rng, children, c, players, outcomes)))
        .collect();
    TreeSpec::decide(player, moves)
}

fn leaf_outcomes<R: Rng>(rng: &mut R, family: Family, players: usize, leaves: usize) -> Vec<Outcome> {
    match family {
        Family::General | Family::WithoutRelevantTies => (0..leaves)
            .map(|_| Outcome::from_ints(&(0..players).map(|_| rng.gen_range(-2..=3)).collect::<Vec<_>>()))
            .collect(),
        Family::ZeroSum => (0..leaves)
            .map(|_| {
                let a = rng.gen_range(-3..=3);
                Outcome::from_ints(&[a, -a])
            })
            .collect(),
        Family::StrictlyCompetitive => {
            // A chain of outcomes, better for player 1 and worse for
            // player 2 at every step.
            let len = rng.gen_range(1..=4);
            let mut a = rng.gen_range(-3..=0);
            let mut b = rng.gen_range(0..=3);
            let mut chain = Vec::with_capacity(len);
            for _ in 0..len {
                chain.push(Outcome::from_ints(&[a, b]));
                a += rng.gen_range(1..=2);
                b -= rng.gen_range(1..=3);
            }
            (0..leaves).map(|_| chain.choose(rng).expect("non-empty").clone()).collect()
        }
        Family::WinOrLose => (0..leaves)
            .map(|_| Outcome::from_ints(if rng.gen_bool(0.5) { &[1, -1] } else { &[-1, 1] }))
            .collect(),
        Family::ChessLike => (0..leaves)
            .map(|_| Outcome::from_ints(&[[1, -1], [0, 0], [-1, 1]].choose(rng).expect("non-empty")[..]))
            .collect(),
        Family::Generic => {
            let columns: Vec<Vec<i64>> = (0..players)
                .map(|_| {
                    let mut values: Vec<i64> = (0..leaves as i64).collect();
                    values.shuffle(rng);
                    values
                })
                .collect();
            (0..leaves)
                .map(|z| Outcome::from_ints(&columns.iter().map(|c| c[z]).collect::<Vec<_>>()))
                .collect()
        }
    }
}

fn attempt<R: Rng>(rng: &mut R, family: Family, players: usize, max_nodes: usize) -> ExtensiveGame {
    let shape = random_shape(rng, max_nodes);
    let leaves = shape.iter().filter(|c| c.is_empty()).count();
    let outcomes = leaf_outcomes(rng, family, players, leaves);
    let spec = to_spec(rng, &shape, 0, players, &mut outcomes.into_iter());
    spec.build(family.name(), players).expect("generated games are valid")
}

/// A random game of `family` with at most `max_nodes` nodes. Two-player
/// families ignore `players`.
pub fn random_game<R: Rng>(rng: &mut R, family: Family, players: usize, max_nodes: usize) -> ExtensiveGame {
    let players = if family.two_player() { 2 } else { players.max(1) };
    if family != Family::WithoutRelevantTies {
        return attempt(rng, family, players, max_nodes);
    }
    // Rejection sampling keeps some ties between leaves that no mover
    // compares; generic games are the fallback.
    for _ in 0..20 {
        let g = attempt(rng, Family::General, players, max_nodes);
        if without_relevant_ties(&g) {
            return g.with_name(family.name());
        }
    }
    attempt(rng, Family::Generic, players, max_nodes).with_name(family.name())
}
