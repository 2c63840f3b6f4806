//! Backward induction, subgame perfect equilibria and the elimination
//! variant of backward induction.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Caps, Error, Result};
use crate::outcome::Outcome;
use crate::strategic::{dominator_among, is_trivial, to_strategic, StrategicGame, Support};
use crate::strategy::{
    enumerate_strategies, strategy_count, strategy_from_index, subgame_leaf, JointStrategy, Strategy,
};
use crate::tree::{subgame, without_relevant_ties, ExtensiveGame, NodeId, Player};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpeMode {
    /// `s^w` is a Nash equilibrium of `G^w` for every decision node `w`,
    /// checked against every strategy of every player in every subgame.
    Definition,
    /// At every decision node the mover's choice maximizes its payoff given
    /// the continuation of `s`.
    OneDeviation,
}

/// Whether `s` is a subgame perfect equilibrium.
pub fn is_spe(game: &ExtensiveGame, s: &JointStrategy, mode: SpeMode, caps: &Caps) -> Result<bool> {
    match mode {
        SpeMode::OneDeviation => Ok(one_deviation(game, s)),
        SpeMode::Definition => {
            for w in game.non_leaves() {
                let sub = subgame(game, w)?;
                let restricted = restrict(game, s, &sub.translation, &sub.game);
                if !is_nash_brute_force(&sub.game, &restricted, caps)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

fn one_deviation(game: &ExtensiveGame, s: &JointStrategy) -> bool {
    game.non_leaves().all(|u| {
        let i = game.turn(u).expect("decision node");
        let value = |x: NodeId| game.rank(subgame_leaf(game, s, x), i);
        let chosen = value(s.child_at(game, u));
        game.children(u).all(|x| value(x) <= chosen)
    })
}

// s^w expressed over the node ids of the subgame.
fn restrict(game: &ExtensiveGame, s: &JointStrategy, translation: &[NodeId], sub: &ExtensiveGame) -> JointStrategy {
    JointStrategy(
        (0..game.players())
            .map(|i| Strategy {
                player: i,
                choices: sub
                    .decision_nodes(i)
                    .iter()
                    .map(|&v| s.choice_at(game, translation[v]))
                    .collect(),
            })
            .collect(),
    )
}

fn is_nash_brute_force(game: &ExtensiveGame, s: &JointStrategy, caps: &Caps) -> Result<bool> {
    for i in 0..game.players() {
        let own = game.rank(crate::strategy::leaf(game, s), i);
        for t in enumerate_strategies(game, i, caps)? {
            let deviation = s.with(t);
            if game.rank(crate::strategy::leaf(game, &deviation), i) > own {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TieBreak {
    /// Lowest child index among the maximal ones.
    First,
    /// Explicit move index per node; other nodes use `First`. A scripted
    /// move that is not maximal is a protocol error.
    Scripted(BTreeMap<NodeId, usize>),
    /// Uniform among the maximal children.
    Seeded(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PreleafOrder {
    /// Always process the lowest-id preleaf.
    Lowest,
    /// Process a uniformly chosen preleaf.
    Seeded(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiResult {
    pub strategy: JointStrategy,
    /// Outcome of every node: the leaf outcome at leaves, the outcome of the
    /// chosen child elsewhere.
    pub extended: Vec<Outcome>,
    /// Decision nodes in the order they were processed.
    pub order: Vec<NodeId>,
}

impl BiResult {
    pub fn root_outcome(&self) -> &Outcome {
        &self.extended[0]
    }
}

// Shared loop of both backward-induction algorithms: repeatedly pick a
// decision node all of whose children are settled, choose a maximal child
// and report it to `on_choice`.
fn run_loop(
    game: &ExtensiveGame,
    tie_break: &TieBreak,
    order: PreleafOrder,
    mut on_choice: impl FnMut(NodeId, usize) -> Result<()>,
) -> Result<BiResult> {
    let n = game.len();
    // Representative leaf of every settled node's extended outcome.
    let mut rep: Vec<Option<NodeId>> = vec![None; n];
    let mut pending = vec![0usize; n];
    for v in 0..n {
        if game.is_leaf(v) {
            rep[v] = Some(v);
        } else {
            pending[v] = game.children(v).filter(|&c| !game.is_leaf(c)).count();
        }
    }
    let mut ready: BTreeSet<NodeId> = game.non_leaves().filter(|&v| pending[v] == 0).collect();
    let mut tie_rng = match tie_break {
        TieBreak::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
        _ => None,
    };
    let mut order_rng = match order {
        PreleafOrder::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        PreleafOrder::Lowest => None,
    };
    let mut choices: Vec<Vec<usize>> = (0..game.players())
        .map(|i| vec![0; game.decision_nodes(i).len()])
        .collect();
    let mut processed = Vec::new();
    while !ready.is_empty() {
        let v = match order_rng.as_mut() {
            None => *ready.iter().next().expect("non-empty"),
            Some(rng) => *ready.iter().nth(rng.gen_range(0..ready.len())).expect("in range"),
        };
        ready.remove(&v);
        let i = game.turn(v).expect("decision node");
        let values: Vec<u32> = game
            .children(v)
            .map(|c| game.rank(rep[c].expect("child settled"), i))
            .collect();
        let best = *values.iter().max().expect("decision node has moves");
        let maximal: Vec<usize> = (0..values.len()).filter(|&k| values[k] == best).collect();
        let k = match tie_break {
            TieBreak::First => maximal[0],
            TieBreak::Seeded(_) => maximal[tie_rng.as_mut().expect("seeded").gen_range(0..maximal.len())],
            TieBreak::Scripted(script) => match script.get(&v) {
                None => maximal[0],
                Some(&k) if maximal.contains(&k) => k,
                Some(&k) => {
                    return Err(Error::Protocol {
                        step: processed.len() + 1,
                        message: format!(
                            "move {:?} at node {} is not maximal for player {}",
                            game.moves(v).get(k).map_or("?", |m| m.action.as_str()),
                            game.node_ref(v),
                            i + 1
                        ),
                    })
                }
            },
        };
        choices[i][game.slot(v)] = k;
        rep[v] = rep[game.child(v, k)];
        processed.push(v);
        on_choice(v, k)?;
        if let Some(p) = game.parent(v) {
            pending[p] -= 1;
            if pending[p] == 0 {
                ready.insert(p);
            }
        }
    }
    Ok(BiResult {
        strategy: JointStrategy(
            choices
                .into_iter()
                .enumerate()
                .map(|(player, choices)| Strategy { player, choices })
                .collect(),
        ),
        extended: rep
            .into_iter()
            .map(|z| game.outcome(z.expect("every node settled")).clone())
            .collect(),
        order: processed,
    })
}

/// One execution of the backward induction algorithm.
pub fn bi_run(game: &ExtensiveGame, tie_break: &TieBreak) -> Result<BiResult> {
    bi_run_ordered(game, tie_break, PreleafOrder::Lowest)
}

pub fn bi_run_ordered(game: &ExtensiveGame, tie_break: &TieBreak, order: PreleafOrder) -> Result<BiResult> {
    run_loop(game, tie_break, order, |_, _| Ok(()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpeChoice {
    pub child: usize,
    /// Equilibria of the subtree that pick `child` and end in this entry's
    /// outcome.
    pub count: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpeEntry {
    /// Index into the game's distinct leaf outcomes (`SpeSet::outcomes`).
    pub outcome: usize,
    pub count: BigUint,
    /// Empty at leaves.
    pub choices: Vec<SpeChoice>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpeSet {
    pub outcomes: Vec<Outcome>,
    /// Per node, the equilibrium outcomes of its subtree with their counts.
    pub nodes: Vec<Vec<SpeEntry>>,
    pub count: BigUint,
    /// All equilibria in ascending order, unless `count` exceeds the cap.
    pub explicit: Option<Vec<JointStrategy>>,
}

impl SpeSet {
    pub fn root_outcomes(&self) -> Vec<&Outcome> {
        self.nodes[0].iter().map(|e| &self.outcomes[e.outcome]).collect()
    }

    /// The unique equilibrium, if there is exactly one.
    pub fn unique(&self) -> Option<&JointStrategy> {
        match self.explicit.as_deref() {
            Some([one]) => Some(one),
            _ => None,
        }
    }
}

/// Count and, up to `caps.spe_expansion`, list all subgame perfect
/// equilibria by dynamic programming over subtrees.
///
/// For a node `v` of player `i` choosing child `x` with subtree outcome `o`,
/// the number of equilibria of `T^v` is `N_x(o)` times, for every other
/// child `y`, the number of equilibria of `T^y` whose outcome gives `i` at
/// most `o_i`.
pub fn bi_enumerate(game: &ExtensiveGame, caps: &Caps) -> Result<SpeSet> {
    let outcomes: Vec<Outcome> = game.distinct_outcomes().into_iter().cloned().collect();
    let id_of = |o: &Outcome| outcomes.iter().position(|x| x == o).expect("leaf outcome");
    // Per outcome id, the rank vector.
    let ranks: Vec<Vec<u32>> = outcomes
        .iter()
        .map(|o| {
            let z = *game.leaves().iter().find(|&&z| game.outcome(z) == o).expect("leaf");
            (0..game.players()).map(|i| game.rank(z, i)).collect()
        })
        .collect();

    let mut nodes: Vec<Vec<SpeEntry>> = vec![Vec::new(); game.len()];
    for &v in game.postorder() {
        let Some(i) = game.turn(v) else {
            nodes[v] = vec![SpeEntry {
                outcome: id_of(game.outcome(v)),
                count: BigUint::one(),
                choices: Vec::new(),
            }];
            continue;
        };
        let kids: Vec<NodeId> = game.children(v).collect();
        // at_most[k][r]: equilibria of child k whose value for i is <= r.
        let at_most = |k: usize, r: u32| -> BigUint {
            nodes[kids[k]]
                .iter()
                .filter(|e| ranks[e.outcome][i] <= r)
                .map(|e| e.count.clone())
                .sum()
        };
        let mut by_outcome: BTreeMap<usize, Vec<SpeChoice>> = BTreeMap::new();
        for (k, &x) in kids.iter().enumerate() {
            for e in &nodes[x] {
                let r = ranks[e.outcome][i];
                let mut count = e.count.clone();
                for y in 0..kids.len() {
                    if y != k && !count.is_zero() {
                        count *= at_most(y, r);
                    }
                }
                if !count.is_zero() {
                    by_outcome.entry(e.outcome).or_default().push(SpeChoice { child: k, count });
                }
            }
        }
        nodes[v] = by_outcome
            .into_iter()
            .map(|(outcome, choices)| SpeEntry {
                outcome,
                count: choices.iter().map(|c| c.count.clone()).sum(),
                choices,
            })
            .collect();
    }
    let count: BigUint = nodes[0].iter().map(|e| e.count.clone()).sum();

    let explicit = match usize::try_from(&count) {
        Ok(n) if n <= caps.spe_expansion => {
            let mut out = Vec::with_capacity(n);
            let mut memo = BTreeMap::new();
            for e in &nodes[0] {
                for partial in expand(game, &nodes, &ranks, 0, e.outcome, &mut memo) {
                    out.push(to_joint(game, &partial));
                }
            }
            out.sort();
            Some(out)
        }
        _ => None,
    };

    Ok(SpeSet {
        outcomes,
        nodes,
        count,
        explicit,
    })
}

type Partial = Vec<(NodeId, usize)>;

// Every equilibrium assignment of T^v with root outcome `target`.
fn expand(
    game: &ExtensiveGame,
    nodes: &[Vec<SpeEntry>],
    ranks: &[Vec<u32>],
    v: NodeId,
    target: usize,
    memo: &mut BTreeMap<(NodeId, usize), Vec<Partial>>,
) -> Vec<Partial> {
    if let Some(hit) = memo.get(&(v, target)) {
        return hit.clone();
    }
    let mut out = Vec::new();
    if let Some(i) = game.turn(v) {
        let kids: Vec<NodeId> = game.children(v).collect();
        let entry = nodes[v].iter().find(|e| e.outcome == target).expect("entry");
        let r = ranks[target][i];
        for choice in &entry.choices {
            let mut acc: Vec<Partial> = expand(game, nodes, ranks, kids[choice.child], target, memo)
                .into_iter()
                .map(|mut p| {
                    p.push((v, choice.child));
                    p
                })
                .collect();
            for (y, &child) in kids.iter().enumerate() {
                if y == choice.child {
                    continue;
                }
                let mut options = Vec::new();
                for e in &nodes[child] {
                    if ranks[e.outcome][i] <= r {
                        options.extend(expand(game, nodes, ranks, child, e.outcome, memo));
                    }
                }
                acc = acc
                    .iter()
                    .flat_map(|p| {
                        options.iter().map(move |q| {
                            let mut joined = p.clone();
                            joined.extend_from_slice(q);
                            joined
                        })
                    })
                    .collect();
            }
            out.extend(acc);
        }
    } else {
        out.push(Vec::new());
    }
    memo.insert((v, target), out.clone());
    out
}

fn to_joint(game: &ExtensiveGame, partial: &Partial) -> JointStrategy {
    let mut s = JointStrategy::first(game);
    for &(v, k) in partial {
        let i = game.turn(v).expect("decision node");
        s.0[i].choices[game.slot(v)] = k;
    }
    s
}

/// Whether some opponent strategies lead the play of `s_i` through `node`:
/// every ancestor of `node` where the player moves must select the child on
/// the path to `node`.
pub fn reach_check(game: &ExtensiveGame, s: &Strategy, node: NodeId) -> bool {
    let path = game.path_to(node);
    path.windows(2)
        .filter(|e| game.turn(e[0]) == Some(s.player))
        .all(|e| s.child(game, e[0]) == e[1])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EbiRemoval {
    pub strategy: usize,
    /// Least strategy of the pre-removal game that weakly dominates the
    /// removed one; `None` when certification was not requested.
    pub witness: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EbiStep {
    /// 1-based position in the processing order.
    pub step: usize,
    pub node: NodeId,
    pub player: Player,
    pub chosen: usize,
    pub removed: Vec<EbiRemoval>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EbiResult {
    pub bi: BiResult,
    /// The full strategic form the removals refer to.
    pub strategic: StrategicGame,
    pub steps: Vec<EbiStep>,
    pub survivors: Support,
    pub trivial: bool,
}

/// Backward induction that also removes, at each processed node `v` with
/// chosen child `w`, every strategy of the mover that can reach `v` and does
/// not choose `w`. With `certify`, each removal is checked to be weakly
/// dominated in the game just before the removal.
pub fn ebi_run(game: &ExtensiveGame, certify: bool, caps: &Caps) -> Result<EbiResult> {
    if !without_relevant_ties(game) {
        return Err(Error::Precondition(
            "the elimination variant of backward induction requires a game without relevant ties".into(),
        ));
    }
    let h = to_strategic(game, false, caps)?;
    let mut support = Support::full(&h);
    let mut steps = Vec::new();
    let bi = run_loop(game, &TieBreak::First, PreleafOrder::Lowest, |v, k| {
        let i = game.turn(v).expect("decision node");
        let doomed: Vec<usize> = support.sets[i]
            .iter()
            .copied()
            .filter(|&idx| {
                let s = strategy_from_index(game, i, idx);
                reach_check(game, &s, v) && s.choice(game, v) != k
            })
            .collect();
        let mut removed = Vec::with_capacity(doomed.len());
        for &idx in &doomed {
            let witness = if certify {
                let found = dominator_among(&h, &support, i, idx, &support.sets[i]);
                if found.is_none() {
                    return Err(Error::Internal(format!(
                        "removed strategy {} of player {} is not weakly dominated",
                        h.label(i, idx),
                        i + 1
                    )));
                }
                found
            } else {
                None
            };
            removed.push(EbiRemoval { strategy: idx, witness });
        }
        for &idx in &doomed {
            support.remove(i, idx);
        }
        if support.sets[i].is_empty() {
            return Err(Error::Internal(format!("player {} lost every strategy", i + 1)));
        }
        steps.push(EbiStep {
            step: steps.len() + 1,
            node: v,
            player: i,
            chosen: k,
            removed,
        });
        Ok(())
    })?;
    let trivial = is_trivial(&h, &support);
    Ok(EbiResult {
        bi,
        strategic: h,
        steps,
        survivors: support,
        trivial,
    })
}

/// Brute-force filter of all joint strategies by `is_spe`; a reference for
/// tests and small inputs.
pub fn spe_brute_force(game: &ExtensiveGame, mode: SpeMode, caps: &Caps) -> Result<Vec<JointStrategy>> {
    let mut out = Vec::new();
    for s in crate::strategy::enumerate_joint(game, caps)? {
        if is_spe(game, &s, mode, caps)? {
            out.push(s);
        }
    }
    Ok(out)
}

/// Counts of strategies for every player, for reports.
pub fn strategy_counts(game: &ExtensiveGame) -> Vec<BigUint> {
    (0..game.players()).map(|i| strategy_count(game, i)).collect()
}
