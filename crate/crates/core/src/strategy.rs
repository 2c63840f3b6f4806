//! Pure strategies, reduced strategies and plays.
//!
//! A strategy of player `i` stores one move index per decision node of `i`,
//! aligned with [`ExtensiveGame::decision_nodes`]. Strategies are enumerated
//! in mixed-radix order: the first decision node in preorder is the most
//! significant digit and moves are taken in declaration order.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Caps, Error, Result};
use crate::outcome::Outcome;
use crate::tree::{ExtensiveGame, NodeId, Player};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Strategy {
    pub player: Player,
    /// `choices[k]` is the move index at `decision_nodes(player)[k]`.
    pub choices: Vec<usize>,
}

impl Strategy {
    /// Move index chosen at `v`, which must be a decision node of the player.
    pub fn choice(&self, game: &ExtensiveGame, v: NodeId) -> usize {
        debug_assert_eq!(game.turn(v), Some(self.player));
        self.choices[game.slot(v)]
    }

    pub fn child(&self, game: &ExtensiveGame, v: NodeId) -> NodeId {
        game.child(v, self.choice(game, v))
    }

    /// The strategy with every decision node set to its first move.
    pub fn first(game: &ExtensiveGame, player: Player) -> Self {
        Strategy {
            player,
            choices: vec![0; game.decision_nodes(player).len()],
        }
    }

    /// `(node, action)` pairs in preorder.
    pub fn moves<'g>(&self, game: &'g ExtensiveGame) -> Vec<(NodeId, &'g str)> {
        game.decision_nodes(self.player)
            .iter()
            .zip(&self.choices)
            .map(|(&v, &k)| (v, game.moves(v)[k].action.as_str()))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JointStrategy(pub Vec<Strategy>);

impl JointStrategy {
    pub fn first(game: &ExtensiveGame) -> Self {
        JointStrategy((0..game.players()).map(|i| Strategy::first(game, i)).collect())
    }

    /// Move index chosen at decision node `v` by whoever moves there.
    pub fn choice_at(&self, game: &ExtensiveGame, v: NodeId) -> usize {
        let i = game.turn(v).expect("decision node");
        self.0[i].choices[game.slot(v)]
    }

    pub fn child_at(&self, game: &ExtensiveGame, v: NodeId) -> NodeId {
        game.child(v, self.choice_at(game, v))
    }

    pub fn player(&self, i: Player) -> &Strategy {
        &self.0[i]
    }

    /// The profile with player `i`'s strategy replaced.
    pub fn with(&self, s: Strategy) -> Self {
        let mut out = self.clone();
        let i = s.player;
        out.0[i] = s;
        out
    }

    pub fn indices(&self, game: &ExtensiveGame) -> Vec<usize> {
        self.0.iter().map(|s| strategy_index(game, s)).collect()
    }
}

/// Root-to-leaf path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Play {
    pub path: Vec<NodeId>,
}

impl Play {
    pub fn leaf(&self) -> NodeId {
        *self.path.last().expect("non-empty play")
    }
}

/// Follow `choose` from `start` down to a leaf.
pub fn play_from(game: &ExtensiveGame, start: NodeId, mut choose: impl FnMut(NodeId) -> usize) -> Vec<NodeId> {
    let mut path = vec![start];
    let mut v = start;
    while !game.is_leaf(v) {
        v = game.child(v, choose(v));
        path.push(v);
    }
    path
}

pub fn leaf_from(game: &ExtensiveGame, start: NodeId, mut choose: impl FnMut(NodeId) -> usize) -> NodeId {
    let mut v = start;
    while !game.is_leaf(v) {
        v = game.child(v, choose(v));
    }
    v
}

pub fn play(game: &ExtensiveGame, s: &JointStrategy) -> Play {
    Play {
        path: play_from(game, game.root(), |v| s.choice_at(game, v)),
    }
}

pub fn leaf(game: &ExtensiveGame, s: &JointStrategy) -> NodeId {
    leaf_from(game, game.root(), |v| s.choice_at(game, v))
}

/// Leaf reached by `s` in the subgame rooted at `v`.
pub fn subgame_leaf(game: &ExtensiveGame, s: &JointStrategy, v: NodeId) -> NodeId {
    leaf_from(game, v, |u| s.choice_at(game, u))
}

pub fn outcome<'g>(game: &'g ExtensiveGame, s: &JointStrategy) -> &'g Outcome {
    game.outcome(leaf(game, s))
}

pub fn strategy_count(game: &ExtensiveGame, player: Player) -> BigUint {
    game.decision_nodes(player)
        .iter()
        .map(|&v| BigUint::from(game.arity(v)))
        .product()
}

pub fn joint_strategy_count(game: &ExtensiveGame) -> BigUint {
    (0..game.players()).map(|i| strategy_count(game, i)).product()
}

/// Position of `s` in [`enumerate_strategies`] order. Only meaningful when the
/// strategy count fits in `usize`.
pub fn strategy_index(game: &ExtensiveGame, s: &Strategy) -> usize {
    game.decision_nodes(s.player)
        .iter()
        .zip(&s.choices)
        .fold(0, |acc, (&v, &k)| acc * game.arity(v) + k)
}

pub fn strategy_from_index(game: &ExtensiveGame, player: Player, mut index: usize) -> Strategy {
    let nodes = game.decision_nodes(player);
    let mut choices = vec![0; nodes.len()];
    for (k, &v) in nodes.iter().enumerate().rev() {
        choices[k] = index % game.arity(v);
        index /= game.arity(v);
    }
    Strategy { player, choices }
}

pub fn enumerate_strategies(game: &ExtensiveGame, player: Player, caps: &Caps) -> Result<Vec<Strategy>> {
    let n = caps.check("strategies", &strategy_count(game, player))?;
    Ok((0..n).map(|k| strategy_from_index(game, player, k)).collect())
}

/// All joint strategies, first player most significant.
pub fn enumerate_joint(game: &ExtensiveGame, caps: &Caps) -> Result<Vec<JointStrategy>> {
    let total = caps.check("joint strategies", &joint_strategy_count(game))?;
    let per: Vec<Vec<Strategy>> = (0..game.players())
        .map(|i| enumerate_strategies(game, i, caps))
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(total);
    let mut idx = vec![0usize; per.len()];
    loop {
        out.push(JointStrategy(
            idx.iter().enumerate().map(|(i, &k)| per[i][k].clone()).collect(),
        ));
        let mut p = per.len();
        loop {
            if p == 0 {
                return Ok(out);
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < per[p].len() {
                break;
            }
            idx[p] = 0;
        }
    }
}

fn single_char_actions(game: &ExtensiveGame, nodes: &[NodeId]) -> bool {
    nodes
        .iter()
        .all(|&v| game.moves(v).iter().all(|m| m.action.chars().count() == 1))
}

/// Canonical label: actions in preorder, concatenated when every action of
/// the player is one character and joined by `.` otherwise; `-` for the
/// empty strategy.
pub fn strategy_label(game: &ExtensiveGame, s: &Strategy) -> String {
    let nodes = game.decision_nodes(s.player);
    if nodes.is_empty() {
        return "-".to_string();
    }
    let sep = if single_char_actions(game, nodes) { "" } else { "." };
    s.moves(game)
        .iter()
        .map(|(_, a)| *a)
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn parse_strategy_label(game: &ExtensiveGame, player: Player, label: &str) -> Option<Strategy> {
    let nodes = game.decision_nodes(player);
    if nodes.is_empty() {
        return (label == "-").then(|| Strategy::first(game, player));
    }
    let parts: Vec<String> = if single_char_actions(game, nodes) {
        label.chars().map(String::from).collect()
    } else {
        label.split('.').map(String::from).collect()
    };
    if parts.len() != nodes.len() {
        return None;
    }
    let choices = nodes
        .iter()
        .zip(&parts)
        .map(|(&v, a)| game.action_index(v, a))
        .collect::<Option<Vec<_>>>()?;
    Some(Strategy { player, choices })
}

/// Strategy from explicit `(node, action)` pairs covering every decision node
/// of `player` exactly once.
pub fn strategy_from_moves(game: &ExtensiveGame, player: Player, moves: &[(NodeId, String)]) -> Result<Strategy> {
    let nodes = game.decision_nodes(player);
    let mut choices = vec![usize::MAX; nodes.len()];
    for (v, action) in moves {
        if *v >= game.len() || game.turn(*v) != Some(player) {
            return Err(Error::Domain(format!(
                "node #{v} is not a decision node of player {}",
                player + 1
            )));
        }
        let k = game.action_index(*v, action).ok_or_else(|| {
            Error::Domain(format!("node {} has no action {action:?}", game.node_ref(*v)))
        })?;
        let slot = game.slot(*v);
        if choices[slot] != usize::MAX {
            return Err(Error::Domain(format!("node {} assigned twice", game.node_ref(*v))));
        }
        choices[slot] = k;
    }
    if let Some(k) = choices.iter().position(|&c| c == usize::MAX) {
        return Err(Error::Domain(format!(
            "no move for player {} at node {}",
            player + 1,
            game.node_ref(nodes[k])
        )));
    }
    Ok(Strategy { player, choices })
}

/// A maximal partial strategy: moves only at the player's decision nodes
/// that the player's own earlier moves do not rule out.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedStrategy {
    pub player: Player,
    /// Decision node to move index.
    pub moves: BTreeMap<NodeId, usize>,
}

impl ReducedStrategy {
    /// `r ⊆ s`.
    pub fn is_contained_in(&self, game: &ExtensiveGame, s: &Strategy) -> bool {
        s.player == self.player && self.moves.iter().all(|(&v, &k)| s.choice(game, v) == k)
    }

    fn sort_key(&self, game: &ExtensiveGame) -> Vec<(usize, usize)> {
        let pos = |v: NodeId| game.preorder().iter().position(|&u| u == v).unwrap();
        let mut key: Vec<(usize, usize)> = self.moves.iter().map(|(&v, &k)| (pos(v), k)).collect();
        key.sort_unstable();
        key
    }
}

/// Number of reduced strategies of `player`, computed without enumeration.
pub fn reduced_count(game: &ExtensiveGame, player: Player) -> BigUint {
    let mut count = vec![BigUint::zero(); game.len()];
    for &v in game.postorder() {
        count[v] = match game.turn(v) {
            None => BigUint::one(),
            Some(p) if p == player => game.children(v).map(|c| count[c].clone()).sum(),
            Some(_) => game.children(v).map(|c| count[c].clone()).product(),
        };
    }
    count[game.root()].clone()
}

/// All reduced strategies of `player`, ordered by their `(node, move)`
/// sequences in preorder.
pub fn enumerate_reduced(game: &ExtensiveGame, player: Player, caps: &Caps) -> Result<Vec<ReducedStrategy>> {
    caps.check("reduced strategies", &reduced_count(game, player))?;
    let mut out = Vec::new();
    let mut moves = BTreeMap::new();
    let mut pending = vec![game.root()];
    expand(game, player, &mut pending, &mut moves, &mut out);
    let mut keyed: Vec<_> = out.into_iter().map(|r| (r.sort_key(game), r)).collect();
    keyed.sort();
    Ok(keyed.into_iter().map(|(_, r)| r).collect())
}

// Depth-first over the nodes the player can still reach; at the player's own
// nodes one branch per move, elsewhere every child stays pending.
fn expand(
    game: &ExtensiveGame,
    player: Player,
    pending: &mut Vec<NodeId>,
    moves: &mut BTreeMap<NodeId, usize>,
    out: &mut Vec<ReducedStrategy>,
) {
    let Some(v) = pending.pop() else {
        out.push(ReducedStrategy {
            player,
            moves: moves.clone(),
        });
        return;
    };
    match game.turn(v) {
        None => expand(game, player, pending, moves, out),
        Some(p) if p == player => {
            for k in 0..game.arity(v) {
                moves.insert(v, k);
                pending.push(game.child(v, k));
                expand(game, player, pending, moves, out);
                pending.pop();
            }
            moves.remove(&v);
        }
        Some(_) => {
            let before = pending.len();
            pending.extend(game.children(v).collect::<Vec<_>>().into_iter().rev());
            expand(game, player, pending, moves, out);
            pending.truncate(before);
        }
    }
    pending.push(v);
}

/// The unique reduced strategy contained in `s`.
pub fn reduced_of(game: &ExtensiveGame, s: &Strategy) -> ReducedStrategy {
    let mut moves = BTreeMap::new();
    let mut stack = vec![game.root()];
    while let Some(v) = stack.pop() {
        match game.turn(v) {
            None => {}
            Some(p) if p == s.player => {
                let k = s.choice(game, v);
                moves.insert(v, k);
                stack.push(game.child(v, k));
            }
            Some(_) => stack.extend(game.children(v)),
        }
    }
    ReducedStrategy {
        player: s.player,
        moves,
    }
}

/// Whether some decision node of `player` lies below another one, so that
/// the player's reduced strategies differ from its full strategies.
fn has_nested_nodes(game: &ExtensiveGame, player: Player) -> bool {
    game.decision_nodes(player).iter().any(|&v| {
        let mut u = v;
        while let Some(p) = game.parent(u) {
            if game.turn(p) == Some(player) {
                return true;
            }
            u = p;
        }
        false
    })
}

/// Label of a reduced strategy. A player without nested decision nodes has
/// reduced strategies equal to its full ones and keeps the full label.
/// Otherwise the label is `name action` pairs when all of the player's
/// decision nodes are named (`aCcS`), and the actions alone if not.
pub fn reduced_label(game: &ExtensiveGame, r: &ReducedStrategy) -> String {
    let nodes = game.decision_nodes(r.player);
    if !has_nested_nodes(game, r.player) {
        let choices = nodes.iter().map(|v| r.moves[v]).collect();
        return strategy_label(game, &Strategy { player: r.player, choices });
    }
    if r.moves.is_empty() {
        return "-".to_string();
    }
    let mut ordered: Vec<(usize, NodeId, usize)> = r
        .moves
        .iter()
        .map(|(&v, &k)| (game.preorder().iter().position(|&u| u == v).unwrap(), v, k))
        .collect();
    ordered.sort_unstable();
    let named = nodes.iter().all(|&v| game.node(v).name.is_some());
    let sep = if single_char_actions(game, nodes) { "" } else { "." };
    ordered
        .iter()
        .map(|&(_, v, k)| {
            let action = &game.moves(v)[k].action;
            match (&game.node(v).name, named) {
                (Some(name), true) => format!("{name}{action}"),
                _ => action.clone(),
            }
        })
        .collect::<Vec<_>>()
        .join(sep)
}

/// Verbose label used when short labels collide: `#id:action` pairs.
pub fn reduced_label_verbose(game: &ExtensiveGame, r: &ReducedStrategy) -> String {
    if r.moves.is_empty() {
        return "-".to_string();
    }
    r.moves
        .iter()
        .map(|(&v, &k)| format!("#{v}:{}", game.moves(v)[k].action))
        .collect::<Vec<_>>()
        .join(",")
}

/// `Str(r)`: every joint strategy extending each `r_i`.
pub fn expand_reduced(game: &ExtensiveGame, r: &[ReducedStrategy], caps: &Caps) -> Result<Vec<JointStrategy>> {
    if r.len() != game.players() {
        return Err(Error::Domain(format!(
            "expected {} reduced strategies, got {}",
            game.players(),
            r.len()
        )));
    }
    let mut per_player: Vec<Vec<Strategy>> = Vec::with_capacity(r.len());
    let mut total = BigUint::one();
    for (i, ri) in r.iter().enumerate() {
        if ri.player != i {
            return Err(Error::Domain(format!("entry {} belongs to player {}", i + 1, ri.player + 1)));
        }
        let nodes = game.decision_nodes(i);
        let free: Vec<usize> = (0..nodes.len()).filter(|&k| !ri.moves.contains_key(&nodes[k])).collect();
        let count: BigUint = free.iter().map(|&k| BigUint::from(game.arity(nodes[k]))).product();
        total *= &count;
        let count = caps.check("expanded strategies", &count)?;
        let mut base = vec![0; nodes.len()];
        for (&v, &k) in &ri.moves {
            if game.turn(v) != Some(i) || k >= game.arity(v) {
                return Err(Error::Domain(format!("invalid move at node {}", game.node_ref(v))));
            }
            base[game.slot(v)] = k;
        }
        let mut list = Vec::with_capacity(count);
        for mut idx in 0..count {
            let mut choices = base.clone();
            for &k in free.iter().rev() {
                let a = game.arity(nodes[k]);
                choices[k] = idx % a;
                idx /= a;
            }
            list.push(Strategy { player: i, choices });
        }
        per_player.push(list);
    }
    caps.check("joint strategies", &total)?;
    let mut out = vec![JointStrategy(Vec::new())];
    for list in per_player {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for prefix in &out {
            for s in &list {
                let mut j = prefix.clone();
                j.0.push(s.clone());
                next.push(j);
            }
        }
        out = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use std::collections::BTreeSet;

    fn labels(game: &ExtensiveGame, player: Player) -> Vec<String> {
        enumerate_strategies(game, player, &Caps::default())
            .unwrap()
            .iter()
            .map(|s| strategy_label(game, s))
            .collect()
    }

    fn reduced_labels(game: &ExtensiveGame, player: Player) -> Vec<String> {
        enumerate_reduced(game, player, &Caps::default())
            .unwrap()
            .iter()
            .map(|r| reduced_label(game, r))
            .collect()
    }

    // Own moves on the path from the root to w, as (node, move index).
    fn own_moves_to(game: &ExtensiveGame, player: Player, w: NodeId) -> Vec<(NodeId, usize)> {
        let path = game.path_to(w);
        path.windows(2)
            .filter(|e| game.turn(e[0]) == Some(player))
            .map(|e| (e[0], game.child_index(e[0], e[1]).unwrap()))
            .collect()
    }

    // Brute-force oracle: for every strategy, search all subsets for those
    // closed under "(u, w) in r implies [w]_i in r" and keep the maximal one,
    // asserting it is unique.
    fn brute_force_reduced(game: &ExtensiveGame, player: Player) -> BTreeSet<ReducedStrategy> {
        let nodes = game.decision_nodes(player).to_vec();
        let mut found = BTreeSet::new();
        for s in enumerate_strategies(game, player, &Caps::default()).unwrap() {
            let pairs: Vec<(NodeId, usize)> = nodes.iter().map(|&v| (v, s.choice(game, v))).collect();
            let mut closed_sets: Vec<BTreeSet<(NodeId, usize)>> = Vec::new();
            for mask in 0u32..(1 << pairs.len()) {
                let subset: BTreeSet<(NodeId, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask & (1 << b) != 0)
                    .map(|(_, &p)| p)
                    .collect();
                let closed = subset.iter().all(|&(u, k)| {
                    own_moves_to(game, player, game.child(u, k))
                        .iter()
                        .all(|m| subset.contains(m))
                });
                if closed {
                    closed_sets.push(subset);
                }
            }
            let maximal: Vec<&BTreeSet<(NodeId, usize)>> = closed_sets
                .iter()
                .filter(|a| !closed_sets.iter().any(|b| b.len() > a.len() && a.is_subset(b)))
                .collect();
            assert_eq!(maximal.len(), 1);
            found.insert(ReducedStrategy {
                player,
                moves: maximal[0].iter().copied().collect(),
            });
        }
        found
    }

    #[test]
    fn matching_pennies_player_two_strategies() {
        let g = corpus::matching_pennies();
        assert_eq!(labels(&g, 1), ["HH", "HT", "TH", "TT"]);
        assert_eq!(labels(&g, 0), ["H", "T"]);
    }

    #[test]
    fn player_without_nodes_has_the_empty_strategy() {
        let g = crate::TreeSpec::leaf(&[0, 0]).build("t", 2).unwrap();
        let s = enumerate_strategies(&g, 1, &Caps::default()).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s[0].choices.is_empty());
        assert_eq!(strategy_label(&g, &s[0]), "-");
    }

    #[test]
    fn centipede_has_eight_strategies_each() {
        let g = corpus::centipede();
        assert_eq!(labels(&g, 0).len(), 8);
        assert_eq!(labels(&g, 1).len(), 8);
    }

    #[test]
    fn capacity_is_enforced() {
        let g = corpus::ultimatum(100);
        let err = enumerate_strategies(&g, 1, &Caps::default()).unwrap_err();
        match err {
            Error::Capacity { count, .. } => assert_eq!(count, BigUint::from(2u8).pow(101)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn plays_and_outcomes() {
        let g = corpus::matching_pennies();
        let s = JointStrategy(vec![
            parse_strategy_label(&g, 0, "H").unwrap(),
            parse_strategy_label(&g, 1, "TH").unwrap(),
        ]);
        let p = play(&g, &s);
        assert_eq!(p.path.len(), 3);
        assert_eq!(g.node(p.path[1]).name.as_deref(), Some("v"));
        assert_eq!(outcome(&g, &s), &Outcome::from_ints(&[-1, 1]));

        let single = crate::TreeSpec::leaf(&[4]).build("one", 1).unwrap();
        let s = JointStrategy::first(&single);
        assert_eq!(play(&single, &s).path, vec![0]);

        let c = corpus::centipede();
        let all_c = JointStrategy(vec![
            parse_strategy_label(&c, 0, "CCC").unwrap(),
            parse_strategy_label(&c, 1, "CCC").unwrap(),
        ]);
        assert_eq!(outcome(&c, &all_c), &Outcome::from_ints(&[6, 5]));
    }

    #[test]
    fn labels_round_trip_and_index_matches_order() {
        for g in [corpus::centipede(), corpus::ultimatum(3), corpus::spe_elimination()] {
            for i in 0..g.players() {
                for (k, s) in enumerate_strategies(&g, i, &Caps::default()).unwrap().iter().enumerate() {
                    assert_eq!(strategy_index(&g, s), k);
                    let label = strategy_label(&g, s);
                    assert_eq!(parse_strategy_label(&g, i, &label).as_ref(), Some(s));
                }
            }
        }
        let u = corpus::ultimatum(3);
        assert_eq!(labels(&u, 0), ["0", "1", "2", "3"]);
        assert_eq!(labels(&u, 1)[1], "AAAR");
    }

    #[test]
    fn centipede_reduced_strategies() {
        let g = corpus::centipede();
        assert_eq!(reduced_labels(&g, 0), ["aS", "aCcS", "aCcCeS", "aCcCeC"]);
        assert_eq!(reduced_labels(&g, 1), ["bS", "bCdS", "bCdCfS", "bCdCfC"]);
        assert_eq!(reduced_count(&g, 0), BigUint::from(4u8));
    }

    #[test]
    fn reduced_matches_brute_force_on_corpus() {
        for g in [
            corpus::centipede(),
            corpus::matching_pennies(),
            corpus::spe_elimination(),
            corpus::unsolvable(),
            corpus::ultimatum(2),
        ] {
            for i in 0..g.players() {
                let constructive: BTreeSet<_> = enumerate_reduced(&g, i, &Caps::default())
                    .unwrap()
                    .into_iter()
                    .collect();
                assert_eq!(constructive, brute_force_reduced(&g, i), "game {}", g.name());
            }
        }
    }

    #[test]
    fn reduced_on_matching_pennies_and_figure_six() {
        let mp = corpus::matching_pennies();
        assert_eq!(reduced_labels(&mp, 1), ["HH", "HT", "TH", "TT"]);
        let f6 = corpus::spe_elimination();
        assert_eq!(reduced_labels(&f6, 0), ["AE", "AF", "B"]);
    }

    #[test]
    fn expansion_of_reduced_strategies() {
        let g = corpus::centipede();
        let r0 = &enumerate_reduced(&g, 0, &Caps::default()).unwrap()[0];
        let r1 = &enumerate_reduced(&g, 1, &Caps::default()).unwrap()[0];
        let set = expand_reduced(&g, &[r0.clone(), r1.clone()], &Caps::default()).unwrap();
        assert_eq!(set.len(), 16);
        assert!(set.iter().all(|s| r0.is_contained_in(&g, &s.0[0]) && r1.is_contained_in(&g, &s.0[1])));

        let full = JointStrategy(vec![
            parse_strategy_label(&g, 0, "CSC").unwrap(),
            parse_strategy_label(&g, 1, "SSS").unwrap(),
        ]);
        let fixed: Vec<ReducedStrategy> = full
            .0
            .iter()
            .map(|s| ReducedStrategy {
                player: s.player,
                moves: g.decision_nodes(s.player).iter().map(|&v| (v, s.choice(&g, v))).collect(),
            })
            .collect();
        assert_eq!(expand_reduced(&g, &fixed, &Caps::default()).unwrap(), vec![full]);
    }

    #[test]
    fn reduced_of_is_contained_and_reduced() {
        let g = corpus::centipede();
        let all = enumerate_reduced(&g, 0, &Caps::default()).unwrap();
        for s in enumerate_strategies(&g, 0, &Caps::default()).unwrap() {
            let r = reduced_of(&g, &s);
            assert!(r.is_contained_in(&g, &s));
            assert!(all.contains(&r));
        }
    }

    #[test]
    fn every_leaf_is_reached() {
        for g in [corpus::centipede(), corpus::matching_pennies(), corpus::ultimatum(3)] {
            let reached: BTreeSet<NodeId> = enumerate_joint(&g, &Caps::default())
                .unwrap()
                .iter()
                .map(|s| leaf(&g, s))
                .collect();
            assert_eq!(reached, g.leaves().iter().copied().collect());
        }
    }
}
