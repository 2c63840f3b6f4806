//! Improvement paths, the finite improvement property and the weak
//! potential of extensive games.
//!
//! For a joint strategy `s` the potential is one bit per node, nodes listed
//! children first (postorder): the bit of `v` is set when the strategy of
//! the player moving at `v`, restricted to the subgame at `v`, is a best
//! response there. Leaves always get a set bit. Some profitable deviation
//! from any non-equilibrium profile raises the potential lexicographically,
//! and [`guided_deviation`] finds one.

use std::collections::{BTreeMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Caps, Error, Result};
use crate::outcome::Rational;
use crate::strategic::{Profile, StrategicGame, Support};
use crate::strategy::{play, strategy_from_index, strategy_index, JointStrategy, Strategy};
use crate::tree::{ExtensiveGame, NodeId, Player};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImprovementStep {
    pub from: Profile,
    pub to: Profile,
    pub deviator: Player,
    pub gain: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scheduler {
    /// First profitable deviation by player, then strategy index.
    First,
    /// Largest payoff gain; ties go to the lowest player and index.
    BestGain,
    /// Uniform among all profitable deviations.
    SeededRandom(u64),
    /// The deviation of [`guided_deviation`]; extensive games only.
    PotentialGuided,
    /// Explicit `(player, new strategy index)` moves, each of which must be
    /// profitable. The path ends with the script.
    Scripted(Vec<(Player, usize)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathStatus {
    NashReached,
    /// The last step returned to the profile at this position of the path.
    CycleDetected { start: usize },
    Truncated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImprovementPath {
    pub start: Profile,
    pub steps: Vec<ImprovementStep>,
    pub status: PathStatus,
}

impl ImprovementPath {
    /// Every profile visited, starting with `start`.
    pub fn profiles(&self) -> Vec<&Profile> {
        std::iter::once(&self.start).chain(self.steps.iter().map(|s| &s.to)).collect()
    }
}

/// Every profitable deviation from `profile`, by player then strategy.
pub fn profitable_deviations(h: &StrategicGame, profile: &[usize]) -> Vec<ImprovementStep> {
    let mut out = Vec::new();
    for i in 0..h.players() {
        let current = h.payoff(profile, i);
        for k in 0..h.strategy_count(i) {
            let mut to = profile.to_vec();
            to[i] = k;
            let p = h.payoff(&to, i);
            if p > current {
                out.push(ImprovementStep {
                    from: profile.to_vec(),
                    to,
                    deviator: i,
                    gain: p - current,
                });
            }
        }
    }
    out
}

/// Follows profitable deviations chosen by `scheduler` from `start` for at
/// most `max_steps` steps. With `PotentialGuided`, `extensive` must be the
/// game whose full strategic form is `h`.
pub fn improvement_path(
    h: &StrategicGame,
    extensive: Option<&ExtensiveGame>,
    start: &[usize],
    scheduler: &Scheduler,
    max_steps: usize,
) -> Result<ImprovementPath> {
    if start.len() != h.players() || start.iter().enumerate().any(|(i, &k)| k >= h.strategy_count(i)) {
        return Err(Error::Domain("start profile does not fit the game".into()));
    }
    if *scheduler == Scheduler::PotentialGuided && extensive.is_none() {
        return Err(Error::Precondition(
            "the potential-guided scheduler needs an extensive game".into(),
        ));
    }
    let mut rng = match scheduler {
        Scheduler::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
        _ => None,
    };
    let mut seen: BTreeMap<Profile, usize> = BTreeMap::new();
    let mut current = start.to_vec();
    seen.insert(current.clone(), 0);
    let mut steps = Vec::new();
    let status = loop {
        let options = profitable_deviations(h, &current);
        if options.is_empty() {
            break PathStatus::NashReached;
        }
        if steps.len() == max_steps {
            break PathStatus::Truncated;
        }
        let step = match scheduler {
            Scheduler::First => options.into_iter().next().expect("non-empty"),
            Scheduler::BestGain => {
                let best = options.iter().map(|s| &s.gain).max().expect("non-empty").clone();
                options.into_iter().find(|s| s.gain == best).expect("attained")
            }
            Scheduler::SeededRandom(_) => {
                let k = rng.as_mut().expect("seeded").gen_range(0..options.len());
                options.into_iter().nth(k).expect("in range")
            }
            Scheduler::PotentialGuided => {
                let game = extensive.expect("checked above");
                let s = joint_of(game, &current);
                let guided = guided_deviation(game, &s)?;
                let to: Profile = guided.to.0.iter().map(|t| strategy_index(game, t)).collect();
                options
                    .into_iter()
                    .find(|o| o.to == to)
                    .ok_or_else(|| Error::Internal("guided deviation is not profitable".into()))?
            }
            Scheduler::Scripted(script) => {
                let Some(&(i, k)) = script.get(steps.len()) else {
                    break PathStatus::Truncated;
                };
                let mut to = current.clone();
                if i >= h.players() || k >= h.strategy_count(i) {
                    return Err(Error::Protocol {
                        step: steps.len() + 1,
                        message: format!("no strategy {k} for player {}", i + 1),
                    });
                }
                to[i] = k;
                options.into_iter().find(|o| o.to == to).ok_or_else(|| Error::Protocol {
                    step: steps.len() + 1,
                    message: format!(
                        "{} is not a profitable deviation from {}",
                        h.profile_label(&to),
                        h.profile_label(&current)
                    ),
                })?
            }
        };
        current = step.to.clone();
        steps.push(step);
        if let Some(&at) = seen.get(&current) {
            break PathStatus::CycleDetected { start: at };
        }
        seen.insert(current.clone(), steps.len());
    };
    Ok(ImprovementPath {
        start: start.to_vec(),
        steps,
        status,
    })
}

fn joint_of(game: &ExtensiveGame, profile: &[usize]) -> JointStrategy {
    JointStrategy(
        profile
            .iter()
            .enumerate()
            .map(|(i, &k)| strategy_from_index(game, i, k))
            .collect(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FipResult {
    HasFip,
    /// A shortest improvement cycle; the first profile is repeated at the
    /// end. Among shortest cycles, the one through the least profile
    /// (by cell index) is reported, starting there.
    NotFip { cycle: Vec<Profile> },
}

/// Decides whether every improvement path is finite, i.e. whether the
/// profitable-deviation graph over all profiles is acyclic.
pub fn fip_analysis(h: &StrategicGame, caps: &Caps) -> Result<FipResult> {
    let n = h.cell_count();
    if n > caps.enumeration {
        return Err(Error::capacity("profiles", n, caps.enumeration));
    }
    let edges: Vec<Vec<usize>> = (0..n)
        .map(|c| {
            let mut to: Vec<usize> = profitable_deviations(h, &h.profile_of(c))
                .iter()
                .map(|s| h.cell(&s.to))
                .collect();
            to.sort_unstable();
            to
        })
        .collect();
    // Kahn: whatever cannot be peeled off lies on or leads into a cycle.
    let mut indegree = vec![0usize; n];
    for to in &edges {
        for &t in to {
            indegree[t] += 1;
        }
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&c| indegree[c] == 0).collect();
    let mut removed = 0;
    while let Some(c) = queue.pop_front() {
        removed += 1;
        for &t in &edges[c] {
            indegree[t] -= 1;
            if indegree[t] == 0 {
                queue.push_back(t);
            }
        }
    }
    if removed == n {
        return Ok(FipResult::HasFip);
    }
    let mut best: Option<Vec<usize>> = None;
    for start in (0..n).filter(|&c| indegree[c] > 0) {
        if let Some(cycle) = shortest_cycle_through(&edges, start) {
            if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                best = Some(cycle);
            }
        }
    }
    let cycle = best.ok_or_else(|| Error::Internal("cyclic graph without a cycle".into()))?;
    Ok(FipResult::NotFip {
        cycle: cycle.iter().map(|&c| h.profile_of(c)).collect(),
    })
}

// Breadth-first search back to `start`; returns the cycle with `start` at
// both ends.
fn shortest_cycle_through(edges: &[Vec<usize>], start: usize) -> Option<Vec<usize>> {
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for &t in &edges[c] {
            if t == start {
                let mut back = vec![c];
                while *back.last().expect("non-empty") != start {
                    back.push(parent[back.last().expect("non-empty")]);
                }
                back.reverse();
                back.push(start);
                return Some(back);
            }
            if t != start && !parent.contains_key(&t) {
                parent.insert(t, c);
                queue.push_back(t);
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PotentialVector {
    /// One bit per entry of `node_list`; compared lexicographically.
    pub bits: Vec<bool>,
    /// Postorder: every node after all of its children.
    pub node_list: Vec<NodeId>,
}

impl PotentialVector {
    pub fn to_bit_string(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

// best[i][v]: the best rank player `i` can reach in the subgame at `v`
// when everybody else follows `s`.
fn best_values(game: &ExtensiveGame, s: &JointStrategy) -> Vec<Vec<u32>> {
    (0..game.players())
        .map(|i| {
            let mut best = vec![0u32; game.len()];
            for &v in game.postorder() {
                best[v] = match game.turn(v) {
                    None => game.rank(v, i),
                    Some(j) if j == i => game.children(v).map(|c| best[c]).max().expect("has moves"),
                    Some(_) => best[s.child_at(game, v)],
                };
            }
            best
        })
        .collect()
}

// value[i][v]: the rank player `i` gets in the subgame at `v` under `s`.
fn current_values(game: &ExtensiveGame, s: &JointStrategy) -> Vec<Vec<u32>> {
    let mut leaf_of = vec![0; game.len()];
    for &v in game.postorder() {
        leaf_of[v] = if game.is_leaf(v) { v } else { leaf_of[s.child_at(game, v)] };
    }
    (0..game.players())
        .map(|i| leaf_of.iter().map(|&z| game.rank(z, i)).collect())
        .collect()
}

/// The potential of `s`.
pub fn weak_potential(game: &ExtensiveGame, s: &JointStrategy) -> PotentialVector {
    let best = best_values(game, s);
    let value = current_values(game, s);
    let node_list = game.postorder().to_vec();
    let bits = node_list
        .iter()
        .map(|&v| match game.turn(v) {
            None => true,
            Some(i) => value[i][v] == best[i][v],
        })
        .collect();
    PotentialVector { bits, node_list }
}

/// No player can gain by changing its whole strategy.
pub fn is_nash_extensive(game: &ExtensiveGame, s: &JointStrategy) -> bool {
    let best = best_values(game, s);
    let value = current_values(game, s);
    (0..game.players()).all(|i| value[i][game.root()] == best[i][game.root()])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuidedDeviation {
    pub deviator: Player,
    pub from: JointStrategy,
    pub to: JointStrategy,
    /// The node whose bit the deviation sets.
    pub node: NodeId,
    pub before: PotentialVector,
    pub after: PotentialVector,
}

/// A profitable deviation that raises the potential: the lowest player
/// `i` not best-responding switches to a best response `t_i` along the play
/// of `(t_i, s_-i)` and keeps `s_i` everywhere else.
///
/// The construction guarantees that the bit of the last node on the new
/// play where `s_i` was not a subgame best response flips to 1 while all
/// bits before it stay put; both facts are checked at run time.
pub fn guided_deviation(game: &ExtensiveGame, s: &JointStrategy) -> Result<GuidedDeviation> {
    let best = best_values(game, s);
    let value = current_values(game, s);
    let root = game.root();
    let Some(i) = (0..game.players()).find(|&i| value[i][root] < best[i][root]) else {
        return Err(Error::Precondition("the joint strategy is a Nash equilibrium".into()));
    };
    // Keep s_i's choice wherever it already attains the best value. Then
    // every changed node has R(s,u) = 0 and lies at or above the node whose
    // bit flips, so no bit earlier in L can drop. An arbitrary best response
    // can break another player's best response further down the new play.
    let t_i = Strategy {
        player: i,
        choices: game
            .decision_nodes(i)
            .iter()
            .map(|&v| {
                let current = s.choice_at(game, v);
                if best[i][game.child(v, current)] == best[i][v] {
                    current
                } else {
                    game.children(v)
                        .position(|c| best[i][c] == best[i][v])
                        .expect("maximum attained")
                }
            })
            .collect(),
    };
    let t = s.with(t_i.clone());
    let path = play(game, &t).path;
    let mut spliced = s.0[i].clone();
    for &v in &path {
        if game.turn(v) == Some(i) {
            spliced.choices[game.slot(v)] = t_i.choice(game, v);
        }
    }
    let to = s.with(spliced);
    let before = weak_potential(game, s);
    let after = weak_potential(game, &to);
    let position = |v: NodeId| before.node_list.iter().position(|&u| u == v).expect("listed");
    let node = path
        .iter()
        .rev()
        .copied()
        .find(|&v| game.turn(v) == Some(i) && !before.bits[position(v)])
        .ok_or_else(|| Error::Internal("no node on the new play lacks a best response".into()))?;
    let k = position(node);
    if !after.bits[k] || before.bits[..k] != after.bits[..k] {
        return Err(Error::Internal(format!(
            "deviation at {} does not raise the potential as constructed",
            game.node_ref(node)
        )));
    }
    let new_value = current_values(game, &to)[i][root];
    if new_value <= value[i][root] {
        return Err(Error::Internal("guided deviation is not profitable".into()));
    }
    Ok(GuidedDeviation {
        deviator: i,
        from: s.clone(),
        to,
        node,
        before,
        after,
    })
}

/// Profiles of the support, in cell order.
pub fn all_profiles(h: &StrategicGame) -> Vec<Profile> {
    Support::full(h).profiles().collect()
}
