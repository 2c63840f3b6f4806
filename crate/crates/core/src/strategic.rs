//! Finite strategic games with exact payoffs.
//!
//! A [`StrategicGame`] stores the list of distinct outcomes and, per cell, an
//! index into that list, together with per-player ranks so that all payoff
//! comparisons are integer comparisons. Subgames obtained by removing
//! strategies are [`Support`] views over the same table.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;

use crate::error::{Caps, Error, Result};
use crate::outcome::{dense_ranks, Outcome, Rational};
use crate::strategy::{
    enumerate_reduced, enumerate_strategies, leaf_from, reduced_label, reduced_label_verbose, strategy_label,
};
use crate::tree::{ExtensiveGame, Player};

pub type Profile = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategicGame {
    players: usize,
    labels: Vec<Vec<String>>,
    outcomes: Vec<Outcome>,
    cells: Vec<u32>,
    // ranks[outcome][player]
    ranks: Vec<Vec<u32>>,
    strides: Vec<usize>,
}

impl StrategicGame {
    /// `cells` lists the outcome of every profile, first player most
    /// significant.
    pub fn new(labels: Vec<Vec<String>>, cells: Vec<Outcome>) -> Result<Self> {
        let players = labels.len();
        if players == 0 {
            return Err(Error::Domain("a strategic game needs at least one player".into()));
        }
        for (i, list) in labels.iter().enumerate() {
            if list.is_empty() {
                return Err(Error::Domain(format!("player {} has no strategies", i + 1)));
            }
            let distinct: BTreeSet<&String> = list.iter().collect();
            if distinct.len() != list.len() {
                return Err(Error::Domain(format!("player {} has duplicate labels", i + 1)));
            }
        }
        let expected: usize = labels.iter().map(Vec::len).product();
        if cells.len() != expected {
            return Err(Error::Domain(format!("expected {expected} cells, got {}", cells.len())));
        }
        let mut index: HashMap<Outcome, u32> = HashMap::new();
        let mut outcomes = Vec::new();
        let mut cell_ids = Vec::with_capacity(cells.len());
        for o in cells {
            if o.len() != players {
                return Err(Error::Domain(format!("outcome {o} has the wrong length")));
            }
            let id = *index.entry(o.clone()).or_insert_with(|| {
                outcomes.push(o);
                (outcomes.len() - 1) as u32
            });
            cell_ids.push(id);
        }
        Ok(Self::assemble(labels, outcomes, cell_ids))
    }

    fn assemble(labels: Vec<Vec<String>>, outcomes: Vec<Outcome>, cells: Vec<u32>) -> Self {
        let players = labels.len();
        let mut ranks = vec![Vec::with_capacity(players); outcomes.len()];
        for i in 0..players {
            let values: Vec<&Rational> = outcomes.iter().map(|o| o.get(i)).collect();
            for (r, rank) in ranks.iter_mut().zip(dense_ranks(&values)) {
                r.push(rank);
            }
        }
        let mut strides = vec![1; players];
        for i in (0..players.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * labels[i + 1].len();
        }
        StrategicGame {
            players,
            labels,
            outcomes,
            cells,
            ranks,
            strides,
        }
    }

    /// Game from integer payoff vectors listed in profile order.
    pub fn from_ints(labels: &[&[&str]], cells: &[&[i64]]) -> Result<Self> {
        StrategicGame::new(
            labels
                .iter()
                .map(|l| l.iter().map(|s| s.to_string()).collect())
                .collect(),
            cells.iter().map(|c| Outcome::from_ints(c)).collect(),
        )
    }

    pub fn players(&self) -> usize {
        self.players
    }

    pub fn labels(&self, player: Player) -> &[String] {
        &self.labels[player]
    }

    pub fn label(&self, player: Player, k: usize) -> &str {
        &self.labels[player][k]
    }

    pub fn strategy_count(&self, player: Player) -> usize {
        self.labels[player].len()
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn index_of(&self, player: Player, label: &str) -> Option<usize> {
        self.labels[player].iter().position(|l| l == label)
    }

    pub fn cell(&self, profile: &[usize]) -> usize {
        profile.iter().zip(&self.strides).map(|(k, s)| k * s).sum()
    }

    pub fn profile_of(&self, mut cell: usize) -> Profile {
        self.strides
            .iter()
            .map(|&s| {
                let k = cell / s;
                cell %= s;
                k
            })
            .collect()
    }

    /// Index into [`Self::outcomes`].
    pub fn outcome_id(&self, profile: &[usize]) -> usize {
        self.cells[self.cell(profile)] as usize
    }

    pub fn outcome(&self, profile: &[usize]) -> &Outcome {
        &self.outcomes[self.outcome_id(profile)]
    }

    pub fn payoff(&self, profile: &[usize], player: Player) -> &Rational {
        self.outcome(profile).get(player)
    }

    /// Rank of the payoff of `player`; ranks order exactly like payoffs.
    pub fn rank(&self, profile: &[usize], player: Player) -> u32 {
        self.ranks[self.outcome_id(profile)][player]
    }

    /// Distinct outcomes in order of first appearance.
    pub fn outcomes(&self) -> &[Outcome] {
        &self.outcomes
    }

    pub fn profile_label(&self, profile: &[usize]) -> String {
        let parts: Vec<&str> = profile.iter().enumerate().map(|(i, &k)| self.label(i, k)).collect();
        format!("({})", parts.join(","))
    }

    /// Look up a profile from one label per player.
    pub fn parse_profile(&self, labels: &[&str]) -> Option<Profile> {
        if labels.len() != self.players {
            return None;
        }
        labels.iter().enumerate().map(|(i, l)| self.index_of(i, l)).collect()
    }

    /// The subgame on `support`, with labels kept.
    pub fn restrict(&self, support: &Support) -> StrategicGame {
        let labels: Vec<Vec<String>> = support
            .sets
            .iter()
            .enumerate()
            .map(|(i, set)| set.iter().map(|&k| self.labels[i][k].clone()).collect())
            .collect();
        let cells = support.profiles().map(|p| self.outcome(&p).clone()).collect();
        StrategicGame::new(labels, cells).expect("restriction of a valid game")
    }
}

/// Surviving strategies per player, each list ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Support {
    pub sets: Vec<Vec<usize>>,
}

impl Support {
    pub fn full(h: &StrategicGame) -> Self {
        Support {
            sets: (0..h.players()).map(|i| (0..h.strategy_count(i)).collect()).collect(),
        }
    }

    pub fn contains(&self, player: Player, k: usize) -> bool {
        self.sets[player].binary_search(&k).is_ok()
    }

    pub fn contains_profile(&self, profile: &[usize]) -> bool {
        profile.iter().enumerate().all(|(i, &k)| self.contains(i, k))
    }

    pub fn profile_count(&self) -> usize {
        self.sets.iter().map(Vec::len).product()
    }

    pub fn profiles(&self) -> ProfileIter<'_> {
        ProfileIter::new(&self.sets, None)
    }

    /// Profiles of the other players; entry `player` is left at `0`.
    pub fn opponent_profiles(&self, player: Player) -> ProfileIter<'_> {
        ProfileIter::new(&self.sets, Some(player))
    }

    pub fn remove(&mut self, player: Player, k: usize) {
        self.sets[player].retain(|&x| x != k);
    }
}

/// Mixed-radix iteration over the product of index lists.
pub struct ProfileIter<'a> {
    sets: &'a [Vec<usize>],
    skip: Option<Player>,
    pos: Vec<usize>,
    done: bool,
}

impl<'a> ProfileIter<'a> {
    fn new(sets: &'a [Vec<usize>], skip: Option<Player>) -> Self {
        let done = sets.iter().enumerate().any(|(i, s)| Some(i) != skip && s.is_empty());
        ProfileIter {
            sets,
            skip,
            pos: vec![0; sets.len()],
            done,
        }
    }
}

impl Iterator for ProfileIter<'_> {
    type Item = Profile;

    fn next(&mut self) -> Option<Profile> {
        if self.done {
            return None;
        }
        let out: Profile = self
            .pos
            .iter()
            .enumerate()
            .map(|(i, &p)| if Some(i) == self.skip { 0 } else { self.sets[i][p] })
            .collect();
        let mut i = self.sets.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if Some(i) == self.skip {
                continue;
            }
            self.pos[i] += 1;
            if self.pos[i] < self.sets[i].len() {
                break;
            }
            self.pos[i] = 0;
        }
        Some(out)
    }
}

/// Strategic form of an extensive game over full or reduced strategies.
/// Reduced-strategy labels fall back to `#id:action` lists if the short
/// labels of some player collide.
pub fn to_strategic(game: &ExtensiveGame, reduced: bool, caps: &Caps) -> Result<StrategicGame> {
    let n = game.players();
    // Per player: labels and a move function over decision nodes.
    let mut labels: Vec<Vec<String>> = Vec::with_capacity(n);
    let mut moves: Vec<Vec<Vec<usize>>> = Vec::with_capacity(n);
    let mut total = BigUint::from(1u8);
    for i in 0..n {
        let mut table = Vec::new();
        let mut names = Vec::new();
        if reduced {
            let list = enumerate_reduced(game, i, caps)?;
            let mut short: Vec<String> = list.iter().map(|r| reduced_label(game, r)).collect();
            if short.iter().collect::<BTreeSet<_>>().len() != short.len() {
                short = list.iter().map(|r| reduced_label_verbose(game, r)).collect();
            }
            for r in &list {
                let mut row = vec![usize::MAX; game.len()];
                for (&v, &k) in &r.moves {
                    row[v] = k;
                }
                table.push(row);
            }
            names = short;
        } else {
            for s in enumerate_strategies(game, i, caps)? {
                let mut row = vec![usize::MAX; game.len()];
                for (&v, &k) in game.decision_nodes(i).iter().zip(&s.choices) {
                    row[v] = k;
                }
                names.push(strategy_label(game, &s));
                table.push(row);
            }
        }
        total *= BigUint::from(names.len());
        labels.push(names);
        moves.push(table);
    }
    caps.check("strategic-form cells", &total)?;

    let support = Support {
        sets: labels.iter().map(|l| (0..l.len()).collect()).collect(),
    };
    let cells = support
        .profiles()
        .map(|p| {
            let z = leaf_from(game, game.root(), |v| {
                let i = game.turn(v).expect("decision node");
                let k = moves[i][p[i]][v];
                debug_assert_ne!(k, usize::MAX, "reduced strategy misses a reachable node");
                k
            });
            game.outcome(z).clone()
        })
        .collect();
    StrategicGame::new(labels, cells)
}

/// Argmax of `p_player(., opponents)`; the player's own entry of `profile` is
/// ignored.
pub fn best_responses(h: &StrategicGame, player: Player, profile: &[usize]) -> Vec<usize> {
    best_responses_in(h, &Support::full(h), player, profile)
}

pub fn best_responses_in(h: &StrategicGame, support: &Support, player: Player, profile: &[usize]) -> Vec<usize> {
    let mut p = profile.to_vec();
    let mut best = 0;
    let mut out = Vec::new();
    for &k in &support.sets[player] {
        p[player] = k;
        let r = h.rank(&p, player);
        if out.is_empty() || r > best {
            best = r;
            out.clear();
            out.push(k);
        } else if r == best {
            out.push(k);
        }
    }
    out
}

/// Whether no player in `support` can gain by a unilateral deviation within
/// `support`.
pub fn is_nash_in(h: &StrategicGame, support: &Support, profile: &[usize]) -> bool {
    let mut p = profile.to_vec();
    (0..h.players()).all(|i| {
        let own = h.rank(profile, i);
        let ok = support.sets[i].iter().all(|&k| {
            p[i] = k;
            h.rank(&p, i) <= own
        });
        p[i] = profile[i];
        ok
    })
}

pub fn is_nash(h: &StrategicGame, profile: &[usize]) -> bool {
    is_nash_in(h, &Support::full(h), profile)
}

/// Every pure Nash equilibrium, in profile order.
pub fn nash_equilibria(h: &StrategicGame, caps: &Caps) -> Result<Vec<Profile>> {
    caps.check("strategic-form cells", &BigUint::from(h.cell_count()))?;
    let full = Support::full(h);
    Ok(full.profiles().filter(|p| is_nash_in(h, &full, p)).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dominated {
    pub strategy: usize,
    /// Least index among the strategies that weakly dominate `strategy`.
    pub witness: usize,
}

fn rank_rows(h: &StrategicGame, support: &Support, player: Player) -> Vec<(usize, Vec<u32>)> {
    let opponents: Vec<Profile> = support.opponent_profiles(player).collect();
    support.sets[player]
        .iter()
        .map(|&k| {
            let row = opponents
                .iter()
                .map(|o| {
                    let mut p = o.clone();
                    p[player] = k;
                    h.rank(&p, player)
                })
                .collect();
            (k, row)
        })
        .collect()
}

fn dominates(a: &[u32], b: &[u32]) -> bool {
    let mut strict = false;
    for (x, y) in a.iter().zip(b) {
        if x < y {
            return false;
        }
        strict |= x > y;
    }
    strict
}

/// Strategies of `player` weakly dominated by another strategy of the
/// support, with the least dominator as witness.
pub fn weakly_dominated_in(h: &StrategicGame, support: &Support, player: Player) -> Vec<Dominated> {
    let rows = rank_rows(h, support, player);
    rows.iter()
        .filter_map(|(k, row)| {
            rows.iter()
                .find(|(_, other)| dominates(other, row))
                .map(|(w, _)| Dominated {
                    strategy: *k,
                    witness: *w,
                })
        })
        .collect()
}

pub fn weakly_dominated(h: &StrategicGame, player: Player) -> Vec<Dominated> {
    weakly_dominated_in(h, &Support::full(h), player)
}

/// Least strategy in `candidates` that weakly dominates `k` against the
/// opponents of `support`.
pub fn dominator_among(
    h: &StrategicGame,
    support: &Support,
    player: Player,
    k: usize,
    candidates: &[usize],
) -> Option<usize> {
    let opponents: Vec<Profile> = support.opponent_profiles(player).collect();
    let row = |s: usize| -> Vec<u32> {
        opponents
            .iter()
            .map(|o| {
                let mut p = o.clone();
                p[player] = s;
                h.rank(&p, player)
            })
            .collect()
    };
    let target = row(k);
    candidates.iter().copied().find(|&c| dominates(&row(c), &target))
}

pub fn outcome_ids(h: &StrategicGame, support: &Support) -> BTreeSet<usize> {
    support.profiles().map(|p| h.outcome_id(&p)).collect()
}

/// A game is trivial when all its profiles share one outcome.
pub fn is_trivial(h: &StrategicGame, support: &Support) -> bool {
    outcome_ids(h, support).len() <= 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScriptStep {
    /// `None` looks the label up among all players; it must be unambiguous.
    pub player: Option<Player>,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Policy {
    /// Remove every weakly dominated strategy of every player each round.
    Max,
    /// Remove the least dominated strategy (lowest player, then index) each
    /// round.
    GreedyOne,
    /// Remove the listed strategies one per round, checking each is dominated
    /// when removed; stop after the script.
    Scripted(Vec<ScriptStep>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationStep {
    /// 1-based round.
    pub round: usize,
    pub player: Player,
    pub removed: usize,
    pub witness: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationTrace {
    pub steps: Vec<EliminationStep>,
    /// `snapshots[k]` is the support after `k` rounds; `snapshots[0]` is the
    /// starting game.
    pub snapshots: Vec<Support>,
}

impl EliminationTrace {
    pub fn rounds(&self) -> usize {
        self.snapshots.len() - 1
    }

    pub fn last(&self) -> &Support {
        self.snapshots.last().expect("initial snapshot")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Iewds {
    pub trace: EliminationTrace,
    pub solved: bool,
}

impl Iewds {
    pub fn survivors(&self) -> &Support {
        self.trace.last()
    }
}

pub fn iewds(h: &StrategicGame, policy: &Policy) -> Result<Iewds> {
    iewds_from(h, Support::full(h), policy)
}

pub fn iewds_from(h: &StrategicGame, start: Support, policy: &Policy) -> Result<Iewds> {
    let mut current = start;
    let mut trace = EliminationTrace {
        steps: Vec::new(),
        snapshots: vec![current.clone()],
    };
    let mut round = 0;
    match policy {
        Policy::Max | Policy::GreedyOne => loop {
            let mut removals: Vec<(Player, Dominated)> = Vec::new();
            for i in 0..h.players() {
                for d in weakly_dominated_in(h, &current, i) {
                    removals.push((i, d));
                }
            }
            if removals.is_empty() {
                break;
            }
            if *policy == Policy::GreedyOne {
                removals.truncate(1);
            }
            round += 1;
            for &(i, d) in &removals {
                current.remove(i, d.strategy);
                if current.sets[i].is_empty() {
                    return Err(Error::Internal(format!(
                        "elimination emptied the strategy set of player {}",
                        i + 1
                    )));
                }
                trace.steps.push(EliminationStep {
                    round,
                    player: i,
                    removed: d.strategy,
                    witness: d.witness,
                });
            }
            trace.snapshots.push(current.clone());
        },
        Policy::Scripted(script) => {
            for (k, step) in script.iter().enumerate() {
                round += 1;
                let candidates: Vec<(Player, usize)> = (0..h.players())
                    .filter(|&i| step.player.is_none_or(|p| p == i))
                    .filter_map(|i| h.index_of(i, &step.label).map(|s| (i, s)))
                    .collect();
                let (i, s) = match candidates.as_slice() {
                    [one] => *one,
                    [] => {
                        return Err(Error::Protocol {
                            step: k + 1,
                            message: format!("unknown strategy {:?}", step.label),
                        })
                    }
                    _ => {
                        return Err(Error::Protocol {
                            step: k + 1,
                            message: format!("label {:?} is ambiguous; name the player", step.label),
                        })
                    }
                };
                if !current.contains(i, s) {
                    return Err(Error::Protocol {
                        step: k + 1,
                        message: format!("{} was already removed", step.label),
                    });
                }
                let Some(witness) = dominator_among(h, &current, i, s, &current.sets[i]) else {
                    return Err(Error::Protocol {
                        step: k + 1,
                        message: format!(
                            "{} is not weakly dominated for player {} at this step",
                            step.label,
                            i + 1
                        ),
                    });
                };
                current.remove(i, s);
                trace.steps.push(EliminationStep {
                    round,
                    player: i,
                    removed: s,
                    witness,
                });
                trace.snapshots.push(current.clone());
            }
        }
    }
    let solved = is_trivial(h, &current);
    Ok(Iewds { trace, solved })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TdiWitness {
    pub player: Player,
    pub r: usize,
    pub t: usize,
    /// Opponent strategies; the entry of `player` is unused.
    pub opponents: Profile,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TdiResult {
    pub holds: bool,
    pub witness: Option<TdiWitness>,
}

/// Transference of decisionmaker indifference: whenever a player is
/// indifferent between two own strategies against fixed opponents, so is
/// everybody else. The first counterexample is reported in (player,
/// opponents, r, t) scan order.
pub fn tdi_check(h: &StrategicGame) -> TdiResult {
    let full = Support::full(h);
    for i in 0..h.players() {
        for o in full.opponent_profiles(i) {
            let ids: Vec<(u32, usize)> = (0..h.strategy_count(i))
                .map(|k| {
                    let mut p = o.clone();
                    p[i] = k;
                    (h.rank(&p, i), h.outcome_id(&p))
                })
                .collect();
            for r in 0..ids.len() {
                for t in r + 1..ids.len() {
                    if ids[r].0 == ids[t].0 && ids[r].1 != ids[t].1 {
                        return TdiResult {
                            holds: false,
                            witness: Some(TdiWitness {
                                player: i,
                                r,
                                t,
                                opponents: o,
                            }),
                        };
                    }
                }
            }
        }
    }
    TdiResult {
        holds: true,
        witness: None,
    }
}

/// `max_{s_i} min_{s_-i} p_i` over `support`.
pub fn maxmin_in(h: &StrategicGame, support: &Support, player: Player) -> Rational {
    let (value, _) = security_in(h, support, player);
    value
}

pub fn maxmin(h: &StrategicGame, player: Player) -> Rational {
    maxmin_in(h, &Support::full(h), player)
}

/// Strategies attaining the maxmin value.
pub fn security_strategies(h: &StrategicGame, player: Player) -> Vec<usize> {
    security_in(h, &Support::full(h), player).1
}

pub fn security_in(h: &StrategicGame, support: &Support, player: Player) -> (Rational, Vec<usize>) {
    let opponents: Vec<Profile> = support.opponent_profiles(player).collect();
    let worst: Vec<(usize, Profile)> = support.sets[player]
        .iter()
        .map(|&k| {
            let p = opponents
                .iter()
                .map(|o| {
                    let mut p = o.clone();
                    p[player] = k;
                    p
                })
                .min_by_key(|p| h.rank(p, player))
                .expect("non-empty opponent set");
            (k, p)
        })
        .collect();
    let best = worst.iter().map(|(_, p)| h.rank(p, player)).max().expect("non-empty strategy set");
    let secure: Vec<usize> = worst
        .iter()
        .filter(|(_, p)| h.rank(p, player) == best)
        .map(|(k, _)| *k)
        .collect();
    let value = worst
        .iter()
        .find(|(_, p)| h.rank(p, player) == best)
        .map(|(_, p)| h.payoff(p, player).clone())
        .expect("attained");
    (value, secure)
}

/// For every player and every strategy of the starting game, some surviving
/// strategy does at least as well against every surviving opponent profile.
pub fn surviving_cover_check(h: &StrategicGame, run: &Iewds) -> bool {
    let start = &run.trace.snapshots[0];
    let end = run.survivors();
    (0..h.players()).all(|i| {
        let opponents: Vec<Profile> = end.opponent_profiles(i).collect();
        start.sets[i].iter().all(|&s| {
            end.sets[i].iter().any(|&t| {
                opponents.iter().all(|o| {
                    let mut ps = o.clone();
                    ps[i] = s;
                    let mut pt = o.clone();
                    pt[i] = t;
                    h.rank(&pt, i) >= h.rank(&ps, i)
                })
            })
        })
    })
}
