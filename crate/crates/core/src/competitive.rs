//! Strictly competitive games: solving by repeated elimination of all weakly
//! dominated strategies, and the linear-time verdict for win-or-lose and
//! chess-like extensive games.

use std::collections::BTreeSet;

use crate::error::{Caps, Error, Result};
use crate::outcome::{int, Outcome, Rational};
use crate::strategic::{iewds, is_trivial, to_strategic, Iewds, Policy, Profile, StrategicGame, Support};
use crate::strategy::Strategy;
use crate::tree::{is_chess_like, is_strictly_competitive, is_win_or_lose, ExtensiveGame, Player};

/// Two players whose preferences over the outcomes of `support` are exactly
/// opposed.
pub fn strategic_strictly_competitive(h: &StrategicGame, support: &Support) -> bool {
    if h.players() != 2 {
        return false;
    }
    let ranks: BTreeSet<(u32, u32)> = support.profiles().map(|p| (h.rank(&p, 0), h.rank(&p, 1))).collect();
    ranks
        .iter()
        .all(|a| ranks.iter().all(|b| (a.0 >= b.0) == (a.1 <= b.1)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlayerSets {
    /// Largest payoff the player receives anywhere in the game.
    pub p_max: Rational,
    /// Strategies that always yield `p_max`.
    pub win: Vec<usize>,
    /// Opponent strategies against which the player can attain `p_max`.
    pub lose_opponent: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompetitiveSets {
    pub players: [PlayerSets; 2],
}

pub fn competitive_sets_in(h: &StrategicGame, support: &Support) -> Result<CompetitiveSets> {
    if h.players() != 2 {
        return Err(Error::Precondition(format!(
            "win and lose sets need two players, the game has {}",
            h.players()
        )));
    }
    let sets = |i: Player| {
        let j = 1 - i;
        let profiles: Vec<Profile> = support.profiles().collect();
        let top = profiles.iter().map(|p| h.rank(p, i)).max().expect("non-empty support");
        let p_max = profiles
            .iter()
            .find(|p| h.rank(p, i) == top)
            .map(|p| h.payoff(p, i).clone())
            .expect("attained");
        let win = support.sets[i]
            .iter()
            .copied()
            .filter(|&s| profiles.iter().filter(|p| p[i] == s).all(|p| h.rank(p, i) == top))
            .collect();
        let lose_opponent = support.sets[j]
            .iter()
            .copied()
            .filter(|&s| profiles.iter().filter(|p| p[j] == s).any(|p| h.rank(p, i) == top))
            .collect();
        PlayerSets {
            p_max,
            win,
            lose_opponent,
        }
    };
    Ok(CompetitiveSets {
        players: [sets(0), sets(1)],
    })
}

pub fn competitive_sets(h: &StrategicGame) -> Result<CompetitiveSets> {
    competitive_sets_in(h, &Support::full(h))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScRun {
    /// Max-policy elimination; `run.trace.snapshots[k]` is `H^k`.
    pub run: Iewds,
    /// First `k` with `H^k` trivial.
    pub trivial_at: usize,
    /// Number of distinct outcomes of the starting game.
    pub outcome_count: usize,
}

impl ScRun {
    /// `H^k`, which stays fixed once elimination stops.
    pub fn snapshot(&self, k: usize) -> &Support {
        let snaps = &self.run.trace.snapshots;
        &snaps[k.min(snaps.len() - 1)]
    }
}

/// Eliminates all weakly dominated strategies round after round until the
/// game is trivial, which for a strictly competitive game with `m` outcomes
/// happens by round `m - 1`. Failing that bound is an internal error.
pub fn sc_iterate_strategic(h: &StrategicGame) -> Result<ScRun> {
    let full = Support::full(h);
    if !strategic_strictly_competitive(h, &full) {
        return Err(Error::Precondition("the game is not strictly competitive".into()));
    }
    let outcome_count = crate::strategic::outcome_ids(h, &full).len();
    let run = iewds(h, &Policy::Max)?;
    let trivial_at = run
        .trace
        .snapshots
        .iter()
        .position(|s| is_trivial(h, s))
        .ok_or_else(|| {
            Error::Internal("elimination stopped in a non-trivial strictly competitive game".into())
        })?;
    if trivial_at + 1 > outcome_count.max(1) {
        return Err(Error::Internal(format!(
            "trivial only after {trivial_at} rounds with {outcome_count} outcomes"
        )));
    }
    Ok(ScRun {
        run,
        trivial_at,
        outcome_count,
    })
}

/// [`sc_iterate_strategic`] on the full strategic form of `game`.
pub fn sc_iterate(game: &ExtensiveGame, caps: &Caps) -> Result<(StrategicGame, ScRun)> {
    if !is_strictly_competitive(game) {
        return Err(Error::Precondition("the game is not strictly competitive".into()));
    }
    let h = to_strategic(game, false, caps)?;
    let run = sc_iterate_strategic(&h)?;
    Ok((h, run))
}

/// A lose-set strategy that survived two further rounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoseViolation {
    pub round: usize,
    /// The player with an empty win set.
    pub player: Player,
    /// The opponent's surviving strategy.
    pub strategy: usize,
}

/// For every round `k` and player `i` with no winning strategy in `H^k`,
/// the opponent strategies in `lose_{-i}(H^k)` are gone from `H^{k+2}`.
/// Returns the first violation.
pub fn lose_removal_check(h: &StrategicGame, run: &ScRun) -> Result<Option<LoseViolation>> {
    for k in 0..run.run.trace.snapshots.len() {
        let current = run.snapshot(k);
        let later = run.snapshot(k + 2);
        let sets = competitive_sets_in(h, current)?;
        for i in 0..2 {
            let own = &sets.players[i];
            if !own.win.is_empty() {
                continue;
            }
            if let Some(&s) = own.lose_opponent.iter().find(|&&s| later.contains(1 - i, s)) {
                return Ok(Some(LoseViolation {
                    round: k,
                    player: i,
                    strategy: s,
                }));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictKind {
    FirstWins,
    SecondWins,
    /// Chess-like games only: both players can guarantee a draw.
    BothDraw,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameVerdict {
    pub kind: VerdictKind,
    /// A winning strategy of the winner, or a draw-guaranteeing strategy of
    /// each player for `BothDraw`.
    pub witnesses: Vec<Strategy>,
}

// Winner of every subtree of a win-or-lose game.
fn color(game: &ExtensiveGame) -> Vec<Player> {
    let one = int(1);
    let mut winner = vec![0; game.len()];
    for &v in game.postorder() {
        winner[v] = match game.turn(v) {
            None => {
                if game.outcome(v).get(0) == &one {
                    0
                } else {
                    1
                }
            }
            Some(i) => {
                if game.children(v).any(|c| winner[c] == i) {
                    i
                } else {
                    1 - i
                }
            }
        };
    }
    winner
}

// Stays inside subtrees `player` wins whenever possible.
fn winning_strategy(game: &ExtensiveGame, winner: &[Player], player: Player) -> Strategy {
    Strategy {
        player,
        choices: game
            .decision_nodes(player)
            .iter()
            .map(|&v| game.children(v).position(|c| winner[c] == player).unwrap_or(0))
            .collect(),
    }
}

fn replace_draws(game: &ExtensiveGame, with: &Outcome) -> ExtensiveGame {
    let draw = Outcome::from_ints(&[0, 0]);
    game.map_outcomes(|o| if *o == draw { with.clone() } else { o.clone() })
        .expect("same tree stays valid")
}

/// Who wins a win-or-lose game, or the three-way verdict of a chess-like
/// game, by one bottom-up pass over the tree per derived game.
///
/// For a chess-like game `G`, `G1` turns draws into wins of player 2 and
/// `G2` into wins of player 1. Player 1 wins `G` iff it wins `G1`, player 2
/// wins `G` iff it wins `G2`, and otherwise player 2's winning strategy in
/// `G1` and player 1's in `G2` guarantee each of them a draw in `G`.
pub fn zermelo(game: &ExtensiveGame) -> Result<GameVerdict> {
    if is_win_or_lose(game) {
        let winner = color(game);
        let w = winner[game.root()];
        return Ok(GameVerdict {
            kind: if w == 0 {
                VerdictKind::FirstWins
            } else {
                VerdictKind::SecondWins
            },
            witnesses: vec![winning_strategy(game, &winner, w)],
        });
    }
    if !is_chess_like(game) {
        return Err(Error::Precondition(
            "zermelo needs a two-player game with outcomes among (1,-1), (-1,1) and (0,0)".into(),
        ));
    }
    let g1 = replace_draws(game, &Outcome::from_ints(&[-1, 1]));
    let g2 = replace_draws(game, &Outcome::from_ints(&[1, -1]));
    let c1 = color(&g1);
    let c2 = color(&g2);
    let verdict = if c1[g1.root()] == 0 {
        GameVerdict {
            kind: VerdictKind::FirstWins,
            witnesses: vec![winning_strategy(&g1, &c1, 0)],
        }
    } else if c2[g2.root()] == 1 {
        GameVerdict {
            kind: VerdictKind::SecondWins,
            witnesses: vec![winning_strategy(&g2, &c2, 1)],
        }
    } else {
        GameVerdict {
            kind: VerdictKind::BothDraw,
            witnesses: vec![winning_strategy(&g2, &c2, 0), winning_strategy(&g1, &c1, 1)],
        }
    };
    Ok(verdict)
}

/// The least payoff `s`'s player can get against any opponent behaviour,
/// by one pass over the tree.
pub fn guaranteed_payoff(game: &ExtensiveGame, s: &Strategy) -> Rational {
    let i = s.player;
    let mut value: Vec<Option<Rational>> = vec![None; game.len()];
    for &v in game.postorder() {
        value[v] = Some(match game.turn(v) {
            None => game.outcome(v).get(i).clone(),
            Some(j) if j == i => value[s.child(game, v)].clone().expect("child done"),
            Some(_) => game
                .children(v)
                .map(|c| value[c].clone().expect("child done"))
                .min()
                .expect("decision node has moves"),
        });
    }
    value[game.root()].clone().expect("root done")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::strategic::maxmin;
    use crate::strategy::{enumerate_strategies, strategy_label};
    use crate::tree::TreeSpec;

    #[test]
    fn matching_pennies_becomes_trivial_after_one_round() {
        let g = corpus::matching_pennies();
        let (h, run) = sc_iterate(&g, &Caps::default()).unwrap();
        assert_eq!(run.outcome_count, 2);
        assert_eq!(run.trivial_at, 1);
        let last = run.snapshot(1);
        assert_eq!(last.sets[1], vec![h.index_of(1, "TH").unwrap()]);
        assert!(last.profiles().all(|p| h.outcome(&p) == &Outcome::from_ints(&[-1, 1])));
        assert_eq!(lose_removal_check(&h, &run).unwrap(), None);
    }

    #[test]
    fn one_leaf_game_is_trivial_from_the_start() {
        let g = TreeSpec::leaf(&[0, 0]).build("t", 2).unwrap();
        let (h, run) = sc_iterate(&g, &Caps::default()).unwrap();
        assert_eq!(run.trivial_at, 0);
        assert_eq!(lose_removal_check(&h, &run).unwrap(), None);
    }

    #[test]
    fn centipede_is_not_strictly_competitive() {
        assert!(matches!(
            sc_iterate(&corpus::centipede(), &Caps::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn matching_pennies_sets() {
        let h = to_strategic(&corpus::matching_pennies(), false, &Caps::default()).unwrap();
        let sets = competitive_sets(&h).unwrap();
        assert_eq!(sets.players[1].p_max, int(1));
        assert_eq!(sets.players[1].win, vec![h.index_of(1, "TH").unwrap()]);
        assert_eq!(sets.players[1].lose_opponent, vec![0, 1]);
        assert_eq!(sets.players[0].p_max, int(1));
        assert!(sets.players[0].win.is_empty());
    }

    #[test]
    fn constant_game_everything_wins() {
        let h = StrategicGame::from_ints(&[&["a", "b"], &["x", "y"]], &[&[0, 0][..]; 4]).unwrap();
        let sets = competitive_sets(&h).unwrap();
        for i in 0..2 {
            assert_eq!(sets.players[i].win, vec![0, 1]);
        }
    }

    #[test]
    fn zermelo_examples() {
        let mp = corpus::matching_pennies();
        let v = zermelo(&mp).unwrap();
        assert_eq!(v.kind, VerdictKind::SecondWins);
        assert_eq!(strategy_label(&mp, &v.witnesses[0]), "TH");

        let leaf = TreeSpec::leaf(&[1, -1]).build("t", 2).unwrap();
        let v = zermelo(&leaf).unwrap();
        assert_eq!(v.kind, VerdictKind::FirstWins);
        assert_eq!(strategy_label(&leaf, &v.witnesses[0]), "-");

        let pick = TreeSpec::decide(0, vec![("d", TreeSpec::leaf(&[0, 0])), ("w", TreeSpec::leaf(&[1, -1]))])
            .build("t", 2)
            .unwrap();
        let v = zermelo(&pick).unwrap();
        assert_eq!(v.kind, VerdictKind::FirstWins);
        assert_eq!(strategy_label(&pick, &v.witnesses[0]), "w");

        let draws = TreeSpec::decide(1, vec![("a", TreeSpec::leaf(&[0, 0])), ("b", TreeSpec::leaf(&[0, 0]))])
            .build("t", 2)
            .unwrap();
        let v = zermelo(&draws).unwrap();
        assert_eq!(v.kind, VerdictKind::BothDraw);
        assert_eq!(v.witnesses.len(), 2);

        assert!(matches!(zermelo(&corpus::centipede()), Err(Error::Precondition(_))));
    }

    #[test]
    fn witnesses_hold_against_every_opponent() {
        let g = corpus::matching_pennies();
        let v = zermelo(&g).unwrap();
        assert_eq!(guaranteed_payoff(&g, &v.witnesses[0]), int(1));
        let h = to_strategic(&g, false, &Caps::default()).unwrap();
        assert_eq!(maxmin(&h, 1), int(1));
        for s in enumerate_strategies(&g, 0, &Caps::default()).unwrap() {
            assert_eq!(guaranteed_payoff(&g, &s), int(-1));
        }
    }
}
