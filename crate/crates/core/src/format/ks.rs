//! Knowledge-system documents.
//!
//! ```text
//! (ks
//!   (states a b)
//!   (assign a (1 (u H)) (2 (v T) (w H)))
//!   (assign b (1 (u T)) (2 (v T) (w H)))
//!   (partition 1 (block a) (block b))
//!   (partition 2 (block a b)))
//! ```
//!
//! Every state gets one `assign` form listing, for every player, the action
//! taken at each of that player's decision nodes. Nodes are referred to by
//! name or as `#id`. Every player gets one `partition` form.

use std::collections::BTreeMap;
use std::fmt::Write;

use super::{read_one, ParseError, Sexp};
use crate::epistemic::{KnowledgeSystem, State};
use crate::error::{Error, Result};
use crate::strategy::{strategy_from_moves, JointStrategy, Strategy};
use crate::tree::{ExtensiveGame, NodeId};

fn player_index(atom: &Sexp, players: usize) -> Result<usize, ParseError> {
    atom.symbol()
        .and_then(|t| t.parse::<usize>().ok())
        .filter(|&i| (1..=players).contains(&i))
        .map(|i| i - 1)
        .ok_or_else(|| ParseError::at(atom.pos(), format!("expected a player in 1..={players}")))
}

fn node_ref(game: &ExtensiveGame, atom: &Sexp) -> Result<NodeId, ParseError> {
    let text = atom
        .symbol()
        .ok_or_else(|| ParseError::at(atom.pos(), "expected a node name or `#id`"))?;
    let found = match text.strip_prefix('#') {
        Some(id) => id.parse::<usize>().ok().filter(|&v| v < game.len()),
        None => game.find_node(text),
    };
    found.ok_or_else(|| ParseError::at(atom.pos(), format!("unknown node `{text}`")))
}

fn state_ref(states: &BTreeMap<String, State>, atom: &Sexp) -> Result<State, ParseError> {
    atom.symbol()
        .and_then(|t| states.get(t).copied())
        .ok_or_else(|| ParseError::at(atom.pos(), format!("unknown state {}", atom.describe())))
}

fn strategy(game: &ExtensiveGame, entry: &Sexp) -> Result<Strategy, ParseError> {
    let items = entry
        .list()
        .filter(|items| !items.is_empty())
        .ok_or_else(|| ParseError::at(entry.pos(), "expected `(PLAYER (node action)...)`"))?;
    let player = player_index(&items[0], game.players())?;
    let mut moves = Vec::new();
    for m in &items[1..] {
        let pair = match m.list() {
            Some(pair) if pair.len() == 2 => pair,
            _ => return Err(ParseError::at(m.pos(), "expected `(node action)`")),
        };
        let v = node_ref(game, &pair[0])?;
        let action = pair[1]
            .symbol()
            .ok_or_else(|| ParseError::at(pair[1].pos(), "expected an action"))?;
        moves.push((v, action.to_string()));
    }
    strategy_from_moves(game, player, &moves).map_err(|e| ParseError::at(entry.pos(), e.to_string()))
}

/// Parses a knowledge system for `game`. Syntax errors and references to
/// unknown states, nodes or actions are parse errors; a well-formed
/// document violating the partition or own-strategy rules is an invalid
/// knowledge system.
pub fn parse_knowledge_system(text: &str, game: &ExtensiveGame) -> Result<KnowledgeSystem> {
    let doc = read_one(text)?;
    let forms = doc
        .form("ks")
        .ok_or_else(|| ParseError::at(doc.pos(), "expected `(ks ...)`"))?;
    let mut names = Vec::new();
    let mut index = BTreeMap::new();
    let mut assigned: Vec<Option<JointStrategy>> = Vec::new();
    let mut partitions: Vec<Option<Vec<Vec<State>>>> = vec![None; game.players()];
    let mut states_seen = false;
    for form in forms {
        if let Some(rest) = form.form("states") {
            if states_seen {
                return Err(ParseError::at(form.pos(), "duplicate `states` form").into());
            }
            states_seen = true;
            for atom in rest {
                let name = atom
                    .symbol()
                    .ok_or_else(|| ParseError::at(atom.pos(), "expected a state name"))?;
                if index.insert(name.to_string(), names.len()).is_some() {
                    return Err(ParseError::at(atom.pos(), format!("duplicate state `{name}`")).into());
                }
                names.push(name.to_string());
            }
            assigned = vec![None; names.len()];
        } else if let Some(rest) = form.form("assign") {
            let w = rest
                .first()
                .ok_or_else(|| ParseError::at(form.pos(), "missing state"))
                .and_then(|a| state_ref(&index, a))?;
            if assigned[w].is_some() {
                return Err(ParseError::at(form.pos(), format!("state `{}` assigned twice", names[w])).into());
            }
            let mut per_player: Vec<Option<Strategy>> = vec![None; game.players()];
            for entry in &rest[1..] {
                let s = strategy(game, entry)?;
                let i = s.player;
                if per_player[i].replace(s).is_some() {
                    return Err(ParseError::at(entry.pos(), format!("player {} listed twice", i + 1)).into());
                }
            }
            let joint = per_player
                .into_iter()
                .enumerate()
                .map(|(i, s)| match s {
                    Some(s) => Ok(s),
                    // A player without decision nodes may be left out.
                    None if game.decision_nodes(i).is_empty() => Ok(Strategy::first(game, i)),
                    None => Err(ParseError::at(form.pos(), format!("no strategy for player {}", i + 1))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            assigned[w] = Some(JointStrategy(joint));
        } else if let Some(rest) = form.form("partition") {
            let i = rest
                .first()
                .ok_or_else(|| ParseError::at(form.pos(), "missing player"))
                .and_then(|a| player_index(a, game.players()))?;
            if partitions[i].is_some() {
                return Err(ParseError::at(form.pos(), format!("duplicate partition for player {}", i + 1)).into());
            }
            let blocks = rest[1..]
                .iter()
                .map(|b| {
                    let members = b
                        .form("block")
                        .ok_or_else(|| ParseError::at(b.pos(), "expected `(block state...)`"))?;
                    members.iter().map(|a| state_ref(&index, a)).collect()
                })
                .collect::<Result<Vec<Vec<State>>, ParseError>>()?;
            partitions[i] = Some(blocks);
        } else {
            return Err(ParseError::at(form.pos(), "expected `states`, `assign` or `partition`").into());
        }
    }
    let end = doc.pos();
    if !states_seen {
        return Err(ParseError::at(end, "missing `states` form").into());
    }
    let assignment = assigned
        .into_iter()
        .enumerate()
        .map(|(w, s)| s.ok_or_else(|| ParseError::at(end, format!("state `{}` has no assignment", names[w]))))
        .collect::<Result<Vec<_>, _>>()?;
    let partitions = partitions
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.ok_or_else(|| Error::InvalidKnowledgeSystem(format!("no partition for player {}", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    KnowledgeSystem::new(game, names, assignment, partitions)
}

fn node_text(game: &ExtensiveGame, v: NodeId) -> String {
    game.node(v).name.clone().unwrap_or_else(|| format!("#{v}"))
}

pub fn print_knowledge_system(ks: &KnowledgeSystem, game: &ExtensiveGame) -> String {
    let mut out = String::from("(ks\n  (states");
    for name in ks.state_names() {
        let _ = write!(out, " {name}");
    }
    out.push(')');
    for (w, name) in ks.state_names().iter().enumerate() {
        let _ = write!(out, "\n  (assign {name}");
        for s in &ks.assignment(w).0 {
            let _ = write!(out, " ({}", s.player + 1);
            for (v, action) in s.moves(game) {
                let _ = write!(out, " ({} {action})", node_text(game, v));
            }
            out.push(')');
        }
        out.push(')');
    }
    for i in 0..ks.players() {
        let _ = write!(out, "\n  (partition {}", i + 1);
        for block in ks.partition(i) {
            out.push_str(" (block");
            for &w in block {
                let _ = write!(out, " {}", ks.state_names()[w]);
            }
            out.push(')');
        }
        out.push(')');
    }
    out.push_str(")\n");
    out
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::corpus;
    use crate::epistemic::random_system;

    const MP: &str = "
; two states that player 1 tells apart and player 2 does not
(ks
  (states a b)
  (assign a (1 (u H)) (2 (v T) (w H)))
  (assign b (1 (u T)) (2 (#1 T) (#4 H)))
  (partition 1 (block a) (block b))
  (partition 2 (block a b)))";

    #[test]
    fn parses_the_example() {
        let g = corpus::matching_pennies();
        let ks = parse_knowledge_system(MP, &g).unwrap();
        assert_eq!(ks.len(), 2);
        assert_eq!(ks.assignment(0).player(1), ks.assignment(1).player(1));
        assert_eq!(ks.assignment(1).choice_at(&g, 0), 1);
        assert_eq!(ks.partition(1), &[vec![0, 1]]);
    }

    #[test]
    fn block_constancy_is_a_validation_error() {
        let g = corpus::matching_pennies();
        let text = MP.replace("(partition 1 (block a) (block b))", "(partition 1 (block a b))");
        assert!(matches!(
            parse_knowledge_system(&text, &g),
            Err(Error::InvalidKnowledgeSystem(_))
        ));
    }

    #[test]
    fn reference_errors_carry_locations() {
        let g = corpus::matching_pennies();
        for (needle, replacement) in [
            ("(u H)) (2 (v T)", "(u X)) (2 (v T)"),
            ("(#1 T)", "(#9 T)"),
            ("(block a b)", "(block a c)"),
            ("(assign b", "(assign a"),
        ] {
            let text = MP.replacen(needle, replacement, 1);
            match parse_knowledge_system(&text, &g) {
                Err(Error::Parse(e)) => assert!(e.line > 1, "{needle}: {e}"),
                other => panic!("{needle}: {other:?}"),
            }
        }
    }

    #[test]
    fn printer_round_trips_random_systems() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for g in [corpus::matching_pennies(), corpus::spe_elimination(), corpus::centipede()] {
            for n in 1..=5 {
                let ks = random_system(&g, n, None, &mut rng).unwrap();
                let text = print_knowledge_system(&ks, &g);
                assert_eq!(parse_knowledge_system(&text, &g).unwrap(), ks, "{text}");
            }
        }
    }
}
