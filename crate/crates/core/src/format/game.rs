//! Game documents.
//!
//! ```text
//! document := "(game" STRING "players" INT node ")"
//! node     := "(p" INT [NAME] { "(" ACTION node ")" }+ ")"
//!           | "(out" [NAME] RATIONAL{players} ")"
//! ```
//!
//! Players are written `p1`, `p2`, ... Node ids are assigned in document
//! order, so the root is `0`. Action labels must be unique per node and node
//! names unique per game.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use super::{quote, read_one, ParseError, Pos, Sexp};
use crate::outcome::{fmt_rational, parse_rational, Outcome};
use crate::tree::{valid_action, valid_name, ExtensiveGame, Move, Node, NodeId, NodeKind, RawGame};
use crate::Error;

struct Builder {
    players: usize,
    nodes: Vec<Node>,
    positions: Vec<Pos>,
    names: BTreeMap<String, Pos>,
}

impl Builder {
    fn name(&mut self, atom: &Sexp) -> Result<String, ParseError> {
        let text = atom.symbol().expect("caller checked");
        if !valid_name(text) {
            return Err(ParseError::at(atom.pos(), format!("invalid node name `{text}`")));
        }
        if let Some(first) = self.names.get(text) {
            return Err(ParseError::at(
                atom.pos(),
                format!("duplicate node name `{text}` (first used at {first})"),
            ));
        }
        self.names.insert(text.to_string(), atom.pos());
        Ok(text.to_string())
    }

    fn node(&mut self, expr: &Sexp) -> Result<NodeId, ParseError> {
        let items = expr
            .list()
            .ok_or_else(|| ParseError::at(expr.pos(), format!("expected a node, found {}", expr.describe())))?;
        let head = items
            .first()
            .and_then(Sexp::symbol)
            .ok_or_else(|| ParseError::at(expr.pos(), "expected `(out ...)` or `(pK ...)`"))?;
        let id = self.nodes.len();
        self.positions.push(expr.pos());
        if head == "out" {
            self.nodes.push(Node {
                name: None,
                kind: NodeKind::Leaf(Outcome::new(Vec::new())),
            });
            self.leaf(id, expr.pos(), &items[1..])?;
        } else if let Some(player) = head.strip_prefix('p').and_then(|k| k.parse::<usize>().ok()) {
            if player == 0 || player > self.players {
                return Err(ParseError::at(
                    items[0].pos(),
                    format!("player {player} out of range 1..={}", self.players),
                ));
            }
            self.nodes.push(Node {
                name: None,
                kind: NodeKind::Decision {
                    player: player - 1,
                    moves: Vec::new(),
                },
            });
            self.decision(id, expr.pos(), &items[1..])?;
        } else {
            return Err(ParseError::at(
                items[0].pos(),
                format!("expected `out` or a player `pK`, found `{head}`"),
            ));
        }
        Ok(id)
    }

    fn leaf(&mut self, id: NodeId, pos: Pos, mut rest: &[Sexp]) -> Result<(), ParseError> {
        if let Some(first) = rest.first() {
            if first.symbol().is_some_and(|t| parse_rational(t).is_none()) {
                self.nodes[id].name = Some(self.name(first)?);
                rest = &rest[1..];
            }
        }
        let values = rest
            .iter()
            .map(|atom| {
                atom.symbol().and_then(parse_rational).ok_or_else(|| {
                    ParseError::at(atom.pos(), format!("expected a rational payoff, found {}", atom.describe()))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if values.len() != self.players {
            return Err(ParseError::at(
                pos,
                format!(
                    "outcome has {} value(s) but the game has {} player(s)",
                    values.len(),
                    self.players
                ),
            ));
        }
        self.nodes[id].kind = NodeKind::Leaf(Outcome::new(values));
        Ok(())
    }

    fn decision(&mut self, id: NodeId, pos: Pos, mut rest: &[Sexp]) -> Result<(), ParseError> {
        if let Some(first) = rest.first() {
            if first.symbol().is_some() {
                self.nodes[id].name = Some(self.name(first)?);
                rest = &rest[1..];
            }
        }
        if rest.is_empty() {
            return Err(ParseError::at(pos, "decision node needs at least one move"));
        }
        let mut seen = BTreeSet::new();
        let mut moves = Vec::with_capacity(rest.len());
        for m in rest {
            let parts = match m.list() {
                Some(parts) if parts.len() == 2 => parts,
                _ => return Err(ParseError::at(m.pos(), "expected a move `(ACTION node)`")),
            };
            let action = parts[0]
                .symbol()
                .filter(|a| valid_action(a))
                .ok_or_else(|| ParseError::at(parts[0].pos(), format!("invalid action {}", parts[0].describe())))?;
            if !seen.insert(action) {
                return Err(ParseError::at(parts[0].pos(), format!("duplicate action `{action}`")));
            }
            let child = self.node(&parts[1])?;
            moves.push(Move {
                action: action.to_string(),
                child,
            });
        }
        if let NodeKind::Decision { moves: slot, .. } = &mut self.nodes[id].kind {
            *slot = moves;
        }
        Ok(())
    }
}

pub fn parse_game(text: &str) -> Result<ExtensiveGame, ParseError> {
    let doc = read_one(text)?;
    let items = doc
        .form("game")
        .ok_or_else(|| ParseError::at(doc.pos(), "expected `(game \"name\" players N node)`"))?;
    let end = doc.pos();
    let name = match items.first() {
        Some(Sexp::Atom {
            text, quoted: true, ..
        }) => text.clone(),
        Some(other) => return Err(ParseError::at(other.pos(), "expected the game name as a string")),
        None => return Err(ParseError::at(end, "missing game name")),
    };
    match items.get(1) {
        Some(atom) if atom.symbol() == Some("players") => {}
        Some(other) => return Err(ParseError::at(other.pos(), "expected `players`")),
        None => return Err(ParseError::at(end, "missing `players`")),
    }
    let players = match items.get(2) {
        Some(atom) => atom
            .symbol()
            .and_then(|t| t.parse::<usize>().ok())
            .filter(|&n| n >= 1)
            .ok_or_else(|| ParseError::at(atom.pos(), "player count must be a positive integer"))?,
        None => return Err(ParseError::at(end, "missing player count")),
    };
    let root = items
        .get(3)
        .ok_or_else(|| ParseError::at(end, "missing game tree"))?;
    if let Some(extra) = items.get(4) {
        return Err(ParseError::at(extra.pos(), "unexpected item after the game tree"));
    }
    let mut builder = Builder {
        players,
        nodes: Vec::new(),
        positions: Vec::new(),
        names: BTreeMap::new(),
    };
    builder.node(root)?;
    let positions = builder.positions;
    let raw = RawGame {
        name,
        players,
        nodes: builder.nodes,
    };
    // The builder enforces every rule already; this maps any remaining
    // violation back to a location rather than trusting that.
    ExtensiveGame::new(raw).map_err(|e| match e {
        Error::Invalid(report) => {
            let v = &report.violations[0];
            let pos = v.node.and_then(|n| positions.get(n).copied()).unwrap_or(end);
            ParseError::at(pos, v.to_string())
        }
        other => ParseError::at(end, other.to_string()),
    })
}

/// Canonical document text; `parse_game(&print_game(g)) == g`.
pub fn print_game(game: &ExtensiveGame) -> String {
    let mut out = String::new();
    let _ = write!(out, "(game {} players {}\n  ", quote(game.name()), game.players());
    write_node(game, game.root(), 2, &mut out);
    out.push_str(")\n");
    out
}

fn write_node(game: &ExtensiveGame, v: NodeId, indent: usize, out: &mut String) {
    let name = game.node(v).name.as_deref();
    match &game.node(v).kind {
        NodeKind::Leaf(o) => {
            out.push_str("(out");
            if let Some(name) = name {
                let _ = write!(out, " {name}");
            }
            for x in o.values() {
                let _ = write!(out, " {}", fmt_rational(x));
            }
            out.push(')');
        }
        NodeKind::Decision { player, moves } => {
            let _ = write!(out, "(p{}", player + 1);
            if let Some(name) = name {
                let _ = write!(out, " {name}");
            }
            for m in moves {
                let _ = write!(out, "\n{:indent$}({} ", "", m.action, indent = indent + 2);
                write_node(game, m.child, indent + 2, out);
                out.push(')');
            }
            out.push(')');
        }
    }
}
