//! Finite rooted game trees with a turn function and leaf outcomes.
//!
//! A [`RawGame`] is any collection of node records; [`validate`] lists every
//! way it fails to be a well-formed extensive game. An [`ExtensiveGame`] can
//! only be obtained from a raw game with an empty report, so everything
//! downstream may assume the tree invariants: node `0` is the root, every
//! other node has exactly one parent, all nodes are reachable, decision nodes
//! have at least one move and leaves carry an outcome of length `players`.
//!
//! Players are numbered from `0` internally and from `1` in every textual
//! format.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use crate::error::{Caps, Error, Result};
use crate::outcome::{dense_ranks, Outcome, Rational};

pub type NodeId = usize;
pub type Player = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Move {
    pub action: String,
    pub child: NodeId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Decision { player: Player, moves: Vec<Move> },
    Leaf(Outcome),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub name: Option<String>,
    pub kind: NodeKind,
}

/// Unchecked game description. Node ids are positions in `nodes`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RawGame {
    pub name: String,
    pub players: usize,
    pub nodes: Vec<Node>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    NoPlayers,
    EmptyTree,
    NoRoot,
    MultipleRoots,
    RootNotZero,
    InDegree,
    DanglingChild,
    DuplicateChild,
    Unreachable,
    EmptyDecision,
    TurnOutOfRange,
    OutcomeArity,
    BadAction,
    DuplicateAction,
    DuplicateName,
    BadName,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            Rule::NoPlayers => "player count must be at least 1",
            Rule::EmptyTree => "tree has no nodes",
            Rule::NoRoot => "no in-degree-0 node",
            Rule::MultipleRoots => "multiple in-degree-0 nodes",
            Rule::RootNotZero => "root must have id 0",
            Rule::InDegree => "in-degree greater than 1",
            Rule::DanglingChild => "child id out of range",
            Rule::DuplicateChild => "duplicate child in child list",
            Rule::Unreachable => "node not reachable from the root",
            Rule::EmptyDecision => "decision node without moves",
            Rule::TurnOutOfRange => "turn player out of range",
            Rule::OutcomeArity => "outcome length differs from player count",
            Rule::BadAction => "action label must be a non-empty token",
            Rule::DuplicateAction => "duplicate action label at node",
            Rule::DuplicateName => "duplicate node name",
            Rule::BadName => "node name must be a token that is not a number",
        };
        f.write_str(text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub node: Option<NodeId>,
    pub node_name: Option<String>,
    pub rule: Rule,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.node, &self.node_name) {
            (Some(id), Some(name)) => write!(f, "node #{id}({name}): ")?,
            (Some(id), None) => write!(f, "node #{id}: ")?,
            _ => {}
        }
        write!(f, "{}", self.rule)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, rule: Rule) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub(crate) fn valid_action(action: &str) -> bool {
    !action.is_empty()
        && action
            .chars()
            .all(|c| !c.is_whitespace() && !matches!(c, '(' | ')' | '"' | ';' | '.'))
}

pub(crate) fn valid_name(name: &str) -> bool {
    valid_action(name)
        && !name.starts_with('#')
        && !name.starts_with(|c: char| c.is_ascii_digit() || c == '-')
}

/// Every invariant violation of `raw`, in node order. Never fails.
pub fn validate(raw: &RawGame) -> ValidationReport {
    let mut out = Vec::new();
    let mut push = |node: Option<NodeId>, rule: Rule, detail: String| {
        let node_name = node.and_then(|id| raw.nodes.get(id)).and_then(|n| n.name.clone());
        out.push(Violation {
            node,
            node_name,
            rule,
            detail,
        });
    };

    if raw.players == 0 {
        push(None, Rule::NoPlayers, String::new());
    }
    if raw.nodes.is_empty() {
        push(None, Rule::EmptyTree, String::new());
        return ValidationReport { violations: out };
    }

    let len = raw.nodes.len();
    let mut indegree = vec![0usize; len];
    let mut names: BTreeMap<&str, NodeId> = BTreeMap::new();
    for (id, node) in raw.nodes.iter().enumerate() {
        if let Some(name) = &node.name {
            if !valid_name(name) {
                push(Some(id), Rule::BadName, format!("{name:?}"));
            }
            if let Some(first) = names.insert(name.as_str(), id) {
                push(Some(id), Rule::DuplicateName, format!("also used by #{first}"));
            }
        }
        match &node.kind {
            NodeKind::Leaf(outcome) => {
                if outcome.len() != raw.players {
                    push(
                        Some(id),
                        Rule::OutcomeArity,
                        format!("{} values for {} players", outcome.len(), raw.players),
                    );
                }
            }
            NodeKind::Decision { player, moves } => {
                if *player >= raw.players {
                    push(
                        Some(id),
                        Rule::TurnOutOfRange,
                        format!("player {} of {}", player + 1, raw.players),
                    );
                }
                if moves.is_empty() {
                    push(Some(id), Rule::EmptyDecision, String::new());
                }
                let mut seen_children = HashSet::new();
                let mut seen_actions = HashSet::new();
                for m in moves {
                    if !valid_action(&m.action) {
                        push(Some(id), Rule::BadAction, format!("{:?}", m.action));
                    } else if !seen_actions.insert(m.action.as_str()) {
                        push(Some(id), Rule::DuplicateAction, m.action.clone());
                    }
                    if m.child >= len {
                        push(Some(id), Rule::DanglingChild, format!("child #{}", m.child));
                        continue;
                    }
                    if !seen_children.insert(m.child) {
                        push(Some(id), Rule::DuplicateChild, format!("child #{}", m.child));
                        continue;
                    }
                    indegree[m.child] += 1;
                }
            }
        }
    }

    let roots: Vec<NodeId> = (0..len).filter(|&v| indegree[v] == 0).collect();
    match roots.len() {
        0 => push(None, Rule::NoRoot, String::new()),
        1 => {}
        _ => {
            let ids: Vec<String> = roots.iter().map(|r| format!("#{r}")).collect();
            push(Some(roots[1]), Rule::MultipleRoots, ids.join(", "));
        }
    }
    if roots.first().is_some_and(|&r| r != 0) {
        push(Some(roots[0]), Rule::RootNotZero, String::new());
    }
    for (v, &d) in indegree.iter().enumerate() {
        if d > 1 {
            push(Some(v), Rule::InDegree, format!("in-degree {d}"));
        }
    }

    // Reachability from node 0 (cycles show up as unreachable components or
    // as a missing root).
    let mut reached = vec![false; len];
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        if reached[v] {
            continue;
        }
        reached[v] = true;
        if let NodeKind::Decision { moves, .. } = &raw.nodes[v].kind {
            stack.extend(moves.iter().map(|m| m.child).filter(|&c| c < len));
        }
    }
    for (v, &r) in reached.iter().enumerate() {
        if !r {
            push(Some(v), Rule::Unreachable, String::new());
        }
    }

    ValidationReport { violations: out }
}

/// A validated finite extensive game with perfect information.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensiveGame {
    name: String,
    players: usize,
    nodes: Vec<Node>,
    parent: Vec<Option<NodeId>>,
    preorder: Vec<NodeId>,
    pre_pos: Vec<usize>,
    size: Vec<usize>,
    postorder: Vec<NodeId>,
    decision_nodes: Vec<Vec<NodeId>>,
    slot: Vec<usize>,
    leaves: Vec<NodeId>,
    // ranks[v][i]: dense rank of o_i(v) among all leaf values of player i.
    ranks: Vec<Vec<u32>>,
}

impl ExtensiveGame {
    pub fn new(raw: RawGame) -> Result<Self> {
        let report = validate(&raw);
        if !report.is_empty() {
            return Err(Error::Invalid(report));
        }
        Ok(Self::from_valid(raw))
    }

    fn from_valid(raw: RawGame) -> Self {
        let RawGame {
            name,
            players,
            nodes,
        } = raw;
        let len = nodes.len();
        let mut parent = vec![None; len];
        for (v, node) in nodes.iter().enumerate() {
            if let NodeKind::Decision { moves, .. } = &node.kind {
                for m in moves {
                    parent[m.child] = Some(v);
                }
            }
        }

        let mut preorder = Vec::with_capacity(len);
        let mut postorder = Vec::with_capacity(len);
        // (node, next move index)
        let mut stack: Vec<(NodeId, usize)> = vec![(0, 0)];
        preorder.push(0);
        while let Some((v, k)) = stack.pop() {
            let moves: &[Move] = match &nodes[v].kind {
                NodeKind::Decision { moves, .. } => moves,
                NodeKind::Leaf(_) => &[],
            };
            if k < moves.len() {
                stack.push((v, k + 1));
                let c = moves[k].child;
                preorder.push(c);
                stack.push((c, 0));
            } else {
                postorder.push(v);
            }
        }

        let mut pre_pos = vec![0; len];
        for (k, &v) in preorder.iter().enumerate() {
            pre_pos[v] = k;
        }
        let mut size = vec![1; len];
        for &v in &postorder {
            if let Some(p) = parent[v] {
                size[p] += size[v];
            }
        }

        let mut decision_nodes = vec![Vec::new(); players];
        let mut slot = vec![usize::MAX; len];
        let mut leaves = Vec::new();
        for &v in &preorder {
            match &nodes[v].kind {
                NodeKind::Decision { player, .. } => {
                    slot[v] = decision_nodes[*player].len();
                    decision_nodes[*player].push(v);
                }
                NodeKind::Leaf(_) => leaves.push(v),
            }
        }

        let mut ranks = vec![Vec::new(); len];
        for i in 0..players {
            let values: Vec<&Rational> = leaves
                .iter()
                .map(|&z| match &nodes[z].kind {
                    NodeKind::Leaf(o) => o.get(i),
                    NodeKind::Decision { .. } => unreachable!(),
                })
                .collect();
            for (&z, r) in leaves.iter().zip(dense_ranks(&values)) {
                ranks[z].push(r);
            }
        }

        ExtensiveGame {
            name,
            players,
            nodes,
            parent,
            preorder,
            pre_pos,
            size,
            postorder,
            decision_nodes,
            slot,
            leaves,
            ranks,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn players(&self) -> usize {
        self.players
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> NodeId {
        0
    }

    pub fn node(&self, v: NodeId) -> &Node {
        &self.nodes[v]
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn is_leaf(&self, v: NodeId) -> bool {
        matches!(self.nodes[v].kind, NodeKind::Leaf(_))
    }

    pub fn turn(&self, v: NodeId) -> Option<Player> {
        match self.nodes[v].kind {
            NodeKind::Decision { player, .. } => Some(player),
            NodeKind::Leaf(_) => None,
        }
    }

    pub fn moves(&self, v: NodeId) -> &[Move] {
        match &self.nodes[v].kind {
            NodeKind::Decision { moves, .. } => moves,
            NodeKind::Leaf(_) => &[],
        }
    }

    pub fn child(&self, v: NodeId, k: usize) -> NodeId {
        self.moves(v)[k].child
    }

    pub fn children(&self, v: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.moves(v).iter().map(|m| m.child)
    }

    pub fn arity(&self, v: NodeId) -> usize {
        self.moves(v).len()
    }

    /// Position of `child` among the moves of `v`.
    pub fn child_index(&self, v: NodeId, child: NodeId) -> Option<usize> {
        self.moves(v).iter().position(|m| m.child == child)
    }

    pub fn action_index(&self, v: NodeId, action: &str) -> Option<usize> {
        self.moves(v).iter().position(|m| m.action == action)
    }

    pub fn outcome(&self, leaf: NodeId) -> &Outcome {
        match &self.nodes[leaf].kind {
            NodeKind::Leaf(o) => o,
            NodeKind::Decision { .. } => panic!("node #{leaf} is not a leaf"),
        }
    }

    /// Rank of `o_player(leaf)` among all leaf values of that player; the
    /// order of ranks is the order of payoffs.
    pub fn rank(&self, leaf: NodeId, player: Player) -> u32 {
        self.ranks[leaf][player]
    }

    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        self.parent[v]
    }

    pub fn preorder(&self) -> &[NodeId] {
        &self.preorder
    }

    /// Children before parents, siblings in declaration order.
    pub fn postorder(&self) -> &[NodeId] {
        &self.postorder
    }

    /// Nodes of the subtree rooted at `v`, in preorder.
    pub fn subtree(&self, v: NodeId) -> &[NodeId] {
        let start = self.pre_pos[v];
        &self.preorder[start..start + self.size[v]]
    }

    pub fn subtree_size(&self, v: NodeId) -> usize {
        self.size[v]
    }

    pub fn is_descendant(&self, w: NodeId, v: NodeId) -> bool {
        let (pw, pv) = (self.pre_pos[w], self.pre_pos[v]);
        pw >= pv && pw < pv + self.size[v]
    }

    /// Decision nodes of `player` in preorder (the set `V_i`).
    pub fn decision_nodes(&self, player: Player) -> &[NodeId] {
        &self.decision_nodes[player]
    }

    /// Index of decision node `v` within `decision_nodes(turn(v))`.
    pub fn slot(&self, v: NodeId) -> usize {
        self.slot[v]
    }

    pub fn leaves(&self) -> &[NodeId] {
        &self.leaves
    }

    pub fn non_leaves(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.preorder.iter().copied().filter(|&v| !self.is_leaf(v))
    }

    /// Path from the root to `v`, inclusive.
    pub fn path_to(&self, v: NodeId) -> Vec<NodeId> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }

    pub fn find_node(&self, name: &str) -> Option<NodeId> {
        self.nodes.iter().position(|n| n.name.as_deref() == Some(name))
    }

    /// `#id` or `#id(name)`.
    pub fn node_ref(&self, v: NodeId) -> String {
        match &self.nodes[v].name {
            Some(name) => format!("#{v}({name})"),
            None => format!("#{v}"),
        }
    }

    /// Distinct leaf outcome vectors in leaf preorder.
    pub fn distinct_outcomes(&self) -> Vec<&Outcome> {
        let mut seen = HashSet::new();
        self.leaves
            .iter()
            .map(|&z| self.outcome(z))
            .filter(|o| seen.insert(*o))
            .collect()
    }

    pub fn to_raw(&self) -> RawGame {
        RawGame {
            name: self.name.clone(),
            players: self.players,
            nodes: self.nodes.clone(),
        }
    }

    /// The same tree with every leaf outcome replaced by `f(outcome)`.
    pub fn map_outcomes(&self, mut f: impl FnMut(&Outcome) -> Outcome) -> Result<Self> {
        let mut raw = self.to_raw();
        for node in &mut raw.nodes {
            if let NodeKind::Leaf(o) = &mut node.kind {
                *o = f(o);
            }
        }
        ExtensiveGame::new(raw)
    }
}

/// Nested constructor for trees, numbered in preorder when built.
#[derive(Clone, Debug)]
pub enum TreeSpec {
    Leaf {
        name: Option<String>,
        outcome: Outcome,
    },
    Decision {
        name: Option<String>,
        player: Player,
        moves: Vec<(String, TreeSpec)>,
    },
}

impl TreeSpec {
    pub fn leaf(values: &[i64]) -> Self {
        TreeSpec::Leaf {
            name: None,
            outcome: Outcome::from_ints(values),
        }
    }

    pub fn leaf_outcome(outcome: Outcome) -> Self {
        TreeSpec::Leaf {
            name: None,
            outcome,
        }
    }

    /// Decision node of zero-based `player`.
    pub fn decide<S: Into<String>>(player: Player, moves: Vec<(S, TreeSpec)>) -> Self {
        TreeSpec::Decision {
            name: None,
            player,
            moves: moves.into_iter().map(|(a, t)| (a.into(), t)).collect(),
        }
    }

    pub fn named(mut self, new_name: &str) -> Self {
        match &mut self {
            TreeSpec::Leaf { name, .. } | TreeSpec::Decision { name, .. } => {
                *name = Some(new_name.to_string())
            }
        }
        self
    }

    pub fn into_raw(self, name: &str, players: usize) -> RawGame {
        fn walk(spec: TreeSpec, nodes: &mut Vec<Node>) -> NodeId {
            let id = nodes.len();
            match spec {
                TreeSpec::Leaf { name, outcome } => {
                    nodes.push(Node {
                        name,
                        kind: NodeKind::Leaf(outcome),
                    });
                }
                TreeSpec::Decision {
                    name,
                    player,
                    moves,
                } => {
                    nodes.push(Node {
                        name,
                        kind: NodeKind::Decision {
                            player,
                            moves: Vec::new(),
                        },
                    });
                    let mut built = Vec::with_capacity(moves.len());
                    for (action, sub) in moves {
                        let child = walk(sub, nodes);
                        built.push(Move { action, child });
                    }
                    if let NodeKind::Decision { moves, .. } = &mut nodes[id].kind {
                        *moves = built;
                    }
                }
            }
            id
        }
        let mut nodes = Vec::new();
        walk(self, &mut nodes);
        RawGame {
            name: name.to_string(),
            players,
            nodes,
        }
    }

    pub fn build(self, name: &str, players: usize) -> Result<ExtensiveGame> {
        ExtensiveGame::new(self.into_raw(name, players))
    }
}

/// A subgame together with the map from its node ids to the parent game's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgame {
    pub game: ExtensiveGame,
    /// `translation[new_id] = original_id`.
    pub translation: Vec<NodeId>,
}

impl Subgame {
    pub fn original(&self, v: NodeId) -> NodeId {
        self.translation[v]
    }

    pub fn local(&self, original: NodeId) -> Option<NodeId> {
        self.translation.iter().position(|&o| o == original)
    }
}

/// The subgame `G^w`: the subtree at `node` with restricted turn and outcome
/// functions and all `n` players kept. New ids put the subgame root first and
/// keep the relative order of the remaining original ids, so the subgame at
/// the root is the identity.
pub fn subgame(game: &ExtensiveGame, node: NodeId) -> Result<Subgame> {
    if node >= game.len() {
        return Err(Error::Domain(format!("unknown node #{node}")));
    }
    if game.is_leaf(node) {
        return Err(Error::Domain(format!(
            "node {} is a leaf; subgames are rooted at decision nodes",
            game.node_ref(node)
        )));
    }
    let mut members: Vec<NodeId> = game.subtree(node).iter().copied().filter(|&v| v != node).collect();
    members.sort_unstable();
    let mut translation = Vec::with_capacity(members.len() + 1);
    translation.push(node);
    translation.extend(members);
    let mut local = vec![usize::MAX; game.len()];
    for (new, &old) in translation.iter().enumerate() {
        local[old] = new;
    }
    let nodes = translation
        .iter()
        .map(|&old| {
            let n = game.node(old);
            let kind = match &n.kind {
                NodeKind::Leaf(o) => NodeKind::Leaf(o.clone()),
                NodeKind::Decision { player, moves } => NodeKind::Decision {
                    player: *player,
                    moves: moves
                        .iter()
                        .map(|m| Move {
                            action: m.action.clone(),
                            child: local[m.child],
                        })
                        .collect(),
                },
            };
            Node {
                name: n.name.clone(),
                kind,
            }
        })
        .collect();
    let raw = RawGame {
        name: game.name().to_string(),
        players: game.players(),
        nodes,
    };
    Ok(Subgame {
        game: ExtensiveGame::from_valid(raw),
        translation,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameClassification {
    pub generic: bool,
    pub without_relevant_ties: bool,
    pub zero_sum: bool,
    pub strictly_competitive: bool,
    pub win_or_lose: bool,
    pub chess_like: bool,
    /// `None` when the strategic form exceeds `Caps::tdi`.
    pub tdi: Option<bool>,
    pub outcome_count: usize,
}

/// `o_i` is injective over the leaves of every subtree whose root `i` moves at.
pub fn without_relevant_ties(game: &ExtensiveGame) -> bool {
    game.non_leaves().all(|u| {
        let i = game.turn(u).expect("decision node");
        let mut seen = HashSet::new();
        game.subtree(u)
            .iter()
            .filter(|&&z| game.is_leaf(z))
            .all(|&z| seen.insert(game.rank(z, i)))
    })
}

pub fn is_generic(game: &ExtensiveGame) -> bool {
    (0..game.players()).all(|i| {
        let mut seen = HashSet::new();
        game.leaves().iter().all(|&z| seen.insert(game.rank(z, i)))
    })
}

/// Two-player strict competitiveness, decided over pairs of leaf outcomes.
/// Every leaf is the play of some joint strategy, so the payoff ranges of the
/// strategic form are exactly the leaf values.
pub fn is_strictly_competitive(game: &ExtensiveGame) -> bool {
    if game.players() != 2 {
        return false;
    }
    let distinct: BTreeSet<(u32, u32)> = game
        .leaves()
        .iter()
        .map(|&z| (game.rank(z, 0), game.rank(z, 1)))
        .collect();
    distinct.iter().all(|a| {
        distinct
            .iter()
            .all(|b| (a.0 >= b.0) == (a.1 <= b.1))
    })
}

pub fn is_zero_sum(game: &ExtensiveGame) -> bool {
    game.players() == 2
        && game.leaves().iter().all(|&z| {
            let o = game.outcome(z);
            (o.get(0) + o.get(1)) == Rational::from_integer(0.into())
        })
}

fn outcomes_within(game: &ExtensiveGame, alphabet: &[[i64; 2]]) -> bool {
    game.players() == 2
        && game
            .leaves()
            .iter()
            .all(|&z| alphabet.iter().any(|a| game.outcome(z).is_ints(a)))
}

pub fn is_win_or_lose(game: &ExtensiveGame) -> bool {
    outcomes_within(game, &[[1, -1], [-1, 1]])
}

pub fn is_chess_like(game: &ExtensiveGame) -> bool {
    outcomes_within(game, &[[1, -1], [0, 0], [-1, 1]])
}

pub fn classify(game: &ExtensiveGame, caps: &Caps) -> GameClassification {
    let tdi = crate::strategy::joint_strategy_count(game)
        .try_into()
        .ok()
        .filter(|&n: &usize| n <= caps.tdi)
        .and_then(|_| crate::strategic::to_strategic(game, false, caps).ok())
        .map(|h| crate::strategic::tdi_check(&h).holds);
    let zero_sum = is_zero_sum(game);
    GameClassification {
        generic: is_generic(game),
        without_relevant_ties: without_relevant_ties(game),
        zero_sum,
        strictly_competitive: is_strictly_competitive(game),
        win_or_lose: zero_sum && is_win_or_lose(game),
        chess_like: zero_sum && is_chess_like(game),
        tdi,
        outcome_count: game.distinct_outcomes().len(),
    }
}
