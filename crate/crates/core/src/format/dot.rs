use std::fmt::Write;

use crate::outcome::Outcome;
use crate::strategy::JointStrategy;
use crate::tree::{ExtensiveGame, NodeKind};

/// Optional decorations for [`export_dot`].
#[derive(Clone, Copy, Debug, Default)]
pub struct DotOptions<'a> {
    /// Moves chosen by this joint strategy are drawn bold.
    pub strategy: Option<&'a JointStrategy>,
    /// Outcome to print under every node, e.g. backward-induction values.
    pub extended: Option<&'a [Outcome]>,
}

fn escape(text: &str) -> String {
    text.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz digraph of the tree, one `n<id>` node per tree node.
pub fn export_dot(game: &ExtensiveGame, options: &DotOptions<'_>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", escape(game.name()));
    out.push_str("  node [fontname=\"Helvetica\"];\n  edge [fontname=\"Helvetica\"];\n");
    for v in game.preorder().iter().copied() {
        let node = game.node(v);
        let title = node.name.clone().unwrap_or_else(|| format!("#{v}"));
        let mut lines: Vec<String> = match &node.kind {
            NodeKind::Leaf(o) => node.name.iter().cloned().chain([o.to_string()]).collect(),
            NodeKind::Decision { player, .. } => vec![title, format!("player {}", player + 1)],
        };
        if let (Some(ext), false) = (options.extended, game.is_leaf(v)) {
            lines.push(ext[v].to_string());
        }
        let label: Vec<String> = lines.iter().map(|l| escape(l)).collect();
        let shape = if game.is_leaf(v) { "box" } else { "ellipse" };
        let _ = writeln!(out, "  n{v} [label=\"{}\", shape={shape}];", label.join("\\n"));
    }
    for v in game.non_leaves() {
        let chosen = options.strategy.map(|s| s.choice_at(game, v));
        for (k, m) in game.moves(v).iter().enumerate() {
            let style = if chosen == Some(k) { ", penwidth=3" } else { "" };
            let _ = writeln!(out, "  n{v} -> n{} [label=\"{}\"{style}];", m.child, escape(&m.action));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backward::{bi_run, TieBreak};
    use crate::corpus;
    use crate::strategy::parse_strategy_label;

    fn bold_edges(dot: &str) -> Vec<&str> {
        dot.lines()
            .filter(|l| l.contains("penwidth"))
            .map(|l| l.trim().split(" [").next().unwrap())
            .collect()
    }

    #[test]
    fn emphasizes_the_joint_strategy() {
        let g = corpus::matching_pennies();
        let s = JointStrategy(vec![
            parse_strategy_label(&g, 0, "H").unwrap(),
            parse_strategy_label(&g, 1, "TH").unwrap(),
        ]);
        let dot = export_dot(
            &g,
            &DotOptions {
                strategy: Some(&s),
                extended: None,
            },
        );
        // u=0, v=1 with leaves 2,3; w=4 with leaves 5,6.
        assert_eq!(bold_edges(&dot), ["n0 -> n1", "n1 -> n3", "n4 -> n5"]);
        assert!(dot.starts_with("digraph \"mp\" {"));
        assert!(dot.trim_end().ends_with('}'));
    }

    #[test]
    fn plain_tree_has_every_edge_and_leaf_outcome() {
        let g = corpus::prisoners_dilemma();
        let dot = export_dot(&g, &DotOptions::default());
        assert!(bold_edges(&dot).is_empty());
        assert_eq!(dot.matches(" -> ").count(), g.len() - 1);
        assert!(dot.contains("label=\"(0,3)\", shape=box"));
        assert!(dot.contains("label=\"u\\nplayer 1\""));
    }

    #[test]
    fn labels_extended_outcomes() {
        let g = corpus::ultimatum(3);
        let r = bi_run(&g, &TieBreak::First).unwrap();
        let dot = export_dot(
            &g,
            &DotOptions {
                strategy: Some(&r.strategy),
                extended: Some(&r.extended),
            },
        );
        assert!(dot.contains("label=\"u\\nplayer 1\\n(3,0)\""));
        assert!(dot.contains("label=\"x0\\nplayer 2\\n(0,3)\""));
    }
}
