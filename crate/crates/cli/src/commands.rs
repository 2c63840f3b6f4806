//! One function per subcommand, each returning the `result` part of the
//! report.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde_json::{json, Value};
use treegame::backward::{bi_enumerate, bi_run, ebi_run, TieBreak};
use treegame::competitive::{lose_removal_check, sc_iterate, zermelo as decide, VerdictKind};
use treegame::dynamics::{fip_analysis, improvement_path, weak_potential, FipResult, PathStatus, Scheduler};
use treegame::epistemic::{ckr_check, CkrVerdict, Event, KnowledgeSystem};
use treegame::format::{export_dot, parse_knowledge_system, DotOptions};
use treegame::strategic::{
    iewds as eliminate, maxmin_in, nash_equilibria, outcome_ids, to_strategic, Policy, Profile, ScriptStep, Support,
};
use treegame::strategy::{parse_strategy_label, strategy_from_index, strategy_label};
use treegame::tree::classify as classes;
use treegame::{Caps, Error, ExtensiveGame, JointStrategy, StrategicGame};

pub enum Failure {
    /// Malformed flag values; reported like other usage errors.
    Usage(String),
    Run(Error),
}

impl Failure {
    pub fn into_output(self) -> crate::Output {
        match self {
            Failure::Usage(message) => crate::Output::failure(2, format!("error: {message}\n")),
            Failure::Run(e) => crate::Output::failure(1, format!("error: {e}\n")),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e)
    }
}

type Result<T> = std::result::Result<T, Failure>;

fn usage<T>(message: impl Into<String>) -> Result<T> {
    Err(Failure::Usage(message.into()))
}

fn joint_label(g: &ExtensiveGame, s: &JointStrategy) -> String {
    let parts: Vec<String> = s.0.iter().map(|t| strategy_label(g, t)).collect();
    format!("({})", parts.join(","))
}

fn count(n: &num_bigint::BigUint) -> Value {
    match n.to_u64() {
        Some(k) => json!(k),
        None => json!(n.to_string()),
    }
}

fn cell(h: &StrategicGame, p: &[usize]) -> Value {
    json!({"profile": h.profile_label(p), "outcome": h.outcome(p).to_string()})
}

fn survivors(h: &StrategicGame, support: &Support) -> Value {
    Value::Array(
        support
            .sets
            .iter()
            .enumerate()
            .map(|(i, set)| {
                json!({
                    "player": i + 1,
                    "strategies": set.iter().map(|&k| h.label(i, k)).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

fn outcomes_of(h: &StrategicGame, support: &Support) -> Value {
    let ids = outcome_ids(h, support);
    Value::Array(ids.iter().map(|&k| json!(h.outcomes()[k].to_string())).collect())
}

fn split_list(text: &str) -> Vec<&str> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

// `PLAYER:LABEL` or a bare label.
fn player_prefixed(item: &str, players: usize) -> Result<(Option<usize>, &str)> {
    match item.split_once(':') {
        Some((p, label)) if !p.is_empty() && p.chars().all(|c| c.is_ascii_digit()) => match p.parse::<usize>() {
            Ok(k) if (1..=players).contains(&k) => Ok((Some(k - 1), label)),
            _ => usage(format!("no player {p} in this game")),
        },
        _ => Ok((None, item)),
    }
}

fn profile_of(h: &StrategicGame, text: &str) -> Result<Profile> {
    let labels = split_list(text);
    match h.parse_profile(&labels) {
        Some(p) => Ok(p),
        None => usage(format!(
            "`{text}` is not a profile: give {} comma-separated strategy labels",
            h.players()
        )),
    }
}

fn joint_of(g: &ExtensiveGame, text: &str) -> Result<JointStrategy> {
    let labels = split_list(text);
    if labels.len() != g.players() {
        return usage(format!("expected {} strategy labels, got {}", g.players(), labels.len()));
    }
    labels
        .iter()
        .enumerate()
        .map(|(i, l)| match parse_strategy_label(g, i, l) {
            Some(s) => Ok(s),
            None => usage(format!("`{l}` is not a strategy of player {}", i + 1)),
        })
        .collect::<Result<Vec<_>>>()
        .map(JointStrategy)
}

fn seed(text: &str) -> Option<u64> {
    text.strip_prefix("seed:").and_then(|s| s.parse().ok())
}

pub fn validate(g: &ExtensiveGame) -> Value {
    json!({
        "valid": true,
        "players": g.players(),
        "nodes": g.len(),
        "leaves": g.leaves().len(),
        "decision_nodes": (0..g.players()).map(|i| g.decision_nodes(i).len()).collect::<Vec<_>>(),
    })
}

pub fn classify(g: &ExtensiveGame, caps: &Caps) -> Value {
    let c = classes(g, caps);
    json!({
        "generic": c.generic,
        "without_relevant_ties": c.without_relevant_ties,
        "zero_sum": c.zero_sum,
        "strictly_competitive": c.strictly_competitive,
        "win_or_lose": c.win_or_lose,
        "chess_like": c.chess_like,
        "tdi": match c.tdi {
            Some(b) => json!(b),
            None => json!("not evaluated"),
        },
        "outcome_count": c.outcome_count,
    })
}

pub fn strategic(g: &ExtensiveGame, reduced: bool, caps: &Caps) -> Result<Value> {
    let h = to_strategic(g, reduced, caps)?;
    let full = Support::full(&h);
    Ok(json!({
        "reduced": reduced,
        "strategies": survivors(&h, &full),
        "cells": full.profiles().map(|p| cell(&h, &p)).collect::<Vec<_>>(),
    }))
}

pub fn nash(g: &ExtensiveGame, reduced: bool, caps: &Caps) -> Result<Value> {
    let h = to_strategic(g, reduced, caps)?;
    let ne = nash_equilibria(&h, caps)?;
    Ok(json!({
        "reduced": reduced,
        "count": ne.len(),
        "equilibria": ne.iter().map(|p| cell(&h, p)).collect::<Vec<_>>(),
    }))
}

pub fn spe(g: &ExtensiveGame, enumerate: bool, caps: &Caps) -> Result<Value> {
    let set = bi_enumerate(g, caps)?;
    let mut out = json!({
        "count": count(&set.count),
        "outcomes": set.nodes[g.root()]
            .iter()
            .map(|e| json!({"outcome": set.outcomes[e.outcome].to_string(), "count": count(&e.count)}))
            .collect::<Vec<_>>(),
    });
    if enumerate {
        out["equilibria"] = match &set.explicit {
            Some(list) => Value::Array(
                list.iter()
                    .map(|s| json!({"profile": joint_label(g, s), "outcome": treegame::strategy::outcome(g, s).to_string()}))
                    .collect(),
            ),
            None => json!(format!("not listed: more than {} equilibria", caps.spe_expansion)),
        };
    }
    Ok(out)
}

pub fn bi(g: &ExtensiveGame, tie_break: &str, choose: &[String]) -> Result<Value> {
    let tie = if !choose.is_empty() {
        if tie_break != "first" {
            return usage("--choose cannot be combined with a seeded tie-break");
        }
        let mut script = BTreeMap::new();
        for item in choose {
            let Some((node, action)) = item.split_once('=') else {
                return usage(format!("`{item}` is not NODE=ACTION"));
            };
            let v = match node.strip_prefix('#') {
                Some(id) => id.parse::<usize>().ok().filter(|&v| v < g.len()),
                None => g.find_node(node),
            };
            let Some(v) = v.filter(|&v| !g.is_leaf(v)) else {
                return usage(format!("no decision node `{node}`"));
            };
            let Some(k) = g.action_index(v, action) else {
                return usage(format!("no move `{action}` at {}", g.node_ref(v)));
            };
            script.insert(v, k);
        }
        TieBreak::Scripted(script)
    } else if tie_break == "first" {
        TieBreak::First
    } else if let Some(s) = seed(tie_break) {
        TieBreak::Seeded(s)
    } else {
        return usage(format!("unknown tie-break `{tie_break}`; use `first` or `seed:N`"));
    };
    let r = bi_run(g, &tie)?;
    Ok(json!({
        "strategy": joint_label(g, &r.strategy),
        "outcome": r.root_outcome().to_string(),
        "order": r.order.iter().map(|&v| g.node_ref(v)).collect::<Vec<_>>(),
        "nodes": g.preorder().iter().map(|&v| json!({"node": g.node_ref(v), "outcome": r.extended[v].to_string()})).collect::<Vec<_>>(),
    }))
}

pub fn ebi(g: &ExtensiveGame, certify: bool, caps: &Caps) -> Result<Value> {
    let r = ebi_run(g, certify, caps)?;
    let h = &r.strategic;
    let steps: Vec<Value> = r
        .steps
        .iter()
        .map(|s| {
            json!({
                "step": s.step,
                "node": g.node_ref(s.node),
                "player": s.player + 1,
                "chosen": g.moves(s.node)[s.chosen].action,
                "removed": s.removed.iter().map(|x| match x.witness {
                    Some(w) => json!({"strategy": h.label(s.player, x.strategy), "dominated_by": h.label(s.player, w)}),
                    None => json!({"strategy": h.label(s.player, x.strategy)}),
                }).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(json!({
        "certified": certify,
        "steps": steps,
        "survivors": survivors(h, &r.survivors),
        "trivial": r.trivial,
        "outcomes": outcomes_of(h, &r.survivors),
        "spe": joint_label(g, &r.bi.strategy),
    }))
}

pub fn iewds(g: &ExtensiveGame, reduced: bool, policy: &str, script: Option<&str>, caps: &Caps) -> Result<Value> {
    let h = to_strategic(g, reduced, caps)?;
    let (name, policy) = match script {
        Some(text) => {
            let steps = split_list(text)
                .into_iter()
                .map(|item| {
                    let (player, label) = player_prefixed(item, h.players())?;
                    Ok(ScriptStep {
                        player,
                        label: label.to_string(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            ("scripted", Policy::Scripted(steps))
        }
        None => match policy {
            "max" => ("max", Policy::Max),
            "greedy" => ("greedy", Policy::GreedyOne),
            other => return usage(format!("unknown policy `{other}`; use `max` or `greedy`")),
        },
    };
    let run = eliminate(&h, &policy)?;
    let steps: Vec<Value> = run
        .trace
        .steps
        .iter()
        .map(|s| {
            json!({
                "round": s.round,
                "player": s.player + 1,
                "removed": h.label(s.player, s.removed),
                "dominated_by": h.label(s.player, s.witness),
            })
        })
        .collect();
    Ok(json!({
        "policy": name,
        "reduced": reduced,
        "rounds": run.trace.rounds(),
        "steps": steps,
        "survivors": survivors(&h, run.survivors()),
        "solved": run.solved,
        "outcomes": outcomes_of(&h, run.survivors()),
    }))
}

pub fn sc_solve(g: &ExtensiveGame, caps: &Caps) -> Result<Value> {
    let (h, run) = sc_iterate(g, caps)?;
    let rounds: Vec<Value> = run
        .run
        .trace
        .snapshots
        .iter()
        .enumerate()
        .map(|(k, s)| json!({"round": k, "survivors": survivors(&h, s), "outcomes": outcomes_of(&h, s)}))
        .collect();
    let lose = match lose_removal_check(&h, &run)? {
        None => json!("holds"),
        Some(v) => json!({
            "round": v.round,
            "player": v.player + 1,
            "surviving": h.label(1 - v.player, v.strategy),
        }),
    };
    let start = run.snapshot(0);
    Ok(json!({
        "outcome_count": run.outcome_count,
        "trivial_at": run.trivial_at,
        "bound": run.outcome_count.max(1) - 1,
        "rounds": rounds,
        "lose_sets": lose,
        "maxmin": [maxmin_in(&h, start, 0).to_string(), maxmin_in(&h, start, 1).to_string()],
        "value": outcomes_of(&h, run.snapshot(run.trivial_at)),
    }))
}

pub fn zermelo(g: &ExtensiveGame) -> Result<Value> {
    let v = decide(g)?;
    let kind = match v.kind {
        VerdictKind::FirstWins => "first-wins",
        VerdictKind::SecondWins => "second-wins",
        VerdictKind::BothDraw => "both-draw",
    };
    Ok(json!({
        "verdict": kind,
        "witnesses": v.witnesses.iter().map(|s| json!({"player": s.player + 1, "strategy": strategy_label(g, s)})).collect::<Vec<_>>(),
    }))
}

#[allow(clippy::too_many_arguments)]
pub fn dynamics(
    g: &ExtensiveGame,
    start: Option<&str>,
    scheduler: &str,
    script: Option<&str>,
    max_steps: usize,
    fip: bool,
    caps: &Caps,
) -> Result<Value> {
    let h = to_strategic(g, false, caps)?;
    let start = match start {
        Some(text) => profile_of(&h, text)?,
        None => vec![0; h.players()],
    };
    let (name, scheduler) = match script {
        Some(text) => {
            let moves = split_list(text)
                .into_iter()
                .map(|item| {
                    let (player, label) = player_prefixed(item, h.players())?;
                    let Some(i) = player else {
                        return usage(format!("`{item}` needs a player prefix, as in 2:{item}"));
                    };
                    match h.index_of(i, label) {
                        Some(k) => Ok((i, k)),
                        None => usage(format!("`{label}` is not a strategy of player {}", i + 1)),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            ("scripted".to_string(), Scheduler::Scripted(moves))
        }
        None => match scheduler {
            "first" => ("first".to_string(), Scheduler::First),
            "best-gain" => ("best-gain".to_string(), Scheduler::BestGain),
            "guided" => ("guided".to_string(), Scheduler::PotentialGuided),
            other => match seed(other) {
                Some(s) => (other.to_string(), Scheduler::SeededRandom(s)),
                None => {
                    return usage(format!(
                        "unknown scheduler `{other}`; use first, best-gain, seed:N or guided"
                    ))
                }
            },
        },
    };
    let path = improvement_path(&h, Some(g), &start, &scheduler, max_steps)?;
    let joint = |p: &[usize]| {
        JointStrategy(
            p.iter()
                .enumerate()
                .map(|(i, &k)| strategy_from_index(g, i, k))
                .collect(),
        )
    };
    let visited: Vec<Value> = path
        .profiles()
        .iter()
        .map(|p| {
            json!({
                "profile": h.profile_label(p),
                "outcome": h.outcome(p).to_string(),
                "potential": weak_potential(g, &joint(p)).to_bit_string(),
            })
        })
        .collect();
    let steps: Vec<Value> = path
        .steps
        .iter()
        .map(|s| json!({"player": s.deviator + 1, "to": h.profile_label(&s.to), "gain": treegame::outcome::fmt_rational(&s.gain)}))
        .collect();
    let status = match path.status {
        PathStatus::NashReached => json!("nash-reached"),
        PathStatus::CycleDetected { start } => json!({"cycle-detected": {"returns_to": start}}),
        PathStatus::Truncated => json!("truncated"),
    };
    let mut out = json!({
        "scheduler": name,
        "start": h.profile_label(&start),
        "steps": steps,
        "status": status,
        "path": visited,
        "potential_order": weak_potential(g, &joint(&start)).node_list.iter().map(|&v| g.node_ref(v)).collect::<Vec<_>>(),
    });
    if fip {
        out["fip"] = match fip_analysis(&h, caps)? {
            FipResult::HasFip => json!({"holds": true}),
            FipResult::NotFip { cycle } => json!({
                "holds": false,
                "cycle": cycle.iter().map(|p| h.profile_label(p)).collect::<Vec<_>>(),
            }),
        };
    }
    Ok(out)
}

fn states(ks: &KnowledgeSystem, e: &Event) -> Value {
    Value::Array(e.iter().map(|w| json!(ks.state_names()[w])).collect())
}

pub fn ckr(g: &ExtensiveGame, text: &str, caps: &Caps) -> Result<Value> {
    let ks = parse_knowledge_system(text, g)?;
    let r = ckr_check(&ks, g, caps)?;
    let verdict = match &r.verdict {
        CkrVerdict::Holds => json!("holds"),
        CkrVerdict::Violation { state, departures } => json!({
            "violation": ks.state_names()[*state],
            "departures": departures.iter().map(|d| json!({
                "node": g.node_ref(d.node),
                "player": d.player + 1,
                "expected": d.expected,
                "actual": d.actual,
            })).collect::<Vec<_>>(),
        }),
    };
    Ok(json!({
        "spe": joint_label(g, &r.spe),
        "states": ks.state_names(),
        "rational": states(&ks, &r.rational),
        "common_knowledge_of_rationality": states(&ks, &r.ckr),
        "backward_induction": states(&ks, &r.bi),
        "verdict": verdict,
    }))
}

pub fn dot(g: &ExtensiveGame, bi: bool, strategy: Option<&str>) -> Result<String> {
    if bi {
        let r = bi_run(g, &TieBreak::First)?;
        let options = DotOptions {
            strategy: Some(&r.strategy),
            extended: Some(&r.extended),
        };
        return Ok(export_dot(g, &options));
    }
    let joint = match strategy {
        Some(text) => Some(joint_of(g, text)?),
        None => None,
    };
    let options = DotOptions {
        strategy: joint.as_ref(),
        extended: None,
    };
    Ok(export_dot(g, &options))
}
