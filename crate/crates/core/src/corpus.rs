//! Small reference games.
//!
//! Each game is built in code and also ships as a `.egt` document under
//! `corpus/`; tests check that both agree.

use crate::outcome::Outcome;
use crate::tree::{ExtensiveGame, TreeSpec};

fn leaf(a: i64, b: i64) -> TreeSpec {
    TreeSpec::leaf(&[a, b])
}

fn build(spec: TreeSpec, name: &str) -> ExtensiveGame {
    spec.build(name, 2).expect("reference game is valid")
}

/// Player 1 chooses C or D at `u`; player 2 answers at `v` (after C) or `w`
/// (after D).
pub fn prisoners_dilemma() -> ExtensiveGame {
    build(
        TreeSpec::decide(
            0,
            vec![
                ("C", TreeSpec::decide(1, vec![("C", leaf(2, 2)), ("D", leaf(0, 3))]).named("v")),
                ("D", TreeSpec::decide(1, vec![("C", leaf(3, 0)), ("D", leaf(1, 1))]).named("w")),
            ],
        )
        .named("u"),
        "pd",
    )
}

pub fn matching_pennies() -> ExtensiveGame {
    build(
        TreeSpec::decide(
            0,
            vec![
                ("H", TreeSpec::decide(1, vec![("H", leaf(1, -1)), ("T", leaf(-1, 1))]).named("v")),
                ("T", TreeSpec::decide(1, vec![("H", leaf(-1, 1)), ("T", leaf(1, -1))]).named("w")),
            ],
        )
        .named("u"),
        "mp",
    )
}

/// Matching pennies where player 2 answering T to T yields (-10, 0).
pub fn matching_pennies_modified() -> ExtensiveGame {
    build(
        TreeSpec::decide(
            0,
            vec![
                ("H", TreeSpec::decide(1, vec![("H", leaf(1, -1)), ("T", leaf(-1, 1))]).named("v")),
                ("T", TreeSpec::decide(1, vec![("H", leaf(-1, 1)), ("T", leaf(-10, 0))]).named("w")),
            ],
        )
        .named("u"),
        "mp-mod",
    )
}

/// Six-period centipede; `S` (stop) is listed before `C` (continue).
pub fn centipede() -> ExtensiveGame {
    let stops = [(1, 0), (0, 2), (3, 1), (2, 4), (5, 3), (4, 6)];
    let names = ["a", "b", "c", "d", "e", "f"];
    let mut spec = leaf(6, 5);
    for k in (0..6).rev() {
        let (x, y) = stops[k];
        spec = TreeSpec::decide(k % 2, vec![("S", leaf(x, y)), ("C", spec)]).named(names[k]);
    }
    build(spec, "centipede")
}

/// Player 1 offers `x` in `0..=n` at `u`; player 2 accepts (`A`, outcome
/// `(x, n - x)`) or rejects (`R`, outcome `(0, 0)`) at node `x{x}`.
pub fn ultimatum(n: u32) -> ExtensiveGame {
    let n = i64::from(n);
    let offers = (0..=n)
        .map(|x| {
            let reply = TreeSpec::decide(1, vec![("A", leaf(x, n - x)), ("R", leaf(0, 0))]).named(&format!("x{x}"));
            (x.to_string(), reply)
        })
        .collect();
    build(TreeSpec::decide(0, offers).named("u"), &format!("ultimatum-{n}"))
}

/// A generic game in which some elimination order of weakly dominated
/// strategies removes the subgame perfect equilibrium.
pub fn spe_elimination() -> ExtensiveGame {
    build(
        TreeSpec::decide(
            0,
            vec![
                (
                    "A",
                    TreeSpec::decide(
                        1,
                        vec![
                            ("C", TreeSpec::decide(0, vec![("E", leaf(2, 0)), ("F", leaf(0, 2))])),
                            ("D", leaf(1, 1)),
                        ],
                    ),
                ),
                ("B", leaf(3, 3)),
            ],
        ),
        "spe-elim",
    )
}

/// A game that no sequence of weak-dominance eliminations reduces to a
/// single outcome.
pub fn unsolvable() -> ExtensiveGame {
    build(
        TreeSpec::decide(
            0,
            vec![
                ("A", TreeSpec::decide(1, vec![("L", leaf(0, 0)), ("R", leaf(2, 0))])),
                ("B", TreeSpec::decide(0, vec![("C", leaf(1, 1)), ("D", leaf(0, 0))])),
            ],
        ),
        "unsolvable",
    )
}

/// `(file name, document text, game built in code)` for every shipped game.
pub fn documents() -> Vec<(&'static str, &'static str, ExtensiveGame)> {
    vec![
        ("fig1-pd.egt", include_str!("../corpus/fig1-pd.egt"), prisoners_dilemma()),
        ("fig2-mp.egt", include_str!("../corpus/fig2-mp.egt"), matching_pennies()),
        ("fig3-mp-mod.egt", include_str!("../corpus/fig3-mp-mod.egt"), matching_pennies_modified()),
        ("fig4-centipede.egt", include_str!("../corpus/fig4-centipede.egt"), centipede()),
        ("ultimatum-5.egt", include_str!("../corpus/ultimatum-5.egt"), ultimatum(5)),
        ("ultimatum-100.egt", include_str!("../corpus/ultimatum-100.egt"), ultimatum(100)),
        ("fig6-spe-elim.egt", include_str!("../corpus/fig6-spe-elim.egt"), spe_elimination()),
        ("fig7-unsolvable.egt", include_str!("../corpus/fig7-unsolvable.egt"), unsolvable()),
    ]
}

/// Outcome shorthand for tests and examples.
pub fn outcome(values: &[i64]) -> Outcome {
    Outcome::from_ints(values)
}
