//! Golden report cases shared by the golden and acceptance targets.
//!
//! Paths are relative to the package root, which is the working directory
//! of integration tests.

use std::path::PathBuf;

use treegame_cli::{run_command, Output};

pub const CORPUS: &str = "../core/corpus";

/// `(golden file stem, arguments after the program name)`.
pub fn cases() -> Vec<(&'static str, Vec<String>)> {
    let c = |file: &str| format!("{CORPUS}/{file}");
    let d = |file: &str| format!("tests/data/{file}");
    let raw: Vec<(&'static str, Vec<String>)> = vec![
        ("validate-pd", vec!["validate".into(), c("fig1-pd.egt")]),
        ("classify-pd", vec!["classify".into(), c("fig1-pd.egt")]),
        ("classify-mp", vec!["classify".into(), c("fig2-mp.egt")]),
        ("classify-mp-mod", vec!["classify".into(), c("fig3-mp-mod.egt")]),
        ("classify-centipede", vec!["classify".into(), c("fig4-centipede.egt")]),
        ("classify-ultimatum-5", vec!["classify".into(), c("ultimatum-5.egt")]),
        ("classify-spe-elim", vec!["classify".into(), c("fig6-spe-elim.egt")]),
        ("classify-unsolvable", vec!["classify".into(), c("fig7-unsolvable.egt")]),
        ("strategic-pd", vec!["strategic".into(), c("fig1-pd.egt")]),
        ("strategic-centipede-reduced", vec!["strategic".into(), "--reduced".into(), c("fig4-centipede.egt")]),
        ("nash-pd", vec!["nash".into(), c("fig1-pd.egt")]),
        ("nash-mp", vec!["nash".into(), c("fig2-mp.egt")]),
        ("nash-mp-mod", vec!["nash".into(), c("fig3-mp-mod.egt")]),
        ("nash-centipede-reduced", vec!["nash".into(), "--reduced".into(), c("fig4-centipede.egt")]),
        ("spe-mp-mod", vec!["spe".into(), "--enumerate".into(), c("fig3-mp-mod.egt")]),
        ("spe-ultimatum-100", vec!["spe".into(), "--enumerate".into(), c("ultimatum-100.egt")]),
        ("spe-ultimatum-flag", vec!["spe".into(), "--ultimatum".into(), "100".into()]),
        ("bi-centipede", vec!["bi".into(), c("fig4-centipede.egt")]),
        ("bi-ultimatum-reject", vec!["bi".into(), "--ultimatum".into(), "100".into(), "--choose".into(), "x100=R".into()]),
        ("ebi-spe-elim", vec!["ebi".into(), "--certify".into(), c("fig6-spe-elim.egt")]),
        ("ebi-centipede", vec!["ebi".into(), "--certify".into(), c("fig4-centipede.egt")]),
        ("iewds-centipede", vec!["iewds".into(), "--reduced".into(), c("fig4-centipede.egt")]),
        ("iewds-spe-elim-script", vec!["iewds".into(), "--script".into(), "AE,D,AF".into(), c("fig6-spe-elim.egt")]),
        ("iewds-unsolvable", vec!["iewds".into(), c("fig7-unsolvable.egt")]),
        ("sc-solve-mp", vec!["sc-solve".into(), c("fig2-mp.egt")]),
        ("zermelo-mp", vec!["zermelo".into(), c("fig2-mp.egt")]),
        ("zermelo-all-draw", vec!["zermelo".into(), d("all-draw.egt")]),
        (
            "dynamics-pd-cycle",
            vec![
                "dynamics".into(),
                "--start".into(),
                "D,DC".into(),
                "--script".into(),
                "2:CD,1:C,2:DC,1:D".into(),
                "--fip".into(),
                c("fig1-pd.egt"),
            ],
        ),
        ("dynamics-pd-guided", vec!["dynamics".into(), "--start".into(), "D,DC".into(), c("fig1-pd.egt")]),
        ("ckr-centipede-two-states", vec!["ckr".into(), "--ks".into(), d("centipede-two-states.eks"), c("fig4-centipede.egt")]),
        ("ckr-centipede-singleton", vec!["ckr".into(), "--ks".into(), d("centipede-singleton.eks"), c("fig4-centipede.egt")]),
        ("dot-mp", vec!["dot".into(), "--strategy".into(), "H,TH".into(), c("fig2-mp.egt")]),
        ("dot-ultimatum-bi", vec!["dot".into(), "--bi".into(), "--ultimatum".into(), "3".into()]),
        ("json-nash-mp", vec!["nash".into(), "--format".into(), "json".into(), c("fig2-mp.egt")]),
        ("error-arity", vec!["validate".into(), d("bad-arity.egt")]),
        ("error-syntax", vec!["validate".into(), d("bad-syntax.egt")]),
        ("error-not-competitive", vec!["sc-solve".into(), c("fig4-centipede.egt")]),
        ("error-capacity", vec!["nash".into(), "--ultimatum".into(), "100".into()]),
        ("error-usage", vec!["nash".into()]),
    ];
    raw
}

pub fn run(args: &[String]) -> Output {
    run_command(std::iter::once("treegame".to_string()).chain(args.iter().cloned()))
}

/// The golden transcript of one run.
pub fn transcript(args: &[String], out: &Output) -> String {
    format!(
        "$ treegame {}\nexit: {}\n--- stdout\n{}--- stderr\n{}",
        args.join(" "),
        out.code,
        out.stdout,
        out.stderr
    )
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from("tests/golden").join(format!("{name}.txt"))
}
