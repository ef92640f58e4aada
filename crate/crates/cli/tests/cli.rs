use std::process::{Command, Output};

use cyclodefect::partition::{Multicharge, Multipartition};
use cyclodefect::scan::{scan_with, ScanParams, ScanReport};
use cyclodefect::schur::defect_integer;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclodefect"))
        .args(args)
        .env_remove("CYCLODEFECT_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn hooks_examples() {
    let out = ok(&["hooks", "3.1|2.1.1", "--charge", "0,2"]);
    assert_eq!(
        out.trim(),
        "{-2, 0, 0, 1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 4, 5}"
    );
    assert_eq!(ok(&["hooks", "0|0", "--charge", "0,0"]).trim(), "{}");
    let out = ok(&["hooks", "2|1|1.1", "--charge", "0,1,2", "--mod", "3"]);
    assert_eq!(out.lines().last().unwrap(), "divisible by 3: 1");
    let off = ok(&["hooks", "3.1|2.1.1", "--charge", "0,2", "--no-diagonal"]);
    assert_eq!(off.trim(), "{-2, 0, 0, 2, 3, 3, 3, 5}");
}

#[test]
fn defect_examples() {
    assert_eq!(
        ok(&["defect", "3.1|2.1.1", "--charge", "0,2", "--e", "2"]).trim(),
        "8"
    );
    assert_eq!(
        ok(&["defect", "2|1|1.1", "--charge", "0,1,2", "--e", "101"]).trim(),
        "0"
    );
    // Zero charged hooks are divisible by every modulus.
    assert_eq!(
        ok(&["defect", "3.1|2.1.1", "--charge", "0,2", "--e", "101"]).trim(),
        "2"
    );
    let general = [
        "defect",
        "2|0|0",
        "--general",
        "--roots",
        "12,4",
        "--rcharges",
        "0,0,1",
    ];
    assert_eq!(ok(&general).trim(), "2");
    let json: serde_json::Value = serde_json::from_str(&ok(&[
        "defect",
        "2.1.1|2.1.1",
        "--charge",
        "0,2",
        "--e",
        "3",
        "--json",
    ]))
    .unwrap();
    assert_eq!(json["defect"], 4);
    assert_eq!(json["weight"], 4);
    assert_eq!(json["core"], "2|0");
}

#[test]
fn wrapper_examples() {
    let out = ok(&["core", "2.1.1|2.1.1", "--charge", "0,2", "--e", "3"]);
    assert!(
        out.contains("core 2|0") && out.contains("weight 4"),
        "{out}"
    );
    let json: serde_json::Value = serde_json::from_str(&ok(&[
        "core",
        "2.1.1|2.1.1",
        "--charge",
        "0,2",
        "--e",
        "3",
        "--json",
    ]))
    .unwrap();
    assert_eq!(json["core"], "2|0");
    assert_eq!(ok(&["schur", "1"]).trim(), "1");
    assert_eq!(ok(&["schur", "1", "--charge", "0"]).trim(), "(0, 1/1)");
    assert_eq!(
        ok(&[
            "dm-classes",
            "--roots",
            "12",
            "--params",
            "0,3",
            "--u",
            "4",
            "--n",
            "3"
        ])
        .trim(),
        "{{0},{1}}"
    );
    assert_eq!(
        ok(&["weight", "2|1", "--charge", "0,1", "--e", "2"]).trim(),
        "2"
    );
    assert!(ok(&["abacus", "2|1", "--charge", "0,1"]).contains('#'));
    assert!(ok(&["yokonuma", "1|1", "--d", "2", "--l", "1", "--e", "2"]).starts_with('0'));
    let out = ok(&[
        "glpn",
        "1|0",
        "--d",
        "1",
        "--p",
        "2",
        "--roots",
        "2,1",
        "--rcharges",
        "0",
    ]);
    assert_eq!(out.lines().nth(1).unwrap(), "orbit 2 stabilizer 1");
}

#[test]
fn negative_charges_parse() {
    let out = ok(&["weight", "1", "--charge", "-3", "--e", "2"]);
    assert_eq!(out.trim(), "0");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["hooks", "1.2", "--charge", "0"]), 2);
    assert_eq!(code(&["hooks", "1|x", "--charge", "0,0"]), 2);
    assert_eq!(code(&["defect", "1|1", "--charge", "0", "--e", "2"]), 2);
    assert_eq!(
        code(&[
            "core",
            "2.1.1|2.1.1",
            "--charge",
            "0,2",
            "--e",
            "3",
            "--window",
            "3"
        ]),
        2
    );
    assert_eq!(code(&["defect", "1|1", "--charge", "0,1", "--e", "1"]), 3);
    assert_eq!(code(&["schur", "1|1", "--charge", "0,1"]), 3);
    assert_eq!(
        code(&[
            "defect",
            "1|1",
            "--general",
            "--roots",
            "3,1",
            "--rcharges",
            "0,0"
        ]),
        2
    );
    assert_eq!(code(&["scan", "--l", "2", "--n", "2", "--e", "1"]), 2);
    assert_eq!(
        code(&["scan", "--l", "2", "--n", "2", "--e", "2", "--jobs", "0"]),
        2
    );
    assert_eq!(
        code(&["scan", "--l", "2", "--n", "2", "--e", "2", "--charge", "0"]),
        2
    );
}

#[test]
fn scan_examples() {
    let out = ok(&["scan", "--l", "1", "--n", "4", "--e", "2", "--charge", "0"]);
    assert_eq!(out.lines().filter(|l| l.starts_with("  ")).count(), 5);
    let out = ok(&["scan", "--l", "2", "--n", "0"]);
    assert!(out.contains("0|0") && out.contains("defect 0"), "{out}");
    let json = ok(&[
        "scan", "--l", "2", "--n", "3", "--e", "2", "--charge", "0,1", "--json",
    ]);
    let report: ScanReport = serde_json::from_str(&json).unwrap();
    assert!(!report.violation);
    for block in &report.blocks {
        assert_eq!(block.defect, block.weight);
    }
}

#[test]
fn scan_json_round_trips() {
    let json = ok(&[
        "scan", "--l", "3", "--n", "3", "--e", "3", "--charge", "0,1,1", "--json", "--p", "3",
    ]);
    let report: ScanReport = serde_json::from_str(&json).unwrap();
    assert_eq!(
        serde_json::to_string_pretty(&report).unwrap(),
        json.trim_end()
    );
}

#[test]
fn jobs_do_not_change_output() {
    let base = [
        "scan", "--l", "3", "--n", "5", "--e", "2", "--charge", "0,0,1", "--json",
    ];
    let reference = ok(&base);
    for k in ["1", "2", "3", "8"] {
        let mut args = base.to_vec();
        args.extend(["--jobs", k]);
        assert_eq!(ok(&args), reference, "--jobs {k}");
    }
    let from_env = Command::new(env!("CARGO_BIN_EXE_cyclodefect"))
        .args(base)
        .env("CYCLODEFECT_JOBS", "4")
        .output()
        .unwrap();
    assert_eq!(stdout(&from_env), reference);
}

#[test]
fn csv_has_one_row_per_member() {
    let dir = std::env::temp_dir().join(format!("cyclodefect-csv-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("scan.csv");
    ok(&[
        "scan",
        "--l",
        "2",
        "--n",
        "3",
        "--e",
        "2",
        "--p",
        "2",
        "--csv",
        path.to_str().unwrap(),
    ]);
    let mut reader = csv::Reader::from_path(&path).unwrap();
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header,
        [
            "block_id",
            "residue_key",
            "multipartition",
            "weight",
            "defect",
            "core",
            "orbit_size"
        ]
    );
    let rows = reader.records().count();
    assert_eq!(
        rows,
        cyclodefect::partition::enumerate_multipartitions(2, 3).len()
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn seeded_mutations_are_caught() {
    type Mutant = fn(&Multipartition, &Multicharge, u32) -> cyclodefect::Result<usize>;
    let mutants: [Mutant; 4] = [
        |mp, s, e| Ok(defect_integer(mp, s, e)? + usize::from(mp.component(0).len() == 1)),
        |mp, s, e| Ok(defect_integer(mp, s, e)?.saturating_sub(1)),
        |mp, s, e| defect_integer(mp, s, e + 1),
        |mp, s, e| Ok(defect_integer(mp, s, e)? ^ usize::from(mp.rank() % 3 == 2)),
    ];
    for (i, mutant) in mutants.iter().enumerate() {
        let mut caught = false;
        'grid: for l in 1..=3 {
            for e in 2..=4 {
                for n in 0..=6 {
                    let params = ScanParams {
                        l,
                        n,
                        e,
                        charge: Multicharge::zero(l),
                        p: None,
                    };
                    if scan_with(&params, mutant).unwrap().violation {
                        caught = true;
                        break 'grid;
                    }
                }
            }
        }
        assert!(caught, "mutant {i} survived");
    }
}
