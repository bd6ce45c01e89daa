use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::Arc;

use dominion_lab::text::parse_monoid_with_cap;
use dominion_lab::{
    parse_monoid, render_monoid, ElementId, FiniteMonoid, Homomorphism, ZigzagWitness,
};
use tempfile::TempDir;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_dominion-lab"));
    cmd.env_remove("DOMINION_LAB_CAP");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_monoid(dir: &Path, m: &FiniteMonoid) -> PathBuf {
    let path = dir.join(format!("{}.monoid", m.name()));
    fs::write(&path, render_monoid(m)).unwrap();
    path
}

fn fixtures() -> (TempDir, String, String) {
    let dir = TempDir::new().unwrap();
    let nine = write_monoid(dir.path(), &FiniteMonoid::nine_element());
    let c3 = write_monoid(
        dir.path(),
        &FiniteMonoid::cyclic(3).unwrap().with_name("c3"),
    );
    let (nine, c3) = (nine.display().to_string(), c3.display().to_string());
    (dir, nine, c3)
}

#[test]
fn analyze_reports_summary_lines() {
    let (_dir, nine, c3) = fixtures();
    let out = run(&["analyze", &nine]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("order 9; SI: yes; variety: V(1,2); inverse monoid: no"));
    assert!(stdout(&out).contains("cong monolith blocks: {0} {1} {2} {3} {4} {5} {6} {7,8}"));
    let out = run(&["analyze", &c3, "--variety", "V(3,0)"]);
    let text = stdout(&out);
    assert!(
        text.contains("variety: V(3,0); inverse monoid: yes"),
        "{text}"
    );
    assert!(text.contains("V(3,0): member yes; core size 3"), "{text}");
}

#[test]
fn malformed_row_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.monoid");
    fs::write(
        &path,
        "monoid bad\norder 2\nneutral 0\ntable\n0 1\n1\nend\n",
    )
    .unwrap();
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("line 6") && err.contains("table row 1"),
        "{err}"
    );
}

#[test]
fn pinned_dominion_escapes() {
    let (_dir, nine, _) = fixtures();
    let out = run(&["dominion", &nine, "generate", "6", "2", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("escapes A: {7 (<1,1,1>)}"), "{text}");
    assert!(text.contains("dominion nine over {0, 2, 3, 6, 8}: {0, 2, 3, 6, 7, 8} method: both"));
    // labels work as tokens too
    let out = run(&[
        "dominion", &nine, "generate", "<1,1,0>", "<0,1,0>", "<0,1,1>", "--method", "pushout",
    ]);
    assert!(stdout(&out).contains("{0, 2, 3, 6, 7, 8} method: pushout"));
}

#[test]
fn whole_and_inverse_submonoids() {
    let (dir, nine, _) = fixtures();
    let all: Vec<String> = (0..9).map(|i| i.to_string()).collect();
    let mut args = vec!["dominion", nine.as_str(), "elements"];
    args.extend(all.iter().map(String::as_str));
    let text = stdout(&run(&args));
    assert!(text.contains("dominion = A"), "{text}");

    let b = FiniteMonoid::cyclic(2)
        .unwrap()
        .direct_product(&FiniteMonoid::monogenic(1, 1).unwrap())
        .with_name("c2xs");
    let path = write_monoid(dir.path(), &b);
    let text = stdout(&run(&["dominion", path.to_str().unwrap(), "generate", "2"]));
    assert!(text.contains("dominion = A (absolutely closed)"), "{text}");
}

#[test]
fn bad_submonoid_spec() {
    let (_dir, nine, _) = fixtures();
    assert_eq!(
        run(&["dominion", &nine, "elements", "1", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["dominion", &nine, "pick", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["dominion", &nine, "generate", "nope"]).status.code(),
        Some(2)
    );
}

#[test]
fn zigzag_witnesses() {
    let (_dir, nine, _) = fixtures();
    let b = Arc::new(FiniteMonoid::nine_element());
    let out = run(&[
        "zigzag", &nine, "generate", "6", "2", "3", "--target", "<1,1,1>",
    ]);
    let line = stdout(&out).lines().next().unwrap().to_string();
    let w = ZigzagWitness::parse(&line, Arc::clone(&b)).unwrap();
    assert_eq!(w.verify(), Ok(()));
    assert_eq!(w.len(), 1);
    let mut spine = [w.spine_z()[0], w.spine_w()[0]];
    spine.sort();
    // <0,0,1> and <1,0,0>
    assert_eq!(spine, [ElementId(1), ElementId(4)]);

    let line = stdout(&run(&[
        "zigzag", &nine, "generate", "6", "2", "3", "--target", "3",
    ]));
    assert!(
        line.starts_with("zigzag n=0 args: 3 z: w: value: 3"),
        "{line}"
    );
    let out = run(&["zigzag", &nine, "generate", "6", "2", "3", "--target", "1"]);
    assert_eq!(stdout(&out).trim(), "none");
}

#[test]
fn cap_from_environment_and_flag() {
    let (_dir, nine, _) = fixtures();
    let out = bin()
        .args(["zigzag", &nine, "generate", "6", "2", "3", "--target", "7"])
        .env("DOMINION_LAB_CAP", "0")
        .output()
        .unwrap();
    assert_eq!(stdout(&out).trim(), "none");
    let out = bin()
        .args([
            "zigzag", &nine, "generate", "6", "2", "3", "--target", "7", "--cap", "1",
        ])
        .env("DOMINION_LAB_CAP", "0")
        .output()
        .unwrap();
    assert!(stdout(&out).starts_with("zigzag n=1"));
}

#[test]
fn method_disagreement_is_internal_error() {
    let (_dir, nine, _) = fixtures();
    let out = run(&["dominion", &nine, "generate", "6", "2", "3", "--cap", "0"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("element 7") && err.contains("cap 0"), "{err}");
}

#[test]
fn pushout_output_round_trips() {
    let (dir, nine, c3) = fixtures();
    let dest = dir.path().join("po.monoid");
    let out = run(&[
        "pushout",
        &nine,
        "generate",
        "6",
        "2",
        "3",
        "--out",
        dest.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(&dest).unwrap();
    let po = Arc::new(parse_monoid(&text).unwrap());
    assert_eq!(po.order(), 21);
    assert_eq!(
        render_monoid(&po),
        text.split_inclusive('\n')
            .take_while(|l| !l.starts_with("hom"))
            .collect::<String>()
    );
    let b = Arc::new(FiniteMonoid::nine_element());
    let homs: Vec<Homomorphism> = text
        .lines()
        .filter(|l| l.starts_with("hom"))
        .map(|l| {
            Homomorphism::parse(l, Arc::clone(&b), Arc::clone(&po))
                .unwrap()
                .1
        })
        .collect();
    assert_eq!(homs.len(), 2);
    assert_eq!(homs[0].apply(ElementId(7)), homs[1].apply(ElementId(7)));
    assert_ne!(homs[0].apply(ElementId(1)), homs[1].apply(ElementId(1)));

    // A = B gives back a monoid of the same order
    let text = stdout(&run(&["pushout", &c3, "elements", "0", "1", "2"]));
    assert_eq!(parse_monoid(&text).unwrap().order(), 3);

    // larger pushouts need a raised order cap
    let text = stdout(&run(&["pushout", &nine, "elements", "0"]));
    assert!(parse_monoid(&text).is_err());
    let big = parse_monoid_with_cap(&text, 81).unwrap();
    assert_eq!(big.order(), 81);
    let path = dir.path().join("big.monoid");
    fs::write(&path, &text).unwrap();
    assert_eq!(
        run(&["analyze", path.to_str().unwrap()]).status.code(),
        Some(2)
    );
    let out = run(&["--order-cap", "81", "analyze", path.to_str().unwrap()]);
    assert!(out.status.success());
}

#[test]
fn enumerated_files_round_trip() {
    let dir = TempDir::new().unwrap();
    let out = run(&[
        "enumerate",
        "--max-order",
        "4",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "27 monoids");
    for entry in fs::read_dir(dir.path()).unwrap() {
        let text = fs::read_to_string(entry.unwrap().path()).unwrap();
        assert_eq!(render_monoid(&parse_monoid(&text).unwrap()), text);
    }
    let out = run(&[
        "enumerate",
        "--max-order",
        "3",
        "--si-only",
        "--format",
        "records",
    ]);
    for line in stdout(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["subdirectly_irreducible"], true);
    }
    assert_eq!(
        run(&["enumerate", "--max-order", "7"]).status.code(),
        Some(2)
    );
}

#[test]
fn laws_run_and_records() {
    let out = run(&["laws", "run", "--max-order", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out)
            .lines()
            .filter(|l| l.starts_with("PASS"))
            .count(),
        11
    );
    let out = run(&[
        "laws",
        "run",
        "--max-order",
        "3",
        "--law",
        "grillet",
        "--format",
        "records",
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["law"], "grillet");
    assert_eq!(v["passed"], true);
    let out = run(&[
        "laws",
        "run",
        "--variety",
        "V(1,2)",
        "--law",
        "si-dichotomy",
    ]);
    assert!(out.status.success());
    assert_eq!(
        run(&["laws", "run", "--law", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["laws", "run", "--law", "si-dichotomy", "--variety", "CM"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(stdout(&run(&["laws", "list"])).lines().count(), 11);
}
