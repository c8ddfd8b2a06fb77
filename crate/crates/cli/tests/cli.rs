use std::path::PathBuf;
use std::process::Command;

use milnor::links::builtin;
use milnor::obstruction::{verify, ConstraintSpec};
use milnor::{expand, parse_word, Alphabet};

fn milnor(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_milnor"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn link_file(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn expand_prints_canonical_series() {
    assert_eq!(
        milnor(&["expand", "--vars", "2", "[m1,m2]"]).1,
        "1 + x1.x2 - x2.x1\n"
    );
    assert_eq!(milnor(&["expand", "--vars", "1", "m1 m1^-1"]).1, "1\n");
    assert_eq!(milnor(&["expand", "--vars", "1", "m1^-1"]).1, "1 - x1\n");
}

#[test]
fn expand_matches_library() {
    for text in ["[m1 m3, m2^-1]", "(m1 m2)^m3 m4", "[[m1,m2],[m3,m4]]"] {
        let w = parse_word(text, &Alphabet::numbered(4)).unwrap();
        let expected = format!("{}\n", expand(&w, 4).unwrap());
        assert_eq!(
            milnor(&["expand", "--vars", "4", text]).1,
            expected,
            "{text}"
        );
    }
}

#[test]
fn expand_errors() {
    assert_eq!(milnor(&["expand", "--vars", "2", "[m1,"]).0, 2);
    assert_eq!(milnor(&["expand", "--vars", "2", "m3"]).0, 3);
    assert_eq!(milnor(&["expand", "--vars", "2", "m_a"]).0, 3);
}

#[test]
fn equal_decides_milnor_group_equality() {
    let (code, out, _) = milnor(&["equal", "--vars", "2", "m1 m2", "m2 m1"]);
    assert_eq!((code, out.as_str()), (1, "distinct\n"));
    // A Milnor relator is trivial.
    let (code, out, _) = milnor(&["equal", "--vars", "2", "[m1, m1^m2]", "1"]);
    assert_eq!((code, out.as_str()), (0, "equal\n"));
    let (code, out, _) = milnor(&["equal", "--vars", "3", "[m1 m2, m3]", "[m1,m3]^m2 [m2,m3]"]);
    assert_eq!((code, out.as_str()), (0, "equal\n"));
    assert_eq!(milnor(&["equal", "--vars", "2", "m1", "m1)"]).0, 2);
}

#[test]
fn mu_and_trivial_from_files() {
    let bor = link_file(
        "borromean.link",
        "# Borromean rings\ncomponents: 3\nlongitude 1: [m2,m3]\nlongitude 2: [m3,m1]\nlongitude 3: [m1,m2]\n",
    );
    let bor = bor.to_str().unwrap();
    assert_eq!(
        milnor(&["mu", "--link", bor, "--seq", "1,2", "--target", "3"]).1,
        "1\n"
    );
    assert_eq!(
        milnor(&["mu", "--link", bor, "--seq", "2,1", "--target", "3"]).1,
        "-1\n"
    );
    let (code, out, _) = milnor(&["trivial", "--link", bor]);
    assert_eq!((code, out.as_str()), (1, "essential (mu[1,2;3] = 1)\n"));

    let unlink = link_file(
        "unlink.link",
        "components: 2\nlongitude 1: 1\nlongitude 2: [m1, m1^m1]\n",
    );
    let (code, out, _) = milnor(&["trivial", "--link", unlink.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, "homotopically-trivial\n"));
}

#[test]
fn trivial_reports_the_lowest_invariant() {
    let (code, out, _) = milnor(&["trivial", "--builtin", "hopf"]);
    assert_eq!((code, out.as_str()), (1, "essential (mu[1;2] = 1)\n"));
    assert_eq!(milnor(&["trivial", "--builtin", "whitehead"]).0, 0);
}

#[test]
fn link_errors() {
    let bad = link_file("bad.link", "components: two\n");
    assert_eq!(milnor(&["trivial", "--link", bad.to_str().unwrap()]).0, 2);
    let bor = link_file(
        "bor2.link",
        "components: 3\nlongitude 1: [m2,m3]\nlongitude 2: [m3,m1]\nlongitude 3: [m1,m2]\n",
    );
    let bor = bor.to_str().unwrap();
    assert_eq!(
        milnor(&["mu", "--link", bor, "--seq", "1,4", "--target", "3"]).0,
        3
    );
    assert_eq!(
        milnor(&["mu", "--link", bor, "--seq", "1,3", "--target", "3"]).0,
        3
    );
    let out_of_range = link_file(
        "range.link",
        "components: 2\nlongitude 1: m3\nlongitude 2: 1\n",
    );
    assert_eq!(
        milnor(&["trivial", "--link", out_of_range.to_str().unwrap()]).0,
        3
    );
}

#[test]
fn mu_matches_library() {
    let p = builtin("borromean").unwrap();
    for (seq, target) in [("1,2", 3), ("2,3", 1), ("1", 2)] {
        let s: Vec<usize> = seq.split(',').map(|x| x.parse().unwrap()).collect();
        let expected = format!("{}\n", p.mu(&s, target).unwrap());
        let t = target.to_string();
        assert_eq!(
            milnor(&["mu", "--builtin", "borromean", "--seq", seq, "--target", &t]).1,
            expected
        );
    }
}

#[test]
fn verify_ab_standard() {
    let (code, out, _) = milnor(&["verify-ab"]);
    assert_eq!(code, 0);
    assert!(out.contains("coefficient: -1\n"), "{out}");
    assert!(out.contains("verdict:     nonzero-constant\n"), "{out}");
    let (code, machine, _) = milnor(&["verify-ab", "--standard", "--format", "machine"]);
    assert_eq!(code, 0);
    assert_eq!(machine, verify(ConstraintSpec::standard()).render_machine());
    assert!(machine.contains("\ncoefficient=-1\n"));
    assert!(machine.contains("\nwitness=none\n"));
}

#[test]
fn verify_ab_relaxed() {
    let (code, out, _) = milnor(&["verify-ab", "--no-standard", "--format", "machine"]);
    assert_eq!(code, 1);
    assert_eq!(out, verify(ConstraintSpec::relaxed()).render_machine());
    assert!(out.contains("\nverdict=parametric\n"));
    assert!(out.contains("\nwitness=a.2=-1\n"));
    assert!(out.contains("\nwitness_description=m_a = m2^-1\n"));
}

#[test]
fn verify_ab_custom_word() {
    // Without handles the target survives even unconstrained.
    let (code, out, _) = milnor(&[
        "verify-ab",
        "--no-standard",
        "--format",
        "machine",
        "--l1-expr",
        "[m2,[[m3,m4],[m5,m6]]]",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("\nverdict=nonzero-constant\n"));
    // With only the b and c handles, inverting one of them cancels everything.
    let (code, out, _) = milnor(&[
        "verify-ab",
        "--no-standard",
        "--format",
        "machine",
        "--l1-expr",
        "[m2,[[m3,m_b m4],[m5,m6 m_c]]]",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("\nverdict=parametric\n"));
    assert!(out.contains("\nwitness=b.4=-1\n"), "{out}");
    assert!(out.contains("\nwitness_description=m_b = m4^-1\n"));
    // A word that never reaches degree 5 has zero coefficient.
    let (code, out, _) = milnor(&["verify-ab", "--format", "machine", "--l1-expr", "[m2,m3]"]);
    assert_eq!(code, 1);
    assert!(out.contains("\nverdict=zero\n"));
    assert_eq!(milnor(&["verify-ab", "--l1-expr", "[m2,"]).0, 2);
    assert_eq!(milnor(&["verify-ab", "--l1-expr", "m7"]).0, 3);
}
