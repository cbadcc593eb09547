#![allow(dead_code)]

use std::path::PathBuf;

use eisenstein_cli::{run_cli, CliOutput};

pub fn run(args: &[&str]) -> CliOutput {
    run_with_stdin(args, "")
}

pub fn run_with_stdin(args: &[&str], stdin: &str) -> CliOutput {
    let argv = std::iter::once("eisenstein").chain(args.iter().copied());
    run_cli(argv, &mut stdin.as_bytes())
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// (golden file name, expected exit code, arguments). Paths are relative
/// to the crate root, which is the working directory of integration tests.
pub const GOLDEN_CASES: &[(&str, u8, &[&str])] = &[
    (
        "eisenstein_nat_satisfied.json",
        0,
        &["--json", "eisenstein", "--semiring", "nat", "--prime", "2", "x^2 + 2*x + 2"],
    ),
    (
        "eisenstein_nat_condition3.json",
        2,
        &["--json", "eisenstein", "--semiring", "nat", "--prime", "2", "x^2 + 2*x + 4"],
    ),
    (
        "eisenstein_nat_satisfied.txt",
        0,
        &["eisenstein", "--semiring", "nat", "--prime", "2", "x^2 + 2*x + 2"],
    ),
    (
        "eisenstein_tropical.json",
        0,
        &[
            "--json",
            "eisenstein",
            "--semiring",
            "tropical-min",
            "--prime",
            "1",
            "--hypothesis-bound",
            "64",
            "0*x^2 + 1*x + 1",
        ],
    ),
    (
        "eisenstein_n3_not_subtractive.json",
        1,
        &[
            "--json",
            "eisenstein",
            "--file",
            "tests/data/n3.semiring",
            "--ideal-gens",
            "2",
            "x^2 + 2*x + 1",
        ],
    ),
    (
        "corollary_gcd_satisfied.json",
        0,
        &["--json", "corollary", "--semiring", "gcd-nat", "--prime", "2", "3*x^2 + 2*x + 2"],
    ),
    (
        "corollary_nat_cubic.txt",
        0,
        &["corollary", "--semiring", "nat", "--prime", "2", "x^3 + 2*x^2 + 4*x + 2"],
    ),
    (
        "factor_nat_found.json",
        0,
        &["--json", "factor", "--semiring", "nat", "x^2 + 3*x + 2"],
    ),
    (
        "factor_nat_none.json",
        2,
        &["--json", "factor", "--semiring", "nat", "x^2 + 2*x + 2"],
    ),
    (
        "factor_bool_found.txt",
        0,
        &["factor", "--semiring", "bool", "x^2 + x + 1"],
    ),
    (
        "factor_z4_unit.txt",
        0,
        &["factor", "--file", "tests/data/z4.semiring", "x + 2"],
    ),
    (
        "trace_n3_near_miss.txt",
        2,
        &[
            "trace",
            "--file",
            "tests/data/n3.semiring",
            "--ideal-gens",
            "2",
            "--g",
            "x + 1",
            "--h",
            "x + 2",
        ],
    ),
    (
        "trace_n3_near_miss.json",
        2,
        &[
            "--json",
            "trace",
            "--file",
            "tests/data/n3.semiring",
            "--ideal-gens",
            "2",
            "--g",
            "x + 1",
            "--h",
            "x + 2",
        ],
    ),
    (
        "trace_nat.txt",
        0,
        &["trace", "--semiring", "nat", "--prime", "2", "--g", "x + 2", "--h", "x + 1"],
    ),
    (
        "axioms_n3_bad_absorbing.txt",
        2,
        &["axioms", "--file", "tests/data/n3_bad_absorbing.semiring"],
    ),
    (
        "axioms_n3_bad_absorbing.json",
        2,
        &["--json", "axioms", "--file", "tests/data/n3_bad_absorbing.semiring"],
    ),
    (
        "ideal_n3.json",
        2,
        &["--json", "ideal", "--file", "tests/data/n3.semiring", "--ideal-gens", "2"],
    ),
    (
        "ideal_nat_composite.txt",
        2,
        &["ideal", "--semiring", "nat", "--prime", "6", "--hypothesis-bound", "64"],
    ),
    (
        "verify_n3.json",
        0,
        &["--json", "verify-theorem", "--file", "tests/data/n3.semiring", "--max-degree", "3"],
    ),
    (
        "verify_z4.txt",
        2,
        &["verify-theorem", "--file", "tests/data/z4.semiring", "--max-degree", "2"],
    ),
    (
        "hunt_order3.json",
        0,
        &["--json", "hunt", "--max-order", "3", "--max-degree", "3"],
    ),
    (
        "hunt_order3.txt",
        0,
        &["hunt", "--max-order", "3", "--max-degree", "3"],
    ),
];

/// Compares every golden case; with `UPDATE_GOLDENS` set, rewrites them.
/// Returns the names of mismatching cases.
pub fn check_goldens() -> Vec<String> {
    let update = std::env::var_os("UPDATE_GOLDENS").is_some();
    let dir = golden_dir();
    let mut bad = Vec::new();
    for (name, code, args) in GOLDEN_CASES {
        let out = run(args);
        if out.code != *code {
            bad.push(format!("{name} (exit {} instead of {code}: {})", out.code, out.stderr.trim()));
            continue;
        }
        let first = out.stdout;
        let second = run(args).stdout;
        if first != second {
            bad.push(format!("{name} (differs between runs)"));
            continue;
        }
        let path = dir.join(name);
        if update {
            std::fs::create_dir_all(&dir).unwrap();
            std::fs::write(&path, &first).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(expected) if expected == first => {}
            Ok(_) => bad.push(format!("{name} (content differs)")),
            Err(e) => bad.push(format!("{name} ({e})")),
        }
    }
    bad
}
