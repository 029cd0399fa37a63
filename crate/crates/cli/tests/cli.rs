use std::fs;
use std::path::{Path, PathBuf};

use klcat_cli::{run_with_env, Outcome, EXIT_OK, EXIT_USAGE};

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/v1")
}

fn klcat(args: &[&str]) -> Outcome {
    run_with_env(std::iter::once("klcat").chain(args.iter().copied()), None)
}

/// Byte-exact comparison; `KLCAT_BLESS=1` rewrites the file instead.
fn golden(name: &str, actual: &str) {
    let path = golden_dir().join(name);
    if std::env::var_os("KLCAT_BLESS").is_some() {
        fs::create_dir_all(golden_dir()).unwrap();
        fs::write(&path, actual).unwrap();
        return;
    }
    let want = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(
        want == actual,
        "{name} differs from golden copy\n--- want\n{want}\n--- got\n{actual}"
    );
}

const CASES: &[(&str, &[&str])] = &[
    ("weyl_g2_info.json", &["weyl", "--type", "G2", "--info"]),
    ("weyl_a2.json", &["weyl", "--type", "A2"]),
    (
        "weyl_b2.table",
        &["weyl", "--type", "B2", "--format", "table"],
    ),
    (
        "weyl_d4_info.csv",
        &["weyl", "--type", "D4", "--info", "--format", "csv"],
    ),
    (
        "klpoly_a1_s_e.json",
        &["klpoly", "--type", "A1", "--x", "s", "--y", "e"],
    ),
    (
        "klpoly_a3_121.table",
        &[
            "klpoly", "--type", "A3", "--x", "1.2.1", "--format", "table",
        ],
    ),
    (
        "klpoly_a3_2132.json",
        &["klpoly", "--type", "A3", "--x", "2.1.3.2"],
    ),
    (
        "klpoly_b2_cprime.csv",
        &[
            "klpoly", "--type", "B2", "--x", "1.2.1.2", "--basis", "c-prime", "--format", "csv",
        ],
    ),
    (
        "basis_change_b2_tilting_verma.json",
        &[
            "basis-change",
            "--type",
            "B2",
            "--from",
            "Tilting",
            "--to",
            "Verma",
            "--x",
            "1.2",
        ],
    ),
    (
        "basis_change_a2_verma_simple.table",
        &[
            "basis-change",
            "--type",
            "A2",
            "--from",
            "Verma",
            "--to",
            "Simple",
            "--x",
            "e",
            "--format",
            "table",
        ],
    ),
    (
        "verify_a2_k0.json",
        &["verify", "--type", "A2", "--suite", "k0"],
    ),
    (
        "verify_a1_all.table",
        &[
            "verify", "--type", "A1", "--suite", "all", "--format", "table", "--width", "60",
        ],
    ),
    (
        "verify_b2_hecke.csv",
        &[
            "verify", "--type", "B2", "--suite", "hecke", "--format", "csv",
        ],
    ),
    (
        "block_check_adjunctions.json",
        &["block-check", "--suite", "adjunctions", "--format", "json"],
    ),
    (
        "block_check_all.table",
        &["block-check", "--format", "table"],
    ),
];

#[test]
fn golden_outputs() {
    for (name, args) in CASES {
        let out = klcat(args);
        assert_eq!(out.code, EXIT_OK, "{name}: {}", out.stderr);
        assert!(out.stderr.is_empty(), "{name}: {}", out.stderr);
        golden(name, &out.stdout);
    }
}

#[test]
fn homology_csv() {
    let dir = std::env::temp_dir().join(format!("klcat-homology-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("h.csv");
    let out = klcat(&[
        "block-check",
        "--suite",
        "tilting",
        "--homology",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let text = fs::read_to_string(&path).unwrap();
    fs::remove_dir_all(&dir).ok();
    assert!(text.starts_with("complex,module,degree,dim_e,dim_s,dimension\n"));
    golden("homology.csv", &text);
}

#[test]
fn spec_examples() {
    let out = klcat(&["verify", "--type", "A2", "--suite", "k0"]);
    assert_eq!(out.code, EXIT_OK);
    let out = klcat(&["klpoly", "--type", "A1", "--x", "s", "--y", "e"]);
    let j: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(j["coeff"], serde_json::json!({"1": 1}));
    let out = klcat(&["weyl", "--type", "G2", "--info"]);
    let j: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(
        (j["order"].as_u64(), j["longest_length"].as_u64()),
        (Some(12), Some(6))
    );
}

#[test]
fn input_errors_are_distinct() {
    let cases: &[(&[&str], &str)] = &[
        (&["weyl", "--type", "Q3"], "unknown Cartan type `Q3`"),
        (&["weyl", "--type", "G3"], "inadmissible Cartan datum G3"),
        (
            &["klpoly", "--type", "A2", "--x", "1.x"],
            "malformed word `1.x`",
        ),
        (
            &["klpoly", "--type", "A2", "--x", "3"],
            "malformed word `3`",
        ),
        (
            &["--cap", "100", "verify", "--type", "A5"],
            "exceeds the enumeration cap 100",
        ),
        (
            &["verify", "--type", "A2", "--suite", "nope"],
            "unknown suite `nope`",
        ),
        (
            &[
                "basis-change",
                "--type",
                "A1",
                "--from",
                "Foo",
                "--to",
                "Verma",
                "--x",
                "e",
            ],
            "unknown basis `Foo`",
        ),
        (&["frobnicate"], "unrecognized subcommand"),
        (&["verify"], "--type"),
    ];
    for (args, msg) in cases {
        let out = klcat(args);
        assert_eq!(out.code, EXIT_USAGE, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(out.stderr.contains(msg), "{args:?}: {}", out.stderr);
    }
}

#[test]
fn help_is_not_an_error() {
    let out = klcat(&["--help"]);
    assert_eq!(out.code, EXIT_OK);
    for sub in ["weyl", "klpoly", "basis-change", "verify", "block-check"] {
        assert!(out.stdout.contains(sub));
    }
}

#[test]
fn config_file_and_overrides() {
    let dir = std::env::temp_dir().join(format!("klcat-config-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("klcat.conf");
    fs::write(&cfg, "# test\nformat = table\ncap = 10\nwidth = 50\n").unwrap();

    let run_env = |args: &[&str], env: Option<&Path>| {
        run_with_env(
            std::iter::once("klcat").chain(args.iter().copied()),
            env.map(Path::to_path_buf),
        )
    };
    // cap from the environment-selected file
    let out = run_env(&["weyl", "--type", "A3", "--info"], Some(&cfg));
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("cap 10"));
    // flags beat the file
    let out = run_env(
        &["--cap", "100", "verify", "--type", "A2", "--suite", "weyl"],
        Some(&cfg),
    );
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("suite weyl:A2\n"));
    let out = run_env(
        &[
            "--cap", "100", "verify", "--type", "A2", "--suite", "weyl", "--format", "json",
        ],
        Some(&cfg),
    );
    assert!(out.stdout.starts_with("{\"schema\":1,"));
    // --config beats the environment
    let other = dir.join("other.conf");
    fs::write(&other, "format = csv\n").unwrap();
    let out = run_env(
        &[
            "--config",
            other.to_str().unwrap(),
            "verify",
            "--type",
            "A1",
            "--suite",
            "weyl",
        ],
        Some(&cfg),
    );
    assert!(
        out.stdout.starts_with("name,pass,detail\n"),
        "{}",
        out.stdout
    );
    // broken files are usage errors
    fs::write(&other, "colour = red\n").unwrap();
    let out = run_env(
        &["--config", other.to_str().unwrap(), "weyl", "--type", "A1"],
        None,
    );
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("unknown key `colour`"));
    let out = run_env(
        &[
            "--config",
            "/nonexistent/klcat.conf",
            "weyl",
            "--type",
            "A1",
        ],
        None,
    );
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("cannot read"));
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn timings_only_on_request() {
    let plain = klcat(&["verify", "--type", "A1", "--suite", "hecke"]);
    assert!(!plain.stdout.contains("elapsed_ms"));
    let timed = klcat(&["verify", "--type", "A1", "--suite", "hecke", "--timings"]);
    assert!(timed.stdout.contains("\"elapsed_ms\":"));
}
