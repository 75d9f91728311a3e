use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corridor"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn worked_examples() {
    assert_eq!(
        stdout(&[
            "count",
            "--h",
            "4",
            "--n",
            "9",
            "--start",
            "2",
            "--center",
            "2",
            "--halfwidth",
            "1"
        ]),
        "162\n"
    );
    assert_eq!(
        stdout(&["count", "--h", "4", "--n", "0", "--start", "3", "--end", "3"]),
        "1\n"
    );
    let map = stdout(&[
        "map",
        "--h",
        "5",
        "--center",
        "3",
        "--i",
        "1",
        "--j",
        "2",
        "--path",
        "1:DUDUDUUUUUDU",
    ]);
    assert!(map.contains("3/2:TTATATTATATA"), "{map}");
    assert!(map.contains("3/1:ATATATTTTATA"), "{map}");
}

#[test]
fn engines_print_identical_output() {
    let cases: [&[&str]; 4] = [
        &["--h", "4", "--n", "16", "--start", "0", "--end", "4"],
        &["--h", "5", "--n", "15", "--start", "0", "--end", "1"],
        &[
            "--h",
            "6",
            "--n",
            "11",
            "--start",
            "2",
            "--center",
            "3",
            "--halfwidth",
            "2",
        ],
        &[
            "--h",
            "3",
            "--n",
            "7",
            "--start",
            "1",
            "--center",
            "-1",
            "--halfwidth",
            "0",
        ],
    ];
    for case in cases {
        let outputs: Vec<String> = ["dp", "cf", "tm", "oracle"]
            .iter()
            .map(|e| {
                let mut args = vec!["count"];
                args.extend_from_slice(case);
                args.extend(["--engine", e]);
                stdout(&args)
            })
            .collect();
        assert!(
            outputs.iter().all(|o| *o == outputs[0]),
            "{case:?}: {outputs:?}"
        );
    }
}

#[test]
fn exit_code_matrix() {
    let matrix: &[(&[&str], i32)] = &[
        (
            &[
                "count", "--h", "4", "--n", "3", "--start", "0", "--end", "1",
            ],
            0,
        ),
        (
            &[
                "sequence", "--h", "3", "--start", "0", "--terms", "12", "--ref", "A000045",
            ],
            0,
        ),
        (
            &[
                "sequence", "--h", "4", "--start", "0", "--terms", "12", "--ref", "A000045",
            ],
            1,
        ),
        (
            &[
                "sequence", "--h", "3", "--start", "0", "--terms", "5", "--ref", "A999999",
            ],
            2,
        ),
        (&["table", "--h", "4", "--nmax", "16", "--golden"], 0),
        (&["table", "--h", "7", "--nmax", "16", "--golden"], 2),
        (
            &[
                "verify",
                "--suite",
                "bijections",
                "--hmax",
                "3",
                "--nmax",
                "6",
            ],
            0,
        ),
        (
            &[
                "map",
                "--h",
                "2",
                "--center",
                "1",
                "--i",
                "0",
                "--j",
                "1",
                "--path",
                "0:UDU",
                "--variant",
                "reverse",
            ],
            2,
        ),
        (
            &[
                "map", "--h", "5", "--center", "3", "--i", "4", "--j", "1", "--path", "4:",
            ],
            2,
        ),
        (
            &[
                "map", "--h", "5", "--center", "3", "--i", "1", "--j", "2", "--path", "1:XY",
            ],
            2,
        ),
        (
            &[
                "count", "--h", "3", "--n", "2", "--start", "4", "--end", "0",
            ],
            2,
        ),
        (
            &[
                "count", "--h", "3", "--n", "2", "--start", "0", "--end", "7",
            ],
            2,
        ),
        (
            &[
                "count",
                "--h",
                "3",
                "--n",
                "2",
                "--start",
                "0",
                "--center",
                "1",
                "--halfwidth",
                "-2",
            ],
            2,
        ),
        (&["count", "--h", "3", "--n", "2", "--start", "0"], 2),
        (
            &[
                "count", "--h", "3", "--n", "2", "--start", "0", "--end", "0", "--engine", "magic",
            ],
            2,
        ),
        (&["frobnicate"], 2),
        (&["count", "--bogus"], 2),
    ];
    for (args, expected) in matrix {
        assert_eq!(code(args), *expected, "{args:?}");
    }
}

#[test]
fn oracle_respects_cap() {
    let args = [
        "count", "--h", "4", "--n", "9", "--start", "2", "--end", "1", "--engine", "oracle",
    ];
    let capped = Command::new(env!("CARGO_BIN_EXE_corridor"))
        .args(args)
        .env("CORRIDOR_ENUM_CAP", "80")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    let ok = Command::new(env!("CARGO_BIN_EXE_corridor"))
        .args(args)
        .env("CORRIDOR_ENUM_CAP", "81")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "81\n");
}

#[test]
fn json_payloads() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "--json", "count", "--h", "10", "--n", "200", "--start", "0", "--end", "0",
    ]))
    .unwrap();
    assert!(v["count"].as_str().unwrap().len() > 20);

    let reports: serde_json::Value = serde_json::from_str(&stdout(&[
        "verify",
        "--suite",
        "identities",
        "--hmax",
        "4",
        "--nmax",
        "8",
    ]))
    .unwrap();
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 6);
    for r in reports {
        assert!(r["suite"].is_string() && r["checked"].is_string());
        assert_eq!(r["failures"].as_array().unwrap().len(), 0);
    }

    let err: serde_json::Value = serde_json::from_slice(
        &run(&[
            "--json", "count", "--h", "3", "--n", "2", "--start", "9", "--end", "0",
        ])
        .stdout,
    )
    .unwrap();
    assert!(err["error"].as_str().unwrap().contains("outside"));
}

#[test]
fn enumerate_lists_in_order() {
    assert_eq!(
        stdout(&["enumerate", "--h", "2", "--n", "2", "--start", "1"]),
        "1:DU\n1:UD\n"
    );
    assert_eq!(
        stdout(&[
            "enumerate",
            "--h",
            "4",
            "--n",
            "12",
            "--start",
            "0",
            "--limit",
            "2"
        ])
        .lines()
        .count(),
        2
    );
    let seq = stdout(&["sequence", "--h", "2", "--start", "0", "--terms", "7"]);
    assert_eq!(seq, "1,1,2,2,4,4,8\n");
}
