//! Golden-file cases shared by the CLI and acceptance tests.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct GoldenCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
}

/// Run from `tests/golden`, so ideal files are given by bare name.
pub const DOCUMENTED: &[GoldenCase] = &[
    GoldenCase {
        name: "rees_x2y3",
        args: &["rees", "x2y3.ideal"],
        code: 0,
    },
    GoldenCase {
        name: "itoh_2_3_k6",
        args: &["itoh", "--rees", "2,3", "--k", "6"],
        code: 0,
    },
    GoldenCase {
        name: "tower_e4_k6",
        args: &["tower", "--e", "4", "--k", "6"],
        code: 0,
    },
    GoldenCase {
        name: "krull_s_extra_dvr",
        args: &[
            "krull",
            "--rees",
            "2,3",
            "--k",
            "1",
            "--family",
            "S",
            "--has-extra-dvr",
        ],
        code: 0,
    },
    GoldenCase {
        name: "co2_passthrough",
        args: &["co2", "--components", "2,3;", "--e", "6"],
        code: 0,
    },
];

pub const EXTRA: &[GoldenCase] = &[
    GoldenCase {
        name: "closure_x2y2_k1",
        args: &["closure", "x2y2.ideal", "--k", "1"],
        code: 0,
    },
    GoldenCase {
        name: "closure_xy_k2",
        args: &["closure", "xy.ideal", "--k", "2"],
        code: 0,
    },
    GoldenCase {
        name: "itoh_2_3_k4",
        args: &["itoh", "--rees", "2,3", "--k", "4"],
        code: 0,
    },
    GoldenCase {
        name: "tower_e6_k6_oracle",
        args: &["tower", "--e", "6", "--k", "6", "--oracle"],
        code: 0,
    },
    GoldenCase {
        name: "krull_s_undecided",
        args: &["krull", "--rees", "2,2", "--k", "1", "--family", "S"],
        code: 0,
    },
];

pub struct Captured {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn run_binary(args: &[&str]) -> Captured {
    let out = Command::new(env!("CARGO_BIN_EXE_reesval"))
        .args(args)
        .current_dir(golden_dir())
        .output()
        .expect("binary runs");
    Captured {
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        code: out.status.code().expect("exit code"),
    }
}

/// Compares against `<name>.<ext>`; with `REESVAL_BLESS=1` rewrites it.
pub fn check_golden(name: &str, ext: &str, actual: &str) -> Result<(), String> {
    let path = golden_dir().join(format!("{name}.{ext}"));
    if std::env::var_os("REESVAL_BLESS").is_some() {
        std::fs::write(&path, actual).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected =
        std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected == actual {
        Ok(())
    } else {
        Err(format!(
            "{} differs:\n--- expected\n{expected}--- actual\n{actual}",
            path.display()
        ))
    }
}
