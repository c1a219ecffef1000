//! Runs the built binary.

use std::path::PathBuf;
use std::process::Command;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_apostol"));
    cmd.args(args).env_remove("APX_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

pub fn run(args: &[&str]) -> Run {
    run_with_env(args, &[])
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

/// Golden file stem and the `expand` flags producing it.
pub const GOLDEN: [(&str, &[&str]); 3] = [
    (
        "euler_m1_symbolic",
        &[
            "expand", "--family", "euler", "--m", "1", "--lambda", "1", "--x", "sym", "--n", "4",
        ],
    ),
    (
        "bernoulli_m1_symbolic",
        &[
            "expand",
            "--family",
            "bernoulli",
            "--m",
            "1",
            "--lambda",
            "1",
            "--x",
            "sym",
            "--n",
            "4",
        ],
    ),
    (
        "genocchi_gould_hopper_m2",
        &[
            "expand",
            "--family",
            "genocchi",
            "--m",
            "2",
            "--lambda",
            "2",
            "--base",
            "gould_hopper",
            "--s",
            "2",
            "--x",
            "1/2",
            "--y",
            "1/3",
            "--n",
            "6",
        ],
    ),
];

/// Compares each golden invocation in both formats; returns the number of
/// files matched.
pub fn check_golden() -> Result<usize, String> {
    let mut matched = 0;
    for (stem, args) in GOLDEN {
        for ext in ["json", "csv"] {
            let path = golden_dir().join(format!("{stem}.{ext}"));
            let want =
                std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
            let mut full = args.to_vec();
            full.extend(["--format", ext]);
            let got = run(&full);
            if got.code != 0 {
                return Err(format!(
                    "{stem}.{ext}: exit {} ({})",
                    got.code,
                    got.stderr.trim()
                ));
            }
            if got.stdout != want {
                return Err(format!("{stem}.{ext}: output differs from the golden file"));
            }
            matched += 1;
        }
    }
    Ok(matched)
}
