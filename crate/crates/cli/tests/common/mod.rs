//! Golden CLI cases shared by `golden.rs` and the acceptance run.

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], exit: i32) -> Case {
    Case { name, args, exit }
}

pub const CASES: [Case; 15] = [
    case("mv_square", &["mv", "square.json", "square.json"], 0),
    case("hat_a012", &["hat", "a012.json"], 0),
    case("count_df_tri", &["count", "--mode", "df", "tri.json"], 0),
    case("euler_bkk_square", &["euler-bkk", "square.json"], 0),
    case("critical_ci_tshape", &["critical-ci", "tshape.json"], 0),
    case("symmetric_ci_seg20", &["symmetric-ci", "seg20.json"], 0),
    case("obstructions_a013", &["obstructions", "a013.json"], 0),
    case("blinders", &["check", "--blinders", "blinder.json"], 0),
    case("support_seq", &["support-seq", "tshape.json", "--vectors", "tshape_vectors.json", "--l", "1,0"], 0),
    case("oracle_s1cci", &["oracle", "--mode", "critical", "--system", "s1cci", "tshape.json", "--seed", "3"], 0),
    case("answerlink3_cube", &["identities", "--which", "answerlink3", "cube.json"], 0),
    case("algebraic_degree", &["algebraic-degree", "a01.json", "a01.json"], 0),
    case("symmetric_ci_diag", &["symmetric-ci", "diag.json"], 3),
    case("volume_dup", &["volume", "dup.json"], 2),
    case("oracle_vline", &["oracle", "--mode", "critical", "vline.json"], 4),
];

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bkkit"))
        .args(args)
        .current_dir(golden_dir().join("inputs"))
        .output()
        .expect("bkkit runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8 output"))
}

/// Runs every case; returns the names of the failures. With `BKKIT_BLESS` set the
/// expected files are rewritten instead of compared.
pub fn check_all() -> Vec<String> {
    let bless = std::env::var_os("BKKIT_BLESS").is_some();
    let mut failed = Vec::new();
    for c in &CASES {
        let (code, stdout) = run(c.args);
        let path = golden_dir().join("expected").join(format!("{}.json", c.name));
        if bless {
            std::fs::write(&path, &stdout).expect("write expected output");
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_default();
        if code != c.exit || stdout != expected {
            failed.push(format!("{} (exit {code}, expected {})", c.name, c.exit));
        }
    }
    failed
}
