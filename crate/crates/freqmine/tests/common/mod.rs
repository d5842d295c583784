//! Process-level helpers shared by the integration test targets.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs the compiled `freqmine` binary with `args`, feeding `stdin` (or
/// nothing) and capturing both streams.
pub fn freqmine(args: &[&str], stdin: Option<&str>) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_freqmine"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn freqmine");
    if let Some(text) = stdin {
        let handle = child.stdin.as_mut().expect("stdin is piped");
        match handle.write_all(text.as_bytes()) {
            Ok(()) => {}
            // The child is free to exit without reading stdin (e.g. on an
            // invalid flag); that must not fail the test harness.
            Err(error) if error.kind() == std::io::ErrorKind::BrokenPipe => {}
            Err(error) => panic!("write stdin: {error}"),
        }
    }
    drop(child.stdin.take());
    let Output {
        status,
        stdout,
        stderr,
    } = child.wait_with_output().expect("wait for freqmine");
    Run {
        stdout: String::from_utf8(stdout).expect("stdout is UTF-8"),
        stderr: String::from_utf8(stderr).expect("stderr is UTF-8"),
        code: status.code().expect("terminated by signal"),
    }
}

pub fn fixture_path(relative: &str) -> String {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.push("tests");
    path.push(relative);
    path.to_str().expect("fixture paths are UTF-8").to_string()
}

pub fn fixture(relative: &str) -> String {
    std::fs::read_to_string(fixture_path(relative)).expect("read fixture")
}
