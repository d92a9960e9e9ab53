use std::path::PathBuf;
use std::process::Command;

// `cargo test` builds every example next to the test binaries.
fn examples_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().join("examples")
}

#[test]
fn every_example_runs() {
    let src = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples");
    let mut names: Vec<String> = std::fs::read_dir(&src)
        .unwrap()
        .filter_map(|e| e.unwrap().path().file_stem().map(|s| s.to_string_lossy().into_owned()))
        .collect();
    names.sort();
    assert!(names.len() >= 10);
    for name in names {
        let bin = examples_dir().join(format!("{name}{}", std::env::consts::EXE_SUFFIX));
        if !bin.exists() {
            eprintln!("skipping {name}: not built");
            continue;
        }
        let out = Command::new(&bin).output().unwrap();
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stdout.is_empty(), "{name} printed nothing");
    }
}
