use std::path::PathBuf;
use std::process::Command;

fn header() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/fibrook.h")
}

#[test]
fn header_declares_every_export() {
    let h = std::fs::read_to_string(header()).unwrap();
    let src = include_str!("../src/lib.rs");
    let exports: Vec<&str> = src
        .split("extern \"C\" fn ")
        .skip(1)
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 15);
    for name in exports {
        assert!(
            h.contains(&format!(" {name}(")) || h.contains(&format!("*{name}(")),
            "{name} missing"
        );
    }
    assert!(h.contains("typedef struct FibrookPoly FibrookPoly;"));
    assert!(h.contains("FIBROOK_STATUS_OK = 0"));
}

#[test]
fn header_compiles_as_c() {
    let Ok(out) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"])
        .arg(header())
        .output()
    else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn c_program_links_against_staticlib() {
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap();
    let lib = profile_dir.join("libfibrook_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("staticlib or C compiler unavailable; skipping");
        return;
    }
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let bin = std::env::temp_dir().join(format!("fibrook-smoke-{}", std::process::id()));
    let status = Command::new("cc")
        .arg(dir.join("tests/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    std::fs::remove_file(&bin).ok();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "q^4\n");
}
