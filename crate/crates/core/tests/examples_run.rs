use std::path::PathBuf;
use std::process::Command;

// `cargo test` builds the examples next to the test binaries
fn example(name: &str) -> Command {
    let deps = std::env::current_exe().unwrap();
    let dir: PathBuf = deps.parent().unwrap().parent().unwrap().join("examples");
    Command::new(dir.join(format!("{name}{}", std::env::consts::EXE_SUFFIX)))
}

fn run(name: &str, args: &[&str]) -> String {
    let out = example(name)
        .args(args)
        .output()
        .unwrap_or_else(|e| panic!("{name}: {e}"));
    assert!(
        out.status.success(),
        "{name}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn every_example_runs() {
    let dir = tempfile::tempdir().unwrap();
    let mesh = dir.path().join("petal.mesh");
    assert!(run("map_distortion", &[]).contains("rose-petal(a=0.9): K = 2.000000"));
    assert!(run("jacobian_norms", &[]).contains("analytic ||J||_inf = 0.1500000000"));
    assert!(run("eigenvalue_bounds", &["0.9"]).contains("\"qc_lower\""));
    assert!(run("sobolev_constant", &[]).contains("0.4671552175"));
    assert!(run("sweep", &[]).starts_with("param,value,"));
    assert!(run("disc_reference", &[]).contains("extrapolated"));
    assert!(!run("verify_theorem", &[]).contains("VIOLATED"));
    assert_eq!(run("paper_table", &[]).lines().count(), 13);
    run("mesh_export", &[mesh.to_str().unwrap()]);
    let m = qcspec::Mesh::read_text(std::io::BufReader::new(std::fs::File::open(&mesh).unwrap()))
        .unwrap();
    m.validate().unwrap();
    assert_eq!(m.triangles.len(), 6 * 12 * 12);
}
