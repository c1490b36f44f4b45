#[allow(dead_code)]
#[path = "../examples/exact_arithmetic.rs"]
mod exact_arithmetic;

#[allow(dead_code)]
#[path = "../examples/signatures.rs"]
mod signatures;

#[allow(dead_code)]
#[path = "../examples/gadgets.rs"]
mod gadgets;

#[allow(dead_code)]
#[path = "../examples/holant_eval.rs"]
mod holant_eval;

#[allow(dead_code)]
#[path = "../examples/leafless_cover.rs"]
mod leafless_cover;

#[allow(dead_code)]
#[path = "../examples/interpolation.rs"]
mod interpolation;

#[allow(dead_code)]
#[path = "../examples/classify.rs"]
mod classify;

#[allow(dead_code)]
#[path = "../examples/condition_systems.rs"]
mod condition_systems;

#[allow(dead_code)]
#[path = "../examples/planar_matchings.rs"]
mod planar_matchings;

#[allow(dead_code)]
#[path = "../examples/instance_files.rs"]
mod instance_files;

#[test]
fn exact_arithmetic_example_runs() {
    exact_arithmetic::main().expect("exact_arithmetic example should run");
}

#[test]
fn signatures_example_runs() {
    signatures::main().expect("signatures example should run");
}

#[test]
fn gadgets_example_runs() {
    gadgets::main().expect("gadgets example should run");
}

#[test]
fn holant_eval_example_runs() {
    holant_eval::main().expect("holant_eval example should run");
}

#[test]
fn leafless_cover_example_runs() {
    leafless_cover::main().expect("leafless_cover example should run");
}

#[test]
fn interpolation_example_runs() {
    interpolation::main().expect("interpolation example should run");
}

#[test]
fn classify_example_runs() {
    classify::main().expect("classify example should run");
}

#[test]
fn condition_systems_example_runs() {
    condition_systems::main().expect("condition_systems example should run");
}

#[test]
fn planar_matchings_example_runs() {
    planar_matchings::main().expect("planar_matchings example should run");
}

#[test]
fn instance_files_example_writes_readable_files() {
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("instance-files");
    let written = instance_files::write_all(&dir).expect("instance files example should run");
    assert_eq!(written.len(), 5);
    let shipped = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    for name in written {
        let fresh = std::fs::read_to_string(dir.join(&name)).unwrap();
        let kept = std::fs::read_to_string(shipped.join(&name)).unwrap();
        assert_eq!(fresh, kept, "fixtures/{name} is stale");
    }
}
