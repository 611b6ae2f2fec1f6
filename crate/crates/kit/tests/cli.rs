use diffeo_kit::{run, Outcome};
use serde_json::Value;

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn kit(args: &[&str]) -> Outcome {
    run(std::iter::once("diffeo-kit").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    let out = kit(&a);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn rho_on_glued_axes() {
    let out = kit(&["rho", "catalog:wedge_lines", "--k", "2"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("source 0, target 1, not surjective"), "{}", out.stdout);
    let v = json(&["rho", "catalog:wedge_lines", "--k", "2"]);
    assert_eq!(v["command"], "rho");
    assert_eq!(v["source_dim"], 0);
    assert_eq!(v["target_dim"], 1);
    assert_eq!(v["surjective"], false);
}

#[test]
fn filteredness_of_the_sign_quotient() {
    let out = kit(&["filtered", "catalog:z2_quotient", "--depth", "4"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("weakly_filtered: yes, filtered: no"), "{}", out.stdout);
    assert_eq!(kit(&["filtered", "catalog:z2_quotient", "--depth", "4", "--strict"]).code, 1);
    assert_eq!(kit(&["filtered", "catalog:euclidean", "--strict"]).code, 0);
}

#[test]
fn spaghetti_tangent_dimension() {
    let out = kit(&["tangent", "catalog:spaghetti", "--params", "m=3"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("dim T = 3"), "{}", out.stdout);
    let out = kit(&["tangent", "catalog:z2_quotient", "--k", "2"]);
    assert!(out.stdout.contains("dim T^2 = 1"), "{}", out.stdout);
}

#[test]
fn form_commands() {
    let file = data("z2_quotient.txt");
    let out = kit(&["check-form", &file, "--form", "area"]);
    assert!(out.stdout.contains("verdict: compatible"), "{}", out.stdout);
    let out = kit(&["check-form", &file, "--form", "tilt", "--strict"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("counterexample arrow: neg"), "{}", out.stdout);
    let v = json(&["eval-form", &file, "--form", "area"]);
    assert_eq!(v["coords"], serde_json::json!(["1/1"]));
    let out = kit(&["eval-form", &file, "--form", "tilt"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("not compatible along arrow `neg`"), "{}", out.stderr);
}

#[test]
fn form_data_for_catalog_spaces() {
    let out = kit(&["check-form", "catalog:z2_quotient", "--data", &data("z2_quotient.txt"), "--form", "area"]);
    assert_eq!(out.code, 2, "a data file may not redeclare the space");
    let v = json(&["eval-form", &data("axes.txt"), "--form", "bump"]);
    assert_eq!(v["coords"], serde_json::json!(["1/1", "5/1"]));
}

#[test]
fn section_checks() {
    let out = kit(&["sections", "catalog:wedge_lines", "--data", &data("wedge_sections.txt"), "--strict"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("section v (tangent): valid"), "{}", out.stdout);
    assert!(out.stdout.contains("section bad (tangent): invalid"), "{}", out.stdout);
    let v = json(&["sections", "catalog:wedge_lines", "--data", &data("wedge_sections.txt")]);
    assert_eq!(v["sections"][2]["functional"], serde_json::json!(["2/1", "-1/3"]));
    let out = kit(&["sections", "catalog:z2_quotient", "--data", &data("wedge_sections.txt")]);
    assert_eq!(out.code, 2);
}

#[test]
fn catalog_listing_and_export() {
    for name in diffeo_core::catalog::NAMES {
        let out = kit(&["catalog", name, "--strict"]);
        assert_eq!(out.code, 0, "{name}: {}", out.stdout);
        assert!(!out.stdout.contains("FAIL"));
        let exported = kit(&["catalog", name, "--export"]).stdout;
        let p = diffeo_kit::parse_presentation(&exported).unwrap();
        assert_eq!(p, diffeo_core::catalog::build_catalog_space(name, &[]).unwrap().presentation);
    }
    let v = json(&["catalog", "wedge_lines", "--params", "m=3"]);
    assert_eq!(v["space"], "wedge_lines(3)");
    assert!(v["oracles"].as_array().unwrap().iter().all(|o| o["agrees"] == true));
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(kit(&["tangent", "/nonexistent/file"]).code, 2);
    assert_eq!(kit(&["tangent", "catalog:nowhere"]).code, 2);
    assert_eq!(kit(&["tangent", "catalog:spaghetti", "--params", "q=1"]).code, 2);
    assert_eq!(kit(&["tangent", "catalog:spaghetti", "--params", "m"]).code, 2);
    assert_eq!(kit(&["tangent", &data("axes.txt"), "--params", "m=1"]).code, 2);
    assert_eq!(kit(&["rho", "catalog:euclidean"]).code, 2, "--k is required");
    assert_eq!(kit(&["frobnicate"]).code, 2);
    assert_eq!(kit(&["check-form", &data("axes.txt"), "--form", "nope"]).code, 2);
    let help = kit(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("tangent"));
}

#[test]
fn parse_errors_carry_positions() {
    let dir = std::env::temp_dir().join(format!("diffeo-kit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.txt");
    std::fs::write(&path, "space broken\nchart x : R^\n").unwrap();
    let out = kit(&["tangent", path.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 2, column 13"), "{}", out.stderr);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn invalid_presentations_are_rejected() {
    let dir = std::env::temp_dir().join(format!("diffeo-kit-invalid-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("unpointed.txt");
    std::fs::write(&path, "space s\nchart x : R^1\narrow a : x -> x = [s1 + 1]\n").unwrap();
    let out = kit(&["tangent", path.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("invalid presentation"), "{}", out.stderr);
    std::fs::remove_dir_all(&dir).unwrap();
}
