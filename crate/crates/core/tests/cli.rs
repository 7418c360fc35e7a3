use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Arc;

use exact2::fincat::json::{category_from_value, functor_to_value, to_canonical_string};
use exact2::fincat::shapes::{self, arc};
use exact2::fincat::{categories_isomorphic, FinCategory};
use exact2::internal_cat::json::internal_pair_to_value;
use exact2::internal_cat::internal_from_functor;
use exact2::kernels::json::kernel_to_value;
use exact2::kernels::KernelData;
use exact2::{fixtures, sample, SizeBound};
use serde_json::{json, Value};
use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn report(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

fn exact2(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_exact2"))
        .args(args)
        .env_remove("EXACT2_SIZE_BOUND")
        .output()
        .unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, v: &Value) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, to_canonical_string(v)).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn iso(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> bool {
    categories_isomorphic(a, b, &SizeBound::default()).unwrap().is_some()
}

#[test]
fn factorize_collapse_under_bo() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "collapse.json", &functor_to_value(&shapes::collapse()));
    let r = exact2(&["factorize", "--system", "bo", "--input", s(&input), "--format", "json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = r.report();
    assert_eq!(v["schema"], "exact2-report/v1");
    assert_eq!(v["status"], "ok");
    assert_eq!(v["size_bound"]["enumerate_objects"], 6);
    assert_eq!(v["result"]["composite_equals_input"], true);
    let middle = Arc::new(category_from_value(&v["result"]["middle"]).unwrap());
    assert!(iso(&middle, &arc(shapes::arrow())));
}

#[test]
fn abcat_demo_reports_the_counterexample() {
    let r = exact2(&["abcat", "demo", "--format", "json"]);
    assert_eq!(r.code, 0);
    let v = r.report();
    assert_eq!(v["result"]["S_size"], 4);
    assert_eq!(v["result"]["Sprime_size"], 8);
    assert_eq!(v["result"]["effectivity"]["effective"], false);

    let text = exact2(&["abcat", "demo"]);
    assert_eq!(text.code, 0);
    assert!(text.stdout.contains("S_size: 4") && text.stdout.contains("Sprime_size: 8"));
}

#[test]
fn check_effective_on_a_non_congruence_is_invalid_input() {
    let dir = TempDir::new().unwrap();
    let bad = fixtures::bo_mutations().unwrap().remove(0).data;
    let input = write(&dir, "bad.json", &kernel_to_value(&KernelData::Bo(bad)));
    let r = exact2(&["check-effective", "--system", "bo", "--input", s(&input), "--format", "json"]);
    assert_eq!(r.code, 2);
    let v = r.report();
    assert_eq!(v["status"], "invalid-input");
    assert_eq!(v["result"]["error"], "not-a-congruence");
    assert_eq!(v["result"]["verdict"]["is_congruence"], false);
    assert!(!v["result"]["verdict"]["failed_conditions"].as_array().unwrap().is_empty());

    // the same input is a failed check for check-congruence
    let r = exact2(&["check-congruence", "--input", s(&input), "--format", "json"]);
    assert_eq!(r.code, 1);

    let r = exact2(&["check-effective", "--system", "so", "--input", s(&input)]);
    assert_eq!(r.code, 2, "system disagrees with the document");
}

#[test]
fn kernel_output_feeds_back_into_the_checks() {
    let dir = TempDir::new().unwrap();
    let f = shapes::to_terminal(&arc(shapes::arrow()));
    let input = write(&dir, "f.json", &functor_to_value(&f));
    for system in ["bo", "so", "bof"] {
        let r = exact2(&["kernel", "--system", system, "--input", s(&input), "--format", "json"]);
        assert_eq!(r.code, 0, "{system}");
        let k = write(&dir, "k.json", &r.report()["result"]["kernel"]);
        for verb in ["check-congruence", "quotient", "check-effective"] {
            let r = exact2(&[verb, "--input", s(&k), "--format", "json"]);
            assert_eq!(r.code, 0, "{verb} {system}: {}", r.stdout);
        }
        let r = exact2(&["check-effective", "--system", system, "--input", s(&input), "--format", "json"]);
        assert_eq!(r.code, 0);
        assert_eq!(r.report()["result"]["effective"], true);
    }
}

#[test]
fn usage_errors_exit_before_computing() {
    for args in [
        &["frobnicate"][..],
        &["validate", "--frob", "x"],
        &["factorize", "--system", "xy", "--input", "x.json"],
        &["factorize", "--input", "x.json"],
        &["suite", "--mutation", "nothing"],
    ] {
        let r = exact2(args);
        assert_eq!(r.code, 2, "{args:?}");
        assert!(r.stdout.is_empty());
        assert!(!r.stderr.is_empty());
    }
    assert_eq!(exact2(&["--help"]).code, 0);
}

#[test]
fn malformed_documents_name_the_path() {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("broken.json");
    std::fs::write(&p, "{ not json").unwrap();
    let r = exact2(&["classify", "--input", s(&p), "--format", "json"]);
    assert_eq!(r.code, 2);
    assert!(r.report()["result"]["path"].as_str().unwrap().starts_with("line 1"));

    let mut v = functor_to_value(&shapes::collapse());
    v["source"]["morphisms"][0]["dom"] = json!("nowhere");
    let input = write(&dir, "f.json", &v);
    let r = exact2(&["classify", "--input", s(&input), "--format", "json"]);
    assert_eq!(r.code, 2);
    assert_eq!(r.report()["result"]["path"], "source.morphisms[0].dom");

    let missing = dir.path().join("absent.json");
    assert_eq!(exact2(&["classify", "--input", s(&missing)]).code, 2);
}

#[test]
fn validate_reports_law_violations() {
    let dir = TempDir::new().unwrap();
    let broken = json!({
        "objects": ["x"],
        "morphisms": [{"id": "1", "dom": "x", "cod": "x"}, {"id": "e", "dom": "x", "cod": "x"}],
        "identities": {"x": "1"},
    });
    let input = write(&dir, "c.json", &broken);
    let r = exact2(&["validate", "--input", s(&input), "--format", "json"]);
    assert_eq!(r.code, 1);
    let v = r.report();
    assert_eq!(v["result"]["kind"], "fincat/v1");
    assert!(!v["result"]["violations"].as_array().unwrap().is_empty());

    let f = json!({"source": broken, "target": broken, "morphisms": {"1": "1", "e": "e"}});
    let input = write(&dir, "f.json", &f);
    let r = exact2(&["classify", "--input", s(&input), "--format", "json"]);
    assert_eq!(r.code, 2, "a non-category is invalid input elsewhere");

    let good = write(&dir, "g.json", &functor_to_value(&shapes::point_inclusion()));
    assert_eq!(exact2(&["validate", "--input", s(&good)]).code, 0);
}

#[test]
fn reports_are_byte_identical_and_round_trip() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "f.json", &functor_to_value(&shapes::collapse()));
    let mut outputs = Vec::new();
    for k in 0..2 {
        let out = dir.path().join(format!("out{k}.json"));
        let r = exact2(&["factorize", "--system", "bof", "--input", s(&input), "--format", "json", "--output", s(&out)]);
        assert_eq!(r.code, 0);
        assert!(r.stdout.is_empty());
        outputs.push(std::fs::read_to_string(&out).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    let v: Value = serde_json::from_str(&outputs[0]).unwrap();
    assert_eq!(to_canonical_string(&v) + "\n", outputs[0]);

    let a = exact2(&["suite", "--criterion", "2", "--seed", "9", "--format", "json"]);
    let b = exact2(&["suite", "--criterion", "2", "--seed", "9", "--format", "json"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn size_bound_exit_code() {
    let dir = TempDir::new().unwrap();
    let f = functor_to_value(&shapes::collapse());
    let input = write(&dir, "o.json", &json!({"f": f, "g": f}));
    let r = exact2(&["orthogonal", "--input", s(&input), "--format", "json"]);
    assert_eq!(r.code, 1, "collapse is not orthogonal to itself");
    assert!(r.report()["result"]["witness"].is_string());
    let r = exact2(&["orthogonal", "--input", s(&input), "--size-bound", "0", "--format", "json"]);
    assert_eq!(r.code, 3);
    let v = r.report();
    assert_eq!(v["status"], "size-bound");
    assert_eq!(v["size_bound"]["enumerate_objects"], 0);
}

#[test]
fn suite_with_enumeration_disabled_skips_and_passes() {
    let r = exact2(&["suite", "--size-bound", "0", "--format", "json"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let v = r.report();
    assert_eq!(v["result"]["summary"]["failed"], 0);
    let criteria = v["result"]["criteria"].as_array().unwrap();
    assert_eq!(criteria.len(), 11);
    for id in [3, 6] {
        let c = &criteria[id - 1];
        assert_eq!(c["status"], "skipped", "criterion {id}");
        assert_eq!(c["passed"], 0);
    }
}

#[test]
fn injected_mutation_fails_only_its_criterion() {
    let r = exact2(&["suite", "--criterion", "6", "--mutation", "orthogonality", "--format", "json"]);
    assert_eq!(r.code, 1);
    let c = &r.report()["result"]["criteria"][0];
    assert_eq!(c["id"], 6);
    assert_eq!(c["status"], "fail");
    assert!(!c["failures"].as_array().unwrap().is_empty());

    // the mutation is scoped to its own criterion
    let r = exact2(&["suite", "--criterion", "2", "--mutation", "orthogonality", "--format", "json"]);
    assert_eq!(r.code, 0);
    assert_eq!(exact2(&["suite", "--criterion", "12"]).code, 2);
}

#[test]
fn internal_commands() {
    let dir = TempDir::new().unwrap();
    let (s1, t1) = fixtures::sampled_ff_relation(&mut sample::rng(4)).unwrap();
    let pair = internal_pair_to_value(&internal_from_functor(&s1), &internal_from_functor(&t1));
    let input = write(&dir, "pair.json", &pair);
    let r = exact2(&["internal", "coeq", "--input", s(&input), "--format", "json"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let v = r.report();
    assert_eq!(v["result"]["kernel_pair_recovered"], true);
    let levels: Vec<i64> = v["result"]["segal"].as_array().unwrap().iter().map(|c| c["level"].as_i64().unwrap()).collect();
    assert_eq!(levels, [2, 3]);

    let p = exact2::internal_cat::json::internal_functor_to_value(&fixtures::presheaf_ff_projection().unwrap());
    let input = write(&dir, "proj.json", &p);
    for system in ["bo", "so", "bof"] {
        let r = exact2(&["internal", "factorize", "--system", system, "--input", s(&input), "--format", "json"]);
        assert_eq!(r.code, 0, "{system}");
        assert_eq!(r.report()["result"]["composite_equals_input"], true);
    }
}
