use bitangent_cli::{run, EXIT_DOMAIN, EXIT_OK, EXIT_PARSE, EXIT_USAGE};
use bitangent_core::expr::{format_quartic, parse_quartic};
use bitangent_testkit::random;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn bt(args: &[&str]) -> bitangent_cli::Outcome {
    run(std::iter::once("bitangent").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let out = bt(args);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn render(terms: &[([u8; 4], i64)]) -> String {
    let names = ["x", "y", "z", "w"];
    let mut s = String::new();
    for (e, c) in terms {
        s.push_str(&format!(" {:+}", c));
        for (k, n) in e.iter().zip(names) {
            if *k > 0 {
                s.push_str(&format!("*{n}^{k}"));
            }
        }
    }
    s
}

#[test]
fn round_trip_random_quartics() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..200 {
        let terms = random::sparse_quartic(&mut rng, 7, 50);
        let f = parse_quartic(&render(&terms)).unwrap();
        let text = format_quartic(&f);
        assert_eq!(parse_quartic(&text).unwrap(), f, "{text}");
    }
}

#[test]
fn classify_example() {
    let v = json(&["classify", "--quartic", "x^4+y^4+z^4+w^4", "--line", "1,0,0,0;0,1,0,0"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "classify");
    assert_eq!(v["results"]["kind"], "Transverse");
    let v = json(&["classify", "--quartic", "x^4 - x*y^3 - z^4 + z*w^3", "--plucker", "--line", "8,0,16,-1,0,2"]);
    assert_eq!(v["results"]["kind"], "Quadritangent");
    assert_eq!(v["results"]["partition"], serde_json::json!([4]));
}

#[test]
fn verify_example_covers_both_readings() {
    let v = json(&["verify-example"]);
    let readings = v["results"]["readings"].as_array().unwrap();
    let names: Vec<&str> = readings.iter().map(|r| r["reading"].as_str().unwrap()).collect();
    assert_eq!(names, ["printed", "corrected"]);
    assert_eq!(v["results"]["claim_holds_for"], serde_json::json!(["corrected"]));
}

#[test]
fn bitangents_from_file() {
    let dir = std::env::temp_dir().join(format!("bitangent-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("example.txt");
    std::fs::write(&path, "x^4 - x*y^3 - z^4 + z*w^3\n").unwrap();
    let arg = format!("@{}", path.display());
    let v = json(&["bitangents", "--quartic", &arg, "--height", "16"]);
    let found = v["results"]["bitangents"]
        .as_array()
        .unwrap()
        .iter()
        .any(|e| e["line"]["plucker"] == serde_json::json!([8, 0, 16, -1, 0, 2]));
    assert!(found);

    let out = bt(&["bitangents", "--quartic", &arg, "--height", "3", "--format", "csv"]);
    assert_eq!(out.code, EXIT_OK);
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next().unwrap(), "p01,p02,p03,p12,p13,p23,kind,contact_count,contained");
    assert!(out.stdout.contains(",Contained,0,true"));

    let report = dir.join("report.json");
    let out = bt(&["verify-example", "--out", report.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.is_empty());
    assert!(std::fs::read_to_string(&report).unwrap().contains("\"verify-example\""));
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let cases: [&[&str]; 3] = [
        &["bitangents", "--quartic", "x^4 - x*y^3 - z^4 + z*w^3", "--height", "8", "--no-timing"],
        &["points", "--quartic", "x^4 + y^4 - z^4 - w^4", "--height", "6", "--no-timing"],
        &["quadpoints", "--quartic", "x*w^3 + y*z*w^2 + x^4 + y^4 + z^4", "--point", "0,0,0,1", "--t-range", "0..20", "--no-timing"],
    ];
    for case in cases {
        let mut outs = Vec::new();
        for w in ["1", "2", "8"] {
            let mut args = case.to_vec();
            args.extend(["--workers", w]);
            let mut v = json(&args);
            v["config"]["workers"] = Value::Null;
            outs.push(serde_json::to_string(&v).unwrap());
        }
        assert_eq!(outs[0], outs[1]);
        assert_eq!(outs[0], outs[2]);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(bt(&["nonsense"]).code, EXIT_USAGE);
    assert_eq!(bt(&["classify", "--quartic", "x^4"]).code, EXIT_USAGE);
    assert_eq!(bt(&["through-point", "--quartic", "x^4+y^4+z^4+w^4", "--point", "1,0,0,0", "--format", "csv"]).code, EXIT_USAGE);
    assert_eq!(bt(&["classify", "--quartic", "x^3+y^4", "--line", "1,0,0,0;0,1,0,0"]).code, EXIT_PARSE);
    assert_eq!(bt(&["classify", "--quartic", "x^4 + + y^4", "--line", "1,0,0,0;0,1,0,0"]).code, EXIT_PARSE);
    assert_eq!(bt(&["classify", "--quartic", "x^4 - x^4", "--line", "1,0,0,0;0,1,0,0"]).code, EXIT_PARSE);
    assert_eq!(bt(&["through-point", "--quartic", "x^4+y^4+z^4+w^4", "--point", "1,0,0,0"]).code, EXIT_DOMAIN);
    assert_eq!(bt(&["through-point", "--quartic", "x^4+y^4+z^4", "--point", "0,0,0,1"]).code, EXIT_DOMAIN);
    let out = bt(&["classify", "--quartic", "x^4", "--plucker", "--line", "1,1,1,1,1,1"]);
    assert_eq!(out.code, EXIT_DOMAIN);
    assert!(out.stderr.starts_with("error:"));
}

#[test]
fn quadpoints_and_through_point() {
    let v = json(&["quadpoints", "--quartic", "x*w^3 + y*z*w^2 + x^4 + y^4 + z^4", "--point", "0,0,0,1", "--param", "1:1", "--param", "0:1"]);
    let items = v["results"]["items"].as_array().unwrap();
    assert_eq!(items[0]["verified"], true);
    assert_eq!(items[0]["outcome"]["Ok"]["points"][0]["discriminant_kernel"], "-2");
    assert_eq!(v["warnings"].as_array().unwrap().len(), 1);

    let v = json(&["through-point", "--quartic", "x*w^3 + y*z*w^2 + x^4 + y^4 + z^4", "--point", "0,0,0,1"]);
    assert_eq!(v["results"]["branch"]["degree"], 6);
    assert_eq!(v["results"]["rational"].as_array().unwrap().len(), 2);
}

#[test]
fn incidence_graph_report() {
    let v = json(&["incidence", "--quartic", "x^4 - x*y^3 - z^4 + z*w^3", "--height", "2"]);
    let n = v["results"]["lines"].as_array().unwrap().len();
    assert_eq!(v["results"]["degrees"].as_array().unwrap().len(), n);
}
