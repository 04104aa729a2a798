use std::process::{Command, Output};
use std::sync::Arc;

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data");

fn moonshine(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_moonshine"))
        .args(args)
        .arg("--data")
        .arg(DATA)
        .env_remove("MOONSHINE_DATA")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn nchi_prints_value_and_factorization() {
    let o = moonshine(&["nchi", "166"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4032 = 2^6*3^2*7\n");
}

#[test]
fn exit_codes() {
    assert_eq!(moonshine(&["nchi", "0"]).status.code(), Some(2));
    assert_eq!(moonshine(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(moonshine(&["cusps", "twelve"]).status.code(), Some(2));
    assert_eq!(moonshine(&["al", "12", "2"]).status.code(), Some(2));
    assert_eq!(moonshine(&["transform", "6", "0", "6"]).status.code(), Some(1));
    assert_eq!(moonshine(&["invgroup", "1"]).status.code(), Some(1), "sweep too large without a limit");
    assert_eq!(moonshine(&["--help"]).status.code(), Some(0));
}

#[test]
fn equiv_prints_verdict_and_witness() {
    let o = moonshine(&["equiv", "5/18", "1/6", "12"]);
    let text = stdout(&o);
    assert!(text.starts_with("equivalent\ttrue\nwitness\t[["), "{text}");
    let o = moonshine(&["equiv", "1/2", "0", "4"]);
    assert_eq!(stdout(&o), "equivalent\tfalse\nwitness\tnone\n");
}

#[test]
fn tsv_and_json_carry_the_same_values() {
    let tsv = stdout(&moonshine(&["transform", "84|2+", "1/3", "2331309585756753201600"]));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&moonshine(&["transform", "84|2+", "1/3", "2331309585756753201600", "--format", "json"])))
            .unwrap();
    let r = &json["result"];
    assert!(tsv.contains(&format!("scale\t{}\n", r["scale"].as_str().unwrap())));
    assert!(tsv.contains(&format!("e\t{}\n", r["e"].as_str().unwrap())));
    assert!(tsv.contains(&format!("pc\t{}\n", r["pc"].as_str().unwrap())));
    assert_eq!(r["scale"], "1/56");

    let json: serde_json::Value = serde_json::from_str(&stdout(&moonshine(&["invgroup", "166", "--json"]))).unwrap();
    assert_eq!(json["result"]["n_chi"], "4032");
    assert!(json["result"]["cusp_verdicts"][0]["denominator"].is_string());
}

#[test]
fn environment_overrides_data_flag() {
    let o = Command::new(env!("CARGO_BIN_EXE_moonshine"))
        .args(["distinct", "--data", "/nonexistent"])
        .env("MOONSHINE_DATA", DATA)
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "172\n");
    let o = Command::new(env!("CARGO_BIN_EXE_moonshine"))
        .args(["distinct", "--data", DATA])
        .env("MOONSHINE_DATA", "/nonexistent")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn phi_with_a_classes_file() {
    let o = moonshine(&["phi", "1/71", "--classes", &format!("{DATA}/classes.tsv")]);
    let zero = moonshine(&["phi", "0"]);
    let tail = |o: &Output| stdout(o).lines().skip(1).map(String::from).collect::<Vec<_>>();
    assert_eq!(tail(&o), tail(&zero));
}

#[test]
fn remote_mode_matches_local() {
    let rt = tokio::runtime::Runtime::new().unwrap();
    let listener = rt.block_on(tokio::net::TcpListener::bind("127.0.0.1:0")).unwrap();
    let url = format!("http://{}", listener.local_addr().unwrap());
    let engine = Arc::new(moonshine_api::Engine::new(DATA));
    rt.spawn(async move { axum::serve(listener, moonshine_service::router(engine)).await.unwrap() });
    for args in [vec!["nchi", "166"], vec!["cusps", "36", "--widths"], vec!["table1"], vec!["symbol", "orbit", "84|2+"]] {
        let local = moonshine(&args);
        let mut remote_args = args.clone();
        remote_args.extend(["--remote", url.as_str()]);
        let remote = moonshine(&remote_args);
        assert_eq!(stdout(&remote), stdout(&local), "{args:?}");
    }
    assert_eq!(moonshine(&["nchi", "0", "--remote", &url]).status.code(), Some(2));
    assert_eq!(moonshine(&["phi", "0", "--classes", "x", "--remote", &url]).status.code(), Some(2));
}
