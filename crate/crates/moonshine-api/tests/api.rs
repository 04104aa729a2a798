use moonshine_api::*;
use moonshine_core::{Cusp, Int};
use serde_json::json;

fn engine() -> Engine {
    Engine::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data"))
}

fn run(value: serde_json::Value) -> ApiResult<Response> {
    let req: Request = serde_json::from_value(value).expect("request parses");
    engine().execute(&req)
}

#[test]
fn requests_round_trip_through_json() {
    let reqs = vec![
        json!({"op": "cusps", "n": "12", "widths": true}),
        json!({"op": "canon", "cusp": "5/18", "n": "12"}),
        json!({"op": "equiv", "c1": "5/18", "c2": "1/6", "n": "12"}),
        json!({"op": "al", "n": "6", "e": "2", "prefer": "d-is-one"}),
        json!({"op": "member-ext", "matrix": "[[2,1],[6,4]]", "n": "6", "harmonics": ["2"]}),
        json!({"op": "symbol", "action": "equiv-inf", "cusp": "1/3", "symbol": "84|2+"}),
        json!({"op": "transform", "symbol": "84|2+", "cusp": "1/3", "n_chi": "4032"}),
        json!({"op": "invgroup", "k": 1, "selection": {"cusp_limit": "100", "denominator_primes": [71]}}),
        json!({"op": "table1"}),
        json!({"op": "oracle", "action": "width", "cusp": "0", "n": "6"}),
    ];
    for v in reqs {
        let req: Request = serde_json::from_value(v.clone()).unwrap();
        let again: Request = serde_json::from_value(serde_json::to_value(&req).unwrap()).unwrap();
        assert_eq!(again, req, "{v}");
        assert_eq!(req.op(), v["op"].as_str().unwrap());
    }
    let req: Request = serde_json::from_value(json!({"op": "invgroup", "k": 166})).unwrap();
    assert!(matches!(req, Request::Invgroup { height_cap: 10_000, .. }));
}

#[test]
fn executes_the_worked_examples() {
    match run(json!({"op": "nchi", "k": 166})).unwrap() {
        Response::Nchi(r) => assert_eq!((r.n_chi, r.factorization.as_str()), (Int::from(4032), "2^6*3^2*7")),
        other => panic!("{other:?}"),
    }
    match run(json!({"op": "distinct"})).unwrap() {
        Response::Distinct(d) => assert_eq!((d.count, d.characters, d.conjugate_pairs), (172, 194, 22)),
        other => panic!("{other:?}"),
    }
    match run(json!({"op": "symbol", "action": "equiv-inf", "cusp": "1/3", "symbol": "84|2+"})).unwrap() {
        Response::EquivInf(r) => {
            assert_eq!(r.e, Some(Int::from(14)));
            assert_eq!(r.witness.unwrap().act(&Cusp::Infinity), Cusp::frac(1, 3));
        }
        other => panic!("{other:?}"),
    }
    match run(json!({"op": "equiv", "c1": "5/18", "c2": "1/6", "n": "12"})).unwrap() {
        Response::Equiv(r) => assert!(r.equivalent && r.witness.is_some()),
        other => panic!("{other:?}"),
    }
    match run(json!({"op": "cusps", "n": "12", "widths": true})).unwrap() {
        Response::Cusps(r) => {
            assert_eq!(r.classes.len(), 6);
            assert_eq!(r.classes.iter().map(|c| c.width.clone().unwrap()).sum::<Int>(), Int::from(24));
        }
        other => panic!("{other:?}"),
    }
    match run(json!({"op": "oracle", "action": "cusps", "n": "12"})).unwrap() {
        Response::OracleCusps(r) => assert_eq!(r.classes.len(), 6),
        other => panic!("{other:?}"),
    }
    match run(json!({"op": "phi", "cusp": "inf"})).unwrap() {
        Response::Phi(r) => assert_eq!(r.classes.len(), 194),
        other => panic!("{other:?}"),
    }
}

#[test]
fn responses_round_trip_through_json() {
    for v in [
        json!({"op": "transform", "symbol": "84|2+", "cusp": "1/3", "n_chi": "2331309585756753201600"}),
        json!({"op": "al", "n": "6", "e": "2"}),
        json!({"op": "heads"}),
        json!({"op": "sing", "k": 166, "cusp": "1/2"}),
    ] {
        let resp = run(v).unwrap();
        let text = serde_json::to_string(&resp).unwrap();
        assert_eq!(serde_json::from_str::<Response>(&text).unwrap(), resp);
    }
}

#[test]
fn errors_are_classified() {
    let kind = |v| run(v).unwrap_err().kind;
    assert_eq!(kind(json!({"op": "nchi", "k": 0})), ErrorKind::Usage);
    assert_eq!(kind(json!({"op": "al", "n": "12", "e": "2"})), ErrorKind::Usage);
    assert_eq!(kind(json!({"op": "cusps", "n": "0"})), ErrorKind::Usage);
    assert_eq!(kind(json!({"op": "transform", "symbol": "6", "cusp": "0", "n_chi": "6"})), ErrorKind::Domain);
    assert_eq!(kind(json!({"op": "invgroup", "k": 1})), ErrorKind::Domain);
    let missing = Engine::new("/nonexistent").execute(&Request::Distinct).unwrap_err();
    assert_eq!(missing.kind, ErrorKind::Domain);
    assert!(serde_json::from_value::<Request>(json!({"op": "cusps", "n": "x"})).is_err());
    assert!(serde_json::from_value::<Request>(json!({"op": "nope"})).is_err());
}
