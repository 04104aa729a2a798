use std::sync::Arc;

use axum::body::{to_bytes, Body};
use axum::http::{Request, StatusCode};
use moonshine_api::{Engine, Response};
use serde_json::Value;
use tower::ServiceExt;

fn app() -> axum::Router {
    moonshine_service::router(Arc::new(Engine::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data"))))
}

async fn call(method: &str, uri: &str, body: &str) -> (StatusCode, Value) {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(Body::from(body.to_string()))
        .unwrap();
    let resp = app().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = to_bytes(resp.into_body(), usize::MAX).await.unwrap();
    (status, serde_json::from_slice(&bytes).unwrap())
}

#[tokio::test]
async fn health() {
    let (status, body) = call("GET", "/v1/health", "").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["status"], "ok");
}

#[tokio::test]
async fn nchi_over_http() {
    let (status, body) = call("POST", "/v1/nchi", r#"{"k": 166}"#).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["op"], "nchi");
    assert_eq!(body["result"]["n_chi"], "4032");
    let resp: Response = serde_json::from_value(body).unwrap();
    assert!(matches!(resp, Response::Nchi(_)));
}

#[tokio::test]
async fn empty_body_and_subactions() {
    let (status, body) = call("POST", "/v1/distinct", "").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["result"]["count"], 172);
    let (status, body) = call("POST", "/v1/symbol", r#"{"action": "equiv-inf", "cusp": "1/3", "symbol": "84|2+"}"#).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["result"]["e"], "14");
}

#[tokio::test]
async fn error_statuses() {
    assert_eq!(call("POST", "/v1/nchi", r#"{"k": 0}"#).await.0, StatusCode::BAD_REQUEST);
    assert_eq!(call("POST", "/v1/nchi", "[1]").await.0, StatusCode::BAD_REQUEST);
    assert_eq!(call("POST", "/v1/nchi", "{").await.0, StatusCode::BAD_REQUEST);
    assert_eq!(call("POST", "/v1/nope", "{}").await.0, StatusCode::BAD_REQUEST);
    assert_eq!(call("POST", "/v1/nchi", r#"{"op": "distinct"}"#).await.0, StatusCode::BAD_REQUEST);
    let (status, body) = call("POST", "/v1/transform", r#"{"symbol": "6", "cusp": "0", "n_chi": "6"}"#).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(body["error"], "domain");
}
