//! Routes:
//!
//! - `GET /v1/health` → `{"status": "ok"}`
//! - `POST /v1/{op}` with the request fields as a JSON object → the
//!   [`moonshine_api::Response`] JSON.  `symbol` and `oracle` also need an
//!   `"action"` field.
//!
//! Errors come back as `{"error": kind, "message": …}` with status 400 for
//! usage errors, 422 for domain errors and 500 for internal ones.

use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use moonshine_api::{ApiError, Engine, ErrorKind, Request};
use serde_json::{json, Value};

pub fn router(engine: Arc<Engine>) -> Router {
    Router::new()
        .route("/v1/health", get(health))
        .route("/v1/:op", post(run))
        .with_state(engine)
}

async fn health() -> Json<Value> {
    Json(json!({ "status": "ok" }))
}

struct Failure(ApiError);

impl IntoResponse for Failure {
    fn into_response(self) -> Response {
        let status = match self.0.kind {
            ErrorKind::Usage => StatusCode::BAD_REQUEST,
            ErrorKind::Domain => StatusCode::UNPROCESSABLE_ENTITY,
            ErrorKind::Internal => StatusCode::INTERNAL_SERVER_ERROR,
        };
        (status, Json(json!({ "error": self.0.kind, "message": self.0.message }))).into_response()
    }
}

/// Merge the route's op into the body and parse it as a [`Request`].
pub fn parse_request(op: &str, body: &[u8]) -> Result<Request, ApiError> {
    let mut value: Value = if body.iter().all(u8::is_ascii_whitespace) {
        json!({})
    } else {
        serde_json::from_slice(body).map_err(|e| ApiError::usage(format!("invalid JSON body: {e}")))?
    };
    let obj = value.as_object_mut().ok_or_else(|| ApiError::usage("request body must be a JSON object"))?;
    match obj.get("op") {
        Some(Value::String(s)) if s == op => {}
        Some(other) => return Err(ApiError::usage(format!("body op {other} does not match route /v1/{op}"))),
        None => {
            obj.insert("op".into(), Value::String(op.into()));
        }
    }
    serde_json::from_value(value).map_err(|e| ApiError::usage(format!("bad request for '{op}': {e}")))
}

async fn run(State(engine): State<Arc<Engine>>, Path(op): Path<String>, body: Bytes) -> Result<Response, Failure> {
    let req = parse_request(&op, &body).map_err(Failure)?;
    // The heavier operations are CPU-bound; keep them off the async workers.
    let resp = tokio::task::spawn_blocking(move || engine.execute(&req))
        .await
        .map_err(|e| Failure(ApiError { kind: ErrorKind::Internal, message: format!("worker failed: {e}") }))?
        .map_err(Failure)?;
    Ok(Json(resp).into_response())
}
