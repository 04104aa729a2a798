//! Sends [`Request`]s to a running `moonshine-server`.

use moonshine_api::{ApiError, ErrorKind, Request, Response};
use serde_json::Value;

#[derive(Debug, thiserror::Error)]
pub enum ClientError {
    /// The service answered with an error body.
    #[error("{0}")]
    Api(ApiError),
    /// The service could not be reached or answered with something unexpected.
    #[error("transport error: {0}")]
    Transport(String),
}

impl ClientError {
    /// The server-side error kind; transport failures count as domain errors.
    pub fn kind(&self) -> ErrorKind {
        match self {
            ClientError::Api(e) => e.kind,
            ClientError::Transport(_) => ErrorKind::Domain,
        }
    }
}

pub struct Client {
    base: String,
    http: reqwest::Client,
}

impl Client {
    /// `base` is the service root, e.g. `http://127.0.0.1:8080`.
    pub fn new(base: impl Into<String>) -> Client {
        Client { base: base.into().trim_end_matches('/').to_string(), http: reqwest::Client::new() }
    }

    pub async fn health(&self) -> Result<bool, ClientError> {
        let resp = self.http.get(format!("{}/v1/health", self.base)).send().await.map_err(transport)?;
        let body: Value = resp.json().await.map_err(transport)?;
        Ok(body["status"] == "ok")
    }

    pub async fn execute(&self, req: &Request) -> Result<Response, ClientError> {
        let resp = self
            .http
            .post(format!("{}/v1/{}", self.base, req.op()))
            .json(req)
            .send()
            .await
            .map_err(transport)?;
        let ok = resp.status().is_success();
        let body: Value = resp.json().await.map_err(transport)?;
        if ok {
            return serde_json::from_value(body).map_err(transport);
        }
        let kind = serde_json::from_value(body["error"].clone()).map_err(transport)?;
        let message = body["message"].as_str().unwrap_or_default().to_string();
        Err(ClientError::Api(ApiError { kind, message }))
    }
}

fn transport(e: impl std::fmt::Display) -> ClientError {
    ClientError::Transport(e.to_string())
}
