//! Stateless HTTP JSON API over `regpump-core`.
//!
//! | method | path              | body / query                 |
//! |--------|-------------------|------------------------------|
//! | POST   | `/api/membership` | `{regex, input}`             |
//! | POST   | `/api/strings`    | `{regex, count, offset}`     |
//! | POST   | `/api/mpl`        | `{regex, mode?, max_len?}`   |
//! | POST   | `/api/pump`       | `{regex, x, y, z, i}`        |
//! | GET    | `/api/graph`      | `?regex=`                    |
//! | GET    | `/api/health`     |                              |
//!
//! Errors come back as `{code, message, position?}` with status 400
//! (`bad_request`), 422 (`syntax_error`) or 429 (`resource_limit`).

pub mod api;
mod error;

use std::io;
use std::net::SocketAddr;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{RawQuery, State};
use axum::http::header;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use regpump_core::syntax::ReservedSymbols;
use regpump_core::Limits;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;
use tokio::net::TcpListener;
use tower_http::cors::CorsLayer;

pub use error::{ApiError, ErrorCode};

/// Settings read once at startup and shared by all requests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ServiceConfig {
    pub reserved: ReservedSymbols,
    pub limits: Limits,
    /// Default enumeration bound for sampled pumping lengths.
    pub max_len: Option<usize>,
    pub max_sampled_len: usize,
    pub max_count: usize,
    pub max_offset: usize,
    pub max_pumped_bytes: usize,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        ServiceConfig {
            reserved: ReservedSymbols::default(),
            limits: Limits::default(),
            max_len: None,
            max_sampled_len: 64,
            max_count: 10_000,
            max_offset: 10_000_000,
            max_pumped_bytes: 1 << 20,
        }
    }
}

type Shared = Arc<ServiceConfig>;

async fn run<Req, Resp>(
    config: Shared,
    req: Req,
    f: fn(&ServiceConfig, Req) -> Result<Resp, ApiError>,
) -> Result<Resp, ApiError>
where
    Req: Send + 'static,
    Resp: Send + 'static,
{
    tokio::task::spawn_blocking(move || f(&config, req))
        .await
        .map_err(|e| ApiError::resource_limit(format!("request aborted: {e}")))?
}

async fn post_json<Req, Resp>(
    config: Shared,
    body: Bytes,
    f: fn(&ServiceConfig, Req) -> Result<Resp, ApiError>,
) -> Response
where
    Req: DeserializeOwned + Send + 'static,
    Resp: Serialize + Send + 'static,
{
    let req = match serde_json::from_slice::<Req>(&body) {
        Ok(req) => req,
        Err(e) => return ApiError::bad_request(format!("invalid request body: {e}")).into_response(),
    };
    match run(config, req, f).await {
        Ok(resp) => Json(resp).into_response(),
        Err(e) => e.into_response(),
    }
}

async fn membership(State(config): State<Shared>, body: Bytes) -> Response {
    post_json(config, body, api::membership).await
}

async fn strings(State(config): State<Shared>, body: Bytes) -> Response {
    post_json(config, body, api::strings).await
}

async fn mpl(State(config): State<Shared>, body: Bytes) -> Response {
    post_json(config, body, api::mpl).await
}

async fn pump(State(config): State<Shared>, body: Bytes) -> Response {
    post_json(config, body, api::pump_string).await
}

async fn graph(State(config): State<Shared>, RawQuery(query): RawQuery) -> Response {
    let query = query.unwrap_or_default();
    let parsed = match serde_urlencoded::from_str::<api::GraphQuery>(&query) {
        Ok(q) => q,
        Err(e) => return ApiError::bad_request(format!("invalid query: {e}")).into_response(),
    };
    match run(config, parsed, api::graph).await {
        Ok(dot) => ([(header::CONTENT_TYPE, "text/vnd.graphviz; charset=utf-8")], dot).into_response(),
        Err(e) => e.into_response(),
    }
}

async fn health() -> Response {
    Json(json!({ "status": "ok" })).into_response()
}

pub fn router(config: ServiceConfig) -> Router {
    Router::new()
        .route("/api/membership", post(membership))
        .route("/api/strings", post(strings))
        .route("/api/mpl", post(mpl))
        .route("/api/pump", post(pump))
        .route("/api/graph", get(graph))
        .route("/api/health", get(health))
        .layer(CorsLayer::permissive())
        .with_state(Arc::new(config))
}

/// Binds `addr`; port 0 picks a free port, see `local_addr` on the result.
pub async fn bind(addr: SocketAddr) -> io::Result<TcpListener> {
    TcpListener::bind(addr).await
}

/// Serves until `shutdown` resolves.
pub async fn serve(
    listener: TcpListener,
    config: ServiceConfig,
    shutdown: impl std::future::Future<Output = ()> + Send + 'static,
) -> io::Result<()> {
    axum::serve(listener, router(config)).with_graceful_shutdown(shutdown).await
}
