//! Stateless HTTP facade over the engine.
//!
//! | route | |
//! |---|---|
//! | `GET /healthz` | `ok` |
//! | `GET /api/v1/baseline` | the baseline scenario JSON |
//! | `POST /api/v1/appraise` | scenario JSON in, report JSON out |
//! | `POST /api/v1/sweep` | `{scenario, param, values}` in, sweep JSON out |
//!
//! Rejected input answers 422 with `{"diagnostics": [...]}`.

use std::net::SocketAddr;
use std::path::PathBuf;

use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use roi_forge_core::report::{diagnostics_json, sweep_json};
use roi_forge_core::scenario::{emit_scenario, parse_value};
use roi_forge_core::{sweep, Decimal, Diagnostic, Execution};
use serde_json::Value;
use tower_http::services::ServeDir;

use crate::{appraise, load_baseline, load_text, LoadError, Loaded};

fn json(status: StatusCode, body: String) -> Response {
    (status, [(header::CONTENT_TYPE, "application/json")], body).into_response()
}

fn rejected(diags: &[Diagnostic]) -> Response {
    json(StatusCode::UNPROCESSABLE_ENTITY, diagnostics_json(diags))
}

fn load_error(e: LoadError) -> Response {
    match e {
        LoadError::Invalid(d) => rejected(&d),
        LoadError::Io(msg) => json(StatusCode::INTERNAL_SERVER_ERROR, diagnostics_json(&[Diagnostic::error("", msg)])),
    }
}

async fn healthz() -> &'static str {
    "ok"
}

async fn baseline() -> Response {
    match load_baseline() {
        Ok(l) => json(StatusCode::OK, emit_scenario(&l.scenario)),
        Err(e) => load_error(e),
    }
}

async fn appraise_route(body: String) -> Response {
    let outcome = tokio::task::spawn_blocking(move || {
        let loaded = load_text(&body, None)?;
        Ok::<_, LoadError>(appraise(&loaded))
    })
    .await
    .expect("evaluation does not panic");
    match outcome {
        Ok(Ok(report)) => json(StatusCode::OK, report),
        Ok(Err(diagnostics)) => json(StatusCode::UNPROCESSABLE_ENTITY, diagnostics),
        Err(e) => load_error(e),
    }
}

fn sweep_request(body: &str) -> Result<String, Vec<Diagnostic>> {
    let value: Value = serde_json::from_str(body).map_err(|e| {
        vec![Diagnostic::error("", format!("malformed JSON at line {}, column {}: {e}", e.line(), e.column()))]
    })?;
    let scenario = value.get("scenario").ok_or_else(|| vec![Diagnostic::error("scenario", "missing")])?;
    let param = value
        .get("param")
        .and_then(Value::as_str)
        .ok_or_else(|| vec![Diagnostic::error("param", "expected a parameter path string")])?;
    let raw = value
        .get("values")
        .and_then(Value::as_array)
        .ok_or_else(|| vec![Diagnostic::error("values", "expected an array")])?;
    let mut values = Vec::with_capacity(raw.len());
    let mut errors = Vec::new();
    for (i, v) in raw.iter().enumerate() {
        let text = match v {
            Value::String(s) => s.clone(),
            Value::Number(n) => n.to_string(),
            _ => String::new(),
        };
        match text.parse::<Decimal>() {
            Ok(d) => values.push(d),
            Err(_) => errors.push(Diagnostic::error(format!("values[{i}]"), "expected a decimal number")),
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }
    let parsed = parse_value(scenario).map_err(|d| d.into_iter().map(|x| x.under("scenario")).collect::<Vec<_>>())?;
    let loaded = Loaded { scenario: parsed.scenario, warnings: parsed.diagnostics };
    if loaded.scenario.enrollment.history_csv.is_some() {
        return Err(vec![Diagnostic::error(
            "scenario.enrollment.history_csv",
            "sidecar files are only read from the command line; inline the history",
        )]);
    }
    let points =
        sweep(&loaded.scenario, param, &values, Execution::Parallel).map_err(|e| e.diagnostics())?;
    Ok(sweep_json(param, &points))
}

async fn sweep_route(body: String) -> Response {
    match tokio::task::spawn_blocking(move || sweep_request(&body)).await.expect("sweep does not panic") {
        Ok(body) => json(StatusCode::OK, body),
        Err(diags) => rejected(&diags),
    }
}

/// The API routes, optionally with static UI assets at `/`.
pub fn router(ui: Option<PathBuf>) -> Router {
    let api = Router::new()
        .route("/healthz", get(healthz))
        .route("/api/v1/baseline", get(baseline))
        .route("/api/v1/appraise", post(appraise_route))
        .route("/api/v1/sweep", post(sweep_route));
    match ui {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api,
    }
}

pub async fn serve(addr: SocketAddr, ui: Option<PathBuf>) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr)
        .await
        .map_err(|e| std::io::Error::new(e.kind(), format!("cannot bind {addr}: {e}")))?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(ui))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
