use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use regpump_core::{Error, SyntaxErrors};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorCode {
    SyntaxError,
    ResourceLimit,
    BadRequest,
}

/// Error body returned by every endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ApiError {
    pub code: ErrorCode,
    pub message: String,
    /// Character index of the first syntax error.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
}

impl ApiError {
    pub fn bad_request(message: impl Into<String>) -> Self {
        ApiError { code: ErrorCode::BadRequest, message: message.into(), position: None }
    }

    pub fn resource_limit(message: impl Into<String>) -> Self {
        ApiError { code: ErrorCode::ResourceLimit, message: message.into(), position: None }
    }

    pub fn status(&self) -> StatusCode {
        match self.code {
            ErrorCode::SyntaxError => StatusCode::UNPROCESSABLE_ENTITY,
            ErrorCode::ResourceLimit => StatusCode::TOO_MANY_REQUESTS,
            ErrorCode::BadRequest => StatusCode::BAD_REQUEST,
        }
    }
}

impl From<SyntaxErrors> for ApiError {
    fn from(e: SyntaxErrors) -> Self {
        ApiError {
            code: ErrorCode::SyntaxError,
            message: e.to_string(),
            position: Some(e.first().position),
        }
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax(s) => s.into(),
            e if e.is_resource_limit() => ApiError::resource_limit(e.to_string()),
            e => ApiError::bad_request(e.to_string()),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status(), Json(self)).into_response()
    }
}
