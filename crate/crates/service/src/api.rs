//! Request and response bodies, and the computations behind each endpoint.
//!
//! The functions here are plain synchronous calls so the command-line front
//! end can share them.

use regpump_core::automata::{accepts, compile, determinize_with_cap, export_graph, Nfa};
use regpump_core::enumerate::{EnumerationCursor, Pruning};
use regpump_core::pumping::{
    min_pumping_length_exact_with_cap, min_pumping_length_sampled, pump, MplMode, PumpSplit,
};
use serde::{Deserialize, Serialize};

use crate::error::ApiError;
use crate::ServiceConfig;

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MembershipRequest {
    pub regex: String,
    pub input: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipResponse {
    pub member: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StringsRequest {
    pub regex: String,
    pub count: usize,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StringsResponse {
    pub strings: Vec<String>,
    /// `epsilon[i]` is true iff `strings[i]` is the empty string.
    pub epsilon: Vec<bool>,
    pub next_offset: usize,
    pub exhausted: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeParam {
    #[default]
    Exact,
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MplRequest {
    pub regex: String,
    #[serde(default)]
    pub mode: ModeParam,
    #[serde(default)]
    pub max_len: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MplResponse {
    pub p: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<PumpSplit>,
    pub mode: MplMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PumpRequest {
    pub regex: String,
    pub x: String,
    pub y: String,
    pub z: String,
    pub i: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PumpResponse {
    pub pumped: String,
    pub member: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphQuery {
    pub regex: String,
}

fn nfa(config: &ServiceConfig, regex: &str) -> Result<Nfa, ApiError> {
    Ok(compile(regex, &config.reserved)?)
}

pub fn membership(config: &ServiceConfig, req: MembershipRequest) -> Result<MembershipResponse, ApiError> {
    let nfa = nfa(config, &req.regex)?;
    Ok(MembershipResponse { member: accepts(&nfa, &req.input) })
}

/// Shortlex positions `[offset, offset + count)`, recomputed from scratch.
pub fn strings(config: &ServiceConfig, req: StringsRequest) -> Result<StringsResponse, ApiError> {
    let nfa = nfa(config, &req.regex)?;
    if req.count == 0 || req.count > config.max_count {
        return Err(ApiError::bad_request(format!("count must be between 1 and {}", config.max_count)));
    }
    if req.offset > config.max_offset {
        return Err(ApiError::resource_limit(format!("offset above {}", config.max_offset)));
    }
    let mut cursor = EnumerationCursor::new(&nfa, Pruning::default(), config.limits.frontier_cap);
    cursor.skip(req.offset)?;
    let batch = cursor.next_strings(req.count)?;
    Ok(StringsResponse {
        epsilon: batch.strings.iter().map(String::is_empty).collect(),
        strings: batch.strings,
        next_offset: batch.next_offset,
        exhausted: batch.exhausted,
    })
}

pub fn mpl(config: &ServiceConfig, req: MplRequest) -> Result<MplResponse, ApiError> {
    let nfa = nfa(config, &req.regex)?;
    let result = match req.mode {
        ModeParam::Exact => {
            let dfa = determinize_with_cap(&nfa, config.limits.state_cap)?;
            min_pumping_length_exact_with_cap(&dfa, config.limits.state_cap)?
        }
        ModeParam::Sampled => {
            let max_len = req.max_len.or(config.max_len);
            if max_len.is_some_and(|m| m > config.max_sampled_len) {
                return Err(ApiError::bad_request(format!("max_len above {}", config.max_sampled_len)));
            }
            min_pumping_length_sampled(&nfa, max_len, &config.limits)?
        }
    };
    Ok(MplResponse {
        p: result.p,
        witness: result.witness,
        split: result.split,
        mode: result.mode,
        counterexample: result.counterexample_for_p_minus_1,
    })
}

pub fn pump_string(config: &ServiceConfig, req: PumpRequest) -> Result<PumpResponse, ApiError> {
    let nfa = nfa(config, &req.regex)?;
    if req.y.is_empty() {
        return Err(ApiError::bad_request("y must not be empty"));
    }
    let length = req.x.len().saturating_add(req.y.len().saturating_mul(req.i)).saturating_add(req.z.len());
    if length > config.max_pumped_bytes {
        return Err(ApiError::bad_request(format!("pumped string longer than {} bytes", config.max_pumped_bytes)));
    }
    let pumped = pump(&PumpSplit::new(req.x, req.y, req.z), req.i);
    Ok(PumpResponse { member: accepts(&nfa, &pumped), pumped })
}

pub fn graph(config: &ServiceConfig, query: GraphQuery) -> Result<String, ApiError> {
    Ok(export_graph(&nfa(config, &query.regex)?))
}
