//! Prefix lookups against the On-Line Encyclopedia of Integer Sequences.
//!
//! Network access is strictly opt-in: the default mode refuses to send
//! anything, the fixture mode searches a small bundled snapshot (used by
//! tests and available offline), and the online mode queries the public
//! search endpoint with a 10-second timeout.

use std::time::Duration;

use num_bigint::BigInt;
use serde::Deserialize;

use crate::error::{Error, Result};

/// Smallest prefix length accepted for a lookup.
pub const MIN_PREFIX: usize = 4;

/// Where lookups are allowed to go.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OeisMode {
    /// Refuse with [`Error::NetworkDisabled`]; the default.
    #[default]
    Disabled,
    /// Search the bundled snapshot only.
    Fixture,
    /// Query the live search endpoint.
    Online,
}

/// One matching catalog entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisHit {
    /// Catalog id, e.g. `A000110`.
    pub id: String,
    /// Entry title.
    pub name: String,
    /// Index in the entry's data at which the queried prefix begins.
    pub offset: usize,
}

#[derive(Deserialize)]
struct SearchResponse {
    #[serde(default)]
    results: Option<Vec<SearchEntry>>,
}

#[derive(Deserialize)]
struct SearchEntry {
    number: u64,
    #[serde(default)]
    data: String,
    #[serde(default)]
    name: String,
}

const FIXTURE: &str = include_str!("oeis_fixture.json");

/// Find catalog entries containing `prefix` as a consecutive run.
///
/// The prefix must have at least [`MIN_PREFIX`] terms. Hits report where in
/// the entry's data the prefix starts; entries returned by the endpoint that
/// do not actually contain the run (fuzzy matches) are dropped.
pub fn lookup(prefix: &[BigInt], mode: OeisMode) -> Result<Vec<OeisHit>> {
    if prefix.len() < MIN_PREFIX {
        return Err(Error::PrefixTooShort { got: prefix.len() });
    }
    let body = match mode {
        OeisMode::Disabled => return Err(Error::NetworkDisabled),
        OeisMode::Fixture => FIXTURE.to_string(),
        OeisMode::Online => fetch_online(prefix)?,
    };
    let response: SearchResponse = serde_json::from_str(&body).map_err(|e| Error::Parse {
        message: format!("unexpected search response: {e}"),
        line: e.line(),
        column: e.column(),
    })?;
    let mut hits = Vec::new();
    for entry in response.results.unwrap_or_default() {
        let data = parse_data(&entry.data);
        if let Some(offset) = find_run(&data, prefix) {
            hits.push(OeisHit {
                id: format!("A{:06}", entry.number),
                name: entry.name,
                offset,
            });
        }
    }
    Ok(hits)
}

fn fetch_online(prefix: &[BigInt]) -> Result<String> {
    let terms: Vec<String> = prefix.iter().map(BigInt::to_string).collect();
    let client = reqwest::blocking::Client::builder()
        .timeout(Duration::from_secs(10))
        .build()
        .map_err(io_wrap)?;
    // prefix terms are digits, '-', and ',': all safe in a query string
    let url = format!("https://oeis.org/search?fmt=json&q={}", terms.join(","));
    let response = client.get(url).send().map_err(io_wrap)?;
    let status = response.status();
    if !status.is_success() {
        return Err(Error::Http {
            status: status.as_u16(),
        });
    }
    response.text().map_err(io_wrap)
}

fn io_wrap(e: reqwest::Error) -> Error {
    Error::Io(std::io::Error::other(e.to_string()))
}

fn parse_data(data: &str) -> Vec<BigInt> {
    data.split(',')
        .filter_map(|part| part.trim().parse().ok())
        .collect()
}

fn find_run(data: &[BigInt], prefix: &[BigInt]) -> Option<usize> {
    if data.len() < prefix.len() {
        return None;
    }
    (0..=data.len() - prefix.len()).find(|&w| data[w..w + prefix.len()] == *prefix)
}
