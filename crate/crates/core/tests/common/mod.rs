//! Shared fixture loading for the integration tests.

#![allow(dead_code)]

use std::path::PathBuf;

use serde::de::DeserializeOwned;

/// Absolute path of a checked-in fixture file.
pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

/// Parses a fixture file into any deserializable type.
pub fn load_fixture<T: DeserializeOwned>(name: &str) -> T {
    let text = std::fs::read_to_string(fixture_path(name))
        .unwrap_or_else(|e| panic!("reading fixture {name}: {e}"));
    serde_json::from_str(&text).unwrap_or_else(|e| panic!("parsing fixture {name}: {e}"))
}

/// Raw JSON value of a fixture file, for label-for-label comparisons.
pub fn fixture_value(name: &str) -> serde_json::Value {
    load_fixture(name)
}
