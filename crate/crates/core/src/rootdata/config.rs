//! Plain `key = value` configuration files describing a root system.
//!
//! ```text
//! # comment
//! type = B
//! rank = 2
//! k = 1, 3/2
//! ```
//!
//! `type` may also carry the rank (`type = B2`).

use std::path::Path;

use crate::error::{Error, Result};
use crate::exact::{Rational, Scalar};

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RootConfig {
    pub label: Option<String>,
    pub k: Vec<Rational>,
}

pub fn parse_k_list(text: &str) -> Result<Vec<Rational>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(Scalar::parse_rational)
        .collect()
}

impl RootConfig {
    pub fn parse(text: &str) -> Result<RootConfig> {
        let mut series: Option<String> = None;
        let mut rank: Option<String> = None;
        let mut k = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Syntax {
                line: n + 1,
                column: 1,
                message: "expected key = value".into(),
            })?;
            let value = value.trim();
            match key.trim() {
                "type" => series = Some(value.to_string()),
                "rank" => rank = Some(value.to_string()),
                "k" => k = parse_k_list(value)?,
                other => {
                    return Err(Error::Syntax {
                        line: n + 1,
                        column: 1,
                        message: format!("unknown key {other:?}"),
                    })
                }
            }
        }
        let label = match (series, rank) {
            (Some(s), Some(r)) if s.len() == 1 => Some(format!("{s}{r}")),
            (Some(s), _) => Some(s),
            (None, Some(_)) => return Err(Error::Invalid("rank given without type".into())),
            (None, None) => None,
        };
        Ok(RootConfig { label, k })
    }
}

pub fn load_config(path: &Path) -> Result<RootConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    RootConfig::parse(&text)
}
