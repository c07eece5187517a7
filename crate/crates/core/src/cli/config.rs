//! Flat `key = value` configuration files mirroring the verify flags.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};

pub const KEYS: [&str; 7] = ["suite", "profile", "seed", "output", "format", "symbolic", "max-size"];

/// Parsed file contents. Blank lines and lines starting with `#` are skipped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConfigFile {
    pub values: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("config line {}: expected key=value", i + 1)))?;
            let k = k.trim();
            if !KEYS.contains(&k) {
                return Err(Error::Parse(format!("config line {}: unknown key {k:?}", i + 1)));
            }
            values.insert(k.to_string(), v.trim().to_string());
        }
        Ok(Self { values })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }
}

pub fn parse_bool(s: &str) -> Result<bool> {
    match s {
        "true" | "yes" | "1" | "on" => Ok(true),
        "false" | "no" | "0" | "off" => Ok(false),
        _ => Err(Error::Parse(format!("expected a boolean, got {s:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flat_pairs() {
        let c = ConfigFile::parse("# run\nsuite = YBE-*\n\nseed=9\nsymbolic = yes\n").unwrap();
        assert_eq!(c.get("suite"), Some("YBE-*"));
        assert_eq!(c.get("seed"), Some("9"));
        assert!(parse_bool(c.get("symbolic").unwrap()).unwrap());
        assert!(ConfigFile::parse("seed 9").is_err());
        assert!(ConfigFile::parse("colour = red").is_err());
    }
}
