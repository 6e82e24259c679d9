//! Flat `key = value` run configuration.
//!
//! Keys match the long command-line flags without dashes (`t-max` or `t_max`).
//! List-valued keys accept comma-separated values and may repeat. `#` starts a
//! comment.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

pub const KEYS: [&str; 9] = [
    "regime", "gamma", "temp", "squeeze", "t-max", "steps", "quantity", "out", "scan-step",
];

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Config {
    values: BTreeMap<String, Vec<String>>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text, path)
    }

    pub fn parse(text: &str, path: &Path) -> Result<Self> {
        let mut values: BTreeMap<String, Vec<String>> = BTreeMap::new();
        let fail = |line: usize, reason: String| Error::Config {
            path: PathBuf::from(path),
            line,
            reason,
        };
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| fail(i + 1, format!("expected `key = value`, got `{line}`")))?;
            let key = key.trim().to_ascii_lowercase().replace('_', "-");
            if !KEYS.contains(&key.as_str()) {
                return Err(fail(i + 1, format!("unknown key `{key}`")));
            }
            let items = value.split(',').map(str::trim).filter(|v| !v.is_empty());
            let entry = values.entry(key).or_default();
            let before = entry.len();
            entry.extend(items.map(String::from));
            if entry.len() == before {
                return Err(fail(i + 1, "empty value".into()));
            }
        }
        Ok(Self { values })
    }

    pub fn list(&self, key: &str) -> &[String] {
        self.values.get(key).map_or(&[], Vec::as_slice)
    }

    /// Last value given for `key`.
    pub fn single(&self, key: &str) -> Option<&str> {
        self.list(key).last().map(String::as_str)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lists_and_comments() {
        let text = "# sweep\nregime = common\ngamma=0.1\ntemp = 5, 10\ntemp = 15 # more\nt_max = 60\n\n";
        let c = Config::parse(text, Path::new("x.cfg")).unwrap();
        assert_eq!(c.list("temp"), ["5", "10", "15"]);
        assert_eq!(c.single("t-max"), Some("60"));
        assert_eq!(c.single("squeeze"), None);
    }

    #[test]
    fn rejects_unknown_keys_with_line_number() {
        let err = Config::parse("gamma = 1\nfoo = 2\n", Path::new("c")).unwrap_err();
        assert!(matches!(err, Error::Config { line: 2, .. }));
        assert!(Config::parse("gamma\n", Path::new("c")).is_err());
        assert!(Config::parse("gamma = \n", Path::new("c")).is_err());
    }
}
