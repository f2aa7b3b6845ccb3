//! Flat `key = value` run configuration files. Blank lines and lines starting
//! with `#` are ignored; keys are case-sensitive and `-` is read as `_`.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigFile {
    /// Value and 1-based line number per key.
    entries: BTreeMap<String, (String, usize)>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(Error::Config { line: n + 1, message: format!("expected `key = value`, got `{line}`") });
            };
            let key = k.trim().replace('-', "_");
            if key.is_empty() {
                return Err(Error::Config { line: n + 1, message: "empty key".into() });
            }
            let value = v.trim().trim_matches('"').to_string();
            if entries.insert(key.clone(), (value, n + 1)).is_some() {
                return Err(Error::Config { line: n + 1, message: format!("duplicate key `{key}`") });
            }
        }
        Ok(Self { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(|(v, _)| v.as_str())
    }

    /// Parses `key` if present, reporting the line of a bad value.
    pub fn parsed<T>(&self, key: &str) -> Result<Option<T>>
    where
        T: FromStr,
        T::Err: std::fmt::Display,
    {
        match self.entries.get(key) {
            None => Ok(None),
            Some((v, line)) => v.parse().map(Some).map_err(|e| Error::Config {
                line: *line,
                message: format!("bad value `{v}` for `{key}`: {e}"),
            }),
        }
    }

    /// Fails on the first key not in `allowed`.
    pub fn check_keys(&self, allowed: &[&str]) -> Result<()> {
        for (k, (_, line)) in &self.entries {
            if !allowed.contains(&k.as_str()) {
                return Err(Error::Config { line: *line, message: format!("unknown key `{k}`") });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reports_lines() {
        let c = ConfigFile::parse("# run\norder = 7\n\nt-end=0.1\nproblem = \"sod\"\n").unwrap();
        assert_eq!(c.parsed::<usize>("order").unwrap(), Some(7));
        assert_eq!(c.parsed::<f64>("t_end").unwrap(), Some(0.1));
        assert_eq!(c.get("problem"), Some("sod"));
        assert_eq!(c.parsed::<f64>("cfl").unwrap(), None);
        let bad = ConfigFile::parse("cfl = fast").unwrap();
        match bad.parsed::<f64>("cfl") {
            Err(Error::Config { line: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(ConfigFile::parse("a = 1\nnonsense"), Err(Error::Config { line: 2, .. })));
        assert!(ConfigFile::parse("a = 1\na = 2").is_err());
        assert!(c.check_keys(&["order", "t_end"]).is_err());
    }
}
