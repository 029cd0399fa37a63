//! Optional `key = value` configuration file.
//!
//! Recognised keys: `cap` (enumeration cap on group order), `format`
//! (`json`, `csv` or `table`) and `width` (wrap width of table output).
//! Blank lines and lines starting with `#` are ignored.

use std::fs;
use std::path::Path;

use crate::emit::Format;
use crate::CliError;

/// Environment variable naming a config file when `--config` is absent.
pub const CONFIG_ENV: &str = "KLCAT_CONFIG";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub cap: Option<u128>,
    pub format: Option<Format>,
    pub width: Option<usize>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Config::parse(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }

    pub fn parse(text: &str) -> Result<Config, String> {
        let mut cfg = Config::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected `key = value`", n + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| format!("line {}: invalid {what} `{value}`", n + 1);
            match key {
                "cap" => cfg.cap = Some(value.parse().map_err(|_| bad("cap"))?),
                "format" => cfg.format = Some(value.parse().map_err(|_| bad("format"))?),
                "width" => {
                    let w: usize = value.parse().map_err(|_| bad("width"))?;
                    if w == 0 {
                        return Err(bad("width"));
                    }
                    cfg.width = Some(w);
                }
                _ => return Err(format!("line {}: unknown key `{key}`", n + 1)),
            }
        }
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_comments() {
        let c = Config::parse("# defaults\ncap = 1000\n\nformat=table\nwidth = 60\n").unwrap();
        assert_eq!(
            c,
            Config {
                cap: Some(1000),
                format: Some(Format::Table),
                width: Some(60)
            }
        );
    }

    #[test]
    fn rejects_garbage() {
        assert!(Config::parse("cap 10").unwrap_err().contains("line 1"));
        assert!(Config::parse("colour = red")
            .unwrap_err()
            .contains("unknown key"));
        assert!(Config::parse("format = xml").is_err());
        assert!(Config::parse("width = 0").is_err());
    }
}
