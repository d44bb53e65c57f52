use std::path::PathBuf;
use std::str::FromStr;

use braidforge::exchange::ExchangePresentation;
use braidforge::garside::DEFAULT_SSS_CAP;
use braidforge::lamination::EntropySettings;
use braidforge::{BraidWord, Error, Result};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Invalid(format!("unknown format {other:?} (csv or json)"))),
        }
    }
}

/// A validated experiment description.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub presentation: ExchangePresentation,
    pub k_min: i64,
    pub k_max: i64,
    pub entropy: EntropySettings,
    pub cap: usize,
    pub format: Format,
    /// `None` writes to standard output.
    pub out: Option<PathBuf>,
}

impl ExperimentConfig {
    /// Defaults for everything except the presentation and the range.
    pub fn new(presentation: ExchangePresentation, k_min: i64, k_max: i64) -> Result<Self> {
        let cfg = Self {
            presentation,
            k_min,
            k_max,
            entropy: EntropySettings::default(),
            cap: DEFAULT_SSS_CAP,
            format: Format::Csv,
            out: None,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k_min > self.k_max {
            return Err(Error::Invalid(format!(
                "empty k range {}..={}",
                self.k_min, self.k_max
            )));
        }
        if self.cap == 0 {
            return Err(Error::Invalid("cap must be positive".into()));
        }
        self.entropy.validate()
    }

    pub fn ks(&self) -> impl Iterator<Item = i64> {
        self.k_min..=self.k_max
    }
}

fn field<T: FromStr>(key: &str, value: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    value
        .parse()
        .map_err(|e| Error::Invalid(format!("config key {key}={value:?}: {e}")))
}

impl FromStr for ExperimentConfig {
    type Err = Error;

    /// Parses `key=value` lines; `#` starts a comment. Required keys are
    /// `n`, `k_min` and `k_max`; `A` and `B` default to the empty word.
    fn from_str(text: &str) -> Result<Self> {
        let mut n = None;
        let (mut a, mut b) = (String::new(), String::new());
        let (mut k_min, mut k_max) = (None, None);
        let mut entropy = EntropySettings::default();
        let mut cap = DEFAULT_SSS_CAP;
        let mut format = Format::Csv;
        let mut out = None;
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Invalid(format!("config line {line:?} is not key=value")))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "n" => n = Some(field::<usize>(key, value)?),
                "A" => a = value.to_string(),
                "B" => b = value.to_string(),
                "k_min" => k_min = Some(field(key, value)?),
                "k_max" => k_max = Some(field(key, value)?),
                "iters" => entropy.max_iters = field(key, value)?,
                "tol" => entropy.tol = field(key, value)?,
                "seeds" => entropy.seeds = field(key, value)?,
                "cap" => cap = field(key, value)?,
                "format" => format = value.parse()?,
                "out" => out = (!value.is_empty()).then(|| PathBuf::from(value)),
                other => return Err(Error::Invalid(format!("unknown config key {other:?}"))),
            }
        }
        let missing = |k: &str| Error::Invalid(format!("config is missing {k}"));
        let n = n.ok_or_else(|| missing("n"))?;
        let presentation = ExchangePresentation::new(
            n,
            BraidWord::parse(n, &a)?,
            BraidWord::parse(n, &b)?,
        )?;
        let cfg = Self {
            presentation,
            k_min: k_min.ok_or_else(|| missing("k_min"))?,
            k_max: k_max.ok_or_else(|| missing("k_max"))?,
            entropy,
            cap,
            format,
            out,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_full_config() {
        let cfg: ExperimentConfig = "n=4\nA=1\nB=3\nk_min=-3\nk_max=3 # headline\n\
             iters=500\ntol=1e-8\nseeds=2\ncap=1000\nformat=json\nout=report.json\n"
            .parse()
            .unwrap();
        assert_eq!(cfg.presentation.beta().to_string(), "1,3");
        assert_eq!((cfg.k_min, cfg.k_max), (-3, 3));
        assert_eq!(cfg.entropy.max_iters, 500);
        assert_eq!(cfg.entropy.seeds, 2);
        assert_eq!(cfg.cap, 1000);
        assert_eq!(cfg.format, Format::Json);
        assert_eq!(cfg.out, Some(PathBuf::from("report.json")));
        assert_eq!(cfg.ks().count(), 7);
    }

    #[test]
    fn rejects_bad_configs() {
        for text in [
            "n=4\nA=1\nB=3\nk_min=2\nk_max=1",
            "n=4\nA=1\nB=3\nk_min=0\nk_max=1\ntol=0",
            "n=4\nA=1\nB=3\nk_min=0\nk_max=1\ntol=-1e-3",
            "n=4\nA=1\nB=3\nk_min=0\nk_max=1\nseeds=0",
            "n=4\nA=3\nB=3\nk_min=0\nk_max=1",
            "n=4\nA=1\nB=3\nk_max=1",
            "n=4\nA=1\nB=3\nk_min=0\nk_max=1\nformat=xml",
            "n=4\nA=1\nB=3\nk_min=0\nk_max=1\ncolour=red",
            "n=4\nA=1\nB=3\nk_min=0\nk_max=1\ncap=0",
        ] {
            assert!(text.parse::<ExperimentConfig>().is_err(), "{text}");
        }
    }
}
