use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exprlang::parse;
use crate::funcspace::{FunctionSequence, Gallery, Interval, LimitFunction};
use crate::report::ClassifyConfig;

/// Default index spec when none is given.
pub const DEFAULT_NS: &str = "1..128:geometric";

/// Analysis request as read from a JSON config file or assembled from flags.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisConfig {
    /// Gallery id or expression in `x` and `n`.
    pub sequence: String,
    /// Limit expression in `x`; required for expression sequences.
    #[serde(default)]
    pub limit: Option<String>,
    #[serde(default)]
    pub interval: Option<IntervalConfig>,
    #[serde(default)]
    pub ns: Option<NsConfig>,
    #[serde(default)]
    pub grid_size: Option<usize>,
    #[serde(default)]
    pub delta_ladder: Option<Vec<f64>>,
    #[serde(default)]
    pub width_ladder: Option<Vec<f64>>,
    #[serde(default)]
    pub eta_ladder: Option<Vec<f64>>,
    #[serde(default)]
    pub tolerances: Option<TolerancesConfig>,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntervalConfig {
    pub a: f64,
    pub b: f64,
}

/// Either an explicit index list or a range spec string.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum NsConfig {
    List(Vec<u32>),
    Spec(String),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TolerancesConfig {
    pub monotone: Option<f64>,
    pub convexity: Option<f64>,
    pub pointwise: Option<f64>,
    /// Stopping bracket width of the sup search.
    pub sup_x: Option<f64>,
}

/// Everything `classify` needs, with defaults applied.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub seq: FunctionSequence<f64>,
    pub lim: LimitFunction<f64>,
    pub interval: Interval<f64>,
    pub ns: Vec<u32>,
    pub config: ClassifyConfig<f64>,
}

impl AnalysisConfig {
    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {}", path.display(), e)))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    /// Builds the sequence, limit and classification settings.
    pub fn resolve(&self) -> Result<Resolved> {
        let (seq, lim, default_interval) =
            sequence_and_limit(&self.sequence, self.limit.as_deref())?;
        let interval = match self.interval {
            Some(IntervalConfig { a, b }) => Interval::new(a, b)?,
            None => default_interval,
        };
        let seq = seq.restricted(interval)?;
        let lim = lim.restricted(interval)?;
        let ns = match &self.ns {
            None => parse_ns(DEFAULT_NS)?,
            Some(NsConfig::Spec(s)) => parse_ns(s)?,
            Some(NsConfig::List(v)) => checked_list(v.clone())?,
        };

        let mut config = ClassifyConfig::<f64>::default();
        if let Some(m) = self.grid_size {
            config.grid_size = m;
        }
        if let Some(l) = &self.delta_ladder {
            config.delta_ladder = l.clone();
        }
        if let Some(l) = &self.width_ladder {
            config.width_ladder = l.clone();
        }
        if let Some(l) = &self.eta_ladder {
            config.eta_ladder = l.clone();
        }
        if let Some(t) = self.tolerances {
            let tol = &mut config.tolerances;
            tol.monotone = t.monotone.unwrap_or(tol.monotone);
            tol.convexity = t.convexity.unwrap_or(tol.convexity);
            tol.pointwise = t.pointwise.unwrap_or(tol.pointwise);
            config.tol_x = t.sup_x.unwrap_or(config.tol_x);
        }
        Ok(Resolved {
            seq,
            lim,
            interval,
            ns,
            config,
        })
    }
}

/// Gallery ids resolve to built-ins (an explicit limit expression overrides
/// the built-in limit); anything else is parsed as an expression and needs
/// a limit. Also returns the default interval: the gallery domain, or
/// `[0, 1]` for expressions.
pub fn sequence_and_limit(
    sequence: &str,
    limit: Option<&str>,
) -> Result<(FunctionSequence<f64>, LimitFunction<f64>, Interval<f64>)> {
    let gallery = sequence.parse::<Gallery>().ok();
    let seq = match gallery {
        Some(g) => FunctionSequence::builtin(g),
        None => FunctionSequence::from_expression(sequence, parse(sequence)?, wide_domain()),
    };
    let lim = match (limit, gallery) {
        (Some(text), _) => LimitFunction::from_expression(text, parse(text)?, wide_domain())?,
        (None, Some(g)) => LimitFunction::builtin(g),
        (None, None) => {
            return Err(Error::Input(format!(
                "sequence '{}' is an expression; pass its limit with --limit",
                sequence
            )))
        }
    };
    let default_interval = match gallery {
        Some(_) => *seq.domain(),
        None => Interval::new(0.0, 1.0)?,
    };
    Ok((seq, lim, default_interval))
}

/// Expressions are defined wherever they evaluate; domain errors surface at
/// evaluation time. The sequence is narrowed to the requested interval later.
fn wide_domain() -> Interval<f64> {
    Interval::new(-f64::MAX, f64::MAX).expect("finite bounds")
}

/// Parses `lo..hi`, `lo..hi:step`, `lo..hi:geometric` (powers of two in the
/// range) or a comma-separated list.
pub fn parse_ns(spec: &str) -> Result<Vec<u32>> {
    let spec = spec.trim();
    let bad = |why: &str| Error::Input(format!("invalid index spec '{}': {}", spec, why));
    let int = |s: &str| {
        s.trim()
            .parse::<u32>()
            .map_err(|_| bad("expected an integer"))
    };

    let Some((lo, rest)) = spec.split_once("..") else {
        return checked_list(spec.split(',').map(int).collect::<Result<_>>()?);
    };
    let (hi, mode) = match rest.split_once(':') {
        Some((hi, mode)) => (hi, Some(mode.trim())),
        None => (rest, None),
    };
    let (lo, hi) = (int(lo)?, int(hi)?);
    if lo == 0 || lo > hi {
        return Err(bad("need 1 <= lo <= hi"));
    }
    let ns: Vec<u32> = match mode {
        None => (lo..=hi).collect(),
        Some("geometric") => (0..32)
            .map(|k| 1u64 << k)
            .filter(|&p| p >= lo as u64 && p <= hi as u64)
            .map(|p| p as u32)
            .collect(),
        Some(step) => {
            let step = int(step)?;
            if step == 0 {
                return Err(bad("step must be positive"));
            }
            (lo..=hi).step_by(step as usize).collect()
        }
    };
    if ns.is_empty() {
        return Err(bad("no indices in range"));
    }
    Ok(ns)
}

fn checked_list(mut ns: Vec<u32>) -> Result<Vec<u32>> {
    if ns.is_empty() || ns.contains(&0) {
        return Err(Error::Input(
            "indices must be positive and at least one is required".into(),
        ));
    }
    ns.sort_unstable();
    ns.dedup();
    Ok(ns)
}
