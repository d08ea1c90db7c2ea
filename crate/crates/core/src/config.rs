//! Run configuration files.
//!
//! A flat, line-oriented `key = value` format with four sections:
//!
//! ```text
//! # golden rotation over a piecewise Arnold family
//! [base]
//! kind = rotation
//! angle = "(sqrt(5)-1)/2"
//!
//! [fibre]
//! kind = arnold
//! alpha = "sin(2*pi*w)"
//! beta = "if(w<1/2, 1, if(w<3/4, 0, -1))"
//!
//! [lift]
//! kind = standard
//!
//! [run]
//! method = classical
//! n = 1000
//! m = 100
//! x0 = 0.3
//! ```
//!
//! Values are either bare tokens or double-quoted strings; `#` starts a
//! comment outside quotes. Numeric values accept constant expressions such
//! as `"sqrt(3)/3"`. Lists are comma separated.
//!
//! | section | keys |
//! |---|---|
//! | `base` | `kind` (`rotation`, `iet`, `singleton`), `angle`, `preset` (`three_interval`), `lengths`, `permutation` (1-based images) |
//! | `fibre` | `kind` (`arnold`, `rotation`, `explicit`), `alpha`, `beta`, `expr` (in `w` and `x`) |
//! | `lift` | `kind` (`standard`, `qalpha`, `explicit`), `q`, `alpha`, `expr` |
//! | `run` | `method` (`classical`, `binary`, `visit`), `n`, `m`, `x0`, `omega0`, `z`, `n_max`, `reference`, `a_grid`, `a_range` (start, end, count), `index_convention` (`cocycle`, `shifted`), `acceleration`, `check_fixed_points` |

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::base::{three_interval_exchange, BaseSystem, IntervalExchange};
use crate::circle::CirclePoint;
use crate::error::Error;
use crate::estimate::{IndexConvention, Method};
use crate::expr::parse_with_vars;
use crate::fibre::{arnold_validate, AlphaCheck, FibreFamily, LiftSpec, DEFAULT_ALPHA_GRID};
use crate::mean::linear_grid;
use crate::system::{Accelerated, RandomCircleMap, SkewSystem};

const SECTIONS: [(&str, &[&str]); 4] = [
    ("base", &["kind", "angle", "preset", "lengths", "permutation"]),
    ("fibre", &["kind", "alpha", "beta", "expr"]),
    ("lift", &["kind", "q", "alpha", "expr"]),
    (
        "run",
        &[
            "method",
            "n",
            "m",
            "x0",
            "omega0",
            "z",
            "n_max",
            "reference",
            "a_grid",
            "a_range",
            "index_convention",
            "acceleration",
            "check_fixed_points",
        ],
    ),
];

/// A configuration problem, tied to the key (`section.key`) or line that caused it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{key}: {message}")]
    Key { key: String, message: String },
    #[error("cannot read config: {0}")]
    Io(String),
}

impl ConfigError {
    fn key(key: &str, message: impl fmt::Display) -> Self {
        ConfigError::Key { key: key.to_string(), message: message.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq)]
struct Entry {
    value: String,
    line: usize,
}

/// The raw `section.key → value` table of a config file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RawConfig {
    entries: BTreeMap<String, Entry>,
}

impl RawConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut entries = BTreeMap::new();
        let mut section: Option<&str> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let syntax = |message: String| ConfigError::Syntax { line, message };
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix('[') {
                let name = strip_comment(rest)
                    .trim_end()
                    .strip_suffix(']')
                    .ok_or_else(|| syntax("unterminated section header".into()))?
                    .trim();
                let known = SECTIONS.iter().find(|(s, _)| *s == name);
                section = Some(known.ok_or_else(|| syntax(format!("unknown section [{name}]")))?.0);
                continue;
            }
            let (key, value) = trimmed
                .split_once('=')
                .ok_or_else(|| syntax(format!("expected `key = value`, found `{trimmed}`")))?;
            let key = key.trim();
            let sec = section.ok_or_else(|| syntax(format!("key `{key}` appears before any section header")))?;
            let full = format!("{sec}.{key}");
            let allowed = SECTIONS.iter().find(|(s, _)| *s == sec).map(|(_, k)| *k).unwrap_or(&[]);
            if !allowed.contains(&key) {
                return Err(ConfigError::key(&full, format!("unknown key (line {line})")));
            }
            let value = parse_value(value.trim()).map_err(|m| ConfigError::key(&full, m))?;
            if entries.insert(full.clone(), Entry { value, line }).is_some() {
                return Err(ConfigError::key(&full, format!("duplicate key (line {line})")));
            }
        }
        Ok(RawConfig { entries })
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(|e| e.value.as_str())
    }

    fn require(&self, key: &str) -> Result<&str, ConfigError> {
        self.get(key).ok_or_else(|| ConfigError::key(key, "missing"))
    }

    fn number(&self, key: &str) -> Result<Option<f64>, ConfigError> {
        self.get(key).map(|v| const_number(key, v)).transpose()
    }

    fn count(&self, key: &str) -> Result<Option<usize>, ConfigError> {
        self.get(key).map(|v| count_value(key, v)).transpose()
    }

    fn list(&self, key: &str) -> Result<Option<Vec<f64>>, ConfigError> {
        self.get(key)
            .map(|v| split_list(v).into_iter().map(|item| const_number(key, item)).collect())
            .transpose()
    }

    fn flag(&self, key: &str) -> Result<bool, ConfigError> {
        match self.get(key) {
            None | Some("false") => Ok(false),
            Some("true") => Ok(true),
            Some(other) => Err(ConfigError::key(key, format!("expected true or false, found `{other}`"))),
        }
    }
}

fn strip_comment(s: &str) -> &str {
    let mut in_quotes = false;
    for (i, c) in s.char_indices() {
        match c {
            '"' => in_quotes = !in_quotes,
            '#' if !in_quotes => return &s[..i],
            _ => {}
        }
    }
    s
}

fn parse_value(v: &str) -> Result<String, String> {
    if let Some(rest) = v.strip_prefix('"') {
        let end = rest.find('"').ok_or("unterminated string")?;
        let tail = strip_comment(&rest[end + 1..]).trim();
        if !tail.is_empty() {
            return Err(format!("unexpected `{tail}` after string"));
        }
        Ok(rest[..end].to_string())
    } else {
        let v = strip_comment(v).trim();
        if v.is_empty() {
            return Err("empty value".into());
        }
        Ok(v.to_string())
    }
}

/// Splits on commas that are not inside parentheses.
fn split_list(v: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in v.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(v[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(v[start..].trim());
    out
}

fn const_number(key: &str, v: &str) -> Result<f64, ConfigError> {
    let e = parse_with_vars(v, &[]).map_err(|e| ConfigError::key(key, e))?;
    e.eval_const().map_err(|e| ConfigError::key(key, e))
}

fn count_value(key: &str, v: &str) -> Result<usize, ConfigError> {
    v.parse::<usize>()
        .map_err(|_| ConfigError::key(key, format!("expected a non-negative integer, found `{v}`")))
}

fn positive(key: &str, v: usize) -> Result<usize, ConfigError> {
    if v == 0 {
        return Err(ConfigError::key(key, "must be at least 1"));
    }
    Ok(v)
}

/// Run parameters; anything absent takes the default shown in [`RunParams::default`].
#[derive(Debug, Clone, PartialEq)]
pub struct RunParams {
    pub method: Method,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub x0: f64,
    pub omega0: CirclePoint,
    pub n_max: Option<usize>,
    pub reference: Option<f64>,
    pub grid: Option<Vec<f64>>,
    pub convention: IndexConvention,
    pub acceleration: usize,
    pub check_fixed_points: bool,
}

impl Default for RunParams {
    fn default() -> Self {
        RunParams {
            method: Method::Classical,
            n: None,
            m: None,
            x0: 0.0,
            omega0: CirclePoint::ZERO,
            n_max: None,
            reference: None,
            grid: None,
            convention: IndexConvention::Cocycle,
            acceleration: 1,
            check_fixed_points: false,
        }
    }
}

/// A fully resolved and validated configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub system: SkewSystem,
    pub run: RunParams,
    /// Canonical single-line rendering of every resolved setting.
    pub resolved: String,
}

impl RunConfig {
    pub fn from_file(path: &std::path::Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io(format!("{}: {e}", path.display())))?;
        Self::from_str(&text)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn from_str(text: &str) -> Result<Self, ConfigError> {
        let raw = RawConfig::parse(text)?;
        let mut resolved = String::new();
        let base = resolve_base(&raw, &mut resolved)?;
        let fibre = resolve_fibre(&raw, &mut resolved)?;
        let lift = resolve_lift(&raw, &mut resolved)?;
        let system = SkewSystem::new(base, fibre.clone(), lift.clone()).map_err(|e| match e {
            Error::InvalidLift(_) => ConfigError::key("lift", e),
            Error::InvalidFamily(_) => ConfigError::key("fibre", e),
            e => ConfigError::key("fibre", format!("evaluation failed during validation: {e}")),
        })?;
        let run = resolve_run(&raw, &mut resolved)?;
        Ok(RunConfig { system, run, resolved: resolved.trim_end().to_string() })
    }

    /// The configured system, accelerated when `run.acceleration > 1`.
    pub fn dynamics(&self) -> Box<dyn RandomCircleMap + Send + '_> {
        match self.run.acceleration {
            1 => Box::new(&self.system),
            k => Box::new(Accelerated::new(&self.system, k).expect("acceleration validated at load")),
        }
    }

    pub fn require_n(&self) -> Result<usize, ConfigError> {
        self.run.n.ok_or_else(|| ConfigError::key("run.n", "missing"))
    }

    pub fn require_m(&self) -> Result<usize, ConfigError> {
        self.run.m.ok_or_else(|| ConfigError::key("run.m", "missing"))
    }

    pub fn require_n_max(&self) -> Result<usize, ConfigError> {
        self.run.n_max.ok_or_else(|| ConfigError::key("run.n_max", "missing"))
    }

    pub fn require_grid(&self) -> Result<&[f64], ConfigError> {
        self.run.grid.as_deref().ok_or_else(|| ConfigError::key("run.a_grid", "missing (or give run.a_range)"))
    }
}

fn push(resolved: &mut String, key: &str, value: impl fmt::Display) {
    let _ = write!(resolved, "{key}={value} ");
}

fn quoted(s: &str) -> String {
    format!("\"{s}\"")
}

fn resolve_base(raw: &RawConfig, out: &mut String) -> Result<BaseSystem, ConfigError> {
    let kind = raw.require("base.kind")?;
    push(out, "base.kind", kind);
    match kind {
        "rotation" => {
            let angle = raw.number("base.angle")?.ok_or_else(|| ConfigError::key("base.angle", "missing"))?;
            let base = BaseSystem::rotation(angle).map_err(|e| ConfigError::key("base.angle", e))?;
            if let BaseSystem::Rotation { angle } = base {
                push(out, "base.angle", angle);
            }
            Ok(base)
        }
        "singleton" => Ok(BaseSystem::Singleton),
        "iet" => {
            if let Some(preset) = raw.get("base.preset") {
                if raw.get("base.lengths").is_some() || raw.get("base.permutation").is_some() {
                    return Err(ConfigError::key("base.preset", "cannot be combined with lengths/permutation"));
                }
                if preset != "three_interval" {
                    return Err(ConfigError::key("base.preset", format!("unknown preset `{preset}`")));
                }
                push(out, "base.preset", preset);
                return Ok(three_interval_exchange());
            }
            let lengths = raw.list("base.lengths")?.ok_or_else(|| ConfigError::key("base.lengths", "missing"))?;
            let perm_raw = raw.require("base.permutation")?;
            let permutation = split_list(perm_raw)
                .into_iter()
                .map(|p| {
                    count_value("base.permutation", p)?
                        .checked_sub(1)
                        .ok_or_else(|| ConfigError::key("base.permutation", "entries are 1-based"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let iet = IntervalExchange::new(lengths, permutation).map_err(|e| ConfigError::key("base.lengths", e))?;
            push(out, "base.lengths", join(iet.lengths()));
            push(out, "base.permutation", join(&iet.permutation().iter().map(|p| p + 1).collect::<Vec<_>>()));
            Ok(BaseSystem::IntervalExchange(iet))
        }
        other => Err(ConfigError::key("base.kind", format!("expected rotation, iet or singleton, found `{other}`"))),
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn expression<T>(
    raw: &RawConfig,
    key: &str,
    out: &mut String,
    build: impl FnOnce(&str) -> crate::error::Result<T>,
) -> Result<T, ConfigError> {
    let src = raw.require(key)?;
    push(out, key, quoted(src));
    build(src).map_err(|e| ConfigError::key(key, e))
}

fn resolve_fibre(raw: &RawConfig, out: &mut String) -> Result<FibreFamily, ConfigError> {
    let kind = raw.require("fibre.kind")?;
    push(out, "fibre.kind", kind);
    match kind {
        "arnold" => {
            let alpha = expression(raw, "fibre.alpha", out, |s| Ok(parse_with_vars(s, &["w"])?))?;
            let beta = expression(raw, "fibre.beta", out, |s| Ok(parse_with_vars(s, &["w"])?))?;
            match arnold_validate(&alpha, DEFAULT_ALPHA_GRID).map_err(|e| ConfigError::key("fibre.alpha", e))? {
                AlphaCheck::Ok => {}
                AlphaCheck::Violation { omega, alpha } => {
                    return Err(ConfigError::key(
                        "fibre.alpha",
                        format!("|alpha(w)| <= 1 violated: alpha({omega}) = {alpha}"),
                    ))
                }
            }
            Ok(FibreFamily::Arnold { alpha, beta })
        }
        "rotation" => expression(raw, "fibre.beta", out, FibreFamily::rigid_rotation),
        "explicit" => expression(raw, "fibre.expr", out, FibreFamily::explicit),
        other => Err(ConfigError::key("fibre.kind", format!("expected arnold, rotation or explicit, found `{other}`"))),
    }
}

fn resolve_lift(raw: &RawConfig, out: &mut String) -> Result<LiftSpec, ConfigError> {
    let kind = raw.get("lift.kind").unwrap_or("standard");
    push(out, "lift.kind", kind);
    match kind {
        "standard" => Ok(LiftSpec::Standard),
        "qalpha" => {
            let q = raw.number("lift.q")?.ok_or_else(|| ConfigError::key("lift.q", "missing"))?;
            let alpha = raw.number("lift.alpha")?.ok_or_else(|| ConfigError::key("lift.alpha", "missing"))?;
            push(out, "lift.q", q);
            push(out, "lift.alpha", alpha);
            Ok(LiftSpec::QAlpha { q, alpha })
        }
        "explicit" => expression(raw, "lift.expr", out, LiftSpec::explicit),
        other => Err(ConfigError::key("lift.kind", format!("expected standard, qalpha or explicit, found `{other}`"))),
    }
}

fn resolve_run(raw: &RawConfig, out: &mut String) -> Result<RunParams, ConfigError> {
    let mut run = RunParams::default();
    let z = raw.number("run.z")?.unwrap_or(0.0);
    run.method = match raw.get("run.method").unwrap_or("classical") {
        "classical" => Method::Classical,
        "binary" => Method::Binary,
        "visit" => Method::Visit { z: CirclePoint::new(z).map_err(|e| ConfigError::key("run.z", e))? },
        other => {
            return Err(ConfigError::key("run.method", format!("expected classical, binary or visit, found `{other}`")))
        }
    };
    push(out, "run.method", run.method.name());
    if let Method::Visit { z } = run.method {
        push(out, "run.z", z);
    }
    run.n = raw.count("run.n")?.map(|v| positive("run.n", v)).transpose()?;
    run.m = raw.count("run.m")?.map(|v| positive("run.m", v)).transpose()?;
    run.n_max = raw.count("run.n_max")?.map(|v| positive("run.n_max", v)).transpose()?;
    if let Some(x0) = raw.number("run.x0")? {
        run.x0 = x0;
    }
    if let Some(w) = raw.number("run.omega0")? {
        run.omega0 = CirclePoint::new(w).map_err(|e| ConfigError::key("run.omega0", e))?;
    }
    run.reference = raw.number("run.reference")?;
    run.grid = match (raw.list("run.a_grid")?, raw.get("run.a_range")) {
        (Some(_), Some(_)) => return Err(ConfigError::key("run.a_range", "cannot be combined with run.a_grid")),
        (Some(g), None) => Some(g),
        (None, Some(r)) => {
            let parts = split_list(r);
            if parts.len() != 3 {
                return Err(ConfigError::key("run.a_range", "expected `start, end, count`"));
            }
            let start = const_number("run.a_range", parts[0])?;
            let end = const_number("run.a_range", parts[1])?;
            let count = positive("run.a_range", count_value("run.a_range", parts[2])?)?;
            Some(linear_grid(start, end, count))
        }
        (None, None) => None,
    };
    if let Some(grid) = &run.grid {
        if grid.is_empty() || grid.iter().any(|a| !(0.0..=1.0).contains(a)) || grid.windows(2).any(|w| w[1] <= w[0]) {
            let key = if raw.get("run.a_grid").is_some() { "run.a_grid" } else { "run.a_range" };
            return Err(ConfigError::key(key, "grid must be non-empty, strictly increasing and inside [0, 1]"));
        }
    }
    run.convention = match raw.get("run.index_convention").unwrap_or("cocycle") {
        "cocycle" => IndexConvention::Cocycle,
        "shifted" => IndexConvention::Shifted,
        other => {
            return Err(ConfigError::key(
                "run.index_convention",
                format!("expected cocycle or shifted, found `{other}`"),
            ))
        }
    };
    run.acceleration = positive("run.acceleration", raw.count("run.acceleration")?.unwrap_or(1))?;
    run.check_fixed_points = raw.flag("run.check_fixed_points")?;

    for (key, v) in [("run.n", run.n), ("run.m", run.m), ("run.n_max", run.n_max)] {
        if let Some(v) = v {
            push(out, key, v);
        }
    }
    push(out, "run.x0", run.x0);
    push(out, "run.omega0", run.omega0);
    if let Some(r) = run.reference {
        push(out, "run.reference", r);
    }
    if let Some(g) = &run.grid {
        push(out, "run.a_grid", join(g));
    }
    push(
        out,
        "run.index_convention",
        match run.convention {
            IndexConvention::Cocycle => "cocycle",
            IndexConvention::Shifted => "shifted",
        },
    );
    push(out, "run.acceleration", run.acceleration);
    push(out, "run.check_fixed_points", run.check_fixed_points);
    Ok(run)
}

#[cfg(test)]
mod tests {
    use super::*;

    const GOLDEN: &str = r#"
# piecewise Arnold family over the golden rotation
[base]
kind = rotation
angle = "(sqrt(5)-1)/2"

[fibre]
kind = arnold
alpha = "sin(2*pi*w)"
beta = "if(w<1/2, 1, if(w<3/4, 0, -1))"   # three branches

[lift]
kind = standard

[run]
method = binary
n = 1000
x0 = 0.3
"#;

    fn key_of(e: ConfigError) -> String {
        match e {
            ConfigError::Key { key, .. } => key,
            other => panic!("expected a key error, got {other:?}"),
        }
    }

    #[test]
    fn parses_golden_config() {
        let cfg = RunConfig::from_str(GOLDEN).unwrap();
        assert_eq!(cfg.system.base, BaseSystem::golden_rotation());
        assert_eq!(cfg.run.method, Method::Binary);
        assert_eq!(cfg.run.n, Some(1000));
        assert_eq!(cfg.run.m, None);
        assert_eq!(cfg.run.x0, 0.3);
        assert!(cfg.resolved.contains("fibre.beta=\"if(w<1/2, 1, if(w<3/4, 0, -1))\""));
        assert!(!cfg.resolved.contains('\n'));
    }

    #[test]
    fn alpha_violation_names_key() {
        let text = GOLDEN.replace("alpha = \"sin(2*pi*w)\"", "alpha = \"2\"");
        let err = RunConfig::from_str(&text).unwrap_err();
        assert!(err.to_string().contains("|alpha(w)| <= 1"), "{err}");
        assert_eq!(key_of(err), "fibre.alpha");
    }

    #[test]
    fn malformed_expression_reports_position() {
        let text = GOLDEN.replace("alpha = \"sin(2*pi*w)\"", "alpha = \"sin(\"");
        let err = RunConfig::from_str(&text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("position") || msg.contains("pos"), "{msg}");
        assert_eq!(key_of(err), "fibre.alpha");
    }

    #[test]
    fn unknown_and_duplicate_keys() {
        let err = RunConfig::from_str(&GOLDEN.replace("n = 1000", "steps = 1000")).unwrap_err();
        assert_eq!(key_of(err), "run.steps");
        let err = RunConfig::from_str(&GOLDEN.replace("n = 1000", "n = 1000\nn = 5")).unwrap_err();
        assert_eq!(key_of(err), "run.n");
        let err = RunConfig::from_str(&GOLDEN.replace("n = 1000", "n = 0")).unwrap_err();
        assert_eq!(key_of(err), "run.n");
        let err = RunConfig::from_str(&GOLDEN.replace("[run]", "[runs]")).unwrap_err();
        assert!(matches!(err, ConfigError::Syntax { line: 15, .. }), "{err:?}");
    }

    #[test]
    fn missing_required_keys() {
        let err = RunConfig::from_str("[base]\nkind = rotation\n").unwrap_err();
        assert_eq!(key_of(err), "base.angle");
        let err = RunConfig::from_str("[base]\nkind = singleton\n").unwrap_err();
        assert_eq!(key_of(err), "fibre.kind");
    }

    #[test]
    fn iet_from_lengths_and_permutation() {
        let text = "[base]\nkind = iet\nlengths = 1/2, 1/4, 1/4\npermutation = 3, 2, 1\n\
                    [fibre]\nkind = rotation\nbeta = 0.1\n";
        let cfg = RunConfig::from_str(text).unwrap();
        let BaseSystem::IntervalExchange(iet) = &cfg.system.base else { panic!() };
        assert_eq!(iet.permutation(), &[2, 1, 0]);
        assert_eq!(cfg.system.base.step(CirclePoint::ZERO).value(), 0.5);
        let preset = "[base]\nkind = iet\npreset = three_interval\n[fibre]\nkind = rotation\nbeta = 0.1\n";
        assert_eq!(RunConfig::from_str(preset).unwrap().system.base, three_interval_exchange());
        let bad = text.replace("3, 2, 1", "0, 1, 2");
        assert_eq!(key_of(RunConfig::from_str(&bad).unwrap_err()), "base.permutation");
    }

    #[test]
    fn grid_from_range() {
        let text = format!("{GOLDEN}a_range = 0, 1, 11\n");
        let cfg = RunConfig::from_str(&text).unwrap();
        let g = cfg.require_grid().unwrap();
        assert_eq!(g.len(), 11);
        assert_eq!(g[10], 1.0);
        let text = format!("{GOLDEN}a_grid = 0.5, 0.25\n");
        assert_eq!(key_of(RunConfig::from_str(&text).unwrap_err()), "run.a_grid");
    }

    #[test]
    fn lifts_and_acceleration() {
        let text = GOLDEN.replace("kind = standard", "kind = qalpha\nq = 0\nalpha = 1");
        let cfg = RunConfig::from_str(&format!("{text}acceleration = 3\n")).unwrap();
        assert_eq!(cfg.system.lift, LiftSpec::QAlpha { q: 0.0, alpha: 1.0 });
        assert_eq!(cfg.run.acceleration, 3);
        let dynamics = cfg.dynamics();
        let w = CirclePoint::ZERO;
        assert_eq!(dynamics.base_step(w), cfg.system.base.step_n(w, 3));
        let bad = GOLDEN.replace("kind = standard", "kind = explicit\nexpr = \"x + 0.5\"");
        assert_eq!(key_of(RunConfig::from_str(&bad).unwrap_err()), "lift");
    }

    #[test]
    fn list_split_respects_parentheses() {
        assert_eq!(split_list("min(1, 2), 3"), vec!["min(1, 2)", "3"]);
    }
}
