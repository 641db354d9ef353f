//! Flat `key = value` scenario configuration.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use serde::Serialize;

use crate::confluent::{classify_mu, SeedChoice, Verdict, WFunction};
use crate::potentials::PotentialSpec;
use crate::seeds::BetaSign;
use crate::verify::Grid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Isospectral,
    Delete,
    Create,
}

impl Mode {
    fn parse(s: &str) -> Option<Self> {
        match s {
            "isospectral" => Some(Self::Isospectral),
            "delete" => Some(Self::Delete),
            "create" => Some(Self::Create),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Isospectral => "isospectral",
            Self::Delete => "delete",
            Self::Create => "create",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioConfig {
    pub potential: PotentialSpec,
    pub mode: Mode,
    pub n: Option<usize>,
    pub epsilon: Option<f64>,
    pub w0: f64,
    pub beta_sign: BetaSign,
    /// Grid of the exported curves.
    pub grid: Grid,
    /// Grid of the eigenvalue oracle; defaults to `grid`.
    pub verify_grid: Grid,
    pub csv_path: PathBuf,
    pub json_path: PathBuf,
    pub plot_path: Option<PathBuf>,
}

impl ScenarioConfig {
    pub fn seed_choice(&self) -> SeedChoice {
        match (self.n, self.epsilon) {
            (Some(n), _) => SeedChoice::Bound { n },
            (None, Some(epsilon)) => SeedChoice::RightDecaying {
                epsilon,
                beta_sign: self.beta_sign,
            },
            (None, None) => unreachable!("validated configs carry n or epsilon"),
        }
    }

    /// The configuration in the text format accepted by [`validate_config`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| out.push_str(&format!("{k} = {v}\n"));
        match self.potential {
            PotentialSpec::RosenMorseII { s, lambda } => {
                line("model", "rosen-morse".into());
                line("s", format!("{s:?}"));
                line("lambda", format!("{lambda:?}"));
            }
            PotentialSpec::Eckart { a, b } => {
                line("model", "eckart".into());
                line("a", format!("{a:?}"));
                line("b", format!("{b:?}"));
            }
        }
        line("mode", self.mode.as_str().into());
        if let Some(n) = self.n {
            line("n", n.to_string());
        }
        if let Some(e) = self.epsilon {
            line("epsilon", format!("{e:?}"));
            line("beta_sign", format!("{}", self.beta_sign.value() as i32));
        }
        line("w0", format!("{:?}", self.w0));
        line("x_min", format!("{:?}", self.grid.x_min));
        line("x_max", format!("{:?}", self.grid.x_max));
        line("n_points", self.grid.n_points.to_string());
        if self.verify_grid != self.grid {
            line("verify_x_min", format!("{:?}", self.verify_grid.x_min));
            line("verify_x_max", format!("{:?}", self.verify_grid.x_max));
            line("verify_n_points", self.verify_grid.n_points.to_string());
        }
        line("csv_path", self.csv_path.display().to_string());
        line("json_path", self.json_path.display().to_string());
        if let Some(p) = &self.plot_path {
            line("plot_path", p.display().to_string());
        }
        out
    }
}

/// One configuration problem, located by line where possible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError {
    pub line: Option<usize>,
    pub field: String,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}: {}", self.field, self.message),
            None => write!(f, "{}: {}", self.field, self.message),
        }
    }
}

const KEYS: &[&str] = &[
    "model",
    "s",
    "lambda",
    "a",
    "b",
    "mode",
    "n",
    "epsilon",
    "w0",
    "beta_sign",
    "x_min",
    "x_max",
    "n_points",
    "verify_x_min",
    "verify_x_max",
    "verify_n_points",
    "csv_path",
    "json_path",
    "plot_path",
];

struct Collector {
    entries: BTreeMap<String, (usize, String)>,
    errors: Vec<ConfigError>,
}

impl Collector {
    fn err(&mut self, line: Option<usize>, field: &str, message: impl Into<String>) {
        self.errors.push(ConfigError {
            line,
            field: field.into(),
            message: message.into(),
        });
    }

    fn line_of(&self, key: &str) -> Option<usize> {
        self.entries.get(key).map(|e| e.0)
    }

    fn has(&self, key: &str) -> bool {
        self.entries.contains_key(key)
    }

    fn raw(&self, key: &str) -> Option<(usize, String)> {
        self.entries.get(key).cloned()
    }

    fn real(&mut self, key: &str) -> Option<f64> {
        let (line, v) = self.raw(key)?;
        match v.parse::<f64>() {
            Ok(x) if x.is_finite() => Some(x),
            _ => {
                self.err(Some(line), key, format!("expected a finite number, got {v:?}"));
                None
            }
        }
    }

    fn count(&mut self, key: &str) -> Option<usize> {
        let (line, v) = self.raw(key)?;
        match v.parse::<usize>() {
            Ok(x) => Some(x),
            Err(_) => {
                self.err(Some(line), key, format!("expected a non-negative integer, got {v:?}"));
                None
            }
        }
    }

    fn required_real(&mut self, key: &str, context: &str) -> Option<f64> {
        if !self.has(key) {
            self.err(None, key, format!("required {context}"));
            return None;
        }
        self.real(key)
    }

    fn forbid(&mut self, key: &str, context: &str) {
        if let Some(line) = self.line_of(key) {
            self.err(Some(line), key, format!("not allowed {context}"));
        }
    }
}

/// Parses and checks a configuration, reporting every problem at once.
pub fn validate_config(raw: &str) -> Result<ScenarioConfig, Vec<ConfigError>> {
    let mut c = Collector {
        entries: BTreeMap::new(),
        errors: Vec::new(),
    };
    for (i, text) in raw.lines().enumerate() {
        let line = i + 1;
        let body = text.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let Some((k, v)) = body.split_once('=') else {
            c.err(Some(line), body, "expected `key = value`");
            continue;
        };
        let (k, v) = (k.trim(), v.trim());
        if !KEYS.contains(&k) {
            c.err(Some(line), k, "unknown key");
            continue;
        }
        if v.is_empty() {
            c.err(Some(line), k, "empty value");
            continue;
        }
        if let Some((first, _)) = c.entries.get(k) {
            let msg = format!("duplicate key (first set on line {first})");
            c.err(Some(line), k, msg);
            continue;
        }
        c.entries.insert(k.to_string(), (line, v.to_string()));
    }

    let potential = match c.raw("model") {
        None => {
            c.err(None, "model", "required (rosen-morse or eckart)");
            None
        }
        Some((line, m)) => match m.as_str() {
            "rosen-morse" => {
                c.forbid("a", "for model rosen-morse");
                c.forbid("b", "for model rosen-morse");
                let s = c.required_real("s", "for model rosen-morse");
                let lambda = c.required_real("lambda", "for model rosen-morse");
                match (s, lambda) {
                    (Some(s), Some(l)) => match PotentialSpec::rosen_morse(s, l) {
                        Ok(p) => Some(p),
                        Err(e) => {
                            c.err(c.line_of("lambda"), "lambda", e.to_string());
                            None
                        }
                    },
                    _ => None,
                }
            }
            "eckart" => {
                c.forbid("s", "for model eckart");
                c.forbid("lambda", "for model eckart");
                let a = c.required_real("a", "for model eckart");
                let b = c.required_real("b", "for model eckart");
                match (a, b) {
                    (Some(a), Some(b)) => match PotentialSpec::eckart(a, b) {
                        Ok(p) => Some(p),
                        Err(e) => {
                            c.err(c.line_of("b"), "b", e.to_string());
                            None
                        }
                    },
                    _ => None,
                }
            }
            other => {
                c.err(Some(line), "model", format!("expected rosen-morse or eckart, got {other:?}"));
                None
            }
        },
    };

    let mode = match c.raw("mode") {
        None => {
            c.err(None, "mode", "required (isospectral, delete or create)");
            None
        }
        Some((line, m)) => {
            let mode = Mode::parse(&m);
            if mode.is_none() {
                c.err(Some(line), "mode", format!("expected isospectral, delete or create, got {m:?}"));
            }
            mode
        }
    };

    let n = c.count("n");
    let epsilon = c.real("epsilon");
    let w0 = c.required_real("w0", "");
    let beta_sign = match c.raw("beta_sign") {
        None => Some(BetaSign::default()),
        Some((line, v)) => {
            let sign = v.parse::<f64>().ok().and_then(BetaSign::from_value);
            if sign.is_none() {
                c.err(Some(line), "beta_sign", format!("expected +1 or -1, got {v:?}"));
            }
            sign
        }
    };
    match mode {
        Some(Mode::Isospectral | Mode::Delete) => {
            if !c.has("n") {
                c.err(None, "n", format!("required in {} mode", mode.unwrap().as_str()));
            }
            c.forbid("epsilon", "unless mode = create");
            c.forbid("beta_sign", "unless mode = create");
        }
        Some(Mode::Create) => {
            if !c.has("epsilon") {
                c.err(None, "epsilon", "required in create mode");
            }
            c.forbid("n", "in create mode");
        }
        None => {}
    }

    if let (Some(p), Some(n)) = (potential, n) {
        if p.check_level(n).is_err() {
            let levels = p.valid_levels();
            let msg = format!("level {n} is not bound (valid levels 0..={})", levels.len().saturating_sub(1));
            c.err(c.line_of("n"), "n", msg);
        }
    }

    let grid = grid_from(&mut c, potential, "x_min", "x_max", "n_points", None);
    let verify_grid = grid_from(&mut c, potential, "verify_x_min", "verify_x_max", "verify_n_points", grid);

    let path = |c: &mut Collector, key: &str, required: bool| match c.raw(key) {
        Some((_, v)) => Some(PathBuf::from(v)),
        None => {
            if required {
                c.err(None, key, "required");
            }
            None
        }
    };
    let csv_path = path(&mut c, "csv_path", true);
    let json_path = path(&mut c, "json_path", true);
    let plot_path = path(&mut c, "plot_path", false);

    // deletion only happens at a border value of the kernel
    if let (Some(p), Some(Mode::Delete), Some(n), Some(w0)) = (potential, mode, n, w0) {
        if p.check_level(n).is_ok() {
            match WFunction::new(&p, SeedChoice::Bound { n }, None, w0) {
                Ok(wf) => {
                    let (mu, verdict) = classify_mu(&wf);
                    if verdict != Verdict::BorderDelete {
                        let msg = format!("delete mode needs a border value (w0 = 0 or 1), got mu = {mu}");
                        c.err(c.line_of("w0"), "w0", msg);
                    }
                }
                Err(e) => c.err(c.line_of("w0"), "w0", e.to_string()),
            }
        }
    }

    if !c.errors.is_empty() {
        c.errors.sort_by_key(|e| e.line.unwrap_or(usize::MAX));
        return Err(c.errors);
    }
    Ok(ScenarioConfig {
        potential: potential.unwrap(),
        mode: mode.unwrap(),
        n,
        epsilon,
        w0: w0.unwrap(),
        beta_sign: beta_sign.unwrap(),
        grid: grid.unwrap(),
        verify_grid: verify_grid.unwrap(),
        csv_path: csv_path.unwrap(),
        json_path: json_path.unwrap(),
        plot_path,
    })
}

/// Reads a grid from three keys, falling back to `fallback` (or the model
/// window with 6000 points) for missing ones.
fn grid_from(
    c: &mut Collector,
    potential: Option<PotentialSpec>,
    kmin: &str,
    kmax: &str,
    kn: &str,
    fallback: Option<Grid>,
) -> Option<Grid> {
    let (dmin, dmax, dn) = match (fallback, potential) {
        (Some(g), _) => (g.x_min, g.x_max, g.n_points),
        (None, Some(p)) => {
            let (a, b) = p.default_window();
            (a, b, 6000)
        }
        (None, None) => return None,
    };
    let x_min = if c.has(kmin) { c.real(kmin)? } else { dmin };
    let x_max = if c.has(kmax) { c.real(kmax)? } else { dmax };
    let n_points = if c.has(kn) { c.count(kn)? } else { dn };
    let line = c.line_of(kmin).or(c.line_of(kmax)).or(c.line_of(kn));
    if let Some(p) = potential {
        if !p.contains(x_min) {
            c.err(c.line_of(kmin), kmin, format!("{x_min} lies outside the {} domain", p.name()));
            return None;
        }
    }
    match Grid::new(x_min, x_max, n_points) {
        Ok(g) => Some(g),
        Err(e) => {
            c.err(line, kn, e.to_string());
            None
        }
    }
}
