//! Flat key=value run configuration.
//!
//! Keys: `grid.n1 grid.n2 grid.dt1 grid.dt2`, `p1.a p1.b p1.c p1.d p1.p p1.q`
//! (same for `p2.*`), `window.kind` (gaussian | rect | file) with
//! `window.sigma1/.sigma2`, `window.a`, or `window.path`, plus `u_stride`,
//! `seed`, `spectrograms`, and an optional `reference` path used by
//! reconstruction error reporting. Lines starting with `#` and blank lines
//! are ignored. Floats print in shortest round-trip form, so a config
//! survives write/parse cycles bit-for-bit.

use clap::ValueEnum;
use qolct::OlctParams;
use quatfield::GridSpec;
use std::fmt::Write as _;
use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
#[error("config: {0}")]
pub struct ConfigError(pub String);

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    /// Quick subset of the verification suite on small grids.
    Smoke,
    /// The full pinned suite.
    Desk,
}

impl Scale {
    pub fn name(self) -> &'static str {
        match self {
            Scale::Smoke => "smoke",
            Scale::Desk => "desk",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum WindowChoice {
    Gaussian { sigma1: f64, sigma2: f64 },
    Rect { a: f64 },
    File { path: PathBuf },
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub p1: OlctParams,
    pub p2: OlctParams,
    pub n1: usize,
    pub n2: usize,
    pub dt1: f64,
    pub dt2: f64,
    pub window: WindowChoice,
    pub u_stride: usize,
    pub seed: u64,
    pub spectrograms: bool,
    pub reference: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            p1: OlctParams::fourier(),
            p2: OlctParams::fourier(),
            n1: 32,
            n2: 32,
            dt1: 0.5,
            dt2: 0.5,
            window: WindowChoice::Gaussian { sigma1: 1.0, sigma2: 1.0 },
            u_stride: 1,
            seed: 7,
            spectrograms: false,
            reference: None,
        }
    }
}

impl RunConfig {
    pub fn grid(&self) -> GridSpec {
        GridSpec::centered(self.n1, self.n2, self.dt1, self.dt2)
    }

    pub fn parse(text: &str) -> Result<RunConfig, ConfigError> {
        let mut cfg = RunConfig::default();
        let mut raw1 = [0.0, 1.0, -1.0, 0.0, 0.0, 0.0];
        let mut raw2 = raw1;
        let mut kind = String::from("gaussian");
        let mut sigma = (1.0f64, 1.0f64);
        let mut rect_a = 2.0f64;
        let mut file_path = PathBuf::new();

        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| ConfigError(format!("line {}: expected key = value", lineno + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| ConfigError(format!("key {key}: invalid {what} `{value}`"));
            let float = || value.parse::<f64>().map_err(|_| bad("number"));

            match key {
                "grid.n1" => cfg.n1 = value.parse().map_err(|_| bad("count"))?,
                "grid.n2" => cfg.n2 = value.parse().map_err(|_| bad("count"))?,
                "grid.dt1" => cfg.dt1 = float()?,
                "grid.dt2" => cfg.dt2 = float()?,
                "u_stride" => cfg.u_stride = value.parse().map_err(|_| bad("count"))?,
                "seed" => cfg.seed = value.parse().map_err(|_| bad("seed"))?,
                "spectrograms" => {
                    cfg.spectrograms = value.parse().map_err(|_| bad("boolean"))?
                }
                "reference" => cfg.reference = Some(PathBuf::from(value)),
                "window.kind" => kind = value.to_string(),
                "window.sigma1" => sigma.0 = float()?,
                "window.sigma2" => sigma.1 = float()?,
                "window.a" => rect_a = float()?,
                "window.path" => file_path = PathBuf::from(value),
                _ => {
                    let axis = match key.split_once('.') {
                        Some(("p1", f)) => Some((&mut raw1, f)),
                        Some(("p2", f)) => Some((&mut raw2, f)),
                        _ => None,
                    };
                    let (raw, field) =
                        axis.ok_or_else(|| ConfigError(format!("unknown key `{key}`")))?;
                    let slot = match field {
                        "a" => 0,
                        "b" => 1,
                        "c" => 2,
                        "d" => 3,
                        "p" => 4,
                        "q" => 5,
                        _ => return Err(ConfigError(format!("unknown key `{key}`"))),
                    };
                    raw[slot] = float()?;
                }
            }
        }

        let params = |r: [f64; 6], axis: &str| {
            OlctParams::new(r[0], r[1], r[2], r[3], r[4], r[5])
                .map_err(|e| ConfigError(format!("{axis}: {e}")))
        };
        cfg.p1 = params(raw1, "p1")?;
        cfg.p2 = params(raw2, "p2")?;
        cfg.window = match kind.as_str() {
            "gaussian" => WindowChoice::Gaussian { sigma1: sigma.0, sigma2: sigma.1 },
            "rect" => WindowChoice::Rect { a: rect_a },
            "file" => {
                if file_path.as_os_str().is_empty() {
                    return Err(ConfigError("window.kind = file needs window.path".into()));
                }
                WindowChoice::File { path: file_path }
            }
            other => return Err(ConfigError(format!("unknown window kind `{other}`"))),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.n1 < 2 || self.n2 < 2 {
            return Err(ConfigError("grid needs at least 2 samples per axis".into()));
        }
        if !(self.dt1 > 0.0) || !(self.dt2 > 0.0) {
            return Err(ConfigError("grid steps must be positive".into()));
        }
        if self.u_stride == 0 || self.n1 % self.u_stride != 0 || self.n2 % self.u_stride != 0 {
            return Err(ConfigError(format!(
                "u_stride {} must divide both grid sizes {}x{}",
                self.u_stride, self.n1, self.n2
            )));
        }
        match &self.window {
            WindowChoice::Gaussian { sigma1, sigma2 } => {
                if !(*sigma1 > 0.0) || !(*sigma2 > 0.0) {
                    return Err(ConfigError("window sigmas must be positive".into()));
                }
            }
            WindowChoice::Rect { a } => {
                if !(*a > 0.0) {
                    return Err(ConfigError("window half-width must be positive".into()));
                }
            }
            WindowChoice::File { .. } => {}
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let mut kv = |k: &str, v: String| {
            let _ = writeln!(s, "{k} = {v}");
        };
        kv("grid.n1", self.n1.to_string());
        kv("grid.n2", self.n2.to_string());
        kv("grid.dt1", self.dt1.to_string());
        kv("grid.dt2", self.dt2.to_string());
        for (tag, p) in [("p1", &self.p1), ("p2", &self.p2)] {
            kv(&format!("{tag}.a"), p.a.to_string());
            kv(&format!("{tag}.b"), p.b.to_string());
            kv(&format!("{tag}.c"), p.c.to_string());
            kv(&format!("{tag}.d"), p.d.to_string());
            kv(&format!("{tag}.p"), p.p.to_string());
            kv(&format!("{tag}.q"), p.q.to_string());
        }
        match &self.window {
            WindowChoice::Gaussian { sigma1, sigma2 } => {
                kv("window.kind", "gaussian".into());
                kv("window.sigma1", sigma1.to_string());
                kv("window.sigma2", sigma2.to_string());
            }
            WindowChoice::Rect { a } => {
                kv("window.kind", "rect".into());
                kv("window.a", a.to_string());
            }
            WindowChoice::File { path } => {
                kv("window.kind", "file".into());
                kv("window.path", path.display().to_string());
            }
        }
        kv("u_stride", self.u_stride.to_string());
        kv("seed", self.seed.to_string());
        kv("spectrograms", self.spectrograms.to_string());
        if let Some(r) = &self.reference {
            kv("reference", r.display().to_string());
        }
        s
    }

    pub fn load(path: &std::path::Path) -> Result<RunConfig, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError(format!("{}: {e}", path.display())))?;
        RunConfig::parse(&text)
    }

    pub fn params_summary(&self) -> String {
        let one = |p: &OlctParams| {
            format!("({}, {}, {}, {} | {}, {})", p.a, p.b, p.c, p.d, p.p, p.q)
        };
        format!("p1 {} p2 {}", one(&self.p1), one(&self.p2))
    }

    pub fn grid_summary(&self) -> String {
        format!("{}x{} @ ({}, {})", self.n1, self.n2, self.dt1, self.dt2)
    }
}
