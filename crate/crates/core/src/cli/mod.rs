//! Command-line front end. Every artifact echoes its full configuration so a
//! run can be replayed byte for byte.

mod args;
mod render;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::Path;

use clap::Parser;
use serde::{Deserialize, Serialize};
use serde_json::json;

pub use args::{
    BoundsArgs, CheckNetArgs, CheckSeqArgs, Cli, Command, DiscrepancyArgs, GenArgs, HaltonArgs,
    Lemma1Args, OutputMode,
};

use crate::algebra::DigitBijection;
use crate::error::{Error, Result};
use crate::function_field::{FunctionFieldModel, PlaceSpec};
use crate::sequence::{halton_classical, Construction, SequenceConfig};
use crate::verify;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// The echoed configuration of a run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub version: String,
    pub jobs: Option<usize>,
    #[serde(flatten)]
    pub command: Command,
}

impl RunConfig {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }

    /// Reads a config from JSON, or from the `# config:` header of an output file.
    pub fn from_text(text: &str) -> Result<RunConfig> {
        let body = text
            .lines()
            .find_map(|l| l.strip_prefix("# config: "))
            .map(str::to_string)
            .unwrap_or_else(|| text.to_string());
        let value: serde_json::Value =
            serde_json::from_str(&body).map_err(|e| Error::Parse(format!("config: {e}")))?;
        // JSON artifacts carry the config under "config"
        let value = match value.get("config") {
            Some(inner) => inner.clone(),
            None => value,
        };
        serde_json::from_value(value).map_err(|e| Error::Parse(format!("config: {e}")))
    }
}

/// Outcome of executing a command: the artifact text and whether checks passed.
struct Outcome {
    text: String,
    pass: bool,
}

/// Parses `argv`, executes, writes artifacts, and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let _ = e.print();
            return code;
        }
    };
    let config = match cli.command {
        Command::Replay { ref config } => match fs::read_to_string(config)
            .map_err(|e| Error::Parse(format!("{}: {e}", config.display())))
            .and_then(|t| RunConfig::from_text(&t))
        {
            Ok(mut c) => {
                if cli.jobs.is_some() {
                    c.jobs = cli.jobs;
                }
                c
            }
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        },
        command => RunConfig {
            version: VERSION.to_string(),
            jobs: cli.jobs,
            command,
        },
    };
    match run_config(&config, cli.out.as_deref()) {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_FAIL,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

/// Executes a config and writes its artifact to `out` (or stdout). Returns the pass flag.
pub fn run_config(config: &RunConfig, out: Option<&Path>) -> Result<bool> {
    let outcome = match config.jobs {
        Some(0) => return Err(Error::InvalidParameter("--jobs must be at least 1".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?
            .install(|| execute(config))?,
        None => execute(config)?,
    };
    let io_err = |e: std::io::Error| Error::InvalidParameter(format!("write failed: {e}"));
    match out {
        Some(path) => {
            fs::write(path, &outcome.text).map_err(io_err)?;
            let mut echo = path.as_os_str().to_owned();
            echo.push(".config.json");
            fs::write(echo, config.to_json() + "\n").map_err(io_err)?;
        }
        None => std::io::stdout()
            .write_all(outcome.text.as_bytes())
            .map_err(io_err)?,
    }
    Ok(outcome.pass)
}

fn csv_header(config: &RunConfig) -> String {
    format!("# ffhalton {VERSION}\n# config: {}\n", config.to_json())
}

fn json_artifact(config: &RunConfig, result: serde_json::Value) -> String {
    let doc = json!({ "version": VERSION, "config": config, "result": result });
    serde_json::to_string_pretty(&doc).expect("json") + "\n"
}

pub fn parse_range<T: std::str::FromStr>(s: &str) -> Result<RangeInclusive<T>> {
    let err = || Error::Parse(format!("bad range {s:?}, expected lo..hi"));
    let num = |t: &str| t.trim().parse::<T>().map_err(|_| err());
    match s.split_once("..") {
        Some((lo, hi)) => Ok(num(lo)?..=num(hi)?),
        None => {
            let v = num(s)?;
            let w = num(s)?;
            Ok(v..=w)
        }
    }
}

pub fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<T>()
                .map_err(|_| Error::Parse(format!("bad list {s:?}")))
        })
        .collect()
}

fn construction(model: &str, places: &str) -> Result<Construction> {
    let model = FunctionFieldModel::parse(model)?;
    let places = model.places(&PlaceSpec::parse(places)?)?;
    Construction::new(model, places)
}

fn execute(config: &RunConfig) -> Result<Outcome> {
    match &config.command {
        Command::Gen(a) => {
            let mut c = construction(&a.model, &a.places)?;
            if let Some(eta) = &a.eta {
                c = c.with_eta(DigitBijection::from_table_fixing_zero(parse_list(eta)?)?)?;
            }
            let cfg = SequenceConfig::new(c, a.m, a.start, a.count)?;
            let points = cfg.generate()?;
            let text = match a.mode {
                OutputMode::Json => json_artifact(config, render::points_json(a.start, &points)),
                mode => {
                    csv_header(config) + &render::points_csv(a.start, &points, mode, a.decimals)
                }
            };
            Ok(Outcome { text, pass: true })
        }
        Command::Halton(a) => {
            let bases: Vec<u32> = parse_list(&a.bases)?;
            let points = (a.start..a.start.saturating_add(a.count))
                .map(|n| halton_classical(&bases, n))
                .collect::<Result<Vec<_>>>()?;
            let text = match a.mode {
                OutputMode::Json => json_artifact(config, render::points_json(a.start, &points)),
                mode => {
                    csv_header(config) + &render::points_csv(a.start, &points, mode, a.decimals)
                }
            };
            Ok(Outcome { text, pass: true })
        }
        Command::CheckNet(a) => {
            let (points, b, default_u, default_e) = match &a.input {
                Some(path) => {
                    let base = a
                        .base
                        .ok_or_else(|| Error::InvalidParameter("--input needs --base".into()))?;
                    let text = fs::read_to_string(path)
                        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                    let points = render::parse_points_csv(&text, base)?;
                    let s = points.first().map(|p| p.dimension()).unwrap_or(1);
                    (points, base, 0, vec![1; s])
                }
                None => {
                    let c = construction(
                        a.model.as_deref().unwrap_or_default(),
                        a.places.as_deref().unwrap_or_default(),
                    )?;
                    let b = c.base();
                    let size = (b as u64)
                        .checked_pow(a.m as u32)
                        .ok_or(Error::EnumerationCap(
                            (b as u128).saturating_pow(a.m as u32),
                        ))?;
                    let start =
                        a.k.checked_mul(size)
                            .ok_or(Error::EnumerationCap(a.k as u128 * size as u128))?;
                    if size as u128 > verify::MAX_NET_POINTS {
                        return Err(Error::EnumerationCap(size as u128));
                    }
                    (c.points(start, size, a.m)?, b, c.genus(), c.degrees())
                }
            };
            let e = match &a.e {
                Some(e) => parse_list(e)?,
                None => default_e,
            };
            let mut report = verify::check_net(&points, b, a.m, a.u.unwrap_or(default_u), &e)?;
            if a.minimal_u {
                report.minimal_u = Some(verify::minimal_u(&points, b, a.m, &e)?);
            }
            let pass = report.pass;
            Ok(Outcome {
                text: json_artifact(config, json!(report)),
                pass,
            })
        }
        Command::CheckSeq(a) => {
            let c = construction(&a.model, &a.places)?;
            let e = match &a.e {
                Some(e) => parse_list(e)?,
                None => c.degrees(),
            };
            let u = a.u.unwrap_or(c.genus());
            let report = verify::check_sequence(&c, parse_range(&a.m)?, parse_range(&a.k)?, u, &e)?;
            let pass = report.pass;
            Ok(Outcome {
                text: json_artifact(config, json!(report)),
                pass,
            })
        }
        Command::Lemma1(a) => {
            let model = FunctionFieldModel::parse(&a.model)?;
            let mut reports = Vec::new();
            for m in parse_range::<usize>(&a.m)? {
                for k in parse_range::<u64>(&a.k)? {
                    reports.push(verify::lemma1_check(&model, k, m)?);
                }
            }
            let pass = reports.iter().all(|r| r.holds);
            Ok(Outcome {
                text: json_artifact(config, json!({ "pass": pass, "blocks": reports })),
                pass,
            })
        }
        Command::Discrepancy(a) => {
            let c = construction(&a.model, &a.places)?;
            let points = SequenceConfig::new(c, a.m, a.start, a.count)?.generate()?;
            let d = verify::star_discrepancy_exact(&points)?;
            let approx = num_traits::ToPrimitive::to_f64(&d).unwrap_or(f64::NAN);
            let result =
                json!({ "n": a.count, "star_discrepancy": d.to_string(), "approx": approx });
            Ok(Outcome {
                text: json_artifact(config, result),
                pass: true,
            })
        }
        Command::Bounds(a) => {
            let e: Vec<usize> = parse_list(&a.e)?;
            let report = verify::bound_comparison(a.q, a.s.unwrap_or(e.len()), a.g, &e)?;
            Ok(Outcome {
                text: json_artifact(config, json!(report)),
                pass: true,
            })
        }
        Command::Replay { .. } => Err(Error::InvalidParameter("nested replay".into())),
    }
}
