use std::path::PathBuf;
use std::process::ExitCode;

use albert_core::harness::{
    self, build, parse_config, preset, suites, ConfigError, PathKindName, RunOverrides, SuiteName, PRESETS,
};
use albert_core::paths::endpoint_certificate;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "albert", version, about = "Exact checks for cubic norm structures and their structure groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run check suites against a configuration.
    Verify {
        /// TOML configuration file.
        config: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        samples: Option<usize>,
        /// Restrict to the named suites; repeatable.
        #[arg(long = "suite", value_name = "NAME")]
        suites: Vec<String>,
        /// Use a built-in configuration instead of a file.
        #[arg(long, conflicts_with = "config")]
        preset: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// List the built-in configurations.
    Presets {
        #[arg(long)]
        json: bool,
        /// Print the configuration text of one preset.
        #[arg(long, value_name = "NAME")]
        show: Option<String>,
    },
    /// Build a rational path and write its certificate.
    Path {
        config: Option<PathBuf>,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, conflicts_with = "config")]
        preset: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    UPath,
    Hermitian,
    Normal,
    IsometryCorrection,
}

impl From<Kind> for PathKindName {
    fn from(k: Kind) -> Self {
        match k {
            Kind::UPath => PathKindName::UPath,
            Kind::Hermitian => PathKindName::Hermitian,
            Kind::Normal => PathKindName::Normal,
            Kind::IsometryCorrection => PathKindName::IsometryCorrection,
        }
    }
}

const PASS: u8 = 0;
const CHECK_FAILED: u8 = 1;
const USAGE: u8 = 2;

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE)
}

fn config_text(config: Option<PathBuf>, preset_name: Option<String>) -> Result<(String, String), String> {
    match (config, preset_name) {
        (Some(path), None) => std::fs::read_to_string(&path)
            .map(|t| (path.display().to_string(), t))
            .map_err(|e| format!("cannot read {}: {e}", path.display())),
        (None, Some(name)) => preset(&name)
            .map(|p| (name.clone(), p.text.to_string()))
            .ok_or_else(|| format!("unknown preset `{name}`; see `albert presets`")),
        _ => Err("give a configuration file or --preset NAME".into()),
    }
}

fn config_error(source: &str, e: ConfigError) -> ExitCode {
    usage(format!("{source}: {e}"))
}

fn verify(
    config: Option<PathBuf>,
    seed: Option<u64>,
    samples: Option<usize>,
    suite_names: Vec<String>,
    preset_name: Option<String>,
    json: bool,
) -> ExitCode {
    let (source, text) = match config_text(config, preset_name) {
        Ok(v) => v,
        Err(e) => return usage(e),
    };
    let mut overrides = RunOverrides {
        seed,
        samples,
        suites: Vec::new(),
    };
    for s in &suite_names {
        match SuiteName::parse(s) {
            Some(n) => overrides.suites.push(n),
            None => {
                let known: Vec<&str> = SuiteName::ALL.iter().map(SuiteName::as_str).collect();
                return usage(format!("unknown suite `{s}`; known: {}", known.join(", ")));
            }
        }
    }
    if overrides.samples == Some(0) {
        return usage("--samples must be positive");
    }
    let report = match harness::run(&text, &overrides) {
        Ok(r) => r,
        Err(e) => return config_error(&source, e),
    };
    if json {
        println!("{}", report.to_json());
    } else {
        println!("{report}");
    }
    ExitCode::from(if report.passed { PASS } else { CHECK_FAILED })
}

#[derive(serde::Serialize)]
struct PresetEntry {
    name: &'static str,
    description: String,
}

fn presets(json: bool, show: Option<String>) -> ExitCode {
    if let Some(name) = show {
        return match preset(&name) {
            Some(p) => {
                print!("{}", p.text);
                ExitCode::from(PASS)
            }
            None => usage(format!("unknown preset `{name}`")),
        };
    }
    let mut entries = Vec::new();
    for p in PRESETS {
        match p.description() {
            Ok(description) => entries.push(PresetEntry {
                name: p.name,
                description,
            }),
            Err(e) => return config_error(p.name, e),
        }
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&entries).expect("presets serialize"));
    } else {
        let width = entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
        for e in &entries {
            println!("{:<width$}  {}", e.name, e.description);
        }
    }
    ExitCode::from(PASS)
}

fn path(config: Option<PathBuf>, kind: Kind, out: PathBuf, preset_name: Option<String>) -> ExitCode {
    let (source, text) = match config_text(config, preset_name) {
        Ok(v) => v,
        Err(e) => return usage(e),
    };
    let cfg = match parse_config(&text) {
        Ok(c) => c,
        Err(e) => return config_error(&source, e),
    };
    let c = match build(&cfg, &text) {
        Ok(c) => c,
        Err(e) => return config_error(&source, e),
    };
    let settings = suites::RunSettings::new(cfg.run.seed, cfg.run.samples);
    let p = match suites::build_path(&c, kind.into(), &cfg.path, &text, settings.certify) {
        Ok(p) => p,
        Err(e) => return config_error(&source, e),
    };
    let ts = match suites::sample_t(&cfg.path, &text) {
        Ok(t) => t,
        Err(e) => return config_error(&source, e),
    };
    let cert = endpoint_certificate(&p, &ts);
    let body = serde_json::to_string_pretty(&cert).expect("certificate serializes");
    if let Err(e) = std::fs::write(&out, body + "\n") {
        return usage(format!("cannot write {}: {e}", out.display()));
    }
    let poles = cert.samples.iter().filter(|s| s.outcome == "pole").count();
    println!(
        "{} certificate for {}: {} ({} interior samples, {poles} at poles) -> {}",
        cert.kind,
        cert.structure,
        if cert.passed { "pass" } else { "FAIL" },
        cert.samples.len(),
        out.display()
    );
    if let (Some(poly), Some(roots)) = (&cert.pole_polynomial, &cert.pole_roots) {
        println!("  pole polynomial {poly}, rational roots [{}]", roots.join(", "));
    }
    if let Some(w) = [&cert.start, &cert.end].iter().find_map(|e| e.failure.clone()) {
        println!("  first failure: {w}");
    }
    ExitCode::from(if cert.passed { PASS } else { CHECK_FAILED })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            config,
            seed,
            samples,
            suites,
            preset,
            json,
        } => verify(config, seed, samples, suites, preset, json),
        Command::Presets { json, show } => presets(json, show),
        Command::Path {
            config,
            kind,
            out,
            preset,
        } => path(config, kind, out, preset),
    }
}
