//! Configuration-driven verification runs.

pub mod build;
pub mod config;
pub mod presets;
pub mod report;
pub mod suites;

pub use build::{build, Construction};
pub use config::{parse_config, AlgebraSpecConfig, ConfigError, PathKindName, SuiteName};
pub use presets::{preset, Preset, PRESETS};
pub use report::RunReport;
pub use suites::{RunSettings, SuiteRecord};

/// Command-line overrides of the `[run]` block.
#[derive(Clone, Debug, Default)]
pub struct RunOverrides {
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub suites: Vec<SuiteName>,
}

pub fn load(text: &str) -> Result<(AlgebraSpecConfig, Construction), ConfigError> {
    let cfg = parse_config(text)?;
    let c = build(&cfg, text)?;
    Ok((cfg, c))
}

pub fn run(text: &str, overrides: &RunOverrides) -> Result<RunReport, ConfigError> {
    let (cfg, c) = load(text)?;
    let seed = overrides.seed.unwrap_or(cfg.run.seed);
    let samples = overrides.samples.unwrap_or(cfg.run.samples);
    let mut names = if !overrides.suites.is_empty() {
        overrides.suites.clone()
    } else if !cfg.run.suites.is_empty() {
        cfg.run.suites.clone()
    } else {
        suites::default_suites(&c)
    };
    names.sort();
    names.dedup();
    for n in &names {
        if !suites::applicable(&c, *n) {
            return Err(ConfigError {
                line: None,
                message: format!("suite `{n}` does not apply to a {} construction", c.kind_name()),
            });
        }
    }
    let settings = RunSettings::new(seed, samples);
    let records = names
        .iter()
        .map(|n| suites::run_suite(&c, *n, &settings, &cfg.path, text))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RunReport {
        config: cfg.name.clone().unwrap_or_else(|| "unnamed".into()),
        construction: c.kind_name().into(),
        structure: c.structure().id(),
        seed,
        samples,
        passed: records.iter().all(SuiteRecord::ok),
        suites: records,
    })
}
