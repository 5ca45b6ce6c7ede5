//! Built-in configurations.

use super::config::{parse_config, ConfigError};

#[derive(Clone, Copy, Debug)]
pub struct Preset {
    pub name: &'static str,
    pub text: &'static str,
}

macro_rules! preset {
    ($name:literal) => {
        Preset {
            name: $name,
            text: include_str!(concat!("../../presets/", $name, ".toml")),
        }
    };
}

pub const PRESETS: [Preset; 8] = [
    preset!("split-first"),
    preset!("split-first-lambda2"),
    preset!("cyclic-first"),
    preset!("split-second"),
    preset!("twisted-second"),
    preset!("split-h3"),
    preset!("cubic-l2"),
    preset!("division-octonion-h3"),
];

impl Preset {
    /// The one-line `description` of the configuration.
    pub fn description(&self) -> Result<String, ConfigError> {
        Ok(parse_config(self.text)?.description.unwrap_or_default())
    }
}

pub fn preset(name: &str) -> Option<Preset> {
    PRESETS.iter().copied().find(|p| p.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_parse_and_carry_their_names() {
        for p in PRESETS {
            let cfg = parse_config(p.text).unwrap();
            assert_eq!(cfg.name.as_deref(), Some(p.name));
            assert!(!p.description().unwrap().is_empty());
            super::super::build::build(&cfg, p.text).unwrap();
        }
        assert!(preset("nope").is_none());
    }
}
