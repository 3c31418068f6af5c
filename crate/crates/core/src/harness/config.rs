//! Experiment configuration.
//!
//! ```toml
//! domain = "scrabble"            # or "cardonomicon"; required
//! profile = "full"               # or "desk": presets / 10, 30 games
//! games_per_pairing = 100
//! master_seed = 0
//! exploration_c = 1.4142135623730951
//! depth_cap = 300
//! pairings = [["weak", "strong"], [50, 1250]]   # default: all 9 preset pairs
//! dictionary = "words.txt"       # scrabble, optional
//! target_score = 150             # scrabble
//! cardset = "cards.toml"         # cardonomicon, optional
//! starting_hand = 4              # cardonomicon
//! turn_cap = 100                 # cardonomicon
//!
//! [presets]                      # override preset budgets
//! weak = 50
//! ```

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mcts::SearchBudget;

pub const DEFAULT_GAMES_PER_PAIRING: u32 = 100;
pub const DESK_GAMES_PER_PAIRING: u32 = 30;
pub const DESK_BUDGET_DIVISOR: u32 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    Scrabble,
    Cardonomicon,
}

impl Domain {
    pub fn name(self) -> &'static str {
        match self {
            Domain::Scrabble => "scrabble",
            Domain::Cardonomicon => "cardonomicon",
        }
    }

    /// Weak, moderate and strong rollout budgets at full scale.
    pub fn default_presets(self) -> Presets {
        match self {
            Domain::Scrabble => Presets { weak: 50, moderate: 650, strong: 1250 },
            Domain::Cardonomicon => Presets { weak: 100, moderate: 2500, strong: 5000 },
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Domain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "scrabble" => Ok(Domain::Scrabble),
            "cardonomicon" => Ok(Domain::Cardonomicon),
            _ => Err(Error::input(format!("unknown domain {s:?} (expected scrabble or cardonomicon)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Profile {
    #[default]
    Full,
    /// Preset budgets divided by 10 and 30 games per pairing.
    Desk,
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Profile::Full),
            "desk" => Ok(Profile::Desk),
            _ => Err(Error::input(format!("unknown profile {s:?} (expected full or desk)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presets {
    pub weak: u32,
    pub moderate: u32,
    pub strong: u32,
}

impl Presets {
    pub const NAMES: [&'static str; 3] = ["weak", "moderate", "strong"];

    pub fn get(&self, name: &str) -> Result<u32> {
        match name {
            "weak" => Ok(self.weak),
            "moderate" => Ok(self.moderate),
            "strong" => Ok(self.strong),
            _ => Err(Error::input(format!(
                "unknown skill preset {name:?} (expected weak, moderate, strong or a rollout count)"
            ))),
        }
    }

    /// Preset name for a budget, if one matches.
    pub fn name_of(&self, rollouts: u32) -> Option<&'static str> {
        Presets::NAMES.into_iter().find(|n| self.get(n).ok() == Some(rollouts))
    }

    fn scaled_down(self, divisor: u32) -> Self {
        let f = |b: u32| (b / divisor).max(1);
        Presets { weak: f(self.weak), moderate: f(self.moderate), strong: f(self.strong) }
    }
}

/// A budget given by preset name or as a rollout count.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum BudgetSpec {
    Rollouts(i64),
    Preset(String),
}

impl BudgetSpec {
    pub fn resolve(&self, presets: &Presets) -> Result<u32> {
        match self {
            BudgetSpec::Rollouts(n) if *n >= 1 && *n <= u32::MAX as i64 => Ok(*n as u32),
            BudgetSpec::Rollouts(n) => Err(Error::input(format!("rollouts must be >= 1, got {n}"))),
            BudgetSpec::Preset(name) => presets.get(name),
        }
    }
}

impl FromStr for BudgetSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.parse::<i64>() {
            Ok(n) => BudgetSpec::Rollouts(n),
            Err(_) => BudgetSpec::Preset(s.to_owned()),
        })
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresetOverrides {
    weak: Option<i64>,
    moderate: Option<i64>,
    strong: Option<i64>,
}

/// The file as written, before defaults.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfig {
    domain: Option<String>,
    profile: Option<String>,
    games_per_pairing: Option<i64>,
    master_seed: Option<u64>,
    exploration_c: Option<f64>,
    depth_cap: Option<i64>,
    pairings: Option<Vec<(BudgetSpec, BudgetSpec)>>,
    presets: Option<PresetOverrides>,
    dictionary: Option<PathBuf>,
    target_score: Option<i64>,
    cardset: Option<PathBuf>,
    starting_hand: Option<i64>,
    turn_cap: Option<i64>,
}

/// Command-line values that take precedence over the file.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub domain: Option<Domain>,
    pub profile: Option<Profile>,
    pub master_seed: Option<u64>,
    pub games_per_pairing: Option<i64>,
    pub pairing: Option<(BudgetSpec, BudgetSpec)>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub domain: Domain,
    pub profile: Profile,
    pub presets: Presets,
    /// Ordered `(player 0, player 1)` rollout budgets.
    pub pairings: Vec<[u32; 2]>,
    pub games_per_pairing: u32,
    pub master_seed: u64,
    pub exploration_c: f64,
    pub depth_cap: u32,
    pub dictionary: Option<PathBuf>,
    pub target_score: u32,
    pub cardset: Option<PathBuf>,
    pub starting_hand: usize,
    pub turn_cap: u32,
}

fn positive(name: &str, v: i64) -> Result<u32> {
    if v >= 1 && v <= u32::MAX as i64 {
        Ok(v as u32)
    } else {
        Err(Error::input(format!("{name} must be >= 1, got {v}")))
    }
}

impl ExperimentConfig {
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_with(text, &Overrides::default())
    }

    pub fn parse_with(text: &str, overrides: &Overrides) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| Error::input(format!("config: {e}")))?;
        Self::from_raw(raw, overrides)
    }

    /// Reads a config file; relative resource paths are taken from the file's directory.
    pub fn load(path: &Path, overrides: &Overrides) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::input(format!("cannot read config {}: {e}", path.display())))?;
        let mut cfg = Self::parse_with(&text, overrides)?;
        let base = path.parent().unwrap_or(Path::new(""));
        for p in [&mut cfg.dictionary, &mut cfg.cardset].into_iter().flatten() {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        }
        Ok(cfg)
    }

    /// Defaults only, for a domain given on the command line.
    pub fn defaults(overrides: &Overrides) -> Result<Self> {
        Self::from_raw(RawConfig::default(), overrides)
    }

    pub fn from_raw(raw: RawConfig, ov: &Overrides) -> Result<Self> {
        let domain = match (ov.domain, &raw.domain) {
            (Some(d), _) => d,
            (None, Some(s)) => s.parse()?,
            (None, None) => return Err(Error::input("config is missing `domain`")),
        };
        let profile = match (ov.profile, &raw.profile) {
            (Some(p), _) => p,
            (None, Some(s)) => s.parse()?,
            (None, None) => Profile::Full,
        };
        let mut presets = domain.default_presets();
        if profile == Profile::Desk {
            presets = presets.scaled_down(DESK_BUDGET_DIVISOR);
        }
        if let Some(o) = raw.presets {
            for (slot, v, name) in [
                (&mut presets.weak, o.weak, "presets.weak"),
                (&mut presets.moderate, o.moderate, "presets.moderate"),
                (&mut presets.strong, o.strong, "presets.strong"),
            ] {
                if let Some(v) = v {
                    *slot = positive(name, v)?;
                }
            }
        }
        let pairings = match (&ov.pairing, raw.pairings) {
            (Some((a, b)), _) => vec![[a.resolve(&presets)?, b.resolve(&presets)?]],
            (None, Some(list)) => {
                if list.is_empty() {
                    return Err(Error::input("`pairings` is empty"));
                }
                list.iter()
                    .map(|(a, b)| Ok([a.resolve(&presets)?, b.resolve(&presets)?]))
                    .collect::<Result<_>>()?
            }
            (None, None) => {
                let all = [presets.weak, presets.moderate, presets.strong];
                all.iter().flat_map(|&a| all.iter().map(move |&b| [a, b])).collect()
            }
        };
        let games_default = match profile {
            Profile::Full => DEFAULT_GAMES_PER_PAIRING,
            Profile::Desk => DESK_GAMES_PER_PAIRING,
        };
        let games_per_pairing = match ov.games_per_pairing.or(raw.games_per_pairing) {
            Some(g) => positive("games_per_pairing", g)?,
            None => games_default,
        };
        let exploration_c = raw.exploration_c.unwrap_or(std::f64::consts::SQRT_2);
        if !exploration_c.is_finite() || exploration_c < 0.0 {
            return Err(Error::input(format!("exploration_c must be finite and >= 0, got {exploration_c}")));
        }
        if domain == Domain::Scrabble && (raw.cardset.is_some() || raw.starting_hand.is_some() || raw.turn_cap.is_some()) {
            return Err(Error::input("cardset, starting_hand and turn_cap only apply to cardonomicon"));
        }
        if domain == Domain::Cardonomicon && (raw.dictionary.is_some() || raw.target_score.is_some()) {
            return Err(Error::input("dictionary and target_score only apply to scrabble"));
        }
        let starting_hand = match raw.starting_hand {
            Some(h) if (0..=20).contains(&h) => h as usize,
            Some(h) => return Err(Error::input(format!("starting_hand must be in 0..=20, got {h}"))),
            None => crate::cardonomicon::DEFAULT_STARTING_HAND,
        };
        Ok(ExperimentConfig {
            domain,
            profile,
            presets,
            pairings,
            games_per_pairing,
            master_seed: ov.master_seed.or(raw.master_seed).unwrap_or(0),
            exploration_c,
            depth_cap: raw.depth_cap.map(|d| positive("depth_cap", d)).transpose()?.unwrap_or(SearchBudget::DEFAULT_DEPTH_CAP),
            dictionary: raw.dictionary,
            target_score: raw
                .target_score
                .map(|t| positive("target_score", t))
                .transpose()?
                .unwrap_or(crate::scrabble::DEFAULT_TARGET_SCORE),
            cardset: raw.cardset,
            starting_hand,
            turn_cap: raw
                .turn_cap
                .map(|t| positive("turn_cap", t))
                .transpose()?
                .unwrap_or(crate::cardonomicon::DEFAULT_TURN_CAP),
        })
    }

    pub fn total_games(&self) -> u64 {
        self.pairings.len() as u64 * self.games_per_pairing as u64
    }
}
