//! Three-valued outcomes.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Proved,
    Refuted,
    Unknown,
}

impl Status {
    /// CLI exit code: 0 proved, 1 refuted, 2 unknown.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Proved => 0,
            Status::Refuted => 1,
            Status::Unknown => 2,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Proved => "proved",
            Status::Refuted => "refuted",
            Status::Unknown => "unknown",
        };
        f.write_str(s)
    }
}

/// What a search spent before giving up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Effort {
    pub trials: u64,
    pub seed: u64,
    pub note: String,
}

impl Effort {
    pub fn new(trials: u64, seed: u64, note: impl Into<String>) -> Self {
        Effort { trials, seed, note: note.into() }
    }
}

/// Outcome with a witness `P` when proved and a certificate `R` when refuted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<P, R = String> {
    Proved(P),
    Refuted(R),
    Unknown(Effort),
}

impl<P, R> Verdict<P, R> {
    pub fn status(&self) -> Status {
        match self {
            Verdict::Proved(_) => Status::Proved,
            Verdict::Refuted(_) => Status::Refuted,
            Verdict::Unknown(_) => Status::Unknown,
        }
    }

    pub fn is_proved(&self) -> bool {
        matches!(self, Verdict::Proved(_))
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Verdict::Refuted(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown(_))
    }

    pub fn witness(&self) -> Option<&P> {
        match self {
            Verdict::Proved(p) => Some(p),
            _ => None,
        }
    }

    pub fn certificate(&self) -> Option<&R> {
        match self {
            Verdict::Refuted(r) => Some(r),
            _ => None,
        }
    }

    pub fn map_proved<Q>(self, f: impl FnOnce(P) -> Q) -> Verdict<Q, R> {
        match self {
            Verdict::Proved(p) => Verdict::Proved(f(p)),
            Verdict::Refuted(r) => Verdict::Refuted(r),
            Verdict::Unknown(e) => Verdict::Unknown(e),
        }
    }
}

/// How a decision procedure may look for witnesses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Enumerate everything; finite fields only.
    Exhaustive,
    /// Seeded sampling.
    Randomized,
    /// Generic computation with indeterminates.
    Symbolic,
    /// Exhaustive when the base field is finite and the space is small, else randomized.
    #[default]
    Auto,
}

impl std::str::FromStr for Strategy {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "exhaustive" => Ok(Strategy::Exhaustive),
            "randomized" => Ok(Strategy::Randomized),
            "symbolic" => Ok(Strategy::Symbolic),
            "auto" => Ok(Strategy::Auto),
            _ => Err(crate::Error::Parse(format!("unknown strategy `{s}`"))),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Strategy::Exhaustive => "exhaustive",
            Strategy::Randomized => "randomized",
            Strategy::Symbolic => "symbolic",
            Strategy::Auto => "auto",
        };
        f.write_str(s)
    }
}

/// Strategy, seed and trial budget for a search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Search {
    pub strategy: Strategy,
    pub seed: u64,
    pub trials: u64,
}

impl Default for Search {
    fn default() -> Self {
        Search { strategy: Strategy::Auto, seed: 0, trials: 2000 }
    }
}

impl Search {
    pub fn new(strategy: Strategy, seed: u64, trials: u64) -> Self {
        Search { strategy, seed, trials }
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    /// A generator for one sub-search; `salt` separates independent uses of
    /// the same seed.
    pub fn rng(&self, salt: u64) -> rand_chacha::ChaCha8Rng {
        use rand::SeedableRng;
        rand_chacha::ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }

    pub fn effort(&self, trials: u64, note: impl Into<String>) -> Effort {
        Effort::new(trials, self.seed, note)
    }

    /// Whether to enumerate a space of `size` candidates.
    pub fn enumerate(&self, size: Option<u128>) -> bool {
        match (self.strategy, size) {
            (Strategy::Exhaustive, Some(_)) => true,
            (Strategy::Auto, Some(s)) => s <= self.trials.max(1 << 16) as u128,
            _ => false,
        }
    }
}
