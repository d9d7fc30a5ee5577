//! Resource caps shared by every enumeration in the crate.

use std::sync::OnceLock;

/// Environment variable overriding every cap at once.
pub const CAP_ENV: &str = "GARSIDEKIT_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Members of a single braid-move orbit.
    pub orbit: usize,
    /// Elements of an enumerated finite Coxeter group.
    pub group_order: usize,
    /// Iterations of the swap map before giving up.
    pub swap_iterations: usize,
    /// Elements visited by a ball enumeration.
    pub ball: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            orbit: 1_000_000,
            group_order: 100_000,
            swap_iterations: 100_000,
            ball: 2_000_000,
        }
    }
}

impl Limits {
    /// Defaults, or the value of `GARSIDEKIT_CAP` applied to every field.
    pub fn from_env() -> Self {
        match std::env::var(CAP_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
            Some(cap) => Limits { orbit: cap, group_order: cap, swap_iterations: cap, ball: cap },
            None => Limits::default(),
        }
    }

    /// Process-wide limits, read once.
    pub fn global() -> Limits {
        static GLOBAL: OnceLock<Limits> = OnceLock::new();
        *GLOBAL.get_or_init(Limits::from_env)
    }
}
