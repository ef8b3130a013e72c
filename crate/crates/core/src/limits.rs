//! Global size caps.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Environment variable that overrides [`DEFAULT_MAX_ORDER`].
pub const MAX_ORDER_ENV: &str = "BRACE_FORGE_MAX_ORDER";

pub const DEFAULT_MAX_ORDER: usize = 4096;

/// Tables store indices as `u16`.
pub const HARD_MAX_ORDER: usize = 1 << 16;

/// Default cap for exhaustive ideal enumeration.
pub const DEFAULT_ENUM_CAP: usize = 128;

/// Largest carrier a brace may have, read once from the environment.
pub fn max_order() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(MAX_ORDER_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map(|v| v.clamp(1, HARD_MAX_ORDER))
            .unwrap_or(DEFAULT_MAX_ORDER)
    })
}

pub(crate) fn check_order(order: usize) -> Result<()> {
    let cap = max_order();
    if order == 0 || order > cap {
        return Err(Error::SizeCap { order, cap });
    }
    Ok(())
}
