//! Size cap for exhaustive algorithms.
//!
//! The default cap is 5000 elements. `ISQ_MAX_ELEMENTS` overrides it, and a
//! process-wide override set through [`set_max_elements`] (the CLI's
//! `--max-size`) takes precedence over both.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{IsqError, Result};

pub const DEFAULT_MAX_ELEMENTS: usize = 5000;
/// Cap for the congruence-lattice enumeration.
pub const MAX_CONGRUENCE_ENUMERATION: usize = 200;

static OVERRIDE: AtomicUsize = AtomicUsize::new(0);

pub fn set_max_elements(limit: Option<usize>) {
    OVERRIDE.store(limit.unwrap_or(0), Ordering::Relaxed);
}

pub fn max_elements() -> usize {
    match OVERRIDE.load(Ordering::Relaxed) {
        0 => std::env::var("ISQ_MAX_ELEMENTS")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_ELEMENTS),
        n => n,
    }
}

pub fn ensure_within(size: usize) -> Result<()> {
    ensure_within_limit(size, max_elements())
}

pub fn ensure_within_limit(size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(IsqError::SizeLimit { size, limit })
    } else {
        Ok(())
    }
}
