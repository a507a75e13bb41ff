//! Benchmark-only crate; see `benches/cones.rs`.
//!
//! Shared helpers for the benchmark targets.

use k3cone_core::cone::Rank2Config;
use k3cone_core::preset::resolve;

pub fn preset_config(name: &str) -> Rank2Config {
    resolve(name)
        .expect("known preset")
        .rank2_config()
        .expect("rank-2 preset")
        .clone()
}
