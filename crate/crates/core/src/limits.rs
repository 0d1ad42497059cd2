//! Process-wide resource caps.
//!
//! Every exponential enumeration in the crate checks one of these before it
//! starts. The defaults can be raised or lowered at runtime (the CLI reads
//! `CSF_MAX_DEGREE` and `CSF_MAX_EDGES`).

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{CsfError, Result};

/// Largest degree for full set-partition enumeration (Bell(12) ~ 4.2M).
pub const DEFAULT_SET_PARTITION_DEGREE: usize = 12;
/// Largest degree handled by the NCSym oracle (Bell(8) = 4140 keys).
pub const DEFAULT_NCSYM_DEGREE: usize = 8;
/// Largest edge count for subgraph expansions and orientation enumeration.
pub const DEFAULT_MAX_EDGES: usize = 24;
/// Largest poset size for linear-extension enumeration.
pub const DEFAULT_POSET_SIZE: usize = 12;
/// Largest vertex count for unit interval graph enumeration (Catalan(16) ~ 35M).
pub const DEFAULT_UNIT_INTERVAL_N: usize = 16;
/// Vertex counts are stored in 64-bit masks.
pub const HARD_MAX_VERTICES: usize = 64;

static SET_PARTITION_DEGREE: AtomicUsize = AtomicUsize::new(DEFAULT_SET_PARTITION_DEGREE);
static NCSYM_DEGREE: AtomicUsize = AtomicUsize::new(DEFAULT_NCSYM_DEGREE);
static MAX_EDGES: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_EDGES);
static POSET_SIZE: AtomicUsize = AtomicUsize::new(DEFAULT_POSET_SIZE);
static UNIT_INTERVAL_N: AtomicUsize = AtomicUsize::new(DEFAULT_UNIT_INTERVAL_N);

pub fn set_partition_degree() -> usize {
    SET_PARTITION_DEGREE.load(Ordering::Relaxed)
}

pub fn ncsym_degree() -> usize {
    NCSYM_DEGREE.load(Ordering::Relaxed)
}

pub fn max_edges() -> usize {
    MAX_EDGES.load(Ordering::Relaxed)
}

pub fn poset_size() -> usize {
    POSET_SIZE.load(Ordering::Relaxed)
}

pub fn unit_interval_n() -> usize {
    UNIT_INTERVAL_N.load(Ordering::Relaxed)
}

pub fn set_set_partition_degree(v: usize) {
    SET_PARTITION_DEGREE.store(v, Ordering::Relaxed);
}

pub fn set_ncsym_degree(v: usize) {
    NCSYM_DEGREE.store(v, Ordering::Relaxed);
}

pub fn set_max_edges(v: usize) {
    MAX_EDGES.store(v, Ordering::Relaxed);
}

pub fn set_poset_size(v: usize) {
    POSET_SIZE.store(v, Ordering::Relaxed);
}

pub fn set_unit_interval_n(v: usize) {
    UNIT_INTERVAL_N.store(v, Ordering::Relaxed);
}

pub(crate) fn check(what: &'static str, requested: usize, cap: usize) -> Result<()> {
    if requested > cap {
        Err(CsfError::CapExceeded {
            what,
            requested,
            cap,
        })
    } else {
        Ok(())
    }
}
