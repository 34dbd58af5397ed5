//! Hard resource limits shared by the exponential counters.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Budget {
    /// Largest edge count for which a counter may enumerate all `2^m` subsets.
    pub max_subset_bits: usize,
    /// Largest number of live frontier states.
    pub max_states: usize,
    /// Largest number of deletion–contraction calls.
    pub max_calls: usize,
    pub deadline: Option<Instant>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_subset_bits: 30,
            max_states: 20_000_000,
            max_calls: 50_000_000,
            deadline: None,
        }
    }
}

impl Budget {
    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    pub fn with_subset_bits(mut self, bits: usize) -> Self {
        self.max_subset_bits = bits;
        self
    }

    pub fn with_max_states(mut self, states: usize) -> Self {
        self.max_states = states;
        self
    }

    pub(crate) fn check_subset_bits(&self, what: &'static str, m: usize, hard_cap: usize) -> Result<()> {
        let limit = self.max_subset_bits.min(hard_cap);
        if m > limit {
            return Err(Error::Budget { what, size: m, limit });
        }
        Ok(())
    }

    pub(crate) fn check_time(&self, what: &'static str) -> Result<()> {
        match self.deadline {
            Some(t) if Instant::now() > t => Err(Error::Timeout(what)),
            _ => Ok(()),
        }
    }
}
