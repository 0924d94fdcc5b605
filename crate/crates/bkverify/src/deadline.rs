//! Wall-clock budgets.

use std::time::{Duration, Instant};

use bkverify_core::Budget;

/// Exhausted once the wall clock passes a fixed instant.
#[derive(Debug, Clone, Copy)]
pub struct Deadline {
    end: Instant,
}

impl Deadline {
    pub fn after(limit: Duration) -> Self {
        Self {
            end: Instant::now() + limit,
        }
    }
}

impl Budget for Deadline {
    fn exhausted(&mut self) -> bool {
        Instant::now() >= self.end
    }
}
