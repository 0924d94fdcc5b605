//! Work limits for the exhaustive searches.

/// Marker returned when a search gave up before reaching a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("search budget exhausted before a verdict was reached")]
pub struct Undecided;

/// Polled periodically by long-running searches.
///
/// Once `exhausted` returns true the search unwinds and reports [`Undecided`].
/// Implementations should be cheap; solvers poll every few hundred nodes.
pub trait Budget {
    fn exhausted(&mut self) -> bool;
}

/// Never runs out.
#[derive(Debug, Clone, Copy, Default)]
pub struct Unlimited;

impl Budget for Unlimited {
    fn exhausted(&mut self) -> bool {
        false
    }
}

/// Runs out after a fixed number of polls.
#[derive(Debug, Clone, Copy)]
pub struct NodeLimit {
    remaining: u64,
}

impl NodeLimit {
    pub fn new(polls: u64) -> Self {
        Self { remaining: polls }
    }
}

impl Budget for NodeLimit {
    fn exhausted(&mut self) -> bool {
        if self.remaining == 0 {
            return true;
        }
        self.remaining -= 1;
        false
    }
}

impl<B: Budget + ?Sized> Budget for &mut B {
    fn exhausted(&mut self) -> bool {
        (**self).exhausted()
    }
}

/// Counts search nodes and polls the budget every `POLL_INTERVAL` of them.
pub(crate) struct Meter<'a> {
    budget: &'a mut dyn Budget,
    ticks: u32,
}

const POLL_INTERVAL: u32 = 256;

impl<'a> Meter<'a> {
    pub(crate) fn new(budget: &'a mut dyn Budget) -> Self {
        // The first tick polls, so an already-exhausted budget stops at once.
        Self {
            budget,
            ticks: POLL_INTERVAL - 1,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), Undecided> {
        self.ticks += 1;
        if self.ticks >= POLL_INTERVAL {
            self.ticks = 0;
            if self.budget.exhausted() {
                return Err(Undecided);
            }
        }
        Ok(())
    }
}
