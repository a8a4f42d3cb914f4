use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Default cap on reduction steps per Gröbner basis computation.
pub const DEFAULT_MAX_REDUCTIONS: u64 = 10_000_000;

/// Effort limits for Gröbner computations. Exceeding either limit aborts with
/// [`Error::BudgetExceeded`] or [`Error::DeadlineExceeded`].
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    /// Maximum reduction steps within a single basis computation.
    pub max_reductions: u64,
    pub deadline: Option<Instant>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_reductions: DEFAULT_MAX_REDUCTIONS, deadline: None }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { max_reductions: u64::MAX, deadline: None }
    }

    pub fn with_max_reductions(mut self, n: u64) -> Self {
        self.max_reductions = n;
        self
    }

    /// Deadline `timeout` from now.
    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.deadline = Some(Instant::now() + timeout);
        self
    }

    pub fn check_deadline(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(Error::DeadlineExceeded),
            _ => Ok(()),
        }
    }

    pub(crate) fn meter(&self) -> Meter<'_> {
        Meter { budget: self, steps: 0 }
    }
}

/// Counts reduction steps against a [`Budget`].
pub(crate) struct Meter<'a> {
    budget: &'a Budget,
    pub steps: u64,
}

impl Meter<'_> {
    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget.max_reductions {
            return Err(Error::BudgetExceeded { steps: self.steps - 1 });
        }
        if self.steps.is_multiple_of(512) {
            self.budget.check_deadline()?;
        }
        Ok(())
    }
}
