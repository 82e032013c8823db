use crate::error::{Error, Result};
use crate::graph::Graph;

/// Environment variable that overrides the enumeration and path-search budgets.
pub const BUDGET_ENV: &str = "TEACHDIM_BUDGET";

/// Caps that turn exponential searches into reported errors instead of
/// unbounded work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest graph accepted by class constructors.
    pub vertex_cap: usize,
    /// Maximum number of connected sets or star concepts enumerated.
    pub enumeration_budget: u64,
    /// Largest teaching set searched for before giving up.
    pub teaching_set_cap: usize,
    /// Extension steps allowed in the leaf-tree witness search.
    pub path_search_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            vertex_cap: 24,
            enumeration_budget: 1 << 22,
            teaching_set_cap: 12,
            path_search_budget: 10_000_000,
        }
    }
}

impl Limits {
    /// Defaults, with both budgets replaced by `TEACHDIM_BUDGET` when it is
    /// set to an integer.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(b) = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
        {
            limits = limits.with_budget(b);
        }
        limits
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.enumeration_budget = budget;
        self.path_search_budget = budget;
        self
    }

    pub fn check_graph(&self, g: &Graph) -> Result<()> {
        if g.n() > self.vertex_cap {
            return Err(Error::TooManyVertices {
                n: g.n(),
                cap: self.vertex_cap,
            });
        }
        Ok(())
    }
}

/// Counts units of work against a fixed budget.
#[derive(Debug)]
pub(crate) struct Budget {
    what: &'static str,
    limit: u64,
    used: u64,
}

impl Budget {
    pub(crate) fn new(what: &'static str, limit: u64) -> Self {
        Budget {
            what,
            limit,
            used: 0,
        }
    }

    #[inline]
    pub(crate) fn spend(&mut self, units: u64) -> Result<()> {
        self.used += units;
        if self.used > self.limit {
            Err(Error::BudgetExceeded {
                what: self.what,
                budget: self.limit,
            })
        } else {
            Ok(())
        }
    }
}
