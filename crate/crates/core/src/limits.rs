/// Runtime budgets shared by the enumeration-heavy operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Size budget for boundaries, apex sets and adhesions; bags of at most
    /// this many vertices are treated as small bags.
    pub k: usize,
    /// Largest vertex count the brute-force enumeration accepts.
    pub oracle_cap: usize,
    /// Largest number of candidate matchings a single enumeration may generate.
    pub work_limit: u64,
}

pub const DEFAULT_ORACLE_CAP: usize = 20;
pub const DEFAULT_K: usize = 4;
pub const DEFAULT_WORK_LIMIT: u64 = 2_000_000;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            k: DEFAULT_K,
            oracle_cap: DEFAULT_ORACLE_CAP,
            work_limit: DEFAULT_WORK_LIMIT,
        }
    }
}

impl Limits {
    pub fn with_k(mut self, k: usize) -> Self {
        self.k = k;
        self
    }

    pub fn with_oracle_cap(mut self, cap: usize) -> Self {
        self.oracle_cap = cap;
        self
    }

    pub fn with_work_limit(mut self, limit: u64) -> Self {
        self.work_limit = limit;
        self
    }
}
