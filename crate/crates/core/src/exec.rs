//! Execution policy for the data-parallel inner loops (Weyl-group sums,
//! per-generator oracle runs, verification sweeps).
//!
//! With the `parallel` feature (on by default) [`Exec::Parallel`] fans work
//! out over the rayon pool; without it every policy runs sequentially.
//! Results never depend on the policy.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// Maps `f` over `items`, preserving order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }

    /// Maps `f` over `items` and folds the results with an associative `combine`.
    pub fn map_reduce<T, R, F, I, C>(self, items: &[T], f: F, identity: I, combine: C) -> R
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
        I: Fn() -> R + Sync + Send,
        C: Fn(R, R) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).reduce(identity, combine)
            }
            _ => items.iter().map(f).fold(identity(), combine),
        }
    }
}
