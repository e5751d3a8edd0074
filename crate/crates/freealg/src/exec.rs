#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution strategy for the data-parallel kernels.
///
/// `Parallel` uses rayon when the `parallel` feature is enabled and falls back
/// to sequential iteration otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    #[default]
    Parallel,
    Sequential,
}

impl Exec {
    /// `(0..n).map(f).collect()`, possibly in parallel. Output order is fixed.
    pub fn map<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel && n > 1 {
            return (0..n).into_par_iter().map(f).collect();
        }
        (0..n).map(f).collect()
    }

    /// Maps over a slice, possibly in parallel.
    pub fn map_slice<S, T, F>(self, items: &[S], f: F) -> Vec<T>
    where
        S: Sync,
        T: Send,
        F: Fn(&S) -> T + Sync + Send,
    {
        self.map(items.len(), |k| f(&items[k]))
    }
}
