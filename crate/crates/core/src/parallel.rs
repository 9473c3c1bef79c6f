//! Execution-mode plumbing for the data-parallel scans.
//!
//! Heavy operations (table scans, exhaustive enumeration, batch witness
//! verification) accept an [`ExecMode`]. Results are identical in both modes:
//! parallel searches reduce to the minimum index, matching the sequential
//! scan order exactly. Without the `parallel` feature, `Parallel` silently
//! degrades to the sequential path.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    /// Rayon work-stealing over the scan space. Falls back to sequential when
    /// the `parallel` feature is disabled.
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

/// Smallest index in `0..len` satisfying `pred`, or `None`.
pub(crate) fn find_min<F>(len: u64, mode: ExecMode, pred: F) -> Option<u64>
where
    F: Fn(u64) -> bool + Sync,
{
    match mode {
        ExecMode::Sequential => (0..len).find(|&i| pred(i)),
        ExecMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                (0..len).into_par_iter().find_first(|&i| pred(i))
            }
            #[cfg(not(feature = "parallel"))]
            {
                (0..len).find(|&i| pred(i))
            }
        }
    }
}

/// Order-preserving map over a slice.
pub(crate) fn map_slice<T, U, F>(items: &[T], mode: ExecMode, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match mode {
        ExecMode::Sequential => items.iter().map(f).collect(),
        ExecMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                items.par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.iter().map(f).collect()
            }
        }
    }
}
