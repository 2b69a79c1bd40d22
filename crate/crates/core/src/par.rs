//! Parallel-or-sequential execution of embarrassingly parallel maps.
//!
//! Scans and samplers map independent work items (curves, discriminants,
//! draws) and reduce the collected results in input order, so output never
//! depends on the execution policy or the worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution policy for the data-parallel layers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    #[cfg(feature = "parallel")]
    Rayon,
}

impl Default for Parallelism {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        Parallelism::Rayon
    }
    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        Parallelism::Sequential
    }
}

/// Map `f` over `items`, preserving input order in the output.
pub fn map_collect<T, R, F>(policy: Parallelism, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    match policy {
        Parallelism::Sequential => items.into_iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Parallelism::Rayon => items.into_par_iter().map(f).collect(),
    }
}

/// Map a fallible `f` over `items`, stopping at the first error.
pub fn try_map_collect<T, R, E, F>(policy: Parallelism, items: Vec<T>, f: F) -> Result<Vec<R>, E>
where
    T: Send,
    R: Send,
    E: Send,
    F: Fn(T) -> Result<R, E> + Sync + Send,
{
    match policy {
        Parallelism::Sequential => items.into_iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Parallelism::Rayon => items.into_par_iter().map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = map_collect(Parallelism::Sequential, items.clone(), |x| x * x);
        #[cfg(feature = "parallel")]
        {
            let par = map_collect(Parallelism::Rayon, items, |x| x * x);
            assert_eq!(seq, par);
        }
        assert_eq!(seq[10], 100);
    }
}
