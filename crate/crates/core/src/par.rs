//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (on by default) work is spread over the
//! current rayon pool; without it, or under [`Execution::Sequential`], the
//! same closures run in a plain loop. Results are returned in input order
//! either way, so callers see identical output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Execution {
    #[default]
    Parallel,
    Sequential,
}

impl Execution {
    /// Whether work will actually be spread over threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Maps `f` over `items` with per-worker state from `init`, preserving order.
pub fn map_with_state<T, S, R, I, F>(items: &[T], exec: Execution, init: I, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, &T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map_init(&init, |s, t| f(s, t)).collect();
    }
    let _ = exec;
    let mut state = init();
    items.iter().map(|t| f(&mut state, t)).collect()
}

/// Index of the first item (in input order) for which `f` returns `Some`,
/// with its value.
pub fn find_map_first<T, R, F>(items: &[T], exec: Execution, f: F) -> Option<(usize, R)>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items
            .par_iter()
            .enumerate()
            .find_map_first(|(i, t)| f(t).map(|r| (i, r)));
    }
    let _ = exec;
    items
        .iter()
        .enumerate()
        .find_map(|(i, t)| f(t).map(|r| (i, r)))
}

/// Number of worker threads that [`Execution::Parallel`] would use.
pub fn worker_count() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}
