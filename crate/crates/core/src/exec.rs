//! Work distribution for verification sweeps.
//!
//! With the default `parallel` feature the sweeps fan out over a rayon
//! thread pool; without it the same code runs sequentially. Results are
//! collected in input order either way, so reports are identical across
//! both builds.

#[cfg(feature = "parallel")]
pub(crate) fn map_cases<T, R, F>(cases: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Send + Sync,
{
    use rayon::prelude::*;
    cases.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_cases<T, R, F>(cases: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Send + Sync,
{
    cases.into_iter().map(f).collect()
}
