//! Data-parallel map over sample points.
//!
//! Residual sweeps evaluate many independent (point, solution) pairs; with
//! the default `parallel` feature they fan out over a rayon pool, and the
//! sequential path stays available unconditionally so the two can be
//! compared (see the `sweep` benchmark).

/// Map sequentially; always available.
pub fn map_points_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Map using the rayon pool when the `parallel` feature is enabled,
/// falling back to the sequential path otherwise.  Output order matches
/// input order in both cases, so results are identical.
#[cfg(feature = "parallel")]
pub fn map_points<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_points<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    map_points_seq(items, f)
}
