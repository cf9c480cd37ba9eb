//! Ordered parallel map with a caller-chosen worker count.

use rayon::prelude::*;

/// Maps `f` over `items` on `width` threads, returning results in input
/// order regardless of completion order. `width <= 1` runs inline.
pub fn ordered_map<T, R, F>(width: usize, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    if width <= 1 || items.len() < 2 {
        return items.iter().map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(width).build() {
        Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
        Err(_) => items.iter().map(f).collect(),
    }
}
