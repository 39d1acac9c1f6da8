//! Sequential or rayon-backed execution of the data-parallel loops.
//!
//! With the `parallel` feature off, [`Exec::Parallel`] silently runs
//! sequentially. Both paths produce identical results: every reduction
//! done through here is order-independent.

/// How a data-parallel loop is executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Maps `f` over `items`, preserving input order in the output.
    pub fn map<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        match self {
            Exec::Sequential => items.into_iter().map(f).collect(),
            Exec::Parallel => par_map(items, f),
        }
    }

    /// Maps then folds with an associative, commutative `combine`.
    pub fn map_reduce<T, R, F, C>(self, items: Vec<T>, f: F, combine: C) -> Option<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
        C: Fn(R, R) -> R + Sync + Send,
    {
        match self {
            Exec::Sequential => items.into_iter().map(f).reduce(combine),
            Exec::Parallel => par_map_reduce(items, f, combine),
        }
    }

    pub fn is_parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

#[cfg(feature = "parallel")]
fn par_map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    items.into_iter().map(f).collect()
}

#[cfg(feature = "parallel")]
fn par_map_reduce<T, R, F, C>(items: Vec<T>, f: F, combine: C) -> Option<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
    C: Fn(R, R) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).reduce_with(combine)
}

#[cfg(not(feature = "parallel"))]
fn par_map_reduce<T, R, F, C>(items: Vec<T>, f: F, combine: C) -> Option<R>
where
    F: Fn(T) -> R,
    C: Fn(R, R) -> R,
{
    items.into_iter().map(f).reduce(combine)
}

/// Runs `op` on a dedicated pool of `workers` threads. Without the
/// `parallel` feature this just calls `op`.
#[cfg(feature = "parallel")]
pub fn with_workers<R: Send>(workers: usize, op: impl FnOnce() -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build() {
        Ok(pool) => pool.install(op),
        Err(_) => op(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_workers<R: Send>(_workers: usize, op: impl FnOnce() -> R + Send) -> R {
    op()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = Exec::Sequential.map(items.clone(), |x| x * x);
        let par = Exec::Parallel.map(items.clone(), |x| x * x);
        assert_eq!(seq, par);
        let s = Exec::Sequential.map_reduce(items.clone(), |x| x, u64::max);
        let p = with_workers(4, || Exec::Parallel.map_reduce(items, |x| x, u64::max));
        assert_eq!(s, p);
        assert_eq!(Exec::Parallel.map_reduce(Vec::<u64>::new(), |x| x, u64::max), None);
    }
}
