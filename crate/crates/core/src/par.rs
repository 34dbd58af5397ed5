//! Order-preserving data-parallel helpers.
//!
//! With the `parallel` feature these run on the rayon pool; without it they
//! fall back to plain iterators. Results are always collected in input order,
//! so integer reductions are bit-identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Default number of subsets handled by one worker task.
pub const BLOCK: u64 = 1 << 14;

/// Evaluates `f(lo, hi)` over contiguous blocks covering `0..total`.
pub fn map_blocks<T, F>(total: u64, block: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64, u64) -> T + Sync + Send,
{
    let block = block.max(1);
    let n_blocks = total.div_ceil(block);
    let run = |b: u64| {
        let lo = b * block;
        f(lo, (lo + block).min(total))
    };
    #[cfg(feature = "parallel")]
    {
        (0..n_blocks).into_par_iter().map(run).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n_blocks).map(run).collect()
    }
}

/// Maps `f` over a slice, preserving order.
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Whether the crate was built with the rayon backend.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
