//! Element-loop execution helpers: with the `parallel` feature (default)
//! these run on the rayon pool, otherwise as plain sequential loops. All
//! reductions are over integer sums or index-ordered collections, so both
//! modes produce identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Σ f(i) for i in 0..n with overflow detection; None on overflow.
pub(crate) fn try_sum(n: usize, f: impl Fn(usize) -> u64 + Send + Sync) -> Option<u64> {
    #[cfg(feature = "parallel")]
    {
        (0..n)
            .into_par_iter()
            .map(|i| Some(f(i)))
            .try_reduce(|| 0u64, |a, b| a.checked_add(b))
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).try_fold(0u64, |acc, i| acc.checked_add(f(i)))
    }
}

/// Number of i in 0..n satisfying the predicate.
pub(crate) fn count(n: usize, pred: impl Fn(usize) -> bool + Send + Sync) -> u64 {
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().filter(|&i| pred(i)).count() as u64
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).filter(|&i| pred(i)).count() as u64
    }
}

/// [f(0), f(1), …, f(n−1)], order preserved.
pub(crate) fn map_indexed<T: Send>(
    n: usize,
    f: impl Fn(usize) -> T + Send + Sync,
) -> Vec<T> {
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Maps f over a slice, order preserved.
pub(crate) fn map_slice<'a, I: Sync, T: Send>(
    items: &'a [I],
    f: impl Fn(&'a I) -> T + Send + Sync,
) -> Vec<T> {
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sums_and_counts() {
        assert_eq!(try_sum(5, |i| i as u64), Some(10));
        assert_eq!(try_sum(0, |_| 1), Some(0));
        assert_eq!(try_sum(3, |_| u64::MAX / 2), None);
        assert_eq!(count(10, |i| i % 3 == 0), 4);
    }

    #[test]
    fn maps_preserve_order() {
        assert_eq!(map_indexed(4, |i| i * i), vec![0, 1, 4, 9]);
        let words = ["a", "bb", "ccc"];
        assert_eq!(map_slice(&words, |w| w.len()), vec![1, 2, 3]);
    }
}
