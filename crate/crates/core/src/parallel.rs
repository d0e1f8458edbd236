use rayon::prelude::*;

/// Maps `f` over `items` on up to `jobs` worker threads. Output order always
/// follows input order. `jobs <= 1` runs inline.
pub fn ordered_map<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    if jobs <= 1 || items.len() < 2 {
        return items.iter().map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
        Err(_) => items.iter().map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<u64> = (0..500).collect();
        let seq = ordered_map(&items, 1, |x| x * x);
        let par = ordered_map(&items, 4, |x| x * x);
        assert_eq!(seq, par);
    }
}
