//! Deterministic parallel sweeps: output order is the input order no
//! matter how many worker threads run. `DIMDATUM_THREADS` caps the pool.

use std::env;
use std::thread;

fn thread_cap() -> usize {
    if let Ok(v) = env::var("DIMDATUM_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            return n.max(1);
        }
    }
    thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

/// Apply `f` to every item, in parallel across contiguous chunks, and
/// return the results in input order.
pub fn par_map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send + Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let workers = thread_cap().min(items.len().max(1));
    if workers <= 1 {
        return items.iter().map(&f).collect();
    }
    let chunk_size = items.len().div_ceil(workers);
    let mut results: Vec<Vec<R>> = Vec::new();
    thread::scope(|scope| {
        let mut handles = Vec::new();
        for chunk in items.chunks(chunk_size) {
            let f = &f;
            handles.push(scope.spawn(move || chunk.iter().map(f).collect::<Vec<R>>()));
        }
        for handle in handles {
            results.push(handle.join().expect("sweep worker panicked"));
        }
    });
    results.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_order() {
        let items: Vec<i64> = (0..1000).collect();
        let out = par_map(items.clone(), |x| x * x);
        let expect: Vec<i64> = items.iter().map(|x| x * x).collect();
        assert_eq!(out, expect);
    }
}
