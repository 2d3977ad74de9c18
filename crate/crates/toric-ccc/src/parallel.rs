//! Minimal fork-join helper. The `TORIC_CCC_THREADS` environment variable
//! caps the worker count; unset or 1 means sequential.

pub fn thread_cap() -> usize {
    match std::env::var("TORIC_CCC_THREADS") {
        Ok(v) => v.parse::<usize>().unwrap_or(1).max(1),
        Err(_) => 1,
    }
}

/// Map items through `f`, preserving order, fanning out across threads when
/// the cap allows it. Items are independent; no coordination happens beyond
/// collecting results.
pub fn parallel_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let cap = thread_cap();
    if cap <= 1 || items.len() < 2 {
        return items.iter().map(&f).collect();
    }
    let workers = cap.min(items.len());
    let chunk = items.len().div_ceil(workers);
    let mut out: Vec<Option<R>> = (0..items.len()).map(|_| None).collect();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for (w, slice) in items.chunks(chunk).enumerate() {
            let f = &f;
            handles.push((w * chunk, scope.spawn(move || slice.iter().map(f).collect::<Vec<R>>())));
        }
        for (start, h) in handles {
            for (i, r) in h.join().expect("worker panicked").into_iter().enumerate() {
                out[start + i] = Some(r);
            }
        }
    });
    out.into_iter().map(|r| r.expect("filled")).collect()
}
