//! Data-parallel helpers. With the `parallel` feature (default) work is
//! spread over the rayon pool; without it, or with
//! [`Execution::Sequential`], everything runs on the calling thread in order.

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// `Parallel` only when the crate was built with the `parallel` feature.
    pub fn effective(self) -> Execution {
        if cfg!(feature = "parallel") {
            self
        } else {
            Execution::Sequential
        }
    }
}

/// Applies `f` to every item, returning results in input order.
pub fn map<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec.effective() {
        Execution::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        #[cfg(not(feature = "parallel"))]
        Execution::Parallel => unreachable!("effective() downgrades without the parallel feature"),
    }
}

/// Applies `f` to every item and hands each result to `sink` on the calling
/// thread as soon as it is ready (completion order when parallel, input
/// order when sequential). `sink` is the single writer for shared state.
pub fn for_each_streamed<T, R, F, S>(exec: Execution, items: &[T], f: F, mut sink: S)
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
    S: FnMut(&T, R),
{
    match exec.effective() {
        Execution::Sequential => {
            for item in items {
                let r = f(item);
                sink(item, r);
            }
        }
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            let (tx, rx) = std::sync::mpsc::channel::<(usize, R)>();
            std::thread::scope(|scope| {
                scope.spawn(|| {
                    items
                        .par_iter()
                        .enumerate()
                        .for_each_with(tx, |tx, (i, item)| {
                            // the receiver only disappears if the sink panicked
                            let _ = tx.send((i, f(item)));
                        });
                });
                for (i, r) in rx {
                    sink(&items[i], r);
                }
            });
        }
        #[cfg(not(feature = "parallel"))]
        Execution::Parallel => unreachable!("effective() downgrades without the parallel feature"),
    }
}

/// Worker threads available to [`Execution::Parallel`].
pub fn current_threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

/// Sizes the global worker pool. Has an effect only before the pool is first
/// used; returns `false` when it was already initialised or parallelism is
/// compiled out.
pub fn configure_threads(threads: usize) -> bool {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build_global()
            .is_ok()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        false
    }
}
