//! Order-preserving shard execution, backed by rayon when the `parallel`
//! feature is enabled and plain iteration otherwise.

use super::EnumerationError;

pub(crate) struct Executor {
    #[cfg(feature = "parallel")]
    pool: Option<rayon::ThreadPool>,
}

impl Executor {
    pub(crate) fn new(jobs: usize) -> Result<Self, EnumerationError> {
        if jobs == 0 {
            return Err(EnumerationError::InvalidJobs);
        }
        #[cfg(feature = "parallel")]
        {
            let pool = if jobs > 1 {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build()
                    .map_err(|e| EnumerationError::ThreadPool(e.to_string()))?;
                Some(pool)
            } else {
                None
            };
            Ok(Executor { pool })
        }
        #[cfg(not(feature = "parallel"))]
        {
            Ok(Executor {})
        }
    }

    /// Applies `f` to every item; results come back in item order.
    pub(crate) fn map<T, R, F>(&self, items: &[T], f: F) -> Result<Vec<R>, EnumerationError>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Result<R, EnumerationError> + Sync,
    {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            use rayon::prelude::*;
            return pool.install(|| items.par_iter().map(&f).collect());
        }
        items.iter().map(f).collect()
    }
}
