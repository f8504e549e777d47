//! Ordered map that runs on the rayon pool when the `parallel` feature is on.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True when `Parallel` will actually use more than one thread.
    pub fn is_available(self) -> bool {
        match self {
            Execution::Sequential => true,
            Execution::Parallel => cfg!(feature = "parallel"),
        }
    }
}

/// Maps `f` over `items`, preserving order. Falls back to a plain loop when
/// the crate is built without `parallel`.
pub fn ordered_map<T, R, F>(items: &[T], execution: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match execution {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}
