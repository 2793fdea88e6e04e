//! Batch evaluation over grids of polynomial cases.
//!
//! Cases are independent, so they are mapped in parallel when the `parallel`
//! feature is on. Results always come back in input order.

use crate::invertible::{InvertibleError, InvertiblePoly, PolyKind};
use crate::report::PolyReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential without the `parallel` feature.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// `items.iter().map(f)` with the requested execution strategy.
pub fn map<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        Execution::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        #[cfg(not(feature = "parallel"))]
        Execution::Parallel => items.iter().map(f).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct PolyCase {
    pub poly: InvertiblePoly,
    pub ell: u64,
}

/// Every kind with `2 ≤ q ≤ min(p, qmax)`, `p ≤ pmax`, and every admissible
/// index; `bp:2,2` is skipped.
pub fn family_grid(pmax: u64, qmax: u64) -> Vec<PolyCase> {
    let mut out = Vec::new();
    for kind in [PolyKind::Loop, PolyKind::Chain, PolyKind::Bp] {
        for p in 2..=pmax {
            for q in 2..=p.min(qmax) {
                if kind == PolyKind::Bp && (p, q) == (2, 2) {
                    continue;
                }
                let poly = InvertiblePoly::new(kind, p, q).expect("p >= q >= 2");
                out.extend(
                    poly.admissible_indices()
                        .into_iter()
                        .map(|ell| PolyCase { poly, ell }),
                );
            }
        }
    }
    out
}

/// Summary reports without mirror details, in input order.
pub fn evaluate(
    cases: &[PolyCase],
    exec: Execution,
    check_quivers: bool,
) -> Vec<Result<PolyReport, InvertibleError>> {
    map(cases, exec, |c| {
        PolyReport::new(&c.poly, c.ell, check_quivers, false)
    })
}
