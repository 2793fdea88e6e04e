//! Permutations of `{0, …, n−1}` and the boundary-flow permutations used to
//! count boundary circles between two glued columns.
//!
//! Composition is right-to-left throughout: `a.compose(&b)` is `a ∘ b`, so
//! `b` is applied first.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("image list is not a bijection of 0..{0}")]
    NotBijective(usize),
    #[error("permutation sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("block sizes {blocks}x{block_len} do not cover {n} points")]
    BlockMismatch {
        n: usize,
        blocks: usize,
        block_len: usize,
    },
}

/// A bijection stored as its image array: position `x` holds `σ(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermError;

    fn try_from(images: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl Permutation {
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(PermError::NotBijective(n));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds `x ↦ f(x)` on `n` points, checking bijectivity.
    pub fn from_fn(n: usize, f: impl FnMut(usize) -> usize) -> Result<Self, PermError> {
        Permutation::from_images((0..n).map(f).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Result<Self, PermError> {
        if self.len() != other.len() {
            return Err(PermError::SizeMismatch(self.len(), other.len()));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    /// `c ∘ self ∘ c⁻¹`.
    pub fn conjugate_by(&self, c: &Permutation) -> Result<Self, PermError> {
        c.compose(self)?.compose(&c.inverse())
    }

    /// Disjoint cycles, each rotated to start at its minimum and sorted by
    /// that minimum. Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        // Scanning starts in increasing order, so each cycle already begins at
        // its minimum and the list is sorted.
        out
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).collect()
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Cycle notation with every cycle printed, e.g. `(0 1 2 3)(4 5 6 7)`.
    pub fn cycle_notation(&self) -> String {
        CycleNotation(self.cycles()).to_string()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        CycleNotation(self.cycles()).fmt(f)
    }
}

struct CycleNotation(Vec<Vec<usize>>);

impl fmt::Display for CycleNotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        for cycle in &self.0 {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Same as [`Permutation::cycles`].
pub fn cycle_decomposition(p: &Permutation) -> Vec<Vec<usize>> {
    p.cycles()
}

/// Upward flow along the right boundaries of a column: inside every block
/// of length `r`, `x ↦ start + ((x − start − 1) mod r)`.
pub fn tau_right(r: usize, d: usize) -> Permutation {
    block_rotation(r, d, |_| r.saturating_sub(1))
}

/// Downward flow along the left boundaries of a column: inside every block
/// of length `l`, `x ↦ start + ((x − start + 1) mod l)`.
pub fn tau_left(l: usize, d: usize) -> Permutation {
    block_rotation(l, d, |_| 1)
}

/// Rotates block `k` (of `d` blocks of length `len`) forward by `shift(k)`.
pub fn block_rotation(len: usize, d: usize, shift: impl Fn(usize) -> usize) -> Permutation {
    let mut images = Vec::with_capacity(len * d);
    for k in 0..d {
        let s = shift(k);
        for c in 0..len {
            images.push(k * len + (c + s) % len);
        }
    }
    Permutation { images }
}

/// `σ⁻¹ ∘ τ_left ∘ σ ∘ τ_right`: its cycles are the boundary circles created
/// by gluing a column with `r_cur` right stops per annulus (`d_cur` annuli)
/// to one with `l_next` left stops per annulus (`d_next` annuli).
pub fn boundary_permutation(
    sigma: &Permutation,
    l_next: usize,
    d_next: usize,
    r_cur: usize,
    d_cur: usize,
) -> Result<Permutation, PermError> {
    let n = sigma.len();
    if r_cur * d_cur != n {
        return Err(PermError::BlockMismatch {
            n,
            blocks: d_cur,
            block_len: r_cur,
        });
    }
    if l_next * d_next != n {
        return Err(PermError::BlockMismatch {
            n,
            blocks: d_next,
            block_len: l_next,
        });
    }
    let tr = tau_right(r_cur, d_cur);
    let tl = tau_left(l_next, d_next);
    sigma.inverse().compose(&tl)?.compose(sigma)?.compose(&tr)
}
