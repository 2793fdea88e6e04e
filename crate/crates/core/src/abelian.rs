//! Finite abelian groups presented as products of cyclic groups.
//!
//! Characters of the node isotropy groups are stored additively as residue
//! vectors, so every computation here is exact integer arithmetic.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbelianError {
    #[error("cyclic factor orders must be positive, got {0:?}")]
    InvalidModulus(Vec<u64>),
    #[error("character has {found} coordinates but the group has {expected} factors")]
    Arity { expected: usize, found: usize },
    #[error("characters live in different groups: {left} vs {right}")]
    GroupMismatch { left: FinAbGroup, right: FinAbGroup },
    #[error("search box {j_range}x{k_range} does not match group order {order}")]
    RangeMismatch {
        j_range: usize,
        k_range: usize,
        order: u64,
    },
    #[error("weight equation has no solution for target {0}")]
    NoSolution(Character),
    #[error("weight equation has several solutions, first collision at {0}")]
    NonUniqueSolution(Character),
}

/// `Z/m_1 ⊕ … ⊕ Z/m_s`, encoded in JSON as the array of moduli.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct FinAbGroup {
    moduli: Vec<u64>,
}

impl TryFrom<Vec<u64>> for FinAbGroup {
    type Error = AbelianError;

    fn try_from(moduli: Vec<u64>) -> Result<Self, Self::Error> {
        FinAbGroup::new(moduli)
    }
}

impl From<FinAbGroup> for Vec<u64> {
    fn from(g: FinAbGroup) -> Self {
        g.moduli
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moduli.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.moduli.iter().enumerate() {
            if i > 0 {
                write!(f, "⊕")?;
            }
            write!(f, "Z/{m}")?;
        }
        Ok(())
    }
}

impl FinAbGroup {
    pub fn new(moduli: Vec<u64>) -> Result<Self, AbelianError> {
        if moduli.contains(&0) {
            return Err(AbelianError::InvalidModulus(moduli));
        }
        Ok(FinAbGroup { moduli })
    }

    pub fn cyclic(m: u64) -> Result<Self, AbelianError> {
        FinAbGroup::new(vec![m])
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().product()
    }

    pub fn zero(&self) -> Character {
        Character {
            group: self.clone(),
            coords: vec![0; self.moduli.len()],
        }
    }

    /// Builds a character from arbitrary integers, reducing each coordinate.
    pub fn element(&self, coords: &[i64]) -> Result<Character, AbelianError> {
        if coords.len() != self.moduli.len() {
            return Err(AbelianError::Arity {
                expected: self.moduli.len(),
                found: coords.len(),
            });
        }
        let coords = coords
            .iter()
            .zip(&self.moduli)
            .map(|(&c, &m)| c.rem_euclid(m as i64) as u64)
            .collect();
        Ok(Character {
            group: self.clone(),
            coords,
        })
    }

    /// Mixed-radix position of a character; a bijection onto `0..order()`.
    pub fn index_of(&self, c: &Character) -> usize {
        let mut idx = 0u64;
        for (&x, &m) in c.coords.iter().zip(&self.moduli) {
            idx = idx * m + x;
        }
        idx as usize
    }

    pub fn element_at(&self, mut idx: usize) -> Character {
        let mut coords = vec![0; self.moduli.len()];
        for (slot, &m) in coords.iter_mut().zip(&self.moduli).rev() {
            *slot = idx as u64 % m;
            idx /= m as usize;
        }
        Character {
            group: self.clone(),
            coords,
        }
    }

    /// All elements in mixed-radix order.
    pub fn elements(&self) -> impl Iterator<Item = Character> + '_ {
        (0..self.order() as usize).map(move |i| self.element_at(i))
    }
}

/// An element of the character group, i.e. a residue vector of a [`FinAbGroup`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    group: FinAbGroup,
    coords: Vec<u64>,
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Character {
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn check_same_group(&self, other: &Character) -> Result<(), AbelianError> {
        if self.group != other.group {
            return Err(AbelianError::GroupMismatch {
                left: self.group.clone(),
                right: other.group.clone(),
            });
        }
        Ok(())
    }

    /// `s·self + t·other`, reduced coordinatewise.
    pub fn combine(&self, s: i64, other: &Character, t: i64) -> Result<Character, AbelianError> {
        self.check_same_group(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .zip(&self.group.moduli)
            .map(|((&a, &b), &m)| {
                let m = m as i128;
                (s as i128 * a as i128 + t as i128 * b as i128).rem_euclid(m) as u64
            })
            .collect();
        Ok(Character {
            group: self.group.clone(),
            coords,
        })
    }

    pub fn add(&self, other: &Character) -> Result<Character, AbelianError> {
        self.combine(1, other, 1)
    }

    pub fn scale(&self, s: i64) -> Character {
        let coords = self
            .coords
            .iter()
            .zip(&self.group.moduli)
            .map(|(&a, &m)| (s as i128 * a as i128).rem_euclid(m as i128) as u64)
            .collect();
        Character {
            group: self.group.clone(),
            coords,
        }
    }

    pub fn neg(&self) -> Character {
        self.scale(-1)
    }

    /// Least `k ≥ 1` with `k·self = 0`.
    pub fn order(&self) -> u64 {
        self.coords
            .iter()
            .zip(&self.group.moduli)
            .map(|(&a, &m)| m / a.gcd(&m))
            .fold(1, |acc, o| acc.lcm(&o))
    }
}

/// Lookup table for `(j, k) ↦ −j·alpha + k·beta` on `[0, j_range) × [0, k_range)`.
///
/// Construction enumerates the whole box and fails unless the map is a
/// bijection onto the group, so a built table certifies the node data.
#[derive(Debug, Clone)]
pub struct WeightSolver {
    group: FinAbGroup,
    alpha: Character,
    beta: Character,
    j_range: usize,
    k_range: usize,
    preimage: Vec<(usize, usize)>,
}

impl WeightSolver {
    pub fn new(
        alpha: &Character,
        beta: &Character,
        j_range: usize,
        k_range: usize,
    ) -> Result<Self, AbelianError> {
        alpha.check_same_group(beta)?;
        let group = alpha.group.clone();
        let order = group.order();
        if (j_range as u64) * (k_range as u64) != order {
            return Err(AbelianError::RangeMismatch {
                j_range,
                k_range,
                order,
            });
        }
        let mut preimage: Vec<Option<(usize, usize)>> = vec![None; order as usize];
        for j in 0..j_range {
            for k in 0..k_range {
                let image = alpha.combine(-(j as i64), beta, k as i64)?;
                let slot = &mut preimage[group.index_of(&image)];
                if slot.is_some() {
                    return Err(AbelianError::NonUniqueSolution(image));
                }
                *slot = Some((j, k));
            }
        }
        // j_range * k_range == order and no collisions, so every slot is filled.
        let preimage = preimage
            .into_iter()
            .map(|s| s.expect("bijective"))
            .collect();
        Ok(WeightSolver {
            group,
            alpha: alpha.clone(),
            beta: beta.clone(),
            j_range,
            k_range,
            preimage,
        })
    }

    pub fn alpha(&self) -> &Character {
        &self.alpha
    }

    pub fn beta(&self) -> &Character {
        &self.beta
    }

    pub fn ranges(&self) -> (usize, usize) {
        (self.j_range, self.k_range)
    }

    pub fn solve(&self, target: &Character) -> Result<(usize, usize), AbelianError> {
        self.alpha.check_same_group(target)?;
        Ok(self.preimage[self.group.index_of(target)])
    }
}

/// The unique `(j, k)` in the box with `−j·alpha + k·beta = target`.
pub fn solve_weight_equation(
    target: &Character,
    alpha: &Character,
    beta: &Character,
    j_range: usize,
    k_range: usize,
) -> Result<(usize, usize), AbelianError> {
    alpha.check_same_group(target)?;
    let order = alpha.group.order();
    if (j_range as u64) * (k_range as u64) != order {
        return Err(AbelianError::RangeMismatch {
            j_range,
            k_range,
            order,
        });
    }
    let mut found = None;
    for j in 0..j_range {
        for k in 0..k_range {
            if alpha.combine(-(j as i64), beta, k as i64)? == *target {
                if found.is_some() {
                    return Err(AbelianError::NonUniqueSolution(target.clone()));
                }
                found = Some((j, k));
            }
        }
    }
    found.ok_or_else(|| AbelianError::NoSolution(target.clone()))
}

/// Every `beta` for which `(j, k) ↦ −j·alpha + k·beta` is a bijection of the box.
pub fn valid_twist_characters(alpha: &Character, j_range: usize, k_range: usize) -> Vec<Character> {
    alpha
        .group
        .elements()
        .filter(|beta| WeightSolver::new(alpha, beta, j_range, k_range).is_ok())
        .collect()
}
