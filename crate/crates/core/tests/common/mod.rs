#![allow(dead_code)]

use gentle_mirror::perms::Permutation;
use gentle_mirror::surface::{Column, GluedSurfaceSpec, GluingMode};
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// A valid spec with 1 to 4 columns and every glued side of size at most
/// `max_size`. Linear specs may have empty distinguished ends.
pub fn random_spec<R: Rng>(rng: &mut R, max_size: usize) -> GluedSurfaceSpec {
    let n = rng.gen_range(1..=4);
    let mode = if rng.gen_bool(0.5) {
        GluingMode::Circular
    } else {
        GluingMode::Linear
    };
    let interfaces = match mode {
        GluingMode::Circular => n,
        GluingMode::Linear => n - 1,
    };
    let sizes: Vec<usize> = (0..interfaces)
        .map(|_| rng.gen_range(1..=max_size))
        .collect();
    let mut columns = Vec::with_capacity(n);
    for i in 0..n {
        let left = match mode {
            GluingMode::Circular => Some(sizes[(i + n - 1) % n]),
            GluingMode::Linear => i.checked_sub(1).map(|j| sizes[j]),
        };
        let right = (i < interfaces).then(|| sizes[i]);
        let common = match (left, right) {
            (Some(a), Some(b)) => a.gcd(&b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => rng.gen_range(1..=4),
        };
        let d = *divisors(common).choose(rng).unwrap();
        let l = left.map_or_else(|| rng.gen_range(0..=3), |a| a / d);
        let r = right.map_or_else(|| rng.gen_range(0..=3), |b| b / d);
        columns.push(Column::new(l, r, d));
    }
    let gluings = sizes.iter().map(|&s| random_permutation(rng, s)).collect();
    let spec = GluedSurfaceSpec::new(mode, columns, gluings);
    spec.validate().expect("generator produces valid specs");
    spec
}

/// Rotates each annulus block of size `len` by an independent random amount.
pub fn random_block_rotation<R: Rng>(rng: &mut R, len: usize, d: usize) -> Permutation {
    let shifts: Vec<usize> = (0..d).map(|_| rng.gen_range(0..len.max(1))).collect();
    gentle_mirror::perms::block_rotation(len, d, |k| shifts[k])
}
