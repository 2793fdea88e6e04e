mod common;

use common::{random_block_rotation, random_permutation, random_spec};
use gentle_mirror::perms::Permutation;
use gentle_mirror::quiver::{generating_quiver, SurfaceVertex};
use gentle_mirror::surface::GluedSurfaceSpec;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn spec_from(seed: u64) -> (GluedSurfaceSpec, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (random_spec(&mut rng, 24), rng)
}

/// Relabels the stops of every glued side by independent block rotations.
fn rotate_sides(spec: &GluedSurfaceSpec, rng: &mut ChaCha8Rng) -> GluedSurfaceSpec {
    let mut out = spec.clone();
    for iface in spec.interfaces() {
        let from = spec.columns[iface.from];
        let to = spec.columns[iface.to];
        let right = random_block_rotation(rng, from.r, from.d);
        let left = random_block_rotation(rng, to.l, to.d);
        let sigma = &spec.gluings[iface.index];
        out.gluings[iface.index] = left
            .compose(sigma)
            .unwrap()
            .compose(&right.inverse())
            .unwrap();
    }
    out
}

/// Reorders the annuli of one column, relabeling both of its sides.
fn shuffle_annuli(
    spec: &GluedSurfaceSpec,
    column: usize,
    rng: &mut ChaCha8Rng,
) -> GluedSurfaceSpec {
    let c = spec.columns[column];
    let order = random_permutation(rng, c.d);
    let blocks = |len: usize| {
        Permutation::from_fn(len * c.d, |x| order.apply(x / len) * len + x % len).unwrap()
    };
    let mut out = spec.clone();
    for iface in spec.interfaces() {
        let mut sigma = out.gluings[iface.index].clone();
        if iface.from == column {
            sigma = sigma.compose(&blocks(c.r).inverse()).unwrap();
        }
        if iface.to == column {
            sigma = blocks(c.l).compose(&sigma).unwrap();
        }
        out.gluings[iface.index] = sigma;
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cycle_lengths_partition_each_interface(seed: u64) {
        let (spec, _) = spec_from(seed);
        for iface in spec.interfaces() {
            let c = spec.columns[iface.from];
            let total: usize = spec.interface_boundary_permutation(iface).cycle_lengths().iter().sum();
            prop_assert_eq!(total, c.r * c.d);
        }
    }

    #[test]
    fn euler_formula_per_component(seed: u64) {
        let (spec, _) = spec_from(seed);
        let inv = spec.invariants();
        let graph = spec.ribbon_graph();
        prop_assert_eq!(graph.euler_characteristic(), inv.euler);
        prop_assert_eq!(graph.faces().len(), inv.boundary_count);
        let genera: i64 = graph.component_genera().iter().sum();
        prop_assert!(graph.component_genera().iter().all(|&g| g >= 0));
        prop_assert_eq!(2 * inv.h0 as i64 - inv.euler - inv.boundary_count as i64, 2 * genera);
        prop_assert_eq!(inv.h1, inv.h0 as i64 - inv.euler);
        if inv.h0 == 1 {
            prop_assert_eq!(inv.genus, Some(genera));
        }
    }

    #[test]
    fn face_windings_match_boundary_permutations(seed: u64) {
        let (spec, _) = spec_from(seed);
        prop_assert_eq!(spec.ribbon_graph().face_windings(), spec.boundary_profile());
    }

    #[test]
    fn windings_sum_to_twice_euler(seed: u64) {
        let (spec, _) = spec_from(seed);
        let total: i64 = spec.boundary_profile().values().sum();
        prop_assert_eq!(total, 2 * spec.euler_characteristic());
    }

    #[test]
    fn stops_count_both_sides_of_every_strip(seed: u64) {
        let (spec, _) = spec_from(seed);
        let inv = spec.invariants();
        let ends: usize = match spec.mode {
            gentle_mirror::GluingMode::Circular => 0,
            gentle_mirror::GluingMode::Linear => {
                let (first, last) = (spec.columns[0], spec.columns[spec.columns.len() - 1]);
                first.l * first.d + last.r * last.d
            }
        };
        prop_assert_eq!(inv.total_stops, 2 * spec.strip_count() + ends);
    }

    #[test]
    fn invariants_survive_block_rotations(seed: u64) {
        let (spec, mut rng) = spec_from(seed);
        let rotated = rotate_sides(&spec, &mut rng);
        rotated.validate().unwrap();
        prop_assert_eq!(rotated.boundary_profile(), spec.boundary_profile());
        prop_assert_eq!(rotated.euler_characteristic(), spec.euler_characteristic());
        prop_assert_eq!(rotated.boundary_count(), spec.boundary_count());
    }

    #[test]
    fn invariants_survive_reordering_annuli(seed: u64) {
        let (spec, mut rng) = spec_from(seed);
        let column = (seed % spec.columns.len() as u64) as usize;
        let shuffled = shuffle_annuli(&spec, column, &mut rng);
        prop_assert_eq!(shuffled.invariants(), spec.invariants());
    }

    #[test]
    fn generating_quivers_are_gentle(seed: u64) {
        let (spec, _) = spec_from(seed);
        let q = generating_quiver(&spec);
        prop_assert!(q.is_gentle(), "{:?}", q.gentle_violations());
        let strips = spec.strip_count();
        let chains: usize = spec.columns.iter().map(|c| c.d * (c.l + c.r)).sum();
        prop_assert_eq!(q.arrow_count(), chains + 2 * strips);
        prop_assert_eq!(q.relation_count(), 2 * strips);
        for v in q.vertices() {
            if matches!(v, SurfaceVertex::Strip { .. }) {
                prop_assert_eq!(q.out_arrows(v).count(), 2);
                prop_assert_eq!(q.in_arrows(v).count(), 0);
            }
        }
    }
}
