use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;
use shy_core::constructions::{product_image, product_map_between};
use shy_core::maps::oracle::{connectivity_preserving_oracle, continuity_oracle, shyness_oracle};
use shy_core::maps::compose;
use shy_core::topology::{cu_adjacent, EdgeSet};
use shy_core::{Adjacency, DigitalFunction, DigitalImage, Point, PointSet};

fn point(dim: usize) -> impl Strategy<Value = Point> {
    prop::collection::vec(-2i64..=2, dim).prop_map(Point::new)
}

/// A lattice image of at most `max` points in `[0,2]^dim` under some `c_u`.
fn lattice_image(max: usize) -> impl Strategy<Value = DigitalImage> {
    (1usize..=3)
        .prop_flat_map(move |dim| {
            let pts = prop::collection::btree_set(prop::collection::vec(0i64..=2, dim), 1..=max);
            (Just(dim), 1..=dim, pts)
        })
        .prop_map(|(dim, u, pts)| {
            DigitalImage::new(dim, Adjacency::Cu(u), pts.into_iter().map(Point::new)).unwrap()
        })
}

/// A graph on labels `0..n` given by a random edge subset.
fn graph_image(max: usize) -> impl Strategy<Value = DigitalImage> {
    (1usize..=max)
        .prop_flat_map(|n| {
            let pairs: Vec<(i64, i64)> = (0..n as i64).flat_map(|a| (a + 1..n as i64).map(move |b| (a, b))).collect();
            let k = pairs.len();
            (Just(n), Just(pairs), prop::collection::vec(any::<bool>(), k))
        })
        .prop_map(|(n, pairs, keep)| {
            let edges = EdgeSet::from_pairs(
                pairs
                    .into_iter()
                    .zip(keep)
                    .filter(|(_, k)| *k)
                    .map(|((a, b), _)| (Point::label(a), Point::label(b))),
            )
            .unwrap();
            DigitalImage::new(1, Adjacency::Explicit(edges), (0..n as i64).map(Point::label)).unwrap()
        })
}

fn small_image(max: usize) -> impl Strategy<Value = Arc<DigitalImage>> {
    prop_oneof![lattice_image(max), graph_image(max)].prop_map(Arc::new)
}

/// A function between two random images, given by arbitrary value indices.
fn function(max: usize) -> impl Strategy<Value = DigitalFunction> {
    (small_image(max), small_image(max))
        .prop_flat_map(|(x, y)| {
            let values = prop::collection::vec(0..y.len(), x.len());
            (Just(x), Just(y), values)
        })
        .prop_map(|(x, y, v)| DigitalFunction::from_indices(x, y, v).unwrap())
}

/// A surjection `x → y` that deals a shuffled domain out over `y` in turn.
fn surjection_like(max: usize) -> impl Strategy<Value = DigitalFunction> {
    (small_image(max), small_image(max))
        .prop_filter("codomain no larger than domain", |(x, y)| y.len() <= x.len())
        .prop_flat_map(|(x, y)| {
            let perm = Just((0..x.len()).collect::<Vec<_>>()).prop_shuffle();
            (Just(x), Just(y), perm)
        })
        .prop_map(|(x, y, perm)| {
            let m = y.len();
            let values = perm.iter().map(|&p| p % m).collect();
            DigitalFunction::from_indices(x, y, values).unwrap()
        })
}

fn power_set_connected(img: &DigitalImage) -> BTreeSet<PointSet> {
    (1u64..(1 << img.len()))
        .filter(|&mask| img.is_connected_mask(mask))
        .map(|mask| (0..img.len()).filter(|i| mask >> i & 1 == 1).map(|i| img.point(i).clone()).collect())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn cu_is_symmetric_and_irreflexive((_dim, u, x, y) in (1usize..=4).prop_flat_map(|d| (Just(d), 1..=d, point(d), point(d)))) {
        prop_assert_eq!(cu_adjacent(&x, &y, u).unwrap(), cu_adjacent(&y, &x, u).unwrap());
        prop_assert!(!cu_adjacent(&x, &x, u).unwrap());
    }

    #[test]
    fn normal_product_of_cu_is_cu((m, n, x, y) in (1usize..=3, 1usize..=3).prop_flat_map(|(m, n)| (Just(m), Just(n), point(m + n), point(m + n)))) {
        let k = Adjacency::normal_product(Adjacency::Cu(m), m, Adjacency::Cu(n), n);
        prop_assert_eq!(k.adjacent(&x, &y).unwrap(), cu_adjacent(&x, &y, m + n).unwrap());
    }

    #[test]
    fn components_partition_the_image(img in small_image(8)) {
        let comps = img.connected_components();
        let mut seen = PointSet::new();
        for c in &comps {
            prop_assert!(!c.is_empty());
            prop_assert!(img.is_connected_subset(c).unwrap());
            for p in c {
                prop_assert!(seen.insert(p.clone()));
            }
        }
        prop_assert_eq!(seen.len(), img.len());
        for (i, a) in comps.iter().enumerate() {
            for b in &comps[i + 1..] {
                prop_assert!(!img.sets_adjacent(a, b).unwrap());
            }
        }
        prop_assert_eq!(img.is_connected(), comps.len() <= 1);
    }

    #[test]
    fn connected_subsets_match_power_set(img in small_image(8)) {
        let listed: Vec<PointSet> = img.connected_subsets(img.len()).collect();
        let as_set: BTreeSet<PointSet> = listed.iter().cloned().collect();
        prop_assert_eq!(listed.len(), as_set.len());
        prop_assert_eq!(as_set, power_set_connected(&img));
    }

    #[test]
    fn connected_subsets_respect_size_cap(img in small_image(7), cap in 1usize..4) {
        let capped: BTreeSet<PointSet> = img.connected_subsets(cap).collect();
        let expected: BTreeSet<PointSet> = power_set_connected(&img).into_iter().filter(|s| s.len() <= cap).collect();
        prop_assert_eq!(capped, expected);
    }

    #[test]
    fn continuity_agrees_with_oracle(f in function(6)) {
        prop_assert_eq!(f.is_continuous(), continuity_oracle(&f).unwrap());
    }

    #[test]
    fn shyness_agrees_with_oracles(f in surjection_like(6)) {
        if f.is_continuous() {
            let shy = f.is_shy();
            prop_assert_eq!(shy, shyness_oracle(&f).unwrap());
            let inverse = f.inverse_multifunction().unwrap();
            prop_assert_eq!(shy, inverse.is_connectivity_preserving());
            prop_assert_eq!(shy, connectivity_preserving_oracle(&inverse).unwrap());
        } else {
            prop_assert!(!f.is_shy());
        }
    }

    #[test]
    fn classification_is_consistent(f in function(6)) {
        let c = f.classify();
        prop_assert_eq!(c.continuous, f.is_continuous());
        prop_assert_eq!(c.surjective, f.is_surjective());
        if c.shy {
            prop_assert!(c.continuous && c.surjective);
        }
        if c.isomorphism {
            prop_assert!(c.injective && c.surjective && c.shy);
        }
        if c.shy && c.injective {
            prop_assert!(c.isomorphism);
        }
        match f.shyness() {
            Ok(()) => prop_assert!(c.shy),
            Err(e) => {
                prop_assert!(!c.shy);
                prop_assert!(["not-continuous", "not-surjective", "disconnected-preimage"].contains(&e.reason()));
            }
        }
    }

    #[test]
    fn identity_is_an_isomorphism(img in small_image(7)) {
        let id = DigitalFunction::identity(img);
        prop_assert!(id.is_isomorphism() && id.is_shy());
    }

    #[test]
    fn composition_of_shy_maps_is_shy(f in surjection_like(5), seed in prop::collection::vec(any::<usize>(), 5)) {
        // A second map out of f's codomain onto a prefix of its own points.
        let y = f.codomain().clone();
        let m = 1 + seed[0] % y.len();
        let z = Arc::new(y.restrict(&y.points()[..m].iter().cloned().collect()).unwrap());
        let values: Vec<usize> = (0..y.len()).map(|i| if i < m { i } else { seed[i % seed.len()] % m }).collect();
        let g = DigitalFunction::from_indices(y, z, values).unwrap();
        let gf = compose(&g, &f).unwrap();
        if f.is_shy() && g.is_shy() {
            prop_assert!(gf.is_shy());
        }
        if f.is_continuous() && g.is_continuous() {
            prop_assert!(gf.is_continuous());
        }
    }

    #[test]
    fn product_maps_inherit_continuity_and_surjectivity(f in function(3), g in function(3)) {
        let dom = Arc::new(product_image(f.domain(), g.domain()));
        let cod = Arc::new(product_image(f.codomain(), g.codomain()));
        let fg = product_map_between(&f, &g, &dom, &cod).unwrap();
        prop_assert_eq!(fg.is_continuous(), f.is_continuous() && g.is_continuous());
        prop_assert_eq!(fg.is_surjective(), f.is_surjective() && g.is_surjective());
        if f.is_continuous() && f.is_surjective() && g.is_continuous() && g.is_surjective() {
            prop_assert_eq!(fg.is_shy(), f.is_shy() && g.is_shy());
        }
    }
}
