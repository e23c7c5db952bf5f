//! Invariants checked against brute force: exhaustively for small rings,
//! by seeded sampling above that. Set `NTG_SEED` to vary the sample.

use ntg_core::arith::{gcd, prime_powers_in};
use ntg_core::graph::build_graph;
use ntg_core::ring::{has_nth_root_of_minus_one, nth_power_subgroup, nth_root_count};
use ntg_core::structure::decompose;
use ntg_core::{
    ComponentClass, Elem, IdealDescriptor, IdealUnion, Ring, RingDescriptor, Side, StructureReport,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EXHAUSTIVE: u64 = 512;

fn seed() -> u64 {
    std::env::var("NTG_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(0x6e74_6721)
}

fn field(m: u64) -> Ring {
    Ring::field_of_order(m).unwrap()
}

fn zero_ideal(ring: &Ring) -> IdealUnion {
    let k = ring.factors().len();
    let positions: Vec<usize> = (0..k).collect();
    IdealUnion::new(ring, &IdealDescriptor::coordinate_zeros(&positions)).unwrap()
}

fn subgroup_size_holds(m: u64, n: u32) -> bool {
    let f = field(m);
    let d = gcd(n as u64, m - 1);
    nth_power_subgroup(&f, n).unwrap().len() as u64 == (m - 1) / d
}

#[test]
fn nth_power_subgroup_size_exhaustive() {
    for m in prime_powers_in(2, EXHAUSTIVE) {
        for n in 1..=16 {
            assert!(subgroup_size_holds(m, n), "m={m} n={n}");
        }
    }
}

#[test]
fn nth_power_subgroup_size_sampled() {
    let mut rng = ChaCha8Rng::seed_from_u64(seed());
    let orders: Vec<u64> = prime_powers_in(EXHAUSTIVE + 1, 4096).collect();
    for _ in 0..12 {
        let m = orders[rng.random_range(0..orders.len())];
        let n = rng.random_range(1..=64);
        assert!(subgroup_size_holds(m, n), "m={m} n={n} seed={}", seed());
    }
}

#[test]
fn root_counts_are_zero_or_d() {
    for m in prime_powers_in(2, 128) {
        let f = field(m);
        for n in 1..=8 {
            let d = gcd(n as u64, m - 1) as usize;
            for a in 1..f.order() {
                let c = nth_root_count(&f, a, n).unwrap();
                assert!(c == 0 || c == d, "m={m} n={n} a={a}: {c} roots");
            }
        }
    }
}

/// Expected field structure computed from `m` and `n` alone.
fn field_shape(m: u64, n: u32) -> (Side, Vec<(ComponentClass, usize)>) {
    let d = gcd(n as u64, m - 1) as u32;
    let alpha = ((m - 1) / d as u64) as usize;
    if m.is_multiple_of(2) {
        // from_classes normalizes K_1 and K_2
        (Side::Whole, vec![(ComponentClass::Complete(d), alpha), (ComponentClass::Isolated, 1)])
    } else if alpha % 2 == 1 {
        (Side::Complement, vec![(ComponentClass::Isolated, m as usize - 1)])
    } else {
        (Side::Complement, vec![(ComponentClass::CompleteBipartite(d, d), alpha / 2)])
    }
}

#[test]
fn field_structure_matches_closed_form() {
    for m in prime_powers_in(2, 256) {
        let f = field(m);
        let zero = zero_ideal(&f);
        for n in 1..=12 {
            let (side, classes) = field_shape(m, n);
            let g = build_graph(&f, &zero, n).unwrap().induced_subgraph(side);
            let expected = StructureReport::from_classes(classes).unwrap();
            assert_eq!(decompose(&g), expected, "m={m} n={n}");
        }
    }
}

fn small_rings() -> Vec<Ring> {
    let mut out: Vec<Ring> = prime_powers_in(2, 27).map(field).collect();
    for s in [
        "prod(Fp:2,Fp:2)",
        "prod(Fp:2,Fp:3)",
        "prod(Fp:3,Fp:5)",
        "prod(Fp:2,Fp:2,Fp:3)",
        "prod(Fq:2:2,Fp:3)",
        "prod(Fp:3,Fp:7)",
        "prod(Fp:5,Fp:5)",
    ] {
        out.push(Ring::from_descriptor(&s.parse().unwrap()).unwrap());
    }
    out
}

fn unions(ring: &Ring) -> Vec<IdealUnion> {
    IdealDescriptor::all_coordinate_unions(ring.factors().len())
        .iter()
        .map(|d| IdealUnion::new(ring, d).unwrap())
        .collect()
}

fn adjacent(ring: &Ring, d: &IdealUnion, n: u32, x: Elem, y: Elem) -> bool {
    x != y && d.contains(ring.add(ring.pow(x, n).unwrap(), ring.pow(y, n).unwrap()))
}

#[test]
fn graph_matches_definition() {
    for ring in small_rings() {
        for d in unions(&ring) {
            for n in 1..=4 {
                let g = build_graph(&ring, &d, n).unwrap();
                for i in 0..g.order() {
                    for j in 0..g.order() {
                        let (x, y) = (g.vertex(i), g.vertex(j));
                        assert_eq!(g.is_adjacent(i, j), adjacent(&ring, &d, n, x, y));
                        assert_eq!(g.is_adjacent(i, j), g.is_adjacent(j, i));
                    }
                }
            }
        }
    }
}

#[test]
fn unit_scaling_is_an_automorphism_for_ideals() {
    for ring in small_rings() {
        for d in unions(&ring).into_iter().filter(|d| d.is_ideal(&ring)) {
            for n in 1..=3 {
                let units: Vec<Elem> = ring.elements().filter(|&c| ring.inverse(c).is_some()).collect();
                for &c in &units {
                    for x in ring.elements() {
                        for y in ring.elements() {
                            let (cx, cy) = (ring.mul(c, x), ring.mul(c, y));
                            assert_eq!(adjacent(&ring, &d, n, x, y), adjacent(&ring, &d, n, cx, cy));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn d_side_connected_and_complete_iff_ideal() {
    for ring in small_rings() {
        for d in unions(&ring) {
            for n in 1..=6 {
                let g = build_graph(&ring, &d, n).unwrap().induced_subgraph(Side::D);
                assert!(g.is_connected(), "{ring} D={d} n={n}");
                assert_eq!(g.is_complete(), d.is_ideal(&ring), "{ring} D={d} n={n}");
            }
        }
    }
}

fn has_cross_edge(ring: &Ring, d: &IdealUnion, n: u32) -> bool {
    let inside: Vec<Elem> = ring.elements().filter(|&x| d.contains(x)).collect();
    let outside: Vec<Elem> = ring.elements().filter(|&x| !d.contains(x)).collect();
    inside
        .iter()
        .any(|&x| outside.iter().any(|&y| adjacent(ring, d, n, x, y)))
}

#[test]
fn cross_edges_follow_ideal_status() {
    for ring in small_rings() {
        for d in unions(&ring) {
            for n in 1..=6 {
                let cross = has_cross_edge(&ring, &d, n);
                if d.is_ideal(&ring) {
                    assert!(!cross, "{ring} D={d} n={n}");
                } else if n % 2 == 1 || has_nth_root_of_minus_one(&ring, n).is_some() {
                    assert!(cross, "{ring} D={d} n={n}");
                }
            }
        }
    }
}

#[test]
fn reports_reassemble_from_classes() {
    for ring in small_rings() {
        for d in unions(&ring) {
            for n in 1..=4 {
                for side in [Side::Whole, Side::D, Side::Complement] {
                    let g = build_graph(&ring, &d, n).unwrap().induced_subgraph(side);
                    let r = decompose(&g);
                    assert_eq!(r.vertex_count(), g.order() as u64);
                    if let Some(again) = StructureReport::from_classes(r.classes.clone()) {
                        assert_eq!(r, again, "{ring} D={d} n={n} {side}");
                    }
                }
            }
        }
    }
}

fn descriptor() -> impl Strategy<Value = String> {
    let factor = prop_oneof![
        prop::sample::select(vec![2u32, 3, 5, 7, 11, 13]).prop_map(|p| format!("Fp:{p}")),
        (prop::sample::select(vec![2u32, 3]), 2u32..=3).prop_map(|(p, k)| format!("Fq:{p}:{k}")),
    ];
    prop_oneof![
        factor.clone(),
        prop::collection::vec(factor, 2..=3).prop_map(|fs| format!("prod({})", fs.join(","))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { rng_seed: prop::test_runner::RngSeed::Fixed(seed()), ..ProptestConfig::default() })]

    #[test]
    fn descriptors_round_trip(s in descriptor()) {
        let d: RingDescriptor = s.parse().unwrap();
        prop_assert_eq!(d.to_string().parse::<RingDescriptor>().unwrap(), d);
    }

    #[test]
    fn elements_round_trip(s in descriptor(), pick in any::<u32>()) {
        let ring = Ring::from_descriptor(&s.parse().unwrap()).unwrap();
        let a = pick % ring.order();
        prop_assert_eq!(ring.from_coordinates(&ring.coordinates(a)).unwrap(), a);
        prop_assert_eq!(ring.parse_label(&ring.label(a)), Some(a));
    }

    #[test]
    fn tables_agree_with_direct_arithmetic(s in descriptor(), a in any::<u32>(), b in any::<u32>(), n in 1u32..20) {
        let ring = Ring::from_descriptor(&s.parse().unwrap()).unwrap();
        let plain = ring.without_tables();
        let (a, b) = (a % ring.order(), b % ring.order());
        prop_assert_eq!(ring.add(a, b), plain.add(a, b));
        prop_assert_eq!(ring.mul(a, b), plain.mul(a, b));
        prop_assert_eq!(ring.pow(a, n).unwrap(), plain.pow(a, n).unwrap());
    }

    #[test]
    fn ring_axioms(s in descriptor(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let r = Ring::from_descriptor(&s.parse().unwrap()).unwrap();
        let (a, b, c) = (a % r.order(), b % r.order(), c % r.order());
        prop_assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
        prop_assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
        prop_assert_eq!(r.add(a, r.neg(a)), r.zero());
        if let Some(inv) = r.inverse(a) {
            prop_assert_eq!(r.mul(a, inv), r.one());
        }
    }

    #[test]
    fn sides_partition_vertices(s in descriptor(), n in 1u32..8) {
        let ring = Ring::from_descriptor(&s.parse().unwrap()).unwrap();
        prop_assume!(ring.order() <= 200);
        let d = zero_ideal(&ring);
        let g = build_graph(&ring, &d, n).unwrap();
        let inside = g.induced_subgraph(Side::D);
        let outside = g.induced_subgraph(Side::Complement);
        prop_assert_eq!(inside.order() + outside.order(), g.order());
        prop_assert!(inside.vertices().iter().all(|&x| d.contains(x)));
        prop_assert!(outside.vertices().iter().all(|&x| !d.contains(x)));
    }
}
