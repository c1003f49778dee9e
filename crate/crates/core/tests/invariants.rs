use std::collections::{BTreeSet, HashSet};

use gnomon::{
    brute_force_primitive_triples, count_partitions, enumerate_partitions,
    enumerate_triples_by_side, euclid_triple, euclid_triples_by_side, factor_even_side, gcd,
    mn_from_partition, partition_from_mn, triple_from_partition, BigUint, MnPair, Partition,
    PrimitiveTriple,
};
use num_integer::Integer;
use num_traits::One;

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

/// Distinct odd primes of `s`, by plain trial division.
fn distinct_odd_primes(mut s: u64) -> u32 {
    while s % 2 == 0 {
        s /= 2;
    }
    let mut r = 0;
    let mut p = 3;
    while s > 1 {
        if s % p == 0 {
            r += 1;
            while s % p == 0 {
                s /= p;
            }
        }
        p += 2;
    }
    r
}

#[test]
fn partitions_of_every_side_give_primitive_euclid_triples() {
    for s in (2..=10_000u64).step_by(2) {
        let f = factor_even_side(&big(s)).unwrap();
        let parts = enumerate_partitions(&f);
        let r = distinct_odd_primes(s);
        assert_eq!(parts.len(), 1 << r, "s = {s}");
        assert_eq!(count_partitions(&f), big(1 << r));

        for p in &parts {
            assert_eq!(p.s(), &big(s));
            assert!(p.l().is_odd());
            assert!(gcd(p.t(), p.l()).is_one());

            let tr = triple_from_partition(p);
            assert!(tr.x().is_odd() && tr.y().is_even() && tr.z().is_odd());
            assert!(gcd(&gcd(tr.x(), tr.y()), tr.z()).is_one());
            assert_eq!(tr, euclid_triple(&mn_from_partition(p)));
            assert_eq!(&partition_from_mn(&mn_from_partition(p)), p);
        }
    }
}

#[test]
fn mn_pairs_round_trip_up_to_500() {
    for m in 2..=500u64 {
        for n in 1..m {
            let Ok(mn) = MnPair::new(m, n) else { continue };
            assert_eq!(mn_from_partition(&partition_from_mn(&mn)), mn);
        }
    }
}

#[test]
fn summed_squares_identity_up_to_300() {
    for t in 1..=300u64 {
        for l in (1..=300u64).step_by(2) {
            if t.gcd(&l) != 1 {
                continue;
            }
            let tr = triple_from_partition(&Partition::new(t, l).unwrap());
            let lhs_x = big(2 * t * l + l * l);
            let lhs_y = big(2 * t * l + 2 * t * t);
            let rhs_z = big(2 * t * l + 2 * t * t + l * l);
            assert_eq!(&lhs_x * &lhs_x + &lhs_y * &lhs_y, &rhs_z * &rhs_z);
            assert_eq!((tr.x(), tr.y(), tr.z()), (&lhs_x, &lhs_y, &rhs_z));
        }
    }
}

#[test]
fn construction_by_side_matches_euclid_enumeration() {
    let bound = 1000u64;
    let constructed: Vec<PrimitiveTriple> = enumerate_triples_by_side(2 * bound)
        .map(|g| g.triple)
        .collect();
    let unique: BTreeSet<_> = constructed.iter().cloned().collect();
    assert_eq!(unique.len(), constructed.len(), "a triple appeared twice");
    let euclid: BTreeSet<_> = euclid_triples_by_side(2 * bound).into_iter().collect();
    assert_eq!(unique, euclid);
}

#[test]
fn construction_matches_brute_force_up_to_500() {
    let z_max = 500u64;
    let brute = brute_force_primitive_triples(z_max);
    let mut seen = HashSet::new();
    let mut constructed: Vec<_> = enumerate_triples_by_side(2 * z_max)
        .map(|g| g.triple)
        .filter(|tr| tr.z() <= &big(z_max))
        .inspect(|tr| assert!(seen.insert(tr.clone()), "duplicate {tr:?}"))
        .collect();
    constructed.sort();
    assert_eq!(constructed, brute);
}
