//! The generating-square construction.
//!
//! An even side `s` is split as `s = 2·t·l` with `l` odd and `gcd(t, l) = 1`.
//! Each such split yields one primitive triple:
//!
//! ```text
//! x = 2tl + l²        (inner square)
//! y = 2t(l + t)       (square built on s plus gnomon T of thickness 2t²)
//! z = 2tl + 2t² + l²  (side of gnomon U = gnomon T lengthened by l²)
//! ```
//!
//! and the classical parameters are `m = l + t`, `n = t`.

mod stream;

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numtheory::Factorization;

pub use stream::{Generated, TripleStream};

/// A split `s = 2·t·l` of the generating side.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    t: BigUint,
    l: BigUint,
    s: BigUint,
}

impl Partition {
    /// Validates `t >= 1`, `l` odd and `gcd(t, l) = 1`; the side is `2tl`.
    pub fn new(t: impl Into<BigUint>, l: impl Into<BigUint>) -> Result<Self> {
        let (t, l) = (t.into(), l.into());
        if t.is_zero() {
            return Err(Error::InvalidPartition("t must be positive".into()));
        }
        if l.is_even() {
            return Err(Error::InvalidPartition(format!("l = {l} must be odd")));
        }
        if !t.gcd(&l).is_one() {
            return Err(Error::InvalidPartition(format!(
                "t = {t} and l = {l} are not coprime"
            )));
        }
        let s = (&t * &l) << 1u32;
        Ok(Self { t, l, s })
    }

    pub(crate) fn new_unchecked(t: BigUint, l: BigUint) -> Self {
        let s = (&t * &l) << 1u32;
        Self { t, l, s }
    }

    pub fn t(&self) -> &BigUint {
        &self.t
    }

    pub fn l(&self) -> &BigUint {
        &self.l
    }

    /// The generating side `2tl`.
    pub fn s(&self) -> &BigUint {
        &self.s
    }
}

/// A primitive triple stored odd leg first: `x` odd, `y` even, `z` odd.
///
/// Ordered by hypotenuse, then odd leg.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimitiveTriple {
    x: BigUint,
    y: BigUint,
    z: BigUint,
}

impl PrimitiveTriple {
    pub fn new(
        x: impl Into<BigUint>,
        y: impl Into<BigUint>,
        z: impl Into<BigUint>,
    ) -> Result<Self> {
        let (x, y, z) = (x.into(), y.into(), z.into());
        if x.is_even() {
            return Err(Error::InvalidTriple(format!("x = {x} must be odd")));
        }
        if y.is_odd() || y.is_zero() {
            return Err(Error::InvalidTriple(format!(
                "y = {y} must be positive and even"
            )));
        }
        if &x * &x + &y * &y != &z * &z {
            return Err(Error::InvalidTriple(format!("{x}^2 + {y}^2 != {z}^2")));
        }
        // Any common factor of two sides divides the third.
        if !x.gcd(&y).is_one() {
            return Err(Error::InvalidTriple(format!(
                "({x}, {y}, {z}) is not primitive"
            )));
        }
        Ok(Self { x, y, z })
    }

    /// Accepts the legs in either order and stores the odd one first.
    pub fn from_legs(
        a: impl Into<BigUint>,
        b: impl Into<BigUint>,
        c: impl Into<BigUint>,
    ) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        if a.is_odd() {
            Self::new(a, b, c)
        } else {
            Self::new(b, a, c)
        }
    }

    pub(crate) fn new_unchecked(x: BigUint, y: BigUint, z: BigUint) -> Self {
        debug_assert!(x.is_odd() && y.is_even() && &x * &x + &y * &y == &z * &z);
        Self { x, y, z }
    }

    pub fn x(&self) -> &BigUint {
        &self.x
    }

    pub fn y(&self) -> &BigUint {
        &self.y
    }

    pub fn z(&self) -> &BigUint {
        &self.z
    }
}

impl Ord for PrimitiveTriple {
    fn cmp(&self, other: &Self) -> Ordering {
        self.z
            .cmp(&other.z)
            .then_with(|| self.x.cmp(&other.x))
            .then_with(|| self.y.cmp(&other.y))
    }
}

impl PartialOrd for PrimitiveTriple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Classical parameters: `m > n >= 1`, coprime, opposite parity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MnPair {
    m: BigUint,
    n: BigUint,
}

impl MnPair {
    pub fn new(m: impl Into<BigUint>, n: impl Into<BigUint>) -> Result<Self> {
        let (m, n) = (m.into(), n.into());
        if n.is_zero() || m <= n {
            return Err(Error::InvalidParameters(format!(
                "need m > n >= 1, got m = {m}, n = {n}"
            )));
        }
        if m.is_odd() == n.is_odd() {
            return Err(Error::InvalidParameters(format!(
                "m = {m} and n = {n} must have opposite parity"
            )));
        }
        if !m.gcd(&n).is_one() {
            return Err(Error::InvalidParameters(format!(
                "m = {m} and n = {n} must be coprime"
            )));
        }
        Ok(Self { m, n })
    }

    pub fn m(&self) -> &BigUint {
        &self.m
    }

    pub fn n(&self) -> &BigUint {
        &self.n
    }
}

/// Side lengths and areas of the construction for one partition.
///
/// Square `s` plus gnomon T (thickness `2t²`) fills square `y`. Half of
/// `s²` is a `2t² × l²` rectangle; the two such rectangles extend the arms
/// of T by `l²`, giving gnomon U with outer side `z` around square `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GnomonDecomposition {
    pub s: BigUint,
    pub t: BigUint,
    pub l: BigUint,
    pub y_side: BigUint,
    pub gnomon_t_thickness: BigUint,
    pub gnomon_u_side: BigUint,
    pub gnomon_u_thickness: BigUint,
    pub inner_side: BigUint,
    /// Width and height of each of the two filler rectangles: `(2t², l²)`.
    pub rectangle_dims: (BigUint, BigUint),
    pub area_gnomon_t: BigUint,
    pub area_rectangles: BigUint,
    pub area_gnomon_u: BigUint,
}

impl GnomonDecomposition {
    /// Checks every area and side relation exactly.
    pub fn is_consistent(&self) -> bool {
        let sq = |v: &BigUint| v * v;
        let (w, h) = &self.rectangle_dims;
        self.s == (&self.t * &self.l) << 1u32
            && self.y_side == &self.s + &self.gnomon_t_thickness
            && self.gnomon_u_side == &self.y_side + h
            && self.gnomon_u_thickness == self.gnomon_t_thickness
            && *w == self.gnomon_t_thickness
            && &self.inner_side + &self.gnomon_u_thickness == self.gnomon_u_side
            && self.area_rectangles == (w * h) << 1u32
            && self.area_rectangles == sq(&self.s)
            && &self.area_gnomon_t + &self.area_rectangles == self.area_gnomon_u
            && self.area_gnomon_u == sq(&self.y_side)
            && sq(&self.gnomon_u_side) - sq(&self.inner_side) == self.area_gnomon_u
            && self.gnomon_u_side.is_odd()
    }
}

/// Lazily walks the `2^r` partitions of a factorization in subset-bitmask
/// order: bit `i` moves the `i`-th odd prime power (ascending) into `t`.
#[derive(Debug, Clone)]
pub struct Partitions {
    even_share: BigUint,
    blocks: Vec<BigUint>,
    next_mask: u128,
    end_mask: u128,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.next_mask >= self.end_mask {
            return None;
        }
        let mask = self.next_mask;
        self.next_mask += 1;

        let mut t = self.even_share.clone();
        let mut l = BigUint::one();
        for (i, block) in self.blocks.iter().enumerate() {
            if mask >> i & 1 == 1 {
                t *= block;
            } else {
                l *= block;
            }
        }
        Some(Partition::new_unchecked(t, l))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.end_mask - self.next_mask).ok();
        (left.unwrap_or(usize::MAX), left)
    }
}

/// Iterator form of [`enumerate_partitions`].
///
/// # Panics
///
/// If the side has 128 or more distinct odd primes.
pub fn partitions(f: &Factorization) -> Partitions {
    let r = f.odd_prime_count();
    assert!(r < 128, "{r} odd primes give too many partitions to walk");
    Partitions {
        even_share: f.even_share(),
        blocks: f.odd_primes().iter().map(|p| p.value()).collect(),
        next_mask: 0,
        end_mask: 1u128 << r,
    }
}

/// All partitions of the side, prime powers kept whole, empty subset first.
pub fn enumerate_partitions(f: &Factorization) -> Vec<Partition> {
    partitions(f).collect()
}

/// `L(S) = 2^r`.
pub fn count_partitions(f: &Factorization) -> BigUint {
    BigUint::one() << f.odd_prime_count()
}

pub fn triple_from_partition(p: &Partition) -> PrimitiveTriple {
    let (t, l) = (&p.t, &p.l);
    let two_tl = &p.s;
    let l_sq = l * l;
    let two_t_sq = (t * t) << 1u32;

    let x = two_tl + &l_sq;
    let y = (t * (l + t)) << 1u32;
    let z = two_tl + &two_t_sq + &l_sq;
    PrimitiveTriple::new_unchecked(x, y, z)
}

pub fn mn_from_partition(p: &Partition) -> MnPair {
    let m = &p.l + &p.t;
    let n = p.t.clone();
    debug_assert!(m.gcd(&n).is_one() && m.is_odd() != n.is_odd());
    MnPair { m, n }
}

/// Inverse of [`mn_from_partition`]: `t = n`, `l = m - n`.
pub fn partition_from_mn(mn: &MnPair) -> Partition {
    Partition::new_unchecked(mn.n.clone(), &mn.m - &mn.n)
}

pub fn gnomon_decomposition(p: &Partition) -> GnomonDecomposition {
    let (s, t, l) = (&p.s, &p.t, &p.l);
    let thickness = (t * t) << 1u32;
    let l_sq = l * l;
    let y_side = s + &thickness;
    let gnomon_u_side = &y_side + &l_sq;
    let inner_side = s + &l_sq;

    let area_gnomon_u = &y_side * &y_side;
    let area_rectangles = (&thickness * &l_sq) << 1u32;
    let area_gnomon_t = &area_gnomon_u - s * s;

    GnomonDecomposition {
        s: s.clone(),
        t: t.clone(),
        l: l.clone(),
        y_side,
        gnomon_t_thickness: thickness.clone(),
        gnomon_u_side,
        gnomon_u_thickness: thickness.clone(),
        inner_side,
        rectangle_dims: (thickness, l_sq),
        area_gnomon_t,
        area_rectangles,
        area_gnomon_u,
    }
}

/// Every `(partition, triple, (m, n))` for even sides `2, 4, ..., s_max`,
/// generated lazily.
pub fn enumerate_triples_by_side(s_max: u64) -> TripleStream {
    TripleStream::new(s_max)
}

/// Area of the unit-step gnomon that grows a square of side `side` into
/// one of side `side + 1`: `2·side + 1`.
pub fn gnomon_ring_width(side: &BigUint) -> BigUint {
    (side << 1u32) + 1u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::factor_even_side;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn part(t: u64, l: u64) -> Partition {
        Partition::new(t, l).unwrap()
    }

    fn triple(x: u64, y: u64, z: u64) -> PrimitiveTriple {
        PrimitiveTriple::new(x, y, z).unwrap()
    }

    fn partitions_of(s: u64) -> Vec<Partition> {
        enumerate_partitions(&factor_even_side(&big(s)).unwrap())
    }

    /// Independent oracle: every divisor pair `t * l = s / 2` with `l` odd
    /// and `gcd(t, l) = 1`, as `(t, l)` sorted by `t`.
    fn divisor_pair_oracle(s: u64) -> Vec<(u64, u64)> {
        let half = s / 2;
        let mut pairs: Vec<(u64, u64)> = (1..=half)
            .filter(|t| half % t == 0)
            .map(|t| (t, half / t))
            .filter(|&(t, l)| l % 2 == 1 && t.gcd(&l) == 1)
            .collect();
        pairs.sort();
        pairs
    }

    fn as_pairs(ps: &[Partition]) -> Vec<(u64, u64)> {
        ps.iter()
            .map(|p| (u64::try_from(p.t()).unwrap(), u64::try_from(p.l()).unwrap()))
            .collect()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(0u32, 1u32).is_err());
        assert!(Partition::new(1u32, 2u32).is_err());
        assert!(Partition::new(3u32, 3u32).is_err());
        assert_eq!(part(2, 3).s(), &big(12));
    }

    #[test]
    fn enumerates_partitions_in_bitmask_order() {
        assert_eq!(as_pairs(&partitions_of(2)), vec![(1, 1)]);
        assert_eq!(as_pairs(&partitions_of(12)), vec![(2, 3), (6, 1)]);
        assert_eq!(
            as_pairs(&partitions_of(30)),
            vec![(1, 15), (3, 5), (5, 3), (15, 1)]
        );
        assert_eq!(as_pairs(&partitions_of(18)), vec![(1, 9), (9, 1)]);
        for s in [2u64, 12, 30, 18] {
            for p in partitions_of(s) {
                assert_eq!(p.s(), &big(s));
            }
        }
    }

    #[test]
    fn enumeration_matches_divisor_pair_oracle() {
        for s in (2..=3000u64).step_by(2) {
            let mut got = as_pairs(&partitions_of(s));
            got.sort();
            assert_eq!(got, divisor_pair_oracle(s), "s = {s}");
        }
    }

    #[test]
    fn counts_partitions() {
        let count = |s: u64| count_partitions(&factor_even_side(&big(s)).unwrap());
        assert_eq!(count(2), big(1));
        assert_eq!(count(30), big(4));
        assert_eq!(count(210), big(8));
        assert_eq!(divisor_pair_oracle(210).len(), 8);
        assert_eq!(count(1024), big(1));
    }

    #[test]
    fn t_is_odd_exactly_when_side_is_two_mod_four() {
        for s in (2..=10_000u64).step_by(2) {
            for p in partitions_of(s) {
                assert_eq!(p.t().is_odd(), s % 4 == 2, "s = {s}");
            }
        }
    }

    #[test]
    fn triples_from_partitions() {
        assert_eq!(triple_from_partition(&part(1, 1)), triple(3, 4, 5));
        assert_eq!(triple_from_partition(&part(2, 3)), triple(21, 20, 29));
        assert_eq!(triple_from_partition(&part(6, 1)), triple(13, 84, 85));
        assert_eq!(triple_from_partition(&part(15, 1)), triple(31, 480, 481));
    }

    #[test]
    fn mn_correspondence() {
        let mn = |p: &Partition| {
            let mn = mn_from_partition(p);
            (
                u64::try_from(mn.m()).unwrap(),
                u64::try_from(mn.n()).unwrap(),
            )
        };
        assert_eq!(mn(&part(1, 1)), (2, 1));
        assert_eq!(mn(&part(2, 3)), (5, 2));
        assert_eq!(mn(&part(6, 1)), (7, 6));

        let back = |m: u64, n: u64| partition_from_mn(&MnPair::new(m, n).unwrap());
        assert_eq!(back(2, 1), part(1, 1));
        assert_eq!(back(5, 2), part(2, 3));
        assert_eq!(back(8, 3), part(3, 5));
        assert_eq!(back(8, 3).s(), &big(30));
        assert!(partitions_of(30).contains(&back(8, 3)));
    }

    #[test]
    fn mn_pair_validation() {
        assert!(MnPair::new(1u32, 1u32).is_err());
        assert!(MnPair::new(1u32, 2u32).is_err());
        assert!(MnPair::new(3u32, 1u32).is_err());
        assert!(MnPair::new(9u32, 6u32).is_err());
        assert!(MnPair::new(1u32, 0u32).is_err());
        assert!(MnPair::new(2u32, 1u32).is_ok());
    }

    #[test]
    fn triple_validation() {
        assert!(PrimitiveTriple::new(4u32, 3u32, 5u32).is_err());
        assert!(PrimitiveTriple::new(9u32, 12u32, 15u32).is_err());
        assert!(PrimitiveTriple::new(3u32, 4u32, 6u32).is_err());
        assert_eq!(
            PrimitiveTriple::from_legs(20u32, 21u32, 29u32).unwrap(),
            triple(21, 20, 29)
        );
    }

    #[test]
    fn gnomon_decomposition_examples() {
        let d = gnomon_decomposition(&part(1, 1));
        assert_eq!(d.y_side, big(4));
        assert_eq!(d.gnomon_u_side, big(5));
        assert_eq!(d.gnomon_u_thickness, big(2));
        assert_eq!(d.gnomon_t_thickness, big(2));
        assert_eq!(d.inner_side, big(3));
        assert_eq!(d.rectangle_dims, (big(2), big(1)));
        assert_eq!(d.area_gnomon_t, big(12));
        assert_eq!(d.area_rectangles, big(4));
        assert_eq!(d.area_gnomon_u, big(16));
        assert!(d.is_consistent());

        let d = gnomon_decomposition(&part(2, 3));
        assert_eq!(d.y_side, big(20));
        assert_eq!(d.gnomon_u_side, big(29));
        assert_eq!(d.gnomon_u_thickness, big(8));
        assert_eq!(d.inner_side, big(21));
        assert_eq!(d.rectangle_dims, (big(8), big(9)));
        assert_eq!(d.area_gnomon_t, big(256));
        assert_eq!(d.area_rectangles, big(144));
        assert_eq!(d.area_gnomon_u, big(400));
        assert!(d.is_consistent());
    }

    #[test]
    fn decomposition_agrees_with_triple() {
        for s in (2..=2000u64).step_by(2) {
            for p in partitions_of(s) {
                let d = gnomon_decomposition(&p);
                let tr = triple_from_partition(&p);
                assert!(d.is_consistent(), "{p:?}");
                assert_eq!(&d.inner_side, tr.x());
                assert_eq!(&d.y_side, tr.y());
                assert_eq!(&d.gnomon_u_side, tr.z());
            }
        }
    }

    #[test]
    fn ring_widths() {
        for (side, width) in [(1u64, 3u64), (3, 7), (10, 21)] {
            assert_eq!(gnomon_ring_width(&big(side)), big(width));
            assert_eq!(big((side + 1) * (side + 1) - side * side), big(width));
        }
    }

    #[test]
    fn triples_by_side_are_distinct() {
        let all: Vec<_> = enumerate_triples_by_side(12).collect();
        // 2 -> 1, 4 -> 1, 6 -> 2, 8 -> 1, 10 -> 2, 12 -> 2
        let expected_len: usize = (2..=12u64).step_by(2).map(|s| partitions_of(s).len()).sum();
        assert_eq!(expected_len, 9);
        assert_eq!(all.len(), expected_len);
        let distinct: HashSet<_> = all.iter().map(|g| g.triple.clone()).collect();
        assert_eq!(distinct.len(), all.len());
    }

    proptest! {
        #[test]
        fn summed_squares_identity(t in 1u64..100_000, l in 1u64..100_000) {
            let l = l | 1;
            prop_assume!(t.gcd(&l) == 1);
            let p = part(t, l);
            let tr = triple_from_partition(&p);
            let (t, l) = (big(t), big(l));
            let x = ((&t * &l) << 1u32) + &l * &l;
            let y = ((&t * &l) << 1u32) + ((&t * &t) << 1u32);
            let z = &y + &l * &l;
            prop_assert_eq!(&x * &x + &y * &y, &z * &z);
            prop_assert_eq!((tr.x(), tr.y(), tr.z()), (&x, &y, &z));
        }

        #[test]
        fn mn_round_trips(m in 2u64..5000, n in 1u64..5000) {
            prop_assume!(n < m);
            if let Ok(mn) = MnPair::new(m, n) {
                let p = partition_from_mn(&mn);
                prop_assert!(Partition::new(p.t().clone(), p.l().clone()).is_ok());
                prop_assert_eq!(mn_from_partition(&p), mn);
            }
        }
    }
}
