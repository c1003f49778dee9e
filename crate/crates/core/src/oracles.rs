//! Classical generators (Pythagoras, Plato, Euclid) and the unit-circle map.
//!
//! None of these go through partitions; they are the independent side of
//! every cross-check against the construction.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::construction::{MnPair, PrimitiveTriple};
use crate::error::{Error, Result};

/// A point with positive rational coordinates on `x² + y² = 1`, both
/// fractions in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    x: Ratio<BigUint>,
    y: Ratio<BigUint>,
}

impl RationalPoint {
    pub fn x(&self) -> &Ratio<BigUint> {
        &self.x
    }

    pub fn y(&self) -> &Ratio<BigUint> {
        &self.y
    }

    pub fn x_num(&self) -> &BigUint {
        self.x.numer()
    }

    pub fn x_den(&self) -> &BigUint {
        self.x.denom()
    }

    pub fn y_num(&self) -> &BigUint {
        self.y.numer()
    }

    pub fn y_den(&self) -> &BigUint {
        self.y.denom()
    }

    pub fn is_on_unit_circle(&self) -> bool {
        &self.x * &self.x + &self.y * &self.y == Ratio::one()
    }
}

/// `(m² - n², 2mn, m² + n²)`.
pub fn euclid_triple(mn: &MnPair) -> PrimitiveTriple {
    let (m, n) = (mn.m(), mn.n());
    let m_sq = m * m;
    let n_sq = n * n;
    PrimitiveTriple::new(&m_sq - &n_sq, (m * n) << 1u32, &m_sq + &n_sq)
        .expect("valid (m, n) always gives a primitive triple")
}

/// `(2k + 1, 2k(k + 1), 2k(k + 1) + 1)`: the even leg and hypotenuse are
/// consecutive.
pub fn pythagoras_family(k: &BigUint) -> Result<PrimitiveTriple> {
    if k.is_zero() {
        return Err(Error::OutOfRange {
            what: "Pythagoras index k (must be at least 1)",
            value: k.clone(),
        });
    }
    let even = (k * (k + 1u32)) << 1u32;
    Ok(PrimitiveTriple::new_unchecked(
        (k << 1u32) + 1u32,
        even.clone(),
        even + 1u32,
    ))
}

/// `(m² - 1, 2m, m² + 1)` for even `m`; the odd leg and hypotenuse are
/// consecutive odd numbers. Odd `m` would give a common factor of 2.
pub fn plato_family(m: &BigUint) -> Result<PrimitiveTriple> {
    if m.is_odd() || m.is_zero() {
        return Err(Error::OutOfRange {
            what: "Plato parameter m (must be even and at least 2)",
            value: m.clone(),
        });
    }
    let m_sq = m * m;
    Ok(PrimitiveTriple::new_unchecked(
        &m_sq - 1u32,
        m << 1u32,
        m_sq + 1u32,
    ))
}

/// `((m² - n²)/(m² + n²), 2mn/(m² + n²))`.
pub fn rational_point(mn: &MnPair) -> RationalPoint {
    let triple = euclid_triple(mn);
    let point = RationalPoint {
        x: Ratio::new(triple.x().clone(), triple.z().clone()),
        y: Ratio::new(triple.y().clone(), triple.z().clone()),
    };
    debug_assert_eq!(point.x_den(), triple.z());
    point
}

/// Every `(m, n)` with `m > n >= 1`, coprime and of opposite parity, for which
/// `keep(m, n)` holds, walked `n` ascending then `m` ascending. `keep` must be
/// monotone in `m` (false stays false as `m` grows) and false at `m = n + 1`
/// once `n` is large enough to end the search.
fn valid_pairs(mut keep: impl FnMut(u64, u64) -> bool) -> Vec<(u64, u64)> {
    let mut pairs = Vec::new();
    let mut n = 1u64;
    while keep(n + 1, n) {
        let mut m = n + 1;
        while keep(m, n) {
            if (m + n) % 2 == 1 && m.gcd(&n) == 1 {
                pairs.push((m, n));
            }
            m += 1;
        }
        n += 1;
    }
    pairs
}

fn euclid_from_u64(m: u64, n: u64) -> PrimitiveTriple {
    euclid_triple(&MnPair::new(m, n).expect("filtered to valid pairs"))
}

/// Euclid's triples with hypotenuse `m² + n² <= z_max`, sorted by `z`, then `x`.
pub fn euclid_triples_within(z_max: u64) -> Vec<PrimitiveTriple> {
    let z_max = u128::from(z_max);
    let mut triples: Vec<_> = valid_pairs(|m, n| {
        let (m, n) = (u128::from(m), u128::from(n));
        m * m + n * n <= z_max
    })
    .into_iter()
    .map(|(m, n)| euclid_from_u64(m, n))
    .collect();
    triples.sort();
    triples
}

/// Euclid's triples whose generating side `2n(m - n)` is at most `s_max`,
/// sorted by `z`, then `x`.
pub fn euclid_triples_by_side(s_max: u64) -> Vec<PrimitiveTriple> {
    let s_max = u128::from(s_max);
    let mut triples: Vec<_> = valid_pairs(|m, n| {
        let (m, n) = (u128::from(m), u128::from(n));
        2 * n * (m - n) <= s_max
    })
    .into_iter()
    .map(|(m, n)| euclid_from_u64(m, n))
    .collect();
    triples.sort();
    triples
}
