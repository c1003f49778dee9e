//! Exact integer helpers: factorization of an even side, gcd, and the
//! brute-force enumerator used as ground truth by the test suites and by
//! `gnomon verify`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::construction::PrimitiveTriple;
use crate::error::{Error, Result};

/// An odd prime raised to a positive power.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimePower {
    pub prime: BigUint,
    pub exponent: u32,
}

impl PrimePower {
    /// `prime^exponent`.
    pub fn value(&self) -> BigUint {
        num_traits::pow(self.prime.clone(), self.exponent as usize)
    }
}

/// Prime-power decomposition of an even side `S = 2^a0 * p1^a1 * ... * pr^ar`.
///
/// `two_exponent` is the 2-adic valuation `a0 >= 1`; `odd_primes` lists the
/// odd prime powers in ascending order of prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    two_exponent: u32,
    odd_primes: Vec<PrimePower>,
}

impl Factorization {
    pub fn two_exponent(&self) -> u32 {
        self.two_exponent
    }

    pub fn odd_primes(&self) -> &[PrimePower] {
        &self.odd_primes
    }

    /// Number of distinct odd primes, `r`.
    pub fn odd_prime_count(&self) -> usize {
        self.odd_primes.len()
    }

    /// `2^(a0 - 1)`, the power of two that always travels with `t`.
    pub fn even_share(&self) -> BigUint {
        BigUint::one() << (self.two_exponent - 1)
    }

    pub fn odd_part(&self) -> BigUint {
        self.odd_primes.iter().map(PrimePower::value).product()
    }

    /// Multiplies the factorization back out.
    pub fn side(&self) -> BigUint {
        self.odd_part() << self.two_exponent
    }
}

/// Factors an even side `s >= 2` by trial division: first by 2, then by odd
/// candidates up to the square root of the remaining cofactor.
pub fn factor_even_side(s: &BigUint) -> Result<Factorization> {
    if *s < BigUint::from(2u32) {
        return Err(Error::OutOfRange {
            what: "generating side (must be at least 2)",
            value: s.clone(),
        });
    }
    if s.is_odd() {
        return Err(Error::OddInput(s.clone()));
    }

    let two_exponent = s.trailing_zeros().expect("nonzero") as u32;
    let odd = s >> two_exponent;

    let odd_primes = match odd.to_u64() {
        Some(odd) => {
            let mut buf = Vec::new();
            factor_odd_u64(odd, &mut buf);
            buf.into_iter()
                .map(|(p, e)| PrimePower {
                    prime: BigUint::from(p),
                    exponent: e,
                })
                .collect()
        }
        None => factor_odd_big(odd),
    };

    Ok(Factorization {
        two_exponent,
        odd_primes,
    })
}

/// Trial division of an odd `n`, pushing `(prime, exponent)` pairs in
/// ascending order into `out` (which is cleared first).
pub(crate) fn factor_odd_u64(mut n: u64, out: &mut Vec<(u64, u32)>) {
    debug_assert!(n % 2 == 1);
    out.clear();
    let mut d = 3u64;
    // d <= n / d avoids computing d * d.
    while d <= n / d {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 2;
    }
    if n > 1 {
        out.push((n, 1));
    }
}

fn factor_odd_big(mut n: BigUint) -> Vec<PrimePower> {
    let mut out = Vec::new();
    let mut d = BigUint::from(3u32);
    let two = BigUint::from(2u32);
    while &d * &d <= n {
        let mut e = 0;
        loop {
            let (q, r) = n.div_rem(&d);
            if !r.is_zero() {
                break;
            }
            n = q;
            e += 1;
        }
        if e > 0 {
            out.push(PrimePower {
                prime: d.clone(),
                exponent: e,
            });
        }
        d += &two;
    }
    if !n.is_one() {
        out.push(PrimePower {
            prime: n,
            exponent: 1,
        });
    }
    out
}

/// Greatest common divisor, with `gcd(0, b) = b`.
pub fn gcd(a: &BigUint, b: &BigUint) -> BigUint {
    a.gcd(b)
}

/// Every primitive triple with hypotenuse at most `z_max`, found by a plain
/// double loop over the legs. Deliberately shares no formula with the
/// construction; it only knows `a^2 + b^2 = c^2` and gcd.
///
/// Results are stored odd leg first and sorted by `z`, then `x`.
pub fn brute_force_primitive_triples(z_max: u64) -> Vec<PrimitiveTriple> {
    let z_max = u128::from(z_max);
    let z_max_sq = z_max * z_max;
    let mut found = Vec::new();

    let mut a: u128 = 1;
    while a <= z_max {
        let a_sq = a * a;
        // c only grows as b grows, so walk it forward instead of taking roots.
        let mut c = a + 1;
        let mut b = a + 1;
        while b <= z_max {
            let Some(c_sq) = a_sq.checked_add(b * b) else {
                break;
            };
            if c_sq > z_max_sq {
                break;
            }
            while c * c < c_sq {
                c += 1;
            }
            if c * c == c_sq && a.gcd(&b) == 1 {
                let (odd, even) = if a % 2 == 1 { (a, b) } else { (b, a) };
                found.push(PrimitiveTriple::new_unchecked(
                    BigUint::from(odd),
                    BigUint::from(even),
                    BigUint::from(c),
                ));
            }
            b += 1;
        }
        a += 1;
    }

    found.sort();
    found
}
