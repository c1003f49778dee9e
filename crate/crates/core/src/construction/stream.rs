use num_bigint::BigUint;

use super::{mn_from_partition, triple_from_partition, MnPair, Partition, PrimitiveTriple};
use crate::numtheory::factor_odd_u64;

/// One row of the construction: a partition with its triple and `(m, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub partition: Partition,
    pub triple: PrimitiveTriple,
    pub mn: MnPair,
}

/// Streams the construction over even sides `2, 4, ..., max_side`, side
/// ascending then subset-bitmask ascending, holding only the current side's
/// factorization in memory.
///
/// Sides are walked in `u64`; the partition search runs in checked fixed
/// width and only surviving rows are promoted to `BigUint`.
#[derive(Debug, Clone)]
pub struct TripleStream {
    next_side: u64,
    max_side: u64,
    max_hypotenuse: Option<u64>,
    // state for the side currently being split
    even_share: u64,
    odd_part: u64,
    blocks: Vec<u64>,
    factors: Vec<(u64, u32)>,
    mask: u64,
    end_mask: u64,
}

impl TripleStream {
    pub fn new(max_side: u64) -> Self {
        Self {
            next_side: 2,
            max_side,
            max_hypotenuse: None,
            even_share: 0,
            odd_part: 0,
            blocks: Vec::new(),
            factors: Vec::new(),
            mask: 0,
            end_mask: 0,
        }
    }

    /// Drop rows whose hypotenuse exceeds `z_max`.
    pub fn with_max_hypotenuse(mut self, z_max: u64) -> Self {
        self.max_hypotenuse = Some(z_max);
        self
    }

    fn load_next_side(&mut self) -> bool {
        let s = self.next_side;
        if s > self.max_side {
            return false;
        }
        // Stop cleanly instead of wrapping at the top of u64.
        match s.checked_add(2) {
            Some(next) => self.next_side = next,
            None => self.max_side = 0,
        }

        let two_exponent = s.trailing_zeros();
        self.even_share = 1 << (two_exponent - 1);
        self.odd_part = s >> two_exponent;
        factor_odd_u64(self.odd_part, &mut self.factors);
        self.blocks.clear();
        self.blocks
            .extend(self.factors.iter().map(|&(p, e)| p.pow(e)));
        self.mask = 0;
        // An odd u64 has at most 15 distinct odd prime factors.
        self.end_mask = 1 << self.blocks.len();
        true
    }

    fn within_bound(&self, t: u64, l: u64) -> bool {
        let Some(z_max) = self.max_hypotenuse else {
            return true;
        };
        let (t, l) = (u128::from(t), u128::from(l));
        // z = 2t² + 2tl + l²; overflow means z is far beyond any u64 bound.
        let z = (2 * t * t)
            .checked_add(2 * t * l)
            .and_then(|v| v.checked_add(l * l));
        matches!(z, Some(z) if z <= u128::from(z_max))
    }
}

impl Iterator for TripleStream {
    type Item = Generated;

    fn next(&mut self) -> Option<Generated> {
        loop {
            while self.mask < self.end_mask {
                let mask = self.mask;
                self.mask += 1;

                let selected: u64 = self
                    .blocks
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, b)| b)
                    .product();
                // t * l = s / 2 < 2^63, so neither can overflow.
                let t = self.even_share * selected;
                let l = self.odd_part / selected;
                if !self.within_bound(t, l) {
                    continue;
                }

                let partition = Partition::new_unchecked(BigUint::from(t), BigUint::from(l));
                let triple = triple_from_partition(&partition);
                let mn = mn_from_partition(&partition);
                return Some(Generated {
                    partition,
                    triple,
                    mn,
                });
            }
            if !self.load_next_side() {
                return None;
            }
        }
    }
}
