//! The subcommands as plain functions over parsed arguments.

use std::collections::BTreeSet;
use std::io;

use gnomon::{
    brute_force_primitive_triples, count_partitions, enumerate_partitions,
    enumerate_triples_by_side, euclid_triple, euclid_triples_within, factor_even_side,
    gnomon_decomposition, mn_from_partition, partition_from_mn, plato_family, pythagoras_family,
    render_construction, triple_from_partition, BigUint, DiagramSpec, MnPair, PrimitiveTriple,
    Stage, TripleStream,
};
use num_rational::Ratio;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::record::OutputRecord;

/// Largest hypotenuse bound `verify` will brute-force.
pub const MAX_VERIFY_BOUND: u64 = 100_000_000;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(e) if e.kind() == io::ErrorKind::BrokenPipe => 0,
            _ => 2,
        }
    }
}

impl From<gnomon::Error> for CliError {
    fn from(e: gnomon::Error) -> Self {
        match e {
            gnomon::Error::OddInput(s) => CliError::Usage(format!(
                "the generating side must be an even number >= 2, got {s}"
            )),
            gnomon::Error::OutOfRange { what, value } if value < BigUint::from(2u32) => {
                CliError::Usage(format!("{what}: got {value}"))
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn to_u64(v: &BigUint, what: &str) -> Result<u64, CliError> {
    v.to_u64()
        .ok_or_else(|| usage(format!("{what} {v} is too large")))
}

/// One record per partition of `s`, in enumeration order.
pub fn cmd_triples(s: &BigUint) -> Result<Vec<OutputRecord>, CliError> {
    let f = factor_even_side(s)?;
    let records = enumerate_partitions(&f)
        .iter()
        .map(|p| OutputRecord::from_parts(p, &mn_from_partition(p), &triple_from_partition(p)))
        .collect::<Result<_, _>>()?;
    Ok(records)
}

/// `L(s) = 2^r`.
pub fn cmd_count(s: &BigUint) -> Result<BigUint, CliError> {
    Ok(count_partitions(&factor_even_side(s)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    /// Every even side up to this value.
    Side(u64),
    /// Every triple with hypotenuse up to this value; sides are scanned up to
    /// twice the bound, since `s = 2n(m - n) < 2z`.
    Hypotenuse(u64),
}

impl Bound {
    pub fn from_flags(max_s: Option<&BigUint>, max_z: Option<&BigUint>) -> Result<Self, CliError> {
        match (max_s, max_z) {
            (Some(s), None) => Ok(Bound::Side(to_u64(s, "--max-s")?)),
            (None, Some(z)) => {
                let z = to_u64(z, "--max-z")?;
                if z.checked_mul(2).is_none() {
                    return Err(usage(format!("--max-z {z} is too large")));
                }
                Ok(Bound::Hypotenuse(z))
            }
            _ => Err(usage("give exactly one of --max-s or --max-z")),
        }
    }

    pub fn side_limit(self) -> u64 {
        match self {
            Bound::Side(s) => s,
            Bound::Hypotenuse(z) => 2 * z,
        }
    }

    /// Column widths wide enough for any record under this bound.
    pub fn widths(self) -> [usize; 8] {
        let digits = |v: u128| v.to_string().len();
        match self {
            Bound::Side(s) => {
                let half = u128::from(s / 2);
                let z = 2 * half * half + 2 * half + 1;
                let (d_s, d_h, d_z) = (digits(s.into()), digits(half + 1), digits(z));
                [d_s, d_h, d_h, d_h, d_h, d_z, d_z, d_z]
            }
            Bound::Hypotenuse(z) => [digits(z.into()); 8],
        }
    }
}

/// Lazily streams records for the bound, side ascending.
pub fn cmd_enumerate(bound: Bound) -> impl Iterator<Item = OutputRecord> {
    let stream = match bound {
        Bound::Side(s) => enumerate_triples_by_side(s),
        Bound::Hypotenuse(z) => TripleStream::new(2 * z).with_max_hypotenuse(z),
    };
    stream.map(|g| OutputRecord::try_from(&g).expect("construction rows are consistent"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub z_max: u64,
    pub brute_force: usize,
    pub euclid: usize,
    pub construction: usize,
    pub duplicates: usize,
    /// In brute force but not produced by the construction.
    pub missing: Vec<PrimitiveTriple>,
    /// Produced by the construction but not by brute force.
    pub extra: Vec<PrimitiveTriple>,
    /// Triples on which Euclid and brute force disagree.
    pub euclid_mismatches: Vec<PrimitiveTriple>,
    pub sides_checked: u64,
    pub count_law_failures: Vec<u64>,
}

impl VerifyReport {
    pub fn agrees(&self) -> bool {
        self.duplicates == 0
            && self.missing.is_empty()
            && self.extra.is_empty()
            && self.euclid_mismatches.is_empty()
            && self.count_law_failures.is_empty()
            && self.brute_force == self.euclid
            && self.brute_force == self.construction
    }

    pub fn exit_code(&self) -> i32 {
        if self.agrees() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        format!(
            "{{\"z_max\":{},\"brute_force\":{},\"euclid\":{},\"construction\":{},\
             \"duplicates\":{},\"missing\":{},\"extra\":{},\"euclid_mismatches\":{},\
             \"sides_checked\":{},\"count_law_failures\":{},\"agreement\":{}}}",
            self.z_max,
            self.brute_force,
            self.euclid,
            self.construction,
            self.duplicates,
            self.missing.len(),
            self.extra.len(),
            self.euclid_mismatches.len(),
            self.sides_checked,
            self.count_law_failures.len(),
            self.agrees()
        )
    }

    pub fn to_text(&self) -> String {
        let fmt = |ts: &[PrimitiveTriple]| {
            ts.iter()
                .take(10)
                .map(|t| format!("({}, {}, {})", t.x(), t.y(), t.z()))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut lines = vec![
            format!("primitive triples with z <= {}", self.z_max),
            format!("  brute force   {}", self.brute_force),
            format!("  euclid        {}", self.euclid),
            format!(
                "  construction  {} (sides 2..={}, {} duplicates)",
                self.construction,
                2 * self.z_max,
                self.duplicates
            ),
            format!(
                "  count law     {} sides checked, {} failures",
                self.sides_checked,
                self.count_law_failures.len()
            ),
        ];
        if !self.missing.is_empty() {
            lines.push(format!(
                "  missing from construction: {}",
                fmt(&self.missing)
            ));
        }
        if !self.extra.is_empty() {
            lines.push(format!("  not found by brute force: {}", fmt(&self.extra)));
        }
        if !self.euclid_mismatches.is_empty() {
            lines.push(format!(
                "  euclid disagrees on: {}",
                fmt(&self.euclid_mismatches)
            ));
        }
        if !self.count_law_failures.is_empty() {
            let sides: Vec<_> = self
                .count_law_failures
                .iter()
                .take(10)
                .map(u64::to_string)
                .collect();
            lines.push(format!("  count law fails at s = {}", sides.join(" ")));
        }
        lines.push(format!(
            "result: {}",
            if self.agrees() {
                "agreement"
            } else {
                "MISMATCH"
            }
        ));
        lines.join("\n")
    }
}

/// Compares the construction against brute force and Euclid up to `z_max`,
/// and checks `L(s) = 2^r` on every side scanned.
pub fn cmd_verify(z_max: &BigUint) -> Result<VerifyReport, CliError> {
    let z_max = to_u64(z_max, "--max-z")?;
    if z_max == 0 || z_max > MAX_VERIFY_BOUND {
        return Err(usage(format!(
            "--max-z must be between 1 and {MAX_VERIFY_BOUND}, got {z_max}"
        )));
    }

    let brute: BTreeSet<_> = brute_force_primitive_triples(z_max).into_iter().collect();
    let euclid: BTreeSet<_> = euclid_triples_within(z_max).into_iter().collect();

    let mut constructed = BTreeSet::new();
    let mut construction = 0;
    let mut duplicates = 0;
    for g in TripleStream::new(2 * z_max).with_max_hypotenuse(z_max) {
        construction += 1;
        if !constructed.insert(g.triple) {
            duplicates += 1;
        }
    }

    let mut count_law_failures = Vec::new();
    let mut sides_checked = 0;
    for s in (2..=2 * z_max).step_by(2) {
        let f = factor_even_side(&BigUint::from(s))?;
        let listed = enumerate_partitions(&f).len();
        let expected = BigUint::one() << f.odd_prime_count();
        if count_partitions(&f) != expected || BigUint::from(listed) != expected {
            count_law_failures.push(s);
        }
        sides_checked += 1;
    }

    Ok(VerifyReport {
        z_max,
        brute_force: brute.len(),
        euclid: euclid.len(),
        construction,
        duplicates,
        missing: brute.difference(&constructed).cloned().collect(),
        extra: constructed.difference(&brute).cloned().collect(),
        euclid_mismatches: brute.symmetric_difference(&euclid).cloned().collect(),
        sides_checked,
        count_law_failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Pythagoras { k: BigUint },
    Plato { m: BigUint },
    Euclid { m: BigUint, n: BigUint },
}

/// The family triple, joined with its partition through `(m, n)`.
pub fn cmd_families(family: &Family) -> Result<Vec<OutputRecord>, CliError> {
    let one = BigUint::one();
    let (triple, mn) = match family {
        Family::Pythagoras { k } => {
            let triple = pythagoras_family(k)?;
            (triple, MnPair::new(k + 1u32, k.clone())?)
        }
        Family::Plato { m } => {
            let triple = plato_family(m)?;
            (triple, MnPair::new(m.clone(), one)?)
        }
        Family::Euclid { m, n } => {
            let mn = MnPair::new(m.clone(), n.clone())?;
            (euclid_triple(&mn), mn)
        }
    };
    let partition = partition_from_mn(&mn);
    Ok(vec![OutputRecord::from_parts(&partition, &mn, &triple)?])
}

pub struct RenderRequest {
    pub s: BigUint,
    pub index: BigUint,
    pub stage: Stage,
    pub scale: Ratio<BigUint>,
    pub labels: bool,
}

/// SVG for partition `index` of side `s`.
pub fn cmd_render(req: &RenderRequest) -> Result<String, CliError> {
    let f = factor_even_side(&req.s)?;
    let count = count_partitions(&f);
    if req.index >= count {
        return Err(usage(format!(
            "partition index {} out of range: s = {} has {count} partitions (0..={})",
            req.index,
            req.s,
            &count - 1u32
        )));
    }
    let index = to_u64(&req.index, "--index")?;
    let partition = gnomon::partitions(&f)
        .nth(index as usize)
        .expect("index below partition count");
    let spec = DiagramSpec::new(
        gnomon_decomposition(&partition),
        req.scale.clone(),
        req.stage,
        req.labels,
    )?;
    Ok(render_construction(&spec)?)
}
