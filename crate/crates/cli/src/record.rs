use std::io::{self, Write};

use gnomon::{BigUint, Error, Generated, MnPair, Partition, PrimitiveTriple};
use num_integer::Integer;
use num_traits::One;

pub const FIELDS: [&str; 8] = ["s", "t", "l", "m", "n", "x", "y", "z"];

/// One joined row: partition, `(m, n)` and triple. Construction checks
/// every cross-formula, so no inconsistent row can be printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputRecord {
    values: [BigUint; 8],
}

impl OutputRecord {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        s: BigUint,
        t: BigUint,
        l: BigUint,
        m: BigUint,
        n: BigUint,
        x: BigUint,
        y: BigUint,
        z: BigUint,
    ) -> Result<Self, Error> {
        let two_tl = (&t * &l) << 1u32;
        let two_t_sq = (&t * &t) << 1u32;
        let l_sq = &l * &l;
        let checks = [
            (s == two_tl, "s = 2tl"),
            (l.is_odd(), "l odd"),
            (t.gcd(&l).is_one(), "gcd(t, l) = 1"),
            (m == &l + &t, "m = l + t"),
            (n == t, "n = t"),
            (x == &two_tl + &l_sq, "x = 2tl + l^2"),
            (y == (&t * (&l + &t)) << 1u32, "y = 2t(l + t)"),
            (z == &two_tl + &two_t_sq + &l_sq, "z = 2tl + 2t^2 + l^2"),
        ];
        if let Some((_, rule)) = checks.iter().find(|(ok, _)| !ok) {
            return Err(Error::InvalidParameters(format!(
                "record (s={s}, t={t}, l={l}, m={m}, n={n}, x={x}, y={y}, z={z}) breaks {rule}"
            )));
        }
        Ok(Self {
            values: [s, t, l, m, n, x, y, z],
        })
    }

    pub fn from_parts(p: &Partition, mn: &MnPair, tr: &PrimitiveTriple) -> Result<Self, Error> {
        Self::new(
            p.s().clone(),
            p.t().clone(),
            p.l().clone(),
            mn.m().clone(),
            mn.n().clone(),
            tr.x().clone(),
            tr.y().clone(),
            tr.z().clone(),
        )
    }

    pub fn values(&self) -> &[BigUint; 8] {
        &self.values
    }

    pub fn get(&self, field: &str) -> Option<&BigUint> {
        FIELDS
            .iter()
            .position(|f| *f == field)
            .map(|i| &self.values[i])
    }

    pub fn triple(&self) -> PrimitiveTriple {
        let [.., x, y, z] = &self.values;
        PrimitiveTriple::new(x.clone(), y.clone(), z.clone()).expect("checked at construction")
    }

    /// `{"s":..,"t":..,...}` with exact integer digits.
    pub fn to_json(&self) -> String {
        let body: Vec<String> = FIELDS
            .iter()
            .zip(&self.values)
            .map(|(k, v)| format!("\"{k}\":{v}"))
            .collect();
        format!("{{{}}}", body.join(","))
    }
}

impl TryFrom<&Generated> for OutputRecord {
    type Error = Error;

    fn try_from(g: &Generated) -> Result<Self, Error> {
        Self::from_parts(&g.partition, &g.mn, &g.triple)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Jsonl,
}

/// Writes records one per line, flushing after each.
pub struct RecordWriter<W: Write> {
    out: W,
    format: Format,
    widths: [usize; 8],
    header_done: bool,
}

impl<W: Write> RecordWriter<W> {
    /// `widths` are minimum column widths for table output.
    pub fn new(out: W, format: Format, widths: [usize; 8]) -> Self {
        let widths = std::array::from_fn(|i| widths[i].max(FIELDS[i].len()));
        Self {
            out,
            format,
            widths,
            header_done: false,
        }
    }

    /// Column widths that fit every record in `records`.
    pub fn widths_for(records: &[OutputRecord]) -> [usize; 8] {
        let mut widths = [1; 8];
        for r in records {
            for (w, v) in widths.iter_mut().zip(&r.values) {
                *w = (*w).max(v.to_string().len());
            }
        }
        widths
    }

    pub fn write(&mut self, record: &OutputRecord) -> io::Result<()> {
        match self.format {
            Format::Jsonl => writeln!(self.out, "{}", record.to_json())?,
            Format::Table => {
                if !self.header_done {
                    let cells: Vec<String> = self.cells(FIELDS.iter().map(|f| f.to_string()));
                    writeln!(self.out, "{}", cells.join("  ").trim_end())?;
                    self.header_done = true;
                }
                let cells = self.cells(record.values.iter().map(BigUint::to_string));
                writeln!(self.out, "{}", cells.join("  "))?;
            }
        }
        self.out.flush()
    }

    fn cells(&self, values: impl Iterator<Item = String>) -> Vec<String> {
        values
            .zip(self.widths)
            .map(|(v, w)| format!("{v:>w$}"))
            .collect()
    }

    pub fn into_inner(self) -> W {
        self.out
    }
}
