//! SVG drawings of the construction.
//!
//! Every gnomon is drawn as axis-aligned rectangles (two arms and a corner)
//! so region areas can be read back exactly. Layout is in integer units with
//! the origin at the top-left; the drawing is scaled by a positive rational.
//!
//! The metadata block is an XML comment of `key=value` lines directly inside
//! the `<svg>` element. `region.<name>=WxH` lines give each rectangle's size
//! in integer units.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};

use crate::construction::{gnomon_ring_width, GnomonDecomposition};
use crate::error::{Error, Result};

/// Largest allowed drawing extent per side, in drawing units.
pub const CANVAS_BOUND: u64 = 1_000_000;

const MARGIN: u64 = 20;
const STROKE: &str = "#333333";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stage {
    /// Unit squares grown by gnomons of area `2k + 1` up to side `y`.
    SquareSequence,
    /// Square `s` completed to square `y` by gnomon T.
    GnomonT,
    /// Square `x` completed to square `z` by gnomon U: the arms of T plus the
    /// two `2t² × l²` filler rectangles.
    GnomonU,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::SquareSequence => "square_sequence",
            Stage::GnomonT => "gnomon_t",
            Stage::GnomonU => "gnomon_u",
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stage {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "square_sequence" => Ok(Stage::SquareSequence),
            "gnomon_t" => Ok(Stage::GnomonT),
            "gnomon_u" => Ok(Stage::GnomonU),
            other => Err(Error::InvalidParameters(format!("unknown stage {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramSpec {
    decomposition: GnomonDecomposition,
    scale: Ratio<BigUint>,
    stage: Stage,
    labels: bool,
}

impl DiagramSpec {
    pub fn new(
        decomposition: GnomonDecomposition,
        scale: Ratio<BigUint>,
        stage: Stage,
        labels: bool,
    ) -> Result<Self> {
        if scale.is_zero() {
            return Err(Error::InvalidParameters("scale must be positive".into()));
        }
        if !decomposition.is_consistent() {
            return Err(Error::InvalidParameters(
                "gnomon decomposition is not self-consistent".into(),
            ));
        }
        Ok(Self {
            decomposition,
            scale,
            stage,
            labels,
        })
    }

    pub fn decomposition(&self) -> &GnomonDecomposition {
        &self.decomposition
    }

    pub fn scale(&self) -> &Ratio<BigUint> {
        &self.scale
    }

    pub fn stage(&self) -> Stage {
        self.stage
    }

    pub fn labels(&self) -> bool {
        self.labels
    }
}

/// What a rectangle depicts; selects its fill.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionKind {
    Square,
    GnomonArm,
    GnomonCorner,
    Filler,
    Ring,
}

impl RegionKind {
    fn class(self) -> &'static str {
        match self {
            RegionKind::Square => "square",
            RegionKind::GnomonArm => "gnomon-arm",
            RegionKind::GnomonCorner => "gnomon-corner",
            RegionKind::Filler => "filler",
            RegionKind::Ring => "ring",
        }
    }

    fn fill(self) -> &'static str {
        match self {
            RegionKind::Square => "#dbe9f6",
            RegionKind::GnomonArm => "#f6d8b8",
            RegionKind::GnomonCorner => "#eebf8a",
            RegionKind::Filler => "#c8e6c0",
            RegionKind::Ring => "#f3e3a6",
        }
    }
}

/// An axis-aligned rectangle in integer units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub name: String,
    pub kind: RegionKind,
    pub x: BigUint,
    pub y: BigUint,
    pub width: BigUint,
    pub height: BigUint,
}

impl Region {
    fn new(
        name: impl Into<String>,
        kind: RegionKind,
        (x, y): (&BigUint, &BigUint),
        (width, height): (&BigUint, &BigUint),
    ) -> Self {
        Self {
            name: name.into(),
            kind,
            x: x.clone(),
            y: y.clone(),
            width: width.clone(),
            height: height.clone(),
        }
    }

    pub fn area(&self) -> BigUint {
        &self.width * &self.height
    }
}

/// Side length of the whole figure, in integer units.
pub fn extent(d: &GnomonDecomposition, stage: Stage) -> BigUint {
    match stage {
        Stage::SquareSequence | Stage::GnomonT => d.y_side.clone(),
        Stage::GnomonU => d.gnomon_u_side.clone(),
    }
}

/// The fixed rectangle decomposition drawn for `stage`.
///
/// * `square_sequence`: `square_1`, then `ring_k_{right,bottom,corner}` for
///   each step `k -> k + 1` up to side `y`.
/// * `gnomon_t`: `square_s`, `arm_t_right`, `arm_t_bottom`, `corner`.
/// * `gnomon_u`: `inner_square`, `arm_t_right`, `arm_t_bottom`, `corner`,
///   `filler_right`, `filler_bottom`. The fillers sit on the free ends of
///   the arms of T.
pub fn layout(d: &GnomonDecomposition, stage: Stage) -> Vec<Region> {
    let zero = BigUint::zero();
    let one = BigUint::one();
    match stage {
        Stage::SquareSequence => {
            let mut regions = vec![Region::new(
                "square_1",
                RegionKind::Square,
                (&zero, &zero),
                (&one, &one),
            )];
            let mut k = BigUint::one();
            while k < d.y_side {
                let name = |part: &str| format!("ring_{k}_{part}");
                regions.push(Region::new(
                    name("right"),
                    RegionKind::Ring,
                    (&k, &zero),
                    (&one, &k),
                ));
                regions.push(Region::new(
                    name("bottom"),
                    RegionKind::Ring,
                    (&zero, &k),
                    (&k, &one),
                ));
                regions.push(Region::new(
                    name("corner"),
                    RegionKind::Ring,
                    (&k, &k),
                    (&one, &one),
                ));
                k += 1u32;
            }
            regions
        }
        Stage::GnomonT => {
            let (s, w) = (&d.s, &d.gnomon_t_thickness);
            vec![
                Region::new("square_s", RegionKind::Square, (&zero, &zero), (s, s)),
                Region::new("arm_t_right", RegionKind::GnomonArm, (s, &zero), (w, s)),
                Region::new("arm_t_bottom", RegionKind::GnomonArm, (&zero, s), (s, w)),
                Region::new("corner", RegionKind::GnomonCorner, (s, s), (w, w)),
            ]
        }
        Stage::GnomonU => {
            let (x, s, w) = (&d.inner_side, &d.s, &d.gnomon_u_thickness);
            let (_, l_sq) = &d.rectangle_dims;
            vec![
                Region::new("inner_square", RegionKind::Square, (&zero, &zero), (x, x)),
                Region::new("arm_t_right", RegionKind::GnomonArm, (x, l_sq), (w, s)),
                Region::new("arm_t_bottom", RegionKind::GnomonArm, (l_sq, x), (s, w)),
                Region::new("corner", RegionKind::GnomonCorner, (x, x), (w, w)),
                Region::new("filler_right", RegionKind::Filler, (x, &zero), (w, l_sq)),
                Region::new("filler_bottom", RegionKind::Filler, (&zero, x), (l_sq, w)),
            ]
        }
    }
}

/// Renders the diagram. Identical specs give byte-identical documents.
pub fn render_construction(spec: &DiagramSpec) -> Result<String> {
    let d = &spec.decomposition;
    let extent_units = extent(d, spec.stage);
    let drawn = Ratio::from_integer(extent_units.clone()) * &spec.scale;
    if drawn > Ratio::from_integer(BigUint::from(CANVAS_BOUND)) {
        return Err(Error::ScaleOverflow {
            extent: decimal(&drawn),
            bound: CANVAS_BOUND,
        });
    }
    let scaled = |v: &BigUint| decimal(&(Ratio::from_integer(v.clone()) * &spec.scale));
    let canvas = decimal(&(drawn + Ratio::from_integer(BigUint::from(2 * MARGIN))));
    let regions = layout(d, spec.stage);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{canvas}\" height=\"{canvas}\" viewBox=\"0 0 {canvas} {canvas}\">"
    );

    out.push_str("<!-- gnomon-construction\n");
    let meta = [
        ("stage", spec.stage.name().to_string()),
        ("scale", spec.scale.to_string()),
        ("s", d.s.to_string()),
        ("t", d.t.to_string()),
        ("l", d.l.to_string()),
        ("x", d.inner_side.to_string()),
        ("y", d.y_side.to_string()),
        ("z", d.gnomon_u_side.to_string()),
        ("gnomon_thickness", d.gnomon_t_thickness.to_string()),
        (
            "rectangle_dims",
            format!("{}x{}", d.rectangle_dims.0, d.rectangle_dims.1),
        ),
        ("area_gnomon_t", d.area_gnomon_t.to_string()),
        ("area_rectangles", d.area_rectangles.to_string()),
        ("area_gnomon_u", d.area_gnomon_u.to_string()),
        ("regions", regions.len().to_string()),
    ];
    for (key, value) in meta {
        let _ = writeln!(out, "{key}={value}");
    }
    for r in &regions {
        let _ = writeln!(out, "region.{}={}x{}", r.name, r.width, r.height);
    }
    out.push_str("-->\n");

    let _ = writeln!(out, "<g transform=\"translate({MARGIN},{MARGIN})\">");
    for r in &regions {
        let _ = writeln!(
            out,
            "  <rect id=\"{}\" class=\"{}\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" \
             fill=\"{}\" stroke=\"{STROKE}\" stroke-width=\"0.5\"/>",
            r.name,
            r.kind.class(),
            scaled(&r.x),
            scaled(&r.y),
            scaled(&r.width),
            scaled(&r.height),
            r.kind.fill(),
        );
    }
    if spec.labels {
        for (text, (cx, cy)) in labels(d, spec.stage, &regions) {
            let _ = writeln!(
                out,
                "  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" \
                 text-anchor=\"middle\" fill=\"{STROKE}\">{text}</text>",
                decimal(&(cx * &spec.scale)),
                decimal(&(cy * &spec.scale)),
            );
        }
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

type Point = (Ratio<BigUint>, Ratio<BigUint>);

fn centre(r: &Region) -> Point {
    let two = BigUint::from(2u32);
    (
        Ratio::new(&r.x * &two + &r.width, two.clone()),
        Ratio::new(&r.y * &two + &r.height, two),
    )
}

fn labels(d: &GnomonDecomposition, stage: Stage, regions: &[Region]) -> Vec<(String, Point)> {
    let at = |name: &str| {
        regions
            .iter()
            .find(|r| r.name == name)
            .map(centre)
            .expect("region present in layout")
    };
    match stage {
        Stage::SquareSequence => {
            let last = d.y_side.clone() - 1u32;
            let mut out = vec![("1".to_string(), at("square_1"))];
            if !last.is_zero() {
                let ring = format!("ring_{last}_corner");
                out.push((format!("+{}", gnomon_ring_width(&last)), at(&ring)));
            }
            out
        }
        Stage::GnomonT => vec![
            (format!("s = {}", d.s), at("square_s")),
            (format!("2t\u{b2} = {}", d.gnomon_t_thickness), at("corner")),
        ],
        Stage::GnomonU => vec![
            (format!("x = {}", d.inner_side), at("inner_square")),
            (format!("T: {}", d.s), at("arm_t_right")),
            (format!("T: {}", d.s), at("arm_t_bottom")),
            (format!("2t\u{b2} = {}", d.gnomon_u_thickness), at("corner")),
            (
                format!("{}\u{d7}{}", d.rectangle_dims.0, d.rectangle_dims.1),
                at("filler_right"),
            ),
            (
                format!("{}\u{d7}{}", d.rectangle_dims.1, d.rectangle_dims.0),
                at("filler_bottom"),
            ),
        ],
    }
}

/// Exact integers print as-is; other values are truncated to four decimals.
fn decimal(v: &Ratio<BigUint>) -> String {
    if v.is_integer() {
        return v.to_integer().to_string();
    }
    let scaled = (v * Ratio::from_integer(BigUint::from(10_000u32))).to_integer();
    let (whole, frac) = scaled.div_rem(&BigUint::from(10_000u32));
    let frac = format!("{:04}", frac.to_u32().expect("below 10000"));
    format!("{whole}.{}", frac.trim_end_matches('0'))
        .trim_end_matches('.')
        .to_string()
}
