//! Classification of G(p,q) and G_n(C) as matrix algebras over the six
//! building blocks, the Clifford clock, and table rendering.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::multivector::Multivector;
use crate::scalar::Rational;
use crate::signature::{Field, Signature};

/// One of the six base rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BuildingBlock {
    R,
    /// Double reals; the hyperbolic numbers.
    #[serde(rename = "2R")]
    R2,
    C,
    #[serde(rename = "2C")]
    C2,
    Q,
    #[serde(rename = "2Q")]
    Q2,
}

impl BuildingBlock {
    pub fn real_dim(self) -> usize {
        match self {
            BuildingBlock::R => 1,
            BuildingBlock::R2 | BuildingBlock::C => 2,
            BuildingBlock::Q | BuildingBlock::C2 => 4,
            BuildingBlock::Q2 => 8,
        }
    }

    /// Tag used in JSON and text: `R`, `2R`, `C`, `2C`, `Q`, `2Q`.
    pub fn tag(self) -> &'static str {
        match self {
            BuildingBlock::R => "R",
            BuildingBlock::R2 => "2R",
            BuildingBlock::C => "C",
            BuildingBlock::C2 => "2C",
            BuildingBlock::Q => "Q",
            BuildingBlock::Q2 => "2Q",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Some(match tag {
            "R" => BuildingBlock::R,
            "2R" => BuildingBlock::R2,
            "C" => BuildingBlock::C,
            "2C" => BuildingBlock::C2,
            "Q" => BuildingBlock::Q,
            "2Q" => BuildingBlock::Q2,
            _ => return None,
        })
    }

    pub fn is_double(self) -> bool {
        matches!(self, BuildingBlock::R2 | BuildingBlock::C2 | BuildingBlock::Q2)
    }
}

impl fmt::Display for BuildingBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// `M_N(block)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MatrixAlgebraShape {
    pub block: BuildingBlock,
    pub size: usize,
}

impl MatrixAlgebraShape {
    pub fn real_dim(&self) -> usize {
        self.size * self.size * self.block.real_dim()
    }
}

impl fmt::Display for MatrixAlgebraShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size == 1 {
            write!(f, "{}", self.block)
        } else {
            write!(f, "M{}({})", self.size, self.block)
        }
    }
}

/// Hours of the clock, indexed by `(p - q) mod 8`. A clockwise step moves
/// one index down, counterclockwise one up.
pub const CLOCK: [BuildingBlock; 8] = [
    BuildingBlock::R,
    BuildingBlock::R2,
    BuildingBlock::R,
    BuildingBlock::C,
    BuildingBlock::Q,
    BuildingBlock::Q2,
    BuildingBlock::Q,
    BuildingBlock::C,
];

fn shape_for(block: BuildingBlock, n: usize) -> MatrixAlgebraShape {
    let entries = (1usize << n) / block.real_dim();
    let size = (entries as f64).sqrt().round() as usize;
    debug_assert_eq!(size * size, entries, "2^{n} / dim({block}) is not a square");
    MatrixAlgebraShape { block, size }
}

fn hour(p: usize, q: usize) -> usize {
    (p as i64 - q as i64).rem_euclid(8) as usize
}

/// Matrix algebra isomorphic to the real G(p,q).
pub fn classify_real(p: usize, q: usize) -> MatrixAlgebraShape {
    shape_for(CLOCK[hour(p, q)], p + q)
}

/// Matrix algebra isomorphic to G_n(C).
pub fn classify_complex(n: usize) -> MatrixAlgebraShape {
    if n.is_multiple_of(2) {
        MatrixAlgebraShape {
            block: BuildingBlock::C,
            size: 1 << (n / 2),
        }
    } else {
        MatrixAlgebraShape {
            block: BuildingBlock::C2,
            size: 1 << ((n - 1) / 2),
        }
    }
}

/// Classification honoring the signature's field.
pub fn classify(sig: &Signature) -> MatrixAlgebraShape {
    match sig.field() {
        Field::Real => classify_real(sig.p(), sig.q()),
        Field::Complex => classify_complex(sig.n()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Clockwise,
    Counterclockwise,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClockStep {
    pub direction: Direction,
    /// Block at the hour reached by this step.
    pub block: BuildingBlock,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClockWalk {
    pub p: usize,
    pub q: usize,
    pub steps: Vec<ClockStep>,
    pub final_shape: MatrixAlgebraShape,
}

/// `q` clockwise hours from the top `R`, then `p` counterclockwise.
pub fn clock_walk(p: usize, q: usize) -> ClockWalk {
    let mut at = 0usize;
    let mut steps = Vec::with_capacity(p + q);
    for _ in 0..q {
        at = (at + 7) % 8;
        steps.push(ClockStep {
            direction: Direction::Clockwise,
            block: CLOCK[at],
        });
    }
    for _ in 0..p {
        at = (at + 1) % 8;
        steps.push(ClockStep {
            direction: Direction::Counterclockwise,
            block: CLOCK[at],
        });
    }
    ClockWalk {
        p,
        q,
        steps,
        final_shape: shape_for(CLOCK[at], p + q),
    }
}

impl ClockWalk {
    /// Human-readable account of the walk.
    pub fn narrative(&self) -> String {
        let mut out = format!("G({},{}): start at R", self.p, self.q);
        let cw: Vec<String> = self
            .steps
            .iter()
            .filter(|s| s.direction == Direction::Clockwise)
            .map(|s| s.block.to_string())
            .collect();
        let ccw: Vec<String> = self
            .steps
            .iter()
            .filter(|s| s.direction == Direction::Counterclockwise)
            .map(|s| s.block.to_string())
            .collect();
        if !cw.is_empty() {
            out += &format!("; {} clockwise: {}", cw.len(), cw.join(" -> "));
        }
        if !ccw.is_empty() {
            out += &format!("; {} counterclockwise: {}", ccw.len(), ccw.join(" -> "));
        }
        out += &format!(
            "; {} hours elapsed; result {}",
            self.steps.len(),
            self.final_shape
        );
        out
    }
}

/// Sign of the pseudoscalar square in G(p,q), computed by multiplication.
pub fn pseudoscalar_square(p: usize, q: usize) -> i8 {
    let sig = Signature::raw(p, q, Field::Real);
    let i = Multivector::<Rational>::pseudoscalar(sig);
    let sq = &i * &i;
    if sq == Multivector::one(sig) {
        1
    } else {
        debug_assert_eq!(sq, -Multivector::one(sig));
        -1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    /// Real classification triangle, `p + q <= 7`.
    Table1,
    /// Clifford clock hours.
    Clock,
    /// Complex classification, `n <= 7`.
    Table4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Json,
}

/// One classified algebra; the JSON record format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub p: usize,
    pub q: usize,
    pub n: usize,
    pub block: BuildingBlock,
    pub matrix_size: usize,
}

impl TableEntry {
    pub fn shape(&self) -> MatrixAlgebraShape {
        MatrixAlgebraShape {
            block: self.block,
            size: self.matrix_size,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignRow {
    pub p_minus_q: i64,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealTable {
    pub entries: Vec<TableEntry>,
    /// Pseudoscalar square per column, `p - q` from 7 down to -7.
    pub pseudoscalar_square: Vec<SignRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexEntry {
    pub n: usize,
    pub block: BuildingBlock,
    pub matrix_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClockHour {
    pub hour: usize,
    pub block: BuildingBlock,
}

pub const TABLE_MAX_N: usize = 7;

/// Entries row by row, each row from `p - q = n` down to `-n`.
pub fn real_table() -> RealTable {
    let mut entries = Vec::new();
    for n in 0..=TABLE_MAX_N {
        for q in 0..=n {
            let p = n - q;
            let shape = classify_real(p, q);
            entries.push(TableEntry {
                p,
                q,
                n,
                block: shape.block,
                matrix_size: shape.size,
            });
        }
    }
    let pseudoscalar_square = (-7i64..=7)
        .rev()
        .map(|d| {
            let (p, q) = if d >= 0 { (d as usize, 0) } else { (0, (-d) as usize) };
            SignRow {
                p_minus_q: d,
                sign: pseudoscalar_square(p, q),
            }
        })
        .collect();
    RealTable {
        entries,
        pseudoscalar_square,
    }
}

pub fn complex_table() -> Vec<ComplexEntry> {
    (0..=TABLE_MAX_N)
        .map(|n| {
            let s = classify_complex(n);
            ComplexEntry {
                n,
                block: s.block,
                matrix_size: s.size,
            }
        })
        .collect()
}

pub fn clock_hours() -> Vec<ClockHour> {
    CLOCK
        .iter()
        .enumerate()
        .map(|(hour, &block)| ClockHour { hour, block })
        .collect()
}

const CELL: usize = 8;

fn render_table1_text(t: &RealTable) -> String {
    let mut out = String::new();
    out += &format!("{:<6}", "n\\p-q");
    for d in (-7i64..=7).rev() {
        out += &format!("{d:^CELL$}");
    }
    out.push('\n');
    for n in 0..=TABLE_MAX_N {
        let mut line = format!("{n:<6}");
        for d in (-7i64..=7).rev() {
            let cell = t
                .entries
                .iter()
                .find(|e| e.n == n && e.p as i64 - e.q as i64 == d)
                .map(|e| e.shape().to_string())
                .unwrap_or_default();
            line += &format!("{cell:^CELL$}");
        }
        out += line.trim_end();
        out.push('\n');
    }
    let mut line = format!("{:<6}", "i^2");
    for row in &t.pseudoscalar_square {
        let s = if row.sign > 0 { "+" } else { "-" };
        line += &format!("{s:^CELL$}");
    }
    out += line.trim_end();
    out.push('\n');
    out
}

/// Renders one of the classification tables.
pub fn emit_tables(which: TableKind, format: TableFormat) -> String {
    match (which, format) {
        (TableKind::Table1, TableFormat::Text) => render_table1_text(&real_table()),
        (TableKind::Table1, TableFormat::Json) => {
            serde_json::to_string_pretty(&real_table()).expect("serializable")
        }
        (TableKind::Table4, TableFormat::Text) => {
            let t = complex_table();
            let head: Vec<String> = t.iter().map(|e| format!("G{}(C)", e.n)).collect();
            let body: Vec<String> = t
                .iter()
                .map(|e| {
                    MatrixAlgebraShape {
                        block: e.block,
                        size: e.matrix_size,
                    }
                    .to_string()
                })
                .collect();
            format!("{}\n{}\n", head.join(", "), body.join(", "))
        }
        (TableKind::Table4, TableFormat::Json) => {
            serde_json::to_string_pretty(&complex_table()).expect("serializable")
        }
        (TableKind::Clock, TableFormat::Text) => {
            let mut out = String::from("hour  (p-q) mod 8  block\n");
            for h in clock_hours() {
                out += &format!("{:<6}{:<15}{}\n", h.hour, h.hour, h.block);
            }
            out += "clockwise: hour - 1; counterclockwise: hour + 1\n";
            out
        }
        (TableKind::Clock, TableFormat::Json) => {
            serde_json::to_string_pretty(&clock_hours()).expect("serializable")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(block: BuildingBlock, size: usize) -> MatrixAlgebraShape {
        MatrixAlgebraShape { block, size }
    }

    #[test]
    fn named_examples() {
        use BuildingBlock::*;
        assert_eq!(classify_real(3, 2), shape(R2, 4));
        assert_eq!(classify_real(0, 0), shape(R, 1));
        assert_eq!(classify_real(0, 4), shape(Q, 2));
        assert_eq!(classify_real(7, 0), shape(C, 8));
        assert_eq!(classify_complex(0), shape(C, 1));
        assert_eq!(classify_complex(3), shape(C2, 2));
        assert_eq!(classify_complex(7), shape(C2, 8));
        assert_eq!(classify_real(3, 2).to_string(), "M4(2R)");
    }

    #[test]
    fn clock_walks() {
        let w = clock_walk(3, 2);
        let blocks: Vec<BuildingBlock> = w.steps.iter().map(|s| s.block).collect();
        use BuildingBlock::*;
        assert_eq!(blocks, [C, Q, C, R, R2]);
        assert_eq!(w.steps[1].direction, Direction::Clockwise);
        assert_eq!(w.steps[2].direction, Direction::Counterclockwise);
        assert_eq!(w.final_shape, shape(R2, 4));

        let w = clock_walk(0, 0);
        assert!(w.steps.is_empty());
        assert_eq!(w.final_shape, shape(R, 1));

        let w = clock_walk(1, 1);
        assert_eq!(w.steps.last().unwrap().block, R);
        assert_eq!(w.final_shape, shape(R, 2));
        assert_eq!(w.final_shape, classify_real(1, 1));
    }

    #[test]
    fn structural_properties() {
        for p in 0..=6 {
            for q in 0..=6 {
                assert_eq!(classify_real(p + 4, q), classify_real(p, q + 4));
                assert_eq!(classify_real(p + 1, q), classify_real(q + 1, p));
                let base = classify_real(p, q);
                let up = classify_real(p + 1, q + 1);
                assert_eq!(up.block, base.block);
                assert_eq!(up.size, 2 * base.size);
                assert_eq!(base.real_dim(), 1 << (p + q));
            }
        }
        for n in 0..=TABLE_MAX_N {
            for q in 0..=n {
                assert_eq!(clock_walk(n - q, q).final_shape, classify_real(n - q, q));
            }
        }
    }

    #[test]
    fn pseudoscalar_sign_depends_only_on_p_minus_q() {
        for n in 0..=7usize {
            for q in 0..=n {
                let p = n - q;
                let d = p as i64 - q as i64;
                let (p0, q0) = if d >= 0 { (d as usize, 0) } else { (0, (-d) as usize) };
                assert_eq!(pseudoscalar_square(p, q), pseudoscalar_square(p0, q0));
            }
        }
    }

    #[test]
    fn table1_json_round_trip() {
        let json = emit_tables(TableKind::Table1, TableFormat::Json);
        let back: RealTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back.entries.len(), 36);
        assert_eq!(back, real_table());
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["entries"][0]["block"], "R");
        assert_eq!(v["entries"][1]["block"], "2R");
    }

    #[test]
    fn table1_text_row_two() {
        let text = emit_tables(TableKind::Table1, TableFormat::Text);
        let row: Vec<&str> = text.lines().nth(3).unwrap().split_whitespace().collect();
        assert_eq!(row, ["2", "M2(R)", "M2(R)", "Q"]);
    }

    #[test]
    fn table4_text() {
        let text = emit_tables(TableKind::Table4, TableFormat::Text);
        assert_eq!(
            text.lines().nth(1).unwrap(),
            "C, 2C, M2(C), M2(2C), M4(C), M4(2C), M8(C), M8(2C)"
        );
    }
}
