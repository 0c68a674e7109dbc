//! CSV and SVG renderings of graphs, covers and level-set preimages.

use std::fmt::Write;

use num_rational::BigRational;

use crate::cylinders::Interval;
use crate::error::Result;
use crate::exact::ExactReal;
use crate::fractal::LevelSetPreimage;
use crate::function::{GraphRow, Side};

pub const GRAPH_CSV_HEADER: &str = "x_exact,x_decimal,y_exact,y_decimal,side";
pub const COVER_CSV_HEADER: &str = "level,index,lo_exact,hi_exact,lo_decimal,hi_decimal";
pub const PREIMAGE_CSV_HEADER: &str = "octal_word,tail,x_exact,x_decimal";

fn rational_decimal(x: &BigRational, digits: usize) -> Result<String> {
    ExactReal::rational(x.clone()).approx(digits)
}

pub fn graph_csv(rows: &[GraphRow], digits: usize) -> Result<String> {
    let mut out = String::from(GRAPH_CSV_HEADER);
    out.push('\n');
    for row in rows {
        writeln!(
            out,
            "{},{},{},{},{}",
            row.x,
            rational_decimal(&row.x, digits)?,
            row.y,
            row.y.approx(digits)?,
            row.side.as_str()
        )
        .expect("write to String");
    }
    Ok(out)
}

/// One block of rows per `(level, cover)` pair.
pub fn cover_csv(levels: &[(usize, Vec<Interval>)], digits: usize) -> Result<String> {
    let mut out = String::from(COVER_CSV_HEADER);
    out.push('\n');
    for (level, cover) in levels {
        for (index, iv) in cover.iter().enumerate() {
            writeln!(
                out,
                "{level},{index},{},{},{},{}",
                iv.lo(),
                iv.hi(),
                iv.lo().approx(digits)?,
                iv.hi().approx(digits)?
            )
            .expect("write to String");
        }
    }
    Ok(out)
}

pub fn preimage_csv(preimages: &[LevelSetPreimage], digits: usize) -> Result<String> {
    let mut out = String::from(PREIMAGE_CSV_HEADER);
    out.push('\n');
    for p in preimages {
        let word: String = p.labels.iter().map(|l| l.to_string()).collect();
        writeln!(
            out,
            "{word},{},{},{}",
            p.tail,
            p.x,
            rational_decimal(&p.x, digits)?
        )
        .expect("write to String");
    }
    Ok(out)
}

/// Graph of `f` as SVG. Each grid cell `[xᵢ, xᵢ₊₁]` is drawn as a segment
/// from `f(xᵢ)` to `f(xᵢ₊₁⁻)`; at binary points the attained value gets a
/// filled marker and the left limit an open one.
pub fn graph_svg(rows: &[GraphRow], upper: &ExactReal, width: u32, height: u32) -> String {
    let margin = 20.0;
    let w = f64::from(width) - 2.0 * margin;
    let h = f64::from(height) - 2.0 * margin;
    let y_max = upper.to_f64().max(f64::MIN_POSITIVE);
    let px = |row: &GraphRow| {
        let x = ExactReal::rational(row.x.clone()).to_f64();
        let y = row.y.to_f64();
        (margin + x * w, margin + h - y / y_max * h)
    };

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    writeln!(
        svg,
        r#"<rect x="{margin}" y="{margin}" width="{w}" height="{h}" fill="none" stroke="gray"/>"#
    )
    .unwrap();

    let values: Vec<&GraphRow> = rows.iter().filter(|r| r.side == Side::Value).collect();
    for pair in values.windows(2) {
        let (from, to) = (pair[0], pair[1]);
        let end = rows
            .iter()
            .find(|r| r.side == Side::Left && r.x == to.x)
            .unwrap_or(to);
        let (x0, y0) = px(from);
        let (x1, y1) = px(end);
        writeln!(
            svg,
            r#"<polyline points="{x0:.3},{y0:.3} {x1:.3},{y1:.3}" fill="none" stroke="black" stroke-width="1"/>"#
        )
        .unwrap();
    }
    for row in rows {
        let (x, y) = px(row);
        let fill = match row.side {
            Side::Value => "black",
            Side::Left => "white",
        };
        writeln!(
            svg,
            r#"<circle cx="{x:.3}" cy="{y:.3}" r="2.5" fill="{fill}" stroke="black"/>"#
        )
        .unwrap();
    }
    svg.push_str("</svg>\n");
    svg
}
