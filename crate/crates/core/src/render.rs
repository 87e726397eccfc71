//! SVG drawings of layouts.
//!
//! The origin is the bottom-left corner of the strip. Partitions are drawn
//! as bold lines spanning the strip, squares as filled boxes tagged with
//! their label, and the strip itself as a frame of width `b`. A layout that
//! overflows the strip or leaves squares out is still drawn, under an
//! `INFEASIBLE` banner.

use std::fmt::Write as _;

use crate::instance::Instance;
use crate::report::SolutionReport;

/// Drawing constants. Only `scale` affects coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SvgStyle {
    /// Pixels per unit of length.
    pub scale: u32,
    pub margin: u32,
    pub banner_height: u32,
    pub partition_stroke: u32,
    pub frame_stroke: u32,
    pub square_fill: &'static str,
    pub square_stroke: &'static str,
    pub partition_color: &'static str,
    pub font_family: &'static str,
    pub font_size: u32,
}

impl Default for SvgStyle {
    fn default() -> Self {
        Self {
            scale: 10,
            margin: 20,
            banner_height: 28,
            partition_stroke: 3,
            frame_stroke: 2,
            square_fill: "#c6dbef",
            square_stroke: "#2171b5",
            partition_color: "#252525",
            font_family: "sans-serif",
            font_size: 12,
        }
    }
}

fn prefix_sums(values: impl Iterator<Item = u64>) -> Vec<u64> {
    let mut acc = vec![0];
    for v in values {
        acc.push(acc.last().copied().unwrap_or(0) + v);
    }
    acc
}

pub fn render_svg(inst: &Instance, report: &SolutionReport, style: &SvgStyle) -> String {
    let layout = report.layout();
    let (rows, cols) = layout.shape();
    let row_heights: Vec<u64> = (0..rows)
        .map(|r| layout.row(r).iter().map(|&l| inst.length(l)).max().unwrap_or(0))
        .collect();
    let col_widths: Vec<u64> = (0..cols)
        .map(|c| layout.column(c).map(|l| inst.length(l)).max().unwrap_or(0))
        .collect();
    let ys = prefix_sums(row_heights.iter().copied());
    let xs = prefix_sums(col_widths.iter().copied());

    let b = inst.strip_width();
    let height = report.height();
    let span = b.max(report.width());
    let scale = u64::from(style.scale);
    let margin = u64::from(style.margin);
    let top = margin
        + if report.feasible() {
            0
        } else {
            u64::from(style.banner_height)
        };
    let px = |x: u64| margin + x * scale;
    let py = |y: u64| top + (height - y) * scale;

    let canvas_w = 2 * margin + span * scale;
    let canvas_h = top + height * scale + margin;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{canvas_w}" height="{canvas_h}" viewBox="0 0 {canvas_w} {canvas_h}">"#
    );
    let _ = writeln!(
        svg,
        r#"<style>.square {{ fill: {}; stroke: {}; stroke-width: 1 }} .partition {{ stroke: {}; stroke-width: {} }} .strip {{ fill: none; stroke: {}; stroke-width: {} }} text {{ font-family: {}; font-size: {}px }} .banner {{ fill: #b30000; font-weight: bold }}</style>"#,
        style.square_fill,
        style.square_stroke,
        style.partition_color,
        style.partition_stroke,
        style.partition_color,
        style.frame_stroke,
        style.font_family,
        style.font_size,
    );

    if !report.feasible() {
        let reason = if report.places_all() {
            format!("width {} exceeds strip width {b}", report.width())
        } else {
            format!("{} cells for {} squares", rows * cols, inst.n())
        };
        let _ = writeln!(
            svg,
            r#"<text class="banner" x="{margin}" y="{}">INFEASIBLE: {reason}</text>"#,
            margin + u64::from(style.font_size)
        );
    }

    for (r, &y0) in ys.iter().enumerate().take(rows) {
        for (c, &x0) in xs.iter().enumerate().take(cols) {
            let label = layout.get(r, c);
            let len = inst.length(label);
            if len == 0 {
                continue;
            }
            let (x, y) = (px(x0), py(y0 + len));
            let side = len * scale;
            let _ = writeln!(
                svg,
                r#"<rect class="square" x="{x}" y="{y}" width="{side}" height="{side}"/>"#
            );
            let _ = writeln!(
                svg,
                r#"<text class="label" x="{}" y="{}" text-anchor="middle" dominant-baseline="central">{label}</text>"#,
                x + side / 2,
                y + side / 2
            );
        }
    }

    for &y in &ys[1..rows] {
        let _ = writeln!(
            svg,
            r#"<line class="partition" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            px(0),
            py(y),
            px(span),
            py(y)
        );
    }
    for &x in &xs[1..cols] {
        let _ = writeln!(
            svg,
            r#"<line class="partition" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            px(x),
            py(0),
            px(x),
            py(height)
        );
    }

    let _ = writeln!(
        svg,
        r#"<rect class="strip" x="{}" y="{}" width="{}" height="{}"/>"#,
        px(0),
        py(height),
        b * scale,
        height * scale
    );
    svg.push_str("</svg>\n");
    svg
}
