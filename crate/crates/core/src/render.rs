//! Byte-deterministic SVG pictures of regions and of the layered pre-image
//! decomposition. One `<rect>` per lattice point; nothing else in the
//! document is a `<rect>`.

use std::fmt::Write as _;

use crate::error::Result;
use crate::phi::preimage_enumerate;
use crate::regions::{oct, Region};
use crate::gaussian::GaussianInt;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    /// Grid spacing in user units.
    pub cell: f64,
    /// Marker side as a fraction of `cell`.
    pub marker: f64,
    /// Draw the real and imaginary axes.
    pub axes: bool,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle { cell: 10.0, marker: 0.8, axes: true }
    }
}

impl RenderStyle {
    /// Lightness of layer `j`: 85% minus 20% per layer, floored at 25%.
    pub fn layer_lightness(j: u32) -> u32 {
        85u32.saturating_sub(j.saturating_mul(20)).max(25)
    }

    /// `#rrggbb` gray for layer `j`.
    pub fn layer_fill(j: u32) -> String {
        let v = (255.0 * Self::layer_lightness(j) as f64 / 100.0).round() as u8;
        format!("#{v:02x}{v:02x}{v:02x}")
    }
}

/// Up to three decimals, trailing zeros and a trailing point stripped.
fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".to_string() } else { s.to_string() }
}

struct Canvas<'a> {
    style: &'a RenderStyle,
    out: String,
}

impl<'a> Canvas<'a> {
    /// `half` is the largest |coordinate| to be drawn.
    fn new(style: &'a RenderStyle, half: i64) -> Self {
        let c = style.cell;
        let lo = -(half as f64 + 1.5) * c;
        let size = (2 * half) as f64 * c + 3.0 * c;
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
            num(size), num(size), num(lo), num(lo), num(size), num(size)
        );
        if style.axes {
            let _ = writeln!(
                out,
                "<g stroke=\"#000000\" stroke-width=\"{}\"><line x1=\"{}\" y1=\"0\" x2=\"{}\" y2=\"0\"/><line x1=\"0\" y1=\"{}\" x2=\"0\" y2=\"{}\"/></g>",
                num(c / 20.0), num(lo), num(-lo), num(lo), num(-lo)
            );
        }
        Canvas { style, out }
    }

    fn open_group(&mut self, fill: &str) {
        let _ = writeln!(self.out, "<g fill=\"{fill}\" stroke=\"none\">");
    }

    fn close_group(&mut self) {
        self.out.push_str("</g>\n");
    }

    fn marker(&mut self, z: GaussianInt) {
        let c = self.style.cell;
        let side = c * self.style.marker;
        // positive imaginary direction points up
        let cx = z.x as f64 * c;
        let cy = -(z.y as f64) * c;
        let _ = writeln!(
            self.out,
            "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/>",
            num(cx - side / 2.0),
            num(cy - side / 2.0),
            num(side),
            num(side)
        );
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }
}

/// Every lattice point of `r`, origin at the center.
pub fn render_region(r: &Region, style: &RenderStyle) -> String {
    let mut canvas = Canvas::new(style, r.a());
    canvas.open_group(&RenderStyle::layer_fill(0));
    for z in r.points() {
        canvas.marker(z);
    }
    canvas.close_group();
    canvas.finish()
}

/// `phi^{-1}([0, n])` with one gray per layer `2^j S_{n-2j}`, lighter for
/// smaller `j`. The origin is drawn with layer 0.
pub fn render_decomposition(n: u32, style: &RenderStyle) -> Result<String> {
    let mut canvas = Canvas::new(style, oct(n)?.a());
    let mut current: Option<u32> = None;
    for p in preimage_enumerate(n)? {
        let j = p.layer.unwrap_or(0);
        if current != Some(j) {
            if current.is_some() {
                canvas.close_group();
            }
            canvas.open_group(&RenderStyle::layer_fill(j));
            current = Some(j);
        }
        canvas.marker(p.z);
    }
    canvas.close_group();
    Ok(canvas.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn markers(svg: &str) -> usize {
        svg.matches("<rect ").count()
    }

    fn grays(svg: &str) -> BTreeSet<&str> {
        svg.match_indices("<g fill=\"")
            .map(|(i, _)| &svg[i + 9..i + 16])
            .collect()
    }

    #[test]
    fn number_format() {
        assert_eq!(num(4.0), "4");
        assert_eq!(num(-4.5), "-4.5");
        assert_eq!(num(0.125), "0.125");
        assert_eq!(num(-0.0), "0");
    }

    #[test]
    fn palette() {
        assert_eq!(RenderStyle::layer_lightness(0), 85);
        assert_eq!(RenderStyle::layer_lightness(1), 65);
        assert_eq!(RenderStyle::layer_lightness(3), 25);
        assert_eq!(RenderStyle::layer_lightness(9), 25);
        assert_eq!(RenderStyle::layer_fill(0), "#d9d9d9");
        for j in 0..3 {
            assert!(RenderStyle::layer_lightness(j + 1) < RenderStyle::layer_lightness(j));
        }
    }

    #[test]
    fn region_marker_counts() {
        let style = RenderStyle::default();
        for (a, b, n) in [(1, 1, 5), (5, 6, 81), (2, 3, 21)] {
            let svg = render_region(&Region::new(a, b).unwrap(), &style);
            assert_eq!(markers(&svg), n);
            assert_eq!(svg, render_region(&Region::new(a, b).unwrap(), &style));
        }
    }

    #[test]
    fn decomposition_layers() {
        let style = RenderStyle::default();
        for (n, count, layers) in [(0, 5, 1), (3, 125, 2), (4, 297, 3)] {
            let svg = render_decomposition(n, &style).unwrap();
            assert_eq!(markers(&svg), count);
            assert_eq!(grays(&svg).len(), layers);
        }
    }

    #[test]
    fn positive_imaginary_is_up() {
        let style = RenderStyle { axes: false, ..RenderStyle::default() };
        let svg = render_region(&Region::new(1, 1).unwrap(), &style);
        // first point in row-major order is -i, drawn below the origin
        let first = svg.lines().find(|l| l.starts_with("<rect")).unwrap();
        assert_eq!(first, "<rect x=\"-4\" y=\"6\" width=\"8\" height=\"8\"/>");
    }
}
