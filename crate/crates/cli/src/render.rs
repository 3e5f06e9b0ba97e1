//! Deterministic text, JSON, CSV and SVG output. All floats are printed
//! with twelve significant digits so identical inputs render identically.

use std::fmt::Write as _;

use cubepath::distribution::ProbabilityGrid;
use cubepath::geometry::{ConvexPolygon, Point};
use cubepath::regions::RegionSet;
use cubepath::solver::SolveResult;
use cubepath::unfolding::nets::NetEnumeration;

/// Formats with at most `sig` significant digits, trimming trailing zeros;
/// fixed notation in the human range, scientific outside it.
pub fn format_sig(x: f64, sig: usize) -> String {
    assert!(sig > 0);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if exp < -4 || exp >= sig as i32 {
        let s = format!("{:.*e}", sig - 1, x);
        match s.split_once('e') {
            Some((mantissa, exponent)) => {
                format!("{}e{}", trim_decimal(mantissa), exponent)
            }
            None => s,
        }
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        trim_decimal(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_decimal(s: &str) -> &str {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.')
}

/// Twelve significant digits, the export precision.
pub fn sig12(x: f64) -> String {
    format_sig(x, 12)
}

fn json_points(vertices: &[Point]) -> String {
    let coords: Vec<String> = vertices
        .iter()
        .map(|v| format!("[{}, {}]", sig12(v.x), sig12(v.y)))
        .collect();
    format!("[{}]", coords.join(", "))
}

/// JSON report for a solved instance. Lengths are scaled by `edge_scale`
/// (half the physical edge length; 1 keeps half-edge units).
pub fn solve_json(result: &SolveResult, edge_scale: f64) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"length\": {},", sig12(result.length * edge_scale));
    let _ = writeln!(out, "  \"faces\": {},", result.faces);
    let minimizers: Vec<String> = result
        .minimizers
        .iter()
        .map(|m| format!("\"{m}\""))
        .collect();
    let _ = writeln!(out, "  \"minimizers\": [{}],", minimizers.join(", "));
    out.push_str("  \"candidates\": [\n");
    for (i, c) in result.candidates.iter().enumerate() {
        let class = if c.is_ls() { "LS" } else { "PSEUDO" };
        let faces = match c.faces() {
            Some(f) => f.to_string(),
            None => "null".to_string(),
        };
        let comma = if i + 1 < result.candidates.len() {
            ","
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "    {{\"seq\": \"{}\", \"length_sq\": {}, \"class\": \"{}\", \"faces\": {}}}{}",
            c.sequence,
            sig12(c.length_sq * edge_scale * edge_scale),
            class,
            faces,
            comma
        );
    }
    out.push_str("  ]\n}\n");
    out
}

/// Plain-text report for a solved instance.
pub fn solve_text(result: &SolveResult, edge_scale: f64) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "length      {}", sig12(result.length * edge_scale));
    let _ = writeln!(out, "faces       {}", result.faces);
    let minimizers: Vec<String> = result.minimizers.iter().map(|m| m.to_string()).collect();
    let _ = writeln!(out, "minimizers  {}", minimizers.join(" "));
    let _ = writeln!(out, "candidates:");
    for c in &result.candidates {
        let class = if c.is_ls() { "LS" } else { "pseudo" };
        let _ = writeln!(
            out,
            "  {:<4} {:>18}  {}",
            c.sequence.to_string(),
            sig12(c.length_sq * edge_scale * edge_scale),
            class
        );
    }
    out
}

/// JSON dump of a region set: every three-move sequence with its polygon.
pub fn regions_json(rs: &RegionSet) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(
        out,
        "  \"source\": [{}, {}],",
        sig12(rs.source.x),
        sig12(rs.source.y)
    );
    let _ = writeln!(out, "  \"union_area\": {},", sig12(rs.union_area));
    let _ = writeln!(out, "  \"probability\": {},", sig12(rs.probability));
    out.push_str("  \"regions\": [\n");
    let polys: Vec<_> = rs.polygons().collect();
    for (i, (seq, poly)) in polys.iter().enumerate() {
        let comma = if i + 1 < polys.len() { "," } else { "" };
        let _ = writeln!(
            out,
            "    {{\"seq\": \"{}\", \"area\": {}, \"vertices\": {}}}{}",
            seq,
            sig12(poly.area()),
            json_points(poly.vertices()),
            comma
        );
    }
    out.push_str("  ]\n}\n");
    out
}

fn svg_path_points(poly: &ConvexPolygon) -> String {
    poly.vertices()
        .iter()
        .map(|v| format!("{},{}", sig12(v.x), sig12(-v.y)))
        .collect::<Vec<_>>()
        .join(" ")
}

/// SVG plot of the endpoint regions on the base face: face outline, source
/// point, one labeled polygon per nonempty region.
pub fn regions_svg(rs: &RegionSet) -> String {
    let mut out = String::new();
    out.push_str("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n");
    out.push_str("  <rect x=\"-1.1\" y=\"-1.1\" width=\"2.2\" height=\"2.2\" fill=\"white\"/>\n");
    out.push_str(
        "  <rect x=\"-1\" y=\"-1\" width=\"2\" height=\"2\" fill=\"none\" stroke=\"black\" stroke-width=\"0.01\"/>\n",
    );
    for (seq, poly) in rs.nonempty() {
        let _ = writeln!(
            out,
            "  <polygon points=\"{}\" fill=\"#bbbbbb\" stroke=\"#444444\" stroke-width=\"0.008\"/>",
            svg_path_points(poly)
        );
        if let Some(c) = poly.vertex_centroid() {
            let _ = writeln!(
                out,
                "  <text x=\"{}\" y=\"{}\" font-size=\"0.1\" font-family=\"monospace\" text-anchor=\"middle\">{}</text>",
                sig12(c.x),
                sig12(-c.y + 0.035),
                seq
            );
        }
    }
    let _ = writeln!(
        out,
        "  <circle cx=\"{}\" cy=\"{}\" r=\"0.025\" fill=\"black\"/>",
        sig12(rs.source.x),
        sig12(-rs.source.y)
    );
    out.push_str("</svg>\n");
    out
}

/// CSV export: header `s1,s2,probability`, one row per lattice point,
/// second coordinate varying slowest.
pub fn heatmap_csv(grid: &ProbabilityGrid) -> String {
    let mut out = String::with_capacity(grid.n() * grid.n() * 24);
    out.push_str("s1,s2,probability\n");
    for (s1, s2, value) in grid.rows() {
        let _ = writeln!(out, "{},{},{}", sig12(s1), sig12(s2), sig12(value));
    }
    out
}

/// Grayscale raster of the grid: zero probability renders white, the
/// maximum black.
pub fn heatmap_svg(grid: &ProbabilityGrid) -> String {
    let n = grid.n();
    let cell = 2.0 / n as f64;
    let vmax = grid.max_value();
    let mut out = String::with_capacity(n * n * 64);
    out.push_str("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n");
    out.push_str("  <rect x=\"-1.1\" y=\"-1.1\" width=\"2.2\" height=\"2.2\" fill=\"white\"/>\n");
    for j in 0..n {
        for i in 0..n {
            let v = grid.value(i, j);
            let level = if vmax > 0.0 {
                (255.0 * (1.0 - v / vmax)).round() as u8
            } else {
                255
            };
            if level == 255 {
                continue;
            }
            let x = grid.axis()[i] - cell / 2.0;
            let y = -(grid.axis()[j] + cell / 2.0);
            let _ = writeln!(
                out,
                "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"rgb({level},{level},{level})\"/>",
                sig12(x),
                sig12(y),
                sig12(cell),
                sig12(cell)
            );
        }
    }
    out.push_str(
        "  <rect x=\"-1\" y=\"-1\" width=\"2\" height=\"2\" fill=\"none\" stroke=\"black\" stroke-width=\"0.01\"/>\n",
    );
    out.push_str("</svg>\n");
    out
}

/// Text report of the net enumeration with one ASCII hexomino per class.
pub fn nets_text(nets: &NetEnumeration) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "spanning trees:     {}", nets.tree_count);
    let _ = writeln!(out, "congruence classes: {}", nets.class_count);
    for (i, rep) in nets.representatives.iter().enumerate() {
        let _ = writeln!(out, "\nclass {}:", i + 1);
        out.push_str(&rep.ascii());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(4.0), "4");
        assert_eq!(sig12(5.9344), "5.9344");
        assert_eq!(sig12(-0.9), "-0.9");
        assert_eq!(sig12(1.0 / 3.0), "0.333333333333");
        assert_eq!(sig12(16.0), "16");
        assert_eq!(format_sig(123456.0, 3), "1.23e5");
        assert_eq!(format_sig(0.00001, 6), "1e-5");
    }

    #[test]
    fn solve_json_shape() {
        let r = cubepath::solver::solve(Point::new(0.0, -0.9), Point::new(0.98, -0.8)).unwrap();
        let json = solve_json(&r, 1.0);
        assert!(json.contains("\"minimizers\": [\"DRD\"]"));
        assert!(json.contains("\"length_sq\": 5.9344"));
        assert!(json.contains("\"faces\": 4"));
        assert!(json.contains("\"class\": \"PSEUDO\""));
        assert!(json.contains("\"faces\": null"));
        // Deterministic output.
        assert_eq!(json, solve_json(&r, 1.0));
    }

    #[test]
    fn regions_svg_labels_nonempty_regions() {
        let rs = cubepath::regions::region_set(Point::new(0.0, -0.9));
        let svg = regions_svg(&rs);
        for label in ["RUR", "LUL", "DRD", "DLD"] {
            assert!(svg.contains(&format!(">{label}</text>")), "{label}");
        }
        assert!(svg.contains("<circle"));
    }

    #[test]
    fn heatmap_csv_row_count() {
        let grid = cubepath::distribution::heatmap(3, cubepath::distribution::HeatmapMode::Exact);
        let csv = heatmap_csv(&grid);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "s1,s2,probability");
        assert_eq!(lines.len(), 1 + 9);
        // Row-major with the second coordinate slowest.
        assert!(lines[1].starts_with("-0.666666666667,-0.666666666667,"));
        assert!(lines[2].starts_with("0,-0.666666666667,"));
    }
}
