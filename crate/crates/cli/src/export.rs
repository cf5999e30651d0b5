//! Text exports of sampled curves and motions.

use std::f64::consts::PI;
use std::fmt::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::bundle::Pose;
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Obj,
    Svg,
}

impl FromStr for Format {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "obj" => Ok(Format::Obj),
            "svg" => Ok(Format::Svg),
            _ => Err(CliError::Format(s.to_string())),
        }
    }
}

fn float(out: &mut String, x: f64) {
    // 17 significant digits
    write!(out, "{x:.16e}").unwrap();
}

#[derive(Serialize)]
struct Polyline<'a> {
    points: &'a [[f64; 3]],
    speed: &'a [f64],
}

pub fn polyline_json(points: &[[f64; 3]], speed: &[f64]) -> String {
    serde_json::to_string_pretty(&Polyline { points, speed }).expect("floats are finite")
}

/// One `x,y,z` row per point.
pub fn polyline_csv(points: &[[f64; 3]]) -> String {
    let mut out = String::new();
    for p in points {
        for (i, x) in p.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            float(&mut out, *x);
        }
        out.push('\n');
    }
    out
}

/// Vertices and one closed `l` element.
pub fn polyline_obj(points: &[[f64; 3]]) -> String {
    let mut out = String::from("o phforge_curve\n");
    for p in points {
        out.push('v');
        for x in p {
            out.push(' ');
            float(&mut out, *x);
        }
        out.push('\n');
    }
    if !points.is_empty() {
        out.push('l');
        for i in 1..=points.len() {
            write!(out, " {i}").unwrap();
        }
        out.push_str(" 1\n");
    }
    out
}

/// Reads back the vertices and polyline indices (1-based) of an OBJ file.
pub fn parse_obj(text: &str) -> Result<(Vec<[f64; 3]>, Vec<usize>), CliError> {
    let mut vertices = Vec::new();
    let mut line = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let bad = |m: &str| CliError::Field {
            field: format!("line {}", no + 1),
            message: m.to_string(),
        };
        let mut it = raw.split_whitespace();
        match it.next() {
            Some("v") => {
                let c: Vec<f64> = it
                    .map(|s| s.parse::<f64>().map_err(|_| bad("bad coordinate")))
                    .collect::<Result<_, _>>()?;
                if c.len() < 3 {
                    return Err(bad("vertex needs three coordinates"));
                }
                vertices.push([c[0], c[1], c[2]]);
            }
            Some("l") => {
                for s in it {
                    let i: usize = s.parse().map_err(|_| bad("bad index"))?;
                    if i == 0 || i > vertices.len() {
                        return Err(bad("index out of range"));
                    }
                    line.push(i);
                }
            }
            _ => {}
        }
    }
    Ok((vertices, line))
}

/// `angle,t,x,y,z,qw,qx,qy,qz,tx,ty,tz,bx,by,bz,cx,cy,cz` per pose; `t` is
/// `inf` at the closure point.
pub fn poses_csv(poses: &[Pose]) -> String {
    let mut out = String::new();
    for p in poses {
        float(&mut out, p.angle);
        out.push(',');
        match p.parameter {
            Some(t) => float(&mut out, t),
            None => out.push_str("inf"),
        }
        let rest = p
            .position
            .iter()
            .chain(&p.rotation)
            .chain(p.frame.iter().flatten());
        for x in rest {
            out.push(',');
            float(&mut out, *x);
        }
        out.push('\n');
    }
    out
}

pub fn poses_json(poses: &[Pose]) -> String {
    serde_json::to_string_pretty(poses).expect("floats are finite")
}

const PANEL: f64 = 400.0;
const PAD: f64 = 20.0;

fn normalize(v: [f64; 3]) -> Option<[f64; 3]> {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    (n > 0.0 && n.is_finite()).then(|| v.map(|x| x / n))
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// Screen axes for looking along `view`.
fn screen_axes(view: [f64; 3]) -> Result<([f64; 3], [f64; 3]), CliError> {
    let d = normalize(view).ok_or_else(|| CliError::Field {
        field: "view".into(),
        message: "view direction must be nonzero".into(),
    })?;
    let up = if d[2].abs() < 0.9 { [0.0, 0.0, 1.0] } else { [0.0, 1.0, 0.0] };
    let e1 = normalize(cross(up, d)).unwrap();
    let e2 = cross(d, e1);
    Ok((e1, e2))
}

/// Closed path scaled into the panel at height `y0`. With `polar` the
/// origin stays at the panel centre and gets a marker.
fn path(out: &mut String, pts: &[(f64, f64)], y0: f64, polar: bool) {
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in pts {
        xmin = xmin.min(x);
        xmax = xmax.max(x);
        ymin = ymin.min(y);
        ymax = ymax.max(y);
    }
    let (cx, cy, span) = if polar {
        let r = xmin.abs().max(xmax.abs()).max(ymin.abs()).max(ymax.abs());
        (0.0, 0.0, 2.0 * r)
    } else {
        (0.5 * (xmin + xmax), 0.5 * (ymin + ymax), (xmax - xmin).max(ymax - ymin))
    };
    let s = (PANEL - 2.0 * PAD) / span.max(1e-300);
    if polar {
        let (ox, oy) = (PANEL / 2.0, y0 + PANEL / 2.0);
        writeln!(
            out,
            "  <path stroke=\"gray\" stroke-width=\"0.5\" d=\"M{:.3},{oy:.3} L{:.3},{oy:.3} M{ox:.3},{:.3} L{ox:.3},{:.3}\"/>",
            ox - 5.0,
            ox + 5.0,
            oy - 5.0,
            oy + 5.0
        )
        .unwrap();
    }
    out.push_str("  <path fill=\"none\" stroke=\"black\" stroke-width=\"1\" d=\"");
    for (i, &(x, y)) in pts.iter().enumerate() {
        let sx = PANEL / 2.0 + s * (x - cx);
        // SVG y grows downwards
        let sy = y0 + PANEL / 2.0 - s * (y - cy);
        write!(out, "{}{sx:.3},{sy:.3} ", if i == 0 { 'M' } else { 'L' }).unwrap();
    }
    out.push_str("Z\"/>\n");
}

/// Orthographic view of the closed polyline, with the polar plot of the
/// speed over the circle angle `2 psi` underneath.
pub fn svg(points: &[[f64; 3]], speed: &[f64], view: [f64; 3]) -> Result<String, CliError> {
    let (e1, e2) = screen_axes(view)?;
    let dot = |a: [f64; 3], b: [f64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    let projected: Vec<(f64, f64)> = points.iter().map(|&p| (dot(p, e1), dot(p, e2))).collect();
    let n = speed.len();
    let polar: Vec<(f64, f64)> = speed
        .iter()
        .enumerate()
        .map(|(k, &l)| {
            let a = 2.0 * PI * k as f64 / n as f64;
            (l * a.cos(), l * a.sin())
        })
        .collect();

    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{PANEL}\" height=\"{}\" viewBox=\"0 0 {PANEL} {}\">",
        2.0 * PANEL,
        2.0 * PANEL
    )
    .unwrap();
    out.push_str("  <g id=\"curve\">\n");
    path(&mut out, &projected, 0.0, false);
    out.push_str("  </g>\n  <g id=\"speed\">\n");
    path(&mut out, &polar, PANEL, true);
    out.push_str("  </g>\n</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn obj_round_trip() {
        let pts = vec![[0.1, 2.0, -3.5], [1.0 / 3.0, 0.0, 1e-20], [7.0, 8.0, 9.0]];
        let (v, l) = parse_obj(&polyline_obj(&pts)).unwrap();
        assert_eq!(v, pts);
        assert_eq!(l, vec![1, 2, 3, 1]);
    }

    #[test]
    fn csv_rows() {
        let csv = polyline_csv(&[[1.0, 2.0, 3.0], [0.5, -0.5, 0.0]]);
        let rows: Vec<Vec<f64>> = csv
            .lines()
            .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
            .collect();
        assert_eq!(rows, vec![vec![1.0, 2.0, 3.0], vec![0.5, -0.5, 0.0]]);
    }

    #[test]
    fn formats_parse() {
        assert_eq!("SVG".parse::<Format>().unwrap(), Format::Svg);
        assert!("png".parse::<Format>().is_err());
    }

    #[test]
    fn svg_has_two_closed_paths() {
        let pts: Vec<[f64; 3]> = (0..8).map(|k| [(k as f64).cos(), (k as f64).sin(), 0.0]).collect();
        let s = svg(&pts, &[1.0; 8], [0.0, 0.0, 1.0]).unwrap();
        assert_eq!(s.matches("fill=\"none\"").count(), 2);
        assert_eq!(s.matches("Z\"").count(), 2);
        assert!(svg(&pts, &[1.0; 8], [0.0; 3]).is_err());
    }
}
