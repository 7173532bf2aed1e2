//! SVG and ASCII diagrams of a dimension map.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::adlv::Entry;
use crate::affine_weyl::{alcoves_up_to, in_shrunken, locate, walls, Alcove, DENOM};
use crate::cli::mapfile::MapFile;
use crate::error::Result;
use crate::root_data::{Coords, RootSystem, RootSystemKind};

const SQRT3: f64 = 1.732_050_807_568_877_2;
const MARGIN: f64 = 12.0;
const STRIP_HEIGHT: f64 = 1.0;
// Keeps grid samples off the walls.
const JITTER: f64 = 0.0137;

/// Euclidean position of a chart point scaled by [`DENOM`].
fn embed(kind: RootSystemKind, p: Coords) -> (f64, f64) {
    let (p1, p2) = (p[0] as f64 / DENOM as f64, p[1] as f64 / DENOM as f64);
    match kind {
        RootSystemKind::A1 => (p1, 0.0),
        RootSystemKind::A2 => (p1, (p1 + 2.0 * p2) / SQRT3),
        RootSystemKind::C2 => (p1 + p2 / 2.0, p2 / 2.0),
    }
}

/// Inverse of [`embed`] for rank 2, in units of `1 / den`.
fn chart_of(kind: RootSystemKind, x: f64, y: f64, den: i64) -> Coords {
    let (p1, p2) = match kind {
        RootSystemKind::A1 => (x, 0.0),
        RootSystemKind::A2 => (x, (SQRT3 * y - x) / 2.0),
        RootSystemKind::C2 => (x - y, 2.0 * y),
    };
    [
        (p1 * den as f64).round() as i64,
        (p2 * den as f64).round() as i64,
    ]
}

fn pixels_per_unit(kind: RootSystemKind) -> f64 {
    match kind {
        RootSystemKind::A1 => 40.0,
        RootSystemKind::A2 => 48.0,
        RootSystemKind::C2 => 80.0,
    }
}

/// Polygon of an alcove in Euclidean coordinates.
fn shape(rs: &RootSystem, a: &Alcove) -> Vec<(f64, f64)> {
    let pts: Vec<(f64, f64)> = a
        .vertices(rs)
        .into_iter()
        .map(|v| embed(rs.kind, v))
        .collect();
    if rs.rank == 1 {
        let (x0, x1) = (pts[0].0.min(pts[1].0), pts[0].0.max(pts[1].0));
        vec![(x0, 0.0), (x1, 0.0), (x1, STRIP_HEIGHT), (x0, STRIP_HEIGHT)]
    } else {
        pts
    }
}

fn label_point(rs: &RootSystem, a: &Alcove) -> (f64, f64) {
    let (x, y) = embed(rs.kind, a.barycenter);
    if rs.rank == 1 {
        (x, STRIP_HEIGHT / 2.0)
    } else {
        (x, y)
    }
}

/// Segments separating the shrunken region from its complement.
fn shrunken_boundary(rs: &RootSystem, tiling: &[Alcove]) -> Vec<((f64, f64), (f64, f64))> {
    let mut out = Vec::new();
    for a in tiling.iter().filter(|a| in_shrunken(rs, a)) {
        for (_, n) in walls(rs, a) {
            if in_shrunken(rs, &n) {
                continue;
            }
            let shared: Vec<Coords> = a
                .vertices(rs)
                .into_iter()
                .filter(|v| n.contains_vertex(rs, *v))
                .collect();
            if rs.rank == 1 {
                let (x, _) = embed(rs.kind, shared[0]);
                out.push(((x, 0.0), (x, STRIP_HEIGHT)));
            } else {
                out.push((embed(rs.kind, shared[0]), embed(rs.kind, shared[1])));
            }
        }
    }
    out.sort_by(|p, q| p.partial_cmp(q).expect("finite coordinates"));
    out.dedup();
    out
}

/// SVG 1.1 drawing of the window of `map`: the tiling, one dimension label
/// per non-empty entry, and the shrunken boundary in bold.
pub fn render_svg(map: &MapFile) -> Result<String> {
    let rs = RootSystem::new(map.group);
    let entries = map.alcove_entries(&rs)?;
    let tiling = alcoves_up_to(&rs, map.window);
    let scale = pixels_per_unit(rs.kind);

    let polys: Vec<Vec<(f64, f64)>> = tiling.iter().map(|a| shape(&rs, a)).collect();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for (x, y) in polys.iter().flatten() {
        x0 = x0.min(*x);
        x1 = x1.max(*x);
        y0 = y0.min(*y);
        y1 = y1.max(*y);
    }
    let width = (x1 - x0) * scale + 2.0 * MARGIN;
    let height = (y1 - y0) * scale + 2.0 * MARGIN;
    let px = |(x, y): (f64, f64)| ((x - x0) * scale + MARGIN, (y1 - y) * scale + MARGIN);

    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    )
    .unwrap();
    writeln!(
        s,
        r#"<title>{} dimension map, window {}</title>"#,
        rs.kind.group_name(),
        map.window
    )
    .unwrap();
    writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##).unwrap();

    writeln!(
        s,
        r##"<g id="tiling" fill="none" stroke="#999999" stroke-width="0.6">"##
    )
    .unwrap();
    for poly in &polys {
        let pts: Vec<String> = poly
            .iter()
            .map(|p| px(*p))
            .map(|(x, y)| format!("{x:.2},{y:.2}"))
            .collect();
        writeln!(s, r#"<polygon points="{}"/>"#, pts.join(" ")).unwrap();
    }
    writeln!(s, "</g>").unwrap();

    let font = scale * if rs.rank == 2 { 0.22 } else { 0.35 };
    writeln!(
        s,
        r#"<g id="labels" font-family="sans-serif" font-size="{font:.1}" text-anchor="middle" dominant-baseline="central">"#
    )
    .unwrap();
    for a in &tiling {
        if let Some(Entry::Dim(d)) = entries.get(a) {
            let (x, y) = px(label_point(&rs, a));
            writeln!(s, r#"<text x="{x:.2}" y="{y:.2}">{d}</text>"#).unwrap();
        }
    }
    writeln!(s, "</g>").unwrap();

    writeln!(
        s,
        r##"<g id="shrunken-boundary" stroke="#000000" stroke-width="2.5" stroke-linecap="round">"##
    )
    .unwrap();
    for (p, q) in shrunken_boundary(&rs, &tiling) {
        let ((ax, ay), (bx, by)) = (px(p), px(q));
        writeln!(
            s,
            r#"<line x1="{ax:.2}" y1="{ay:.2}" x2="{bx:.2}" y2="{by:.2}"/>"#
        )
        .unwrap();
    }
    writeln!(s, "</g>").unwrap();
    writeln!(s, "</svg>").unwrap();
    Ok(s)
}

fn cell(e: Option<&Entry>) -> String {
    match e {
        Some(Entry::Dim(d)) => format!("{d:>3}"),
        Some(Entry::Empty) => "  .".to_string(),
        None => "   ".to_string(),
    }
}

/// Text grid sampled row by row; `.` marks an empty variety and blanks lie
/// outside the window or on a wall.
pub fn render_ascii(map: &MapFile) -> Result<String> {
    let rs = RootSystem::new(map.group);
    let entries = map.alcove_entries(&rs)?;
    let tiling = alcoves_up_to(&rs, map.window);
    let mut out = String::new();
    writeln!(
        out,
        "{} window {} radius {}",
        rs.kind.group_name(),
        map.window,
        map.radius
    )
    .unwrap();
    if tiling.is_empty() {
        return Ok(out);
    }

    if rs.rank == 1 {
        let mut row: Vec<&Alcove> = tiling.iter().collect();
        row.sort_by_key(|a| a.barycenter[0]);
        let line: String = row.iter().map(|a| cell(entries.get(*a))).collect();
        writeln!(out, "{}", line.trim_end()).unwrap();
        return Ok(out);
    }

    let (step, den) = match rs.kind {
        RootSystemKind::C2 => (0.125, 8 * DENOM * 97),
        _ => (0.25, 4 * DENOM * 97),
    };
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for a in &tiling {
        for (x, y) in shape(&rs, a) {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
    }
    let cols = ((x1 - x0) / step).ceil() as i64;
    let rows = ((y1 - y0) / step).ceil() as i64;
    let in_window: HashSet<Alcove> = tiling.iter().copied().collect();
    for r in 0..rows {
        let y = y1 - (r as f64 + 0.5) * step;
        let mut line = String::new();
        for c in 0..cols {
            let x = x0 + (c as f64 + 0.5) * step + JITTER;
            let found = locate(&rs, chart_of(rs.kind, x, y, den), den)
                .ok()
                .filter(|a| in_window.contains(a));
            line.push_str(&cell(found.as_ref().and_then(|a| entries.get(a))));
        }
        writeln!(out, "{}", line.trim_end()).unwrap();
    }
    Ok(out)
}
