//! SVG pictures of the fundamental tile for `d = 2`.

use std::fmt::Write as _;

use heawood_core::lattice::{self, KSignature, WCoefficientVector};
use heawood_core::{Error, Result};

use crate::domain::{domain_vectors, DomainKind};

/// Scene coordinates are ambient coordinates times this factor, which
/// keeps the permutahedron domain integral.
pub const SCALE: i64 = 3;

const PALETTE: [&str; 7] = [
    "#e69f00", "#56b4e9", "#009e73", "#f0e442", "#0072b2", "#d55e00", "#cc79a7",
];

// Permutations of (1,2,3) in boundary order of the hexagon.
const HEXAGON: [[i64; 3]; 6] = [
    [1, 2, 3],
    [1, 3, 2],
    [2, 3, 1],
    [3, 2, 1],
    [3, 1, 2],
    [2, 1, 3],
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    pub points: Vec<[i64; 3]>,
}

impl Polygon {
    /// Twice the signed area in the `(x, y)` coordinate chart, scaled.
    pub fn doubled_area(&self) -> i64 {
        let n = self.points.len();
        (0..n)
            .map(|i| {
                let (a, b) = (self.points[i], self.points[(i + 1) % n]);
                a[0] * b[1] - a[1] * b[0]
            })
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TileHexagon {
    pub offset: WCoefficientVector,
    pub outline: Polygon,
    pub color: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderScene2D {
    pub k: KSignature,
    pub hexagons: Vec<TileHexagon>,
    pub domain: Option<(DomainKind, Polygon)>,
}

fn scaled(p: &[i64], shift: &[i64]) -> [i64; 3] {
    [
        SCALE * p[0] + shift[0],
        SCALE * p[1] + shift[1],
        SCALE * p[2] + shift[2],
    ]
}

/// One hexagon per fundamental vector, plus the requested domain outline
/// anchored at the center of the tile at the origin.
pub fn fundamental_tile_scene(k: &KSignature, domain: Option<DomainKind>) -> Result<RenderScene2D> {
    if k.d() != 2 {
        return Err(Error::UnsupportedDimension { dimension: k.d() });
    }
    let hexagons = lattice::enumerate_fundamental(k)
        .into_iter()
        .enumerate()
        .map(|(i, class)| {
            let shift: Vec<i64> = lattice::to_ambient(&class.rep)
                .iter()
                .map(|x| SCALE * x)
                .collect();
            let points = HEXAGON.iter().map(|p| scaled(p, &shift)).collect();
            TileHexagon {
                offset: class.rep,
                outline: Polygon { points },
                color: PALETTE[i % PALETTE.len()],
            }
        })
        .collect();
    let center = [2 * SCALE; 3];
    let domain = match domain {
        None | Some(DomainKind::FundamentalTile) => None,
        Some(kind) => {
            let p = domain_vectors(k, kind)?.ambient_all();
            let points = match kind {
                DomainKind::Parallelepiped => [[0, 0], [1, 0], [1, 1], [0, 1]]
                    .iter()
                    .map(|a| {
                        let q: Vec<i64> = (0..3).map(|j| a[0] * p[0][j] + a[1] * p[1][j]).collect();
                        scaled(&q, &center)
                    })
                    .collect(),
                _ => HEXAGON
                    .iter()
                    .map(|a| {
                        // (1/3)·Σ a_i p_i, times SCALE = 3
                        let q: Vec<i64> = (0..3)
                            .map(|j| (0..3).map(|i| a[i] * p[i][j]).sum())
                            .collect();
                        [q[0] + center[0], q[1] + center[1], q[2] + center[2]]
                    })
                    .collect(),
            };
            Some((kind, Polygon { points }))
        }
    };
    Ok(RenderScene2D {
        k: k.clone(),
        hexagons,
        domain,
    })
}

/// Axes at 240°, 0° and 120°, with the SVG y axis pointing down.
pub fn project(p: [i64; 3]) -> (f64, f64) {
    let s = 3f64.sqrt() / 2.0;
    let (x, y, z) = (p[0] as f64, p[1] as f64, p[2] as f64);
    let px = -0.5 * x + y - 0.5 * z;
    let py = -s * x + s * z;
    (px / SCALE as f64, -py / SCALE as f64)
}

fn points_attr(poly: &Polygon, unit: f64) -> String {
    let mut s = String::new();
    for (i, &p) in poly.points.iter().enumerate() {
        let (x, y) = project(p);
        if i > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{:.3},{:.3}", x * unit, y * unit);
    }
    s
}

pub fn to_svg(scene: &RenderScene2D) -> String {
    let unit = 20.0;
    let all = scene
        .hexagons
        .iter()
        .map(|h| &h.outline)
        .chain(scene.domain.iter().map(|(_, p)| p));
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for poly in all {
        for &p in &poly.points {
            let (x, y) = project(p);
            x0 = x0.min(x * unit);
            y0 = y0.min(y * unit);
            x1 = x1.max(x * unit);
            y1 = y1.max(y * unit);
        }
    }
    let pad = unit;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.3} {:.3} {:.3} {:.3}">"#,
        x0 - pad,
        y0 - pad,
        x1 - x0 + 2.0 * pad,
        y1 - y0 + 2.0 * pad
    );
    let _ = writeln!(out, "<title>fundamental tile k=({})</title>", scene.k);
    for h in &scene.hexagons {
        let _ = writeln!(
            out,
            r##"<polygon class="hex" data-offset="{}" points="{}" fill="{}" stroke="#333" stroke-width="0.5"/>"##,
            h.offset
                .coeffs()
                .iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(","),
            points_attr(&h.outline, unit),
            h.color
        );
    }
    if let Some((kind, poly)) = &scene.domain {
        let _ = writeln!(
            out,
            r#"<polygon class="domain" data-kind="{}" points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
            kind.name(),
            points_attr(poly, unit)
        );
    }
    out.push_str("</svg>\n");
    out
}
