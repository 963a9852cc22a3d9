//! Planar drawings of two-dimensional diamond embeddings (hexagonal tiling).

use std::fmt::Write as _;

use thiserror::Error;

use crate::diamond::DiamondEmbedding;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DrawError {
    #[error("expected a 3-coordinate vector, got {0} coordinates")]
    WrongVectorLength(usize),
    #[error("only dimension-2 embeddings can be drawn (got dimension {0})")]
    UnsupportedDimension(usize),
    #[error("embedding has {found} vectors but the graph has {expected} vertices")]
    VertexCountMismatch { expected: usize, found: usize },
    #[error("invalid drawing configuration: {0}")]
    InvalidConfig(&'static str),
}

#[derive(Debug, Clone, PartialEq)]
pub struct DrawingConfig {
    /// Pixels per unit length.
    pub scale: f64,
    pub margin: f64,
    pub vertex_radius: f64,
}

impl Default for DrawingConfig {
    fn default() -> Self {
        DrawingConfig {
            scale: 100.0,
            margin: 20.0,
            vertex_radius: 4.0,
        }
    }
}

impl DrawingConfig {
    pub fn validate(&self) -> Result<(), DrawError> {
        if !(self.scale.is_finite() && self.scale > 0.0) {
            return Err(DrawError::InvalidConfig("scale must be positive"));
        }
        if !(self.margin.is_finite() && self.margin >= 0.0) {
            return Err(DrawError::InvalidConfig("margin must be non-negative"));
        }
        if !(self.vertex_radius.is_finite() && self.vertex_radius >= 0.0) {
            return Err(DrawError::InvalidConfig("vertex radius must be non-negative"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarPoint {
    pub x: f64,
    pub y: f64,
}

/// Orthogonal projection of a point of `Z^3` onto the plane `x + y + z = 0`,
/// in the orthonormal basis `(1,-1,0)/sqrt 2`, `(1,1,-2)/sqrt 6`.
pub fn project_to_plane(v: &[i64]) -> Result<PlanarPoint, DrawError> {
    let [a, b, c] = v else {
        return Err(DrawError::WrongVectorLength(v.len()));
    };
    let (a, b, c) = (*a as f64, *b as f64, *c as f64);
    Ok(PlanarPoint {
        x: (a - b) / 2f64.sqrt(),
        y: (a + b - 2.0 * c) / 6f64.sqrt(),
    })
}

/// Renders a dimension-2 embedding as SVG 1.1: one `line` per edge in edge
/// order, then one `circle` per vertex in vertex order.
pub fn emit_svg(g: &Graph, e: &DiamondEmbedding, cfg: &DrawingConfig) -> Result<String, DrawError> {
    cfg.validate()?;
    if e.dimension != 2 {
        return Err(DrawError::UnsupportedDimension(e.dimension));
    }
    if e.vertex_count() != g.vertex_count() {
        return Err(DrawError::VertexCountMismatch {
            expected: g.vertex_count(),
            found: e.vertex_count(),
        });
    }
    let points = e
        .coords
        .iter()
        .map(|c| project_to_plane(c))
        .collect::<Result<Vec<_>, _>>()?;

    let (min_x, max_x, min_y, max_y) = points.iter().fold(
        (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY),
        |(a, b, c, d), p| (a.min(p.x), b.max(p.x), c.min(p.y), d.max(p.y)),
    );
    let (min_x, max_x, min_y, max_y) = if points.is_empty() {
        (0.0, 0.0, 0.0, 0.0)
    } else {
        (min_x, max_x, min_y, max_y)
    };
    // SVG y grows downward
    let screen: Vec<(f64, f64)> = points
        .iter()
        .map(|p| {
            (
                cfg.margin + (p.x - min_x) * cfg.scale,
                cfg.margin + (max_y - p.y) * cfg.scale,
            )
        })
        .collect();
    let width = 2.0 * cfg.margin + (max_x - min_x) * cfg.scale;
    let height = 2.0 * cfg.margin + (max_y - min_y) * cfg.scale;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<g stroke="black" stroke-width="2">"#);
    for &(u, v) in g.edges() {
        let (x1, y1) = screen[u];
        let (x2, y2) = screen[v];
        let _ = writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g fill="black">"#);
    for (v, &(cx, cy)) in screen.iter().enumerate() {
        let _ = writeln!(
            out,
            r#"<circle id="v{v}" cx="{cx}" cy="{cy}" r="{}"/>"#,
            cfg.vertex_radius
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    Ok(out)
}
