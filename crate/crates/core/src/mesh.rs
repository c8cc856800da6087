//! Structured triangulations of the unit disc and of rectangles, and their
//! images under a map family.

use std::collections::HashMap;
use std::f64::consts::TAU;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::maps::{evaluate_map, ComplexPoint, MapFamily};

/// Image triangles with signed area at or below this are rejected.
pub const MIN_TRIANGLE_AREA: f64 = 1e-16;

#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    pub vertices: Vec<[f64; 2]>,
    /// Counterclockwise vertex triples.
    pub triangles: Vec<[usize; 3]>,
    pub boundary: Vec<bool>,
}

pub fn signed_area(p: [f64; 2], q: [f64; 2], r: [f64; 2]) -> f64 {
    0.5 * ((q[0] - p[0]) * (r[1] - p[1]) - (r[0] - p[0]) * (q[1] - p[1]))
}

impl Mesh {
    pub fn triangle_area(&self, t: usize) -> f64 {
        let [i, j, k] = self.triangles[t];
        signed_area(self.vertices[i], self.vertices[j], self.vertices[k])
    }

    pub fn area(&self) -> f64 {
        (0..self.triangles.len())
            .map(|t| self.triangle_area(t))
            .sum()
    }

    pub fn boundary_count(&self) -> usize {
        self.boundary.iter().filter(|&&b| b).count()
    }

    pub fn interior_count(&self) -> usize {
        self.boundary.len() - self.boundary_count()
    }

    /// Number of triangles sharing each undirected edge.
    pub fn edge_valence(&self) -> HashMap<(usize, usize), usize> {
        let mut edges = HashMap::new();
        for t in &self.triangles {
            for e in 0..3 {
                let (a, b) = (t[e], t[(e + 1) % 3]);
                *edges.entry((a.min(b), a.max(b))).or_insert(0) += 1;
            }
        }
        edges
    }

    /// Checks orientation and the edge-manifold property, and that the
    /// boundary flags coincide with the vertices of boundary edges.
    pub fn validate(&self) -> Result<()> {
        if self.boundary.len() != self.vertices.len() {
            return Err(Error::MeshFormat(
                "boundary flags do not match vertex count".into(),
            ));
        }
        for (t, tri) in self.triangles.iter().enumerate() {
            if tri.iter().any(|&v| v >= self.vertices.len()) {
                return Err(Error::MeshFormat(format!(
                    "triangle {t} has an out-of-range vertex"
                )));
            }
            let area = self.triangle_area(t);
            if area <= MIN_TRIANGLE_AREA {
                return Err(Error::DegenerateTriangle { index: t, area });
            }
        }
        let mut on_boundary_edge = vec![false; self.vertices.len()];
        for (&(a, b), &count) in &self.edge_valence() {
            match count {
                1 => {
                    on_boundary_edge[a] = true;
                    on_boundary_edge[b] = true;
                }
                2 => {}
                _ => {
                    return Err(Error::MeshFormat(format!(
                        "edge ({a}, {b}) is shared by {count} triangles"
                    )))
                }
            }
        }
        if on_boundary_edge != self.boundary {
            return Err(Error::MeshFormat(
                "boundary flags disagree with the boundary edges".into(),
            ));
        }
        Ok(())
    }

    /// Plain-text export: `V T`, then `x y flag` per vertex, then `i j k` per
    /// triangle (0-based).
    pub fn write_text<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "{} {}", self.vertices.len(), self.triangles.len())?;
        for (v, b) in self.vertices.iter().zip(&self.boundary) {
            writeln!(out, "{:e} {:e} {}", v[0], v[1], u8::from(*b))?;
        }
        for t in &self.triangles {
            writeln!(out, "{} {} {}", t[0], t[1], t[2])?;
        }
        Ok(())
    }

    pub fn read_text<R: BufRead>(input: R) -> Result<Self> {
        let mut lines = input.lines();
        let mut next = |what: &str| -> Result<String> {
            lines
                .next()
                .ok_or_else(|| {
                    Error::MeshFormat(format!("unexpected end of input reading {what}"))
                })?
                .map_err(Error::from)
        };
        let header = next("header")?;
        let counts = parse_fields::<usize>(&header, 2)?;
        let (nv, nt) = (counts[0], counts[1]);
        let mut vertices = Vec::with_capacity(nv);
        let mut boundary = Vec::with_capacity(nv);
        for _ in 0..nv {
            let line = next("vertex")?;
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 3 {
                return Err(Error::MeshFormat(format!("bad vertex line `{line}`")));
            }
            let x = parse_one::<f64>(f[0])?;
            let y = parse_one::<f64>(f[1])?;
            let flag = match f[2] {
                "0" => false,
                "1" => true,
                other => return Err(Error::MeshFormat(format!("bad boundary flag `{other}`"))),
            };
            vertices.push([x, y]);
            boundary.push(flag);
        }
        let mut triangles = Vec::with_capacity(nt);
        for _ in 0..nt {
            let line = next("triangle")?;
            let f = parse_fields::<usize>(&line, 3)?;
            triangles.push([f[0], f[1], f[2]]);
        }
        Ok(Mesh {
            vertices,
            triangles,
            boundary,
        })
    }
}

fn parse_one<T: std::str::FromStr>(s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::MeshFormat(format!("cannot parse `{s}`")))
}

fn parse_fields<T: std::str::FromStr>(line: &str, n: usize) -> Result<Vec<T>> {
    let f: Vec<T> = line
        .split_whitespace()
        .map(parse_one)
        .collect::<Result<_>>()?;
    if f.len() != n {
        return Err(Error::MeshFormat(format!(
            "expected {n} fields in `{line}`"
        )));
    }
    Ok(f)
}

fn ring_start(k: usize) -> usize {
    if k == 0 {
        0
    } else {
        1 + 3 * k * (k - 1)
    }
}

/// Concentric-ring triangulation of the unit disc: ring `k` at radius
/// `k / rings` carries `6k` vertices, giving `6 rings^2` triangles.
pub fn unit_disc_mesh(rings: usize) -> Result<Mesh> {
    if rings < 2 {
        return Err(Error::InvalidRings(rings));
    }
    let nv = ring_start(rings + 1);
    let mut vertices = Vec::with_capacity(nv);
    let mut boundary = Vec::with_capacity(nv);
    vertices.push([0.0, 0.0]);
    boundary.push(false);
    for k in 1..=rings {
        let r = k as f64 / rings as f64;
        let n = 6 * k;
        for j in 0..n {
            let t = TAU * j as f64 / n as f64;
            vertices.push([r * t.cos(), r * t.sin()]);
            boundary.push(k == rings);
        }
    }

    let mut triangles = Vec::with_capacity(6 * rings * rings);
    for j in 0..6 {
        triangles.push([0, 1 + j, 1 + (j + 1) % 6]);
    }
    for k in 2..=rings {
        let (inner, outer) = (ring_start(k - 1), ring_start(k));
        let (ni, no) = (6 * (k - 1), 6 * k);
        let (mut i, mut o) = (0, 0);
        // advance along whichever ring has the next vertex at the smaller angle
        while i < ni || o < no {
            let take_outer = i == ni || (o < no && (o + 1) * ni <= (i + 1) * no);
            if take_outer {
                triangles.push([inner + i % ni, outer + o, outer + (o + 1) % no]);
                o += 1;
            } else {
                triangles.push([inner + i, outer + o % no, inner + (i + 1) % ni]);
                i += 1;
            }
        }
    }
    Ok(Mesh {
        vertices,
        triangles,
        boundary,
    })
}

/// Uniform `nx x ny` grid on `[0, a] x [0, b]`, each cell split along its
/// rising diagonal.
pub fn rectangle_mesh(a: f64, b: f64, nx: usize, ny: usize) -> Result<Mesh> {
    if !(a.is_finite() && b.is_finite() && a > 0.0 && b > 0.0) {
        return Err(Error::InvalidDimensions(format!(
            "sides must be positive, got {a} x {b}"
        )));
    }
    if nx < 2 || ny < 2 {
        return Err(Error::InvalidDimensions(format!(
            "need at least 2 cells per side, got {nx} x {ny}"
        )));
    }
    let id = |i: usize, j: usize| j * (nx + 1) + i;
    let mut vertices = Vec::with_capacity((nx + 1) * (ny + 1));
    let mut boundary = Vec::with_capacity((nx + 1) * (ny + 1));
    for j in 0..=ny {
        for i in 0..=nx {
            vertices.push([a * i as f64 / nx as f64, b * j as f64 / ny as f64]);
            boundary.push(i == 0 || j == 0 || i == nx || j == ny);
        }
    }
    let mut triangles = Vec::with_capacity(2 * nx * ny);
    for j in 0..ny {
        for i in 0..nx {
            triangles.push([id(i, j), id(i + 1, j), id(i + 1, j + 1)]);
            triangles.push([id(i, j), id(i + 1, j + 1), id(i, j + 1)]);
        }
    }
    Ok(Mesh {
        vertices,
        triangles,
        boundary,
    })
}

/// Maps every vertex of a disc mesh through `family`, keeping connectivity.
pub fn pushforward_mesh(mesh: &Mesh, family: &MapFamily) -> Result<Mesh> {
    family.validate()?;
    let vertices = mesh
        .vertices
        .iter()
        .map(|v| {
            let z = ComplexPoint::new(v[0], v[1]);
            if z.norm() > 1.0 + 1e-12 {
                return Err(Error::InvalidInput(format!(
                    "vertex ({}, {}) lies outside the closed unit disc",
                    v[0], v[1]
                )));
            }
            let w = evaluate_map(family, z)?;
            Ok([w.re, w.im])
        })
        .collect::<Result<Vec<_>>>()?;
    let image = Mesh {
        vertices,
        triangles: mesh.triangles.clone(),
        boundary: mesh.boundary.clone(),
    };
    for t in 0..image.triangles.len() {
        let area = image.triangle_area(t);
        if area <= MIN_TRIANGLE_AREA {
            return Err(Error::DegenerateTriangle { index: t, area });
        }
    }
    Ok(image)
}
