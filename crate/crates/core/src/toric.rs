//! Three-dimensional lattice polytopes: the simplex for `WP(1,1,4,6)`, its
//! polar dual, lattice points, edge singularities and facet genera.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::constants::Constants;
use crate::lattice::CurveGraph;
use crate::{Error, Result};

pub type Point = [i64; 3];

/// A supporting plane `normal · x ≤ offset` touching the polytope in a facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Point,
    pub offset: i64,
    /// Indices of the polytope vertices on the plane.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    vertices: Vec<Point>,
    facets: Vec<Facet>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Singularity {
    Smooth,
    /// `A_k`.
    A(u32),
}

impl fmt::Display for Singularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Singularity::Smooth => write!(f, "smooth"),
            Singularity::A(k) => write!(f, "A{k}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeReport {
    pub endpoints: (Point, Point),
    pub lattice_length: i64,
    pub singularity: Singularity,
}

fn sub(a: Point, b: Point) -> Point {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn add(a: Point, b: Point) -> Point {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn dot(a: Point, b: Point) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: Point, b: Point) -> Point {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn content(v: Point) -> i64 {
    v[0].gcd(&v[1]).gcd(&v[2])
}

/// All supporting planes through three affinely independent points.
fn compute_facets(points: &[Point]) -> Vec<Facet> {
    let n = points.len();
    let mut seen = BTreeSet::new();
    let mut facets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let normal = cross(sub(points[j], points[i]), sub(points[k], points[i]));
                let g = content(normal);
                if g == 0 {
                    continue;
                }
                let mut normal = normal.map(|x| x / g);
                let mut offset = dot(normal, points[i]);
                let vals: Vec<i64> = points.iter().map(|&p| dot(normal, p)).collect();
                if vals.iter().all(|&v| v >= offset) {
                    normal = normal.map(|x| -x);
                    offset = -offset;
                } else if !vals.iter().all(|&v| v <= offset) {
                    continue;
                }
                if !seen.insert((normal, offset)) {
                    continue;
                }
                let on: Vec<usize> = (0..n)
                    .filter(|&m| dot(normal, points[m]) == offset)
                    .collect();
                facets.push(Facet {
                    normal,
                    offset,
                    vertices: on,
                });
            }
        }
    }
    facets
}

fn rank(vectors: &[Point]) -> usize {
    if vectors.iter().all(|v| *v == [0, 0, 0]) {
        return 0;
    }
    for a in vectors {
        for b in vectors {
            if cross(*a, *b) != [0, 0, 0] {
                for c in vectors {
                    if dot(cross(*a, *b), *c) != 0 {
                        return 3;
                    }
                }
                return 2;
            }
        }
    }
    1
}

impl LatticePolytope {
    /// Builds the polytope from its vertex list. Rejects duplicate or
    /// non-extremal points and vertex sets that do not span three dimensions.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let uniq: BTreeSet<Point> = vertices.iter().copied().collect();
        if uniq.len() != vertices.len() {
            return Err(Error::DegeneratePolytope("repeated vertex".into()));
        }
        let facets = compute_facets(&vertices);
        if facets.is_empty() {
            return Err(Error::DegeneratePolytope("vertices are coplanar".into()));
        }
        for (i, v) in vertices.iter().enumerate() {
            let normals: Vec<Point> = facets
                .iter()
                .filter(|f| f.vertices.contains(&i))
                .map(|f| f.normal)
                .collect();
            if rank(&normals) < 3 {
                return Err(Error::DegeneratePolytope(format!("{v:?} is not a vertex")));
            }
        }
        Ok(LatticePolytope { vertices, facets })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn contains(&self, p: Point) -> bool {
        self.facets.iter().all(|f| dot(f.normal, p) <= f.offset)
    }

    pub fn is_interior(&self, p: Point) -> bool {
        self.facets.iter().all(|f| dot(f.normal, p) < f.offset)
    }

    fn bounding_box(&self) -> (Point, Point) {
        let mut lo = self.vertices[0];
        let mut hi = self.vertices[0];
        for v in &self.vertices {
            for c in 0..3 {
                lo[c] = lo[c].min(v[c]);
                hi[c] = hi[c].max(v[c]);
            }
        }
        (lo, hi)
    }

    /// Every integer point of the polytope, in lexicographic order.
    pub fn lattice_points(&self) -> Vec<Point> {
        let (lo, hi) = self.bounding_box();
        let mut out = Vec::new();
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                for z in lo[2]..=hi[2] {
                    if self.contains([x, y, z]) {
                        out.push([x, y, z]);
                    }
                }
            }
        }
        out
    }

    pub fn interior_points(&self) -> Vec<Point> {
        self.lattice_points()
            .into_iter()
            .filter(|&p| self.is_interior(p))
            .collect()
    }

    /// Vertex index pairs joined by an edge.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let shared = self
                    .facets
                    .iter()
                    .filter(|f| f.vertices.contains(&i) && f.vertices.contains(&j))
                    .count();
                if shared >= 2 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_reports(&self) -> Vec<EdgeReport> {
        self.edges()
            .into_iter()
            .map(|(i, j)| {
                let (a, b) = (self.vertices[i], self.vertices[j]);
                let len = content(sub(b, a));
                EdgeReport {
                    endpoints: (a, b),
                    lattice_length: len,
                    singularity: if len == 1 {
                        Singularity::Smooth
                    } else {
                        Singularity::A((len - 1) as u32)
                    },
                }
            })
            .collect()
    }

    /// The facet whose vertex set is exactly the given indices, if any.
    pub fn facet_through(&self, indices: &[usize]) -> Option<&Facet> {
        let want: BTreeSet<usize> = indices.iter().copied().collect();
        self.facets
            .iter()
            .find(|f| f.vertices.iter().copied().collect::<BTreeSet<_>>() == want)
    }

    /// Lattice points in the relative interior of the facet spanned by the
    /// given vertices.
    pub fn facet_genus(&self, facet: [usize; 3]) -> Result<u32> {
        if facet.iter().any(|&i| i >= self.vertices.len()) {
            return Err(Error::NotAFacet);
        }
        let f = self.facet_through(&facet).ok_or(Error::NotAFacet)?;
        let count = self
            .lattice_points()
            .into_iter()
            .filter(|&p| dot(f.normal, p) == f.offset)
            .filter(|&p| {
                self.facets
                    .iter()
                    .filter(|g| *g != f)
                    .all(|g| dot(g.normal, p) < g.offset)
            })
            .count();
        Ok(count as u32)
    }

    /// Polar dual `{y : ⟨y, x⟩ ≥ −1 for x in P}`.
    ///
    /// For a simplex the dual vertices are ordered by the opposite input vertex.
    pub fn dual(&self) -> Result<LatticePolytope> {
        if !self.is_interior([0, 0, 0]) {
            return Err(Error::OriginNotInterior);
        }
        let mut keyed: Vec<(usize, Point)> = Vec::new();
        for f in &self.facets {
            if f.normal.iter().any(|c| c % f.offset != 0) {
                return Err(Error::NotReflexive(format!(
                    "facet {:?}·x ≤ {} is not at height one",
                    f.normal, f.offset
                )));
            }
            let y = f.normal.map(|c| -c / f.offset);
            let key = (0..self.vertices.len())
                .find(|i| !f.vertices.contains(i))
                .unwrap_or(usize::MAX);
            keyed.push((key, y));
        }
        keyed.sort();
        LatticePolytope::new(keyed.into_iter().map(|(_, y)| y).collect())
    }

    /// Same vertex set, ignoring order.
    pub fn same_as(&self, other: &LatticePolytope) -> bool {
        let a: BTreeSet<Point> = self.vertices.iter().copied().collect();
        let b: BTreeSet<Point> = other.vertices.iter().copied().collect();
        a == b
    }
}

/// The simplex with vertices from the constants; the weighted vertex relation
/// must vanish.
pub fn delta(c: &Constants) -> Result<LatticePolytope> {
    let rel = vertex_relation(&c.delta_vertices, &c.delta_relation);
    if rel != [0, 0, 0] {
        return Err(Error::DegeneratePolytope(format!(
            "vertex relation gives {rel:?}"
        )));
    }
    LatticePolytope::new(c.delta_vertices.to_vec())
}

pub fn vertex_relation(vertices: &[Point; 4], weights: &[i64; 4]) -> Point {
    let mut acc = [0, 0, 0];
    for (v, w) in vertices.iter().zip(weights) {
        acc = add(acc, v.map(|x| x * w));
    }
    acc
}

/// Number of monomials of the given degree in a weighted polynomial ring.
pub fn weighted_monomial_count(weights: &[i64], degree: i64) -> u64 {
    match weights.split_first() {
        None => u64::from(degree == 0),
        Some((&w, rest)) => (0..=degree / w)
            .map(|k| weighted_monomial_count(rest, degree - k * w))
            .sum(),
    }
}

/// Exponent vectors of the nine monomials of the general member, in the order
/// `z, z⁻¹, 1, x, x², x³, y, y², xy`.
pub fn support_monomials(c: &Constants) -> [(&'static str, Point); 9] {
    let (x, y, z) = (c.monomial_x, c.monomial_y, c.monomial_z);
    [
        ("z", z),
        ("1/z", z.map(|v| -v)),
        ("1", [0, 0, 0]),
        ("x", x),
        ("x^2", x.map(|v| 2 * v)),
        ("x^3", x.map(|v| 3 * v)),
        ("y", y),
        ("y^2", y.map(|v| 2 * v)),
        ("xy", add(x, y)),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportShift {
    pub shift: Point,
    /// `(monomial, shifted exponent)`.
    pub shifted: Vec<(&'static str, Point)>,
}

impl SupportShift {
    pub fn shifted(&self, name: &str) -> Option<Point> {
        self.shifted
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, p)| *p)
    }
}

/// The unique translation placing all nine support points in `Δ` with
/// `z, z⁻¹, x³, y²` on the vertices of `Δ` in order.
pub fn support_shift(c: &Constants) -> Result<SupportShift> {
    let d = delta(c)?;
    let support = support_monomials(c);
    let (lo, hi) = d.bounding_box();
    let z = support[0].1;
    let mut feasible = Vec::new();
    for a in lo[0] - z[0]..=hi[0] - z[0] {
        for b in lo[1] - z[1]..=hi[1] - z[1] {
            for e in lo[2] - z[2]..=hi[2] - z[2] {
                let s = [a, b, e];
                if support.iter().all(|(_, p)| d.contains(add(*p, s))) {
                    feasible.push(s);
                }
            }
        }
    }
    let vertex_terms = ["z", "1/z", "x^3", "y^2"];
    let matching: Vec<Point> = feasible
        .into_iter()
        .filter(|&s| {
            vertex_terms
                .iter()
                .zip(d.vertices())
                .all(|(name, v)| support.iter().any(|(n, p)| n == name && add(*p, s) == *v))
        })
        .collect();
    match matching.as_slice() {
        [s] => Ok(SupportShift {
            shift: *s,
            shifted: support.iter().map(|(n, p)| (*n, add(*p, *s))).collect(),
        }),
        _ => Err(Error::InfeasibleShift),
    }
}

/// The 19 curves of the resolved compactification, as a graph.
pub fn mirror_curve_graph(c: &Constants) -> Result<CurveGraph> {
    CurveGraph::new(&c.mirror_nodes, &c.mirror_edges)
}

/// Rational curves contributed by the edge singularities, `Σ (length − 1)`.
pub fn exceptional_curve_count(reports: &[EdgeReport]) -> i64 {
    reports.iter().map(|r| r.lattice_length - 1).sum()
}
