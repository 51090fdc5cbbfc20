//! Closed oriented combinatorial surfaces as gluings of triangles.
//!
//! `N` triangles (N even) carry `3N` directed sides. Side `i` of triangle
//! `t` is the directed boundary segment from corner `i` to corner
//! `(i + 1) % 3` in the triangle's positive orientation, encoded as the
//! integer `3t + i`. A gluing is a fixed-point-free involution on sides;
//! paired sides are always traversed in opposite directions, so every
//! gluing yields an oriented surface (possibly disconnected, possibly
//! with edges of one triangle glued to each other).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Index of a directed triangle side: `3 * triangle + corner`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SideId(pub usize);

impl SideId {
    pub fn triangle(self) -> usize {
        self.0 / 3
    }

    pub fn corner(self) -> usize {
        self.0 % 3
    }

    pub fn of(triangle: usize, corner: usize) -> SideId {
        debug_assert!(corner < 3);
        SideId(3 * triangle + corner)
    }
}

impl fmt::Display for SideId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}t{}c{}", self.0, self.triangle(), self.corner())
    }
}

/// Next side counterclockwise within the same triangle.
#[inline]
pub fn rot(side: usize) -> usize {
    side - side % 3 + (side % 3 + 1) % 3
}

/// Previous side within the same triangle.
#[inline]
pub fn rot_inv(side: usize) -> usize {
    side - side % 3 + (side % 3 + 2) % 3
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceError {
    OddTriangleCount { n: usize },
    SideOutOfRange { side: usize, limit: usize },
    NotInvolution { side: usize },
    FixedPoint { side: usize },
    Uncovered { side: usize },
}

impl fmt::Display for SurfaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceError::OddTriangleCount { n } => {
                write!(f, "triangle count {n} must be even and positive")
            }
            SurfaceError::SideOutOfRange { side, limit } => {
                write!(f, "side {side} out of range 0..{limit}")
            }
            SurfaceError::NotInvolution { side } => {
                write!(f, "pairing is not an involution at side {side}")
            }
            SurfaceError::FixedPoint { side } => {
                write!(f, "pairing fixes side {side}")
            }
            SurfaceError::Uncovered { side } => {
                write!(f, "side {side} is not covered by the pairing")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SurfaceError {}

/// A fixed-point-free involution pairing the `3N` sides.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gluing {
    n_triangles: usize,
    pairing: Vec<usize>,
}

impl Gluing {
    /// Builds a gluing from the full involution table.
    pub fn from_involution(n_triangles: usize, pairing: Vec<usize>) -> Result<Gluing, SurfaceError> {
        if n_triangles == 0 || n_triangles % 2 != 0 {
            return Err(SurfaceError::OddTriangleCount { n: n_triangles });
        }
        let m = 3 * n_triangles;
        if pairing.len() != m {
            return Err(SurfaceError::Uncovered {
                side: pairing.len().min(m),
            });
        }
        for (s, &t) in pairing.iter().enumerate() {
            if t >= m {
                return Err(SurfaceError::SideOutOfRange { side: t, limit: m });
            }
            if t == s {
                return Err(SurfaceError::FixedPoint { side: s });
            }
            if pairing[t] != s {
                return Err(SurfaceError::NotInvolution { side: s });
            }
        }
        Ok(Gluing {
            n_triangles,
            pairing,
        })
    }

    /// Builds a gluing from a list of side pairs covering all `3N` sides.
    pub fn from_pairs(n_triangles: usize, pairs: &[(usize, usize)]) -> Result<Gluing, SurfaceError> {
        if n_triangles == 0 || n_triangles % 2 != 0 {
            return Err(SurfaceError::OddTriangleCount { n: n_triangles });
        }
        let m = 3 * n_triangles;
        let mut pairing = vec![usize::MAX; m];
        for &(a, b) in pairs {
            if a >= m {
                return Err(SurfaceError::SideOutOfRange { side: a, limit: m });
            }
            if b >= m {
                return Err(SurfaceError::SideOutOfRange { side: b, limit: m });
            }
            if a == b {
                return Err(SurfaceError::FixedPoint { side: a });
            }
            if pairing[a] != usize::MAX {
                return Err(SurfaceError::NotInvolution { side: a });
            }
            if pairing[b] != usize::MAX {
                return Err(SurfaceError::NotInvolution { side: b });
            }
            pairing[a] = b;
            pairing[b] = a;
        }
        if let Some(s) = pairing.iter().position(|&t| t == usize::MAX) {
            return Err(SurfaceError::Uncovered { side: s });
        }
        Ok(Gluing {
            n_triangles,
            pairing,
        })
    }

    pub fn n_triangles(&self) -> usize {
        self.n_triangles
    }

    pub fn n_sides(&self) -> usize {
        3 * self.n_triangles
    }

    /// The side glued to `side`.
    #[inline]
    pub fn partner(&self, side: usize) -> usize {
        self.pairing[side]
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    /// Side pairs `(a, b)` with `a < b`, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n_sides() / 2);
        for s in 0..self.n_sides() {
            let t = self.pairing[s];
            if s < t {
                out.push((s, t));
            }
        }
        out
    }
}

/// Per-component topology of a built surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentTopology {
    pub triangles: usize,
    pub vertices: usize,
    pub edges: usize,
    pub euler_characteristic: i64,
    pub genus: usize,
}

/// A combinatorial surface: a gluing plus its derived cell structure.
#[derive(Clone, Debug)]
pub struct CombSurface {
    gluing: Gluing,
    /// Vertex orbit id of the corner at the start of each side.
    vertex_of_corner: Vec<usize>,
    vertex_count: usize,
    component_of_triangle: Vec<usize>,
    components: Vec<ComponentTopology>,
}

/// Builds a surface from a side pairing, tracing vertex orbits and
/// computing per-component Euler characteristic and genus.
pub fn build_surface(
    n_triangles: usize,
    pairs: &[(usize, usize)],
) -> Result<CombSurface, SurfaceError> {
    let gluing = Gluing::from_pairs(n_triangles, pairs)?;
    Ok(CombSurface::from_gluing(gluing))
}

impl CombSurface {
    /// Derives the full cell structure of a valid gluing.
    ///
    /// Vertices are the orbits of `s -> rot(partner(s))`: starting from
    /// the corner at the base of side `s`, the gluing carries it to the
    /// end of `partner(s)`, which is the base corner of the next side
    /// counterclockwise around the same vertex.
    pub fn from_gluing(gluing: Gluing) -> CombSurface {
        let m = gluing.n_sides();
        // Vertex orbits, labeled in order of their minimal side.
        let mut vertex_of_corner = vec![usize::MAX; m];
        let mut vertex_count = 0;
        for start in 0..m {
            if vertex_of_corner[start] != usize::MAX {
                continue;
            }
            let mut s = start;
            loop {
                vertex_of_corner[s] = vertex_count;
                s = rot(gluing.partner(s));
                if s == start {
                    break;
                }
            }
            vertex_count += 1;
        }

        // Components of the triangle adjacency graph.
        let n = gluing.n_triangles();
        let mut component_of_triangle = vec![usize::MAX; n];
        let mut component_count = 0;
        for start in 0..n {
            if component_of_triangle[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            component_of_triangle[start] = component_count;
            while let Some(t) = stack.pop() {
                for i in 0..3 {
                    let u = gluing.partner(3 * t + i) / 3;
                    if component_of_triangle[u] == usize::MAX {
                        component_of_triangle[u] = component_count;
                        stack.push(u);
                    }
                }
            }
            component_count += 1;
        }

        // Per-component cell counts. A vertex belongs to the component of
        // any of its corners; edges are halved side counts.
        let mut faces = vec![0usize; component_count];
        let mut sides = vec![0usize; component_count];
        for t in 0..n {
            faces[component_of_triangle[t]] += 1;
            sides[component_of_triangle[t]] += 3;
        }
        let mut vertex_component = vec![usize::MAX; vertex_count];
        for s in 0..m {
            vertex_component[vertex_of_corner[s]] = component_of_triangle[s / 3];
        }
        let mut verts = vec![0usize; component_count];
        for &c in &vertex_component {
            verts[c] += 1;
        }

        let components = (0..component_count)
            .map(|c| {
                let v = verts[c] as i64;
                let e = (sides[c] / 2) as i64;
                let f = faces[c] as i64;
                let chi = v - e + f;
                debug_assert!(chi <= 2 && chi % 2 == 0, "chi={chi}");
                ComponentTopology {
                    triangles: faces[c],
                    vertices: verts[c],
                    edges: sides[c] / 2,
                    euler_characteristic: chi,
                    genus: ((2 - chi) / 2) as usize,
                }
            })
            .collect();

        CombSurface {
            gluing,
            vertex_of_corner,
            vertex_count,
            component_of_triangle,
            components,
        }
    }

    pub fn gluing(&self) -> &Gluing {
        &self.gluing
    }

    pub fn n_triangles(&self) -> usize {
        self.gluing.n_triangles()
    }

    pub fn n_sides(&self) -> usize {
        self.gluing.n_sides()
    }

    #[inline]
    pub fn partner(&self, side: usize) -> usize {
        self.gluing.partner(side)
    }

    /// Vertex orbit id of the corner at the start of `side`.
    #[inline]
    pub fn vertex_at_side_start(&self, side: usize) -> usize {
        self.vertex_of_corner[side]
    }

    /// Vertex orbit id at the end of `side` (= start of the next side).
    #[inline]
    pub fn vertex_at_side_end(&self, side: usize) -> usize {
        self.vertex_of_corner[rot(side)]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.n_sides() / 2
    }

    /// Edge ids: each glued pair of sides is one edge, identified by its
    /// smaller side. Returns the edge id for a side.
    pub fn edge_of_side(&self, side: usize) -> usize {
        side.min(self.gluing.partner(side))
    }

    /// The canonical (smaller) side of each edge, sorted ascending.
    pub fn edge_reps(&self) -> Vec<usize> {
        (0..self.n_sides())
            .filter(|&s| s < self.gluing.partner(s))
            .collect()
    }

    pub fn component_of_triangle(&self, t: usize) -> usize {
        self.component_of_triangle[t]
    }

    pub fn components(&self) -> &[ComponentTopology] {
        &self.components
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    /// Genus of the largest component (by triangle count, ties toward the
    /// higher genus). Equals the genus for connected surfaces.
    pub fn largest_component_genus(&self) -> usize {
        self.components
            .iter()
            .map(|c| (c.triangles, c.genus))
            .max()
            .map(|(_, g)| g)
            .unwrap_or(0)
    }
}

/// Summary returned by [`surface_topology`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopologySummary {
    pub euler_characteristics: Vec<i64>,
    pub genera: Vec<usize>,
    pub component_count: usize,
}

/// Per-component Euler characteristic and genus.
pub fn surface_topology(s: &CombSurface) -> TopologySummary {
    TopologySummary {
        euler_characteristics: s.components.iter().map(|c| c.euler_characteristic).collect(),
        genera: s.components.iter().map(|c| c.genus).collect(),
        component_count: s.components.len(),
    }
}

/// A graph in which every vertex has degree three (loops count twice).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivalentGraph {
    pub vertex_count: usize,
    /// Unordered edges `(a, b)` with `a <= b`, sorted; loops allowed.
    pub edges: Vec<(usize, usize)>,
}

impl TrivalentGraph {
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.vertex_count];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }
}

/// Dual graph of a surface: one vertex per triangle, one edge per glued
/// side pair.
pub fn dual_graph(s: &CombSurface) -> TrivalentGraph {
    let mut edges: Vec<(usize, usize)> = s
        .edge_reps()
        .iter()
        .map(|&a| {
            let t = a / 3;
            let u = s.partner(a) / 3;
            (t.min(u), t.max(u))
        })
        .collect();
    edges.sort_unstable();
    TrivalentGraph {
        vertex_count: s.n_triangles(),
        edges,
    }
}

/// The two-triangle sphere: each side of triangle 0 glued mirror-wise to
/// the matching side of triangle 1.
pub fn pillow_pairs() -> Vec<(usize, usize)> {
    vec![(0, 3), (1, 5), (2, 4)]
}

/// The two-triangle torus: a square with a diagonal, opposite sides
/// identified.
pub fn torus_pairs() -> Vec<(usize, usize)> {
    vec![(0, 4), (1, 5), (2, 3)]
}
