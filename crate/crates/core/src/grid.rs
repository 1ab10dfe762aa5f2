//! Geometry of the triangular grid `Δ_n` and the square grid `□_n`.
//!
//! `Δ_n` is the triangular region of side `n`, drawn with a horizontal base.
//! Vertices are addressed as `(r, p)` with `r + p <= n`, where `r` counts rows
//! from the base and `p` counts positions from the left edge; the basepoint is
//! the lower-left corner `(0, 0)`.  Each edge points in one of three
//! directions: `NW` (up-left, from `(r,p)` to `(r+1,p)`), `NE` (down-right,
//! from `(r,p)` to `(r+1,p-1)` seen from below), and `S` (horizontal, from
//! `(r,p)` to `(r,p+1)`).
//!
//! For `k <= n` the sub-triangle `Δ_k` shares the basepoint, the lower part of
//! the NW side and the left part of the base.  Its clockwise boundary, starting
//! at the basepoint, goes up the NW side, down the NE side, and right-to-left
//! along the base; this reading order is what ties grid geometry to array
//! rows.
//!
//! `□_n` is the square grid with `(n+1)^2` vertices `(x, y)`.  Sub-squares
//! `□_k` are southwest-justified with basepoint `(0, 0)`, and their clockwise
//! boundary reading starts up the west side.

/// Direction of a triangular-grid edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TriDir {
    NW,
    S,
    NE,
}

impl TriDir {
    pub fn as_str(self) -> &'static str {
        match self {
            TriDir::NW => "NW",
            TriDir::S => "S",
            TriDir::NE => "NE",
        }
    }

    pub fn from_str(s: &str) -> Option<Self> {
        match s {
            "NW" => Some(TriDir::NW),
            "S" => Some(TriDir::S),
            "NE" => Some(TriDir::NE),
            _ => None,
        }
    }
}

/// An edge of `Δ_n`, identified by its lower endpoint and direction:
/// `NW (r,p)-(r+1,p)`, `NE (r,p)-(r+1,p-1)`, `S (r,p)-(r,p+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriEdge {
    pub r: usize,
    pub p: usize,
    pub dir: TriDir,
}

impl TriEdge {
    pub fn new(r: usize, p: usize, dir: TriDir) -> Self {
        TriEdge { r, p, dir }
    }

    /// The two endpoints of the edge as `(r, p)` vertices.
    pub fn endpoints(self) -> ((usize, usize), (usize, usize)) {
        match self.dir {
            TriDir::S => ((self.r, self.p), (self.r, self.p + 1)),
            TriDir::NW => ((self.r, self.p), (self.r + 1, self.p)),
            TriDir::NE => ((self.r, self.p), (self.r + 1, self.p - 1)),
        }
    }

    /// Serialization key, e.g. `"2,0,NW"`.
    pub fn key(self) -> String {
        format!("{},{},{}", self.r, self.p, self.dir.as_str())
    }

    pub fn parse_key(key: &str) -> Option<Self> {
        let mut it = key.split(',');
        let r = it.next()?.parse().ok()?;
        let p = it.next()?.parse().ok()?;
        let dir = TriDir::from_str(it.next()?)?;
        if it.next().is_some() {
            return None;
        }
        Some(TriEdge { r, p, dir })
    }
}

/// A face of `Δ_n`.  `Up` faces point like `Δ`, `Down` faces like `∇`; both
/// are addressed by `(r, c)` where `r` is the row of the lower edge span and
/// `c` counts faces of that orientation from the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriFace {
    Up { r: usize, c: usize },
    Down { r: usize, c: usize },
}

impl TriFace {
    /// Edges of the face in `(NW, S, NE)` direction order.
    pub fn edges(self) -> [TriEdge; 3] {
        match self {
            TriFace::Up { r, c } => [
                TriEdge::new(r, c, TriDir::NW),
                TriEdge::new(r, c, TriDir::S),
                TriEdge::new(r, c + 1, TriDir::NE),
            ],
            TriFace::Down { r, c } => [
                TriEdge::new(r, c + 1, TriDir::NW),
                TriEdge::new(r + 1, c, TriDir::S),
                TriEdge::new(r, c + 1, TriDir::NE),
            ],
        }
    }

    pub fn is_up(self) -> bool {
        matches!(self, TriFace::Up { .. })
    }

    /// Smallest `k` such that the face lies inside `Δ_k`.
    pub fn shell(self) -> usize {
        match self {
            TriFace::Up { r, c } => r + c + 1,
            TriFace::Down { r, c } => r + c + 2,
        }
    }
}

/// Edge index of `Δ_n` in a fixed order: all `S` edges row by row, then, row
/// by row, the `NW` and `NE` edges of each row block.
pub fn tri_edge_index(n: usize, e: TriEdge) -> Option<usize> {
    let span = |r: usize| r * n - r * r.saturating_sub(1) / 2; // Σ_{r'<r} (n - r')
    let total_s = n * (n + 1) / 2;
    match e.dir {
        TriDir::S => (e.r <= n && e.p < n - e.r).then(|| span(e.r) + e.p),
        TriDir::NW => (e.r < n && e.p < n - e.r).then(|| total_s + 2 * span(e.r) + e.p),
        TriDir::NE => (e.r < n && e.p >= 1 && e.p <= n - e.r)
            .then(|| total_s + 2 * span(e.r) + (n - e.r) + (e.p - 1)),
    }
}

/// Precomputed edge and face tables for `Δ_n`.
#[derive(Clone, Debug)]
pub struct TriGrid {
    n: usize,
    edges: Vec<TriEdge>,
    faces: Vec<TriFace>,
}

impl TriGrid {
    pub fn new(n: usize) -> Self {
        let mut edges = Vec::new();
        for r in 0..=n {
            for p in 0..n - r {
                edges.push(TriEdge::new(r, p, TriDir::S));
            }
        }
        for r in 0..n {
            for p in 0..n - r {
                edges.push(TriEdge::new(r, p, TriDir::NW));
            }
            for p in 1..=n - r {
                edges.push(TriEdge::new(r, p, TriDir::NE));
            }
        }
        debug_assert!(edges
            .iter()
            .enumerate()
            .all(|(i, &e)| tri_edge_index(n, e) == Some(i)));
        let mut faces = Vec::new();
        for r in 0..n {
            for c in 0..n - r {
                faces.push(TriFace::Up { r, c });
            }
            for c in 0..n.saturating_sub(r + 1) {
                faces.push(TriFace::Down { r, c });
            }
        }
        TriGrid { n, edges, faces }
    }

    pub fn side(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[TriEdge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn faces(&self) -> &[TriFace] {
        &self.faces
    }

    pub fn edge_index(&self, e: TriEdge) -> Option<usize> {
        tri_edge_index(self.n, e)
    }

    /// The clockwise boundary of `Δ_k` starting at the basepoint: up the NW
    /// side, down the NE side, then right-to-left along the base.  `3k` edges.
    pub fn boundary(&self, k: usize) -> Vec<TriEdge> {
        assert!(k <= self.n);
        let mut out = Vec::with_capacity(3 * k);
        for r in 0..k {
            out.push(TriEdge::new(r, 0, TriDir::NW));
        }
        for t in 0..k {
            out.push(TriEdge::new(k - 1 - t, 1 + t, TriDir::NE));
        }
        for p in (0..k).rev() {
            out.push(TriEdge::new(0, p, TriDir::S));
        }
        out
    }

    /// Image of an edge under the 120° rotation that cycles the corners
    /// `(0,0) -> (0,n) -> (n,0) -> (0,0)`.  Edge directions cycle
    /// `NW -> S -> NE -> NW`.
    pub fn rotate_edge(&self, e: TriEdge) -> TriEdge {
        let n = self.n;
        let (r, p) = (e.r, e.p);
        match e.dir {
            TriDir::S => TriEdge::new(p, n - r - p, TriDir::NE),
            TriDir::NW => TriEdge::new(p, n - r - p - 1, TriDir::S),
            TriDir::NE => TriEdge::new(p - 1, n - r - p, TriDir::NW),
        }
    }
}

/// An edge of `□_n`: `H (x,y)-(x+1,y)` horizontal, `V (x,y)-(x,y+1)` vertical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SqDir {
    H,
    V,
}

impl SqDir {
    pub fn as_str(self) -> &'static str {
        match self {
            SqDir::H => "H",
            SqDir::V => "V",
        }
    }

    pub fn from_str(s: &str) -> Option<Self> {
        match s {
            "H" => Some(SqDir::H),
            "V" => Some(SqDir::V),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SqEdge {
    pub x: usize,
    pub y: usize,
    pub dir: SqDir,
}

impl SqEdge {
    pub fn new(x: usize, y: usize, dir: SqDir) -> Self {
        SqEdge { x, y, dir }
    }

    pub fn key(self) -> String {
        format!("{},{},{}", self.x, self.y, self.dir.as_str())
    }

    pub fn parse_key(key: &str) -> Option<Self> {
        let mut it = key.split(',');
        let x = it.next()?.parse().ok()?;
        let y = it.next()?.parse().ok()?;
        let dir = SqDir::from_str(it.next()?)?;
        if it.next().is_some() {
            return None;
        }
        Some(SqEdge { x, y, dir })
    }
}

/// Edge index of `□_n`: all `H` edges column by column, then all `V` edges.
pub fn sq_edge_index(n: usize, e: SqEdge) -> Option<usize> {
    match e.dir {
        SqDir::H => (e.x < n && e.y <= n).then(|| e.x * (n + 1) + e.y),
        SqDir::V => (e.x <= n && e.y < n).then(|| n * (n + 1) + e.x * n + e.y),
    }
}

/// Precomputed edge tables for `□_n`.
#[derive(Clone, Debug)]
pub struct SquareGrid {
    n: usize,
    edges: Vec<SqEdge>,
}

impl SquareGrid {
    pub fn new(n: usize) -> Self {
        let mut edges = Vec::new();
        for x in 0..n {
            for y in 0..=n {
                edges.push(SqEdge::new(x, y, SqDir::H));
            }
        }
        for x in 0..=n {
            for y in 0..n {
                edges.push(SqEdge::new(x, y, SqDir::V));
            }
        }
        debug_assert!(edges
            .iter()
            .enumerate()
            .all(|(i, &e)| sq_edge_index(n, e) == Some(i)));
        SquareGrid { n, edges }
    }

    pub fn side(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[SqEdge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_index(&self, e: SqEdge) -> Option<usize> {
        sq_edge_index(self.n, e)
    }

    /// Edges of the face with southwest corner `(x, y)`, in `(W, N, E, S)`
    /// order.
    pub fn face_edges(x: usize, y: usize) -> [SqEdge; 4] {
        [
            SqEdge::new(x, y, SqDir::V),
            SqEdge::new(x, y + 1, SqDir::H),
            SqEdge::new(x + 1, y, SqDir::V),
            SqEdge::new(x, y, SqDir::H),
        ]
    }

    /// Faces in hook order: for growing `k`, the faces with
    /// `max(x, y) = k - 1` (top leg left-to-right, then right leg
    /// bottom-to-top, then the diagonal corner).  Filling in this order means
    /// every face completes `□_k` for some `k`.
    pub fn faces_hook_order(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n * self.n);
        for k in 0..self.n {
            for x in 0..k {
                out.push((x, k));
            }
            for y in 0..k {
                out.push((k, y));
            }
            out.push((k, k));
        }
        out
    }

    /// The clockwise boundary of `□_k` starting at the basepoint: up the west
    /// side, left-to-right along the north side, down the east side,
    /// right-to-left along the south side.  `4k` edges.
    pub fn boundary(&self, k: usize) -> Vec<SqEdge> {
        assert!(k <= self.n);
        let mut out = Vec::with_capacity(4 * k);
        for y in 0..k {
            out.push(SqEdge::new(0, y, SqDir::V));
        }
        for x in 0..k {
            out.push(SqEdge::new(x, k, SqDir::H));
        }
        for y in (0..k).rev() {
            out.push(SqEdge::new(k, y, SqDir::V));
        }
        for x in (0..k).rev() {
            out.push(SqEdge::new(x, 0, SqDir::H));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tri_edge_and_face_counts() {
        for n in 0..6 {
            let g = TriGrid::new(n);
            assert_eq!(g.edge_count(), 3 * n * (n + 1) / 2);
            assert_eq!(g.faces().len(), n * n);
            let ups = g.faces().iter().filter(|f| f.is_up()).count();
            assert_eq!(ups, n * (n + 1) / 2);
        }
    }

    #[test]
    fn tri_boundary_lengths_and_membership() {
        let g = TriGrid::new(4);
        for k in 0..=4 {
            let b = g.boundary(k);
            assert_eq!(b.len(), 3 * k);
            for e in b {
                assert!(g.edge_index(e).is_some(), "boundary edge {e:?} not in grid");
            }
        }
    }

    #[test]
    fn rotation_is_an_edge_bijection_of_order_three() {
        for n in 1..5 {
            let g = TriGrid::new(n);
            let mut seen = std::collections::HashSet::new();
            for &e in g.edges() {
                let r1 = g.rotate_edge(e);
                assert!(g.edge_index(r1).is_some(), "{e:?} -> {r1:?} left the grid");
                assert!(seen.insert(r1));
                let r3 = g.rotate_edge(g.rotate_edge(r1));
                assert_eq!(r3, e, "rotation should have order three");
            }
        }
    }

    #[test]
    fn rotation_preserves_faces() {
        // The images of a face's three edges form a face again, with the
        // direction roles cycled NW -> S -> NE -> NW.
        let g = TriGrid::new(3);
        for &f in g.faces() {
            let [nw, s, ne] = f.edges();
            let (rnw, rs, rne) = (g.rotate_edge(nw), g.rotate_edge(s), g.rotate_edge(ne));
            assert_eq!(rnw.dir, TriDir::S);
            assert_eq!(rs.dir, TriDir::NE);
            assert_eq!(rne.dir, TriDir::NW);
            let found = g.faces().iter().any(|&f2| {
                let es = f2.edges();
                es.contains(&rnw) && es.contains(&rs) && es.contains(&rne)
            });
            assert!(found, "rotated edges of {f:?} do not bound a face");
        }
    }

    #[test]
    fn square_boundary_lengths() {
        let g = SquareGrid::new(4);
        assert_eq!(g.edge_count(), 2 * 4 * 5);
        for k in 0..=4 {
            assert_eq!(g.boundary(k).len(), 4 * k);
        }
        assert_eq!(g.faces_hook_order().len(), 16);
    }

    #[test]
    fn edge_keys_round_trip() {
        let g = TriGrid::new(3);
        for &e in g.edges() {
            assert_eq!(TriEdge::parse_key(&e.key()), Some(e));
        }
        let s = SquareGrid::new(3);
        for &e in s.edges() {
            assert_eq!(SqEdge::parse_key(&e.key()), Some(e));
        }
    }
}
