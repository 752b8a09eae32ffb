//! The generalized quadrangle of order (3,5), built from an explicit
//! group-theoretic construction over GF(4), together with the special
//! 6x6 matrices over GF(2) acting on it, simple graph utilities (girth,
//! diameter), and complete bipartite comparison graphs.
//!
//! Conventions, fixed throughout the crate:
//!
//! * Vectors of `V = F_2^6` are 6-bit integers; bit `j` is the
//!   coefficient of the basis vector `e_{j+1}`.
//! * Matrices act on column vectors: `(Mv)_i = sum_j M[i][j] v_j`.
//! * Points of the quadrangle are the 64 vectors; lines are the cosets
//!   `v + U_i` of six distinguished 4-element subspaces, ordered by
//!   subspace block and then by smallest element; flags are incident
//!   (point, line) pairs in lexicographic order.
//! * The combined permutation domain of a graph with `n` vertices and
//!   `m` edges is `0..n+m`: first the vertices, then the edges in
//!   lexicographic order. For the quadrangle's incidence graph the edge
//!   part is exactly the flag list.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::perm::{PermGroup, Permutation};
use crate::reference::{
    QUADRANGLE_FLAGS, QUADRANGLE_LINES, QUADRANGLE_POINTS,
};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// GF(4) and the order-64 group behind the quadrangle
// ---------------------------------------------------------------------------

/// GF(4) multiplication; elements are encoded `0, 1, w = 2, w + 1 = 3`
/// where `w^2 = w + 1`. Addition is bitwise xor.
pub const GF4_MUL: [[u8; 4]; 4] = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
];

/// GF(4) product.
pub fn gf4_mul(a: u8, b: u8) -> u8 {
    GF4_MUL[a as usize][b as usize]
}

/// An element of the auxiliary group `S`: a triple over GF(4).
pub type STriple = (u8, u8, u8);

/// The product on `S`: `(x,y,z)(x',y',z') = (x+x', y+y', z+z'+x'y+xy')`.
/// In characteristic 2 the cross terms are symmetric, so `S` is
/// elementary abelian of order 64.
pub fn s_product(p: STriple, q: STriple) -> STriple {
    (
        p.0 ^ q.0,
        p.1 ^ q.1,
        p.2 ^ q.2 ^ gf4_mul(q.0, p.1) ^ gf4_mul(p.0, q.1),
    )
}

/// Generators of `S`, in the order that maps to `e_1..e_6` of `V`.
pub const S_GENERATORS: [STriple; 6] = [
    (1, 0, 0),
    (2, 0, 0),
    (0, 1, 0),
    (0, 2, 0),
    (0, 0, 1),
    (0, 0, 2),
];

/// The central subgroup `{(0,0,m)}` of `S`.
pub fn center_subgroup() -> [STriple; 4] {
    [(0, 0, 0), (0, 0, 1), (0, 0, 2), (0, 0, 3)]
}

/// The subgroup `{(m a, m b, 0) : m in GF(4)}` attached to the
/// projective point `[a : b]`.
pub fn projective_subgroup(a: u8, b: u8) -> [STriple; 4] {
    let mut out = [(0u8, 0u8, 0u8); 4];
    for (m, slot) in out.iter_mut().enumerate() {
        *slot = (gf4_mul(m as u8, a), gf4_mul(m as u8, b), 0);
    }
    out
}

/// Basis pairs of the six distinguished subspaces `U_1..U_6` of `V`,
/// as 6-bit vectors (see the module conventions).
pub const U_BASES: [[u8; 2]; 6] = [
    [0b010000, 0b100000],             // e5, e6
    [0b000001, 0b000010],             // e1, e2
    [0b000100, 0b001000],             // e3, e4
    [0b010101, 0b111010],             // e1+e3+e5, e2+e4+e5+e6
    [0b101001, 0b011110],             // e1+e4+e6, e2+e3+e4+e5
    [0b100110, 0b011011],             // e2+e3+e6, e1+e2+e4+e5
];

/// The four elements of `U_i`.
pub fn u_subspace(i: usize) -> [u8; 4] {
    let [b1, b2] = U_BASES[i];
    let mut u = [0, b1, b2, b1 ^ b2];
    u.sort_unstable();
    u
}

// ---------------------------------------------------------------------------
// Simple graphs
// ---------------------------------------------------------------------------

/// An undirected simple graph on `0..n`, with sorted adjacency lists
/// and a fixed lexicographic edge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    edges: Vec<(u32, u32)>,
}

impl Graph {
    /// Build from an edge list (loops rejected, duplicates collapsed).
    pub fn from_edges(n: usize, edge_list: &[(u32, u32)]) -> Result<Graph> {
        let mut set = HashSet::new();
        for &(u, v) in edge_list {
            if u as usize >= n || v as usize >= n {
                return Err(Error::Geometry(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Geometry(format!("loop at vertex {u}")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut edges: Vec<(u32, u32)> = set.into_iter().collect();
        edges.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, edges })
    }

    /// The complete bipartite graph `K_{m,n}`: vertices `0..m` on the
    /// first side, `m..m+n` on the second.
    pub fn complete_bipartite(m: usize, n: usize) -> Graph {
        let mut edge_list = Vec::with_capacity(m * n);
        for a in 0..m as u32 {
            for b in 0..n as u32 {
                edge_list.push((a, m as u32 + b));
            }
        }
        Graph::from_edges(m + n, &edge_list).expect("complete bipartite edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order; the canonical edge indexing.
    pub fn edges_lex(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Sorted list of distinct vertex degrees.
    pub fn degree_values(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self.adj.iter().map(|l| l.len()).collect();
        degs.sort_unstable();
        degs.dedup();
        degs
    }

    /// Girth (length of a shortest cycle), or `None` for a forest.
    ///
    /// One breadth-first search per root; a non-tree edge `(u,w)` seen
    /// from `u` witnesses a closed walk of length `d[u] + d[w] + 1`
    /// through the root. The minimum over all roots is exact.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        for root in 0..n as u32 {
            let mut dist = vec![u32::MAX; n];
            let mut parent = vec![u32::MAX; n];
            dist[root as usize] = 0;
            let mut queue = VecDeque::new();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if dist[w as usize] == u32::MAX {
                        dist[w as usize] = dist[u as usize] + 1;
                        parent[w as usize] = u;
                        queue.push_back(w);
                    } else if w != parent[u as usize] {
                        let cand = (dist[u as usize] + dist[w as usize] + 1) as usize;
                        if best.is_none_or(|b| cand < b) {
                            best = Some(cand);
                        }
                    }
                }
            }
        }
        best
    }

    /// Diameter, or `None` if the graph is disconnected or empty.
    pub fn diameter(&self) -> Option<usize> {
        let n = self.vertex_count();
        if n == 0 {
            return None;
        }
        let mut diam = 0usize;
        for root in 0..n as u32 {
            let dist = self.bfs_distances(root);
            for &d in &dist {
                if d == u32::MAX {
                    return None;
                }
                diam = diam.max(d as usize);
            }
        }
        Some(diam)
    }

    /// Distances from `root` (`u32::MAX` marks unreachable vertices).
    pub fn bfs_distances(&self, root: u32) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.vertex_count()];
        dist[root as usize] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in self.neighbors(u) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dist[u as usize] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Extend a vertex permutation to the combined domain
    /// `vertices ++ edges`; fails if it is not a graph automorphism.
    pub fn vertex_perm_to_combined(&self, vperm: &Permutation) -> Result<Permutation> {
        if vperm.degree() != self.vertex_count() {
            return Err(Error::DegreeMismatch(vperm.degree(), self.vertex_count()));
        }
        let n = self.vertex_count() as u32;
        let index = self.edge_index_map();
        let mut images: Vec<u32> = Vec::with_capacity(self.vertex_count() + self.edge_count());
        images.extend(vperm.images().iter().copied());
        for &(u, v) in &self.edges {
            let (a, b) = (vperm.image(u), vperm.image(v));
            let key = (a.min(b), a.max(b));
            match index.get(&key) {
                Some(&e) => images.push(n + e),
                None => {
                    return Err(Error::Geometry(format!(
                        "vertex map sends edge ({u},{v}) to non-edge ({},{})",
                        key.0, key.1
                    )))
                }
            }
        }
        Permutation::from_images(images)
    }

    /// Restriction of a combined-domain permutation to the vertex block.
    pub fn combined_to_vertex_perm(&self, cperm: &Permutation) -> Result<Permutation> {
        let n = self.vertex_count();
        if cperm.degree() != n + self.edge_count() {
            return Err(Error::DegreeMismatch(cperm.degree(), n + self.edge_count()));
        }
        let images: Vec<u32> = (0..n as u32).map(|v| cperm.image(v)).collect();
        if images.iter().any(|&v| v as usize >= n) {
            return Err(Error::Geometry(
                "combined permutation does not preserve the vertex block".into(),
            ));
        }
        Permutation::from_images(images)
    }

    fn edge_index_map(&self) -> HashMap<(u32, u32), u32> {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i as u32))
            .collect()
    }

    /// Degree of the combined domain (`vertices + edges`).
    pub fn combined_degree(&self) -> usize {
        self.vertex_count() + self.edge_count()
    }
}

// ---------------------------------------------------------------------------
// The quadrangle
// ---------------------------------------------------------------------------

/// The generalized quadrangle of order (3,5): 64 points (6-bit
/// vectors), 96 lines (cosets of `U_1..U_6`), 384 flags.
#[derive(Clone, Debug)]
pub struct Quadrangle {
    /// Line id -> the four points on it, ascending.
    pub lines: Vec<[u8; 4]>,
    /// Line id -> index of the subspace (`0..6`) it is a coset of.
    pub line_block: Vec<usize>,
    /// Point -> the six lines through it, ascending.
    pub point_lines: Vec<[usize; 6]>,
    /// Flags `(point, line)` in lexicographic order.
    pub flags: Vec<(u8, u16)>,
    graph: Graph,
    flag_ids: HashMap<(u8, u16), u32>,
    line_ids: HashMap<[u8; 4], u16>,
}

impl Quadrangle {
    /// The incidence graph: vertices `0..64` are points, `64..160` are
    /// lines; its lexicographic edge order coincides with the flag order.
    pub fn incidence_graph(&self) -> &Graph {
        &self.graph
    }

    /// Flag id of an incident `(point, line)` pair.
    pub fn flag_id(&self, point: u8, line: u16) -> Option<u32> {
        self.flag_ids.get(&(point, line)).copied()
    }

    /// Line id of a set of four points, if collinear.
    pub fn line_id(&self, points: [u8; 4]) -> Option<u16> {
        let mut key = points;
        key.sort_unstable();
        self.line_ids.get(&key).copied()
    }

    /// Extend a permutation of the 64 points to the combined domain
    /// (160 vertices then 384 flags); fails unless the point map is a
    /// collineation (maps lines to lines).
    pub fn point_perm_to_combined(&self, point_images: &[u8; 64]) -> Result<Permutation> {
        let mut seen = [false; 64];
        for &im in point_images {
            if im >= 64 || std::mem::replace(&mut seen[im as usize], true) {
                return Err(Error::Geometry("point map is not a permutation".into()));
            }
        }
        let mut vertex_images: Vec<u32> = point_images.iter().map(|&p| p as u32).collect();
        for line in 0..QUADRANGLE_LINES as u16 {
            let mut img = self.lines[line as usize];
            for p in &mut img {
                *p = point_images[*p as usize];
            }
            match self.line_id(img) {
                Some(l2) => vertex_images.push(64 + l2 as u32),
                None => {
                    return Err(Error::Geometry(format!(
                        "point map sends line {line} to a non-line"
                    )))
                }
            }
        }
        let vperm = Permutation::from_images(vertex_images)?;
        self.graph.vertex_perm_to_combined(&vperm)
    }

    /// The unique-projection axiom: for every non-incident pair
    /// `(p, L)` there is exactly one flag `(q, M)` with `q` on `L` and
    /// `M` through `p`.
    pub fn projection_axiom_holds(&self) -> bool {
        for p in 0..QUADRANGLE_POINTS as u8 {
            for line in 0..QUADRANGLE_LINES as u16 {
                if self.lines[line as usize].contains(&p) {
                    continue;
                }
                let mut count = 0;
                for &q in &self.lines[line as usize] {
                    for &m in &self.point_lines[p as usize] {
                        if self.lines[m].contains(&q) {
                            count += 1;
                        }
                    }
                }
                if count != 1 {
                    return false;
                }
            }
        }
        true
    }
}

/// Build the quadrangle, checking the construction as it goes: the
/// auxiliary group `S` has order 64 and exponent 2, the generator-word
/// map onto `V` is an isomorphism carrying the central and projective
/// subgroups onto `U_1..U_6`, the cosets partition the points, and the
/// incidence degrees are (6, 4).
pub fn build_quadrangle() -> Result<Quadrangle> {
    // S and the word map Phi.
    let mut phi: HashMap<STriple, u8> = HashMap::new();
    phi.insert((0, 0, 0), 0);
    let mut queue = VecDeque::new();
    queue.push_back((0, 0, 0));
    while let Some(p) = queue.pop_front() {
        for (i, &g) in S_GENERATORS.iter().enumerate() {
            let q = s_product(p, g);
            let word = phi[&p] ^ (1 << i);
            if !phi.contains_key(&q) {
                phi.insert(q, word);
                queue.push_back(q);
            }
        }
    }
    if phi.len() != 64 {
        return Err(Error::Geometry(format!(
            "auxiliary group has order {}, expected 64",
            phi.len()
        )));
    }
    let elements: Vec<STriple> = phi.keys().copied().collect();
    let images: HashSet<u8> = phi.values().copied().collect();
    if images.len() != 64 {
        return Err(Error::Geometry("word map is not injective".into()));
    }
    for &p in &elements {
        if s_product(p, p) != (0, 0, 0) {
            return Err(Error::Geometry("auxiliary group has exponent > 2".into()));
        }
        for &q in &elements {
            if phi[&s_product(p, q)] != phi[&p] ^ phi[&q] {
                return Err(Error::Geometry("word map is not a homomorphism".into()));
            }
        }
    }

    // The six subgroups map onto U_1..U_6.
    let sources: [[STriple; 4]; 6] = [
        center_subgroup(),
        projective_subgroup(1, 0),
        projective_subgroup(0, 1),
        projective_subgroup(1, 1),
        projective_subgroup(1, 2),
        projective_subgroup(2, 1),
    ];
    for (i, src) in sources.iter().enumerate() {
        let mut img: Vec<u8> = src.iter().map(|s| phi[s]).collect();
        img.sort_unstable();
        if img != u_subspace(i) {
            return Err(Error::Geometry(format!(
                "subgroup {i} does not map onto U_{}",
                i + 1
            )));
        }
    }

    // Lines: cosets, block by block, ordered by smallest element.
    let mut lines: Vec<[u8; 4]> = Vec::with_capacity(QUADRANGLE_LINES);
    let mut line_block = Vec::with_capacity(QUADRANGLE_LINES);
    for i in 0..6 {
        let u = u_subspace(i);
        let mut seen = HashSet::new();
        let mut reps: Vec<[u8; 4]> = Vec::new();
        for v in 0..64u8 {
            let mut coset = [v ^ u[0], v ^ u[1], v ^ u[2], v ^ u[3]];
            coset.sort_unstable();
            if seen.insert(coset) {
                reps.push(coset);
            }
        }
        if reps.len() != 16 {
            return Err(Error::Geometry(format!(
                "subspace {i} yields {} cosets, expected 16",
                reps.len()
            )));
        }
        reps.sort_unstable_by_key(|c| c[0]);
        for c in reps {
            lines.push(c);
            line_block.push(i);
        }
    }

    // Point-line incidences.
    let mut per_point: Vec<Vec<usize>> = vec![Vec::new(); QUADRANGLE_POINTS];
    for (li, line) in lines.iter().enumerate() {
        for &p in line {
            per_point[p as usize].push(li);
        }
    }
    let mut point_lines = Vec::with_capacity(QUADRANGLE_POINTS);
    for (p, list) in per_point.iter().enumerate() {
        let arr: [usize; 6] = list.as_slice().try_into().map_err(|_| {
            Error::Geometry(format!("point {p} lies on {} lines, expected 6", list.len()))
        })?;
        point_lines.push(arr);
    }

    // Flags, lexicographic.
    let mut flags: Vec<(u8, u16)> = Vec::with_capacity(QUADRANGLE_FLAGS);
    for p in 0..QUADRANGLE_POINTS as u8 {
        for &li in &point_lines[p as usize] {
            flags.push((p, li as u16));
        }
    }
    // point_lines lists are ascending, so this is already (point, line) lex.
    debug_assert!(flags.windows(2).all(|w| w[0] < w[1]));

    let edge_list: Vec<(u32, u32)> = flags
        .iter()
        .map(|&(p, li)| (p as u32, 64 + li as u32))
        .collect();
    let graph = Graph::from_edges(160, &edge_list)?;
    if graph.edges_lex().len() != QUADRANGLE_FLAGS {
        return Err(Error::Geometry("flag count mismatch".into()));
    }

    let flag_ids = flags
        .iter()
        .enumerate()
        .map(|(i, &f)| (f, i as u32))
        .collect();
    let line_ids = lines
        .iter()
        .enumerate()
        .map(|(i, &l)| (l, i as u16))
        .collect();
    Ok(Quadrangle {
        lines,
        line_block,
        point_lines,
        flags,
        graph,
        flag_ids,
        line_ids,
    })
}

// ---------------------------------------------------------------------------
// The special matrices
// ---------------------------------------------------------------------------

/// A 6x6 matrix over GF(2).
pub type Mat6 = [[u8; 6]; 6];

pub const MAT_A: Mat6 = [
    [0, 0, 1, 1, 1, 1],
    [0, 0, 0, 1, 1, 0],
    [1, 1, 1, 1, 1, 0],
    [0, 1, 0, 1, 0, 1],
    [0, 0, 1, 0, 1, 0],
    [0, 0, 0, 1, 1, 1],
];

pub const MAT_B: Mat6 = [
    [1, 0, 1, 1, 0, 1],
    [1, 1, 0, 1, 1, 1],
    [1, 1, 1, 1, 1, 0],
    [0, 1, 0, 1, 0, 1],
    [1, 1, 1, 0, 0, 1],
    [1, 0, 0, 1, 1, 0],
];

pub const MAT_C: Mat6 = [
    [1, 1, 0, 1, 0, 0],
    [1, 0, 1, 1, 0, 0],
    [1, 1, 1, 1, 1, 0],
    [1, 0, 1, 0, 1, 1],
    [0, 1, 1, 1, 0, 0],
    [1, 0, 0, 1, 0, 0],
];

pub const MAT_D: Mat6 = [
    [0, 1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 1, 0],
];

pub const MAT_IDENTITY: Mat6 = [
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
];

/// Apply a matrix to a column vector (6-bit encoding).
pub fn mat_apply(m: &Mat6, v: u8) -> u8 {
    let mut w = 0u8;
    for (i, row) in m.iter().enumerate() {
        let mut s = 0u8;
        for (j, &mij) in row.iter().enumerate() {
            s ^= mij & (v >> j);
        }
        w |= (s & 1) << i;
    }
    w
}

/// Matrix product `m * n`, acting as `v -> m (n v)`.
pub fn mat_mul(m: &Mat6, n: &Mat6) -> Mat6 {
    let mut out = [[0u8; 6]; 6];
    for i in 0..6 {
        for j in 0..6 {
            let mut s = 0u8;
            for k in 0..6 {
                s ^= m[i][k] & n[k][j];
            }
            out[i][j] = s;
        }
    }
    out
}

/// Multiplicative order of an invertible matrix.
pub fn mat_order(m: &Mat6) -> usize {
    let mut p = *m;
    let mut o = 1;
    while p != MAT_IDENTITY {
        p = mat_mul(&p, m);
        o += 1;
        assert!(o < 128, "matrix is not invertible or has huge order");
    }
    o
}

/// The action of a matrix on the 64 points.
pub fn mat_point_images(m: &Mat6) -> [u8; 64] {
    let mut out = [0u8; 64];
    for (v, slot) in out.iter_mut().enumerate() {
        *slot = mat_apply(m, v as u8);
    }
    out
}

/// The translation `x -> x + v` on the 64 points.
pub fn translation_point_images(v: u8) -> [u8; 64] {
    let mut out = [0u8; 64];
    for (x, slot) in out.iter_mut().enumerate() {
        *slot = x as u8 ^ v;
    }
    out
}

/// The permutation of the six subspace blocks induced by a point map,
/// or `None` if some `U_i` is not carried onto a `U_j`.
/// Entry `i` holds `j` when `U_{i+1}` maps onto `U_{j+1}`.
pub fn subspace_images(point_images: &[u8; 64]) -> Option<[usize; 6]> {
    let subspaces: Vec<[u8; 4]> = (0..6).map(u_subspace).collect();
    let mut out = [0usize; 6];
    for i in 0..6 {
        let mut img: Vec<u8> = subspaces[i]
            .iter()
            .map(|&u| point_images[u as usize])
            .collect();
        img.sort_unstable();
        let j = (0..6).find(|&j| img == subspaces[j])?;
        out[i] = j;
    }
    Some(out)
}

/// One-based cycle notation for a length-6 block permutation.
pub fn block_cycle_string(p: &[usize; 6]) -> String {
    let mut seen = [false; 6];
    let mut out = String::new();
    for start in 0..6 {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cyc = Vec::new();
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            cyc.push((j + 1).to_string());
            j = p[j];
        }
        out.push('(');
        out.push_str(&cyc.join(","));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Closure of a set of matrices under multiplication, capped.
pub fn matrix_closure(gens: &[Mat6], cap: usize) -> Result<Vec<Mat6>> {
    let mut seen: HashSet<Mat6> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(MAT_IDENTITY);
    out.push(MAT_IDENTITY);
    queue.push_back(MAT_IDENTITY);
    while let Some(m) = queue.pop_front() {
        for g in gens {
            let p = mat_mul(&m, g);
            if seen.insert(p) {
                if out.len() >= cap {
                    return Err(Error::BoundExceeded(format!(
                        "matrix closure exceeds cap {cap}"
                    )));
                }
                out.push(p);
                queue.push_back(p);
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Affine symmetry groups on the combined domain
// ---------------------------------------------------------------------------

/// The translations by `e_1..e_6` plus the given linear maps, as a
/// permutation group on the quadrangle's combined domain (544 points).
pub fn affine_group(q: &Quadrangle, linear: &[Mat6]) -> Result<PermGroup> {
    let mut gens = Vec::new();
    for i in 0..6 {
        gens.push(q.point_perm_to_combined(&translation_point_images(1 << i))?);
    }
    for m in linear {
        gens.push(q.point_perm_to_combined(&mat_point_images(m))?);
    }
    PermGroup::new(q.incidence_graph().combined_degree(), gens)
}

/// Flag block of the combined domain: the points `160..544`, as a
/// sorted list (the support on which chamber-regularity is tested).
pub fn flag_block(q: &Quadrangle) -> Vec<u32> {
    let n = q.incidence_graph().vertex_count() as u32;
    (n..n + q.incidence_graph().edge_count() as u32).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::{QUADRANGLE_DIAMETER, QUADRANGLE_GIRTH};

    #[test]
    fn quadrangle_builds_with_expected_counts() {
        let q = build_quadrangle().unwrap();
        assert_eq!(q.lines.len(), 96);
        assert_eq!(q.flags.len(), 384);
        assert_eq!(q.incidence_graph().vertex_count(), 160);
        assert_eq!(q.incidence_graph().edge_count(), 384);
        for p in 0..64u32 {
            assert_eq!(q.incidence_graph().degree(p), 6);
        }
        for l in 64..160u32 {
            assert_eq!(q.incidence_graph().degree(l), 4);
        }
    }

    #[test]
    fn quadrangle_has_girth_8_diameter_4() {
        let q = build_quadrangle().unwrap();
        assert_eq!(q.incidence_graph().girth(), Some(QUADRANGLE_GIRTH));
        assert_eq!(q.incidence_graph().diameter(), Some(QUADRANGLE_DIAMETER));
    }

    #[test]
    fn projection_axiom() {
        let q = build_quadrangle().unwrap();
        assert!(q.projection_axiom_holds());
    }

    #[test]
    fn matrix_orders() {
        assert_eq!(mat_order(&MAT_A), 6);
        assert_eq!(mat_order(&MAT_B), 2);
        assert_eq!(mat_order(&MAT_C), 3);
        assert_eq!(mat_order(&MAT_D), 3);
    }

    #[test]
    fn subspace_cycles_of_a_and_c() {
        let sa = subspace_images(&mat_point_images(&MAT_A)).unwrap();
        let sc = subspace_images(&mat_point_images(&MAT_C)).unwrap();
        assert_eq!(block_cycle_string(&sa), "(1,5,2,3,4,6)");
        assert_eq!(block_cycle_string(&sc), "(1,3,5)(2,4,6)");
        let sd = subspace_images(&mat_point_images(&MAT_D)).unwrap();
        assert_eq!(block_cycle_string(&sd), "()");
    }

    #[test]
    fn translations_and_matrices_are_collineations() {
        let q = build_quadrangle().unwrap();
        for i in 0..6 {
            q.point_perm_to_combined(&translation_point_images(1 << i))
                .unwrap();
        }
        for m in [MAT_A, MAT_B, MAT_C, MAT_D] {
            q.point_perm_to_combined(&mat_point_images(&m)).unwrap();
        }
    }

    #[test]
    fn small_affine_groups_are_flag_regular() {
        let q = build_quadrangle().unwrap();
        let ga = affine_group(&q, &[MAT_A]).unwrap();
        let gbc = affine_group(&q, &[MAT_B, MAT_C]).unwrap();
        let flags = flag_block(&q);
        assert_eq!(ga.order(), 384);
        assert_eq!(gbc.order(), 384);
        assert!(ga.is_regular_on(&flags));
        assert!(gbc.is_regular_on(&flags));
    }

    #[test]
    fn k44_shape() {
        let g = Graph::complete_bipartite(4, 4);
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 16);
        assert_eq!(g.girth(), Some(4));
        assert_eq!(g.diameter(), Some(2));
        assert_eq!(g.combined_degree(), 24);
    }
}
