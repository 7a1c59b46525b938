// SPDX-License-Identifier: Apache-2.0

//! Undirected simple graphs with dense vertex ids, lattice generators,
//! colorings and the subgraph bookkeeping used by the witnesses.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const HEAVY_HEX_127: &str = include_str!("../data/heavy_hex_127.json");

/// Names accepted by [`Graph::preset`].
pub const PRESETS: &[&str] = &["heavy-hex-127"];

/// On-disk edge-list document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range ids.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut adjacency = vec![Vec::new(); n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("edge ({a}, {b}) references a vertex >= n = {n}")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({}, {})", e.0, e.1)));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for nb in &mut adjacency {
            nb.sort_unstable();
        }
        Ok(Self { n, edges: seen.into_iter().collect(), adjacency, name: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn from_document(doc: &GraphDocument) -> Result<Self> {
        let g = Graph::new(doc.n, doc.edges.iter().map(|e| (e[0], e[1])))?;
        Ok(match &doc.name {
            Some(name) => g.with_name(name.clone()),
            None => g,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphDocument = serde_json::from_str(text)?;
        Self::from_document(&doc)
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument { n: self.n, edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(), name: self.name.clone() }
    }

    /// Resolves a bundled coupling map by name.
    pub fn preset(name: &str) -> Result<Self> {
        match name {
            "heavy-hex-127" => Self::from_json(HEAVY_HEX_127),
            other => Err(Error::UnknownPreset(other.to_string())),
        }
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path graph is valid").with_name(format!("path-{n}"))
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle graph is valid").with_name(format!("cycle-{n}"))
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Self::new(n, edges).expect("complete graph is valid").with_name(format!("complete-{n}"))
    }

    pub fn star(leaves: usize) -> Self {
        Self::new(leaves + 1, (1..=leaves).map(|l| (0, l)))
            .expect("star graph is valid")
            .with_name(format!("star-{leaves}"))
    }

    /// Rectangular grid with `rows * cols` vertices numbered row-major.
    pub fn grid(rows: usize, cols: usize) -> Self {
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    edges.push((v, v + 1));
                }
                if r + 1 < rows {
                    edges.push((v, v + cols));
                }
            }
        }
        Self::new(rows * cols, edges).expect("grid graph is valid").with_name(format!("grid-{rows}x{cols}"))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Edges as `(low, high)` pairs in ascending order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components(|_, _| true).len() <= 1
    }

    pub fn is_bipartite(&self) -> bool {
        bfs_two_coloring(self).is_some()
    }

    /// Vertices adjacent to `u` but not in it.
    pub fn neighborhood(&self, u: &[usize]) -> BTreeSet<usize> {
        let inside = self.membership(u);
        let mut out = BTreeSet::new();
        for &v in u {
            for &w in &self.adjacency[v] {
                if !inside[w] {
                    out.insert(w);
                }
            }
        }
        out
    }

    /// Edges with exactly one endpoint in `u`.
    pub fn boundary_edges(&self, u: &[usize]) -> Vec<(usize, usize)> {
        let inside = self.membership(u);
        self.edges.iter().copied().filter(|&(a, b)| inside[a] != inside[b]).collect()
    }

    /// Edges with both endpoints in `u`.
    pub fn induced_edges(&self, u: &[usize]) -> Vec<(usize, usize)> {
        let inside = self.membership(u);
        self.edges.iter().copied().filter(|&(a, b)| inside[a] && inside[b]).collect()
    }

    /// The subgraph induced by `u`, relabelled so that `u[j]` becomes vertex `j`.
    pub fn induced_subgraph(&self, u: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.n];
        for (j, &v) in u.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = j;
        }
        Graph::new(u.len(), self.induced_edges(u).into_iter().map(|(a, b)| (index[a], index[b])))
    }

    /// Components of the spanning subgraph that keeps only edges accepted by `keep`.
    /// Isolated vertices form singleton components; each component is sorted and
    /// components are ordered by their smallest vertex.
    pub fn connected_components<F>(&self, keep: F) -> Vec<Vec<usize>>
    where
        F: Fn(usize, usize) -> bool,
    {
        let mut label = vec![usize::MAX; self.n];
        let mut components = Vec::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut comp = vec![s];
            label[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    if label[w] == usize::MAX && keep(v.min(w), v.max(w)) {
                        label[w] = id;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    pub(crate) fn membership(&self, u: &[usize]) -> Vec<bool> {
        let mut inside = vec![false; self.n];
        for &v in u {
            inside[v] = true;
        }
        inside
    }
}

/// Heavy-hex patch with `distance` rows of `2 * distance + 1` qubits.
///
/// Consecutive rows are joined by bridge qubits at every fourth column, with the
/// bridge columns shifted by two between alternating row gaps. Every bounded
/// face is a 12-cycle. Vertices are numbered row by row, each row followed by
/// the bridges below it; `distance = 7` reproduces the 127-qubit layout plus
/// its two trimmed corner qubits.
pub fn build_heavy_hex(distance: usize) -> Result<Graph> {
    if distance < 3 || distance.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("heavy-hex distance must be odd and >= 3, got {distance}")));
    }
    let width = 2 * distance + 1;
    let mut edges = Vec::new();
    let mut next = 0usize;
    let mut row_start = Vec::with_capacity(distance);
    let mut bridges: Vec<Vec<(usize, usize)>> = Vec::new();
    for r in 0..distance {
        row_start.push(next);
        for c in 1..width {
            edges.push((next + c - 1, next + c));
        }
        next += width;
        if r + 1 < distance {
            let offset = if r % 2 == 0 { 0 } else { 2 };
            let gap: Vec<(usize, usize)> = (offset..width)
                .step_by(4)
                .map(|c| {
                    let b = next;
                    next += 1;
                    (c, b)
                })
                .collect();
            bridges.push(gap);
        }
    }
    for (r, gap) in bridges.iter().enumerate() {
        for &(c, b) in gap {
            edges.push((row_start[r] + c, b));
            edges.push((b, row_start[r + 1] + c));
        }
    }
    Ok(Graph::new(next, edges)?.with_name(format!("heavy-hex-d{distance}")))
}

fn bfs_two_coloring(g: &Graph) -> Option<Vec<usize>> {
    let mut colors = vec![usize::MAX; g.n];
    for s in 0..g.n {
        if colors[s] != usize::MAX {
            continue;
        }
        colors[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if colors[w] == usize::MAX {
                    colors[w] = 1 - colors[v];
                    queue.push_back(w);
                } else if colors[w] == colors[v] {
                    return None;
                }
            }
        }
    }
    Some(colors)
}

/// A proper vertex coloring with colors `0..k`, each class nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexColoring {
    colors: Vec<usize>,
    k: usize,
    bipartite: bool,
}

impl VertexColoring {
    /// Validates an explicit coloring against `g`.
    pub fn from_colors(g: &Graph, colors: Vec<usize>) -> Result<Self> {
        if colors.len() != g.n() {
            return Err(Error::InvalidArgument(format!(
                "coloring has {} entries for {} vertices",
                colors.len(),
                g.n()
            )));
        }
        for &(a, b) in g.edges() {
            if colors[a] == colors[b] {
                return Err(Error::InvalidArgument(format!(
                    "edge ({a}, {b}) joins two vertices of color {}",
                    colors[a]
                )));
            }
        }
        let k = colors.iter().max().map_or(0, |m| m + 1);
        let mut used = vec![false; k];
        for &c in &colors {
            used[c] = true;
        }
        if used.iter().any(|u| !u) {
            return Err(Error::InvalidArgument("coloring leaves a color class empty".into()));
        }
        let bipartite = k <= 2;
        Ok(Self { colors, k, bipartite })
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// False when the graph had an odd cycle and a greedy coloring was used.
    pub fn is_bipartite(&self) -> bool {
        self.bipartite
    }

    /// Vertices of color `c`, ascending.
    pub fn class(&self, c: usize) -> Vec<usize> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == c).collect()
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        (0..self.k).map(|c| self.class(c)).collect()
    }
}

/// Breadth-first 2-coloring; falls back to a greedy coloring on non-bipartite graphs.
pub fn two_color(g: &Graph) -> VertexColoring {
    if let Some(colors) = bfs_two_coloring(g) {
        let k = colors.iter().max().map_or(0, |m| m + 1);
        return VertexColoring { colors, k, bipartite: true };
    }
    let mut colors = vec![usize::MAX; g.n()];
    for v in 0..g.n() {
        let taken: BTreeSet<usize> = g.neighbors(v).iter().map(|&w| colors[w]).filter(|&c| c != usize::MAX).collect();
        colors[v] = (0..).find(|c| !taken.contains(c)).unwrap();
    }
    let k = colors.iter().max().map_or(0, |m| m + 1);
    VertexColoring { colors, k, bipartite: false }
}

/// Disjoint nonempty cells covering a vertex set, plus a count of nominal
/// empty cells that still count towards `k` at evaluation time.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    cells: Vec<Vec<usize>>,
    empty: usize,
}

impl Partition {
    /// Validates that `cells` are pairwise disjoint and cover `support` exactly.
    /// Empty cells are counted but not stored.
    pub fn new(support: &[usize], cells: Vec<Vec<usize>>) -> Result<Self> {
        let target: BTreeSet<usize> = support.iter().copied().collect();
        let mut seen = BTreeSet::new();
        let mut stored = Vec::new();
        let mut empty = 0;
        for mut cell in cells {
            if cell.is_empty() {
                empty += 1;
                continue;
            }
            cell.sort_unstable();
            for &v in &cell {
                if !seen.insert(v) {
                    return Err(Error::InvalidArgument(format!("vertex {v} appears in two cells")));
                }
            }
            stored.push(cell);
        }
        if seen != target {
            return Err(Error::InvalidArgument("partition cells do not cover the declared support".into()));
        }
        Ok(Self { cells: stored, empty })
    }

    /// Splits `u` by color: one cell per color class of `coloring`, empty ones included.
    pub fn by_color(u: &[usize], coloring: &VertexColoring) -> Self {
        let mut cells = vec![Vec::new(); coloring.k()];
        for &v in u {
            cells[coloring.color(v)].push(v);
        }
        Self::new(u, cells).expect("color split is a partition")
    }

    /// One singleton cell per vertex.
    pub fn singletons(u: &[usize]) -> Self {
        Self::new(u, u.iter().map(|&v| vec![v]).collect()).expect("singletons form a partition")
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn empty_cells(&self) -> usize {
        self.empty
    }

    /// Nominal cell count, empty cells included.
    pub fn k(&self) -> usize {
        self.cells.len() + self.empty
    }

    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.cells.iter().flatten().copied().collect();
        s.sort_unstable();
        s
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).chain(std::iter::repeat_n(0, self.empty)).collect()
    }

    /// Disjoint union of two partitions.
    pub fn union(&self, other: &Partition) -> Result<Self> {
        let support: Vec<usize> = self.support().into_iter().chain(other.support()).collect();
        let mut cells: Vec<Vec<usize>> = self.cells.iter().chain(other.cells.iter()).cloned().collect();
        cells.extend(std::iter::repeat_n(Vec::new(), self.empty + other.empty));
        Self::new(&support, cells)
    }

    /// True if every cell of `self` lies inside some cell of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.cells.iter().all(|cell| coarser.cells.iter().any(|big| cell.iter().all(|v| big.binary_search(v).is_ok())))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubgraphKind {
    Path,
    UnitCell,
    Generic,
}

/// An ordered vertex subset of a parent graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubgraphRef {
    pub kind: SubgraphKind,
    pub vertices: Vec<usize>,
}

impl SubgraphRef {
    /// A path in canonical orientation (first vertex below last).
    pub fn path(mut vertices: Vec<usize>) -> Self {
        if vertices.len() > 1 && vertices[0] > vertices[vertices.len() - 1] {
            vertices.reverse();
        }
        Self { kind: SubgraphKind::Path, vertices }
    }

    pub fn generic(vertices: Vec<usize>) -> Self {
        Self { kind: SubgraphKind::Generic, vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertices in ascending order.
    pub fn sorted(&self) -> Vec<usize> {
        let mut v = self.vertices.clone();
        v.sort_unstable();
        v
    }

    /// Checks distinctness, and for paths adjacency of consecutive vertices.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = BTreeSet::new();
        for &v in &self.vertices {
            g.check_vertex(v)?;
            if !seen.insert(v) {
                return Err(Error::InvalidArgument(format!("vertex {v} repeated in subgraph")));
            }
        }
        if self.kind == SubgraphKind::Path {
            for w in self.vertices.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return Err(Error::NotAnEdge(w[0], w[1]));
                }
            }
        }
        Ok(())
    }
}
