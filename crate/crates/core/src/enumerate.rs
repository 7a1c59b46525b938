// SPDX-License-Identifier: Apache-2.0

//! Backtracking enumeration of induced paths and chordless cycles.
//!
//! Both searches grow a simple path one vertex at a time and only accept a
//! new vertex whose sole neighbor on the path is the current end, which keeps
//! every prefix an induced path and prunes chords as soon as they appear.

use rayon::prelude::*;

use crate::graph::{Graph, SubgraphKind, SubgraphRef};

/// Length of a heavy-hex unit cell.
pub const UNIT_CELL_LEN: usize = 12;

struct PathState {
    path: Vec<usize>,
    on_path: Vec<bool>,
    adj_count: Vec<u32>,
}

impl PathState {
    fn new(n: usize) -> Self {
        Self { path: Vec::new(), on_path: vec![false; n], adj_count: vec![0; n] }
    }

    fn push(&mut self, g: &Graph, v: usize) {
        self.path.push(v);
        self.on_path[v] = true;
        for &w in g.neighbors(v) {
            self.adj_count[w] += 1;
        }
    }

    fn pop(&mut self, g: &Graph) {
        let v = self.path.pop().expect("pop on empty path");
        self.on_path[v] = false;
        for &w in g.neighbors(v) {
            self.adj_count[w] -= 1;
        }
    }

    fn last(&self) -> usize {
        *self.path.last().expect("path is nonempty")
    }
}

/// Calls `visit` with every induced path that starts at `start` and has at
/// most `max_len` vertices, including the single-vertex path. Both
/// orientations of a path are visited from their respective start vertices.
pub fn for_each_induced_path_from<F>(g: &Graph, start: usize, max_len: usize, mut visit: F)
where
    F: FnMut(&[usize]),
{
    if max_len == 0 {
        return;
    }
    let mut state = PathState::new(g.n());
    state.push(g, start);
    grow_path(g, &mut state, max_len, &mut visit);
}

fn grow_path<F: FnMut(&[usize])>(g: &Graph, state: &mut PathState, max_len: usize, visit: &mut F) {
    visit(&state.path);
    if state.path.len() == max_len {
        return;
    }
    let last = state.last();
    for &w in g.neighbors(last) {
        if !state.on_path[w] && state.adj_count[w] == 1 {
            state.push(g, w);
            grow_path(g, state, max_len, visit);
            state.pop(g);
        }
    }
}

/// All induced paths with exactly `len` vertices, canonically oriented
/// (first vertex below last) and sorted lexicographically.
pub fn enumerate_path_subgraphs(g: &Graph, len: usize) -> Vec<SubgraphRef> {
    if len < 2 || len > g.n() {
        return Vec::new();
    }
    let mut paths: Vec<Vec<usize>> = (0..g.n())
        .into_par_iter()
        .flat_map_iter(|s| {
            let mut found = Vec::new();
            for_each_induced_path_from(g, s, len, |p| {
                if p.len() == len && p[0] < p[len - 1] {
                    found.push(p.to_vec());
                }
            });
            found
        })
        .collect();
    paths.sort_unstable();
    paths.into_iter().map(SubgraphRef::path).collect()
}

/// All chordless cycles with exactly `len` vertices (`len >= 3`).
///
/// Each cycle is reported once, starting at its smallest vertex and oriented
/// so that the second vertex is below the last; results are sorted.
pub fn enumerate_chordless_cycles(g: &Graph, len: usize) -> Vec<Vec<usize>> {
    if len < 3 || len > g.n() {
        return Vec::new();
    }
    let mut cycles: Vec<Vec<usize>> = (0..g.n())
        .into_par_iter()
        .flat_map_iter(|s| {
            let mut found = Vec::new();
            let mut state = PathState::new(g.n());
            state.push(g, s);
            grow_cycle(g, &mut state, s, len, &mut found);
            found
        })
        .collect();
    cycles.sort_unstable();
    cycles
}

fn grow_cycle(g: &Graph, state: &mut PathState, start: usize, len: usize, found: &mut Vec<Vec<usize>>) {
    let depth = state.path.len();
    let last = state.last();
    for &w in g.neighbors(last) {
        if w <= start || state.on_path[w] {
            continue;
        }
        if depth + 1 == len {
            // closing vertex: adjacent to the end and to the start, nothing else
            if state.adj_count[w] == 2 && g.has_edge(w, start) && state.path[1] < w {
                let mut cycle = state.path.clone();
                cycle.push(w);
                found.push(cycle);
            }
        } else if state.adj_count[w] == 1 && (depth == 1 || !g.has_edge(w, start)) {
            state.push(g, w);
            grow_cycle(g, state, start, len, found);
            state.pop(g);
        }
    }
}

/// The 12-vertex chordless cycles of `g`.
pub fn enumerate_unit_cells(g: &Graph) -> Vec<SubgraphRef> {
    enumerate_chordless_cycles(g, UNIT_CELL_LEN)
        .into_iter()
        .map(|vertices| SubgraphRef { kind: SubgraphKind::UnitCell, vertices })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_heavy_hex;

    #[test]
    fn path_examples() {
        assert_eq!(enumerate_path_subgraphs(&Graph::cycle(6), 3).len(), 6);
        assert_eq!(enumerate_path_subgraphs(&Graph::path(5), 5).len(), 1);
        assert_eq!(enumerate_path_subgraphs(&Graph::cycle(6), 6).len(), 0);
        assert_eq!(enumerate_path_subgraphs(&Graph::cycle(6), 5).len(), 6);
        assert!(enumerate_path_subgraphs(&Graph::path(3), 4).is_empty());
    }

    #[test]
    fn paths_are_canonical_and_sorted() {
        let paths = enumerate_path_subgraphs(&Graph::grid(3, 3), 4);
        assert!(paths.iter().all(|p| p.vertices[0] < p.vertices[3]));
        assert!(paths.windows(2).all(|w| w[0].vertices < w[1].vertices));
    }

    #[test]
    fn triangle_is_not_a_path_of_three() {
        assert!(enumerate_path_subgraphs(&Graph::complete(3), 3).is_empty());
        assert_eq!(enumerate_chordless_cycles(&Graph::complete(3), 3), vec![vec![0, 1, 2]]);
        assert!(enumerate_chordless_cycles(&Graph::complete(4), 4).is_empty());
    }

    #[test]
    fn unit_cell_examples() {
        assert_eq!(enumerate_unit_cells(&Graph::cycle(12)).len(), 1);
        assert!(enumerate_unit_cells(&Graph::path(5)).is_empty());
        assert!(!enumerate_unit_cells(&build_heavy_hex(3).unwrap()).is_empty());
        assert_eq!(enumerate_unit_cells(&build_heavy_hex(3).unwrap()).len(), 2);
        assert_eq!(enumerate_unit_cells(&build_heavy_hex(5).unwrap()).len(), 8);
    }
}
