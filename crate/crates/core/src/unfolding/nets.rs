//! Enumeration of cube nets.
//!
//! Every unfolding of the cube corresponds to a spanning tree of the
//! face-adjacency graph (the octahedron graph: each face adjacent to the
//! four non-opposite faces). Unfolding a spanning tree lays the six faces
//! out as a hexomino; collapsing the results under the eight planar
//! congruences leaves the classic eleven shapes.

use std::collections::BTreeSet;

use crate::orientation::{Face, Orientation};
use crate::unfolding::Move;

/// A hexomino in canonical form: cells translated to nonnegative
/// coordinates, lexicographically least over the eight congruences.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Polyomino {
    cells: Vec<(i32, i32)>,
}

type CellTransform = fn((i32, i32)) -> (i32, i32);

impl Polyomino {
    /// Canonicalizes an arbitrary cell set.
    pub fn canonical(cells: &[(i32, i32)]) -> Polyomino {
        let transforms: [CellTransform; 8] = [
            |(x, y)| (x, y),
            |(x, y)| (-y, x),
            |(x, y)| (-x, -y),
            |(x, y)| (y, -x),
            |(x, y)| (-x, y),
            |(x, y)| (x, -y),
            |(x, y)| (y, x),
            |(x, y)| (-y, -x),
        ];
        let mut best: Option<Vec<(i32, i32)>> = None;
        for tf in transforms {
            let mapped: Vec<(i32, i32)> = cells.iter().map(|&c| tf(c)).collect();
            let min_x = mapped.iter().map(|c| c.0).min().unwrap();
            let min_y = mapped.iter().map(|c| c.1).min().unwrap();
            let mut shifted: Vec<(i32, i32)> = mapped
                .iter()
                .map(|&(x, y)| (x - min_x, y - min_y))
                .collect();
            shifted.sort_unstable();
            if best.as_ref().is_none_or(|b| shifted < *b) {
                best = Some(shifted);
            }
        }
        Polyomino {
            cells: best.unwrap(),
        }
    }

    pub fn cells(&self) -> &[(i32, i32)] {
        &self.cells
    }

    /// Renders rows top to bottom with `#` for cells.
    pub fn ascii(&self) -> String {
        let max_x = self.cells.iter().map(|c| c.0).max().unwrap_or(0);
        let max_y = self.cells.iter().map(|c| c.1).max().unwrap_or(0);
        let mut out = String::new();
        for y in (0..=max_y).rev() {
            let mut row = String::new();
            for x in 0..=max_x {
                row.push(if self.cells.contains(&(x, y)) {
                    '#'
                } else {
                    ' '
                });
            }
            out.push_str(row.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Result of enumerating all unfoldings.
#[derive(Clone, Debug)]
pub struct NetEnumeration {
    /// Number of spanning trees of the face-adjacency graph.
    pub tree_count: usize,
    /// Number of congruence classes among the unfolded hexominoes.
    pub class_count: usize,
    /// One canonical representative per class, sorted.
    pub representatives: Vec<Polyomino>,
}

fn face_index(f: Face) -> usize {
    Face::ALL.iter().position(|&g| g == f).unwrap()
}

fn adjacency_edges() -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (i, &a) in Face::ALL.iter().enumerate() {
        for (j, &b) in Face::ALL.iter().enumerate().skip(i + 1) {
            if b != a.opposite() {
                edges.push((i, j));
            }
        }
    }
    edges
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Lays a spanning tree flat: walk it from the bottom face, rolling the
/// cube one square per tree edge.
fn unfold_tree(adj: &[Vec<usize>]) -> Vec<(i32, i32)> {
    let mut cells = vec![(0i32, 0i32)];
    let mut stack = vec![(face_index(Face::Bottom), (0i32, 0i32), Orientation::START)];
    let mut placed = [false; 6];
    placed[face_index(Face::Bottom)] = true;
    while let Some((face, cell, orient)) = stack.pop() {
        for &child in &adj[face] {
            if placed[child] {
                continue;
            }
            placed[child] = true;
            // Exactly one roll direction lands the child face.
            let m = Move::ALL
                .into_iter()
                .find(|&m| face_index(orient.roll(m).down) == child)
                .expect("tree edges connect adjacent faces");
            let (dx, dy) = m.vector();
            let next_cell = (cell.0 + dx, cell.1 + dy);
            assert!(!cells.contains(&next_cell), "cube unfoldings never overlap");
            cells.push(next_cell);
            stack.push((child, next_cell, orient.roll(m)));
        }
    }
    cells
}

/// Enumerates all spanning trees of the face-adjacency graph, unfolds each
/// into a hexomino, and groups the results up to planar congruence.
pub fn enumerate_nets() -> NetEnumeration {
    let edges = adjacency_edges();
    debug_assert_eq!(edges.len(), 12);
    let mut tree_count = 0;
    let mut classes: BTreeSet<Polyomino> = BTreeSet::new();
    // All 5-subsets of the 12 edges; a subset that joins all six faces
    // without a cycle is a spanning tree.
    let mut pick = [0usize; 5];
    fn visit(
        edges: &[(usize, usize)],
        start: usize,
        depth: usize,
        pick: &mut [usize; 5],
        tree_count: &mut usize,
        classes: &mut BTreeSet<Polyomino>,
    ) {
        if depth == 5 {
            let mut uf = UnionFind::new(6);
            if pick.iter().all(|&e| uf.union(edges[e].0, edges[e].1)) {
                *tree_count += 1;
                let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 6];
                for &e in pick.iter() {
                    adj[edges[e].0].push(edges[e].1);
                    adj[edges[e].1].push(edges[e].0);
                }
                classes.insert(Polyomino::canonical(&unfold_tree(&adj)));
            }
            return;
        }
        for e in start..edges.len() {
            pick[depth] = e;
            visit(edges, e + 1, depth + 1, pick, tree_count, classes);
        }
    }
    visit(&edges, 0, 0, &mut pick, &mut tree_count, &mut classes);
    let representatives: Vec<Polyomino> = classes.into_iter().collect();
    NetEnumeration {
        tree_count,
        class_count: representatives.len(),
        representatives,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Spanning-tree count by the matrix-tree theorem: any cofactor of the
    /// graph Laplacian, via fraction-free elimination over the integers.
    fn matrix_tree_count() -> i64 {
        let edges = adjacency_edges();
        let mut lap = [[0i64; 6]; 6];
        for (a, b) in edges {
            lap[a][a] += 1;
            lap[b][b] += 1;
            lap[a][b] -= 1;
            lap[b][a] -= 1;
        }
        // 5x5 minor, Bareiss elimination.
        let n = 5;
        let mut m = [[0i64; 5]; 5];
        for i in 0..n {
            for j in 0..n {
                m[i][j] = lap[i][j];
            }
        }
        let mut prev = 1i64;
        for k in 0..n - 1 {
            assert_ne!(m[k][k], 0, "pivot");
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
            }
            prev = m[k][k];
        }
        m[n - 1][n - 1]
    }

    #[test]
    fn spanning_tree_count_matches_matrix_tree_theorem() {
        let nets = enumerate_nets();
        assert_eq!(nets.tree_count, 384);
        assert_eq!(matrix_tree_count(), 384);
    }

    #[test]
    fn eleven_congruence_classes_of_six_cells_each() {
        let nets = enumerate_nets();
        assert_eq!(nets.class_count, 11);
        assert_eq!(nets.representatives.len(), 11);
        for rep in &nets.representatives {
            assert_eq!(rep.cells().len(), 6);
        }
    }

    #[test]
    fn canonical_form_is_congruence_invariant() {
        let l_shape = [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (2, 0)];
        let rotated: Vec<(i32, i32)> = l_shape.iter().map(|&(x, y)| (-y + 7, x - 2)).collect();
        assert_eq!(
            Polyomino::canonical(&l_shape),
            Polyomino::canonical(&rotated)
        );
    }

    #[test]
    fn ascii_rendering_is_nonempty() {
        let nets = enumerate_nets();
        for rep in &nets.representatives {
            let art = rep.ascii();
            assert_eq!(art.matches('#').count(), 6);
        }
    }
}
