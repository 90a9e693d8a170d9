//! Simple undirected graphs with sorted adjacency lists.

use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UGraph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl UGraph {
    pub fn empty(n: usize) -> Self {
        UGraph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange(a));
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange(b));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        Ok(Self::from_adjacency_unchecked(adjacency))
    }

    /// Sorts and deduplicates; caller guarantees symmetry and no loops.
    pub(crate) fn from_adjacency_unchecked(mut adjacency: Vec<Vec<usize>>) -> Self {
        for nb in &mut adjacency {
            nb.sort_unstable();
            nb.dedup();
        }
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        UGraph {
            adjacency,
            edge_count,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, nb)| nb.iter().filter(move |&&j| i < j).map(move |&j| (i, j)))
            .collect()
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adjacency.first().map_or(0, Vec::len);
        self.adjacency.iter().all(|nb| nb.len() == d).then_some(d)
    }

    pub fn is_symmetric(&self) -> bool {
        self.adjacency
            .iter()
            .enumerate()
            .all(|(i, nb)| nb.iter().all(|&j| j != i && self.has_edge(j, i)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Whether `map` (a vertex bijection onto `other`) sends edges to edges
    /// and non-edges to non-edges.
    pub fn is_isomorphism(&self, other: &UGraph, map: &[usize]) -> bool {
        let n = self.vertex_count();
        if other.vertex_count() != n || map.len() != n || self.edge_count != other.edge_count {
            return false;
        }
        let mut hit = vec![false; n];
        for &m in map {
            if m >= n || hit[m] {
                return false;
            }
            hit[m] = true;
        }
        // Equal edge counts plus edge-preservation under a bijection forces
        // non-edges to map to non-edges.
        self.edges()
            .into_iter()
            .all(|(a, b)| other.has_edge(map[a], map[b]))
    }

    /// One edge per line, `i j`, 0-based, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for (a, b) in self.edges() {
            let _ = writeln!(s, "{a} {b}");
        }
        s
    }

    /// Graphviz output with the given graph name and vertex labels.
    pub fn to_dot(&self, name: &str, labels: &[String]) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph {} {{", dot_quote(name));
        for (i, label) in labels.iter().enumerate().take(self.vertex_count()) {
            let _ = writeln!(s, "  {i} [label={}];", dot_quote(label));
        }
        for (a, b) in self.edges() {
            let _ = writeln!(s, "  {a} -- {b};");
        }
        s.push_str("}\n");
        s
    }
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Parses the edge-list format written by [`UGraph::to_edge_list`].
pub fn parse_edge_list(n: usize, text: &str) -> Result<UGraph, GraphError> {
    let mut edges = Vec::new();
    for line in text.lines() {
        let mut it = line.split_whitespace();
        if let (Some(a), Some(b)) = (it.next(), it.next()) {
            let a = a
                .parse()
                .map_err(|_| GraphError::VertexOutOfRange(usize::MAX))?;
            let b = b
                .parse()
                .map_err(|_| GraphError::VertexOutOfRange(usize::MAX))?;
            edges.push((a, b));
        }
    }
    UGraph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> UGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        UGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn basics() {
        let c6 = cycle(6);
        assert_eq!(c6.edge_count(), 6);
        assert_eq!(c6.regular_degree(), Some(2));
        assert_eq!(c6.components().len(), 1);
        assert!(c6.is_symmetric());
        assert!(!c6.is_complete());
        assert!(UGraph::empty(1).is_complete());
        assert_eq!(UGraph::empty(4).components().len(), 4);
    }

    #[test]
    fn rejects_loops_and_range() {
        assert_eq!(
            UGraph::from_edges(3, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(
            UGraph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange(3))
        );
    }

    #[test]
    fn isomorphism_check() {
        let c4 = cycle(4);
        assert!(c4.is_isomorphism(&c4, &[1, 2, 3, 0]));
        assert!(!c4.is_isomorphism(&c4, &[0, 2, 1, 3]));
        assert!(!c4.is_isomorphism(&c4, &[0, 0, 1, 2]));
    }

    #[test]
    fn edge_list_and_dot() {
        let c4 = cycle(4);
        assert_eq!(c4.to_edge_list(), "0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(4, &c4.to_edge_list()).unwrap(), c4);
        let labels: Vec<String> = (0..4).map(|i| format!("v{i}")).collect();
        let dot = c4.to_dot("G\"x", &labels);
        assert!(dot.starts_with("graph \"G\\\"x\" {"));
        assert_eq!(dot.matches(" -- ").count(), 4);
    }
}
