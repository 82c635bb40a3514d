//! Simple undirected graphs on the dense vertex range `0..n`.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// An immutable simple undirected graph stored as sorted adjacency lists.
///
/// Vertices are the integers `0..n`. Adjacency is symmetric and loop-free.
/// Operations that change the edge set return a new graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Repeated edges (in either
    /// orientation) are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Degrees sorted in non-decreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        seq.sort_unstable();
        seq
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.adj.iter().all(|l| l.len() == k)
    }

    pub fn check_vertex(&self, u: usize) -> Result<()> {
        check_vertex(u, self.order())
    }

    /// Number of edges with both endpoints in `set`, i.e. the size of the
    /// induced subgraph. Duplicate entries in `set` are ignored.
    pub fn edges_within(&self, set: &[usize]) -> Result<usize> {
        let mut member = vec![false; self.order()];
        for &u in set {
            self.check_vertex(u)?;
            member[u] = true;
        }
        let count = (0..self.order())
            .filter(|&u| member[u])
            .map(|u| self.adj[u].iter().filter(|&&v| v > u && member[v]).count())
            .sum();
        Ok(count)
    }

    /// Number of triangles through `u`, which equals the number of edges
    /// spanned by its neighborhood.
    pub fn triangles_at(&self, u: usize) -> Result<usize> {
        self.check_vertex(u)?;
        Ok(self.triangles_at_unchecked(u))
    }

    pub(crate) fn triangles_at_unchecked(&self, u: usize) -> usize {
        let nbrs = &self.adj[u];
        nbrs.iter()
            .map(|&w| sorted_intersection_count(&self.adj[w], nbrs, w))
            .sum()
    }

    /// Common neighbors of `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// True iff the graph has at most one component. Graphs with fewer than
    /// two vertices are connected.
    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// A new graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::AlreadyAdjacent(u, v));
        }
        let mut adj = self.adj.clone();
        insert_sorted(&mut adj[u], v);
        insert_sorted(&mut adj[v], u);
        Ok(Graph { adj })
    }

    /// A new graph with the edge `uv` removed (a no-op if it is absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut adj = self.adj.clone();
        adj[u].retain(|&x| x != v);
        adj[v].retain(|&x| x != u);
        Ok(Graph { adj })
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of
    /// `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.order());
        let mut adj = vec![Vec::new(); self.order()];
        for (u, list) in self.adj.iter().enumerate() {
            let mut mapped: Vec<usize> = list.iter().map(|&v| perm[v]).collect();
            mapped.sort_unstable();
            adj[perm[u]] = mapped;
        }
        Graph { adj }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&v| v + shift).collect::<Vec<_>>()),
        );
        Graph { adj }
    }

    /// Adjacency rows as bitmasks. Only valid for `n <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.order() <= 64);
        self.adj
            .iter()
            .map(|l| l.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect()
    }
}

fn check_vertex(u: usize, n: usize) -> Result<()> {
    if u < n {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: u, n })
    }
}

fn insert_sorted(list: &mut Vec<usize>, v: usize) {
    if let Err(pos) = list.binary_search(&v) {
        list.insert(pos, v);
    }
}

/// Counts elements common to both sorted slices that are greater than `floor`.
fn sorted_intersection_count(a: &[usize], b: &[usize], floor: usize) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                if a[i] > floor {
                    count += 1;
                }
                i += 1;
                j += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).unwrap()
    }

    fn diamond() -> Graph {
        // 2 and 3 are the non-adjacent pair
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    fn paw() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn from_edges_basic() {
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3, k(3));
        assert_eq!(k3.size(), 3);

        let e4 = Graph::from_edges(4, []).unwrap();
        assert_eq!(e4.order(), 4);
        assert_eq!(e4.size(), 0);

        let dup = Graph::from_edges(4, [(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(dup.size(), 1);
        assert!(dup.has_edge(1, 0));
    }

    #[test]
    fn from_edges_errors() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn edges_within_examples() {
        assert_eq!(k(4).edges_within(&[0, 1, 2]).unwrap(), 3);
        assert_eq!(diamond().edges_within(&[2, 3]).unwrap(), 0);
        assert_eq!(diamond().edges_within(&[]).unwrap(), 0);
        assert!(k(4).edges_within(&[4]).is_err());
    }

    #[test]
    fn triangles_at_examples() {
        for u in 0..4 {
            assert_eq!(k(4).triangles_at(u).unwrap(), 3);
        }
        assert_eq!(paw().triangles_at(0).unwrap(), 1);
        assert_eq!(paw().triangles_at(3).unwrap(), 0);
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        for u in 0..5 {
            assert_eq!(c5.triangles_at(u).unwrap(), 0);
        }
        assert!(c5.triangles_at(5).is_err());
    }

    #[test]
    fn connectivity() {
        let two_triangles =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!two_triangles.is_connected());
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(p4.is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(Graph::empty(0).is_connected());
        assert!(!Graph::empty(2).is_connected());
    }

    #[test]
    fn edge_updates_return_new_graphs() {
        let d = diamond();
        let full = d.with_edge(2, 3).unwrap();
        assert_eq!(full, k(4));
        assert_eq!(d.size(), 5);
        assert_eq!(d.with_edge(0, 1), Err(Error::AlreadyAdjacent(0, 1)));
        assert_eq!(full.without_edge(3, 2).unwrap(), d);
    }

    #[test]
    fn relabel_preserves_structure() {
        let p = paw();
        let r = p.relabel(&[3, 2, 1, 0]);
        assert_eq!(r.degree(0), 1);
        assert_eq!(r.degree(3), 3);
        assert_eq!(r.degree_sequence(), p.degree_sequence());
    }
}
