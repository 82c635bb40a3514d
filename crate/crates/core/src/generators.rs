//! Constructors for the named graphs and graph families.
//!
//! Labelings are deterministic. Copies of `K_{q} - e` occupy consecutive
//! label ranges, and within each copy the two endpoints of the missing edge
//! carry the last two labels.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `(d, i2, i3)`: diamond blocks, and triangle blocks with exactly two or
/// exactly three vertices of degree 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphType {
    pub d: usize,
    pub i2: usize,
    pub i3: usize,
}

impl GraphType {
    pub const fn new(d: usize, i2: usize, i3: usize) -> Self {
        GraphType { d, i2, i3 }
    }

    /// Whether this is one of the seven extremal types.
    pub fn is_extremal(&self) -> bool {
        EXTREMAL_TYPES.contains(self)
    }
}

impl fmt::Display for GraphType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.d, self.i2, self.i3)
    }
}

/// Types of the extremal subcubic family.
pub const EXTREMAL_TYPES: [GraphType; 7] = [
    GraphType::new(0, 0, 0),
    GraphType::new(1, 0, 0),
    GraphType::new(0, 1, 0),
    GraphType::new(0, 0, 1),
    GraphType::new(0, 1, 1),
    GraphType::new(0, 2, 0),
    GraphType::new(0, 3, 0),
];

/// The extremal types plus `(2,0,0)`, which has a closed form but is not
/// extremal.
pub const FAMILY_TYPES: [GraphType; 8] = [
    GraphType::new(0, 0, 0),
    GraphType::new(1, 0, 0),
    GraphType::new(2, 0, 0),
    GraphType::new(0, 1, 0),
    GraphType::new(0, 0, 1),
    GraphType::new(0, 1, 1),
    GraphType::new(0, 2, 0),
    GraphType::new(0, 3, 0),
];

/// Order of the smallest family member of type `t` (no triangle-free
/// vertices).
pub fn family_b_base_order(t: GraphType) -> Result<usize> {
    match (t.d, t.i2, t.i3) {
        (i @ 0..=2, 0, 0) => Ok(6 + i),
        (0, 1, 0) => Ok(9),
        (0, 0, 1) | (0, 2, 0) => Ok(12),
        (0, 1, 1) | (0, 3, 0) => Ok(15),
        _ => Err(Error::IllegalType(t.to_string())),
    }
}

/// Order of a type-`t` family member with `k` triangle-free vertices.
pub fn family_b_order(t: GraphType, k: usize) -> Result<usize> {
    Ok(family_b_base_order(t)? + 4 * k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    Triangle,
    Diamond,
    Paw,
    K4,
    Path(usize),
    Cycle(usize),
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Accepts `triangle`, `diamond`, `paw`, `K4`, `path(n)`, `cycle(n)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let arg = |prefix: &str| -> Option<Result<usize>> {
            let inner = s
                .strip_prefix(prefix)?
                .strip_prefix('(')?
                .strip_suffix(')')?;
            Some(
                inner
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidParameter(format!("bad size in {s:?}"))),
            )
        };
        match s {
            "triangle" => Ok(NamedGraph::Triangle),
            "diamond" => Ok(NamedGraph::Diamond),
            "paw" => Ok(NamedGraph::Paw),
            "K4" | "k4" => Ok(NamedGraph::K4),
            _ => {
                if let Some(n) = arg("path") {
                    Ok(NamedGraph::Path(n?))
                } else if let Some(n) = arg("cycle") {
                    Ok(NamedGraph::Cycle(n?))
                } else {
                    Err(Error::InvalidParameter(format!("unknown graph name {s:?}")))
                }
            }
        }
    }
}

pub fn named(name: NamedGraph) -> Result<Graph> {
    match name {
        NamedGraph::Triangle => cycle(3),
        NamedGraph::Diamond => complete_minus_edge(4),
        NamedGraph::Paw => Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)]),
        NamedGraph::K4 => Ok(complete(4)),
        NamedGraph::Path(n) => path(n),
        NamedGraph::Cycle(n) => cycle(n),
    }
}

pub fn named_str(name: &str) -> Result<Graph> {
    named(name.parse()?)
}

/// The path on `n >= 1` vertices.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "path needs at least one vertex".into(),
        ));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// The cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid edges")
}

fn complete_minus_edge_edges(q: usize, base: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..q)
        .flat_map(move |u| (u + 1..q).map(move |v| (u, v)))
        .filter(move |&(u, v)| (u, v) != (q - 2, q - 1))
        .map(move |(u, v)| (base + u, base + v))
}

/// `K_q` minus the edge between its last two vertices.
pub fn complete_minus_edge(q: usize) -> Result<Graph> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!(
            "K_q - e needs q >= 2, got {q}"
        )));
    }
    Graph::from_edges(q, complete_minus_edge_edges(q, 0))
}

/// `K_{a,b}` with the part of size `a` on labels `0..a`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(Error::InvalidParameter(format!(
            "K_(a,b) needs a, b >= 1, got ({a},{b})"
        )));
    }
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// `ell` copies of `K_{k+1} - e` with copy `i` on labels
/// `i(k+1)..(i+1)(k+1)` plus the given inter-copy edges.
fn cyclic_copies(
    k: usize,
    ell: usize,
    links: impl Iterator<Item = (usize, usize)>,
) -> Result<Graph> {
    let q = k + 1;
    let inner = (0..ell).flat_map(|i| complete_minus_edge_edges(q, i * q));
    Graph::from_edges(ell * q, inner.chain(links))
}

/// The `k`-regular graph on `ell` cyclically arranged copies of
/// `K_{k+1} - e`, linked only through the degree-`(k-1)` vertices: the last
/// vertex of each copy is joined to the second-to-last vertex of the next.
pub fn g_kl(k: usize, ell: usize) -> Result<Graph> {
    if k < 3 || ell < 2 {
        return Err(Error::InvalidParameter(format!(
            "G(k,l) needs k >= 3 and l >= 2, got ({k},{ell})"
        )));
    }
    g_kl_oriented(k, ell, &vec![false; ell])
}

/// `G(k, ell)` with a chosen attachment in each copy: copy `i` sends its
/// link to the next copy from its last vertex, or from its second-to-last
/// vertex when `flips[i]` is set, and receives the previous link on the
/// other one. Every choice yields an isomorphic graph.
pub fn g_kl_oriented(k: usize, ell: usize, flips: &[bool]) -> Result<Graph> {
    if k < 3 || ell < 2 || flips.len() != ell {
        return Err(Error::InvalidParameter(format!(
            "G(k,l) needs k >= 3, l >= 2 and one flag per copy, got ({k},{ell})"
        )));
    }
    let q = k + 1;
    let out = |i: usize| i * q + if flips[i] { k - 1 } else { k };
    let inn = |i: usize| i * q + if flips[i] { k } else { k - 1 };
    cyclic_copies(k, ell, (0..ell).map(|i| (out(i), inn((i + 1) % ell))))
}

fn caveman_links(k: usize, ell: usize) -> impl Iterator<Item = (usize, usize)> {
    let q = k + 1;
    (0..ell).map(move |i| (i * q + k, ((i + 1) % ell) * q))
}

fn check_caveman(k: usize, ell: usize) -> Result<()> {
    if k < 2 || ell < 2 {
        return Err(Error::InvalidParameter(format!(
            "caveman needs k >= 2 and l >= 2, got ({k},{ell})"
        )));
    }
    Ok(())
}

/// The connected caveman graph: the last vertex of copy `i` (degree `k-1`
/// inside its copy) is joined to the first vertex of copy `i+1` (degree `k`
/// inside its copy).
pub fn caveman(k: usize, ell: usize) -> Result<Graph> {
    check_caveman(k, ell)?;
    cyclic_copies(k, ell, caveman_links(k, ell))
}

/// The caveman graph with the link from the first copy to the second removed
/// and the missing edge of the first copy added.
pub fn caveman_rewired(k: usize, ell: usize) -> Result<Graph> {
    let g = caveman(k, ell)?;
    let q = k + 1;
    g.without_edge(k, q)?.with_edge(k - 1, k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EndMark {
    Triangle,
    Diamond,
}

/// A tree of maximum degree 3 together with replacement marks: every leaf
/// becomes an end triangle or end diamond, every vertex in `inner_marks`
/// becomes a triangle, and the remaining (degree-3) vertices stay as they
/// are.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SkeletonDoc", into = "SkeletonDoc")]
pub struct BSkeleton {
    tree: Graph,
    leaf_marks: BTreeMap<usize, EndMark>,
    inner_marks: BTreeSet<usize>,
}

/// JSON form: `{"edges": [[0,1],...], "leaf_marks": {"0": "triangle", ...},
/// "inner_marks": [...]}`. `n` defaults to one more than the largest
/// endpoint.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SkeletonDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub edges: Vec<(usize, usize)>,
    pub leaf_marks: BTreeMap<usize, EndMark>,
    #[serde(default)]
    pub inner_marks: Vec<usize>,
}

impl TryFrom<SkeletonDoc> for BSkeleton {
    type Error = Error;

    fn try_from(doc: SkeletonDoc) -> Result<Self> {
        let n = doc.n.unwrap_or_else(|| {
            doc.edges
                .iter()
                .map(|&(u, v)| u.max(v) + 1)
                .max()
                .unwrap_or(0)
        });
        let tree = Graph::from_edges(n, doc.edges)?;
        BSkeleton::new(tree, doc.leaf_marks, doc.inner_marks.into_iter().collect())
    }
}

impl From<BSkeleton> for SkeletonDoc {
    fn from(sk: BSkeleton) -> Self {
        SkeletonDoc {
            n: Some(sk.tree.order()),
            edges: sk.tree.edges(),
            leaf_marks: sk.leaf_marks,
            inner_marks: sk.inner_marks.into_iter().collect(),
        }
    }
}

impl BSkeleton {
    pub fn new(
        tree: Graph,
        leaf_marks: BTreeMap<usize, EndMark>,
        inner_marks: BTreeSet<usize>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidSkeleton(msg));
        let n = tree.order();
        if n < 2 {
            return bad(format!("tree needs at least two vertices, got {n}"));
        }
        if !tree.is_connected() || tree.size() != n - 1 {
            return bad("not a tree".into());
        }
        if tree.max_degree() > 3 {
            return bad("tree has a vertex of degree above 3".into());
        }
        for v in 0..n {
            let leaf = tree.degree(v) == 1;
            if leaf != leaf_marks.contains_key(&v) {
                return bad(format!(
                    "vertex {v}: leaves and only leaves carry an end mark"
                ));
            }
            if leaf && inner_marks.contains(&v) {
                return bad(format!("leaf {v} cannot carry an inner mark"));
            }
            if tree.degree(v) == 2 && !inner_marks.contains(&v) {
                return bad(format!("internal vertex {v} of degree 2 must be marked"));
            }
        }
        if let Some(&v) = leaf_marks.keys().chain(&inner_marks).find(|&&v| v >= n) {
            return bad(format!("mark on vertex {v} outside the tree"));
        }
        Ok(BSkeleton {
            tree,
            leaf_marks,
            inner_marks,
        })
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn leaf_marks(&self) -> &BTreeMap<usize, EndMark> {
        &self.leaf_marks
    }

    pub fn inner_marks(&self) -> &BTreeSet<usize> {
        &self.inner_marks
    }

    /// Type of the graph this skeleton produces.
    pub fn expected_type(&self) -> GraphType {
        let d = self
            .leaf_marks
            .values()
            .filter(|&&m| m == EndMark::Diamond)
            .count();
        let (i2, i3) = self.inner_marks.iter().fold((0, 0), |(a, b), &v| {
            if self.tree.degree(v) == 2 {
                (a + 1, b)
            } else {
                (a, b + 1)
            }
        });
        GraphType { d, i2, i3 }
    }

    /// Order of the graph this skeleton produces.
    pub fn expected_order(&self) -> usize {
        (0..self.tree.order())
            .map(|v| match self.leaf_marks.get(&v) {
                Some(EndMark::Triangle) => 3,
                Some(EndMark::Diamond) => 4,
                None if self.inner_marks.contains(&v) => 3,
                None => 1,
            })
            .sum()
    }

    /// Number of tree vertices left unreplaced; these are the vertices of
    /// the resulting graph that lie in no triangle.
    pub fn triangle_free_count(&self) -> usize {
        (0..self.tree.order())
            .filter(|v| !self.leaf_marks.contains_key(v) && !self.inner_marks.contains(v))
            .count()
    }

    /// A standard skeleton of type `t` (from [`FAMILY_TYPES`]) with `k`
    /// unmarked degree-3 vertices. The base tree for `t` is grown `k` times
    /// by subdividing the edge at the highest-labeled leaf and hanging a new
    /// triangle leaf from the subdivision vertex.
    pub fn standard(t: GraphType, k: usize) -> Result<Self> {
        use EndMark::{Diamond, Triangle};
        let (mut n, mut edges, mut leaves, inner): (
            usize,
            Vec<(usize, usize)>,
            Vec<(usize, EndMark)>,
            Vec<usize>,
        ) = match (t.d, t.i2, t.i3) {
            (i @ 0..=2, 0, 0) => {
                let mark = |j: usize| if j < i { Diamond } else { Triangle };
                (2, vec![(0, 1)], vec![(0, mark(0)), (1, mark(1))], vec![])
            }
            (0, 1, 0) => (
                3,
                vec![(0, 1), (1, 2)],
                vec![(0, Triangle), (2, Triangle)],
                vec![1],
            ),
            (0, 0, 1) => (
                4,
                vec![(0, 1), (0, 2), (0, 3)],
                vec![(1, Triangle), (2, Triangle), (3, Triangle)],
                vec![0],
            ),
            (0, 2, 0) => (
                4,
                vec![(0, 1), (1, 2), (2, 3)],
                vec![(0, Triangle), (3, Triangle)],
                vec![1, 2],
            ),
            (0, 1, 1) => (
                5,
                vec![(0, 1), (0, 2), (0, 3), (3, 4)],
                vec![(1, Triangle), (2, Triangle), (4, Triangle)],
                vec![0, 3],
            ),
            (0, 3, 0) => (
                5,
                vec![(0, 1), (1, 2), (2, 3), (3, 4)],
                vec![(0, Triangle), (4, Triangle)],
                vec![1, 2, 3],
            ),
            _ => return Err(Error::IllegalType(t.to_string())),
        };
        for _ in 0..k {
            let leaf = leaves
                .iter()
                .map(|&(v, _)| v)
                .max()
                .expect("trees have leaves");
            let pos = edges
                .iter()
                .position(|&(a, b)| a == leaf || b == leaf)
                .expect("leaf edge");
            let (a, b) = edges.remove(pos);
            let other = if a == leaf { b } else { a };
            let (w, y) = (n, n + 1);
            n += 2;
            edges.extend([(other, w), (w, leaf), (w, y)]);
            leaves.push((y, Triangle));
        }
        let tree = Graph::from_edges(n, edges)?;
        BSkeleton::new(
            tree,
            leaves.into_iter().collect(),
            inner.into_iter().collect(),
        )
    }
}

/// Replaces the skeleton's vertices by their gadgets and its edges by
/// bridges. Gadgets are laid out in tree-vertex order. An end triangle
/// attaches at one vertex, an end diamond at one of its degree-2 vertices, a
/// marked inner vertex of degree `j` becomes a triangle attached at `j`
/// distinct vertices, and an unmarked vertex stays a single vertex.
pub fn family_b(sk: &BSkeleton) -> Result<Graph> {
    let tree = &sk.tree;
    let mut edges = Vec::new();
    let mut ports: Vec<Vec<usize>> = Vec::with_capacity(tree.order());
    let mut next = 0;
    for v in 0..tree.order() {
        let b = next;
        match sk.leaf_marks.get(&v) {
            Some(EndMark::Triangle) => {
                edges.extend([(b, b + 1), (b, b + 2), (b + 1, b + 2)]);
                ports.push(vec![b]);
                next += 3;
            }
            Some(EndMark::Diamond) => {
                // b+2 and b+3 are the non-adjacent pair; attach at b+3
                edges.extend(complete_minus_edge_edges(4, b));
                ports.push(vec![b + 3]);
                next += 4;
            }
            None if sk.inner_marks.contains(&v) => {
                edges.extend([(b, b + 1), (b, b + 2), (b + 1, b + 2)]);
                ports.push((b..b + tree.degree(v)).collect());
                next += 3;
            }
            None => {
                ports.push(vec![b; 3]);
                next += 1;
            }
        }
    }
    let mut used = vec![0usize; tree.order()];
    for (s, t) in tree.edges() {
        let ps = ports[s][used[s]];
        let pt = ports[t][used[t]];
        used[s] += 1;
        used[t] += 1;
        edges.push((ps, pt));
    }
    Graph::from_edges(next, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clustering::graph_cc;
    use crate::rational::Rational;

    #[test]
    fn named_graphs() {
        assert_eq!(
            named_str("diamond").unwrap().degree_sequence(),
            vec![2, 2, 3, 3]
        );
        assert_eq!(
            named_str("paw").unwrap().degree_sequence(),
            vec![1, 2, 2, 3]
        );
        assert_eq!(named_str("cycle(3)").unwrap(), complete(3));
        assert_eq!(named_str("triangle").unwrap(), complete(3));
        assert_eq!(named_str("K4").unwrap(), complete(4));
        assert_eq!(named_str("path(4)").unwrap().size(), 3);
        assert_eq!(named_str("path(1)").unwrap().order(), 1);
        assert!(named_str("petersen").is_err());
        assert!(named_str("cycle(2)").is_err());
        assert!(named_str("path(0)").is_err());
        assert!(named_str("path(x)").is_err());
    }

    #[test]
    fn complete_minus_edge_examples() {
        assert_eq!(
            complete_minus_edge(4).unwrap().degree_sequence(),
            vec![2, 2, 3, 3]
        );
        assert_eq!(
            complete_minus_edge(3).unwrap(),
            path(3).unwrap().relabel(&[1, 0, 2])
        );
        assert_eq!(
            complete_minus_edge(6).unwrap().degree_sequence(),
            vec![4, 4, 5, 5, 5, 5]
        );
        let g = complete_minus_edge(5).unwrap();
        assert!(!g.has_edge(3, 4));
        assert!(complete_minus_edge(1).is_err());
        assert_eq!(complete_minus_edge(2).unwrap().size(), 0);
    }

    #[test]
    fn complete_bipartite_examples() {
        assert_eq!(
            complete_bipartite(2, 2).unwrap(),
            cycle(4).unwrap().relabel(&[0, 2, 1, 3])
        );
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.size(), 6);
        assert!((0..5).all(|u| k23.triangles_at(u).unwrap() == 0));
        assert_eq!(
            complete_bipartite(1, 3).unwrap().degree_sequence(),
            vec![1, 1, 1, 3]
        );
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn g_kl_examples() {
        let g = g_kl(3, 2).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_regular(3));
        assert!(g.is_connected());
        assert_eq!(graph_cc(&g).unwrap(), Rational::new(1, 2));
        let g = g_kl(4, 3).unwrap();
        assert_eq!(g.order(), 15);
        assert!(g.is_regular(4));
        assert_eq!(graph_cc(&g).unwrap(), Rational::new(7, 10));
        assert!(g_kl(2, 3).is_err());
        assert!(g_kl(3, 1).is_err());
    }

    #[test]
    fn caveman_examples() {
        let c = caveman(3, 2).unwrap();
        assert_eq!(c.order(), 8);
        assert_eq!(graph_cc(&c).unwrap(), Rational::new(7, 12));
        assert_eq!(c.max_degree(), 4);
        assert!(caveman(3, 3).unwrap().is_connected());
        assert_eq!(caveman(3, 3).unwrap().order(), 12);
        assert!(caveman(2, 2).is_ok());
        assert!(caveman(1, 2).is_err());

        let r = caveman_rewired(3, 2).unwrap();
        assert_eq!(graph_cc(&r).unwrap(), Rational::new(37, 48));
        assert!(r.is_connected());
        assert_eq!(
            caveman_rewired(3, 3).unwrap().size(),
            caveman(3, 3).unwrap().size()
        );
    }

    #[test]
    fn family_b_examples() {
        let two = BSkeleton::standard(GraphType::new(0, 0, 0), 0).unwrap();
        let g = family_b(&two).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(graph_cc(&g).unwrap(), Rational::new(7, 9));

        let td = BSkeleton::standard(GraphType::new(1, 0, 0), 0).unwrap();
        let g = family_b(&td).unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(graph_cc(&g).unwrap(), Rational::new(5, 7));

        let chain = BSkeleton::standard(GraphType::new(0, 1, 0), 0).unwrap();
        let g = family_b(&chain).unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(graph_cc(&g).unwrap(), Rational::new(19, 27));
    }

    #[test]
    fn family_orders() {
        assert_eq!(family_b_order(GraphType::new(0, 0, 0), 0).unwrap(), 6);
        assert_eq!(family_b_order(GraphType::new(0, 0, 1), 0).unwrap(), 12);
        assert_eq!(family_b_order(GraphType::new(0, 3, 0), 0).unwrap(), 15);
        assert_eq!(family_b_order(GraphType::new(1, 0, 0), 2).unwrap(), 15);
        assert!(family_b_order(GraphType::new(1, 1, 0), 0).is_err());
        for t in FAMILY_TYPES {
            for k in 0..3 {
                let sk = BSkeleton::standard(t, k).unwrap();
                assert_eq!(sk.expected_type(), t);
                assert_eq!(sk.triangle_free_count(), k);
                assert_eq!(sk.expected_order(), family_b_order(t, k).unwrap());
                assert_eq!(family_b(&sk).unwrap().order(), sk.expected_order());
            }
        }
    }

    #[test]
    fn skeleton_validation() {
        let p3 = path(3).unwrap();
        let leaves = BTreeMap::from([(0, EndMark::Triangle), (2, EndMark::Triangle)]);
        assert!(BSkeleton::new(p3.clone(), leaves.clone(), BTreeSet::new()).is_err());
        assert!(BSkeleton::new(p3.clone(), leaves.clone(), BTreeSet::from([1])).is_ok());
        assert!(BSkeleton::new(
            p3.clone(),
            BTreeMap::from([(0, EndMark::Triangle)]),
            BTreeSet::from([1])
        )
        .is_err());
        assert!(BSkeleton::new(cycle(3).unwrap(), BTreeMap::new(), BTreeSet::new()).is_err());
        let star = complete_bipartite(1, 4).unwrap();
        let marks = (1..5).map(|v| (v, EndMark::Triangle)).collect();
        assert!(BSkeleton::new(star, marks, BTreeSet::new()).is_err());
        assert!(BSkeleton::new(Graph::empty(1), BTreeMap::new(), BTreeSet::new()).is_err());
    }

    #[test]
    fn skeleton_json() {
        let doc = r#"{"edges": [[0,1],[1,2]], "leaf_marks": {"0": "triangle", "2": "diamond"}, "inner_marks": [1]}"#;
        let sk: BSkeleton = serde_json::from_str(doc).unwrap();
        assert_eq!(sk.expected_type(), GraphType::new(1, 1, 0));
        assert_eq!(family_b(&sk).unwrap().order(), 10);
        let bad = r#"{"edges": [[0,1],[1,2]], "leaf_marks": {"0": "triangle", "2": "diamond"}}"#;
        assert!(serde_json::from_str::<BSkeleton>(bad).is_err());
        let round: BSkeleton = serde_json::from_str(&serde_json::to_string(&sk).unwrap()).unwrap();
        assert_eq!(round, sk);
    }
}
