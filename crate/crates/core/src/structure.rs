//! Block decomposition and the structural vocabulary of extremal subcubic
//! graphs: block kinds, the type `(d, i2, i3)`, the set of triangle-free
//! low-degree vertices, and membership in the extremal families.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::GraphType;
use crate::graph::Graph;

/// Blocks of a connected graph with their cut vertices. Blocks and their
/// vertex lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

impl BlockDecomposition {
    /// Number of cut vertices lying in `block`.
    pub fn cut_count(&self, block: &[usize]) -> usize {
        block
            .iter()
            .filter(|v| self.cut_vertices.binary_search(v).is_ok())
            .count()
    }

    /// An endblock contains at most one cut vertex.
    pub fn is_endblock(&self, block: &[usize]) -> bool {
        self.cut_count(block) <= 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockKind {
    K2,
    K3,
    Diamond,
    Other,
}

impl BlockKind {
    pub fn is_basic(self) -> bool {
        self != BlockKind::Other
    }
}

/// Biconnected components by Tarjan's edge-stack algorithm. A single vertex
/// forms one trivial block.
pub fn blocks(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    if n == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![vec![0]],
            cut_vertices: vec![],
        });
    }
    let mut t = Tarjan {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    if n > 0 {
        t.visit(0, usize::MAX);
    }
    let mut blocks = t.blocks;
    blocks.sort();
    let mut count = vec![0usize; n];
    for b in &blocks {
        for &v in b {
            count[v] += 1;
        }
    }
    let cut_vertices = (0..n).filter(|&v| count[v] > 1).collect();
    Ok(BlockDecomposition {
        blocks,
        cut_vertices,
    })
}

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<usize>>,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        for &v in self.g.neighbors(u) {
            if self.disc[v] == usize::MAX {
                self.stack.push((u, v));
                self.visit(v, u);
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    let mut verts = Vec::new();
                    while let Some((a, b)) = self.stack.pop() {
                        verts.push(a);
                        verts.push(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    verts.sort_unstable();
                    verts.dedup();
                    self.blocks.push(verts);
                }
            } else if v != parent && self.disc[v] < self.disc[u] {
                self.stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

fn kind_of(g: &Graph, block: &[usize]) -> BlockKind {
    let m = g.edges_within(block).expect("block vertices are in range");
    match (block.len(), m) {
        (2, 1) => BlockKind::K2,
        (3, 3) => BlockKind::K3,
        (4, 5) => BlockKind::Diamond,
        _ => BlockKind::Other,
    }
}

/// Kind of `block`, which must be one of the blocks of `g`.
pub fn classify_block(g: &Graph, block: &[usize]) -> Result<BlockKind> {
    let mut b = block.to_vec();
    b.sort_unstable();
    b.dedup();
    for &v in &b {
        g.check_vertex(v)?;
    }
    if !blocks(g)?.blocks.contains(&b) {
        return Err(Error::NotABlock(b));
    }
    Ok(kind_of(g, &b))
}

/// The type of a connected graph, and whether all of its blocks are `K2`,
/// `K3`, or diamonds (the type is only meaningful when they are).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeSummary {
    #[serde(rename = "type")]
    pub ty: GraphType,
    pub all_blocks_basic: bool,
}

/// Counts diamond blocks, and triangle blocks with exactly two or exactly
/// three vertices of degree 3 in `g`. End triangles count in neither.
pub fn graph_type(g: &Graph) -> Result<TypeSummary> {
    let dec = blocks(g)?;
    Ok(type_from_blocks(g, &dec))
}

fn type_from_blocks(g: &Graph, dec: &BlockDecomposition) -> TypeSummary {
    let mut ty = GraphType::new(0, 0, 0);
    let mut basic = true;
    for b in &dec.blocks {
        match kind_of(g, b) {
            BlockKind::Diamond => ty.d += 1,
            BlockKind::K3 => match b.iter().filter(|&&v| g.degree(v) == 3).count() {
                2 => ty.i2 += 1,
                3 => ty.i3 += 1,
                _ => {}
            },
            BlockKind::K2 => {}
            BlockKind::Other => basic = false,
        }
    }
    TypeSummary {
        ty,
        all_blocks_basic: basic,
    }
}

/// Vertices of degree at most 2 that lie in no triangle.
pub fn s_set(g: &Graph) -> Vec<usize> {
    (0..g.order())
        .filter(|&u| g.degree(u) <= 2 && g.triangles_at_unchecked(u) == 0)
        .collect()
}

/// For a `k`-regular graph, groups the vertices by triangle deficiency
/// `C(k,2) - triangles_at(u)`. Only non-empty classes are present.
pub fn v_partition(g: &Graph, k: usize) -> Result<BTreeMap<usize, Vec<usize>>> {
    if !g.is_regular(k) {
        return Err(Error::NotRegular(k));
    }
    let full = k * k.saturating_sub(1) / 2;
    let mut parts: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for u in 0..g.order() {
        parts
            .entry(full - g.triangles_at_unchecked(u))
            .or_default()
            .push(u);
    }
    Ok(parts)
}

fn check_family_input(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.order() < 6 {
        return Err(Error::InvalidParameter(format!(
            "family membership needs order at least 6, got {}",
            g.order()
        )));
    }
    Ok(())
}

/// Connected, subcubic, every block `K2`/`K3`/diamond, and every diamond
/// block an endblock.
pub fn is_in_b0(g: &Graph) -> Result<bool> {
    check_family_input(g)?;
    if g.max_degree() > 3 {
        return Ok(false);
    }
    let dec = blocks(g)?;
    Ok(dec.blocks.iter().all(|b| match kind_of(g, b) {
        BlockKind::Diamond => dec.is_endblock(b),
        kind => kind.is_basic(),
    }))
}

/// Membership in the extremal family as literally defined: in `B0` with an
/// extremal type. This admits graphs with triangle-free vertices of degree
/// at most 2, which do not attain the bound; see [`is_in_b`].
pub fn is_in_b_literal(g: &Graph) -> Result<bool> {
    Ok(is_in_b0(g)? && graph_type(g)?.ty.is_extremal())
}

/// Membership in the extremal family with the additional requirement that
/// [`s_set`] is empty.
pub fn is_in_b(g: &Graph) -> Result<bool> {
    Ok(is_in_b_literal(g)? && s_set(g).is_empty())
}

/// The structural properties an extremal connected subcubic graph has.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimProfile {
    /// Every diamond subgraph is induced and is an endblock.
    pub diamonds_are_endblocks: bool,
    /// Every edge on a cycle lies in a triangle.
    pub cycle_edges_in_triangles: bool,
    /// Every block is `K2`, `K3`, or a diamond.
    pub basic_blocks: bool,
    /// There are no diamond blocks or no inner triangles.
    pub diamonds_or_inner_empty: bool,
    /// At most two diamond blocks.
    pub at_most_two_diamonds: bool,
    /// No triangle-free vertex has degree at most 2.
    pub s_empty: bool,
    /// Number of inner triangles, `i2 + i3`.
    pub inner_triangles: usize,
    pub ty: GraphType,
}

impl ClaimProfile {
    /// All claims that hold for every maximizer.
    pub fn all_maximizer_claims(&self) -> bool {
        self.diamonds_are_endblocks
            && self.cycle_edges_in_triangles
            && self.basic_blocks
            && self.diamonds_or_inner_empty
            && self.at_most_two_diamonds
            && self.s_empty
    }
}

pub fn claim_profile(g: &Graph) -> Result<ClaimProfile> {
    let dec = blocks(g)?;
    let summary = type_from_blocks(g, &dec);
    let ty = summary.ty;

    // every diamond subgraph has a middle edge ab with two common neighbors
    let mut diamonds_ok = true;
    for (a, b) in g.edges() {
        let common = g.common_neighbors(a, b);
        for (i, &c) in common.iter().enumerate() {
            for &d in &common[i + 1..] {
                let mut set = vec![a, b, c, d];
                set.sort_unstable();
                let induced = !g.has_edge(c, d);
                let endblock = dec.blocks.contains(&set) && dec.is_endblock(&set);
                diamonds_ok &= induced && endblock;
            }
        }
    }

    let bridge = |u: usize, v: usize| {
        dec.blocks
            .iter()
            .any(|b| b.len() == 2 && b == &[u.min(v), u.max(v)])
    };
    let cycle_edges_ok = g
        .edges()
        .into_iter()
        .all(|(u, v)| bridge(u, v) || !g.common_neighbors(u, v).is_empty());

    Ok(ClaimProfile {
        diamonds_are_endblocks: diamonds_ok,
        cycle_edges_in_triangles: cycle_edges_ok,
        basic_blocks: summary.all_blocks_basic,
        diamonds_or_inner_empty: ty.d == 0 || ty.i2 + ty.i3 == 0,
        at_most_two_diamonds: ty.d <= 2,
        s_empty: s_set(g).is_empty(),
        inner_triangles: ty.i2 + ty.i3,
        ty,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_minus_edge, cycle, g_kl, named_str, path};

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn bridged_triangles() -> Graph {
        g(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
    }

    #[test]
    fn block_examples() {
        let d = blocks(&bridged_triangles()).unwrap();
        assert_eq!(d.blocks, vec![vec![0, 1, 2], vec![2, 3], vec![3, 4, 5]]);
        assert_eq!(d.cut_vertices, vec![2, 3]);

        let d = blocks(&named_str("diamond").unwrap()).unwrap();
        assert_eq!(d.blocks, vec![vec![0, 1, 2, 3]]);
        assert!(d.cut_vertices.is_empty());

        let d = blocks(&named_str("paw").unwrap()).unwrap();
        assert_eq!(d.blocks, vec![vec![0, 1, 2], vec![0, 3]]);
        assert_eq!(d.cut_vertices, vec![0]);

        assert_eq!(blocks(&Graph::empty(2)), Err(Error::Disconnected));
        assert_eq!(blocks(&Graph::empty(1)).unwrap().blocks, vec![vec![0]]);
    }

    #[test]
    fn classify_examples() {
        let bt = bridged_triangles();
        assert_eq!(classify_block(&bt, &[3, 2]).unwrap(), BlockKind::K2);
        assert_eq!(classify_block(&bt, &[0, 1, 2]).unwrap(), BlockKind::K3);
        let dia = complete_minus_edge(4).unwrap();
        assert_eq!(
            classify_block(&dia, &[0, 1, 2, 3]).unwrap(),
            BlockKind::Diamond
        );
        let c5 = cycle(5).unwrap();
        assert_eq!(
            classify_block(&c5, &[0, 1, 2, 3, 4]).unwrap(),
            BlockKind::Other
        );
        assert!(matches!(
            classify_block(&bt, &[0, 1]),
            Err(Error::NotABlock(_))
        ));
        assert!(classify_block(&bt, &[0, 9]).is_err());
    }

    #[test]
    fn s_set_examples() {
        assert_eq!(s_set(&path(4).unwrap()), vec![0, 1, 2, 3]);
        assert!(s_set(&bridged_triangles()).is_empty());
        assert_eq!(s_set(&named_str("paw").unwrap()), vec![3]);
    }

    #[test]
    fn v_partition_examples() {
        let parts = v_partition(&g_kl(3, 2).unwrap(), 3).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&1].len(), 4);
        assert_eq!(parts[&2].len(), 4);
        let parts = v_partition(&complete(4), 3).unwrap();
        assert_eq!(parts[&0], vec![0, 1, 2, 3]);
        let parts = v_partition(&cycle(5).unwrap(), 2).unwrap();
        assert_eq!(parts[&1].len(), 5);
        assert_eq!(v_partition(&path(3).unwrap(), 2), Err(Error::NotRegular(2)));
    }

    #[test]
    fn family_membership() {
        let bt = bridged_triangles();
        assert!(is_in_b0(&bt).unwrap());
        assert!(is_in_b(&bt).unwrap());

        let dia = complete_minus_edge(4).unwrap();
        let two_diamonds = dia.disjoint_union(&dia).with_edge(3, 7).unwrap();
        assert!(is_in_b0(&two_diamonds).unwrap());
        assert_eq!(
            graph_type(&two_diamonds).unwrap().ty,
            GraphType::new(2, 0, 0)
        );
        assert!(!is_in_b(&two_diamonds).unwrap());

        // two triangles joined through a degree-2 vertex
        let spaced = g(
            7,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 6),
                (6, 3),
                (3, 4),
                (4, 5),
                (3, 5),
            ],
        );
        assert!(is_in_b0(&spaced).unwrap());
        assert!(is_in_b_literal(&spaced).unwrap());
        assert!(!is_in_b(&spaced).unwrap());

        assert!(is_in_b0(&named_str("diamond").unwrap()).is_err());
        assert_eq!(is_in_b0(&Graph::empty(6)), Err(Error::Disconnected));
        // a diamond that is not an endblock
        let inner_diamond = g(
            10,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (2, 3),
                (3, 4),
                (3, 5),
                (4, 5),
                (4, 6),
                (5, 6),
                (6, 7),
                (7, 8),
                (7, 9),
                (8, 9),
            ],
        );
        assert_eq!(graph_type(&inner_diamond).unwrap().ty.d, 1);
        assert!(!is_in_b0(&inner_diamond).unwrap());
        assert!(!is_in_b0(&g_kl(3, 2).unwrap()).unwrap());
    }

    #[test]
    fn type_examples() {
        let td = g(
            7,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 6),
                (3, 4),
                (3, 5),
                (3, 6),
                (4, 5),
                (4, 6),
            ],
        );
        assert_eq!(graph_type(&td).unwrap().ty, GraphType::new(1, 0, 0));
        let chain = g(
            9,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (3, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (6, 8),
            ],
        );
        assert_eq!(graph_type(&chain).unwrap().ty, GraphType::new(0, 1, 0));
        let c5 = graph_type(&cycle(5).unwrap()).unwrap();
        assert!(!c5.all_blocks_basic);
    }

    #[test]
    fn claims_on_non_extremal_graphs() {
        let p = claim_profile(&g_kl(3, 2).unwrap()).unwrap();
        assert!(!p.basic_blocks);
        assert!(!p.diamonds_are_endblocks);
        let c4 = claim_profile(&cycle(4).unwrap()).unwrap();
        assert!(!c4.cycle_edges_in_triangles);
        assert!(!c4.s_empty);
        let ok = claim_profile(&bridged_triangles()).unwrap();
        assert!(ok.all_maximizer_claims());
        assert_eq!(ok.inner_triangles, 0);
    }
}
