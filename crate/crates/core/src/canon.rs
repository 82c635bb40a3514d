//! Canonical labeling by individualization and refinement.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualize each vertex of the first non-singleton cell in
//! turn, and recurse. Every leaf is a discrete partition, i.e. a relabeling,
//! and the canonical form is the smallest graph6 string among the leaves.
//! Automorphisms found at equal leaves prune the tree in two ways: siblings
//! in the same orbit of the pointwise stabilizer of the current prefix are
//! skipped, and the search backtracks to the last node shared with the best
//! leaf.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{encode_bits, parse_graph6, MAX_GRAPH6_ORDER};

pub const MAX_CANON_ORDER: usize = MAX_GRAPH6_ORDER;

/// The graph6 string of the canonically relabeled graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        parse_graph6(&self.0).expect("canonical forms are valid graph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let (lab, _) = search(g)?;
    let adj = g.adjacency_masks();
    Ok(CanonicalForm(key_to_graph6(
        g.order(),
        &leaf_key(&adj, &lab),
    )))
}

/// Returns `perm` with `perm[v]` the canonical label of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    let (lab, _) = search(g)?;
    let mut perm = vec![0; lab.len()];
    for (pos, &v) in lab.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

/// Generators of the automorphism group discovered during the search. They
/// are genuine automorphisms, but need not generate the whole group.
pub fn automorphisms_found(g: &Graph) -> Result<Vec<Vec<usize>>> {
    Ok(search(g)?.1)
}

fn search(g: &Graph) -> Result<(Vec<usize>, Vec<Vec<usize>>)> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::Capability {
            what: "canonical labeling",
            n,
            limit: MAX_CANON_ORDER,
        });
    }
    let adj = g.adjacency_masks();
    let mut s = Search {
        adj: &adj,
        n,
        best: None,
        generators: Vec::new(),
    };
    let mut path = Vec::new();
    s.descend(vec![(0..n).collect()], &mut path);
    let lab = s.best.map(|b| b.lab).unwrap_or_default();
    Ok((lab, s.generators))
}

struct Leaf {
    key: Vec<u64>,
    lab: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(depth)` to unwind to the node at `depth`.
    fn descend(&mut self, mut cells: Vec<Vec<usize>>, path: &mut Vec<usize>) -> Option<usize> {
        refine(self.adj, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, path);
        };
        let depth = path.len();
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for w in candidates {
            if !explored.is_empty() {
                let orbits = self.stabilizer_orbits(path);
                let rw = orbits.find(w);
                if explored.iter().any(|&x| orbits.find(x) == rw) {
                    continue;
                }
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![w]);
            child.push(cells[target].iter().copied().filter(|&x| x != w).collect());
            child.extend_from_slice(&cells[target + 1..]);
            path.push(w);
            let jump = self.descend(child, path);
            path.pop();
            explored.push(w);
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[Vec<usize>], path: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let key = leaf_key(self.adj, &lab);
        match &self.best {
            None => {
                self.best = Some(Leaf {
                    key,
                    lab,
                    path: path.to_vec(),
                });
                None
            }
            Some(best) if key < best.key => {
                self.best = Some(Leaf {
                    key,
                    lab,
                    path: path.to_vec(),
                });
                None
            }
            Some(best) if key == best.key => {
                let mut gamma = vec![0; self.n];
                for (&a, &b) in best.lab.iter().zip(&lab) {
                    gamma[a] = b;
                }
                let common = best
                    .path
                    .iter()
                    .zip(path)
                    .take_while(|(a, b)| a == b)
                    .count();
                if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                    self.generators.push(gamma);
                }
                Some(common)
            }
            Some(_) => None,
        }
    }

    fn stabilizer_orbits(&self, fixed: &[usize]) -> UnionFind {
        let mut uf = UnionFind::new(self.n);
        for gamma in &self.generators {
            if fixed.iter().all(|&v| gamma[v] == v) {
                for (v, &w) in gamma.iter().enumerate() {
                    uf.union(v, w);
                }
            }
        }
        uf
    }
}

/// Refines an ordered partition to the coarsest equitable refinement. Each
/// cell is split by the vector of neighbor counts into every current cell;
/// the pieces keep the position of their parent and are ordered by that
/// vector, so the result does not depend on vertex names.
fn refine(adj: &[u64], cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks
                        .iter()
                        .map(|m| (adj[v] & m).count_ones() as u8)
                        .collect();
                    (sig, v)
                })
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return;
        }
        *cells = next;
    }
}

/// Upper-triangle bits of the relabeled graph in graph6 order, packed most
/// significant bit first so that `Vec` ordering is lexicographic bit order.
fn leaf_key(adj: &[u64], lab: &[usize]) -> Vec<u64> {
    let n = lab.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut key = vec![0u64; total.div_ceil(64)];
    let mut idx = 0;
    for j in 1..n {
        let row = adj[lab[j]];
        for &li in &lab[..j] {
            if row >> li & 1 == 1 {
                key[idx / 64] |= 1u64 << (63 - idx % 64);
            }
            idx += 1;
        }
    }
    key
}

fn key_to_graph6(n: usize, key: &[u64]) -> String {
    let total = n * n.saturating_sub(1) / 2;
    encode_bits(
        n,
        (0..total).map(|idx| key[idx / 64] >> (63 - idx % 64) & 1 == 1),
    )
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

    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::to_graph6;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn relabeled_paths_agree() {
        let a = g(3, &[(0, 1), (1, 2)]);
        let b = g(3, &[(1, 0), (0, 2)]);
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        let k3 = g(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_ne!(canonical_form(&k3).unwrap(), canonical_form(&a).unwrap());
    }

    #[test]
    fn form_is_graph6_of_an_isomorphic_relabeling() {
        let paw = g(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        let perm = canonical_labeling(&paw).unwrap();
        let relabeled = paw.relabel(&perm);
        assert_eq!(
            to_graph6(&relabeled).unwrap(),
            canonical_form(&paw).unwrap().as_str()
        );
        assert_eq!(canonical_form(&paw).unwrap().to_graph(), relabeled);
    }

    #[test]
    fn trivial_orders() {
        assert_eq!(canonical_form(&Graph::empty(0)).unwrap().as_str(), "?");
        assert_eq!(canonical_form(&Graph::empty(1)).unwrap().as_str(), "@");
    }

    #[test]
    fn symmetric_graphs_are_fast_and_stable() {
        // Edgeless and complete graphs of moderate order would have n! leaves
        // without automorphism pruning.
        let e = Graph::empty(40);
        assert_eq!(canonical_form(&e).unwrap().to_graph(), e);
        let k = g(
            20,
            &(0..20)
                .flat_map(|u| (u + 1..20).map(move |v| (u, v)))
                .collect::<Vec<_>>(),
        );
        assert_eq!(canonical_form(&k).unwrap().to_graph(), k);
        // a perfect matching, labeled in two different ways
        let m1 = g(12, &[(0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11)]);
        let m2 = g(12, &[(0, 11), (1, 10), (2, 9), (3, 8), (4, 7), (5, 6)]);
        assert_eq!(canonical_form(&m1).unwrap(), canonical_form(&m2).unwrap());
    }

    #[test]
    fn discovered_generators_are_automorphisms() {
        let petersen = g(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        );
        let gens = automorphisms_found(&petersen).unwrap();
        assert!(!gens.is_empty());
        for gamma in gens {
            assert_eq!(petersen.relabel(&gamma), petersen);
        }
    }

    #[test]
    fn order_limit() {
        assert!(matches!(
            canonical_form(&Graph::empty(63)),
            Err(Error::Capability { .. })
        ));
    }
}
