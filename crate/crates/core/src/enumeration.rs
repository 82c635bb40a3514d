//! Isomorph-free exhaustive generation of small graphs under degree
//! constraints.
//!
//! Graphs are grown one vertex at a time. Level `m` holds one canonical
//! representative per isomorphism class of admissible graphs on `m`
//! vertices; level `m + 1` joins a new vertex to every admissible subset of
//! each representative and deduplicates by canonical form. This is
//! exhaustive because deleting a suitable vertex from any admissible graph
//! leaves an admissible graph: any vertex for a degree bound, a non-cut
//! vertex when connectivity is required. For `regular(k)` the intermediate
//! levels use the degree bound `k`, pruned by the total degree deficit the
//! remaining vertices can still fill.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DegreeMode {
    Any,
    MaxDegree(usize),
    Regular(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeConstraint {
    pub mode: DegreeMode,
    pub connected: bool,
}

impl DegreeConstraint {
    pub fn any() -> Self {
        DegreeConstraint {
            mode: DegreeMode::Any,
            connected: false,
        }
    }

    pub fn max_degree(d: usize) -> Self {
        DegreeConstraint {
            mode: DegreeMode::MaxDegree(d),
            connected: false,
        }
    }

    pub fn regular(k: usize) -> Self {
        DegreeConstraint {
            mode: DegreeMode::Regular(k),
            connected: false,
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn admits(&self, g: &Graph) -> bool {
        let degrees_ok = match self.mode {
            DegreeMode::Any => true,
            DegreeMode::MaxDegree(d) => g.max_degree() <= d,
            DegreeMode::Regular(k) => g.is_regular(k),
        };
        degrees_ok && (!self.connected || g.is_connected())
    }

    /// Largest order this constraint can be enumerated at.
    pub fn capability_limit(&self) -> usize {
        match self.mode {
            DegreeMode::Any => 8,
            DegreeMode::MaxDegree(d) if d <= 3 => 12,
            DegreeMode::MaxDegree(_) => 8,
            DegreeMode::Regular(k) if k <= 3 => 12,
            DegreeMode::Regular(_) => 9,
        }
    }

    fn degree_cap(&self) -> usize {
        match self.mode {
            DegreeMode::Any => usize::MAX,
            DegreeMode::MaxDegree(d) | DegreeMode::Regular(d) => d,
        }
    }
}

/// Canonical graph6 forms of all admissible graphs on `n` vertices, one per
/// isomorphism class, in ascending order. Runs on the current rayon pool.
pub fn enumerate_forms(n: usize, c: DegreeConstraint) -> Result<Vec<CanonicalForm>> {
    if n == 0 {
        return Err(Error::InvalidParameter("enumeration needs n >= 1".into()));
    }
    let limit = c.capability_limit();
    if n > limit {
        return Err(Error::Capability {
            what: "enumeration",
            n,
            limit,
        });
    }
    if let DegreeMode::Regular(k) = c.mode {
        if (n * k) % 2 == 1 || (n > 1 && k >= n) {
            return Ok(Vec::new());
        }
    }

    let mut level = vec![Graph::empty(1)];
    for m in 2..=n {
        let forms: BTreeSet<CanonicalForm> = level
            .par_iter()
            .flat_map_iter(|p| extensions(p, n, c))
            .collect();
        if m == n {
            return Ok(forms.into_iter().collect());
        }
        level = forms.iter().map(CanonicalForm::to_graph).collect();
    }
    // n == 1
    Ok(level
        .iter()
        .filter(|g| c.admits(g))
        .map(|g| canonical_form(g).expect("order 1"))
        .collect())
}

/// Canonical forms of all admissible one-vertex extensions of `parent`
/// toward target order `n`.
fn extensions(parent: &Graph, n: usize, c: DegreeConstraint) -> Vec<CanonicalForm> {
    let m = parent.order() + 1;
    let cap = c.degree_cap();
    let eligible: Vec<usize> = (0..parent.order())
        .filter(|&u| parent.degree(u) < cap)
        .collect();
    let base_edges = parent.edges();

    let regular = match c.mode {
        DegreeMode::Regular(k) => Some(k),
        _ => None,
    };
    let deficit: usize = match regular {
        Some(k) => (0..parent.order()).map(|u| k - parent.degree(u)).sum(),
        None => 0,
    };

    let mut out = Vec::new();
    for mask in 0u64..(1u64 << eligible.len()) {
        let size = mask.count_ones() as usize;
        if size > cap || (c.connected && size == 0) {
            continue;
        }
        if let Some(k) = regular {
            // deficit after adding the new vertex
            let child_deficit = deficit + k - 2 * size;
            if child_deficit > k * (n - m) {
                continue;
            }
        }
        let nbrs = eligible
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &u)| u);
        let edges = base_edges.iter().copied().chain(nbrs.map(|u| (u, m - 1)));
        let child = Graph::from_edges(m, edges).expect("valid extension");
        if m == n && !c.admits(&child) {
            continue;
        }
        out.push(canonical_form(&child).expect("order within canonical limit"));
    }
    out
}

/// One canonical representative per isomorphism class, ordered by canonical
/// graph6.
pub fn enumerate(n: usize, c: DegreeConstraint) -> Result<Vec<Graph>> {
    Ok(enumerate_forms(n, c)?
        .iter()
        .map(CanonicalForm::to_graph)
        .collect())
}

/// [`enumerate_forms`] on a dedicated pool of `workers` threads.
pub fn enumerate_forms_with_workers(
    n: usize,
    c: DegreeConstraint,
    workers: usize,
) -> Result<Vec<CanonicalForm>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    pool.install(|| enumerate_forms(n, c))
}

pub fn count(n: usize, c: DegreeConstraint) -> Result<usize> {
    Ok(enumerate_forms(n, c)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::complete;

    #[test]
    fn cubic_small_orders() {
        let c = DegreeConstraint::regular(3).connected();
        let four = enumerate(4, c).unwrap();
        assert_eq!(four, vec![complete(4)]);
        assert_eq!(count(6, c).unwrap(), 2);
        assert_eq!(count(5, c).unwrap(), 0);
        assert_eq!(count(8, c).unwrap(), 5);
    }

    #[test]
    fn graphs_on_few_vertices() {
        // graphs on 1..=5 vertices (all / connected)
        let all = [1, 2, 4, 11, 34];
        let connected = [1, 1, 2, 6, 21];
        for n in 1..=5 {
            assert_eq!(count(n, DegreeConstraint::any()).unwrap(), all[n - 1]);
            assert_eq!(
                count(n, DegreeConstraint::any().connected()).unwrap(),
                connected[n - 1]
            );
        }
    }

    #[test]
    fn regular_zero_and_one() {
        assert_eq!(count(1, DegreeConstraint::regular(0)).unwrap(), 1);
        assert_eq!(count(4, DegreeConstraint::regular(0)).unwrap(), 1);
        assert_eq!(
            count(4, DegreeConstraint::regular(0).connected()).unwrap(),
            0
        );
        assert_eq!(count(6, DegreeConstraint::regular(1)).unwrap(), 1);
        assert_eq!(
            count(2, DegreeConstraint::regular(1).connected()).unwrap(),
            1
        );
        assert_eq!(count(1, DegreeConstraint::regular(2)).unwrap(), 0);
    }

    #[test]
    fn two_regular_graphs_are_cycle_unions() {
        // partitions of 9 into parts >= 3: 9, 6+3, 5+4, 3+3+3
        assert_eq!(count(9, DegreeConstraint::regular(2)).unwrap(), 4);
        assert_eq!(
            count(9, DegreeConstraint::regular(2).connected()).unwrap(),
            1
        );
    }

    #[test]
    fn capability_errors() {
        assert!(matches!(
            count(9, DegreeConstraint::any()),
            Err(Error::Capability { .. })
        ));
        assert!(matches!(
            count(13, DegreeConstraint::max_degree(3)),
            Err(Error::Capability { .. })
        ));
        assert!(count(0, DegreeConstraint::any()).is_err());
    }
}
