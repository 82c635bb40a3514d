//! Local and average clustering coefficients, the single-edge delta, and the
//! closed-form extremal values.

use crate::error::{Error, Result};
use crate::generators::{family_b_base_order, GraphType};
use crate::graph::Graph;
use crate::rational::Rational;

fn pairs(d: usize) -> i64 {
    (d * d.saturating_sub(1) / 2) as i64
}

/// `C_u(G)`: edges among the neighbors of `u` over `C(d(u), 2)`, or zero when
/// `d(u) <= 1`.
pub fn local_cc(g: &Graph, u: usize) -> Result<Rational> {
    g.check_vertex(u)?;
    Ok(local_cc_unchecked(g, u))
}

fn local_cc_unchecked(g: &Graph, u: usize) -> Rational {
    let d = g.degree(u);
    if d < 2 {
        return Rational::zero();
    }
    Rational::new(g.triangles_at_unchecked(u) as i64, pairs(d))
}

/// Per-vertex coefficients, indexed by vertex.
pub fn local_ccs(g: &Graph) -> Vec<Rational> {
    (0..g.order()).map(|u| local_cc_unchecked(g, u)).collect()
}

/// `C(G)`: the mean of the local coefficients.
pub fn graph_cc(g: &Graph) -> Result<Rational> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let sum: Rational = local_ccs(g).iter().sum();
    Ok(sum / Rational::integer(n as i64))
}

/// `σ(U)`: the sum of the local coefficients over `set`. Duplicates count
/// once.
pub fn cc_sum(g: &Graph, set: &[usize]) -> Result<Rational> {
    let mut seen = vec![false; g.order()];
    let mut total = Rational::zero();
    for &u in set {
        g.check_vertex(u)?;
        if !std::mem::replace(&mut seen[u], true) {
            total += &local_cc_unchecked(g, u);
        }
    }
    Ok(total)
}

/// `C(G + uv) - C(G)` for a non-adjacent pair.
pub fn edge_add_delta(g: &Graph, u: usize, v: usize) -> Result<Rational> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SelfLoop(u));
    }
    if g.has_edge(u, v) {
        return Err(Error::AlreadyAdjacent(u, v));
    }
    if g.order() < 3 {
        return Err(Error::InvalidParameter(format!(
            "edge delta needs order at least 3, got {}",
            g.order()
        )));
    }
    let plus = g.with_edge(u, v)?;
    Ok(graph_cc(&plus)? - graph_cc(g)?)
}

/// Upper bound on `C(G)` for connected `k`-regular graphs: `1 - 6/(k(k+1))`.
pub fn theorem1_bound(k: usize) -> Result<Rational> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "regular bound needs k >= 3, got {k}"
        )));
    }
    let k = k as i64;
    Ok(Rational::one() - Rational::new(6, k * (k + 1)))
}

/// Upper bound on `C(G)` for connected subcubic graphs of order `n >= 6`:
/// `7/12 + c/(12n)` with `c` = 12, 13, 14, 11 for `n` ≡ 0, 1, 2, 3 (mod 4).
pub fn theorem2_bound(n: usize) -> Result<Rational> {
    if n < 6 {
        return Err(Error::InvalidParameter(format!(
            "subcubic bound needs n >= 6, got {n}"
        )));
    }
    let c = [12, 13, 14, 11][n % 4];
    Ok(seven_twelfths_plus(c, n))
}

/// Largest single-edge increase of `C` on `n >= 3` vertices:
/// `1 - 2/n + 4/(n(n-1))`.
pub fn theorem4_bound(n: usize) -> Result<Rational> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "edge-delta bound needs n >= 3, got {n}"
        )));
    }
    let n = n as i64;
    Ok(Rational::one() - Rational::new(2, n) + Rational::new(4, n * (n - 1)))
}

fn seven_twelfths_plus(c: i64, n: usize) -> Rational {
    Rational::new(7, 12) + Rational::new(c, 12 * n as i64)
}

/// Closed-form `C(G)` of a type-`t` graph of order `n` built from a tree by
/// replacing vertices with triangles and diamonds.
pub fn family_b_cc(t: GraphType, n: usize) -> Result<Rational> {
    let base = family_b_base_order(t)?;
    if n < base || (n - base) % 4 != 0 {
        return Err(Error::InvalidParameter(format!(
            "order {n} is inconsistent with type {t}"
        )));
    }
    let c = match (t.d, t.i2, t.i3) {
        (i, 0, 0) => 14 - 3 * i as i64,
        (0, 1, 0) => 13,
        (0, 0, 1) | (0, 2, 0) => 12,
        (0, 1, 1) | (0, 3, 0) => 11,
        _ => unreachable!("family_b_base_order rejects other types"),
    };
    Ok(seven_twelfths_plus(c, n))
}
