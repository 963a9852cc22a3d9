//! Named fixture graphs and finite patches of generalized diamond graphs.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("patch with dimension {k} and radius {r} could hold up to {estimate} vertices, over the cap of {cap}")]
    TooLarge {
        k: usize,
        r: usize,
        estimate: u128,
        cap: usize,
    },
}

/// Default vertex cap for [`generate_diamond_patch`].
pub const DEFAULT_PATCH_CAP: usize = 1_000_000;

/// Path on `n` vertices `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

/// Cycle on `n` vertices; for `n < 3` this is the path on `n` vertices.
pub fn cycle(n: usize) -> Graph {
    if n < 3 {
        return path(n);
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::new(a + b, edges).expect("valid complete bipartite graph")
}

/// The `d`-dimensional hypercube on bit strings `0..2^d`.
pub fn hypercube(d: u32) -> Graph {
    let n = 1usize << d;
    let edges = (0..n)
        .flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))))
        .filter(|&(u, v)| u < v);
    Graph::new(n, edges).expect("valid hypercube")
}

/// The Desargues graph, built as the generalized Petersen graph GP(10, 3):
/// outer cycle on 0..10, spokes `i - (10 + i)`, and inner vertices
/// `10 + i` joined to `10 + (i + 3) mod 10`.
pub fn desargues() -> Graph {
    let outer = (0..10).map(|i| (i, (i + 1) % 10));
    let spokes = (0..10).map(|i| (i, 10 + i));
    let inner = (0..10).map(|i| (10 + i, 10 + (i + 3) % 10));
    Graph::new(20, outer.chain(spokes).chain(inner)).expect("valid Desargues graph")
}

/// Looks up a fixture by name.
///
/// Recognized: `desargues`, `c4`, `c6`, `q3`, `k23`, `k2`, and the families
/// `p<N>` / `path<N>` (path on N vertices) and `c<N>` / `cycle<N>` (cycle on
/// N vertices), with an optional `_` before the number.
pub fn generate_named(name: &str) -> Result<Graph, GeneratorError> {
    let unknown = || GeneratorError::UnknownName(name.to_string());
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "desargues" => return Ok(desargues()),
        "q3" => return Ok(hypercube(3)),
        "k23" => return Ok(complete_bipartite(2, 3)),
        "k2" => return Ok(path(2)),
        _ => {}
    }
    for (prefix, make) in [
        ("cycle", cycle as fn(usize) -> Graph),
        ("path", path),
        ("c", cycle),
        ("p", path),
    ] {
        if let Some(rest) = lower.strip_prefix(prefix) {
            let digits = rest.strip_prefix('_').unwrap_or(rest);
            if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                let n: usize = digits.parse().map_err(|_| unknown())?;
                return Ok(make(n));
            }
        }
    }
    Err(unknown())
}

/// A finite piece of the `k`-dimensional generalized diamond graph: all
/// integer points of `Z^(k+1)` with coordinate sum 0 or 1 and every
/// coordinate in `-r..=r`, joined at L1 distance 1.
///
/// The coordinate box is an intersection of semicubes of the infinite
/// graph, so the patch is a convex, hence isometric, subgraph of it.
#[derive(Debug, Clone)]
pub struct DiamondPatch {
    pub k: usize,
    pub r: usize,
    pub graph: Graph,
    /// Coordinates of each vertex, in lexicographic order.
    pub coords: Vec<Vec<i64>>,
}

pub fn generate_diamond_patch(k: usize, r: usize, cap: usize) -> Result<DiamondPatch, GeneratorError> {
    let side = 2 * r as u128 + 1;
    let estimate = u32::try_from(k)
        .ok()
        .and_then(|k| side.checked_pow(k))
        .map_or(u128::MAX, |s| s.saturating_mul(2));
    if estimate > cap as u128 {
        return Err(GeneratorError::TooLarge { k, r, estimate, cap });
    }
    let r = r as i64;

    // Enumerate the first k coordinates over the box; the last one is then
    // forced by the coordinate sum.
    let mut coords: Vec<Vec<i64>> = Vec::new();
    let mut prefix = vec![-r; k];
    loop {
        let partial: i64 = prefix.iter().sum();
        for total in [0i64, 1] {
            let last = total - partial;
            if (-r..=r).contains(&last) {
                let mut v = prefix.clone();
                v.push(last);
                coords.push(v);
            }
        }
        // odometer increment
        let mut i = k;
        loop {
            if i == 0 {
                coords.sort();
                return Ok(finish_patch(k, r as usize, coords));
            }
            i -= 1;
            if prefix[i] < r {
                prefix[i] += 1;
                break;
            }
            prefix[i] = -r;
        }
    }
}

fn finish_patch(k: usize, r: usize, coords: Vec<Vec<i64>>) -> DiamondPatch {
    let index: HashMap<&[i64], usize> = coords.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
    let mut edges = Vec::new();
    for (u, c) in coords.iter().enumerate() {
        if c.iter().sum::<i64>() != 0 {
            continue;
        }
        let mut up = c.clone();
        for axis in 0..=k {
            up[axis] += 1;
            if let Some(&v) = index.get(up.as_slice()) {
                edges.push((u, v));
            }
            up[axis] -= 1;
        }
    }
    edges.sort_unstable_by_key(|&(u, v)| (u.min(v), u.max(v)));
    let graph = Graph::new(coords.len(), edges).expect("patch edges are valid");
    DiamondPatch { k, r, graph, coords }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_fixtures() {
        let d = generate_named("desargues").unwrap();
        assert_eq!(d.vertex_count(), 20);
        assert_eq!(d.edge_count(), 30);
        assert!((0..20).all(|v| d.degree(v) == 3));

        let c6 = generate_named("c6").unwrap();
        assert_eq!(c6.vertex_count(), 6);
        assert!((0..6).all(|v| c6.has_edge(v, (v + 1) % 6)));

        let q3 = generate_named("q3").unwrap();
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));

        let k23 = generate_named("k23").unwrap();
        assert_eq!((k23.vertex_count(), k23.edge_count()), (5, 6));

        assert_eq!(generate_named("p_4").unwrap().edge_count(), 3);
        assert_eq!(generate_named("path7").unwrap().vertex_count(), 7);
        assert_eq!(generate_named("cycle_8").unwrap().edge_count(), 8);
        assert_eq!(generate_named("C4").unwrap().edge_count(), 4);
    }

    #[test]
    fn unknown_names_are_rejected() {
        for name in ["petersen", "c", "p_", "cx3", ""] {
            assert!(
                matches!(generate_named(name), Err(GeneratorError::UnknownName(_))),
                "{name}"
            );
        }
    }

    #[test]
    fn zero_dimensional_patch_is_an_edge() {
        let p = generate_diamond_patch(0, 1, DEFAULT_PATCH_CAP).unwrap();
        assert_eq!(p.coords, vec![vec![0], vec![1]]);
        assert_eq!(p.graph.edges(), &[(0, 1)]);
    }

    #[test]
    fn hexagonal_patch_center_has_degree_three() {
        let p = generate_diamond_patch(2, 1, DEFAULT_PATCH_CAP).unwrap();
        let origin = p.coords.iter().position(|c| c == &[0, 0, 0]).unwrap();
        let mut nbrs: Vec<Vec<i64>> = p.graph.neighbors(origin).map(|v| p.coords[v].clone()).collect();
        nbrs.sort();
        assert_eq!(nbrs, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    }

    #[test]
    fn diamond_patch_center_has_degree_four() {
        let p = generate_diamond_patch(3, 1, DEFAULT_PATCH_CAP).unwrap();
        let origin = p.coords.iter().position(|c| c == &[0, 0, 0, 0]).unwrap();
        assert_eq!(p.graph.degree(origin), 4);
    }

    #[test]
    fn patch_invariants() {
        for k in 0..=3 {
            for r in 0..=3 {
                let p = generate_diamond_patch(k, r, DEFAULT_PATCH_CAP).unwrap();
                let mut sorted = p.coords.clone();
                sorted.sort();
                assert_eq!(sorted, p.coords);
                for c in &p.coords {
                    assert_eq!(c.len(), k + 1);
                    let s: i64 = c.iter().sum();
                    assert!(s == 0 || s == 1);
                    assert!(c.iter().all(|x| x.unsigned_abs() as usize <= r));
                }
                for u in 0..p.coords.len() {
                    assert!(p.graph.degree(u) <= k + 1);
                    for v in (u + 1)..p.coords.len() {
                        let l1: u64 = p.coords[u].iter().zip(&p.coords[v]).map(|(a, b)| a.abs_diff(*b)).sum();
                        assert_eq!(p.graph.has_edge(u, v), l1 == 1);
                    }
                }
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            generate_diamond_patch(6, 10, 1000),
            Err(GeneratorError::TooLarge { .. })
        ));
        assert!(generate_diamond_patch(usize::MAX >> 40, 3, 1000).is_err());
    }
}
