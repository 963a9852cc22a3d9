#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use isodiamond::Graph;

/// Upper-triangle adjacency bits of a graph on at most 8 vertices.
fn encode(n: usize, adj: &[u8], perm: &[usize]) -> u32 {
    // perm[new] = old
    let mut code = 0u32;
    let mut bit = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if adj[perm[i]] & (1 << perm[j]) != 0 {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

/// Minimum encoding over all vertex orders that list vertices by
/// non-decreasing degree; two graphs are isomorphic iff these agree.
fn canonical(n: usize, adj: &[u8]) -> u32 {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut by_degree: Vec<(u32, usize)> = (0..n).map(|v| (adj[v].count_ones(), v)).collect();
    by_degree.sort_unstable();
    for (d, v) in by_degree {
        match classes.last_mut() {
            Some(last) if adj[last[0]].count_ones() == d => last.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best = u32::MAX;
    let mut perm = Vec::with_capacity(n);
    search(&classes, 0, &mut perm, n, adj, &mut best);
    best
}

fn search(classes: &[Vec<usize>], ci: usize, perm: &mut Vec<usize>, n: usize, adj: &[u8], best: &mut u32) {
    if ci == classes.len() {
        *best = (*best).min(encode(n, adj, perm));
        return;
    }
    let mut items = classes[ci].clone();
    permute(&mut items, 0, &mut |order| {
        let len = perm.len();
        perm.extend_from_slice(order);
        search(classes, ci + 1, perm, n, adj, best);
        perm.truncate(len);
    });
}

fn permute(items: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

fn to_graph(n: usize, adj: &[u8]) -> Graph {
    let edges = (0..n).flat_map(|u| {
        ((u + 1)..n)
            .filter(move |&v| adj[u] & (1 << v) != 0)
            .map(move |v| (u, v))
    });
    Graph::new(n, edges).unwrap()
}

/// One representative of every isomorphism class of connected graphs on
/// exactly `n` vertices, for `1 <= n <= 8`.
///
/// Every connected graph has a vertex whose removal keeps it connected, so
/// adding a vertex with every nonempty neighborhood to every connected
/// graph on `n - 1` vertices reaches all classes.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=8).contains(&n));
    let mut level: Vec<Vec<u8>> = vec![vec![0]];
    for size in 2..=n {
        let mut seen: HashSet<u32> = HashSet::new();
        let mut next = Vec::new();
        for adj in &level {
            for mask in 1u16..(1 << (size - 1)) {
                let mut grown = adj.clone();
                grown.push(mask as u8);
                for (v, row) in grown.iter_mut().enumerate().take(size - 1) {
                    if mask & (1 << v) != 0 {
                        *row |= 1 << (size - 1);
                    }
                }
                if seen.insert(canonical(size, &grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level.iter().map(|adj| to_graph(n, adj)).collect()
}

/// Independent check of the three embedding invariants, returning a
/// description of the first failure.
pub fn embedding_defect(g: &Graph, coords: &[Vec<i64>]) -> Option<String> {
    let n = g.vertex_count();
    if coords.len() != n {
        return Some(format!("{} vectors for {n} vertices", coords.len()));
    }
    for (v, c) in coords.iter().enumerate() {
        let s: i64 = c.iter().sum();
        if s != 0 && s != 1 {
            return Some(format!("vertex {v} has coordinate sum {s}"));
        }
    }
    for &(u, v) in g.edges() {
        let diffs: Vec<i64> = coords[u]
            .iter()
            .zip(&coords[v])
            .map(|(a, b)| a - b)
            .filter(|d| *d != 0)
            .collect();
        if diffs.len() != 1 || diffs[0].abs() != 1 {
            return Some(format!("edge {u}-{v} is not a unit step"));
        }
    }
    // Floyd–Warshall, independent of the library's BFS
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    for u in 0..n {
        for v in (u + 1)..n {
            let l1: i64 = coords[u].iter().zip(&coords[v]).map(|(a, b)| (a - b).abs()).sum();
            if l1 as usize != d[u][v] {
                return Some(format!("vertices {u},{v}: graph distance {} vs L1 {l1}", d[u][v]));
            }
        }
    }
    None
}

/// Equivalence classes of the relation on a graph's edges, computed by
/// repeated closure of the pairwise relation until nothing changes.
pub fn closure_classes(g: &Graph, related: impl Fn(usize, usize) -> bool) -> BTreeSet<BTreeSet<usize>> {
    let m = g.edge_count();
    let mut rel: Vec<Vec<bool>> = (0..m)
        .map(|i| (0..m).map(|j| related(i, j) || related(j, i)).collect())
        .collect();
    loop {
        let mut changed = false;
        for i in 0..m {
            for j in 0..m {
                if rel[i][j] {
                    continue;
                }
                if (0..m).any(|k| rel[i][k] && rel[k][j]) {
                    rel[i][j] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    (0..m).map(|i| (0..m).filter(|&j| rel[i][j]).collect()).collect()
}
