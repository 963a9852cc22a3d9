//! Brute-force embeddability search, used to cross-check the cut-order
//! algorithms on small graphs.
//!
//! Vertices are placed in breadth-first order. Each vertex after the first
//! is put on a lattice neighbor of its BFS parent's position (sum-0 points
//! step by `+e_i`, sum-1 points by `-e_i`), and a placement is kept only if
//! its L1 distance to every placed vertex equals their graph distance.
//! Axes are interchangeable, so a step along a not-yet-used axis is only
//! tried for the lowest such axis.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{all_pairs_distances, first_unreachable, DistanceMatrix, Graph};

/// Node budget for one call of [`brute_force_embeddable`].
pub const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("search exceeded its budget of {0} placements")]
    BudgetExceeded(u64),
}

/// Vectors of length `k + 1`, indexed by vertex.
pub type Placement = Vec<Vec<i64>>;

/// Searches for an isometric placement of `g` into the `k`-dimensional
/// generalized diamond, restricted to coordinates in `-r..=r`.
///
/// Vertex 0 is pinned to the origin, and if that fails, to the sum-1 point
/// `e_0`. Returns the placement found, or `None` if there is none.
pub fn brute_force_embeddable(g: &Graph, k: usize, r: usize) -> Result<Option<Placement>, OracleError> {
    brute_force_embeddable_with_budget(g, k, r, DEFAULT_SEARCH_BUDGET)
}

pub fn brute_force_embeddable_with_budget(
    g: &Graph,
    k: usize,
    r: usize,
    budget: u64,
) -> Result<Option<Placement>, OracleError> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(None);
    }
    if first_unreachable(g).is_some() {
        return Err(OracleError::Disconnected);
    }
    if r == 0 && n > 1 {
        return Ok(None);
    }

    let (order, parent) = bfs_order(g);
    let dist = all_pairs_distances(g);
    let mut search = Search {
        k,
        r: r as i64,
        order: &order,
        parent: &parent,
        dist: &dist,
        pos: vec![Vec::new(); n],
        used_axes: 0,
        nodes: 0,
        budget,
    };

    let origin = vec![0i64; k + 1];
    let mut unit = origin.clone();
    unit[0] = 1;
    for (start, used) in [(origin, 0usize), (unit, 1usize)] {
        search.pos[0] = start;
        search.used_axes = used;
        if search.extend(1)? {
            return Ok(Some(search.pos));
        }
    }
    Ok(None)
}

/// Smallest `k <= kmax` for which [`brute_force_embeddable`] succeeds.
pub fn brute_force_min_dimension(g: &Graph, kmax: usize, r: usize) -> Result<Option<usize>, OracleError> {
    for k in 0..=kmax {
        if brute_force_embeddable(g, k, r)?.is_some() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

fn bfs_order(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = g.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    (order, parent)
}

struct Search<'a> {
    k: usize,
    r: i64,
    order: &'a [usize],
    parent: &'a [usize],
    dist: &'a DistanceMatrix,
    pos: Vec<Vec<i64>>,
    used_axes: usize,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> Result<bool, OracleError> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let v = self.order[depth];
        let p = self.parent[v];
        let base = self.pos[p].clone();
        let step: i64 = if base.iter().sum::<i64>() == 0 { 1 } else { -1 };
        let fresh_limit = (self.used_axes + 1).min(self.k + 1);

        for axis in 0..fresh_limit {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(OracleError::BudgetExceeded(self.budget));
            }
            let mut cand = base.clone();
            cand[axis] += step;
            if cand[axis].abs() > self.r {
                continue;
            }
            let fits = self.order[..depth].iter().all(|&w| {
                let l1: u64 = cand.iter().zip(&self.pos[w]).map(|(a, b)| a.abs_diff(*b)).sum();
                Some(l1 as usize) == self.dist.get(v, w)
            });
            if !fits {
                continue;
            }
            let saved = self.used_axes;
            if axis == self.used_axes {
                self.used_axes += 1;
            }
            self.pos[v] = cand;
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.used_axes = saved;
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path};

    fn check_placement(g: &Graph, k: usize, placement: &Placement) {
        let dm = all_pairs_distances(g);
        for (u, a) in placement.iter().enumerate() {
            assert_eq!(a.len(), k + 1);
            let s: i64 = a.iter().sum();
            assert!(s == 0 || s == 1);
            for (v, b) in placement.iter().enumerate() {
                let l1: u64 = a.iter().zip(b).map(|(x, y)| x.abs_diff(*y)).sum();
                assert_eq!(Some(l1 as usize), dm.get(u, v));
            }
        }
    }

    #[test]
    fn hexagon_fits_in_the_plane() {
        let g = cycle(6);
        let placement = brute_force_embeddable(&g, 2, 3).unwrap().expect("hexagon embeds");
        check_placement(&g, 2, &placement);
        assert!(brute_force_embeddable(&g, 1, 6).unwrap().is_none());
    }

    #[test]
    fn square_never_fits() {
        let g = cycle(4);
        for k in 0..=6 {
            assert!(brute_force_embeddable(&g, k, 4).unwrap().is_none(), "k = {k}");
        }
    }

    #[test]
    fn edge_fits_in_dimension_zero() {
        let placement = brute_force_embeddable(&path(2), 0, 1).unwrap().unwrap();
        assert_eq!(placement, vec![vec![0], vec![1]]);
    }

    #[test]
    fn minimum_dimension_examples() {
        assert_eq!(brute_force_min_dimension(&cycle(6), 3, 6), Ok(Some(2)));
        assert_eq!(brute_force_min_dimension(&path(3), 2, 3), Ok(Some(1)));
        assert_eq!(brute_force_min_dimension(&cycle(4), 4, 4), Ok(None));
        assert_eq!(brute_force_min_dimension(&path(1), 2, 1), Ok(Some(0)));
    }

    #[test]
    fn radius_limits_the_search() {
        // a path of 5 vertices needs coordinates of magnitude 2
        assert!(brute_force_embeddable(&path(5), 1, 1).unwrap().is_none());
        assert!(brute_force_embeddable(&path(5), 1, 2).unwrap().is_some());
    }

    #[test]
    fn budget_and_connectivity_errors() {
        assert_eq!(
            brute_force_embeddable_with_budget(&cycle(4), 6, 4, 3),
            Err(OracleError::BudgetExceeded(3))
        );
        assert_eq!(
            brute_force_embeddable(&Graph::empty(2), 1, 2),
            Err(OracleError::Disconnected)
        );
    }
}
