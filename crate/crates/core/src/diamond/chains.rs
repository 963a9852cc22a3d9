use super::cuts::CutPoset;

/// A partition of the cut indices into chains, each listed bottom to top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainDecomposition {
    pub chains: Vec<Vec<usize>>,
}

impl ChainDecomposition {
    /// Each element in a chain of its own.
    pub fn singletons(k: usize) -> Self {
        ChainDecomposition {
            chains: (0..k).map(|i| vec![i]).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// Chain index of every element.
    pub fn chain_index(&self, k: usize) -> Vec<usize> {
        let mut index = vec![usize::MAX; k];
        for (c, chain) in self.chains.iter().enumerate() {
            for &x in chain {
                index[x] = c;
            }
        }
        index
    }

    /// The chains partition `0..k` and consecutive members are ordered.
    pub fn is_valid_for(&self, poset: &CutPoset) -> bool {
        let k = poset.len();
        let mut seen = vec![false; k];
        for chain in &self.chains {
            if chain.is_empty() {
                return false;
            }
            for &x in chain {
                if x >= k || std::mem::replace(&mut seen[x], true) {
                    return false;
                }
            }
            if chain.windows(2).any(|w| !poset.below(w[0], w[1])) {
                return false;
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Width of the poset and a decomposition into exactly that many chains.
///
/// Dilworth via matching: match each element to a successor it lies below,
/// maximizing the number of matched pairs; every unmatched element then
/// starts one chain, so the number of chains is `k - |matching|`.
pub fn poset_width_and_chains(poset: &CutPoset) -> (usize, ChainDecomposition) {
    let k = poset.len();
    let successors: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..k).filter(|&j| poset.below(i, j)).collect())
        .collect();

    // matched_left[i] = j means j directly follows i in its chain
    let mut matched_left: Vec<Option<usize>> = vec![None; k];
    let mut matched_right: Vec<Option<usize>> = vec![None; k];
    let mut matching = 0;
    for i in 0..k {
        let mut visited = vec![false; k];
        if augment(i, &successors, &mut visited, &mut matched_left, &mut matched_right) {
            matching += 1;
        }
    }

    let mut chains = Vec::with_capacity(k - matching);
    for start in (0..k).filter(|&j| matched_right[j].is_none()) {
        let mut chain = vec![start];
        let mut cur = start;
        while let Some(next) = matched_left[cur] {
            chain.push(next);
            cur = next;
        }
        chains.push(chain);
    }
    debug_assert_eq!(chains.len(), k - matching);
    (k - matching, ChainDecomposition { chains })
}

fn augment(
    left: usize,
    successors: &[Vec<usize>],
    visited: &mut [bool],
    matched_left: &mut [Option<usize>],
    matched_right: &mut [Option<usize>],
) -> bool {
    for &right in &successors[left] {
        if visited[right] {
            continue;
        }
        visited[right] = true;
        let free = match matched_right[right] {
            None => true,
            Some(other) => augment(other, successors, visited, matched_left, matched_right),
        };
        if free {
            matched_left[left] = Some(right);
            matched_right[right] = Some(left);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poset_from_pairs(k: usize, pairs: &[(usize, usize)]) -> CutPoset {
        let mut below = vec![vec![false; k]; k];
        for &(i, j) in pairs {
            below[i][j] = true;
        }
        CutPoset::from_matrix(below)
    }

    #[test]
    fn antichain_gives_singletons() {
        let (w, chains) = poset_width_and_chains(&poset_from_pairs(3, &[]));
        assert_eq!(w, 3);
        assert_eq!(chains.chains, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn total_order_gives_one_chain() {
        let p = poset_from_pairs(3, &[(2, 0), (2, 1), (0, 1)]);
        let (w, chains) = poset_width_and_chains(&p);
        assert_eq!(w, 1);
        assert_eq!(chains.chains, vec![vec![2, 0, 1]]);
        assert!(chains.is_valid_for(&p));
    }

    #[test]
    fn empty_poset() {
        let (w, chains) = poset_width_and_chains(&poset_from_pairs(0, &[]));
        assert_eq!(w, 0);
        assert!(chains.is_empty());
    }

    #[test]
    fn greedy_matching_needs_augmentation() {
        // 0 < 2, 0 < 3, 1 < 2: greedy would pair 0-2 and strand 1.
        let p = poset_from_pairs(4, &[(0, 2), (0, 3), (1, 2)]);
        let (w, chains) = poset_width_and_chains(&p);
        assert_eq!(w, 2);
        assert!(chains.is_valid_for(&p));
    }

    #[test]
    fn validity_checks() {
        let p = poset_from_pairs(2, &[(0, 1)]);
        assert!(ChainDecomposition::singletons(2).is_valid_for(&p));
        let bad = ChainDecomposition {
            chains: vec![vec![1, 0]],
        };
        assert!(!bad.is_valid_for(&p));
        let missing = ChainDecomposition { chains: vec![vec![0]] };
        assert!(!missing.is_valid_for(&p));
    }
}
