//! Dilworth width: minimum chain cover of the transitive closure via maximum
//! bipartite matching, with a maximum antichain extracted by Koenig duality.
//!
//! The poset is split into two copies L and R with an edge (i_L, j_R) for
//! every strict comparability i < j. A maximum matching M yields a minimum
//! chain cover with |P| - |M| chains (matched edges link consecutive chain
//! elements), and the Koenig vertex cover yields an antichain of the same
//! size, certifying both optimality directions at once.

use std::collections::VecDeque;

use crate::poset::{Antichain, ChainDecomposition, FinitePoset};

/// Width plus both Dilworth certificates.
#[derive(Clone, Debug)]
pub struct DilworthCertificate {
    pub width: usize,
    /// Minimum chain cover with exactly `width` chains.
    pub cover: ChainDecomposition,
    /// Maximum antichain with exactly `width` members.
    pub witness: Antichain,
}

const UNMATCHED: usize = usize::MAX;

/// Maximum bipartite matching, deterministic for a fixed adjacency order.
/// Returns `match_left`: for each left vertex its matched right vertex.
fn hopcroft_karp(adj: &[Vec<u32>], right_size: usize) -> Vec<usize> {
    let left_size = adj.len();
    let mut match_left = vec![UNMATCHED; left_size];
    let mut match_right = vec![UNMATCHED; right_size];
    let mut dist = vec![usize::MAX; left_size];

    loop {
        // BFS layering from free left vertices.
        let mut queue = VecDeque::new();
        for (u, d) in dist.iter_mut().enumerate() {
            if match_left[u] == UNMATCHED {
                *d = 0;
                queue.push_back(u);
            } else {
                *d = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = match_right[v as usize];
                if w == UNMATCHED {
                    found = true;
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            break;
        }
        // DFS augmentation along the layering, in index order.
        let mut progressed = false;
        for u in 0..left_size {
            if match_left[u] == UNMATCHED && augment(u, adj, &mut match_left, &mut match_right, &mut dist) {
                progressed = true;
            }
        }
        if !progressed {
            break;
        }
    }
    match_left
}

fn augment(
    u: usize,
    adj: &[Vec<u32>],
    match_left: &mut [usize],
    match_right: &mut [usize],
    dist: &mut [usize],
) -> bool {
    let d = std::mem::replace(&mut dist[u], usize::MAX);
    for &v in &adj[u] {
        let v = v as usize;
        let w = match_right[v];
        if w == UNMATCHED || (dist[w] == d + 1 && augment(w, adj, match_left, match_right, dist)) {
            match_left[u] = v;
            match_right[v] = u;
            return true;
        }
    }
    false
}

/// Exact width with a minimum chain cover and a maximum antichain witness.
pub fn dilworth_width(p: &FinitePoset) -> DilworthCertificate {
    let n = p.len();
    let mut adj: Vec<Vec<u32>> = Vec::with_capacity(n);
    for i in 0..n {
        adj.push(p.up_set(i).filter(|&j| j != i).map(|j| j as u32).collect());
    }
    let match_left = hopcroft_karp(&adj, n);
    let mut match_right = vec![UNMATCHED; n];
    for (u, &v) in match_left.iter().enumerate() {
        if v != UNMATCHED {
            match_right[v] = u;
        }
    }

    // Chains: follow matched successors from elements with no predecessor.
    let mut chains = Vec::new();
    for start in 0..n {
        if match_right[start] != UNMATCHED {
            continue;
        }
        let mut chain = vec![start];
        let mut cur = start;
        while match_left[cur] != UNMATCHED {
            cur = match_left[cur];
            chain.push(cur);
        }
        chains.push(chain);
    }
    let cover = ChainDecomposition::new(chains);

    // Koenig: Z = vertices reachable from free left vertices alternating
    // unmatched-forward / matched-backward. Minimum vertex cover is
    // (L \ Z_L) union (R cap Z_R); the antichain is the elements whose left
    // copy avoids the cover and whose right copy avoids the cover.
    let mut z_left = vec![false; n];
    let mut z_right = vec![false; n];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for u in 0..n {
        if match_left[u] == UNMATCHED {
            z_left[u] = true;
            queue.push_back(u);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            let v = v as usize;
            if match_left[u] == v || z_right[v] {
                continue;
            }
            z_right[v] = true;
            let w = match_right[v];
            if w != UNMATCHED && !z_left[w] {
                z_left[w] = true;
                queue.push_back(w);
            }
        }
    }
    let witness: Vec<usize> = (0..n).filter(|&i| z_left[i] && !z_right[i]).collect();

    let width = cover.num_chains();
    debug_assert_eq!(witness.len(), width, "Koenig antichain must match chain count");
    debug_assert!(p.is_antichain(&witness));
    DilworthCertificate { width, cover, witness: Antichain::new(witness) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::FinitePoset;

    fn poset(labels: &[&str], pairs: &[(&str, &str)]) -> FinitePoset {
        FinitePoset::build(
            labels.iter().map(|s| s.to_string()).collect(),
            &pairs.iter().map(|&(a, b)| (a.to_string(), b.to_string())).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn antichain_width_is_element_count() {
        let p = poset(&["a", "b", "c", "d"], &[]);
        let cert = dilworth_width(&p);
        assert_eq!(cert.width, 4);
        assert_eq!(cert.cover.num_chains(), 4);
        assert!(cert.cover.chains().iter().all(|c| c.len() == 1));
        assert_eq!(cert.witness.len(), 4);
    }

    #[test]
    fn chain_width_is_one() {
        let p = poset(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let cert = dilworth_width(&p);
        assert_eq!(cert.width, 1);
        assert_eq!(cert.cover.chains(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn dilworth_duality_on_a_fence() {
        // a < x, a < y, b < y: width 2 ({x, y} and {a, b} are maximum antichains)
        let p = poset(&["a", "b", "x", "y"], &[("a", "x"), ("a", "y"), ("b", "y")]);
        let cert = dilworth_width(&p);
        assert_eq!(cert.width, 2);
        assert!(p.verify_chain_decomposition(&cert.cover));
        assert!(p.is_antichain(cert.witness.members()));
        assert_eq!(cert.witness.len(), cert.cover.num_chains());
    }

    #[test]
    fn witnesses_are_reproducible() {
        let p = poset(&["a", "b", "c", "d", "e"], &[("a", "c"), ("b", "c"), ("c", "d"), ("b", "e")]);
        let c1 = dilworth_width(&p);
        let c2 = dilworth_width(&p);
        assert_eq!(c1.witness.members(), c2.witness.members());
        assert_eq!(c1.cover.chains(), c2.cover.chains());
    }
}
