//! Shared brute-force oracles, deliberately independent of the library's
//! algorithmic paths.

use qsperner_core::interval::Interval;
use qsperner_core::poset::FinitePoset;
use qsperner_core::quiver::{EdgeDir, PathOrientation};

/// Maximum antichain size by exponential maximum-independent-set search on
/// the comparability graph. Only for posets with at most 63 elements.
pub fn brute_force_width(p: &FinitePoset) -> usize {
    let n = p.len();
    assert!(n <= 63, "brute-force oracle is exponential");
    let mut adj = vec![0u64; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && p.comparable(i, j) {
                adj[i] |= 1 << j;
            }
        }
    }
    let mut best = 0;
    mis(&adj, (1u64 << n) - 1, 0, &mut best);
    best
}

fn mis(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    if cand == 0 {
        *best = size;
        return;
    }
    // branch on the candidate of highest degree within the candidate set
    let v = {
        let mut v = cand.trailing_zeros() as usize;
        let mut deg = (adj[v] & cand).count_ones();
        let mut rest = cand & (cand - 1);
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            let d = (adj[u] & cand).count_ones();
            if d > deg {
                v = u;
                deg = d;
            }
            rest &= rest - 1;
        }
        v
    };
    mis(adj, cand & !(1 << v) & !adj[v], size + 1, best);
    mis(adj, cand & !(1 << v), size, best);
}

/// All 2^(n-1) orientations of the path on n vertices.
pub fn all_orientations(n: usize) -> Vec<PathOrientation> {
    let edges = n - 1;
    (0..1u32 << edges)
        .map(|bits| {
            PathOrientation::new(
                (0..edges)
                    .map(|e| if bits >> e & 1 == 0 { EdgeDir::Left } else { EdgeDir::Right })
                    .collect(),
            )
        })
        .collect()
}

/// Semantic oracle: does a monomorphism of representations x -> y exist over
/// F_q? Enumerates every candidate collection of linear maps (scalars, since
/// all vertex spaces have dimension 0 or 1) and checks each commuting square
/// literally.
pub fn monomorphism_exists_bruteforce(
    o: &PathOrientation,
    q: u64,
    x: Interval,
    y: Interval,
) -> bool {
    let n = o.n();
    let dim_x = |v: usize| usize::from(x.contains_vertex(v));
    let dim_y = |v: usize| usize::from(y.contains_vertex(v));
    // vertices carrying a free scalar phi_v: k -> k
    let free: Vec<usize> = (1..=n).filter(|&v| dim_x(v) == 1 && dim_y(v) == 1).collect();
    // phi_v: k -> 0 can never be injective
    if (1..=n).any(|v| dim_x(v) == 1 && dim_y(v) == 0) {
        return false;
    }
    let arrows: Vec<(usize, usize)> = (1..n)
        .map(|i| match o.dir(i) {
            EdgeDir::Left => (i + 1, i),
            EdgeDir::Right => (i, i + 1),
        })
        .collect();
    // scalar of the arrow map inside a representation, None for a 0 map
    let rep_arrow = |iv: Interval, s: usize, t: usize| -> u64 {
        u64::from(iv.contains_vertex(s) && iv.contains_vertex(t))
    };
    let mut scalars = vec![0u64; free.len()];
    loop {
        // injectivity: each phi on a 1-dimensional source must be nonzero
        if scalars.iter().all(|&c| c != 0) || free.is_empty() {
            let phi = |v: usize| -> u64 {
                free.iter().position(|&w| w == v).map_or(0, |i| scalars[i])
            };
            let commutes = arrows.iter().all(|&(s, t)| {
                // compare y_arrow . phi_s and phi_t . x_arrow as maps
                // x_s -> y_t; either is the zero map when a dimension is 0
                let lhs = if dim_x(s) == 1 { rep_arrow(y, s, t) * phi(s) % q } else { 0 };
                let rhs = if dim_x(s) == 1 { phi(t) * rep_arrow(x, s, t) % q } else { 0 };
                lhs == rhs
            });
            if commutes {
                return true;
            }
        }
        // odometer over F_q^free
        let mut i = free.len();
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            scalars[i] += 1;
            if scalars[i] < q {
                break;
            }
            scalars[i] = 0;
        }
    }
}
