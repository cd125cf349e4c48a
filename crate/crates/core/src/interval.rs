//! The monomorphism poset of indecomposable representations of an oriented
//! type-A path, modelled on intervals [a,b] of vertices.
//!
//! An interval embeds into a containing one exactly when every boundary edge
//! where the containment is strict points into the smaller interval: an arrow
//! leaving the support would have to send a one-dimensional space injectively
//! into zero. This criterion drives the poset construction and the closed-form
//! maximum antichains and chain decompositions for the linear, simple-zigzag
//! and alternating orientations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poset::{ChainDecomposition, FinitePoset};
use crate::quiver::{EdgeDir, PathOrientation, Quiver};

/// The indecomposable supported on vertices a..=b with identity maps inside.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    a: usize,
    b: usize,
}

impl Interval {
    pub fn new(a: usize, b: usize) -> Result<Interval> {
        if a == 0 || a > b {
            return Err(Error::Domain(format!("interval needs 1 <= a <= b, got [{a},{b}]")));
        }
        Ok(Interval { a, b })
    }

    /// The simple representation [v, v].
    pub fn simple(v: usize) -> Interval {
        Interval { a: v, b: v }
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.a <= v && v <= self.b
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a == self.b {
            write!(f, "[{}]", self.a)
        } else {
            write!(f, "[{},{}]", self.a, self.b)
        }
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Interval {
    type Err = Error;

    fn from_str(s: &str) -> Result<Interval> {
        let bad = || Error::Parse(format!("interval `{s}`, want `[a]` or `[a,b]`"));
        let inner = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
        let (a, b) = match inner.split_once(',') {
            Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
            None => {
                let v = inner.trim().parse().map_err(|_| bad())?;
                (v, v)
            }
        };
        Interval::new(a, b)
    }
}

/// Does a monomorphism x -> y exist over the given orientation?
///
/// True iff y contains x and, on each side where the containment is strict,
/// the boundary edge is oriented into x.
pub fn embeds(o: &PathOrientation, x: Interval, y: Interval) -> bool {
    let n = o.n();
    debug_assert!(x.b <= n && y.b <= n);
    if !(y.a <= x.a && x.b <= y.b) {
        return false;
    }
    let left_ok = x.a == y.a || o.dir(x.a - 1) == EdgeDir::Right;
    let right_ok = x.b == y.b || o.dir(x.b) == EdgeDir::Left;
    left_ok && right_ok
}

/// All n(n+1)/2 intervals of a path on n vertices, lexicographic by (a, b).
pub fn all_intervals(n: usize) -> Vec<Interval> {
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for a in 1..=n {
        for b in a..=n {
            out.push(Interval { a, b });
        }
    }
    out
}

/// Index of an interval in the [`all_intervals`] order.
pub fn interval_index(n: usize, iv: Interval) -> usize {
    debug_assert!(iv.b <= n);
    // intervals starting at a' < a: sum of (n - a' + 1)
    let before: usize = (1..iv.a).map(|a| n - a + 1).sum();
    before + (iv.b - iv.a)
}

/// The monomorphism poset of all intervals under [`embeds`].
#[derive(Clone, Debug)]
pub struct IntervalPoset {
    orientation: PathOrientation,
    intervals: Vec<Interval>,
    poset: FinitePoset,
}

impl IntervalPoset {
    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn orientation(&self) -> &PathOrientation {
        &self.orientation
    }

    pub fn n(&self) -> usize {
        self.orientation.n()
    }

    pub fn index_of(&self, iv: Interval) -> usize {
        interval_index(self.n(), iv)
    }

    pub fn indices_of(&self, ivs: &[Interval]) -> Vec<usize> {
        ivs.iter().map(|&iv| self.index_of(iv)).collect()
    }
}

/// Build the interval poset of a path quiver. Fails with `NotAPath` on
/// anything that is not an oriented path in path vertex order.
pub fn interval_poset(q: &Quiver) -> Result<IntervalPoset> {
    Ok(interval_poset_of_orientation(&q.as_path_orientation()?))
}

pub fn interval_poset_of_orientation(o: &PathOrientation) -> IntervalPoset {
    let n = o.n();
    let intervals = all_intervals(n);
    let labels = intervals.iter().map(|iv| iv.to_string()).collect();
    let mut pairs = Vec::new();
    for (i, &x) in intervals.iter().enumerate() {
        for (j, &y) in intervals.iter().enumerate() {
            if i != j && embeds(o, x, y) {
                pairs.push((i, j));
            }
        }
    }
    // build_indexed re-validates that `embeds` really is a partial order
    let poset = FinitePoset::build_indexed(labels, &pairs)
        .expect("interval embedding relation is a partial order");
    IntervalPoset { orientation: o.clone(), intervals, poset }
}

/// Maximum antichain for the linear orientation: the top of each of the n
/// disjoint chains C_i = ([i] <= [i,i+1] <= ... <= [i,n]).
pub fn antichain_linear(n: usize) -> Vec<Interval> {
    (1..=n).map(|a| Interval { a, b: n }).collect()
}

/// Maximum antichain for the unique-source-at-s orientation: all intervals
/// whose support contains s. Size (l+1)(r+1) with l = s-1, r = n-s.
pub fn antichain_zigzag(n: usize, s: usize) -> Result<Vec<Interval>> {
    check_zigzag_params(n, s)?;
    let mut out = Vec::with_capacity(s * (n - s + 1));
    for a in 1..=s {
        for b in s..=n {
            out.push(Interval { a, b });
        }
    }
    Ok(out)
}

/// The chain decomposition certifying the zigzag antichain: left chains
/// L_i = ([i] <= [i,i+1] <= ... <= [i,s]) for i < s, right chains
/// R_v = ([v] <= [v-1,v] <= ... <= [s,v]) for v > s, singletons {[a,b]} for
/// a < s < b, and {[s]}. Indices follow [`all_intervals`] order.
pub fn chain_decomposition_zigzag(n: usize, s: usize) -> Result<ChainDecomposition> {
    check_zigzag_params(n, s)?;
    let mut chains = Vec::new();
    for i in 1..s {
        let chain: Vec<Interval> = (i..=s).map(|b| Interval { a: i, b }).collect();
        chains.push(chain);
    }
    for v in s + 1..=n {
        let chain: Vec<Interval> = (s..=v).rev().map(|a| Interval { a, b: v }).collect();
        chains.push(chain);
    }
    for a in 1..s {
        for b in s + 1..=n {
            chains.push(vec![Interval { a, b }]);
        }
    }
    chains.push(vec![Interval::simple(s)]);
    Ok(to_decomposition(n, chains))
}

fn check_zigzag_params(n: usize, s: usize) -> Result<()> {
    if n == 0 || s == 0 || s > n {
        return Err(Error::Domain(format!("zigzag needs 1 <= s <= n, got n={n}, s={s}")));
    }
    Ok(())
}

/// Sources of the alternating orientation on 2m+1 vertices: 2, 4, ..., 2m.
fn alternating_sources(m: usize) -> impl Iterator<Item = usize> {
    (1..=m).map(|i| 2 * i)
}

/// Maximum antichain for the alternating orientation on n = 2m+1 vertices
/// (sinks at both ends): intervals with source endpoints, [1,src], [src,n]
/// and [1,n]. Cardinality m(m+1)/2 + 2m + 1.
pub fn antichain_alternating(m: usize) -> Vec<Interval> {
    let n = 2 * m + 1;
    let mut out = Vec::new();
    for a in alternating_sources(m) {
        for b in alternating_sources(m) {
            if a <= b {
                out.push(Interval { a, b });
            }
        }
    }
    for b in alternating_sources(m) {
        out.push(Interval { a: 1, b });
    }
    for a in alternating_sources(m) {
        out.push(Interval { a, b: n });
    }
    out.push(Interval { a: 1, b: n });
    out.sort_unstable();
    out
}

/// The chain decomposition certifying the alternating antichain. For sources
/// a < b: C_[a] = ([a]), C_[a,n] = ([a,n]) for a != 2,
/// C_[1,a] = ([a-1,a] <= [a-3,a] <= ... <= [1,a]),
/// C_[a,b] = ([a+1,b-1] <= [a,b-1] <= [a,b]), plus
/// C_[1,n] = ([1] <= [1,3] <= ... <= [1,n]) and
/// C_[2,n] = ([n] <= [n-2,n] <= ... <= [3,n] <= [2,n]).
pub fn chain_decomposition_alternating(m: usize) -> ChainDecomposition {
    let n = 2 * m + 1;
    let mut chains: Vec<Vec<Interval>> = Vec::new();
    for a in alternating_sources(m) {
        chains.push(vec![Interval::simple(a)]);
    }
    for a in alternating_sources(m) {
        if a != 2 {
            chains.push(vec![Interval { a, b: n }]);
        }
    }
    for a in alternating_sources(m) {
        // ascending: [a-1,a] <= [a-3,a] <= ... <= [1,a]
        let chain: Vec<Interval> = (1..a).rev().step_by(2).map(|lo| Interval { a: lo, b: a }).collect();
        chains.push(chain);
    }
    for a in alternating_sources(m) {
        for b in alternating_sources(m) {
            if a < b {
                chains.push(vec![
                    Interval { a: a + 1, b: b - 1 },
                    Interval { a, b: b - 1 },
                    Interval { a, b },
                ]);
            }
        }
    }
    chains.push((1..=n).step_by(2).map(|b| Interval { a: 1, b }).collect());
    let mut right: Vec<Interval> = vec![Interval::simple(n)];
    right.extend((3..n).step_by(2).rev().map(|a| Interval { a, b: n }));
    right.push(Interval { a: 2, b: n });
    chains.push(right);
    to_decomposition(n, chains)
}

/// Maximum antichain for the alternating orientation on n' = 2m vertices
/// (sink at 1, source at n'), obtained from the odd case by deleting the
/// members supported at the removed endpoint and adding [1,n'-1], [2,n'-1]
/// and [3,n']. Cardinality (m+1)(m+2)/2 for m >= 2; for m = 1 the last two
/// substitutes are ill-formed and only the well-formed members are returned.
pub fn antichain_alternating_even(m: usize) -> Vec<Interval> {
    let np = 2 * m;
    let mut out = Vec::new();
    for a in alternating_sources(m) {
        for b in alternating_sources(m) {
            if a <= b && !(a == 2 && b == np) {
                out.push(Interval { a, b });
            }
        }
    }
    for b in alternating_sources(m) {
        if b != np {
            out.push(Interval { a: 1, b });
        }
    }
    out.push(Interval { a: 1, b: np - 1 });
    if np >= 3 {
        out.push(Interval { a: 2, b: np - 1 });
        out.push(Interval { a: 3, b: np });
    }
    out.sort_unstable();
    out
}

fn to_decomposition(n: usize, chains: Vec<Vec<Interval>>) -> ChainDecomposition {
    ChainDecomposition::new(
        chains
            .into_iter()
            .map(|c| c.into_iter().map(|iv| interval_index(n, iv)).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dilworth::dilworth_width;

    fn iv(a: usize, b: usize) -> Interval {
        Interval::new(a, b).unwrap()
    }

    #[test]
    fn embeds_is_reflexive() {
        let o = PathOrientation::zigzag(6, 3).unwrap();
        for x in all_intervals(6) {
            assert!(embeds(&o, x, x));
        }
    }

    #[test]
    fn alternating_a3_relations() {
        // 1 <- 2 -> 3
        let o = PathOrientation::parse("<>").unwrap();
        assert!(embeds(&o, iv(1, 1), iv(1, 3)));
        assert!(embeds(&o, iv(1, 1), iv(1, 2)));
        assert!(!embeds(&o, iv(1, 2), iv(1, 3)));
        assert!(!embeds(&o, iv(2, 2), iv(1, 2)));
    }

    #[test]
    fn a2_simple_into_projective() {
        // 1 -> 2: S_2 embeds into P_1, S_1 does not.
        let o = PathOrientation::parse(">").unwrap();
        assert!(embeds(&o, iv(2, 2), iv(1, 2)));
        assert!(!embeds(&o, iv(1, 1), iv(1, 2)));
    }

    #[test]
    fn linear_poset_is_n_disjoint_chains() {
        let o = PathOrientation::linear(5).unwrap();
        for x in all_intervals(5) {
            for y in all_intervals(5) {
                let expect = x.a() == y.a() && x.b() <= y.b();
                assert_eq!(embeds(&o, x, y), expect, "{x} vs {y}");
            }
        }
        let ip = interval_poset_of_orientation(&o);
        // chain C_i has length n - i + 1; components are chains
        let cert = dilworth_width(ip.poset());
        assert_eq!(cert.width, 5);
        let mut lens: Vec<usize> = cert.cover.chains().iter().map(Vec::len).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn alternating_a3_hasse_matches_figure() {
        let ip = interval_poset_of_orientation(&PathOrientation::parse("<>").unwrap());
        let p = ip.poset();
        let covers: Vec<(String, String)> = p
            .covers()
            .iter()
            .map(|&(lo, hi)| (p.label(lo).to_string(), p.label(hi).to_string()))
            .collect();
        let expected = [
            ("[1]", "[1,2]"),
            ("[1]", "[1,3]"),
            ("[3]", "[2,3]"),
            ("[3]", "[1,3]"),
        ];
        assert_eq!(covers.len(), 4);
        for (lo, hi) in expected {
            assert!(covers.contains(&(lo.into(), hi.into())), "missing edge {lo} -> {hi}");
        }
    }

    #[test]
    fn zigzag_a6_antichain_matches_figure() {
        let f = antichain_zigzag(6, 3).unwrap();
        let expected: Vec<Interval> = [
            (3, 3), (2, 3), (3, 4), (1, 3), (2, 4), (3, 5),
            (1, 4), (2, 5), (3, 6), (1, 5), (2, 6), (1, 6),
        ]
        .iter()
        .map(|&(a, b)| iv(a, b))
        .collect();
        assert_eq!(f.len(), 12);
        for e in &expected {
            assert!(f.contains(e), "missing {e}");
        }
    }

    #[test]
    fn zigzag_decomposition_a6() {
        let ip = interval_poset_of_orientation(&PathOrientation::zigzag(6, 3).unwrap());
        let d = chain_decomposition_zigzag(6, 3).unwrap();
        assert_eq!(d.num_chains(), 12);
        assert_eq!(d.total_elements(), 21);
        assert!(ip.poset().verify_chain_decomposition(&d));
    }

    #[test]
    fn zigzag_degenerate_s1() {
        let ip = interval_poset_of_orientation(&PathOrientation::zigzag(2, 1).unwrap());
        let d = chain_decomposition_zigzag(2, 1).unwrap();
        assert_eq!(d.num_chains(), 2);
        assert!(ip.poset().verify_chain_decomposition(&d));
        let f = antichain_zigzag(2, 1).unwrap();
        assert_eq!(f, vec![iv(1, 1), iv(1, 2)]);
    }

    #[test]
    fn zigzag_a3_s2_decomposition() {
        let d = chain_decomposition_zigzag(3, 2).unwrap();
        let ip = interval_poset_of_orientation(&PathOrientation::zigzag(3, 2).unwrap());
        assert!(ip.poset().verify_chain_decomposition(&d));
        let as_intervals: Vec<Vec<String>> = d
            .chains()
            .iter()
            .map(|c| c.iter().map(|&i| ip.poset().label(i).to_string()).collect())
            .collect();
        assert!(as_intervals.contains(&vec!["[1]".to_string(), "[1,2]".to_string()]));
        assert!(as_intervals.contains(&vec!["[3]".to_string(), "[2,3]".to_string()]));
        assert!(as_intervals.contains(&vec!["[1,3]".to_string()]));
        assert!(as_intervals.contains(&vec!["[2]".to_string()]));
    }

    #[test]
    fn alternating_m1_antichain_coincides_with_zigzag() {
        let alt = antichain_alternating(1);
        let mut zig = antichain_zigzag(3, 2).unwrap();
        zig.sort_unstable();
        assert_eq!(alt, zig);
        assert_eq!(alt.len(), 4);
    }

    #[test]
    fn alternating_decomposition_m1() {
        let d = chain_decomposition_alternating(1);
        let ip = interval_poset_of_orientation(&PathOrientation::alternating(3).unwrap());
        assert_eq!(d.num_chains(), 4);
        assert_eq!(d.total_elements(), 6);
        assert!(ip.poset().verify_chain_decomposition(&d));
    }

    #[test]
    fn alternating_decomposition_m3_counts() {
        let d = chain_decomposition_alternating(3);
        assert_eq!(d.num_chains(), 13);
        assert_eq!(d.total_elements(), 28);
        let ip = interval_poset_of_orientation(&PathOrientation::alternating(7).unwrap());
        assert!(ip.poset().verify_chain_decomposition(&d));
    }

    #[test]
    fn alternating_even_m3_matches_red_figure() {
        let f = antichain_alternating_even(3);
        let expected: Vec<Interval> = [
            (2, 2), (4, 4), (6, 6), (2, 4), (4, 6),
            (1, 2), (1, 4), (1, 5), (2, 5), (3, 6),
        ]
        .iter()
        .map(|&(a, b)| iv(a, b))
        .collect();
        assert_eq!(f.len(), 10);
        for e in &expected {
            assert!(f.contains(e), "missing {e}");
        }
    }

    #[test]
    fn interval_index_matches_enumeration() {
        for n in 1..=8 {
            for (i, &x) in all_intervals(n).iter().enumerate() {
                assert_eq!(interval_index(n, x), i);
            }
        }
    }

    #[test]
    fn interval_parsing_round_trip() {
        for s in ["[3]", "[1,7]"] {
            let x: Interval = s.parse().unwrap();
            assert_eq!(x.to_string(), s);
        }
        assert!("[4,2]".parse::<Interval>().is_err());
        assert!("(1,2)".parse::<Interval>().is_err());
    }

    #[test]
    fn non_path_quiver_rejected() {
        let q = Quiver::star(&crate::quiver::StarShape::source(vec![1, 1, 1]).unwrap());
        assert!(matches!(interval_poset(&q), Err(Error::NotAPath(_))));
    }
}
