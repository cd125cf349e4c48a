//! Quivers: oriented paths of type A under arbitrary orientation, star-shaped
//! quivers, and structural validation (acyclic, connected, simple).

use std::fmt;

use crate::error::{Error, Result};

/// Direction of the edge between path vertices i and i+1.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum EdgeDir {
    /// Arrow (i+1) -> i, written `<`.
    Left,
    /// Arrow i -> (i+1), written `>`.
    Right,
}

/// Orientation of a path on `dirs.len() + 1` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathOrientation {
    dirs: Vec<EdgeDir>,
}

impl PathOrientation {
    pub fn new(dirs: Vec<EdgeDir>) -> Self {
        PathOrientation { dirs }
    }

    /// Parse strings like `"<<>>>"`; `<` is the arrow (i+1) -> i.
    pub fn parse(s: &str) -> Result<Self> {
        let mut dirs = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '<' => dirs.push(EdgeDir::Left),
                '>' => dirs.push(EdgeDir::Right),
                other => return Err(Error::Parse(format!("orientation char `{other}`, want `<` or `>`"))),
            }
        }
        Ok(PathOrientation { dirs })
    }

    /// Linear orientation: unique sink at 1, unique source at n.
    pub fn linear(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("path needs at least one vertex".into()));
        }
        Ok(PathOrientation { dirs: vec![EdgeDir::Left; n - 1] })
    }

    /// Simple zigzag: unique source at position s, arrows descending to both
    /// endpoints. s = 1 and s = n degenerate to linear orientations.
    pub fn zigzag(n: usize, s: usize) -> Result<Self> {
        if n == 0 || s == 0 || s > n {
            return Err(Error::Domain(format!("zigzag needs 1 <= s <= n, got n={n}, s={s}")));
        }
        let dirs = (1..n).map(|i| if i < s { EdgeDir::Left } else { EdgeDir::Right }).collect();
        Ok(PathOrientation { dirs })
    }

    /// Alternating orientation starting with a sink at vertex 1. For odd n it
    /// also ends with a sink; for even n it ends with a source.
    pub fn alternating(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("path needs at least one vertex".into()));
        }
        let dirs = (1..n).map(|i| if i % 2 == 1 { EdgeDir::Left } else { EdgeDir::Right }).collect();
        Ok(PathOrientation { dirs })
    }

    /// Number of path vertices.
    pub fn n(&self) -> usize {
        self.dirs.len() + 1
    }

    /// Direction of the edge between vertices i and i+1 (1 <= i < n).
    pub fn dir(&self, i: usize) -> EdgeDir {
        self.dirs[i - 1]
    }

    pub fn dirs(&self) -> &[EdgeDir] {
        &self.dirs
    }
}

impl fmt::Display for PathOrientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.dirs {
            f.write_str(match d {
                EdgeDir::Left => "<",
                EdgeDir::Right => ">",
            })?;
        }
        Ok(())
    }
}

/// Which end of every ray the star's central vertex plays.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CenterRole {
    Source,
    Sink,
}

/// Shape of a star quiver: ray lengths plus the center's role.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarShape {
    ray_lengths: Vec<usize>,
    center_role: CenterRole,
}

impl StarShape {
    pub fn new(ray_lengths: Vec<usize>, center_role: CenterRole) -> Result<Self> {
        if ray_lengths.iter().any(|&l| l == 0) {
            return Err(Error::Domain("star ray lengths must be >= 1".into()));
        }
        Ok(StarShape { ray_lengths, center_role })
    }

    pub fn source(ray_lengths: Vec<usize>) -> Result<Self> {
        Self::new(ray_lengths, CenterRole::Source)
    }

    pub fn ray_lengths(&self) -> &[usize] {
        &self.ray_lengths
    }

    pub fn center_role(&self) -> CenterRole {
        self.center_role
    }

    pub fn num_rays(&self) -> usize {
        self.ray_lengths.len()
    }

    /// Total vertex count 1 + sum of ray lengths.
    pub fn n(&self) -> usize {
        1 + self.ray_lengths.iter().sum::<usize>()
    }

    /// Central vertex in the quiver numbering.
    pub fn center_vertex(&self) -> usize {
        1
    }

    /// Quiver vertex of ray `ray` (1-based) at position `pos` (1-based).
    pub fn ray_vertex(&self, ray: usize, pos: usize) -> usize {
        debug_assert!(ray >= 1 && ray <= self.num_rays());
        debug_assert!(pos >= 1 && pos <= self.ray_lengths[ray - 1]);
        1 + self.ray_lengths[..ray - 1].iter().sum::<usize>() + pos
    }

    /// Serialized vertex names: "c" for the center, "v{i},{j}" on rays.
    pub fn vertex_label(&self, v: usize) -> String {
        if v == 1 {
            return "c".into();
        }
        let mut rest = v - 2;
        for (i, &l) in self.ray_lengths.iter().enumerate() {
            if rest < l {
                return format!("v{},{}", i + 1, rest + 1);
            }
            rest -= l;
        }
        format!("?{v}")
    }
}

/// A finite directed graph on vertices 1..=n, validated to be simple,
/// acyclic and connected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    n: usize,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(n: usize, arrows: Vec<(usize, usize)>) -> Result<Quiver> {
        if n == 0 {
            return Err(Error::InvalidQuiver("no vertices".into()));
        }
        for &(s, t) in &arrows {
            if s == 0 || s > n || t == 0 || t > n {
                return Err(Error::InvalidQuiver(format!("arrow ({s}, {t}) out of range 1..={n}")));
            }
            if s == t {
                return Err(Error::InvalidQuiver(format!("loop at vertex {s}")));
            }
        }
        let mut sorted = arrows.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidQuiver("multiple arrows between the same vertices".into()));
        }
        let q = Quiver { n, arrows };
        if !q.is_connected() {
            return Err(Error::InvalidQuiver("underlying graph is not connected".into()));
        }
        if q.has_oriented_cycle() {
            return Err(Error::InvalidQuiver("oriented cycle".into()));
        }
        Ok(q)
    }

    /// Path quiver on vertices 1..=n with the given edge orientation.
    pub fn path(n: usize, o: &PathOrientation) -> Result<Quiver> {
        if n == 0 {
            return Err(Error::Domain("path needs at least one vertex".into()));
        }
        if o.dirs().len() != n - 1 {
            return Err(Error::BadLength { n, got: o.dirs().len(), want: n - 1 });
        }
        let arrows = (1..n)
            .map(|i| match o.dir(i) {
                EdgeDir::Left => (i + 1, i),
                EdgeDir::Right => (i, i + 1),
            })
            .collect();
        Ok(Quiver { n, arrows })
    }

    /// Star quiver: center plus rays, oriented away from (source) or toward
    /// (sink) the center.
    pub fn star(shape: &StarShape) -> Quiver {
        let mut arrows = Vec::new();
        for ray in 1..=shape.num_rays() {
            let len = shape.ray_lengths()[ray - 1];
            let mut prev = shape.center_vertex();
            for pos in 1..=len {
                let v = shape.ray_vertex(ray, pos);
                match shape.center_role() {
                    CenterRole::Source => arrows.push((prev, v)),
                    CenterRole::Sink => arrows.push((v, prev)),
                }
                prev = v;
            }
        }
        Quiver { n: shape.n(), arrows }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Vertices with no incoming arrow.
    pub fn sources(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.n + 1];
        for &(_, t) in &self.arrows {
            has_in[t] = true;
        }
        (1..=self.n).filter(|&v| !has_in[v]).collect()
    }

    /// Vertices with no outgoing arrow.
    pub fn sinks(&self) -> Vec<usize> {
        let mut has_out = vec![false; self.n + 1];
        for &(s, _) in &self.arrows {
            has_out[s] = true;
        }
        (1..=self.n).filter(|&v| !has_out[v]).collect()
    }

    fn is_connected(&self) -> bool {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(s, t) in &self.arrows {
            adj[s].push(t);
            adj[t].push(s);
        }
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![1];
        seen[1] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        (1..=self.n).all(|v| seen[v])
    }

    fn has_oriented_cycle(&self) -> bool {
        // Kahn's algorithm
        let mut indeg = vec![0usize; self.n + 1];
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(s, t) in &self.arrows {
            indeg[t] += 1;
            adj[s].push(t);
        }
        let mut stack: Vec<usize> = (1..=self.n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = stack.pop() {
            removed += 1;
            for &w in &adj[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        removed != self.n
    }

    /// Recover the path orientation if this quiver is an oriented path on
    /// vertices numbered consecutively along the path.
    pub fn as_path_orientation(&self) -> Result<PathOrientation> {
        let mut dirs = vec![None; self.n.saturating_sub(1)];
        for &(s, t) in &self.arrows {
            let (lo, dir) = if s + 1 == t {
                (s, EdgeDir::Right)
            } else if t + 1 == s {
                (t, EdgeDir::Left)
            } else {
                return Err(Error::NotAPath(format!("arrow ({s}, {t}) skips vertices")));
            };
            if dirs[lo - 1].replace(dir).is_some() {
                return Err(Error::NotAPath(format!("two arrows between {lo} and {}", lo + 1)));
            }
        }
        let dirs: Option<Vec<EdgeDir>> = dirs.into_iter().collect();
        match dirs {
            Some(d) => Ok(PathOrientation::new(d)),
            None => Err(Error::NotAPath("missing path edge".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_has_source_1_sink_2() {
        let q = Quiver::path(2, &PathOrientation::parse(">").unwrap()).unwrap();
        assert_eq!(q.arrows(), &[(1, 2)]);
        assert_eq!(q.sources(), vec![1]);
        assert_eq!(q.sinks(), vec![2]);
    }

    #[test]
    fn alternating_a3_source_in_middle() {
        let q = Quiver::path(3, &PathOrientation::parse("<>").unwrap()).unwrap();
        assert_eq!(q.arrows(), &[(2, 1), (2, 3)]);
        assert_eq!(q.sources(), vec![2]);
        assert_eq!(q.sinks(), vec![1, 3]);
    }

    #[test]
    fn alternating_a7_sources_and_sinks() {
        let q = Quiver::path(7, &PathOrientation::alternating(7).unwrap()).unwrap();
        assert_eq!(q.sources(), vec![2, 4, 6]);
        assert_eq!(q.sinks(), vec![1, 3, 5, 7]);
    }

    #[test]
    fn zigzag_a6_s3() {
        let o = PathOrientation::zigzag(6, 3).unwrap();
        assert_eq!(o.to_string(), "<<>>>");
        let q = Quiver::path(6, &o).unwrap();
        assert_eq!(q.sources(), vec![3]);
        assert_eq!(q.sinks(), vec![1, 6]);
    }

    #[test]
    fn linear_orientation_sink_at_1() {
        let q = Quiver::path(6, &PathOrientation::linear(6).unwrap()).unwrap();
        assert_eq!(q.sources(), vec![6]);
        assert_eq!(q.sinks(), vec![1]);
    }

    #[test]
    fn orientation_length_mismatch() {
        let err = Quiver::path(4, &PathOrientation::parse("<<").unwrap()).unwrap_err();
        assert!(matches!(err, Error::BadLength { n: 4, got: 2, want: 3 }));
    }

    #[test]
    fn star_with_one_ray_is_a_path() {
        let shape = StarShape::source(vec![4]).unwrap();
        let q = Quiver::star(&shape);
        assert_eq!(q.vertex_count(), 5);
        let o = q.as_path_orientation().unwrap();
        assert_eq!(o.to_string(), ">>>>");
    }

    #[test]
    fn star_111_three_arrows_out_of_center() {
        let shape = StarShape::source(vec![1, 1, 1]).unwrap();
        let q = Quiver::star(&shape);
        assert_eq!(q.vertex_count(), 4);
        assert_eq!(q.arrows(), &[(1, 2), (1, 3), (1, 4)]);
        assert_eq!(q.sources(), vec![1]);
        assert_eq!(shape.vertex_label(1), "c");
        assert_eq!(shape.vertex_label(3), "v2,1");
    }

    #[test]
    fn star_11_n3_underlies_dynkin_d() {
        // Star(1,1,n-3) has the D_n diagram; only structural validation here.
        let shape = StarShape::source(vec![1, 1, 3]).unwrap();
        let q = Quiver::star(&shape);
        assert_eq!(q.vertex_count(), 6);
        assert!(Quiver::new(q.vertex_count(), q.arrows().to_vec()).is_ok());
        assert!(q.as_path_orientation().is_err());
    }

    #[test]
    fn cycles_and_disconnected_graphs_rejected() {
        assert!(matches!(
            Quiver::new(3, vec![(1, 2), (2, 3), (3, 1)]),
            Err(Error::InvalidQuiver(_))
        ));
        assert!(matches!(Quiver::new(3, vec![(1, 2)]), Err(Error::InvalidQuiver(_))));
        assert!(matches!(Quiver::new(2, vec![(1, 2), (1, 2)]), Err(Error::InvalidQuiver(_))));
    }
}
