//! Finite posets: comparability matrices, gradings, covers, antichain and
//! chain-decomposition verification, direct products, Sperner verdicts.

use std::collections::BTreeMap;
use std::fmt;

use crate::bits::BitMatrix;
use crate::dilworth;
use crate::error::{Error, Result};

/// Default cap on poset sizes; constructions that would exceed it fail with
/// [`Error::SizeLimit`].
pub const DEFAULT_MAX_ELEMENTS: usize = 20_000;

/// Full transitivity / grading validation is `O(n^3 / 64)`, so it only runs
/// for posets up to this size. Larger posets come from constructors whose
/// relations are transitively closed by definition; that agreement is itself
/// property-tested at small sizes.
const VALIDATION_LIMIT: usize = 1_200;

/// A finite poset: labelled elements plus a reflexive, antisymmetric,
/// transitive comparability matrix, optionally graded.
#[derive(Clone)]
pub struct FinitePoset {
    labels: Vec<String>,
    /// leq.get(i, j) == true iff element i <= element j.
    leq: BitMatrix,
    /// Transpose of `leq`, for down-set queries.
    geq: BitMatrix,
    grading: Option<Vec<u32>>,
}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinitePoset")
            .field("len", &self.len())
            .field("graded", &self.grading.is_some())
            .finish()
    }
}

/// A set of pairwise incomparable element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Antichain {
    members: Vec<usize>,
}

impl Antichain {
    /// Sorts and deduplicates; incomparability is checked by
    /// [`FinitePoset::is_antichain`].
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Antichain { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// A list of chains, each a <=-ascending list of element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    chains: Vec<Vec<usize>>,
}

impl ChainDecomposition {
    pub fn new(chains: Vec<Vec<usize>>) -> Self {
        ChainDecomposition { chains }
    }

    pub fn chains(&self) -> &[Vec<usize>] {
        &self.chains
    }

    pub fn num_chains(&self) -> usize {
        self.chains.len()
    }

    pub fn total_elements(&self) -> usize {
        self.chains.iter().map(Vec::len).sum()
    }
}

/// Why a degree map fails to be a grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradingViolation {
    WrongLength { got: usize, want: usize },
    MinimalNotZero { element: usize, degree: u32 },
    CoverJump { lower: usize, upper: usize, lower_degree: u32, upper_degree: u32 },
}

impl fmt::Display for GradingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradingViolation::WrongLength { got, want } => {
                write!(f, "degree map has {got} entries, poset has {want}")
            }
            GradingViolation::MinimalNotZero { element, degree } => {
                write!(f, "minimal element {element} has degree {degree}, expected 0")
            }
            GradingViolation::CoverJump { lower, upper, lower_degree, upper_degree } => {
                write!(
                    f,
                    "cover ({lower}, {upper}) has degrees {lower_degree} -> {upper_degree}, expected +1"
                )
            }
        }
    }
}

/// Verdict of the level-vs-width Sperner test on a graded poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpernerVerdict {
    pub is_sperner: bool,
    /// Index of a largest level (smallest such index).
    pub level: usize,
    pub level_size: usize,
    pub width: usize,
}

impl FinitePoset {
    /// Build a poset from labels and a list of `lhs <= rhs` label pairs.
    ///
    /// The relation is reflexively and transitively closed; antisymmetry
    /// failures surface as [`Error::Cycle`].
    pub fn build(labels: Vec<String>, leq_pairs: &[(String, String)]) -> Result<FinitePoset> {
        let index = Self::label_index(&labels)?;
        let mut pairs = Vec::with_capacity(leq_pairs.len());
        for (lo, hi) in leq_pairs {
            let &i = index.get(lo.as_str()).ok_or_else(|| Error::UnknownLabel(lo.clone()))?;
            let &j = index.get(hi.as_str()).ok_or_else(|| Error::UnknownLabel(hi.clone()))?;
            pairs.push((i, j));
        }
        Self::build_indexed(labels, &pairs)
    }

    /// Same as [`FinitePoset::build`] with the relation given on indices.
    pub fn build_indexed(labels: Vec<String>, leq_pairs: &[(usize, usize)]) -> Result<FinitePoset> {
        Self::label_index(&labels)?;
        let n = labels.len();
        if n > DEFAULT_MAX_ELEMENTS {
            return Err(Error::SizeLimit { requested: n, cap: DEFAULT_MAX_ELEMENTS });
        }
        let mut leq = BitMatrix::zero(n);
        for &(i, j) in leq_pairs {
            if i >= n {
                return Err(Error::UnknownLabel(format!("#{i}")));
            }
            if j >= n {
                return Err(Error::UnknownLabel(format!("#{j}")));
            }
            leq.set(i, j, true);
        }
        leq.transitive_closure();
        Self::from_closed_matrix(labels, leq, None)
    }

    /// Wrap an already reflexive-transitive relation.
    ///
    /// Antisymmetry is always checked; transitivity and grading validity are
    /// checked up to [`VALIDATION_LIMIT`] elements.
    pub fn from_closed_matrix(
        labels: Vec<String>,
        mut leq: BitMatrix,
        grading: Option<Vec<u32>>,
    ) -> Result<FinitePoset> {
        let n = labels.len();
        assert_eq!(leq.size(), n, "relation size must match label count");
        if n > DEFAULT_MAX_ELEMENTS {
            return Err(Error::SizeLimit { requested: n, cap: DEFAULT_MAX_ELEMENTS });
        }
        for i in 0..n {
            leq.set(i, i, true);
        }
        let geq = leq.transpose();
        // antisymmetry
        for i in 0..n {
            for j in leq.iter_row(i) {
                if j > i && geq.get(i, j) {
                    return Err(Error::Cycle(labels[i].clone(), labels[j].clone()));
                }
            }
        }
        if n <= VALIDATION_LIMIT {
            if let Some((i, k, j)) = leq.transitivity_witness() {
                return Err(Error::Domain(format!(
                    "relation not transitive: {} <= {} <= {} but first/last incomparable",
                    labels[i], labels[k], labels[j]
                )));
            }
        }
        let poset = FinitePoset { labels, leq, geq, grading: None };
        match grading {
            None => Ok(poset),
            Some(deg) => poset.with_grading(deg),
        }
    }

    /// Attach a degree map, validating it (up to [`VALIDATION_LIMIT`]).
    pub fn with_grading(mut self, deg: Vec<u32>) -> Result<FinitePoset> {
        if deg.len() != self.len() {
            return Err(Error::BadGrading(
                GradingViolation::WrongLength { got: deg.len(), want: self.len() }.to_string(),
            ));
        }
        if self.len() <= VALIDATION_LIMIT {
            if let Err(v) = self.check_grading(&deg) {
                return Err(Error::BadGrading(v.to_string()));
            }
        }
        self.grading = Some(deg);
        Ok(self)
    }

    fn label_index(labels: &[String]) -> Result<BTreeMap<&str, usize>> {
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(index)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq.get(i, j)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq.get(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq.get(i, j) || self.leq.get(j, i)
    }

    /// Indices j with i <= j, ascending (includes i).
    pub fn up_set(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.leq.iter_row(i)
    }

    /// Indices j with j <= i, ascending (includes i).
    pub fn down_set(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.geq.iter_row(i)
    }

    pub fn grading(&self) -> Option<&[u32]> {
        self.grading.as_deref()
    }

    pub fn degree(&self, i: usize) -> Result<u32> {
        Ok(self.grading.as_ref().ok_or(Error::NotGraded)?[i])
    }

    /// Maximum degree of a graded poset.
    pub fn rank(&self) -> Result<u32> {
        let deg = self.grading.as_ref().ok_or(Error::NotGraded)?;
        Ok(deg.iter().copied().max().unwrap_or(0))
    }

    /// Elements per degree, indices ascending within each level.
    pub fn levels(&self) -> Result<Vec<Vec<usize>>> {
        let deg = self.grading.as_ref().ok_or(Error::NotGraded)?;
        let rank = self.rank()? as usize;
        let mut levels = vec![Vec::new(); rank + 1];
        for (i, &d) in deg.iter().enumerate() {
            levels[d as usize].push(i);
        }
        Ok(levels)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.geq.iter_row(i).all(|j| j == i)).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.leq.iter_row(i).all(|j| j == i)).collect()
    }

    /// `upper` covers `lower`: strictly above with nothing in between.
    pub fn is_cover(&self, lower: usize, upper: usize) -> bool {
        lower != upper
            && self.leq.get(lower, upper)
            && self.leq.row_and_count(lower, &self.geq, upper) == 2
    }

    /// All cover pairs `(lower, upper)`, i.e. the Hasse diagram edges,
    /// ordered by (lower, upper).
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in self.leq.iter_row(i) {
                if j != i && self.is_cover(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Check the graded-poset conditions for `deg`: minimal elements at
    /// degree 0 and covers raising degree by exactly 1.
    pub fn check_grading(&self, deg: &[u32]) -> std::result::Result<(), GradingViolation> {
        if deg.len() != self.len() {
            return Err(GradingViolation::WrongLength { got: deg.len(), want: self.len() });
        }
        for i in self.minimal_elements() {
            if deg[i] != 0 {
                return Err(GradingViolation::MinimalNotZero { element: i, degree: deg[i] });
            }
        }
        for (lo, hi) in self.covers() {
            if deg[hi] != deg[lo] + 1 {
                return Err(GradingViolation::CoverJump {
                    lower: lo,
                    upper: hi,
                    lower_degree: deg[lo],
                    upper_degree: deg[hi],
                });
            }
        }
        Ok(())
    }

    /// Are the given indices pairwise incomparable?
    pub fn is_antichain(&self, members: &[usize]) -> bool {
        for (pos, &i) in members.iter().enumerate() {
            for &j in &members[pos + 1..] {
                if i == j || self.comparable(i, j) {
                    return false;
                }
            }
        }
        true
    }

    /// Label-level antichain check; unknown labels are an error.
    pub fn verify_antichain(&self, labels: &[&str]) -> Result<bool> {
        let mut members = Vec::with_capacity(labels.len());
        for l in labels {
            members.push(self.index_of(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))?);
        }
        Ok(self.is_antichain(&members))
    }

    /// Is `d` a partition of the element set into <=-ascending chains?
    pub fn verify_chain_decomposition(&self, d: &ChainDecomposition) -> bool {
        let mut seen = vec![false; self.len()];
        let mut count = 0usize;
        for chain in d.chains() {
            if chain.is_empty() {
                return false;
            }
            for &i in chain {
                if i >= self.len() || seen[i] {
                    return false;
                }
                seen[i] = true;
                count += 1;
            }
            for w in chain.windows(2) {
                if !self.lt(w[0], w[1]) {
                    return false;
                }
            }
        }
        count == self.len()
    }

    /// Is `d` a symmetric chain decomposition: a chain decomposition whose
    /// chains are saturated with deg(first) + deg(last) = rank?
    pub fn verify_scd(&self, d: &ChainDecomposition) -> Result<bool> {
        let deg = self.grading.as_ref().ok_or(Error::NotGraded)?;
        let rank = self.rank()?;
        if !self.verify_chain_decomposition(d) {
            return Ok(false);
        }
        for chain in d.chains() {
            for w in chain.windows(2) {
                if !self.is_cover(w[0], w[1]) {
                    return Ok(false);
                }
            }
            let first = chain[0];
            let last = *chain.last().unwrap();
            if deg[first] + deg[last] != rank {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Level-vs-width Sperner test: Sperner iff some level size equals the
    /// Dilworth width.
    pub fn is_sperner(&self) -> Result<SpernerVerdict> {
        let levels = self.levels()?;
        let (level, level_size) = levels
            .iter()
            .enumerate()
            .map(|(i, l)| (i, l.len()))
            .max_by_key(|&(i, len)| (len, std::cmp::Reverse(i)))
            .unwrap_or((0, 0));
        let width = dilworth::dilworth_width(self).width;
        Ok(SpernerVerdict { is_sperner: width == level_size, level, level_size, width })
    }

    /// Product order on pairs, graded by degree sums when both factors are.
    pub fn direct_product(&self, other: &FinitePoset) -> Result<FinitePoset> {
        self.direct_product_capped(other, DEFAULT_MAX_ELEMENTS)
    }

    pub fn direct_product_capped(&self, other: &FinitePoset, cap: usize) -> Result<FinitePoset> {
        let n = self
            .len()
            .checked_mul(other.len())
            .filter(|&n| n <= cap)
            .ok_or(Error::SizeLimit { requested: usize::MAX, cap })?;
        let mut labels = Vec::with_capacity(n);
        for a in 0..self.len() {
            for b in 0..other.len() {
                labels.push(format!("({}|{})", self.labels[a], other.labels[b]));
            }
        }
        let mut leq = BitMatrix::zero(n);
        let stride = other.len();
        for a in 0..self.len() {
            for b in 0..other.len() {
                let i = a * stride + b;
                for c in self.leq.iter_row(a) {
                    for d in other.leq.iter_row(b) {
                        leq.set(i, c * stride + d, true);
                    }
                }
            }
        }
        let grading = match (&self.grading, &other.grading) {
            (Some(ga), Some(gb)) => {
                let mut g = Vec::with_capacity(n);
                for a in 0..self.len() {
                    for b in 0..other.len() {
                        g.push(ga[a] + gb[b]);
                    }
                }
                Some(g)
            }
            _ => None,
        };
        FinitePoset::from_closed_matrix(labels, leq, grading)
    }
}
