//! The subrepresentation poset of V = P_1^a over F_q for the quiver 1 -> 2.
//!
//! Since the arrow map of P_1^a is the identity on k^a, a subrepresentation
//! is exactly a flag X_1 <= X_2 of subspaces of k^a, ordered componentwise
//! and graded by total dimension.

use std::fmt;

use num::bigint::BigInt;

use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::fq::{all_subspaces, gaussian_binomial, PrimeField, Subspace};
use crate::poset::{FinitePoset, DEFAULT_MAX_ELEMENTS};

/// A subrepresentation of P_1^a: a pair of nested subspaces.
#[derive(Clone, PartialEq, Eq)]
pub struct Flag {
    x1: Subspace,
    x2: Subspace,
}

impl Flag {
    pub fn new(field: &PrimeField, x1: Subspace, x2: Subspace) -> Result<Flag> {
        if !x2.contains(field, &x1)? {
            return Err(Error::Domain("flag needs x1 <= x2".into()));
        }
        Ok(Flag { x1, x2 })
    }

    pub fn x1(&self) -> &Subspace {
        &self.x1
    }

    pub fn x2(&self) -> &Subspace {
        &self.x2
    }

    pub fn d1(&self) -> usize {
        self.x1.dim()
    }

    pub fn d2(&self) -> usize {
        self.x2.dim()
    }

    pub fn total_dim(&self) -> usize {
        self.d1() + self.d2()
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} <= {})", self.x1, self.x2)
    }
}

impl fmt::Debug for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The graded subrepresentation poset of P_1^a over F_q.
#[derive(Clone, Debug)]
pub struct SubrepPoset {
    a: usize,
    field: PrimeField,
    flags: Vec<Flag>,
    poset: FinitePoset,
}

impl SubrepPoset {
    pub fn a(&self) -> usize {
        self.a
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.q()
    }

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    /// Poset rank; equals 2a, the dimension of V.
    pub fn rank(&self) -> u32 {
        2 * self.a as u32
    }
}

/// Number of flags, computed from Gaussian binomials without enumerating.
pub fn flag_count(a: usize, q: u64) -> Result<BigInt> {
    let mut total = BigInt::from(0);
    for d2 in 0..=a as u64 {
        for d1 in 0..=d2 {
            total += gaussian_binomial(a as u64, d2, q)? * gaussian_binomial(d2, d1, q)?;
        }
    }
    Ok(total)
}

/// All flags (X_1 <= X_2) in F_q^a, deterministic order: X_2 by dimension
/// then enumeration order, X_1 likewise within each X_2.
pub fn enumerate_flags(a: usize, q: u64) -> Result<Vec<Flag>> {
    let field = PrimeField::new(q)?;
    let count = flag_count(a, q)?;
    if count > BigInt::from(DEFAULT_MAX_ELEMENTS) {
        return Err(Error::SizeLimit { requested: usize::MAX, cap: DEFAULT_MAX_ELEMENTS });
    }
    let subs = all_subspaces(a, &field)?;
    let mut flags = Vec::new();
    for x2 in &subs {
        for x1 in &subs {
            if x1.dim() <= x2.dim() && x2.contains(&field, x1)? {
                flags.push(Flag { x1: x1.clone(), x2: x2.clone() });
            }
        }
    }
    debug_assert_eq!(BigInt::from(flags.len()), count);
    Ok(flags)
}

/// Build the subrepresentation poset: componentwise containment order,
/// graded by total dimension.
pub fn subrep_poset(a: usize, q: u64) -> Result<SubrepPoset> {
    let field = PrimeField::new(q)?;
    let flags = enumerate_flags(a, q)?;
    let n = flags.len();
    let mut leq = BitMatrix::zero(n);
    for (i, fi) in flags.iter().enumerate() {
        for (j, fj) in flags.iter().enumerate() {
            if fj.x2.contains(&field, &fi.x2)? && fj.x1.contains(&field, &fi.x1)? {
                leq.set(i, j, true);
            }
        }
    }
    let labels = flags.iter().map(|f| f.to_string()).collect();
    let grading = flags.iter().map(|f| f.total_dim() as u32).collect();
    let poset = FinitePoset::from_closed_matrix(labels, leq, Some(grading))?;
    Ok(SubrepPoset { a, field, flags, poset })
}

/// The computational content of the grading proposition: every cover pair
/// differs by total dimension exactly one (the quotient is simple).
pub fn check_cover_is_simple_quotient(p: &SubrepPoset) -> bool {
    let deg: Vec<u32> = p.flags.iter().map(|f| f.total_dim() as u32).collect();
    covers_raise_degree_by_one(p.poset(), &deg)
}

/// Shared check: all covers of `p` raise `deg` by exactly one.
pub fn covers_raise_degree_by_one(p: &FinitePoset, deg: &[u32]) -> bool {
    p.covers().iter().all(|&(lo, hi)| deg[hi] == deg[lo] + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dilworth::dilworth_width;

    #[test]
    fn a1_is_a_three_chain() {
        let sp = subrep_poset(1, 2).unwrap();
        assert_eq!(sp.poset().len(), 3);
        assert_eq!(dilworth_width(sp.poset()).width, 1);
        let labels: Vec<&str> = (0..3).map(|i| sp.poset().label(i)).collect();
        assert_eq!(labels, vec!["(0 <= 0)", "(0 <= 1)", "(1 <= 1)"]);
    }

    #[test]
    fn a2_q5_has_21_flags_and_width_7() {
        let sp = subrep_poset(2, 5).unwrap();
        assert_eq!(sp.poset().len(), 21);
        let levels = sp.poset().levels().unwrap();
        let sizes: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 6, 7, 6, 1]);
        assert_eq!(dilworth_width(sp.poset()).width, 7);
    }

    #[test]
    fn a2_q2_layer_sizes() {
        let sp = subrep_poset(2, 2).unwrap();
        assert_eq!(sp.poset().len(), 12);
        let sizes: Vec<usize> =
            sp.poset().levels().unwrap().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 3, 4, 3, 1]);
        assert_eq!(dilworth_width(sp.poset()).width, 4);
    }

    #[test]
    fn flag_count_formula_matches_enumeration() {
        for (a, q) in [(1usize, 2u64), (2, 2), (2, 3), (2, 5), (3, 2)] {
            let flags = enumerate_flags(a, q).unwrap();
            assert_eq!(BigInt::from(flags.len()), flag_count(a, q).unwrap(), "a={a} q={q}");
        }
    }

    #[test]
    fn grading_is_valid() {
        for (a, q) in [(2usize, 2u64), (2, 3), (2, 5)] {
            let sp = subrep_poset(a, q).unwrap();
            let deg: Vec<u32> = sp.flags().iter().map(|f| f.total_dim() as u32).collect();
            assert!(sp.poset().check_grading(&deg).is_ok(), "a={a} q={q}");
            assert!(check_cover_is_simple_quotient(&sp));
        }
    }

    #[test]
    fn corrupted_poset_fails_cover_dimension_check() {
        // Drop one middle element of the a=1 chain: the remaining cover
        // jumps two dimensions.
        let sp = subrep_poset(1, 2).unwrap();
        let keep: Vec<usize> = vec![0, 2];
        let labels: Vec<String> = keep.iter().map(|&i| sp.poset().label(i).to_string()).collect();
        let deg: Vec<u32> = keep.iter().map(|&i| sp.flags()[i].total_dim() as u32).collect();
        let p = FinitePoset::build(labels.clone(), &[(labels[0].clone(), labels[1].clone())]).unwrap();
        assert!(!covers_raise_degree_by_one(&p, &deg));
    }

    #[test]
    fn size_guard_rejects_huge_grids() {
        assert!(matches!(subrep_poset(4, 7), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn flag_requires_containment() {
        let field = PrimeField::new(5).unwrap();
        let line = Subspace::from_rows(&field, 2, &[vec![1, 0]]).unwrap();
        let other = Subspace::from_rows(&field, 2, &[vec![0, 1]]).unwrap();
        assert!(Flag::new(&field, line.clone(), other).is_err());
        assert!(Flag::new(&field, line.clone(), line).is_ok());
    }
}
