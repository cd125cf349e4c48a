//! Quiver representations with values in pointed sets, their subrepresentation
//! posets, and the star-quiver chain-product isomorphism.
//!
//! Degrees count non-basepoint elements, so the zero representation sits at
//! degree 0. The raw cardinality |A| of each pointed set stays accessible via
//! [`PointedSet::cardinality`].

use std::fmt::Write as _;

use crate::bits::BitMatrix;
use crate::chains;
use crate::dilworth::dilworth_width;
use crate::error::{Error, Result};
use crate::poset::{FinitePoset, DEFAULT_MAX_ELEMENTS};
use crate::quiver::{CenterRole, Quiver, StarShape};

/// A pointed set with elements 0..cardinality and basepoint 0.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct PointedSet {
    cardinality: usize,
}

impl PointedSet {
    pub fn new(cardinality: usize) -> Result<PointedSet> {
        if cardinality == 0 {
            return Err(Error::Domain("a pointed set contains its basepoint".into()));
        }
        Ok(PointedSet { cardinality })
    }

    /// |A|, the paper-facing cardinality.
    pub fn cardinality(&self) -> usize {
        self.cardinality
    }

    /// Number of non-basepoint elements; this is what gradings count.
    pub fn dim(&self) -> usize {
        self.cardinality - 1
    }
}

/// A representation of a quiver in the category of pointed sets: a pointed
/// set per vertex and a basepoint-preserving map per arrow that is injective
/// away from the preimage of the basepoint.
#[derive(Clone, Debug)]
pub struct PointedRep {
    quiver: Quiver,
    sets: Vec<PointedSet>,
    /// maps[e][x] = image of element x along arrow e.
    maps: Vec<Vec<usize>>,
}

impl PointedRep {
    pub fn new(quiver: Quiver, sets: Vec<PointedSet>, maps: Vec<Vec<usize>>) -> Result<PointedRep> {
        if sets.len() != quiver.vertex_count() {
            return Err(Error::Domain(format!(
                "{} pointed sets for {} vertices",
                sets.len(),
                quiver.vertex_count()
            )));
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::Domain(format!(
                "{} maps for {} arrows",
                maps.len(),
                quiver.arrows().len()
            )));
        }
        for (e, &(src, tgt)) in quiver.arrows().iter().enumerate() {
            let table = &maps[e];
            if table.len() != sets[src - 1].cardinality() {
                return Err(Error::Domain(format!("map {e} has wrong domain size")));
            }
            if table.first() != Some(&0) {
                return Err(Error::Domain(format!("map {e} does not preserve the basepoint")));
            }
            let mut hit = vec![false; sets[tgt - 1].cardinality()];
            for &y in table {
                if y >= sets[tgt - 1].cardinality() {
                    return Err(Error::Domain(format!("map {e} leaves the codomain")));
                }
                if y != 0 {
                    if hit[y] {
                        return Err(Error::Domain(format!(
                            "map {e} is not injective off the basepoint preimage"
                        )));
                    }
                    hit[y] = true;
                }
            }
        }
        Ok(PointedRep { quiver, sets, maps })
    }

    /// The indecomposable with full support on a star quiver: a single
    /// non-basepoint element at every vertex, arrows acting identically.
    pub fn star_indecomposable(shape: &StarShape) -> PointedRep {
        let quiver = Quiver::star(shape);
        let sets = vec![PointedSet { cardinality: 2 }; quiver.vertex_count()];
        let maps = vec![vec![0, 1]; quiver.arrows().len()];
        PointedRep { quiver, sets, maps }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn sets(&self) -> &[PointedSet] {
        &self.sets
    }

    /// Total non-basepoint count over all vertices.
    pub fn total_dim(&self) -> usize {
        self.sets.iter().map(PointedSet::dim).sum()
    }

    /// Direct sum of representations of the same quiver: wedge of the
    /// pointed sets vertexwise, maps acting on each summand.
    pub fn direct_sum(&self, other: &PointedRep) -> Result<PointedRep> {
        if self.quiver != other.quiver {
            return Err(Error::Domain("direct sum needs the same quiver".into()));
        }
        let sets: Vec<PointedSet> = self
            .sets
            .iter()
            .zip(&other.sets)
            .map(|(a, b)| PointedSet { cardinality: a.cardinality + b.cardinality - 1 })
            .collect();
        // elements of the sum at vertex v: 0, then 1..card_a (from self),
        // then card_a..card_a+card_b-1 (from other, shifted)
        let mut maps = Vec::with_capacity(self.maps.len());
        for (e, &(src, _tgt)) in self.quiver.arrows().iter().enumerate() {
            let a_card = self.sets[src - 1].cardinality;
            let sum_card = sets[src - 1].cardinality;
            let mut table = vec![0usize; sum_card];
            for x in 1..a_card {
                table[x] = self.maps[e][x];
            }
            for x in 1..other.sets[src - 1].cardinality {
                let y = other.maps[e][x];
                table[a_card + x - 1] = if y == 0 {
                    0
                } else {
                    self.sets[self.quiver.arrows()[e].1 - 1].cardinality + y - 1
                };
            }
            maps.push(table);
        }
        Ok(PointedRep { quiver: self.quiver.clone(), sets, maps })
    }
}

/// A subrepresentation as one subset bitmask per vertex (bit 0, the
/// basepoint, always set).
pub type SubrepMasks = Vec<u32>;

/// The graded poset of all subrepresentations of a pointed representation.
#[derive(Clone, Debug)]
pub struct PointedSubrepPoset {
    subreps: Vec<SubrepMasks>,
    poset: FinitePoset,
}

impl PointedSubrepPoset {
    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn subreps(&self) -> &[SubrepMasks] {
        &self.subreps
    }

    fn dim_of(masks: &SubrepMasks) -> u32 {
        masks.iter().map(|m| m.count_ones() - 1).sum()
    }
}

fn masks_label(masks: &SubrepMasks, sets: &[PointedSet]) -> String {
    let mut s = String::from("{");
    let mut first = true;
    for (v, &m) in masks.iter().enumerate() {
        for x in 1..sets[v].cardinality() {
            if m >> x & 1 == 1 {
                if !first {
                    s.push(' ');
                }
                let _ = write!(s, "{}.{}", v + 1, x);
                first = false;
            }
        }
    }
    s.push('}');
    s
}

/// Enumerate all subrepresentations (vertexwise pointed subsets closed under
/// the arrow maps), ordered by componentwise containment and graded by
/// non-basepoint count.
pub fn enumerate_pointed_subreps(x: &PointedRep) -> Result<PointedSubrepPoset> {
    let total = x.total_dim();
    if total > 20 {
        return Err(Error::SizeLimit { requested: usize::MAX, cap: DEFAULT_MAX_ELEMENTS });
    }
    let nv = x.quiver().vertex_count();
    let mut subreps: Vec<SubrepMasks> = Vec::new();
    let mut masks: SubrepMasks = vec![1; nv];
    'outer: loop {
        if is_closed(x, &masks) {
            subreps.push(masks.clone());
        }
        // odometer over per-vertex subsets, last vertex fastest; subsets
        // containing the basepoint are exactly the odd masks
        for v in (0..nv).rev() {
            let full: u32 = ((1u32 << x.sets()[v].dim()) - 1) << 1 | 1;
            if masks[v] < full {
                masks[v] += 2;
                continue 'outer;
            }
            masks[v] = 1;
        }
        break;
    }
    if subreps.len() > DEFAULT_MAX_ELEMENTS {
        return Err(Error::SizeLimit { requested: subreps.len(), cap: DEFAULT_MAX_ELEMENTS });
    }
    let n = subreps.len();
    let mut leq = BitMatrix::zero(n);
    for (i, u) in subreps.iter().enumerate() {
        for (j, w) in subreps.iter().enumerate() {
            if u.iter().zip(w).all(|(a, b)| a & !b == 0) {
                leq.set(i, j, true);
            }
        }
    }
    let labels = subreps.iter().map(|m| masks_label(m, x.sets())).collect();
    let grading = subreps.iter().map(PointedSubrepPoset::dim_of).collect();
    let poset = FinitePoset::from_closed_matrix(labels, leq, Some(grading))?;
    Ok(PointedSubrepPoset { subreps, poset })
}

fn is_closed(x: &PointedRep, masks: &SubrepMasks) -> bool {
    for (e, &(src, tgt)) in x.quiver().arrows().iter().enumerate() {
        let m_src = masks[src - 1];
        let m_tgt = masks[tgt - 1];
        for elt in 1..x.sets()[src - 1].cardinality() {
            if m_src >> elt & 1 == 1 {
                let y = x.maps[e][elt];
                if y != 0 && m_tgt >> y & 1 == 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// For a source-centered star indecomposable X, check that the proper part
/// of its subrepresentation poset is order-isomorphic to the chain product
/// of the ray lengths, matching each subrepresentation to its tuple of
/// chosen-tail lengths.
pub fn verify_chain_product_iso(shape: &StarShape) -> Result<bool> {
    if shape.center_role() != CenterRole::Source {
        return Err(Error::Domain("chain-product isomorphism needs a source-centered star".into()));
    }
    let x = PointedRep::star_indecomposable(shape);
    let sp = enumerate_pointed_subreps(&x)?;
    let p = sp.poset();
    let maxima = p.maximal_elements();
    // X itself must be the unique maximum
    let full: SubrepMasks = x.sets().iter().map(|s| ((1u32 << s.dim()) - 1) << 1 | 1).collect();
    if maxima.len() != 1 || sp.subreps()[maxima[0]] != full {
        return Ok(false);
    }
    let top = maxima[0];
    let ks: Vec<u32> = shape.ray_lengths().iter().map(|&l| l as u32).collect();
    let proper: Vec<usize> = (0..p.len()).filter(|&i| i != top).collect();
    if Some(proper.len()) != chains::chain_product_size(&ks) {
        return Ok(false);
    }
    // tail-length tuple of each proper subrepresentation
    let mut tuple_of = vec![Vec::new(); p.len()];
    let mut seen = vec![false; proper.len()];
    for &i in &proper {
        let masks = &sp.subreps()[i];
        if masks[0] != 1 {
            return Ok(false); // a proper subrep cannot contain the center
        }
        let mut tuple = Vec::with_capacity(ks.len());
        for ray in 1..=shape.num_rays() {
            let len = shape.ray_lengths()[ray - 1];
            let mut count = 0u32;
            for pos in 1..=len {
                if masks[shape.ray_vertex(ray, pos) - 1] != 1 {
                    count += 1;
                }
            }
            tuple.push(count);
        }
        let idx = chains::index_of_tuple(&ks, &tuple);
        if seen[idx] {
            return Ok(false);
        }
        seen[idx] = true;
        tuple_of[i] = tuple;
    }
    // order bijection
    for &i in &proper {
        for &j in &proper {
            let dominance = tuple_of[i].iter().zip(&tuple_of[j]).all(|(a, b)| a <= b);
            if p.leq(i, j) != dominance {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Sperner verdict and width for the subrepresentation poset of the star
/// indecomposable: checks that no maximum antichain can contain X itself
/// (width exceeds 1 once there are two rays), that the width agrees with the
/// chain product's, and returns the level-vs-width Sperner verdict.
pub fn pointed_star_sperner(shape: &StarShape) -> Result<(bool, usize)> {
    let x = PointedRep::star_indecomposable(shape);
    let sp = enumerate_pointed_subreps(&x)?;
    let cert = dilworth_width(sp.poset());
    let verdict = sp.poset().is_sperner()?;
    let mut ok = verdict.is_sperner && verdict.width == cert.width;
    if shape.num_rays() >= 2 {
        // X is comparable to every subrepresentation, so an antichain
        // containing it is {X} alone; it is maximum only if width were 1.
        ok &= cert.width > 1;
    }
    let ks: Vec<u32> = shape.ray_lengths().iter().map(|&l| l as u32).collect();
    let scd = chains::scd_chain_product(&ks)?;
    ok &= scd.num_chains() == cert.width;
    Ok((ok, cert.width))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_rep_has_singleton_poset() {
        let q = Quiver::path(2, &crate::quiver::PathOrientation::parse(">").unwrap()).unwrap();
        let zero = PointedRep::new(
            q,
            vec![PointedSet::new(1).unwrap(), PointedSet::new(1).unwrap()],
            vec![vec![0]],
        )
        .unwrap();
        let sp = enumerate_pointed_subreps(&zero).unwrap();
        assert_eq!(sp.poset().len(), 1);
    }

    #[test]
    fn star_11_proper_part_is_b2() {
        let shape = StarShape::source(vec![1, 1]).unwrap();
        let x = PointedRep::star_indecomposable(&shape);
        let sp = enumerate_pointed_subreps(&x).unwrap();
        assert_eq!(sp.poset().len(), 5); // B_2 plus X on top
        assert!(verify_chain_product_iso(&shape).unwrap());
    }

    #[test]
    fn star_21_proper_part_is_ch_2_1() {
        let shape = StarShape::source(vec![2, 1]).unwrap();
        let x = PointedRep::star_indecomposable(&shape);
        let sp = enumerate_pointed_subreps(&x).unwrap();
        assert_eq!(sp.poset().len(), 7); // 6 chain-product elements plus X
        assert!(verify_chain_product_iso(&shape).unwrap());
    }

    #[test]
    fn single_ray_gives_a_chain() {
        let shape = StarShape::source(vec![3]).unwrap();
        let x = PointedRep::star_indecomposable(&shape);
        let sp = enumerate_pointed_subreps(&x).unwrap();
        assert_eq!(sp.poset().len(), 5); // 0 <= tail1 <= tail2 <= tail3 <= X
        assert_eq!(dilworth_width(sp.poset()).width, 1);
        let (ok, width) = pointed_star_sperner(&shape).unwrap();
        assert!(ok);
        assert_eq!(width, 1);
    }

    #[test]
    fn subrep_containing_center_is_everything() {
        let shape = StarShape::source(vec![2, 2]).unwrap();
        let x = PointedRep::star_indecomposable(&shape);
        let sp = enumerate_pointed_subreps(&x).unwrap();
        for masks in sp.subreps() {
            if masks[0] != 1 {
                assert!(masks.iter().all(|&m| m == 3), "center forces full support");
            }
        }
    }

    #[test]
    fn sperner_star_11_and_22() {
        assert_eq!(pointed_star_sperner(&StarShape::source(vec![1, 1]).unwrap()).unwrap(), (true, 2));
        assert_eq!(pointed_star_sperner(&StarShape::source(vec![2, 2]).unwrap()).unwrap(), (true, 3));
    }

    #[test]
    fn invalid_maps_rejected() {
        let q = Quiver::path(2, &crate::quiver::PathOrientation::parse(">").unwrap()).unwrap();
        let sets = vec![PointedSet::new(3).unwrap(), PointedSet::new(2).unwrap()];
        // two non-basepoint elements collide at 1
        assert!(PointedRep::new(q.clone(), sets.clone(), vec![vec![0, 1, 1]]).is_err());
        // basepoint not preserved
        assert!(PointedRep::new(q.clone(), sets.clone(), vec![vec![1, 0, 0]]).is_err());
        // collapsing to the basepoint is fine
        assert!(PointedRep::new(q, sets, vec![vec![0, 0, 1]]).is_ok());
    }

    #[test]
    fn direct_sum_poset_is_product() {
        let shape = StarShape::source(vec![1, 1]).unwrap();
        let x = PointedRep::star_indecomposable(&shape);
        let y = PointedRep::star_indecomposable(&shape);
        let sum = x.direct_sum(&y).unwrap();
        let p_sum = enumerate_pointed_subreps(&sum).unwrap();
        let px = enumerate_pointed_subreps(&x).unwrap();
        let py = enumerate_pointed_subreps(&y).unwrap();
        assert_eq!(p_sum.poset().len(), px.poset().len() * py.poset().len());
    }
}
