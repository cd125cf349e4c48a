//! Chain products Ch(k1, ..., kr) and their symmetric chain decompositions.
//!
//! The decomposition is built by induction on factors: each symmetric chain C
//! of the partial product, crossed with Ch(k), splits into min(|C|, k+1)
//! "hook" chains. Hook j climbs the new coordinate from (C[j], 0) to
//! (C[j], k-j) and then climbs the old chain (C[j+1], k-j), ..., (C[last], k-j).
//! Symmetry is preserved because first and last degrees still sum to the new
//! rank; correctness is certified after the fact by `verify_scd`.

use crate::error::{Error, Result};
use crate::poset::{ChainDecomposition, FinitePoset, DEFAULT_MAX_ELEMENTS};

/// Number of elements of Ch(ks), or `None` on overflow.
pub fn chain_product_size(ks: &[u32]) -> Option<usize> {
    ks.iter().try_fold(1usize, |acc, &k| acc.checked_mul(k as usize + 1))
}

/// Mixed-radix encoding of a tuple, first coordinate most significant.
pub fn index_of_tuple(ks: &[u32], tuple: &[u32]) -> usize {
    debug_assert_eq!(ks.len(), tuple.len());
    let mut idx = 0usize;
    for (&k, &a) in ks.iter().zip(tuple) {
        debug_assert!(a <= k);
        idx = idx * (k as usize + 1) + a as usize;
    }
    idx
}

/// Inverse of [`index_of_tuple`].
pub fn tuple_of_index(ks: &[u32], mut idx: usize) -> Vec<u32> {
    let mut tuple = vec![0u32; ks.len()];
    for (pos, &k) in ks.iter().enumerate().rev() {
        let base = k as usize + 1;
        tuple[pos] = (idx % base) as u32;
        idx /= base;
    }
    tuple
}

fn tuple_label(tuple: &[u32]) -> String {
    let mut s = String::from("(");
    for (i, a) in tuple.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&a.to_string());
    }
    s.push(')');
    s
}

/// The chain product poset: tuples 0 <= a_i <= k_i under componentwise
/// dominance, graded by coordinate sum.
pub fn chain_product(ks: &[u32]) -> Result<FinitePoset> {
    chain_product_capped(ks, DEFAULT_MAX_ELEMENTS)
}

pub fn chain_product_capped(ks: &[u32], cap: usize) -> Result<FinitePoset> {
    let n = chain_product_size(ks)
        .filter(|&n| n <= cap)
        .ok_or(Error::SizeLimit { requested: usize::MAX, cap })?;
    let tuples: Vec<Vec<u32>> = (0..n).map(|i| tuple_of_index(ks, i)).collect();
    let labels = tuples.iter().map(|t| tuple_label(t)).collect();
    let mut leq = crate::bits::BitMatrix::zero(n);
    for (i, ti) in tuples.iter().enumerate() {
        for (j, tj) in tuples.iter().enumerate() {
            if ti.iter().zip(tj).all(|(a, b)| a <= b) {
                leq.set(i, j, true);
            }
        }
    }
    let grading = tuples.iter().map(|t| t.iter().sum()).collect();
    FinitePoset::from_closed_matrix(labels, leq, Some(grading))
}

/// Symmetric chains of Ch(ks) as element indices, ascending within each
/// chain. Appending a coordinate y to a partial tuple is `idx * (k+1) + y`
/// in the mixed-radix encoding, so the whole construction runs on indices.
fn scd_index_chains(ks: &[u32]) -> Vec<Vec<usize>> {
    let mut chains: Vec<Vec<usize>> = vec![vec![0]];
    for &k in ks {
        let base = k as usize + 1;
        let mut next = Vec::with_capacity(chains.len());
        for chain in &chains {
            let h = chain.len();
            for j in 0..h.min(base) {
                let top = k as usize - j;
                let mut hook = Vec::with_capacity(top + 1 + (h - j - 1));
                for y in 0..=top {
                    hook.push(chain[j] * base + y);
                }
                for &item in chain.iter().skip(j + 1) {
                    hook.push(item * base + top);
                }
                next.push(hook);
            }
        }
        chains = next;
    }
    chains
}

/// Symmetric chains of Ch(ks) as tuples, ascending within each chain.
pub fn scd_tuple_chains(ks: &[u32]) -> Vec<Vec<Vec<u32>>> {
    scd_index_chains(ks)
        .into_iter()
        .map(|chain| chain.into_iter().map(|i| tuple_of_index(ks, i)).collect())
        .collect()
}

/// Symmetric chain decomposition of Ch(ks), indices in the element order of
/// [`chain_product`].
pub fn scd_chain_product(ks: &[u32]) -> Result<ChainDecomposition> {
    scd_chain_product_capped(ks, DEFAULT_MAX_ELEMENTS)
}

pub fn scd_chain_product_capped(ks: &[u32], cap: usize) -> Result<ChainDecomposition> {
    chain_product_size(ks)
        .filter(|&n| n <= cap)
        .ok_or(Error::SizeLimit { requested: usize::MAX, cap })?;
    Ok(ChainDecomposition::new(scd_index_chains(ks)))
}

/// Level sizes of Ch(ks): coefficients of prod_i (1 + x + ... + x^{k_i}).
pub fn level_sizes(ks: &[u32]) -> Vec<u64> {
    let mut coeffs = vec![1u64];
    for &k in ks {
        let mut next = vec![0u64; coeffs.len() + k as usize];
        for (d, &c) in coeffs.iter().enumerate() {
            for a in 0..=k as usize {
                next[d + a] += c;
            }
        }
        coeffs = next;
    }
    coeffs
}

/// Size of the largest level (attained at the middle rank).
pub fn max_level_size(ks: &[u32]) -> u64 {
    level_sizes(ks).into_iter().max().unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dilworth::dilworth_width;

    #[test]
    fn single_chain() {
        let p = chain_product(&[3]).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(dilworth_width(&p).width, 1);
        let scd = scd_chain_product(&[3]).unwrap();
        assert_eq!(scd.num_chains(), 1);
        assert!(p.verify_scd(&scd).unwrap());
    }

    #[test]
    fn boolean_lattice_b3() {
        let p = chain_product(&[1, 1, 1]).unwrap();
        assert_eq!(p.len(), 8);
        assert_eq!(dilworth_width(&p).width, 3);
    }

    #[test]
    fn ch_2_3_width_is_middle_level() {
        let p = chain_product(&[2, 3]).unwrap();
        assert_eq!(p.len(), 12);
        // rank 5, levels 1,2,3,3,2,1; middle levels have 3 elements
        assert_eq!(level_sizes(&[2, 3]), vec![1, 2, 3, 3, 2, 1]);
        assert_eq!(dilworth_width(&p).width, 3);
    }

    #[test]
    fn scd_of_b2_has_chain_lengths_3_and_1() {
        let p = chain_product(&[1, 1]).unwrap();
        let scd = scd_chain_product(&[1, 1]).unwrap();
        assert!(p.verify_scd(&scd).unwrap());
        let mut lens: Vec<usize> = scd.chains().iter().map(Vec::len).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![1, 3]);
    }

    #[test]
    fn scd_of_b4_has_six_chains() {
        let p = chain_product(&[1, 1, 1, 1]).unwrap();
        let scd = scd_chain_product(&[1, 1, 1, 1]).unwrap();
        assert!(p.verify_scd(&scd).unwrap());
        assert_eq!(scd.num_chains(), 6);
        let mut lens: Vec<usize> = scd.chains().iter().map(Vec::len).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![1, 1, 3, 3, 3, 5]);
        assert_eq!(dilworth_width(&p).width, 6);
    }

    #[test]
    fn non_scd_split_fails_verification() {
        // Ch(1,1) split into two saturated but asymmetric chains.
        let p = chain_product(&[1, 1]).unwrap();
        let bad = crate::poset::ChainDecomposition::new(vec![
            vec![index_of_tuple(&[1, 1], &[0, 0]), index_of_tuple(&[1, 1], &[1, 0])],
            vec![index_of_tuple(&[1, 1], &[0, 1]), index_of_tuple(&[1, 1], &[1, 1])],
        ]);
        assert!(p.verify_chain_decomposition(&bad));
        assert!(!p.verify_scd(&bad).unwrap());
    }

    #[test]
    fn zero_length_factors_are_degenerate() {
        // Ch(0,2) has the same shape as Ch(2)
        let p = chain_product(&[0, 2]).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(dilworth_width(&p).width, 1);
        let scd = scd_chain_product(&[0, 2]).unwrap();
        assert_eq!(scd.num_chains(), 1);
        assert!(p.verify_scd(&scd).unwrap());
    }

    #[test]
    fn ch_2_3_is_sperner() {
        let p = chain_product(&[2, 3]).unwrap();
        let verdict = p.is_sperner().unwrap();
        assert!(verdict.is_sperner);
        assert_eq!(verdict.width, 3);
    }

    #[test]
    fn tuple_encoding_round_trip() {
        let ks = [2, 3, 1];
        for i in 0..chain_product_size(&ks).unwrap() {
            assert_eq!(index_of_tuple(&ks, &tuple_of_index(&ks, i)), i);
        }
    }

    #[test]
    fn size_limit_enforced() {
        assert!(matches!(
            chain_product_capped(&[99, 99, 99], 5000),
            Err(crate::error::Error::SizeLimit { .. })
        ));
    }
}
