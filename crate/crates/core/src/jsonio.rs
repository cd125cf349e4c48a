//! JSON schema for posets and quivers:
//! `{"elements": [...], "leq": [[i,j], ...], "grading": [...] | null}` and
//! `{"n": int, "arrows": [[s,t], ...]}`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::poset::FinitePoset;
use crate::quiver::Quiver;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    /// All strict pairs (i, j) with element i < element j, sorted.
    pub leq: Vec<(usize, usize)>,
    pub grading: Option<Vec<u32>>,
}

pub fn poset_to_json(p: &FinitePoset) -> PosetJson {
    let mut leq = Vec::new();
    for i in 0..p.len() {
        for j in p.up_set(i) {
            if j != i {
                leq.push((i, j));
            }
        }
    }
    PosetJson {
        elements: p.labels().to_vec(),
        leq,
        grading: p.grading().map(<[u32]>::to_vec),
    }
}

pub fn poset_from_json(j: &PosetJson) -> Result<FinitePoset> {
    let p = FinitePoset::build_indexed(j.elements.clone(), &j.leq)?;
    match &j.grading {
        Some(g) => p.with_grading(g.clone()),
        None => Ok(p),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuiverJson {
    pub n: usize,
    pub arrows: Vec<(usize, usize)>,
}

pub fn quiver_to_json(q: &Quiver) -> QuiverJson {
    QuiverJson { n: q.vertex_count(), arrows: q.arrows().to_vec() }
}

pub fn quiver_from_json(j: &QuiverJson) -> Result<Quiver> {
    Quiver::new(j.n, j.arrows.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::chain_product;

    #[test]
    fn poset_round_trip() {
        let p = chain_product(&[1, 2]).unwrap();
        let json = poset_to_json(&p);
        let text = serde_json::to_string(&json).unwrap();
        let back: PosetJson = serde_json::from_str(&text).unwrap();
        let q = poset_from_json(&back).unwrap();
        assert_eq!(p.labels(), q.labels());
        for i in 0..p.len() {
            for j in 0..p.len() {
                assert_eq!(p.leq(i, j), q.leq(i, j));
            }
        }
        assert_eq!(p.grading(), q.grading());
    }

    #[test]
    fn quiver_round_trip() {
        let q = Quiver::path(3, &crate::quiver::PathOrientation::parse("<>").unwrap()).unwrap();
        let json = quiver_to_json(&q);
        let text = serde_json::to_string(&json).unwrap();
        assert_eq!(text, r#"{"n":3,"arrows":[[2,1],[2,3]]}"#);
        let back: QuiverJson = serde_json::from_str(&text).unwrap();
        assert_eq!(quiver_from_json(&back).unwrap(), q);
    }
}
