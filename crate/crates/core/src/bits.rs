//! Dense square bit matrix used for comparability relations.

const WORD: usize = 64;

/// Row-major square bit matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn zero(n: usize) -> Self {
        let words_per_row = n.div_ceil(WORD);
        BitMatrix {
            n,
            words_per_row,
            bits: vec![0; n * words_per_row],
        }
    }

    /// Identity relation on `n` elements.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n && j < self.n);
        let w = self.bits[i * self.words_per_row + j / WORD];
        (w >> (j % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i < self.n && j < self.n);
        let idx = i * self.words_per_row + j / WORD;
        let mask = 1u64 << (j % WORD);
        if v {
            self.bits[idx] |= mask;
        } else {
            self.bits[idx] &= !mask;
        }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    /// OR row `src` into row `dst`.
    fn or_row_into(&mut self, src: usize, dst: usize) {
        let (s, d) = (src * self.words_per_row, dst * self.words_per_row);
        for k in 0..self.words_per_row {
            let w = self.bits[s + k];
            self.bits[d + k] |= w;
        }
    }

    /// Reflexive-transitive closure in place (bitset Warshall).
    pub fn transitive_closure(&mut self) {
        for i in 0..self.n {
            self.set(i, i, true);
        }
        for k in 0..self.n {
            for i in 0..self.n {
                if self.get(i, k) {
                    self.or_row_into(k, i);
                }
            }
        }
    }

    /// Is the relation transitive? Returns a violating triple if not.
    pub fn transitivity_witness(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.n {
            for k in self.iter_row(i) {
                // row(i) must contain row(k)
                let ri = i * self.words_per_row;
                let rk = k * self.words_per_row;
                for w in 0..self.words_per_row {
                    let missing = self.bits[rk + w] & !self.bits[ri + w];
                    if missing != 0 {
                        let j = w * WORD + missing.trailing_zeros() as usize;
                        return Some((i, k, j));
                    }
                }
            }
        }
        None
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = Self::zero(self.n);
        for i in 0..self.n {
            for j in self.iter_row(i) {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Indices of set bits in row `i`, ascending.
    pub fn iter_row(&self, i: usize) -> RowIter<'_> {
        RowIter {
            words: self.row(i),
            word_idx: 0,
            current: if self.words_per_row > 0 { self.row(i)[0] } else { 0 },
            n: self.n,
        }
    }

    /// Number of indices j with both `a.get(row_a, j)` and `b.get(row_b, j)`.
    pub fn row_and_count(&self, row_a: usize, other: &BitMatrix, row_b: usize) -> usize {
        debug_assert_eq!(self.n, other.n);
        let ra = self.row(row_a);
        let rb = other.row(row_b);
        ra.iter().zip(rb).map(|(x, y)| (x & y).count_ones() as usize).sum()
    }
}

pub struct RowIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
    n: usize,
}

impl Iterator for RowIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                let j = self.word_idx * WORD + bit;
                return (j < self.n).then_some(j);
            }
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_infers_transitive_pairs() {
        let mut m = BitMatrix::zero(3);
        m.set(0, 1, true);
        m.set(1, 2, true);
        m.transitive_closure();
        assert!(m.get(0, 2));
        assert!(m.get(0, 0));
        assert!(m.transitivity_witness().is_none());
    }

    #[test]
    fn witness_finds_missing_pair() {
        let mut m = BitMatrix::identity(3);
        m.set(0, 1, true);
        m.set(1, 2, true);
        assert_eq!(m.transitivity_witness(), Some((0, 1, 2)));
    }

    #[test]
    fn row_iter_crosses_word_boundaries() {
        let mut m = BitMatrix::zero(130);
        m.set(5, 0, true);
        m.set(5, 63, true);
        m.set(5, 64, true);
        m.set(5, 129, true);
        let got: Vec<usize> = m.iter_row(5).collect();
        assert_eq!(got, vec![0, 63, 64, 129]);
    }
}
