//! Up/down operators on graded posets as exact rational matrices, the
//! type-A2 commutator identity, and the Sperner certificate via injectivity
//! of the operators (rank fullness in exact arithmetic).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fq::gaussian_int;
use crate::poset::FinitePoset;
use crate::subrep::SubrepPoset;

/// Dense matrix of arbitrary-precision rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> RationalMatrix {
        RationalMatrix { rows, cols, entries: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> RationalMatrix {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> BigRational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        RationalMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> RationalMatrix {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let cur = out.get(r, c) + a * b;
                        out.set(r, c, cur);
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - other.get(r, c))
    }

    /// Is this the diagonal matrix with the given diagonal?
    pub fn is_diagonal_with(&self, diag: &[BigRational]) -> bool {
        if self.rows != self.cols || diag.len() != self.rows {
            return false;
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                let want = if r == c { diag[r].clone() } else { BigRational::zero() };
                if *self.get(r, c) != want {
                    return false;
                }
            }
        }
        true
    }
}

/// Exact rank by fraction-free (Bareiss) elimination over the integers,
/// after clearing denominators row by row.
pub fn rational_rank(m: &RationalMatrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(m.rows);
    for r in 0..m.rows {
        let mut lcm = BigInt::one();
        for c in 0..m.cols {
            lcm = num::Integer::lcm(&lcm, m.get(r, c).denom());
        }
        a.push((0..m.cols).map(|c| m.get(r, c).numer() * (&lcm / m.get(r, c).denom())).collect());
    }
    integer_rank(a, m.cols)
}

fn integer_rank(mut a: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let rows = a.len();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                let (quot, rem) = num::Integer::div_rem(&num, &prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                a[r][c] = quot;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

fn level_sizes(p: &FinitePoset) -> Result<Vec<Vec<usize>>> {
    p.levels()
}

/// The up operator U_i as a |P_{i+1}| x |P_i| 0/1 matrix: column of X has a
/// one at each Y in level i+1 with Y >= X. Requires 0 <= i < rank.
pub fn up_matrix(p: &FinitePoset, i: usize) -> Result<RationalMatrix> {
    let rank = p.rank()? as usize;
    if i >= rank {
        return Err(Error::Domain(format!("up operator needs level < rank, got {i} of {rank}")));
    }
    Ok(up_or_empty(p, &level_sizes(p)?, i))
}

/// The down operator D_i as a |P_{i-1}| x |P_i| 0/1 matrix. Requires
/// 0 < i <= rank.
pub fn down_matrix(p: &FinitePoset, i: usize) -> Result<RationalMatrix> {
    let rank = p.rank()? as usize;
    if i == 0 || i > rank {
        return Err(Error::Domain(format!("down operator needs 0 < level <= rank, got {i}")));
    }
    Ok(down_or_empty(p, &level_sizes(p)?, i))
}

fn up_or_empty(p: &FinitePoset, levels: &[Vec<usize>], i: usize) -> RationalMatrix {
    let src = levels.get(i).map(Vec::as_slice).unwrap_or(&[]);
    let dst = levels.get(i + 1).map(Vec::as_slice).unwrap_or(&[]);
    RationalMatrix::from_fn(dst.len(), src.len(), |r, c| {
        if p.leq(src[c], dst[r]) {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    })
}

fn down_or_empty(p: &FinitePoset, levels: &[Vec<usize>], i: usize) -> RationalMatrix {
    let src = levels.get(i).map(Vec::as_slice).unwrap_or(&[]);
    let dst = if i == 0 { &[][..] } else { levels.get(i - 1).map(Vec::as_slice).unwrap_or(&[]) };
    RationalMatrix::from_fn(dst.len(), src.len(), |r, c| {
        if p.leq(dst[r], src[c]) {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    })
}

/// The commutator D_{i+1} U_i - U_{i-1} D_i on level i, with operators out
/// of range treated as zero.
pub fn commutator(p: &FinitePoset, i: usize) -> Result<RationalMatrix> {
    let levels = level_sizes(p)?;
    let rank = p.rank()? as usize;
    let ni = levels.get(i).map_or(0, Vec::len);
    let du = if i < rank {
        down_or_empty(p, &levels, i + 1).mul(&up_or_empty(p, &levels, i))
    } else {
        RationalMatrix::zero(ni, ni)
    };
    let ud = if i > 0 {
        up_or_empty(p, &levels, i - 1).mul(&down_or_empty(p, &levels, i))
    } else {
        RationalMatrix::zero(ni, ni)
    };
    Ok(du.sub(&ud))
}

/// Check the A2 commutator identity at level i of a subrepresentation poset:
/// (D_{i+1} U_i - U_{i-1} D_i)(X) = ([a - d2]_q - [d1]_q) X for every flag X.
pub fn verify_commutator(sp: &SubrepPoset, i: usize) -> Result<bool> {
    let p = sp.poset();
    let levels = p.levels()?;
    let q = sp.q();
    let a = sp.a() as u64;
    let diag: Vec<BigRational> = levels
        .get(i)
        .map(Vec::as_slice)
        .unwrap_or(&[])
        .iter()
        .map(|&idx| {
            let flag = &sp.flags()[idx];
            let val = gaussian_int(a - flag.d2() as u64, q) - gaussian_int(flag.d1() as u64, q);
            BigRational::from_integer(val)
        })
        .collect();
    Ok(commutator(p, i)?.is_diagonal_with(&diag))
}

/// Stanley's certificate: U_i has full column rank for 0 <= i < k and D_i
/// has full column rank for k < i <= rank. When true, the poset is Sperner
/// with level k a maximum antichain.
pub fn stanley_certificate(p: &FinitePoset, k: usize) -> Result<bool> {
    let rank = p.rank()? as usize;
    if k > rank {
        return Err(Error::Domain(format!("level {k} exceeds rank {rank}")));
    }
    let levels = level_sizes(p)?;
    for i in 0..k {
        let u = up_or_empty(p, &levels, i);
        if rational_rank(&u) != levels[i].len() {
            return Ok(false);
        }
    }
    for i in k + 1..=rank {
        let d = down_or_empty(p, &levels, i);
        if rational_rank(&d) != levels[i].len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The strict inequalities the injectivity proof rests on: for i < a every
/// level-i flag has [a-d2]_q > [d1]_q, and dually [d1]_q > [a-d2]_q for
/// i > a, making the commutator diagonal positive (resp. negative) definite.
pub fn verify_positivity_argument(sp: &SubrepPoset) -> Result<bool> {
    let p = sp.poset();
    let levels = p.levels()?;
    let q = sp.q();
    let a = sp.a();
    for (i, level) in levels.iter().enumerate() {
        if i == a {
            continue; // middle level: the proof makes no claim here
        }
        for &idx in level {
            let flag = &sp.flags()[idx];
            let up = gaussian_int((a - flag.d2()) as u64, q);
            let down = gaussian_int(flag.d1() as u64, q);
            let diff = up - down;
            if i < a && !diff.is_positive() {
                return Ok(false);
            }
            if i > a && !(-diff).is_positive() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
