//! Prime fields F_q, canonical reduced-row-echelon subspaces, and Gaussian
//! integers / binomial coefficients counting them.

use std::fmt;

use num::bigint::BigInt;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::poset::DEFAULT_MAX_ELEMENTS;

/// The field F_q for a prime q; elements are 0..q-1.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    q: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(q: u64) -> Result<PrimeField> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(PrimeField { q })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.q - b) % self.q
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.q
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 { 0 } else { self.q - a }
    }

    /// Multiplicative inverse by Fermat's little theorem.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.q != 0, "inverse of zero");
        self.pow(a, self.q - 2)
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

/// The Gaussian integer [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
pub fn gaussian_int(n: u64, q: u64) -> BigInt {
    assert!(q >= 2, "gaussian integers need q >= 2");
    let q = BigInt::from(q);
    let mut acc = BigInt::zero();
    let mut pow = BigInt::one();
    for _ in 0..n {
        acc += &pow;
        pow *= &q;
    }
    acc
}

/// The Gaussian binomial coefficient counting d-dimensional subspaces of
/// F_q^n, computed by the product formula rather than giant factorials.
pub fn gaussian_binomial(n: u64, d: u64, q: u64) -> Result<BigInt> {
    if d > n {
        return Err(Error::Domain(format!("gaussian binomial needs d <= n, got ({n}, {d}))")));
    }
    assert!(q >= 2, "gaussian binomials need q >= 2");
    // prod_{i=1..d} (q^(n-d+i) - 1) / (q^i - 1)
    let q = BigInt::from(q);
    let mut numer = BigInt::one();
    let mut denom = BigInt::one();
    for i in 1..=d {
        numer *= num::pow::pow(q.clone(), (n - d + i) as usize) - BigInt::one();
        denom *= num::pow::pow(q.clone(), i as usize) - BigInt::one();
    }
    let (quot, rem) = num::Integer::div_rem(&numer, &denom);
    debug_assert!(rem.is_zero(), "gaussian binomial division is exact");
    Ok(quot)
}

/// A subspace of F_q^a in canonical reduced row echelon form: unique basis
/// per subspace, so equality of subspaces is equality of representations.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Subspace {
        let rows = (0..ambient)
            .map(|i| {
                let mut r = vec![0u64; ambient];
                r[i] = 1;
                r
            })
            .collect();
        Subspace { ambient, rows, pivots: (0..ambient).collect() }
    }

    /// Span of arbitrary rows, canonicalized to RREF.
    pub fn from_rows(field: &PrimeField, ambient: usize, rows: &[Vec<u64>]) -> Result<Subspace> {
        for r in rows {
            if r.len() != ambient {
                return Err(Error::AmbientMismatch(r.len(), ambient));
            }
        }
        let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| x % field.q()).collect()).collect();
        let mut pivots = Vec::new();
        let mut rank = 0usize;
        for col in 0..ambient {
            let Some(pivot_row) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot_row);
            let inv = field.inv(m[rank][col]);
            for x in m[rank].iter_mut() {
                *x = field.mul(*x, inv);
            }
            for r in 0..m.len() {
                if r != rank && m[r][col] != 0 {
                    let factor = m[r][col];
                    for c in 0..ambient {
                        let sub = field.mul(factor, m[rank][c]);
                        m[r][c] = field.sub(m[r][c], sub);
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        m.truncate(rank);
        Ok(Subspace { ambient, rows: m, pivots })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Reduce `v` against this RREF basis in place; `v` becomes zero iff it
    /// lies in the subspace.
    pub fn reduce_vector(&self, field: &PrimeField, v: &mut [u64]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p] != 0 {
                let factor = v[p];
                for c in 0..self.ambient {
                    let sub = field.mul(factor, row[c]);
                    v[c] = field.sub(v[c], sub);
                }
            }
        }
    }

    /// Containment test: every basis row of `other` reduces to zero here.
    pub fn contains(&self, field: &PrimeField, other: &Subspace) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(other.ambient, self.ambient));
        }
        if other.dim() > self.dim() {
            return Ok(false);
        }
        for row in &other.rows {
            let mut v = row.clone();
            self.reduce_vector(field, &mut v);
            if v.iter().any(|&x| x != 0) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "0");
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            for &x in row {
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace<{}^{}>({})", self.dim(), self.ambient, self)
    }
}

impl Subspace {
    /// Serialize as ambient dimension plus row-major digit rows, e.g.
    /// `"3:100,010"`; the zero space of F^3 is `"3:"`.
    pub fn serialize(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>().join("."))
            .collect();
        format!("{}:{}", self.ambient, rows.join(","))
    }

    /// Inverse of [`Subspace::serialize`]; re-canonicalizes over the field.
    pub fn parse(field: &PrimeField, s: &str) -> Result<Subspace> {
        let bad = || Error::Parse(format!("subspace `{s}`"));
        let (ambient, rest) = s.split_once(':').ok_or_else(bad)?;
        let ambient: usize = ambient.parse().map_err(|_| bad())?;
        let mut rows = Vec::new();
        for row in rest.split(',').filter(|r| !r.is_empty()) {
            let entries: std::result::Result<Vec<u64>, _> =
                row.split('.').map(str::parse).collect();
            rows.push(entries.map_err(|_| bad())?);
        }
        Subspace::from_rows(field, ambient, &rows)
    }
}

/// Is `u <= v` as subspaces of the same ambient space?
pub fn subspace_leq(field: &PrimeField, u: &Subspace, v: &Subspace) -> Result<bool> {
    v.contains(field, u)
}

/// All d-dimensional subspaces of F_q^a in canonical RREF, enumerated
/// lexicographically by pivot-column set and then by free entries.
pub fn subspaces(a: usize, field: &PrimeField, d: usize) -> Result<Vec<Subspace>> {
    if d > a {
        return Err(Error::Domain(format!("subspace dimension {d} exceeds ambient {a}")));
    }
    let count = gaussian_binomial(a as u64, d as u64, field.q())?;
    if count > BigInt::from(DEFAULT_MAX_ELEMENTS) {
        return Err(Error::SizeLimit { requested: usize::MAX, cap: DEFAULT_MAX_ELEMENTS });
    }
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..d).collect();
    loop {
        emit_for_pivots(a, field, &pivots, &mut out);
        // next lexicographic d-combination of 0..a
        let mut i = d;
        loop {
            if i == 0 {
                let expected: BigInt = count;
                debug_assert_eq!(BigInt::from(out.len()), expected);
                return Ok(out);
            }
            i -= 1;
            if pivots[i] < a - (d - i) {
                pivots[i] += 1;
                for j in i + 1..d {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// All subspaces of F_q^a of every dimension, ascending by dimension.
pub fn all_subspaces(a: usize, field: &PrimeField) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for d in 0..=a {
        out.extend(subspaces(a, field, d)?);
    }
    Ok(out)
}

fn emit_for_pivots(a: usize, field: &PrimeField, pivots: &[usize], out: &mut Vec<Subspace>) {
    let d = pivots.len();
    // free positions: (row, col) with col > pivot(row), col not a pivot
    let mut free = Vec::new();
    for (r, &p) in pivots.iter().enumerate() {
        for c in p + 1..a {
            if !pivots.contains(&c) {
                free.push((r, c));
            }
        }
    }
    let q = field.q();
    let mut values = vec![0u64; free.len()];
    loop {
        let mut rows = vec![vec![0u64; a]; d];
        for (r, &p) in pivots.iter().enumerate() {
            rows[r][p] = 1;
        }
        for (&(r, c), &v) in free.iter().zip(&values) {
            rows[r][c] = v;
        }
        out.push(Subspace { ambient: a, rows, pivots: pivots.to_vec() });
        // odometer over free values
        let mut i = free.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            values[i] += 1;
            if values[i] < q {
                break;
            }
            values[i] = 0;
        }
    }
}
