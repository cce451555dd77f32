//! Exact linear algebra over `Q` and over prime fields `F_p`.
//!
//! Fields are passed as context values so that the prime of `F_p` can be
//! chosen at run time.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

pub trait Field: Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn describe(&self) -> String;

    /// `a - c * b`
    fn sub_mul(&self, a: &Self::Elem, c: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.sub(a, &self.mul(c, b))
    }
}

/// The rational numbers with arbitrary-precision numerators and denominators.
#[derive(Copy, Clone, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn describe(&self) -> String {
        "rational".to_string()
    }
}

/// `F_p` for a prime `p < 2^63`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Panics unless `p` is a prime below `2^63`.
    pub fn new(p: u64) -> PrimeField {
        assert!(
            p < 1 << 63 && primal_check::miller_rabin(p),
            "{p} is not a usable prime"
        );
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero in F_p");
        self.pow(*a, self.p - 2)
    }
    fn describe(&self) -> String {
        format!("F_{}", self.p)
    }
}

/// A uniformly random prime in `[2^61, 2^62)`.
pub fn random_prime<R: Rng + ?Sized>(rng: &mut R) -> u64 {
    loop {
        let candidate = rng.gen_range(1u64 << 61..1u64 << 62) | 1;
        if primal_check::miller_rabin(candidate) {
            return candidate;
        }
    }
}

/// Incrementally built row echelon basis of dense vectors.
///
/// Each stored row has a unit pivot and zeros at the pivots of all rows
/// stored before it.
pub struct Echelon<'f, F: Field> {
    field: &'f F,
    width: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<'f, F: Field> Echelon<'f, F> {
    pub fn new(field: &'f F, width: usize) -> Self {
        Echelon {
            field,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<F::Elem>> {
        self.rows
    }

    /// Reduces `v` by the current basis; returns the remainder.
    pub fn reduce(&self, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.width);
        let f = self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[pc]) {
                continue;
            }
            let c = v[pc].clone();
            for (x, r) in v.iter_mut().zip(row).skip(pc) {
                if !f.is_zero(r) {
                    *x = f.sub_mul(x, &c, r);
                }
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        let f = self.field;
        let mut v = self.reduce(v);
        let Some(pc) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[pc]);
        for x in v.iter_mut().skip(pc) {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        self.rows.push(v);
        self.pivots.push(pc);
        true
    }

    pub fn contains(&self, v: Vec<F::Elem>) -> bool {
        let f = self.field;
        self.reduce(v).iter().all(|x| f.is_zero(x))
    }
}

/// Rank of a dense row-major matrix.
pub fn dense_rank<F: Field>(field: &F, rows: Vec<Vec<F::Elem>>, width: usize) -> usize {
    let mut ech = Echelon::new(field, width);
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

/// Row echelon basis of sparse vectors, pivoting on the smallest column index.
pub struct SparseEchelon<'f, F: Field> {
    field: &'f F,
    pivots: HashMap<usize, Vec<(usize, F::Elem)>>,
}

impl<'f, F: Field> SparseEchelon<'f, F> {
    pub fn new(field: &'f F) -> Self {
        SparseEchelon {
            field,
            pivots: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Inserts a row given as `(column, value)` pairs sorted by column
    /// without duplicates. Returns whether the rank grew.
    pub fn insert(&mut self, mut row: Vec<(usize, F::Elem)>) -> bool {
        let f = self.field;
        row.retain(|(_, v)| !f.is_zero(v));
        while let Some((lead, coef)) = row.first().cloned() {
            match self.pivots.get(&lead) {
                Some(pivot) => row = axpy_sparse(f, &row, &coef, pivot),
                None => {
                    let inv = f.inv(&coef);
                    for (_, v) in row.iter_mut() {
                        *v = f.mul(v, &inv);
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
        false
    }
}

/// `row - c * pivot` for sorted sparse vectors, dropping zeros.
fn axpy_sparse<F: Field>(
    f: &F,
    row: &[(usize, F::Elem)],
    c: &F::Elem,
    pivot: &[(usize, F::Elem)],
) -> Vec<(usize, F::Elem)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut a, mut b) = (0, 0);
    while a < row.len() || b < pivot.len() {
        let ca = row.get(a).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = pivot.get(b).map(|e| e.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(row[a].clone());
            a += 1;
        } else if cb < ca {
            out.push((cb, f.neg(&f.mul(c, &pivot[b].1))));
            b += 1;
        } else {
            let v = f.sub_mul(&row[a].1, c, &pivot[b].1);
            if !f.is_zero(&v) {
                out.push((ca, v));
            }
            a += 1;
            b += 1;
        }
    }
    out
}

/// A sparse integer matrix; entries are unique per `(row, col)` and nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), i64>,
}

impl SparseIntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseIntMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for k in 0..size {
            m.entries.insert((k, k), 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries.get(&(r, c)).copied().unwrap_or(0)
    }

    /// Adds `v` at `(r, c)`; panics on `i64` overflow.
    pub fn add_entry(&mut self, r: usize, c: usize, v: i64) {
        assert!(r < self.rows && c < self.cols);
        let e = self.entries.entry((r, c)).or_insert(0);
        *e = e.checked_add(v).expect("integer entry overflow");
        if *e == 0 {
            self.entries.remove(&(r, c));
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.entries.iter().map(|(&(r, c), &v)| (r, c, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn add(&self, other: &SparseIntMatrix) -> SparseIntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_entry(r, c, v);
        }
        out
    }

    pub fn mul(&self, other: &SparseIntMatrix) -> SparseIntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut by_row: Vec<Vec<(usize, i64)>> = vec![Vec::new(); other.rows];
        for (r, c, v) in other.entries() {
            by_row[r].push((c, v));
        }
        let mut out = SparseIntMatrix::zeros(self.rows, other.cols);
        for (r, k, v) in self.entries() {
            for &(c, w) in &by_row[k] {
                out.add_entry(r, c, v.checked_mul(w).expect("integer entry overflow"));
            }
        }
        out
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.entries.values().map(|v| v.abs()).max().unwrap_or(0)
    }

    pub fn dense_rows<F: Field>(&self, field: &F) -> Vec<Vec<F::Elem>> {
        let mut out = vec![vec![field.zero(); self.cols]; self.rows];
        for (r, c, v) in self.entries() {
            out[r][c] = field.from_i64(v);
        }
        out
    }

    pub fn rank_over<F: Field>(&self, field: &F) -> usize {
        let mut by_row: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); self.rows];
        for (r, c, v) in self.entries() {
            by_row[r].push((c, field.from_i64(v)));
        }
        let mut ech = SparseEchelon::new(field);
        for row in by_row {
            ech.insert(row);
        }
        ech.rank()
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![0i64; self.rows];
        for (r, c, x) in self.entries() {
            out[r] += x * v[c];
        }
        out
    }

    /// Basis of the right kernel over `Q`, scaled to primitive integer vectors.
    pub fn integer_kernel(&self) -> Vec<Vec<i64>> {
        let q = Rationals;
        let mut rows = self.dense_rows(&q);
        // reduced row echelon form
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].recip();
            for x in rows[r].iter_mut() {
                *x *= &inv;
            }
            for k in 0..rows.len() {
                if k != r && !rows[k][c].is_zero() {
                    let factor = rows[k][c].clone();
                    let (pivot_row, target) = if k < r {
                        let (lo, hi) = rows.split_at_mut(r);
                        (&hi[0], &mut lo[k])
                    } else {
                        let (lo, hi) = rows.split_at_mut(k);
                        (&lo[r], &mut hi[0])
                    };
                    for (x, y) in target.iter_mut().zip(pivot_row) {
                        *x -= &factor * y;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[fc] = BigRational::one();
                for (row, &pc) in rows.iter().zip(&pivots) {
                    v[pc] = -row[fc].clone();
                }
                primitive_integer_vector(&v)
            })
            .collect()
    }
}

/// Clears denominators and content, making the first nonzero entry positive.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<i64> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.iter()
        .map(|x| {
            if g.is_zero() {
                0
            } else {
                (x * &sign / &g).to_i64().expect("kernel entry fits in i64")
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(1_000_000_007);
        let a = f.from_i64(-3);
        assert_eq!(f.add(&a, &3), 0);
        assert_eq!(f.mul(&f.inv(&a), &a), 1);
        assert_eq!(f.neg(&0), 0);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let p = random_prime(&mut rng);
        assert!((1u64 << 61..1u64 << 62).contains(&p));
        let big = PrimeField::new(p);
        let x = big.from_i64(123_456_789_012);
        assert_eq!(big.mul(&x, &big.inv(&x)), 1);
    }

    #[test]
    fn rank_agrees_across_fields() {
        // rank 2 over Q; rank 1 mod 2
        let mut m = SparseIntMatrix::zeros(2, 2);
        m.add_entry(0, 0, 1);
        m.add_entry(0, 1, 1);
        m.add_entry(1, 0, 1);
        m.add_entry(1, 1, -1);
        assert_eq!(m.rank_over(&Rationals), 2);
        assert_eq!(m.rank_over(&PrimeField::new(2)), 1);
        assert_eq!(m.rank_over(&PrimeField::new(1_000_000_007)), 2);
        assert_eq!(dense_rank(&Rationals, m.dense_rows(&Rationals), 2), 2);
    }

    #[test]
    fn kernel_of_singular_matrix() {
        let mut m = SparseIntMatrix::zeros(2, 3);
        m.add_entry(0, 0, 2);
        m.add_entry(0, 1, 4);
        m.add_entry(1, 2, 3);
        let ker = m.integer_kernel();
        assert_eq!(ker, vec![vec![2, -1, 0]]);
        assert!(m.apply(&ker[0]).iter().all(|&x| x == 0));
        assert_eq!(SparseIntMatrix::identity(3).integer_kernel().len(), 0);
    }

    #[test]
    fn echelon_membership() {
        let q = Rationals;
        let mut e = Echelon::new(&q, 3);
        assert!(e.insert(vec![q.from_i64(1), q.from_i64(2), q.from_i64(0)]));
        assert!(e.insert(vec![q.from_i64(0), q.from_i64(1), q.from_i64(1)]));
        assert!(!e.insert(vec![q.from_i64(2), q.from_i64(5), q.from_i64(1)]));
        assert!(e.contains(vec![q.from_i64(1), q.from_i64(3), q.from_i64(1)]));
        assert!(!e.contains(vec![q.from_i64(0), q.from_i64(0), q.from_i64(1)]));
    }
}
