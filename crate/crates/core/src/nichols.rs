//! Quantum symmetrizers and graded dimensions of Nichols algebras.
//!
//! `dim B(V)_d` is the rank of `S_d = Σ_{w ∈ S_d} T_w` on `V^{⊗d}`, where `T_w`
//! lifts `w` through the braiding along a reduced word. [`symmetrizer`]
//! assembles `S_d` by brute force; [`graded_dims`] never forms it. It uses
//! `S_d = (1 ⊗ S_{d-1}) · Σ_{k<d} c_1 c_2 ⋯ c_k`, so
//! `ker S_d = { x : R_d x ∈ V ⊗ ker S_{d-1} }`, and keeps, per degree, a
//! matrix `P_d` with kernel `ker S_d` and only `dim B(V)_d` rows. Everything
//! is split into blocks by the product of the letters of a word, which the
//! braiding preserves.

use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{random_prime, Echelon, Field, PrimeField, Rationals, SparseIntMatrix};
use crate::perm::{all_permutations, Permutation, Sign};
use crate::report::{Algebra, Certification, DimensionReport};
use crate::yd::{braiding, MonomialMatrix, YdModule};

pub type GradedDimReport = DimensionReport;

/// Default cap on `m^d`, the number of basis words of `V^{⊗d}`.
pub const DEFAULT_WORD_LIMIT: u128 = 2_000_000;

/// Limits on the size of tensor powers an operation may touch.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_words: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_words: DEFAULT_WORD_LIMIT,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_words: u128::MAX,
        }
    }

    pub(crate) fn check(&self, what: &str, required: u128) -> Result<()> {
        if required > self.max_words {
            return Err(Error::BudgetExceeded {
                what: what.to_string(),
                required,
                limit: self.max_words,
            });
        }
        Ok(())
    }
}

/// Field used for ranks.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FieldMode {
    Rational,
    /// Two random ~62-bit primes drawn from the seed.
    TwoPrimes {
        seed: u64,
    },
}

fn word_count(m: usize, d: usize) -> u128 {
    (m as u128).checked_pow(d as u32).unwrap_or(u128::MAX)
}

/// Braiding as a lookup table: `table[s * m + t] = (s ▷ t, sign)`.
fn braid_table(module: &YdModule) -> Vec<(u32, Sign)> {
    let m = module.dim();
    let c = braiding(module);
    (0..m * m)
        .map(|col| {
            let (row, sign) = c.apply(col);
            // row = (s ▷ t) * m + s
            ((row / m) as u32, sign)
        })
        .collect()
}

/// `c` acting on slots `k, k+1` (1-based) of `V^{⊗d}`.
pub fn braid_operator(
    module: &YdModule,
    k: usize,
    d: usize,
    budget: Budget,
) -> Result<MonomialMatrix> {
    if k == 0 || k >= d {
        return Err(Error::SlotOutOfRange { slot: k, degree: d });
    }
    let m = module.dim();
    let size = word_count(m, d);
    budget.check("braid operator", size)?;
    let table = braid_table(module);
    let size = size as usize;
    let low = m.pow((d - k - 1) as u32);
    let pair = m * m;
    let mut target = Vec::with_capacity(size);
    let mut sign = Vec::with_capacity(size);
    for x in 0..size {
        let lo = x % low;
        let mid = (x / low) % pair;
        let hi = x / low / pair;
        let (s, t) = (mid / m, mid % m);
        let (moved, eps) = table[s * m + t];
        let new_mid = moved as usize * m + s;
        target.push(((hi * pair + new_mid) * low + lo) as u32);
        sign.push(eps);
    }
    Ok(MonomialMatrix::new(target, sign))
}

/// `T_w = c_{k1} ∘ ⋯ ∘ c_{kl}` for a word `[k1, ..., kl]` of slot indices.
pub fn t_word(
    module: &YdModule,
    word: &[usize],
    d: usize,
    budget: Budget,
) -> Result<MonomialMatrix> {
    budget.check("braid word operator", word_count(module.dim(), d))?;
    let size = word_count(module.dim(), d) as usize;
    let ops: HashMap<usize, MonomialMatrix> = word
        .iter()
        .map(|&k| braid_operator(module, k, d, budget).map(|op| (k, op)))
        .collect::<Result<_>>()?;
    Ok(word.iter().fold(MonomialMatrix::identity(size), |acc, k| {
        acc.compose(&ops[k])
    }))
}

/// `T_w` along the reduced word of `w` that peels the leftmost descent first.
pub fn t_w(module: &YdModule, w: &Permutation, d: usize, budget: Budget) -> Result<MonomialMatrix> {
    if w.degree() != d {
        return Err(Error::SizeMismatch {
            left: w.degree(),
            right: d,
        });
    }
    t_word(module, &w.reduced_word(), d, budget)
}

/// Brute-force `S_d = Σ_w T_w`. Refuses when `d! · m^d` exceeds the budget.
pub fn symmetrizer(module: &YdModule, d: usize, budget: Budget) -> Result<SparseIntMatrix> {
    let m = module.dim();
    let size = word_count(m, d);
    let factorial: u128 = (1..=d as u128).product();
    budget.check("symmetrizer", size.saturating_mul(factorial))?;
    let size = size as usize;
    if d == 0 {
        return Ok(SparseIntMatrix::identity(1));
    }
    // Each T_w is computed independently; accumulation runs in the fixed
    // enumeration order of S_d.
    let terms: Vec<MonomialMatrix> = all_permutations(d)
        .par_iter()
        .map(|w| t_w(module, w, d, Budget::unlimited()))
        .collect::<Result<_>>()?;
    let mut columns: Vec<HashMap<u32, i64>> = vec![HashMap::new(); size];
    for term in &terms {
        for (col, acc) in columns.iter_mut().enumerate() {
            let (row, sign) = term.apply(col);
            *acc.entry(row as u32).or_insert(0) += sign.to_i64();
        }
    }
    let mut out = SparseIntMatrix::zeros(size, size);
    for (col, acc) in columns.into_iter().enumerate() {
        let mut entries: Vec<(u32, i64)> = acc.into_iter().filter(|e| e.1 != 0).collect();
        entries.sort_unstable();
        for (row, v) in entries {
            out.add_entry(row as usize, col, v);
        }
    }
    Ok(out)
}

/// `S_d` through `S_d = (1 ⊗ S_{d-1}) · Σ_{k=0}^{d-1} c_1 ⋯ c_k`.
pub fn symmetrizer_shuffle(module: &YdModule, d: usize, budget: Budget) -> Result<SparseIntMatrix> {
    let m = module.dim();
    budget.check(
        "symmetrizer",
        word_count(m, d).saturating_mul(word_count(m, d)),
    )?;
    if d <= 1 {
        return Ok(SparseIntMatrix::identity(m.pow(d as u32)));
    }
    let lower = symmetrizer_shuffle(module, d - 1, budget)?;
    let block = lower.rows();
    let mut lifted = SparseIntMatrix::zeros(m * block, m * block);
    for a in 0..m {
        for (r, c, v) in lower.entries() {
            lifted.add_entry(a * block + r, a * block + c, v);
        }
    }
    let size = m.pow(d as u32);
    let mut shuffle = SparseIntMatrix::zeros(size, size);
    let mut chain = MonomialMatrix::identity(size);
    for k in 0..d {
        if k > 0 {
            chain = chain.compose(&braid_operator(module, k, d, budget)?);
        }
        for col in 0..size {
            let (row, sign) = chain.apply(col);
            shuffle.add_entry(row, col, sign.to_i64());
        }
    }
    Ok(lifted.mul(&shuffle))
}

struct Block<E> {
    words: Vec<u64>,
    rows: Vec<Vec<E>>,
}

struct Level<E> {
    degree: usize,
    block_of_word: Vec<u32>,
    local_of_word: Vec<u32>,
    products: Vec<Permutation>,
    blocks: Vec<Block<E>>,
}

impl<E> Level<E> {
    fn dim(&self) -> u64 {
        self.blocks.iter().map(|b| b.rows.len() as u64).sum()
    }
}

struct Engine<'a, F: Field> {
    field: &'a F,
    m: usize,
    letters: Vec<Permutation>,
    table: Vec<(u32, Sign)>,
}

impl<'a, F: Field> Engine<'a, F> {
    fn new(field: &'a F, module: &YdModule) -> Self {
        let n = module.n();
        Engine {
            field,
            m: module.dim(),
            letters: module
                .basis()
                .iter()
                .map(|t| t.to_permutation(n).expect("basis fits n"))
                .collect(),
            table: braid_table(module),
        }
    }

    fn level_zero(&self, n: usize) -> Level<F::Elem> {
        Level {
            degree: 0,
            block_of_word: vec![0],
            local_of_word: vec![0],
            products: vec![Permutation::identity(n)],
            blocks: vec![Block {
                words: vec![0],
                rows: vec![vec![self.field.one()]],
            }],
        }
    }

    fn next(&self, prev: &Level<F::Elem>) -> Level<F::Elem> {
        let m = self.m;
        let d = prev.degree + 1;
        let stride = (m as u64).pow(prev.degree as u32);
        let size = (m as u64 * stride) as usize;

        // Blocks of degree d: product t_f ∘ g' for each letter f and block g'.
        let mut index: HashMap<Permutation, u32> = HashMap::new();
        let mut products = Vec::new();
        let mut members: Vec<Vec<(usize, usize)>> = Vec::new();
        for f in 0..m {
            for (b, g) in prev.products.iter().enumerate() {
                let prod = &self.letters[f] * g;
                let id = *index.entry(prod.clone()).or_insert_with(|| {
                    products.push(prod);
                    members.push(Vec::new());
                    (products.len() - 1) as u32
                });
                members[id as usize].push((f, b));
            }
        }
        let mut block_of_word = vec![0u32; size];
        let mut local_of_word = vec![0u32; size];
        let mut words_per_block: Vec<Vec<u64>> = Vec::with_capacity(members.len());
        for (id, mem) in members.iter().enumerate() {
            let mut words = Vec::new();
            for &(f, b) in mem {
                for &r in &prev.blocks[b].words {
                    let x = f as u64 * stride + r;
                    block_of_word[x as usize] = id as u32;
                    local_of_word[x as usize] = words.len() as u32;
                    words.push(x);
                }
            }
            words_per_block.push(words);
        }

        let blocks: Vec<Block<F::Elem>> = words_per_block
            .into_par_iter()
            .zip(members.par_iter())
            .map(|(words, mem)| self.reduce_block(prev, words, mem, stride, d))
            .collect();
        Level {
            degree: d,
            block_of_word,
            local_of_word,
            products,
            blocks,
        }
    }

    fn reduce_block(
        &self,
        prev: &Level<F::Elem>,
        words: Vec<u64>,
        members: &[(usize, usize)],
        stride: u64,
        d: usize,
    ) -> Block<F::Elem> {
        let f = self.field;
        let m = self.m as u64;
        // rows of (1 ⊗ P_{d-1}) restricted to this block, grouped by first letter
        let mut offset = vec![usize::MAX; self.m];
        let mut total_rows = 0;
        for &(letter, b) in members {
            offset[letter] = total_rows;
            total_rows += prev.blocks[b].rows.len();
        }
        let mut mat = vec![vec![f.zero(); words.len()]; total_rows];
        let mut letters = vec![0usize; d];
        for (col, &x) in words.iter().enumerate() {
            let mut rem = x;
            for slot in (0..d).rev() {
                letters[slot] = (rem % m) as usize;
                rem /= m;
            }
            for k in 0..d {
                // c_1 ⋯ c_k moves letter k+1 to the front, conjugated by x_1 ⋯ x_k
                let mut moving = letters[k];
                let mut sign = Sign::Plus;
                for i in (0..k).rev() {
                    let (y, s) = self.table[letters[i] * self.m + moving];
                    moving = y as usize;
                    sign = sign * s;
                }
                let mut rest = 0u64;
                for (i, &l) in letters.iter().enumerate() {
                    if i != k {
                        rest = rest * m + l as u64;
                    }
                }
                debug_assert!(rest < stride);
                let b = prev.block_of_word[rest as usize] as usize;
                let local = prev.local_of_word[rest as usize] as usize;
                let base = offset[moving];
                debug_assert_ne!(base, usize::MAX);
                for (r, prow) in prev.blocks[b].rows.iter().enumerate() {
                    let v = &prow[local];
                    if f.is_zero(v) {
                        continue;
                    }
                    let cell = &mut mat[base + r][col];
                    *cell = match sign {
                        Sign::Plus => f.add(cell, v),
                        Sign::Minus => f.sub(cell, v),
                    };
                }
            }
        }
        let mut ech = Echelon::new(f, words.len());
        for row in mat {
            ech.insert(row);
        }
        Block {
            words,
            rows: ech.into_rows(),
        }
    }
}

/// Dimensions of `B(V)_d` for `d = 0..=max_degree` over a single field,
/// stopping after the first zero component.
pub fn graded_dims_over<F: Field>(
    module: &YdModule,
    max_degree: usize,
    field: &F,
    budget: Budget,
) -> Result<Vec<u64>> {
    let engine = Engine::new(field, module);
    let mut level = engine.level_zero(module.n());
    let mut dims = vec![1u64];
    for d in 1..=max_degree {
        budget.check("graded dimension", word_count(module.dim(), d))?;
        if word_count(module.dim(), d) > u32::MAX as u128 {
            return Err(Error::BudgetExceeded {
                what: "graded dimension word index".into(),
                required: word_count(module.dim(), d),
                limit: u32::MAX as u128,
            });
        }
        level = engine.next(&level);
        let dim = level.dim();
        dims.push(dim);
        if dim == 0 {
            break;
        }
    }
    Ok(dims)
}

/// Graded dimensions with the requested certification.
///
/// In two-prime mode the ranks are recomputed with fresh primes (up to three
/// draws) when the two primes disagree, then exact arithmetic takes over.
pub fn graded_dims(
    module: &YdModule,
    max_degree: usize,
    mode: FieldMode,
    budget: Budget,
) -> Result<GradedDimReport> {
    let (dims, field, certification) = match mode {
        FieldMode::Rational => (
            graded_dims_over(module, max_degree, &Rationals, budget)?,
            "rational".to_string(),
            Certification::Exact,
        ),
        FieldMode::TwoPrimes { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut found = None;
            for _ in 0..3 {
                let (p1, p2) = (random_prime(&mut rng), random_prime(&mut rng));
                let a = graded_dims_over(module, max_degree, &PrimeField::new(p1), budget)?;
                let b = graded_dims_over(module, max_degree, &PrimeField::new(p2), budget)?;
                if a == b {
                    found = Some((a, p1, p2));
                    break;
                }
            }
            match found {
                Some((dims, p1, p2)) => (
                    dims,
                    "modp".to_string(),
                    Certification::TwoPrime { primes: [p1, p2] },
                ),
                None => (
                    graded_dims_over(module, max_degree, &Rationals, budget)?,
                    "rational".to_string(),
                    Certification::Exact,
                ),
            }
        }
    };
    Ok(DimensionReport::new(
        Algebra::Nichols,
        module.n(),
        Some(module.character()),
        dims,
        field,
        certification,
    ))
}

/// `dim B(V)_d`.
pub fn graded_dim(module: &YdModule, d: usize, mode: FieldMode, budget: Budget) -> Result<u64> {
    Ok(graded_dims(module, d, mode, budget)?
        .dim(d)
        .expect("computed through d"))
}

/// `1 + c` on `V ⊗ V`.
pub fn symmetrizer2(module: &YdModule) -> SparseIntMatrix {
    SparseIntMatrix::identity(module.dim().pow(2)).add(&braiding(module).to_sparse())
}

/// Integer basis of `ker S_2`, the quadratic relations of `B(V)`.
pub fn degree2_kernel(module: &YdModule) -> Vec<Vec<i64>> {
    symmetrizer2(module).integer_kernel()
}

/// Whether a vector of `V ⊗ V`, given as `(s, t, coefficient)` terms, lies in `ker S_2`.
pub fn in_degree2_kernel(module: &YdModule, terms: &[(usize, usize, i64)]) -> bool {
    let m = module.dim();
    let mut v = vec![0i64; m * m];
    for &(s, t, c) in terms {
        v[s * m + t] += c;
    }
    symmetrizer2(module).apply(&v).iter().all(|&x| x == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::yd::{build, CharacterSpec};

    fn chi2(n: usize) -> YdModule {
        build(n, CharacterSpec::ChiDoublePrime).unwrap()
    }

    #[test]
    fn braid_operator_embeds_braiding() {
        let m = chi2(3);
        let b = Budget::default();
        assert_eq!(braid_operator(&m, 1, 2, b).unwrap(), braiding(&m));
        let c1 = braid_operator(&m, 1, 3, b).unwrap();
        let c = braiding(&m);
        let dim = m.dim();
        for col in 0..dim.pow(3) {
            let (pair, last) = (col / dim, col % dim);
            let (img, s) = c.apply(pair);
            assert_eq!(c1.apply(col), (img * dim + last, s));
        }
        assert!(c1.compose(&c1.inverse()).is_identity());
        assert!(matches!(
            braid_operator(&m, 3, 3, b),
            Err(Error::SlotOutOfRange { .. })
        ));
        assert!(matches!(
            braid_operator(&m, 0, 3, b),
            Err(Error::SlotOutOfRange { .. })
        ));
    }

    #[test]
    fn t_w_basics() {
        let m = chi2(3);
        let b = Budget::default();
        assert!(t_w(&m, &Permutation::identity(3), 3, b)
            .unwrap()
            .is_identity());
        assert_eq!(
            t_w(&m, &Permutation::simple(3, 1), 3, b).unwrap(),
            braid_operator(&m, 1, 3, b).unwrap()
        );
        let w0 = Permutation::from_images(&[3, 2, 1]).unwrap();
        assert_eq!(
            t_word(&m, &[1, 2, 1], 3, b).unwrap(),
            t_word(&m, &[2, 1, 2], 3, b).unwrap()
        );
        assert_eq!(
            t_w(&m, &w0, 3, b).unwrap(),
            t_word(&m, &[2, 1, 2], 3, b).unwrap()
        );
    }

    #[test]
    fn small_symmetrizers() {
        let m = chi2(3);
        let b = Budget::default();
        assert_eq!(symmetrizer(&m, 0, b).unwrap(), SparseIntMatrix::identity(1));
        assert_eq!(symmetrizer(&m, 1, b).unwrap(), SparseIntMatrix::identity(3));
        let s2 = symmetrizer(&m, 2, b).unwrap();
        assert_eq!(s2, symmetrizer2(&m));
        assert_eq!(s2.rank_over(&Rationals), 4);
    }

    #[test]
    fn budget_refusal() {
        let m = chi2(4);
        let tiny = Budget { max_words: 100 };
        assert!(matches!(
            symmetrizer(&m, 3, tiny),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            graded_dims(&m, 3, FieldMode::Rational, tiny),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn degree_two_kernel() {
        let m = chi2(3);
        let ker = degree2_kernel(&m);
        assert_eq!(ker.len(), 5);
        for t in 0..m.dim() {
            assert!(in_degree2_kernel(&m, &[(t, t, 1)]));
        }
        assert_eq!(degree2_kernel(&chi2(2)).len(), 1);
        for v in &ker {
            assert!(symmetrizer2(&m).apply(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn graded_dims_n3() {
        let report = graded_dims(&chi2(3), 8, FieldMode::Rational, Budget::default()).unwrap();
        assert_eq!(report.dims, vec![1, 3, 4, 3, 1, 0]);
        assert_eq!(report.total, Some(12));
        let modp = graded_dims(
            &chi2(3),
            8,
            FieldMode::TwoPrimes { seed: 1 },
            Budget::default(),
        )
        .unwrap();
        assert_eq!(modp.dims, report.dims);
        assert!(matches!(modp.certification, Certification::TwoPrime { .. }));
    }
}
