//! Permutations of `{1..n}`, the class of transpositions, the centralizer of
//! `(1 2)` and the coset factorizations behind every action formula.
//!
//! Points are 1-based in the public API. Products compose right to left:
//! `(p * q)(k) = p(q(k))`, so `(1 2)(2 3)` is the 3-cycle `(1 2 3)`.

use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A sign `+1` or `-1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn pow(self, exp: usize) -> Sign {
        if exp.is_multiple_of(2) {
            Sign::Plus
        } else {
            self
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i64(self.to_i64())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Sign, D::Error> {
        let v = i64::deserialize(d)?;
        Sign::from_i64(v)
            .ok_or_else(|| serde::de::Error::custom(format!("sign must be +1 or -1, got {v}")))
    }
}

/// A bijection of `{1..n}` stored as a dense image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based: images[k] is the image of k + 1, minus one.
    images: Vec<u8>,
}

impl Permutation {
    pub const MAX_DEGREE: usize = 255;

    pub fn identity(n: usize) -> Permutation {
        assert!(n <= Self::MAX_DEGREE);
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[k - 1]` is the image of `k`.
    pub fn from_images(images: &[usize]) -> Result<Permutation> {
        let n = images.len();
        if n > Self::MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!(
                "degree {n} exceeds {}",
                Self::MAX_DEGREE
            )));
        }
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 1..{n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&v| (v - 1) as u8).collect(),
        })
    }

    /// Product of the given cycles, composed right to left.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Permutation> {
        let mut acc = Permutation::identity(n);
        for cycle in cycles {
            acc = acc.compose(&Permutation::cycle(n, cycle)?)?;
        }
        Ok(acc)
    }

    /// A single cycle `(a b c ...)` mapping `a -> b -> c -> ... -> a`.
    pub fn cycle(n: usize, points: &[usize]) -> Result<Permutation> {
        let mut images: Vec<u8> = (0..n as u8).collect();
        let mut seen = vec![false; n];
        for &p in points {
            if p == 0 || p > n {
                return Err(Error::InvalidPermutation(format!(
                    "point {p} outside 1..{n}"
                )));
            }
            if seen[p - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "point {p} repeated in cycle {points:?}"
                )));
            }
            seen[p - 1] = true;
        }
        for (k, &p) in points.iter().enumerate() {
            let next = points[(k + 1) % points.len()];
            images[p - 1] = (next - 1) as u8;
        }
        Ok(Permutation { images })
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Permutation> {
        Transposition::new(i, j)?.to_permutation(n)
    }

    /// The adjacent transposition `s_k = (k k+1)`.
    pub fn simple(n: usize, k: usize) -> Permutation {
        assert!(k >= 1 && k < n, "simple reflection s_{k} outside S_{n}");
        let mut p = Permutation::identity(n);
        p.images.swap(k - 1, k);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] as usize + 1
    }

    /// 1-based image table.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    /// `self ∘ other`, i.e. `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::SizeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: other
                .images
                .iter()
                .map(|&k| self.images[k as usize])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v as usize] = k as u8;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &v)| k == v as usize)
    }

    pub fn inversions(&self) -> usize {
        let n = self.degree();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Parity: `(-1)^l` where `l` is the number of transposition factors.
    pub fn sign(&self) -> Sign {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut odd = false;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k] as usize;
                len += 1;
            }
            if len % 2 == 0 {
                odd = !odd;
            }
        }
        Sign::from_parity(odd)
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k + 1);
                k = self.images[k] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self * other == other * self
    }

    /// A reduced word `[k1, ..., kl]` with `self = s_k1 ∘ ... ∘ s_kl`, peeling the
    /// leftmost descent first.
    pub fn reduced_word(&self) -> Vec<usize> {
        self.reduced_word_with(|descents| descents[0])
    }

    /// Like [`Permutation::reduced_word`], with `pick` choosing which descent to peel.
    /// Every choice yields a reduced word; different choices give different words.
    pub fn reduced_word_with(&self, mut pick: impl FnMut(&[usize]) -> usize) -> Vec<usize> {
        let mut w = self.clone();
        let mut peeled = Vec::with_capacity(self.inversions());
        loop {
            let descents: Vec<usize> = (0..w.degree().saturating_sub(1))
                .filter(|&k| w.images[k] > w.images[k + 1])
                .map(|k| k + 1)
                .collect();
            if descents.is_empty() {
                break;
            }
            let k = pick(&descents);
            debug_assert!(descents.contains(&k));
            // w = (w ∘ s_k) ∘ s_k, and w ∘ s_k has one inversion fewer.
            w.images.swap(k - 1, k);
            peeled.push(k);
        }
        peeled.reverse();
        peeled
    }

    /// Parses cycle notation such as `(1 3)(2 4)`, `(1,3)` or `id`.
    ///
    /// Single-digit points may be written without separators, as in `(12)(34)`.
    pub fn parse(s: &str, n: usize) -> Result<Permutation> {
        if n > Self::MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!(
                "degree {n} exceeds {}",
                Self::MAX_DEGREE
            )));
        }
        let cycles = parse_cycle_tokens(s, |tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::InvalidPermutation(format!("bad point {tok:?} in {s:?}")))
        })?;
        Permutation::from_cycles(n, &cycles)
    }
}

/// Splits cycle notation into cycles of resolved points. Shared with the
/// identity-template parser in `verify`.
pub(crate) fn parse_cycle_tokens<T>(
    s: &str,
    mut resolve: impl FnMut(&str) -> Result<T>,
) -> Result<Vec<Vec<T>>> {
    let trimmed = s.trim();
    if trimmed.is_empty() || trimmed == "id" || trimmed == "()" {
        return Ok(Vec::new());
    }
    let mut cycles = Vec::new();
    let mut rest = trimmed;
    while !rest.is_empty() {
        rest = rest.trim_start();
        if let Some(tail) = rest.strip_prefix("id") {
            rest = tail;
            continue;
        }
        let Some(body_start) = rest.strip_prefix('(') else {
            return Err(Error::InvalidPermutation(format!("expected '(' in {s:?}")));
        };
        let Some(close) = body_start.find(')') else {
            return Err(Error::InvalidPermutation(format!(
                "unclosed cycle in {s:?}"
            )));
        };
        let body = &body_start[..close];
        rest = &body_start[close + 1..];
        let tokens: Vec<&str> = if body.contains([' ', ',']) {
            body.split([' ', ',']).filter(|t| !t.is_empty()).collect()
        } else if body.chars().all(|c| c.is_ascii_digit()) {
            body.char_indices()
                .map(|(i, c)| &body[i..i + c.len_utf8()])
                .collect()
        } else {
            vec![body]
        };
        if tokens.is_empty() {
            continue;
        }
        let cycle = tokens
            .into_iter()
            .map(&mut resolve)
            .collect::<Result<Vec<T>>>()?;
        cycles.push(cycle);
    }
    Ok(cycles)
}

impl<'a> Mul<&'a Permutation> for &'a Permutation {
    type Output = Permutation;

    /// Composition `self ∘ rhs`; panics on a degree mismatch.
    fn mul(self, rhs: &'a Permutation) -> Permutation {
        self.compose(rhs).expect("permutation degrees differ")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("id");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An unordered pair `{i, j}`, stored with `i < j`. Indexes both the class of
/// transpositions and the Fomin–Kirillov generators `x_ij`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    i: u8,
    j: u8,
}

impl Transposition {
    pub fn new(i: usize, j: usize) -> Result<Transposition> {
        if i == j || i == 0 || j == 0 || i > Permutation::MAX_DEGREE || j > Permutation::MAX_DEGREE
        {
            return Err(Error::InvalidTransposition { i, j, n: 0 });
        }
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        Ok(Transposition {
            i: i as u8,
            j: j as u8,
        })
    }

    pub fn i(self) -> usize {
        self.i as usize
    }

    pub fn j(self) -> usize {
        self.j as usize
    }

    pub fn fits(self, n: usize) -> bool {
        self.j() <= n
    }

    pub fn to_permutation(self, n: usize) -> Result<Permutation> {
        if !self.fits(n) {
            return Err(Error::InvalidTransposition {
                i: self.i(),
                j: self.j(),
                n,
            });
        }
        let mut p = Permutation::identity(n);
        p.images.swap(self.i() - 1, self.j() - 1);
        Ok(p)
    }

    pub fn is_disjoint(self, other: Transposition) -> bool {
        self.i != other.i && self.i != other.j && self.j != other.i && self.j != other.j
    }

    pub fn contains(self, k: usize) -> bool {
        self.i() == k || self.j() == k
    }

    /// Position in the lexicographic enumeration of `class_transpositions(n)`.
    pub fn index(self, n: usize) -> usize {
        let (i, j) = (self.i(), self.j());
        // pairs (a, b) with a < i come first: sum_{a<i} (n - a)
        (i - 1) * n - (i - 1) * i / 2 + (j - i - 1)
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl fmt::Debug for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Transposition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.i(), self.j()].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Transposition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Transposition, D::Error> {
        let [i, j] = <[usize; 2]>::deserialize(d)?;
        Transposition::new(i, j).map_err(serde::de::Error::custom)
    }
}

/// An element of the centralizer of `(1 2)`, written `(1 2)^swap · tail` with
/// `tail` fixing 1 and 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CentralizerElement {
    pub swap: bool,
    pub tail: Permutation,
}

impl CentralizerElement {
    pub fn to_permutation(&self) -> Permutation {
        if self.swap {
            &swap12(self.tail.degree()) * &self.tail
        } else {
            self.tail.clone()
        }
    }
}

fn swap12(n: usize) -> Permutation {
    Permutation::simple(n, 1)
}

pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.compose(q)
}

/// All transpositions of `S_n` in lexicographic order.
pub fn class_transpositions(n: usize) -> Result<Vec<Transposition>> {
    if n < 2 {
        return Err(Error::RankTooSmall { n, min: 2 });
    }
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(Transposition {
                i: i as u8,
                j: j as u8,
            });
        }
    }
    Ok(out)
}

/// The fixed representative `g_t` with `g_t (1 2) g_t^{-1} = t`:
/// `id` for `(1,2)`, `(2 j)` for `(1,j)`, `(1 j)` for `(2,j)` and `(1 k)(2 j)` for `(k,j)`, `k > 2`.
pub fn coset_rep(t: Transposition, n: usize) -> Result<Permutation> {
    if !t.fits(n) {
        return Err(Error::InvalidTransposition {
            i: t.i(),
            j: t.j(),
            n,
        });
    }
    let (k, j) = (t.i(), t.j());
    let mut p = Permutation::identity(n);
    match k {
        1 if j == 2 => {}
        1 => p.images.swap(1, j - 1),
        2 => p.images.swap(0, j - 1),
        _ => {
            p.images.swap(0, k - 1);
            p.images.swap(1, j - 1);
        }
    }
    Ok(p)
}

pub fn centralizer_decompose(gamma: &Permutation) -> Result<CentralizerElement> {
    let n = gamma.degree();
    if n < 2 {
        return Err(Error::RankTooSmall { n, min: 2 });
    }
    let s = swap12(n);
    if !gamma.commutes_with(&s) {
        return Err(Error::NotInCentralizer(gamma.to_string()));
    }
    let swap = gamma.apply(1) == 2;
    let tail = if swap { &s * gamma } else { gamma.clone() };
    Ok(CentralizerElement { swap, tail })
}

/// `g ▷ t = g t g^{-1}`, i.e. the pair `{g(i), g(j)}`.
pub fn conj_action(g: &Permutation, t: Transposition) -> Transposition {
    Transposition::new(g.apply(t.i()), g.apply(t.j())).expect("bijection keeps points distinct")
}

/// Solves `h · g_t = g_t' · γ` with `γ` in the centralizer of `(1 2)`.
pub fn left_coset_factor(
    h: &Permutation,
    t: Transposition,
) -> Result<(Transposition, CentralizerElement)> {
    let n = h.degree();
    let t_new = conj_action(h, t);
    let gamma = &(&coset_rep(t_new, n)?.inverse() * h) * &coset_rep(t, n)?;
    Ok((t_new, centralizer_decompose(&gamma)?))
}

/// Solves `g_t · h = ζ · g_t'` with `ζ` in the centralizer of `(1 2)`.
pub fn right_coset_factor(
    t: Transposition,
    h: &Permutation,
) -> Result<(CentralizerElement, Transposition)> {
    let n = h.degree();
    // g_t is an involution, so t' = h^{-1} t h.
    let t_new = conj_action(&h.inverse(), t);
    let zeta = &(&coset_rep(t, n)? * h) * &coset_rep(t_new, n)?.inverse();
    Ok((centralizer_decompose(&zeta)?, t_new))
}

/// All `n!` permutations of `S_n` in lexicographic order of image tables.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(Permutation {
            images: cur.clone(),
        });
        // next lexicographic permutation
        let Some(k) = (0..n.saturating_sub(1))
            .rev()
            .find(|&k| cur[k] < cur[k + 1])
        else {
            break;
        };
        let l = (k + 1..n).rev().find(|&l| cur[k] < cur[l]).unwrap();
        cur.swap(k, l);
        cur[k + 1..].reverse();
    }
    out
}

/// The conjugacy class of `g` in `S_n`.
pub fn conjugacy_class(g: &Permutation) -> Vec<Permutation> {
    let mut class: Vec<Permutation> = all_permutations(g.degree())
        .iter()
        .map(|h| &(h * g) * &h.inverse())
        .collect();
    class.sort();
    class.dedup();
    class
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    fn t(i: usize, j: usize) -> Transposition {
        Transposition::new(i, j).unwrap()
    }

    #[test]
    fn compose_examples() {
        let s = p("(1 2)", 4);
        assert!(compose(&s, &s).unwrap().is_identity());
        // (12)(2j) = (2 j 1) = (1 j)(12) with j = 3
        let lhs = compose(&s, &p("(2 3)", 4)).unwrap();
        assert_eq!(lhs, p("(2 3 1)", 4));
        assert_eq!(lhs, &p("(1 3)", 4) * &s);
        let q = p("(1 4 2)(3)", 4);
        assert_eq!(compose(&q, &Permutation::identity(4)).unwrap(), q);
        assert!(matches!(
            compose(&q, &Permutation::identity(5)),
            Err(Error::SizeMismatch { left: 4, right: 5 })
        ));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(Permutation::identity(5).sign(), Sign::Plus);
        assert_eq!(p("(2 5)", 5).sign(), Sign::Minus);
        assert_eq!(p("(1 2 3)", 5).sign(), Sign::Plus);
        assert_eq!(p("(1 2 3 4)", 5).sign(), Sign::Minus);
    }

    #[test]
    fn class_enumeration() {
        assert_eq!(
            class_transpositions(3).unwrap(),
            vec![t(1, 2), t(1, 3), t(2, 3)]
        );
        assert_eq!(class_transpositions(4).unwrap().len(), 6);
        assert_eq!(class_transpositions(2).unwrap(), vec![t(1, 2)]);
        assert!(class_transpositions(1).is_err());
        for n in 2..8 {
            for (k, tr) in class_transpositions(n).unwrap().into_iter().enumerate() {
                assert_eq!(tr.index(n), k);
            }
        }
    }

    #[test]
    fn coset_rep_table() {
        assert!(coset_rep(t(1, 2), 5).unwrap().is_identity());
        assert_eq!(coset_rep(t(1, 4), 5).unwrap(), p("(2 4)", 5));
        assert_eq!(coset_rep(t(2, 5), 5).unwrap(), p("(1 5)", 5));
        assert_eq!(coset_rep(t(3, 4), 5).unwrap(), p("(1 3)(2 4)", 5));
        for n in 2..7 {
            let s = swap12(n);
            for tr in class_transpositions(n).unwrap() {
                let g = coset_rep(tr, n).unwrap();
                assert_eq!(&(&g * &s) * &g.inverse(), tr.to_permutation(n).unwrap());
            }
        }
    }

    #[test]
    fn centralizer_examples() {
        let c = centralizer_decompose(&p("(1 2)", 5)).unwrap();
        assert!(c.swap && c.tail.is_identity());
        let c = centralizer_decompose(&p("(3 4)", 5)).unwrap();
        assert!(!c.swap);
        assert_eq!(c.tail, p("(3 4)", 5));
        let g = p("(1 2)(3 4 5)", 5);
        let c = centralizer_decompose(&g).unwrap();
        assert!(c.swap);
        assert_eq!(c.tail, p("(3 4 5)", 5));
        assert_eq!(c.to_permutation(), g);
        assert!(matches!(
            centralizer_decompose(&p("(1 3)", 5)),
            Err(Error::NotInCentralizer(_))
        ));
    }

    #[test]
    fn left_factor_examples() {
        let h = p("(1 2)", 5);
        let (tn, gamma) = left_coset_factor(&h, t(1, 3)).unwrap();
        assert_eq!(tn, t(2, 3));
        assert_eq!(gamma.to_permutation(), h);
        let (tn, gamma) = left_coset_factor(&h, t(3, 4)).unwrap();
        assert_eq!(tn, t(3, 4));
        assert_eq!(gamma.to_permutation(), p("(3 4)", 5));
        for tr in class_transpositions(5).unwrap() {
            let (tn, gamma) = left_coset_factor(&Permutation::identity(5), tr).unwrap();
            assert_eq!(tn, tr);
            assert!(gamma.to_permutation().is_identity());
        }
    }

    #[test]
    fn right_factor_examples() {
        let s = p("(1 2)", 4);
        let (zeta, tn) = right_coset_factor(t(1, 2), &s).unwrap();
        assert_eq!(tn, t(1, 2));
        assert_eq!(zeta.to_permutation(), s);
    }

    #[test]
    fn conj_examples() {
        assert_eq!(conj_action(&p("(1 2)", 4), t(1, 3)), t(2, 3));
        assert_eq!(conj_action(&p("(1 4)", 4), t(2, 3)), t(2, 3));
        assert_eq!(conj_action(&p("(1 2 3)", 4), t(1, 2)), t(2, 3));
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(Permutation::identity(4).to_string(), "id");
        assert_eq!(p("(13)(24)", 4).to_string(), "(1 3)(2 4)");
        assert_eq!(p("(1,3)", 4).to_string(), "(1 3)");
        assert_eq!(p("(3 1 2)", 4).to_string(), "(1 2 3)");
        assert!(Permutation::parse("(1 1)", 4).is_err());
        assert!(Permutation::parse("(1 5)", 4).is_err());
        assert!(Permutation::parse("(1 2", 4).is_err());
        assert!(Permutation::parse("1 2", 4).is_err());
        assert!(Permutation::parse("(1 x)", 4).is_err());
    }

    #[test]
    fn reduced_words() {
        assert!(Permutation::identity(4).reduced_word().is_empty());
        assert_eq!(Permutation::simple(4, 1).reduced_word(), vec![1]);
        let w0 = Permutation::from_images(&[3, 2, 1]).unwrap();
        let word = w0.reduced_word();
        assert_eq!(word.len(), 3);
        let rebuilt = word.iter().fold(Permutation::identity(3), |acc, &k| {
            &acc * &Permutation::simple(3, k)
        });
        assert_eq!(rebuilt, w0);
        let other = w0.reduced_word_with(|d| *d.last().unwrap());
        assert_ne!(word, other);
    }

    #[test]
    fn enumeration_and_classes() {
        assert_eq!(all_permutations(4).len(), 24);
        assert_eq!(conjugacy_class(&p("(1 2)", 4)).len(), 6);
        assert_eq!(conjugacy_class(&p("(1 2)(3 4)(5 6)", 6)).len(), 15);
    }
}
