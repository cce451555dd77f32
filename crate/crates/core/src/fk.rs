//! The Fomin–Kirillov algebra `E_n` and homogeneous quadratic algebras in general.
//!
//! Dimensions are computed two independent ways: by counting normal words of
//! a degree-truncated two-sided Gröbner basis ([`hilbert_series`]), and by
//! brute-force rank of the degree-`d` part of the ideal ([`linear_dim`]).
//!
//! Monomial order: degree-lexicographic, generators ordered lexicographically
//! by pair, `x12 < x13 < ... < x(n-1)n`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::linalg::{Field, Rationals, SparseEchelon};
use crate::nichols::Budget;
use crate::perm::{class_transpositions, Transposition};
use crate::report::{Algebra, Certification, DimensionReport};

pub type HilbertReport = DimensionReport;

/// A word in the free algebra; letters are generator indices.
pub type Word = SmallVec<[u8; 16]>;

/// A monomial `x_{t1} x_{t2} ⋯` in the generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord(pub Vec<Transposition>);

impl FreeWord {
    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

/// An integer combination of words, all of the same degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(i64, Word)>,
}

impl Relation {
    pub fn degree(&self) -> Option<usize> {
        self.terms.first().map(|(_, w)| w.len())
    }
}

/// Generators indexed by transpositions of `S_n` and homogeneous relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticPresentation {
    n: usize,
    generators: Vec<Transposition>,
    relations: Vec<Relation>,
}

impl QuadraticPresentation {
    /// Validates that every relation is nonzero and of degree two.
    pub fn new(n: usize, relations: Vec<Relation>) -> Result<Self> {
        let generators = class_transpositions(n)?;
        if generators.len() > u8::MAX as usize {
            return Err(Error::Unsupported {
                what: format!("n = {n}"),
                detail: "at most 255 generators".into(),
            });
        }
        for (k, r) in relations.iter().enumerate() {
            if r.terms.is_empty() || r.terms.iter().any(|(c, w)| *c == 0 || w.len() != 2) {
                return Err(Error::Parse {
                    line: k + 1,
                    message: "relations must be nonzero combinations of degree-2 words".into(),
                });
            }
            if r.terms
                .iter()
                .any(|(_, w)| w.iter().any(|&g| g as usize >= generators.len()))
            {
                return Err(Error::Parse {
                    line: k + 1,
                    message: "generator outside the presentation".into(),
                });
            }
        }
        Ok(QuadraticPresentation {
            n,
            generators,
            relations,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Transposition] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    fn generator_name(&self, g: u8) -> String {
        let t = self.generators[g as usize];
        if self.n < 10 {
            format!("x{}{}", t.i(), t.j())
        } else {
            format!("x{}_{}", t.i(), t.j())
        }
    }

    /// One relation per line, e.g. `+ x12 x23 - x23 x13 - x13 x12`, after an
    /// `n = <n>` header.
    pub fn to_text(&self) -> String {
        let mut out = format!("n = {}\n", self.n);
        for r in &self.relations {
            let terms: Vec<String> = r
                .terms
                .iter()
                .map(|(c, w)| {
                    let sign = if *c < 0 { "-" } else { "+" };
                    let coef = if c.abs() == 1 {
                        String::new()
                    } else {
                        format!("{} ", c.abs())
                    };
                    let word: Vec<String> = w.iter().map(|&g| self.generator_name(g)).collect();
                    format!("{sign} {coef}{}", word.join(" "))
                })
                .collect();
            out.push_str(&terms.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the text format written by [`QuadraticPresentation::to_text`].
    ///
    /// Blank lines and lines starting with `#` are skipped. Without an
    /// `n = <n>` header, `n` is the largest index used.
    pub fn parse(text: &str) -> Result<Self> {
        let mut declared_n = None;
        let mut parsed: Vec<(usize, ParsedRelation)> = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("n") {
                if let Some(value) = rest.trim_start().strip_prefix('=') {
                    let n: usize = value.trim().parse().map_err(|_| Error::Parse {
                        line: line_no,
                        message: format!("bad header {line:?}"),
                    })?;
                    if declared_n.is_some() || !parsed.is_empty() {
                        return Err(Error::Parse {
                            line: line_no,
                            message: "header must come first and only once".into(),
                        });
                    }
                    declared_n = Some(n);
                    continue;
                }
            }
            parsed.push((line_no, parse_relation_line(line, line_no)?));
        }
        let max_index = parsed
            .iter()
            .flat_map(|(_, terms)| terms.iter().flat_map(|(_, w)| w.iter().map(|&(_, j)| j)))
            .max()
            .unwrap_or(2);
        let n = declared_n.unwrap_or(max_index);
        if n > 23 {
            return Err(Error::Unsupported {
                what: format!("n = {n}"),
                detail: "at most 253 generators".into(),
            });
        }
        let mut relations = Vec::with_capacity(parsed.len());
        for (line_no, terms) in parsed {
            let mut merged: BTreeMap<Word, i64> = BTreeMap::new();
            for (c, letters) in terms {
                let mut word = Word::new();
                for (i, j) in letters {
                    let t = Transposition::new(i, j).map_err(|_| Error::Parse {
                        line: line_no,
                        message: format!("bad generator x{i}{j}"),
                    })?;
                    if !t.fits(n) || i > j {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("generator x{i}{j} is not x_ij with i < j <= {n}"),
                        });
                    }
                    word.push(t.index(n) as u8);
                }
                let e = merged.entry(word).or_insert(0);
                *e = e
                    .checked_add(c)
                    .ok_or_else(|| Error::Overflow("relation coefficient".into()))?;
            }
            let terms: Vec<(i64, Word)> = merged
                .into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(w, c)| (c, w))
                .collect();
            relations.push((line_no, Relation { terms }));
        }
        for (line_no, r) in &relations {
            if r.terms.is_empty() || r.terms.iter().any(|(_, w)| w.len() != 2) {
                return Err(Error::Parse {
                    line: *line_no,
                    message: "relations must be nonzero combinations of degree-2 words".into(),
                });
            }
        }
        QuadraticPresentation::new(n, relations.into_iter().map(|(_, r)| r).collect())
    }
}

impl fmt::Display for QuadraticPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Terms of one relation line: coefficient and the index pairs of its word.
type ParsedRelation = Vec<(i64, Vec<(usize, usize)>)>;

fn parse_relation_line(line: &str, line_no: usize) -> Result<ParsedRelation> {
    let err = |message: String| Error::Parse {
        line: line_no,
        message,
    };
    let mut terms: Vec<(i64, Vec<(usize, usize)>)> = Vec::new();
    let mut sign: Option<i64> = None;
    let mut coef: Option<i64> = None;
    let mut word: Vec<(usize, usize)> = Vec::new();
    let flush = |terms: &mut Vec<_>,
                 sign: &mut Option<i64>,
                 coef: &mut Option<i64>,
                 word: &mut Vec<(usize, usize)>| {
        if word.is_empty() {
            return Err(err("term without generators".into()));
        }
        let s = sign.take().unwrap_or(1);
        let c = coef.take().unwrap_or(1);
        terms.push((
            s.checked_mul(c)
                .ok_or_else(|| err("coefficient overflow".into()))?,
            std::mem::take(word),
        ));
        Ok(())
    };
    for tok in line.split_whitespace() {
        match tok {
            "+" | "-" => {
                if !word.is_empty() {
                    flush(&mut terms, &mut sign, &mut coef, &mut word)?;
                } else if sign.is_some() || coef.is_some() {
                    return Err(err(format!("dangling {tok:?}")));
                }
                sign = Some(if tok == "-" { -1 } else { 1 });
            }
            _ if tok.starts_with('x') => word
                .push(parse_generator(tok).ok_or_else(|| err(format!("bad generator {tok:?}")))?),
            _ => {
                if !word.is_empty() || coef.is_some() {
                    return Err(err(format!("unexpected {tok:?}")));
                }
                let c: i64 = tok
                    .parse()
                    .map_err(|_| err(format!("bad coefficient {tok:?}")))?;
                coef = Some(c);
            }
        }
    }
    if word.is_empty() {
        return Err(err("relation ends without a term".into()));
    }
    flush(&mut terms, &mut sign, &mut coef, &mut word)?;
    Ok(terms)
}

/// `x12`, or `x1_10` / `x1,10` when an index has more than one digit.
fn parse_generator(tok: &str) -> Option<(usize, usize)> {
    let body = tok.strip_prefix('x')?;
    if let Some((a, b)) = body.split_once(['_', ',']) {
        return Some((a.parse().ok()?, b.parse().ok()?));
    }
    let digits: Vec<usize> = body
        .chars()
        .map(|c| c.to_digit(10).map(|d| d as usize))
        .collect::<Option<_>>()?;
    match digits.as_slice() {
        [i, j] => Some((*i, *j)),
        _ => None,
    }
}

/// The defining relations of `E_n`: `x_ij^2 = 0`,
/// `x_ij x_jk = x_jk x_ik + x_ik x_ij`, `x_jk x_ij = x_ik x_jk + x_ij x_ik`
/// for `i < j < k`, and `x_ij x_kl = x_kl x_ij` for disjoint pairs.
pub fn fk_presentation(n: usize) -> Result<QuadraticPresentation> {
    let gens = class_transpositions(n)?;
    let idx = |i: usize, j: usize| Transposition::new(i, j).expect("distinct").index(n) as u8;
    let w = |a: u8, b: u8| -> Word { SmallVec::from_slice(&[a, b]) };
    let mut relations = Vec::new();
    for t in &gens {
        let g = t.index(n) as u8;
        relations.push(Relation {
            terms: vec![(1, w(g, g))],
        });
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let (ij, jk, ik) = (idx(i, j), idx(j, k), idx(i, k));
                relations.push(Relation {
                    terms: vec![(1, w(ij, jk)), (-1, w(jk, ik)), (-1, w(ik, ij))],
                });
                relations.push(Relation {
                    terms: vec![(1, w(jk, ij)), (-1, w(ik, jk)), (-1, w(ij, ik))],
                });
            }
        }
    }
    for (a, ta) in gens.iter().enumerate() {
        for (b, tb) in gens.iter().enumerate().skip(a + 1) {
            if ta.is_disjoint(*tb) {
                relations.push(Relation {
                    terms: vec![(1, w(a as u8, b as u8)), (-1, w(b as u8, a as u8))],
                });
            }
        }
    }
    QuadraticPresentation::new(n, relations)
}

type Poly<E> = BTreeMap<Word, E>;

/// A rewrite rule `lead → -Σ tail`, from the monic element `lead + Σ tail`.
#[derive(Clone, Debug)]
pub struct Rule<E> {
    pub lead: Word,
    pub tail: Vec<(Word, E)>,
}

/// A two-sided Gröbner basis, complete for all overlaps up to `max_degree`,
/// with the normal-word counts it implies.
pub struct TruncatedGroebner<F: Field = Rationals> {
    field: F,
    generators: usize,
    max_degree: usize,
    rules: Vec<Rule<F::Elem>>,
    lookup: HashMap<Word, usize>,
    lead_lengths: Vec<usize>,
    prefixes: HashMap<Word, Vec<u32>>,
    normal_counts: Vec<u64>,
}

impl<F: Field> TruncatedGroebner<F> {
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn rules(&self) -> &[Rule<F::Elem>] {
        &self.rules
    }

    /// Normal words per degree, starting at degree 0. Ends at `max_degree`
    /// or at the first zero.
    pub fn normal_counts(&self) -> &[u64] {
        &self.normal_counts
    }

    pub fn leading_words(&self) -> impl Iterator<Item = &Word> {
        self.rules.iter().map(|r| &r.lead)
    }

    fn find_divisor(&self, w: &[u8]) -> Option<(usize, usize)> {
        for &len in &self.lead_lengths {
            if len > w.len() {
                break;
            }
            for pos in 0..=w.len() - len {
                if let Some(&r) = self.lookup.get(&w[pos..pos + len]) {
                    return Some((pos, r));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, w: &[u8]) -> bool {
        self.find_divisor(w).is_none()
    }

    /// Full normal form.
    pub fn reduce(&self, mut poly: Poly<F::Elem>) -> Poly<F::Elem> {
        let f = &self.field;
        let mut out = Poly::new();
        while let Some((w, c)) = poly.pop_last() {
            match self.find_divisor(&w) {
                None => {
                    out.insert(w, c);
                }
                Some((pos, r)) => {
                    let rule = &self.rules[r];
                    let end = pos + rule.lead.len();
                    for (tw, tc) in &rule.tail {
                        let mut word = Word::with_capacity(w.len() - rule.lead.len() + tw.len());
                        word.extend_from_slice(&w[..pos]);
                        word.extend_from_slice(tw);
                        word.extend_from_slice(&w[end..]);
                        let delta = f.mul(&c, tc);
                        match poly.get_mut(&word) {
                            Some(v) => {
                                *v = f.sub(v, &delta);
                                if f.is_zero(v) {
                                    poly.remove(&word);
                                }
                            }
                            None => {
                                poly.insert(word, f.neg(&delta));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn insert_rule(&mut self, mut poly: Poly<F::Elem>) {
        let f = &self.field;
        let (lead, lc) = poly.pop_last().expect("nonzero");
        let inv = f.inv(&lc);
        let tail: Vec<(Word, F::Elem)> = poly
            .into_iter()
            .rev()
            .map(|(w, c)| (w, f.mul(&c, &inv)))
            .collect();
        let id = self.rules.len();
        if !self.lead_lengths.contains(&lead.len()) {
            self.lead_lengths.push(lead.len());
            self.lead_lengths.sort_unstable();
        }
        self.lookup.insert(lead.clone(), id);
        self.rules.push(Rule { lead, tail });
    }

    fn index_prefixes(&mut self, from: usize) {
        for id in from..self.rules.len() {
            let lead = self.rules[id].lead.clone();
            for l in 1..lead.len() {
                self.prefixes
                    .entry(SmallVec::from_slice(&lead[..l]))
                    .or_default()
                    .push(id as u32);
            }
        }
    }

    /// S-polynomials of total degree `d`: `f · b[l..] - a[..p-l] · g` whenever
    /// a proper suffix of `lead(f) = a` equals a proper prefix of `lead(g) = b`.
    fn overlaps(&self, d: usize) -> Vec<Poly<F::Elem>> {
        let f = &self.field;
        let mut out = Vec::new();
        for rf in &self.rules {
            let a = &rf.lead;
            let p = a.len();
            if p >= d {
                continue;
            }
            for l in 1..p {
                let q = d - p + l;
                let Some(cands) = self.prefixes.get(&a[p - l..]) else {
                    continue;
                };
                for &gid in cands {
                    let rg = &self.rules[gid as usize];
                    if rg.lead.len() != q {
                        continue;
                    }
                    let b = &rg.lead;
                    let mut s = Poly::new();
                    // f · b[l..]
                    for (w, c) in rf.tail.iter() {
                        let mut word = w.clone();
                        word.extend_from_slice(&b[l..]);
                        add_term(f, &mut s, word, c.clone());
                    }
                    // - a[..p-l] · g
                    for (w, c) in rg.tail.iter() {
                        let mut word: Word = SmallVec::from_slice(&a[..p - l]);
                        word.extend_from_slice(w);
                        add_term(f, &mut s, word, f.neg(c));
                    }
                    out.push(s);
                }
            }
        }
        out
    }
}

fn add_term<F: Field>(f: &F, poly: &mut Poly<F::Elem>, w: Word, c: F::Elem) {
    match poly.get_mut(&w) {
        Some(v) => {
            *v = f.add(v, &c);
            if f.is_zero(v) {
                poly.remove(&w);
            }
        }
        None => {
            if !f.is_zero(&c) {
                poly.insert(w, c);
            }
        }
    }
}

/// Degree-by-degree two-sided Buchberger completion up to `max_degree`,
/// stopping early once a degree has no normal words.
pub fn truncated_groebner(
    pres: &QuadraticPresentation,
    max_degree: usize,
) -> Result<TruncatedGroebner> {
    truncated_groebner_over(pres, max_degree, Rationals, Budget::default())
}

/// [`truncated_groebner`] over any field. The budget caps the number of
/// normal words kept per degree.
pub fn truncated_groebner_over<F: Field>(
    pres: &QuadraticPresentation,
    max_degree: usize,
    field: F,
    budget: Budget,
) -> Result<TruncatedGroebner<F>> {
    if max_degree < 2 {
        return Err(Error::Unsupported {
            what: format!("max degree {max_degree}"),
            detail: "the truncation degree must be at least 2".into(),
        });
    }
    let m = pres.generators().len();
    if max_degree > 64 {
        return Err(Error::Unsupported {
            what: format!("max degree {max_degree}"),
            detail: "truncation degree is capped at 64".into(),
        });
    }
    let mut gb = TruncatedGroebner {
        field,
        generators: m,
        max_degree,
        rules: Vec::new(),
        lookup: HashMap::new(),
        lead_lengths: Vec::new(),
        prefixes: HashMap::new(),
        normal_counts: vec![1, m as u64],
    };
    let mut normal: Vec<Word> = (0..m as u8).map(|g| SmallVec::from_slice(&[g])).collect();
    for d in 2..=max_degree {
        let first_new = gb.rules.len();
        let mut candidates = if d == 2 {
            pres.relations()
                .iter()
                .map(|r| {
                    let mut p = Poly::new();
                    for (c, w) in &r.terms {
                        add_term(&gb.field, &mut p, w.clone(), gb.field.from_i64(*c));
                    }
                    p
                })
                .collect()
        } else {
            gb.overlaps(d)
        };
        for cand in candidates.drain(..) {
            let nf = gb.reduce(cand);
            if !nf.is_empty() {
                gb.insert_rule(nf);
            }
        }
        // inter-reduce the tails of this degree's rules
        for id in first_new..gb.rules.len() {
            let tail: Poly<F::Elem> = gb.rules[id].tail.iter().cloned().collect();
            let reduced = gb.reduce(tail);
            gb.rules[id].tail = reduced.into_iter().rev().collect();
        }
        gb.index_prefixes(first_new);

        budget.check("normal words", normal.len() as u128)?;
        let mut next = Vec::new();
        for w in &normal {
            for g in 0..m as u8 {
                let mut word = w.clone();
                word.push(g);
                let has_lead_suffix = gb.lead_lengths.iter().any(|&len| {
                    len <= word.len() && gb.lookup.contains_key(&word[word.len() - len..])
                });
                if !has_lead_suffix {
                    next.push(word);
                }
            }
        }
        normal = next;
        gb.normal_counts.push(normal.len() as u64);
        if normal.is_empty() {
            break;
        }
    }
    Ok(gb)
}

/// Hilbert series through degree `max_degree` from normal-word counts.
pub fn hilbert_series(pres: &QuadraticPresentation, max_degree: usize) -> Result<HilbertReport> {
    hilbert_series_with(pres, max_degree, Budget::default())
}

pub fn hilbert_series_with(
    pres: &QuadraticPresentation,
    max_degree: usize,
    budget: Budget,
) -> Result<HilbertReport> {
    let dims: Vec<u64> = if max_degree < 2 {
        [1, pres.generators().len() as u64][..=max_degree].to_vec()
    } else {
        truncated_groebner_over(pres, max_degree, Rationals, budget)?
            .normal_counts()
            .to_vec()
    };
    Ok(DimensionReport::new(
        Algebra::Fk,
        pres.n(),
        None,
        dims,
        "rational",
        Certification::Exact,
    ))
}

/// `m^d - rank { u r v : r a relation, |u| + |v| = d - 2 }` by sparse exact elimination.
pub fn linear_dim(pres: &QuadraticPresentation, d: usize, budget: Budget) -> Result<u64> {
    let m = pres.generators().len();
    let total = (m as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    budget.check("degree component", total)?;
    if d < 2 {
        return Ok(total as u64);
    }
    let q = Rationals;
    let total = total as usize;
    let outer = m.pow((d - 2) as u32);
    let mut ech = SparseEchelon::new(&q);
    for left_len in 0..=d - 2 {
        let right_len = d - 2 - left_len;
        let right_span = m.pow(right_len as u32);
        for ctx in 0..outer {
            let (u, v) = (ctx / right_span, ctx % right_span);
            for r in pres.relations() {
                let mut row: Vec<(usize, BigRational)> = r
                    .terms
                    .iter()
                    .map(|(c, w)| {
                        let mid = w[0] as usize * m + w[1] as usize;
                        let index = (u * m * m + mid) * right_span + v;
                        // largest word gets the smallest column, as in the monomial order
                        (total - 1 - index, q.from_i64(*c))
                    })
                    .collect();
                row.sort_by_key(|e| e.0);
                ech.insert(row);
            }
        }
    }
    Ok((total - ech.rank()) as u64)
}

/// Total dimension once a zero component is reached by degree `max_degree`.
pub fn total_dim_if_finite(pres: &QuadraticPresentation, max_degree: usize) -> Result<Option<u64>> {
    Ok(hilbert_series(pres, max_degree)?.total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_counts() {
        assert_eq!(fk_presentation(2).unwrap().relations().len(), 1);
        assert_eq!(fk_presentation(3).unwrap().relations().len(), 5);
        assert_eq!(fk_presentation(4).unwrap().relations().len(), 17);
        assert_eq!(fk_presentation(5).unwrap().relations().len(), 10 + 20 + 15);
        assert!(fk_presentation(1).is_err());
    }

    #[test]
    fn text_format_round_trip() {
        let pres = fk_presentation(3).unwrap();
        let text = pres.to_text();
        assert!(text.contains("+ x12 x23 - x23 x13 - x13 x12"));
        let back = QuadraticPresentation::parse(&text).unwrap();
        assert_eq!(back.relations().len(), pres.relations().len());
        for (a, b) in back.relations().iter().zip(pres.relations()) {
            let mut x = a.terms.clone();
            let mut y = b.terms.clone();
            x.sort();
            y.sort();
            assert_eq!(x, y);
        }
        let custom =
            QuadraticPresentation::parse("# comment\nx12 x12\n- 2 x13 x12 + 2 x12 x13\n").unwrap();
        assert_eq!(custom.n(), 3);
        assert_eq!(custom.relations()[1].terms.len(), 2);
        for bad in [
            "x12",
            "+ x12 x23 -",
            "x12 x12 x12",
            "n = 3\nx14 x14",
            "x21 x21",
            "+ + x12 x12",
            "3",
        ] {
            assert!(
                QuadraticPresentation::parse(bad).is_err(),
                "{bad:?} should fail"
            );
        }
    }

    #[test]
    fn groebner_small_cases() {
        let gb = truncated_groebner(&fk_presentation(3).unwrap(), 6).unwrap();
        assert_eq!(gb.normal_counts(), &[1, 3, 4, 3, 1, 0]);
        let gb = truncated_groebner(&fk_presentation(2).unwrap(), 3).unwrap();
        assert_eq!(gb.normal_counts(), &[1, 1, 0]);
        assert!(truncated_groebner(&fk_presentation(3).unwrap(), 1).is_err());
    }

    #[test]
    fn linear_dim_small_cases() {
        let b = Budget::default();
        let p3 = fk_presentation(3).unwrap();
        assert_eq!(linear_dim(&p3, 1, b).unwrap(), 3);
        assert_eq!(linear_dim(&p3, 2, b).unwrap(), 4);
        assert_eq!(linear_dim(&p3, 5, b).unwrap(), 0);
        assert_eq!(linear_dim(&fk_presentation(4).unwrap(), 2, b).unwrap(), 19);
        assert!(linear_dim(&p3, 9, Budget { max_words: 1000 }).is_err());
    }

    #[test]
    fn hilbert_report_shape() {
        let r = hilbert_series(&fk_presentation(3).unwrap(), 8).unwrap();
        assert_eq!(r.dims, vec![1, 3, 4, 3, 1, 0]);
        assert_eq!(r.total, Some(12));
        assert!(r.certified_finite);
        let r = hilbert_series(&fk_presentation(5).unwrap(), 2).unwrap();
        assert_eq!(r.dims, vec![1, 10, 55]);
        assert_eq!(r.total, None);
    }
}
