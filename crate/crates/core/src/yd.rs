//! Yetter–Drinfeld modules over `S_n` with a basis indexed by transpositions.
//!
//! Two families are built: the conjugacy-class modules `M(O_(12), χ)` for a
//! character `χ` of the centralizer of `(1 2)`, and the modules `M(S_n, T, φ)`
//! defined by a sign function `φ` on `S_n × T`. In both, the coaction is
//! diagonal (`δ(e_t) = t ⊗ e_t`) and every group element acts by a signed
//! permutation of the basis, so braidings are monomial matrices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::{
    centralizer_decompose, class_transpositions, conj_action, left_coset_factor, Permutation, Sign,
    Transposition,
};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum TailMode {
    Sgn,
    Trivial,
}

/// Selects the module family.
///
/// `ChiPrime` is `sgn ⊗ sgn` and `ChiDoublePrime` is `ε ⊗ sgn` on the
/// centralizer `<(1 2)> × S_{3..n}`: writing `γ = (1 2)^a τ`,
/// `χ'(γ) = (-1)^a sgn(τ)` and `χ''(γ) = (-1)^a`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum CharacterSpec {
    ChiPrime,
    ChiDoublePrime,
    Phi1,
    Phi2,
    Custom { swap_sign: Sign, tail: TailMode },
}

impl CharacterSpec {
    /// Whether this is a character of the centralizer (as opposed to a `φ`).
    pub fn is_character(self) -> bool {
        !matches!(self, CharacterSpec::Phi1 | CharacterSpec::Phi2)
    }

    fn as_custom(self) -> Option<(Sign, TailMode)> {
        match self {
            CharacterSpec::ChiPrime => Some((Sign::Minus, TailMode::Sgn)),
            CharacterSpec::ChiDoublePrime => Some((Sign::Minus, TailMode::Trivial)),
            CharacterSpec::Custom { swap_sign, tail } => Some((swap_sign, tail)),
            CharacterSpec::Phi1 | CharacterSpec::Phi2 => None,
        }
    }
}

impl fmt::Display for CharacterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterSpec::ChiPrime => f.write_str("sgn-sgn"),
            CharacterSpec::ChiDoublePrime => f.write_str("eps-sgn"),
            CharacterSpec::Phi1 => f.write_str("phi1"),
            CharacterSpec::Phi2 => f.write_str("phi2"),
            CharacterSpec::Custom { swap_sign, tail } => write!(
                f,
                "custom:{}:{}",
                swap_sign,
                match tail {
                    TailMode::Sgn => "sgn",
                    TailMode::Trivial => "trivial",
                }
            ),
        }
    }
}

impl FromStr for CharacterSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Unsupported {
            what: format!("character {s:?}"),
            detail: "expected sgn-sgn, eps-sgn, phi1, phi2 or custom:<+1|-1>:<sgn|trivial>".into(),
        };
        match s {
            "sgn-sgn" | "chi-prime" => Ok(CharacterSpec::ChiPrime),
            "eps-sgn" | "chi-double-prime" => Ok(CharacterSpec::ChiDoublePrime),
            "phi1" => Ok(CharacterSpec::Phi1),
            "phi2" => Ok(CharacterSpec::Phi2),
            _ => {
                let rest = s.strip_prefix("custom:").ok_or_else(bad)?;
                let (sign, tail) = rest.split_once(':').ok_or_else(bad)?;
                let swap_sign = match sign {
                    "+1" | "1" => Sign::Plus,
                    "-1" => Sign::Minus,
                    _ => return Err(bad()),
                };
                let tail = match tail {
                    "sgn" => TailMode::Sgn,
                    "trivial" => TailMode::Trivial,
                    _ => return Err(bad()),
                };
                Ok(CharacterSpec::Custom { swap_sign, tail })
            }
        }
    }
}

impl Serialize for CharacterSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CharacterSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Value of a centralizer character on `γ`.
pub fn char_value(spec: CharacterSpec, gamma: &Permutation) -> Result<Sign> {
    let (swap_sign, tail_mode) = spec.as_custom().ok_or_else(|| Error::Unsupported {
        what: spec.to_string(),
        detail: "not a character of the centralizer".into(),
    })?;
    let c = centralizer_decompose(gamma)?;
    let swap = if c.swap { swap_sign } else { Sign::Plus };
    let tail = match tail_mode {
        TailMode::Sgn => c.tail.sign(),
        TailMode::Trivial => Sign::Plus,
    };
    Ok(swap * tail)
}

/// `φ1(g, (i,j))` is `+1` iff `g(i) < g(j)`; `φ2(g, t) = (-1)^{l(g)}` is the sign of `g`.
pub fn phi_value(spec: CharacterSpec, g: &Permutation, t: Transposition) -> Result<Sign> {
    match spec {
        CharacterSpec::Phi1 => Ok(Sign::from_parity(g.apply(t.i()) > g.apply(t.j()))),
        CharacterSpec::Phi2 => Ok(g.sign()),
        other => Err(Error::Unsupported {
            what: other.to_string(),
            detail: "not a phi function".into(),
        }),
    }
}

/// The defining action `g · e_t = ± e_{g▷t}`, straight from the formulas.
pub fn direct_action(
    spec: CharacterSpec,
    g: &Permutation,
    t: Transposition,
) -> Result<(Transposition, Sign)> {
    if spec.is_character() {
        let (t_new, gamma) = left_coset_factor(g, t)?;
        Ok((t_new, char_value(spec, &gamma.to_permutation())?))
    } else {
        Ok((conj_action(g, t), phi_value(spec, g, t)?))
    }
}

/// Action of one adjacent transposition `s_k = (k k+1)` on the basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorAction {
    pub generator: Transposition,
    pub targets: Vec<usize>,
    pub signs: Vec<Sign>,
}

/// A Yetter–Drinfeld module with transposition-indexed basis and diagonal coaction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YdModule {
    n: usize,
    character: CharacterSpec,
    basis: Vec<Transposition>,
    generator_actions: Vec<GeneratorAction>,
}

impl YdModule {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn character(&self) -> CharacterSpec {
        self.character
    }

    pub fn basis(&self) -> &[Transposition] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn generator_actions(&self) -> &[GeneratorAction] {
        &self.generator_actions
    }

    pub fn index_of(&self, t: Transposition) -> Option<usize> {
        self.basis.iter().position(|&b| b == t)
    }

    /// The degree `t` of `e_t` under the diagonal coaction `δ(e_t) = t ⊗ e_t`.
    pub fn coaction_tag(&self, index: usize) -> Transposition {
        self.basis[index]
    }

    /// `s_k · e_index`.
    pub fn act_generator(&self, k: usize, index: usize) -> (usize, Sign) {
        let a = &self.generator_actions[k - 1];
        (a.targets[index], a.signs[index])
    }

    /// `g · e_index`, through a reduced word of `g`.
    pub fn act(&self, g: &Permutation, index: usize) -> (usize, Sign) {
        assert_eq!(g.degree(), self.n);
        let mut idx = index;
        let mut sign = Sign::Plus;
        for &k in g.reduced_word().iter().rev() {
            let (next, s) = self.act_generator(k, idx);
            idx = next;
            sign = sign * s;
        }
        (idx, sign)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("module serializes")
    }

    /// Parses and structurally validates a module document. Module axioms are
    /// not checked here; see [`check_yd_compatibility`].
    pub fn from_json(s: &str) -> Result<YdModule> {
        let raw: RawModule = serde_json::from_str(s).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        raw.validate()
    }

    /// A copy with the sign of `s_k · e_index` flipped.
    pub fn with_flipped_sign(&self, k: usize, index: usize) -> YdModule {
        let mut out = self.clone();
        let s = &mut out.generator_actions[k - 1].signs[index];
        *s = -*s;
        out
    }

    /// Group elements carrying a nonzero homogeneous component, with dimensions.
    pub fn comodule_support(&self) -> crate::verify::ComoduleSupport {
        let mut support = crate::verify::ComoduleSupport::new(self.n);
        for &t in &self.basis {
            support.add(t.to_permutation(self.n).expect("basis fits n"), 1);
        }
        support
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModule {
    n: usize,
    character: CharacterSpec,
    basis: Vec<Transposition>,
    generator_actions: Vec<GeneratorAction>,
}

impl RawModule {
    fn validate(self) -> Result<YdModule> {
        let invalid = |msg: String| Error::Parse {
            line: 0,
            message: msg,
        };
        if self.n < 2 || self.n > 64 {
            return Err(invalid(format!("n = {} outside 2..=64", self.n)));
        }
        let m = self.basis.len();
        if m == 0 {
            return Err(invalid("empty basis".into()));
        }
        let mut sorted = self.basis.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != m {
            return Err(invalid("repeated basis element".into()));
        }
        if let Some(t) = self.basis.iter().find(|t| !t.fits(self.n)) {
            return Err(invalid(format!("basis element {t} outside 1..{}", self.n)));
        }
        if self.generator_actions.len() != self.n - 1 {
            return Err(invalid(format!(
                "expected {} generator actions, found {}",
                self.n - 1,
                self.generator_actions.len()
            )));
        }
        for (k, a) in self.generator_actions.iter().enumerate() {
            let expected = Transposition::new(k + 1, k + 2)?;
            if a.generator != expected {
                return Err(invalid(format!(
                    "generator {} should be {expected}",
                    a.generator
                )));
            }
            if a.targets.len() != m || a.signs.len() != m {
                return Err(invalid(format!(
                    "generator {expected}: table length differs from basis"
                )));
            }
            let mut seen = vec![false; m];
            for &tgt in &a.targets {
                if tgt >= m || seen[tgt] {
                    return Err(invalid(format!(
                        "generator {expected}: targets are not a bijection"
                    )));
                }
                seen[tgt] = true;
            }
        }
        Ok(YdModule {
            n: self.n,
            character: self.character,
            basis: self.basis,
            generator_actions: self.generator_actions,
        })
    }
}

fn build_module(n: usize, spec: CharacterSpec) -> Result<YdModule> {
    let basis = class_transpositions(n)?;
    let mut generator_actions = Vec::with_capacity(n - 1);
    for k in 1..n {
        let s = Permutation::simple(n, k);
        let mut targets = Vec::with_capacity(basis.len());
        let mut signs = Vec::with_capacity(basis.len());
        for &t in &basis {
            let (t_new, sign) = direct_action(spec, &s, t)?;
            targets.push(t_new.index(n));
            signs.push(sign);
        }
        generator_actions.push(GeneratorAction {
            generator: Transposition::new(k, k + 1)?,
            targets,
            signs,
        });
    }
    Ok(YdModule {
        n,
        character: spec,
        basis,
        generator_actions,
    })
}

/// `M(O_(12), χ)`: `h · e_t = χ(γ) e_t'` where `h g_t = g_t' γ`.
pub fn build_conjugacy_module(n: usize, spec: CharacterSpec) -> Result<YdModule> {
    if !spec.is_character() {
        return Err(Error::Unsupported {
            what: spec.to_string(),
            detail: "conjugacy-class modules need a centralizer character".into(),
        });
    }
    build_module(n, spec)
}

/// `M(S_n, T, φ)`: `g · e_t = φ(g, t) e_{g▷t}`.
pub fn build_ms_module(n: usize, spec: CharacterSpec) -> Result<YdModule> {
    if spec.is_character() {
        return Err(Error::Unsupported {
            what: spec.to_string(),
            detail: "M(S_n, T, phi) needs phi1 or phi2".into(),
        });
    }
    build_module(n, spec)
}

/// Either family, chosen by `spec`.
pub fn build(n: usize, spec: CharacterSpec) -> Result<YdModule> {
    build_module(n, spec)
}

/// A signed permutation matrix: column `j` has the single entry `sign[j]` in row `target[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMatrix {
    target: Vec<u32>,
    sign: Vec<Sign>,
}

impl MonomialMatrix {
    pub fn identity(dim: usize) -> Self {
        MonomialMatrix {
            target: (0..dim as u32).collect(),
            sign: vec![Sign::Plus; dim],
        }
    }

    /// Panics if `target` and `sign` differ in length or `target` is not a bijection.
    pub fn new(target: Vec<u32>, sign: Vec<Sign>) -> Self {
        assert_eq!(target.len(), sign.len());
        let m = MonomialMatrix { target, sign };
        assert!(
            m.is_invertible(),
            "monomial matrix must have one entry per row and column"
        );
        m
    }

    pub fn dim(&self) -> usize {
        self.target.len()
    }

    /// Image of basis vector `col`.
    pub fn apply(&self, col: usize) -> (usize, Sign) {
        (self.target[col] as usize, self.sign[col])
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MonomialMatrix) -> MonomialMatrix {
        assert_eq!(self.dim(), other.dim());
        let (target, sign) = other
            .target
            .iter()
            .zip(&other.sign)
            .map(|(&t, &s)| (self.target[t as usize], self.sign[t as usize] * s))
            .unzip();
        MonomialMatrix { target, sign }
    }

    pub fn inverse(&self) -> MonomialMatrix {
        let mut target = vec![0u32; self.dim()];
        let mut sign = vec![Sign::Plus; self.dim()];
        for (c, (&r, &s)) in self.target.iter().zip(&self.sign).enumerate() {
            target[r as usize] = c as u32;
            sign[r as usize] = s;
        }
        MonomialMatrix { target, sign }
    }

    pub fn is_invertible(&self) -> bool {
        let mut seen = vec![false; self.dim()];
        for &r in &self.target {
            let r = r as usize;
            if r >= seen.len() || seen[r] {
                return false;
            }
            seen[r] = true;
        }
        true
    }

    pub fn is_identity(&self) -> bool {
        self.target
            .iter()
            .enumerate()
            .all(|(c, &r)| c == r as usize)
            && self.sign.iter().all(|&s| s == Sign::Plus)
    }

    pub fn to_sparse(&self) -> crate::linalg::SparseIntMatrix {
        let mut m = crate::linalg::SparseIntMatrix::zeros(self.dim(), self.dim());
        for (c, (&r, &s)) in self.target.iter().zip(&self.sign).enumerate() {
            m.add_entry(r as usize, c, s.to_i64());
        }
        m
    }
}

/// `c(e_s ⊗ e_t) = (s · e_t) ⊗ e_s` on `V ⊗ V`, basis index `s * m + t`.
pub fn braiding(module: &YdModule) -> MonomialMatrix {
    let m = module.dim();
    let mut target = Vec::with_capacity(m * m);
    let mut sign = Vec::with_capacity(m * m);
    for s in 0..m {
        let g = module
            .coaction_tag(s)
            .to_permutation(module.n())
            .expect("basis fits n");
        for t in 0..m {
            let (t_new, eps) = module.act(&g, t);
            target.push((t_new * m + s) as u32);
            sign.push(eps);
        }
    }
    MonomialMatrix::new(target, sign)
}

/// First failure found by [`check_yd_compatibility`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum YdWitness {
    /// `s_k · e_t` lands outside the `s_k t s_k` component.
    Grading {
        generator: Transposition,
        basis: Transposition,
        image: Transposition,
    },
    /// A Coxeter relation fails on `e_t`, so the table is not an `S_n`-action.
    Relation {
        relation: String,
        basis: Transposition,
    },
}

/// Checks that the generator tables define an `S_n`-action (Coxeter relations on
/// every basis vector) and that `δ(h · e_t) = h t h^{-1} ⊗ h · e_t` for every
/// generator `h` and basis vector `e_t`.
pub fn check_yd_compatibility(module: &YdModule) -> Result<(), YdWitness> {
    let n = module.n();
    let m = module.dim();
    for k in 1..n {
        let s = Permutation::simple(n, k);
        for t in 0..m {
            let (img, _) = module.act_generator(k, t);
            let expected = conj_action(&s, module.coaction_tag(t));
            if module.coaction_tag(img) != expected {
                return Err(YdWitness::Grading {
                    generator: Transposition::new(k, k + 1).expect("adjacent"),
                    basis: module.coaction_tag(t),
                    image: module.coaction_tag(img),
                });
            }
        }
    }
    let word = |ks: &[usize], t: usize| {
        ks.iter().rev().fold((t, Sign::Plus), |(idx, sg), &k| {
            let (next, s) = module.act_generator(k, idx);
            (next, sg * s)
        })
    };
    for t in 0..m {
        for k in 1..n {
            if word(&[k, k], t) != (t, Sign::Plus) {
                return Err(YdWitness::Relation {
                    relation: format!("s{k}^2 = 1"),
                    basis: module.coaction_tag(t),
                });
            }
            for l in k + 1..n {
                let holds = if l == k + 1 {
                    word(&[k, l, k], t) == word(&[l, k, l], t)
                } else {
                    word(&[k, l], t) == word(&[l, k], t)
                };
                if !holds {
                    let relation = if l == k + 1 {
                        format!("s{k} s{l} s{k} = s{l} s{k} s{l}")
                    } else {
                        format!("s{k} s{l} = s{l} s{k}")
                    };
                    return Err(YdWitness::Relation {
                        relation,
                        basis: module.coaction_tag(t),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Basis triple on which `(c⊗1)(1⊗c)(c⊗1)` and `(1⊗c)(c⊗1)(1⊗c)` differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidWitness {
    pub tensor: [usize; 3],
}

/// Checks the braid relation of a monomial braiding on `V ⊗ V`, where `V` has dimension `m`.
pub fn check_braid_relation(c: &MonomialMatrix, m: usize) -> Result<(), BraidWitness> {
    assert_eq!(c.dim(), m * m);
    let first = |w: [usize; 3]| {
        let (img, s) = c.apply(w[0] * m + w[1]);
        ([img / m, img % m, w[2]], s)
    };
    let second = |w: [usize; 3]| {
        let (img, s) = c.apply(w[1] * m + w[2]);
        ([w[0], img / m, img % m], s)
    };
    type Step<'a> = &'a dyn Fn([usize; 3]) -> ([usize; 3], Sign);
    let chain = |w: [usize; 3], ops: [Step; 3]| {
        ops.iter().rev().fold((w, Sign::Plus), |(w, sg), op| {
            let (next, s) = op(w);
            (next, sg * s)
        })
    };
    for a in 0..m {
        for b in 0..m {
            for d in 0..m {
                let w = [a, b, d];
                if chain(w, [&first, &second, &first]) != chain(w, [&second, &first, &second]) {
                    return Err(BraidWitness { tensor: w });
                }
            }
        }
    }
    Ok(())
}

pub fn check_braid_equation(module: &YdModule) -> Result<(), BraidWitness> {
    check_braid_relation(&braiding(module), module.dim())
}
