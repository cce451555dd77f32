//! Mechanical checks: coset-factor identities, the quadratic sign table of
//! `M(O_(12), χ'')`, the sign-twisted map from `E_n`, diagonal isomorphism
//! tests between module families, and comodule supports.
//!
//! Every suite produces a [`Verdict`] document.

use std::collections::{BTreeMap, HashMap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fk::{fk_presentation, hilbert_series};
use crate::linalg::SparseIntMatrix;
use crate::nichols::{graded_dims, symmetrizer2, Budget, FieldMode};
use crate::perm::{class_transpositions, parse_cycle_tokens, Permutation, Sign, Transposition};
use crate::quiver::{braidings_agree, psi_check, BiOneRsc};
use crate::report::DimensionReport;
use crate::yd::{
    build, check_braid_equation, check_yd_compatibility, direct_action, CharacterSpec, YdModule,
};

/// Summary of a verification suite.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub suite: String,
    pub n: usize,
    pub cases_total: usize,
    pub cases_failed: usize,
    pub witnesses: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
}

impl Verdict {
    pub fn new(suite: &str, n: usize, cases_total: usize, witnesses: Vec<Value>) -> Self {
        Verdict {
            suite: suite.to_string(),
            n,
            cases_total,
            cases_failed: witnesses.len(),
            witnesses,
            details: None,
        }
    }

    pub fn with_details(mut self, details: impl Serialize) -> Self {
        self.details = Some(serde_json::to_value(details).expect("details serialize"));
        self
    }

    pub fn passed(&self) -> bool {
        self.cases_failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdict serializes")
    }
}

// ---------------------------------------------------------------------------
// permutation identities

/// Index variables of an identity template, `0` when unused.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Bindings {
    pub j: usize,
    pub k: usize,
    pub j1: usize,
    pub k1: usize,
}

impl Bindings {
    fn get(&self, name: &str) -> Option<usize> {
        match name {
            "j" => Some(self.j),
            "k" => Some(self.k),
            "j1" => Some(self.j1),
            "k1" => Some(self.k1),
            _ => None,
        }
    }

    fn set(&mut self, name: &str, v: usize) {
        match name {
            "j" => self.j = v,
            "k" => self.k = v,
            "j1" => self.j1 = v,
            "k1" => self.k1 = v,
            _ => unreachable!("unknown variable {name}"),
        }
    }

    fn distinct(&self, names: &[&str]) -> bool {
        let vals: Vec<usize> = names.iter().filter_map(|n| self.get(n)).collect();
        vals.iter()
            .enumerate()
            .all(|(a, x)| vals[a + 1..].iter().all(|y| y != x))
    }
}

/// A family of permutation equations `lhs = mid = ... = rhs` in cycle
/// notation over index variables, with the tuples it is claimed for.
pub struct IdentityFamily {
    pub template: &'static str,
    pub variables: &'static [&'static str],
    admissible: fn(&Bindings) -> bool,
}

impl IdentityFamily {
    pub fn is_admissible(&self, b: &Bindings) -> bool {
        (self.admissible)(b)
    }
}

macro_rules! family {
    ($t:expr, [$($v:expr),*], |$b:ident| $cond:expr) => {
        IdentityFamily { template: $t, variables: &[$($v),*], admissible: |$b: &Bindings| $cond }
    };
}

/// How products `g · g_t`, `g_t · h` of coset representatives with
/// transpositions rewrite, for every shape of representative and factor.
pub const COSET_IDENTITIES: &[IdentityFamily] = &[
    family!("(1 2) id = id (1 2)", [], |_b| true),
    family!("(1 2)(2 j) = (2 j 1) = (1 j)(1 2)", ["j"], |b| b.j > 2),
    family!("(1 2)(1 j) = (1 j 2) = (2 j)(1 2)", ["j"], |b| b.j > 2),
    family!(
        "(1 2)(1 k)(2 j) = (1 k 2)(2 j) = (1 k)(2 j)(k j)",
        ["k", "j"],
        |b| 2 < b.k && b.k < b.j
    ),
    family!("(1 j) id = (1 j) id", ["j"], |b| b.j > 2),
    family!("(1 j)(2 j) = (j 2 1) = (2 j)(1 2)", ["j"], |b| b.j > 2),
    family!("(1 j)(2 j1) = (1 j)(2 j1) id", ["j", "j1"], |b| 2 < b.j
        && b.j < b.j1),
    family!("(1 j)(2 j1) = (1 j1)(2 j)(j j1)(1 2)", ["j", "j1"], |b| 2
        < b.j1
        && b.j1 < b.j),
    family!("(1 j)(1 j) = id", ["j"], |b| b.j > 2),
    family!("(1 j)(1 j1) = (1 j1 j) = (1 j1)(j j1)", ["j", "j1"], |b| b
        .j
        > 2
        && b.j1 > 2
        && b.j != b.j1),
    family!(
        "(1 j)(1 k)(2 j) = (1 k j)(2 j) = (2 k)(1 2)(k j)",
        ["k", "j"],
        |b| 2 < b.k && b.k < b.j
    ),
    family!("(1 j)(1 k)(2 j1) = (2 j1) id", ["j", "k", "j1"], |b| 2 < b
        .k
        && b.k < b.j1
        && b.j == b.k),
    family!(
        "(1 j)(1 k)(2 j1) = (1 k)(k j)(2 j1) = (1 k)(2 j1)(k j)",
        ["j", "k", "j1"],
        |b| 2 < b.k && b.k < b.j1 && b.j > 2 && b.distinct(&["j", "k", "j1"])
    ),
    family!("(2 j) id = (2 j) id", ["j"], |b| b.j > 2),
    family!("(2 j)(2 j) = id", ["j"], |b| b.j > 2),
    family!("(2 j)(2 j1) = (2 j1 j) = (2 j1)(j j1)", ["j", "j1"], |b| b
        .j
        > 2
        && b.j1 > 2
        && b.j != b.j1),
    family!("(2 j)(1 j) = (j 1 2) = (1 j)(1 2)", ["j"], |b| b.j > 2),
    family!("(2 j)(1 j1) = (1 j)(2 j1)(j j1)(1 2)", ["j", "j1"], |b| 2
        < b.j
        && b.j < b.j1),
    family!("(2 j)(1 j1) = (1 j1)(2 j) id", ["j", "j1"], |b| 2 < b.j1
        && b.j1 < b.j),
    family!("(2 j)(1 k)(2 j) = (1 k) = (1 k) id", ["k", "j"], |b| 2 < b
        .k
        && b.k < b.j),
    family!(
        "(2 j)(1 k)(2 j1) = (1 k)(1 2)(2 j1) = (1 k)(1 j1)(1 2) = (1 j1)(1 2)(k j1)",
        ["j", "k", "j1"],
        |b| 2 < b.k && b.k < b.j1 && b.j == b.k
    ),
    family!(
        "(2 j)(1 k)(2 j1) = (2 j)(2 j1)(1 k) = (2 j1)(j1 j)(1 k) = (2 j1)(1 k)(j1 j)",
        ["j", "k", "j1"],
        |b| 2 < b.k && b.k < b.j1 && b.j > 2 && b.distinct(&["j", "k", "j1"])
    ),
    family!("(k j) id = id (k j)", ["k", "j"], |b| 2 < b.k && b.k < b.j),
    family!("(k j)(2 j) = (2 k)(k j)", ["k", "j"], |b| 2 < b.k
        && b.k < b.j),
    family!("(k j)(2 k) = (2 j)(k j)", ["k", "j"], |b| 2 < b.k
        && b.k < b.j),
    family!("(k j)(2 j1) = (2 j1)(k j)", ["k", "j", "j1"], |b| 2 < b.k
        && b.k < b.j
        && b.j1 > 2
        && b.distinct(&["k", "j", "j1"])),
    family!("(k j)(1 j) = (1 k)(k j)", ["k", "j"], |b| 2 < b.k
        && b.k < b.j),
    family!("(k j)(1 k) = (1 j)(k j)", ["k", "j"], |b| 2 < b.k
        && b.k < b.j),
    family!("(k j)(1 j1) = (1 j1)(k j)", ["k", "j", "j1"], |b| 2 < b.k
        && b.k < b.j
        && b.j1 > 2
        && b.distinct(&["k", "j", "j1"])),
    family!("(k j)(1 k)(2 j) = (1 k)(2 j)(1 2)", ["k", "j"], |b| 2 < b.k
        && b.k < b.j),
    family!(
        "(k j)(1 k1)(2 j1) = (1 k)(2 j1)(k j)",
        ["k", "j", "k1", "j1"],
        |b| 2 < b.k && b.k < b.j && 2 < b.k1 && b.k1 < b.j1 && b.k1 == b.j
    ),
    family!(
        "(k j)(1 k1)(2 j1) = (1 k1)(2 k)(k j)",
        ["k", "j", "k1", "j1"],
        |b| 2 < b.k && b.k < b.j && 2 < b.k1 && b.k1 < b.j1 && b.k1 < b.k && b.j1 == b.j
    ),
    family!(
        "(k j)(1 k1)(2 j1) = (1 k)(2 k1)(1 2)(k j k1)",
        ["k", "j", "k1", "j1"],
        |b| 2 < b.k && b.k < b.j && 2 < b.k1 && b.k1 < b.j1 && b.k1 > b.k && b.j1 == b.j
    ),
    family!(
        "(k j)(1 k1)(2 j1) = (1 j)(2 j1)(k j)",
        ["k", "j", "k1", "j1"],
        |b| 2 < b.k && b.k < b.j && 2 < b.k1 && b.k1 < b.j1 && b.j1 > b.j && b.k1 == b.k
    ),
    family!(
        "(k j)(1 k1)(2 j1) = (1 j1)(2 j)(1 2)(j k j1)",
        ["k", "j", "k1", "j1"],
        |b| 2 < b.k && b.k < b.j && 2 < b.k1 && b.k1 < b.j1 && b.j1 < b.j && b.k1 == b.k
    ),
    family!(
        "(k j)(1 k1)(2 j1) = (1 k1)(2 j)(k j)",
        ["k", "j", "k1", "j1"],
        |b| 2 < b.k && b.k < b.j && 2 < b.k1 && b.k1 < b.j1 && b.k1 != b.j && b.j1 == b.k
    ),
    family!(
        "(k j)(1 k1)(2 j1) = (1 k1)(2 j1)(k j)",
        ["k", "j", "k1", "j1"],
        |b| 2 < b.k && b.k < b.j && 2 < b.k1 && b.k1 < b.j1 && b.distinct(&["k", "j", "k1", "j1"])
    ),
];

fn eval_side(side: &str, b: &Bindings, n: usize) -> Result<Permutation> {
    let cycles = parse_cycle_tokens(side, |tok| {
        tok.parse::<usize>()
            .ok()
            .or_else(|| b.get(tok))
            .ok_or_else(|| Error::InvalidPermutation(format!("unknown token {tok:?} in {side:?}")))
    })?;
    Permutation::from_cycles(n, &cycles)
}

/// Whether every side of `template` evaluates to the same permutation of
/// `S_n` under `b`. Ill-formed instances (a repeated point inside a cycle)
/// count as false.
pub fn check_identity(template: &str, b: &Bindings, n: usize) -> Result<bool> {
    let sides: Vec<&str> = template.split('=').map(str::trim).collect();
    if sides.len() < 2 {
        return Err(Error::Unsupported {
            what: template.to_string(),
            detail: "an identity needs at least two sides".into(),
        });
    }
    let mut values = Vec::with_capacity(sides.len());
    for side in sides {
        match eval_side(side, b, n) {
            Ok(p) => values.push(p),
            Err(Error::InvalidPermutation(msg)) if msg.contains("repeated") => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    Ok(values.windows(2).all(|w| w[0] == w[1]))
}

/// All admissible bindings of a family's variables over `1..=n`, in lexicographic order.
pub fn instances(family: &IdentityFamily, n: usize) -> Vec<Bindings> {
    let vars = family.variables;
    let mut out = Vec::new();
    let mut digits = vec![1usize; vars.len()];
    loop {
        let mut b = Bindings::default();
        for (name, &v) in vars.iter().zip(&digits) {
            b.set(name, v);
        }
        if family.is_admissible(&b) {
            out.push(b);
        }
        let Some(pos) = (0..digits.len()).rev().find(|&p| digits[p] < n) else {
            break;
        };
        digits[pos] += 1;
        for d in &mut digits[pos + 1..] {
            *d = 1;
        }
    }
    out
}

/// Checks every family of `families` on every admissible tuple in `S_n`.
pub fn identity_suite(families: &[IdentityFamily], n: usize) -> Result<Verdict> {
    let mut total = 0;
    let mut witnesses = Vec::new();
    for family in families {
        for b in instances(family, n) {
            total += 1;
            if !check_identity(family.template, &b, n)? {
                witnesses.push(json!({ "identity": family.template, "bindings": b }));
            }
        }
    }
    Ok(Verdict::new("coset-identities", n, total, witnesses))
}

/// [`COSET_IDENTITIES`] over `S_n`, `n >= 4`.
pub fn lemma61_suite(n: usize) -> Result<Verdict> {
    if n < 4 {
        return Err(Error::RankTooSmall { n, min: 4 });
    }
    identity_suite(COSET_IDENTITIES, n)
}

// ---------------------------------------------------------------------------
// quadratic sign table

/// Signs with `e_ij ⊗ e_jk + α e_jk ⊗ e_ki + β e_ki ⊗ e_ij ∈ ker(1 + c)`
/// for one ordering pattern of distinct `i, j, k`.
#[derive(Clone, Debug)]
pub struct SignTableRow {
    pub case: &'static str,
    pub alpha: Sign,
    pub beta: Sign,
    applies: fn(usize, usize, usize) -> bool,
}

impl SignTableRow {
    pub fn applies(&self, i: usize, j: usize, k: usize) -> bool {
        (self.applies)(i, j, k)
    }

    pub fn with_signs(&self, alpha: Sign, beta: Sign) -> SignTableRow {
        SignTableRow {
            alpha,
            beta,
            ..self.clone()
        }
    }
}

const M: Sign = Sign::Minus;
const P: Sign = Sign::Plus;

pub const SIGN_TABLE: [SignTableRow; 8] = [
    SignTableRow {
        case: "2<i<j<k",
        alpha: M,
        beta: M,
        applies: |i, j, k| 2 < i && i < j && j < k,
    },
    SignTableRow {
        case: "i=1, j=2<k",
        alpha: M,
        beta: P,
        applies: |i, j, k| i == 1 && j == 2 && 2 < k,
    },
    SignTableRow {
        case: "i=1, 2<j<k",
        alpha: M,
        beta: M,
        applies: |i, j, k| i == 1 && 2 < j && j < k,
    },
    SignTableRow {
        case: "i=2<j<k",
        alpha: M,
        beta: P,
        applies: |i, j, k| i == 2 && 2 < j && j < k,
    },
    SignTableRow {
        case: "2<i<k<j",
        alpha: M,
        beta: P,
        applies: |i, j, k| 2 < i && i < k && k < j,
    },
    SignTableRow {
        case: "i=1, k=2<j",
        alpha: M,
        beta: M,
        applies: |i, j, k| i == 1 && k == 2 && 2 < j,
    },
    SignTableRow {
        case: "i=1, 2<k<j",
        alpha: M,
        beta: P,
        applies: |i, j, k| i == 1 && 2 < k && k < j,
    },
    SignTableRow {
        case: "i=2<k<j",
        alpha: M,
        beta: M,
        applies: |i, j, k| i == 2 && 2 < k && k < j,
    },
];

/// `1 + c` evaluated on sparse vectors of `V ⊗ V`.
struct QuadraticKernel<'a> {
    module: &'a YdModule,
    matrix: SparseIntMatrix,
}

impl<'a> QuadraticKernel<'a> {
    fn new(module: &'a YdModule) -> Self {
        QuadraticKernel {
            module,
            matrix: symmetrizer2(module),
        }
    }

    fn contains(&self, terms: &[(Transposition, Transposition, i64)]) -> bool {
        let m = self.module.dim();
        let mut v = vec![0i64; m * m];
        for &(s, t, c) in terms {
            let (s, t) = (
                self.module.index_of(s).unwrap(),
                self.module.index_of(t).unwrap(),
            );
            v[s * m + t] += c;
        }
        self.matrix.apply(&v).iter().all(|&x| x == 0)
    }
}

fn tr(a: usize, b: usize) -> Transposition {
    Transposition::new(a, b).expect("distinct indices")
}

/// Per-row outcome of [`table1_check`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SignRowOutcome {
    pub case: &'static str,
    pub alpha: Sign,
    pub beta: Sign,
    pub instances: usize,
    pub failures: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SignTableReport {
    pub n: usize,
    pub character: CharacterSpec,
    pub rows: Vec<SignRowOutcome>,
}

impl SignTableReport {
    pub fn passed(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.instances > 0 && r.failures.is_empty())
    }

    pub fn verdict(&self) -> Verdict {
        let witnesses: Vec<Value> = self
            .rows
            .iter()
            .flat_map(|r| {
                r.failures
                    .iter()
                    .map(move |ijk| json!({ "case": r.case, "alpha": r.alpha, "beta": r.beta, "ijk": ijk }))
            })
            .collect();
        Verdict::new(
            "sign-table",
            self.n,
            self.rows.iter().map(|r| r.instances).sum(),
            witnesses,
        )
    }
}

/// Checks `rows` against `ker(1 + c)` of the given module.
pub fn sign_table_check(module: &YdModule, rows: &[SignTableRow]) -> SignTableReport {
    let n = module.n();
    let kernel = QuadraticKernel::new(module);
    let outcomes = rows
        .iter()
        .map(|row| {
            let mut instances = 0;
            let mut failures = Vec::new();
            for i in 1..=n {
                for j in 1..=n {
                    for k in 1..=n {
                        if i == j || j == k || i == k || !row.applies(i, j, k) {
                            continue;
                        }
                        instances += 1;
                        let terms = [
                            (tr(i, j), tr(j, k), 1),
                            (tr(j, k), tr(k, i), row.alpha.to_i64()),
                            (tr(k, i), tr(i, j), row.beta.to_i64()),
                        ];
                        if !kernel.contains(&terms) {
                            failures.push([i, j, k]);
                        }
                    }
                }
            }
            SignRowOutcome {
                case: row.case,
                alpha: row.alpha,
                beta: row.beta,
                instances,
                failures,
            }
        })
        .collect();
    SignTableReport {
        n,
        character: module.character(),
        rows: outcomes,
    }
}

/// [`SIGN_TABLE`] against `M(O_(12), χ'')`, `n >= 5`.
pub fn table1_check(n: usize) -> Result<SignTableReport> {
    if n < 5 {
        return Err(Error::RankTooSmall { n, min: 5 });
    }
    Ok(sign_table_check(
        &build(n, CharacterSpec::ChiDoublePrime)?,
        &SIGN_TABLE,
    ))
}

// ---------------------------------------------------------------------------
// the map from E_n

/// Sign of `b_t = ±a_t`: negative exactly for `t = (2, j)`, `j > 2`.
pub fn twist_sign(t: Transposition) -> Sign {
    Sign::from_parity(t.i() == 2 && t.j() > 2)
}

/// Indices of relations of `E_n` whose image under `x_t ↦ b_t` (or `x_t ↦ a_t`
/// when `twisted` is false) is not in `ker(1 + c)` of `M(O_(12), χ'')`.
pub fn fk_relations_outside_kernel(n: usize, twisted: bool) -> Result<(usize, Vec<usize>)> {
    let pres = fk_presentation(n)?;
    let module = build(n, CharacterSpec::ChiDoublePrime)?;
    let kernel = QuadraticKernel::new(&module);
    let gens = pres.generators();
    let sign = |t: Transposition| if twisted { twist_sign(t) } else { Sign::Plus };
    let failing = pres
        .relations()
        .iter()
        .enumerate()
        .filter(|(_, r)| {
            let terms: Vec<(Transposition, Transposition, i64)> = r
                .terms
                .iter()
                .map(|(c, w)| {
                    let (s, t) = (gens[w[0] as usize], gens[w[1] as usize]);
                    (s, t, c * (sign(s) * sign(t)).to_i64())
                })
                .collect();
            !kernel.contains(&terms)
        })
        .map(|(k, _)| k)
        .collect();
    Ok((pres.relations().len(), failing))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurjectionReport {
    pub n: usize,
    pub relations: usize,
    /// Relations whose twisted image leaves the kernel; empty on success.
    pub twisted_failures: Vec<usize>,
    /// Relations whose untwisted image leaves the kernel; nonempty as expected.
    pub untwisted_failures: Vec<usize>,
    pub nichols: DimensionReport,
    pub fk: DimensionReport,
    /// Degrees where the Nichols dimension exceeds the `E_n` dimension.
    pub bound_violations: Vec<usize>,
    /// Degrees where both are known and equal.
    pub equal_degrees: Vec<usize>,
}

impl SurjectionReport {
    pub fn passed(&self) -> bool {
        self.twisted_failures.is_empty()
            && !self.untwisted_failures.is_empty()
            && self.bound_violations.is_empty()
    }

    pub fn verdict(&self) -> Verdict {
        let mut witnesses: Vec<Value> = self
            .twisted_failures
            .iter()
            .map(|r| json!({ "twisted_relation_outside_kernel": r }))
            .collect();
        if self.untwisted_failures.is_empty() {
            witnesses.push(json!({ "untwisted_control": "unexpectedly passed" }));
        }
        witnesses.extend(
            self.bound_violations
                .iter()
                .map(|d| json!({ "degree_bound_violated": d })),
        );
        Verdict::new(
            "fk-surjection",
            self.n,
            self.relations + 1 + self.nichols.dims.len(),
            witnesses,
        )
    }
}

/// Kernel membership of the twisted relations, the untwisted control, and
/// `dim B(V)_d <= dim (E_n)_d` for `d <= max_degree`.
pub fn theorem48_check(
    n: usize,
    max_degree: usize,
    mode: FieldMode,
    budget: Budget,
) -> Result<SurjectionReport> {
    if n < 4 {
        return Err(Error::RankTooSmall { n, min: 4 });
    }
    let (relations, twisted_failures) = fk_relations_outside_kernel(n, true)?;
    let (_, untwisted_failures) = fk_relations_outside_kernel(n, false)?;
    let module = build(n, CharacterSpec::ChiDoublePrime)?;
    let nichols = graded_dims(&module, max_degree, mode, budget)?;
    let fk = hilbert_series(&fk_presentation(n)?, max_degree)?;
    let mut bound_violations = Vec::new();
    let mut equal_degrees = Vec::new();
    for d in 0..=max_degree {
        if let (Some(a), Some(b)) = (nichols.dim(d), fk.dim(d)) {
            if a > b {
                bound_violations.push(d);
            } else if a == b {
                equal_degrees.push(d);
            }
        }
    }
    Ok(SurjectionReport {
        n,
        relations,
        twisted_failures,
        untwisted_failures,
        nichols,
        fk,
        bound_violations,
        equal_degrees,
    })
}

// ---------------------------------------------------------------------------
// diagonal isomorphisms

/// A violated constraint `k_{g▷t} · s1 = k_t · s2`, where `g · e_t = s1 e_{g▷t}`
/// in the first module and `s2 e_{g▷t}` in the second.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoWitness {
    pub g: Permutation,
    pub t: Transposition,
    pub lhs: Sign,
    pub rhs: Sign,
    pub k_source: Sign,
    pub k_target: Sign,
}

impl IsoWitness {
    /// Re-evaluates the constraint from the defining formulas of both families.
    pub fn violates(&self, m1: &YdModule, m2: &YdModule) -> Result<bool> {
        let (t1, s1) = direct_action(m1.character(), &self.g, self.t)?;
        let (t2, s2) = direct_action(m2.character(), &self.g, self.t)?;
        Ok(t1 != t2 || self.k_target * s1 != self.k_source * s2)
    }

    pub fn g_fixes_t(&self) -> bool {
        crate::perm::conj_action(&self.g, self.t) == self.t
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum IsoVerdict {
    Isomorphic { scalars: Vec<(Transposition, Sign)> },
    NotIsomorphic { witness: IsoWitness },
    NotComoduleIsomorphic { reason: String },
}

impl IsoVerdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic { .. })
    }
}

/// Looks for `ψ(e_t) = k_t e_t` intertwining the two actions.
///
/// First every generator `g` in `(1 2), s_2, ..., s_{n-1}` is tested on
/// each `t` it fixes, where the scalars cancel. Then `k_(1,2) = 1` is
/// propagated over the adjacent transpositions and all generator constraints
/// are checked.
pub fn iso_check(m1: &YdModule, m2: &YdModule) -> Result<IsoVerdict> {
    if m1.n() != m2.n() {
        return Ok(IsoVerdict::NotComoduleIsomorphic {
            reason: format!("modules over S_{} and S_{}", m1.n(), m2.n()),
        });
    }
    if m1.comodule_support() != m2.comodule_support() {
        return Ok(IsoVerdict::NotComoduleIsomorphic {
            reason: "coaction supports differ".into(),
        });
    }
    let n = m1.n();
    let basis: Vec<Transposition> = class_transpositions(n)?;
    let idx1: Vec<usize> = basis
        .iter()
        .map(|&t| m1.index_of(t).expect("same support"))
        .collect();
    let idx2: Vec<usize> = basis
        .iter()
        .map(|&t| m2.index_of(t).expect("same support"))
        .collect();
    let pos: HashMap<Transposition, usize> =
        basis.iter().enumerate().map(|(p, &t)| (t, p)).collect();

    // g · e_t in both modules, as (target position, s1, s2)
    let step = |k: usize, p: usize| -> Result<(usize, Sign, Sign)> {
        let (a, s1) = m1.act_generator(k, idx1[p]);
        let (b, s2) = m2.act_generator(k, idx2[p]);
        let (ta, tb) = (m1.basis()[a], m2.basis()[b]);
        if ta != tb {
            return Err(Error::Unsupported {
                what: format!("s_{k} on {}", basis[p]),
                detail: format!("moves it to {ta} in one module and {tb} in the other"),
            });
        }
        Ok((pos[&ta], s1, s2))
    };
    let witness = |k: usize, p: usize, s1: Sign, s2: Sign, ks: Sign, kt: Sign| IsoWitness {
        g: Permutation::simple(n, k),
        t: basis[p],
        lhs: kt * s1,
        rhs: ks * s2,
        k_source: ks,
        k_target: kt,
    };

    for k in 1..n {
        for p in 0..basis.len() {
            let (q, s1, s2) = match step(k, p) {
                Ok(v) => v,
                Err(e) => {
                    return Ok(IsoVerdict::NotComoduleIsomorphic {
                        reason: e.to_string(),
                    });
                }
            };
            if q == p && s1 != s2 {
                return Ok(IsoVerdict::NotIsomorphic {
                    witness: witness(k, p, s1, s2, Sign::Plus, Sign::Plus),
                });
            }
        }
    }

    let mut scalar: Vec<Option<Sign>> = vec![None; basis.len()];
    let start = pos[&tr(1, 2)];
    scalar[start] = Some(Sign::Plus);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        let kp = scalar[p].expect("queued with a scalar");
        for k in 1..n {
            let (q, s1, s2) = step(k, p).expect("checked above");
            if scalar[q].is_none() {
                // k_q s1 = k_p s2
                scalar[q] = Some(kp * s2 * s1);
                queue.push_back(q);
            }
        }
    }
    let scalar: Vec<Sign> = scalar
        .into_iter()
        .map(|s| s.expect("transpositions form one orbit"))
        .collect();
    for k in 1..n {
        for p in 0..basis.len() {
            let (q, s1, s2) = step(k, p).expect("checked above");
            if scalar[q] * s1 != scalar[p] * s2 {
                return Ok(IsoVerdict::NotIsomorphic {
                    witness: witness(k, p, s1, s2, scalar[p], scalar[q]),
                });
            }
        }
    }
    Ok(IsoVerdict::Isomorphic {
        scalars: basis.into_iter().zip(scalar).collect(),
    })
}

/// Whether `ψ(e_t) = k_t e_t` commutes with the action of every `g ∈ S_n`.
pub fn is_intertwiner(
    m1: &YdModule,
    m2: &YdModule,
    scalars: &[(Transposition, Sign)],
) -> Result<bool> {
    let k: HashMap<Transposition, Sign> = scalars.iter().copied().collect();
    let gs = crate::perm::all_permutations(m1.n());
    let ok = gs.par_iter().all(|g| {
        m1.basis().iter().enumerate().all(|(i1, &t)| {
            let (a, s1) = m1.act(g, i1);
            let (b, s2) = m2.act(g, m2.index_of(t).expect("same basis"));
            let (ta, tb) = (m1.basis()[a], m2.basis()[b]);
            ta == tb && k[&ta] * s1 == k[&t] * s2
        })
    });
    Ok(ok)
}

// ---------------------------------------------------------------------------
// comodule supports

/// Which group elements carry a nonzero homogeneous component, and its dimension.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ComoduleSupport {
    pub n: usize,
    pub components: BTreeMap<Permutation, usize>,
}

impl ComoduleSupport {
    pub fn new(n: usize) -> Self {
        ComoduleSupport {
            n,
            components: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, g: Permutation, dim: usize) {
        assert_eq!(g.degree(), self.n);
        if dim > 0 {
            *self.components.entry(g).or_insert(0) += dim;
        }
    }

    /// One-dimensional components over the conjugacy class of `g`.
    pub fn for_class(g: &Permutation) -> Self {
        let mut s = ComoduleSupport::new(g.degree());
        for h in crate::perm::conjugacy_class(g) {
            s.add(h, 1);
        }
        s
    }

    pub fn total_dim(&self) -> usize {
        self.components.values().sum()
    }
}

/// Whether two comodules have the same support multiset.
pub fn comodule_dim_compare(a: &ComoduleSupport, b: &ComoduleSupport) -> bool {
    a == b
}

pub fn comodule_verdict(a: &ComoduleSupport, b: &ComoduleSupport) -> Verdict {
    let mut witnesses = Vec::new();
    if a.n != b.n {
        witnesses.push(json!({ "degrees": [a.n, b.n] }));
    } else {
        let keys: std::collections::BTreeSet<&Permutation> =
            a.components.keys().chain(b.components.keys()).collect();
        for g in keys {
            let (x, y) = (
                a.components.get(g).copied().unwrap_or(0),
                b.components.get(g).copied().unwrap_or(0),
            );
            if x != y {
                witnesses.push(json!({ "element": g, "dims": [x, y] }));
                break;
            }
        }
    }
    Verdict::new("comodule-support", a.n, 1, witnesses)
}

// ---------------------------------------------------------------------------
// module axioms as suites

/// [`check_yd_compatibility`] as a suite.
pub fn yd_suite(module: &YdModule) -> Verdict {
    let cases = (module.n() - 1) * module.dim();
    let witnesses = match check_yd_compatibility(module) {
        Ok(()) => vec![],
        Err(w) => vec![serde_json::to_value(w).expect("witness serializes")],
    };
    Verdict::new("yd-compatibility", module.n(), cases, witnesses)
}

/// [`check_braid_equation`] as a suite.
pub fn braid_suite(module: &YdModule) -> Verdict {
    let cases = module.dim().pow(3);
    let witnesses = match check_braid_equation(module) {
        Ok(()) => vec![],
        Err(w) => vec![serde_json::to_value(w).expect("witness serializes")],
    };
    Verdict::new("braid-equation", module.n(), cases, witnesses)
}

/// [`psi_check`] and [`braidings_agree`] as a suite.
pub fn psi_suite(rsc: &BiOneRsc) -> Result<Verdict> {
    let n = rsc.n();
    let mut witnesses = Vec::new();
    if let Err(w) = psi_check(rsc)? {
        witnesses.push(serde_json::to_value(w).expect("witness serializes"));
    }
    if !braidings_agree(rsc)? {
        witnesses.push(json!({ "braiding": "arrow braiding differs from module braiding" }));
    }
    let m = n * (n - 1) / 2;
    Ok(Verdict::new("arrow-module", n, m * n + 1, witnesses))
}

/// [`iso_check`] as a suite; fails only when `expect` is given and differs.
pub fn iso_suite(m1: &YdModule, m2: &YdModule, expect: Option<bool>) -> Result<Verdict> {
    let outcome = iso_check(m1, m2)?;
    let mut witnesses = Vec::new();
    if let Some(want) = expect {
        if want != outcome.is_isomorphic() {
            witnesses.push(json!({ "expected_isomorphic": want, "outcome": outcome }));
        }
    }
    Ok(
        Verdict::new("diagonal-isomorphism", m1.n(), 1, witnesses).with_details(json!({
            "left": m1.character(),
            "right": m2.character(),
            "result": outcome,
        })),
    )
}
