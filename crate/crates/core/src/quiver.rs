//! The bi-one Hopf quiver on `S_n` for the class of transpositions and its
//! arrow Yetter–Drinfeld module `kQ_1^1`, with a mechanical check that
//! `e_t ↦ a_{t,1}` is an isomorphism onto it from `M(O_(12), χ)`.
//!
//! Arrows are never stored in bulk: vertices are group elements and
//! arrows are computed on demand.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{class_transpositions, right_coset_factor, Permutation, Sign, Transposition};
use crate::yd::{
    braiding, build_conjugacy_module, char_value, CharacterSpec, MonomialMatrix, YdModule,
};

/// Ramification data with one class (the transpositions), `u(C) = (1 2)` and a
/// one-dimensional character of the centralizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiOneRsc {
    n: usize,
    character: CharacterSpec,
}

impl BiOneRsc {
    pub fn new(n: usize, character: CharacterSpec) -> Result<BiOneRsc> {
        if n < 2 {
            return Err(Error::RankTooSmall { n, min: 2 });
        }
        if !character.is_character() {
            return Err(Error::Unsupported {
                what: character.to_string(),
                detail: "arrow modules need a centralizer character".into(),
            });
        }
        Ok(BiOneRsc { n, character })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn character(&self) -> CharacterSpec {
        self.character
    }

    pub fn class_representative(&self) -> Permutation {
        Permutation::simple(self.n, 1)
    }
}

/// The arrow `a_{y,x}` from `x` to `y`; `x^{-1} y` is a transposition.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    source: Permutation,
    target: Permutation,
}

impl Arrow {
    pub fn new(source: Permutation, target: Permutation) -> Result<Arrow> {
        let step = &source.inverse() * &target;
        if step.cycles().len() != 1 || step.cycles()[0].len() != 2 {
            return Err(Error::Unsupported {
                what: format!("arrow {source} -> {target}"),
                detail: "x^-1 y must be a transposition".into(),
            });
        }
        Ok(Arrow { source, target })
    }

    /// The arrow `a_{t,1}` in `Q_1^1`.
    pub fn from_unit(t: Transposition, n: usize) -> Arrow {
        Arrow {
            source: Permutation::identity(n),
            target: t.to_permutation(n).expect("transposition fits n"),
        }
    }

    pub fn source(&self) -> &Permutation {
        &self.source
    }

    pub fn target(&self) -> &Permutation {
        &self.target
    }

    /// The transposition `x^{-1} y`.
    pub fn label(&self) -> Transposition {
        let step = &self.source.inverse() * &self.target;
        let c = &step.cycles()[0];
        Transposition::new(c[0], c[1]).expect("arrow step is a transposition")
    }

    /// Degree under the arrow coaction `δ⁻(a_{y,x}) = y x^{-1} ⊗ a_{y,x}`.
    pub fn coaction_degree(&self) -> Permutation {
        &self.target * &self.source.inverse()
    }

    pub fn starts_at_unit(&self) -> bool {
        self.source.is_identity()
    }
}

impl fmt::Debug for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[{} <- {}]", self.target, self.source)
    }
}

/// The arrows starting at the unit vertex, one per transposition.
#[derive(Clone, Debug)]
pub struct ArrowBasis {
    n: usize,
    unit_arrows: Vec<Arrow>,
}

impl ArrowBasis {
    pub fn unit_arrows(&self) -> &[Arrow] {
        &self.unit_arrows
    }

    pub fn vertex_count(&self) -> usize {
        (1..=self.n).product()
    }

    /// `|^y Q_1^x|`: one arrow when `x^{-1} y` is a transposition, else none.
    pub fn arrows_between(&self, x: &Permutation, y: &Permutation) -> usize {
        Arrow::new(x.clone(), y.clone()).map_or(0, |_| 1)
    }

    /// All arrows leaving `x`, computed on demand.
    pub fn arrows_from(&self, x: &Permutation) -> Vec<Arrow> {
        class_transpositions(self.n)
            .expect("n >= 2")
            .into_iter()
            .map(|t| Arrow {
                source: x.clone(),
                target: x * &t.to_permutation(self.n).expect("fits"),
            })
            .collect()
    }
}

pub fn build_hopf_quiver(rsc: &BiOneRsc) -> ArrowBasis {
    let unit_arrows = class_transpositions(rsc.n)
        .expect("n >= 2")
        .into_iter()
        .map(|t| Arrow::from_unit(t, rsc.n))
        .collect();
    ArrowBasis {
        n: rsc.n,
        unit_arrows,
    }
}

/// `g · a_{y,x} = a_{gy,gx}`.
pub fn arrow_left_action(g: &Permutation, a: &Arrow) -> Arrow {
    Arrow {
        source: g * &a.source,
        target: g * &a.target,
    }
}

/// `a_{y,x} · g = χ(ζ_t(g)) a_{yg,xg}` with `t = x^{-1} y` and `g_t g = ζ_t(g) g_t'`.
pub fn arrow_right_action(rsc: &BiOneRsc, a: &Arrow, g: &Permutation) -> Result<(Sign, Arrow)> {
    let (zeta, _) = right_coset_factor(a.label(), g)?;
    let sign = char_value(rsc.character, &zeta.to_permutation())?;
    Ok((
        sign,
        Arrow {
            source: &a.source * g,
            target: &a.target * g,
        },
    ))
}

/// `g ▷ a = g · a · g^{-1}` on `a ∈ Q_1^1`.
pub fn arrow_ad_action(rsc: &BiOneRsc, g: &Permutation, a: &Arrow) -> Result<(Sign, Arrow)> {
    arrow_ad_action_with(g, a, |a, h| arrow_right_action(rsc, a, h))
}

fn arrow_ad_action_with(
    g: &Permutation,
    a: &Arrow,
    right: impl Fn(&Arrow, &Permutation) -> Result<(Sign, Arrow)>,
) -> Result<(Sign, Arrow)> {
    if !a.starts_at_unit() {
        return Err(Error::Unsupported {
            what: format!("{a:?}"),
            detail: "ad action is defined on arrows leaving the unit".into(),
        });
    }
    let left = arrow_left_action(g, a);
    right(&left, &g.inverse())
}

/// First disagreement found by [`psi_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PsiWitness {
    Coaction {
        basis: Transposition,
    },
    Action {
        generator: String,
        basis: Transposition,
        module_image: (Sign, Transposition),
        arrow_image: (Sign, String),
    },
}

/// Checks that `ψ(e_t) = a_{t,1}` intertwines coactions and the actions of
/// `(1 2)` and every adjacent transposition.
pub fn psi_check(rsc: &BiOneRsc) -> Result<Result<(), PsiWitness>> {
    psi_check_with(rsc, |a, h| arrow_right_action(rsc, a, h))
}

/// [`psi_check`] with a replaceable right action, for negative controls.
pub fn psi_check_with(
    rsc: &BiOneRsc,
    right: impl Fn(&Arrow, &Permutation) -> Result<(Sign, Arrow)>,
) -> Result<Result<(), PsiWitness>> {
    let n = rsc.n;
    let module = build_conjugacy_module(n, rsc.character)?;
    let quiver = build_hopf_quiver(rsc);
    for (k, a) in quiver.unit_arrows().iter().enumerate() {
        let tag = module.coaction_tag(k).to_permutation(n)?;
        if a.coaction_degree() != tag {
            return Ok(Err(PsiWitness::Coaction {
                basis: module.coaction_tag(k),
            }));
        }
    }
    let mut generators: Vec<Permutation> = (1..n).map(|k| Permutation::simple(n, k)).collect();
    generators.push(Permutation::simple(n, 1));
    generators.dedup();
    for h in &generators {
        for (k, a) in quiver.unit_arrows().iter().enumerate() {
            let (img, sign) = module.act(h, k);
            let (arrow_sign, arrow) = arrow_ad_action_with(h, a, &right)?;
            let expected = &quiver.unit_arrows()[img];
            if !arrow.starts_at_unit() || &arrow != expected || arrow_sign != sign {
                return Ok(Err(PsiWitness::Action {
                    generator: h.to_string(),
                    basis: module.coaction_tag(k),
                    module_image: (sign, module.coaction_tag(img)),
                    arrow_image: (arrow_sign, format!("{arrow:?}")),
                }));
            }
        }
    }
    Ok(Ok(()))
}

/// Braiding of the arrow module, `c(a ⊗ b) = (δ⁻ a) ▷ b ⊗ a`, in the basis `Q_1^1`.
pub fn arrow_braiding(rsc: &BiOneRsc) -> Result<MonomialMatrix> {
    let quiver = build_hopf_quiver(rsc);
    let arrows = quiver.unit_arrows();
    let m = arrows.len();
    let mut target = Vec::with_capacity(m * m);
    let mut sign = Vec::with_capacity(m * m);
    for a in arrows {
        let g = a.coaction_degree();
        for b in arrows {
            let (s, img) = arrow_ad_action(rsc, &g, b)?;
            let pos = arrows
                .iter()
                .position(|x| x == &img)
                .ok_or_else(|| Error::Unsupported {
                    what: format!("{img:?}"),
                    detail: "ad action left Q_1^1".into(),
                })?;
            let a_pos = arrows.iter().position(|x| x == a).expect("listed");
            target.push((pos * m + a_pos) as u32);
            sign.push(s);
        }
    }
    Ok(MonomialMatrix::new(target, sign))
}

/// Whether the arrow module and `M(O_(12), χ)` have identical braidings.
pub fn braidings_agree(rsc: &BiOneRsc) -> Result<bool> {
    let module: YdModule = build_conjugacy_module(rsc.n, rsc.character)?;
    Ok(arrow_braiding(rsc)? == braiding(&module))
}
