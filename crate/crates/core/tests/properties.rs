use nichols_fk::fk::{
    fk_presentation, hilbert_series, linear_dim, truncated_groebner, QuadraticPresentation,
    Relation,
};
use nichols_fk::linalg::{PrimeField, Rationals, SparseIntMatrix};
use nichols_fk::nichols::{graded_dims_over, symmetrizer, symmetrizer_shuffle, t_word, Budget};
use nichols_fk::perm::{
    centralizer_decompose, class_transpositions, coset_rep, left_coset_factor, right_coset_factor,
    Permutation, Transposition,
};
use nichols_fk::quiver::{arrow_ad_action, build_hopf_quiver, BiOneRsc};
use nichols_fk::verify::{is_intertwiner, iso_check, IsoVerdict};
use nichols_fk::yd::{build, char_value, CharacterSpec, YdModule};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use smallvec::smallvec;

const FAMILIES: [CharacterSpec; 4] = [
    CharacterSpec::ChiPrime,
    CharacterSpec::ChiDoublePrime,
    CharacterSpec::Phi1,
    CharacterSpec::Phi2,
];

fn random_perm(n: usize, seed: u64) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    Permutation::from_images(&images).unwrap()
}

fn random_centralizer(n: usize, seed: u64) -> Permutation {
    let mut tail: Vec<usize> = (3..=n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    tail.shuffle(&mut rng);
    let mut images = vec![1, 2];
    images.extend(tail);
    let tail = Permutation::from_images(&images).unwrap();
    if seed.is_multiple_of(2) {
        &Permutation::simple(n, 1) * &tail
    } else {
        tail
    }
}

fn pick_transposition(n: usize, k: usize) -> Transposition {
    let all = class_transpositions(n).unwrap();
    all[k % all.len()]
}

fn module_cache(n: usize) -> Vec<YdModule> {
    FAMILIES.iter().map(|&c| build(n, c).unwrap()).collect()
}

proptest! {
    #[test]
    fn left_factor_is_sound(n in 2usize..=6, seed: u64, k: usize) {
        let h = random_perm(n, seed);
        let t = pick_transposition(n, k);
        let (t2, gamma) = left_coset_factor(&h, t).unwrap();
        let gamma = gamma.to_permutation();
        prop_assert!(gamma.commutes_with(&Permutation::simple(n, 1)));
        prop_assert_eq!(&h * &coset_rep(t, n).unwrap(), &coset_rep(t2, n).unwrap() * &gamma);
        // any other factorization h g_t = g_s c forces s = t2 and c = gamma
        for s in class_transpositions(n).unwrap() {
            let c = &(&coset_rep(s, n).unwrap().inverse() * &h) * &coset_rep(t, n).unwrap();
            if c.commutes_with(&Permutation::simple(n, 1)) {
                prop_assert_eq!(s, t2);
                prop_assert_eq!(&c, &gamma);
            }
        }
    }

    #[test]
    fn right_factor_matches_left(n in 2usize..=6, seed: u64, k: usize) {
        let h = random_perm(n, seed);
        let t = pick_transposition(n, k);
        let (t2, gamma) = left_coset_factor(&h, t).unwrap();
        // inverting h g_t = g_t2 γ gives g_t h^-1 = γ^-1 g_t2
        let (zeta, t3) = right_coset_factor(t, &h.inverse()).unwrap();
        prop_assert_eq!(t3, t2);
        prop_assert_eq!(zeta.to_permutation(), gamma.to_permutation().inverse());
        let (zeta, t4) = right_coset_factor(t, &h).unwrap();
        prop_assert_eq!(&coset_rep(t, n).unwrap() * &h, &zeta.to_permutation() * &coset_rep(t4, n).unwrap());
    }

    #[test]
    fn characters_are_multiplicative(n in 2usize..=7, a: u64, b: u64) {
        let (x, y) = (random_centralizer(n, a), random_centralizer(n, b));
        for spec in [CharacterSpec::ChiPrime, CharacterSpec::ChiDoublePrime, "custom:1:sgn".parse().unwrap()] {
            prop_assert_eq!(char_value(spec, &(&x * &y)).unwrap(), char_value(spec, &x).unwrap() * char_value(spec, &y).unwrap());
        }
        let decomposed = centralizer_decompose(&x).unwrap();
        prop_assert_eq!(decomposed.to_permutation(), x);
    }

    #[test]
    fn actions_are_homomorphisms(n in 2usize..=5, a: u64, b: u64, k: usize) {
        let (g, h) = (random_perm(n, a), random_perm(n, b));
        let gh = &g * &h;
        for module in module_cache(n) {
            let i = k % module.dim();
            let (j, s1) = module.act(&h, i);
            let (l, s2) = module.act(&g, j);
            prop_assert_eq!(module.act(&gh, i), (l, s1 * s2));
            // the coaction is equivariant
            prop_assert_eq!(module.coaction_tag(l), nichols_fk::perm::conj_action(&gh, module.coaction_tag(i)));
        }
    }

    #[test]
    fn ad_action_composes(n in 2usize..=5, a: u64, b: u64, k: usize) {
        let (g, h) = (random_perm(n, a), random_perm(n, b));
        for spec in [CharacterSpec::ChiPrime, CharacterSpec::ChiDoublePrime] {
            let rsc = BiOneRsc::new(n, spec).unwrap();
            let quiver = build_hopf_quiver(&rsc);
            let arrow = &quiver.unit_arrows()[k % quiver.unit_arrows().len()];
            let (s1, inner) = arrow_ad_action(&rsc, &h, arrow).unwrap();
            let (s2, outer) = arrow_ad_action(&rsc, &g, &inner).unwrap();
            let (s, direct) = arrow_ad_action(&rsc, &(&g * &h), arrow).unwrap();
            prop_assert_eq!((s, direct), (s1 * s2, outer));
        }
    }

    #[test]
    fn rank_mod_p_is_at_most_rational_rank(rows in 1usize..8, cols in 1usize..8, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut m = SparseIntMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                let v: i64 = rand::Rng::gen_range(&mut rng, -3..=3);
                m.add_entry(r, c, v);
            }
        }
        let q = m.rank_over(&Rationals);
        for p in [2u64, 3, 5, 1_000_000_007] {
            prop_assert!(m.rank_over(&PrimeField::new(p)) <= q);
        }
    }

    #[test]
    fn parse_display_round_trip(n in 1usize..=9, seed: u64) {
        let g = random_perm(n, seed);
        prop_assert_eq!(Permutation::parse(&g.to_string(), n).unwrap(), g);
    }
}

/// Random homogeneous quadratic presentations on three generators.
fn random_presentation(seed: u64) -> QuadraticPresentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rand::Rng::gen_range(&mut rng, 1..=5);
    let relations = (0..count)
        .map(|_| {
            let mut terms = Vec::new();
            for a in 0..3u8 {
                for b in 0..3u8 {
                    if rand::Rng::gen_bool(&mut rng, 0.3) {
                        let c = *[-2i64, -1, 1, 2].choose(&mut rng).unwrap();
                        terms.push((c, smallvec![a, b]));
                    }
                }
            }
            if terms.is_empty() {
                terms.push((1, smallvec![0, 0]));
            }
            Relation { terms }
        })
        .collect();
    QuadraticPresentation::new(3, relations).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn groebner_counts_match_linear_algebra(seed: u64) {
        let pres = random_presentation(seed);
        let gb = hilbert_series(&pres, 5).unwrap();
        for d in 0..=5 {
            let expected = linear_dim(&pres, d, Budget::default()).unwrap();
            prop_assert_eq!(gb.dim(d), Some(expected), "degree {} of\n{}", d, pres.to_text());
        }
    }

    #[test]
    fn groebner_truncation_is_monotone(seed: u64) {
        let pres = random_presentation(seed);
        let short = truncated_groebner(&pres, 3).unwrap();
        let long = truncated_groebner(&pres, 5).unwrap();
        prop_assert!(long.normal_counts().starts_with(short.normal_counts()));
        let m = 3;
        for w in long.normal_counts().windows(2) {
            prop_assert!(w[1] <= m * w[0]);
        }
    }

    #[test]
    fn presentation_text_round_trip(seed: u64) {
        let pres = random_presentation(seed);
        let back = QuadraticPresentation::parse(&pres.to_text()).unwrap();
        prop_assert_eq!(hilbert_series(&back, 4).unwrap().dims, hilbert_series(&pres, 4).unwrap().dims);
    }
}

#[test]
fn reduced_words_give_the_same_operator() {
    let module = build(3, CharacterSpec::ChiDoublePrime).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for d in 2..=6 {
        for trial in 0..10 {
            let w = random_perm(d, trial * 31 + d as u64);
            let first = w.reduced_word();
            let other = w.reduced_word_with(|desc| *desc.choose(&mut rng).unwrap());
            assert_eq!(other.len(), first.len());
            let a = t_word(&module, &first, d, Budget::default()).unwrap();
            let b = t_word(&module, &other, d, Budget::default()).unwrap();
            assert_eq!(a, b, "w = {w}");
        }
    }
}

#[test]
fn shuffle_recursion_matches_brute_force() {
    for (n, max_d) in [(3, 4), (4, 3)] {
        for spec in FAMILIES {
            let module = build(n, spec).unwrap();
            for d in 0..=max_d {
                let brute = symmetrizer(&module, d, Budget::default()).unwrap();
                let shuffle = symmetrizer_shuffle(&module, d, Budget::default()).unwrap();
                assert_eq!(brute, shuffle, "n={n} {spec} d={d}");
            }
        }
    }
}

#[test]
fn graded_dims_match_symmetrizer_ranks() {
    for (n, max_d) in [(3, 5), (4, 3)] {
        for spec in FAMILIES {
            let module = build(n, spec).unwrap();
            let dims = graded_dims_over(&module, max_d, &Rationals, Budget::default()).unwrap();
            for (d, &dim) in dims.iter().enumerate() {
                let rank = symmetrizer(&module, d, Budget::default())
                    .unwrap()
                    .rank_over(&Rationals);
                assert_eq!(dim as usize, rank, "n={n} {spec} d={d}");
            }
        }
    }
}

#[test]
fn fk_engines_agree_small() {
    for n in 2..=4 {
        let pres = fk_presentation(n).unwrap();
        let series = hilbert_series(&pres, 4).unwrap();
        for d in 0..=4 {
            assert_eq!(
                series.dim(d),
                Some(linear_dim(&pres, d, Budget::default()).unwrap())
            );
        }
    }
}

#[test]
fn iso_verdicts_are_consistent() {
    for n in 4..=5 {
        for &a in &FAMILIES {
            for &b in &FAMILIES {
                let (m1, m2) = (build(n, a).unwrap(), build(n, b).unwrap());
                let forward = iso_check(&m1, &m2).unwrap();
                let backward = iso_check(&m2, &m1).unwrap();
                assert_eq!(
                    forward.is_isomorphic(),
                    backward.is_isomorphic(),
                    "{a} vs {b}"
                );
                match forward {
                    IsoVerdict::Isomorphic { scalars } => {
                        assert!(is_intertwiner(&m1, &m2, &scalars).unwrap())
                    }
                    IsoVerdict::NotIsomorphic { witness } => {
                        assert!(witness.violates(&m1, &m2).unwrap())
                    }
                    IsoVerdict::NotComoduleIsomorphic { .. } => panic!("same comodule"),
                }
            }
        }
    }
}

#[test]
fn module_json_round_trip() {
    for n in 2..=5 {
        for module in module_cache(n) {
            assert_eq!(YdModule::from_json(&module.to_json()).unwrap(), module);
        }
    }
}
