use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use qaffine::cluster::Seed;
use qaffine::loopalg::{affine_root, factor_into_roots, LatticePoint, LoopMonomial, LoopPolynomial};
use qaffine::paths::{enumerate_paths, path_tuples, q_character};
use qaffine::qarith::q_binomial;
use qaffine::snakes::{is_snake, neighbouring_snakes, Snake};
use qaffine::tsys::sample_prime_snakes;

fn small_prime_snake(seed: u64, max_rank: u32, max_len: usize) -> Snake {
    sample_prime_snakes(seed, 1, max_rank, max_len).remove(0)
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// `Y_{i,k} -> Y_{l+1-i,k}` applied to every monomial.
fn flip_polynomial(chi: &LoopPolynomial, l: u32) -> LoopPolynomial {
    let terms = chi.terms().into_iter().map(|(m, c)| {
        let flipped = LoopMonomial::from_triples(l, m.iter().map(|(p, e)| (l as i32 + 1 - p.i, p.k, e))).unwrap();
        (flipped, c)
    });
    LoopPolynomial::from_terms(l, terms).unwrap()
}

proptest! {
    #[test]
    fn q_binomial_symmetry_bar_and_classical_limit(n in 0i64..20, k in 0i64..20) {
        prop_assume!(k <= n);
        let b = q_binomial(n, k).unwrap();
        prop_assert_eq!(&b, &q_binomial(n, n - k).unwrap());
        prop_assert_eq!(&b, &b.bar());
        prop_assert_eq!(b.eval_at_one(), BigInt::from(binomial(n as u64, k as u64)));
    }

    #[test]
    fn path_counts(l in 1u32..7, i in 1i32..7, shift in -4i32..4) {
        prop_assume!(i <= l as i32);
        let k = i + 2 * shift;
        prop_assert_eq!(enumerate_paths(i, k, l).unwrap().len() as u64, binomial(l as u64 + 1, i as u64));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn snake_characters_are_thin_special_and_below_the_top(seed in any::<u64>()) {
        let s = small_prime_snake(seed, 3, 3);
        let chi = q_character(&s).unwrap();
        let top = s.highest_weight();
        prop_assert!(chi.is_thin());
        prop_assert_eq!(chi.dominant_monomials(), vec![top.clone()]);
        prop_assert_eq!(chi.antidominant_monomials().len(), 1);
        for m in chi.monomials() {
            let exps = factor_into_roots(&m, &top).unwrap().expect("root multiple");
            prop_assert!(exps.values().all(|&c| c <= 0));
        }
    }

    #[test]
    fn weights_are_weyl_symmetric(seed in any::<u64>()) {
        let s = small_prime_snake(seed, 3, 3);
        let mult = q_character(&s).unwrap().weight_multiplicities();
        for i in 1..=s.rank() as i32 {
            for (w, c) in &mult {
                prop_assert_eq!(mult.get(&w.reflect(i).unwrap()), Some(c));
            }
        }
    }

    #[test]
    fn diagram_flip_commutes_with_characters(seed in any::<u64>()) {
        let s = small_prime_snake(seed, 4, 3);
        let l = s.rank();
        prop_assert_eq!(
            q_character(&s.flipped()).unwrap(),
            flip_polynomial(&q_character(&s).unwrap(), l)
        );
    }

    #[test]
    fn path_tuples_have_distinct_monomials_in_a2(seed in any::<u64>()) {
        let s = small_prime_snake(seed, 2, 4);
        let tuples = path_tuples(&s).unwrap();
        let monomials: BTreeSet<LoopMonomial> = tuples.iter().map(|t| t.monomial(s.rank())).collect();
        prop_assert_eq!(monomials.len(), tuples.len());
        prop_assert!(tuples.iter().all(|t| t.is_non_overlapping()));
        prop_assert_eq!(q_character(&s).unwrap().len(), tuples.len());
    }

    #[test]
    fn neighbouring_points_form_snakes(seed in any::<u64>()) {
        let s = small_prime_snake(seed, 4, 5);
        let (x, y) = neighbouring_snakes(&s).unwrap();
        prop_assert!(is_snake(x.points(), s.rank()).unwrap() && is_snake(y.points(), s.rank()).unwrap());
        prop_assert!(x.points().iter().chain(y.points()).all(|p| p.in_x()));
    }

    #[test]
    fn mutation_sequences_undo_in_reverse(l in 1u32..4, picks in prop::collection::vec(any::<prop::sample::Index>(), 1..8)) {
        let seed = Seed::initial(l, 5).unwrap();
        let interior: Vec<LatticePoint> = seed.quiver().interior().collect();
        let path: Vec<LatticePoint> = picks.iter().map(|ix| *ix.get(&interior)).collect();
        let mut cur = seed.clone();
        for &v in &path {
            cur = cur.mutate(v).unwrap();
            prop_assert!(cur.quiver().is_valid());
        }
        for &v in path.iter().rev() {
            cur = cur.mutate(v).unwrap();
        }
        prop_assert_eq!(cur, seed);
    }
}

#[test]
fn moves_multiply_monomials_by_affine_roots() {
    for l in 1..=5u32 {
        for i in 1..=l as i32 {
            for path in enumerate_paths(i, i, l).unwrap().iter() {
                for a in 1..=l as i32 {
                    for b in i - l as i32 - 2..=i + l as i32 + 4 {
                        let at = LatticePoint::new(a, b);
                        let root = affine_root(a, b, l).unwrap();
                        if let Some(down) = path.lower_move(at) {
                            assert_eq!(down.monomial(), &path.monomial() * &root.inv());
                            assert_eq!(down.raise_move(at).as_ref(), Some(path));
                        }
                        if let Some(up) = path.raise_move(at) {
                            assert_eq!(up.monomial(), &path.monomial() * &root);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn lowering_from_the_highest_path_reaches_every_path() {
    // every path of P_{i,k} is reached from the highest one by lowering moves
    for l in 1..=5u32 {
        for i in 1..=l as i32 {
            let all = enumerate_paths(i, i, l).unwrap();
            let mut seen = vec![all[0].clone()];
            let mut frontier = vec![all[0].clone()];
            while let Some(p) = frontier.pop() {
                for a in 1..=l as i32 {
                    for b in -2 * l as i32..=3 * l as i32 + 2 {
                        if let Some(q) = p.lower_move(LatticePoint::new(a, b)) {
                            if !seen.contains(&q) {
                                seen.push(q.clone());
                                frontier.push(q);
                            }
                        }
                    }
                }
            }
            assert_eq!(seen.len(), all.len(), "l={l} i={i}");
        }
    }
}
