use proptest::prelude::*;

use lensball::cfrac::{
    neg_eval, neg_expand, negsum, plus_eval, plus_to_minus, reverse_string, riemenschneider_dual,
    Fraction, PlusString,
};
use lensball::families::{
    fraction_step, gen_fraction, gen_string, string_step, Direction, FamilyKind, FamilySpec,
    SquareForm,
};
use lensball::lattice::{canonical_form, LatticeSubset};
use lensball::rset::{f_map, g_map, is_in_r, mod_inverse, orbit, Sign};
use lensball::search::embed_string;

fn fraction() -> impl Strategy<Value = Fraction> {
    (2i64..20_000)
        .prop_flat_map(|p| (Just(p), 1..p))
        .prop_filter_map("coprime", |(p, q)| Fraction::new(p, q).ok())
}

proptest! {
    #[test]
    fn expansion_round_trips(x in fraction()) {
        prop_assert_eq!(neg_eval(&neg_expand(x)), Ok(x));
    }

    #[test]
    fn dual_and_reverse(x in fraction()) {
        let s = neg_expand(x);
        let d = riemenschneider_dual(&s).unwrap();
        prop_assert_eq!(neg_eval(&d), Ok(x.complement()));
        prop_assert_eq!(negsum(&s) + negsum(&d), -2);
        let r = neg_eval(&reverse_string(&s)).unwrap();
        prop_assert_eq!(Some(r.q()), mod_inverse(x.q(), x.p()));
    }

    #[test]
    fn membership_is_an_orbit_invariant(x in fraction()) {
        let in_r = is_in_r(x).in_r;
        prop_assert_eq!(f_map(f_map(x)), x);
        prop_assert_eq!(g_map(g_map(x)), x);
        let orb = orbit(x);
        prop_assert!(orb.len() <= 4);
        for y in orb {
            prop_assert_eq!(is_in_r(y).in_r, in_r);
        }
    }

    #[test]
    fn plus_minus_bridge(pairs in prop::collection::vec((1i64..12, 1i64..12), 1..5)) {
        let terms: Vec<i64> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        let s = PlusString::new(terms).unwrap();
        let minus = plus_to_minus(&s).unwrap();
        prop_assert_eq!(neg_eval(&minus).map(|f| f.to_ratio()), plus_eval(&s));
    }

    #[test]
    fn square_steps_match_surgery(
        (m, k) in (2i64..3000).prop_flat_map(|m| (Just(m), 1..m)),
        plus in any::<bool>(),
        prepend in any::<bool>(),
    ) {
        let sign = if plus { Sign::Plus } else { Sign::Minus };
        let form = SquareForm { m, k, sign };
        if let Ok(x) = form.fraction() {
            let dir = if prepend { Direction::Prepend } else { Direction::Append };
            let direct = neg_eval(&string_step(&neg_expand(x), dir)).unwrap();
            prop_assert_eq!(fraction_step(x, dir), Ok(direct));
        }
    }

    #[test]
    fn family_formulas(kind in 1usize..6, s in 0i64..40, t in 0i64..40) {
        let spec = FamilySpec::st(FamilyKind::ALL[kind], s, t).unwrap();
        let string = gen_string(&spec);
        prop_assert_eq!(negsum(&string), spec.invariant());
        prop_assert_eq!(gen_fraction(&spec), neg_eval(&string));
    }

    #[test]
    fn iminus3_formula(c in prop::collection::vec(1i64..7, 1..4)) {
        let c: Vec<i64> = if c.len() % 2 == 0 { c[1..].to_vec() } else { c };
        let spec = FamilySpec::iminus3(&c).unwrap();
        let string = gen_string(&spec);
        prop_assert_eq!(negsum(&string), -3);
        prop_assert_eq!(gen_fraction(&spec), neg_eval(&string));
        prop_assert!(is_in_r(gen_fraction(&spec).unwrap()).in_r);
    }

    #[test]
    fn canonical_form_ignores_signed_permutations(
        x in (5i64..60).prop_flat_map(|p| (Just(p), 1..p)).prop_filter_map("coprime", |(p, q)| Fraction::new(p, q).ok()),
        perm_seed in any::<u64>(),
        signs in any::<u16>(),
    ) {
        let r = embed_string(&neg_expand(x));
        if let Some(m) = r.matrix {
            let n = m.rank();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut seed = perm_seed;
            for i in (1..n).rev() {
                seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (seed >> 33) as usize % (i + 1));
            }
            let rows: Vec<Vec<i64>> = m
                .rows()
                .iter()
                .map(|row| {
                    (0..n)
                        .map(|j| {
                            let sign = if signs >> (j % 16) & 1 == 1 { -1 } else { 1 };
                            sign * row[perm[j]]
                        })
                        .collect()
                })
                .collect();
            let moved = LatticeSubset::from_rows(rows).unwrap();
            prop_assert_eq!(canonical_form(&moved), canonical_form(&m));
        }
    }
}
