use catsort::ballot::LatticePoint;
use catsort::oracle::{oracle_pair_probability, oracle_visit};
use catsort::pathprob::{p_visit, q_visit, r_visit};
use catsort::sortprob::{pair_probability, r_function};
use catsort::{BinomialCache, Cell};
use proptest::prelude::*;

fn cache() -> BinomialCache {
    BinomialCache::new(20)
}

/// `(n, a, b)` with `1 <= b < a <= n <= 10`.
fn incomparable() -> impl Strategy<Value = (u32, u32, u32)> {
    (2u32..=10).prop_flat_map(|n| (Just(n), 2..=n)).prop_flat_map(|(n, a)| (Just(n), Just(a), 1..a))
}

/// `(n, a, b)` with `0 <= a < b < n <= 10`.
fn interior_point() -> impl Strategy<Value = (u32, u32, u32)> {
    (2u32..=10).prop_flat_map(|n| (Just(n), 1..n)).prop_flat_map(|(n, b)| (Just(n), 0..b, Just(b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn pair_probability_matches_enumeration((n, a, b) in incomparable(), swap in any::<bool>()) {
        let c = cache();
        let (x, y) = if swap { (Cell::new(2, b), Cell::new(1, a)) } else { (Cell::new(1, a), Cell::new(2, b)) };
        let lib = pair_probability(&c, n, x, y).unwrap();
        prop_assert_eq!(lib.prob_x_before_y, oracle_pair_probability(n, x, y).unwrap());
    }

    #[test]
    fn comparable_pairs_are_certain(n in 2u32..=8, a in 1u32..=8, b in 1u32..=8) {
        prop_assume!(a <= n && b <= n && a <= b);
        let c = cache();
        let (x, y) = (Cell::new(1, a), Cell::new(2, b));
        let p = pair_probability(&c, n, x, y).unwrap();
        prop_assert_eq!(&p.prob_x_before_y, &oracle_pair_probability(n, x, y).unwrap());
        prop_assert_eq!(p.prob_x_before_y, catsort::ExactRatio::one());
    }

    #[test]
    fn visits_match_enumeration((n, a, b) in interior_point()) {
        let c = cache();
        let pt = |x, y| LatticePoint { x, y };
        prop_assert_eq!(p_visit(&c, n, a, b).unwrap(), oracle_visit(n, &[pt(a, b)]).unwrap());
        prop_assert_eq!(q_visit(&c, n, a, b).unwrap(), oracle_visit(n, &[pt(a, b - 1), pt(a, b)]).unwrap());
        prop_assert_eq!(
            r_visit(&c, n, a, b).unwrap(),
            oracle_visit(n, &[pt(a, b - 1), pt(a, b), pt(a, b + 1)]).unwrap()
        );
    }

    #[test]
    fn r_function_is_a_pair_probability((n, h, w) in incomparable()) {
        let c = cache();
        let z = h - w;
        let lib = r_function(&c, n, h, z).unwrap();
        prop_assert_eq!(lib, oracle_pair_probability(n, Cell::new(2, w), Cell::new(1, h)).unwrap());
    }
}
