use csp_lab::catalan::{enumerate_nc_matchings, Matching};
use csp_lab::perms::Permutation;
use csp_lab::qpoly::{self, CyclotomicResidue, IntPolynomial};
use csp_lab::tableaux::{
    demote, evacuate, promote, rsk_matrix, rsk_matrix_inverse, rsk_word, rsk_word_inverse,
    tableau_to_matching, NonnegMatrix, SYTableau,
};
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-20i64..20, 0..10).prop_map(|c| IntPolynomial::from_i64s(&c))
}

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

/// A random standard tableau: the insertion tableau of a random permutation.
fn tableau(max_n: usize) -> impl Strategy<Value = SYTableau> {
    permutation(max_n).prop_map(|w| rsk_word(&w).0)
}

/// Floating-point value of `f` at `exp(2 pi i / d)`.
fn complex_eval(f: &IntPolynomial, d: u64) -> (f64, f64) {
    let theta = 2.0 * std::f64::consts::PI / d as f64;
    f.coeffs().iter().enumerate().fold((0.0, 0.0), |(re, im), (k, c)| {
        let c = c.to_f64().unwrap();
        let a = theta * k as f64;
        (re + c * a.cos(), im + c * a.sin())
    })
}

proptest! {
    #[test]
    fn multiplication_then_division(f in poly(), g in poly()) {
        prop_assume!(!g.is_zero());
        let fg = &f * &g;
        prop_assert_eq!(qpoly::exact_divide(&fg, &g).unwrap(), f);
    }

    #[test]
    fn ring_laws(f in poly(), g in poly(), h in poly()) {
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f - &f, IntPolynomial::zero());
    }

    #[test]
    fn exact_root_evaluation_agrees_with_floating_point(f in poly(), d in 1u64..13) {
        let residue = CyclotomicResidue::reduce(&f, d);
        let (re, im) = complex_eval(&f, d);
        if let Some(v) = residue.as_integer() {
            prop_assert!((re - v.to_f64().unwrap()).abs() < 1e-6 && im.abs() < 1e-6);
        }
    }

    #[test]
    fn fold_preserves_value_at_roots(f in poly(), n in 1usize..10) {
        let folded = IntPolynomial::new(qpoly::fold_mod_qn(&f, n));
        for d in 1..=n as u64 {
            if n as u64 % d == 0 {
                prop_assert_eq!(CyclotomicResidue::reduce(&folded, d), CyclotomicResidue::reduce(&f, d));
            }
        }
    }

    #[test]
    fn permutation_group_laws(w in permutation(9)) {
        let n = w.len();
        prop_assert_eq!(w.compose(&w.inverse()), Permutation::identity(n));
        prop_assert_eq!(w.pow(w.order()), Permutation::identity(n));
        let c = Permutation::long_cycle(n);
        prop_assert_eq!(w.conjugate_by(&c).cycle_type(), w.cycle_type());
    }

    #[test]
    fn promotion_round_trips(t in tableau(12)) {
        prop_assert_eq!(demote(&promote(&t)), t.clone());
        prop_assert_eq!(promote(&demote(&t)), t.clone());
        prop_assert_eq!(promote(&t).shape(), t.shape());
    }

    #[test]
    fn evacuation_is_an_involution(t in tableau(12)) {
        prop_assert_eq!(evacuate(&evacuate(&t)), t);
    }

    #[test]
    fn rsk_round_trip(w in permutation(12)) {
        let (p, q) = rsk_word(&w);
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(rsk_word_inverse(&p, &q).unwrap(), w.clone());
        // Schensted symmetry: w^{-1} swaps the two tableaux.
        prop_assert_eq!(rsk_word(&w.inverse()), (q, p));
    }

    #[test]
    fn knuth_rsk_round_trip(entries in prop::collection::vec(prop::collection::vec(0u64..3, 4), 1..5)) {
        let m = NonnegMatrix::new(entries).unwrap();
        let (p, q) = rsk_matrix(&m);
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(rsk_matrix_inverse(&p, &q, m.n_rows(), m.n_cols()).unwrap(), m);
    }

    #[test]
    fn rotation_of_matchings_is_promotion(n in 1usize..8, pick in any::<prop::sample::Index>()) {
        let all: Vec<Matching> = enumerate_nc_matchings(n, 12).unwrap();
        let m = pick.get(&all).clone();
        let t = csp_lab::tableaux::matching_to_tableau(&m).unwrap();
        prop_assert_eq!(tableau_to_matching(&promote(&t)).unwrap(), m.rotated(-1));
    }
}
