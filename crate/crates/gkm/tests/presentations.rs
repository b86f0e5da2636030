use std::collections::BTreeMap;

use proptest::prelude::*;
use twinllt_core::{
    csf_direct, enumerate_hessenberg, llt_direct, partitions, poincare, q_factorial, Basis,
    GradedSymFunc, HessFn, Partition, QPoly, SymFunc,
};
use twinllt_gkm::monomial::count;
use twinllt_gkm::*;

const MODP: Mode = Mode::ModP { seed: 11 };

fn hf(v: &[usize]) -> HessFn {
    HessFn::new(v.to_vec()).unwrap()
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn graded(f: &SymFunc) -> GradedSymFunc {
    GradedSymFunc::from_symfunc(&f.convert(Basis::M))
}

fn up_to(n: usize) -> impl Iterator<Item = HessFn> {
    (1..=n).flat_map(enumerate_hessenberg)
}

#[test]
fn betti_examples() {
    let b = hilbert_and_betti(&hf(&[2, 2]), Variant::Twin, MODP).unwrap();
    assert_eq!(b.betti, QPoly::from_ints(&[1, 1]));
    let dims: Vec<i64> = (0..4)
        .map(|k| b.hilbert.coeff(k).to_integer().try_into().unwrap())
        .collect();
    assert_eq!(dims, [1, 3, 5, 7]);
    let b = hilbert_and_betti(&hf(&[2, 3, 3]), Variant::Twin, Mode::Exact).unwrap();
    assert_eq!(b.betti, QPoly::from_ints(&[1, 4, 1]));
    assert_eq!(b.certificate, Certificate::Exact);
    let b = hilbert_and_betti(&hf(&[3, 3, 3]), Variant::Hessenberg, MODP).unwrap();
    assert_eq!(b.betti, q_factorial(3));
    assert!(matches!(
        b.certificate,
        Certificate::DualPrime { seed: 11, .. }
    ));
}

#[test]
fn frobenius_examples() {
    let q = QPoly::q();
    let f = frobenius_graded(&hf(&[2, 2]), Action::Dagger, MODP).unwrap();
    let want = &SymFunc::h(2) + &SymFunc::e(2).scale(&q);
    assert!(f.value.same_as(&graded(&want)));
    let f = frobenius_graded(&hf(&[2, 2]), Action::Dot, MODP).unwrap();
    let want = SymFunc::h(2).scale(&QPoly::from_ints(&[1, 1]));
    assert!(f.value.same_as(&graded(&want)));
    let f = frobenius_graded(&hf(&[1, 2]), Action::Dagger, Mode::Exact).unwrap();
    assert_eq!(f.value.layers().len(), 1);
    assert!(f.value.layers()[0].same_as(&(&SymFunc::h(1) * &SymFunc::h(1))));
}

#[test]
fn character_examples() {
    let (two, ones) = (part(&[2]), part(&[1, 1]));
    let chi = dagger_character(&hf(&[2, 2]), MODP).unwrap();
    assert_eq!((chi.degrees[0][&ones], chi.degrees[0][&two]), (1, 1));
    assert_eq!((chi.degrees[1][&ones], chi.degrees[1][&two]), (3, 1));
    let chi = dagger_character(&hf(&[1, 2]), MODP).unwrap();
    for (d, c) in chi.degrees.iter().enumerate() {
        assert_eq!(c[&ones] as usize, 2 * count(2, d));
        assert_eq!(c[&two], 0);
    }
    let chi = dot_character(&hf(&[3, 3, 3]), MODP).unwrap();
    assert!(chi.degrees[0].values().all(|&v| v == 1));
    let chi = dot_character(&hf(&[2, 2]), Mode::Exact).unwrap();
    // On X_h = P^1 the swap acts on (p_id, p_s) by p ↦ s·p followed by the exchange.
    assert_eq!((chi.degrees[1][&ones], chi.degrees[1][&two]), (3, 1));
    let chi = dot_character(&hf(&[1, 2]), Mode::Exact).unwrap();
    assert_eq!((chi.degrees[0][&ones], chi.degrees[0][&two]), (2, 0));
}

#[test]
fn xi_examples() {
    assert!(xi_check(&hf(&[2, 2]), 1, Mode::Exact).unwrap().holds);
    for d in 0..4 {
        assert!(xi_check(&hf(&[1, 2]), d, MODP).unwrap().holds);
        let r = xi_check(&hf(&[2, 3, 3]), d, Mode::Exact).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.outcome.route, XiRoute::Full);
    }
    let r = xi_check(&hf(&[3, 4, 4, 4]), 5, MODP).unwrap();
    assert_eq!(r.outcome.route, XiRoute::Isotypic);
    assert!(r.holds, "{r:?}");
}

#[test]
fn isotypic_matches_full_through_three() {
    for h in up_to(3) {
        let top = margin_degree(&h);
        for variant in [Variant::Twin, Variant::Hessenberg] {
            for mode in [MODP, Mode::Exact] {
                let a = equivariant_character(&h, variant, top, mode, Solver::Isotypic).unwrap();
                let b = equivariant_character(&h, variant, top, mode, Solver::Full).unwrap();
                assert_eq!(a.degrees, b.degrees, "{variant} {h}");
            }
        }
    }
}

#[test]
fn isotypic_matches_full_in_low_degree_at_four() {
    for h in enumerate_hessenberg(4) {
        for variant in [Variant::Twin, Variant::Hessenberg] {
            let a = equivariant_character(&h, variant, 2, MODP, Solver::Isotypic).unwrap();
            let b = equivariant_character(&h, variant, 2, MODP, Solver::Full).unwrap();
            assert_eq!(a.degrees, b.degrees, "{variant} {h}");
        }
    }
}

#[test]
fn full_solver_dimensions_match_characters() {
    for h in up_to(3) {
        for variant in [Variant::Twin, Variant::Hessenberg] {
            let g = build_gkm(&h, variant);
            let chi = equivariant_character(&h, variant, 4, MODP, Solver::Isotypic).unwrap();
            for (d, dim) in chi.dims().into_iter().enumerate() {
                let exact = solve_degree(&g, d, Mode::Exact).unwrap();
                assert_eq!(exact.dim as i64, dim);
                assert_eq!(exact.basis.as_ref().unwrap().len(), exact.dim);
                assert_eq!(solve_degree(&g, d, MODP).unwrap().dim, exact.dim);
                // Constant tuples always solve the twin system.
                if variant == Variant::Twin {
                    assert!(exact.dim >= count(h.n(), d));
                }
            }
        }
    }
}

#[test]
fn exact_and_modp_agree_through_three() {
    for h in up_to(3) {
        for action in [Action::Dagger, Action::Dot] {
            let a = frobenius_graded(&h, action, Mode::Exact).unwrap();
            let b = frobenius_graded(&h, action, MODP).unwrap();
            assert_eq!(a.value, b.value, "{action} {h}");
        }
    }
}

#[test]
fn frobenius_matches_both_engines_through_four() {
    for h in up_to(4) {
        let dagger = frobenius_graded(&h, Action::Dagger, MODP).unwrap();
        assert!(dagger.value.same_as(&graded(&llt_direct(&h))), "dagger {h}");
        let dot = frobenius_graded(&h, Action::Dot, MODP).unwrap();
        assert!(
            dot.value.same_as(&graded(&csf_direct(&h).omega())),
            "dot {h}"
        );
    }
}

#[test]
fn frobenius_invariants_through_four() {
    for h in up_to(4) {
        let n = h.n();
        let f = frobenius_graded(&h, Action::Dagger, MODP).unwrap().value;
        let h1n = (0..n).fold(SymFunc::one(), |acc, _| &acc * &SymFunc::h(1));
        let mut total = 0;
        for layer in f.layers() {
            assert!(
                layer.convert(Basis::M).all_coeffs_nonnegative_integral(),
                "{h}"
            );
            let dim = layer.hall_pairing(&h1n).unwrap();
            total += i64::try_from(dim.coeff(0).to_integer()).unwrap();
        }
        assert_eq!(total, (1..=n as i64).product::<i64>(), "{h}");
    }
}

#[test]
fn betti_matches_poincare_and_both_variants_agree() {
    for h in up_to(4) {
        let twin = hilbert_and_betti(&h, Variant::Twin, MODP).unwrap();
        let hess = hilbert_and_betti(&h, Variant::Hessenberg, MODP).unwrap();
        assert_eq!(twin.betti, poincare(&h), "{h}");
        assert_eq!(twin.hilbert, hess.hilbert, "{h}");
    }
    for h in up_to(3) {
        let full = hilbert_and_betti_with(&h, Variant::Twin, Mode::Exact, Solver::Full).unwrap();
        assert_eq!(full.betti, poincare(&h));
    }
}

#[test]
fn recovery_factors() {
    let mu = part(&[2, 1]);
    assert_eq!(
        recovery_factor(Variant::Twin, &mu),
        QPoly::from_ints(&[1, -3, 3, -1])
    );
    assert_eq!(
        recovery_factor(Variant::Hessenberg, &mu),
        QPoly::from_ints(&[1, -1, -1, 1])
    );
}

#[test]
fn prime_disagreement_reports_both_primes() {
    let e = Error::PrimeDisagreement {
        what: "a rank".into(),
        primes: [5, 7],
        first: "1".into(),
        second: "2".into(),
    };
    assert!(e.to_string().contains("[5, 7]"));
}

#[test]
fn characters_are_class_functions() {
    // Traces are taken at one representative per class; other members agree.
    let h = hf(&[2, 3, 3]);
    let g = build_gkm(&h, Variant::Hessenberg);
    let (chi, _) = full_character(&g, 2, Mode::Exact).unwrap();
    let by_class: BTreeMap<Partition, i64> = chi;
    assert_eq!(by_class.len(), partitions(3).len());
    let iso =
        equivariant_character(&h, Variant::Hessenberg, 2, Mode::Exact, Solver::Isotypic).unwrap();
    assert_eq!(iso.degrees[2], by_class);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn seeds_do_not_change_answers(seed in any::<u64>(), k in 0usize..5) {
        let h = enumerate_hessenberg(3).into_iter().nth(k).unwrap();
        let a = frobenius_graded(&h, Action::Dagger, Mode::ModP { seed }).unwrap();
        prop_assert!(a.value.same_as(&graded(&llt_direct(&h))));
        match a.certificate {
            Certificate::DualPrime { seed: s, primes } => {
                prop_assert_eq!(s, seed);
                prop_assert_ne!(primes[0], primes[1]);
            }
            Certificate::Exact => prop_assert!(false),
        }
    }
}
