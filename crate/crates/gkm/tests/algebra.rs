use proptest::prelude::*;
use twinllt_gkm::linalg::{Exact, ModP, Scalars};
use twinllt_gkm::modp::prime_pair;
use twinllt_gkm::monomial::Monomials;
use twinllt_gkm::perm::{Perm, SymmetricGroup};

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    (0..SymmetricGroup::new(n).order()).prop_map(move |i| SymmetricGroup::new(n).element(i).clone())
}

proptest! {
    #[test]
    fn group_laws(u in perm(5), v in perm(5), w in perm(5)) {
        prop_assert_eq!(u.compose(&v).compose(&w), u.compose(&v.compose(&w)));
        prop_assert_eq!(u.compose(&u.inverse()), Perm::identity(5));
        prop_assert_eq!(v.compose(&u).compose(&v.inverse()).cycle_type(), u.cycle_type());
    }

    #[test]
    fn variable_action_is_a_left_action(u in perm(4), v in perm(4), d in 0usize..5) {
        let mons = Monomials::new(4, d);
        let uv = u.compose(&v);
        for m in 0..mons.len() {
            prop_assert_eq!(mons.permute(mons.permute(m, &v), &u), mons.permute(m, &uv));
        }
    }

    #[test]
    fn substitution_forgets_the_source(a in 0usize..4, b in 0usize..4, d in 0usize..5) {
        prop_assume!(a != b);
        let mons = Monomials::new(4, d);
        for m in 0..mons.len() {
            let t = mons.substitute(m, a, b);
            prop_assert_eq!(mons.get(t)[a], 0);
            prop_assert_eq!(mons.substitute(t, a, b), t);
        }
    }

    #[test]
    fn ranks_agree_across_fields(entries in prop::collection::vec(-3i64..4, 24), seed in any::<u64>()) {
        let rows: Vec<Vec<i64>> = entries.chunks(6).map(<[i64]>::to_vec).collect();
        let p = ModP::new(prime_pair(seed)[0]);
        let mp: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| p.from_int(x)).collect()).collect();
        let ex: Vec<_> = rows.iter().map(|r| r.iter().map(|&x| Exact.from_int(x)).collect()).collect();
        prop_assert_eq!(p.rank(mp, 6), Exact.rank(ex, 6));
    }
}
