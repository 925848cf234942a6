use hurwitz::hurwitz::{hurwitz_number, SurfaceSpec};
use hurwitz::oracles::tuple::{tuple_hurwitz, DEFAULT_BUDGET};
use hurwitz::partitions::{enumerate_partitions, Partition};
use hurwitz::rational;
use hurwitz::symfun::{schur_in_p, schur_jacobi_trudi, to_schur, PowerSumPoly};
use proptest::prelude::*;

fn partition_of(d: usize) -> impl Strategy<Value = Partition> {
    let all = enumerate_partitions(d);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn profiles(max_d: usize, max_len: usize) -> impl Strategy<Value = (usize, Vec<Partition>)> {
    (1..=max_d)
        .prop_flat_map(move |d| (Just(d), prop::collection::vec(partition_of(d), 0..=max_len)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partition_text_roundtrip(parts in prop::collection::vec(1u32..7, 0..6)) {
        let p = Partition::from_unsorted(parts);
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn rational_text_roundtrip(n in -1000i64..1000, d in 1i64..1000) {
        let x = rational::ratio(n, d);
        prop_assert_eq!(rational::parse(&rational::to_string(&x)).unwrap(), x);
    }

    #[test]
    fn order_of_profiles_is_irrelevant((d, mut ps) in profiles(5, 4), e in -2i64..=2) {
        let h = hurwitz_number(e, d, &ps).unwrap();
        ps.reverse();
        prop_assert_eq!(hurwitz_number(e, d, &ps).unwrap(), h);
    }

    #[test]
    fn unramified_points_are_invisible((d, ps) in profiles(5, 3), e in -2i64..=2) {
        let mut with = ps.clone();
        with.push(Partition::ones(d));
        prop_assert_eq!(
            hurwitz_number(e, d, &with).unwrap(),
            hurwitz_number(e, d, &ps).unwrap()
        );
    }

    #[test]
    fn tuples_agree_with_characters((d, ps) in profiles(4, 3), e in -2i64..=2) {
        let surface = SurfaceSpec::with_euler(e).unwrap();
        let want = hurwitz_number(e, d, &ps).unwrap();
        prop_assert_eq!(tuple_hurwitz(&surface, d, &ps, DEFAULT_BUDGET).unwrap(), want);
    }

    #[test]
    fn schur_bases_agree(lam in (0usize..=6).prop_flat_map(partition_of)) {
        let s = schur_in_p(&lam).unwrap();
        prop_assert_eq!(&schur_jacobi_trudi(&lam).unwrap(), &s);
        let back = to_schur(&s).unwrap();
        prop_assert_eq!(back.coeffs.len(), 1);
        prop_assert_eq!(back.coeff(&lam), rational::int(1));
    }

    #[test]
    fn power_sums_roundtrip_through_schur(delta in (1usize..=5).prop_flat_map(partition_of)) {
        let f = PowerSumPoly::monomial(delta, rational::ratio(3, 7));
        prop_assert_eq!(to_schur(&f).unwrap().to_power_sums().unwrap(), f);
    }
}
