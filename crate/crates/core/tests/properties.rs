use std::sync::Arc;

use dual_horadam::dual_horadam::{dog, dog_from, gen_dog_series, norm_dog_lhs, ClosedForms};
use dual_horadam::horadam::{binet_w, gen_series_scalar, w};
use dual_horadam::scalar::{ratio, BigRat};
use dual_horadam::series::TruncSeries;
use dual_horadam::{Conjugate, DualElem, HoradamParams, Octonion, QuadScalar, Ring, Scale, Sequence};
use num_traits::Zero;
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = BigRat> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| ratio(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = BigRat> {
    small_rat().prop_filter("nonzero", |x| !x.is_zero())
}

fn oct() -> impl Strategy<Value = Octonion<BigRat>> {
    prop::array::uniform8(small_rat()).prop_map(Octonion::new)
}

fn dual_oct() -> impl Strategy<Value = DualElem<Octonion<BigRat>>> {
    (oct(), oct()).prop_map(|(re, du)| DualElem::new(re, du))
}

fn discriminant() -> impl Strategy<Value = Arc<BigRat>> {
    prop_oneof![Just(5i64), Just(8), Just(-3), Just(4), Just(13), Just(-7)].prop_map(|d| Arc::new(ratio(d, 1)))
}

fn quad_triple() -> impl Strategy<Value = (QuadScalar, QuadScalar, QuadScalar)> {
    (discriminant(), prop::array::uniform6(small_rat())).prop_map(|(d, [a, b, c, e, f, g])| {
        (
            QuadScalar::new(a, b, &d),
            QuadScalar::new(c, e, &d),
            QuadScalar::new(f, g, &d),
        )
    })
}

fn grid_params() -> impl Strategy<Value = HoradamParams> {
    let v = prop::sample::select(vec![0i64, 1, 2, -1]);
    let c = prop::sample::select(vec![1i64, 2, 3, -1]);
    (v.clone(), v, c.clone(), c)
        .prop_map(|(a, b, p, q)| HoradamParams::from_ints(a, b, p, q))
        .prop_filter("D != 0", |h| !h.discriminant().is_zero())
}

fn rational_params() -> impl Strategy<Value = HoradamParams> {
    (small_rat(), small_rat(), small_rat(), nonzero_rat()).prop_map(|(a, b, p, q)| HoradamParams::new(a, b, p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn quad_scalar_ring_axioms((u, v, x) in quad_triple()) {
        prop_assert_eq!(u.mul_ref(&v).mul_ref(&x), u.mul_ref(&v.mul_ref(&x)));
        prop_assert_eq!(u.add_ref(&v).add_ref(&x), u.add_ref(&v.add_ref(&x)));
        prop_assert_eq!(u.mul_ref(&v), v.mul_ref(&u));
        prop_assert_eq!(u.add_ref(&v), v.add_ref(&u));
        prop_assert_eq!(u.mul_ref(&v.add_ref(&x)), u.mul_ref(&v).add_ref(&u.mul_ref(&x)));
        prop_assert_eq!(u.mul_ref(&u.one_like()), u.clone());
        prop_assert!(u.sub_ref(&u).is_zero_elem());
    }

    #[test]
    fn octonion_norm_is_multiplicative(x in oct(), y in oct()) {
        prop_assert_eq!(x.mul_ref(&y).norm(), x.norm() * y.norm());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn quad_scalar_rationality(d in discriminant(), x in small_rat(), y in small_rat()) {
        let u = QuadScalar::new(x.clone(), y.clone(), &d);
        prop_assert_eq!(u.is_rational(), y.is_zero());
        prop_assert_eq!(u.to_rational().is_ok(), y.is_zero());
        prop_assert!(u.mul_ref(&u.galois_conj()).is_rational());
    }

    #[test]
    fn quad_scalar_inverse(d in discriminant(), x in small_rat(), y in small_rat()) {
        let u = QuadScalar::new(x, y, &d);
        match dual_horadam::Field::inv(&u) {
            Ok(i) => prop_assert_eq!(u.mul_ref(&i), u.one_like()),
            Err(_) => prop_assert!(u.norm().is_zero()),
        }
    }

    #[test]
    fn octonion_alternative_laws(x in oct(), y in oct()) {
        prop_assert_eq!(x.mul_ref(&x.mul_ref(&y)), x.mul_ref(&x).mul_ref(&y));
        prop_assert_eq!(y.mul_ref(&x).mul_ref(&x), y.mul_ref(&x.mul_ref(&x)));
    }

    #[test]
    fn octonion_conjugation(x in oct(), y in oct()) {
        prop_assert_eq!(x.mul_ref(&y).conj(), y.conj().mul_ref(&x.conj()));
        let trace = x.add_ref(&x.conj());
        prop_assert_eq!(trace, Octonion::scalar(x.c[0].clone() * ratio(2, 1)));
        prop_assert_eq!(x.mul_ref(&x.conj()), Octonion::scalar(x.sum_of_squares()));
    }

    #[test]
    fn pure_dual_elements_have_zero_norm(x in oct()) {
        let d = DualElem::new(Octonion::zero(&ratio(0, 1)), x);
        prop_assert!(d.norm().is_zero_elem());
    }

    #[test]
    fn dual_norm_left_equals_right(x in dual_oct()) {
        prop_assert_eq!(x.norm(), x.norm_right());
        let n = x.scalar_norm();
        prop_assert_eq!(n.re, x.re.sum_of_squares());
    }

    #[test]
    fn dual_mul_is_bilinear(x in dual_oct(), y in dual_oct(), z in dual_oct(), s in small_rat()) {
        prop_assert_eq!(x.add_ref(&y).mul_ref(&z), x.mul_ref(&z).add_ref(&y.mul_ref(&z)));
        prop_assert_eq!(z.mul_ref(&x.add_ref(&y)), z.mul_ref(&x).add_ref(&z.mul_ref(&y)));
        prop_assert_eq!(x.scale(&s).mul_ref(&y), x.mul_ref(&y).scale(&s));
        prop_assert_eq!(x.mul_ref(&y.scale(&s)), x.mul_ref(&y).scale(&s));
    }

    #[test]
    fn series_division_round_trips(
        f in prop::collection::vec(small_rat(), 1..12),
        g0 in nonzero_rat(),
        g in prop::collection::vec(small_rat(), 0..11),
    ) {
        let order = 12;
        let mut gc = vec![g0];
        gc.extend(g);
        let f = TruncSeries::new(f, order);
        let g = TruncSeries::new(gc, order);
        let h = f.div(&g).unwrap();
        prop_assert_eq!(h.mul(&g).unwrap(), f);
    }

    #[test]
    fn series_division_is_prefix_stable(
        f in prop::collection::vec(small_rat(), 16),
        g0 in nonzero_rat(),
        g in prop::collection::vec(small_rat(), 15),
        short in 1usize..16,
    ) {
        let mut gc = vec![g0];
        gc.extend(g);
        let long = TruncSeries::new(f.clone(), 16).div(&TruncSeries::new(gc.clone(), 16)).unwrap();
        let cut = TruncSeries::new(f, short).div(&TruncSeries::new(gc, short)).unwrap();
        prop_assert_eq!(&long.coeffs()[..short], cut.coeffs());
    }

    #[test]
    fn roots_sum_and_product(params in rational_params()) {
        prop_assume!(!params.discriminant().is_zero());
        let r = params.roots().unwrap();
        let d = r.discriminant();
        prop_assert_eq!(r.alpha.add_ref(&r.beta), QuadScalar::from_rat(params.p.clone(), d));
        prop_assert_eq!(r.alpha.mul_ref(&r.beta), QuadScalar::from_rat(-params.q.clone(), d));
    }

    #[test]
    fn binet_reproduces_recurrence(params in rational_params(), n in 0u64..40) {
        prop_assume!(!params.discriminant().is_zero());
        prop_assert_eq!(binet_w(&params, n).unwrap(), w(&params, n));
    }

    #[test]
    fn windows_satisfy_recurrence(params in rational_params(), start in 0u64..30, len in 0usize..12) {
        let mut seq = Sequence::new(&params);
        prop_assert!(seq.window(start, len).satisfies_recurrence(&params));
    }

    #[test]
    fn scalar_generating_function(params in rational_params()) {
        let s = gen_series_scalar(&params, 20);
        for (k, c) in s.coeffs().iter().enumerate() {
            prop_assert_eq!(c, &w(&params, k as u64));
        }
    }

    #[test]
    fn lifted_recurrence(params in rational_params(), n in 0u64..24) {
        let mut seq = Sequence::new(&params);
        let next2 = dog_from(&mut seq, n + 2);
        let rhs = dog_from(&mut seq, n + 1).scale(&params.p).add_ref(&dog_from(&mut seq, n).scale(&params.q));
        prop_assert_eq!(next2, rhs);
    }

    #[test]
    fn dual_norm_parts(params in rational_params(), n in 0u64..24) {
        let mut seq = Sequence::new(&params);
        let vals = seq.window(n, 9).values;
        let re: BigRat = vals[..8].iter().map(|x| x * x).sum();
        let du: BigRat = vals.windows(2).map(|p| &p[0] * &p[1]).sum::<BigRat>() * ratio(2, 1);
        prop_assert_eq!(norm_dog_lhs(&mut seq, n), DualElem::new(re, du));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_binet_on_grid(params in grid_params(), n in 0u64..=32) {
        let cf = ClosedForms::new(&params).unwrap();
        let quad = cf.binet_dog_quad(n);
        prop_assert!(quad.re.is_rational() && quad.du.is_rational());
        prop_assert_eq!(cf.binet_dog(n).unwrap(), dog(&params, n).value);
    }

    #[test]
    fn dual_generating_function_on_grid(params in grid_params()) {
        let s = gen_dog_series(&params, 32);
        let mut seq = Sequence::new(&params);
        for (k, c) in s.coeffs().iter().enumerate() {
            prop_assert_eq!(c, &dog_from(&mut seq, k as u64));
        }
    }
}
