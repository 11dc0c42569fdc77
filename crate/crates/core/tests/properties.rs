use proptest::prelude::*;

use jacq::exactnum::{epsilon, omega_pow, CycloRational, Rational};
use jacq::quaternion::Quaternion;
use jacq::{IdentityReport, Ring};

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..60, 1i64..25).prop_map(|(n, d)| Rational::new(n, d))
}

fn cyclo() -> impl Strategy<Value = CycloRational> {
    (rational(), rational()).prop_map(|(p, q)| CycloRational::new(p, q))
}

fn quat_rational() -> impl Strategy<Value = Quaternion<Rational>> {
    (rational(), rational(), rational(), rational()).prop_map(|(s, i, j, k)| Quaternion::new(s, i, j, k))
}

fn quat_cyclo() -> impl Strategy<Value = Quaternion<CycloRational>> {
    (cyclo(), cyclo(), cyclo(), cyclo()).prop_map(|(s, i, j, k)| Quaternion::new(s, i, j, k))
}

proptest! {
    #[test]
    fn cyclo_ring_axioms(x in cyclo(), y in cyclo(), z in cyclo()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(y.clone() + z.clone()), &x * &y + &x * &z);
        prop_assert_eq!(&x * &CycloRational::one(), x.clone());
        prop_assert_eq!(x.clone() + CycloRational::zero(), x.clone());
        prop_assert_eq!(x.clone() - x.clone(), CycloRational::zero());
    }

    #[test]
    fn conjugation_is_involutive_automorphism(x in cyclo(), y in cyclo()) {
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!((x.clone() + y.clone()).conj(), x.conj() + y.conj());
    }

    #[test]
    fn norm_is_positive_rational(x in cyclo()) {
        let prod = &x * &x.conj();
        prop_assert!(prod.is_rational());
        prop_assert_eq!(prod.p.clone(), x.norm());
        if !x.is_zero() {
            prop_assert!(prod.p.is_positive());
        }
    }

    #[test]
    fn omega_powers(n in -1000i64..1000) {
        prop_assert_eq!(&omega_pow(n) * &omega_pow(-n), CycloRational::one());
        let e = omega_pow(n) + omega_pow(n).conj();
        prop_assert!(e.is_rational());
        if n >= 0 {
            prop_assert_eq!(e.rational_part().unwrap(), Rational::integer(epsilon(n)));
        }
    }

    #[test]
    fn rational_string_round_trip(x in rational()) {
        prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
    }

    #[test]
    fn cyclo_string_round_trip(x in cyclo()) {
        prop_assert_eq!(x.to_string().parse::<CycloRational>().unwrap(), x);
    }

    #[test]
    fn quaternion_conjugate_and_norm(a in quat_rational(), b in quat_rational()) {
        let aa = a.clone() * a.conj();
        prop_assert!(aa.vector_is_zero());
        prop_assert_eq!(aa.s, a.norm());
        prop_assert_eq!((a.clone() * b.clone()).conj(), b.conj() * a.conj());
        prop_assert_eq!((a.clone() * b.clone()).norm(), a.norm() * b.norm());
    }

    #[test]
    fn quaternion_associative(a in quat_rational(), b in quat_rational(), c in quat_rational()) {
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a * (b * c));
    }

    #[test]
    fn cyclo_quaternion_norm_multiplicative(a in quat_cyclo(), b in quat_cyclo()) {
        prop_assert_eq!((a.clone() * b.clone()).norm(), a.norm() * b.norm());
        prop_assert_eq!((a.clone() * b.clone()).conj(), b.conj() * a.conj());
    }

    #[test]
    fn scalars_are_central(c in rational(), a in quat_rational()) {
        let s = Quaternion::from_scalar(c);
        prop_assert_eq!(s.clone() * a.clone(), a * s);
    }

    #[test]
    fn report_round_trip(n in 0i64..300, x in rational(), y in rational()) {
        let rep = IdentityReport::compare(jacq::Identity::E3, n, &x, &y);
        prop_assert_eq!(rep.passed(), x == y);
        let line = serde_json::to_string(&rep).unwrap();
        let back: IdentityReport = serde_json::from_str(&line).unwrap();
        prop_assert_eq!(back, rep);
    }
}
