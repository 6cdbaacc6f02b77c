use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use super::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 1..=max_deg + 1).prop_map(Poly::from_coeffs)
}

fn tau_scalar() -> impl Strategy<Value = TauScalar> {
    (poly(2), poly(2))
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| TauScalar::from_polys(n, d).unwrap())
}

/// Independent check: is `x` an integer multiple of `r`?
fn is_multiple(x: &Rational, r: &Rational) -> bool {
    (x / r).is_integer()
}

#[test]
fn rat_gcd_examples() {
    assert_eq!(rat_gcd(&rat(2, 3), &rat(1, 1)).unwrap(), rat(1, 3));
    assert_eq!(rat_gcd(&rat(1, 1), &rat(0, 1)).unwrap(), rat(1, 1));
    assert_eq!(rat_gcd(&rat(4, 1), &rat(6, 1)).unwrap(), rat(2, 1));
    assert!(rat_gcd(&rat(0, 1), &rat(0, 1)).is_err());
}

#[test]
fn rat_gcd_matches_brute_force_search() {
    // The largest r = p/q (q ≤ 36) dividing both, found by enumeration.
    let a = rat(2, 3);
    let b = rat(1, 1);
    let mut best = rat(0, 1);
    for q in 1..=36 {
        for p in 1..=36 {
            let r = rat(p, q);
            if is_multiple(&a, &r) && is_multiple(&b, &r) && r > best {
                best = r;
            }
        }
    }
    assert_eq!(best, rat(1, 3));
}

#[test]
fn tau_eval_examples() {
    let tau = TauScalar::tau();
    assert!((tau_eval(&tau, 12) - std::f64::consts::TAU).abs() < 1e-12);
    let x: TauScalar = "1+tau/2".parse().unwrap();
    assert!((tau_eval(&x, 12) - 4.141592653589793).abs() < 1e-12);
    let three = &(&TauScalar::from_int(3) * &tau) / &tau;
    assert_eq!(three, TauScalar::from_int(3));
    assert_eq!(tau_eval(&three, 12), 3.0);
    assert_eq!(
        tau_eval_decimal(&tau, 30),
        "6.283185307179586476925286766559"
    );
}

#[test]
fn floor_and_sign_are_exact() {
    let x: TauScalar = "tau-6".parse().unwrap();
    assert_eq!(x.floor(), BigInt::from(0));
    assert_eq!(x.signum(), 1);
    let y: TauScalar = "(3-tau/2)".parse().unwrap();
    assert_eq!(y.signum(), -1);
    assert_eq!(y.floor(), BigInt::from(-1));
    assert_eq!(TauScalar::from_int(-2).floor(), BigInt::from(-2));
}

#[test]
fn literal_grammar() {
    let x: TauScalar = "1/2+3*tau".parse().unwrap();
    assert_eq!(x.to_string(), "1/2+3*tau");
    let y: TauScalar = "-tau + 2/4".parse().unwrap();
    assert_eq!(y.to_string(), "1/2-tau");
    let z: TauScalar = "(1+tau)/(2*tau^2)".parse().unwrap();
    assert_eq!(z.to_string(), "(1/2+1/2*tau)/(tau^2)");
    assert!("tua".parse::<TauScalar>().is_err());
    assert!("1/0".parse::<TauScalar>().is_err());
    assert!("(1+tau".parse::<TauScalar>().is_err());
}

proptest! {
    #[test]
    fn field_axioms(a in tau_scalar(), b in tau_scalar(), c in tau_scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        }
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in tau_scalar(), b in tau_scalar()) {
        let (x, y) = (tau_eval(&a, 14), tau_eval(&b, 14));
        prop_assume!(x.abs() <= 1e3 && y.abs() <= 1e3);
        prop_assert!((tau_eval(&(&a * &b), 14) - x * y).abs() < 1e-10);
        prop_assert!((tau_eval(&(&a + &b), 14) - (x + y)).abs() < 1e-10);
    }

    #[test]
    fn display_round_trips(a in tau_scalar()) {
        let printed = a.to_string();
        prop_assert_eq!(printed.parse::<TauScalar>().unwrap(), a);
    }

    #[test]
    fn rat_gcd_divides_and_is_maximal(a in rational(), b in rational()) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let g = rat_gcd(&a, &b).unwrap();
        prop_assert!(g.is_positive());
        prop_assert!(is_multiple(&a, &g) && is_multiple(&b, &g));
        for q in 1..=12 {
            for p in 1..=12 {
                let r = rat(p, q);
                if is_multiple(&a, &r) && is_multiple(&b, &r) {
                    prop_assert!(is_multiple(&g, &r));
                }
            }
        }
    }

    #[test]
    fn floor_brackets_the_value(a in tau_scalar()) {
        let f = a.floor();
        let x = tau_eval(&a, 14);
        let f = num_traits::ToPrimitive::to_f64(&f).unwrap();
        prop_assert!(f <= x + 1e-9 && x < f + 1.0 + 1e-9);
    }
}
