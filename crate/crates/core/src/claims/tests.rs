use super::*;
use crate::sequences::is_prime;

fn claim(id: &str) -> Claim {
    find_claim(id).unwrap_or_else(|| panic!("no claim {id}"))
}

fn single(id: &str, p: u64, path: EvalPath) -> VerificationOutcome {
    let ctx = PrimeContext::new(p, None);
    let mut v = evaluate(&claim(id), &ctx, path).unwrap();
    assert_eq!(v.len(), 1);
    v.pop().unwrap()
}

fn residue(n: u64) -> Value {
    Value::Residue(BigUint::from(n))
}

#[test]
fn spot_values_at_five() {
    for path in [EvalPath::Exact, EvalPath::Fast, EvalPath::Both] {
        let o = single("thm1", 5, path);
        assert!(o.holds);
        assert_eq!((o.lhs.clone(), o.rhs.clone()), (residue(130), residue(130)));
        assert_eq!(o.modulus.to_string(), "625");
        let o = single("thm2", 5, path);
        assert!(o.holds);
        assert_eq!(o.rhs, residue(265));
        let o = single("lemma27-morley", 5, path);
        assert_eq!((o.lhs, o.rhs), (residue(6), residue(6)));
        let o = single("lemma22-sunimp", 5, path);
        assert_eq!((o.lhs, o.rhs), (residue(3), residue(3)));
    }
}

#[test]
fn right_hand_side_values() {
    let ctx = PrimeContext::new(5, None);
    let r = rhs_value(&claim("lemma21-Fdiag"), &ctx, None).unwrap();
    assert_eq!(r, ExactRational::from_integer(5175.into()));
    let ctx = PrimeContext::new(3, None);
    let r = rhs_value(&claim("sun-ijm-20k3"), &ctx, None).unwrap();
    assert_eq!(r, ExactRational::from_integer(9.into()));
}

#[test]
fn every_prime_claim_holds_on_small_primes_along_both_paths() {
    for p in (3..=41).filter(|&p| is_prime(p)) {
        let ctx = PrimeContext::new(p, None);
        for c in registry().iter().filter(|c| c.domain.admits_prime(p)) {
            for o in evaluate(c, &ctx, EvalPath::Both).unwrap() {
                assert!(o.holds, "{} fails at p={p} {:?}", c.id, o.instance);
                assert!(o.diff_valuation.is_at_least(c.modulus_exponent.min(3) as i64));
            }
        }
    }
}

#[test]
fn domain_is_enforced() {
    let ctx = PrimeContext::new(3, None);
    assert_eq!(
        evaluate(&claim("thm1"), &ctx, EvalPath::Exact),
        Err(ClaimError::Domain { claim: "thm1", p: 3 })
    );
    assert!(evaluate(&claim("thm2"), &ctx, EvalPath::Both).unwrap()[0].holds);
    assert_eq!(
        evaluate(&claim("lemma26a"), &ctx, EvalPath::Exact),
        Err(ClaimError::NotScalar("lemma26a"))
    );
}

#[test]
fn instance_counts() {
    let ctx = PrimeContext::new(7, None);
    assert_eq!(evaluate(&claim("sun-kbinom"), &ctx, EvalPath::Both).unwrap().len(), 6);
    // r >= s always has a nonzero denominator; (r, s) = (1, 2) never does for p >= 7
    assert_eq!(jacobsthal_instances(7).len(), 15 * 3);
    let five = jacobsthal_instances(5);
    assert!(five.contains(&Instance::Jacobsthal { a: 6, b: 1, r: 1, s: 2 }));
    assert!(!five.contains(&Instance::Jacobsthal { a: 4, b: 1, r: 1, s: 2 }));
}

#[test]
fn jacobsthal_modulus_depends_on_instance() {
    let ctx = PrimeContext::new(5, None);
    for o in evaluate(&claim("jacobsthal"), &ctx, EvalPath::Both).unwrap() {
        let Some(Instance::Jacobsthal { r, s, .. }) = o.instance else { panic!() };
        let k = r + s + r.min(s);
        assert_eq!(o.modulus, Modulus::PrimePower { p: 5, k });
        assert!(o.holds);
    }
}

#[test]
fn a_wrong_right_hand_side_is_caught() {
    // lemma32 with the opposite sign of the E term fails whenever E_{p-3} is a unit
    let ctx = PrimeContext::new(7, None);
    let c = claim("lemma32-Ghalf");
    let lhs = lhs_exact(&c, &ctx, None).unwrap();
    let rhs = rhs_value(&c, &ctx, None).unwrap();
    assert!(valuation(&(&lhs - &rhs), 7).is_at_least(4));
    assert!(!valuation(&(&lhs + &rhs), 7).is_at_least(4));
}

#[test]
fn lifted_euler_values_cap_the_reported_valuation() {
    let p = 631;
    let ctx = PrimeContext::new(p, None);
    assert!(matches!(ctx.euler(), EulerValue::Lifted(_)));
    let o = &evaluate(&claim("lemma22-sunimp"), &ctx, EvalPath::Fast).unwrap()[0];
    assert!(o.holds);
    assert_eq!(o.diff_valuation, Valuation::Finite(1));
    let o = &evaluate(&claim("thm1"), &ctx, EvalPath::Fast).unwrap()[0];
    assert!(o.holds);
    assert_eq!(o.diff_valuation, Valuation::Finite(4));
}

#[test]
fn decomposition_recombines() {
    for p in (5..=31).filter(|&p| is_prime(p)) {
        let ctx = PrimeContext::new(p, None);
        for pair in WzPair::ALL {
            let d = decomposition_check(pair, &ctx);
            assert!(d.holds(), "{d:?}");
        }
    }
}

#[test]
fn index_claims() {
    let ctx = IndexContext::new(20, 12);
    for c in registry().iter().filter(|c| c.is_identity()) {
        for n in 1..=20 {
            let o = evaluate_index(c, n, &ctx).unwrap();
            assert!(o.holds, "{} at n={n}", c.id);
            assert_eq!(o.diff_valuation, Valuation::Infinite);
            assert_eq!(o.modulus.to_string(), "exact");
        }
    }
    // n = 1: -1 * 1 * 1 / 3 = -1/3 on both sides of the H_k identity
    let o = evaluate_index(&claim("lemma26a"), 1, &ctx).unwrap();
    assert_eq!(o.lhs, Value::Exact(ExactRational::new((-1).into(), 3.into())));
    assert!(evaluate_index(&claim("thm1"), 5, &ctx).is_err());
}
