//! Right-hand sides, exact in `p`, `q_p(2)` and `E_{p-3}`.

use num_bigint::BigInt;

use super::context::{Instance, PrimeContext};
use super::registry::ClaimKind;
use crate::arith::ExactRational;

pub(crate) fn rhs(kind: ClaimKind, ctx: &PrimeContext, inst: Option<Instance>) -> ExactRational {
    use ClaimKind::*;
    let z = |n: i64| BigInt::from(n);
    let p = z(ctx.p() as i64);
    let s = z(ctx.sign());
    let q = ctx.q().clone();
    let e = ctx.euler().value();
    let p2 = &p * &p;
    let p3 = &p2 * &p;
    let int = |n: BigInt| ExactRational::from_integer(n);
    match kind {
        Thm256 => int(&p * &s - &p3 * &e),
        Thm1024 => int(z(3) * &p * &s + z(3) * &p3 * &e),
        VanHamme | Long6n1 => int(&s * &p),
        Zudilin => int(z(3) * &p * &s),
        WolstenholmeH1 | WolstenholmeH2 | HalfHarmonic2 => int(z(0)),
        CentralBinomial2p1p | Jacobsthal => int(z(1)),
        ChenXieHe | Sun4k1 => int(&p * &s + &p3 * &e),
        // (-1)^((p+1)/2) = -(-1)^((p-1)/2)
        GuoLiu => int(-&p * &s + &p3 * (z(2) - &e)),
        SunHalf20k3 => {
            let two_pow = z(1) + &p * &q;
            let t = &two_pow - z(1);
            int(&p * &s * (&two_pow + z(2) - &t * &t))
        }
        Diag256 => int(z(-3) * &p2 - z(12) * &p3 + z(18) * &p3 * &q),
        SunFourPower => int(z(2) * &e),
        HalfG256 => int(-&p3 * &e),
        SunKBinom => {
            let Some(Instance::K(k)) = inst else { panic!("sun-kbinom needs a k instance") };
            let exponent = (2 * k) / ctx.p();
            // (-1)^(floor(2k/p) - 1)
            let sgn = if exponent % 2 == 1 { 1 } else { -1 };
            int(z(2 * sgn) * &p)
        }
        MidG256 => int(&s * &p * (z(1) - z(3) * &p * &q + z(6) * &p2 * &q * &q)),
        HalfHarmonic => int(z(-2) * &q + &p * &q * &q),
        SunOddSum1 => int(-&s * &q),
        SunOddSum2 => ExactRational::new(-&s * &q * &q, z(2)),
        Morley => int(&s * (BigInt::from(4).pow((ctx.p() - 1) as u32))),
        UpperG256 => int(
            z(3) * &p2 * (z(1) + z(4) * &p - z(6) * &p * &q)
                + &s * z(3) * &p2 * &q * (z(1) - z(2) * &p * &q),
        ),
        H2kHk => int(z(-2) * &s * &q * &q),
        Diag1024 => int(z(15) * &p2 * (z(-1) - z(6) * &p + z(8) * &p * &q)),
        HalfG1024 => int(z(3) * &p3 * &e),
        MidG1024 => int(&s * z(3) * &p * (z(1) - z(5) * &p * &q + z(15) * &p2 * &q * &q)),
        UpperG1024 => int(
            z(15) * &p2 * (z(1) + z(6) * &p - z(8) * &p * &q)
                + &s * z(15) * &p2 * (&q - z(3) * &p * &q * &q),
        ),
        HuMaoH | HuMaoH2k | Telescope(_) | Boundary(_) => {
            panic!("{kind:?} is indexed by n, not by a prime")
        }
    }
}
