//! Left-hand sides over exact rationals.

use num_traits::Zero;

use super::context::{Instance, PrimeContext};
use super::registry::ClaimKind;
use crate::arith::ExactRational;
use crate::sequences::{binomial, multinomial4, pochhammer, HarmonicPair};
use crate::wz::{eval_f, eval_g, WzPair};

fn r(n: i64) -> ExactRational {
    ExactRational::from_integer(n.into())
}

fn ratio(n: i64, d: i64) -> ExactRational {
    ExactRational::new(n.into(), d.into())
}

fn c(n: i64, k: i64) -> ExactRational {
    ExactRational::from_integer(binomial(n, k))
}

/// `base^e` for a possibly negative exponent.
fn power(base: i64, e: i64) -> ExactRational {
    let b = r(base).pow(e.unsigned_abs() as i32);
    if e < 0 {
        b.recip()
    } else {
        b
    }
}

fn sign(n: i64) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

fn sum<I: Iterator<Item = ExactRational>>(terms: I) -> ExactRational {
    terms.fold(ExactRational::zero(), |acc, t| acc + t)
}

fn g_sum(pair: WzPair, p: u64, ks: std::ops::RangeInclusive<u64>) -> ExactRational {
    sum(ks.map(|k| eval_g(pair, p, k)))
}

/// `sum_{n < m} (6n+1) C(2n,n)^3 / 256^n`
pub(crate) fn series256(m: u64) -> ExactRational {
    sum((0..m as i64).map(|n| r(6 * n + 1) * c(2 * n, n).pow(3) * power(256, -n)))
}

/// `sum_{n < m} (20n+3) (4n)!/n!^4 / (-1024)^n`
pub(crate) fn series1024(m: u64) -> ExactRational {
    sum((0..m as i64).map(|n| {
        r(20 * n + 3) * ExactRational::from_integer(multinomial4(n as u64)) * power(-1024, -n)
    }))
}

pub(crate) fn lhs(kind: ClaimKind, ctx: &PrimeContext, inst: Option<Instance>) -> ExactRational {
    use ClaimKind::*;
    let p = ctx.p();
    let pi = p as i64;
    let h = ctx.half();
    let half = ratio(1, 2);
    match kind {
        Thm256 => series256(p),
        Thm1024 => series1024(p),
        VanHamme => sum((0..=h).map(|k| {
            let t = pochhammer(&half, k) / pochhammer(&r(1), k);
            r(sign(k as i64) * (4 * k as i64 + 1)) * t.pow(3)
        })),
        WolstenholmeH1 => ctx.harmonic(p - 1).clone(),
        WolstenholmeH2 => ctx.harmonic2(p - 1).clone(),
        CentralBinomial2p1p => c(2 * pi - 1, pi - 1),
        ChenXieHe => sum((0..pi).map(|k| r(3 * k + 1) * c(2 * k, k).pow(3) * power(-8, -k))),
        Sun4k1 => sum((0..pi).map(|k| r(4 * k + 1) * c(2 * k, k).pow(3) * power(-64, -k))),
        GuoLiu => sum((0..=(p + 1) / 2).map(|k| {
            let t = pochhammer(&-half.clone(), k) / pochhammer(&r(1), k);
            r(sign(k as i64) * (4 * k as i64 - 1)) * t.pow(3)
        })),
        Zudilin => sum((0..p).map(|n| {
            let num = pochhammer(&half, n) * pochhammer(&half, 2 * n);
            let den = pochhammer(&r(1), n).pow(3);
            r(sign(n as i64) * (20 * n as i64 + 3)) * num / den * power(16, -(n as i64))
        })),
        SunHalf20k3 => series1024(h + 1),
        Long6n1 => series256(h + 1),
        Diag256 => eval_f(WzPair::Pair256, p - 1, p - 1),
        Jacobsthal => {
            let Some(Instance::Jacobsthal { a, b, r: rr, s }) = inst else {
                panic!("jacobsthal needs an (a, b, r, s) instance")
            };
            let big = |x: u64, e: u32| (x * p.pow(e)) as i64;
            c(big(a, rr), big(b, s)) / c(big(a, rr - 1), big(b, s - 1))
        }
        SunFourPower => sum((1..=h as i64).map(|k| power(4, k) / (r(k * (2 * k - 1)) * c(2 * k, k)))),
        HalfG256 => g_sum(WzPair::Pair256, p, 1..=h),
        SunKBinom => {
            let Some(Instance::K(k)) = inst else { panic!("sun-kbinom needs a k instance") };
            let k = k as i64;
            r(k) * c(2 * k, k) * c(2 * pi - 2 * k, pi - k)
        }
        MidG256 => eval_g(WzPair::Pair256, p, (p + 1) / 2),
        HalfHarmonic => ctx.harmonic(h).clone(),
        HalfHarmonic2 => ctx.harmonic2(h).clone(),
        SunOddSum1 => sum((0..h as i64).map(|k| c(2 * k, k) / (r(2 * k + 1) * power(4, k)))),
        SunOddSum2 => sum((0..h as i64).map(|k| c(2 * k, k) / (r((2 * k + 1).pow(2)) * power(4, k)))),
        Morley => c(pi - 1, h as i64),
        UpperG256 => g_sum(WzPair::Pair256, p, (p + 3) / 2..=p - 1),
        H2kHk => sum((1..h).map(|k| {
            let hk = ctx.harmonic(k);
            let h2k = ctx.harmonic(2 * k);
            let k = k as i64;
            r(sign(k)) * c(h as i64, k) * (r(2) * h2k - hk) / r(2 * k + 1)
        })),
        Diag1024 => eval_f(WzPair::Pair1024, p - 1, p - 1),
        HalfG1024 => g_sum(WzPair::Pair1024, p, 1..=h),
        MidG1024 => eval_g(WzPair::Pair1024, p, (p + 1) / 2),
        UpperG1024 => g_sum(WzPair::Pair1024, p, (p + 3) / 2..=p - 1),
        HuMaoH | HuMaoH2k | Telescope(_) | Boundary(_) => {
            panic!("{kind:?} is indexed by n, not by a prime")
        }
    }
}

/// `sum_{k=1}^n C(2k,k) / (k 4^k)`
fn central_tail(n: u64) -> ExactRational {
    sum((1..=n as i64).map(|k| c(2 * k, k) / (r(k) * power(4, k))))
}

/// Both sides of the two exact binomial-transform identities at `n`.
/// `harmonics` must reach `H_{2n}`.
pub(crate) fn identity_sides(
    kind: ClaimKind,
    n: u64,
    harmonics: &[HarmonicPair],
) -> (ExactRational, ExactRational) {
    let ni = n as i64;
    let prefactor = -power(4, ni) / (r(2 * ni + 1) * c(2 * ni, ni));
    let tail = central_tail(n);
    match kind {
        ClaimKind::HuMaoH => {
            let lhs = sum((1..=ni).map(|k| {
                r(sign(k)) * c(ni, k) * &harmonics[k as usize].h1 / r(2 * k + 1)
            }));
            (lhs, prefactor * tail)
        }
        ClaimKind::HuMaoH2k => {
            let lhs = sum((1..=ni).map(|k| {
                r(sign(k)) * c(ni, k) * &harmonics[2 * k as usize].h1 / r(2 * k + 1)
            }));
            let inner = (&harmonics[n as usize].h1 + tail) / r(2);
            (lhs, prefactor * inner)
        }
        _ => panic!("{kind:?} is not a binomial-transform identity"),
    }
}

