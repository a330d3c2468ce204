//! Left-hand sides over factored residues.

use std::collections::BTreeMap;

use super::context::{jacobsthal_instances, Instance, PrimeContext, FAST_PRECISION};
use super::registry::ClaimKind;
use crate::arith::modular::{checked_prime_power, mul_mod, split_prime};
use crate::arith::{ArithError, FactoredResidue};
use crate::sequences::FactorialTable;
use crate::wz::{FastTerms, WzPair};

type Fr = FactoredResidue;
type Res = Result<Fr, ArithError>;

struct Fast<'a> {
    p: u64,
    table: &'a FactorialTable,
    terms: FastTerms<'a>,
}

impl Fast<'_> {
    fn int(&self, n: i64) -> Res {
        Fr::from_int(n, self.p, FAST_PRECISION)
    }

    fn ratio(&self, n: i64, d: i64) -> Res {
        Fr::from_ratio(n, d, self.p, FAST_PRECISION)
    }

    fn c(&self, n: i64, k: i64) -> Fr {
        self.table.binomial(n, k)
    }

    fn power(&self, base: i64, e: i64) -> Res {
        self.int(base)?.pow(e)
    }

    fn product(&self, factors: &[Fr]) -> Res {
        factors.iter().try_fold(self.int(1)?, |acc, f| acc.try_mul(f))
    }

    fn g_sum(&self, pair: WzPair, ks: std::ops::RangeInclusive<u64>) -> Res {
        sum(ks.map(|k| self.terms.eval_g(pair, self.p, k)))
    }

    /// `sum_{n < m} (6n+1) C(2n,n)^3 / 256^n`
    fn series256(&self, m: u64) -> Res {
        sum((0..m as i64).map(|n| {
            let b = self.c(2 * n, n);
            self.product(&[self.int(6 * n + 1)?, b, b, b, self.power(256, -n)?])
        }))
    }

    /// `sum_{n < m} (20n+3) C(4n,n) C(3n,n) C(2n,n) / (-1024)^n`
    fn series1024(&self, m: u64) -> Res {
        sum((0..m as i64).map(|n| {
            self.product(&[
                self.int(20 * n + 3)?,
                self.c(4 * n, n),
                self.c(3 * n, n),
                self.c(2 * n, n),
                self.power(-1024, -n)?,
            ])
        }))
    }

    /// `sum_{k < m} (a k + b) C(2k,k)^3 / base^k`
    fn cube_series(&self, m: i64, a: i64, b: i64, base: i64) -> Res {
        sum((0..m).map(|k| {
            let c = self.c(2 * k, k);
            self.product(&[self.int(a * k + b)?, c, c, c, self.power(base, -k)?])
        }))
    }
}

fn sum<I: Iterator<Item = Res>>(mut terms: I) -> Res {
    terms.try_fold(Fr::Zero, |acc, t| acc.try_add(&t?))
}

fn sign(n: i64) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

pub(crate) fn lhs(kind: ClaimKind, ctx: &PrimeContext, inst: Option<Instance>) -> Res {
    use ClaimKind::*;
    let p = ctx.p();
    let pi = p as i64;
    let h = ctx.half();
    let hi = h as i64;
    if kind == Jacobsthal {
        return jacobsthal(ctx, inst);
    }
    let table = ctx.table()?;
    let f = Fast { p, table, terms: FastTerms::new(table) };
    match kind {
        Thm256 => f.series256(p),
        Thm1024 => f.series1024(p),
        // (1/2)_k / k! = C(2k,k) / 4^k
        VanHamme => f.cube_series(hi + 1, 4, 1, -64),
        WolstenholmeH1 => Ok(ctx.fast_harmonics()?[(p - 1) as usize].0),
        WolstenholmeH2 => Ok(ctx.fast_harmonics()?[(p - 1) as usize].1),
        CentralBinomial2p1p => Ok(f.c(2 * pi - 1, pi - 1)),
        ChenXieHe => f.cube_series(pi, 3, 1, -8),
        Sun4k1 => f.cube_series(pi, 4, 1, -64),
        // (-1/2)_k / k! = -C(2k,k) / (4^k (2k-1))
        GuoLiu => sum((0..=hi + 1).map(|k| {
            let c = f.c(2 * k, k);
            let d = f.int(2 * k - 1)?;
            f.product(&[f.int(-sign(k) * (4 * k - 1))?, c, c, c, f.power(64, -k)?])?
                .try_div(&d.pow(3)?)
        })),
        // (1/2)_n (1/2)_{2n} / n!^3 = C(2n,n)^2 C(4n,2n) / 64^n
        Zudilin => sum((0..pi).map(|n| {
            let c = f.c(2 * n, n);
            f.product(&[
                f.int(sign(n) * (20 * n + 3))?,
                c,
                c,
                f.c(4 * n, 2 * n),
                f.power(2, -10 * n)?,
            ])
        })),
        SunHalf20k3 => f.series1024(h + 1),
        Long6n1 => f.series256(h + 1),
        Diag256 => f.terms.eval_f(WzPair::Pair256, p - 1, p - 1),
        SunFourPower => sum((1..=hi).map(|k| {
            f.power(4, k)?.try_div(&f.int(k * (2 * k - 1))?.try_mul(&f.c(2 * k, k))?)
        })),
        HalfG256 => f.g_sum(WzPair::Pair256, 1..=h),
        SunKBinom => {
            let Some(Instance::K(k)) = inst else { panic!("sun-kbinom needs a k instance") };
            let k = k as i64;
            f.product(&[f.int(k)?, f.c(2 * k, k), f.c(2 * pi - 2 * k, pi - k)])
        }
        MidG256 => f.terms.eval_g(WzPair::Pair256, p, (p + 1) / 2),
        HalfHarmonic => Ok(ctx.fast_harmonics()?[h as usize].0),
        HalfHarmonic2 => Ok(ctx.fast_harmonics()?[h as usize].1),
        SunOddSum1 => sum((0..hi).map(|k| {
            f.c(2 * k, k).try_mul(&f.power(4, -k)?)?.try_div(&f.int(2 * k + 1)?)
        })),
        SunOddSum2 => sum((0..hi).map(|k| {
            f.c(2 * k, k).try_mul(&f.power(4, -k)?)?.try_div(&f.int((2 * k + 1).pow(2))?)
        })),
        Morley => Ok(f.c(pi - 1, hi)),
        UpperG256 => f.g_sum(WzPair::Pair256, (p + 3) / 2..=p - 1),
        H2kHk => {
            let hs = ctx.fast_harmonics()?;
            sum((1..hi).map(|k| {
                let (hk, h2k) = (hs[k as usize].0, hs[2 * k as usize].0);
                let mix = f.int(2)?.try_mul(&h2k)?.try_sub(&hk)?;
                f.product(&[f.int(sign(k))?, f.c(hi, k), mix])?
                    .try_mul(&f.ratio(1, 2 * k + 1)?)
            }))
        }
        Diag1024 => f.terms.eval_f(WzPair::Pair1024, p - 1, p - 1),
        HalfG1024 => f.g_sum(WzPair::Pair1024, 1..=h),
        MidG1024 => f.terms.eval_g(WzPair::Pair1024, p, (p + 1) / 2),
        UpperG1024 => f.g_sum(WzPair::Pair1024, (p + 3) / 2..=p - 1),
        Jacobsthal | HuMaoH | HuMaoH2k | Telescope(_) | Boundary(_) => {
            panic!("{kind:?} has no fast prime evaluation")
        }
    }
}

/// Unit precision for the Jacobsthal factorials: as many digits as fit a
/// 64-bit modulus, between 6 and 8. The ratio involves no additions, so
/// unit precision never drops below this.
pub(crate) fn jacobsthal_precision(p: u64) -> u32 {
    (6..=8)
        .rev()
        .find(|&e| checked_prime_power(p, e).is_ok_and(|m| m <= u64::MAX as u128))
        .unwrap_or(6)
}

/// Every factorial the Jacobsthal instances at `p` touch, from one running
/// product up to `6 p^2`.
pub(crate) fn jacobsthal_factorials(p: u64) -> Result<BTreeMap<u64, Fr>, ArithError> {
    let prec = jacobsthal_precision(p);
    let m = checked_prime_power(p, prec)?;
    let mut wanted: Vec<u64> = Vec::new();
    for inst in jacobsthal_instances(p) {
        let Instance::Jacobsthal { a, b, r, s } = inst else { unreachable!() };
        for (x, y) in [(a * p.pow(r), b * p.pow(s)), (a * p.pow(r - 1), b * p.pow(s - 1))] {
            wanted.extend([x, y, x - y]);
        }
    }
    wanted.sort_unstable();
    wanted.dedup();
    let mut out = BTreeMap::new();
    let (mut v, mut unit) = (0i64, 1u128 % m);
    let mut i = 1u64;
    for w in wanted {
        while i <= w {
            let (t, u) = split_prime(i as u128, p);
            v += t as i64;
            unit = mul_mod(unit, u, m);
            i += 1;
        }
        out.insert(w, Fr::new(p, v, unit, prec)?);
    }
    Ok(out)
}

fn jacobsthal(ctx: &PrimeContext, inst: Option<Instance>) -> Res {
    let Some(Instance::Jacobsthal { a, b, r, s }) = inst else {
        panic!("jacobsthal needs an (a, b, r, s) instance")
    };
    let p = ctx.p();
    let facts = ctx.jacobsthal_factorials()?;
    let binom = |x: u64, y: u64| -> Res { facts[&x].try_div(&facts[&y].try_mul(&facts[&(x - y)])?) };
    binom(a * p.pow(r), b * p.pow(s))?.try_div(&binom(a * p.pow(r - 1), b * p.pow(s - 1))?)
}
