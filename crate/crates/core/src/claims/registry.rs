use std::fmt;

use serde::Serialize;

use crate::wz::WzPair;

/// Which primes (or integers) a claim is stated for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PrimeDomain {
    /// primes `p > 3`
    AboveThree,
    /// odd primes
    Odd,
    /// every integer `n >= 1` (or `n >= 0` for telescoping rows); exact identities
    AllN,
}

impl PrimeDomain {
    pub fn admits_prime(self, p: u64) -> bool {
        match self {
            PrimeDomain::AboveThree => p > 3,
            PrimeDomain::Odd => p > 2,
            PrimeDomain::AllN => false,
        }
    }
}

impl fmt::Display for PrimeDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PrimeDomain::AboveThree => "p>3",
            PrimeDomain::Odd => "p odd",
            PrimeDomain::AllN => "all n",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClaimKind {
    Thm256,
    Thm1024,
    VanHamme,
    WolstenholmeH1,
    WolstenholmeH2,
    CentralBinomial2p1p,
    ChenXieHe,
    Sun4k1,
    GuoLiu,
    Zudilin,
    SunHalf20k3,
    Long6n1,
    Diag256,
    Jacobsthal,
    SunFourPower,
    HalfG256,
    SunKBinom,
    MidG256,
    HalfHarmonic,
    HalfHarmonic2,
    SunOddSum1,
    SunOddSum2,
    HuMaoH,
    HuMaoH2k,
    Morley,
    UpperG256,
    H2kHk,
    Diag1024,
    HalfG1024,
    MidG1024,
    UpperG1024,
    Telescope(WzPair),
    Boundary(WzPair),
}

/// One registered statement. Congruence claims read `lhs ≡ rhs (mod p^k)`
/// with `k = modulus_exponent`; `modulus_exponent == 0` marks an exact
/// identity indexed by an integer `n` instead of a prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub id: &'static str,
    pub kind: ClaimKind,
    pub domain: PrimeDomain,
    pub modulus_exponent: u32,
    pub statement: &'static str,
    pub source: &'static str,
    /// Valuation of the coefficient of `E_{p-3}` on the right-hand side.
    pub euler_weight: Option<u32>,
}

impl Claim {
    pub fn is_identity(&self) -> bool {
        self.modulus_exponent == 0
    }
}

macro_rules! claim {
    ($id:literal, $kind:expr, $domain:ident, $k:literal, $euler:expr, $source:literal, $statement:literal) => {
        Claim {
            id: $id,
            kind: $kind,
            domain: PrimeDomain::$domain,
            modulus_exponent: $k,
            statement: $statement,
            source: $source,
            euler_weight: $euler,
        }
    };
}

/// The full registry, in a fixed order.
pub fn registry() -> Vec<Claim> {
    use ClaimKind::*;
    vec![
        claim!("thm1", Thm256, AboveThree, 4, Some(3),
            "main result, 256^n series",
            "sum_{n=0}^{p-1} (6n+1) C(2n,n)^3 / 256^n ≡ p(-1)^((p-1)/2) - p^3 E_{p-3} (mod p^4)"),
        claim!("thm2", Thm1024, Odd, 4, Some(3),
            "main result, (-2^10)^n series",
            "sum_{n=0}^{p-1} (20n+3) (4n)!/n!^4 / (-1024)^n ≡ 3p(-1)^((p-1)/2) + 3p^3 E_{p-3} (mod p^4)"),
        claim!("vanhamme-4k1", VanHamme, Odd, 3, None,
            "van Hamme, proved by Zudilin",
            "sum_{k=0}^{(p-1)/2} (4k+1) (-1)^k ((1/2)_k / k!)^3 ≡ (-1)^((p-1)/2) p (mod p^3)"),
        claim!("wolstenholme-h1", WolstenholmeH1, AboveThree, 2, None,
            "Wolstenholme",
            "H_{p-1} ≡ 0 (mod p^2)"),
        claim!("wolstenholme-h2", WolstenholmeH2, AboveThree, 1, None,
            "Wolstenholme",
            "H_{p-1}^(2) ≡ 0 (mod p)"),
        claim!("binom-2p1p", CentralBinomial2p1p, AboveThree, 3, None,
            "Wolstenholme, binomial form",
            "C(2p-1, p-1) ≡ 1 (mod p^3)"),
        claim!("cxh-3k1", ChenXieHe, AboveThree, 4, Some(3),
            "Chen-Xie-He",
            "sum_{k=0}^{p-1} (3k+1) C(2k,k)^3 / (-8)^k ≡ p(-1)^((p-1)/2) + p^3 E_{p-3} (mod p^4)"),
        claim!("sun-4k1", Sun4k1, AboveThree, 4, Some(3),
            "Z.-W. Sun, (-64)^k series",
            "sum_{k=0}^{p-1} (4k+1) C(2k,k)^3 / (-64)^k ≡ (-1)^((p-1)/2) p + p^3 E_{p-3} (mod p^4)"),
        claim!("guoliu", GuoLiu, AboveThree, 4, Some(3),
            "Guo-Liu",
            "sum_{k=0}^{(p+1)/2} (-1)^k (4k-1) (-1/2)_k^3 / (1)_k^3 ≡ p(-1)^((p+1)/2) + p^3 (2 - E_{p-3}) (mod p^4)"),
        claim!("zudilin-20n3", Zudilin, Odd, 3, None,
            "Zudilin, 20n+3 series",
            "sum_{n=0}^{p-1} (-1)^n (1/2)_n (1/2)_{2n} / n!^3 * (20n+3) / 2^{4n} ≡ 3p(-1)^((p-1)/2) (mod p^3)"),
        claim!("sun-ijm-20k3", SunHalf20k3, AboveThree, 4, None,
            "Z.-W. Sun, half-range 20k+3 series",
            "sum_{k=0}^{(p-1)/2} (20k+3) (4k)!/k!^4 / (-1024)^k ≡ p(-1)^((p-1)/2) (2^{p-1} + 2 - (2^{p-1} - 1)^2) (mod p^4)"),
        claim!("long-6n1", Long6n1, AboveThree, 4, None,
            "Long, half-range 6n+1 series",
            "sum_{n=0}^{(p-1)/2} (6n+1) C(2n,n)^3 / 256^n ≡ p(-1)^((p-1)/2) (mod p^4)"),
        claim!("lemma21-Fdiag", Diag256, AboveThree, 4, None,
            "256 pair, diagonal term",
            "F(p-1, p-1) ≡ -3p^2 - 12p^3 + 18p^3 q_p(2) (mod p^4)"),
        claim!("jacobsthal", Jacobsthal, AboveThree, 3, None,
            "Jacobsthal",
            "C(a p^r, b p^s) / C(a p^(r-1), b p^(s-1)) ≡ 1 (mod p^(r+s+min(r,s))), 1 <= b < a <= 6, r, s in {1, 2}"),
        claim!("lemma22-sunimp", SunFourPower, AboveThree, 1, Some(0),
            "Z.-W. Sun, 4^k sum",
            "sum_{k=1}^{(p-1)/2} 4^k / (k (2k-1) C(2k,k)) ≡ 2 E_{p-3} (mod p)"),
        claim!("lemma23-Ghalf", HalfG256, AboveThree, 4, Some(3),
            "256 pair, lower half of the G(p,k) sum",
            "sum_{k=1}^{(p-1)/2} G(p, k) ≡ -p^3 E_{p-3} (mod p^4)"),
        claim!("sun-kbinom", SunKBinom, Odd, 2, None,
            "Z.-W. Sun, k C(2k,k) C(2(p-k),p-k)",
            "k C(2k,k) C(2(p-k), p-k) ≡ (-1)^(floor(2k/p) - 1) 2p (mod p^2), 1 <= k <= p-1"),
        claim!("lemma24-Gmid", MidG256, AboveThree, 4, None,
            "256 pair, middle term G(p,(p+1)/2)",
            "G(p, (p+1)/2) ≡ (-1)^((p-1)/2) p (1 - 3p q_p(2) + 6p^2 q_p(2)^2) (mod p^4)"),
        claim!("zhsun-h", HalfHarmonic, AboveThree, 2, None,
            "Z.-H. Sun, H_{(p-1)/2}",
            "H_{(p-1)/2} ≡ -2 q_p(2) + p q_p(2)^2 (mod p^2)"),
        claim!("zhsun-h2", HalfHarmonic2, AboveThree, 1, None,
            "Z.-H. Sun, H^(2)_{(p-1)/2}",
            "H_{(p-1)/2}^(2) ≡ 0 (mod p)"),
        claim!("lemma25a", SunOddSum1, AboveThree, 2, None,
            "Z.-W. Sun, C(2k,k)/((2k+1) 4^k) sum",
            "sum_{k=0}^{(p-3)/2} C(2k,k) / ((2k+1) 4^k) ≡ -(-1)^((p-1)/2) q_p(2) (mod p^2)"),
        claim!("lemma25b", SunOddSum2, AboveThree, 1, None,
            "Z.-W. Sun, C(2k,k)/((2k+1)^2 4^k) sum",
            "sum_{k=0}^{(p-3)/2} C(2k,k) / ((2k+1)^2 4^k) ≡ -(-1)^((p-1)/2) q_p(2)^2 / 2 (mod p)"),
        claim!("lemma26a", HuMaoH, AllN, 0, None,
            "Hu-Mao identity with H_k",
            "sum_{k=1}^n (-1)^k C(n,k) H_k / (2k+1) = -4^n / ((2n+1) C(2n,n)) sum_{k=1}^n C(2k,k) / (k 4^k)"),
        claim!("lemma26b", HuMaoH2k, AllN, 0, None,
            "Hu-Mao identity with H_{2k}",
            "sum_{k=1}^n (-1)^k C(n,k) H_{2k} / (2k+1) = -4^n / ((2n+1) C(2n,n)) (H_n/2 + 1/2 sum_{k=1}^n C(2k,k) / (k 4^k))"),
        claim!("lemma27-morley", Morley, AboveThree, 3, None,
            "Morley",
            "C(p-1, (p-1)/2) ≡ (-1)^((p-1)/2) 4^{p-1} (mod p^3)"),
        claim!("lemma28-Gupper", UpperG256, AboveThree, 4, None,
            "256 pair, upper part of the G(p,k) sum",
            "sum_{k=(p+3)/2}^{p-1} G(p, k) ≡ 3p^2 (1 + 4p - 6p q_p(2)) + (-1)^((p-1)/2) 3p^2 q_p(2) (1 - 2p q_p(2)) (mod p^4)"),
        claim!("h2khk", H2kHk, AboveThree, 1, None,
            "binomial transform of 2H_{2k} - H_k",
            "sum_{k=1}^{(p-3)/2} (-1)^k C((p-1)/2, k) (2H_{2k} - H_k) / (2k+1) ≡ -2 (-1)^((p-1)/2) q_p(2)^2 (mod p)"),
        claim!("lemma31-Fdiag", Diag1024, AboveThree, 4, None,
            "1024 pair, diagonal term",
            "F(p-1, p-1) ≡ 15p^2 (-1 - 6p + 8p q_p(2)) (mod p^4)"),
        claim!("lemma32-Ghalf", HalfG1024, AboveThree, 4, Some(3),
            "1024 pair, lower half of the G(p,k) sum",
            "sum_{k=1}^{(p-1)/2} G(p, k) ≡ 3p^3 E_{p-3} (mod p^4)"),
        claim!("lemma33-Gmid", MidG1024, AboveThree, 4, None,
            "1024 pair, middle term G(p,(p+1)/2)",
            "G(p, (p+1)/2) ≡ (-1)^((p-1)/2) 3p (1 - 5p q_p(2) + 15p^2 q_p(2)^2) (mod p^4)"),
        claim!("lemma34-Gupper", UpperG1024, AboveThree, 4, None,
            "1024 pair, upper part of the G(p,k) sum",
            "sum_{k=(p+3)/2}^{p-1} G(p, k) ≡ 15p^2 (1 + 6p - 8p q_p(2)) + (-1)^((p-1)/2) 15p^2 (q_p(2) - 3p q_p(2)^2) (mod p^4)"),
        claim!("wz256-telescope", Telescope(WzPair::Pair256), AllN, 0, None,
            "256 pair, WZ relation",
            "F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k) for every 1 <= k <= grid (row n)"),
        claim!("wz1024-telescope", Telescope(WzPair::Pair1024), AllN, 0, None,
            "1024 pair, WZ relation",
            "F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k) for every 1 <= k <= grid (row n)"),
        claim!("wz256-boundary", Boundary(WzPair::Pair256), AllN, 0, None,
            "256 pair, summed WZ relation",
            "sum_{m<n} F(m,0) = F(n-1,n-1) + sum_{k=1}^{n-1} G(n,k)"),
        claim!("wz1024-boundary", Boundary(WzPair::Pair1024), AllN, 0, None,
            "1024 pair, summed WZ relation",
            "sum_{m<n} F(m,0) = F(n-1,n-1) + sum_{k=1}^{n-1} G(n,k)"),
    ]
}

pub fn find_claim(id: &str) -> Option<Claim> {
    registry().into_iter().find(|c| c.id == id)
}
