//! Integer factorization sized for spanning-tree counts: trial division
//! through 10⁶ catches everything the Aztec-diamond totals actually contain
//! (that smallness being the point of the cyclotomic analysis), with a
//! Pollard-rho fallback and Miller–Rabin certification so arbitrary inputs
//! still factor correctly.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A complete prime factorization, primes ascending.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    pub factors: Vec<(BigInt, u32)>,
    /// True when some factor's primality rests on a strong probable-prime
    /// test only (the factor is ≥ 2⁶⁴, beyond the deterministic base set).
    pub probable: bool,
}

impl Factorization {
    /// Multiply the factorization back out.
    pub fn value(&self) -> BigInt {
        self.factors
            .iter()
            .fold(BigInt::one(), |acc, (p, e)| acc * p.pow(*e))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" * "))?;
        if self.probable {
            write!(f, " (probable)")?;
        }
        Ok(())
    }
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Miller–Rabin bases: deterministic for all n < 2⁶⁴ (a classical result;
/// the first twelve primes suffice).
const MR_BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Strong probable-prime test over all [`MR_BASES`]. Deterministic below
/// 2⁶⁴; a strong probable-prime verdict above.
pub fn is_probable_prime(n: &BigInt) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    for b in MR_BASES {
        let b = BigInt::from(b);
        if *n == b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    // n − 1 = d · 2^s with d odd
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().expect("n > 2 is odd here");
    let d = &n_minus_1 >> s;
    'bases: for b in MR_BASES {
        let mut x = BigInt::from(b).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigInt::from(2), n);
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Whether a primality verdict for this magnitude is certified
/// (deterministic bases) or merely probable.
fn is_certified_range(n: &BigInt) -> bool {
    n.to_u64().is_some()
}

/// Pollard's rho (Floyd cycle variant) with a deterministic sweep over the
/// polynomial offset; input must be composite with no factors ≤ 10⁶.
fn pollard_rho(n: &BigInt) -> BigInt {
    for c in 1u64.. {
        let c = BigInt::from(c);
        let step = |x: &BigInt| (x * x + &c) % n;
        let mut x = BigInt::from(2);
        let mut y = x.clone();
        loop {
            x = step(&x);
            y = step(&step(&y));
            let d = (&x - &y).abs().gcd(n);
            if !d.is_one() {
                if d != *n {
                    return d;
                }
                break; // degenerate cycle: try the next offset
            }
        }
    }
    unreachable!("offset sweep always terminates on composite input")
}

fn factor_hard(n: BigInt, out: &mut BTreeMap<BigInt, u32>, probable: &mut bool) {
    debug_assert!(n > BigInt::one());
    if is_probable_prime(&n) {
        if !is_certified_range(&n) {
            *probable = true;
        }
        *out.entry(n).or_insert(0) += 1;
        return;
    }
    let d = pollard_rho(&n);
    let q = &n / &d;
    factor_hard(d, out, probable);
    factor_hard(q, out, probable);
}

/// Factor n ≥ 1 completely. The result's `probable` flag is set only when a
/// factor beyond 2⁶⁴ resisted certification.
pub fn factor_integer(n: &BigInt) -> Factorization {
    assert!(n.is_positive(), "factor_integer requires n >= 1");
    let mut rest = n.clone();
    let mut out: BTreeMap<BigInt, u32> = BTreeMap::new();
    let mut probable = false;

    let mut d = 2u64;
    while d <= TRIAL_LIMIT && !rest.is_one() {
        let db = BigInt::from(d);
        if (&db * &db) > rest {
            // the remainder is prime
            *out.entry(std::mem::take(&mut rest)).or_insert(0) += 1;
            rest = BigInt::one();
            break;
        }
        while (&rest % &db).is_zero() {
            rest /= &db;
            *out.entry(db.clone()).or_insert(0) += 1;
        }
        d = if d == 2 { 3 } else { d + 2 };
    }
    if !rest.is_one() {
        factor_hard(rest, &mut out, &mut probable);
    }
    Factorization { factors: out.into_iter().collect(), probable }
}
