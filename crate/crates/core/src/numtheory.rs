//! Arithmetic substrate: primality, primitive roots, quadratic and quartic
//! residue structure modulo an admissible prime, and big-integer helpers.
//!
//! An *admissible* prime is a prime `p = 4f + 1 = x² + 4` with `f` odd. These
//! are exactly the primes for which the period-`p` Ding-Helleseth-Lam
//! sequences exist with `y = ±1`.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m` for word-sized operands. `m` must be nonzero.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut base = base % m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin. The first twelve primes as bases are a
/// complete witness set for every `n < 3.3e24`, so all of `u64` is covered.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &q in &BASES {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Checks every admissibility condition and names the first one that fails.
pub fn check_admissible(p: u64) -> Result<()> {
    let fail = |reason: &str| {
        Err(Error::Inadmissible {
            p,
            reason: reason.to_string(),
        })
    };
    if !is_prime(p) {
        return fail("not prime");
    }
    if p % 4 != 1 {
        return fail("p is not congruent to 1 mod 4");
    }
    if ((p - 1) / 4).is_multiple_of(2) {
        return fail("f = (p-1)/4 is even");
    }
    let x = (p - 4).isqrt();
    if x * x != p - 4 {
        return fail("p - 4 is not a perfect square, so p != x^2 + 4y^2 with y = +-1");
    }
    Ok(())
}

pub fn is_admissible_prime(p: u64) -> bool {
    check_admissible(p).is_ok()
}

/// All admissible primes `p <= max_p`, ascending.
pub fn admissible_primes(max_p: u64) -> Vec<u64> {
    // p = x^2 + 4 with x odd, so only O(sqrt(max_p)) candidates.
    (1u64..)
        .step_by(2)
        .map(|x| x * x + 4)
        .take_while(|&p| p <= max_p)
        .filter(|&p| is_admissible_prime(p))
        .collect()
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2u64;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn is_generator(g: u64, p: u64, factors: &[u64]) -> bool {
    !g.is_multiple_of(p) && factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)
}

pub fn smallest_primitive_root(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime { n: p });
    }
    if p == 2 {
        return Ok(1);
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| is_generator(g, p, &factors))
        .ok_or(Error::NotPrimitiveRoot { g: 0, p })
}

/// Legendre symbol `(i / p)` in `{-1, 0, 1}`.
///
/// Evaluated with the binary Jacobi-symbol recursion (quadratic reciprocity),
/// so it is independent of Euler's criterion, which the tests use as oracle.
pub fn legendre(i: i64, p: u64) -> Result<i8> {
    if p < 3 || p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::NotOddPrime { n: p });
    }
    let mut a = i.rem_euclid(p as i64) as u64;
    let mut n = p;
    let mut sign = 1i8;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    Ok(if n == 1 { sign } else { 0 })
}

/// The four cyclotomic classes of order four, `D_j = g^j <g^4>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicClasses {
    p: u64,
    classes: [Vec<u64>; 4],
    // class index of each residue; u8::MAX for 0
    index: Vec<u8>,
}

impl CyclotomicClasses {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Elements of `D_j`, ascending.
    pub fn class(&self, j: usize) -> &[u64] {
        &self.classes[j % 4]
    }

    /// Which class `i mod p` falls in; `None` for multiples of `p`.
    pub fn class_of(&self, i: i64) -> Option<usize> {
        let r = i.rem_euclid(self.p as i64) as usize;
        match self.index[r] {
            u8::MAX => None,
            j => Some(j as usize),
        }
    }

    /// Union of two classes, ascending.
    pub fn union(&self, a: usize, b: usize) -> Vec<u64> {
        let mut v: Vec<u64> = self.class(a).iter().chain(self.class(b)).copied().collect();
        v.sort_unstable();
        v
    }
}

pub fn cyclotomic_classes(p: u64, g: u64) -> Result<CyclotomicClasses> {
    if !is_prime(p) || p % 4 != 1 {
        return Err(Error::Inadmissible {
            p,
            reason: "order-4 classes need a prime p = 1 mod 4".into(),
        });
    }
    if !is_generator(g, p, &prime_factors(p - 1)) {
        return Err(Error::NotPrimitiveRoot { g, p });
    }
    let mut classes: [Vec<u64>; 4] = Default::default();
    let mut index = vec![u8::MAX; p as usize];
    let mut h = 1u64;
    for k in 0..p - 1 {
        let j = (k % 4) as usize;
        classes[j].push(h);
        index[h as usize] = j as u8;
        h = mul_mod(h, g, p);
    }
    for c in classes.iter_mut() {
        c.sort_unstable();
    }
    Ok(CyclotomicClasses { p, classes, index })
}

/// The sign `y` in `p = x² + 4y²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Arithmetic context for one admissible prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionParams {
    pub p: u64,
    /// `(p - 1) / 4`, odd.
    pub f: u64,
    /// Positive root of `p - 4`.
    pub x: u64,
    /// Provisionally `+1` from [`build_params`]; fixed by
    /// [`crate::correlation::resolve_y_sign`].
    pub y: Sign,
    /// Smallest primitive root.
    pub g: u64,
    /// Inverse of 4 modulo `p`, in `[1, p - 1]`.
    pub d: u64,
    pub classes: CyclotomicClasses,
}

impl ConstructionParams {
    pub fn with_y(mut self, y: Sign) -> Self {
        self.y = y;
        self
    }

    /// `true` when `i` is a nonzero square mod `p` (classes `D_0`, `D_2`).
    pub fn is_even_class(&self, i: i64) -> Option<bool> {
        self.classes.class_of(i).map(|j| j % 2 == 0)
    }
}

pub fn build_params(p: u64) -> Result<ConstructionParams> {
    check_admissible(p)?;
    let f = (p - 1) / 4;
    let x = (p - 4).isqrt();
    let g = smallest_primitive_root(p)?;
    // 4 * (3f + 1) = 3p + 1
    let d = 3 * f + 1;
    debug_assert_eq!(mul_mod(4, d, p), 1);
    let classes = cyclotomic_classes(p, g)?;
    Ok(ConstructionParams {
        p,
        f,
        x,
        y: Sign::Plus,
        g,
        d,
        classes,
    })
}

pub fn big_power_mod(base: &BigUint, exponent: &BigUint, modulus: &BigUint) -> Result<BigUint> {
    if modulus.is_zero() {
        return Err(Error::ZeroModulus);
    }
    Ok(base.modpow(exponent, modulus))
}

pub fn big_gcd(a: &BigUint, b: &BigUint) -> BigUint {
    a.gcd(b)
}
