//! Acceptance gate. Prints one PASS/FAIL line per criterion; runtime limits
//! are pinned next to each criterion.
//!
//! Every expected value is recomputed here by routes that share no code with
//! the library: brute-force discrete logs, supports shifted by `(p-1)/4`
//! instead of by the inverse of 4, O(N²) autocorrelation, `2^{-i}` taken as
//! `2^{N-i}`, and GF(2) elimination for minimal LFSRs.
//!
//! Criteria listed in `UNATTAINABLE` are checked exactly as stated and are
//! expected to print FAIL; the process exits non-zero if the set of failing
//! criteria differs from that list in either direction.

use std::cell::Cell;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use adicseq::complexity::{
    correlation_identity_sides, gauss_sum, linear_complexity, product_lhs, two_adic_complexity,
    verify_gauss_square,
};
use adicseq::numtheory::{admissible_primes, build_params, is_admissible_prime};
use adicseq::{construct_u, resolve_y_sign, spectrum, BVector, BinarySequence, Sign};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Stated criteria that cannot hold, with the reason printed under them.
const UNATTAINABLE: &[(&str, &str)] = &[
    (
        "4",
        "the printed tau1=3 rows give C(tau) != C(N-tau) although -1 is a square mod p, \
         so no binary sequence can match them for any y",
    ),
    (
        "7",
        "the printed right-hand sides carry 2^p(2^{2p}-1)yG; the value computed from the bits \
         needs 2^p(2^{2p}+1)yG with the opposite sign, and fails for both signs of y otherwise",
    ),
];

mod oracle {
    use super::*;

    pub fn is_prime(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    pub fn admissible(p: u64) -> bool {
        if !is_prime(p) || p < 5 || !(p - 1).is_multiple_of(4) || ((p - 1) / 4).is_multiple_of(2) {
            return false;
        }
        (0..p).any(|x| x * x == p - 4)
    }

    pub fn primes_upto(max: u64) -> Vec<u64> {
        (2..=max).filter(|&p| admissible(p)).collect()
    }

    /// Smallest element whose powers hit every nonzero residue.
    pub fn primitive_root(p: u64) -> u64 {
        (2..p)
            .find(|&g| {
                let mut seen = vec![false; p as usize];
                let mut v = 1;
                for _ in 0..p - 1 {
                    seen[v as usize] = true;
                    v = v * g % p;
                }
                seen[1..].iter().all(|&s| s)
            })
            .expect("prime has a primitive root")
    }

    /// Discrete log mod 4 for each nonzero residue.
    pub fn class_index(p: u64) -> Vec<Option<usize>> {
        let g = primitive_root(p);
        let mut idx = vec![None; p as usize];
        let mut v = 1u64;
        for k in 0..(p - 1) as usize {
            idx[v as usize] = Some(k % 4);
            v = v * g % p;
        }
        idx
    }

    /// Euler's criterion.
    pub fn legendre(i: u64, p: u64) -> i64 {
        let mut r = 1u64;
        for _ in 0..(p - 1) / 2 {
            r = r * (i % p) % p;
        }
        match r {
            0 => 0,
            1 => 1,
            _ => -1,
        }
    }

    /// The interleaved sequence, from supports: column j is the support of
    /// its base sequence moved by `+j(p-1)/4`, then complemented if `b_j`.
    pub fn u_bits(p: u64, b: [bool; 4]) -> Vec<bool> {
        let idx = class_index(p);
        let f = (p - 1) / 4;
        let classes: [[usize; 2]; 4] = [[1, 2], [0, 3], [0, 1], [0, 1]];
        let mut u = vec![false; 4 * p as usize];
        for (j, cls) in classes.iter().enumerate() {
            for i in 0..p {
                let src = (i + p * 4 - j as u64 * f) % p;
                let inside = idx[src as usize].is_some_and(|c| cls.contains(&c));
                u[4 * i as usize + j] = inside ^ b[j];
            }
        }
        u
    }

    pub fn u2(bits: &[bool]) -> BigUint {
        bits.iter().rev().fold(BigUint::zero(), |acc, &b| (acc << 1u8) + (b as u8))
    }

    pub fn mersenne(n: usize) -> BigUint {
        BigUint::from(2u8).pow(n as u32) - 1u8
    }

    /// `Σ (-1)^{s_i} 2^{(N-i) mod N} mod 2^N - 1`.
    pub fn t_inv2(bits: &[bool]) -> BigUint {
        let n = bits.len();
        let m = BigInt::from(mersenne(n));
        let mut acc = BigInt::zero();
        for (i, &b) in bits.iter().enumerate() {
            let term = BigInt::from(2u8).pow(((n - i) % n) as u32);
            if b {
                acc -= term;
            } else {
                acc += term;
            }
        }
        acc.mod_floor(&m).magnitude().clone()
    }

    pub fn autocorr(bits: &[bool]) -> Vec<i64> {
        let n = bits.len();
        (0..n)
            .map(|t| {
                (0..n)
                    .map(|i| if bits[i] == bits[(i + t) % n] { 1 } else { -1 })
                    .sum()
            })
            .collect()
    }

    /// The nine-case table for the `b = 0000` sequence. With `printed`, the
    /// tau1 = 3 rows carry the signs as usually printed; otherwise they
    /// mirror the tau1 = 1 rows.
    pub fn table(p: u64, y: i64, printed: bool) -> Vec<i64> {
        let idx = class_index(p);
        let d = (1..p).find(|d| 4 * d % p == 1).unwrap();
        let three = if printed { -1 } else { 1 };
        (0..4 * p)
            .map(|tau| {
                if tau == 0 {
                    return 4 * p as i64;
                }
                let (t1, t2) = (tau % 4, tau / 4);
                let r = (t2 + t1 * d) % p;
                let square = idx[r as usize].is_some_and(|c| c % 2 == 0);
                let sq = if square { 1 } else { -1 };
                match (t1, r) {
                    (0, _) => -4,
                    (_, 0) if t1 != 2 => 4,
                    (2, 0) => 4,
                    (2, _) => 0,
                    (1, _) => 4 * y * sq,
                    _ => 4 * y * sq * three,
                }
            })
            .collect()
    }

    pub fn gauss(p: u64) -> BigInt {
        (1..p)
            .map(|i| BigInt::from(legendre(i, p)) * BigInt::from(2u8).pow(4 * i as u32))
            .sum()
    }

    /// Closed forms for `U(2)·T(1/2) mod 2^{4p}-1`. `printed` selects the
    /// commonly quoted right-hand sides; otherwise the forms that follow
    /// from the table with mirrored tau1 = 3 rows.
    pub fn product_rhs(p: u64, alternating: bool, y: i64, printed: bool) -> BigUint {
        let two = BigInt::from(2u8);
        let pp = p as u32;
        let m = BigInt::from(mersenne(4 * p as usize));
        let s = &m / 15u8;
        let a = two.pow(2 * pp) + 1u8;
        let a_minus = two.pow(2 * pp) - 1u8;
        let big_p = two.pow(pp);
        let yg = gauss(p) * y;
        let pv = BigInt::from(p);
        let inner: BigInt = match (alternating, printed) {
            (true, true) => &s + &a * (&big_p - 1u8) - &big_p * &a_minus * &yg - &pv,
            (false, true) => &s - &a * (&big_p + 1u8) + &big_p * &a_minus * &yg - &pv,
            (true, false) => &s + &a * (&big_p - 1u8) + &big_p * &a * &yg - &pv,
            (false, false) => &s - &a * (&big_p + 1u8) - &big_p * &a * &yg - &pv,
        };
        (inner * 2u8).mod_floor(&m).magnitude().clone()
    }

    /// Whether some order-`l` recurrence generates the periodic sequence,
    /// decided by GF(2) elimination over the tap vector.
    pub fn recurrence_exists(s: &[bool], l: usize) -> bool {
        let n = s.len();
        let at = |i: usize| s[i % n];
        let mut rows: Vec<u64> = (l..l + n)
            .map(|i| {
                let mut r = (at(i) as u64) << l;
                for k in 1..=l {
                    r |= (at(i - k) as u64) << (k - 1);
                }
                r
            })
            .collect();
        let mut rank = 0;
        for col in 0..l {
            let Some(piv) = (rank..rows.len()).find(|&r| rows[r] >> col & 1 == 1) else {
                continue;
            };
            rows.swap(rank, piv);
            let pr = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && *row >> col & 1 == 1 {
                    *row ^= pr;
                }
            }
            rank += 1;
        }
        rows.iter().all(|&r| r != 1 << l)
    }

    /// Same question, by trying all `2^l` tap vectors.
    pub fn recurrence_exists_enum(s: &[bool], l: usize) -> bool {
        let n = s.len();
        let at = |i: usize| s[i % n];
        (0u64..1 << l).any(|taps| {
            (l..l + n).all(|i| {
                let fb = (1..=l).fold(false, |acc, k| acc ^ (taps >> (k - 1) & 1 == 1 && at(i - k)));
                fb == at(i)
            })
        })
    }

    pub fn min_lfsr(s: &[bool]) -> usize {
        (0..=s.len())
            .find(|&l| recurrence_exists(s, l))
            .expect("order N always works")
    }
}

fn bits_of(b: BVector) -> [bool; 4] {
    [b.bit(0), b.bit(1), b.bit(2), b.bit(3)]
}

fn lib_u(p: u64, b: BVector) -> BinarySequence {
    construct_u(&build_params(p).expect("admissible"), b)
}

fn expected_gcd(p: u64, b: BVector) -> u32 {
    match (b.is_alternating(), p) {
        (true, _) => 5,
        (false, 5) => 75,
        (false, _) => 15,
    }
}

fn sweep_primes() -> Vec<u64> {
    oracle::primes_upto(500)
}

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn c1_numerals_p5() -> Verdict {
    let alt = oracle::u2(&oracle::u_bits(5, [false, true, false, true]));
    let zero = oracle::u2(&oracle::u_bits(5, [false; 4]));
    let lib_alt = adicseq::complexity::evaluate_u2(&lib_u(5, BVector::ALTERNATING));
    let lib_zero = adicseq::complexity::evaluate_u2(&lib_u(5, BVector::ZERO));
    let f = BigUint::from(1025u32);
    let r = |v: &BigUint, m: u32| (v % m).to_u32_digits().first().copied().unwrap_or(0);
    let g_total = |s: &BinarySequence| two_adic_complexity(s).gcd_total;
    let checks = [
        ("routes agree", lib_alt == alt && lib_zero == zero),
        ("U'(2)=387490", alt == BigUint::from(387_490u32)),
        ("U''(2)=1000200", zero == BigUint::from(1_000_200u32)),
        ("U' mod 25=15", r(&alt, 25) == 15),
        ("U' mod 41=40", r(&alt, 41) == 40),
        ("U'' mod 25=0", r(&zero, 25) == 0),
        ("U'' mod 41=5", r(&zero, 41) == 5),
        ("gcd(U',2^10+1)=5", alt.gcd(&f) == BigUint::from(5u8)),
        ("gcd(U'',2^10+1)=25", zero.gcd(&f) == BigUint::from(25u8)),
        (
            "gcd totals 5/75",
            g_total(&lib_u(5, BVector::ALTERNATING)) == BigUint::from(5u8)
                && g_total(&lib_u(5, BVector::ZERO)) == BigUint::from(75u8)
                && alt.gcd(&oracle::mersenne(20)) == BigUint::from(5u8)
                && zero.gcd(&oracle::mersenne(20)) == BigUint::from(75u8),
        ),
    ];
    let bad: Vec<_> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    verdict(
        bad.is_empty(),
        if bad.is_empty() {
            "all 10 numerals exact".to_string()
        } else {
            format!("mismatch: {}", bad.join(", "))
        },
    )
}

fn c2_p13() -> Verdict {
    let m = oracle::mersenne(52);
    let alt = two_adic_complexity(&lib_u(13, BVector::ALTERNATING)).gcd_total;
    let zero = two_adic_complexity(&lib_u(13, BVector::ZERO)).gcd_total;
    let o_alt = oracle::u2(&oracle::u_bits(13, [false, true, false, true])).gcd(&m);
    let o_zero = oracle::u2(&oracle::u_bits(13, [false; 4])).gcd(&m);
    let pass = alt == BigUint::from(5u8)
        && zero == BigUint::from(15u8)
        && o_alt == alt
        && o_zero == zero;
    verdict(pass, format!("gcd(U',2^52-1)={alt}, gcd(U'',2^52-1)={zero}"))
}

fn c3_theorem_sweep() -> Verdict {
    let primes = sweep_primes();
    let mut bad = Vec::new();
    for &p in &primes {
        let m = oracle::mersenne(4 * p as usize);
        for b in BVector::ALL {
            let want = BigUint::from(expected_gcd(p, b));
            let lib = two_adic_complexity(&lib_u(p, b)).gcd_total;
            let ora = oracle::u2(&oracle::u_bits(p, bits_of(b))).gcd(&m);
            if lib != want || ora != want {
                bad.push(format!("p={p} b={b}: {lib}/{ora}"));
            }
        }
    }
    let lists_agree = admissible_primes(500) == primes;
    let rejects_317 = !is_admissible_prime(317) && !oracle::admissible(317);
    verdict(
        bad.is_empty() && lists_agree && rejects_317,
        format!(
            "{} primes {:?} x 4 b: {} mismatches; prime lists agree: {lists_agree}; \
             317 rejected (317-4 = 313 is not a square): {rejects_317}",
            primes.len(),
            primes,
            bad.len()
        ),
    )
}

fn c4_optimality_and_table() -> Verdict {
    let primes = sweep_primes();
    let mut optimal = 0;
    let mut total = 0;
    let mut routes_agree = true;
    let mut printed_unique = 0;
    let mut mirrored_unique = 0;
    let mut lib_y_ok = true;
    for &p in &primes {
        for b in BVector::ALL {
            let lib = spectrum(&lib_u(p, b)).values;
            let ora = oracle::autocorr(&oracle::u_bits(p, bits_of(b)));
            routes_agree &= lib == ora;
            total += 1;
            if ora[1..].iter().all(|c| [-4, 0, 4].contains(c)) {
                optimal += 1;
            }
            if b == BVector::ZERO {
                let count = |printed| {
                    [1i64, -1]
                        .into_iter()
                        .filter(|&y| oracle::table(p, y, printed) == ora)
                        .collect::<Vec<_>>()
                };
                if count(true).len() == 1 {
                    printed_unique += 1;
                }
                let mirrored = count(false);
                if mirrored.len() == 1 {
                    mirrored_unique += 1;
                }
                let lib_y = resolve_y_sign(&build_params(p).unwrap()).ok().map(Sign::value);
                lib_y_ok &= mirrored.len() == 1 && lib_y == Some(mirrored[0]);
            }
        }
    }
    let optimal_ok = optimal == total && routes_agree;
    verdict(
        optimal_ok && printed_unique == primes.len(),
        format!(
            "off-peak in {{0,+-4}}: {optimal}/{total}; printed nine-case table matches for \
             exactly one y at {printed_unique}/{n} primes; with tau1=3 rows mirrored: \
             {mirrored_unique}/{n} (library y agrees: {lib_y_ok})",
            n = primes.len()
        ),
    )
}

fn c5_identity_property() -> Verdict {
    let cases = Cell::new(0usize);
    let result = runner(500).run(&prop::collection::vec(any::<bool>(), 4..=128), |bits| {
        cases.set(cases.get() + 1);
        let n = bits.len();
        let m = BigInt::from(oracle::mersenne(n));
        let u = BigInt::from(oracle::u2(&bits));
        let t = BigInt::from(oracle::t_inv2(&bits));
        let lhs = (BigInt::from(-2) * u * &t).mod_floor(&m);
        // Σ 2^i over one period is 2^N - 1, which vanishes mod 2^N - 1
        let c = oracle::autocorr(&bits);
        let rhs = c[1..]
            .iter()
            .enumerate()
            .map(|(k, &v)| BigInt::from(v) * BigInt::from(2u8).pow(k as u32 + 1))
            .fold(BigInt::from(n), |a, x| a + x)
            .mod_floor(&m);
        prop_assert_eq!(&lhs, &rhs);
        let s = BinarySequence::new(bits.clone()).unwrap();
        let (l, r) = correlation_identity_sides(&s);
        prop_assert_eq!(&l, &r);
        prop_assert_eq!(BigInt::from(l), lhs);
        Ok(())
    });
    let n = cases.get();
    match result {
        Ok(()) => verdict(n >= 500, format!("{n} random sequences, periods 4..=128, exact")),
        Err(e) => verdict(false, format!("counterexample after {n} cases: {e}")),
    }
}

fn c6_gauss_square() -> Verdict {
    let primes = sweep_primes();
    let mut bad = Vec::new();
    for &p in &primes {
        let g = oracle::gauss(p);
        let m = BigInt::from((BigUint::from(2u8).pow(2 * p as u32) + 1u8) / 5u8);
        let holds = (&g * &g).mod_floor(&m) == BigInt::from(p) % &m;
        let params = build_params(p).unwrap();
        if !holds || gauss_sum(&params) != g || !verify_gauss_square(&params).pass {
            bad.push(p);
        }
    }
    let g5 = oracle::gauss(5);
    let witness = g5 == BigInt::from(61_200) && (&g5 * &g5).mod_floor(&BigInt::from(205)) == BigInt::from(5);
    verdict(
        bad.is_empty() && witness,
        format!(
            "{} primes, failures {:?}; G(5) = {g5}, G(5)^2 mod 205 = {}",
            primes.len(),
            bad,
            (&g5 * &g5).mod_floor(&BigInt::from(205))
        ),
    )
}

fn c7_product_congruences() -> Verdict {
    let primes = oracle::primes_upto(200);
    let mut printed_hold = 0;
    let mut printed_any_y = 0;
    let mut printed_flip_breaks = 0;
    let mut mirrored_hold = 0;
    let mut mirrored_flip_breaks = 0;
    let mut routes_agree = true;
    for &p in &primes {
        let zero_bits = oracle::u_bits(p, [false; 4]);
        let c = oracle::autocorr(&zero_bits);
        let y = [1i64, -1]
            .into_iter()
            .find(|&y| oracle::table(p, y, false) == c)
            .expect("mirrored table resolves y");
        let m = oracle::mersenne(4 * p as usize);
        let lhs = |bits: &[bool]| (oracle::u2(bits) * oracle::t_inv2(bits)) % &m;
        let alt_bits = oracle::u_bits(p, [false, true, false, true]);
        let sides = [(true, lhs(&alt_bits)), (false, lhs(&zero_bits))];
        routes_agree &= sides[0].1 == product_lhs(&lib_u(p, BVector::ALTERNATING), &m)
            && sides[1].1 == product_lhs(&lib_u(p, BVector::ZERO), &m);
        let holds = |y: i64, printed: bool| {
            sides
                .iter()
                .map(|(alt, l)| *l == oracle::product_rhs(p, *alt, y, printed))
                .collect::<Vec<_>>()
        };
        let all = |v: Vec<bool>| v.iter().all(|&h| h);
        let any = |v: Vec<bool>| v.iter().any(|&h| h);
        if all(holds(y, true)) {
            printed_hold += 1;
        }
        if any(holds(y, true)) || any(holds(-y, true)) {
            printed_any_y += 1;
        }
        if !all(holds(-y, true)) {
            printed_flip_breaks += 1;
        }
        if all(holds(y, false)) {
            mirrored_hold += 1;
        }
        if !all(holds(-y, false)) {
            mirrored_flip_breaks += 1;
        }
    }
    let n = primes.len();
    verdict(
        printed_hold == n && printed_flip_breaks == n && routes_agree,
        format!(
            "printed right-hand sides hold at {printed_hold}/{n} primes \
             (either lemma, either y: {printed_any_y}/{n}); flipping y breaks {printed_flip_breaks}/{n}; \
             corrected forms hold at {mirrored_hold}/{n}, flip breaks {mirrored_flip_breaks}/{n}; \
             lhs routes agree: {routes_agree}"
        ),
    )
}

fn c8_complement() -> Verdict {
    let cases = Cell::new(0usize);
    let result = runner(100).run(&prop::collection::vec(any::<bool>(), 1..=256), |bits| {
        cases.set(cases.get() + 1);
        let s = BinarySequence::new(bits.clone()).unwrap();
        let a = two_adic_complexity(&s).gcd_total;
        let b = two_adic_complexity(&s.complement()).gcd_total;
        let flipped: Vec<bool> = bits.iter().map(|&x| !x).collect();
        let m = oracle::mersenne(bits.len());
        let oa = oracle::u2(&bits).gcd(&m);
        let ob = oracle::u2(&flipped).gcd(&m);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&oa, &ob);
        prop_assert_eq!(a, oa);
        Ok(())
    });
    let random = cases.get();
    let mut constructed = 0;
    let mut bad = Vec::new();
    for p in sweep_primes() {
        for b in BVector::ALL {
            let u = lib_u(p, b);
            constructed += 1;
            if two_adic_complexity(&u).gcd_total != two_adic_complexity(&u.complement()).gcd_total
            {
                bad.push(format!("p={p} b={b}"));
            }
        }
    }
    let ok = result.is_ok() && random >= 100 && bad.is_empty();
    verdict(
        ok,
        match result {
            Ok(()) => format!("{random} random + {constructed} constructed, mismatches {bad:?}"),
            Err(e) => format!("counterexample: {e}"),
        },
    )
}

fn c9_berlekamp_massey() -> Verdict {
    let mut rng = StdRng::seed_from_u64(0x5eed_1fb5);
    let mut bad = Vec::new();
    let mut enumerated = 0;
    for _ in 0..64 {
        let n = rng.gen_range(1..=32);
        let bits: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
        let oracle_l = oracle::min_lfsr(&bits);
        let mut ok = linear_complexity(&BinarySequence::new(bits.clone()).unwrap()) == oracle_l;
        if n <= 12 {
            enumerated += 1;
            let by_enum = (0..=n)
                .find(|&l| oracle::recurrence_exists_enum(&bits, l))
                .unwrap();
            ok &= by_enum == oracle_l;
        }
        if !ok {
            bad.push(bits.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>());
        }
    }
    verdict(
        bad.is_empty(),
        format!("64 random sequences, periods 1..=32 ({enumerated} also by full tap enumeration); mismatches {bad:?}"),
    )
}

struct Criterion {
    id: &'static str,
    name: &'static str,
    limit: Duration,
    run: fn() -> Verdict,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: "1", name: "numerals at p=5", limit: secs(1), run: c1_numerals_p5 },
    Criterion { id: "2", name: "gcds at p=13", limit: secs(1), run: c2_p13 },
    Criterion { id: "3", name: "gcd sweep p<=500, all b", limit: secs(60), run: c3_theorem_sweep },
    Criterion { id: "4", name: "optimality and nine-case table", limit: secs(120), run: c4_optimality_and_table },
    Criterion { id: "5", name: "correlation identity at x=2", limit: secs(10), run: c5_identity_property },
    Criterion { id: "6", name: "Gauss-sum square", limit: secs(60), run: c6_gauss_square },
    Criterion { id: "7", name: "U(2)T(1/2) closed forms p<=200", limit: secs(60), run: c7_product_congruences },
    Criterion { id: "8", name: "complement invariance", limit: secs(60), run: c8_complement },
    Criterion { id: "9", name: "Berlekamp-Massey vs minimal LFSR", limit: secs(60), run: c9_berlekamp_massey },
];

fn main() -> ExitCode {
    println!("acceptance: {} criteria", CRITERIA.len());
    let mut failed = Vec::new();
    for c in CRITERIA {
        let start = Instant::now();
        let v = (c.run)();
        let elapsed = start.elapsed();
        let in_time = elapsed <= c.limit;
        let pass = v.pass && in_time;
        println!(
            "{} [{}] {}: {} ({:.3}s, limit {}s{})",
            if pass { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            v.detail,
            elapsed.as_secs_f64(),
            c.limit.as_secs(),
            if in_time { "" } else { ", over limit" }
        );
        if !pass {
            if let Some((_, why)) = UNATTAINABLE.iter().find(|(id, _)| *id == c.id) {
                println!("       unattainable as stated: {why}");
            }
            failed.push(c.id);
        }
    }
    let expected: Vec<&str> = UNATTAINABLE.iter().map(|(id, _)| *id).collect();
    println!(
        "acceptance: {} passed, {} failed {:?}",
        CRITERIA.len() - failed.len(),
        failed.len(),
        failed
    );
    if failed == expected {
        println!("acceptance: failures match the recorded unattainable set {expected:?}");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected outcome, recorded unattainable set is {expected:?}");
        ExitCode::FAILURE
    }
}
