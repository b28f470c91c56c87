//! Exact integer utilities: Kronecker symbol, modular square roots,
//! primality, smoothness factoring, divisor sums, Korselt/Carmichael tests,
//! Fermat-number divisibility, and the sigma(n^3)-square search.
//!
//! Everything here is a pure function of its inputs and safe to call from
//! any number of threads.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Kronecker symbol (a|n), fully multiplicative in both arguments.
///
/// Rejects n = 0.
pub fn kronecker(a: &BigInt, n: &BigInt) -> Result<i32> {
    if n.is_zero() {
        return Err(Error::ZeroModulus);
    }
    let mut a = a.clone();
    let mut n = n.clone();
    let mut result = 1i32;
    if n.is_negative() {
        n = -n;
        if a.is_negative() {
            result = -result;
        }
    }
    // factor out 2s from n; (a|2) is 0 for even a, +1 for a = ±1 (mod 8), -1 otherwise
    while n.is_even() {
        n /= 2;
        if a.is_even() {
            return Ok(0);
        }
        let r = (&a % 8i32 + 8i32) % 8i32;
        let r = r.to_u32().unwrap();
        if r == 3 || r == 5 {
            result = -result;
        }
    }
    if n.is_one() {
        return Ok(result);
    }
    // Jacobi symbol on odd n > 1 by quadratic reciprocity
    a = a.mod_floor(&n);
    while !a.is_zero() {
        while a.is_even() {
            a /= 2;
            let r = (&n % 8i32).to_u32().unwrap();
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4i32).to_u32().unwrap() == 3 && (&n % 4i32).to_u32().unwrap() == 3 {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        Ok(result)
    } else {
        Ok(0)
    }
}

/// Smallest non-negative `B` with `B^2 = d (mod squared_modulus)` and
/// `B = d (mod 2)`, or `None` when no such root exists.
///
/// `squared_modulus` must be `p` or `4p`. Small moduli are scanned
/// exhaustively; large primes go through Tonelli-Shanks.
pub fn sqrt_mod(d: &BigInt, p: u64, squared_modulus: u64) -> Option<u64> {
    assert!(
        squared_modulus == p || squared_modulus == 4 * p,
        "squared_modulus must be p or 4p"
    );
    let m = squared_modulus;
    let d_mod_m = d.mod_floor(&BigInt::from(m)).to_u64().unwrap();
    let d_parity = if d.is_even() { 0 } else { 1 };

    const SCAN_LIMIT: u64 = 1 << 20;
    if p < SCAN_LIMIT {
        // candidates repeat mod m; going to 2m covers the parity adjustment
        for b in 0..=(2 * m) {
            if (b as u128 * b as u128) % m as u128 == d_mod_m as u128 && b % 2 == d_parity {
                return Some(b);
            }
        }
        return None;
    }

    // Tonelli-Shanks root mod p, then pick candidates mod m.
    let d_mod_p = d.mod_floor(&BigInt::from(p)).to_u64().unwrap();
    let r = tonelli_shanks(d_mod_p, p)?;
    let mut best: Option<u64> = None;
    let lifts = if m == p { 2 } else { 4 };
    for base in [r % p, (p - r % p) % p] {
        for k in 0..lifts {
            let b = base + k * p;
            if (b as u128 * b as u128) % m as u128 == d_mod_m as u128 && b % 2 == d_parity {
                best = Some(best.map_or(b, |x| x.min(b)));
            }
        }
    }
    best
}

fn tonelli_shanks(n: u64, p: u64) -> Option<u64> {
    if p == 2 {
        return Some(n % 2);
    }
    let n = n % p;
    if n == 0 {
        return Some(0);
    }
    if pow_mod_u64(n, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod_u64(n, (p + 1) / 4, p));
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2u64;
    while pow_mod_u64(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod_u64(z, q, p);
    let mut t = pow_mod_u64(n, q, p);
    let mut r = pow_mod_u64(n, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0u32;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod_u64(t2, t2, p);
            i += 1;
            if i == m {
                return None;
            }
        }
        let b = pow_mod_u64(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod_u64(b, b, p);
        t = mul_mod_u64(t, c, p);
        r = mul_mod_u64(r, b, p);
    }
    Some(r)
}

pub(crate) fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Primality test: deterministic Miller-Rabin below 2^64, Baillie-style
/// (base-2 strong probable prime plus strong Lucas) above. The composite
/// verdict is always exact; "prime" above 2^64 is a probable prime with no
/// known counterexample.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(n64) = n.to_u64() {
        return is_prime_u64(n64);
    }
    if n.is_even() {
        return false;
    }
    // quick trial division by a few small primes
    for &p in &[3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        if (n % p).is_zero() {
            return false;
        }
    }
    miller_rabin_big(n, &BigUint::from(2u32)) && strong_lucas(n)
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    // this witness set is deterministic for all n < 2^64
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn miller_rabin_big(n: &BigUint, a: &BigUint) -> bool {
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    let mut x = a.modpow(&d, n);
    if x == one || x == nm1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == nm1 {
            return true;
        }
    }
    false
}

/// Strong Lucas probable prime test with Selfridge's parameter choice.
fn strong_lucas(n: &BigUint) -> bool {
    let n_int = BigInt::from(n.clone());
    // find D in 5, -7, 9, -11, ... with (D|n) = -1
    let mut d = BigInt::from(5);
    loop {
        match kronecker(&d, &n_int).unwrap() {
            -1 => break,
            0 => {
                if d.magnitude() < n {
                    return false;
                }
            }
            _ => {}
        }
        d = if d.is_positive() { -(&d + 2) } else { -(&d - 2) };
        if d.magnitude() > &BigUint::from(1000u32) {
            // n is almost certainly a perfect square
            if is_perfect_square(n).is_some() {
                return false;
            }
        }
    }
    // P = 1, Q = (1 - D) / 4
    let q_int: BigInt = (BigInt::one() - &d) / 4;
    let q_mod = q_int.mod_floor(&n_int).to_biguint().unwrap();

    let np1 = n + BigUint::one();
    let s = np1.trailing_zeros().unwrap_or(0);
    let dd = &np1 >> s;

    // compute U_dd, V_dd mod n by left-to-right binary chain
    let half = |x: &BigUint| -> BigUint {
        if x.is_even() {
            x >> 1
        } else {
            (x + n) >> 1
        }
    };
    let mut u = BigUint::one();
    let mut v = BigUint::one(); // P = 1
    let mut qk = q_mod.clone();
    let bits = dd.bits();
    for i in (0..bits - 1).rev() {
        // double: U_{2k} = U V, V_{2k} = V^2 - 2 Q^k
        let u2 = (&u * &v) % n;
        let two_qk = (&qk << 1) % n;
        let v2 = ((&v * &v) % n + n - two_qk) % n;
        qk = (&qk * &qk) % n;
        u = u2;
        v = v2;
        if dd.bit(i) {
            // increment: U_{k+1} = (P U + V)/2, V_{k+1} = (D U + P V)/2
            let du = (d.mod_floor(&n_int).to_biguint().unwrap() * &u) % n;
            let new_u = half(&((&u + &v) % n));
            let new_v = half(&((du + &v) % n));
            u = new_u;
            v = new_v;
            qk = (&qk * &q_mod) % n;
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        let two_qk = (&qk << 1) % n;
        v = ((&v * &v) % n + n - two_qk) % n;
        qk = (&qk * &qk) % n;
        if v.is_zero() {
            return true;
        }
    }
    false
}

/// A nonzero rational in factored shape: an ordered map prime -> signed
/// exponent with no zero exponents. This is the codomain of the Šimerka map.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactoredRational {
    entries: BTreeMap<BigUint, i64>,
}

impl FactoredRational {
    /// The empty product, i.e. the rational 1.
    pub fn one() -> Self {
        Self::default()
    }

    pub fn is_one(&self) -> bool {
        self.entries.is_empty()
    }

    /// Merge `p^e` into the value, dropping the entry if it cancels.
    pub fn insert(&mut self, p: BigUint, e: i64) {
        if e == 0 {
            return;
        }
        debug_assert!(is_prime(&p), "FactoredRational keys must be prime: {p}");
        let slot = self.entries.entry(p).or_insert(0);
        *slot += e;
        if *slot == 0 {
            let key = self
                .entries
                .iter()
                .find(|(_, &v)| v == 0)
                .map(|(k, _)| k.clone())
                .unwrap();
            self.entries.remove(&key);
        }
    }

    pub fn from_parts<I: IntoIterator<Item = (BigUint, i64)>>(parts: I) -> Self {
        let mut out = Self::one();
        for (p, e) in parts {
            out.insert(p, e);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, &e) in &other.entries {
            out.insert(p.clone(), e);
        }
        out
    }

    pub fn invert(&self) -> Self {
        Self {
            entries: self.entries.iter().map(|(p, e)| (p.clone(), -e)).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        if k == 0 {
            return Self::one();
        }
        Self {
            entries: self
                .entries
                .iter()
                .map(|(p, e)| (p.clone(), e * k))
                .collect(),
        }
    }

    pub fn exponent_of(&self, p: &BigUint) -> i64 {
        self.entries.get(p).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BigUint, i64)> {
        self.entries.iter().map(|(p, &e)| (p, e))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn all_exponents_even(&self) -> bool {
        self.entries.values().all(|e| e % 2 == 0)
    }

    /// Halve every exponent; `None` if any exponent is odd.
    pub fn sqrt(&self) -> Option<Self> {
        if !self.all_exponents_even() {
            return None;
        }
        Some(Self {
            entries: self
                .entries
                .iter()
                .map(|(p, e)| (p.clone(), e / 2))
                .collect(),
        })
    }

    /// Numerator and denominator as coprime positive integers.
    pub fn into_ratio(&self) -> (BigUint, BigUint) {
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (p, &e) in &self.entries {
            if e > 0 {
                num *= p.pow(e as u32);
            } else {
                den *= p.pow((-e) as u32);
            }
        }
        (num, den)
    }
}

impl fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (p, e) in &self.entries {
            if !first {
                write!(f, " * ")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for FactoredRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::one());
        }
        let mut out = Self::one();
        for part in s.split('*') {
            let part = part.trim();
            let (p_str, e_str) = match part.split_once('^') {
                Some((p, e)) => (p.trim(), e.trim()),
                None => (part, "1"),
            };
            let p: BigUint = p_str
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime {p_str:?}")))?;
            let e: i64 = e_str
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent {e_str:?}")))?;
            if !is_prime(&p) {
                return Err(Error::Parse(format!("{p} is not prime")));
            }
            out.insert(p, e);
        }
        Ok(out)
    }
}

/// Partial factorization of a positive integer over a fixed prime list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothFactorization {
    /// Exponents over the given primes, all >= 1.
    pub exponents: FactoredRational,
    /// The unfactored remainder; 1 exactly when the input was smooth.
    pub cofactor: BigUint,
}

impl SmoothFactorization {
    pub fn is_smooth(&self) -> bool {
        self.cofactor.is_one()
    }

    /// Rebuild the original integer.
    pub fn reconstruct(&self) -> BigUint {
        let (num, den) = self.exponents.into_ratio();
        debug_assert!(den.is_one());
        num * &self.cofactor
    }
}

/// Divide `n` by the listed primes as often as possible.
pub fn smooth_factor(n: &BigUint, primes: &[u64]) -> SmoothFactorization {
    let mut rem = n.clone();
    let mut exps = FactoredRational::one();
    for &p in primes {
        let pb = BigUint::from(p);
        let mut e = 0i64;
        while !rem.is_zero() && (&rem % &pb).is_zero() {
            rem /= &pb;
            e += 1;
        }
        if e > 0 {
            exps.insert(pb, e);
        }
    }
    SmoothFactorization {
        exponents: exps,
        cofactor: rem,
    }
}

/// sigma(p^k) = 1 + p + ... + p^k = (p^(k+1) - 1)/(p - 1).
pub fn sigma_prime_power(p: &BigUint, k: u32) -> BigUint {
    let one = BigUint::one();
    (p.pow(k + 1) - &one) / (p - &one)
}

/// Korselt's criterion: n composite, squarefree, and (p - 1) | (n - 1) for
/// every prime p dividing n.
pub fn is_carmichael(n: u64) -> bool {
    if n < 3 || is_prime_u64(n) {
        return false;
    }
    let mut m = n;
    let mut d = 2u64;
    let mut primes = Vec::new();
    while d * d <= m {
        if m % d == 0 {
            m /= d;
            if m % d == 0 {
                return false; // not squarefree
            }
            primes.push(d);
        }
        d += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    primes.len() >= 2 && primes.iter().all(|&p| (n - 1) % (p - 1) == 0)
}

/// All Carmichael numbers strictly below `limit`, ascending.
pub fn carmichael_scan(limit: u64) -> Vec<u64> {
    (2..limit).filter(|&n| is_carmichael(n)).collect()
}

/// Default squaring budget for [`fermat_number_divisible`]: covers F_23
/// with headroom.
pub const FERMAT_STEP_BUDGET: u64 = 1 << 26;

/// Does `k` divide the Fermat number F_n = 2^(2^n) + 1? Decided by checking
/// 2^(2^n) = -1 (mod k). Errors out when 2^n exceeds the step budget.
pub fn fermat_number_divisible(k: &BigUint, n: u32) -> Result<bool> {
    fermat_number_divisible_with_budget(k, n, FERMAT_STEP_BUDGET)
}

pub fn fermat_number_divisible_with_budget(k: &BigUint, n: u32, budget: u64) -> Result<bool> {
    assert!(*k >= BigUint::from(2u32));
    if n >= 64 || (1u128 << n) > budget as u128 {
        return Err(Error::BudgetExhausted(format!(
            "F_{n} needs 2^{n} steps, budget is {budget}"
        )));
    }
    let mut x = BigUint::from(2u32) % k;
    for _ in 0..n {
        x = (&x * &x) % k;
    }
    Ok(x == k - BigUint::one())
}

/// Fermat's cube challenge: find squarefree n (products of distinct primes
/// p <= prime_bound) with sigma(n^3) a perfect square.
///
/// Builds the table of sigma(p^3) factorizations, reduces the exponent
/// vectors mod 2, and enumerates the GF(2) nullspace; every combination is
/// verified by direct computation. Ascending, n > 1 only.
pub fn sigma_cube_square_search(prime_bound: u64) -> Vec<BigUint> {
    let table = primes_upto(prime_bound);
    if table.is_empty() {
        return Vec::new();
    }
    // factor each sigma(p^3) completely; the auxiliary prime set grows as needed
    let mut aux: Vec<BigUint> = Vec::new();
    let mut rows: Vec<Vec<(usize, u32)>> = Vec::new();
    for &p in &table {
        let v = sigma_prime_power(&BigUint::from(p), 3);
        let mut row = Vec::new();
        for (q, e) in factor_completely(&v) {
            let idx = match aux.iter().position(|x| *x == q) {
                Some(i) => i,
                None => {
                    aux.push(q.clone());
                    aux.len() - 1
                }
            };
            row.push((idx, e));
        }
        rows.push(row);
    }
    // GF(2) matrix: one row per table prime, one column per auxiliary prime
    let cols = aux.len();
    let mut mat: Vec<Vec<u8>> = rows
        .iter()
        .map(|row| {
            let mut r = vec![0u8; cols];
            for &(idx, e) in row {
                r[idx] = (e % 2) as u8;
            }
            r
        })
        .collect();
    // eliminate to find the nullspace of the row span (subsets summing to zero)
    let nrows = mat.len();
    let mut combo: Vec<Vec<u8>> = (0..nrows)
        .map(|i| {
            let mut c = vec![0u8; nrows];
            c[i] = 1;
            c
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        if let Some(pivot) = (rank..nrows).find(|&r| mat[r][col] == 1) {
            mat.swap(rank, pivot);
            combo.swap(rank, pivot);
            for r in 0..nrows {
                if r != rank && mat[r][col] == 1 {
                    for c in 0..cols {
                        mat[r][c] ^= mat[rank][c];
                    }
                    for c in 0..nrows {
                        combo[r][c] ^= combo[rank][c];
                    }
                }
            }
            pivot_cols.push(col);
            rank += 1;
        }
    }
    let null_basis: Vec<&Vec<u8>> = (rank..nrows).map(|r| &combo[r]).collect();
    let dim = null_basis.len();
    let mut out = Vec::new();
    if dim == 0 || dim > 24 {
        // dim > 24 would mean billions of combinations; out of desk scale
        return out;
    }
    for mask in 1u64..(1 << dim) {
        let mut select = vec![0u8; nrows];
        for (bit, basis) in null_basis.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                for i in 0..nrows {
                    select[i] ^= basis[i];
                }
            }
        }
        let mut n = BigUint::one();
        let mut sigma = BigUint::one();
        for i in 0..nrows {
            if select[i] == 1 {
                n *= table[i];
                sigma *= sigma_prime_power(&BigUint::from(table[i]), 3);
            }
        }
        if n.is_one() {
            continue;
        }
        debug_assert!(is_perfect_square(&sigma).is_some());
        if is_perfect_square(&sigma).is_some() {
            out.push(n);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Sieve of Eratosthenes.
pub(crate) fn primes_upto(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2usize;
    while p * p <= n {
        if sieve[p] {
            let mut q = p * p;
            while q <= n {
                sieve[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    (2..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

/// Exact square root if `n` is a perfect square.
pub(crate) fn is_perfect_square(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Largest k >= 2 with n = b^k, if any.
pub(crate) fn perfect_power(n: &BigUint) -> Option<(BigUint, u32)> {
    if *n < BigUint::from(4u32) {
        return None;
    }
    let bits = n.bits() as u32;
    for k in (2..=bits).rev() {
        let root = n.nth_root(k);
        if root.pow(k) == *n {
            return Some((root, k));
        }
    }
    None
}

/// Complete factorization by trial division plus Pollard-Brent rho.
/// Intended for the modest integers this crate meets (order multiples,
/// sigma values); not a general-purpose factoring routine.
pub(crate) fn factor_completely(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut out: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut stack = vec![n.clone()];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        if let Some(m64) = m.to_u64() {
            let mut rem = m64;
            let mut d = 2u64;
            while d * d <= rem {
                while rem % d == 0 {
                    *out.entry(BigUint::from(d)).or_insert(0) += 1;
                    rem /= d;
                }
                d += 1;
            }
            if rem > 1 {
                *out.entry(BigUint::from(rem)).or_insert(0) += 1;
            }
            continue;
        }
        // strip small primes, then rho
        let mut rem = m.clone();
        for p in 2u64..=100_000 {
            if &BigUint::from(p) * &BigUint::from(p) > rem {
                break;
            }
            while (&rem % p).is_zero() {
                *out.entry(BigUint::from(p)).or_insert(0) += 1;
                rem /= p;
            }
        }
        if rem.is_one() {
            continue;
        }
        if is_prime(&rem) {
            *out.entry(rem).or_insert(0) += 1;
            continue;
        }
        if let Some((base, k)) = perfect_power(&rem) {
            for _ in 0..k {
                stack.push(base.clone());
            }
            continue;
        }
        let d = pollard_rho(&rem);
        stack.push(&rem / &d);
        stack.push(d);
    }
    out.into_iter().collect()
}

fn pollard_rho(n: &BigUint) -> BigUint {
    // Brent's variant
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if (n % &two).is_zero() {
        return two;
    }
    let mut c = BigUint::one();
    loop {
        let mut x = two.clone();
        let mut y = two.clone();
        let mut d = one.clone();
        while d.is_one() {
            x = (&x * &x + &c) % n;
            y = (&y * &y + &c) % n;
            y = (&y * &y + &c) % n;
            let diff = if x >= y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
        }
        if !d.is_one() && d != *n {
            return d;
        }
        c += 1u32;
    }
}
