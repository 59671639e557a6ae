use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest magnitude accepted by [`factor`].
pub const FACTOR_CAP: u64 = 1_000_000_000_000_000_000;

/// Prime factorization of `|n|` by trial division, ascending primes.
pub fn factor(n: &BigInt) -> Result<Vec<(u64, u32)>> {
    if n.is_zero() {
        return Err(Error::domain("cannot factor 0"));
    }
    let mut m = n
        .magnitude()
        .to_u64()
        .filter(|&m| m <= FACTOR_CAP)
        .ok_or_else(|| Error::SizeCap(n.to_string()))?;
    let mut out = Vec::new();
    let mut push = |p: u64, m: &mut u64| {
        let mut e = 0;
        while (*m).is_multiple_of(p) {
            *m /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut m);
    push(3, &mut m);
    let mut p = 5u64;
    while p.saturating_mul(p) <= m {
        push(p, &mut m);
        push(p + 2, &mut m);
        p += 6;
    }
    if m > 1 {
        out.push((m, 1));
    }
    Ok(out)
}

/// Positive divisors of `|n|`, ascending.
pub fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let f = factor(n)?;
    let mut ds: Vec<BigInt> = vec![BigInt::one()];
    for (p, e) in f {
        let p = BigInt::from(p);
        let current = ds.clone();
        let mut pk = BigInt::one();
        for _ in 0..e {
            pk *= &p;
            ds.extend(current.iter().map(|d| d * &pk));
        }
    }
    ds.sort();
    Ok(ds)
}

/// Positive divisors of `|n|` that are perfect cubes, ascending.
pub fn cube_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let f = factor(n)?;
    let mut ds: Vec<BigInt> = vec![BigInt::one()];
    for (p, e) in f {
        let p3 = BigInt::from(p).pow(3);
        let current = ds.clone();
        let mut pk = BigInt::one();
        for _ in 0..e / 3 {
            pk *= &p3;
            ds.extend(current.iter().map(|d| d * &pk));
        }
    }
    ds.sort();
    Ok(ds)
}

/// Trial-division bound used by [`square_divisor_roots`].
const SQUARE_TRIAL_BOUND: u64 = 1_000_000;

/// All `y > 0` with `y^2 | n`, ascending.
///
/// Primes are removed by trial division until `p^3` exceeds the cofactor, which then
/// has at most two prime factors; only a perfect-square cofactor contributes. Errors
/// when that needs trial division beyond 10^6.
pub fn square_divisor_roots(n: &BigInt) -> Result<Vec<BigInt>> {
    if n.is_zero() {
        return Err(Error::domain("square divisors of 0"));
    }
    let mut rem = n.magnitude().clone();
    let mut parts: Vec<(BigInt, u32)> = Vec::new();
    let mut p = 2u64;
    loop {
        let pb = num_bigint::BigUint::from(p);
        if &pb * &pb * &pb > rem {
            break;
        }
        if p > SQUARE_TRIAL_BOUND {
            return Err(Error::SizeCap(n.to_string()));
        }
        let mut e = 0;
        while (&rem % &pb).is_zero() {
            rem /= &pb;
            e += 1;
        }
        if e >= 2 {
            parts.push((BigInt::from(p), e / 2));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let rem = BigInt::from(rem);
    if !rem.is_one() {
        if let Some(r) = is_perfect_square(&rem) {
            parts.push((r, 1));
        }
    }
    let mut ys = vec![BigInt::one()];
    for (q, e) in parts {
        let current = ys.clone();
        let mut qk = BigInt::one();
        for _ in 0..e {
            qk *= &q;
            ys.extend(current.iter().map(|d| d * &qk));
        }
    }
    ys.sort();
    Ok(ys)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `floor(sqrt(n))` for `n >= 0`.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of a negative number");
    n.sqrt()
}

/// `floor(n^(1/k))` for `n >= 0`.
pub fn iroot_floor(n: &BigInt, k: u32) -> BigInt {
    assert!(!n.is_negative());
    n.nth_root(k)
}

pub fn is_perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Integer arithmetic used by the root finder; implemented for `i128` and `BigInt`.
pub(crate) trait Int: Integer + Signed + Clone {
    fn from_big(n: &BigInt) -> Self;
}

impl Int for i128 {
    fn from_big(n: &BigInt) -> Self {
        n.to_i128().expect("coefficient fits in i128")
    }
}

impl Int for BigInt {
    fn from_big(n: &BigInt) -> Self {
        n.clone()
    }
}

fn eval<T: Int>(p: &[T], x: &T) -> T {
    let mut acc = T::zero();
    for c in p.iter().rev() {
        acc = acc * x.clone() + c.clone();
    }
    acc
}

fn derivative<T: Int>(p: &[T]) -> Vec<T> {
    let mut k = T::zero();
    let mut out = Vec::with_capacity(p.len().saturating_sub(1));
    for c in p.iter() {
        if !k.is_zero() {
            out.push(c.clone() * k.clone());
        }
        k = k + T::one();
    }
    out
}

fn trim<T: Int>(mut p: Vec<T>) -> Vec<T> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn sign<T: Int>(v: &T) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Splits `[lo, hi]` at the integers in `breaks` into consecutive segments.
fn segments<T: Int>(breaks: &[T], lo: &T, hi: &T) -> Vec<(T, T)> {
    let mut out = Vec::new();
    let mut start = lo.clone();
    for b in breaks {
        if *b >= start && b <= hi {
            out.push((start.clone(), b.clone()));
            start = b.clone() + T::one();
        }
    }
    if start <= *hi {
        out.push((start, hi.clone()));
    }
    out
}

/// Largest `n` in `[l, r)` with `sign(p(n)) == s`, given `sign(p(l)) == s != sign(p(r))`
/// and `p` monotone on `[l, r]`.
fn last_with_sign<T: Int>(p: &[T], l: &T, r: &T, s: i8) -> T {
    let two = T::one() + T::one();
    let (mut a, mut b) = (l.clone(), r.clone());
    while b.clone() - a.clone() > T::one() {
        let mid = (a.clone() + b.clone()).div_floor(&two);
        if sign(&eval(p, &mid)) == s {
            a = mid;
        } else {
            b = mid;
        }
    }
    a
}

/// A sorted set of integers in `[lo, hi]` containing `floor(r)` for every real root `r`
/// of `q` with `lo <= r < hi + 1`. Extra entries are allowed.
fn root_floors<T: Int>(q: &[T], lo: &T, hi: &T) -> Vec<T> {
    let q = trim(q.to_vec());
    let mut out: Vec<T> = Vec::new();
    match q.len() {
        0 | 1 => {}
        2 => {
            let r = (-q[0].clone()).div_floor(&q[1]);
            if r >= *lo && r <= *hi {
                out.push(r);
            }
        }
        _ => {
            let crit = root_floors(&derivative(&q), lo, hi);
            for (l, r) in segments(&crit, lo, hi) {
                let sl = sign(&eval(&q, &l));
                let sr = sign(&eval(&q, &r));
                if sl == 0 {
                    out.push(l.clone());
                }
                if sr == 0 {
                    out.push(r.clone());
                }
                if sl != 0 && sr != 0 && sl != sr {
                    out.push(last_with_sign(&q, &l, &r, sl));
                }
            }
            out.extend(crit);
            out.push(hi.clone());
        }
    }
    out.sort();
    out.dedup();
    out
}

fn integer_roots_in<T: Int>(p: &[T], lo: &T, hi: &T) -> Vec<T> {
    let p = trim(p.to_vec());
    let mut out = Vec::new();
    if p.len() <= 1 || lo > hi {
        return out;
    }
    let crit = root_floors(&derivative(&p), lo, hi);
    for (l, r) in segments(&crit, lo, hi) {
        let sl = sign(&eval(&p, &l));
        let sr = sign(&eval(&p, &r));
        if sl == 0 {
            out.push(l);
        } else if sr == 0 {
            out.push(r);
        } else if sl != sr {
            let n = last_with_sign(&p, &l, &r, sl);
            let n1 = n + T::one();
            if eval(&p, &n1).is_zero() {
                out.push(n1);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Upper bound on the absolute value of every real root (Fujiwara).
fn root_bound(p: &[BigInt]) -> BigInt {
    let n = p.len() - 1;
    let lead = p[n].magnitude().clone();
    let mut best = BigInt::zero();
    for (i, c) in p[..n].iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let ratio = BigInt::from_biguint(Sign::Plus, c.magnitude().div_ceil(&lead));
        let k = (n - i) as u32;
        let r = iroot_floor(&ratio, k) + 1;
        if r > best {
            best = r;
        }
    }
    best * 2 + 1
}

/// [`integer_roots`] for small machine-integer coefficients, avoiding big-integer
/// conversions when the evaluation stays inside `i128`.
pub(crate) fn integer_roots_i128(p: &[i128]) -> Vec<i128> {
    let p = trim(p.to_vec());
    assert!(!p.is_empty(), "integer_roots of the zero polynomial");
    let n = p.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lead = p[n].unsigned_abs() as f64;
    let mut bound = 0f64;
    for (i, c) in p[..n].iter().enumerate() {
        let r = (c.unsigned_abs() as f64 / lead).powf(1.0 / (n - i) as f64);
        bound = bound.max(r);
    }
    let bound = bound * 2.0 * 1.001 + 2.0;
    let coeff_bits = p
        .iter()
        .map(|c| 128 - c.unsigned_abs().leading_zeros())
        .max()
        .unwrap_or(0) as f64;
    if coeff_bits + n as f64 * (bound + 2.0).log2() + 8.0 >= 120.0 {
        let big: Vec<BigInt> = p.iter().map(|&c| BigInt::from(c)).collect();
        return integer_roots(&big, None)
            .into_iter()
            .map(|r| i128::from_big(&r))
            .collect();
    }
    let b = bound.ceil() as i128;
    integer_roots_in(&p, &-b, &b)
}

/// All integer roots of the integer polynomial `p` (lowest degree first) lying in
/// `[lo, hi]`; when no range is given the full real root bound is used.
///
/// `p` must not be the zero polynomial.
pub fn integer_roots(p: &[BigInt], range: Option<(&BigInt, &BigInt)>) -> Vec<BigInt> {
    let p = trim(p.to_vec());
    assert!(!p.is_empty(), "integer_roots of the zero polynomial");
    if p.len() == 1 {
        return Vec::new();
    }
    let bound = root_bound(&p);
    let (lo, hi) = match range {
        Some((l, h)) => ((-&bound).max(l.clone()), bound.min(h.clone())),
        None => (-&bound, bound),
    };
    if lo > hi {
        return Vec::new();
    }
    // Values are evaluated on [lo - 1, hi + 1]; stay in i128 when that is safe.
    let reach = lo.magnitude().max(hi.magnitude()) + 2u32;
    let coeff_bits = p.iter().map(|c| c.bits()).max().unwrap_or(0);
    let deg = (p.len() - 1) as u64;
    let bits = coeff_bits + deg * reach.bits() + 8;
    if bits < 120 {
        let p: Vec<i128> = p.iter().map(i128::from_big).collect();
        let lo = i128::from_big(&lo);
        let hi = i128::from_big(&hi);
        integer_roots_in(&p, &lo, &hi).into_iter().map(BigInt::from).collect()
    } else {
        integer_roots_in(&p, &lo, &hi)
    }
}
