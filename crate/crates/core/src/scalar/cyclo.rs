//! Cyclotomic polynomials Φ_m(p) and trial factorization by them.
//!
//! Every q-integer is a product of Φ_m(p), so denominators are kept factored
//! over this family and most cancellations become exact trial divisions.

use std::cell::RefCell;

use super::poly::{rat, Poly};

thread_local! {
    static CACHE: RefCell<Vec<Poly>> = RefCell::new(vec![Poly::zero()]);
}

/// Φ_m(p), m ≥ 1.
pub(crate) fn cyclotomic(m: u32) -> Poly {
    CACHE.with(|c| {
        let mut cache = c.borrow_mut();
        while cache.len() <= m as usize {
            let k = cache.len();
            // p^k - 1 divided by Φ_d for every proper divisor d of k.
            let mut f = &Poly::monomial(rat(1), k) - &Poly::one();
            for d in 1..k {
                if k % d == 0 {
                    f = f.exact_div(&cache[d]);
                }
            }
            cache.push(f);
        }
        cache[m as usize].clone()
    })
}

pub(crate) fn totient(mut m: u32) -> u32 {
    let mut out = m;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            while m.is_multiple_of(d) {
                m /= d;
            }
            out -= out / d;
        }
        d += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

/// Quotient if `divisor` divides `f` exactly.
pub(crate) fn try_div(f: &Poly, divisor: &Poly) -> Option<Poly> {
    if f.degree() < divisor.degree() {
        return None;
    }
    let (q, r) = f.div_rem(divisor);
    r.is_zero().then_some(q)
}

/// Splits `f` (with f(0) ≠ 0) as Π Φ_m^e · rest with rest free of cyclotomic factors.
pub(crate) fn split(f: &Poly) -> (Vec<(u32, u32)>, Poly) {
    let mut rest = f.clone();
    let mut out = Vec::new();
    let mut m = 1u32;
    loop {
        let deg = rest.degree().unwrap_or(0) as u32;
        if deg == 0 {
            break;
        }
        // φ(m) ≥ sqrt(m/2), so m ≤ 2 deg² bounds every candidate.
        if m > 2 * deg * deg {
            break;
        }
        if totient(m) <= deg {
            let phi = cyclotomic(m);
            let mut e = 0;
            while let Some(qt) = try_div(&rest, &phi) {
                rest = qt;
                e += 1;
            }
            if e > 0 {
                out.push((m, e));
            }
        }
        m += 1;
    }
    (out, rest)
}

/// Expands Π Φ_m^e.
pub(crate) fn expand(factors: &[(u32, u32)]) -> Poly {
    let mut acc = Poly::one();
    for &(m, e) in factors {
        let phi = cyclotomic(m);
        for _ in 0..e {
            acc = &acc * &phi;
        }
    }
    acc
}

/// Divides out of `num` as many of the listed factors as possible; returns
/// the reduced numerator and the factors left over.
pub(crate) fn cancel(num: Poly, factors: &[(u32, u32)]) -> (Poly, Vec<(u32, u32)>) {
    let mut num = num;
    let mut left = Vec::with_capacity(factors.len());
    for &(m, e) in factors {
        let phi = cyclotomic(m);
        let mut e = e;
        while e > 0 {
            match try_div(&num, &phi) {
                Some(qt) => {
                    num = qt;
                    e -= 1;
                }
                None => break,
            }
        }
        if e > 0 {
            left.push((m, e));
        }
    }
    (num, left)
}

/// Sorted merge with exponents combined by `op`.
pub(crate) fn merge(
    a: &[(u32, u32)],
    b: &[(u32, u32)],
    op: fn(u32, u32) -> u32,
) -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (m, e) = if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            i += 1;
            (a[i - 1].0, op(a[i - 1].1, 0))
        } else if i == a.len() || b[j].0 < a[i].0 {
            j += 1;
            (b[j - 1].0, op(0, b[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (a[i - 1].0, op(a[i - 1].1, b[j - 1].1))
        };
        if e > 0 {
            out.push((m, e));
        }
    }
    out
}

/// Π Φ_m^{e_m - s_m} for factor lists with s ≤ e pointwise.
pub(crate) fn cofactor(total: &[(u32, u32)], part: &[(u32, u32)]) -> Poly {
    let diff = merge(total, part, |a, b| a - b);
    expand(&diff)
}
