//! Residue arithmetic with representatives in `1..=n`.
//!
//! Every formula in this crate works with the convention that the residue
//! class of `0` is written as `n`, so that elements, row and column indices
//! and sequence positions all live in the same range `1..=n`.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

/// An element of a groupoid on `{1, .., n}`. Always in `1..=n`.
pub type Element = usize;

/// Orders above this are rejected unless the limit is raised.
pub const DEFAULT_MAX_ORDER: usize = 1024;

/// Environment variable read by the CLI to override the order bound.
pub const MAX_ORDER_ENV: &str = "TRANSLATABLE_MAX_ORDER";

static MAX_ORDER: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_ORDER);

/// Current upper bound on table orders.
pub fn max_order() -> usize {
    MAX_ORDER.load(Ordering::Relaxed)
}

/// Sets the process-wide bound on table orders.
pub fn set_max_order(limit: usize) {
    MAX_ORDER.store(limit.max(1), Ordering::Relaxed);
}

/// Reads [`MAX_ORDER_ENV`] and applies it if it parses as a positive integer.
pub fn max_order_from_env() -> Option<usize> {
    let raw = std::env::var(MAX_ORDER_ENV).ok()?;
    let limit: usize = raw.trim().parse().ok().filter(|&v| v > 0)?;
    set_max_order(limit);
    Some(limit)
}

pub(crate) fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    let limit = max_order();
    if n > limit {
        return Err(Error::OrderTooLarge { n, limit });
    }
    Ok(())
}

/// The unique `r` in `1..=n` with `r ≡ x (mod n)`.
pub fn mod_rep(x: i64, n: i64) -> Result<Element> {
    if n < 1 {
        return Err(Error::InvalidOrder(n));
    }
    Ok(rep(x, n as usize))
}

/// Unchecked [`mod_rep`] for hot loops; `n` must be positive.
#[inline]
pub fn rep(x: i64, n: usize) -> Element {
    let n = n as i64;
    let r = x.rem_euclid(n);
    if r == 0 {
        n as usize
    } else {
        r as usize
    }
}

/// `true` when `x ≡ 0 (mod n)`.
#[inline]
pub fn is_zero_mod(x: i64, n: usize) -> bool {
    x.rem_euclid(n as i64) == 0
}

pub fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Least positive `m` with `m * x ≡ 0 (mod n)`.
pub fn least_annihilator(x: usize, n: usize) -> usize {
    (1..=n)
        .find(|&m| is_zero_mod((m * x) as i64, n))
        .unwrap_or(n)
}

/// The multiplicative inverse of `k` modulo `n` as a representative in `1..n`,
/// if it exists and is not the zero class.
pub fn inverse_mod(k: usize, n: usize) -> Option<usize> {
    (1..n).find(|&s| rep((k * s) as i64, n) == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_is_written_as_n() {
        assert_eq!(mod_rep(0, 6).unwrap(), 6);
        assert_eq!(mod_rep(7, 6).unwrap(), 1);
        assert_eq!(mod_rep(-5, 6).unwrap(), 1);
        assert_eq!(mod_rep(-6, 6).unwrap(), 6);
        assert_eq!(mod_rep(12, 1).unwrap(), 1);
    }

    #[test]
    fn rejects_non_positive_modulus() {
        assert_eq!(mod_rep(3, 0), Err(Error::InvalidOrder(0)));
        assert_eq!(mod_rep(3, -2), Err(Error::InvalidOrder(-2)));
    }

    #[test]
    fn residues_stay_in_range() {
        for n in 1..=15i64 {
            for x in -10 * n..=10 * n {
                let r = mod_rep(x, n).unwrap() as i64;
                assert!((1..=n).contains(&r));
                assert_eq!((x - r).rem_euclid(n), 0);
            }
        }
    }

    #[test]
    fn scaling_rules() {
        // [tx]_{tn} = t[x]_n and [t(x-1)]_{tn} = t[[x]_n - 1]_n
        for n in 1..=12usize {
            for t in 1..=6usize {
                for x in 1..=(2 * n) as i64 {
                    let tn = t * n;
                    assert_eq!(rep(t as i64 * x, tn), t * rep(x, n));
                    let lhs = rep(t as i64 * (x - 1), tn);
                    let rhs = t * rep(rep(x, n) as i64 - 1, n);
                    assert_eq!(lhs, rhs, "n={n} t={t} x={x}");
                }
            }
        }
    }

    #[test]
    fn shifted_step_is_an_annihilator() {
        for k in 1..=12usize {
            let n = k + k * k;
            for t in (1..=k).filter(|t| k % t == 0) {
                let big = (k + (t - 1) * n) as i64;
                assert_eq!(rep(big + big * big, t * n), t * n, "k={k} t={t}");
            }
        }
    }

    #[test]
    fn inverses_and_annihilators() {
        assert_eq!(inverse_mod(5, 6), Some(5));
        assert_eq!(inverse_mod(2, 6), None);
        assert_eq!(inverse_mod(2, 5), Some(3));
        assert_eq!(least_annihilator(8, 24), 3);
        assert_eq!(least_annihilator(512, 576), 9);
        assert_eq!(gcd(12, 18), 6);
    }

    #[test]
    fn order_bound_is_enforced() {
        assert!(check_order(DEFAULT_MAX_ORDER).is_ok());
        assert!(matches!(
            check_order(max_order() + 1),
            Err(Error::OrderTooLarge { .. })
        ));
        assert_eq!(check_order(0), Err(Error::InvalidOrder(0)));
    }
}
