//! Exact natural-number arithmetic for the checked identities.
//!
//! Every fractional exponent is cleared by raising both sides to a common
//! integer power, so the comparisons below only multiply and exponentiate.
//! They are generic over any exact natural type; reports use [`BigNat`].
//!
//! [`BigNat`]: crate::BigNat

use std::fmt;

use num_traits::Num;

/// An exact natural-number type: machine integers or arbitrary precision.
pub trait Natural: Clone + Ord + Num + From<u64> + fmt::Display + fmt::Debug {}

impl<T> Natural for T where T: Clone + Ord + Num + From<u64> + fmt::Display + fmt::Debug {}

/// `base^exp` by repeated squaring.
pub fn power<N: Natural>(base: &N, exp: u64) -> N {
    let mut result = N::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = result * b.clone();
        }
        e >>= 1;
        if e > 0 {
            b = b.clone() * b;
        }
    }
    result
}

pub fn product<N: Natural, I: IntoIterator<Item = N>>(factors: I) -> N {
    factors.into_iter().fold(N::one(), |acc, x| acc * x)
}

pub fn sum<N: Natural, I: IntoIterator<Item = N>>(terms: I) -> N {
    terms.into_iter().fold(N::zero(), |acc, x| acc + x)
}

/// `a / b` when `b` divides `a` exactly.
pub fn exact_quotient<N: Natural>(a: &N, b: &N) -> Option<N> {
    if b.is_zero() || !(a.clone() % b.clone()).is_zero() {
        None
    } else {
        Some(a.clone() / b.clone())
    }
}

/// Two exact sides of a cross-multiplied comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sides<N> {
    pub lhs: N,
    pub rhs: N,
}

impl<N: Natural> Sides<N> {
    pub fn holds_ge(&self) -> bool {
        self.lhs >= self.rhs
    }

    pub fn holds_le(&self) -> bool {
        self.lhs <= self.rhs
    }

    pub fn holds_eq(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `ratio ≥ n_p^{1-1/p}` as `ratio^p` vs `n_p^{p-1}`.
pub fn frobenius_bound<N: Natural>(ratio: &N, n_p: &N, p: u64) -> Sides<N> {
    Sides {
        lhs: power(ratio, p),
        rhs: power(n_p, p - 1),
    }
}

/// `(Π λ)^{1/|P|} ≤ n_p^{1/p}` as `(Π λ)^p` vs `n_p^{|P|}`.
pub fn lambda_bound<N: Natural>(lambdas: &[N], n_p: &N, p: u64) -> Sides<N> {
    let sylow_order = lambdas.len() as u64;
    Sides {
        lhs: power(&product(lambdas.iter().cloned()), p),
        rhs: power(n_p, sylow_order),
    }
}

/// The arithmetic–geometric mean link `ratio ≥ (Π n_p/λ)^{1/|P|}` as
/// `ratio^{|P|} · Π λ` vs `n_p^{|P|}`.
pub fn amgm_link<N: Natural>(ratio: &N, lambdas: &[N], n_p: &N) -> Sides<N> {
    let sylow_order = lambdas.len() as u64;
    Sides {
        lhs: power(ratio, sylow_order) * product(lambdas.iter().cloned()),
        rhs: power(n_p, sylow_order),
    }
}

/// The fixed-point product formula for a coprime action of a p-group `P`,
/// raised to the power `(p-1)|P|`:
/// `|C(P)|^{(p-1)|P|} · Π |C(x^p)|` vs `Π |C(x)|^p`.
///
/// `per_element` holds `(|C(x)|, |C(x^p)|)` for every `x ∈ P`.
pub fn fixed_point_product<N: Natural>(fixed_by_group: &N, per_element: &[(N, N)], p: u64) -> Sides<N> {
    let sylow_order = per_element.len() as u64;
    Sides {
        lhs: power(fixed_by_group, (p - 1) * sylow_order) * product(per_element.iter().map(|(_, cp)| cp.clone())),
        rhs: product(per_element.iter().map(|(c, _)| power(c, p))),
    }
}

/// `num / den` truncated to `digits` decimal places, without floating point.
pub fn decimal_quotient<N: Natural>(num: &N, den: &N, digits: u32) -> String {
    let ten = N::from(10);
    let whole = num.clone() / den.clone();
    let mut rem = num.clone() % den.clone();
    let mut frac = String::new();
    for _ in 0..digits {
        rem = rem * ten.clone();
        frac.push_str(&(rem.clone() / den.clone()).to_string());
        rem = rem % den.clone();
    }
    if digits == 0 {
        whole.to_string()
    } else {
        format!("{whole}.{frac}")
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n > 0 && n % p == 0 {
        n /= p;
        part *= p;
    }
    part
}

pub fn is_p_power(n: u64, p: u64) -> bool {
    p_part(n, p) == n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BigNat;
    use proptest::prelude::*;

    #[test]
    fn primes() {
        assert_eq!(prime_divisors(24), vec![2, 3]);
        assert_eq!(prime_divisors(17496), vec![2, 3]);
        assert_eq!(prime_divisors(168), vec![2, 3, 7]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(p_part(24, 5), 1);
        assert!(is_prime(7) && !is_prime(1) && !is_prime(9));
    }

    #[test]
    fn decimal() {
        assert_eq!(decimal_quotient(&7u64, &2, 3), "3.500");
        assert_eq!(decimal_quotient(&BigNat::from(1u64), &BigNat::from(3u64), 4), "0.3333");
    }

    #[test]
    fn hand_values() {
        // S3, p = 2: ratio 2, n_2 = 3.
        let s = frobenius_bound(&2u64, &3, 2);
        assert_eq!((s.lhs, s.rhs), (4, 3));
        // C2 inverting C3: C(P) = 1, (C(1), C(1)) = (3, 3), (C(t), C(1)) = (1, 3).
        let s = fixed_point_product(&1u64, &[(3, 3), (1, 3)], 2);
        assert_eq!((s.lhs, s.rhs), (9, 9));
    }

    proptest! {
        #[test]
        fn generic_backends_agree(ratio in 1u64..40, n_p in 1u64..40, p in prop::sample::select(vec![2u64, 3, 5]),
                                  lambdas in prop::collection::vec(1u64..20, 1..6)) {
            let small = frobenius_bound(&(ratio as u128), &(n_p as u128), p);
            let big = frobenius_bound(&BigNat::from(ratio), &BigNat::from(n_p), p);
            prop_assert_eq!(BigNat::from(small.lhs), big.lhs);
            prop_assert_eq!(BigNat::from(small.rhs), big.rhs);

            let l128: Vec<u128> = lambdas.iter().map(|&l| l as u128).collect();
            let lbig: Vec<BigNat> = lambdas.iter().map(|&l| BigNat::from(l)).collect();
            let a = amgm_link(&(ratio as u128), &l128, &(n_p as u128));
            let b = amgm_link(&BigNat::from(ratio), &lbig, &BigNat::from(n_p));
            prop_assert_eq!(a.holds_ge(), b.holds_ge());
            prop_assert_eq!(BigNat::from(a.lhs), b.lhs);
        }

        #[test]
        fn power_matches_repeated_product(base in 0u64..1000, exp in 0u64..12) {
            let expected = (0..exp).fold(BigNat::from(1u64), |acc, _| acc * BigNat::from(base));
            prop_assert_eq!(power(&BigNat::from(base), exp), expected);
        }
    }
}
