//! Primary algorithm: even Bernoulli numbers from tangent numbers.
//!
//! Tangent numbers `T_k = tan^{(2k-1)}(0)` are generated by an in-place
//! integer recurrence; a single division per value then gives
//! `𝔅_{2k} = (-1)^{k-1} · 2k · T_k / (2^{2k} (2^{2k} - 1))`.

use num_rational::Ratio;
use num_traits::pow;

use crate::exact_arith::ExactInt;

/// `T_1, …, T_m` (index 0 of the result is `T_1`).
pub fn tangent_numbers<T: ExactInt>(m: usize) -> Vec<T> {
    if m == 0 {
        return Vec::new();
    }
    let from = |x: usize| T::from_usize(x).unwrap();
    let mut t = vec![T::zero(); m + 1];
    t[1] = T::one();
    for k in 2..=m {
        t[k] = from(k - 1) * t[k - 1].clone();
    }
    for k in 2..=m {
        for j in k..=m {
            t[j] = from(j - k) * t[j - 1].clone() + from(j - k + 2) * t[j].clone();
        }
    }
    t.remove(0);
    t
}

/// `𝔅_0, 𝔅_2, …, 𝔅_{2m}`.
pub fn even_bernoulli<T: ExactInt>(m: usize) -> Vec<Ratio<T>> {
    let two = T::from_u8(2).unwrap();
    let mut out = Vec::with_capacity(m + 1);
    out.push(Ratio::from_integer(T::one()));
    for (i, tk) in tangent_numbers::<T>(m).into_iter().enumerate() {
        let k = i + 1;
        let p = pow(two.clone(), 2 * k);
        let num = T::from_usize(2 * k).unwrap() * tk;
        let num = if k % 2 == 0 { -num } else { num };
        out.push(Ratio::new(num, p.clone() * (p - T::one())));
    }
    out
}
