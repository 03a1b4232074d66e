//! Oracle algorithm: the Akiyama–Tanigawa transform over rationals.
//!
//! Shares nothing with the tangent-number route beyond the scalar type.

use num_rational::Ratio;

use crate::exact_arith::ExactInt;

/// `𝔅_0, 𝔅_1, …, 𝔅_n` with `𝔅_1 = -1/2`.
pub fn bernoulli_upto<T: ExactInt>(n: usize) -> Vec<Ratio<T>> {
    let from = |x: usize| T::from_usize(x).unwrap();
    let mut row: Vec<Ratio<T>> = Vec::with_capacity(n + 1);
    let mut out = Vec::with_capacity(n + 1);
    for m in 0..=n {
        row.push(Ratio::new(T::one(), from(m + 1)));
        for j in (1..=m).rev() {
            row[j - 1] = (row[j - 1].clone() - row[j].clone()) * from(j);
        }
        out.push(row[0].clone());
    }
    // the transform yields the +1/2 convention
    if n >= 1 {
        out[1] = -out[1].clone();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn leading_values() {
        let b: Vec<Ratio<i64>> = bernoulli_upto(8);
        let expect = [
            (1, 1),
            (-1, 2),
            (1, 6),
            (0, 1),
            (-1, 30),
            (0, 1),
            (1, 42),
            (0, 1),
            (-1, 30),
        ];
        for (got, (n, d)) in b.iter().zip(expect) {
            assert_eq!(*got, Ratio::new(n, d));
        }
    }

    #[test]
    fn odd_values_vanish() {
        let b: Vec<Ratio<i128>> = bernoulli_upto(25);
        for n in (3..=25).step_by(2) {
            assert!(b[n].is_zero(), "B_{n} = {}", b[n]);
        }
    }

    #[test]
    fn empty_prefix() {
        let b: Vec<Ratio<i64>> = bernoulli_upto(0);
        assert_eq!(b, vec![Ratio::from_integer(1)]);
    }
}
