//! Truncated integer power series, and the Hilbert series of the Jacobian
//! ring of a general quasi-smooth hypersurface.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Mul;

use crate::weights::WeightSystem;
use crate::{Error, Result};

/// `sum_{k <= cap} c_k t^k` with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<i64>,
}

impl TruncatedSeries {
    pub fn from_coeffs(mut coeffs: Vec<i64>, cap: usize) -> Self {
        coeffs.resize(cap + 1, 0);
        TruncatedSeries { coeffs }
    }

    pub fn one(cap: usize) -> Self {
        let mut coeffs = vec![0; cap + 1];
        coeffs[0] = 1;
        TruncatedSeries { coeffs }
    }

    /// `1 / (1 - t^a)`.
    pub fn geometric(a: usize, cap: usize) -> Self {
        assert!(a > 0, "geometric series needs a positive exponent");
        let coeffs = (0..=cap).map(|k| i64::from(k % a == 0)).collect();
        TruncatedSeries { coeffs }
    }

    /// `1 - t^e`.
    pub fn one_minus_power(e: usize, cap: usize) -> Self {
        let mut s = Self::one(cap);
        s.mul_one_minus_power(e);
        s
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; `None` above the cap.
    pub fn coeff(&self, k: usize) -> Option<i64> {
        self.coeffs.get(k).copied()
    }

    /// Coefficient at a possibly negative degree, which is zero.
    pub fn coeff_at(&self, degree: i64) -> Option<i64> {
        if degree < 0 {
            Some(0)
        } else {
            self.coeff(degree as usize)
        }
    }

    /// In place multiplication by `1 - t^e`.
    pub fn mul_one_minus_power(&mut self, e: usize) {
        if e == 0 {
            self.coeffs.iter_mut().for_each(|c| *c = 0);
            return;
        }
        for k in (e..self.coeffs.len()).rev() {
            self.coeffs[k] -= self.coeffs[k - e];
        }
    }

    /// In place multiplication by `1 / (1 - t^a)`.
    pub fn div_one_minus_power(&mut self, a: usize) {
        assert!(a > 0, "1 - t^0 is not invertible");
        for k in a..self.coeffs.len() {
            self.coeffs[k] += self.coeffs[k - a];
        }
    }

    /// Multiplicative inverse; needs a unit constant term (`±1`).
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        if c0 != 1 && c0 != -1 {
            return Err(Error::InvalidArgument("series constant term is not a unit"));
        }
        let mut inv = vec![0i64; self.coeffs.len()];
        inv[0] = c0;
        for k in 1..self.coeffs.len() {
            let s: i64 = (1..=k).map(|i| self.coeffs[i] * inv[k - i]).sum();
            inv[k] = -s * c0;
        }
        Ok(TruncatedSeries { coeffs: inv })
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// Product truncated to the smaller of the two caps.
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let cap = self.cap().min(rhs.cap());
        let mut coeffs = vec![0i64; cap + 1];
        for (i, &a) in self.coeffs.iter().enumerate().take(cap + 1) {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate().take(cap + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }
}

/// `prod_i (1 - t^{d - a_i}) / (1 - t^{a_i})` truncated at `cap`.
///
/// For a quasi-smooth general member the partial derivatives form a regular
/// sequence, so this is the Hilbert series of its Jacobian ring.
pub fn jacobian_hilbert_series(ws: &WeightSystem, cap: usize) -> Result<TruncatedSeries> {
    let d = ws.degree();
    let mut series = TruncatedSeries::one(cap);
    for (index, &a) in ws.weights().iter().enumerate() {
        if a == d {
            return Err(Error::LinearCone { index });
        }
        if a > d {
            return Err(Error::InvalidArgument("weight exceeds degree"));
        }
        series.mul_one_minus_power((d - a) as usize);
        series.div_one_minus_power(a as usize);
    }
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ws(weights: &[i64], d: i64) -> WeightSystem {
        WeightSystem::new(weights.to_vec(), d).unwrap()
    }

    #[test]
    fn cubic_is_binomial() {
        let s = jacobian_hilbert_series(&ws(&[1, 1, 1, 1, 1, 1], 3), 3).unwrap();
        assert_eq!(s.coeffs(), &[1, 6, 15, 20]);
    }

    #[test]
    fn del_pezzo_row_coefficient() {
        let s = jacobian_hilbert_series(&ws(&[1, 2, 2, 2, 2, 3], 6), 6).unwrap();
        assert_eq!(s.coeff(6), Some(14));
    }

    #[test]
    fn cap_zero_is_constant_one() {
        for w in [ws(&[1, 1, 1, 2, 3, 4], 6), ws(&[3, 3, 4, 4, 4, 6], 12)] {
            assert_eq!(jacobian_hilbert_series(&w, 0).unwrap().coeffs(), &[1]);
        }
    }

    #[test]
    fn linear_cone_rejected() {
        assert_eq!(
            jacobian_hilbert_series(&ws(&[1, 1, 1, 1, 1, 2], 2), 4),
            Err(Error::LinearCone { index: 5 })
        );
    }

    #[test]
    fn geometric_series_pattern() {
        let g = TruncatedSeries::geometric(3, 10);
        for k in 0..=10 {
            assert_eq!(g.coeff(k), Some(i64::from(k % 3 == 0)));
        }
        assert_eq!(g.coeff(11), None);
        assert_eq!(g.coeff_at(-2), Some(0));
    }

    fn factor_set() -> impl Strategy<Value = (Vec<(usize, bool)>, usize)> {
        (
            prop::collection::vec((1usize..=9, any::<bool>()), 1..=5),
            0usize..=30,
        )
    }

    fn build(factors: &[(usize, bool)], cap: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::one(cap);
        for &(e, geometric) in factors {
            let f = if geometric {
                TruncatedSeries::geometric(e, cap)
            } else {
                TruncatedSeries::one_minus_power(e, cap)
            };
            s = &s * &f;
        }
        s
    }

    proptest! {
        #[test]
        fn product_is_associative((fa, cap) in factor_set(), (fb, _) in factor_set(), (fc, _) in factor_set()) {
            let a = build(&fa, cap);
            let b = build(&fb, cap);
            let c = build(&fc, cap);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn inverse_gives_one((fa, cap) in factor_set()) {
            let a = build(&fa, cap);
            let inv = a.inverse().unwrap();
            prop_assert_eq!(&a * &inv, TruncatedSeries::one(cap));
        }

        #[test]
        fn in_place_ops_match_products((fa, cap) in factor_set(), e in 1usize..=9) {
            let a = build(&fa, cap);
            let mut x = a.clone();
            x.div_one_minus_power(e);
            prop_assert_eq!(&x, &(&a * &TruncatedSeries::geometric(e, cap)));
            x.mul_one_minus_power(e);
            prop_assert_eq!(x, a);
        }
    }
}
