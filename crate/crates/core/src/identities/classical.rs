use num_bigint::BigInt;
use num_traits::Zero;

use super::{CheckError, Expectation, IdentityReport, Workbench};

/// Which family of binomials and Catalan numbers a convolution runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Layer {
    Classical,
    Fibonacci,
}

pub(crate) fn alternating(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

impl Workbench {
    fn binom_in(&self, layer: Layer, n: usize, k: usize) -> Result<BigInt, CheckError> {
        Ok(match layer {
            Layer::Classical => self.fib.binomial(n, k)?,
            Layer::Fibonacci => self.fib.fibonomial(n, k)?,
        })
    }

    fn super_in(&self, layer: Layer, m: usize, n: usize) -> Result<BigInt, CheckError> {
        Ok(match layer {
            Layer::Classical => self.fib.super_catalan(m, n)?,
            Layer::Fibonacci => self.fib.super_fibocatalan(m, n)?,
        })
    }

    fn catalan_in(&self, layer: Layer, n: usize) -> Result<BigInt, CheckError> {
        Ok(match layer {
            Layer::Classical => self.fib.catalan(n)?,
            Layer::Fibonacci => self.fib.fibocatalan(n)?,
        })
    }

    /// `sum_{|k| <= min(m,n)} w(k) binom(2m, m+k) binom(2n, n+k)` against `S(m,n)`.
    pub(crate) fn von_szily_sides(
        &self,
        layer: Layer,
        weight: fn(i64) -> i64,
        m: usize,
        n: usize,
    ) -> Result<(BigInt, BigInt), CheckError> {
        let bound = m.min(n) as i64;
        let mut sum = BigInt::zero();
        for k in -bound..=bound {
            let a = self.binom_in(layer, 2 * m, (m as i64 + k) as usize)?;
            let b = self.binom_in(layer, 2 * n, (n as i64 + k) as usize)?;
            sum += weight(k) * a * b;
        }
        Ok((sum, self.super_in(layer, m, n)?))
    }

    /// `sum_{k=0}^{2n} w(k) binom(2n,k) S(k,l) S(2n-k,l)` against `S(n,l) S(n+l,n)`.
    pub(crate) fn mikic_super_sides(
        &self,
        layer: Layer,
        weight: fn(i64) -> i64,
        n: usize,
        l: usize,
    ) -> Result<(BigInt, BigInt), CheckError> {
        let mut sum = BigInt::zero();
        for k in 0..=2 * n {
            sum += weight(k as i64)
                * self.binom_in(layer, 2 * n, k)?
                * self.super_in(layer, k, l)?
                * self.super_in(layer, 2 * n - k, l)?;
        }
        Ok((
            sum,
            self.super_in(layer, n, l)? * self.super_in(layer, n + l, n)?,
        ))
    }

    /// `sum_{k=0}^{2n} w(k) binom(2n,k) C_k C_{2n-k}` against `C_n binom(2n,n)`.
    pub(crate) fn mikic_catalan_sides(
        &self,
        layer: Layer,
        weight: fn(i64) -> i64,
        n: usize,
    ) -> Result<(BigInt, BigInt), CheckError> {
        let mut sum = BigInt::zero();
        for k in 0..=2 * n {
            sum += weight(k as i64)
                * self.binom_in(layer, 2 * n, k)?
                * self.catalan_in(layer, k)?
                * self.catalan_in(layer, 2 * n - k)?;
        }
        Ok((
            sum,
            self.catalan_in(layer, n)? * self.binom_in(layer, 2 * n, n)?,
        ))
    }

    /// `S(m,n) = sum_k (-1)^k binom(2m, m+k) binom(2n, n+k)`
    pub fn verify_von_szily(&self, m: usize, n: usize) -> Result<IdentityReport, CheckError> {
        let (sum, s) = self.von_szily_sides(Layer::Classical, alternating, m, n)?;
        Ok(IdentityReport::new(
            "von-szily",
            &[("m", m), ("n", n)],
            s,
            sum,
        ))
    }

    pub fn verify_mikic_super(&self, n: usize, l: usize) -> Result<IdentityReport, CheckError> {
        let (sum, rhs) = self.mikic_super_sides(Layer::Classical, alternating, n, l)?;
        Ok(IdentityReport::new(
            "mikic-super",
            &[("n", n), ("l", l)],
            sum,
            rhs,
        ))
    }

    pub fn verify_mikic_catalan(&self, n: usize) -> Result<IdentityReport, CheckError> {
        let (sum, rhs) = self.mikic_catalan_sides(Layer::Classical, alternating, n)?;
        Ok(IdentityReport::new("mikic-catalan", &[("n", n)], sum, rhs))
    }

    /// von Szily with fibonomials substituted directly. Known to fail at
    /// `m = n = 1`; other points are recorded without a claim.
    pub fn verify_von_szily_fib_naive(
        &self,
        m: usize,
        n: usize,
    ) -> Result<IdentityReport, CheckError> {
        let (sum, s) = self.von_szily_sides(Layer::Fibonacci, alternating, m, n)?;
        let expected = if (m, n) == (1, 1) {
            Expectation::Fails
        } else {
            Expectation::Unclaimed
        };
        Ok(
            IdentityReport::new("von-szily-fib-naive", &[("m", m), ("n", n)], s, sum)
                .expecting(expected),
        )
    }
}
