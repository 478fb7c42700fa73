use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{
    agree, integer_class, rational, sign, CheckError, Expectation, IdentityReport, Workbench,
    POSITIVE_INTEGER,
};

impl Workbench {
    fn f(&self, n: usize) -> Result<BigInt, CheckError> {
        Ok(self.fib.fib(n)?)
    }

    fn ff(&self, n: usize) -> Result<BigInt, CheckError> {
        Ok(self.fib.fib_factorial(n)?)
    }

    fn cf(&self, n: usize) -> Result<BigInt, CheckError> {
        Ok(self.fib.fibocatalan(n)?)
    }

    /// `F_{2n}! / (F_{n+2}! F_n!)`, usually not an integer.
    fn central_ratio_f(&self, n: usize) -> Result<num_rational::BigRational, CheckError> {
        Ok(rational(self.ff(2 * n)?, self.ff(n + 2)? * self.ff(n)?))
    }

    /// `F_{2n+1}F_{2n}C_{n,F} - F_{n+1}F_nC_{n+1,F}`
    pub(crate) fn main_fib_lhs(&self, n: usize) -> Result<BigInt, CheckError> {
        Ok(self.f(2 * n + 1)? * self.f(2 * n)? * self.cf(n)?
            - self.f(n + 1)? * self.f(n)? * self.cf(n + 1)?)
    }

    /// `F_{2n+1}F_{n+1}C_n + F_{2n+1}F_{n-1}C_n - F_{n+1}C_{n+1}`
    pub(crate) fn quotient_fib_lhs(&self, n: usize) -> Result<BigInt, CheckError> {
        let c = self.cf(n)?;
        let top = self.f(2 * n + 1)?;
        Ok(&top * self.f(n + 1)? * &c + &top * self.f(n - 1)? * &c
            - self.f(n + 1)? * self.cf(n + 1)?)
    }

    pub fn verify_lemma_fib(&self, n: usize) -> Result<IdentityReport, CheckError> {
        let lhs = self.f(2 * n)? * self.f(n + 2)? - self.f(2 * n + 2)? * self.f(n)?;
        let rhs = sign(n) * self.f(n)?;
        Ok(IdentityReport::new("lemma-fib", &[("n", n)], lhs, rhs))
    }

    /// Checks both right-hand forms against the left side.
    pub fn verify_main_fib(&self, n: usize) -> Result<IdentityReport, CheckError> {
        let lhs = self.main_fib_lhs(n)?;
        let s = sign(n);
        let product_form = self.central_ratio_f(n)?
            * rational(&s * self.f(n)? * self.f(2 * n + 1)?, BigInt::from(1));
        let binomial_form = &s * self.fib.fibonomial(2 * n + 1, n + 2)?;
        let rhs = agree(&[product_form.to_string(), binomial_form.to_string()]);
        Ok(IdentityReport::new("main-fib", &[("n", n)], lhs, rhs))
    }

    /// The left side of the main identity, rewritten through
    /// `F_{2n} = F_nF_{n+1} + F_nF_{n-1}`, divided by `F_n`.
    pub fn verify_quotient_fib(&self, n: usize) -> Result<IdentityReport, CheckError> {
        let main = self.main_fib_lhs(n)?;
        let (q, r) = main.div_rem(&self.f(n)?);
        let divided = if r.is_zero() {
            q.to_string()
        } else {
            format!("not divisible by F_{n}")
        };
        let lhs = agree(&[divided, self.quotient_fib_lhs(n)?.to_string()]);
        let s = sign(n);
        let product_form =
            self.central_ratio_f(n)? * rational(&s * self.f(2 * n + 1)?, BigInt::from(1));
        let binomial_form = rational(s * self.fib.fibonomial(2 * n + 1, n)?, self.f(n + 2)?);
        let rhs = agree(&[product_form.to_string(), binomial_form.to_string()]);
        Ok(IdentityReport::new("quotient-fib", &[("n", n)], lhs, rhs))
    }

    /// `F_{2n+1}F_{2n}!/(F_{n+2}!F_n!) = binom(2n+1,n)_F / F_{n+2}` and
    /// `2F_{2n}!/(F_{n+2}!F_n!) = 2C_{n,F}/F_{n+2}` are positive integers.
    pub fn verify_corollary_fib(&self, n: usize) -> Result<IdentityReport, CheckError> {
        let ratio = self.central_ratio_f(n)?;
        let first = integer_class(&[
            &ratio * rational(self.f(2 * n + 1)?, BigInt::from(1)),
            rational(self.fib.fibonomial(2 * n + 1, n)?, self.f(n + 2)?),
        ]);
        let second = integer_class(&[
            &ratio * rational(BigInt::from(2), BigInt::from(1)),
            rational(BigInt::from(2) * self.cf(n)?, self.f(n + 2)?),
        ]);
        Ok(IdentityReport::new(
            "corollary-fib",
            &[("n", n)],
            format!("{first}; {second}"),
            format!("{POSITIVE_INTEGER}; {POSITIVE_INTEGER}"),
        ))
    }

    /// `binom(2n+1, n) / (n+2)` is not always an integer; it fails at `n = 2`.
    pub fn verify_corollary_classical(&self, n: usize) -> Result<IdentityReport, CheckError> {
        let b = self.fib.binomial(2 * n + 1, n)?;
        let d = BigInt::from(n + 2);
        let lhs = if (&b % &d).is_zero() {
            "integer".to_string()
        } else {
            format!("non-integer {b}/{d}")
        };
        let expected = if n == 2 {
            Expectation::Fails
        } else {
            Expectation::Unclaimed
        };
        Ok(
            IdentityReport::new("corollary-classical", &[("n", n)], lhs, "integer")
                .expecting(expected),
        )
    }

    /// `gcd(F_{2n+1}, F_{n+2}) = F_{gcd(2n+1, n+2)}` with index gcd 1 or 3,
    /// so `F_{n+2}` divides `2C_{n,F}`, and `C_{n,F}` itself when coprime.
    pub fn verify_gcd_fib(&self, n: usize) -> Result<IdentityReport, CheckError> {
        let g = (2 * n + 1).gcd(&(n + 2));
        let fg = self.fib.fib_gcd(2 * n + 1, n + 2)?;
        let top = self.f(n + 2)?;
        let c = self.cf(n)?;
        let mut lhs = format!(
            "gcd={fg}; index gcd in {{1,3}}={}; F_(n+2) | 2C={}",
            g == 1 || g == 3,
            (BigInt::from(2) * &c % &top).is_zero()
        );
        let mut rhs = format!(
            "gcd={}; index gcd in {{1,3}}=true; F_(n+2) | 2C=true",
            self.f(g)?
        );
        if g == 1 {
            lhs.push_str(&format!("; F_(n+2) | C={}", (&c % &top).is_zero()));
            rhs.push_str("; F_(n+2) | C=true");
        }
        Ok(IdentityReport::new("gcd-fib", &[("n", n)], lhs, rhs))
    }

    /// `F_{2n} = F_nF_{n+1} + F_nF_{n-1}`
    pub fn verify_doubling_fib(&self, n: usize) -> Result<IdentityReport, CheckError> {
        let rhs = self.f(n)? * (self.f(n + 1)? + self.f(n - 1)?);
        Ok(IdentityReport::new(
            "doubling-fib",
            &[("n", n)],
            self.f(2 * n)?,
            rhs,
        ))
    }

    /// `S(m,n)_F` is a positive integer and symmetric in `m, n`.
    pub fn verify_super_fib(&self, m: usize, n: usize) -> Result<IdentityReport, CheckError> {
        let q = |a: usize, b: usize| -> Result<_, CheckError> {
            Ok(rational(
                self.ff(2 * a)? * self.ff(2 * b)?,
                self.ff(a)? * self.ff(b)? * self.ff(a + b)?,
            ))
        };
        let v = q(m, n)?;
        let lhs = format!(
            "{}; symmetric={}",
            integer_class(std::slice::from_ref(&v)),
            v == q(n, m)?
        );
        Ok(IdentityReport::new(
            "super-fib",
            &[("m", m), ("n", n)],
            lhs,
            format!("{POSITIVE_INTEGER}; symmetric=true"),
        ))
    }

    pub fn verify_gen_fib(&self, r: usize, n: usize) -> Result<IdentityReport, CheckError> {
        let v = rational(
            self.ff(2 * r + 1)? * self.ff(2 * n)?,
            self.ff(r)? * self.ff(n)? * self.ff(n + r + 1)?,
        );
        Ok(IdentityReport::new(
            "gen-fib",
            &[("r", r), ("n", n)],
            integer_class(&[v]),
            POSITIVE_INTEGER,
        ))
    }

    /// `S(1,n)_F = C_{n,F}`
    pub fn verify_special_fib_m1(&self, n: usize) -> Result<IdentityReport, CheckError> {
        Ok(IdentityReport::new(
            "special-fib-m1",
            &[("n", n)],
            self.fib.super_fibocatalan(1, n)?,
            self.cf(n)?,
        ))
    }

    /// `S(m,m)_F = binom(2m,m)_F`
    pub fn verify_special_fib_mm(&self, m: usize) -> Result<IdentityReport, CheckError> {
        Ok(IdentityReport::new(
            "special-fib-mm",
            &[("m", m)],
            self.fib.super_fibocatalan(m, m)?,
            self.fib.fibonomial(2 * m, m)?,
        ))
    }

    /// `S(m,m+1)_F = F_{2m+2} C_{m,F}`
    pub fn verify_special_fib_mm1(&self, m: usize) -> Result<IdentityReport, CheckError> {
        Ok(IdentityReport::new(
            "special-fib-mm1",
            &[("m", m)],
            self.fib.super_fibocatalan(m, m + 1)?,
            self.f(2 * m + 2)? * self.cf(m)?,
        ))
    }

    /// `S(2,n)_F = 6F_{2n}!/(F_n!F_{n+2}!)`
    pub fn verify_special_fib_m2(&self, n: usize) -> Result<IdentityReport, CheckError> {
        let rhs = rational(
            BigInt::from(6) * self.ff(2 * n)?,
            self.ff(n)? * self.ff(n + 2)?,
        );
        Ok(IdentityReport::new(
            "special-fib-m2",
            &[("n", n)],
            self.fib.super_fibocatalan(2, n)?,
            rhs,
        ))
    }

    /// Generalized FiboCatalan at `r = 0` is `C_{n,F}`.
    pub fn verify_special_fib_r0(&self, n: usize) -> Result<IdentityReport, CheckError> {
        Ok(IdentityReport::new(
            "special-fib-r0",
            &[("n", n)],
            self.fib.generalized_fibocatalan(0, n)?,
            self.cf(n)?,
        ))
    }

    /// Generalized FiboCatalan at `r = 1` is `S(2,n)_F / 3`.
    pub fn verify_special_fib_r1(&self, n: usize) -> Result<IdentityReport, CheckError> {
        let rhs = rational(self.fib.super_fibocatalan(2, n)?, BigInt::from(3));
        Ok(IdentityReport::new(
            "special-fib-r1",
            &[("n", n)],
            self.fib.generalized_fibocatalan(1, n)?,
            rhs,
        ))
    }

    /// `J_{m-1,F} F_{2n}!/(F_n!F_{n+m}!) = (F_m/F_{2m}) S(n,m)_F` for `m >= 1`.
    pub fn verify_relation_fib(&self, m: usize, n: usize) -> Result<IdentityReport, CheckError> {
        let lhs = rational(
            self.ff(2 * m - 1)? * self.ff(2 * n)?,
            self.ff(m - 1)? * self.ff(n)? * self.ff(n + m)?,
        );
        let rhs = rational(
            self.f(m)? * self.fib.super_fibocatalan(n, m)?,
            self.f(2 * m)?,
        );
        Ok(IdentityReport::new(
            "relation-fib",
            &[("m", m), ("n", n)],
            lhs,
            rhs,
        ))
    }
}
