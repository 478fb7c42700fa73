use num_bigint::BigInt;
use num_traits::One;

use super::{agree, poly_class, sign, CheckError, IdentityReport, Workbench, NONNEG_POLY};
use crate::bigpoly::PolyError;
use crate::lucas::{factorial_quotient_report, LucasError};
use crate::Poly2;

const OK_ALL: &str = "exact=ok nonneg=ok valuation=ok fib=ok";

fn ok(flag: bool) -> &'static str {
    if flag {
        "ok"
    } else {
        "fail"
    }
}

/// `Some(num / den)` when exact, `None` when not divisible.
fn try_div(num: &Poly2, den: &Poly2) -> Result<Option<Poly2>, CheckError> {
    match num.exact_div(den) {
        Ok(q) => Ok(Some(q)),
        Err(PolyError::NotDivisible) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn poly_text(p: Option<Poly2>) -> String {
    p.map_or_else(|| "not a polynomial".to_string(), |p| p.to_string())
}

fn one() -> BigInt {
    BigInt::one()
}

fn signed_t_pow(n: usize) -> Poly2 {
    Poly2::monomial(sign(n), 0, n as u32)
}

impl Workbench {
    fn l(&self, n: usize) -> Result<Poly2, CheckError> {
        Ok(self.lucas.lucas_poly(n)?)
    }

    fn lf(&self, n: usize) -> Result<Poly2, CheckError> {
        Ok(self.lucas.lucas_factorial(n)?)
    }

    fn cl(&self, n: usize) -> Result<Poly2, CheckError> {
        Ok(self.lucas.lucas_catalan(n)?)
    }

    /// `{2n}! / ({n+2}! {n}!)` times `factor`, when that is a polynomial.
    fn central_ratio_l(&self, n: usize, factor: &Poly2) -> Result<Option<Poly2>, CheckError> {
        let num = factor * &self.lf(2 * n)?;
        try_div(&num, &(&self.lf(n + 2)? * &self.lf(n)?))
    }

    fn lemma_lucas_sides(&self, n: usize) -> Result<(Poly2, Poly2), CheckError> {
        let lhs = &self.l(2 * n)? * &self.l(n + 2)? - &self.l(2 * n + 2)? * &self.l(n)?;
        let rhs = &signed_t_pow(n) * &(&self.l(2)? * &self.l(n)?);
        Ok((lhs, rhs))
    }

    fn main_lucas_lhs(&self, n: usize) -> Result<Poly2, CheckError> {
        Ok(
            Poly2::product([&self.l(2 * n + 1)?, &self.l(2 * n)?, &self.cl(n)?])
                - Poly2::product([&self.l(n + 1)?, &self.l(n)?, &self.cl(n + 1)?]),
        )
    }

    fn main_lucas_binomial_rhs(&self, n: usize) -> Result<Poly2, CheckError> {
        Ok(Poly2::product([
            &signed_t_pow(n),
            &self.l(2)?,
            &self.lucas.lucanomial(2 * n + 1, n + 2)?,
        ]))
    }

    /// `{2n+1}{n+1}C_n + t{2n+1}{n-1}C_n - {n+1}C_{n+1}`
    fn quotient_lucas_lhs(&self, n: usize) -> Result<Poly2, CheckError> {
        let c = self.cl(n)?;
        let top = self.l(2 * n + 1)?;
        Ok(Poly2::product([&top, &self.l(n + 1)?, &c])
            + Poly2::product([&Poly2::t(), &top, &self.l(n - 1)?, &c])
            - &self.l(n + 1)? * &self.cl(n + 1)?)
    }

    pub fn verify_lemma_lucas(&self, n: usize) -> Result<IdentityReport, CheckError> {
        let (lhs, rhs) = self.lemma_lucas_sides(n)?;
        Ok(IdentityReport::new("lemma-lucas", &[("n", n)], lhs, rhs))
    }

    /// Checks the binomial right side and the intermediate product form.
    pub fn verify_main_lucas(&self, n: usize) -> Result<IdentityReport, CheckError> {
        let lhs = self.main_lucas_lhs(n)?;
        let factor = Poly2::product([
            &signed_t_pow(n),
            &self.l(2)?,
            &self.l(n)?,
            &self.l(2 * n + 1)?,
        ]);
        let product_form = poly_text(self.central_ratio_l(n, &factor)?);
        let rhs = agree(&[product_form, self.main_lucas_binomial_rhs(n)?.to_string()]);
        Ok(IdentityReport::new("main-lucas", &[("n", n)], lhs, rhs)
            .with_note("right-side factor {2} = s"))
    }

    /// The left side of the main identity divided by `{n}`, against the
    /// expanded quotient form and both closed forms.
    pub fn verify_quotient_lucas(&self, n: usize) -> Result<IdentityReport, CheckError> {
        let divided = poly_text(try_div(&self.main_lucas_lhs(n)?, &self.l(n)?)?);
        let lhs = agree(&[divided, self.quotient_lucas_lhs(n)?.to_string()]);
        let st = &signed_t_pow(n) * &self.l(2)?;
        let product_form = poly_text(self.central_ratio_l(n, &(&st * &self.l(2 * n + 1)?))?);
        let binomial_form = poly_text(try_div(
            &(&st * &self.lucas.lucanomial(2 * n + 1, n)?),
            &self.l(n + 2)?,
        )?);
        let rhs = agree(&[product_form, binomial_form]);
        Ok(IdentityReport::new("quotient-lucas", &[("n", n)], lhs, rhs))
    }

    /// `{2}lucanomial(2n+1,n)/{n+2}` and `{3}!{2n}!/({n+2}!{n}!)` are
    /// polynomials with nonnegative coefficients.
    pub fn verify_corollary_lucas(&self, n: usize) -> Result<IdentityReport, CheckError> {
        let two = self.l(2)?;
        let first = poly_class(&[
            try_div(
                &(&two * &self.lucas.lucanomial(2 * n + 1, n)?),
                &self.l(n + 2)?,
            )?,
            self.central_ratio_l(n, &(&two * &self.l(2 * n + 1)?))?,
            try_div(
                &Poly2::product([&two, &self.l(2 * n + 1)?, &self.cl(n)?]),
                &self.l(n + 2)?,
            )?,
        ]);
        let second = poly_class(&[
            self.central_ratio_l(n, &self.lf(3)?)?,
            try_div(
                &Poly2::product([&self.l(3)?, &two, &self.cl(n)?]),
                &self.l(n + 2)?,
            )?,
        ]);
        Ok(IdentityReport::new(
            "corollary-lucas",
            &[("n", n)],
            format!("{first}; {second}"),
            format!("{NONNEG_POLY}; {NONNEG_POLY}"),
        ))
    }

    /// Both sides of the Lucas lemma, main identity and quotient identity
    /// evaluated at `s = t = 1`, against the integer identities.
    pub fn verify_specialize_lucas(&self, n: usize) -> Result<IdentityReport, CheckError> {
        let ev = |p: &Poly2| p.eval(&one(), &one());
        let (ll, lr) = self.lemma_lucas_sides(n)?;
        let lucas = format!(
            "lemma {} {}; main {} {}; quotient {}",
            ev(&ll),
            ev(&lr),
            ev(&self.main_lucas_lhs(n)?),
            ev(&self.main_lucas_binomial_rhs(n)?),
            ev(&self.quotient_lucas_lhs(n)?),
        );
        let fib = self.verify_lemma_fib(n)?;
        let fib = format!(
            "lemma {} {}; main {} {}; quotient {}",
            fib.lhs,
            fib.rhs,
            self.main_fib_lhs(n)?,
            sign(n) * self.fib.fibonomial(2 * n + 1, n + 2)?,
            self.quotient_fib_lhs(n)?,
        );
        Ok(IdentityReport::new(
            "specialize-lucas",
            &[("n", n)],
            lucas,
            fib,
        ))
    }

    /// `{2n} = {n}{n+1} + t{n}{n-1}`
    pub fn verify_doubling_lucas(&self, n: usize) -> Result<IdentityReport, CheckError> {
        let rhs = &self.l(n)? * &(self.l(n + 1)? + Poly2::t() * self.l(n - 1)?);
        Ok(IdentityReport::new(
            "doubling-lucas",
            &[("n", n)],
            self.l(2 * n)?,
            rhs,
        ))
    }

    /// `prod_{d | n} P_d = {n}`
    pub fn verify_atoms(&self, n: usize) -> Result<IdentityReport, CheckError> {
        let atoms = divisors(n)
            .map(|d| self.lucas.lucas_atom(d))
            .collect::<Result<Vec<_>, _>>()?;
        let prod = Poly2::product(atoms.iter());
        Ok(IdentityReport::new("atoms", &[("n", n)], prod, self.l(n)?))
    }

    /// The atom product at `s = t = 1` is `F_n`.
    pub fn verify_atoms_fib(&self, n: usize) -> Result<IdentityReport, CheckError> {
        let mut prod = one();
        for d in divisors(n) {
            prod *= self.lucas.lucas_atom(d)?.eval(&one(), &one());
        }
        Ok(IdentityReport::new(
            "atoms-fib",
            &[("n", n)],
            prod,
            self.fib.fib(n)?,
        ))
    }

    /// Exact division, coefficient sign, valuation verdict and the
    /// specialization at `(1,1)`, for one factorial quotient.
    fn polynomiality(
        &self,
        id: &str,
        params: &[(&str, usize)],
        value: Result<Poly2, LucasError>,
        lists: (&[usize], &[usize], usize),
        fib_value: BigInt,
    ) -> Result<IdentityReport, CheckError> {
        let value = match value {
            Ok(p) => Some(p),
            Err(LucasError::InternalInconsistency(_)) => None,
            Err(e) => return Err(e.into()),
        };
        let (nums, dens, k) = lists;
        let valuation = factorial_quotient_report(nums, dens, k).verdict;
        let lhs = format!(
            "exact={} nonneg={} valuation={} fib={}",
            ok(value.is_some()),
            ok(value.as_ref().is_some_and(Poly2::has_nonneg_coeffs)),
            ok(valuation),
            ok(value
                .as_ref()
                .is_some_and(|p| p.eval(&one(), &one()) == fib_value)),
        );
        Ok(IdentityReport::new(id, params, lhs, OK_ALL))
    }

    pub fn verify_super_lucas(&self, m: usize, n: usize) -> Result<IdentityReport, CheckError> {
        self.polynomiality(
            "super-lucas",
            &[("m", m), ("n", n)],
            self.lucas.super_lucas(m, n),
            (&[2 * m, 2 * n], &[m, n, m + n], 1),
            self.fib.super_fibocatalan(m, n)?,
        )
    }

    pub fn verify_gen_lucas(&self, r: usize, n: usize) -> Result<IdentityReport, CheckError> {
        self.polynomiality(
            "gen-lucas",
            &[("r", r), ("n", n)],
            self.lucas.generalized_lucas_cat(r, n),
            (&[2 * r + 1, 2 * n], &[r, n, n + r + 1], 1),
            self.fib.generalized_fibocatalan(r, n)?,
        )
    }

    pub fn verify_super_lucas_kdiv(
        &self,
        m: usize,
        n: usize,
        k: usize,
    ) -> Result<IdentityReport, CheckError> {
        self.polynomiality(
            "super-lucas-kdiv",
            &[("m", m), ("n", n), ("k", k)],
            self.lucas.super_lucas_kdiv(m, n, k),
            (&[2 * m, 2 * n], &[m, n, m + n], k),
            self.fib.super_fibocatalan_kdiv(m, n, k)?,
        )
    }

    pub fn verify_lucanomial(&self, n: usize, k: usize) -> Result<IdentityReport, CheckError> {
        self.polynomiality(
            "lucanomial",
            &[("n", n), ("k", k)],
            self.lucas.lucanomial(n, k),
            (&[n], &[k, n - k], 1),
            self.fib.fibonomial(n, k)?,
        )
    }

    pub fn verify_catalan_lucas(&self, n: usize) -> Result<IdentityReport, CheckError> {
        self.polynomiality(
            "catalan-lucas",
            &[("n", n)],
            self.lucas.lucas_catalan(n),
            (&[2 * n], &[n, n + 1], 1),
            self.fib.fibocatalan(n)?,
        )
    }

    /// Fibonacci side is `binom(a+b, a)_F / F_{a+b}`.
    pub fn verify_ratcat_lucas(&self, a: usize, b: usize) -> Result<IdentityReport, CheckError> {
        let fib_value = self.fib.fibonomial(a + b, a)? / self.fib.fib(a + b)?;
        self.polynomiality(
            "ratcat-lucas",
            &[("a", a), ("b", b)],
            self.lucas.rational_lucas_catalan(a, b),
            (&[a + b - 1], &[a, b], 1),
            fib_value,
        )
    }

    /// `S{1,n} = {2}C_n`
    pub fn verify_special_lucas_m1(&self, n: usize) -> Result<IdentityReport, CheckError> {
        Ok(IdentityReport::new(
            "special-lucas-m1",
            &[("n", n)],
            self.lucas.super_lucas(1, n)?,
            &self.l(2)? * &self.cl(n)?,
        ))
    }

    /// `S{m,m} = lucanomial(2m, m)`
    pub fn verify_special_lucas_mm(&self, m: usize) -> Result<IdentityReport, CheckError> {
        Ok(IdentityReport::new(
            "special-lucas-mm",
            &[("m", m)],
            self.lucas.super_lucas(m, m)?,
            self.lucas.lucanomial(2 * m, m)?,
        ))
    }

    /// `S{m,m+1} = {2m+2}C_m`
    pub fn verify_special_lucas_mm1(&self, m: usize) -> Result<IdentityReport, CheckError> {
        Ok(IdentityReport::new(
            "special-lucas-mm1",
            &[("m", m)],
            self.lucas.super_lucas(m, m + 1)?,
            &self.l(2 * m + 2)? * &self.cl(m)?,
        ))
    }

    /// `S{2,n} = {4}{3}{2n}!/({n}!{n+2}!)`
    pub fn verify_special_lucas_m2(&self, n: usize) -> Result<IdentityReport, CheckError> {
        let rhs = poly_text(self.central_ratio_l(n, &(&self.l(4)? * &self.l(3)?))?);
        Ok(IdentityReport::new(
            "special-lucas-m2",
            &[("n", n)],
            self.lucas.super_lucas(2, n)?,
            rhs,
        ))
    }

    /// Generalized Lucas Catalan at `r = 0` is `C_n`.
    pub fn verify_special_lucas_r0(&self, n: usize) -> Result<IdentityReport, CheckError> {
        Ok(IdentityReport::new(
            "special-lucas-r0",
            &[("n", n)],
            self.lucas.generalized_lucas_cat(0, n)?,
            self.cl(n)?,
        ))
    }

    /// Generalized Lucas Catalan at `r = 1` is `({2}/{4}) S{2,n}`.
    pub fn verify_special_lucas_r1(&self, n: usize) -> Result<IdentityReport, CheckError> {
        let rhs = poly_text(try_div(
            &(&self.l(2)? * &self.lucas.super_lucas(2, n)?),
            &self.l(4)?,
        )?);
        Ok(IdentityReport::new(
            "special-lucas-r1",
            &[("n", n)],
            self.lucas.generalized_lucas_cat(1, n)?,
            rhs,
        ))
    }
}

fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}
