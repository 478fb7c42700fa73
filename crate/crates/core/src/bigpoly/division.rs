//! Exact division, `s`-major.
//!
//! Operands are viewed as polynomials in `s` whose coefficients are
//! polynomials in `t`. Each step cancels the top `s`-row of the running
//! remainder against the top `s`-row of the divisor, which requires an exact
//! univariate division in `t` (itself requiring exact coefficient division).

use std::collections::BTreeMap;

use super::{Coefficient, Monomial, Poly, PolyError};

/// Sparse univariate polynomial in `t`, keyed by degree.
type Row<C> = BTreeMap<u32, C>;

fn rows_of<C: Coefficient>(p: &Poly<C>) -> BTreeMap<u32, Row<C>> {
    let mut rows: BTreeMap<u32, Row<C>> = BTreeMap::new();
    for (m, c) in p.terms() {
        rows.entry(m.s).or_default().insert(m.t, c.clone());
    }
    rows
}

fn row_exact_div<C: Coefficient>(num: &Row<C>, den: &Row<C>) -> Option<Row<C>> {
    let (&den_deg, den_lead) = den.last_key_value()?;
    let mut rem = num.clone();
    let mut quot = Row::new();
    while let Some((&deg, lead)) = rem.last_key_value() {
        if deg < den_deg {
            return None;
        }
        let q = lead.exact_div(den_lead)?;
        let shift = deg - den_deg;
        for (&d, c) in den {
            let slot = rem.entry(d + shift).or_insert_with(C::zero);
            slot.sub_product(&q, c);
            if slot.is_zero() {
                rem.remove(&(d + shift));
            }
        }
        quot.insert(shift, q);
    }
    Some(quot)
}

impl<C: Coefficient> Poly<C> {
    /// Returns `q` with `q * divisor == self`.
    ///
    /// Fails with [`PolyError::NotDivisible`] unless the quotient exists in
    /// the polynomial ring over `C`.
    pub fn exact_div(&self, divisor: &Poly<C>) -> Result<Poly<C>, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if divisor.is_one() {
            return Ok(self.clone());
        }
        let den = rows_of(divisor);
        let (&den_s, den_lead) = den.last_key_value().expect("nonzero divisor");
        let mut rem = rows_of(self);
        let mut quot = Poly::zero();

        while let Some((&s_deg, lead_row)) = rem.last_key_value() {
            if s_deg < den_s {
                return Err(PolyError::NotDivisible);
            }
            let q_row = row_exact_div(lead_row, den_lead).ok_or(PolyError::NotDivisible)?;
            let shift = s_deg - den_s;
            for (&ds, d_row) in &den {
                let target = rem.entry(ds + shift).or_default();
                for (&qt, qc) in &q_row {
                    for (&dt, dc) in d_row {
                        let slot = target.entry(qt + dt).or_insert_with(C::zero);
                        slot.sub_product(qc, dc);
                        if slot.is_zero() {
                            target.remove(&(qt + dt));
                        }
                    }
                }
                if target.is_empty() {
                    rem.remove(&(ds + shift));
                }
            }
            for (qt, qc) in q_row {
                quot.add_term(Monomial::new(shift, qt), &qc);
            }
        }
        Ok(quot)
    }

    /// True iff `divisor` divides `self` exactly.
    pub fn is_divisible_by(&self, divisor: &Poly<C>) -> bool {
        self.exact_div(divisor).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::Ratio;

    type P = Poly<BigInt>;

    fn p(text: &str) -> P {
        text.parse().unwrap()
    }

    #[test]
    fn divides_out_monomial() {
        let q = p("s^3 + 2*s*t").exact_div(&P::s()).unwrap();
        assert_eq!(q, p("s^2 + 2*t"));
        assert_eq!(&q * &P::s(), p("s^3 + 2*s*t"));
    }

    #[test]
    fn divides_product_back() {
        let q = p("s^4 + 4*s^2*t + 3*t^2").exact_div(&p("s^2 + t")).unwrap();
        assert_eq!(q, p("s^2 + 3*t"));
    }

    #[test]
    fn reports_not_divisible() {
        assert_eq!(p("s + t").exact_div(&P::s()), Err(PolyError::NotDivisible));
        assert_eq!(
            p("s^2 + t").exact_div(&p("s + 1")),
            Err(PolyError::NotDivisible)
        );
        // quotient exists over Q but not over Z
        assert_eq!(
            p("s + 1").exact_div(&p("2*s + 2")),
            Err(PolyError::NotDivisible)
        );
        assert_eq!(p("t").exact_div(&p("t^2")), Err(PolyError::NotDivisible));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(P::s().exact_div(&P::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn zero_divided_is_zero() {
        assert!(P::zero().exact_div(&p("s + t")).unwrap().is_zero());
    }

    #[test]
    fn non_homogeneous_and_negative_coefficients() {
        let a = p("3*s^2*t - s + 7*t^3 - 2");
        let b = p("-s*t + 5*t^2 + 1");
        assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        assert_eq!((&a * &b).exact_div(&a).unwrap(), b);
        let c = &(&a * &b) + &P::t();
        assert_eq!(c.exact_div(&b), Err(PolyError::NotDivisible));
    }

    #[test]
    fn rational_coefficients_divide_over_the_field() {
        let a: Poly<Ratio<i64>> = "s + 1".parse().unwrap();
        let b: Poly<Ratio<i64>> = "2*s + 2".parse().unwrap();
        assert_eq!(a.exact_div(&b).unwrap().to_string(), "1/2");
    }
}
