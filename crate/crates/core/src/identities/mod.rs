//! Executable checks of the identities, integrality claims and polynomiality
//! claims relating the Fibonacci, Lucas and classical Catalan families.
//!
//! Every check produces an [`IdentityReport`] comparing two canonical texts
//! (a decimal integer, a reduced fraction, a polynomial in canonical form,
//! or a short property summary). The verdict is exactly text equality.

mod classical;
mod fib_checks;
mod lucas_checks;
mod search;
mod suite;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::bigpoly::PolyError;
use crate::fib::NumericError;
use crate::lucas::LucasError;
use crate::{FibCache, LucasCache, Poly2};

pub use search::{
    search_fib_analogue, SearchError, SearchOutcome, SearchRanges, Template, WeightFamily,
};
pub use suite::{
    run_suite, run_suite_on, verify_polynomiality_theorems, Family, SuiteConfig, SuiteReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Lucas(#[from] LucasError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// What a report is expected to show.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Expectation {
    /// The claim is asserted to hold.
    Holds,
    /// The claim is asserted to fail at this point (a documented contrast).
    Fails,
    /// Recorded for information; no claim is made either way.
    Unclaimed,
}

impl Expectation {
    /// Expected verdict, `None` when unclaimed.
    pub fn verdict(self) -> Option<bool> {
        match self {
            Expectation::Holds => Some(true),
            Expectation::Fails => Some(false),
            Expectation::Unclaimed => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Pass,
    Fail,
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: String,
    pub params: Vec<(String, usize)>,
    pub lhs: String,
    pub rhs: String,
    /// `lhs == rhs`
    pub verdict: bool,
    pub expected: Expectation,
    pub note: Option<String>,
}

impl IdentityReport {
    pub fn new(id: &str, params: &[(&str, usize)], lhs: impl ToString, rhs: impl ToString) -> Self {
        let lhs = lhs.to_string();
        let rhs = rhs.to_string();
        IdentityReport {
            id: id.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            verdict: lhs == rhs,
            lhs,
            rhs,
            expected: Expectation::Holds,
            note: None,
        }
    }

    pub fn expecting(mut self, expected: Expectation) -> Self {
        self.expected = expected;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Report for a point whose evaluation failed outright.
    pub fn errored(id: &str, params: &[(&str, usize)], err: &CheckError) -> Self {
        let mut r = Self::new(id, params, format!("error: {err}"), "(not evaluated)");
        r.verdict = false;
        r
    }

    pub fn outcome(&self) -> Outcome {
        match self.expected.verdict() {
            None => Outcome::Info,
            Some(v) if v == self.verdict => Outcome::Pass,
            Some(_) => Outcome::Fail,
        }
    }

    pub fn param_values(&self) -> Vec<usize> {
        self.params.iter().map(|(_, v)| *v).collect()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.outcome() {
            Outcome::Pass if self.expected == Expectation::Fails => "PASS (expected failure)",
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Info => "INFO",
        };
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(
            f,
            "{tag} {} [{}]: {} {} {}",
            self.id,
            params.join(", "),
            self.lhs,
            if self.verdict { "==" } else { "!=" },
            self.rhs
        )?;
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

/// Shared caches for both layers.
#[derive(Default)]
pub struct Workbench {
    pub fib: FibCache,
    pub lucas: LucasCache,
}

impl Workbench {
    pub fn new(max_index: usize) -> Self {
        Workbench {
            fib: FibCache::default(),
            lucas: LucasCache::new(max_index),
        }
    }
}

/// `(-1)^n`
pub(crate) fn sign(n: usize) -> BigInt {
    if n.is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

pub(crate) fn rational(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

/// The shared value when every form agrees, otherwise all forms separated
/// by `" | "` (which can never equal a single canonical value).
pub(crate) fn agree(forms: &[String]) -> String {
    if forms.windows(2).all(|w| w[0] == w[1]) {
        forms.first().cloned().unwrap_or_default()
    } else {
        forms.join(" | ")
    }
}

pub(crate) const POSITIVE_INTEGER: &str = "positive integer";
pub(crate) const NONNEG_POLY: &str = "nonnegative polynomial";

/// Integrality class of a value computed in one or more ways.
pub(crate) fn integer_class(forms: &[BigRational]) -> String {
    let texts: Vec<String> = forms.iter().map(|r| r.to_string()).collect();
    if !texts.windows(2).all(|w| w[0] == w[1]) {
        return format!("forms disagree: {}", texts.join(" | "));
    }
    let v = &forms[0];
    if !v.is_integer() {
        format!("non-integer {v}")
    } else if *v > BigRational::from_integer(BigInt::from(0)) {
        POSITIVE_INTEGER.to_string()
    } else {
        format!("non-positive integer {v}")
    }
}

/// Polynomiality class of a value computed in one or more ways; `None`
/// marks a form whose exact division failed.
pub(crate) fn poly_class(forms: &[Option<Poly2>]) -> String {
    if forms.iter().any(Option::is_none) {
        return "not a polynomial".to_string();
    }
    let polys: Vec<&Poly2> = forms.iter().flatten().collect();
    if !polys.windows(2).all(|w| w[0] == w[1]) {
        let texts: Vec<String> = polys.iter().map(|p| p.to_string()).collect();
        return format!("forms disagree: {}", texts.join(" | "));
    }
    if polys[0].has_nonneg_coeffs() {
        NONNEG_POLY.to_string()
    } else {
        "polynomial with negative coefficients".to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_is_text_equality() {
        let r = IdentityReport::new("x", &[("n", 1)], "5", "5");
        assert!(r.verdict);
        assert_eq!(r.outcome(), Outcome::Pass);
        let r = IdentityReport::new("x", &[("n", 1)], "5", "6").expecting(Expectation::Fails);
        assert!(!r.verdict);
        assert_eq!(r.outcome(), Outcome::Pass);
        let r = IdentityReport::new("x", &[], "5", "6");
        assert_eq!(r.outcome(), Outcome::Fail);
        assert_eq!(
            r.clone().expecting(Expectation::Unclaimed).outcome(),
            Outcome::Info
        );
    }

    #[test]
    fn agree_joins_disagreeing_forms() {
        assert_eq!(agree(&["3".into(), "3".into()]), "3");
        assert_eq!(agree(&["3".into(), "4".into()]), "3 | 4");
    }

    #[test]
    fn classes() {
        let r = |a: i64, b: i64| rational(BigInt::from(a), BigInt::from(b));
        assert_eq!(integer_class(&[r(10, 2), r(5, 1)]), POSITIVE_INTEGER);
        assert_eq!(integer_class(&[r(10, 4)]), "non-integer 5/2");
        assert_eq!(integer_class(&[r(1, 1), r(2, 1)]), "forms disagree: 1 | 2");
        assert_eq!(integer_class(&[r(-3, 1)]), "non-positive integer -3");
        let p = |s: &str| Some(s.parse::<Poly2>().unwrap());
        assert_eq!(poly_class(&[p("s + t"), p("t + s")]), NONNEG_POLY);
        assert_eq!(
            poly_class(&[p("s - t")]),
            "polynomial with negative coefficients"
        );
        assert_eq!(poly_class(&[p("s"), None]), "not a polynomial");
    }
}
