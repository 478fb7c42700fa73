//! Bounded search for Fibonacci analogues of classical convolution
//! identities: substitute the Fibonacci families, try each sign weight, and
//! record where the candidate holds. Nothing is claimed beyond the grid.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::classical::{alternating, Layer};
use super::{CheckError, Workbench};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("unknown template `{0}` (expected von_szily_F, mikic_super_F or mikic_catalan_F)")]
    UnknownTemplate(String),
    #[error("unknown weight family `{0}` (expected alt, tri, square or choose2)")]
    UnknownWeightFamily(String),
    #[error("template {template} takes {expected} ranges, got {got}")]
    Arity {
        template: Template,
        expected: usize,
        got: usize,
    },
    #[error(transparent)]
    Check(#[from] CheckError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Template {
    VonSzilyF,
    MikicSuperF,
    MikicCatalanF,
}

impl Template {
    pub const ALL: [Template; 3] = [
        Template::VonSzilyF,
        Template::MikicSuperF,
        Template::MikicCatalanF,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Template::VonSzilyF => "von_szily_F",
            Template::MikicSuperF => "mikic_super_F",
            Template::MikicCatalanF => "mikic_catalan_F",
        }
    }

    pub fn params(self) -> &'static [&'static str] {
        match self {
            Template::VonSzilyF => &["m", "n"],
            Template::MikicSuperF => &["n", "l"],
            Template::MikicCatalanF => &["n"],
        }
    }
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Template {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Template::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| SearchError::UnknownTemplate(s.to_string()))
    }
}

/// The fixed catalog of sign weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightFamily {
    /// `(-1)^k`
    Alternating,
    /// `(-1)^{k(k+1)/2}`
    Triangular,
    /// `(-1)^{k^2}`
    Square,
    /// `(-1)^{binom(k,2)}`
    Choose2,
}

impl WeightFamily {
    pub const ALL: [WeightFamily; 4] = [
        WeightFamily::Alternating,
        WeightFamily::Triangular,
        WeightFamily::Square,
        WeightFamily::Choose2,
    ];

    pub fn id(self) -> &'static str {
        match self {
            WeightFamily::Alternating => "alt",
            WeightFamily::Triangular => "tri",
            WeightFamily::Square => "square",
            WeightFamily::Choose2 => "choose2",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            WeightFamily::Alternating => "(-1)^k",
            WeightFamily::Triangular => "(-1)^(k(k+1)/2)",
            WeightFamily::Square => "(-1)^(k^2)",
            WeightFamily::Choose2 => "(-1)^binom(k,2)",
        }
    }

    fn weight(self) -> fn(i64) -> i64 {
        match self {
            WeightFamily::Alternating => alternating,
            WeightFamily::Triangular => |k| alternating(k * (k + 1) / 2),
            WeightFamily::Square => |k| alternating(k * k),
            WeightFamily::Choose2 => |k| alternating(k * (k - 1) / 2),
        }
    }
}

impl fmt::Display for WeightFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Accepts the short id or the formula text.
impl FromStr for WeightFamily {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        WeightFamily::ALL
            .into_iter()
            .find(|w| w.id() == compact || w.formula() == compact)
            .ok_or_else(|| SearchError::UnknownWeightFamily(s.to_string()))
    }
}

/// One inclusive range per template parameter.
pub type SearchRanges = Vec<RangeInclusive<usize>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub template: Template,
    pub weights: WeightFamily,
    pub ranges: Vec<(String, RangeInclusive<usize>)>,
    /// Points where the candidate identity held exactly.
    pub holding: Vec<Vec<usize>>,
    /// `(point, lhs - rhs)` wherever it did not.
    pub residuals: Vec<(Vec<usize>, BigInt)>,
}

impl SearchOutcome {
    pub fn tested(&self) -> usize {
        self.holding.len() + self.residuals.len()
    }
}

fn grid(ranges: &[RangeInclusive<usize>]) -> Vec<Vec<usize>> {
    ranges.iter().fold(vec![Vec::new()], |acc, r| {
        acc.iter()
            .flat_map(|prefix| {
                r.clone().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect()
    })
}

/// Evaluates a Fibonacci candidate over every grid point.
pub fn search_fib_analogue(
    wb: &Workbench,
    template: &str,
    weights: &str,
    ranges: &[RangeInclusive<usize>],
) -> Result<SearchOutcome, SearchError> {
    let template: Template = template.parse()?;
    let weights: WeightFamily = weights.parse()?;
    let names = template.params();
    if ranges.len() != names.len() {
        return Err(SearchError::Arity {
            template,
            expected: names.len(),
            got: ranges.len(),
        });
    }
    let w = weights.weight();
    let mut outcome = SearchOutcome {
        template,
        weights,
        ranges: names
            .iter()
            .map(|n| n.to_string())
            .zip(ranges.iter().cloned())
            .collect(),
        holding: Vec::new(),
        residuals: Vec::new(),
    };
    for point in grid(ranges) {
        let (lhs, rhs) = match (template, point.as_slice()) {
            (Template::VonSzilyF, &[m, n]) => wb.von_szily_sides(Layer::Fibonacci, w, m, n)?,
            (Template::MikicSuperF, &[n, l]) => wb.mikic_super_sides(Layer::Fibonacci, w, n, l)?,
            (Template::MikicCatalanF, &[n]) => wb.mikic_catalan_sides(Layer::Fibonacci, w, n)?,
            _ => unreachable!("grid arity matches template"),
        };
        let residual = lhs - rhs;
        if residual.is_zero() {
            outcome.holding.push(point);
        } else {
            outcome.residuals.push((point, residual));
        }
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn von_szily_naive_residual() {
        let wb = Workbench::default();
        let out = search_fib_analogue(&wb, "von_szily_F", "(-1)^k", &[1..=1, 1..=1]).unwrap();
        assert!(out.holding.is_empty());
        assert_eq!(out.residuals, vec![(vec![1, 1], BigInt::from(-2))]);
    }

    #[test]
    fn partitions_grid() {
        let wb = Workbench::default();
        for t in Template::ALL {
            for w in WeightFamily::ALL {
                let ranges: Vec<_> = t.params().iter().map(|_| 0..=4).collect();
                let out = search_fib_analogue(&wb, t.id(), w.id(), &ranges).unwrap();
                assert_eq!(out.tested(), 5usize.pow(ranges.len() as u32));
            }
        }
    }

    #[test]
    fn empty_range_gives_empty_outcome() {
        let wb = Workbench::default();
        #[allow(clippy::reversed_empty_ranges)]
        let out = search_fib_analogue(&wb, "mikic_catalan_F", "alt", &[3..=2]).unwrap();
        assert_eq!(out.tested(), 0);
    }

    #[test]
    fn unknown_ids() {
        let wb = Workbench::default();
        assert_eq!(
            search_fib_analogue(&wb, "nope", "alt", &[]),
            Err(SearchError::UnknownTemplate("nope".into()))
        );
        assert_eq!(
            search_fib_analogue(&wb, "mikic_catalan_F", "(-1)^k^3", &[0..=1]),
            Err(SearchError::UnknownWeightFamily("(-1)^k^3".into()))
        );
        assert!(matches!(
            search_fib_analogue(&wb, "von_szily_F", "alt", &[0..=1]),
            Err(SearchError::Arity {
                expected: 2,
                got: 1,
                ..
            })
        ));
    }

    #[test]
    fn weights_on_negative_k() {
        let tri = WeightFamily::Triangular.weight();
        let c2 = WeightFamily::Choose2.weight();
        // k(k+1)/2 at k = -1, -2, -3 is 0, 1, 3
        assert_eq!([tri(-1), tri(-2), tri(-3)], [1, -1, -1]);
        // k(k-1)/2 at k = -1, -2 is 1, 3
        assert_eq!([c2(-1), c2(-2), c2(2)], [-1, -1, -1]);
    }
}
