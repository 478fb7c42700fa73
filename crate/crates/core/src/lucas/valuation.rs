use num_integer::Integer;

/// Index of the first `i` for which atom `P_d` divides `{i*k}`, i.e. the
/// spacing of `P_d` factors inside `{n:k}! = {k}{2k}...{nk}`.
pub fn atom_period(d: usize, k: usize) -> usize {
    d / d.gcd(&k)
}

/// Exponent of atom `P_d` (`d >= 2`) in `{n:k}!`.
pub fn atom_valuation(n: usize, d: usize, k: usize) -> u64 {
    (n / atom_period(d, k)) as u64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValuationRow {
    pub d: usize,
    /// Exponent of `P_d` in the numerator product.
    pub numerator: u64,
    /// Exponent of `P_d` in the denominator product.
    pub denominator: u64,
}

impl ValuationRow {
    pub fn holds(&self) -> bool {
        self.numerator >= self.denominator
    }
}

/// Atom-by-atom comparison of `prod {n_i:k}!` against `prod {m_j:k}!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationReport {
    pub numerators: Vec<usize>,
    pub denominators: Vec<usize>,
    pub k: usize,
    pub rows: Vec<ValuationRow>,
    /// True iff every row holds, i.e. the quotient is a polynomial.
    pub verdict: bool,
}

impl ValuationReport {
    pub fn first_failure(&self) -> Option<&ValuationRow> {
        self.rows.iter().find(|r| !r.holds())
    }
}

/// Decides polynomiality of a quotient of `k`-divisible Lucas factorials
/// from atom exponents alone, without touching any polynomial.
///
/// Rows cover every `d` from 2 up to the largest Lucas index involved
/// (`max(indices) * k`); beyond that every exponent is zero.
///
/// # Panics
///
/// If `k == 0`.
pub fn factorial_quotient_report(nums: &[usize], dens: &[usize], k: usize) -> ValuationReport {
    assert!(k >= 1, "k-divisible factorials need k >= 1");
    let top = nums.iter().chain(dens).copied().max().unwrap_or(0) * k;
    let rows: Vec<ValuationRow> = (2..=top)
        .map(|d| ValuationRow {
            d,
            numerator: nums.iter().map(|&n| atom_valuation(n, d, k)).sum(),
            denominator: dens.iter().map(|&n| atom_valuation(n, d, k)).sum(),
        })
        .collect();
    let verdict = rows.iter().all(ValuationRow::holds);
    ValuationReport {
        numerators: nums.to_vec(),
        denominators: dens.to_vec(),
        k,
        rows,
        verdict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_factorial_valuation_is_floor() {
        for n in 0..40 {
            for d in 2..45 {
                assert_eq!(atom_valuation(n, d, 1), (n / d) as u64);
            }
        }
    }

    #[test]
    fn period_matches_brute_force_divisibility() {
        // P_d divides {ik} iff d | ik
        for k in 1..6 {
            for d in 2..30 {
                let first = (1..).find(|i| (i * k) % d == 0).unwrap();
                assert_eq!(atom_period(d, k), first, "d={d} k={k}");
                for n in 0..25 {
                    let count = (1..=n).filter(|i| (i * k) % d == 0).count() as u64;
                    assert_eq!(atom_valuation(n, d, k), count);
                }
            }
        }
    }

    #[test]
    fn central_quotient_fails_at_two() {
        let r = factorial_quotient_report(&[4], &[2, 4], 1);
        assert!(!r.verdict);
        let bad = r.first_failure().unwrap();
        assert_eq!((bad.d, bad.numerator, bad.denominator), (2, 2, 3));
        assert_eq!(r.rows.len(), 3);
    }

    #[test]
    fn super_catalan_lists_hold() {
        for m in 1..=10 {
            for n in 1..=10 {
                assert!(factorial_quotient_report(&[2 * m, 2 * n], &[m, n, m + n], 1).verdict);
            }
        }
    }

    #[test]
    fn generalized_lists_hold() {
        for r in 0..=10 {
            for n in 0..=10 {
                assert!(
                    factorial_quotient_report(&[2 * r + 1, 2 * n], &[r, n, n + r + 1], 1).verdict
                );
            }
        }
    }

    #[test]
    fn empty_lists() {
        let r = factorial_quotient_report(&[], &[], 3);
        assert!(r.verdict);
        assert!(r.rows.is_empty());
    }

    #[test]
    fn rows_extend_to_largest_lucas_index() {
        let r = factorial_quotient_report(&[4], &[2, 2], 3);
        assert_eq!(r.rows.first().unwrap().d, 2);
        assert_eq!(r.rows.last().unwrap().d, 12);
        assert!(r.verdict);
    }
}
