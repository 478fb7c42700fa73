//! Integer specializations: Fibonacci numbers and factorials, fibonomials,
//! the FiboCatalan families, and the classical Catalan-type numbers they
//! generalize.
//!
//! Every "integer" family is an exact factorial quotient; a nonzero
//! remainder is reported as [`NumericError::NotDivisible`] rather than
//! rounded away.

mod fast_doubling;

use std::fmt::{Debug, Display};
use std::sync::{PoisonError, RwLock};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed};
use thiserror::Error;

pub use fast_doubling::fibonacci;

pub const DEFAULT_GUARD: usize = 10_000;

/// Integer types the Fibonacci layer can run on. Fixed-width types report
/// [`NumericError::Overflow`] instead of wrapping.
pub trait IntScalar:
    Integer
    + Signed
    + Clone
    + Debug
    + Display
    + FromPrimitive
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + Send
    + Sync
    + 'static
{
}

impl<T> IntScalar for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + FromPrimitive
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + Send
        + Sync
        + 'static
{
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("index {index} exceeds the guard {max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("{0} is not an integer")]
    NotDivisible(String),
    #[error("gcd({a}, {b}) != 1")]
    NotCoprime { a: usize, b: usize },
    #[error("arithmetic overflow")]
    Overflow,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub(crate) fn mul<T: IntScalar>(a: &T, b: &T) -> Result<T, NumericError> {
    a.checked_mul(b).ok_or(NumericError::Overflow)
}

fn add<T: IntScalar>(a: &T, b: &T) -> Result<T, NumericError> {
    a.checked_add(b).ok_or(NumericError::Overflow)
}

fn product<'a, T: IntScalar + 'a>(xs: impl IntoIterator<Item = &'a T>) -> Result<T, NumericError> {
    xs.into_iter().try_fold(T::one(), |acc, x| mul(&acc, x))
}

fn small<T: IntScalar>(v: usize) -> Result<T, NumericError> {
    T::from_usize(v).ok_or(NumericError::Overflow)
}

/// `num / den`, failing unless the division is exact.
fn exact<T: IntScalar>(num: T, den: &T, what: impl FnOnce() -> String) -> Result<T, NumericError> {
    if den.is_zero() {
        return Err(NumericError::NotDivisible(what()));
    }
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(NumericError::NotDivisible(what()))
    }
}

struct Tables<T> {
    fib: Vec<T>,
    fib_factorial: Vec<T>,
    factorial: Vec<T>,
}

/// Memo store for `F_n`, `F_n!` and `n!`, bounded by a guard on indices.
pub struct FibTable<T> {
    guard: usize,
    tables: RwLock<Tables<T>>,
}

impl<T: IntScalar> Default for FibTable<T> {
    fn default() -> Self {
        Self::new(DEFAULT_GUARD)
    }
}

impl<T: IntScalar> FibTable<T> {
    pub fn new(guard: usize) -> Self {
        FibTable {
            guard,
            tables: RwLock::new(Tables {
                fib: vec![T::zero(), T::one()],
                fib_factorial: vec![T::one()],
                factorial: vec![T::one()],
            }),
        }
    }

    pub fn guard(&self) -> usize {
        self.guard
    }

    fn check(&self, index: usize) -> Result<(), NumericError> {
        if index > self.guard {
            Err(NumericError::IndexOutOfRange {
                index,
                max: self.guard,
            })
        } else {
            Ok(())
        }
    }

    fn lookup(
        &self,
        n: usize,
        pick: impl Fn(&Tables<T>) -> &Vec<T>,
        fill: impl FnOnce(&mut Tables<T>) -> Result<(), NumericError>,
    ) -> Result<T, NumericError> {
        self.check(n)?;
        {
            let tables = self.tables.read().unwrap_or_else(PoisonError::into_inner);
            if let Some(v) = pick(&tables).get(n) {
                return Ok(v.clone());
            }
        }
        let mut tables = self.tables.write().unwrap_or_else(PoisonError::into_inner);
        fill(&mut tables)?;
        Ok(pick(&tables)[n].clone())
    }

    /// `F_n` by fast doubling; cached values are reused when available.
    pub fn fib(&self, n: usize) -> Result<T, NumericError> {
        self.check(n)?;
        {
            let tables = self.tables.read().unwrap_or_else(PoisonError::into_inner);
            if let Some(v) = tables.fib.get(n) {
                return Ok(v.clone());
            }
        }
        fibonacci(n as u64)
    }

    /// `F_n! = F_n F_{n-1} ... F_1`, with `F_0! = 1`.
    pub fn fib_factorial(&self, n: usize) -> Result<T, NumericError> {
        self.lookup(
            n,
            |t| &t.fib_factorial,
            |t| {
                while t.fib.len() <= n {
                    let len = t.fib.len();
                    let next = add(&t.fib[len - 1], &t.fib[len - 2])?;
                    t.fib.push(next);
                }
                while t.fib_factorial.len() <= n {
                    let len = t.fib_factorial.len();
                    let next = mul(&t.fib[len], &t.fib_factorial[len - 1])?;
                    t.fib_factorial.push(next);
                }
                Ok(())
            },
        )
    }

    /// Classical `n!`.
    pub fn factorial(&self, n: usize) -> Result<T, NumericError> {
        self.lookup(
            n,
            |t| &t.factorial,
            |t| {
                while t.factorial.len() <= n {
                    let len = t.factorial.len();
                    let next = mul(&small::<T>(len)?, &t.factorial[len - 1])?;
                    t.factorial.push(next);
                }
                Ok(())
            },
        )
    }

    /// `F_{k}F_{2k}...F_{nk}`
    pub fn kdiv_fib_factorial(&self, n: usize, k: usize) -> Result<T, NumericError> {
        if k == 0 {
            return Err(NumericError::InvalidArgument("k must be at least 1".into()));
        }
        if k == 1 {
            return self.fib_factorial(n);
        }
        self.check(n.saturating_mul(k))?;
        let fibs = (1..=n)
            .map(|i| self.fib(i * k))
            .collect::<Result<Vec<_>, _>>()?;
        product(&fibs)
    }

    fn quotient(
        &self,
        factorial: impl Fn(usize) -> Result<T, NumericError>,
        nums: &[usize],
        dens: &[usize],
        what: impl FnOnce() -> String,
    ) -> Result<T, NumericError> {
        let num = nums
            .iter()
            .map(|&n| factorial(n))
            .collect::<Result<Vec<_>, _>>()?;
        let den = dens
            .iter()
            .map(|&n| factorial(n))
            .collect::<Result<Vec<_>, _>>()?;
        exact(product(&num)?, &product(&den)?, what)
    }

    fn fib_quotient(
        &self,
        nums: &[usize],
        dens: &[usize],
        what: impl FnOnce() -> String,
    ) -> Result<T, NumericError> {
        self.quotient(|n| self.fib_factorial(n), nums, dens, what)
    }

    fn classical_quotient(
        &self,
        nums: &[usize],
        dens: &[usize],
        what: impl FnOnce() -> String,
    ) -> Result<T, NumericError> {
        self.quotient(|n| self.factorial(n), nums, dens, what)
    }

    /// `binom(n, k)_F = F_n! / (F_k! F_{n-k}!)`
    pub fn fibonomial(&self, n: usize, k: usize) -> Result<T, NumericError> {
        if k > n {
            return Err(NumericError::InvalidArgument(format!(
                "fibonomial needs k <= n, got k={k}, n={n}"
            )));
        }
        self.fib_quotient(&[n], &[k, n - k], || format!("fibonomial({n},{k})"))
    }

    /// `{n:k}_F! / ({m:k}_F! {n-m:k}_F!)`
    pub fn kdiv_fibonomial(&self, n: usize, m: usize, k: usize) -> Result<T, NumericError> {
        if m > n {
            return Err(NumericError::InvalidArgument(format!(
                "fibonomial needs m <= n, got m={m}, n={n}"
            )));
        }
        self.quotient(
            |i| self.kdiv_fib_factorial(i, k),
            &[n],
            &[m, n - m],
            || format!("k-divisible fibonomial({n},{m};{k})"),
        )
    }

    /// `C_{n,F} = binom(2n, n)_F / F_{n+1}`
    pub fn fibocatalan(&self, n: usize) -> Result<T, NumericError> {
        exact(self.fibonomial(2 * n, n)?, &self.fib(n + 1)?, || {
            format!("C_{{{n},F}}")
        })
    }

    /// `S(m,n)_F = F_{2m}! F_{2n}! / (F_m! F_n! F_{m+n}!)`; `S(0,0)_F = 1`.
    pub fn super_fibocatalan(&self, m: usize, n: usize) -> Result<T, NumericError> {
        self.fib_quotient(&[2 * m, 2 * n], &[m, n, m + n], || format!("S({m},{n})_F"))
    }

    /// Fibonacci specialization of `S{m,n:k}`.
    pub fn super_fibocatalan_kdiv(&self, m: usize, n: usize, k: usize) -> Result<T, NumericError> {
        self.quotient(
            |i| self.kdiv_fib_factorial(i, k),
            &[2 * m, 2 * n],
            &[m, n, m + n],
            || format!("S({m},{n}:{k})_F"),
        )
    }

    /// `J_{r,F} F_{2n}! / (F_n! F_{n+r+1}!)` with `J_{r,F} = F_{2r+1}! / F_r!`.
    pub fn generalized_fibocatalan(&self, r: usize, n: usize) -> Result<T, NumericError> {
        self.fib_quotient(&[2 * r + 1, 2 * n], &[r, n, n + r + 1], || {
            format!("generalized FiboCatalan(r={r}, n={n})")
        })
    }

    /// `binom(n, k)`
    pub fn binomial(&self, n: usize, k: usize) -> Result<T, NumericError> {
        if k > n {
            return Ok(T::zero());
        }
        self.classical_quotient(&[n], &[k, n - k], || format!("binom({n},{k})"))
    }

    /// `C_n = binom(2n, n) / (n+1)`
    pub fn catalan(&self, n: usize) -> Result<T, NumericError> {
        exact(self.binomial(2 * n, n)?, &small(n + 1)?, || {
            format!("C_{n}")
        })
    }

    /// `S(m,n) = (2m)! (2n)! / (m! n! (m+n)!)`; `S(0,0) = 1`.
    pub fn super_catalan(&self, m: usize, n: usize) -> Result<T, NumericError> {
        self.classical_quotient(&[2 * m, 2 * n], &[m, n, m + n], || format!("S({m},{n})"))
    }

    /// `(2n)! / (n! (n+r+1)!)` as a reduced fraction. Multiply by
    /// [`Self::gessel_j`] for the integer generalized Catalan number.
    pub fn gen_catalan(&self, r: usize, n: usize) -> Result<Ratio<T>, NumericError> {
        let num = self.factorial(2 * n)?;
        let den = mul(&self.factorial(n)?, &self.factorial(n + r + 1)?)?;
        Ok(Ratio::new(num, den))
    }

    /// `J_r = (2r+1)! / r!`
    pub fn gessel_j(&self, r: usize) -> Result<T, NumericError> {
        self.classical_quotient(&[2 * r + 1], &[r], || format!("J_{r}"))
    }

    /// `J_r (2n)! / (n! (n+r+1)!)`, which is always an integer.
    pub fn generalized_catalan(&self, r: usize, n: usize) -> Result<T, NumericError> {
        self.classical_quotient(&[2 * r + 1, 2 * n], &[r, n, n + r + 1], || {
            format!("generalized Catalan(r={r}, n={n})")
        })
    }

    /// `Cat(a,b) = binom(a+b, a) / (a+b)` for coprime `a, b >= 1`.
    pub fn rational_catalan(&self, a: usize, b: usize) -> Result<T, NumericError> {
        if a == 0 || b == 0 {
            return Err(NumericError::InvalidArgument(
                "rational Catalan needs a, b >= 1".into(),
            ));
        }
        if a.gcd(&b) != 1 {
            return Err(NumericError::NotCoprime { a, b });
        }
        exact(self.binomial(a + b, a)?, &small(a + b)?, || {
            format!("Cat({a},{b})")
        })
    }

    /// `gcd(F_m, F_n)` by Euclid on the values themselves.
    pub fn fib_gcd(&self, m: usize, n: usize) -> Result<T, NumericError> {
        Ok(self.fib(m)?.gcd(&self.fib(n)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Table = FibTable<BigInt>;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn fib_examples() {
        let t = Table::default();
        assert_eq!(t.fib(0).unwrap(), big(0));
        assert_eq!(t.fib(1).unwrap(), big(1));
        assert_eq!(t.fib(2).unwrap(), big(1));
        assert_eq!(t.fib(10).unwrap(), big(55));
        assert_eq!(
            t.fib(10_001),
            Err(NumericError::IndexOutOfRange {
                index: 10_001,
                max: 10_000
            })
        );
    }

    #[test]
    fn fibonomial_examples() {
        let t = Table::default();
        for n in 0..10 {
            assert_eq!(t.fibonomial(n, 0).unwrap(), big(1));
        }
        assert_eq!(t.fibonomial(4, 2).unwrap(), big(6));
        assert_eq!(t.fibonomial(6, 3).unwrap(), big(60));
        assert!(matches!(
            t.fibonomial(2, 3),
            Err(NumericError::InvalidArgument(_))
        ));
    }

    #[test]
    fn fib_factorial_zero_is_one() {
        assert_eq!(Table::default().fib_factorial(0).unwrap(), big(1));
        assert_eq!(Table::default().fib_factorial(6).unwrap(), big(240));
    }

    #[test]
    fn fibocatalan_examples() {
        let t = Table::default();
        assert_eq!(t.fibocatalan(1).unwrap(), big(1));
        assert_eq!(t.fibocatalan(2).unwrap(), big(3));
        assert_eq!(t.fibocatalan(4).unwrap(), big(364));
    }

    #[test]
    fn fibocatalan_two_fibonomial_form() {
        let t = Table::default();
        for n in 2..40 {
            let sum =
                t.fibonomial(2 * n - 1, n - 2).unwrap() + t.fibonomial(2 * n - 1, n - 1).unwrap();
            assert_eq!(t.fibocatalan(n).unwrap(), sum, "n={n}");
        }
    }

    #[test]
    fn super_fibocatalan_examples() {
        let t = Table::default();
        for n in 0..12 {
            assert_eq!(
                t.super_fibocatalan(1, n).unwrap(),
                t.fibocatalan(n).unwrap()
            );
        }
        assert_eq!(t.super_fibocatalan(2, 2).unwrap(), big(6));
        assert_eq!(t.super_fibocatalan(2, 3).unwrap(), big(24));
        assert_eq!(t.super_fibocatalan(0, 0).unwrap(), big(1));
    }

    #[test]
    fn generalized_examples() {
        let t = Table::default();
        for n in 0..12 {
            assert_eq!(
                t.generalized_fibocatalan(0, n).unwrap(),
                t.fibocatalan(n).unwrap()
            );
        }
        assert_eq!(t.generalized_fibocatalan(1, 3).unwrap(), big(8));
        assert_eq!(t.generalized_fibocatalan(1, 4).unwrap(), big(91));
    }

    #[test]
    fn classical_examples() {
        let t = Table::default();
        assert_eq!(t.catalan(0).unwrap(), big(1));
        assert_eq!(t.catalan(3).unwrap(), big(5));
        for n in 0..15 {
            assert_eq!(
                t.super_catalan(1, n).unwrap(),
                big(2) * t.catalan(n).unwrap()
            );
        }
        // 4! / (2! 4!)
        assert_eq!(t.gen_catalan(1, 2).unwrap(), Ratio::new(big(1), big(2)));
        assert_eq!(t.gessel_j(1).unwrap(), big(6));
        let scaled = t.gen_catalan(1, 2).unwrap() * Ratio::from_integer(t.gessel_j(1).unwrap());
        assert_eq!(
            Ratio::from_integer(t.generalized_catalan(1, 2).unwrap()),
            scaled
        );
        assert_eq!(t.generalized_catalan(1, 2).unwrap(), big(3));
        // (2n)!/(n!(n+2)!) is not always integral
        assert!(!t.gen_catalan(1, 1).unwrap().is_integer());
    }

    #[test]
    fn rational_catalan_examples() {
        let t = Table::default();
        for n in 0..12 {
            if n > 0 {
                assert_eq!(t.rational_catalan(n, n + 1).unwrap(), t.catalan(n).unwrap());
            }
        }
        assert_eq!(t.rational_catalan(2, 3).unwrap(), big(2));
        assert_eq!(t.rational_catalan(1, 1).unwrap(), big(1));
        assert_eq!(
            t.rational_catalan(4, 6),
            Err(NumericError::NotCoprime { a: 4, b: 6 })
        );
    }

    #[test]
    fn fib_gcd_examples() {
        let t = Table::default();
        assert_eq!(t.fib_gcd(9, 6).unwrap(), big(2));
        for n in 1..30 {
            assert_eq!(t.fib_gcd(n, n).unwrap(), t.fib(n).unwrap());
            let g = t.fib_gcd(2 * n + 1, n + 2).unwrap();
            assert!(g == big(1) || g == big(2), "n={n}");
        }
    }

    #[test]
    fn kdiv_collapses_at_k_one() {
        let t = Table::default();
        for n in 0..8 {
            assert_eq!(
                t.kdiv_fib_factorial(n, 1).unwrap(),
                t.fib_factorial(n).unwrap()
            );
            for m in 0..=n {
                assert_eq!(
                    t.kdiv_fibonomial(n, m, 1).unwrap(),
                    t.fibonomial(n, m).unwrap()
                );
            }
        }
        // F_2 F_4 = 3
        assert_eq!(t.kdiv_fib_factorial(2, 2).unwrap(), big(3));
        assert_eq!(t.kdiv_fib_factorial(0, 5).unwrap(), big(1));
    }

    #[test]
    fn fixed_width_overflow_is_reported() {
        let t = FibTable::<i64>::default();
        assert_eq!(t.fib(92).unwrap(), 7_540_113_804_746_346_429);
        assert_eq!(t.fib(93), Err(NumericError::Overflow));
        assert_eq!(t.fib_factorial(30), Err(NumericError::Overflow));
        assert_eq!(t.factorial(20).unwrap(), 2_432_902_008_176_640_000);
        assert_eq!(t.factorial(21), Err(NumericError::Overflow));
    }
}
