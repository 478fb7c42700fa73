//! Lucas polynomials `{n}`, their factorials and atoms, lucanomials, and the
//! Lucas analogues of the Catalan-type families.
//!
//! `{0} = 0`, `{1} = 1` and `{n} = s{n-1} + t{n-2}`. The atoms `P_d` are
//! the factors with `{n} = prod_{d | n} P_d`; `P_1 = 1`. Every quotient in
//! this module is computed by exact polynomial division and cross-checked
//! independently by [`factorial_quotient_report`].

mod valuation;

use std::collections::HashMap;
use std::sync::{Arc, PoisonError, RwLock};

use num_integer::Integer;
use thiserror::Error;

use crate::bigpoly::{Coefficient, Poly, PolyError};

pub use valuation::{
    atom_period, atom_valuation, factorial_quotient_report, ValuationReport, ValuationRow,
};

pub const DEFAULT_MAX_INDEX: usize = 500;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LucasError {
    #[error("index {index} exceeds the cache guard {max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("gcd({a}, {b}) != 1")]
    NotCoprime { a: usize, b: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

type Shared<C> = Arc<Poly<C>>;

struct Memo<C> {
    /// `polys[n] = {n}`
    polys: Vec<Shared<C>>,
    /// `factorials[n] = {n}!`
    factorials: Vec<Shared<C>>,
    /// `atoms[d] = P_d`; slot 0 is an unused placeholder.
    atoms: Vec<Shared<C>>,
    /// `{n:k}!` for `k >= 2`
    kdiv: HashMap<(usize, usize), Shared<C>>,
}

impl<C: Coefficient> Memo<C> {
    fn new() -> Self {
        let one = Arc::new(Poly::one());
        Memo {
            polys: vec![Arc::new(Poly::zero()), one.clone()],
            factorials: vec![one.clone()],
            atoms: vec![one.clone(), one],
            kdiv: HashMap::new(),
        }
    }

    fn fill_polys(&mut self, n: usize) {
        while self.polys.len() <= n {
            let len = self.polys.len();
            let next = &self.polys[len - 1].shift(1, 0) + &self.polys[len - 2].shift(0, 1);
            self.polys.push(Arc::new(next));
        }
    }

    fn fill_factorials(&mut self, n: usize) {
        self.fill_polys(n);
        while self.factorials.len() <= n {
            let len = self.factorials.len();
            let next = &*self.polys[len] * &*self.factorials[len - 1];
            self.factorials.push(Arc::new(next));
        }
    }

    fn fill_atoms(&mut self, d: usize) -> Result<(), LucasError> {
        self.fill_polys(d);
        while self.atoms.len() <= d {
            let e = self.atoms.len();
            let proper = Poly::product(
                (1..e)
                    .filter(|f| e.is_multiple_of(*f))
                    .map(|f| &*self.atoms[f]),
            );
            let atom = self.polys[e]
                .exact_div(&proper)
                .map_err(|err| LucasError::InternalInconsistency(format!("atom P_{e}: {err}")))?;
            self.atoms.push(Arc::new(atom));
        }
        Ok(())
    }

    fn fill_kdiv(&mut self, n: usize, k: usize) {
        if k == 1 {
            self.fill_factorials(n);
            return;
        }
        if self.kdiv.contains_key(&(n, k)) {
            return;
        }
        self.fill_polys(n * k);
        let start = (1..n)
            .rev()
            .find(|j| self.kdiv.contains_key(&(*j, k)))
            .unwrap_or(0);
        let mut acc = match start {
            0 => Poly::one(),
            j => (*self.kdiv[&(j, k)]).clone(),
        };
        for i in start + 1..=n {
            acc = &acc * &*self.polys[i * k];
            self.kdiv.insert((i, k), Arc::new(acc.clone()));
        }
    }

    fn kdiv(&self, n: usize, k: usize) -> Option<Shared<C>> {
        match (n, k) {
            (0, _) => Some(self.factorials[0].clone()),
            (_, 1) => self.factorials.get(n).cloned(),
            _ => self.kdiv.get(&(n, k)).cloned(),
        }
    }
}

/// Memo store for `{n}`, `{n}!`, `P_d` and `{n:k}!` over a coefficient
/// ring `C`, bounded by a guard on the largest Lucas index.
///
/// Readers proceed concurrently; insertions take the write lock. Every
/// inserted value is canonical, so racing fills are idempotent.
pub struct LucasTable<C> {
    max_index: usize,
    memo: RwLock<Memo<C>>,
}

impl<C: Coefficient> Default for LucasTable<C> {
    fn default() -> Self {
        Self::new(DEFAULT_MAX_INDEX)
    }
}

impl<C: Coefficient> LucasTable<C> {
    pub fn new(max_index: usize) -> Self {
        LucasTable {
            max_index,
            memo: RwLock::new(Memo::new()),
        }
    }

    pub fn max_index(&self) -> usize {
        self.max_index
    }

    fn guard(&self, index: usize) -> Result<(), LucasError> {
        if index > self.max_index {
            Err(LucasError::IndexOutOfRange {
                index,
                max: self.max_index,
            })
        } else {
            Ok(())
        }
    }

    fn cached(
        &self,
        get: impl Fn(&Memo<C>) -> Option<Shared<C>>,
        fill: impl FnOnce(&mut Memo<C>) -> Result<(), LucasError>,
    ) -> Result<Shared<C>, LucasError> {
        {
            let memo = self.memo.read().unwrap_or_else(PoisonError::into_inner);
            if let Some(hit) = get(&memo) {
                return Ok(hit);
            }
        }
        let mut memo = self.memo.write().unwrap_or_else(PoisonError::into_inner);
        fill(&mut memo)?;
        Ok(get(&memo).expect("memo filled"))
    }

    fn poly_arc(&self, n: usize) -> Result<Shared<C>, LucasError> {
        self.guard(n)?;
        self.cached(
            |m| m.polys.get(n).cloned(),
            |m| {
                m.fill_polys(n);
                Ok(())
            },
        )
    }

    fn kdiv_arc(&self, n: usize, k: usize) -> Result<Shared<C>, LucasError> {
        if k == 0 {
            return Err(LucasError::InvalidArgument("k must be at least 1".into()));
        }
        self.guard(n.saturating_mul(k))?;
        self.cached(
            |m| m.kdiv(n, k),
            |m| {
                m.fill_kdiv(n, k);
                Ok(())
            },
        )
    }

    /// The Lucas polynomial `{n}`.
    pub fn lucas_poly(&self, n: usize) -> Result<Poly<C>, LucasError> {
        Ok((*self.poly_arc(n)?).clone())
    }

    /// `{n}! = {n}{n-1}...{1}`, with `{0}! = 1`.
    pub fn lucas_factorial(&self, n: usize) -> Result<Poly<C>, LucasError> {
        Ok((*self.kdiv_arc(n, 1)?).clone())
    }

    /// The Lucas atom `P_d`, `d >= 1`.
    pub fn lucas_atom(&self, d: usize) -> Result<Poly<C>, LucasError> {
        if d == 0 {
            return Err(LucasError::InvalidArgument(
                "atoms are indexed from 1".into(),
            ));
        }
        self.guard(d)?;
        let atom = self.cached(|m| m.atoms.get(d).cloned(), |m| m.fill_atoms(d))?;
        Ok((*atom).clone())
    }

    /// `{n:k}! = {k}{2k}...{nk}`, with `{0:k}! = 1`.
    pub fn kdiv_lucas_factorial(&self, n: usize, k: usize) -> Result<Poly<C>, LucasError> {
        Ok((*self.kdiv_arc(n, k)?).clone())
    }

    /// `prod {n_i:k}! / prod {m_j:k}!` if it is a polynomial, `None` if not.
    ///
    /// Indices shared by both lists cancel first; the remaining numerator is
    /// multiplied out and divided exactly by each remaining denominator
    /// factorial in turn.
    pub fn try_factorial_quotient(
        &self,
        nums: &[usize],
        dens: &[usize],
        k: usize,
    ) -> Result<Option<Poly<C>>, LucasError> {
        let mut nums = nums.to_vec();
        let mut dens = dens.to_vec();
        nums.sort_unstable();
        dens.sort_unstable();
        let (nums, dens) = cancel_common(&nums, &dens);

        let mut acc = Poly::one();
        for &n in &nums {
            acc = &acc * &*self.kdiv_arc(n, k)?;
        }
        for &d in dens.iter().rev() {
            acc = match acc.exact_div(&*self.kdiv_arc(d, k)?) {
                Ok(q) => q,
                Err(PolyError::NotDivisible) => return Ok(None),
                Err(err) => return Err(LucasError::InternalInconsistency(err.to_string())),
            };
        }
        Ok(Some(acc))
    }

    fn exact_quotient(
        &self,
        nums: &[usize],
        dens: &[usize],
        k: usize,
        what: &str,
    ) -> Result<Poly<C>, LucasError> {
        self.try_factorial_quotient(nums, dens, k)?
            .ok_or_else(|| LucasError::InternalInconsistency(format!("{what} is not a polynomial")))
    }

    fn divide(&self, num: &Poly<C>, by: &Poly<C>, what: &str) -> Result<Poly<C>, LucasError> {
        num.exact_div(by)
            .map_err(|err| LucasError::InternalInconsistency(format!("{what}: {err}")))
    }

    /// `{n}! / ({k}! {n-k}!)`
    pub fn lucanomial(&self, n: usize, k: usize) -> Result<Poly<C>, LucasError> {
        self.kdiv_lucanomial(n, k, 1)
    }

    /// `C_{n} = lucanomial(2n, n) / {n+1}`
    pub fn lucas_catalan(&self, n: usize) -> Result<Poly<C>, LucasError> {
        let central = self.lucanomial(2 * n, n)?;
        self.divide(&central, &*self.poly_arc(n + 1)?, "Lucas Catalan")
    }

    /// `Cat{a,b} = lucanomial(a+b, a) / {a+b}` for coprime `a, b >= 1`.
    pub fn rational_lucas_catalan(&self, a: usize, b: usize) -> Result<Poly<C>, LucasError> {
        if a == 0 || b == 0 {
            return Err(LucasError::InvalidArgument(
                "rational Catalan needs a, b >= 1".into(),
            ));
        }
        if a.gcd(&b) != 1 {
            return Err(LucasError::NotCoprime { a, b });
        }
        let binom = self.lucanomial(a + b, a)?;
        self.divide(&binom, &*self.poly_arc(a + b)?, "rational Lucas Catalan")
    }

    /// `S{m,n} = {2m}! {2n}! / ({m}! {n}! {m+n}!)`; `S{0,0} = 1`.
    pub fn super_lucas(&self, m: usize, n: usize) -> Result<Poly<C>, LucasError> {
        self.super_lucas_kdiv(m, n, 1)
    }

    /// `{2r+1}! {2n}! / ({r}! {n}! {n+r+1}!)`
    pub fn generalized_lucas_cat(&self, r: usize, n: usize) -> Result<Poly<C>, LucasError> {
        self.exact_quotient(
            &[2 * r + 1, 2 * n],
            &[r, n, n + r + 1],
            1,
            "generalized Lucas Catalan",
        )
    }

    /// `{n:k}! / ({m:k}! {n-m:k}!)`
    pub fn kdiv_lucanomial(&self, n: usize, m: usize, k: usize) -> Result<Poly<C>, LucasError> {
        if m > n {
            return Err(LucasError::InvalidArgument(format!(
                "lucanomial needs m <= n, got m={m}, n={n}"
            )));
        }
        self.exact_quotient(&[n], &[m, n - m], k, "lucanomial")
    }

    /// `S{m,n:k} = {2m:k}! {2n:k}! / ({m:k}! {n:k}! {m+n:k}!)`
    pub fn super_lucas_kdiv(&self, m: usize, n: usize, k: usize) -> Result<Poly<C>, LucasError> {
        self.exact_quotient(&[2 * m, 2 * n], &[m, n, m + n], k, "super Lucas")
    }
}

/// Multiset difference of two sorted lists, both ways.
fn cancel_common(a: &[usize], b: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let (mut i, mut j) = (0, 0);
    let (mut left, mut right) = (Vec::new(), Vec::new());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                left.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                right.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    left.extend_from_slice(&a[i..]);
    right.extend_from_slice(&b[j..]);
    (left, right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Table = LucasTable<BigInt>;
    type P = Poly<BigInt>;

    fn p(text: &str) -> P {
        text.parse().unwrap()
    }

    fn one() -> BigInt {
        BigInt::from(1)
    }

    #[test]
    fn lucas_poly_examples() {
        let t = Table::default();
        assert!(t.lucas_poly(0).unwrap().is_zero());
        assert!(t.lucas_poly(1).unwrap().is_one());
        assert_eq!(t.lucas_poly(2).unwrap(), p("s"));
        assert_eq!(t.lucas_poly(3).unwrap(), p("s^2 + t"));
        assert_eq!(t.lucas_poly(4).unwrap(), p("s^3 + 2*s*t"));
    }

    #[test]
    fn factorial_examples() {
        let t = Table::default();
        assert!(t.lucas_factorial(0).unwrap().is_one());
        assert_eq!(t.lucas_factorial(3).unwrap(), p("s^3 + s*t"));
    }

    #[test]
    fn atom_examples() {
        let t = Table::default();
        assert!(t.lucas_atom(1).unwrap().is_one());
        assert_eq!(t.lucas_atom(2).unwrap(), p("s"));
        assert_eq!(t.lucas_atom(3).unwrap(), p("s^2 + t"));
        assert_eq!(t.lucas_atom(4).unwrap(), p("s^2 + 2*t"));
        assert_eq!(t.lucas_atom(6).unwrap(), p("s^2 + 3*t"));
        assert!(matches!(
            t.lucas_atom(0),
            Err(LucasError::InvalidArgument(_))
        ));
    }

    #[test]
    fn lucanomial_examples() {
        let t = Table::default();
        assert_eq!(t.lucanomial(4, 2).unwrap(), p("s^4 + 3*s^2*t + 2*t^2"));
        for n in 0..8 {
            assert!(t.lucanomial(n, 0).unwrap().is_one());
            assert!(t.lucanomial(n, n).unwrap().is_one());
        }
        assert_eq!(
            t.lucanomial(6, 3).unwrap().eval(&one(), &one()),
            BigInt::from(60)
        );
        assert!(matches!(
            t.lucanomial(2, 3),
            Err(LucasError::InvalidArgument(_))
        ));
    }

    #[test]
    fn catalan_examples() {
        let t = Table::default();
        assert!(t.lucas_catalan(0).unwrap().is_one());
        assert!(t.lucas_catalan(1).unwrap().is_one());
        assert_eq!(t.lucas_catalan(2).unwrap(), p("s^2 + 2*t"));
    }

    #[test]
    fn rational_catalan_examples() {
        let t = Table::default();
        assert!(t.rational_lucas_catalan(1, 2).unwrap().is_one());
        assert_eq!(t.rational_lucas_catalan(2, 3).unwrap(), p("s^2 + 2*t"));
        for n in 1..8 {
            assert_eq!(
                t.rational_lucas_catalan(n, n + 1).unwrap(),
                t.lucas_catalan(n).unwrap()
            );
        }
        assert_eq!(
            t.rational_lucas_catalan(2, 4),
            Err(LucasError::NotCoprime { a: 2, b: 4 })
        );
        assert!(matches!(
            t.rational_lucas_catalan(0, 1),
            Err(LucasError::InvalidArgument(_))
        ));
    }

    #[test]
    fn super_lucas_examples() {
        let t = Table::default();
        assert_eq!(t.super_lucas(1, 1).unwrap(), p("s"));
        assert!(t.super_lucas(0, 0).unwrap().is_one());
        for m in 0..6 {
            assert_eq!(
                t.super_lucas(m, m).unwrap(),
                t.lucanomial(2 * m, m).unwrap()
            );
        }
        let two = t.lucas_poly(2).unwrap();
        for n in 0..8 {
            assert_eq!(
                t.super_lucas(1, n).unwrap(),
                &two * &t.lucas_catalan(n).unwrap()
            );
        }
    }

    #[test]
    fn generalized_examples() {
        let t = Table::default();
        for n in 0..8 {
            assert_eq!(
                t.generalized_lucas_cat(0, n).unwrap(),
                t.lucas_catalan(n).unwrap()
            );
        }
        assert_eq!(t.generalized_lucas_cat(1, 2).unwrap(), p("s^2 + t"));
        assert_eq!(
            t.generalized_lucas_cat(1, 4).unwrap().eval(&one(), &one()),
            BigInt::from(91)
        );
    }

    #[test]
    fn kdiv_examples() {
        let t = Table::default();
        for n in 0..7 {
            assert_eq!(
                t.kdiv_lucas_factorial(n, 1).unwrap(),
                t.lucas_factorial(n).unwrap()
            );
        }
        assert_eq!(t.kdiv_lucas_factorial(2, 2).unwrap(), p("s^4 + 2*s^2*t"));
        assert!(t.kdiv_lucas_factorial(0, 3).unwrap().is_one());
        assert_eq!(t.kdiv_lucanomial(2, 1, 2).unwrap(), p("s^2 + 2*t"));
        for n in 0..6 {
            assert!(t.kdiv_lucanomial(n, 0, 3).unwrap().is_one());
            for m in 0..=n {
                assert_eq!(
                    t.kdiv_lucanomial(n, m, 1).unwrap(),
                    t.lucanomial(n, m).unwrap()
                );
            }
        }
        assert_eq!(t.super_lucas_kdiv(1, 1, 2).unwrap(), p("s^2 + 2*t"));
        for m in 0..4 {
            for n in 0..4 {
                assert_eq!(
                    t.super_lucas_kdiv(m, n, 1).unwrap(),
                    t.super_lucas(m, n).unwrap()
                );
            }
        }
        assert!(t.super_lucas_kdiv(2, 2, 2).unwrap().eval(&one(), &one()) > BigInt::from(0));
    }

    #[test]
    fn kdiv_cache_order_independent() {
        let t = Table::default();
        let late = t.kdiv_lucas_factorial(5, 3).unwrap();
        let early = t.kdiv_lucas_factorial(2, 3).unwrap();
        let fresh = Table::default();
        assert_eq!(fresh.kdiv_lucas_factorial(2, 3).unwrap(), early);
        assert_eq!(fresh.kdiv_lucas_factorial(5, 3).unwrap(), late);
    }

    #[test]
    fn guard_is_enforced() {
        let t = Table::new(10);
        assert!(t.lucas_poly(10).is_ok());
        assert_eq!(
            t.lucas_poly(11),
            Err(LucasError::IndexOutOfRange { index: 11, max: 10 })
        );
        assert!(matches!(
            t.lucas_factorial(11),
            Err(LucasError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            t.kdiv_lucas_factorial(4, 3),
            Err(LucasError::IndexOutOfRange { index: 12, .. })
        ));
        assert!(t.super_lucas(3, 3).is_ok());
        assert!(matches!(
            t.super_lucas(6, 1),
            Err(LucasError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            t.kdiv_lucas_factorial(2, 0),
            Err(LucasError::InvalidArgument(_))
        ));
    }

    #[test]
    fn non_polynomial_quotient_is_none() {
        let t = Table::default();
        assert_eq!(t.try_factorial_quotient(&[4], &[2, 4], 1).unwrap(), None);
        assert!(t
            .try_factorial_quotient(&[4], &[2, 2], 1)
            .unwrap()
            .is_some());
    }

    #[test]
    fn cancel_common_is_multiset_difference() {
        assert_eq!(
            cancel_common(&[1, 2, 2, 5], &[2, 3, 5, 5]),
            (vec![1, 2], vec![3, 5])
        );
        assert_eq!(cancel_common(&[], &[1]), (vec![], vec![1]));
    }

    #[test]
    fn concurrent_readers_agree() {
        let t = std::sync::Arc::new(Table::default());
        let handles: Vec<_> = (0..4)
            .map(|i| {
                let t = t.clone();
                std::thread::spawn(move || t.lucas_atom(30 + i).unwrap())
            })
            .collect();
        for (i, h) in handles.into_iter().enumerate() {
            assert_eq!(
                h.join().unwrap(),
                Table::default().lucas_atom(30 + i).unwrap()
            );
        }
    }
}
