//! Exact sparse polynomials in the two formal variables `s` and `t`.
//!
//! A [`Poly`] is a finite map from [`Monomial`] exponent pairs to nonzero
//! coefficients. Zero coefficients are never stored, so structural equality
//! is polynomial equality and the zero polynomial is the empty map.

mod coeff;
mod division;
mod text;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

pub use coeff::Coefficient;
pub use text::ParseError;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Exponent pair `s^s * t^t`.
///
/// Ordered so that iteration runs in display order: descending `s`
/// degree, ties broken by ascending `t` degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub s: u32,
    pub t: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { s: 0, t: 0 };

    pub fn new(s: u32, t: u32) -> Self {
        Monomial { s, t }
    }

    pub fn is_constant(&self) -> bool {
        self.s == 0 && self.t == 0
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial::new(self.s + other.s, self.t + other.t)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.s.cmp(&self.s).then(self.t.cmp(&other.t))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Poly<C> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: C, s: u32, t: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(s, t), c);
        }
        Poly { terms }
    }

    /// The variable `s`.
    pub fn s() -> Self {
        Self::monomial(C::one(), 1, 0)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(C::one(), 0, 1)
    }

    /// Builds a polynomial from possibly repeated or zero terms.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical display order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, s: u32, t: u32) -> C {
        self.terms
            .get(&Monomial::new(s, t))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// Largest power of `s` present, `None` for the zero polynomial.
    pub fn degree_s(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.s)
    }

    pub fn degree_t(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.t).max()
    }

    /// True iff every stored coefficient is strictly positive. Vacuously
    /// true for zero.
    pub fn has_nonneg_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                slot.add_ref(c);
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn sub_term(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                slot.sub_ref(c);
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, -c.clone());
            }
        }
    }

    pub fn scale(&self, factor: &C) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut v = C::zero();
            v.add_product(c, factor);
            out.add_term(*m, &v);
        }
        out
    }

    /// Multiplies by `s^s * t^t`.
    pub fn shift(&self, s: u32, t: u32) -> Self {
        let by = Monomial::new(s, t);
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.times(by), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact substitution `s = s0`, `t = t0`.
    pub fn eval(&self, s0: &C, t0: &C) -> C {
        let (Some(ds), Some(dt)) = (self.degree_s(), self.degree_t()) else {
            return C::zero();
        };
        let s_pows = powers(s0, ds);
        let t_pows = powers(t0, dt);
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut st = C::zero();
            st.add_product(&s_pows[m.s as usize], &t_pows[m.t as usize]);
            acc.add_product(c, &st);
        }
        acc
    }

    /// Applies `f` to every coefficient, e.g. to move between scalar types.
    pub fn map_coeffs<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> Poly<D> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn product<'a, I>(factors: I) -> Self
    where
        I: IntoIterator<Item = &'a Poly<C>>,
    {
        factors.into_iter().fold(Self::one(), |acc, f| &acc * f)
    }
}

fn powers<C: Coefficient>(base: &C, up_to: u32) -> Vec<C> {
    let mut out = Vec::with_capacity(up_to as usize + 1);
    out.push(C::one());
    for i in 0..up_to as usize {
        let mut next = C::zero();
        next.add_product(&out[i], base);
        out.push(next);
    }
    out
}

impl<C: Coefficient> Add<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let (mut out, other) = if self.num_terms() >= rhs.num_terms() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl<C: Coefficient> Sub<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.sub_term(*m, c);
        }
        out
    }
}

impl<C: Coefficient> Mul<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        let mut acc: BTreeMap<Monomial, C> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                acc.entry(ma.times(*mb))
                    .or_insert_with(C::zero)
                    .add_product(ca, cb);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Poly { terms: acc }
    }
}

impl<C: Coefficient> Neg for &Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident :: $method:ident),*) => {$(
        impl<C: Coefficient> $tr<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$method(&rhs)
            }
        }

        impl<C: Coefficient> $tr<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                (&self).$method(rhs)
            }
        }

        impl<C: Coefficient> $tr<Poly<C>> for &Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

impl<C: Coefficient> Neg for Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        -&self
    }
}
