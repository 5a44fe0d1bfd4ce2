//! Exact polynomial arithmetic over the integers in the formal variables
//! `q`, `p`, `r`, together with polynomials in `x` and truncated power
//! series in `t` whose coefficients are such polynomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

/// One of the three weight variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    Q,
    P,
    R,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::Q => 'q',
            Var::P => 'p',
            Var::R => 'r',
        }
    }
}

/// Exponent triple `q^q p^p r^r`.
///
/// Ordered graded-lexicographically by `(total degree, q, p, r)`, which is
/// also the order terms are printed in.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub q: u32,
    pub p: u32,
    pub r: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { q: 0, p: 0, r: 0 };

    pub const fn new(q: u32, p: u32, r: u32) -> Self {
        Monomial { q, p, r }
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        match v {
            Var::Q => Monomial::new(e, 0, 0),
            Var::P => Monomial::new(0, e, 0),
            Var::R => Monomial::new(0, 0, e),
        }
    }

    pub fn degree(&self) -> u32 {
        self.q + self.p + self.r
    }

    pub fn exponent(&self, v: Var) -> u32 {
        match v {
            Var::Q => self.q,
            Var::P => self.p,
            Var::R => self.r,
        }
    }

    fn with_exponent(mut self, v: Var, e: u32) -> Self {
        match v {
            Var::Q => self.q = e,
            Var::P => self.p = e,
            Var::R => self.r = e,
        }
        self
    }

    fn sort_key(&self) -> (u32, u32, u32, u32) {
        (self.degree(), self.q, self.p, self.r)
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, other: Monomial) -> Monomial {
        Monomial::new(self.q + other.q, self.p + other.p, self.r + other.r)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// Writes `p^a*q^b*r^c` with unit exponents elided and `1` for the
    /// empty monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (sym, e) in [('p', self.p), ('q', self.q), ('r', self.r)] {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{sym}")?;
            } else {
                write!(f, "{sym}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Sparse polynomial in `q`, `p`, `r` with arbitrary-precision integer
/// coefficients. No stored coefficient is ever zero, so structural equality
/// is polynomial equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PQRPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

static ZERO_POLY: PQRPoly = PQRPoly {
    terms: BTreeMap::new(),
};

impl PQRPoly {
    pub fn zero() -> Self {
        PQRPoly::default()
    }

    /// Shared reference to the zero polynomial.
    pub fn zero_ref() -> &'static PQRPoly {
        &ZERO_POLY
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term<T: Into<BigInt>>(c: T, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        PQRPoly { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(1, m)
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v))
    }

    pub fn q() -> Self {
        Self::var(Var::Q)
    }

    pub fn p() -> Self {
        Self::var(Var::P)
    }

    pub fn r() -> Self {
        Self::var(Var::R)
    }

    /// `q^e`.
    pub fn q_pow(e: u32) -> Self {
        Self::monomial(Monomial::new(e, 0, 0))
    }

    /// Builds a polynomial from `(coefficient, monomial)` pairs, collecting
    /// like terms.
    pub fn from_terms<I, T>(iter: I) -> Self
    where
        I: IntoIterator<Item = (T, Monomial)>,
        T: Into<BigInt>,
    {
        let mut out = PQRPoly::zero();
        for (c, m) in iter {
            out.add_term(m, c.into());
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

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The constant term if the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// Highest exponent of `v` appearing in any term, `None` for zero.
    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale<T: Into<BigInt>>(&self, c: T) -> PQRPoly {
        let c = c.into();
        if c.is_zero() {
            return PQRPoly::zero();
        }
        PQRPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * &c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> PQRPoly {
        PQRPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k * m, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> PQRPoly {
        let mut acc = PQRPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficient of `v^s`, as a polynomial in the remaining variables.
    pub fn coeff_extract(&self, v: Var, s: u32) -> PQRPoly {
        PQRPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == s)
                .map(|(m, c)| (m.with_exponent(v, 0), c.clone()))
                .collect(),
        }
    }

    /// Exact evaluation at integer points.
    pub fn eval_int<Q, P, R>(&self, q0: Q, p0: P, r0: R) -> BigInt
    where
        Q: Into<BigInt>,
        P: Into<BigInt>,
        R: Into<BigInt>,
    {
        let (q0, p0, r0) = (q0.into(), p0.into(), r0.into());
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            if m.q > 0 {
                t *= Pow::pow(&q0, m.q);
            }
            if m.p > 0 {
                t *= Pow::pow(&p0, m.p);
            }
            if m.r > 0 {
                t *= Pow::pow(&r0, m.r);
            }
            total += t;
        }
        total
    }

    /// Substitutes `v = value`, leaving a polynomial in the other variables.
    pub fn substitute(&self, v: Var, value: i64) -> PQRPoly {
        let value = BigInt::from(value);
        let mut out = PQRPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            out.add_term(m.with_exponent(v, 0), c * Pow::pow(&value, e));
        }
        out
    }

    /// Dense coefficient list in `v` after setting every other variable to 1.
    /// Index `i` holds the coefficient of `v^i`.
    pub fn coefficients_in(&self, v: Var) -> Vec<BigInt> {
        let Some(deg) = self.degree_in(v) else {
            return Vec::new();
        };
        let mut out = vec![BigInt::zero(); deg as usize + 1];
        for (m, c) in &self.terms {
            out[m.exponent(v) as usize] += c;
        }
        out
    }
}

impl fmt::Display for PQRPoly {
    /// Canonical text form: `3*p^2*q^5 + q - 1`, `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl From<i64> for PQRPoly {
    fn from(c: i64) -> Self {
        PQRPoly::constant(c)
    }
}

impl From<BigInt> for PQRPoly {
    fn from(c: BigInt) -> Self {
        PQRPoly::constant(c)
    }
}

impl From<Monomial> for PQRPoly {
    fn from(m: Monomial) -> Self {
        PQRPoly::monomial(m)
    }
}

impl<'a> AddAssign<&'a PQRPoly> for PQRPoly {
    fn add_assign(&mut self, rhs: &'a PQRPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl AddAssign for PQRPoly {
    fn add_assign(&mut self, rhs: PQRPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl<'a> SubAssign<&'a PQRPoly> for PQRPoly {
    fn sub_assign(&mut self, rhs: &'a PQRPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl SubAssign for PQRPoly {
    fn sub_assign(&mut self, rhs: PQRPoly) {
        *self -= &rhs;
    }
}

impl<'a> Add<&'a PQRPoly> for &'a PQRPoly {
    type Output = PQRPoly;

    fn add(self, rhs: &'a PQRPoly) -> PQRPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for PQRPoly {
    type Output = PQRPoly;

    fn add(mut self, rhs: PQRPoly) -> PQRPoly {
        self += rhs;
        self
    }
}

impl<'a> Sub<&'a PQRPoly> for &'a PQRPoly {
    type Output = PQRPoly;

    fn sub(self, rhs: &'a PQRPoly) -> PQRPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for PQRPoly {
    type Output = PQRPoly;

    fn sub(mut self, rhs: PQRPoly) -> PQRPoly {
        self -= &rhs;
        self
    }
}

impl<'a> Mul<&'a PQRPoly> for &'a PQRPoly {
    type Output = PQRPoly;

    fn mul(self, rhs: &'a PQRPoly) -> PQRPoly {
        let mut out = PQRPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(*ma * *mb, ca * cb);
            }
        }
        out
    }
}

impl Mul for PQRPoly {
    type Output = PQRPoly;

    fn mul(self, rhs: PQRPoly) -> PQRPoly {
        &self * &rhs
    }
}

impl Neg for PQRPoly {
    type Output = PQRPoly;

    fn neg(mut self) -> PQRPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &PQRPoly {
    type Output = PQRPoly;

    fn neg(self) -> PQRPoly {
        -self.clone()
    }
}

impl std::iter::Sum for PQRPoly {
    fn sum<I: Iterator<Item = PQRPoly>>(iter: I) -> Self {
        iter.fold(PQRPoly::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a PQRPoly> for PQRPoly {
    fn sum<I: Iterator<Item = &'a PQRPoly>>(iter: I) -> Self {
        let mut acc = PQRPoly::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

impl std::iter::Product for PQRPoly {
    fn product<I: Iterator<Item = PQRPoly>>(iter: I) -> Self {
        iter.fold(PQRPoly::one(), |acc, x| &acc * &x)
    }
}

/// `[n]_q = 1 + q + ... + q^(n-1)`, with `[0]_q = 1`.
pub fn q_int(n: u32) -> PQRPoly {
    if n == 0 {
        return PQRPoly::one();
    }
    PQRPoly::from_terms((0..n).map(|i| (1, Monomial::new(i, 0, 0))))
}

/// `[n]_q! = [n]_q [n-1]_q ... [1]_q`.
pub fn q_factorial(n: u32) -> PQRPoly {
    (1..=n).map(q_int).product()
}

/// Gaussian binomial coefficient via the Pascal-type recursion
/// `[n, k] = [n-1, k-1] + q^k [n-1, k]`. Zero outside `0 <= k <= n`.
pub fn q_binomial(n: u32, k: u32) -> PQRPoly {
    if k > n {
        return PQRPoly::zero();
    }
    // row[j] holds [m, j] for the current m.
    let mut row = vec![PQRPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for j in 0..=m {
            let mut entry = if j >= 1 {
                row[j as usize - 1].clone()
            } else {
                PQRPoly::zero()
            };
            if j < m {
                entry += row[j as usize].mul_monomial(Monomial::new(j, 0, 0));
            }
            next.push(entry);
        }
        row = next;
    }
    row.swap_remove(k as usize)
}

/// Polynomial in `x` with [`PQRPoly`] coefficients; `coeffs[i]` multiplies
/// `x^i` and the leading coefficient is never zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct XPoly {
    coeffs: Vec<PQRPoly>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly::default()
    }

    pub fn one() -> Self {
        XPoly::constant(PQRPoly::one())
    }

    pub fn constant(c: PQRPoly) -> Self {
        XPoly::from_coeffs(vec![c])
    }

    /// `x^n`.
    pub fn x_pow(n: usize) -> Self {
        let mut coeffs = vec![PQRPoly::zero(); n + 1];
        coeffs[n] = PQRPoly::one();
        XPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<PQRPoly>) -> Self {
        while coeffs.last().is_some_and(PQRPoly::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> &PQRPoly {
        self.coeffs.get(i).unwrap_or(PQRPoly::zero_ref())
    }

    pub fn coeffs(&self) -> &[PQRPoly] {
        &self.coeffs
    }

    pub fn scale(&self, c: &PQRPoly) -> XPoly {
        XPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by the linear factor `x + c`.
    pub fn mul_linear(&self, c: &PQRPoly) -> XPoly {
        let mut out = vec![PQRPoly::zero(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i + 1] += a;
            out[i] += a * c;
        }
        XPoly::from_coeffs(out)
    }

    /// Exact evaluation at integer `x`, `q`, `p`, `r`.
    pub fn eval_int(&self, x: i64, q0: i64, p0: i64, r0: i64) -> BigInt {
        let x = BigInt::from(x);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c.eval_int(q0, p0, r0);
        }
        acc
    }
}

impl<'a> Add<&'a XPoly> for &'a XPoly {
    type Output = XPoly;

    fn add(self, rhs: &'a XPoly) -> XPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a XPoly> for &'a XPoly {
    type Output = XPoly;

    fn sub(self, rhs: &'a XPoly) -> XPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a XPoly> for &'a XPoly {
    type Output = XPoly;

    fn mul(self, rhs: &'a XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![PQRPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        XPoly::from_coeffs(out)
    }
}

impl fmt::Display for XPoly {
    /// Writes `(c0) + (c1)*x + (c2)*x^2`, skipping zero coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Sign of a linear factor in [`xpoly_product`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Expands `prod_i (x + sign_i * c_i)`.
pub fn xpoly_product<'a, I>(factors: I) -> XPoly
where
    I: IntoIterator<Item = (Sign, &'a PQRPoly)>,
{
    factors
        .into_iter()
        .fold(XPoly::one(), |acc, (sign, c)| match sign {
            Sign::Plus => acc.mul_linear(c),
            Sign::Minus => acc.mul_linear(&-c),
        })
}

/// Power series in `t` truncated after `t^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TSeries {
    order: usize,
    coeffs: Vec<PQRPoly>,
}

impl TSeries {
    pub fn zero(order: usize) -> Self {
        TSeries {
            order,
            coeffs: vec![PQRPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(PQRPoly::one(), 0, order)
    }

    /// `c * t^k`, which is zero when `k > order`.
    pub fn monomial(c: PQRPoly, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `t^n`; zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> &PQRPoly {
        self.coeffs.get(n).unwrap_or(PQRPoly::zero_ref())
    }

    pub fn coeffs(&self) -> &[PQRPoly] {
        &self.coeffs
    }

    /// Multiplies by `t^k`, dropping what falls past the order.
    pub fn shift(&self, k: usize) -> TSeries {
        let mut out = Self::zero(self.order);
        for n in k..=self.order {
            out.coeffs[n] = self.coeffs[n - k].clone();
        }
        out
    }
}

impl<'a> Add<&'a TSeries> for &'a TSeries {
    type Output = TSeries;

    fn add(self, rhs: &'a TSeries) -> TSeries {
        let order = self.order.min(rhs.order);
        TSeries {
            order,
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl<'a> Mul<&'a TSeries> for &'a TSeries {
    type Output = TSeries;

    fn mul(self, rhs: &'a TSeries) -> TSeries {
        let order = self.order.min(rhs.order);
        let mut out = TSeries::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                out.coeffs[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
            }
        }
        out
    }
}

/// `1 / (1 - c t) = sum_n c^n t^n`, truncated at `order`.
pub fn tseries_geom(c: &PQRPoly, order: usize) -> TSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut power = PQRPoly::one();
    for _ in 0..=order {
        let next = &power * c;
        coeffs.push(power);
        power = next;
    }
    TSeries { order, coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> PQRPoly {
        PQRPoly::q()
    }

    fn p() -> PQRPoly {
        PQRPoly::p()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&q() + &q(), q().scale(2));
        let a = &q() + &PQRPoly::q_pow(2);
        assert_eq!(&a * &q(), &PQRPoly::q_pow(2) + &PQRPoly::q_pow(3));
        // F_2 * F_3 = q^2 (q^3 + p q)
        let f3 = &PQRPoly::q_pow(3) + &(&p() * &q());
        let prod = &PQRPoly::q_pow(2) * &f3;
        assert_eq!(prod.to_string(), "p*q^3 + q^5");
    }

    #[test]
    fn coefficients_cancel_to_zero() {
        let a = &q() - &q();
        assert!(a.is_zero());
        assert_eq!(a.num_terms(), 0);
        assert_eq!(a.to_string(), "0");
    }

    #[test]
    fn display_form() {
        let poly = PQRPoly::from_terms([
            (3, Monomial::new(5, 2, 0)),
            (-1, Monomial::ONE),
            (1, Monomial::new(1, 1, 0)),
            (-2, Monomial::new(0, 0, 1)),
        ]);
        assert_eq!(poly.to_string(), "-1 - 2*r + p*q + 3*p^2*q^5");
        assert_eq!(PQRPoly::one().to_string(), "1");
        assert_eq!(PQRPoly::q_pow(4).to_string(), "q^4");
    }

    #[test]
    fn coeff_extract_examples() {
        let f4 = &PQRPoly::q_pow(4) + &(&p() * &PQRPoly::q_pow(2)).scale(2);
        assert_eq!(f4.coeff_extract(Var::P, 1), PQRPoly::q_pow(2).scale(2));
        assert!(f4.coeff_extract(Var::P, 7).is_zero());
        let p3 = &PQRPoly::q_pow(3) + &(&q() * &p());
        assert_eq!(p3.coeff_extract(Var::P, 0), PQRPoly::q_pow(3));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(PQRPoly::one().eval_int(7, -3, 11), BigInt::from(1));
        let f5 = PQRPoly::from_terms([
            (1, Monomial::new(5, 0, 0)),
            (3, Monomial::new(3, 1, 0)),
            (1, Monomial::new(1, 2, 0)),
        ]);
        assert_eq!(f5.eval_int(1, 1, 0), BigInt::from(5));
    }

    #[test]
    fn q_analogue_examples() {
        assert_eq!(q_binomial(2, 1), &PQRPoly::one() + &q());
        assert_eq!(q_binomial(4, 2).to_string(), "1 + q + 2*q^2 + q^3 + q^4");
        assert!(q_int(1).is_one());
        assert!(q_int(0).is_one());
        assert_eq!(q_int(3).to_string(), "1 + q + q^2");
        assert_eq!(q_factorial(3).to_string(), "1 + 2*q + 2*q^2 + q^3");
        assert!(q_binomial(3, 4).is_zero());
    }

    /// Partitions with at most `rows` parts, each at most `cols`, by size.
    fn box_partitions(rows: u32, cols: u32) -> PQRPoly {
        fn go(rows: u32, max_part: u32, size: u32, out: &mut PQRPoly) {
            out.add_term(Monomial::new(size, 0, 0), BigInt::one());
            if rows == 0 {
                return;
            }
            for part in 1..=max_part {
                go(rows - 1, part, size + part, out);
            }
        }
        let mut out = PQRPoly::zero();
        go(rows, cols, 0, &mut out);
        out
    }

    #[test]
    fn q_binomial_counts_partitions_in_a_box() {
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(q_binomial(n, k), box_partitions(n - k, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn q_binomial_symmetry_and_q_equals_one() {
        for n in 0..=12u32 {
            let mut binom = BigInt::one();
            for k in 0..=n {
                assert_eq!(q_binomial(n, k), q_binomial(n, n - k));
                assert_eq!(q_binomial(n, k).eval_int(1, 0, 0), binom);
                binom = binom * (n - k) / (k + 1);
            }
        }
    }

    #[test]
    fn xpoly_product_examples() {
        assert_eq!(xpoly_product([]), XPoly::one());
        let zero = PQRPoly::zero();
        let (f1, f2) = (q(), PQRPoly::q_pow(2));
        let a = xpoly_product([(Sign::Plus, &zero), (Sign::Minus, &f1)]);
        assert_eq!(
            a,
            XPoly::from_coeffs(vec![PQRPoly::zero(), -q(), PQRPoly::one()])
        );
        let b = xpoly_product([(Sign::Plus, &zero), (Sign::Plus, &f1), (Sign::Plus, &f2)]);
        assert_eq!(
            b,
            XPoly::from_coeffs(vec![
                PQRPoly::zero(),
                PQRPoly::q_pow(3),
                &q() + &PQRPoly::q_pow(2),
                PQRPoly::one(),
            ])
        );
    }

    #[test]
    fn geometric_series() {
        let s = tseries_geom(&PQRPoly::zero(), 4);
        assert!(s.coeff(0).is_one());
        assert!((1..=4).all(|n| s.coeff(n).is_zero()));
        let s = tseries_geom(&q(), 2);
        assert_eq!(s.coeffs(), &[PQRPoly::one(), q(), PQRPoly::q_pow(2)]);
        let s = tseries_geom(&PQRPoly::q_pow(2), 3);
        for n in 0..=3u32 {
            assert_eq!(*s.coeff(n as usize), PQRPoly::q_pow(2 * n));
        }
        assert!(s.coeff(9).is_zero());
    }

    #[test]
    fn series_product_keeps_order() {
        let a = tseries_geom(&q(), 5);
        let b = tseries_geom(&p(), 5).shift(2);
        let c = &a * &b;
        assert_eq!(c.order(), 5);
        assert!(c.coeff(0).is_zero());
        assert!(c.coeff(2).is_one());
        assert_eq!(*c.coeff(3), &q() + &p());
    }

    fn small_poly() -> impl Strategy<Value = PQRPoly> {
        prop::collection::vec((-5i64..=5, 0u32..3, 0u32..3, 0u32..2), 0..5).prop_map(|ts| {
            PQRPoly::from_terms(
                ts.into_iter()
                    .map(|(c, q, p, r)| (c, Monomial::new(q, p, r))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn xpoly_product_matches_scalar_product(
            factors in prop::collection::vec((any::<bool>(), small_poly()), 0..5),
            x in -4i64..=4, q0 in -3i64..=3, p0 in -3i64..=3, r0 in -2i64..=2,
        ) {
            let expanded = xpoly_product(factors.iter().map(|(plus, c)| {
                (if *plus { Sign::Plus } else { Sign::Minus }, c)
            }));
            let mut direct = BigInt::one();
            for (plus, c) in &factors {
                let v = c.eval_int(q0, p0, r0);
                direct *= if *plus { BigInt::from(x) + v } else { BigInt::from(x) - v };
            }
            prop_assert_eq!(expanded.eval_int(x, q0, p0, r0), direct);
        }
    }
}
