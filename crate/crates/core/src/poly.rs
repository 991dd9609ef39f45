//! Multivariate polynomials over the rationals.
//!
//! Terms are stored densely-exponented and sorted strictly decreasing in
//! graded reverse lexicographic order with `x1 > x2 > ... > xl`. Every
//! operation returns a canonical value: no zero coefficients, no repeated
//! monomials.

use std::cmp::Ordering;
use std::fmt;

use crate::rational::Rational;
use crate::Error;

/// Largest supported number of variables.
pub const MAX_VARS: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    nvars: u8,
    deg: u16,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        Monomial { exps: [0; MAX_VARS], nvars: nvars as u8, deg: 0 }
    }

    /// The variable `x_{var+1}` (0-based index).
    pub fn var(nvars: usize, var: usize) -> Self {
        let mut m = Monomial::one(nvars);
        assert!(var < nvars);
        m.exps[var] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut m = Monomial::one(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            assert!(e <= u8::MAX as u32, "exponent too large");
            m.exps[i] = e as u8;
            m.deg += e as u16;
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var] as u32
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps[..self.nvars as usize]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..self.nvars as usize {
            m.exps[i] += other.exps[i];
        }
        m.deg += other.deg;
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && (0..self.nvars as usize).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut m = *other;
        for i in 0..self.nvars as usize {
            m.exps[i] -= self.exps[i];
        }
        m.deg -= self.deg;
        m
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        let mut deg = 0u16;
        for i in 0..self.nvars as usize {
            m.exps[i] = m.exps[i].max(other.exps[i]);
            deg += m.exps[i] as u16;
        }
        m.deg = deg;
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..self.nvars as usize).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    fn with_exponent(&self, var: usize, e: u32) -> Monomial {
        let mut m = *self;
        m.deg = m.deg - m.exps[var] as u16 + e as u16;
        m.exps[var] = e as u8;
        m
    }

    /// Removes variable `var` (which must have exponent zero) and
    /// re-indexes the remaining variables densely.
    fn drop_var(&self, var: usize) -> Monomial {
        debug_assert_eq!(self.exps[var], 0);
        let mut m = Monomial::one(self.nvars as usize - 1);
        let mut k = 0;
        for i in 0..self.nvars as usize {
            if i != var {
                m.exps[k] = self.exps[i];
                k += 1;
            }
        }
        m.deg = self.deg;
        m
    }

    /// All monomials of total degree `d` in `nvars` variables, in
    /// decreasing order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(Monomial::from_exponents(cur));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
        }
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

impl Ord for Monomial {
    /// Graded reverse lexicographic order.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..self.nvars as usize).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", MonoDisplay(self))
    }
}

struct MonoDisplay<'a>(&'a Monomial);

impl fmt::Display for MonoDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        Polynomial { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_terms(nvars, vec![(Monomial::one(nvars), c)])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The variable `x_{var+1}` (0-based index).
    pub fn var(nvars: usize, var: usize) -> Self {
        Polynomial { nvars, terms: vec![(Monomial::var(nvars, var), Rational::one())] }
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        Self::from_terms(m.nvars(), vec![(m, c)])
    }

    /// A linear form `sum c_i x_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let terms = coeffs.iter().enumerate().map(|(i, c)| (Monomial::var(n, i), c.clone())).collect();
        Self::from_terms(n, terms)
    }

    /// Canonicalizes an arbitrary list of terms.
    pub fn from_terms(nvars: usize, mut terms: Vec<(Monomial, Rational)>) -> Self {
        terms.sort_by_key(|t| std::cmp::Reverse(t.0));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { nvars, terms: out }
    }

    /// Wraps terms that are already sorted strictly decreasing with no zeros.
    pub(crate) fn from_sorted_unchecked(nvars: usize, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` stands for the degree of the zero polynomial
    /// and compares below every `Some(d)`.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.degree() == 0)
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    fn check(&self, other: &Polynomial) -> Result<(), Error> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.check(other)?;
        Ok(self.combine(other, &Rational::one(), None))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// `self + c * m * other`, merged in one pass.
    pub(crate) fn combine(&self, other: &Polynomial, c: &Rational, m: Option<&Monomial>) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let bm = if j < b.len() {
                Some(match m {
                    Some(m) => b[j].0.mul(m),
                    None => b[j].0,
                })
            } else {
                None
            };
            let ord = match (i < a.len(), bm) {
                (true, Some(bm)) => a[i].0.cmp(&bm),
                (true, None) => Ordering::Greater,
                (false, _) => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let coeff = if c.is_one() { b[j].1.clone() } else { c * &b[j].1 };
                    out.push((bm.unwrap(), coeff));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = if c.is_one() { &a[i].1 + &b[j].1 } else { &a[i].1 + &(c * &b[j].1) };
                    if !s.is_zero() {
                        out.push((a[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { nvars: self.nvars, terms: out }
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Polynomial::zero(self.nvars);
        for (m, c) in &small.terms {
            acc = acc.combine(big, c, Some(m));
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Formal partial derivative with respect to `x_{var+1}`.
    pub fn partial(&self, var: usize) -> Result<Polynomial, Error> {
        if var >= self.nvars {
            return Err(Error::VariableIndex { index: var + 1, nvars: self.nvars });
        }
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(var) > 0)
            .map(|(m, c)| {
                let e = m.exponent(var);
                (m.with_exponent(var, e - 1), c * &Rational::from_integer(e as i64))
            })
            .collect();
        Ok(Polynomial::from_terms(self.nvars, terms))
    }

    /// Substitutes `x_{var+1} := replacement`.
    pub fn substitute(&self, var: usize, replacement: &Polynomial) -> Result<Polynomial, Error> {
        if var >= self.nvars {
            return Err(Error::VariableIndex { index: var + 1, nvars: self.nvars });
        }
        self.check(replacement)?;
        let max_e = self.terms.iter().map(|(m, _)| m.exponent(var)).max().unwrap_or(0);
        let mut powers = vec![Polynomial::one(self.nvars)];
        for k in 1..=max_e as usize {
            let next = powers[k - 1].mul_unchecked(replacement);
            powers.push(next);
        }
        let mut acc = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(var) as usize;
            let rest = m.with_exponent(var, 0);
            acc = acc.combine(&powers[e], c, Some(&rest));
        }
        Ok(acc)
    }

    /// Moves to the ring without `x_{var+1}`; the variable must not occur.
    pub fn drop_variable(&self, var: usize) -> Result<Polynomial, Error> {
        if var >= self.nvars {
            return Err(Error::VariableIndex { index: var + 1, nvars: self.nvars });
        }
        if self.terms.iter().any(|(m, _)| m.exponent(var) > 0) {
            return Err(Error::VariableOccurs { index: var + 1 });
        }
        let terms = self.terms.iter().map(|(m, c)| (m.drop_var(var), c.clone())).collect();
        Ok(Polynomial::from_terms(self.nvars - 1, terms))
    }

    /// Division by `divisor`, viewed as univariate polynomials in
    /// `x_{var+1}`. The divisor's leading coefficient in that variable
    /// must be a constant. Returns `(quotient, remainder)` with the
    /// remainder of `var`-degree below the divisor's.
    pub fn div_rem_in(&self, divisor: &Polynomial, var: usize) -> Result<(Polynomial, Polynomial), Error> {
        self.check(divisor)?;
        let top = divisor.terms.iter().map(|(m, _)| m.exponent(var)).max().ok_or(Error::DivisionByZero)?;
        let lead: Vec<_> = divisor.terms.iter().filter(|(m, _)| m.exponent(var) == top).collect();
        if lead.len() != 1 || lead[0].0.degree() != top {
            return Err(Error::NonMonicDivisor);
        }
        let inv = lead[0].1.recip();
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        loop {
            let pick = rem
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(var) >= top)
                .max_by(|a, b| a.0.exponent(var).cmp(&b.0.exponent(var)).then(a.0.cmp(&b.0)));
            let Some((m, c)) = pick.cloned() else { break };
            let qm = m.with_exponent(var, m.exponent(var) - top);
            let qc = &c * &inv;
            quot = quot.combine(&Polynomial::monomial(qm, qc.clone()), &Rational::one(), None);
            rem = rem.combine(divisor, &(-&qc), Some(&qm));
        }
        Ok((quot, rem))
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate().take(self.nvars) {
                let e = m.exponent(i);
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Applies the linear change of coordinates `x_i := sum_j a_ij x_j`.
    pub fn linear_change(&self, matrix: &[Vec<Rational>]) -> Polynomial {
        let images: Vec<Polynomial> = matrix.iter().map(|row| Polynomial::linear(row)).collect();
        let mut acc = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(self.nvars, c.clone());
            for (i, img) in images.iter().enumerate() {
                for _ in 0..m.exponent(i) {
                    t = t.mul_unchecked(img);
                }
            }
            acc = acc.combine(&t, &Rational::one(), None);
        }
        acc
    }

    pub fn parse(text: &str, nvars: usize) -> Result<Polynomial, Error> {
        crate::polyparse::parse_polynomial(text, nvars)
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("variable count mismatch")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check(rhs).expect("variable count mismatch");
        self.combine(rhs, &Rational::from_integer(-1), None)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("variable count mismatch")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&Rational::from_integer(-1))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.degree() == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", MonoDisplay(m))?;
            } else {
                write!(f, "{a}*{}", MonoDisplay(m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Number of monomials of degree `d` in `n` variables.
pub fn monomial_count(n: usize, d: i64) -> u64 {
    if d < 0 {
        return 0;
    }
    if n == 0 {
        return u64::from(d == 0);
    }
    // C(d + n - 1, n - 1)
    let (top, k) = (d as u64 + n as u64 - 1, n as u64 - 1);
    let mut r = 1u64;
    for i in 0..k {
        r = r * (top - i) / (i + 1);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    #[test]
    fn addition_examples() {
        assert!((&p("x1", 2) + &p("-x1", 2)).is_zero());
        assert_eq!(&p("x1", 2) + &p("x1", 2), p("2*x1", 2));
        assert_eq!(&p("x1^2 + x2", 2) + &p("x2 - x1^2", 2), p("2*x2", 2));
        assert!(matches!(p("x1", 2).try_add(&p("x1", 3)), Err(Error::VariableMismatch { .. })));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&p("x1", 2) * &p("x2", 2), p("x1*x2", 2));
        assert_eq!(&p("x1 - x2", 2) * &p("x1 + x2", 2), p("x1^2 - x2^2", 2));
        assert!(p("x1", 2).try_mul(&p("x1", 3)).is_err());
    }

    #[test]
    fn partial_examples() {
        assert_eq!(p("x1*x2*x3", 3).partial(1).unwrap(), p("x1*x3", 3));
        assert!(p("7", 3).partial(0).unwrap().is_zero());
        assert!(matches!(p("x1", 3).partial(3), Err(Error::VariableIndex { .. })));
        let q = p("x1*x2*x3", 3);
        assert_eq!(q.partial(0).unwrap(), p("x2*x3", 3));
        let mut euler = Polynomial::zero(3);
        for i in 0..3 {
            euler = &euler + &(&Polynomial::var(3, i) * &q.partial(i).unwrap());
        }
        assert_eq!(euler, q.scale(&Rational::from_integer(3)));
    }

    #[test]
    fn substitution_examples() {
        assert!(p("x1 - x2", 2).substitute(0, &p("x2", 2)).unwrap().is_zero());
        assert_eq!(p("x1 + x3", 3).substitute(0, &p("x2 - x3", 3)).unwrap(), p("x2", 3));
        // The six non-x3 factors of the seven-line arrangement, modulo x3.
        let other = ["x1", "x2", "x1 - x2", "x1 - x3", "x2 - x3", "x1 + x2 - x3"];
        let prod = other.iter().fold(Polynomial::one(3), |acc, f| &acc * &p(f, 3));
        let restricted = prod.substitute(2, &Polynomial::zero(3)).unwrap();
        let expected =
            ["x1", "x2", "x1 - x2", "x1", "x2", "x1 + x2"].iter().fold(Polynomial::one(3), |acc, f| &acc * &p(f, 3));
        assert_eq!(restricted, expected);
        assert_eq!(restricted, p("x1^4*x2^2 - x1^2*x2^4", 3));
    }

    #[test]
    fn zero_degree_is_below_everything() {
        assert_eq!(Polynomial::zero(2).degree(), None);
        assert!(Polynomial::zero(2).degree() < Some(0));
    }

    #[test]
    fn division_in_pivot_variable() {
        let f = p("x1^2 - x2^2 + x3", 3);
        let (q, r) = f.div_rem_in(&p("x1 - x2", 3), 0).unwrap();
        assert_eq!(q, p("x1 + x2", 3));
        assert_eq!(r, p("x3", 3));
        let (_, r) = p("x1^3", 2).div_rem_in(&p("2*x1 + x2", 2).pow(2), 0).unwrap();
        assert!(r.terms().iter().all(|(m, _)| m.exponent(0) < 2));
    }

    #[test]
    fn printing_is_canonical() {
        assert_eq!(p("x3 + x1 - 2*x2", 3).to_string(), "x1 - 2*x2 + x3");
        assert_eq!(p("-1/2*x1^2*x2 + 3", 2).to_string(), "-1/2*x1^2*x2 + 3");
        assert_eq!(Polynomial::zero(2).to_string(), "0");
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u32..3, n), -5i64..6), 0..5).prop_map(move |ts| {
            Polynomial::from_terms(
                n,
                ts.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), Rational::from_integer(c))).collect(),
            )
        })
    }

    fn arb_homogeneous(n: usize) -> impl Strategy<Value = Polynomial> {
        (0u32..4).prop_flat_map(move |d| {
            let monos = Monomial::all_of_degree(n, d);
            prop::collection::vec((0..monos.len(), -4i64..5), 1..5).prop_map(move |ts| {
                Polynomial::from_terms(n, ts.into_iter().map(|(i, c)| (monos[i], Rational::from_integer(c))).collect())
            })
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn homogeneous_products(a in arb_homogeneous(4), b in arb_homogeneous(4)) {
            let prod = &a * &b;
            if !a.is_zero() && !b.is_zero() {
                prop_assert!(prod.is_homogeneous());
                prop_assert_eq!(prod.degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
            }
        }

        #[test]
        fn euler_identity(f in arb_homogeneous(4)) {
            let mut acc = Polynomial::zero(4);
            for i in 0..4 {
                acc = &acc + &(&Polynomial::var(4, i) * &f.partial(i).unwrap());
            }
            let d = f.degree().unwrap_or(0) as i64;
            prop_assert_eq!(acc, f.scale(&Rational::from_integer(d)));
        }

        #[test]
        fn parse_print_roundtrip(f in arb_poly(3)) {
            prop_assert_eq!(Polynomial::parse(&f.to_string(), 3).unwrap(), f);
        }
    }
}
