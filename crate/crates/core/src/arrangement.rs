//! Central hyperplane arrangements and multiarrangements.
//!
//! Hyperplanes are addressed by 1-based indices in input order throughout
//! the public API.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::linalg::{sparse_from_dense, Echelon};
use crate::poly::Polynomial;
use crate::rational::{big_gcd, big_lcm, Rational};
use crate::{Error, Result};

/// A primitive integer linear form with positive first nonzero entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    coeffs: Vec<BigInt>,
}

impl LinearForm {
    /// Normalizes a nonzero rational coefficient vector.
    pub fn from_rationals(coeffs: &[Rational]) -> Result<LinearForm> {
        let mut l = BigInt::one();
        for c in coeffs {
            l = big_lcm(&l, &c.denom());
        }
        let ints: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect();
        Self::from_integers(ints)
    }

    pub fn from_integers(mut coeffs: Vec<BigInt>) -> Result<LinearForm> {
        let mut g = BigInt::zero();
        for c in &coeffs {
            g = big_gcd(&g, c);
        }
        if g.is_zero() {
            return Err(Error::Precondition("zero linear form".into()));
        }
        let first_neg = coeffs.iter().find(|c| !c.is_zero()).map(|c| c.is_negative()).unwrap();
        if first_neg {
            g = -g;
        }
        for c in coeffs.iter_mut() {
            *c = &*c / &g;
        }
        Ok(LinearForm { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<LinearForm> {
        Self::from_integers(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Reads a homogeneous linear polynomial.
    pub fn from_polynomial(p: &Polynomial) -> Result<LinearForm> {
        if p.is_zero() {
            return Err(Error::Precondition("zero linear form".into()));
        }
        if p.degree() != Some(1) || !p.is_homogeneous() {
            return Err(Error::Precondition(format!("`{p}` is not a homogeneous linear form")));
        }
        let n = p.nvars();
        let coeffs: Vec<Rational> = (0..n).map(|i| p.coefficient(&crate::poly::Monomial::var(n, i))).collect();
        Self::from_rationals(&coeffs)
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn rational_coefficients(&self) -> Vec<Rational> {
        self.coeffs.iter().map(|c| Rational::from_bigint(c.clone())).collect()
    }

    /// Index of the first nonzero coefficient (0-based).
    pub fn pivot(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::linear(&self.rational_coefficients())
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

/// A flat of the intersection lattice, stored as its closed set of
/// 1-based hyperplane indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat {
    pub rank: usize,
    pub hyperplanes: BTreeSet<usize>,
}

/// Output of [`Arrangement::euler_restriction`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    pub arrangement: Arrangement,
    /// For every 1-based index of the original arrangement, the 1-based
    /// index of its image in the restriction (`None` for the hyperplane
    /// restricted to).
    pub fiber: Vec<Option<usize>>,
    /// 0-based index of the eliminated variable.
    pub eliminated: usize,
}

/// An ordered central arrangement of pairwise distinct hyperplanes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrangement {
    nvars: usize,
    forms: Vec<LinearForm>,
}

impl Arrangement {
    pub fn new(nvars: usize, forms: Vec<LinearForm>) -> Result<Arrangement> {
        for (k, f) in forms.iter().enumerate() {
            if f.nvars() != nvars {
                return Err(Error::VariableMismatch { left: f.nvars(), right: nvars });
            }
            if forms[..k].contains(f) {
                return Err(Error::Precondition(format!("duplicate hyperplane {f}")));
            }
        }
        Ok(Arrangement { nvars, forms })
    }

    /// Convenience constructor from integer rows.
    pub fn from_rows(nvars: usize, rows: &[&[i64]]) -> Result<Arrangement> {
        let forms = rows.iter().map(|r| LinearForm::from_i64(r)).collect::<Result<Vec<_>>>()?;
        Arrangement::new(nvars, forms)
    }

    pub fn boolean(nvars: usize) -> Arrangement {
        let forms = (0..nvars)
            .map(|i| {
                let mut v = vec![0i64; nvars];
                v[i] = 1;
                LinearForm::from_i64(&v).unwrap()
            })
            .collect();
        Arrangement { nvars, forms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn form(&self, index: usize) -> Result<&LinearForm> {
        self.check_index(index)?;
        Ok(&self.forms[index - 1])
    }

    pub fn position(&self, form: &LinearForm) -> Option<usize> {
        self.forms.iter().position(|f| f == form).map(|k| k + 1)
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index == 0 || index > self.forms.len() {
            return Err(Error::HyperplaneIndex { index, len: self.forms.len() });
        }
        Ok(())
    }

    pub fn defining_polynomial(&self) -> Polynomial {
        let mut q = Polynomial::one(self.nvars);
        for f in &self.forms {
            q = &q * &f.to_polynomial();
        }
        q
    }

    /// Removes the given hyperplanes. Also returns, for each position of
    /// the result, the 1-based index it had in `self`.
    pub fn delete(&self, indices: &[usize]) -> Result<(Arrangement, Vec<usize>)> {
        for &i in indices {
            self.check_index(i)?;
        }
        let drop: BTreeSet<usize> = indices.iter().copied().collect();
        if drop.len() != indices.len() {
            return Err(Error::Precondition("repeated index in deletion".into()));
        }
        let mut forms = Vec::new();
        let mut table = Vec::new();
        for (k, f) in self.forms.iter().enumerate() {
            if !drop.contains(&(k + 1)) {
                forms.push(f.clone());
                table.push(k + 1);
            }
        }
        Ok((Arrangement { nvars: self.nvars, forms }, table))
    }

    /// Adds a hyperplane at the end; fails if it is already present.
    pub fn add(&self, form: LinearForm) -> Result<Arrangement> {
        let mut forms = self.forms.clone();
        forms.push(form);
        Arrangement::new(self.nvars, forms)
    }

    /// Rank of the span of the forms with the given 1-based indices.
    pub fn rank_of(&self, indices: &[usize]) -> usize {
        let mut e = Echelon::new(self.nvars);
        for &i in indices {
            e.insert(&sparse_from_dense(&self.forms[i - 1].rational_coefficients()));
        }
        e.rank()
    }

    pub fn rank(&self) -> usize {
        let all: Vec<usize> = (1..=self.len()).collect();
        self.rank_of(&all)
    }

    /// All hyperplanes containing the intersection of the given ones.
    pub fn closure(&self, indices: &[usize]) -> BTreeSet<usize> {
        let mut e = Echelon::new(self.nvars);
        for &i in indices {
            e.insert(&sparse_from_dense(&self.forms[i - 1].rational_coefficients()));
        }
        (1..=self.len())
            .filter(|&k| e.contains(&sparse_from_dense(&self.forms[k - 1].rational_coefficients())))
            .collect()
    }

    /// All flats of rank at most `up_to_rank`, by increasing rank and then
    /// lexicographically.
    pub fn intersection_lattice(&self, up_to_rank: usize) -> Vec<Flat> {
        let mut out = vec![Flat { rank: 0, hyperplanes: BTreeSet::new() }];
        let mut layer: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        layer.insert(BTreeSet::new());
        for r in 1..=up_to_rank.min(self.nvars) {
            let mut next: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
            for f in &layer {
                for h in 1..=self.len() {
                    if f.contains(&h) {
                        continue;
                    }
                    let mut gens: Vec<usize> = f.iter().copied().collect();
                    gens.push(h);
                    next.insert(self.closure(&gens));
                }
            }
            out.extend(next.iter().map(|s| Flat { rank: r, hyperplanes: s.clone() }));
            layer = next;
        }
        out
    }

    /// `|A_X|` for `X = H_i ∩ H_j`.
    pub fn flat_multiplicity(&self, i: usize, j: usize) -> Result<usize> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            return Err(Error::Precondition("flat multiplicity needs two distinct hyperplanes".into()));
        }
        Ok(self.closure(&[i, j]).len())
    }

    /// The hyperplanes containing `flat`, as a sub-arrangement.
    pub fn localization(&self, flat: &Flat) -> Result<Arrangement> {
        for &i in &flat.hyperplanes {
            self.check_index(i)?;
        }
        let gens: Vec<usize> = flat.hyperplanes.iter().copied().collect();
        if self.closure(&gens) != flat.hyperplanes || self.rank_of(&gens) != flat.rank {
            return Err(Error::Precondition("not a flat of this arrangement".into()));
        }
        let forms = gens.iter().map(|&i| self.forms[i - 1].clone()).collect();
        Ok(Arrangement { nvars: self.nvars, forms })
    }

    /// The restriction `A^{H_i}` in `ℓ − 1` variables. The variable with
    /// the smallest index occurring in `α_i` is eliminated; images are
    /// deduplicated in order of first appearance.
    pub fn euler_restriction(&self, i: usize) -> Result<Restriction> {
        self.check_index(i)?;
        let alpha = self.forms[i - 1].rational_coefficients();
        let p = self.forms[i - 1].pivot();
        let mut forms: Vec<LinearForm> = Vec::new();
        let mut fiber = vec![None; self.len()];
        for (k, f) in self.forms.iter().enumerate() {
            if k + 1 == i {
                continue;
            }
            let beta = f.rational_coefficients();
            let t = &beta[p] / &alpha[p];
            let img: Vec<Rational> =
                (0..self.nvars).filter(|&c| c != p).map(|c| &beta[c] - &(&t * &alpha[c])).collect();
            let lf = LinearForm::from_rationals(&img)?;
            let pos = match forms.iter().position(|g| *g == lf) {
                Some(q) => q,
                None => {
                    forms.push(lf);
                    forms.len() - 1
                }
            };
            fiber[k] = Some(pos + 1);
        }
        Ok(Restriction { arrangement: Arrangement { nvars: self.nvars - 1, forms }, fiber, eliminated: p })
    }

    /// The Ziegler multirestriction `(A^{H_i}, m^{H_i})`.
    pub fn ziegler_restriction(&self, i: usize) -> Result<Multiarrangement> {
        let r = self.euler_restriction(i)?;
        let mut mult = vec![0u32; r.arrangement.len()];
        for k in r.fiber.iter().flatten() {
            mult[k - 1] += 1;
        }
        Multiarrangement::new(r.arrangement, mult)
    }

    /// Image under `x ↦ M x` of the coordinates: each form `α` becomes
    /// `α ∘ M`.
    pub fn linear_change(&self, matrix: &[Vec<i64>]) -> Result<Arrangement> {
        let forms = self
            .forms
            .iter()
            .map(|f| {
                let c: Vec<BigInt> = (0..self.nvars)
                    .map(|col| f.coeffs.iter().enumerate().map(|(row, a)| a * BigInt::from(matrix[row][col])).sum())
                    .collect();
                LinearForm::from_integers(c)
            })
            .collect::<Result<Vec<_>>>()?;
        Arrangement::new(self.nvars, forms)
    }

    pub fn permuted(&self, order: &[usize]) -> Arrangement {
        Arrangement { nvars: self.nvars, forms: order.iter().map(|&k| self.forms[k - 1].clone()).collect() }
    }
}

/// An arrangement with a non-negative multiplicity on each hyperplane.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multiarrangement {
    base: Arrangement,
    mult: Vec<u32>,
}

impl Multiarrangement {
    pub fn new(base: Arrangement, mult: Vec<u32>) -> Result<Multiarrangement> {
        if mult.len() != base.len() {
            return Err(Error::RankMismatch { left: mult.len(), right: base.len() });
        }
        Ok(Multiarrangement { base, mult })
    }

    pub fn simple(base: Arrangement) -> Multiarrangement {
        let mult = vec![1; base.len()];
        Multiarrangement { base, mult }
    }

    pub fn base(&self) -> &Arrangement {
        &self.base
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mult
    }

    pub fn nvars(&self) -> usize {
        self.base.nvars()
    }

    pub fn total(&self) -> u64 {
        self.mult.iter().map(|&m| m as u64).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&m| m == 1)
    }

    pub fn into_simple(self) -> Option<Arrangement> {
        if self.is_simple() {
            Some(self.base)
        } else {
            None
        }
    }
}

impl From<Arrangement> for Multiarrangement {
    fn from(a: Arrangement) -> Self {
        Multiarrangement::simple(a)
    }
}
