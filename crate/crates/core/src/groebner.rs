//! Gröbner bases for homogeneous submodules of graded free modules.
//!
//! Terms of a module element are `c * m * e_i`. They are ordered
//! term-over-position: graded reverse lexicographic on `m` first, then
//! the lower component index wins. Syzygies and certificates use the
//! classic lifting trick: each generator `g_i` is augmented by a unit
//! vector `e_i` in an extra block of components that is ordered below
//! every term of the original module, so the part of the basis living
//! entirely in the extra block generates the syzygy module.
//!
//! All computations are homogeneous and proceed degree by degree, which
//! lets membership queries stop as soon as the basis is complete up to
//! the degree of the query.

use std::cmp::Ordering;

use crate::poly::{Monomial, Polynomial};
use crate::rational::{big_gcd, big_lcm, Rational};
use crate::{Error, Result};

/// A graded free module `S(-shift_1) ⊕ ... ⊕ S(-shift_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedFreeModule {
    nvars: usize,
    shifts: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(nvars: usize, shifts: Vec<i64>) -> Self {
        GradedFreeModule { nvars, shifts }
    }

    /// Rank `r` module with all shifts zero.
    pub fn free(nvars: usize, rank: usize) -> Self {
        GradedFreeModule { nvars, shifts: vec![0; rank] }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    /// The `i`-th standard basis vector.
    pub fn basis_vector(&self, i: usize) -> ModuleVector {
        let mut comps = vec![Polynomial::zero(self.nvars); self.rank()];
        comps[i] = Polynomial::one(self.nvars);
        ModuleVector { comps }
    }

    pub fn zero_vector(&self) -> ModuleVector {
        ModuleVector { comps: vec![Polynomial::zero(self.nvars); self.rank()] }
    }
}

/// An element of a free module, one polynomial per component.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModuleVector {
    comps: Vec<Polynomial>,
}

impl ModuleVector {
    pub fn new(comps: Vec<Polynomial>) -> Self {
        assert!(!comps.is_empty(), "module vectors need at least one component");
        let n = comps[0].nvars();
        assert!(comps.iter().all(|p| p.nvars() == n), "components live in different rings");
        ModuleVector { comps }
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.comps
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn nvars(&self) -> usize {
        self.comps[0].nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    /// Degree in the graded module (`None` for zero or inhomogeneous input
    /// is never produced; zero yields `None`).
    pub fn degree(&self, module: &GradedFreeModule) -> Option<i64> {
        self.comps.iter().zip(module.shifts()).filter_map(|(p, s)| p.degree().map(|d| d as i64 + s)).max()
    }

    pub fn is_homogeneous(&self, module: &GradedFreeModule) -> bool {
        let mut deg = None;
        for (p, s) in self.comps.iter().zip(module.shifts()) {
            if p.is_zero() {
                continue;
            }
            if !p.is_homogeneous() {
                return false;
            }
            let d = p.degree().unwrap() as i64 + s;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return false,
                _ => {}
            }
        }
        true
    }

    pub fn add(&self, other: &ModuleVector) -> ModuleVector {
        assert_eq!(self.rank(), other.rank());
        ModuleVector { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &ModuleVector) -> ModuleVector {
        assert_eq!(self.rank(), other.rank());
        ModuleVector { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, f: &Polynomial) -> ModuleVector {
        ModuleVector { comps: self.comps.iter().map(|p| p * f).collect() }
    }

    pub fn scale_rational(&self, c: &Rational) -> ModuleVector {
        ModuleVector { comps: self.comps.iter().map(|p| p.scale(c)).collect() }
    }

    /// Divides by the content so that all coefficients are coprime
    /// integers, and makes the leading coefficient of the first nonzero
    /// component positive.
    pub fn primitive(&self) -> ModuleVector {
        let mut g = num_bigint::BigInt::from(0);
        let mut l = num_bigint::BigInt::from(1);
        for p in &self.comps {
            for (_, c) in p.terms() {
                g = big_gcd(&g, &c.numer());
                l = big_lcm(&l, &c.denom());
            }
        }
        if g == num_bigint::BigInt::from(0) {
            return self.clone();
        }
        let mut factor = Rational::from_bigints(l, g);
        if let Some(p) = self.comps.iter().find(|p| !p.is_zero()) {
            if p.leading_term().unwrap().1.is_negative() {
                factor = -factor;
            }
        }
        self.scale_rational(&factor)
    }
}

impl std::fmt::Debug for ModuleVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.comps.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl std::fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

/// `sum_i coeffs[i] * gens[i]`.
pub fn linear_combination(coeffs: &[Polynomial], gens: &[ModuleVector], module: &GradedFreeModule) -> ModuleVector {
    assert_eq!(coeffs.len(), gens.len());
    let mut acc = module.zero_vector();
    for (c, g) in coeffs.iter().zip(gens) {
        if !c.is_zero() {
            acc = acc.add(&g.scale(c));
        }
    }
    acc
}

#[derive(Clone, Debug)]
struct Term {
    mono: Monomial,
    comp: u32,
    coeff: Rational,
}

/// Module order: block (components below `split` first), then monomial,
/// then the lower component index.
#[derive(Clone, Copy, Debug)]
struct Order {
    split: u32,
}

impl Order {
    #[inline]
    fn cmp(&self, am: &Monomial, ac: u32, bm: &Monomial, bc: u32) -> Ordering {
        let ba = ac >= self.split;
        let bb = bc >= self.split;
        if ba != bb {
            return if ba { Ordering::Less } else { Ordering::Greater };
        }
        am.cmp(bm).then(bc.cmp(&ac))
    }
}

#[derive(Clone, Debug, Default)]
struct SVec {
    terms: Vec<Term>,
}

impl SVec {
    fn from_vector(v: &ModuleVector, order: Order) -> SVec {
        let mut terms: Vec<Term> = Vec::new();
        for (i, p) in v.comps.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push(Term { mono: *m, comp: i as u32, coeff: c.clone() });
            }
        }
        terms.sort_by(|a, b| order.cmp(&b.mono, b.comp, &a.mono, a.comp));
        SVec { terms }
    }

    fn to_vector(&self, nvars: usize, offset: usize, rank: usize) -> ModuleVector {
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            let c = t.comp as usize;
            if c >= offset && c < offset + rank {
                buckets[c - offset].push((t.mono, t.coeff.clone()));
            }
        }
        ModuleVector { comps: buckets.into_iter().map(|b| Polynomial::from_sorted_unchecked(nvars, b)).collect() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &Term {
        &self.terms[0]
    }

    fn make_monic(&mut self) {
        if let Some(t) = self.terms.first() {
            if !t.coeff.is_one() {
                let inv = t.coeff.recip();
                for t in &mut self.terms {
                    t.coeff = &t.coeff * &inv;
                }
            }
        }
    }

    /// `self - c * m * g`
    fn sub_mul(&self, c: &Rational, m: &Monomial, g: &SVec, order: Order) -> SVec {
        let a = &self.terms;
        let b = &g.terms;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let bm = b[j].mono.mul(m);
            match order.cmp(&a[i].mono, a[i].comp, &bm, b[j].comp) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { mono: bm, comp: b[j].comp, coeff: -(c * &b[j].coeff) });
                    j += 1;
                }
                Ordering::Equal => {
                    let v = &a[i].coeff - &(c * &b[j].coeff);
                    if !v.is_zero() {
                        out.push(Term { mono: bm, comp: b[j].comp, coeff: v });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        while j < b.len() {
            out.push(Term { mono: b[j].mono.mul(m), comp: b[j].comp, coeff: -(c * &b[j].coeff) });
            j += 1;
        }
        SVec { terms: out }
    }
}

fn divmask(m: &Monomial) -> u64 {
    let mut mask = 0u64;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e > 0 {
            mask |= 1 << i;
        }
        if e > 1 {
            mask |= 1 << (i + 8);
        }
        if e > 3 {
            mask |= 1 << (i + 16);
        }
    }
    mask
}

#[derive(Clone, Debug)]
struct Pair {
    deg: i64,
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Incremental homogeneous Buchberger engine.
#[derive(Clone, Debug)]
struct Engine {
    shifts: Vec<i64>,
    order: Order,
    basis: Vec<SVec>,
    leads: Vec<(Monomial, u32, u64)>,
    by_comp: Vec<Vec<usize>>,
    pairs: Vec<Pair>,
    pending: Vec<(i64, SVec)>,
    use_product_criterion: bool,
}

impl Engine {
    fn new(shifts: Vec<i64>, split: usize) -> Self {
        let rank = shifts.len();
        Engine {
            use_product_criterion: rank == 1,
            shifts,
            order: Order { split: split as u32 },
            basis: Vec::new(),
            leads: Vec::new(),
            by_comp: vec![Vec::new(); rank],
            pairs: Vec::new(),
            pending: Vec::new(),
        }
    }

    fn term_degree(&self, m: &Monomial, comp: u32) -> i64 {
        m.degree() as i64 + self.shifts[comp as usize]
    }

    fn queue(&mut self, v: SVec) {
        if v.is_zero() {
            return;
        }
        let d = self.term_degree(&v.lead().mono, v.lead().comp);
        let pos = self.pending.partition_point(|(e, _)| *e <= d);
        self.pending.insert(pos, (d, v));
    }

    fn find_divisor(&self, m: &Monomial, comp: u32) -> Option<usize> {
        let mask = divmask(m);
        let mut best: Option<usize> = None;
        for &k in &self.by_comp[comp as usize] {
            let (lm, _, lmask) = &self.leads[k];
            if lmask & !mask == 0 && lm.divides(m) {
                match best {
                    Some(b) if self.basis[b].terms.len() <= self.basis[k].terms.len() => {}
                    _ => best = Some(k),
                }
            }
        }
        best
    }

    /// Reduces the leading term until it is irreducible; with
    /// `stop_at_split` the reduction also stops once the leading term
    /// leaves the first block.
    fn top_reduce(&self, mut f: SVec, stop_at_split: bool) -> SVec {
        while let Some(t) = f.terms.first() {
            if stop_at_split && t.comp >= self.order.split {
                break;
            }
            match self.find_divisor(&t.mono, t.comp) {
                Some(k) => {
                    let q = self.leads[k].0.quotient_of(&t.mono);
                    let c = t.coeff.clone();
                    f = f.sub_mul(&c, &q, &self.basis[k], self.order);
                }
                None => break,
            }
        }
        f
    }

    fn full_reduce(&self, mut f: SVec) -> SVec {
        let mut rem: Vec<Term> = Vec::new();
        while !f.terms.is_empty() {
            let t = &f.terms[0];
            match self.find_divisor(&t.mono, t.comp) {
                Some(k) => {
                    let q = self.leads[k].0.quotient_of(&t.mono);
                    let c = t.coeff.clone();
                    f = f.sub_mul(&c, &q, &self.basis[k], self.order);
                }
                None => {
                    let t = f.terms.remove(0);
                    rem.push(t);
                }
            }
        }
        SVec { terms: rem }
    }

    fn insert(&mut self, mut v: SVec) {
        v.make_monic();
        let t = self.basis.len();
        let lead = v.lead().clone();
        let comp = lead.comp as usize;
        let mt = lead.mono;

        // B criterion on existing pairs
        let leads = &self.leads;
        self.pairs.retain(|p| {
            if leads[p.i].1 as usize != comp {
                return true;
            }
            if !mt.divides(&p.lcm) {
                return true;
            }
            let li = leads[p.i].0.lcm(&mt);
            let lj = leads[p.j].0.lcm(&mt);
            li == p.lcm || lj == p.lcm
        });

        let mut new: Vec<(Monomial, usize, bool)> = self.by_comp[comp]
            .iter()
            .map(|&i| {
                let mi = self.leads[i].0;
                (mi.lcm(&mt), i, mi.is_coprime(&mt))
            })
            .collect();
        // M criterion: drop pairs whose lcm is properly divisible by another
        let lcms: Vec<Monomial> = new.iter().map(|x| x.0).collect();
        new.retain(|(l, _, _)| !lcms.iter().any(|o| o != l && o.divides(l)));
        // F criterion (and product criterion for ideals)
        new.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        let mut kept = Vec::new();
        let mut k = 0;
        while k < new.len() {
            let mut e = k;
            while e < new.len() && new[e].0 == new[k].0 {
                e += 1;
            }
            let coprime = self.use_product_criterion && new[k..e].iter().any(|x| x.2);
            if !coprime {
                kept.push(new[k]);
            }
            k = e;
        }
        for (l, i, _) in kept {
            let deg = l.degree() as i64 + self.shifts[comp];
            self.pairs.push(Pair { deg, i, j: t, lcm: l });
        }

        self.leads.push((mt, lead.comp, divmask(&mt)));
        self.by_comp[comp].push(t);
        self.basis.push(v);
    }

    fn next_degree(&self) -> Option<i64> {
        let p = self.pairs.iter().map(|p| p.deg).min();
        let q = self.pending.first().map(|(d, _)| *d);
        match (p, q) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    /// Makes the basis complete in every degree `<= limit` (all degrees
    /// when `limit` is `None`).
    fn complete_to(&mut self, limit: Option<i64>) {
        while let Some(d) = self.next_degree() {
            if let Some(l) = limit {
                if d > l {
                    break;
                }
            }
            while self.pending.first().map(|(e, _)| *e == d).unwrap_or(false) {
                let (_, v) = self.pending.remove(0);
                let r = self.full_reduce(v);
                if !r.is_zero() {
                    self.insert(r);
                }
            }
            let mut batch: Vec<Pair> = Vec::new();
            let mut rest = Vec::with_capacity(self.pairs.len());
            for p in self.pairs.drain(..) {
                if p.deg == d {
                    batch.push(p);
                } else {
                    rest.push(p);
                }
            }
            self.pairs = rest;
            batch.sort_by(|a, b| a.j.cmp(&b.j).then(a.i.cmp(&b.i)));
            for p in batch {
                let s = self.spoly(&p);
                let r = self.full_reduce(s);
                if !r.is_zero() {
                    self.insert(r);
                }
            }
        }
    }

    fn spoly(&self, p: &Pair) -> SVec {
        let qi = self.leads[p.i].0.quotient_of(&p.lcm);
        let qj = self.leads[p.j].0.quotient_of(&p.lcm);
        let gi = &self.basis[p.i];
        let a = SVec {
            terms: gi
                .terms
                .iter()
                .map(|t| Term { mono: t.mono.mul(&qi), comp: t.comp, coeff: t.coeff.clone() })
                .collect(),
        };
        a.sub_mul(&Rational::one(), &qj, &self.basis[p.j], self.order)
    }

    /// Reduced basis: leads are already minimal, so only tails need work.
    fn reduced_elements(&self) -> Vec<SVec> {
        let mut out = Vec::with_capacity(self.basis.len());
        for (k, g) in self.basis.iter().enumerate() {
            let mut tail = SVec { terms: g.terms[1..].to_vec() };
            let mut others = self.clone();
            // exclude g itself from the reducers
            others.by_comp[self.leads[k].1 as usize].retain(|&x| x != k);
            tail = others.full_reduce(tail);
            let mut terms = vec![g.terms[0].clone()];
            terms.extend(tail.terms);
            out.push(SVec { terms });
        }
        out
    }
}

/// Monomial-order descriptor attached to a computed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderDescriptor {
    pub monomial_order: &'static str,
    pub position_rule: &'static str,
}

impl Default for OrderDescriptor {
    fn default() -> Self {
        OrderDescriptor {
            monomial_order: "degrevlex(x1 > ... > xl)",
            position_rule: "term-over-position, lower index first",
        }
    }
}

/// A reduced Gröbner basis of a submodule.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    module: GradedFreeModule,
    elements: Vec<ModuleVector>,
    order: OrderDescriptor,
    engine: Engine,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[ModuleVector] {
        &self.elements
    }

    pub fn module(&self) -> &GradedFreeModule {
        &self.module
    }

    pub fn order(&self) -> &OrderDescriptor {
        &self.order
    }

    /// Leading term of each element as (monomial, component).
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.engine.leads.iter().map(|(m, c, _)| (*m, *c as usize)).collect()
    }

    /// Reduces every S-vector of the basis from scratch; used to
    /// double-check the Buchberger criterion on small instances.
    pub fn all_spairs_reduce_to_zero(&self) -> bool {
        let order = self.engine.order;
        let svecs: Vec<SVec> = self.elements.iter().map(|e| SVec::from_vector(e, order)).collect();
        for i in 0..svecs.len() {
            for j in (i + 1)..svecs.len() {
                let (li, lj) = (svecs[i].lead(), svecs[j].lead());
                if li.comp != lj.comp {
                    continue;
                }
                let l = li.mono.lcm(&lj.mono);
                let a = SVec {
                    terms: svecs[i]
                        .terms
                        .iter()
                        .map(|t| Term {
                            mono: t.mono.mul(&li.mono.quotient_of(&l)),
                            comp: t.comp,
                            coeff: &t.coeff / &li.coeff,
                        })
                        .collect(),
                };
                let c = lj.coeff.recip();
                let s = a.sub_mul(&c, &lj.mono.quotient_of(&l), &svecs[j], order);
                if !self.engine.full_reduce(s).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

fn check_rank(v: &ModuleVector, module: &GradedFreeModule) -> Result<()> {
    if v.rank() != module.rank() {
        return Err(Error::RankMismatch { left: v.rank(), right: module.rank() });
    }
    if v.nvars() != module.nvars() {
        return Err(Error::VariableMismatch { left: v.nvars(), right: module.nvars() });
    }
    Ok(())
}

/// Computes the reduced Gröbner basis of the submodule generated by
/// `generators`. The input must be homogeneous.
pub fn buchberger(generators: &[ModuleVector], module: &GradedFreeModule) -> Result<GroebnerBasis> {
    let mut engine = Engine::new(module.shifts().to_vec(), module.rank());
    for g in generators {
        check_rank(g, module)?;
        debug_assert!(g.is_homogeneous(module));
        engine.queue(SVec::from_vector(g, engine.order));
    }
    engine.complete_to(None);
    let reduced = engine.reduced_elements();
    let elements = reduced.iter().map(|s| s.to_vector(module.nvars(), 0, module.rank())).collect();
    Ok(GroebnerBasis { module: module.clone(), elements, order: OrderDescriptor::default(), engine })
}

/// Fully reduced remainder of `v` modulo `basis`.
pub fn normal_form(v: &ModuleVector, basis: &GroebnerBasis) -> Result<ModuleVector> {
    check_rank(v, &basis.module)?;
    let r = basis.engine.full_reduce(SVec::from_vector(v, basis.engine.order));
    Ok(r.to_vector(basis.module.nvars(), 0, basis.module.rank()))
}

/// A finitely generated graded submodule with a lazily completed
/// Gröbner basis, for repeated membership queries.
#[derive(Debug, Clone)]
pub struct Submodule {
    module: GradedFreeModule,
    generators: Vec<ModuleVector>,
    engine: Engine,
}

impl Submodule {
    pub fn new(generators: &[ModuleVector], module: &GradedFreeModule) -> Result<Submodule> {
        let mut engine = Engine::new(module.shifts().to_vec(), module.rank());
        for g in generators {
            check_rank(g, module)?;
            engine.queue(SVec::from_vector(g, engine.order));
        }
        Ok(Submodule { module: module.clone(), generators: generators.to_vec(), engine })
    }

    pub fn generators(&self) -> &[ModuleVector] {
        &self.generators
    }

    pub fn module(&self) -> &GradedFreeModule {
        &self.module
    }

    pub fn contains(&mut self, v: &ModuleVector) -> Result<bool> {
        check_rank(v, &self.module)?;
        let Some(d) = v.degree(&self.module) else { return Ok(true) };
        self.engine.complete_to(Some(d));
        Ok(self.engine.top_reduce(SVec::from_vector(v, self.engine.order), false).is_zero())
    }

    pub fn contains_all(&mut self, vs: &[ModuleVector]) -> Result<bool> {
        for v in vs {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Result of a membership query with its certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// Coefficients `c_i` with `v = sum c_i * generators[i]` when member.
    pub certificate: Option<Vec<Polynomial>>,
}

/// Lifted basis of `(g_i | e_i)` used for syzygies and certificates.
struct Lift {
    rank: usize,
    ngens: usize,
    nvars: usize,
    engine: Engine,
}

impl Lift {
    fn new(generators: &[ModuleVector], module: &GradedFreeModule) -> Result<Lift> {
        let rank = module.rank();
        let ngens = generators.len();
        let mut shifts = module.shifts().to_vec();
        for g in generators {
            check_rank(g, module)?;
            shifts.push(g.degree(module).unwrap_or(0));
        }
        let mut engine = Engine::new(shifts, rank);
        for (i, g) in generators.iter().enumerate() {
            let mut comps = g.comps.clone();
            for k in 0..ngens {
                comps.push(if k == i { Polynomial::one(module.nvars()) } else { Polynomial::zero(module.nvars()) });
            }
            let aug = ModuleVector { comps };
            engine.queue(SVec::from_vector(&aug, engine.order));
        }
        Ok(Lift { rank, ngens, nvars: module.nvars(), engine })
    }

    fn syzygy_module(&self) -> GradedFreeModule {
        GradedFreeModule::new(self.nvars, self.engine.shifts[self.rank..].to_vec())
    }
}

/// Membership test with certificate coefficients.
pub fn is_member(v: &ModuleVector, generators: &[ModuleVector], module: &GradedFreeModule) -> Result<Membership> {
    check_rank(v, module)?;
    if v.is_zero() {
        return Ok(Membership {
            member: true,
            certificate: Some(vec![Polynomial::zero(module.nvars()); generators.len()]),
        });
    }
    let mut lift = Lift::new(generators, module)?;
    let d = v.degree(module).unwrap();
    lift.engine.complete_to(Some(d));
    let mut comps = v.comps.clone();
    comps.extend(std::iter::repeat_n(Polynomial::zero(module.nvars()), lift.ngens));
    let aug = SVec::from_vector(&ModuleVector { comps }, lift.engine.order);
    let r = lift.engine.top_reduce(aug, true);
    if r.terms.first().map(|t| (t.comp as usize) < lift.rank).unwrap_or(false) {
        return Ok(Membership { member: false, certificate: None });
    }
    let cert = r.to_vector(module.nvars(), lift.rank, lift.ngens);
    let certificate = cert.comps.iter().map(|p| -p).collect();
    Ok(Membership { member: true, certificate: Some(certificate) })
}

/// Generators of the first syzygy module of `generators`, living in the
/// free module whose `i`-th shift is the degree of `generators[i]`. The
/// returned set is minimal.
pub fn syzygies(
    generators: &[ModuleVector],
    module: &GradedFreeModule,
) -> Result<(GradedFreeModule, Vec<ModuleVector>)> {
    let mut lift = Lift::new(generators, module)?;
    lift.engine.complete_to(None);
    let syz_module = lift.syzygy_module();
    let raw: Vec<ModuleVector> = lift
        .engine
        .basis
        .iter()
        .filter(|s| (s.lead().comp as usize) >= lift.rank)
        .map(|s| s.to_vector(lift.nvars, lift.rank, lift.ngens))
        .collect();
    let min = min_generators(&raw, &syz_module)?;
    Ok((syz_module, min.into_iter().map(|v| v.primitive()).collect()))
}

/// A homogeneous map between graded free modules, stored as the images
/// of the source basis vectors (the columns of the matrix).
#[derive(Debug, Clone)]
pub struct GradedMap {
    pub source: GradedFreeModule,
    pub target: GradedFreeModule,
    pub columns: Vec<ModuleVector>,
}

impl GradedMap {
    /// Builds the map from matrix rows: `rows[k][j]` is the entry in
    /// target component `k` of the image of source basis vector `j`.
    pub fn from_rows(
        rows: &[Vec<Polynomial>],
        source: GradedFreeModule,
        target: GradedFreeModule,
    ) -> Result<GradedMap> {
        if rows.len() != target.rank() {
            return Err(Error::RankMismatch { left: rows.len(), right: target.rank() });
        }
        let mut columns = Vec::with_capacity(source.rank());
        for j in 0..source.rank() {
            let mut comps = Vec::with_capacity(rows.len());
            for row in rows {
                if row.len() != source.rank() {
                    return Err(Error::RankMismatch { left: row.len(), right: source.rank() });
                }
                comps.push(row[j].clone());
            }
            columns.push(ModuleVector { comps });
        }
        Ok(GradedMap { source, target, columns })
    }

    pub fn apply(&self, v: &ModuleVector) -> ModuleVector {
        linear_combination(v.components(), &self.columns, &self.target)
    }
}

/// Generators of the kernel of a graded map, as elements of its source.
pub fn kernel_of_map(map: &GradedMap) -> Result<Vec<ModuleVector>> {
    let nonzero: Vec<usize> = (0..map.columns.len()).filter(|&j| !map.columns[j].is_zero()).collect();
    let cols: Vec<ModuleVector> = nonzero.iter().map(|&j| map.columns[j].clone()).collect();
    let mut out = Vec::new();
    // zero columns contribute their basis vectors directly
    for j in 0..map.columns.len() {
        if map.columns[j].is_zero() {
            out.push(map.source.basis_vector(j));
        }
    }
    if !cols.is_empty() {
        let (_, syz) = syzygies(&cols, &map.target)?;
        for s in syz {
            let mut comps = vec![Polynomial::zero(map.source.nvars()); map.source.rank()];
            for (k, &j) in nonzero.iter().enumerate() {
                comps[j] = s.comps[k].clone();
            }
            out.push(ModuleVector { comps });
        }
    }
    min_generators(&out, &map.source)
}

/// A minimal homogeneous generating subset: candidates are visited by
/// (degree, input index) and kept iff they are not in the span of the
/// ones already kept.
pub fn min_generators(generators: &[ModuleVector], module: &GradedFreeModule) -> Result<Vec<ModuleVector>> {
    let idx = min_generator_indices(generators, module)?;
    Ok(idx.into_iter().map(|i| generators[i].clone()).collect())
}

/// Indices (into `generators`) of the subset chosen by [`min_generators`].
pub fn min_generator_indices(generators: &[ModuleVector], module: &GradedFreeModule) -> Result<Vec<usize>> {
    let mut order: Vec<(i64, usize)> = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        check_rank(g, module)?;
        if let Some(d) = g.degree(module) {
            order.push((d, i));
        }
    }
    order.sort();
    let mut engine = Engine::new(module.shifts().to_vec(), module.rank());
    let mut kept = Vec::new();
    for (d, i) in order {
        engine.complete_to(Some(d));
        let r = engine.top_reduce(SVec::from_vector(&generators[i], engine.order), false);
        if !r.is_zero() {
            kept.push(i);
            engine.insert(r);
        }
    }
    Ok(kept)
}

/// Like [`min_generator_indices`] but every element of `seed` is visited
/// before any element of `extra` of the same degree, so a minimal
/// generating set containing as much of `seed` as possible is chosen.
/// Returns the kept indices into `seed` and into `extra`.
pub fn extend_min_generators(
    seed: &[ModuleVector],
    extra: &[ModuleVector],
    module: &GradedFreeModule,
) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut order: Vec<(i64, u8, usize)> = Vec::new();
    for (i, g) in seed.iter().enumerate() {
        check_rank(g, module)?;
        if let Some(d) = g.degree(module) {
            order.push((d, 0, i));
        }
    }
    for (i, g) in extra.iter().enumerate() {
        check_rank(g, module)?;
        if let Some(d) = g.degree(module) {
            order.push((d, 1, i));
        }
    }
    order.sort();
    let mut engine = Engine::new(module.shifts().to_vec(), module.rank());
    let (mut ks, mut ke) = (Vec::new(), Vec::new());
    for (d, which, i) in order {
        engine.complete_to(Some(d));
        let v = if which == 0 { &seed[i] } else { &extra[i] };
        let r = engine.top_reduce(SVec::from_vector(v, engine.order), false);
        if !r.is_zero() {
            if which == 0 {
                ks.push(i);
            } else {
                ke.push(i);
            }
            engine.insert(r);
        }
    }
    Ok((ks, ke))
}

/// Whether two generating sets span the same submodule.
pub fn submodule_equal(a: &[ModuleVector], b: &[ModuleVector], module: &GradedFreeModule) -> Result<bool> {
    let mut sa = Submodule::new(a, module)?;
    let mut sb = Submodule::new(b, module)?;
    Ok(sb.contains_all(a)? && sa.contains_all(b)?)
}

/// Number of basis elements of the degree-`d` part of the submodule, from
/// the leading terms of a complete Gröbner basis.
pub fn hilbert_function(basis: &GroebnerBasis, d: i64) -> u64 {
    let module = &basis.module;
    let leads = basis.leading_terms();
    let mut count = 0;
    for (c, &s) in module.shifts().iter().enumerate() {
        let md = d - s;
        if md < 0 {
            continue;
        }
        for m in Monomial::all_of_degree(module.nvars(), md as u32) {
            if leads.iter().any(|(l, lc)| *lc == c && l.divides(&m)) {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    fn v(parts: &[&str], n: usize) -> ModuleVector {
        ModuleVector::new(parts.iter().map(|s| p(s, n)).collect())
    }

    #[test]
    fn principal_and_monomial_bases() {
        let m = GradedFreeModule::free(2, 1);
        let gb = buchberger(&[v(&["x1"], 2)], &m).unwrap();
        assert_eq!(gb.elements(), &[v(&["x1"], 2)]);
        let gb = buchberger(&[v(&["x1"], 2), v(&["x2"], 2)], &m).unwrap();
        assert_eq!(gb.elements().len(), 2);
        assert!(gb.all_spairs_reduce_to_zero());
    }

    #[test]
    fn two_binomials_by_hand() {
        // (x^2 - y^2, xy - y^2): S-pair y(x^2-y^2) - x(xy-y^2) = xy^2 - y^3
        // which reduces by y*(xy - y^2) to 0, so the input is already a
        // Gröbner basis; the reduced form is {x^2 - y^2, xy - y^2}.
        let m = GradedFreeModule::free(2, 1);
        let gb = buchberger(&[v(&["x1^2 - x2^2"], 2), v(&["x1*x2 - x2^2"], 2)], &m).unwrap();
        assert_eq!(gb.elements(), &[v(&["x1^2 - x2^2"], 2), v(&["x1*x2 - x2^2"], 2)]);
        assert!(gb.all_spairs_reduce_to_zero());
    }

    #[test]
    fn normal_form_examples() {
        let m = GradedFreeModule::free(2, 1);
        let gb = buchberger(&[v(&["x1"], 2)], &m).unwrap();
        assert!(normal_form(&v(&["x1^2"], 2), &gb).unwrap().is_zero());
        assert_eq!(normal_form(&v(&["x2"], 2), &gb).unwrap(), v(&["x2"], 2));
    }

    #[test]
    fn euler_vector_reduces_in_boolean_module() {
        let m = GradedFreeModule::free(3, 3);
        let gens = [v(&["x1", "0", "0"], 3), v(&["0", "x2", "0"], 3), v(&["0", "0", "x3"], 3)];
        let gb = buchberger(&gens, &m).unwrap();
        assert!(normal_form(&v(&["x1", "x2", "x3"], 3), &gb).unwrap().is_zero());
    }

    #[test]
    fn membership_with_certificate() {
        let m = GradedFreeModule::free(2, 1);
        let r = is_member(&v(&["x1*x2"], 2), &[v(&["x1"], 2)], &m).unwrap();
        assert!(r.member);
        assert_eq!(r.certificate.unwrap(), vec![p("x2", 2)]);
        let r = is_member(&v(&["x2"], 2), &[v(&["x1"], 2)], &m).unwrap();
        assert!(!r.member);
        assert!(r.certificate.is_none());
    }

    #[test]
    fn koszul_syzygy() {
        let m = GradedFreeModule::free(2, 1);
        let (sm, syz) = syzygies(&[v(&["x1"], 2), v(&["x2"], 2)], &m).unwrap();
        assert_eq!(sm.shifts(), &[1, 1]);
        assert_eq!(syz, vec![v(&["x2", "-x1"], 2)]);
        let m2 = GradedFreeModule::free(2, 2);
        let (_, syz) = syzygies(&[v(&["1", "0"], 2), v(&["0", "1"], 2)], &m2).unwrap();
        assert!(syz.is_empty());
    }

    #[test]
    fn kernel_examples() {
        let src = GradedFreeModule::new(2, vec![0, 0]);
        let tgt = GradedFreeModule::new(2, vec![-1]);
        let map = GradedMap::from_rows(&[vec![p("x1", 2), p("-x2", 2)]], src.clone(), tgt.clone()).unwrap();
        let k = kernel_of_map(&map).unwrap();
        assert_eq!(k, vec![v(&["x2", "x1"], 2)]);
        let inj = GradedMap::from_rows(&[vec![p("x1", 2)]], GradedFreeModule::new(2, vec![0]), tgt).unwrap();
        assert!(kernel_of_map(&inj).unwrap().is_empty());
    }

    #[test]
    fn minimal_generators_examples() {
        let m = GradedFreeModule::free(2, 1);
        let mg = min_generators(&[v(&["x1"], 2), v(&["x1^2"], 2)], &m).unwrap();
        assert_eq!(mg, vec![v(&["x1"], 2)]);
        let m2 = GradedFreeModule::free(2, 2);
        let basis = [v(&["1", "0"], 2), v(&["0", "1"], 2)];
        assert_eq!(min_generators(&basis, &m2).unwrap(), basis.to_vec());
    }

    #[test]
    fn submodule_equality_examples() {
        let m = GradedFreeModule::free(2, 1);
        assert!(submodule_equal(&[v(&["x1"], 2)], &[v(&["x1"], 2), v(&["x1^2"], 2)], &m).unwrap());
        assert!(!submodule_equal(&[v(&["x1"], 2)], &[v(&["x2"], 2)], &m).unwrap());
    }

    fn arb_hvec(nvars: usize, rank: usize) -> impl Strategy<Value = ModuleVector> {
        // homogeneous of degree 1 or 2 in a free module with zero shifts
        (1u32..3).prop_flat_map(move |d| {
            let monos = Monomial::all_of_degree(nvars, d);
            prop::collection::vec((0..rank, 0..monos.len(), -2i64..3), 1..4).prop_map(move |ts| {
                let mut comps = vec![Vec::new(); rank];
                for (c, mi, k) in ts {
                    comps[c].push((monos[mi], Rational::from_integer(k)));
                }
                ModuleVector::new(comps.into_iter().map(|t| Polynomial::from_terms(nvars, t)).collect())
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn bases_are_complete(gens in prop::collection::vec(arb_hvec(3, 2), 1..5)) {
            let m = GradedFreeModule::free(3, 2);
            let gb = buchberger(&gens, &m).unwrap();
            prop_assert!(gb.all_spairs_reduce_to_zero());
            for g in &gens {
                prop_assert!(normal_form(g, &gb).unwrap().is_zero());
            }
        }

        #[test]
        fn syzygies_and_certificates_are_exact(gens in prop::collection::vec(arb_hvec(3, 2), 1..5)) {
            let m = GradedFreeModule::free(3, 2);
            let gens: Vec<_> = gens.into_iter().filter(|g| !g.is_zero()).collect();
            let (sm, syz) = syzygies(&gens, &m).unwrap();
            for s in &syz {
                prop_assert!(linear_combination(s.components(), &gens, &m).is_zero());
                prop_assert!(s.is_homogeneous(&sm));
            }
            if gens.len() >= 2 {
                let x = Polynomial::var(3, 0);
                let target = gens[0].scale(&x).add(&gens[1]);
                if target.is_homogeneous(&m) {
                    let r = is_member(&target, &gens, &m).unwrap();
                    prop_assert!(r.member);
                    let cert = r.certificate.unwrap();
                    prop_assert_eq!(linear_combination(&cert, &gens, &m), target);
                }
            }
        }

        #[test]
        fn minimal_degrees_are_choice_free(gens in prop::collection::vec(arb_hvec(3, 2), 1..6), k in 1i64..5) {
            let m = GradedFreeModule::free(3, 2);
            let degs = |gs: &[ModuleVector]| {
                let mut d: Vec<_> = min_generators(gs, &m).unwrap().iter().map(|g| g.degree(&m).unwrap()).collect();
                d.sort();
                d
            };
            let mut rev = gens.clone();
            rev.reverse();
            let scaled: Vec<_> = gens.iter().map(|g| g.scale_rational(&Rational::from_integer(k))).collect();
            prop_assert_eq!(degs(&gens), degs(&rev));
            prop_assert_eq!(degs(&gens), degs(&scaled));
        }
    }
}
