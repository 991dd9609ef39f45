//! Logarithmic derivation modules `D(A)` and `D(A, m)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::arrangement::{Arrangement, LinearForm, Multiarrangement};
use crate::groebner::{self, GradedFreeModule, GradedMap, ModuleVector, Submodule};
use crate::poly::Polynomial;
use crate::{Error, Result};

/// A derivation `θ = Σ f_i ∂_i`, stored by its coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Derivation {
    comps: Vec<Polynomial>,
}

impl Derivation {
    pub fn new(comps: Vec<Polynomial>) -> Derivation {
        assert!(!comps.is_empty());
        Derivation { comps }
    }

    pub fn euler(nvars: usize) -> Derivation {
        Derivation { comps: (0..nvars).map(|i| Polynomial::var(nvars, i)).collect() }
    }

    /// `∂_i` (0-based `i`).
    pub fn partial(nvars: usize, i: usize) -> Derivation {
        let mut comps = vec![Polynomial::zero(nvars); nvars];
        comps[i] = Polynomial::one(nvars);
        Derivation { comps }
    }

    pub fn nvars(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    /// Polynomial degree; `None` for the zero derivation.
    pub fn degree(&self) -> Option<i64> {
        self.comps.iter().filter_map(|p| p.degree()).max().map(|d| d as i64)
    }

    pub fn is_homogeneous(&self) -> bool {
        ModuleVector::new(self.comps.clone()).is_homogeneous(&GradedFreeModule::free(self.nvars(), self.nvars()))
    }

    /// `θ(f) = Σ θ_i ∂f/∂x_i`.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(f.nvars());
        for (i, c) in self.comps.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = f.partial(i).expect("variable index in range");
            if !d.is_zero() {
                acc = &acc + &(c * &d);
            }
        }
        acc
    }

    pub fn scale(&self, f: &Polynomial) -> Derivation {
        Derivation { comps: self.comps.iter().map(|c| c * f).collect() }
    }

    pub fn to_vector(&self) -> ModuleVector {
        ModuleVector::new(self.comps.clone())
    }

    pub fn from_vector(v: ModuleVector) -> Derivation {
        Derivation { comps: v.into_components() }
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree() {
            Some(d) => write!(f, "deg={d}; [")?,
            None => write!(f, "deg=-inf; [")?,
        }
        for (i, p) in self.comps.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sorted multiset of generator degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(pub Vec<i64>);

impl DegreeSequence {
    pub fn new(mut degrees: Vec<i64>) -> Self {
        degrees.sort();
        DegreeSequence(degrees)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.0.last().copied()
    }

    pub fn histogram(&self) -> BTreeMap<i64, usize> {
        let mut h = BTreeMap::new();
        for &d in &self.0 {
            *h.entry(d).or_insert(0) += 1;
        }
        h
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

/// A submodule of `Der S` given by minimal homogeneous generators, sorted
/// by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationModule {
    nvars: usize,
    generators: Vec<Derivation>,
}

impl DerivationModule {
    /// Minimizes and normalizes the given homogeneous derivations.
    pub fn from_generators(nvars: usize, gens: &[Derivation]) -> Result<DerivationModule> {
        let module = der_module(nvars);
        let vs: Vec<ModuleVector> = gens.iter().filter(|g| !g.is_zero()).map(Derivation::to_vector).collect();
        let min = groebner::min_generators(&vs, &module)?;
        let mut generators: Vec<Derivation> = min.into_iter().map(|v| Derivation::from_vector(v.primitive())).collect();
        generators.sort_by_key(|g| g.degree());
        Ok(DerivationModule { nvars, generators })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Derivation] {
        &self.generators
    }

    pub fn vectors(&self) -> Vec<ModuleVector> {
        self.generators.iter().map(Derivation::to_vector).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.generators.iter().map(|g| g.degree().unwrap()).collect())
    }

    /// A membership oracle for repeated queries.
    pub fn submodule(&self) -> Submodule {
        Submodule::new(&self.vectors(), &der_module(self.nvars)).expect("ranks agree")
    }

    pub fn contains(&self, theta: &Derivation) -> bool {
        self.submodule().contains(&theta.to_vector()).expect("ranks agree")
    }

    /// Free module whose `i`-th shift is the degree of the `i`-th generator.
    pub fn generator_module(&self) -> GradedFreeModule {
        GradedFreeModule::new(self.nvars, self.generators.iter().map(|g| g.degree().unwrap()).collect())
    }
}

/// Generators of `bigger` that must be added to the generators of `base`
/// to get a minimal generating set of `bigger` (which must contain
/// `base`). Returns `None` if the generators of `base` do not themselves
/// extend to a minimal generating set.
pub fn extend_generators(base: &[Derivation], bigger: &DerivationModule) -> Result<Option<Vec<Derivation>>> {
    let module = der_module(bigger.nvars());
    let seed: Vec<ModuleVector> = base.iter().map(Derivation::to_vector).collect();
    let (ks, ke) = groebner::extend_min_generators(&seed, &bigger.vectors(), &module)?;
    if ks.len() != base.len() {
        return Ok(None);
    }
    Ok(Some(ke.into_iter().map(|k| bigger.generators()[k].clone()).collect()))
}

/// `Der S ≅ S^ℓ` with zero shifts.
pub fn der_module(nvars: usize) -> GradedFreeModule {
    GradedFreeModule::free(nvars, nvars)
}

/// Whether `α_H^{m(H)}` divides `θ(α_H)` for every `H`.
pub fn is_logarithmic(theta: &Derivation, am: &Multiarrangement) -> bool {
    for (f, &m) in am.base().forms().iter().zip(am.multiplicities()) {
        if m == 0 {
            continue;
        }
        let alpha = f.to_polynomial();
        let v = theta.apply(&alpha);
        let (_, r) = v.div_rem_in(&alpha.pow(m), f.pivot()).expect("monic in pivot");
        if !r.is_zero() {
            return false;
        }
    }
    true
}

/// The graded map whose kernel, projected to the first `ℓ` coordinates,
/// is `D(A, m)`: row `H` is `(c_{H,1}, …, c_{H,ℓ}, 0, …, −α_H^{m(H)}, …, 0)`.
pub fn relation_matrix(am: &Multiarrangement) -> GradedMap {
    let n = am.nvars();
    let k = am.base().len();
    let mut rows = Vec::with_capacity(k);
    for (h, (f, &m)) in am.base().forms().iter().zip(am.multiplicities()).enumerate() {
        let mut row: Vec<Polynomial> =
            f.rational_coefficients().into_iter().map(|c| Polynomial::constant(n, c)).collect();
        row.extend((0..k).map(|_| Polynomial::zero(n)));
        row[n + h] = -&f.to_polynomial().pow(m);
        rows.push(row);
    }
    let mut shifts = vec![0; n];
    shifts.extend(am.multiplicities().iter().map(|&m| m as i64));
    let source = GradedFreeModule::new(n, shifts);
    let target = GradedFreeModule::new(n, vec![0; k]);
    GradedMap::from_rows(&rows, source, target).expect("consistent shapes")
}

/// `D(A, m)` from the kernel of the full relation matrix in one step.
pub fn derivation_module_via_relation_matrix(am: &Multiarrangement) -> Result<DerivationModule> {
    let n = am.nvars();
    let map = relation_matrix(am);
    let ker = groebner::kernel_of_map(&map)?;
    let gens: Vec<Derivation> = ker.into_iter().map(|v| Derivation::new(v.components()[..n].to_vec())).collect();
    DerivationModule::from_generators(n, &gens)
}

/// Intersects `⟨gens⟩` with `{θ : α^m | θ(α)}`. For `m = None` the
/// condition is `θ(α) = 0`.
fn restrict_by(gens: &[Derivation], form: &LinearForm, m: Option<u32>) -> Result<Vec<Derivation>> {
    let alpha = form.to_polynomial();
    let n = alpha.nvars();
    let mut row: Vec<Polynomial> = gens.iter().map(|g| g.apply(&alpha)).collect();
    let mut shifts: Vec<i64> = gens.iter().map(|g| g.degree().unwrap()).collect();
    if let Some(m) = m {
        let am = alpha.pow(m);
        if row.iter().all(|v| v.div_rem_in(&am, form.pivot()).expect("monic in pivot").1.is_zero()) {
            return Ok(gens.to_vec());
        }
        row.push(-&am);
        shifts.push(m as i64);
    }
    let source = GradedFreeModule::new(n, shifts);
    let target = GradedFreeModule::new(n, vec![0]);
    let map = GradedMap::from_rows(&[row], source.clone(), target)?;
    let ker = groebner::kernel_of_map(&map)?;
    let gen_vecs: Vec<ModuleVector> = gens.iter().map(Derivation::to_vector).collect();
    let module = der_module(n);
    let new: Vec<ModuleVector> = ker
        .iter()
        .map(|s| groebner::linear_combination(&s.components()[..gens.len()], &gen_vecs, &module))
        .filter(|v| !v.is_zero())
        .collect();
    let min = groebner::min_generators(&new, &module)?;
    Ok(min.into_iter().map(Derivation::from_vector).collect())
}

/// Minimal homogeneous generators of `D(A, m)`, computed one hyperplane
/// at a time starting from `Der S`.
pub fn derivation_module(am: &Multiarrangement) -> Result<DerivationModule> {
    let n = am.nvars();
    let mut gens: Vec<Derivation> = (0..n).map(|i| Derivation::partial(n, i)).collect();
    for (f, &m) in am.base().forms().iter().zip(am.multiplicities()) {
        if m == 0 {
            continue;
        }
        gens = restrict_by(&gens, f, Some(m))?;
    }
    DerivationModule::from_generators(n, &gens)
}

pub fn simple_module(a: &Arrangement) -> Result<DerivationModule> {
    derivation_module(&Multiarrangement::simple(a.clone()))
}

pub fn degree_sequence(am: &Multiarrangement) -> Result<DegreeSequence> {
    Ok(derivation_module(am)?.degree_sequence())
}

pub fn euler_derivation(nvars: usize) -> Derivation {
    Derivation::euler(nvars)
}

pub fn contains_euler(d: &DerivationModule) -> bool {
    d.contains(&Derivation::euler(d.nvars()))
}

/// `D_H(A) = {θ ∈ D(A) | θ(α_H) = 0}` for `H = H_i`.
pub fn euler_complement(a: &Arrangement, d: &DerivationModule, i: usize) -> Result<DerivationModule> {
    let gens = restrict_by(d.generators(), a.form(i)?, None)?;
    DerivationModule::from_generators(a.nvars(), &gens)
}

fn restrict_components(theta: &Derivation, a: &Arrangement, i: usize) -> Result<Derivation> {
    let f = a.form(i)?;
    let n = a.nvars();
    let p = f.pivot();
    let c = f.rational_coefficients();
    // x_p = -(Σ_{k≠p} c_k x_k) / c_p
    let inv = c[p].recip();
    let repl_coeffs: Vec<_> = (0..n).map(|k| if k == p { crate::Rational::zero() } else { -(&c[k] * &inv) }).collect();
    let repl = Polynomial::linear(&repl_coeffs);
    let mut comps = Vec::with_capacity(n - 1);
    for (k, comp) in theta.components().iter().enumerate() {
        if k == p {
            continue;
        }
        comps.push(comp.substitute(p, &repl)?.drop_variable(p)?);
    }
    Ok(Derivation::new(comps))
}

/// The Euler restriction `ρ: D(A) → D(A^{H_i})`, reduction modulo `α_i`.
pub fn restrict_derivation(theta: &Derivation, a: &Arrangement, i: usize) -> Result<Derivation> {
    if !is_logarithmic(theta, &Multiarrangement::simple(a.clone())) {
        return Err(Error::Precondition("derivation is not in D(A)".into()));
    }
    restrict_components(theta, a, i)
}

/// The Ziegler map `π: D_{H_i}(A) → D(A^{H_i}, m^{H_i})`.
pub fn ziegler_restrict_derivation(theta: &Derivation, a: &Arrangement, i: usize) -> Result<Derivation> {
    if !is_logarithmic(theta, &Multiarrangement::simple(a.clone())) {
        return Err(Error::Precondition("derivation is not in D(A)".into()));
    }
    if !theta.apply(&a.form(i)?.to_polynomial()).is_zero() {
        return Err(Error::Precondition(format!("θ(α_{i}) ≠ 0")));
    }
    restrict_components(theta, a, i)
}

/// Whether `D(A) + α_j·D(A_{i,j}) = D(A_i)`.
pub fn kernel_sum_equals(a: &Arrangement, i: usize, j: usize) -> Result<bool> {
    let d = simple_module(a)?;
    let (ai, _) = a.delete(&[i])?;
    let (aij, _) = a.delete(&[i, j])?;
    kernel_sum_equals_with(a, &d, &simple_module(&ai)?, &simple_module(&aij)?, j)
}

/// [`kernel_sum_equals`] with the three modules precomputed.
pub fn kernel_sum_equals_with(
    a: &Arrangement,
    d: &DerivationModule,
    di: &DerivationModule,
    dij: &DerivationModule,
    j: usize,
) -> Result<bool> {
    let alpha = a.form(j)?.to_polynomial();
    let mut lhs = d.vectors();
    lhs.extend(dij.generators().iter().map(|g| g.scale(&alpha).to_vector()));
    let module = der_module(a.nvars());
    let mut sub = Submodule::new(&lhs, &module)?;
    sub.contains_all(&di.vectors())
}

/// Compares `D(A)` with the derivation part of the syzygies of
/// `(∂Q/∂x_1, …, ∂Q/∂x_ℓ, Q)`.
pub fn jacobian_crosscheck(a: &Arrangement) -> Result<bool> {
    let d = simple_module(a)?;
    groebner::submodule_equal(&d.vectors(), &jacobian_route(a)?, &der_module(a.nvars()))
}

/// Generators of `{θ | θ(Q) ∈ S·Q}` from the Jacobian syzygies.
pub fn jacobian_route(a: &Arrangement) -> Result<Vec<ModuleVector>> {
    let n = a.nvars();
    let q = a.defining_polynomial();
    let k = a.len() as i64;
    let mut row: Vec<Polynomial> = (0..n).map(|i| q.partial(i).unwrap()).collect();
    row.push(-&q);
    let mut shifts = vec![0; n];
    shifts.push(1);
    let source = GradedFreeModule::new(n, shifts);
    let target = GradedFreeModule::new(n, vec![-(k - 1)]);
    let map = GradedMap::from_rows(&[row], source, target)?;
    let ker = groebner::kernel_of_map(&map)?;
    Ok(ker.into_iter().map(|v| ModuleVector::new(v.components()[..n].to_vec())).filter(|v| !v.is_zero()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Arrangement;

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    fn seven() -> Arrangement {
        Arrangement::from_rows(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, -1, 0], &[1, 0, -1], &[0, 1, -1], &[1, 1, -1]],
        )
        .unwrap()
    }

    #[test]
    fn relation_matrix_rows() {
        let m = relation_matrix(&Arrangement::boolean(3).into());
        let v = ModuleVector::new(vec![p("x1", 3), p("0", 3), p("0", 3), p("1", 3), p("0", 3), p("0", 3)]);
        assert!(m.apply(&v).is_zero());
        assert_eq!(m.source.shifts(), &[0, 0, 0, 1, 1, 1]);
        assert_eq!(m.columns[3].components()[0], p("-x1", 3));

        let single = Arrangement::from_rows(1, &[&[1]]).unwrap();
        let am = Multiarrangement::new(single, vec![2]).unwrap();
        let m = relation_matrix(&am);
        assert_eq!(m.columns[0].components()[0], p("1", 1));
        assert_eq!(m.columns[1].components()[0], p("-x1^2", 1));
    }

    #[test]
    fn boolean_module() {
        let d = simple_module(&Arrangement::boolean(3)).unwrap();
        assert_eq!(d.degree_sequence().degrees(), &[1, 1, 1]);
        let want: Vec<Derivation> = (0..3).map(|i| Derivation::partial(3, i).scale(&Polynomial::var(3, i))).collect();
        assert!(groebner::submodule_equal(
            &d.vectors(),
            &want.iter().map(Derivation::to_vector).collect::<Vec<_>>(),
            &der_module(3)
        )
        .unwrap());
        assert!(contains_euler(&d));
    }

    #[test]
    fn empty_arrangement_is_der_s() {
        let d = simple_module(&Arrangement::new(3, vec![]).unwrap()).unwrap();
        assert_eq!(d.degree_sequence().degrees(), &[0, 0, 0]);
    }

    #[test]
    fn seven_lines_module() {
        let a = seven();
        let d = simple_module(&a).unwrap();
        assert_eq!(d.degree_sequence().degrees(), &[1, 3, 3]);
        for g in d.generators() {
            assert!(is_logarithmic(g, &a.clone().into()));
        }
        let via = derivation_module_via_relation_matrix(&a.clone().into()).unwrap();
        assert!(groebner::submodule_equal(&d.vectors(), &via.vectors(), &der_module(3)).unwrap());
        assert!(jacobian_crosscheck(&a).unwrap());
    }

    #[test]
    fn multiplicity_two_line() {
        // D of x1^2·x2 in two variables is generated by x1^2 ∂1 and x2 ∂2
        let a = Arrangement::boolean(2);
        let am = Multiarrangement::new(a, vec![2, 1]).unwrap();
        let d = derivation_module(&am).unwrap();
        assert_eq!(d.degree_sequence().degrees(), &[1, 2]);
        let via = derivation_module_via_relation_matrix(&am).unwrap();
        assert_eq!(via.degree_sequence(), d.degree_sequence());
    }

    #[test]
    fn euler_restriction_maps() {
        let b = Arrangement::boolean(3);
        let t = Derivation::partial(3, 2).scale(&Polynomial::var(3, 2));
        assert!(restrict_derivation(&t, &b, 3).unwrap().is_zero());
        let e = restrict_derivation(&Derivation::euler(3), &seven(), 7).unwrap();
        assert_eq!(e, Derivation::euler(2));
        assert!(restrict_derivation(&Derivation::partial(3, 0), &b, 3).is_err());
    }

    #[test]
    fn ziegler_map_lands_in_multirestriction() {
        let a = seven();
        let d = simple_module(&a).unwrap();
        let dh = euler_complement(&a, &d, 3).unwrap();
        assert_eq!(dh.degree_sequence().degrees(), &[3, 3]);
        let z = a.ziegler_restriction(3).unwrap();
        let dz = derivation_module(&z).unwrap();
        assert_eq!(dz.degree_sequence().degrees(), &[3, 3]);
        for g in dh.generators() {
            let img = ziegler_restrict_derivation(g, &a, 3).unwrap();
            assert!(is_logarithmic(&img, &z));
            assert_eq!(img.degree(), Some(3));
        }
        assert!(ziegler_restrict_derivation(&Derivation::euler(3), &a, 3).is_err());
    }

    #[test]
    fn exact_sequence_inclusion() {
        let a = seven();
        for i in 1..=a.len() {
            let (ai, _) = a.delete(&[i]).unwrap();
            let alpha = a.form(i).unwrap().to_polynomial();
            for g in simple_module(&ai).unwrap().generators() {
                assert!(is_logarithmic(&g.scale(&alpha), &a.clone().into()));
            }
        }
    }

    #[test]
    fn display_format() {
        let t = Derivation::euler(2);
        assert_eq!(t.to_string(), "deg=1; [x1, x2]");
        assert_eq!(DegreeSequence::new(vec![6, 1, 5, 6]).to_string(), "(1, 5, 6, 6)");
    }
}
