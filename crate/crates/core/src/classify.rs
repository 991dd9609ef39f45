//! Free / SPOG classification and the deletion reports.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arrangement::{Arrangement, LinearForm, Multiarrangement};
use crate::logderiv::{self, Derivation, DerivationModule};
use crate::poly::Polynomial;
use crate::resolution::{self, FreeResolution, LargeDsReport};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Free,
    Spog,
    Other,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Free => "free",
            Verdict::Spog => "SPOG",
            Verdict::Other => "other",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    #[serde(rename = "NT1-free")]
    Nt1Free,
    #[serde(rename = "NT1-spog")]
    Nt1Spog,
    #[serde(rename = "NT2-case1")]
    Nt2Case1,
    #[serde(rename = "NT2-case2.1")]
    Nt2Case21,
    #[serde(rename = "NT2-case2.2")]
    Nt2Case22,
    #[serde(rename = "NT2-small-1")]
    Nt2Small1,
    #[serde(rename = "NT2-small-2")]
    Nt2Small2,
    #[serde(rename = "NT2-small-3")]
    Nt2Small3,
    #[serde(rename = "NT2-small-4")]
    Nt2Small4,
    #[serde(rename = "NT2-large")]
    Nt2Large,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::Nt1Free => "NT1-free",
            CaseTag::Nt1Spog => "NT1-spog",
            CaseTag::Nt2Case1 => "NT2-case1",
            CaseTag::Nt2Case21 => "NT2-case2.1",
            CaseTag::Nt2Case22 => "NT2-case2.2",
            CaseTag::Nt2Small1 => "NT2-small-1",
            CaseTag::Nt2Small2 => "NT2-small-2",
            CaseTag::Nt2Small3 => "NT2-small-3",
            CaseTag::Nt2Small4 => "NT2-small-4",
            CaseTag::Nt2Large => "NT2-large",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub verdict: Verdict,
    pub exponents: Option<Vec<i64>>,
    pub po_exponents: Option<Vec<i64>>,
    pub level: Option<i64>,
    /// The level coefficient as polynomial text.
    pub level_coefficient: Option<String>,
    pub ds: Vec<i64>,
    pub pd: usize,
    pub case_tag: Option<CaseTag>,
    pub checks: BTreeMap<String, bool>,
    pub indices: Vec<usize>,
}

impl ClassificationReport {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.values().all(|&b| b)
    }

    pub fn failed_checks(&self) -> Vec<String> {
        self.checks.iter().filter(|(_, &v)| !v).map(|(k, _)| k.clone()).collect()
    }
}

/// A classification together with the module and resolution behind it.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub module: DerivationModule,
    pub resolution: FreeResolution,
    pub report: ClassificationReport,
}

/// Determinant of the `ℓ × ℓ` coefficient matrix of `gens`.
pub fn saito_determinant(gens: &[Derivation]) -> Polynomial {
    let rows: Vec<Vec<Polynomial>> = gens.iter().map(|g| g.components().to_vec()).collect();
    let n = gens.first().map(Derivation::nvars).unwrap_or(0);
    let cols: Vec<usize> = (0..rows.len()).collect();
    laplace(&rows, 0, &cols, n)
}

fn laplace(rows: &[Vec<Polynomial>], r: usize, cols: &[usize], nvars: usize) -> Polynomial {
    if r == rows.len() {
        return Polynomial::one(nvars);
    }
    let mut acc = Polynomial::zero(nvars);
    for (k, &c) in cols.iter().enumerate() {
        if rows[r][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = &rows[r][c] * &laplace(rows, r + 1, &rest, nvars);
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// `∏ α_H^{m(H)}`.
pub fn defining_polynomial_multi(am: &Multiarrangement) -> Polynomial {
    let n = am.nvars();
    am.base()
        .forms()
        .iter()
        .zip(am.multiplicities())
        .fold(Polynomial::one(n), |acc, (f, &m)| &acc * &f.to_polynomial().pow(m))
}

/// Whether `det = c·Q` for a nonzero rational `c`.
pub fn saito_check(gens: &[Derivation], am: &Multiarrangement) -> bool {
    if gens.len() != am.nvars() {
        return false;
    }
    let det = saito_determinant(gens);
    let q = defining_polynomial_multi(am);
    match (det.leading_term(), q.leading_term()) {
        (Some((_, a)), Some((_, b))) => det.scale(&a.recip()) == q.scale(&b.recip()),
        _ => false,
    }
}

/// The level element slot: a generator slot whose relation coefficient is
/// a nonzero linear form, highest degree first, ties by slot index.
fn level_slot(res: &FreeResolution) -> Option<(usize, Polynomial)> {
    let rel = res.differential(1)?.first()?;
    let shifts = res.modules()[0].shifts();
    let mut best: Option<(usize, Polynomial)> = None;
    for (k, p) in rel.components().iter().enumerate() {
        if p.is_zero() || p.degree() != Some(1) {
            continue;
        }
        if best.as_ref().map(|(b, _)| shifts[k] > shifts[*b]).unwrap_or(true) {
            best = Some((k, p.clone()));
        }
    }
    best
}

/// Computes `D(A, m)`, its resolution and the classification.
pub fn analyze(am: &Multiarrangement) -> Result<Analysis> {
    let module = logderiv::derivation_module(am)?;
    let resolution = resolution::minimal_free_resolution(&module)?;
    let l = am.nvars();
    let ds = module.degree_sequence().0;
    let pd = resolution.projective_dimension();
    let total = am.total();
    let mut checks = BTreeMap::new();
    checks.insert("euler_characteristic".to_string(), resolution::euler_characteristic_check(&resolution, total));
    checks.insert("pd_bound".to_string(), pd + 2 <= l.max(2));
    checks.insert("resolution_complex".to_string(), resolution.is_complex());
    checks.insert("resolution_minimal".to_string(), resolution.is_minimal());
    checks.insert("betti0_is_ds".to_string(), resolution.shifts(0) == ds);
    if am.is_simple() && !am.base().is_empty() {
        checks.insert("euler_derivation_in_ds".to_string(), ds.contains(&1));
    }
    let mut report = ClassificationReport {
        verdict: Verdict::Other,
        exponents: None,
        po_exponents: None,
        level: None,
        level_coefficient: None,
        ds: ds.clone(),
        pd,
        case_tag: None,
        checks,
        indices: Vec::new(),
    };
    if ds.len() == l {
        report.verdict = Verdict::Free;
        report.exponents = Some(ds.clone());
        report.checks.insert("saito_determinant".into(), saito_check(module.generators(), am));
        report.checks.insert("saito_degree_sum".into(), ds.iter().sum::<i64>() == total as i64);
    } else if pd == 1 && resolution.modules()[1].rank() == 1 {
        if let Some((slot, coeff)) = level_slot(&resolution) {
            let level = resolution.modules()[0].shifts()[slot];
            let mut po = ds.clone();
            let p = po.iter().position(|&d| d == level).unwrap();
            po.remove(p);
            report.verdict = Verdict::Spog;
            report.checks.insert("spog_degree_sum".into(), po.iter().sum::<i64>() - 1 == total as i64);
            report.checks.insert("spog_relation_degree".into(), resolution.shifts(1) == vec![level + 1]);
            report.po_exponents = Some(po);
            report.level = Some(level);
            report.level_coefficient = Some(LinearForm::from_polynomial(&coeff)?.to_string());
        }
    }
    Ok(Analysis { module, resolution, report })
}

pub fn classify(a: &Arrangement) -> Result<ClassificationReport> {
    Ok(analyze(&Multiarrangement::simple(a.clone()))?.report)
}

pub fn is_spog(a: &Arrangement) -> Result<ClassificationReport> {
    classify(a)
}

pub fn is_free(a: &Arrangement) -> Result<bool> {
    Ok(logderiv::simple_module(a)?.generators().len() == a.nvars())
}

pub fn exponents(a: &Arrangement) -> Result<Option<Vec<i64>>> {
    let d = logderiv::simple_module(a)?;
    Ok(if d.generators().len() == a.nvars() { Some(d.degree_sequence().0) } else { None })
}

fn require_free(a: &Arrangement) -> Result<Vec<i64>> {
    exponents(a)?.ok_or_else(|| Error::Precondition("the arrangement is not free".into()))
}

fn multiset_minus(a: &[i64], b: &[i64]) -> Option<Vec<i64>> {
    let mut rest = a.to_vec();
    for x in b {
        let p = rest.iter().position(|y| y == x)?;
        rest.remove(p);
    }
    rest.sort();
    Some(rest)
}

/// Elements of `a` left after removing one copy of each element of `b` found in it.
fn multiset_diff(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rest = a.to_vec();
    for x in b {
        if let Some(p) = rest.iter().position(|y| y == x) {
            rest.remove(p);
        }
    }
    rest.sort();
    rest
}

fn sorted(mut v: Vec<i64>) -> Vec<i64> {
    v.sort();
    v
}

/// Classifies the single deletion `A \ {H_i}` of a free `A`.
pub fn nt1_report(a: &Arrangement, i: usize) -> Result<ClassificationReport> {
    let exp = require_free(a)?;
    let (ai, _) = a.delete(&[i])?;
    let mut r = classify(&ai)?;
    r.indices = vec![i];
    let restriction = a.euler_restriction(i)?.arrangement;
    let verdict_ok = matches!(r.verdict, Verdict::Free | Verdict::Spog);
    r.checks.insert("nt1_a_free_or_spog".into(), verdict_ok);
    match r.verdict {
        Verdict::Spog => {
            r.case_tag = Some(CaseTag::Nt1Spog);
            let level_formula = r.level == Some(ai.len() as i64 - restriction.len() as i64);
            r.checks.insert("nt1_b_po_exponents".into(), r.po_exponents.as_deref() == Some(&exp[..]));
            r.checks.insert("nt1_b_level_formula".into(), level_formula);
            if a.nvars() == 3 {
                let max = exp.iter().copied().max().unwrap_or(0);
                r.checks.insert("nt1_c_level_at_least_max_exponent".into(), r.level.unwrap() >= max);
            }
        }
        Verdict::Free => {
            r.case_tag = Some(CaseTag::Nt1Free);
            // exp(A') is exp(A) with one entry lowered by one; A^H then has the others
            let ok = match (&multiset_diff(&exp, &r.ds)[..], &multiset_diff(&r.ds, &exp)[..]) {
                (&[x], &[y]) if y == x - 1 => {
                    let expected = multiset_diff(&exp, &[x]);
                    exponents(&restriction)? == Some(expected)
                }
                _ => false,
            };
            r.checks.insert("nt1_d_addition_deletion".into(), ok);
        }
        Verdict::Other => {}
    }
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NT2Report {
    pub indices: (usize, usize),
    /// `(i, j)` reordered so that the first side has the smaller level.
    pub sides: (usize, usize),
    pub a: ClassificationReport,
    pub a_i: ClassificationReport,
    pub a_j: ClassificationReport,
    pub a_ij: ClassificationReport,
    /// `(c_1, c_2)` with `c_1 ≤ c_2`, when both single deletions are SPOG.
    pub levels: Option<(i64, i64)>,
    pub flat_multiplicity: usize,
    /// `D(A) + α_2·D(A_{1,2}) = D(A_1)` and the same with the sides swapped.
    pub kernel_sum: Option<(bool, bool)>,
    pub case_tag: Option<CaseTag>,
    pub large_ds: Option<LargeDsReport>,
    pub checks: BTreeMap<String, bool>,
}

impl NT2Report {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.values().all(|&b| b)
    }

    pub fn failed_checks(&self) -> Vec<String> {
        self.checks.iter().filter(|(_, &v)| !v).map(|(k, _)| k.clone()).collect()
    }
}

/// Expected `(M_0, M_1)` shifts for the cases of the `|DS| ≤ ℓ + 2` theorem.
fn small_ds_shape(tag: CaseTag, c1: i64, c2: i64, d: &[i64]) -> Option<(Vec<i64>, Vec<i64>)> {
    let with = |extra: &[i64], base: &[i64]| sorted(extra.iter().chain(base).copied().collect());
    Some(match tag {
        CaseTag::Nt2Small1 => (with(&[c1 - 1], d), vec![c1 + 1]),
        CaseTag::Nt2Small2 => (with(&[c1, c2 - 1], d), sorted(vec![c1 + 1, c2])),
        CaseTag::Nt2Small3 => (with(&[c1, c2 - 1], &multiset_minus(d, &[c2])?), vec![c1 + 1]),
        CaseTag::Nt2Small4 => (with(&[c1, c2], d), sorted(vec![c1 + 1, c2 + 1])),
        _ => return None,
    })
}

/// Classifies the double deletion `A \ {H_i, H_j}` of a free `A` and runs
/// the consistency checklist.
pub fn nt2_report(a: &Arrangement, i: usize, j: usize) -> Result<NT2Report> {
    if i == j {
        return Err(Error::Precondition("the two deleted hyperplanes must differ".into()));
    }
    let l = a.nvars();
    let am = Multiarrangement::simple(a.clone());
    let base = analyze(&am)?;
    if base.report.verdict != Verdict::Free {
        return Err(Error::Precondition("the arrangement is not free".into()));
    }
    let exp = base.report.ds.clone();
    let mut a_i = nt1_report(a, i)?;
    let mut a_j = nt1_report(a, j)?;
    a_i.indices = vec![i];
    a_j.indices = vec![j];
    let (aij, _) = a.delete(&[i, j])?;
    let ij = analyze(&Multiarrangement::simple(aij.clone()))?;
    let mut a_ij = ij.report.clone();
    a_ij.indices = vec![i, j];
    let flat_multiplicity = a.flat_multiplicity(i, j)?;
    let mut checks = BTreeMap::new();
    let ds_len = a_ij.ds.len();
    checks.insert("C2_pd_vs_ds_length".into(), (a_ij.pd <= 1) == (ds_len <= l + 2));
    let free_i = a_i.verdict == Verdict::Free;
    let free_j = a_j.verdict == Verdict::Free;
    checks.insert("C9_free_double_deletion".into(), a_ij.verdict != Verdict::Free || free_i || free_j);

    let mut report = NT2Report {
        indices: (i, j),
        sides: (i, j),
        a: base.report.clone(),
        a_i: a_i.clone(),
        a_j: a_j.clone(),
        a_ij: a_ij.clone(),
        levels: None,
        flat_multiplicity,
        kernel_sum: None,
        case_tag: None,
        large_ds: None,
        checks,
    };

    if free_i || free_j {
        // a single deletion of the free side
        let (free_side, other) = if free_i { (i, j) } else { (j, i) };
        let (af, table) = a.delete(&[free_side])?;
        let k = table.iter().position(|&t| t == other).unwrap() + 1;
        let nt1 = nt1_report(&af, k)?;
        for (name, v) in &nt1.checks {
            report.checks.insert(format!("nt1_{name}"), *v);
        }
        report.case_tag = nt1.case_tag;
        report.a_ij.case_tag = nt1.case_tag;
        return Ok(report);
    }

    let (Some(li), Some(lj)) = (a_i.level, a_j.level) else {
        report.checks.insert("both_single_deletions_spog".into(), false);
        return Ok(report);
    };
    let (s1, s2, c1, c2) = if li <= lj { (i, j, li, lj) } else { (j, i, lj, li) };
    report.sides = (s1, s2);
    report.levels = Some((c1, c2));
    for (k, c) in [(s1, c1), (s2, c2)] {
        let restriction = a.euler_restriction(k)?.arrangement;
        let formula = c == (a.len() - 1) as i64 - restriction.len() as i64;
        report.checks.insert(format!("C1_level_formula_{k}"), formula);
    }

    let d1 = logderiv::simple_module(&a.delete(&[s1])?.0)?;
    let d2 = logderiv::simple_module(&a.delete(&[s2])?.0)?;
    let k1 = logderiv::kernel_sum_equals_with(a, &base.module, &d1, &ij.module, s2)?;
    let k2 = logderiv::kernel_sum_equals_with(a, &base.module, &d2, &ij.module, s1)?;
    report.kernel_sum = Some((k1, k2));
    let implications = (!k1 || (c1 == c2 && k2 && flat_multiplicity > 2)) && (!(k2 && !k1) || flat_multiplicity > 2);
    report.checks.insert("C7_kernel_sum_implications".into(), implications);

    let m0 = ij.resolution.shifts(0);
    let m1 = ij.resolution.shifts(1);
    let pd = ij.resolution.projective_dimension();
    let small_tag = if ds_len > l + 2 {
        None
    } else if k1 {
        Some(CaseTag::Nt2Small1)
    } else if k2 && ds_len == l + 2 {
        Some(CaseTag::Nt2Small2)
    } else if k2 && ds_len == l + 1 {
        Some(CaseTag::Nt2Small3)
    } else if !k2 {
        Some(CaseTag::Nt2Small4)
    } else {
        None
    };
    if ds_len <= l + 2 {
        let shape_ok = small_tag
            .and_then(|t| small_ds_shape(t, c1, c2, &exp))
            .map(|(e0, e1)| e0 == m0 && e1 == m1 && pd <= 1)
            .unwrap_or(false);
        report.checks.insert("C7_small_ds_shape".into(), shape_ok);
        if small_tag == Some(CaseTag::Nt2Small3) {
            report.checks.insert("C7_small_ds_3_spog".into(), a_ij.verdict == Verdict::Spog);
        }
    }

    if l == 3 {
        let (tag, e0, e1) = if flat_multiplicity == 2 {
            (CaseTag::Nt2Case1, sorted(vec![c1, c2, exp[0], exp[1], exp[2]]), sorted(vec![c1 + 1, c2 + 1]))
        } else if c1 == c2 {
            (CaseTag::Nt2Case21, sorted(vec![c1 - 1, exp[0], exp[1], exp[2]]), vec![c1 + 1])
        } else {
            (CaseTag::Nt2Case22, sorted(vec![c1, c2 - 1, exp[0], exp[1], exp[2]]), sorted(vec![c1 + 1, c2]))
        };
        report.case_tag = Some(tag);
        report.checks.insert("C3_dimension3_shape".into(), e0 == m0 && e1 == m1 && pd <= 1);
        if tag == CaseTag::Nt2Case21 {
            let max = *exp.iter().max().unwrap();
            report.checks.insert("C4_spog_iff_levels_max".into(), (a_ij.verdict == Verdict::Spog) == (c1 == max));
        }
        if flat_multiplicity > 2 {
            report.checks.insert("C7_equal_levels_iff_kernel_sum".into(), (c1 == c2) == k1);
        }
        report.checks.insert("C5_not_free".into(), a_ij.verdict != Verdict::Free);
    } else {
        report.case_tag = if ds_len > l + 2 { Some(CaseTag::Nt2Large) } else { small_tag };
    }
    if l >= 4 && ds_len > l + 2 {
        let t = resolution::large_ds_structure_check(a, s1, s2, &ij.resolution)?;
        report.checks.insert("C6_large_ds_structure".into(), t.holds());
        report.large_ds = Some(t);
    }
    if a_ij.verdict == Verdict::Spog {
        report.checks.insert("C8_c2_is_exponent".into(), exp[1..].contains(&c2));
    }
    report.a_ij.case_tag = report.case_tag;
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeAdditionReport {
    pub candidate: String,
    pub already_present: bool,
    pub union_free: bool,
    pub conclusion: String,
}

/// The only hyperplane whose addition can make the SPOG arrangement `b`
/// free, when its level exceeds every PO-exponent.
pub fn free_addition_candidate(b: &Arrangement, report: &ClassificationReport) -> Result<FreeAdditionReport> {
    let (Verdict::Spog, Some(level), Some(po), Some(coeff)) =
        (report.verdict, report.level, report.po_exponents.as_ref(), report.level_coefficient.as_ref())
    else {
        return Err(Error::Precondition("the arrangement is not SPOG".into()));
    };
    if po.iter().any(|&d| d >= level) {
        return Err(Error::Precondition(format!("level {level} is not larger than every PO-exponent")));
    }
    let form = LinearForm::from_polynomial(&Polynomial::parse(coeff, b.nvars())?)?;
    let already_present = b.position(&form).is_some();
    let union = if already_present { b.clone() } else { b.add(form.clone())? };
    let union_free = is_free(&union)?;
    let conclusion = if union_free {
        format!("adding ker({form}) gives a free arrangement")
    } else {
        "no free addition exists".to_string()
    };
    Ok(FreeAdditionReport { candidate: form.to_string(), already_present, union_free, conclusion })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDemo {
    pub ds_b: Vec<i64>,
    pub ds_c: Vec<i64>,
    /// `σ[k]` is the hyperplane of `C` matched with hyperplane `k + 1` of `B`.
    pub bijection: Option<Vec<usize>>,
    pub lattices_isomorphic: bool,
    pub ds_differ: bool,
    /// Set when a lattice invariant already tells the two apart.
    pub obstruction: Option<String>,
}

/// Two arrangements with isomorphic lattices but different degree
/// sequences.
pub fn combinatorics_vs_geometry_demo() -> Result<LatticeDemo> {
    let b = crate::golden::arrangement("same_lattice_b")?;
    let c = crate::golden::arrangement("same_lattice_c")?;
    let ds_b = logderiv::simple_module(&b)?.degree_sequence().0;
    let ds_c = logderiv::simple_module(&c)?.degree_sequence().0;
    let bijection = crate::lattice::find_isomorphism(&b, &c);
    Ok(LatticeDemo {
        lattices_isomorphic: bijection.is_some(),
        obstruction: crate::lattice::obstruction(&b, &c),
        ds_differ: ds_b != ds_c,
        ds_b,
        ds_c,
        bijection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_is_free_with_saito() {
        let r = classify(&Arrangement::boolean(3)).unwrap();
        assert_eq!(r.verdict, Verdict::Free);
        assert_eq!(r.exponents, Some(vec![1, 1, 1]));
        assert!(r.all_checks_pass(), "{:?}", r.checks);
    }

    #[test]
    fn saito_determinant_of_coordinate_basis() {
        let gens: Vec<Derivation> = (0..3)
            .map(|i| {
                let mut c = vec![Polynomial::zero(3); 3];
                c[i] = Polynomial::var(3, i);
                Derivation::new(c)
            })
            .collect();
        assert_eq!(saito_determinant(&gens).to_string(), "x1*x2*x3");
    }

    #[test]
    fn generic_lines() {
        let four = Arrangement::from_rows(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap();
        let r = classify(&four).unwrap();
        assert_eq!(r.verdict, Verdict::Spog);
        assert_eq!(r.ds, vec![1, 2, 2, 2]);
        assert_eq!((r.po_exponents.clone(), r.level), (Some(vec![1, 2, 2]), Some(2)));
        assert!(r.all_checks_pass(), "{:?}", r.checks);
        let five = four.add(LinearForm::from_i64(&[1, 2, 3]).unwrap()).unwrap();
        let r = classify(&five).unwrap();
        assert_eq!(r.verdict, Verdict::Other);
        assert_eq!(r.ds, vec![1, 3, 3, 3, 3]);
        assert!(r.all_checks_pass(), "{:?}", r.checks);
    }

    #[test]
    fn nt1_requires_free() {
        let a = Arrangement::from_rows(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap();
        assert!(matches!(nt1_report(&a, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn nt1_of_boolean_is_free() {
        let r = nt1_report(&Arrangement::boolean(3), 2).unwrap();
        assert_eq!(r.case_tag, Some(CaseTag::Nt1Free));
        assert!(r.all_checks_pass(), "{:?}", r.checks);
    }

    #[test]
    fn case_tag_strings() {
        assert_eq!(CaseTag::Nt2Case21.to_string(), "NT2-case2.1");
        assert_eq!(serde_json::to_string(&CaseTag::Nt2Small3).unwrap(), "\"NT2-small-3\"");
    }
}
