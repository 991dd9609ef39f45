//! The embedded arrangement corpus and the expectations checked against it.
//!
//! Hyperplane indices are 1-based in file order.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::arrangement::{Arrangement, Multiarrangement};
use crate::classify::{self, CaseTag, ClassificationReport, Verdict};
use crate::logderiv::{self, DegreeSequence};
use crate::poly::Polynomial;
use crate::{arrfile, oracle, resolution, Error, Result};

/// `(name, file text)` for every shipped `.arr` file.
pub const FILES: &[(&str, &str)] = &[
    ("boolean3", include_str!("../data/boolean3.arr")),
    ("seven_lines", include_str!("../data/seven_lines.arr")),
    ("eleven_lines", include_str!("../data/eleven_lines.arr")),
    ("ten_lines_no_free_addition", include_str!("../data/ten_lines_no_free_addition.arr")),
    ("same_lattice_b", include_str!("../data/same_lattice_b.arr")),
    ("same_lattice_c", include_str!("../data/same_lattice_c.arr")),
    ("twelve_planes_l4", include_str!("../data/twelve_planes_l4.arr")),
    ("ten_planes_l4", include_str!("../data/ten_planes_l4.arr")),
];

pub fn text(name: &str) -> Result<&'static str> {
    FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::Precondition(format!("no embedded arrangement named `{name}`")))
}

pub fn arrangement(name: &str) -> Result<Arrangement> {
    arrfile::parse_simple(text(name)?)
}

pub fn multiarrangement(name: &str) -> Result<Multiarrangement> {
    arrfile::parse(text(name)?)
}

/// Every embedded arrangement, in corpus order.
pub fn corpus() -> Vec<(&'static str, Arrangement)> {
    FILES.iter().map(|(n, t)| (*n, arrfile::parse_simple(t).expect("embedded files parse"))).collect()
}

/// One checked claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    pub case: &'static str,
    pub criterion: u8,
    pub claim: String,
    pub expected: String,
    pub actual: String,
}

impl Expectation {
    pub fn pass(&self) -> bool {
        self.expected == self.actual
    }
}

struct Case {
    name: &'static str,
    criterion: u8,
    out: Vec<Expectation>,
}

impl Case {
    fn new(name: &'static str, criterion: u8) -> Case {
        Case { name, criterion, out: Vec::new() }
    }

    fn expect(&mut self, claim: impl Into<String>, expected: impl Into<String>, actual: Result<String>) {
        let actual = actual.unwrap_or_else(|e| format!("error: {e}"));
        self.out.push(Expectation {
            case: self.name,
            criterion: self.criterion,
            claim: claim.into(),
            expected: expected.into(),
            actual,
        });
    }
}

fn deletion(a: &Arrangement, idx: &[usize]) -> Result<Arrangement> {
    Ok(a.delete(idx)?.0)
}

fn ds(a: &Arrangement) -> Result<String> {
    Ok(logderiv::simple_module(a)?.degree_sequence().to_string())
}

fn shape(a: &Arrangement) -> Result<String> {
    let d = logderiv::simple_module(a)?;
    Ok(resolution::minimal_free_resolution(&d)?.betti_table().shape())
}

/// `free (…)`, `SPOG PO=(…) level d` or `other DS=(…)`.
pub fn summary(r: &ClassificationReport) -> String {
    match r.verdict {
        Verdict::Free => format!("free {}", DegreeSequence(r.ds.clone())),
        Verdict::Spog => format!(
            "SPOG PO={} level {}",
            DegreeSequence(r.po_exponents.clone().unwrap_or_default()),
            r.level.unwrap_or_default()
        ),
        Verdict::Other => format!("other DS={}", DegreeSequence(r.ds.clone())),
    }
}

fn classified(a: &Arrangement) -> Result<String> {
    Ok(summary(&classify::classify(a)?))
}

fn seven_lines() -> Result<Vec<Expectation>> {
    let a = arrangement("seven_lines")?;
    let mut c = Case::new("seven-lines", 1);
    let product = ["x1", "x2", "x3", "x1 - x2", "x1 - x3", "x2 - x3", "x1 + x2 - x3"]
        .iter()
        .map(|f| Polynomial::parse(f, 3))
        .collect::<std::result::Result<Vec<_>, _>>()?
        .iter()
        .fold(Polynomial::one(3), |acc, f| &acc * f);
    c.expect("Q(A) is the product of the seven forms", "true", Ok((a.defining_polynomial() == product).to_string()));
    c.expect("A is free", "free (1, 3, 3)", classified(&a));
    for i in [2, 5] {
        c.expect(format!("A_{i} is plus-one generated"), "SPOG PO=(1, 3, 3) level 3", classified(&deletion(&a, &[i])?));
    }
    let a25 = deletion(&a, &[2, 5])?;
    c.expect("A_{2,5} is SPOG", "SPOG PO=(1, 2, 3) level 3", classified(&a25));
    c.expect("resolution of D(A_{2,5})", "0 → S[-4] → S[-3]^2 ⊕ S[-2] ⊕ S[-1] → D → 0", shape(&a25));
    c.expect(
        "alternating shift sum of D(A_{2,5}) is |A_{2,5}|",
        "5",
        (|| {
            let res = resolution::minimal_free_resolution(&logderiv::simple_module(&a25)?)?;
            Ok(res.betti_table().alternating_shift_sum().to_string())
        })(),
    );
    Ok(c.out)
}

fn eleven_lines() -> Result<Vec<Expectation>> {
    let a = arrangement("eleven_lines")?;
    let mut c = Case::new("eleven-lines", 2);
    c.expect("A is free", "free (1, 5, 5)", classified(&a));
    for i in 1..=a.len() {
        let expected = match i {
            3 | 5 | 11 => "free (1, 4, 5)",
            2 | 6 => "SPOG PO=(1, 5, 5) level 6",
            _ => "SPOG PO=(1, 5, 5) level 5",
        };
        c.expect(format!("single deletion A_{i}"), expected, classified(&deletion(&a, &[i])?));
    }
    c.expect("|A_X| for H1 ∩ H10", "2", a.flat_multiplicity(1, 10).map(|m| m.to_string()));
    c.expect("|A_X| > 2 for H2 ∩ H6", "true", a.flat_multiplicity(2, 6).map(|m| (m > 2).to_string()));
    c.expect("|A_X| > 2 for H4 ∩ H8", "true", a.flat_multiplicity(4, 8).map(|m| (m > 2).to_string()));
    c.expect("|A_X| > 2 for H2 ∩ H4", "true", a.flat_multiplicity(2, 4).map(|m| (m > 2).to_string()));
    let a_1_10 = deletion(&a, &[1, 10])?;
    c.expect("DS(A_{1,10})", "(1, 5, 5, 5, 5)", ds(&a_1_10));
    c.expect("resolution of D(A_{1,10})", "0 → S[-6]^2 → S[-5]^4 ⊕ S[-1] → D → 0", shape(&a_1_10));
    let a_2_6 = deletion(&a, &[2, 6])?;
    c.expect("DS(A_{2,6})", "(1, 5, 5, 5)", ds(&a_2_6));
    c.expect("A_{2,6} is not SPOG", "other DS=(1, 5, 5, 5)", classified(&a_2_6));
    c.expect("resolution of D(A_{2,6})", "0 → S[-7] → S[-5]^3 ⊕ S[-1] → D → 0", shape(&a_2_6));
    let r = classify::nt2_report(&a, 4, 8);
    c.expect(
        "A_{4,8} is SPOG",
        "SPOG PO=(1, 4, 5) level 5",
        r.as_ref().map(|r| summary(&r.a_ij)).map_err(Clone::clone),
    );
    c.expect(
        "A_{4,8} falls in the equal-level case",
        "NT2-case2.1",
        r.map(|r| r.case_tag.map(|t| t.to_string()).unwrap_or_default()),
    );
    let a_2_4 = deletion(&a, &[2, 4])?;
    c.expect("DS(A_{2,4})", "(1, 5, 5, 5, 5)", ds(&a_2_4));
    c.expect("resolution of D(A_{2,4})", "0 → S[-6]^2 → S[-5]^4 ⊕ S[-1] → D → 0", shape(&a_2_4));
    Ok(c.out)
}

fn twelve_planes() -> Result<Vec<Expectation>> {
    let a = arrangement("twelve_planes_l4")?;
    let mut c = Case::new("twelve-planes", 3);
    c.expect("A is free", "free (1, 3, 4, 4)", classified(&a));
    for (i, level) in [(1, 4), (2, 4), (8, 5), (10, 5)] {
        c.expect(
            format!("level of A_{i}"),
            level.to_string(),
            classify::classify(&deletion(&a, &[i])?)
                .map(|r| r.level.map(|l| l.to_string()).unwrap_or_else(|| summary(&r))),
        );
    }
    for (pair, d, s) in [
        ([1, 2], "(1, 3, 3, 4, 4)", "0 → S[-5] → S[-4]^2 ⊕ S[-3]^2 ⊕ S[-1] → D → 0"),
        ([2, 10], "(1, 3, 4, 4, 4, 4)", "0 → S[-5]^2 → S[-4]^4 ⊕ S[-3] ⊕ S[-1] → D → 0"),
        ([1, 8], "(1, 3, 4, 4, 4, 5)", "0 → S[-6] ⊕ S[-5] → S[-5] ⊕ S[-4]^3 ⊕ S[-3] ⊕ S[-1] → D → 0"),
    ] {
        let b = deletion(&a, &pair)?;
        c.expect(format!("DS(A_{{{},{}}})", pair[0], pair[1]), d, ds(&b));
        c.expect(format!("resolution of D(A_{{{},{}}})", pair[0], pair[1]), s, shape(&b));
    }
    Ok(c.out)
}

fn ten_planes() -> Result<Vec<Expectation>> {
    let a = arrangement("ten_planes_l4")?;
    let mut c = Case::new("ten-planes", 4);
    c.expect("A is free", "free (1, 3, 3, 3)", classified(&a));
    for i in 1..=3 {
        c.expect(
            format!("A_{i} is SPOG with level 3"),
            "3",
            classify::classify(&deletion(&a, &[i])?)
                .map(|r| r.level.map(|l| l.to_string()).unwrap_or_else(|| summary(&r))),
        );
    }
    for (i, free) in [(1, true), (2, false), (3, true)] {
        c.expect(
            format!("restriction to H{i} is free"),
            free.to_string(),
            a.euler_restriction(i).and_then(|r| classify::is_free(&r.arrangement)).map(|b| b.to_string()),
        );
    }
    let sizes: Result<Vec<usize>> = (1..=a.len())
        .filter(|&j| j != 2)
        .map(|j| Ok(logderiv::simple_module(&deletion(&a, &[2, j])?)?.generators().len()))
        .collect();
    c.expect("|DS(A_{2,j})| = 5 for every j ≠ 2", "true", sizes.map(|s| s.iter().all(|&n| n == 5).to_string()));
    let b = deletion(&a, &[1, 3])?;
    c.expect("|DS(A_{1,3})|", "7", logderiv::simple_module(&b).map(|d| d.generators().len().to_string()));
    c.expect("resolution of D(A_{1,3})", "0 → S[-5] → S[-4]^4 → S[-3]^6 ⊕ S[-1] → D → 0", shape(&b));
    let pd = logderiv::simple_module(&b)
        .and_then(|d| resolution::minimal_free_resolution(&d))
        .map(|r| r.projective_dimension());
    c.expect("pd D(A_{1,3})", "2", pd.clone().map(|p| p.to_string()));
    c.expect("|DS| > ℓ + 2 and pd > 1 agree on A_{1,3}", "true", pd.map(|p| (p > 1).to_string()));
    Ok(c.out)
}

fn ten_lines() -> Result<Vec<Expectation>> {
    let a = arrangement("ten_lines_no_free_addition")?;
    let mut c = Case::new("ten-lines", 5);
    c.expect("A is free", "free (1, 3, 6)", classified(&a));
    let b = deletion(&a, &[1, 2])?;
    let r = classify::classify(&b);
    c.expect("A_{1,2} is SPOG", "SPOG PO=(1, 3, 5) level 6", r.as_ref().map(summary).map_err(Clone::clone));
    c.expect(
        "level coefficient of A_{1,2}",
        "x2 + x3",
        r.as_ref().map(|r| r.level_coefficient.clone().unwrap_or_default()).map_err(Clone::clone),
    );
    let add = r.and_then(|r| classify::free_addition_candidate(&b, &r));
    c.expect(
        "adding the level-coefficient hyperplane is not free",
        "false",
        add.as_ref().map(|f| f.union_free.to_string()).map_err(Clone::clone),
    );
    c.expect("conclusion", "no free addition exists", add.map(|f| f.conclusion));
    Ok(c.out)
}

fn same_lattice() -> Result<Vec<Expectation>> {
    let mut c = Case::new("same-lattice", 6);
    let demo = classify::combinatorics_vs_geometry_demo()?;
    c.expect("DS(B)", "(1, 5, 6, 6)", Ok(DegreeSequence(demo.ds_b.clone()).to_string()));
    c.expect("DS(C)", "(1, 6, 6, 6, 6, 6)", Ok(DegreeSequence(demo.ds_c.clone()).to_string()));
    let iso = match (&demo.bijection, &demo.obstruction) {
        (Some(_), _) => "true".to_string(),
        (None, Some(why)) => format!("false ({why})"),
        (None, None) => "false".to_string(),
    };
    c.expect("L(B) ≅ L(C) by an explicit bijection", "true", Ok(iso));
    c.expect("DS(B) ≠ DS(C)", "true", Ok(demo.ds_differ.to_string()));
    let b = arrangement("same_lattice_b")?;
    c.expect(
        "L(B) and L(Boolean_3) are not isomorphic",
        "false",
        Ok(crate::lattice::lattices_isomorphic(&b, &crate::Arrangement::boolean(3)).to_string()),
    );
    Ok(c.out)
}

/// All worked-example expectations (criteria 1 to 6), computed in parallel.
pub fn verify_examples() -> Vec<Expectation> {
    type Runner = fn() -> Result<Vec<Expectation>>;
    let cases: Vec<(&'static str, u8, Runner)> = vec![
        ("seven-lines", 1, seven_lines),
        ("eleven-lines", 2, eleven_lines),
        ("twelve-planes", 3, twelve_planes),
        ("ten-planes", 4, ten_planes),
        ("ten-lines", 5, ten_lines),
        ("same-lattice", 6, same_lattice),
    ];
    let results: Vec<Vec<Expectation>> = cases
        .par_iter()
        .map(|(name, criterion, f)| {
            f().unwrap_or_else(|e| {
                vec![Expectation {
                    case: name,
                    criterion: *criterion,
                    claim: "case runs".into(),
                    expected: "ok".into(),
                    actual: format!("error: {e}"),
                }]
            })
        })
        .collect();
    results.into_iter().flatten().collect()
}

/// Outcome of a corpus-wide property sweep.
#[derive(Debug, Clone, Default)]
pub struct PropertySummary {
    /// Check name → number of times it was evaluated.
    pub evaluated: BTreeMap<String, usize>,
    pub failures: Vec<String>,
}

impl PropertySummary {
    fn record(&mut self, context: &str, checks: &BTreeMap<String, bool>) {
        for (k, v) in checks {
            *self.evaluated.entry(k.clone()).or_insert(0) += 1;
            if !v {
                self.failures.push(format!("{context}: {k}"));
            }
        }
    }

    fn merge(mut self, other: PropertySummary) -> PropertySummary {
        for (k, v) in other.evaluated {
            *self.evaluated.entry(k).or_insert(0) += v;
        }
        self.failures.extend(other.failures);
        self
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

enum Unit {
    Whole,
    Single(usize),
    Double(usize, usize),
}

fn sweep_unit(name: &str, a: &Arrangement, free: bool, unit: &Unit) -> PropertySummary {
    let mut s = PropertySummary::default();
    let mut fail = |ctx: String, e: Error| s.failures.push(format!("{ctx}: error {e}"));
    match (*unit, free) {
        (Unit::Whole, _) => match classify::classify(a) {
            Ok(r) => s.record(name, &r.checks),
            Err(e) => fail(name.to_string(), e),
        },
        (Unit::Single(i), true) => match classify::nt1_report(a, i) {
            Ok(r) => s.record(&format!("{name} A_{i}"), &r.checks),
            Err(e) => fail(format!("{name} A_{i}"), e),
        },
        (Unit::Double(i, j), true) => match classify::nt2_report(a, i, j) {
            Ok(r) => {
                let ctx = format!("{name} A_{{{i},{j}}}");
                s.record(&ctx, &r.a_ij.checks);
                s.record(&ctx, &r.checks);
            }
            Err(e) => fail(format!("{name} A_{{{i},{j}}}"), e),
        },
        (Unit::Single(i), false) => match a.delete(&[i]).and_then(|(b, _)| classify::classify(&b)) {
            Ok(r) => s.record(&format!("{name} A_{i}"), &r.checks),
            Err(e) => fail(format!("{name} A_{i}"), e),
        },
        (Unit::Double(i, j), false) => match a.delete(&[i, j]).and_then(|(b, _)| classify::classify(&b)) {
            Ok(r) => s.record(&format!("{name} A_{{{i},{j}}}"), &r.checks),
            Err(e) => fail(format!("{name} A_{{{i},{j}}}"), e),
        },
    }
    s
}

impl Clone for Unit {
    fn clone(&self) -> Unit {
        *self
    }
}
impl Copy for Unit {}

/// Every arrangement with every single and double deletion: resolution
/// identities, Saito determinants, and for free arrangements the deletion
/// checklists.
pub fn property_sweep() -> PropertySummary {
    let mut units: Vec<(&'static str, Arrangement, bool, Unit)> = Vec::new();
    for (name, a) in corpus() {
        let free = classify::is_free(&a).unwrap_or(false);
        units.push((name, a.clone(), free, Unit::Whole));
        for i in 1..=a.len() {
            units.push((name, a.clone(), free, Unit::Single(i)));
            for j in i + 1..=a.len() {
                units.push((name, a.clone(), free, Unit::Double(i, j)));
            }
        }
    }
    units
        .par_iter()
        .map(|(name, a, free, unit)| sweep_unit(name, a, *free, unit))
        .reduce(PropertySummary::default, PropertySummary::merge)
}

/// Oracle generator counts against the engine, and the free Hilbert
/// identity up to `|A| + 2` for free arrangements.
pub fn oracle_sweep() -> PropertySummary {
    let per: Vec<PropertySummary> = corpus()
        .par_iter()
        .map(|(name, a)| {
            let mut s = PropertySummary::default();
            let run = || -> Result<BTreeMap<String, bool>> {
                let d = logderiv::simple_module(a)?;
                let ds = d.degree_sequence();
                let am = Multiarrangement::simple(a.clone());
                let mut checks = BTreeMap::new();
                let top = ds.max_degree().unwrap_or(0) + 1;
                checks.insert(
                    "oracle_generator_counts".to_string(),
                    oracle::generator_counts(&am, top)? == ds.histogram(),
                );
                if ds.len() == a.nvars() {
                    let mut ok = true;
                    for deg in 0..=a.len() as i64 + 2 {
                        ok &= oracle::dimension(&am, deg)? as u64
                            == oracle::free_hilbert_function(a.nvars(), ds.degrees(), deg);
                    }
                    checks.insert("free_hilbert_identity".to_string(), ok);
                }
                Ok(checks)
            };
            match run() {
                Ok(c) => s.record(name, &c),
                Err(e) => s.failures.push(format!("{name}: error {e}")),
            }
            s
        })
        .collect();
    per.into_iter().fold(PropertySummary::default(), PropertySummary::merge)
}

/// The Jacobian-syzygy route against the hyperplane-by-hyperplane route.
pub fn jacobian_sweep() -> PropertySummary {
    let per: Vec<PropertySummary> = corpus()
        .par_iter()
        .map(|(name, a)| {
            let mut s = PropertySummary::default();
            match logderiv::jacobian_crosscheck(a) {
                Ok(b) => s.record(name, &BTreeMap::from([("jacobian_crosscheck".to_string(), b)])),
                Err(e) => s.failures.push(format!("{name}: error {e}")),
            }
            s
        })
        .collect();
    per.into_iter().fold(PropertySummary::default(), PropertySummary::merge)
}

/// Tags seen in the double-deletion sweep of the free arrangements.
pub fn case_tag_census() -> BTreeMap<CaseTag, usize> {
    let mut out = BTreeMap::new();
    for (_, a) in corpus() {
        if !classify::is_free(&a).unwrap_or(false) {
            continue;
        }
        for i in 1..=a.len() {
            for j in i + 1..=a.len() {
                if let Ok(Some(t)) = classify::nt2_report(&a, i, j).map(|r| r.case_tag) {
                    *out.entry(t).or_insert(0) += 1;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_file_parses() {
        for (name, text) in FILES {
            assert!(arrfile::parse_simple(text).is_ok(), "{name}");
        }
        assert!(arrangement("nope").is_err());
    }
}
