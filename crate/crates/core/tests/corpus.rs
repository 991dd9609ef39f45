//! Facts about the embedded corpus that follow from the structure theory
//! rather than from a printed value.

use logder::arrangement::{Arrangement, LinearForm};
use logder::classify::{self, CaseTag, Verdict};
use logder::golden;
use logder::logderiv;
use logder::poly::Polynomial;
use logder::Error;

fn free_members() -> Vec<(&'static str, Arrangement)> {
    golden::corpus().into_iter().filter(|(_, a)| classify::is_free(a).unwrap()).collect()
}

#[test]
fn corpus_freeness() {
    let free: Vec<&str> = free_members().into_iter().map(|(n, _)| n).collect();
    assert_eq!(
        free,
        vec![
            "boolean3",
            "seven_lines",
            "eleven_lines",
            "ten_lines_no_free_addition",
            "twelve_planes_l4",
            "ten_planes_l4"
        ]
    );
}

/// A basis of `D(A)` plus one element `φ` of degree `level` generates
/// `D(A \ {H})`, `φ ∉ D(A)`, and `α_H φ ∈ D(A)`.
#[test]
fn level_element_times_deleted_form_is_in_the_free_module() {
    let mut seen = 0;
    for (name, a) in free_members() {
        let da = logderiv::simple_module(&a).unwrap();
        for i in 1..=a.len() {
            let (b, _) = a.delete(&[i]).unwrap();
            let r = classify::classify(&b).unwrap();
            if r.verdict != Verdict::Spog {
                continue;
            }
            let db = logderiv::simple_module(&b).unwrap();
            let extra = logderiv::extend_generators(da.generators(), &db)
                .unwrap()
                .unwrap_or_else(|| panic!("{name} A_{i}: basis does not extend"));
            assert_eq!(extra.len(), 1, "{name} A_{i}");
            let phi = &extra[0];
            assert_eq!(phi.degree(), r.level, "{name} A_{i}");
            assert!(!da.contains(phi), "{name} A_{i}");
            let alpha = a.form(i).unwrap().to_polynomial();
            assert!(da.contains(&phi.scale(&alpha)), "{name} A_{i}");
            seen += 1;
        }
    }
    assert!(seen > 20);
}

/// When the level exceeds every PO-exponent, the level coefficient is the
/// deleted form, and putting it back restores a free arrangement.
#[test]
fn free_addition_candidate_recovers_the_deleted_hyperplane() {
    let mut eligible = Vec::new();
    for (name, a) in free_members() {
        for i in 1..=a.len() {
            let (b, _) = a.delete(&[i]).unwrap();
            let r = classify::classify(&b).unwrap();
            let strict =
                r.verdict == Verdict::Spog && r.po_exponents.as_ref().unwrap().iter().all(|&d| d < r.level.unwrap());
            if !strict {
                continue;
            }
            let f = classify::free_addition_candidate(&b, &r).unwrap();
            assert_eq!(f.candidate, a.form(i).unwrap().to_string(), "{name} A_{i}");
            assert!(!f.already_present && f.union_free, "{name} A_{i}");
            eligible.push((name, i));
        }
    }
    assert!(eligible.contains(&("eleven_lines", 2)));
    assert!(eligible.contains(&("eleven_lines", 6)));
}

#[test]
fn free_addition_needs_a_strictly_maximal_level() {
    let a = golden::arrangement("seven_lines").unwrap();
    let (b, _) = a.delete(&[2]).unwrap();
    let r = classify::classify(&b).unwrap();
    assert_eq!(r.level, Some(3));
    assert!(matches!(classify::free_addition_candidate(&b, &r), Err(Error::Precondition(_))));
    let free = classify::classify(&a).unwrap();
    assert!(matches!(classify::free_addition_candidate(&a, &free), Err(Error::Precondition(_))));
}

#[test]
fn ten_lines_candidate_is_already_present() {
    let a = golden::arrangement("ten_lines_no_free_addition").unwrap();
    let (b, _) = a.delete(&[1, 2]).unwrap();
    let r = classify::classify(&b).unwrap();
    let f = classify::free_addition_candidate(&b, &r).unwrap();
    let form = LinearForm::from_polynomial(&Polynomial::parse("x2 + x3", 3).unwrap()).unwrap();
    assert_eq!(f.candidate, form.to_string());
    assert!(f.already_present);
    assert!(b.position(&form).is_some());
}

#[test]
fn nt1_reports_pass_on_every_free_member() {
    for (name, a) in free_members() {
        for i in 1..=a.len() {
            let r = classify::nt1_report(&a, i).unwrap();
            assert!(r.all_checks_pass(), "{name} A_{i}: {:?}", r.failed_checks());
            assert!(matches!(r.case_tag, Some(CaseTag::Nt1Free) | Some(CaseTag::Nt1Spog)));
        }
    }
}

#[test]
fn dimension_three_double_deletions_are_never_free_when_both_sides_are_spog() {
    for (name, a) in free_members().into_iter().filter(|(_, a)| a.nvars() == 3) {
        for i in 1..=a.len() {
            for j in i + 1..=a.len() {
                let r = classify::nt2_report(&a, i, j).unwrap();
                if r.a_i.verdict == Verdict::Spog && r.a_j.verdict == Verdict::Spog {
                    assert_ne!(r.a_ij.verdict, Verdict::Free, "{name} A_{{{i},{j}}}");
                    let tag = r.case_tag.unwrap();
                    assert!(
                        matches!(tag, CaseTag::Nt2Case1 | CaseTag::Nt2Case21 | CaseTag::Nt2Case22),
                        "{name} A_{{{i},{j}}}: {tag}"
                    );
                }
            }
        }
    }
}

#[test]
fn census_of_case_tags() {
    let census = golden::case_tag_census();
    for tag in [CaseTag::Nt2Case1, CaseTag::Nt2Case21, CaseTag::Nt2Case22, CaseTag::Nt2Large] {
        assert!(census.get(&tag).copied().unwrap_or(0) > 0, "{tag}");
    }
    assert!(census.contains_key(&CaseTag::Nt2Small1));
}

#[test]
fn multiple_point_profiles_of_the_lattice_pair() {
    let b = golden::arrangement("same_lattice_b").unwrap();
    let c = golden::arrangement("same_lattice_c").unwrap();
    let pb = logder::lattice::multiple_point_profile(&b);
    let pc = logder::lattice::multiple_point_profile(&c);
    assert_eq!(pb.iter().map(Vec::len).max(), Some(4));
    assert_eq!(pc.iter().map(Vec::len).max(), Some(3));
    // same number of triple and quadruple points all the same
    let count = |p: &[Vec<usize>], k: usize| p.iter().flatten().filter(|&&s| s == k).count() / k;
    assert_eq!((count(&pb, 3), count(&pb, 4)), (3, 3));
    assert_eq!((count(&pc, 3), count(&pc, 4)), (3, 3));
}

#[test]
fn report_json_round_trip() {
    let a = golden::arrangement("eleven_lines").unwrap();
    let r = classify::nt2_report(&a, 4, 8).unwrap();
    let text = serde_json::to_string(&r).unwrap();
    let back: classify::NT2Report = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
    let v: serde_json::Value = serde_json::from_str(&serde_json::to_string(&r.a_ij).unwrap()).unwrap();
    for key in [
        "verdict",
        "exponents",
        "po_exponents",
        "level",
        "level_coefficient",
        "ds",
        "pd",
        "case_tag",
        "checks",
        "indices",
    ] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["verdict"], "spog");
}

/// Three triangular integer matrices with unit diagonal.
fn unimodular(n: usize) -> Vec<Vec<Vec<i64>>> {
    let id = || (0..n).map(|r| (0..n).map(|c| i64::from(r == c)).collect()).collect::<Vec<Vec<i64>>>();
    let mut shear = id();
    shear[0][1] = 1;
    let mut lower = id();
    lower[n - 1][0] = 3;
    let mut upper = id();
    for r in 0..n - 1 {
        upper[r][r + 1] = -2;
    }
    vec![shear, lower, upper]
}

#[test]
fn ds_is_invariant_under_unimodular_changes() {
    for (name, a) in golden::corpus() {
        let before = logderiv::simple_module(&a).unwrap().degree_sequence();
        for m in unimodular(a.nvars()) {
            let b = a.linear_change(&m).unwrap();
            assert_eq!(logderiv::simple_module(&b).unwrap().degree_sequence(), before, "{name} under {m:?}");
        }
    }
}

#[test]
fn relation_matrix_route_agrees() {
    for (name, a) in golden::corpus() {
        let am = logder::arrangement::Multiarrangement::simple(a.clone());
        let d = logderiv::simple_module(&a).unwrap();
        let via = logderiv::derivation_module_via_relation_matrix(&am).unwrap();
        assert_eq!(via.degree_sequence(), d.degree_sequence(), "{name}");
        let ambient = logderiv::der_module(a.nvars());
        assert!(logder::groebner::submodule_equal(&d.vectors(), &via.vectors(), &ambient).unwrap(), "{name}");
    }
}
