//! Graded minimal free resolutions and Betti tables.
//!
//! A resolution `0 → M_k → … → M_1 → M_0 → D → 0` is stored as the shift
//! lists of the `M_j` together with the rows of each differential: row
//! `t` of `R_j` is the image of the `t`-th basis vector of `M_j`, written
//! in coordinates of `M_{j-1}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arrangement::Arrangement;
use crate::groebner::{self, GradedFreeModule, ModuleVector, Submodule};
use crate::logderiv::{self, der_module, Derivation, DerivationModule};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct FreeResolution {
    ambient: GradedFreeModule,
    augmentation: Vec<ModuleVector>,
    modules: Vec<GradedFreeModule>,
    differentials: Vec<Vec<ModuleVector>>,
}

impl FreeResolution {
    /// Resolves the submodule of `ambient` generated by `generators`,
    /// which must be a minimal homogeneous generating set.
    pub fn of_submodule(generators: &[ModuleVector], ambient: &GradedFreeModule) -> Result<FreeResolution> {
        let mut modules = Vec::new();
        let mut differentials = Vec::new();
        let mut current = generators.to_vec();
        let mut current_ambient = ambient.clone();
        let shifts: Vec<i64> = generators.iter().map(|g| g.degree(ambient).unwrap_or(0)).collect();
        modules.push(GradedFreeModule::new(ambient.nvars(), shifts));
        while !current.is_empty() {
            let (syz_module, rels) = groebner::syzygies(&current, &current_ambient)?;
            if rels.is_empty() {
                break;
            }
            let shifts: Vec<i64> = rels.iter().map(|r| r.degree(&syz_module).unwrap()).collect();
            modules.push(GradedFreeModule::new(ambient.nvars(), shifts));
            differentials.push(rels.clone());
            current = rels;
            current_ambient = syz_module;
        }
        Ok(FreeResolution { ambient: ambient.clone(), augmentation: generators.to_vec(), modules, differentials })
    }

    pub fn ambient(&self) -> &GradedFreeModule {
        &self.ambient
    }

    /// The minimal generators being resolved (the image of `M_0`).
    pub fn augmentation(&self) -> &[ModuleVector] {
        &self.augmentation
    }

    /// `M_0, …, M_k`.
    pub fn modules(&self) -> &[GradedFreeModule] {
        &self.modules
    }

    /// Rows of `R_j` for `j = 1..=k`, at index `j - 1`.
    pub fn differentials(&self) -> &[Vec<ModuleVector>] {
        &self.differentials
    }

    pub fn differential(&self, j: usize) -> Option<&[ModuleVector]> {
        j.checked_sub(1).and_then(|k| self.differentials.get(k)).map(Vec::as_slice)
    }

    pub fn projective_dimension(&self) -> usize {
        self.differentials.len()
    }

    /// Shifts of `M_j`, sorted.
    pub fn shifts(&self, j: usize) -> Vec<i64> {
        let mut s = self.modules.get(j).map(|m| m.shifts().to_vec()).unwrap_or_default();
        s.sort();
        s
    }

    pub fn betti_table(&self) -> BettiTable {
        BettiTable::from_shifts(self.modules.iter().map(|m| m.shifts().to_vec()).collect())
    }

    /// Whether consecutive maps compose to zero, including `M_1 → M_0 → D`.
    pub fn is_complex(&self) -> bool {
        let mut targets: Vec<ModuleVector> = self.augmentation.clone();
        let mut target_module = self.ambient.clone();
        for (j, rows) in self.differentials.iter().enumerate() {
            for row in rows {
                if !groebner::linear_combination(row.components(), &targets, &target_module).is_zero() {
                    return false;
                }
            }
            targets = rows.clone();
            target_module = self.modules[j].clone();
        }
        true
    }

    /// Whether no differential has a nonzero constant entry.
    pub fn is_minimal(&self) -> bool {
        self.differentials
            .iter()
            .all(|rows| rows.iter().all(|r| r.components().iter().all(|p| p.is_zero() || p.degree() != Some(0))))
    }
}

/// `minimal_free_resolution` of a derivation module given by minimal
/// generators.
pub fn minimal_free_resolution(d: &DerivationModule) -> Result<FreeResolution> {
    FreeResolution::of_submodule(&d.vectors(), &der_module(d.nvars()))
}

/// Graded Betti numbers `β_{j,d}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "BettiJson", try_from = "BettiJson")]
pub struct BettiTable {
    steps: Vec<BTreeMap<i64, usize>>,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    betti: BTreeMap<String, BTreeMap<String, usize>>,
    pd: usize,
}

impl From<BettiTable> for BettiJson {
    fn from(t: BettiTable) -> BettiJson {
        let betti = t
            .steps
            .iter()
            .enumerate()
            .map(|(j, m)| (j.to_string(), m.iter().map(|(d, c)| (d.to_string(), *c)).collect()))
            .collect();
        BettiJson { betti, pd: t.projective_dimension() }
    }
}

impl TryFrom<BettiJson> for BettiTable {
    type Error = String;

    fn try_from(j: BettiJson) -> std::result::Result<BettiTable, String> {
        let mut steps = vec![BTreeMap::new(); j.betti.len()];
        for (k, m) in j.betti {
            let k: usize = k.parse().map_err(|_| format!("bad homological index `{k}`"))?;
            let slot = steps.get_mut(k).ok_or_else(|| format!("homological index {k} out of range"))?;
            for (d, c) in m {
                slot.insert(d.parse::<i64>().map_err(|_| format!("bad degree `{d}`"))?, c);
            }
        }
        let t = BettiTable { steps };
        if t.projective_dimension() != j.pd {
            return Err(format!("pd {} does not match the table", j.pd));
        }
        Ok(t)
    }
}

impl BettiTable {
    pub fn from_shifts(shifts: Vec<Vec<i64>>) -> BettiTable {
        let steps = shifts
            .into_iter()
            .map(|s| {
                let mut m = BTreeMap::new();
                for d in s {
                    *m.entry(d).or_insert(0) += 1;
                }
                m
            })
            .collect();
        BettiTable { steps }
    }

    pub fn projective_dimension(&self) -> usize {
        self.steps.len().saturating_sub(1)
    }

    /// `d → β_{j,d}` for each step `j`.
    pub fn steps(&self) -> &[BTreeMap<i64, usize>] {
        &self.steps
    }

    pub fn get(&self, j: usize, d: i64) -> usize {
        self.steps.get(j).and_then(|m| m.get(&d)).copied().unwrap_or(0)
    }

    /// Sorted shifts of `M_j`.
    pub fn shifts(&self, j: usize) -> Vec<i64> {
        self.steps.get(j).map(|m| m.iter().flat_map(|(d, c)| std::iter::repeat_n(*d, *c)).collect()).unwrap_or_default()
    }

    pub fn rank(&self, j: usize) -> usize {
        self.steps.get(j).map(|m| m.values().sum()).unwrap_or(0)
    }

    /// `Σ_j (−1)^j Σ_i d_i^j`.
    pub fn alternating_shift_sum(&self) -> i64 {
        self.steps
            .iter()
            .enumerate()
            .map(|(j, m)| {
                let s: i64 = m.iter().map(|(d, c)| d * *c as i64).sum();
                if j % 2 == 0 {
                    s
                } else {
                    -s
                }
            })
            .sum()
    }

    /// The resolution written out, e.g. `0 → S[-5] → S[-4]^4 → S[-3]^6 ⊕ S[-1] → D → 0`.
    pub fn shape(&self) -> String {
        let mut parts = vec!["0".to_string()];
        for m in self.steps.iter().rev() {
            let terms: Vec<String> = m
                .iter()
                .rev()
                .map(|(d, c)| {
                    let base = if *d == 0 { "S".to_string() } else { format!("S[{}]", -d) };
                    if *c == 1 {
                        base
                    } else {
                        format!("{base}^{c}")
                    }
                })
                .collect();
            parts.push(if terms.is_empty() { "0".into() } else { terms.join(" ⊕ ") });
        }
        parts.push("D".into());
        parts.push("0".into());
        parts.join(" → ")
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.shape())
    }
}

/// Whether the alternating shift sum of `res` equals `|A|` (or `|m|`).
pub fn euler_characteristic_check(res: &FreeResolution, total: u64) -> bool {
    res.betti_table().alternating_shift_sum() == total as i64
}

/// Outcome of the structure check for a double deletion with more than
/// `ℓ + 2` minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LargeDsReport {
    /// Degrees of the generators beyond a basis of `D(A)`, level elements first.
    pub c: Vec<i64>,
    pub r: usize,
    /// Shifts of `M_1` not accounted for by the `c_j + 1`.
    pub e: Vec<i64>,
    pub t: usize,
    pub m2: Vec<i64>,
    pub m3_is_zero: bool,
    /// A basis of `D(A)` and both level elements extend to minimal generators.
    pub generators_extend: bool,
    pub clause_a: bool,
    pub clause_b: bool,
    /// `{e_i + 1} ⊆ M_2`.
    pub m2_contains: bool,
    /// `Some(_)` only when `M_2` is exactly `{e_i + 1}`.
    pub clause_c: Option<bool>,
}

impl LargeDsReport {
    pub fn holds(&self) -> bool {
        self.generators_extend && self.clause_a && self.clause_b && self.m2_contains && self.clause_c.unwrap_or(true)
    }
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

/// The level element of `D(A_i)` over a basis of `D(A)`: the single
/// generator needed beyond the basis.
fn level_element(theta: &[Derivation], di: &DerivationModule) -> Result<Option<Derivation>> {
    Ok(match logderiv::extend_generators(theta, di)? {
        Some(extra) if extra.len() == 1 => extra.into_iter().next(),
        _ => None,
    })
}

/// Checks the structure of the resolution `res` of `D(A_{i,j})` for a free
/// `A` whose single deletions `A_i`, `A_j` are SPOG and not free, with
/// `|DS(A_{i,j})| > ℓ + 2`.
pub fn large_ds_structure_check(a: &Arrangement, i: usize, j: usize, res: &FreeResolution) -> Result<LargeDsReport> {
    let l = a.nvars();
    let d = logderiv::simple_module(a)?;
    if d.generators().len() != l {
        return Err(Error::Precondition("A is not free".into()));
    }
    if res.modules()[0].rank() <= l + 2 {
        return Err(Error::Precondition(format!("|DS(A_{{{i},{j}}})| ≤ ℓ + 2")));
    }
    let theta = d.generators().to_vec();
    let mut sides = Vec::new();
    for k in [i, j] {
        let (ak, _) = a.delete(&[k])?;
        let dk = logderiv::simple_module(&ak)?;
        if dk.generators().len() == l {
            return Err(Error::Precondition(format!("A_{k} is free")));
        }
        let rk = minimal_free_resolution(&dk)?;
        if rk.projective_dimension() != 1 || rk.modules()[1].rank() != 1 {
            return Err(Error::Precondition(format!("A_{k} is not SPOG")));
        }
        let phi = level_element(&theta, &dk)?
            .ok_or_else(|| Error::Precondition(format!("no level element for A_{k} over a basis of D(A)")))?;
        sides.push((k, phi));
    }
    if sides[0].1.degree() > sides[1].1.degree() {
        sides.swap(0, 1);
    }
    let (k1, phi1) = sides[0].clone();
    let (k2, phi2) = sides[1].clone();
    let (aij, _) = a.delete(&[i, j])?;
    let dij = logderiv::simple_module(&aij)?;
    let mut seed = theta.clone();
    seed.push(phi1.clone());
    seed.push(phi2.clone());
    let extension = logderiv::extend_generators(&seed, &dij)?;
    let generators_extend = extension.is_some();
    let extra = extension.unwrap_or_default();
    let mut c = vec![phi1.degree().unwrap(), phi2.degree().unwrap()];
    c.extend(extra.iter().map(|p| p.degree().unwrap()));
    let r = c.len();

    let m1 = res.shifts(1);
    let c_plus: Vec<i64> = c.iter().map(|x| x + 1).collect();
    let e = multiset_minus(&m1, &c_plus);
    let clause_a = e.as_ref().map(|e| !e.is_empty()).unwrap_or(false);
    let e = e.unwrap_or_default();
    let t = e.len();

    let module = der_module(l);
    let alpha1 = a.form(k1)?.to_polynomial();
    let alpha2 = a.form(k2)?.to_polynomial();
    let theta_vecs: Vec<ModuleVector> = theta.iter().map(Derivation::to_vector).collect();
    let mut base = Submodule::new(&theta_vecs, &module)?;
    let mut b = base.contains(&phi1.scale(&alpha1).to_vector())? && base.contains(&phi2.scale(&alpha2).to_vector())?;
    if b && !extra.is_empty() {
        let mut with_phi1 = theta_vecs.clone();
        with_phi1.push(phi1.to_vector());
        let mut sub = Submodule::new(&with_phi1, &module)?;
        for phi in &extra {
            if !sub.contains(&phi.scale(&alpha2).to_vector())? {
                b = false;
                break;
            }
        }
    }

    let m2 = res.shifts(2);
    let e_plus: Vec<i64> = e.iter().map(|x| x + 1).collect();
    let m2_contains = multiset_minus(&m2, &e_plus).is_some();
    let m3_is_zero = res.modules().len() <= 3;
    let clause_c = if clause_a && m2 == e_plus { Some(t + 2 == r && m3_is_zero) } else { None };
    Ok(LargeDsReport { c, r, e, t, m2, m3_is_zero, generators_extend, clause_a, clause_b: b, m2_contains, clause_c })
}
