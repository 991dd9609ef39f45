//! Degree-by-degree linear algebra for `D(A, m)_d`, independent of the
//! Gröbner engine.
//!
//! Unknowns are the coefficients of the `ℓ` components of `θ` in `S_d`.
//! For each `H`, the remainder of `θ(α_H)` on division by `α_H^{m(H)}`
//! in the pivot variable of `α_H` is linear in the unknowns and must vanish.

use std::collections::{BTreeMap, HashMap};

use crate::arrangement::Multiarrangement;
use crate::linalg::{Echelon, SparseRow};
use crate::logderiv::Derivation;
use crate::poly::{Monomial, Polynomial};
use crate::rational::Rational;
use crate::Result;

#[derive(Debug, Clone)]
pub struct DegreeSlice {
    pub degree: i64,
    pub basis: Vec<Derivation>,
    pub dimension: usize,
}

struct Coordinates {
    nvars: usize,
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Coordinates {
    fn new(nvars: usize, d: i64) -> Coordinates {
        let monos = if d < 0 { Vec::new() } else { Monomial::all_of_degree(nvars, d as u32) };
        let index = monos.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        Coordinates { nvars, monos, index }
    }

    fn ncols(&self) -> usize {
        self.nvars * self.monos.len()
    }

    fn col(&self, comp: usize, m: &Monomial) -> usize {
        comp * self.monos.len() + self.index[m]
    }

    fn to_derivation(&self, x: &[Rational]) -> Derivation {
        let n = self.nvars;
        let comps = (0..n)
            .map(|k| {
                let terms = self
                    .monos
                    .iter()
                    .enumerate()
                    .filter(|(t, _)| !x[k * self.monos.len() + t].is_zero())
                    .map(|(t, m)| (*m, x[k * self.monos.len() + t].clone()))
                    .collect();
                Polynomial::from_terms(n, terms)
            })
            .collect();
        Derivation::new(comps)
    }

    fn row_of(&self, theta: &Derivation) -> SparseRow {
        let mut row: SparseRow = Vec::new();
        for (k, p) in theta.components().iter().enumerate() {
            for (m, c) in p.terms() {
                row.push((self.col(k, m), c.clone()));
            }
        }
        row.sort_by_key(|(c, _)| *c);
        row
    }
}

/// The linear constraints cutting out `D(A, m)_d`, inserted into an echelon form.
fn constraints(am: &Multiarrangement, coords: &Coordinates) -> Result<Echelon> {
    let mut ech = Echelon::new(coords.ncols());
    for (f, &m) in am.base().forms().iter().zip(am.multiplicities()) {
        if m == 0 {
            continue;
        }
        let power = f.to_polynomial().pow(m);
        let pivot = f.pivot();
        let coeffs = f.rational_coefficients();
        // rows indexed by the monomials of the remainder
        let mut rows: BTreeMap<Monomial, SparseRow> = BTreeMap::new();
        for mu in &coords.monos {
            let (_, rem) = Polynomial::monomial(*mu, Rational::one()).div_rem_in(&power, pivot)?;
            for (nu, r) in rem.terms() {
                for (k, c) in coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        rows.entry(*nu).or_default().push((coords.col(k, mu), c * r));
                    }
                }
            }
        }
        for (_, mut row) in rows {
            row.sort_by_key(|(c, _)| *c);
            ech.insert(&row);
        }
    }
    Ok(ech)
}

/// A basis of `D(A, m)_d`.
pub fn dim_slice(am: &Multiarrangement, d: i64) -> Result<DegreeSlice> {
    let coords = Coordinates::new(am.nvars(), d);
    if coords.ncols() == 0 {
        return Ok(DegreeSlice { degree: d, basis: Vec::new(), dimension: 0 });
    }
    let ech = constraints(am, &coords)?;
    let basis: Vec<Derivation> = ech.kernel().iter().map(|x| coords.to_derivation(x)).collect();
    Ok(DegreeSlice { degree: d, dimension: basis.len(), basis })
}

/// `dim D(A, m)_d` without materializing a basis.
pub fn dimension(am: &Multiarrangement, d: i64) -> Result<usize> {
    let coords = Coordinates::new(am.nvars(), d);
    if coords.ncols() == 0 {
        return Ok(0);
    }
    Ok(coords.ncols() - constraints(am, &coords)?.rank())
}

/// One row of the oracle table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleRow {
    pub degree: i64,
    pub dim: usize,
    pub new_generators: usize,
}

/// `β_{0,d} = dim D_d − dim Σ_k x_k·D_{d−1}` for `0 ≤ d ≤ max_degree`.
pub fn oracle_table(am: &Multiarrangement, max_degree: i64) -> Result<Vec<OracleRow>> {
    let n = am.nvars();
    let mut out = Vec::new();
    let mut prev: Option<DegreeSlice> = None;
    for d in 0..=max_degree {
        let slice = dim_slice(am, d)?;
        let coords = Coordinates::new(n, d);
        let mut span = Echelon::new(coords.ncols());
        if let Some(p) = &prev {
            for theta in &p.basis {
                for k in 0..n {
                    let x = Polynomial::var(n, k);
                    span.insert(&coords.row_of(&theta.scale(&x)));
                }
            }
        }
        out.push(OracleRow { degree: d, dim: slice.dimension, new_generators: slice.dimension - span.rank() });
        prev = Some(slice);
    }
    Ok(out)
}

/// Nonzero generator counts per degree up to `max_degree`.
pub fn generator_counts(am: &Multiarrangement, max_degree: i64) -> Result<BTreeMap<i64, usize>> {
    Ok(oracle_table(am, max_degree)?
        .into_iter()
        .filter(|r| r.new_generators > 0)
        .map(|r| (r.degree, r.new_generators))
        .collect())
}

/// Tab-separated `degree, dim, new_generators` rows with a header.
pub fn table_tsv(rows: &[OracleRow]) -> String {
    let mut s = String::from("degree\tdim\tnew_generators\n");
    for r in rows {
        s.push_str(&format!("{}\t{}\t{}\n", r.degree, r.dim, r.new_generators));
    }
    s
}

/// `Σ_i dim S_{d − d_i}`, the dimension of a free module with the given
/// generator degrees.
pub fn free_hilbert_function(nvars: usize, degrees: &[i64], d: i64) -> u64 {
    degrees.iter().map(|&di| crate::poly::monomial_count(nvars, d - di)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Arrangement;
    use crate::logderiv::is_logarithmic;

    fn simple(a: Arrangement) -> Multiarrangement {
        Multiarrangement::simple(a)
    }

    #[test]
    fn boolean_two() {
        let am = simple(Arrangement::boolean(2));
        assert_eq!(dim_slice(&am, 1).unwrap().dimension, 2);
        assert_eq!(dim_slice(&am, 2).unwrap().dimension, 4);
        assert_eq!(dimension(&am, 2).unwrap(), 4);
        assert_eq!(generator_counts(&am, 3).unwrap(), BTreeMap::from([(1, 2)]));
    }

    #[test]
    fn boolean_three_counts() {
        let am = simple(Arrangement::boolean(3));
        assert_eq!(generator_counts(&am, 3).unwrap(), BTreeMap::from([(1, 3)]));
    }

    #[test]
    fn slice_elements_are_logarithmic() {
        let a = Arrangement::from_rows(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap();
        let am = simple(a);
        for d in 0..4 {
            for theta in dim_slice(&am, d).unwrap().basis {
                assert!(is_logarithmic(&theta, &am));
            }
        }
        // generic 4 lines: (1, 2, 2, 2)
        assert_eq!(generator_counts(&am, 4).unwrap(), BTreeMap::from([(1, 1), (2, 3)]));
    }

    #[test]
    fn multiplicity_two_line() {
        let a = Arrangement::from_rows(2, &[&[1, 0]]).unwrap();
        let am = Multiarrangement::new(a, vec![2]).unwrap();
        // generated by x1^2 ∂1 and ∂2
        assert_eq!(generator_counts(&am, 3).unwrap(), BTreeMap::from([(0, 1), (2, 1)]));
    }

    #[test]
    fn tsv_shape() {
        let rows = oracle_table(&simple(Arrangement::boolean(2)), 1).unwrap();
        assert_eq!(table_tsv(&rows), "degree\tdim\tnew_generators\n0\t0\t0\n1\t2\t2\n");
    }
}
