//! Exact linear algebra over the rationals with sparse rows.

use crate::rational::Rational;

/// A sparse row: `(column, value)` pairs with strictly increasing columns
/// and no zero values.
pub type SparseRow = Vec<(usize, Rational)>;

pub fn sparse_from_dense(dense: &[Rational]) -> SparseRow {
    dense.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect()
}

/// Incrementally maintained row echelon form. Each stored row has a
/// leading `1` at its pivot column.
#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseRow>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivot_row: vec![None; ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the stored pivots; the result has no entry in
    /// a pivot column.
    pub fn reduce(&self, row: &[(usize, Rational)]) -> SparseRow {
        let mut acc: Vec<Rational> = vec![Rational::zero(); self.ncols];
        let mut touched_min = usize::MAX;
        for (c, v) in row {
            acc[*c] = v.clone();
            touched_min = touched_min.min(*c);
        }
        if touched_min == usize::MAX {
            return Vec::new();
        }
        for col in touched_min..self.ncols {
            if acc[col].is_zero() {
                continue;
            }
            if let Some(r) = self.pivot_row[col] {
                let f = acc[col].clone();
                for (c, v) in &self.rows[r] {
                    let t = &f * v;
                    acc[*c] -= &t;
                }
            }
        }
        sparse_from_dense(&acc)
    }

    /// Adds `row` to the span; returns whether it was independent.
    pub fn insert(&mut self, row: &[(usize, Rational)]) -> bool {
        let mut r = self.reduce(row);
        if r.is_empty() {
            return false;
        }
        let inv = r[0].1.recip();
        for (_, v) in r.iter_mut() {
            *v = &*v * &inv;
        }
        let p = r[0].0;
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn contains(&self, row: &[(usize, Rational)]) -> bool {
        self.reduce(row).is_empty()
    }

    /// Basis of the solution space of `row · x = 0` for all stored rows.
    /// Each basis vector has a single `1` among the free columns.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let mut pivots: Vec<(usize, usize)> =
            self.pivot_row.iter().enumerate().filter_map(|(c, r)| r.map(|r| (c, r))).collect();
        pivots.sort_by_key(|p| std::cmp::Reverse(p.0));
        let free: Vec<usize> = (0..self.ncols).filter(|&c| self.pivot_row[c].is_none()).collect();
        let mut out = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = vec![Rational::zero(); self.ncols];
            x[f] = Rational::one();
            for &(p, r) in &pivots {
                let mut s = Rational::zero();
                for (c, v) in &self.rows[r][1..] {
                    if !x[*c].is_zero() {
                        s += &(v * &x[*c]);
                    }
                }
                x[p] = -s;
            }
            out.push(x);
        }
        out
    }
}

/// Rank of a dense matrix.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let ncols = rows.first().map(Vec::len).unwrap_or(0);
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(&sparse_from_dense(r));
    }
    e.rank()
}

/// Kernel basis of a dense matrix with `ncols` columns.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(&sparse_from_dense(r));
    }
    e.kernel()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v)
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&mat(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 0]])), 3);
        assert_eq!(rank(&mat(&[&[0, 0]])), 0);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn kernel_of_a_plane() {
        let m = mat(&[&[1, 1, 1]]);
        let k = nullspace(&m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s = v.iter().fold(Rational::zero(), |a, b| &a + b);
            assert!(s.is_zero());
        }
    }

    proptest! {
        #[test]
        fn kernel_is_annihilated(entries in prop::collection::vec(-3i64..4, 12)) {
            let m: Vec<Vec<Rational>> = entries.chunks(4).map(|r| r.iter().map(|&v| q(v)).collect()).collect();
            let k = nullspace(&m, 4);
            prop_assert_eq!(k.len() + rank(&m), 4);
            for v in &k {
                for row in &m {
                    let s = row.iter().zip(v).fold(Rational::zero(), |a, (x, y)| &a + &(x * y));
                    prop_assert!(s.is_zero());
                }
            }
        }
    }
}
