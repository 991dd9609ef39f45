//! Intersection-lattice isomorphism by backtracking over hyperplane
//! bijections.
//!
//! A bijection `σ` of hyperplanes is a lattice isomorphism iff it maps the
//! closed index sets of `A` exactly onto those of `B`.

use std::collections::{BTreeMap, BTreeSet};

use crate::arrangement::Arrangement;

struct Side {
    flats: BTreeSet<BTreeSet<usize>>,
    /// Closure of each pair, indexed `[i][j]` with 1-based indices.
    pair_closure: Vec<Vec<BTreeSet<usize>>>,
    fingerprint: Vec<Vec<(usize, usize)>>,
}

impl Side {
    #[allow(clippy::needless_range_loop)]
    fn new(a: &Arrangement) -> Side {
        let n = a.len();
        let flats: BTreeSet<BTreeSet<usize>> =
            a.intersection_lattice(a.nvars()).into_iter().map(|f| f.hyperplanes).collect();
        let mut pair_closure = vec![vec![BTreeSet::new(); n + 1]; n + 1];
        for i in 1..=n {
            for j in 1..=n {
                if i != j {
                    pair_closure[i][j] = a.closure(&[i, j]);
                }
            }
        }
        // hyperplane fingerprint: (rank, size) counts of the flats containing it
        let mut fingerprint = vec![Vec::new(); n + 1];
        let ranks: BTreeMap<BTreeSet<usize>, usize> =
            a.intersection_lattice(a.nvars()).into_iter().map(|f| (f.hyperplanes, f.rank)).collect();
        for (h, fp) in fingerprint.iter_mut().enumerate().skip(1) {
            let mut v: Vec<(usize, usize)> =
                ranks.iter().filter(|(s, _)| s.contains(&h)).map(|(s, r)| (*r, s.len())).collect();
            v.sort();
            *fp = v;
        }
        Side { flats, pair_closure, fingerprint }
    }
}

/// A bijection `σ` (with `σ[i - 1]` the 1-based image of hyperplane `i`)
/// inducing an isomorphism `L(A) ≅ L(B)`, if one exists.
pub fn find_isomorphism(a: &Arrangement, b: &Arrangement) -> Option<Vec<usize>> {
    if a.len() != b.len() || a.rank() != b.rank() {
        return None;
    }
    let sa = Side::new(a);
    let sb = Side::new(b);
    if sa.flats.len() != sb.flats.len() {
        return None;
    }
    let n = a.len();
    let mut sigma = vec![0usize; n + 1];
    let mut used = vec![false; n + 1];
    if extend(1, n, &sa, &sb, &mut sigma, &mut used) {
        Some(sigma[1..].to_vec())
    } else {
        None
    }
}

fn extend(h: usize, n: usize, sa: &Side, sb: &Side, sigma: &mut [usize], used: &mut [bool]) -> bool {
    if h > n {
        return maps_flats(sa, sb, sigma);
    }
    for cand in 1..=n {
        if used[cand] || sa.fingerprint[h] != sb.fingerprint[cand] {
            continue;
        }
        sigma[h] = cand;
        if consistent(h, sa, sb, sigma) {
            used[cand] = true;
            if extend(h + 1, n, sa, sb, sigma, used) {
                return true;
            }
            used[cand] = false;
        }
    }
    sigma[h] = 0;
    false
}

/// Rank-2 closures among assigned hyperplanes must correspond.
#[allow(clippy::needless_range_loop)]
fn consistent(h: usize, sa: &Side, sb: &Side, sigma: &[usize]) -> bool {
    for k in 1..h {
        let ca = &sa.pair_closure[h][k];
        let cb = &sb.pair_closure[sigma[h]][sigma[k]];
        if ca.len() != cb.len() {
            return false;
        }
        for m in 1..h {
            if m != k && ca.contains(&m) != cb.contains(&sigma[m]) {
                return false;
            }
        }
    }
    true
}

fn maps_flats(sa: &Side, sb: &Side, sigma: &[usize]) -> bool {
    sa.flats.iter().all(|f| {
        let image: BTreeSet<usize> = f.iter().map(|&i| sigma[i]).collect();
        sb.flats.contains(&image)
    })
}

/// For each hyperplane, the sizes of the rank-2 flats with at least three
/// hyperplanes through it, descending; the list of these is sorted.
pub fn multiple_point_profile(a: &Arrangement) -> Vec<Vec<usize>> {
    let flats: Vec<BTreeSet<usize>> = a
        .intersection_lattice(2)
        .into_iter()
        .filter(|f| f.rank == 2 && f.hyperplanes.len() > 2)
        .map(|f| f.hyperplanes)
        .collect();
    let mut out: Vec<Vec<usize>> = (1..=a.len())
        .map(|h| {
            let mut v: Vec<usize> = flats.iter().filter(|f| f.contains(&h)).map(|f| f.len()).collect();
            v.sort_by(|x, y| y.cmp(x));
            v
        })
        .collect();
    out.sort();
    out
}

/// A human-readable invariant separating `L(A)` from `L(B)`, if a cheap one exists.
pub fn obstruction(a: &Arrangement, b: &Arrangement) -> Option<String> {
    if a.len() != b.len() {
        return Some(format!("{} vs {} hyperplanes", a.len(), b.len()));
    }
    let sizes = |x: &Arrangement| {
        let mut v: Vec<(usize, usize)> =
            x.intersection_lattice(x.nvars()).into_iter().map(|f| (f.rank, f.hyperplanes.len())).collect();
        v.sort();
        v
    };
    if sizes(a) != sizes(b) {
        return Some("flat (rank, size) multisets differ".into());
    }
    let (pa, pb) = (multiple_point_profile(a), multiple_point_profile(b));
    if pa != pb {
        let top = |p: &[Vec<usize>]| p.iter().map(Vec::len).max().unwrap_or(0);
        return Some(format!(
            "multiple points per hyperplane differ: at most {} in the first, at most {} in the second",
            top(&pa),
            top(&pb)
        ));
    }
    None
}

/// Whether `L(A) ≅ L(B)`.
pub fn lattices_isomorphic(a: &Arrangement, b: &Arrangement) -> bool {
    find_isomorphism(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_is_found() {
        let a = Arrangement::from_rows(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, -1, 0], &[1, 1, 1]]).unwrap();
        let b = a.permuted(&[4, 2, 5, 1, 3]);
        let s = find_isomorphism(&a, &b).unwrap();
        let mut image = s.clone();
        image.sort();
        assert_eq!(image, vec![1, 2, 3, 4, 5]);
        for i in 1..=5 {
            for j in i + 1..=5 {
                let cb: BTreeSet<usize> = a.closure(&[i, j]).iter().map(|&k| s[k - 1]).collect();
                assert_eq!(cb, b.closure(&[s[i - 1], s[j - 1]]));
            }
        }
    }

    #[test]
    fn different_sizes_or_incidences() {
        let a = Arrangement::boolean(3);
        let b = Arrangement::from_rows(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]).unwrap();
        assert!(!lattices_isomorphic(&a, &b));
        assert!(!lattices_isomorphic(&a, &Arrangement::boolean(2)));
        assert!(obstruction(&a, &Arrangement::boolean(2)).is_some());
        assert!(obstruction(&a, &a.permuted(&[3, 1, 2])).is_none());
    }

    #[test]
    fn profile_counts_triple_points() {
        let a = Arrangement::from_rows(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(multiple_point_profile(&a), vec![vec![], vec![3], vec![3], vec![3]]);
    }
}
