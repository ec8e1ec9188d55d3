//! Exact rational linear algebra on sparse vectors.
//!
//! [`RrefBasis`] maintains a row space in fully reduced echelon form: every
//! row starts with a unit pivot and no row contains another row's pivot
//! column. Insertions and membership queries then amount to one forward
//! reduction pass, and rows stay sparse because back-substitution keeps the
//! non-pivot support small. [`LinearSystem`] layers an augmented column on
//! top to solve `Ax = b` exactly, reporting inconsistency or rank deficiency
//! instead of guessing.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::rational::Rational;

/// Sparse vector: strictly increasing column indices, nonzero entries.
pub type SparseVec = Vec<(usize, Rational)>;

/// Drop zero entries and sort by column, summing duplicates.
pub fn normalize_sparse(entries: Vec<(usize, Rational)>) -> SparseVec {
    let mut map: BTreeMap<usize, Rational> = BTreeMap::new();
    for (c, v) in entries {
        if v.is_zero() {
            continue;
        }
        let slot = map.entry(c).or_insert_with(Rational::zero);
        *slot += v;
    }
    map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// `v[start..] -= q * tail`, merging sorted supports. All columns in `tail`
/// must exceed the columns of `v[..start]`.
fn axpy_tail(v: &mut SparseVec, start: usize, tail: &[(usize, Rational)], q: &Rational) {
    let mut merged: SparseVec = Vec::with_capacity(v.len() + tail.len());
    merged.extend_from_slice(&v[..start]);
    let rest = v.split_off(start);
    let (mut a, mut b) = (0usize, 0usize);
    while a < rest.len() || b < tail.len() {
        let take_rest = match (rest.get(a), tail.get(b)) {
            (Some((ca, _)), Some((cb, _))) => ca <= cb,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => break,
        };
        if take_rest {
            let (ca, va) = rest[a].clone();
            if b < tail.len() && tail[b].0 == ca {
                let nv = va - q * &tail[b].1;
                if !nv.is_zero() {
                    merged.push((ca, nv));
                }
                b += 1;
            } else {
                merged.push((ca, va));
            }
            a += 1;
        } else {
            let (cb, vb) = &tail[b];
            merged.push((*cb, -(q * vb)));
            b += 1;
        }
    }
    *v = merged;
}

/// A row space in reduced echelon form over the rationals.
#[derive(Clone, Debug, Default)]
pub struct RrefBasis {
    // pivot column -> row; row[0] == (pivot, 1), remaining columns > pivot,
    // and no row's support meets another row's pivot column.
    rows: BTreeMap<usize, SparseVec>,
}

impl RrefBasis {
    pub fn new() -> Self {
        RrefBasis {
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn row(&self, pivot: usize) -> Option<&SparseVec> {
        self.rows.get(&pivot)
    }

    /// Reduce `v` against the basis; the result has no support on any pivot.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut i = 0;
        while i < v.len() {
            let col = v[i].0;
            if let Some(row) = self.rows.get(&col) {
                let q = v[i].1.clone();
                v.remove(i);
                axpy_tail(&mut v, i, &row[1..], &q);
            } else {
                i += 1;
            }
        }
        v
    }

    /// Insert a vector; returns its pivot column, or `None` when it was
    /// already in the span.
    pub fn insert(&mut self, v: SparseVec) -> Option<usize> {
        let mut v = self.reduce(v);
        if v.is_empty() {
            return None;
        }
        let lead = v[0].1.clone();
        let pivot = v[0].0;
        if lead != Rational::one() {
            let inv = lead.recip();
            for (_, x) in v.iter_mut() {
                *x *= &inv;
            }
        }
        // Back-substitute so existing rows lose their support on the new pivot.
        let updates: Vec<usize> = self
            .rows
            .iter()
            .filter(|(_, row)| row.binary_search_by_key(&pivot, |e| e.0).is_ok())
            .map(|(&p, _)| p)
            .collect();
        for p in updates {
            let row = self.rows.get_mut(&p).unwrap();
            let k = row.binary_search_by_key(&pivot, |e| e.0).unwrap();
            let q = row[k].1.clone();
            row.remove(k);
            axpy_tail(row, k, &v[1..], &q);
        }
        self.rows.insert(pivot, v);
        Some(pivot)
    }

    /// True when `v` lies in the current span.
    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Why an exact solve failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveError {
    /// Some equation reduced to `0 = c` with `c != 0`.
    Inconsistent,
    /// The equations do not pin down every unknown.
    Underdetermined { rank: usize },
}

/// An exact solver for (possibly overdetermined) systems `Ax = b`.
pub struct LinearSystem {
    n_unknowns: usize,
    basis: RrefBasis,
}

impl LinearSystem {
    pub fn new(n_unknowns: usize) -> Self {
        LinearSystem {
            n_unknowns,
            basis: RrefBasis::new(),
        }
    }

    /// Add `Σ coeffs[i].1 · x_{coeffs[i].0} = rhs`. Redundant equations are
    /// absorbed silently; contradictory ones surface immediately.
    pub fn add_equation(
        &mut self,
        coeffs: Vec<(usize, Rational)>,
        rhs: Rational,
    ) -> Result<(), SolveError> {
        let mut v = normalize_sparse(coeffs);
        debug_assert!(v.iter().all(|(c, _)| *c < self.n_unknowns));
        if !rhs.is_zero() {
            v.push((self.n_unknowns, rhs));
        }
        let reduced = self.basis.reduce(v);
        match reduced.first() {
            None => Ok(()),
            Some((c, _)) if *c == self.n_unknowns => Err(SolveError::Inconsistent),
            Some(_) => {
                self.basis.insert(reduced);
                Ok(())
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    /// Extract the unique solution, or report why there is none.
    pub fn solve_unique(&self) -> Result<Vec<Rational>, SolveError> {
        if self.basis.rank() < self.n_unknowns {
            return Err(SolveError::Underdetermined {
                rank: self.basis.rank(),
            });
        }
        let mut x = Vec::with_capacity(self.n_unknowns);
        for col in 0..self.n_unknowns {
            let row = self.basis.row(col).expect("rank accounted for every column");
            // Full reduction leaves at most the augmented column in the tail.
            debug_assert!(row.len() <= 2);
            let value = row
                .get(1)
                .map(|(c, v)| {
                    debug_assert_eq!(*c, self.n_unknowns);
                    v.clone()
                })
                .unwrap_or_else(Rational::zero);
            x.push(value);
        }
        Ok(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn solves_two_by_two() {
        // x + y = 3, x - y = 1  =>  x = 2, y = 1
        let mut sys = LinearSystem::new(2);
        sys.add_equation(alloc::vec![(0, r(1, 1)), (1, r(1, 1))], r(3, 1))
            .unwrap();
        sys.add_equation(alloc::vec![(0, r(1, 1)), (1, r(-1, 1))], r(1, 1))
            .unwrap();
        assert_eq!(sys.solve_unique().unwrap(), alloc::vec![r(2, 1), r(1, 1)]);
    }

    #[test]
    fn redundant_rows_are_absorbed() {
        let mut sys = LinearSystem::new(2);
        sys.add_equation(alloc::vec![(0, r(1, 1)), (1, r(1, 1))], r(3, 1))
            .unwrap();
        sys.add_equation(alloc::vec![(0, r(2, 1)), (1, r(2, 1))], r(6, 1))
            .unwrap();
        assert_eq!(sys.rank(), 1);
        assert!(matches!(
            sys.solve_unique(),
            Err(SolveError::Underdetermined { rank: 1 })
        ));
    }

    #[test]
    fn contradiction_is_detected() {
        let mut sys = LinearSystem::new(1);
        sys.add_equation(alloc::vec![(0, r(1, 1))], r(1, 1)).unwrap();
        let err = sys.add_equation(alloc::vec![(0, r(1, 1))], r(2, 1));
        assert_eq!(err, Err(SolveError::Inconsistent));
    }

    #[test]
    fn span_membership() {
        let mut basis = RrefBasis::new();
        basis.insert(alloc::vec![(0, r(1, 1)), (1, r(2, 1))]);
        basis.insert(alloc::vec![(1, r(1, 1)), (2, r(1, 1))]);
        assert_eq!(basis.rank(), 2);
        // (1, 2, 0) + 3*(0, 1, 1) = (1, 5, 3)
        assert!(basis.contains(alloc::vec![(0, r(1, 1)), (1, r(5, 1)), (2, r(3, 1))]));
        assert!(!basis.contains(alloc::vec![(2, r(1, 1)), (3, r(1, 1))]));
    }

    #[test]
    fn rref_invariant_holds() {
        let mut basis = RrefBasis::new();
        basis.insert(alloc::vec![(0, r(1, 1)), (1, r(1, 1)), (2, r(1, 1))]);
        basis.insert(alloc::vec![(1, r(1, 1)), (2, r(1, 1))]);
        basis.insert(alloc::vec![(2, r(5, 1))]);
        let pivots: Vec<usize> = basis.pivots().collect();
        assert_eq!(pivots, alloc::vec![0, 1, 2]);
        for p in pivots {
            let row = basis.row(p).unwrap();
            assert_eq!(row[0], (p, r(1, 1)));
            assert_eq!(row.len(), 1, "back-substitution should clear the tails");
        }
    }

    #[test]
    fn normalize_merges_duplicates() {
        let v = normalize_sparse(alloc::vec![
            (3, r(1, 2)),
            (1, r(1, 1)),
            (3, r(-1, 2)),
            (0, r(0, 1)),
        ]);
        assert_eq!(v, alloc::vec![(1, r(1, 1))]);
    }
}
