//! Generating tables from translatable sequences, detecting translatability,
//! rotated presentations and dual groupoids.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arith::{gcd, inverse_mod, rep};
use crate::table::{CayleyTable, KSequence, Ordering};

/// Builds the table whose first row is `a` and whose every later row is the
/// previous one rotated right by `k`, i.e. `i·j = a_[k - ki + j]`.
pub fn table_from_sequence(seq: &KSequence) -> CayleyTable {
    let k = seq.step() as i64;
    CayleyTable::from_fn(seq.order(), |i, j| seq.at(k - k * i as i64 + j as i64))
        .expect("sequence entries are in range")
}

/// The steps `k` for which a table is `k`-translatable in its presented order.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct TranslatabilityResult {
    pub ks: BTreeSet<usize>,
}

impl TranslatabilityResult {
    pub fn is_translatable(&self) -> bool {
        !self.ks.is_empty()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.ks.contains(&k)
    }
}

/// The three equivalent formulations of `k`-translatability.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Criterion {
    /// `i·j = a_[k - ki + j]` with `a` the first row.
    FirstRow,
    /// `i·j = [i+1]·[j+k]`.
    Shift,
    /// `i·[j-k] = [i+1]·j`.
    BackShift,
}

/// Tests one step against one formulation, cell by cell with early exit.
pub fn is_translatable_by(table: &CayleyTable, k: usize, criterion: Criterion) -> bool {
    let n = table.order();
    if k < 1 || k >= n {
        return false;
    }
    let (k, nn) = (k as i64, n);
    for i in 1..=n {
        let ii = i as i64;
        for j in 1..=n {
            let jj = j as i64;
            let ok = match criterion {
                Criterion::FirstRow => table.get(i, j) == table.get(1, rep(k - k * ii + jj, nn)),
                Criterion::Shift => table.get(i, j) == table.get(rep(ii + 1, nn), rep(jj + k, nn)),
                Criterion::BackShift => {
                    table.get(i, rep(jj - k, nn)) == table.get(rep(ii + 1, nn), j)
                }
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Every `k` in `1..n` for which `i·j = [i+1]·[j+k]` holds on all cells.
pub fn detect(table: &CayleyTable) -> TranslatabilityResult {
    let n = table.order();
    TranslatabilityResult {
        ks: (1..n)
            .filter(|&k| is_translatable_by(table, k, Criterion::Shift))
            .collect(),
    }
}

/// Moves every element of the ordering up one place: the ordering
/// `n, 1, .., n-1` together with the sequence `a_k, .., a_n, a_1, .., a_{k-1}`.
pub fn rotate_ordering(seq: &KSequence) -> (Ordering, KSequence) {
    let n = seq.order();
    let k = seq.step() as i64;
    let rotated: Vec<usize> = (1..=n as i64).map(|i| seq.at(i - 1 + k)).collect();
    let seq = KSequence::new(n, seq.step(), rotated).expect("rotation keeps the invariants");
    (Ordering::shifted(n, -1), seq)
}

/// The `n` presentations reached by repeated rotation, starting with the
/// natural ordering. Each ordering is expressed against the original labels.
pub fn all_rotated_presentations(seq: &KSequence) -> Vec<(Ordering, KSequence)> {
    let n = seq.order();
    let mut out = Vec::with_capacity(n);
    let mut ordering = Ordering::identity(n);
    let mut current = seq.clone();
    for _ in 0..n {
        out.push((ordering.clone(), current.clone()));
        let (step, next) = rotate_ordering(&current);
        ordering = ordering.compose(&step);
        current = next;
    }
    out
}

/// The dual operation `i*j = j·i`.
pub fn dual(table: &CayleyTable) -> CayleyTable {
    table.transpose()
}

/// Step of the dual of a left cancellative `k`-translatable groupoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DualStep {
    pub n: usize,
    pub k: usize,
    /// The unique `k*` in `1..n` with `[k·k*]_n = 1`, when `gcd(k, n) = 1`.
    pub kstar: Option<usize>,
    /// `k* = n - k`, which happens exactly when `[k²]_n = n - 1`.
    pub alterable: bool,
}

pub fn dual_step(n: usize, k: usize) -> DualStep {
    let kstar = if gcd(k, n) == 1 {
        inverse_mod(k, n)
    } else {
        None
    };
    DualStep {
        n,
        k,
        kstar,
        alterable: kstar == Some(n - k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::Ordering;

    fn seq(n: usize, k: usize, a: &[usize]) -> KSequence {
        KSequence::new(n, k, a.to_vec()).unwrap()
    }

    #[test]
    fn generates_example_tables() {
        let z4 = table_from_sequence(&seq(4, 3, &[1, 2, 3, 4]));
        assert_eq!(
            z4.rows(),
            vec![
                vec![1, 2, 3, 4],
                vec![2, 3, 4, 1],
                vec![3, 4, 1, 2],
                vec![4, 1, 2, 3]
            ]
        );
        let idem = table_from_sequence(&seq(4, 2, &[1, 4, 3, 2]));
        assert_eq!(
            idem.rows(),
            vec![
                vec![1, 4, 3, 2],
                vec![3, 2, 1, 4],
                vec![1, 4, 3, 2],
                vec![3, 2, 1, 4]
            ]
        );
        assert_eq!(idem.get(2, 3), 1);
        for k in 1..5 {
            let c = table_from_sequence(&seq(5, k, &[2; 5]));
            assert_eq!(c, CayleyTable::constant(5, 2).unwrap());
        }
    }

    #[test]
    fn rows_are_right_rotations() {
        let s = seq(7, 3, &[4, 1, 7, 7, 2, 5, 3]);
        let t = table_from_sequence(&s);
        for q in 2..=7 {
            let prev: Vec<_> = t.row(q - 1).collect();
            let mut expected = prev[7 - 3..].to_vec();
            expected.extend_from_slice(&prev[..7 - 3]);
            assert_eq!(t.row(q).collect::<Vec<_>>(), expected);
        }
    }

    #[test]
    fn detect_examples() {
        let z4 = table_from_sequence(&seq(4, 3, &[1, 2, 3, 4]));
        assert_eq!(detect(&z4).ks, BTreeSet::from([3]));
        let reordered = z4.reorder(&Ordering::new(vec![1, 3, 4, 2]).unwrap()).unwrap();
        assert!(detect(&reordered).ks.is_empty());
        let constant = CayleyTable::constant(5, 4).unwrap();
        assert_eq!(detect(&constant).ks, BTreeSet::from([1, 2, 3, 4]));
        let rotated = z4.reorder(&Ordering::new(vec![4, 1, 2, 3]).unwrap()).unwrap();
        assert_eq!(detect(&rotated).ks, BTreeSet::from([3]));
    }

    #[test]
    fn parity_semigroup_steps() {
        // x·y = 1 when x + y is even, 2 otherwise.
        for n in 2..=9usize {
            let t = CayleyTable::from_fn(n, |x, y| if (x + y) % 2 == 0 { 1 } else { 2 }).unwrap();
            let ks = detect(&t).ks;
            let expected: BTreeSet<usize> = (1..n)
                .filter(|k| n % 2 == 0 && k % 2 == 1)
                .collect();
            assert_eq!(ks, expected, "n={n}");
        }
    }

    #[test]
    fn rotation_example() {
        let (ord, s) = rotate_ordering(&seq(4, 3, &[1, 2, 3, 4]));
        assert_eq!(ord.as_slice(), &[4, 1, 2, 3]);
        assert_eq!(s.values(), &[3, 4, 1, 2]);
        let constant = seq(3, 2, &[2, 2, 2]);
        assert_eq!(rotate_ordering(&constant).1, constant);
    }

    #[test]
    fn rotated_presentations_of_z4() {
        let pres = all_rotated_presentations(&seq(4, 3, &[1, 2, 3, 4]));
        let orders: Vec<_> = pres.iter().map(|(o, _)| o.as_slice().to_vec()).collect();
        assert_eq!(
            orders,
            vec![
                vec![1, 2, 3, 4],
                vec![4, 1, 2, 3],
                vec![3, 4, 1, 2],
                vec![2, 3, 4, 1]
            ]
        );
        let constant = all_rotated_presentations(&seq(3, 1, &[3, 3, 3]));
        assert_eq!(constant.len(), 3);
        assert!(constant.iter().all(|(_, s)| s.values() == [3, 3, 3]));
    }

    #[test]
    fn rotation_cycles_back_after_n_steps() {
        for n in 2..=12usize {
            for k in 1..n {
                let s = KSequence::new(n, k, (1..=n).map(|i| (i * 7) % n + 1).collect()).unwrap();
                let mut cur = s.clone();
                let mut ord = Ordering::identity(n);
                for _ in 0..n {
                    let (step, next) = rotate_ordering(&cur);
                    ord = ord.compose(&step);
                    cur = next;
                }
                assert!(ord.is_identity());
                assert_eq!(cur, s);
            }
        }
    }

    #[test]
    fn dual_of_left_unitary_tables() {
        let z4 = table_from_sequence(&seq(4, 3, &[1, 2, 3, 4]));
        assert_eq!(dual(&z4), z4);
        let lu62 = table_from_sequence(&KSequence::identity(6, 2).unwrap());
        assert!(detect(&dual(&lu62)).ks.is_empty());
        let lu65 = table_from_sequence(&KSequence::identity(6, 5).unwrap());
        assert_eq!(detect(&dual(&lu65)).ks, BTreeSet::from([5]));
        assert_eq!(dual(&dual(&lu62)), lu62);
    }

    #[test]
    fn dual_steps() {
        assert_eq!(dual_step(6, 5).kstar, Some(5));
        assert_eq!(dual_step(6, 2).kstar, None);
        let d = dual_step(5, 2);
        assert_eq!(d.kstar, Some(3));
        assert!(d.alterable);
        assert!(!dual_step(6, 5).alterable);
    }
}
