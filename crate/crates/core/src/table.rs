//! Value types: Cayley tables, translatable sequences and orderings.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{check_order, rep, Element};
use crate::error::{Error, Result};

/// Full multiplication table of a groupoid on `{1, .., n}`.
///
/// Row `i` holds the products `i·1, .., i·n`; the left factor selects the row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    n: usize,
    cells: Vec<u32>,
}

impl CayleyTable {
    /// Builds a table from row-major rows, validating closure.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let mut cells = Vec::with_capacity(n * n);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for (c, v) in row.into_iter().enumerate() {
                if v < 1 || v > n {
                    return Err(Error::EntryOutOfRange {
                        value: v,
                        position: r * n + c + 1,
                        n,
                    });
                }
                cells.push(v as u32);
            }
        }
        Ok(CayleyTable { n, cells })
    }

    /// Builds a table by evaluating `f(i, j)` for every pair in `1..=n`.
    pub fn from_fn(n: usize, mut f: impl FnMut(Element, Element) -> Element) -> Result<Self> {
        check_order(n)?;
        let mut cells = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                let v = f(i, j);
                if v < 1 || v > n {
                    return Err(Error::EntryOutOfRange {
                        value: v,
                        position: (i - 1) * n + j,
                        n,
                    });
                }
                cells.push(v as u32);
            }
        }
        Ok(CayleyTable { n, cells })
    }

    /// The table `x·y = value` for all `x, y`.
    pub fn constant(n: usize, value: Element) -> Result<Self> {
        Self::from_fn(n, |_, _| value)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `i·j` without range checks beyond a debug assertion.
    #[inline]
    pub fn get(&self, i: Element, j: Element) -> Element {
        debug_assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n);
        self.cells[(i - 1) * self.n + (j - 1)] as usize
    }

    /// `i·j`, rejecting labels outside `1..=n`.
    pub fn entry(&self, i: Element, j: Element) -> Result<Element> {
        if i < 1 || i > self.n || j < 1 || j > self.n {
            return Err(Error::IndexOutOfRange { i, j, n: self.n });
        }
        Ok(self.get(i, j))
    }

    /// Row `i` as a slice of raw cells.
    pub fn row(&self, i: Element) -> impl Iterator<Item = Element> + '_ {
        self.cells[(i - 1) * self.n..i * self.n]
            .iter()
            .map(|&v| v as usize)
    }

    pub fn column(&self, j: Element) -> impl Iterator<Item = Element> + '_ {
        (1..=self.n).map(move |i| self.get(i, j))
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        (1..=self.n).map(|i| self.row(i).collect()).collect()
    }

    /// The transposed table, i.e. the dual operation `i*j = j·i`.
    pub fn transpose(&self) -> CayleyTable {
        let n = self.n;
        let mut cells = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                cells[j * n + i] = self.cells[i * n + j];
            }
        }
        CayleyTable { n, cells }
    }

    /// Presents the table in the order `ord`: `new[r][c] = self[ord(r)][ord(c)]`.
    ///
    /// Element labels are kept; only the arrangement of rows and columns changes.
    pub fn reorder(&self, ord: &Ordering) -> Result<CayleyTable> {
        if ord.len() != self.n {
            return Err(Error::InvalidOrdering(format!(
                "ordering has {} entries but the table has order {}",
                ord.len(),
                self.n
            )));
        }
        let n = self.n;
        let mut cells = Vec::with_capacity(n * n);
        for r in 1..=n {
            let row = ord.get(r);
            for c in 1..=n {
                cells.push(self.get(row, ord.get(c)) as u32);
            }
        }
        Ok(CayleyTable { n, cells })
    }

    /// Relabels every element through the bijection `map` (1-based, `map[x-1]`).
    pub fn relabel(&self, map: &Ordering) -> Result<CayleyTable> {
        if map.len() != self.n {
            return Err(Error::InvalidOrdering(format!(
                "relabeling has {} entries but the table has order {}",
                map.len(),
                self.n
            )));
        }
        let inv = map.inverse();
        Self::from_fn(self.n, |x, y| map.get(self.get(inv.get(x), inv.get(y))))
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CayleyTable(n={})", self.n)?;
        for i in 1..=self.n {
            let row: Vec<String> = self.row(i).map(|v| v.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}

/// The first row `a_1, .., a_n` of a table together with its translation step `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KSequence {
    n: usize,
    k: usize,
    a: Vec<Element>,
}

impl KSequence {
    pub fn new(n: usize, k: usize, a: Vec<Element>) -> Result<Self> {
        check_order(n)?;
        if k < 1 || k >= n {
            return Err(Error::InvalidStep { n, k });
        }
        if a.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: a.len(),
            });
        }
        if let Some(pos) = a.iter().position(|&v| v < 1 || v > n) {
            return Err(Error::EntryOutOfRange {
                value: a[pos],
                position: pos + 1,
                n,
            });
        }
        Ok(KSequence { n, k, a })
    }

    /// The sequence `1, 2, .., n`.
    pub fn identity(n: usize, k: usize) -> Result<Self> {
        Self::new(n, k, (1..=n).collect())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn step(&self) -> usize {
        self.k
    }

    pub fn values(&self) -> &[Element] {
        &self.a
    }

    /// `a_i` for a position given in any residue form.
    #[inline]
    pub fn at(&self, i: i64) -> Element {
        self.a[rep(i, self.n) - 1]
    }

    /// `true` when the first row has `n` distinct entries, i.e. the generated
    /// table is left cancellative.
    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.n + 1];
        self.a.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub(crate) fn require_permutation(&self) -> Result<()> {
        if self.is_permutation() {
            Ok(())
        } else {
            Err(Error::Precondition(
                "first row is not a permutation (table is not left cancellative)".into(),
            ))
        }
    }
}

impl fmt::Display for KSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.a.iter().map(|v| v.to_string()).collect();
        write!(f, "{} {} : {}", self.n, self.k, body.join(" "))
    }
}

/// A permutation of `{1, .., n}` giving the order in which rows and columns
/// of a table are presented.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ordering {
    perm: Vec<Element>,
}

impl Ordering {
    pub fn new(perm: Vec<Element>) -> Result<Self> {
        let n = perm.len();
        if n == 0 {
            return Err(Error::InvalidOrdering("empty ordering".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &perm {
            if v < 1 || v > n {
                return Err(Error::InvalidOrdering(format!("{v} is outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidOrdering(format!("{v} occurs twice")));
            }
        }
        Ok(Ordering { perm })
    }

    pub fn identity(n: usize) -> Self {
        Ordering {
            perm: (1..=n).collect(),
        }
    }

    /// The ordering `[s + shift]_n` for `s = 1..n`.
    pub fn shifted(n: usize, shift: i64) -> Self {
        Ordering {
            perm: (1..=n).map(|s| rep(s as i64 + shift, n)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// The element presented at position `r`.
    #[inline]
    pub fn get(&self, r: usize) -> Element {
        self.perm[r - 1]
    }

    pub fn as_slice(&self) -> &[Element] {
        &self.perm
    }

    pub fn inverse(&self) -> Ordering {
        let mut inv = vec![0; self.perm.len()];
        for (idx, &v) in self.perm.iter().enumerate() {
            inv[v - 1] = idx + 1;
        }
        Ordering { perm: inv }
    }

    /// `(self ∘ other)(r) = self(other(r))`.
    pub fn compose(&self, other: &Ordering) -> Ordering {
        Ordering {
            perm: other.perm.iter().map(|&r| self.get(r)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(idx, &v)| v == idx + 1)
    }
}

/// A translatable sequence read with respect to an ordering of the carrier:
/// `c_i * c_j = b_[k - ki + j]` where `c` is the ordering and `b` the sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub seq: KSequence,
    pub ordering: Ordering,
}

impl Presentation {
    pub fn new(seq: KSequence, ordering: Ordering) -> Result<Self> {
        if ordering.len() != seq.order() {
            return Err(Error::InvalidOrdering(format!(
                "ordering of length {} for a sequence of order {}",
                ordering.len(),
                seq.order()
            )));
        }
        Ok(Presentation { seq, ordering })
    }

    /// The sequence read in the natural order `1, .., n`.
    pub fn natural(seq: KSequence) -> Self {
        let n = seq.order();
        Presentation {
            seq,
            ordering: Ordering::identity(n),
        }
    }

    /// The multiplication table indexed by element labels.
    pub fn table(&self) -> CayleyTable {
        let n = self.seq.order();
        let k = self.seq.step() as i64;
        let inv = self.ordering.inverse();
        CayleyTable::from_fn(n, |x, y| {
            let (r, c) = (inv.get(x) as i64, inv.get(y) as i64);
            self.seq.at(k - k * r + c)
        })
        .expect("presentation entries are in range")
    }
}

/// A concrete instance refuting (or confirming) a defining identity.
///
/// For equational properties `lhs`/`rhs` are the two sides evaluated at
/// `elements`. For existence and uniqueness properties they are the number of
/// solutions found and the number required.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub tag: String,
    pub elements: Vec<Element>,
    pub lhs: usize,
    pub rhs: usize,
}

impl Witness {
    pub fn new(tag: impl Into<String>, elements: &[Element], lhs: usize, rhs: usize) -> Self {
        Witness {
            tag: tag.into(),
            elements: elements.to_vec(),
            lhs,
            rhs,
        }
    }

    pub fn refutes(&self) -> bool {
        self.lhs != self.rhs
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let els: Vec<String> = self.elements.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "{} at ({}): {} != {}",
            self.tag,
            els.join(","),
            self.lhs,
            self.rhs
        )
    }
}
