//! Definitional property checkers and the modular characterizations they
//! are compared against.
//!
//! [`check`] evaluates the defining identity or quantifier of a property over
//! every tuple of elements, in lexicographic order, and reports the first
//! failing tuple. The characterizations ([`lcond_check`],
//! [`left_unitary_characterize`], [`semigroup_criterion`]) decide the same
//! properties from `(n, k, a)` alone and are expected to agree with it.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::arith::{is_zero_mod, rep, Element};
use crate::error::{Error, Result};
use crate::table::{CayleyTable, KSequence, Witness};

macro_rules! property_names {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// Every property the checker knows about.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum PropertyName {
            $($variant),*
        }

        impl PropertyName {
            pub const ALL: &'static [PropertyName] = &[$(PropertyName::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(PropertyName::$variant => $name),*
                }
            }
        }

        impl FromStr for PropertyName {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(PropertyName::$variant),)*
                    other => Err(Error::UnknownProperty(other.to_string())),
                }
            }
        }
    };
}

property_names! {
    Idempotent => "idempotent",
    Commutative => "commutative",
    Associative => "associative",
    LeftCancellative => "left-cancellative",
    RightCancellative => "right-cancellative",
    LeftSolvable => "left-solvable",
    RightSolvable => "right-solvable",
    Quasigroup => "quasigroup",
    Elastic => "elastic",
    StronglyElastic => "strongly-elastic",
    Bookend => "bookend",
    Paramedial => "paramedial",
    Medial => "medial",
    LeftDistributive => "left-distributive",
    RightDistributive => "right-distributive",
    Alterable => "alterable",
    LeftModular => "left-modular",
    RightModular => "right-modular",
    LeftUnitary => "left-unitary",
    Unitary => "unitary",
    Anticommutative => "anticommutative",
    ConditionallyCommutative => "conditionally-commutative",
    LeftCommutative => "left-commutative",
    LeftRegular => "left-regular",
    RightRegular => "right-regular",
    Regular => "regular",
    IntraRegular => "intra-regular",
    Orthodox => "orthodox",
    CliffordLeft => "clifford-left",
    CliffordRight => "clifford-right",
}

impl PropertyName {
    /// Properties that are only defined here for semigroups.
    pub fn requires_associativity(self) -> bool {
        use PropertyName::*;
        matches!(
            self,
            ConditionallyCommutative
                | LeftCommutative
                | LeftRegular
                | RightRegular
                | Regular
                | IntraRegular
                | Orthodox
                | CliffordLeft
                | CliffordRight
        )
    }

    /// The properties [`lcond_check`] can decide.
    pub const LCOND: &'static [PropertyName] = &[
        PropertyName::Idempotent,
        PropertyName::Elastic,
        PropertyName::StronglyElastic,
        PropertyName::Bookend,
        PropertyName::LeftDistributive,
        PropertyName::RightDistributive,
        PropertyName::Medial,
        PropertyName::Alterable,
        PropertyName::Commutative,
        PropertyName::Associative,
    ];
}

impl fmt::Display for PropertyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for PropertyName {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Outcome of a single definitional check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn yes() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    fn no(w: Witness) -> Self {
        Verdict {
            holds: false,
            witness: Some(w),
        }
    }
}

/// Verdicts for every applicable property of one table.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub verdicts: BTreeMap<PropertyName, Verdict>,
}

impl PropertyReport {
    pub fn holds(&self, p: PropertyName) -> Option<bool> {
        self.verdicts.get(&p).map(|v| v.holds)
    }
}

/// Checks every property; semigroup-only properties are skipped on
/// non-associative tables.
pub fn report(table: &CayleyTable) -> PropertyReport {
    let associative = check(table, PropertyName::Associative)
        .map(|v| v.holds)
        .unwrap_or(false);
    let verdicts = PropertyName::ALL
        .iter()
        .filter(|p| associative || !p.requires_associativity())
        .map(|&p| (p, check(table, p).expect("applicable property")))
        .collect();
    PropertyReport { verdicts }
}

/// Evaluates property `p` on `table` by exhaustive search.
pub fn check(table: &CayleyTable, p: PropertyName) -> Result<Verdict> {
    use PropertyName::*;
    if p.requires_associativity() {
        if let Some(w) = associativity_witness(table) {
            return Err(Error::Precondition(format!(
                "`{p}` is defined for semigroups but the table is not associative ({w})"
            )));
        }
    }
    let t = Ops::new(table);
    let w = match p {
        Idempotent => t.idempotent(),
        Commutative => t.commutative(),
        Associative => associativity_witness(table),
        LeftCancellative => t.left_cancellative(),
        RightCancellative => t.right_cancellative(),
        LeftSolvable => t.left_solvable(),
        RightSolvable => t.right_solvable(),
        Quasigroup => t.right_solvable().or_else(|| t.left_solvable()),
        Elastic => t.elastic(),
        StronglyElastic => t.strongly_elastic(),
        Bookend => t.bookend(),
        Paramedial => t.paramedial(),
        Medial => t.medial(),
        LeftDistributive => t.left_distributive(),
        RightDistributive => t.right_distributive(),
        Alterable => t.alterable(),
        LeftModular => t.left_modular(),
        RightModular => t.right_modular(),
        LeftUnitary => t.left_unitary(),
        Unitary => t.unitary(),
        Anticommutative => t.anticommutative(),
        ConditionallyCommutative => t.conditionally_commutative(),
        LeftCommutative => t.left_commutative(),
        LeftRegular => t.left_regular(),
        RightRegular => t.right_regular(),
        Regular => t.regular(),
        IntraRegular => t.intra_regular(),
        Orthodox => t.orthodox(),
        CliffordLeft => t.clifford_left(),
        CliffordRight => t.clifford_right(),
    };
    Ok(match w {
        None => Verdict::yes(),
        Some(w) => Verdict::no(w),
    })
}

/// Shorthand for `check(..)?.holds`.
pub fn holds(table: &CayleyTable, p: PropertyName) -> Result<bool> {
    check(table, p).map(|v| v.holds)
}

/// First triple `(x, y, z)` with `(xy)z ≠ x(yz)`, if any.
pub fn associativity_witness(table: &CayleyTable) -> Option<Witness> {
    let n = table.order();
    for x in 1..=n {
        for y in 1..=n {
            let xy = table.get(x, y);
            for z in 1..=n {
                let lhs = table.get(xy, z);
                let rhs = table.get(x, table.get(y, z));
                if lhs != rhs {
                    return Some(Witness::new("associative", &[x, y, z], lhs, rhs));
                }
            }
        }
    }
    None
}

/// Elements `e` with `e·x = x` for every `x`.
pub fn left_neutrals(table: &CayleyTable) -> Vec<Element> {
    let n = table.order();
    (1..=n)
        .filter(|&e| (1..=n).all(|x| table.get(e, x) == x))
        .collect()
}

/// Elements `e` with `x·e = x` for every `x`.
pub fn right_neutrals(table: &CayleyTable) -> Vec<Element> {
    let n = table.order();
    (1..=n)
        .filter(|&e| (1..=n).all(|x| table.get(x, e) == x))
        .collect()
}

/// Idempotent elements, in increasing order.
pub fn idempotents(table: &CayleyTable) -> Vec<Element> {
    (1..=table.order())
        .filter(|&i| table.get(i, i) == i)
        .collect()
}

struct Ops<'a> {
    t: &'a CayleyTable,
    n: usize,
}

macro_rules! forall {
    ($n:expr; $($v:ident),+ => $body:block) => {{
        let mut found = None;
        forall!(@loop $n; found; $($v),+ => $body);
        found
    }};
    (@loop $n:expr; $found:ident; $v:ident => $body:block) => {
        for $v in 1..=$n {
            if let Some(w) = $body {
                $found = Some(w);
                break;
            }
        }
    };
    (@loop $n:expr; $found:ident; $v:ident, $($rest:ident),+ => $body:block) => {
        for $v in 1..=$n {
            forall!(@loop $n; $found; $($rest),+ => $body);
            if $found.is_some() {
                break;
            }
        }
    };
}

fn eq_or(tag: &str, els: &[Element], lhs: Element, rhs: Element) -> Option<Witness> {
    (lhs != rhs).then(|| Witness::new(tag, els, lhs, rhs))
}

impl<'a> Ops<'a> {
    fn new(t: &'a CayleyTable) -> Self {
        Ops { t, n: t.order() }
    }

    #[inline]
    fn m(&self, x: Element, y: Element) -> Element {
        self.t.get(x, y)
    }

    fn idempotent(&self) -> Option<Witness> {
        forall!(self.n; i => { eq_or("idempotent", &[i], self.m(i, i), i) })
    }

    fn commutative(&self) -> Option<Witness> {
        forall!(self.n; i, j => { eq_or("commutative", &[i, j], self.m(i, j), self.m(j, i)) })
    }

    fn left_cancellative(&self) -> Option<Witness> {
        forall!(self.n; x, y, z => {
            (y != z && self.m(x, y) == self.m(x, z))
                .then(|| Witness::new("left-cancellative", &[x, y, z], y, z))
        })
    }

    fn right_cancellative(&self) -> Option<Witness> {
        forall!(self.n; x, y, z => {
            (y != z && self.m(y, x) == self.m(z, x))
                .then(|| Witness::new("right-cancellative", &[x, y, z], y, z))
        })
    }

    /// `x·a = b` has exactly one solution for every `a, b`.
    fn left_solvable(&self) -> Option<Witness> {
        forall!(self.n; a, b => {
            let count = (1..=self.n).filter(|&x| self.m(x, a) == b).count();
            (count != 1).then(|| Witness::new("left-solvable", &[a, b], count, 1))
        })
    }

    /// `a·x = b` has exactly one solution for every `a, b`.
    fn right_solvable(&self) -> Option<Witness> {
        forall!(self.n; a, b => {
            let count = (1..=self.n).filter(|&x| self.m(a, x) == b).count();
            (count != 1).then(|| Witness::new("right-solvable", &[a, b], count, 1))
        })
    }

    fn elastic(&self) -> Option<Witness> {
        forall!(self.n; i, j => {
            eq_or("elastic", &[i, j], self.m(i, self.m(j, i)), self.m(self.m(i, j), i))
        })
    }

    fn strongly_elastic(&self) -> Option<Witness> {
        forall!(self.n; i, j => {
            let a = self.m(i, self.m(j, i));
            let b = self.m(self.m(i, j), i);
            let c = self.m(self.m(j, i), j);
            eq_or("strongly-elastic", &[i, j], a, b)
                .or_else(|| eq_or("strongly-elastic", &[i, j], b, c))
        })
    }

    fn bookend(&self) -> Option<Witness> {
        forall!(self.n; i, j => {
            eq_or("bookend", &[i, j], self.m(self.m(j, i), self.m(i, j)), i)
        })
    }

    fn paramedial(&self) -> Option<Witness> {
        forall!(self.n; i, j, w, z => {
            let lhs = self.m(self.m(i, j), self.m(w, z));
            let rhs = self.m(self.m(z, j), self.m(w, i));
            eq_or("paramedial", &[i, j, w, z], lhs, rhs)
        })
    }

    fn medial(&self) -> Option<Witness> {
        forall!(self.n; i, j, w, z => {
            let lhs = self.m(self.m(i, j), self.m(w, z));
            let rhs = self.m(self.m(i, w), self.m(j, z));
            eq_or("medial", &[i, j, w, z], lhs, rhs)
        })
    }

    fn left_distributive(&self) -> Option<Witness> {
        forall!(self.n; i, j, s => {
            let lhs = self.m(i, self.m(j, s));
            let rhs = self.m(self.m(i, j), self.m(i, s));
            eq_or("left-distributive", &[i, j, s], lhs, rhs)
        })
    }

    fn right_distributive(&self) -> Option<Witness> {
        forall!(self.n; i, j, s => {
            let lhs = self.m(self.m(i, j), s);
            let rhs = self.m(self.m(i, s), self.m(j, s));
            eq_or("right-distributive", &[i, j, s], lhs, rhs)
        })
    }

    /// `i·j = w·z` implies `j·w = z·i`.
    fn alterable(&self) -> Option<Witness> {
        forall!(self.n; i, j, w, z => {
            if self.m(i, j) == self.m(w, z) {
                eq_or("alterable", &[i, j, w, z], self.m(j, w), self.m(z, i))
            } else {
                None
            }
        })
    }

    fn left_modular(&self) -> Option<Witness> {
        forall!(self.n; i, j, z => {
            eq_or("left-modular", &[i, j, z], self.m(self.m(i, j), z), self.m(self.m(z, j), i))
        })
    }

    fn right_modular(&self) -> Option<Witness> {
        forall!(self.n; i, j, z => {
            eq_or("right-modular", &[i, j, z], self.m(i, self.m(j, z)), self.m(z, self.m(j, i)))
        })
    }

    fn left_unitary(&self) -> Option<Witness> {
        let found = left_neutrals(self.t).len();
        (found == 0).then(|| Witness::new("left-unitary", &[], 0, 1))
    }

    fn unitary(&self) -> Option<Witness> {
        let left = left_neutrals(self.t);
        let right = right_neutrals(self.t);
        let found = left.iter().filter(|e| right.contains(e)).count();
        (found == 0).then(|| Witness::new("unitary", &[], 0, 1))
    }

    /// `i·j = j·i` implies `i = j`.
    fn anticommutative(&self) -> Option<Witness> {
        forall!(self.n; i, j => {
            (i != j && self.m(i, j) == self.m(j, i))
                .then(|| Witness::new("anticommutative", &[i, j], i, j))
        })
    }

    /// `i·j = j·i` implies `i·x·j = j·x·i`.
    fn conditionally_commutative(&self) -> Option<Witness> {
        forall!(self.n; i, j, x => {
            if self.m(i, j) == self.m(j, i) {
                let lhs = self.m(self.m(i, x), j);
                let rhs = self.m(self.m(j, x), i);
                eq_or("conditionally-commutative", &[i, j, x], lhs, rhs)
            } else {
                None
            }
        })
    }

    fn left_commutative(&self) -> Option<Witness> {
        forall!(self.n; i, j, x => {
            eq_or("left-commutative", &[i, j, x], self.m(self.m(i, j), x), self.m(self.m(j, i), x))
        })
    }

    /// Every `j` satisfies `x·(j·j) = j` for some `x`.
    fn left_regular(&self) -> Option<Witness> {
        forall!(self.n; j => {
            let jj = self.m(j, j);
            let count = (1..=self.n).filter(|&x| self.m(x, jj) == j).count();
            (count == 0).then(|| Witness::new("left-regular", &[j], 0, 1))
        })
    }

    /// Every `j` satisfies `(j·j)·y = j` for some `y`.
    fn right_regular(&self) -> Option<Witness> {
        forall!(self.n; j => {
            let jj = self.m(j, j);
            let count = (1..=self.n).filter(|&y| self.m(jj, y) == j).count();
            (count == 0).then(|| Witness::new("right-regular", &[j], 0, 1))
        })
    }

    /// Every `i` satisfies `i = i·x·i` for some `x`.
    fn regular(&self) -> Option<Witness> {
        forall!(self.n; i => {
            let found = (1..=self.n).any(|x| self.m(self.m(i, x), i) == i);
            (!found).then(|| Witness::new("regular", &[i], 0, 1))
        })
    }

    /// Every `i` satisfies `i = x·i·i·y` for some `x, y`.
    fn intra_regular(&self) -> Option<Witness> {
        forall!(self.n; i => {
            let ii = self.m(i, i);
            let found = (1..=self.n)
                .any(|x| (1..=self.n).any(|y| self.m(self.m(x, ii), y) == i));
            (!found).then(|| Witness::new("intra-regular", &[i], 0, 1))
        })
    }

    /// Regular, and the idempotents are closed under the product.
    fn orthodox(&self) -> Option<Witness> {
        if let Some(w) = self.regular() {
            return Some(Witness::new("orthodox", &w.elements, w.lhs, w.rhs));
        }
        let es = idempotents(self.t);
        for &e in &es {
            for &f in &es {
                let ef = self.m(e, f);
                if self.m(ef, ef) != ef {
                    return Some(Witness::new("orthodox", &[e, f], self.m(ef, ef), ef));
                }
            }
        }
        None
    }

    /// `Q·i ⊆ i·Q`: for every `j, i` some `s` has `i·s = j·i`.
    fn clifford_right(&self) -> Option<Witness> {
        forall!(self.n; i, j => {
            let target = self.m(j, i);
            let found = (1..=self.n).any(|s| self.m(i, s) == target);
            (!found).then(|| Witness::new("clifford-right", &[i, j], 0, 1))
        })
    }

    /// `i·Q ⊆ Q·i`: for every `i, j` some `s` has `s·i = i·j`.
    fn clifford_left(&self) -> Option<Witness> {
        forall!(self.n; i, j => {
            let target = self.m(i, j);
            let found = (1..=self.n).any(|s| self.m(s, i) == target);
            (!found).then(|| Witness::new("clifford-left", &[i, j], 0, 1))
        })
    }
}

/// Decides a property of the table generated by a permutation first row
/// through modular conditions on `(n, k, a)` and table lookups.
pub fn lcond_check(seq: &KSequence, p: PropertyName) -> Result<bool> {
    seq.require_permutation()?;
    let n = seq.order();
    let k = seq.step() as i64;
    let m = |x: usize, y: usize| seq.at(k - k * x as i64 + y as i64) as i64;
    let eq = |x: i64, y: i64| is_zero_mod(x - y, n);
    let all2 = |f: &dyn Fn(i64, i64) -> bool| {
        (1..=n).all(|i| (1..=n).all(|j| f(i as i64, j as i64)))
    };
    let all3 = |f: &dyn Fn(i64, i64, i64) -> bool| {
        (1..=n).all(|i| (1..=n).all(|j| (1..=n).all(|s| f(i as i64, j as i64, s as i64))))
    };
    let all4 = |f: &dyn Fn(i64, i64, i64, i64) -> bool| {
        (1..=n).all(|i| {
            (1..=n).all(|j| {
                (1..=n).all(|w| (1..=n).all(|z| f(i as i64, j as i64, w as i64, z as i64)))
            })
        })
    };
    let mu = |x: i64, y: i64| m(x as usize, y as usize);
    use PropertyName::*;
    Ok(match p {
        Idempotent => (1..=n as i64).all(|i| seq.at(k - k * i + i) as i64 == i),
        Elastic => all2(&|i, j| eq(i + k * i, mu(j, i) + k * mu(i, j))),
        StronglyElastic => all2(&|i, j| {
            eq(i + k * i, mu(j, i) + k * mu(i, j)) && eq(i + k * j, mu(i, j) + k * mu(i, j))
        }),
        Bookend => all2(&|i, j| seq.at(k - k * mu(j, i) + mu(i, j)) as i64 == i),
        LeftDistributive => all3(&|i, j, s| eq(mu(i, j) + k * mu(s, i), mu(s, j) + k * s)),
        RightDistributive => all3(&|i, j, s| eq(s + k * mu(i, s), mu(j, s) + k * mu(i, j))),
        Medial => all4(&|i, j, w, z| eq(mu(w, z) + k * mu(i, w), mu(j, z) + k * mu(i, j))),
        Alterable => {
            all4(&|i, j, w, z| !eq(j + k * w, z + k * i) || eq(w + k * z, i + k * j))
        }
        Commutative => seq.step() == n - 1,
        Associative => all3(&|i, j, s| eq(i + k * j, mu(s, i) + k * mu(j, s))),
        other => {
            return Err(Error::Precondition(format!(
                "`{other}` has no modular characterization for left cancellative tables"
            )))
        }
    })
}

/// Predicted verdicts for the left unitary `k`-translatable groupoid of order
/// `n` (first row `1, .., n`, product `i·j = [k - ki + j]_n`).
pub fn left_unitary_characterize(n: usize, k: usize) -> BTreeMap<PropertyName, bool> {
    let sq = rep((k * k) as i64, n);
    let twice = rep(2 * k as i64, n);
    let zero = |x: usize| is_zero_mod(x as i64, n);
    use PropertyName::*;
    BTreeMap::from([
        (Bookend, sq == n - 1 && twice == n - 1),
        (Elastic, zero(k * k + k)),
        (LeftDistributive, zero(k * k)),
        (LeftModular, sq == 1 % n.max(2)),
        (RightModular, k == n - 1),
        (Paramedial, sq == 1 % n.max(2)),
        (Associative, zero(k + k * k)),
        (Alterable, sq == n - 1),
        (Commutative, k == n - 1),
        (Medial, true),
        (RightDistributive, false),
        (StronglyElastic, false),
    ])
}

/// Associativity of the table generated by a permutation first row:
/// `[k² + k]_n = 0` and `a_i = [i - k - k·a_k]_n` for every `i`.
pub fn semigroup_criterion(seq: &KSequence) -> Result<bool> {
    seq.require_permutation()?;
    let n = seq.order();
    let k = seq.step() as i64;
    if !is_zero_mod(k * k + k, n) {
        return Ok(false);
    }
    let ak = seq.at(k) as i64;
    Ok((1..=n as i64).all(|i| seq.at(i) == rep(i - k - k * ak, n)))
}

/// The left neutral element `a_[-2a_k - 1]` of a left cancellative
/// translatable semigroup.
pub fn left_neutral(seq: &KSequence) -> Result<Element> {
    if !semigroup_criterion(seq)? {
        return Err(Error::Precondition(
            "sequence does not generate a semigroup".into(),
        ));
    }
    let ak = seq.at(seq.step() as i64) as i64;
    Ok(seq.at(-2 * ak - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::translatable::table_from_sequence;

    fn table(n: usize, k: usize, a: &[usize]) -> CayleyTable {
        table_from_sequence(&KSequence::new(n, k, a.to_vec()).unwrap())
    }

    #[test]
    fn names_round_trip() {
        assert_eq!(PropertyName::ALL.len(), 30);
        for &p in PropertyName::ALL {
            assert_eq!(p.as_str().parse::<PropertyName>().unwrap(), p);
        }
        assert!(matches!(
            "flexible".parse::<PropertyName>(),
            Err(Error::UnknownProperty(_))
        ));
    }

    #[test]
    fn example_groupoids() {
        let z4 = table(4, 3, &[1, 2, 3, 4]);
        assert!(holds(&z4, PropertyName::Commutative).unwrap());
        let idem = table(4, 2, &[1, 4, 3, 2]);
        assert!(holds(&idem, PropertyName::Idempotent).unwrap());
        let v = check(&idem, PropertyName::Associative).unwrap();
        assert!(!v.holds);
        assert!(v.witness.unwrap().refutes());
        let t8 = table(8, 4, &[1, 6, 3, 8, 5, 2, 7, 4]);
        assert!(holds(&t8, PropertyName::Idempotent).unwrap());
        assert!(holds(&t8, PropertyName::LeftCancellative).unwrap());
        assert!(!holds(&t8, PropertyName::RightCancellative).unwrap());
    }

    #[test]
    fn witnesses_are_lexicographically_least() {
        let idem = table(4, 2, &[1, 4, 3, 2]);
        let w = check(&idem, PropertyName::Associative).unwrap().witness.unwrap();
        let oracle = (1..=4)
            .flat_map(|x| (1..=4).flat_map(move |y| (1..=4).map(move |z| [x, y, z])))
            .find(|&[x, y, z]| idem.get(idem.get(x, y), z) != idem.get(x, idem.get(y, z)))
            .unwrap();
        assert_eq!(w.elements, oracle.to_vec());
        let z4 = table(4, 3, &[1, 2, 3, 4]);
        let w = check(&z4, PropertyName::Idempotent).unwrap().witness.unwrap();
        assert_eq!((w.elements.clone(), w.lhs, w.rhs), (vec![2], 3, 2));
    }

    #[test]
    fn semigroup_properties_need_associativity() {
        let idem = table(4, 2, &[1, 4, 3, 2]);
        for &p in PropertyName::ALL.iter().filter(|p| p.requires_associativity()) {
            match check(&idem, p) {
                Err(Error::Precondition(msg)) => assert!(msg.contains("associative")),
                other => panic!("{p}: {other:?}"),
            }
        }
        let r = report(&idem);
        assert!(r.holds(PropertyName::Regular).is_none());
        assert_eq!(r.holds(PropertyName::Idempotent), Some(true));
    }

    #[test]
    fn report_witnesses_refute() {
        let t = table(6, 2, &[1, 2, 3, 4, 5, 6]);
        let r = report(&t);
        assert_eq!(r.verdicts.len(), 30);
        for (p, v) in &r.verdicts {
            assert_eq!(v.holds, v.witness.is_none(), "{p}");
            if let Some(w) = &v.witness {
                assert!(w.refutes(), "{p}: {w}");
            }
        }
    }

    #[test]
    fn lcond_examples() {
        let s = KSequence::new(4, 2, vec![1, 4, 3, 2]).unwrap();
        assert!(lcond_check(&s, PropertyName::Idempotent).unwrap());
        let id65 = KSequence::identity(6, 5).unwrap();
        assert!(lcond_check(&id65, PropertyName::Commutative).unwrap());
        let id62 = KSequence::identity(6, 2).unwrap();
        assert!(!lcond_check(&id62, PropertyName::Commutative).unwrap());
        let c = KSequence::new(6, 3, vec![1, 3, 3, 1, 3, 3]).unwrap();
        assert!(matches!(
            lcond_check(&c, PropertyName::Idempotent),
            Err(Error::Precondition(_))
        ));
        assert!(lcond_check(&id62, PropertyName::Paramedial).is_err());
    }

    #[test]
    fn left_unitary_examples() {
        use PropertyName::*;
        let c = left_unitary_characterize(6, 2);
        assert!(c[&Elastic] && c[&Associative]);
        assert!(!c[&LeftDistributive] && !c[&Paramedial]);
        let c = left_unitary_characterize(6, 5);
        assert!(c[&LeftModular] && c[&RightModular] && c[&Paramedial] && c[&Associative]);
        let c = left_unitary_characterize(5, 2);
        assert!(c[&Bookend] && c[&Alterable]);
    }

    #[test]
    fn semigroup_criterion_examples() {
        let id = KSequence::identity(6, 2).unwrap();
        assert!(semigroup_criterion(&id).unwrap());
        let shifted = KSequence::new(6, 2, vec![3, 4, 5, 6, 1, 2]).unwrap();
        assert!(semigroup_criterion(&shifted).unwrap());
        assert!(holds(&table_from_sequence(&shifted), PropertyName::Associative).unwrap());
        let idem = KSequence::new(4, 2, vec![1, 4, 3, 2]).unwrap();
        assert!(!semigroup_criterion(&idem).unwrap());
        assert!(semigroup_criterion(&KSequence::new(6, 3, vec![1, 3, 3, 1, 3, 3]).unwrap()).is_err());
    }

    #[test]
    fn left_neutral_examples() {
        assert_eq!(left_neutral(&KSequence::identity(6, 2).unwrap()).unwrap(), 1);
        let shifted = KSequence::new(6, 2, vec![3, 4, 5, 6, 1, 2]).unwrap();
        assert_eq!(left_neutral(&shifted).unwrap(), 5);
        let t = table_from_sequence(&shifted);
        assert!((1..=6).all(|j| t.get(5, j) == j));
        assert_eq!(left_neutral(&KSequence::identity(4, 3).unwrap()).unwrap(), 1);
        let idem = KSequence::new(4, 2, vec![1, 4, 3, 2]).unwrap();
        assert!(matches!(left_neutral(&idem), Err(Error::Precondition(_))));
    }
}
