//! Idempotents, cyclic decomposition, one-sided ideals and explicit
//! isomorphisms.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arith::{is_zero_mod, least_annihilator, rep, Element};
use crate::error::{Error, Result};
use crate::properties::{associativity_witness, left_neutrals, semigroup_criterion};
use crate::table::{CayleyTable, KSequence, Ordering, Presentation};
use crate::translatable::table_from_sequence;

/// Elements with `i·i = i`.
pub fn idempotent_set(table: &CayleyTable) -> BTreeSet<Element> {
    (1..=table.order())
        .filter(|&i| table.get(i, i) == i)
        .collect()
}

/// `{ i : [k(i + a_k)]_n = 0 }`, the idempotents of a left cancellative
/// translatable semigroup.
pub fn idempotents_by_formula(seq: &KSequence) -> Result<BTreeSet<Element>> {
    if !semigroup_criterion(seq)? {
        return Err(Error::Precondition(
            "sequence does not generate a semigroup".into(),
        ));
    }
    let n = seq.order();
    let k = seq.step() as i64;
    let ak = seq.at(k) as i64;
    Ok((1..=n)
        .filter(|&i| is_zero_mod(k * (i as i64 + ak), n))
        .collect())
}

/// `{ [i + k(i-1)]_n }`, the idempotents when `1` is a left neutral element.
pub fn idempotents_with_neutral_one(n: usize, k: usize) -> BTreeSet<Element> {
    (1..=n as i64)
        .map(|i| rep(i + k as i64 * (i - 1), n))
        .collect()
}

/// A left cancellative translatable semigroup split into cyclic groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub idempotents: BTreeSet<Element>,
    /// Least positive `m` with `[mk]_n = 0`; the order of every component.
    pub m: usize,
    /// Least positive `t` with `[tm]_n = 0`; the number of components.
    pub t: usize,
    /// `Q·e` for each idempotent `e`, sorted, ordered by least element.
    pub components: Vec<Vec<Element>>,
    /// `c·e` with `c = [e0 + 1]_n` for the least idempotent `e0`; a generator
    /// of `Q·e`. Equals `2·e` when 1 is left neutral.
    pub generators: Vec<Element>,
}

/// Splits the semigroup generated by `seq` into the groups `Q·e`, checking
/// every structural claim along the way.
pub fn decompose(table: &CayleyTable, seq: &KSequence) -> Result<Decomposition> {
    if !semigroup_criterion(seq)? {
        return Err(Error::Precondition(
            "sequence does not generate a semigroup".into(),
        ));
    }
    if *table != table_from_sequence(seq) {
        return Err(Error::Precondition(
            "table is not the one generated by the sequence".into(),
        ));
    }
    let n = seq.order();
    let m = least_annihilator(seq.step(), n);
    let t = least_annihilator(m, n);
    let idempotents = idempotent_set(table);
    let invariant = |msg: String| Err(Error::Invariant(msg));

    let neutrals: BTreeSet<Element> = left_neutrals(table).into_iter().collect();
    if neutrals != idempotents {
        return invariant(format!(
            "idempotents {idempotents:?} differ from left neutral elements {neutrals:?}"
        ));
    }
    for &e in &idempotents {
        for &f in &idempotents {
            if table.get(e, f) != f {
                return invariant(format!("idempotents are not right-zero: {e}·{f} != {f}"));
            }
        }
    }
    if idempotents.len() != t {
        return invariant(format!(
            "t={t} but there are {} idempotents",
            idempotents.len()
        ));
    }

    // the element playing the role of 2 once a left neutral is moved to 1
    let after = rep(*idempotents.iter().next().expect("t >= 1") as i64 + 1, n);
    let mut parts: Vec<(Vec<Element>, Element)> = Vec::new();
    let mut seen = vec![false; n + 1];
    for &e in &idempotents {
        let comp: BTreeSet<Element> = (1..=n).map(|x| table.get(x, e)).collect();
        if comp.len() != m {
            return invariant(format!("Q·{e} has {} elements, expected {m}", comp.len()));
        }
        for &x in &comp {
            if std::mem::replace(&mut seen[x], true) {
                return invariant(format!("element {x} lies in two components"));
            }
        }
        let g = table.get(after, e);
        let mut powers = BTreeSet::new();
        let mut p = g;
        loop {
            if !powers.insert(p) {
                break;
            }
            p = table.get(p, g);
        }
        if powers != comp || !comp.contains(&e) || comp.iter().any(|&x| table.get(e, x) != x) {
            return invariant(format!("Q·{e} is not a cyclic group generated by {g}"));
        }
        parts.push((comp.into_iter().collect(), g));
    }
    if seen[1..].iter().any(|s| !s) {
        return invariant("components do not cover the semigroup".into());
    }
    parts.sort();
    let (components, generators) = parts.into_iter().unzip();
    Ok(Decomposition {
        idempotents,
        m,
        t,
        components,
        generators,
    })
}

/// A bijection `x ↦ map[x-1]` between two tables of the same order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Isomorphism {
    pub map: Vec<Element>,
    /// Set only after `φ(x·y) = φ(x)*φ(y)` was checked for every pair.
    pub verified: bool,
}

impl Isomorphism {
    pub fn apply(&self, x: Element) -> Element {
        self.map[x - 1]
    }
}

/// Checks `φ(x·y) = φ(x)*φ(y)` on every pair; `φ` must be a bijection.
pub fn is_isomorphism(from: &CayleyTable, to: &CayleyTable, map: &[Element]) -> bool {
    let n = from.order();
    if to.order() != n || map.len() != n || Ordering::new(map.to_vec()).is_err() {
        return false;
    }
    (1..=n).all(|x| {
        (1..=n).all(|y| map[from.get(x, y) - 1] == to.get(map[x - 1], map[y - 1]))
    })
}

/// The map sending the `s`-th element of `from_order` to the `s`-th element
/// of `to_order`, verified exhaustively.
pub fn iso_by_ordering(
    from: &CayleyTable,
    from_order: &Ordering,
    to: &CayleyTable,
    to_order: &Ordering,
) -> Isomorphism {
    let n = from.order();
    let mut map = vec![0; n];
    for s in 1..=n.min(from_order.len()).min(to_order.len()) {
        map[from_order.get(s) - 1] = to_order.get(s);
    }
    let verified = is_isomorphism(from, to, &map);
    Isomorphism { map, verified }
}

fn same_shape(q: &KSequence, s: &KSequence) -> Result<()> {
    if (q.order(), q.step()) != (s.order(), s.step()) {
        return Err(Error::Precondition(format!(
            "presentations differ in (n, k): ({}, {}) vs ({}, {})",
            q.order(),
            q.step(),
            s.order(),
            s.step()
        )));
    }
    Ok(())
}

fn require_verified(iso: Isomorphism) -> Result<Isomorphism> {
    if iso.verified {
        Ok(iso)
    } else {
        Err(Error::Invariant(format!(
            "constructed map {:?} is not an isomorphism",
            iso.map
        )))
    }
}

/// The map `c_i ↦ d_i` between two idempotent presentations with the same
/// `(n, k)`.
pub fn iso_idempotent(q: &Presentation, s: &Presentation) -> Result<Isomorphism> {
    same_shape(&q.seq, &s.seq)?;
    let (tq, ts) = (q.table(), s.table());
    for (name, t) in [("first", &tq), ("second", &ts)] {
        if idempotent_set(t).len() != t.order() {
            return Err(Error::Precondition(format!(
                "{name} groupoid is not idempotent"
            )));
        }
    }
    require_verified(iso_by_ordering(&tq, &q.ordering, &ts, &s.ordering))
}

/// The ordering `b_s = [-a_k - k + s - 2]_n` in which a left cancellative
/// translatable semigroup becomes left unitary with first row `b_1, .., b_n`.
pub fn reorder_to_left_unitary(seq: &KSequence) -> Result<Ordering> {
    if !semigroup_criterion(seq)? {
        return Err(Error::Precondition(
            "sequence does not generate a semigroup".into(),
        ));
    }
    let n = seq.order();
    let k = seq.step() as i64;
    let ak = seq.at(k) as i64;
    Ordering::new((1..=n as i64).map(|s| rep(-ak - k + s - 2, n)).collect())
}

/// An ordering (in labels) in which the presentation reads as the left
/// unitary table `c_i * c_j = c_[k - ki + j]`.
fn left_unitary_ordering(p: &Presentation) -> Result<Ordering> {
    p.seq.require_permutation()?;
    let n = p.seq.order();
    // rotating the ordering keeps k; starting at a left neutral makes the
    // first row equal to the ordering itself
    let e = *left_neutrals(&p.table()).first().ok_or_else(|| {
        Error::Precondition("groupoid has no left neutral element".into())
    })?;
    let start = p.ordering.inverse().get(e) as i64;
    Ordering::new((1..=n as i64).map(|s| p.ordering.get(rep(start - 1 + s, n))).collect())
}

/// Isomorphism between two left cancellative `k`-translatable groupoids of
/// the same order that are semigroups or have a left neutral element.
pub fn iso_left_unitary(q: &Presentation, g: &Presentation) -> Result<Isomorphism> {
    same_shape(&q.seq, &g.seq)?;
    let oq = left_unitary_ordering(q)?;
    let og = left_unitary_ordering(g)?;
    require_verified(iso_by_ordering(&q.table(), &oq, &g.table(), &og))
}

/// The table of `Z_n` written as `i·j = [i + j - 1]_n`.
pub fn cyclic_table(n: usize) -> Result<CayleyTable> {
    CayleyTable::from_fn(n, |i, j| rep((i + j) as i64 - 1, n))
}

/// An isomorphism onto [`cyclic_table`] sending `g^m` to `m + 1` for the least
/// generator `g`, if the table is a cyclic group.
pub fn iso_to_cyclic(table: &CayleyTable) -> Option<Isomorphism> {
    let n = table.order();
    if associativity_witness(table).is_some() {
        return None;
    }
    let e = (1..=n).find(|&e| (1..=n).all(|x| table.get(e, x) == x && table.get(x, e) == x))?;
    let g = (1..=n).find(|&g| {
        let mut p = g;
        let mut order = 1;
        while p != e && order <= n {
            p = table.get(p, g);
            order += 1;
        }
        p == e && order == n
    })?;
    let mut map = vec![0; n];
    let mut p = e;
    for m in 0..n {
        map[p - 1] = m + 1;
        p = table.get(p, g);
    }
    let target = cyclic_table(n).ok()?;
    let verified = is_isomorphism(table, &target, &map);
    verified.then_some(Isomorphism { map, verified })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl std::str::FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(Error::Precondition(format!(
                "unknown side `{other}` (expected left or right)"
            ))),
        }
    }
}

/// A non-empty one-sided ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ideal {
    pub side: Side,
    pub elements: Vec<Element>,
    /// `x·x ∈ I` implies `x ∈ I`.
    pub semiprime: bool,
}

/// Default bound on the order accepted by [`ideals`].
pub const IDEAL_MAX_ORDER: usize = 14;

/// All one-sided ideals of a semigroup, ordered by size then elements.
pub fn ideals(table: &CayleyTable, side: Side) -> Result<Vec<Ideal>> {
    ideals_with_limit(table, side, IDEAL_MAX_ORDER)
}

/// [`ideals`] with an explicit order bound (at most 64).
pub fn ideals_with_limit(table: &CayleyTable, side: Side, limit: usize) -> Result<Vec<Ideal>> {
    let n = table.order();
    let limit = limit.min(64);
    if n > limit {
        return Err(Error::ResourceLimit {
            what: "order for ideal enumeration",
            value: n,
            limit,
        });
    }
    if let Some(w) = associativity_witness(table) {
        return Err(Error::Precondition(format!(
            "ideals are enumerated for semigroups only ({w})"
        )));
    }
    let product = |x: Element, y: Element| match side {
        Side::Left => table.get(y, x),
        Side::Right => table.get(x, y),
    };
    // principal ideal of x: {x} ∪ Qx (left) or {x} ∪ xQ (right)
    let principal: BTreeSet<u64> = (1..=n)
        .map(|x| (1..=n).fold(bit(x), |acc, y| acc | bit(product(x, y))))
        .collect();
    let mut all: BTreeSet<u64> = BTreeSet::new();
    for &p in &principal {
        let grown: Vec<u64> = all.iter().map(|&i| i | p).collect();
        all.insert(p);
        all.extend(grown);
    }
    let mut out: Vec<Ideal> = all
        .into_iter()
        .map(|mask| {
            let elements: Vec<Element> = (1..=n).filter(|&x| mask & bit(x) != 0).collect();
            let semiprime = (1..=n).all(|x| mask & bit(table.get(x, x)) == 0 || mask & bit(x) != 0);
            Ideal {
                side,
                elements,
                semiprime,
            }
        })
        .collect();
    out.sort_by(|a, b| (a.elements.len(), &a.elements).cmp(&(b.elements.len(), &b.elements)));
    Ok(out)
}

fn bit(x: Element) -> u64 {
    1u64 << (x - 1)
}
