//! Explicit constructions of translatable groupoids and semigroups.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arith::{check_order, gcd, is_zero_mod, rep, Element};
use crate::error::{Error, Result};
use crate::table::{CayleyTable, KSequence};

fn check_step(n: usize, k: usize) -> Result<()> {
    check_order(n)?;
    if k < 1 || k >= n {
        return Err(Error::InvalidStep { n, k });
    }
    Ok(())
}

/// The first row `1, .., n`; its table is `i·j = [k - ki + j]_n` with left
/// neutral element `1`.
pub fn left_unitary_groupoid(n: usize, k: usize) -> Result<KSequence> {
    KSequence::identity(n, k)
}

/// The sequence with `a_[k - ki + i]_n = i` for every `i`, whose table is
/// idempotent. Exists exactly when the positions `[k - ki + i]_n` are
/// distinct, i.e. when `gcd(k - 1, n) = 1`.
pub fn idempotent_groupoid(n: usize, k: usize) -> Result<KSequence> {
    check_step(n, k)?;
    let mut a = vec![0; n];
    let mut owner = vec![0; n];
    for i in 1..=n {
        let p = rep(k as i64 - (k * i) as i64 + i as i64, n);
        if owner[p - 1] != 0 {
            return Err(Error::ConstructionImpossible(format!(
                "positions [k - ki + i]_n collide: i={} and i={i} both map to position {p} \
                 (n={n}, k={k}, gcd(k-1, n)={})",
                owner[p - 1],
                gcd(k - 1, n)
            )));
        }
        owner[p - 1] = i;
        a[p - 1] = i;
    }
    KSequence::new(n, k, a)
}

/// Every left cancellative `k`-translatable semigroup of order `n`, as the
/// sequences `a_i = [i - k - kv]_n` for each `v` with `[(1+k)v]_n = 0`,
/// sorted lexicographically.
pub fn cancellative_semigroups(n: usize, k: usize) -> Result<Vec<KSequence>> {
    check_step(n, k)?;
    if !is_zero_mod((k * k + k) as i64, n) {
        return Ok(Vec::new());
    }
    let (ni, ki) = (n as i64, k as i64);
    let mut out: Vec<KSequence> = (1..=ni)
        .filter(|v| is_zero_mod((1 + ki) * v, n))
        .map(|v| {
            let a = (1..=ni).map(|i| rep(i - ki - ki * v, n)).collect();
            KSequence::new(n, k, a)
        })
        .collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}

/// Splits an element of the `k + k²` table into `(i, s)` with `x = i + sk`,
/// `i` in `1..=k` and `s` in `0..=k`.
pub fn ee3_coordinates(k: usize, x: Element) -> (usize, usize) {
    let i = (x - 1) % k + 1;
    (i, (x - i) / k)
}

/// The semigroup of order `k + k²` given by
/// `(i + sk)·(j + tk) = [j + (s + t - i + 1)k]_n`.
pub fn ee3_table(k: usize) -> Result<CayleyTable> {
    if k == 0 {
        return Err(Error::InvalidStep { n: 0, k });
    }
    let n = k + k * k;
    CayleyTable::from_fn(n, |x, y| {
        let (i, s) = ee3_coordinates(k, x);
        let (j, t) = ee3_coordinates(k, y);
        rep(j as i64 + (s as i64 + t as i64 - i as i64 + 1) * k as i64, n)
    })
}

/// All sequences with `a_s = a_[s+k]_n = a_(a_s)`, sorted lexicographically.
/// Each generates the semigroup `i·j = a_j`.
///
/// Such a sequence is constant on residue classes mod `g = gcd(k, n)`, and
/// every value it takes is a fixed point. The enumeration picks the classes
/// holding a fixed point, the fixed point in each, and sends every remaining
/// class to one of the chosen fixed points.
pub fn constant_column_semigroups(n: usize, k: usize) -> Result<Vec<KSequence>> {
    check_step(n, k)?;
    let g = gcd(k, n);
    const MAX_CLASSES: usize = 16;
    if g > MAX_CLASSES {
        return Err(Error::ResourceLimit {
            what: "residue classes mod gcd(k, n)",
            value: g,
            limit: MAX_CLASSES,
        });
    }
    let per_class = n / g;
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << g) {
        let fixed: Vec<usize> = (0..g).filter(|c| mask >> c & 1 == 1).collect();
        let free: Vec<usize> = (0..g).filter(|c| mask >> c & 1 == 0).collect();
        let mut reps = vec![0usize; fixed.len()];
        loop {
            // class c (0-based) holds the positions c+1, c+1+g, ...
            let values: Vec<Element> = fixed
                .iter()
                .zip(&reps)
                .map(|(&c, &r)| c + 1 + r * g)
                .collect();
            let mut choice = vec![0usize; free.len()];
            loop {
                let mut class_value = vec![0; g];
                for (&c, &v) in fixed.iter().zip(&values) {
                    class_value[c] = v;
                }
                for (&c, &idx) in free.iter().zip(&choice) {
                    class_value[c] = values[idx];
                }
                let a = (0..n).map(|p| class_value[p % g]).collect();
                out.insert(a);
                if !advance(&mut choice, values.len()) {
                    break;
                }
            }
            if !advance(&mut reps, per_class) {
                break;
            }
        }
    }
    out.into_iter()
        .map(|a: Vec<Element>| KSequence::new(n, k, a))
        .collect()
}

/// Odometer step over digits in `0..base`; `false` after the last state.
fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// A `k`-translatable groupoid of order `(t+1)n` containing the one generated
/// by `seq`, together with the embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub seq: KSequence,
    pub table: CayleyTable,
    /// `map[i-1]` is the image of `i`, namely `(i-1)(t+1) + 1`.
    pub map: Vec<Element>,
}

/// Spreads the first row out so that `a_i` sits at position `(i-1)(t+1)+1`
/// (as the image of `a_i`) and every other position `p` holds `p` itself.
pub fn embed(seq: &KSequence, t: usize) -> Result<Embedding> {
    if t == 0 {
        return Err(Error::Precondition("embedding needs t >= 1".into()));
    }
    let n = seq.order();
    let big = (t + 1) * n;
    check_order(big)?;
    let phi = |i: Element| (i - 1) * (t + 1) + 1;
    let mut c: Vec<Element> = (1..=big).collect();
    for i in 1..=n {
        c[phi(i) - 1] = phi(seq.values()[i - 1]);
    }
    let seq = KSequence::new(big, seq.step(), c)?;
    let table = crate::translatable::table_from_sequence(&seq);
    Ok(Embedding {
        seq,
        table,
        map: (1..=n).map(phi).collect(),
    })
}

/// Parameters of a union of `t` copies of an order-`n` left unitary
/// `k`-translatable semigroup, with `k = tq`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UnionSpec {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub q: usize,
}

impl UnionSpec {
    pub fn new(n: usize, k: usize, t: usize) -> Result<Self> {
        check_step(n, k)?;
        if t == 0 || !k.is_multiple_of(t) {
            return Err(Error::Precondition(format!(
                "t={t} does not divide k={k}"
            )));
        }
        Ok(UnionSpec { n, k, t, q: k / t })
    }

    /// Label of element `r` of copy `i`: `t(r-1) + i`.
    pub fn label(&self, copy: usize, local: usize) -> Element {
        self.t * (local - 1) + copy
    }
}

/// A union table whose elements are tagged with their copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledUnion {
    pub spec: UnionSpec,
    pub table: CayleyTable,
    /// The step the whole table is translatable by.
    pub step: usize,
    /// `copy_of[x-1] = (copy, local index)`.
    pub copy_of: Vec<(usize, usize)>,
}

impl LabeledUnion {
    /// The labels of copy `i`, in local order `1..=n`.
    pub fn copy(&self, i: usize) -> Vec<Element> {
        (1..=self.spec.n).map(|r| self.spec.label(i, r)).collect()
    }

    /// The multiplication table of copy `i` on local indices.
    pub fn copy_table(&self, i: usize) -> Result<CayleyTable> {
        let labels = self.copy(i);
        CayleyTable::from_fn(self.spec.n, |r, s| {
            let (c, local) = self.copy_of[self.table.get(labels[r - 1], labels[s - 1]) - 1];
            if c == i {
                local
            } else {
                0
            }
        })
        .map_err(|_| Error::Invariant(format!("copy {i} is not closed under the product")))
    }
}

fn build_union(
    spec: UnionSpec,
    step: usize,
    local: impl Fn(usize, usize, usize) -> i64,
) -> Result<LabeledUnion> {
    let big = spec.t * spec.n;
    let copy_of: Vec<(usize, usize)> = (1..=big)
        .map(|x| ((x - 1) % spec.t + 1, (x - 1) / spec.t + 1))
        .collect();
    let table = CayleyTable::from_fn(big, |x, y| {
        let (i, r) = copy_of[x - 1];
        let (j, s) = copy_of[y - 1];
        spec.label(j, rep(local(i, r, s), spec.n))
    })?;
    Ok(LabeledUnion {
        spec,
        table,
        step,
        copy_of,
    })
}

/// `t` copies glued by `i_r * j_s = j_x` with `x = [k - kr + q - qi + s]_n`;
/// the result is `k`-translatable of order `tn`.
pub fn union_t62(spec: UnionSpec) -> Result<LabeledUnion> {
    let UnionSpec { n, k, t, q } = UnionSpec::new(spec.n, spec.k, spec.t)?;
    if !is_zero_mod((k + k * k) as i64, t * n) {
        return Err(Error::Precondition(format!(
            "[k + k^2]_tn = {} is not 0 (n={n}, k={k}, t={t})",
            rep((k + k * k) as i64, t * n)
        )));
    }
    let (k, q) = (k as i64, q as i64);
    build_union(spec, spec.k, move |i, r, s| {
        k - k * r as i64 + q - q * i as i64 + s as i64
    })
}

/// `t` copies of the order `k + k²` semigroup glued by `i_r * j_s = j_x`
/// with `x = [k - kr + kq(i-1) + s]_n`; the result is
/// `(k + (t-1)n)`-translatable of order `tn`.
pub fn union_t63(spec: UnionSpec) -> Result<LabeledUnion> {
    let UnionSpec { n, k, t, q } = UnionSpec::new(spec.n, spec.k, spec.t)?;
    if n != k + k * k {
        return Err(Error::Precondition(format!(
            "n={n} is not k + k^2 = {}",
            k + k * k
        )));
    }
    let step = k + (t - 1) * n;
    let (k, q) = (k as i64, q as i64);
    build_union(spec, step, move |i, r, s| {
        k - k * r as i64 + k * q * (i as i64 - 1) + s as i64
    })
}

/// Two copies `Q = {1..n}` and `G = {g_1..g_n}` of the order `n = k + k²`
/// semigroup, `k = 2q`, presented in the order `1, g_1, 2, g_2, ..` and
/// multiplied by
/// `i*j = [k - ki + j]`, `g_i*g_j = g_[k(1+q) - ki + j]`,
/// `i*g_j = g_[k - ki + j]`, `g_i*j = [k(1+q) - ki + j]`.
pub fn pair_union(k: usize) -> Result<LabeledUnion> {
    if k == 0 || !k.is_multiple_of(2) {
        return Err(Error::Precondition(format!("k={k} is not a positive even number")));
    }
    let n = k + k * k;
    let spec = UnionSpec::new(n, k, 2)?;
    let (ki, q) = (k as i64, (k / 2) as i64);
    let big = 2 * n;
    // copy 1 is Q (label 2i-1), copy 2 is G (label 2i).
    let copy_of: Vec<(usize, usize)> = (1..=big).map(|x| ((x - 1) % 2 + 1, x.div_ceil(2))).collect();
    let table = CayleyTable::from_fn(big, |x, y| {
        let (cx, i) = copy_of[x - 1];
        let (cy, j) = copy_of[y - 1];
        let (i, j) = (i as i64, j as i64);
        let shift = if cx == 1 { ki } else { ki * (1 + q) };
        let v = rep(shift - ki * i + j, n);
        spec.label(cy, v)
    })?;
    Ok(LabeledUnion {
        spec,
        table,
        step: k + n,
        copy_of,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::properties::{holds, PropertyName};
    use crate::translatable::{detect, table_from_sequence};

    #[test]
    fn idempotent_examples() {
        assert_eq!(idempotent_groupoid(4, 2).unwrap().values(), &[1, 4, 3, 2]);
        assert_eq!(
            idempotent_groupoid(8, 4).unwrap().values(),
            &[1, 6, 3, 8, 5, 2, 7, 4]
        );
        match idempotent_groupoid(6, 3) {
            Err(Error::ConstructionImpossible(msg)) => {
                assert!(msg.contains("i=1 and i=4"), "{msg}");
                assert!(msg.contains("position 1"), "{msg}");
            }
            other => panic!("{other:?}"),
        }
        assert!(idempotent_groupoid(5, 1).is_err());
    }

    #[test]
    fn idempotent_construction_exists_iff_coprime() {
        for n in 2..=16 {
            for k in 1..n {
                let r = idempotent_groupoid(n, k);
                assert_eq!(r.is_ok(), gcd(k - 1, n) == 1, "n={n} k={k}");
                if let Ok(s) = r {
                    let t = table_from_sequence(&s);
                    assert!(holds(&t, PropertyName::Idempotent).unwrap());
                    assert!(detect(&t).contains(k));
                }
            }
        }
    }

    #[test]
    fn cancellative_semigroup_examples() {
        let got: Vec<Vec<usize>> = cancellative_semigroups(6, 2)
            .unwrap()
            .iter()
            .map(|s| s.values().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![
                vec![1, 2, 3, 4, 5, 6],
                vec![3, 4, 5, 6, 1, 2],
                vec![5, 6, 1, 2, 3, 4]
            ]
        );
        assert!(cancellative_semigroups(6, 4).unwrap().is_empty());
        assert_eq!(cancellative_semigroups(4, 3).unwrap().len(), 4);
    }

    #[test]
    fn ee3_examples() {
        let t = ee3_table(2).unwrap();
        assert_eq!(t.get(3, 3), 5);
        assert_eq!(t, table_from_sequence(&KSequence::identity(6, 2).unwrap()));
        assert_eq!(ee3_table(1).unwrap().rows(), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!((1..=6).filter(|&x| t.get(x, 4) == 2).count(), 2);
        assert_eq!(ee3_coordinates(2, 3), (1, 1));
        assert_eq!(ee3_coordinates(2, 6), (2, 2));
    }

    #[test]
    fn constant_column_examples() {
        let has = |n, k, a: &[usize]| {
            constant_column_semigroups(n, k)
                .unwrap()
                .iter()
                .any(|s| s.values() == a)
        };
        assert!(has(6, 3, &[1, 3, 3, 1, 3, 3]));
        assert!(has(6, 3, &[2, 2, 6, 2, 2, 6]));
        assert!(has(6, 3, &[1, 5, 1, 1, 5, 1]));
        assert!(has(12, 6, &[12, 12, 9, 10, 9, 12, 12, 12, 9, 10, 9, 12]));
        assert!(has(10, 5, &[1, 5, 4, 4, 5, 1, 5, 4, 4, 5]));
        // gcd(k, n) = 1 leaves only the constant sequences
        let c = constant_column_semigroups(5, 2).unwrap();
        assert_eq!(c.len(), 5);
    }

    #[test]
    fn constant_column_matches_brute_force() {
        for n in 2..=6usize {
            for k in 1..n {
                let got: Vec<Vec<usize>> = constant_column_semigroups(n, k)
                    .unwrap()
                    .iter()
                    .map(|s| s.values().to_vec())
                    .collect();
                let mut expected = Vec::new();
                let total = n.pow(n as u32);
                for code in 0..total {
                    let mut c = code;
                    let mut a = vec![0; n];
                    for p in (0..n).rev() {
                        a[p] = c % n + 1;
                        c /= n;
                    }
                    let ok = (1..=n).all(|s| {
                        a[s - 1] == a[rep((s + k) as i64, n) - 1] && a[a[s - 1] - 1] == a[s - 1]
                    });
                    if ok {
                        expected.push(a);
                    }
                }
                assert_eq!(got, expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn embedding_preserves_products() {
        let z4 = KSequence::identity(4, 3).unwrap();
        let e = embed(&z4, 1).unwrap();
        assert_eq!(e.table.order(), 8);
        assert!(detect(&e.table).contains(3));
        let q = table_from_sequence(&z4);
        for i in 1..=4 {
            for j in 1..=4 {
                assert_eq!(e.table.get(e.map[i - 1], e.map[j - 1]), e.map[q.get(i, j) - 1]);
            }
        }
        let lu = embed(&KSequence::identity(6, 2).unwrap(), 1).unwrap();
        assert!((1..=12).all(|x| lu.table.get(lu.map[0], x) == x));
        assert!(embed(&z4, 0).is_err());
    }

    #[test]
    fn union_t62_example() {
        let u = union_t62(UnionSpec::new(12, 8, 2).unwrap()).unwrap();
        assert_eq!(u.table.order(), 24);
        assert!(detect(&u.table).contains(8));
        assert_eq!(u.table, table_from_sequence(&KSequence::identity(24, 8).unwrap()));
        assert!(UnionSpec::new(12, 8, 3).is_err());
        assert!(union_t62(UnionSpec { n: 6, k: 2, t: 2, q: 1 }).is_err());
    }

    #[test]
    fn union_t63_examples() {
        let u = union_t63(UnionSpec::new(6, 2, 2).unwrap()).unwrap();
        assert_eq!(u.step, 8);
        assert!(detect(&u.table).contains(8));
        assert!(holds(&u.table, PropertyName::Associative).unwrap());
        assert_eq!(u.table, table_from_sequence(&KSequence::identity(12, 8).unwrap()));
        assert!(union_t63(UnionSpec::new(12, 2, 2).unwrap()).is_err());
    }

    #[test]
    fn pair_union_matches_t63() {
        for k in [2, 4] {
            let p = pair_union(k).unwrap();
            let u = union_t63(UnionSpec::new(k + k * k, k, 2).unwrap()).unwrap();
            assert_eq!(p.table, u.table, "k={k}");
            assert_eq!(p.copy_of, u.copy_of);
            assert!(detect(&p.table).contains(p.step));
        }
        assert_eq!(pair_union(4).unwrap().step, 24);
        assert!(pair_union(3).is_err());
    }

    #[test]
    fn copies_are_closed() {
        let u = union_t62(UnionSpec::new(12, 8, 2).unwrap()).unwrap();
        for i in 1..=2 {
            let c = u.copy_table(i).unwrap();
            assert!(holds(&c, PropertyName::Associative).unwrap());
            assert!(detect(&c).contains(8));
        }
    }
}
