//! The registry of verification campaigns. Each campaign pairs a claim with
//! an exhaustive definitional check over every admissible instance.

use std::collections::BTreeSet;

use super::{permutations, sequences, Case, Tally};
use crate::arith::{gcd, is_zero_mod, least_annihilator, rep};
use crate::constructions::{
    cancellative_semigroups, constant_column_semigroups, ee3_table, embed, idempotent_groupoid,
    pair_union, union_t62, union_t63, UnionSpec,
};
use crate::error::{Error, Result};
use crate::properties::{
    holds, lcond_check, left_neutral, left_neutrals, left_unitary_characterize,
    right_neutrals, semigroup_criterion, PropertyName as P,
};
use crate::structure::{
    decompose, idempotent_set, idempotents_by_formula, idempotents_with_neutral_one, ideals,
    is_isomorphism, iso_idempotent, iso_left_unitary, iso_to_cyclic, reorder_to_left_unitary,
    Side,
};
use crate::table::{CayleyTable, KSequence, Presentation};
use crate::translatable::{
    all_rotated_presentations, detect, is_translatable_by, table_from_sequence, Criterion,
};

/// A registered campaign.
pub struct Campaign {
    pub id: &'static str,
    pub aliases: &'static [&'static str],
    pub summary: &'static str,
    /// Bound used when none is given; chosen to finish well within a minute
    /// on one core.
    pub default_max_n: usize,
    /// Largest bound accepted.
    pub limit_max_n: usize,
    pub(super) cases: fn(usize) -> Vec<Case>,
    pub(super) check: fn(&Case) -> Tally,
}

impl std::fmt::Debug for Campaign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Campaign")
            .field("id", &self.id)
            .field("default_max_n", &self.default_max_n)
            .finish()
    }
}

/// Looks a campaign up by id or alias.
pub fn campaign(id: &str) -> Result<&'static Campaign> {
    REGISTRY
        .iter()
        .find(|c| c.id == id || c.aliases.contains(&id))
        .ok_or_else(|| Error::UnknownTheorem(id.to_string()))
}

/// Every registered campaign, in registry order.
pub fn campaigns() -> &'static [Campaign] {
    REGISTRY
}

macro_rules! registry {
    ($($id:literal $(| $alias:literal)* => $check:ident, $cases:expr, $default:expr, $limit:expr, $summary:literal;)*) => {
        static REGISTRY: &[Campaign] = &[$(Campaign {
            id: $id,
            aliases: &[$($alias),*],
            summary: $summary,
            default_max_n: $default,
            limit_max_n: $limit,
            cases: $cases,
            check: $check,
        }),*];
    };
}

registry! {
    "L-lc" => l_lc, all_nk, 6, 7,
        "a translatable groupoid with one left cancellable element is left cancellative";
    "unique-k" => unique_k, all_nk, 7, 8,
        "a left cancellative groupoid is translatable for at most one step";
    "L-basic-equivalence" => l_basic, basic_cases, 5, 6,
        "the first-row formula and the two shift criteria agree";
    "L-cond-equivalence" => l_cond, all_nk, 6, 8,
        "modular conditions on (n, k, a) match the definitional checks";
    "P1" => p1, all_nk, 30, 64,
        "idempotent translatable groupoids are elastic iff (ij)+(ji) = i+j";
    "P2" => p2, all_nk, 30, 64,
        "idempotent translatable groupoids are right distributive iff left distributive";
    "P3" => p3, p3_cases, 6, 7,
        "alterable right solvable right distributive groupoids are idempotent quasigroups";
    "idtrans-existence" | "L-idtrans-existence" => idtrans, all_nk, 12, 64,
        "idempotent k-translatable groupoids exist exactly when gcd(k-1, n) = 1";
    "izo" => izo, all_nk, 16, 32,
        "idempotent k-translatable groupoids of the same order are isomorphic";
    "T-quasi" | "quasi" => t_quasi, all_nk, 15, 40,
        "idempotent translatable groupoids with gcd(k, n) = 1 are quasigroups";
    "right-cancellable-gcd" => right_cancellable, all_nk, 7, 7,
        "a right cancellable element forces gcd(k, n) = 1";
    "T2" => t2, all_nk, 8, 8,
        "alterable cancellative translatable groupoids have [k^2] = n-1";
    "C-alter" => c_alter, all_nk, 8, 8,
        "left cancellative translatable groupoids are alterable iff [k^2] = n-1";
    "T-izo" => t_izo, all_nk, 16, 32,
        "left unitary k-translatable groupoids of the same order are isomorphic";
    "med" => med, all_nk, 16, 32,
        "left unitary translatable groupoids are medial and not right distributive";
    "unitary-k" => unitary_k, all_nk, 7, 8,
        "a translatable groupoid with a neutral element has k = n-1";
    "C-cyc" => c_cyc, all_nk, 7, 8,
        "translatable groups have k = n-1 and are cyclic";
    "para" => para, all_nk, 16, 32,
        "modular characterization of left unitary translatable groupoids";
    "para-corollary" => para_corollary, all_nk, 16, 32,
        "left modular iff paramedial; right modular implies the rest; never strongly elastic";
    "embed" => embed_check, embed_cases, 6, 7,
        "embedding into order (t+1)n preserves products, cancellativity and left neutrals";
    "dual" => dual, all_nk, 9, 9,
        "the dual is k*-translatable iff [k k*] = 1";
    "dual-corollaries" => dual_corollaries, all_nk, 9, 9,
        "self-dual steps, left unitary duals, dual steps n-tk, and alterability via the dual";
    "eas-ee1" => eas_ee1, all_nk, 6, 6,
        "associativity of a triple in terms of the first row";
    "semi" => semi, all_nk, 7, 8,
        "left cancellative semigroup iff [k^2+k] = 0 and a_i = [i-k-k a_k]";
    "lmonoid" => lmonoid, all_nk, 6, 6,
        "a translatable semigroup is left cancellative iff it has a left neutral element";
    "C-unit" => c_unit, all_nk, 30, 64,
        "a left unitary translatable groupoid is a semigroup iff [k+k^2] = 0";
    "ee3" => ee3, ee3_cases, 42, 110,
        "the order k+k^2 semigroup (i+sk)(j+tk) = [j+(s+t-i+1)k]";
    "T-reord" => t_reord, all_nk, 24, 64,
        "reordering makes a left cancellative translatable semigroup left unitary";
    "C-izo" => c_izo, all_nk, 24, 48,
        "left cancellative k-translatable semigroups of the same order are isomorphic";
    "cyclic" => cyclic, cyclic_cases, 30, 64,
        "(n-1)-translatable with a_(i+1) = a_i + 1 is a cyclic group";
    "C-semi" => c_semi, cyclic_cases, 30, 64,
        "left cancellative (n-1)-translatable semigroups are isomorphic to Z_n";
    "no-idempotent-semigroup" => no_idempotent_semigroup, all_nk, 6, 6,
        "no idempotent translatable semigroups";
    "idemp" => idemp, all_nk, 24, 64,
        "idempotents: formula, subsemigroup, left neutrals, right-zero";
    "reord" => reord, all_nk, 30, 64,
        "with 1 left neutral the idempotents are [i + k(i-1)]";
    "right-canc-semigroup" => right_canc_semigroup, all_nk, 7, 7,
        "right cancellative translatable semigroups have k = n-1 and are Z_n";
    "ak-pm1" | "a_k=±1" => ak_pm1, all_nk, 30, 64,
        "left cancellative translatable semigroups with a_k = 1 or n-1 are Z_n";
    "decomp" => decomp, all_nk, 24, 64,
        "decomposition into t cyclic groups of order m";
    "ideals" => ideals_check, all_nk, 24, 64,
        "t disjoint pairwise isomorphic left ideals of order m";
    "c-decomp" => c_decomp, ee3_cases, 42, 110,
        "order k+k^2: k disjoint copies of Z_(k+1)";
    "semiprime" => semiprime, all_nk, 12, 14,
        "every one-sided ideal of a left cancellative translatable semigroup is semiprime";
    "5.16-list" => list_516, all_nk, 24, 32,
        "semigroup-theoretic properties of left cancellative translatable semigroups";
    "paramedial-cyclic" => paramedial_cyclic, all_nk, 24, 64,
        "paramedial left cancellative translatable semigroups are cyclic groups";
    "Tsem" => tsem, all_nk, 6, 6,
        "i·j = a_j is a semigroup iff a_s = a_[s+k] = a_(a_s)";
    "Tsem-corollary-1" => tsem_c1, all_nk, 6, 6,
        "a_1 = a_2 = n, or a_1 = 1 and a_j = j+1, force i·j = a_j";
    "Tsem-corollary-2" => tsem_c2, all_nk, 6, 6,
        "semigroup test through an idempotent j with j = j·[j-1]";
    "nsemi" => nsemi, all_nk, 6, 6,
        "semigroup test through the idempotent 1 with 1 = 1·n";
    "divid" => divid, divid_cases, 60, 200,
        "scaling rules for residues modulo tn";
    "T-62" => t62, t62_cases, 12, 24,
        "t copies glued into a k-translatable left unitary semigroup";
    "T-63" => t63, ee3_t_cases, 30, 72,
        "t copies of the order k+k^2 semigroup glued into a (k+(t-1)n)-translatable one";
    "dec-semi" => dec_semi, dec_semi_cases, 42, 72,
        "two copies glued by the explicit pair products";
}

// ---------------------------------------------------------------- cases

fn all_nk(max_n: usize) -> Vec<Case> {
    (2..=max_n)
        .flat_map(|n| (1..n).map(move |k| Case::nk(n, k)))
        .collect()
}

fn basic_cases(max_n: usize) -> Vec<Case> {
    let mut out: Vec<Case> = (2..=max_n.min(3)).map(Case::n).collect();
    out.extend(all_nk(max_n));
    out
}

fn p3_cases(max_n: usize) -> Vec<Case> {
    basic_cases_upto(max_n, 4)
}

fn basic_cases_upto(max_n: usize, all_tables: usize) -> Vec<Case> {
    let mut out: Vec<Case> = (2..=max_n.min(all_tables)).map(Case::n).collect();
    out.extend(all_nk(max_n));
    out
}

fn embed_cases(max_n: usize) -> Vec<Case> {
    all_nk(max_n)
        .into_iter()
        .flat_map(|c| {
            (1..=3).map(move |t| Case {
                t: Some(t),
                ..c
            })
        })
        .collect()
}

fn ee3_cases(max_n: usize) -> Vec<Case> {
    (1..)
        .map(|k| (k + k * k, k))
        .take_while(|&(n, _)| n <= max_n)
        .map(|(n, k)| Case::nk(n, k))
        .collect()
}

fn ee3_t_cases(max_n: usize) -> Vec<Case> {
    ee3_cases(max_n)
        .into_iter()
        .flat_map(|c| {
            let k = c.step();
            (1..=k).filter(move |t| k % t == 0).map(move |t| Case { t: Some(t), ..c })
        })
        .collect()
}

fn dec_semi_cases(max_n: usize) -> Vec<Case> {
    ee3_cases(max_n)
        .into_iter()
        .filter(|c| c.step() % 2 == 0)
        .collect()
}

fn cyclic_cases(max_n: usize) -> Vec<Case> {
    (2..=max_n).map(|n| Case::nk(n, n - 1)).collect()
}

fn divid_cases(max_n: usize) -> Vec<Case> {
    (1..=max_n).map(Case::n).collect()
}

fn t62_cases(max_n: usize) -> Vec<Case> {
    all_nk(max_n)
        .into_iter()
        .flat_map(|c| {
            let (n, k) = (c.n, c.step());
            (1..=k)
                .filter(move |&t| k % t == 0 && is_zero_mod((k + k * k) as i64, t * n))
                .map(move |t| Case { t: Some(t), ..c })
        })
        .collect()
}

// ---------------------------------------------------------------- helpers

fn seq(n: usize, k: usize, a: Vec<usize>) -> KSequence {
    KSequence::new(n, k, a).expect("valid by construction")
}

fn is(t: &CayleyTable, p: P) -> bool {
    holds(t, p).unwrap_or(false)
}

fn perm_seqs(c: &Case) -> impl Iterator<Item = KSequence> {
    let (n, k) = (c.n, c.step());
    permutations(n).map(move |a| seq(n, k, a))
}

fn all_seqs(c: &Case) -> impl Iterator<Item = KSequence> {
    let (n, k) = (c.n, c.step());
    sequences(n).map(move |a| seq(n, k, a))
}

fn semigroups(c: &Case) -> Vec<KSequence> {
    cancellative_semigroups(c.n, c.step()).expect("valid step")
}

fn lu_table(n: usize, k: usize) -> CayleyTable {
    table_from_sequence(&KSequence::identity(n, k).expect("valid step"))
}

fn has_two_sided_neutral(t: &CayleyTable) -> bool {
    let left = left_neutrals(t);
    right_neutrals(t).iter().any(|e| left.contains(e))
}

fn is_group(t: &CayleyTable) -> bool {
    is(t, P::Associative) && has_two_sided_neutral(t) && is(t, P::Quasigroup)
}

/// `x·y` for the table generated by `s`, read straight from the sequence.
#[inline]
fn mul(s: &KSequence, x: usize, y: usize) -> usize {
    let k = s.step() as i64;
    s.at(k - k * x as i64 + y as i64)
}

fn sub_table(t: &CayleyTable, elements: &[usize]) -> Option<CayleyTable> {
    let pos = |x: usize| elements.iter().position(|&e| e == x).map(|p| p + 1);
    let mut closed = true;
    let sub = CayleyTable::from_fn(elements.len(), |r, c| {
        pos(t.get(elements[r - 1], elements[c - 1])).unwrap_or_else(|| {
            closed = false;
            1
        })
    })
    .ok()?;
    closed.then_some(sub)
}

// ---------------------------------------------------------------- checks

fn l_lc(c: &Case) -> Tally {
    let mut r = Tally::default();
    let n = c.n;
    for s in all_seqs(c) {
        r.count(1);
        let t = table_from_sequence(&s);
        let cancellable = (1..=n).any(|x| t.row(x).collect::<BTreeSet<_>>().len() == n);
        if cancellable {
            r.require(is(&t, P::LeftCancellative), || format!("{s}"));
        }
    }
    r
}

fn unique_k(c: &Case) -> Tally {
    let mut r = Tally::default();
    for s in perm_seqs(c) {
        r.count(1);
        let ks = detect(&table_from_sequence(&s)).ks;
        r.require(ks == BTreeSet::from([c.step()]), || format!("{s}: steps {ks:?}"));
    }
    r
}

fn l_basic(c: &Case) -> Tally {
    let mut r = Tally::default();
    let n = c.n;
    let agree = |t: &CayleyTable, k: usize| {
        let a = is_translatable_by(t, k, Criterion::FirstRow);
        let b = is_translatable_by(t, k, Criterion::Shift);
        let d = is_translatable_by(t, k, Criterion::BackShift);
        (a == b && b == d, a)
    };
    match c.k {
        None => {
            // every table of order n
            let cells = n * n;
            let mut digits = vec![1usize; cells];
            loop {
                r.count(1);
                let t = CayleyTable::from_fn(n, |i, j| digits[(i - 1) * n + j - 1]).expect("in range");
                for k in 1..n {
                    r.require(agree(&t, k).0, || format!("{:?} k={k}", t.rows()));
                }
                let mut done = true;
                for d in digits.iter_mut().rev() {
                    if *d < n {
                        *d += 1;
                        done = false;
                        break;
                    }
                    *d = 1;
                }
                if done {
                    break;
                }
            }
        }
        Some(k) => {
            for s in all_seqs(c) {
                r.count(1);
                let t = table_from_sequence(&s);
                let (same, holds) = agree(&t, k);
                r.require(same && holds, || format!("{s}: criteria disagree"));
                let alt = CayleyTable::from_fn(n, |i, j| {
                    s.at((i as i64 - 1) * (n - k) as i64 + j as i64)
                })
                .expect("in range");
                r.require(alt == t, || format!("{s}: (i-1)(n-k)+j form differs"));
                for k2 in (1..n).filter(|&k2| k2 != k) {
                    r.require(agree(&t, k2).0, || format!("{s}: criteria disagree at {k2}"));
                }
            }
        }
    }
    r
}

fn l_cond(c: &Case) -> Tally {
    let mut r = Tally::default();
    for s in perm_seqs(c) {
        r.count(1);
        let t = table_from_sequence(&s);
        for &p in P::LCOND {
            let fast = lcond_check(&s, p).expect("permutation");
            r.require(fast == is(&t, p), || format!("{s}: {p} modular={fast}"));
        }
    }
    r
}

fn idempotent_case(c: &Case) -> Option<(KSequence, CayleyTable)> {
    let s = idempotent_groupoid(c.n, c.step()).ok()?;
    let t = table_from_sequence(&s);
    Some((s, t))
}

fn p1(c: &Case) -> Tally {
    let mut r = Tally::default();
    if let Some((s, t)) = idempotent_case(c) {
        r.count(1);
        let n = c.n;
        let sums = (1..=n).all(|i| {
            (1..=n).all(|j| is_zero_mod((t.get(i, j) + t.get(j, i)) as i64 - (i + j) as i64, n))
        });
        r.require(is(&t, P::Elastic) == sums, || format!("{s}: elastic != sum rule"));
    }
    r
}

fn p2(c: &Case) -> Tally {
    let mut r = Tally::default();
    if let Some((s, t)) = idempotent_case(c) {
        r.count(1);
        r.require(
            is(&t, P::LeftDistributive) == is(&t, P::RightDistributive),
            || format!("{s}"),
        );
    }
    r
}

fn p3_claim(r: &mut Tally, t: &CayleyTable) {
    r.count(1);
    if is(t, P::Alterable) && is(t, P::RightSolvable) && is(t, P::RightDistributive) {
        r.require(is(t, P::Idempotent) && is(t, P::Quasigroup), || {
            format!("{:?}", t.rows())
        });
    }
}

fn p3(c: &Case) -> Tally {
    let mut r = Tally::default();
    let n = c.n;
    match c.k {
        None => {
            // right solvable means every row is a permutation
            let perms: Vec<Vec<usize>> = permutations(n).collect();
            let mut idx = vec![0usize; n];
            loop {
                let t = CayleyTable::from_fn(n, |i, j| perms[idx[i - 1]][j - 1]).expect("in range");
                p3_claim(&mut r, &t);
                if !odometer(&mut idx, perms.len()) {
                    break;
                }
            }
        }
        Some(_) => {
            for s in perm_seqs(c) {
                p3_claim(&mut r, &table_from_sequence(&s));
            }
        }
    }
    r
}

fn odometer(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn idtrans(c: &Case) -> Tally {
    let mut r = Tally::default();
    let (n, k) = (c.n, c.step());
    // existence: exhaustive below 7, by forced positions above
    let exists = if n <= 6 {
        sequences(n).any(|a| {
            r.count(1);
            is(&table_from_sequence(&seq(n, k, a)), P::Idempotent)
        })
    } else {
        r.count(1);
        let mut slot = vec![0usize; n + 1];
        (1..=n).all(|i| {
            let p = rep(k as i64 - (k * i) as i64 + i as i64, n);
            std::mem::replace(&mut slot[p], i) == 0
        })
    };
    let built = idempotent_groupoid(n, k);
    r.require(exists == built.is_ok(), || {
        format!("existence {exists} but construction {:?}", built.as_ref().err())
    });
    if let Ok(s) = &built {
        let t = table_from_sequence(s);
        r.require(is(&t, P::Idempotent) && is(&t, P::LeftCancellative), || format!("{s}"));
    }
    r.require(exists == (gcd(k - 1, n) == 1), || format!("gcd(k-1,n)={}", gcd(k - 1, n)));
    if k >= 2 && !exists {
        r.expect(false, || built.unwrap_err().to_string());
    }
    r
}

fn izo(c: &Case) -> Tally {
    let mut r = Tally::default();
    if let Some((s, t)) = idempotent_case(c) {
        let natural = Presentation::natural(s.clone());
        for (ord, rotated) in all_rotated_presentations(&s) {
            r.count(1);
            let p = Presentation::new(rotated, ord).expect("same order");
            r.require(p.table() == t, || format!("{s}: rotated presentation differs"));
            let ok = iso_idempotent(&natural, &p).map(|i| i.verified).unwrap_or(false);
            r.require(ok, || format!("{s}: no isomorphism to {:?}", p.ordering));
        }
    }
    r
}

fn t_quasi(c: &Case) -> Tally {
    let mut r = Tally::default();
    if gcd(c.step(), c.n) == 1 {
        if let Some((s, t)) = idempotent_case(c) {
            r.count(1);
            r.require(is(&t, P::Quasigroup), || format!("{s}"));
        }
    }
    r
}

fn right_cancellable(c: &Case) -> Tally {
    let mut r = Tally::default();
    let n = c.n;
    let mut seen = vec![0usize; n + 1];
    let mut stamp = 0;
    for s in all_seqs(c) {
        r.count(1);
        let cancellable = (1..=n).any(|col| {
            stamp += 1;
            (1..=n).all(|i| {
                let v = mul(&s, i, col);
                std::mem::replace(&mut seen[v], stamp) != stamp
            })
        });
        if cancellable {
            r.require(gcd(c.step(), n) == 1, || format!("{s}"));
        }
    }
    r
}

fn t2(c: &Case) -> Tally {
    let mut r = Tally::default();
    let (n, k) = (c.n, c.step());
    let predicted = rep((k * k) as i64, n) == n - 1;
    for s in perm_seqs(c) {
        r.count(1);
        let t = table_from_sequence(&s);
        if is(&t, P::Alterable) {
            r.require(predicted, || format!("{s}: left cancellative and alterable"));
        }
    }
    if n <= 6 {
        for s in all_seqs(c) {
            r.count(1);
            let t = table_from_sequence(&s);
            if is(&t, P::RightCancellative) {
                r.require(s.is_permutation(), || format!("{s}: right cancellative, row not a permutation"));
                if is(&t, P::Alterable) {
                    r.require(predicted, || format!("{s}: right cancellative and alterable"));
                }
            }
        }
    }
    r
}

fn c_alter(c: &Case) -> Tally {
    let mut r = Tally::default();
    let (n, k) = (c.n, c.step());
    let predicted = rep((k * k) as i64, n) == n - 1;
    for s in perm_seqs(c) {
        r.count(1);
        let t = table_from_sequence(&s);
        r.require(is(&t, P::Alterable) == predicted, || format!("{s}"));
    }
    r
}

fn t_izo(c: &Case) -> Tally {
    let mut r = Tally::default();
    let s = KSequence::identity(c.n, c.step()).expect("valid");
    let natural = Presentation::natural(s.clone());
    for (ord, rotated) in all_rotated_presentations(&s) {
        r.count(1);
        let p = Presentation::new(rotated, ord).expect("same order");
        let ok = iso_left_unitary(&natural, &p).map(|i| i.verified).unwrap_or(false);
        r.require(ok, || format!("{s}: presentation {:?}", p.ordering));
    }
    r
}

fn med(c: &Case) -> Tally {
    let mut r = Tally::default();
    let t = lu_table(c.n, c.step());
    r.count(1);
    r.require(is(&t, P::Medial), || "not medial".into());
    r.require(!is(&t, P::RightDistributive), || "right distributive".into());
    r
}

fn unitary_k(c: &Case) -> Tally {
    let mut r = Tally::default();
    for s in perm_seqs(c) {
        r.count(1);
        if has_two_sided_neutral(&table_from_sequence(&s)) {
            r.require(c.step() == c.n - 1, || format!("{s}"));
        }
    }
    r
}

fn c_cyc(c: &Case) -> Tally {
    let mut r = Tally::default();
    for s in perm_seqs(c) {
        r.count(1);
        let t = table_from_sequence(&s);
        if is_group(&t) {
            r.require(c.step() == c.n - 1, || format!("{s}: group with k != n-1"));
            r.require(iso_to_cyclic(&t).is_some(), || format!("{s}: group not cyclic"));
        }
    }
    r
}

fn para(c: &Case) -> Tally {
    let mut r = Tally::default();
    let t = lu_table(c.n, c.step());
    for (p, expected) in left_unitary_characterize(c.n, c.step()) {
        r.count(1);
        r.require(is(&t, p) == expected, || format!("{p}: predicted {expected}"));
    }
    r
}

fn para_corollary(c: &Case) -> Tally {
    let mut r = Tally::default();
    let t = lu_table(c.n, c.step());
    r.count(1);
    r.require(is(&t, P::LeftModular) == is(&t, P::Paramedial), || {
        "left modular differs from paramedial".into()
    });
    if is(&t, P::RightModular) {
        r.require(
            is(&t, P::LeftModular) && is(&t, P::Elastic) && is(&t, P::Paramedial),
            || "right modular without the implied properties".into(),
        );
    }
    r.require(!is(&t, P::StronglyElastic), || "strongly elastic".into());
    r
}

fn embed_sources(n: usize, k: usize) -> Vec<KSequence> {
    let mut out: BTreeSet<KSequence> = BTreeSet::new();
    out.insert(KSequence::identity(n, k).expect("valid"));
    if let Ok(s) = idempotent_groupoid(n, k) {
        out.insert(s);
    }
    out.extend(cancellative_semigroups(n, k).expect("valid"));
    out.extend(constant_column_semigroups(n, k).expect("valid"));
    if n <= 4 {
        out.extend(sequences(n).map(|a| seq(n, k, a)));
    }
    out.into_iter().collect()
}

fn embed_check(c: &Case) -> Tally {
    let mut r = Tally::default();
    let (n, k, t) = (c.n, c.step(), c.t.expect("copies"));
    for s in embed_sources(n, k) {
        r.count(1);
        let q = table_from_sequence(&s);
        let e = embed(&s, t).expect("embeds");
        let b = &e.table;
        r.require(b.order() == (t + 1) * n, || format!("{s}: wrong order"));
        r.require(is_translatable_by(b, k, Criterion::Shift), || format!("{s}: not {k}-translatable"));
        let preserved = (1..=n).all(|i| {
            (1..=n).all(|j| b.get(e.map[i - 1], e.map[j - 1]) == e.map[q.get(i, j) - 1])
        });
        r.require(preserved, || format!("{s}: product not preserved"));
        if s.is_permutation() {
            r.require(is(b, P::LeftCancellative), || format!("{s}: cancellativity lost"));
        }
        let qn = left_neutrals(&q);
        r.expect(qn.is_empty() || !left_neutrals(b).is_empty(), || {
            format!("{s}: left neutral {qn:?} but the embedding has none")
        });
        if qn.contains(&1) {
            r.require(e.map[0] == 1 && left_neutrals(b).contains(&1), || {
                format!("{s}: left unitary lost")
            });
        }
    }
    r
}

/// Steps `k'` in `1..n` for which the dual of the table is
/// `k'`-translatable, checked cell by cell.
fn dual_steps(t: &CayleyTable) -> BTreeSet<usize> {
    let n = t.order();
    (1..n)
        .filter(|&k2| {
            (1..=n).all(|i| {
                (1..=n).all(|j| {
                    t.get(j, i) == t.get(rep((j + k2) as i64, n), rep(i as i64 + 1, n))
                })
            })
        })
        .collect()
}

fn dual(c: &Case) -> Tally {
    let mut r = Tally::default();
    let (n, k) = (c.n, c.step());
    let predicted: BTreeSet<usize> = (1..n).filter(|&s| rep((k * s) as i64, n) == 1).collect();
    for s in perm_seqs(c) {
        r.count(1);
        let t = table_from_sequence(&s);
        let got = dual_steps(&t);
        r.require(got == predicted, || format!("{s}: dual steps {got:?}"));
    }
    r
}

fn dual_corollaries(c: &Case) -> Tally {
    let mut r = Tally::default();
    let (n, k) = (c.n, c.step());
    let lu = lu_table(n, k);
    r.require(dual_steps(&lu).contains(&k) == is(&lu, P::Paramedial), || {
        "left unitary: self-dual step differs from paramediality".into()
    });
    for s in perm_seqs(c) {
        r.count(1);
        let t = table_from_sequence(&s);
        let d = dual_steps(&t);
        r.require(d.contains(&k) == (rep((k * k) as i64, n) == 1), || {
            format!("{s}: self-dual step")
        });
        for tt in 1..=n {
            let step = rep(n as i64 - (tt * k) as i64, n);
            let lhs = step != n && d.contains(&step);
            let rhs = rep((tt * k * k) as i64, n) == n - 1;
            r.require(lhs == rhs, || format!("{s}: t={tt} dual step {step}"));
        }
        r.require(is(&t, P::Alterable) == d.contains(&(n - k)), || {
            format!("{s}: alterable vs dual step n-k")
        });
    }
    r
}

fn eas_ee1(c: &Case) -> Tally {
    let mut r = Tally::default();
    let n = c.n;
    let k = c.step() as i64;
    for s in all_seqs(c) {
        r.count(1);
        let t = table_from_sequence(&s);
        let perm = s.is_permutation();
        for x in 1..=n {
            for y in 1..=n {
                for z in 1..=n {
                    let assoc = t.get(t.get(x, y), z) == t.get(x, t.get(y, z));
                    let (xi, yi, zi) = (x as i64, y as i64, z as i64);
                    let inner_l = s.at(k - k * xi + yi) as i64;
                    let inner_r = s.at(k - k * yi + zi) as i64;
                    let eas = s.at(k - k * inner_l + zi) == s.at(k - k * xi + inner_r);
                    r.require(assoc == eas, || format!("{s}: eas at ({x},{y},{z})"));
                    if perm {
                        let ee1 = is_zero_mod(zi - k * inner_l - (inner_r - k * xi), n);
                        r.require(assoc == ee1, || format!("{s}: ee1 at ({x},{y},{z})"));
                    }
                }
            }
        }
    }
    r
}

fn semi(c: &Case) -> Tally {
    let mut r = Tally::default();
    for s in perm_seqs(c) {
        r.count(1);
        let fast = semigroup_criterion(&s).expect("permutation");
        let slow = is(&table_from_sequence(&s), P::Associative);
        r.require(fast == slow, || format!("{s}: criterion {fast}, scan {slow}"));
    }
    r
}

fn lmonoid(c: &Case) -> Tally {
    let mut r = Tally::default();
    for s in all_seqs(c) {
        r.count(1);
        let t = table_from_sequence(&s);
        if !is(&t, P::Associative) {
            continue;
        }
        let neutrals = left_neutrals(&t);
        r.require(s.is_permutation() == !neutrals.is_empty(), || format!("{s}"));
        if s.is_permutation() {
            let e = left_neutral(&s).expect("semigroup");
            r.require(neutrals.contains(&e), || format!("{s}: formula gives {e}"));
        }
    }
    r
}

fn c_unit(c: &Case) -> Tally {
    let mut r = Tally::default();
    let (n, k) = (c.n, c.step());
    r.count(1);
    let t = lu_table(n, k);
    r.require(
        is(&t, P::Associative) == is_zero_mod((k + k * k) as i64, n),
        || "associativity differs from [k+k^2] = 0".into(),
    );
    r
}

fn ee3(c: &Case) -> Tally {
    let mut r = Tally::default();
    let (n, k) = (c.n, c.step());
    let t = ee3_table(k).expect("valid");
    r.count(1);
    r.require(t == lu_table(n, k), || "differs from the left unitary table".into());
    r.require(is(&t, P::Associative), || "not associative".into());
    r.require(left_neutrals(&t).contains(&1), || "1 is not left neutral".into());
    r.require(detect(&t).contains(k), || "not k-translatable".into());
    r.require(is(&t, P::LeftCancellative), || "not left cancellative".into());
    if k >= 2 {
        r.require(!is_group(&t), || "is a group".into());
        r.require(!is(&t, P::Commutative), || "commutative".into());
    }
    for y in 1..=n {
        for z in 1..=n {
            let count = (1..=n).filter(|&x| t.get(x, y) == z).count();
            let expected = if (y - 1) % k == (z - 1) % k { k } else { 0 };
            r.require(count == expected, || format!("x·{y} = {z}: {count} solutions"));
            r.expect(count == k, || {
                format!("x·{y} = {z} has {count} solutions, not k = {k}")
            });
        }
    }
    r
}

fn t_reord(c: &Case) -> Tally {
    let mut r = Tally::default();
    for s in semigroups(c) {
        r.count(1);
        let b = reorder_to_left_unitary(&s).expect("semigroup");
        let labels = KSequence::new(c.n, c.step(), b.as_slice().to_vec()).expect("valid");
        let p = Presentation::new(labels, b.clone()).expect("same order");
        let t = table_from_sequence(&s);
        r.require(p.table() == t, || format!("{s}: reordered table differs"));
        r.require(left_neutrals(&t).contains(&b.get(1)), || format!("{s}: b_1 not left neutral"));
    }
    r
}

fn c_izo(c: &Case) -> Tally {
    let mut r = Tally::default();
    let all = semigroups(c);
    for a in &all {
        for b in &all {
            r.count(1);
            let ok = iso_left_unitary(&Presentation::natural(a.clone()), &Presentation::natural(b.clone()))
                .map(|i| i.verified)
                .unwrap_or(false);
            r.require(ok, || format!("{a} vs {b}"));
        }
    }
    r
}

fn cyclic(c: &Case) -> Tally {
    let mut r = Tally::default();
    let n = c.n;
    let shifted: Vec<KSequence> = (0..n)
        .map(|sh| seq(n, n - 1, (1..=n).map(|i| rep((i + sh) as i64, n)).collect()))
        .collect();
    if n <= 7 {
        let found: Vec<KSequence> = perm_seqs(c)
            .filter(|s| (1..=n).all(|i| s.at(i as i64 + 1) == rep(s.at(i as i64) as i64 + 1, n)))
            .collect();
        let mut expected = shifted.clone();
        expected.sort();
        r.require(found == expected, || format!("{} sequences satisfy the shift rule", found.len()));
    }
    for s in shifted {
        r.count(1);
        let t = table_from_sequence(&s);
        r.require(is_group(&t) && iso_to_cyclic(&t).is_some(), || format!("{s}"));
    }
    r
}

fn c_semi(c: &Case) -> Tally {
    let mut r = Tally::default();
    let mut list = semigroups(c);
    if c.n <= 7 {
        let scanned: Vec<KSequence> = perm_seqs(c)
            .filter(|s| is(&table_from_sequence(s), P::Associative))
            .collect();
        r.require(scanned == list, || "scan and construction differ".into());
        list = scanned;
    }
    for s in list {
        r.count(1);
        r.require(iso_to_cyclic(&table_from_sequence(&s)).is_some(), || format!("{s}"));
    }
    r
}

fn no_idempotent_semigroup(c: &Case) -> Tally {
    let mut r = Tally::default();
    for s in all_seqs(c) {
        r.count(1);
        let t = table_from_sequence(&s);
        r.require(!(is(&t, P::Idempotent) && is(&t, P::Associative)), || format!("{s}"));
    }
    r
}

fn idemp(c: &Case) -> Tally {
    let mut r = Tally::default();
    for s in semigroups(c) {
        r.count(1);
        let t = table_from_sequence(&s);
        let e = idempotent_set(&t);
        r.require(idempotents_by_formula(&s).expect("semigroup") == e, || format!("{s}: formula"));
        let ln: BTreeSet<usize> = left_neutrals(&t).into_iter().collect();
        r.require(ln == e, || format!("{s}: left neutrals {ln:?}"));
        for &x in &e {
            for &y in &e {
                r.require(t.get(x, y) == y, || format!("{s}: {x}·{y} not right-zero"));
            }
        }
    }
    r
}

fn reord(c: &Case) -> Tally {
    let mut r = Tally::default();
    let (n, k) = (c.n, c.step());
    for s in semigroups(c) {
        let t = table_from_sequence(&s);
        if left_neutrals(&t).contains(&1) {
            r.count(1);
            r.require(idempotent_set(&t) == idempotents_with_neutral_one(n, k), || format!("{s}"));
        }
    }
    r
}

fn right_canc_semigroup(c: &Case) -> Tally {
    let mut r = Tally::default();
    let n = c.n;
    let mut seen = vec![0usize; n + 1];
    let mut stamp = 0;
    for s in all_seqs(c) {
        r.count(1);
        let right_cancellative = (1..=n).all(|col| {
            stamp += 1;
            (1..=n).all(|i| std::mem::replace(&mut seen[mul(&s, i, col)], stamp) != stamp)
        });
        if !right_cancellative {
            continue;
        }
        let t = table_from_sequence(&s);
        if is(&t, P::Associative) {
            r.require(c.step() == n - 1, || format!("{s}: k != n-1"));
            r.require(iso_to_cyclic(&t).is_some(), || format!("{s}: not Z_n"));
        }
    }
    r
}

fn ak_pm1(c: &Case) -> Tally {
    let mut r = Tally::default();
    for s in semigroups(c) {
        let ak = s.at(c.step() as i64);
        if ak == 1 || ak == c.n - 1 {
            r.count(1);
            r.require(iso_to_cyclic(&table_from_sequence(&s)).is_some(), || format!("{s}"));
        }
    }
    r
}

fn decomp(c: &Case) -> Tally {
    let mut r = Tally::default();
    let (n, k) = (c.n, c.step());
    for s in semigroups(c) {
        r.count(1);
        let t = table_from_sequence(&s);
        match decompose(&t, &s) {
            Ok(d) => {
                r.require(d.m == n / gcd(n, k) && d.t == gcd(n, k), || {
                    format!("{s}: m={} t={}", d.m, d.t)
                });
                r.require(d.m == least_annihilator(k, n), || format!("{s}: m"));
            }
            Err(e) => r.require(false, || format!("{s}: {e}")),
        }
    }
    r
}

fn ideals_check(c: &Case) -> Tally {
    let mut r = Tally::default();
    for s in semigroups(c) {
        r.count(1);
        let t = table_from_sequence(&s);
        let d = match decompose(&t, &s) {
            Ok(d) => d,
            Err(e) => {
                r.require(false, || format!("{s}: {e}"));
                continue;
            }
        };
        let n = c.n;
        for comp in &d.components {
            let left_ideal = (1..=n).all(|q| comp.iter().all(|&x| comp.contains(&t.get(q, x))));
            r.require(left_ideal, || format!("{s}: {comp:?} is not a left ideal"));
        }
        r.require(d.components.len() == d.t && d.components.iter().all(|c| c.len() == d.m), || {
            format!("{s}: component sizes")
        });
        let own = |comp: &[usize]| *comp.iter().find(|x| d.idempotents.contains(x)).expect("Q·e contains e");
        let e0 = own(&d.components[0]);
        let base = sub_table(&t, &d.components[0]);
        for comp in &d.components {
            let ei = own(comp);
            // x·e0 ↦ x·ei
            let map: Vec<usize> = d.components[0]
                .iter()
                .map(|&y| {
                    let x = (1..=n).find(|&x| t.get(x, e0) == y).expect("in component");
                    let img = t.get(x, ei);
                    comp.iter().position(|&z| z == img).expect("in component") + 1
                })
                .collect();
            let ok = match (&base, sub_table(&t, comp)) {
                (Some(a), Some(b)) => is_isomorphism(a, &b, &map),
                _ => false,
            };
            r.require(ok, || format!("{s}: component {comp:?} not isomorphic to the first"));
        }
    }
    r
}

fn c_decomp(c: &Case) -> Tally {
    let mut r = Tally::default();
    let k = c.step();
    for s in semigroups(c) {
        r.count(1);
        let t = table_from_sequence(&s);
        match decompose(&t, &s) {
            Ok(d) => {
                r.require(d.t == k && d.m == k + 1, || format!("{s}: m={} t={}", d.m, d.t));
                for comp in &d.components {
                    let cyclic = sub_table(&t, comp).and_then(|g| iso_to_cyclic(&g)).is_some();
                    r.require(cyclic, || format!("{s}: {comp:?} not cyclic"));
                }
            }
            Err(e) => r.require(false, || format!("{s}: {e}")),
        }
    }
    r
}

fn semiprime(c: &Case) -> Tally {
    let mut r = Tally::default();
    for s in semigroups(c) {
        let t = table_from_sequence(&s);
        for side in [Side::Left, Side::Right] {
            match ideals(&t, side) {
                Ok(list) => {
                    for i in list {
                        r.count(1);
                        r.require(i.semiprime, || format!("{s}: {side:?} ideal {:?}", i.elements));
                    }
                }
                Err(e) => r.require(false, || format!("{s}: {e}")),
            }
        }
    }
    r
}

fn list_516(c: &Case) -> Tally {
    let mut r = Tally::default();
    let (n, k) = (c.n, c.step());
    for s in semigroups(c) {
        r.count(1);
        let t = table_from_sequence(&s);
        for p in [
            P::Medial,
            P::ConditionallyCommutative,
            P::LeftCommutative,
            P::LeftRegular,
            P::RightRegular,
            P::Regular,
            P::IntraRegular,
            P::Orthodox,
            P::CliffordRight,
        ] {
            r.require(is(&t, p), || format!("{s}: not {p}"));
        }
        r.require(is(&t, P::Anticommutative) == (gcd(1 + k, n) == 1), || {
            format!("{s}: anticommutative vs gcd(1+k, n)")
        });
        if gcd(k, n) == 1 {
            r.require(is(&t, P::CliffordLeft), || format!("{s}: not clifford-left"));
        }
    }
    r
}

fn paramedial_cyclic(c: &Case) -> Tally {
    let mut r = Tally::default();
    for s in semigroups(c) {
        r.count(1);
        let t = table_from_sequence(&s);
        if is(&t, P::Paramedial) {
            r.require(iso_to_cyclic(&t).is_some(), || format!("{s}"));
        }
    }
    r
}

fn column_constant(s: &KSequence, t: &CayleyTable) -> bool {
    let n = s.order();
    (1..=n).all(|i| (1..=n).all(|j| t.get(i, j) == s.values()[j - 1]))
}

fn tsem(c: &Case) -> Tally {
    let mut r = Tally::default();
    let (n, k) = (c.n, c.step());
    let mut family = Vec::new();
    for s in all_seqs(c) {
        r.count(1);
        let t = table_from_sequence(&s);
        let lhs = is(&t, P::Associative) && column_constant(&s, &t);
        let rhs = (1..=n as i64).all(|i| {
            let a = s.at(i);
            a == s.at(i + k as i64) && a == s.at(a as i64)
        });
        r.require(lhs == rhs, || format!("{s}: semigroup {lhs}, condition {rhs}"));
        if rhs {
            family.push(s);
        }
    }
    let built = constant_column_semigroups(n, k).expect("valid");
    r.require(built == family, || "constructed family differs from the scan".into());
    r
}

fn tsem_c1(c: &Case) -> Tally {
    let mut r = Tally::default();
    let n = c.n;
    for s in all_seqs(c) {
        let a = s.values();
        let shape1 = a[0] == n && a[1] == n;
        let shape2 = a[0] == 1 && (2..=n).any(|j| a[j - 1] == rep(j as i64 + 1, n));
        if !(shape1 || shape2) {
            continue;
        }
        let t = table_from_sequence(&s);
        if is(&t, P::Associative) {
            r.count(1);
            r.require(column_constant(&s, &t), || format!("{s}"));
        }
    }
    r
}

fn tsem_c2(c: &Case) -> Tally {
    let mut r = Tally::default();
    let (n, k) = (c.n as i64, c.step() as i64);
    let nn = c.n;
    for s in all_seqs(c) {
        let t = table_from_sequence(&s);
        let assoc = is(&t, P::Associative);
        for j in 1..=n {
            let ju = j as usize;
            if t.get(ju, ju) != ju || t.get(ju, rep(j - 1, nn)) != ju {
                continue;
            }
            r.count(1);
            let f = |x: i64| t.get(ju, rep(x, nn));
            let shifts = (1..=n).all(|s2| {
                let mid = f(j - 1 + s2);
                f(j - 1 + s2 - k) == mid && mid == f(j - 1 + s2 + k)
            });
            // the value j·b_s sits at position [value - j + 1] of the reordering
            let fixed = (1..=n).all(|s2| {
                let mid = f(j - 1 + s2);
                mid == f(mid as i64)
            });
            let cond = shifts && fixed;
            r.require(assoc == cond, || format!("{s}: j={j} semigroup {assoc}, condition {cond}"));
            let literal = shifts
                && (1..=n).all(|s2| {
                    let mid = f(j - 1 + s2);
                    mid == f(j - 1 + mid as i64)
                });
            r.expect(assoc == literal, || {
                format!("{s}: j={j} semigroup {assoc}, but j·[j-1+s] = j·[(j-1)+(j·[j-1+s])] gives {literal}")
            });
        }
    }
    r
}

fn nsemi(c: &Case) -> Tally {
    let mut r = Tally::default();
    let (n, k) = (c.n, c.step() as i64);
    for s in all_seqs(c) {
        let t = table_from_sequence(&s);
        if t.get(1, 1) != 1 || t.get(1, n) != 1 {
            continue;
        }
        r.count(1);
        let f = |x: i64| t.get(1, rep(x, n));
        let cond = (1..=n as i64).all(|x| {
            let mid = f(x);
            f(x - k) == mid && mid == f(x + k) && mid == f(mid as i64)
        });
        let assoc = is(&t, P::Associative);
        r.require(assoc == cond, || format!("{s}: semigroup {assoc}, condition {cond}"));
    }
    r
}

fn divid(c: &Case) -> Tally {
    let mut r = Tally::default();
    let n = c.n;
    for t in 1..=8usize {
        for x in 1..=(3 * n) as i64 {
            r.count(1);
            let tn = t * n;
            r.require(rep(t as i64 * x, tn) == t * rep(x, n), || format!("(a) t={t} x={x}"));
            r.require(
                rep(t as i64 * (x - 1), tn) == t * rep(rep(x, n) as i64 - 1, n),
                || format!("(b) t={t} x={x}"),
            );
        }
    }
    if let Some(k) = (1..=n).find(|&k| k + k * k == n) {
        for t in (1..=k).filter(|t| k % t == 0) {
            r.count(1);
            let big = (k + (t - 1) * n) as i64;
            r.require(is_zero_mod(big + big * big, t * n), || format!("(c) k={k} t={t}"));
        }
    }
    r
}

fn copy_checks(r: &mut Tally, u: &crate::constructions::LabeledUnion, neutral_local: impl Fn(usize) -> usize) {
    let spec = u.spec;
    let (n, k) = (spec.n, spec.k);
    let lu = Presentation::natural(KSequence::identity(n, k).expect("valid"));
    for i in 1..=spec.t {
        let labels = u.copy(i);
        let left_ideal = (1..=u.table.order())
            .all(|q| labels.iter().all(|&x| u.copy_of[u.table.get(q, x) - 1].0 == i));
        r.require(left_ideal, || format!("copy {i} is not a left ideal"));
        let ct = match u.copy_table(i) {
            Ok(ct) => ct,
            Err(e) => {
                r.require(false, || e.to_string());
                continue;
            }
        };
        let first = KSequence::new(n, k, ct.row(1).collect()).expect("valid");
        r.require(table_from_sequence(&first) == ct, || format!("copy {i} is not {k}-translatable"));
        let iso = iso_left_unitary(&lu, &Presentation::natural(first)).map(|i| i.verified);
        r.require(iso.unwrap_or(false), || format!("copy {i} is not isomorphic to the component"));
        let e = neutral_local(i);
        r.require((1..=n).all(|s| ct.get(e, s) == s), || format!("copy {i}: {e} is not left neutral"));
    }
}

fn t62(c: &Case) -> Tally {
    let mut r = Tally::default();
    let (n, k, t) = (c.n, c.step(), c.t.expect("copies"));
    let spec = UnionSpec::new(n, k, t).expect("t divides k");
    let u = match union_t62(spec) {
        Ok(u) => u,
        Err(e) => {
            r.require(false, || e.to_string());
            return r;
        }
    };
    r.count(1);
    let tab = &u.table;
    r.require(*tab == lu_table(t * n, k), || "differs from the rotation construction".into());
    r.require(detect(tab).contains(k), || "not k-translatable".into());
    r.require(is(tab, P::Associative), || "not associative".into());
    r.require(left_neutrals(tab).contains(&1), || "1 is not left neutral".into());
    let q = spec.q as i64;
    copy_checks(&mut r, &u, |i| rep(1 - q * (1 - i as i64), n));
    r
}

fn t63(c: &Case) -> Tally {
    let mut r = Tally::default();
    let (n, k, t) = (c.n, c.step(), c.t.expect("copies"));
    let spec = UnionSpec::new(n, k, t).expect("t divides k");
    let u = match union_t63(spec) {
        Ok(u) => u,
        Err(e) => {
            r.require(false, || e.to_string());
            return r;
        }
    };
    r.count(1);
    let tab = &u.table;
    let step = k + (t - 1) * n;
    r.require(u.step == step, || format!("step {}", u.step));
    if step < t * n {
        r.require(detect(tab).contains(step), || format!("not {step}-translatable"));
        r.require(*tab == lu_table(t * n, step), || "differs from the rotation construction".into());
    }
    r.require(is(tab, P::Associative), || "not associative".into());
    r.require(left_neutrals(tab).contains(&1), || "1 is not left neutral".into());
    let q = spec.q;
    copy_checks(&mut r, &u, |i| q * (i - 1) + 1);
    r
}

fn dec_semi(c: &Case) -> Tally {
    let mut r = Tally::default();
    let (n, k) = (c.n, c.step());
    let p = match pair_union(k) {
        Ok(p) => p,
        Err(e) => {
            r.require(false, || e.to_string());
            return r;
        }
    };
    r.count(1);
    let u = union_t63(UnionSpec::new(n, k, 2).expect("even")).expect("valid");
    r.require(p.table == u.table, || "differs from the general union".into());
    r.require(detect(&p.table).contains(k + n), || "not (k+n)-translatable".into());
    r.require(is(&p.table, P::Associative), || "not associative".into());
    r.require(left_neutrals(&p.table).contains(&1), || "1 is not left neutral".into());
    let q_labels = p.copy(1);
    let g_labels = p.copy(2);
    let in_copy = |x: usize, c: usize| p.copy_of[x - 1].0 == c;
    let qg = q_labels.iter().all(|&a| g_labels.iter().all(|&b| in_copy(p.table.get(a, b), 2)));
    let gq = g_labels.iter().all(|&a| q_labels.iter().all(|&b| in_copy(p.table.get(a, b), 1)));
    r.require(qg && gq, || "Q*G = G or G*Q = Q fails".into());
    r.require(p.copy_table(1).ok() == Some(lu_table(n, k)), || "(Q,*) differs from (Q,·)".into());
    let g = p.copy_table(2).expect("closed");
    let first = KSequence::new(n, k, g.row(1).collect()).expect("valid");
    let iso = iso_left_unitary(
        &Presentation::natural(KSequence::identity(n, k).expect("valid")),
        &Presentation::natural(first),
    );
    r.require(iso.map(|i| i.verified).unwrap_or(false), || "(G,*) not isomorphic".into());
    r
}
