//! Exhaustive enumeration, the property census and theorem campaigns.

mod campaigns;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::check_order;
use crate::error::{Error, Result};
use crate::properties::{holds, PropertyName};
use crate::table::KSequence;
use crate::translatable::table_from_sequence;

pub use campaigns::{campaign, campaigns, Campaign};

/// Largest order for which every first row is scanned.
pub const ALL_SEQUENCES_MAX_ORDER: usize = 6;
/// Largest order for which every permutation first row is scanned.
pub const PERMUTATIONS_MAX_ORDER: usize = 8;

/// Permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Permutations {
    Permutations {
        next: Some((1..=n).collect()),
    }
}

pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let mut a = cur.clone();
        if let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) {
            let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).expect("pivot");
            a.swap(i - 1, j);
            a[i..].reverse();
            self.next = Some(a);
        }
        Some(cur)
    }
}

/// All sequences over `1..=n` of length `n` in lexicographic order.
pub fn sequences(n: usize) -> Sequences {
    Sequences {
        n,
        next: (n > 0).then(|| vec![1; n]),
    }
}

pub struct Sequences {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for Sequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let mut a = cur.clone();
        for d in a.iter_mut().rev() {
            if *d < self.n {
                *d += 1;
                self.next = Some(a);
                return Some(cur);
            }
            *d = 1;
        }
        Some(cur)
    }
}

/// Which first rows [`enumerate`] keeps.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SequenceFilter {
    pub permutation_only: bool,
    pub required: BTreeSet<PropertyName>,
    pub forbidden: BTreeSet<PropertyName>,
}

impl SequenceFilter {
    pub fn validate(&self) -> Result<()> {
        if let Some(p) = self.required.intersection(&self.forbidden).next() {
            return Err(Error::Precondition(format!(
                "`{p}` is both required and forbidden"
            )));
        }
        Ok(())
    }

    /// Semigroup-only properties count as failing on non-associative tables.
    pub fn accepts(&self, seq: &KSequence) -> bool {
        if self.permutation_only && !seq.is_permutation() {
            return false;
        }
        if self.required.is_empty() && self.forbidden.is_empty() {
            return true;
        }
        let t = table_from_sequence(seq);
        let has = |p: PropertyName| holds(&t, p).unwrap_or(false);
        self.required.iter().all(|&p| has(p)) && !self.forbidden.iter().any(|&p| has(p))
    }
}

fn scan_bound(n: usize, permutation_only: bool) -> Result<()> {
    let (limit, what) = if permutation_only {
        (PERMUTATIONS_MAX_ORDER, "order for a permutation scan")
    } else {
        (ALL_SEQUENCES_MAX_ORDER, "order for a scan of all first rows")
    };
    if n > limit {
        return Err(Error::ResourceLimit {
            what,
            value: n,
            limit,
        });
    }
    Ok(())
}

/// The sequences with step `k` whose tables pass `filter`, in lexicographic
/// order of the first row. Work is split by first entry across the current
/// rayon pool and merged in order.
pub fn enumerate(n: usize, k: usize, filter: &SequenceFilter) -> Result<Vec<KSequence>> {
    check_order(n)?;
    if k < 1 || k >= n {
        return Err(Error::InvalidStep { n, k });
    }
    filter.validate()?;
    scan_bound(n, filter.permutation_only)?;
    let chunks: Vec<Vec<KSequence>> = (1..=n)
        .into_par_iter()
        .map(|first| {
            let rows: Box<dyn Iterator<Item = Vec<usize>>> = if filter.permutation_only {
                Box::new(permutations(n).filter(move |a| a[0] == first))
            } else {
                Box::new(sequences(n).filter(move |a| a[0] == first))
            };
            rows.map(|a| KSequence::new(n, k, a).expect("valid by construction"))
                .filter(|s| filter.accepts(s))
                .collect()
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

/// One census bucket: sequences of step `k` having every listed property.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CatalogKey {
    pub k: usize,
    pub properties: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub k: usize,
    pub properties: Vec<String>,
    pub count: usize,
}

/// Census of first rows of order `n` by step and single property, split by
/// whether the first row is a permutation. All first rows are scanned for
/// `n <= 6`, permutations only for `n <= 8`.
pub fn catalog(n: usize) -> Result<BTreeMap<CatalogKey, usize>> {
    check_order(n)?;
    if n < 2 {
        return Err(Error::InvalidOrder(n as i64));
    }
    let permutation_only = n > ALL_SEQUENCES_MAX_ORDER;
    scan_bound(n, permutation_only)?;
    let props: Vec<PropertyName> = PropertyName::ALL
        .iter()
        .copied()
        .filter(|p| !p.requires_associativity())
        .collect();
    let per_k: Vec<BTreeMap<CatalogKey, usize>> = (1..n)
        .into_par_iter()
        .map(|k| {
            let mut counts: BTreeMap<CatalogKey, usize> = BTreeMap::new();
            let key = |props: Vec<&str>| CatalogKey {
                k,
                properties: props.into_iter().map(String::from).collect(),
            };
            let rows: Box<dyn Iterator<Item = Vec<usize>>> = if permutation_only {
                Box::new(permutations(n))
            } else {
                Box::new(sequences(n))
            };
            if !permutation_only {
                counts.insert(key(vec![]), 0);
            }
            counts.insert(key(vec!["permutation"]), 0);
            for &p in &props {
                if !permutation_only {
                    counts.insert(key(vec![p.as_str()]), 0);
                }
                counts.insert(key(vec!["permutation", p.as_str()]), 0);
            }
            for a in rows {
                let seq = KSequence::new(n, k, a).expect("valid by construction");
                let perm = seq.is_permutation();
                let t = table_from_sequence(&seq);
                let mut bump = |props: Vec<&str>| *counts.get_mut(&key(props)).expect("key") += 1;
                if !permutation_only {
                    bump(vec![]);
                }
                if perm {
                    bump(vec!["permutation"]);
                }
                for &p in &props {
                    if holds(&t, p).expect("applicable") {
                        if !permutation_only {
                            bump(vec![p.as_str()]);
                        }
                        if perm {
                            bump(vec!["permutation", p.as_str()]);
                        }
                    }
                }
            }
            counts
        })
        .collect();
    Ok(per_k.into_iter().flatten().collect())
}

/// The census as a sorted list, the shape written by the CLI.
pub fn catalog_entries(n: usize) -> Result<Vec<CatalogEntry>> {
    Ok(catalog(n)?
        .into_iter()
        .map(|(key, count)| CatalogEntry {
            k: key.k,
            properties: key.properties,
            count,
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A documented discrepancy with the published statement.
    ExpectedFail,
}

/// One instance group of a campaign, e.g. all first rows of order `n` and
/// step `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Case {
    pub n: usize,
    pub k: Option<usize>,
    pub t: Option<usize>,
}

impl Case {
    pub fn nk(n: usize, k: usize) -> Self {
        Case {
            n,
            k: Some(k),
            t: None,
        }
    }

    pub fn n(n: usize) -> Self {
        Case { n, k: None, t: None }
    }

    fn step(&self) -> usize {
        self.k.expect("campaign case carries a step")
    }
}

/// Result for one case; serializes to one JSON line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub theorem: String,
    pub n: usize,
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    pub status: Status,
    pub witness: Option<String>,
    #[serde(skip)]
    pub instances: u64,
}

impl CaseResult {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("case result serializes")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignReport {
    pub theorem_id: String,
    pub max_n: usize,
    pub instances_checked: u64,
    pub cases: Vec<CaseResult>,
    pub failures: Vec<CaseResult>,
    pub expected_fails: usize,
    pub elapsed: Duration,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn json_lines(&self) -> String {
        self.cases
            .iter()
            .map(|c| c.to_json_line() + "\n")
            .collect()
    }
}

/// Runs a campaign with its default bound on the current rayon pool.
pub fn verify(theorem_id: &str, max_n: Option<usize>) -> Result<CampaignReport> {
    let c = campaign(theorem_id)?;
    let max_n = max_n.unwrap_or(c.default_max_n);
    run_campaign(c, max_n)
}

/// Runs a campaign with `jobs` worker threads; the report does not depend on
/// the number of workers.
pub fn verify_with_jobs(theorem_id: &str, max_n: Option<usize>, jobs: usize) -> Result<CampaignReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start workers: {e}")))?;
    pool.install(|| verify(theorem_id, max_n))
}

fn run_campaign(c: &Campaign, max_n: usize) -> Result<CampaignReport> {
    if max_n > c.limit_max_n {
        return Err(Error::ResourceLimit {
            what: "campaign max-n",
            value: max_n,
            limit: c.limit_max_n,
        });
    }
    check_order(max_n.max(1))?;
    let start = Instant::now();
    let cases = (c.cases)(max_n);
    let cases: Vec<CaseResult> = cases
        .par_iter()
        .map(|case| {
            let out = (c.check)(case);
            CaseResult {
                theorem: c.id.to_string(),
                n: case.n,
                k: case.k,
                t: case.t,
                status: out.status(),
                witness: out.witness(),
                instances: out.instances,
            }
        })
        .collect();
    let failures: Vec<CaseResult> = cases
        .iter()
        .filter(|c| c.status == Status::Fail)
        .cloned()
        .collect();
    Ok(CampaignReport {
        theorem_id: c.id.to_string(),
        max_n,
        instances_checked: cases.iter().map(|c| c.instances).sum(),
        expected_fails: cases
            .iter()
            .filter(|c| c.status == Status::ExpectedFail)
            .count(),
        failures,
        cases,
        elapsed: start.elapsed(),
    })
}

/// Accumulates the outcome of one case: the first failure wins, a documented
/// discrepancy is kept only when nothing failed.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    pub instances: u64,
    failure: Option<String>,
    expected: Option<String>,
}

impl Tally {
    pub fn count(&mut self, by: u64) {
        self.instances += by;
    }

    /// Records a failure the first time `ok` is false.
    pub fn require(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok && self.failure.is_none() {
            self.failure = Some(msg());
        }
    }

    /// Records a known discrepancy the first time `ok` is false.
    pub fn expect(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok && self.expected.is_none() {
            self.expected = Some(msg());
        }
    }

    fn status(&self) -> Status {
        match (&self.failure, &self.expected) {
            (Some(_), _) => Status::Fail,
            (None, Some(_)) => Status::ExpectedFail,
            (None, None) => Status::Pass,
        }
    }

    fn witness(&self) -> Option<String> {
        self.failure.clone().or_else(|| self.expected.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iterators_are_lexicographic() {
        let p: Vec<_> = permutations(3).collect();
        assert_eq!(
            p,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1]
            ]
        );
        assert_eq!(permutations(6).count(), 720);
        let s: Vec<_> = sequences(2).collect();
        assert_eq!(s, vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        assert_eq!(sequences(4).count(), 256);
        let mut sorted: Vec<_> = sequences(3).collect();
        sorted.sort();
        assert_eq!(sorted, sequences(3).collect::<Vec<_>>());
    }

    #[test]
    fn enumerate_examples() {
        let f = SequenceFilter {
            permutation_only: true,
            required: BTreeSet::from([PropertyName::Associative]),
            ..Default::default()
        };
        assert_eq!(enumerate(6, 2, &f).unwrap().len(), 3);
        let idem = SequenceFilter {
            required: BTreeSet::from([PropertyName::Idempotent]),
            ..Default::default()
        };
        let got = enumerate(4, 2, &idem).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].values(), &[1, 4, 3, 2]);
        assert!(enumerate(6, 3, &idem).unwrap().is_empty());
        assert!(matches!(
            enumerate(7, 2, &idem),
            Err(Error::ResourceLimit { .. })
        ));
        let bad = SequenceFilter {
            required: BTreeSet::from([PropertyName::Medial]),
            forbidden: BTreeSet::from([PropertyName::Medial]),
            ..Default::default()
        };
        assert!(enumerate(4, 1, &bad).is_err());
    }

    #[test]
    fn catalog_examples() {
        let key = |k, p: &[&str]| CatalogKey {
            k,
            properties: p.iter().map(|s| s.to_string()).collect(),
        };
        let c4 = catalog(4).unwrap();
        assert_eq!(c4[&key(2, &["idempotent"])], 1);
        assert_eq!(c4[&key(2, &[])], 256);
        assert_eq!(c4[&key(2, &["permutation"])], 24);
        let c5 = catalog(5).unwrap();
        assert_eq!(c5[&key(1, &["idempotent"])], 0);
        assert!(catalog(9).is_err());
    }
}
