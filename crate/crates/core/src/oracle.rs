//! Brute-force verification of the clustering/IET correspondence over all
//! small instances, plus enumeration of clustering words.
//!
//! The verifiers deliberately cross two independent code paths: the
//! transform-side verdict (`clustering_report`) against the dynamical-side
//! construction (minimal discrete IETs and their periodic trajectories).

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::bwt::{bwt, clustering_image, clustering_report, inverse_bwt, InverseResult};
use crate::error::{Error, Result};
use crate::iet_continuous::from_discrete;
use crate::iet_discrete::DiscreteIet;
use crate::word::{ParikhVector, Permutation, Word};

/// Outcome of one exhaustive sweep.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    /// Instances examined.
    pub instances: usize,
    /// Per-class tallies (clustering / non-clustering, minimal / non-minimal, ...).
    pub counts: BTreeMap<String, usize>,
    /// Counterexample descriptors; empty iff the checked equivalence held everywhere.
    pub failures: Vec<String>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    fn new(suite: &str) -> Self {
        Self {
            suite: suite.into(),
            instances: 0,
            counts: BTreeMap::new(),
            failures: Vec::new(),
            elapsed_ms: 0,
        }
    }

    fn bump(&mut self, class: &str) {
        *self.counts.entry(class.into()).or_insert(0) += 1;
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Line-oriented text rendering (one `key=value` per line, then failures).
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite: {}\n", self.suite));
        out.push_str(&format!("instances: {}\n", self.instances));
        for (k, v) in &self.counts {
            out.push_str(&format!("count.{k}: {v}\n"));
        }
        out.push_str(&format!("elapsed_ms: {}\n", self.elapsed_ms));
        out.push_str(&format!("failures: {}\n", self.failures.len()));
        for f in &self.failures {
            out.push_str(&format!("failure: {f}\n"));
        }
        out
    }
}

/// All primitive words of length `n` over `{1..r}` in which every letter
/// occurs, in lexicographic order.
pub fn primitive_words(r: u8, n: usize) -> Result<impl Iterator<Item = Word>> {
    if r == 0 || n == 0 {
        return Err(Error::EmptyWord);
    }
    if (r as usize) > n {
        return Err(Error::AlphabetLargerThanLength);
    }
    Ok(WordOdometer { letters: vec![1; n], r, done: false }.filter(|w| {
        w.has_full_support() && w.is_primitive()
    }))
}

struct WordOdometer {
    letters: Vec<u8>,
    r: u8,
    done: bool,
}

impl Iterator for WordOdometer {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let current = Word::new(self.letters.clone(), self.r).expect("letters in range");
        // increment base-r, most significant first for lexicographic order
        let mut i = self.letters.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.letters[i] < self.r {
                self.letters[i] += 1;
                for l in &mut self.letters[i + 1..] {
                    *l = 1;
                }
                break;
            }
        }
        Some(current)
    }
}

/// All length vectors with `r` positive entries summing to `total`.
fn compositions(total: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(total: usize, r: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if r == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 1..=total - (r - 1) {
            prefix.push(first);
            rec(total - first, r - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if r >= 1 && total >= r {
        rec(total, r, &mut Vec::new(), &mut out);
    }
    out
}

/// Checks the clustering <=> ww-in-minimal-trajectory equivalence for every
/// primitive full-support word with `r` letters and length up to `n_max`:
/// the transform verdict must coincide, permutation included, with the
/// existence of a minimal discrete IET (lengths = the word's Parikh vector)
/// whose periodic trajectory contains `ww`. Every thousandth clustering word
/// is additionally replayed through the continuous rational IET.
pub fn verify_theorem1(r: u8, n_max: usize) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("theorem1");
    let non_identity: Vec<Permutation> = Permutation::all(r)
        .into_iter()
        .filter(|p| !p.is_identity())
        .collect();

    for n in (r as usize).max(1)..=n_max {
        let words = match primitive_words(r, n) {
            Ok(it) => it,
            Err(_) => continue,
        };
        for w in words {
            report.instances += 1;
            let verdict = clustering_report(&w);
            let lengths = w.parikh().counts().to_vec();

            // dynamical side: permutations whose minimal IET trajectory contains ww
            let mut matches: Vec<&Permutation> = Vec::new();
            for pi in &non_identity {
                let Ok(t) = DiscreteIet::new(lengths.clone(), pi.clone()) else {
                    continue;
                };
                if let Some(cycle) = t.clustering_word() {
                    if cycle.is_conjugate(&w) {
                        matches.push(pi);
                    }
                }
            }

            match (&verdict.permutation, matches.as_slice()) {
                (Some(pi), [only]) if pi == *only => {
                    report.bump("clustering");
                    if report.counts.get("clustering").is_some_and(|c| c % 1000 == 1) {
                        if let Some(f) = continuous_replay_failure(&w, pi) {
                            report.failures.push(f);
                        } else {
                            report.bump("continuous_checked");
                        }
                    }
                }
                (None, []) => report.bump("non_clustering"),
                (got, found) => report.failures.push(format!(
                    "w={w}: transform verdict {:?} vs IET matches {:?}",
                    got.as_ref().map(|p| p.to_string()),
                    found.iter().map(|p| p.to_string()).collect::<Vec<_>>()
                )),
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis();
    report
}

/// Replays a clustering word through the rational continuous IET; `None` means
/// the (3) => (4) step held for this sample.
fn continuous_replay_failure(w: &Word, pi: &Permutation) -> Option<String> {
    let lengths = w.parikh().counts().to_vec();
    let t = DiscreteIet::new(lengths, pi.clone()).ok()?;
    let c = from_discrete(&t);
    let n = t.point_count();
    let discrete = t.trajectory(1, 2 * n, None).ok()?;
    let continuous = c.trajectory_word(&crate::exact::ExactReal::zero(), 2 * n).ok()?;
    if discrete == continuous {
        None
    } else {
        Some(format!("w={w}: continuous trajectory diverged from discrete"))
    }
}

/// Round-trips every primitive full-support word through `inverse_bwt` and
/// checks that distinct conjugacy classes keep distinct images.
pub fn verify_injectivity(r: u8, n_max: usize) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("injectivity");
    for n in (r as usize).max(1)..=n_max {
        let words = match primitive_words(r, n) {
            Ok(it) => it,
            Err(_) => continue,
        };
        let mut image_to_class: BTreeMap<Word, Word> = BTreeMap::new();
        for w in words {
            report.instances += 1;
            let image = bwt(&w);
            let canonical = w.canonical_conjugate();
            match inverse_bwt(&image) {
                InverseResult::PrimitiveAntecedent { antecedent, .. } if antecedent == canonical => {
                    report.bump("round_trip_ok");
                }
                other => {
                    report
                        .failures
                        .push(format!("w={w}: inverse gave {other:?}, expected class of {canonical}"));
                    continue;
                }
            }
            match image_to_class.get(&image) {
                Some(existing) if *existing != canonical => report.failures.push(format!(
                    "image {image} shared by classes {existing} and {canonical}"
                )),
                Some(_) => {}
                None => {
                    image_to_class.insert(image, canonical);
                }
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis();
    report
}

/// For every length vector with `r` positive entries and total at most
/// `length_bound`, and every non-identity permutation: a non-minimal IET's
/// run word must have no primitive antecedent; a minimal IET's run word must
/// invert to the IET's own cycle word.
pub fn verify_nonsurjectivity(r: u8, length_bound: usize) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("nonsurjectivity");
    let non_identity: Vec<Permutation> = Permutation::all(r)
        .into_iter()
        .filter(|p| !p.is_identity())
        .collect();
    for total in (r as usize)..=length_bound {
        for lengths in compositions(total, r as usize) {
            let parikh = ParikhVector(lengths.clone());
            for pi in &non_identity {
                report.instances += 1;
                let t = match DiscreteIet::new(lengths.clone(), pi.clone()) {
                    Ok(t) => t,
                    Err(e) => {
                        report.failures.push(format!("lengths={lengths:?} pi={pi}: {e}"));
                        continue;
                    }
                };
                let image = match clustering_image(pi, &parikh) {
                    Ok(w) => w,
                    Err(e) => {
                        report.failures.push(format!("lengths={lengths:?} pi={pi}: {e}"));
                        continue;
                    }
                };
                let inverted = inverse_bwt(&image);
                if t.is_minimal() {
                    report.bump("minimal");
                    let cycle = t.clustering_word().expect("minimal map has a cycle word");
                    match inverted {
                        InverseResult::PrimitiveAntecedent { antecedent, .. }
                            if antecedent.is_conjugate(&cycle) => {}
                        other => report.failures.push(format!(
                            "minimal lengths={lengths:?} pi={pi}: inverse gave {other:?}"
                        )),
                    }
                } else {
                    report.bump("non_minimal");
                    if inverted.has_primitive_antecedent() {
                        report.failures.push(format!(
                            "non-minimal lengths={lengths:?} pi={pi}: image {image} has a primitive antecedent"
                        ));
                    }
                }
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis();
    report
}

/// All clustering words of length `n` over exactly `r` letters, one canonical
/// representative per conjugacy class, with their permutations, in
/// lexicographic order.
pub fn clustering_census(r: u8, n: usize) -> Result<Vec<(Word, Permutation)>> {
    let mut classes: BTreeMap<Word, Permutation> = BTreeMap::new();
    for w in primitive_words(r, n)? {
        let verdict = clustering_report(&w);
        if let Some(pi) = verdict.permutation {
            classes.entry(w.canonical_conjugate()).or_insert(pi);
        }
    }
    Ok(classes.into_iter().collect())
}

/// Balance test for binary words: over every factor length, the per-window
/// counts of letter 1 may spread by at most 1.
pub fn is_balanced(w: &Word) -> bool {
    max_imbalance(w.letters(), w.len()) <= 1
}

/// Largest spread `max - min` of letter-1 counts over all factors of each
/// length up to `max_len`.
pub fn max_imbalance(letters: &[u8], max_len: usize) -> usize {
    let n = letters.len();
    let mut worst = 0usize;
    for len in 1..=max_len.min(n) {
        let mut lo = usize::MAX;
        let mut hi = 0usize;
        for window in letters.windows(len) {
            let ones = window.iter().filter(|&&l| l == 1).count();
            lo = lo.min(ones);
            hi = hi.max(ones);
        }
        worst = worst.max(hi - lo);
    }
    worst
}
