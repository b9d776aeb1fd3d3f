//! Executable checks of the minimality and root-word theory over exhaustive
//! word corpora, collected into a JSON report keyed by check name.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::automorphism::{
    all_one_letter, is_level, is_level_by_counts, one_letter_representatives, predict_profile, CountUpdate,
    WhiteheadAuto,
};
use crate::enumeration::{partition_into_classes, scan_length, CyclicWords, MAX_ENUMERATION_LEN};
use crate::error::Result;
use crate::minimality::{children, is_minimal, is_minimal_oracle, is_root, is_root_oracle};
use crate::search::verify_root_class;
use crate::word::{CyclicWord, Letter};

/// Per-check length bounds. Each is clamped to the requested `max_len`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub oracle: usize,
    pub count_update: usize,
    pub alternating: usize,
    pub growth: usize,
    pub powers: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { oracle: 12, count_update: 10, alternating: 14, growth: 10, powers: 8 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub max_len: usize,
    pub corpus: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub max_len: usize,
    pub complete: bool,
    pub passed: bool,
    pub checks: BTreeMap<String, CheckResult>,
}

/// Runs a predicate over every canonical cyclic word of length `1..=max_len`
/// that passes `filter`, stopping at the first failure.
fn sweep<F, P>(max_len: usize, filter: F, mut pred: P) -> CheckResult
where
    F: Fn(&CyclicWord) -> bool,
    P: FnMut(&CyclicWord) -> bool,
{
    let mut corpus = 0;
    for n in 1..=max_len {
        for w in CyclicWords::new(n).filter(|w| filter(w)) {
            corpus += 1;
            if !pred(&w) {
                return CheckResult { max_len, corpus, passed: false, counterexample: Some(w.to_string()) };
            }
        }
    }
    CheckResult { max_len, corpus, passed: true, counterexample: None }
}

fn all(_: &CyclicWord) -> bool {
    true
}

/// `(xy) = (yx)` for every pair of letters from different generators.
pub fn pair_balance_holds(w: &CyclicWord) -> bool {
    Letter::ALL.iter().all(|&x| {
        Letter::ALL
            .iter()
            .filter(|&&y| y != x && y != x.inverse())
            .all(|&y| w.count_wrapping(&[x, y]) == w.count_wrapping(&[y, x]))
    })
}

pub fn pair_sum_holds(w: &CyclicWord) -> bool {
    w.profile().map(|p| p.weighted_total() == w.len()).unwrap_or(true)
}

/// Predicted counts agree with the measured image for all four
/// representatives, together with the level-gap identity.
pub fn count_update_holds(w: &CyclicWord) -> bool {
    one_letter_representatives().iter().all(|s| {
        let v = s.apply_cyclic(w);
        let predicted = predict_profile(s, w).expect("representatives are one-letter");
        let measured = CountUpdate::measure(s, &v).expect("representatives are one-letter");
        predicted == measured && level_gap_holds(s, w, &measured)
    })
}

fn level_gap_holds(s: &WhiteheadAuto, w: &CyclicWord, image: &CountUpdate) -> bool {
    let before = CountUpdate::measure(s, w).expect("one-letter");
    image.yy - image.xx == before.y_xinv - before.yx - before.xx
}

pub fn level_criterion_holds(w: &CyclicWord) -> bool {
    all_one_letter()
        .iter()
        .all(|s| is_level(&(*s).into(), w) == is_level_by_counts(s, w).expect("one-letter"))
}

pub fn inner_triviality_holds(w: &CyclicWord) -> bool {
    Letter::ALL.iter().all(|&x| {
        let y = x.other_generator();
        let inner = WhiteheadAuto::new(&[y, y.inverse()], x).expect("valid");
        inner.apply_cyclic(w) == *w
    })
}

/// Minimal ⇔ root ⇔ every one-letter representative is level.
pub fn alternating_triad_holds(w: &CyclicWord) -> bool {
    let minimal = is_minimal(w);
    let root = is_root(w);
    let all_level = one_letter_representatives().iter().all(|s| is_level(&(*s).into(), w));
    minimal == root && root == all_level
}

pub fn children_minimal_holds(w: &CyclicWord) -> bool {
    children(w).iter().all(is_minimal)
}

pub fn powers_hold(w: &CyclicWord) -> bool {
    let r = is_root(w);
    r == is_root(&w.pow(2)) && r == is_root(&w.pow(3))
}

/// `a^{n+1} (ba)^{n-1} b^{n+1}`, a root word of length `4n` with
/// `λ = n + 1`.
pub fn extremal_root(n: usize) -> CyclicWord {
    assert!(n >= 1);
    let mut letters = vec![Letter::A; n + 1];
    for _ in 1..n {
        letters.extend([Letter::B, Letter::A]);
    }
    letters.extend(std::iter::repeat_n(Letter::B, n + 1));
    CyclicWord::from_letters(letters)
}

/// Runs every check with the default bounds.
pub fn run_verification(max_len: usize, threads: usize) -> Result<Report> {
    run_verification_with(max_len, threads, Bounds::default())
}

pub fn run_verification_with(max_len: usize, threads: usize, bounds: Bounds) -> Result<Report> {
    let complete = max_len <= MAX_ENUMERATION_LEN;
    let census_len = max_len.min(MAX_ENUMERATION_LEN);
    let b = |cap: usize| cap.min(max_len);
    let mut checks = BTreeMap::new();
    let mut put = |name: &str, r: CheckResult| {
        checks.insert(name.to_string(), r);
    };

    put("pair-balance", sweep(b(bounds.count_update), all, pair_balance_holds));
    put("pair-count-sum", sweep(b(bounds.count_update), all, pair_sum_holds));
    put("minimality-inequality", sweep(b(bounds.oracle), all, |w| is_minimal(w) == is_minimal_oracle(w)));
    put("root-word-equality", sweep(b(bounds.oracle), all, |w| is_root(w) == is_root_oracle(w)));
    put("cyclic-word-count-update", sweep(b(bounds.count_update), all, count_update_holds));
    put("level-criterion", sweep(b(bounds.count_update), all, level_criterion_holds));
    put("inner-triviality", sweep(b(bounds.count_update), all, inner_triviality_holds));
    put("children-of-minimal", sweep(b(bounds.growth), is_minimal, children_minimal_holds));
    put("root-powers", sweep(b(bounds.powers), all, powers_hold));
    // Single letters are alternating and minimal but are children of the
    // empty word, so the triad starts at length 2.
    put("alternating-triad", sweep(b(bounds.alternating), |w| w.len() >= 2 && w.is_alternating(), alternating_triad_holds));

    // Census-based checks share one scan per length.
    let mut divisibility = CheckResult { max_len: census_len, corpus: 0, passed: true, counterexample: None };
    let mut run_bound = divisibility.clone();
    let mut balance = divisibility.clone();
    let mut uniformity = divisibility.clone();
    let mut level_images = divisibility.clone();
    let fail = |r: &mut CheckResult, w: &CyclicWord| {
        if r.passed {
            r.passed = false;
            r.counterexample = Some(w.to_string());
        }
    };
    for n in 1..=census_len {
        let scan = scan_length(n, threads)?;
        divisibility.corpus += scan.total;
        if n % 4 != 0 {
            if let Some(w) = scan.roots.first() {
                fail(&mut divisibility, w);
            }
        } else {
            let witness = extremal_root(n / 4);
            if !scan.roots.contains(&witness) || witness.longest_run() != n / 4 + 1 {
                fail(&mut run_bound, &witness);
            }
        }
        for w in &scan.roots {
            run_bound.corpus += 1;
            balance.corpus += 1;
            level_images.corpus += 1;
            if w.longest_run() > n / 4 + 1 {
                fail(&mut run_bound, w);
            }
            if w.letter_count(Letter::A) != w.letter_count(Letter::B) {
                fail(&mut balance, w);
            }
            for s in one_letter_representatives() {
                let v = s.apply_cyclic(w);
                if v.len() == w.len() && !is_root(&v) {
                    fail(&mut level_images, w);
                }
            }
        }
        for class in partition_into_classes(&scan.roots)? {
            uniformity.corpus += class.members.len();
            if !(class.is_root_class && verify_root_class(&class)) {
                fail(&mut uniformity, class.representative());
            }
        }
    }
    put("divisibility-by-4", divisibility);
    put("run-bound", run_bound);
    put("root-letter-balance", balance);
    put("root-class-uniformity", uniformity);
    put("level-images-of-roots", level_images);

    let passed = checks.values().all(|c| c.passed);
    Ok(Report { max_len, complete, passed: passed && complete, checks })
}
