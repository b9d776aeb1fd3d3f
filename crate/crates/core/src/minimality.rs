//! Minimality and root-word tests, the child/parent ("growing") relation,
//! and direct-application oracles for both tests.
//!
//! `w` is minimal when `|(ab) − (ab̄)| ≤ min((aa), (bb))` and a root word
//! when `|(ab) − (ab̄)| = (aa) = (bb)`. The empty word is minimal and not a
//! root; single letters are minimal and, being children of the empty word,
//! never roots.
//!
//! The `*_oracle` functions share no counting code with the count tests:
//! they apply the four one-letter representatives and walk the parents.

use std::collections::BTreeSet;

use crate::automorphism::one_letter_representatives;
use crate::error::{Error, Result};
use crate::word::{CyclicWord, Letter, PairCounts};

pub fn is_minimal(w: &CyclicWord) -> bool {
    match w.profile() {
        Ok(p) => minimal_profile(&p),
        Err(_) => true,
    }
}

pub(crate) fn minimal_profile(p: &PairCounts) -> bool {
    p.imbalance() <= p.n_aa.min(p.n_bb)
}

pub(crate) fn root_profile(p: &PairCounts) -> bool {
    p.imbalance() == p.n_aa && p.n_aa == p.n_bb
}

/// Minimality by direct application: no one-letter representative shortens `w`.
pub fn is_minimal_oracle(w: &CyclicWord) -> bool {
    one_letter_representatives().iter().all(|s| s.apply_cyclic(w).len() >= w.len())
}

pub fn is_root(w: &CyclicWord) -> bool {
    match w.profile() {
        // equality implies the minimality inequality
        Ok(p) => root_profile(&p),
        Err(_) => false,
    }
}

/// Root test from the definition: minimal, and no parent is minimal.
pub fn is_root_oracle(w: &CyclicWord) -> bool {
    !w.is_empty() && is_minimal_oracle(w) && !parents(w).iter().any(is_minimal_oracle)
}

/// Words obtained by lengthening one run by a letter. The empty word's
/// children are the four single letters.
pub fn children(w: &CyclicWord) -> BTreeSet<CyclicWord> {
    if w.is_empty() {
        return Letter::ALL.iter().map(|&l| CyclicWord::from_letters([l])).collect();
    }
    let s = w.letters();
    (0..s.len())
        .map(|i| {
            let mut grown = Vec::with_capacity(s.len() + 1);
            grown.extend_from_slice(&s[..=i]);
            grown.extend_from_slice(&s[i..]);
            CyclicWord::canonical_rotation(&grown).expect("doubling a letter keeps the word cyclically reduced")
        })
        .collect()
}

/// Words obtained by shortening one run of length ≥ 2 by a letter. A
/// single letter has the empty word as its only parent.
pub fn parents(w: &CyclicWord) -> BTreeSet<CyclicWord> {
    let s = w.letters();
    let n = s.len();
    match n {
        0 => BTreeSet::new(),
        1 => BTreeSet::from([CyclicWord::empty()]),
        _ => (0..n)
            .filter(|&i| s[i] == s[(i + n - 1) % n])
            .map(|i| {
                let mut shrunk = s.to_vec();
                shrunk.remove(i);
                CyclicWord::canonical_rotation(&shrunk)
                    .expect("removing a repeated letter keeps the word cyclically reduced")
            })
            .collect(),
    }
}

/// Concatenates rotations of `w` and `v` that begin with the same letter.
///
/// The smallest letter occurring in both words is used, with the least
/// rotation of each word starting at that letter. Both inputs are expected
/// to be minimal, in which case so is the result.
pub fn concat_minimal_check(w: &CyclicWord, v: &CyclicWord) -> Result<CyclicWord> {
    let shared = Letter::ALL
        .into_iter()
        .find(|l| w.letters().contains(l) && v.letters().contains(l))
        .ok_or(Error::NoCommonLetter)?;
    let least_from = |u: &CyclicWord| {
        (0..u.len())
            .filter(|&i| u.letters()[i] == shared)
            .map(|i| u.rotation(i))
            .min()
            .expect("shared letter occurs")
    };
    let mut joined = least_from(w);
    joined.extend(least_from(v));
    let out = CyclicWord::canonical_rotation(&joined)?;
    debug_assert!(!(is_minimal(w) && is_minimal(v)) || is_minimal(&out));
    Ok(out)
}
