//! Exhaustive generation of canonical cyclic words and the root-word census.
//!
//! [`CyclicWords`] walks freely reduced letter strings depth first in
//! lexicographic order and prunes every prefix that is not a prenecklace
//! (a prefix of some least rotation). The standard FKM bookkeeping keeps the
//! Lyndon period `p` of the current prefix: the next letter must be at least
//! `s[i - p]`, and a full string is a least rotation iff `p` divides its
//! length. The wrap-around reduction condition is checked at the leaves.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minimality::{is_minimal, minimal_profile, root_profile};
use crate::search::{minimal_class, EquivalenceClass};
use crate::word::{CyclicWord, Letter};

/// Largest length any enumeration entry point accepts.
pub const MAX_ENUMERATION_LEN: usize = 20;

pub(crate) fn check_guard(max_len: usize) -> Result<()> {
    if max_len > MAX_ENUMERATION_LEN {
        return Err(Error::LengthGuard { requested: max_len, limit: MAX_ENUMERATION_LEN });
    }
    Ok(())
}

/// Streams every canonical cyclic word of one length, in increasing order.
#[derive(Clone, Debug)]
pub struct CyclicWords {
    len: usize,
    // depth of the fixed prefix; the walk never backtracks into it
    floor: usize,
    // emit prefixes of length `len` without the necklace/wrap test
    prefixes_only: bool,
    buf: Vec<Letter>,
    // period[i] is the Lyndon period of buf[..=i]
    period: Vec<usize>,
    // cursor[d] is the next letter index to try at depth d; len = buf.len() + 1
    cursor: Vec<u8>,
    done: bool,
}

impl CyclicWords {
    pub fn new(len: usize) -> Self {
        CyclicWords::with_prefix(len, &[])
    }

    /// The words of length `len` that begin with `prefix`.
    pub fn with_prefix(len: usize, prefix: &[Letter]) -> Self {
        let mut it = CyclicWords {
            len,
            floor: prefix.len(),
            prefixes_only: false,
            buf: Vec::with_capacity(len),
            period: Vec::with_capacity(len),
            cursor: vec![0],
            done: prefix.len() > len,
        };
        for &l in prefix {
            if !it.try_push(l) {
                it.done = true;
                break;
            }
        }
        it
    }

    /// Freely reduced prenecklaces of length `k`. Every canonical word of
    /// length at least `k` extends exactly one of them.
    fn prefixes(k: usize) -> Vec<Vec<Letter>> {
        let mut it = CyclicWords::new(k);
        it.prefixes_only = true;
        let mut out = Vec::new();
        while let Some(p) = it.next_letters() {
            out.push(p);
        }
        out
    }

    fn try_push(&mut self, l: Letter) -> bool {
        let d = self.buf.len();
        let p = if d == 0 {
            1
        } else {
            if l == self.buf[d - 1].inverse() {
                return false;
            }
            let p = self.period[d - 1];
            let reference = self.buf[d - p];
            if l < reference {
                return false;
            }
            if l == reference {
                p
            } else {
                d + 1
            }
        };
        self.buf.push(l);
        self.period.push(p);
        self.cursor.push(0);
        true
    }

    fn pop(&mut self) {
        self.buf.pop();
        self.period.pop();
        self.cursor.pop();
    }

    fn leaf_ok(&self) -> bool {
        if self.prefixes_only {
            return true;
        }
        let n = self.len;
        if n == 0 {
            return true;
        }
        n.is_multiple_of(self.period[n - 1]) && (n < 2 || self.buf[n - 1] != self.buf[0].inverse())
    }

    fn next_letters(&mut self) -> Option<Vec<Letter>> {
        while !self.done {
            let d = self.buf.len();
            if d == self.len {
                let out = self.leaf_ok().then(|| self.buf.clone());
                if d == self.floor {
                    self.done = true;
                } else {
                    self.pop();
                }
                if out.is_some() {
                    return out;
                }
                continue;
            }
            let c = self.cursor[d];
            if c == 4 {
                if d == self.floor {
                    self.done = true;
                } else {
                    self.pop();
                }
                continue;
            }
            self.cursor[d] += 1;
            self.try_push(Letter::from_index(c));
        }
        None
    }
}

impl Iterator for CyclicWords {
    type Item = CyclicWord;

    fn next(&mut self) -> Option<CyclicWord> {
        self.next_letters().map(CyclicWord::from_canonical_unchecked)
    }
}

pub fn enumerate_cyclic_words(n: usize) -> CyclicWords {
    CyclicWords::new(n)
}

/// Tallies for one length.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LengthScan {
    pub total: usize,
    pub minimal: usize,
    /// Root words in increasing order.
    pub roots: Vec<CyclicWord>,
}

impl LengthScan {
    fn absorb(mut self, other: LengthScan) -> LengthScan {
        self.total += other.total;
        self.minimal += other.minimal;
        self.roots.extend(other.roots);
        self
    }
}

fn scan_stream(words: CyclicWords) -> LengthScan {
    let mut scan = LengthScan::default();
    for w in words {
        scan.total += 1;
        match w.profile() {
            Ok(p) => {
                if minimal_profile(&p) {
                    scan.minimal += 1;
                    if root_profile(&p) {
                        scan.roots.push(w);
                    }
                }
            }
            // the empty word
            Err(_) => scan.minimal += 1,
        }
    }
    scan
}

// Depth of the prefix split used to hand subtrees to workers.
const SPLIT_DEPTH: usize = 4;

/// Scans every canonical cyclic word of length `n`. With `threads > 1` the
/// word space is split by prefix; results are merged in prefix order, so the
/// output does not depend on the thread count.
pub fn scan_length(n: usize, threads: usize) -> Result<LengthScan> {
    if threads <= 1 || n <= SPLIT_DEPTH {
        return Ok(scan_stream(CyclicWords::new(n)));
    }
    let prefixes = CyclicWords::prefixes(SPLIT_DEPTH);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::ThreadPool(e.to_string()))?;
    let parts: Vec<LengthScan> =
        pool.install(|| prefixes.par_iter().map(|p| scan_stream(CyclicWords::with_prefix(n, p))).collect());
    Ok(parts.into_iter().fold(LengthScan::default(), LengthScan::absorb))
}

/// Root words of every length `1..=max_len`.
pub fn enumerate_root_words(max_len: usize) -> Result<Vec<(usize, BTreeSet<CyclicWord>)>> {
    enumerate_root_words_threaded(max_len, 1)
}

pub fn enumerate_root_words_threaded(
    max_len: usize,
    threads: usize,
) -> Result<Vec<(usize, BTreeSet<CyclicWord>)>> {
    check_guard(max_len)?;
    (1..=max_len)
        .map(|n| Ok((n, scan_length(n, threads)?.roots.into_iter().collect())))
        .collect()
}

/// Splits a set of root words of one length into minimal classes, in order
/// of least member.
pub fn partition_into_classes<'a, I>(roots: I) -> Result<Vec<EquivalenceClass>>
where
    I: IntoIterator<Item = &'a CyclicWord>,
{
    let mut seen: BTreeSet<CyclicWord> = BTreeSet::new();
    let mut classes = Vec::new();
    for w in roots {
        if seen.contains(w) {
            continue;
        }
        let class = minimal_class(w)?;
        seen.extend(class.members.iter().cloned());
        classes.push(class);
    }
    Ok(classes)
}

/// Root-word classes of every length up to `max_len`, shortest first.
pub fn enumerate_root_classes(max_len: usize) -> Result<Vec<EquivalenceClass>> {
    let mut out = Vec::new();
    for (_, roots) in enumerate_root_words(max_len)? {
        out.extend(partition_into_classes(&roots)?);
    }
    Ok(out)
}

/// Census line for one length.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub length: usize,
    pub total_cyclic_words: usize,
    pub minimal_count: usize,
    pub root_count: usize,
    pub root_class_count: usize,
    pub max_run_over_roots: usize,
}

impl CensusRecord {
    /// No roots off multiples of four, and the run bound on roots.
    pub fn invariants_hold(&self) -> bool {
        (self.length.is_multiple_of(4) || self.root_count == 0)
            && (self.root_count == 0 || self.max_run_over_roots <= self.length / 4 + 1)
    }
}

pub fn census_record(n: usize, threads: usize) -> Result<CensusRecord> {
    check_guard(n)?;
    let scan = scan_length(n, threads)?;
    let classes = partition_into_classes(&scan.roots)?;
    Ok(CensusRecord {
        length: n,
        total_cyclic_words: scan.total,
        minimal_count: scan.minimal,
        root_count: scan.roots.len(),
        root_class_count: classes.len(),
        max_run_over_roots: scan.roots.iter().map(CyclicWord::longest_run).max().unwrap_or(0),
    })
}

/// One record for each length `1..=max_len`.
pub fn census(max_len: usize, threads: usize) -> Result<Vec<CensusRecord>> {
    check_guard(max_len)?;
    (1..=max_len).map(|n| census_record(n, threads)).collect()
}

/// Minimal words of one length, in increasing order.
pub fn minimal_words(n: usize) -> impl Iterator<Item = CyclicWord> {
    CyclicWords::new(n).filter(is_minimal)
}
