//! Whitehead reduction: greedy descent to a minimal word, and closure of a
//! minimal word under length-preserving moves.
//!
//! In F₂ a Whitehead automorphism `(A, x)` with `x, x̄ ∉ A` has
//! `A ⊆ {y, ȳ}` for the other generator `y`. `A = {y, ȳ}` is conjugation and
//! fixes every cyclic word, and on cyclic words `({ȳ}, x̄)` acts as `({y}, x)`.
//! So the eight permutations plus the four one-letter representatives
//! connect any two minimal words of the same class through minimal words, and the closure computed
//! by [`minimal_class`] is the full set of minimal words in the class.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::automorphism::{all_permutations, one_letter_representatives, Automorphism};
use crate::error::{Error, Result};
use crate::minimality::{is_minimal, is_root};
use crate::word::{CyclicWord, Word};

/// Default ceiling on the number of members [`minimal_class`] will collect.
pub const DEFAULT_CLASS_LIMIT: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub automorphism: Automorphism,
    pub word: CyclicWord,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} (len {})", self.automorphism, self.word, self.word.len())
    }
}

/// The chain of strictly shortening automorphisms applied by [`minimize`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub start: CyclicWord,
    pub steps: Vec<TraceStep>,
}

impl ReductionTrace {
    pub fn lengths(&self) -> Vec<usize> {
        std::iter::once(self.start.len()).chain(self.steps.iter().map(|s| s.word.len())).collect()
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.lengths().windows(2).all(|p| p[1] < p[0])
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

/// Repeatedly applies the first one-letter representative that shortens the
/// word until none does.
pub fn minimize(w: &CyclicWord) -> (CyclicWord, ReductionTrace) {
    let mut current = w.clone();
    let mut trace = ReductionTrace { start: w.clone(), steps: Vec::new() };
    let reps = one_letter_representatives();
    'descend: loop {
        for s in &reps {
            let image = s.apply_cyclic(&current);
            if image.len() < current.len() {
                trace.steps.push(TraceStep { automorphism: (*s).into(), word: image.clone() });
                current = image;
                continue 'descend;
            }
        }
        break;
    }
    (current, trace)
}

pub fn minimize_word(w: &Word) -> (CyclicWord, ReductionTrace) {
    minimize(&w.cyclic_reduce())
}

/// The minimal words equivalent to a given word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceClass {
    pub length: usize,
    pub is_root_class: bool,
    pub members: BTreeSet<CyclicWord>,
}

impl EquivalenceClass {
    pub fn contains(&self, w: &CyclicWord) -> bool {
        self.members.contains(w)
    }

    /// Least member; a canonical name for the class.
    pub fn representative(&self) -> &CyclicWord {
        self.members.first().expect("classes are nonempty")
    }
}

/// Moves used for the closure: the eight permutations, then the four
/// one-letter representatives.
pub fn closure_moves() -> Vec<Automorphism> {
    all_permutations()
        .into_iter()
        .map(Automorphism::from)
        .chain(one_letter_representatives().into_iter().map(Automorphism::from))
        .collect()
}

pub fn minimal_class(w: &CyclicWord) -> Result<EquivalenceClass> {
    minimal_class_with_limit(w, DEFAULT_CLASS_LIMIT)
}

/// Breadth-first closure of `minimize(w)` under permutations and level
/// one-letter moves.
pub fn minimal_class_with_limit(w: &CyclicWord, limit: usize) -> Result<EquivalenceClass> {
    let (start, _) = minimize(w);
    let length = start.len();
    let moves = closure_moves();
    let mut members = BTreeSet::from([start.clone()]);
    let mut frontier = VecDeque::from([start.clone()]);
    while let Some(u) = frontier.pop_front() {
        for m in &moves {
            let image = m.apply_cyclic(&u);
            if image.len() != length || members.contains(&image) {
                continue;
            }
            if members.len() >= limit {
                return Err(Error::ClassTooLarge { limit });
            }
            members.insert(image.clone());
            frontier.push_back(image);
        }
    }
    Ok(EquivalenceClass { length, is_root_class: is_root(&start), members })
}

/// Equivalence under Aut F₂: equal minimal length and a shared minimal class.
pub fn are_equivalent(u: &Word, v: &Word) -> Result<bool> {
    let (mu, _) = minimize_word(u);
    let (mv, _) = minimize_word(v);
    if mu.len() != mv.len() {
        return Ok(false);
    }
    if mu == mv {
        return Ok(true);
    }
    Ok(minimal_class(&mu)?.contains(&mv))
}

/// True when every member agrees with the class's root flag. A `false`
/// result means a bug, not a counterexample.
pub fn verify_root_class(c: &EquivalenceClass) -> bool {
    c.members.iter().all(|m| is_root(m) == c.is_root_class && is_minimal(m) && m.len() == c.length)
}
