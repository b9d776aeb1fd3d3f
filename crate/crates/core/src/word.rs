//! Letters, freely reduced words and cyclic words over the alphabet
//! `{a, b, ā, b̄}`, together with the cyclic subword counts that the
//! minimality and root-word tests are built on.
//!
//! Text form: `a`, `b` for the generators and `A`, `B` for their inverses.
//! The empty string is the identity.
//!
//! Cyclic words are stored in canonical rotation: the lexicographically least
//! rotation under the letter order `a < b < A < B`. Two cyclically reduced
//! words are conjugate exactly when their canonical forms are equal.
//!
//! Counting is cyclic throughout. A pattern is matched at each of the `n`
//! starting positions of a length-`n` word, reading with wrap-around, and
//! `(v)_w` counts matches of `v` and of `v⁻¹`. The public
//! [`CyclicWord::subword_count`] rejects patterns longer than the word; the
//! internal counters used by [`CyclicWord::profile`] and the count-update
//! predictions keep wrapping, so a single letter `x` has `(xx) = 1`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// One of the four letters of F₂.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Letter {
    A = 0,
    B = 1,
    AInv = 2,
    BInv = 3,
}

impl Letter {
    /// All letters in canonical order `a < b < ā < b̄`.
    pub const ALL: [Letter; 4] = [Letter::A, Letter::B, Letter::AInv, Letter::BInv];

    #[inline]
    pub const fn from_index(i: u8) -> Letter {
        match i & 3 {
            0 => Letter::A,
            1 => Letter::B,
            2 => Letter::AInv,
            _ => Letter::BInv,
        }
    }

    #[inline]
    pub const fn index(self) -> u8 {
        self as u8
    }

    #[inline]
    pub const fn inverse(self) -> Letter {
        Letter::from_index(self as u8 ^ 2)
    }

    /// True for `a` and `ā`.
    #[inline]
    pub const fn is_a_type(self) -> bool {
        self as u8 & 1 == 0
    }

    #[inline]
    pub const fn is_positive(self) -> bool {
        (self as u8) < 2
    }

    /// The generator of the other pair with the same sign (`a ↔ b`, `ā ↔ b̄`).
    #[inline]
    pub const fn other_generator(self) -> Letter {
        Letter::from_index(self as u8 ^ 1)
    }

    pub const fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::AInv => 'A',
            Letter::BInv => 'B',
        }
    }

    pub const fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            'A' => Some(Letter::AInv),
            'B' => Some(Letter::BInv),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    text.chars()
        .enumerate()
        .map(|(position, c)| Letter::from_char(c).ok_or(Error::InvalidCharacter { position, found: c }))
        .collect()
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[Letter]) -> fmt::Result {
    let s: String = letters.iter().map(|l| l.to_char()).collect();
    f.pad(&s)
}

/// Free reduction with a cancellation stack.
pub(crate) fn reduce_letters<I: IntoIterator<Item = Letter>>(raw: I) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for l in raw {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub(crate) fn is_freely_reduced(letters: &[Letter]) -> bool {
    letters.windows(2).all(|p| p[1] != p[0].inverse())
}

pub(crate) fn is_cyclically_reduced(letters: &[Letter]) -> bool {
    is_freely_reduced(letters)
        && (letters.len() < 2 || letters[letters.len() - 1] != letters[0].inverse())
}

/// Start index of the least rotation (two-pointer minimum-expression scan).
pub(crate) fn least_rotation_start(s: &[Letter]) -> usize {
    let n = s.len();
    if n < 2 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = s[(i + k) % n];
        let b = s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

fn rotate_to_least(letters: &mut [Letter]) {
    let start = least_rotation_start(letters);
    letters.rotate_left(start);
}

/// Count of start positions at which `pattern` (or, with `both`, its
/// inverse) is read cyclically from `letters`. Wraps as often as needed.
pub(crate) fn cyclic_occurrences(letters: &[Letter], pattern: &[Letter], both: bool) -> usize {
    let n = letters.len();
    if n == 0 || pattern.is_empty() {
        return 0;
    }
    let forward = |i: usize| pattern.iter().enumerate().all(|(k, &l)| letters[(i + k) % n] == l);
    let backward = |i: usize| {
        pattern.iter().rev().enumerate().all(|(k, &l)| letters[(i + k) % n] == l.inverse())
    };
    (0..n).filter(|&i| forward(i) || (both && backward(i))).count()
}

/// A freely reduced element of F₂.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn free_reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Self {
        Word { letters: reduce_letters(raw) }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(Word::free_reduce(parse_letters(text)?))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn pow(&self, n: usize) -> Self {
        Word::free_reduce(std::iter::repeat_n(self.letters.iter().copied(), n).flatten())
    }

    /// `u · self · u⁻¹`, freely reduced.
    pub fn conjugate_by(&self, u: &Word) -> Self {
        u * self * u.inverse()
    }

    /// The canonical cyclic word of this element's conjugacy class.
    pub fn cyclic_reduce(&self) -> CyclicWord {
        CyclicWord::from_word(self)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl Mul<&Word> for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        Word::free_reduce(self.letters.iter().chain(rhs.letters.iter()).copied())
    }
}

impl Mul<Word> for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

impl Mul<Word> for &Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        self * &rhs
    }
}

/// The four cyclic two-letter counts that determine minimality:
/// `(aa)`, `(bb)`, `(ab)` and `(ab̄)`.
///
/// `(ba)` and `(b̄a)` are not stored since they always equal `(ab)` and
/// `(ab̄)` respectively.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairCounts {
    pub n_aa: usize,
    pub n_bb: usize,
    pub n_ab: usize,
    #[serde(rename = "n_aB")]
    pub n_a_binv: usize,
}

impl PairCounts {
    /// `|(ab) − (ab̄)|`.
    pub fn imbalance(&self) -> usize {
        self.n_ab.abs_diff(self.n_a_binv)
    }

    /// `(aa) + (bb) + 2(ab) + 2(ab̄)`, which equals the word length.
    pub fn weighted_total(&self) -> usize {
        self.n_aa + self.n_bb + 2 * self.n_ab + 2 * self.n_a_binv
    }
}

/// A cyclically reduced word in canonical (least) rotation; one value per
/// conjugacy class of F₂.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord {
    letters: Vec<Letter>,
}

impl CyclicWord {
    pub fn empty() -> Self {
        CyclicWord { letters: Vec::new() }
    }

    /// Cancels inverse pairs from both ends, then rotates to canonical form.
    pub fn from_word(w: &Word) -> Self {
        let s = w.letters();
        let (mut lo, mut hi) = (0, s.len());
        while hi - lo >= 2 && s[hi - 1] == s[lo].inverse() {
            lo += 1;
            hi -= 1;
        }
        let mut letters = s[lo..hi].to_vec();
        rotate_to_least(&mut letters);
        CyclicWord { letters }
    }

    /// Cyclic reduction of an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(raw: I) -> Self {
        CyclicWord::from_word(&Word::free_reduce(raw))
    }

    /// Canonical rotation of a sequence that must already be cyclically
    /// reduced.
    pub fn canonical_rotation(letters: &[Letter]) -> Result<Self> {
        if !is_cyclically_reduced(letters) {
            return Err(Error::NotCyclicallyReduced);
        }
        let mut letters = letters.to_vec();
        rotate_to_least(&mut letters);
        Ok(CyclicWord { letters })
    }

    /// Wraps a sequence known to be canonical. Used by the enumerator.
    pub(crate) fn from_canonical_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(is_cyclically_reduced(&letters));
        debug_assert_eq!(least_rotation_start(&letters), 0);
        CyclicWord { letters }
    }

    /// Parses and cyclically reduces.
    pub fn parse(text: &str) -> Result<Self> {
        Ok(CyclicWord::from_word(&Word::parse(text)?))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The canonical representative viewed as a linear word.
    pub fn to_word(&self) -> Word {
        Word { letters: self.letters.clone() }
    }

    pub fn inverse(&self) -> Self {
        CyclicWord::from_letters(self.letters.iter().rev().map(|l| l.inverse()))
    }

    /// `wⁿ`; powers of a cyclically reduced word stay cyclically reduced.
    pub fn pow(&self, n: usize) -> Self {
        let mut letters = self.letters.repeat(n);
        rotate_to_least(&mut letters);
        CyclicWord { letters }
    }

    /// Rotation of the canonical representative starting at `start`.
    pub fn rotation(&self, start: usize) -> Vec<Letter> {
        let mut r = self.letters.clone();
        if !r.is_empty() {
            let k = start % r.len();
            r.rotate_left(k);
        }
        r
    }

    /// `(v)_w`: occurrences of `pattern` or its inverse at the `|w|` cyclic
    /// start positions.
    pub fn subword_count(&self, pattern: &Word) -> Result<usize> {
        self.check_pattern(pattern)?;
        Ok(cyclic_occurrences(&self.letters, pattern.letters(), true))
    }

    /// `{v}_w`: occurrences of `pattern` alone.
    pub fn directed_count(&self, pattern: &Word) -> Result<usize> {
        self.check_pattern(pattern)?;
        Ok(cyclic_occurrences(&self.letters, pattern.letters(), false))
    }

    fn check_pattern(&self, pattern: &Word) -> Result<()> {
        if pattern.is_empty() {
            return Err(Error::EmptyPattern);
        }
        if pattern.len() > self.len() {
            return Err(Error::PatternTooLong { pattern: pattern.len(), word: self.len() });
        }
        Ok(())
    }

    /// Cyclic count of a pattern and its inverse, allowed to wrap more than
    /// once on short words.
    pub(crate) fn count_wrapping(&self, pattern: &[Letter]) -> usize {
        cyclic_occurrences(&self.letters, pattern, true)
    }

    /// Two-letter counts from a single pass over the `|w|` cyclic adjacencies.
    pub fn profile(&self) -> Result<PairCounts> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let n = self.len();
        let mut c = PairCounts::default();
        for i in 0..n {
            let x = self.letters[i];
            let y = self.letters[(i + 1) % n];
            if x == y {
                if x.is_a_type() {
                    c.n_aa += 1;
                } else {
                    c.n_bb += 1;
                }
                continue;
            }
            use Letter::*;
            match (x, y) {
                // ab and its inverse b̄ā
                (A, B) | (BInv, AInv) => c.n_ab += 1,
                // ab̄ and its inverse bā
                (A, BInv) | (B, AInv) => c.n_a_binv += 1,
                _ => {}
            }
        }
        Ok(c)
    }

    /// `λ(w)`: the longest cyclic run of one letter.
    pub fn longest_run(&self) -> usize {
        let n = self.len();
        if n == 0 {
            return 0;
        }
        let first = self.letters[0];
        if self.letters.iter().all(|&l| l == first) {
            return n;
        }
        // Start scanning just after a run boundary so no run straddles the end.
        let start = (0..n).find(|&i| self.letters[i] != self.letters[(i + n - 1) % n]).unwrap_or(0);
        let mut best = 0;
        let mut run = 0;
        let mut prev = None;
        for k in 0..n {
            let l = self.letters[(start + k) % n];
            if Some(l) == prev {
                run += 1;
            } else {
                run = 1;
                prev = Some(l);
            }
            best = best.max(run);
        }
        best
    }

    pub fn is_alternating(&self) -> bool {
        self.longest_run() == 1
    }

    /// `(x)_w`: positions holding `x` or `x̄`.
    pub fn letter_count(&self, x: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == x || l == x.inverse()).count()
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

impl FromStr for CyclicWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CyclicWord::parse(s)
    }
}

impl From<&Word> for CyclicWord {
    fn from(w: &Word) -> Self {
        CyclicWord::from_word(w)
    }
}

impl Serialize for CyclicWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CyclicWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        CyclicWord::parse(&text).map_err(serde::de::Error::custom)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
