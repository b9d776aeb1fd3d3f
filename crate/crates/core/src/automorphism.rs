//! Automorphisms of F₂ that act on words letter by letter.
//!
//! Two families are represented:
//!
//! * [`Permutation`]: a bijection of `{a, b, ā, b̄}` commuting with inversion.
//!   There are exactly eight.
//! * [`WhiteheadAuto`] `(A, x)`: sends each letter `y` to
//!   `x̄^[ȳ ∈ A] · y · x^[y ∈ A]`, with `x, x̄ ∉ A`.
//!
//! Words are rewritten letterwise and then freely reduced; cyclic words are
//! additionally cyclically reduced and put back in canonical rotation.
//!
//! Token syntax, used in reduction traces:
//!
//! ```text
//! perm:a-><l>,b-><l>        images of a and b; images of A and B follow
//! wh:{<l>[,<l>]}*<l>        marked set, then the multiplier
//! ```
//!
//! where `<l>` is one of `a b A B`, e.g. `perm:a->b,b->a` or `wh:{a}*B`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{CyclicWord, Letter, Word};

/// A type I automorphism: a permutation of the four letters that commutes
/// with inversion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: [Letter; 4],
}

impl Permutation {
    pub const IDENTITY: Permutation =
        Permutation { image: [Letter::A, Letter::B, Letter::AInv, Letter::BInv] };

    /// The permutation determined by the images of `a` and `b`.
    pub fn new(image_a: Letter, image_b: Letter) -> Result<Self> {
        if image_b == image_a || image_b == image_a.inverse() {
            return Err(Error::InvalidAutomorphism(format!(
                "a->{image_a}, b->{image_b} is not a bijection"
            )));
        }
        Ok(Permutation { image: [image_a, image_b, image_a.inverse(), image_b.inverse()] })
    }

    /// Validates an arbitrary map given as images of `a, b, ā, b̄`.
    pub fn from_images(image: [Letter; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        for l in image {
            seen[l.index() as usize] = true;
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::InvalidAutomorphism("map is not a bijection".into()));
        }
        if Letter::ALL.iter().any(|&y| image[y.inverse().index() as usize] != image[y.index() as usize].inverse())
        {
            return Err(Error::InvalidAutomorphism("map does not commute with inversion".into()));
        }
        Ok(Permutation { image })
    }

    #[inline]
    pub fn apply_letter(&self, l: Letter) -> Letter {
        self.image[l.index() as usize]
    }

    pub fn images(&self) -> [Letter; 4] {
        self.image
    }

    pub fn apply_word(&self, w: &Word) -> Word {
        Word::free_reduce(w.letters().iter().map(|&l| self.apply_letter(l)))
    }

    pub fn apply_cyclic(&self, w: &CyclicWord) -> CyclicWord {
        CyclicWord::from_letters(w.letters().iter().map(|&l| self.apply_letter(l)))
    }
}

/// All eight permutations, ordered by the images of `a` then `b`.
pub fn all_permutations() -> Vec<Permutation> {
    let mut out = Vec::with_capacity(8);
    for ia in Letter::ALL {
        for ib in Letter::ALL {
            if let Ok(p) = Permutation::new(ia, ib) {
                out.push(p);
            }
        }
    }
    out
}

/// A type II (Whitehead) automorphism `(A, x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WhiteheadAuto {
    multiplier: Letter,
    // bit i set when Letter::from_index(i) is marked
    marked: u8,
}

impl WhiteheadAuto {
    pub fn new(marked: &[Letter], multiplier: Letter) -> Result<Self> {
        let mut mask = 0u8;
        for &l in marked {
            if l == multiplier || l == multiplier.inverse() {
                return Err(Error::InvalidAutomorphism(format!(
                    "multiplier {multiplier} or its inverse is in the marked set"
                )));
            }
            mask |= 1 << l.index();
        }
        Ok(WhiteheadAuto { multiplier, marked: mask })
    }

    /// `({y}, x)`; requires `x ∉ {y, ȳ}`.
    pub fn one_letter(y: Letter, x: Letter) -> Result<Self> {
        WhiteheadAuto::new(&[y], x)
    }

    pub fn multiplier(&self) -> Letter {
        self.multiplier
    }

    pub fn marked(&self) -> Vec<Letter> {
        Letter::ALL.into_iter().filter(|&l| self.is_marked(l)).collect()
    }

    #[inline]
    pub fn is_marked(&self, l: Letter) -> bool {
        self.marked & (1 << l.index()) != 0
    }

    pub fn is_one_letter(&self) -> bool {
        self.marked.count_ones() == 1
    }

    /// The single marked letter of a one-letter automorphism.
    pub fn marked_letter(&self) -> Option<Letter> {
        self.is_one_letter().then(|| self.marked()[0])
    }

    fn push_image(&self, y: Letter, out: &mut Vec<Letter>) {
        let x = self.multiplier;
        if self.is_marked(y.inverse()) {
            out.push(x.inverse());
        }
        out.push(y);
        if self.is_marked(y) {
            out.push(x);
        }
    }

    /// Image of a single letter, at most three letters long.
    pub fn image(&self, y: Letter) -> Word {
        let mut out = Vec::with_capacity(3);
        self.push_image(y, &mut out);
        Word::free_reduce(out)
    }

    fn substitute(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut out = Vec::with_capacity(letters.len() * 2);
        for &y in letters {
            self.push_image(y, &mut out);
        }
        out
    }

    pub fn apply_word(&self, w: &Word) -> Word {
        Word::free_reduce(self.substitute(w.letters()))
    }

    pub fn apply_cyclic(&self, w: &CyclicWord) -> CyclicWord {
        CyclicWord::from_letters(self.substitute(w.letters()))
    }
}

/// The four one-letter automorphisms that suffice for testing minimality,
/// in this fixed order: `({a},b)`, `({a},b̄)`, `({b},a)`, `({b},ā)`.
///
/// On cyclic words the other four one-letter automorphisms add nothing:
/// `({y},x) = ({y,ȳ},x)·({ȳ},x̄)` and `({y,ȳ},x)` is conjugation.
pub fn one_letter_representatives() -> [WhiteheadAuto; 4] {
    use Letter::*;
    [
        WhiteheadAuto { multiplier: B, marked: 1 << A.index() },
        WhiteheadAuto { multiplier: BInv, marked: 1 << A.index() },
        WhiteheadAuto { multiplier: A, marked: 1 << B.index() },
        WhiteheadAuto { multiplier: AInv, marked: 1 << B.index() },
    ]
}

/// All eight one-letter automorphisms `({y}, x)`.
pub fn all_one_letter() -> Vec<WhiteheadAuto> {
    let mut out = Vec::with_capacity(8);
    for y in Letter::ALL {
        for x in Letter::ALL {
            if let Ok(s) = WhiteheadAuto::one_letter(y, x) {
                out.push(s);
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Automorphism {
    Permutation(Permutation),
    Whitehead(WhiteheadAuto),
}

impl Automorphism {
    pub fn apply_word(&self, w: &Word) -> Word {
        match self {
            Automorphism::Permutation(p) => p.apply_word(w),
            Automorphism::Whitehead(s) => s.apply_word(w),
        }
    }

    pub fn apply_cyclic(&self, w: &CyclicWord) -> CyclicWord {
        match self {
            Automorphism::Permutation(p) => p.apply_cyclic(w),
            Automorphism::Whitehead(s) => s.apply_cyclic(w),
        }
    }
}

impl From<Permutation> for Automorphism {
    fn from(p: Permutation) -> Self {
        Automorphism::Permutation(p)
    }
}

impl From<WhiteheadAuto> for Automorphism {
    fn from(s: WhiteheadAuto) -> Self {
        Automorphism::Whitehead(s)
    }
}

/// True when `s` preserves the cyclic length of `w`.
pub fn is_level(s: &Automorphism, w: &CyclicWord) -> bool {
    s.apply_cyclic(w).len() == w.len()
}

fn one_letter_parts(s: &WhiteheadAuto) -> Result<(Letter, Letter)> {
    let y = s
        .marked_letter()
        .ok_or_else(|| Error::InvalidAutomorphism("expected a one-letter automorphism".into()))?;
    Ok((y, s.multiplier()))
}

/// Level test for `({y}, x)` from counts alone: `(yx̄) = (yx) + (yy)`.
pub fn is_level_by_counts(s: &WhiteheadAuto, w: &CyclicWord) -> Result<bool> {
    let (y, x) = one_letter_parts(s)?;
    let c = |p: &[Letter]| w.count_wrapping(p);
    Ok(c(&[y, x.inverse()]) == c(&[y, x]) + c(&[y, y]))
}

/// The counts `(yy)`, `(yx)`, `(yx̄)`, `(xx)` relative to a one-letter
/// automorphism `({y}, x)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct CountUpdate {
    pub yy: i64,
    pub yx: i64,
    pub y_xinv: i64,
    pub xx: i64,
}

impl CountUpdate {
    /// Counts measured directly on `v`.
    pub fn measure(s: &WhiteheadAuto, v: &CyclicWord) -> Result<Self> {
        let (y, x) = one_letter_parts(s)?;
        let c = |p: &[Letter]| v.count_wrapping(p) as i64;
        Ok(CountUpdate {
            yy: c(&[y, y]),
            yx: c(&[y, x]),
            y_xinv: c(&[y, x.inverse()]),
            xx: c(&[x, x]),
        })
    }
}

/// Predicts the counts of `({y},x)(w)` from two- and three-letter counts of
/// `w`, without applying the automorphism.
pub fn predict_profile(s: &WhiteheadAuto, w: &CyclicWord) -> Result<CountUpdate> {
    let (y, x) = one_letter_parts(s)?;
    let (yi, xi) = (y.inverse(), x.inverse());
    let c = |p: &[Letter]| w.count_wrapping(p) as i64;
    let y_xinv_y = c(&[y, xi, y]);
    Ok(CountUpdate {
        yy: y_xinv_y,
        yx: c(&[y, x]) + c(&[y, y]),
        y_xinv: c(&[y, xi]) - y_xinv_y,
        xx: c(&[y, x]) - c(&[y, x, yi]) + c(&[x, x]) - c(&[y, xi, xi]),
    })
}

fn parse_letter_token(s: &str, whole: &str) -> Result<Letter> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Letter::from_char(c).ok_or_else(|| Error::AutomorphismSyntax(whole.into())),
        _ => Err(Error::AutomorphismSyntax(whole.into())),
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "perm:a->{},b->{}", self.image[0], self.image[1])
    }
}

impl fmt::Display for WhiteheadAuto {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let marked: Vec<String> = self.marked().iter().map(|l| l.to_string()).collect();
        write!(f, "wh:{{{}}}*{}", marked.join(","), self.multiplier)
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Automorphism::Permutation(p) => p.fmt(f),
            Automorphism::Whitehead(s) => s.fmt(f),
        }
    }
}

impl FromStr for Automorphism {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::AutomorphismSyntax(text.into());
        if let Some(rest) = text.strip_prefix("perm:") {
            let (ia, ib) = rest.split_once(',').ok_or_else(bad)?;
            let ia = ia.strip_prefix("a->").ok_or_else(bad)?;
            let ib = ib.strip_prefix("b->").ok_or_else(bad)?;
            let p = Permutation::new(parse_letter_token(ia, text)?, parse_letter_token(ib, text)?)?;
            return Ok(p.into());
        }
        if let Some(rest) = text.strip_prefix("wh:{") {
            let (set, mult) = rest.split_once("}*").ok_or_else(bad)?;
            let marked = if set.is_empty() {
                Vec::new()
            } else {
                set.split(',').map(|t| parse_letter_token(t, text)).collect::<Result<Vec<_>>>()?
            };
            return Ok(WhiteheadAuto::new(&marked, parse_letter_token(mult, text)?)?.into());
        }
        Err(bad())
    }
}
