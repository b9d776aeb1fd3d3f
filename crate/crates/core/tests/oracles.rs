//! Word calculus checked against brute-force oracles that share no code
//! with the library: repeated pair deletion, sorted rotations, position-by-
//! position matching, doubled-string run scans and filtering all 4ⁿ strings.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rootwords::{CyclicWord, CyclicWords, Letter, Word};

fn chars(s: &str) -> Vec<char> {
    s.chars().collect()
}

fn inv(c: char) -> char {
    match c {
        'a' => 'A',
        'A' => 'a',
        'b' => 'B',
        'B' => 'b',
        _ => unreachable!(),
    }
}

/// Deletes the first adjacent inverse pair until none remain.
fn reduce_by_deletion(mut s: Vec<char>) -> String {
    loop {
        match (0..s.len().saturating_sub(1)).find(|&i| s[i + 1] == inv(s[i])) {
            Some(i) => {
                s.drain(i..i + 2);
            }
            None => return s.into_iter().collect(),
        }
    }
}

/// Same, but always deletes the last pair found.
fn reduce_by_deletion_rev(mut s: Vec<char>) -> String {
    loop {
        match (0..s.len().saturating_sub(1)).rev().find(|&i| s[i + 1] == inv(s[i])) {
            Some(i) => {
                s.drain(i..i + 2);
            }
            None => return s.into_iter().collect(),
        }
    }
}

fn rank(c: char) -> u8 {
    "abAB".find(c).unwrap() as u8
}

fn least_rotation_by_sorting(s: &[char]) -> String {
    let n = s.len();
    (0..n.max(1))
        .map(|i| (0..n).map(|k| s[(i + k) % n]).collect::<Vec<char>>())
        .min_by_key(|r| r.iter().map(|&c| rank(c)).collect::<Vec<u8>>())
        .unwrap_or_default()
        .into_iter()
        .collect()
}

fn cyclic_reduce_oracle(s: &str) -> String {
    let mut r = chars(&reduce_by_deletion(chars(s)));
    while r.len() >= 2 && r[r.len() - 1] == inv(r[0]) {
        r.pop();
        r.remove(0);
    }
    least_rotation_by_sorting(&r)
}

fn scan_count(w: &str, pattern: &str) -> usize {
    let w = chars(w);
    let p = chars(pattern);
    let pinv: Vec<char> = p.iter().rev().map(|&c| inv(c)).collect();
    let n = w.len();
    let at = |i: usize, pat: &[char]| pat.iter().enumerate().all(|(k, &c)| w[(i + k) % n] == c);
    (0..n).filter(|&i| at(i, &p) || at(i, &pinv)).count()
}

fn run_by_doubling(w: &str) -> usize {
    let n = w.len();
    if n == 0 {
        return 0;
    }
    let doubled = chars(&w.repeat(2));
    let mut best = 1;
    let mut run = 1;
    for i in 1..doubled.len() {
        run = if doubled[i] == doubled[i - 1] { run + 1 } else { 1 };
        best = best.max(run);
    }
    best.min(n)
}

fn all_strings(n: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|s| "abAB".chars().map(move |c| format!("{s}{c}"))).collect();
    }
    out
}

fn is_cyclically_reduced_str(s: &str) -> bool {
    let c = chars(s);
    let n = c.len();
    (0..n).all(|i| n < 2 || c[(i + 1) % n] != inv(c[i]))
}

fn random_string(rng: &mut impl Rng, len: usize) -> String {
    (0..len).map(|_| ['a', 'b', 'A', 'B'][rng.gen_range(0..4)]).collect()
}

fn random_cyclic(rng: &mut impl Rng, len: usize) -> CyclicWord {
    loop {
        let w = CyclicWord::parse(&random_string(rng, len)).unwrap();
        if !w.is_empty() {
            return w;
        }
    }
}

#[test]
fn free_reduction_examples() {
    assert_eq!(Word::parse("AbAbabba").unwrap().to_string(), reduce_by_deletion(chars("AbAbabba")));
    assert_eq!(Word::parse("abBAa").unwrap().to_string(), "a");
    assert_eq!(reduce_by_deletion(chars("abBAa")), "a");
}

#[test]
fn canonical_rotation_of_all_rotations() {
    let w: Vec<Letter> = Word::parse("aabbAAbb").unwrap().letters().to_vec();
    let mut forms = std::collections::BTreeSet::new();
    for i in 0..w.len() {
        let mut r = w.clone();
        r.rotate_left(i);
        forms.insert(CyclicWord::canonical_rotation(&r).unwrap());
    }
    assert_eq!(forms.len(), 1);
    assert_eq!(forms.first().unwrap().to_string(), least_rotation_by_sorting(&chars("aabbAAbb")));
}

#[test]
fn subword_count_by_position_scan() {
    let w = CyclicWord::parse("aabbAAbb").unwrap();
    for p in ["aB", "ab", "aa", "bb", "bA", "abb", "bAA", "aabbA"] {
        let expected = scan_count(&w.to_string(), p);
        assert_eq!(w.subword_count(&Word::parse(p).unwrap()).unwrap(), expected, "{p}");
    }
    // the only match is the inverse bA at position 3
    assert_eq!(scan_count("aabbAAbb", "aB"), 1);
}

#[test]
fn longest_run_by_doubling() {
    for s in ["abbbAbbb", "bbab", "bbaBbbbab", "aaaBBAbaB", "a", "abAB"] {
        let w = CyclicWord::parse(s).unwrap();
        assert_eq!(w.longest_run(), run_by_doubling(&w.to_string()), "{s}");
    }
}

#[test]
fn generator_matches_filtered_strings() {
    for n in 0..=8 {
        let mut expected: Vec<String> = all_strings(n)
            .into_iter()
            .filter(|s| is_cyclically_reduced_str(s) && least_rotation_by_sorting(&chars(s)) == *s)
            .collect();
        expected.sort_by_key(|s| s.chars().map(rank).collect::<Vec<u8>>());
        let streamed: Vec<String> = CyclicWords::new(n).map(|w| w.to_string()).collect();
        assert_eq!(streamed, expected, "length {n}");
    }
}

#[test]
fn generator_strictly_increasing() {
    for n in [6, 9, 11] {
        let words: Vec<CyclicWord> = CyclicWords::new(n).collect();
        assert!(words.windows(2).all(|p| p[0] < p[1]));
        assert!(words.iter().all(|w| w.len() == n));
    }
}

#[test]
fn exhaustive_balance_and_sum() {
    let pairs: Vec<(char, char)> = "abAB"
        .chars()
        .flat_map(|x| "abAB".chars().map(move |y| (x, y)))
        .filter(|&(x, y)| y != x && y != inv(x))
        .collect();
    for n in 2..=10 {
        for w in CyclicWords::new(n) {
            let s = w.to_string();
            for &(x, y) in &pairs {
                assert_eq!(scan_count(&s, &format!("{x}{y}")), scan_count(&s, &format!("{y}{x}")), "{s}");
            }
            let p = w.profile().unwrap();
            assert_eq!(p.weighted_total(), n, "{s}");
            assert_eq!(p.n_aa, scan_count(&s, "aa"));
            assert_eq!(p.n_bb, scan_count(&s, "bb"));
            assert_eq!(p.n_ab, scan_count(&s, "ab"));
            assert_eq!(p.n_a_binv, scan_count(&s, "aB"));
        }
    }
}

#[test]
fn random_long_words_balance() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let len = rng.gen_range(11..=40);
        let w = random_cyclic(&mut rng, len);
        assert!(rootwords::verify::pair_balance_holds(&w), "{w}");
        assert_eq!(w.profile().unwrap().weighted_total(), w.len(), "{w}");
    }
}

proptest! {
    #[test]
    fn free_reduction_is_confluent(s in "[abAB]{0,24}") {
        let lib = Word::parse(&s).unwrap().to_string();
        prop_assert_eq!(&lib, &reduce_by_deletion(chars(&s)));
        prop_assert_eq!(&lib, &reduce_by_deletion_rev(chars(&s)));
        prop_assert_eq!(lib.len() % 2, s.len() % 2);
        prop_assert_eq!(Word::parse(&lib).unwrap().to_string(), lib);
    }

    #[test]
    fn cyclic_reduction_matches_oracle(s in "[abAB]{0,20}") {
        prop_assert_eq!(CyclicWord::parse(&s).unwrap().to_string(), cyclic_reduce_oracle(&s));
    }

    #[test]
    fn conjugation_invariance(w in "[abAB]{0,16}", u in "[abAB]{0,6}") {
        let w = Word::parse(&w).unwrap();
        let u = Word::parse(&u).unwrap();
        prop_assert_eq!(w.conjugate_by(&u).cyclic_reduce(), w.cyclic_reduce());
    }

    #[test]
    fn rotation_invariance(s in "[abAB]{1,16}", k in 0usize..16) {
        let w = CyclicWord::parse(&s).unwrap();
        let r = w.rotation(k);
        prop_assert_eq!(CyclicWord::canonical_rotation(&r).unwrap(), w);
    }

    #[test]
    fn counts_symmetric_under_inversion(s in "[abAB]{3,20}", p in "[abAB]{1,3}") {
        let w = CyclicWord::parse(&s).unwrap();
        let pattern = Word::parse(&p).unwrap();
        prop_assume!(!pattern.is_empty() && pattern.len() <= w.len());
        prop_assert_eq!(
            w.subword_count(&pattern).unwrap(),
            w.subword_count(&pattern.inverse()).unwrap()
        );
        prop_assert_eq!(w.subword_count(&pattern).unwrap(), scan_count(&w.to_string(), &pattern.to_string()));
    }
}
