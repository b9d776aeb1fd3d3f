//! Acceptance criteria. Runs as a plain binary (no libtest harness) and
//! prints one PASS/FAIL line per criterion; exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rootwords::enumeration::partition_into_classes;
use rootwords::verify::{
    alternating_triad_holds, children_minimal_holds, count_update_holds, extremal_root, pair_balance_holds,
    pair_sum_holds, powers_hold,
};
use rootwords::{
    census, is_minimal, is_minimal_oracle, is_root, is_root_oracle, minimal_class, minimize, one_letter_representatives,
    parents, predict_profile, verify_root_class, CountUpdate, CyclicWord, CyclicWords, Letter,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cw(s: &str) -> CyclicWord {
    CyclicWord::parse(s).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Outcome {
    let took = start.elapsed();
    ensure(took <= budget, || format!("took {took:?}, budget {budget:?}"))
}

fn words_up_to(max_len: usize) -> impl Iterator<Item = CyclicWord> {
    (1..=max_len).flat_map(CyclicWords::new)
}

fn random_cyclic(rng: &mut StdRng, max_len: usize) -> CyclicWord {
    loop {
        let len = rng.gen_range(1..=max_len);
        let s: String = (0..len).map(|_| ['a', 'b', 'A', 'B'][rng.gen_range(0..4)]).collect();
        let w = cw(&s);
        if !w.is_empty() {
            return w;
        }
    }
}

/// 1. Point fixtures from the worked examples.
fn point_fixtures() -> Outcome {
    let start = Instant::now();
    let (m, trace) = minimize(&cw("bA"));
    ensure(m.len() == 1 && trace.steps.len() == 1, || format!("minimize(bA) = {m}"))?;
    for w in ["abb", "aab"] {
        ensure(!is_minimal(&cw(w)), || format!("{w} reported minimal"))?;
    }
    for w in ["aabb", "abAB", "abaB"] {
        ensure(is_root(&cw(w)), || format!("{w} not reported root"))?;
    }
    let p = cw("aaaBBAbaB").profile().unwrap();
    ensure((p.n_aa, p.n_bb, p.n_ab, p.n_a_binv) == (2, 1, 1, 2), || format!("profile {p:?}"))?;
    ensure(cw("aaaBBAbaB").longest_run() == 3, || "lambda != 3".into())?;
    let expected: BTreeSet<CyclicWord> = ["abbAAbb", "aabAAbb", "aabbAbb", "aabbAAb"].iter().map(|w| cw(w)).collect();
    ensure(parents(&cw("aabbAAbb")) == expected, || "parents of aabbAAbb differ".into())?;
    within(start, Duration::from_secs(1))
}

/// 2. Count tests agree with direct-application oracles up to length 12.
fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    for w in words_up_to(12) {
        n += 1;
        ensure(is_minimal(&w) == is_minimal_oracle(&w), || format!("minimality disagrees on {w}"))?;
        ensure(is_root(&w) == is_root_oracle(&w), || format!("root test disagrees on {w}"))?;
    }
    ensure(n == 69_996, || format!("corpus size {n}"))?;
    within(start, Duration::from_secs(120))
}

/// 3. Roots only at multiples of four up to 16; extremal witnesses at each.
fn divisibility_by_four() -> Outcome {
    let start = Instant::now();
    let records = census(16, 4).map_err(|e| e.to_string())?;
    for r in &records {
        if r.length % 4 != 0 {
            ensure(r.root_count == 0, || format!("{} roots at length {}", r.root_count, r.length))?;
        } else {
            ensure(r.root_count >= 1, || format!("no roots at length {}", r.length))?;
        }
        ensure(r.invariants_hold(), || format!("record invariants fail at {}", r.length))?;
    }
    for n in 1..=4 {
        let w = extremal_root(n);
        ensure(w.len() == 4 * n && is_root(&w), || format!("{w} is not a root"))?;
        ensure(w.longest_run() == w.len() / 4 + 1, || format!("lambda({w}) = {}", w.longest_run()))?;
    }
    within(start, Duration::from_secs(300))
}

/// 4. Count-update predictions match the measured image.
fn count_updates() -> Outcome {
    for w in words_up_to(10) {
        ensure(count_update_holds(&w), || format!("prediction fails on {w}"))?;
    }
    let mut rng = StdRng::seed_from_u64(0xacce);
    for _ in 0..10_000 {
        let w = random_cyclic(&mut rng, 40);
        for s in one_letter_representatives() {
            let predicted = predict_profile(&s, &w).unwrap();
            let measured = CountUpdate::measure(&s, &s.apply_cyclic(&w)).unwrap();
            ensure(predicted == measured, || format!("{s} on {w}: {predicted:?} vs {measured:?}"))?;
        }
    }
    Ok(())
}

/// 5. Two-letter balance and the weighted pair sum.
fn balance_and_sum() -> Outcome {
    for w in words_up_to(10) {
        ensure(pair_balance_holds(&w), || format!("balance fails on {w}"))?;
        ensure(pair_sum_holds(&w), || format!("pair sum fails on {w}"))?;
    }
    let mut rng = StdRng::seed_from_u64(0xba1);
    for _ in 0..10_000 {
        let w = random_cyclic(&mut rng, 40);
        ensure(pair_balance_holds(&w) && pair_sum_holds(&w), || format!("fails on {w}"))?;
    }
    Ok(())
}

/// 6. Root classes are uniformly root; level one-letter images of roots are roots.
fn root_class_closure() -> Outcome {
    let start = Instant::now();
    for n in 1..=12 {
        let roots: Vec<CyclicWord> = CyclicWords::new(n).filter(is_root).collect();
        for class in partition_into_classes(&roots).map_err(|e| e.to_string())? {
            ensure(class.is_root_class && verify_root_class(&class), || {
                format!("class of {} not uniform", class.representative())
            })?;
        }
        for w in &roots {
            for s in one_letter_representatives() {
                let v = s.apply_cyclic(w);
                ensure(v.len() != w.len() || is_root(&v), || format!("{s} maps root {w} to non-root {v}"))?;
            }
            let class = minimal_class(w).map_err(|e| e.to_string())?;
            ensure(class.contains(w), || format!("{w} missing from its class"))?;
        }
    }
    within(start, Duration::from_secs(120))
}

/// 7. Alternating words: minimal ⇔ root ⇔ all four representatives level.
///
/// Single letters sit outside the statement (children of the empty word);
/// they are checked separately: minimal and alternating but not roots.
fn alternating_triad() -> Outcome {
    let mut corpus = 0;
    for w in words_up_to(14).filter(|w| w.len() >= 2 && w.is_alternating()) {
        corpus += 1;
        ensure(alternating_triad_holds(&w), || format!("triad fails on {w}"))?;
    }
    ensure(corpus > 0, || "empty corpus".into())?;
    let singles: Vec<CyclicWord> = CyclicWords::new(1).collect();
    ensure(singles.len() == 4, || "expected four single letters".into())?;
    for w in &singles {
        ensure(w.is_alternating() && is_minimal(w) && !is_root(w), || format!("single letter {w}"))?;
    }
    Ok(())
}

/// 8. Children of minimal words are minimal; powers; letter balance of roots.
fn growth_properties() -> Outcome {
    for w in words_up_to(10).filter(is_minimal) {
        ensure(children_minimal_holds(&w), || format!("a child of {w} is not minimal"))?;
    }
    for w in words_up_to(8) {
        ensure(powers_hold(&w), || format!("power test fails on {w}"))?;
    }
    for n in (4..=16).step_by(4) {
        for w in CyclicWords::new(n).filter(is_root) {
            ensure(w.letter_count(Letter::A) == w.letter_count(Letter::B), || format!("(a) != (b) on {w}"))?;
        }
    }
    Ok(())
}

/// 9. `census --max-len 12` is byte-identical across runs and thread counts.
fn determinism() -> Outcome {
    let run = |args: &[&str]| -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_rootwords")).args(args).output().map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("{args:?} exited with {:?}", out.status))?;
        Ok(out.stdout)
    };
    let first = run(&["census", "--max-len", "12"])?;
    let second = run(&["census", "--max-len", "12"])?;
    let threaded = run(&["census", "--max-len", "12", "--threads", "4"])?;
    ensure(!first.is_empty(), || "empty output".into())?;
    ensure(first == second, || "two runs differ".into())?;
    ensure(first == threaded, || "--threads 4 output differs".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("point fixtures from worked examples", point_fixtures),
        ("count tests agree with oracles on all words of length <= 12", oracle_equivalence),
        ("roots only at lengths divisible by 4 (census to 16)", divisibility_by_four),
        ("count-update predictions match measured counts", count_updates),
        ("two-letter balance and pair-count sum", balance_and_sum),
        ("root classes uniform; level images of roots are roots", root_class_closure),
        ("alternating triad on alternating words of length 2..=14", alternating_triad),
        ("children, powers and letter balance of roots", growth_properties),
        ("census output deterministic across runs and threads", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS criterion {}: {name} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all {} acceptance criteria passed", criteria.len());
}
