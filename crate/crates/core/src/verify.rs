//! Cross-checks of every counting route, the bijection, and the orbit partition
//! for a single `(p, n)`.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{canonicalize, is_canonical, Prime, VectorPair};
use crate::bijection::{vector_to_word, word_to_orbit, word_to_vector};
use crate::formulas::{r_closed, r_recursive};
use crate::language::{count_words, enumerate_words, is_word_letters};
use crate::orbits::{count_canonical_census, enumerate_orbits, partition, state_count};
use crate::BigCount;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Needs a full sweep of the state space, which exceeds the budget.
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    /// Counterexample on failure, reason when skipped.
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseReport {
    pub p: Prime,
    pub n: usize,
    /// `r(p, n)` from the closed form, when it could be evaluated.
    pub value: Option<BigCount>,
    pub checks: Vec<Check>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }
}

type Outcome = std::result::Result<(), String>;

fn check(name: &'static str, outcome: Outcome) -> Check {
    match outcome {
        Ok(()) => Check {
            name,
            status: Status::Pass,
            detail: None,
        },
        Err(e) => Check {
            name,
            status: Status::Fail,
            detail: Some(e),
        },
    }
}

fn skipped(name: &'static str, states: &str, budget: u64) -> Check {
    Check {
        name,
        status: Status::Skipped,
        detail: Some(format!("{states} vectors exceed budget {budget}")),
    }
}

/// Runs every check for `(p, n)`. Checks that sweep all `p^{2n}` vectors or all
/// `p^{2n}` letter sequences are skipped beyond `budget`.
pub fn verify_case(p: Prime, n: usize, budget: u64) -> CaseReport {
    let states = state_count(p, n).filter(|&s| s <= budget);
    let states_text = state_count(p, n)
        .map(|s| s.to_string())
        .unwrap_or_else(|| format!("{p}^{}", 2 * n));
    let value = r_closed(p, n).ok();
    let mut checks = vec![check("counts", check_counts(p, n, budget))];
    checks.push(check("word_order", check_word_order(p, n)));
    checks.push(check("range", check_range(p, n)));
    match states {
        Some(states) => {
            checks.push(check("membership", check_membership(p, n, states)));
            checks.push(check("roundtrip", check_roundtrips(p, n, states)));
            checks.push(check("partition", check_partition(p, n, budget)));
        }
        None => {
            for name in ["membership", "roundtrip", "partition"] {
                checks.push(skipped(name, &states_text, budget));
            }
        }
    }
    CaseReport {
        p,
        n,
        value,
        checks,
    }
}

fn check_counts(p: Prime, n: usize, budget: u64) -> Outcome {
    let closed = r_closed(p, n).map_err(|e| e.to_string())?;
    let mut routes: Vec<(&str, BigCount)> = vec![
        ("r_recursive", r_recursive(p, n)),
        ("count_words", count_words(p, n)),
        ("census", count_canonical_census(p, n)),
    ];
    // Streams are only walked when they are no larger than the budget.
    if closed <= BigCount::from(budget) {
        routes.push(("word_stream", BigCount::from(enumerate_words(p, n).count())));
        routes.push((
            "orbit_stream",
            BigCount::from(enumerate_orbits(p, n).count()),
        ));
    }
    if state_count(p, n).is_some_and(|s| s <= budget) {
        let orbits = partition(p, n, budget).map_err(|e| e.to_string())?;
        routes.push(("bruteforce", BigCount::from(orbits.len())));
    }
    for (name, value) in routes {
        if value != closed {
            return Err(format!("{name} = {value} but r_closed = {closed}"));
        }
    }
    Ok(())
}

fn check_word_order(p: Prime, n: usize) -> Outcome {
    let mut words = enumerate_words(p, n).take(100_000);
    let Some(mut prev) = words.next() else {
        return Err("empty word stream".into());
    };
    for w in words {
        if w.letters() <= prev.letters() {
            return Err(format!("stream not increasing: {prev} then {w}"));
        }
        prev = w;
    }
    Ok(())
}

/// Images of the words are exactly the streamed normal forms, in bounded prefix.
fn check_range(p: Prime, n: usize) -> Outcome {
    const LIMIT: usize = 200_000;
    if r_closed(p, n).map_or(true, |r| r > BigCount::from(LIMIT)) {
        return Ok(());
    }
    let images: BTreeSet<VectorPair> = enumerate_words(p, n)
        .map(|w| word_to_vector(&w).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let forms: BTreeSet<VectorPair> = enumerate_orbits(p, n).map(|c| c.into_inner()).collect();
    if let Some(x) = images.symmetric_difference(&forms).next() {
        return Err(format!("{x} is in only one of word images / normal forms"));
    }
    if let Some(x) = images.iter().find(|x| !is_canonical(x)) {
        return Err(format!("word image {x} is not a normal form"));
    }
    Ok(())
}

/// Filtering all `p^{2n}` letter sequences gives exactly the word stream.
fn check_membership(p: Prime, n: usize, states: u64) -> Outcome {
    let alphabet = u64::from(p.alphabet_size());
    let mut stream = enumerate_words(p, n);
    let mut letters = vec![0u32; n];
    for mut idx in 0..states {
        for slot in letters.iter_mut().rev() {
            *slot = (idx % alphabet) as u32;
            idx /= alphabet;
        }
        if is_word_letters(p, &letters).map_err(|e| e.to_string())? {
            match stream.next() {
                Some(w) if w.letters() == letters.as_slice() => {}
                Some(w) => return Err(format!("filter found {letters:?}, stream gave {w}")),
                None => return Err(format!("filter found {letters:?}, stream ended")),
            }
        }
    }
    if let Some(w) = stream.next() {
        return Err(format!("stream yields {w}, rejected by the filter"));
    }
    Ok(())
}

fn check_roundtrips(p: Prime, n: usize, states: u64) -> Outcome {
    for w in enumerate_words(p, n) {
        let x = word_to_vector(&w).map_err(|e| e.to_string())?;
        let back = vector_to_word(&x);
        if back != w {
            return Err(format!("word {w} -> {x} -> {back}"));
        }
    }
    for idx in 0..states {
        let x = VectorPair::from_state_index(p, n, idx);
        let w = vector_to_word(&x);
        let orbit = word_to_orbit(&w).map_err(|e| format!("{x} -> {w}: {e}"))?;
        if orbit != canonicalize(&x) {
            return Err(format!(
                "{x} -> {w} -> {orbit}, normal form {}",
                canonicalize(&x)
            ));
        }
    }
    Ok(())
}

fn check_partition(p: Prime, n: usize, budget: u64) -> Outcome {
    let orbits = partition(p, n, budget).map_err(|e| e.to_string())?;
    let order = p.sl2_order();
    let mut reps = BTreeSet::new();
    for o in &orbits {
        if !order.is_multiple_of(o.size()) {
            return Err(format!(
                "orbit of {} has size {} not dividing {order}",
                o.representative(),
                o.size()
            ));
        }
        if !reps.insert(o.representative().clone()) {
            return Err(format!("normal form {} seen twice", o.representative()));
        }
    }
    let forms: BTreeSet<_> = enumerate_orbits(p, n).collect();
    if reps != forms {
        return Err("partition representatives differ from the normal-form stream".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_pass() {
        for (q, n) in [(2, 0), (2, 1), (2, 3), (3, 2), (5, 1)] {
            let report = verify_case(Prime::new(q).unwrap(), n, 1_000_000);
            assert!(report.passed(), "{report:?}");
            assert!(report.checks.iter().all(|c| c.status == Status::Pass));
        }
    }

    #[test]
    fn sweeps_are_skipped_beyond_budget() {
        let report = verify_case(Prime::new(3).unwrap(), 3, 100);
        assert!(report.passed());
        let skipped: Vec<_> = report
            .checks
            .iter()
            .filter(|c| c.status == Status::Skipped)
            .map(|c| c.name)
            .collect();
        assert_eq!(skipped, ["membership", "roundtrip", "partition"]);
    }
}
